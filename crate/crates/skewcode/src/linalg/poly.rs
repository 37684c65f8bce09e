//! Commutative univariate polynomials over GF(q).

use alloc::vec;
use alloc::vec::Vec;

use super::LinalgError;
use crate::gf::{Felt, Field};

/// A polynomial in `GF(q)[z]`. `coeffs[i]` is the coefficient of `z^i`;
/// trailing zeros are trimmed and the zero polynomial stores no
/// coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Felt>,
}

impl Poly {
    pub fn new(field: &Field, coeffs: &[Felt]) -> Poly {
        let mut c = coeffs.to_vec();
        while c.last() == Some(&Felt(0)) {
            c.pop();
        }
        Poly {
            field: field.clone(),
            coeffs: c,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Self::new(field, &[])
    }

    pub fn one(field: &Field) -> Poly {
        Self::new(field, &[Felt(1)])
    }

    pub fn constant(field: &Field, c: Felt) -> Poly {
        Self::new(field, &[c])
    }

    /// The monomial `c z^k`.
    pub fn monomial(field: &Field, c: Felt, k: usize) -> Poly {
        if c == Felt(0) {
            return Self::zero(field);
        }
        let mut coeffs = vec![Felt(0); k + 1];
        coeffs[k] = c;
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Felt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Felt {
        self.coeffs.get(i).copied().unwrap_or(Felt(0))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Felt {
        self.coeffs.last().copied().unwrap_or(Felt(0))
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Felt(1)
    }

    /// A unit of the ring: a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.field, other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs: Vec<Felt> = (0..n)
            .map(|i| self.field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(&self.field, &coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs: Vec<Felt> = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::new(&self.field, &coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.field, other.field);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![Felt(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == Felt(0) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, &out)
    }

    pub fn mul_scalar(&self, c: Felt) -> Poly {
        let coeffs: Vec<Felt> = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::new(&self.field, &coeffs)
    }

    /// Euclidean division: `(q, r)` with `self = q other + r` and
    /// `deg r < deg other`.
    pub fn divmod(&self, other: &Poly) -> Result<(Poly, Poly), LinalgError> {
        debug_assert_eq!(self.field, other.field);
        if other.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        let f = &self.field;
        let d = other.degree().expect("nonzero divisor");
        let lc_inv = f.inv(other.leading()).expect("nonzero leading coefficient");
        let mut r = self.clone();
        let mut q = Poly::zero(f);
        while let Some(dr) = r.degree() {
            if dr < d {
                break;
            }
            let c = f.mul(r.leading(), lc_inv);
            let term = Poly::monomial(f, c, dr - d);
            q = q.add(&term);
            r = r.sub(&term.mul(other));
        }
        Ok((q, r))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other
            .divmod(self)
            .expect("divisor is nonzero")
            .1
            .is_zero()
    }

    /// Monic unit multiple (the zero polynomial stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let lc_inv = self
            .field
            .inv(self.leading())
            .expect("nonzero leading coefficient");
        self.mul_scalar(lc_inv)
    }

    /// Monic greatest common divisor, with `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divmod(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn evaluate(&self, x: Felt) -> Felt {
        let f = &self.field;
        let mut acc = Felt(0);
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }
}
