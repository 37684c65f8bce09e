//! Skew (Ore) polynomials over a finite field, with the full one-variable
//! Euclidean toolkit.
//!
//! A skew polynomial ring is `L[x; sigma]` for a field automorphism `sigma`:
//! addition is coefficientwise, and the variable does not commute with
//! scalars. Two commutation conventions are in live use and both appear in
//! this crate, so the convention is part of the ring descriptor:
//!
//! * [`Convention::Left`] — `x a = sigma(a) x`; products follow
//!   `(a x^i)(b x^j) = a sigma^i(b) x^(i+j)`. Coefficients are written on
//!   the left of the monomials.
//! * [`Convention::Right`] — `a x = x sigma(a)`; products follow
//!   `(x^i a)(x^j b) = x^(i+j) sigma^j(a) b`. Coefficients are written on
//!   the right.
//!
//! Both conventions store `coeffs[i]` as the coefficient of `x^i`; only the
//! multiplication (and everything derived from it) differs.
//!
//! The ring is a left and right Euclidean domain: division by a nonzero
//! polynomial from either side terminates with a remainder of smaller
//! degree, which yields greatest common right/left divisors and least
//! common left/right multiples. The lclm is extracted from the extended
//! Euclidean cofactor rather than by iterated division, then normalized to
//! be monic.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Felt, Field, FieldAut, GfError};

/// Which side scalars pass the variable on. See the module docs.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Convention {
    /// `x a = sigma(a) x`.
    Left,
    /// `a x = x sigma(a)`.
    Right,
}

/// Side selector for division: `Right` computes `f = q g + r`, `Left`
/// computes `f = g q + r`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Errors from skew-polynomial arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SkewPolyError {
    /// Operands live in different rings (field, automorphism, or convention
    /// differ).
    MixedRings,
    /// Division by the zero polynomial.
    DivisionByZero,
    /// A gcd of two zeros, or an lcm involving a zero.
    ZeroInput,
    /// Right evaluation is only defined for the left convention.
    WrongConvention,
}

impl core::fmt::Display for SkewPolyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SkewPolyError::MixedRings => write!(f, "operands belong to different skew polynomial rings"),
            SkewPolyError::DivisionByZero => write!(f, "division by the zero polynomial"),
            SkewPolyError::ZeroInput => write!(f, "zero polynomial not allowed here"),
            SkewPolyError::WrongConvention => {
                write!(f, "operation requires the left commutation convention")
            }
        }
    }
}

impl core::error::Error for SkewPolyError {}

impl From<GfError> for SkewPolyError {
    fn from(e: GfError) -> Self {
        match e {
            GfError::DivisionByZero => SkewPolyError::DivisionByZero,
            // Field-level errors cannot escape validated ring contexts.
            _ => SkewPolyError::MixedRings,
        }
    }
}

/// A skew polynomial. `coeffs[i]` is the coefficient of `x^i`; trailing
/// zeros are trimmed, and the zero polynomial has an empty coefficient
/// vector.
#[derive(Clone, Debug)]
pub struct SkewPoly {
    field: Field,
    sigma: FieldAut,
    convention: Convention,
    coeffs: Vec<Felt>,
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.sigma == other.sigma
            && self.convention == other.convention
            && self.coeffs == other.coeffs
    }
}

impl SkewPoly {
    pub fn new(field: &Field, sigma: FieldAut, convention: Convention, coeffs: &[Felt]) -> SkewPoly {
        let mut c = coeffs.to_vec();
        while c.last() == Some(&Felt(0)) {
            c.pop();
        }
        SkewPoly {
            field: field.clone(),
            sigma,
            convention,
            coeffs: c,
        }
    }

    pub fn zero(field: &Field, sigma: FieldAut, convention: Convention) -> SkewPoly {
        Self::new(field, sigma, convention, &[])
    }

    pub fn one(field: &Field, sigma: FieldAut, convention: Convention) -> SkewPoly {
        Self::new(field, sigma, convention, &[Felt(1)])
    }

    pub fn constant(field: &Field, sigma: FieldAut, convention: Convention, c: Felt) -> SkewPoly {
        Self::new(field, sigma, convention, &[c])
    }

    /// The monomial `c x^k`.
    pub fn monomial(field: &Field, sigma: FieldAut, convention: Convention, c: Felt, k: usize) -> SkewPoly {
        if c == Felt(0) {
            return Self::zero(field, sigma, convention);
        }
        let mut coeffs = vec![Felt(0); k + 1];
        coeffs[k] = c;
        SkewPoly {
            field: field.clone(),
            sigma,
            convention,
            coeffs,
        }
    }

    /// The linear factor `x - a`.
    pub fn x_minus(field: &Field, sigma: FieldAut, convention: Convention, a: Felt) -> SkewPoly {
        Self::new(field, sigma, convention, &[field.neg(a), Felt(1)])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn sigma(&self) -> FieldAut {
        self.sigma
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn coeffs(&self) -> &[Felt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
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

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> Felt {
        self.coeffs.last().copied().unwrap_or(Felt(0))
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Felt(1)
    }

    fn same_ring(&self, other: &SkewPoly) -> Result<(), SkewPolyError> {
        if self.field == other.field
            && self.sigma == other.sigma
            && self.convention == other.convention
        {
            Ok(())
        } else {
            Err(SkewPolyError::MixedRings)
        }
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly, SkewPolyError> {
        self.same_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs: Vec<Felt> = (0..n)
            .map(|i| self.field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(SkewPoly::new(&self.field, self.sigma, self.convention, &coeffs))
    }

    pub fn neg(&self) -> SkewPoly {
        let coeffs: Vec<Felt> = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        SkewPoly::new(&self.field, self.sigma, self.convention, &coeffs)
    }

    pub fn sub(&self, other: &SkewPoly) -> Result<SkewPoly, SkewPolyError> {
        self.add(&other.neg())
    }

    /// Ring product. Left convention: `out[i+j] += a_i sigma^i(b_j)`;
    /// right convention: `out[i+j] += sigma^j(a_i) b_j`.
    pub fn mul(&self, other: &SkewPoly) -> Result<SkewPoly, SkewPolyError> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SkewPoly::zero(&self.field, self.sigma, self.convention));
        }
        let f = &self.field;
        let (a, b) = (&self.coeffs, &other.coeffs);
        let mut out = vec![Felt(0); a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == Felt(0) {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == Felt(0) {
                    continue;
                }
                let term = match self.convention {
                    Convention::Left => f.mul(ai, self.sigma.pow(f, i as u64).apply(f, bj)),
                    Convention::Right => f.mul(self.sigma.pow(f, j as u64).apply(f, ai), bj),
                };
                out[i + j] = f.add(out[i + j], term);
            }
        }
        Ok(SkewPoly::new(f, self.sigma, self.convention, &out))
    }

    /// Multiply by a scalar on the left of the polynomial.
    pub fn mul_const_left(&self, c: Felt) -> SkewPoly {
        let f = &self.field;
        let coeffs: Vec<Felt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &ai)| match self.convention {
                Convention::Left => f.mul(c, ai),
                Convention::Right => f.mul(self.sigma.pow(f, i as u64).apply(f, c), ai),
            })
            .collect();
        SkewPoly::new(f, self.sigma, self.convention, &coeffs)
    }

    /// Multiply by a scalar on the right of the polynomial.
    pub fn mul_const_right(&self, c: Felt) -> SkewPoly {
        let f = &self.field;
        let coeffs: Vec<Felt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &ai)| match self.convention {
                Convention::Left => f.mul(ai, self.sigma.pow(f, i as u64).apply(f, c)),
                Convention::Right => f.mul(ai, c),
            })
            .collect();
        SkewPoly::new(f, self.sigma, self.convention, &coeffs)
    }

    /// Unit multiple with leading coefficient 1, scaled on the left, so the
    /// left ideal is unchanged: suitable for gcrd/lclm normalization.
    pub fn monic_via_left(&self) -> SkewPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let f = &self.field;
        let n = self.degree().expect("nonzero") as u64;
        let lc_inv = f.inv(self.leading()).expect("leading coefficient is nonzero");
        let c = match self.convention {
            Convention::Left => lc_inv,
            // lc(c f) = sigma^n(c) lc(f) under the right convention.
            Convention::Right => self.sigma.pow(f, n).inverse(f).apply(f, lc_inv),
        };
        self.mul_const_left(c)
    }

    /// Unit multiple with leading coefficient 1, scaled on the right, so the
    /// right ideal is unchanged: suitable for gcld/lcrm normalization.
    pub fn monic_via_right(&self) -> SkewPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let f = &self.field;
        let n = self.degree().expect("nonzero") as u64;
        let lc_inv = f.inv(self.leading()).expect("leading coefficient is nonzero");
        let c = match self.convention {
            // lc(f c) = lc(f) sigma^n(c) under the left convention.
            Convention::Left => self.sigma.pow(f, n).inverse(f).apply(f, lc_inv),
            Convention::Right => lc_inv,
        };
        self.mul_const_right(c)
    }

    /// Apply a field automorphism to every coefficient.
    pub fn map_coeffs(&self, aut: &FieldAut) -> SkewPoly {
        let coeffs: Vec<Felt> = self
            .coeffs
            .iter()
            .map(|&c| aut.apply(&self.field, c))
            .collect();
        SkewPoly::new(&self.field, self.sigma, self.convention, &coeffs)
    }

    /// Euclidean division on the chosen side: `Side::Right` returns `(q, r)`
    /// with `f = q g + r`, `Side::Left` returns `(q, r)` with `f = g q + r`;
    /// in both cases `deg r < deg g`.
    pub fn divide(&self, g: &SkewPoly, side: Side) -> Result<(SkewPoly, SkewPoly), SkewPolyError> {
        self.same_ring(g)?;
        if g.is_zero() {
            return Err(SkewPolyError::DivisionByZero);
        }
        let f = &self.field;
        let d = g.degree().expect("nonzero divisor");
        let g_lc_inv = f.inv(g.leading()).expect("leading coefficient is nonzero");
        let mut r = self.clone();
        let mut q = SkewPoly::zero(f, self.sigma, self.convention);
        while let Some(dr) = r.degree() {
            if dr < d {
                break;
            }
            let k = dr - d;
            // Choose c so that the leading term of (c x^k) g (right
            // division) or g (c x^k) (left division) matches lc(r) x^dr.
            let c = match (self.convention, side) {
                // (c x^k) g has leading c sigma^k(g_d).
                (Convention::Left, Side::Right) => {
                    f.mul(r.leading(), self.sigma.pow(f, k as u64).apply(f, g_lc_inv))
                }
                // g (c x^k) has leading g_d sigma^d(c).
                (Convention::Left, Side::Left) => self
                    .sigma
                    .pow(f, d as u64)
                    .inverse(f)
                    .apply(f, f.mul(g_lc_inv, r.leading())),
                // (x^k c) g has leading sigma^d(c) g_d.
                (Convention::Right, Side::Right) => self
                    .sigma
                    .pow(f, d as u64)
                    .inverse(f)
                    .apply(f, f.mul(r.leading(), g_lc_inv)),
                // g (x^k c) has leading sigma^k(g_d) c.
                (Convention::Right, Side::Left) => {
                    f.mul(self.sigma.pow(f, k as u64).apply(f, g_lc_inv), r.leading())
                }
            };
            let term = SkewPoly::monomial(f, self.sigma, self.convention, c, k);
            let prod = match side {
                Side::Right => term.mul(g)?,
                Side::Left => g.mul(&term)?,
            };
            r = r.sub(&prod)?;
            q = q.add(&term)?;
        }
        Ok((q, r))
    }

    /// Does `g` divide `self` on the right (`self = q g`)?
    pub fn is_right_divisible_by(&self, g: &SkewPoly) -> Result<bool, SkewPolyError> {
        Ok(self.divide(g, Side::Right)?.1.is_zero())
    }

    /// Does `g` divide `self` on the left (`self = g q`)?
    pub fn is_left_divisible_by(&self, g: &SkewPoly) -> Result<bool, SkewPolyError> {
        Ok(self.divide(g, Side::Left)?.1.is_zero())
    }

    /// Right evaluation at `a`: the remainder of right division by `x - a`,
    /// computed in closed form as `sum_i f_i N_i(a)` with the sigma-norms
    /// `N_i`. Left convention only.
    pub fn right_eval(&self, a: Felt) -> Result<Felt, SkewPolyError> {
        if self.convention != Convention::Left {
            return Err(SkewPolyError::WrongConvention);
        }
        let f = &self.field;
        let mut acc = Felt(0);
        let mut norm = Felt(1); // N_0(a) = 1
        for (i, &ci) in self.coeffs.iter().enumerate() {
            if i > 0 {
                // N_i(a) = N_{i-1}(a) sigma^{i-1}(a)
                norm = f.mul(norm, self.sigma.pow(f, (i - 1) as u64).apply(f, a));
            }
            acc = f.add(acc, f.mul(ci, norm));
        }
        Ok(acc)
    }
}

/// The sigma-norm `N_i(a) = a sigma(a) ... sigma^(i-1)(a)`, with
/// `N_0(a) = 1`.
pub fn sigma_norm(field: &Field, sigma: &FieldAut, a: Felt, i: usize) -> Felt {
    let mut acc = Felt(1);
    for j in 0..i {
        acc = field.mul(acc, sigma.pow(field, j as u64).apply(field, a));
    }
    acc
}

/// Greatest common right divisor together with the least common left
/// multiple, both monic. Runs one extended Euclidean pass with right
/// divisions, maintaining cofactors `u_i` with `r_i = u_i f + v_i g`; at
/// termination the last nonzero remainder is the gcrd and `u f` (for the
/// cofactor of the vanishing remainder) is the lclm.
pub fn gcrd_lclm(f: &SkewPoly, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly), SkewPolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(SkewPolyError::ZeroInput);
    }
    let (gcd, cofactor) = euclid(f, g, Side::Right)?;
    let lcm = cofactor.mul(f)?.monic_via_left();
    Ok((gcd.monic_via_left(), lcm))
}

/// Greatest common left divisor together with the least common right
/// multiple, both monic: the mirror of [`gcrd_lclm`] using left divisions
/// and right cofactors (`r_i = f u_i + g v_i`, lcrm = `f u`).
pub fn gcld_lcrm(f: &SkewPoly, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly), SkewPolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(SkewPolyError::ZeroInput);
    }
    let (gcd, cofactor) = euclid(f, g, Side::Left)?;
    let lcm = f.mul(&cofactor)?.monic_via_right();
    Ok((gcd.monic_via_right(), lcm))
}

/// Greatest common right divisor, monic. Tolerates one zero input:
/// `gcrd(f, 0) = monic(f)`.
pub fn gcrd(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly, SkewPolyError> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(SkewPolyError::ZeroInput),
        (false, true) => Ok(f.monic_via_left()),
        (true, false) => Ok(g.monic_via_left()),
        (false, false) => Ok(gcrd_lclm(f, g)?.0),
    }
}

/// Greatest common left divisor, monic. Tolerates one zero input.
pub fn gcld(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly, SkewPolyError> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(SkewPolyError::ZeroInput),
        (false, true) => Ok(f.monic_via_right()),
        (true, false) => Ok(g.monic_via_right()),
        (false, false) => Ok(gcld_lcrm(f, g)?.0),
    }
}

/// Least common left multiple, monic. Both inputs must be nonzero.
pub fn lclm(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly, SkewPolyError> {
    Ok(gcrd_lclm(f, g)?.1)
}

/// Least common right multiple, monic. Both inputs must be nonzero.
pub fn lcrm(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly, SkewPolyError> {
    Ok(gcld_lcrm(f, g)?.1)
}

/// Extended Euclid on the chosen division side. Returns the last nonzero
/// remainder and the `f`-cofactor of the first zero remainder (so that
/// `cofactor * f` resp. `f * cofactor` is a least common multiple).
fn euclid(f: &SkewPoly, g: &SkewPoly, side: Side) -> Result<(SkewPoly, SkewPoly), SkewPolyError> {
    f.same_ring(g)?;
    let ring = (f.field(), f.sigma(), f.convention());
    let mut r0 = f.clone();
    let mut r1 = g.clone();
    let mut u0 = SkewPoly::one(ring.0, ring.1, ring.2);
    let mut u1 = SkewPoly::zero(ring.0, ring.1, ring.2);
    while !r1.is_zero() {
        let (q, r2) = r0.divide(&r1, side)?;
        let qu = match side {
            Side::Right => q.mul(&u1)?,
            Side::Left => u1.mul(&q)?,
        };
        let u2 = u0.sub(&qu)?;
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    Ok((r0, u1))
}
