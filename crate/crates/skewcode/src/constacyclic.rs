//! Skew constacyclic codes and their duals.
//!
//! Fix a finite field `L`, an automorphism `sigma` whose order divides `n`,
//! and a nonzero `sigma`-fixed unit `u`. The quotient `R = L[x;sigma] /
//! (x^n - u)` is then well defined (the modulus is central), free of rank
//! `n` over `L` with basis `1, x, ..., x^(n-1)`, and a left ideal `R f`
//! cuts out a length-`n` linear code over `L` through the coefficient map.
//! These are the skew constacyclic codes; `u = 1` gives skew cyclic codes
//! and `sigma = id` the classical constacyclic family.
//!
//! The dual machinery runs through the companion ring `R^ = L[x;sigma] /
//! (x^n - u^-1)` and the anti-isomorphism
//!
//! ```text
//! theta(a_0 + a_1 x + ... + a_(n-1) x^(n-1))
//!     = a_0 + sum_(j=1)^(n-1) u sigma^j(a_(n-j)) x^j,
//! ```
//!
//! which transposes multiplication matrices. For a monic left divisor `f`
//! of `x^n - u` with cofactor `h` (`x^n - u = f h`), the right annihilator
//! of `R f` is `h R`, and the dual of the code of `f` is the code of
//! `theta(h)` in `R^`. [`ConstaRing::dual`] packages this and cross-checks
//! the result against a direct kernel computation.

use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use crate::framework::{self, DualPair, HammingExt, LinearCode};
use crate::gf::{Felt, Field, FieldAut};
use crate::linalg::Mat;
use crate::skewpoly::{Convention, Side, SkewPoly};

/// Errors from constructing or operating on a constacyclic quotient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstaError {
    /// The order of `sigma` does not divide the length `n` (or `n = 0`).
    OrderMismatch,
    /// The constant `u` is zero or not fixed by `sigma`.
    NotFixedUnit,
    /// A polynomial from a different field, automorphism, or convention.
    MixedRings,
    /// The generator does not divide `x^n - u` on the left.
    NotALeftDivisor,
    /// Dual computations require a monic generator.
    NotMonic,
}

impl core::fmt::Display for ConstaError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ConstaError::OrderMismatch => {
                write!(f, "automorphism order must divide the code length")
            }
            ConstaError::NotFixedUnit => {
                write!(f, "constant must be a nonzero element fixed by the automorphism")
            }
            ConstaError::MixedRings => write!(f, "operands belong to different rings"),
            ConstaError::NotALeftDivisor => {
                write!(f, "generator is not a left divisor of the modulus")
            }
            ConstaError::NotMonic => write!(f, "generator must be monic"),
        }
    }
}

impl core::error::Error for ConstaError {}

/// The quotient ring `L[x;sigma] / (x^n - u)`. Elements are coefficient
/// vectors of length `n` (constant term first).
#[derive(Clone, PartialEq, Debug)]
pub struct ConstaRing {
    field: Field,
    sigma: FieldAut,
    n: usize,
    u: Felt,
}

/// A constacyclic code with its dual and the annihilator certificate.
#[derive(Clone, PartialEq, Debug)]
pub struct ConstaDual {
    /// The code `v(R f)`.
    pub code: LinearCode,
    /// Its dual, the code of `theta(cofactor)` in the companion ring.
    pub dual: LinearCode,
    /// The right cofactor `h` with `x^n - u = f h`.
    pub cofactor: SkewPoly,
}

impl ConstaRing {
    pub fn new(field: &Field, sigma: FieldAut, n: usize, u: Felt) -> Result<ConstaRing, ConstaError> {
        if n == 0 || !n.is_multiple_of(sigma.order(field) as usize) {
            return Err(ConstaError::OrderMismatch);
        }
        if u == Felt(0) || sigma.apply(field, u) != u {
            return Err(ConstaError::NotFixedUnit);
        }
        Ok(ConstaRing {
            field: field.clone(),
            sigma,
            n,
            u,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn sigma(&self) -> FieldAut {
        self.sigma
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> Felt {
        self.u
    }

    /// The companion ring `L[x;sigma] / (x^n - u^-1)` that `theta` maps
    /// into. When `u^2 = 1` this is the ring itself.
    pub fn hat(&self) -> ConstaRing {
        let u_inv = self.field.inv(self.u).expect("unit is nonzero");
        ConstaRing {
            field: self.field.clone(),
            sigma: self.sigma,
            n: self.n,
            u: u_inv,
        }
    }

    /// The central modulus `x^n - u` as a skew polynomial.
    pub fn modulus_poly(&self) -> SkewPoly {
        let xn = SkewPoly::monomial(&self.field, self.sigma, Convention::Left, Felt(1), self.n);
        let c = SkewPoly::constant(&self.field, self.sigma, Convention::Left, self.u);
        xn.sub(&c).expect("same ring")
    }

    /// Reduce arbitrary coefficients modulo `x^n - u`: `x^(n+j) = u x^j`.
    pub fn reduce(&self, coeffs: &[Felt]) -> Vec<Felt> {
        let f = &self.field;
        let mut c: Vec<Felt> = coeffs.to_vec();
        if c.len() < self.n {
            c.resize(self.n, Felt(0));
        }
        for k in (self.n..c.len()).rev() {
            let carry = f.mul(self.u, c[k]);
            c[k - self.n] = f.add(c[k - self.n], carry);
            c[k] = Felt(0);
        }
        c.truncate(self.n);
        c
    }

    /// The residue of a skew polynomial (left convention, same field and
    /// automorphism).
    pub fn from_skew(&self, p: &SkewPoly) -> Result<Vec<Felt>, ConstaError> {
        if p.field() != &self.field
            || p.sigma() != self.sigma
            || p.convention() != Convention::Left
        {
            return Err(ConstaError::MixedRings);
        }
        Ok(self.reduce(p.coeffs()))
    }

    /// The canonical representative of a residue as a skew polynomial.
    pub fn to_skew(&self, f: &[Felt]) -> SkewPoly {
        SkewPoly::new(&self.field, self.sigma, Convention::Left, f)
    }

    /// Product of two residues: skew multiplication followed by reduction.
    pub fn ring_mul(&self, f: &[Felt], g: &[Felt]) -> Vec<Felt> {
        assert_eq!(f.len(), self.n);
        assert_eq!(g.len(), self.n);
        let fld = &self.field;
        let mut out = vec![Felt(0); 2 * self.n - 1];
        for (i, &fi) in f.iter().enumerate() {
            if fi == Felt(0) {
                continue;
            }
            for (j, &gj) in g.iter().enumerate() {
                // x^i a = sigma^i(a) x^i, so the i-th coefficient twists g.
                let twisted = fld.mul(fi, self.sigma.pow(fld, i as u64).apply(fld, gj));
                out[i + j] = fld.add(out[i + j], twisted);
            }
        }
        self.reduce(&out)
    }

    /// The anti-isomorphism onto the companion ring: coefficients of
    /// `theta(f)` are `b_0 = a_0` and `b_j = u sigma^j(a_(n-j))`.
    pub fn theta(&self, f: &[Felt]) -> Vec<Felt> {
        assert_eq!(f.len(), self.n);
        let fld = &self.field;
        let mut b = vec![Felt(0); self.n];
        b[0] = f[0];
        for j in 1..self.n {
            let twisted = self.sigma.pow(fld, j as u64).apply(fld, f[self.n - j]);
            b[j] = fld.mul(self.u, twisted);
        }
        b
    }

    /// The multiplication matrix `M(f)` in closed form: entry `(i, j)` is
    /// `sigma^i(a_(j-i))` on and above the diagonal and
    /// `u sigma^i(a_(n+j-i))` below it.
    pub fn mul_matrix(&self, f: &[Felt]) -> Mat {
        assert_eq!(f.len(), self.n);
        let fld = &self.field;
        Mat::from_fn(fld, self.n, self.n, |i, j| {
            let twist = self.sigma.pow(fld, i as u64);
            if j >= i {
                twist.apply(fld, f[j - i])
            } else {
                fld.mul(self.u, twist.apply(fld, f[self.n + j - i]))
            }
        })
    }

    /// The code `v(R f)` in canonical form.
    pub fn code(&self, f: &[Felt]) -> LinearCode {
        LinearCode::Block(self.mul_matrix(f).row_canonical())
    }

    /// The dual of the code generated by a monic left divisor `f` of
    /// `x^n - u`.
    ///
    /// Computes the cofactor `h` with `x^n - u = f h`, then the dual as the
    /// code of `theta(h)` in the companion ring. The framework certifies
    /// the annihilator: the closed form must agree with the kernel of
    /// `w -> w M(f)^T`, so a successful return is self-validating.
    pub fn dual(&self, f: &SkewPoly) -> Result<ConstaDual, ConstaError> {
        if f.field() != &self.field
            || f.sigma() != self.sigma
            || f.convention() != Convention::Left
        {
            return Err(ConstaError::MixedRings);
        }
        if !f.is_monic() {
            return Err(ConstaError::NotMonic);
        }
        let (h, r) = self
            .modulus_poly()
            .divide(f, Side::Left)
            .map_err(|_| ConstaError::NotALeftDivisor)?;
        if !r.is_zero() {
            return Err(ConstaError::NotALeftDivisor);
        }
        let f_res = self.reduce(f.coeffs());
        let h_res = self.reduce(h.coeffs());
        let pair: DualPair = framework::dual_code(self, &self.hat(), &f_res, &h_res, &|x| {
            self.theta(x)
        })
        .expect("cofactor of a monic left divisor certifies the right annihilator");
        Ok(ConstaDual {
            code: pair.code,
            dual: pair.dual,
            cofactor: h,
        })
    }
}

impl HammingExt for ConstaRing {
    type Scalar = Felt;
    type Elt = Vec<Felt>;

    fn base_field(&self) -> &Field {
        &self.field
    }

    fn rank(&self) -> usize {
        self.n
    }

    fn zero_elt(&self) -> Vec<Felt> {
        vec![Felt(0); self.n]
    }

    fn one_elt(&self) -> Vec<Felt> {
        let mut e = vec![Felt(0); self.n];
        e[0] = Felt(1);
        e
    }

    fn multiply(&self, f: &Vec<Felt>, g: &Vec<Felt>) -> Vec<Felt> {
        self.ring_mul(f, g)
    }

    fn coord(&self, f: &Vec<Felt>) -> Vec<Felt> {
        f.clone()
    }

    fn coord_inv(&self, w: &[Felt]) -> Vec<Felt> {
        assert_eq!(w.len(), self.n);
        w.to_vec()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Vec<Felt> {
        (0..self.n).map(|_| self.field.sample(rng)).collect()
    }
}

/// All monic skew polynomials of the given degree over the ring's field
/// (left convention), in lexicographic coefficient order.
pub fn monic_polys(field: &Field, sigma: FieldAut, degree: usize) -> Vec<SkewPoly> {
    let q = field.q() as usize;
    let count = q.pow(degree as u32);
    (0..count)
        .map(|mut idx| {
            let mut coeffs = vec![Felt(0); degree + 1];
            for c in coeffs.iter_mut().take(degree) {
                *c = Felt((idx % q) as u32);
                idx /= q;
            }
            coeffs[degree] = Felt(1);
            SkewPoly::new(field, sigma, Convention::Left, &coeffs)
        })
        .collect()
}

/// All monic left divisors of `x^n - u` in the given ring, found by
/// exhaustive scan over monic polynomials of each degree `0..=n`.
pub fn monic_left_divisors(ring: &ConstaRing) -> Vec<SkewPoly> {
    let modulus = ring.modulus_poly();
    let mut out = Vec::new();
    for d in 0..=ring.n() {
        for f in monic_polys(ring.field(), ring.sigma(), d) {
            let (_, r) = modulus.divide(&f, Side::Left).expect("monic divisor");
            if r.is_zero() {
                out.push(f);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::{
        check_regular_representation, check_transposition, left_annihilator, mrep, BaseScalar,
    };
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf4_ring() -> ConstaRing {
        let f = Field::new(2, 2).unwrap();
        let s = FieldAut::new(&f, 1);
        ConstaRing::new(&f, s, 2, Felt(1)).unwrap()
    }

    fn gf8_ring() -> ConstaRing {
        let f = Field::new(2, 3).unwrap();
        let s = FieldAut::new(&f, 1);
        ConstaRing::new(&f, s, 3, Felt(1)).unwrap()
    }

    fn gf9_ring(u: u32) -> ConstaRing {
        let f = Field::new(3, 2).unwrap();
        let s = FieldAut::new(&f, 1);
        ConstaRing::new(&f, s, 2, Felt(u)).unwrap()
    }

    #[test]
    fn construction_rejects_bad_parameters() {
        let f = Field::new(2, 2).unwrap();
        let s = FieldAut::new(&f, 1); // order 2
        assert_eq!(
            ConstaRing::new(&f, s, 3, Felt(1)).unwrap_err(),
            ConstaError::OrderMismatch
        );
        assert_eq!(
            ConstaRing::new(&f, s, 0, Felt(1)).unwrap_err(),
            ConstaError::OrderMismatch
        );
        // 2 is not fixed by the squaring map (2^2 = 3 in this table).
        assert_eq!(
            ConstaRing::new(&f, s, 2, Felt(2)).unwrap_err(),
            ConstaError::NotFixedUnit
        );
        assert_eq!(
            ConstaRing::new(&f, s, 2, Felt(0)).unwrap_err(),
            ConstaError::NotFixedUnit
        );
        // sigma = id admits any length and any nonzero constant.
        let id = FieldAut::identity();
        assert!(ConstaRing::new(&f, id, 5, Felt(2)).is_ok());
    }

    #[test]
    fn ring_mul_matches_skew_polynomial_reduction() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for ring in [gf4_ring(), gf8_ring(), gf9_ring(2)] {
            for _ in 0..50 {
                let a = ring.sample(&mut rng);
                let b = ring.sample(&mut rng);
                let direct = ring.ring_mul(&a, &b);
                let via_poly = ring
                    .reduce(ring.to_skew(&a).mul(&ring.to_skew(&b)).unwrap().coeffs());
                assert_eq!(direct, via_poly);
            }
        }
    }

    #[test]
    fn closed_form_matrix_matches_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for ring in [gf4_ring(), gf8_ring(), gf9_ring(1), gf9_ring(2)] {
            for _ in 0..25 {
                let f = ring.sample(&mut rng);
                let grid = mrep(&ring, &f);
                let closed = ring.mul_matrix(&f);
                for (i, row) in grid.iter().enumerate() {
                    for (j, &cell) in row.iter().enumerate() {
                        assert_eq!(closed.get(i, j), cell);
                    }
                }
            }
            let reg = check_regular_representation(&ring, 25, &mut rng);
            assert!(reg.passed(), "{:?}", reg.failures.first());
        }
    }

    #[test]
    fn transposition_identity_exhaustive_on_the_smallest_ring() {
        let ring = gf4_ring();
        let hat = ring.hat();
        // All 16 elements of GF(4)[x;frob]/(x^2-1).
        for a0 in 0..4u32 {
            for a1 in 0..4u32 {
                let f = vec![Felt(a0), Felt(a1)];
                let lhs = hat.mul_matrix(&ring.theta(&f));
                let rhs = ring.mul_matrix(&f).transpose();
                assert_eq!(lhs, rhs, "f = {:?}", f);
            }
        }
    }

    #[test]
    fn transposition_identity_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for ring in [gf8_ring(), gf9_ring(1), gf9_ring(2)] {
            let hat = ring.hat();
            let report = check_transposition(&ring, &hat, &|f| ring.theta(f), 100, &mut rng);
            assert_eq!(report.checked, 200);
            assert!(report.passed(), "{:?}", report.failures.first());
        }
    }

    #[test]
    fn theta_is_an_involution_when_u_squares_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for ring in [gf4_ring(), gf8_ring(), gf9_ring(2)] {
            let hat = ring.hat();
            assert_eq!(ring, hat, "u^2 = 1 makes the companion ring the ring itself");
            for _ in 0..50 {
                let f = ring.sample(&mut rng);
                assert_eq!(hat.theta(&ring.theta(&f)), f);
            }
        }
    }

    #[test]
    fn dual_of_every_monic_left_divisor() {
        for ring in [gf4_ring(), gf8_ring(), gf9_ring(1), gf9_ring(2)] {
            let divisors = monic_left_divisors(&ring);
            // x^n - u and 1 are always divisors.
            assert!(divisors.len() >= 2);
            for f in &divisors {
                let d = ring.dual(f).unwrap();
                let deg = f.degree().unwrap();
                assert_eq!(d.code.dim(), ring.n() - deg);
                assert_eq!(d.code.dim() + d.dual.dim(), ring.n());
                // x^n - u = f h, so deg h complements deg f.
                assert_eq!(d.cofactor.degree().unwrap(), ring.n() - deg);

                // The left annihilator of h R recovers R f exactly.
                let h_res = ring.reduce(d.cofactor.coeffs());
                let gens = left_annihilator(&ring, &h_res);
                let ann = Felt::code_from_rows(ring.field(), ring.n(), &gens);
                assert_eq!(ann, ring.code(&ring.reduce(f.coeffs())));
            }
        }
    }

    #[test]
    fn dual_rejects_bad_generators() {
        let ring = gf8_ring();
        let f = ring.field().clone();
        let s = ring.sigma();
        // x is a unit in the quotient but not a left divisor of x^3 - 1
        // (the product x h always has zero constant term).
        let x = SkewPoly::monomial(&f, s, Convention::Left, Felt(1), 1);
        assert_eq!(ring.dual(&x).unwrap_err(), ConstaError::NotALeftDivisor);
        // Non-monic generator.
        let double = x.mul_const_left(Felt(2));
        assert_eq!(ring.dual(&double).unwrap_err(), ConstaError::NotMonic);
        // Wrong automorphism.
        let id = FieldAut::identity();
        let wrong = SkewPoly::x_minus(&f, id, Convention::Left, Felt(1));
        assert_eq!(ring.dual(&wrong).unwrap_err(), ConstaError::MixedRings);
    }

    #[test]
    fn extreme_divisors_give_zero_and_full_codes() {
        let ring = gf9_ring(2);
        let one = SkewPoly::one(ring.field(), ring.sigma(), Convention::Left);
        let full = ring.dual(&one).unwrap();
        assert_eq!(full.code.dim(), ring.n());
        assert_eq!(full.dual.dim(), 0);

        let modulus = ring.modulus_poly();
        let zero = ring.dual(&modulus).unwrap();
        assert_eq!(zero.code.dim(), 0);
        assert_eq!(zero.dual.dim(), ring.n());
    }

    #[test]
    fn shifted_dual_generator_spans_the_same_code() {
        // x^k theta(h) generates the same left ideal as theta(h), where
        // k = deg h: the standard explicit generator of the dual.
        for ring in [gf4_ring(), gf8_ring(), gf9_ring(2)] {
            let hat = ring.hat();
            for f in monic_left_divisors(&ring) {
                let d = ring.dual(&f).unwrap();
                let th = ring.theta(&ring.reduce(d.cofactor.coeffs()));
                let k = d.cofactor.degree().unwrap();
                let mut xk = hat.zero_elt();
                xk[k % ring.n()] = if k == ring.n() {
                    // x^n = u^-1 in the companion ring.
                    hat.unit()
                } else {
                    Felt(1)
                };
                let shifted = hat.ring_mul(&xk, &th);
                assert_eq!(hat.code(&shifted), hat.code(&th));
            }
        }
    }
}
