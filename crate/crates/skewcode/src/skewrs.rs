//! Skew Reed-Solomon codes: MDS codes from norm-1 root chains.
//!
//! Let `sigma` have order `n` on `L = GF(q^n)` with fixed field `K`, and
//! let `alpha` be a normal element of `L` over `K`. Setting
//! `beta = sigma(alpha) alpha^-1`, the modulus of the skew cyclic ring
//! `L[x;sigma] / (x^n - 1)` splits completely:
//!
//! ```text
//! x^n - 1 = lclm(x - beta, x - sigma(beta), ..., x - sigma^(n-1)(beta)).
//! ```
//!
//! The code generated by the partial chain `g = lclm(x - beta, ...,
//! x - sigma^(delta-2)(beta))` has length `n`, dimension `n - delta + 1`,
//! and minimum distance exactly `delta`: it meets the Singleton bound.
//!
//! Duality stays inside the family. With `gamma` the companion root
//! defined by `x^n - 1 = (x - gamma) lclm(x - sigma(beta), ...,
//! x - sigma^(n-1)(beta))`, the dual code is generated by the chain of
//! `n - delta + 1` factors starting at `sigma^delta(gamma)^-1`. The same
//! element drives the evaluation picture: writing `mu` for that root and
//! `nu` for a Hilbert-90 witness (`mu = sigma(nu) nu^-1`), the matrix with
//! entries `sigma^(i+j)(nu)` spans the code row by row.
//!
//! [`SkewRsCode`] carries a generic chain (any starting root whose full
//! chain recovers `x^n - 1`), so a dual is again a [`SkewRsCode`] and
//! double duals can be compared structurally.

use alloc::vec;

use crate::constacyclic::ConstaRing;
use crate::framework::LinearCode;
use crate::gf::{hilbert90, is_normal_element, Felt, Field, FieldAut};
use crate::linalg::Mat;
use crate::skewpoly::{lclm, lcrm, Convention, Side, SkewPoly};

/// Errors from skew Reed-Solomon construction and analysis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SkewRsError {
    /// The element is not normal over the fixed field of `sigma` (or the
    /// root chain fails to decompose `x^n - 1`).
    NotNormal,
    /// The designed distance must satisfy `2 <= delta <= n`.
    BadDelta,
    /// Exhaustive distance enumeration is capped at 2^20 codewords.
    CodeTooLarge,
    /// The zero code has no minimum distance.
    ZeroCode,
}

impl core::fmt::Display for SkewRsError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SkewRsError::NotNormal => {
                write!(f, "element is not normal over the fixed field of the automorphism")
            }
            SkewRsError::BadDelta => write!(f, "designed distance must lie in 2..=n"),
            SkewRsError::CodeTooLarge => {
                write!(f, "too many codewords for exhaustive distance enumeration")
            }
            SkewRsError::ZeroCode => write!(f, "the zero code has no minimum distance"),
        }
    }
}

impl core::error::Error for SkewRsError {}

/// Evaluation data for a skew Reed-Solomon code: the coefficient matrix
/// with entries `sigma^(i+j)(nu)` spans the code, and `mu = sigma(nu) nu^-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvalParams {
    pub mu: Felt,
    pub nu: Felt,
    /// Number of evaluation rows = dimension of the code.
    pub k: usize,
}

/// A skew Reed-Solomon code, held as a chain of `count` consecutive
/// `sigma`-conjugate roots starting at `root`.
#[derive(Clone, PartialEq, Debug)]
pub struct SkewRsCode {
    ring: ConstaRing,
    root: Felt,
    count: usize,
    g: SkewPoly,
    gamma: Felt,
}

impl SkewRsCode {
    /// The code of designed distance `delta` attached to a normal element
    /// `alpha`: the chain starts at `sigma(alpha) alpha^-1` and has
    /// `delta - 1` factors.
    pub fn new(field: &Field, sigma: FieldAut, alpha: Felt, delta: usize) -> Result<SkewRsCode, SkewRsError> {
        let d = sigma.fixed_degree(field);
        if alpha == Felt(0) || !is_normal_element(field, d, alpha) {
            return Err(SkewRsError::NotNormal);
        }
        let beta = field
            .mul(sigma.apply(field, alpha), field.inv(alpha).expect("alpha is nonzero"));
        if delta < 2 {
            return Err(SkewRsError::BadDelta);
        }
        Self::from_root(field, sigma, beta, delta - 1)
    }

    /// The code whose generator is `lclm(x - sigma^i(root) : i < count)`.
    /// The full chain of `n` factors must recover `x^n - 1`, which is
    /// exactly the condition that `root = sigma(alpha) alpha^-1` for some
    /// normal `alpha`.
    pub fn from_root(field: &Field, sigma: FieldAut, root: Felt, count: usize) -> Result<SkewRsCode, SkewRsError> {
        let n = sigma.order(field) as usize;
        if count == 0 || count >= n {
            return Err(SkewRsError::BadDelta);
        }
        let ring = ConstaRing::new(field, sigma, n, Felt(1)).expect("order divides itself");

        // Build the prefix lclms of the chain and keep the one of length
        // `count`; the full one must equal x^n - 1.
        let factor = |i: usize| {
            let r = sigma.pow(field, i as u64).apply(field, root);
            SkewPoly::x_minus(field, sigma, Convention::Left, r)
        };
        let mut acc = factor(0);
        let mut g = None;
        for i in 1..n {
            if i == count {
                g = Some(acc.clone());
            }
            acc = lclm(&acc, &factor(i)).expect("chain factors are nonzero");
        }
        let g = g.unwrap_or_else(|| acc.clone());
        if acc != ring.modulus_poly() {
            return Err(SkewRsError::NotNormal);
        }
        // deg lclm <= sum of degrees, with equality exactly when the full
        // chain decomposes x^n - 1; then every prefix has full degree too.
        assert_eq!(g.degree(), Some(count));

        // Companion root: x^n - 1 = (x - gamma) lclm(tail chain), where
        // the tail starts one step later.
        let mut tail = factor(1);
        for i in 2..n {
            tail = lclm(&tail, &factor(i)).expect("chain factors are nonzero");
        }
        let (q, r) = ring
            .modulus_poly()
            .divide(&tail, Side::Right)
            .expect("tail is nonzero");
        assert!(r.is_zero() && q.degree() == Some(1), "tail chain must right-divide x^n - 1");
        let gamma = field.neg(q.coeff(0));

        Ok(SkewRsCode {
            ring,
            root,
            count,
            g,
            gamma,
        })
    }

    pub fn ring(&self) -> &ConstaRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn sigma(&self) -> FieldAut {
        self.ring.sigma()
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    /// First root of the chain.
    pub fn root(&self) -> Felt {
        self.root
    }

    /// Number of chain factors = degree of the generator.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Designed distance, one more than the chain length.
    pub fn delta(&self) -> usize {
        self.count + 1
    }

    pub fn dim(&self) -> usize {
        self.n() - self.count
    }

    pub fn generator(&self) -> &SkewPoly {
        &self.g
    }

    /// The companion root `gamma` with
    /// `x^n - 1 = (x - gamma) lclm(x - sigma(root), ..., x - sigma^(n-1)(root))`.
    pub fn gamma(&self) -> Felt {
        self.gamma
    }

    /// The right cofactor `h` with `x^n - 1 = g h`.
    pub fn cofactor(&self) -> SkewPoly {
        let (h, r) = self
            .ring
            .modulus_poly()
            .divide(&self.g, Side::Left)
            .expect("generator is nonzero");
        assert!(r.is_zero(), "generator left-divides x^n - 1");
        h
    }

    /// The code as a canonical generator matrix.
    pub fn code(&self) -> LinearCode {
        self.ring.code(&self.ring.reduce(self.g.coeffs()))
    }

    /// The dual code, again a chain code: `n - count` factors starting at
    /// `sigma^(count+1)(gamma)^-1`. The closed form is cross-checked
    /// against the kernel of the generator matrix.
    pub fn dual(&self) -> SkewRsCode {
        let field = self.field();
        let sigma = self.sigma();
        let dual_root = field
            .inv(sigma.pow(field, self.count as u64 + 1).apply(field, self.gamma))
            .expect("companion root is nonzero");
        let dual_count = self.n() - self.count;
        let dual = Self::from_root(field, sigma, dual_root, dual_count)
            .expect("dual chain of a valid chain is valid");
        assert_eq!(
            dual.code(),
            self.code().dual(),
            "closed-form dual must match the kernel computation"
        );
        dual
    }

    /// Evaluation parameters: `mu` is the first dual root, `nu` its
    /// Hilbert-90 witness.
    pub fn eval_params(&self) -> EvalParams {
        let field = self.field();
        let sigma = self.sigma();
        let mu = field
            .inv(sigma.pow(field, self.count as u64 + 1).apply(field, self.gamma))
            .expect("companion root is nonzero");
        let nu = hilbert90(field, &sigma, mu).expect("first dual root has norm 1");
        EvalParams {
            mu,
            nu,
            k: self.dim(),
        }
    }

    /// The `k x n` evaluation matrix with entries `sigma^(i+j)(nu)`. Its
    /// row space is exactly the code.
    pub fn eval_matrix(&self) -> Mat {
        let field = self.field();
        let sigma = self.sigma();
        let p = self.eval_params();
        Mat::from_fn(field, p.k, self.n(), |i, j| {
            sigma.pow(field, (i + j) as u64).apply(field, p.nu)
        })
    }
}

/// Minimum Hamming weight of the row space of `gen`, by exhaustive
/// enumeration of all `q^rows` combinations.
pub fn min_distance(gen: &Mat) -> Result<usize, SkewRsError> {
    let field = gen.field().clone();
    let k = gen.rows();
    if k == 0 {
        return Err(SkewRsError::ZeroCode);
    }
    let q = field.q() as u64;
    let mut total: u64 = 1;
    for _ in 0..k {
        total = total.saturating_mul(q);
        if total > 1 << 20 {
            return Err(SkewRsError::CodeTooLarge);
        }
    }
    let mut best = usize::MAX;
    let mut msg = vec![Felt(0); k];
    for idx in 1..total {
        // Odometer decode of idx into a message vector.
        let mut v = idx;
        for slot in msg.iter_mut() {
            *slot = Felt((v % q) as u32);
            v /= q;
        }
        let word = gen.row_mul(&msg);
        let w = word.iter().filter(|&&c| c != Felt(0)).count();
        if w < best {
            best = w;
        }
    }
    Ok(best)
}

/// The interlocking chain identity: for each `k < n - 1`,
/// `lcrm(x - gamma, ..., x - sigma^k(gamma)) * lclm(x - sigma^(k+1)(root),
/// ..., x - sigma^(n-1)(root)) = x^n - 1`.
pub fn chain_complement_products(code: &SkewRsCode) -> bool {
    let field = code.field();
    let sigma = code.sigma();
    let n = code.n();
    let factor = |base: Felt, i: usize| {
        let r = sigma.pow(field, i as u64).apply(field, base);
        SkewPoly::x_minus(field, sigma, Convention::Left, r)
    };
    let modulus = code.ring().modulus_poly();
    for k in 0..n - 1 {
        let mut left = factor(code.gamma(), 0);
        for i in 1..=k {
            left = lcrm(&left, &factor(code.gamma(), i)).expect("nonzero");
        }
        let mut right = factor(code.root(), k + 1);
        for i in k + 2..n {
            right = lclm(&right, &factor(code.root(), i)).expect("nonzero");
        }
        if left.mul(&right).expect("same ring") != modulus {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::HammingExt;
    use alloc::vec::Vec;

    fn frob(field: &Field) -> FieldAut {
        FieldAut::new(field, 1)
    }

    fn normal_elements(field: &Field, sigma: FieldAut) -> Vec<Felt> {
        let d = sigma.fixed_degree(field);
        field
            .elements()
            .filter(|&a| a != Felt(0) && is_normal_element(field, d, a))
            .collect()
    }

    #[test]
    fn full_decomposition_for_every_normal_element() {
        for (p, m) in [(2, 2), (2, 3), (2, 4), (3, 2)] {
            let f = Field::new(p, m).unwrap();
            let s = frob(&f);
            let normals = normal_elements(&f, s);
            assert!(!normals.is_empty());
            for alpha in normals {
                // Constructing with any valid delta validates the full
                // decomposition internally; delta = 2 is always valid.
                let code = SkewRsCode::new(&f, s, alpha, 2).unwrap();
                assert_eq!(code.generator().degree(), Some(1));
            }
        }
    }

    #[test]
    fn non_normal_elements_are_rejected() {
        let f = Field::new(2, 4).unwrap();
        let s = frob(&f);
        // 1 is fixed by sigma, so it is never normal for m > 1.
        assert_eq!(SkewRsCode::new(&f, s, Felt(1), 2).unwrap_err(), SkewRsError::NotNormal);
        assert_eq!(SkewRsCode::new(&f, s, Felt(0), 2).unwrap_err(), SkewRsError::NotNormal);
        // A chain started at root 1 collapses (every factor is x - 1), so
        // it cannot decompose x^4 - 1.
        assert_eq!(
            SkewRsCode::from_root(&f, s, Felt(1), 2).unwrap_err(),
            SkewRsError::NotNormal
        );
    }

    #[test]
    fn delta_bounds() {
        let f = Field::new(2, 3).unwrap();
        let s = frob(&f);
        assert_eq!(SkewRsCode::new(&f, s, Felt(3), 1).unwrap_err(), SkewRsError::BadDelta);
        assert_eq!(SkewRsCode::new(&f, s, Felt(3), 4).unwrap_err(), SkewRsError::BadDelta);
        for delta in 2..=3 {
            assert!(SkewRsCode::new(&f, s, Felt(3), delta).is_ok());
        }
    }

    #[test]
    fn gf8_delta3_is_a_3_1_3_code_with_2_dimensional_dual() {
        let f = Field::new(2, 3).unwrap();
        let s = frob(&f);
        let code = SkewRsCode::new(&f, s, Felt(3), 3).unwrap();
        assert_eq!((code.n(), code.dim()), (3, 1));
        let c = code.code();
        assert_eq!(c.dim(), 1);
        assert_eq!(min_distance(c.block_generator().unwrap()).unwrap(), 3);

        let dual = code.dual();
        assert_eq!(dual.dim(), 2);
        let dc = dual.code();
        assert_eq!(min_distance(dc.block_generator().unwrap()).unwrap(), 2);
    }

    #[test]
    fn gf16_codes_meet_the_singleton_bound() {
        let f = Field::new(2, 4).unwrap();
        let s = frob(&f);
        let alpha = normal_elements(&f, s)[0];
        for delta in 2..=4 {
            let code = SkewRsCode::new(&f, s, alpha, delta).unwrap();
            assert_eq!(code.dim(), 4 - delta + 1);
            let d = min_distance(code.code().block_generator().unwrap()).unwrap();
            assert_eq!(d, delta, "distance equals designed distance");
            // Dual of an MDS code is MDS.
            let dual = code.dual();
            let dd = min_distance(dual.code().block_generator().unwrap()).unwrap();
            assert_eq!(dd, 4 - delta + 2);
        }
    }

    #[test]
    fn double_dual_returns_to_the_code() {
        for (p, m, alpha) in [(2u32, 3u32, 3u32), (2, 4, 0), (3, 2, 0)] {
            let f = Field::new(p, m).unwrap();
            let s = frob(&f);
            let a = if alpha != 0 {
                Felt(alpha)
            } else {
                normal_elements(&f, s)[0]
            };
            for delta in 2..=(m as usize) {
                let code = SkewRsCode::new(&f, s, a, delta).unwrap();
                let back = code.dual().dual();
                assert_eq!(back.code(), code.code());
                assert_eq!((back.root(), back.count()), (code.root(), code.count()));
            }
        }
    }

    #[test]
    fn evaluation_matrix_spans_the_code() {
        for (p, m, delta) in [(2u32, 3u32, 2usize), (2, 3, 3), (2, 4, 3), (3, 2, 2)] {
            let f = Field::new(p, m).unwrap();
            let s = frob(&f);
            let alpha = normal_elements(&f, s)[0];
            let code = SkewRsCode::new(&f, s, alpha, delta).unwrap();
            let params = code.eval_params();
            // mu is a Hilbert-90 quotient of its witness.
            let lhs = s.apply(&f, params.nu);
            let rhs = f.mul(params.mu, params.nu);
            assert_eq!(lhs, rhs, "mu = sigma(nu) nu^-1");
            let em = code.eval_matrix();
            assert_eq!(em.rows(), code.dim());
            let spanned = LinearCode::Block(em.row_canonical());
            assert_eq!(spanned, code.code());
        }
    }

    #[test]
    fn interlocking_chain_products_recover_the_modulus() {
        let f = Field::new(2, 3).unwrap();
        let s = frob(&f);
        let code = SkewRsCode::new(&f, s, Felt(3), 3).unwrap();
        assert!(chain_complement_products(&code));
    }

    #[test]
    fn dual_generator_is_the_transposed_cofactor() {
        // The coefficient-twisting anti-map applied to the cofactor h
        // generates the same left ideal as the dual chain generator.
        for (p, m, delta) in [(2u32, 3u32, 3usize), (2, 4, 3), (3, 2, 2)] {
            let f = Field::new(p, m).unwrap();
            let s = frob(&f);
            let alpha = normal_elements(&f, s)[0];
            let code = SkewRsCode::new(&f, s, alpha, delta).unwrap();
            let ring = code.ring();
            let h = ring.reduce(code.cofactor().coeffs());
            let theta_h = ring.theta(&h);
            let dual = code.dual();
            let dual_gen = ring.reduce(dual.generator().coeffs());
            // u = 1, so the companion ring is the ring itself.
            assert_eq!(ring.code(&theta_h), ring.code(&dual_gen));
        }
    }

    #[test]
    fn twisting_commutes_with_coefficient_frobenius() {
        // theta(sigma(f)) = sigma(theta(f)) in a u = 1 ring.
        let f = Field::new(2, 3).unwrap();
        let s = frob(&f);
        use rand_chacha::rand_core::SeedableRng;
        let ring = ConstaRing::new(&f, s, 3, Felt(1)).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let v = ring.sample(&mut rng);
            let mapped: Vec<Felt> = v.iter().map(|&c| s.apply(&f, c)).collect();
            let lhs = ring.theta(&mapped);
            let rhs: Vec<Felt> = ring.theta(&v).iter().map(|&c| s.apply(&f, c)).collect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn distance_enumeration_guards() {
        let f = Field::new(2, 4).unwrap();
        let empty = Mat::zero(&f, 0, 5);
        assert_eq!(min_distance(&empty).unwrap_err(), SkewRsError::ZeroCode);
        // 16^6 combinations exceed the 2^20 enumeration cap.
        let big = Mat::identity(&f, 6);
        assert_eq!(min_distance(&big).unwrap_err(), SkewRsError::CodeTooLarge);
    }
}
