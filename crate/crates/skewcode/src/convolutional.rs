//! Left ideal convolutional codes over matrix-ring Ore extensions.
//!
//! The ambient ring is `R = A[z; sigma]` where `A = M_n(K)` is a full
//! matrix algebra over `K = GF(q^t)` and `sigma` is an `F`-algebra
//! automorphism of `A` (where `F = GF(q)`), written in the form
//! `sigma = sigma_U . sigma_tau^h`: first apply the field Frobenius
//! `tau : c -> c^q` entrywise `h` times, then conjugate by an invertible
//! matrix `U`. Scalars multiply on the right of powers of `z`:
//! `a z = z sigma(a)`, so a product twists as
//! `(z^i a)(z^j b) = z^(i+j) sigma^j(a) b`.
//!
//! The center contains `F[z]`, and `R` is free over it of rank `n^2 t`:
//! coordinates run over matrix entries (row-major) and then over a fixed
//! self-dual normal basis `D = {alpha, tau(alpha), ..., tau^(t-1)(alpha)}`
//! of `K` over `F`. A left ideal `R f` becomes a convolutional code: a
//! submodule of `F[z]^(n^2 t)`.
//!
//! Everything needed for duality is assembled from three matrix bricks
//! over `F` (or `F[z]`): `m(c)`, the `t x t` matrix of right
//! multiplication by `c` on `K`; its blockwise extension `m_expand`; and
//! the permutation `P_h` realizing entrywise `tau^h` over a normal basis.
//! With a self-dual `D` these satisfy `m(c)^T = m(c^q...)`-style
//! symmetries that make the anti-isomorphism
//!
//! ```text
//! theta(sum z^k a_k) = sum z^k transpose(sigma^(-k)(a_k))
//! ```
//!
//! transpose multiplication matrices, landing in the companion ring with
//! `sigma^ = transpose . sigma^-1 . transpose`. The code of an idempotent
//! `e` (a direct summand `R e`) then has dual generated by `theta(1 - e)`.

use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use crate::framework::{self, HammingExt, LinearCode};
use crate::gf::{Felt, Field, FieldAut, SubfieldBasis};
use crate::linalg::{Mat, Poly, PolyMat};

/// Errors from the convolutional-code layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConvError {
    /// The conjugating matrix is not invertible.
    SingularU,
    /// The coordinate basis must be a self-dual normal basis of `K` over
    /// `F`.
    BasisNotSelfDualNormal,
    /// The supplied element is not an idempotent (or its complement fails
    /// to certify the annihilator).
    BadCertificate,
}

impl core::fmt::Display for ConvError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ConvError::SingularU => write!(f, "conjugating matrix is singular"),
            ConvError::BasisNotSelfDualNormal => {
                write!(f, "coordinate basis must be self-dual and normal")
            }
            ConvError::BadCertificate => {
                write!(f, "element is not an idempotent certifying a direct summand")
            }
        }
    }
}

impl core::error::Error for ConvError {}

/// An element of `A[z; sigma]`: coefficient matrices over `K`, index `k`
/// holding the coefficient of `z^k`. Trailing zero matrices are trimmed.
#[derive(Clone, PartialEq, Debug)]
pub struct ConvElt {
    coeffs: Vec<Mat>,
}

impl ConvElt {
    pub fn coeffs(&self) -> &[Mat] {
        &self.coeffs
    }

    pub fn z_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// The Ore extension context: fields, matrix size, coordinate basis, and
/// the automorphism data `(U, h)`.
#[derive(Clone, Debug)]
pub struct ConvRing {
    base: Field,
    ext: Field,
    n: usize,
    t: usize,
    basis: SubfieldBasis,
    tau: FieldAut,
    u_mat: Mat,
    u_inv: Mat,
    h: usize,
    /// K-representation of each element of F, indexed by F-value.
    embed_tab: Vec<Felt>,
    /// F-value of each K-element that lies in the subfield.
    project_tab: Vec<Option<Felt>>,
    /// Basis coordinates of every K-element, projected to F.
    coords_tab: Vec<Vec<Felt>>,
    sample_degree: usize,
}

impl PartialEq for ConvRing {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.ext == other.ext
            && self.n == other.n
            && self.u_mat == other.u_mat
            && self.h == other.h
    }
}

impl ConvRing {
    /// Build the ring for `A = M_n(K)` with `sigma(X) = U tau^h(X) U^-1`.
    ///
    /// `basis` must be a self-dual normal basis of `K` over the base field
    /// `F` (its subfield degree equal to `F`'s extension degree), and `U`
    /// an invertible `n x n` matrix over `K`. `h` is taken modulo `t`.
    pub fn new(
        base: &Field,
        ext: &Field,
        n: usize,
        basis: &SubfieldBasis,
        u: &Mat,
        h: usize,
    ) -> Result<ConvRing, ConvError> {
        assert_eq!(base.p(), ext.p(), "fields must share a characteristic");
        assert!(n >= 1, "matrix size must be positive");
        assert_eq!(
            ext.m() % base.m(),
            0,
            "extension degree must be a multiple of the base degree"
        );
        let t = (ext.m() / base.m()) as usize;
        if basis.field() != ext
            || basis.subfield_degree() != base.m()
            || basis.len() != t
            || !basis.is_normal()
            || !basis.is_self_dual()
        {
            return Err(ConvError::BasisNotSelfDualNormal);
        }
        assert_eq!(u.field(), ext, "U must be a matrix over the extension field");
        assert_eq!((u.rows(), u.cols()), (n, n), "U must be n x n");
        let u_inv = u.inverse().ok_or(ConvError::SingularU)?;

        // Identify F inside K through the least root of F's modulus.
        let root = ext
            .elements()
            .find(|&r| {
                let mut acc = Felt(0);
                let mut pw = Felt(1);
                for &c in base.modulus() {
                    acc = ext.add(acc, ext.mul(Felt(c), pw));
                    pw = ext.mul(pw, r);
                }
                acc == Felt(0)
            })
            .expect("the base field embeds into the extension");
        let embed = |c: Felt| {
            let mut acc = Felt(0);
            let mut pw = Felt(1);
            for d in base.digits(c) {
                acc = ext.add(acc, ext.mul(Felt(d), pw));
                pw = ext.mul(pw, root);
            }
            acc
        };
        let embed_tab: Vec<Felt> = base.elements().map(embed).collect();
        let mut project_tab = vec![None; ext.q() as usize];
        for (v, &image) in embed_tab.iter().enumerate() {
            project_tab[image.0 as usize] = Some(Felt(v as u32));
        }
        let coords_tab: Vec<Vec<Felt>> = ext
            .elements()
            .map(|x| {
                basis
                    .coords(x)
                    .iter()
                    .map(|&c| {
                        project_tab[c.0 as usize].expect("coordinates lie in the base field")
                    })
                    .collect()
            })
            .collect();

        Ok(ConvRing {
            base: base.clone(),
            ext: ext.clone(),
            n,
            t,
            basis: basis.clone(),
            tau: FieldAut::new(ext, base.m()),
            u_mat: u.clone(),
            u_inv,
            h: h % t,
            embed_tab,
            project_tab,
            coords_tab,
            sample_degree: 3,
        })
    }

    /// Sampling degree used by [`HammingExt::sample`] (default 3).
    pub fn with_sample_degree(mut self, degree: usize) -> ConvRing {
        self.sample_degree = degree;
        self
    }

    pub fn base_field_ref(&self) -> &Field {
        &self.base
    }

    pub fn ext_field(&self) -> &Field {
        &self.ext
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &SubfieldBasis {
        &self.basis
    }

    pub fn u_matrix(&self) -> &Mat {
        &self.u_mat
    }

    pub fn tau_exponent(&self) -> usize {
        self.h
    }

    /// K-representation of a base-field element.
    pub fn embed(&self, c: Felt) -> Felt {
        self.embed_tab[c.0 as usize]
    }

    /// Base-field value of a K-element, if it lies in the subfield.
    pub fn project(&self, x: Felt) -> Option<Felt> {
        self.project_tab[x.0 as usize]
    }

    // ---- the automorphism ----------------------------------------------

    /// `sigma(X) = U tau^h(X) U^-1`.
    pub fn apply_sigma(&self, x: &Mat) -> Mat {
        let tau_h = self.tau.pow(&self.ext, self.h as u64);
        let twisted = x.map(|c| tau_h.apply(&self.ext, c));
        self.u_mat.mul(&twisted).mul(&self.u_inv)
    }

    /// `sigma^-1(X) = tau^(t-h)(U^-1 X U)`.
    pub fn apply_sigma_inv(&self, x: &Mat) -> Mat {
        let back = self.tau.pow(&self.ext, (self.t - self.h) as u64 % self.t as u64);
        self.u_inv.mul(x).mul(&self.u_mat).map(|c| back.apply(&self.ext, c))
    }

    /// The companion ring carrying `sigma^ = transpose . sigma^-1 .
    /// transpose`, again in `(U, h)` normal form: `h' = (t - h) mod t` and
    /// `U' = tau^(t-h)(U^T)`.
    pub fn hat(&self) -> ConvRing {
        let h2 = (self.t - self.h) % self.t;
        let back = self.tau.pow(&self.ext, h2 as u64);
        let u2 = self.u_mat.transpose().map(|c| back.apply(&self.ext, c));
        let mut out = self.clone();
        out.u_inv = u2.inverse().expect("transpose of an invertible matrix");
        out.u_mat = u2;
        out.h = h2;
        out
    }

    // ---- elements --------------------------------------------------------

    /// Wrap coefficient matrices (index = power of `z`), trimming trailing
    /// zeros.
    pub fn elt(&self, coeffs: &[Mat]) -> ConvElt {
        for c in coeffs {
            assert_eq!(c.field(), &self.ext, "coefficients live over K");
            assert_eq!((c.rows(), c.cols()), (self.n, self.n));
        }
        let mut v: Vec<Mat> = coeffs.to_vec();
        while v.last().is_some_and(|m| m.is_zero()) {
            v.pop();
        }
        ConvElt { coeffs: v }
    }

    /// The constant element given by one matrix.
    pub fn scalar_elt(&self, m: &Mat) -> ConvElt {
        self.elt(core::slice::from_ref(m))
    }

    pub fn sub_elt(&self, f: &ConvElt, g: &ConvElt) -> ConvElt {
        let len = f.coeffs.len().max(g.coeffs.len());
        let zero = Mat::zero(&self.ext, self.n, self.n);
        let coeffs: Vec<Mat> = (0..len)
            .map(|k| {
                let a = f.coeffs.get(k).unwrap_or(&zero);
                let b = g.coeffs.get(k).unwrap_or(&zero);
                a.sub(b)
            })
            .collect();
        self.elt(&coeffs)
    }

    /// The standard idempotent `E_ii` (a single 1 on the diagonal).
    pub fn standard_idempotent(&self, i: usize) -> ConvElt {
        assert!(i < self.n);
        let mut m = Mat::zero(&self.ext, self.n, self.n);
        m.set(i, i, Felt(1));
        self.scalar_elt(&m)
    }

    /// Conjugate a constant idempotent by an invertible matrix: `g e g^-1`.
    pub fn conjugate(&self, g: &Mat, e: &ConvElt) -> Result<ConvElt, ConvError> {
        let g_inv = g.inverse().ok_or(ConvError::SingularU)?;
        let ge = self.multiply(&self.scalar_elt(g), e);
        Ok(self.multiply(&ge, &self.scalar_elt(&g_inv)))
    }

    pub fn is_idempotent(&self, e: &ConvElt) -> bool {
        self.multiply(e, e) == *e
    }

    // ---- coordinate bricks ------------------------------------------------

    /// Basis coordinates of a K-element over `F` (table lookup).
    pub fn coords_of(&self, x: Felt) -> &[Felt] {
        &self.coords_tab[x.0 as usize]
    }

    /// The `t x t` matrix over `F` of right multiplication by `c` on `K`:
    /// row `k` holds the coordinates of `alpha_k c`.
    pub fn little_m(&self, c: Felt) -> Mat {
        Mat::from_fn(&self.base, self.t, self.t, |k, j| {
            let x = self.ext.mul(self.basis.elements()[k], c);
            self.coords_of(x)[j]
        })
    }

    /// Blockwise [`Self::little_m`] of a square matrix over `K`.
    pub fn m_expand(&self, w: &Mat) -> Mat {
        assert_eq!(w.field(), &self.ext);
        assert_eq!(w.rows(), w.cols());
        let blocks: Vec<Vec<Mat>> = (0..w.rows())
            .map(|i| (0..w.cols()).map(|j| self.little_m(w.get(i, j))).collect())
            .collect();
        Mat::from_fn(&self.base, w.rows() * self.t, w.cols() * self.t, |r, c| {
            blocks[r / self.t][c / self.t].get(r % self.t, c % self.t)
        })
    }

    /// The `n^2 t x n^2 t` matrix over `F` of right multiplication by a
    /// constant `a` in `A`: `v(X a) = v(X) M_a`.
    pub fn const_mul_matrix(&self, a: &Mat) -> Mat {
        self.m_expand(&Mat::identity(&self.ext, self.n).kron(a))
    }

    /// The permutation matrix realizing entrywise `tau^h` on coordinates
    /// over the normal basis: `column (k + h) mod t` of row `k` is 1.
    pub fn tau_perm(&self, h: usize) -> Mat {
        Mat::from_fn(&self.base, self.t, self.t, |k, j| {
            if j == (k + h) % self.t {
                Felt(1)
            } else {
                Felt(0)
            }
        })
    }

    /// The matrix of `sigma` on coordinates: `v(sigma(X)) = v(X) M_sigma`.
    /// Entrywise Frobenius acts first, then conjugation, so the factors
    /// compose left to right.
    pub fn sigma_matrix(&self) -> Mat {
        let frob_part = Mat::identity(&self.base, self.n * self.n).kron(&self.tau_perm(self.h));
        let conj = self.u_mat.transpose().kron(&self.u_inv);
        frob_part.mul(&self.m_expand(&conj))
    }

    /// The multiplication matrix of `f` over `F[z]` in closed form:
    /// `M_R(f) = sum_k z^k M_sigma^k M_(a_k)`.
    pub fn mul_matrix_poly(&self, f: &ConvElt) -> PolyMat {
        let rank = self.n * self.n * self.t;
        let msigma = self.sigma_matrix();
        let mut acc = PolyMat::zero(&self.base, rank, rank);
        let mut sig_pow = Mat::identity(&self.base, rank);
        for (k, a) in f.coeffs.iter().enumerate() {
            if k > 0 {
                sig_pow = sig_pow.mul(&msigma);
            }
            let term = PolyMat::from_scalar(&sig_pow.mul(&self.const_mul_matrix(a)));
            let zk = Poly::monomial(&self.base, Felt(1), k);
            acc = acc.add(&term.scalar_mul(&zk));
        }
        acc
    }

    // ---- the anti-isomorphism ---------------------------------------------

    /// `theta(sum z^k a_k) = sum z^k transpose(sigma^(-k)(a_k))`, an
    /// element of the companion ring [`Self::hat`].
    pub fn theta(&self, f: &ConvElt) -> ConvElt {
        let mut out = Vec::with_capacity(f.coeffs.len());
        for (k, a) in f.coeffs.iter().enumerate() {
            let mut m = a.clone();
            for _ in 0..k {
                m = self.apply_sigma_inv(&m);
            }
            out.push(m.transpose());
        }
        self.elt(&out)
    }

    /// The code `v(R f)` in canonical form.
    pub fn code(&self, f: &ConvElt) -> LinearCode {
        LinearCode::Conv(self.mul_matrix_poly(f).row_canonical())
    }

    /// The dual pair certified by an idempotent: the code `v(R e)` and its
    /// dual, the code of `theta(1 - e)` in the companion ring.
    ///
    /// `R e` is a direct summand with right annihilator `(1 - e) R`, so
    /// the framework's certificate checks all pass; a non-idempotent is
    /// rejected. The returned code always satisfies biduality.
    pub fn dual_from_idempotent(&self, e: &ConvElt) -> Result<IdempotentDual, ConvError> {
        if !self.is_idempotent(e) {
            return Err(ConvError::BadCertificate);
        }
        let complement = self.sub_elt(&self.one_elt(), e);
        let pair = framework::dual_code(self, &self.hat(), e, &complement, &|x| self.theta(x))
            .map_err(|_| ConvError::BadCertificate)?;
        Ok(IdempotentDual {
            code: pair.code,
            dual: pair.dual,
            complement,
        })
    }
}

/// A convolutional code given by an idempotent, with its dual and the
/// complementary idempotent that certifies it.
#[derive(Clone, PartialEq, Debug)]
pub struct IdempotentDual {
    pub code: LinearCode,
    pub dual: LinearCode,
    /// `1 - e`, the generator of the right annihilator of `R e`.
    pub complement: ConvElt,
}

impl HammingExt for ConvRing {
    type Scalar = Poly;
    type Elt = ConvElt;

    fn base_field(&self) -> &Field {
        &self.base
    }

    fn rank(&self) -> usize {
        self.n * self.n * self.t
    }

    fn zero_elt(&self) -> ConvElt {
        ConvElt { coeffs: Vec::new() }
    }

    fn one_elt(&self) -> ConvElt {
        self.scalar_elt(&Mat::identity(&self.ext, self.n))
    }

    fn multiply(&self, f: &ConvElt, g: &ConvElt) -> ConvElt {
        if f.is_zero() || g.is_zero() {
            return self.zero_elt();
        }
        let df = f.coeffs.len() - 1;
        let dg = g.coeffs.len() - 1;
        let mut out = vec![Mat::zero(&self.ext, self.n, self.n); df + dg + 1];
        for (j, b) in g.coeffs.iter().enumerate() {
            // (z^i a)(z^j b) = z^(i+j) sigma^j(a) b.
            let mut a_tw: Vec<Mat> = f.coeffs.to_vec();
            for a in a_tw.iter_mut() {
                for _ in 0..j {
                    *a = self.apply_sigma(a);
                }
            }
            for (i, a) in a_tw.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        self.elt(&out)
    }

    fn coord(&self, f: &ConvElt) -> Vec<Poly> {
        let rank = self.rank();
        let mut slots: Vec<Vec<Felt>> = vec![vec![Felt(0); f.coeffs.len()]; rank];
        for (k, a) in f.coeffs.iter().enumerate() {
            for i in 0..self.n {
                for j in 0..self.n {
                    let coords = self.coords_of(a.get(i, j));
                    for (b, &c) in coords.iter().enumerate() {
                        let pos = (i * self.n + j) * self.t + b;
                        slots[pos][k] = c;
                    }
                }
            }
        }
        slots.into_iter().map(|cs| Poly::new(&self.base, &cs)).collect()
    }

    fn coord_inv(&self, w: &[Poly]) -> ConvElt {
        assert_eq!(w.len(), self.rank());
        let deg = w
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .map_or(0, |d| d + 1);
        let mut coeffs = vec![Mat::zero(&self.ext, self.n, self.n); deg];
        for i in 0..self.n {
            for j in 0..self.n {
                for (k, a) in coeffs.iter_mut().enumerate() {
                    let kcoords: Vec<Felt> = (0..self.t)
                        .map(|b| {
                            let pos = (i * self.n + j) * self.t + b;
                            self.embed(w[pos].coeff(k))
                        })
                        .collect();
                    a.set(i, j, self.basis.from_coords(&kcoords));
                }
            }
        }
        self.elt(&coeffs)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> ConvElt {
        let coeffs: Vec<Mat> = (0..=self.sample_degree)
            .map(|_| Mat::from_fn(&self.ext, self.n, self.n, |_, _| self.ext.sample(rng)))
            .collect();
        self.elt(&coeffs)
    }
}

/// Sample an invertible matrix over `field` by rejection.
pub fn sample_regular_matrix(field: &Field, n: usize, rng: &mut dyn RngCore) -> Mat {
    loop {
        let m = Mat::from_fn(field, n, n, |_, _| field.sample(rng));
        if m.inverse().is_some() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::{
        biduality_check, check_regular_representation, check_transposition, left_annihilator,
        mrep, BaseScalar,
    };
    use crate::gf::find_self_dual_normal;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// n = 2 over K = GF(4), F = GF(2), D = {a, a^2}, sigma = conjugation
    /// by U composed with one Frobenius twist.
    fn standard_ring(u_entries: &[u32; 4], h: usize) -> ConvRing {
        let f = Field::new(2, 1).unwrap();
        let k = Field::new(2, 2).unwrap();
        let basis = find_self_dual_normal(&k, 1).unwrap().unwrap();
        let u = Mat::from_rows(
            &k,
            &[
                vec![Felt(u_entries[0]), Felt(u_entries[1])],
                vec![Felt(u_entries[2]), Felt(u_entries[3])],
            ],
        );
        ConvRing::new(&f, &k, 2, &basis, &u, h).unwrap()
    }

    #[test]
    fn construction_guards() {
        let f = Field::new(2, 1).unwrap();
        let k = Field::new(2, 2).unwrap();
        let basis = find_self_dual_normal(&k, 1).unwrap().unwrap();
        let singular = Mat::from_rows(&k, &[vec![Felt(1), Felt(1)], vec![Felt(1), Felt(1)]]);
        assert_eq!(
            ConvRing::new(&f, &k, 2, &basis, &singular, 1).unwrap_err(),
            ConvError::SingularU
        );
        // The polynomial basis {1, a} of GF(4) is neither normal-looking
        // nor self-dual.
        let poly_basis = SubfieldBasis::new(&k, 1, &[Felt(1), Felt(2)]).unwrap();
        let u = Mat::identity(&k, 2);
        assert_eq!(
            ConvRing::new(&f, &k, 2, &poly_basis, &u, 1).unwrap_err(),
            ConvError::BasisNotSelfDualNormal
        );
    }

    #[test]
    fn embedding_round_trips() {
        // GF(4) inside GF(16): embed is a field homomorphism.
        let f4 = Field::new(2, 2).unwrap();
        let f16 = Field::new(2, 4).unwrap();
        let basis = find_self_dual_normal(&f16, 2).unwrap().unwrap();
        let u = Mat::identity(&f16, 1);
        let ring = ConvRing::new(&f4, &f16, 1, &basis, &u, 0).unwrap();
        for a in f4.elements() {
            assert_eq!(ring.project(ring.embed(a)), Some(a));
            for b in f4.elements() {
                assert_eq!(
                    ring.embed(f4.mul(a, b)),
                    f16.mul(ring.embed(a), ring.embed(b))
                );
                assert_eq!(
                    ring.embed(f4.add(a, b)),
                    f16.add(ring.embed(a), ring.embed(b))
                );
            }
        }
    }

    #[test]
    fn little_m_frozen_example_and_multiplicativity() {
        let ring = standard_ring(&[1, 0, 0, 1], 0);
        // In GF(4) with basis {a, a^2} = {2, 3}: right multiplication by a
        // sends a -> a^2 and a^2 -> 1 = a + a^2.
        let m_a = ring.little_m(Felt(2));
        assert_eq!(
            (m_a.get(0, 0), m_a.get(0, 1), m_a.get(1, 0), m_a.get(1, 1)),
            (Felt(0), Felt(1), Felt(1), Felt(1))
        );
        let k = ring.ext_field().clone();
        for c in k.elements() {
            for d in k.elements() {
                let lhs = ring.little_m(k.mul(c, d));
                let rhs = ring.little_m(c).mul(&ring.little_m(d));
                assert_eq!(lhs, rhs);
            }
            // coords(x c) = coords(x) m(c).
            for x in k.elements() {
                let coords = |y: Felt| -> Vec<Felt> {
                    ring.basis()
                        .coords(y)
                        .iter()
                        .map(|&v| ring.project(v).unwrap())
                        .collect()
                };
                let lhs = coords(k.mul(x, c));
                let rhs = ring.little_m(c).row_mul(&coords(x));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn constant_multiplication_matrices_are_a_homomorphism() {
        let ring = standard_ring(&[1, 0, 0, 1], 0);
        let k = ring.ext_field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let a = Mat::from_fn(&k, 2, 2, |_, _| k.sample(&mut rng));
            let b = Mat::from_fn(&k, 2, 2, |_, _| k.sample(&mut rng));
            assert_eq!(
                ring.const_mul_matrix(&a.mul(&b)),
                ring.const_mul_matrix(&a).mul(&ring.const_mul_matrix(&b))
            );
            // Self-dual basis: transposing the big matrix transposes a.
            assert_eq!(
                ring.const_mul_matrix(&a).transpose(),
                ring.const_mul_matrix(&a.transpose())
            );
        }
    }

    #[test]
    fn sigma_matrix_represents_sigma() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for h in [0usize, 1] {
            let u = [2u32, 1, 1, 1]; // invertible over GF(4)
            let ring = standard_ring(&u, h);
            let msig = ring.sigma_matrix();
            for _ in 0..20 {
                let x = Mat::from_fn(ring.ext_field(), 2, 2, |_, _| {
                    ring.ext_field().sample(&mut rng)
                });
                let fx = ring.scalar_elt(&x);
                let lhs = ring.coord(&ring.scalar_elt(&ring.apply_sigma(&x)));
                let coords = ring.coord(&fx);
                let scalar_coords: Vec<Felt> =
                    coords.iter().map(|p| p.coeff(0)).collect();
                let rhs_scalar = msig.row_mul(&scalar_coords);
                let lhs_scalar: Vec<Felt> = lhs.iter().map(|p| p.coeff(0)).collect();
                assert_eq!(lhs_scalar, rhs_scalar);
            }
            // sigma and its inverse cancel pointwise.
            for _ in 0..10 {
                let x = Mat::from_fn(ring.ext_field(), 2, 2, |_, _| {
                    ring.ext_field().sample(&mut rng)
                });
                assert_eq!(ring.apply_sigma_inv(&ring.apply_sigma(&x)), x);
            }
        }
    }

    #[test]
    fn frobenius_permutation_properties() {
        let ring = standard_ring(&[1, 0, 0, 1], 1);
        let t = 2;
        let p1 = ring.tau_perm(1);
        // Inverse = opposite shift = transpose.
        assert_eq!(p1.mul(&ring.tau_perm(t - 1)), Mat::identity(ring.base_field_ref(), t));
        assert_eq!(p1.transpose(), ring.tau_perm(t - 1));
    }

    #[test]
    fn intertwining_with_sigma() {
        // M_a M_sigma = M_sigma M_sigma(a): moving a constant past the
        // automorphism twists it.
        let ring = standard_ring(&[2, 1, 1, 1], 1);
        let k = ring.ext_field().clone();
        let msig = ring.sigma_matrix();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..20 {
            let a = Mat::from_fn(&k, 2, 2, |_, _| k.sample(&mut rng));
            let lhs = ring.const_mul_matrix(&a).mul(&msig);
            let rhs = msig.mul(&ring.const_mul_matrix(&ring.apply_sigma(&a)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn companion_automorphism_normal_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let k = Field::new(2, 2).unwrap();
        for h in [0usize, 1] {
            for _ in 0..10 {
                let u = sample_regular_matrix(&k, 2, &mut rng);
                let ring = standard_ring(
                    &[u.get(0, 0).0, u.get(0, 1).0, u.get(1, 0).0, u.get(1, 1).0],
                    h,
                );
                let hat = ring.hat();
                for _ in 0..10 {
                    let x = Mat::from_fn(&k, 2, 2, |_, _| k.sample(&mut rng));
                    let direct = hat.apply_sigma(&x);
                    let via_def = ring.apply_sigma_inv(&x.transpose()).transpose();
                    assert_eq!(direct, via_def, "hat sigma = transpose . sigma^-1 . transpose");
                }
                // M_(sigma^) = M_sigma^T.
                assert_eq!(hat.sigma_matrix(), ring.sigma_matrix().transpose());
            }
        }
    }

    #[test]
    fn closed_form_multiplication_matrix_matches_definition() {
        let ring = standard_ring(&[2, 1, 1, 1], 1);
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for _ in 0..5 {
            let f = ring.sample(&mut rng);
            let grid = mrep(&ring, &f);
            let closed = ring.mul_matrix_poly(&f);
            for (i, row) in grid.iter().enumerate() {
                for (j, cell) in row.iter().enumerate() {
                    assert_eq!(closed.get(i, j), cell);
                }
            }
        }
        let reg = check_regular_representation(&ring, 10, &mut rng);
        assert!(reg.passed(), "{:?}", reg.failures.first());
    }

    #[test]
    fn transposition_identity_on_samples() {
        let ring = standard_ring(&[2, 1, 1, 1], 1);
        let hat = ring.hat();
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        let report = check_transposition(&ring, &hat, &|f| ring.theta(f), 10, &mut rng);
        assert_eq!(report.checked, 20);
        assert!(report.passed(), "{:?}", report.failures.first());
    }

    #[test]
    fn idempotent_dual_pairs() {
        let ring = standard_ring(&[2, 1, 1, 1], 1);
        let e = ring.standard_idempotent(0);
        assert!(ring.is_idempotent(&e));
        let d = ring.dual_from_idempotent(&e).unwrap();
        // R E_00 keeps one column of the matrix: rank n t = 4 of 8.
        assert_eq!(d.code.dim(), 4);
        assert_eq!(d.dual.dim(), 4);
        assert_eq!(biduality_check(&d.code), Ok(true));
        assert_eq!(biduality_check(&d.dual), Ok(true));
        // All invariant factors of the canonical generator are units.
        let gen = d.code.conv_generator().unwrap();
        assert!(gen.snf().iter().all(|p| p.is_unit()));

        // Conjugated idempotents work the same way.
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..3 {
            let g = sample_regular_matrix(ring.ext_field(), 2, &mut rng);
            let e2 = ring.conjugate(&g, &e).unwrap();
            assert!(ring.is_idempotent(&e2));
            let d2 = ring.dual_from_idempotent(&e2).unwrap();
            assert_eq!(d2.code.dim() + d2.dual.dim(), ring.rank());

            // The left annihilator of (1 - e) recovers R e.
            let gens = left_annihilator(&ring, &d2.complement);
            let grid: Vec<Vec<Poly>> = gens.iter().map(|g| ring.coord(g)).collect();
            let ann = Poly::code_from_rows(ring.base_field_ref(), ring.rank(), &grid);
            assert_eq!(ann, d2.code);
        }

        // Non-idempotents are rejected.
        let not_idem = ring.elt(&[
            Mat::identity(ring.ext_field(), 2),
            Mat::identity(ring.ext_field(), 2),
        ]);
        assert!(!ring.is_idempotent(&not_idem));
        assert_eq!(
            ring.dual_from_idempotent(&not_idem).unwrap_err(),
            ConvError::BadCertificate
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let ring = standard_ring(&[2, 1, 1, 1], 1);
        let mut rng = ChaCha8Rng::seed_from_u64(38);
        for _ in 0..10 {
            let f = ring.sample(&mut rng);
            let back = ring.coord_inv(&ring.coord(&f));
            assert_eq!(back, f);
        }
    }
}
