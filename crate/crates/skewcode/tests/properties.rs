//! Randomized invariants over the public API. Where the seeded verification
//! suites replay fixed scenarios, these properties let proptest explore the
//! input space (and shrink counterexamples) for the algebraic contracts:
//! field axioms, skew-polynomial arithmetic laws, and the canonical-form
//! guarantees of the matrix layer.

use proptest::prelude::*;

use skewcode::constacyclic::ConstaRing;
use skewcode::gf::{Felt, Field, FieldAut};
use skewcode::linalg::{Mat, Poly, PolyMat};
use skewcode::skewpoly::{gcrd_lclm, sigma_norm, Convention, Side, SkewPoly};

fn any_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::new(2, 2).unwrap()),
        Just(Field::new(2, 3).unwrap()),
        Just(Field::new(3, 2).unwrap()),
        Just(Field::new(2, 4).unwrap()),
    ]
}

/// A field together with `n` of its elements.
fn field_elts(n: usize) -> impl Strategy<Value = (Field, Vec<Felt>)> {
    any_field().prop_flat_map(move |f| {
        let q = f.q();
        prop::collection::vec(0..q, n).prop_map(move |vals| {
            let elts = vals.iter().map(|&v| f.elt(v).unwrap()).collect();
            (f.clone(), elts)
        })
    })
}

/// A field with `n` coefficient vectors, each of length in `1..=max_len`.
fn field_coeff_vecs(
    n: usize,
    max_len: usize,
) -> impl Strategy<Value = (Field, Vec<Vec<Felt>>)> {
    any_field().prop_flat_map(move |f| {
        let q = f.q();
        prop::collection::vec(prop::collection::vec(0..q, 1..=max_len), n).prop_map(
            move |grids| {
                let polys = grids
                    .iter()
                    .map(|g| g.iter().map(|&v| f.elt(v).unwrap()).collect())
                    .collect();
                (f.clone(), polys)
            },
        )
    })
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

// ---- finite fields ----------------------------------------------------------

proptest! {
    #[test]
    fn field_axioms((f, v) in field_elts(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Felt(0));
        if a != Felt(0) {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Felt(1));
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism((f, v) in field_elts(2), s in 0u32..4) {
        let (a, b) = (v[0], v[1]);
        let aut = FieldAut::new(&f, s);
        prop_assert_eq!(aut.apply(&f, f.add(a, b)), f.add(aut.apply(&f, a), aut.apply(&f, b)));
        prop_assert_eq!(aut.apply(&f, f.mul(a, b)), f.mul(aut.apply(&f, a), aut.apply(&f, b)));
        let m = f.m();
        prop_assert_eq!(aut.order(&f), m / gcd_u32(m, s));
    }

    #[test]
    fn trace_and_norm_land_in_the_subfield((f, v) in field_elts(2)) {
        let (a, b) = (v[0], v[1]);
        let m = f.m();
        for d in 1..=m {
            if !m.is_multiple_of(d) {
                continue;
            }
            let tr = f.trace_to(d, a).unwrap();
            prop_assert!(f.in_subfield(d, tr));
            // Trace is additive.
            prop_assert_eq!(
                f.trace_to(d, f.add(a, b)).unwrap(),
                f.add(tr, f.trace_to(d, b).unwrap())
            );
            let na = f.norm_to(d, a).unwrap();
            prop_assert!(f.in_subfield(d, na));
            // Norm is multiplicative.
            prop_assert_eq!(
                f.norm_to(d, f.mul(a, b)).unwrap(),
                f.mul(na, f.norm_to(d, b).unwrap())
            );
        }
    }
}

// ---- skew polynomials --------------------------------------------------------

proptest! {
    #[test]
    fn twist_rule_moves_coefficients_through_the_variable((f, v) in field_elts(1)) {
        let a = v[0];
        let s = FieldAut::new(&f, 1);

        // Left convention: x * a = sigma(a) * x.
        let x = SkewPoly::monomial(&f, s, Convention::Left, Felt(1), 1);
        let ca = SkewPoly::constant(&f, s, Convention::Left, a);
        let lhs = x.mul(&ca).unwrap();
        let expect = SkewPoly::monomial(&f, s, Convention::Left, s.apply(&f, a), 1);
        prop_assert_eq!(lhs, expect);

        // Right convention: a * z = z * sigma(a).
        let z = SkewPoly::monomial(&f, s, Convention::Right, Felt(1), 1);
        let ca = SkewPoly::constant(&f, s, Convention::Right, a);
        let lhs = ca.mul(&z).unwrap();
        let expect = SkewPoly::monomial(&f, s, Convention::Right, s.apply(&f, a), 1);
        prop_assert_eq!(lhs, expect);
    }

    #[test]
    fn skew_multiplication_is_associative_with_additive_degrees(
        (f, polys) in field_coeff_vecs(3, 4),
        left in any::<bool>(),
    ) {
        let s = FieldAut::new(&f, 1);
        let conv = if left { Convention::Left } else { Convention::Right };
        let fp = SkewPoly::new(&f, s, conv, &polys[0]);
        let gp = SkewPoly::new(&f, s, conv, &polys[1]);
        let hp = SkewPoly::new(&f, s, conv, &polys[2]);

        let fg = fp.mul(&gp).unwrap();
        if !fp.is_zero() && !gp.is_zero() {
            prop_assert_eq!(
                fg.degree().unwrap(),
                fp.degree().unwrap() + gp.degree().unwrap()
            );
        }
        let lhs = fg.mul(&hp).unwrap();
        let rhs = fp.mul(&gp.mul(&hp).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_round_trips(
        (f, polys) in field_coeff_vecs(2, 6),
        left_conv in any::<bool>(),
        left_side in any::<bool>(),
    ) {
        let s = FieldAut::new(&f, 1);
        let conv = if left_conv { Convention::Left } else { Convention::Right };
        let side = if left_side { Side::Left } else { Side::Right };
        let fp = SkewPoly::new(&f, s, conv, &polys[0]);
        let gp = SkewPoly::new(&f, s, conv, &polys[1]);
        prop_assume!(!gp.is_zero());

        let (q, r) = fp.divide(&gp, side).unwrap();
        let back = match side {
            Side::Right => q.mul(&gp).unwrap().add(&r).unwrap(),
            Side::Left => gp.mul(&q).unwrap().add(&r).unwrap(),
        };
        prop_assert_eq!(back, fp);
        prop_assert!(r.is_zero() || r.degree() < gp.degree());
    }

    #[test]
    fn gcrd_and_lclm_satisfy_the_degree_identity((f, polys) in field_coeff_vecs(2, 5)) {
        let s = FieldAut::new(&f, 1);
        let fp = SkewPoly::new(&f, s, Convention::Left, &polys[0]);
        let gp = SkewPoly::new(&f, s, Convention::Left, &polys[1]);
        prop_assume!(!fp.is_zero() && !gp.is_zero());

        let (gc, lc) = gcrd_lclm(&fp, &gp).unwrap();
        prop_assert!(fp.is_right_divisible_by(&gc).unwrap());
        prop_assert!(gp.is_right_divisible_by(&gc).unwrap());
        prop_assert!(lc.is_right_divisible_by(&fp).unwrap());
        prop_assert!(lc.is_right_divisible_by(&gp).unwrap());
        prop_assert_eq!(
            gc.degree().unwrap() + lc.degree().unwrap(),
            fp.degree().unwrap() + gp.degree().unwrap()
        );
    }

    #[test]
    fn right_evaluation_is_the_division_remainder(
        (f, polys) in field_coeff_vecs(1, 5),
        a_val in 0u32..16,
    ) {
        let s = FieldAut::new(&f, 1);
        let fp = SkewPoly::new(&f, s, Convention::Left, &polys[0]);
        let a = f.elt(a_val % f.q()).unwrap();

        let linear = SkewPoly::x_minus(&f, s, Convention::Left, a);
        let (_, r) = fp.divide(&linear, Side::Right).unwrap();
        let expect = if r.is_zero() { Felt(0) } else { r.coeff(0) };
        prop_assert_eq!(fp.right_eval(a).unwrap(), expect);
    }

    #[test]
    fn sigma_norms_compose((f, v) in field_elts(1), i in 0usize..5, j in 0usize..5) {
        let a = v[0];
        let s = FieldAut::new(&f, 1);
        // N_{i+j}(a) = N_i(a) * sigma^i(N_j(a))
        let lhs = sigma_norm(&f, &s, a, i + j);
        let rhs = f.mul(
            sigma_norm(&f, &s, a, i),
            s.pow(&f, i as u64).apply(&f, sigma_norm(&f, &s, a, j)),
        );
        prop_assert_eq!(lhs, rhs);
    }
}

// ---- matrices over GF(q) ------------------------------------------------------

fn any_mat() -> impl Strategy<Value = Mat> {
    (any_field(), 1usize..=4, 1usize..=4).prop_flat_map(|(f, r, c)| {
        let q = f.q();
        prop::collection::vec(0..q, r * c).prop_map(move |vals| {
            Mat::from_fn(&f, r, c, |i, j| f.elt(vals[i * c + j]).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn row_canonical_is_idempotent_and_spans_the_same_space(m in any_mat()) {
        let c = m.row_canonical();
        prop_assert_eq!(c.row_canonical(), c.clone());
        prop_assert!(m.row_space_eq(&c));
    }

    #[test]
    fn nullspace_annihilates_and_complements_rank(m in any_mat()) {
        let n = m.nullspace();
        prop_assert!(n.mul(&m.transpose()).is_zero());
        prop_assert_eq!(n.rank() + m.rank(), m.cols());
    }
}

// ---- matrices over GF(q)[z] ----------------------------------------------------

#[derive(Clone, Debug)]
enum RowOp {
    Swap(usize, usize),
    AddMultiple(usize, usize, Vec<u32>),
    ScaleUnit(usize, u32),
}

fn any_polymat() -> impl Strategy<Value = PolyMat> {
    (any_field(), 1usize..=3, 1usize..=3).prop_flat_map(|(f, r, c)| {
        let q = f.q();
        prop::collection::vec(prop::collection::vec(0..q, 1..=3), r * c).prop_map(
            move |cells| {
                let grid: Vec<Vec<Poly>> = (0..r)
                    .map(|i| {
                        (0..c)
                            .map(|j| {
                                let digits: Vec<Felt> = cells[i * c + j]
                                    .iter()
                                    .map(|&v| f.elt(v).unwrap())
                                    .collect();
                                Poly::new(&f, &digits)
                            })
                            .collect()
                    })
                    .collect();
                PolyMat::from_rows(&f, &grid)
            },
        )
    })
}

fn row_ops() -> impl Strategy<Value = Vec<RowOp>> {
    let one = prop_oneof![
        (0usize..3, 0usize..3).prop_map(|(i, j)| RowOp::Swap(i, j)),
        (0usize..3, 0usize..3, prop::collection::vec(0u32..16, 1..=3))
            .prop_map(|(i, j, p)| RowOp::AddMultiple(i, j, p)),
        (0usize..3, 0u32..16).prop_map(|(i, c)| RowOp::ScaleUnit(i, c)),
    ];
    prop::collection::vec(one, 0..=6)
}

/// Apply elementary row operations (all invertible over GF(q)[z]) to `m`.
fn apply_row_ops(m: &PolyMat, ops: &[RowOp]) -> PolyMat {
    let f = m.field().clone();
    let rows = m.rows();
    let mut out = m.clone();
    for op in ops {
        match op {
            RowOp::Swap(i, j) => {
                let (i, j) = (i % rows, j % rows);
                if i != j {
                    for k in 0..out.cols() {
                        let a = out.get(i, k).clone();
                        let b = out.get(j, k).clone();
                        out.set(i, k, b);
                        out.set(j, k, a);
                    }
                }
            }
            RowOp::AddMultiple(i, j, digits) => {
                let (i, j) = (i % rows, j % rows);
                if i != j {
                    let coeffs: Vec<Felt> =
                        digits.iter().map(|&v| f.elt(v % f.q()).unwrap()).collect();
                    let p = Poly::new(&f, &coeffs);
                    for k in 0..out.cols() {
                        let add = p.mul(out.get(j, k));
                        out.set(i, k, out.get(i, k).add(&add));
                    }
                }
            }
            RowOp::ScaleUnit(i, c) => {
                let i = i % rows;
                let unit = f.elt(1 + c % (f.q() - 1)).unwrap();
                let p = Poly::constant(&f, unit);
                for k in 0..out.cols() {
                    out.set(i, k, p.mul(out.get(i, k)));
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hermite_form_certificate_holds(m in any_polymat()) {
        let (h, u) = m.hnf();
        prop_assert_eq!(u.mul(&m), h);
        // The transform is unimodular: its determinant is a nonzero constant.
        prop_assert!(u.det().is_unit());
    }

    #[test]
    fn canonical_form_is_a_module_invariant(m in any_polymat(), ops in row_ops()) {
        let w = apply_row_ops(&m, &ops);
        prop_assert_eq!(w.row_canonical(), m.row_canonical());
        prop_assert!(w.row_module_eq(&m));
    }

    #[test]
    fn smith_factors_form_a_divisibility_chain(m in any_polymat()) {
        let factors = m.snf();
        for w in factors.windows(2) {
            // A zero factor can only be followed by zeros.
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[0].divides(&w[1]));
            }
        }
    }

    #[test]
    fn left_kernel_annihilates(m in any_polymat()) {
        let k = m.left_kernel();
        if k.rows() > 0 {
            prop_assert!(k.mul(&m).is_zero());
        }
    }
}

// ---- quotient-ring anti-isomorphism ---------------------------------------------

fn any_consta_ring() -> impl Strategy<Value = ConstaRing> {
    let mk = |p: u32, m: u32, n: usize, u: u32| {
        let f = Field::new(p, m).unwrap();
        ConstaRing::new(&f, FieldAut::new(&f, 1), n, Felt(u)).unwrap()
    };
    prop_oneof![
        Just(mk(2, 2, 2, 1)),
        Just(mk(2, 3, 3, 1)),
        Just(mk(3, 2, 2, 1)),
        Just(mk(3, 2, 2, 2)),
        Just(mk(2, 2, 4, 1)),
    ]
}

proptest! {
    #[test]
    fn theta_is_an_involutive_anti_isomorphism(
        ring in any_consta_ring(),
        seed in prop::collection::vec(0u32..16, 8),
    ) {
        let f = ring.field().clone();
        let n = ring.n();
        let elt = |vals: &[u32]| -> Vec<Felt> {
            (0..n).map(|i| f.elt(vals[i] % f.q()).unwrap()).collect()
        };
        let a = elt(&seed[..4]);
        let b = elt(&seed[4..]);
        let hat = ring.hat();

        // Anti-multiplicative.
        let lhs = ring.theta(&ring.ring_mul(&a, &b));
        let rhs = hat.ring_mul(&ring.theta(&b), &ring.theta(&a));
        prop_assert_eq!(lhs, rhs);

        // Transposes multiplication matrices.
        prop_assert_eq!(
            hat.mul_matrix(&ring.theta(&a)),
            ring.mul_matrix(&a).transpose()
        );

        // Round-trips through the companion ring.
        prop_assert_eq!(hat.theta(&ring.theta(&a)), a);
    }
}
