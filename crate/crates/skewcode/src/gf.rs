//! Finite fields GF(p^m) with exact, table-backed arithmetic.
//!
//! A [`Field`] is a cheaply clonable handle (internally reference-counted)
//! holding the characteristic, the monic irreducible modulus, and
//! discrete-log tables built from a primitive element. Elements ([`Felt`])
//! are canonical integers in `[0, q)`: the element `sum c_i y^i` in the
//! polynomial basis is packed as the integer `sum c_i p^i`. All operations
//! go through the owning `Field`, mirroring the usual context-object style
//! for finite-field crates.
//!
//! Fields are capped at `q <= 2^16` so the exp/log tables stay trivial; the
//! constructions in this crate live on fields far below that bound.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

/// Largest permitted field size (inclusive).
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// An element of a [`Field`]: the integer `sum c_i p^i` for polynomial-basis
/// coordinates `(c_0, ..., c_{m-1})`. Only meaningful relative to its field.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Felt(pub u32);

/// Errors from field construction and arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GfError {
    /// The requested characteristic is not a prime number.
    CompositeCharacteristic,
    /// The requested field has more than `MAX_FIELD_SIZE` elements.
    FieldTooLarge,
    /// A caller-supplied modulus is malformed: wrong length, digits out of
    /// range, or not monic.
    InvalidModulus,
    /// A caller-supplied modulus factors over GF(p).
    ReducibleModulus,
    /// Division or inversion of zero.
    DivisionByZero,
    /// A subfield degree that does not divide the extension degree.
    NonDivisorDegree,
    /// The supplied elements are linearly dependent over the subfield.
    NotABasis,
    /// Hilbert 90 was asked for an element whose norm is not one.
    NormNotOne,
}

impl core::fmt::Display for GfError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GfError::CompositeCharacteristic => write!(f, "characteristic is not prime"),
            GfError::FieldTooLarge => write!(f, "field exceeds {} elements", MAX_FIELD_SIZE),
            GfError::InvalidModulus => write!(f, "modulus is malformed (length, range, or leading coefficient)"),
            GfError::ReducibleModulus => write!(f, "modulus is reducible over the prime field"),
            GfError::DivisionByZero => write!(f, "division by zero"),
            GfError::NonDivisorDegree => write!(f, "subfield degree does not divide the extension degree"),
            GfError::NotABasis => write!(f, "elements are linearly dependent over the subfield"),
            GfError::NormNotOne => write!(f, "element has norm different from one"),
        }
    }
}

impl core::error::Error for GfError {}

struct FieldInner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus digits `(c_0, ..., c_m)`, `c_m == 1`.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a primitive element `g`, `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[exp[i]] = i`; `log[0]` is an unused sentinel.
    log: Vec<u32>,
    generator: u32,
}

/// A finite field GF(p^m). Clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl core::fmt::Debug for Field {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Digits of `v` in base `p`, exactly `len` of them (v < p^len).
fn digits_of(v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    let mut v = v;
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

fn pack_digits(digits: &[u32], p: u32) -> u32 {
    let mut v = 0u64;
    for &d in digits.iter().rev() {
        v = v * p as u64 + d as u64;
    }
    v as u32
}

/// Degree of a digit polynomial, or `None` for zero.
fn poly_deg(c: &[u32]) -> Option<usize> {
    c.iter().rposition(|&d| d != 0)
}

/// Remainder of dividing `num` by monic-up-to-unit `den`, over GF(p).
fn poly_rem_p(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let dd = poly_deg(den).expect("divisor must be nonzero");
    let lead_inv = mod_inv(den[dd], p);
    let mut r: Vec<u32> = num.to_vec();
    while let Some(dr) = poly_deg(&r) {
        if dr < dd {
            break;
        }
        let c = (r[dr] * lead_inv) % p;
        for i in 0..=dd {
            let t = (c as u64 * den[i] as u64) % p as u64;
            r[dr - dd + i] = ((r[dr - dd + i] as u64 + p as u64 - t) % p as u64) as u32;
        }
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p, fine at this scale.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Is the digit polynomial irreducible over GF(p)? Exhaustive trial division
/// by monic polynomials of degree `1..=deg/2` — exact and cheap at the `q <=
/// 2^16` scale this crate enforces.
fn poly_irreducible_p(c: &[u32], p: u32) -> bool {
    let deg = match poly_deg(c) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for v in 0..count {
            let mut cand = digits_of(v as u32, p, d);
            cand.push(1); // monic of degree d
            let r = poly_rem_p(c, &cand, p);
            if poly_deg(&r).is_none() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Build GF(p^m) with an explicit monic irreducible modulus, given as
    /// digits `(c_0, ..., c_m)` with `c_m = 1`.
    pub fn with_modulus(p: u32, m: u32, modulus: &[u32]) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::CompositeCharacteristic);
        }
        if m == 0 {
            return Err(GfError::InvalidModulus);
        }
        let q = (p as u64).checked_pow(m).ok_or(GfError::FieldTooLarge)?;
        if q > MAX_FIELD_SIZE {
            return Err(GfError::FieldTooLarge);
        }
        if modulus.len() != m as usize + 1
            || modulus[m as usize] != 1
            || modulus.iter().any(|&d| d >= p)
        {
            return Err(GfError::InvalidModulus);
        }
        if !poly_irreducible_p(modulus, p) {
            return Err(GfError::ReducibleModulus);
        }
        Ok(Self::build(p, m, q as u32, modulus.to_vec()))
    }

    /// Build GF(p^m) with the default modulus: the lexicographically first
    /// monic irreducible polynomial of degree m, ordering candidates by the
    /// packed value of their low digits.
    pub fn new(p: u32, m: u32) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::CompositeCharacteristic);
        }
        if m == 0 {
            return Err(GfError::InvalidModulus);
        }
        let q = (p as u64).checked_pow(m).ok_or(GfError::FieldTooLarge)?;
        if q > MAX_FIELD_SIZE {
            return Err(GfError::FieldTooLarge);
        }
        for v in 0..q {
            let mut cand = digits_of(v as u32, p, m as usize);
            cand.push(1);
            if poly_irreducible_p(&cand, p) {
                return Ok(Self::build(p, m, q as u32, cand));
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over GF(p)")
    }

    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Field {
        // Multiply in the polynomial basis, reducing by the modulus. Used
        // only to bootstrap the exp/log tables.
        let slow_mul = |a: u32, b: u32| -> u32 {
            let da = digits_of(a, p, m as usize);
            let db = digits_of(b, p, m as usize);
            let mut prod = vec![0u64; 2 * m as usize];
            for (i, &ca) in da.iter().enumerate() {
                if ca == 0 {
                    continue;
                }
                for (j, &cb) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + ca as u64 * cb as u64) % p as u64;
                }
            }
            // x^(m+k) == -sum_i modulus[i] x^(i+k)
            for k in (m as usize..2 * m as usize).rev() {
                let c = prod[k];
                if c == 0 {
                    continue;
                }
                prod[k] = 0;
                for i in 0..m as usize {
                    let t = c * modulus[i] as u64 % p as u64;
                    prod[k - m as usize + i] = (prod[k - m as usize + i] + p as u64 - t) % p as u64;
                }
            }
            let digits: Vec<u32> = prod[..m as usize].iter().map(|&d| d as u32).collect();
            pack_digits(&digits, p)
        };

        let generator = find_generator(q, slow_mul);
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for i in 0..q - 1 {
            exp.push(acc);
            log[acc as usize] = i;
            acc = slow_mul(acc, generator);
        }
        debug_assert_eq!(acc, 1, "generator order must be q - 1");

        Field(Arc::new(FieldInner {
            p,
            m,
            q,
            modulus,
            exp,
            log,
            generator,
        }))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    /// Number of elements, `p^m`.
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus digits `(c_0, ..., c_m)`.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// A fixed primitive element (generator of the multiplicative group).
    pub fn generator(&self) -> Felt {
        Felt(self.0.generator)
    }

    pub fn zero(&self) -> Felt {
        Felt(0)
    }

    pub fn one(&self) -> Felt {
        Felt(1)
    }

    /// All q elements in canonical integer order.
    pub fn elements(&self) -> impl Iterator<Item = Felt> {
        (0..self.0.q).map(Felt)
    }

    /// Validated element from its canonical integer.
    pub fn elt(&self, v: u32) -> Option<Felt> {
        (v < self.0.q).then_some(Felt(v))
    }

    /// Polynomial-basis digits `(c_0, ..., c_{m-1})` of an element.
    pub fn digits(&self, x: Felt) -> Vec<u32> {
        digits_of(x.0, self.0.p, self.0.m as usize)
    }

    pub fn add(&self, x: Felt, y: Felt) -> Felt {
        let f = &*self.0;
        if f.p == 2 {
            return Felt(x.0 ^ y.0);
        }
        let (mut a, mut b) = (x.0, y.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..f.m {
            out += (a % f.p + b % f.p) % f.p * place;
            a /= f.p;
            b /= f.p;
            place *= f.p;
        }
        Felt(out)
    }

    pub fn neg(&self, x: Felt) -> Felt {
        let f = &*self.0;
        if f.p == 2 {
            return x;
        }
        let mut a = x.0;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..f.m {
            out += (f.p - a % f.p) % f.p * place;
            a /= f.p;
            place *= f.p;
        }
        Felt(out)
    }

    pub fn sub(&self, x: Felt, y: Felt) -> Felt {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Felt, y: Felt) -> Felt {
        let f = &*self.0;
        if x.0 == 0 || y.0 == 0 {
            return Felt(0);
        }
        let i = (f.log[x.0 as usize] + f.log[y.0 as usize]) % (f.q - 1);
        Felt(f.exp[i as usize])
    }

    pub fn inv(&self, x: Felt) -> Result<Felt, GfError> {
        let f = &*self.0;
        if x.0 == 0 {
            return Err(GfError::DivisionByZero);
        }
        let i = (f.q - 1 - f.log[x.0 as usize]) % (f.q - 1);
        Ok(Felt(f.exp[i as usize]))
    }

    pub fn div(&self, x: Felt, y: Felt) -> Result<Felt, GfError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e` with an integer exponent; negative exponents invert first, so
    /// `pow(0, e < 0)` is an error and `pow(0, 0) = 1`.
    pub fn pow(&self, x: Felt, e: i64) -> Result<Felt, GfError> {
        let f = &*self.0;
        if e == 0 {
            return Ok(Felt(1));
        }
        if x.0 == 0 {
            return if e > 0 { Ok(Felt(0)) } else { Err(GfError::DivisionByZero) };
        }
        let period = (f.q - 1) as i64;
        let e_red = ((e % period) + period) % period;
        let i = (f.log[x.0 as usize] as u64 * e_red as u64) % (f.q - 1) as u64;
        Ok(Felt(f.exp[i as usize]))
    }

    /// The Frobenius power `x -> x^(p^s)`.
    pub fn frobenius(&self, s: u32, x: Felt) -> Felt {
        let f = &*self.0;
        if x.0 == 0 || f.q == 2 {
            return x;
        }
        let s = s % f.m;
        // p^m = q == 1 mod (q - 1), so reduce the tower exponent mod q - 1.
        let mut e = 1u64;
        for _ in 0..s {
            e = e * f.p as u64 % (f.q - 1) as u64;
        }
        let i = f.log[x.0 as usize] as u64 * e % (f.q - 1) as u64;
        Felt(f.exp[i as usize])
    }

    /// Trace onto the subfield GF(p^d): `sum_i x^(p^(d i))`.
    pub fn trace_to(&self, d: u32, x: Felt) -> Result<Felt, GfError> {
        let m = self.0.m;
        if d == 0 || !m.is_multiple_of(d) {
            return Err(GfError::NonDivisorDegree);
        }
        let mut acc = Felt(0);
        for i in 0..m / d {
            acc = self.add(acc, self.frobenius(d * i, x));
        }
        Ok(acc)
    }

    /// Norm onto the subfield GF(p^d): `prod_i x^(p^(d i))`.
    pub fn norm_to(&self, d: u32, x: Felt) -> Result<Felt, GfError> {
        let m = self.0.m;
        if d == 0 || !m.is_multiple_of(d) {
            return Err(GfError::NonDivisorDegree);
        }
        let mut acc = Felt(1);
        for i in 0..m / d {
            acc = self.mul(acc, self.frobenius(d * i, x));
        }
        Ok(acc)
    }

    /// Does `x` lie in the subfield GF(p^d)?
    pub fn in_subfield(&self, d: u32, x: Felt) -> bool {
        self.frobenius(d % self.0.m, x) == x
    }

    /// A uniformly sampled element. (The modulo bias is below 2^-16 and
    /// irrelevant for the seeded checking this crate does; determinism for
    /// a fixed RNG stream is the contract that matters.)
    pub fn sample(&self, rng: &mut dyn rand_core::RngCore) -> Felt {
        Felt(rng.next_u32() % self.0.q)
    }
}

fn find_generator(q: u32, slow_mul: impl Fn(u32, u32) -> u32) -> u32 {
    if q == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut n = q - 1;
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    let pow = |mut base: u32, mut e: u32| -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = slow_mul(acc, base);
            }
            base = slow_mul(base, base);
            e >>= 1;
        }
        acc
    };
    for g in 2..q {
        if factors.iter().all(|&f| pow(g, (q - 1) / f) != 1) {
            return g;
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

/// A power of the absolute Frobenius on a fixed field: `x -> x^(p^s)`.
/// Composition and inversion act on the exponent mod m, so every value is a
/// genuine automorphism of GF(p^m).
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct FieldAut {
    s: u32,
}

impl FieldAut {
    /// The automorphism `x -> x^(p^s)` of `field`.
    pub fn new(field: &Field, s: u32) -> FieldAut {
        FieldAut { s: s % field.m() }
    }

    pub fn identity() -> FieldAut {
        FieldAut { s: 0 }
    }

    /// Frobenius exponent, normalized to `[0, m)`.
    pub fn exponent(&self) -> u32 {
        self.s
    }

    pub fn is_identity(&self) -> bool {
        self.s == 0
    }

    pub fn apply(&self, field: &Field, x: Felt) -> Felt {
        field.frobenius(self.s, x)
    }

    /// Multiplicative order in the automorphism group.
    pub fn order(&self, field: &Field) -> u32 {
        let m = field.m();
        m / gcd(m, self.s)
    }

    /// Degree over the prime field of the fixed subfield.
    pub fn fixed_degree(&self, field: &Field) -> u32 {
        gcd(field.m(), self.s)
    }

    pub fn inverse(&self, field: &Field) -> FieldAut {
        let m = field.m();
        FieldAut { s: (m - self.s % m) % m }
    }

    /// `self` composed with itself `k` times.
    pub fn pow(&self, field: &Field, k: u64) -> FieldAut {
        let m = field.m() as u64;
        FieldAut {
            s: (self.s as u64 * (k % m) % m) as u32,
        }
    }

    pub fn compose(&self, field: &Field, other: &FieldAut) -> FieldAut {
        FieldAut {
            s: (self.s + other.s) % field.m(),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An ordered basis of GF(p^m) over the subfield GF(p^d), with its
/// structural flags computed once at construction.
#[derive(Clone, PartialEq, Debug)]
pub struct SubfieldBasis {
    field: Field,
    subfield_degree: u32,
    elements: Vec<Felt>,
    normal: bool,
    self_dual: bool,
}

impl SubfieldBasis {
    /// Validate `elements` as an ordered basis of `field` over GF(p^d).
    /// Independence is decided exactly by the trace Gram matrix, which is
    /// nonsingular iff the elements are independent (the trace form of a
    /// finite-field extension is nondegenerate).
    pub fn new(field: &Field, d: u32, elements: &[Felt]) -> Result<SubfieldBasis, GfError> {
        let m = field.m();
        if d == 0 || !m.is_multiple_of(d) {
            return Err(GfError::NonDivisorDegree);
        }
        let t = (m / d) as usize;
        if elements.len() != t {
            return Err(GfError::NotABasis);
        }
        let gram = gram_matrix(field, d, elements)?;
        if !gram_nonsingular(field, &gram) {
            return Err(GfError::NotABasis);
        }
        let normal = (0..t).all(|i| elements[i] == field.frobenius(d * i as u32, elements[0]));
        let self_dual = is_identity_grid(&gram);
        Ok(SubfieldBasis {
            field: field.clone(),
            subfield_degree: d,
            elements: elements.to_vec(),
            normal,
            self_dual,
        })
    }

    /// The conjugate basis `{a, a^(p^d), a^(p^2d), ...}` of a normal
    /// element, or `NotABasis` if the orbit is dependent.
    pub fn from_normal_element(field: &Field, d: u32, alpha: Felt) -> Result<SubfieldBasis, GfError> {
        let m = field.m();
        if d == 0 || !m.is_multiple_of(d) {
            return Err(GfError::NonDivisorDegree);
        }
        let t = m / d;
        let orbit: Vec<Felt> = (0..t).map(|i| field.frobenius(d * i, alpha)).collect();
        Self::new(field, d, &orbit)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn subfield_degree(&self) -> u32 {
        self.subfield_degree
    }

    pub fn elements(&self) -> &[Felt] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Is this the Frobenius orbit of its first element, in orbit order?
    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// Does the basis coincide with its own dual (trace Gram = identity)?
    pub fn is_self_dual(&self) -> bool {
        self.self_dual
    }

    /// Trace Gram matrix `G[i][j] = Tr(b_i b_j)` (entries lie in the
    /// subfield, represented inside the big field).
    pub fn gram(&self) -> Vec<Vec<Felt>> {
        gram_matrix(&self.field, self.subfield_degree, &self.elements)
            .expect("degree was validated at construction")
    }

    /// The dual basis `{b*_j}` with `Tr(b*_j b_i) = delta_ij`, computed by
    /// inverting the Gram matrix: `b*_j = sum_k (G^-1)[j][k] b_k`.
    pub fn dual(&self) -> SubfieldBasis {
        let f = &self.field;
        let g = self.gram();
        let ginv = invert_grid(f, &g).expect("Gram matrix was nonsingular at construction");
        let duals: Vec<Felt> = (0..self.elements.len())
            .map(|j| {
                let mut acc = Felt(0);
                for (k, &bk) in self.elements.iter().enumerate() {
                    acc = f.add(acc, f.mul(ginv[j][k], bk));
                }
                acc
            })
            .collect();
        SubfieldBasis::new(f, self.subfield_degree, &duals)
            .expect("the dual of a basis is a basis")
    }

    /// Coordinates of `x` in this basis: `c_i = Tr(b*_i x)`, each lying in
    /// the subfield (represented inside the big field). Satisfies
    /// `x = sum c_i b_i`.
    pub fn coords(&self, x: Felt) -> Vec<Felt> {
        let dual = self.dual();
        dual.elements
            .iter()
            .map(|&bj| {
                self.field
                    .trace_to(self.subfield_degree, self.field.mul(bj, x))
                    .expect("degree was validated at construction")
            })
            .collect()
    }

    /// Rebuild an element from subfield coordinates.
    pub fn from_coords(&self, coords: &[Felt]) -> Felt {
        let mut acc = Felt(0);
        for (c, &b) in coords.iter().zip(self.elements.iter()) {
            acc = self.field.add(acc, self.field.mul(*c, b));
        }
        acc
    }
}

fn gram_matrix(field: &Field, d: u32, elements: &[Felt]) -> Result<Vec<Vec<Felt>>, GfError> {
    let t = elements.len();
    let mut g = vec![vec![Felt(0); t]; t];
    for i in 0..t {
        for j in 0..t {
            g[i][j] = field.trace_to(d, field.mul(elements[i], elements[j]))?;
        }
    }
    Ok(g)
}

fn is_identity_grid(g: &[Vec<Felt>]) -> bool {
    g.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &e)| e == Felt((i == j) as u32)))
}

fn gram_nonsingular(field: &Field, g: &[Vec<Felt>]) -> bool {
    invert_grid(field, g).is_some()
}

/// Invert a small square matrix of field elements by Gauss-Jordan; `None`
/// when singular. (The general matrix type lives in `linalg`; this local
/// copy keeps `gf` self-contained at the bottom of the module stack.)
fn invert_grid(field: &Field, g: &[Vec<Felt>]) -> Option<Vec<Vec<Felt>>> {
    let n = g.len();
    let mut a: Vec<Vec<Felt>> = g.to_vec();
    let mut inv: Vec<Vec<Felt>> = (0..n)
        .map(|i| (0..n).map(|j| Felt((i == j) as u32)).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != Felt(0))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pinv = field.inv(a[col][col]).ok()?;
        for j in 0..n {
            a[col][j] = field.mul(a[col][j], pinv);
            inv[col][j] = field.mul(inv[col][j], pinv);
        }
        for r in 0..n {
            if r != col && a[r][col] != Felt(0) {
                let factor = a[r][col];
                for j in 0..n {
                    let t = field.mul(factor, a[col][j]);
                    a[r][j] = field.sub(a[r][j], t);
                    let t = field.mul(factor, inv[col][j]);
                    inv[r][j] = field.sub(inv[r][j], t);
                }
            }
        }
    }
    Some(inv)
}

/// Is `alpha` a normal element of `field` over GF(p^d) (its Frobenius orbit
/// a basis)?
pub fn is_normal_element(field: &Field, d: u32, alpha: Felt) -> bool {
    SubfieldBasis::from_normal_element(field, d, alpha).is_ok()
}

/// Smallest normal element (by canonical integer value) whose conjugate
/// basis is self-dual, if one exists.
pub fn find_self_dual_normal(field: &Field, d: u32) -> Result<Option<SubfieldBasis>, GfError> {
    let m = field.m();
    if d == 0 || !m.is_multiple_of(d) {
        return Err(GfError::NonDivisorDegree);
    }
    let t = m / d;
    for v in 1..field.q() {
        let alpha = Felt(v);
        let orbit: Vec<Felt> = (0..t).map(|i| field.frobenius(d * i, alpha)).collect();
        let gram = gram_matrix(field, d, &orbit)?;
        if is_identity_grid(&gram) {
            // Identity Gram certifies independence, so this is a basis.
            return Ok(Some(
                SubfieldBasis::new(field, d, &orbit).expect("identity Gram implies a basis"),
            ));
        }
    }
    Ok(None)
}

/// Solve Hilbert 90 for a cyclic extension: given `mu` with norm 1 along the
/// orbit of `sigma`, return the least `nu` with `mu = sigma(nu) nu^-1`.
/// The scan is exhaustive in ascending element order, so the answer is
/// deterministic.
pub fn hilbert90(field: &Field, sigma: &FieldAut, mu: Felt) -> Result<Felt, GfError> {
    if mu == Felt(0) {
        return Err(GfError::NormNotOne);
    }
    let t = sigma.order(field);
    let mut norm = Felt(1);
    for i in 0..t {
        norm = field.mul(norm, sigma.pow(field, i as u64).apply(field, mu));
    }
    if norm != Felt(1) {
        return Err(GfError::NormNotOne);
    }
    for v in 1..field.q() {
        let nu = Felt(v);
        let ratio = field
            .div(sigma.apply(field, nu), nu)
            .expect("nu is nonzero");
        if ratio == mu {
            return Ok(nu);
        }
    }
    unreachable!("Hilbert 90 guarantees a solution when the norm is one")
}
