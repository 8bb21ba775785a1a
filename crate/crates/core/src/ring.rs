//! Finite unital rings given by explicit operation tables.
//!
//! A ring of size `n` stores its addition and multiplication as flat `n × n`
//! index tables.  All derived notions (units, annihilators, radical,
//! regularity) are computed by exhaustive scans over those tables, so every
//! answer is exact.

use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Caps, Error, Result};
use crate::group::FiniteGroup;

/// Index of a ring element into its operation tables.
pub type Elem = usize;

fn fits_u16(n: usize) -> bool {
    n <= u16::MAX as usize + 1
}

/// Extra structure carried by rings built as group rings `R(G)`.
#[derive(Clone)]
pub struct GroupRingMeta {
    pub base: Arc<FiniteRing>,
    pub group: Arc<FiniteGroup>,
}

/// A finite unital ring with explicit operation tables.
#[derive(Clone)]
pub struct FiniteRing {
    label: String,
    n: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    one: Elem,
    pub(crate) group_meta: Option<GroupRingMeta>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        // Structural equality: tables and distinguished elements, not labels.
        self.n == other.n
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}
impl Eq for FiniteRing {}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, n={})", self.label, self.n)
    }
}

impl FiniteRing {
    /// Validates the tables against the ring axioms and builds the ring.
    ///
    /// Fails with [`Error::AxiomViolation`] naming the first broken axiom and
    /// a witness triple of element indices.
    pub fn from_tables(
        label: impl Into<String>,
        n: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: Elem,
        one: Elem,
    ) -> Result<FiniteRing> {
        let label = label.into();
        let fail = |axiom, w: (usize, usize, usize)| Error::AxiomViolation { axiom, witness: w };
        if n == 0 || !fits_u16(n) || add.len() != n * n || mul.len() != n * n || zero >= n || one >= n
        {
            return Err(fail("table-shape", (n, zero, one)));
        }
        if n > 1 && zero == one {
            return Err(fail("zero-ne-one", (zero, one, 0)));
        }
        let at = |t: &[u16], a: usize, b: usize| t[a * n + b] as usize;
        for a in 0..n {
            for b in 0..n {
                if at(&add, a, b) >= n {
                    return Err(fail("add-closure", (a, b, at(&add, a, b))));
                }
                if at(&mul, a, b) >= n {
                    return Err(fail("mul-closure", (a, b, at(&mul, a, b))));
                }
                if at(&add, a, b) != at(&add, b, a) {
                    return Err(fail("add-commutative", (a, b, 0)));
                }
            }
            if at(&add, a, zero) != a {
                return Err(fail("add-zero", (a, zero, 0)));
            }
            if at(&mul, a, one) != a || at(&mul, one, a) != a {
                return Err(fail("one-identity", (a, one, 0)));
            }
        }
        let mut neg = vec![u16::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| at(&add, a, b) == zero) {
                Some(b) => neg[a] = b as u16,
                None => return Err(fail("add-inverse", (a, 0, 0))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(&add, at(&add, a, b), c) != at(&add, a, at(&add, b, c)) {
                        return Err(fail("add-associative", (a, b, c)));
                    }
                    if at(&mul, at(&mul, a, b), c) != at(&mul, a, at(&mul, b, c)) {
                        return Err(fail("mul-associative", (a, b, c)));
                    }
                    if at(&mul, a, at(&add, b, c)) != at(&add, at(&mul, a, b), at(&mul, a, c)) {
                        return Err(fail("left-distributive", (a, b, c)));
                    }
                    if at(&mul, at(&add, a, b), c) != at(&add, at(&mul, a, c), at(&mul, b, c)) {
                        return Err(fail("right-distributive", (a, b, c)));
                    }
                }
            }
        }
        Ok(FiniteRing {
            label,
            n,
            add,
            mul,
            neg,
            zero,
            one,
            group_meta: None,
        })
    }

    /// Builds a ring assumed valid by construction (internal constructors).
    pub(crate) fn from_tables_unchecked(
        label: impl Into<String>,
        n: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: Elem,
        one: Elem,
    ) -> FiniteRing {
        assert!(n > 0 && fits_u16(n));
        let mut neg = vec![u16::MAX; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| add[a * n + b] as usize == zero)
                .expect("additive inverse");
            neg[a] = b as u16;
        }
        FiniteRing {
            label: label.into(),
            n,
            add,
            mul,
            neg,
            zero,
            one,
            group_meta: None,
        }
    }

    /// Re-runs full table validation (used by tests and file loading).
    pub fn validate(&self) -> Result<()> {
        FiniteRing::from_tables(
            self.label.clone(),
            self.n,
            self.add.clone(),
            self.mul.clone(),
            self.zero,
            self.one,
        )
        .map(|_| ())
    }

    pub fn size(&self) -> usize {
        self.n
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }
    pub fn zero(&self) -> Elem {
        self.zero
    }
    pub fn one(&self) -> Elem {
        self.one
    }
    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.n + b] as usize
    }
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.n + b] as usize
    }
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as usize
    }
    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }
    pub fn add_table(&self) -> &[u16] {
        &self.add
    }
    pub fn mul_table(&self) -> &[u16] {
        &self.mul
    }

    /// `k · 1` for a non-negative integer `k`.
    pub fn scalar_int(&self, k: usize) -> Elem {
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.add(acc, self.one);
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Two-sided inverse of `a`, when it exists.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        (0..self.n).find(|&b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// All elements with a two-sided inverse.
    pub fn units(self: &Arc<Self>) -> ElementSubset {
        let bits = BitSet::from_indices(self.n, (0..self.n).filter(|&a| self.is_unit(a)));
        ElementSubset::from_bits(self, bits)
    }

    /// Whether `k · 1` is a unit.
    pub fn is_invertible_scalar(&self, k: usize) -> bool {
        self.is_unit(self.scalar_int(k))
    }

    pub(crate) fn left_ann_bits(&self, xs: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.n);
        'outer: for r in 0..self.n {
            for x in xs.iter() {
                if self.mul(r, x) != self.zero {
                    continue 'outer;
                }
            }
            out.insert(r);
        }
        out
    }

    pub(crate) fn right_ann_bits(&self, xs: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.n);
        'outer: for r in 0..self.n {
            for x in xs.iter() {
                if self.mul(x, r) != self.zero {
                    continue 'outer;
                }
            }
            out.insert(r);
        }
        out
    }

    /// `{r | r·X = 0}`; always a left ideal.
    pub fn left_annihilator(self: &Arc<Self>, xs: &ElementSubset) -> ElementSubset {
        ElementSubset::from_bits(self, self.left_ann_bits(&xs.bits))
    }

    /// `{r | X·r = 0}`; always a right ideal.
    pub fn right_annihilator(self: &Arc<Self>, xs: &ElementSubset) -> ElementSubset {
        ElementSubset::from_bits(self, self.right_ann_bits(&xs.bits))
    }

    /// Closure of `seeds` under addition and one-sided multiplication.
    ///
    /// `left = true` closes under `r·x` (left ideal), otherwise under `x·r`.
    /// The ideal generated by `X` is the additive span of `R·X` (resp.
    /// `X·R`), so the scalar orbit feeds a plain additive span.
    pub(crate) fn ideal_closure_bits(&self, seeds: &[Elem], left: bool) -> BitSet {
        let orbit: Vec<Elem> = seeds
            .iter()
            .flat_map(|&s| (0..self.n).map(move |r| (r, s)))
            .map(|(r, s)| if left { self.mul(r, s) } else { self.mul(s, r) })
            .collect();
        crate::bits::additive_span_by(self.n, self.zero, orbit, |a, b| self.add(a, b))
    }

    /// The Jacobson radical, computed from quasi-regularity:
    /// `x` is in the radical iff `1 − r·x` is a unit for every `r`.
    ///
    /// The result is checked to be a two-sided nilpotent ideal whose quotient
    /// ring is (von Neumann) regular; any failure is a library bug, so those
    /// checks are assertions.
    pub fn jacobson_radical(self: &Arc<Self>) -> ElementSubset {
        let unit_bits =
            BitSet::from_indices(self.n, (0..self.n).filter(|&a| self.is_unit(a)));
        let mut rad = BitSet::new(self.n);
        'next: for x in 0..self.n {
            for r in 0..self.n {
                let v = self.sub(self.one, self.mul(r, x));
                if !unit_bits.contains(v) {
                    continue 'next;
                }
            }
            rad.insert(x);
        }
        // two-sided ideal
        for x in rad.iter() {
            for r in 0..self.n {
                assert!(
                    rad.contains(self.mul(r, x)) && rad.contains(self.mul(x, r)),
                    "radical of {} is not a two-sided ideal",
                    self.label
                );
            }
            for y in rad.iter() {
                assert!(rad.contains(self.add(x, y)));
            }
        }
        // nilpotent: rad^k = 0 for some k <= n
        let mut power = rad.clone();
        for _ in 0..self.n {
            if power.len() == 1 && power.contains(self.zero) {
                break;
            }
            let mut products = Vec::new();
            for a in power.iter() {
                for b in rad.iter() {
                    products.push(self.mul(a, b));
                }
            }
            let next = self.additive_closure_bits(&products);
            assert!(
                next != power || (next.len() == 1 && next.contains(self.zero)),
                "radical of {} is not nilpotent",
                self.label
            );
            power = next;
        }
        assert!(
            power.len() == 1 && power.contains(self.zero),
            "radical of {} is not nilpotent",
            self.label
        );
        // semisimple quotient
        assert!(
            self.quotient_by_ideal_bits(&rad, format!("{}/rad", self.label))
                .is_regular(),
            "quotient of {} by its radical is not regular",
            self.label
        );
        ElementSubset::from_bits(self, rad)
    }

    pub(crate) fn additive_closure_bits(&self, seeds: &[Elem]) -> BitSet {
        crate::bits::additive_span_by(self.n, self.zero, seeds.iter().copied(), |a, b| {
            self.add(a, b)
        })
    }

    /// Von Neumann regularity: every `a` has some `x` with `a·x·a = a`.
    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).any(|x| self.mul(self.mul(a, x), a) == a))
    }

    /// Quotient by a two-sided ideal, given as a bitset of elements.
    pub(crate) fn quotient_by_ideal_bits(&self, ideal: &BitSet, label: String) -> FiniteRing {
        let n = self.n;
        let members: Vec<Elem> = ideal.to_vec();
        let mut coset = vec![usize::MAX; n];
        let mut reps: Vec<Elem> = Vec::new();
        for a in 0..n {
            if coset[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            for &m in &members {
                coset[self.add(a, m)] = id;
            }
            reps.push(a);
        }
        let q = reps.len();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for i in 0..q {
            for j in 0..q {
                add[i * q + j] = coset[self.add(reps[i], reps[j])] as u16;
                mul[i * q + j] = coset[self.mul(reps[i], reps[j])] as u16;
            }
        }
        FiniteRing::from_tables_unchecked(label, q, add, mul, coset[self.zero], coset[self.one])
    }

    /// Quotient by a two-sided ideal.
    pub fn quotient_by_ideal(self: &Arc<Self>, ideal: &ElementSubset) -> Result<FiniteRing> {
        if !Arc::ptr_eq(self, &ideal.ring) {
            return Err(Error::ParentMismatch);
        }
        Ok(self.quotient_by_ideal_bits(&ideal.bits, format!("{}/I", self.label)))
    }

    pub fn group_ring_meta(&self) -> Option<&GroupRingMeta> {
        self.group_meta.as_ref()
    }
}

/// A subset of a ring's elements, tagged with its parent ring.
#[derive(Clone)]
pub struct ElementSubset {
    ring: Arc<FiniteRing>,
    pub(crate) bits: BitSet,
}

impl ElementSubset {
    pub fn from_bits(ring: &Arc<FiniteRing>, bits: BitSet) -> Self {
        assert_eq!(bits.capacity(), ring.size());
        ElementSubset {
            ring: Arc::clone(ring),
            bits,
        }
    }

    pub fn from_elements(ring: &Arc<FiniteRing>, xs: impl IntoIterator<Item = Elem>) -> Self {
        ElementSubset::from_bits(ring, BitSet::from_indices(ring.size(), xs))
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn bits(&self) -> &BitSet {
        &self.bits
    }
    pub fn len(&self) -> usize {
        self.bits.len()
    }
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x)
    }
    pub fn elements(&self) -> Vec<Elem> {
        self.bits.to_vec()
    }

    pub fn is_left_ideal(&self) -> bool {
        let r = &self.ring;
        self.contains(r.zero())
            && self.bits.iter().all(|x| {
                self.bits.iter().all(|y| self.contains(r.add(x, y)))
                    && (0..r.size()).all(|a| self.contains(r.mul(a, x)))
            })
    }

    pub fn is_right_ideal(&self) -> bool {
        let r = &self.ring;
        self.contains(r.zero())
            && self.bits.iter().all(|x| {
                self.bits.iter().all(|y| self.contains(r.add(x, y)))
                    && (0..r.size()).all(|a| self.contains(r.mul(x, a)))
            })
    }
}

impl std::fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}⊆{}", self.bits, self.ring.label())
    }
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

/// The ring of integers modulo `n`.
pub fn ring_zmod(n: usize) -> FiniteRing {
    assert!(n >= 1, "zmod needs n >= 1");
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = ((a + b) % n) as u16;
            mul[a * n + b] = ((a * b) % n) as u16;
        }
    }
    let one = if n == 1 { 0 } else { 1 };
    FiniteRing::from_tables_unchecked(format!("zmod{n}"), n, add, mul, 0, one)
}

/// `base[x]/(f)` for a monic polynomial `f` over a commutative base.
///
/// `coeffs` lists `f` from the constant term up and must end with `1`.
/// Elements are coefficient tuples of length `deg f`, encoded little-endian
/// in base `|base|`.
pub fn ring_quotient_poly(
    base: &Arc<FiniteRing>,
    coeffs: &[Elem],
    caps: &Caps,
) -> Result<FiniteRing> {
    if !base.is_commutative() {
        return Err(Error::NonCommutativeBase);
    }
    let d = coeffs.len().saturating_sub(1);
    assert!(d >= 1, "polynomial must have degree >= 1");
    assert!(
        coeffs[d] == base.one(),
        "polynomial must be monic over the base"
    );
    let b = base.size();
    let n = caps.check_ring((b as u128).pow(d as u32), "quotient polynomial ring")?;
    let decode = |code: usize| -> Vec<Elem> {
        let mut v = Vec::with_capacity(d);
        let mut c = code;
        for _ in 0..d {
            v.push(c % b);
            c /= b;
        }
        v
    };
    let encode = |v: &[Elem]| -> usize {
        let mut c = 0usize;
        for i in (0..d).rev() {
            c = c * b + v[i];
        }
        c
    };
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for x in 0..n {
        let vx = decode(x);
        for y in 0..n {
            let vy = decode(y);
            let sum: Vec<Elem> = (0..d).map(|i| base.add(vx[i], vy[i])).collect();
            add[x * n + y] = encode(&sum) as u16;
            // schoolbook product, then reduce x^k for k >= d
            let mut acc = vec![base.zero(); 2 * d - 1];
            for i in 0..d {
                for j in 0..d {
                    acc[i + j] = base.add(acc[i + j], base.mul(vx[i], vy[j]));
                }
            }
            for k in (d..2 * d - 1).rev() {
                let c = acc[k];
                if c != base.zero() {
                    acc[k] = base.zero();
                    for i in 0..d {
                        let t = base.mul(c, coeffs[i]);
                        acc[k - d + i] = base.sub(acc[k - d + i], t);
                    }
                }
            }
            mul[x * n + y] = encode(&acc[..d]) as u16;
        }
    }
    let zero_v = vec![base.zero(); d];
    let mut one_v = vec![base.zero(); d];
    one_v[0] = base.one();
    Ok(FiniteRing::from_tables_unchecked(
        format!("{}[x]/f(deg {d})", base.label()),
        n,
        add,
        mul,
        encode(&zero_v),
        encode(&one_v),
    ))
}

/// Full `k × k` matrix ring over `R`.
pub fn matrix_ring(base: &Arc<FiniteRing>, k: usize, caps: &Caps) -> Result<FiniteRing> {
    assert!(k >= 1);
    let b = base.size();
    let d = k * k;
    let n = caps.check_ring((b as u128).pow(d as u32), "matrix ring")?;
    let decode = |code: usize| -> Vec<Elem> {
        let mut v = Vec::with_capacity(d);
        let mut c = code;
        for _ in 0..d {
            v.push(c % b);
            c /= b;
        }
        v
    };
    let encode = |v: &[Elem]| -> usize {
        let mut c = 0usize;
        for i in (0..d).rev() {
            c = c * b + v[i];
        }
        c
    };
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for x in 0..n {
        let vx = decode(x);
        for y in 0..n {
            let vy = decode(y);
            let sum: Vec<Elem> = (0..d).map(|i| base.add(vx[i], vy[i])).collect();
            add[x * n + y] = encode(&sum) as u16;
            let mut prod = vec![base.zero(); d];
            for i in 0..k {
                for j in 0..k {
                    let mut acc = base.zero();
                    for l in 0..k {
                        acc = base.add(acc, base.mul(vx[i * k + l], vy[l * k + j]));
                    }
                    prod[i * k + j] = acc;
                }
            }
            mul[x * n + y] = encode(&prod) as u16;
        }
    }
    let zero_v = vec![base.zero(); d];
    let mut one_v = vec![base.zero(); d];
    for i in 0..k {
        one_v[i * k + i] = base.one();
    }
    Ok(FiniteRing::from_tables_unchecked(
        format!("M{k}({})", base.label()),
        n,
        add,
        mul,
        encode(&zero_v),
        encode(&one_v),
    ))
}

/// Upper triangular `k × k` matrices over `R`.
pub fn triangular_ring(base: &Arc<FiniteRing>, k: usize, caps: &Caps) -> Result<FiniteRing> {
    assert!(k >= 1);
    let b = base.size();
    // positions (i, j) with i <= j, row major
    let mut pos = Vec::new();
    for i in 0..k {
        for j in i..k {
            pos.push((i, j));
        }
    }
    let d = pos.len();
    let idx_of = |i: usize, j: usize| pos.iter().position(|&p| p == (i, j)).unwrap();
    let n = caps.check_ring((b as u128).pow(d as u32), "triangular ring")?;
    let decode = |code: usize| -> Vec<Elem> {
        let mut v = Vec::with_capacity(d);
        let mut c = code;
        for _ in 0..d {
            v.push(c % b);
            c /= b;
        }
        v
    };
    let encode = |v: &[Elem]| -> usize {
        let mut c = 0usize;
        for i in (0..d).rev() {
            c = c * b + v[i];
        }
        c
    };
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for x in 0..n {
        let vx = decode(x);
        for y in 0..n {
            let vy = decode(y);
            let sum: Vec<Elem> = (0..d).map(|i| base.add(vx[i], vy[i])).collect();
            add[x * n + y] = encode(&sum) as u16;
            let mut prod = vec![base.zero(); d];
            for (p, &(i, j)) in pos.iter().enumerate() {
                let mut acc = base.zero();
                for l in i..=j {
                    acc = base.add(acc, base.mul(vx[idx_of(i, l)], vy[idx_of(l, j)]));
                }
                prod[p] = acc;
            }
            mul[x * n + y] = encode(&prod) as u16;
        }
    }
    let zero_v = vec![base.zero(); d];
    let mut one_v = vec![base.zero(); d];
    for i in 0..k {
        one_v[idx_of(i, i)] = base.one();
    }
    Ok(FiniteRing::from_tables_unchecked(
        format!("T{k}({})", base.label()),
        n,
        add,
        mul,
        encode(&zero_v),
        encode(&one_v),
    ))
}

/// Direct product with componentwise operations.
pub fn product_ring(r: &Arc<FiniteRing>, s: &Arc<FiniteRing>, caps: &Caps) -> Result<FiniteRing> {
    let (nr, ns) = (r.size(), s.size());
    let n = caps.check_ring(nr as u128 * ns as u128, "product ring")?;
    let code = |a: usize, b: usize| a * ns + b;
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for a1 in 0..nr {
        for b1 in 0..ns {
            let x = code(a1, b1);
            for a2 in 0..nr {
                for b2 in 0..ns {
                    let y = code(a2, b2);
                    add[x * n + y] = code(r.add(a1, a2), s.add(b1, b2)) as u16;
                    mul[x * n + y] = code(r.mul(a1, a2), s.mul(b1, b2)) as u16;
                }
            }
        }
    }
    Ok(FiniteRing::from_tables_unchecked(
        format!("{}x{}", r.label(), s.label()),
        n,
        add,
        mul,
        code(r.zero(), s.zero()),
        code(r.one(), s.one()),
    ))
}

// ---------------------------------------------------------------------------
// isomorphism search
// ---------------------------------------------------------------------------

/// Exhaustive ring isomorphism test for small rings (n ≤ 16).
///
/// Searches over images of a greedy generating set, extending each candidate
/// assignment by closure under `+` and `·` and pruning on the first conflict.
pub fn rings_isomorphic(r: &FiniteRing, s: &FiniteRing) -> bool {
    assert!(
        r.size() <= 16 && s.size() <= 16,
        "isomorphism search is restricted to rings of size <= 16"
    );
    if r.size() != s.size() {
        return false;
    }
    let gens = ring_generators(r);
    let mut map = vec![usize::MAX; r.size()];
    map[r.zero()] = s.zero();
    map[r.one()] = s.one();
    if !close_ring_map(r, s, &mut map, &[r.zero(), r.one()]) {
        return false;
    }
    search_ring_iso(r, s, &gens, 0, &map)
}

/// Greedy generating set of a ring (beyond 0 and 1).
fn ring_generators(r: &FiniteRing) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span = subring_closure(r, &[]);
    for a in 0..r.size() {
        if !span.contains(a) {
            gens.push(a);
            let mut seeds = gens.clone();
            seeds.push(r.one());
            span = subring_closure(r, &seeds);
        }
    }
    gens
}

fn subring_closure(r: &FiniteRing, seeds: &[Elem]) -> BitSet {
    let mut bits = BitSet::new(r.size());
    let mut members = Vec::new();
    let mut queue = vec![r.zero(), r.one()];
    queue.extend_from_slice(seeds);
    while let Some(x) = queue.pop() {
        if !bits.insert(x) {
            continue;
        }
        queue.push(r.neg(x));
        let snapshot = members.clone();
        for m in snapshot {
            for v in [r.add(x, m), r.mul(x, m), r.mul(m, x)] {
                if !bits.contains(v) {
                    queue.push(v);
                }
            }
        }
        for v in [r.add(x, x), r.mul(x, x)] {
            if !bits.contains(v) {
                queue.push(v);
            }
        }
        members.push(x);
    }
    bits
}

fn search_ring_iso(
    r: &FiniteRing,
    s: &FiniteRing,
    gens: &[Elem],
    level: usize,
    map: &[usize],
) -> bool {
    if level == gens.len() {
        // closure of a full generator assignment must already be total
        let mut used = BitSet::new(s.size());
        for &m in map {
            if m == usize::MAX || !used.insert(m) {
                return false;
            }
        }
        return true;
    }
    let g = gens[level];
    if map[g] != usize::MAX {
        return search_ring_iso(r, s, gens, level + 1, map);
    }
    for img in 0..s.size() {
        let mut trial = map.to_vec();
        trial[g] = img;
        if close_ring_map(r, s, &mut trial, &[g]) && search_ring_iso(r, s, gens, level + 1, &trial)
        {
            return true;
        }
    }
    false
}

/// Propagates a partial multiplicative-additive map; false on conflict.
fn close_ring_map(r: &FiniteRing, s: &FiniteRing, map: &mut [usize], fresh: &[Elem]) -> bool {
    let mut queue: Vec<Elem> = fresh.to_vec();
    while let Some(a) = queue.pop() {
        let fa = map[a];
        for b in 0..r.size() {
            let fb = map[b];
            if fb == usize::MAX {
                continue;
            }
            for (x, y) in [
                (r.add(a, b), s.add(fa, fb)),
                (r.mul(a, b), s.mul(fa, fb)),
                (r.mul(b, a), s.mul(fb, fa)),
            ] {
                if map[x] == usize::MAX {
                    map[x] = y;
                    queue.push(x);
                } else if map[x] != y {
                    return false;
                }
            }
        }
    }
    // injectivity so far
    let mut seen = BitSet::new(s.size());
    for &m in map.iter() {
        if m != usize::MAX && !seen.insert(m) {
            return false;
        }
    }
    true
}
