//! Finitely presented one-sided modules over a finite ring, realized as
//! explicit tables.
//!
//! A presentation is a generator count `m` and a list of relation vectors of
//! length `m`.  For a left module a relation `r` imposes `Σ rᵢ·gᵢ = 0`; for a
//! right module it imposes `Σ gᵢ·rᵢ = 0`.  The realization enumerates the
//! free module `R^m` (little-endian codes in base `|R|`), closes the
//! relations into a submodule, and stores the quotient's addition and action
//! tables.  Everything downstream (Hom, tensor, Ext, lattices) works on these
//! tables, so all results are exact.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::{additive_span_by, BitSet};
use crate::error::{Caps, Error, Result};
use crate::ring::{Elem, FiniteRing};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A realized finitely presented module.
pub struct FModule {
    label: String,
    side: Side,
    ring: Arc<FiniteRing>,
    gens: usize,
    relations: Vec<Vec<Elem>>,
    relations_reduced: Vec<Vec<Elem>>,
    /// Coset representative codes in `R^gens`, ascending.
    elems: Vec<usize>,
    /// Code in `R^gens` → element index.
    coset_of: Vec<u16>,
    add: Vec<u16>,
    neg: Vec<u16>,
    /// `act[r * size + x]`: `r·x` for left modules, `x·r` for right ones.
    act: Vec<u16>,
    zero: usize,
    gen_images: Vec<usize>,
}

impl std::fmt::Debug for FModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FModule({}, {} over {}, size={})",
            self.label,
            self.side,
            self.ring.label(),
            self.size()
        )
    }
}

// --- code/vector helpers -------------------------------------------------

pub(crate) fn decode_vec(code: usize, base: usize, len: usize) -> Vec<usize> {
    let mut v = Vec::with_capacity(len);
    let mut c = code;
    for _ in 0..len {
        v.push(c % base);
        c /= base;
    }
    v
}

pub(crate) fn encode_vec(v: &[usize], base: usize) -> usize {
    let mut c = 0usize;
    for i in (0..v.len()).rev() {
        c = c * base + v[i];
    }
    c
}

/// Closure of the given vector codes inside `R^len` under addition and the
/// side's scalar action.
///
/// Since the submodule generated by `X` is the additive span of `R·X`, the
/// scalar orbit of the seeds feeds a plain additive span.
pub(crate) fn vector_submodule_closure(
    ring: &FiniteRing,
    side: Side,
    len: usize,
    total: usize,
    seeds: &[usize],
) -> BitSet {
    let n = ring.size();
    let zero_code = encode_vec(&vec![ring.zero(); len], n);
    let vadd = |a: usize, b: usize| -> usize {
        let va = decode_vec(a, n, len);
        let vb = decode_vec(b, n, len);
        let s: Vec<usize> = (0..len).map(|i| ring.add(va[i], vb[i])).collect();
        encode_vec(&s, n)
    };
    let vscale = |r: Elem, a: usize| -> usize {
        let va = decode_vec(a, n, len);
        let s: Vec<usize> = va
            .iter()
            .map(|&x| match side {
                Side::Left => ring.mul(r, x),
                Side::Right => ring.mul(x, r),
            })
            .collect();
        encode_vec(&s, n)
    };
    let orbit: Vec<usize> = seeds
        .iter()
        .flat_map(|&s| (0..n).map(move |r| (r, s)))
        .map(|(r, s)| vscale(r, s))
        .collect();
    additive_span_by(total, zero_code, orbit, vadd)
}

/// Greedy generating vectors for a set of codes closed as a submodule.
fn reduce_vector_generators(
    ring: &FiniteRing,
    side: Side,
    len: usize,
    total: usize,
    closed: &BitSet,
) -> Vec<Vec<Elem>> {
    let n = ring.size();
    let mut gens: Vec<usize> = Vec::new();
    let mut span = vector_submodule_closure(ring, side, len, total, &[]);
    // max-gain greedy: each step adds the candidate whose span grows most
    while span != *closed {
        let mut best: Option<(usize, usize, BitSet)> = None;
        for code in closed.iter() {
            if span.contains(code) {
                continue;
            }
            gens.push(code);
            let trial = vector_submodule_closure(ring, side, len, total, &gens);
            gens.pop();
            let gain = trial.len();
            if best.as_ref().map_or(true, |(g, _, _)| gain > *g) {
                best = Some((gain, code, trial));
            }
        }
        let (_, code, trial) = best.expect("closed set not spanned");
        gens.push(code);
        span = trial;
    }
    gens.iter().map(|&c| decode_vec(c, n, len)).collect()
}

/// Builds `R^m / ⟨relations⟩` with full tables.
pub fn present_module(
    ring: &Arc<FiniteRing>,
    side: Side,
    gens: usize,
    relations: Vec<Vec<Elem>>,
    caps: &Caps,
    label: impl Into<String>,
) -> Result<FModule> {
    let n = ring.size();
    let total = caps.check_module((n as u128).pow(gens as u32), "module realization")?;
    for rel in &relations {
        assert_eq!(rel.len(), gens, "relation length must equal generator count");
        assert!(rel.iter().all(|&x| x < n), "relation entry out of range");
    }
    let seeds: Vec<usize> = relations.iter().map(|r| encode_vec(r, n)).collect();
    let rel_sub = vector_submodule_closure(ring, side, gens, total, &seeds);
    let rel_members = rel_sub.to_vec();
    let relations_reduced = reduce_vector_generators(ring, side, gens, total, &rel_sub);

    // flood cosets in ascending code order; representatives are minimal codes
    let mut coset_of = vec![u16::MAX; total];
    let mut elems: Vec<usize> = Vec::new();
    for code in 0..total {
        if coset_of[code] != u16::MAX {
            continue;
        }
        let id = elems.len() as u16;
        let vc = decode_vec(code, n, gens);
        for &k in &rel_members {
            let vk = decode_vec(k, n, gens);
            let s: Vec<usize> = (0..gens).map(|i| ring.add(vc[i], vk[i])).collect();
            coset_of[encode_vec(&s, n)] = id;
        }
        elems.push(code);
    }
    let size = elems.len();
    assert!(size <= u16::MAX as usize);

    let mut add = vec![0u16; size * size];
    for i in 0..size {
        let vi = decode_vec(elems[i], n, gens);
        for j in 0..=i {
            let vj = decode_vec(elems[j], n, gens);
            let s: Vec<usize> = (0..gens).map(|k| ring.add(vi[k], vj[k])).collect();
            let id = coset_of[encode_vec(&s, n)];
            add[i * size + j] = id;
            add[j * size + i] = id;
        }
    }
    let mut act = vec![0u16; n * size];
    for r in 0..n {
        for i in 0..size {
            let vi = decode_vec(elems[i], n, gens);
            let s: Vec<usize> = vi
                .iter()
                .map(|&x| match side {
                    Side::Left => ring.mul(r, x),
                    Side::Right => ring.mul(x, r),
                })
                .collect();
            act[r * size + i] = coset_of[encode_vec(&s, n)];
        }
    }
    let zero = coset_of[encode_vec(&vec![ring.zero(); gens], n)] as usize;
    let mut neg = vec![0u16; size];
    for i in 0..size {
        neg[i] = (0..size)
            .find(|&j| add[i * size + j] as usize == zero)
            .expect("additive inverse in module") as u16;
    }
    let gen_images: Vec<usize> = (0..gens)
        .map(|i| {
            let mut v = vec![ring.zero(); gens];
            v[i] = ring.one();
            coset_of[encode_vec(&v, n)] as usize
        })
        .collect();

    let m = FModule {
        label: label.into(),
        side,
        ring: Arc::clone(ring),
        gens,
        relations,
        relations_reduced,
        elems,
        coset_of,
        add,
        neg,
        act,
        zero,
        gen_images,
    };
    debug_assert!(m
        .relations
        .iter()
        .all(|r| m.combine(r, &m.gen_images) == m.zero));
    Ok(m)
}

/// The free module `R^m` with coordinatewise action.
pub fn free_module(ring: &Arc<FiniteRing>, side: Side, m: usize, caps: &Caps) -> Result<FModule> {
    present_module(
        ring,
        side,
        m,
        Vec::new(),
        caps,
        format!("{}.{}.free{}", ring.label(), side, m),
    )
}

/// The ring as a module over itself.
pub fn regular_module(ring: &Arc<FiniteRing>, side: Side, caps: &Caps) -> Result<FModule> {
    present_module(
        ring,
        side,
        1,
        Vec::new(),
        caps,
        format!("{}.{}.R", ring.label(), side),
    )
}

/// The cyclic module `R/I` for an ideal given as a bitset of ring elements.
pub fn cyclic_module(
    ring: &Arc<FiniteRing>,
    side: Side,
    ideal: &BitSet,
    caps: &Caps,
) -> Result<FModule> {
    let rels: Vec<Vec<Elem>> = ideal.iter().map(|x| vec![x]).collect();
    let label = format!("{}.{}.R/{}", ring.label(), side, subset_label(ideal));
    present_module(ring, side, 1, rels, caps, label)
}

pub(crate) fn subset_label(bits: &BitSet) -> String {
    if bits.len() <= 8 {
        format!("{bits:?}")
    } else {
        format!("{{#{}}}", bits.len())
    }
}

impl FModule {
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn side(&self) -> Side {
        self.side
    }
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn size(&self) -> usize {
        self.elems.len()
    }
    pub fn gens(&self) -> usize {
        self.gens
    }
    pub fn zero(&self) -> usize {
        self.zero
    }
    pub fn relations(&self) -> &[Vec<Elem>] {
        &self.relations
    }
    pub fn relations_reduced(&self) -> &[Vec<Elem>] {
        &self.relations_reduced
    }
    pub fn gen_images(&self) -> &[usize] {
        &self.gen_images
    }
    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size() + y] as usize
    }
    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }
    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }
    /// `r·x` for left modules, `x·r` for right modules.
    #[inline]
    pub fn act(&self, r: Elem, x: usize) -> usize {
        self.act[r * self.size() + x] as usize
    }
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }
    pub(crate) fn add_table(&self) -> &[u16] {
        &self.add
    }
    #[cfg(test)]
    pub(crate) fn act_table(&self) -> &[u16] {
        &self.act
    }

    /// Representative vector in `R^gens` of an element.
    pub fn rep_vector(&self, x: usize) -> Vec<Elem> {
        decode_vec(self.elems[x], self.ring.size(), self.gens)
    }

    /// Element represented by a vector in `R^gens`.
    pub fn class_of_vector(&self, v: &[Elem]) -> usize {
        debug_assert_eq!(v.len(), self.gens);
        self.coset_of[encode_vec(v, self.ring.size())] as usize
    }

    /// `Σ coeffᵢ ∘ elemᵢ` with the side's action.
    pub fn combine(&self, coeffs: &[Elem], elems: &[usize]) -> usize {
        debug_assert_eq!(coeffs.len(), elems.len());
        let mut acc = self.zero;
        for (&c, &e) in coeffs.iter().zip(elems) {
            acc = self.add(acc, self.act(c, e));
        }
        acc
    }

    /// Additive order of an element.
    pub fn additive_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    /// Full axiom check of the realized tables (test support; O(size³)).
    pub fn validate(&self) -> Result<()> {
        let err = |axiom, w: (usize, usize, usize)| Error::AxiomViolation { axiom, witness: w };
        let s = self.size();
        let n = self.ring.size();
        for x in 0..s {
            if self.add(x, self.zero) != x {
                return Err(err("module-add-zero", (x, 0, 0)));
            }
            for y in 0..s {
                if self.add(x, y) != self.add(y, x) {
                    return Err(err("module-add-commutative", (x, y, 0)));
                }
                for z in 0..s {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return Err(err("module-add-associative", (x, y, z)));
                    }
                }
            }
        }
        for r in 0..n {
            for x in 0..s {
                for y in 0..s {
                    if self.act(r, self.add(x, y)) != self.add(self.act(r, x), self.act(r, y)) {
                        return Err(err("action-distributive", (r, x, y)));
                    }
                }
            }
        }
        for r in 0..n {
            for t in 0..n {
                let rt = self.ring.mul(r, t);
                for x in 0..s {
                    let lhs = self.act(rt, x);
                    let rhs = match self.side {
                        Side::Left => self.act(r, self.act(t, x)),
                        Side::Right => self.act(t, self.act(r, x)),
                    };
                    if lhs != rhs {
                        return Err(err("action-associative", (r, t, x)));
                    }
                    if self.act(self.ring.add(r, t), x)
                        != self.add(self.act(r, x), self.act(t, x))
                    {
                        return Err(err("action-scalar-distributive", (r, t, x)));
                    }
                }
            }
        }
        for x in 0..s {
            if self.act(self.ring.one(), x) != x {
                return Err(err("action-unital", (x, 0, 0)));
            }
        }
        // generators generate
        let span = submodule_generated(self, self.gen_images.iter().copied());
        if span.len() != s {
            return Err(err("generators-generate", (span.len(), s, 0)));
        }
        Ok(())
    }
}

// --------------------------------------------------------------------------
// submodules
// --------------------------------------------------------------------------

/// A submodule of a realized module, stored as an element bitset.
#[derive(Clone)]
pub struct Submodule {
    parent: Arc<FModule>,
    bits: BitSet,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.bits == other.bits
    }
}
impl Eq for Submodule {}

impl std::fmt::Debug for Submodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Submodule({:?} of {})", self.bits, self.parent.label())
    }
}

impl Submodule {
    pub fn from_bits(parent: &Arc<FModule>, bits: BitSet) -> Self {
        assert_eq!(bits.capacity(), parent.size());
        Submodule {
            parent: Arc::clone(parent),
            bits,
        }
    }
    pub fn parent(&self) -> &Arc<FModule> {
        &self.parent
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
    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }
    pub fn elements(&self) -> Vec<usize> {
        self.bits.to_vec()
    }
    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }
}

pub(crate) fn submodule_closure_bits<I: IntoIterator<Item = usize>>(
    m: &FModule,
    seeds: I,
) -> BitSet {
    let n = m.ring().size();
    let orbit: Vec<usize> = seeds
        .into_iter()
        .flat_map(|s| (0..n).map(move |r| (r, s)))
        .map(|(r, s)| m.act(r, s))
        .collect();
    additive_span_by(m.size(), m.zero(), orbit, |a, b| m.add(a, b))
}

/// Submodule generated by a set of elements.
pub fn submodule_generated<I: IntoIterator<Item = usize>>(
    parent: &FModule,
    seeds: I,
) -> BitSet {
    submodule_closure_bits(parent, seeds)
}

/// All cyclic submodules, deduplicated, in deterministic order.
pub fn cyclic_submodules(parent: &Arc<FModule>) -> Vec<Submodule> {
    let mut seen: Vec<BitSet> = Vec::new();
    for x in parent.elements() {
        let bits = submodule_closure_bits(parent, [x]);
        if !seen.contains(&bits) {
            seen.push(bits);
        }
    }
    seen.sort_by_key(|b| (b.len(), b.clone()));
    seen.into_iter()
        .map(|bits| Submodule::from_bits(parent, bits))
        .collect()
}

/// The full submodule lattice: cyclic submodules closed under pairwise sums.
pub fn submodules(parent: &Arc<FModule>) -> Vec<Submodule> {
    let cyclics: Vec<BitSet> = cyclic_submodules(parent)
        .into_iter()
        .map(|s| s.bits)
        .collect();
    let mut known: Vec<BitSet> = cyclics.clone();
    let mut frontier: Vec<BitSet> = cyclics.clone();
    while let Some(s) = frontier.pop() {
        for c in &cyclics {
            if c.is_subset(&s) {
                continue;
            }
            let sum = sum_bits(parent, &s, c);
            if !known.contains(&sum) {
                known.push(sum.clone());
                frontier.push(sum);
            }
        }
    }
    known.sort_by_key(|b| (b.len(), b.clone()));
    known
        .into_iter()
        .map(|bits| Submodule::from_bits(parent, bits))
        .collect()
}

fn sum_bits(parent: &FModule, a: &BitSet, b: &BitSet) -> BitSet {
    // both are closed, so the pointwise sum set is already a submodule
    let mut out = BitSet::new(parent.size());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(parent.add(x, y));
        }
    }
    out
}

/// Lattice join.
pub fn sum_sub(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    if !Arc::ptr_eq(&a.parent, &b.parent) {
        return Err(Error::ParentMismatch);
    }
    Ok(Submodule::from_bits(
        &a.parent,
        sum_bits(&a.parent, &a.bits, &b.bits),
    ))
}

/// Lattice meet.
pub fn intersect_sub(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    if !Arc::ptr_eq(&a.parent, &b.parent) {
        return Err(Error::ParentMismatch);
    }
    Ok(Submodule::from_bits(&a.parent, a.bits.intersection(&b.bits)))
}

/// Sum of all minimal nonzero submodules.
pub fn socle(parent: &Arc<FModule>) -> Submodule {
    let cyclics = cyclic_submodules(parent);
    let nonzero: Vec<&Submodule> = cyclics.iter().filter(|s| !s.is_zero()).collect();
    // a minimal submodule is cyclic and generated by each of its nonzero elements
    let minimals: Vec<&&Submodule> = nonzero
        .iter()
        .filter(|s| {
            !nonzero
                .iter()
                .any(|t| t.bits.len() < s.bits.len() && t.bits.is_subset(&s.bits))
        })
        .collect();
    let mut bits = BitSet::new(parent.size());
    bits.insert(parent.zero());
    for s in minimals {
        bits = sum_bits(parent, &bits, &s.bits);
    }
    Submodule::from_bits(parent, bits)
}

/// Whether `s` meets every nonzero submodule of its parent.
///
/// It is enough to meet every nonzero cyclic submodule.
pub fn is_essential(s: &Submodule, parent: &Arc<FModule>) -> Result<bool> {
    if !Arc::ptr_eq(&s.parent, parent) {
        return Err(Error::ParentMismatch);
    }
    for c in cyclic_submodules(parent) {
        if c.is_zero() {
            continue;
        }
        if s.bits.intersection(&c.bits).len() <= 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quotient of a module by a submodule, re-presented on the same generators.
pub fn quotient(m: &Arc<FModule>, s: &Submodule, caps: &Caps) -> Result<FModule> {
    if !Arc::ptr_eq(&s.parent, m) {
        return Err(Error::ParentMismatch);
    }
    let mut rels = m.relations.clone();
    for x in s.bits.iter() {
        rels.push(m.rep_vector(x));
    }
    let label = format!("{}/{}", m.label(), subset_label(&s.bits));
    present_module(&m.ring, m.side, m.gens, rels, caps, label)
}

/// Re-presents a submodule as a standalone module.
///
/// Returns the realized module together with the map sending each of its
/// elements to the corresponding element of the parent.
pub fn submodule_as_module(s: &Submodule, caps: &Caps) -> Result<(FModule, Vec<usize>)> {
    let parent = &s.parent;
    let ring = parent.ring();
    let n = ring.size();
    // max-gain greedy generators
    let mut gens: Vec<usize> = Vec::new();
    let mut span = submodule_closure_bits(parent, []);
    while span != s.bits {
        let mut best: Option<(usize, usize, BitSet)> = None;
        for x in s.bits.iter() {
            if span.contains(x) {
                continue;
            }
            gens.push(x);
            let trial = submodule_closure_bits(parent, gens.iter().copied());
            gens.pop();
            let gain = trial.len();
            if best.as_ref().map_or(true, |(g, _, _)| gain > *g) {
                best = Some((gain, x, trial));
            }
        }
        let (_, x, trial) = best.expect("submodule not spanned");
        gens.push(x);
        span = trial;
    }
    let t = gens.len();
    let total = caps.check_module((n as u128).pow(t as u32), "submodule presentation")?;
    // kernel of R^t -> S
    let mut kernel: Vec<Vec<Elem>> = Vec::new();
    for code in 0..total {
        let v = decode_vec(code, n, t);
        if parent.combine(&v, &gens) == parent.zero() {
            kernel.push(v);
        }
    }
    let label = format!("{}.sub{}", parent.label(), subset_label(&s.bits));
    let module = present_module(ring, parent.side, t, kernel, caps, label)?;
    let mut value_map = Vec::with_capacity(module.size());
    for x in module.elements() {
        let v = module.rep_vector(x);
        value_map.push(parent.combine(&v, &gens));
    }
    // must be a bijection onto the submodule
    assert_eq!(module.size(), s.len());
    let mut seen = BitSet::new(parent.size());
    for &y in &value_map {
        assert!(s.bits.contains(y) && seen.insert(y));
    }
    Ok((module, value_map))
}

/// Exhaustive isomorphism test between realized modules of the same side.
///
/// Scans generator-image tuples of `a` in `b`, pruning through the stored
/// relations, and looks for a bijective assignment.
pub fn modules_isomorphic(a: &FModule, b: &FModule, caps: &Caps) -> Result<bool> {
    if a.side != b.side || !Arc::ptr_eq(&a.ring, &b.ring) {
        return Ok(false);
    }
    if a.size() != b.size() {
        return Ok(false);
    }
    // cheap invariant: multiset of additive orders
    let mut oa: Vec<usize> = a.elements().map(|x| a.additive_order(x)).collect();
    let mut ob: Vec<usize> = b.elements().map(|x| b.additive_order(x)).collect();
    oa.sort_unstable();
    ob.sort_unstable();
    if oa != ob {
        return Ok(false);
    }
    let budget = (b.size() as u128).pow(a.gens as u32);
    caps.check_module(budget, "module isomorphism search")?;
    let mut images = vec![0usize; a.gens];
    modules_iso_scan(a, b, &mut images, 0, &mut HashMap::new())
}

fn modules_iso_scan(
    a: &FModule,
    b: &FModule,
    images: &mut [usize],
    level: usize,
    _memo: &mut HashMap<u64, bool>,
) -> Result<bool> {
    if level == images.len() {
        for rel in a.relations_reduced() {
            if b.combine(rel, images) != b.zero() {
                return Ok(false);
            }
        }
        // images define a hom; bijective iff image spans with |a| distinct values
        let mut seen = BitSet::new(b.size());
        for x in a.elements() {
            let v = a.rep_vector(x);
            if !seen.insert(b.combine(&v, images)) {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    for img in b.elements() {
        images[level] = img;
        if modules_iso_scan(a, b, images, level + 1, _memo)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_zmod;

    fn zmod(n: usize) -> Arc<FiniteRing> {
        Arc::new(ring_zmod(n))
    }

    #[test]
    fn free_and_zero_modules() {
        let caps = Caps::default();
        let r = zmod(2);
        let f3 = free_module(&r, Side::Left, 3, &caps).unwrap();
        assert_eq!(f3.size(), 8);
        let f0 = free_module(&r, Side::Left, 0, &caps).unwrap();
        assert_eq!(f0.size(), 1);
        let reg = regular_module(&r, Side::Left, &caps).unwrap();
        assert_eq!(reg.size(), 2);
        f3.validate().unwrap();
    }

    #[test]
    fn present_zmod4_by_two() {
        let caps = Caps::default();
        let r = zmod(4);
        // Z/4 modulo the relation 2·g = 0 realizes a 2-element module
        let m = present_module(&r, Side::Left, 1, vec![vec![2]], &caps, "m").unwrap();
        assert_eq!(m.size(), 2);
        m.validate().unwrap();
        let z = present_module(&r, Side::Left, 1, vec![vec![1]], &caps, "z").unwrap();
        assert_eq!(z.size(), 1);
        let f2 = present_module(&r, Side::Left, 2, vec![], &caps, "f2").unwrap();
        assert_eq!(f2.size(), 16);
    }

    #[test]
    fn submodule_lattice_of_zmod4() {
        let caps = Caps::default();
        let r = zmod(4);
        let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        let lat = submodules(&reg);
        let sizes: Vec<usize> = lat.iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![1, 2, 4]);
        let soc = socle(&reg);
        assert_eq!(soc.len(), 2);
        assert!(is_essential(&soc, &reg).unwrap());
    }

    #[test]
    fn lattice_of_product_ring_regular_module() {
        let caps = Caps::default();
        let f2 = zmod(2);
        let f3 = zmod(3);
        let prod = Arc::new(crate::ring::product_ring(&f2, &f3, &caps).unwrap());
        let reg = Arc::new(regular_module(&prod, Side::Left, &caps).unwrap());
        assert_eq!(submodules(&reg).len(), 4);
    }

    #[test]
    fn quotient_sizes_multiply() {
        let caps = Caps::default();
        let r = zmod(12);
        let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        for s in submodules(&reg) {
            let q = quotient(&reg, &s, &caps).unwrap();
            assert_eq!(q.size() * s.len(), reg.size());
        }
    }

    #[test]
    fn meet_of_ideals_in_zmod12() {
        let caps = Caps::default();
        let r = zmod(12);
        let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        let four = Submodule::from_bits(&reg, submodule_generated(&reg, [4]));
        let six = Submodule::from_bits(&reg, submodule_generated(&reg, [6]));
        let meet = intersect_sub(&four, &six).unwrap();
        assert_eq!(meet.elements(), vec![0]);
        let join = sum_sub(&four, &six).unwrap();
        assert_eq!(join.len(), 6); // (4)+(6) = (2)
    }

    #[test]
    fn submodule_as_module_roundtrip() {
        let caps = Caps::default();
        let r = zmod(4);
        let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        let two = Submodule::from_bits(&reg, submodule_generated(&reg, [2]));
        let (m, map) = submodule_as_module(&two, &caps).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(map.len(), 2);
        assert!(map.contains(&0) && map.contains(&2));
    }

    #[test]
    fn zero_module_edge_cases() {
        let caps = Caps::default();
        let r = zmod(4);
        let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        let zero = Submodule::from_bits(&reg, submodule_generated(&reg, []));
        assert!(is_essential(&zero, &reg).unwrap() == false);
        let z = Arc::new(quotient(&reg, &Submodule::from_bits(&reg, BitSet::from_indices(4, 0..4)), &caps).unwrap());
        assert_eq!(z.size(), 1);
        assert_eq!(socle(&z).len(), 1);
        let zs = Submodule::from_bits(&z, submodule_generated(&z, []));
        assert!(is_essential(&zs, &z).unwrap());
    }

    #[test]
    fn parent_mismatch_is_reported() {
        let caps = Caps::default();
        let r = zmod(4);
        let reg1 = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        let reg2 = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        let a = Submodule::from_bits(&reg1, submodule_generated(&reg1, [2]));
        let b = Submodule::from_bits(&reg2, submodule_generated(&reg2, [2]));
        assert_eq!(sum_sub(&a, &b).unwrap_err(), Error::ParentMismatch);
    }

    #[test]
    fn isomorphism_of_presentations() {
        let caps = Caps::default();
        let r = zmod(4);
        let a = present_module(&r, Side::Left, 1, vec![vec![2]], &caps, "a").unwrap();
        // same module presented on two generators
        let b = present_module(&r, Side::Left, 2, vec![vec![2, 0], vec![0, 1]], &caps, "b").unwrap();
        assert!(modules_isomorphic(&a, &b, &caps).unwrap());
        let c = present_module(&r, Side::Left, 1, vec![], &caps, "c").unwrap();
        assert!(!modules_isomorphic(&a, &c, &caps).unwrap());
    }
}
