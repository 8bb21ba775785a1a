//! Homomorphisms between realized modules: exhaustive Hom-set enumeration,
//! dual modules `M* = Hom(M, R)`, double duals and the evaluation map.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Caps, Error, Result};
use crate::module::{present_module, regular_module, FModule, Side};
use crate::ring::Elem;

const UNSET: u16 = u16::MAX;

/// An additive, action-compatible map between modules of the same side,
/// stored as a full value table.
#[derive(Clone)]
pub struct ModuleHom {
    source: Arc<FModule>,
    target: Arc<FModule>,
    table: Vec<u16>,
}

impl PartialEq for ModuleHom {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.source, &other.source)
            && Arc::ptr_eq(&self.target, &other.target)
            && self.table == other.table
    }
}
impl Eq for ModuleHom {}

impl std::fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Hom({} -> {}; {:?})",
            self.source.label(),
            self.target.label(),
            &self.table
        )
    }
}

impl ModuleHom {
    pub fn from_table(source: &Arc<FModule>, target: &Arc<FModule>, table: Vec<u16>) -> Self {
        assert_eq!(table.len(), source.size());
        ModuleHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            table,
        }
    }

    /// Builds the hom sending generator `i` of the source to `images[i]`,
    /// provided every stored relation is satisfied.
    pub fn from_gen_images(
        source: &Arc<FModule>,
        target: &Arc<FModule>,
        images: &[usize],
    ) -> Option<ModuleHom> {
        assert_eq!(source.side(), target.side());
        assert!(Arc::ptr_eq(source.ring(), target.ring()));
        assert_eq!(images.len(), source.gens());
        for rel in source.relations_reduced() {
            if target.combine(rel, images) != target.zero() {
                return None;
            }
        }
        let table: Vec<u16> = source
            .elements()
            .map(|x| target.combine(&source.rep_vector(x), images) as u16)
            .collect();
        Some(ModuleHom::from_table(source, target, table))
    }

    pub fn zero_hom(source: &Arc<FModule>, target: &Arc<FModule>) -> ModuleHom {
        ModuleHom::from_table(source, target, vec![target.zero() as u16; source.size()])
    }

    pub fn identity(m: &Arc<FModule>) -> ModuleHom {
        ModuleHom::from_table(m, m, (0..m.size() as u16).collect())
    }

    pub fn source(&self) -> &Arc<FModule> {
        &self.source
    }
    pub fn target(&self) -> &Arc<FModule> {
        &self.target
    }
    pub fn table(&self) -> &[u16] {
        &self.table
    }
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x] as usize
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &ModuleHom) -> Result<ModuleHom> {
        if !Arc::ptr_eq(&self.target, &then.source) {
            return Err(Error::ParentMismatch);
        }
        let table = self.table.iter().map(|&x| then.table[x as usize]).collect();
        Ok(ModuleHom::from_table(&self.source, &then.target, table))
    }

    pub fn add_pointwise(&self, other: &ModuleHom) -> ModuleHom {
        assert!(Arc::ptr_eq(&self.source, &other.source));
        assert!(Arc::ptr_eq(&self.target, &other.target));
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| self.target.add(a as usize, b as usize) as u16)
            .collect();
        ModuleHom::from_table(&self.source, &self.target, table)
    }

    pub fn kernel_bits(&self) -> BitSet {
        let z = self.target.zero() as u16;
        BitSet::from_indices(
            self.source.size(),
            self.table
                .iter()
                .enumerate()
                .filter(|(_, &v)| v == z)
                .map(|(i, _)| i),
        )
    }

    pub fn image_bits(&self) -> BitSet {
        BitSet::from_indices(self.target.size(), self.table.iter().map(|&v| v as usize))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_bits().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image_bits().len() == self.target.size()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn is_zero(&self) -> bool {
        let z = self.target.zero() as u16;
        self.table.iter().all(|&v| v == z)
    }

    /// Full additivity and linearity check (test support).
    pub fn verify(&self) -> bool {
        let (m, n) = (&self.source, &self.target);
        if self.apply(m.zero()) != n.zero() {
            return false;
        }
        for x in m.elements() {
            for y in m.elements() {
                if self.apply(m.add(x, y)) != n.add(self.apply(x), self.apply(y)) {
                    return false;
                }
            }
            for r in m.ring().elements() {
                if self.apply(m.act(r, x)) != n.act(r, self.apply(x)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Exactly all homs `M → N`, by scanning generator-image tuples against the
/// stored relations of `M`.  Output is in lexicographic generator-image
/// order.
pub fn hom_set(source: &Arc<FModule>, target: &Arc<FModule>, caps: &Caps) -> Result<Vec<ModuleHom>> {
    assert_eq!(source.side(), target.side());
    assert!(Arc::ptr_eq(source.ring(), target.ring()));
    let m = source.gens();
    caps.check_module((target.size() as u128).pow(m as u32), "hom enumeration")?;
    let mut out = Vec::new();
    let mut images = vec![0usize; m];
    loop {
        if let Some(h) = ModuleHom::from_gen_images(source, target, &images) {
            out.push(h);
        }
        // odometer, position 0 most significant
        let mut k = m;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            images[k] += 1;
            if images[k] < target.size() {
                break;
            }
            images[k] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// propagation-based hom enumeration over raw tables
// ---------------------------------------------------------------------------

/// A module seen purely through its tables.  Used where no presentation is
/// available, e.g. ideals inside the regular module or restrictions of
/// scalars.
pub(crate) struct TableView {
    pub size: usize,
    pub ring_n: usize,
    pub add: Vec<u16>,
    pub act: Vec<u16>,
    pub zero: usize,
}

impl TableView {
    #[cfg(test)]
    pub fn of_module(m: &FModule) -> TableView {
        TableView {
            size: m.size(),
            ring_n: m.ring().size(),
            add: m.add_table().to_vec(),
            act: m.act_table().to_vec(),
            zero: m.zero(),
        }
    }

    #[inline]
    fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y] as usize
    }
    #[inline]
    fn act(&self, r: usize, x: usize) -> usize {
        self.act[r * self.size + x] as usize
    }
}

/// All hom value tables `src → tgt`, found by assigning images one element at
/// a time and propagating through addition and the ring action.
///
/// This is a second, presentation-free enumeration route; the harness plays
/// it against [`hom_set`] where both apply.
pub(crate) fn enumerate_hom_tables(src: &TableView, tgt: &TableView) -> Vec<Vec<u16>> {
    assert_eq!(src.ring_n, tgt.ring_n);
    let mut assign = vec![UNSET; src.size];
    let mut assigned: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    if !propagate(src, tgt, &mut assign, &mut assigned, src.zero, tgt.zero) {
        return out;
    }
    dfs(src, tgt, &assign, &assigned, &mut out);
    out
}

fn dfs(
    src: &TableView,
    tgt: &TableView,
    assign: &[u16],
    assigned: &[usize],
    out: &mut Vec<Vec<u16>>,
) {
    match (0..src.size).find(|&x| assign[x] == UNSET) {
        None => out.push(assign.to_vec()),
        Some(x) => {
            for img in 0..tgt.size {
                let mut a2 = assign.to_vec();
                let mut l2 = assigned.to_vec();
                if propagate(src, tgt, &mut a2, &mut l2, x, img) {
                    dfs(src, tgt, &a2, &l2, out);
                }
            }
        }
    }
}

fn propagate(
    src: &TableView,
    tgt: &TableView,
    assign: &mut [u16],
    assigned: &mut Vec<usize>,
    x: usize,
    img: usize,
) -> bool {
    if assign[x] != UNSET {
        return assign[x] as usize == img;
    }
    assign[x] = img as u16;
    assigned.push(x);
    let mut queue = vec![x];
    while let Some(a) = queue.pop() {
        let fa = assign[a] as usize;
        for r in 0..src.ring_n {
            let b = src.act(r, a);
            let fb = tgt.act(r, fa);
            if assign[b] == UNSET {
                assign[b] = fb as u16;
                assigned.push(b);
                queue.push(b);
            } else if assign[b] as usize != fb {
                return false;
            }
        }
        let mut i = 0;
        while i < assigned.len() {
            let c = assigned[i];
            i += 1;
            let d = src.add(a, c);
            let fd = tgt.add(fa, assign[c] as usize);
            if assign[d] == UNSET {
                assign[d] = fd as u16;
                assigned.push(d);
                queue.push(d);
            } else if assign[d] as usize != fd {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// duals
// ---------------------------------------------------------------------------

/// `M* = Hom(M, R)` realized as a module of the opposite side, with the
/// element-to-hom correspondence exhibited.
pub struct DualStructure {
    /// The realized dual module.
    pub module: Arc<FModule>,
    /// Copy of the regular module the homs land in.
    pub regular: Arc<FModule>,
    /// Element index → the hom it stands for.
    pub homs: Vec<ModuleHom>,
    index_by_table: HashMap<Vec<u16>, usize>,
    source: Arc<FModule>,
}

impl DualStructure {
    pub fn index_of_table(&self, table: &[u16]) -> Option<usize> {
        self.index_by_table.get(table).copied()
    }
    pub fn source(&self) -> &Arc<FModule> {
        &self.source
    }
    pub fn size(&self) -> usize {
        self.module.size()
    }
}

/// Computes the dual of a realized module.
///
/// For a left module the dual is a right module via `(f·r)(x) = f(x)·r`, and
/// symmetrically for right modules.
pub fn dual_module(m: &Arc<FModule>, caps: &Caps) -> Result<DualStructure> {
    let ring = m.ring();
    let n = ring.size();
    let reg = Arc::new(regular_module(ring, m.side(), caps)?);
    debug_assert_eq!(reg.size(), n);
    let homs = hom_set(m, &reg, caps)?;
    let tables: Vec<Vec<u16>> = homs.iter().map(|h| h.table.clone()).collect();
    let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
    for (i, t) in tables.iter().enumerate() {
        let prev = index.insert(t.clone(), i);
        assert!(prev.is_none(), "duplicate hom table");
    }
    let dual_side = m.side().opposite();
    // action of r on a hom table, on the dual side
    let scale = |r: Elem, t: &[u16]| -> Vec<u16> {
        t.iter()
            .map(|&v| match dual_side {
                // dual of a left module is right: (f·r)(x) = f(x)·r
                Side::Right => ring.mul(v as usize, r) as u16,
                // dual of a right module is left: (r·f)(x) = r·f(x)
                Side::Left => ring.mul(r, v as usize) as u16,
            })
            .collect()
    };
    let add_tables = |a: &[u16], b: &[u16]| -> Vec<u16> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| ring.add(x as usize, y as usize) as u16)
            .collect()
    };
    let zero_table = vec![ring.zero() as u16; m.size()];

    // max-gain greedy generators of the hom module
    let mut gens: Vec<usize> = Vec::new();
    let mut span: BitSet = span_of(&tables, &index, &gens, &zero_table, &add_tables, &scale, n);
    while span.len() != tables.len() {
        let mut best: Option<(usize, usize, BitSet)> = None;
        for i in 0..tables.len() {
            if span.contains(i) {
                continue;
            }
            gens.push(i);
            let trial = span_of(&tables, &index, &gens, &zero_table, &add_tables, &scale, n);
            gens.pop();
            let gain = trial.len();
            if best.as_ref().map_or(true, |(g, _, _)| gain > *g) {
                best = Some((gain, i, trial));
            }
        }
        let (_, i, trial) = best.expect("hom set not spanned");
        gens.push(i);
        span = trial;
    }
    let t = gens.len();
    let total = caps.check_module((n as u128).pow(t as u32), "dual presentation")?;

    // element of the dual from a coefficient vector over the generators
    let from_coeffs = |v: &[Elem]| -> Vec<u16> {
        let mut acc = zero_table.clone();
        for (i, &c) in v.iter().enumerate() {
            acc = add_tables(&acc, &scale(c, &tables[gens[i]]));
        }
        acc
    };
    let mut kernel: Vec<Vec<Elem>> = Vec::new();
    for code in 0..total {
        let v = crate::module::decode_vec(code, n, t);
        if from_coeffs(&v) == zero_table {
            kernel.push(v);
        }
    }
    let dual_mod = Arc::new(present_module(
        ring,
        dual_side,
        t,
        kernel,
        caps,
        format!("{}^*", m.label()),
    )?);
    assert_eq!(dual_mod.size(), tables.len());
    let mut elem_homs = Vec::with_capacity(dual_mod.size());
    let mut index_by_table = HashMap::new();
    for x in dual_mod.elements() {
        let v = dual_mod.rep_vector(x);
        let table = from_coeffs(&v);
        let prev = index_by_table.insert(table.clone(), x);
        assert!(prev.is_none(), "dual correspondence must be bijective");
        elem_homs.push(ModuleHom::from_table(m, &reg, table));
    }
    Ok(DualStructure {
        module: dual_mod,
        regular: reg,
        homs: elem_homs,
        index_by_table,
        source: Arc::clone(m),
    })
}

#[allow(clippy::too_many_arguments)]
fn span_of(
    tables: &[Vec<u16>],
    index: &HashMap<Vec<u16>, usize>,
    gens: &[usize],
    zero_table: &[u16],
    add_tables: &impl Fn(&[u16], &[u16]) -> Vec<u16>,
    scale: &impl Fn(Elem, &[u16]) -> Vec<u16>,
    ring_n: usize,
) -> BitSet {
    let zero_idx = *index.get(zero_table).expect("zero hom present");
    let orbit: Vec<usize> = gens
        .iter()
        .flat_map(|&g| (0..ring_n).map(move |r| (r, g)))
        .map(|(r, g)| index[&scale(r, &tables[g])])
        .collect();
    crate::bits::additive_span_by(tables.len(), zero_idx, orbit, |a, b| {
        index[&add_tables(&tables[a], &tables[b])]
    })
}

/// The contravariant dual of a map: `f*: N* → M*`, `φ ↦ φ∘f`.
pub fn dual_map(
    f: &ModuleHom,
    dual_of_target: &DualStructure,
    dual_of_source: &DualStructure,
) -> ModuleHom {
    assert!(Arc::ptr_eq(f.target(), dual_of_target.source()));
    assert!(Arc::ptr_eq(f.source(), dual_of_source.source()));
    let table: Vec<u16> = dual_of_target
        .homs
        .iter()
        .map(|phi| {
            let composed: Vec<u16> = f.table.iter().map(|&x| phi.table[x as usize]).collect();
            dual_of_source
                .index_of_table(&composed)
                .expect("composite must be a hom") as u16
        })
        .collect();
    ModuleHom::from_table(&dual_of_target.module, &dual_of_source.module, table)
}

/// The canonical map `M → M**`, `m ↦ (φ ↦ φ(m))`, using precomputed duals.
pub fn eval_map_via(
    m: &Arc<FModule>,
    dual: &DualStructure,
    double: &DualStructure,
) -> ModuleHom {
    assert!(Arc::ptr_eq(dual.source(), m));
    assert!(Arc::ptr_eq(double.source(), &dual.module));
    let table: Vec<u16> = m
        .elements()
        .map(|x| {
            let functional: Vec<u16> = dual.homs.iter().map(|phi| phi.table[x]).collect();
            double
                .index_of_table(&functional)
                .expect("evaluation functional must be a hom") as u16
        })
        .collect();
    ModuleHom::from_table(m, &double.module, table)
}

/// The canonical map `M → M**` with duals computed on the fly.
pub fn eval_map(m: &Arc<FModule>, caps: &Caps) -> Result<ModuleHom> {
    let dual = dual_module(m, caps)?;
    let double = dual_module(&dual.module, caps)?;
    Ok(eval_map_via(m, &dual, &double))
}

/// Injectivity of the evaluation map.
pub fn is_semireflexive(m: &Arc<FModule>, caps: &Caps) -> Result<bool> {
    Ok(eval_map(m, caps)?.is_injective())
}

/// Bijectivity of the evaluation map.
pub fn is_reflexive(m: &Arc<FModule>, caps: &Caps) -> Result<bool> {
    Ok(eval_map(m, caps)?.is_bijective())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{cyclic_module, free_module};
    use crate::ring::ring_zmod;
    use crate::bits::BitSet;

    fn zmod(n: usize) -> Arc<crate::ring::FiniteRing> {
        Arc::new(ring_zmod(n))
    }

    #[test]
    fn hom_counts_over_zmod4() {
        let caps = Caps::default();
        let r = zmod(4);
        let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        // |Hom(R, M)| = |M|
        for target_size in [1usize, 2, 4] {
            let ideal: BitSet = match target_size {
                1 => BitSet::from_indices(4, 0..4),
                2 => BitSet::from_indices(4, [0, 2]),
                _ => BitSet::from_indices(4, [0]),
            };
            let m = Arc::new(cyclic_module(&r, Side::Left, &ideal, &caps).unwrap());
            assert_eq!(hom_set(&reg, &m, &caps).unwrap().len(), m.size());
        }
        // |Hom(Z/2, Z/4)| over Z/4 = 2  (images x with 2x = 0)
        let two = BitSet::from_indices(4, [0, 2]);
        let m2 = Arc::new(cyclic_module(&r, Side::Left, &two, &caps).unwrap());
        let homs = hom_set(&m2, &reg, &caps).unwrap();
        assert_eq!(homs.len(), 2);
        // Hom(M, 0) = {0}
        let full = BitSet::from_indices(4, 0..4);
        let z = Arc::new(cyclic_module(&r, Side::Left, &full, &caps).unwrap());
        let hz = hom_set(&m2, &z, &caps).unwrap();
        assert_eq!(hz.len(), 1);
        assert!(hz[0].is_zero());
    }

    #[test]
    fn propagation_route_agrees_with_scan() {
        let caps = Caps::default();
        for n in [4usize, 6, 8] {
            let r = zmod(n);
            let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
            for d in 2..n {
                if n % d != 0 {
                    continue;
                }
                let ideal = BitSet::from_indices(n, (0..n).filter(|x| x % d == 0));
                let m = Arc::new(cyclic_module(&r, Side::Left, &ideal, &caps).unwrap());
                let scan = hom_set(&m, &reg, &caps).unwrap();
                let prop =
                    enumerate_hom_tables(&TableView::of_module(&m), &TableView::of_module(&reg));
                let mut scan_tables: Vec<Vec<u16>> =
                    scan.iter().map(|h| h.table.clone()).collect();
                let mut prop_tables = prop;
                scan_tables.sort();
                prop_tables.sort();
                assert_eq!(scan_tables, prop_tables);
            }
        }
    }

    #[test]
    fn dual_of_regular_is_regular_sized() {
        let caps = Caps::default();
        let r = zmod(4);
        let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        let dual = dual_module(&reg, &caps).unwrap();
        assert_eq!(dual.size(), 4);
        assert_eq!(dual.module.side(), Side::Right);
        // (Z/2)* over Z/4 has 2 elements
        let two = BitSet::from_indices(4, [0, 2]);
        let m = Arc::new(cyclic_module(&r, Side::Left, &two, &caps).unwrap());
        let dm = dual_module(&m, &caps).unwrap();
        assert_eq!(dm.size(), 2);
    }

    #[test]
    fn eval_is_iso_on_free_modules() {
        let caps = Caps::default();
        let r = zmod(6);
        let f = Arc::new(free_module(&r, Side::Left, 1, &caps).unwrap());
        let e = eval_map(&f, &caps).unwrap();
        assert!(e.is_bijective());
        assert!(e.verify());
        let z = Arc::new(free_module(&r, Side::Left, 0, &caps).unwrap());
        let ez = eval_map(&z, &caps).unwrap();
        assert!(ez.is_bijective());
    }

    #[test]
    fn all_modules_over_zmod4_reflexive() {
        let caps = Caps::default();
        let r = zmod(4);
        for ideal in [
            BitSet::from_indices(4, [0]),
            BitSet::from_indices(4, [0, 2]),
            BitSet::from_indices(4, 0..4),
        ] {
            let m = Arc::new(cyclic_module(&r, Side::Left, &ideal, &caps).unwrap());
            assert!(is_reflexive(&m, &caps).unwrap(), "{}", m.label());
        }
    }
}
