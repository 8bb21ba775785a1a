//! Ring-level predicates assembled from the lattice and homological
//! primitives: self-injectivity (Baer test), annihilator conditions, Kasch,
//! CF/IF embeddings, semisimplicity, and the quasi-Frobenius style bundles.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Caps, Result};
use crate::ext::embeds_in_free;
use crate::hom::{enumerate_hom_tables, hom_set, TableView};
use crate::module::{
    is_essential, regular_module, socle, submodules, subset_label, FModule, Side,
};
use crate::ring::FiniteRing;

/// Which side of the ring a verdict talks about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PropSide {
    Left,
    Right,
    TwoSided,
}

impl From<Side> for PropSide {
    fn from(s: Side) -> Self {
        match s {
            Side::Left => PropSide::Left,
            Side::Right => PropSide::Right,
        }
    }
}

impl std::fmt::Display for PropSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PropSide::Left => "left",
            PropSide::Right => "right",
            PropSide::TwoSided => "two-sided",
        })
    }
}

/// Outcome of a ring-level property check.
///
/// `corpus_bounded` marks predicates whose universal quantifier was evaluated
/// against a finite module corpus rather than exhaustively; exact predicates
/// carry `false` there.  A witness is present whenever `value` is false and
/// the property is universally quantified.
#[derive(Clone, Debug)]
pub struct PropertyVerdict {
    pub property: &'static str,
    pub side: PropSide,
    pub value: bool,
    pub witness: Option<String>,
    pub corpus_bounded: bool,
}

impl PropertyVerdict {
    fn exact(property: &'static str, side: PropSide, value: bool, witness: Option<String>) -> Self {
        PropertyVerdict {
            property,
            side,
            value,
            witness,
            corpus_bounded: false,
        }
    }
    fn bounded(
        property: &'static str,
        side: PropSide,
        value: bool,
        witness: Option<String>,
    ) -> Self {
        PropertyVerdict {
            property,
            side,
            value,
            witness,
            corpus_bounded: true,
        }
    }
}

impl std::fmt::Display for PropertyVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} ({}): {}{}",
            self.property,
            self.side,
            if self.value { "holds" } else { "fails" },
            if self.corpus_bounded {
                " [relative to corpus]"
            } else {
                ""
            }
        )?;
        if let Some(w) = &self.witness {
            write!(f, "; witness: {w}")?;
        }
        Ok(())
    }
}

/// The full ideal lattice of the ring on one side, as element bitsets in
/// deterministic order.
pub fn ideal_lattice(ring: &Arc<FiniteRing>, side: Side, caps: &Caps) -> Result<Vec<BitSet>> {
    let reg = Arc::new(regular_module(ring, side, caps)?);
    Ok(submodules(&reg).into_iter().map(|s| s.bits().clone()).collect())
}

fn regular_view(ring: &FiniteRing, side: Side) -> TableView {
    let n = ring.size();
    let act = match side {
        Side::Left => ring.mul_table().to_vec(),
        Side::Right => {
            let mut t = vec![0u16; n * n];
            for r in 0..n {
                for x in 0..n {
                    t[r * n + x] = ring.mul(x, r) as u16;
                }
            }
            t
        }
    };
    TableView {
        size: n,
        ring_n: n,
        add: ring.add_table().to_vec(),
        act,
        zero: ring.zero(),
    }
}

fn ideal_view(ring: &FiniteRing, side: Side, ideal: &BitSet) -> (TableView, Vec<usize>) {
    let elems = ideal.to_vec();
    let sz = elems.len();
    let mut pos = vec![usize::MAX; ring.size()];
    for (i, &e) in elems.iter().enumerate() {
        pos[e] = i;
    }
    let mut add = vec![0u16; sz * sz];
    for i in 0..sz {
        for j in 0..sz {
            add[i * sz + j] = pos[ring.add(elems[i], elems[j])] as u16;
        }
    }
    let n = ring.size();
    let mut act = vec![0u16; n * sz];
    for r in 0..n {
        for i in 0..sz {
            let v = match side {
                Side::Left => ring.mul(r, elems[i]),
                Side::Right => ring.mul(elems[i], r),
            };
            act[r * sz + i] = pos[v] as u16;
        }
    }
    (
        TableView {
            size: sz,
            ring_n: n,
            add,
            act,
            zero: pos[ring.zero()],
        },
        elems,
    )
}

fn ideal_generators(ring: &FiniteRing, side: Side, ideal: &BitSet) -> Vec<usize> {
    let left = side == Side::Left;
    let mut gens: Vec<usize> = Vec::new();
    let mut span = ring.ideal_closure_bits(&[], left);
    // max-gain greedy keeps the generating set short
    while span != *ideal {
        let mut best: Option<(usize, usize, BitSet)> = None;
        for x in ideal.iter() {
            if span.contains(x) {
                continue;
            }
            gens.push(x);
            let trial = ring.ideal_closure_bits(&gens, left);
            gens.pop();
            let gain = trial.len();
            if best.as_ref().map_or(true, |(g, _, _)| gain > *g) {
                best = Some((gain, x, trial));
            }
        }
        let (_, x, trial) = best.expect("ideal not spanned");
        gens.push(x);
        span = trial;
    }
    gens
}

/// Baer self-injectivity test on one side.
///
/// For every ideal `I` of that side, every linear map `I → R` must be given
/// by multiplication with a fixed ring element (checked on a generating set
/// of `I`; both maps are linear, so that suffices).  Hom sets are enumerated
/// by constraint propagation over the raw tables, which is the route played
/// against the `Ext¹`-based one by the harness.
pub fn self_injective(ring: &Arc<FiniteRing>, side: Side, caps: &Caps) -> Result<PropertyVerdict> {
    let reg_view = regular_view(ring, side);
    let lattice = ideal_lattice(ring, side, caps)?;
    for ideal in &lattice {
        let (view, elems) = ideal_view(ring, side, ideal);
        let gens = ideal_generators(ring, side, ideal);
        let gpos: Vec<usize> = gens
            .iter()
            .map(|&g| elems.iter().position(|&e| e == g).unwrap())
            .collect();
        let homs = enumerate_hom_tables(&view, &reg_view);
        for table in &homs {
            let extends = (0..ring.size()).any(|a| {
                gens.iter().zip(&gpos).all(|(&g, &gp)| {
                    let want = match side {
                        Side::Left => ring.mul(g, a),
                        Side::Right => ring.mul(a, g),
                    };
                    table[gp] as usize == want
                })
            });
            if !extends {
                let desc: Vec<String> = gens
                    .iter()
                    .zip(&gpos)
                    .map(|(&g, &gp)| format!("{g}→{}", table[gp]))
                    .collect();
                return Ok(PropertyVerdict::exact(
                    "self-injective",
                    side.into(),
                    false,
                    Some(format!(
                        "{side} ideal {} carries hom [{}] with no multiplier",
                        subset_label(ideal),
                        desc.join(", ")
                    )),
                ));
            }
        }
    }
    Ok(PropertyVerdict::exact("self-injective", side.into(), true, None))
}

fn sumset_bits(ring: &FiniteRing, a: &BitSet, b: &BitSet) -> BitSet {
    let mut out = BitSet::new(ring.size());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// The two annihilator conditions.
///
/// Flag (a): `ℓ(I ∩ J) = ℓ(I) + ℓ(J)` for all right ideals `I`, `J`.
/// Flag (b): `ℓ𝔯(I) = I` for all left ideals and `𝔯ℓ(J) = J` for all right
/// ideals.  Both are exact scans over the full ideal lattices.
pub fn annihilator_conditions(
    ring: &Arc<FiniteRing>,
    caps: &Caps,
) -> Result<(PropertyVerdict, PropertyVerdict)> {
    let left_ideals = ideal_lattice(ring, Side::Left, caps)?;
    let right_ideals = ideal_lattice(ring, Side::Right, caps)?;
    let l_of_right: Vec<BitSet> = right_ideals.iter().map(|i| ring.left_ann_bits(i)).collect();
    let mut right_index: HashMap<&BitSet, usize> = HashMap::new();
    for (k, i) in right_ideals.iter().enumerate() {
        right_index.insert(i, k);
    }

    let mut flag_a = PropertyVerdict::exact("annihilator-meet-law", PropSide::TwoSided, true, None);
    'outer: for (ii, i) in right_ideals.iter().enumerate() {
        for (jj, j) in right_ideals.iter().enumerate() {
            let meet = i.intersection(j);
            let k = *right_index
                .get(&meet)
                .expect("lattice closed under intersection");
            let lhs = &l_of_right[k];
            let rhs = sumset_bits(ring, &l_of_right[ii], &l_of_right[jj]);
            if *lhs != rhs {
                flag_a.value = false;
                flag_a.witness = Some(format!(
                    "right ideals I={}, J={}: ℓ(I∩J)={} but ℓ(I)+ℓ(J)={}",
                    subset_label(i),
                    subset_label(j),
                    subset_label(lhs),
                    subset_label(&rhs)
                ));
                break 'outer;
            }
        }
    }

    let mut flag_b =
        PropertyVerdict::exact("annihilator-double-dual", PropSide::TwoSided, true, None);
    for i in &left_ideals {
        let back = ring.left_ann_bits(&ring.right_ann_bits(i));
        if back != *i {
            flag_b.value = false;
            flag_b.witness = Some(format!(
                "left ideal I={} has ℓ𝔯(I)={}",
                subset_label(i),
                subset_label(&back)
            ));
            break;
        }
    }
    if flag_b.value {
        for j in &right_ideals {
            let back = ring.right_ann_bits(&ring.left_ann_bits(j));
            if back != *j {
                flag_b.value = false;
                flag_b.witness = Some(format!(
                    "right ideal J={} has 𝔯ℓ(J)={}",
                    subset_label(j),
                    subset_label(&back)
                ));
                break;
            }
        }
    }
    Ok((flag_a, flag_b))
}

/// Kasch condition: every nonzero cyclic module `R/I` has a nonzero dual.
///
/// For a left ideal `I`, `(R/I)* ≅ 𝔯(I)`, so the check reduces to annihilator
/// scans.  Computed over all proper ideals and, independently, over the
/// maximal ones; a disagreement would be a library bug and stops the build.
pub fn kasch(ring: &Arc<FiniteRing>, side: Side, caps: &Caps) -> Result<PropertyVerdict> {
    let lattice = ideal_lattice(ring, side, caps)?;
    let n = ring.size();
    let proper: Vec<&BitSet> = lattice.iter().filter(|i| i.len() < n).collect();
    let dual_nonzero = |i: &BitSet| -> bool {
        let ann = match side {
            Side::Left => ring.right_ann_bits(i),
            Side::Right => ring.left_ann_bits(i),
        };
        ann.len() > 1
    };
    let all_route = proper.iter().all(|i| dual_nonzero(i));
    let maximal: Vec<&&BitSet> = proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| j.len() > i.len() && i.is_subset(j))
        })
        .collect();
    let max_route = maximal.iter().all(|i| dual_nonzero(i));
    assert_eq!(
        all_route, max_route,
        "Kasch routes disagree on {}",
        ring.label()
    );
    let witness = if all_route {
        None
    } else {
        maximal
            .iter()
            .find(|i| !dual_nonzero(i))
            .map(|i| format!("maximal {side} ideal {} annihilates nothing", subset_label(i)))
    };
    Ok(PropertyVerdict::exact("kasch", side.into(), all_route, witness))
}

/// Semisimplicity: trivial Jacobson radical.
pub fn semisimple(ring: &Arc<FiniteRing>) -> PropertyVerdict {
    let rad = ring.jacobson_radical();
    let value = rad.len() == 1;
    PropertyVerdict::exact(
        "semisimple",
        PropSide::TwoSided,
        value,
        if value {
            None
        } else {
            Some(format!("radical = {}", subset_label(rad.bits())))
        },
    )
}

/// Von Neumann regularity as a verdict.
pub fn regular(ring: &Arc<FiniteRing>) -> PropertyVerdict {
    let value = ring.is_regular();
    let witness = if value {
        None
    } else {
        ring.elements()
            .find(|&a| !ring.elements().any(|x| ring.mul(ring.mul(a, x), a) == a))
            .map(|a| format!("no x with {a}·x·{a} = {a}"))
    };
    PropertyVerdict::exact("regular", PropSide::TwoSided, value, witness)
}

/// Semiregularity: `R/rad R` is regular.  Uniformly true at finite scale,
/// but computed, not assumed.
pub fn semiregular(ring: &Arc<FiniteRing>) -> PropertyVerdict {
    let rad = ring.jacobson_radical();
    let q = ring
        .quotient_by_ideal_bits(rad.bits(), format!("{}/rad", ring.label()));
    let value = q.is_regular();
    PropertyVerdict::exact("semiregular", PropSide::TwoSided, value, None)
}

/// Whether the socle of the regular module is essential.
pub fn socle_essential(ring: &Arc<FiniteRing>, side: Side, caps: &Caps) -> Result<PropertyVerdict> {
    let reg = Arc::new(regular_module(ring, side, caps)?);
    let soc = socle(&reg);
    let value = is_essential(&soc, &reg)?;
    Ok(PropertyVerdict::exact(
        "socle-essential",
        side.into(),
        value,
        if value {
            None
        } else {
            Some(format!("socle = {}", subset_label(soc.bits())))
        },
    ))
}

/// CF condition: every cyclic module `R/I` embeds in a finite free module.
///
/// A hom `R/I → R^k` (left case) is a tuple of elements of `𝔯(I)`, and the
/// embedding exists iff some tuple's kernels `ℓ(aⱼ)` intersect exactly to
/// `I`.  Searching up to `max(kmax, #generators of 𝔯(I))` makes the verdict
/// exact: the generators themselves witness `ℓ𝔯(I) = I` whenever any tuple
/// does.
pub fn cf_ring(
    ring: &Arc<FiniteRing>,
    side: Side,
    kmax: usize,
    caps: &Caps,
) -> Result<PropertyVerdict> {
    let lattice = ideal_lattice(ring, side, caps)?;
    for ideal in &lattice {
        let ann = match side {
            Side::Left => ring.right_ann_bits(ideal),
            Side::Right => ring.left_ann_bits(ideal),
        };
        let mut kernels: Vec<BitSet> = Vec::new();
        for a in ann.iter() {
            let k = match side {
                Side::Left => ring.left_ann_bits(&BitSet::from_indices(ring.size(), [a])),
                Side::Right => ring.right_ann_bits(&BitSet::from_indices(ring.size(), [a])),
            };
            if !kernels.contains(&k) {
                kernels.push(k);
            }
        }
        let ann_gens = ideal_generators(ring, side.opposite(), &ann);
        let bound = kmax.max(ann_gens.len());
        if !ideal_cover_search(&kernels, ideal, bound) {
            return Ok(PropertyVerdict::exact(
                "cyclic-embeds-in-free",
                side.into(),
                false,
                Some(format!(
                    "R/I for {side} ideal I={} admits no embedding (ℓ𝔯-closure = {})",
                    subset_label(ideal),
                    subset_label(&match side {
                        Side::Left => ring.left_ann_bits(&ann),
                        Side::Right => ring.right_ann_bits(&ann),
                    })
                )),
            ));
        }
    }
    Ok(PropertyVerdict::exact(
        "cyclic-embeds-in-free",
        side.into(),
        true,
        None,
    ))
}

/// Depth-first search for kernels intersecting exactly to `target`.
fn ideal_cover_search(kernels: &[BitSet], target: &BitSet, kmax: usize) -> bool {
    fn dfs(kernels: &[BitSet], target: &BitSet, from: usize, running: &BitSet, depth: usize) -> bool {
        if running == target {
            return true;
        }
        if depth == 0 {
            return false;
        }
        for (i, k) in kernels.iter().enumerate().skip(from) {
            let meet = running.intersection(k);
            if meet.len() >= running.len() {
                continue;
            }
            if !target.is_subset(&meet) {
                continue;
            }
            if dfs(kernels, target, i + 1, &meet, depth - 1) {
                return true;
            }
        }
        false
    }
    let mut full = BitSet::new(target.capacity());
    for x in 0..target.capacity() {
        full.insert(x);
    }
    dfs(kernels, target, 0, &full, kmax)
}

/// IF condition relative to a module corpus: every corpus module of the given
/// side embeds in a finite free module.
pub fn if_ring(
    ring: &Arc<FiniteRing>,
    side: Side,
    corpus_modules: &[Arc<FModule>],
    kmax: usize,
    caps: &Caps,
) -> Result<PropertyVerdict> {
    for m in corpus_modules {
        assert_eq!(m.side(), side);
        assert!(Arc::ptr_eq(m.ring(), ring));
        if embeds_in_free(m, kmax, true, caps)?.is_none() {
            return Ok(PropertyVerdict::bounded(
                "fp-embeds-in-free",
                side.into(),
                false,
                Some(format!("{} admits no embedding into a free module", m.label())),
            ));
        }
    }
    Ok(PropertyVerdict::bounded(
        "fp-embeds-in-free",
        side.into(),
        true,
        None,
    ))
}

/// The three cogenerator conditions, evaluated against a module corpus.
pub struct FpCogeneratorVerdicts {
    /// Nonzero maps are detected by maps into `K` (checked on cyclic pairs).
    pub separates_maps: PropertyVerdict,
    /// Every corpus module embeds in a finite power of `K`.
    pub embeds_in_power: PropertyVerdict,
    /// Kernels of all maps into `K` intersect trivially.
    pub kernels_trivial: PropertyVerdict,
}

impl FpCogeneratorVerdicts {
    pub fn all_agree(&self) -> bool {
        self.separates_maps.value == self.embeds_in_power.value
            && self.embeds_in_power.value == self.kernels_trivial.value
    }
}

/// Evaluates the FP-cogenerator conditions for `K` over a same-side corpus.
pub fn fp_cogenerator(
    k: &Arc<FModule>,
    corpus: &[Arc<FModule>],
    caps: &Caps,
) -> Result<FpCogeneratorVerdicts> {
    let side: PropSide = k.side().into();
    // (3) kernels intersect to zero
    let mut kernels_trivial = PropertyVerdict::bounded("cogenerator-kernels", side, true, None);
    for m in corpus {
        let homs = hom_set(m, k, caps)?;
        let mut meet = BitSet::from_indices(m.size(), 0..m.size());
        for h in &homs {
            meet.intersect_with(&h.kernel_bits());
        }
        if meet.len() != 1 {
            kernels_trivial.value = false;
            kernels_trivial.witness = Some(format!(
                "⋂ ker over Hom({}, {}) has {} elements",
                m.label(),
                k.label(),
                meet.len()
            ));
            break;
        }
    }
    // (2) embedding into K^{Hom(M,K)} via distinct evaluation signatures
    let mut embeds_in_power = PropertyVerdict::bounded("cogenerator-embeds", side, true, None);
    for m in corpus {
        let homs = hom_set(m, k, caps)?;
        let mut signatures = std::collections::HashSet::new();
        for x in m.elements() {
            let sig: Vec<u16> = homs.iter().map(|h| h.table()[x]).collect();
            signatures.insert(sig);
        }
        if signatures.len() != m.size() {
            embeds_in_power.value = false;
            embeds_in_power.witness = Some(format!(
                "{} → {}^I identifies elements",
                m.label(),
                k.label()
            ));
            break;
        }
    }
    // (1) maps into K separate nonzero maps between cyclic corpus modules
    let mut separates_maps = PropertyVerdict::bounded("cogenerator-separates", side, true, None);
    let cyclics: Vec<&Arc<FModule>> = corpus.iter().filter(|m| m.gens() <= 1).collect();
    'outer: for m in &cyclics {
        for n in &cyclics {
            let maps = hom_set(m, n, caps)?;
            let into_k = hom_set(n, k, caps)?;
            for f in &maps {
                if f.is_zero() {
                    continue;
                }
                let detected = into_k.iter().any(|g| {
                    m.gen_images()
                        .iter()
                        .any(|&gi| g.table()[f.apply(gi)] as usize != g.target().zero())
                });
                if !detected {
                    separates_maps.value = false;
                    separates_maps.witness = Some(format!(
                        "nonzero {} → {} killed by every map into {}",
                        m.label(),
                        n.label(),
                        k.label()
                    ));
                    break 'outer;
                }
            }
        }
    }
    Ok(FpCogeneratorVerdicts {
        separates_maps,
        embeds_in_power,
        kernels_trivial,
    })
}

/// Quasi-Frobenius at finite scale: self-injective on both sides.
pub fn qf(ring: &Arc<FiniteRing>, caps: &Caps) -> Result<PropertyVerdict> {
    let l = self_injective(ring, Side::Left, caps)?;
    let r = self_injective(ring, Side::Right, caps)?;
    Ok(PropertyVerdict::exact(
        "qf",
        PropSide::TwoSided,
        l.value && r.value,
        l.witness.or(r.witness),
    ))
}

/// Weakly quasi-Frobenius via the annihilator route (independent of the Baer
/// scans): both double-annihilator closures must be identities.
pub fn wqf(ring: &Arc<FiniteRing>, caps: &Caps) -> Result<PropertyVerdict> {
    let (_, flag_b) = annihilator_conditions(ring, caps)?;
    Ok(PropertyVerdict::exact(
        "wqf",
        PropSide::TwoSided,
        flag_b.value,
        flag_b.witness,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Caps;
    use crate::ring::{matrix_ring, ring_zmod, triangular_ring};

    fn zmod(n: usize) -> Arc<FiniteRing> {
        Arc::new(ring_zmod(n))
    }

    #[test]
    fn zmod_rings_are_self_injective() {
        let caps = Caps::default();
        for n in [2usize, 3, 4, 6, 8, 9, 12] {
            let r = zmod(n);
            for side in [Side::Left, Side::Right] {
                let v = self_injective(&r, side, &caps).unwrap();
                assert!(v.value, "zmod{n} {side}");
                assert!(!v.corpus_bounded);
            }
        }
    }

    #[test]
    fn triangular_ring_fails_baer_with_witness() {
        let caps = Caps::default();
        let f2 = zmod(2);
        let t = Arc::new(triangular_ring(&f2, 2, &caps).unwrap());
        for side in [Side::Left, Side::Right] {
            let v = self_injective(&t, side, &caps).unwrap();
            assert!(!v.value);
            assert!(v.witness.is_some());
        }
    }

    #[test]
    fn matrix_ring_is_self_injective_and_regular() {
        let caps = Caps::default();
        let f2 = zmod(2);
        let m = Arc::new(matrix_ring(&f2, 2, &caps).unwrap());
        assert!(self_injective(&m, Side::Left, &caps).unwrap().value);
        assert!(self_injective(&m, Side::Right, &caps).unwrap().value);
        assert!(regular(&m).value);
        assert!(semisimple(&m).value);
    }

    #[test]
    fn annihilator_flags_on_corpus() {
        let caps = Caps::default();
        let r = zmod(4);
        let (a, b) = annihilator_conditions(&r, &caps).unwrap();
        assert!(a.value && b.value);
        let f2 = zmod(2);
        let t = Arc::new(triangular_ring(&f2, 2, &caps).unwrap());
        let (_, tb) = annihilator_conditions(&t, &caps).unwrap();
        assert!(!tb.value);
        assert!(tb.witness.is_some());
    }

    #[test]
    fn kasch_and_socle() {
        let caps = Caps::default();
        let r = zmod(4);
        assert!(kasch(&r, Side::Left, &caps).unwrap().value);
        assert!(socle_essential(&r, Side::Left, &caps).unwrap().value);
        let one = zmod(1);
        assert!(kasch(&one, Side::Left, &caps).unwrap().value);
    }

    #[test]
    fn cf_ring_checks() {
        let caps = Caps::default();
        let r = zmod(4);
        assert!(cf_ring(&r, Side::Left, 3, &caps).unwrap().value);
        let f2 = zmod(2);
        let t = Arc::new(triangular_ring(&f2, 2, &caps).unwrap());
        let lv = cf_ring(&t, Side::Left, 3, &caps).unwrap();
        let rv = cf_ring(&t, Side::Right, 3, &caps).unwrap();
        assert!(!(lv.value && rv.value), "T2(F2) cannot be CF on both sides");
    }

    #[test]
    fn qf_equals_wqf_on_small_rings() {
        let caps = Caps::default();
        for n in [2usize, 4, 6, 9] {
            let r = zmod(n);
            assert_eq!(qf(&r, &caps).unwrap().value, wqf(&r, &caps).unwrap().value);
        }
        let f2 = zmod(2);
        let t = Arc::new(triangular_ring(&f2, 2, &caps).unwrap());
        assert_eq!(qf(&t, &caps).unwrap().value, wqf(&t, &caps).unwrap().value);
        assert!(!qf(&t, &caps).unwrap().value);
    }
}
