//! Built-in rings and groups, and the test corpus: per-ring module
//! collections on both sides with monomorphism batteries, generated
//! deterministically from a seed.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Caps, Result};
use crate::group::FiniteGroup;
use crate::group_ring::group_ring;
use crate::hom::ModuleHom;
use crate::module::{
    cyclic_module, modules_isomorphic, present_module, socle, submodule_as_module,
    cyclic_submodules, FModule, Side, Submodule,
};
use crate::properties::ideal_lattice;
use crate::ring::{
    matrix_ring, product_ring, ring_quotient_poly, ring_zmod, triangular_ring, FiniteRing,
};

/// Labels of the built-in rings, in listing order.
pub fn builtin_ring_labels() -> Vec<&'static str> {
    vec![
        "zmod1", "zmod2", "zmod3", "zmod4", "zmod5", "zmod6", "zmod7", "zmod8", "zmod9", "zmod10",
        "zmod11", "zmod12", "f2", "f3", "f4", "f2x2", "m2f2", "tri2-f2", "f2xf3", "f2c2", "f2c3",
        "f3c3", "f2c2c2", "zmod4c2",
    ]
}

/// Labels of the built-in groups, in listing order.
pub fn builtin_group_labels() -> Vec<&'static str> {
    vec!["trivial", "c2", "c3", "c4", "c6", "c2c2", "s3"]
}

fn relabel(mut r: FiniteRing, label: &str) -> Arc<FiniteRing> {
    r.set_label(label);
    Arc::new(r)
}

/// Constructs a built-in ring by label; `Ok(None)` when the label is unknown.
pub fn builtin_ring(label: &str, caps: &Caps) -> Result<Option<Arc<FiniteRing>>> {
    if let Some(n) = label
        .strip_prefix("zmod")
        .and_then(|num| num.parse::<usize>().ok())
    {
        if (1..=64).contains(&n) {
            caps.check_ring(n as u128, "built-in ring")?;
            return Ok(Some(Arc::new(ring_zmod(n))));
        }
        return Ok(None);
    }
    let f2: Arc<FiniteRing> = relabel(ring_zmod(2), "f2");
    let f3: Arc<FiniteRing> = relabel(ring_zmod(3), "f3");
    let zmod4: Arc<FiniteRing> = Arc::new(ring_zmod(4));
    let made = match label {
        "f2" => Some(f2),
        "f3" => Some(f3),
        "f4" => Some(relabel(ring_quotient_poly(&f2, &[1, 1, 1], caps)?, "f4")),
        "f2x2" => Some(relabel(ring_quotient_poly(&f2, &[0, 0, 1], caps)?, "f2x2")),
        "m2f2" => Some(relabel(matrix_ring(&f2, 2, caps)?, "m2f2")),
        "tri2-f2" => Some(relabel(triangular_ring(&f2, 2, caps)?, "tri2-f2")),
        "f2xf3" => Some(relabel(product_ring(&f2, &f3, caps)?, "f2xf3")),
        "f2c2" => Some(relabel(
            group_ring(&f2, &Arc::new(FiniteGroup::cyclic(2)), caps)?,
            "f2c2",
        )),
        "f2c3" => Some(relabel(
            group_ring(&f2, &Arc::new(FiniteGroup::cyclic(3)), caps)?,
            "f2c3",
        )),
        "f3c3" => Some(relabel(
            group_ring(&f3, &Arc::new(FiniteGroup::cyclic(3)), caps)?,
            "f3c3",
        )),
        "f2c2c2" => Some(relabel(
            group_ring(
                &f2,
                &Arc::new(FiniteGroup::product(
                    &FiniteGroup::cyclic(2),
                    &FiniteGroup::cyclic(2),
                )),
                caps,
            )?,
            "f2c2c2",
        )),
        "zmod4c2" => Some(relabel(
            group_ring(&zmod4, &Arc::new(FiniteGroup::cyclic(2)), caps)?,
            "zmod4c2",
        )),
        _ => None,
    };
    Ok(made)
}

/// Constructs a built-in group by label.
pub fn builtin_group(label: &str) -> Option<Arc<FiniteGroup>> {
    let g = match label {
        "trivial" => FiniteGroup::trivial(),
        "c2" => FiniteGroup::cyclic(2),
        "c3" => FiniteGroup::cyclic(3),
        "c4" => FiniteGroup::cyclic(4),
        "c6" => FiniteGroup::cyclic(6),
        "c2c2" => {
            let mut g = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
            g.set_label("c2c2");
            g
        }
        "s3" => FiniteGroup::symmetric(3),
        _ => return None,
    };
    Some(Arc::new(g))
}

/// Ring labels of the default corpus.
pub fn default_corpus_ring_labels() -> Vec<&'static str> {
    vec![
        "zmod2", "zmod3", "zmod4", "zmod6", "zmod8", "zmod9", "zmod12", "f4", "f2x2", "zmod4c2",
        "tri2-f2", "m2f2", "f2xf3", "f2c2", "f2c3", "f3c3", "f2c2c2",
    ]
}

/// The (base ring, group) pairs checked by the group-ring suites.
pub fn default_group_ring_pairs() -> Vec<(&'static str, &'static str)> {
    vec![
        ("f2", "c2"),
        ("f2", "c3"),
        ("f2", "c2c2"),
        ("f2", "s3"),
        ("f3", "c2"),
        ("f3", "c3"),
        ("f3", "c2c2"),
        ("zmod4", "c2"),
        ("zmod4", "c3"),
        ("zmod4", "c2c2"),
        ("f4", "c2"),
        ("f4", "c3"),
        ("f4", "c2c2"),
    ]
}

/// One side of a ring's test corpus.
pub struct SideCorpus {
    pub modules: Vec<Arc<FModule>>,
    /// Submodule inclusions into corpus modules; all verified injective.
    pub monos: Vec<ModuleHom>,
}

/// Modules and monomorphisms attached to one corpus ring.
pub struct RingCorpus {
    pub ring: Arc<FiniteRing>,
    pub left: SideCorpus,
    pub right: SideCorpus,
}

/// The full corpus: rings with module batteries, plus groups and the
/// group-ring pair grid.
pub struct Corpus {
    pub caps: Caps,
    pub seed: u64,
    pub rings: Vec<RingCorpus>,
    pub groups: Vec<Arc<FiniteGroup>>,
    pub group_ring_pairs: Vec<(Arc<FiniteRing>, Arc<FiniteGroup>)>,
}

pub const DEFAULT_SEED: u64 = 0x66_72_69_6e_67; // "fring"

fn fnv64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}


/// Isomorphism test that treats an over-budget search as "distinct"; the
/// corpus then keeps both candidates, which is harmless.
fn iso_or_distinct(a: &FModule, b: &FModule, caps: &Caps) -> Result<bool> {
    match modules_isomorphic(a, b, caps) {
        Ok(v) => Ok(v),
        Err(crate::error::Error::SizeOverflow { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Sampled-presentation size ceiling; keeps every corpus scan comfortable.
const SAMPLED_MODULE_MAX: usize = 512;

fn side_corpus(ring: &Arc<FiniteRing>, side: Side, caps: &Caps, seed: u64) -> Result<SideCorpus> {
    let mut modules: Vec<Arc<FModule>> = Vec::new();
    // all cyclic modules R/I, deduplicated up to isomorphism
    for ideal in ideal_lattice(ring, side, caps)? {
        let m = Arc::new(cyclic_module(ring, side, &ideal, caps)?);
        let mut duplicate = false;
        for existing in &modules {
            if iso_or_distinct(existing, &m, caps)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            modules.push(m);
        }
    }
    // seeded presentations with up to two generators and two relations
    let stream = seed
        ^ fnv64(ring.label().as_bytes())
        ^ match side {
            Side::Left => 0x1111_1111,
            Side::Right => 0x2222_2222,
        };
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    let n = ring.size();
    let mut attempts = 0;
    let mut accepted = 0;
    while accepted < 4 && attempts < 24 {
        attempts += 1;
        let gens = rng.random_range(1..=2usize);
        let nrels = rng.random_range(0..=2usize);
        let relations: Vec<Vec<usize>> = (0..nrels)
            .map(|_| (0..gens).map(|_| rng.random_range(0..n)).collect())
            .collect();
        if (n as u128).pow(gens as u32) > SAMPLED_MODULE_MAX as u128 {
            continue;
        }
        let label = format!("{}.{}.pres{}", ring.label(), side, attempts);
        let m = Arc::new(present_module(ring, side, gens, relations, caps, label)?);
        if m.size() > SAMPLED_MODULE_MAX {
            continue;
        }
        let mut duplicate = false;
        for existing in &modules {
            if iso_or_distinct(existing, &m, caps)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            modules.push(m);
            accepted += 1;
        }
    }

    // monomorphism battery: proper nonzero submodule inclusions
    let mut monos: Vec<ModuleHom> = Vec::new();
    for m in &modules {
        let mut subs: Vec<Submodule> = cyclic_submodules(m);
        let soc = socle(m);
        if !subs.iter().any(|s| s.bits() == soc.bits()) {
            subs.push(soc);
        }
        subs.sort_by_key(|s| (s.len(), s.bits().clone()));
        for s in subs {
            if s.is_zero() || s.len() == m.size() {
                continue;
            }
            // presentations with many generators blow the scan budgets of the
            // fp-predicates; skip such submodules
            let (sub_mod, value_map) = match submodule_as_module(&s, caps) {
                Ok(pair) => pair,
                Err(crate::error::Error::SizeOverflow { .. }) => continue,
                Err(e) => return Err(e),
            };
            if sub_mod.gens() > 2 {
                continue;
            }
            let sub_mod = Arc::new(sub_mod);
            let table: Vec<u16> = value_map.iter().map(|&x| x as u16).collect();
            let incl = ModuleHom::from_table(&sub_mod, m, table);
            debug_assert!(incl.is_injective() && incl.verify());
            monos.push(incl);
        }
    }
    Ok(SideCorpus { modules, monos })
}

impl RingCorpus {
    pub fn build(ring: &Arc<FiniteRing>, caps: &Caps, seed: u64) -> Result<RingCorpus> {
        Ok(RingCorpus {
            ring: Arc::clone(ring),
            left: side_corpus(ring, Side::Left, caps, seed)?,
            right: side_corpus(ring, Side::Right, caps, seed)?,
        })
    }

    pub fn side(&self, side: Side) -> &SideCorpus {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

impl Corpus {
    /// Builds the default corpus (rings, groups, group-ring grid).
    pub fn default_corpus(caps: &Caps, seed: u64) -> Result<Corpus> {
        let mut rings = Vec::new();
        for label in default_corpus_ring_labels() {
            let ring = builtin_ring(label, caps)?.expect("default corpus labels are built in");
            rings.push(RingCorpus::build(&ring, caps, seed)?);
        }
        let groups: Vec<Arc<FiniteGroup>> = ["c2", "c3", "c2c2", "s3"]
            .iter()
            .map(|l| builtin_group(l).unwrap())
            .collect();
        let mut group_ring_pairs = Vec::new();
        for (r, g) in default_group_ring_pairs() {
            let ring = builtin_ring(r, caps)?.expect("built-in");
            let group = builtin_group(g).expect("built-in");
            group_ring_pairs.push((ring, group));
        }
        Ok(Corpus {
            caps: *caps,
            seed,
            rings,
            groups,
            group_ring_pairs,
        })
    }

    /// A corpus for a single ring (no group-ring pairs).
    pub fn for_ring(ring: Arc<FiniteRing>, caps: &Caps, seed: u64) -> Result<Corpus> {
        Ok(Corpus {
            caps: *caps,
            seed,
            rings: vec![RingCorpus::build(&ring, caps, seed)?],
            groups: Vec::new(),
            group_ring_pairs: Vec::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        let caps = Caps::default();
        for label in builtin_ring_labels() {
            let r = builtin_ring(label, &caps).unwrap();
            assert!(r.is_some(), "{label}");
        }
        for label in builtin_group_labels() {
            assert!(builtin_group(label).is_some(), "{label}");
        }
        assert!(builtin_ring("nosuch", &caps).unwrap().is_none());
        assert!(builtin_group("nosuch").is_none());
    }

    #[test]
    fn group_ring_sizes() {
        let caps = Caps::default();
        assert_eq!(builtin_ring("f2c3", &caps).unwrap().unwrap().size(), 8);
        assert_eq!(builtin_ring("f2c2c2", &caps).unwrap().unwrap().size(), 16);
        assert_eq!(builtin_ring("zmod4c2", &caps).unwrap().unwrap().size(), 16);
        assert_eq!(builtin_ring("f3c3", &caps).unwrap().unwrap().size(), 27);
    }

    #[test]
    fn corpus_for_small_ring_is_deterministic() {
        let caps = Caps::default();
        let ring = builtin_ring("zmod4", &caps).unwrap().unwrap();
        let c1 = RingCorpus::build(&ring, &caps, DEFAULT_SEED).unwrap();
        let c2 = RingCorpus::build(&ring, &caps, DEFAULT_SEED).unwrap();
        let labels1: Vec<&str> = c1.left.modules.iter().map(|m| m.label()).collect();
        let labels2: Vec<&str> = c2.left.modules.iter().map(|m| m.label()).collect();
        assert_eq!(labels1, labels2);
        assert!(c1.left.modules.len() >= 3);
        assert!(!c1.left.monos.is_empty());
    }
}
