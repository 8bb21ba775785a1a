//! `Ext¹` from stored presentations, embeddings into free modules, and the
//! extension-style injectivity predicate.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Caps, Result};
use crate::hom::{hom_set, ModuleHom};
use crate::module::{
    encode_vec, free_module, regular_module, submodule_as_module, vector_submodule_closure,
    FModule, Submodule,
};
use crate::tensor::FiniteAbGroup;

/// `Ext¹(M, N)` computed from the presentation `0 → K → R^m → M → 0`:
/// `Hom(K, N)` modulo restrictions of `Hom(R^m, N)`.
pub fn ext1(m: &Arc<FModule>, n: &Arc<FModule>, caps: &Caps) -> Result<FiniteAbGroup> {
    assert_eq!(m.side(), n.side());
    assert!(Arc::ptr_eq(m.ring(), n.ring()));
    let ring = m.ring();
    let rn = ring.size();
    let mg = m.gens();
    let free = Arc::new(free_module(ring, m.side(), mg, caps)?);
    // the relation submodule of R^m; in the free module, code == element index
    let total = free.size();
    let seeds: Vec<usize> = m
        .relations_reduced()
        .iter()
        .map(|r| encode_vec(r, rn))
        .collect();
    let kbits = vector_submodule_closure(ring, m.side(), mg, total, &seeds);
    let ksub = Submodule::from_bits(&free, kbits);
    let (kmod, kmap) = submodule_as_module(&ksub, caps)?;
    let kmod = Arc::new(kmod);

    let homs_k = hom_set(&kmod, n, caps)?;
    let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
    for (i, h) in homs_k.iter().enumerate() {
        index.insert(h.table().to_vec(), i);
    }

    // restrictions of Hom(R^m, N): one per generator-image tuple of the free
    caps.check_module((n.size() as u128).pow(mg as u32), "ext restriction scan")?;
    let mut restricted: BitSet = BitSet::new(homs_k.len());
    let mut images = vec![0usize; mg];
    loop {
        let table: Vec<u16> = kmod
            .elements()
            .map(|x| {
                let v = crate::module::decode_vec(kmap[x], rn, mg);
                n.combine(&v, &images) as u16
            })
            .collect();
        let idx = *index
            .get(&table)
            .expect("restriction of a free hom is a hom on K");
        restricted.insert(idx);
        let mut k = mg;
        loop {
            if k == 0 {
                return finish_ext(m, n, &homs_k, &index, &restricted);
            }
            k -= 1;
            images[k] += 1;
            if images[k] < n.size() {
                break;
            }
            images[k] = 0;
        }
    }
}

fn finish_ext(
    m: &Arc<FModule>,
    n: &Arc<FModule>,
    homs_k: &[ModuleHom],
    index: &HashMap<Vec<u16>, usize>,
    restricted: &BitSet,
) -> Result<FiniteAbGroup> {
    // quotient of the hom group by the restriction subgroup
    let count = homs_k.len();
    let add_idx = |a: usize, b: usize| -> usize {
        let sum = homs_k[a].add_pointwise(&homs_k[b]);
        *index.get(sum.table()).expect("hom group closed under +")
    };
    let members: Vec<usize> = restricted.to_vec();
    let mut coset_of = vec![u16::MAX; count];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..count {
        if coset_of[i] != u16::MAX {
            continue;
        }
        let id = reps.len() as u16;
        for &r in &members {
            coset_of[add_idx(i, r)] = id;
        }
        reps.push(i);
    }
    let size = reps.len();
    let mut add = vec![0u16; size * size];
    for i in 0..size {
        for j in 0..=i {
            let id = coset_of[add_idx(reps[i], reps[j])];
            add[i * size + j] = id;
            add[j * size + i] = id;
        }
    }
    let zero_idx = homs_k
        .iter()
        .position(|h| h.is_zero())
        .expect("zero hom present");
    let zero = coset_of[zero_idx] as usize;
    Ok(FiniteAbGroup::from_parts(
        format!("Ext1({},{})", m.label(), n.label()),
        size,
        add,
        zero,
    ))
}

/// Deduplicated kernels of a hom family, keeping the first hom per kernel.
fn distinct_kernels(homs: &[ModuleHom]) -> Vec<(BitSet, usize)> {
    let mut seen: Vec<(BitSet, usize)> = Vec::new();
    for (i, h) in homs.iter().enumerate() {
        let k = h.kernel_bits();
        if !seen.iter().any(|(b, _)| *b == k) {
            seen.push((k, i));
        }
    }
    seen
}

/// Searches for hom indices whose kernels intersect to zero, taking at most
/// `kmax` of them.  Deterministic: depth-first in ascending index order with
/// a strictly shrinking running intersection.
fn kernel_cover_search(
    kernels: &[(BitSet, usize)],
    zero_elem: usize,
    source_size: usize,
    kmax: usize,
) -> Option<Vec<usize>> {
    fn dfs(
        kernels: &[(BitSet, usize)],
        zero_elem: usize,
        from: usize,
        running: &BitSet,
        chosen: &mut Vec<usize>,
        kmax: usize,
    ) -> bool {
        if running.len() == 1 && running.contains(zero_elem) {
            return true;
        }
        if chosen.len() == kmax {
            return false;
        }
        for (i, (k, idx)) in kernels.iter().enumerate().skip(from) {
            let meet = running.intersection(k);
            if meet.len() >= running.len() {
                continue; // no progress
            }
            chosen.push(*idx);
            if dfs(kernels, zero_elem, i + 1, &meet, chosen, kmax) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut full = BitSet::new(source_size);
    for x in 0..source_size {
        full.insert(x);
    }
    let mut chosen = Vec::new();
    if dfs(kernels, zero_elem, 0, &full, &mut chosen, kmax) {
        Some(chosen)
    } else {
        None
    }
}

/// Searches for an injective hom `M → R^k` with `k ≤ kmax`.
///
/// `Hom(M, R^k) = Hom(M, R)^k`, so a witness is a tuple of homs into the
/// regular module whose kernels intersect trivially; the first witness in
/// lexicographic generator-image order is realized and returned.  `Ok(None)`
/// certifies that no embedding with `k ≤ kmax` exists, because the hom
/// enumeration is exhaustive.
pub fn find_embedding_into_free(
    m: &Arc<FModule>,
    kmax: usize,
    caps: &Caps,
) -> Result<Option<ModuleHom>> {
    let ring = m.ring();
    if m.size() == 1 {
        let free0 = Arc::new(free_module(ring, m.side(), 0, caps)?);
        return Ok(Some(ModuleHom::zero_hom(m, &free0)));
    }
    let reg = Arc::new(regular_module(ring, m.side(), caps)?);
    let homs = hom_set(m, &reg, caps)?;
    let kernels = distinct_kernels(&homs);
    let Some(chosen) = kernel_cover_search(&kernels, m.zero(), m.size(), kmax) else {
        return Ok(None);
    };
    let k = chosen.len();
    let free = Arc::new(free_module(ring, m.side(), k, caps)?);
    let n = ring.size();
    let table: Vec<u16> = m
        .elements()
        .map(|x| {
            let digits: Vec<usize> = chosen.iter().map(|&i| homs[i].apply(x)).collect();
            encode_vec(&digits, n) as u16
        })
        .collect();
    let hom = ModuleHom::from_table(m, &free, table);
    assert!(hom.is_injective());
    Ok(Some(hom))
}

/// Existence-only version of the embedding search; never realizes `R^k`.
///
/// When `extend_kmax` is set, the depth bound is raised to the number of
/// greedy generators of the dual hom family, which makes a negative answer
/// exact rather than `kmax`-bounded: the intersection of all kernels equals
/// the intersection over those generators.
pub fn embeds_in_free(
    m: &Arc<FModule>,
    kmax: usize,
    extend_kmax: bool,
    caps: &Caps,
) -> Result<Option<usize>> {
    if m.size() == 1 {
        return Ok(Some(0));
    }
    let ring = m.ring();
    let reg = Arc::new(regular_module(ring, m.side(), caps)?);
    let homs = hom_set(m, &reg, caps)?;
    let kernels = distinct_kernels(&homs);
    let bound = if extend_kmax {
        kmax.max(dual_generator_count(m, &homs))
    } else {
        kmax
    };
    Ok(kernel_cover_search(&kernels, m.zero(), m.size(), bound).map(|c| c.len()))
}

/// Greedy generator count of `Hom(M, R)` as a module of the opposite side.
fn dual_generator_count(m: &FModule, homs: &[ModuleHom]) -> usize {
    let ring = m.ring();
    let n = ring.size();
    let tables: Vec<Vec<u16>> = homs.iter().map(|h| h.table().to_vec()).collect();
    let mut index: HashMap<&[u16], usize> = HashMap::new();
    for (i, t) in tables.iter().enumerate() {
        index.insert(t.as_slice(), i);
    }
    let scale = |r: usize, t: &[u16]| -> Vec<u16> {
        t.iter()
            .map(|&v| match m.side() {
                crate::module::Side::Left => ring.mul(v as usize, r) as u16,
                crate::module::Side::Right => ring.mul(r, v as usize) as u16,
            })
            .collect()
    };
    let add = |a: &[u16], b: &[u16]| -> Vec<u16> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| ring.add(x as usize, y as usize) as u16)
            .collect()
    };
    let close = |seeds: &[usize]| -> BitSet {
        let zero_t = vec![ring.zero() as u16; m.size()];
        let zero_idx = index[zero_t.as_slice()];
        let orbit: Vec<usize> = seeds
            .iter()
            .flat_map(|&g| (0..n).map(move |r| (r, g)))
            .map(|(r, g)| index[scale(r, &tables[g]).as_slice()])
            .collect();
        crate::bits::additive_span_by(tables.len(), zero_idx, orbit, |a, b| {
            index[add(&tables[a], &tables[b]).as_slice()]
        })
    };
    let mut chosen: Vec<usize> = Vec::new();
    let mut span = close(&[]);
    while span.len() != tables.len() {
        let mut best: Option<(usize, usize, BitSet)> = None;
        for i in 0..tables.len() {
            if span.contains(i) {
                continue;
            }
            chosen.push(i);
            let trial = close(&chosen);
            chosen.pop();
            let gain = trial.len();
            if best.as_ref().map_or(true, |(g, _, _)| gain > *g) {
                best = Some((gain, i, trial));
            }
        }
        let (_, i, trial) = best.expect("hom set not spanned");
        chosen.push(i);
        span = trial;
    }
    chosen.len()
}

/// fp-injectivity of `M` relative to a battery of same-side monomorphisms:
/// every hom from a mono's source into `M` must extend along the mono.
pub fn is_fp_injective_mod(
    m: &Arc<FModule>,
    monos: &[ModuleHom],
    caps: &Caps,
) -> Result<(bool, Option<String>)> {
    for mu in monos {
        debug_assert!(mu.is_injective());
        assert_eq!(mu.source().side(), m.side());
        // skip monos whose hom scans would blow the enumeration budget
        let gens = mu.source().gens().max(mu.target().gens());
        if (m.size() as u128).pow(gens as u32) > caps.max_module as u128 {
            continue;
        }
        let from_k = hom_set(mu.source(), m, caps)?;
        let from_l = hom_set(mu.target(), m, caps)?;
        let mut extensions: HashSet<Vec<u16>> = HashSet::new();
        for g in &from_l {
            let restricted: Vec<u16> = mu.table().iter().map(|&x| g.table()[x as usize]).collect();
            extensions.insert(restricted);
        }
        for f in &from_k {
            if !extensions.contains(f.table()) {
                return Ok((
                    false,
                    Some(format!(
                        "hom {} → {} does not extend along {} ↪ {}",
                        mu.source().label(),
                        m.label(),
                        mu.source().label(),
                        mu.target().label()
                    )),
                ));
            }
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitSet;
    use crate::error::Caps;
    use crate::module::{cyclic_module, Side};
    use crate::ring::{ring_quotient_poly, ring_zmod};

    fn zmod(n: usize) -> Arc<crate::ring::FiniteRing> {
        Arc::new(ring_zmod(n))
    }

    #[test]
    fn ext_vanishes_on_free_sources() {
        let caps = Caps::default();
        let r = zmod(4);
        let free = Arc::new(free_module(&r, Side::Left, 1, &caps).unwrap());
        let n = Arc::new(
            cyclic_module(&r, Side::Left, &BitSet::from_indices(4, [0, 2]), &caps).unwrap(),
        );
        assert_eq!(ext1(&free, &n, &caps).unwrap().size(), 1);
        let free2 = Arc::new(free_module(&r, Side::Left, 2, &caps).unwrap());
        assert_eq!(ext1(&free2, &n, &caps).unwrap().size(), 1);
    }

    #[test]
    fn ext_of_half_into_regular_over_zmod4_vanishes() {
        let caps = Caps::default();
        let r = zmod(4);
        let half = Arc::new(
            cyclic_module(&r, Side::Left, &BitSet::from_indices(4, [0, 2]), &caps).unwrap(),
        );
        let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        assert_eq!(ext1(&half, &reg, &caps).unwrap().size(), 1);
    }

    #[test]
    fn ext_self_over_dual_numbers_has_two_elements() {
        let caps = Caps::default();
        let f2 = zmod(2);
        // F_2[x]/(x^2)
        let r = Arc::new(ring_quotient_poly(&f2, &[0, 0, 1], &caps).unwrap());
        // the simple module R/(x): x is index 2 (coefficient vector (0,1))
        let rad = BitSet::from_indices(4, [0, 2]);
        let simple = Arc::new(cyclic_module(&r, Side::Left, &rad, &caps).unwrap());
        assert_eq!(simple.size(), 2);
        let e = ext1(&simple, &simple, &caps).unwrap();
        assert_eq!(e.size(), 2);
        assert!(e.validate());
    }

    #[test]
    fn embedding_of_half_into_zmod4() {
        let caps = Caps::default();
        let r = zmod(4);
        let half = Arc::new(
            cyclic_module(&r, Side::Left, &BitSet::from_indices(4, [0, 2]), &caps).unwrap(),
        );
        let emb = find_embedding_into_free(&half, 3, &caps).unwrap().unwrap();
        assert!(emb.is_injective());
        assert_eq!(emb.target().gens(), 1);
        // the generator lands on 2 (the only embedding image)
        assert_eq!(embeds_in_free(&half, 3, true, &caps).unwrap(), Some(1));
        // free module embeds identically
        let reg = Arc::new(regular_module(&r, Side::Left, &caps).unwrap());
        assert_eq!(embeds_in_free(&reg, 3, true, &caps).unwrap(), Some(1));
        // zero module embeds in rank 0
        let zero = Arc::new(
            cyclic_module(&r, Side::Left, &BitSet::from_indices(4, 0..4), &caps).unwrap(),
        );
        assert_eq!(embeds_in_free(&zero, 3, true, &caps).unwrap(), Some(0));
    }
}
