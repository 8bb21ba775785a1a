//! Tensor products over the base ring, computed from presentations.
//!
//! For a right module `M` presented by `m` generators and relation rows `A`,
//! and a left module `N`, the group `M ⊗ N` is realized as the quotient of
//! `N^m` by the subgroup generated by the rows `(aᵢ·x)ᵢ` with `a` a relation
//! and `x ∈ N`.  This avoids the `|M|·|N|` generators-and-relations blowup.

use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Caps, Result};
use crate::module::{decode_vec, encode_vec, FModule, Side};
use crate::hom::ModuleHom;

/// A finite abelian group with an explicit addition table.
#[derive(Clone)]
pub struct FiniteAbGroup {
    label: String,
    size: usize,
    add: Vec<u16>,
    zero: usize,
}

impl FiniteAbGroup {
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn size(&self) -> usize {
        self.size
    }
    pub fn zero(&self) -> usize {
        self.zero
    }
    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y] as usize
    }
    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub(crate) fn from_parts(label: String, size: usize, add: Vec<u16>, zero: usize) -> Self {
        FiniteAbGroup {
            label,
            size,
            add,
            zero,
        }
    }

    /// Abelian-group axioms on the table (test support).
    pub fn validate(&self) -> bool {
        let s = self.size;
        (0..s).all(|x| {
            self.add(x, self.zero) == x
                && (0..s).all(|y| self.add(x, y) == self.add(y, x))
                && (0..s).any(|y| self.add(x, y) == self.zero)
        }) && (0..s).all(|x| {
            (0..s).all(|y| (0..s).all(|z| self.add(self.add(x, y), z) == self.add(x, self.add(y, z))))
        })
    }
}

impl std::fmt::Debug for FiniteAbGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AbGroup({}, size={})", self.label, self.size)
    }
}

/// A tensor group together with the data needed to resolve vector codes of
/// `N^m` to group elements.
///
/// The full addition table is not materialized up front; injectivity checks
/// only need coset resolution.  Call [`TensorGroup::to_group`] when the
/// group structure itself is wanted.
pub struct TensorGroup {
    label: String,
    /// Base of the vector codes, i.e. `|N|`.
    base: usize,
    /// Number of digits, i.e. the generator count of the presented module.
    len: usize,
    coset_of: Vec<u16>,
    /// Coset representative codes, ascending.
    elems: Vec<usize>,
    zero_class: usize,
}

impl TensorGroup {
    pub fn size(&self) -> usize {
        self.elems.len()
    }
    pub fn zero(&self) -> usize {
        self.zero_class
    }
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Materializes the abelian group with its addition table.
    pub fn to_group(&self, n_left: &FModule) -> FiniteAbGroup {
        assert_eq!(n_left.size(), self.base);
        let size = self.elems.len();
        let mut add = vec![0u16; size * size];
        for i in 0..size {
            let vi = decode_vec(self.elems[i], self.base, self.len);
            for j in 0..=i {
                let vj = decode_vec(self.elems[j], self.base, self.len);
                let sum: Vec<usize> = (0..self.len).map(|k| n_left.add(vi[k], vj[k])).collect();
                let id = self.coset_of[encode_vec(&sum, self.base)];
                add[i * size + j] = id;
                add[j * size + i] = id;
            }
        }
        FiniteAbGroup::from_parts(self.label.clone(), size, add, self.zero_class)
    }
    /// Group element represented by a vector of `N`-element indices.
    pub fn class_of_vector(&self, v: &[usize]) -> usize {
        debug_assert_eq!(v.len(), self.len);
        self.coset_of[encode_vec(v, self.base)] as usize
    }
    pub fn rep_vector(&self, x: usize) -> Vec<usize> {
        decode_vec(self.elems[x], self.base, self.len)
    }
}

/// Greedy additive generators of a realized module.
fn additive_generators(m: &FModule) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = additive_span(m, &gens);
    for x in m.elements() {
        if span.contains(x) {
            continue;
        }
        gens.push(x);
        span = additive_span(m, &gens);
        if span.len() == m.size() {
            break;
        }
    }
    gens
}

fn additive_span(m: &FModule, gens: &[usize]) -> BitSet {
    crate::bits::additive_span_by(m.size(), m.zero(), gens.iter().copied(), |a, b| m.add(a, b))
}

/// `M ⊗_R N` for a right module `M` and a left module `N`.
pub fn tensor(m_right: &FModule, n_left: &FModule, caps: &Caps) -> Result<TensorGroup> {
    assert_eq!(m_right.side(), Side::Right, "first factor must be right");
    assert_eq!(n_left.side(), Side::Left, "second factor must be left");
    assert!(Arc::ptr_eq(m_right.ring(), n_left.ring()));
    let mg = m_right.gens();
    let b = n_left.size();
    let total = caps.check_module((b as u128).pow(mg as u32), "tensor group")?;

    // subgroup generated by relation rows acting on N; rows are additive in
    // the N argument, so additive generators of N suffice
    let n_gens = additive_generators(n_left);
    let mut seeds: Vec<usize> = Vec::new();
    for rel in m_right.relations_reduced() {
        for &x in &n_gens {
            let row: Vec<usize> = rel.iter().map(|&a| n_left.act(a, x)).collect();
            seeds.push(encode_vec(&row, b));
        }
    }
    let zero_code = encode_vec(&vec![n_left.zero(); mg], b);
    let vadd = |x: usize, y: usize| -> usize {
        let vx = decode_vec(x, b, mg);
        let vy = decode_vec(y, b, mg);
        let s: Vec<usize> = (0..mg).map(|i| n_left.add(vx[i], vy[i])).collect();
        encode_vec(&s, b)
    };
    // additive closure of the seeds
    let sub = crate::bits::additive_span_by(total, zero_code, seeds.iter().copied(), vadd);
    let sub_members = sub.to_vec();

    // flood cosets in ascending code order
    let mut coset_of = vec![u16::MAX; total];
    let mut elems = Vec::new();
    for code in 0..total {
        if coset_of[code] != u16::MAX {
            continue;
        }
        let id = elems.len() as u16;
        for &k in &sub_members {
            coset_of[vadd(code, k)] = id;
        }
        elems.push(code);
    }
    let zero = coset_of[zero_code] as usize;
    let label = format!("{}⊗{}", m_right.label(), n_left.label());
    Ok(TensorGroup {
        label,
        base: b,
        len: mg,
        coset_of,
        elems,
        zero_class: zero,
    })
}

/// A homomorphism between tensor groups, as a value table.
pub struct AbGroupHom {
    pub table: Vec<u16>,
    source_size: usize,
    target_zero: usize,
}

impl AbGroupHom {
    pub fn is_injective(&self) -> bool {
        self.table
            .iter()
            .filter(|&&v| v as usize == self.target_zero)
            .count()
            == 1
    }
    pub fn kernel_size(&self) -> usize {
        self.table
            .iter()
            .filter(|&&v| v as usize == self.target_zero)
            .count()
    }
    pub fn source_size(&self) -> usize {
        self.source_size
    }
    pub fn apply(&self, x: usize) -> usize {
        self.table[x] as usize
    }
}

/// The induced map `K ⊗ F → L ⊗ F` for a map `μ: K → L` of right modules and
/// a fixed left module `F`.  Returns the two tensor groups and the map.
pub fn tensor_map_right(
    mu: &ModuleHom,
    f_left: &FModule,
    caps: &Caps,
) -> Result<(TensorGroup, TensorGroup, AbGroupHom)> {
    let k = mu.source();
    let l = mu.target();
    assert_eq!(k.side(), Side::Right);
    let tk = tensor(k, f_left, caps)?;
    let tl = tensor(l, f_left, caps)?;
    // express μ(gᵢ) against L's generators
    let gen_reps: Vec<Vec<usize>> = k
        .gen_images()
        .iter()
        .map(|&g| l.rep_vector(mu.apply(g)))
        .collect();
    let map_vector = |x: &[usize]| -> Vec<usize> {
        // y_j = Σ_i  w⁽ⁱ⁾_j · x_i   (action of L-coordinates of μ(gᵢ) on F)
        (0..l.gens())
            .map(|j| {
                let mut acc = f_left.zero();
                for (i, w) in gen_reps.iter().enumerate() {
                    acc = f_left.add(acc, f_left.act(w[j], x[i]));
                }
                acc
            })
            .collect()
    };
    // well-definedness on the relation subgroup generators of K ⊗ F
    for rel in k.relations_reduced() {
        for &x in &additive_generators(f_left) {
            let row: Vec<usize> = rel.iter().map(|&a| f_left.act(a, x)).collect();
            let image = map_vector(&row);
            assert_eq!(
                tl.class_of_vector(&image),
                tl.zero(),
                "tensor map must kill the relation subgroup"
            );
        }
    }
    let table: Vec<u16> = (0..tk.size())
        .map(|x| tl.class_of_vector(&map_vector(&tk.rep_vector(x))) as u16)
        .collect();
    let hom = AbGroupHom {
        table,
        source_size: tk.size(),
        target_zero: tl.zero(),
    };
    Ok((tk, tl, hom))
}

/// The induced map `K ⊗ M → K ⊗ N` for a fixed right module `K` and a map
/// `μ: M → N` of left modules.
pub fn tensor_map_left(
    k_right: &FModule,
    mu: &ModuleHom,
    caps: &Caps,
) -> Result<(TensorGroup, TensorGroup, AbGroupHom)> {
    assert_eq!(mu.source().side(), Side::Left);
    let tm = tensor(k_right, mu.source(), caps)?;
    let tn = tensor(k_right, mu.target(), caps)?;
    let table: Vec<u16> = (0..tm.size())
        .map(|x| {
            let v = tm.rep_vector(x);
            let image: Vec<usize> = v.iter().map(|&c| mu.apply(c)).collect();
            tn.class_of_vector(&image) as u16
        })
        .collect();
    // componentwise application of a hom is automatically compatible; check
    // the subgroup generators anyway
    for rel in k_right.relations_reduced() {
        for &x in &additive_generators(mu.source()) {
            let row: Vec<usize> = rel.iter().map(|&a| mu.source().act(a, x)).collect();
            let image: Vec<usize> = row.iter().map(|&c| mu.apply(c)).collect();
            assert_eq!(tn.class_of_vector(&image), tn.zero());
        }
    }
    let hom = AbGroupHom {
        table,
        source_size: tm.size(),
        target_zero: tn.zero(),
    };
    Ok((tm, tn, hom))
}

/// fp-flatness of `F` relative to a battery of monomorphisms of the opposite
/// side: every induced tensor map must stay injective.
pub fn is_fp_flat(
    f: &FModule,
    monos: &[ModuleHom],
    caps: &Caps,
) -> Result<(bool, Option<String>)> {
    for mu in monos {
        debug_assert!(mu.is_injective());
        // stay inside the realization cap; over-budget monos are skipped
        let gens = mu.source().gens().max(mu.target().gens());
        if (f.size() as u128).pow(gens as u32) > caps.max_module as u128 {
            continue;
        }
        let injective = match f.side() {
            Side::Left => {
                assert_eq!(mu.source().side(), Side::Right);
                tensor_map_right(mu, f, caps)?.2.is_injective()
            }
            Side::Right => {
                assert_eq!(mu.source().side(), Side::Left);
                tensor_map_left(f, mu, caps)?.2.is_injective()
            }
        };
        if !injective {
            return Ok((
                false,
                Some(format!(
                    "tensoring {} ↪ {} with {} loses injectivity",
                    mu.source().label(),
                    mu.target().label(),
                    f.label()
                )),
            ));
        }
    }
    Ok((true, None))
}

/// Purity of a monomorphism relative to a corpus of test modules of the
/// opposite side.
pub fn is_pure_mono(
    mu: &ModuleHom,
    corpus: &[Arc<FModule>],
    caps: &Caps,
) -> Result<(bool, Option<String>)> {
    assert!(mu.is_injective());
    for k in corpus {
        let gens = match mu.source().side() {
            Side::Left => k.gens(),
            Side::Right => mu.source().gens().max(mu.target().gens()),
        };
        let factor = match mu.source().side() {
            Side::Left => mu.target().size().max(mu.source().size()),
            Side::Right => k.size(),
        };
        if (factor as u128).pow(gens as u32) > caps.max_module as u128 {
            continue;
        }
        let injective = match mu.source().side() {
            Side::Left => {
                assert_eq!(k.side(), Side::Right);
                tensor_map_left(k, mu, caps)?.2.is_injective()
            }
            Side::Right => {
                assert_eq!(k.side(), Side::Left);
                tensor_map_right(mu, k, caps)?.2.is_injective()
            }
        };
        if !injective {
            return Ok((false, Some(format!("fails against {}", k.label()))));
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitSet;
    use crate::error::Caps;
    use crate::module::{cyclic_module, regular_module, submodule_generated, Submodule};
    use crate::ring::ring_zmod;

    fn zmod(n: usize) -> Arc<crate::ring::FiniteRing> {
        Arc::new(ring_zmod(n))
    }

    #[test]
    fn tensor_with_regular_is_identity_sized() {
        let caps = Caps::default();
        let r = zmod(4);
        let reg_r = regular_module(&r, Side::Right, &caps).unwrap();
        for ideal in [BitSet::from_indices(4, [0]), BitSet::from_indices(4, [0, 2])] {
            let n = cyclic_module(&r, Side::Left, &ideal, &caps).unwrap();
            let t = tensor(&reg_r, &n, &caps).unwrap();
            assert_eq!(t.size(), n.size());
        }
    }

    #[test]
    fn tensor_of_halves_over_zmod4() {
        let caps = Caps::default();
        let r = zmod(4);
        let two = BitSet::from_indices(4, [0, 2]);
        let m = cyclic_module(&r, Side::Right, &two, &caps).unwrap();
        let n = cyclic_module(&r, Side::Left, &two, &caps).unwrap();
        // Z/2 ⊗ Z/2 over Z/4 is Z/2
        let t = tensor(&m, &n, &caps).unwrap();
        assert_eq!(t.size(), 2);
        assert!(t.to_group(&n).validate());
        // M ⊗ 0 = 0
        let zero = cyclic_module(&r, Side::Left, &BitSet::from_indices(4, 0..4), &caps).unwrap();
        assert_eq!(tensor(&m, &zero, &caps).unwrap().size(), 1);
    }

    #[test]
    fn inclusion_of_two_into_zmod4_is_not_pure() {
        let caps = Caps::default();
        let r = zmod(4);
        let reg = Arc::new(regular_module(&r, Side::Right, &caps).unwrap());
        let two = Submodule::from_bits(&reg, submodule_generated(&reg, [2]));
        let (sub, map) = crate::module::submodule_as_module(&two, &caps).unwrap();
        let sub = Arc::new(sub);
        let table: Vec<u16> = map.iter().map(|&x| x as u16).collect();
        let incl = ModuleHom::from_table(&sub, &reg, table);
        assert!(incl.is_injective() && incl.verify());
        // tensor with the left module Z/2 detects non-purity: 2⊗1 ≠ 0 in (2)⊗Z/2
        let half = Arc::new(
            cyclic_module(&r, Side::Left, &BitSet::from_indices(4, [0, 2]), &caps).unwrap(),
        );
        let (tk, _tl, hom) = tensor_map_right(&incl, &half, &caps).unwrap();
        assert_eq!(tk.size(), 2);
        assert!(!hom.is_injective());
        let (ok, witness) = is_pure_mono(&incl, &[half], &caps).unwrap();
        assert!(!ok && witness.is_some());
    }

    #[test]
    fn identity_map_tensors_to_identity() {
        let caps = Caps::default();
        let r = zmod(4);
        let reg = Arc::new(regular_module(&r, Side::Right, &caps).unwrap());
        let id = ModuleHom::identity(&reg);
        let half = Arc::new(
            cyclic_module(&r, Side::Left, &BitSet::from_indices(4, [0, 2]), &caps).unwrap(),
        );
        let (tk, tl, hom) = tensor_map_right(&id, &half, &caps).unwrap();
        assert_eq!(tk.size(), tl.size());
        assert!(hom.is_injective());
        let (ok, _) = is_pure_mono(&id, &[half], &caps).unwrap();
        assert!(ok);
    }
}
