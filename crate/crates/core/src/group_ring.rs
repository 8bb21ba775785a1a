//! Group rings `R(G)`: functions `G → R` with pointwise addition and
//! convolution product.
//!
//! An element is encoded as a little-endian number in base `|R|` whose digit
//! at position `g` is the coefficient of the group element `g`.

use std::sync::Arc;

use crate::error::{Caps, Error, Result};
use crate::group::FiniteGroup;
use crate::ring::{Elem, ElementSubset, FiniteRing, GroupRingMeta};

/// Builds the group ring `R(G)` of size `|R|^|G|`.
pub fn group_ring(
    base: &Arc<FiniteRing>,
    group: &Arc<FiniteGroup>,
    caps: &Caps,
) -> Result<FiniteRing> {
    let b = base.size();
    let k = group.size();
    let n = caps.check_ring((b as u128).pow(k as u32), "group ring")?;
    let decode = |code: usize| -> Vec<Elem> {
        let mut v = Vec::with_capacity(k);
        let mut c = code;
        for _ in 0..k {
            v.push(c % b);
            c /= b;
        }
        v
    };
    let encode = |v: &[Elem]| -> usize {
        let mut c = 0usize;
        for i in (0..k).rev() {
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
            let sum: Vec<Elem> = (0..k).map(|g| base.add(vx[g], vy[g])).collect();
            add[x * n + y] = encode(&sum) as u16;
            let mut conv = vec![base.zero(); k];
            for g1 in 0..k {
                if vx[g1] == base.zero() {
                    continue;
                }
                for g2 in 0..k {
                    if vy[g2] == base.zero() {
                        continue;
                    }
                    let g = group.op(g1, g2);
                    conv[g] = base.add(conv[g], base.mul(vx[g1], vy[g2]));
                }
            }
            mul[x * n + y] = encode(&conv) as u16;
        }
    }
    let zero_v = vec![base.zero(); k];
    let mut one_v = vec![base.zero(); k];
    one_v[group.identity()] = base.one();
    let mut ring = FiniteRing::from_tables_unchecked(
        format!("{}({})", base.label(), group.label()),
        n,
        add,
        mul,
        encode(&zero_v),
        encode(&one_v),
    );
    ring.group_meta = Some(GroupRingMeta {
        base: Arc::clone(base),
        group: Arc::clone(group),
    });
    Ok(ring)
}

/// Coefficient of the group element `g` in a group-ring element.
pub fn coefficient(rg: &FiniteRing, x: Elem, g: usize) -> Result<Elem> {
    let meta = rg.group_ring_meta().ok_or(Error::NotAGroupRing)?;
    let b = meta.base.size();
    Ok(x / b.pow(g as u32) % b)
}

/// The group-ring element with the given coefficient vector (indexed by `G`).
pub fn from_coefficients(rg: &FiniteRing, coeffs: &[Elem]) -> Result<Elem> {
    let meta = rg.group_ring_meta().ok_or(Error::NotAGroupRing)?;
    let b = meta.base.size();
    assert_eq!(coeffs.len(), meta.group.size());
    let mut c = 0usize;
    for i in (0..coeffs.len()).rev() {
        debug_assert!(coeffs[i] < b);
        c = c * b + coeffs[i];
    }
    Ok(c)
}

/// Image of a base-ring element under `R → R(G)`, `r ↦ r·e`.
pub fn embed_base(rg: &FiniteRing, r: Elem) -> Result<Elem> {
    let meta = rg.group_ring_meta().ok_or(Error::NotAGroupRing)?;
    let mut coeffs = vec![meta.base.zero(); meta.group.size()];
    coeffs[meta.group.identity()] = r;
    from_coefficients(rg, &coeffs)
}

/// Image of a group element under `G → R(G)`, `g ↦ 1·g`.
pub fn embed_group(rg: &FiniteRing, g: usize) -> Result<Elem> {
    let meta = rg.group_ring_meta().ok_or(Error::NotAGroupRing)?;
    let mut coeffs = vec![meta.base.zero(); meta.group.size()];
    coeffs[g] = meta.base.one();
    from_coefficients(rg, &coeffs)
}

/// The right ideal of `R(G)` generated by `{1 − h : h ∈ H}`.
pub fn omega_ideal(rg: &Arc<FiniteRing>, h_elems: &[usize]) -> Result<ElementSubset> {
    let meta = rg.group_ring_meta().ok_or(Error::NotAGroupRing)?;
    for &h in h_elems {
        assert!(h < meta.group.size(), "subgroup element out of range");
    }
    let one = rg.one();
    let seeds: Vec<Elem> = h_elems
        .iter()
        .map(|&h| Ok(rg.sub(one, embed_group(rg, h)?)))
        .collect::<Result<_>>()?;
    let bits = rg.ideal_closure_bits(&seeds, false);
    Ok(ElementSubset::from_bits(rg, bits))
}
