//! Finite groups given by composition tables.

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// A finite group with an explicit composition table and inverse table.
#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    n: usize,
    op: Vec<u16>,
    inv: Vec<u16>,
    identity: usize,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.identity == other.identity && self.op == other.op
    }
}
impl Eq for FiniteGroup {}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, n={})", self.label, self.n)
    }
}

impl FiniteGroup {
    /// Validates the table against the group axioms.
    pub fn from_table(
        label: impl Into<String>,
        n: usize,
        op: Vec<u16>,
        identity: usize,
    ) -> Result<FiniteGroup> {
        let fail = |axiom, w: (usize, usize, usize)| Error::AxiomViolation { axiom, witness: w };
        if n == 0 || n > u16::MAX as usize || op.len() != n * n || identity >= n {
            return Err(fail("table-shape", (n, identity, 0)));
        }
        let at = |a: usize, b: usize| op[a * n + b] as usize;
        for a in 0..n {
            for b in 0..n {
                if at(a, b) >= n {
                    return Err(fail("op-closure", (a, b, at(a, b))));
                }
            }
            if at(identity, a) != a || at(a, identity) != a {
                return Err(fail("identity", (a, identity, 0)));
            }
        }
        let mut inv = vec![u16::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| at(a, b) == identity && at(b, a) == identity) {
                Some(b) => inv[a] = b as u16,
                None => return Err(fail("inverse", (a, 0, 0))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(fail("op-associative", (a, b, c)));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            label: label.into(),
            n,
            op,
            inv,
            identity,
        })
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
    pub fn identity(&self) -> usize {
        self.identity
    }
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.n + b] as usize
    }
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }
    pub fn op_table(&self) -> &[u16] {
        &self.op
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_table("trivial", 1, vec![0], 0).unwrap()
    }

    /// Cyclic group of order `n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let mut op = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                op[a * n + b] = ((a + b) % n) as u16;
            }
        }
        FiniteGroup::from_table(format!("c{n}"), n, op, 0).unwrap()
    }

    /// Direct product `G × H`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (ng, nh) = (g.n, h.n);
        let n = ng * nh;
        assert!(n <= u16::MAX as usize);
        let code = |a: usize, b: usize| a * nh + b;
        let mut op = vec![0u16; n * n];
        for a1 in 0..ng {
            for b1 in 0..nh {
                for a2 in 0..ng {
                    for b2 in 0..nh {
                        op[code(a1, b1) * n + code(a2, b2)] =
                            code(g.op(a1, a2), h.op(b1, b2)) as u16;
                    }
                }
            }
        }
        FiniteGroup::from_table(
            format!("{}x{}", g.label, h.label),
            n,
            op,
            code(g.identity, h.identity),
        )
        .unwrap()
    }

    /// Symmetric group on `k` letters (k ≤ 5), elements in lexicographic
    /// permutation order, composition `(p ∘ q)(i) = p(q(i))`.
    pub fn symmetric(k: usize) -> FiniteGroup {
        assert!((1..=5).contains(&k), "symmetric(k) supports 1 <= k <= 5");
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            perms.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let n = perms.len();
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let mut op = vec![0u16; n * n];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..k).map(|x| p[q[x]]).collect();
                op[i * n + j] = index_of(&composed) as u16;
            }
        }
        let id: Vec<usize> = (0..k).collect();
        FiniteGroup::from_table(format!("s{k}"), n, op, index_of(&id)).unwrap()
    }

    /// Subgroup generated by a set of elements (as a sorted element list).
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut bits = BitSet::new(self.n);
        let mut queue = vec![self.identity];
        queue.extend_from_slice(gens);
        let mut members = Vec::new();
        while let Some(x) = queue.pop() {
            if !bits.insert(x) {
                continue;
            }
            queue.push(self.inv(x));
            let snapshot = members.clone();
            for m in snapshot {
                for v in [self.op(x, m), self.op(m, x)] {
                    if !bits.contains(v) {
                        queue.push(v);
                    }
                }
            }
            let sq = self.op(x, x);
            if !bits.contains(sq) {
                queue.push(sq);
            }
            members.push(x);
        }
        bits.to_vec()
    }

    /// Every subgroup, found by closing generated subgroups under adjoining
    /// one element at a time.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut known: Vec<Vec<usize>> = vec![vec![self.identity]];
        let mut frontier = known.clone();
        while let Some(h) = frontier.pop() {
            for g in 0..self.n {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let sub = self.subgroup_generated(&gens);
                if !known.contains(&sub) {
                    known.push(sub.clone());
                    frontier.push(sub);
                }
            }
        }
        known.sort_by_key(|s| (s.len(), s.clone()));
        known
    }

    /// Sorted, deduplicated list of subgroup orders.
    pub fn subgroup_orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self.subgroups().iter().map(|s| s.len()).collect();
        orders.sort_unstable();
        orders.dedup();
        orders
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_product() {
        let c6 = FiniteGroup::cyclic(6);
        assert_eq!(c6.size(), 6);
        assert_eq!(c6.inv(1), 5);
        let v4 = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(v4.size(), 4);
        for a in v4.elements() {
            assert_eq!(v4.op(a, a), v4.identity());
        }
    }

    #[test]
    fn s3_structure() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.size(), 6);
        // non-abelian
        assert!(s3
            .elements()
            .any(|a| s3.elements().any(|b| s3.op(a, b) != s3.op(b, a))));
        assert_eq!(s3.subgroup_orders(), vec![1, 2, 3, 6]);
        assert_eq!(s3.subgroups().len(), 6);
    }

    #[test]
    fn bad_table_rejected() {
        // constant table is not a group
        let err = FiniteGroup::from_table("bad", 2, vec![0, 0, 0, 0], 0).unwrap_err();
        assert!(matches!(
            err,
            crate::error::Error::AxiomViolation { .. }
        ));
    }
}
