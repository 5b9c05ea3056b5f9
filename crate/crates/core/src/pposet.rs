//! Posets of p-subgroups fixed by an element, their Möbius functions and reduced
//! Euler characteristics.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::permgroup::{Group, Subgroup, SubgroupLattice};

/// A finite set of p-subgroups ordered by inclusion, as lattice indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetSlice {
    elements: Vec<usize>,
    /// `leq[i][j]` iff `elements[i] ≤ elements[j]`.
    leq: Vec<Vec<bool>>,
}

impl PosetSlice {
    pub fn new(lattice: &SubgroupLattice, mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let leq = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| lattice.leq(a, b)).collect())
            .collect();
        PosetSlice { elements, leq }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Lattice indices, sorted by subgroup order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, h: usize) -> bool {
        self.elements.binary_search(&h).is_ok()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// `χ̃ = -1 + Σ_k (-1)^{k-1} c_k`, `c_k` the number of k-element chains.
    pub fn reduced_euler(&self) -> i64 {
        // w[x] = signed count of chains with top x; elements are in a linear extension
        let n = self.len();
        let mut w = vec![0i64; n];
        for x in 0..n {
            let below: i64 = (0..x).filter(|&y| self.leq[y][x]).map(|y| w[y]).sum();
            w[x] = 1 - below;
        }
        -1 + w.iter().sum::<i64>()
    }
}

/// The p-subgroup poset `S_p(G)` with memoized fixed-point Möbius functions.
pub struct PPoset {
    group: Arc<Group>,
    lattice: Arc<SubgroupLattice>,
    p: u32,
    psubs: Vec<usize>,
    is_p: Vec<bool>,
    mobius_memo: Mutex<HashMap<(usize, usize), Arc<HashMap<usize, i64>>>>,
}

impl PPoset {
    pub fn new(group: Arc<Group>, lattice: Arc<SubgroupLattice>, p: u32) -> Self {
        let is_p: Vec<bool> = lattice
            .subgroups()
            .iter()
            .map(|h| h.is_p_group(p))
            .collect();
        let psubs = (0..lattice.len()).filter(|&i| is_p[i]).collect();
        PPoset {
            group,
            lattice,
            p,
            psubs,
            is_p,
            mobius_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    /// Lattice indices of all p-subgroups, sorted by order.
    pub fn p_subgroups(&self) -> &[usize] {
        &self.psubs
    }

    pub fn is_p_subgroup(&self, h: usize) -> bool {
        self.is_p[h]
    }

    pub fn subgroup(&self, h: usize) -> &Subgroup {
        self.lattice.get(h)
    }

    /// p-subgroups `R` normalized by `g` with `lower (<|≤) R (<|≤) upper`.
    pub fn fixed_subposet(
        &self,
        g: usize,
        lower: usize,
        upper: Option<usize>,
        open_lower: bool,
        open_upper: bool,
    ) -> PosetSlice {
        let l = &self.lattice;
        let elements = self
            .psubs
            .iter()
            .copied()
            .filter(|&r| l.normalizes(g, r))
            .filter(|&r| l.leq(lower, r) && !(open_lower && r == lower))
            .filter(|&r| match upper {
                Some(u) => l.leq(r, u) && !(open_upper && r == u),
                None => true,
            })
            .collect();
        PosetSlice::new(l, elements)
    }

    /// `μ_g(P, Q)` on `S_p(G)^⟨g⟩`, by `μ(P,Q) = -Σ_{P ≤ R < Q} μ(P,R)`.
    pub fn mobius(&self, g: usize, p: usize, q: usize) -> Result<i64> {
        let l = &self.lattice;
        if !l.normalizes(g, p) || !l.normalizes(g, q) || !self.is_p[p] || !self.is_p[q] {
            return Err(Error::NotFixed);
        }
        if !l.leq(p, q) {
            return Ok(0);
        }
        Ok(*self
            .mobius_from(g, p)
            .get(&q)
            .expect("fixed p-subgroup above P"))
    }

    /// `μ_g(P, -)` on every g-fixed p-subgroup above `P`.
    pub fn mobius_from(&self, g: usize, p: usize) -> Arc<HashMap<usize, i64>> {
        if let Some(m) = self.mobius_memo.lock().unwrap().get(&(g, p)) {
            return m.clone();
        }
        let slice = self.fixed_subposet(g, p, None, false, false);
        let mut mu: HashMap<usize, i64> = HashMap::new();
        let els = slice.elements();
        let mut vals = vec![0i64; els.len()];
        for j in 0..els.len() {
            vals[j] = if els[j] == p {
                1
            } else {
                -(0..j)
                    .filter(|&i| slice.leq(i, j))
                    .map(|i| vals[i])
                    .sum::<i64>()
            };
            mu.insert(els[j], vals[j]);
        }
        let mu = Arc::new(mu);
        self.mobius_memo.lock().unwrap().insert((g, p), mu.clone());
        mu
    }

    /// `μ_g(P, Q)` by the dual recurrence `μ(P,Q) = -Σ_{P < R ≤ Q} μ(R,Q)`.
    pub fn mobius_upper(&self, g: usize, p: usize, q: usize) -> Result<i64> {
        let l = &self.lattice;
        if !l.normalizes(g, p) || !l.normalizes(g, q) || !self.is_p[p] || !self.is_p[q] {
            return Err(Error::NotFixed);
        }
        if !l.leq(p, q) {
            return Ok(0);
        }
        let slice = self.fixed_subposet(g, p, Some(q), false, false);
        let els = slice.elements();
        let n = els.len();
        let mut vals = vec![0i64; n];
        for i in (0..n).rev() {
            vals[i] = if els[i] == q {
                1
            } else {
                -(i + 1..n)
                    .filter(|&j| slice.leq(i, j))
                    .map(|j| vals[j])
                    .sum::<i64>()
            };
        }
        Ok(vals[0])
    }

    /// Whether `R ↦ R·D ↦ lower·D` is a conical contraction of `slice`.
    pub fn has_conical_contraction(&self, slice: &PosetSlice, d: usize, lower: usize) -> bool {
        let l = &self.lattice;
        if l.leq(d, lower) {
            return false;
        }
        let g = &*self.group;
        let apex = l.join(g, lower, d);
        slice.contains(apex)
            && slice
                .elements()
                .iter()
                .all(|&r| slice.contains(l.join(g, r, d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{frattini, named};

    fn poset(g: Group, p: u32) -> PPoset {
        let g = Arc::new(g);
        let l = Arc::new(SubgroupLattice::new(&g));
        PPoset::new(g, l, p)
    }

    #[test]
    fn euler_characteristics() {
        let pp = poset(named::klein4().unwrap(), 2);
        let l = pp.lattice().clone();
        let empty = PosetSlice::new(&l, vec![]);
        assert_eq!(empty.reduced_euler(), -1);
        let point = PosetSlice::new(&l, vec![0]);
        assert_eq!(point.reduced_euler(), 0);
        let top = l.len() - 1;
        let open = pp.fixed_subposet(0, 0, Some(top), true, true);
        assert_eq!(open.len(), 3);
        assert_eq!(open.reduced_euler(), 2);
        assert!(pp.fixed_subposet(0, top, Some(top), true, true).is_empty());
    }

    #[test]
    fn mobius_values() {
        let pp = poset(named::klein4().unwrap(), 2);
        let top = pp.lattice().len() - 1;
        assert_eq!(pp.mobius(0, 0, top).unwrap(), 2);
        assert_eq!(pp.mobius(0, top, top).unwrap(), 1);
        assert_eq!(pp.mobius(0, top, 0).unwrap(), 0);
        let pp = poset(named::cyclic(3).unwrap(), 3);
        let top = pp.lattice().len() - 1;
        assert_eq!(pp.mobius(0, 0, top).unwrap(), -1);
        let pp = poset(named::cyclic(4).unwrap(), 2);
        let top = pp.lattice().len() - 1;
        assert_eq!(pp.mobius(0, 0, top).unwrap(), 0);
    }

    #[test]
    fn not_fixed_is_an_error() {
        let pp = poset(named::symmetric(3).unwrap(), 2);
        let g = pp.group().clone();
        let l = pp.lattice().clone();
        let c2 = (0..l.len()).find(|&h| l.get(h).order() == 2).unwrap();
        let x = (0..g.order()).find(|&x| !l.normalizes(x, c2)).unwrap();
        assert_eq!(pp.mobius(x, 0, c2), Err(Error::NotFixed));
    }

    #[test]
    fn conical_contraction_on_c4() {
        let pp = poset(named::cyclic(4).unwrap(), 2);
        let g = pp.group().clone();
        let l = pp.lattice().clone();
        let top = l.len() - 1;
        let phi = l.index_of(&frattini(&g, l.get(top)));
        let slice = pp.fixed_subposet(0, 0, Some(top), true, true);
        assert!(pp.has_conical_contraction(&slice, phi, 0));
        assert_eq!(slice.reduced_euler(), 0);
        assert!(!pp.has_conical_contraction(&slice, 0, 0));
    }

    #[test]
    fn both_recurrences_agree_on_s4() {
        let pp = poset(named::symmetric(4).unwrap(), 2);
        let g = pp.group().clone();
        for x in 0..g.order() {
            for &a in pp.p_subgroups() {
                for &b in pp.p_subgroups() {
                    let l = pp.lattice();
                    if l.normalizes(x, a) && l.normalizes(x, b) {
                        assert_eq!(pp.mobius(x, a, b), pp.mobius_upper(x, a, b));
                    }
                }
            }
        }
    }
}
