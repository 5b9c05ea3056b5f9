use std::cmp::Ordering;
use std::collections::HashMap;

use super::group::Group;

/// Membership set over the element indices of a parent group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut b = BitSet::new(len);
        for i in it {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }
}

/// Sets compare by their sorted member lists, lexicographically.
impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A subgroup of an implicit parent [`Group`], stored as a membership set over the
/// parent's element indices together with a small generating list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: BitSet,
    gens: Vec<usize>,
    order: usize,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}
impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state)
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    /// Subgroup generated by the given element indices.
    pub fn generated(g: &Group, gens: &[usize]) -> Subgroup {
        let n = g.order();
        let mut members = BitSet::new(n);
        members.insert(Group::IDENTITY);
        let mut list = vec![Group::IDENTITY];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &s in gens {
                let y = g.mul(s, x);
                if !members.contains(y) {
                    members.insert(y);
                    list.push(y);
                }
            }
            i += 1;
        }
        let mut gens: Vec<usize> = gens.iter().copied().filter(|&x| x != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        Subgroup {
            order: list.len(),
            members,
            gens,
        }
    }

    pub fn trivial(g: &Group) -> Subgroup {
        Subgroup::generated(g, &[])
    }

    pub fn whole(g: &Group) -> Subgroup {
        Subgroup::generated(g, g.generator_indices())
    }

    /// Builds a subgroup from a member set known to be closed, choosing generators greedily.
    pub fn from_members(g: &Group, members: BitSet) -> Subgroup {
        let mut gens = Vec::new();
        let mut cur = Subgroup::trivial(g);
        for x in members.iter() {
            if !cur.contains(x) {
                gens.push(x);
                cur = Subgroup::generated(g, &gens);
            }
        }
        debug_assert_eq!(cur.members, members);
        cur
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        let mut o = self.order;
        while o % p as usize == 0 {
            o /= p as usize;
        }
        o == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// `^x H = x H x⁻¹`.
    pub fn conjugate(&self, g: &Group, x: usize) -> Subgroup {
        let members = BitSet::from_indices(g.order(), self.elements().map(|h| g.conj(x, h)));
        Subgroup {
            members,
            gens: self.gens.iter().map(|&h| g.conj(x, h)).collect(),
            order: self.order,
        }
    }

    pub fn normalizes(&self, g: &Group, x: usize) -> bool {
        self.gens.iter().all(|&h| self.contains(g.conj(x, h)))
    }

    pub fn intersection(&self, g: &Group, other: &Subgroup) -> Subgroup {
        Subgroup::from_members(g, self.members.intersection(&other.members))
    }

    pub fn join(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Subgroup::generated(g, &gens)
    }

    pub fn is_normal_in(&self, g: &Group, over: &Subgroup) -> bool {
        self.is_subgroup_of(over) && over.gens.iter().all(|&x| self.normalizes(g, x))
    }

    /// Minimal element of each left coset `xH`, in increasing order.
    pub fn left_transversal(&self, g: &Group, within: &Subgroup) -> Vec<usize> {
        let mut seen = BitSet::new(g.order());
        let mut reps = Vec::new();
        for x in within.elements() {
            if seen.contains(x) {
                continue;
            }
            reps.push(x);
            for h in self.elements() {
                seen.insert(g.mul(x, h));
            }
        }
        reps
    }

    pub fn label(&self, g: &Group) -> String {
        if self.gens.is_empty() {
            return "1".to_string();
        }
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|&x| g.element(x).to_string())
            .collect();
        format!("<{}>", gens.join(","))
    }
}

/// `N_G(H)`.
pub fn normalizer(g: &Group, h: &Subgroup) -> Subgroup {
    let members = BitSet::from_indices(g.order(), (0..g.order()).filter(|&x| h.normalizes(g, x)));
    Subgroup::from_members(g, members)
}

/// Centralizer in `h` of element `s`.
pub fn centralizer(g: &Group, h: &Subgroup, s: usize) -> Subgroup {
    let members = BitSet::from_indices(
        g.order(),
        h.elements().filter(|&x| g.mul(x, s) == g.mul(s, x)),
    );
    Subgroup::from_members(g, members)
}

/// All subgroups of `h`, by iterated joins of cyclic subgroups, sorted.
pub fn subgroups_of(g: &Group, h: &Subgroup) -> Vec<Subgroup> {
    let mut cyclic: Vec<Subgroup> = Vec::new();
    let mut seen: HashMap<BitSet, ()> = HashMap::new();
    for x in h.elements() {
        let c = Subgroup::generated(g, &[x]);
        if seen.insert(c.members.clone(), ()).is_none() {
            cyclic.push(c);
        }
    }
    let mut all = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for c in &cyclic {
                if c.is_subgroup_of(a) {
                    continue;
                }
                let j = a.join(g, c);
                if seen.insert(j.members.clone(), ()).is_none() {
                    next.push(j.clone());
                    all.push(j);
                }
            }
        }
        frontier = next;
    }
    all.sort();
    all
}

/// All subgroups of `g` grouped into conjugacy classes; each class is sorted so that
/// its first entry is the canonical (minimal) representative, and classes are sorted
/// by that representative.
pub fn subgroup_classes(g: &Group) -> Vec<Vec<Subgroup>> {
    let all = subgroups_of(g, &Subgroup::whole(g));
    let mut assigned: HashMap<BitSet, ()> = HashMap::new();
    let mut classes = Vec::new();
    for h in &all {
        if assigned.contains_key(&h.members) {
            continue;
        }
        let mut class: Vec<Subgroup> = Vec::new();
        for x in 0..g.order() {
            let c = h.conjugate(g, x);
            if assigned.insert(c.members.clone(), ()).is_none() {
                class.push(c);
            }
        }
        class.sort();
        classes.push(class);
    }
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    classes
}

/// Canonical representatives of the conjugacy classes of p-subgroups, trivial first.
pub fn p_subgroup_classes(g: &Group, p: u32) -> Vec<Subgroup> {
    subgroup_classes(g)
        .into_iter()
        .map(|c| c.into_iter().next().unwrap())
        .filter(|h| h.is_p_group(p))
        .collect()
}

fn intersect_all(g: &Group, within: &Subgroup, subs: impl Iterator<Item = Subgroup>) -> Subgroup {
    let mut acc = within.members.clone();
    for s in subs {
        acc = acc.intersection(&s.members);
    }
    Subgroup::from_members(g, acc)
}

/// Intersection of the maximal subgroups of `h`.
pub fn frattini(g: &Group, h: &Subgroup) -> Subgroup {
    let subs = subgroups_of(g, h);
    let proper: Vec<&Subgroup> = subs.iter().filter(|s| s.order < h.order).collect();
    let maximal = proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.order > s.order && s.is_subgroup_of(t))
        })
        .map(|s| (*s).clone());
    intersect_all(g, h, maximal)
}

/// `O_p(V)`: intersection of the Sylow p-subgroups of `v`.
pub fn core_p(g: &Group, v: &Subgroup, p: u32) -> Subgroup {
    let subs = subgroups_of(g, v);
    let sylow_order = subs
        .iter()
        .filter(|s| s.is_p_group(p))
        .map(|s| s.order)
        .max()
        .unwrap_or(1);
    intersect_all(
        g,
        v,
        subs.into_iter()
            .filter(|s| s.order == sylow_order && s.is_p_group(p)),
    )
}

/// The full subgroup lattice of a group with conjugation tabulated.
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    index: HashMap<BitSet, usize>,
    /// `conj[x * len + h]` = index of `^x H_h`.
    conj: Vec<u32>,
    canonical: Vec<usize>,
    to_canonical: Vec<usize>,
    normalizers: Vec<usize>,
}

impl SubgroupLattice {
    pub fn new(g: &Group) -> SubgroupLattice {
        let subgroups = subgroups_of(g, &Subgroup::whole(g));
        let len = subgroups.len();
        let index: HashMap<BitSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members.clone(), i))
            .collect();
        let mut conj = vec![0u32; g.order() * len];
        for x in 0..g.order() {
            for (h, sub) in subgroups.iter().enumerate() {
                let c = BitSet::from_indices(g.order(), sub.elements().map(|y| g.conj(x, y)));
                conj[x * len + h] = index[&c] as u32;
            }
        }
        // subgroups are sorted, so the first member of each class seen is canonical
        let mut canonical = vec![usize::MAX; len];
        let mut to_canonical = vec![usize::MAX; len];
        for h in 0..len {
            if canonical[h] != usize::MAX {
                continue;
            }
            for x in 0..g.order() {
                let c = conj[x * len + h] as usize;
                if canonical[c] == usize::MAX {
                    canonical[c] = h;
                    to_canonical[c] = g.inv(x);
                }
            }
        }
        let normalizers = (0..len)
            .map(|h| index[&normalizer(g, &subgroups[h]).members])
            .collect();
        SubgroupLattice {
            subgroups,
            index,
            conj,
            canonical,
            to_canonical,
            normalizers,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn index_of(&self, h: &Subgroup) -> usize {
        self.index[&h.members]
    }

    pub fn lookup(&self, members: &BitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Index of `^x H_h`.
    #[inline]
    pub fn conj(&self, x: usize, h: usize) -> usize {
        self.conj[x * self.subgroups.len() + h] as usize
    }

    #[inline]
    pub fn normalizes(&self, x: usize, h: usize) -> bool {
        self.conj(x, h) == h
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.subgroups[a].is_subgroup_of(&self.subgroups[b])
    }

    /// Is `a` contained in some conjugate of `b`?
    pub fn leq_up_to_conj(&self, g: &Group, a: usize, b: usize) -> bool {
        (0..g.order()).any(|x| self.leq(a, self.conj(x, b)))
    }

    pub fn canonical(&self, h: usize) -> usize {
        self.canonical[h]
    }

    /// An element `c` with `^c H_h` canonical.
    pub fn to_canonical(&self, h: usize) -> usize {
        self.to_canonical[h]
    }

    pub fn normalizer(&self, h: usize) -> usize {
        self.normalizers[h]
    }

    pub fn join(&self, g: &Group, a: usize, b: usize) -> usize {
        self.index[&self.subgroups[a].join(g, &self.subgroups[b]).members]
    }

    pub fn is_canonical(&self, h: usize) -> bool {
        self.canonical[h] == h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named;

    /// Brute force: every subset closed under multiplication (finite ⇒ subgroup).
    fn brute_subgroup_count(g: &Group) -> usize {
        let n = g.order();
        assert!(n <= 8);
        (0u32..1 << n)
            .filter(|mask| mask & 1 == 1)
            .filter(|mask| {
                (0..n).all(|a| {
                    mask >> a & 1 == 0
                        || (0..n).all(|b| mask >> b & 1 == 0 || mask >> g.mul(a, b) & 1 == 1)
                })
            })
            .count()
    }

    #[test]
    fn subgroup_counts_match_brute_force() {
        for g in [
            named::symmetric(3),
            named::dihedral(8),
            named::klein4(),
            named::quaternion8(),
        ] {
            let g = g.unwrap();
            let all = subgroups_of(&g, &Subgroup::whole(&g));
            assert_eq!(all.len(), brute_subgroup_count(&g));
        }
    }

    #[test]
    fn subgroup_class_counts() {
        let triv = named::cyclic(1).unwrap();
        assert_eq!(subgroup_classes(&triv).len(), 1);
        let s3 = named::symmetric(3).unwrap();
        let cl = subgroup_classes(&s3);
        assert_eq!(cl.len(), 4);
        let sizes: Vec<usize> = cl.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 1, 1]);
        let d8 = named::dihedral(8).unwrap();
        let cl = subgroup_classes(&d8);
        assert_eq!(cl.len(), 8);
        assert_eq!(cl.iter().map(|c| c.len()).sum::<usize>(), 10);
    }

    #[test]
    fn class_size_times_normalizer_is_order() {
        for g in [
            named::symmetric(4),
            named::dihedral(8),
            named::alternating(4),
        ] {
            let g = g.unwrap();
            for class in subgroup_classes(&g) {
                assert_eq!(class.len() * normalizer(&g, &class[0]).order(), g.order());
            }
        }
    }

    #[test]
    fn p_subgroup_classes_of_s3() {
        let s3 = named::symmetric(3).unwrap();
        let orders = |p| -> Vec<usize> {
            p_subgroup_classes(&s3, p)
                .iter()
                .map(|h| h.order())
                .collect()
        };
        assert_eq!(orders(3), vec![1, 3]);
        assert_eq!(orders(2), vec![1, 2]);
        assert_eq!(orders(5), vec![1]);
    }

    #[test]
    fn normalizers_in_s3() {
        let g = named::symmetric(3).unwrap();
        let whole = Subgroup::whole(&g);
        assert_eq!(normalizer(&g, &Subgroup::trivial(&g)), whole);
        assert_eq!(normalizer(&g, &whole), whole);
        let t = g
            .elements()
            .iter()
            .position(|p| p.to_string() == "(0 1)")
            .unwrap();
        let c2 = Subgroup::generated(&g, &[t]);
        assert_eq!(normalizer(&g, &c2), c2);
    }

    #[test]
    fn frattini_and_core() {
        let v4 = named::klein4().unwrap();
        assert!(frattini(&v4, &Subgroup::whole(&v4)).is_trivial());
        let c4 = named::cyclic(4).unwrap();
        assert_eq!(frattini(&c4, &Subgroup::whole(&c4)).order(), 2);
        assert!(frattini(&c4, &Subgroup::trivial(&c4)).is_trivial());
        let q8 = named::quaternion8().unwrap();
        assert_eq!(frattini(&q8, &Subgroup::whole(&q8)).order(), 2);

        let s3 = named::symmetric(3).unwrap();
        let whole = Subgroup::whole(&s3);
        assert!(core_p(&s3, &whole, 2).is_trivial());
        assert_eq!(core_p(&s3, &whole, 3).order(), 3);
        assert_eq!(core_p(&c4, &Subgroup::whole(&c4), 2).order(), 4);
        let s4 = named::symmetric(4).unwrap();
        assert_eq!(core_p(&s4, &Subgroup::whole(&s4), 2).order(), 4);
    }

    #[test]
    fn lattice_canonicalization() {
        let g = named::symmetric(4).unwrap();
        let lat = SubgroupLattice::new(&g);
        assert_eq!(lat.len(), 30);
        for h in 0..lat.len() {
            let c = lat.canonical(h);
            assert!(lat.is_canonical(c));
            assert_eq!(lat.conj(lat.to_canonical(h), h), c);
            assert!(lat.get(c) <= lat.get(h));
            let n = lat.get(lat.normalizer(h));
            assert!(lat.get(h).is_normal_in(&g, n));
        }
    }

    #[test]
    fn frattini_normal_and_core_normal_p_group() {
        let g = named::symmetric(4).unwrap();
        let lat = SubgroupLattice::new(&g);
        for h in lat.subgroups() {
            if h.is_p_group(2) {
                assert!(frattini(&g, h).is_normal_in(&g, h));
            }
            let c = core_p(&g, h, 2);
            assert!(c.is_normal_in(&g, h));
            assert!(c.is_p_group(2));
        }
    }
}
