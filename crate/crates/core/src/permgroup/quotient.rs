use std::collections::HashMap;
use std::sync::Arc;

use super::group::Group;
use super::perm::Perm;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// `N / P` realized as the permutation action of `N` on the left cosets of `P`.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    numerator: Subgroup,
    kernel: Subgroup,
    quotient: Arc<Group>,
    /// Parent element index → quotient element index, `usize::MAX` outside `N`.
    project: Vec<usize>,
    /// Quotient element index → minimal parent element of the coset.
    section: Vec<usize>,
}

impl QuotientGroup {
    pub fn new(g: &Group, n: &Subgroup, p: &Subgroup) -> Result<QuotientGroup> {
        if !p.is_normal_in(g, n) {
            return Err(Error::NotNormal);
        }
        let cosets = p.left_transversal(g, n);
        let mut coset_of: HashMap<usize, usize> = HashMap::new();
        for (ci, &rep) in cosets.iter().enumerate() {
            for u in p.elements() {
                coset_of.insert(g.mul(rep, u), ci);
            }
        }
        let action = |x: usize| -> Perm {
            let images = cosets.iter().map(|&rep| coset_of[&g.mul(x, rep)]).collect();
            Perm::from_images(images).expect("coset action is a permutation")
        };
        let mut elements: Vec<Perm> = cosets.iter().map(|&rep| action(rep)).collect();
        let mut generators: Vec<Perm> = n
            .generators()
            .iter()
            .map(|&x| action(x))
            .filter(|q| !q.is_identity())
            .collect();
        generators.dedup();
        elements.sort();
        let quotient = Arc::new(Group::from_elements(elements, generators));
        let mut project = vec![usize::MAX; g.order()];
        let mut section = vec![usize::MAX; quotient.order()];
        for x in n.elements() {
            let q = quotient
                .index_of(&action(x))
                .expect("coset action lands in the quotient");
            project[x] = q;
            if section[q] == usize::MAX {
                section[q] = x;
            }
        }
        Ok(QuotientGroup {
            numerator: n.clone(),
            kernel: p.clone(),
            quotient,
            project,
            section,
        })
    }

    pub fn numerator(&self) -> &Subgroup {
        &self.numerator
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.quotient
    }

    pub fn order(&self) -> usize {
        self.quotient.order()
    }

    /// Image of a parent element of `N`, or `None` outside `N`.
    pub fn project(&self, x: usize) -> Option<usize> {
        match self.project[x] {
            usize::MAX => None,
            q => Some(q),
        }
    }

    pub fn section(&self, q: usize) -> usize {
        self.section[q]
    }

    /// Label of a quotient element by its coset representative in the parent.
    pub fn element_label(&self, g: &Group, q: usize) -> String {
        if self.kernel.is_trivial() {
            g.element(self.section[q]).to_string()
        } else {
            format!("{}P", g.element(self.section[q]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{named, normalizer};

    #[test]
    fn trivial_and_full_quotients() {
        let g = named::symmetric(3).unwrap();
        let whole = Subgroup::whole(&g);
        let q = QuotientGroup::new(&g, &whole, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.order(), 6);
        let q = QuotientGroup::new(&g, &whole, &whole).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn s3_mod_c3() {
        let g = named::symmetric(3).unwrap();
        let c3 = Subgroup::generated(
            &g,
            &[g.index_of(&Perm::parse_cycles("(0 1 2)", 3).unwrap())
                .unwrap()],
        );
        let q = QuotientGroup::new(&g, &Subgroup::whole(&g), &c3).unwrap();
        assert_eq!(q.order(), 2);
        let c2 = Subgroup::generated(
            &g,
            &[g.index_of(&Perm::parse_cycles("(0 1)", 3).unwrap())
                .unwrap()],
        );
        assert_eq!(
            QuotientGroup::new(&g, &Subgroup::whole(&g), &c2).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn projection_is_a_homomorphism_with_section() {
        for g in [
            named::symmetric(4),
            named::dihedral(8),
            named::quaternion8(),
        ] {
            let g = g.unwrap();
            let lat = crate::permgroup::SubgroupLattice::new(&g);
            for h in lat.subgroups() {
                let n = normalizer(&g, h);
                let q = QuotientGroup::new(&g, &n, h).unwrap();
                assert_eq!(q.order() * h.order(), n.order());
                let qg = q.group();
                for a in n.elements() {
                    for b in n.elements() {
                        let pa = q.project(a).unwrap();
                        let pb = q.project(b).unwrap();
                        assert_eq!(q.project(g.mul(a, b)).unwrap(), qg.mul(pa, pb));
                    }
                    // kernel is exactly h
                    assert_eq!(q.project(a) == Some(0), h.contains(a));
                }
                for x in 0..q.order() {
                    assert_eq!(q.project(q.section(x)), Some(x));
                }
            }
        }
    }
}
