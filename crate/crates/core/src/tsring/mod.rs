//! The trivial source ring in the canonical basis `[N_{P,φ}]`: index sets, the species
//! table `N`, its inverse by the Möbius formula, and the primitive idempotents.

mod oracle;
mod table;
pub mod verify;

use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactfield::Cyclo;
use crate::modrep::{BrauerTable, FField};
use crate::permgroup::{is_prime, Group, QuotientGroup, Subgroup, SubgroupLattice};
use crate::pposet::PPoset;

pub use oracle::{oracle_modules, species_oracle, species_oracle_table, OracleModule};
pub use table::{IdempotentExpansion, SpeciesTable};

/// `(P, φ)`: a canonical p-subgroup class and an irreducible Brauer character of
/// `N_G(P)/P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub p_class: usize,
    pub phi: usize,
}

/// `(Q, [s])`: a canonical p-subgroup class and a p'-class of `N_G(Q)/Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpeciesIndex {
    pub q_class: usize,
    pub s: usize,
}

/// Data attached to one canonical p-subgroup `P`.
pub struct Local {
    pub subgroup: usize,
    pub normalizer: Subgroup,
    pub quotient: QuotientGroup,
    pub table: BrauerTable,
}

/// Everything computed once per `(G, p)`.
pub struct TsContext {
    group: Arc<Group>,
    p: u32,
    seed: u64,
    field: Arc<FField>,
    poset: PPoset,
    locals: Vec<Local>,
    local_of: Vec<Option<usize>>,
    basis: Vec<BasisIndex>,
    species: Vec<SpeciesIndex>,
}

/// p'-part of the exponent of `g`.
pub fn conductor(g: &Group, p: u32) -> u32 {
    let mut e = g.exponent() as u32;
    while e % p == 0 {
        e /= p;
    }
    e
}

impl TsContext {
    pub fn new(group: Arc<Group>, p: u32, seed: u64) -> Result<TsContext> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let m = conductor(&group, p);
        let field = Arc::new(FField::new(p, m)?);
        let lattice = Arc::new(SubgroupLattice::new(&group));
        let poset = PPoset::new(group.clone(), lattice.clone(), p);
        let mut locals = Vec::new();
        let mut local_of = vec![None; lattice.len()];
        for &h in poset.p_subgroups() {
            if !lattice.is_canonical(h) {
                continue;
            }
            let sub = lattice.get(h).clone();
            let normalizer = lattice.get(lattice.normalizer(h)).clone();
            let quotient = QuotientGroup::new(&group, &normalizer, &sub)?;
            let table = BrauerTable::compute(quotient.group().clone(), field.clone(), seed)?;
            local_of[h] = Some(locals.len());
            locals.push(Local {
                subgroup: h,
                normalizer,
                quotient,
                table,
            });
        }
        let mut basis = Vec::new();
        let mut species = Vec::new();
        for (i, loc) in locals.iter().enumerate() {
            for phi in 0..loc.table.len() {
                basis.push(BasisIndex { p_class: i, phi });
            }
            for s in 0..loc.table.classes().len() {
                species.push(SpeciesIndex { q_class: i, s });
            }
        }
        if basis.len() != species.len() {
            return Err(Error::SizeMismatch {
                species: species.len(),
                basis: basis.len(),
            });
        }
        Ok(TsContext {
            group,
            p,
            seed,
            field,
            poset,
            locals,
            local_of,
            basis,
            species,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn field(&self) -> &Arc<FField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn poset(&self) -> &PPoset {
        &self.poset
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        self.poset.lattice()
    }

    /// Canonical p-subgroup classes, sorted by order.
    pub fn locals(&self) -> &[Local] {
        &self.locals
    }

    pub fn local(&self, i: usize) -> &Local {
        &self.locals[i]
    }

    /// `C(G)` up to conjugacy.
    pub fn basis(&self) -> &[BasisIndex] {
        &self.basis
    }

    /// `E(G)` up to conjugacy.
    pub fn species(&self) -> &[SpeciesIndex] {
        &self.species
    }

    pub fn basis_position(&self, b: BasisIndex) -> usize {
        self.basis.binary_search(&b).expect("basis index")
    }

    pub fn species_position(&self, s: SpeciesIndex) -> usize {
        self.species.binary_search(&s).expect("species index")
    }

    /// Local position of the class of the p-subgroup with lattice index `h`.
    pub fn class_of_subgroup(&self, h: usize) -> usize {
        self.local_of[self.lattice().canonical(h)].expect("p-subgroup")
    }

    /// Is the class `a` contained in a conjugate of the class `b`?
    pub fn class_leq(&self, a: usize, b: usize) -> bool {
        self.lattice().leq_up_to_conj(
            &self.group,
            self.locals[a].subgroup,
            self.locals[b].subgroup,
        )
    }

    /// Table position of the p'-class of `xQ` in `N(Q)/Q`, for `x ∈ N(Q)`.
    pub fn species_class(&self, i: usize, x: usize) -> Option<usize> {
        let loc = &self.locals[i];
        loc.quotient
            .project(x)
            .and_then(|q| loc.table.class_position(q))
    }

    /// A lift in `N(Q)` of the representative of the p'-class `s` of `N(Q)/Q`.
    pub fn species_lift(&self, i: usize, s: usize) -> usize {
        let loc = &self.locals[i];
        loc.quotient.section(loc.table.class_representative(s))
    }

    /// Order of `N_G(P)` for the class `i`.
    pub fn normalizer_order(&self, i: usize) -> usize {
        self.locals[i].normalizer.order()
    }

    /// `(i, x')` with `x' = c x c⁻¹` where `c` conjugates the p-subgroup `h` onto the
    /// canonical representative of class `i`.
    pub fn fold(&self, h: usize, x: usize) -> (usize, usize) {
        let c = self.lattice().to_canonical(h);
        let g = &self.group;
        (self.class_of_subgroup(h), g.conj(c, x))
    }

    /// `1/n` in the session field.
    pub(crate) fn recip(&self, n: usize) -> crate::exactfield::Rat {
        crate::exactfield::Rat::new(1.into(), (n as i64).into())
    }

    pub(crate) fn zero(&self) -> Cyclo {
        Cyclo::zero(self.conductor())
    }

    pub fn subgroup_label(&self, i: usize) -> String {
        let h = self.locals[i].subgroup;
        self.lattice().get(h).label(&self.group)
    }

    pub fn basis_label(&self, b: BasisIndex) -> String {
        let dim = self.locals[b.p_class].table.irreducibles()[b.phi].dim();
        format!(
            "{} phi{} (dim {})",
            self.subgroup_label(b.p_class),
            b.phi,
            dim
        )
    }

    pub fn species_label(&self, s: SpeciesIndex) -> String {
        let loc = &self.locals[s.q_class];
        let rep = loc.table.class_representative(s.s);
        format!(
            "{} [{}]",
            self.subgroup_label(s.q_class),
            loc.quotient.element_label(&self.group, rep)
        )
    }

    /// Lowest common multiple of the orders of all normalizers, a common denominator.
    pub fn denominator_bound(&self) -> usize {
        self.locals
            .iter()
            .fold(1usize, |acc, l| acc.lcm(&l.normalizer.order()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named;

    #[test]
    fn index_sets() {
        let ctx = TsContext::new(Arc::new(named::cyclic(1).unwrap()), 2, 0).unwrap();
        assert_eq!(ctx.basis().len(), 1);
        let ctx = TsContext::new(Arc::new(named::cyclic(3).unwrap()), 3, 0).unwrap();
        assert_eq!(ctx.basis().len(), 2);
        assert_eq!(ctx.species().len(), 2);
        let ctx = TsContext::new(Arc::new(named::symmetric(3).unwrap()), 3, 0).unwrap();
        assert_eq!(ctx.basis().len(), 4);
        assert_eq!(ctx.species().len(), 4);
        assert!(matches!(
            TsContext::new(Arc::new(named::cyclic(2).unwrap()), 4, 0),
            Err(Error::NotPrime(4))
        ));
    }
}
