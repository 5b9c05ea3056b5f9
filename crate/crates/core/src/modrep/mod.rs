//! Modular representations over a finite splitting field: modules given by generator
//! matrices, a MeatAxe-style chop, Brauer characters and Brauer quotients.

mod bquot;
mod brauer;
mod chop;
mod ffield;
mod fmat;
mod module;

pub use bquot::{brauer_quotient, normalizer_quotient, species_value};
pub use brauer::{brauer_character, BrauerCharacter, BrauerTable};
pub use chop::{chop, find_submodule, spin, split, CHOP_BUDGET};
pub use ffield::{FField, Fq};
pub use fmat::{Coordinates, Echelon, FMat};
pub use module::{hom_dim, induce, induce_inflate, GModule};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exactfield::Cyclo;
    use crate::permgroup::{named, Group};

    #[test]
    fn chop_regular_cyclic_p() {
        for p in [2u32, 3, 5] {
            let g = Arc::new(named::cyclic(p as usize).unwrap());
            let f = Arc::new(FField::new(p, 1).unwrap());
            let factors = chop(&GModule::regular(g, f), 1).unwrap();
            assert_eq!(factors.len(), 1);
            assert_eq!(factors[0].0.dim(), 1);
            assert_eq!(factors[0].1, p as usize);
        }
    }

    #[test]
    fn chop_regular_s3_mod_3() {
        let g = Arc::new(named::symmetric(3).unwrap());
        let f = Arc::new(FField::new(3, 2).unwrap());
        let classes = g.pprime_classes(3);
        let factors = chop(&GModule::regular(g.clone(), f), 11).unwrap();
        assert_eq!(factors.len(), 2);
        let chars: Vec<_> = factors
            .iter()
            .map(|(m, k)| (brauer_character(m, &classes).unwrap().values().to_vec(), *k))
            .collect();
        let one = Cyclo::one(2);
        let minus = Cyclo::from_int(2, -1);
        assert_eq!(chars[0], (vec![one.clone(), one.clone()], 3));
        assert_eq!(chars[1], (vec![one, minus], 3));
    }

    #[test]
    fn chop_is_deterministic_in_the_seed() {
        let g = Arc::new(named::alternating(4).unwrap());
        let f = Arc::new(FField::new(3, 2).unwrap());
        let reg = GModule::regular(g, f);
        let a = chop(&reg, 5).unwrap();
        let b = chop(&reg, 5).unwrap();
        let dims =
            |v: &Vec<(GModule, usize)>| v.iter().map(|(m, k)| (m.dim(), *k)).collect::<Vec<_>>();
        assert_eq!(dims(&a), dims(&b));
        assert_eq!(dims(&a), vec![(1, 3), (3, 3)]);
        for (m, _) in &a {
            assert!(m.is_representation());
        }
    }

    #[test]
    fn induced_modules_are_representations() {
        let g = Arc::new(named::symmetric(4).unwrap());
        let f = Arc::new(FField::new(2, 3).unwrap());
        let v4 = crate::permgroup::core_p(&g, &crate::permgroup::Subgroup::whole(&g), 2);
        assert_eq!(v4.order(), 4);
        let q = normalizer_quotient(&g, &v4);
        assert_eq!(q.order(), 6);
        let reg = GModule::regular(q.group().clone(), f.clone());
        let ind = induce_inflate(g.clone(), &q, &reg);
        assert_eq!(ind.dim(), 6);
        assert!(ind.is_representation());
        let _: &Group = &g;
    }
}
