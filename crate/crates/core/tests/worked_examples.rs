//! Small hand-checkable instances and frozen tables. Every frozen table below was
//! first reproduced by the Brauer-quotient oracle, which is asserted again here.

use std::sync::Arc;

use trivsource::exactfield::{rat, Cyclo, CycloMatrix};
use trivsource::modrep::{
    brauer_quotient, induce_inflate, normalizer_quotient, species_value, FField, GModule,
};
use trivsource::monomial::monomial_pairs;
use trivsource::permgroup::named::{self, parse_group_default};
use trivsource::permgroup::{Group, Subgroup};
use trivsource::tsring::{species_oracle_table, BasisIndex, SpeciesIndex, TsContext};

fn ctx(name: &str, p: u32) -> TsContext {
    TsContext::new(Arc::new(parse_group_default(name).unwrap()), p, 0).unwrap()
}

/// Parses entries written as `a` or `a+bz` (`z` a primitive cube root of unity).
fn table(m: u32, rows: &[&[&str]]) -> CycloMatrix {
    let parse = |s: &str| -> Cyclo {
        match s {
            "z" => Cyclo::zeta_power(m, 1),
            "-1-z" => &Cyclo::from_int(m, -1) - &Cyclo::zeta_power(m, 1),
            _ => Cyclo::from_int(m, s.parse().unwrap()),
        }
    };
    CycloMatrix::from_rows(
        m,
        rows.iter()
            .map(|r| r.iter().map(|s| parse(s)).collect())
            .collect(),
    )
    .unwrap()
}

fn frozen(name: &str, p: u32, expect: CycloMatrix) {
    let c = ctx(name, p);
    let n = c.matrix_n().unwrap().n;
    assert_eq!(
        species_oracle_table(&c).unwrap(),
        expect,
        "{name} p={p} oracle"
    );
    assert_eq!(n, expect, "{name} p={p}");
}

#[test]
fn frozen_s3_tables() {
    frozen(
        "S3",
        3,
        table(
            2,
            &[
                &["3", "3", "1", "1"],
                &["1", "-1", "1", "-1"],
                &["0", "0", "1", "1"],
                &["0", "0", "1", "-1"],
            ],
        ),
    );
    frozen(
        "S3",
        2,
        table(3, &[&["2", "2", "3"], &["2", "-1", "0"], &["0", "0", "1"]]),
    );
}

#[test]
fn frozen_a4_mod_2_table() {
    frozen(
        "A4",
        2,
        table(
            3,
            &[
                &["4", "4", "4", "6", "1", "1", "1"],
                &["1", "z", "-1-z", "0", "1", "z", "-1-z"],
                &["1", "-1-z", "z", "0", "1", "-1-z", "z"],
                &["0", "0", "0", "2", "1", "1", "1"],
                &["0", "0", "0", "0", "1", "1", "1"],
                &["0", "0", "0", "0", "1", "z", "-1-z"],
                &["0", "0", "0", "0", "1", "-1-z", "z"],
            ],
        ),
    );
}

#[test]
fn cyclic_p_inverse() {
    for p in [2u32, 3, 5] {
        let c = ctx(&format!("C{p}"), p);
        let r = rat(1, p as i64);
        let want = CycloMatrix::from_rows(
            1,
            vec![
                vec![Cyclo::from_rat(1, r.clone()), Cyclo::from_rat(1, -r)],
                vec![Cyclo::zero(1), Cyclo::one(1)],
            ],
        )
        .unwrap();
        assert_eq!(c.matrix_ninv().unwrap(), want);
    }
}

#[test]
fn s3_mod_2_variant_equals_table() {
    let c = ctx("S3", 2);
    assert_eq!(c.matrix_n_alt().unwrap().n, c.matrix_n().unwrap().n);
}

#[test]
fn index_sets_of_s3_mod_3() {
    let c = ctx("S3", 3);
    assert_eq!(c.basis().len(), 4);
    assert_eq!(c.species().len(), 4);
    assert_eq!(c.locals().len(), 2);
    assert_eq!(c.lattice().get(c.local(1).subgroup).order(), 3);
    assert_eq!(c.local(1).quotient.order(), 2);
}

#[test]
fn induced_inflated_dimensions() {
    let f = Arc::new(FField::new(2, 1).unwrap());
    let c2 = Arc::new(named::cyclic(2).unwrap());
    let q = normalizer_quotient(&c2, &Subgroup::trivial(&c2));
    let reg = GModule::regular(q.group().clone(), f.clone());
    assert_eq!(induce_inflate(c2.clone(), &q, &reg).dim(), 2);

    let s3 = Arc::new(named::symmetric(3).unwrap());
    let t = s3
        .index_of(&trivsource::permgroup::Perm::parse_cycles("(0 1)", 3).unwrap())
        .unwrap();
    let c2_in_s3 = Subgroup::generated(&s3, &[t]);
    let q = normalizer_quotient(&s3, &c2_in_s3);
    assert_eq!(q.order(), 1);
    let one = GModule::trivial(q.group().clone(), f);
    assert_eq!(induce_inflate(s3, &q, &one).dim(), 3);
}

#[test]
fn species_values_of_cyclic_p() {
    for p in [2u32, 3, 5] {
        let g = Arc::new(named::cyclic(p as usize).unwrap());
        let f = Arc::new(FField::new(p, 1).unwrap());
        let reg = GModule::regular(g.clone(), f.clone());
        let top = normalizer_quotient(&g, &Subgroup::whole(&g));
        assert_eq!(
            species_value(&reg, &top, Group::IDENTITY).unwrap(),
            Cyclo::zero(1)
        );
        let bottom = normalizer_quotient(&g, &Subgroup::trivial(&g));
        assert_eq!(
            species_value(&reg, &bottom, Group::IDENTITY).unwrap(),
            Cyclo::from_int(1, p as i64)
        );
        assert_eq!(brauer_quotient(&reg, &top).unwrap().dim(), 0);
    }
}

#[test]
fn trivial_module_survives_every_brauer_quotient() {
    let g = Arc::new(named::symmetric(4).unwrap());
    let f = Arc::new(FField::new(2, 3).unwrap());
    let triv = GModule::trivial(g.clone(), f);
    let c = ctx("S4", 2);
    for loc in c.locals() {
        let bq = brauer_quotient(&triv, &loc.quotient).unwrap();
        assert_eq!(bq.dim(), 1);
        assert!(bq.generator_matrices().iter().all(|m| m.get(0, 0) == 1));
    }
}

#[test]
fn free_pair_is_the_regular_module() {
    for (name, p) in [("S3", 3), ("S4", 2), ("A4", 3)] {
        let c = ctx(name, p);
        let pairs = monomial_pairs(&c);
        let free = &pairs[0];
        assert_eq!(c.lattice().get(free.subgroup).order(), 1);
        let row = c.lin_row(free).unwrap();
        let table = &c.local(0).table;
        for (j, b) in c.basis().iter().enumerate() {
            let want = if b.p_class == 0 {
                Cyclo::from_int(c.conductor(), table.irreducibles()[b.phi].dim() as i64)
            } else {
                Cyclo::zero(c.conductor())
            };
            assert_eq!(row.coeffs[j], want, "{name}");
        }
        for &s in c.species() {
            if s.q_class != 0 {
                assert!(c.species_of_induced(free, s).is_zero());
            }
        }
    }
}

#[test]
fn trivial_pair_is_the_identity_element() {
    for (name, p) in [("C2", 2), ("S3", 2), ("D8", 2), ("A4", 3)] {
        let c = ctx(name, p);
        let g = c.group().order();
        let pair = monomial_pairs(&c)
            .into_iter()
            .find(|x| c.lattice().get(x.subgroup).order() == g && x.is_trivial())
            .unwrap();
        let row = c.lin_row(&pair).unwrap();
        let ninv = c.matrix_ninv().unwrap();
        let ones = vec![Cyclo::one(c.conductor()); c.species().len()];
        assert_eq!(ninv.mul_vec(&ones).unwrap(), row.coeffs, "{name}");
        let mut sum = vec![Cyclo::zero(c.conductor()); c.basis().len()];
        for e in c.idempotents().unwrap() {
            for (a, b) in sum.iter_mut().zip(&e.coeffs) {
                *a += b;
            }
        }
        assert_eq!(sum, row.coeffs, "{name}");
    }
}

#[test]
fn c2_trivial_pair_gives_the_trivial_module() {
    let c = ctx("C2", 2);
    let pairs = monomial_pairs(&c);
    let top = pairs
        .iter()
        .find(|x| c.lattice().get(x.subgroup).order() == 2)
        .unwrap();
    let row = c.lin_row(top).unwrap();
    let at = |b: BasisIndex| row.coeffs[c.basis_position(b)].clone();
    assert_eq!(at(BasisIndex { p_class: 0, phi: 0 }), Cyclo::zero(1));
    assert_eq!(at(BasisIndex { p_class: 1, phi: 0 }), Cyclo::one(1));
    assert!(c
        .species_of_induced(top, SpeciesIndex { q_class: 1, s: 0 })
        .is_one());
}
