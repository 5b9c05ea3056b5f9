use std::sync::Arc;

use super::brauer::brauer_character;
use super::ffield::Fq;
use super::fmat::{Coordinates, Echelon, FMat};
use super::module::GModule;
use crate::error::{Error, Result};
use crate::exactfield::Cyclo;
use crate::permgroup::{normalizer, subgroups_of, Group, QuotientGroup, Subgroup};

fn fixed_space(m: &GModule, mats: &[FMat], n: usize) -> Echelon {
    let f = m.field();
    let mut e = Echelon::new(n);
    if mats.is_empty() {
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = 1;
            e.insert(f, &v);
        }
        return e;
    }
    let shifted: Vec<FMat> = mats.iter().map(|a| a.minus_scalar(f, 1)).collect();
    for v in FMat::vstack(&shifted, n).nullspace(f) {
        e.insert(f, &v);
    }
    e
}

/// `M[P] = M^P / Σ_{R < P} tr_R^P M^R`, maximal `R` suffice, as a module for `N/P`.
///
/// `quotient` must be `N/P` for some `N ≤ N_G(P)`; the action of `nP` is that of the
/// section representative `n`.
pub fn brauer_quotient(m: &GModule, quotient: &QuotientGroup) -> Result<GModule> {
    let g: &Group = m.group();
    let f = m.field();
    let n = m.dim();
    let p = quotient.kernel();
    let all = m.all_matrices();
    let gen_mats =
        |h: &Subgroup| -> Vec<FMat> { h.generators().iter().map(|&x| all[x].clone()).collect() };
    let fixed = fixed_space(m, &gen_mats(p), n);
    let mut traces = Echelon::new(n);
    if !p.is_trivial() {
        let maximal: Vec<Subgroup> = subgroups_of(g, p)
            .into_iter()
            .filter(|r| r.order() * f.characteristic() as usize == p.order())
            .collect();
        for r in &maximal {
            let transversal = r.left_transversal(g, p);
            let fixed_r = fixed_space(m, &gen_mats(r), n);
            for x in fixed_r.basis() {
                let mut t = vec![0; n];
                for &u in &transversal {
                    let y = all[u].apply(f, x);
                    for (a, b) in t.iter_mut().zip(y) {
                        *a = f.add(*a, b);
                    }
                }
                traces.insert(f, &t);
            }
        }
    }
    for t in traces.basis() {
        if !fixed.contains(f, t) {
            return Err(Error::InternalInconsistency(
                "relative trace left the fixed points".into(),
            ));
        }
    }
    let mut span = traces.clone();
    let mut complement: Vec<Vec<Fq>> = Vec::new();
    for w in fixed.basis() {
        if span.insert(f, w) {
            complement.push(w.clone());
        }
    }
    let t = traces.dim();
    let k = complement.len();
    let mut frame: Vec<Vec<Fq>> = traces.basis().to_vec();
    frame.extend(complement.iter().cloned());
    let coords = Coordinates::new(f, &frame, n)?;
    let qg = quotient.group().clone();
    let gens = qg
        .generator_indices()
        .iter()
        .map(|&h| {
            let rho = &all[quotient.section(h)];
            let mut a = FMat::zeros(k, k);
            for (i, c) in complement.iter().enumerate() {
                let y = coords.coords(f, &rho.apply(f, c));
                for r in 0..k {
                    a.set(r, i, y[t + r]);
                }
            }
            a
        })
        .collect();
    GModule::new(qg, f.clone(), k, gens)
}

/// `N_G(P)/P` for a p-subgroup `P`.
pub fn normalizer_quotient(g: &Group, p: &Subgroup) -> QuotientGroup {
    let n = normalizer(g, p);
    QuotientGroup::new(g, &n, p).expect("P is normal in its normalizer")
}

/// Brauer character value of `M[P]` at the p'-element `s` of `N_G(P)/P`.
pub fn species_value(m: &GModule, quotient: &QuotientGroup, s: usize) -> Result<Cyclo> {
    let bq = brauer_quotient(m, quotient)?;
    let h: &Arc<Group> = quotient.group();
    let p = m.field().characteristic();
    if !h.is_p_prime_element(s, p) {
        return Err(Error::InternalInconsistency(format!(
            "species evaluated at an element of order divisible by {p}"
        )));
    }
    let chi = brauer_character(&bq, &[h.class_of(s)])?;
    Ok(chi.values()[0].clone())
}
