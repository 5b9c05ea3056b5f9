//! The invariant mesh: every identity the crate can assert exactly, as named checks.

use std::fmt;

use serde::Serialize;

use super::{BasisIndex, SpeciesIndex, TsContext};
use crate::error::Result;
use crate::exactfield::{Cyclo, CycloMatrix, Rat};
use crate::modrep::{brauer_character, brauer_quotient, induce_inflate};
use crate::monomial::monomial_pairs;
use crate::permgroup::{frattini, Group};
use crate::tsring::oracle::oracle_modules;
use crate::tsring::species_oracle_table;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, failures: Vec<String>, total: usize) -> Check {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{total} cases")
        } else {
            let shown: Vec<String> = failures.iter().take(3).cloned().collect();
            format!("{} of {total} failed: {}", failures.len(), shown.join("; "))
        };
        Check {
            name,
            passed,
            detail,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} ({})", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Tables shared by several checks.
pub struct Tables {
    pub n: CycloMatrix,
    pub ninv: CycloMatrix,
}

impl Tables {
    pub fn compute(ctx: &TsContext) -> Result<Tables> {
        Ok(Tables {
            n: ctx.matrix_n()?.n,
            ninv: ctx.matrix_ninv()?,
        })
    }
}

pub fn check_brauer_tables(ctx: &TsContext) -> Check {
    let mut failures = Vec::new();
    for (i, loc) in ctx.locals().iter().enumerate() {
        let t = &loc.table;
        if t.len() != t.classes().len() {
            failures.push(format!(
                "class {i}: {} simples, {} classes",
                t.len(),
                t.classes().len()
            ));
        }
        let mut total = Cyclo::zero(ctx.conductor());
        for (j, phi) in t.irreducibles().iter().enumerate() {
            total +=
                &t.projective_matrix()[(0, j)].scale(&Rat::from_integer((phi.dim() as i64).into()));
        }
        if total != Cyclo::from_int(ctx.conductor(), loc.quotient.order() as i64) {
            failures.push(format!("class {i}: Σ dim·proj(1) = {total}"));
        }
    }
    Check::new("brauer tables", failures, ctx.locals().len())
}

pub fn check_inversion(tables: &Tables) -> Check {
    let ok = tables
        .n
        .mul(&tables.ninv)
        .map(|x| x.is_identity())
        .unwrap_or(false)
        && tables
            .ninv
            .mul(&tables.n)
            .map(|x| x.is_identity())
            .unwrap_or(false);
    let failures = if ok {
        vec![]
    } else {
        vec!["N·N⁻¹ ≠ I".to_string()]
    };
    Check::new("inversion", failures, tables.n.rows())
}

pub fn check_variant(ctx: &TsContext, tables: &Tables) -> Result<Check> {
    let alt = ctx.matrix_n_alt()?.n;
    let failures = mismatches(&tables.n, &alt);
    Ok(Check::new(
        "variant table",
        failures,
        tables.n.rows() * tables.n.cols(),
    ))
}

fn mismatches(a: &CycloMatrix, b: &CycloMatrix) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(i, j)] != b[(i, j)] {
                out.push(format!("({i},{j}): {} vs {}", a[(i, j)], b[(i, j)]));
            }
        }
    }
    out
}

pub fn check_oracle(ctx: &TsContext, tables: &Tables) -> Result<Check> {
    let oracle = species_oracle_table(ctx)?;
    let failures = mismatches(&tables.n, &oracle);
    Ok(Check::new(
        "oracle equivalence",
        failures,
        tables.n.rows() * tables.n.cols(),
    ))
}

/// `N_X[P]` has the Brauer character of `X` for the projective oracle modules `X`.
pub fn check_quotient_recovers_module(ctx: &TsContext) -> Result<Check> {
    let mut failures = Vec::new();
    let mut total = 0;
    for (pi, loc) in ctx.locals().iter().enumerate() {
        for x in oracle_modules(ctx, pi)? {
            total += 1;
            let big = induce_inflate(ctx.group().clone(), &loc.quotient, &x.module);
            let bq = brauer_quotient(&big, &loc.quotient)?;
            let a = brauer_character(&bq, loc.table.classes())?;
            let b = brauer_character(&x.module, loc.table.classes())?;
            if a != b {
                failures.push(format!("class {pi}, σ={} χ={}", x.sigma, x.chi));
            }
        }
    }
    Ok(Check::new(
        "brauer quotient of induced inflation",
        failures,
        total,
    ))
}

pub fn check_triangular(ctx: &TsContext, tables: &Tables) -> Check {
    let mut failures = Vec::new();
    for (i, r) in ctx.species().iter().enumerate() {
        for (j, c) in ctx.basis().iter().enumerate() {
            if !ctx.class_leq(r.q_class, c.p_class) && !tables.n[(i, j)].is_zero() {
                failures.push(format!("N[{i}][{j}]"));
            }
            if !ctx.class_leq(c.p_class, r.q_class) && !tables.ninv[(j, i)].is_zero() {
                failures.push(format!("N⁻¹[{j}][{i}]"));
            }
        }
    }
    Check::new(
        "triangularity",
        failures,
        ctx.species().len() * ctx.basis().len(),
    )
}

pub fn check_diagonal_blocks(ctx: &TsContext, tables: &Tables) -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for (pi, loc) in ctx.locals().iter().enumerate() {
        let t = &loc.table;
        let h = loc.quotient.group();
        for s in 0..t.classes().len() {
            let i = ctx.species_position(SpeciesIndex { q_class: pi, s });
            let rep = t.class_representative(s);
            for phi in 0..t.len() {
                total += 1;
                let j = ctx.basis_position(BasisIndex { p_class: pi, phi });
                if tables.n[(i, j)] != t.projective_matrix()[(s, phi)] {
                    failures.push(format!("N block at class {pi}"));
                }
                let expect = t
                    .value(phi, h.inv(rep))
                    .expect("p'-element")
                    .scale(&Rat::new(
                        1.into(),
                        (h.centralizer_order(rep) as i64).into(),
                    ));
                if tables.ninv[(j, i)] != expect {
                    failures.push(format!("N⁻¹ block at class {pi}"));
                }
            }
        }
    }
    Check::new("diagonal blocks", failures, total)
}

pub fn check_idempotent_assembly(ctx: &TsContext, tables: &Tables) -> Result<Check> {
    let mut failures = Vec::new();
    for (i, e) in ctx.idempotents()?.into_iter().enumerate() {
        let col = tables.ninv.column(i);
        if e.coeffs != col {
            failures.push(ctx.species_label(e.target));
        }
    }
    Ok(Check::new(
        "idempotent assembly",
        failures,
        ctx.species().len(),
    ))
}

pub fn check_species_delta(ctx: &TsContext, tables: &Tables) -> Result<Check> {
    let m = ctx.conductor();
    let mut failures = Vec::new();
    let mut sum = vec![Cyclo::zero(m); ctx.basis().len()];
    for (i, e) in ctx.idempotents()?.into_iter().enumerate() {
        let v = tables.n.mul_vec(&e.coeffs)?;
        for (j, x) in v.iter().enumerate() {
            let want = if i == j { x.is_one() } else { x.is_zero() };
            if !want {
                failures.push(format!("ε_{j}(e_{i}) = {x}"));
            }
        }
        for (a, b) in sum.iter_mut().zip(&e.coeffs) {
            *a += b;
        }
    }
    let ones = tables.n.mul_vec(&sum)?;
    if !ones.iter().all(|x| x.is_one()) {
        failures.push("Σ e does not have all species equal to 1".into());
    }
    Ok(Check::new(
        "species delta",
        failures,
        ctx.species().len() + 1,
    ))
}

pub fn check_frattini_support(ctx: &TsContext) -> Result<Check> {
    let g: &Group = ctx.group();
    let lat = ctx.lattice();
    let mut failures = Vec::new();
    let mut total = 0;
    for e in ctx.idempotents()? {
        let q = ctx.local(e.target.q_class).subgroup;
        let phi_q = lat.index_of(&frattini(g, lat.get(q)));
        for (j, c) in e.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            total += 1;
            let p = ctx.local(ctx.basis()[j].p_class).subgroup;
            let ok = (0..g.order()).any(|x| {
                let xp = lat.conj(x, p);
                lat.leq(phi_q, xp) && lat.leq(xp, q)
            });
            if !ok {
                failures.push(format!("{} at {}", ctx.species_label(e.target), j));
            }
        }
    }
    let pp = ctx.poset();
    for &q in pp.p_subgroups() {
        let phi_q = lat.index_of(&frattini(g, lat.get(q)));
        for &p in pp.p_subgroups() {
            if lat.leq(phi_q, p) {
                continue;
            }
            for x in 0..g.order() {
                if lat.normalizes(x, p) && lat.normalizes(x, q) {
                    total += 1;
                    let mu = pp.mobius(x, p, q)?;
                    if mu != 0 {
                        failures.push(format!("μ_{x}({p},{q}) = {mu}"));
                    }
                    if lat.leq(p, q) && p != q {
                        let slice = pp.fixed_subposet(x, p, Some(q), true, true);
                        if !pp.has_conical_contraction(&slice, phi_q, p) {
                            failures.push(format!("no contraction for ({p},{q}) at {x}"));
                        }
                    }
                }
            }
        }
    }
    Ok(Check::new("frattini support", failures, total))
}

pub fn check_mobius_euler(ctx: &TsContext) -> Result<Check> {
    let g: &Group = ctx.group();
    let lat = ctx.lattice();
    let pp = ctx.poset();
    let mut failures = Vec::new();
    let mut total = 0;
    for x in 0..g.order() {
        let fixed: Vec<usize> = pp
            .p_subgroups()
            .iter()
            .copied()
            .filter(|&h| lat.normalizes(x, h))
            .collect();
        for &p in &fixed {
            for &q in &fixed {
                if !lat.leq(p, q) || p == q {
                    continue;
                }
                total += 1;
                let mu = pp.mobius(x, p, q)?;
                let chi = pp.fixed_subposet(x, p, Some(q), true, true).reduced_euler();
                if mu != chi {
                    failures.push(format!("μ_{x}({p},{q}) = {mu}, χ̃ = {chi}"));
                }
                let lower: i64 = fixed
                    .iter()
                    .filter(|&&r| lat.leq(p, r) && lat.leq(r, q))
                    .map(|&r| pp.mobius(x, p, r))
                    .sum::<Result<i64>>()?;
                let upper: i64 = fixed
                    .iter()
                    .filter(|&&r| lat.leq(p, r) && lat.leq(r, q))
                    .map(|&r| pp.mobius_upper(x, r, q))
                    .sum::<Result<i64>>()?;
                if lower != 0 || upper != 0 {
                    failures.push(format!(
                        "recurrence sums {lower}, {upper} on ({p},{q}) at {x}"
                    ));
                }
                let y = (x * 7 + 3) % g.order();
                let conj = pp.mobius(g.conj(y, x), lat.conj(y, p), lat.conj(y, q))?;
                if conj != mu {
                    failures.push(format!("μ not equivariant on ({p},{q}) at {x}"));
                }
            }
        }
    }
    Ok(Check::new("mobius euler", failures, total))
}

pub fn check_linearization(ctx: &TsContext, tables: &Tables) -> Result<Check> {
    let mut failures = Vec::new();
    let pairs = monomial_pairs(ctx);
    let g: &Group = ctx.group();
    let m = ctx.conductor();
    for pair in &pairs {
        let label = format!(
            "{} ν={:?}",
            ctx.lattice().get(pair.subgroup).label(g),
            pair.generator_exponents(ctx.lattice().get(pair.subgroup))
        );
        let row = ctx.lin_row(pair)?;
        let species = tables.n.mul_vec(&row.coeffs)?;
        for (i, &r) in ctx.species().iter().enumerate() {
            let direct = ctx.species_of_induced(pair, r);
            if species[i] != direct {
                failures.push(format!("{label}: species {i} {} vs {direct}", species[i]));
            }
            // independence of the lift: every lift of every member of the class
            let loc = ctx.local(r.q_class);
            let h = loc.quotient.group();
            for &sigma in &h.classes()[loc.table.classes()[r.s]].members {
                let rep = loc.quotient.section(sigma);
                for u in loc.subgroup_elements() {
                    let lift = g.mul(rep, u);
                    if ctx.species_of_induced_at(pair, r.q_class, lift) != direct {
                        failures.push(format!("{label}: lift dependence at species {i}"));
                    }
                }
            }
        }
        for (j, c) in row.coeffs.iter().enumerate() {
            if !c.is_integer() {
                failures.push(format!("{label}: coefficient {c} is not an integer"));
            }
            if !c.is_zero() && !ctx.lin_support_ok(pair, ctx.basis()[j]) {
                failures.push(format!(
                    "{label}: support at {}",
                    ctx.basis_label(ctx.basis()[j])
                ));
            }
        }
        let v = ctx.lattice().get(pair.subgroup);
        if v.order() == g.order() && pair.is_trivial() {
            let ones = species.iter().all(|x| *x == Cyclo::one(m));
            if !ones {
                failures.push("trivial module does not have all species 1".into());
            }
        }
    }
    Ok(Check::new("linearization", failures, pairs.len()))
}

impl super::Local {
    fn subgroup_elements(&self) -> Vec<usize> {
        self.quotient.kernel().elements().collect()
    }
}

/// Runs every check.
pub fn verify_all(ctx: &TsContext) -> Result<Report> {
    let tables = Tables::compute(ctx)?;
    let checks = vec![
        check_brauer_tables(ctx),
        check_inversion(&tables),
        check_idempotent_assembly(ctx, &tables)?,
        check_species_delta(ctx, &tables)?,
        check_oracle(ctx, &tables)?,
        check_quotient_recovers_module(ctx)?,
        check_variant(ctx, &tables)?,
        check_triangular(ctx, &tables),
        check_diagonal_blocks(ctx, &tables),
        check_frattini_support(ctx)?,
        check_mobius_euler(ctx)?,
        check_linearization(ctx, &tables)?,
    ];
    Ok(Report { checks })
}
