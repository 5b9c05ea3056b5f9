//! Species values computed from explicit modules and Brauer quotients, sharing nothing
//! with the combinatorial formulas beyond field arithmetic and the simple modules.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{BasisIndex, SpeciesIndex, TsContext};
use crate::error::{Error, Result};
use crate::exactfield::{Cyclo, CycloMatrix};
use crate::modrep::{
    brauer_character, brauer_quotient, hom_dim, induce, induce_inflate, FMat, GModule,
};
use crate::permgroup::Subgroup;

/// A projective `F N̄(P)`-module `Ind_{⟨σ⟩}(F_χ)` with its decomposition into
/// projective covers of the simples, read off from `dim Hom(X, S_φ)`.
pub struct OracleModule {
    pub sigma: usize,
    pub chi: u32,
    pub module: GModule,
    pub multiplicities: Vec<usize>,
}

/// Modules `Ind_{⟨σ⟩} F_χ` whose multiplicity vectors form a basis, for class `pi`.
pub fn oracle_modules(ctx: &TsContext, pi: usize) -> Result<Vec<OracleModule>> {
    let local = ctx.local(pi);
    let h = local.quotient.group().clone();
    let f = ctx.field().clone();
    let m = ctx.conductor();
    let k = local.table.len();
    let mut chosen: Vec<OracleModule> = Vec::new();
    let mut rows: Vec<Vec<Cyclo>> = Vec::new();
    'outer: for s in 0..local.table.classes().len() {
        let sigma = local.table.class_representative(s);
        let o = h.element_order(sigma);
        let c = Subgroup::generated(&h, &[sigma]);
        let mut power_of: HashMap<usize, u32> = HashMap::new();
        let mut x = 0usize;
        for i in 0..o as u32 {
            power_of.insert(x, i);
            x = h.mul(sigma, x);
        }
        let step = m / o as u32;
        for chi in 0..o as u32 {
            let module = induce(h.clone(), f.clone(), &c, 1, |y| {
                let e = (power_of[&y] * chi * step) % m;
                FMat::from_rows(vec![vec![f.omega_power(e)]])
            });
            let multiplicities: Vec<usize> = (0..k)
                .map(|phi| hom_dim(&module, local.table.simple_module(phi)))
                .collect();
            let row: Vec<Cyclo> = multiplicities
                .iter()
                .map(|&a| Cyclo::from_int(m, a as i64))
                .collect();
            rows.push(row);
            let trial = CycloMatrix::from_rows(m, rows.clone())?;
            if trial.rank() == rows.len() {
                chosen.push(OracleModule {
                    sigma,
                    chi,
                    module,
                    multiplicities,
                });
                if chosen.len() == k {
                    break 'outer;
                }
            } else {
                rows.pop();
            }
        }
    }
    if chosen.len() != k {
        return Err(Error::SingularSystem);
    }
    Ok(chosen)
}

/// Columns `(P_pi, φ)` of the species table: `ε_{Q,s}[N_{P,φ}]` for every species.
fn oracle_columns(ctx: &TsContext, pi: usize) -> Result<Vec<Vec<Cyclo>>> {
    let m = ctx.conductor();
    let local = ctx.local(pi);
    let mods = oracle_modules(ctx, pi)?;
    let a = CycloMatrix::from_rows(
        m,
        mods.iter()
            .map(|x| {
                x.multiplicities
                    .iter()
                    .map(|&v| Cyclo::from_int(m, v as i64))
                    .collect()
            })
            .collect(),
    )?;
    let ainv = a.inverse().map_err(|_| Error::SingularSystem)?;
    // eps[x][row] = ε_row[N_X]
    let mut eps: Vec<Vec<Cyclo>> = Vec::new();
    for x in &mods {
        let big = induce_inflate(ctx.group().clone(), &local.quotient, &x.module);
        let mut col = vec![Cyclo::zero(m); ctx.species().len()];
        for (qi, q) in ctx.locals().iter().enumerate() {
            let bq = brauer_quotient(&big, &q.quotient)?;
            let chi = brauer_character(&bq, q.table.classes())?;
            for (s, v) in chi.values().iter().enumerate() {
                col[ctx.species_position(SpeciesIndex { q_class: qi, s })] = v.clone();
            }
        }
        eps.push(col);
    }
    Ok((0..local.table.len())
        .map(|phi| {
            (0..ctx.species().len())
                .map(|row| {
                    let mut acc = Cyclo::zero(m);
                    for (xi, e) in eps.iter().enumerate() {
                        acc += &(&ainv[(phi, xi)] * &e[row]);
                    }
                    acc
                })
                .collect()
        })
        .collect())
}

/// The whole species table from explicit Brauer quotients.
pub fn species_oracle_table(ctx: &TsContext) -> Result<CycloMatrix> {
    let cols: Vec<Vec<Vec<Cyclo>>> = (0..ctx.locals().len())
        .into_par_iter()
        .map(|pi| oracle_columns(ctx, pi))
        .collect::<Result<Vec<_>>>()?;
    let mut out = CycloMatrix::zeros(ctx.conductor(), ctx.species().len(), ctx.basis().len());
    for (pi, block) in cols.into_iter().enumerate() {
        for (phi, col) in block.into_iter().enumerate() {
            let j = ctx.basis_position(BasisIndex { p_class: pi, phi });
            for (i, v) in col.into_iter().enumerate() {
                out[(i, j)] = v;
            }
        }
    }
    Ok(out)
}

/// One entry `ε_{Q,s}[N_{P,φ}]` of the oracle table.
pub fn species_oracle(ctx: &TsContext, row: SpeciesIndex, col: BasisIndex) -> Result<Cyclo> {
    let cols = oracle_columns(ctx, col.p_class)?;
    Ok(cols[col.phi][ctx.species_position(row)].clone())
}
