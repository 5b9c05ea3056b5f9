use rayon::prelude::*;

use super::{BasisIndex, SpeciesIndex, TsContext};
use crate::error::{Error, Result};
use crate::exactfield::{Cyclo, CycloMatrix};
use crate::permgroup::Subgroup;

/// The matrix `N`: rows `E(G)`, columns `C(G)`, entry `ε_{Q,s}[N_{P,φ}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeciesTable {
    pub rows: Vec<SpeciesIndex>,
    pub cols: Vec<BasisIndex>,
    pub n: CycloMatrix,
}

/// `e_{Q,s} = Σ coeffs[b] · [N_b]` over the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentExpansion {
    pub target: SpeciesIndex,
    pub coeffs: Vec<Cyclo>,
}

fn not_p_prime(what: &str) -> Error {
    Error::InternalInconsistency(format!("{what} is not a p'-element"))
}

impl TsContext {
    fn assemble(
        &self,
        block: impl Fn(usize, usize) -> Result<Vec<Vec<Cyclo>>> + Sync,
    ) -> Result<CycloMatrix> {
        // block(q, r) gives rows = species of q, cols = basis of r
        let k = self.locals().len();
        let blocks: Vec<Vec<Vec<Vec<Cyclo>>>> = (0..k)
            .into_par_iter()
            .map(|q| (0..k).map(|r| block(q, r)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let n = self.species().len();
        let mut out = CycloMatrix::zeros(self.conductor(), n, self.basis().len());
        for (q, row_blocks) in blocks.into_iter().enumerate() {
            for (r, blk) in row_blocks.into_iter().enumerate() {
                for (s, row) in blk.into_iter().enumerate() {
                    let i = self.species_position(SpeciesIndex { q_class: q, s });
                    for (psi, v) in row.into_iter().enumerate() {
                        let j = self.basis_position(BasisIndex {
                            p_class: r,
                            phi: psi,
                        });
                        out[(i, j)] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `n(Q,s;R,ψ) = Σ_{g : ^gQ ≤ R, ^gt ∈ N(R)} ψ̂(^gt R) / |N(R)|` with `s = tQ`.
    pub fn matrix_n(&self) -> Result<SpeciesTable> {
        let g = &**self.group();
        let lat = self.lattice();
        let n = self.assemble(|qi, ri| {
            let (q, r) = (self.local(qi), self.local(ri));
            let ns = q.table.classes().len();
            let npsi = r.table.len();
            let l = r.table.projective_matrix();
            let mut out = vec![vec![self.zero(); npsi]; ns];
            for (s, row) in out.iter_mut().enumerate() {
                let t = self.species_lift(qi, s);
                for x in 0..g.order() {
                    if !lat.leq(lat.conj(x, q.subgroup), r.subgroup) {
                        continue;
                    }
                    let y = g.conj(x, t);
                    if !r.normalizer.contains(y) {
                        continue;
                    }
                    let pos = self
                        .species_class(ri, y)
                        .ok_or_else(|| not_p_prime("^g t R"))?;
                    for (psi, v) in row.iter_mut().enumerate() {
                        *v += &l[(pos, psi)];
                    }
                }
                let scale = self.recip(r.normalizer.order());
                for v in row.iter_mut() {
                    *v = v.scale(&scale);
                }
            }
            Ok(out)
        })?;
        Ok(SpeciesTable {
            rows: self.species().to_vec(),
            cols: self.basis().to_vec(),
            n,
        })
    }

    /// The same table summed over `z ∈ G` and all `tQ ∈ [s]`, weighted by `1/|[s]|`.
    pub fn matrix_n_alt(&self) -> Result<SpeciesTable> {
        let g = &**self.group();
        let lat = self.lattice();
        let n = self.assemble(|qi, ri| {
            let (q, r) = (self.local(qi), self.local(ri));
            let h = q.quotient.group();
            let l = r.table.projective_matrix();
            let mut out = vec![vec![self.zero(); r.table.len()]; q.table.classes().len()];
            for (s, row) in out.iter_mut().enumerate() {
                let members = &h.classes()[q.table.classes()[s]].members;
                for &sigma in members {
                    let t = q.quotient.section(sigma);
                    for z in 0..g.order() {
                        if !lat.leq(q.subgroup, lat.conj(z, r.subgroup)) {
                            continue;
                        }
                        let y = g.conj(g.inv(z), t);
                        if !r.normalizer.contains(y) {
                            continue;
                        }
                        let pos = self
                            .species_class(ri, y)
                            .ok_or_else(|| not_p_prime("t ^zR"))?;
                        for (psi, v) in row.iter_mut().enumerate() {
                            *v += &l[(pos, psi)];
                        }
                    }
                }
                let scale = self.recip(members.len() * r.normalizer.order());
                for v in row.iter_mut() {
                    *v = v.scale(&scale);
                }
            }
            Ok(out)
        })?;
        Ok(SpeciesTable {
            rows: self.species().to_vec(),
            cols: self.basis().to_vec(),
            n,
        })
    }

    /// `n⁻¹(P,φ;Q,s) = Σ_{vN(Q), aP} φ(a⁻¹P) μ_a(P, ^vQ) / |N̄(P)|` over
    /// `P ≤ ^vQ`, `a ∈ N(^vQ)`, `a ^vQ ∈ ^v[s]`, `aP` a p'-element.
    pub fn matrix_ninv(&self) -> Result<CycloMatrix> {
        let g = &**self.group();
        let lat = self.lattice();
        let whole = Subgroup::whole(g);
        let k = self.locals().len();
        let blocks: Vec<Vec<Vec<Vec<Cyclo>>>> = (0..k)
            .into_par_iter()
            .map(|pi| {
                (0..k)
                    .map(|qi| {
                        let (p, q) = (self.local(pi), self.local(qi));
                        let nphi = p.table.len();
                        let ns = q.table.classes().len();
                        let mut out = vec![vec![self.zero(); ns]; nphi];
                        let hp = p.quotient.group();
                        let transversal = q.normalizer.left_transversal(g, &whole);
                        for &v in &transversal {
                            let vq = lat.conj(v, q.subgroup);
                            if !lat.leq(p.subgroup, vq) {
                                continue;
                            }
                            for alpha in 0..hp.order() {
                                if !hp.is_p_prime_element(alpha, self.prime()) {
                                    continue;
                                }
                                let a = p.quotient.section(alpha);
                                let y = g.conj(g.inv(v), a);
                                if !q.normalizer.contains(y) {
                                    continue;
                                }
                                let Some(s) = self.species_class(qi, y) else {
                                    return Err(not_p_prime("a ^vQ"));
                                };
                                let mu = self.poset().mobius(a, p.subgroup, vq)?;
                                if mu == 0 {
                                    continue;
                                }
                                let ainv = hp.inv(alpha);
                                for (phi, row) in out.iter_mut().enumerate() {
                                    let val = p.table.value(phi, ainv).expect("p'-element");
                                    row[s] += &val.scale(&crate::exactfield::rat(mu, 1));
                                }
                            }
                        }
                        let scale = self.recip(hp.order());
                        for row in out.iter_mut() {
                            for v in row.iter_mut() {
                                *v = v.scale(&scale);
                            }
                        }
                        Ok(out)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out =
            CycloMatrix::zeros(self.conductor(), self.basis().len(), self.species().len());
        for (pi, row_blocks) in blocks.into_iter().enumerate() {
            for (qi, blk) in row_blocks.into_iter().enumerate() {
                for (phi, row) in blk.into_iter().enumerate() {
                    let i = self.basis_position(BasisIndex { p_class: pi, phi });
                    for (s, v) in row.into_iter().enumerate() {
                        out[(i, self.species_position(SpeciesIndex { q_class: qi, s }))] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `e_{Q,s} = (1/|N(Q)|) Σ |P| φ(g⁻¹P) μ_g(P,Q) [N_{P,φ}]` over all p-subgroups
    /// `P ≤ Q`, all `φ`, and p'-cosets `gP` with `g ∈ N(Q)`, `gQ ∈ [s]`; each term is
    /// folded onto the canonical representative of `(P, φ)`.
    pub fn idempotent(&self, target: SpeciesIndex) -> Result<IdempotentExpansion> {
        let g = &**self.group();
        let lat = self.lattice();
        let q = self.local(target.q_class);
        let mut coeffs = vec![self.zero(); self.basis().len()];
        for &ph in self.poset().p_subgroups() {
            if !lat.leq(ph, q.subgroup) {
                continue;
            }
            // each coset gP is visited |P| times, absorbing the factor |P|
            for x in q.normalizer.elements() {
                if !lat.normalizes(x, ph) {
                    continue;
                }
                if self.species_class(target.q_class, x) != Some(target.s) {
                    continue;
                }
                let (k, y) = self.fold(ph, x);
                let Some(_) = self.species_class(k, y) else {
                    continue;
                };
                let mu = self.poset().mobius(x, ph, q.subgroup)?;
                if mu == 0 {
                    continue;
                }
                let local = self.local(k);
                let yinv = local.quotient.project(g.inv(y)).expect("element of N(P)");
                for phi in 0..local.table.len() {
                    let val = local.table.value(phi, yinv).expect("p'-element");
                    coeffs[self.basis_position(BasisIndex { p_class: k, phi })] +=
                        &val.scale(&crate::exactfield::rat(mu, 1));
                }
            }
        }
        let scale = self.recip(q.normalizer.order());
        for c in coeffs.iter_mut() {
            *c = c.scale(&scale);
        }
        Ok(IdempotentExpansion { target, coeffs })
    }

    pub fn idempotents(&self) -> Result<Vec<IdempotentExpansion>> {
        self.species()
            .par_iter()
            .map(|&s| self.idempotent(s))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::permgroup::named;
    use crate::tsring::TsContext;

    fn ints(m: u32, rows: &[&[i64]]) -> CycloMatrix {
        CycloMatrix::from_rows(
            m,
            rows.iter()
                .map(|r| r.iter().map(|&x| Cyclo::from_int(m, x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn cyclic_p_tables() {
        for p in [2u32, 3, 5] {
            let ctx = TsContext::new(Arc::new(named::cyclic(p as usize).unwrap()), p, 0).unwrap();
            let n = ctx.matrix_n().unwrap().n;
            assert_eq!(n, ints(1, &[&[p as i64, 1], &[0, 1]]));
            assert_eq!(ctx.matrix_n_alt().unwrap().n, n);
            let ninv = ctx.matrix_ninv().unwrap();
            assert!(n.mul(&ninv).unwrap().is_identity());
            let e0 = ctx.idempotent(ctx.species()[0]).unwrap();
            let r = crate::exactfield::rat(1, p as i64);
            assert_eq!(
                e0.coeffs,
                vec![Cyclo::from_rat(1, r.clone()), Cyclo::zero(1)]
            );
            let e1 = ctx.idempotent(ctx.species()[1]).unwrap();
            assert_eq!(e1.coeffs, vec![Cyclo::from_rat(1, -r), Cyclo::one(1)]);
        }
    }

    #[test]
    fn s3_mod_3_table() {
        let ctx = TsContext::new(Arc::new(named::symmetric(3).unwrap()), 3, 0).unwrap();
        let n = ctx.matrix_n().unwrap().n;
        assert_eq!(n.submatrix(&[0, 1], &[0, 1]), ints(2, &[&[3, 3], &[1, -1]]));
        let ninv = ctx.matrix_ninv().unwrap();
        assert!(n.mul(&ninv).unwrap().is_identity());
    }
}
