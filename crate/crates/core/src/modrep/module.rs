use std::collections::HashMap;
use std::sync::Arc;

use super::ffield::FField;
use super::fmat::FMat;
use crate::error::{Error, Result};
use crate::permgroup::{Group, QuotientGroup, Subgroup};

/// A finite-dimensional `F_q G`-module given by one matrix per group generator.
#[derive(Clone, Debug)]
pub struct GModule {
    group: Arc<Group>,
    field: Arc<FField>,
    dim: usize,
    gens: Vec<FMat>,
}

impl GModule {
    pub fn new(group: Arc<Group>, field: Arc<FField>, dim: usize, gens: Vec<FMat>) -> Result<Self> {
        if gens.len() != group.generators().len() {
            return Err(Error::ShapeMismatch(format!(
                "{} generator matrices for {} generators",
                gens.len(),
                group.generators().len()
            )));
        }
        if gens.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::ShapeMismatch(format!(
                "generator matrix is not {dim}x{dim}"
            )));
        }
        Ok(GModule {
            group,
            field,
            dim,
            gens,
        })
    }

    pub fn trivial(group: Arc<Group>, field: Arc<FField>) -> Self {
        let gens = vec![FMat::identity(1); group.generators().len()];
        GModule {
            group,
            field,
            dim: 1,
            gens,
        }
    }

    /// `F_q H` with `g · e_h = e_{gh}`.
    pub fn regular(group: Arc<Group>, field: Arc<FField>) -> Self {
        let n = group.order();
        let gens = group
            .generator_indices()
            .iter()
            .map(|&g| {
                let mut a = FMat::zeros(n, n);
                for h in 0..n {
                    a.set(group.mul(g, h), h, 1);
                }
                a
            })
            .collect();
        GModule {
            group,
            field,
            dim: n,
            gens,
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn field(&self) -> &Arc<FField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_matrices(&self) -> &[FMat] {
        &self.gens
    }

    /// `ρ(a)`, evaluated along the Schreier word of `a`.
    pub fn matrix_of(&self, a: usize) -> FMat {
        let mut out = FMat::identity(self.dim);
        for gi in self.group.word(a) {
            out = out.mul(&self.field, &self.gens[gi]);
        }
        out
    }

    /// `ρ(a)` for every element, built along the Schreier tree.
    pub fn all_matrices(&self) -> Vec<FMat> {
        let n = self.group.order();
        let mut cache: Vec<Option<FMat>> = vec![None; n];
        cache[Group::IDENTITY] = Some(FMat::identity(self.dim));
        for a in 0..n {
            let mut path = Vec::new();
            let mut x = a;
            while cache[x].is_none() {
                let (gi, prev) = self.group.schreier_parent(x).expect("identity is cached");
                path.push((x, gi, prev));
                x = prev;
            }
            while let Some((y, gi, prev)) = path.pop() {
                let m = self.gens[gi].mul(&self.field, cache[prev].as_ref().unwrap());
                cache[y] = Some(m);
            }
        }
        cache.into_iter().map(|m| m.unwrap()).collect()
    }

    /// Checks `ρ(g)ρ(x) = ρ(gx)` for every generator `g` and element `x`.
    pub fn is_representation(&self) -> bool {
        let all = self.all_matrices();
        let gi = self.group.generator_indices();
        gi.iter().enumerate().all(|(k, &g)| {
            self.gens[k] == all[g]
                && (0..self.group.order())
                    .all(|x| self.gens[k].mul(&self.field, &all[x]) == all[self.group.mul(g, x)])
        })
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &GModule) -> GModule {
        let d = self.dim + other.dim;
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| {
                let mut m = FMat::zeros(d, d);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j));
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j));
                    }
                }
                m
            })
            .collect();
        GModule {
            group: self.group.clone(),
            field: self.field.clone(),
            dim: d,
            gens,
        }
    }
}

/// `Ind_K^G` of the representation `k ↦ rep(k)` of dimension `dim`.
///
/// Basis `t_i ⊗ v` over a left transversal `t_i` of `K` in `G`.
pub fn induce(
    group: Arc<Group>,
    field: Arc<FField>,
    k: &Subgroup,
    dim: usize,
    rep: impl Fn(usize) -> FMat,
) -> GModule {
    let g = &*group;
    let whole = Subgroup::whole(g);
    let transversal = k.left_transversal(g, &whole);
    let mut coset_of: HashMap<usize, usize> = HashMap::new();
    for (i, &t) in transversal.iter().enumerate() {
        for u in k.elements() {
            coset_of.insert(g.mul(t, u), i);
        }
    }
    let r = transversal.len();
    let n = r * dim;
    let mut cache: HashMap<usize, FMat> = HashMap::new();
    let gens = g
        .generator_indices()
        .iter()
        .map(|&x| {
            let mut m = FMat::zeros(n, n);
            for (i, &t) in transversal.iter().enumerate() {
                let xt = g.mul(x, t);
                let j = coset_of[&xt];
                let kk = g.mul(g.inv(transversal[j]), xt);
                let block = cache.entry(kk).or_insert_with(|| rep(kk));
                for a in 0..dim {
                    for b in 0..dim {
                        m.set(j * dim + a, i * dim + b, block.get(a, b));
                    }
                }
            }
            m
        })
        .collect();
    GModule {
        group: group.clone(),
        field,
        dim: n,
        gens,
    }
}

/// `Ind_{N}^{G} Inf_{N/P}^{N} E` for a module `E` of the quotient `N/P`.
pub fn induce_inflate(group: Arc<Group>, quotient: &QuotientGroup, e: &GModule) -> GModule {
    assert!(
        Arc::ptr_eq(quotient.group(), e.group()),
        "module is not over this quotient"
    );
    let mats = e.all_matrices();
    let field = e.field.clone();
    induce(group, field, quotient.numerator(), e.dim, |n| {
        mats[quotient.project(n).expect("element of the numerator")].clone()
    })
}

/// `dim_F Hom_{FG}(X, S)`, as the nullity of `T ↦ (S_g T - T X_g)_g`.
pub fn hom_dim(x: &GModule, s: &GModule) -> usize {
    let f = x.field();
    let (dx, ds) = (x.dim, s.dim);
    let vars = dx * ds;
    if vars == 0 {
        return 0;
    }
    let mut blocks = Vec::new();
    for (xg, sg) in x.gens.iter().zip(&s.gens) {
        let mut a = FMat::zeros(vars, vars);
        for i in 0..ds {
            for j in 0..dx {
                let row = i * dx + j;
                for k in 0..ds {
                    let c = sg.get(i, k);
                    if c != 0 {
                        let col = k * dx + j;
                        a.set(row, col, f.add(a.get(row, col), c));
                    }
                }
                for k in 0..dx {
                    let c = xg.get(k, j);
                    if c != 0 {
                        let col = i * dx + k;
                        a.set(row, col, f.sub(a.get(row, col), c));
                    }
                }
            }
        }
        blocks.push(a);
    }
    if blocks.is_empty() {
        return vars;
    }
    FMat::vstack(&blocks, vars).nullity(f)
}
