//! Monomial Burnside ring basis pairs `(V, ν)` and the matrix of the linearization map
//! in the canonical basis of the trivial source ring.

use std::collections::{HashMap, HashSet};

use crate::error::Result;
use crate::exactfield::Cyclo;
use crate::permgroup::{core_p, normalizer, Group, Subgroup};
use crate::tsring::{BasisIndex, SpeciesIndex, TsContext};

/// A subgroup `V` with a homomorphism `ν : V → μ_m`, stored as `ν(x) = ζ^{e(x)}` for
/// every element of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPair {
    pub subgroup: usize,
    exponents: HashMap<usize, u32>,
    m: u32,
}

impl MonomialPair {
    pub fn exponent(&self, x: usize) -> Option<u32> {
        self.exponents.get(&x).copied()
    }

    pub fn value(&self, x: usize) -> Option<Cyclo> {
        self.exponent(x)
            .map(|e| Cyclo::zeta_power(self.m, e as i64))
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.values().all(|&e| e == 0)
    }

    /// Exponents on the generators of `V`, for labels.
    pub fn generator_exponents(&self, v: &Subgroup) -> Vec<u32> {
        v.generators().iter().map(|x| self.exponents[x]).collect()
    }

    fn key(&self, v: &Subgroup) -> Vec<u32> {
        v.elements().map(|x| self.exponents[&x]).collect()
    }
}

/// Expansion of `[Ind_V F_ν]` in the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinRow {
    pub source: MonomialPair,
    pub coeffs: Vec<Cyclo>,
}

/// All homomorphisms `V → μ_m` as exponent maps, by extension over generators.
pub fn linear_characters(g: &Group, v: &Subgroup, m: u32) -> Vec<HashMap<usize, u32>> {
    let gens = v.generators().to_vec();
    let choices: Vec<Vec<u32>> = gens
        .iter()
        .map(|&x| {
            let o = g.element_order(x) as u32;
            (0..m).filter(|e| (e * o) % m == 0).collect()
        })
        .collect();
    let mut out: Vec<HashMap<usize, u32>> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<u32> = assignment
            .iter()
            .enumerate()
            .map(|(i, &c)| choices[i][c])
            .collect();
        if let Some(map) = extend(g, &gens, &imgs, m) {
            let key: Vec<u32> = v.elements().map(|x| map[&x]).collect();
            if seen.insert(key) {
                out.push(map);
            }
        }
        let mut i = 0;
        loop {
            if i == gens.len() {
                return if out.is_empty() {
                    vec![v.elements().map(|x| (x, 0)).collect()]
                } else {
                    out
                };
            }
            assignment[i] += 1;
            if assignment[i] < choices[i].len() {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Extends generator images to a map on `⟨gens⟩`, checking every relation.
fn extend(g: &Group, gens: &[usize], imgs: &[u32], m: u32) -> Option<HashMap<usize, u32>> {
    let mut map: HashMap<usize, u32> = HashMap::new();
    map.insert(Group::IDENTITY, 0);
    let mut queue = vec![Group::IDENTITY];
    while let Some(x) = queue.pop() {
        let ex = map[&x];
        for (&s, &es) in gens.iter().zip(imgs) {
            let y = g.mul(s, x);
            let ey = (es + ex) % m;
            match map.get(&y) {
                Some(&e) if e != ey => return None,
                Some(_) => {}
                None => {
                    map.insert(y, ey);
                    queue.push(y);
                }
            }
        }
    }
    // closure under left multiplication by generators with consistent values makes the
    // map a homomorphism; check it outright anyway
    for (&a, &ea) in &map {
        for (&b, &eb) in &map {
            if map[&g.mul(a, b)] != (ea + eb) % m {
                return None;
            }
        }
    }
    Some(map)
}

/// Orbit representatives of `(V, ν)` under conjugation, `V` canonical.
pub fn monomial_pairs(ctx: &TsContext) -> Vec<MonomialPair> {
    let g = &**ctx.group();
    let lat = ctx.lattice();
    let m = ctx.conductor();
    let mut out = Vec::new();
    for v in 0..lat.len() {
        if !lat.is_canonical(v) {
            continue;
        }
        let vs = lat.get(v);
        let nv = normalizer(g, vs);
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for chi in linear_characters(g, vs, m) {
            let pair = MonomialPair {
                subgroup: v,
                exponents: chi,
                m,
            };
            if seen.contains(&pair.key(vs)) {
                continue;
            }
            for n in nv.elements() {
                let ninv = g.inv(n);
                let conj: Vec<u32> = vs
                    .elements()
                    .map(|x| pair.exponents[&g.conj(ninv, x)])
                    .collect();
                seen.insert(conj);
            }
            out.push(pair);
        }
    }
    out
}

impl TsContext {
    /// Coefficients of `[Ind_V F_ν]`:
    /// `(-1/|V|) Σ |P| φ(g⁻¹P) ν(g) χ̃((P,V]^⟨g⟩)` over all p-subgroups `P ≤ V`, all `φ`
    /// and p'-cosets `gP` with `g ∈ V`, folded onto canonical representatives.
    pub fn lin_row(&self, pair: &MonomialPair) -> Result<LinRow> {
        let g = &**self.group();
        let lat = self.lattice();
        let v = lat.get(pair.subgroup);
        let m = self.conductor();
        let mut coeffs = vec![Cyclo::zero(m); self.basis().len()];
        for &ph in self.poset().p_subgroups() {
            if !lat.leq(ph, pair.subgroup) {
                continue;
            }
            for x in v.elements() {
                if !lat.normalizes(x, ph) {
                    continue;
                }
                let (k, y) = self.fold(ph, x);
                if self.species_class(k, y).is_none() {
                    continue;
                }
                let chi = self
                    .poset()
                    .fixed_subposet(x, ph, Some(pair.subgroup), true, false)
                    .reduced_euler();
                if chi == 0 {
                    continue;
                }
                let nu = pair.value(x).expect("element of V");
                let local = self.local(k);
                let yinv = local.quotient.project(g.inv(y)).expect("element of N(P)");
                for phi in 0..local.table.len() {
                    let val = local.table.value(phi, yinv).expect("p'-element");
                    coeffs[self.basis_position(BasisIndex { p_class: k, phi })] +=
                        &(&nu * val).scale(&crate::exactfield::rat(chi, 1));
                }
            }
        }
        let scale = crate::exactfield::Rat::new((-1).into(), (v.order() as i64).into());
        for c in coeffs.iter_mut() {
            *c = c.scale(&scale);
        }
        Ok(LinRow {
            source: pair.clone(),
            coeffs,
        })
    }

    /// `ε_{Q,s}[Ind_V F_ν] = Σ_{fV : ⟨Q, ŝ⟩ ≤ ^fV} ν(f⁻¹ ŝ f)`.
    pub fn species_of_induced(&self, pair: &MonomialPair, row: SpeciesIndex) -> Cyclo {
        let lift = self
            .group()
            .p_prime_part(self.species_lift(row.q_class, row.s), self.prime());
        self.species_of_induced_at(pair, row.q_class, lift)
    }

    /// The same value for an explicit lift `ŝ ∈ N(Q)` of a p'-element of `N(Q)/Q`.
    pub fn species_of_induced_at(&self, pair: &MonomialPair, q_class: usize, lift: usize) -> Cyclo {
        let g = &**self.group();
        let lat = self.lattice();
        let v = lat.get(pair.subgroup);
        let q = self.local(q_class).subgroup;
        let mut acc = Cyclo::zero(self.conductor());
        for f in v.left_transversal(g, &Subgroup::whole(g)) {
            let finv = g.inv(f);
            if !lat.leq(lat.conj(finv, q), pair.subgroup) {
                continue;
            }
            if let Some(val) = pair.value(g.conj(finv, lift)) {
                acc += &val;
            }
        }
        acc
    }

    /// `O_p(V) ≤ ^xP ≤ V` for some `x`.
    pub fn lin_support_ok(&self, pair: &MonomialPair, b: BasisIndex) -> bool {
        let g = &**self.group();
        let lat = self.lattice();
        let v = lat.get(pair.subgroup);
        let op = lat.index_of(&core_p(g, v, self.prime()));
        let p = self.local(b.p_class).subgroup;
        (0..g.order()).any(|x| {
            let xp = lat.conj(x, p);
            lat.leq(op, xp) && lat.leq(xp, pair.subgroup)
        })
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::permgroup::named;

    #[test]
    fn character_counts() {
        let g = named::symmetric(3).unwrap();
        let whole = Subgroup::whole(&g);
        assert_eq!(linear_characters(&g, &whole, 2).len(), 2);
        let c3 = named::cyclic(3).unwrap();
        assert_eq!(linear_characters(&c3, &Subgroup::whole(&c3), 1).len(), 1);
        assert_eq!(linear_characters(&c3, &Subgroup::trivial(&c3), 1).len(), 1);
        let v4 = named::klein4().unwrap();
        assert_eq!(linear_characters(&v4, &Subgroup::whole(&v4), 3).len(), 1);
    }

    #[test]
    fn s3_mod_3_pairs() {
        let ctx = TsContext::new(Arc::new(named::symmetric(3).unwrap()), 3, 0).unwrap();
        let pairs = monomial_pairs(&ctx);
        let orders: Vec<(usize, bool)> = pairs
            .iter()
            .map(|p| (ctx.lattice().get(p.subgroup).order(), p.is_trivial()))
            .collect();
        assert_eq!(
            orders,
            vec![
                (1, true),
                (2, true),
                (2, false),
                (3, true),
                (6, true),
                (6, false)
            ]
        );
    }

    #[test]
    fn c2_linearization() {
        let ctx = TsContext::new(Arc::new(named::cyclic(2).unwrap()), 2, 0).unwrap();
        let pairs = monomial_pairs(&ctx);
        assert_eq!(pairs.len(), 2);
        let top = ctx.lin_row(&pairs[1]).unwrap();
        assert_eq!(top.coeffs, vec![Cyclo::zero(1), Cyclo::one(1)]);
        let free = ctx.lin_row(&pairs[0]).unwrap();
        assert_eq!(free.coeffs, vec![Cyclo::one(1), Cyclo::zero(1)]);
        assert_eq!(
            ctx.species_of_induced(&pairs[0], ctx.species()[0]),
            Cyclo::from_int(1, 2)
        );
        assert_eq!(
            ctx.species_of_induced(&pairs[0], ctx.species()[1]),
            Cyclo::zero(1)
        );
    }
}
