use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::brauer::{brauer_character, BrauerCharacter};
use super::ffield::{FField, Fq};
use super::fmat::{Echelon, FMat};
use super::module::GModule;
use crate::error::{Error, Result};

/// Random algebra elements tried per module before giving up.
pub const CHOP_BUDGET: usize = 400;

/// Smallest subspace containing `seeds` and closed under `mats`.
pub fn spin(f: &FField, n: usize, seeds: &[Vec<Fq>], mats: &[FMat]) -> Echelon {
    let mut e = Echelon::new(n);
    let mut basis: Vec<Vec<Fq>> = Vec::new();
    for v in seeds {
        if e.insert(f, v) {
            basis.push(v.clone());
        }
    }
    let mut i = 0;
    while i < basis.len() && e.dim() < n {
        for a in mats {
            let w = a.apply(f, &basis[i]);
            if e.insert(f, &w) {
                basis.push(w);
            }
        }
        i += 1;
    }
    e
}

/// The submodule spanned by `sub` and the quotient by it.
pub fn split(m: &GModule, sub: &Echelon) -> (GModule, GModule) {
    let f = m.field();
    let d = sub.dim();
    let n = m.dim();
    let pivots = sub.pivots();
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut sub_gens = Vec::new();
    let mut quo_gens = Vec::new();
    for a in m.generator_matrices() {
        let mut s = FMat::zeros(d, d);
        for (i, b) in sub.basis().iter().enumerate() {
            let c = sub.coords(&a.apply(f, b));
            for (r, &x) in c.iter().enumerate() {
                s.set(r, i, x);
            }
        }
        sub_gens.push(s);
        let mut q = FMat::zeros(free.len(), free.len());
        for (i, &j) in free.iter().enumerate() {
            let col: Vec<Fq> = (0..n).map(|r| a.get(r, j)).collect();
            let res = sub.reduce(f, &col);
            for (r, &k) in free.iter().enumerate() {
                q.set(r, i, res[k]);
            }
        }
        quo_gens.push(q);
    }
    let g = m.group().clone();
    (
        GModule::new(g.clone(), f.clone(), d, sub_gens).expect("shapes agree"),
        GModule::new(g, f.clone(), free.len(), quo_gens).expect("shapes agree"),
    )
}

fn random_vector(f: &FField, basis: &[Vec<Fq>], rng: &mut ChaCha8Rng) -> Vec<Fq> {
    let n = basis[0].len();
    loop {
        let mut v = vec![0; n];
        for b in basis {
            let c = rng.gen_range(0..f.size());
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// A proper nonzero submodule, or `None` once irreducibility is certified.
pub fn find_submodule(m: &GModule, rng: &mut ChaCha8Rng) -> Result<Option<Echelon>> {
    let n = m.dim();
    if n <= 1 {
        return Ok(None);
    }
    let f = m.field().as_ref();
    let gens = m.generator_matrices();
    if gens.is_empty() {
        let mut e = Echelon::new(n);
        let mut v = vec![0; n];
        v[0] = 1;
        e.insert(f, &v);
        return Ok(Some(e));
    }
    let transposed: Vec<FMat> = gens.iter().map(|a| a.transpose()).collect();
    let all = m.all_matrices();
    for _ in 0..CHOP_BUDGET {
        let terms = rng.gen_range(2..=4);
        let mut theta = FMat::zeros(n, n);
        for _ in 0..terms {
            let g = rng.gen_range(0..all.len());
            let c = rng.gen_range(1..f.size());
            theta = theta.add_scaled(f, c, &all[g]);
        }
        for lambda in f.elements() {
            let shifted = theta.minus_scalar(f, lambda);
            let kernel = shifted.nullspace(f);
            if kernel.is_empty() {
                continue;
            }
            let v = random_vector(f, &kernel, rng);
            let s = spin(f, n, &[v], gens);
            if s.dim() < n {
                return Ok(Some(s));
            }
            if kernel.len() == 1 {
                let w = shifted.transpose().nullspace(f);
                let t = spin(f, n, &w[..1], &transposed);
                if t.dim() < n {
                    return Ok(Some(t.annihilator(f)));
                }
                return Ok(None);
            }
        }
    }
    Err(Error::ChopBudgetExceeded {
        attempts: CHOP_BUDGET,
    })
}

/// Composition factors with multiplicities, grouped by Brauer character and sorted
/// by dimension with the trivial module first.
pub fn chop(m: &GModule, seed: u64) -> Result<Vec<(GModule, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = m.field().characteristic();
    let classes = m.group().pprime_classes(p);
    let mut stack = vec![m.clone()];
    let mut factors: Vec<(GModule, BrauerCharacter, usize)> = Vec::new();
    while let Some(x) = stack.pop() {
        if x.dim() == 0 {
            continue;
        }
        match find_submodule(&x, &mut rng)? {
            Some(s) => {
                let (a, b) = split(&x, &s);
                stack.push(b);
                stack.push(a);
            }
            None => {
                let chi = brauer_character(&x, &classes)?;
                match factors.iter_mut().find(|(_, c, _)| *c == chi) {
                    Some(entry) => entry.2 += 1,
                    None => factors.push((x, chi, 1)),
                }
            }
        }
    }
    factors.sort_by(|a, b| a.1.canonical_cmp(&b.1));
    Ok(factors.into_iter().map(|(x, _, k)| (x, k)).collect())
}
