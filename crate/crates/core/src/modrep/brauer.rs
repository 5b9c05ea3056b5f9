use std::cmp::Ordering;
use std::sync::Arc;

use super::chop::chop;
use super::ffield::FField;
use super::module::GModule;
use crate::error::{Error, Result};
use crate::exactfield::{Cyclo, CycloMatrix, Rat};
use crate::permgroup::Group;

/// Values of a Brauer character on a fixed list of p'-classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerCharacter {
    dim: usize,
    values: Vec<Cyclo>,
}

impl BrauerCharacter {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.dim == 1 && self.values.iter().all(|v| v.is_one())
    }

    /// Dimension, then trivial first, then values in descending coordinate order.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then(other.is_trivial().cmp(&self.is_trivial()))
            .then_with(|| {
                for (a, b) in self.values.iter().zip(&other.values) {
                    match b.cmp_coords(a) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}

/// Brauer character of `m` on the representatives of `classes` (all p'-classes).
///
/// The multiplicity of the eigenvalue `ω^e` of `ρ(s)` is the nullity of `ρ(s) - ω^e`;
/// the value is `Σ mult · ζ^e`.
pub fn brauer_character(m: &GModule, classes: &[usize]) -> Result<BrauerCharacter> {
    let f = m.field();
    let g = m.group();
    let cond = f.conductor();
    let values = classes
        .iter()
        .map(|&c| {
            let s = g.classes()[c].representative;
            let o = g.element_order(s) as u32;
            if cond % o != 0 {
                return Err(Error::InternalInconsistency(format!(
                    "element order {o} does not divide conductor {cond}"
                )));
            }
            let step = cond / o;
            let rho = m.matrix_of(s);
            let mut counts = vec![0i64; cond as usize];
            let mut total = 0;
            for j in 0..o {
                let e = j * step;
                let mult = rho.minus_scalar(f, f.omega_power(e)).nullity(f);
                counts[e as usize] += mult as i64;
                total += mult;
            }
            if total != m.dim() {
                return Err(Error::InternalInconsistency(format!(
                    "eigenvalue multiplicities sum to {total}, dimension is {}",
                    m.dim()
                )));
            }
            Ok(Cyclo::from_exponent_counts(cond, &counts))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BrauerCharacter {
        dim: m.dim(),
        values,
    })
}

/// Irreducible Brauer characters and projective indecomposable characters of a group.
#[derive(Clone, Debug)]
pub struct BrauerTable {
    group: Arc<Group>,
    field: Arc<FField>,
    classes: Vec<usize>,
    class_pos: Vec<Option<usize>>,
    inverse_class: Vec<usize>,
    irreducibles: Vec<BrauerCharacter>,
    simples: Vec<GModule>,
    /// `projectives[(s, j)] = Φ_j(s)`.
    projectives: CycloMatrix,
}

impl BrauerTable {
    /// Chops the regular module; projective characters come from the orthogonality
    /// `Σ_s Φ_i(s) φ_j(s⁻¹) / |C(s)| = δ_ij`.
    pub fn compute(group: Arc<Group>, field: Arc<FField>, seed: u64) -> Result<BrauerTable> {
        let p = field.characteristic();
        let m = field.conductor();
        let classes = group.pprime_classes(p);
        let mut class_pos = vec![None; group.classes().len()];
        for (i, &c) in classes.iter().enumerate() {
            class_pos[c] = Some(i);
        }
        let inverse_class = classes
            .iter()
            .map(|&c| {
                let s = group.classes()[c].representative;
                class_pos[group.class_of(group.inv(s))].expect("inverse of a p'-element")
            })
            .collect::<Vec<_>>();
        let regular = GModule::regular(group.clone(), field.clone());
        let factors = chop(&regular, seed)?;
        let mut irreducibles = Vec::new();
        let mut simples = Vec::new();
        for (s, _) in factors {
            irreducibles.push(brauer_character(&s, &classes)?);
            simples.push(s);
        }
        if irreducibles.len() != classes.len() {
            return Err(Error::InternalInconsistency(format!(
                "{} simple modules for {} p'-classes",
                irreducibles.len(),
                classes.len()
            )));
        }
        let k = classes.len();
        let orth = CycloMatrix::from_fn(m, k, k, |j, s| {
            let c = group.classes()[classes[s]].representative;
            let cent = group.centralizer_order(c) as i64;
            irreducibles[j].values[inverse_class[s]].scale(&Rat::new(1.into(), cent.into()))
        });
        let projectives = orth.inverse()?;
        Ok(BrauerTable {
            group,
            field,
            classes,
            class_pos,
            inverse_class,
            irreducibles,
            simples,
            projectives,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn field(&self) -> &Arc<FField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    /// Indices into [`Group::classes`] of the p'-classes, in table order.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn class_representative(&self, s: usize) -> usize {
        self.group.classes()[self.classes[s]].representative
    }

    /// Table position of the class of a p'-element, `None` for other elements.
    pub fn class_position(&self, x: usize) -> Option<usize> {
        self.class_pos[self.group.class_of(x)]
    }

    pub fn inverse_class(&self, s: usize) -> usize {
        self.inverse_class[s]
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn irreducibles(&self) -> &[BrauerCharacter] {
        &self.irreducibles
    }

    pub fn simple_module(&self, j: usize) -> &GModule {
        &self.simples[j]
    }

    /// `L`, rows indexed by classes and columns by irreducibles.
    pub fn projective_matrix(&self) -> &CycloMatrix {
        &self.projectives
    }

    /// `φ_j(x)` for a p'-element `x`.
    pub fn value(&self, j: usize, x: usize) -> Option<&Cyclo> {
        self.class_position(x)
            .map(|s| &self.irreducibles[j].values[s])
    }

    /// `Φ_j(x)` for a p'-element `x`.
    pub fn projective_value(&self, j: usize, x: usize) -> Option<&Cyclo> {
        self.class_position(x).map(|s| &self.projectives[(s, j)])
    }
}
