//! Serializable artifacts. Exact values travel as `{m, coords}` with every rational
//! coordinate written as a string.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::exactfield::{Cyclo, CycloMatrix};
use crate::monomial::{LinRow, MonomialPair};
use crate::permgroup::Group;
use crate::tsring::{IdempotentExpansion, SpeciesTable, TsContext};

/// Bumped whenever the meaning of a cached artifact changes.
pub const ARTIFACT_VERSION: u32 = 1;

/// Cache key: SHA-256 over the group's sorted element list, `p`, the seed, the
/// artifact version and a free-form kind string.
pub fn cache_key(group: &Group, p: u32, seed: u64, kind: &str) -> String {
    let mut h = Sha256::new();
    h.update(group.content_hash().as_bytes());
    h.update(p.to_le_bytes());
    h.update(seed.to_le_bytes());
    h.update(ARTIFACT_VERSION.to_le_bytes());
    h.update(kind.as_bytes());
    hex::encode(h.finalize())
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    m: u32,
    coords: Vec<String>,
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr {
            m: self.conductor(),
            coords: self.coord_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Cyclo, D::Error> {
        let r = CycloRepr::deserialize(d)?;
        Cyclo::from_coord_strings(r.m, &r.coords).map_err(D::Error::custom)
    }
}

/// Irreducible and projective Brauer characters of one group, indexed `[φ][class]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerTableArtifact {
    /// The p-subgroup `P` whose normalizer quotient `N_G(P)/P` the table describes.
    pub subgroup: String,
    pub order: usize,
    pub group_hash: String,
    pub p: u32,
    pub m: u32,
    pub seed: u64,
    /// Class representatives as words in the generators, `g0*g1`, `1` for the identity.
    pub classes: Vec<String>,
    /// The same representatives in cycle notation.
    pub class_labels: Vec<String>,
    pub centralizer_orders: Vec<usize>,
    pub dims: Vec<usize>,
    pub irreducibles: Vec<Vec<Cyclo>>,
    pub projectives: Vec<Vec<Cyclo>>,
}

impl BrauerTableArtifact {
    /// The table of `N_G(P)/P` for the p-subgroup class `i`; classes are labelled by
    /// words in the quotient generators and by lifts to `G` in cycle notation.
    pub fn new(ctx: &TsContext, i: usize) -> BrauerTableArtifact {
        let local = ctx.local(i);
        let table = &local.table;
        let g = table.group();
        let reps: Vec<usize> = (0..table.classes().len())
            .map(|s| table.class_representative(s))
            .collect();
        let proj = table.projective_matrix();
        BrauerTableArtifact {
            subgroup: ctx.subgroup_label(i),
            order: g.order(),
            group_hash: g.content_hash(),
            p: ctx.prime(),
            m: table.conductor(),
            seed: ctx.seed(),
            classes: reps.iter().map(|&x| g.word_string(x)).collect(),
            class_labels: reps
                .iter()
                .map(|&x| local.quotient.element_label(ctx.group(), x))
                .collect(),
            centralizer_orders: reps.iter().map(|&x| g.centralizer_order(x)).collect(),
            dims: table.irreducibles().iter().map(|c| c.dim()).collect(),
            irreducibles: table
                .irreducibles()
                .iter()
                .map(|c| c.values().to_vec())
                .collect(),
            projectives: (0..table.len()).map(|j| proj.column(j)).collect(),
        }
    }
}

/// An exact matrix with row and column labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledMatrix {
    pub kind: String,
    pub group_hash: String,
    pub p: u32,
    pub m: u32,
    pub seed: u64,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<Cyclo>>,
}

impl LabeledMatrix {
    fn from_rows(
        ctx: &TsContext,
        kind: &str,
        row_labels: Vec<String>,
        entries: Vec<Vec<Cyclo>>,
    ) -> LabeledMatrix {
        LabeledMatrix {
            kind: kind.to_string(),
            group_hash: ctx.group().content_hash(),
            p: ctx.prime(),
            m: ctx.conductor(),
            seed: ctx.seed(),
            row_labels,
            col_labels: ctx.basis().iter().map(|&b| ctx.basis_label(b)).collect(),
            entries,
        }
    }

    /// Rows `(Q, [s])`, columns `(P, φ)`.
    pub fn species_table(ctx: &TsContext, table: &SpeciesTable) -> LabeledMatrix {
        let rows = table.rows.iter().map(|&s| ctx.species_label(s)).collect();
        LabeledMatrix::from_rows(ctx, "species-table", rows, to_rows(&table.n))
    }

    /// One row per primitive idempotent, columns the canonical basis.
    pub fn idempotents(ctx: &TsContext, exps: &[IdempotentExpansion]) -> LabeledMatrix {
        let rows = exps.iter().map(|e| ctx.species_label(e.target)).collect();
        let entries = exps.iter().map(|e| e.coeffs.clone()).collect();
        LabeledMatrix::from_rows(ctx, "idempotents", rows, entries)
    }

    /// One row per monomial pair `(V, ν)`.
    pub fn linmap(ctx: &TsContext, rows: &[LinRow]) -> LabeledMatrix {
        let labels = rows.iter().map(|r| pair_label(ctx, &r.source)).collect();
        let entries = rows.iter().map(|r| r.coeffs.clone()).collect();
        LabeledMatrix::from_rows(ctx, "linmap", labels, entries)
    }

    pub fn to_matrix(&self) -> crate::Result<CycloMatrix> {
        CycloMatrix::from_rows(self.m, self.entries.clone())
    }
}

fn to_rows(n: &CycloMatrix) -> Vec<Vec<Cyclo>> {
    (0..n.rows()).map(|i| n.row(i).to_vec()).collect()
}

/// `V` by its generators and `ν` by the exponents of `z` on them.
pub fn pair_label(ctx: &TsContext, pair: &MonomialPair) -> String {
    let v = ctx.lattice().get(pair.subgroup);
    let nu: Vec<String> = pair
        .generator_exponents(v)
        .iter()
        .map(|e| match e {
            0 => "1".to_string(),
            1 => "z".to_string(),
            e => format!("z^{e}"),
        })
        .collect();
    format!("{} nu=[{}]", v.label(ctx.group()), nu.join(","))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monomial::monomial_pairs;
    use crate::permgroup::named;

    #[test]
    fn cache_keys_separate_inputs() {
        let g = named::symmetric(3).unwrap();
        let k = cache_key(&g, 2, 0, "species-table");
        assert_eq!(k.len(), 64);
        assert_eq!(
            k,
            cache_key(&named::dihedral(6).unwrap(), 2, 0, "species-table")
        );
        assert_ne!(k, cache_key(&g, 3, 0, "species-table"));
        assert_ne!(k, cache_key(&g, 2, 1, "species-table"));
        assert_ne!(k, cache_key(&g, 2, 0, "idempotents"));
    }

    #[test]
    fn cyclo_round_trip() {
        let x = &Cyclo::zeta_power(3, 1) + &Cyclo::from_rat(3, crate::exactfield::rat(-2, 7));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"m":3,"coords":["-2/7","1"]}"#);
        assert_eq!(serde_json::from_str::<Cyclo>(&s).unwrap(), x);
        assert!(serde_json::from_str::<Cyclo>(r#"{"m":3,"coords":["x","1"]}"#).is_err());
    }

    #[test]
    fn artifacts_round_trip() {
        let ctx = TsContext::new(Arc::new(named::symmetric(3).unwrap()), 2, 0).unwrap();
        let bt = BrauerTableArtifact::new(&ctx, 0);
        assert_eq!(bt.dims, vec![1, 2]);
        assert_eq!(bt.classes[0], "1");
        let back: BrauerTableArtifact =
            serde_json::from_str(&serde_json::to_string(&bt).unwrap()).unwrap();
        assert_eq!(back, bt);
        let st = LabeledMatrix::species_table(&ctx, &ctx.matrix_n().unwrap());
        let back: LabeledMatrix =
            serde_json::from_str(&serde_json::to_string(&st).unwrap()).unwrap();
        assert_eq!(back, st);
        assert_eq!(back.to_matrix().unwrap(), ctx.matrix_n().unwrap().n);
        let rows: Vec<LinRow> = monomial_pairs(&ctx)
            .iter()
            .map(|p| ctx.lin_row(p).unwrap())
            .collect();
        let lin = LabeledMatrix::linmap(&ctx, &rows);
        assert_eq!(lin.row_labels.len(), rows.len());
        assert!(lin.row_labels.iter().any(|l| l.contains("nu=[z]")));
    }
}
