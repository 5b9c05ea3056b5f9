//! Dense matrices and subspaces over a finite field.

use super::ffield::{FField, Fq};
use crate::error::{Error, Result};

/// Column-vector convention: a matrix acts by `v ↦ A v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FMat {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl FMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut a = Self::zeros(n, n);
        for i in 0..n {
            a.set(i, i, 1);
        }
        a
    }

    pub fn from_rows(rows: Vec<Vec<Fq>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        FMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, cols: &[Vec<Fq>]) -> Self {
        let mut a = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                a.set(i, j, x);
            }
        }
        a
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Fq) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Fq] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> FMat {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, f: &FField, rhs: &FMat) -> FMat {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b != 0 {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = f.add(out.data[idx], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, f: &FField, v: &[Fq]) -> Vec<Fq> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, f: &FField, v: &[Fq]) -> Vec<Fq> {
        let mut out = vec![0; self.cols];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(x, self.get(i, j)));
            }
        }
        out
    }

    pub fn add_scaled(&self, f: &FField, c: Fq, rhs: &FMat) -> FMat {
        FMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                .collect(),
        }
    }

    /// `A - λ I`.
    pub fn minus_scalar(&self, f: &FField, lambda: Fq) -> FMat {
        let mut a = self.clone();
        let nl = f.neg(lambda);
        for i in 0..self.rows.min(self.cols) {
            a.set(i, i, f.add(a.get(i, i), nl));
        }
        a
    }

    pub fn scaled(&self, f: &FField, c: Fq) -> FMat {
        FMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// Row-reduced echelon form with pivot columns.
    fn rref(&self, f: &FField) -> (FMat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| a.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            let inv = f.inv(a.get(r, c)).expect("nonzero pivot");
            for j in 0..a.cols {
                let x = a.get(r, j);
                a.set(r, j, f.mul(x, inv));
            }
            for i in 0..a.rows {
                let factor = a.get(i, c);
                if i != r && factor != 0 {
                    let nf = f.neg(factor);
                    for j in 0..a.cols {
                        let x = f.add(a.get(i, j), f.mul(nf, a.get(r, j)));
                        a.set(i, j, x);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self, f: &FField) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self, f: &FField) -> Vec<Vec<Fq>> {
        let (r, pivots) = self.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![0; self.cols];
                x[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(r.get(i, free));
                }
                x
            })
            .collect()
    }

    pub fn nullity(&self, f: &FField) -> usize {
        self.cols - self.rank(f)
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(mats: &[FMat], cols: usize) -> FMat {
        let rows = mats.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in mats {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
        }
        FMat { rows, cols, data }
    }
}

/// A subspace of `F^n` held in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    rows: Vec<Vec<Fq>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(n: usize) -> Self {
        Echelon {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Vec<Fq>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, f: &FField, v: &[Fq]) -> Vec<Fq> {
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(nc, r));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, f: &FField, v: &[Fq]) -> bool {
        self.reduce(f, v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, f: &FField, v: &[Fq]) -> bool {
        let mut v = self.reduce(f, v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[pc]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &r) in row.iter_mut().zip(&v) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(nc, r));
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    /// Coordinates of a vector of this subspace on the echelon basis.
    pub fn coords(&self, v: &[Fq]) -> Vec<Fq> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    /// `{x : w·x = 0 for all w in self}`.
    pub fn annihilator(&self, f: &FField) -> Echelon {
        let a = FMat::from_rows(self.rows.clone());
        let a = if self.rows.is_empty() {
            FMat::zeros(0, self.n)
        } else {
            a
        };
        let mut out = Echelon::new(self.n);
        for v in a.nullspace(f) {
            out.insert(f, &v);
        }
        out
    }
}

/// Expresses vectors of a span in terms of a fixed independent list.
pub struct Coordinates {
    /// RREF of the vectors (as rows) and the transform producing it.
    pivots: Vec<usize>,
    transform: Vec<Vec<Fq>>,
}

impl Coordinates {
    pub fn new(f: &FField, vectors: &[Vec<Fq>], n: usize) -> Result<Self> {
        let d = vectors.len();
        // augmented [V | I]
        let rows: Vec<Vec<Fq>> = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut r = v.clone();
                r.extend((0..d).map(|j| if i == j { 1 } else { 0 }));
                r
            })
            .collect();
        let aug = if d == 0 {
            FMat::zeros(0, n)
        } else {
            FMat::from_rows(rows)
        };
        let (r, pivots) = aug.rref(f);
        if pivots.len() != d || pivots.iter().any(|&p| p >= n) {
            return Err(Error::InternalInconsistency(
                "coordinate basis is not independent".into(),
            ));
        }
        let transform = (0..d).map(|i| r.row(i)[n..].to_vec()).collect();
        Ok(Coordinates { pivots, transform })
    }

    pub fn coords(&self, f: &FField, v: &[Fq]) -> Vec<Fq> {
        let d = self.transform.len();
        let mut out = vec![0; d];
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            for (o, &u) in out.iter_mut().zip(&self.transform[i]) {
                *o = f.add(*o, f.mul(c, u));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_and_rank() {
        let f = FField::new(3, 2).unwrap();
        let a = FMat::from_rows(vec![vec![1, 2, 0], vec![2, 1, 0]]);
        // second row = 2·first over F_3
        assert_eq!(a.rank(&f), 1);
        let ns = a.nullspace(&f);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(a.apply(&f, &v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn echelon_and_coordinates() {
        let f = FField::new(2, 3).unwrap();
        let vs = vec![vec![1, 2, 0, 3], vec![0, 1, 1, 0], vec![3, 3, 3, 3]];
        let mut e = Echelon::new(4);
        for v in &vs {
            e.insert(&f, v);
        }
        let coords = Coordinates::new(&f, &vs[..2], 4).unwrap();
        // w = 2·v0 + 3·v1
        let w: Vec<Fq> = (0..4)
            .map(|i| f.add(f.mul(2, vs[0][i]), f.mul(3, vs[1][i])))
            .collect();
        assert!(e.contains(&f, &w));
        assert_eq!(coords.coords(&f, &w), vec![2, 3]);
        let ann = e.annihilator(&f);
        assert_eq!(ann.dim() + e.dim(), 4);
    }
}
