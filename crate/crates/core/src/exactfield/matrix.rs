use std::fmt;
use std::ops::{Index, IndexMut};

use super::cyclo::Cyclo;
use crate::error::{Error, Result};

/// Dense matrix over `Q(ζ_m)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloMatrix {
    rows: usize,
    cols: usize,
    m: u32,
    data: Vec<Cyclo>,
}

impl CycloMatrix {
    pub fn zeros(m: u32, rows: usize, cols: usize) -> Self {
        CycloMatrix {
            rows,
            cols,
            m,
            data: vec![Cyclo::zero(m); rows * cols],
        }
    }

    pub fn identity(m: u32, n: usize) -> Self {
        let mut a = Self::zeros(m, n, n);
        for i in 0..n {
            a[(i, i)] = Cyclo::one(m);
        }
        a
    }

    pub fn from_rows(m: u32, rows: Vec<Vec<Cyclo>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        if rows.iter().flatten().any(|x| x.conductor() != m) {
            return Err(Error::ShapeMismatch("conductor mismatch".into()));
        }
        Ok(CycloMatrix {
            rows: r,
            cols: c,
            m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(
        m: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Cyclo,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CycloMatrix {
            rows,
            cols,
            m,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn row(&self, i: usize) -> &[Cyclo] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Cyclo> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.m, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(self.m, rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    pub fn mul(&self, rhs: &CycloMatrix) -> Result<CycloMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.m, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Cyclo]) -> Result<Vec<Cyclo>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Cyclo::zero(self.m);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Exact inverse by Gauss–Jordan elimination, pivoting on the first nonzero entry.
    pub fn inverse(&self) -> Result<CycloMatrix> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(self.m, n);
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::Singular)?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let pinv = a[(col, col)].inv()?;
            a.scale_row(col, &pinv);
            inv.scale_row(col, &pinv);
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                a.sub_row_multiple(r, col, &f);
                inv.sub_row_multiple(r, col, &f);
            }
        }
        Ok(inv)
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(piv, rank);
            let pinv = a[(rank, col)].inv().expect("nonzero pivot");
            a.scale_row(rank, &pinv);
            for r in 0..self.rows {
                if r != rank && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    a.sub_row_multiple(r, rank, &f);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Cyclo) {
        for j in 0..self.cols {
            let x = &self[(r, j)];
            if !x.is_zero() {
                self[(r, j)] = x * s;
            }
        }
    }

    /// `row[r] -= f · row[src]`
    fn sub_row_multiple(&mut self, r: usize, src: usize, f: &Cyclo) {
        for j in 0..self.cols {
            let x = &self[(src, j)];
            if !x.is_zero() {
                let t = x * f;
                self[(r, j)] -= &t;
            }
        }
    }
}

impl Index<(usize, usize)> for CycloMatrix {
    type Output = Cyclo;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclo {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CycloMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclo {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycloMatrix[{}] {}x{}", self.m, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn int_matrix(m: u32, rows: &[&[i64]]) -> CycloMatrix {
        CycloMatrix::from_rows(
            m,
            rows.iter()
                .map(|r| r.iter().map(|&x| Cyclo::from_int(m, x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_inverse() {
        let i = CycloMatrix::identity(3, 4);
        assert_eq!(i.inverse().unwrap(), i);
    }

    #[test]
    fn two_by_two_inverses() {
        // cofactor inverse of [[3,3],[1,-1]] is (1/-6)·[[-1,-3],[-1,3]]
        let l = int_matrix(2, &[&[3, 3], &[1, -1]]);
        let linv = l.inverse().unwrap();
        let expect = CycloMatrix::from_rows(
            2,
            vec![
                vec![Cyclo::from_rat(2, rat(1, 6)), Cyclo::from_rat(2, rat(1, 2))],
                vec![
                    Cyclo::from_rat(2, rat(1, 6)),
                    Cyclo::from_rat(2, rat(-1, 2)),
                ],
            ],
        )
        .unwrap();
        assert_eq!(linv, expect);
        for p in [2i64, 3, 5] {
            let n = int_matrix(1, &[&[p, 1], &[0, 1]]);
            let ninv = CycloMatrix::from_rows(
                1,
                vec![
                    vec![
                        Cyclo::from_rat(1, rat(1, p)),
                        Cyclo::from_rat(1, rat(-1, p)),
                    ],
                    vec![Cyclo::zero(1), Cyclo::one(1)],
                ],
            )
            .unwrap();
            assert_eq!(n.inverse().unwrap(), ninv);
            assert!(n.mul(&ninv).unwrap().is_identity());
        }
    }

    #[test]
    fn singular_and_shape_errors() {
        let s = int_matrix(1, &[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse().unwrap_err(), Error::Singular);
        assert_eq!(s.rank(), 1);
        let r = int_matrix(1, &[&[1, 2, 3]]);
        assert!(matches!(r.inverse(), Err(Error::ShapeMismatch(_))));
        assert!(matches!(r.mul(&r), Err(Error::ShapeMismatch(_))));
        let i3 = CycloMatrix::identity(1, 3);
        assert_eq!(r.mul(&i3).unwrap(), r);
    }
}
