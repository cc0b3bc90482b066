//! Dense Gaussian elimination over GF(2^m).

use crate::error::Error;
use crate::gf2m::{Fe, Gf2m};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl FMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FMatrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        FMatrix::from_fn(n, n, |i, j| if i == j { Fe::ONE } else { Fe::ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fe) -> Self {
        let mut m = FMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Fe>]) -> Self {
        FMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.rows, other.rows);
        FMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    pub fn mul(&self, rhs: &FMatrix, f: &Gf2m) -> FMatrix {
        assert_eq!(self.cols, rhs.rows);
        FMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Fe::ZERO, |acc, k| {
                acc + f.mul(self.get(i, k), rhs.get(k, j))
            })
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, f: &Gf2m) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = f.inv(self.get(r, c)).expect("pivot is non-zero");
            for j in 0..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = self.get(i, j) + f.mul(factor, self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Gf2m) -> usize {
        self.clone().rref(f).len()
    }

    /// A basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self, f: &Gf2m) -> Vec<Vec<Fe>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Fe::ZERO; self.cols];
                v[fc] = Fe::ONE;
                for (row, &pc) in pivots.iter().enumerate() {
                    // char 2: -x = x
                    v[pc] = m.get(row, fc);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self, f: &Gf2m) -> Result<FMatrix, Error> {
        if self.rows != self.cols {
            return Err(Error::Singular);
        }
        let n = self.rows;
        let mut aug = self.hstack(&FMatrix::identity(n));
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(FMatrix::from_fn(n, n, |i, j| aug.get(i, n + j)))
    }

    pub fn apply(&self, v: &[Fe], f: &Gf2m) -> Vec<Fe> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Fe::ZERO, |acc, j| acc + f.mul(self.get(i, j), v[j])))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = Gf2m::new(3).unwrap();
        let a = FMatrix::from_fn(4, 6, |i, j| f.elem(((i * 7 + j * 3) % 8) as u64));
        let ker = a.kernel(&f);
        assert_eq!(ker.len() + a.rank(&f), 6);
        for v in &ker {
            assert!(a.apply(v, &f).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_of_known_matrices() {
        let f = Gf2m::new(2).unwrap();
        assert_eq!(FMatrix::identity(5).rank(&f), 5);
        assert_eq!(FMatrix::zeros(3, 4).rank(&f), 0);
        // rows r, x·r, r + x·r are dependent
        let x = Fe(2);
        let r = [Fe(1), Fe(3), Fe(0)];
        let m = FMatrix::from_fn(3, 3, |i, j| match i {
            0 => r[j],
            1 => f.mul(x, r[j]),
            _ => r[j] + f.mul(x, r[j]),
        });
        assert_eq!(m.rank(&f), 1);
    }

    #[test]
    fn inverse_checks() {
        let f = Gf2m::new(4).unwrap();
        let a = FMatrix::from_fn(3, 3, |i, j| {
            if i <= j {
                f.elem((i + j + 1) as u64)
            } else {
                Fe::ZERO
            }
        });
        let inv = a.inverse(&f).unwrap();
        assert_eq!(a.mul(&inv, &f), FMatrix::identity(3));
        assert_eq!(FMatrix::zeros(2, 2).inverse(&f), Err(Error::Singular));
    }
}
