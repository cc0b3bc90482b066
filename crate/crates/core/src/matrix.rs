//! 14×14 matrices over GF(2^m): the adjoint representation's carrier.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::gf2m::{Fe, Gf2m};
use crate::linalg::FMatrix;

/// Dimension of the Lie algebra of type G2.
pub const DIM: usize = 14;
const LEN: usize = DIM * DIM;

/// A dense row-major 14×14 matrix over GF(2^m).
///
/// Equality, hashing and ordering are on the raw entries, which are canonical
/// field encodings, so two matrices compare equal exactly when they are equal
/// as matrices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    data: [u16; LEN],
}

/// Group elements of G2(GF(2^m)) are their adjoint matrices.
pub type GrpElem = Mat;

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat[")?;
        for i in 0..DIM {
            let row: Vec<String> = (0..DIM)
                .map(|j| format!("{:>2x}", self.data[i * DIM + j]))
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero() -> Self {
        Mat { data: [0; LEN] }
    }

    pub fn identity() -> Self {
        let mut m = Mat::zero();
        for i in 0..DIM {
            m.data[i * DIM + i] = 1;
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Fe) -> Self {
        let mut m = Mat::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                m.data[i * DIM + j] = f(i, j).0;
            }
        }
        m
    }

    pub fn diagonal(d: &[Fe; DIM]) -> Self {
        Mat::from_fn(|i, j| if i == j { d[i] } else { Fe::ZERO })
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        Fe(self.data[i * DIM + j])
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * DIM + j] = v.0;
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| i == j || self.data[i * DIM + j] == 0))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|&&x| x != 0).count()
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(rhs.data.iter()) {
            *o ^= r;
        }
        out
    }

    pub fn scale(&self, c: Fe, f: &Gf2m) -> Mat {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = f.mul(Fe(*x), c).0;
        }
        out
    }

    /// Row `i` of `self · rhs` accumulated into `row`.
    #[inline]
    fn mul_row(&self, rhs: &Mat, i: usize, f: &Gf2m, row: &mut [u16; DIM]) {
        let a_row = &self.data[i * DIM..(i + 1) * DIM];
        for (k, &a) in a_row.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let b_row = &rhs.data[k * DIM..(k + 1) * DIM];
            if a == 1 {
                for j in 0..DIM {
                    row[j] ^= b_row[j];
                }
                continue;
            }
            let la = f.log(Fe(a));
            for j in 0..DIM {
                let b = b_row[j];
                if b != 0 {
                    row[j] ^= f.exp(la + f.log(Fe(b))).0;
                }
            }
        }
    }

    /// Matrix product. Zero entries of `self` are skipped, which matters
    /// because unipotent and torus elements are sparse.
    pub fn mul(&self, rhs: &Mat, f: &Gf2m) -> Mat {
        let mut out = Mat::zero();
        for i in 0..DIM {
            let mut row = [0u16; DIM];
            self.mul_row(rhs, i, f, &mut row);
            out.data[i * DIM..(i + 1) * DIM].copy_from_slice(&row);
        }
        out
    }

    /// Whether `a·b == c·d`, comparing row by row and stopping at the first
    /// mismatch.
    pub fn products_equal(a: &Mat, b: &Mat, c: &Mat, d: &Mat, f: &Gf2m) -> bool {
        for i in 0..DIM {
            let mut left = [0u16; DIM];
            let mut right = [0u16; DIM];
            a.mul_row(b, i, f, &mut left);
            c.mul_row(d, i, f, &mut right);
            if left != right {
                return false;
            }
        }
        true
    }

    /// Whether `self` commutes with `other`.
    pub fn commutes_with(&self, other: &Mat, f: &Gf2m) -> bool {
        Mat::products_equal(self, other, other, self, f)
    }

    pub fn pow(&self, mut e: u64, f: &Gf2m) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            e >>= 1;
        }
        acc
    }

    /// Least `n >= 1` with `self^n = 1`, searching up to `limit`.
    pub fn order(&self, limit: u64, f: &Gf2m) -> Option<u64> {
        let mut x = self.clone();
        for n in 1..=limit {
            if x.is_identity() {
                return Some(n);
            }
            x = x.mul(self, f);
        }
        None
    }

    pub fn apply(&self, v: &[Fe; DIM], f: &Gf2m) -> [Fe; DIM] {
        let mut out = [Fe::ZERO; DIM];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, &x) in v.iter().enumerate() {
                *o += f.mul(self.get(i, j), x);
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> [Fe; DIM] {
        std::array::from_fn(|i| self.get(i, j))
    }

    pub fn to_fmatrix(&self) -> FMatrix {
        FMatrix::from_fn(DIM, DIM, |i, j| self.get(i, j))
    }

    pub fn inverse(&self, f: &Gf2m) -> Result<Mat, Error> {
        let inv = self.to_fmatrix().inverse(f)?;
        Ok(Mat::from_fn(|i, j| inv.get(i, j)))
    }

    /// `self · x · self^-1` given the inverse.
    pub fn conjugate(&self, x: &Mat, self_inv: &Mat, f: &Gf2m) -> Mat {
        self.mul(x, f).mul(self_inv, f)
    }

    pub fn rows_hex(&self) -> Vec<Vec<String>> {
        (0..DIM)
            .map(|i| (0..DIM).map(|j| self.get(i, j).to_hex()).collect())
            .collect()
    }

    /// Order-independent-friendly 64-bit digest (FNV-1a over the entries).
    pub fn digest(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        for &x in &self.data {
            for byte in x.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        }
        h
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(DIM))?;
        for row in self.rows_hex() {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// XOR of member digests: independent of enumeration order.
pub fn set_digest<'a>(elems: impl IntoIterator<Item = &'a Mat>) -> u64 {
    elems.into_iter().fold(0, |acc, m| acc ^ m.digest())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_mul(a: &Mat, b: &Mat, f: &Gf2m) -> Mat {
        Mat::from_fn(|i, j| {
            (0..DIM).fold(Fe::ZERO, |acc, k| {
                acc + f.mul_slow(a.get(i, k), b.get(k, j))
            })
        })
    }

    fn pseudo_random(seed: u64, f: &Gf2m, density: u64) -> Mat {
        let mut s = seed;
        Mat::from_fn(|_, _| {
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            if (s >> 33) % 100 < density {
                f.elem(s >> 40)
            } else {
                Fe::ZERO
            }
        })
    }

    #[test]
    fn product_matches_naive() {
        let f = Gf2m::new(4).unwrap();
        for seed in 0..20 {
            let a = pseudo_random(seed, &f, 30 + seed);
            let b = pseudo_random(seed + 100, &f, 60);
            let ab = a.mul(&b, &f);
            assert_eq!(ab, naive_mul(&a, &b, &f));
            assert!(Mat::products_equal(&a, &b, &ab, &Mat::identity(), &f));
            let c = pseudo_random(seed + 200, &f, 50);
            assert_eq!(
                Mat::products_equal(&a, &b, &c, &Mat::identity(), &f),
                ab == c
            );
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = Gf2m::new(3).unwrap();
        let mut a = Mat::identity();
        for i in 0..DIM - 1 {
            a.set(i, i + 1, Fe(3));
            a.set(i + 1, i, Fe(i as u16 % 2));
        }
        if let Ok(inv) = a.inverse(&f) {
            assert!(a.mul(&inv, &f).is_identity());
        }
        assert!(Mat::zero().inverse(&f).is_err());
    }

    #[test]
    fn serialization_is_row_major_hex() {
        let mut a = Mat::identity();
        a.set(0, 1, Fe(10));
        let v: serde_json::Value = serde_json::to_value(&a).unwrap();
        assert_eq!(v[0][1], "a");
        assert_eq!(v[0][0], "1");
        assert_eq!(v[1][0], "0");
    }
}
