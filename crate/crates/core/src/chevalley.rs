//! Integer Chevalley basis of the Lie algebra of type G2.
//!
//! Basis order: `e_δ` for the twelve roots in canonical order, then `h_α`,
//! `h_β`. Structure constants `N[δ][ε]` (with `[e_δ, e_ε] = N[δ][ε] e_{δ+ε}`)
//! are fixed on the extraspecial pairs and propagated with the standard
//! identities
//!
//! * `N[ε][δ] = -N[δ][ε]`
//! * `N[-δ][-ε] = -N[δ][ε]`
//! * `N[r][s]/(t,t) = N[s][t]/(r,r) = N[t][r]/(s,s)` whenever `r+s+t = 0`.
//!
//! The one remaining positive special pair (two short roots summing to ω)
//! gets whichever sign makes the Jacobi identity hold.

#![allow(clippy::needless_range_loop)]

use serde::Serialize;

use crate::error::Error;
use crate::gf2m::{Fe, Gf2m};
use crate::matrix::{Mat, DIM};
use crate::roots::{
    self, all_roots, inner, pairing, positive_roots, root_string, Root, ALPHA, BETA, NUM_ROOTS,
};

pub const H_ALPHA: usize = 12;
pub const H_BETA: usize = 13;

pub type IMat = [[i64; DIM]; DIM];
pub type IVec = [i64; DIM];

/// Highest divided power that can be non-zero.
pub const MAX_POWER: usize = 3;

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    roots: [Root; NUM_ROOTS],
    structconsts: [[i64; NUM_ROOTS]; NUM_ROOTS],
    admats: Vec<IMat>,
    extraspecial_signs: [i64; 4],
}

/// One row of the structure-constant dump.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StructConst {
    pub delta: Root,
    pub eps: Root,
    #[serde(rename = "N")]
    pub n: i64,
}

/// `M_n = ad(e_δ)^n / n!` for `n = 0..=4`.
#[derive(Clone, Debug)]
pub struct DividedPowerFamily {
    pub root: Root,
    pub mats: Vec<IMat>,
}

impl DividedPowerFamily {
    pub fn get(&self, n: usize) -> IMat {
        self.mats.get(n).copied().unwrap_or([[0; DIM]; DIM])
    }
}

pub fn imat_zero() -> IMat {
    [[0; DIM]; DIM]
}

pub fn imat_identity() -> IMat {
    let mut m = imat_zero();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn imat_mul(a: &IMat, b: &IMat) -> IMat {
    let mut out = imat_zero();
    for i in 0..DIM {
        for k in 0..DIM {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..DIM {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn imat_apply(a: &IMat, v: &IVec) -> IVec {
    std::array::from_fn(|i| (0..DIM).map(|j| a[i][j] * v[j]).sum())
}

fn is_zero_imat(a: &IMat) -> bool {
    a.iter().all(|r| r.iter().all(|&x| x == 0))
}

/// The extraspecial pair `(r, ξ - r)` for each non-simple positive root ξ,
/// in canonical order of ξ. `r` is the first positive root with `ξ - r`
/// positive.
pub fn extraspecial_pairs() -> Vec<(Root, Root)> {
    let pos = positive_roots();
    pos.iter()
        .filter(|xi| xi.height() > 1)
        .map(|&xi| {
            let r = pos
                .iter()
                .copied()
                .find(|&r| {
                    let s = xi.plus(r.neg());
                    s.is_root() && s.is_positive()
                })
                .expect("non-simple roots decompose");
            (r, xi.plus(r.neg()))
        })
        .collect()
}

type Table = [[Option<i64>; NUM_ROOTS]; NUM_ROOTS];

fn set_entry(
    table: &mut Table,
    i: usize,
    j: usize,
    v: i64,
    changed: &mut bool,
) -> Result<(), Error> {
    match table[i][j] {
        Some(old) if old != v => Err(Error::Inconsistent(format!(
            "N[{}][{}] forced to both {old} and {v}",
            all_roots()[i],
            all_roots()[j]
        ))),
        Some(_) => Ok(()),
        None => {
            table[i][j] = Some(v);
            *changed = true;
            Ok(())
        }
    }
}

fn propagate(mut table: Table) -> Result<[[i64; NUM_ROOTS]; NUM_ROOTS], Error> {
    let roots = all_roots();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..NUM_ROOTS {
            for j in 0..NUM_ROOTS {
                let Some(v) = table[i][j] else { continue };
                let (r, s) = (roots[i], roots[j]);
                set_entry(&mut table, j, i, -v, &mut changed)?;
                set_entry(
                    &mut table,
                    r.neg().index(),
                    s.neg().index(),
                    -v,
                    &mut changed,
                )?;
                let t = r.plus(s).neg();
                let (rr, ss, tt) = (inner(r, r) as i64, inner(s, s) as i64, inner(t, t) as i64);
                let k = t.index();
                for (row, col, num) in [(j, k, v * rr), (k, i, v * ss)] {
                    if num % tt != 0 {
                        return Err(Error::Inconsistent(format!(
                            "non-integral N from ({r}, {s})"
                        )));
                    }
                    set_entry(&mut table, row, col, num / tt, &mut changed)?;
                }
            }
        }
    }
    let mut out = [[0i64; NUM_ROOTS]; NUM_ROOTS];
    for i in 0..NUM_ROOTS {
        for j in 0..NUM_ROOTS {
            let (r, s) = (roots[i], roots[j]);
            let applicable = roots::sum_root(r, s).is_some();
            match (applicable, table[i][j]) {
                (true, Some(v)) => {
                    let (p, _) = root_string(r, s)?;
                    if v.abs() != (p + 1) as i64 {
                        return Err(Error::Inconsistent(format!(
                            "|N[{r}][{s}]| = {v}, expected {}",
                            p + 1
                        )));
                    }
                    out[i][j] = v;
                }
                (true, None) => {
                    return Err(Error::Inconsistent(format!("N[{r}][{s}] undetermined")))
                }
                (false, _) => {}
            }
        }
    }
    Ok(out)
}

impl ChevalleyBasis {
    /// The basis with positive signs on all extraspecial pairs.
    pub fn build() -> Result<Self, Error> {
        Self::with_extraspecial_signs([1; 4])
    }

    /// Build with the given sign (±1) on each extraspecial pair, in the order
    /// of [`extraspecial_pairs`].
    pub fn with_extraspecial_signs(signs: [i64; 4]) -> Result<Self, Error> {
        let roots = all_roots();
        let extra = extraspecial_pairs();
        let mut seed: Table = [[None; NUM_ROOTS]; NUM_ROOTS];
        for (&(r, s), &sign) in extra.iter().zip(signs.iter()) {
            let (p, _) = root_string(r, s)?;
            seed[r.index()][s.index()] = Some(sign.signum() * (p + 1) as i64);
        }
        // remaining positive special pairs, r before s in canonical order
        let pos = positive_roots();
        let mut free = Vec::new();
        for (a, &r) in pos.iter().enumerate() {
            for &s in &pos[a + 1..] {
                if roots::sum_root(r, s).is_some() && !extra.contains(&(r, s)) {
                    free.push((r, s));
                }
            }
        }
        let mut last_err = None;
        for choice in 0..(1u32 << free.len()) {
            let mut table = seed;
            for (b, &(r, s)) in free.iter().enumerate() {
                let (p, _) = root_string(r, s)?;
                let sign = if (choice >> b) & 1 == 0 { 1 } else { -1 };
                table[r.index()][s.index()] = Some(sign * (p + 1) as i64);
            }
            let structconsts = match propagate(table) {
                Ok(t) => t,
                Err(e) => {
                    last_err = Some(e);
                    continue;
                }
            };
            let basis = ChevalleyBasis {
                roots,
                structconsts,
                admats: Vec::new(),
                extraspecial_signs: signs,
            }
            .with_admats();
            match basis.check_jacobi() {
                Ok(()) => return Ok(basis),
                Err(e) => last_err = Some(e),
            }
        }
        Err(last_err.unwrap_or_else(|| Error::Inconsistent("no sign choice".into())))
    }

    fn with_admats(mut self) -> Self {
        self.admats = (0..DIM)
            .map(|x| {
                let mut m = imat_zero();
                for y in 0..DIM {
                    let col = self.bracket_basis(x, y);
                    for (i, &c) in col.iter().enumerate() {
                        m[i][y] = c;
                    }
                }
                m
            })
            .collect();
        self
    }

    pub fn roots(&self) -> &[Root; NUM_ROOTS] {
        &self.roots
    }

    pub fn extraspecial_signs(&self) -> [i64; 4] {
        self.extraspecial_signs
    }

    /// `N[δ][ε]`, zero when `δ + ε` is not a root.
    pub fn n(&self, delta: Root, eps: Root) -> i64 {
        self.structconsts[delta.index()][eps.index()]
    }

    /// Index of `e_δ` in the basis.
    pub fn e(&self, delta: Root) -> usize {
        delta.index()
    }

    /// `h_δ` (the image of `[e_δ, e_-δ]`) in the `h_α, h_β` coordinates.
    pub fn h_of(&self, delta: Root) -> IVec {
        let (a, b) = delta.coroot();
        let mut v = [0; DIM];
        v[H_ALPHA] = a as i64;
        v[H_BETA] = b as i64;
        v
    }

    /// `[b_x, b_y]` for basis vectors.
    pub fn bracket_basis(&self, x: usize, y: usize) -> IVec {
        let mut v = [0; DIM];
        match (x < NUM_ROOTS, y < NUM_ROOTS) {
            (true, true) => {
                let (r, s) = (self.roots[x], self.roots[y]);
                if r == s.neg() {
                    return self.h_of(r);
                }
                if let Some(t) = roots::sum_root(r, s) {
                    v[t.index()] = self.structconsts[x][y];
                }
            }
            (false, true) => {
                let simple = if x == H_ALPHA { ALPHA } else { BETA };
                v[y] = pairing(self.roots[y], simple) as i64;
            }
            (true, false) => {
                let simple = if y == H_ALPHA { ALPHA } else { BETA };
                v[x] = -(pairing(self.roots[x], simple) as i64);
            }
            (false, false) => {}
        }
        v
    }

    pub fn bracket(&self, x: &IVec, y: &IVec) -> IVec {
        let mut out = [0; DIM];
        for i in 0..DIM {
            if x[i] == 0 {
                continue;
            }
            for j in 0..DIM {
                if y[j] == 0 {
                    continue;
                }
                let b = self.bracket_basis(i, j);
                for k in 0..DIM {
                    out[k] += x[i] * y[j] * b[k];
                }
            }
        }
        out
    }

    /// `ad(b_x)` with column `y` holding `[b_x, b_y]`.
    pub fn ad(&self, x: usize) -> &IMat {
        &self.admats[x]
    }

    pub fn ad_root(&self, delta: Root) -> &IMat {
        &self.admats[delta.index()]
    }

    /// Exhaustive Jacobi identity over all 14³ basis triples.
    pub fn check_jacobi(&self) -> Result<(), Error> {
        let unit = |i: usize| -> IVec {
            let mut v = [0; DIM];
            v[i] = 1;
            v
        };
        for x in 0..DIM {
            for y in 0..DIM {
                let xy = self.bracket_basis(x, y);
                for z in 0..DIM {
                    let yz = self.bracket_basis(y, z);
                    let zx = self.bracket_basis(z, x);
                    let a = imat_apply(&self.admats[x], &yz);
                    let b = imat_apply(&self.admats[y], &zx);
                    let c = self.bracket(&unit(z), &xy);
                    if (0..DIM).any(|k| a[k] + b[k] + c[k] != 0) {
                        return Err(Error::Inconsistent(format!(
                            "Jacobi fails on basis triple ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `ad([x, y]) = ad(x) ad(y) - ad(y) ad(x)` for all basis pairs.
    pub fn check_ad_homomorphism(&self) -> bool {
        (0..DIM).all(|x| {
            (0..DIM).all(|y| {
                let xy = self.bracket_basis(x, y);
                let mut lhs = imat_zero();
                for (k, &c) in xy.iter().enumerate() {
                    for i in 0..DIM {
                        for j in 0..DIM {
                            lhs[i][j] += c * self.admats[k][i][j];
                        }
                    }
                }
                let p = imat_mul(&self.admats[x], &self.admats[y]);
                let q = imat_mul(&self.admats[y], &self.admats[x]);
                (0..DIM).all(|i| (0..DIM).all(|j| lhs[i][j] == p[i][j] - q[i][j]))
            })
        })
    }

    /// Divided powers `ad(e_δ)^n / n!`, checked to be integral and to vanish
    /// from `n = 4` on.
    pub fn divided_powers(&self, delta: Root) -> Result<DividedPowerFamily, Error> {
        let ad = self.ad_root(delta);
        let mut mats = vec![imat_identity()];
        let mut power = imat_identity();
        let mut factorial = 1i64;
        for n in 1..=MAX_POWER + 1 {
            power = imat_mul(&power, ad);
            factorial *= n as i64;
            let mut m = imat_zero();
            for i in 0..DIM {
                for j in 0..DIM {
                    if power[i][j] % factorial != 0 {
                        return Err(Error::NonIntegral {
                            root: delta.to_string(),
                            power: n,
                        });
                    }
                    m[i][j] = power[i][j] / factorial;
                }
            }
            mats.push(m);
        }
        if !is_zero_imat(&mats[MAX_POWER + 1]) {
            return Err(Error::Inconsistent(format!("ad(e_{delta})^4 != 0")));
        }
        Ok(DividedPowerFamily { root: delta, mats })
    }

    /// Structure-constant rows for every root pair with a root sum, in
    /// canonical order.
    pub fn structure_table(&self) -> Vec<StructConst> {
        let mut out = Vec::new();
        for &d in &self.roots {
            for &e in &self.roots {
                if roots::sum_root(d, e).is_some() {
                    out.push(StructConst {
                        delta: d,
                        eps: e,
                        n: self.n(d, e),
                    });
                }
            }
        }
        out
    }
}

/// Entrywise reduction mod 2, viewed inside GF(2^m).
pub fn reduce_mod2(fam: &DividedPowerFamily, _field: &Gf2m) -> Vec<Mat> {
    fam.mats.iter().map(reduce_imat).collect()
}

pub fn reduce_imat(m: &IMat) -> Mat {
    Mat::from_fn(|i, j| Fe(m[i][j].rem_euclid(2) as u16))
}
