//! The unipotent radical `V = R_u(P_α)` with normal-form coordinates.
//!
//! Every element of V is uniquely
//! `κ_β(x_1) κ_{α+β}(x_2) κ_{2α+β}(x_3) κ_{3α+β}(x_4) κ_ω(x_5)`.
//! Elements are indexed by the integer whose base-2^m digits are
//! `x_1, ..., x_5` with `x_1` most significant; that index order is the
//! canonical scan order.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::gf2m::{Fe, Gf2m};
use crate::group::{odd_cartan_index, G2};
use crate::matrix::{GrpElem, Mat};
use crate::roots::Root;

/// Roots of V in normal-form (height) order.
pub const V_ROOTS: [Root; 5] = [
    Root::new(0, 1),
    Root::new(1, 1),
    Root::new(2, 1),
    Root::new(3, 1),
    Root::new(3, 2),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct UnipotentCoords {
    pub xs: [Fe; 5],
}

impl UnipotentCoords {
    pub const IDENTITY: UnipotentCoords = UnipotentCoords { xs: [Fe::ZERO; 5] };
}

/// V over a fixed field: root-group tables, optional lookup table and
/// exhaustive scans in canonical order.
#[derive(Clone)]
pub struct VSpace {
    field: Gf2m,
    kappas: Vec<Vec<Mat>>,
    table: Option<HashMap<Mat, UnipotentCoords>>,
}

impl VSpace {
    pub fn new(g2: &G2) -> Self {
        VSpace {
            field: g2.field().clone(),
            kappas: V_ROOTS.iter().map(|&r| g2.kappa_table(r)).collect(),
            table: None,
        }
    }

    /// Builds the coordinate lookup table by enumerating every normal form.
    /// Panics if two tuples give the same matrix.
    pub fn with_table(g2: &G2) -> Self {
        let mut v = VSpace::new(g2);
        let mut table = HashMap::with_capacity(v.size() as usize);
        for idx in 0..v.size() {
            let c = v.coords_of_index(idx);
            let prev = table.insert(v.element(&c), c);
            assert!(prev.is_none(), "normal form not injective at {c:?}");
        }
        v.table = Some(table);
        v
    }

    pub fn field(&self) -> &Gf2m {
        &self.field
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    /// `|V| = 2^(5m)`.
    pub fn size(&self) -> u64 {
        1u64 << (5 * self.field.degree())
    }

    pub fn coords_of_index(&self, idx: u64) -> UnipotentCoords {
        let m = self.field.degree();
        let mask = (1u64 << m) - 1;
        let mut xs = [Fe::ZERO; 5];
        for (k, x) in xs.iter_mut().enumerate() {
            *x = Fe(((idx >> (m * (4 - k as u32))) & mask) as u16);
        }
        UnipotentCoords { xs }
    }

    pub fn index_of(&self, c: &UnipotentCoords) -> u64 {
        let m = self.field.degree();
        c.xs.iter().fold(0u64, |acc, x| (acc << m) | x.0 as u64)
    }

    pub fn kappa(&self, slot: usize, x: Fe) -> &Mat {
        &self.kappas[slot][x.0 as usize]
    }

    pub fn element(&self, c: &UnipotentCoords) -> GrpElem {
        c.xs.iter()
            .enumerate()
            .fold(Mat::identity(), |acc, (k, &x)| {
                acc.mul(self.kappa(k, x), &self.field)
            })
    }

    pub fn element_at(&self, idx: u64) -> GrpElem {
        self.element(&self.coords_of_index(idx))
    }

    /// Coordinates of `g` if it lies in V: the lookup table when present,
    /// otherwise greedy extraction.
    pub fn v_coords(&self, g: &GrpElem) -> Option<UnipotentCoords> {
        match &self.table {
            Some(t) => t.get(g).copied(),
            None => self.greedy_coords(g),
        }
    }

    /// Peels off one root-group factor at a time in height order. If
    /// `g = κ_δ(x)·(higher factors)` then the `e_δ`-coefficient of `g·h` is
    /// `x·<δ, h>`, so `x` is read from the column of a Cartan basis vector
    /// with odd pairing. The final remainder must be the identity.
    pub fn greedy_coords(&self, g: &GrpElem) -> Option<UnipotentCoords> {
        let mut rest = g.clone();
        let mut xs = [Fe::ZERO; 5];
        for (k, &delta) in V_ROOTS.iter().enumerate() {
            let h = odd_cartan_index(delta).expect("every V root has an odd Cartan pairing");
            let x = rest.get(delta.index(), h);
            xs[k] = x;
            // κ_δ(x) is its own inverse
            rest = self.kappa(k, x).mul(&rest, &self.field);
        }
        rest.is_identity().then_some(UnipotentCoords { xs })
    }

    fn chunk_count(&self) -> u64 {
        1u64 << (2 * self.field.degree())
    }

    /// Visits the elements of one chunk (fixed `x_1, x_2`) in index order,
    /// stopping when `visit` returns `true`.
    fn scan_chunk(&self, chunk: u64, mut visit: impl FnMut(u64, &Mat) -> bool) -> bool {
        let f = &self.field;
        let m = f.degree();
        let q = 1u64 << m;
        let x1 = Fe((chunk >> m) as u16);
        let x2 = Fe((chunk & (q - 1)) as u16);
        let p2 = self.kappa(0, x1).mul(self.kappa(1, x2), f);
        let base = chunk << (3 * m);
        for x3 in 0..q {
            let p3 = p2.mul(self.kappa(2, Fe(x3 as u16)), f);
            for x4 in 0..q {
                let p4 = p3.mul(self.kappa(3, Fe(x4 as u16)), f);
                for x5 in 0..q {
                    let v = p4.mul(self.kappa(4, Fe(x5 as u16)), f);
                    let idx = base | (x3 << (2 * m)) | (x4 << m) | x5;
                    if visit(idx, &v) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// First element in canonical order satisfying `pred`.
    pub fn find_first<P>(&self, pred: P) -> Option<(u64, GrpElem)>
    where
        P: Fn(&Mat) -> bool + Sync,
    {
        (0..self.chunk_count())
            .into_par_iter()
            .find_map_first(|chunk| {
                let mut hit = None;
                self.scan_chunk(chunk, |idx, v| {
                    if pred(v) {
                        hit = Some((idx, v.clone()));
                        true
                    } else {
                        false
                    }
                });
                hit
            })
    }

    /// Indices of all elements satisfying `pred`, in canonical order.
    pub fn filter_indices<P>(&self, pred: P) -> Vec<u64>
    where
        P: Fn(&Mat) -> bool + Sync,
    {
        let parts: Vec<Vec<u64>> = (0..self.chunk_count())
            .into_par_iter()
            .map(|chunk| {
                let mut out = Vec::new();
                self.scan_chunk(chunk, |idx, v| {
                    if pred(v) {
                        out.push(idx);
                    }
                    false
                });
                out
            })
            .collect();
        parts.into_iter().flatten().collect()
    }

    /// Generators of V as a group: each root group on an additive basis.
    pub fn generators(&self) -> Vec<GrpElem> {
        let basis = self.field.additive_basis();
        (0..V_ROOTS.len())
            .flat_map(|k| basis.iter().map(move |&a| (k, a)))
            .map(|(k, a)| self.kappa(k, a).clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_subgroup;
    use crate::roots::{ALPHA, OMEGA};
    use proptest::prelude::*;

    #[test]
    fn normal_form_covers_the_enumerated_group_at_m3() {
        let g2 = G2::new(3).unwrap();
        let v = VSpace::with_table(&g2);
        let closure = enumerate_subgroup(g2.field(), &v.generators(), 40_000).unwrap();
        assert_eq!(closure.len(), 32_768);
        assert_eq!(v.size(), 32_768);
        for x in &closure {
            assert!(v.v_coords(x).is_some());
        }
    }

    #[test]
    fn coordinates_of_simple_elements() {
        let g2 = G2::new(3).unwrap();
        let v = VSpace::with_table(&g2);
        assert_eq!(
            v.v_coords(&Mat::identity()),
            Some(UnipotentCoords::IDENTITY)
        );
        for a in g2.field().elements() {
            let c = v.v_coords(&g2.kappa(OMEGA, a)).unwrap();
            assert_eq!(c.xs, [Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ZERO, a]);
        }
        assert_eq!(v.v_coords(&g2.s_delta(ALPHA)), None);
        assert_eq!(v.greedy_coords(&g2.s_delta(ALPHA)), None);
        assert_eq!(v.v_coords(&g2.kappa(ALPHA, Fe::ONE)), None);
    }

    #[test]
    fn greedy_extraction_agrees_with_table() {
        let g2 = G2::new(2).unwrap();
        let v = VSpace::with_table(&g2);
        for idx in 0..v.size() {
            let x = v.element_at(idx);
            assert_eq!(v.greedy_coords(&x), v.v_coords(&x));
            assert_eq!(v.index_of(&v.greedy_coords(&x).unwrap()), idx);
        }
        // products with non-members are rejected by both
        let s = g2.s_delta(ALPHA);
        for idx in (0..v.size()).step_by(37) {
            let y = v.element_at(idx).mul(&s, g2.field());
            assert_eq!(v.greedy_coords(&y), None);
            assert_eq!(v.v_coords(&y), None);
        }
    }

    #[test]
    fn scans_follow_canonical_order() {
        let g2 = G2::new(2).unwrap();
        let v = VSpace::new(&g2);
        let all = v.filter_indices(|_| true);
        assert_eq!(all, (0..v.size()).collect::<Vec<_>>());
        let target = v.element_at(700);
        let (idx, found) = v.find_first(|x| *x == target).unwrap();
        assert_eq!((idx, found), (700, target));
        assert!(v.find_first(|x| !g2.is_lie_automorphism(x)).is_none());
    }

    proptest! {
        #[test]
        fn greedy_round_trip_at_m5(xs in proptest::array::uniform5(0u16..32)) {
            let g2 = G2::new(5).unwrap();
            let v = VSpace::new(&g2);
            let c = UnipotentCoords { xs: xs.map(Fe) };
            prop_assert_eq!(v.greedy_coords(&v.element(&c)), Some(c));
            prop_assert_eq!(v.coords_of_index(v.index_of(&c)), c);
        }
    }
}
