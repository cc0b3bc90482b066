//! G2(GF(2^m)) realized by 14×14 matrices acting on the mod-2 reduction of
//! the Chevalley lattice.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::chevalley::{reduce_mod2, ChevalleyBasis, H_ALPHA, H_BETA, MAX_POWER};
use crate::error::Error;
use crate::gf2m::{Fe, Gf2m};
use crate::matrix::{GrpElem, Mat, DIM};
use crate::roots::{all_roots, pairing, Root, ALPHA, BETA, NUM_ROOTS};

/// Exact rational with an odd-or-even denominator; reduced only mod 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Ratio {
    num: i64,
    den: i64,
}

impl Ratio {
    fn int(n: i64) -> Self {
        Ratio { num: n, den: 1 }
    }

    fn times(self, num: i64, den: i64) -> Self {
        Ratio {
            num: self.num * num,
            den: self.den * den,
        }
    }

    fn reduce(self) -> Self {
        fn gcd(a: i64, b: i64) -> i64 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(self.num, self.den).max(1);
        let s = if self.den < 0 { -1 } else { 1 };
        Ratio {
            num: s * self.num / g,
            den: s * self.den / g,
        }
    }

    /// Image in GF(2); the denominator must be odd.
    fn mod2(self) -> Result<u8, Error> {
        let r = self.reduce();
        if r.den % 2 == 0 {
            return Err(Error::Inconsistent(format!(
                "commutator constant {}/{} not 2-integral",
                r.num, r.den
            )));
        }
        Ok(r.num.rem_euclid(2) as u8)
    }
}

/// One factor `κ_{iε+jδ}(c · b^i · a^j)` of the commutator formula for
/// `[κ_δ(a), κ_ε(b)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CommutatorTerm {
    pub i: u32,
    pub j: u32,
    pub root: Root,
    /// Integer constant; the rational value when it is not integral is
    /// irrelevant here since only its mod-2 image is used.
    pub c_num: i64,
    pub c_den: i64,
    pub c_mod2: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorReport {
    pub delta: Root,
    pub eps: Root,
    pub terms: Vec<CommutatorTerm>,
    pub cases: u64,
    pub failures: u64,
}

impl CommutatorReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// The group G2 over a fixed field.
#[derive(Clone, Debug)]
pub struct G2 {
    field: Gf2m,
    basis: ChevalleyBasis,
    /// Reduced divided powers `M̄_0..=M̄_3` per root index.
    powers: Vec<Vec<Mat>>,
    /// Mod-2 bracket of basis vectors: `[b_i, b_j] = Σ c_k b_k`.
    bracket2: Vec<Vec<Vec<(usize, Fe)>>>,
}

impl G2 {
    pub fn new(m: u32) -> Result<Self, Error> {
        Self::with_field(Gf2m::new(m)?)
    }

    pub fn with_field(field: Gf2m) -> Result<Self, Error> {
        let basis = ChevalleyBasis::build()?;
        let powers = all_roots()
            .iter()
            .map(|&d| {
                let fam = basis.divided_powers(d)?;
                let mut mats = reduce_mod2(&fam, &field);
                mats.truncate(MAX_POWER + 1);
                Ok(mats)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let bracket2 = (0..DIM)
            .map(|i| {
                (0..DIM)
                    .map(|j| {
                        basis
                            .bracket_basis(i, j)
                            .iter()
                            .enumerate()
                            .filter(|(_, &c)| c.rem_euclid(2) == 1)
                            .map(|(k, _)| (k, Fe::ONE))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(G2 {
            field,
            basis,
            powers,
            bracket2,
        })
    }

    pub fn field(&self) -> &Gf2m {
        &self.field
    }

    pub fn basis(&self) -> &ChevalleyBasis {
        &self.basis
    }

    pub fn mul(&self, a: &GrpElem, b: &GrpElem) -> GrpElem {
        a.mul(b, &self.field)
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a>(&self, elems: impl IntoIterator<Item = &'a GrpElem>) -> GrpElem {
        elems
            .into_iter()
            .fold(Mat::identity(), |acc, x| acc.mul(x, &self.field))
    }

    /// `κ_δ(a) = Σ_n a^n M̄_n`.
    pub fn kappa(&self, delta: Root, a: Fe) -> GrpElem {
        let f = &self.field;
        let mats = &self.powers[delta.index()];
        let mut out = Mat::identity();
        let mut coeff = Fe::ONE;
        for m in &mats[1..] {
            coeff = f.mul(coeff, a);
            if coeff.is_zero() {
                break;
            }
            for i in 0..DIM {
                for j in 0..DIM {
                    if !m.get(i, j).is_zero() {
                        out.set(i, j, out.get(i, j) + coeff);
                    }
                }
            }
        }
        out
    }

    /// `κ_δ(a)` for every field element `a`, indexed by `a`'s integer value.
    pub fn kappa_table(&self, delta: Root) -> Vec<GrpElem> {
        self.field
            .elements()
            .map(|a| self.kappa(delta, a))
            .collect()
    }

    /// `s_δ = κ_δ(1) κ_{-δ}(1) κ_δ(1)`.
    pub fn s_delta(&self, delta: Root) -> GrpElem {
        let x = self.kappa(delta, Fe::ONE);
        let y = self.kappa(delta.neg(), Fe::ONE);
        self.product([&x, &y, &x])
    }

    /// `n_δ(λ) = κ_δ(λ) κ_{-δ}(-λ^-1) κ_δ(λ)`.
    pub fn n_delta(&self, delta: Root, lam: Fe) -> Result<GrpElem, Error> {
        let inv = self.field.inv(lam).map_err(|_| Error::ZeroCorootScalar)?;
        let x = self.kappa(delta, lam);
        let y = self.kappa(delta.neg(), inv);
        Ok(self.product([&x, &y, &x]))
    }

    /// `δ^∨(λ) = n_δ(λ) n_δ(1)^-1`.
    pub fn coroot_elt(&self, delta: Root, lam: Fe) -> Result<GrpElem, Error> {
        let n = self.n_delta(delta, lam)?;
        // n_δ(1) is an involution in characteristic 2
        let n1 = self.n_delta(delta, Fe::ONE)?;
        Ok(self.mul(&n, &n1))
    }

    /// The diagonal matrix `e_ε ↦ λ^<ε,δ^∨> e_ε`, fixing the Cartan part.
    /// Independent of [`G2::coroot_elt`]; used to cross-check it.
    pub fn coroot_diagonal(&self, delta: Root, lam: Fe) -> Result<GrpElem, Error> {
        let inv = self.field.inv(lam).map_err(|_| Error::ZeroCorootScalar)?;
        let mut d = [Fe::ONE; DIM];
        for (i, &e) in all_roots().iter().enumerate() {
            let k = pairing(e, delta);
            d[i] = if k >= 0 {
                self.field.pow(lam, k as u64)
            } else {
                self.field.pow(inv, (-k) as u64)
            };
        }
        Ok(Mat::diagonal(&d))
    }

    /// The value `χ(h)` of the character `χ = c_α α + c_β β` on a diagonal
    /// torus element, read from the action on `e_χ`.
    pub fn root_character(&self, h: &GrpElem, chi: Root) -> Fe {
        h.get(chi.index(), chi.index())
    }

    /// Whether `g` preserves the mod-2 Lie bracket on all basis pairs.
    pub fn is_lie_automorphism(&self, g: &GrpElem) -> bool {
        let f = &self.field;
        let cols: Vec<[Fe; DIM]> = (0..DIM).map(|j| g.column(j)).collect();
        for i in 0..DIM {
            for j in 0..DIM {
                let mut lhs = [Fe::ZERO; DIM];
                for &(k, c) in &self.bracket2[i][j] {
                    for (r, l) in lhs.iter_mut().enumerate() {
                        *l += f.mul(c, g.get(r, k));
                    }
                }
                let rhs = self.bracket_vec(&cols[i], &cols[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Mod-2 bracket of two vectors over the field.
    pub fn bracket_vec(&self, x: &[Fe; DIM], y: &[Fe; DIM]) -> [Fe; DIM] {
        let f = &self.field;
        let mut out = [Fe::ZERO; DIM];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = f.mul(xi, yj);
                for &(k, s) in &self.bracket2[i][j] {
                    out[k] += f.mul(c, s);
                }
            }
        }
        out
    }

    /// Constants of the Chevalley commutator formula for
    /// `[κ_δ(a), κ_ε(b)] = κ_δ(a)^-1 κ_ε(b)^-1 κ_δ(a) κ_ε(b)`, as factors
    /// `κ_{iε+jδ}(C_ij b^i a^j)` in increasing `i+j`.
    pub fn commutator_terms(&self, delta: Root, eps: Root) -> Result<Vec<CommutatorTerm>, Error> {
        if delta == eps.neg() {
            return Err(Error::ProportionalRoots);
        }
        let (r, s) = (eps, delta);
        let n = |x: Root, y: Root| self.basis.n(x, y);
        // M_{x,y,i} = (1/i!) N_{x,y} N_{x,x+y} ... N_{x,(i-1)x+y}
        let m = |x: Root, y: Root, i: i64| -> Ratio {
            let mut acc = Ratio::int(1);
            let mut cur = y;
            for k in 1..=i {
                acc = acc.times(n(x, cur), k);
                cur = cur.plus(x);
            }
            acc
        };
        let mut terms = Vec::new();
        for i in 1..=3i64 {
            for j in 1..=3i64 {
                let root = r.scaled(i as i32).plus(s.scaled(j as i32));
                if !root.is_root() {
                    continue;
                }
                let c = match (i, j) {
                    (_, 1) => m(r, s, i),
                    (1, _) => m(s, r, j).times(if j % 2 == 0 { 1 } else { -1 }, 1),
                    (3, 2) => m(r.plus(s), r, 2).times(1, 3),
                    (2, 3) => m(s.plus(r), s, 2).times(-2, 3),
                    _ => {
                        return Err(Error::Inconsistent(format!(
                            "unexpected commutator term ({i}, {j})"
                        )))
                    }
                }
                .reduce();
                terms.push(CommutatorTerm {
                    i: i as u32,
                    j: j as u32,
                    root,
                    c_num: c.num,
                    c_den: c.den,
                    c_mod2: c.mod2()?,
                });
            }
        }
        terms.sort_by_key(|t| (t.i + t.j, t.i));
        Ok(terms)
    }

    /// Right-hand side of the commutator formula at `(a, b)`.
    pub fn commutator_rhs(&self, terms: &[CommutatorTerm], a: Fe, b: Fe) -> GrpElem {
        let f = &self.field;
        terms.iter().fold(Mat::identity(), |acc, t| {
            if t.c_mod2 == 0 {
                return acc;
            }
            let x = f.mul(f.pow(b, t.i as u64), f.pow(a, t.j as u64));
            acc.mul(&self.kappa(t.root, x), f)
        })
    }

    /// Exhaustive check of the commutator formula for the ordered pair
    /// `(δ, ε)` over all `(a, b)` in the field.
    pub fn commutator_check(&self, delta: Root, eps: Root) -> Result<CommutatorReport, Error> {
        let terms = self.commutator_terms(delta, eps)?;
        let f = &self.field;
        let xs = self.kappa_table(delta);
        let ys = self.kappa_table(eps);
        let mut cases = 0;
        let mut failures = 0;
        for a in f.elements() {
            let x = &xs[a.0 as usize];
            for b in f.elements() {
                let y = &ys[b.0 as usize];
                // κ(a)^-1 = κ(a) in characteristic 2
                let lhs = self.product([x, y, x, y]);
                cases += 1;
                if lhs != self.commutator_rhs(&terms, a, b) {
                    failures += 1;
                }
            }
        }
        Ok(CommutatorReport {
            delta,
            eps,
            terms,
            cases,
            failures,
        })
    }

    /// Generators of `G_δ = <U_δ, U_-δ>`: `κ_{±δ}` on an additive basis.
    pub fn rank_one_generators(&self, delta: Root) -> Vec<GrpElem> {
        let basis = self.field.additive_basis();
        basis
            .iter()
            .map(|&a| self.kappa(delta, a))
            .chain(basis.iter().map(|&a| self.kappa(delta.neg(), a)))
            .collect()
    }

    /// Generators of the maximal torus: `α^∨(ζ), β^∨(ζ)` for a primitive `ζ`.
    pub fn torus_generators(&self) -> Result<Vec<GrpElem>, Error> {
        let zeta = self.field.generator();
        Ok(vec![
            self.coroot_elt(ALPHA, zeta)?,
            self.coroot_elt(BETA, zeta)?,
        ])
    }
}

/// Breadth-first closure of `gens` under right multiplication, returned in
/// canonical (sorted) order. Errors once more than `bound` elements appear.
pub fn enumerate_subgroup(
    field: &Gf2m,
    gens: &[GrpElem],
    bound: usize,
) -> Result<Vec<GrpElem>, Error> {
    let mut seen: HashSet<GrpElem> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(Mat::identity());
    queue.push_back(Mat::identity());
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g, field);
            if !seen.contains(&y) {
                if seen.len() >= bound {
                    return Err(Error::BoundExceeded(bound));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<GrpElem> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Index of the Cartan basis vector whose pairing with `δ` is odd, if any.
pub(crate) fn odd_cartan_index(delta: Root) -> Option<usize> {
    if pairing(delta, ALPHA) % 2 != 0 {
        Some(H_ALPHA)
    } else if pairing(delta, BETA) % 2 != 0 {
        Some(H_BETA)
    } else {
        None
    }
}

/// Every ordered pair `(δ, ε)` of roots with `δ + ε ≠ 0`.
pub fn commutator_pairs() -> Vec<(Root, Root)> {
    let rs = all_roots();
    let mut out = Vec::with_capacity(NUM_ROOTS * (NUM_ROOTS - 1));
    for &d in &rs {
        for &e in &rs {
            if d != e.neg() {
                out.push((d, e));
            }
        }
    }
    out
}

/// Whether some `κ_ρ(c)` equals `g`.
pub fn root_group_member(g2: &G2, rho: Root, g: &GrpElem) -> Option<Fe> {
    g2.field().elements().find(|&c| g2.kappa(rho, c) == *g)
}
