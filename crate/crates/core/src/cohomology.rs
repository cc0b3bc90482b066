//! Nonabelian 1-cocycles `Γ → V` for the action `γ·v = σ(γ) v σ(γ)^-1`,
//! their relation to representations, restriction to `Γ_2`, and the abelian
//! cocycle spaces of the adjoint module for contrast.

use std::collections::HashMap;

use serde::Serialize;

use crate::counterexample::{distinct_pairs, Counterexample, Representation};
use crate::error::Error;
use crate::gamma::{Domain, GammaElem, Letter};
use crate::gf2m::{Fe, Gf2m};
use crate::linalg::FMatrix;
use crate::matrix::{GrpElem, Mat, DIM};
use crate::roots::ALPHA;
use crate::unipotent::{UnipotentCoords, VSpace};

/// `σ(r) = t`, `σ(s) = s_α`, `σ(z) = 1`, with `σ(γ)` and `σ(γ)^-1` tabulated
/// over Γ.
#[derive(Clone, Debug)]
pub struct SigmaAction {
    rep: Representation,
    sigma: Vec<GrpElem>,
    sigma_inv: Vec<GrpElem>,
}

impl SigmaAction {
    pub fn new(ce: &Counterexample) -> Result<Self, Error> {
        let f = ce.field();
        let domain = Domain::full(ce.gamma());
        let rep = Representation::new(
            domain,
            ce.t().clone(),
            ce.s_alpha().clone(),
            Mat::identity(),
            f,
        )?;
        let gamma = ce.gamma();
        let mut sigma = Vec::with_capacity(gamma.order());
        let mut sigma_inv = Vec::with_capacity(gamma.order());
        for x in gamma.elements() {
            sigma.push(rep.eval(x, f)?);
            sigma_inv.push(rep.eval(gamma.inv(x), f)?);
        }
        Ok(SigmaAction {
            rep,
            sigma,
            sigma_inv,
        })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn sigma(&self, x: GammaElem) -> &GrpElem {
        &self.sigma[self.rep.domain().gamma().index(x)]
    }

    pub fn sigma_inv(&self, x: GammaElem) -> &GrpElem {
        &self.sigma_inv[self.rep.domain().gamma().index(x)]
    }

    /// `γ·v = σ(γ) v σ(γ)^-1`.
    pub fn act(&self, x: GammaElem, v: &GrpElem, f: &Gf2m) -> GrpElem {
        self.sigma(x).conjugate(v, self.sigma_inv(x), f)
    }

    /// Whether each `σ(generator)` conjugates each generator of V into V.
    pub fn normalizes(&self, vs: &VSpace) -> bool {
        let f = vs.field();
        let gens = vs.generators();
        [GammaElem::R, GammaElem::S, GammaElem::Z].iter().all(|&x| {
            gens.iter()
                .all(|v| vs.v_coords(&self.act(x, v, f)).is_some())
        })
    }
}

/// A full value table `γ ↦ θ(γ)` over a domain, indexed as in
/// [`Domain::elements`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    domain: Domain,
    values: Vec<GrpElem>,
}

impl Cocycle {
    /// Wraps a table without checking anything.
    pub fn from_table(domain: Domain, values: Vec<GrpElem>) -> Result<Self, Error> {
        if values.len() != domain.len() {
            return Err(Error::DomainMismatch);
        }
        Ok(Cocycle { domain, values })
    }

    /// Extends generator values by `θ(xg) = θ(x)·(x·θ(g))` along the normal
    /// form words `r^i s^j z^k`, then checks the cocycle identity.
    pub fn from_generator_values(
        domain: Domain,
        gens: &[(Letter, GrpElem)],
        act: &SigmaAction,
        f: &Gf2m,
    ) -> Result<Self, Error> {
        let gamma = *domain.gamma();
        let value = |l: Letter| {
            gens.iter()
                .find(|(g, _)| *g == l)
                .map(|(_, v)| v.clone())
                .ok_or(Error::DomainMismatch)
        };
        let mut values = Vec::with_capacity(domain.len());
        for x in domain.elements() {
            let mut word = vec![Letter::R; x.i as usize];
            if x.j == 1 {
                word.push(Letter::S);
            }
            if x.k == 1 {
                word.push(Letter::Z);
            }
            let mut prefix = GammaElem::ONE;
            let mut theta = Mat::identity();
            for l in word {
                let g = value(l)?;
                theta = theta.mul(&act.act(prefix, &g, f), f);
                prefix = gamma.mul(prefix, gamma.from_word(&[l]));
            }
            values.push(theta);
        }
        let c = Cocycle { domain, values };
        c.check_identity(act, f)?;
        Ok(c)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn values(&self) -> &[GrpElem] {
        &self.values
    }

    pub fn value(&self, x: GammaElem) -> Result<&GrpElem, Error> {
        self.domain
            .index(x)
            .map(|i| &self.values[i])
            .ok_or(Error::DomainMismatch)
    }

    pub fn trivial(domain: Domain) -> Self {
        Cocycle {
            domain,
            values: vec![Mat::identity(); domain.len()],
        }
    }

    /// `θ(1) = 1` and `θ(xy) = θ(x)·(x·θ(y))` for every ordered pair.
    pub fn check_identity(&self, act: &SigmaAction, f: &Gf2m) -> Result<(), Error> {
        let gamma = self.domain.gamma();
        if !self.value(GammaElem::ONE)?.is_identity() {
            return Err(Error::CocycleIdentity("1".into(), "1".into()));
        }
        let els = self.domain.elements();
        for &x in &els {
            let tx = self.value(x)?;
            for &y in &els {
                let lhs = self.value(gamma.mul(x, y))?;
                let rhs = tx.mul(&act.act(x, self.value(y)?, f), f);
                if *lhs != rhs {
                    return Err(Error::CocycleIdentity(x.to_string(), y.to_string()));
                }
            }
        }
        Ok(())
    }

    pub fn pairs_checked(&self) -> usize {
        self.domain.len() * self.domain.len()
    }
}

/// `θ_ρ(γ) = ρ(γ) σ(γ)^-1`, each value checked to lie in V.
pub fn cocycle_of(rho: &Representation, act: &SigmaAction, vs: &VSpace) -> Result<Cocycle, Error> {
    let f = vs.field();
    let domain = rho.domain();
    let mut values = Vec::with_capacity(domain.len());
    for x in domain.elements() {
        let v = rho.eval(x, f)?.mul(act.sigma_inv(x), f);
        if vs.v_coords(&v).is_none() {
            return Err(Error::NotInRadical(x.to_string()));
        }
        values.push(v);
    }
    let c = Cocycle { domain, values };
    c.check_identity(act, f)?;
    Ok(c)
}

/// `ρ(γ) = θ(γ) σ(γ)` on generators; the relations are rechecked.
pub fn rep_of(theta: &Cocycle, act: &SigmaAction, f: &Gf2m) -> Result<Representation, Error> {
    let img = |x: GammaElem| -> Result<GrpElem, Error> { Ok(theta.value(x)?.mul(act.sigma(x), f)) };
    let img_r = if theta.domain.sylow {
        Mat::identity()
    } else {
        img(GammaElem::R)?
    };
    Representation::new(
        theta.domain,
        img_r,
        img(GammaElem::S)?,
        img(GammaElem::Z)?,
        f,
    )
}

/// The value table on the four elements of `Γ_2`.
pub fn restrict(theta: &Cocycle) -> Result<Cocycle, Error> {
    let domain = Domain::sylow(*theta.domain.gamma());
    let values = domain
        .elements()
        .into_iter()
        .map(|x| theta.value(x).cloned())
        .collect::<Result<_, _>>()?;
    Ok(Cocycle { domain, values })
}

/// Whether `θ_2(γ) = v^-1 θ_1(γ) (γ·v)` for every `γ` in the domain.
pub fn is_witness(
    th1: &Cocycle,
    th2: &Cocycle,
    v: &GrpElem,
    act: &SigmaAction,
    f: &Gf2m,
) -> Result<bool, Error> {
    if th1.domain != th2.domain {
        return Err(Error::DomainMismatch);
    }
    let v_inv = v.inverse(f)?;
    for x in th1.domain.elements() {
        let rhs = v_inv.mul(th1.value(x)?, f).mul(&act.act(x, v, f), f);
        if *th2.value(x)? != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Direct form of the witness search: every `v` in canonical order, tested
/// with the defining equation on generators. Slow; used as an oracle.
pub fn cohomologous_naive(
    th1: &Cocycle,
    th2: &Cocycle,
    act: &SigmaAction,
    vs: &VSpace,
) -> Result<Option<(u64, GrpElem)>, Error> {
    if th1.domain != th2.domain {
        return Err(Error::DomainMismatch);
    }
    let f = vs.field();
    let gens: Vec<GammaElem> = th1
        .domain
        .generators()
        .into_iter()
        .map(|l| th1.domain.gamma().from_word(&[l]))
        .collect();
    Ok(vs.find_first(|v| {
        let v_inv = v.inverse(f).expect("unipotent elements are invertible");
        gens.iter().all(|&x| {
            let rhs = v_inv
                .mul(th1.value(x).unwrap(), f)
                .mul(&act.act(x, v, f), f);
            *th2.value(x).unwrap() == rhs
        })
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoboundaryOutcome {
    /// Canonical index and coordinates of the least witness.
    pub witness: Option<(u64, UnipotentCoords)>,
    /// Elements of V ruled out before the answer was known.
    pub scanned: u64,
}

/// Canonical-least witness search over V.
///
/// `θ_2(γ) = v^-1 θ_1(γ) (γ·v)` is equivalent to `v ρ_2(γ) = ρ_1(γ) v` with
/// `ρ_i(γ) = θ_i(γ) σ(γ)`, which needs no inverses. When a generator has the
/// same image under both, the condition on it is that `v` centralizes that
/// image; the set of such `v` is computed once per image and reused.
pub struct CoboundarySearch<'a> {
    vs: &'a VSpace,
    act: &'a SigmaAction,
    memo: HashMap<GrpElem, Option<Vec<u64>>>,
}

impl<'a> CoboundarySearch<'a> {
    pub fn new(vs: &'a VSpace, act: &'a SigmaAction) -> Self {
        CoboundarySearch {
            vs,
            act,
            memo: HashMap::new(),
        }
    }

    pub fn vspace(&self) -> &VSpace {
        self.vs
    }

    /// Representation images of the domain generators for `θ`.
    fn images(&self, th: &Cocycle) -> Result<Vec<GrpElem>, Error> {
        let f = self.vs.field();
        let gamma = th.domain.gamma();
        th.domain
            .generators()
            .into_iter()
            .map(|l| {
                let x = gamma.from_word(&[l]);
                Ok(th.value(x)?.mul(self.act.sigma(x), f))
            })
            .collect()
    }

    /// Indices of V centralizing `g`, or `None` when that is all of V.
    fn centralizer(&mut self, g: &GrpElem) -> Option<Vec<u64>> {
        if let Some(hit) = self.memo.get(g) {
            return hit.clone();
        }
        let f = self.vs.field();
        let idx = self.vs.filter_indices(|v| v.commutes_with(g, f));
        let entry = (idx.len() as u64 != self.vs.size()).then_some(idx);
        self.memo.insert(g.clone(), entry.clone());
        entry
    }

    pub fn search(&mut self, th1: &Cocycle, th2: &Cocycle) -> Result<CoboundaryOutcome, Error> {
        if th1.domain != th2.domain {
            return Err(Error::DomainMismatch);
        }
        let f = self.vs.field().clone();
        let im1 = self.images(th1)?;
        let im2 = self.images(th2)?;
        let test = |v: &Mat| {
            im1.iter()
                .zip(&im2)
                .all(|(a, b)| Mat::products_equal(v, b, a, v, &f))
        };

        let fixed = im1
            .iter()
            .zip(&im2)
            .find(|(a, b)| a == b)
            .map(|(a, _)| a.clone());
        let restricted = fixed.and_then(|g| self.centralizer(&g));
        let found = match restricted {
            Some(idx) => idx.into_iter().find_map(|i| {
                let v = self.vs.element_at(i);
                test(&v).then_some((i, v))
            }),
            None => self.vs.find_first(test),
        };
        Ok(match found {
            Some((i, _)) => CoboundaryOutcome {
                witness: Some((i, self.vs.coords_of_index(i))),
                scanned: i + 1,
            },
            None => CoboundaryOutcome {
                witness: None,
                scanned: self.vs.size(),
            },
        })
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DownstairsEntry {
    pub a: Fe,
    pub b: Fe,
    pub witness_index: Option<u64>,
    pub witness: Option<UnipotentCoords>,
    pub scanned: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FiberReport {
    pub q: u32,
    pub m: u32,
    pub a_values: Vec<Fe>,
    pub v_order: u64,
    /// `upstairs[i][j]`: whether `θ_{a_i}` and `θ_{a_j}` are cohomologous
    /// over Γ.
    pub upstairs: Vec<Vec<bool>>,
    pub upstairs_pairs: usize,
    pub upstairs_scanned: u64,
    pub downstairs: Vec<DownstairsEntry>,
    /// `u(√a)` is a witness between `θ'_0` and `θ'_a`, both directions.
    pub sqrt_witness_cross_check: bool,
    pub upstairs_classes: usize,
    pub downstairs_classes: usize,
    pub fiber_lower_bound: usize,
}

fn count_classes(n: usize, same: impl Fn(usize, usize) -> bool) -> usize {
    let mut rep: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            if same(j, i) {
                rep[i] = rep[j];
                break;
            }
        }
    }
    let mut r = rep.clone();
    r.sort_unstable();
    r.dedup();
    r.len()
}

/// Classes `[θ_a]` for the given `a`, compared pairwise over Γ and after
/// restriction to `Γ_2`. The fiber bound is the number of distinct classes
/// upstairs when all restrictions coincide, and 0 otherwise.
pub fn fiber_demo_for(
    ce: &Counterexample,
    vs: &VSpace,
    values: &[Fe],
) -> Result<FiberReport, Error> {
    let f = ce.field();
    let act = SigmaAction::new(ce)?;
    let mut thetas = Vec::new();
    for &a in values {
        thetas.push(cocycle_of(&ce.build_rho(a)?, &act, vs)?);
    }
    let restricted: Vec<Cocycle> = thetas.iter().map(restrict).collect::<Result<_, _>>()?;
    let mut search = CoboundarySearch::new(vs, &act);

    let n = values.len();
    let mut upstairs = vec![vec![false; n]; n];
    let mut upstairs_scanned = 0;
    for (i, row) in upstairs.iter_mut().enumerate() {
        row[i] = true;
    }
    let pos = |a: Fe| values.iter().position(|&x| x == a).unwrap();
    for (a, b) in distinct_pairs(values) {
        let out = search.search(&thetas[pos(a)], &thetas[pos(b)])?;
        upstairs_scanned += out.scanned;
        let same = out.witness.is_some();
        upstairs[pos(a)][pos(b)] = same;
        upstairs[pos(b)][pos(a)] = same;
    }

    let mut downstairs = Vec::new();
    for (a, b) in distinct_pairs(values) {
        let out = search.search(&restricted[pos(a)], &restricted[pos(b)])?;
        if let Some((_, c)) = &out.witness {
            let v = vs.element(c);
            if !is_witness(&restricted[pos(a)], &restricted[pos(b)], &v, &act, f)? {
                return Err(Error::Inconsistent(format!(
                    "downstairs witness for ({a}, {b})"
                )));
            }
        }
        downstairs.push(DownstairsEntry {
            a,
            b,
            witness_index: out.witness.as_ref().map(|w| w.0),
            witness: out.witness.map(|w| w.1),
            scanned: out.scanned,
        });
    }

    let mut sqrt_witness_cross_check = true;
    let zero = restrict(&cocycle_of(&ce.build_rho(Fe::ZERO)?, &act, vs)?)?;
    for (k, &a) in values.iter().enumerate() {
        let u = ce.conj_u(f.sqrt(a));
        sqrt_witness_cross_check &= is_witness(&restricted[k], &zero, &u, &act, f)?;
        sqrt_witness_cross_check &= is_witness(&zero, &restricted[k], &u, &act, f)?;
    }

    let down_same = |i: usize, j: usize| {
        downstairs.iter().any(|e| {
            e.witness.is_some()
                && ((pos(e.a), pos(e.b)) == (i, j) || (pos(e.a), pos(e.b)) == (j, i))
        })
    };
    let upstairs_classes = count_classes(n, |i, j| upstairs[i][j]);
    let downstairs_classes = count_classes(n, down_same);
    Ok(FiberReport {
        q: ce.q(),
        m: f.degree(),
        a_values: values.to_vec(),
        v_order: vs.size(),
        upstairs,
        upstairs_pairs: n * n.saturating_sub(1) / 2,
        upstairs_scanned,
        downstairs,
        sqrt_witness_cross_check,
        upstairs_classes,
        downstairs_classes,
        fiber_lower_bound: if downstairs_classes == 1 {
            upstairs_classes
        } else {
            0
        },
    })
}

/// The fiber check over the whole family `a ∈ GF(2^m)`.
pub fn fiber_demo(q: u32, m: u32) -> Result<FiberReport, Error> {
    let ce = Counterexample::new(q, m)?;
    let vs = VSpace::new(ce.g2());
    fiber_demo_for(&ce, &vs, &ce.family())
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LinearCocycleDims {
    pub z1_gamma: usize,
    pub b1_gamma: usize,
    pub z1_sylow: usize,
    pub b1_sylow: usize,
    pub fixed_gamma: usize,
    pub fixed_sylow: usize,
    /// Dimension of the kernel of `H^1(Γ, 𝔤) → H^1(Γ_2, 𝔤)`.
    pub restriction_kernel: usize,
}

/// Constraint matrix for cocycles on the generators: for each relator
/// `l_1 ... l_n` the value `Σ_k ρ(l_1 ... l_{k-1}) X_{l_k}` must vanish.
fn cocycle_constraints(rho: &Representation, domain: Domain, f: &Gf2m) -> FMatrix {
    let gens = domain.generators();
    let relators = domain.relators();
    let mut m = FMatrix::zeros(DIM * relators.len(), DIM * gens.len());
    for (ri, (_, word)) in relators.iter().enumerate() {
        let mut prefix = Mat::identity();
        for &l in word {
            let gi = gens
                .iter()
                .position(|&g| g == l)
                .expect("relator letter is a generator");
            for i in 0..DIM {
                for j in 0..DIM {
                    let cell = (ri * DIM + i, gi * DIM + j);
                    m.set(cell.0, cell.1, m.get(cell.0, cell.1) + prefix.get(i, j));
                }
            }
            prefix = prefix.mul(rho.image(l), f);
        }
    }
    m
}

/// Stacked `ρ(g) - 1` over the generators: its column space is `B^1`.
fn coboundary_map(rho: &Representation, domain: Domain) -> FMatrix {
    let gens = domain.generators();
    FMatrix::from_fn(DIM * gens.len(), DIM, |i, j| {
        let g = rho.image(gens[i / DIM]);
        g.get(i % DIM, j) + if i % DIM == j { Fe::ONE } else { Fe::ZERO }
    })
}

/// Cocycle and coboundary dimensions of the adjoint module over Γ and
/// `Γ_2`, and the kernel of restriction on `H^1`.
pub fn linear_cocycle_dims(rho: &Representation, f: &Gf2m) -> Result<LinearCocycleDims, Error> {
    if rho.domain().sylow {
        return Err(Error::DomainMismatch);
    }
    let full = rho.domain();
    let sylow = Domain::sylow(*full.gamma());
    let restricted = rho.restrict();

    let z_gamma = cocycle_constraints(rho, full, f).kernel(f);
    let z_sylow = cocycle_constraints(&restricted, sylow, f).kernel(f);
    let b_gamma = coboundary_map(rho, full);
    let b_sylow = coboundary_map(&restricted, sylow);
    let b1_gamma = b_gamma.rank(f);
    let b1_sylow = b_sylow.rank(f);

    // generators are ordered r, s, z, so restriction drops the first block
    let res_cols: Vec<Vec<Fe>> = z_gamma.iter().map(|v| v[DIM..].to_vec()).collect();
    let res = FMatrix::from_columns(2 * DIM, &res_cols);
    let joint = res.hstack(&b_sylow).rank(f);
    let lands_in_b = z_gamma.len() - (joint - b1_sylow);

    let fixed = |d: Domain, r: &Representation| {
        let blocks = coboundary_map(r, d);
        blocks.kernel(f).len()
    };
    Ok(LinearCocycleDims {
        z1_gamma: z_gamma.len(),
        b1_gamma,
        z1_sylow: z_sylow.len(),
        b1_sylow,
        fixed_gamma: fixed(full, rho),
        fixed_sylow: fixed(sylow, &restricted),
        restriction_kernel: lands_in_b - b1_gamma,
    })
}

/// Whether `σ` lands in `T·G_α`: `σ(r)` is diagonal and `σ(s)` is `s_α`.
pub fn sigma_in_levi(ce: &Counterexample, act: &SigmaAction) -> bool {
    let rep = act.representation();
    rep.img_r().is_diagonal() && *rep.img_s() == ce.g2().s_delta(ALPHA) && rep.img_z().is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::OMEGA;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    struct Fixture {
        ce: Counterexample,
        vs: VSpace,
        act: SigmaAction,
    }

    fn fixture() -> Fixture {
        let ce = Counterexample::new(7, 3).unwrap();
        let vs = VSpace::with_table(ce.g2());
        let act = SigmaAction::new(&ce).unwrap();
        Fixture { ce, vs, act }
    }

    #[test]
    fn sigma_normalizes_v() {
        let fx = fixture();
        assert!(fx.act.normalizes(&fx.vs));
        assert!(sigma_in_levi(&fx.ce, &fx.act));
    }

    #[test]
    fn cocycle_values_of_the_family() {
        let fx = fixture();
        let f = fx.ce.field();
        for a in fx.ce.family() {
            let th = cocycle_of(&fx.ce.build_rho(a).unwrap(), &fx.act, &fx.vs).unwrap();
            assert!(th.value(GammaElem::R).unwrap().is_identity());
            assert_eq!(*th.value(GammaElem::S).unwrap(), fx.ce.g2().kappa(OMEGA, a));
            assert_eq!(
                *th.value(GammaElem::Z).unwrap(),
                fx.ce.g2().kappa(OMEGA, Fe::ONE)
            );
            assert_eq!(th.pairs_checked(), 784);
            let back = rep_of(&th, &fx.act, f).unwrap();
            assert_eq!(back, fx.ce.build_rho(a).unwrap());
            let gens = vec![
                (Letter::R, th.value(GammaElem::R).unwrap().clone()),
                (Letter::S, th.value(GammaElem::S).unwrap().clone()),
                (Letter::Z, th.value(GammaElem::Z).unwrap().clone()),
            ];
            let rebuilt = Cocycle::from_generator_values(th.domain(), &gens, &fx.act, f).unwrap();
            assert_eq!(rebuilt, th);
        }
    }

    #[test]
    fn trivial_cocycle_and_invalid_tables() {
        let fx = fixture();
        let f = fx.ce.field();
        let full = Domain::full(fx.ce.gamma());
        let triv = Cocycle::trivial(full);
        triv.check_identity(&fx.act, f).unwrap();
        assert_eq!(rep_of(&triv, &fx.act, f).unwrap(), *fx.act.representation());
        assert_eq!(
            restrict(&triv).unwrap(),
            Cocycle::trivial(Domain::sylow(fx.ce.gamma()))
        );

        let mut values = vec![Mat::identity(); full.len()];
        values[full.index(GammaElem::S).unwrap()] = fx.ce.g2().kappa(crate::roots::BETA, Fe::ONE);
        let bad = Cocycle::from_table(full, values).unwrap();
        assert!(bad.check_identity(&fx.act, f).is_err());
        assert!(matches!(
            rep_of(&bad, &fx.act, f),
            Err(Error::RelationFailed(_))
        ));

        let gens = vec![
            (Letter::R, Mat::identity()),
            (Letter::S, fx.ce.g2().kappa(crate::roots::BETA, Fe::ONE)),
            (Letter::Z, Mat::identity()),
        ];
        assert!(matches!(
            Cocycle::from_generator_values(full, &gens, &fx.act, f),
            Err(Error::CocycleIdentity(..))
        ));
    }

    #[test]
    fn non_radical_representations_are_rejected() {
        let fx = fixture();
        let f = fx.ce.field();
        let rho = Representation::new(
            Domain::full(fx.ce.gamma()),
            fx.ce.t().clone(),
            fx.ce.s_alpha().clone(),
            fx.ce
                .g2()
                .kappa(ALPHA, Fe::ONE)
                .mul(&fx.ce.g2().kappa(ALPHA.neg(), Fe::ZERO), f),
            f,
        );
        // κ_α(1) does not commute with t, so this is not even a representation
        assert!(rho.is_err());
        let rho = Representation::new(
            Domain::sylow(fx.ce.gamma()),
            Mat::identity(),
            fx.ce.s_alpha().clone(),
            fx.ce.g2().kappa(OMEGA.neg(), Fe::ONE),
            f,
        )
        .unwrap();
        assert!(matches!(
            cocycle_of(&rho, &fx.act, &fx.vs),
            Err(Error::NotInRadical(_))
        ));
    }

    #[test]
    fn restriction_commutes_with_cocycle_of() {
        let fx = fixture();
        for a in fx.ce.family() {
            let rho = fx.ce.build_rho(a).unwrap();
            let up = cocycle_of(&rho, &fx.act, &fx.vs).unwrap();
            let down = cocycle_of(&rho.restrict(), &fx.act, &fx.vs).unwrap();
            assert_eq!(restrict(&up).unwrap(), down);
        }
    }

    #[test]
    fn search_matches_naive_and_direct_conjugation() {
        let fx = fixture();
        let f = fx.ce.field();
        let mut search = CoboundarySearch::new(&fx.vs, &fx.act);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let a = Fe(rng.gen_range(0..8));
            let b = Fe(rng.gen_range(0..8));
            let sylow = rng.gen_bool(0.5);
            // half the time conjugate ρ_b by a random element of V, so that
            // witnesses exist upstairs too
            let v0 = fx.vs.element_at(rng.gen_range(0..fx.vs.size()));
            let v0_inv = v0.inverse(f).unwrap();
            let mut r1 = fx.ce.build_rho(a).unwrap();
            let mut r2 = fx.ce.build_rho(b).unwrap();
            if rng.gen_bool(0.5) {
                r1 = r2.clone();
                let d = r2.domain();
                r2 = Representation::new(
                    d,
                    v0_inv.mul(r2.img_r(), f).mul(&v0, f),
                    v0_inv.mul(r2.img_s(), f).mul(&v0, f),
                    v0_inv.mul(r2.img_z(), f).mul(&v0, f),
                    f,
                )
                .unwrap();
            }
            if sylow {
                r1 = r1.restrict();
                r2 = r2.restrict();
            }
            let t1 = cocycle_of(&r1, &fx.act, &fx.vs).unwrap();
            let t2 = cocycle_of(&r2, &fx.act, &fx.vs).unwrap();
            let fast = search.search(&t1, &t2).unwrap();
            let naive = cohomologous_naive(&t1, &t2, &fx.act, &fx.vs).unwrap();
            assert_eq!(fast.witness.map(|w| w.0), naive.as_ref().map(|w| w.0));
            // V-conjugacy of the representations, tested directly
            let direct = fx.vs.find_first(|v| {
                let vi = v.inverse(f).unwrap();
                r1.domain()
                    .generators()
                    .iter()
                    .all(|&l| vi.mul(r1.image(l), f).mul(v, f) == *r2.image(l))
            });
            assert_eq!(direct.map(|w| w.0), naive.as_ref().map(|w| w.0));
            if let Some((_, v)) = naive {
                assert!(is_witness(&t1, &t2, &v, &fx.act, f).unwrap());
            }
        }
    }

    #[test]
    fn fiber_at_m3() {
        let rep = fiber_demo(7, 3).unwrap();
        assert_eq!(rep.upstairs_pairs, 28);
        assert_eq!(rep.downstairs.len(), 28);
        assert_eq!(rep.upstairs_classes, 8);
        assert_eq!(rep.downstairs_classes, 1);
        assert_eq!(rep.fiber_lower_bound, 8);
        assert!(rep.sqrt_witness_cross_check);
        assert_eq!(rep.upstairs_scanned, 28 * 32_768);
    }

    #[test]
    fn degenerate_family() {
        let fx = fixture();
        let rep = fiber_demo_for(&fx.ce, &fx.vs, &[Fe::ZERO]).unwrap();
        assert_eq!(rep.fiber_lower_bound, 1);
        assert!(rep.downstairs.is_empty());
    }

    #[test]
    fn abelian_restriction_is_injective() {
        let fx = fixture();
        let f = fx.ce.field();
        for a in fx.ce.family() {
            let d = linear_cocycle_dims(&fx.ce.build_rho(a).unwrap(), f).unwrap();
            assert_eq!(d.b1_gamma, DIM - d.fixed_gamma);
            assert_eq!(d.b1_sylow, DIM - d.fixed_sylow);
            assert!(d.z1_gamma >= d.b1_gamma && d.z1_sylow >= d.b1_sylow);
            assert_eq!(d.restriction_kernel, 0);
        }
    }

    #[test]
    fn abelian_dims_for_the_trivial_module() {
        // ρ trivial on Γ_2 = C_2 × C_2: Z^1 = Hom(C_2 × C_2, 𝔤) in char 2
        let fx = fixture();
        let f = fx.ce.field();
        let triv = Representation::new(
            Domain::full(fx.ce.gamma()),
            Mat::identity(),
            Mat::identity(),
            Mat::identity(),
            f,
        )
        .unwrap();
        let d = linear_cocycle_dims(&triv, f).unwrap();
        assert_eq!((d.b1_gamma, d.b1_sylow), (0, 0));
        assert_eq!(d.z1_sylow, 2 * DIM);
        // Hom(Γ, 𝔤) kills r (odd order, and r is a commutator): same as Γ_2
        assert_eq!(d.z1_gamma, 2 * DIM);
        assert_eq!(d.restriction_kernel, 0);
    }
}
