//! The family `ρ_a : Γ → G2` and the checks behind its two halves:
//! restrictions to `Γ_2` are all conjugate, while the `ρ_a` themselves are
//! pairwise non-conjugate.
//!
//! `ρ_a(r) = t`, `ρ_a(s) = s_α κ_ω(a)`, `ρ_a(z) = κ_ω(1)`, where `t = α^∨(μ)`
//! for `μ` of multiplicative order `q`.
//!
//! Any conjugator `g` with `g·ρ_a = ρ_b` centralizes `t`, and the centralizer
//! of `t` is `T·G_ω` over an algebraically closed field. The exhaustive search
//! therefore runs over all products `h·m` with `h ∈ T`, `m ∈ G_ω`. Whether
//! the GF(2^m)-points of `C_G(t)` are exactly those products is not checked;
//! the Lie-algebra fixed-space dimension is, and a randomized word search
//! over the whole group backs the exhaustive one.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::gamma::{Domain, Gamma, GammaElem, Letter};
use crate::gf2m::{Fe, Gf2m};
use crate::group::{enumerate_subgroup, G2};
use crate::linalg::FMatrix;
use crate::matrix::{GrpElem, Mat, DIM};
use crate::roots::{all_roots, pairing, Root, ALPHA, OMEGA};

/// A homomorphism from Γ (or Γ_2) given by generator images; the defining
/// relations are verified on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    domain: Domain,
    img_r: GrpElem,
    img_s: GrpElem,
    img_z: GrpElem,
}

impl Representation {
    /// For a Sylow domain `img_r` is ignored and stored as the identity.
    pub fn new(
        domain: Domain,
        img_r: GrpElem,
        img_s: GrpElem,
        img_z: GrpElem,
        f: &Gf2m,
    ) -> Result<Self, Error> {
        let rep = Representation {
            domain,
            img_r: if domain.sylow { Mat::identity() } else { img_r },
            img_s,
            img_z,
        };
        if let Some((name, _)) = rep.relation_checks(f).into_iter().find(|(_, ok)| !ok) {
            return Err(Error::RelationFailed(name));
        }
        Ok(rep)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn image(&self, l: Letter) -> &GrpElem {
        match l {
            Letter::R => &self.img_r,
            Letter::S => &self.img_s,
            Letter::Z => &self.img_z,
        }
    }

    pub fn img_r(&self) -> &GrpElem {
        &self.img_r
    }

    pub fn img_s(&self) -> &GrpElem {
        &self.img_s
    }

    pub fn img_z(&self) -> &GrpElem {
        &self.img_z
    }

    /// Each defining relator of the domain, evaluated on the images.
    pub fn relation_checks(&self, f: &Gf2m) -> Vec<(String, bool)> {
        self.domain
            .relators()
            .into_iter()
            .map(|(name, word)| {
                let v = word
                    .iter()
                    .fold(Mat::identity(), |acc, &l| acc.mul(self.image(l), f));
                (name, v.is_identity())
            })
            .collect()
    }

    /// `ρ(r^i s^j z^k) = ρ(r)^i ρ(s)^j ρ(z)^k`.
    pub fn eval(&self, x: GammaElem, f: &Gf2m) -> Result<GrpElem, Error> {
        if !self.domain.contains(x) {
            return Err(Error::DomainMismatch);
        }
        let mut out = self.img_r.pow(x.i as u64, f);
        if x.j == 1 {
            out = out.mul(&self.img_s, f);
        }
        if x.k == 1 {
            out = out.mul(&self.img_z, f);
        }
        Ok(out)
    }

    pub fn restrict(&self) -> Representation {
        Representation {
            domain: Domain::sylow(*self.domain.gamma()),
            img_r: Mat::identity(),
            img_s: self.img_s.clone(),
            img_z: self.img_z.clone(),
        }
    }

    /// Whether `g ρ(γ) g^-1 = other(γ)` on every generator.
    pub fn conjugated_by(&self, g: &GrpElem, other: &Representation, f: &Gf2m) -> bool {
        self.domain
            .generators()
            .iter()
            .all(|&l| Mat::products_equal(g, self.image(l), other.image(l), g, f))
    }
}

/// The subgroups the non-conjugacy argument runs over.
#[derive(Clone, Debug)]
pub struct Enumerations {
    pub torus: Vec<GrpElem>,
    pub g_omega: Vec<GrpElem>,
    pub g_alpha: Vec<GrpElem>,
}

/// Kernel dimension of `Ad(t) - 1` on the Lie algebra over GF(2^m).
pub fn centralizer_fixed_dim(t: &GrpElem, f: &Gf2m) -> usize {
    let m = FMatrix::from_fn(DIM, DIM, |i, j| {
        t.get(i, j) + if i == j { Fe::ONE } else { Fe::ZERO }
    });
    m.kernel(f).len()
}

/// Roots `δ` with `<δ, α^∨> ≡ 0 (mod q)`: the root spaces fixed by
/// `α^∨(μ)` for `μ` of order `q`.
pub fn roots_fixed_mod_q(q: u32) -> Vec<Root> {
    all_roots()
        .into_iter()
        .filter(|&d| pairing(d, ALPHA).rem_euclid(q as i32) == 0)
        .collect()
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    g2: G2,
    gamma: Gamma,
    mu: Fe,
    t: GrpElem,
    s_alpha: GrpElem,
    omega_one: GrpElem,
}

/// `t = α^∨(μ)` with `μ` the first field element of order `q`.
pub fn build_t(g2: &G2, q: u32) -> Result<GrpElem, Error> {
    let f = g2.field();
    let mu = f
        .element_of_order(q as u64)
        .map_err(|_| Error::QNotDividing { q, m: f.degree() })?;
    g2.coroot_elt(ALPHA, mu)
}

impl Counterexample {
    /// `q` odd, at least 3, dividing `2^m - 1`.
    pub fn new(q: u32, m: u32) -> Result<Self, Error> {
        Self::with_group(G2::new(m)?, q)
    }

    pub fn with_group(g2: G2, q: u32) -> Result<Self, Error> {
        let gamma = Gamma::new(q)?;
        let f = g2.field();
        let mu = f
            .element_of_order(q as u64)
            .map_err(|_| Error::QNotDividing { q, m: f.degree() })?;
        let t = g2.coroot_elt(ALPHA, mu)?;
        let s_alpha = g2.s_delta(ALPHA);
        let omega_one = g2.kappa(OMEGA, Fe::ONE);
        Ok(Counterexample {
            g2,
            gamma,
            mu,
            t,
            s_alpha,
            omega_one,
        })
    }

    pub fn g2(&self) -> &G2 {
        &self.g2
    }

    pub fn field(&self) -> &Gf2m {
        self.g2.field()
    }

    pub fn gamma(&self) -> Gamma {
        self.gamma
    }

    pub fn q(&self) -> u32 {
        self.gamma.q()
    }

    pub fn mu(&self) -> Fe {
        self.mu
    }

    pub fn t(&self) -> &GrpElem {
        &self.t
    }

    pub fn s_alpha(&self) -> &GrpElem {
        &self.s_alpha
    }

    pub fn build_rho(&self, a: Fe) -> Result<Representation, Error> {
        let img_s = self.s_alpha.mul(&self.g2.kappa(OMEGA, a), self.field());
        Representation::new(
            Domain::full(self.gamma),
            self.t.clone(),
            img_s,
            self.omega_one.clone(),
            self.field(),
        )
    }

    /// `u(x) = κ_β(x) κ_{3α+β}(x)`.
    pub fn conj_u(&self, x: Fe) -> GrpElem {
        let a = self.g2.kappa(Root::new(0, 1), x);
        let b = self.g2.kappa(Root::new(3, 1), x);
        a.mul(&b, self.field())
    }

    /// `u(√a)`, after checking it conjugates `ρ_0` to `ρ_a` on `s`, `z` and
    /// `sz`.
    pub fn verify_restriction_conjugacy(&self, a: Fe) -> Result<GrpElem, Error> {
        let f = self.field();
        let g = self.conj_u(f.sqrt(a));
        let rho0 = self.build_rho(Fe::ZERO)?;
        let rhoa = self.build_rho(a)?;
        for x in [GammaElem::S, GammaElem::Z, GammaElem::SZ] {
            let lhs = rho0.eval(x, f)?;
            let rhs = rhoa.eval(x, f)?;
            if !Mat::products_equal(&g, &lhs, &rhs, &g, f) {
                return Err(Error::RelationFailed(format!(
                    "u(sqrt a) ρ_0({x}) u^-1 = ρ_a({x}) at a = {a}"
                )));
            }
        }
        Ok(g)
    }

    pub fn enumerations(&self) -> Result<Enumerations, Error> {
        let f = self.field();
        let n = f.size() as usize;
        let sl2 = n * (n * n - 1);
        let torus_order = (n - 1) * (n - 1);
        Ok(Enumerations {
            torus: enumerate_subgroup(f, &self.g2.torus_generators()?, torus_order)?,
            g_omega: enumerate_subgroup(f, &self.g2.rank_one_generators(OMEGA), sl2)?,
            g_alpha: enumerate_subgroup(f, &self.g2.rank_one_generators(ALPHA), sl2)?,
        })
    }

    /// The field elements `a` for which `ρ_a` is built, in integer order.
    pub fn family(&self) -> Vec<Fe> {
        self.field().elements().collect()
    }

    /// Exhaustive search over `G_ω` for `g` with
    /// `g (κ_ω(a), κ_ω(1)) g^-1 = (κ_ω(b), κ_ω(1))`.
    pub fn sl2_pair_test(&self, a: Fe, b: Fe, g_omega: &[GrpElem]) -> Option<GrpElem> {
        let f = self.field();
        let xa = self.g2.kappa(OMEGA, a);
        let xb = self.g2.kappa(OMEGA, b);
        g_omega
            .par_iter()
            .find_first(|g| {
                Mat::products_equal(g, &xa, &xb, g, f)
                    && Mat::products_equal(g, &self.omega_one, &self.omega_one, g, f)
            })
            .cloned()
    }

    pub fn structural_checks(&self, en: &Enumerations) -> StructuralReport {
        let f = self.field();
        let g_omega: HashSet<&GrpElem> = en.g_omega.iter().collect();
        let intersection = en.g_alpha.iter().filter(|x| g_omega.contains(x)).count();

        let x_alpha = self.g2.kappa(ALPHA, Fe::ONE);
        let ker_alpha: Vec<&GrpElem> = en
            .torus
            .iter()
            .filter(|h| h.commutes_with(&x_alpha, f))
            .collect();
        let ker_alpha_in_g_omega = ker_alpha.iter().all(|h| g_omega.contains(h));
        // α(h) read off the diagonal must agree with the conjugation test
        let ker_alpha_by_character = en
            .torus
            .iter()
            .filter(|h| self.g2.root_character(h, ALPHA) == Fe::ONE)
            .count();
        let s_alpha_centralizer: Vec<&GrpElem> = en
            .torus
            .iter()
            .filter(|h| h.commutes_with(&self.s_alpha, f))
            .collect();

        let mut generator_pairs = 0u64;
        let mut commuting_pairs = 0u64;
        for da in [ALPHA, ALPHA.neg()] {
            for dw in [OMEGA, OMEGA.neg()] {
                for x in f.elements() {
                    let gx = self.g2.kappa(da, x);
                    for y in f.elements() {
                        generator_pairs += 1;
                        if gx.commutes_with(&self.g2.kappa(dw, y), f) {
                            commuting_pairs += 1;
                        }
                    }
                }
            }
        }
        StructuralReport {
            g_alpha_order: en.g_alpha.len(),
            g_omega_order: en.g_omega.len(),
            torus_order: en.torus.len(),
            intersection_size: intersection,
            ker_alpha_size: ker_alpha.len(),
            ker_alpha_by_character,
            ker_alpha_in_g_omega,
            s_alpha_centralizer_size: s_alpha_centralizer.len(),
            s_alpha_centralizer_is_ker_alpha: s_alpha_centralizer == ker_alpha,
            generator_pairs,
            commuting_pairs,
        }
    }

    /// Words of `length` random root elements, `words` of them, each drawn
    /// from its own ChaCha stream so the outcome does not depend on
    /// scheduling. A word counts as a hit if it conjugates `ρ_a` to `ρ_b`
    /// for some listed pair.
    pub fn random_word_check(
        &self,
        pairs: &[(Fe, Fe)],
        words: u64,
        length: usize,
        seed: u64,
    ) -> Result<RandomWordReport, Error> {
        let f = self.field();
        let roots = all_roots();
        let reps: Vec<(Representation, Representation)> = pairs
            .iter()
            .map(|&(a, b)| Ok((self.build_rho(a)?, self.build_rho(b)?)))
            .collect::<Result<_, Error>>()?;
        let outcome: Vec<(bool, Option<u64>)> = (0..words)
            .into_par_iter()
            .map(|w| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(w);
                let mut g = Mat::identity();
                for _ in 0..length {
                    let d = roots[rng.gen_range(0..roots.len())];
                    let c = Fe(rng.gen_range(1..f.size()) as u16);
                    g = g.mul(&self.g2.kappa(d, c), f);
                }
                let centralizes =
                    g.commutes_with(&self.t, f) && g.commutes_with(&self.omega_one, f);
                let hit = centralizes
                    && reps
                        .iter()
                        .any(|(ra, rb)| Mat::products_equal(&g, ra.img_s(), rb.img_s(), &g, f));
                (centralizes, hit.then_some(w))
            })
            .collect();
        Ok(RandomWordReport {
            words,
            length,
            seed,
            pairs: pairs.len(),
            centralizing_words: outcome.iter().filter(|(c, _)| *c).count() as u64,
            first_hit: outcome.iter().find_map(|(_, h)| *h),
        })
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StructuralReport {
    pub g_alpha_order: usize,
    pub g_omega_order: usize,
    pub torus_order: usize,
    pub intersection_size: usize,
    pub ker_alpha_size: usize,
    pub ker_alpha_by_character: usize,
    pub ker_alpha_in_g_omega: bool,
    pub s_alpha_centralizer_size: usize,
    pub s_alpha_centralizer_is_ker_alpha: bool,
    pub generator_pairs: u64,
    pub commuting_pairs: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RandomWordReport {
    pub words: u64,
    pub length: usize,
    pub seed: u64,
    pub pairs: usize,
    pub centralizing_words: u64,
    pub first_hit: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// `(h index, m index)` of the canonically least witness.
    pub witness: Option<(usize, usize, GrpElem)>,
    pub scanned: usize,
}

/// Exhaustive conjugator search over `T × G_ω` for the `ρ_a` family.
///
/// `ρ_a(r) = t` and `ρ_a(z) = κ_ω(1)` do not depend on `a`, so the
/// candidates satisfying those two equations are found once; each pair
/// then only tests the `s` equation on the survivors.
pub struct ConjugatorSearch<'a> {
    ce: &'a Counterexample,
    candidates: usize,
    survivors: Vec<(usize, usize, GrpElem)>,
}

impl<'a> ConjugatorSearch<'a> {
    pub fn new(ce: &'a Counterexample, en: &Enumerations) -> Self {
        let f = ce.field();
        let survivors: Vec<(usize, usize, GrpElem)> = en
            .torus
            .par_iter()
            .enumerate()
            .flat_map_iter(|(hi, h)| {
                en.g_omega.iter().enumerate().filter_map(move |(mi, m)| {
                    let g = h.mul(m, f);
                    (g.commutes_with(&ce.t, f) && g.commutes_with(&ce.omega_one, f))
                        .then_some((hi, mi, g))
                })
            })
            .collect();
        ConjugatorSearch {
            ce,
            candidates: en.torus.len() * en.g_omega.len(),
            survivors,
        }
    }

    pub fn candidates(&self) -> usize {
        self.candidates
    }

    /// Candidates conjugating `t` and `κ_ω(1)` to themselves.
    pub fn survivors(&self) -> usize {
        self.survivors.len()
    }

    pub fn search(&self, a: Fe, b: Fe) -> Result<SearchOutcome, Error> {
        let f = self.ce.field();
        let ra = self.ce.build_rho(a)?;
        let rb = self.ce.build_rho(b)?;
        let witness = self
            .survivors
            .par_iter()
            .find_first(|(_, _, g)| Mat::products_equal(g, ra.img_s(), rb.img_s(), g, f))
            .cloned();
        Ok(SearchOutcome {
            witness,
            scanned: self.candidates,
        })
    }
}

/// Unordered pairs `a < b` of field elements.
pub fn distinct_pairs(values: &[Fe]) -> Vec<(Fe, Fe)> {
    let mut out = Vec::new();
    for (i, &a) in values.iter().enumerate() {
        for &b in &values[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ce73() -> Counterexample {
        Counterexample::new(7, 3).unwrap()
    }

    #[test]
    fn t_has_order_q() {
        let ce = ce73();
        assert_eq!(ce.t().order(100, ce.field()), Some(7));
        let ce54 = Counterexample::new(5, 4).unwrap();
        assert_eq!(ce54.t().order(100, ce54.field()), Some(5));
        assert_eq!(
            Counterexample::new(5, 3).err(),
            Some(Error::QNotDividing { q: 5, m: 3 })
        );
        let g2 = G2::new(3).unwrap();
        assert!(build_t(&g2, 5).is_err());
        assert_eq!(build_t(&g2, 7).unwrap(), *ce.t());
    }

    #[test]
    fn rho_family_is_well_defined() {
        let ce = ce73();
        let f = ce.field();
        assert_eq!(ce.build_rho(Fe::ZERO).unwrap().img_s(), ce.s_alpha());
        for a in ce.family() {
            let rho = ce.build_rho(a).unwrap();
            assert!(rho.relation_checks(f).iter().all(|(_, ok)| *ok));
            assert_eq!(rho.relation_checks(f).len(), 6);
            assert_eq!(*rho.img_z(), ce.g2().kappa(OMEGA, Fe::ONE));
        }
        // a bad image is rejected
        let bad = Representation::new(
            Domain::full(ce.gamma()),
            ce.t().clone(),
            ce.g2().kappa(ALPHA, Fe::ONE),
            Mat::identity(),
            f,
        );
        assert!(matches!(bad, Err(Error::RelationFailed(_))));
    }

    #[test]
    fn u_identities() {
        let ce = ce73();
        let f = ce.field();
        let g2 = ce.g2();
        assert!(ce.conj_u(Fe::ZERO).is_identity());
        for x in f.elements() {
            let u = ce.conj_u(x);
            let u_inv = u.inverse(f).unwrap();
            let lhs = u.conjugate(ce.s_alpha(), &u_inv, f);
            let rhs = ce.s_alpha().mul(&g2.kappa(OMEGA, f.square(x)), f);
            assert_eq!(lhs, rhs);
            for b in f.elements() {
                assert!(u.commutes_with(&g2.kappa(OMEGA, b), f));
            }
        }
    }

    #[test]
    fn restriction_conjugacy_for_every_a() {
        let ce = ce73();
        assert!(ce
            .verify_restriction_conjugacy(Fe::ZERO)
            .unwrap()
            .is_identity());
        for a in ce.family() {
            ce.verify_restriction_conjugacy(a).unwrap();
        }
    }

    #[test]
    fn centralizer_dimensions() {
        let ce = ce73();
        assert_eq!(centralizer_fixed_dim(ce.t(), ce.field()), 4);
        assert_eq!(roots_fixed_mod_q(7), vec![OMEGA, OMEGA.neg()]);
        let ce54 = Counterexample::new(5, 4).unwrap();
        assert_eq!(centralizer_fixed_dim(ce54.t(), ce54.field()), 4);
        let control = Counterexample::new(3, 2).unwrap();
        assert_eq!(centralizer_fixed_dim(control.t(), control.field()), 8);
        assert_eq!(roots_fixed_mod_q(3).len(), 6);
    }

    #[test]
    fn structural_steps_at_m3() {
        let ce = ce73();
        let en = ce.enumerations().unwrap();
        let rep = ce.structural_checks(&en);
        assert_eq!(rep.g_alpha_order, 504);
        assert_eq!(rep.g_omega_order, 504);
        assert_eq!(rep.torus_order, 49);
        assert_eq!(rep.intersection_size, 1);
        assert_eq!(rep.ker_alpha_size, 7);
        assert_eq!(rep.ker_alpha_by_character, 7);
        assert!(rep.ker_alpha_in_g_omega);
        assert!(rep.s_alpha_centralizer_is_ker_alpha);
        assert_eq!(rep.generator_pairs, rep.commuting_pairs);
    }

    #[test]
    fn sl2_pairs() {
        let ce = ce73();
        let en = ce.enumerations().unwrap();
        let vals = ce.family();
        assert!(ce.sl2_pair_test(Fe(3), Fe(3), &en.g_omega).is_some());
        for (a, b) in distinct_pairs(&vals) {
            assert!(ce.sl2_pair_test(a, b, &en.g_omega).is_none());
        }
    }

    #[test]
    fn prefiltered_search_matches_naive_scan() {
        let ce = ce73();
        let f = ce.field();
        let en = ce.enumerations().unwrap();
        let search = ConjugatorSearch::new(&ce, &en);
        assert_eq!(search.candidates(), 24_696);
        for (a, b) in [(Fe(0), Fe(1)), (Fe(2), Fe(5)), (Fe(4), Fe(4))] {
            let ra = ce.build_rho(a).unwrap();
            let rb = ce.build_rho(b).unwrap();
            let naive = en.torus.iter().enumerate().find_map(|(hi, h)| {
                en.g_omega.iter().enumerate().find_map(|(mi, m)| {
                    let g = h.mul(m, f);
                    let g_inv = g.inverse(f).unwrap();
                    let all = [GammaElem::R, GammaElem::S, GammaElem::Z].iter().all(|&x| {
                        g.conjugate(&ra.eval(x, f).unwrap(), &g_inv, f) == rb.eval(x, f).unwrap()
                    });
                    all.then_some((hi, mi, g))
                })
            });
            assert_eq!(search.search(a, b).unwrap().witness, naive);
        }
    }

    #[test]
    fn random_words_are_deterministic() {
        let ce = ce73();
        let pairs = distinct_pairs(&ce.family());
        let a = ce.random_word_check(&pairs, 200, 8, 7).unwrap();
        let b = ce.random_word_check(&pairs, 200, 8, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.first_hit, None);
    }
}
