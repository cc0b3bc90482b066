//! Named check suites and the JSON verification report.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chevalley::{ChevalleyBasis, H_ALPHA, H_BETA};
use crate::cohomology::{self, CoboundarySearch, SigmaAction};
use crate::counterexample::{self, distinct_pairs, ConjugatorSearch, Counterexample, Enumerations};
use crate::error::Error;
use crate::gamma::GammaElem;
use crate::gf2m::{least_irreducible, Fe, Gf2m};
use crate::group::{commutator_pairs, enumerate_subgroup, G2};
use crate::matrix::Mat;
use crate::roots::{all_roots, root_string, sum_root, Root, ALPHA, BETA, OMEGA};
use crate::unipotent::VSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Algebra,
    Group,
    Counterexample,
    Cohomology,
    Control,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Algebra,
        Suite::Group,
        Suite::Counterexample,
        Suite::Cohomology,
        Suite::Control,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Group => "group",
            Suite::Counterexample => "counterexample",
            Suite::Cohomology => "cohomology",
            Suite::Control => "control",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairMode {
    All,
    Sample,
}

impl FromStr for PairMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" => Ok(PairMode::All),
            "sample" => Ok(PairMode::Sample),
            _ => Err(Error::Config(format!("unknown pair mode {s:?}"))),
        }
    }
}

/// Number of pairs kept in sample mode.
pub const SAMPLE_PAIRS: usize = 8;
pub const DEFAULT_RANDOM_WORDS: u64 = 100_000;
pub const RANDOM_WORD_LENGTH: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub q: u32,
    pub m: u32,
    pub suites: Vec<Suite>,
    pub pairs: PairMode,
    pub seed: u64,
    pub random_words: u64,
    #[serde(skip)]
    pub timings: bool,
}

impl RunConfig {
    /// Every applicable suite: all five when `q > 3`, only the control when
    /// `q = 3`.
    pub fn new(q: u32, m: u32) -> Self {
        let suites = if q == 3 {
            vec![Suite::Control]
        } else {
            Suite::ALL.to_vec()
        };
        RunConfig {
            q,
            m,
            suites,
            pairs: PairMode::All,
            seed: 0,
            random_words: DEFAULT_RANDOM_WORDS,
            timings: false,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.q < 3 || self.q.is_multiple_of(2) {
            return Err(Error::InvalidQ(self.q));
        }
        let f = Gf2m::new(self.m)?;
        if f.group_order() % self.q as u64 != 0 {
            return Err(Error::QNotDividing {
                q: self.q,
                m: self.m,
            });
        }
        if self.suites.is_empty() {
            return Err(Error::Config("no suites selected".into()));
        }
        if self.q == 3 {
            if !self.suites.contains(&Suite::Control) {
                return Err(Error::Config(
                    "q = 3 is only admitted with the control suite".into(),
                ));
            }
            if let Some(s) = self
                .suites
                .iter()
                .find(|s| matches!(s, Suite::Counterexample | Suite::Cohomology))
            {
                return Err(Error::Config(format!("suite {s} needs q > 3")));
            }
        }
        Ok(())
    }

    /// The control runs at `(3, m)` when `3 | 2^m - 1`, else at `(3, 2)`.
    pub fn control_degree(&self) -> u32 {
        if self.m.is_multiple_of(2) {
            self.m
        } else {
            2
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ExpectedFail,
    UnexpectedPass,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ExpectedFail => "expected-fail",
            Verdict::UnexpectedPass => "unexpected-pass",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub suite: Suite,
    pub claim: String,
    pub params: Value,
    pub candidates: Option<u64>,
    pub control: bool,
    pub verdict: Verdict,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckRecord {
    /// Whether this record is what a correct run produces.
    pub fn ok(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::ExpectedFail)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub checks: Vec<CheckRecord>,
    pub notes: Vec<String>,
    pub overall: Verdict,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check, for terminals.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let cand = c
                .candidates
                .map(|n| format!(" [{n} candidates]"))
                .unwrap_or_default();
            let time = c.elapsed_ms.map(|t| format!(" {t} ms")).unwrap_or_default();
            out.push_str(&format!(
                "{:<15} {:<15} {}{}{}\n",
                c.verdict.to_string(),
                c.suite.name(),
                c.name,
                cand,
                time
            ));
        }
        out.push_str(&format!(
            "overall: {} ({} checks, q = {}, m = {})\n",
            self.overall,
            self.checks.len(),
            self.config.q,
            self.config.m
        ));
        out
    }
}

struct Runner {
    config: RunConfig,
    checks: Vec<CheckRecord>,
    ce: Option<Counterexample>,
    enums: Option<Enumerations>,
}

struct Outcome {
    passed: bool,
    candidates: Option<u64>,
    detail: Value,
}

fn outcome(passed: bool, candidates: impl Into<Option<u64>>, detail: Value) -> Outcome {
    Outcome {
        passed,
        candidates: candidates.into(),
        detail,
    }
}

impl Runner {
    fn record(
        &mut self,
        suite: Suite,
        name: &str,
        claim: &str,
        params: Value,
        control: bool,
        body: impl FnOnce(&mut Self) -> Result<Outcome, Error>,
    ) -> Result<(), Error> {
        let start = Instant::now();
        let out = body(self)?;
        let elapsed = start.elapsed().as_millis() as u64;
        let verdict = match (control, out.passed) {
            (false, true) => Verdict::Pass,
            (false, false) => Verdict::Fail,
            (true, false) => Verdict::ExpectedFail,
            (true, true) => Verdict::UnexpectedPass,
        };
        self.checks.push(CheckRecord {
            name: name.to_string(),
            suite,
            claim: claim.to_string(),
            params,
            candidates: out.candidates,
            control,
            verdict,
            detail: out.detail,
            elapsed_ms: self.config.timings.then_some(elapsed),
        });
        Ok(())
    }

    fn qm(&self) -> Value {
        json!({"q": self.config.q, "m": self.config.m})
    }

    fn ce(&mut self) -> Result<&Counterexample, Error> {
        if self.ce.is_none() {
            self.ce = Some(Counterexample::new(self.config.q, self.config.m)?);
        }
        Ok(self.ce.as_ref().unwrap())
    }

    fn enums(&mut self) -> Result<Enumerations, Error> {
        if self.enums.is_none() {
            let e = self.ce()?.enumerations()?;
            self.enums = Some(e);
        }
        Ok(self.enums.clone().unwrap())
    }

    /// All unordered pairs of distinct field elements, or a seeded sample.
    fn pairs(&self, values: &[Fe]) -> Vec<(Fe, Fe)> {
        let all = distinct_pairs(values);
        match self.config.pairs {
            PairMode::All => all,
            PairMode::Sample => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
                let mut picked: Vec<(Fe, Fe)> = all
                    .choose_multiple(&mut rng, SAMPLE_PAIRS)
                    .copied()
                    .collect();
                picked.sort();
                picked
            }
        }
    }

    fn algebra(&mut self) -> Result<(), Error> {
        let m = self.config.m;
        self.record(
            Suite::Algebra,
            "field-modulus",
            "GF(2^m) is built on the least irreducible polynomial of degree m",
            json!({"m": m}),
            false,
            |_| {
                let f = Gf2m::new(m)?;
                let least = least_irreducible(m);
                Ok(outcome(
                    f.modulus() == least,
                    None,
                    json!({"modulus": Gf2m::format_poly(f.modulus()), "generator": f.generator()}),
                ))
            },
        )?;
        self.record(
            Suite::Algebra,
            "field-multiplication",
            "log-table multiplication agrees with schoolbook multiplication",
            json!({"m": m}),
            false,
            |_| {
                let f = Gf2m::new(m)?;
                let others: Vec<Fe> = if m <= 10 {
                    f.elements().collect()
                } else {
                    f.additive_basis()
                        .into_iter()
                        .chain([f.generator()])
                        .collect()
                };
                let mut n = 0u64;
                let mut bad = 0u64;
                for a in f.elements() {
                    for &b in &others {
                        n += 1;
                        if f.mul(a, b) != f.mul_slow(a, b) {
                            bad += 1;
                        }
                    }
                }
                Ok(outcome(bad == 0, n, json!({"mismatches": bad})))
            },
        )?;
        let basis = ChevalleyBasis::build()?;
        self.record(
            Suite::Algebra,
            "chevalley-jacobi",
            "the integer structure constants satisfy the Jacobi identity on all basis triples",
            json!({}),
            false,
            |_| {
                let r = basis.check_jacobi();
                Ok(outcome(
                    r.is_ok(),
                    14u64.pow(3),
                    json!({"error": r.err().map(|e| e.to_string())}),
                ))
            },
        )?;
        self.record(
            Suite::Algebra,
            "chevalley-structure-constants",
            "N(d,e) = -N(e,d) and |N(d,e)| = p+1 where e-pd, ..., e+qd is the d-string through e",
            json!({}),
            false,
            |_| {
                let mut n = 0u64;
                let mut bad = Vec::new();
                for d in all_roots() {
                    for e in all_roots() {
                        if sum_root(d, e).is_none() {
                            continue;
                        }
                        n += 1;
                        let (p, _) = root_string(d, e)?;
                        let v = basis.n(d, e);
                        if v.abs() != (p + 1) as i64 || basis.n(e, d) != -v {
                            bad.push(format!("N{d}{e} = {v}"));
                        }
                    }
                }
                Ok(outcome(
                    bad.is_empty(),
                    n,
                    json!({"extraspecial_signs": basis.extraspecial_signs(), "failures": bad}),
                ))
            },
        )?;
        self.record(
            Suite::Algebra,
            "chevalley-divided-powers",
            "(ad e_d)^n / n! is integral, vanishes for n >= 4, and has top degree 3 (short) or 2 (long)",
            json!({}),
            false,
            |_| {
                let mut bad = Vec::new();
                for d in all_roots() {
                    let fam = basis.divided_powers(d)?;
                    let zero = |n: usize| fam.get(n).iter().all(|row| row.iter().all(|&x| x == 0));
                    let top = if d.is_long() { 2 } else { 3 };
                    if !zero(4) || zero(top) || (top == 2 && !zero(3)) {
                        bad.push(d.to_string());
                    }
                }
                Ok(outcome(bad.is_empty(), 12u64, json!({"failures": bad})))
            },
        )?;
        self.record(
            Suite::Algebra,
            "adjoint-homomorphism",
            "ad[x, y] = [ad x, ad y] on all basis pairs",
            json!({}),
            false,
            |_| {
                Ok(outcome(
                    basis.check_ad_homomorphism(),
                    14u64 * 14,
                    Value::Null,
                ))
            },
        )
    }

    fn group(&mut self) -> Result<(), Error> {
        let g2 = G2::new(self.config.m)?;
        let f = g2.field().clone();
        let params = json!({"m": self.config.m});
        self.record(
            Suite::Group,
            "root-group-additivity",
            "k_d(a) k_d(b) = k_d(a+b) for every root d",
            params.clone(),
            false,
            |_| {
                let mut n = 0u64;
                let mut bad = Vec::new();
                for d in all_roots() {
                    let table = g2.kappa_table(d);
                    for a in f.elements() {
                        for b in f.elements() {
                            n += 1;
                            if table[a.0 as usize].mul(&table[b.0 as usize], &f)
                                != table[(a + b).0 as usize]
                            {
                                bad.push(format!("{d} {a} {b}"));
                            }
                        }
                    }
                }
                Ok(outcome(bad.is_empty(), n, json!({"failures": bad})))
            },
        )?;
        self.record(
            Suite::Group,
            "torus-conjugation",
            "h k_d(a) h^-1 = k_d(d(h) a) for every coroot element h of a simple coroot",
            params.clone(),
            false,
            |_| {
                let mut n = 0u64;
                let mut bad = Vec::new();
                for s in [ALPHA, BETA] {
                    for lam in f.nonzero() {
                        let h = g2.coroot_elt(s, lam)?;
                        let h_inv = g2.coroot_elt(s, f.inv(lam)?)?;
                        for d in all_roots() {
                            let chi = g2.root_character(&h, d);
                            for a in f.elements() {
                                n += 1;
                                if h.conjugate(&g2.kappa(d, a), &h_inv, &f)
                                    != g2.kappa(d, f.mul(chi, a))
                                {
                                    bad.push(format!("{s} {lam} {d} {a}"));
                                }
                            }
                        }
                    }
                }
                Ok(outcome(bad.is_empty(), n, json!({"failures": bad})))
            },
        )?;
        self.record(
            Suite::Group,
            "coroot-elements",
            "n_d(l) n_d(1) is the diagonal element acting on e_e by l^<e, d^v>",
            params.clone(),
            false,
            |_| {
                let mut n = 0u64;
                let mut bad = Vec::new();
                for d in all_roots() {
                    for lam in f.nonzero() {
                        n += 1;
                        if g2.coroot_elt(d, lam)? != g2.coroot_diagonal(d, lam)? {
                            bad.push(format!("{d} {lam}"));
                        }
                    }
                }
                Ok(outcome(bad.is_empty(), n, json!({"failures": bad})))
            },
        )?;
        self.record(
            Suite::Group,
            "commutator-formula",
            "the Chevalley commutator formula holds for all ordered pairs of roots with d+e != 0",
            params.clone(),
            false,
            |_| {
                let mut n = 0u64;
                let mut bad = Vec::new();
                let pairs = commutator_pairs();
                for &(d, e) in &pairs {
                    let rep = g2.commutator_check(d, e)?;
                    n += rep.cases;
                    if !rep.passed() {
                        bad.push(format!("{d} {e}"));
                    }
                }
                Ok(outcome(
                    bad.is_empty(),
                    n,
                    json!({"root_pairs": pairs.len(), "failures": bad}),
                ))
            },
        )?;
        self.record(
            Suite::Group,
            "s-alpha-involution",
            "s_a = k_a(1) k_-a(1) k_a(1) has order 2",
            params.clone(),
            false,
            |_| {
                let s = g2.s_delta(ALPHA);
                Ok(outcome(s.order(4, &f) == Some(2), None, Value::Null))
            },
        )?;
        self.record(
            Suite::Group,
            "generators-are-automorphisms",
            "every root element k_d(a) preserves the Lie bracket",
            params.clone(),
            false,
            |_| {
                let mut n = 0u64;
                let mut bad = Vec::new();
                for d in all_roots() {
                    for a in f.additive_basis() {
                        n += 1;
                        if !g2.is_lie_automorphism(&g2.kappa(d, a)) {
                            bad.push(format!("{d} {a}"));
                        }
                    }
                }
                Ok(outcome(bad.is_empty(), n, json!({"failures": bad})))
            },
        )?;
        let size = f.size() as usize;
        self.record(
            Suite::Group,
            "subgroup-orders",
            "|G_a| = |G_w| = 2^m (2^2m - 1) and |T| = (2^m - 1)^2 by closure enumeration",
            params,
            false,
            |_| {
                let sl2 = size * (size * size - 1);
                let torus = (size - 1) * (size - 1);
                let ga = enumerate_subgroup(&f, &g2.rank_one_generators(ALPHA), sl2)?.len();
                let gw = enumerate_subgroup(&f, &g2.rank_one_generators(OMEGA), sl2)?.len();
                let t = enumerate_subgroup(&f, &g2.torus_generators()?, torus)?.len();
                Ok(outcome(
                    ga == sl2 && gw == sl2 && t == torus,
                    (ga + gw + t) as u64,
                    json!({"g_alpha": ga, "g_omega": gw, "torus": t}),
                ))
            },
        )
    }

    fn counterexample(&mut self) -> Result<(), Error> {
        let ce = self.ce()?.clone();
        let f = ce.field().clone();
        let qm = self.qm();
        let q = self.config.q;
        self.record(
            Suite::Counterexample,
            "t-order",
            "t = a^v(mu) has order q",
            qm.clone(),
            false,
            |_| {
                let ord = ce.t().order(q as u64 + 1, &f);
                Ok(outcome(
                    ord == Some(q as u64),
                    None,
                    json!({"mu": ce.mu(), "order": ord}),
                ))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "rho-relations",
            "the images of r, s, z satisfy every defining relation of the group, for every a",
            qm.clone(),
            false,
            |_| {
                let mut n = 0u64;
                let mut bad = Vec::new();
                for a in ce.family() {
                    let rho = ce.build_rho(a)?;
                    for (name, ok) in rho.relation_checks(&f) {
                        n += 1;
                        if !ok {
                            bad.push(format!("{a}: {name}"));
                        }
                    }
                }
                Ok(outcome(bad.is_empty(), n, json!({"failures": bad})))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "rho-fixed-images",
            "rho_a(r) = t and rho_a(z) = k_w(1) for every a, and rho_0(s) = s_a",
            qm.clone(),
            false,
            |_| {
                let omega_one = ce.g2().kappa(OMEGA, Fe::ONE);
                let mut ok = ce.build_rho(Fe::ZERO)?.img_s() == ce.s_alpha();
                for a in ce.family() {
                    let rho = ce.build_rho(a)?;
                    ok &= rho.img_r() == ce.t() && *rho.img_z() == omega_one;
                }
                Ok(outcome(ok, f.size() as u64, Value::Null))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "u-conjugation-identity",
            "u(x) s_a u(x)^-1 = s_a k_w(x^2) with u(x) = k_b(x) k_3a+b(x)",
            qm.clone(),
            false,
            |_| {
                let mut bad = Vec::new();
                for x in f.elements() {
                    let u = ce.conj_u(x);
                    let rhs = ce.s_alpha().mul(&ce.g2().kappa(OMEGA, f.square(x)), &f);
                    if !Mat::products_equal(&u, ce.s_alpha(), &rhs, &u, &f) {
                        bad.push(x.to_string());
                    }
                }
                Ok(outcome(
                    bad.is_empty(),
                    f.size() as u64,
                    json!({"failures": bad}),
                ))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "u-centralizes-root-group-w",
            "u(x) commutes with k_w(b) for all x, b",
            qm.clone(),
            false,
            |_| {
                let mut n = 0u64;
                let mut ok = true;
                for x in f.elements() {
                    let u = ce.conj_u(x);
                    for b in f.elements() {
                        n += 1;
                        ok &= u.commutes_with(&ce.g2().kappa(OMEGA, b), &f);
                    }
                }
                Ok(outcome(ok, n, Value::Null))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "restriction-conjugacy",
            "u(sqrt a) conjugates rho_0 to rho_a on s, z and sz, for every a",
            qm.clone(),
            false,
            |_| {
                let mut bad = Vec::new();
                for a in ce.family() {
                    if let Err(e) = ce.verify_restriction_conjugacy(a) {
                        bad.push(e.to_string());
                    }
                }
                Ok(outcome(
                    bad.is_empty(),
                    f.size() as u64,
                    json!({"failures": bad}),
                ))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "centralizer-fixed-dimension",
            "Ad(t) fixes a 4-dimensional subspace: the Cartan subalgebra and the root spaces of +-w",
            qm.clone(),
            false,
            |_| {
                let dim = counterexample::centralizer_fixed_dim(ce.t(), &f);
                let roots = counterexample::roots_fixed_mod_q(q);
                Ok(outcome(
                    dim == 4 && roots.len() + 2 == dim,
                    None,
                    json!({"dimension": dim, "fixed_roots": roots}),
                ))
            },
        )?;

        let en = self.enums()?;
        let rep = ce.structural_checks(&en);
        self.record(
            Suite::Counterexample,
            "g-alpha-meets-g-omega-trivially",
            "G_a and G_w intersect in the identity",
            qm.clone(),
            false,
            |_| {
                Ok(outcome(
                    rep.intersection_size == 1,
                    (rep.g_alpha_order * rep.g_omega_order) as u64,
                    json!({"intersection": rep.intersection_size, "g_alpha": rep.g_alpha_order, "g_omega": rep.g_omega_order}),
                ))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "kernel-of-alpha-in-g-omega",
            "every h in T with a(h) = 1 lies in G_w, and there are 2^m - 1 of them",
            qm.clone(),
            false,
            |_| {
                Ok(outcome(
                    rep.ker_alpha_in_g_omega
                        && rep.ker_alpha_size == f.size() as usize - 1
                        && rep.ker_alpha_by_character == rep.ker_alpha_size,
                    rep.torus_order as u64,
                    json!({"kernel_size": rep.ker_alpha_size}),
                ))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "s-alpha-centralizer-in-torus",
            "the elements of T commuting with s_a are exactly the kernel of a",
            qm.clone(),
            false,
            |_| {
                Ok(outcome(
                    rep.s_alpha_centralizer_is_ker_alpha,
                    rep.torus_order as u64,
                    json!({"centralizer_size": rep.s_alpha_centralizer_size}),
                ))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "g-alpha-commutes-with-g-omega",
            "root elements of +-a commute with root elements of +-w",
            qm.clone(),
            false,
            |_| {
                Ok(outcome(
                    rep.commuting_pairs == rep.generator_pairs,
                    rep.generator_pairs,
                    Value::Null,
                ))
            },
        )?;

        let values = ce.family();
        let pairs = self.pairs(&values);
        let pair_params = json!({"q": q, "m": self.config.m, "pairs": pairs.len()});
        self.record(
            Suite::Counterexample,
            "sl2-pair-nonconjugacy",
            "(k_w(a), k_w(1)) and (k_w(b), k_w(1)) are not G_w-conjugate for a != b",
            pair_params.clone(),
            false,
            |_| {
                let same = ce.sl2_pair_test(Fe::ONE, Fe::ONE, &en.g_omega).is_some();
                let hits: Vec<String> = pairs
                    .iter()
                    .filter(|&&(a, b)| ce.sl2_pair_test(a, b, &en.g_omega).is_some())
                    .map(|(a, b)| format!("{a} {b}"))
                    .collect();
                Ok(outcome(
                    same && hits.is_empty(),
                    (pairs.len() * en.g_omega.len()) as u64,
                    json!({"conjugate_pairs": hits}),
                ))
            },
        )?;
        self.record(
            Suite::Counterexample,
            "nonconjugacy-exhaustive",
            "no element of T.G_w conjugates rho_a to rho_b for a != b",
            pair_params,
            false,
            |_| {
                let search = ConjugatorSearch::new(&ce, &en);
                let diagonal = search.search(Fe::ONE, Fe::ONE)?.witness.is_some();
                let mut scanned = 0u64;
                let mut hits = Vec::new();
                for &(a, b) in &pairs {
                    let out = search.search(a, b)?;
                    scanned += out.scanned as u64;
                    if let Some((hi, mi, _)) = out.witness {
                        hits.push(format!("{a} {b}: torus {hi}, g_omega {mi}"));
                    }
                }
                Ok(outcome(
                    diagonal && hits.is_empty(),
                    scanned,
                    json!({
                        "candidates_per_pair": search.candidates(),
                        "centralizing_t_and_z_image": search.survivors(),
                        "conjugate_pairs": hits,
                    }),
                ))
            },
        )?;
        let words = self.config.random_words;
        let seed = self.config.seed;
        self.record(
            Suite::Counterexample,
            "nonconjugacy-random-words",
            "no seeded random word in root elements conjugates rho_a to rho_b for a != b",
            json!({"q": q, "m": self.config.m, "pairs": pairs.len(), "words": words, "length": RANDOM_WORD_LENGTH, "seed": seed}),
            false,
            |_| {
                let rep = ce.random_word_check(&pairs, words, RANDOM_WORD_LENGTH, seed)?;
                Ok(outcome(rep.first_hit.is_none(), words, serde_json::to_value(&rep).unwrap()))
            },
        )
    }

    fn cohomology(&mut self) -> Result<(), Error> {
        let q = self.config.q;
        let ce = self.ce()?.clone();
        let f = ce.field().clone();
        let qm = self.qm();
        let vs = VSpace::new(ce.g2());
        let act = SigmaAction::new(&ce)?;
        self.record(
            Suite::Cohomology,
            "sigma-normalizes-v",
            "sigma maps into T.G_a and its action preserves V",
            qm.clone(),
            false,
            |_| {
                Ok(outcome(
                    cohomology::sigma_in_levi(&ce, &act) && act.normalizes(&vs),
                    (3 * vs.generators().len()) as u64,
                    Value::Null,
                ))
            },
        )?;
        let mut thetas = Vec::new();
        for a in ce.family() {
            thetas.push(cohomology::cocycle_of(&ce.build_rho(a)?, &act, &vs)?);
        }
        self.record(
            Suite::Cohomology,
            "cocycle-identity",
            "theta_a(xy) = theta_a(x) (x . theta_a(y)) on all ordered pairs, for every a",
            qm.clone(),
            false,
            |_| {
                let n: usize = thetas.iter().map(|t| t.pairs_checked()).sum();
                let ok = thetas.iter().all(|t| t.check_identity(&act, &f).is_ok());
                Ok(outcome(ok, n as u64, Value::Null))
            },
        )?;
        self.record(
            Suite::Cohomology,
            "cocycle-generator-values",
            "theta_a(r) = 1, theta_a(s) = k_w(a), theta_a(z) = k_w(1)",
            qm.clone(),
            false,
            |_| {
                let mut ok = true;
                for (t, a) in thetas.iter().zip(ce.family()) {
                    ok &= t.value(GammaElem::R)?.is_identity()
                        && *t.value(GammaElem::S)? == ce.g2().kappa(OMEGA, a)
                        && *t.value(GammaElem::Z)? == ce.g2().kappa(OMEGA, Fe::ONE);
                }
                Ok(outcome(ok, thetas.len() as u64, Value::Null))
            },
        )?;
        self.record(
            Suite::Cohomology,
            "cocycle-representation-round-trip",
            "rho -> theta_rho -> rho is the identity on the family",
            qm.clone(),
            false,
            |_| {
                let mut ok = true;
                for (t, a) in thetas.iter().zip(ce.family()) {
                    ok &= cohomology::rep_of(t, &act, &f)? == ce.build_rho(a)?;
                }
                Ok(outcome(ok, thetas.len() as u64, Value::Null))
            },
        )?;
        self.record(
            Suite::Cohomology,
            "restriction-of-cocycles",
            "restricting theta_a agrees with the cocycle of the restricted representation",
            qm.clone(),
            false,
            |_| {
                let mut ok = true;
                for (t, a) in thetas.iter().zip(ce.family()) {
                    let down = cohomology::cocycle_of(&ce.build_rho(a)?.restrict(), &act, &vs)?;
                    ok &= cohomology::restrict(t)? == down;
                }
                Ok(outcome(ok, thetas.len() as u64, Value::Null))
            },
        )?;
        self.record(
            Suite::Cohomology,
            "cohomologous-to-itself",
            "every theta_a is cohomologous to itself with the identity as least witness",
            qm.clone(),
            false,
            |_| {
                let mut search = CoboundarySearch::new(&vs, &act);
                let mut ok = true;
                for t in &thetas {
                    ok &= search.search(t, t)?.witness.map(|w| w.0) == Some(0);
                }
                Ok(outcome(ok, thetas.len() as u64, Value::Null))
            },
        )?;

        let mut slot = None;
        self.record(
            Suite::Cohomology,
            "classes-distinct-over-gamma",
            "the classes [theta_a] are pairwise distinct, each pair by exhausting V",
            json!({"q": q, "m": self.config.m, "pairs": distinct_pairs(&ce.family()).len(), "v_order": vs.size()}),
            false,
            |_| {
                let fiber = cohomology::fiber_demo_for(&ce, &vs, &ce.family())?;
                let out = outcome(
                    fiber.upstairs_classes == fiber.a_values.len(),
                    fiber.upstairs_scanned,
                    json!({"classes": fiber.upstairs_classes}),
                );
                slot = Some(fiber);
                Ok(out)
            },
        )?;
        let fiber = slot.expect("fiber computed above");
        self.record(
            Suite::Cohomology,
            "restrictions-cohomologous",
            "the restrictions of all theta_a to the Sylow 2-subgroup are cohomologous, and u(sqrt a) is a witness against a = 0",
            json!({"q": fiber.q, "m": fiber.m, "pairs": fiber.downstairs.len()}),
            false,
            |_| {
                let scanned: u64 = fiber.downstairs.iter().map(|d| d.scanned).sum();
                Ok(outcome(
                    fiber.downstairs_classes == 1 && fiber.sqrt_witness_cross_check,
                    scanned,
                    json!({"witnesses": fiber.downstairs.iter().map(|d| json!({"a": d.a, "b": d.b, "index": d.witness_index})).collect::<Vec<_>>()}),
                ))
            },
        )?;
        self.record(
            Suite::Cohomology,
            "fiber-lower-bound",
            "one restricted class has at least 2^m preimages",
            qm.clone(),
            false,
            |_| {
                Ok(outcome(
                    fiber.fiber_lower_bound >= f.size() as usize,
                    None,
                    json!({"lower_bound": fiber.fiber_lower_bound}),
                ))
            },
        )?;
        self.record(
            Suite::Cohomology,
            "abelian-restriction-injective",
            "for the adjoint module, restriction H^1(G, g) -> H^1(Sylow, g) has trivial kernel for every rho_a",
            qm,
            false,
            |_| {
                let mut dims = Vec::new();
                let mut ok = true;
                for a in ce.family() {
                    let d = cohomology::linear_cocycle_dims(&ce.build_rho(a)?, &f)?;
                    ok &= d.restriction_kernel == 0
                        && d.b1_gamma == 14 - d.fixed_gamma
                        && d.b1_sylow == 14 - d.fixed_sylow
                        && d.z1_gamma >= d.b1_gamma;
                    dims.push(json!({"a": a, "dims": d}));
                }
                Ok(outcome(ok, dims.len() as u64, json!({"per_a": dims})))
            },
        )
    }

    fn control(&mut self) -> Result<(), Error> {
        let m = self.config.control_degree();
        self.record(
            Suite::Control,
            "centralizer-fixed-dimension-at-q3",
            "with q = 3 the fixed space of Ad(t) is larger than 4; hypothesis q > 3 violated",
            json!({"q": 3, "m": m}),
            true,
            |_| {
                let g2 = G2::new(m)?;
                let t = counterexample::build_t(&g2, 3)?;
                let dim = counterexample::centralizer_fixed_dim(&t, g2.field());
                let roots: Vec<Root> = counterexample::roots_fixed_mod_q(3);
                Ok(outcome(
                    dim == 4,
                    None,
                    json!({"dimension": dim, "fixed_roots": roots}),
                ))
            },
        )
    }
}

/// Runs the selected suites in the order algebra, group, counterexample,
/// cohomology, control.
pub fn run(config: &RunConfig) -> Result<Report, Error> {
    config.validate()?;
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    let mut runner = Runner {
        config: RunConfig {
            suites: suites.clone(),
            ..config.clone()
        },
        checks: Vec::new(),
        ce: None,
        enums: None,
    };
    for s in &suites {
        match s {
            Suite::Algebra => runner.algebra()?,
            Suite::Group => runner.group()?,
            Suite::Counterexample => runner.counterexample()?,
            Suite::Cohomology => runner.cohomology()?,
            Suite::Control => runner.control()?,
        }
    }
    let mut notes = Vec::new();
    if suites.contains(&Suite::Counterexample) {
        notes.push(
            "The exhaustive conjugator search covers T.G_w, the centralizer of t over an algebraically closed field. \
             That its GF(2^m)-points are exactly this product is not checked; the Lie-algebra fixed-space dimension is, \
             and the random-word search samples the whole group."
                .to_string(),
        );
    }
    if suites.contains(&Suite::Cohomology) {
        notes.push(
            "Abelian cocycle dimensions are reported for the adjoint module without further interpretation.".to_string(),
        );
    }
    let overall = if runner.checks.iter().all(CheckRecord::ok) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(Report {
        config: runner.config,
        checks: runner.checks,
        notes,
        overall,
    })
}

/// Structure constants `N(d, e)` for every pair of roots whose sum is a root,
/// with the Cartan brackets `[e_d, e_-d] = h_d` expressed in `h_a, h_b`.
pub fn structure_dump() -> Result<Value, Error> {
    let basis = ChevalleyBasis::build()?;
    let coroots: Vec<Value> = all_roots()
        .iter()
        .map(|&d| {
            let h = basis.h_of(d);
            json!({"root": d, "h_alpha": h[H_ALPHA], "h_beta": h[H_BETA]})
        })
        .collect();
    Ok(json!({
        "roots": all_roots(),
        "extraspecial_signs": basis.extraspecial_signs(),
        "structure_constants": basis.structure_table(),
        "coroots": coroots,
    }))
}

/// Modulus, generator and element orders of GF(2^m).
pub fn field_dump(m: u32) -> Result<Value, Error> {
    let f = Gf2m::new(m)?;
    let n = f.group_order();
    let mut divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    if divisors.len() > 64 {
        divisors.truncate(64);
    }
    let orders: Vec<Value> = divisors
        .iter()
        .map(|&d| json!({"order": d, "first_element": f.element_of_order(d).ok()}))
        .collect();
    Ok(json!({
        "m": m,
        "size": f.size(),
        "modulus": Gf2m::format_poly(f.modulus()),
        "modulus_hex": format!("{:x}", f.modulus()),
        "generator": f.generator(),
        "admissible_q": divisors.iter().filter(|&&d| d >= 3 && d % 2 == 1).collect::<Vec<_>>(),
        "elements_of_order": orders,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(RunConfig::new(7, 3).validate().is_ok());
        assert_eq!(
            RunConfig::new(5, 3).validate(),
            Err(Error::QNotDividing { q: 5, m: 3 })
        );
        assert_eq!(RunConfig::new(4, 3).validate(), Err(Error::InvalidQ(4)));
        let mut c = RunConfig::new(3, 2);
        assert_eq!(c.suites, vec![Suite::Control]);
        assert!(c.validate().is_ok());
        c.suites = vec![Suite::Counterexample, Suite::Control];
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        c.suites = vec![Suite::Algebra];
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        assert_eq!(RunConfig::new(7, 3).control_degree(), 2);
        assert_eq!(RunConfig::new(5, 4).control_degree(), 4);
        assert_eq!("cohomology".parse::<Suite>().unwrap(), Suite::Cohomology);
        assert!("s2".parse::<Suite>().is_err());
    }

    #[test]
    fn control_run_is_an_expected_failure() {
        let rep = run(&RunConfig::new(3, 2)).unwrap();
        assert!(rep.passed());
        let c = rep.check("centralizer-fixed-dimension-at-q3").unwrap();
        assert_eq!(c.verdict, Verdict::ExpectedFail);
        assert_eq!(c.detail["dimension"], 8);
    }

    #[test]
    fn algebra_and_group_suites_pass_at_m2() {
        let mut c = RunConfig::new(3, 2);
        c.suites = vec![Suite::Algebra, Suite::Group, Suite::Control];
        let rep = run(&c).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert_eq!(rep.checks.len(), 6 + 7 + 1);
        assert!(rep.checks.iter().all(|c| c.elapsed_ms.is_none()));
    }

    #[test]
    fn sampled_pairs_are_seeded() {
        let mut c = RunConfig::new(7, 3);
        c.pairs = PairMode::Sample;
        c.seed = 5;
        let r = Runner {
            config: c.clone(),
            checks: vec![],
            ce: None,
            enums: None,
        };
        let vals: Vec<Fe> = (0..8).map(Fe).collect();
        let a = r.pairs(&vals);
        assert_eq!(a.len(), SAMPLE_PAIRS);
        assert_eq!(a, r.pairs(&vals));
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dumps() {
        let s = structure_dump().unwrap();
        assert_eq!(s["roots"].as_array().unwrap().len(), 12);
        let f = field_dump(4).unwrap();
        assert_eq!(f["modulus"], "x^4 + x + 1");
        assert_eq!(f["admissible_q"], json!([3, 5, 15]));
    }
}
