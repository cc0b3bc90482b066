//! The root system of type G2.
//!
//! Roots are integer pairs over the simple roots α (short) and β (long).
//! All pairings come from the Gram matrix `(α,α) = 2, (α,β) = -3, (β,β) = 6`,
//! which gives the Cartan integers `<β,α^∨> = -3` and `<α,β^∨> = -1`.

use std::fmt;

use serde::Serialize;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    #[serde(rename = "a")]
    pub c_alpha: i32,
    #[serde(rename = "b")]
    pub c_beta: i32,
}

/// Positive roots in canonical order: by height, simple roots in index order.
const POSITIVE: [(i32, i32); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];

pub const ALPHA: Root = Root::new(1, 0);
pub const BETA: Root = Root::new(0, 1);
pub const OMEGA: Root = Root::new(3, 2);

/// Number of roots.
pub const NUM_ROOTS: usize = 12;

impl Root {
    pub const fn new(c_alpha: i32, c_beta: i32) -> Self {
        Root { c_alpha, c_beta }
    }

    /// Checked constructor.
    pub fn try_new(c_alpha: i32, c_beta: i32) -> Result<Self, Error> {
        let r = Root::new(c_alpha, c_beta);
        if r.is_root() {
            Ok(r)
        } else {
            Err(Error::NotARoot(c_alpha, c_beta))
        }
    }

    pub fn is_root(self) -> bool {
        POSITIVE.iter().any(|&(a, b)| {
            (a, b) == (self.c_alpha, self.c_beta) || (-a, -b) == (self.c_alpha, self.c_beta)
        })
    }

    pub fn is_positive(self) -> bool {
        self.c_alpha >= 0 && self.c_beta >= 0
    }

    pub fn height(self) -> i32 {
        self.c_alpha + self.c_beta
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Root {
        Root::new(-self.c_alpha, -self.c_beta)
    }

    /// Coordinate-wise sum; not necessarily a root.
    pub fn plus(self, other: Root) -> Root {
        Root::new(self.c_alpha + other.c_alpha, self.c_beta + other.c_beta)
    }

    pub fn scaled(self, k: i32) -> Root {
        Root::new(k * self.c_alpha, k * self.c_beta)
    }

    pub fn is_long(self) -> bool {
        inner(self, self) == 6
    }

    /// Position in [`all_roots`].
    pub fn index(self) -> usize {
        all_roots()
            .iter()
            .position(|&r| r == self)
            .unwrap_or_else(|| panic!("{self} is not a root"))
    }

    /// Integer coordinates of the coroot over (α^∨, β^∨).
    pub fn coroot(self) -> (i32, i32) {
        if self.is_long() {
            (self.c_alpha / 3, self.c_beta)
        } else {
            (self.c_alpha, 3 * self.c_beta)
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.c_alpha, self.c_beta);
        let sign = if a < 0 || b < 0 { "-" } else { "" };
        let (a, b) = (a.abs(), b.abs());
        let term = |c: i32, name: &str| match c {
            0 => None,
            1 => Some(name.to_string()),
            _ => Some(format!("{c}{name}")),
        };
        let parts: Vec<String> = [term(a, "a"), term(b, "b")].into_iter().flatten().collect();
        if parts.len() > 1 {
            write!(f, "{sign}({})", parts.join("+"))
        } else {
            write!(f, "{sign}{}", parts.join(""))
        }
    }
}

/// All 12 roots: positives in canonical order followed by their negatives.
pub fn all_roots() -> [Root; NUM_ROOTS] {
    let mut out = [Root::new(0, 0); NUM_ROOTS];
    for (i, &(a, b)) in POSITIVE.iter().enumerate() {
        out[i] = Root::new(a, b);
        out[i + 6] = Root::new(-a, -b);
    }
    out
}

pub fn positive_roots() -> [Root; 6] {
    POSITIVE.map(|(a, b)| Root::new(a, b))
}

/// The Weyl-invariant form on the root lattice.
pub fn inner(x: Root, y: Root) -> i32 {
    2 * x.c_alpha * y.c_alpha - 3 * (x.c_alpha * y.c_beta + x.c_beta * y.c_alpha)
        + 6 * x.c_beta * y.c_beta
}

/// `<delta, eps^∨> = 2(delta, eps) / (eps, eps)`.
pub fn pairing(delta: Root, eps: Root) -> i32 {
    let n = inner(eps, eps);
    let v = 2 * inner(delta, eps);
    debug_assert_eq!(v % n, 0);
    v / n
}

/// Reflection in `eps` applied to `delta`.
pub fn reflect(eps: Root, delta: Root) -> Root {
    let c = pairing(delta, eps);
    Root::new(
        delta.c_alpha - c * eps.c_alpha,
        delta.c_beta - c * eps.c_beta,
    )
}

/// Largest `p, q` with `eps - p·delta` and `eps + q·delta` roots.
pub fn root_string(delta: Root, eps: Root) -> Result<(i32, i32), Error> {
    if delta == eps || delta == eps.neg() {
        return Err(Error::ProportionalRoots);
    }
    let mut p = 0;
    while eps.plus(delta.scaled(-(p + 1))).is_root() {
        p += 1;
    }
    let mut q = 0;
    while eps.plus(delta.scaled(q + 1)).is_root() {
        q += 1;
    }
    Ok((p, q))
}

/// Root `delta + eps`, if it is one.
pub fn sum_root(delta: Root, eps: Root) -> Option<Root> {
    let s = delta.plus(eps);
    s.is_root().then_some(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairings() {
        assert_eq!(pairing(ALPHA, ALPHA), 2);
        assert_eq!(pairing(BETA, ALPHA), -3);
        assert_eq!(pairing(ALPHA, BETA), -1);
        assert_eq!(pairing(OMEGA, ALPHA), 0);
        for d in all_roots() {
            for e in all_roots() {
                assert!((-3..=3).contains(&pairing(d, e)));
            }
        }
    }

    #[test]
    fn reflections() {
        assert_eq!(reflect(ALPHA, ALPHA), ALPHA.neg());
        assert_eq!(reflect(ALPHA, OMEGA), OMEGA);
        assert_eq!(reflect(ALPHA, BETA), Root::new(3, 1));
        for e in all_roots() {
            for d in all_roots() {
                assert!(reflect(e, d).is_root());
                assert_eq!(reflect(e, reflect(e, d)), d);
            }
        }
    }

    #[test]
    fn strings() {
        assert_eq!(root_string(ALPHA, BETA).unwrap(), (0, 3));
        assert_eq!(root_string(BETA, ALPHA).unwrap(), (0, 1));
        assert_eq!(root_string(ALPHA, OMEGA).unwrap(), (0, 0));
        assert_eq!(root_string(ALPHA, Root::new(1, 1)).unwrap(), (1, 2));
        assert!(root_string(ALPHA, ALPHA.neg()).is_err());
        for d in all_roots() {
            for e in all_roots() {
                if d == e || d == e.neg() {
                    continue;
                }
                let (p, q) = root_string(d, e).unwrap();
                assert_eq!(p - q, pairing(e, d), "{d} {e}");
            }
        }
    }

    #[test]
    fn positive_heights() {
        let hs: Vec<i32> = positive_roots().iter().map(|r| r.height()).collect();
        assert_eq!(hs, vec![1, 1, 2, 3, 4, 5]);
        assert_eq!(all_roots().iter().filter(|r| r.is_positive()).count(), 6);
    }

    #[test]
    fn coroots_are_dual() {
        // <x, r^∨> computed from coroot coordinates matches the pairing.
        for r in all_roots() {
            let (ca, cb) = r.coroot();
            for x in all_roots() {
                assert_eq!(
                    ca * pairing(x, ALPHA) + cb * pairing(x, BETA),
                    pairing(x, r)
                );
            }
        }
        assert_eq!(OMEGA.coroot(), (1, 2));
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(OMEGA.to_string(), "(3a+2b)");
        assert_eq!(ALPHA.neg().to_string(), "-a");
        assert_eq!(serde_json::to_string(&OMEGA).unwrap(), r#"{"a":3,"b":2}"#);
        assert!(Root::try_new(2, 2).is_err());
    }
}
