//! The finite group `Γ = D_2q × C_2 = <r, s, z | r^q, s^2, z^2, srs^-1 = r^-1, [r,z], [s,z]>`.

use std::fmt;

use serde::Serialize;

use crate::error::Error;

/// The element `r^i s^j z^k` in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GammaElem {
    pub i: u32,
    pub j: u8,
    pub k: u8,
}

impl GammaElem {
    pub const ONE: GammaElem = GammaElem { i: 0, j: 0, k: 0 };
    pub const R: GammaElem = GammaElem { i: 1, j: 0, k: 0 };
    pub const S: GammaElem = GammaElem { i: 0, j: 1, k: 0 };
    pub const Z: GammaElem = GammaElem { i: 0, j: 0, k: 1 };
    pub const SZ: GammaElem = GammaElem { i: 0, j: 1, k: 1 };
}

impl fmt::Display for GammaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.i {
            0 => {}
            1 => parts.push("r".to_string()),
            i => parts.push(format!("r^{i}")),
        }
        if self.j == 1 {
            parts.push("s".into());
        }
        if self.k == 1 {
            parts.push("z".into());
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

/// A generator letter of a word in Γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    R,
    S,
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gamma {
    q: u32,
}

impl Gamma {
    /// `q` must be odd and at least 3.
    pub fn new(q: u32) -> Result<Self, Error> {
        if q < 3 || q.is_multiple_of(2) {
            return Err(Error::InvalidQ(q));
        }
        Ok(Gamma { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn order(&self) -> usize {
        4 * self.q as usize
    }

    pub fn elem(&self, i: i64, j: u8, k: u8) -> GammaElem {
        GammaElem {
            i: i.rem_euclid(self.q as i64) as u32,
            j: j & 1,
            k: k & 1,
        }
    }

    /// Product in normal form, using `s r^i = r^-i s` and centrality of `z`.
    pub fn mul(&self, x: GammaElem, y: GammaElem) -> GammaElem {
        let yi = if x.j == 1 { self.q - y.i } else { y.i };
        GammaElem {
            i: (x.i + yi) % self.q,
            j: x.j ^ y.j,
            k: x.k ^ y.k,
        }
    }

    pub fn inv(&self, x: GammaElem) -> GammaElem {
        if x.j == 1 {
            // reflections are involutions
            x
        } else {
            GammaElem {
                i: (self.q - x.i) % self.q,
                j: 0,
                k: x.k,
            }
        }
    }

    pub fn from_word(&self, word: &[Letter]) -> GammaElem {
        word.iter().fold(GammaElem::ONE, |acc, l| {
            let g = match l {
                Letter::R => GammaElem::R,
                Letter::S => GammaElem::S,
                Letter::Z => GammaElem::Z,
            };
            self.mul(acc, g)
        })
    }

    /// All `4q` elements in lexicographic `(i, j, k)` order.
    pub fn elements(&self) -> Vec<GammaElem> {
        let mut out = Vec::with_capacity(self.order());
        for i in 0..self.q {
            for j in 0..2 {
                for k in 0..2 {
                    out.push(GammaElem { i, j, k });
                }
            }
        }
        out
    }

    /// Position in [`Gamma::elements`].
    pub fn index(&self, x: GammaElem) -> usize {
        (x.i as usize) * 4 + (x.j as usize) * 2 + x.k as usize
    }

    pub fn element_order(&self, x: GammaElem) -> u32 {
        let mut y = x;
        let mut n = 1;
        while y != GammaElem::ONE {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }
}

/// Γ itself or its Sylow 2-subgroup `<s, z>`, as the domain of a
/// representation or cocycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Domain {
    #[serde(skip)]
    gamma: Gamma,
    pub sylow: bool,
}

impl Domain {
    pub fn full(gamma: Gamma) -> Self {
        Domain {
            gamma,
            sylow: false,
        }
    }

    pub fn sylow(gamma: Gamma) -> Self {
        Domain { gamma, sylow: true }
    }

    pub fn gamma(&self) -> &Gamma {
        &self.gamma
    }

    pub fn elements(&self) -> Vec<GammaElem> {
        if self.sylow {
            sylow2()
        } else {
            self.gamma.elements()
        }
    }

    pub fn len(&self) -> usize {
        if self.sylow {
            4
        } else {
            self.gamma.order()
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: GammaElem) -> bool {
        !self.sylow || x.i == 0
    }

    /// Position in [`Domain::elements`].
    pub fn index(&self, x: GammaElem) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        Some(if self.sylow {
            (x.j as usize) * 2 + x.k as usize
        } else {
            self.gamma.index(x)
        })
    }

    pub fn generators(&self) -> Vec<Letter> {
        if self.sylow {
            vec![Letter::S, Letter::Z]
        } else {
            vec![Letter::R, Letter::S, Letter::Z]
        }
    }

    /// Relator words presenting the domain on [`Domain::generators`], using
    /// only positive letters (`r^-1 = r^(q-1)`, `s^-1 = s`, `z^-1 = z`).
    pub fn relators(&self) -> Vec<(String, Vec<Letter>)> {
        use Letter::{R, S, Z};
        let q = self.gamma.q as usize;
        let mut out = vec![
            ("s^2".to_string(), vec![S, S]),
            ("z^2".to_string(), vec![Z, Z]),
            ("szsz".to_string(), vec![S, Z, S, Z]),
        ];
        if !self.sylow {
            out.insert(0, (format!("r^{q}"), vec![R; q]));
            out.push(("srsr".to_string(), vec![S, R, S, R]));
            let mut rz = vec![R, Z];
            rz.extend(std::iter::repeat_n(R, q - 1));
            rz.push(Z);
            out.push(("rzr^-1z^-1".to_string(), rz));
        }
        out
    }
}

/// `Γ_2 = <s, z> = {1, z, s, sz}` in lexicographic order.
pub fn sylow2() -> Vec<GammaElem> {
    vec![GammaElem::ONE, GammaElem::Z, GammaElem::S, GammaElem::SZ]
}

/// Free-standing form of `Gamma::elements`.
pub fn enumerate_gamma(q: u32) -> Result<Vec<GammaElem>, Error> {
    Ok(Gamma::new(q)?.elements())
}

/// Free-standing form of `Gamma::mul`.
pub fn gmul(q: u32, x: GammaElem, y: GammaElem) -> Result<GammaElem, Error> {
    Ok(Gamma::new(q)?.mul(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relation() {
        let g = Gamma::new(7).unwrap();
        assert_eq!(g.mul(GammaElem::S, GammaElem::R), g.elem(6, 1, 0));
        for a in 0..7 {
            for b in 0..7 {
                assert_eq!(g.mul(g.elem(a, 0, 0), g.elem(b, 0, 0)), g.elem(a + b, 0, 0));
            }
        }
        let srs = g.from_word(&[Letter::S, Letter::R, Letter::S]);
        assert_eq!(srs, g.inv(GammaElem::R));
    }

    #[test]
    fn z_is_central_and_mul_associative() {
        let g = Gamma::new(7).unwrap();
        let els = g.elements();
        for &x in &els {
            assert_eq!(g.mul(GammaElem::Z, x), g.mul(x, GammaElem::Z));
            assert_eq!(g.mul(x, g.inv(x)), GammaElem::ONE);
            for &y in &els {
                for &w in &els {
                    assert_eq!(g.mul(g.mul(x, y), w), g.mul(x, g.mul(y, w)));
                }
            }
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_gamma(7).unwrap().len(), 28);
        assert_eq!(enumerate_gamma(5).unwrap().len(), 20);
        assert_eq!(enumerate_gamma(4), Err(Error::InvalidQ(4)));
        assert_eq!(enumerate_gamma(1), Err(Error::InvalidQ(1)));
        let g = Gamma::new(5).unwrap();
        for (n, &x) in g.elements().iter().enumerate() {
            assert_eq!(g.index(x), n);
        }
        let els = g.elements();
        assert!(els.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn generator_orders() {
        let g = Gamma::new(7).unwrap();
        assert_eq!(g.element_order(GammaElem::R), 7);
        assert_eq!(g.element_order(GammaElem::S), 2);
        assert_eq!(g.element_order(GammaElem::Z), 2);
    }

    #[test]
    fn relators_hold_in_the_normal_form() {
        let g = Gamma::new(7).unwrap();
        for d in [Domain::full(g), Domain::sylow(g)] {
            for (name, w) in d.relators() {
                assert_eq!(g.from_word(&w), GammaElem::ONE, "{name}");
            }
            for (n, x) in d.elements().into_iter().enumerate() {
                assert_eq!(d.index(x), Some(n));
            }
        }
        assert_eq!(Domain::sylow(g).index(GammaElem::R), None);
    }

    #[test]
    fn sylow_subgroup() {
        let g = Gamma::new(7).unwrap();
        let p = sylow2();
        assert_eq!(p.len(), 4);
        assert!(p.contains(&GammaElem::S) && p.contains(&GammaElem::Z));
        for &x in &p {
            assert_eq!(g.mul(x, x), GammaElem::ONE);
            for &y in &p {
                assert!(p.contains(&g.mul(x, y)));
            }
        }
        assert_eq!(
            serde_json::to_string(&GammaElem::SZ).unwrap(),
            r#"{"i":0,"j":1,"k":1}"#
        );
    }
}
