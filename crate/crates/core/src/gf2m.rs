//! Arithmetic in GF(2^m) in the polynomial basis.
//!
//! An element is stored as the integer whose bit `i` is the coefficient of
//! `x^i`. The modulus for each degree is the numerically smallest irreducible
//! polynomial, so every run of the engine uses the same field presentation.
//! Multiplication goes through exp/log tables built from the first primitive
//! element; the shift-and-add product is kept as [`Gf2m::mul_slow`] and used
//! to build (and test) the tables.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Serialize, Serializer};

use crate::error::Error;

pub const MAX_DEGREE: u32 = 16;

/// An element of GF(2^m), bit `i` holding the coefficient of `x^i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Lowercase hex of the coefficient bits, bit 0 = constant term.
    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }
}

impl Add for Fe {
    type Output = Fe;
    // characteristic 2: addition is XOR
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Fe) -> Fe {
        Fe(self.0 ^ rhs.0)
    }
}

impl AddAssign for Fe {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Fe) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl Serialize for Fe {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// A field GF(2^m) together with its multiplication tables.
#[derive(Clone)]
pub struct Gf2m {
    m: u32,
    modulus: u32,
    generator: Fe,
    // exp has length 2(2^m - 1) so that log a + log b never needs reducing.
    exp: Vec<u16>,
    log: Vec<u32>,
}

impl fmt::Debug for Gf2m {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Gf2m")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

/// Carry-less product of two polynomials over GF(2).
fn clmul(a: u32, b: u32) -> u64 {
    let mut acc = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= (a as u64) << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

/// Remainder of `a` modulo `p` in GF(2)[x].
pub fn poly_rem(mut a: u64, p: u64) -> u64 {
    let dp = degree(p);
    while a != 0 && degree(a) >= dp {
        a ^= p << (degree(a) - dp);
    }
    a
}

/// Irreducibility over GF(2) by trial division with every polynomial of
/// degree 1..=deg/2.
pub fn is_irreducible(p: u32) -> bool {
    let d = degree(p as u64);
    if d < 1 {
        return false;
    }
    for div_deg in 1..=d / 2 {
        for low in 0..(1u64 << div_deg) {
            let divisor = (1u64 << div_deg) | low;
            if poly_rem(p as u64, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

/// The numerically smallest irreducible polynomial of degree `m`.
pub fn least_irreducible(m: u32) -> u32 {
    ((1u32 << m)..(1u32 << (m + 1)))
        .find(|&p| is_irreducible(p))
        .expect("irreducible polynomials exist in every degree")
}

impl Gf2m {
    pub fn new(m: u32) -> Result<Self, Error> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let modulus = least_irreducible(m);
        let mut field = Gf2m {
            m,
            modulus,
            generator: Fe::ONE,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let n = self.group_order() as usize;
        let generator = (1..=self.max_elem())
            .map(Fe)
            .find(|&g| self.order_slow(g) == n as u64)
            .expect("the multiplicative group is cyclic");
        let mut exp = vec![0u16; 2 * n];
        let mut log = vec![0u32; self.size() as usize];
        let mut x = Fe::ONE;
        for i in 0..n {
            exp[i] = x.0;
            exp[i + n] = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, generator);
        }
        self.generator = generator;
        self.exp = exp;
        self.log = log;
    }

    fn order_slow(&self, a: Fe) -> u64 {
        let mut x = a;
        let mut n = 1u64;
        while x != Fe::ONE {
            x = self.mul_slow(x, a);
            n += 1;
            if n > self.group_order() {
                return 0;
            }
        }
        n
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Modulus as an integer, bit `i` = coefficient of `x^i`.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The modulus' coefficients, constant term first.
    pub fn modulus_coeffs(&self) -> Vec<u8> {
        (0..=self.m)
            .map(|i| ((self.modulus >> i) & 1) as u8)
            .collect()
    }

    pub fn size(&self) -> u32 {
        1 << self.m
    }

    /// Order of the multiplicative group, 2^m - 1.
    pub fn group_order(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    /// The primitive element the tables are built on.
    pub fn generator(&self) -> Fe {
        self.generator
    }

    fn max_elem(&self) -> u16 {
        (self.size() - 1) as u16
    }

    /// All field elements in increasing integer order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.size()).map(|v| Fe(v as u16))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.size()).map(|v| Fe(v as u16))
    }

    /// The monomials 1, x, ..., x^(m-1); they generate the additive group.
    pub fn additive_basis(&self) -> Vec<Fe> {
        (0..self.m).map(|i| Fe(1 << i)).collect()
    }

    /// Canonical element from an arbitrary integer (reduced mod the modulus).
    pub fn elem(&self, v: u64) -> Fe {
        Fe(poly_rem(v, self.modulus as u64) as u16)
    }

    /// Shift-and-add product reduced by the modulus. Table independent.
    pub fn mul_slow(&self, a: Fe, b: Fe) -> Fe {
        Fe(poly_rem(clmul(a.0 as u32, b.0 as u32), self.modulus as u64) as u16)
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let i = self.log[a.0 as usize] + self.log[b.0 as usize];
        Fe(self.exp[i as usize])
    }

    /// Discrete log base the table generator; `a` must be non-zero.
    #[inline]
    pub(crate) fn log(&self, a: Fe) -> u32 {
        self.log[a.0 as usize]
    }

    /// `exp[i]` for `i < 2(2^m - 1)`.
    #[inline]
    pub(crate) fn exp(&self, i: u32) -> Fe {
        Fe(self.exp[i as usize])
    }

    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let n = self.group_order();
        let l = (self.log(a) as u64 * (e % n)) % n;
        self.exp(l as u32)
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, Error> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let n = self.group_order() as u32;
        Ok(self.exp((n - self.log(a)) % n))
    }

    /// The unique square root, computed as a^(2^(m-1)).
    pub fn sqrt(&self, a: Fe) -> Fe {
        let mut x = a;
        for _ in 1..self.m {
            x = self.square(x);
        }
        x
    }

    /// Least n >= 1 with a^n = 1, by repeated multiplication.
    pub fn element_order(&self, a: Fe) -> Result<u64, Error> {
        if a.is_zero() {
            return Err(Error::ZeroOrder);
        }
        let mut x = a;
        let mut n = 1;
        while x != Fe::ONE {
            x = self.mul(x, a);
            n += 1;
        }
        Ok(n)
    }

    /// First element (in integer order) of multiplicative order exactly `n`.
    pub fn element_of_order(&self, n: u64) -> Result<Fe, Error> {
        if n == 0 || !self.group_order().is_multiple_of(n) {
            return Err(Error::OrderNotDividing {
                n,
                group_order: self.group_order(),
            });
        }
        Ok(self
            .nonzero()
            .find(|&a| self.element_order(a) == Ok(n))
            .expect("cyclic group has elements of every dividing order"))
    }

    /// Polynomial notation for an element, e.g. `x^2 + 1`.
    pub fn format_poly(v: u32) -> String {
        if v == 0 {
            return "0".into();
        }
        let terms: Vec<String> = (0..32)
            .rev()
            .filter(|i| (v >> i) & 1 == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Brute-force irreducibility: no product of two lower-degree polynomials
    // equals p.
    fn irreducible_by_products(p: u32) -> bool {
        let d = degree(p as u64);
        for a in 2u32..(1 << d) {
            for b in 2u32..(1 << d) {
                if clmul(a, b) == p as u64 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn moduli_are_least_irreducible() {
        assert_eq!(Gf2m::new(3).unwrap().modulus(), 0b1011);
        assert_eq!(Gf2m::new(4).unwrap().modulus(), 0b10011);
        for m in 1..=8 {
            let f = Gf2m::new(m).unwrap();
            assert!(irreducible_by_products(f.modulus()), "m = {m}");
            for smaller in (1u32 << m)..f.modulus() {
                assert!(!irreducible_by_products(smaller));
            }
        }
    }

    #[test]
    fn prime_field() {
        let f = Gf2m::new(1).unwrap();
        assert_eq!(f.size(), 2);
        assert_eq!(f.mul(Fe::ONE, Fe::ONE), Fe::ONE);
        assert_eq!(f.group_order(), 1);
    }

    #[test]
    fn degree_range() {
        assert!(matches!(Gf2m::new(0), Err(Error::DegreeOutOfRange(0))));
        assert!(matches!(Gf2m::new(17), Err(Error::DegreeOutOfRange(17))));
        assert!(Gf2m::new(16).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for m in 1..=4 {
            let f = Gf2m::new(m).unwrap();
            for a in f.elements() {
                assert_eq!(a + a, Fe::ZERO);
                assert_eq!(f.mul(a, Fe::ONE), a);
                for b in f.elements() {
                    assert_eq!(a + b, b + a);
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                    assert_eq!(f.square(a + b), f.square(a) + f.square(b));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverses() {
        for m in 1..=6 {
            let f = Gf2m::new(m).unwrap();
            for a in f.nonzero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            }
            assert!(f.inv(Fe::ZERO).is_err());
        }
    }

    #[test]
    fn sqrt_inverts_squaring() {
        for m in 1..=6 {
            let f = Gf2m::new(m).unwrap();
            let mut seen = vec![false; f.size() as usize];
            for a in f.elements() {
                let s = f.sqrt(a);
                assert_eq!(f.square(s), a);
                assert_eq!(f.sqrt(f.square(a)), a);
                seen[s.0 as usize] = true;
            }
            assert!(seen.iter().all(|&b| b));
        }
        let f = Gf2m::new(3).unwrap();
        assert_eq!(f.sqrt(Fe::ZERO), Fe::ZERO);
        assert_eq!(f.sqrt(Fe::ONE), Fe::ONE);
    }

    #[test]
    fn orders() {
        let f8 = Gf2m::new(3).unwrap();
        assert_eq!(f8.element_order(Fe::ONE).unwrap(), 1);
        assert!(f8.element_order(Fe::ZERO).is_err());
        let zeta = f8.element_of_order(7).unwrap();
        let mut x = Fe::ONE;
        for k in 1..7 {
            x = f8.mul_slow(x, zeta);
            assert_ne!(x, Fe::ONE, "zeta^{k}");
        }
        assert_eq!(f8.mul_slow(x, zeta), Fe::ONE);
        assert_eq!(f8.element_order(zeta).unwrap(), 7);
        assert_eq!(f8.element_of_order(1).unwrap(), Fe::ONE);
        assert!(matches!(
            f8.element_of_order(5),
            Err(Error::OrderNotDividing { n: 5, .. })
        ));

        let f16 = Gf2m::new(4).unwrap();
        let five: Vec<Fe> = f16
            .nonzero()
            .filter(|&a| f16.element_order(a).unwrap() == 5)
            .collect();
        assert_eq!(five.len(), 4);
        assert_eq!(f16.element_of_order(5).unwrap(), five[0]);
        for a in f16.nonzero() {
            assert_eq!(15 % f16.element_order(a).unwrap(), 0);
        }
    }

    #[test]
    fn pow_matches_repeated_product() {
        let f = Gf2m::new(5).unwrap();
        for a in f.elements() {
            let mut x = Fe::ONE;
            for e in 0..70 {
                assert_eq!(f.pow(a, e), x);
                x = f.mul(x, a);
            }
        }
    }

    #[test]
    fn hex_encoding() {
        assert_eq!(Fe(0).to_hex(), "0");
        assert_eq!(Fe(0b110).to_hex(), "6");
        assert_eq!(serde_json::to_string(&Fe(255)).unwrap(), "\"ff\"");
        assert_eq!(Gf2m::format_poly(0b1011), "x^3 + x + 1");
    }
}
