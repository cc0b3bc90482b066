use g2check::group::commutator_pairs;
use g2check::roots::{all_roots, ALPHA};
use g2check::unipotent::VSpace;
use g2check::{Counterexample, Fe, Gf2m, G2};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_is_a_field(m in 1u32..=12, a in any::<u16>(), b in any::<u16>(), c in any::<u16>()) {
        let f = Gf2m::new(m).unwrap();
        let mask = (f.size() - 1) as u16;
        let (a, b, c) = (Fe(a & mask), Fe(b & mask), Fe(c & mask));
        prop_assert_eq!(f.mul(a, b), f.mul_slow(a, b));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
        prop_assert_eq!(f.square(f.sqrt(a)), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        }
    }

    #[test]
    fn root_groups_are_additive(m in 1u32..=6, a in any::<u16>(), b in any::<u16>(), r in 0usize..12) {
        let g2 = G2::new(m).unwrap();
        let f = g2.field();
        let mask = (f.size() - 1) as u16;
        let (a, b) = (Fe(a & mask), Fe(b & mask));
        let d = all_roots()[r];
        prop_assert_eq!(g2.kappa(d, a).mul(&g2.kappa(d, b), f), g2.kappa(d, a + b));
        prop_assert!(g2.is_lie_automorphism(&g2.kappa(d, a)));
    }

    #[test]
    fn commutator_formula_at_m5(k in 0usize..132, a in 0u16..32, b in 0u16..32) {
        let g2 = G2::new(5).unwrap();
        let f = g2.field();
        let (d, e) = commutator_pairs()[k];
        let terms = g2.commutator_terms(d, e).unwrap();
        let (x, y) = (g2.kappa(d, Fe(a)), g2.kappa(e, Fe(b)));
        let lhs = x.mul(&y, f).mul(&x, f).mul(&y, f);
        prop_assert_eq!(lhs, g2.commutator_rhs(&terms, Fe(a), Fe(b)));
    }

    #[test]
    fn restriction_witness_at_m4(a in 0u16..16) {
        let ce = Counterexample::new(5, 4).unwrap();
        let g = ce.verify_restriction_conjugacy(Fe(a)).unwrap();
        let v = VSpace::new(ce.g2());
        prop_assert!(v.greedy_coords(&g).is_some());
    }

    #[test]
    fn v_is_closed_under_products(i in 0u64..(1 << 20), j in 0u64..(1 << 20)) {
        let g2 = G2::new(4).unwrap();
        let v = VSpace::new(&g2);
        let p = v.element_at(i).mul(&v.element_at(j), g2.field());
        prop_assert!(v.greedy_coords(&p).is_some());
        prop_assert!(v.greedy_coords(&p.mul(&g2.s_delta(ALPHA), g2.field())).is_none());
    }
}
