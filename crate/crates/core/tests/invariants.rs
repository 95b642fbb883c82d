//! Randomized invariants that cut across modules.

use proptest::prelude::*;

use dihedral_codes::field::{Fq, Poly};
use dihedral_codes::idempotent::inv_substitute;

fn arb_poly(q: u64, max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0..q, 0..max_len).prop_map(Poly::from_coeffs)
}

proptest! {
    #[test]
    fn ext_gcd_bezout_identity(a in arb_poly(3, 8), b in arb_poly(3, 8)) {
        let field = Fq::new(3, 1).unwrap();
        prop_assume!(!a.is_zero() || !b.is_zero());
        let (g, u, v) = field.poly_ext_gcd(&a, &b).unwrap();
        let lhs = field.poly_add(&field.poly_mul(&u, &a), &field.poly_mul(&v, &b));
        prop_assert_eq!(lhs, g.clone());
        prop_assert!(g.is_monic());
        if !a.is_zero() {
            prop_assert!(field.poly_rem(&a, &g).unwrap().is_zero());
        }
        if !b.is_zero() {
            prop_assert!(field.poly_rem(&b, &g).unwrap().is_zero());
        }
    }

    #[test]
    fn reciprocal_is_involution(a in arb_poly(5, 8)) {
        let field = Fq::new(5, 1).unwrap();
        prop_assume!(a.coeff(0) != 0);
        // the reciprocal is normalized to be monic, so the involution holds
        // on the monic representative
        let r = field.reciprocal(&a).unwrap();
        prop_assert!(r.is_monic());
        prop_assert_eq!(field.reciprocal(&r).unwrap(), field.poly_monic(&a).unwrap());
    }

    #[test]
    fn inv_substitute_involution_in_quotient_ring(a in arb_poly(2, 9), b in arb_poly(4, 9)) {
        for (field, a) in [(Fq::new(2, 1).unwrap(), a), (Fq::new(2, 2).unwrap(), b)] {
            let n = 9;
            let xn1 = field.x_pow_n_minus_1(n);
            let a = field.poly_rem(&a, &xn1).unwrap();
            let once = inv_substitute(&field, &a, &xn1, n).unwrap();
            let twice = inv_substitute(&field, &once, &xn1, n).unwrap();
            prop_assert_eq!(twice, a);
        }
    }

    #[test]
    fn divmod_reconstructs(a in arb_poly(3, 10), b in arb_poly(3, 5)) {
        let field = Fq::new(3, 1).unwrap();
        prop_assume!(!b.is_zero());
        let (quo, rem) = field.poly_divmod(&a, &b).unwrap();
        let back = field.poly_add(&field.poly_mul(&quo, &b), &rem);
        prop_assert_eq!(back, a);
        if !rem.is_zero() {
            prop_assert!(rem.degree().unwrap() < b.degree().unwrap());
        }
    }
}
