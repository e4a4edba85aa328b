//! Randomized structural properties of the polynomial layer.

use num::{BigInt, BigRational};
use proptest::prelude::*;

use vandermonde::groebner::{buchberger, normal_form, Limits};
use vandermonde::idealgen::Ideal;
use vandermonde::poly::{Monomial, MonomialOrder, Polynomial};

const N_VARS: usize = 3;

fn arb_coeff() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(num, den)| {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    })
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((arb_coeff(), prop::collection::vec(0u32..4, N_VARS)), 0..6)
        .prop_map(|terms| {
            let mut p = Polynomial::zero(N_VARS);
            for (c, exps) in terms {
                let term = Polynomial::monomial(N_VARS, c, Monomial::from_exps(exps));
                p = p.add(&term).unwrap();
            }
            p
        })
}

proptest! {
    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
    }

    #[test]
    fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn distributivity(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subtraction_is_inverse(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a);
    }

    #[test]
    fn print_parse_round_trip(a in arb_poly()) {
        let text = a.to_string();
        let back = Polynomial::parse(&text, N_VARS).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly(),
                                pt in prop::collection::vec(-5i64..=5, N_VARS)) {
        let point: Vec<BigRational> =
            pt.iter().map(|&v| BigRational::from(BigInt::from(v))).collect();
        prop_assert_eq!(
            a.mul(&b).unwrap().evaluate(&point).unwrap(),
            a.evaluate(&point).unwrap() * b.evaluate(&point).unwrap()
        );
        prop_assert_eq!(
            a.add(&b).unwrap().evaluate(&point).unwrap(),
            a.evaluate(&point).unwrap() + b.evaluate(&point).unwrap()
        );
    }

    #[test]
    fn normal_form_of_member_is_zero(a in arb_poly(), b in arb_poly(), f in arb_poly()) {
        // f * a reduces to zero modulo a Gröbner basis of (a, b)
        let gens: Vec<Polynomial> =
            [a.clone(), b.clone()].into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(N_VARS, gens).unwrap();
        let gb = buchberger(&ideal, MonomialOrder::GrevLex, Limits::default()).unwrap();
        let member = f.mul(&a).unwrap();
        prop_assert!(normal_form(&member, gb.basis(), gb.order()).is_zero());
    }
}
