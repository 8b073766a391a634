//! Property tests over generated polynomials: ring axioms, evaluation
//! homomorphism, print/parse round-trip, normal-form idempotence.

use proptest::prelude::*;

use varpoints::ff::make_prime_field;
use varpoints::gb::Ideal;
use varpoints::parse::parse_polynomial;
use varpoints::poly::{PolyRing, Polynomial};

fn ring() -> PolyRing {
    PolyRing::new(make_prime_field(5).unwrap(), &["x", "y", "z"]).unwrap()
}

prop_compose! {
    fn arb_poly()(
        terms in prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), 0u64..5), 0..6)
    ) -> Polynomial {
        let r = ring();
        let field = r.field().clone();
        r.from_terms(
            terms
                .into_iter()
                .map(|((a, b, c), coeff)| (vec![a, b, c], field.from_u64(coeff)))
                .collect(),
        )
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distributivity(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
    }

    #[test]
    fn multiplication_commutes_and_associates(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn print_parse_roundtrip(f in arb_poly()) {
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(f.ring(), &text).unwrap(), f);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        f in arb_poly(),
        g in arb_poly(),
        pt in (0u64..5, 0u64..5, 0u64..5),
    ) {
        let field = make_prime_field(5).unwrap();
        let coords = vec![field.from_u64(pt.0), field.from_u64(pt.1), field.from_u64(pt.2)];
        let fv = f.evaluate(&coords).unwrap();
        let gv = g.evaluate(&coords).unwrap();
        prop_assert_eq!(f.add(&g).evaluate(&coords).unwrap(), fv.add(&gv));
        prop_assert_eq!(f.mul(&g).evaluate(&coords).unwrap(), fv.mul(&gv));
    }

    #[test]
    fn normal_form_is_idempotent(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        let r = ring();
        let gens: Vec<Polynomial> = [f, g].into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(r, gens).unwrap();
        let nf = ideal.normal_form(&h).unwrap();
        prop_assert_eq!(ideal.normal_form(&nf).unwrap(), nf.clone());
        // the normal form differs from h by a member of the ideal
        prop_assert!(ideal.is_member(&h.sub(&nf)).unwrap());
    }
}
