//! Cross-module properties over random `(n, e)`, seeds and field elements.

use proptest::prelude::*;

use crate::bq::{check_bq_relations_computed, check_spectrum, degree_one_module_direct, vq_module};
use crate::cocycle::{check_3cocycle, class_invariant, omega, random_coboundary};
use crate::harness::valid_exponents;
use crate::taft::TaftAlgebra;
use crate::tensor::TensorElement;
use crate::twist::{build_j, j_coefficient};
use crate::verify::SampleConfig;
use crate::{arith, ArithOp, CycNumber};

fn n_and_exponent() -> impl Strategy<Value = (usize, i64)> {
    (2usize..=5).prop_flat_map(|n| {
        let exps = valid_exponents(n);
        (Just(n), proptest::sample::select(exps))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn field_operations_are_exact(m in 3u32..40, a in -50i64..50, b in 1i64..50, k in 0i64..80) {
        let x = &CycNumber::root_of_unity(m, k) * &CycNumber::from_int(m, a);
        let y = &CycNumber::from_ratio(m, b, 7) + &CycNumber::root_of_unity(m, 1);
        let q = arith(ArithOp::Div, &x, &y).unwrap();
        prop_assert_eq!(&q * &y, x.clone());
        prop_assert_eq!(&(&x - &x), &CycNumber::zero(m));
    }

    #[test]
    fn j_coefficients_are_roots_of_unity((n, e) in n_and_exponent(), z in 0i64..25, y in 0i64..25) {
        let t = TaftAlgebra::new(n, e).unwrap();
        let c = j_coefficient(&t, z, y);
        let order = c.multiplicative_order().unwrap().unwrap();
        prop_assert_eq!((n * n) as u64 % order, 0);
    }

    #[test]
    fn twist_is_invertible((n, e) in n_and_exponent()) {
        let t = TaftAlgebra::new(n, e).unwrap();
        let j = build_j(&t);
        let prod = j.mul(&j.invert().unwrap()).unwrap();
        prop_assert_eq!(prod, TensorElement::one(t.idempotent_basis(), 2));
    }

    #[test]
    fn coboundary_twisted_omega_keeps_its_class((n, e) in n_and_exponent(), l in 1i64..5, seed in any::<u64>()) {
        let w = omega(n, e, l);
        let twisted = w.mul(&random_coboundary(n, seed));
        prop_assert!(check_3cocycle(&twisted).passed());
        prop_assert_eq!(class_invariant(&twisted).unwrap(), class_invariant(&w).unwrap());
    }

    #[test]
    fn degree_one_operators_match_closed_module((n, e) in n_and_exponent()) {
        let t = TaftAlgebra::new(n, e).unwrap();
        let d = degree_one_module_direct(&t).unwrap();
        prop_assert_eq!(&d, &vq_module(n, e));
        prop_assert!(check_bq_relations_computed(&d).passed());
        prop_assert!(check_spectrum(&d).passed());
    }

    #[test]
    fn sampling_is_seeded(seed in any::<u64>(), dim in 129usize..700) {
        let cfg = SampleConfig::with_seed(seed);
        let s = cfg.basis_sample(dim);
        prop_assert_eq!(&s, &cfg.basis_sample(dim));
        prop_assert_eq!(s.len(), cfg.sample_size);
        prop_assert!(s.windows(2).all(|w| w[0] < w[1]));
    }
}
