use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use ulrich_core::graded::trial_rng;
use ulrich_core::matfac::{
    build_factorization, random_decomposition, skew_symmetrize_d2, verify_determinantal, verify_power,
    CyclicFactorization,
};
use ulrich_core::polyring::{smallest_prime_with_roots_of_unity, Domain, PolyRing, TPoly};

fn config() -> Config {
    Config { cases: 25, rng_seed: RngSeed::Fixed(0xfac7), ..Config::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn doubling_sizes_and_certificates(seed in any::<u64>(), s in 2usize..5, m in 1u32..3) {
        let r = PolyRing::new(Domain::PrimeField(101), &["x", "y", "z", "w"]).unwrap();
        let dec = random_decomposition(&r, 2, s, m, &mut trial_rng(seed, 0)).unwrap();
        let f = build_factorization(&dec, None).unwrap();
        prop_assert_eq!(f.size(), 1 << (s - 1));
        prop_assert!(verify_power(f.matrix(), 2, f.branch()).unwrap().holds);
        prop_assert!(verify_determinantal(f.matrix(), &TPoly::cyclic(2, f.branch()), f.rank()).unwrap());
        let negated = f.matrix().neg();
        prop_assert!(verify_power(&negated, 2, f.branch()).unwrap().holds);
        prop_assert!(CyclicFactorization::from_matrix(negated, 2, f.branch().clone()).is_ok());
    }

    #[test]
    fn higher_degree_covers(seed in any::<u64>(), d in 3u32..6, s in 2usize..4) {
        let p = smallest_prime_with_roots_of_unity(d.into());
        let domain = Domain::PrimeField(p);
        let zeta = domain.primitive_root_of_unity(d.into()).unwrap();
        let r = PolyRing::new(domain, &["x", "y", "z"]).unwrap();
        let dec = random_decomposition(&r, d, s, 1, &mut trial_rng(seed, 1)).unwrap();
        let f = build_factorization(&dec, Some(zeta)).unwrap();
        prop_assert_eq!(f.size(), (d as usize).pow(s as u32 - 1));
        if f.size() <= 12 {
            prop_assert!(verify_determinantal(f.matrix(), &TPoly::cyclic(d as usize, f.branch()), f.rank()).unwrap());
        }
        if d % 2 == 0 {
            prop_assert!(verify_power(&f.matrix().neg(), d, f.branch()).unwrap().holds);
        }
    }

    #[test]
    fn skew_form_pfaffian_squares_to_characteristic_polynomial(seed in any::<u64>(), m in 1u32..3) {
        let r = PolyRing::new(Domain::Rationals, &["x", "y", "z", "w"]).unwrap();
        let dec = random_decomposition(&r, 2, 3, m, &mut trial_rng(seed, 2)).unwrap();
        let f = build_factorization(&dec, None).unwrap();
        let skew = skew_symmetrize_d2(f.matrix()).unwrap();
        prop_assert!(skew.matrix.is_skew_symmetric());
        prop_assert_eq!(skew.pfaffian.pow(2), f.matrix().characteristic_polynomial().unwrap());
    }
}
