use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use supercoh_core::special::{special_weight_in, Special};
use supercoh_core::{AlgebraSpec, RootSystem, Weight};
use supercoh_oracle::complex::{arg_tuples, check_invariant_reduction, Complex};
use supercoh_oracle::module::SparseVec;
use supercoh_oracle::{
    build_irreducible, build_kac_module, cohomology_dims, contraction_and_theta, differential,
    qi, Cochain, ComplexOptions, SuperModule,
};

fn sl21() -> RootSystem {
    RootSystem::build(AlgebraSpec::sl(2, 1).unwrap()).unwrap()
}

fn random_cochain(rs: &RootSystem, v: &SuperModule, p: usize, seed: u64) -> Cochain {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut c = Cochain::zero(p);
    for t in arg_tuples(rs, p) {
        if rng.gen_bool(0.3) {
            let mut vec = SparseVec::new();
            for i in 0..v.dim() {
                if rng.gen_bool(0.3) {
                    let x = rng.gen_range(-3i64..=3);
                    if x != 0 {
                        vec.insert(i, qi(x));
                    }
                }
            }
            c.add(rs, &t, &qi(1), &vec);
        }
    }
    c
}

fn modules(rs: &RootSystem) -> Vec<SuperModule> {
    vec![
        build_kac_module(rs, &rs.two_rho1()).unwrap(),
        build_irreducible(rs, &special_weight_in(rs, Special::MinusAmin).unwrap()).unwrap(),
        build_kac_module(rs, &Weight::parse(rs.alg, "(1,0|-1)").unwrap()).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn d_squared_vanishes(seed in any::<u64>(), p in 0usize..3, which in 0usize..3) {
        let rs = sl21();
        let v = &modules(&rs)[which];
        let phi = random_cochain(&rs, v, p, seed);
        let dd = differential(&rs, v, &differential(&rs, v, &phi));
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn matrix_differential_matches_formula(seed in any::<u64>(), p in 0usize..3, which in 0usize..3) {
        let rs = sl21();
        let v = &modules(&rs)[which];
        let cx = Complex::new(&rs, v, 3).unwrap();
        let phi = random_cochain(&rs, v, p, seed);
        prop_assert_eq!(cx.apply_d(&phi).unwrap(), differential(&rs, v, &phi));
    }

    #[test]
    fn cartan_homotopy_identity(seed in any::<u64>(), p in 1usize..3, x in 0usize..8, which in 0usize..3) {
        let rs = sl21();
        let v = &modules(&rs)[which];
        let phi = random_cochain(&rs, v, p, seed);
        let (ix, theta) = contraction_and_theta(&rs, v, x, &phi);
        let (idx, _) = contraction_and_theta(&rs, v, x, &differential(&rs, v, &phi));
        let rhs = differential(&rs, v, &ix).plus(&idx);
        prop_assert_eq!(theta, rhs);
    }

    #[test]
    fn theta_commutes_with_d(seed in any::<u64>(), p in 0usize..2, x in 0usize..8) {
        let rs = sl21();
        let v = &modules(&rs)[0];
        let phi = random_cochain(&rs, v, p, seed);
        let (_, th) = contraction_and_theta(&rs, v, x, &phi);
        let (_, thd) = contraction_and_theta(&rs, v, x, &differential(&rs, v, &phi));
        prop_assert_eq!(differential(&rs, v, &th), thd);
    }

    #[test]
    fn even_contraction_squares_to_zero(seed in any::<u64>(), p in 2usize..4, x in 0usize..8) {
        let rs = sl21();
        prop_assume!(!rs.basis[x].odd);
        let v = &modules(&rs)[1];
        let phi = random_cochain(&rs, v, p, seed);
        let (once, _) = contraction_and_theta(&rs, v, x, &phi);
        let (twice, _) = contraction_and_theta(&rs, v, x, &once);
        prop_assert!(twice.is_zero());
    }
}

#[test]
fn trivial_module_cohomology() {
    let rs = sl21();
    let v = build_irreducible(&rs, &Weight::zero(rs.alg)).unwrap();
    let opts = ComplexOptions { p_max: 2, ..Default::default() };
    // H^0 = C, H^1 = 0, H^2 = 0 for sl(2|1)
    assert_eq!(cohomology_dims(&rs, &v, &opts).unwrap(), vec![1, 0, 0]);
}

#[test]
fn first_cohomology_sl21_small_cases() {
    let rs = sl21();
    let opts = ComplexOptions { p_max: 1, ..Default::default() };
    let kac_top = build_kac_module(&rs, &rs.two_rho1()).unwrap();
    assert_eq!(cohomology_dims(&rs, &kac_top, &opts).unwrap()[1], 1);
    let kac0 = build_kac_module(&rs, &Weight::zero(rs.alg)).unwrap();
    assert_eq!(cohomology_dims(&rs, &kac0, &opts).unwrap()[1], 0);
    let l = build_irreducible(&rs, &special_weight_in(&rs, Special::MinusAmin).unwrap()).unwrap();
    assert_eq!(cohomology_dims(&rs, &l, &opts).unwrap()[1], 1);
}

#[test]
fn reduction_agrees_with_full_complex() {
    let rs = sl21();
    for v in modules(&rs) {
        check_invariant_reduction(&rs, &v, 2).unwrap();
    }
}

#[test]
fn resource_bound_is_reported() {
    let rs = sl21();
    let v = build_kac_module(&rs, &rs.two_rho1()).unwrap();
    let opts = ComplexOptions { p_max: 2, max_dim: 10, invariant_reduction: false };
    let err = cohomology_dims(&rs, &v, &opts).unwrap_err();
    assert!(matches!(err, supercoh_core::Error::Resource(_)), "{err}");
}
