use supercoh_core::classifier::*;
use supercoh_core::special::{special_weight_in, Special};
use supercoh_core::{AlgebraSpec, Error, RootSystem, Weight};

fn sl(m: usize, n: usize) -> RootSystem {
    RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap()
}

fn ospc(n: usize) -> RootSystem {
    RootSystem::build(AlgebraSpec::ospc(n).unwrap()).unwrap()
}

fn sp(r: &RootSystem, k: Special) -> Weight {
    special_weight_in(r, k).unwrap()
}

fn exact(a: CohomologyAnswer) -> u64 {
    match a.dimension {
        Dimension::Exact(d) => d,
        Dimension::Nonzero => panic!("expected an exact dimension"),
    }
}

#[test]
fn kac_degree_one() {
    let r = sl(2, 1);
    assert_eq!(exact(h1_kac(&r, &Weight::parse(r.alg, "1,1|-2").unwrap()).unwrap()), 1);
    assert_eq!(exact(h1_kac(&r, &Weight::zero(r.alg)).unwrap()), 0);
    let o = ospc(2);
    assert_eq!(exact(h1_kac(&o, &(&o.two_rho1() + &sp(&o, Special::Amax))).unwrap()), 1);
    assert_eq!(exact(h1_kac(&o, &o.two_rho1()).unwrap()), 1);
    assert_eq!(exact(h1_kac(&o, &Weight::zero(o.alg)).unwrap()), 0);
    let a = h1_kac(&r, &(&r.two_rho1() + &sp(&r, Special::Amax))).unwrap();
    assert_eq!(a.witness, Some(Witness::Phi18));
}

#[test]
fn kac_degree_two() {
    let r = sl(2, 2);
    let a = h2_kac(&r, &(&r.two_rho1() + &sp(&r, Special::Eta1))).unwrap();
    assert_eq!((exact(a.clone()), a.witness), (1, Some(Witness::Phi21)));
    let r = sl(2, 1);
    assert_eq!(exact(h2_kac(&r, &r.two_rho1()).unwrap()), 0);
    let r = sl(3, 1);
    assert_eq!(exact(h2_kac(&r, &(&r.two_rho1() + &sp(&r, Special::TwoAmax))).unwrap()), 1);
    let r = sl(3, 2);
    let a = h2_kac(&r, &(&r.two_rho1() + &sp(&r, Special::Amax))).unwrap();
    assert_eq!((exact(a.clone()), a.witness), (1, Some(Witness::Phi22)));
    let o = ospc(3);
    for k in [Special::Amax, Special::TwoAmax] {
        assert_eq!(exact(h2_kac(&o, &(&o.two_rho1() + &sp(&o, k))).unwrap()), 1);
    }
    assert_eq!(exact(h2_kac(&o, &o.two_rho1()).unwrap()), 0);
}

#[test]
fn irreducible_degree_one() {
    let r = sl(2, 1);
    let a = h1_irr(&r, &Weight::parse(r.alg, "0,-1|1").unwrap()).unwrap();
    assert_eq!((exact(a.clone()), a.witness), (1, Some(Witness::Phi1Top)));
    // for n = 1 the first-row weight is 2 rho_1 itself
    assert_eq!(sp(&r, Special::Mu(0)), r.two_rho1());
    assert_eq!(exact(h1_irr(&r, &r.two_rho1()).unwrap()), 1);
    let r = sl(3, 2);
    assert_eq!(exact(h1_irr(&r, &sp(&r, Special::Mu(1))).unwrap()), 1);
    assert_eq!(exact(h1_irr(&r, &r.two_rho1()).unwrap()), 0);
    let a = h1_irr(&r, &sp(&r, Special::Mu(1))).unwrap();
    assert_eq!(a.witness, Some(Witness::Phi1Bottom));
    let o = ospc(2);
    assert_eq!(exact(h1_irr(&o, &o.two_rho1()).unwrap()), 1);
    assert_eq!(exact(h1_irr(&o, &sp(&o, Special::MinusAmin)).unwrap()), 1);
    assert_eq!(exact(h1_irr(&o, &Weight::zero(o.alg)).unwrap()), 0);
}

#[test]
fn irreducible_degree_two() {
    let r = sl(2, 1);
    assert_eq!(exact(h2_irr(&r, &sp(&r, Special::Minus2Amin)).unwrap()), 1);
    assert_eq!(exact(h2_irr(&r, &Weight::zero(r.alg)).unwrap()), 0);
    let r = sl(4, 3);
    let x = &sp(&r, Special::Mu(2)) + &sp(&r, Special::MuIJ(2, 0));
    assert_eq!(exact(h2_irr(&r, &x).unwrap()), 1);
    // second-row weights only run up to n - i
    assert!(special_weight_in(&r, Special::MuIJ(2, 2)).is_err());
    let o = ospc(2);
    assert_eq!(exact(h2_irr(&o, &(&o.two_rho1() + &sp(&o, Special::Amax))).unwrap()), 1);
    assert_eq!(exact(h2_irr(&o, &sp(&o, Special::Minus2Amin)).unwrap()), 1);
    assert_eq!(exact(h2_irr(&o, &o.two_rho1()).unwrap()), 0);
}

#[test]
fn list_sizes() {
    let r = sl(2, 1);
    let l = enumerate_h2_irr(&r).unwrap();
    assert_eq!(l, vec![sp(&r, Special::MuPlus(0)), sp(&r, Special::Minus2Amin)]);
    assert_eq!(enumerate_h2_irr(&sl(3, 2)).unwrap().len(), 6);
    assert_eq!(enumerate_h2_irr(&sl(4, 3)).unwrap().len(), 10);
    for n in 1..=6usize {
        let r = sl(n + 1, n);
        assert_eq!(enumerate_h1_count(&r), n + 1);
        let n = n as i64;
        assert_eq!(enumerate_h2_irr(&r).unwrap().len() as i64, (n + 1) * (n + 2) / 2 - (n == 1) as i64);
    }
}

fn enumerate_h1_count(r: &RootSystem) -> usize {
    h1_irr_weights(r).len()
}

#[test]
fn enveloping() {
    for r in [sl(2, 1), sl(3, 2), ospc(2)] {
        let (a, b) = enveloping_answers(r.alg);
        assert_eq!(a.dimension, Dimension::Nonzero);
        assert_eq!(a.witness, Some(Witness::PbwAd));
        assert_eq!(b.dimension, Dimension::Exact(0));
    }
}

#[test]
fn square_case_warns() {
    let r = sl(3, 3);
    let a = h1_irr(&r, &sp(&r, Special::MinusAmin)).unwrap();
    assert!(!a.warnings.is_empty());
    let r = sl(3, 2);
    assert!(h1_irr(&r, &sp(&r, Special::MinusAmin)).unwrap().warnings.is_empty());
}

#[test]
fn non_dominant_rejected() {
    let r = sl(3, 2);
    let w = Weight::parse(r.alg, "0,1,0|0,-1").unwrap();
    for f in [h1_kac, h2_kac, h1_irr, h2_irr] {
        assert!(matches!(f(&r, &w), Err(Error::NotDominant(_))));
    }
}
