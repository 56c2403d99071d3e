use std::collections::BTreeSet;
use supercoh_core::atypicality::*;
use supercoh_core::{AlgebraSpec, Weight};

fn w(s: &str) -> Weight {
    Weight::parse(AlgebraSpec::sl(6, 5).unwrap(), s).unwrap()
}

fn first() -> Weight {
    w("3,2,2,1,0,0|0,0,-1,-3,-4")
}

fn second() -> Weight {
    w("5,2,2,1,1,1|-1,-1,-1,-3,-6")
}

fn set(v: &[(usize, usize)]) -> BTreeSet<Pos> {
    v.iter().copied().collect()
}

#[test]
fn dynkin_labels() {
    assert_eq!(first().dynkin_string(), "[1,0,1,1,0;0;0,1,2,1]");
    assert_eq!(second().dynkin_string(), "[3,0,1,0,0;0;0,0,2,3]");
}

#[test]
fn matrices() {
    let a = vec![
        vec![8, 7, 5, 2, 0],
        vec![6, 5, 3, 0, -2],
        vec![5, 4, 2, -1, -3],
        vec![3, 2, 0, -3, -5],
        vec![1, 0, -2, -5, -7],
        vec![0, -1, -3, -6, -8],
    ];
    assert_eq!(atypicality_matrix(&first()).unwrap(), a);
    let b = vec![
        vec![9, 8, 7, 4, 0],
        vec![5, 4, 3, 0, -4],
        vec![4, 3, 2, -1, -5],
        vec![2, 1, 0, -3, -7],
        vec![1, 0, -1, -4, -8],
        vec![0, -1, -2, -5, -9],
    ];
    assert_eq!(atypicality_matrix(&second()).unwrap(), b);
}

#[test]
fn atypical_root_lists() {
    let g = vec![(6, 1), (5, 2), (4, 3), (2, 4), (1, 5)];
    assert_eq!(atypical_roots(&first()).unwrap(), g);
    assert_eq!(atypical_roots(&second()).unwrap(), g);
}

fn nqc_rows(mu: &Weight) -> Vec<String> {
    nqc_type(mu)
        .unwrap()
        .iter()
        .skip(1)
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect()
}

#[test]
fn nqc_triangles() {
    assert_eq!(nqc_rows(&first()), ["c", "c q", "c q q", "c q q q"]);
    assert_eq!(nqc_rows(&second()), ["c", "c c", "c c q", "q n n n"]);
}

#[test]
fn northeast_sets() {
    let ne1 = set(&[
        (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4),
        (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (6, 1), (6, 2),
    ]);
    assert_eq!(ne_chains(&first()).unwrap().union, ne1);
    let ne2 = set(&[
        (1, 5), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2),
        (4, 3), (4, 4), (5, 1), (5, 2), (5, 3), (6, 1), (6, 2), (6, 3),
    ]);
    assert_eq!(ne_chains(&second()).unwrap().union, ne2);
}

#[test]
fn capital_lambdas() {
    assert_eq!(capital_lambda(&first()).unwrap(), w("5,5,4,3,3,2|-2,-3,-5,-6,-6"));
    assert_eq!(capital_lambda(&second()).unwrap(), w("6,5,5,5,4,4|-4,-6,-6,-6,-7"));
}

#[test]
fn p_mu_matches_northeast_set_for_first_example() {
    let mu = first();
    let p = p_mu(&mu).unwrap();
    assert_eq!(p.len(), 14);
    assert_eq!(p_mu_count_formula(&mu).unwrap(), 14);
    assert_eq!(p, ne_chains(&mu).unwrap().union);
}

#[test]
fn report_serializes() {
    let r = report(&first()).unwrap();
    let j = serde_json::to_value(&r).unwrap();
    assert_eq!(j["lambda_mu"], "5,5,4,3,3,2|-2,-3,-5,-6,-6");
}
