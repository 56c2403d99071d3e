use std::collections::BTreeSet;
use supercoh_core::atypicality::capital_lambda;
use supercoh_core::pwgraph::*;
use supercoh_core::special::{eval_expr, special_weight_in, Params, Special};
use supercoh_core::{AlgebraSpec, RootSystem, Weight};

fn sl(m: usize, n: usize) -> RootSystem {
    RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap()
}

fn grid() -> Vec<RootSystem> {
    let mut v = Vec::new();
    for n in 1..=4 {
        for m in n..=5 {
            v.push(sl(m, n));
        }
    }
    v
}

#[test]
fn fixtures_validate_when_m_exceeds_n() {
    for r in grid().into_iter().filter(|r| r.alg.m > r.alg.n) {
        for f in fixtures() {
            if let Err(e) = validate_fixture(&f.name, &r) {
                panic!("{e}");
            }
        }
    }
}

#[test]
fn square_case_only_fails_through_central_coincidences() {
    // with m = n two weights differing by (1,..,1|-1,..,-1) are the same node
    let mut coincidences = 0;
    for r in grid().into_iter().filter(|r| r.alg.m == r.alg.n) {
        for f in fixtures() {
            for inst in check_fixture(&f, &r).unwrap().instances {
                for msg in &inst.failures {
                    assert!(msg.contains("duplicates node"), "{} {}: {msg}", f.name, r.alg);
                    coincidences += 1;
                }
            }
        }
    }
    assert!(coincidences > 0);
}

#[test]
fn instances_are_nonempty_where_expected() {
    let r = sl(5, 4);
    for f in fixtures() {
        let rep = check_fixture(&f, &r).unwrap();
        assert!(!rep.instances.is_empty(), "{}", f.name);
        assert!(rep.ok());
    }
}

fn params(p: &[(&str, i64)], r: &RootSystem) -> Params {
    let mut q: Params = p.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    q.insert("m".into(), r.alg.m as i64);
    q.insert("n".into(), r.alg.n as i64);
    q
}

#[test]
fn ambient_of_minus_amin_is_sum_of_staircase() {
    for r in grid().into_iter().filter(|r| r.alg.n >= 2 && r.alg.m > r.alg.n) {
        let (m, n) = (r.alg.m as i64, r.alg.n as i64);
        let lam = capital_lambda(&special_weight_in(&r, Special::MinusAmin).unwrap()).unwrap();
        let mut sum = Weight::zero(r.alg);
        for i in 1..n {
            sum = &sum + &special_weight_in(&r, Special::MuIJ(i, n - 1 - i)).unwrap();
        }
        assert_eq!(lam, sum, "{}", r.alg);
        let mut c: Vec<i64> = vec![n - 1; m as usize];
        c[m as usize - 1] = 0;
        c.push(0);
        c.extend(std::iter::repeat(1 - m).take(n as usize - 1));
        assert!(lam.same_functional(&Weight::from_ints(r.alg, &c).unwrap()), "{}", r.alg);
        // the top first-row weight has a different Kac module
        let top = capital_lambda(&special_weight_in(&r, Special::Mu(n - 1)).unwrap()).unwrap();
        assert_ne!(top, sum, "{}", r.alg);
    }
}

#[test]
fn minus_amin_step_is_single_odd_root() {
    let r = sl(5, 3);
    let (g, _) = fixture("kac_mu_j").unwrap().instantiate(&r, &params(&[("j", 1)], &r)).unwrap();
    let top = g.node_index(&special_weight_in(&r, Special::Mu(1)).unwrap()).unwrap();
    let l1 = g.node_index(&eval_expr(&r, "mu(1) - amin", &Params::new()).unwrap()).unwrap();
    assert_eq!(&g.nodes[top] - &g.nodes[l1], r.alpha_min().weight);
    let e = g.edges.iter().find(|e| e.from == top && e.to == l1).unwrap();
    assert_eq!(e.label, EdgeLabel::F);
}

#[test]
fn closure_of_two_first_row_nodes() {
    let r = sl(5, 4);
    for j in 0..=2 {
        let (g, _) = fixture("kac_mu_j").unwrap().instantiate(&r, &params(&[("j", j)], &r)).unwrap();
        let a = g.node_index(&special_weight_in(&r, Special::Mu(j)).unwrap()).unwrap();
        let b = g.node_index(&special_weight_in(&r, Special::MinusAmin).unwrap()).unwrap();
        let c = g.closure(&BTreeSet::from([a, b]));
        let zero = g.node_index(&Weight::zero(r.alg)).unwrap();
        let l1 = g.node_index(&eval_expr(&r, "mu(j) - amin", &params(&[("j", j)], &r)).unwrap()).unwrap();
        assert!(c.contains(&zero) && c.contains(&l1));
        assert!(g.is_closed(&c));
        assert_eq!(g.closure(&c), c);
    }
}

#[test]
fn two_node_subsets_are_closed_without_intermediate_paths() {
    let r = sl(4, 3);
    let (g, _) = fixture("kac_mu_j").unwrap().instantiate(&r, &params(&[("j", 1)], &r)).unwrap();
    for a in 0..g.len() {
        for b in 0..g.len() {
            let s = BTreeSet::from([a, b]);
            let path = |u: usize, v: usize, x: usize| g.reachable(u).contains(&x) && g.reachable(x).contains(&v);
            let between = (0..g.len()).any(|x| x != a && x != b && (path(a, b, x) || path(b, a, x)));
            assert_eq!(g.is_closed(&s), !between);
        }
    }
}

#[test]
fn dual_of_first_row_graph_matches_stored_dual() {
    for r in grid().into_iter().filter(|r| r.alg.m > r.alg.n && r.alg.n >= 2) {
        let n = r.alg.n as i64;
        for j in 0..=n - 2 {
            let p = params(&[("j", j)], &r);
            let (g, _) = fixture("kac_mu_j").unwrap().instantiate(&r, &p).unwrap();
            let (d, _) = fixture("dual_kac_mu_j").unwrap().instantiate(&r, &p).unwrap();
            let dual = g.dual_graph(&r).unwrap();
            assert!(dual.same_shape(&d), "{} j={j}", r.alg);
            assert!(dual.dual_graph(&r).unwrap().same_shape(&g));
            assert!(g.inverse_graph().inverse_graph().same_shape(&g));
        }
    }
}
