//! Reference checks run by `supercoh selfcheck`: the two worked sl(6|5)
//! examples, classifier spot values, list counts, stored graphs and an
//! sl(2|1) sweep of the oracle against the classifiers.

use serde::Serialize;
use std::collections::BTreeSet;
use supercoh_core::atypicality::{atypical_roots, atypicality_matrix, capital_lambda, ne_chains, nqc_type, Pos};
use supercoh_core::classifier::{self, CohomologyAnswer, Dimension, Witness};
use supercoh_core::kappa::kappa_multiplicity;
use supercoh_core::pwgraph::{fixtures, validate_fixture};
use supercoh_core::special::{special_weight_in, Special};
use supercoh_core::{AlgebraSpec, Rat, Result, RootSystem, Weight};
use supercoh_oracle::{build_irreducible, build_kac_module, cohomology_dims, ComplexOptions};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn sl(m: usize, n: usize) -> std::result::Result<RootSystem, String> {
    e(AlgebraSpec::sl(m, n).and_then(RootSystem::build))
}

fn ospc(n: usize) -> std::result::Result<RootSystem, String> {
    e(AlgebraSpec::ospc(n).and_then(RootSystem::build))
}

fn sp(rs: &RootSystem, k: Special) -> std::result::Result<Weight, String> {
    e(special_weight_in(rs, k))
}

fn dim(a: Result<CohomologyAnswer>) -> std::result::Result<Option<u64>, String> {
    Ok(match e(a)?.dimension {
        Dimension::Exact(d) => Some(d),
        Dimension::Nonzero => None,
    })
}

fn worked_examples() -> Check {
    let alg = e(AlgebraSpec::sl(6, 5))?;
    let w = |s: &str| e(Weight::parse(alg, s));
    let examples = [
        (
            w("3,2,2,1,0,0|0,0,-1,-3,-4")?,
            vec![
                vec![8, 7, 5, 2, 0],
                vec![6, 5, 3, 0, -2],
                vec![5, 4, 2, -1, -3],
                vec![3, 2, 0, -3, -5],
                vec![1, 0, -2, -5, -7],
                vec![0, -1, -3, -6, -8],
            ],
            vec!["c", "c q", "c q q", "c q q q"],
            vec![
                (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4),
                (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (6, 1), (6, 2),
            ],
            w("5,5,4,3,3,2|-2,-3,-5,-6,-6")?,
        ),
        (
            w("5,2,2,1,1,1|-1,-1,-1,-3,-6")?,
            vec![
                vec![9, 8, 7, 4, 0],
                vec![5, 4, 3, 0, -4],
                vec![4, 3, 2, -1, -5],
                vec![2, 1, 0, -3, -7],
                vec![1, 0, -1, -4, -8],
                vec![0, -1, -2, -5, -9],
            ],
            vec!["c", "c c", "c c q", "q n n n"],
            vec![
                (1, 5), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2),
                (4, 3), (4, 4), (5, 1), (5, 2), (5, 3), (6, 1), (6, 2), (6, 3),
            ],
            w("6,5,5,5,4,4|-4,-6,-6,-6,-7")?,
        ),
    ];
    let gammas: Vec<Pos> = vec![(6, 1), (5, 2), (4, 3), (2, 4), (1, 5)];
    for (k, (mu, matrix, nqc, ne, lambda)) in examples.iter().enumerate() {
        let tag = format!("example {}", k + 1);
        ensure!(e(atypicality_matrix(mu))? == *matrix, "{tag}: atypicality matrix");
        ensure!(e(atypical_roots(mu))? == gammas, "{tag}: atypical roots");
        let rows: Vec<String> = e(nqc_type(mu))?
            .iter()
            .skip(1)
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        ensure!(rows == *nqc, "{tag}: nqc triangle {rows:?}");
        let ne: BTreeSet<Pos> = ne.iter().copied().collect();
        ensure!(e(ne_chains(mu))?.union == ne, "{tag}: northeast set");
        ensure!(e(capital_lambda(mu))? == *lambda, "{tag}: Lambda");
    }
    Ok("2 sl(6|5) weights".into())
}

fn classifier_values() -> Check {
    let mut count = 0;
    let mut expect = |what: &str, got: Option<u64>, want: u64| -> std::result::Result<(), String> {
        count += 1;
        ensure!(got == Some(want), "{what}: got {got:?}, expected {want}");
        Ok(())
    };
    let r = sl(2, 1)?;
    let t = r.two_rho1();
    let amax = r.alpha_max().weight.clone();
    expect("sl(2|1) H^1(V_2rho1)", dim(classifier::h1_kac(&r, &t))?, 1)?;
    expect("sl(2|1) H^1(V_2rho1+amax)", dim(classifier::h1_kac(&r, &(&t + &amax)))?, 1)?;
    expect("sl(2|1) H^1(V_0)", dim(classifier::h1_kac(&r, &Weight::zero(r.alg)))?, 0)?;
    expect("sl(2|1) H^2(V_2rho1+2amax)", dim(classifier::h2_kac(&r, &(&t + &amax.scale(Rat::from_integer(2)))))?, 1)?;
    let lm = e(Weight::parse(r.alg, "0,-1|1"))?;
    expect("sl(2|1) H^1(L_(0,-1|1))", dim(classifier::h1_irr(&r, &lm))?, 1)?;
    expect("sl(2|1) H^2(L_-2amin)", dim(classifier::h2_irr(&r, &sp(&r, Special::Minus2Amin)?))?, 1)?;
    let r = sl(3, 2)?;
    let a = e(classifier::h2_kac(&r, &(&r.two_rho1() + &r.alpha_max().weight)))?;
    ensure!(a.witness == Some(Witness::Phi22), "sl(3|2) H^2(V_2rho1+amax) witness {:?}", a.witness);
    expect("sl(3|2) H^2(V_2rho1+amax)", dim(Ok(a))?, 1)?;
    expect("sl(3|2) H^1(L_mu(1))", dim(classifier::h1_irr(&r, &sp(&r, Special::Mu(1))?))?, 1)?;
    let r = sl(2, 2)?;
    let lam = &r.two_rho1() + &sp(&r, Special::Eta1)?;
    expect("sl(2|2) H^2(V_2rho1+eta1)", dim(classifier::h2_kac(&r, &lam))?, 1)?;
    let r = sl(4, 3)?;
    let x = &sp(&r, Special::Mu(2))? + &sp(&r, Special::MuIJ(2, 0))?;
    expect("sl(4|3) H^2(L_mu(2)+mu(2,0))", dim(classifier::h2_irr(&r, &x))?, 1)?;
    let o = ospc(2)?;
    expect("C(2) H^1(L_-amin)", dim(classifier::h1_irr(&o, &sp(&o, Special::MinusAmin)?))?, 1)?;
    expect("C(2) H^2(L_-2amin)", dim(classifier::h2_irr(&o, &sp(&o, Special::Minus2Amin)?))?, 1)?;
    let o = ospc(3)?;
    let t = o.two_rho1();
    expect("C(3) H^2(V_2rho1+2amax)", dim(classifier::h2_kac(&o, &(&t + &sp(&o, Special::TwoAmax)?)))?, 1)?;
    for alg in [e(AlgebraSpec::sl(3, 2))?, e(AlgebraSpec::ospc(2))?] {
        let (h1, h2) = classifier::enveloping_answers(alg);
        ensure!(h1.dimension == Dimension::Nonzero, "{alg}: H^1 with enveloping coefficients");
        ensure!(h2.dimension == Dimension::Exact(0), "{alg}: H^2 with enveloping coefficients");
    }
    Ok(format!("{count} spot values, enveloping answers"))
}

fn list_counts() -> Check {
    for n in 1..=5usize {
        let r = sl(n + 1, n)?;
        let h1 = classifier::h1_irr_weights(&r).len();
        ensure!(h1 == n + 1, "sl({}|{n}): {h1} weights with H^1 != 0", n + 1);
        let h2 = e(classifier::enumerate_h2_irr(&r))?.len();
        let k = n as i64;
        let want = ((k + 1) * (k + 2) / 2 - (k == 1) as i64) as usize;
        ensure!(h2 == want, "sl({}|{n}): {h2} weights with H^2 != 0, expected {want}", n + 1);
    }
    ensure!(e(classifier::enumerate_h2_irr(&sl(4, 3)?))?.len() == 10, "sl(4|3) count");
    Ok("sl(n+1|n), n <= 5".into())
}

fn kappa_values() -> Check {
    for n in 2..=5usize {
        let r = sl(n + 1, n)?;
        let n = n as i64;
        for l in 1..n {
            let k = e(kappa_multiplicity(&sp(&r, Special::Mu(l))?))?;
            ensure!(k == 1, "{}: kappa(mu({l})) = {k}", r.alg);
        }
        ensure!(e(kappa_multiplicity(&sp(&r, Special::Mu(0))?))? == 0, "{}: kappa(mu(0))", r.alg);
    }
    Ok("first-row weights, n <= 5".into())
}

fn graph_fixtures() -> Check {
    let mut instances = 0;
    for n in 1..=3 {
        for m in n + 1..=4 {
            let r = sl(m, n)?;
            for f in fixtures() {
                instances += e(validate_fixture(&f.name, &r))?.instances.len();
            }
        }
    }
    Ok(format!("{instances} instances on sl(m|n), n < m <= 4"))
}

fn oracle_sweep() -> Check {
    let r = sl(2, 1)?;
    let opts = ComplexOptions { p_max: 2, ..ComplexOptions::default() };
    let t = r.two_rho1();
    let amax = r.alpha_max().weight.clone();
    let p = |s: &str| e(Weight::parse(r.alg, s));
    let kac = vec![
        Weight::zero(r.alg),
        p("1,0|-1")?,
        t.clone(),
        &t + &amax,
        &t + &amax.scale(Rat::from_integer(2)),
        p("2,0|-2")?,
    ];
    for lam in &kac {
        let v = e(build_kac_module(&r, lam))?;
        let h = e(cohomology_dims(&r, &v, &opts))?;
        let c1 = dim(classifier::h1_kac(&r, lam))?;
        let c2 = dim(classifier::h2_kac(&r, lam))?;
        ensure!(Some(h[1] as u64) == c1 && Some(h[2] as u64) == c2, "V_({lam}): oracle {h:?}, classifier {c1:?} {c2:?}");
    }
    let irr = vec![
        sp(&r, Special::MinusAmin)?,
        sp(&r, Special::Mu(0))?,
        sp(&r, Special::MuPlus(0))?,
        sp(&r, Special::Minus2Amin)?,
        Weight::zero(r.alg),
        p("1,0|-1")?,
        p("2,2|-4")?,
    ];
    for mu in &irr {
        let v = e(build_irreducible(&r, mu))?;
        let h = e(cohomology_dims(&r, &v, &opts))?;
        let c1 = dim(classifier::h1_irr(&r, mu))?;
        let c2 = dim(classifier::h2_irr(&r, mu))?;
        ensure!(Some(h[1] as u64) == c1 && Some(h[2] as u64) == c2, "L_({mu}): oracle {h:?}, classifier {c1:?} {c2:?}");
    }
    Ok(format!("sl(2|1): {} Kac and {} irreducible modules", kac.len(), irr.len()))
}

pub fn run() -> Vec<CheckResult> {
    let checks: [(&str, fn() -> Check); 6] = [
        ("worked examples", worked_examples),
        ("classifier values", classifier_values),
        ("list counts", list_counts),
        ("multiplicities", kappa_values),
        ("graph fixtures", graph_fixtures),
        ("oracle sweep", oracle_sweep),
    ];
    checks
        .iter()
        .map(|(name, f)| {
            let (ok, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { name: name.to_string(), ok, detail }
        })
        .collect()
}
