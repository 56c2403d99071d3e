//! Closed-form dimensions of H^1 and H^2 with Kac, irreducible and
//! enveloping-algebra coefficients.

use crate::algebra::{AlgebraSpec, Family, RootSystem};
use crate::error::{Error, Result};
use crate::special::{special_weight_in, Special};
use crate::weight::Weight;
use serde::Serialize;
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientKind {
    Kac,
    Irreducible,
    Enveloping,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dimension {
    Exact(u64),
    Nonzero,
}

/// Explicit cocycle constructions that realize a nonzero class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Bottom-level image of `g_{+1}` in `V_{2rho1+amax}`.
    Phi18,
    /// The cocycle built on `V_{2rho1}` from the product of all `f_alpha`.
    PhiPrime125,
    Phi21,
    Phi22,
    /// Isomorphism `g_{-1} -> top level` of `L_{-amin}`.
    Phi1Top,
    /// Isomorphism `g_{+1} -> bottom level` of `L_{mu^(n-1)}`.
    Phi1Bottom,
    /// Nonvanishing of `prod ad f_alpha (prod e_alpha)` in U(g).
    PbwAd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyAnswer {
    pub degree: u8,
    pub coefficient_kind: CoefficientKind,
    pub dimension: Dimension,
    pub witness: Option<Witness>,
    pub warnings: Vec<String>,
}

fn prepare(rs: &RootSystem, lam: &Weight) -> Result<Vec<String>> {
    if lam.alg != rs.alg {
        return Err(Error::Domain(format!("weight of {} used with {}", lam.alg, rs.alg)));
    }
    lam.require_integral_dominant()?;
    let mut warnings = Vec::new();
    if rs.alg.is_square_sl() {
        warnings.push(format!(
            "{} has a one-dimensional center; weights are compared modulo (1,..,1|-1,..,-1) and the closed forms are not established here",
            rs.alg
        ));
    }
    Ok(warnings)
}

fn sp(rs: &RootSystem, k: Special) -> Weight {
    special_weight_in(rs, k).expect("special weight in range")
}

fn answer(
    degree: u8,
    kind: CoefficientKind,
    hit: Option<Witness>,
    found: bool,
    warnings: Vec<String>,
) -> CohomologyAnswer {
    CohomologyAnswer {
        degree,
        coefficient_kind: kind,
        dimension: Dimension::Exact(found as u64),
        witness: if found { hit } else { None },
        warnings,
    }
}

fn lookup(lam: &Weight, table: &[(Weight, Option<Witness>)]) -> (bool, Option<Witness>) {
    match table.iter().find(|(w, _)| w.same_functional(lam)) {
        Some((_, wit)) => (true, *wit),
        None => (false, None),
    }
}

pub fn h1_kac(rs: &RootSystem, lam: &Weight) -> Result<CohomologyAnswer> {
    let warnings = prepare(rs, lam)?;
    let t = rs.two_rho1();
    let table = vec![
        (t.clone(), Some(Witness::PhiPrime125)),
        (&t + &sp(rs, Special::Amax), Some(Witness::Phi18)),
    ];
    let (found, wit) = lookup(lam, &table);
    Ok(answer(1, CoefficientKind::Kac, wit, found, warnings))
}

pub fn h2_kac(rs: &RootSystem, lam: &Weight) -> Result<CohomologyAnswer> {
    let warnings = prepare(rs, lam)?;
    let t = rs.two_rho1();
    let amax = sp(rs, Special::Amax);
    let mut table = vec![
        (&t + &amax.scale(crate::rat(2)), Some(Witness::Phi21)),
        (&t + &amax, Some(Witness::Phi22)),
    ];
    match rs.alg.family {
        Family::Sl => {
            if rs.alg.n >= 2 {
                table.push((&t + &sp(rs, Special::Eta1), Some(Witness::Phi21)));
            }
        }
        Family::Ospc => {
            for e in table.iter_mut() {
                e.1 = None;
            }
        }
    }
    let (found, wit) = lookup(lam, &table);
    Ok(answer(2, CoefficientKind::Kac, wit, found, warnings))
}

/// The weights with one-dimensional H^1 in irreducible coefficients.
pub fn h1_irr_weights(rs: &RootSystem) -> Vec<Weight> {
    match rs.alg.family {
        Family::Sl => {
            let mut v = vec![sp(rs, Special::MinusAmin)];
            v.extend((0..rs.alg.n as i64).map(|j| sp(rs, Special::Mu(j))));
            v
        }
        Family::Ospc => vec![sp(rs, Special::MinusAmin), rs.two_rho1()],
    }
}

pub fn h1_irr(rs: &RootSystem, mu: &Weight) -> Result<CohomologyAnswer> {
    let warnings = prepare(rs, mu)?;
    let mut table: Vec<(Weight, Option<Witness>)> = vec![(sp(rs, Special::MinusAmin), Some(Witness::Phi1Top))];
    if rs.alg.family == Family::Sl {
        let n = rs.alg.n as i64;
        table.push((sp(rs, Special::Mu(n - 1)), Some(Witness::Phi1Bottom)));
    }
    for w in h1_irr_weights(rs) {
        table.push((w, None));
    }
    let (found, wit) = lookup(mu, &table);
    Ok(answer(1, CoefficientKind::Irreducible, wit, found, warnings))
}

/// Every weight of the H^2 list for irreducible coefficients, in list order:
/// `mu^(l)_+`, `mu^(j)_-`, `mu^(l)+mu^(2,j)`, `mu^(j-1)-amin`, `-2amin`, `eta2`.
pub fn enumerate_h2_irr(rs: &RootSystem) -> Result<Vec<Weight>> {
    match rs.alg.family {
        Family::Ospc => {
            return Ok(vec![&rs.two_rho1() + &sp(rs, Special::Amax), sp(rs, Special::Minus2Amin)]);
        }
        Family::Sl => {}
    }
    let n = rs.alg.n as i64;
    let amin = sp(rs, Special::Amin);
    let mut out = Vec::new();
    for l in 0..n {
        out.push(sp(rs, Special::MuPlus(l)));
    }
    for j in 1..n {
        out.push(sp(rs, Special::MuMinus(j)));
    }
    for l in 2..n {
        for j in 0..=l - 2 {
            out.push(&sp(rs, Special::Mu(l)) + &sp(rs, Special::MuIJ(2, j)));
        }
    }
    for j in 1..n {
        out.push(&sp(rs, Special::Mu(j - 1)) - &amin);
    }
    out.push(sp(rs, Special::Minus2Amin));
    if n >= 2 {
        out.push(sp(rs, Special::Eta2));
    }
    let distinct: HashSet<&Weight> = out.iter().collect();
    let expect = ((n + 1) * (n + 2) / 2 - (n == 1) as i64) as usize;
    if distinct.len() != out.len() || out.len() != expect {
        return Err(Error::Internal(format!(
            "H^2 list for {} has {} entries ({} distinct), expected {expect}",
            rs.alg,
            out.len(),
            distinct.len()
        )));
    }
    Ok(out)
}

pub fn h2_irr(rs: &RootSystem, mu: &Weight) -> Result<CohomologyAnswer> {
    let warnings = prepare(rs, mu)?;
    let list: Vec<(Weight, Option<Witness>)> = enumerate_h2_irr(rs)?.into_iter().map(|w| (w, None)).collect();
    let (found, wit) = lookup(mu, &list);
    Ok(answer(2, CoefficientKind::Irreducible, wit, found, warnings))
}

/// H^1 and H^2 with coefficients in U(g) under the adjoint action.
pub fn enveloping_answers(alg: AlgebraSpec) -> (CohomologyAnswer, CohomologyAnswer) {
    let warnings: Vec<String> = if alg.is_square_sl() {
        vec![format!("{alg} has a one-dimensional center; the constant answers are not established here")]
    } else {
        Vec::new()
    };
    let h1 = CohomologyAnswer {
        degree: 1,
        coefficient_kind: CoefficientKind::Enveloping,
        dimension: Dimension::Nonzero,
        witness: Some(Witness::PbwAd),
        warnings: warnings.clone(),
    };
    let h2 = CohomologyAnswer {
        degree: 2,
        coefficient_kind: CoefficientKind::Enveloping,
        dimension: Dimension::Exact(0),
        witness: None,
        warnings,
    };
    (h1, h2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::atypicality::mu_star;

    fn sl(m: usize, n: usize) -> RootSystem {
        RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap()
    }

    fn dim(a: CohomologyAnswer) -> u64 {
        match a.dimension {
            Dimension::Exact(d) => d,
            Dimension::Nonzero => panic!("not exact"),
        }
    }

    fn w(r: &RootSystem, s: &str) -> Weight {
        Weight::parse(r.alg, s).unwrap()
    }

    #[test]
    fn kac_h1() {
        let r = sl(2, 1);
        assert_eq!(dim(h1_kac(&r, &w(&r, "1,1|-2")).unwrap()), 1);
        assert_eq!(dim(h1_kac(&r, &Weight::zero(r.alg)).unwrap()), 0);
        let o = RootSystem::build(AlgebraSpec::ospc(2).unwrap()).unwrap();
        let t = &o.two_rho1() + &o.alpha_max().weight;
        assert_eq!(dim(h1_kac(&o, &t).unwrap()), 1);
    }

    #[test]
    fn kac_h2() {
        let r = sl(2, 2);
        let lam = &r.two_rho1() + &sp(&r, Special::Eta1);
        let a = h2_kac(&r, &lam).unwrap();
        assert_eq!(a.witness, Some(Witness::Phi21));
        assert_eq!(dim(a.clone()), 1);
        assert!(!a.warnings.is_empty());
        let r = sl(2, 1);
        assert_eq!(dim(h2_kac(&r, &r.two_rho1()).unwrap()), 0);
        let r = sl(3, 1);
        let lam = &r.two_rho1() + &sp(&r, Special::TwoAmax);
        assert_eq!(dim(h2_kac(&r, &lam).unwrap()), 1);
    }

    #[test]
    fn irr_h1() {
        let r = sl(2, 1);
        assert_eq!(dim(h1_irr(&r, &w(&r, "0,-1|1")).unwrap()), 1);
        assert_eq!(dim(h1_irr(&r, &r.two_rho1()).unwrap()), 1);
        let r = sl(3, 2);
        assert_eq!(dim(h1_irr(&r, &sp(&r, Special::Mu(1))).unwrap()), 1);
        assert_eq!(dim(h1_irr(&r, &r.two_rho1()).unwrap()), 0);
    }

    #[test]
    fn irr_h2() {
        let r = sl(2, 1);
        assert_eq!(dim(h2_irr(&r, &sp(&r, Special::Minus2Amin)).unwrap()), 1);
        assert_eq!(dim(h2_irr(&r, &Weight::zero(r.alg)).unwrap()), 0);
        let r = sl(4, 3);
        let x = &sp(&r, Special::Mu(2)) + &sp(&r, Special::MuIJ(2, 0));
        assert_eq!(dim(h2_irr(&r, &x).unwrap()), 1);
    }

    #[test]
    fn h2_counts() {
        for (m, n, c) in [(2, 1, 2), (3, 2, 6), (4, 3, 10), (5, 4, 15), (5, 5, 21)] {
            let r = sl(m, n);
            let list = enumerate_h2_irr(&r).unwrap();
            assert_eq!(list.len(), c);
            assert!(list.iter().all(|x| x.is_integral_dominant()));
        }
    }

    #[test]
    fn duality_invariance() {
        for n in 1..=4usize {
            for m in n..=n + 1 {
                if m == n {
                    continue;
                }
                let r = sl(m, n);
                for x in h1_irr_weights(&r) {
                    let d = mu_star(&r, &x).unwrap();
                    assert_eq!(dim(h1_irr(&r, &d).unwrap()), 1, "sl({m}|{n}) {x}");
                }
                for x in enumerate_h2_irr(&r).unwrap() {
                    let d = mu_star(&r, &x).unwrap();
                    assert_eq!(dim(h2_irr(&r, &d).unwrap()), 1, "sl({m}|{n}) {x} -> {d}");
                }
            }
        }
    }

    #[test]
    fn rejects_non_dominant() {
        let r = sl(2, 1);
        assert!(matches!(h1_kac(&r, &w(&r, "0,1|-1")), Err(Error::NotDominant(_))));
    }
}
