//! Explicit weight families attached to `mu^(l)` and `-alpha_min`.

use crate::algebra::{Family, RootSystem};
use crate::error::{Error, Result};
use crate::special::{special_weight_in, Special};
use crate::weight::Weight;
use crate::rat;
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Weights above `mu^(l)` built from sums of `mu^(i,j)`.
    PVeeMu(i64),
    /// Weights above `-alpha_min`.
    PVeeMinusAmin,
    /// The ten-element list below `mu^(l)` with its edge omissions.
    PPlusMu(i64),
}

fn push_unique(out: &mut Vec<Weight>, seen: &mut HashSet<Weight>, w: Weight) {
    if seen.insert(w.clone()) {
        out.push(w);
    }
}

/// Strictly decreasing sequences of length `len` drawn from `lo..=hi`.
fn decreasing(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (lo..=hi).rev() {
        for rest in decreasing(len - 1, lo, first - 1) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

fn odd_root(rs: &RootSystem, i: usize, nu: usize) -> Weight {
    let k = rs.odd_root_index(i, nu).expect("position inside the matrix");
    rs.positive_odd[k].weight.clone()
}

fn p_vee_mu(rs: &RootSystem, l: i64) -> Result<Vec<Weight>> {
    let (m, n) = (rs.alg.m as i64, rs.alg.n as i64);
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for s in 1..=(n - l - 1) {
        for k in s..=(n - 1) {
            // j_1 > ... > j_{s-1} > l+1 with j_t <= n - t
            for upper in decreasing((s - 1) as usize, l + 2, n - 1) {
                if upper.iter().enumerate().any(|(t, &j)| j > n - (t as i64 + 1)) {
                    continue;
                }
                for lower in decreasing((k - s) as usize, 0, l - 1) {
                    let mut base = special_weight_in(rs, Special::MuIJ(s, l))?;
                    let mut ok = true;
                    for (t, &j) in upper.iter().enumerate() {
                        match special_weight_in(rs, Special::MuIJ(t as i64 + 1, j)) {
                            Ok(w) => base = &base + &w,
                            Err(_) => ok = false,
                        }
                    }
                    for (t, &j) in lower.iter().enumerate() {
                        match special_weight_in(rs, Special::MuIJ(s + 1 + t as i64, j)) {
                            Ok(w) => base = &base + &w,
                            Err(_) => ok = false,
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let r_top = odd_root(rs, s as usize, (n + 1 - s) as usize);
                    let r_low = odd_root(rs, (s + m - n + l + 1) as usize, (n - s - l) as usize);
                    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                        let w = &(&base + &r_top.scale(rat(a))) + &r_low.scale(rat(b));
                        push_unique(&mut out, &mut seen, w);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn p_vee_minus_amin(rs: &RootSystem) -> Result<Vec<Weight>> {
    let n = rs.alg.n as i64;
    let amin = rs.alpha_min().weight.clone();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for k in 0..=(n - 1) {
        for js in decreasing(k as usize, 0, n - 2) {
            let mut base = -&amin;
            for (t, &j) in js.iter().enumerate() {
                base = &base + &special_weight_in(rs, Special::MuIJ(t as i64 + 1, j))?;
            }
            push_unique(&mut out, &mut seen, base.clone());
            push_unique(&mut out, &mut seen, &base + &amin);
        }
    }
    Ok(out)
}

fn p_plus_mu(rs: &RootSystem, l: i64) -> Result<Vec<Weight>> {
    let n = rs.alg.n as i64;
    let sp = |k: Special| special_weight_in(rs, k);
    let amin = rs.alpha_min().weight.clone();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    // (weight, uses a +/- subscript or the index l-1, is among the last five)
    let mut entries: Vec<(Weight, bool, bool)> = vec![(sp(Special::Mu(l))?, false, false)];
    if l >= 1 {
        entries.push((sp(Special::MuMinus(l))?, true, false));
        entries.push((sp(Special::MuPlus(l - 1))?, true, false));
        entries.push((sp(Special::Mu(l - 1))?, true, false));
    }
    entries.push((Weight::zero(rs.alg), false, false));
    entries.push((&sp(Special::Mu(l))? - &amin, false, true));
    if l >= 1 {
        entries.push((&sp(Special::MuMinus(l))? - &amin, true, true));
        entries.push((&sp(Special::MuPlus(l - 1))? - &amin, true, true));
        entries.push((&sp(Special::Mu(l - 1))? - &amin, true, true));
    }
    entries.push((-&amin, false, true));
    for (w, shifted, last5) in entries {
        if (l == 0 && shifted) || (l == n - 1 && last5) {
            continue;
        }
        push_unique(&mut out, &mut seen, w);
    }
    Ok(out)
}

/// Materializes one of the explicit families for sl(m|n).
pub fn enumerate_family(rs: &RootSystem, kind: FamilyKind) -> Result<Vec<Weight>> {
    if rs.alg.family != Family::Sl {
        return Err(Error::Domain("weight families are defined for sl(m|n)".into()));
    }
    let n = rs.alg.n as i64;
    let check = |l: i64| -> Result<()> {
        if l < 0 || l > n - 1 {
            return Err(Error::Range(format!("l = {l} outside [0, {}]", n - 1)));
        }
        Ok(())
    };
    match kind {
        FamilyKind::PVeeMu(l) => {
            check(l)?;
            p_vee_mu(rs, l)
        }
        FamilyKind::PVeeMinusAmin => p_vee_minus_amin(rs),
        FamilyKind::PPlusMu(l) => {
            check(l)?;
            p_plus_mu(rs, l)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::atypicality::is_sum_of_distinct_odd;

    fn sl(m: usize, n: usize) -> RootSystem {
        RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap()
    }

    #[test]
    fn p_plus_edge_rules() {
        let r = sl(4, 3);
        let zero = Weight::zero(r.alg);
        let mu0 = special_weight_in(&r, Special::Mu(0)).unwrap();
        let amin = r.alpha_min().weight.clone();
        let l0 = enumerate_family(&r, FamilyKind::PPlusMu(0)).unwrap();
        assert_eq!(l0, vec![mu0.clone(), zero.clone(), &mu0 - &amin, -&amin]);
        let top = enumerate_family(&r, FamilyKind::PPlusMu(2)).unwrap();
        assert_eq!(top.len(), 5);
        assert!(!top.contains(&-&amin));
        assert_eq!(enumerate_family(&r, FamilyKind::PPlusMu(1)).unwrap().len(), 10);
        assert!(matches!(enumerate_family(&r, FamilyKind::PPlusMu(3)), Err(Error::Range(_))));
    }

    #[test]
    fn p_vee_minus_amin_contains_zero() {
        let r = sl(3, 2);
        let fam = enumerate_family(&r, FamilyKind::PVeeMinusAmin).unwrap();
        assert!(fam.contains(&Weight::zero(r.alg)));
        assert!(fam.contains(&-&r.alpha_min().weight));
    }

    #[test]
    fn p_vee_mu_empty_at_top() {
        for (m, n) in [(2, 1), (3, 2), (4, 3)] {
            let r = sl(m, n);
            assert!(enumerate_family(&r, FamilyKind::PVeeMu(n as i64 - 1)).unwrap().is_empty());
        }
    }

    #[test]
    fn families_are_dominant_and_linked() {
        for n in 1..=4usize {
            for m in n..=5 {
                let r = sl(m, n);
                for l in 0..n as i64 {
                    let base = special_weight_in(&r, Special::Mu(l)).unwrap();
                    for w in enumerate_family(&r, FamilyKind::PVeeMu(l)).unwrap() {
                        assert!(w.is_integral_dominant(), "sl({m}|{n}) l={l} {w}");
                        assert!(is_sum_of_distinct_odd(&r, &(&w - &base)), "sl({m}|{n}) l={l} {w}");
                    }
                    for w in enumerate_family(&r, FamilyKind::PPlusMu(l)).unwrap() {
                        assert!(w.is_integral_dominant(), "sl({m}|{n}) l={l} {w}");
                    }
                }
                for w in enumerate_family(&r, FamilyKind::PVeeMinusAmin).unwrap() {
                    assert!(w.is_integral_dominant(), "sl({m}|{n}) {w}");
                }
            }
        }
    }
}
