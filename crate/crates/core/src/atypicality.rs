//! Atypicality matrices, nqc relations, northeast chains and the weights
//! derived from them (sl(m|n) only, except where noted).

use crate::algebra::{odd_order_cmp, Family, RootSystem};
use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::{rat, Rat};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// 1-based `(row i, column nu)` position; identified with `alpha_{i,nu}`.
pub type Pos = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Nqc {
    N,
    Q,
    C,
}

impl fmt::Display for Nqc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Nqc::N => "n",
            Nqc::Q => "q",
            Nqc::C => "c",
        })
    }
}

fn require_sl(mu: &Weight, what: &str) -> Result<()> {
    if mu.alg.family != Family::Sl {
        return Err(Error::Domain(format!("{what} is defined for sl(m|n) weights only")));
    }
    Ok(())
}

fn to_int(x: Rat, what: &str) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::NotIntegral(format!("{what} = {x} is not an integer")));
    }
    Ok(x.to_integer())
}

/// `A(mu)_{i,eta} = mu_i + mu_eta' + m - i + 1 - eta`.
pub fn atypicality_matrix(mu: &Weight) -> Result<Vec<Vec<i64>>> {
    require_sl(mu, "the atypicality matrix")?;
    let (m, n) = (mu.alg.m, mu.alg.n);
    let c = &mu.coords;
    let mut a = vec![vec![0i64; n]; m];
    for i in 1..=m {
        for eta in 1..=n {
            let v = c[i - 1] + c[m + eta - 1] + rat(m as i64 - i as i64 + 1 - eta as i64);
            a[i - 1][eta - 1] = to_int(v, &format!("A({i},{eta})"))?;
        }
    }
    Ok(a)
}

/// Zero positions of `A(mu)` in increasing odd order.
pub fn atypical_roots(mu: &Weight) -> Result<Vec<Pos>> {
    let a = atypicality_matrix(mu)?;
    let mut z: Vec<Pos> = Vec::new();
    for (i, row) in a.iter().enumerate() {
        for (eta, &x) in row.iter().enumerate() {
            if x == 0 {
                z.push((i + 1, eta + 1));
            }
        }
    }
    z.sort_by(|p, q| odd_order_cmp(*p, *q));
    Ok(z)
}

fn integral_dominant(mu: &Weight) -> Result<()> {
    require_sl(mu, "this operation")?;
    mu.require_integral_dominant()
}

/// Row `t` (0-based) holds `d_{1,t+1} .. d_{t,t+1}`; reading the rows from
/// last to first reproduces the usual triangle from the top.
pub fn nqc_type(mu: &Weight) -> Result<Vec<Vec<Nqc>>> {
    integral_dominant(mu)?;
    let a = atypicality_matrix(mu)?;
    let g = atypical_roots(mu)?;
    let mut rows = Vec::with_capacity(g.len());
    for t in 0..g.len() {
        let mut row = Vec::with_capacity(t);
        for s in 0..t {
            let (bs, cs) = g[s];
            let (bt, ct) = g[t];
            let x = a[bt - 1][cs - 1];
            let h = (bs as i64 - bt as i64) + (ct as i64 - cs as i64) + 1;
            row.push(match x.cmp(&(h - 1)) {
                std::cmp::Ordering::Greater => Nqc::N,
                std::cmp::Ordering::Equal => Nqc::Q,
                std::cmp::Ordering::Less => Nqc::C,
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeChains {
    pub east: Vec<Vec<Pos>>,
    pub north: Vec<Vec<Pos>>,
    pub union: BTreeSet<Pos>,
}

pub fn ne_chains(mu: &Weight) -> Result<NeChains> {
    integral_dominant(mu)?;
    let n = mu.alg.n as i64;
    let a = atypicality_matrix(mu)?;
    let c = &mu.coords;
    let mm = mu.alg.m;
    let even_label = |i: i64| to_int(c[i as usize - 1] - c[i as usize], "a_i");
    let odd_label = |eta: i64| to_int(c[mm + eta as usize - 1] - c[mm + eta as usize], "a_eta");
    let entry = |i: i64, eta: i64| a[i as usize - 1][eta as usize - 1];
    let mut east = Vec::new();
    let mut north = Vec::new();
    let mut union = BTreeSet::new();
    for (b, cc) in atypical_roots(mu)? {
        let (mut i, mut eta) = (b as i64, cc as i64);
        let mut e = vec![(b, cc)];
        while eta + 1 <= n {
            let ni = i - odd_label(eta)?;
            if ni < 1 || entry(ni, eta + 1) >= 0 {
                break;
            }
            i = ni;
            eta += 1;
            e.push((i as usize, eta as usize));
        }
        let (mut i, mut eta) = (b as i64, cc as i64);
        let mut nn = vec![(b, cc)];
        while i - 1 >= 1 {
            let ne = eta + even_label(i - 1)?;
            if ne > n || entry(i - 1, ne) <= 0 {
                break;
            }
            i -= 1;
            eta = ne;
            nn.push((i as usize, eta as usize));
        }
        union.extend(e.iter().copied());
        union.extend(nn.iter().copied());
        east.push(e);
        north.push(nn);
    }
    Ok(NeChains { east, north, union })
}

fn add_positions(mu: &Weight, set: &BTreeSet<Pos>) -> Weight {
    let m = mu.alg.m;
    let mut w = mu.clone();
    for &(i, nu) in set {
        w.coords[i - 1] += rat(1);
        w.coords[m + nu - 1] -= rat(1);
    }
    w
}

/// `mu` plus the sum of the odd roots on its northeast chains.
pub fn capital_lambda(mu: &Weight) -> Result<Weight> {
    let ne = ne_chains(mu)?;
    Ok(add_positions(mu, &ne.union))
}

/// `{(i,nu) : nu > mu_i - mu_m and i <= m - (mu_1' - mu_nu')}`.
pub fn p_mu(mu: &Weight) -> Result<BTreeSet<Pos>> {
    integral_dominant(mu)?;
    let (m, n) = (mu.alg.m, mu.alg.n);
    let c = &mu.coords;
    let mut out = BTreeSet::new();
    for i in 1..=m {
        let di = to_int(c[i - 1] - c[m - 1], "mu_i - mu_m")?;
        for nu in 1..=n {
            let dn = to_int(c[m] - c[m + nu - 1], "mu_1' - mu_nu'")?;
            if (nu as i64) > di && (i as i64) <= m as i64 - dn {
                out.insert((i, nu));
            }
        }
    }
    Ok(out)
}

/// `mn - sum_i (mu_i - mu_m) - sum_nu (mu_1' - mu_nu')`.
pub fn p_mu_count_formula(mu: &Weight) -> Result<i64> {
    integral_dominant(mu)?;
    let (m, n) = (mu.alg.m, mu.alg.n);
    let c = &mu.coords;
    let mut total = (m * n) as i64;
    for i in 0..m {
        total -= to_int(c[i] - c[m - 1], "mu_i - mu_m")?;
    }
    for nu in 0..n {
        total -= to_int(c[m] - c[m + nu], "mu_1' - mu_nu'")?;
    }
    Ok(total)
}

/// Representatives to try for shape matching: the normalized one for
/// m != n, and a bounded range of supertrace shifts for m = n.
fn representatives(mu: &Weight) -> Vec<Vec<Rat>> {
    let (m, n) = (mu.alg.m, mu.alg.n);
    if m != n {
        return vec![mu.normalized().coords];
    }
    let bound = mu.coords.iter().map(|x| x.abs().ceil().to_integer()).max().unwrap_or(0) + n as i64 + 1;
    (-bound..=bound)
        .map(|t| {
            mu.coords
                .iter()
                .enumerate()
                .map(|(i, x)| if i < m { x + rat(t) } else { x - rat(t) })
                .collect()
        })
        .collect()
}

fn permissible_k(c: &[Rat], m: usize, n: usize) -> Option<usize> {
    let ints: Option<Vec<i64>> = c.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect();
    let c = ints?;
    if c.iter().all(|&x| x == 0) {
        return Some(0);
    }
    let (even, odd) = c.split_at(m);
    let (mi, ni) = (m as i64, n as i64);
    for k in 1..=n {
        let ki = k as i64;
        let head = &odd[..n - k];
        if head.windows(2).any(|w| w[1] > w[0]) || head.iter().any(|&x| x > 0 || x < -ki) {
            continue;
        }
        let mut j = vec![0i64; k + 1];
        for &x in head {
            j[(-x) as usize] += 1;
        }
        // mu_s from the tail: odd[n-k + (k - s)] = -mu_s - m + n
        let mut mus = vec![0i64; k + 1];
        for s in 1..=k {
            mus[s] = -odd[n - s] - mi + ni;
        }
        if m as i64 - ni + j[k] < 0 {
            continue;
        }
        let mut expect = Vec::with_capacity(m);
        expect.extend_from_slice(&mus[1..]);
        expect.extend(std::iter::repeat(ki).take((mi - ni + j[k]) as usize));
        for t in (0..k).rev() {
            expect.extend(std::iter::repeat(t as i64).take(j[t] as usize));
        }
        if expect.len() != m || expect != even {
            continue;
        }
        let nonincreasing = mus[1..].windows(2).all(|w| w[0] >= w[1]) && mus[k] >= ki;
        let cond = (1..=k).all(|s| mus[s] == j[s..].iter().sum::<i64>() + ki);
        let cond1 = (1..=k).all(|s| j[s..].iter().sum::<i64>() <= ni - ki - s as i64);
        if nonincreasing && cond && cond1 && 2 * k <= n {
            return Some(k);
        }
    }
    None
}

/// The `k` for which `mu` is a k-fold permissible weight; `Some(0)` for the
/// zero weight and `None` if `mu` is not permissible.
pub fn permissibility(mu: &Weight) -> Result<Option<usize>> {
    integral_dominant(mu)?;
    let (m, n) = (mu.alg.m, mu.alg.n);
    Ok(representatives(mu).iter().find_map(|c| permissible_k(c, m, n)))
}

/// `Lambda_mu - 2 rho_1`, the highest weight of the bottom level of `L_mu`.
pub fn mu_bottom(rs: &RootSystem, mu: &Weight) -> Result<Weight> {
    Ok(&capital_lambda(mu)? - &rs.two_rho1())
}

/// Highest weight of the dual module `L_mu^*`: minus the reversed lowest
/// weight `Lambda_mu - 2 rho_1` of `L_mu`.
pub fn mu_star(rs: &RootSystem, mu: &Weight) -> Result<Weight> {
    (&rs.two_rho1() - &capital_lambda(mu)?).reverse()
}

/// Pairings `(w + rho, alpha)` for every positive odd root (odd order).
pub fn odd_pairings(rs: &RootSystem, w: &Weight) -> Vec<Rat> {
    let wr = w + &rs.rho;
    rs.positive_odd.iter().map(|a| wr.bilinear_form(&a.weight)).collect()
}

/// Indices of the atypical positive odd roots, valid for both families.
pub fn atypical_root_indices(rs: &RootSystem, w: &Weight) -> Vec<usize> {
    odd_pairings(rs, w)
        .iter()
        .enumerate()
        .filter(|(_, x)| x.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Visits every set of distinct positive odd roots summing to `w` (as index
/// lists into `rs.positive_odd`, sorted); the visitor returns `false` to stop.
fn visit_odd_subsets(rs: &RootSystem, w: &Weight, visit: &mut dyn FnMut(Vec<usize>) -> bool) {
    match rs.alg.family {
        Family::Ospc => {
            let k = rs.positive_odd.len();
            for mask in 0u64..(1u64 << k) {
                let mut s = Weight::zero(rs.alg);
                let mut idx = Vec::new();
                for b in 0..k {
                    if mask >> b & 1 == 1 {
                        s = &s + &rs.positive_odd[b].weight;
                        idx.push(b);
                    }
                }
                if s == *w && !visit(idx) {
                    return;
                }
            }
        }
        Family::Sl => {
            let (m, n) = (rs.alg.m, rs.alg.n);
            let w = if m != n { w.normalized() } else { w.clone() };
            let rows: Option<Vec<i64>> = w.even().iter().map(|x| x.is_integer().then(|| x.to_integer())).collect();
            let cols: Option<Vec<i64>> = w.odd().iter().map(|x| x.is_integer().then(|| -x.to_integer())).collect();
            let (Some(rows), Some(mut cols)) = (rows, cols) else { return };
            if rows.iter().any(|&r| r < 0 || r > n as i64)
                || cols.iter().any(|&c| c < 0 || c > m as i64)
                || rows.iter().sum::<i64>() != cols.iter().sum::<i64>()
            {
                return;
            }
            let mut chosen: Vec<Pos> = Vec::new();
            let mut stop = false;
            fn rec(
                i: usize,
                rows: &[i64],
                cols: &mut Vec<i64>,
                chosen: &mut Vec<Pos>,
                rs: &RootSystem,
                visit: &mut dyn FnMut(Vec<usize>) -> bool,
                stop: &mut bool,
            ) {
                let m = rows.len();
                if *stop {
                    return;
                }
                if i == m {
                    if cols.iter().all(|&c| c == 0) {
                        let mut idx: Vec<usize> = chosen
                            .iter()
                            .map(|&(a, b)| rs.odd_root_index(a, b).expect("valid position"))
                            .collect();
                        idx.sort_unstable();
                        if !visit(idx) {
                            *stop = true;
                        }
                    }
                    return;
                }
                // remaining rows (including this one) must be able to fill every column
                let left = (m - i) as i64;
                if cols.iter().any(|&c| c > left) {
                    return;
                }
                let need = rows[i] as usize;
                let n = cols.len();
                let mut pick: Vec<usize> = Vec::with_capacity(need);
                fn comb(
                    start: usize,
                    need: usize,
                    pick: &mut Vec<usize>,
                    i: usize,
                    rows: &[i64],
                    cols: &mut Vec<i64>,
                    chosen: &mut Vec<Pos>,
                    rs: &RootSystem,
                    visit: &mut dyn FnMut(Vec<usize>) -> bool,
                    stop: &mut bool,
                ) {
                    if *stop {
                        return;
                    }
                    if pick.len() == need {
                        for &c in pick.iter() {
                            cols[c] -= 1;
                            chosen.push((i + 1, c + 1));
                        }
                        rec(i + 1, rows, cols, chosen, rs, visit, stop);
                        for &c in pick.iter() {
                            cols[c] += 1;
                            chosen.pop();
                        }
                        return;
                    }
                    let n = cols.len();
                    for c in start..n {
                        if n - c < need - pick.len() {
                            break;
                        }
                        if cols[c] > 0 {
                            pick.push(c);
                            comb(c + 1, need, pick, i, rows, cols, chosen, rs, visit, stop);
                            pick.pop();
                        }
                    }
                }
                let _ = n;
                comb(0, need, &mut pick, i, rows, cols, chosen, rs, visit, stop);
            }
            rec(0, &rows, &mut cols, &mut chosen, rs, visit, &mut stop);
        }
    }
}

/// All sets of distinct positive odd roots summing to `w`, sorted.
pub fn odd_subset_representations(rs: &RootSystem, w: &Weight) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    visit_odd_subsets(rs, w, &mut |s| {
        out.push(s);
        true
    });
    out.sort();
    out
}

/// True if `w` is a sum of distinct positive odd roots (the empty sum allowed).
pub fn is_sum_of_distinct_odd(rs: &RootSystem, w: &Weight) -> bool {
    let mut found = false;
    visit_odd_subsets(rs, w, &mut |_| {
        found = true;
        false
    });
    found
}

#[derive(Clone, Debug, Serialize)]
pub struct AtypicalityReport {
    pub mu: String,
    pub dynkin: String,
    pub matrix: Vec<Vec<i64>>,
    pub atypical_roots: Vec<Pos>,
    /// Row t lists `d_{1t} .. d_{t-1,t}` (bottom-up reading of the triangle).
    pub nqc: Vec<Vec<String>>,
    pub east_chains: Vec<Vec<Pos>>,
    pub north_chains: Vec<Vec<Pos>>,
    pub ne_union: Vec<Pos>,
    pub lambda_mu: String,
    pub p_mu: Vec<Pos>,
}

pub fn report(mu: &Weight) -> Result<AtypicalityReport> {
    integral_dominant(mu)?;
    let ne = ne_chains(mu)?;
    Ok(AtypicalityReport {
        mu: mu.to_string(),
        dynkin: mu.dynkin_string(),
        matrix: atypicality_matrix(mu)?,
        atypical_roots: atypical_roots(mu)?,
        nqc: nqc_type(mu)?
            .iter()
            .map(|r| r.iter().map(|d| d.to_string()).collect())
            .collect(),
        lambda_mu: add_positions(mu, &ne.union).to_string(),
        east_chains: ne.east,
        north_chains: ne.north,
        ne_union: ne.union.into_iter().collect(),
        p_mu: p_mu(mu)?.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::special::{special_weight_in, Special};

    fn sl(m: usize, n: usize) -> RootSystem {
        RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap()
    }

    fn w(r: &RootSystem, s: &str) -> Weight {
        Weight::parse(r.alg, s).unwrap()
    }

    fn sp(r: &RootSystem, k: Special) -> Weight {
        special_weight_in(r, k).unwrap()
    }

    #[test]
    fn small_matrices() {
        let r = sl(2, 1);
        assert_eq!(atypicality_matrix(&Weight::zero(r.alg)).unwrap(), vec![vec![1], vec![0]]);
        let t = w(&r, "1,0|-1");
        assert_eq!(atypicality_matrix(&t).unwrap(), vec![vec![1], vec![-1]]);
        assert!(atypical_roots(&t).unwrap().is_empty());
        assert!(nqc_type(&t).unwrap().is_empty());
        assert_eq!(capital_lambda(&t).unwrap(), t);
    }

    #[test]
    fn zero_weight_chains_sl21() {
        let r = sl(2, 1);
        let ne = ne_chains(&Weight::zero(r.alg)).unwrap();
        assert_eq!(ne.union.into_iter().collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);
        assert_eq!(capital_lambda(&Weight::zero(r.alg)).unwrap(), r.two_rho1());
    }

    #[test]
    fn p_mu_small_cases() {
        let r = sl(3, 2);
        let zero = Weight::zero(r.alg);
        assert_eq!(p_mu(&zero).unwrap().len(), 6);
        let mu0 = sp(&r, Special::Mu(0));
        let p: Vec<_> = p_mu(&mu0).unwrap().into_iter().collect();
        assert_eq!(p, vec![(1, 2), (3, 1)]);
        assert_eq!(ne_chains(&mu0).unwrap().union.into_iter().collect::<Vec<_>>(), p);
    }

    #[test]
    fn permissibility_basics() {
        let r = sl(4, 3);
        assert_eq!(permissibility(&Weight::zero(r.alg)).unwrap(), Some(0));
        assert_eq!(permissibility(&sp(&r, Special::Mu(0))).unwrap(), Some(1));
        assert_eq!(permissibility(&sp(&r, Special::Mu(1))).unwrap(), Some(1));
        assert_eq!(permissibility(&sp(&r, Special::Mu(2))).unwrap(), None);
        assert_eq!(permissibility(&r.two_rho1()).unwrap(), None);
        let r2 = sl(2, 1);
        assert_eq!(permissibility(&r2.two_rho1()).unwrap(), None);
    }

    #[test]
    fn extreme_duals() {
        for (m, n) in [(2, 1), (2, 2), (3, 2), (4, 3), (5, 4)] {
            let r = sl(m, n);
            let top = sp(&r, Special::Mu(n as i64 - 1));
            assert_eq!(mu_star(&r, &top).unwrap(), sp(&r, Special::MinusAmin), "sl({m}|{n})");
            for j in 0..n as i64 - 1 {
                let x = sp(&r, Special::Mu(j));
                assert_eq!(mu_star(&r, &x).unwrap(), x);
            }
            // typical weights are their own Kac modules
            let mut typical = 0;
            for a in 0..4 {
                for b in 0..3 {
                    let c: Vec<i64> = (0..m as i64)
                        .map(|i| 20 + 7 * (m as i64 - i) + a)
                        .chain((1..=n as i64).map(|nu| -3 - 5 * nu - b))
                        .collect();
                    let t = Weight::from_ints(r.alg, &c).unwrap();
                    if !t.is_integral_dominant() || !atypical_roots(&t).unwrap().is_empty() {
                        continue;
                    }
                    typical += 1;
                    let tr = t.reverse().unwrap();
                    assert_eq!(mu_star(&r, &t).unwrap(), &r.two_rho1() - &tr);
                }
            }
            assert!(typical > 0, "sl({m}|{n})");
        }
    }

    #[test]
    fn subset_representations() {
        for (m, n) in [(2, 1), (3, 2), (4, 3), (5, 4)] {
            let r = sl(m, n);
            let all = odd_subset_representations(&r, &r.two_rho1());
            assert_eq!(all, vec![(0..m * n).collect::<Vec<_>>()]);
            let amin = r.alpha_min().weight.clone();
            assert_eq!(odd_subset_representations(&r, &amin), vec![vec![0]]);
            // the unique subset for mu^(n-1): row 1 and column n
            let top = sp(&r, Special::Mu(n as i64 - 1));
            let reps = odd_subset_representations(&r, &top);
            assert_eq!(reps.len(), 1);
            let mut expect: Vec<usize> = (1..=n).map(|v| r.odd_root_index(1, v).unwrap()).collect();
            expect.extend((2..=m).map(|i| r.odd_root_index(i, n).unwrap()));
            expect.sort_unstable();
            assert_eq!(reps[0], expect);
        }
        let r = sl(2, 1);
        assert!(odd_subset_representations(&r, &w(&r, "2,0|-2")).is_empty());
        assert!(is_sum_of_distinct_odd(&r, &Weight::zero(r.alg)));
    }

    #[test]
    fn ospc_subsets_and_atypicality() {
        let r = RootSystem::build(AlgebraSpec::ospc(3).unwrap()).unwrap();
        assert_eq!(odd_subset_representations(&r, &r.two_rho1()).len(), 1);
        let z = Weight::zero(r.alg);
        assert_eq!(atypical_root_indices(&r, &z).len(), 1);
        assert!(atypical_root_indices(&r, &r.two_rho1()).len() == 1);
    }
}
