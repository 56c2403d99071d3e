//! Irreducible highest weight modules built one weight depth at a time.
//!
//! A vector below the highest weight is zero in the irreducible quotient iff
//! every simple raising operator kills it, so each new weight space is the
//! image of the candidate vectors `f_j b` under `v -> (e_k v)_k`.

use crate::module::{axpy, SparseVec, SuperModule};
use crate::rank::{integer_row, Echelon, SparseRow};
use crate::{q, sign, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use supercoh_core::linalg;
use supercoh_core::{BasisKind, Error, Rat, Result, RootSystem, Weight};

/// Positive roots (indices into `rs.roots()`) that are not a sum of two
/// positive roots of the chosen kind. Sums are compared as gl weights, since
/// for sl(n|n) distinct root sums can agree on the Cartan subalgebra.
pub fn simple_roots(rs: &RootSystem, even_only: bool) -> Vec<usize> {
    let roots: Vec<_> = rs.roots().enumerate().filter(|(_, r)| !even_only || !r.odd).collect();
    roots
        .iter()
        .filter(|(_, a)| {
            !roots.iter().any(|(_, b)| {
                roots.iter().any(|(_, c)| (&b.weight + &c.weight).coords == a.weight.coords)
            })
        })
        .map(|(i, _)| *i)
        .collect()
}

/// Dimension of the irreducible g0-module with highest weight `lam`.
pub fn weyl_dimension(rs: &RootSystem, lam: &Weight) -> Rat {
    let shifted = lam + &rs.rho0;
    rs.positive_even
        .iter()
        .map(|a| a.weight.bilinear_form(&shifted) / a.weight.bilinear_form(&rs.rho0))
        .product()
}

struct Vector {
    weight: Weight,
    hv: Vec<Rat>,
    parity: bool,
    label: String,
    // images under the simple raising / lowering operators
    e: Vec<SparseRow<Q>>,
    f: Vec<SparseRow<Q>>,
}

fn to_row(v: SparseVec) -> SparseRow<Q> {
    v.into_iter().collect()
}

/// Builds the irreducible module with highest weight `lam` for the subalgebra
/// generated by the given simple roots, carrying actions for `members`.
fn build(
    rs: &RootSystem,
    simple: &[usize],
    members: &[bool],
    lam: &Weight,
    max_dim: usize,
) -> Result<SuperModule> {
    let roots: Vec<_> = rs.roots().cloned().collect();
    let s = simple.len();
    let h_simple: Vec<Vec<(usize, Rat)>> = simple
        .iter()
        .map(|&r| rs.bracket(rs.e_index(r), rs.f_index(r)).to_vec())
        .collect();
    for &(k, _) in h_simple.iter().flatten() {
        if !matches!(rs.basis[k].kind, BasisKind::Cartan(_)) {
            return Err(Error::Internal("[e, f] of a simple root left the Cartan".into()));
        }
    }
    let hv_root: Vec<Vec<Rat>> = simple.iter().map(|&r| rs.pair_cartan(&roots[r].weight)).collect();
    let hval = |hv: &[Rat], j: usize| -> Rat { h_simple[j].iter().map(|(k, c)| c * hv[*k]).sum() };

    let mut vecs = vec![Vector {
        weight: lam.clone(),
        hv: rs.pair_cartan(lam),
        parity: false,
        label: "v".into(),
        e: vec![Vec::new(); s],
        f: vec![Vec::new(); s],
    }];
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        // grouped by exact gl weight, a finer grading than the Cartan values
        let mut groups: BTreeMap<Vec<Rat>, Vec<(usize, usize)>> = BTreeMap::new();
        for &b in &layer {
            for j in 0..s {
                let key = (&vecs[b].weight - &roots[simple[j]].weight).coords;
                groups.entry(key).or_default().push((j, b));
            }
        }
        let mut next = Vec::new();
        for (_, syms) in groups {
            let nv = vecs.len() + 1;
            let mut phis: Vec<SparseVec> = Vec::with_capacity(syms.len());
            for &(j, b) in &syms {
                let mut phi = SparseVec::new();
                for k in 0..s {
                    let sg = Q::from_integer(
                        sign(roots[simple[k]].odd && roots[simple[j]].odd).into(),
                    );
                    for (c, x) in &vecs[b].e[k] {
                        for (d, y) in &vecs[*c].f[j] {
                            axpy(&mut phi, &(&sg * x * y), &[(k * nv + d, Q::one())]);
                        }
                    }
                    if k == j {
                        axpy(&mut phi, &q(hval(&vecs[b].hv, j)), &[(k * nv + b, Q::one())]);
                    }
                }
                phis.push(phi);
            }
            let mut ech = Echelon::new();
            let mut chosen: Vec<usize> = Vec::new();
            for (i, phi) in phis.iter().enumerate() {
                let row: SparseRow<Q> = phi.iter().map(|(a, b)| (*a, b.clone())).collect();
                if ech.insert(integer_row(&row)) {
                    chosen.push(i);
                }
            }
            if vecs.len() + chosen.len() > max_dim {
                return Err(Error::Resource(format!(
                    "highest weight module exceeds {max_dim} basis vectors"
                )));
            }
            let first_new = vecs.len();
            for &i in &chosen {
                let (j, b) = syms[i];
                let mut e = vec![Vec::new(); s];
                for (key, x) in &phis[i] {
                    e[key / nv].push((key % nv, x.clone()));
                }
                let wj = &roots[simple[j]].weight;
                vecs.push(Vector {
                    weight: &vecs[b].weight - wj,
                    hv: vecs[b].hv.iter().zip(&hv_root[j]).map(|(x, y)| x - y).collect(),
                    parity: vecs[b].parity ^ roots[simple[j]].odd,
                    label: format!("f{}.{}", simple[j], vecs[b].label),
                    e,
                    f: vec![Vec::new(); s],
                });
                next.push(vecs.len() - 1);
            }
            // express every candidate in the chosen ones
            let support: Vec<usize> = {
                let mut k: Vec<usize> = phis.iter().flat_map(|p| p.keys().copied()).collect();
                k.sort_unstable();
                k.dedup();
                k
            };
            let pos: BTreeMap<usize, usize> = support.iter().enumerate().map(|(a, b)| (*b, a)).collect();
            let a_rows: Vec<Vec<Q>> = (0..support.len())
                .map(|r| {
                    chosen
                        .iter()
                        .map(|&c| phis[c].get(&support[r]).cloned().unwrap_or_else(Q::zero))
                        .collect()
                })
                .collect();
            for (i, &(j, b)) in syms.iter().enumerate() {
                if let Some(ci) = chosen.iter().position(|&c| c == i) {
                    vecs[b].f[j] = vec![(first_new + ci, Q::one())];
                    continue;
                }
                let mut rhs = vec![Q::zero(); support.len()];
                for (k, x) in &phis[i] {
                    rhs[pos[k]] = x.clone();
                }
                let sol = linalg::solve(&a_rows, chosen.len(), &rhs)
                    .ok_or_else(|| Error::Internal("candidate outside the chosen span".into()))?;
                vecs[b].f[j] = sol
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(ci, x)| (first_new + ci, x))
                    .collect();
            }
        }
        layer = next;
    }

    let dim = vecs.len();
    let mut actions: Vec<Option<Vec<SparseRow<Q>>>> = vec![None; rs.dim()];
    for k in 0..rs.n_cartan() {
        if members[k] {
            let rows = (0..dim)
                .map(|v| {
                    let h = vecs[v].hv[k];
                    if h.is_zero() { Vec::new() } else { vec![(v, q(h))] }
                })
                .collect();
            actions[k] = Some(rows);
        }
    }
    for (j, &r) in simple.iter().enumerate() {
        actions[rs.e_index(r)] = Some(vecs.iter().map(|v| v.e[j].clone()).collect());
        actions[rs.f_index(r)] = Some(vecs.iter().map(|v| v.f[j].clone()).collect());
    }
    let mut order: Vec<usize> = (0..roots.len()).filter(|&r| members[rs.e_index(r)]).collect();
    order.sort_by_key(|&r| rs.height(&roots[r].weight));
    for r in order {
        if simple.contains(&r) {
            continue;
        }
        for lowering in [false, true] {
            let idx = |t: usize| if lowering { rs.f_index(t) } else { rs.e_index(t) };
            let target = idx(r);
            let mut found = None;
            'search: for b in 0..roots.len() {
                if actions[idx(b)].is_none() {
                    continue;
                }
                for &j in simple {
                    let br = rs.bracket(idx(b), idx(j));
                    if br.len() == 1 && br[0].0 == target {
                        found = Some((idx(b), idx(j), br[0].1));
                        break 'search;
                    }
                }
            }
            let (x, y, c) = found.ok_or_else(|| {
                Error::Internal(format!("no bracket produces {}", rs.basis[target].name))
            })?;
            let sg = Q::from_integer(sign(rs.basis[x].odd && rs.basis[y].odd).into());
            let inv = q(c).recip();
            let ax = actions[x].clone().unwrap();
            let ay = actions[y].clone().unwrap();
            let apply = |a: &Vec<SparseRow<Q>>, v: &SparseVec| {
                let mut out = SparseVec::new();
                for (j, c) in v {
                    axpy(&mut out, c, &a[*j]);
                }
                out
            };
            let cols: Vec<SparseRow<Q>> = (0..dim)
                .map(|v| {
                    let ev: SparseVec = [(v, Q::one())].into();
                    let mut out = apply(&ax, &apply(&ay, &ev));
                    let yx = apply(&ay, &apply(&ax, &ev));
                    for (i, z) in yx {
                        axpy(&mut out, &(-&sg * z), &[(i, Q::one())]);
                    }
                    to_row(out.into_iter().map(|(i, z)| (i, z * &inv)).collect())
                })
                .collect();
            actions[target] = Some(cols);
        }
    }
    let lam_level = lam.level();
    Ok(SuperModule {
        alg: rs.alg,
        labels: vecs.iter().map(|v| v.label.clone()).collect(),
        level: vecs
            .iter()
            .map(|v| (v.weight.level() - lam_level).to_integer())
            .collect(),
        hvals: vecs.iter().map(|v| v.hv.clone()).collect(),
        parity: vecs.iter().map(|v| v.parity).collect(),
        weights: vecs.into_iter().map(|v| v.weight).collect(),
        actions,
    })
}

/// The irreducible g0-module with highest weight `lam`, checked against the
/// Weyl dimension formula.
pub fn build_g0_irreducible(rs: &RootSystem, lam: &Weight) -> Result<SuperModule> {
    lam.require_integral_dominant()?;
    let expect = weyl_dimension(rs, lam);
    if !expect.is_integer() {
        return Err(Error::Internal(format!("non-integral Weyl dimension {expect}")));
    }
    let members: Vec<bool> = rs.basis.iter().map(|b| !b.odd).collect();
    let m = build(rs, &simple_roots(rs, true), &members, lam, expect.to_integer() as usize)?;
    if m.dim() as i64 != expect.to_integer() {
        return Err(Error::Internal(format!(
            "g0-module of dimension {} but the Weyl formula gives {expect}",
            m.dim()
        )));
    }
    Ok(m)
}

/// The irreducible g-module with highest weight `mu`, built directly.
pub fn build_irreducible_direct(rs: &RootSystem, mu: &Weight, max_dim: usize) -> Result<SuperModule> {
    mu.require_integral_dominant()?;
    let members = vec![true; rs.dim()];
    build(rs, &simple_roots(rs, false), &members, mu, max_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use supercoh_core::AlgebraSpec;

    fn rs(m: usize, n: usize) -> RootSystem {
        RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap()
    }

    fn w(r: &RootSystem, s: &str) -> Weight {
        Weight::parse(r.alg, s).unwrap()
    }

    #[test]
    fn simple_root_counts() {
        for (m, n) in [(2, 1), (3, 2), (2, 2), (4, 1)] {
            let r = rs(m, n);
            assert_eq!(simple_roots(&r, false).len(), m + n - 1);
            assert_eq!(simple_roots(&r, true).len(), m + n - 2);
        }
        let o = RootSystem::build(AlgebraSpec::ospc(3).unwrap()).unwrap();
        assert_eq!(simple_roots(&o, false).len(), 3);
        assert_eq!(simple_roots(&o, true).len(), 2);
    }

    #[test]
    fn g0_small_dims() {
        let r = rs(2, 1);
        assert_eq!(build_g0_irreducible(&r, &Weight::zero(r.alg)).unwrap().dim(), 1);
        assert_eq!(build_g0_irreducible(&r, &r.two_rho1()).unwrap().dim(), 1);
        let m = build_g0_irreducible(&r, &w(&r, "1,0|-1")).unwrap();
        assert_eq!(m.dim(), 2);
        m.check_representation(&r).unwrap();
    }

    #[test]
    fn g0_larger_weights_match_weyl() {
        let r = rs(3, 2);
        for s in ["2,1,0|0,-3", "1,1,0|1,-3", "3,1,0|0,-4"] {
            let lam = w(&r, s);
            let m = build_g0_irreducible(&r, &lam).unwrap();
            assert_eq!(Rat::from_integer(m.dim() as i64), weyl_dimension(&r, &lam));
            m.check_representation(&r).unwrap();
        }
    }

    #[test]
    fn direct_irreducible_of_adjoint_type() {
        // sl(2|1) with highest weight alpha_max = (1,0|-1): the adjoint module
        let r = rs(2, 1);
        let m = build_irreducible_direct(&r, &w(&r, "1,0|-1"), 100).unwrap();
        assert_eq!(m.dim(), 8);
        m.check_representation(&r).unwrap();
        let triv = build_irreducible_direct(&r, &Weight::zero(r.alg), 100).unwrap();
        assert_eq!(triv.dim(), 1);
    }

    #[test]
    fn not_dominant_rejected() {
        let r = rs(2, 1);
        assert!(matches!(
            build_g0_irreducible(&r, &w(&r, "0,1|-1")),
            Err(Error::NotDominant(_))
        ));
    }
}
