//! Kac modules and their irreducible quotients.
//!
//! A Kac basis vector `|S, b>` stands for `f_{s_1} ... f_{s_k} b` with
//! `s_1 < ... < s_k` in the odd order and `b` a basis vector of the top
//! g0-module.

use crate::highest::{build_g0_irreducible, simple_roots};
use crate::module::{add_to, axpy, SparseVec, SuperModule};
use crate::rank::{self, SparseRow};
use crate::{q, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use supercoh_core::{Error, Rat, Result, RootSystem, Weight};

struct Kac<'a> {
    rs: &'a RootSystem,
    top: SuperModule,
    k: usize,
}

impl Kac<'_> {
    fn idx(&self, mask: usize, b: usize) -> usize {
        mask * self.top.dim() + b
    }

    fn split(&self, i: usize) -> (usize, usize) {
        (i / self.top.dim(), i % self.top.dim())
    }

    fn apply_f(&self, t: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v {
            let (mask, b) = self.split(*i);
            if mask >> t & 1 == 1 {
                continue;
            }
            let before = (mask & ((1 << t) - 1)).count_ones();
            let c = if before % 2 == 1 { -c.clone() } else { c.clone() };
            add_to(&mut out, self.idx(mask | 1 << t, b), c);
        }
        out
    }

    /// Position in the odd order of a `g_{-1}` basis element.
    fn odd_slot(&self, x: usize) -> usize {
        let first = self.rs.f_odd(0);
        debug_assert!(x >= first && x < first + self.k);
        x - first
    }

    fn apply_even(&self, x: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v {
            let (mask, b) = self.split(*i);
            let mut seen = 0;
            for t in 0..self.k {
                if mask >> t & 1 == 0 {
                    continue;
                }
                // f_{s_1}..[x, f_t]..f_{s_k} b = (-1)^seen [x, f_t] (word without f_t)
                let rest: SparseVec = [(self.idx(mask & !(1 << t), b), c.clone())].into();
                for (y, cy) in self.rs.bracket(x, self.rs.f_odd(t)) {
                    let s = self.odd_slot(*y);
                    let moved = self.apply_f(s, &rest);
                    let sg = if seen % 2 == 1 { -q(*cy) } else { q(*cy) };
                    for (j, z) in moved {
                        add_to(&mut out, j, &sg * z);
                    }
                }
                seen += 1;
            }
            for (bb, z) in self.top.act(x, b) {
                add_to(&mut out, self.idx(mask, *bb), c * z);
            }
        }
        out
    }

    fn apply_e_odd(&self, x: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v {
            let (mask, b) = self.split(*i);
            let bits: Vec<usize> = (0..self.k).filter(|t| mask >> t & 1 == 1).collect();
            for (pos, &t) in bits.iter().enumerate() {
                let tail_mask = bits[pos + 1..].iter().fold(0, |m, s| m | 1 << s);
                let tail: SparseVec = [(self.idx(tail_mask, b), c.clone())].into();
                let mut acc = SparseVec::new();
                for (y, cy) in self.rs.bracket(x, self.rs.f_odd(t)) {
                    let w = self.apply_even(*y, &tail);
                    axpy(&mut acc, &q(*cy), &w.into_iter().collect::<Vec<_>>());
                }
                for &s in bits[..pos].iter().rev() {
                    acc = self.apply_f(s, &acc);
                }
                let sg = if pos % 2 == 1 { -Q::one() } else { Q::one() };
                for (j, z) in acc {
                    add_to(&mut out, j, &sg * z);
                }
            }
        }
        out
    }

    fn apply(&self, x: usize, v: &SparseVec) -> SparseVec {
        let el = &self.rs.basis[x];
        if !el.odd {
            return self.apply_even(x, v);
        }
        if x >= self.rs.f_odd(0) {
            self.apply_f(self.odd_slot(x), v)
        } else {
            self.apply_e_odd(x, v)
        }
    }
}

/// The Kac module with highest weight `lam`.
pub fn build_kac_module(rs: &RootSystem, lam: &Weight) -> Result<SuperModule> {
    lam.require_integral_dominant()?;
    let top = build_g0_irreducible(rs, lam)?;
    let k = rs.positive_odd.len();
    let kac = Kac { rs, top, k };
    let d0 = kac.top.dim();
    let dim = d0 << k;
    let mut labels = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    let mut hvals = Vec::with_capacity(dim);
    let mut parity = Vec::with_capacity(dim);
    let mut level = Vec::with_capacity(dim);
    for mask in 0..1usize << k {
        let mut shift = Weight::zero(rs.alg);
        let mut name = String::new();
        for t in 0..k {
            if mask >> t & 1 == 1 {
                shift = &shift + &rs.positive_odd[t].weight;
                name.push_str(&format!("f{t}."));
            }
        }
        for b in 0..d0 {
            let w = &kac.top.weights[b] - &shift;
            hvals.push(rs.pair_cartan(&w));
            weights.push(w);
            labels.push(format!("{name}{}", kac.top.labels[b]));
            parity.push(mask.count_ones() % 2 == 1);
            level.push(-(mask.count_ones() as i64));
        }
    }
    let actions = (0..rs.dim())
        .map(|x| {
            Some(
                (0..dim)
                    .map(|j| {
                        let ej: SparseVec = [(j, Q::one())].into();
                        kac.apply(x, &ej).into_iter().collect()
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(SuperModule { alg: rs.alg, labels, weights, hvals, parity, level, actions })
}

/// Per weight space: basis of the maximal submodule in reduced echelon form.
struct Radical {
    space: Vec<usize>,
    local: BTreeMap<usize, usize>,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Radical {
    /// Coordinates of `v` (restricted to this weight space) in the quotient.
    fn quotient_coords(&self, v: &SparseVec) -> Vec<(usize, Q)> {
        let mut dense = vec![Q::zero(); self.space.len()];
        for (i, c) in v {
            if let Some(&l) = self.local.get(i) {
                dense[l] = c.clone();
            }
        }
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if dense[p].is_zero() {
                continue;
            }
            let f = dense[p].clone();
            for (d, x) in dense.iter_mut().zip(r) {
                *d -= &f * x;
            }
        }
        (0..self.space.len())
            .filter(|l| !self.pivots.contains(l))
            .map(|l| (self.space[l], dense[l].clone()))
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }
}

/// The irreducible module with highest weight `mu`, as the Kac module
/// modulo its maximal submodule. A vector lies in the maximal submodule iff
/// every simple raising operator maps it into the maximal submodule, which
/// determines it weight space by weight space from the top down.
pub fn build_irreducible(rs: &RootSystem, mu: &Weight) -> Result<SuperModule> {
    let kac = build_kac_module(rs, mu)?;
    let simple: Vec<usize> = simple_roots(rs, false).into_iter().map(|r| rs.e_index(r)).collect();
    let mut spaces: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
    for i in 0..kac.dim() {
        spaces.entry(kac.weights[i].coords.clone()).or_default().push(i);
    }
    let mut order: Vec<Vec<Rat>> = spaces.keys().cloned().collect();
    let height = |c: &Vec<Rat>| rs.height(&Weight { alg: rs.alg, coords: c.clone() });
    order.sort_by_key(|c| std::cmp::Reverse(height(c)));
    let mut radicals: BTreeMap<Vec<Rat>, Radical> = BTreeMap::new();
    for key in &order {
        let space = spaces[key].clone();
        let local: BTreeMap<usize, usize> = space.iter().enumerate().map(|(a, b)| (*b, a)).collect();
        let mut rows: Vec<SparseRow<Q>> = Vec::new();
        if key != &mu.coords {
            // conditions: quotient coordinates of e_j v vanish
            let mut cond: BTreeMap<(usize, usize), SparseRow<Q>> = BTreeMap::new();
            for (jx, &x) in simple.iter().enumerate() {
                let target = (&Weight { alg: rs.alg, coords: key.clone() }
                    + &rs.basis[x].weight)
                    .coords;
                let Some(rad) = radicals.get(&target) else { continue };
                for (l, &i) in space.iter().enumerate() {
                    let img: SparseVec = kac.act(x, i).iter().cloned().collect();
                    for (t, c) in rad.quotient_coords(&img) {
                        cond.entry((jx, t)).or_default().push((l, c));
                    }
                }
            }
            let cond: Vec<SparseRow<Q>> = cond.into_values().collect();
            rows = rank::nullspace(&cond, space.len());
        } else if space.len() != 1 {
            return Err(Error::Internal("highest weight space is not one-dimensional".into()));
        }
        let mut dense: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| {
                let mut d = vec![Q::zero(); space.len()];
                for (c, x) in r {
                    d[*c] = x.clone();
                }
                d
            })
            .collect();
        let pivots = supercoh_core::linalg::rref(&mut dense, space.len());
        radicals.insert(key.clone(), Radical { space, local, rows: dense, pivots });
    }
    // quotient basis: non-pivot Kac vectors
    let mut keep: Vec<usize> = Vec::new();
    for rad in radicals.values() {
        for (l, &i) in rad.space.iter().enumerate() {
            if !rad.pivots.contains(&l) {
                keep.push(i);
            }
        }
    }
    keep.sort_unstable();
    let new_index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(a, b)| (*b, a)).collect();
    let actions = (0..rs.dim())
        .map(|x| {
            Some(
                keep.iter()
                    .map(|&i| {
                        let img: SparseVec = kac.act(x, i).iter().cloned().collect();
                        let target = (&kac.weights[i] + &rs.basis[x].weight).coords;
                        match radicals.get(&target) {
                            None => Vec::new(),
                            Some(rad) => {
                                let mut r: SparseRow<Q> = rad
                                    .quotient_coords(&img)
                                    .into_iter()
                                    .map(|(t, c)| (new_index[&t], c))
                                    .collect();
                                r.sort_by_key(|e| e.0);
                                r
                            }
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(SuperModule {
        alg: rs.alg,
        labels: keep.iter().map(|&i| kac.labels[i].clone()).collect(),
        weights: keep.iter().map(|&i| kac.weights[i].clone()).collect(),
        hvals: keep.iter().map(|&i| kac.hvals[i].clone()).collect(),
        parity: keep.iter().map(|&i| kac.parity[i]).collect(),
        level: keep.iter().map(|&i| kac.level[i]).collect(),
        actions,
    })
}
