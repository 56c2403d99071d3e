//! Sparse exact elimination.
//!
//! Rank uses fraction-free integer rows: every row is scaled to coprime
//! integers and elimination keeps it that way. Null spaces go through a sparse
//! rational reduced echelon form.

use crate::Q;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow<T> = Vec<(usize, T)>;

fn lcm_denoms(row: &[(usize, Q)]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()))
}

fn primitive(row: &mut SparseRow<BigInt>) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
    if row.first().is_some_and(|(_, x)| x.is_negative()) {
        for (_, x) in row.iter_mut() {
            *x = -&*x;
        }
    }
}

/// Clears denominators and normalizes the content of a rational row.
pub fn integer_row(row: &[(usize, Q)]) -> SparseRow<BigInt> {
    let l = lcm_denoms(row);
    let mut out: SparseRow<BigInt> = row
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (*c, (x * Q::from_integer(l.clone())).to_integer()))
        .collect();
    out.sort_by_key(|(c, _)| *c);
    primitive(&mut out);
    out
}

/// `a*x - b*y` on sparse integer rows.
fn combine(a: &BigInt, x: &SparseRow<BigInt>, b: &BigInt, y: &SparseRow<BigInt>) -> SparseRow<BigInt> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push((ci, a * &x[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental echelon basis over the integers, keyed by leading column.
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseRow<BigInt>>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: SparseRow<BigInt>) -> SparseRow<BigInt> {
        // only the leading entry is eliminated; enough for rank
        while let Some(&(c, _)) = row.first() {
            let Some(p) = self.rows.get(&c) else { break };
            let a = p[0].1.clone();
            let b = row[0].1.clone();
            let g = a.gcd(&b);
            row = combine(&(&a / &g), &row, &(&b / &g), p);
            primitive(&mut row);
        }
        row
    }

    /// Adds a row; returns true if it was independent of the previous ones.
    pub fn insert(&mut self, row: SparseRow<BigInt>) -> bool {
        let r = self.reduce(row);
        match r.first() {
            Some(&(c, _)) => {
                self.rows.insert(c, r);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, row: SparseRow<BigInt>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank of a sparse rational matrix given by rows.
pub fn rank(rows: &[SparseRow<Q>]) -> usize {
    // short rows first keeps fill-in down
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| (rows[i].len(), i));
    let mut ech = Echelon::new();
    for i in order {
        ech.insert(integer_row(&rows[i]));
    }
    ech.rank()
}

/// Transposes a sparse matrix given by rows into rows of the transpose.
pub fn transpose(rows: &[SparseRow<Q>], ncols: usize) -> Vec<SparseRow<Q>> {
    let mut t: Vec<SparseRow<Q>> = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, x) in row {
            t[*c].push((r, x.clone()));
        }
    }
    t
}

/// Basis of `{x : A x = 0}` for `A` given by sparse rows over `ncols` columns.
pub fn nullspace(rows: &[SparseRow<Q>], ncols: usize) -> Vec<Vec<(usize, Q)>> {
    // sparse reduced row echelon form over the rationals
    let mut piv: BTreeMap<usize, BTreeMap<usize, Q>> = BTreeMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, Q> =
            row.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        loop {
            let hit = r.keys().find(|c| piv.contains_key(c)).copied();
            let Some(c) = hit else { break };
            let f = r[&c].clone();
            for (k, v) in &piv[&c] {
                let e = r.entry(*k).or_insert_with(Q::zero);
                *e -= &f * v;
                if e.is_zero() {
                    r.remove(k);
                }
            }
        }
        let Some((&lead, lv)) = r.iter().next() else { continue };
        let inv = lv.recip();
        for v in r.values_mut() {
            *v *= &inv;
        }
        for other in piv.values_mut() {
            if let Some(f) = other.get(&lead).cloned() {
                for (k, v) in &r {
                    let e = other.entry(*k).or_insert_with(Q::zero);
                    *e -= &f * v;
                    if e.is_zero() {
                        other.remove(k);
                    }
                }
            }
        }
        piv.insert(lead, r);
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !piv.contains_key(c)) {
        let mut v = vec![(free, Q::one())];
        for (&p, row) in &piv {
            if let Some(x) = row.get(&free) {
                v.push((p, -x.clone()));
            }
        }
        v.sort_by_key(|e| e.0);
        basis.push(v);
    }
    basis
}
