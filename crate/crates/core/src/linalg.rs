//! Small dense exact linear algebra over any field of rationals.

use num_traits::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref<T: Field>(rows: &mut Vec<Vec<T>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * inv.clone();
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<T: Field>(rows: &[Vec<T>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` where `A` is given by its rows.
pub fn nullspace<T: Field>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![None; ncols];
    for (i, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(i);
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![T::zero(); ncols];
        v[free] = T::one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -m[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// One solution of `A x = b`, if any.
pub fn solve<T: Field>(rows: &[Vec<T>], ncols: usize, b: &[T]) -> Option<Vec<T>> {
    let mut aug: Vec<Vec<T>> = rows
        .iter()
        .zip(b.iter())
        .map(|(r, bi)| {
            let mut v = r.clone();
            v.push(bi.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![T::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][ncols].clone();
    }
    Some(x)
}

/// Expresses vectors in a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Decomposer<T> {
    vectors: Vec<Vec<T>>,
    transform: Vec<Vec<T>>,
    // transform by column and vectors by support, for sparse input
    columns: Vec<Vec<(usize, T)>>,
    support: Vec<Vec<(usize, T)>>,
}

impl<T: Field> Decomposer<T> {
    /// Returns `None` if the family is linearly dependent.
    pub fn new(vectors: Vec<Vec<T>>) -> Option<Self> {
        let n = vectors.len();
        let dim = vectors.first().map_or(0, |v| v.len());
        let mut aug: Vec<Vec<T>> = (0..dim)
            .map(|i| {
                let mut row: Vec<T> = vectors.iter().map(|v| v[i].clone()).collect();
                row.extend((0..dim).map(|j| if i == j { T::one() } else { T::zero() }));
                row
            })
            .collect();
        let pivots = rref(&mut aug, n + dim);
        if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        let transform: Vec<Vec<T>> = aug[..n].iter().map(|row| row[n..].to_vec()).collect();
        let columns = (0..dim)
            .map(|i| {
                (0..n)
                    .filter(|&k| !transform[k][i].is_zero())
                    .map(|k| (k, transform[k][i].clone()))
                    .collect()
            })
            .collect();
        let support = vectors
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
            .collect();
        Some(Self { vectors, transform, columns, support })
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[T]) -> Option<Vec<T>> {
        let c: Vec<T> = self
            .transform
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v.iter())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect();
        let ok = (0..v.len()).all(|i| {
            let s = self
                .vectors
                .iter()
                .zip(c.iter())
                .fold(T::zero(), |acc, (b, ci)| acc + b[i].clone() * ci.clone());
            s == v[i]
        });
        ok.then_some(c)
    }

    /// Sparse version of [`Decomposer::coords`]: input and output are lists
    /// of `(index, nonzero value)`, output sorted by index.
    pub fn coords_sparse(&self, v: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
        let mut c: std::collections::BTreeMap<usize, T> = Default::default();
        for (i, x) in v {
            for (k, t) in &self.columns[*i] {
                let e = c.entry(*k).or_insert_with(T::zero);
                *e = e.clone() + t.clone() * x.clone();
            }
        }
        c.retain(|_, x| !x.is_zero());
        let mut back: std::collections::BTreeMap<usize, T> = Default::default();
        for (k, ck) in &c {
            for (i, b) in &self.support[*k] {
                let e = back.entry(*i).or_insert_with(T::zero);
                *e = e.clone() + b.clone() * ck.clone();
            }
        }
        back.retain(|_, x| !x.is_zero());
        let want: std::collections::BTreeMap<usize, T> =
            v.iter().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (*i, x.clone())).collect();
        (back == want).then(|| c.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    #[test]
    fn rank_and_nullspace_agree() {
        let a = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(0), r(1), r(1)]];
        assert_eq!(rank(&a, 3), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let s: Rat = row.iter().zip(ns[0].iter()).map(|(x, y)| *x * *y).sum();
            assert_eq!(s, r(0));
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = vec![vec![r(1), r(1)], vec![r(2), r(2)]];
        assert!(solve(&a, 2, &[r(1), r(3)]).is_none());
        assert_eq!(solve(&a, 2, &[r(1), r(2)]), Some(vec![r(1), r(0)]));
    }

    #[test]
    fn decomposer_round_trip() {
        let d = Decomposer::new(vec![vec![r(1), r(1), r(0)], vec![r(0), r(1), r(1)]]).unwrap();
        assert_eq!(d.coords(&[r(2), r(5), r(3)]), Some(vec![r(2), r(3)]));
        assert!(d.coords(&[r(1), r(0), r(0)]).is_none());
        assert!(Decomposer::new(vec![vec![r(1), r(2)], vec![r(2), r(4)]]).is_none());
    }
}
