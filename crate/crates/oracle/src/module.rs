//! Explicit finite-dimensional modules with exact action matrices.

use crate::rank::{self, SparseRow};
use crate::{q, sign, Q};
use num_traits::Zero;
use std::collections::BTreeMap;
use supercoh_core::{AlgebraSpec, Error, Rat, Result, RootSystem, Weight};

pub type SparseVec = BTreeMap<usize, Q>;

pub(crate) fn axpy(out: &mut SparseVec, a: &Q, x: &[(usize, Q)]) {
    for (i, v) in x {
        let e = out.entry(*i).or_insert_with(Q::zero);
        *e += a * v;
        if e.is_zero() {
            out.remove(i);
        }
    }
}

pub(crate) fn add_to(out: &mut SparseVec, i: usize, v: Q) {
    let e = out.entry(i).or_insert_with(Q::zero);
    *e += v;
    if e.is_zero() {
        out.remove(&i);
    }
}

/// A weight-graded super vector space with a (partial) action of the algebra.
#[derive(Clone, Debug)]
pub struct SuperModule {
    pub alg: AlgebraSpec,
    pub labels: Vec<String>,
    pub weights: Vec<Weight>,
    /// Values of each basis weight on the Cartan basis.
    pub hvals: Vec<Vec<Rat>>,
    pub parity: Vec<bool>,
    /// Level of each basis vector, the highest weight vector sitting at 0.
    pub level: Vec<i64>,
    /// `actions[x]` is `None` when basis element `x` does not act (as for
    /// g0-modules); otherwise entry `j` is the image of basis vector `j`.
    pub actions: Vec<Option<Vec<SparseRow<Q>>>>,
}

impl SuperModule {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn acts(&self, x: usize) -> bool {
        self.actions[x].is_some()
    }

    pub fn is_g_module(&self) -> bool {
        self.actions.iter().all(|a| a.is_some())
    }

    /// Image of basis vector `j` under basis element `x`.
    pub fn act(&self, x: usize, j: usize) -> &[(usize, Q)] {
        &self.actions[x].as_ref().expect("element does not act")[j]
    }

    pub fn apply(&self, x: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v {
            axpy(&mut out, c, self.act(x, *j));
        }
        out
    }

    /// Rows of the action matrix of `x` (row `i` lists `(j, A_ij)`).
    pub fn action_rows(&self, x: usize) -> Vec<SparseRow<Q>> {
        let cols = self.actions[x].as_ref().expect("element does not act");
        rank::transpose(cols, self.dim())
    }

    pub fn top(&self) -> i64 {
        self.level.iter().copied().max().unwrap_or(0)
    }

    pub fn bottom(&self) -> i64 {
        self.level.iter().copied().min().unwrap_or(0)
    }

    pub fn at_level(&self, l: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.level[i] == l).collect()
    }

    pub fn weight_space(&self, hv: &[Rat]) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.hvals[i] == hv).collect()
    }

    /// Checks that every acting element shifts weights by its own weight and
    /// that the supercommutator relations hold on all acting pairs.
    pub fn check_representation(&self, rs: &RootSystem) -> Result<()> {
        let acting: Vec<usize> = (0..rs.dim()).filter(|&x| self.acts(x)).collect();
        for &x in &acting {
            let wx = rs.cartan_weight(x);
            let px = rs.basis[x].odd;
            for j in 0..self.dim() {
                for (i, _) in self.act(x, j) {
                    let shifted: Vec<Rat> =
                        self.hvals[j].iter().zip(wx).map(|(a, b)| a + b).collect();
                    if self.hvals[*i] != shifted {
                        return Err(Error::Internal(format!(
                            "{} moves {} to the wrong weight",
                            rs.basis[x].name, self.labels[j]
                        )));
                    }
                    if self.parity[*i] != (self.parity[j] ^ px) {
                        return Err(Error::Internal(format!(
                            "{} has the wrong parity on {}",
                            rs.basis[x].name, self.labels[j]
                        )));
                    }
                }
            }
        }
        for (ix, &x) in acting.iter().enumerate() {
            for &y in &acting[ix..] {
                let s = Q::from_integer(
                    sign(rs.basis[x].odd && rs.basis[y].odd).into(),
                );
                let br = rs.bracket(x, y);
                if let Some((k, _)) = br.iter().find(|(k, _)| !self.acts(*k)) {
                    return Err(Error::Internal(format!(
                        "acting set not closed: [{}, {}] involves {}",
                        rs.basis[x].name, rs.basis[y].name, rs.basis[*k].name
                    )));
                }
                for j in 0..self.dim() {
                    let ej: SparseVec = [(j, Q::from_integer(1.into()))].into();
                    let yj = self.apply(y, &ej);
                    let xj = self.apply(x, &ej);
                    let mut lhs = self.apply(x, &yj);
                    let yx = self.apply(y, &xj);
                    for (i, v) in yx {
                        add_to(&mut lhs, i, -(&s * v));
                    }
                    for (k, c) in br {
                        for (i, v) in self.act(*k, j) {
                            add_to(&mut lhs, *i, -(q(*c) * v));
                        }
                    }
                    if !lhs.is_empty() {
                        return Err(Error::Internal(format!(
                            "relation [{}, {}] fails on {}",
                            rs.basis[x].name, rs.basis[y].name, self.labels[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Multiplicity of each weight, keyed by Cartan values.
    pub fn character(&self) -> BTreeMap<Vec<Rat>, usize> {
        let mut ch = BTreeMap::new();
        for h in &self.hvals {
            *ch.entry(h.clone()).or_insert(0) += 1;
        }
        ch
    }
}

/// Number of g0-highest weight vectors of weight `nu` in `v`.
pub fn multiplicity_of_g0_hw(rs: &RootSystem, v: &SuperModule, nu: &Weight) -> usize {
    let hv = rs.pair_cartan(nu);
    let space = v.weight_space(&hv);
    if space.is_empty() {
        return 0;
    }
    let local: BTreeMap<usize, usize> = space.iter().enumerate().map(|(a, &b)| (b, a)).collect();
    // rows indexed by (raising operator, target vector)
    let mut rows: BTreeMap<(usize, usize), SparseRow<Q>> = BTreeMap::new();
    for r in 0..rs.positive_even.len() {
        let x = rs.e_index(r);
        if !v.acts(x) {
            continue;
        }
        for &j in &space {
            for (i, c) in v.act(x, j) {
                rows.entry((r, *i)).or_default().push((local[&j], c.clone()));
            }
        }
    }
    let rows: Vec<SparseRow<Q>> = rows.into_values().collect();
    space.len() - rank::rank(&rows)
}
