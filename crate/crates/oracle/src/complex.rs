//! Super-alternating cochains, the differential and exact cohomology.
//!
//! A cochain is stored by its values on sorted argument tuples: basis indices
//! in nondecreasing order with no even index repeated. Everything else follows
//! from super-skew-symmetry.
//!
//! Two independent codings of the differential exist: [`differential`]
//! evaluates the defining formula on arbitrary cochains, and [`Complex`]
//! assembles block matrices row by row for rank computations.

use crate::module::{add_to, axpy, SparseVec, SuperModule};
use crate::rank::{self, integer_row, Echelon, SparseRow};
use crate::{q, sign, Q};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use supercoh_core::{Error, Rat, Result, RootSystem};

/// Default bound on cochain space dimensions; `SUPERCOH_MAX_DIM` overrides it.
pub const DEFAULT_MAX_DIM: usize = 400_000;

#[derive(Clone, Debug)]
pub struct ComplexOptions {
    pub p_max: usize,
    pub max_dim: usize,
    /// Restrict to the g0-invariant subcomplex.
    pub invariant_reduction: bool,
}

impl Default for ComplexOptions {
    fn default() -> Self {
        let max_dim = std::env::var("SUPERCOH_MAX_DIM")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_MAX_DIM);
        Self { p_max: 2, max_dim, invariant_reduction: false }
    }
}

/// Sorts an argument list by super-skew-symmetry. Returns `None` when an even
/// element repeats (the value is then zero), else the sorted tuple and sign.
pub fn sort_args(rs: &RootSystem, args: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut a = args.to_vec();
    let mut s = 1;
    for i in 1..a.len() {
        let mut j = i;
        while j > 0 && a[j - 1] > a[j] {
            // adjacent swap: -(-1)^{[x][y]}
            if !(rs.basis[a[j - 1]].odd && rs.basis[a[j]].odd) {
                s = -s;
            }
            a.swap(j - 1, j);
            j -= 1;
        }
    }
    for w in a.windows(2) {
        if w[0] == w[1] && !rs.basis[w[0]].odd {
            return None;
        }
    }
    Some((a, s))
}

/// Sorted argument tuples of length `p`.
pub fn arg_tuples(rs: &RootSystem, p: usize) -> Vec<Vec<usize>> {
    fn rec(rs: &RootSystem, p: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in start..rs.dim() {
            cur.push(x);
            let next = if rs.basis[x].odd { x } else { x + 1 };
            rec(rs, p, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rs, p, 0, &mut Vec::new(), &mut out);
    out
}

fn tuple_parity(rs: &RootSystem, t: &[usize]) -> bool {
    t.iter().filter(|&&x| rs.basis[x].odd).count() % 2 == 1
}

/// A `p`-cochain with values in a module.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    pub p: usize,
    pub values: BTreeMap<Vec<usize>, SparseVec>,
}

impl Cochain {
    pub fn zero(p: usize) -> Self {
        Self { p, values: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| v.is_empty())
    }

    /// Adds `c * vec` to the value on `args`, reordering by skew-symmetry.
    pub fn add(&mut self, rs: &RootSystem, args: &[usize], c: &Q, vec: &SparseVec) {
        assert_eq!(args.len(), self.p);
        let Some((t, s)) = sort_args(rs, args) else { return };
        let coef = c * Q::from_integer(s.into());
        let entry = self.values.entry(t.clone()).or_default();
        for (i, x) in vec {
            add_to(entry, *i, &coef * x);
        }
        if entry.is_empty() {
            self.values.remove(&t);
        }
    }

    pub fn eval(&self, rs: &RootSystem, args: &[usize]) -> SparseVec {
        let Some((t, s)) = sort_args(rs, args) else { return SparseVec::new() };
        match self.values.get(&t) {
            None => SparseVec::new(),
            Some(v) => {
                let sq = Q::from_integer(s.into());
                v.iter().map(|(i, x)| (*i, x * &sq)).collect()
            }
        }
    }

    /// Splits into even and odd cochains.
    pub fn homogeneous_parts(&self, rs: &RootSystem, v: &SuperModule) -> [Cochain; 2] {
        let mut parts = [Cochain::zero(self.p), Cochain::zero(self.p)];
        for (t, vec) in &self.values {
            let tp = tuple_parity(rs, t);
            for (i, x) in vec {
                let odd = v.parity[*i] ^ tp;
                parts[odd as usize].values.entry(t.clone()).or_default().insert(*i, x.clone());
            }
        }
        parts
    }

    /// Parity if homogeneous (the zero cochain counts as even).
    pub fn parity(&self, rs: &RootSystem, v: &SuperModule) -> Option<bool> {
        let [e, o] = self.homogeneous_parts(rs, v);
        match (e.is_zero(), o.is_zero()) {
            (_, true) => Some(false),
            (true, false) => Some(true),
            _ => None,
        }
    }

    pub fn scaled(&self, c: &Q) -> Cochain {
        let mut out = Cochain::zero(self.p);
        for (t, v) in &self.values {
            let w: SparseVec = v.iter().map(|(i, x)| (*i, x * c)).filter(|(_, x)| !x.is_zero()).collect();
            if !w.is_empty() {
                out.values.insert(t.clone(), w);
            }
        }
        out
    }

    pub fn plus(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.p, other.p);
        let mut out = self.clone();
        for (t, v) in &other.values {
            let e = out.values.entry(t.clone()).or_default();
            for (i, x) in v {
                add_to(e, *i, x.clone());
            }
            if e.is_empty() {
                out.values.remove(t);
            }
        }
        out
    }

    /// The 0-cochain given by a vector.
    pub fn from_vector(v: SparseVec) -> Cochain {
        let mut c = Cochain::zero(0);
        if !v.is_empty() {
            c.values.insert(Vec::new(), v);
        }
        c
    }
}

fn bits_before(rs: &RootSystem, args: &[usize]) -> usize {
    args.iter().filter(|&&x| rs.basis[x].odd).count()
}

fn odd(rs: &RootSystem, x: usize) -> bool {
    rs.basis[x].odd
}

/// `d phi` evaluated literally from the defining formula.
pub fn differential(rs: &RootSystem, v: &SuperModule, phi: &Cochain) -> Cochain {
    let p = phi.p;
    let mut out = Cochain::zero(p + 1);
    for (par, part) in phi.homogeneous_parts(rs, v).iter().enumerate() {
        if part.is_zero() {
            continue;
        }
        let pphi = par == 1;
        for s in arg_tuples(rs, p + 1) {
            let mut val = SparseVec::new();
            for i in 0..=p {
                let before = bits_before(rs, &s[..i]) + pphi as usize;
                let e = (i % 2 == 1) ^ (odd(rs, s[i]) && before % 2 == 1);
                let mut rest = s.clone();
                rest.remove(i);
                let img = v.apply(s[i], &part.eval(rs, &rest));
                axpy(&mut val, &Q::from_integer(sign(e).into()), &img.into_iter().collect::<Vec<_>>());
            }
            for i in 0..=p {
                for j in i + 1..=p {
                    let between = bits_before(rs, &s[i + 1..j]);
                    let e = (j % 2 == 1) ^ (odd(rs, s[j]) && between % 2 == 1);
                    for (k, c) in rs.bracket(s[i], s[j]) {
                        let mut args = s.clone();
                        args[i] = *k;
                        args.remove(j);
                        let w = part.eval(rs, &args);
                        let f = Q::from_integer(sign(e).into()) * q(*c);
                        axpy(&mut val, &f, &w.into_iter().collect::<Vec<_>>());
                    }
                }
            }
            out.add(rs, &s, &Q::one(), &val);
        }
    }
    out
}

/// Contraction `i_x phi` and Lie derivative `theta_x phi`.
pub fn contraction_and_theta(
    rs: &RootSystem,
    v: &SuperModule,
    x: usize,
    phi: &Cochain,
) -> (Cochain, Cochain) {
    let p = phi.p;
    let mut ix = Cochain::zero(p.saturating_sub(1));
    let mut th = Cochain::zero(p);
    let px = odd(rs, x);
    for (par, part) in phi.homogeneous_parts(rs, v).iter().enumerate() {
        if part.is_zero() {
            continue;
        }
        let pphi = par == 1;
        if p > 0 {
            for r in arg_tuples(rs, p - 1) {
                let mut args = vec![x];
                args.extend(&r);
                let w = part.eval(rs, &args);
                let s = Q::from_integer(sign(px && pphi).into());
                ix.add(rs, &r, &s, &w);
            }
        }
        for s in arg_tuples(rs, p) {
            let mut val = v.apply(x, &part.eval(rs, &s));
            for i in 0..p {
                let before = bits_before(rs, &s[..i]) + pphi as usize;
                let e = px && before % 2 == 1;
                for (k, c) in rs.bracket(x, s[i]) {
                    let mut args = s.clone();
                    args[i] = *k;
                    let w = part.eval(rs, &args);
                    let f = -Q::from_integer(sign(e).into()) * q(*c);
                    axpy(&mut val, &f, &w.into_iter().collect::<Vec<_>>());
                }
            }
            let one = Q::one();
            th.add(rs, &s, &one, &val);
        }
    }
    (ix, th)
}

/// Block key: exact gl weight of the cochain and its parity.
pub type BlockKey = (Vec<Rat>, bool);

/// Block-matrix view of the complex for one module.
pub struct Complex<'a> {
    pub rs: &'a RootSystem,
    pub v: &'a SuperModule,
    tuples: Vec<Vec<Vec<usize>>>,
    tuple_index: Vec<HashMap<Vec<usize>, usize>>,
    tuple_weight: Vec<Vec<Vec<Rat>>>,
    action_rows: Vec<Vec<SparseRow<Q>>>,
    by_weight: BTreeMap<Vec<Rat>, Vec<usize>>,
}

fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl<'a> Complex<'a> {
    /// Prepares tuples up to degree `p_top`.
    pub fn new(rs: &'a RootSystem, v: &'a SuperModule, p_top: usize) -> Result<Self> {
        if !v.is_g_module() {
            return Err(Error::Precondition("cochains need a module over the whole algebra".into()));
        }
        let mut tuples = Vec::new();
        let mut tuple_index = Vec::new();
        let mut tuple_weight = Vec::new();
        for p in 0..=p_top {
            let ts = arg_tuples(rs, p);
            tuple_index.push(ts.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect());
            tuple_weight.push(
                ts.iter()
                    .map(|t| {
                        let mut w = vec![Rat::zero(); rs.alg.weight_len()];
                        for &x in t {
                            w = add(&w, &rs.basis[x].weight.coords);
                        }
                        w
                    })
                    .collect(),
            );
            tuples.push(ts);
        }
        let action_rows = (0..rs.dim()).map(|x| v.action_rows(x)).collect();
        let mut by_weight: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
        for i in 0..v.dim() {
            by_weight.entry(v.weights[i].coords.clone()).or_default().push(i);
        }
        Ok(Self { rs, v, tuples, tuple_index, tuple_weight, action_rows, by_weight })
    }

    pub fn p_top(&self) -> usize {
        self.tuples.len() - 1
    }

    pub fn dim(&self, p: usize) -> usize {
        self.tuples[p].len() * self.v.dim()
    }

    fn parity_of(&self, p: usize, t: usize, v: usize) -> bool {
        tuple_parity(self.rs, &self.tuples[p][t]) ^ self.v.parity[v]
    }

    /// Every block key occurring in degree `p`, with its dimension.
    pub fn blocks(&self, p: usize) -> BTreeMap<BlockKey, usize> {
        let mut out = BTreeMap::new();
        for t in 0..self.tuples[p].len() {
            let tp = tuple_parity(self.rs, &self.tuples[p][t]);
            for (w, vs) in &self.by_weight {
                for &v in vs {
                    let key = (sub(w, &self.tuple_weight[p][t]), tp ^ self.v.parity[v]);
                    *out.entry(key).or_insert(0) += 1;
                }
            }
        }
        out
    }

    /// Basis `(tuple, vector)` pairs of a block.
    pub fn block_basis(&self, p: usize, key: &BlockKey) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for t in 0..self.tuples[p].len() {
            let need = add(&key.0, &self.tuple_weight[p][t]);
            if let Some(vs) = self.by_weight.get(&need) {
                for &v in vs {
                    if self.parity_of(p, t, v) == key.1 {
                        out.push((t, v));
                    }
                }
            }
        }
        out
    }

    fn column_map(basis: &[(usize, usize)]) -> HashMap<(usize, usize), usize> {
        basis.iter().enumerate().map(|(i, b)| (*b, i)).collect()
    }

    /// Rows of `d : C^p -> C^{p+1}` on one block, columns in `block_basis(p)`
    /// order and rows in `block_basis(p + 1)` order.
    pub fn d_rows(&self, p: usize, key: &BlockKey) -> Vec<SparseRow<Q>> {
        let rs = self.rs;
        let cols = Self::column_map(&self.block_basis(p, key));
        let rows = self.block_basis(p + 1, key);
        let mut out = Vec::with_capacity(rows.len());
        for &(st, u) in &rows {
            let s = &self.tuples[p + 1][st];
            let mut row: BTreeMap<usize, Q> = BTreeMap::new();
            for i in 0..=p {
                let mut rest = s.clone();
                rest.remove(i);
                let t = self.tuple_index[p][&rest];
                let tp = tuple_parity(rs, &rest);
                let before = bits_before(rs, &s[..i]);
                for (v, a) in &self.action_rows[s[i]][u] {
                    let pphi = tp ^ self.v.parity[*v];
                    let e = (i % 2 == 1) ^ (odd(rs, s[i]) && (before + pphi as usize) % 2 == 1);
                    let c = cols[&(t, *v)];
                    let x = a * Q::from_integer(sign(e).into());
                    let en = row.entry(c).or_insert_with(Q::zero);
                    *en += x;
                }
            }
            for i in 0..=p {
                for j in i + 1..=p {
                    let between = bits_before(rs, &s[i + 1..j]);
                    let e = (j % 2 == 1) ^ (odd(rs, s[j]) && between % 2 == 1);
                    for (k, c) in rs.bracket(s[i], s[j]) {
                        let mut args = s.clone();
                        args[i] = *k;
                        args.remove(j);
                        let Some((t, sg)) = sort_args(rs, &args) else { continue };
                        let col = cols[&(self.tuple_index[p][&t], u)];
                        let x = q(*c) * Q::from_integer((sign(e) * sg).into());
                        let en = row.entry(col).or_insert_with(Q::zero);
                        *en += x;
                    }
                }
            }
            out.push(row.into_iter().filter(|(_, x)| !x.is_zero()).collect());
        }
        out
    }

    /// Rows of `theta_x` from block `key` of `C^p` to the shifted block.
    pub fn theta_rows(&self, p: usize, x: usize, key: &BlockKey) -> Vec<SparseRow<Q>> {
        let rs = self.rs;
        let px = odd(rs, x);
        let cols = Self::column_map(&self.block_basis(p, key));
        let target = (add(&key.0, &rs.basis[x].weight.coords), key.1 ^ px);
        let rows = self.block_basis(p, &target);
        let mut out = Vec::with_capacity(rows.len());
        for &(st, u) in &rows {
            let s = &self.tuples[p][st];
            let mut row: BTreeMap<usize, Q> = BTreeMap::new();
            for (v, a) in &self.action_rows[x][u] {
                if let Some(&c) = cols.get(&(st, *v)) {
                    *row.entry(c).or_insert_with(Q::zero) += a;
                }
            }
            for i in 0..p {
                let before = bits_before(rs, &s[..i]);
                for (k, c) in rs.bracket(x, s[i]) {
                    let mut args = s.clone();
                    args[i] = *k;
                    let Some((t, sg)) = sort_args(rs, &args) else { continue };
                    let ti = self.tuple_index[p][&t];
                    let pphi = tuple_parity(rs, &t) ^ self.v.parity[u];
                    let e = px && (before + pphi as usize) % 2 == 1;
                    if let Some(&col) = cols.get(&(ti, u)) {
                        let val = -q(*c) * Q::from_integer((sign(e) * sg).into());
                        *row.entry(col).or_insert_with(Q::zero) += val;
                    }
                }
            }
            out.push(row.into_iter().filter(|(_, x)| !x.is_zero()).collect());
        }
        out
    }

    /// Coordinates of a cochain, grouped by block.
    pub fn coords(&self, phi: &Cochain) -> Result<BTreeMap<BlockKey, Vec<(usize, usize, Q)>>> {
        let p = phi.p;
        if p > self.p_top() {
            return Err(Error::Precondition(format!("degree {p} above the prepared range")));
        }
        let mut out: BTreeMap<BlockKey, Vec<(usize, usize, Q)>> = BTreeMap::new();
        for (t, vec) in &phi.values {
            let ti = *self.tuple_index[p]
                .get(t)
                .ok_or_else(|| Error::Precondition("cochain stored on an unsorted tuple".into()))?;
            for (v, x) in vec {
                let key = (sub(&self.v.weights[*v].coords, &self.tuple_weight[p][ti]), self.parity_of(p, ti, *v));
                out.entry(key).or_default().push((ti, *v, x.clone()));
            }
        }
        Ok(out)
    }

    /// `d phi` through the block matrices.
    pub fn apply_d(&self, phi: &Cochain) -> Result<Cochain> {
        let p = phi.p;
        if p + 1 > self.p_top() {
            return Err(Error::Precondition(format!("degree {} above the prepared range", p + 1)));
        }
        let mut out = Cochain::zero(p + 1);
        for (key, entries) in self.coords(phi)? {
            let x = block_vector(&self.block_basis(p, &key), &entries);
            let y = mat_vec(&self.d_rows(p, &key), &x);
            out = out.plus(&self.cochain_from_block(p + 1, &key, &y));
        }
        Ok(out)
    }

    /// Cochain whose coordinates on a block are `vals`.
    pub fn cochain_from_block(&self, p: usize, key: &BlockKey, vals: &[(usize, Q)]) -> Cochain {
        let basis = self.block_basis(p, key);
        let mut c = Cochain::zero(p);
        for (i, x) in vals {
            let (t, v) = basis[*i];
            let one: SparseVec = [(v, x.clone())].into();
            c.add(self.rs, &self.tuples[p][t], &Q::one(), &one);
        }
        c
    }
}

fn block_vector(basis: &[(usize, usize)], entries: &[(usize, usize, Q)]) -> SparseRow<Q> {
    let pos: HashMap<(usize, usize), usize> = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let mut v: Vec<(usize, Q)> = entries.iter().map(|(t, u, x)| (pos[&(*t, *u)], x.clone())).collect();
    v.sort_by_key(|e| e.0);
    v
}

fn mat_vec(rows: &[SparseRow<Q>], x: &SparseRow<Q>) -> SparseRow<Q> {
    let xm: HashMap<usize, &Q> = x.iter().map(|(i, v)| (*i, v)).collect();
    let mut out = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let mut s = Q::zero();
        for (c, a) in row {
            if let Some(b) = xm.get(c) {
                s += a * *b;
            }
        }
        if !s.is_zero() {
            out.push((r, s));
        }
    }
    out
}

/// Per-degree summary of a cohomology computation.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeData {
    pub p: usize,
    /// Dimensions of the even / odd cochains (of the subcomplex if reduced).
    pub dim_even: usize,
    pub dim_odd: usize,
    /// Rank of `d` leaving this degree, by parity.
    pub rank_even: usize,
    pub rank_odd: usize,
    pub h_even: usize,
    pub h_odd: usize,
    pub h: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CochainComplex {
    pub algebra: String,
    pub module_dim: usize,
    pub invariant_reduction: bool,
    pub degrees: Vec<DegreeData>,
}

impl CochainComplex {
    pub fn h(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.h).collect()
    }
}

fn check_bound(what: &str, dim: usize, opts: &ComplexOptions) -> Result<()> {
    if dim > opts.max_dim {
        let advice = if opts.invariant_reduction {
            "raise the bound"
        } else {
            "enable invariant reduction or raise the bound"
        };
        return Err(Error::Resource(format!(
            "{what} has dimension {dim} above the bound {}; {advice}",
            opts.max_dim
        )));
    }
    Ok(())
}

/// Cochain dimensions, ranks and cohomology dimensions for `p <= p_max`.
pub fn cochain_complex(rs: &RootSystem, v: &SuperModule, opts: &ComplexOptions) -> Result<CochainComplex> {
    let p_top = opts.p_max + 1;
    if !opts.invariant_reduction {
        let tuples = arg_tuples(rs, p_top).len();
        check_bound(&format!("C^{p_top}"), tuples * v.dim(), opts)?;
    }
    let cx = Complex::new(rs, v, p_top)?;
    let mut dims = vec![[0usize; 2]; p_top + 1];
    let mut ranks = vec![[0usize; 2]; p_top + 1];
    if opts.invariant_reduction {
        let zero_hv = vec![Rat::zero(); rs.n_cartan()];
        let raising: Vec<usize> = (0..rs.positive_even.len()).map(|r| rs.e_index(r)).collect();
        let keys: Vec<BlockKey> = {
            let mut ks: Vec<BlockKey> = cx
                .blocks(0)
                .into_keys()
                .chain((1..=p_top).flat_map(|p| cx.blocks(p).into_keys()))
                .filter(|k| {
                    let w = supercoh_core::Weight { alg: rs.alg, coords: k.0.clone() };
                    rs.pair_cartan(&w) == zero_hv
                })
                .collect();
            ks.sort();
            ks.dedup();
            ks
        };
        for key in &keys {
            for p in 0..=opts.p_max {
                let basis = cx.block_basis(p, key);
                if basis.is_empty() {
                    continue;
                }
                check_bound(&format!("weight-zero block of C^{p}"), basis.len(), opts)?;
                let mut cond: Vec<SparseRow<Q>> = Vec::new();
                for &x in &raising {
                    cond.extend(cx.theta_rows(p, x, key));
                }
                let inv = rank::nullspace(&cond, basis.len());
                dims[p][key.1 as usize] += inv.len();
                let d = cx.d_rows(p, key);
                let images: Vec<SparseRow<Q>> = inv.iter().map(|k| mat_vec(&d, k)).collect();
                ranks[p][key.1 as usize] += rank::rank(&images);
            }
        }
    } else {
        for p in 0..=opts.p_max {
            for (key, n) in cx.blocks(p) {
                dims[p][key.1 as usize] += n;
                let d = cx.d_rows(p, &key);
                ranks[p][key.1 as usize] += rank::rank(&d);
            }
        }
    }
    let mut degrees = Vec::new();
    for p in 0..=opts.p_max {
        let h = |par: usize| {
            let prev = if p == 0 { 0 } else { ranks[p - 1][par] };
            dims[p][par] - ranks[p][par] - prev
        };
        let (he, ho) = (h(0), h(1));
        degrees.push(DegreeData {
            p,
            dim_even: dims[p][0],
            dim_odd: dims[p][1],
            rank_even: ranks[p][0],
            rank_odd: ranks[p][1],
            h_even: he,
            h_odd: ho,
            h: he + ho,
        });
    }
    Ok(CochainComplex {
        algebra: rs.alg.name(),
        module_dim: v.dim(),
        invariant_reduction: opts.invariant_reduction,
        degrees,
    })
}

/// `dim H^p` for `p = 0..=p_max`.
pub fn cohomology_dims(rs: &RootSystem, v: &SuperModule, opts: &ComplexOptions) -> Result<Vec<usize>> {
    Ok(cochain_complex(rs, v, opts)?.h())
}

/// Runs both the full and the reduced computation and fails on disagreement.
pub fn check_invariant_reduction(rs: &RootSystem, v: &SuperModule, p_max: usize) -> Result<Vec<usize>> {
    let base = ComplexOptions { p_max, ..ComplexOptions::default() };
    let full = cohomology_dims(rs, v, &ComplexOptions { invariant_reduction: false, ..base.clone() })?;
    let red = cohomology_dims(rs, v, &ComplexOptions { invariant_reduction: true, ..base })?;
    if full != red {
        return Err(Error::Internal(format!(
            "invariant reduction disagrees with the full complex: {red:?} vs {full:?}"
        )));
    }
    Ok(full)
}

/// Exact membership tests for a cochain.
pub(crate) fn closed_and_exact(rs: &RootSystem, v: &SuperModule, phi: &Cochain) -> Result<(bool, bool)> {
    let p = phi.p;
    let cx = Complex::new(rs, v, p + 1)?;
    let blocks = cx.coords(phi)?;
    let mut closed = true;
    let mut exact = true;
    for (key, entries) in &blocks {
        let basis = cx.block_basis(p, key);
        let x = block_vector(&basis, entries);
        if !mat_vec(&cx.d_rows(p, key), &x).is_empty() {
            closed = false;
        }
        if p == 0 {
            exact = false;
            continue;
        }
        let prev = cx.d_rows(p - 1, key);
        let ncols = cx.block_basis(p - 1, key).len();
        let mut ech = Echelon::new();
        for col in rank::transpose(&prev, ncols) {
            ech.insert(integer_row(&col));
        }
        if !ech.contains(integer_row(&x)) {
            exact = false;
        }
    }
    Ok((closed, exact))
}
