//! Algebra specifications, root systems and exact structure constants.

use crate::error::{Error, Result};
use crate::linalg::Decomposer;
use crate::weight::Weight;
use crate::{osp, rat, Rat};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Dense square matrix over the rationals.
pub type Mat = Vec<Vec<Rat>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// sl(m|n), 1 <= n <= m.
    Sl,
    /// C(n) = osp(2|2n-2), n >= 2.
    Ospc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub family: Family,
    pub m: usize,
    pub n: usize,
}

impl AlgebraSpec {
    pub fn sl(m: usize, n: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::Domain("sl(m|n) needs m, n >= 1".into()));
        }
        if n > m {
            return Err(Error::Domain(format!(
                "sl({m}|{n}) has n > m; use the isomorphism sl(m|n) = sl(n|m) and pass m={n}, n={m}"
            )));
        }
        Ok(Self { family: Family::Sl, m, n })
    }

    pub fn ospc(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("C(n) needs n >= 2, got {n}")));
        }
        Ok(Self { family: Family::Ospc, m: 2, n })
    }

    pub fn new(family: Family, m: usize, n: usize) -> Result<Self> {
        match family {
            Family::Sl => Self::sl(m, n),
            Family::Ospc => Self::ospc(n),
        }
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::Sl => format!("sl({}|{})", self.m, self.n),
            Family::Ospc => format!("C({})", self.n),
        }
    }

    /// Sizes of the even and odd coordinate blocks of a weight.
    pub fn weight_blocks(&self) -> (usize, usize) {
        match self.family {
            Family::Sl => (self.m, self.n),
            Family::Ospc => (1, self.n - 1),
        }
    }

    pub fn weight_len(&self) -> usize {
        let (a, b) = self.weight_blocks();
        a + b
    }

    /// Number of Dynkin labels (dimension of the Cartan subalgebra).
    pub fn rank(&self) -> usize {
        match self.family {
            Family::Sl => self.m + self.n - 1,
            Family::Ospc => self.n,
        }
    }

    /// Size of the defining matrices and of their even block.
    pub fn matrix_dims(&self) -> (usize, usize) {
        match self.family {
            Family::Sl => (self.m + self.n, self.m),
            Family::Ospc => (2 * self.n, 2),
        }
    }

    pub fn num_positive_odd(&self) -> usize {
        match self.family {
            Family::Sl => self.m * self.n,
            Family::Ospc => 2 * (self.n - 1),
        }
    }

    /// sl(n|n) has a one-dimensional center and the supertrace direction is
    /// not a well-defined weight coordinate.
    pub fn is_square_sl(&self) -> bool {
        self.family == Family::Sl && self.m == self.n
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub odd: bool,
    /// 0-based matrix indices `(a, b)` of the leading entry of `e_alpha`.
    pub a: usize,
    pub b: usize,
    pub weight: Weight,
    pub name: String,
}

impl Root {
    /// 1-based `(i, nu)` position of an sl odd root `alpha_{i,nu}` in the
    /// atypicality matrix.
    pub fn odd_position(&self, alg: &AlgebraSpec) -> Option<(usize, usize)> {
        (self.odd && alg.family == Family::Sl).then(|| (self.a + 1, self.b + 1 - alg.m))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Cartan(usize),
    /// Positive root vector; the index points into `RootSystem::roots`.
    E(usize),
    F(usize),
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub kind: BasisKind,
    pub odd: bool,
    pub name: String,
    pub matrix: Mat,
    /// Weight of the element under the adjoint action.
    pub weight: Weight,
}

/// Positive roots, Weyl vectors and a structure-constant table.
///
/// Basis order is frozen: Cartan elements, then `e_alpha` for every positive
/// root in `roots` order (even roots first, odd roots in the odd total order),
/// then `f_alpha` in the same order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub alg: AlgebraSpec,
    pub positive_even: Vec<Root>,
    pub positive_odd: Vec<Root>,
    pub rho0: Weight,
    pub rho1: Weight,
    pub rho: Weight,
    pub basis: Vec<BasisElement>,
    n_cartan: usize,
    brackets: Vec<Vec<Vec<(usize, Rat)>>>,
    cartan_weights: Vec<Vec<Rat>>,
}

/// Compares two sl odd roots `alpha_{i,nu}` by the odd total order.
pub fn odd_order_cmp(p: (usize, usize), q: (usize, usize)) -> Ordering {
    let (i, nu) = (p.0 as i64, p.1 as i64);
    let (j, eta) = (q.0 as i64, q.1 as i64);
    (nu - i).cmp(&(eta - j)).then(j.cmp(&i))
}

pub(crate) fn unit_matrix(d: usize, a: usize, b: usize) -> Mat {
    let mut m = vec![vec![Rat::zero(); d]; d];
    m[a][b] = rat(1);
    m
}

pub(crate) fn mat_lin(terms: &[(i64, &Mat)]) -> Mat {
    let d = terms[0].1.len();
    let mut out = vec![vec![Rat::zero(); d]; d];
    for (c, m) in terms {
        for r in 0..d {
            for s in 0..d {
                out[r][s] += rat(*c) * m[r][s];
            }
        }
    }
    out
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    let mut out = vec![vec![Rat::zero(); d]; d];
    for r in 0..d {
        for k in 0..d {
            if a[r][k].is_zero() {
                continue;
            }
            for s in 0..d {
                if !b[k][s].is_zero() {
                    out[r][s] += a[r][k] * b[k][s];
                }
            }
        }
    }
    out
}

/// `xy - (-1)^{[x][y]} yx` on matrices.
pub fn super_bracket(x: &Mat, x_odd: bool, y: &Mat, y_odd: bool) -> Mat {
    let xy = mat_mul(x, y);
    let yx = mat_mul(y, x);
    let sign = if x_odd && y_odd { rat(1) } else { rat(-1) };
    xy.iter()
        .zip(yx.iter())
        .map(|(r1, r2)| r1.iter().zip(r2.iter()).map(|(a, b)| a + sign * b).collect())
        .collect()
}

/// Supertrace with the given even block size.
pub fn supertrace(x: &Mat, even: usize) -> Rat {
    (0..x.len()).map(|i| if i < even { x[i][i] } else { -x[i][i] }).sum()
}

fn sparse_matrix(m: &Mat) -> Vec<(usize, usize, Rat)> {
    let mut out = Vec::new();
    for (r, row) in m.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            if !x.is_zero() {
                out.push((r, c, *x));
            }
        }
    }
    out
}

fn flatten(m: &Mat) -> Vec<Rat> {
    m.iter().flat_map(|r| r.iter().copied()).collect()
}

/// Raw ingredients of a matrix realization, consumed by [`RootSystem::build`].
pub(crate) struct Realization {
    pub cartan: Vec<(String, Mat)>,
    pub roots: Vec<Root>,
    pub e: Vec<Mat>,
    pub f: Vec<Mat>,
    pub rho0: Weight,
    pub rho1: Weight,
}

fn sl_realization(alg: AlgebraSpec) -> Realization {
    let (m, n) = (alg.m, alg.n);
    let d = m + n;
    let mut cartan = Vec::new();
    for i in 0..m - 1 {
        let h = mat_lin(&[(1, &unit_matrix(d, i, i)), (-1, &unit_matrix(d, i + 1, i + 1))]);
        cartan.push((format!("h{}", i + 1), h));
    }
    cartan.push((
        "h0".to_string(),
        mat_lin(&[(1, &unit_matrix(d, m - 1, m - 1)), (1, &unit_matrix(d, m, m))]),
    ));
    for v in 0..n - 1 {
        let h = mat_lin(&[
            (1, &unit_matrix(d, m + v, m + v)),
            (-1, &unit_matrix(d, m + v + 1, m + v + 1)),
        ]);
        cartan.push((format!("h{}'", v + 1), h));
    }
    let root = |a: usize, b: usize, odd: bool| {
        let mut w = Weight::zero(alg);
        w.coords[a] += rat(1);
        w.coords[b] -= rat(1);
        let lab = |x: usize| if x < m { format!("{}", x + 1) } else { format!("{}'", x + 1 - m) };
        Root { odd, a, b, weight: w, name: format!("a({},{})", lab(a), lab(b)) }
    };
    let mut even = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            even.push(root(a, b, false));
        }
    }
    for a in m..d {
        for b in a + 1..d {
            even.push(root(a, b, false));
        }
    }
    let mut odd_pos: Vec<(usize, usize)> =
        (1..=m).flat_map(|i| (1..=n).map(move |v| (i, v))).collect();
    odd_pos.sort_by(|p, q| odd_order_cmp(*p, *q));
    let odd: Vec<Root> = odd_pos.iter().map(|&(i, v)| root(i - 1, m + v - 1, true)).collect();
    let roots: Vec<Root> = even.into_iter().chain(odd).collect();
    let e = roots.iter().map(|r| unit_matrix(d, r.a, r.b)).collect();
    let f = roots.iter().map(|r| unit_matrix(d, r.b, r.a)).collect();
    let half = Rat::new(1, 2);
    let mut rho0 = Weight::zero(alg);
    for i in 0..m {
        rho0.coords[i] = rat(m as i64 - 2 * i as i64 - 1) * half;
    }
    for v in 0..n {
        rho0.coords[m + v] = rat(n as i64 - 2 * v as i64 - 1) * half;
    }
    let mut rho1 = Weight::zero(alg);
    for i in 0..m {
        rho1.coords[i] = rat(n as i64) * half;
    }
    for v in 0..n {
        rho1.coords[m + v] = rat(-(m as i64)) * half;
    }
    Realization { cartan, roots, e, f, rho0, rho1 }
}

impl RootSystem {
    pub fn build(alg: AlgebraSpec) -> Result<Self> {
        // re-validate in case the spec was constructed by hand
        let alg = AlgebraSpec::new(alg.family, alg.m, alg.n)?;
        let real = match alg.family {
            Family::Sl => sl_realization(alg),
            Family::Ospc => osp::realization(alg),
        };
        let n_cartan = real.cartan.len();
        let nroots = real.roots.len();
        let mut basis = Vec::with_capacity(n_cartan + 2 * nroots);
        for (k, (name, h)) in real.cartan.into_iter().enumerate() {
            basis.push(BasisElement {
                kind: BasisKind::Cartan(k),
                odd: false,
                name,
                matrix: h,
                weight: Weight::zero(alg),
            });
        }
        for (r, root) in real.roots.iter().enumerate() {
            basis.push(BasisElement {
                kind: BasisKind::E(r),
                odd: root.odd,
                name: format!("e_{}", root.name),
                matrix: real.e[r].clone(),
                weight: root.weight.clone(),
            });
        }
        for (r, root) in real.roots.iter().enumerate() {
            basis.push(BasisElement {
                kind: BasisKind::F(r),
                odd: root.odd,
                name: format!("f_{}", root.name),
                matrix: real.f[r].clone(),
                weight: -&root.weight,
            });
        }
        let dec = Decomposer::new(basis.iter().map(|b| flatten(&b.matrix)).collect())
            .ok_or_else(|| Error::Internal(format!("{} basis is linearly dependent", alg.name())))?;
        let dim = basis.len();
        let sparse: Vec<Vec<(usize, usize, Rat)>> = basis.iter().map(|b| sparse_matrix(&b.matrix)).collect();
        let cols = basis[0].matrix[0].len();
        let mut brackets = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let sign = if basis[i].odd && basis[j].odd { 1 } else { -1 };
                let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                for (s, a, b) in [(1, i, j), (sign, j, i)] {
                    for &(r1, c1, x) in &sparse[a] {
                        for &(r2, c2, y) in &sparse[b] {
                            if c1 == r2 {
                                *acc.entry(r1 * cols + c2).or_insert_with(Rat::zero) += x * y * rat(s);
                            }
                        }
                    }
                }
                let v: Vec<(usize, Rat)> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                brackets[i][j] = dec.coords_sparse(&v).ok_or_else(|| {
                    Error::Internal(format!(
                        "[{}, {}] leaves the span of the {} basis",
                        basis[i].name,
                        basis[j].name,
                        alg.name()
                    ))
                })?;
            }
        }
        let mut cartan_weights = Vec::with_capacity(dim);
        for x in 0..dim {
            let mut w = Vec::with_capacity(n_cartan);
            for h in 0..n_cartan {
                let br = &brackets[h][x];
                let c = match br.as_slice() {
                    [] => Rat::zero(),
                    [(k, c)] if *k == x => *c,
                    _ => {
                        return Err(Error::Internal(format!(
                            "{} is not a Cartan eigenvector",
                            basis[x].name
                        )))
                    }
                };
                w.push(c);
            }
            cartan_weights.push(w);
        }
        let (even, odd): (Vec<Root>, Vec<Root>) = real.roots.into_iter().partition(|r| !r.odd);
        let rho = &real.rho0 - &real.rho1;
        Ok(Self {
            alg,
            positive_even: even,
            positive_odd: odd,
            rho0: real.rho0,
            rho1: real.rho1,
            rho,
            basis,
            n_cartan,
            brackets,
            cartan_weights,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n_cartan(&self) -> usize {
        self.n_cartan
    }

    /// All positive roots in basis order (even first).
    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.positive_even.iter().chain(self.positive_odd.iter())
    }

    pub fn num_roots(&self) -> usize {
        self.positive_even.len() + self.positive_odd.len()
    }

    pub fn e_index(&self, root: usize) -> usize {
        self.n_cartan + root
    }

    pub fn f_index(&self, root: usize) -> usize {
        self.n_cartan + self.num_roots() + root
    }

    /// Basis index of `e` for the `k`-th positive odd root (odd order).
    pub fn e_odd(&self, k: usize) -> usize {
        self.e_index(self.positive_even.len() + k)
    }

    pub fn f_odd(&self, k: usize) -> usize {
        self.f_index(self.positive_even.len() + k)
    }

    pub fn alpha_min(&self) -> &Root {
        &self.positive_odd[0]
    }

    pub fn alpha_max(&self) -> &Root {
        self.positive_odd.last().expect("odd roots are nonempty")
    }

    /// Index in `positive_odd` of the sl root `alpha_{i,nu}` (1-based).
    pub fn odd_root_index(&self, i: usize, nu: usize) -> Option<usize> {
        self.positive_odd
            .iter()
            .position(|r| r.odd_position(&self.alg) == Some((i, nu)))
    }

    /// Supercommutator of two basis elements as sparse coordinates.
    pub fn bracket(&self, x: usize, y: usize) -> &[(usize, Rat)] {
        &self.brackets[x][y]
    }

    /// Eigenvalues of `ad h_k` on basis element `x`.
    pub fn cartan_weight(&self, x: usize) -> &[Rat] {
        &self.cartan_weights[x]
    }

    /// Values `w(h_k)` of a weight on the Cartan basis.
    pub fn pair_cartan(&self, w: &Weight) -> Vec<Rat> {
        let f = w.functional();
        self.basis[..self.n_cartan]
            .iter()
            .map(|h| (0..f.len()).map(|i| f[i] * h.matrix[i][i]).sum())
            .collect()
    }

    /// Strictly positive on every positive root; used to order weight spaces.
    pub fn height(&self, w: &Weight) -> Rat {
        match self.alg.family {
            Family::Sl => {
                let d = w.coords.len() as i64;
                w.coords.iter().enumerate().map(|(a, x)| rat(d - a as i64) * x).sum()
            }
            Family::Ospc => {
                let n = self.alg.n as i64;
                rat(n + 1) * w.coords[0]
                    + (1..w.coords.len()).map(|j| rat(n - j as i64) * w.coords[j]).sum::<Rat>()
            }
        }
    }

    /// Sum of all positive odd roots.
    pub fn two_rho1(&self) -> Weight {
        self.rho1.scale(rat(2))
    }

    /// Index of the basis element with the given name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Dimension of the odd part `g_{-1}` (equal to that of `g_{+1}`).
    pub fn dim_minus_one(&self) -> usize {
        self.positive_odd.len()
    }

    /// Even (g0) basis indices.
    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.basis[i].odd).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(m: usize, n: usize) -> RootSystem {
        RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap()
    }

    fn sum(ws: impl Iterator<Item = Weight>, alg: AlgebraSpec) -> Weight {
        ws.fold(Weight::zero(alg), |a, b| &a + &b)
    }

    #[test]
    fn sl21_odd_order() {
        let r = rs(2, 1);
        let names: Vec<_> = r.positive_odd.iter().map(|x| x.name.clone()).collect();
        assert_eq!(names, ["a(2,1')", "a(1,1')"]);
        assert_eq!(r.alpha_min().odd_position(&r.alg), Some((2, 1)));
        assert_eq!(r.alpha_max().odd_position(&r.alg), Some((1, 1)));
    }

    #[test]
    fn sl65_counts_and_rho1() {
        let r = rs(6, 5);
        assert_eq!(r.positive_odd.len(), 30);
        let expect = Weight::parse(r.alg, "5/2,5/2,5/2,5/2,5/2,5/2|-3,-3,-3,-3,-3").unwrap();
        assert_eq!(r.rho1, expect);
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for (m, n) in [(1, 1), (2, 1), (3, 2), (4, 4), (5, 3)] {
            let r = rs(m, n);
            let odd = sum(r.positive_odd.iter().map(|x| x.weight.clone()), r.alg);
            let even = sum(r.positive_even.iter().map(|x| x.weight.clone()), r.alg);
            assert_eq!(odd, r.rho1.scale(rat(2)));
            assert_eq!(even, r.rho0.scale(rat(2)));
            assert!(r.rho.is_dominant());
        }
    }

    #[test]
    fn basis_is_supertraceless_and_weights_match() {
        let r = rs(3, 2);
        for (x, b) in r.basis.iter().enumerate() {
            assert!(supertrace(&b.matrix, 3).is_zero(), "{}", b.name);
            assert_eq!(r.cartan_weight(x), r.pair_cartan(&b.weight).as_slice());
        }
        let w = Weight::parse(r.alg, "3,1,0|-2,-2").unwrap();
        assert_eq!(r.pair_cartan(&w), w.dynkin());
    }

    #[test]
    fn even_bracket_matches_commutation_rule() {
        let r = rs(2, 1);
        let e = r.e_index(0);
        let f = r.f_index(0);
        // [E12, E21] = E11 - E22 = h1
        assert_eq!(r.bracket(e, f), &[(0, rat(1))]);
    }

    #[test]
    fn odd_root_vectors_square_to_zero() {
        let r = rs(2, 2);
        for k in 0..r.positive_odd.len() {
            let x = r.e_odd(k);
            assert!(r.bracket(x, x).is_empty());
            let y = r.f_odd(k);
            assert!(r.bracket(y, y).is_empty());
        }
    }

    #[test]
    fn heights_positive_on_positive_roots() {
        for alg in [AlgebraSpec::sl(3, 2).unwrap(), AlgebraSpec::ospc(3).unwrap()] {
            let r = RootSystem::build(alg).unwrap();
            for root in r.roots() {
                assert!(r.height(&root.weight) > Rat::zero(), "{}", root.name);
            }
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(AlgebraSpec::sl(1, 2), Err(Error::Domain(_))));
        assert!(matches!(AlgebraSpec::ospc(1), Err(Error::Domain(_))));
    }

    fn check_jacobi(r: &RootSystem) {
        let dim = r.dim();
        let apply = |x: usize, v: &[(usize, Rat)]| -> Vec<Rat> {
            let mut out = vec![Rat::zero(); dim];
            for &(k, c) in v {
                for &(t, d) in r.bracket(x, k) {
                    out[t] += c * d;
                }
            }
            out
        };
        let left_apply = |v: &[(usize, Rat)], z: usize| -> Vec<Rat> {
            let mut out = vec![Rat::zero(); dim];
            for &(k, c) in v {
                for &(t, d) in r.bracket(k, z) {
                    out[t] += c * d;
                }
            }
            out
        };
        for x in 0..dim {
            for y in 0..dim {
                let sign = if r.basis[x].odd && r.basis[y].odd { rat(-1) } else { rat(1) };
                for z in 0..dim {
                    let lhs = apply(x, r.bracket(y, z));
                    let a = left_apply(r.bracket(x, y), z);
                    let b = apply(y, r.bracket(x, z));
                    for t in 0..dim {
                        assert_eq!(lhs[t], a[t] + sign * b[t], "jacobi {x},{y},{z}");
                    }
                }
            }
        }
    }

    #[test]
    fn super_jacobi_small_cases() {
        check_jacobi(&rs(2, 1));
        check_jacobi(&rs(2, 2));
        check_jacobi(&RootSystem::build(AlgebraSpec::ospc(2).unwrap()).unwrap());
        check_jacobi(&RootSystem::build(AlgebraSpec::ospc(3).unwrap()).unwrap());
    }

    #[test]
    fn odd_order_is_strict_total_order() {
        for m in 1..=6 {
            for n in 1..=m.min(5) {
                if m * n > 30 {
                    continue;
                }
                let pos: Vec<_> = (1..=m).flat_map(|i| (1..=n).map(move |v| (i, v))).collect();
                for &p in &pos {
                    assert_eq!(odd_order_cmp(p, p), Ordering::Equal);
                    for &q in &pos {
                        let c = odd_order_cmp(p, q);
                        assert_eq!(c == Ordering::Equal, p == q);
                        assert_eq!(c.reverse(), odd_order_cmp(q, p));
                        for &s in &pos {
                            if c == Ordering::Less && odd_order_cmp(q, s) == Ordering::Less {
                                assert_eq!(odd_order_cmp(p, s), Ordering::Less);
                            }
                        }
                    }
                }
            }
        }
    }
}
