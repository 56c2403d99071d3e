//! C(n) = osp(2|2n-2) realized inside sl(2|2n-2).
//!
//! Matrix index layout (0-based): 0 is `eps`, 1 is `-eps`, `1+j` is `delta_j`
//! and `n+j` is `-delta_j` for `1 <= j <= n-1`.

use crate::algebra::{mat_lin, unit_matrix, AlgebraSpec, Mat, Realization, Root};
use crate::weight::Weight;
use crate::rat;
use num_traits::Zero;

fn root(alg: AlgebraSpec, odd: bool, a: usize, b: usize, coords: &[(usize, i64)], name: String) -> Root {
    let mut w = Weight::zero(alg);
    for &(i, c) in coords {
        w.coords[i] += rat(c);
    }
    Root { odd, a, b, weight: w, name }
}

pub(crate) fn realization(alg: AlgebraSpec) -> Realization {
    let n = alg.n;
    let d = 2 * n;
    let u = |a: usize, b: usize| unit_matrix(d, a, b);
    let dp = |j: usize| 1 + j;
    let dm = |j: usize| n + j;

    let mut cartan = vec![(
        "h1".to_string(),
        mat_lin(&[(1, &u(0, 0)), (-1, &u(1, 1)), (1, &u(2, 2)), (-1, &u(n + 1, n + 1))]),
    )];
    for i in 2..n {
        cartan.push((
            format!("h{i}"),
            mat_lin(&[(1, &u(i, i)), (-1, &u(i + 1, i + 1)), (-1, &u(n + i - 1, n + i - 1)), (1, &u(n + i, n + i))]),
        ));
    }
    cartan.push((format!("h{n}"), mat_lin(&[(1, &u(n, n)), (-1, &u(2 * n - 1, 2 * n - 1))])));

    let mut roots = Vec::new();
    let mut e = Vec::new();
    let mut f = Vec::new();
    let transpose = |m: &Mat| -> Mat { (0..d).map(|r| (0..d).map(|s| m[s][r]).collect()).collect() };
    for i in 1..n {
        for j in i + 1..n {
            roots.push(root(alg, false, dp(i), dp(j), &[(i, 1), (j, -1)], format!("d{i}-d{j}")));
            let m = mat_lin(&[(1, &u(dp(i), dp(j))), (-1, &u(dm(j), dm(i)))]);
            f.push(transpose(&m));
            e.push(m);
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            roots.push(root(alg, false, dp(i), dm(j), &[(i, 1), (j, 1)], format!("d{i}+d{j}")));
            let m = mat_lin(&[(1, &u(dp(i), dm(j))), (1, &u(dp(j), dm(i)))]);
            f.push(transpose(&m));
            e.push(m);
        }
    }
    for i in 1..n {
        roots.push(root(alg, false, dp(i), dm(i), &[(i, 2)], format!("2d{i}")));
        let m = u(dp(i), dm(i));
        f.push(transpose(&m));
        e.push(m);
    }
    for j in 1..n {
        roots.push(root(alg, true, 0, dp(j), &[(0, 1), (j, -1)], format!("e-d{j}")));
        e.push(mat_lin(&[(1, &u(0, dp(j))), (1, &u(dm(j), 1))]));
        f.push(mat_lin(&[(1, &u(1, dm(j))), (-1, &u(dp(j), 0))]));
    }
    for j in (1..n).rev() {
        roots.push(root(alg, true, 0, dm(j), &[(0, 1), (j, 1)], format!("e+d{j}")));
        e.push(mat_lin(&[(1, &u(0, dm(j))), (-1, &u(dp(j), 1))]));
        f.push(mat_lin(&[(1, &u(1, dp(j))), (1, &u(dm(j), 0))]));
    }

    let mut rho0 = Weight::zero(alg);
    for i in 1..n {
        rho0.coords[i] = rat((n - i) as i64);
    }
    let mut rho1 = Weight::zero(alg);
    rho1.coords[0] = rat(n as i64 - 1);
    Realization { cartan, roots, e, f, rho0, rho1 }
}

/// Z-grade (-1, 0 or 1) of a matrix lying in one graded piece of C(n), or
/// `None` if it fails the block pattern of every piece.
pub fn grade_of(x: &Mat, n: usize) -> Option<i8> {
    let d = 2 * n;
    if x.len() != d {
        return None;
    }
    let k = n - 1;
    // sub-block accessors for the 2k x 2k odd-odd corner
    let bb = |r: usize, s: usize| x[2 + r][2 + s];
    let zero_where = |pred: &dyn Fn(usize, usize) -> bool| {
        (0..d).all(|r| (0..d).all(|s| !pred(r, s) || x[r][s].is_zero()))
    };
    let even_part = |r: usize, s: usize| (r < 2) == (s < 2);
    // grade 0: diag(a, -a) and [[beta, gamma], [delta, -beta^T]] with gamma, delta symmetric
    let g0 = zero_where(&|r, s| !even_part(r, s))
        && x[0][1].is_zero()
        && x[1][0].is_zero()
        && x[0][0] == -x[1][1]
        && (0..k).all(|r| {
            (0..k).all(|s| {
                bb(r, s) == -bb(k + s, k + r)
                    && bb(r, k + s) == bb(s, k + r)
                    && bb(k + r, s) == bb(k + s, r)
            })
        });
    if g0 {
        return Some(0);
    }
    // grade +1: top row (xi, eta), second row zero; column 0 zero,
    // column 1 carries (-eta^T; xi^T)
    let plus = zero_where(&|r, s| even_part(r, s) || r == 1 || (s == 0 && r >= 2))
        && (0..k).all(|j| x[2 + j][1] == -x[0][2 + k + j] && x[2 + k + j][1] == x[0][2 + j]);
    if plus {
        return Some(1);
    }
    // grade -1: second row (xi, eta), first row zero; column 1 zero,
    // column 0 carries (-eta^T; xi^T)
    let minus = zero_where(&|r, s| even_part(r, s) || r == 0 || (s == 1 && r >= 2))
        && (0..k).all(|j| x[2 + j][0] == -x[1][2 + k + j] && x[2 + k + j][0] == x[1][2 + j]);
    if minus {
        return Some(-1);
    }
    None
}

/// Dimensions of the graded pieces `(C(n)_0, C(n)_{+1})`.
pub fn graded_dims(n: usize) -> (usize, usize) {
    (1 + (n - 1) * (2 * n - 1), 2 * (n - 1))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{supertrace, BasisKind, RootSystem};

    #[test]
    fn block_patterns_and_dimensions() {
        for n in 2..=4 {
            let r = RootSystem::build(AlgebraSpec::ospc(n).unwrap()).unwrap();
            let (d0, d1) = graded_dims(n);
            assert_eq!(r.dim(), d0 + 2 * d1);
            assert_eq!(r.positive_odd.len(), d1);
            for b in &r.basis {
                assert!(supertrace(&b.matrix, 2).is_zero());
                let expect = match (b.kind, b.odd) {
                    (_, false) => 0,
                    (BasisKind::E(_), true) => 1,
                    _ => -1,
                };
                assert_eq!(grade_of(&b.matrix, n), Some(expect), "{}", b.name);
            }
        }
    }

    #[test]
    fn n2_has_four_even_and_four_odd() {
        let r = RootSystem::build(AlgebraSpec::ospc(2).unwrap()).unwrap();
        assert_eq!(r.basis.iter().filter(|b| !b.odd).count(), 4);
        assert_eq!(r.basis.iter().filter(|b| b.odd).count(), 4);
    }

    #[test]
    fn weyl_vectors_and_extreme_roots() {
        for n in 2..=4 {
            let alg = AlgebraSpec::ospc(n).unwrap();
            let r = RootSystem::build(alg).unwrap();
            let mut rho1 = Weight::zero(alg);
            rho1.coords[0] = rat(n as i64 - 1);
            assert_eq!(r.rho1, rho1);
            assert_eq!(r.alpha_min().name, "e-d1");
            assert_eq!(r.alpha_max().name, "e+d1");
            let s = r.positive_odd.iter().fold(Weight::zero(alg), |a, x| &a + &x.weight);
            assert_eq!(s, r.rho1.scale(rat(2)));
            let s = r.positive_even.iter().fold(Weight::zero(alg), |a, x| &a + &x.weight);
            assert_eq!(s, r.rho0.scale(rat(2)));
        }
    }

    #[test]
    fn labels_follow_cartan_pairing() {
        let alg = AlgebraSpec::ospc(4).unwrap();
        let r = RootSystem::build(alg).unwrap();
        for (x, b) in r.basis.iter().enumerate() {
            assert_eq!(r.cartan_weight(x), r.pair_cartan(&b.weight).as_slice(), "{}", b.name);
        }
        let w = Weight::parse(alg, "5|3,1,1").unwrap();
        assert_eq!(r.pair_cartan(&w), w.dynkin());
        let two_rho1 = r.rho1.scale(rat(2));
        assert_eq!(two_rho1.dynkin_string(), "[6;0,0,0]");
        let neg_amin = -&r.alpha_min().weight;
        assert_eq!(neg_amin.dynkin()[0], rat(0));
    }
}
