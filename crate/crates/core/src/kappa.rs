//! Young-diagram count of the g0-highest weight `2 alpha_max` in a Kac module.

use crate::algebra::Family;
use crate::error::{Error, Result};
use crate::weight::Weight;

/// Transpose partition `lambda'_nu = #{i : lambda_i >= nu}` for `nu = 1..=width`.
pub fn transpose(parts: &[i64], width: usize) -> Vec<i64> {
    (1..=width as i64).map(|nu| parts.iter().filter(|&&p| p >= nu).count() as i64).collect()
}

fn is_partition(p: &[i64]) -> bool {
    p.iter().all(|&x| x >= 0) && p.windows(2).all(|w| w[0] >= w[1])
}

/// Splits `lambda = (lambda^1 | -lambda^2)` after checking that `lambda^2`
/// is the transpose of the partition `lambda^1` with parts at most n,
/// listed so that odd coordinate `nu` equals `-lambda'_{n+1-nu}`.
pub fn young_part(lam: &Weight) -> Result<Vec<i64>> {
    if lam.alg.family != Family::Sl {
        return Err(Error::Domain("Young diagrams are defined for sl(m|n) weights".into()));
    }
    let n = lam.alg.n;
    let ints = lam
        .as_ints()
        .ok_or_else(|| Error::Precondition(format!("{lam} has non-integer coordinates")))?;
    let (even, odd) = ints.split_at(lam.alg.m);
    if !is_partition(even) || even.iter().any(|&x| x > n as i64) {
        return Err(Error::Precondition(format!(
            "{lam}: even block is not a partition with parts in [0, {n}]"
        )));
    }
    let t = transpose(even, n);
    let ok = (1..=n).all(|nu| odd[nu - 1] == -t[n - nu]);
    if !ok {
        return Err(Error::Precondition(format!(
            "{lam}: odd block is not minus the reversed transpose of the even block"
        )));
    }
    Ok(even.to_vec())
}

/// Number of ways to remove two boxes of `lambda^1` lying in different rows
/// and different columns so that the rest is still a Young diagram.
pub fn kappa_multiplicity(lam: &Weight) -> Result<u64> {
    let parts = young_part(lam)?;
    let boxes: Vec<(usize, i64)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (1..=len).map(move |c| (r, c)))
        .collect();
    let mut ordered = 0u64;
    for (a, &(r1, c1)) in boxes.iter().enumerate() {
        for (b, &(r2, c2)) in boxes.iter().enumerate() {
            if a == b || r1 == r2 || c1 == c2 {
                continue;
            }
            let mut p = parts.clone();
            // removing a box means shortening its row; the box must be the
            // last one of its row for the result to be a diagram
            if c1 != p[r1] || c2 != p[r2] {
                continue;
            }
            p[r1] -= 1;
            p[r2] -= 1;
            if is_partition(&p) {
                ordered += 1;
            }
        }
    }
    Ok(ordered / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraSpec, RootSystem};
    use crate::special::{special_weight_in, Special};

    #[test]
    fn mu_families() {
        for n in 1..=5usize {
            for m in n..=n + 2 {
                let r = RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap();
                let mu = |l: i64| special_weight_in(&r, Special::Mu(l)).unwrap();
                assert_eq!(kappa_multiplicity(&mu(0)).unwrap(), 0);
                for l in 1..n as i64 {
                    assert_eq!(kappa_multiplicity(&mu(l)).unwrap(), 1);
                }
            }
        }
    }

    #[test]
    fn rejects_non_young_weights() {
        let r = RootSystem::build(AlgebraSpec::sl(2, 1).unwrap()).unwrap();
        let w = Weight::parse(r.alg, "1,0|0").unwrap();
        assert!(matches!(kappa_multiplicity(&w), Err(Error::Precondition(_))));
    }

    #[test]
    fn transpose_basics() {
        assert_eq!(transpose(&[3, 1, 1], 3), vec![3, 1, 1]);
        assert_eq!(transpose(&[2, 2], 3), vec![2, 2, 0]);
    }
}
