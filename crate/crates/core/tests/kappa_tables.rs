use supercoh_core::kappa::kappa_multiplicity;
use supercoh_core::special::{special_weight_in, Special};
use supercoh_core::{AlgebraSpec, RootSystem};

#[test]
fn first_row_and_second_row_sums() {
    for n in 1..=6usize {
        for m in n..=n + 2 {
            let r = RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap();
            let k = |l: i64, j: Option<i64>| {
                let mut w = special_weight_in(&r, Special::Mu(l)).unwrap();
                if let Some(j) = j {
                    w = &w + &special_weight_in(&r, Special::MuIJ(2, j)).unwrap();
                }
                kappa_multiplicity(&w).unwrap()
            };
            let n = n as i64;
            assert_eq!(k(0, None), 0);
            for l in 1..n {
                assert_eq!(k(l, None), 1, "sl({m}|{n}) l={l}");
            }
            if n >= 2 {
                assert_eq!(k(1, Some(0)), 0);
            }
            for j in 1..=n - 2 {
                assert_eq!(k(j + 1, Some(j)), 1, "sl({m}|{n}) j={j}");
            }
            for l in 2..n {
                assert_eq!(k(l, Some(0)), 3, "sl({m}|{n}) l={l}");
            }
            for l in 3..n {
                for j in 1..=l - 2 {
                    assert_eq!(k(l, Some(j)), 6, "sl({m}|{n}) l={l} j={j}");
                }
            }
        }
    }
}
