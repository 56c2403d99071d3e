//! Explicit cocycles realizing nonzero classes, and exact verification.
//!
//! Every construction needs a g0-equivariant map between two small g0-modules;
//! those are found by solving the intertwining equations exactly and fixing
//! the scalar so that the first nonzero coefficient is 1.

use crate::complex::{closed_and_exact, differential, Cochain};
use crate::kac::{build_irreducible, build_kac_module};
use crate::module::{SparseVec, SuperModule};
use crate::rank::{self, SparseRow};
use crate::{q, qi, Q};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use supercoh_core::special::{special_weight_in, Special};
use supercoh_core::{Error, Family, Rat, Result, RootSystem, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CocycleKind {
    Phi18,
    PhiPrime125,
    Phi21,
    Phi22,
    Phi1Top,
    Phi1Bottom,
}

impl CocycleKind {
    pub const ALL: [CocycleKind; 6] = [
        CocycleKind::Phi18,
        CocycleKind::PhiPrime125,
        CocycleKind::Phi21,
        CocycleKind::Phi22,
        CocycleKind::Phi1Top,
        CocycleKind::Phi1Bottom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CocycleKind::Phi18 => "phi_18",
            CocycleKind::PhiPrime125 => "phi_prime_125",
            CocycleKind::Phi21 => "phi_21",
            CocycleKind::Phi22 => "phi_22",
            CocycleKind::Phi1Top => "phi1_top",
            CocycleKind::Phi1Bottom => "phi1_bottom",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown cocycle {s:?}")))
    }

    pub fn degree(self) -> usize {
        match self {
            CocycleKind::Phi21 | CocycleKind::Phi22 => 2,
            _ => 1,
        }
    }

    /// Whether the coefficient module is a Kac module (else irreducible).
    pub fn uses_kac_module(self) -> bool {
        !matches!(self, CocycleKind::Phi1Top | CocycleKind::Phi1Bottom)
    }

    /// Highest weights the construction is defined for.
    pub fn admissible_weights(self, rs: &RootSystem) -> Result<Vec<Weight>> {
        let sp = |k| special_weight_in(rs, k);
        let two_rho1 = rs.two_rho1();
        let amax = rs.alpha_max().weight.clone();
        let sl_only = |what: &str| -> Result<()> {
            if rs.alg.family != Family::Sl {
                return Err(Error::Domain(format!("{what} is built for sl(m|n) only")));
            }
            Ok(())
        };
        Ok(match self {
            CocycleKind::Phi18 => vec![&two_rho1 + &amax],
            CocycleKind::PhiPrime125 => {
                sl_only(self.name())?;
                vec![two_rho1]
            }
            CocycleKind::Phi21 => {
                let mut v = vec![&two_rho1 + &sp(Special::TwoAmax)?];
                if rs.alg.family == Family::Sl && rs.alg.n >= 2 {
                    v.push(&two_rho1 + &sp(Special::Eta1)?);
                }
                v
            }
            CocycleKind::Phi22 => {
                sl_only(self.name())?;
                vec![&two_rho1 + &amax]
            }
            CocycleKind::Phi1Top => vec![sp(Special::MinusAmin)?],
            CocycleKind::Phi1Bottom => {
                sl_only(self.name())?;
                vec![sp(Special::Mu(rs.alg.n as i64 - 1))?]
            }
        })
    }
}

/// A constructed cocycle together with its coefficient module.
#[derive(Clone, Debug)]
pub struct NamedCocycle {
    pub kind: CocycleKind,
    pub weight: Weight,
    pub module: SuperModule,
    pub cochain: Cochain,
    pub parity: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CocycleReport {
    pub degree: usize,
    pub parity: Option<bool>,
    /// `d phi = 0` through the block matrices.
    pub is_cocycle: bool,
    /// `d phi = 0` by direct evaluation of the differential.
    pub is_cocycle_by_formula: bool,
    pub is_coboundary: bool,
}

/// Exact membership tests for `phi` in `Z^p` and `B^p`.
pub fn verify_cocycle(rs: &RootSystem, v: &SuperModule, phi: &Cochain) -> Result<CocycleReport> {
    let (is_cocycle, is_coboundary) = closed_and_exact(rs, v, phi)?;
    let is_cocycle_by_formula = differential(rs, v, phi).is_zero();
    if is_cocycle != is_cocycle_by_formula {
        return Err(Error::Internal("matrix and formula differentials disagree".into()));
    }
    Ok(CocycleReport {
        degree: phi.p,
        parity: phi.parity(rs, v),
        is_cocycle,
        is_cocycle_by_formula,
        is_coboundary,
    })
}

/// One-dimensional space of g0-maps from a source module into the span of
/// `tgt` (basis vectors of `v`). `src_act(x, j)` is the action of an even
/// basis element `x` on source vector `j`. Returns images of the source basis.
fn intertwiner(
    rs: &RootSystem,
    src_dim: usize,
    src_act: &dyn Fn(usize, usize) -> Vec<(usize, Q)>,
    v: &SuperModule,
    tgt: &[usize],
) -> Result<Vec<SparseVec>> {
    let nt = tgt.len();
    let local: BTreeMap<usize, usize> = tgt.iter().enumerate().map(|(a, &b)| (b, a)).collect();
    let unknown = |j: usize, b: usize| j * nt + b;
    let mut rows: Vec<SparseRow<Q>> = Vec::new();
    for x in rs.even_indices() {
        let a = v.action_rows(x);
        for j in 0..src_dim {
            let sx = src_act(x, j);
            for (bl, &b) in tgt.iter().enumerate() {
                // T(x s_j) - x T(s_j), coefficient of target vector b
                let mut row: BTreeMap<usize, Q> = BTreeMap::new();
                for (jj, c) in &sx {
                    *row.entry(unknown(*jj, bl)).or_insert_with(Q::zero) += c;
                }
                for (bb, c) in &a[b] {
                    let Some(&bbl) = local.get(bb) else {
                        return Err(Error::Internal("target span is not g0-stable".into()));
                    };
                    *row.entry(unknown(j, bbl)).or_insert_with(Q::zero) -= c;
                }
                let row: SparseRow<Q> = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let sols = rank::nullspace(&rows, src_dim * nt);
    if sols.len() != 1 {
        return Err(Error::Internal(format!(
            "intertwiner not found: solution space has dimension {}",
            sols.len()
        )));
    }
    let mut sol = sols.into_iter().next().unwrap();
    sol.sort_by_key(|e| e.0);
    let lead = sol[0].1.clone();
    let mut out = vec![SparseVec::new(); src_dim];
    for (u, c) in sol {
        out[u / nt].insert(tgt[u % nt], c / &lead);
    }
    Ok(out)
}

/// Source action of `g0` on the odd part spanned by `first..first + k`.
fn odd_part_action(rs: &RootSystem, first: usize, k: usize) -> impl Fn(usize, usize) -> Vec<(usize, Q)> + '_ {
    move |x, j| {
        rs.bracket(x, first + j)
            .iter()
            .map(|(y, c)| {
                debug_assert!(*y >= first && *y < first + k);
                (y - first, q(*c))
            })
            .collect()
    }
}

fn pair_index(a: usize, b: usize, k: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * k + b
}

/// Center coordinate of each Cartan element: `h_k = c_k 2rho1-check + (g0^ss part)`.
fn center_coords(rs: &RootSystem) -> Vec<Q> {
    let (m, n) = (rs.alg.m, rs.alg.n);
    let mn = Rat::from_integer((m * n) as i64);
    (0..rs.n_cartan())
        .map(|k| {
            let h = &rs.basis[k].matrix;
            let tr: Rat = (0..m).map(|i| h[i][i]).sum();
            q(tr / mn)
        })
        .collect()
}

/// `c_alpha = (-1)^{deg + m(alpha)} / mn` for each odd root in the odd order.
fn odd_root_constants(rs: &RootSystem, deg: bool) -> Vec<Q> {
    let mn = qi((rs.alg.m * rs.alg.n) as i64);
    (0..rs.positive_odd.len())
        .map(|t| {
            let odd = (deg as usize + t) % 2 == 1;
            let s = if odd { -Q::one() } else { Q::one() };
            s / &mn
        })
        .collect()
}

/// Builds the named cocycle with coefficients in the module of highest weight `lam`.
pub fn build_named_cocycle(kind: CocycleKind, rs: &RootSystem, lam: &Weight) -> Result<NamedCocycle> {
    let allowed = kind.admissible_weights(rs)?;
    if !allowed.iter().any(|w| w.same_functional(lam)) {
        let list: Vec<String> = allowed.iter().map(|w| w.to_string()).collect();
        return Err(Error::Precondition(format!(
            "{} needs highest weight {}, got {lam}",
            kind.name(),
            list.join(" or ")
        )));
    }
    let v = if kind.uses_kac_module() { build_kac_module(rs, lam)? } else { build_irreducible(rs, lam)? };
    let k = rs.positive_odd.len();
    let e0 = rs.e_odd(0);
    let f0 = rs.f_odd(0);
    let bottom = v.at_level(v.bottom());
    let top = v.at_level(v.top());
    let one = Q::one();
    let mut phi = Cochain::zero(kind.degree());
    let parity;
    match kind {
        CocycleKind::Phi18 => {
            let t = intertwiner(rs, k, &odd_part_action(rs, e0, k), &v, &bottom)?;
            for (j, img) in t.iter().enumerate() {
                phi.add(rs, &[e0 + j], &one, img);
            }
            parity = v.parity[bottom[0]] ^ true;
        }
        CocycleKind::Phi1Top => {
            let t = intertwiner(rs, k, &odd_part_action(rs, f0, k), &v, &top)?;
            for (j, img) in t.iter().enumerate() {
                phi.add(rs, &[f0 + j], &one, img);
            }
            parity = v.parity[top[0]] ^ true;
        }
        CocycleKind::Phi1Bottom => {
            let t = intertwiner(rs, k, &odd_part_action(rs, e0, k), &v, &bottom)?;
            for (j, img) in t.iter().enumerate() {
                phi.add(rs, &[e0 + j], &one, img);
            }
            parity = v.parity[bottom[0]] ^ true;
        }
        CocycleKind::Phi21 => {
            let act = |x: usize, j: usize| -> Vec<(usize, Q)> {
                let (a, b) = (j / k, j % k);
                if a > b {
                    return Vec::new();
                }
                let mut out: BTreeMap<usize, Q> = BTreeMap::new();
                for (y, c) in rs.bracket(x, e0 + a) {
                    *out.entry(pair_index(y - e0, b, k)).or_insert_with(Q::zero) += q(*c);
                }
                for (y, c) in rs.bracket(x, e0 + b) {
                    *out.entry(pair_index(a, y - e0, k)).or_insert_with(Q::zero) += q(*c);
                }
                out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            };
            // pairs a > b are unused slots; pin them to zero by restricting the source
            let pairs: Vec<usize> = (0..k * k).filter(|j| j / k <= j % k).collect();
            let slot: BTreeMap<usize, usize> = pairs.iter().enumerate().map(|(i, &j)| (j, i)).collect();
            let act_sym = |x: usize, i: usize| -> Vec<(usize, Q)> {
                act(x, pairs[i]).into_iter().map(|(j, c)| (slot[&j], c)).collect()
            };
            let w = intertwiner(rs, pairs.len(), &act_sym, &v, &bottom)?;
            for (i, img) in w.iter().enumerate() {
                let (a, b) = (pairs[i] / k, pairs[i] % k);
                phi.add(rs, &[e0 + a, e0 + b], &one, img);
            }
            parity = v.parity[bottom[0]];
        }
        CocycleKind::PhiPrime125 | CocycleKind::Phi22 => {
            let d0 = v.dim() >> k;
            let full = (1usize << k) - 1;
            let cent = center_coords(rs);
            if kind == CocycleKind::PhiPrime125 {
                let deg = (rs.alg.m * rs.alg.n) % 2 == 1;
                let ca = odd_root_constants(rs, deg);
                let bottom_vec: SparseVec = [(full * d0, one.clone())].into();
                for (h, c) in cent.iter().enumerate() {
                    phi.add(rs, &[h], c, &bottom_vec);
                }
                for (t, c) in ca.iter().enumerate() {
                    let img: SparseVec = [((full & !(1 << t)) * d0, one.clone())].into();
                    phi.add(rs, &[e0 + t], c, &img);
                }
                parity = deg;
            } else {
                let t = intertwiner(rs, k, &odd_part_action(rs, e0, k), &v, &bottom)?;
                let deg = v.parity[bottom[0]] ^ true;
                let ca = odd_root_constants(rs, deg);
                for (h, c) in cent.iter().enumerate() {
                    for (j, img) in t.iter().enumerate() {
                        phi.add(rs, &[h, e0 + j], c, img);
                    }
                }
                // prod_{tau != beta} f_tau e'_gamma, with prod_tau f_tau e'_gamma = T(e_gamma)
                let drop = |beta: usize, gamma: usize| -> SparseVec {
                    t[gamma]
                        .iter()
                        .map(|(i, c)| {
                            let b = i - full * d0;
                            ((full & !(1 << beta)) * d0 + b, c.clone())
                        })
                        .collect()
                };
                for beta in 0..k {
                    for gamma in beta..k {
                        let mut val = SparseVec::new();
                        for (i, c) in drop(beta, gamma) {
                            *val.entry(i).or_insert_with(Q::zero) += &ca[beta] * c;
                        }
                        for (i, c) in drop(gamma, beta) {
                            *val.entry(i).or_insert_with(Q::zero) += &ca[gamma] * c;
                        }
                        val.retain(|_, c| !c.is_zero());
                        phi.add(rs, &[e0 + beta, e0 + gamma], &one, &val);
                    }
                }
                parity = deg;
            }
        }
    }
    Ok(NamedCocycle { kind, weight: lam.clone(), module: v, cochain: phi, parity })
}
