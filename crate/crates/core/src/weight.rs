//! Weights in the epsilon basis and their Dynkin-label view.

use crate::algebra::{AlgebraSpec, Family};
use crate::error::{Error, Result};
use crate::{rat, Rat};
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A weight stored by its raw coordinates.
///
/// For sl(m|n) the coordinates are `(l_1..l_m | l_1'..l_n')`; for C(n) they
/// are `(l_0 | l_1..l_{n-1})` in the epsilon/delta basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub alg: AlgebraSpec,
    pub coords: Vec<Rat>,
}

fn parse_rat(tok: &str) -> Result<Rat> {
    let t = tok.trim().replace('\u{2212}', "-");
    if t.is_empty() {
        return Err(Error::Parse("empty coordinate".into()));
    }
    t.parse::<Rat>()
        .map_err(|_| Error::Parse(format!("bad number '{}'", tok.trim())))
}

fn parse_list(s: &str) -> Result<Vec<Rat>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rat).collect()
}

fn join(v: &[Rat]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl Weight {
    pub fn new(alg: AlgebraSpec, coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != alg.weight_len() {
            return Err(Error::Parse(format!(
                "{} weights have {} coordinates, got {}",
                alg.name(),
                alg.weight_len(),
                coords.len()
            )));
        }
        Ok(Self { alg, coords })
    }

    pub fn zero(alg: AlgebraSpec) -> Self {
        Self { alg, coords: vec![Rat::zero(); alg.weight_len()] }
    }

    pub fn from_ints(alg: AlgebraSpec, c: &[i64]) -> Result<Self> {
        Self::new(alg, c.iter().map(|&x| rat(x)).collect())
    }

    /// Unit vector on coordinate `idx` (0-based over both blocks).
    pub fn unit(alg: AlgebraSpec, idx: usize) -> Self {
        let mut w = Self::zero(alg);
        w.coords[idx] = rat(1);
        w
    }

    /// Parses `c1,...,cm|d1,...,dn` (integers or `p/q`, spaces allowed).
    pub fn parse(alg: AlgebraSpec, s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = s.split('|').collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected exactly one '|' in '{s}'")));
        }
        let even = parse_list(parts[0])?;
        let odd = parse_list(parts[1])?;
        let (ne, no) = alg.weight_blocks();
        if even.len() != ne || odd.len() != no {
            return Err(Error::Parse(format!(
                "{} weights need {ne}|{no} coordinates, got {}|{}",
                alg.name(),
                even.len(),
                odd.len()
            )));
        }
        let mut coords = even;
        coords.extend(odd);
        Self::new(alg, coords)
    }

    pub fn even(&self) -> &[Rat] {
        &self.coords[..self.alg.weight_blocks().0]
    }

    pub fn odd(&self) -> &[Rat] {
        &self.coords[self.alg.weight_blocks().0..]
    }

    pub fn scale(&self, k: Rat) -> Self {
        Self { alg: self.alg, coords: self.coords.iter().map(|x| x * k).collect() }
    }

    /// Integer coordinates, if all coordinates are integers.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    /// Coefficients of the weight as a functional on diagonal matrices of the
    /// defining realization.
    pub fn functional(&self) -> Vec<Rat> {
        match self.alg.family {
            Family::Sl => self.coords.clone(),
            Family::Ospc => {
                let n = self.alg.n;
                let mut f = vec![Rat::zero(); 2 * n];
                f[0] = self.coords[0];
                for j in 1..n {
                    f[1 + j] = self.coords[j];
                }
                f
            }
        }
    }

    /// Dynkin labels: sl gives `a_1..a_{m-1}, a_0, b_1..b_{n-1}`; C(n) gives
    /// `a_1..a_n` computed as the pairing with the Cartan basis.
    pub fn dynkin(&self) -> Vec<Rat> {
        let c = &self.coords;
        match self.alg.family {
            Family::Sl => {
                let (m, n) = (self.alg.m, self.alg.n);
                let mut a = Vec::with_capacity(m + n - 1);
                for i in 0..m - 1 {
                    a.push(c[i] - c[i + 1]);
                }
                a.push(c[m - 1] + c[m]);
                for v in 0..n - 1 {
                    a.push(c[m + v] - c[m + v + 1]);
                }
                a
            }
            Family::Ospc => {
                let n = self.alg.n;
                let mut a = vec![c[0] + c[1]];
                for i in 2..n {
                    a.push(c[i - 1] - c[i]);
                }
                a.push(c[n - 1]);
                a
            }
        }
    }

    pub fn dynkin_string(&self) -> String {
        format_dynkin(self.alg, &self.dynkin())
    }

    /// Inverse of [`Weight::dynkin`]. For sl(m|n) with m != n the
    /// representative with zero coordinate sum is returned. For m = n the
    /// labels fix the coordinates only up to the supertrace direction; the
    /// representative with last odd coordinate zero is returned.
    pub fn from_dynkin(alg: AlgebraSpec, labels: &[Rat]) -> Result<Self> {
        if labels.len() != alg.rank() {
            return Err(Error::Parse(format!(
                "{} has {} Dynkin labels, got {}",
                alg.name(),
                alg.rank(),
                labels.len()
            )));
        }
        match alg.family {
            Family::Sl => {
                let (m, n) = (alg.m, alg.n);
                let a0 = labels[m - 1];
                // even coordinates l_i = t + A_i, odd l_v = a0 - t - B_v
                let mut big_a = vec![Rat::zero(); m];
                for i in (0..m - 1).rev() {
                    big_a[i] = big_a[i + 1] + labels[i];
                }
                let mut big_b = vec![Rat::zero(); n];
                for v in 1..n {
                    big_b[v] = big_b[v - 1] + labels[m - 1 + v];
                }
                let const_sum: Rat = big_a.iter().copied().sum::<Rat>()
                    + big_b.iter().map(|b| a0 - b).sum::<Rat>();
                let t = if m != n {
                    -const_sum / rat(m as i64 - n as i64)
                } else {
                    if !const_sum.is_zero() {
                        return Err(Error::NoSolution(
                            "labels violate the supertrace condition for m = n".into(),
                        ));
                    }
                    a0 - big_b[n - 1]
                };
                let mut coords: Vec<Rat> = big_a.iter().map(|x| t + x).collect();
                coords.extend(big_b.iter().map(|b| a0 - t - b));
                Self::new(alg, coords)
            }
            Family::Ospc => {
                let n = alg.n;
                let mut c = vec![Rat::zero(); n];
                c[n - 1] = labels[n - 1];
                for i in (2..n).rev() {
                    c[i - 1] = labels[i - 1] + c[i];
                }
                c[0] = labels[0] - c[1];
                Self::new(alg, c)
            }
        }
    }

    pub fn is_integral(&self) -> bool {
        self.dynkin().iter().all(|a| a.is_integer())
    }

    /// Dominance with respect to the positive even roots only.
    pub fn is_dominant(&self) -> bool {
        let a = self.dynkin();
        match self.alg.family {
            Family::Sl => {
                let m = self.alg.m;
                a.iter()
                    .enumerate()
                    .filter(|(i, _)| *i != m - 1)
                    .all(|(_, x)| !x.is_negative())
            }
            Family::Ospc => a[1..].iter().all(|x| !x.is_negative()),
        }
    }

    pub fn is_integral_dominant(&self) -> bool {
        self.is_integral() && self.is_dominant()
    }

    pub fn require_integral_dominant(&self) -> Result<()> {
        if !self.is_integral() {
            return Err(Error::NotIntegral(self.to_string()));
        }
        if !self.is_dominant() {
            return Err(Error::NotDominant(self.to_string()));
        }
        Ok(())
    }

    /// Sum of the even coordinates (for C(n) the epsilon coordinate).
    pub fn level(&self) -> Rat {
        self.even().iter().copied().sum()
    }

    /// Reverses the even and the odd block independently.
    pub fn reverse(&self) -> Result<Self> {
        self.require_sl("reverse")?;
        let mut e = self.even().to_vec();
        let mut o = self.odd().to_vec();
        e.reverse();
        o.reverse();
        e.extend(o);
        Self::new(self.alg, e)
    }

    /// The form with `(e_a, e_b) = (-1)^[a] delta_ab`.
    pub fn bilinear_form(&self, other: &Weight) -> Rat {
        let ne = self.alg.weight_blocks().0;
        self.coords
            .iter()
            .zip(other.coords.iter())
            .enumerate()
            .map(|(i, (x, y))| if i < ne { x * y } else { -(x * y) })
            .sum()
    }

    /// Plain sum of all coordinates; zero for weights in the normalized form.
    pub fn coordinate_sum(&self) -> Rat {
        self.coords.iter().copied().sum()
    }

    /// Representative with zero coordinate sum (sl with m != n); other
    /// weights are returned unchanged.
    pub fn normalized(&self) -> Self {
        if self.alg.family != Family::Sl || self.alg.m == self.alg.n {
            return self.clone();
        }
        let (m, n) = (self.alg.m, self.alg.n);
        let t = self.coordinate_sum() / rat(m as i64 - n as i64);
        let mut w = self.clone();
        for (i, x) in w.coords.iter_mut().enumerate() {
            if i < m {
                *x -= t;
            } else {
                *x += t;
            }
        }
        w
    }

    /// True when both weights define the same functional on the Cartan
    /// subalgebra, i.e. they differ by a multiple of `(1,..,1|-1,..,-1)` for sl.
    pub fn same_functional(&self, other: &Weight) -> bool {
        if self.alg != other.alg {
            return false;
        }
        match self.alg.family {
            Family::Ospc => self.coords == other.coords,
            Family::Sl => {
                let m = self.alg.m;
                let d: Vec<Rat> = self
                    .coords
                    .iter()
                    .zip(other.coords.iter())
                    .enumerate()
                    .map(|(i, (a, b))| if i < m { a - b } else { b - a })
                    .collect();
                d.iter().all(|x| *x == d[0])
            }
        }
    }

    fn require_sl(&self, what: &str) -> Result<()> {
        if self.alg.family != Family::Sl {
            return Err(Error::Domain(format!("{what} is defined for sl(m|n) weights only")));
        }
        Ok(())
    }
}

/// Renders labels as `[a1,..;a0;b1,..]` (sl) or `[a1;a2,..,an]` (C(n)).
pub fn format_dynkin(alg: AlgebraSpec, a: &[Rat]) -> String {
    match alg.family {
        Family::Sl => {
            let m = alg.m;
            format!("[{};{};{}]", join(&a[..m - 1]), a[m - 1], join(&a[m..]))
        }
        Family::Ospc => format!("[{};{}]", a[0], join(&a[1..])),
    }
}

/// Parses the Dynkin grammar matching [`format_dynkin`].
pub fn parse_dynkin(alg: AlgebraSpec, s: &str) -> Result<Vec<Rat>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("Dynkin labels must be bracketed: '{t}'")))?;
    let parts: Vec<&str> = inner.split(';').collect();
    let labels = match (alg.family, parts.len()) {
        (Family::Sl, 3) => {
            let a = parse_list(parts[0])?;
            let a0 = parse_list(parts[1])?;
            let b = parse_list(parts[2])?;
            if a.len() != alg.m - 1 || a0.len() != 1 || b.len() != alg.n - 1 {
                return Err(Error::Parse(format!(
                    "{} needs [{} labels;1 label;{} labels]",
                    alg.name(),
                    alg.m - 1,
                    alg.n - 1
                )));
            }
            let mut v = a;
            v.extend(a0);
            v.extend(b);
            v
        }
        (Family::Ospc, 2) => {
            let a1 = parse_list(parts[0])?;
            let rest = parse_list(parts[1])?;
            if a1.len() != 1 || rest.len() != alg.n - 1 {
                return Err(Error::Parse(format!(
                    "{} needs [1 label;{} labels]",
                    alg.name(),
                    alg.n - 1
                )));
            }
            let mut v = a1;
            v.extend(rest);
            v
        }
        _ => return Err(Error::Parse(format!("wrong number of ';' groups in '{t}'"))),
    };
    Ok(labels)
}

impl serde::Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", join(self.even()), join(self.odd()))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.alg, rhs.alg, "weights of different algebras");
        Weight {
            alg: self.alg,
            coords: self.coords.iter().zip(rhs.coords.iter()).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.alg, rhs.alg, "weights of different algebras");
        Weight {
            alg: self.alg,
            coords: self.coords.iter().zip(rhs.coords.iter()).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { alg: self.alg, coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(m: usize, n: usize) -> AlgebraSpec {
        AlgebraSpec::sl(m, n).unwrap()
    }

    #[test]
    fn appendix_weights_to_dynkin() {
        let a = sl(6, 5);
        let w = Weight::parse(a, "3,2,2,1,0,0|0,0,-1,-3,-4").unwrap();
        assert_eq!(w.dynkin_string(), "[1,0,1,1,0;0;0,1,2,1]");
        let w = Weight::parse(a, "5,2,2,1,1,1|-1,-1,-1,-3,-6").unwrap();
        assert_eq!(w.dynkin_string(), "[3,0,1,0,0;0;0,0,2,3]");
        assert!(Weight::zero(a).dynkin().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn dynkin_round_trip_on_appendix_weight() {
        let a = sl(6, 5);
        let w = Weight::parse(a, "3,2,2,1,0,0|0,0,-1,-3,-4").unwrap();
        let labels = parse_dynkin(a, "[1,0,1,1,0;0;0,1,2,1]").unwrap();
        assert_eq!(Weight::from_dynkin(a, &labels).unwrap(), w);
    }

    #[test]
    fn parse_errors() {
        let a = sl(2, 1);
        assert!(matches!(Weight::parse(a, "1,2"), Err(Error::Parse(_))));
        assert!(matches!(Weight::parse(a, "1|2"), Err(Error::Parse(_))));
        assert!(matches!(Weight::parse(a, "1,x|2"), Err(Error::Parse(_))));
        let w = Weight::parse(a, " 1/2 , -1/2 | 0 ").unwrap();
        assert_eq!(w.coords[0], Rat::new(1, 2));
    }

    #[test]
    fn level_and_reverse() {
        let a = sl(6, 5);
        let lam = Weight::parse(a, "5,5,4,3,3,2|-2,-3,-5,-6,-6").unwrap();
        assert_eq!(lam.level(), rat(22));
        let mu = Weight::parse(a, "3,2,2,1,0,0|0,0,-1,-3,-4").unwrap();
        assert_eq!(mu.reverse().unwrap().to_string(), "0,0,1,2,2,3|-4,-3,-1,0,0");
        let b = sl(2, 1);
        assert_eq!(Weight::parse(b, "1,0|-1").unwrap().reverse().unwrap().to_string(), "0,1|-1");
    }

    #[test]
    fn form_and_dominance() {
        let a = sl(2, 1);
        let e1 = Weight::unit(a, 0);
        let e1b = Weight::unit(a, 2);
        assert_eq!(e1.bilinear_form(&e1), rat(1));
        assert_eq!(e1b.bilinear_form(&e1b), rat(-1));
        assert!(Weight::parse(a, "0,-1|1").unwrap().is_dominant());
        assert!(!Weight::parse(a, "0,1|-1").unwrap().is_dominant());
    }

    #[test]
    fn square_case_from_dynkin() {
        let a = sl(2, 2);
        let w = Weight::parse(a, "2,1|-1,-2").unwrap();
        let back = Weight::from_dynkin(a, &w.dynkin()).unwrap();
        assert!(back.same_functional(&w));
        assert!(matches!(
            Weight::from_dynkin(a, &[rat(0), rat(1), rat(0)]),
            Err(Error::NoSolution(_))
        ));
    }

    #[test]
    fn normalization_keeps_functional() {
        let a = sl(2, 1);
        let w = Weight::parse(a, "1,0|0").unwrap();
        let n = w.normalized();
        assert_eq!(n.to_string(), "0,-1|1");
        assert!(n.same_functional(&w));
    }
}
