//! Enveloping algebra elements in normal-ordered form, and the witness that
//! `prod ad f_alpha (prod e_alpha)` is nonzero.

use crate::{q, Q};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use supercoh_core::{Error, Result, RootSystem};

/// Linear combination of normal-ordered monomials: nondecreasing basis
/// indices, odd elements not repeated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PbwElement {
    pub terms: BTreeMap<Vec<usize>, Q>,
}

impl PbwElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new())
    }

    pub fn monomial(word: Vec<usize>) -> Self {
        Self { terms: [(word, Q::one())].into() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    fn add_term(&mut self, w: Vec<usize>, c: Q) {
        let e = self.terms.entry(w.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &PbwElement, c: &Q) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    /// Part spanned by monomials of exactly degree `d` made only of elements
    /// accepted by `keep`.
    pub fn filter(&self, d: usize, keep: impl Fn(usize) -> bool) -> PbwElement {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.len() == d && w.iter().all(|&x| keep(x)))
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        PbwElement { terms }
    }

    pub fn render(&self, rs: &RootSystem) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<&str> = w.iter().map(|&x| rs.basis[x].name.as_str()).collect();
                let word = if word.is_empty() { "1".to_string() } else { word.join(" ") };
                format!("({c}) {word}")
            })
            .collect();
        parts.join(" + ")
    }
}

/// Multiplication with memoized straightening.
pub struct Straightener<'a> {
    rs: &'a RootSystem,
    memo: HashMap<Vec<usize>, PbwElement>,
    max_terms: usize,
}

impl<'a> Straightener<'a> {
    pub fn new(rs: &'a RootSystem, max_terms: usize) -> Self {
        Self { rs, memo: HashMap::new(), max_terms }
    }

    fn odd(&self, x: usize) -> bool {
        self.rs.basis[x].odd
    }

    fn parity(&self, w: &[usize]) -> bool {
        w.iter().filter(|&&x| self.odd(x)).count() % 2 == 1
    }

    /// Normal form of an arbitrary word.
    pub fn normal(&mut self, w: &[usize]) -> Result<PbwElement> {
        if let Some(r) = self.memo.get(w) {
            return Ok(r.clone());
        }
        let pos = w.windows(2).position(|p| p[0] > p[1] || (p[0] == p[1] && self.odd(p[0])));
        let out = match pos {
            None => PbwElement::monomial(w.to_vec()),
            Some(i) => {
                let (y, x) = (w[i], w[i + 1]);
                let mut out = PbwElement::zero();
                let head = &w[..i];
                let tail = &w[i + 2..];
                if x == y {
                    // x x = 1/2 [x, x] for odd x
                    let half = Q::new(1.into(), 2.into());
                    for (k, c) in self.rs.bracket(x, x).to_vec() {
                        let word: Vec<usize> = head.iter().copied().chain([k]).chain(tail.iter().copied()).collect();
                        let r = self.normal(&word)?;
                        out.add_scaled(&r, &(&half * q(c)));
                    }
                } else {
                    // y x = (-1)^{[x][y]} x y + [y, x]
                    let s = if self.odd(x) && self.odd(y) { -Q::one() } else { Q::one() };
                    let word: Vec<usize> = head.iter().copied().chain([x, y]).chain(tail.iter().copied()).collect();
                    let r = self.normal(&word)?;
                    out.add_scaled(&r, &s);
                    for (k, c) in self.rs.bracket(y, x).to_vec() {
                        let word: Vec<usize> = head.iter().copied().chain([k]).chain(tail.iter().copied()).collect();
                        let r = self.normal(&word)?;
                        out.add_scaled(&r, &q(c));
                    }
                }
                out
            }
        };
        if out.terms.len() > self.max_terms {
            return Err(Error::Resource(format!(
                "straightening produced {} terms, above the bound {}",
                out.terms.len(),
                self.max_terms
            )));
        }
        self.memo.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    pub fn mul(&mut self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement> {
        let mut out = PbwElement::zero();
        for (u, x) in &a.terms {
            for (v, y) in &b.terms {
                let w: Vec<usize> = u.iter().chain(v).copied().collect();
                let r = self.normal(&w)?;
                out.add_scaled(&r, &(x * y));
            }
        }
        Ok(out)
    }

    /// `ad z (X) = z X - (-1)^{[z][X]} X z`, termwise on homogeneous parts.
    pub fn ad(&mut self, z: usize, a: &PbwElement) -> Result<PbwElement> {
        let zp = PbwElement::monomial(vec![z]);
        let mut out = PbwElement::zero();
        for (u, x) in &a.terms {
            let m = PbwElement::monomial(u.clone());
            let left = self.mul(&zp, &m)?;
            let right = self.mul(&m, &zp)?;
            out.add_scaled(&left, x);
            let s = if self.odd(z) && self.parity(u) { x.clone() } else { -x.clone() };
            out.add_scaled(&right, &s);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PbwWitness {
    pub algebra: String,
    pub odd_roots: usize,
    pub nonzero: bool,
    pub terms: usize,
    pub degree: usize,
    /// Sign `s` with top Cartan part equal to `s * prod h_alpha`, or 0 if no such sign.
    pub leading_sign: i64,
    pub leading_term: String,
    #[serde(skip)]
    pub result: PbwElement,
}

/// Default bound on the number of odd positive roots for the witness.
pub const DEFAULT_MAX_ODD: usize = 6;

/// Applies `ad f_alpha` for every odd positive root (the first in the odd
/// order outermost) to the ordered product of all `e_alpha`, and compares the
/// top-degree Cartan part with `prod h_alpha`, `h_alpha = [e_alpha, f_alpha]`.
pub fn pbw_ad_witness(rs: &RootSystem, max_odd: usize) -> Result<PbwWitness> {
    let k = rs.positive_odd.len();
    if k > max_odd {
        return Err(Error::Resource(format!(
            "{} has {k} odd positive roots, above the witness bound {max_odd}",
            rs.alg
        )));
    }
    let mut st = Straightener::new(rs, 200_000);
    let mut x = PbwElement::monomial((0..k).map(|t| rs.e_odd(t)).collect());
    for t in (0..k).rev() {
        x = st.ad(rs.f_odd(t), &x)?;
    }
    let mut expected = PbwElement::one();
    for t in 0..k {
        let mut h = PbwElement::zero();
        for (c, v) in rs.bracket(rs.e_odd(t), rs.f_odd(t)) {
            h.add_term(vec![*c], q(*v));
        }
        expected = st.mul(&expected, &h)?;
    }
    let nc = rs.n_cartan();
    let top = x.filter(k, |i| i < nc);
    let leading_sign = if top == expected {
        1
    } else {
        let mut neg = PbwElement::zero();
        neg.add_scaled(&expected, &-Q::one());
        if top == neg {
            -1
        } else {
            0
        }
    };
    Ok(PbwWitness {
        algebra: rs.alg.name(),
        odd_roots: k,
        nonzero: !x.is_zero(),
        terms: x.terms.len(),
        degree: x.degree(),
        leading_sign,
        leading_term: top.render(rs),
        result: x,
    })
}
