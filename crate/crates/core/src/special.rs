//! Named weights and a small expression language over them.
//!
//! Expressions are sums such as `mu(2)+mu(2,0)-amin` or `2*amax+2rho1`;
//! indices may be linear expressions in named parameters (`mu(j-1)`).

use crate::algebra::{AlgebraSpec, Family, RootSystem};
use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::{rat, Rat};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Special {
    /// `mu^{(i,j)}`, 1 <= i <= n, 0 <= j <= n - i.
    MuIJ(i64, i64),
    Mu(i64),
    MuPlus(i64),
    MuMinus(i64),
    Eta1,
    Eta2,
    TwoRho1,
    MinusAmin,
    Minus2Amin,
    TwoAmax,
    Amin,
    Amax,
    Rho0,
    Rho1,
    Zero,
}

fn range(what: &str, v: i64, lo: i64, hi: i64) -> Result<()> {
    if v < lo || v > hi {
        return Err(Error::Range(format!("{what} = {v} outside [{lo}, {hi}]")));
    }
    Ok(())
}

fn mu_ij(alg: AlgebraSpec, i: i64, j: i64) -> Result<Weight> {
    if alg.family != Family::Sl {
        return Err(Error::Domain("mu^(i,j) is defined for sl(m|n) only".into()));
    }
    let (m, n) = (alg.m as i64, alg.n as i64);
    range("i", i, 1, n)?;
    range("j", j, 0, n - i)?;
    let mut w = Weight::zero(alg);
    let (i, j) = (i as usize, j as usize);
    let (mu, nu) = (alg.m, alg.n);
    w.coords[i - 1] = rat(j as i64 + 1);
    for t in 0..(m - n) as usize + j {
        w.coords[i + t] = rat(1);
    }
    // odd block: ..., -1 (j times), -j-1-m+n, 0 (i-1 times)
    let big = nu - i;
    w.coords[mu + big] = rat(-(j as i64) - 1 - m + n);
    for t in 1..=j {
        w.coords[mu + big - t] = rat(-1);
    }
    Ok(w)
}

/// Evaluates a named weight.
pub fn special_weight(alg: AlgebraSpec, kind: Special) -> Result<Weight> {
    let rs = RootSystem::build(alg)?;
    special_weight_in(&rs, kind)
}

/// As [`special_weight`] with a prebuilt root system.
pub fn special_weight_in(rs: &RootSystem, kind: Special) -> Result<Weight> {
    let alg = rs.alg;
    let amin = rs.alpha_min().weight.clone();
    let amax = rs.alpha_max().weight.clone();
    let sl_n2 = |what: &str| -> Result<()> {
        if alg.family != Family::Sl {
            return Err(Error::Domain(format!("{what} is defined for sl(m|n) only")));
        }
        if alg.n < 2 {
            return Err(Error::Range(format!("{what} needs n >= 2")));
        }
        Ok(())
    };
    Ok(match kind {
        Special::MuIJ(i, j) => mu_ij(alg, i, j)?,
        Special::Mu(j) => mu_ij(alg, 1, j)?,
        Special::MuPlus(j) => &mu_ij(alg, 1, j)? + &amax,
        Special::MuMinus(j) => &mu_ij(alg, 1, j)? - &amax,
        Special::Eta1 => {
            sl_n2("eta1")?;
            let mut w = Weight::zero(alg);
            let (m, n) = (alg.m, alg.n);
            w.coords[0] = rat(1);
            w.coords[1] = rat(1);
            w.coords[m + n - 2] = rat(-1);
            w.coords[m + n - 1] = rat(-1);
            w
        }
        Special::Eta2 => {
            sl_n2("eta2")?;
            let mut w = Weight::zero(alg);
            let m = alg.m;
            w.coords[m - 2] = rat(-1);
            w.coords[m - 1] = rat(-1);
            w.coords[m] = rat(1);
            w.coords[m + 1] = rat(1);
            w
        }
        Special::TwoRho1 => rs.two_rho1(),
        Special::MinusAmin => -&amin,
        Special::Minus2Amin => amin.scale(rat(-2)),
        Special::TwoAmax => amax.scale(rat(2)),
        Special::Amin => amin,
        Special::Amax => amax,
        Special::Rho0 => rs.rho0.clone(),
        Special::Rho1 => rs.rho1.clone(),
        Special::Zero => Weight::zero(alg),
    })
}

/// Integer parameter bindings used when evaluating expressions.
pub type Params = BTreeMap<String, i64>;

/// Evaluates a linear integer expression such as `n-2` or `j+1`.
pub fn eval_index(s: &str, params: &Params) -> Result<i64> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty index".into()));
    }
    let mut total = 0i64;
    let mut sign = 1i64;
    let mut tok = String::new();
    let flush = |tok: &mut String, sign: i64, total: &mut i64| -> Result<()> {
        if tok.is_empty() {
            return Err(Error::Parse("dangling sign in index".into()));
        }
        let v = if let Ok(v) = tok.parse::<i64>() {
            v
        } else {
            *params
                .get(tok.as_str())
                .ok_or_else(|| Error::Parse(format!("unknown parameter '{tok}'")))?
        };
        *total += sign * v;
        tok.clear();
        Ok(())
    };
    for (k, c) in s.chars().enumerate() {
        if (c == '+' || c == '-') && k > 0 {
            flush(&mut tok, sign, &mut total)?;
            sign = if c == '+' { 1 } else { -1 };
        } else if c == '-' {
            sign = -1;
        } else {
            tok.push(c);
        }
    }
    flush(&mut tok, sign, &mut total)?;
    Ok(total)
}

/// Parses a single atom such as `mu(2,0)`, `mu+(j)`, `eta2` or `-amin`.
pub fn parse_special(s: &str, params: &Params) -> Result<Special> {
    let s = s.trim();
    let (name, args) = match s.find('(') {
        Some(p) => {
            let inner = s[p + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in '{s}'")))?;
            let args = inner
                .split(',')
                .map(|a| eval_index(a, params))
                .collect::<Result<Vec<_>>>()?;
            (&s[..p], args)
        }
        None => (s, Vec::new()),
    };
    let arity = |k: usize| -> Result<()> {
        if args.len() != k {
            return Err(Error::Parse(format!("'{name}' takes {k} argument(s)")));
        }
        Ok(())
    };
    let kind = match name {
        "mu" if args.len() == 2 => Special::MuIJ(args[0], args[1]),
        "mu" => {
            arity(1)?;
            Special::Mu(args[0])
        }
        "mu+" => {
            arity(1)?;
            Special::MuPlus(args[0])
        }
        "mu-" => {
            arity(1)?;
            Special::MuMinus(args[0])
        }
        _ => {
            arity(0)?;
            match name {
                "eta1" => Special::Eta1,
                "eta2" => Special::Eta2,
                "2rho1" => Special::TwoRho1,
                "-amin" => Special::MinusAmin,
                "-2amin" => Special::Minus2Amin,
                "2amax" => Special::TwoAmax,
                "amin" => Special::Amin,
                "amax" => Special::Amax,
                "rho0" => Special::Rho0,
                "rho1" => Special::Rho1,
                "0" => Special::Zero,
                _ => return Err(Error::Parse(format!("unknown weight name '{name}'"))),
            }
        }
    };
    Ok(kind)
}

/// Evaluates `term (+|-) term ...` where a term is `[k*]atom`.
pub fn eval_expr(rs: &RootSystem, expr: &str, params: &Params) -> Result<Weight> {
    let e: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if e.is_empty() {
        return Err(Error::Parse("empty weight expression".into()));
    }
    // split on top-level + and -, keeping the sign with each term; a sign
    // directly after a name like `mu` belongs to the name (`mu+(j)`)
    let bytes: Vec<char> = e.chars().collect();
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    let mut sign = 1i64;
    for (k, &c) in bytes.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let glued = cur.ends_with("mu") && bytes.get(k + 1) == Some(&'(');
        if depth == 0 && (c == '+' || c == '-') && !glued {
            if !cur.is_empty() {
                terms.push((sign, std::mem::take(&mut cur)));
            }
            sign = if c == '+' { 1 } else { -1 };
            continue;
        }
        cur.push(c);
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in '{expr}'")));
    }
    if !cur.is_empty() {
        terms.push((sign, cur));
    }
    let mut total = Weight::zero(rs.alg);
    for (sign, t) in terms {
        let (coef, atom) = match t.split_once('*') {
            Some((c, a)) => (eval_index(c, params)?, a.to_string()),
            None => (1, t),
        };
        // names such as `-2amin` carry their own sign
        let (sign, kind) = match parse_special(&atom, params) {
            Err(_) if sign < 0 && parse_special(&format!("-{atom}"), params).is_ok() => {
                (1, parse_special(&format!("-{atom}"), params)?)
            }
            r => (sign, r?),
        };
        let w = special_weight_in(rs, kind)?;
        total = &total + &w.scale(Rat::from_integer(sign * coef));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(m: usize, n: usize) -> RootSystem {
        RootSystem::build(AlgebraSpec::sl(m, n).unwrap()).unwrap()
    }

    fn w(r: &RootSystem, s: &str) -> Weight {
        Weight::parse(r.alg, s).unwrap()
    }

    #[test]
    fn basic_values() {
        let r = rs(3, 2);
        assert_eq!(special_weight_in(&r, Special::Mu(0)).unwrap(), w(&r, "1,1,0|0,-2"));
        let r21 = rs(2, 1);
        let two_rho1 = special_weight_in(&r21, Special::TwoRho1).unwrap();
        assert_eq!(two_rho1, w(&r21, "1,1|-2"));
        assert_eq!(special_weight_in(&r21, Special::Mu(0)).unwrap(), two_rho1);
        let r53 = rs(5, 3);
        assert_eq!(special_weight_in(&r53, Special::Eta1).unwrap(), w(&r53, "1,1,0,0,0|0,-1,-1"));
        assert_eq!(special_weight_in(&r53, Special::Eta2).unwrap(), w(&r53, "0,0,0,-1,-1|1,1,0"));
    }

    #[test]
    fn mu_ij_shapes_and_ranges() {
        let r = rs(4, 3);
        assert_eq!(special_weight_in(&r, Special::MuIJ(2, 1)).unwrap(), w(&r, "0,2,1,1|-1,-3,0"));
        assert_eq!(special_weight_in(&r, Special::MuIJ(1, 2)).unwrap(), w(&r, "3,1,1,1|-1,-1,-4"));
        assert!(matches!(special_weight_in(&r, Special::MuIJ(2, 2)), Err(Error::Range(_))));
        assert!(matches!(special_weight_in(&r, Special::MuIJ(0, 0)), Err(Error::Range(_))));
        assert!(matches!(special_weight_in(&rs(2, 1), Special::Eta1), Err(Error::Range(_))));
    }

    #[test]
    fn all_mu_ij_supertraceless() {
        for (m, n) in [(1, 1), (2, 1), (3, 2), (4, 4), (5, 3)] {
            let r = rs(m, n);
            for i in 1..=n as i64 {
                for j in 0..=(n as i64 - i) {
                    let x = special_weight_in(&r, Special::MuIJ(i, j)).unwrap();
                    assert_eq!(x.coordinate_sum(), rat(0));
                    assert!(x.is_integral());
                    // only the first-row weights are dominant on their own
                    assert_eq!(x.is_dominant(), i == 1, "mu({i},{j}) in sl({m}|{n})");
                }
            }
        }
    }

    #[test]
    fn expressions() {
        let r = rs(4, 3);
        let mut p = Params::new();
        p.insert("j".into(), 1);
        let a = eval_expr(&r, "mu(j+1) + mu(2,j-1) - amin", &p).unwrap();
        let b = &(&special_weight_in(&r, Special::Mu(2)).unwrap()
            + &special_weight_in(&r, Special::MuIJ(2, 0)).unwrap())
            - &r.alpha_min().weight;
        assert_eq!(a, b);
        let c = eval_expr(&r, "2rho1+2*amax", &p).unwrap();
        assert_eq!(c, &r.two_rho1() + &r.alpha_max().weight.scale(rat(2)));
        let d = eval_expr(&r, "mu+(0)-mu-(0)", &p).unwrap();
        assert_eq!(d, r.alpha_max().weight.scale(rat(2)));
        let e = eval_expr(&r, "-2amin", &p).unwrap();
        assert_eq!(e, r.alpha_min().weight.scale(rat(-2)));
        assert_eq!(eval_expr(&r, "rho0-2amin", &p).unwrap(), &special_weight_in(&r, Special::Rho0).unwrap() + &e);
        assert!(eval_expr(&r, "nope", &p).is_err());
        assert!(eval_expr(&r, "mu(k)", &p).is_err());
    }

    #[test]
    fn ospc_names() {
        let r = RootSystem::build(AlgebraSpec::ospc(3).unwrap()).unwrap();
        assert_eq!(special_weight_in(&r, Special::TwoRho1).unwrap().to_string(), "4|0,0");
        assert_eq!(special_weight_in(&r, Special::MinusAmin).unwrap().to_string(), "-1|1,0");
        assert!(matches!(special_weight_in(&r, Special::Mu(0)), Err(Error::Domain(_))));
    }
}
