//! Text renderings. JSON output goes through serde directly.

use crate::selfcheck::CheckResult;
use serde_json::Value;
use std::fmt::Write;
use supercoh_core::atypicality::{AtypicalityReport, Pos};
use supercoh_core::classifier::{CohomologyAnswer, CoefficientKind, Dimension};
use supercoh_core::pwgraph::{FixtureReport, PrimitiveWeightGraph};
use supercoh_core::special::Params;
use supercoh_core::{RootSystem, Weight};
use supercoh_oracle::complex::CochainComplex;
use supercoh_oracle::PbwWitness;

fn positions(v: &[Pos]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(|(i, j)| format!("({i},{j})")).collect::<Vec<_>>().join(" ")
}

/// The matrix with the even labels `a_i` in the left margin between rows
/// and the odd labels `b_v` on top between columns.
fn matrix_with_margins(rep: &AtypicalityReport, mu: &Weight) -> String {
    let m = mu.alg.m;
    let labels = mu.dynkin();
    let a = &labels[..m - 1];
    let b = &labels[m..];
    let w = rep
        .matrix
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1)
        .max(b.iter().map(|x| x.to_string().len()).max().unwrap_or(1))
        + 2;
    let margin = a.iter().map(|x| x.to_string().len()).max().unwrap_or(0).max(2) + 2;
    let mut out = String::new();
    // the b-labels sit halfway between columns
    let mut top = " ".repeat(margin + w - 1 + w / 2 - (w - 1) / 2);
    for x in b {
        let _ = write!(top, "{:^w$}", x.to_string());
    }
    let _ = writeln!(out, "{}", top.trim_end());
    for (i, row) in rep.matrix.iter().enumerate() {
        let mut line = " ".repeat(margin);
        for x in row {
            let _ = write!(line, "{x:>w$}");
        }
        let _ = writeln!(out, "{line}");
        if i + 1 < m {
            let _ = writeln!(out, "{:>width$}", a[i].to_string(), width = margin - 2);
        }
    }
    out
}

pub fn atypicality(rep: &AtypicalityReport, mu: &Weight) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mu = ({})", rep.mu);
    let _ = writeln!(out, "Dynkin labels {}", rep.dynkin);
    if rep.atypical_roots.is_empty() {
        let _ = writeln!(out, "typical; Λ_μ = μ");
        return out;
    }
    let _ = writeln!(out, "A(mu):");
    out.push_str(&matrix_with_margins(rep, mu));
    let gammas: Vec<String> = rep
        .atypical_roots
        .iter()
        .enumerate()
        .map(|(k, (i, j))| format!("γ{}=({i},{j})", k + 1))
        .collect();
    let _ = writeln!(out, "atypical roots: {}", gammas.join(" "));
    let rows: Vec<&Vec<String>> = rep.nqc.iter().filter(|r| !r.is_empty()).collect();
    if !rows.is_empty() {
        let _ = writeln!(out, "nqc type:");
        for r in rows {
            let _ = writeln!(out, "  {}", r.join(" "));
        }
    }
    for (k, c) in rep.east_chains.iter().enumerate() {
        let _ = writeln!(out, "E-chain {}: {}", k + 1, positions(c));
    }
    for (k, c) in rep.north_chains.iter().enumerate() {
        let _ = writeln!(out, "N-chain {}: {}", k + 1, positions(c));
    }
    let _ = writeln!(out, "NE_μ: {}", positions(&rep.ne_union));
    let _ = writeln!(out, "P_μ: {}", positions(&rep.p_mu));
    let _ = writeln!(out, "Λ_μ = ({})", rep.lambda_mu);
    out
}

fn dimension(d: &Dimension) -> String {
    match d {
        Dimension::Exact(k) => k.to_string(),
        Dimension::Nonzero => "nonzero".into(),
    }
}

pub fn answer(rs: &RootSystem, a: &CohomologyAnswer) -> String {
    let coeff = match a.coefficient_kind {
        CoefficientKind::Kac => "Kac module",
        CoefficientKind::Irreducible => "irreducible module",
        CoefficientKind::Enveloping => "enveloping algebra",
    };
    let mut out = format!("H^{} of {} with {coeff} coefficients: dimension {}\n", a.degree, rs.alg, dimension(&a.dimension));
    if let Some(w) = a.witness {
        let name = serde_json::to_value(w).expect("witness name");
        let _ = writeln!(out, "witness: {}", name.as_str().unwrap_or_default());
    }
    for w in &a.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

pub fn weight_list(title: &str, list: &[Weight]) -> String {
    let mut out = format!("{title}: count {}\n", list.len());
    for w in list {
        let _ = writeln!(out, "  ({w})  {}", w.dynkin_string());
    }
    out
}

pub fn complex(cx: &CochainComplex, module: &str, lam: &Weight) -> String {
    let mut out = format!(
        "{} module {module} of ({lam}), dim {}{}\n",
        cx.algebra,
        cx.module_dim,
        if cx.invariant_reduction { ", g0-invariant subcomplex" } else { "" }
    );
    let _ = writeln!(out, "{:>3} {:>10} {:>10} {:>8} {:>8} {:>4}", "p", "dim_even", "dim_odd", "rk_even", "rk_odd", "H^p");
    for d in &cx.degrees {
        let _ = writeln!(
            out,
            "{:>3} {:>10} {:>10} {:>8} {:>8} {:>4}",
            d.p, d.dim_even, d.dim_odd, d.rank_even, d.rank_odd, d.h
        );
    }
    out
}

pub fn pbw(w: &PbwWitness) -> String {
    let mut out = format!(
        "{}: prod ad f (prod e) over {} odd roots is {}\n",
        w.algebra,
        w.odd_roots,
        if w.nonzero { "nonzero" } else { "zero" }
    );
    let _ = writeln!(out, "terms {}, degree {}", w.terms, w.degree);
    let _ = writeln!(out, "top Cartan part: {}", w.leading_term);
    let _ = writeln!(out, "equals {} prod h_alpha", match w.leading_sign {
        1 => "+1 *",
        -1 => "-1 *",
        _ => "no multiple of",
    });
    out
}

fn field(v: &Value, k: &str) -> String {
    match &v[k] {
        Value::String(s) => s.clone(),
        x => x.to_string(),
    }
}

pub fn module(v: &Value) -> String {
    let mut out = format!(
        "{} {} module of ({}): dim {}\n",
        field(v, "algebra"),
        field(v, "module"),
        field(v, "weight"),
        field(v, "dim")
    );
    if let Some(levels) = v["levels"].as_array() {
        for l in levels {
            let _ = writeln!(out, "  level {:>3}: even {}, odd {}", field(l, "level"), field(l, "even"), field(l, "odd"));
        }
    }
    out
}

pub fn cocycle(v: &Value) -> String {
    let yes = |k: &str| if v[k].as_bool() == Some(true) { "yes" } else { "no" };
    let parity = match v["parity"].as_bool() {
        Some(true) => "odd",
        Some(false) => "even",
        None => "mixed",
    };
    let mut out = format!(
        "{} on {} {} module of ({}), dim {}\n",
        field(v, "cocycle"),
        field(v, "algebra"),
        field(v, "module"),
        field(v, "weight"),
        field(v, "module_dim")
    );
    let _ = writeln!(out, "degree {}, parity {parity}", field(v, "degree"));
    let _ = writeln!(out, "closed (matrix): {}", yes("is_cocycle"));
    let _ = writeln!(out, "closed (formula): {}", yes("is_cocycle_by_formula"));
    let _ = writeln!(out, "exact: {}", yes("is_coboundary"));
    out
}

pub fn graphs(report: &FixtureReport, graphs: &[(Params, PrimitiveWeightGraph, Weight)]) -> String {
    let mut out = format!("{} on {}: {} instance(s)\n", report.name, report.algebra, graphs.len());
    for ((p, g, amb), inst) in graphs.iter().zip(&report.instances) {
        let params: Vec<String> = p
            .iter()
            .filter(|(k, _)| *k != "m" && *k != "n")
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "[{}] ambient ({amb})", params.join(", "));
        for (n, w) in g.names.iter().zip(&g.nodes) {
            let _ = writeln!(out, "  {n} = ({w})");
        }
        for e in &g.edges {
            let label = serde_json::to_value(e.label).expect("edge label");
            let _ = writeln!(out, "  {} -{}-> {}", g.names[e.from], label.as_str().unwrap_or("?"), g.names[e.to]);
        }
        for f in &inst.failures {
            let _ = writeln!(out, "  FAIL {f}");
        }
    }
    out
}

pub fn selfcheck(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let _ = writeln!(out, "{} {}: {}", if r.ok { "PASS" } else { "FAIL" }, r.name, r.detail);
    }
    let failed = results.iter().filter(|r| !r.ok).count();
    let _ = writeln!(out, "{} checks, {failed} failed", results.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use supercoh_core::atypicality::report;
    use supercoh_core::AlgebraSpec;

    #[test]
    fn labels_sit_between_rows_and_columns() {
        let mu = Weight::parse(AlgebraSpec::sl(3, 2).unwrap(), "1,0,0|0,-1").unwrap();
        let rep = report(&mu).unwrap();
        let text = matrix_with_margins(&rep, &mu);
        let lines: Vec<&str> = text.lines().collect();
        // header, then rows interleaved with m-1 label lines
        assert_eq!(lines.len(), 1 + 3 + 2);
        assert_eq!(lines[2].trim(), mu.dynkin()[0].to_string());
    }
}
