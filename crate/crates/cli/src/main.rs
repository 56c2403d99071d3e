//! `supercoh`: weight combinatorics, closed-form cohomology answers and the
//! brute-force cohomology oracle from the command line.

mod render;
mod selfcheck;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::process::ExitCode;
use supercoh_core::classifier::{self, CohomologyAnswer};
use supercoh_core::families::{enumerate_family, FamilyKind};
use supercoh_core::special::{eval_expr, Params};
use supercoh_core::weight::parse_dynkin;
use supercoh_core::{atypicality, pwgraph, AlgebraSpec, Error, Result, RootSystem, Weight};
use supercoh_oracle::complex::ComplexOptions;
use supercoh_oracle::{
    build_irreducible, build_kac_module, build_named_cocycle, cochain_complex, pbw_ad_witness,
    verify_cocycle, weyl_dimension, CocycleKind, SuperModule,
};

#[derive(Parser)]
#[command(name = "supercoh", version, about = "Cohomology of sl(m|n) and C(n) with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Atypicality matrix, chains and Lambda_mu of an sl(m|n) weight.
    Atyp(AtypArgs),
    /// Closed-form dimension of H^1 or H^2.
    Classify(ClassifyArgs),
    /// All weights with nonzero H^1 or H^2 of the irreducible module.
    Enumerate(EnumerateArgs),
    /// Brute-force cohomology, cocycle checks and the enveloping-algebra witness.
    Oracle(OracleArgs),
    /// Explicit weight families attached to mu^(l) and -alpha_min.
    Families(FamiliesArgs),
    /// Stored primitive weight graphs.
    Graph(GraphArgs),
    /// Runs the built-in reference checks.
    Selfcheck(SelfcheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Sl,
    Ospc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Args)]
struct AlgArgs {
    #[arg(long, value_enum, default_value = "sl")]
    family: FamilyArg,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct WeightArgs {
    /// Epsilon coordinates `c1,..,cm|d1,..,dn`, or a named expression such as `2rho1+amax`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "dynkin")]
    weight: Option<String>,
    /// Dynkin labels `[a1,..;a0;b1,..]` (sl) or `[a1;a2,..]` (C(n)).
    #[arg(long, allow_hyphen_values = true)]
    dynkin: Option<String>,
}

#[derive(Args)]
struct AtypArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    weight: WeightArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassifyWhat {
    H1Kac,
    H2Kac,
    H1Irr,
    H2Irr,
    H1Env,
    H2Env,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, value_enum)]
    what: ClassifyWhat,
    #[command(flatten)]
    alg: AlgArgs,
    #[command(flatten)]
    weight: WeightArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateWhat {
    H1Irr,
    H2Irr,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    what: EnumerateWhat,
    #[command(flatten)]
    alg: AlgArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleWhat {
    /// Dimensions of H^p for p <= pmax.
    Cohomology,
    /// Builds a named cocycle and checks it is closed and not exact.
    Cocycle,
    /// Nonvanishing of prod ad f_alpha (prod e_alpha).
    Pbw,
    /// Dimension and level structure of the coefficient module.
    Module,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModuleArg {
    Kac,
    Irr,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    what: OracleWhat,
    #[command(flatten)]
    alg: AlgArgs,
    #[command(flatten)]
    weight: WeightArgs,
    #[arg(long, value_enum, default_value = "kac")]
    module: ModuleArg,
    /// Cocycle name (phi_18, phi'_125, phi_21, phi_22, phi_1_top, phi_1_bottom).
    #[arg(long)]
    cocycle: Option<String>,
    #[arg(long, default_value_t = 2)]
    pmax: usize,
    /// Bound on module and cochain-space dimensions (default from SUPERCOH_MAX_DIM).
    #[arg(long)]
    max_dim: Option<usize>,
    #[arg(long, value_enum, default_value = "off")]
    invariant_reduction: Switch,
    /// Bound on the number of odd positive roots for the PBW witness.
    #[arg(long, default_value_t = supercoh_oracle::pbw::DEFAULT_MAX_ODD)]
    max_odd: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyWhat {
    PVeeMu,
    PVeeMinusAmin,
    PPlusMu,
}

#[derive(Args)]
struct FamiliesArgs {
    #[arg(long, value_enum)]
    what: FamilyWhat,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Index l of mu^(l).
    #[arg(long, default_value_t = 0)]
    l: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct GraphArgs {
    /// Fixture to instantiate and check; lists the fixtures when omitted.
    #[arg(long)]
    name: Option<String>,
    #[arg(long, value_enum, default_value = "sl")]
    family: FamilyArg,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SelfcheckArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::Domain(_)
        | Error::Range(_)
        | Error::NotDominant(_)
        | Error::NotIntegral(_)
        | Error::Precondition(_)
        | Error::NoSolution(_) => 3,
        Error::Resource(_) => 4,
        Error::Internal(_) => 1,
    }
}

impl AlgArgs {
    fn spec(&self) -> Result<AlgebraSpec> {
        algebra(self.family, self.m, self.n)
    }
}

fn algebra(family: FamilyArg, m: Option<usize>, n: usize) -> Result<AlgebraSpec> {
    match family {
        FamilyArg::Sl => {
            let m = m.ok_or_else(|| Error::Parse("--m is required for --family sl".into()))?;
            AlgebraSpec::sl(m, n)
        }
        FamilyArg::Ospc => AlgebraSpec::ospc(n),
    }
}

fn root_system(alg: AlgebraSpec) -> Result<RootSystem> {
    RootSystem::build(alg)
}

impl WeightArgs {
    fn get(&self, rs: &RootSystem) -> Result<Option<Weight>> {
        match (&self.weight, &self.dynkin) {
            (Some(_), Some(_)) => Err(Error::Parse("give exactly one of --weight and --dynkin".into())),
            (Some(w), None) => match Weight::parse(rs.alg, w) {
                Ok(x) => Ok(Some(x)),
                Err(err) if w.contains('|') || !w.chars().any(|c| c.is_ascii_alphabetic()) => Err(err),
                Err(_) => eval_expr(rs, w, &Params::new()).map(Some),
            },
            (None, Some(d)) => Weight::from_dynkin(rs.alg, &parse_dynkin(rs.alg, d)?).map(Some),
            (None, None) => Ok(None),
        }
    }

    fn require(&self, rs: &RootSystem) -> Result<Weight> {
        self.get(rs)?
            .ok_or_else(|| Error::Parse("give exactly one of --weight and --dynkin".into()))
    }
}

fn emit(format: Format, value: Value, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
        Format::Text => print!("{text}"),
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn cmd_atyp(a: &AtypArgs) -> Result<()> {
    let rs = root_system(AlgebraSpec::sl(a.m, a.n)?)?;
    let mu = a.weight.require(&rs)?;
    let rep = atypicality::report(&mu)?;
    emit(a.format, to_json(&rep), render::atypicality(&rep, &mu));
    Ok(())
}

fn cmd_classify(a: &ClassifyArgs) -> Result<()> {
    let rs = root_system(a.alg.spec()?)?;
    let ans: CohomologyAnswer = match a.what {
        ClassifyWhat::H1Env | ClassifyWhat::H2Env => {
            if a.weight.get(&rs)?.is_some() {
                return Err(Error::Parse("enveloping-algebra coefficients take no weight".into()));
            }
            let (h1, h2) = classifier::enveloping_answers(rs.alg);
            if a.what == ClassifyWhat::H1Env { h1 } else { h2 }
        }
        w => {
            let lam = a.weight.require(&rs)?;
            match w {
                ClassifyWhat::H1Kac => classifier::h1_kac(&rs, &lam)?,
                ClassifyWhat::H2Kac => classifier::h2_kac(&rs, &lam)?,
                ClassifyWhat::H1Irr => classifier::h1_irr(&rs, &lam)?,
                _ => classifier::h2_irr(&rs, &lam)?,
            }
        }
    };
    let mut v = to_json(&ans);
    v["algebra"] = json!(rs.alg.name());
    emit(a.format, v, render::answer(&rs, &ans));
    Ok(())
}

fn cmd_enumerate(a: &EnumerateArgs) -> Result<()> {
    let rs = root_system(a.alg.spec()?)?;
    let (degree, list) = match a.what {
        EnumerateWhat::H1Irr => (1, classifier::h1_irr_weights(&rs)),
        EnumerateWhat::H2Irr => (2, classifier::enumerate_h2_irr(&rs)?),
    };
    let value = json!({
        "algebra": rs.alg.name(),
        "degree": degree,
        "count": list.len(),
        "weights": list.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    });
    emit(a.format, value, render::weight_list(&format!("H^{degree}(L_mu) != 0"), &list));
    Ok(())
}

fn options(a: &OracleArgs) -> ComplexOptions {
    let mut o = ComplexOptions { p_max: a.pmax, ..ComplexOptions::default() };
    if let Some(d) = a.max_dim {
        o.max_dim = d;
    }
    o.invariant_reduction = a.invariant_reduction == Switch::On;
    o
}

/// Refuses modules whose dimension would exceed the bound before building them.
fn check_module_size(rs: &RootSystem, lam: &Weight, max_dim: usize) -> Result<()> {
    let g0 = weyl_dimension(rs, lam);
    let odd = rs.alg.num_positive_odd() as u32;
    let bound = max_dim as i128;
    let g0 = if g0.is_integer() { *g0.numer() as i128 } else { 0 };
    let dim = 1i128.checked_shl(odd).and_then(|p| p.checked_mul(g0));
    match dim {
        Some(d) if d <= bound => Ok(()),
        _ => Err(Error::Resource(format!(
            "the Kac module of {lam} has dimension {} above the bound {max_dim}",
            dim.map(|d| d.to_string()).unwrap_or_else(|| "beyond i128".into())
        ))),
    }
}

fn coefficient_module(rs: &RootSystem, kind: ModuleArg, lam: &Weight, max_dim: usize) -> Result<SuperModule> {
    lam.require_integral_dominant()?;
    check_module_size(rs, lam, max_dim)?;
    match kind {
        ModuleArg::Kac => build_kac_module(rs, lam),
        ModuleArg::Irr => build_irreducible(rs, lam),
    }
}

fn module_summary(v: &SuperModule) -> Value {
    let mut levels = std::collections::BTreeMap::<i64, [usize; 2]>::new();
    for (l, &odd) in v.level.iter().zip(&v.parity) {
        levels.entry(*l).or_default()[odd as usize] += 1;
    }
    json!({
        "dim": v.dim(),
        "levels": levels
            .iter()
            .map(|(l, [e, o])| json!({"level": l, "even": e, "odd": o}))
            .collect::<Vec<_>>(),
    })
}

fn cmd_oracle(a: &OracleArgs) -> Result<()> {
    let rs = root_system(a.alg.spec()?)?;
    let opts = options(a);
    let module_name = match a.module {
        ModuleArg::Kac => "kac",
        ModuleArg::Irr => "irr",
    };
    match a.what {
        OracleWhat::Pbw => {
            let w = pbw_ad_witness(&rs, a.max_odd)?;
            emit(a.format, to_json(&w), render::pbw(&w));
        }
        OracleWhat::Module => {
            let lam = a.weight.require(&rs)?;
            let v = coefficient_module(&rs, a.module, &lam, opts.max_dim)?;
            v.check_representation(&rs)?;
            let mut value = module_summary(&v);
            value["algebra"] = json!(rs.alg.name());
            value["module"] = json!(module_name);
            value["weight"] = json!(lam.to_string());
            emit(a.format, value.clone(), render::module(&value));
        }
        OracleWhat::Cohomology => {
            let lam = a.weight.require(&rs)?;
            let v = coefficient_module(&rs, a.module, &lam, opts.max_dim)?;
            let cx = cochain_complex(&rs, &v, &opts)?;
            let mut value = to_json(&cx);
            value["module"] = json!(module_name);
            value["weight"] = json!(lam.to_string());
            emit(a.format, value, render::complex(&cx, module_name, &lam));
        }
        OracleWhat::Cocycle => {
            let name = a
                .cocycle
                .as_deref()
                .ok_or_else(|| Error::Parse("--cocycle is required for --what cocycle".into()))?;
            let kind = CocycleKind::parse(name)?;
            let lam = match a.weight.get(&rs)? {
                Some(w) => w,
                None => kind.admissible_weights(&rs)?.remove(0),
            };
            if lam.is_integral_dominant() {
                check_module_size(&rs, &lam, opts.max_dim)?;
            }
            let c = build_named_cocycle(kind, &rs, &lam)?;
            let r = verify_cocycle(&rs, &c.module, &c.cochain)?;
            let mut value = to_json(&r);
            value["algebra"] = json!(rs.alg.name());
            value["cocycle"] = json!(kind.name());
            value["weight"] = json!(lam.to_string());
            value["module"] = json!(if kind.uses_kac_module() { "kac" } else { "irr" });
            value["module_dim"] = json!(c.module.dim());
            emit(a.format, value.clone(), render::cocycle(&value));
        }
    }
    Ok(())
}

fn cmd_families(a: &FamiliesArgs) -> Result<()> {
    let rs = root_system(AlgebraSpec::sl(a.m, a.n)?)?;
    let (kind, title) = match a.what {
        FamilyWhat::PVeeMu => (FamilyKind::PVeeMu(a.l), format!("P-vee of mu^({})", a.l)),
        FamilyWhat::PVeeMinusAmin => (FamilyKind::PVeeMinusAmin, "P-vee of -alpha_min".to_string()),
        FamilyWhat::PPlusMu => (FamilyKind::PPlusMu(a.l), format!("P-plus of mu^({})", a.l)),
    };
    let list = enumerate_family(&rs, kind)?;
    let value = json!({
        "algebra": rs.alg.name(),
        "family": title,
        "count": list.len(),
        "weights": list.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    });
    emit(a.format, value, render::weight_list(&title, &list));
    Ok(())
}

fn cmd_graph(a: &GraphArgs) -> Result<()> {
    let Some(name) = &a.name else {
        let names: Vec<String> = pwgraph::fixtures().into_iter().map(|f| f.name).collect();
        let text = names.iter().map(|n| format!("{n}\n")).collect();
        emit(a.format, json!({ "fixtures": names }), text);
        return Ok(());
    };
    let n = a.n.ok_or_else(|| Error::Parse("--n is required with --name".into()))?;
    let rs = root_system(algebra(a.family, a.m, n)?)?;
    let spec = pwgraph::fixture(name)?;
    let report = pwgraph::check_fixture(&spec, &rs)?;
    let mut graphs = Vec::new();
    for p in spec.assignments(&rs.alg)? {
        let (g, ambient) = spec.instantiate(&rs, &p)?;
        graphs.push((p, g, ambient));
    }
    let value = json!({
        "report": to_json(&report),
        "ok": report.ok(),
        "graphs": graphs
            .iter()
            .map(|(p, g, amb)| json!({
                "params": p,
                "ambient": amb.to_string(),
                "nodes": g.names.iter().zip(&g.nodes)
                    .map(|(n, w)| json!({"id": n, "weight": w.to_string()}))
                    .collect::<Vec<_>>(),
                "edges": g.edges.iter()
                    .map(|e| json!({"from": g.names[e.from], "to": g.names[e.to], "label": e.label}))
                    .collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>(),
    });
    emit(a.format, value, render::graphs(&report, &graphs));
    if !report.ok() {
        return Err(Error::Precondition(format!("fixture {name} fails its integrity checks on {}", rs.alg)));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Atyp(a) => cmd_atyp(a),
        Cmd::Classify(a) => cmd_classify(a),
        Cmd::Enumerate(a) => cmd_enumerate(a),
        Cmd::Oracle(a) => cmd_oracle(a),
        Cmd::Families(a) => cmd_families(a),
        Cmd::Graph(a) => cmd_graph(a),
        Cmd::Selfcheck(a) => {
            let results = selfcheck::run();
            let ok = results.iter().all(|r| r.ok);
            emit(a.format, to_json(&results), render::selfcheck(&results));
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(5) };
        }
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::Parse(String::new())), 2);
        assert_eq!(exit_code(&Error::NotDominant(String::new())), 3);
        assert_eq!(exit_code(&Error::Resource(String::new())), 4);
    }

    #[test]
    fn kac_size_bound() {
        let rs = RootSystem::build(AlgebraSpec::sl(2, 1).unwrap()).unwrap();
        // 2^2 * dim of the g0 module with highest weight 2rho1 + amax (= 2)
        let lam = &rs.two_rho1() + &rs.alpha_max().weight;
        assert!(check_module_size(&rs, &lam, 8).is_ok());
        assert!(matches!(check_module_size(&rs, &lam, 7), Err(Error::Resource(_))));
    }
}
