//! Primitive weight graphs: weights of a module joined by "generates" arrows,
//! with closed subgraphs, inverse and dual graphs, and a set of stored
//! example graphs that are instantiated over a range of parameters.

use crate::algebra::{AlgebraSpec, RootSystem};
use crate::atypicality::{capital_lambda, is_sum_of_distinct_odd, mu_star};
use crate::error::{Error, Result};
use crate::special::{eval_expr, eval_index, Params};
use crate::weight::Weight;
use crate::rat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum EdgeLabel {
    /// Target vector lies in `U(g_{+1})` applied to the source vector.
    E,
    /// Target vector lies in `U(g_{-1})` applied to the source vector.
    F,
    #[default]
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: EdgeLabel,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimitiveWeightGraph {
    pub alg: AlgebraSpec,
    pub names: Vec<String>,
    pub nodes: Vec<Weight>,
    pub edges: Vec<Edge>,
}

impl PrimitiveWeightGraph {
    pub fn new(alg: AlgebraSpec) -> Self {
        PrimitiveWeightGraph { alg, names: Vec::new(), nodes: Vec::new(), edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_index(&self, w: &Weight) -> Option<usize> {
        self.nodes.iter().position(|x| x.same_functional(w))
    }

    pub fn add_node(&mut self, name: &str, w: Weight) -> Result<usize> {
        if w.alg != self.alg {
            return Err(Error::Domain(format!("node {name} belongs to {}", w.alg)));
        }
        if let Some(k) = self.node_index(&w) {
            return Err(Error::Precondition(format!(
                "node {name} = {w} duplicates node {}",
                self.names[k]
            )));
        }
        self.names.push(name.to_string());
        self.nodes.push(w);
        Ok(self.nodes.len() - 1)
    }

    /// Adds `from -> to`. The endpoints must differ by a nonzero element of
    /// the integral root lattice.
    pub fn add_edge(&mut self, from: usize, to: usize, label: EdgeLabel) -> Result<()> {
        if from >= self.len() || to >= self.len() {
            return Err(Error::Range(format!("edge {from}->{to} outside {} nodes", self.len())));
        }
        let d = &self.nodes[from] - &self.nodes[to];
        if d.coords.iter().all(|c| *c == rat(0)) {
            return Err(Error::Precondition(format!("loop at {}", self.names[from])));
        }
        let in_lattice = d.is_integral() && (self.alg.family != crate::Family::Sl || d.coordinate_sum() == rat(0));
        if !in_lattice {
            return Err(Error::Precondition(format!(
                "{} - {} = {d} is not in the root lattice",
                self.names[from], self.names[to]
            )));
        }
        let e = Edge { from, to, label };
        if !self.edges.contains(&e) {
            self.edges.push(e);
        }
        Ok(())
    }

    /// Nodes reachable from `i` along arrows, `i` included.
    pub fn reachable(&self, i: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([i]);
        let mut stack = vec![i];
        while let Some(x) = stack.pop() {
            for e in self.edges.iter().filter(|e| e.from == x) {
                if seen.insert(e.to) {
                    stack.push(e.to);
                }
            }
        }
        seen
    }

    fn between(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        let reach: Vec<BTreeSet<usize>> = (0..self.len()).map(|i| self.reachable(i)).collect();
        let mut out = s.clone();
        for &a in s {
            for &b in s {
                for eta in &reach[a] {
                    if reach[*eta].contains(&b) {
                        out.insert(*eta);
                    }
                }
            }
        }
        out
    }

    /// A node set is closed when it contains every node lying on a directed
    /// path between two of its members.
    pub fn is_closed(&self, s: &BTreeSet<usize>) -> bool {
        self.between(s) == *s
    }

    pub fn closure(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut cur = s.clone();
        loop {
            let next = self.between(&cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Same nodes, every arrow reversed. Labels are kept.
    pub fn inverse_graph(&self) -> Self {
        let mut g = self.clone();
        for e in g.edges.iter_mut() {
            std::mem::swap(&mut e.from, &mut e.to);
        }
        g
    }

    /// Graph of the dual module: nodes replaced by their duals, arrows reversed.
    pub fn dual_graph(&self, rs: &RootSystem) -> Result<Self> {
        let mut g = self.inverse_graph();
        for (k, w) in g.nodes.iter_mut().enumerate() {
            *w = mu_star(rs, w).map_err(|e| {
                Error::Domain(format!("no dual for node {}: {e}", self.names[k]))
            })?;
            g.names[k] = format!("{}*", self.names[k]);
        }
        Ok(g)
    }

    /// Edge set as weight pairs, for comparing graphs with different node order.
    pub fn edge_weights(&self) -> BTreeSet<(Weight, Weight)> {
        self.edges
            .iter()
            .map(|e| (self.nodes[e.from].normalized(), self.nodes[e.to].normalized()))
            .collect()
    }

    pub fn node_weights(&self) -> BTreeSet<Weight> {
        self.nodes.iter().map(|w| w.normalized()).collect()
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.node_weights() == other.node_weights() && self.edge_weights() == other.edge_weights()
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    /// The graph lives in the Kac module with this highest weight.
    Top(String),
    /// The graph lives in the Kac module whose socle has this highest weight.
    Bottom(String),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct NodeSpec {
    pub id: String,
    pub expr: String,
    #[serde(default)]
    pub when: Option<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct EdgeSpec {
    pub from: String,
    pub to: String,
    #[serde(default)]
    pub label: EdgeLabel,
}

/// A stored graph: parameter ranges (evaluated in order, so later bounds may
/// use earlier parameters together with `m` and `n`), nodes written in the
/// special-weight vocabulary and labeled edges.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct FixtureSpec {
    pub name: String,
    pub params: Vec<(String, String, String)>,
    #[serde(default)]
    pub requires: Vec<String>,
    pub ambient: Ambient,
    pub nodes: Vec<NodeSpec>,
    pub edges: Vec<EdgeSpec>,
}

const FIXTURES: &str = include_str!("../fixtures/graphs.json");

pub fn fixtures() -> Vec<FixtureSpec> {
    serde_json::from_str(FIXTURES).expect("bundled graph fixtures parse")
}

pub fn fixture(name: &str) -> Result<FixtureSpec> {
    fixtures()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::Domain(format!("unknown graph fixture '{name}'")))
}

fn condition(s: &str, p: &Params) -> Result<bool> {
    for op in [">=", "<=", "==", "!=", ">", "<"] {
        if let Some((a, b)) = s.split_once(op) {
            let (a, b) = (eval_index(a, p)?, eval_index(b, p)?);
            return Ok(match op {
                ">=" => a >= b,
                "<=" => a <= b,
                "==" => a == b,
                "!=" => a != b,
                ">" => a > b,
                _ => a < b,
            });
        }
    }
    Err(Error::Parse(format!("bad condition '{s}'")))
}

impl FixtureSpec {
    /// Every parameter assignment admitted for this algebra.
    pub fn assignments(&self, alg: &AlgebraSpec) -> Result<Vec<Params>> {
        let mut base = Params::new();
        base.insert("m".into(), alg.m as i64);
        base.insert("n".into(), alg.n as i64);
        for r in &self.requires {
            if !condition(r, &base)? {
                return Ok(Vec::new());
            }
        }
        let mut out = vec![base];
        for (name, lo, hi) in &self.params {
            let mut next = Vec::new();
            for p in out {
                let (lo, hi) = (eval_index(lo, &p)?, eval_index(hi, &p)?);
                for v in lo..=hi {
                    let mut q = p.clone();
                    q.insert(name.clone(), v);
                    next.push(q);
                }
            }
            out = next;
        }
        Ok(out)
    }

    pub fn instantiate(&self, rs: &RootSystem, p: &Params) -> Result<(PrimitiveWeightGraph, Weight)> {
        let ambient = match &self.ambient {
            Ambient::Top(e) => eval_expr(rs, e, p)?,
            Ambient::Bottom(e) => capital_lambda(&eval_expr(rs, e, p)?)?,
        };
        let mut g = PrimitiveWeightGraph::new(rs.alg);
        let mut ids = Vec::new();
        for ns in &self.nodes {
            if let Some(c) = &ns.when {
                if !condition(c, p)? {
                    continue;
                }
            }
            let w = eval_expr(rs, &ns.expr, p)?;
            g.add_node(&ns.id, w)?;
            ids.push(ns.id.clone());
        }
        for es in &self.edges {
            let (Some(a), Some(b)) = (
                ids.iter().position(|x| *x == es.from),
                ids.iter().position(|x| *x == es.to),
            ) else {
                continue;
            };
            g.add_edge(a, b, es.label)?;
        }
        Ok((g, ambient))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub params: Params,
    pub nodes: usize,
    pub edges: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub algebra: String,
    pub instances: Vec<InstanceReport>,
}

impl FixtureReport {
    pub fn ok(&self) -> bool {
        self.instances.iter().all(|i| i.failures.is_empty())
    }
}

/// Checks one instantiated graph: nodes are integral dominant weights of the
/// ambient Kac module (same lattice coset, level drop between 0 and `mn`),
/// and labeled edges differ by a sum of distinct positive odd roots.
pub fn check_instance(rs: &RootSystem, g: &PrimitiveWeightGraph, ambient: &Weight) -> Vec<String> {
    let mut bad = Vec::new();
    let mn = rat(rs.alg.num_positive_odd() as i64);
    for (name, w) in g.names.iter().zip(&g.nodes) {
        if !w.is_integral_dominant() {
            bad.push(format!("{name} = {w} is not integral dominant"));
        }
        let d = ambient - w;
        if !d.is_integral() {
            bad.push(format!("{name} = {w} is not in the lattice coset of {ambient}"));
        }
        let drop = d.level();
        if drop < rat(0) || drop > mn {
            bad.push(format!("{name} = {w} has level drop {drop} from {ambient}"));
        }
    }
    for e in &g.edges {
        let (a, b) = (&g.nodes[e.from], &g.nodes[e.to]);
        let diff = match e.label {
            EdgeLabel::F => Some(a - b),
            EdgeLabel::E => Some(b - a),
            EdgeLabel::Unknown => None,
        };
        if let Some(d) = diff {
            if !is_sum_of_distinct_odd(rs, &d) {
                bad.push(format!(
                    "{} -{:?}-> {}: {d} is not a sum of distinct positive odd roots",
                    g.names[e.from], e.label, g.names[e.to]
                ));
            }
        }
    }
    bad
}

/// Instantiates and checks a fixture over all admissible parameters.
pub fn check_fixture(spec: &FixtureSpec, rs: &RootSystem) -> Result<FixtureReport> {
    let mut instances = Vec::new();
    for p in spec.assignments(&rs.alg)? {
        let report = match spec.instantiate(rs, &p) {
            Ok((g, amb)) => InstanceReport {
                params: p.clone(),
                nodes: g.len(),
                edges: g.edges.len(),
                failures: check_instance(rs, &g, &amb),
            },
            Err(e) => InstanceReport { params: p.clone(), nodes: 0, edges: 0, failures: vec![e.to_string()] },
        };
        instances.push(report);
    }
    Ok(FixtureReport { name: spec.name.clone(), algebra: rs.alg.name(), instances })
}

/// Like [`check_fixture`] but turns any failure into an error.
pub fn validate_fixture(name: &str, rs: &RootSystem) -> Result<FixtureReport> {
    let report = check_fixture(&fixture(name)?, rs)?;
    if let Some(i) = report.instances.iter().find(|i| !i.failures.is_empty()) {
        return Err(Error::Precondition(format!(
            "fixture integrity: {} on {} with {:?}: {}",
            name,
            rs.alg,
            i.params,
            i.failures.join("; ")
        )));
    }
    Ok(report)
}
