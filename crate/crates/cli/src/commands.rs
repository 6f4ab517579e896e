// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! One function per subcommand. Each returns its exit code, a human
//! rendering and a JSON body; `main` decides which to print.

use std::collections::BTreeMap;
use std::path::Path;

use cocycle_planarity::bonds::enumerate_bonds;
use cocycle_planarity::corpus::{compare_corpus, CorpusSpec};
use cocycle_planarity::criterion::{check, CheckOptions, VariantFilter};
use cocycle_planarity::graph::{parse_edge_list, parse_vertex_list};
use cocycle_planarity::grounding::{find_grounding_traced, DEFAULT_MAX_EDGES};
use cocycle_planarity::oracle::oracle_is_planar;
use cocycle_planarity::separation::{build_disparate_table, Pairing};
use cocycle_planarity::witness::{certify_nonplanar, CertifyOptions, KuratowskiKind};
use cocycle_planarity::{Bond, Graph};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::render::{self, BondBody};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NONPLANAR: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Library(#[from] cocycle_planarity::Error),
    #[error("{0}")]
    Usage(String),
    #[error("criterion and oracle disagree: criterion says {criterion}, oracle says {oracle}")]
    Disagreement { criterion: &'static str, oracle: &'static str },
}

pub struct Outcome {
    pub exit: u8,
    pub text: String,
    pub digest: String,
    pub body: Value,
}

impl Outcome {
    fn new(exit: u8, text: String, digest: String, body: impl Serialize) -> Self {
        let body = serde_json::to_value(body).expect("bodies serialize");
        Outcome { exit, text, digest, body }
    }
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Digest of the canonical serialization, so formatting and comments in
/// the input do not matter.
pub fn graph_digest(g: &Graph) -> String {
    sha256_hex(&g.to_edge_list())
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Ok(parse_edge_list(&text)?)
}

fn verdict_word(planar: bool) -> &'static str {
    if planar {
        "planar"
    } else {
        "nonplanar"
    }
}

/// Oracle verdict over all components.
fn oracle_verdict(g: &Graph) -> Result<bool, CliError> {
    for component in g.connected_components() {
        let (sub, _) = g.extract(component);
        if !oracle_is_planar(&sub)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn cmd_check(g: &Graph, variant: VariantFilter, with_oracle: bool) -> Result<Outcome, CliError> {
    let mut report = check(g, &CheckOptions::with_filter(variant))?;
    if with_oracle {
        report.oracle_verdict = Some(oracle_verdict(g)?);
        if report.oracle_disagrees() {
            return Err(CliError::Disagreement {
                criterion: verdict_word(report.verdict.is_planar()),
                oracle: verdict_word(!report.verdict.is_planar()),
            });
        }
    }
    let exit = if report.verdict.is_planar() { EXIT_OK } else { EXIT_NONPLANAR };
    Ok(Outcome::new(exit, render::check_text(g, &report), graph_digest(g), render::check_body(g, &report)))
}

#[derive(Serialize)]
struct CocyclesBody {
    min_size: usize,
    count: usize,
    bonds: Vec<BondBody>,
}

pub fn cmd_cocycles(g: &Graph, min_size: usize) -> Result<Outcome, CliError> {
    if !g.is_connected() {
        return Err(cocycle_planarity::Error::Disconnected.into());
    }
    let mut bonds = enumerate_bonds(&g.view(), min_size.max(1))?;
    bonds.sort_by_key(|b| (b.len(), b.side_a()));
    let mut text = String::new();
    for b in &bonds {
        text.push_str(&format!(
            "{} edges, side A {}: {}\n",
            b.len(),
            render::set_text(g, b.side_a()),
            render::edges_text(g, b, b.edge_ids())
        ));
    }
    text.push_str(&format!("{} cocycles with at least {} edges\n", bonds.len(), min_size.max(1)));
    let body = CocyclesBody {
        min_size: min_size.max(1),
        count: bonds.len(),
        bonds: bonds.iter().map(|b| BondBody::new(g, b)).collect(),
    };
    Ok(Outcome::new(EXIT_OK, text, graph_digest(g), body))
}

#[derive(Serialize)]
struct PrunedBody {
    odd: [[String; 2]; 2],
    even: [[String; 2]; 2],
    disparate_in_a: bool,
    disparate_in_b: bool,
    prefixes: u64,
}

#[derive(Serialize)]
struct GroundBody {
    bond: BondBody,
    status: &'static str,
    witness: Option<Vec<[String; 2]>>,
    permutations_explored: u64,
    nodes_visited: u64,
    pruned: Option<Vec<PrunedBody>>,
}

fn pairing_text(g: &Graph, bond: &Bond, p: &Pairing) -> String {
    let (a, c) = p.odd_pair();
    let (b, d) = p.even_pair();
    format!(
        "{{{}, {}}} | {{{}, {}}}",
        render::edges_text(g, bond, &[a]),
        render::edges_text(g, bond, &[c]),
        render::edges_text(g, bond, &[b]),
        render::edges_text(g, bond, &[d])
    )
}

pub fn cmd_ground(g: &Graph, side_a: &str, explain: bool) -> Result<Outcome, CliError> {
    if !g.is_connected() {
        return Err(cocycle_planarity::Error::Disconnected.into());
    }
    let side = parse_vertex_list(g, side_a)?;
    let view = g.view();
    let bond = Bond::from_side(&view, side).ok_or_else(|| {
        CliError::Usage(format!("side A {} does not induce a bond", render::set_text(g, side)))
    })?;
    if !bond.is_big() {
        // No four edges to interleave; every order grounds the bond.
        let text = format!(
            "grounded (vacuous, {} edges): {}\n",
            bond.len(),
            render::edges_text(g, &bond, bond.edge_ids())
        );
        let witness = bond.edge_ids().iter().map(|&e| render::oriented(g, &bond, e)).collect();
        let body = GroundBody {
            bond: BondBody::new(g, &bond),
            status: "grounded",
            witness: Some(witness),
            permutations_explored: 0,
            nodes_visited: 0,
            pruned: explain.then(Vec::new),
        };
        return Ok(Outcome::new(EXIT_OK, text, graph_digest(g), body));
    }

    let table = build_disparate_table(&view, &bond)?;
    let (result, trace) = find_grounding_traced(&table, DEFAULT_MAX_EDGES)?;
    let mut text = match &result.witness {
        Some(w) => format!("grounded: {}\n", render::edges_text(g, &bond, w)),
        None => format!("ungrounded (exhausted {} permutations)\n", result.permutations_explored),
    };
    let pruned = explain.then(|| explain_trace(g, &bond, &table, &trace, &mut text));
    let witness = result
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&e| render::oriented(g, &bond, e)).collect());
    let exit = if result.is_grounded() { EXIT_OK } else { EXIT_NONPLANAR };
    let body = GroundBody {
        bond: BondBody::new(g, &bond),
        status: if result.is_grounded() { "grounded" } else { "ungrounded" },
        witness,
        permutations_explored: result.permutations_explored,
        nodes_visited: result.nodes_visited,
        pruned,
    };
    Ok(Outcome::new(exit, text, graph_digest(g), body))
}

fn explain_trace(
    g: &Graph,
    bond: &Bond,
    table: &cocycle_planarity::DisparateTable,
    trace: &BTreeMap<Pairing, u64>,
    text: &mut String,
) -> Vec<PrunedBody> {
    let mut out = Vec::new();
    text.push_str(&format!("{} pairings pruned the search:\n", trace.len()));
    for (pairing, &count) in trace {
        let (in_a, in_b) = table.get(pairing).expect("traced pairings come from the table");
        let sides = match (in_a, in_b) {
            (true, true) => "A and B",
            (true, false) => "A",
            _ => "B",
        };
        text.push_str(&format!(
            "  {} disparate in {sides}; rejected {count} prefixes\n",
            pairing_text(g, bond, pairing)
        ));
        let (a, c) = pairing.odd_pair();
        let (b, d) = pairing.even_pair();
        out.push(PrunedBody {
            odd: [render::oriented(g, bond, a), render::oriented(g, bond, c)],
            even: [render::oriented(g, bond, b), render::oriented(g, bond, d)],
            disparate_in_a: in_a,
            disparate_in_b: in_b,
            prefixes: count,
        });
    }
    out
}

#[derive(Serialize)]
struct CertificateBody {
    subdivision: &'static str,
    branch_vertices: Vec<String>,
    bond: BondBody,
    permutations_explored: u64,
    verified_ungrounded: bool,
}

#[derive(Serialize)]
struct CertifyBody {
    planar: bool,
    certificate: Option<CertificateBody>,
}

fn kind_name(kind: KuratowskiKind) -> &'static str {
    match kind {
        KuratowskiKind::K33 => "K3,3",
        KuratowskiKind::K5 => "K5",
    }
}

pub fn cmd_certify(g: &Graph, max_vertices: usize) -> Result<Outcome, CliError> {
    let options = CertifyOptions { max_vertices, ..CertifyOptions::default() };
    let Some(cert) = certify_nonplanar(g, &options)? else {
        let body = CertifyBody { planar: true, certificate: None };
        return Ok(Outcome::new(EXIT_OK, "planar: no certificate\n".into(), graph_digest(g), body));
    };
    let branch: Vec<String> = cert.subdivision.branch_vertices.iter().map(|&v| g.label(v)).collect();
    let kind = kind_name(cert.subdivision.kind);
    let text = format!(
        "nonplanar: {kind} subdivision on branch vertices {}\n\
         cocycle of {} edges, side A {}, side B {}\n\
         edges: {}\n\
         verified ungrounded by exhaustion ({} permutations)\n",
        branch.join(" "),
        cert.bond.len(),
        render::set_text(g, cert.bond.side_a()),
        render::set_text(g, cert.bond.side_b()),
        render::edges_text(g, &cert.bond, cert.bond.edge_ids()),
        cert.permutations_explored
    );
    let body = CertifyBody {
        planar: false,
        certificate: Some(CertificateBody {
            subdivision: kind,
            branch_vertices: branch,
            bond: BondBody::new(g, &cert.bond),
            permutations_explored: cert.permutations_explored,
            verified_ungrounded: true,
        }),
    };
    Ok(Outcome::new(EXIT_NONPLANAR, text, graph_digest(g), body))
}

#[derive(Serialize)]
struct CorpusBody {
    mode: &'static str,
    min_n: usize,
    max_n: usize,
    sample: Option<usize>,
    seed: Option<u64>,
    variant: &'static str,
    graphs: usize,
    planar: usize,
    nonplanar: usize,
    budget_errors: usize,
    disagreements: Vec<String>,
}

pub fn cmd_corpus(spec: CorpusSpec, variant: VariantFilter) -> Result<Outcome, CliError> {
    let summary = compare_corpus(spec, &CheckOptions::with_filter(variant))?;
    let random = spec.mode == cocycle_planarity::corpus::CorpusMode::RandomSample;
    let body = CorpusBody {
        mode: if random { "random" } else { "exhaustive" },
        min_n: spec.min_n,
        max_n: spec.max_n,
        sample: random.then_some(spec.sample_size),
        seed: random.then_some(spec.seed),
        variant: variant.name(),
        graphs: summary.graphs,
        planar: summary.planar,
        nonplanar: summary.nonplanar,
        budget_errors: summary.budget_errors,
        disagreements: summary.disagreements.iter().map(|d| d.graph.to_edge_list()).collect(),
    };
    let mut text = format!(
        "graphs        {}\nplanar        {}\nnonplanar     {}\nbudget errors {}\ndisagreements {}\n",
        body.graphs,
        body.planar,
        body.nonplanar,
        body.budget_errors,
        body.disagreements.len()
    );
    for d in &summary.disagreements {
        text.push_str(&format!(
            "disagreement: criterion {}, oracle {}\n{}",
            verdict_word(d.criterion.is_planar()),
            verdict_word(d.oracle_planar),
            d.graph.to_edge_list()
        ));
    }
    let exit = if summary.disagreements.is_empty() { EXIT_OK } else { EXIT_NONPLANAR };
    let digest = sha256_hex(&format!(
        "{} {}..={} sample={} seed={}",
        body.mode, spec.min_n, spec.max_n, spec.sample_size, spec.seed
    ));
    Ok(Outcome::new(exit, text, digest, body))
}
