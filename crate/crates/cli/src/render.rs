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

//! Text and JSON renderings of library results, using vertex labels.

use cocycle_planarity::criterion::{ComponentReport, PlanarityReport};
use cocycle_planarity::{Bond, Graph, VertexSet};
use serde::Serialize;

pub fn vertex_labels(g: &Graph, set: VertexSet) -> Vec<String> {
    set.iter().map(|v| g.label(v)).collect()
}

pub fn set_text(g: &Graph, set: VertexSet) -> String {
    format!("{{{}}}", vertex_labels(g, set).join(", "))
}

/// Edge `e` of `bond` as `[side-A end, side-B end]`.
pub fn oriented(g: &Graph, bond: &Bond, e: usize) -> [String; 2] {
    let (u, v) = bond.orientation(e).expect("edge of the bond");
    [g.label(u), g.label(v)]
}

pub fn edges_text(g: &Graph, bond: &Bond, order: &[usize]) -> String {
    order
        .iter()
        .map(|&e| {
            let [u, v] = oriented(g, bond, e);
            format!("{u}-{v}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
pub struct BondBody {
    pub size: usize,
    pub side_a: Vec<String>,
    pub side_b: Vec<String>,
    /// Oriented from side A to side B, in edge-id order.
    pub edges: Vec<[String; 2]>,
}

impl BondBody {
    pub fn new(g: &Graph, bond: &Bond) -> Self {
        BondBody {
            size: bond.len(),
            side_a: vertex_labels(g, bond.side_a()),
            side_b: vertex_labels(g, bond.side_b()),
            edges: bond.edge_ids().iter().map(|&e| oriented(g, bond, e)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct GroundedBody {
    pub bond: BondBody,
    pub witness: Vec<[String; 2]>,
}

#[derive(Serialize)]
pub struct UngroundedBody {
    pub bond: BondBody,
    pub permutations_explored: u64,
}

#[derive(Serialize)]
pub struct ComponentBody {
    pub vertices: Vec<String>,
    pub verdict: &'static str,
    pub big_bonds: usize,
    pub grounded: Vec<GroundedBody>,
    pub ungrounded: Option<UngroundedBody>,
}

#[derive(Serialize)]
pub struct OracleBody {
    pub planar: bool,
    pub agrees: bool,
}

#[derive(Serialize)]
pub struct CheckBody {
    pub verdict: &'static str,
    pub variant: &'static str,
    pub components: Vec<ComponentBody>,
    pub oracle: Option<OracleBody>,
}

fn verdict_name(planar: bool) -> &'static str {
    if planar {
        "planar"
    } else {
        "nonplanar"
    }
}

fn component_body(g: &Graph, c: &ComponentReport) -> ComponentBody {
    ComponentBody {
        vertices: vertex_labels(g, c.vertices),
        verdict: verdict_name(c.verdict.is_planar()),
        big_bonds: c.big_bonds,
        grounded: c
            .grounded
            .iter()
            .map(|gb| GroundedBody {
                bond: BondBody::new(g, &gb.bond),
                witness: gb.witness.iter().map(|&e| oriented(g, &gb.bond, e)).collect(),
            })
            .collect(),
        ungrounded: c.ungrounded.as_ref().map(|u| UngroundedBody {
            bond: BondBody::new(g, &u.bond),
            permutations_explored: u.permutations_explored,
        }),
    }
}

pub fn check_body(g: &Graph, report: &PlanarityReport) -> CheckBody {
    CheckBody {
        verdict: verdict_name(report.verdict.is_planar()),
        variant: report.variant.name(),
        components: report.components.iter().map(|c| component_body(g, c)).collect(),
        oracle: report.oracle_verdict.map(|planar| OracleBody { planar, agrees: !report.oracle_disagrees() }),
    }
}

pub fn check_text(g: &Graph, report: &PlanarityReport) -> String {
    let mut out = String::new();
    out.push_str(verdict_name(report.verdict.is_planar()));
    out.push_str(&format!(" (variant {})\n", report.variant.name()));
    let many = report.components.len() > 1;
    for c in &report.components {
        let indent = if many {
            out.push_str(&format!("component {}:\n", set_text(g, c.vertices)));
            "  "
        } else {
            ""
        };
        if c.big_bonds == 0 {
            out.push_str(&format!("{indent}no big cocycles (vacuous)\n"));
        }
        for gb in &c.grounded {
            out.push_str(&format!(
                "{indent}grounded {}-edge cocycle, side A {}: {}\n",
                gb.bond.len(),
                set_text(g, gb.bond.side_a()),
                edges_text(g, &gb.bond, &gb.witness)
            ));
        }
        if let Some(u) = &c.ungrounded {
            out.push_str(&format!(
                "{indent}ungrounded {}-edge cocycle, side A {}: {} (exhausted {} permutations)\n",
                u.bond.len(),
                set_text(g, u.bond.side_a()),
                edges_text(g, &u.bond, u.bond.edge_ids()),
                u.permutations_explored
            ));
        }
    }
    if let Some(planar) = report.oracle_verdict {
        let note = if report.oracle_disagrees() { "DISAGREES" } else { "agrees" };
        out.push_str(&format!("oracle: {} ({note})\n", verdict_name(planar)));
    }
    out
}
