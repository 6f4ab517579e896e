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

//! The grounded-cocycle planarity decision.
//!
//! A connected graph is planar iff each of its big bonds is grounded; an
//! arbitrary graph is planar iff each component is. The restricted variants
//! only check big bonds passing a [`VariantFilter`].

use std::fmt;
use std::str::FromStr;

use crate::bonds::{enumerate_bonds_with_limit, Bond, DEFAULT_BOND_VERTEX_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{connected_components, is_connected, Graph, SubgraphView, VertexSet};
use crate::grounding::{find_grounding, verify_grounding, DEFAULT_MAX_EDGES};
use crate::separation::build_disparate_table;

/// Which big bonds the criterion inspects.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum VariantFilter {
    #[default]
    AllBig,
    /// Big bonds with at least five edges.
    AtLeastFive,
    /// Big bonds whose sides both have at least two vertices.
    BothSidesGe2,
    /// Big bonds with a cycle on at least one side.
    CycleSide,
}

impl VariantFilter {
    pub const ALL: [VariantFilter; 4] = [
        VariantFilter::AllBig,
        VariantFilter::AtLeastFive,
        VariantFilter::BothSidesGe2,
        VariantFilter::CycleSide,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VariantFilter::AllBig => "all",
            VariantFilter::AtLeastFive => "ge5",
            VariantFilter::BothSidesGe2 => "sides2",
            VariantFilter::CycleSide => "cycleside",
        }
    }
}

impl fmt::Display for VariantFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VariantFilter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        VariantFilter::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown variant `{s}` (expected all, ge5, sides2 or cycleside)"))
    }
}

fn has_cycle(view: &SubgraphView<'_>) -> bool {
    // A forest has exactly |V| - (#components) edges.
    view.edge_count() + connected_components(view).len() > view.vertex_count()
}

/// Whether a big bond of `host` is inspected under `filter`.
pub fn passes_filter(host: &SubgraphView<'_>, bond: &Bond, filter: VariantFilter) -> bool {
    match filter {
        VariantFilter::AllBig => true,
        VariantFilter::AtLeastFive => bond.len() >= 5,
        VariantFilter::BothSidesGe2 => bond.side_a().len() >= 2 && bond.side_b().len() >= 2,
        VariantFilter::CycleSide => {
            has_cycle(&host.induced(bond.side_a())) || has_cycle(&host.induced(bond.side_b()))
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub filter: VariantFilter,
    /// Grounding search budget, in bond edges.
    pub max_edges: usize,
    /// Bond enumeration budget, in component vertices.
    pub max_vertices: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            filter: VariantFilter::AllBig,
            max_edges: DEFAULT_MAX_EDGES,
            max_vertices: DEFAULT_BOND_VERTEX_LIMIT,
        }
    }
}

impl CheckOptions {
    pub fn with_filter(filter: VariantFilter) -> Self {
        CheckOptions { filter, ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Planar,
    Nonplanar,
}

impl Verdict {
    pub fn is_planar(self) -> bool {
        self == Verdict::Planar
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Planar => "planar",
            Verdict::Nonplanar => "nonplanar",
        })
    }
}

/// A big bond with the grounding order found for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundedBond {
    pub bond: Bond,
    pub witness: Vec<usize>,
}

/// A big bond whose grounding search was exhausted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UngroundedBond {
    pub bond: Bond,
    pub permutations_explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub vertices: VertexSet,
    pub verdict: Verdict,
    /// Number of big bonds enumerated, before filtering.
    pub big_bonds: usize,
    /// Every filtered bond, with its witness, up to the first failure.
    pub grounded: Vec<GroundedBond>,
    pub ungrounded: Option<UngroundedBond>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityReport {
    pub verdict: Verdict,
    pub components: Vec<ComponentReport>,
    pub variant: VariantFilter,
    /// Filled in by callers that also ran the independent oracle.
    pub oracle_verdict: Option<bool>,
}

impl PlanarityReport {
    pub fn witnesses(&self) -> impl Iterator<Item = &GroundedBond> {
        self.components.iter().flat_map(|c| c.grounded.iter())
    }

    /// The ungrounded bond behind a nonplanar verdict.
    pub fn certificate(&self) -> Option<&UngroundedBond> {
        self.components.iter().find_map(|c| c.ungrounded.as_ref())
    }

    /// Whether the oracle, if it ran, disagrees with the verdict.
    pub fn oracle_disagrees(&self) -> bool {
        self.oracle_verdict.is_some_and(|o| o != self.verdict.is_planar())
    }

    /// Re-checks every witness and re-exhausts the certificate against `g`.
    pub fn verify(&self, g: &Graph, max_edges: usize) -> Result<()> {
        for component in &self.components {
            let view = g.induced(component.vertices);
            for grounded in &component.grounded {
                ensure_bond(&view, &grounded.bond)?;
                let table = build_disparate_table(&view, &grounded.bond)?;
                if !verify_grounding(&table, &grounded.witness)? {
                    return Err(Error::Internal("reported witness fails verification".into()));
                }
            }
            if let Some(cert) = &component.ungrounded {
                ensure_bond(&view, &cert.bond)?;
                let table = build_disparate_table(&view, &cert.bond)?;
                if find_grounding(&table, max_edges)?.is_grounded() {
                    return Err(Error::Internal("reported certificate is grounded".into()));
                }
            }
            let expected = if component.ungrounded.is_some() {
                Verdict::Nonplanar
            } else {
                Verdict::Planar
            };
            if component.verdict != expected {
                return Err(Error::Internal("component verdict does not match its evidence".into()));
            }
        }
        let any_nonplanar = self.components.iter().any(|c| c.verdict == Verdict::Nonplanar);
        if self.verdict.is_planar() == any_nonplanar {
            return Err(Error::Internal("report verdict does not match its components".into()));
        }
        Ok(())
    }
}

fn ensure_bond(view: &SubgraphView<'_>, bond: &Bond) -> Result<()> {
    match Bond::from_side(view, bond.side_a()) {
        Some(b) if &b == bond => Ok(()),
        _ => Err(Error::Internal("reported bond is not a cocycle".into())),
    }
}

/// Runs the criterion on one connected view.
pub fn check_component(view: &SubgraphView<'_>, options: &CheckOptions) -> Result<ComponentReport> {
    if !is_connected(view) {
        return Err(Error::Disconnected);
    }
    let mut bonds = enumerate_bonds_with_limit(view, 4, options.max_vertices)?;
    bonds.sort_by_key(|b| (b.len(), b.side_a()));
    let big_bonds = bonds.len();

    let mut grounded = Vec::new();
    for bond in bonds {
        if !passes_filter(view, &bond, options.filter) {
            continue;
        }
        let table = build_disparate_table(view, &bond)?;
        let result = find_grounding(&table, options.max_edges)?;
        match result.witness {
            Some(witness) => grounded.push(GroundedBond { bond, witness }),
            None => {
                return Ok(ComponentReport {
                    vertices: view.vertices(),
                    verdict: Verdict::Nonplanar,
                    big_bonds,
                    grounded,
                    ungrounded: Some(UngroundedBond {
                        bond,
                        permutations_explored: result.permutations_explored,
                    }),
                });
            }
        }
    }
    Ok(ComponentReport {
        vertices: view.vertices(),
        verdict: Verdict::Planar,
        big_bonds,
        grounded,
        ungrounded: None,
    })
}

/// The criterion on a connected graph.
pub fn check_connected(g: &Graph, options: &CheckOptions) -> Result<PlanarityReport> {
    let component = check_component(&g.view(), options)?;
    Ok(PlanarityReport {
        verdict: component.verdict,
        components: vec![component],
        variant: options.filter,
        oracle_verdict: None,
    })
}

/// The criterion on any graph, component by component. Stops at the first
/// nonplanar component.
pub fn check(g: &Graph, options: &CheckOptions) -> Result<PlanarityReport> {
    let mut components = Vec::new();
    let mut verdict = Verdict::Planar;
    for vertices in g.connected_components() {
        let report = check_component(&g.induced(vertices), options)?;
        let stop = report.verdict == Verdict::Nonplanar;
        components.push(report);
        if stop {
            verdict = Verdict::Nonplanar;
            break;
        }
    }
    Ok(PlanarityReport { verdict, components, variant: options.filter, oracle_verdict: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn bond_of(g: &Graph, side_a: &[usize]) -> Bond {
        Bond::from_side(&g.view(), side_a.iter().copied().collect()).unwrap()
    }

    #[test]
    fn filter_examples() {
        let k5 = complete(5);
        let star = bond_of(&k5, &[0, 1, 2, 3]);
        assert!(!passes_filter(&k5.view(), &star, VariantFilter::AtLeastFive));
        assert!(!passes_filter(&k5.view(), &star, VariantFilter::BothSidesGe2));
        assert!(passes_filter(&k5.view(), &star, VariantFilter::CycleSide));
        assert!(passes_filter(&k5.view(), &star, VariantFilter::AllBig));

        let k4 = complete(4);
        let split = bond_of(&k4, &[0, 1]);
        assert!(passes_filter(&k4.view(), &split, VariantFilter::BothSidesGe2));
        assert!(!passes_filter(&k4.view(), &split, VariantFilter::CycleSide));
    }

    #[test]
    fn filter_names_round_trip() {
        for f in VariantFilter::ALL {
            assert_eq!(f.name().parse::<VariantFilter>().unwrap(), f);
        }
        assert!("nope".parse::<VariantFilter>().is_err());
    }

    #[test]
    fn cycle_is_vacuously_planar() {
        let report = check_connected(&cycle(4), &CheckOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Planar);
        assert_eq!(report.components[0].big_bonds, 0);
        assert_eq!(report.witnesses().count(), 0);
    }

    #[test]
    fn kuratowski_graphs_are_nonplanar() {
        for g in [k33(), complete(5)] {
            let report = check_connected(&g, &CheckOptions::default()).unwrap();
            assert_eq!(report.verdict, Verdict::Nonplanar);
            let cert = report.certificate().unwrap();
            assert!(cert.bond.is_big());
            report.verify(&g, DEFAULT_MAX_EDGES).unwrap();
        }
    }

    #[test]
    fn k5_minus_edge_grounds_every_big_bond() {
        let k5 = complete(5);
        let g = Graph::new(5, k5.edges()[1..].iter().copied()).unwrap();
        let report = check_connected(&g, &CheckOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Planar);
        assert_eq!(report.witnesses().count(), report.components[0].big_bonds);
        assert!(report.components[0].big_bonds > 0);
        report.verify(&g, DEFAULT_MAX_EDGES).unwrap();
    }

    #[test]
    fn disconnected_graphs() {
        let g = complete(4).disjoint_union(&complete(5)).unwrap();
        let report = check(&g, &CheckOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Nonplanar);
        assert_eq!(report.components.len(), 2);
        let cert = report.certificate().unwrap();
        assert!(cert.bond.side_a().union(cert.bond.side_b()).iter().all(|v| v >= 4));

        let empty = Graph::new(0, []).unwrap();
        assert_eq!(check(&empty, &CheckOptions::default()).unwrap().verdict, Verdict::Planar);

        let two_squares = cycle(4).disjoint_union(&cycle(4)).unwrap();
        assert_eq!(check(&two_squares, &CheckOptions::default()).unwrap().verdict, Verdict::Planar);

        let isolated = Graph::new(3, []).unwrap();
        assert_eq!(check(&isolated, &CheckOptions::default()).unwrap().verdict, Verdict::Planar);

        assert_eq!(
            check_connected(&two_squares, &CheckOptions::default()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn variants_agree_on_kuratowski_graphs() {
        for g in [k33(), complete(5), complete(6)] {
            for f in VariantFilter::ALL {
                let report = check_connected(&g, &CheckOptions::with_filter(f)).unwrap();
                assert_eq!(report.verdict, Verdict::Nonplanar, "{f}");
                assert!(passes_filter(&g.view(), &report.certificate().unwrap().bond, f));
            }
        }
    }

    #[test]
    fn tampered_report_fails_verification() {
        let g = complete(4);
        let mut report = check_connected(&g, &CheckOptions::default()).unwrap();
        report.verify(&g, DEFAULT_MAX_EDGES).unwrap();
        let grounded = &report.components[0].grounded[0];
        let table = build_disparate_table(&g.view(), &grounded.bond).unwrap();
        let ids = grounded.bond.edge_ids();
        // At most one of these two orders grounds the split bond.
        let bad = vec![ids[0], ids[2], ids[1], ids[3]];
        let bad = if verify_grounding(&table, &bad).unwrap() { vec![ids[0], ids[1], ids[2], ids[3]] } else { bad };
        assert!(!verify_grounding(&table, &bad).unwrap());
        let mut tampered = report.clone();
        tampered.components[0].grounded[0].witness = bad;
        assert!(tampered.verify(&g, DEFAULT_MAX_EDGES).is_err());
        report.verdict = Verdict::Nonplanar;
        assert!(report.verify(&g, DEFAULT_MAX_EDGES).is_err());
    }
}
