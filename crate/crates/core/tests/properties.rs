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

use cocycle_planarity::bonds::{enumerate_bonds, is_cocycle, is_cutset};
use cocycle_planarity::criterion::{check, CheckOptions};
use cocycle_planarity::graph::{parse_edge_list, parse_vertex_list};
use cocycle_planarity::grounding::{find_grounding, verify_grounding};
use cocycle_planarity::oracle::oracle_is_planar;
use cocycle_planarity::separation::build_disparate_table;
use cocycle_planarity::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_list_round_trip(g in graph(10)) {
        let text = g.to_edge_list();
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn vertex_list_round_trip(g in graph(10), mask in any::<u16>()) {
        let chosen: Vec<usize> = (0..g.vertex_count()).filter(|v| mask & (1 << v) != 0).collect();
        let text = chosen.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(",");
        let set = parse_vertex_list(&g, &text).unwrap();
        prop_assert_eq!(set.iter().collect::<Vec<_>>(), chosen);
    }

    #[test]
    fn bonds_are_minimal_cuts(g in connected_graph(7)) {
        let view = g.view();
        for bond in enumerate_bonds(&view, 1).unwrap() {
            prop_assert!(is_cutset(&view, bond.edge_ids()).unwrap());
            let again = is_cocycle(&view, bond.edge_ids()).unwrap();
            prop_assert_eq!(again.as_ref(), Some(&bond));
            if bond.len() == 1 {
                continue;
            }
            for skip in 0..bond.len() {
                let mut fewer = bond.edge_ids().to_vec();
                fewer.remove(skip);
                prop_assert!(!is_cutset(&view, &fewer).unwrap());
            }
        }
    }

    #[test]
    fn reports_verify_and_match_the_oracle(g in graph(7)) {
        let report = check(&g, &CheckOptions::default()).unwrap();
        report.verify(&g, 12).unwrap();
        let planar = g
            .connected_components()
            .into_iter()
            .all(|c| {
                let (sub, _) = g.extract(c);
                oracle_is_planar(&sub).unwrap()
            });
        prop_assert_eq!(report.verdict.is_planar(), planar);
    }

    #[test]
    fn search_witnesses_verify(g in connected_graph(7)) {
        let view = g.view();
        for bond in enumerate_bonds(&view, 4).unwrap() {
            let table = build_disparate_table(&view, &bond).unwrap();
            let result = find_grounding(&table, 12).unwrap();
            if let Some(w) = result.witness {
                prop_assert!(verify_grounding(&table, &w).unwrap());
            }
        }
    }
}
