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

//! Cutsets and cocycles (bonds) of connected graphs.
//!
//! A bond is stored together with its two sides. Side A always holds the
//! smallest vertex of the host view, and every bond edge is oriented as
//! `(u, v)` with `u` on side A.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeSet, SubgraphView, VertexSet};

/// Default vertex ceiling for bipartition enumeration.
pub const DEFAULT_BOND_VERTEX_LIMIT: usize = 24;

/// Views smaller than this are enumerated on the calling thread.
const PARALLEL_THRESHOLD: usize = 16;

/// A cocycle of a connected host view with its two sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bond {
    edge_ids: Vec<usize>,
    side_a: VertexSet,
    side_b: VertexSet,
    oriented: Vec<(usize, usize)>,
}

impl Bond {
    /// The bond separating `side_a` from the rest of `view`, if both sides
    /// are nonempty and induce connected subgraphs of the view.
    pub fn from_side(view: &SubgraphView<'_>, side_a: VertexSet) -> Option<Bond> {
        let side_a = side_a.intersection(view.vertices());
        let side_b = view.vertices().difference(side_a);
        if side_a.is_empty() || side_b.is_empty() {
            return None;
        }
        if !is_connected(&view.induced(side_a)) || !is_connected(&view.induced(side_b)) {
            return None;
        }
        Some(Self::crossing(view, side_a, side_b))
    }

    fn crossing(view: &SubgraphView<'_>, side_a: VertexSet, side_b: VertexSet) -> Bond {
        let (side_a, side_b) = if side_a.min() < side_b.min() {
            (side_a, side_b)
        } else {
            (side_b, side_a)
        };
        let parent = view.parent();
        let mut edge_ids = Vec::new();
        let mut oriented = Vec::new();
        for e in view.edges().iter() {
            let (x, y) = parent.endpoints(e);
            if side_a.contains(x) && side_b.contains(y) {
                edge_ids.push(e);
                oriented.push((x, y));
            } else if side_a.contains(y) && side_b.contains(x) {
                edge_ids.push(e);
                oriented.push((y, x));
            }
        }
        Bond { edge_ids, side_a, side_b, oriented }
    }

    /// Edge ids in ascending order.
    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn is_big(&self) -> bool {
        self.len() >= 4
    }

    pub fn side_a(&self) -> VertexSet {
        self.side_a
    }

    pub fn side_b(&self) -> VertexSet {
        self.side_b
    }

    /// `(u, v)` per edge, parallel to [`Bond::edge_ids`], `u` on side A.
    pub fn oriented_edges(&self) -> &[(usize, usize)] {
        &self.oriented
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edge_ids.binary_search(&e).is_ok()
    }

    /// Position of `e` within [`Bond::edge_ids`].
    pub fn position(&self, e: usize) -> Option<usize> {
        self.edge_ids.binary_search(&e).ok()
    }

    /// The oriented endpoints of `e`.
    pub fn orientation(&self, e: usize) -> Option<(usize, usize)> {
        self.position(e).map(|i| self.oriented[i])
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edge_ids.iter().copied().collect()
    }
}

fn check_edges(view: &SubgraphView<'_>, s: &[usize]) -> Result<EdgeSet> {
    if !is_connected(view) {
        return Err(Error::Disconnected);
    }
    if s.is_empty() {
        return Err(Error::Precondition("edge set is empty".into()));
    }
    for &e in s {
        if !view.contains_edge(e) {
            return Err(Error::EdgeOutOfRange(e));
        }
    }
    Ok(s.iter().copied().collect())
}

/// Whether deleting `s` disconnects the (connected) view.
pub fn is_cutset(view: &SubgraphView<'_>, s: &[usize]) -> Result<bool> {
    let removed = check_edges(view, s)?;
    Ok(!is_connected(&view.without_edges(&removed)))
}

/// Returns the oriented bond when `s` is a cocycle of the view.
///
/// Uses the two-sided characterization: deleting `s` leaves exactly two
/// components and every edge of `s` joins them.
pub fn is_cocycle(view: &SubgraphView<'_>, s: &[usize]) -> Result<Option<Bond>> {
    let removed = check_edges(view, s)?;
    let rest = view.without_edges(&removed);
    let components = crate::graph::connected_components(&rest);
    if components.len() != 2 {
        return Ok(None);
    }
    let (a, b) = (components[0], components[1]);
    let parent = view.parent();
    let all_cross = removed.iter().all(|e| {
        let (x, y) = parent.endpoints(e);
        (a.contains(x) && b.contains(y)) || (a.contains(y) && b.contains(x))
    });
    if !all_cross {
        return Ok(None);
    }
    Ok(Some(Bond::crossing(view, a, b)))
}

/// All bonds of at least `min_size` edges, with the default vertex limit.
pub fn enumerate_bonds(view: &SubgraphView<'_>, min_size: usize) -> Result<Vec<Bond>> {
    enumerate_bonds_with_limit(view, min_size, DEFAULT_BOND_VERTEX_LIMIT)
}

/// All bonds of at least `min_size` edges.
///
/// Walks every bipartition with the smallest vertex fixed on side A and
/// keeps those whose sides are both connected. Output follows the
/// bipartition counter, so it is deterministic.
pub fn enumerate_bonds_with_limit(
    view: &SubgraphView<'_>,
    min_size: usize,
    max_vertices: usize,
) -> Result<Vec<Bond>> {
    if !is_connected(view) {
        return Err(Error::Disconnected);
    }
    let k = view.vertex_count();
    if k > max_vertices {
        return Err(Error::VertexLimit { count: k, limit: max_vertices });
    }
    if k < 2 {
        return Ok(Vec::new());
    }
    let vertices: Vec<usize> = view.vertices().iter().collect();
    let anchor = vertices[0];
    let rest = &vertices[1..];

    let candidate = |mask: u64| -> Option<Bond> {
        let mut side_b = VertexSet::EMPTY;
        for (i, &v) in rest.iter().enumerate() {
            if mask & (1 << i) != 0 {
                side_b.insert(v);
            }
        }
        let side_a = view.vertices().difference(side_b);
        debug_assert!(side_a.contains(anchor));
        Bond::from_side(view, side_a).filter(|b| b.len() >= min_size)
    };

    let count = 1u64 << rest.len();
    let bonds = if k < PARALLEL_THRESHOLD {
        (1..count).filter_map(candidate).collect()
    } else {
        (1..count).into_par_iter().filter_map(candidate).collect()
    };
    Ok(bonds)
}

/// Bonds with at least four edges.
pub fn big_bonds(view: &SubgraphView<'_>) -> Result<Vec<Bond>> {
    enumerate_bonds(view, 4)
}
