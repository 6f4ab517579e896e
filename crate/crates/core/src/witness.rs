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

//! Nonplanarity certificates.
//!
//! The pipeline finds a subdivision of K5 or K3,3 inside the graph, lifts a
//! known ungrounded big bond of the model graph onto the subdivision, and
//! extends that bond to a bond of the whole graph. Extension preserves
//! ungroundedness because each side only grows, so disjoint paths survive.
//! Every stage is re-verified rather than trusted.

use crate::bonds::{enumerate_bonds_with_limit, Bond};
use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeSet, Graph, SubgraphView, VertexSet};
use crate::grounding::{find_grounding, DEFAULT_MAX_EDGES};
use crate::oracle::oracle_is_planar;
use crate::separation::build_disparate_table;

/// Default vertex ceiling for the brute-force subdivision search.
pub const DEFAULT_KURATOWSKI_VERTEX_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KuratowskiKind {
    K33,
    K5,
}

impl KuratowskiKind {
    pub fn branch_count(self) -> usize {
        match self {
            KuratowskiKind::K33 => 6,
            KuratowskiKind::K5 => 5,
        }
    }

    /// Model edges in a fixed order. K3,3 has parts `{0, 1, 2}` and
    /// `{3, 4, 5}`.
    pub fn model_edges(self) -> Vec<(usize, usize)> {
        match self {
            KuratowskiKind::K33 => (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect(),
            KuratowskiKind::K5 => (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect(),
        }
    }

    /// The model graph itself.
    pub fn model_graph(self) -> Graph {
        Graph::new(self.branch_count(), self.model_edges()).expect("model graph")
    }
}

/// A subgraph homeomorphic to K5 or K3,3.
#[derive(Clone, Debug)]
pub struct KuratowskiSubdivision<'g> {
    pub kind: KuratowskiKind,
    /// Host vertex for each model vertex.
    pub branch_vertices: Vec<usize>,
    /// One vertex path per model edge, in [`KuratowskiKind::model_edges`]
    /// order, running from the first model endpoint to the second.
    pub branch_paths: Vec<Vec<usize>>,
    pub as_subgraph: SubgraphView<'g>,
}

impl KuratowskiSubdivision<'_> {
    /// Checks branch vertices, path endpoints and internal disjointness.
    pub fn validate(&self) -> Result<()> {
        let g = self.as_subgraph.parent();
        let fail = |msg: &str| Err(Error::Internal(format!("invalid subdivision: {msg}")));
        let branch: VertexSet = self.branch_vertices.iter().copied().collect();
        if branch.len() != self.kind.branch_count() {
            return fail("branch vertices are not distinct");
        }
        let model = self.kind.model_edges();
        if self.branch_paths.len() != model.len() {
            return fail("wrong number of paths");
        }
        let mut internal = VertexSet::EMPTY;
        for (&(p, q), path) in model.iter().zip(&self.branch_paths) {
            if path.len() < 2
                || path[0] != self.branch_vertices[p]
                || path[path.len() - 1] != self.branch_vertices[q]
            {
                return fail("path endpoints do not match the model edge");
            }
            for w in path.windows(2) {
                if g.edge_between(w[0], w[1]).is_none() {
                    return fail("path uses a missing edge");
                }
            }
            for &v in &path[1..path.len() - 1] {
                if branch.contains(v) || internal.contains(v) {
                    return fail("paths are not internally disjoint");
                }
                internal.insert(v);
            }
        }
        Ok(())
    }

    /// Host edge ids along the path of model edge `index`.
    pub fn path_edges(&self, index: usize) -> Vec<usize> {
        let g = self.as_subgraph.parent();
        self.branch_paths[index]
            .windows(2)
            .map(|w| g.edge_between(w[0], w[1]).expect("validated path"))
            .collect()
    }
}

fn build_subdivision<'g>(
    g: &'g Graph,
    kind: KuratowskiKind,
    branch_vertices: Vec<usize>,
    branch_paths: Vec<Vec<usize>>,
) -> Result<KuratowskiSubdivision<'g>> {
    let mut vertices = VertexSet::EMPTY;
    let mut edges = EdgeSet::new();
    for path in &branch_paths {
        for &v in path {
            vertices.insert(v);
        }
        for w in path.windows(2) {
            edges.insert(g.edge_between(w[0], w[1]).ok_or(Error::Internal("path edge missing".into()))?);
        }
    }
    let as_subgraph = SubgraphView::new(g, vertices, edges)?;
    let sub = KuratowskiSubdivision { kind, branch_vertices, branch_paths, as_subgraph };
    sub.validate()?;
    Ok(sub)
}

/// Searches for a K5 subdivision, then a K3,3 subdivision, by brute force
/// over branch vertices and internally disjoint path systems.
///
/// Planar graphs (per the oracle) return `None` without searching.
pub fn find_kuratowski(g: &Graph, max_vertices: usize) -> Result<Option<KuratowskiSubdivision<'_>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(Error::VertexLimit { count: n, limit: max_vertices });
    }
    match oracle_is_planar(g) {
        Ok(true) => return Ok(None),
        Ok(false) => {}
        Err(e) if e.is_budget() => {}
        Err(e) => return Err(e),
    }

    let k5_candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    for chosen in combinations(&k5_candidates, 5) {
        if let Some(paths) = route_model(g, KuratowskiKind::K5, &chosen) {
            return build_subdivision(g, KuratowskiKind::K5, chosen, paths).map(Some);
        }
    }

    let k33_candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    for chosen in combinations(&k33_candidates, 6) {
        // The first part always holds the smallest chosen vertex.
        for others in combinations(&chosen[1..], 2) {
            let left = [chosen[0], others[0], others[1]];
            let right: Vec<usize> = chosen.iter().copied().filter(|v| !left.contains(v)).collect();
            let branch: Vec<usize> = left.iter().copied().chain(right).collect();
            if let Some(paths) = route_model(g, KuratowskiKind::K33, &branch) {
                return build_subdivision(g, KuratowskiKind::K33, branch, paths).map(Some);
            }
        }
    }
    Ok(None)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Internally disjoint paths realizing every model edge between the given
/// branch vertices, if they exist.
fn route_model(g: &Graph, kind: KuratowskiKind, branch: &[usize]) -> Option<Vec<Vec<usize>>> {
    let model = kind.model_edges();
    let blocked: VertexSet = branch.iter().copied().collect();
    let mut paths = Vec::with_capacity(model.len());
    if route_from(g, branch, &model, 0, blocked, &mut paths) {
        Some(paths)
    } else {
        None
    }
}

fn route_from(
    g: &Graph,
    branch: &[usize],
    model: &[(usize, usize)],
    index: usize,
    used: VertexSet,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let Some(&(p, q)) = model.get(index) else {
        return true;
    };
    let (s, t) = (branch[p], branch[q]);
    let mut path = vec![s];
    route_path(g, t, used, &mut path, &mut |path, internal| {
        paths.push(path.to_vec());
        if route_from(g, branch, model, index + 1, used.union(internal), paths) {
            return true;
        }
        paths.pop();
        false
    })
}

/// Depth-first over simple paths from `path.last()` to `t` whose internal
/// vertices avoid `used`; stops once `accept` returns true.
fn route_path(
    g: &Graph,
    t: usize,
    used: VertexSet,
    path: &mut Vec<usize>,
    accept: &mut dyn FnMut(&[usize], VertexSet) -> bool,
) -> bool {
    let at = *path.last().expect("nonempty path");
    let on_path: VertexSet = path.iter().copied().collect();
    for next in g.neighbors(at).iter() {
        if next == t {
            path.push(t);
            let internal: VertexSet = path[1..path.len() - 1].iter().copied().collect();
            let done = accept(path, internal);
            path.pop();
            if done {
                return true;
            }
        } else if !used.contains(next) && !on_path.contains(next) {
            path.push(next);
            let done = route_path(g, t, used, path, accept);
            path.pop();
            if done {
                return true;
            }
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CocycleKind {
    K33Type1,
    K33Type2,
    K5Type1,
    K5Type2,
}

/// One of the four kinds of big bonds of K3,3 and K5, on the model graph
/// of [`KuratowskiKind`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalCocycle {
    pub kind: CocycleKind,
    /// `(u, v)` with `u` on the model's side A, listed as `x1, x2, ...`.
    pub model_edges: Vec<(usize, usize)>,
    pub model_side_a: VertexSet,
}

impl CanonicalCocycle {
    pub fn new(kind: CocycleKind) -> Self {
        let (edges, side_a): (Vec<(usize, usize)>, &[usize]) = match kind {
            // Side A is a path 3 - 0 - 4; x1..x4 join {3, 4} to {1, 2} and
            // x5 joins the path's center to 5.
            CocycleKind::K33Type1 => (vec![(3, 1), (3, 2), (4, 1), (4, 2), (0, 5)], &[0, 3, 4]),
            // Side A is the 4-cycle 0 - 3 - 1 - 4, side B the edge 5 - 2.
            CocycleKind::K33Type2 => (vec![(0, 5), (3, 2), (1, 5), (4, 2)], &[0, 1, 3, 4]),
            // Side A is the triangle 0 1 2, side B the edge 3 4.
            CocycleKind::K5Type1 => {
                (vec![(0, 3), (1, 3), (1, 4), (2, 3), (2, 4), (0, 4)], &[0, 1, 2])
            }
            // Side B is the single vertex 4.
            CocycleKind::K5Type2 => (vec![(0, 4), (1, 4), (2, 4), (3, 4)], &[0, 1, 2, 3]),
        };
        CanonicalCocycle { kind, model_edges: edges, model_side_a: side_a.iter().copied().collect() }
    }

    pub fn subdivision_kind(&self) -> KuratowskiKind {
        match self.kind {
            CocycleKind::K33Type1 | CocycleKind::K33Type2 => KuratowskiKind::K33,
            CocycleKind::K5Type1 | CocycleKind::K5Type2 => KuratowskiKind::K5,
        }
    }

    /// The four-edge kind for a subdivision.
    pub fn smallest_for(kind: KuratowskiKind) -> Self {
        match kind {
            KuratowskiKind::K33 => CanonicalCocycle::new(CocycleKind::K33Type2),
            KuratowskiKind::K5 => CanonicalCocycle::new(CocycleKind::K5Type2),
        }
    }
}

fn is_ungrounded(host: &SubgraphView<'_>, bond: &Bond, max_edges: usize) -> Result<bool> {
    let table = build_disparate_table(host, bond)?;
    Ok(!find_grounding(&table, max_edges)?.is_grounded())
}

/// Transfers a canonical bond of the model graph onto the subdivision.
///
/// Each crossing model edge contributes the first edge of its path from the
/// side-A end; all internal path vertices of crossing edges join side B.
/// The result is checked to be an ungrounded bond of the subdivision; if it
/// is not, the first ungrounded big bond of the subdivision is returned.
pub fn lift_canonical_cocycle(sub: &KuratowskiSubdivision<'_>, cocycle: &CanonicalCocycle) -> Result<Bond> {
    if cocycle.subdivision_kind() != sub.kind {
        return Err(Error::KindMismatch);
    }
    let g = sub.as_subgraph.parent();
    let model = sub.kind.model_edges();
    let in_a = |p: usize| cocycle.model_side_a.contains(p);

    let mut side_a: VertexSet = (0..sub.kind.branch_count())
        .filter(|&p| in_a(p))
        .map(|p| sub.branch_vertices[p])
        .collect();
    let mut chosen = Vec::new();
    for (index, &(p, q)) in model.iter().enumerate() {
        let path = &sub.branch_paths[index];
        let internal = &path[1..path.len() - 1];
        match (in_a(p), in_a(q)) {
            (true, true) => side_a = side_a.union(internal.iter().copied().collect()),
            (false, false) => {}
            (true, false) => chosen.push(g.edge_between(path[0], path[1]).expect("path edge")),
            (false, true) => {
                let last = path.len() - 1;
                chosen.push(g.edge_between(path[last], path[last - 1]).expect("path edge"));
            }
        }
    }
    chosen.sort_unstable();

    let host = &sub.as_subgraph;
    if let Some(bond) = Bond::from_side(host, side_a) {
        if bond.edge_ids() == chosen.as_slice() && is_ungrounded(host, &bond, DEFAULT_MAX_EDGES)? {
            return Ok(bond);
        }
    }

    // Fallback: first ungrounded big bond of the subdivision.
    let limit = host.vertex_count();
    let mut bonds = enumerate_bonds_with_limit(host, 4, limit)?;
    bonds.sort_by_key(|b| (b.len(), b.side_a()));
    for bond in bonds {
        match is_ungrounded(host, &bond, DEFAULT_MAX_EDGES) {
            Ok(true) => return Ok(bond),
            Ok(false) => {}
            Err(e) if e.is_budget() => {}
            Err(e) => return Err(e),
        }
    }
    Err(Error::Internal("subdivision has no ungrounded big bond".into()))
}

/// Extends a bond `d` of a connected subgraph `h` to a bond of `g`
/// containing it.
///
/// Starts from the subgraph of `g` induced on `h`'s vertices, where the
/// crossing edges of `d`'s sides form a bond, then adds outside vertices
/// one at a time, always the smallest one adjacent to what is already
/// placed. A vertex touching only one side joins it; a vertex touching both
/// joins side B and its edges to side A join the bond.
pub fn extend_cocycle(g: &Graph, h: &SubgraphView<'_>, d: &Bond) -> Result<Bond> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !std::ptr::eq(h.parent(), g) && h.parent() != g {
        return Err(Error::Precondition("subgraph does not belong to the graph".into()));
    }
    if !is_connected(h) {
        return Err(Error::Disconnected);
    }
    match Bond::from_side(h, d.side_a()) {
        Some(b) if &b == d => {}
        _ => return Err(Error::NotACocycle),
    }

    let mut near = d.side_a();
    let mut far = d.side_b();
    loop {
        let placed = near.union(far);
        let next = g
            .vertices()
            .difference(placed)
            .iter()
            .find(|&u| !g.neighbors(u).intersection(placed).is_empty());
        let Some(u) = next else { break };
        let touches_near = !g.neighbors(u).intersection(near).is_empty();
        let touches_far = !g.neighbors(u).intersection(far).is_empty();
        if touches_far {
            far.insert(u);
        } else {
            debug_assert!(touches_near);
            near.insert(u);
        }
    }
    if near.union(far) != g.vertices() {
        return Err(Error::Internal("extension did not reach every vertex".into()));
    }

    let c = Bond::from_side(&g.view(), near)
        .ok_or_else(|| Error::Internal("extended edge set is not a cocycle".into()))?;
    if !d.edge_ids().iter().all(|&e| c.contains_edge(e)) {
        return Err(Error::Internal("extended cocycle does not contain the original".into()));
    }
    Ok(c)
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { max_vertices: DEFAULT_KURATOWSKI_VERTEX_LIMIT, max_edges: DEFAULT_MAX_EDGES }
    }
}

/// An ungrounded big bond of a nonplanar graph and how it was obtained.
#[derive(Clone, Debug)]
pub struct NonplanarCertificate<'g> {
    pub subdivision: KuratowskiSubdivision<'g>,
    /// The bond of the subdivision that was extended.
    pub lifted: Bond,
    pub bond: Bond,
    /// Orderings exhausted when re-verifying `bond`.
    pub permutations_explored: u64,
}

/// Builds and verifies an ungrounded big bond of `g`, or `None` when `g` is
/// planar.
pub fn certify_nonplanar<'g>(
    g: &'g Graph,
    options: &CertifyOptions,
) -> Result<Option<NonplanarCertificate<'g>>> {
    let Some(subdivision) = find_kuratowski(g, options.max_vertices)? else {
        return Ok(None);
    };
    let lifted = lift_canonical_cocycle(&subdivision, &CanonicalCocycle::smallest_for(subdivision.kind))?;
    let bond = extend_cocycle(g, &subdivision.as_subgraph, &lifted)?;
    if !bond.is_big() {
        return Err(Error::Internal("certificate bond is not big".into()));
    }
    let table = build_disparate_table(&g.view(), &bond)?;
    let result = find_grounding(&table, options.max_edges)?;
    if result.is_grounded() {
        return Err(Error::Internal("certificate bond is grounded".into()));
    }
    Ok(Some(NonplanarCertificate {
        subdivision,
        lifted,
        bond,
        permutations_explored: result.permutations_explored,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{complete, complete_bipartite, subdivide_all};

    fn k33() -> Graph {
        complete_bipartite(3, 3)
    }

    fn ungrounded(g: &Graph, bond: &Bond) -> bool {
        let table = build_disparate_table(&g.view(), bond).unwrap();
        !find_grounding(&table, DEFAULT_MAX_EDGES).unwrap().is_grounded()
    }

    #[test]
    fn canonical_cocycles_are_model_bonds() {
        for kind in [CocycleKind::K33Type1, CocycleKind::K33Type2, CocycleKind::K5Type1, CocycleKind::K5Type2] {
            let c = CanonicalCocycle::new(kind);
            let model = c.subdivision_kind().model_graph();
            let bond = Bond::from_side(&model.view(), c.model_side_a).expect("bond");
            let mut expected: Vec<usize> =
                c.model_edges.iter().map(|&(u, v)| model.edge_between(u, v).unwrap()).collect();
            expected.sort_unstable();
            assert_eq!(bond.edge_ids(), expected.as_slice(), "{kind:?}");
            for &(u, v) in &c.model_edges {
                assert!(c.model_side_a.contains(u) && !c.model_side_a.contains(v));
            }
            assert!(ungrounded(&model, &bond), "{kind:?}");
        }
    }

    #[test]
    fn finds_identity_subdivisions() {
        let k5 = complete(5);
        let sub = find_kuratowski(&k5, 12).unwrap().unwrap();
        assert_eq!(sub.kind, KuratowskiKind::K5);
        assert_eq!(sub.branch_vertices, vec![0, 1, 2, 3, 4]);
        assert!(sub.branch_paths.iter().all(|p| p.len() == 2));

        let g = k33();
        let sub = find_kuratowski(&g, 12).unwrap().unwrap();
        assert_eq!(sub.kind, KuratowskiKind::K33);
        assert_eq!(sub.as_subgraph.edge_count(), 9);
    }

    #[test]
    fn finds_subdivided_edges() {
        let g = k33().subdivide_edge(0).unwrap();
        let sub = find_kuratowski(&g, 12).unwrap().unwrap();
        sub.validate().unwrap();
        assert_eq!(sub.kind, KuratowskiKind::K33);
        assert_eq!(sub.as_subgraph.vertex_count(), 7);
        assert_eq!(sub.branch_paths.iter().filter(|p| p.len() == 3).count(), 1);
    }

    #[test]
    fn planar_graphs_have_no_subdivision() {
        assert!(find_kuratowski(&complete(4), 12).unwrap().is_none());
        let two = Graph::new(2, []).unwrap();
        assert_eq!(find_kuratowski(&two, 12).unwrap_err(), Error::Disconnected);
        assert!(matches!(find_kuratowski(&complete(6), 5), Err(Error::VertexLimit { .. })));
    }

    #[test]
    fn lifting_the_identity_gives_the_model_bond() {
        let g = k33();
        let sub = find_kuratowski(&g, 12).unwrap().unwrap();
        let c = CanonicalCocycle::smallest_for(KuratowskiKind::K33);
        let bond = lift_canonical_cocycle(&sub, &c).unwrap();
        assert_eq!(bond.len(), 4);
        assert_eq!(bond.side_a(), c.model_side_a);

        let k5 = complete(5);
        let sub = find_kuratowski(&k5, 12).unwrap().unwrap();
        let bond = lift_canonical_cocycle(&sub, &CanonicalCocycle::smallest_for(KuratowskiKind::K5)).unwrap();
        assert_eq!(bond.side_b(), VertexSet::singleton(4));
        assert!(matches!(
            lift_canonical_cocycle(&sub, &CanonicalCocycle::new(CocycleKind::K33Type1)),
            Err(Error::KindMismatch)
        ));
    }

    #[test]
    fn lifting_through_subdivided_edges() {
        // Subdivide the model edge carrying x1 = (0, 5).
        let g0 = k33();
        let g = g0.subdivide_edge(g0.edge_between(0, 5).unwrap()).unwrap();
        let sub = find_kuratowski(&g, 12).unwrap().unwrap();
        let bond = lift_canonical_cocycle(&sub, &CanonicalCocycle::smallest_for(KuratowskiKind::K33)).unwrap();
        assert_eq!(bond.len(), 4);
        let table = build_disparate_table(&sub.as_subgraph, &bond).unwrap();
        assert!(!find_grounding(&table, DEFAULT_MAX_EDGES).unwrap().is_grounded());
    }

    #[test]
    fn extension_of_a_spanning_subgraph_is_identity() {
        let g = k33();
        let sub = find_kuratowski(&g, 12).unwrap().unwrap();
        let d = lift_canonical_cocycle(&sub, &CanonicalCocycle::smallest_for(KuratowskiKind::K33)).unwrap();
        assert_eq!(extend_cocycle(&g, &sub.as_subgraph, &d).unwrap(), d);
    }

    #[test]
    fn extension_adds_edges_only_where_both_sides_meet() {
        let base = k33();
        let d = Bond::from_side(&base.view(), CanonicalCocycle::new(CocycleKind::K33Type2).model_side_a).unwrap();

        // Pendant on a side-A vertex: nothing new crosses.
        let mut edges = base.edges().to_vec();
        edges.push((0, 6));
        let g = Graph::new(7, edges.clone()).unwrap();
        let h = g.induced((0..6).collect());
        let c = extend_cocycle(&g, &h, &d).unwrap();
        assert_eq!(c.edge_ids(), d.edge_ids());

        // Adjacent to both sides: the new vertex joins B and its A edge joins.
        edges.push((6, 5));
        let g = Graph::new(7, edges).unwrap();
        let h = g.induced((0..6).collect());
        let c = extend_cocycle(&g, &h, &d).unwrap();
        assert_eq!(c.len(), 5);
        assert!(c.contains_edge(g.edge_between(0, 6).unwrap()));
        assert!(c.side_b().contains(6));
        assert!(ungrounded(&g, &c));
    }

    #[test]
    fn extension_rejects_non_bonds() {
        let g = k33();
        let d = Bond::from_side(&g.view(), VertexSet::singleton(0)).unwrap();
        let other = complete(4);
        let sub = find_kuratowski(&g, 12).unwrap().unwrap();
        assert!(extend_cocycle(&other, &sub.as_subgraph, &d).is_err());
        let mut cut = EdgeSet::new();
        cut.insert(g.edge_between(0, 3).unwrap());
        let h = g.view().without_edges(&cut);
        assert_eq!(extend_cocycle(&g, &h, &d), Err(Error::NotACocycle));
    }

    #[test]
    fn certificates_for_small_obstructions() {
        let opts = CertifyOptions::default();
        for g in [k33(), complete(5), complete(6)] {
            let cert = certify_nonplanar(&g, &opts).unwrap().unwrap();
            assert!(cert.bond.is_big());
            assert!(ungrounded(&g, &cert.bond));
            assert!(cert.lifted.edge_ids().len() >= 4);
        }
        assert!(certify_nonplanar(&complete(4), &opts).unwrap().is_none());

        let big = subdivide_all(&k33());
        let wide = CertifyOptions { max_vertices: 16, ..opts };
        let cert = certify_nonplanar(&big, &wide).unwrap().unwrap();
        assert_eq!(cert.subdivision.as_subgraph.vertex_count(), 15);
        assert!(ungrounded(&big, &cert.bond));
    }
}
