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

//! Simple undirected graphs with dense vertex and edge ids, subgraph views
//! and the traversal primitives everything else is built on.
//!
//! Vertex sets are single-word bitsets, so graphs are limited to
//! [`MAX_VERTICES`] vertices.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids below [`MAX_VERTICES`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, .., n - 1}`
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over a [`VertexSet`].
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A set of edge ids; unlike vertex sets this is not bounded by one word.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn full(m: usize) -> Self {
        let mut set = EdgeSet { words: vec![u64::MAX; m / 64] };
        if !m.is_multiple_of(64) {
            set.words.push((1u64 << (m % 64)) - 1);
        }
        set
    }

    pub fn contains(&self, e: usize) -> bool {
        self.words
            .get(e / 64)
            .is_some_and(|w| w & (1u64 << (e % 64)) != 0)
    }

    pub fn insert(&mut self, e: usize) {
        let word = e / 64;
        if word >= self.words.len() {
            self.words.resize(word + 1, 0);
        }
        self.words[word] |= 1u64 << (e % 64);
    }

    pub fn remove(&mut self, e: usize) {
        if let Some(w) = self.words.get_mut(e / 64) {
            *w &= !(1u64 << (e % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            VertexIter(w).map(move |b| i * 64 + b)
        })
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = EdgeSet::new();
        for e in iter {
            set.insert(e);
        }
        set
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Endpoints with `u < v`, indexed by edge id.
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
    edge_index: HashMap<(usize, usize), usize>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse onto the
    /// first occurrence; loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { count: n, limit: MAX_VERTICES });
        }
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![VertexSet::EMPTY; n],
            edge_index: HashMap::new(),
            labels: None,
        };
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::Loop { line: 0, vertex: u.to_string() });
            }
            g.push_edge(u, v);
        }
        Ok(g)
    }

    fn push_edge(&mut self, u: usize, v: usize) {
        let key = (u.min(v), u.max(v));
        if self.edge_index.contains_key(&key) {
            return;
        }
        self.edge_index.insert(key, self.edges.len());
        self.edges.push(key);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Attaches external vertex names, one per vertex id.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e`, smaller id first.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of `v`; the decimal id when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks up a vertex by external name.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&v| v < self.n),
        }
    }

    /// The whole graph as a view.
    pub fn view(&self) -> SubgraphView<'_> {
        SubgraphView {
            parent: self,
            vertices: self.vertices(),
            edges: EdgeSet::full(self.edges.len()),
            adj: self.adj.clone(),
        }
    }

    /// The subgraph induced on `vertices`.
    pub fn induced(&self, vertices: VertexSet) -> SubgraphView<'_> {
        self.view().induced(vertices)
    }

    /// Replaces edge `e = {u, v}` by the path `u - w - v` through a new
    /// vertex `w = n`. The new edges take ids `e` (`u - w`) and `m` (`w - v`).
    pub fn subdivide_edge(&self, e: usize) -> Result<Graph> {
        if e >= self.edges.len() {
            return Err(Error::EdgeOutOfRange(e));
        }
        let w = self.n;
        let (u, v) = self.edges[e];
        let mut edges = self.edges.clone();
        edges[e] = (u, w);
        edges.push((w, v));
        let g = Graph::new(self.n + 1, edges)?;
        match &self.labels {
            Some(labels) => {
                let mut labels = labels.clone();
                let mut fresh = format!("{}~{}", labels[u], labels[v]);
                while labels.contains(&fresh) {
                    fresh.push('\'');
                }
                labels.push(fresh);
                g.with_labels(labels)
            }
            None => Ok(g),
        }
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges)
    }

    pub fn is_connected(&self) -> bool {
        is_connected(&self.view())
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        connected_components(&self.view())
    }

    /// The induced subgraph on `vertices` as a graph of its own, with the
    /// original id of each new vertex. Labels carry over.
    pub fn extract(&self, vertices: VertexSet) -> (Graph, Vec<usize>) {
        let original: Vec<usize> = vertices.intersection(self.vertices()).iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in original.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let mut g = Graph::new(original.len(), edges).expect("induced edges are valid");
        if let Some(labels) = &self.labels {
            g.labels = Some(original.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, original)
    }

    /// Serializes to the edge-list text format. Every vertex is declared on
    /// its own line first so that re-parsing reproduces the same ids.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n {
            out.push_str(&self.label(v));
            out.push('\n');
        }
        for &(u, v) in &self.edges {
            out.push_str(&self.label(u));
            out.push(' ');
            out.push_str(&self.label(v));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Parses the edge-list text format.
///
/// One edge per line as two whitespace-separated vertex tokens, or a single
/// token to declare an isolated vertex. `#` starts a comment. Tokens map to
/// dense ids in order of first appearance; repeated edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();

    let mut intern = |token: &str, line: usize| -> Result<usize> {
        if let Some(&id) = ids.get(token) {
            return Ok(id);
        }
        if labels.len() == MAX_VERTICES {
            return Err(Error::Parse {
                line,
                message: format!("more than {MAX_VERTICES} vertices"),
            });
        }
        let id = labels.len();
        ids.insert(token.to_owned(), id);
        labels.push(token.to_owned());
        Ok(id)
    };

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (None, _, _) => {}
            (Some(a), None, _) => {
                intern(a, line)?;
            }
            (Some(a), Some(b), None) => {
                if a == b {
                    return Err(Error::Loop { line, vertex: a.to_owned() });
                }
                let u = intern(a, line)?;
                let v = intern(b, line)?;
                edges.push((u, v));
            }
            (Some(_), Some(_), Some(extra)) => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected at most two vertex tokens, found `{extra}`"),
                });
            }
        }
    }

    let n = labels.len();
    Graph::new(n, edges)?.with_labels(labels)
}

/// Parses a list of vertex labels of `g`, separated by commas or
/// whitespace. Braces around the list are allowed; repeats are ignored.
pub fn parse_vertex_list(g: &Graph, text: &str) -> Result<VertexSet> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|rest| rest.strip_suffix('}'))
        .unwrap_or(trimmed);
    let mut set = VertexSet::EMPTY;
    for token in inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let v = g.vertex_by_label(token).ok_or_else(|| Error::UnknownVertex(token.to_owned()))?;
        set.insert(v);
    }
    Ok(set)
}

/// A subgraph of a parent graph: a vertex subset and an edge subset whose
/// endpoints lie in it. Edge and vertex ids are the parent's.
#[derive(Clone)]
pub struct SubgraphView<'g> {
    parent: &'g Graph,
    vertices: VertexSet,
    edges: EdgeSet,
    adj: Vec<VertexSet>,
}

impl<'g> SubgraphView<'g> {
    pub fn new(parent: &'g Graph, vertices: VertexSet, edges: EdgeSet) -> Result<Self> {
        if !vertices.is_subset(parent.vertices()) {
            let bad = vertices.difference(parent.vertices()).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange(bad));
        }
        let mut adj = vec![VertexSet::EMPTY; parent.n];
        for e in edges.iter() {
            if e >= parent.edge_count() {
                return Err(Error::EdgeOutOfRange(e));
            }
            let (u, v) = parent.edges[e];
            if !vertices.contains(u) || !vertices.contains(v) {
                return Err(Error::Precondition(format!(
                    "edge {e} has an endpoint outside the kept vertices"
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(SubgraphView { parent, vertices, edges, adj })
    }

    pub fn parent(&self) -> &'g Graph {
        self.parent
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.contains(e)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Restricts this view to `vertices`, keeping only the view's own edges
    /// between them.
    pub fn induced(&self, vertices: VertexSet) -> SubgraphView<'g> {
        let vertices = vertices.intersection(self.vertices);
        let edges: EdgeSet = self
            .edges
            .iter()
            .filter(|&e| {
                let (u, v) = self.parent.edges[e];
                vertices.contains(u) && vertices.contains(v)
            })
            .collect();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &nbrs)| {
                if vertices.contains(v) {
                    nbrs.intersection(vertices)
                } else {
                    VertexSet::EMPTY
                }
            })
            .collect();
        SubgraphView { parent: self.parent, vertices, edges, adj }
    }

    /// The same view with the given edges deleted; vertices stay.
    pub fn without_edges(&self, removed: &EdgeSet) -> SubgraphView<'g> {
        let mut edges = self.edges.clone();
        let mut adj = self.adj.clone();
        for e in removed.iter() {
            if edges.contains(e) {
                edges.remove(e);
                let (u, v) = self.parent.edges[e];
                adj[u].remove(v);
                adj[v].remove(u);
            }
        }
        SubgraphView { parent: self.parent, vertices: self.vertices, edges, adj }
    }

    /// Vertices reachable from `start` through `allowed` (which must contain
    /// `start` for anything but the empty set to come back).
    pub fn reachable_within(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let allowed = allowed.intersection(self.vertices);
        if !allowed.contains(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(allowed).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }
}

impl fmt::Debug for SubgraphView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgraphView")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Partition of the view's vertices into maximal connected sets, ordered
/// by smallest member.
pub fn connected_components(view: &SubgraphView<'_>) -> Vec<VertexSet> {
    let mut remaining = view.vertices();
    let mut components = Vec::new();
    while let Some(start) = remaining.min() {
        let component = view.reachable_within(start, remaining);
        remaining = remaining.difference(component);
        components.push(component);
    }
    components
}

/// Zero or one component. The empty graph counts as connected.
pub fn is_connected(view: &SubgraphView<'_>) -> bool {
    match view.vertices().min() {
        None => true,
        Some(start) => view.reachable_within(start, view.vertices()) == view.vertices(),
    }
}

/// Whether some `s`-`t` path avoids every vertex of `forbidden`.
pub fn exists_path_avoiding(
    view: &SubgraphView<'_>,
    s: usize,
    t: usize,
    forbidden: VertexSet,
) -> Result<bool> {
    for v in [s, t] {
        if !view.contains_vertex(v) {
            return Err(Error::Precondition(format!("vertex {v} is not in the view")));
        }
        if forbidden.contains(v) {
            return Err(Error::Precondition(format!("path endpoint {v} is forbidden")));
        }
    }
    let allowed = view.vertices().difference(forbidden);
    Ok(view.reachable_within(s, allowed).contains(t))
}
