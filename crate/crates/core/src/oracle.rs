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

//! Reference planarity test by rotation systems.
//!
//! A connected graph is planar iff some rotation system (a cyclic order of
//! neighbors at every vertex) traces `f` faces with `n - m + f = 2`. The
//! search is brute force over all rotation systems and only uses the graph
//! primitives; it shares nothing with the cocycle machinery it checks.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest rotation space the oracle will walk.
pub const DEFAULT_ROTATION_BUDGET: u128 = 100_000_000;

/// A cyclic order of the neighbors of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(g: &Graph, order: Vec<Vec<usize>>) -> Result<Self> {
        if order.len() != g.vertex_count() {
            return Err(Error::Precondition("one cyclic order per vertex is required".into()));
        }
        for (v, cyc) in order.iter().enumerate() {
            let mut sorted = cyc.clone();
            sorted.sort_unstable();
            let expected: Vec<usize> = g.neighbors(v).iter().collect();
            if sorted != expected {
                return Err(Error::Precondition(format!(
                    "rotation at vertex {v} is not a permutation of its neighbors"
                )));
            }
        }
        Ok(RotationSystem { order })
    }

    /// Neighbors in ascending order at every vertex.
    pub fn ascending(g: &Graph) -> Self {
        let order = (0..g.vertex_count()).map(|v| g.neighbors(v).iter().collect()).collect();
        RotationSystem { order }
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }
}

/// `Some(false)` when `m > 3n - 6` rules planarity out; `None` otherwise.
pub fn euler_reject(g: &Graph) -> Option<bool> {
    let n = g.vertex_count();
    let m = g.edge_count();
    (n >= 3 && m + 6 > 3 * n).then_some(false)
}

/// Adjacency masks of a small graph, for minor tests.
type Masks = Vec<u64>;

fn masks_of(g: &Graph) -> Masks {
    (0..g.vertex_count()).map(|v| g.neighbors(v).bits()).collect()
}

fn has_k5_subgraph(adj: &Masks, alive: u64) -> bool {
    let deg4: Vec<usize> = (0..adj.len())
        .filter(|&v| alive & (1 << v) != 0 && (adj[v] & alive).count_ones() >= 4)
        .collect();
    // Grow cliques in ascending order.
    fn grow(adj: &Masks, cands: u64, size: usize) -> bool {
        if size == 5 {
            return true;
        }
        let mut rest = cands;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if grow(adj, rest & adj[v], size + 1) {
                return true;
            }
        }
        false
    }
    let cands = deg4.iter().fold(0u64, |acc, &v| acc | 1 << v);
    grow(adj, cands, 0)
}

fn has_k33_subgraph(adj: &Masks, alive: u64) -> bool {
    let deg3: Vec<usize> = (0..adj.len())
        .filter(|&v| alive & (1 << v) != 0 && (adj[v] & alive).count_ones() >= 3)
        .collect();
    let k = deg3.len();
    // Choose the three-vertex part; the other part is any three common
    // neighbors outside it.
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let part = 1u64 << deg3[a] | 1u64 << deg3[b] | 1u64 << deg3[c];
                let common = adj[deg3[a]] & adj[deg3[b]] & adj[deg3[c]] & alive & !part;
                if common.count_ones() >= 3 {
                    return true;
                }
            }
        }
    }
    false
}

/// Contracts edge `u v` into `u`.
fn contract(adj: &Masks, alive: u64, u: usize, v: usize) -> (Masks, u64) {
    let mut out = adj.clone();
    let alive = alive & !(1 << v);
    out[u] = (adj[u] | adj[v]) & alive & !(1 << u);
    for w in 0..adj.len() {
        if w != u && alive & (1 << w) != 0 && adj[w] & (1 << v) != 0 {
            out[w] = (out[w] & !(1 << v)) | 1 << u;
        }
    }
    out[v] = 0;
    (out, alive)
}

fn edge_count(adj: &Masks, alive: u64) -> usize {
    (0..adj.len())
        .filter(|&v| alive & (1 << v) != 0)
        .map(|v| (adj[v] & alive).count_ones() as usize)
        .sum::<usize>()
        / 2
}

fn minor_obstructed(adj: &Masks, alive: u64) -> bool {
    let n = alive.count_ones() as usize;
    (n >= 3 && edge_count(adj, alive) + 6 > 3 * n) || has_k5_subgraph(adj, alive) || has_k33_subgraph(adj, alive)
}

/// `Some(false)` when the graph, or the graph with one edge contracted,
/// breaks the Euler bound or contains K5 or K3,3 as a subgraph. Minors of
/// planar graphs are planar, so this only ever rules planarity out.
pub fn minor_reject(g: &Graph) -> Option<bool> {
    let adj = masks_of(g);
    let alive = g.vertices().bits();
    if minor_obstructed(&adj, alive) {
        return Some(false);
    }
    for &(u, v) in g.edges() {
        let (contracted, rest) = contract(&adj, alive, u, v);
        if minor_obstructed(&contracted, rest) {
            return Some(false);
        }
    }
    None
}

/// Face tracer over a fixed graph; reusable across rotation systems.
struct FaceTracer {
    n: usize,
    /// `offset[v] + i` is the dart leaving `v` towards `order[v][i]`.
    offset: Vec<usize>,
    /// `pos[v * n + u]` is the index of `u` in `order[v]`.
    pos: Vec<usize>,
    seen: Vec<bool>,
}

impl FaceTracer {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut offset = Vec::with_capacity(n + 1);
        let mut total = 0;
        for v in 0..n {
            offset.push(total);
            total += g.degree(v);
        }
        offset.push(total);
        FaceTracer { n, offset, pos: vec![0; n * n], seen: vec![false; total] }
    }

    fn load(&mut self, v: usize, cyc: &[usize]) {
        for (i, &u) in cyc.iter().enumerate() {
            self.pos[v * self.n + u] = i;
        }
    }

    fn count(&mut self, order: &[Vec<usize>]) -> usize {
        self.count_closed(order, VertexSet::full(self.n)).0
    }

    /// Faces that close using only rotations at `assigned` vertices, and
    /// how many darts they use. A walk that reaches an unassigned vertex is
    /// left open.
    fn count_closed(&mut self, order: &[Vec<usize>], assigned: VertexSet) -> (usize, usize) {
        self.seen.fill(false);
        let mut faces = 0;
        let mut darts = 0;
        for v in 0..self.n {
            for i in 0..order[v].len() {
                if self.seen[self.offset[v] + i] {
                    continue;
                }
                let (mut tail, mut idx) = (v, i);
                let mut length = 0;
                let closed = loop {
                    let dart = self.offset[tail] + idx;
                    if self.seen[dart] {
                        break tail == v && idx == i;
                    }
                    self.seen[dart] = true;
                    length += 1;
                    let head = order[tail][idx];
                    if !assigned.contains(head) {
                        break false;
                    }
                    let back = self.pos[head * self.n + tail];
                    idx = (back + 1) % order[head].len();
                    tail = head;
                };
                if closed {
                    faces += 1;
                    darts += length;
                }
            }
        }
        (faces, darts)
    }
}

/// Number of face orbits: each dart `(v, w)` is followed by `(w, x)` where
/// `x` comes right after `v` in the rotation at `w`. An edgeless graph has
/// the one face around its vertex.
pub fn count_faces(g: &Graph, rotation: &RotationSystem) -> usize {
    if g.edge_count() == 0 {
        return usize::from(g.vertex_count() > 0);
    }
    let mut tracer = FaceTracer::new(g);
    for (v, cyc) in rotation.order.iter().enumerate() {
        tracer.load(v, cyc);
    }
    tracer.count(&rotation.order)
}

/// Product of `(deg - 1)!` over all vertices.
pub fn rotation_space(g: &Graph) -> u128 {
    (0..g.vertex_count())
        .map(|v| (1..g.degree(v).max(1) as u128).product::<u128>())
        .fold(1u128, |acc, f| acc.saturating_mul(f))
}

/// All cyclic orders of `items`, as permutations with the first item fixed.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    fn permute(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            permute(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    if let Some((&first, tail)) = items.split_first() {
        permute(&mut vec![first], &mut tail.to_vec(), &mut out);
    }
    out
}

/// A rotation system with `n - m + f = 2`, if any, searching at most
/// `budget` systems.
pub fn find_planar_rotation(g: &Graph, budget: u128) -> Result<Option<RotationSystem>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if euler_reject(g).is_some() || minor_reject(g).is_some() {
        return Ok(None);
    }
    exhaustive_rotation_search(g, budget)
}

/// Rotation search with no shortcuts beyond face-count pruning.
fn exhaustive_rotation_search(g: &Graph, budget: u128) -> Result<Option<RotationSystem>> {
    let space = rotation_space(g);
    if space > budget {
        return Err(Error::OracleBudget { rotations: space, limit: budget });
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let target = 2 + m - n; // faces of a planar embedding; m >= n - 1

    let order: Vec<Vec<usize>> = RotationSystem::ascending(g).order;
    let mut tracer = FaceTracer::new(g);
    for (v, cyc) in order.iter().enumerate() {
        tracer.load(v, cyc);
    }
    if m == 0 {
        return Ok(Some(RotationSystem { order }));
    }

    let free = bfs_order(g)
        .into_iter()
        .filter(|&v| g.degree(v) >= 3)
        .collect::<Vec<_>>();
    let fixed: VertexSet = (0..n).filter(|&v| g.degree(v) < 3).collect();
    let choices: Vec<Vec<Vec<usize>>> = free.iter().map(|&v| cyclic_orders(&order[v])).collect();
    let mut search = RotationSearch { free, choices, target, darts: 2 * m, order, tracer };
    let found = search.assign(0, fixed);
    Ok(found.then_some(RotationSystem { order: search.order }))
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = VertexSet::singleton(0);
    let mut queue = std::collections::VecDeque::from([0]);
    let mut out = Vec::with_capacity(g.vertex_count());
    while let Some(v) = queue.pop_front() {
        out.push(v);
        for w in g.neighbors(v).difference(seen) {
            seen.insert(w);
            queue.push_back(w);
        }
    }
    out
}

/// Depth-first over rotation choices, vertex by vertex. A partial system is
/// abandoned when its closed faces plus one face per three remaining darts
/// cannot reach the planar face count; in a simple graph with at least two
/// edges every face walk has length three or more.
struct RotationSearch {
    free: Vec<usize>,
    choices: Vec<Vec<Vec<usize>>>,
    target: usize,
    darts: usize,
    order: Vec<Vec<usize>>,
    tracer: FaceTracer,
}

impl RotationSearch {
    fn assign(&mut self, level: usize, assigned: VertexSet) -> bool {
        if level == self.free.len() {
            return self.tracer.count(&self.order) == self.target;
        }
        let v = self.free[level];
        let assigned = assigned.union(VertexSet::singleton(v));
        for c in 0..self.choices[level].len() {
            self.order[v].clone_from(&self.choices[level][c]);
            self.tracer.load(v, &self.order[v]);
            let (faces, used) = self.tracer.count_closed(&self.order, assigned);
            if faces + (self.darts - used) / 3 < self.target {
                continue;
            }
            if self.assign(level + 1, assigned) {
                return true;
            }
        }
        false
    }
}

/// Planarity of a connected graph, with the default budget.
pub fn oracle_is_planar(g: &Graph) -> Result<bool> {
    oracle_is_planar_with_budget(g, DEFAULT_ROTATION_BUDGET)
}

pub fn oracle_is_planar_with_budget(g: &Graph, budget: u128) -> Result<bool> {
    Ok(find_planar_rotation(g, budget)?.is_some())
}
