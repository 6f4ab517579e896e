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

//! The disparate-pair relation between pairs of bond edges.
//!
//! For four distinct edges of a bond, `{x1, x3}` and `{x2, x4}` are
//! disparate on a side when that side joins the side-endpoints of `x1, x3`
//! and of `x2, x4` by two paths with no vertex in common. One-vertex paths
//! count, so coinciding endpoints are joined trivially.

use std::fmt;

use crate::bonds::Bond;
use crate::error::{Error, Result};
use crate::graph::{SubgraphView, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

/// Two disjoint unordered pairs of bond edges, as an unordered pair.
///
/// Stored canonically: each pair ascending, and the pair with the smaller
/// first element first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    odd: (usize, usize),
    even: (usize, usize),
}

impl Pairing {
    /// The pairing `{x1, x3} | {x2, x4}`.
    pub fn new(x1: usize, x3: usize, x2: usize, x4: usize) -> Result<Self> {
        let ids = [x1, x2, x3, x4];
        for i in 0..4 {
            for j in i + 1..4 {
                if ids[i] == ids[j] {
                    return Err(Error::Precondition(format!(
                        "pairing edges must be distinct, {} repeats",
                        ids[i]
                    )));
                }
            }
        }
        let p = (x1.min(x3), x1.max(x3));
        let q = (x2.min(x4), x2.max(x4));
        let (odd, even) = if p < q { (p, q) } else { (q, p) };
        Ok(Pairing { odd, even })
    }

    pub fn odd_pair(&self) -> (usize, usize) {
        self.odd
    }

    pub fn even_pair(&self) -> (usize, usize) {
        self.even
    }

    pub fn edges(&self) -> [usize; 4] {
        [self.odd.0, self.odd.1, self.even.0, self.even.1]
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{},{}}}|{{{},{}}}",
            self.odd.0, self.odd.1, self.even.0, self.even.1
        )
    }
}

fn side_set(bond: &Bond, side: Side) -> VertexSet {
    match side {
        Side::A => bond.side_a(),
        Side::B => bond.side_b(),
    }
}

fn side_endpoint(bond: &Bond, side: Side, e: usize) -> Result<usize> {
    let (u, v) = bond.orientation(e).ok_or(Error::EdgeNotInBond(e))?;
    Ok(match side {
        Side::A => u,
        Side::B => v,
    })
}

/// Whether the pairing is disparate on one side of `bond`, a bond of `host`.
pub fn disparate_on_side(
    host: &SubgraphView<'_>,
    bond: &Bond,
    side: Side,
    pairing: &Pairing,
) -> Result<bool> {
    let [a1, a2, b1, b2] = pairing.edges();
    let ends = [
        side_endpoint(bond, side, a1)?,
        side_endpoint(bond, side, a2)?,
        side_endpoint(bond, side, b1)?,
        side_endpoint(bond, side, b2)?,
    ];
    let view = host.induced(side_set(bond, side));
    Ok(disjoint_paths(&view, (ends[0], ends[1]), (ends[2], ends[3])))
}

/// Whether `view` has an `s1`-`t1` path and an `s2`-`t2` path sharing no
/// vertex.
///
/// Enumerates simple paths for one pair depth-first by ascending neighbor
/// id and, for each, asks whether the other pair is still connected once
/// the path's vertices are removed. A pair with coinciding endpoints is a
/// fixed one-vertex path, so it is taken as the enumerated side.
pub(crate) fn disjoint_paths(
    view: &SubgraphView<'_>,
    (s1, t1): (usize, usize),
    (s2, t2): (usize, usize),
) -> bool {
    let first = VertexSet::from_iter([s1, t1]);
    let second = VertexSet::from_iter([s2, t2]);
    if !first.intersection(second).is_empty() {
        return false;
    }
    let ((s1, t1), (s2, t2)) = if s2 == t2 && s1 != t1 {
        ((s2, t2), (s1, t1))
    } else {
        ((s1, t1), (s2, t2))
    };
    let blocked = VertexSet::from_iter([s2, t2]);
    let mut connects_second = |used: VertexSet| {
        let allowed = view.vertices().difference(used);
        view.reachable_within(s2, allowed).contains(t2)
    };
    if s1 == t1 {
        return connects_second(VertexSet::singleton(s1));
    }
    search_paths(view, s1, t1, VertexSet::singleton(s1), blocked, &mut connects_second)
}

fn search_paths(
    view: &SubgraphView<'_>,
    at: usize,
    target: usize,
    used: VertexSet,
    blocked: VertexSet,
    accept: &mut impl FnMut(VertexSet) -> bool,
) -> bool {
    for next in view.neighbors(at).difference(used).difference(blocked) {
        let used = used.union(VertexSet::singleton(next));
        if next == target {
            if accept(used) {
                return true;
            }
        } else if search_paths(view, next, target, used, blocked, accept) {
            return true;
        }
    }
    false
}

const DISPARATE_A: u8 = 1;
const DISPARATE_B: u8 = 2;
const PRESENT: u8 = 4;

/// The disparate relation for every pairing of a bond's edges, on both
/// sides.
#[derive(Clone)]
pub struct DisparateTable {
    edge_ids: Vec<usize>,
    pair_count: usize,
    flags: Vec<u8>,
}

impl DisparateTable {
    fn pair_index(&self, a: usize, b: usize) -> usize {
        let k = self.edge_ids.len();
        let (a, b) = (a.min(b), a.max(b));
        a * k - a * (a + 1) / 2 + (b - a - 1)
    }

    fn slot(&self, a: usize, c: usize, b: usize, d: usize) -> usize {
        self.pair_index(a, c) * self.pair_count + self.pair_index(b, d)
    }

    /// The bond's edge ids, ascending. Searches index edges by position in
    /// this list.
    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    /// Number of pairings stored: three per 4-subset of edges.
    pub fn len(&self) -> usize {
        let k = self.edge_ids.len();
        if k < 4 {
            return 0;
        }
        k * (k - 1) * (k - 2) * (k - 3) / 8
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn local(&self, e: usize) -> Option<usize> {
        self.edge_ids.binary_search(&e).ok()
    }

    /// `(disparate on A, disparate on B)` for a pairing of this bond.
    pub fn get(&self, pairing: &Pairing) -> Option<(bool, bool)> {
        let [a, c, b, d] = pairing.edges();
        let (a, c, b, d) = (self.local(a)?, self.local(c)?, self.local(b)?, self.local(d)?);
        let flags = self.flags[self.slot(a, c, b, d)];
        debug_assert!(flags & PRESENT != 0);
        Some((flags & DISPARATE_A != 0, flags & DISPARATE_B != 0))
    }

    /// Disparate on either side, by edge positions: `{a, c} | {b, d}`.
    #[inline]
    pub(crate) fn disparate_local(&self, a: usize, c: usize, b: usize, d: usize) -> bool {
        self.flags[self.slot(a, c, b, d)] & (DISPARATE_A | DISPARATE_B) != 0
    }

    pub(crate) fn pairing_local(&self, a: usize, c: usize, b: usize, d: usize) -> Pairing {
        let ids = &self.edge_ids;
        Pairing::new(ids[a], ids[c], ids[b], ids[d]).expect("distinct positions")
    }

    /// All entries in canonical pairing order.
    pub fn entries(&self) -> Vec<(Pairing, (bool, bool))> {
        let k = self.edge_ids.len();
        let mut out = Vec::with_capacity(self.len());
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    for d in c + 1..k {
                        for (p, q, r, s) in [(a, b, c, d), (a, c, b, d), (a, d, b, c)] {
                            let pairing = self.pairing_local(p, q, r, s);
                            let flags = self.flags[self.slot(p, q, r, s)];
                            out.push((pairing, (flags & DISPARATE_A != 0, flags & DISPARATE_B != 0)));
                        }
                    }
                }
            }
        }
        out.sort_by_key(|(p, _)| *p);
        out
    }
}

impl fmt::Debug for DisparateTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DisparateTable")
            .field("edge_ids", &self.edge_ids)
            .field("entries", &self.len())
            .finish()
    }
}

/// Computes every pairing of `bond` (a bond of `host`) on both sides.
pub fn build_disparate_table(host: &SubgraphView<'_>, bond: &Bond) -> Result<DisparateTable> {
    let k = bond.len();
    if k < 4 {
        return Err(Error::BondTooSmall(k));
    }
    let pair_count = k * (k - 1) / 2;
    let mut table = DisparateTable {
        edge_ids: bond.edge_ids().to_vec(),
        pair_count,
        flags: vec![0; pair_count * pair_count],
    };
    let view_a = host.induced(bond.side_a());
    let view_b = host.induced(bond.side_b());
    let ends = bond.oriented_edges();

    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    for (p, q, r, s) in [(a, b, c, d), (a, c, b, d), (a, d, b, c)] {
                        let on_a = disjoint_paths(&view_a, (ends[p].0, ends[q].0), (ends[r].0, ends[s].0));
                        let on_b = disjoint_paths(&view_b, (ends[p].1, ends[q].1), (ends[r].1, ends[s].1));
                        let flags = PRESENT
                            | if on_a { DISPARATE_A } else { 0 }
                            | if on_b { DISPARATE_B } else { 0 };
                        let fwd = table.slot(p, q, r, s);
                        let rev = table.slot(r, s, p, q);
                        table.flags[fwd] = flags;
                        table.flags[rev] = flags;
                    }
                }
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bonds::is_cocycle;
    use crate::graph::Graph;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap()
    }

    fn edge(g: &Graph, u: usize, v: usize) -> usize {
        g.edge_between(u, v).unwrap()
    }

    fn bond_of(g: &Graph, side_a: &[usize]) -> Bond {
        Bond::from_side(&g.view(), side_a.iter().copied().collect()).unwrap()
    }

    /// Brute force: every pair of vertex-disjoint simple paths.
    fn all_paths(view: &SubgraphView<'_>, s: usize, t: usize) -> Vec<VertexSet> {
        fn go(view: &SubgraphView<'_>, at: usize, t: usize, used: VertexSet, out: &mut Vec<VertexSet>) {
            if at == t {
                out.push(used);
                return;
            }
            for next in view.neighbors(at).difference(used) {
                go(view, next, t, used.union(VertexSet::singleton(next)), out);
            }
        }
        let mut out = Vec::new();
        go(view, s, t, VertexSet::singleton(s), &mut out);
        out
    }

    fn disjoint_paths_exhaustive(view: &SubgraphView<'_>, p: (usize, usize), q: (usize, usize)) -> bool {
        let first = all_paths(view, p.0, p.1);
        let second = all_paths(view, q.0, q.1);
        first.iter().any(|x| second.iter().any(|y| x.intersection(*y).is_empty()))
    }

    #[test]
    fn pairing_is_canonical() {
        let p = Pairing::new(5, 1, 3, 2).unwrap();
        assert_eq!(p, Pairing::new(2, 3, 1, 5).unwrap());
        assert_eq!(p.odd_pair(), (1, 5));
        assert_eq!(p.even_pair(), (2, 3));
        assert!(Pairing::new(1, 2, 2, 3).is_err());
    }

    #[test]
    fn k33_second_type_facts() {
        // Side A is the 4-cycle 0-3-1-4, side B the edge 2-5.
        let g = k33();
        let bond = bond_of(&g, &[0, 1, 3, 4]);
        assert_eq!(bond.len(), 4);
        let x1 = edge(&g, 0, 5);
        let x2 = edge(&g, 3, 2);
        let x3 = edge(&g, 1, 5);
        let x4 = edge(&g, 4, 2);
        let view = g.view();
        let odd_even = Pairing::new(x1, x3, x2, x4).unwrap();
        assert!(disparate_on_side(&view, &bond, Side::B, &odd_even).unwrap());
        let adjacent = Pairing::new(x1, x2, x3, x4).unwrap();
        assert!(disparate_on_side(&view, &bond, Side::A, &adjacent).unwrap());
    }

    #[test]
    fn k5_single_vertex_side_never_disparate() {
        let g = complete(5);
        let bond = bond_of(&g, &[0, 1, 2, 3]);
        let view = g.view();
        let table = build_disparate_table(&view, &bond).unwrap();
        assert_eq!(table.len(), 3);
        for (pairing, (on_a, on_b)) in table.entries() {
            assert!(!disparate_on_side(&view, &bond, Side::B, &pairing).unwrap());
            assert!(!on_b);
            assert!(on_a);
        }
    }

    #[test]
    fn k4_split_table() {
        // a, b, c, d = 0, 1, 2, 3
        let g = complete(4);
        let bond = bond_of(&g, &[0, 1]);
        let table = build_disparate_table(&g.view(), &bond).unwrap();
        let (ac, ad, bc, bd) = (edge(&g, 0, 2), edge(&g, 0, 3), edge(&g, 1, 2), edge(&g, 1, 3));
        assert_eq!(table.get(&Pairing::new(ac, ad, bc, bd).unwrap()), Some((true, false)));
        assert_eq!(table.get(&Pairing::new(ac, bc, ad, bd).unwrap()), Some((false, true)));
        assert_eq!(table.get(&Pairing::new(ac, bd, ad, bc).unwrap()), Some((false, false)));
        assert_eq!(table.len(), 3);
        assert_eq!(table.entries().len(), 3);
    }

    #[test]
    fn k5_first_type_fact() {
        // Side A = {0, 1, 2}, side B = {3, 4}.
        let g = complete(5);
        let bond = bond_of(&g, &[0, 1, 2]);
        assert_eq!(bond.len(), 6);
        let x2 = edge(&g, 1, 3);
        let x3 = edge(&g, 1, 4);
        let x4 = edge(&g, 2, 3);
        let x5 = edge(&g, 2, 4);
        let table = build_disparate_table(&g.view(), &bond).unwrap();
        let (_, on_b) = table.get(&Pairing::new(x2, x4, x3, x5).unwrap()).unwrap();
        assert!(on_b);
        let (on_a, _) = table.get(&Pairing::new(x2, x3, x4, x5).unwrap()).unwrap();
        assert!(on_a);
        assert_eq!(table.len(), 45);
    }

    #[test]
    fn swapped_queries_agree() {
        let g = k33();
        let bond = bond_of(&g, &[0, 3, 4]);
        let view = g.view();
        let ids = bond.edge_ids().to_vec();
        for side in [Side::A, Side::B] {
            let p = Pairing::new(ids[0], ids[2], ids[1], ids[3]).unwrap();
            let q = Pairing::new(ids[1], ids[3], ids[0], ids[2]).unwrap();
            assert_eq!(
                disparate_on_side(&view, &bond, side, &p).unwrap(),
                disparate_on_side(&view, &bond, side, &q).unwrap()
            );
        }
    }

    #[test]
    fn errors() {
        let g = complete(4);
        let bond = bond_of(&g, &[0, 1]);
        let star = bond_of(&g, &[0]);
        let outside = edge(&g, 0, 1);
        let ids = bond.edge_ids();
        let p = Pairing::new(outside, ids[0], ids[1], ids[2]).unwrap();
        assert_eq!(disparate_on_side(&g.view(), &bond, Side::A, &p), Err(Error::EdgeNotInBond(outside)));
        assert_eq!(build_disparate_table(&g.view(), &star).unwrap_err(), Error::BondTooSmall(3));
    }

    #[test]
    fn search_matches_exhaustive_on_small_sides() {
        // Every 4-tuple of endpoints on a handful of graphs with <= 7 vertices.
        let graphs = [
            complete(5),
            k33(),
            Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3), (1, 5)]).unwrap(),
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ];
        for g in &graphs {
            let view = g.view();
            let n = g.vertex_count();
            for s1 in 0..n {
                for t1 in s1..n {
                    for s2 in 0..n {
                        for t2 in s2..n {
                            assert_eq!(
                                disjoint_paths(&view, (s1, t1), (s2, t2)),
                                disjoint_paths_exhaustive(&view, (s1, t1), (s2, t2)),
                                "{g:?} {s1}-{t1} / {s2}-{t2}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shared_endpoint_is_never_disparate() {
        let g = complete(5);
        let view = g.view();
        assert!(!disjoint_paths(&view, (0, 1), (1, 2)));
        assert!(!disjoint_paths_exhaustive(&view, (0, 1), (1, 2)));
        assert!(!disjoint_paths(&view, (3, 3), (3, 4)));
    }

    #[test]
    fn table_agrees_with_direct_queries() {
        let g = k33();
        let view = g.view();
        for bond in crate::bonds::big_bonds(&view).unwrap() {
            let table = build_disparate_table(&view, &bond).unwrap();
            for (pairing, (on_a, on_b)) in table.entries() {
                assert_eq!(on_a, disparate_on_side(&view, &bond, Side::A, &pairing).unwrap());
                assert_eq!(on_b, disparate_on_side(&view, &bond, Side::B, &pairing).unwrap());
            }
            let _ = is_cocycle(&view, bond.edge_ids()).unwrap().unwrap();
        }
    }
}
