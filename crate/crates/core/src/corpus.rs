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

//! Graph corpora for validating the criterion against the oracle: all
//! labeled connected graphs up to a size, seeded random samples, and a few
//! named families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::criterion::{check_connected, CheckOptions, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::oracle::oracle_is_planar;

/// Exhaustive enumeration is refused above this many vertices.
pub const MAX_EXHAUSTIVE_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusMode {
    ExhaustiveLabeled,
    RandomSample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub min_n: usize,
    pub max_n: usize,
    pub mode: CorpusMode,
    /// Random mode only.
    pub sample_size: usize,
    /// Random mode only.
    pub seed: u64,
}

impl CorpusSpec {
    pub fn exhaustive(max_n: usize) -> Self {
        CorpusSpec { min_n: 1, max_n, mode: CorpusMode::ExhaustiveLabeled, sample_size: 0, seed: 0 }
    }

    pub fn random(min_n: usize, max_n: usize, sample_size: usize, seed: u64) -> Self {
        CorpusSpec { min_n, max_n, mode: CorpusMode::RandomSample, sample_size, seed }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCorpusSpec(msg));
        if self.min_n == 0 || self.min_n > self.max_n {
            return bad(format!("vertex range {}..={} is empty or starts at 0", self.min_n, self.max_n));
        }
        match self.mode {
            CorpusMode::ExhaustiveLabeled if self.max_n > MAX_EXHAUSTIVE_N => {
                bad(format!("exhaustive mode supports at most {MAX_EXHAUSTIVE_N} vertices"))
            }
            CorpusMode::RandomSample if self.max_n > MAX_VERTICES => {
                bad(format!("at most {MAX_VERTICES} vertices are supported"))
            }
            _ => Ok(()),
        }
    }
}

/// Connected graphs of a corpus, in a fixed order.
pub struct Corpus {
    spec: CorpusSpec,
    state: State,
}

enum State {
    Exhaustive { n: usize, mask: u64, pairs: Vec<(usize, usize)> },
    Random { rng: Box<ChaCha8Rng>, emitted: usize },
}

pub fn generate(spec: CorpusSpec) -> Result<Corpus> {
    spec.validate()?;
    let state = match spec.mode {
        CorpusMode::ExhaustiveLabeled => {
            State::Exhaustive { n: spec.min_n, mask: 0, pairs: pairs(spec.min_n) }
        }
        CorpusMode::RandomSample => {
            State::Random { rng: Box::new(ChaCha8Rng::seed_from_u64(spec.seed)), emitted: 0 }
        }
    };
    Ok(Corpus { spec, state })
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs.iter().enumerate().filter(|&(i, _)| mask & (1 << i) != 0).map(|(_, &p)| p);
    Graph::new(n, edges).expect("valid by construction")
}

impl Iterator for Corpus {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match &mut self.state {
            State::Exhaustive { n, mask, pairs } => loop {
                if *n > self.spec.max_n {
                    return None;
                }
                if *mask >= 1u64 << pairs.len() {
                    *n += 1;
                    *mask = 0;
                    *pairs = self::pairs(*n);
                    continue;
                }
                let g = from_mask(*n, pairs, *mask);
                *mask += 1;
                if g.is_connected() {
                    return Some(g);
                }
            },
            State::Random { rng, emitted } => {
                if *emitted == self.spec.sample_size {
                    return None;
                }
                *emitted += 1;
                let n = rng.gen_range(self.spec.min_n..=self.spec.max_n);
                let pairs = pairs(n);
                loop {
                    let p: f64 = rng.gen();
                    let edges: Vec<(usize, usize)> =
                        pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
                    let g = Graph::new(n, edges).expect("valid by construction");
                    if g.is_connected() {
                        return Some(g);
                    }
                }
            }
        }
    }
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, pairs(n)).expect("complete graph")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("complete bipartite graph")
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star")
}

/// Hub 0 joined to the cycle `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let spokes = (1..=rim).map(|i| (0, i));
    let rim_edges = (1..=rim).map(|i| (i, i % rim + 1));
    Graph::new(rim + 1, spokes.chain(rim_edges)).expect("wheel")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen")
}

/// Every edge replaced by a path of length two.
pub fn subdivide_all(g: &Graph) -> Graph {
    let mut out = g.clone();
    for e in 0..g.edge_count() {
        out = out.subdivide_edge(e).expect("edge exists");
    }
    out
}

#[derive(Clone, Debug)]
pub struct Disagreement {
    pub graph: Graph,
    pub criterion: Verdict,
    pub oracle_planar: bool,
}

#[derive(Clone, Debug, Default)]
pub struct ComparisonSummary {
    pub graphs: usize,
    pub planar: usize,
    pub nonplanar: usize,
    /// Graphs where either side gave up on its budget.
    pub budget_errors: usize,
    pub disagreements: Vec<Disagreement>,
}

enum Outcome {
    Agree(bool),
    Disagree(Disagreement),
    Budget,
}

fn compare_one(g: &Graph, options: &CheckOptions) -> Result<Outcome> {
    let criterion = match check_connected(g, options) {
        Ok(report) => report.verdict,
        Err(e) if e.is_budget() => return Ok(Outcome::Budget),
        Err(e) => return Err(e),
    };
    let oracle = match oracle_is_planar(g) {
        Ok(planar) => planar,
        Err(e) if e.is_budget() => return Ok(Outcome::Budget),
        Err(e) => return Err(e),
    };
    Ok(if criterion.is_planar() == oracle {
        Outcome::Agree(oracle)
    } else {
        Outcome::Disagree(Disagreement { graph: g.clone(), criterion, oracle_planar: oracle })
    })
}

/// Runs the criterion and the oracle on every graph, in parallel.
/// Disagreements are reported in input order.
pub fn compare_all(graphs: &[Graph], options: &CheckOptions) -> Result<ComparisonSummary> {
    let outcomes: Vec<Result<Outcome>> = graphs.par_iter().map(|g| compare_one(g, options)).collect();
    let mut summary = ComparisonSummary { graphs: graphs.len(), ..Default::default() };
    for outcome in outcomes {
        match outcome? {
            Outcome::Agree(true) => summary.planar += 1,
            Outcome::Agree(false) => summary.nonplanar += 1,
            Outcome::Budget => summary.budget_errors += 1,
            Outcome::Disagree(d) => summary.disagreements.push(d),
        }
    }
    Ok(summary)
}

pub fn compare_corpus(spec: CorpusSpec, options: &CheckOptions) -> Result<ComparisonSummary> {
    let graphs: Vec<Graph> = generate(spec)?.collect();
    compare_all(&graphs, options)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent count: enumerate all labeled graphs, test connectivity
    /// with a union-find over the edge list.
    fn brute_force_connected(n: usize) -> usize {
        let pairs = pairs(n);
        (0u64..1 << pairs.len())
            .filter(|mask| {
                let mut parent: Vec<usize> = (0..n).collect();
                fn find(p: &mut Vec<usize>, x: usize) -> usize {
                    if p[x] != x {
                        let r = find(p, p[x]);
                        p[x] = r;
                    }
                    p[x]
                }
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                        parent[a] = b;
                    }
                }
                let root = find(&mut parent, 0);
                (0..n).all(|v| find(&mut parent, v) == root)
            })
            .count()
    }

    fn count_by_n(spec: CorpusSpec) -> Vec<usize> {
        let mut counts = vec![0; spec.max_n + 1];
        for g in generate(spec).unwrap() {
            counts[g.vertex_count()] += 1;
        }
        counts
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(count_by_n(CorpusSpec::exhaustive(3)), vec![0, 1, 1, 4]);
        let counts = count_by_n(CorpusSpec::exhaustive(5));
        assert_eq!(counts[4], 38);
        for (n, &count) in counts.iter().enumerate().skip(1) {
            assert_eq!(count, brute_force_connected(n));
        }
        assert_eq!(counts[5], 728);
    }

    #[test]
    fn random_is_deterministic() {
        let spec = CorpusSpec::random(3, 8, 40, 7);
        let a: Vec<Graph> = generate(spec).unwrap().collect();
        let b: Vec<Graph> = generate(spec).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 40);
        assert!(a.iter().all(|g| g.is_connected() && (3..=8).contains(&g.vertex_count())));
        let c: Vec<Graph> = generate(CorpusSpec::random(3, 8, 40, 8)).unwrap().collect();
        assert_ne!(a, c);
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(CorpusSpec::exhaustive(8)).is_err());
        assert!(generate(CorpusSpec::random(5, 4, 1, 0)).is_err());
        assert!(generate(CorpusSpec::random(0, 4, 1, 0)).is_err());
        assert!(generate(CorpusSpec::random(2, 65, 1, 0)).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(wheel(5).edge_count(), 10);
        assert_eq!(petersen().edge_count(), 15);
        let s = subdivide_all(&complete_bipartite(3, 3));
        assert_eq!((s.vertex_count(), s.edge_count()), (15, 18));
        assert!(s.is_connected());
    }

    #[test]
    fn small_corpus_agrees() {
        let summary = compare_corpus(CorpusSpec::exhaustive(5), &CheckOptions::default()).unwrap();
        assert!(summary.disagreements.is_empty());
        assert_eq!(summary.budget_errors, 0);
        assert_eq!(summary.graphs, 1 + 1 + 4 + 38 + 728);
        assert_eq!(summary.planar + summary.nonplanar, summary.graphs);
        // K5 is the only nonplanar graph on five vertices.
        assert_eq!(summary.nonplanar, 1);
    }
}
