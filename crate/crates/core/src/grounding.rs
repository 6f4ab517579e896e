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

//! Grounding orders for big bonds.
//!
//! A big bond is grounded when its edges can be listed so that no
//! order-respecting quadruple `x1 x2 x3 x4` (not necessarily contiguous)
//! has `{x1, x3}` and `{x2, x4}` disparate on either side.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::separation::{DisparateTable, Pairing};

pub const DEFAULT_MAX_EDGES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroundingStatus {
    Grounded,
    Ungrounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundingResult {
    pub status: GroundingStatus,
    /// Edge ids in grounding order; present iff grounded.
    pub witness: Option<Vec<usize>>,
    /// Complete orderings accounted for. A prefix rejected with `r` edges
    /// still unplaced accounts for `r!` orderings, so an exhausted search
    /// reports exactly `k!`.
    pub permutations_explored: u64,
    /// Partial orderings the search actually extended or rejected.
    pub nodes_visited: u64,
}

impl GroundingResult {
    pub fn is_grounded(&self) -> bool {
        self.status == GroundingStatus::Grounded
    }
}

fn to_positions(table: &DisparateTable, seq: &[usize]) -> Result<Vec<usize>> {
    let ids = table.edge_ids();
    if seq.len() != ids.len() {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; ids.len()];
    let mut positions = Vec::with_capacity(seq.len());
    for &e in seq {
        let p = ids.binary_search(&e).map_err(|_| Error::NotAPermutation)?;
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::NotAPermutation);
        }
        positions.push(p);
    }
    Ok(positions)
}

/// Checks every index quadruple `i < j < k < l` of `seq`.
pub fn verify_grounding(table: &DisparateTable, seq: &[usize]) -> Result<bool> {
    let seq = to_positions(table, seq)?;
    let n = seq.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    if table.disparate_local(seq[i], seq[k], seq[j], seq[l]) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Searches for the lexicographically least grounding order.
pub fn find_grounding(table: &DisparateTable, max_edges: usize) -> Result<GroundingResult> {
    Search::new(table, max_edges, None)?.run()
}

/// Like [`find_grounding`], also counting which pairing rejected each
/// pruned prefix.
pub fn find_grounding_traced(
    table: &DisparateTable,
    max_edges: usize,
) -> Result<(GroundingResult, BTreeMap<Pairing, u64>)> {
    let mut trace = BTreeMap::new();
    let result = Search::new(table, max_edges, Some(&mut trace))?.run()?;
    Ok((result, trace))
}

struct Search<'a> {
    table: &'a DisparateTable,
    k: usize,
    seq: Vec<usize>,
    used: u64,
    factorial: Vec<u64>,
    explored: u64,
    nodes: u64,
    trace: Option<&'a mut BTreeMap<Pairing, u64>>,
}

impl<'a> Search<'a> {
    fn new(
        table: &'a DisparateTable,
        max_edges: usize,
        trace: Option<&'a mut BTreeMap<Pairing, u64>>,
    ) -> Result<Self> {
        let k = table.edge_ids().len();
        if k < 4 {
            return Err(Error::BondTooSmall(k));
        }
        // 20! is the largest factorial that fits in u64.
        if k > max_edges || k > 20 {
            return Err(Error::SearchBudget { edges: k, limit: max_edges.min(20) });
        }
        let mut factorial = vec![1u64; k + 1];
        for i in 1..=k {
            factorial[i] = factorial[i - 1] * i as u64;
        }
        Ok(Search {
            table,
            k,
            seq: Vec::with_capacity(k),
            used: 0,
            factorial,
            explored: 0,
            nodes: 0,
            trace,
        })
    }

    fn run(mut self) -> Result<GroundingResult> {
        let found = self.extend();
        let result = if found {
            let ids = self.table.edge_ids();
            GroundingResult {
                status: GroundingStatus::Grounded,
                witness: Some(self.seq.iter().map(|&p| ids[p]).collect()),
                permutations_explored: self.explored,
                nodes_visited: self.nodes,
            }
        } else {
            if self.explored != self.factorial[self.k] {
                return Err(Error::Internal(format!(
                    "grounding search accounted for {} of {} orderings",
                    self.explored,
                    self.factorial[self.k]
                )));
            }
            GroundingResult {
                status: GroundingStatus::Ungrounded,
                witness: None,
                permutations_explored: self.explored,
                nodes_visited: self.nodes,
            }
        };
        Ok(result)
    }

    /// The first quadruple completed by appending `e`, as positions
    /// `(i, k, j)` with `{seq[i], seq[k]} | {seq[j], e}` disparate.
    fn violation(&self, e: usize) -> Option<(usize, usize, usize)> {
        let seq = &self.seq;
        let len = seq.len();
        for j in 1..len {
            for k in j + 1..len {
                for i in 0..j {
                    if self.table.disparate_local(seq[i], seq[k], seq[j], e) {
                        return Some((seq[i], seq[k], seq[j]));
                    }
                }
            }
        }
        None
    }

    fn extend(&mut self) -> bool {
        if self.seq.len() == self.k {
            self.explored += 1;
            return true;
        }
        let remaining_after = self.k - self.seq.len() - 1;
        for e in 0..self.k {
            if self.used & (1 << e) != 0 {
                continue;
            }
            self.nodes += 1;
            if let Some((a, c, b)) = self.violation(e) {
                self.explored += self.factorial[remaining_after];
                if let Some(trace) = self.trace.as_deref_mut() {
                    *trace.entry(self.table.pairing_local(a, c, b, e)).or_insert(0) += 1;
                }
                continue;
            }
            self.seq.push(e);
            self.used |= 1 << e;
            if self.extend() {
                return true;
            }
            self.seq.pop();
            self.used &= !(1 << e);
        }
        false
    }
}
