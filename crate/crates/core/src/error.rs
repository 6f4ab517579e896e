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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: loop edge at vertex `{vertex}`")]
    Loop { line: usize, vertex: String },

    #[error("graph has {count} vertices, at most {limit} are supported")]
    TooManyVertices { count: usize, limit: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("edge {0} is out of range")]
    EdgeOutOfRange(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("edge set is not a cocycle")]
    NotACocycle,

    #[error("edge {0} is not in the bond")]
    EdgeNotInBond(usize),

    #[error("bond has {0} edges, at least 4 are required")]
    BondTooSmall(usize),

    #[error("sequence is not a permutation of the bond's edges")]
    NotAPermutation,

    #[error("grounding search budget exceeded: bond has {edges} edges, limit is {limit}")]
    SearchBudget { edges: usize, limit: usize },

    #[error("vertex limit exceeded: {count} vertices, limit is {limit}")]
    VertexLimit { count: usize, limit: usize },

    #[error("oracle budget exceeded: {rotations} rotation systems, limit is {limit}")]
    OracleBudget { rotations: u128, limit: u128 },

    #[error("cocycle kind does not match the subdivision kind")]
    KindMismatch,

    #[error("invalid corpus spec: {0}")]
    InvalidCorpusSpec(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Budget errors mean "gave up", not "wrong input".
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::SearchBudget { .. } | Error::VertexLimit { .. } | Error::OracleBudget { .. }
        )
    }
}
