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

//! Planarity testing through grounded cocycles.
//!
//! A connected graph is planar exactly when every cocycle (minimal edge cut)
//! with at least four edges admits an ordering of its edges in which no
//! interleaved quadruple `x1 x2 x3 x4` has `{x1, x3}` and `{x2, x4}` joined
//! by vertex-disjoint paths on either side of the cut. This crate decides
//! that condition directly and produces checkable evidence either way:
//!
//! * [`grounding`] finds witness orderings for planar graphs,
//! * [`witness`] builds an ungrounded big cocycle for nonplanar graphs by
//!   lifting one from a Kuratowski subdivision and extending it,
//! * [`oracle`] is an independent rotation-system planarity test used to
//!   cross-check the criterion over [`corpus`] graphs.

pub mod bonds;
pub mod corpus;
pub mod criterion;
mod error;
pub mod graph;
pub mod grounding;
pub mod oracle;
pub mod separation;
pub mod witness;

pub use bonds::Bond;
pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, SubgraphView, VertexSet};
pub use criterion::{check, CheckOptions, PlanarityReport, VariantFilter, Verdict};
pub use grounding::{find_grounding, GroundingResult, GroundingStatus};
pub use separation::{build_disparate_table, DisparateTable, Pairing, Side};
pub use witness::{certify_nonplanar, NonplanarCertificate};
