//! Connected domination, k-compliance and small-graph minor search.
//!
//! Every graph handled here is a simple graph on at most [`MAX_ORDER`] vertices,
//! stored as one `u32` adjacency row per vertex. The crate is `no_std` and only
//! needs `alloc`; file formats, the command line and thread pools live in the
//! `gammac` companion crate.
//!
//! Module map:
//!
//! * [`graph`]: the [`Graph`] value type and [`VertexSet`] bitsets.
//! * [`iso`]: exact canonical forms and isomorphism testing.
//! * [`domination`]: domination and connected domination numbers.
//! * [`compliance`]: k-compliance (two independent routes), necessary-condition
//!   filters, f(n) and the Nordhaus-Gaddum validators.
//! * [`topology`]: minor containment, the Petersen family, intrinsic linking.
//! * [`constructions`]: Paley graphs, strongly regular checks, twins, named graphs.
//! * [`search`]: seeded generators and the pruned non-compliance search.

#![no_std]

extern crate alloc;

pub mod compliance;
pub mod constructions;
pub mod domination;
mod error;
pub mod graph;
pub mod iso;
pub mod rng;
pub mod search;
pub mod topology;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_ORDER};
