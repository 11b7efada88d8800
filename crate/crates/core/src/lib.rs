//! Linear-time LexDFS orderings for cocomparability graphs.
//!
//! Given a cocomparability graph `G` and an umbrella-free ordering `σ`, the
//! pipeline in [`refine::cclexdfs`] peels the layers of the poset underlying
//! the complement of `G` ([`layers`]), then refines each layer backwards with
//! pivot stacks ([`refine`]). The output `τ` is a LexDFS ordering that is also
//! umbrella-free, computed in `O(n + m)`. With [`ClassOrder::ReverseSigma`]
//! the output equals LexDFS⁺(σ).
//!
//! The crate also ships a naive label-based LexDFS ([`reference`]) used as an
//! oracle, executable checks for every ordering property the algorithm
//! relies on ([`verify`]), instance generators ([`generate`]), and a
//! counter-based benchmark harness ([`bench`]).

pub mod bench;
mod counters;
pub mod error;
pub mod generate;
pub mod graph;
pub mod layers;
pub mod reference;
pub mod refine;
pub mod verify;

pub use counters::WorkCounters;
pub use error::{Error, Result};
pub use graph::{Graph, Ordering, Vertex};
pub use layers::{ClassOrder, Partition};
pub use refine::{cclexdfs, Mode};
