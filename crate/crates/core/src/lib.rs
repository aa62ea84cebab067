//! Generalized interlinked cycle (GIC) structures for index coding.
//!
//! A side-information digraph has an arc `i -> j` when receiver `i` already
//! caches message `x_j`. This crate validates GIC structures on such
//! digraphs, builds and decodes their XOR codes, covers arbitrary digraphs
//! with disjoint GIC parts and compares the result against classical covers
//! and exact lower bounds.

mod bits;
pub mod bounds;
pub mod codec;
pub mod cover;
pub mod digraph;
pub mod generators;
pub mod gic;

pub use bounds::{
    bounds_report, certify_theorem4, mais, minrank_gf2, sandwich_check, BoundsError,
    BoundsOptions, BoundsReport, Optimality,
};
pub use codec::{
    decode, encode, round_trip, symbolic_decode_check, CodecError, CodedSymbol, IndexCode,
    MessageVector, Payload,
};
pub use cover::{
    clique_cover_length, cycle_cover_length, gicc_cover, icc_to_gic, CoverError, CoverPart,
    CoverPlan, Effort, IccDescription,
};
pub use digraph::{parse_digraph, serialize_digraph, Digraph, ParseError, Path, Vertex, VertexSet};
pub use gic::{validate_gic, GicError, GicStructure, Violation, ViolationKind};
