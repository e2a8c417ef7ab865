//! Sparse halves in blow-ups of generalised Andrásfai graphs.
//!
//! The crate builds the graphs `F^k_d` and their blow-ups, places blow-ups
//! on the unit circle so that adjacency is an angle condition, and finds
//! sparse `floor(n/2)`-subsets in two independent ways: an exact branch and
//! bound over all subsets, and a sweep over the arc halves of the circle
//! representation. The [`proof_lab`] module evaluates the counting lemmas
//! behind the arc-half bound on concrete arrangements.
//!
//! All arithmetic is exact; see [`arith`].

pub mod andrasfai;
pub mod arith;
pub mod circle;
pub mod cli;
pub mod density;
pub mod error;
pub mod graph;
pub mod hom;
pub mod proof_lab;
pub mod spec;

pub use andrasfai::{andrasfai, balanced_blow_up, blow_up, generalized_andrasfai, BlowUp};
pub use arith::{
    angle_fraction, interval_contains, interval_length, CirclePoint, CircularInterval, Containment, EndMode, Rational,
};
pub use circle::{lambda_count, represent_blow_up, verify_angle_property, z_xi, CircularArrangement};
pub use density::{arc_sweep, is_dense, min_edges_over_subsets, DensityVerdict, SubsetBudget, SweepReport};
pub use error::{Error, Result};
pub use graph::{chromatic_number, independence_number, induced_edge_count, odd_girth, Graph, OddGirth, VertexSubset};
pub use hom::{find_homomorphism, min_andrasfai_index, verify_homomorphism, HomCaps, Homomorphism};
