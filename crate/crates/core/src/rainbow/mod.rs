//! Rainbow-tree decision, k-rainbow verification, the exact 3-rainbow-index
//! search, and the constructive colorings and bounds built on top of them.

pub mod bounds;
pub mod coloring;
pub mod composite;
pub mod exact;
pub mod extend;
pub mod kst;
pub mod verify;

pub use bounds::{
    bounds_report, k2t_lower_bound, lower_bound_steiner, BoundsReport, ReportLimits, SteinerBound,
};
pub use coloring::EdgeColoring;
pub use composite::block_composite_coloring;
pub use exact::{rx3_exact, Rx3Budget, Rx3Result};
pub use extend::{
    base_coloring, dominating_extension_pipeline, extend_via_2dominating, spanning_tree_coloring,
    ExtensionPlan,
};
pub use kst::{kst_coloring, kst_coloring_for};
pub use verify::{exists_rainbow_tree, is_k_rainbow, rainbow_tree_witness, Verdict};
