//! Entropic-geometric entanglement monotones for multipartite density matrices.
//!
//! Built on von Neumann subsystem entropies (in bits), the crate provides:
//!
//! - the **convoluted metric** `M_ij = D_ij − D̃_ij`, a pseudo-metric that
//!   vanishes exactly when the pair `ij` is in a product with the rest;
//! - **convoluted areas and volumes** `²M`, `ᵐ⁻¹M` over larger groups of parties;
//! - the aggregate **entanglement content** `E`, normalized so that
//!   `E(Bell ⊗ Bell) = 2`;
//! - applications: island filtering, entanglement-type categorization, and the
//!   Ono-inequality monogamy check;
//! - convex-roof ensemble machinery (an anytime upper bound on the infimum over
//!   pure-state decompositions);
//! - baselines (concurrence, negativity) and the random-state comparison
//!   experiment with CSV output.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory, e.g.
//! `cargo run --example metric_basics`.

pub mod entropy;
pub mod error;
pub mod experiment;
pub mod format;
pub mod geometry;
pub mod matrix;
pub mod oracles;
pub mod report;
pub mod roof;
pub mod state;
pub mod states;

pub use entropy::{von_neumann_entropy, SubsystemEntropyCache};
pub use error::{Error, Result};
pub use geometry::{
    categorize, convoluted_area, convoluted_metric, convoluted_volume, entanglement_content,
    filter_islands, geometry_report, ono_check, GeometryReport, IslandQuery, IslandReport,
    OnoReport,
};
pub use matrix::{hermitian_eigenvalues, kron, ComplexMatrix};
pub use state::{validate_density, MultipartiteState, PartySubset};
pub use states::{build_state, StateSpec};
