//! Single-layer elastic potential, its traction, the two-sided jump
//! estimate and the representation-formula evaluator.

mod betti;
mod layer;

pub use betti::betti_representation;
pub use layer::{
    jump_estimate, single_layer, single_layer_raw, single_layer_traction,
    single_layer_traction_raw, SurfaceDensity,
};
