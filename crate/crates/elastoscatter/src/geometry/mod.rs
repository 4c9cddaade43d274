//! Parametrized closed obstacle boundaries, quadrature meshes, auxiliary
//! interior surfaces and point classification.

mod mesh;
mod shape;

pub use mesh::{build_mesh, held_out_mesh, SurfaceMesh};
pub use shape::{ObstacleShape, PointClass};
