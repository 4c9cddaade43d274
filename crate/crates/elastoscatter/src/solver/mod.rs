//! Exterior Dirichlet/Neumann/Robin scattering solver via
//! fundamental-solutions collocation, plus point-source Green fields and the
//! pressure/shear field splitting.

mod bc;
mod exterior;
mod incident;
mod lsq;
mod split;

pub use bc::BoundaryCondition;
pub use exterior::{
    green_tensor_eval, solve_exterior, CollocationOperator, ResidualReport, ScatteringSolution,
    SolverParams,
};
pub use incident::IncidentField;
pub use lsq::TruncatedSvdLsq;
pub use split::helmholtz_split;
