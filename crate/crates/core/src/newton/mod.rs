//! Newton diagrams, weighted filtrations and control functions.

mod control;
mod diagram;
mod filtration;
mod mixed;
mod weight;

pub use control::{is_control_function, is_standard_control_function, scheme_form, ControlCheck};
pub use diagram::{newton_polyhedron, rho_gamma, Facet, NewtonDiagram};
pub use filtration::{filtration, initial_part, is_quasihomogeneous, support, Supported};
pub use mixed::MixedPoly;
pub use weight::Weight;
