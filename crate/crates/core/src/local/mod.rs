//! Local-ring computations: the `ds` ordering, Mora division with units, local
//! standard bases, quotient bases, Milnor number, corank and multiplicity.

mod corner;
mod milnor;
mod mora;
mod order;
mod sorted;
mod stdbasis;

pub use corner::CornerDivider;
pub use milnor::{check_germ, corank, jacobian_ideal, milnor_number, milnor_number_with, monomial_name, order_of_germ, specialize};
pub use mora::{divide_with, mora_normal_form, DivisionResult, Divider};
pub use order::LocalOrder;
pub use stdbasis::{quotient_basis, std_basis, std_basis_with, StdBasis, StdOptions, DEFAULT_LIMIT};
