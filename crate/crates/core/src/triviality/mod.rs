//! Lipschitz-triviality certificates for one-parameter families `f + t·g`.

mod faces;
mod family;
mod quasi;
mod scheme;
mod table8;

pub use faces::{check_face_margins, FaceCheckReport, FaceMargin};
pub use family::Family;
pub use quasi::{check_quasihomogeneous_triviality, QuasiReport};
pub use scheme::{
    build_control_scheme, build_control_scheme_with, build_scheme, scheme_weight, search_scheme, ControlScheme,
    SchemeTerm, TrivialityCertificate,
};
pub use table8::{
    row_family, verify_table8, verify_table8_with, wsharp_even, wsharp_even_scheme, wsharp_odd, Table8Report,
    COFACTOR_NAMES, TABLE8_ROWS,
};
