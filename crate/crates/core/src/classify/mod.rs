//! Classification: normal-form tables, the prepared 8-jet decision tree, J3,0
//! deformation tests and the Lipschitz modality cascade.

mod jet8;
mod label;
mod screen;
mod table;
mod verdict;

pub use jet8::{classify_prepared_8jet, jet8_leaves, Jet8Class, PreparedJet8};
pub use label::{Series, TypeLabel};
pub use screen::{deforms_to_j30_by_filtration, j30_weight, zero_six_jet_bound};
pub use table::{
    all_instances, normal_form_lookup, parse_rows, template_rows, Lmod, NormalFormEntry, Source, TemplateRow,
    DATASET_VERSION, DEFAULT_DEGREE_BOUND, NORMAL_FORMS,
};
pub use verdict::{
    find_match, match_template, modality_verdict, rules, split_quadratic_tail, Modality, ModalityVerdict,
    TemplateMatch, TraceEntry,
};
