//! Linear operators on Laurent polynomials, the algebra realizations built
//! from them, and an exact checker that measures structure constants.

mod check;
mod linop;
pub mod operators;
mod reps;

pub use check::{
    casimir_value, casimir_value_of, check_all, check_relation, check_relation_def, daha_check,
    intertwining_check, preserves_polynomials, DEFAULT_SEED, DahaReport, IntertwiningReport, RelationReport,
};
pub use linop::{anticommutator, q_bracket, LinOp};
pub use reps::{
    qbessel2_yx_relation, rep_daha, rep_dunkl, rep_little_q_jacobi, rep_minus1_jacobi, rep_qbessel2,
    rep_qbessel3, rep_qlaguerre, BasisTerm, CasimirDef, RelationDef, Representation,
};
