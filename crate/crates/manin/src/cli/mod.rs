//! Batch front-end: strict JSON input specs plus command execution with
//! uniform human/JSON reports and exit codes. See [`input`] for the
//! document schema and [`run`] for the commands.

pub mod input;
pub mod run;

pub use input::{canonical_json, from_flag_case, parse_input_spec, InputSpec};
pub use run::{
    cmd_bivector_at, cmd_check_section, cmd_check_splitting, cmd_coset_reps, cmd_export_builtin,
    cmd_flag_suite, cmd_rmatrix, cmd_validate, CommandOutcome,
};
