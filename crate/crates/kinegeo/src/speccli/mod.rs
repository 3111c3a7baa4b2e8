//! The declarative spec language and the verification driver behind the
//! command-line tool.

mod dump;
mod report;
mod spec;
mod verify;
mod workspace;

pub use dump::{dump_json, dump_text, show_algebra, show_geometry};
pub use report::{emit_json, emit_report, emit_text, reemit_json, CheckResult, Format, Status, VerificationReport};
pub use spec::{
    parse_spec, parse_spec_with, AlgebraDecl, Block, Component, ContractDecl, Declaration, DualDecl, Expr, GeometryDecl,
    NameTable, SpecDocument, SpecError, TensorName, BLOCK_KEYWORDS, SCALE_SLOTS,
};
pub use verify::{catalog_version, run_verification, Selection, Suite, SIGNATURE_POINTS};
pub use workspace::{
    build_user_algebra, build_user_geometry, AlgebraEntry, Corruption, DualityEntry, GeometryEntry, Workspace, WorkspaceError,
};
