//! Signature-based Gröbner basis engines over prime fields.
//!
//! The signature machinery (module orders, rewrite orders, the rewrite basis
//! loop and its matrix variant) lives in [`sigspace`], [`sigcore`], [`engine`]
//! and [`f4engine`]. [`oracle`] is an independent Buchberger implementation
//! used to check results, and [`bench`] provides benchmark systems, the text
//! format and the table plumbing of the `sigb` binary.

pub mod base;
pub mod bench;
pub mod engine;
pub mod error;
pub mod f4engine;
pub mod oracle;
pub mod poly;
pub mod sigcore;
pub mod sigspace;

pub use base::{Field, FieldElement, Monomial, MonomialOrder, DEFAULT_PRIME};
pub use bench::{emit_system, emit_table, gen_named, gen_random, parse_system, run_variant, ReportRow, SystemSpec, VariantConfig};
pub use engine::{compute, gen_sb, rb, Algorithm, EngineConfig, RunStats, SigRun};
pub use error::{Error, Result};
pub use f4engine::{f4rb, matrixf5};
pub use oracle::{buchberger, reduced_gb, verify_equivalence};
pub use poly::{Polynomial, ReductionMode, Ring};
pub use sigcore::{RewriteOrder, SigPoly, SyzygySet};
pub use sigspace::{ModuleOrder, ModuleOrderKind, Signature};
