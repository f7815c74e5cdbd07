//! Exact degree-based topological indices of k-th subdivision graphs
//! `S_k(G)` and k-th semi-total point graphs `R_k(G)`.
//!
//! The crate builds the derived graphs explicitly, computes M1, M2, F, PI1,
//! PI2, HM and SDD by direct summation in exact arithmetic, evaluates a
//! catalog of 42 published closed forms for those indices, and audits each
//! closed form against the direct value.
//!
//! ```
//! use topo_index::{generate, verify_formula, Family, FormulaId};
//!
//! let c3 = generate(&Family::Cycle { a: 3 }).unwrap();
//! let id: FormulaId = "T2.14".parse().unwrap();
//! let record = verify_formula(id, &c3, "cycle(3)", 2).unwrap();
//! assert!(!record.matched);
//! assert_eq!(record.residual.to_string(), "20");
//! ```

pub mod error;
pub mod exact;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod report;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use exact::ExactNumber;
pub use formulas::{
    catalog, evaluate_formula, evaluate_unrestricted, formula_metadata, parse_formula_list, Block,
    FormulaContext, FormulaId, FormulaMeta, Inputs,
};
pub use graph::{generate, parse_edge_list, validate, Diagnostics, Family, Graph};
pub use indices::{compute_all, compute_index, log_value, IndexKind, IndexVector};
pub use report::OutputFormat;
pub use transforms::{semi_total_k, subdivide_k, DerivedSpec, Transform};
pub use verify::{
    run_audit, smallest_counterexample, verify_formula, AuditReport, SuiteSpec, VerificationRecord,
};
