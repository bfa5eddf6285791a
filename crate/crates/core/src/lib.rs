//! Decide whether a binary morphism prolongable on `a` generates an
//! infinite Lyndon word.
//!
//! * [`words`]: finite words over ordered alphabets, Lyndon tests and
//!   factorizations.
//! * [`morphism`]: binary morphisms, prolongability and fixed-point prefixes.
//! * [`classifier`]: the closed-form decision with evidence.
//! * [`oracle`]: brute-force evidence from finite prefixes of the fixed point.

pub mod classifier;
pub mod error;
pub mod morphism;
pub mod oracle;
pub mod words;

pub use classifier::{
    check_case_aa, check_case_ab, classify, theorem_report, theorem_report_with_window,
    CaseWitness, Evidence, Outcome, Periodicity, Reason, TheoremReport, Verdict,
};
pub use error::{Error, Result};
pub use morphism::{
    enumerate_morphisms, Morphism, PrefixShape, PrefixStream, ProlongabilityReport,
};
pub use oracle::{cross_validate, Agreement, Conclusion, OracleConfig, OracleReport};
pub use words::{
    cfl_factorize, is_lyndon, is_power_of_lyndon, is_pre_lyndon, lex_compare, primitive_root,
    Factorization, OrderedAlphabet, PeriodWitness, PreLyndonWitness, Word,
};
