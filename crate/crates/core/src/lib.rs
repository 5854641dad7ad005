//! Exact computer algebra for deciding Alexander-polynomial obstructions to
//! cosmetic crossing changes.
//!
//! The crate is organized around the pipeline a knot-census verification
//! runs through:
//!
//! * [`laurent`] — integer Laurent polynomials (`Δ_K` lives here), parsing
//!   and printing.
//! * [`factor`] — complete factorization of integer polynomials into
//!   irreducibles (Zassenhaus), factorization over `𝔽_p`, and a brute-force
//!   Kronecker oracle.
//! * [`linalg`] — fraction-free exact linear algebra over ℤ and ℤ\[t\]:
//!   Bareiss determinants, Smith normal form with unimodular transforms,
//!   integral linear solving, polynomial-matrix determinants and kernels.
//! * [`seifert`] — Seifert-matrix invariants: Alexander matrix and
//!   polynomial, knot determinant, signature, the pretzel-family
//!   constructor, and the singular-minor trace that certifies the
//!   obstruction identities on concrete matrices.
//! * [`obstruction`] — the decision procedures: the bad-factor detector on
//!   `Δ_K`, the square-free determinant test, and the invariant-factor
//!   test on the double-cover homology.
//! * [`census`] — KnotInfo-style CSV ingestion, the rule-ladder classifier,
//!   and deterministic report generation.
//!
//! Polynomial strings follow the grammar
//! `poly := [sign] term { sign term }` with
//! `term := int | [int ['*']] "t" ["^" (int | "{" int "}")]`; whitespace is
//! ignored and exponents may be negative.  A bracketed coefficient-vector
//! form `[c0, c1, ...] @ min_exp` is also accepted.  All arithmetic uses
//! arbitrary-precision integers.

pub mod census;
pub mod factor;
pub mod laurent;
pub mod linalg;
pub mod obstruction;
pub mod seifert;

pub use census::{CensusConfig, KnotRecord, Report, Verdict};
pub use factor::{Factorization, Gf2Poly};
pub use laurent::{IntPoly, LaurentPoly};
pub use linalg::{IntMatrix, PolyMatrix, SnfResult};
pub use obstruction::{ObstructionVerdict, UsableFactor};
pub use seifert::{ProofTrace, SeifertMatrix};

/// Errors from polynomial arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("evaluation at zero with negative exponents present")]
    EvalAtZero,
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
