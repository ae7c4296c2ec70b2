//! Exact cohomology of Lie algebras with integrable complex structure.
//!
//! Given structure equations dφ^j for a co-frame φ¹…φⁿ of (1,0)-forms, the
//! library builds the Chevalley-Eilenberg double complex (Λ^{•,•}g*_ℂ, ∂, ∂̄)
//! over the Gaussian rationals ℚ(i) and computes, with exact arithmetic
//! throughout:
//!
//! - de Rham, Dolbeault (∂̄ and conjugate ∂), Bott-Chern and Aeppli
//!   cohomology — each both as a quotient dimension and as a harmonic-space
//!   dimension with explicit representative bases;
//! - duality and symmetry checks, natural-map ranks between the theories,
//!   and the ∂∂̄-lemma test;
//! - Hermitian metric classes of a (1,1)-form (Kähler, balanced,
//!   pluriclosed, astheno-Kähler, Gauduchon);
//! - the small-deformation subclass of a six-dimensional nilmanifold family
//!   from its σ structure constants.
//!
//! Everything is deterministic: bases are canonically ordered, elimination
//! pivots are chosen by fixed scan order, and there is no floating point
//! anywhere.

pub mod catalog;
pub mod cohomology;
pub mod exterior;
pub mod linalg;
pub mod scalars;
pub mod structure;

pub use cohomology::deformation::{
    classify_deformation, first_order_sigma, Classification, DeformationClass,
    DeformationParameter, SigmaCoefficients,
};
pub use cohomology::harmonic::{harmonic_basis, harmonic_dimension, HarmonicBasis};
pub use cohomology::metric::{metric_classes, standard_diagonal_form, MetricClassReport};
pub use cohomology::reports::{
    cross_check, del_delbar_lemma, dualities, natural_map_ranks, CrossCheckReport, DualityReport,
    LemmaReport, NaturalMapRanks,
};
pub use cohomology::{
    compute_table, quotient_dimension, table_keys, tables_from_csv, tables_to_csv, CohomologyError,
    CohomologyTable, Method, TableKey, Theory,
};
pub use exterior::{basis, Form, Monomial};
pub use linalg::Matrix;
pub use scalars::{GaussianRational, Rational};
pub use structure::{
    parse, DifferentialMatrices, ParseError, Presentation, StructureError, StructureFlags,
    ValidationReport,
};
