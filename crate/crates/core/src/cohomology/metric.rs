//! Metric-type conditions on a left-invariant (1,1)-form ω.
//!
//! Each class is a closedness condition on a wedge power of ω (n = complex
//! dimension):
//!
//! - Kähler:          dω = 0
//! - balanced:        d(ω^{n−1}) = 0
//! - pluriclosed:     ∂∂̄ω = 0
//! - astheno-Kähler:  ∂∂̄(ω^{n−2}) = 0   (vacuous for n < 2)
//! - Gauduchon:       ∂∂̄(ω^{n−1}) = 0
//!
//! Positivity of ω is not checked — these are the exact exterior-algebra
//! conditions only, evaluated with no floating point anywhere.

use crate::cohomology::CohomologyError;
use crate::exterior::{Form, Monomial};
use crate::scalars::GaussianRational;
use crate::structure::Presentation;

/// Which metric classes a given (1,1)-form falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricClassReport {
    pub kahler: bool,
    pub balanced: bool,
    pub pluriclosed: bool,
    pub astheno_kahler: bool,
    pub gauduchon: bool,
}

/// ω = i·(φ¹∧φ̄¹ + … + φⁿ∧φ̄ⁿ), the standard diagonal metric form.
pub fn standard_diagonal_form(n: u32) -> Form {
    let mut form = Form::zero();
    for j in 1..=n {
        form.add_term(GaussianRational::i(), Monomial::from_indices(&[j], &[j]));
    }
    form
}

/// Classify a (1,1)-form. Any term of a different bidegree is rejected.
pub fn metric_classes(
    pres: &Presentation,
    omega: &Form,
) -> Result<MetricClassReport, CohomologyError> {
    if omega.terms().any(|(mono, _)| mono.bidegree() != (1, 1)) {
        return Err(CohomologyError::NotAMetricForm);
    }
    let n = pres.n();
    let del_delbar_closed = |form: &Form| pres.del(&pres.delbar(form)).is_zero();
    Ok(MetricClassReport {
        kahler: pres.d(omega).is_zero(),
        balanced: pres.d(&omega.wedge_power(n - 1)).is_zero(),
        pluriclosed: del_delbar_closed(omega),
        astheno_kahler: n < 2 || del_delbar_closed(&omega.wedge_power(n - 2)),
        gauduchon: del_delbar_closed(&omega.wedge_power(n - 1)),
    })
}
