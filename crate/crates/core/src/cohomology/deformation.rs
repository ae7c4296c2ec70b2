//! Deformed structure equations dφ³ = σ_{12} φ¹∧φ² + σ_{1 1̄} φ¹∧φ̄¹ +
//! σ_{1 2̄} φ¹∧φ̄² + σ_{2 1̄} φ²∧φ̄¹ + σ_{2 2̄} φ²∧φ̄² (with dφ¹ = dφ² = 0)
//! and their classification by Bott-Chern dimensions.
//!
//! The class is decided by exact data:
//!
//! - (i)   all four mixed coefficients vanish;
//! - (ii)  δ := σ_{2 1̄}σ_{1 2̄} − σ_{1 1̄}σ_{2 2̄} = 0 (and not (i));
//! - (iii) δ ≠ 0;
//!
//! with subclass a/b given by the rank (1 or 2) of
//!
//! ```text
//! S = ⎡ conj σ_{1 1̄}  conj σ_{2 2̄}  conj σ_{1 2̄}  conj σ_{2 1̄} ⎤
//!     ⎣      σ_{1 1̄}       σ_{2 2̄}       σ_{2 1̄}       σ_{1 2̄} ⎦ .
//! ```
//!
//! These invariants are exactly what the Bott-Chern tables detect: δ controls
//! h^{1,1}_BC-adjacent entries and rank S controls h^{2,2}_BC.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exterior::{Form, Monomial};
use crate::linalg::Matrix;
use crate::scalars::GaussianRational;
use crate::structure::Presentation;

/// Malformed σ tuple text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed sigma tuple: {0}")]
pub struct SigmaParseError(pub String);

/// The five structure coefficients of dφ³.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaCoefficients {
    pub s12: GaussianRational,
    pub s11b: GaussianRational,
    pub s12b: GaussianRational,
    pub s21b: GaussianRational,
    pub s22b: GaussianRational,
}

impl SigmaCoefficients {
    /// Parse `"(re, im)(re, im)(re, im)(re, im)(re, im)"` in the order
    /// σ_{12}, σ_{1 1̄}, σ_{1 2̄}, σ_{2 1̄}, σ_{2 2̄}; whitespace between
    /// groups is allowed.
    pub fn parse_tuple(text: &str) -> Result<Self, SigmaParseError> {
        let mut groups = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(SigmaParseError(format!(
                    "expected `(` to open a coefficient, found `{rest}`"
                )));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| SigmaParseError(format!("unclosed `(` in `{rest}`")))?;
            let group = &rest[..=close];
            groups.push(
                group
                    .parse::<GaussianRational>()
                    .map_err(|e| SigmaParseError(format!("in `{group}`: {e}")))?,
            );
            rest = rest[close + 1..].trim_start();
        }
        if groups.len() != 5 {
            return Err(SigmaParseError(format!(
                "expected 5 coefficients, found {}",
                groups.len()
            )));
        }
        let mut it = groups.into_iter();
        Ok(SigmaCoefficients {
            s12: it.next().unwrap(),
            s11b: it.next().unwrap(),
            s12b: it.next().unwrap(),
            s21b: it.next().unwrap(),
            s22b: it.next().unwrap(),
        })
    }

    /// Extract σ from a presentation of the expected shape: n = 3,
    /// dφ¹ = dφ² = 0, and dφ³ supported on the five allowed monomials.
    pub fn from_presentation(pres: &Presentation) -> Option<Self> {
        if pres.n() != 3 || !pres.diff(1).is_zero() || !pres.diff(2).is_zero() {
            return None;
        }
        let allowed = [
            Monomial::from_indices(&[1, 2], &[]),
            Monomial::from_indices(&[1], &[1]),
            Monomial::from_indices(&[1], &[2]),
            Monomial::from_indices(&[2], &[1]),
            Monomial::from_indices(&[2], &[2]),
        ];
        let d3 = pres.diff(3);
        if d3.terms().any(|(mono, _)| !allowed.contains(mono)) {
            return None;
        }
        Some(SigmaCoefficients {
            s12: d3.coefficient(&allowed[0]),
            s11b: d3.coefficient(&allowed[1]),
            s12b: d3.coefficient(&allowed[2]),
            s21b: d3.coefficient(&allowed[3]),
            s22b: d3.coefficient(&allowed[4]),
        })
    }

    /// The presentation with these structure coefficients.
    pub fn to_presentation(&self) -> Presentation {
        let mut d3 = Form::zero();
        d3.add_term(self.s12.clone(), Monomial::from_indices(&[1, 2], &[]));
        d3.add_term(self.s11b.clone(), Monomial::from_indices(&[1], &[1]));
        d3.add_term(self.s12b.clone(), Monomial::from_indices(&[1], &[2]));
        d3.add_term(self.s21b.clone(), Monomial::from_indices(&[2], &[1]));
        d3.add_term(self.s22b.clone(), Monomial::from_indices(&[2], &[2]));
        Presentation::new(3, None, vec![Form::zero(), Form::zero(), d3])
            .expect("sigma coefficients always give a well-formed presentation")
    }
}

impl fmt::Display for SigmaCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}{}{}",
            self.s12, self.s11b, self.s12b, self.s21b, self.s22b
        )
    }
}

/// A deformation parameter t = (t11, t12, t21, t22, t31, t32).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationParameter {
    pub t11: GaussianRational,
    pub t12: GaussianRational,
    pub t21: GaussianRational,
    pub t22: GaussianRational,
    pub t31: GaussianRational,
    pub t32: GaussianRational,
}

impl DeformationParameter {
    pub fn zero() -> Self {
        DeformationParameter {
            t11: GaussianRational::zero(),
            t12: GaussianRational::zero(),
            t21: GaussianRational::zero(),
            t22: GaussianRational::zero(),
            t31: GaussianRational::zero(),
            t32: GaussianRational::zero(),
        }
    }

    /// D(t) = t11·t22 − t12·t21, the discriminant separating (ii) from (iii)
    /// among parameters with some mixed coefficient nonzero.
    pub fn determinant(&self) -> GaussianRational {
        &self.t11 * &self.t22 - &self.t12 * &self.t21
    }
}

/// First-order (in t) structure coefficients of the deformed coframe:
/// σ ≈ (−1, t21, t22, −t11, −t12). This is an approximation valid near
/// t = 0 — exact classification of a given deformation needs its exact σ.
pub fn first_order_sigma(t: &DeformationParameter) -> SigmaCoefficients {
    SigmaCoefficients {
        s12: -GaussianRational::from_integer(1),
        s11b: t.t21.clone(),
        s12b: t.t22.clone(),
        s21b: -t.t11.clone(),
        s22b: -t.t12.clone(),
    }
}

/// The five classes distinguished by the Bott-Chern tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeformationClass {
    I,
    IIa,
    IIb,
    IIIa,
    IIIb,
}

impl fmt::Display for DeformationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeformationClass::I => "(i)",
            DeformationClass::IIa => "(ii.a)",
            DeformationClass::IIb => "(ii.b)",
            DeformationClass::IIIa => "(iii.a)",
            DeformationClass::IIIb => "(iii.b)",
        })
    }
}

/// Class together with the invariants that decided it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: DeformationClass,
    pub delta: GaussianRational,
    pub rank_s: usize,
}

/// Classify structure coefficients: (i) iff all mixed σ vanish, otherwise
/// δ = 0 → (ii) and δ ≠ 0 → (iii), with subclass a/b by rank S = 1/2.
pub fn classify_deformation(sigma: &SigmaCoefficients) -> Classification {
    let mixed_zero = sigma.s11b.is_zero()
        && sigma.s12b.is_zero()
        && sigma.s21b.is_zero()
        && sigma.s22b.is_zero();
    let delta = &sigma.s21b * &sigma.s12b - &sigma.s11b * &sigma.s22b;
    let s = Matrix::from_rows(vec![
        vec![
            sigma.s11b.conj(),
            sigma.s22b.conj(),
            sigma.s12b.conj(),
            sigma.s21b.conj(),
        ],
        vec![
            sigma.s11b.clone(),
            sigma.s22b.clone(),
            sigma.s21b.clone(),
            sigma.s12b.clone(),
        ],
    ]);
    let rank_s = s.rank();
    let class = if mixed_zero {
        DeformationClass::I
    } else if delta.is_zero() {
        if rank_s == 1 {
            DeformationClass::IIa
        } else {
            DeformationClass::IIb
        }
    } else if rank_s == 1 {
        DeformationClass::IIIa
    } else {
        DeformationClass::IIIb
    };
    Classification {
        class,
        delta,
        rank_s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::bott_chern;
    use crate::structure::parse;

    fn sigma(text: &str) -> SigmaCoefficients {
        SigmaCoefficients::parse_tuple(text).unwrap()
    }

    #[test]
    fn classification_of_reference_tuples() {
        let cases = [
            ("(-1, 0)(0, 0)(0, 0)(0, 0)(0, 0)", DeformationClass::I),
            ("(-1, 0)(1, 0)(0, 0)(0, 0)(0, 0)", DeformationClass::IIa),
            ("(-1, 0)(1, 0)(0, 0)(0, 1)(0, 0)", DeformationClass::IIb),
            ("(-1, 0)(0, 0)(1, 0)(1, 0)(0, 0)", DeformationClass::IIIa),
            ("(-1, 0)(0, 0)(1, 0)(0, 2)(0, 0)", DeformationClass::IIIb),
        ];
        for (text, expected) in cases {
            assert_eq!(classify_deformation(&sigma(text)).class, expected, "{text}");
        }
    }

    #[test]
    fn classification_invariants_are_reported() {
        let c = classify_deformation(&sigma("(-1, 0)(1, 0)(0, 0)(0, 0)(0, 0)"));
        assert_eq!(c.class, DeformationClass::IIa);
        assert!(c.delta.is_zero());
        assert_eq!(c.rank_s, 1);

        let c = classify_deformation(&sigma("(-1, 0)(0, 0)(1/2, 0)(1/4, 0)(0, 0)"));
        assert_eq!(c.class, DeformationClass::IIIb);
        assert_eq!(c.delta, "(1/8, 0)".parse().unwrap());
        assert_eq!(c.rank_s, 2);
    }

    #[test]
    fn corrected_witness_tuples_classify_correctly() {
        let cases = [
            ("(-1, 0)(1, 0)(0, 0)(0, 0)(0, 0)", DeformationClass::IIa),
            ("(-1, 0)(1/2, 0)(0, 0)(0, 1/2)(0, 0)", DeformationClass::IIb),
            (
                "(-1, 0)(0, 0)(1/2, 0)(1/2, 0)(0, 0)",
                DeformationClass::IIIa,
            ),
            (
                "(-1, 0)(0, 0)(1/2, 0)(1/4, 0)(0, 0)",
                DeformationClass::IIIb,
            ),
        ];
        for (text, expected) in cases {
            assert_eq!(classify_deformation(&sigma(text)).class, expected, "{text}");
        }
    }

    #[test]
    fn first_order_sigma_at_zero_is_class_i() {
        let s = first_order_sigma(&DeformationParameter::zero());
        assert_eq!(s, sigma("(-1, 0)(0, 0)(0, 0)(0, 0)(0, 0)"));
        assert_eq!(classify_deformation(&s).class, DeformationClass::I);
    }

    #[test]
    fn first_order_sigma_along_t21_is_class_ii_a() {
        let mut t = DeformationParameter::zero();
        t.t21 = GaussianRational::from_integer(1);
        let s = first_order_sigma(&t);
        assert_eq!(s, sigma("(-1, 0)(1, 0)(0, 0)(0, 0)(0, 0)"));
        assert_eq!(classify_deformation(&s).class, DeformationClass::IIa);
    }

    #[test]
    fn determinant_of_the_identity_block_is_one() {
        let mut t = DeformationParameter::zero();
        t.t11 = GaussianRational::from_integer(1);
        t.t22 = GaussianRational::from_integer(1);
        assert_eq!(t.determinant(), GaussianRational::from_integer(1));
        assert!(DeformationParameter::zero().determinant().is_zero());
    }

    #[test]
    fn tuple_parsing_round_trips_and_rejects_malformed_text() {
        let text = "(-1, 0)(1/2, 0)(0, 0)(0, 1/2)(0, 0)";
        let s = sigma(text);
        assert_eq!(s.to_string().replace(") (", ")("), text);
        assert_eq!(SigmaCoefficients::parse_tuple(&s.to_string()).unwrap(), s);
        // whitespace between groups is fine
        assert_eq!(
            SigmaCoefficients::parse_tuple("(-1, 0) (1/2, 0) (0, 0) (0, 1/2) (0, 0)").unwrap(),
            s
        );
        assert!(SigmaCoefficients::parse_tuple("(-1, 0)(1, 0)").is_err());
        assert!(SigmaCoefficients::parse_tuple("(-1, 0)(1, 0)(0,0)(0,0)(0,0)x").is_err());
        assert!(SigmaCoefficients::parse_tuple("(-1, 0)(1, 0)(0,0)(0,0)(bad)").is_err());
        assert!(SigmaCoefficients::parse_tuple("").is_err());
    }

    #[test]
    fn presentation_round_trip() {
        let s = sigma("(-1, 0)(1/2, 0)(0, 0)(0, 1/2)(0, 0)");
        let pres = s.to_presentation();
        assert_eq!(SigmaCoefficients::from_presentation(&pres), Some(s));
        assert!(pres.validate().is_valid());
    }

    #[test]
    fn from_presentation_rejects_other_shapes() {
        let solvable = parse("ndim 3\nd f1 = 0\nd f2 = 0\nd f3 = (1, 0) f1^f3\n").unwrap();
        assert_eq!(SigmaCoefficients::from_presentation(&solvable), None);
        let wrong_n = parse("ndim 2\nd f1 = 0\nd f2 = 0\n").unwrap();
        assert_eq!(SigmaCoefficients::from_presentation(&wrong_n), None);
        let d1_nonzero = parse("ndim 3\nd f1 = (1, 0) f2^f3\nd f2 = 0\nd f3 = 0\n").unwrap();
        assert_eq!(SigmaCoefficients::from_presentation(&d1_nonzero), None);
    }

    #[test]
    fn bott_chern_two_zero_detects_the_mixed_rows() {
        // h^{2,0}_BC = 3 − rank of the ∂̄ matrix on Λ^{2,0}, whose nonzero
        // entries are exactly the mixed σ. The reference tuples give
        // 3, 2, 2, 1, 1 across the five classes.
        let expected = [
            ("(-1, 0)(0, 0)(0, 0)(0, 0)(0, 0)", 3),
            ("(-1, 0)(1, 0)(0, 0)(0, 0)(0, 0)", 2),
            ("(-1, 0)(1/2, 0)(0, 0)(0, 1/2)(0, 0)", 2),
            ("(-1, 0)(0, 0)(1/2, 0)(1/2, 0)(0, 0)", 1),
            ("(-1, 0)(0, 0)(1/2, 0)(1/4, 0)(0, 0)", 1),
        ];
        for (text, h) in expected {
            let diffs = sigma(text).to_presentation().differentials();
            assert_eq!(bott_chern(&diffs, 2, 0), h, "{text}");
        }
    }
}
