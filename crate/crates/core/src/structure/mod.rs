//! Lie algebra presentations by complex structure equations.
//!
//! A presentation fixes a complex dimension n and, for each co-frame
//! generator φ^j of Λ^{1,0}, its differential
//! dφ^j = Σ_{h<k} A^j_{hk} φ^h∧φ^k + Σ_{h,k} B^j_{hk} φ^h∧φ̄^k — pure
//! bidegrees (2,0) and (1,1) only, which is exactly integrability of the
//! complex structure. The differentials of the conjugate generators follow
//! by reality: dφ̄^j = conjugate(dφ^j). From this the module derives the
//! full Chevalley-Eilenberg double complex: the matrices of ∂ and ∂̄ on
//! every Λ^{p,q} and of d on every total degree, validation (d² = 0, i.e.
//! Jacobi; nilpotency via the lower central series), and structural flags.

mod parse;

pub use parse::{parse, ParseError};

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::exterior::{basis, Form, Monomial};
use crate::linalg::Matrix;
use crate::scalars::GaussianRational;

/// Errors constructing a presentation programmatically.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("complex dimension must be between 1 and 8, got {0}")]
    DimensionOutOfRange(u32),
    #[error("expected {expected} generator differentials, got {got}")]
    WrongGeneratorCount { expected: u32, got: usize },
    #[error(
        "dφ^{j} contains a term of bidegree ({p}, {q}); only (2,0) and (1,1) terms are allowed"
    )]
    InvalidTermBidegree { j: u32, p: u32, q: u32 },
    #[error("dφ^{j} references generator index {index}, out of range for n = {n}")]
    GeneratorIndexOutOfRange { j: u32, index: u32, n: u32 },
}

/// A Lie algebra with integrable complex structure, presented by the
/// differentials of its (1,0) co-frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    n: u32,
    label: Option<String>,
    diff: Vec<Form>,
}

impl Presentation {
    /// Build and shape-check a presentation: n ∈ {1…8}, one differential per
    /// generator, every term of bidegree (2,0) or (1,1) with indices ≤ n.
    pub fn new(n: u32, label: Option<String>, diff: Vec<Form>) -> Result<Self, StructureError> {
        if !(1..=8).contains(&n) {
            return Err(StructureError::DimensionOutOfRange(n));
        }
        if diff.len() != n as usize {
            return Err(StructureError::WrongGeneratorCount {
                expected: n,
                got: diff.len(),
            });
        }
        for (idx, form) in diff.iter().enumerate() {
            let j = idx as u32 + 1;
            for (mono, _) in form.terms() {
                let (p, q) = mono.bidegree();
                if (p, q) != (2, 0) && (p, q) != (1, 1) {
                    return Err(StructureError::InvalidTermBidegree { j, p, q });
                }
                for index in mono.holo_indices().into_iter().chain(mono.anti_indices()) {
                    if index > n {
                        return Err(StructureError::GeneratorIndexOutOfRange { j, index, n });
                    }
                }
            }
        }
        Ok(Presentation { n, label, diff })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// dφ^j (1-based).
    pub fn diff(&self, j: u32) -> &Form {
        &self.diff[j as usize - 1]
    }

    /// dφ̄^j = conjugate(dφ^j) (1-based).
    pub fn diff_conjugate(&self, j: u32) -> Form {
        self.diff[j as usize - 1].conjugate()
    }

    /// d on a single monomial by the Leibniz rule: the generator in position
    /// k (canonical order) contributes (−1)^{k−1} dg_k ∧ (rest); dg_k has
    /// even degree, so pulling it to the front costs no extra sign.
    pub fn d_monomial(&self, mono: &Monomial) -> Form {
        let mut out = Form::zero();
        let mut negate = false;
        for j in mono.holo_indices() {
            let term = self
                .diff(j)
                .wedge(&Form::from_monomial(mono.remove_holo(j)));
            out = if negate { &out - &term } else { &out + &term };
            negate = !negate;
        }
        for j in mono.anti_indices() {
            let term = self
                .diff_conjugate(j)
                .wedge(&Form::from_monomial(mono.remove_anti(j)));
            out = if negate { &out - &term } else { &out + &term };
            negate = !negate;
        }
        out
    }

    /// The full differential d, extended linearly.
    pub fn d(&self, form: &Form) -> Form {
        let mut out = Form::zero();
        for (mono, coeff) in form.terms() {
            out = &out + &self.d_monomial(mono).scale(coeff);
        }
        out
    }

    /// ∂: the (p+1,q) component of d, applied per (p,q) term.
    pub fn del(&self, form: &Form) -> Form {
        let mut out = Form::zero();
        for (mono, coeff) in form.terms() {
            let (p, q) = mono.bidegree();
            out = &out + &self.d_monomial(mono).component(p + 1, q).scale(coeff);
        }
        out
    }

    /// ∂̄: the (p,q+1) component of d, applied per (p,q) term.
    pub fn delbar(&self, form: &Form) -> Form {
        let mut out = Form::zero();
        for (mono, coeff) in form.terms() {
            let (p, q) = mono.bidegree();
            out = &out + &self.d_monomial(mono).component(p, q + 1).scale(coeff);
        }
        out
    }

    /// Structural flags, decidable from the differentials alone.
    pub fn flags(&self) -> StructureFlags {
        let mut parallelizable = true;
        let mut abelian = true;
        let mut nilpotent_coframe = true;
        for j in 1..=self.n {
            for (mono, _) in self.diff(j).terms() {
                match mono.bidegree() {
                    (2, 0) => abelian = false,
                    (1, 1) => parallelizable = false,
                    _ => unreachable!("presentation terms are shape-checked"),
                }
                let max_index = mono
                    .holo_indices()
                    .into_iter()
                    .chain(mono.anti_indices())
                    .max()
                    .expect("degree-2 monomial has indices");
                if max_index >= j {
                    nilpotent_coframe = false;
                }
            }
        }
        StructureFlags {
            holomorphically_parallelizable: parallelizable,
            abelian,
            nilpotent_coframe,
        }
    }

    /// Validation report: d² = 0 per generator (Jacobi), integrability, and
    /// nilpotency of the underlying Lie algebra via its lower central series.
    pub fn validate(&self) -> ValidationReport {
        let d_squared_failures: Vec<u32> = (1..=self.n)
            .filter(|&j| !self.d(self.diff(j)).is_zero())
            .collect();
        let integrable = (1..=self.n).all(|j| {
            self.diff(j)
                .terms()
                .all(|(m, _)| matches!(m.bidegree(), (2, 0) | (1, 1)))
        });
        let (nilpotent, step, lower_central_series_dims) = self.lower_central_series();
        ValidationReport {
            d_squared_failures,
            integrable,
            nilpotent,
            step,
            lower_central_series_dims,
            flags: self.flags(),
        }
    }

    /// Bracket of the u-th and v-th basis vectors of the complexified Lie
    /// algebra (slots 0…n−1 = E_j dual to φ^j, slots n…2n−1 = Ē_j dual to
    /// φ̄^j), reconstructed from dα(x,y) = −α([x,y]).
    fn basis_bracket(&self, u: usize, v: usize) -> Vec<GaussianRational> {
        let n = self.n as usize;
        let mut out = vec![GaussianRational::zero(); 2 * n];
        if u == v {
            return out;
        }
        if u > v {
            let mut flipped = self.basis_bracket(v, u);
            for entry in &mut flipped {
                *entry = -entry.clone();
            }
            return flipped;
        }
        let index = |slot: usize| (slot < n, slot % n + 1);
        let (u_holo, ju) = index(u);
        let (v_holo, jv) = index(v);
        let mono = match (u_holo, v_holo) {
            (true, true) => Monomial::from_indices(&[ju as u32, jv as u32], &[]),
            (true, false) => Monomial::from_indices(&[ju as u32], &[jv as u32]),
            (false, false) => Monomial::from_indices(&[], &[ju as u32, jv as u32]),
            (false, true) => unreachable!("slots are scanned in canonical order"),
        };
        for j in 1..=self.n {
            let holo_coeff = self.diff(j).coefficient(&mono);
            if !holo_coeff.is_zero() {
                out[j as usize - 1] = -holo_coeff;
            }
            let anti_coeff = self.diff_conjugate(j).coefficient(&mono);
            if !anti_coeff.is_zero() {
                out[self.n as usize + j as usize - 1] = -anti_coeff;
            }
        }
        out
    }

    /// Lower central series g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ … of the complexified
    /// algebra; returns (nilpotent, step, dimension sequence). The series is
    /// decreasing, so a repeated nonzero dimension means it is stationary.
    fn lower_central_series(&self) -> (bool, Option<u32>, Vec<usize>) {
        let two_n = 2 * self.n as usize;
        let mut dims = vec![two_n];
        let mut current: Vec<Vec<GaussianRational>> = (0..two_n)
            .map(|i| {
                let mut row = vec![GaussianRational::zero(); two_n];
                row[i] = num_traits::One::one();
                row
            })
            .collect();
        loop {
            let mut generated: Vec<Vec<GaussianRational>> = Vec::new();
            for u in 0..two_n {
                for w in &current {
                    let mut image = vec![GaussianRational::zero(); two_n];
                    for (v, coeff) in w.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        for (slot, entry) in self.basis_bracket(u, v).into_iter().enumerate() {
                            if !entry.is_zero() {
                                image[slot] = &image[slot] + &(coeff * &entry);
                            }
                        }
                    }
                    if image.iter().any(|e| !e.is_zero()) {
                        generated.push(image);
                    }
                }
            }
            let (reduced, pivots) = Matrix::from_rows(generated).rref();
            let new_dim = pivots.len();
            dims.push(new_dim);
            if new_dim == 0 {
                let step = dims.len() as u32 - 1;
                return (true, Some(step), dims);
            }
            if new_dim == dims[dims.len() - 2] {
                return (false, None, dims);
            }
            current = (0..new_dim)
                .map(|r| {
                    (0..reduced.cols())
                        .map(|c| reduced.get(r, c).clone())
                        .collect()
                })
                .collect();
        }
    }

    /// Assemble the matrices of ∂, ∂̄ on every bidegree and d on every total
    /// degree, in the canonical basis order.
    pub fn differentials(&self) -> DifferentialMatrices {
        let n = self.n;
        let mut bases: Vec<Vec<Vec<Monomial>>> = Vec::with_capacity(n as usize + 1);
        for p in 0..=n {
            let mut row = Vec::with_capacity(n as usize + 1);
            for q in 0..=n {
                row.push(basis(n, p, q).expect("bidegree in range"));
            }
            bases.push(row);
        }
        let empty: Vec<Monomial> = Vec::new();
        let mut del = Vec::with_capacity(n as usize + 1);
        let mut delbar = Vec::with_capacity(n as usize + 1);
        for p in 0..=n {
            let mut del_row = Vec::with_capacity(n as usize + 1);
            let mut delbar_row = Vec::with_capacity(n as usize + 1);
            for q in 0..=n {
                let domain = &bases[p as usize][q as usize];
                let del_codomain = if p < n {
                    &bases[p as usize + 1][q as usize]
                } else {
                    &empty
                };
                let delbar_codomain = if q < n {
                    &bases[p as usize][q as usize + 1]
                } else {
                    &empty
                };
                del_row.push(matrix_of(
                    |m| self.del(&Form::from_monomial(*m)),
                    domain,
                    del_codomain,
                ));
                delbar_row.push(matrix_of(
                    |m| self.delbar(&Form::from_monomial(*m)),
                    domain,
                    delbar_codomain,
                ));
            }
            del.push(del_row);
            delbar.push(delbar_row);
        }
        // Total-degree bases: the (p,q) blocks with p + q = k, p descending.
        let mut total_bases: Vec<Vec<Monomial>> = Vec::with_capacity(2 * n as usize + 1);
        for k in 0..=2 * n {
            let mut block = Vec::new();
            for p in (0..=k.min(n)).rev() {
                let q = k - p;
                if q <= n {
                    block.extend(bases[p as usize][q as usize].iter().copied());
                }
            }
            total_bases.push(block);
        }
        let mut d_total = Vec::with_capacity(2 * n as usize + 1);
        for k in 0..=2 * n as usize {
            let codomain = if k < 2 * n as usize {
                &total_bases[k + 1]
            } else {
                &empty
            };
            d_total.push(matrix_of(
                |m| self.d(&Form::from_monomial(*m)),
                &total_bases[k],
                codomain,
            ));
        }
        DifferentialMatrices {
            n,
            bases,
            del,
            delbar,
            total_bases,
            d_total,
        }
    }
}

/// Matrix of a linear operator in given domain/codomain monomial bases
/// (columns = images of the domain basis).
fn matrix_of<F: Fn(&Monomial) -> Form>(
    op: F,
    domain: &[Monomial],
    codomain: &[Monomial],
) -> Matrix {
    let index: BTreeMap<Monomial, usize> =
        codomain.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut mat = Matrix::zeros(codomain.len(), domain.len());
    for (c, mono) in domain.iter().enumerate() {
        let image = op(mono);
        for (term, coeff) in image.terms() {
            let r = *index
                .get(term)
                .unwrap_or_else(|| panic!("image term {term} outside the codomain basis"));
            mat.set(r, c, coeff.clone());
        }
    }
    mat
}

/// Structural flags decidable from the structure equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    /// Every dφ^j is pure (2,0) (all B = 0).
    pub holomorphically_parallelizable: bool,
    /// Every dφ^j is pure (1,1) (all A = 0).
    pub abelian: bool,
    /// Triangularity in the supplied co-frame order: every index appearing
    /// in dφ^j is < j (checked on the given order only, not up to
    /// reordering).
    pub nilpotent_coframe: bool,
}

/// Result of validating a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Generators j with d(dφ^j) ≠ 0 (Jacobi failures).
    pub d_squared_failures: Vec<u32>,
    /// No (0,2) terms in any dφ^j.
    pub integrable: bool,
    /// Lower central series of the complexified algebra reaches zero.
    pub nilpotent: bool,
    /// Nilpotency step s (g^s = 0, g^{s−1} ≠ 0), when nilpotent.
    pub step: Option<u32>,
    /// Dimension sequence of g = g^0 ⊇ g^1 ⊇ … as computed.
    pub lower_central_series_dims: Vec<usize>,
    pub flags: StructureFlags,
}

impl ValidationReport {
    /// Valid means: Jacobi holds and the structure is integrable.
    /// Nilpotency is reported, not required.
    pub fn is_valid(&self) -> bool {
        self.d_squared_failures.is_empty() && self.integrable
    }
}

/// The matrices of ∂, ∂̄ per bidegree and d per total degree, with their
/// basis conventions.
#[derive(Debug, Clone)]
pub struct DifferentialMatrices {
    n: u32,
    bases: Vec<Vec<Vec<Monomial>>>,
    del: Vec<Vec<Matrix>>,
    delbar: Vec<Vec<Matrix>>,
    total_bases: Vec<Vec<Monomial>>,
    d_total: Vec<Matrix>,
}

impl DifferentialMatrices {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// dim Λ^{p,q}, with Λ^{p,q} = 0 outside 0 ≤ p,q ≤ n.
    pub fn dim(&self, p: i64, q: i64) -> usize {
        if p < 0 || q < 0 || p > self.n as i64 || q > self.n as i64 {
            return 0;
        }
        self.bases[p as usize][q as usize].len()
    }

    /// dim Λ^k (total degree), zero outside 0 ≤ k ≤ 2n.
    pub fn total_dim(&self, k: i64) -> usize {
        if k < 0 || k > 2 * self.n as i64 {
            return 0;
        }
        self.total_bases[k as usize].len()
    }

    /// The ordered monomial basis of Λ^{p,q} (in range).
    pub fn basis_of(&self, p: u32, q: u32) -> &[Monomial] {
        &self.bases[p as usize][q as usize]
    }

    /// The ordered basis of Λ^k: the (p,q) blocks with p+q = k, p descending.
    pub fn total_basis(&self, k: u32) -> &[Monomial] {
        &self.total_bases[k as usize]
    }

    /// Matrix of ∂: Λ^{p,q} → Λ^{p+1,q}; zero-dimensional shapes outside the
    /// range, so compositions and concatenations chain without special cases.
    pub fn del_from(&self, p: i64, q: i64) -> Matrix {
        if p < 0 || q < 0 || p > self.n as i64 || q > self.n as i64 {
            return Matrix::zeros(self.dim(p + 1, q), 0);
        }
        self.del[p as usize][q as usize].clone()
    }

    /// Matrix of ∂̄: Λ^{p,q} → Λ^{p,q+1}; zero-dimensional out of range.
    pub fn delbar_from(&self, p: i64, q: i64) -> Matrix {
        if p < 0 || q < 0 || p > self.n as i64 || q > self.n as i64 {
            return Matrix::zeros(self.dim(p, q + 1), 0);
        }
        self.delbar[p as usize][q as usize].clone()
    }

    /// Matrix of d: Λ^k → Λ^{k+1}; zero-dimensional out of range.
    pub fn d_from(&self, k: i64) -> Matrix {
        if k < 0 || k > 2 * self.n as i64 {
            return Matrix::zeros(self.total_dim(k + 1), 0);
        }
        self.d_total[k as usize].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(re: i64) -> GaussianRational {
        GaussianRational::from_integer(re)
    }

    fn iwasawa() -> Presentation {
        let d3 = Form::from_term(coeff(-1), Monomial::from_indices(&[1, 2], &[]));
        Presentation::new(
            3,
            Some("iwasawa".into()),
            vec![Form::zero(), Form::zero(), d3],
        )
        .unwrap()
    }

    fn torus() -> Presentation {
        Presentation::new(3, None, vec![Form::zero(), Form::zero(), Form::zero()]).unwrap()
    }

    fn solvable() -> Presentation {
        let d3 = Form::from_term(coeff(1), Monomial::from_indices(&[1, 3], &[]));
        Presentation::new(3, None, vec![Form::zero(), Form::zero(), d3]).unwrap()
    }

    #[test]
    fn iwasawa_is_valid_and_two_step_nilpotent() {
        let report = iwasawa().validate();
        assert!(report.is_valid());
        assert!(report.nilpotent);
        assert_eq!(report.step, Some(2));
        assert_eq!(report.lower_central_series_dims, vec![6, 2, 0]);
    }

    #[test]
    fn torus_is_abelian_one_step() {
        let report = torus().validate();
        assert!(report.is_valid());
        assert!(report.nilpotent);
        assert_eq!(report.step, Some(1));
        assert!(report.flags.abelian);
        assert!(report.flags.holomorphically_parallelizable);
        assert!(report.flags.nilpotent_coframe);
    }

    #[test]
    fn triangular_solvable_example_is_valid_but_not_nilpotent() {
        let report = solvable().validate();
        assert!(report.is_valid());
        assert!(!report.nilpotent);
        assert_eq!(report.step, None);
        assert_eq!(report.lower_central_series_dims, vec![6, 2, 2]);
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // dφ¹ = φ¹∧φ², dφ² = φ²∧φ³: d(dφ¹) = dφ¹∧φ² − φ¹∧dφ² = −φ¹∧φ²∧φ³ ≠ 0.
        let d1 = Form::from_term(coeff(1), Monomial::from_indices(&[1, 2], &[]));
        let d2 = Form::from_term(coeff(1), Monomial::from_indices(&[2, 3], &[]));
        let p = Presentation::new(3, None, vec![d1, d2, Form::zero()]).unwrap();
        let report = p.validate();
        assert!(!report.is_valid());
        assert_eq!(report.d_squared_failures, vec![1]);
    }

    #[test]
    fn nilpotent_without_triangular_coframe() {
        // dφ¹ = φ²∧φ³ references indices ≥ 1, so the given-co-frame flag is
        // false, yet the algebra is 2-step nilpotent.
        let d1 = Form::from_term(coeff(1), Monomial::from_indices(&[2, 3], &[]));
        let p = Presentation::new(3, None, vec![d1, Form::zero(), Form::zero()]).unwrap();
        let report = p.validate();
        assert!(report.is_valid());
        assert!(report.nilpotent);
        assert_eq!(report.step, Some(2));
        assert!(!report.flags.nilpotent_coframe);
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        assert_eq!(
            Presentation::new(0, None, vec![]),
            Err(StructureError::DimensionOutOfRange(0))
        );
        assert_eq!(
            Presentation::new(2, None, vec![Form::zero()]),
            Err(StructureError::WrongGeneratorCount {
                expected: 2,
                got: 1
            })
        );
        let bad = Form::from_monomial(Monomial::from_indices(&[], &[1, 2]));
        assert_eq!(
            Presentation::new(2, None, vec![bad, Form::zero()]),
            Err(StructureError::InvalidTermBidegree { j: 1, p: 0, q: 2 })
        );
        let out_of_range = Form::from_monomial(Monomial::from_indices(&[1, 3], &[]));
        assert_eq!(
            Presentation::new(2, None, vec![out_of_range, Form::zero()]),
            Err(StructureError::GeneratorIndexOutOfRange {
                j: 1,
                index: 3,
                n: 2
            })
        );
    }

    #[test]
    fn iwasawa_flags() {
        let flags = iwasawa().flags();
        assert!(flags.holomorphically_parallelizable);
        assert!(!flags.abelian);
        assert!(flags.nilpotent_coframe);
    }

    #[test]
    fn mixed_presentation_is_not_parallelizable() {
        // dφ³ = −φ¹∧φ² + φ¹∧φ̄² + φ²∧φ̄¹ carries a (1,1) part.
        let mut d3 = Form::from_term(coeff(-1), Monomial::from_indices(&[1, 2], &[]));
        d3.add_term(coeff(1), Monomial::from_indices(&[1], &[2]));
        d3.add_term(coeff(1), Monomial::from_indices(&[2], &[1]));
        let p = Presentation::new(3, None, vec![Form::zero(), Form::zero(), d3]).unwrap();
        let flags = p.flags();
        assert!(!flags.holomorphically_parallelizable);
        assert!(!flags.abelian);
        assert!(flags.nilpotent_coframe);
    }

    #[test]
    fn del_and_delbar_on_the_third_generator() {
        let p = iwasawa();
        let phi3 = Form::from_monomial(Monomial::holo_generator(3));
        let expected = Form::from_term(coeff(-1), Monomial::from_indices(&[1, 2], &[]));
        assert_eq!(p.del(&phi3), expected);
        assert!(p.delbar(&phi3).is_zero());
    }

    #[test]
    fn delbar_collects_the_mixed_structure_terms() {
        // dφ³ = −φ¹∧φ² + 1/2 φ¹∧φ̄² + 1/2 φ²∧φ̄¹.
        let half: GaussianRational = "(1/2, 0)".parse().unwrap();
        let mut d3 = Form::from_term(coeff(-1), Monomial::from_indices(&[1, 2], &[]));
        d3.add_term(half.clone(), Monomial::from_indices(&[1], &[2]));
        d3.add_term(half.clone(), Monomial::from_indices(&[2], &[1]));
        let p = Presentation::new(3, None, vec![Form::zero(), Form::zero(), d3]).unwrap();
        let phi3 = Form::from_monomial(Monomial::holo_generator(3));
        let mut expected = Form::zero();
        expected.add_term(half.clone(), Monomial::from_indices(&[1], &[2]));
        expected.add_term(half, Monomial::from_indices(&[2], &[1]));
        assert_eq!(p.delbar(&phi3), expected);
        assert_eq!(
            p.del(&phi3),
            Form::from_term(coeff(-1), Monomial::from_indices(&[1, 2], &[]))
        );
    }

    #[test]
    fn differential_matrices_shapes_and_zero_on_constants() {
        let diffs = iwasawa().differentials();
        assert_eq!(diffs.dim(0, 0), 1);
        assert_eq!(diffs.dim(2, 1), 9);
        assert_eq!(diffs.dim(-1, 0), 0);
        assert_eq!(diffs.dim(4, 0), 0);
        assert!(diffs.del_from(0, 0).is_zero());
        assert!(diffs.delbar_from(0, 0).is_zero());
        // ∂φ³ = −φ¹∧φ²: third column of ∂ on Λ^{1,0} hits the first (2,0)
        // basis monomial φ¹∧φ² with coefficient −1.
        let del10 = diffs.del_from(1, 0);
        assert_eq!(del10.rows(), 3);
        assert_eq!(del10.cols(), 3);
        assert_eq!(*del10.get(0, 2), coeff(-1));
        assert!(diffs.delbar_from(1, 0).is_zero());
    }

    #[test]
    fn differential_identities_hold_for_iwasawa() {
        let diffs = iwasawa().differentials();
        let n = diffs.n() as i64;
        for p in 0..=n {
            for q in 0..=n {
                let del2 = diffs.del_from(p + 1, q).mul(&diffs.del_from(p, q));
                assert!(del2.is_zero(), "∂² ≠ 0 at ({p},{q})");
                let delbar2 = diffs.delbar_from(p, q + 1).mul(&diffs.delbar_from(p, q));
                assert!(delbar2.is_zero(), "∂̄² ≠ 0 at ({p},{q})");
                let anti = diffs.del_from(p, q + 1).mul(&diffs.delbar_from(p, q));
                let other = diffs.delbar_from(p + 1, q).mul(&diffs.del_from(p, q));
                let mut sum = anti.clone();
                for r in 0..sum.rows() {
                    for c in 0..sum.cols() {
                        let v = sum.get(r, c) + other.get(r, c);
                        sum.set(r, c, v);
                    }
                }
                assert!(sum.is_zero(), "∂∂̄ + ∂̄∂ ≠ 0 at ({p},{q})");
            }
        }
    }

    #[test]
    fn total_differential_matches_block_assembly() {
        let p = iwasawa();
        let diffs = p.differentials();
        let n = diffs.n();
        for k in 0..=2 * n {
            let domain_blocks: Vec<(u32, u32)> = (0..=k.min(n))
                .rev()
                .map(|pp| (pp, k - pp))
                .filter(|&(_, qq)| qq <= n)
                .collect();
            let target_blocks: Vec<(u32, u32)> = if k < 2 * n {
                (0..=(k + 1).min(n))
                    .rev()
                    .map(|pp| (pp, k + 1 - pp))
                    .filter(|&(_, qq)| qq <= n)
                    .collect()
            } else {
                Vec::new()
            };
            let row_offset = |block: (u32, u32)| -> Option<usize> {
                let mut offset = 0;
                for &b in &target_blocks {
                    if b == block {
                        return Some(offset);
                    }
                    offset += diffs.dim(b.0 as i64, b.1 as i64);
                }
                None
            };
            let rows = diffs.total_dim(k as i64 + 1);
            let cols = diffs.total_dim(k as i64);
            let mut assembled = Matrix::zeros(rows, cols);
            let mut col_offset = 0;
            for &(pp, qq) in &domain_blocks {
                let del = diffs.del_from(pp as i64, qq as i64);
                if let Some(ro) = row_offset((pp + 1, qq)) {
                    for r in 0..del.rows() {
                        for c in 0..del.cols() {
                            assembled.set(ro + r, col_offset + c, del.get(r, c).clone());
                        }
                    }
                }
                let delbar = diffs.delbar_from(pp as i64, qq as i64);
                if let Some(ro) = row_offset((pp, qq + 1)) {
                    for r in 0..delbar.rows() {
                        for c in 0..delbar.cols() {
                            assembled.set(ro + r, col_offset + c, delbar.get(r, c).clone());
                        }
                    }
                }
                col_offset += diffs.dim(pp as i64, qq as i64);
            }
            assert_eq!(
                diffs.d_from(k as i64),
                assembled,
                "block assembly differs at k={k}"
            );
        }
    }

    #[test]
    fn d_commutes_with_conjugation_on_a_sample_form() {
        let p = iwasawa();
        let mut form = Form::from_term(GaussianRational::i(), Monomial::from_indices(&[3], &[1]));
        form.add_term(coeff(2), Monomial::from_indices(&[1, 3], &[2]));
        assert_eq!(p.d(&form.conjugate()), p.d(&form).conjugate());
    }

    #[test]
    fn leibniz_rule_on_a_sample_pair() {
        let p = iwasawa();
        let a = Form::from_monomial(Monomial::from_indices(&[3], &[]));
        let b = Form::from_monomial(Monomial::from_indices(&[], &[3]));
        // deg a = 1: d(a∧b) = da∧b − a∧db.
        let lhs = p.d(&a.wedge(&b));
        let rhs = &p.d(&a).wedge(&b) - &a.wedge(&p.d(&b));
        assert_eq!(lhs, rhs);
    }
}
