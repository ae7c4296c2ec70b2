//! Harmonic representatives: each cohomology space as the kernel of a
//! stacked first-order system.
//!
//! The monomial basis of every Λ^{p,q} is declared orthonormal for the
//! Hermitian inner product, so the adjoint of an operator matrix is its
//! conjugate transpose, and the harmonic space of each theory is the joint
//! kernel of its defining conditions:
//!
//! - de Rham:        du = 0,  dᴴu = 0
//! - Dolbeault:      ∂̄u = 0,  ∂̄ᴴu = 0
//! - conjugate:      ∂u = 0,  ∂ᴴu = 0
//! - Bott-Chern:     ∂u = 0,  ∂̄u = 0,  (∂∂̄)ᴴu = 0
//! - Aeppli:         ∂∂̄u = 0, ∂ᴴu = 0, ∂̄ᴴu = 0
//!
//! These are the kernels of the corresponding fourth-order (respectively
//! second-order) Laplacians: for a positive semi-definite Hermitian form
//! over ℚ(i), ⟨Δu, u⟩ = 0 forces each summand to vanish, an argument that
//! needs no analysis and survives verbatim in exact arithmetic. The
//! dimension of each kernel therefore equals the quotient dimension, which
//! the cross-check report verifies entry by entry.

use num_traits::Zero;

use crate::cohomology::{TableKey, Theory};
use crate::exterior::Form;
use crate::linalg::Matrix;
use crate::scalars::GaussianRational;
use crate::structure::DifferentialMatrices;

/// A basis of harmonic representatives for one theory at one key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicBasis {
    pub theory: Theory,
    pub key: TableKey,
    pub forms: Vec<Form>,
}

/// The stacked system whose kernel is the harmonic space.
pub fn harmonic_system(diffs: &DifferentialMatrices, theory: Theory, key: TableKey) -> Matrix {
    match (theory, key) {
        (Theory::DeRham, TableKey::Degree(k)) => {
            let k = k as i64;
            diffs
                .d_from(k)
                .stack_vertical(&diffs.d_from(k - 1).hermitian_transpose())
        }
        (Theory::Dolbeault, TableKey::Bidegree(p, q)) => {
            let (p, q) = (p as i64, q as i64);
            diffs
                .delbar_from(p, q)
                .stack_vertical(&diffs.delbar_from(p, q - 1).hermitian_transpose())
        }
        (Theory::DolbeaultConj, TableKey::Bidegree(p, q)) => {
            let (p, q) = (p as i64, q as i64);
            diffs
                .del_from(p, q)
                .stack_vertical(&diffs.del_from(p - 1, q).hermitian_transpose())
        }
        (Theory::BottChern, TableKey::Bidegree(p, q)) => {
            let (p, q) = (p as i64, q as i64);
            let del_delbar_in = diffs
                .del_from(p - 1, q)
                .mul(&diffs.delbar_from(p - 1, q - 1));
            diffs
                .del_from(p, q)
                .stack_vertical(&diffs.delbar_from(p, q))
                .stack_vertical(&del_delbar_in.hermitian_transpose())
        }
        (Theory::Aeppli, TableKey::Bidegree(p, q)) => {
            let (p, q) = (p as i64, q as i64);
            let del_delbar_out = diffs.del_from(p, q + 1).mul(&diffs.delbar_from(p, q));
            del_delbar_out
                .stack_vertical(&diffs.del_from(p - 1, q).hermitian_transpose())
                .stack_vertical(&diffs.delbar_from(p, q - 1).hermitian_transpose())
        }
        (theory, key) => panic!("key {key} does not index the {theory} table"),
    }
}

/// Harmonic-space dimension (kernel nullity of the stacked system).
pub fn harmonic_dimension(diffs: &DifferentialMatrices, theory: Theory, key: TableKey) -> usize {
    let system = harmonic_system(diffs, theory, key);
    system.cols() - system.rank()
}

/// Coordinates of the harmonic basis in the canonical monomial basis of the
/// indexed space (deterministic: free-variable order, leading coefficient 1).
pub fn harmonic_vectors(
    diffs: &DifferentialMatrices,
    theory: Theory,
    key: TableKey,
) -> Vec<Vec<GaussianRational>> {
    harmonic_system(diffs, theory, key).kernel_basis()
}

/// The harmonic basis as explicit forms.
pub fn harmonic_basis(
    diffs: &DifferentialMatrices,
    theory: Theory,
    key: TableKey,
) -> HarmonicBasis {
    let monomials: Vec<_> = match key {
        TableKey::Degree(k) => diffs.total_basis(k).to_vec(),
        TableKey::Bidegree(p, q) => diffs.basis_of(p, q).to_vec(),
    };
    let forms = harmonic_vectors(diffs, theory, key)
        .into_iter()
        .map(|coords| {
            let mut form = Form::zero();
            for (coeff, mono) in coords.into_iter().zip(&monomials) {
                if !coeff.is_zero() {
                    form.add_term(coeff, *mono);
                }
            }
            form
        })
        .collect();
    HarmonicBasis { theory, key, forms }
}
