//! Structure reports on top of the raw tables: the quotient/harmonic
//! cross-check, the classical duality families, the ranks of the natural
//! maps out of Bott-Chern and into Aeppli, and the ∂∂̄-lemma scan.
//!
//! The natural maps are induced by the identity on forms:
//! H_BC → H_∂̄, H_BC → H_dR and H_∂̄ → H_A. Each rank is computed on
//! harmonic representatives of the source, modulo the exact subspace of the
//! target: rank = rank([S | E]) − rank(E), independent of the choice of
//! representatives because shifting a column of S by a column of E never
//! changes that difference.

use num_traits::Zero;

use crate::cohomology::harmonic::harmonic_vectors;
use crate::cohomology::{
    aeppli, betti, compute_table, quotient_dimension, table_keys, CohomologyTable, Method,
    TableKey, Theory,
};
use crate::linalg::Matrix;
use crate::scalars::GaussianRational;
use crate::structure::DifferentialMatrices;

/// One quotient-vs-harmonic comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossCheckEntry {
    pub theory: Theory,
    pub key: TableKey,
    pub quotient: usize,
    pub harmonic: usize,
}

/// Every theory at every key, computed both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub entries: Vec<CrossCheckEntry>,
}

impl CrossCheckReport {
    pub fn consistent(&self) -> bool {
        self.entries.iter().all(|e| e.quotient == e.harmonic)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CrossCheckEntry> {
        self.entries.iter().filter(|e| e.quotient != e.harmonic)
    }
}

/// Compute every dimension by quotient and by harmonic kernel and compare.
pub fn cross_check(diffs: &DifferentialMatrices) -> CrossCheckReport {
    let mut entries = Vec::new();
    for theory in Theory::ALL {
        for key in table_keys(theory, diffs.n()) {
            entries.push(CrossCheckEntry {
                theory,
                key,
                quotient: quotient_dimension(diffs, theory, key),
                harmonic: crate::cohomology::harmonic::harmonic_dimension(diffs, theory, key),
            });
        }
    }
    CrossCheckReport { entries }
}

/// One duality family, with the equations that failed (if any).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub failures: Vec<String>,
}

/// All five classical families. The first two require unimodularity (they
/// hold for nilpotent algebras but can fail for general solvable ones), so
/// the report states facts; it is the caller's decision what to require.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub checks: Vec<DualityCheck>,
}

impl DualityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&DualityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Evaluate the five duality families on exact tables.
pub fn dualities(diffs: &DifferentialMatrices) -> DualityReport {
    let n = diffs.n();
    let bc = compute_table(diffs, Theory::BottChern, Method::Quotient);
    let ae = compute_table(diffs, Theory::Aeppli, Method::Quotient);
    let dolb = compute_table(diffs, Theory::Dolbeault, Method::Quotient);
    let conj = compute_table(diffs, Theory::DolbeaultConj, Method::Quotient);
    let derham = compute_table(diffs, Theory::DeRham, Method::Quotient);
    let at = |t: &CohomologyTable, p: u32, q: u32| t.get(TableKey::Bidegree(p, q)).unwrap();

    let mut checks = Vec::new();

    let mut failures = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            let (dp, dq) = (n - q, n - p);
            if (p, q) > (dp, dq) {
                continue; // the mirror equation is already covered
            }
            let (lhs, rhs) = (at(&bc, p, q), at(&ae, dp, dq));
            if lhs != rhs {
                failures.push(format!(
                    "h_bc({p},{q}) = {lhs} but h_aeppli({dp},{dq}) = {rhs}"
                ));
            }
        }
    }
    checks.push(DualityCheck {
        name: "bott-chern-aeppli",
        statement: "h_bc(p,q) = h_aeppli(n-q,n-p)",
        passed: failures.is_empty(),
        failures,
    });

    let mut failures = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            let (dp, dq) = (n - p, n - q);
            if (p, q) > (dp, dq) {
                continue;
            }
            let (lhs, rhs) = (at(&dolb, p, q), at(&dolb, dp, dq));
            if lhs != rhs {
                failures.push(format!(
                    "h_dolbeault({p},{q}) = {lhs} but h_dolbeault({dp},{dq}) = {rhs}"
                ));
            }
        }
    }
    checks.push(DualityCheck {
        name: "serre",
        statement: "h_dolbeault(p,q) = h_dolbeault(n-p,n-q)",
        passed: failures.is_empty(),
        failures,
    });

    let mut failures = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            if p < q {
                let (lhs, rhs) = (at(&bc, p, q), at(&bc, q, p));
                if lhs != rhs {
                    failures.push(format!("h_bc({p},{q}) = {lhs} but h_bc({q},{p}) = {rhs}"));
                }
                let (lhs, rhs) = (at(&ae, p, q), at(&ae, q, p));
                if lhs != rhs {
                    failures.push(format!(
                        "h_aeppli({p},{q}) = {lhs} but h_aeppli({q},{p}) = {rhs}"
                    ));
                }
            }
            let (lhs, rhs) = (at(&conj, p, q), at(&dolb, q, p));
            if lhs != rhs {
                failures.push(format!(
                    "h_dolbeault-conj({p},{q}) = {lhs} but h_dolbeault({q},{p}) = {rhs}"
                ));
            }
        }
    }
    checks.push(DualityCheck {
        name: "conjugation",
        statement:
            "h_bc and h_aeppli are symmetric in (p,q); h_dolbeault-conj(p,q) = h_dolbeault(q,p)",
        passed: failures.is_empty(),
        failures,
    });

    let mut failures = Vec::new();
    for k in 0..=n {
        let (lhs, rhs) = (
            derham.get(TableKey::Degree(k)).unwrap(),
            derham.get(TableKey::Degree(2 * n - k)).unwrap(),
        );
        if lhs != rhs {
            failures.push(format!("b_{k} = {lhs} but b_{} = {rhs}", 2 * n - k));
        }
    }
    checks.push(DualityCheck {
        name: "poincare",
        statement: "b_k = b_{2n-k}",
        passed: failures.is_empty(),
        failures,
    });

    let mut failures = Vec::new();
    for k in 0..=2 * n {
        let sum: usize = (0..=k)
            .filter(|&p| p <= n && k - p <= n)
            .map(|p| at(&dolb, p, k - p))
            .sum();
        let b = derham.get(TableKey::Degree(k)).unwrap();
        if sum < b {
            failures.push(format!(
                "sum of h_dolbeault(p,q) over p+q={k} is {sum}, below b_{k} = {b}"
            ));
        }
    }
    checks.push(DualityCheck {
        name: "frolicher",
        statement: "sum over p+q=k of h_dolbeault(p,q) >= b_k",
        passed: failures.is_empty(),
        failures,
    });

    DualityReport { checks }
}

/// Dimensions and induced-map ranks at one bidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaturalMapRanks {
    pub p: u32,
    pub q: u32,
    pub h_bott_chern: usize,
    pub h_dolbeault: usize,
    pub h_aeppli: usize,
    pub betti: usize,
    pub bc_to_dolbeault: usize,
    pub bc_to_derham: usize,
    pub dolbeault_to_aeppli: usize,
}

/// rank([S | E]) − rank(E): the dimension of the span of the source vectors
/// in the quotient by the column space of `exact`.
fn induced_rank(sources: &[Vec<GaussianRational>], exact: &Matrix) -> usize {
    if sources.is_empty() {
        return 0;
    }
    let source = Matrix::from_columns(sources);
    source.concat_horizontal(exact).rank() - exact.rank()
}

/// Coordinates of a Λ^{p,q} vector inside the total-degree basis, whose
/// bidegree blocks are laid out with p descending.
fn embed_total(
    diffs: &DifferentialMatrices,
    p: u32,
    q: u32,
    vector: &[GaussianRational],
) -> Vec<GaussianRational> {
    let k = (p + q) as i64;
    let offset: usize = ((p + 1)..=diffs.n())
        .map(|block_p| diffs.dim(block_p as i64, k - block_p as i64))
        .sum();
    let mut out = vec![GaussianRational::zero(); diffs.total_dim(k)];
    out[offset..offset + vector.len()].clone_from_slice(vector);
    out
}

/// Ranks of the maps induced by the identity on forms:
/// H_BC → H_∂̄, H_BC → H_dR (total degree p+q) and H_∂̄ → H_A.
pub fn natural_map_ranks(diffs: &DifferentialMatrices, p: u32, q: u32) -> NaturalMapRanks {
    let (pi, qi) = (p as i64, q as i64);
    let k = p + q;

    let bc_vectors = harmonic_vectors(diffs, Theory::BottChern, TableKey::Bidegree(p, q));
    let dolb_vectors = harmonic_vectors(diffs, Theory::Dolbeault, TableKey::Bidegree(p, q));

    let dolbeault_exact = diffs.delbar_from(pi, qi - 1);
    let bc_to_dolbeault = induced_rank(&bc_vectors, &dolbeault_exact);

    let derham_exact = diffs.d_from(k as i64 - 1);
    let embedded: Vec<Vec<GaussianRational>> = bc_vectors
        .iter()
        .map(|v| embed_total(diffs, p, q, v))
        .collect();
    let bc_to_derham = induced_rank(&embedded, &derham_exact);

    let aeppli_exact = diffs
        .del_from(pi - 1, qi)
        .concat_horizontal(&diffs.delbar_from(pi, qi - 1));
    let dolbeault_to_aeppli = induced_rank(&dolb_vectors, &aeppli_exact);

    NaturalMapRanks {
        p,
        q,
        h_bott_chern: bc_vectors.len(),
        h_dolbeault: dolb_vectors.len(),
        h_aeppli: aeppli(diffs, p, q),
        betti: betti(diffs, k),
        bc_to_dolbeault,
        bc_to_derham,
        dolbeault_to_aeppli,
    }
}

/// ∂∂̄-lemma scan result. `failures` lists bidegrees in canonical order
/// (total degree ascending, then p descending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub satisfied: bool,
    pub failures: Vec<(u32, u32)>,
}

impl LemmaReport {
    pub fn first_failure(&self) -> Option<(u32, u32)> {
        self.failures.first().copied()
    }
}

/// The complex satisfies the ∂∂̄-lemma at (p,q) exactly when the natural
/// maps H_BC → H_∂̄ → H_A are isomorphisms there: equal dimensions and both
/// induced maps of full rank.
pub fn del_delbar_lemma(diffs: &DifferentialMatrices) -> LemmaReport {
    let mut failures = Vec::new();
    for key in table_keys(Theory::BottChern, diffs.n()) {
        let TableKey::Bidegree(p, q) = key else {
            continue;
        };
        let ranks = natural_map_ranks(diffs, p, q);
        let holds = ranks.h_bott_chern == ranks.h_dolbeault
            && ranks.h_dolbeault == ranks.h_aeppli
            && ranks.bc_to_dolbeault == ranks.h_bott_chern
            && ranks.dolbeault_to_aeppli == ranks.h_dolbeault;
        if !holds {
            failures.push((p, q));
        }
    }
    LemmaReport {
        satisfied: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::parse;

    fn iwasawa() -> DifferentialMatrices {
        parse("ndim 3\nd f1 = 0\nd f2 = 0\nd f3 = (-1, 0) f1^f2\n")
            .unwrap()
            .differentials()
    }

    fn torus() -> DifferentialMatrices {
        parse("ndim 3\nd f1 = 0\nd f2 = 0\nd f3 = 0\n")
            .unwrap()
            .differentials()
    }

    fn solvable() -> DifferentialMatrices {
        parse("ndim 3\nd f1 = 0\nd f2 = 0\nd f3 = (1, 0) f1^f3\n")
            .unwrap()
            .differentials()
    }

    #[test]
    fn cross_check_is_consistent_on_reference_algebras() {
        for diffs in [iwasawa(), torus(), solvable()] {
            let report = cross_check(&diffs);
            assert!(report.consistent());
            assert_eq!(report.mismatches().count(), 0);
            // 2n+1 de Rham keys + 4 bigraded theories × (n+1)² keys
            assert_eq!(report.entries.len(), 7 + 4 * 16);
        }
    }

    #[test]
    fn natural_map_ranks_on_the_nilpotent_example() {
        let diffs = iwasawa();
        let expected = [
            ((0u32, 0u32), [1usize, 1, 1]),
            ((1, 0), [2, 2, 3]),
            ((0, 1), [2, 2, 2]),
            ((1, 1), [4, 4, 6]),
            ((2, 1), [6, 4, 4]),
            ((2, 2), [6, 4, 4]),
            ((3, 2), [2, 2, 2]),
            ((3, 3), [1, 1, 1]),
        ];
        for ((p, q), [to_dolb, to_derham, to_aeppli]) in expected {
            let ranks = natural_map_ranks(&diffs, p, q);
            assert_eq!(ranks.bc_to_dolbeault, to_dolb, "bc→dolbeault at ({p},{q})");
            assert_eq!(ranks.bc_to_derham, to_derham, "bc→derham at ({p},{q})");
            assert_eq!(
                ranks.dolbeault_to_aeppli, to_aeppli,
                "dolbeault→aeppli at ({p},{q})"
            );
        }
    }

    #[test]
    fn bott_chern_to_dolbeault_drops_rank_at_two_two() {
        let ranks = natural_map_ranks(&iwasawa(), 2, 2);
        assert_eq!(ranks.h_bott_chern, 8);
        assert_eq!(ranks.h_dolbeault, 6);
        assert_eq!(ranks.bc_to_dolbeault, 6);
        assert!(ranks.bc_to_dolbeault < ranks.h_bott_chern);
    }

    #[test]
    fn lemma_fails_on_the_nilpotent_example() {
        let report = del_delbar_lemma(&iwasawa());
        assert!(!report.satisfied);
        assert_eq!(report.first_failure(), Some((1, 0)));
        assert_eq!(
            &report.failures[..5],
            &[(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        );
    }

    #[test]
    fn lemma_holds_on_the_torus() {
        let report = del_delbar_lemma(&torus());
        assert!(report.satisfied);
        assert!(report.failures.is_empty());
        let ranks = natural_map_ranks(&torus(), 1, 1);
        assert_eq!(ranks.h_bott_chern, 9);
        assert_eq!(ranks.bc_to_dolbeault, 9);
        assert_eq!(ranks.dolbeault_to_aeppli, 9);
    }

    #[test]
    fn dualities_all_pass_on_unimodular_examples() {
        for diffs in [iwasawa(), torus()] {
            let report = dualities(&diffs);
            assert!(report.all_passed());
            assert_eq!(report.checks.len(), 5);
        }
    }

    #[test]
    fn non_unimodular_algebra_breaks_exactly_the_duality_families() {
        let report = dualities(&solvable());
        assert!(!report.all_passed());
        assert!(!report.check("bott-chern-aeppli").unwrap().passed);
        assert!(!report.check("serre").unwrap().passed);
        assert!(!report.check("poincare").unwrap().passed);
        assert!(report.check("conjugation").unwrap().passed);
        assert!(report.check("frolicher").unwrap().passed);
        let bc_ae = report.check("bott-chern-aeppli").unwrap();
        assert!(bc_ae
            .failures
            .iter()
            .any(|f| f.contains("h_bc(0,0) = 1 but h_aeppli(3,3) = 0")));
    }

    #[test]
    fn natural_maps_never_exceed_source_or_target_dimension() {
        for diffs in [iwasawa(), torus(), solvable()] {
            for p in 0..=3u32 {
                for q in 0..=3u32 {
                    let r = natural_map_ranks(&diffs, p, q);
                    assert!(r.bc_to_dolbeault <= r.h_bott_chern.min(r.h_dolbeault));
                    assert!(r.bc_to_derham <= r.h_bott_chern.min(r.betti));
                    assert!(r.dolbeault_to_aeppli <= r.h_dolbeault.min(r.h_aeppli));
                }
            }
        }
    }
}
