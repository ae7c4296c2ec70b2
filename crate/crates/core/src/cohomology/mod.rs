//! Cohomology of the double complex (Λ^{•,•}g*_ℂ, ∂, ∂̄): de Rham,
//! Dolbeault (∂̄ and conjugate ∂), Bott-Chern and Aeppli.
//!
//! Every theory is computed two independent ways, with exact arithmetic in
//! both:
//!
//! - as a quotient dimension, dim ker − dim im, straight from the defining
//!   complexes;
//! - as a harmonic-space dimension, the kernel of the stacked first-order
//!   system obtained by declaring the monomial basis orthonormal (adjoints
//!   are conjugate transposes); see [`harmonic`].
//!
//! The two agree entry-wise (the square kernel lemma for positive
//! semi-definite Hermitian Laplacians holds verbatim over ℚ(i)), and the
//! cross-check report in [`reports`] enforces exactly that.
//!
//! Edge conventions: Λ^{p,q} = 0 whenever an index is negative or exceeds
//! n, so ∂∂̄ out of Λ^{−1,−1} is the zero map and H^{0,0}_BC = ℂ.

pub mod deformation;
pub mod harmonic;
pub mod metric;
pub mod reports;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::Matrix;
use crate::structure::DifferentialMatrices;

/// Errors from report plumbing (CSV fixtures, metric-form shape).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("CSV line {line}: {message}")]
    Csv { line: usize, message: String },
    #[error("the metric form must be homogeneous of bidegree (1,1)")]
    NotAMetricForm,
}

/// The five cohomology theories of the double complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theory {
    DeRham,
    Dolbeault,
    DolbeaultConj,
    BottChern,
    Aeppli,
}

impl Theory {
    pub const ALL: [Theory; 5] = [
        Theory::DeRham,
        Theory::Dolbeault,
        Theory::DolbeaultConj,
        Theory::BottChern,
        Theory::Aeppli,
    ];

    /// Machine-readable token, shared by the CLI and the CSV schema.
    pub fn token(self) -> &'static str {
        match self {
            Theory::DeRham => "derham",
            Theory::Dolbeault => "dolbeault",
            Theory::DolbeaultConj => "dolbeault-conj",
            Theory::BottChern => "bc",
            Theory::Aeppli => "aeppli",
        }
    }

    /// Bigraded theories index by (p,q); de Rham indexes by total degree.
    pub fn is_bigraded(self) -> bool {
        !matches!(self, Theory::DeRham)
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Theory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "derham" => Ok(Theory::DeRham),
            "dolbeault" => Ok(Theory::Dolbeault),
            "dolbeault-conj" => Ok(Theory::DolbeaultConj),
            "bc" => Ok(Theory::BottChern),
            "aeppli" => Ok(Theory::Aeppli),
            other => Err(format!("unknown theory `{other}`")),
        }
    }
}

/// How a dimension was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Quotient,
    Harmonic,
}

/// Index of one table entry: total degree k for de Rham, bidegree (p,q)
/// otherwise. Ordered by total degree, then p descending — the layout used
/// by every report and table printout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKey {
    Degree(u32),
    Bidegree(u32, u32),
}

impl TableKey {
    pub fn total_degree(self) -> u32 {
        match self {
            TableKey::Degree(k) => k,
            TableKey::Bidegree(p, q) => p + q,
        }
    }
}

impl Ord for TableKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| match (self, other) {
                (TableKey::Bidegree(p1, _), TableKey::Bidegree(p2, _)) => p2.cmp(p1),
                (TableKey::Degree(_), TableKey::Degree(_)) => std::cmp::Ordering::Equal,
                (TableKey::Degree(_), TableKey::Bidegree(..)) => std::cmp::Ordering::Less,
                (TableKey::Bidegree(..), TableKey::Degree(_)) => std::cmp::Ordering::Greater,
            })
    }
}

impl PartialOrd for TableKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TableKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableKey::Degree(k) => write!(f, "{k}"),
            TableKey::Bidegree(p, q) => write!(f, "({p},{q})"),
        }
    }
}

/// One theory's dimension table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    pub theory: Theory,
    entries: BTreeMap<TableKey, usize>,
}

impl CohomologyTable {
    pub fn new(theory: Theory) -> Self {
        CohomologyTable {
            theory,
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, key: TableKey, dim: usize) {
        self.entries.insert(key, dim);
    }

    pub fn get(&self, key: TableKey) -> Option<usize> {
        self.entries.get(&key).copied()
    }

    /// Entries in canonical order (total degree, then p descending).
    pub fn entries(&self) -> impl Iterator<Item = (TableKey, usize)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// All keys a theory's table holds for complex dimension n.
pub fn table_keys(theory: Theory, n: u32) -> Vec<TableKey> {
    match theory {
        Theory::DeRham => (0..=2 * n).map(TableKey::Degree).collect(),
        _ => {
            let mut keys: Vec<TableKey> = (0..=n)
                .flat_map(|p| (0..=n).map(move |q| TableKey::Bidegree(p, q)))
                .collect();
            keys.sort();
            keys
        }
    }
}

fn nullity(m: &Matrix) -> usize {
    m.cols() - m.rank()
}

/// b_k = dim ker(d: Λ^k → Λ^{k+1}) − rank(d: Λ^{k−1} → Λ^k).
pub fn betti(diffs: &DifferentialMatrices, k: u32) -> usize {
    let k = k as i64;
    nullity(&diffs.d_from(k)) - diffs.d_from(k - 1).rank()
}

/// h^{p,q}_∂̄ = dim ker(∂̄ on Λ^{p,q}) − rank(∂̄ on Λ^{p,q−1}).
pub fn dolbeault(diffs: &DifferentialMatrices, p: u32, q: u32) -> usize {
    let (p, q) = (p as i64, q as i64);
    nullity(&diffs.delbar_from(p, q)) - diffs.delbar_from(p, q - 1).rank()
}

/// h^{p,q}_∂ = dim ker(∂ on Λ^{p,q}) − rank(∂ on Λ^{p−1,q}).
pub fn dolbeault_conj(diffs: &DifferentialMatrices, p: u32, q: u32) -> usize {
    let (p, q) = (p as i64, q as i64);
    nullity(&diffs.del_from(p, q)) - diffs.del_from(p - 1, q).rank()
}

/// h^{p,q}_BC = dim(ker ∂ ∩ ker ∂̄) − rank(∂∂̄: Λ^{p−1,q−1} → Λ^{p,q}).
pub fn bott_chern(diffs: &DifferentialMatrices, p: u32, q: u32) -> usize {
    let (p, q) = (p as i64, q as i64);
    let closed = diffs
        .del_from(p, q)
        .stack_vertical(&diffs.delbar_from(p, q));
    let del_delbar = diffs
        .del_from(p - 1, q)
        .mul(&diffs.delbar_from(p - 1, q - 1));
    nullity(&closed) - del_delbar.rank()
}

/// h^{p,q}_A = dim ker(∂∂̄ on Λ^{p,q}) − dim(im ∂ + im ∂̄), the image
/// dimension computed as the rank of the concatenation (images overlap).
pub fn aeppli(diffs: &DifferentialMatrices, p: u32, q: u32) -> usize {
    let (p, q) = (p as i64, q as i64);
    let del_delbar = diffs.del_from(p, q + 1).mul(&diffs.delbar_from(p, q));
    let exact = diffs
        .del_from(p - 1, q)
        .concat_horizontal(&diffs.delbar_from(p, q - 1));
    nullity(&del_delbar) - exact.rank()
}

/// Quotient dimension of any theory at a table key.
pub fn quotient_dimension(diffs: &DifferentialMatrices, theory: Theory, key: TableKey) -> usize {
    match (theory, key) {
        (Theory::DeRham, TableKey::Degree(k)) => betti(diffs, k),
        (Theory::Dolbeault, TableKey::Bidegree(p, q)) => dolbeault(diffs, p, q),
        (Theory::DolbeaultConj, TableKey::Bidegree(p, q)) => dolbeault_conj(diffs, p, q),
        (Theory::BottChern, TableKey::Bidegree(p, q)) => bott_chern(diffs, p, q),
        (Theory::Aeppli, TableKey::Bidegree(p, q)) => aeppli(diffs, p, q),
        (theory, key) => panic!("key {key} does not index the {theory} table"),
    }
}

/// Full table of one theory by the requested method.
pub fn compute_table(
    diffs: &DifferentialMatrices,
    theory: Theory,
    method: Method,
) -> CohomologyTable {
    let mut table = CohomologyTable::new(theory);
    for key in table_keys(theory, diffs.n()) {
        let dim = match method {
            Method::Quotient => quotient_dimension(diffs, theory, key),
            Method::Harmonic => harmonic::harmonic_dimension(diffs, theory, key),
        };
        table.insert(key, dim);
    }
    table
}

/// Serialize tables to the CSV schema `theory,p,q,dim` (de Rham rows carry
/// the degree in the p column and an empty q).
pub fn tables_to_csv(tables: &[CohomologyTable]) -> String {
    let mut out = String::from("theory,p,q,dim\n");
    for table in tables {
        for (key, dim) in table.entries() {
            match key {
                TableKey::Degree(k) => {
                    out.push_str(&format!("{},{},,{}\n", table.theory.token(), k, dim));
                }
                TableKey::Bidegree(p, q) => {
                    out.push_str(&format!("{},{},{},{}\n", table.theory.token(), p, q, dim));
                }
            }
        }
    }
    out
}

/// Parse the CSV schema back into tables (grouped by theory, in order of
/// first appearance). Exact inverse of [`tables_to_csv`].
pub fn tables_from_csv(text: &str) -> Result<Vec<CohomologyTable>, CohomologyError> {
    let mut lines = text.lines().enumerate();
    let header = lines.next().map(|(_, l)| l.trim()).unwrap_or_default();
    if header != "theory,p,q,dim" {
        return Err(CohomologyError::Csv {
            line: 1,
            message: format!("expected header `theory,p,q,dim`, found `{header}`"),
        });
    }
    let mut tables: Vec<CohomologyTable> = Vec::new();
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(CohomologyError::Csv {
                line: line_no,
                message: format!("expected 4 fields, found {}", fields.len()),
            });
        }
        let theory = Theory::from_str(fields[0]).map_err(|message| CohomologyError::Csv {
            line: line_no,
            message,
        })?;
        let parse_num = |text: &str, what: &str| -> Result<u32, CohomologyError> {
            text.parse().map_err(|_| CohomologyError::Csv {
                line: line_no,
                message: format!("malformed {what} `{text}`"),
            })
        };
        let key = if fields[2].is_empty() {
            TableKey::Degree(parse_num(fields[1], "degree")?)
        } else {
            TableKey::Bidegree(parse_num(fields[1], "p")?, parse_num(fields[2], "q")?)
        };
        let dim = fields[3]
            .parse::<usize>()
            .map_err(|_| CohomologyError::Csv {
                line: line_no,
                message: format!("malformed dimension `{}`", fields[3]),
            })?;
        match tables.iter_mut().find(|t| t.theory == theory) {
            Some(table) => table.insert(key, dim),
            None => {
                let mut table = CohomologyTable::new(theory);
                table.insert(key, dim);
                tables.push(table);
            }
        }
    }
    Ok(tables)
}
