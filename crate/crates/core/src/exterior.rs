//! The bigraded exterior algebra Λ^{•,•}g*_ℂ on generators φ¹…φⁿ, φ̄¹…φ̄ⁿ.
//!
//! Monomials are canonical wedge products with all holomorphic generators
//! before all anti-holomorphic ones, each group ascending:
//! φ^{i₁}∧…∧φ^{i_p}∧φ̄^{j₁}∧…∧φ̄^{j_q}. A monomial stores each group as a
//! bitmask (bit k ⇔ generator k+1 present), so wedge signs reduce to
//! inversion counting on bit positions. Forms are sparse maps from monomials
//! to exact ℚ(i) coefficients.
//!
//! Printing convention: `f1^f2^F3` denotes φ¹∧φ²∧φ̄³; the empty monomial
//! prints as `1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalars::GaussianRational;

/// Errors from exterior-algebra bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    /// A requested bidegree lies outside 0 ≤ p,q ≤ n.
    #[error("bidegree ({p}, {q}) out of range for n = {n}")]
    BidegreeOutOfRange { n: u32, p: u32, q: u32 },
}

/// A canonical basis monomial of Λ^{p,q}, stored as two index bitmasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    holo: u32,
    anti: u32,
}

impl Monomial {
    /// The empty monomial 1 ∈ Λ^{0,0}.
    pub fn one() -> Self {
        Monomial { holo: 0, anti: 0 }
    }

    /// Monomial from raw bitmasks (bit k set ⇔ generator k+1 present).
    pub fn from_masks(holo: u32, anti: u32) -> Self {
        Monomial { holo, anti }
    }

    /// Monomial from 1-based generator indices, e.g. (&[1,2], &[3]) = φ¹∧φ²∧φ̄³.
    ///
    /// Panics on repeated indices within a group (not a canonical monomial).
    pub fn from_indices(holo: &[u32], anti: &[u32]) -> Self {
        let mut m = Monomial::one();
        for &j in holo {
            assert!(j >= 1, "generator indices are 1-based");
            assert_eq!(m.holo & (1 << (j - 1)), 0, "repeated holomorphic index {j}");
            m.holo |= 1 << (j - 1);
        }
        for &j in anti {
            assert!(j >= 1, "generator indices are 1-based");
            assert_eq!(
                m.anti & (1 << (j - 1)),
                0,
                "repeated anti-holomorphic index {j}"
            );
            m.anti |= 1 << (j - 1);
        }
        m
    }

    /// The single holomorphic generator φ^j (1-based).
    pub fn holo_generator(j: u32) -> Self {
        Monomial::from_indices(&[j], &[])
    }

    /// The single anti-holomorphic generator φ̄^j (1-based).
    pub fn anti_generator(j: u32) -> Self {
        Monomial::from_indices(&[], &[j])
    }

    /// Bidegree (p, q) = (|holo|, |anti|).
    pub fn bidegree(&self) -> (u32, u32) {
        (self.holo.count_ones(), self.anti.count_ones())
    }

    /// Total degree p + q.
    pub fn degree(&self) -> u32 {
        self.holo.count_ones() + self.anti.count_ones()
    }

    /// 1-based holomorphic indices in ascending order.
    pub fn holo_indices(&self) -> Vec<u32> {
        mask_indices(self.holo)
    }

    /// 1-based anti-holomorphic indices in ascending order.
    pub fn anti_indices(&self) -> Vec<u32> {
        mask_indices(self.anti)
    }

    /// Whether the monomial contains the holomorphic generator φ^j.
    pub fn contains_holo(&self, j: u32) -> bool {
        self.holo & (1 << (j - 1)) != 0
    }

    /// The monomial with the holomorphic generator φ^j removed.
    pub fn remove_holo(&self, j: u32) -> Monomial {
        Monomial {
            holo: self.holo & !(1 << (j - 1)),
            anti: self.anti,
        }
    }

    /// The monomial with the anti-holomorphic generator φ̄^j removed.
    pub fn remove_anti(&self, j: u32) -> Monomial {
        Monomial {
            holo: self.holo,
            anti: self.anti & !(1 << (j - 1)),
        }
    }

    /// Whether the monomial contains the anti-holomorphic generator φ̄^j.
    pub fn contains_anti(&self, j: u32) -> bool {
        self.anti & (1 << (j - 1)) != 0
    }

    /// Both groups packed into one word: holo at bits 0..32, anti at 32..64.
    ///
    /// Ascending bit position equals the canonical generator order, which is
    /// what makes inversion counting by shifts correct.
    fn packed(&self) -> u64 {
        (self.holo as u64) | ((self.anti as u64) << 32)
    }

    /// Wedge of two monomials: `None` if a generator repeats, otherwise the
    /// canonical product with the sign of the sorting permutation.
    pub fn wedge(&self, other: &Monomial) -> Option<(i8, Monomial)> {
        let a = self.packed();
        let b = other.packed();
        if a & b != 0 {
            return None;
        }
        // Concatenating the two sorted generator lists, every pair
        // (u ∈ self, v ∈ other) with position(u) > position(v) is one
        // inversion; blocks are internally sorted, so that count is the
        // whole permutation parity.
        let mut inversions = 0u32;
        let mut rest = b;
        while rest != 0 {
            let pos = rest.trailing_zeros();
            inversions += (a >> (pos + 1)).count_ones();
            rest &= rest - 1;
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((
            sign,
            Monomial {
                holo: self.holo | other.holo,
                anti: self.anti | other.anti,
            },
        ))
    }

    /// Conjugate: swap the groups and reorder into canonical form.
    ///
    /// Formally conjugating generator-by-generator turns φ^I∧φ̄^J into
    /// φ̄^I∧φ^J; moving the q generators of φ^J past the p generators of φ̄^I
    /// costs (−1)^{pq}.
    pub fn conjugate(&self) -> (i8, Monomial) {
        let (p, q) = self.bidegree();
        let sign = if (p * q) % 2 == 0 { 1 } else { -1 };
        (
            sign,
            Monomial {
                holo: self.anti,
                anti: self.holo,
            },
        )
    }
}

fn mask_indices(mask: u32) -> Vec<u32> {
    let mut rest = mask;
    let mut out = Vec::with_capacity(rest.count_ones() as usize);
    while rest != 0 {
        out.push(rest.trailing_zeros() + 1);
        rest &= rest - 1;
    }
    out
}

/// Canonical order: by total degree, then lexicographically on the
/// concatenated generator-position sequence (holo positions before anti).
/// Within one bidegree this agrees with the `basis` enumeration order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let by_degree = self.degree().cmp(&other.degree());
        if by_degree != std::cmp::Ordering::Equal {
            return by_degree;
        }
        let a = self.packed();
        let b = other.packed();
        if a == b {
            return std::cmp::Ordering::Equal;
        }
        // Equal degree: both position sequences have the same length, and
        // membership agrees below the lowest differing position, so the
        // monomial containing that position is the lexicographically
        // smaller sequence.
        let lowest_diff = (a ^ b) & (a ^ b).wrapping_neg();
        if a & lowest_diff != 0 {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holo == 0 && self.anti == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for j in self.holo_indices() {
            if !first {
                write!(f, "^")?;
            }
            write!(f, "f{j}")?;
            first = false;
        }
        for j in self.anti_indices() {
            if !first {
                write!(f, "^")?;
            }
            write!(f, "F{j}")?;
            first = false;
        }
        Ok(())
    }
}

/// All monomials of Λ^{p,q} for complex dimension n, in deterministic order:
/// lexicographic on the holomorphic index set, then on the anti-holomorphic
/// one. This order fixes every matrix row/column convention in the library.
pub fn basis(n: u32, p: u32, q: u32) -> Result<Vec<Monomial>, ExteriorError> {
    if p > n || q > n {
        return Err(ExteriorError::BidegreeOutOfRange { n, p, q });
    }
    let holo_sets = lex_subsets(n, p);
    let anti_sets = lex_subsets(n, q);
    let mut out = Vec::with_capacity(holo_sets.len() * anti_sets.len());
    for &h in &holo_sets {
        for &a in &anti_sets {
            out.push(Monomial { holo: h, anti: a });
        }
    }
    Ok(out)
}

/// Size-k subsets of {1…n} as bitmasks, ordered lexicographically on the
/// ascending index sequence (e.g. n=4, k=2: 12, 13, 14, 23, 24, 34). This is
/// not the numeric order of the masks, so it is generated explicitly.
fn lex_subsets(n: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn extend(n: u32, k: u32, start: u32, current: &mut Vec<u32>, out: &mut Vec<u32>) {
        if current.len() as u32 == k {
            out.push(current.iter().fold(0u32, |m, &j| m | (1 << (j - 1))));
            return;
        }
        let remaining = k - current.len() as u32;
        for j in start..=(n - remaining + 1) {
            current.push(j);
            extend(n, k, j + 1, current, out);
            current.pop();
        }
    }
    extend(n, k, 1, &mut current, &mut out);
    out
}

/// A finite ℚ(i)-linear combination of monomials; may mix bidegrees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Form {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Form {
    /// The zero form.
    pub fn zero() -> Self {
        Form::default()
    }

    /// A single term c·m (the zero coefficient yields the zero form).
    pub fn from_term(coeff: GaussianRational, mono: Monomial) -> Self {
        let mut form = Form::zero();
        form.add_term(coeff, mono);
        form
    }

    /// The monomial m with coefficient 1.
    pub fn from_monomial(mono: Monomial) -> Self {
        Form::from_term(GaussianRational::one(), mono)
    }

    /// The constant form 1.
    pub fn one() -> Self {
        Form::from_monomial(Monomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add c·m in place, dropping the entry if the sum cancels to zero.
    pub fn add_term(&mut self, coeff: GaussianRational, mono: Monomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, mono: &Monomial) -> GaussianRational {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Scalar multiple c·ω.
    pub fn scale(&self, coeff: &GaussianRational) -> Form {
        let mut out = Form::zero();
        for (mono, c) in &self.terms {
            out.add_term(coeff * c, *mono);
        }
        out
    }

    /// Wedge product, bilinear over the monomial wedge.
    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((sign, mono)) = ma.wedge(mb) {
                    let mut coeff = ca * cb;
                    if sign < 0 {
                        coeff = -coeff;
                    }
                    out.add_term(coeff, mono);
                }
            }
        }
        out
    }

    /// k-fold wedge power ω^k (ω^0 = 1).
    pub fn wedge_power(&self, k: u32) -> Form {
        let mut out = Form::one();
        for _ in 0..k {
            out = out.wedge(self);
        }
        out
    }

    /// Conjugation: conjugate coefficients, swap each monomial's groups with
    /// the canonical reordering sign. Maps bidegree (p,q) to (q,p); an
    /// involution.
    pub fn conjugate(&self) -> Form {
        let mut out = Form::zero();
        for (mono, coeff) in &self.terms {
            let (sign, conj_mono) = mono.conjugate();
            let mut c = coeff.conj();
            if sign < 0 {
                c = -c;
            }
            out.add_term(c, conj_mono);
        }
        out
    }

    /// The (p,q)-homogeneous part.
    pub fn component(&self, p: u32, q: u32) -> Form {
        let mut out = Form::zero();
        for (mono, coeff) in &self.terms {
            if mono.bidegree() == (p, q) {
                out.add_term(coeff.clone(), *mono);
            }
        }
        out
    }

    /// The bidegrees occurring in this form, each exactly once.
    pub fn bidegrees(&self) -> Vec<(u32, u32)> {
        let mut seen: Vec<(u32, u32)> = Vec::new();
        for mono in self.terms.keys() {
            let bd = mono.bidegree();
            if !seen.contains(&bd) {
                seen.push(bd);
            }
        }
        seen
    }

    /// `Some((p,q))` if every term has the same bidegree (zero counts as
    /// homogeneous of any bidegree and returns `None`).
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut terms = self.terms.keys();
        let first = terms.next()?.bidegree();
        terms.all(|m| m.bidegree() == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.bidegrees().len() <= 1
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: Self) -> Form {
        let mut out = self.clone();
        for (mono, coeff) in &rhs.terms {
            out.add_term(coeff.clone(), *mono);
        }
        out
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: Self) -> Form {
        let mut out = self.clone();
        for (mono, coeff) in &rhs.terms {
            out.add_term(-coeff.clone(), *mono);
        }
        out
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        let mut out = Form::zero();
        for (mono, coeff) in &self.terms {
            out.add_term(-coeff.clone(), *mono);
        }
        out
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            if coeff.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coeff} {mono}")?;
            }
            first = false;
        }
        Ok(())
    }
}
