//! Integer group algebra: formal sums of group elements, the two families of
//! factors whose ordered product is the diagonal sum, and checks of those
//! factorizations and of their images under the statistic-weighting maps.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{enumerate_group, Element, GroupTag, Limits, SignedTransposition};
use crate::qpoly::{q_int, BivarPoly};
use crate::sorting::sor;
use crate::stats::{inv, m_b, refl_len_with, rlmin_m, RlenSource};

/// Left operand terms per parallel work unit in [`fs_mul`].
const MUL_CHUNK: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum {
    tag: GroupTag,
    n: usize,
    terms: BTreeMap<Element, i64>,
}

impl FormalSum {
    pub fn zero(tag: GroupTag, n: usize) -> Self {
        FormalSum {
            tag,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(tag: GroupTag, n: usize) -> Self {
        FormalSum::from_element(Element::identity(tag, n))
    }

    pub fn from_element(w: Element) -> Self {
        let mut s = FormalSum::zero(w.tag(), w.n());
        s.add_term(w, 1);
        s
    }

    /// Sum of the given elements, each with coefficient 1 (repeats add up).
    pub fn from_elements(
        tag: GroupTag,
        n: usize,
        elements: impl IntoIterator<Item = Element>,
    ) -> Result<Self> {
        let mut s = FormalSum::zero(tag, n);
        for w in elements {
            s.check_element(&w)?;
            s.add_term(w, 1);
        }
        Ok(s)
    }

    fn check_element(&self, w: &Element) -> Result<()> {
        if w.tag() != self.tag || w.n() != self.n {
            return Err(Error::Mismatch {
                left_tag: self.tag,
                left_n: self.n,
                right_tag: w.tag(),
                right_n: w.n(),
            });
        }
        Ok(())
    }

    fn check_same(&self, other: &FormalSum) -> Result<()> {
        if self.tag != other.tag || self.n != other.n {
            return Err(Error::Mismatch {
                left_tag: self.tag,
                left_n: self.n,
                right_tag: other.tag,
                right_n: other.n,
            });
        }
        Ok(())
    }

    fn add_term(&mut self, w: Element, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Element) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Element, i64)> + '_ {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// Every coefficient equals 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&c| c == 1)
    }

    /// Applies a monomial weight `w -> q^a t^b` termwise.
    pub fn image<F>(&self, weight: F) -> Result<BivarPoly>
    where
        F: Fn(&Element) -> Result<(u32, u32)>,
    {
        let mut terms = Vec::with_capacity(self.len());
        for (w, c) in self.terms() {
            terms.push((weight(w)?, c.into()));
        }
        Ok(BivarPoly::from_terms(terms))
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "[{w}]")?;
        }
        Ok(())
    }
}

pub fn fs_add(a: &FormalSum, b: &FormalSum) -> Result<FormalSum> {
    a.check_same(b)?;
    let mut out = a.clone();
    for (w, c) in b.terms() {
        out.add_term(w.clone(), c);
    }
    Ok(out)
}

/// Bilinear extension of composition. The left operand is split into chunks
/// multiplied independently; partial sums merge by coefficient addition.
pub fn fs_mul(a: &FormalSum, b: &FormalSum) -> Result<FormalSum> {
    a.check_same(b)?;
    let left: Vec<(&Element, i64)> = a.terms().collect();
    let right: Vec<(&Element, i64)> = b.terms().collect();
    let merged = left
        .par_chunks(MUL_CHUNK)
        .map(|chunk| {
            let mut local: BTreeMap<Element, i64> = BTreeMap::new();
            for &(u, cu) in chunk {
                for &(v, cv) in &right {
                    *local.entry(u.compose_unchecked(v)).or_insert(0) += cu * cv;
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (w, c) in y {
                *x.entry(w).or_insert(0) += c;
            }
            x
        });
    let mut out = FormalSum::zero(a.tag, a.n);
    out.terms = merged.into_iter().filter(|(_, c)| *c != 0).collect();
    Ok(out)
}

pub fn diagonal_sum(tag: GroupTag, n: usize, limits: &Limits) -> Result<FormalSum> {
    FormalSum::from_elements(tag, n, enumerate_group(tag, n, limits)?)
}

// ---------------------------------------------------------------------------
// Factors
// ---------------------------------------------------------------------------

/// Simple generator: `s_k = t(k,k+1)` for `k >= 1`; `s_0 = t(-1,1)` in B;
/// `s_{-1} = t(-1,2)` in D.
fn simple(tag: GroupTag, n: usize, k: i32) -> Element {
    let t = match k {
        0 => SignedTransposition { i: -1, j: 1 },
        -1 => SignedTransposition { i: -1, j: 2 },
        _ => SignedTransposition { i: k, j: k + 1 },
    };
    t.to_element(tag, n)
        .expect("generator index checked by caller")
}

/// Product of simple generators in the given order.
fn word_of(tag: GroupTag, n: usize, gens: impl IntoIterator<Item = i32>) -> Element {
    gens.into_iter().fold(Element::identity(tag, n), |acc, k| {
        acc.compose_unchecked(&simple(tag, n, k))
    })
}

fn left_mul(w: &Element, s: &FormalSum) -> FormalSum {
    let mut out = FormalSum::zero(s.tag, s.n);
    for (v, c) in s.terms() {
        out.add_term(w.compose_unchecked(v), c);
    }
    out
}

fn factor_range(tag: GroupTag, kind: FactorKind, n: usize) -> std::ops::RangeInclusive<usize> {
    match (tag, kind) {
        (GroupTag::A, _) => 1..=n.saturating_sub(1),
        (GroupTag::B, _) => 1..=n,
        (GroupTag::D, FactorKind::Psi) => 1..=n.saturating_sub(1),
        (GroupTag::D, FactorKind::Phi) => 2..=n,
    }
}

fn check_factor(tag: GroupTag, kind: FactorKind, n: usize, index: usize) -> Result<()> {
    tag.check_rank(n)?;
    if !factor_range(tag, kind, n).contains(&index) {
        return Err(Error::BadFactorIndex { tag, n, index });
    }
    Ok(())
}

/// The insertion factor `Psi_i` in the group algebra of the rank-`n` group.
///
/// * A: `Psi_i = 1 + s_i Psi_{i-1}`, `Psi_0 = 1`.
/// * B: `Psi_1 = 1 + s_0`, `Psi_i = 1 + s_{i-1} Psi_{i-1} + s_{i-1}..s_1 s_0 s_1..s_{i-1}`.
/// * D: `Psi_1 = 1 + s_1 + s_{-1} + s_1 s_{-1}`,
///   `Psi_i = 1 + s_i Psi_{i-1} + s_i..s_2 s_1 s_{-1} s_2..s_i`.
pub fn psi_factor(tag: GroupTag, n: usize, i: usize) -> Result<FormalSum> {
    check_factor(tag, FactorKind::Psi, n, i)?;
    let one = FormalSum::identity(tag, n);
    let mut psi = match tag {
        GroupTag::A => one.clone(),
        GroupTag::B => fs_add(&one, &FormalSum::from_element(simple(tag, n, 0)))?,
        GroupTag::D => FormalSum::from_elements(
            tag,
            n,
            [
                Element::identity(tag, n),
                simple(tag, n, 1),
                simple(tag, n, -1),
                word_of(tag, n, [1, -1]),
            ],
        )?,
    };
    let first = match tag {
        GroupTag::A => 1,
        GroupTag::B | GroupTag::D => 2,
    };
    for k in first..=i {
        let k = k as i32;
        psi = match tag {
            GroupTag::A => fs_add(&one, &left_mul(&simple(tag, n, k), &psi))?,
            GroupTag::B => {
                let s = k - 1;
                let down: Vec<i32> = (0..=s).rev().collect();
                let up = 1..=s;
                let long = word_of(tag, n, down.into_iter().chain(up));
                let mut next = fs_add(&one, &left_mul(&simple(tag, n, s), &psi))?;
                next.add_term(long, 1);
                next
            }
            GroupTag::D => {
                let down: Vec<i32> = (1..=k).rev().collect();
                let long = word_of(tag, n, down.into_iter().chain([-1]).chain(2..=k));
                let mut next = fs_add(&one, &left_mul(&simple(tag, n, k), &psi))?;
                next.add_term(long, 1);
                next
            }
        };
    }
    Ok(psi)
}

/// The transposition factor `Phi_j`: 1 plus every transposition whose larger
/// index is the newest letter. Type A: `1 + sum_{i <= j} t(i, j+1)`. Types B
/// and D: `1 + sum_{-j <= i < j, i != 0} t(i, j)`.
pub fn phi_factor(tag: GroupTag, n: usize, j: usize) -> Result<FormalSum> {
    check_factor(tag, FactorKind::Phi, n, j)?;
    let j = j as i32;
    let transpositions: Vec<SignedTransposition> = match tag {
        GroupTag::A => (1..=j)
            .map(|i| SignedTransposition { i, j: j + 1 })
            .collect(),
        GroupTag::B | GroupTag::D => (-j..j)
            .filter(|&i| i != 0)
            .map(|i| SignedTransposition { i, j })
            .collect(),
    };
    let mut elements = vec![Element::identity(tag, n)];
    for t in transpositions {
        elements.push(t.to_element(tag, n)?);
    }
    FormalSum::from_elements(tag, n, elements)
}

// ---------------------------------------------------------------------------
// Factorization checks
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FactorKind {
    Psi,
    Phi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "psiA")]
    PsiA,
    #[serde(rename = "phiA")]
    PhiA,
    #[serde(rename = "psiB")]
    PsiB,
    #[serde(rename = "phiB")]
    PhiB,
    #[serde(rename = "psiD")]
    PsiD,
    #[serde(rename = "phiD")]
    PhiD,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::PsiA,
        Family::PhiA,
        Family::PsiB,
        Family::PhiB,
        Family::PsiD,
        Family::PhiD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::PsiA => "psiA",
            Family::PhiA => "phiA",
            Family::PsiB => "psiB",
            Family::PhiB => "phiB",
            Family::PsiD => "psiD",
            Family::PhiD => "phiD",
        }
    }

    pub fn tag(self) -> GroupTag {
        match self {
            Family::PsiA | Family::PhiA => GroupTag::A,
            Family::PsiB | Family::PhiB => GroupTag::B,
            Family::PsiD | Family::PhiD => GroupTag::D,
        }
    }

    fn kind(self) -> FactorKind {
        match self {
            Family::PsiA | Family::PsiB | Family::PsiD => FactorKind::Psi,
            Family::PhiA | Family::PhiB | Family::PhiD => FactorKind::Phi,
        }
    }

    /// Smallest rank the factorization is asserted for.
    pub fn min_rank(self) -> usize {
        match self.tag() {
            GroupTag::A | GroupTag::B => 2,
            GroupTag::D => 4,
        }
    }

    /// Factor indices in multiplication order.
    pub fn indices(self, n: usize) -> std::ops::RangeInclusive<usize> {
        factor_range(self.tag(), self.kind(), n)
    }

    pub fn factor(self, n: usize, index: usize) -> Result<FormalSum> {
        match self.kind() {
            FactorKind::Psi => psi_factor(self.tag(), n, index),
            FactorKind::Phi => phi_factor(self.tag(), n, index),
        }
    }

    /// The monomial each element contributes to this family's generating
    /// function: `q^inv t^(n-m)` (psiA), `q^sor t^rlen` (phiA, phiB),
    /// `q^inv t^mB` (psiB), `q^inv` (psiD), `q^sor` (phiD).
    pub fn weight(self, w: &Element, rlen: RlenSource) -> Result<(u32, u32)> {
        let pair = match self {
            Family::PsiA => (inv(w), w.n() as u64 - rlmin_m(w)?),
            Family::PhiA | Family::PhiB => (sor(w), refl_len_with(w, rlen)?),
            Family::PsiB => (inv(w), m_b(w)?),
            Family::PsiD => (inv(w), 0),
            Family::PhiD => (sor(w), 0),
        };
        Ok((pair.0 as u32, pair.1 as u32))
    }

    /// Image of factor `index` under [`Family::weight`], as a closed form.
    pub fn expected_factor_image(self, index: usize) -> BivarPoly {
        let k = index as u32;
        let refined = |m: u32| {
            &BivarPoly::one()
                + &(&BivarPoly::t() * &(&q_int(m).expect("m >= 1") - &BivarPoly::one()))
        };
        let fork = |e: u32, m: u32| {
            &(&BivarPoly::one() + &BivarPoly::monomial(e, 0, 1)) * &q_int(m).expect("m >= 1")
        };
        match self {
            Family::PsiA | Family::PhiA => refined(k + 1),
            Family::PsiB | Family::PhiB => refined(2 * k),
            Family::PsiD => fork(k, k + 1),
            Family::PhiD => fork(k - 1, k),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown factorization {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    pub word: Vec<i32>,
    pub coefficient: i64,
    pub expected: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub which: Family,
    pub n: usize,
    pub ok: bool,
    pub term_count: usize,
    /// Every partial product had all coefficients equal to 1.
    pub multiplicity_free: bool,
    /// Up to ten offending elements.
    pub mismatches: Vec<CoefficientMismatch>,
}

const MAX_MISMATCHES: usize = 10;

/// Multiplies the family's factors left to right and compares the product
/// with the diagonal sum. Stops at the first partial product that is not
/// multiplicity-free or whose size is not the product of the factor sizes.
pub fn verify_factorization(
    which: Family,
    n: usize,
    limits: &Limits,
) -> Result<VerificationReport> {
    let tag = which.tag();
    if n < which.min_rank() {
        return Err(Error::BadRank { tag, n });
    }
    limits.check_group(tag, n)?;

    let mut product = FormalSum::identity(tag, n);
    let mut expected_len = 1usize;
    for index in which.indices(n) {
        let factor = which.factor(n, index)?;
        expected_len *= factor.len();
        product = fs_mul(&product, &factor)?;
        if !product.is_multiplicity_free() || product.len() != expected_len {
            let mismatches = product
                .terms()
                .filter(|&(_, c)| c != 1)
                .take(MAX_MISMATCHES)
                .map(|(w, c)| CoefficientMismatch {
                    word: w.word().to_vec(),
                    coefficient: c,
                    expected: 1,
                })
                .collect();
            return Ok(VerificationReport {
                which,
                n,
                ok: false,
                term_count: product.len(),
                multiplicity_free: false,
                mismatches,
            });
        }
    }

    let diagonal = diagonal_sum(tag, n, limits)?;
    let mut mismatches = Vec::new();
    for (w, c) in diagonal.terms() {
        let got = product.coefficient(w);
        if got != c && mismatches.len() < MAX_MISMATCHES {
            mismatches.push(CoefficientMismatch {
                word: w.word().to_vec(),
                coefficient: got,
                expected: c,
            });
        }
    }
    Ok(VerificationReport {
        which,
        n,
        ok: product == diagonal,
        term_count: product.len(),
        multiplicity_free: true,
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedImageReport {
    pub which: Family,
    pub n: usize,
    /// Each factor's image equals its closed form.
    pub factor_images_ok: bool,
    /// Product of the factor images equals the image of the full product.
    pub multiplicative: bool,
    pub image: BivarPoly,
}

impl WeightedImageReport {
    pub fn ok(&self) -> bool {
        self.factor_images_ok && self.multiplicative
    }
}

/// Applies the family's weight to each factor and to the full product.
pub fn check_weighted_images(
    which: Family,
    n: usize,
    rlen: RlenSource,
    limits: &Limits,
) -> Result<WeightedImageReport> {
    let tag = which.tag();
    if n < which.min_rank() {
        return Err(Error::BadRank { tag, n });
    }
    limits.check_group(tag, n)?;
    let weight = |w: &Element| which.weight(w, rlen);

    let mut product = FormalSum::identity(tag, n);
    let mut image_product = BivarPoly::one();
    let mut factor_images_ok = true;
    for index in which.indices(n) {
        let factor = which.factor(n, index)?;
        let img = factor.image(weight)?;
        factor_images_ok &= img == which.expected_factor_image(index);
        image_product = &image_product * &img;
        product = fs_mul(&product, &factor)?;
    }
    let image = product.image(weight)?;
    Ok(WeightedImageReport {
        which,
        n,
        factor_images_ok,
        multiplicative: image == image_product,
        image,
    })
}
