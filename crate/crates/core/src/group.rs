//! Elements of the symmetric group `S_n` (type A), the hyperoctahedral group
//! `B_n` of signed permutations, and its even-signed subgroup `D_n`.
//!
//! Every element is stored by its one-line word `w_1 .. w_n`; the value on a
//! negative point is implied by `w(-k) = -w(k)`. Products compose right to
//! left, `(u * v)(k) = u(v(k))`, so right multiplication by a transposition
//! acts on positions of the word.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupTag {
    A,
    B,
    D,
}

impl GroupTag {
    pub const ALL: [GroupTag; 3] = [GroupTag::A, GroupTag::B, GroupTag::D];

    /// Smallest rank accepted for this type.
    pub fn min_rank(self) -> usize {
        match self {
            GroupTag::A | GroupTag::B => 1,
            GroupTag::D => 2,
        }
    }

    pub fn check_rank(self, n: usize) -> Result<()> {
        if n < self.min_rank() {
            return Err(Error::BadRank { tag: self, n });
        }
        Ok(())
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupTag::A => "A",
            GroupTag::B => "B",
            GroupTag::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(GroupTag::A),
            "B" | "b" => Ok(GroupTag::B),
            "D" | "d" => Ok(GroupTag::D),
            other => Err(Error::Invalid(format!("unknown group type {other:?}"))),
        }
    }
}

/// Size limits for anything that walks a whole group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: u128,
    pub max_edge_relaxations: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 2_000_000,
            max_edge_relaxations: 100_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_elements(max_elements: u128) -> Self {
        Limits {
            max_elements,
            ..Limits::default()
        }
    }

    pub fn check_group(&self, tag: GroupTag, n: usize) -> Result<u128> {
        tag.check_rank(n)?;
        let order = group_order(tag, n);
        match order {
            Some(order) if order <= self.max_elements => Ok(order),
            _ => Err(Error::CapExceeded {
                what: format!("{tag}{n}"),
                needed: order.unwrap_or(u128::MAX),
                limit: self.max_elements,
            }),
        }
    }
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

fn pow2(e: usize) -> Option<u128> {
    1u128.checked_shl(e as u32).filter(|_| e < 128)
}

/// `n!`, `2^n n!` or `2^(n-1) n!`; `None` when it does not fit in 128 bits.
pub fn group_order(tag: GroupTag, n: usize) -> Option<u128> {
    let f = factorial(n)?;
    match tag {
        GroupTag::A => Some(f),
        GroupTag::B => f.checked_mul(pow2(n)?),
        GroupTag::D => {
            if n == 0 {
                Some(1)
            } else {
                f.checked_mul(pow2(n - 1)?)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    tag: GroupTag,
    word: Vec<i32>,
}

impl Element {
    /// Validates the word against the invariants of `tag`.
    pub fn new(tag: GroupTag, word: Vec<i32>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let mut seen = vec![false; n];
        for &x in &word {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n {
                return Err(Error::OutOfRange { value: x as i64, n });
            }
            if seen[a - 1] {
                return Err(Error::RepeatedValue(a as u32));
            }
            seen[a - 1] = true;
        }
        match tag {
            GroupTag::A => {
                if let Some(&x) = word.iter().find(|&&x| x < 0) {
                    return Err(Error::NegativeInTypeA(x));
                }
            }
            GroupTag::B => {}
            GroupTag::D => {
                tag.check_rank(n)?;
                let neg = word.iter().filter(|&&x| x < 0).count();
                if neg % 2 == 1 {
                    return Err(Error::OddNegatives(neg));
                }
            }
        }
        Ok(Element { tag, word })
    }

    fn from_word_unchecked(tag: GroupTag, word: Vec<i32>) -> Self {
        debug_assert!(Element::new(tag, word.clone()).is_ok(), "{tag} {word:?}");
        Element { tag, word }
    }

    pub fn identity(tag: GroupTag, n: usize) -> Self {
        Element {
            tag,
            word: (1..=n as i32).collect(),
        }
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<i32> {
        self.word
    }

    /// `w(k)` for `k` in `±{1..n}`.
    pub fn apply(&self, k: i32) -> i32 {
        let v = self.word[k.unsigned_abs() as usize - 1];
        if k < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i as i32 + 1)
    }

    pub fn negatives(&self) -> usize {
        self.word.iter().filter(|&&x| x < 0).count()
    }

    pub fn inverse(&self) -> Element {
        let mut inv = vec![0; self.n()];
        for (k, &x) in self.word.iter().enumerate() {
            let pos = k as i32 + 1;
            inv[x.unsigned_abs() as usize - 1] = if x < 0 { -pos } else { pos };
        }
        Element::from_word_unchecked(self.tag, inv)
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.tag != other.tag || self.n() != other.n() {
            return Err(Error::Mismatch {
                left_tag: self.tag,
                left_n: self.n(),
                right_tag: other.tag,
                right_n: other.n(),
            });
        }
        Ok(())
    }

    /// `(self * other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Element) -> Element {
        let word = other.word.iter().map(|&v| self.apply(v)).collect();
        Element {
            tag: self.tag,
            word,
        }
    }

    /// Right multiplication by a signed transposition, computed in place on
    /// the word. Equal to `self.compose(&t.to_element(tag, n)?)`.
    pub fn right_mult(&self, t: SignedTransposition) -> Result<Element> {
        t.validate(self.tag, self.n())?;
        let mut out = self.clone();
        out.right_mult_in_place(t);
        Ok(out)
    }

    /// Caller guarantees `t` is valid for this element's tag and rank.
    pub(crate) fn right_mult_in_place(&mut self, t: SignedTransposition) {
        let j = t.j as usize - 1;
        if t.i > 0 {
            self.word.swap(t.i as usize - 1, j);
        } else if -t.i != t.j {
            let i = (-t.i) as usize - 1;
            let (a, b) = (self.word[i], self.word[j]);
            self.word[i] = -b;
            self.word[j] = -a;
        } else if self.tag == GroupTag::D {
            // In D the bar-swap t(-j,j) negates positions 1 and j; t(-1,1) = 1.
            if j != 0 {
                self.word[0] = -self.word[0];
                self.word[j] = -self.word[j];
            }
        } else {
            self.word[j] = -self.word[j];
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Parses a one-line word: optional sign and decimal digits, separated by
/// whitespace or commas.
pub fn parse_element(text: &str, tag: GroupTag) -> Result<Element> {
    let mut word = Vec::new();
    for tok in text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
    {
        let x: i64 = tok.parse().map_err(|_| Error::BadToken(tok.to_string()))?;
        if x == 0 {
            return Err(Error::BadToken(tok.to_string()));
        }
        let x = i32::try_from(x).map_err(|_| Error::OutOfRange {
            value: x,
            n: usize::MAX,
        })?;
        word.push(x);
    }
    // Report an out-of-range token with the real word length.
    let n = word.len();
    if let Some(&x) = word.iter().find(|x| x.unsigned_abs() as usize > n) {
        return Err(Error::OutOfRange { value: x as i64, n });
    }
    Element::new(tag, word)
}

/// `t(i, j)` with `j >= 1` and `-j <= i < j`, `i != 0`, or `i = -j`.
///
/// Positive `i` swaps positions `i` and `j`. Negative `i` swaps `|i|` with
/// `-j` (and `-|i|` with `j`); `t(-j, j)` negates position `j` in type B and
/// negates positions 1 and `j` in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedTransposition {
    pub i: i32,
    pub j: i32,
}

impl SignedTransposition {
    pub fn new(i: i32, j: i32) -> Result<Self> {
        if j < 1 || i == 0 || i < -j || i >= j {
            return Err(Error::Invalid(format!(
                "t({i},{j}) is not a signed transposition"
            )));
        }
        Ok(SignedTransposition { i, j })
    }

    pub fn validate(self, tag: GroupTag, n: usize) -> Result<()> {
        let shape_ok = self.j >= 1 && self.i != 0 && self.i >= -self.j && self.i < self.j;
        let tag_ok = match tag {
            GroupTag::A => self.i >= 1,
            GroupTag::B | GroupTag::D => true,
        };
        if !shape_ok || !tag_ok || self.j as usize > n {
            return Err(Error::BadTransposition {
                i: self.i,
                j: self.j,
                tag,
                n,
            });
        }
        Ok(())
    }

    pub fn to_element(self, tag: GroupTag, n: usize) -> Result<Element> {
        Element::identity(tag, n).right_mult(self)
    }

    pub fn is_barred(self) -> bool {
        self.i < 0
    }
}

impl fmt::Display for SignedTransposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t({},{})", self.i, self.j)
    }
}

// ---------------------------------------------------------------------------
// Enumeration in lexicographic order of words
// ---------------------------------------------------------------------------

/// Number of ways to complete a word when `m` positions remain, including the
/// current one, divided by the number of choices at the current position.
fn branch_weight(tag: GroupTag, m: usize) -> u128 {
    let rest = m - 1;
    let f = factorial(rest).expect("rank checked against limits");
    match tag {
        GroupTag::A => f,
        GroupTag::B => f << rest,
        GroupTag::D => {
            if rest == 0 {
                1
            } else {
                f << (rest - 1)
            }
        }
    }
}

/// Lexicographic rank of `w` among all words of its group.
pub fn rank(w: &Element) -> u128 {
    let n = w.n();
    let mut rem: Vec<i32> = (1..=n as i32).collect();
    let mut r = 0u128;
    let last = match w.tag {
        GroupTag::D => n - 1,
        _ => n,
    };
    for (k, &x) in w.word[..last].iter().enumerate() {
        let m = n - k;
        let a = rem
            .binary_search(&(x.abs()))
            .expect("word is a signed permutation");
        let digit = match w.tag {
            GroupTag::A => a,
            _ if x < 0 => m - 1 - a,
            _ => m + a,
        };
        r += digit as u128 * branch_weight(w.tag, m);
        rem.remove(a);
    }
    r
}

/// Inverse of [`rank`]. `r` must be below the group order.
pub fn unrank(tag: GroupTag, n: usize, mut r: u128) -> Element {
    let mut rem: Vec<i32> = (1..=n as i32).collect();
    let mut word = Vec::with_capacity(n);
    let last = match tag {
        GroupTag::D => n - 1,
        _ => n,
    };
    let mut negs = 0;
    for k in 0..last {
        let m = n - k;
        let wt = branch_weight(tag, m);
        let digit = (r / wt) as usize;
        r %= wt;
        let x = match tag {
            GroupTag::A => rem.remove(digit),
            _ if digit < m => {
                negs += 1;
                -rem.remove(m - 1 - digit)
            }
            _ => rem.remove(digit - m),
        };
        word.push(x);
    }
    if tag == GroupTag::D {
        let v = rem[0];
        word.push(if negs % 2 == 1 { -v } else { v });
    }
    Element::from_word_unchecked(tag, word)
}

/// Streams the elements with ranks in a half-open range, in lexicographic
/// order. Disjoint ranges give disjoint streams.
#[derive(Debug, Clone)]
pub struct GroupIter {
    tag: GroupTag,
    n: usize,
    next: u128,
    end: u128,
}

impl Iterator for GroupIter {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.next >= self.end {
            return None;
        }
        let w = unrank(self.tag, self.n, self.next);
        self.next += 1;
        Some(w)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GroupIter {}

pub fn enumerate_group(tag: GroupTag, n: usize, limits: &Limits) -> Result<GroupIter> {
    let order = limits.check_group(tag, n)?;
    Ok(GroupIter {
        tag,
        n,
        next: 0,
        end: order,
    })
}

pub fn enumerate_range(
    tag: GroupTag,
    n: usize,
    ranks: Range<u128>,
    limits: &Limits,
) -> Result<GroupIter> {
    let order = limits.check_group(tag, n)?;
    Ok(GroupIter {
        tag,
        n,
        next: ranks.start.min(order),
        end: ranks.end.min(order),
    })
}

// ---------------------------------------------------------------------------
// Cycles
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleKind {
    /// A cycle of an unsigned permutation.
    Plain,
    /// Does not contain both `k` and `-k`; its mirror image is implied.
    Positive,
    /// Contains some `k` together with `-k`; closed under negation.
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    pub kind: CycleKind,
    pub entries: Vec<i32>,
}

impl Cycle {
    pub fn least_abs(&self) -> u32 {
        self.entries
            .iter()
            .map(|x| x.unsigned_abs())
            .min()
            .unwrap_or(0)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Type A: cycles with their least element last, ordered by least element.
/// Types B and D: one cycle per mirror pair (or per self-mirror cycle),
/// starting at its smallest absolute value taken positive, ordered by that
/// value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    pub tag: GroupTag,
    pub n: usize,
    pub cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn count(&self, kind: CycleKind) -> usize {
        self.cycles.iter().filter(|c| c.kind == kind).count()
    }

    /// Rebuilds the element the cycles describe.
    pub fn to_element(&self) -> Result<Element> {
        let mut word = vec![0i32; self.n];
        for c in &self.cycles {
            let len = c.entries.len();
            for (idx, &e) in c.entries.iter().enumerate() {
                let next = c.entries[(idx + 1) % len];
                let slot = e.unsigned_abs() as usize - 1;
                if slot >= self.n {
                    return Err(Error::OutOfRange {
                        value: e as i64,
                        n: self.n,
                    });
                }
                word[slot] = if e > 0 { next } else { -next };
            }
        }
        Element::new(self.tag, word)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn cycle_decomposition(w: &Element) -> CycleDecomposition {
    let n = w.n();
    let mut seen = vec![false; n + 1];
    let mut cycles = Vec::new();
    for k in 1..=n as i32 {
        if seen[k as usize] {
            continue;
        }
        let mut orbit = vec![k];
        seen[k as usize] = true;
        let mut x = w.apply(k);
        while x != k && x != -k {
            seen[x.unsigned_abs() as usize] = true;
            orbit.push(x);
            x = w.apply(x);
        }
        let cycle = match w.tag() {
            GroupTag::A => {
                // k is the least element of its cycle: rotate it to the end.
                orbit.rotate_left(1);
                Cycle {
                    kind: CycleKind::Plain,
                    entries: orbit,
                }
            }
            _ if x == -k => {
                let mirror: Vec<i32> = orbit.iter().map(|&y| -y).collect();
                orbit.extend(mirror);
                Cycle {
                    kind: CycleKind::Negative,
                    entries: orbit,
                }
            }
            _ => Cycle {
                kind: CycleKind::Positive,
                entries: orbit,
            },
        };
        cycles.push(cycle);
    }
    CycleDecomposition {
        tag: w.tag(),
        n,
        cycles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn el(tag: GroupTag, word: &[i32]) -> Element {
        Element::new(tag, word.to_vec()).unwrap()
    }

    fn t(i: i32, j: i32) -> SignedTransposition {
        SignedTransposition::new(i, j).unwrap()
    }

    #[test]
    fn parses_worked_examples() {
        let w = parse_element("2 -4 5 -1 -3", GroupTag::B).unwrap();
        assert_eq!(w.word(), &[2, -4, 5, -1, -3]);
        let id = parse_element("1 2 3", GroupTag::A).unwrap();
        assert!(id.is_identity());
        let d = parse_element("-3,2,4,-5,1", GroupTag::D).unwrap();
        assert_eq!(d.word(), &[-3, 2, 4, -5, 1]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_element("1 x 3", GroupTag::A),
            Err(Error::BadToken(_))
        ));
        assert!(matches!(
            parse_element("1 0 2", GroupTag::A),
            Err(Error::BadToken(_))
        ));
        assert_eq!(
            parse_element("1 -1", GroupTag::B),
            Err(Error::RepeatedValue(1))
        );
        assert_eq!(
            parse_element("1 4 2", GroupTag::A),
            Err(Error::OutOfRange { value: 4, n: 3 })
        );
        assert_eq!(
            parse_element("2 -1", GroupTag::A),
            Err(Error::NegativeInTypeA(-1))
        );
        assert_eq!(
            parse_element("-1 2 3", GroupTag::D),
            Err(Error::OddNegatives(1))
        );
        assert_eq!(parse_element("  ", GroupTag::A), Err(Error::EmptyWord));
    }

    #[test]
    fn compose_matches_bar_display() {
        // w = w_1 .. w_{n-1} n times t(-1,n) puts -n first and -w_1 last.
        let w = el(GroupTag::B, &[3, -1, 2, 4]);
        let tn = t(-1, 4).to_element(GroupTag::B, 4).unwrap();
        assert_eq!(w.compose(&tn).unwrap().word(), &[-4, -1, 2, -3]);
        let id = Element::identity(GroupTag::B, 4);
        assert_eq!(w.compose(&id).unwrap(), w);
    }

    #[test]
    fn compose_rejects_mismatch() {
        let a = Element::identity(GroupTag::A, 3);
        let b = Element::identity(GroupTag::B, 3);
        assert!(matches!(a.compose(&b), Err(Error::Mismatch { .. })));
        let c = Element::identity(GroupTag::A, 4);
        assert!(a.compose(&c).is_err());
    }

    #[test]
    fn right_mult_examples() {
        let w = el(GroupTag::B, &[2, -4, 5, -1, -3]);
        assert_eq!(w.right_mult(t(3, 5)).unwrap().word(), &[2, -4, -3, -1, 5]);
        let d = el(GroupTag::D, &[-3, 2, -1, 4, 5]);
        assert!(d.right_mult(t(-1, 3)).unwrap().is_identity());
        let d = el(GroupTag::D, &[-3, 2, 4, -5, 1]);
        assert_eq!(d.right_mult(t(-1, 1)).unwrap(), d);
        assert_eq!(d.right_mult(t(-4, 4)).unwrap().word(), &[3, 2, 4, 5, 1]);
    }

    #[test]
    fn right_mult_rejects_invalid() {
        let a = Element::identity(GroupTag::A, 3);
        assert!(a.right_mult(SignedTransposition { i: -1, j: 2 }).is_err());
        assert!(a.right_mult(SignedTransposition { i: 1, j: 4 }).is_err());
        assert!(SignedTransposition::new(2, 2).is_err());
        assert!(SignedTransposition::new(-3, 2).is_err());
        assert!(SignedTransposition::new(-2, 2).is_ok());
    }

    #[test]
    fn group_sizes() {
        let l = Limits::default();
        assert_eq!(enumerate_group(GroupTag::A, 3, &l).unwrap().count(), 6);
        assert_eq!(enumerate_group(GroupTag::B, 2, &l).unwrap().count(), 8);
        assert_eq!(enumerate_group(GroupTag::D, 4, &l).unwrap().count(), 192);
        assert!(enumerate_group(GroupTag::D, 1, &l).is_err());
        assert!(enumerate_group(GroupTag::A, 0, &l).is_err());
        let small = Limits::with_max_elements(100);
        assert!(matches!(
            enumerate_group(GroupTag::A, 5, &small),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_lexicographic_and_duplicate_free() {
        let l = Limits::default();
        for (tag, max) in [(GroupTag::A, 6), (GroupTag::B, 5), (GroupTag::D, 6)] {
            for n in tag.min_rank()..=max {
                let all: Vec<Element> = enumerate_group(tag, n, &l).unwrap().collect();
                assert_eq!(all.len() as u128, group_order(tag, n).unwrap());
                assert!(all.windows(2).all(|p| p[0].word() < p[1].word()));
                let set: HashSet<_> = all.iter().collect();
                assert_eq!(set.len(), all.len());
                for (r, w) in all.iter().enumerate().step_by(7) {
                    assert_eq!(rank(w), r as u128);
                }
            }
        }
    }

    #[test]
    fn ranges_partition_the_stream() {
        let l = Limits::default();
        let whole: Vec<_> = enumerate_group(GroupTag::D, 4, &l).unwrap().collect();
        let mut parts = Vec::new();
        for start in (0..192).step_by(50) {
            parts.extend(enumerate_range(GroupTag::D, 4, start..start + 50, &l).unwrap());
        }
        assert_eq!(whole, parts);
    }

    #[test]
    fn group_axioms_small() {
        let l = Limits::default();
        for (tag, n) in [(GroupTag::A, 4), (GroupTag::B, 3), (GroupTag::D, 4)] {
            let all: Vec<Element> = enumerate_group(tag, n, &l).unwrap().collect();
            let id = Element::identity(tag, n);
            for u in &all {
                assert_eq!(u.compose(&id).unwrap(), *u);
                assert_eq!(id.compose(u).unwrap(), *u);
                assert!(u.compose(&u.inverse()).unwrap().is_identity());
            }
            // associativity on a strided sample of triples
            for u in all.iter().step_by(5) {
                for v in all.iter().step_by(7) {
                    let uv = u.compose(v).unwrap();
                    for x in all.iter().step_by(11) {
                        let lhs = uv.compose(x).unwrap();
                        let rhs = u.compose(&v.compose(x).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn right_mult_agrees_with_compose() {
        let l = Limits::default();
        for (tag, n) in [(GroupTag::A, 4), (GroupTag::B, 3), (GroupTag::D, 4)] {
            for w in enumerate_group(tag, n, &l).unwrap() {
                for j in 1..=n as i32 {
                    for i in -j..j {
                        if i == 0 || (tag == GroupTag::A && i < 0) {
                            continue;
                        }
                        let tr = t(i, j);
                        let fast = w.right_mult(tr).unwrap();
                        let slow = w.compose(&tr.to_element(tag, n).unwrap()).unwrap();
                        assert_eq!(fast, slow);
                        let back = fast.right_mult(tr).unwrap();
                        if tag == GroupTag::D && i == -1 && j == 1 {
                            assert_eq!(fast, w);
                        } else {
                            assert_eq!(back, w);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cycles_type_a() {
        let w = parse_element("6 8 5 9 4 2 3 1 7", GroupTag::A).unwrap();
        let c = cycle_decomposition(&w);
        assert_eq!(c.to_string(), "(6 2 8 1)(5 4 9 7 3)");
        let id = Element::identity(GroupTag::A, 4);
        assert_eq!(cycle_decomposition(&id).len(), 4);
    }

    #[test]
    fn cycles_type_b() {
        let w = el(GroupTag::B, &[3, 4, -1, 8, 7, -6, 2, 5]);
        let c = cycle_decomposition(&w);
        assert_eq!(c.cycles.len(), 3);
        assert_eq!(c.cycles[0].kind, CycleKind::Negative);
        assert_eq!(c.cycles[0].entries, vec![1, 3, -1, -3]);
        assert_eq!(c.cycles[1].kind, CycleKind::Positive);
        assert_eq!(c.cycles[1].entries, vec![2, 4, 8, 5, 7]);
        assert_eq!(c.cycles[2].kind, CycleKind::Negative);
        assert_eq!(c.cycles[2].entries, vec![6, -6]);
        assert_eq!(c.count(CycleKind::Positive), 1);
    }

    #[test]
    fn cycles_round_trip() {
        let l = Limits::default();
        for (tag, n) in [(GroupTag::A, 5), (GroupTag::B, 3), (GroupTag::D, 4)] {
            for w in enumerate_group(tag, n, &l).unwrap() {
                assert_eq!(cycle_decomposition(&w).to_element().unwrap(), w);
            }
        }
    }
}
