//! Scalar statistics on group elements.
//!
//! | name   | A | B | D |
//! |--------|---|---|---|
//! | `inv`  | x | x | x |
//! | `sor`  | x | x | x |
//! | `len`  | x | x | x |
//! | `cyc`  | x |   |   |
//! | `m`    | x |   |   |
//! | `N`    |   | x | x |
//! | `mB`   |   | x |   |
//! | `rlen` | x | x |   |

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{cycle_decomposition, enumerate_group, CycleKind, Element, GroupTag, Limits};
use crate::oracle::{cached_bfs_table, GeneratorSet};
use crate::sorting;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Stat {
    Inv,
    Sor,
    Cyc,
    RlminM,
    NegCount,
    MB,
    ReflLen,
    Length,
}

impl Stat {
    pub const ALL: [Stat; 8] = [
        Stat::Inv,
        Stat::Sor,
        Stat::Cyc,
        Stat::RlminM,
        Stat::NegCount,
        Stat::MB,
        Stat::ReflLen,
        Stat::Length,
    ];

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Stat::Inv => "inv",
            Stat::Sor => "sor",
            Stat::Cyc => "cyc",
            Stat::RlminM => "m",
            Stat::NegCount => "N",
            Stat::MB => "mB",
            Stat::ReflLen => "rlen",
            Stat::Length => "len",
        }
    }

    pub fn supports(self, tag: GroupTag) -> bool {
        use GroupTag::*;
        match self {
            Stat::Inv | Stat::Sor | Stat::Length => true,
            Stat::Cyc | Stat::RlminM => tag == A,
            Stat::NegCount => tag != A,
            Stat::MB => tag == B,
            Stat::ReflLen => tag != D,
        }
    }

    /// Statistics defined for `tag`, in table order.
    pub fn for_tag(tag: GroupTag) -> impl Iterator<Item = Stat> {
        Stat::ALL.into_iter().filter(move |s| s.supports(tag))
    }

    pub fn check(self, tag: GroupTag) -> Result<()> {
        if self.supports(tag) {
            Ok(())
        } else {
            Err(Error::StatUnsupported {
                stat: self.name(),
                tag,
            })
        }
    }

    pub fn eval(self, w: &Element) -> Result<u64> {
        self.eval_with(w, RlenSource::Auto)
    }

    pub fn eval_with(self, w: &Element, rlen: RlenSource) -> Result<u64> {
        self.check(w.tag())?;
        Ok(match self {
            Stat::Inv | Stat::Length => inv(w),
            Stat::Sor => sorting::sor(w),
            Stat::Cyc => cyc(w)?,
            Stat::RlminM => rlmin_m(w)?,
            Stat::NegCount => neg_count(w)?,
            Stat::MB => m_b(w)?,
            Stat::ReflLen => refl_len_with(w, rlen)?,
        })
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "inv" => Stat::Inv,
            "sor" => Stat::Sor,
            "cyc" => Stat::Cyc,
            "m" | "rlmin_m" => Stat::RlminM,
            "N" | "neg_count" => Stat::NegCount,
            "mB" | "m_B" => Stat::MB,
            "rlen" | "refl_len" => Stat::ReflLen,
            "len" | "length" => Stat::Length,
            other => return Err(Error::UnknownStat(other.to_string())),
        })
    }
}

/// Inversion number; equals Coxeter length in all three types.
///
/// Type B counts pairs `i < j` with `w(i) > w(j)`, pairs with `-w(i) > w(j)`,
/// and negative entries. Type D drops the negative-entry term.
pub fn inv(w: &Element) -> u64 {
    let word = w.word();
    let mut count = 0u64;
    for (i, &x) in word.iter().enumerate() {
        for &y in &word[i + 1..] {
            count += u64::from(x > y);
            if w.tag() != GroupTag::A {
                count += u64::from(-x > y);
            }
        }
    }
    if w.tag() == GroupTag::B {
        count += w.negatives() as u64;
    }
    count
}

pub fn length(w: &Element) -> u64 {
    inv(w)
}

/// Number of right-to-left minima.
pub fn rlmin_m(w: &Element) -> Result<u64> {
    Stat::RlminM.check(w.tag())?;
    let mut min = i32::MAX;
    let mut count = 0;
    for &x in w.word().iter().rev() {
        if x < min {
            min = x;
            count += 1;
        }
    }
    Ok(count)
}

pub fn cyc(w: &Element) -> Result<u64> {
    Stat::Cyc.check(w.tag())?;
    Ok(cycle_decomposition(w).len() as u64)
}

pub fn neg_count(w: &Element) -> Result<u64> {
    Stat::NegCount.check(w.tag())?;
    Ok(w.negatives() as u64)
}

/// `#{i : w_i > |w_j| for some j > i} + N(w)`.
pub fn m_b(w: &Element) -> Result<u64> {
    Stat::MB.check(w.tag())?;
    let word = w.word();
    let mut min_abs_right = u32::MAX;
    let mut bad = 0u64;
    for &x in word.iter().rev() {
        if x > 0 && x.unsigned_abs() > min_abs_right {
            bad += 1;
        }
        min_abs_right = min_abs_right.min(x.unsigned_abs());
    }
    Ok(bad + w.negatives() as u64)
}

/// Where type B reflection length comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RlenSource {
    /// Cycle-structure formula once validated against BFS, otherwise BFS.
    #[default]
    Auto,
    /// Always look up the (cached) BFS table.
    Bfs,
}

pub fn refl_len(w: &Element) -> Result<u64> {
    refl_len_with(w, RlenSource::Auto)
}

pub fn refl_len_with(w: &Element, source: RlenSource) -> Result<u64> {
    Stat::ReflLen.check(w.tag())?;
    match (w.tag(), source) {
        (GroupTag::A, RlenSource::Auto) => Ok(w.n() as u64 - cyc(w)?),
        (GroupTag::B, RlenSource::Auto) if type_b_fast_path_enabled() => Ok(refl_len_b_cycles(w)),
        (GroupTag::B, RlenSource::Auto) => refl_len_bfs(w).map_err(|e| match e {
            Error::CapExceeded {
                what,
                needed,
                limit,
            } => Error::CapExceeded {
                what: format!("{what} (type B reflection-length fast path disabled)"),
                needed,
                limit,
            },
            other => other,
        }),
        _ => refl_len_bfs(w),
    }
}

fn refl_len_bfs(w: &Element) -> Result<u64> {
    let gen = GeneratorSet::reflections(w.tag(), w.n())?;
    let table = cached_bfs_table(gen, &Limits::default())?;
    Ok(table.distance(w)? as u64)
}

/// `n` minus the number of positive cycle pairs.
pub fn refl_len_b_cycles(w: &Element) -> u64 {
    let c = cycle_decomposition(w);
    (w.n() - c.count(CycleKind::Positive)) as u64
}

/// Largest rank at which the cycle formula is checked against BFS before it
/// is trusted.
pub const FAST_PATH_VALIDATION_RANK: usize = 5;

/// Compares [`refl_len_b_cycles`] with BFS on all of `B_1 .. B_max_n`;
/// returns the first disagreement as `(element, formula, bfs)`.
pub fn validate_type_b_fast_path(max_n: usize) -> Result<Option<(Element, u64, u64)>> {
    let limits = Limits::default();
    for n in 1..=max_n {
        let table = cached_bfs_table(GeneratorSet::reflections(GroupTag::B, n)?, &limits)?;
        for w in enumerate_group(GroupTag::B, n, &limits)? {
            let fast = refl_len_b_cycles(&w);
            let bfs = table.distance(&w)? as u64;
            if fast != bfs {
                return Ok(Some((w, fast, bfs)));
            }
        }
    }
    Ok(None)
}

pub fn type_b_fast_path_enabled() -> bool {
    static ENABLED: OnceLock<bool> = OnceLock::new();
    *ENABLED.get_or_init(|| {
        matches!(
            validate_type_b_fast_path(FAST_PATH_VALIDATION_RANK),
            Ok(None)
        )
    })
}
