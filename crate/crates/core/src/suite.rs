//! Named batches of exhaustive checks: factorization propositions,
//! generating-function identities, and BFS cross-checks.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{check_weighted_images, verify_factorization, Family};
use crate::error::{Error, Result};
use crate::group::{parse_element, GroupTag, Limits};
use crate::oracle::{cached_bfs_table, GeneratorSet};
use crate::qpoly::{
    closed_b, closed_d, closed_d_factored, closed_s, closed_s_reciprocal, closed_w, distribution,
    mahonian, shepard_todd, solomon, stirling_cycles, type_b_stirling, BivarPoly, DistOptions,
    ExponentList,
};
use crate::stats::{
    cyc, inv, refl_len, refl_len_b_cycles, validate_type_b_fast_path, RlenSource, Stat,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Props,
    Identities,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Props, Suite::Identities, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Props => "props",
            Suite::Identities => "identities",
            Suite::Oracle => "oracle",
        }
    }

    pub fn default_ranks(self) -> MaxRanks {
        match self {
            Suite::Props => MaxRanks { a: 6, b: 4, d: 5 },
            Suite::Identities => MaxRanks { a: 7, b: 5, d: 6 },
            Suite::Oracle => MaxRanks { a: 6, b: 5, d: 4 },
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

/// Largest rank checked per type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MaxRanks {
    pub a: usize,
    pub b: usize,
    pub d: usize,
}

impl MaxRanks {
    pub fn get(&self, tag: GroupTag) -> usize {
        match tag {
            GroupTag::A => self.a,
            GroupTag::B => self.b,
            GroupTag::D => self.d,
        }
    }

    /// Overrides from text such as `A=7,B=5,D=6`; unnamed types keep `self`.
    pub fn with_overrides(mut self, text: &str) -> Result<Self> {
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (tag, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("expected TYPE=N, got {part:?}")))?;
            let tag: GroupTag = tag.parse()?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad rank in {part:?}")))?;
            match tag {
                GroupTag::A => self.a = value,
                GroupTag::B => self.b = value,
                GroupTag::D => self.d = value,
            }
        }
        Ok(self)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub ok: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

struct Runner<'a> {
    suite: Suite,
    limits: &'a Limits,
    results: Vec<CheckResult>,
}

impl Runner<'_> {
    fn check(&mut self, name: String, body: impl FnOnce() -> Result<(bool, String)>) {
        let start = Instant::now();
        let (ok, detail) = body().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.results.push(CheckResult {
            suite: self.suite,
            name,
            ok,
            detail,
            elapsed: start.elapsed(),
        });
    }

    fn poly_eq(&mut self, name: String, compute: impl FnOnce() -> Result<(BivarPoly, BivarPoly)>) {
        self.check(name, || {
            let (got, want) = compute()?;
            if got == want {
                Ok((true, format!("{} terms", got.num_terms())))
            } else {
                Ok((false, format!("got {got}; expected {want}")))
            }
        });
    }
}

pub fn run_suite(suite: Suite, ranks: &MaxRanks, limits: &Limits) -> Vec<CheckResult> {
    let mut runner = Runner {
        suite,
        limits,
        results: Vec::new(),
    };
    match suite {
        Suite::Props => props(&mut runner, ranks),
        Suite::Identities => identities(&mut runner, ranks),
        Suite::Oracle => oracle(&mut runner, ranks),
    }
    runner.results
}

fn props(r: &mut Runner, ranks: &MaxRanks) {
    let limits = *r.limits;
    for family in Family::ALL {
        for n in family.min_rank()..=ranks.get(family.tag()) {
            r.check(format!("{family} n={n} product = diagonal sum"), || {
                let rep = verify_factorization(family, n, &limits)?;
                let ok = rep.ok && rep.multiplicity_free;
                let detail = if ok {
                    format!("{} terms, multiplicity-free", rep.term_count)
                } else {
                    format!(
                        "{} terms, multiplicity_free={}, first mismatches {:?}",
                        rep.term_count, rep.multiplicity_free, rep.mismatches
                    )
                };
                Ok((ok, detail))
            });
            r.check(format!("{family} n={n} weighted images"), || {
                let rep = check_weighted_images(family, n, RlenSource::Bfs, &limits)?;
                Ok((
                    rep.ok(),
                    format!(
                        "factor images {}, multiplicative {}",
                        rep.factor_images_ok, rep.multiplicative
                    ),
                ))
            });
        }
    }
}

fn identities(r: &mut Runner, ranks: &MaxRanks) {
    use GroupTag::*;
    let opts = DistOptions {
        limits: *r.limits,
        rlen: RlenSource::Bfs,
    };
    let dist = move |tag, n, q: Option<Stat>, t: Option<Stat>| distribution(tag, n, q, t, &opts);

    for n in 1..=ranks.a {
        let n32 = n as u32;
        r.poly_eq(format!("A n={n} sum q^inv t^m = prod(t+[i]-1)"), || {
            Ok((
                dist(A, n, Some(Stat::Inv), Some(Stat::RlminM))?,
                closed_s(n32)?,
            ))
        });
        r.poly_eq(format!("A n={n} sum q^sor t^cyc = prod(t+[i]-1)"), || {
            Ok((
                dist(A, n, Some(Stat::Sor), Some(Stat::Cyc))?,
                closed_s(n32)?,
            ))
        });
        r.poly_eq(
            format!("A n={n} sum q^inv t^(n-m) = prod(1+t[i]-t)"),
            || {
                let d = dist(A, n, Some(Stat::Inv), Some(Stat::RlminM))?;
                let rec = d
                    .reciprocal_t(n32)
                    .ok_or_else(|| Error::Invalid("t degree above n".into()))?;
                Ok((rec, closed_s_reciprocal(n32)?))
            },
        );
        r.poly_eq(format!("A n={n} sum q^sor t^rlen = prod(1+t[i]-t)"), || {
            Ok((
                dist(A, n, Some(Stat::Sor), Some(Stat::ReflLen))?,
                closed_s_reciprocal(n32)?,
            ))
        });
        r.poly_eq(format!("A n={n} sum q^inv = prod [i]_q"), || {
            Ok((dist(A, n, Some(Stat::Inv), None)?, mahonian(n32)))
        });
        r.poly_eq(format!("A n={n} sum q^sor = prod [i]_q"), || {
            Ok((dist(A, n, Some(Stat::Sor), None)?, mahonian(n32)))
        });
        r.poly_eq(format!("A n={n} sum t^cyc = t(t+1)..(t+n-1)"), || {
            Ok((dist(A, n, None, Some(Stat::Cyc))?, stirling_cycles(n32)))
        });
        if n >= 2 {
            r.poly_eq(
                format!("A n={n} W(q,t) from exponents = prod(1+t[i]-t)"),
                || {
                    Ok((
                        closed_w(&ExponentList::for_group(A, n)?),
                        closed_s_reciprocal(n32)?,
                    ))
                },
            );
        }
    }

    for n in 1..=ranks.b {
        let n32 = n as u32;
        r.poly_eq(format!("B n={n} sum q^invB t^mB = prod(1+t[2i]-t)"), || {
            Ok((dist(B, n, Some(Stat::Inv), Some(Stat::MB))?, closed_b(n32)?))
        });
        r.poly_eq(
            format!("B n={n} sum q^sorB t^rlenB = prod(1+t[2i]-t)"),
            || {
                Ok((
                    dist(B, n, Some(Stat::Sor), Some(Stat::ReflLen))?,
                    closed_b(n32)?,
                ))
            },
        );
        r.poly_eq(format!("B n={n} sum t^rlenB = prod(1+(2i-1)t)"), || {
            Ok((dist(B, n, None, Some(Stat::ReflLen))?, type_b_stirling(n32)))
        });
        r.poly_eq(
            format!("B n={n} W(q,t) from exponents = prod(1+t[2i]-t)"),
            || Ok((closed_w(&ExponentList::for_group(B, n)?), closed_b(n32)?)),
        );
    }

    for n in 4..=ranks.d {
        let n32 = n as u32;
        r.poly_eq(format!("D n={n} sum q^invD = [n] prod [2i]"), || {
            Ok((dist(D, n, Some(Stat::Inv), None)?, closed_d(n32)?))
        });
        r.poly_eq(format!("D n={n} sum q^sorD = [n] prod [2i]"), || {
            Ok((dist(D, n, Some(Stat::Sor), None)?, closed_d(n32)?))
        });
        r.poly_eq(format!("D n={n} [n] prod [2i] = prod (1+q^i)[i+1]"), || {
            Ok((closed_d(n32)?, closed_d_factored(n32)?))
        });
        r.poly_eq(
            format!("D n={n} W(q,1) from exponents = [n] prod [2i]"),
            || {
                Ok((
                    closed_w(&ExponentList::for_group(D, n)?).at_t_one(),
                    closed_d(n32)?,
                ))
            },
        );
    }
}

fn oracle(r: &mut Runner, ranks: &MaxRanks) {
    use GroupTag::*;
    let limits = *r.limits;
    let exps = |tag, n| ExponentList::for_group(tag, n);

    let plan: [(GroupTag, std::ops::RangeInclusive<usize>, bool); 3] = [
        (A, 1..=ranks.a, true),
        (B, 1..=ranks.b, true),
        (D, 4..=ranks.d, true),
    ];
    for (tag, range, reflections) in plan {
        for n in range {
            r.check(format!("{tag} n={n} BFS length = inv"), || {
                let table = cached_bfs_table(GeneratorSet::simple(tag, n)?, &limits)?;
                let bad = table.iter().find(|(w, d)| inv(w) != *d as u64);
                Ok(match bad {
                    None => (true, format!("{} elements", table.len())),
                    Some((w, d)) => (false, format!("{w}: BFS {d}, inv {}", inv(&w))),
                })
            });
            r.poly_eq(format!("{tag} n={n} sum q^length = prod [e_i+1]_q"), || {
                let table = cached_bfs_table(GeneratorSet::simple(tag, n)?, &limits)?;
                let want = if tag == A && n == 1 {
                    BivarPoly::one()
                } else {
                    solomon(&exps(tag, n)?)
                };
                Ok((table.generating_function(), want))
            });
            if reflections {
                r.poly_eq(format!("{tag} n={n} sum t^rlen = prod (1+e_i t)"), || {
                    let table = cached_bfs_table(GeneratorSet::reflections(tag, n)?, &limits)?;
                    let want = if tag == A && n == 1 {
                        BivarPoly::one()
                    } else {
                        shepard_todd(&exps(tag, n)?)
                    };
                    Ok((table.generating_function(), want))
                });
            }
            if tag == A {
                r.check(format!("A n={n} BFS reflection length = n - cyc"), || {
                    let table = cached_bfs_table(GeneratorSet::reflections(A, n)?, &limits)?;
                    let bad = table
                        .iter()
                        .find(|(w, d)| cyc(w).map_or(true, |c| n as u64 - c != *d as u64));
                    Ok(match bad {
                        None => (true, format!("{} elements", table.len())),
                        Some((w, d)) => (false, format!("{w}: BFS {d}")),
                    })
                });
            }
        }
    }

    let fast_rank = ranks.b.max(crate::stats::FAST_PATH_VALIDATION_RANK);
    r.check(
        format!("B n<={fast_rank} cycle formula for rlen = BFS"),
        || {
            Ok(match validate_type_b_fast_path(fast_rank)? {
                None => (true, "agrees on every element".into()),
                Some((w, fast, bfs)) => (false, format!("{w}: formula {fast}, BFS {bfs}")),
            })
        },
    );
    r.check("B n=8 rlen(3 4 -1 8 7 -6 2 5) = 7".into(), || {
        let w = parse_element("3 4 -1 8 7 -6 2 5", B)?;
        let fast = refl_len_b_cycles(&w);
        let v = refl_len(&w)?;
        Ok((fast == 7 && v == 7, format!("formula {fast}, refl_len {v}")))
    });
}
