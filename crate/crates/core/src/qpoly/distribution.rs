use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::BivarPoly;
use crate::error::Result;
use crate::group::{enumerate_range, Element, GroupTag, Limits};
use crate::stats::{RlenSource, Stat};

/// Ranks per work unit. Fixed so the split does not depend on thread count.
const CHUNK: u128 = 4096;

#[derive(Debug, Clone, Copy, Default)]
pub struct DistOptions {
    pub limits: Limits,
    pub rlen: RlenSource,
}

/// `sum_{w} q^{q_stat(w)} t^{t_stat(w)}` over the whole group; an absent
/// statistic contributes exponent 0.
pub fn distribution(
    tag: GroupTag,
    n: usize,
    q_stat: Option<Stat>,
    t_stat: Option<Stat>,
    opts: &DistOptions,
) -> Result<BivarPoly> {
    for s in q_stat.iter().chain(t_stat.iter()) {
        s.check(tag)?;
    }
    let eval = |s: Option<Stat>, w: &Element| -> Result<u32> {
        match s {
            Some(s) => Ok(s.eval_with(w, opts.rlen)? as u32),
            None => Ok(0),
        }
    };
    weighted_count(tag, n, &opts.limits, |w| {
        Ok((eval(q_stat, w)?, eval(t_stat, w)?))
    })
}

/// Sums the monomial `q^a t^b` given by `weight` over every element of the
/// group, scanning disjoint rank ranges in parallel.
pub fn weighted_count<F>(tag: GroupTag, n: usize, limits: &Limits, weight: F) -> Result<BivarPoly>
where
    F: Fn(&Element) -> Result<(u32, u32)> + Sync,
{
    let order = limits.check_group(tag, n)?;
    let chunks = order.div_ceil(CHUNK);
    let counts = (0..chunks as u64)
        .into_par_iter()
        .map(|c| {
            let start = c as u128 * CHUNK;
            let mut local: BTreeMap<(u32, u32), u64> = BTreeMap::new();
            for w in enumerate_range(tag, n, start..start + CHUNK, limits)? {
                *local.entry(weight(&w)?).or_default() += 1;
            }
            Ok(local)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (e, c) in b {
                *a.entry(e).or_default() += c;
            }
            Ok(a)
        })?;
    Ok(BivarPoly::from_terms(
        counts.into_iter().map(|(e, c)| (e, BigInt::from(c))),
    ))
}
