//! Breadth-first search over Cayley graphs: exact length and reflection
//! length for every element of a group. These tables are the ground truth
//! that the statistics are tested against.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{rank, unrank, Element, GroupTag, Limits, SignedTransposition};
use crate::qpoly::BivarPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    /// Coxeter generators; distances are lengths.
    Simple,
    /// All reflections; distances are reflection lengths.
    Reflections,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub tag: GroupTag,
    pub kind: GeneratorKind,
    pub n: usize,
}

impl GeneratorSet {
    pub fn new(tag: GroupTag, kind: GeneratorKind, n: usize) -> Result<Self> {
        tag.check_rank(n)?;
        Ok(GeneratorSet { tag, kind, n })
    }

    pub fn simple(tag: GroupTag, n: usize) -> Result<Self> {
        GeneratorSet::new(tag, GeneratorKind::Simple, n)
    }

    pub fn reflections(tag: GroupTag, n: usize) -> Result<Self> {
        GeneratorSet::new(tag, GeneratorKind::Reflections, n)
    }

    /// Type A: adjacent swaps, or all `t(i,j)`. Type B adds `t(-1,1)`, or all
    /// `t(-i,j)` with `i <= j`. Type D adds `t(-1,2)`, or all `t(-i,j)` with
    /// `i < j` (the sign flips `t(-i,i)` are not reflections in D).
    pub fn generators(&self) -> Vec<SignedTransposition> {
        let n = self.n as i32;
        let mut gens = Vec::new();
        match self.kind {
            GeneratorKind::Simple => {
                match self.tag {
                    GroupTag::A => {}
                    GroupTag::B => gens.push(SignedTransposition { i: -1, j: 1 }),
                    GroupTag::D => gens.push(SignedTransposition { i: -1, j: 2 }),
                }
                gens.extend((1..n).map(|i| SignedTransposition { i, j: i + 1 }));
            }
            GeneratorKind::Reflections => {
                for j in 1..=n {
                    for i in 1..j {
                        gens.push(SignedTransposition { i, j });
                    }
                    let barred = match self.tag {
                        GroupTag::A => 0,
                        GroupTag::B => j,
                        GroupTag::D => j - 1,
                    };
                    gens.extend((1..=barred).map(|i| SignedTransposition { i: -i, j }));
                }
            }
        }
        gens
    }
}

/// Distance from the identity for every element, indexed by lexicographic
/// rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTable {
    pub gen: GeneratorSet,
    dist: Vec<u32>,
}

impl BfsTable {
    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn distance(&self, w: &Element) -> Result<u32> {
        if w.tag() != self.gen.tag || w.n() != self.gen.n {
            return Err(Error::Mismatch {
                left_tag: self.gen.tag,
                left_n: self.gen.n,
                right_tag: w.tag(),
                right_n: w.n(),
            });
        }
        Ok(self.dist[rank(w) as usize])
    }

    pub fn distance_by_rank(&self, r: usize) -> u32 {
        self.dist[r]
    }

    pub fn max_distance(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// `(element, distance)` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Element, u32)> + '_ {
        let (tag, n) = (self.gen.tag, self.gen.n);
        self.dist
            .iter()
            .enumerate()
            .map(move |(r, &d)| (unrank(tag, n, r as u128), d))
    }

    /// `sum q^dist` for simple generators, `sum t^dist` for reflections.
    pub fn generating_function(&self) -> BivarPoly {
        let mut counts: Vec<u64> = vec![0; self.max_distance() as usize + 1];
        for &d in &self.dist {
            counts[d as usize] += 1;
        }
        let var = |d: usize| match self.gen.kind {
            GeneratorKind::Simple => (d as u32, 0),
            GeneratorKind::Reflections => (0, d as u32),
        };
        BivarPoly::from_terms(
            counts
                .into_iter()
                .enumerate()
                .map(|(d, c)| (var(d), c.into())),
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("word,distance\n");
        for (w, d) in self.iter() {
            let _ = writeln!(out, "{w},{d}");
        }
        out
    }
}

pub fn bfs_table(gen: GeneratorSet, limits: &Limits) -> Result<BfsTable> {
    let order = limits.check_group(gen.tag, gen.n)?;
    let gens = gen.generators();
    let edges = order * gens.len() as u128;
    if edges > limits.max_edge_relaxations {
        return Err(Error::CapExceeded {
            what: format!(
                "BFS over {}{} with {} generators",
                gen.tag,
                gen.n,
                gens.len()
            ),
            needed: edges,
            limit: limits.max_edge_relaxations,
        });
    }

    let (tag, n) = (gen.tag, gen.n);
    let mut dist = vec![u32::MAX; order as usize];
    let start = rank(&Element::identity(tag, n)) as usize;
    dist[start] = 0;
    let mut frontier = vec![start];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let candidates: Vec<usize> = frontier
            .par_iter()
            .flat_map_iter(|&r| {
                let w = unrank(tag, n, r as u128);
                gens.iter().map(move |&g| {
                    let mut x = w.clone();
                    x.right_mult_in_place(g);
                    rank(&x) as usize
                })
            })
            .collect();
        let mut next = Vec::new();
        for c in candidates {
            if dist[c] == u32::MAX {
                dist[c] = level;
                next.push(c);
            }
        }
        frontier = next;
    }
    debug_assert!(dist.iter().all(|&d| d != u32::MAX));
    Ok(BfsTable { gen, dist })
}

fn cache() -> &'static Mutex<HashMap<GeneratorSet, Arc<BfsTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<GeneratorSet, Arc<BfsTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Builds the table once per generator set and shares it afterwards.
pub fn cached_bfs_table(gen: GeneratorSet, limits: &Limits) -> Result<Arc<BfsTable>> {
    if let Some(t) = cache().lock().expect("bfs cache poisoned").get(&gen) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(bfs_table(gen, limits)?);
    let mut guard = cache().lock().expect("bfs cache poisoned");
    Ok(Arc::clone(guard.entry(gen).or_insert(table)))
}

pub fn check_generating_function(
    gen: GeneratorSet,
    expected: &BivarPoly,
    limits: &Limits,
) -> Result<bool> {
    let table = cached_bfs_table(gen, limits)?;
    Ok(table.generating_function() == *expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cycle_decomposition, enumerate_group};

    #[test]
    fn generator_counts() {
        let count = |tag, kind, n| GeneratorSet::new(tag, kind, n).unwrap().generators().len();
        assert_eq!(count(GroupTag::A, GeneratorKind::Simple, 5), 4);
        assert_eq!(count(GroupTag::B, GeneratorKind::Simple, 5), 5);
        assert_eq!(count(GroupTag::D, GeneratorKind::Simple, 5), 5);
        assert_eq!(count(GroupTag::A, GeneratorKind::Reflections, 5), 10);
        // n^2 reflections in B_n, n(n-1) in D_n
        assert_eq!(count(GroupTag::B, GeneratorKind::Reflections, 5), 25);
        assert_eq!(count(GroupTag::D, GeneratorKind::Reflections, 5), 20);
    }

    #[test]
    fn s3_lengths() {
        let table = bfs_table(
            GeneratorSet::simple(GroupTag::A, 3).unwrap(),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(table.max_distance(), 3);
        let gf = table.generating_function();
        assert_eq!(gf.to_string(), "1 + 2*q + 2*q^2 + q^3");
    }

    #[test]
    fn type_a_reflection_distance_is_n_minus_cycles() {
        let l = Limits::default();
        for n in 1..=6 {
            let table = bfs_table(GeneratorSet::reflections(GroupTag::A, n).unwrap(), &l).unwrap();
            for (w, d) in table.iter() {
                assert_eq!(d as usize, n - cycle_decomposition(&w).len(), "{w}");
            }
        }
    }

    #[test]
    fn type_b_reflection_distribution() {
        let l = Limits::default();
        let table = bfs_table(GeneratorSet::reflections(GroupTag::B, 3).unwrap(), &l).unwrap();
        // (1+t)(1+3t)(1+5t) = 1 + 9t + 23t^2 + 15t^3
        let gf = table.generating_function();
        assert_eq!(gf.to_string(), "1 + 9*t + 23*t^2 + 15*t^3");
    }

    #[test]
    fn distance_is_inverse_invariant() {
        let l = Limits::default();
        for tag in GroupTag::ALL {
            for kind in [GeneratorKind::Simple, GeneratorKind::Reflections] {
                let table = bfs_table(GeneratorSet::new(tag, kind, 4).unwrap(), &l).unwrap();
                for w in enumerate_group(tag, 4, &l).unwrap() {
                    assert_eq!(
                        table.distance(&w).unwrap(),
                        table.distance(&w.inverse()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn edge_cap_is_enforced() {
        let limits = Limits {
            max_elements: 1_000_000,
            max_edge_relaxations: 1000,
        };
        let gen = GeneratorSet::reflections(GroupTag::B, 4).unwrap();
        assert!(matches!(
            bfs_table(gen, &limits),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn csv_export() {
        let table = bfs_table(
            GeneratorSet::simple(GroupTag::A, 2).unwrap(),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(table.to_csv(), "word,distance\n1 2,0\n2 1,1\n");
    }
}
