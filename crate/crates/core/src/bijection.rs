//! The cycle-to-word bijection `w -> ŵ` carrying cycle count to
//! right-to-left minima, and the B-code read off the sorting factorization.

use crate::error::{Error, Result};
use crate::group::{cycle_decomposition, Element, GroupTag};
use crate::sorting::selection_sort;

fn require_a(w: &Element) -> Result<()> {
    if w.tag() != GroupTag::A {
        return Err(Error::Invalid(format!(
            "expected a type A element, got type {}",
            w.tag()
        )));
    }
    Ok(())
}

/// Writes `w` in cycle notation (least element last in each cycle, cycles
/// by increasing least element) and drops the parentheses.
pub fn to_hat(w: &Element) -> Result<Element> {
    require_a(w)?;
    let word = cycle_decomposition(w)
        .cycles
        .into_iter()
        .flat_map(|c| c.entries)
        .collect();
    Element::new(GroupTag::A, word)
}

/// Inverse of [`to_hat`]: close a cycle after every right-to-left minimum.
pub fn from_hat(v: &Element) -> Result<Element> {
    require_a(v)?;
    let word = v.word();
    let mut is_min = vec![false; word.len()];
    let mut min = i32::MAX;
    for (k, &x) in word.iter().enumerate().rev() {
        if x < min {
            min = x;
            is_min[k] = true;
        }
    }
    let mut out = vec![0i32; word.len()];
    let mut start = 0;
    for end in 0..word.len() {
        if is_min[end] {
            let cycle = &word[start..=end];
            for (k, &x) in cycle.iter().enumerate() {
                out[x as usize - 1] = cycle[(k + 1) % cycle.len()];
            }
            start = end + 1;
        }
    }
    Element::new(GroupTag::A, out)
}

/// `b_j = j - i` for each sorting factor `t(i, j)`, zero elsewhere.
pub fn b_code(w: &Element) -> Result<Vec<u32>> {
    require_a(w)?;
    let mut code = vec![0u32; w.n()];
    for t in selection_sort(w).factors {
        code[t.j as usize - 1] = (t.j - t.i) as u32;
    }
    Ok(code)
}
