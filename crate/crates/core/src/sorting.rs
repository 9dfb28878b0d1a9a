//! Straight selection sort for types A, B and D.
//!
//! The largest letter not yet in place is moved home with one transposition,
//! then the next largest, and so on. Read back in increasing order of the
//! target position, the transpositions used give the unique factorization
//! `w = t(i_1,j_1) ... t(i_k,j_k)` with `j_1 < ... < j_k`.
//!
//! In type D the sign flip `t(-j,j)` negates positions 1 and `j`, so the sort
//! stops at `j = 2`: once positions `3..n` hold `3..n`, the remaining pair is
//! one of `1 2`, `2 1` (`t(1,2)`), `-1 -2` (`t(-2,2)`) or `-2 -1`
//! (`t(-1,2)`), because the number of negative entries stays even.

use serde::Serialize;

use crate::error::Result;
use crate::group::{Element, GroupTag, SignedTransposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SortCertificate {
    #[serde(serialize_with = "ser_word")]
    pub input: Element,
    /// In increasing order of `j`; their right product is `input`.
    pub factors: Vec<SignedTransposition>,
    pub sor_value: u64,
    /// States visited by the sort, from `input` to the identity. State
    /// `k + 1` is state `k` times `factors[factors.len() - 1 - k]`.
    #[serde(serialize_with = "ser_words")]
    pub trace: Vec<Element>,
}

fn ser_word<S: serde::Serializer>(w: &Element, s: S) -> Result<S::Ok, S::Error> {
    w.word().serialize(s)
}

fn ser_words<S: serde::Serializer>(ws: &[Element], s: S) -> Result<S::Ok, S::Error> {
    let words: Vec<&[i32]> = ws.iter().map(Element::word).collect();
    words.serialize(s)
}

/// Contribution of one factor to the sorting index: `j - i`, less 1 (type B)
/// or 2 (type D) when `i` is negative.
pub fn factor_weight(tag: GroupTag, t: SignedTransposition) -> u64 {
    let correction = match (tag, t.is_barred()) {
        (GroupTag::B, true) => 1,
        (GroupTag::D, true) => 2,
        _ => 0,
    };
    (t.j - t.i - correction) as u64
}

fn floor(tag: GroupTag) -> usize {
    match tag {
        GroupTag::A | GroupTag::D => 2,
        GroupTag::B => 1,
    }
}

pub fn selection_sort(w: &Element) -> SortCertificate {
    let tag = w.tag();
    let n = w.n();
    let mut state = w.clone();
    let mut trace = vec![state.clone()];
    let mut steps = Vec::new();
    for j in (floor(tag)..=n).rev() {
        let pos = state
            .word()
            .iter()
            .position(|x| x.unsigned_abs() as usize == j)
            .expect("signed permutation contains every absolute value")
            + 1;
        let value = state.word()[pos - 1];
        if value > 0 && pos == j {
            continue;
        }
        let t = if value > 0 {
            SignedTransposition {
                i: pos as i32,
                j: j as i32,
            }
        } else {
            SignedTransposition {
                i: -(pos as i32),
                j: j as i32,
            }
        };
        state.right_mult_in_place(t);
        steps.push(t);
        trace.push(state.clone());
    }
    debug_assert!(state.is_identity(), "sort of {w} ended at {state}");
    steps.reverse();
    let sor_value = steps.iter().map(|&t| factor_weight(tag, t)).sum();
    SortCertificate {
        input: w.clone(),
        factors: steps,
        sor_value,
        trace,
    }
}

/// The sorting index.
pub fn sor(w: &Element) -> u64 {
    selection_sort(w).sor_value
}

/// Right product of `factors` in the listed order.
pub fn product_of_factors(
    factors: &[SignedTransposition],
    tag: GroupTag,
    n: usize,
) -> Result<Element> {
    tag.check_rank(n)?;
    let mut w = Element::identity(tag, n);
    for &t in factors {
        t.validate(tag, n)?;
        w.right_mult_in_place(t);
    }
    Ok(w)
}

/// Renders a type D word with the fork in the middle: `w_1` above `w_-1`,
/// flanked by `w_-n .. w_-2` on the left and `w_2 .. w_n` on the right.
pub fn fork_display(w: &Element) -> String {
    let left: Vec<String> = w.word()[1..]
        .iter()
        .rev()
        .map(|x| (-x).to_string())
        .collect();
    let right: Vec<String> = w.word()[1..].iter().map(|x| x.to_string()).collect();
    let top = w.word()[0].to_string();
    let bottom = (-w.word()[0]).to_string();
    let width = top.len().max(bottom.len());
    let left = left.join(" ");
    let right = right.join(" ");
    let pad = if left.is_empty() { 0 } else { left.len() + 1 };
    format!(
        "{blank}{top:>width$}\n{left}{sep}{gap}{sep2}{right}\n{blank}{bottom:>width$}",
        blank = " ".repeat(pad),
        sep = if left.is_empty() { "" } else { " " },
        gap = " ".repeat(width),
        sep2 = if right.is_empty() { "" } else { " " },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_group, parse_element, Limits};

    fn t(i: i32, j: i32) -> SignedTransposition {
        SignedTransposition { i, j }
    }

    #[test]
    fn type_a_example() {
        let w = parse_element("2 4 3 1 7 5 6", GroupTag::A).unwrap();
        let cert = selection_sort(&w);
        assert_eq!(cert.factors, vec![t(1, 2), t(2, 4), t(5, 6), t(5, 7)]);
        assert_eq!(cert.sor_value, 6);
        let words: Vec<String> = cert.trace.iter().map(|e| e.to_string()).collect();
        assert_eq!(
            words,
            [
                "2 4 3 1 7 5 6",
                "2 4 3 1 6 5 7",
                "2 4 3 1 5 6 7",
                "2 1 3 4 5 6 7",
                "1 2 3 4 5 6 7"
            ]
        );
    }

    #[test]
    fn type_b_example() {
        let w = parse_element("2 -4 5 -1 -3", GroupTag::B).unwrap();
        let cert = selection_sort(&w);
        assert_eq!(cert.factors, vec![t(1, 2), t(-3, 3), t(-2, 4), t(3, 5)]);
        assert_eq!(cert.sor_value, 13);
    }

    #[test]
    fn type_d_example() {
        let w = parse_element("-3 2 4 -5 1", GroupTag::D).unwrap();
        let cert = selection_sort(&w);
        assert_eq!(cert.factors, vec![t(-1, 3), t(3, 4), t(-4, 5)]);
        assert_eq!(cert.sor_value, 10);
        assert_eq!(cert.trace[1].word(), &[-3, 2, 4, -1, 5]);
        assert_eq!(cert.trace[2].word(), &[-3, 2, -1, 4, 5]);
    }

    #[test]
    fn table_values() {
        for (word, s) in [
            ("6 3 7 2 4 5 1", 18),
            ("3 7 1 5 2 4 6", 14),
            ("6 8 5 9 4 2 3 1 7", 23),
        ] {
            assert_eq!(sor(&parse_element(word, GroupTag::A).unwrap()), s);
        }
        for tag in GroupTag::ALL {
            assert_eq!(sor(&Element::identity(tag, 4)), 0);
        }
    }

    #[test]
    fn d_terminal_cases() {
        for (word, factor) in [
            ("2 1 3", Some(t(1, 2))),
            ("-1 -2 3", Some(t(-2, 2))),
            ("-2 -1 3", Some(t(-1, 2))),
            ("1 2 3", None),
        ] {
            let w = parse_element(word, GroupTag::D).unwrap();
            assert_eq!(
                selection_sort(&w).factors,
                factor.into_iter().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn product_examples() {
        let w = product_of_factors(&[t(1, 2), t(2, 4), t(5, 6), t(5, 7)], GroupTag::A, 7).unwrap();
        assert_eq!(w.to_string(), "2 4 3 1 7 5 6");
        assert!(product_of_factors(&[], GroupTag::A, 3)
            .unwrap()
            .is_identity());
        let d = product_of_factors(&[t(-1, 3), t(3, 4), t(-4, 5)], GroupTag::D, 5).unwrap();
        assert_eq!(d.word(), &[-3, 2, 4, -5, 1]);
        assert!(product_of_factors(&[t(-1, 2)], GroupTag::A, 3).is_err());
    }

    #[test]
    fn round_trip_and_trace_validity() {
        let l = Limits::default();
        for (tag, n) in [
            (GroupTag::A, 6),
            (GroupTag::B, 4),
            (GroupTag::D, 4),
            (GroupTag::D, 5),
        ] {
            for w in enumerate_group(tag, n, &l).unwrap() {
                let cert = selection_sort(&w);
                assert_eq!(product_of_factors(&cert.factors, tag, n).unwrap(), w);
                assert!(cert.factors.windows(2).all(|p| p[0].j < p[1].j));
                if let Some(first) = cert.factors.first() {
                    assert!(first.j as usize >= floor(tag));
                }
                assert!(cert.trace.last().unwrap().is_identity());
                assert_eq!(cert.trace.len(), cert.factors.len() + 1);
                for (k, pair) in cert.trace.windows(2).enumerate() {
                    let f = cert.factors[cert.factors.len() - 1 - k];
                    assert_eq!(pair[0].right_mult(f).unwrap(), pair[1]);
                    if tag == GroupTag::D {
                        assert_eq!(pair[1].negatives() % 2, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn fork_rendering() {
        let w = parse_element("-3 2 4 -5 1", GroupTag::D).unwrap();
        let s = fork_display(&w);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[1], "-1 5 -4 -2    2 4 -5 1");
        assert_eq!(lines[0].trim(), "-3");
        assert_eq!(lines[2].trim(), "3");
        assert_eq!(lines[0].len(), lines[2].len());
    }
}
