use proptest::prelude::*;

use coxstat::bijection::{b_code, from_hat, to_hat};
use coxstat::group::{group_order, rank, unrank};
use coxstat::sorting::{factor_weight, product_of_factors, selection_sort};
use coxstat::stats::{cyc, inv, refl_len_with, rlmin_m, RlenSource};
use coxstat::{parse_element, Element, GroupTag};

fn element(tag: GroupTag, max_n: usize) -> impl Strategy<Value = Element> {
    (tag.min_rank().max(1)..=max_n)
        .prop_flat_map(move |n| (Just(n), 0..group_order(tag, n).unwrap()))
        .prop_map(move |(n, r)| unrank(tag, n, r))
}

fn any_element(max_n: usize) -> impl Strategy<Value = Element> {
    prop_oneof![
        element(GroupTag::A, max_n),
        element(GroupTag::B, max_n),
        element(GroupTag::D, max_n),
    ]
}

fn max_inv(tag: GroupTag, n: u64) -> u64 {
    match tag {
        GroupTag::A => n * (n - 1) / 2,
        GroupTag::B => n * n,
        GroupTag::D => n * (n - 1),
    }
}

proptest! {
    #[test]
    fn sort_factors_multiply_back(w in any_element(12)) {
        let cert = selection_sort(&w);
        prop_assert_eq!(product_of_factors(&cert.factors, w.tag(), w.n()).unwrap(), w.clone());
        prop_assert!(cert.factors.windows(2).all(|p| p[0].j < p[1].j));
        let total: u64 = cert.factors.iter().map(|&t| factor_weight(w.tag(), t)).sum();
        prop_assert_eq!(total, cert.sor_value);
        prop_assert_eq!(cert.trace.len(), cert.factors.len() + 1);
        prop_assert!(cert.trace.last().unwrap().is_identity());
    }

    #[test]
    fn statistics_stay_in_range(w in any_element(12)) {
        let top = max_inv(w.tag(), w.n() as u64);
        prop_assert!(inv(&w) <= top);
        prop_assert!(selection_sort(&w).sor_value <= top);
        prop_assert_eq!(inv(&w), inv(&w.inverse()));
        prop_assert_eq!(inv(&w) == 0, w.is_identity());
    }

    #[test]
    fn text_and_rank_round_trip(w in any_element(12)) {
        prop_assert_eq!(parse_element(&w.to_string(), w.tag()).unwrap(), w.clone());
        prop_assert_eq!(unrank(w.tag(), w.n(), rank(&w)), w);
    }

    #[test]
    fn group_axioms(u in element(GroupTag::B, 7), seed in any::<u64>()) {
        let n = u.n() as u128;
        let order = group_order(GroupTag::B, n as usize).unwrap();
        let v = unrank(GroupTag::B, u.n(), seed as u128 % order);
        let w = unrank(GroupTag::B, u.n(), (seed as u128 * 7 + 3) % order);
        let left = u.compose(&v).unwrap().compose(&w).unwrap();
        let right = u.compose(&v.compose(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(u.compose(&u.inverse()).unwrap().is_identity());
    }

    #[test]
    fn hat_bijection(w in element(GroupTag::A, 12)) {
        let hat = to_hat(&w).unwrap();
        prop_assert_eq!(cyc(&w).unwrap(), rlmin_m(&hat).unwrap());
        prop_assert_eq!(from_hat(&hat).unwrap(), w.clone());
        let code = b_code(&w).unwrap();
        prop_assert_eq!(code.iter().map(|&b| b as u64).sum::<u64>(), selection_sort(&w).sor_value);
    }

    #[test]
    fn type_a_reflection_length(w in element(GroupTag::A, 6)) {
        let bfs = refl_len_with(&w, RlenSource::Bfs).unwrap();
        prop_assert_eq!(bfs + cyc(&w).unwrap(), w.n() as u64);
    }

    #[test]
    fn type_b_reflection_length(w in element(GroupTag::B, 5)) {
        prop_assert_eq!(
            refl_len_with(&w, RlenSource::Bfs).unwrap(),
            refl_len_with(&w, RlenSource::Auto).unwrap()
        );
    }
}
