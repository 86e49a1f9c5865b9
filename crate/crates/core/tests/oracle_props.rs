use artin_core::oracles::{f2_search, AlternatingEquation};
use proptest::prelude::*;

fn equations() -> impl Strategy<Value = Vec<AlternatingEquation>> {
    proptest::collection::vec((0usize..2, 1usize..=5), 1..=2)
        .prop_map(|v| v.into_iter().map(|(generator, len)| AlternatingEquation { generator, len }).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn larger_bounds_keep_solutions(eqs in equations(), max_len in 0usize..=4) {
        let small = f2_search(&eqs, max_len);
        let large = f2_search(&eqs, max_len + 1);
        if let Some(x) = &small.found {
            prop_assert!(x.len() <= max_len);
            prop_assert!(eqs.iter().all(|e| e.holds(x)));
            prop_assert_eq!(large.found, small.found.clone());
        } else {
            prop_assert!(large.searched_count > small.searched_count);
        }
    }
}
