use std::sync::Arc;

use proptest::prelude::*;
use qbgc_core::affine::InversionTable;
use qbgc_core::bijection::XiContext;
use qbgc_core::cartan::{CartanDatum, Weight, WeylGroup};
use qbgc_core::qbg::QuantumBruhatGraph;
use qbgc_core::qbpaths::AlcovePaths;
use qbgc_core::qls::QlsContext;
use qbgc_core::Limits;

fn group(t: &str) -> Arc<WeylGroup> {
    Arc::new(WeylGroup::new(CartanDatum::new(t.parse().unwrap()).unwrap()).unwrap())
}

fn case() -> impl Strategy<Value = (&'static str, Vec<i64>, usize)> {
    prop_oneof![Just("A2"), Just("B2"), Just("C2"), Just("G2")]
        .prop_flat_map(|t| (Just(t), prop::collection::vec(0i64..=2, 2), 0usize..12))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn xi_is_a_weight_and_degree_preserving_bijection((t, l, k) in case()) {
        let g = group(t);
        let w = g.element(k % g.order());
        let lambda = Weight(l);
        let graph = QuantumBruhatGraph::new(g.clone());
        let table = InversionTable::new(&g, &lambda).unwrap();
        let paths = AlcovePaths::new(&graph, &table).unwrap();
        let qls = QlsContext::new(g.clone(), &lambda).unwrap();
        let ctx = XiContext::new(&paths, &qls, w).unwrap();
        let qb = paths.enumerate_qb(w, &Limits::default()).unwrap();
        prop_assert_eq!(qb.len(), qls.count());
        for p in &qb {
            let eta = ctx.xi(p).unwrap();
            prop_assert_eq!(&ctx.xi_inverse(&eta).unwrap(), p);
            let c = ctx.check_preservation(p).unwrap();
            prop_assert!(c.weight_matches() && c.degree_matches());
        }
    }

    #[test]
    fn characters_agree_at_q_equal_one_for_all_w((t, l, k) in case()) {
        let g = group(t);
        let w = g.element(k % g.order());
        let lambda = Weight(l);
        let graph = QuantumBruhatGraph::new(g.clone());
        let table = InversionTable::new(&g, &lambda).unwrap();
        let paths = AlcovePaths::new(&graph, &table).unwrap();
        let c_w = paths.graded_char_c(w, &Limits::default()).unwrap().specialize_q1();
        let c_e = paths.graded_char_c(g.identity(), &Limits::default()).unwrap().specialize_q1();
        prop_assert_eq!(c_w, c_e);
    }
}
