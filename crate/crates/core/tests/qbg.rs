use affweyl::qbg::{AllPairs, EdgeKind, QbgOracle};
use affweyl::{IndexedQbg, Qbg, TypeLetter, Weyl};
use proptest::prelude::*;

#[test]
fn a2_longest_element_to_identity() {
    let weyl = Weyl::of_type(TypeLetter::A, 2).unwrap();
    let qbg = Qbg::new(&weyl);
    let w0 = weyl.from_word(&[1, 2, 1]).unwrap();
    let e = weyl.identity();
    // a single downward edge along the highest root
    assert_eq!(qbg.distance(&w0, &e), 1);
    assert_eq!(qbg.weight(&w0, &e), vec![1, 1]);
    assert_eq!(qbg.distance(&e, &w0), 3);
    assert_eq!(qbg.weight(&e, &w0), vec![0, 0]);
    assert_eq!(qbg.distance_bounded(&w0, &e, 0), None);
    assert_eq!(qbg.distance_bounded(&e, &e, 0), Some(0));
}

#[test]
fn neighbors_follow_the_edge_rule() {
    let weyl = Weyl::of_type(TypeLetter::B, 3).unwrap();
    let rs = weyl.root_system();
    let qbg = Qbg::new(&weyl);
    let w = weyl.from_word(&[3, 2, 3]).unwrap();
    for edge in qbg.neighbors(&w) {
        let l = weyl.length(&w) as i64;
        let lt = weyl.length(&edge.target) as i64;
        let height: i64 = rs.positive_coroots[edge.root].iter().sum();
        match edge.kind {
            EdgeKind::Upward => assert_eq!(lt, l + 1),
            EdgeKind::Downward => assert_eq!(lt, l - 2 * height + 1),
        }
        assert_eq!(edge.target, w.mul(&weyl.reflection(edge.root)));
    }
}

#[test]
fn dot_export_lists_every_vertex() {
    let weyl = Weyl::of_type(TypeLetter::A, 2).unwrap();
    let group = weyl.enumerate(10).unwrap();
    let graph = IndexedQbg::new(&group);
    let dot = graph.to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), graph.num_edges());
}

fn b3_words() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=3usize, 0..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The on-the-fly search and the indexed all-pairs table agree.
    #[test]
    fn search_matches_all_pairs(a in b3_words(), b in b3_words()) {
        let weyl = Weyl::of_type(TypeLetter::B, 3).unwrap();
        let group = weyl.enumerate(100).unwrap();
        let graph = IndexedQbg::new(&group);
        let pairs = AllPairs::new(&graph);
        let qbg = Qbg::new(&weyl);
        let x = weyl.from_word(&a).unwrap();
        let y = weyl.from_word(&b).unwrap();
        prop_assert_eq!(qbg.shortest(&x, &y), pairs.shortest(&x, &y));
        let path = qbg.shortest_path(&x, &y);
        prop_assert_eq!(path.len(), qbg.distance(&x, &y));
        // the reduced-word path bounds the search
        let l = weyl.length(&x.inverse().mul(&y));
        prop_assert_eq!(qbg.distance_bounded(&x, &y, l), Some(path.len()));
    }
}
