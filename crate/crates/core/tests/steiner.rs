use minorlab::hypergraph::{automorphisms, is_2set_transitive, Hypergraph};
use minorlab::steiner::{ag_2_3, fano, steiner_report, sts13_pair};

#[test]
fn complete_graphs_as_steiner_systems() {
    for n in 3..=7 {
        let r = steiner_report(&Hypergraph::complete_graph(n).unwrap()).unwrap();
        assert!(r.join_irreducible && r.agrees(), "K{n}: {r:?}");
        // the contraction of K3 isolates the third vertex
        assert_eq!(r.dh_is_everything(), n >= 4, "K{n}");
    }
}

#[test]
fn builtin_planes_are_transitive() {
    for h in [fano(), ag_2_3()] {
        assert!(is_2set_transitive(&h).unwrap());
        assert!(steiner_report(&h).unwrap().minus2_monomorphic);
    }
    assert_eq!(automorphisms(&ag_2_3()).unwrap().len(), 432);
}

#[test]
fn sts13_reports_agree() {
    for h in sts13_pair(13).unwrap() {
        let r = steiner_report(&h).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert!(r.dh_is_everything());
        assert!(!is_2set_transitive(&h).unwrap());
        eprintln!("{}", r.to_tsv());
    }
}
