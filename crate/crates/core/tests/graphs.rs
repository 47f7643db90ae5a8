use minorlab::boolfn::ess;
use minorlab::graphs::{
    ai_components, classify_graph, classify_loopless, enumerate_graphs, satisfies_property_p,
    Graph,
};
use minorlab::hypergraph::{contract_pair, function_of, isomorphic, reduced};
use minorlab::irreducibility::brute_force_ji;

fn oracle(g: &Graph) -> Option<bool> {
    let f = function_of(g.hypergraph()).unwrap();
    (ess(&f) >= 2).then(|| brute_force_ji(&f).unwrap())
}

fn iso(a: &Graph, b: &Graph) -> bool {
    isomorphic(a.hypergraph(), b.hypergraph()).unwrap().is_some()
}

#[test]
fn loopless_recognizer_matches_oracle() {
    let mut checked = 0;
    for n in 2..=6 {
        for g in enumerate_graphs(n, false).unwrap() {
            let Some(want) = oracle(&g) else { continue };
            let got = classify_loopless(&g).unwrap();
            assert_eq!(got.is_join_irreducible(), want, "{g:?} {got}");
            assert_eq!(classify_graph(&g), got, "{g:?}");
            checked += 1;
        }
    }
    assert!(checked > 150);
}

#[test]
fn loop_recognizer_matches_oracle() {
    for n in 1..=5 {
        for g in enumerate_graphs(n, true).unwrap() {
            let got = classify_graph(&g);
            let want = oracle(&g).unwrap_or(false);
            assert_eq!(got.is_join_irreducible(), want, "{g:?} {got}");
        }
    }
}

#[test]
fn property_p_characterization() {
    let mut family = vec![Graph::cycle(5).unwrap(), Graph::cycle(4).unwrap(), Graph::path(3).unwrap()];
    family.extend((2..=6).map(|n| Graph::complete(n).unwrap()));
    // K1 satisfies (P) vacuously and sits outside the characterization
    for n in 2..=6 {
        for g in enumerate_graphs(n, false).unwrap() {
            if !g.is_connected() {
                continue;
            }
            let listed = family.iter().any(|h| iso(h, &g));
            assert_eq!(satisfies_property_p(&g).unwrap(), listed, "{g:?}");
        }
    }
}

#[test]
fn ji_connected_graphs_have_complete_or_c5_quotient() {
    for n in 2..=6 {
        for g in enumerate_graphs(n, false).unwrap() {
            if !g.is_connected() || oracle(&g) != Some(true) {
                continue;
            }
            let q = ai_components(&g).unwrap().quotient;
            assert!(q.is_complete() || iso(&q, &Graph::cycle(5).unwrap()), "{g:?}");
        }
    }
}

#[test]
fn nonedge_contraction_implies_edge_contraction() {
    let keeps_all = |g: &Graph, i: usize, j: usize| {
        let c = contract_pair(g.hypergraph(), i, j).unwrap().hypergraph;
        reduced(&c).n_vertices() + 1 == g.n_vertices()
    };
    for n in 2..=6 {
        for g in enumerate_graphs(n, false).unwrap() {
            if !g.is_connected() {
                continue;
            }
            let mut nonedge = false;
            let mut edge = false;
            for i in 0..n {
                for j in i + 1..n {
                    if keeps_all(&g, i, j) {
                        if g.is_adjacent(i, j) {
                            edge = true;
                        } else {
                            nonedge = true;
                        }
                    }
                }
            }
            assert!(!nonedge || edge, "{g:?}");
        }
    }
}

#[test]
fn ai_decomposition_reassembles() {
    for n in 1..=6 {
        for g in enumerate_graphs(n, false).unwrap() {
            let d = ai_components(&g).unwrap();
            assert_eq!(d.reassemble().unwrap(), g);
            let q = ai_components(&d.quotient).unwrap();
            assert!(q.sizes().iter().all(|&s| s == 1), "quotient of {g:?} is not ai-prime");
        }
    }
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_graphs(6, false).unwrap().len(), 156);
    assert_eq!(enumerate_graphs(5, true).unwrap().len(), 544);
    assert_eq!(enumerate_graphs(3, false).unwrap().len(), 4);
    assert_eq!(enumerate_graphs(2, true).unwrap().len(), 6);
}
