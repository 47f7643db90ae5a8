use std::fmt;

use super::{ai_components, Graph};
use crate::error::{Error, Result};
use crate::irreducibility::{hyper_report, Backend, Pair};

/// The join-irreducible graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `n ≥ 2` disjoint triangles.
    DisjointK3s { n: usize },
    C5,
    /// `K_2` joined with `m ≥ 2` independent vertices.
    K2PlusEmpty { m: usize },
    /// Complete graph, `n ≥ 2`.
    Kn { n: usize },
    /// Complete bipartite with sides `1 ≤ n < m`.
    EmptyPlusEmpty { n: usize, m: usize },
    /// Join of `r ≥ 2` independent sets of size `n ≥ 2`.
    JoinOfEmpties { r: usize, n: usize },
    /// `k` isolated loops, optionally next to one loopless triangle.
    IsolatedLoops { k: usize, with_triangle: bool },
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Shape::DisjointK3s { n } => write!(f, "DisjointK3s(n={n})"),
            Shape::C5 => write!(f, "C5"),
            Shape::K2PlusEmpty { m } => write!(f, "K2PlusEmpty(m={m})"),
            Shape::Kn { n } => write!(f, "Kn(n={n})"),
            Shape::EmptyPlusEmpty { n, m } => write!(f, "EmptyPlusEmpty(n={n},m={m})"),
            Shape::JoinOfEmpties { r, n } => write!(f, "JoinOfEmpties(r={r},n={n})"),
            Shape::IsolatedLoops { k, with_triangle } => {
                write!(f, "IsolatedLoops(k={k},triangle={with_triangle})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassificationVerdict {
    /// Loopless and join-irreducible.
    Shape(Shape),
    /// Join-irreducible with loops; `loops` counts the looped vertices in
    /// each part of `base` (see [`classify_graph`]).
    LoopVariant { base: Shape, loops: Vec<usize> },
    /// `witness` is two inequivalent pairs of lowest drop, 0-based, when
    /// they could be computed.
    Reducible { witness: Option<(Pair, Pair)> },
}

impl ClassificationVerdict {
    pub fn is_join_irreducible(&self) -> bool {
        !matches!(self, ClassificationVerdict::Reducible { .. })
    }

    pub fn shape(&self) -> Option<Shape> {
        match self {
            ClassificationVerdict::Shape(s) => Some(*s),
            ClassificationVerdict::LoopVariant { base, .. } => Some(*base),
            ClassificationVerdict::Reducible { .. } => None,
        }
    }
}

impl fmt::Display for ClassificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationVerdict::Shape(s) => write!(f, "{s}"),
            ClassificationVerdict::LoopVariant { base, loops } => {
                let l: Vec<String> = loops.iter().map(usize::to_string).collect();
                write!(f, "LoopVariant({base},loops={})", l.join("/"))
            }
            ClassificationVerdict::Reducible { witness: None } => write!(f, "Reducible"),
            ClassificationVerdict::Reducible {
                witness: Some((a, b)),
            } => write!(
                f,
                "Reducible\t{},{}\t{},{}",
                a.0 + 1,
                a.1 + 1,
                b.0 + 1,
                b.1 + 1
            ),
        }
    }
}

fn is_triangle(g: &Graph, mask: u32) -> bool {
    mask.count_ones() == 3 && g.induced(mask).is_complete()
}

/// Matches a loopless graph without isolated vertices against the families.
/// Returns the shape and its parts as vertex masks.
fn loopless_shape(g: &Graph) -> Option<(Shape, Vec<u32>)> {
    let n = g.n_vertices();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let comps = g.components();
    if comps.len() > 1 {
        if comps.iter().all(|&c| is_triangle(g, c)) {
            return Some((Shape::DisjointK3s { n: comps.len() }, vec![all]));
        }
        return None;
    }
    let adj = g.adjacency();
    if n == 5 && adj.iter().all(|a| a.count_ones() == 2) {
        return Some((Shape::C5, vec![all]));
    }
    let ai = ai_components(g).ok()?;
    let r = ai.components.len();
    if !ai.quotient.is_complete() {
        return None;
    }
    let masks: Vec<u32> = ai
        .components
        .iter()
        .map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let sizes = ai.sizes();
    if r == 3 {
        let mut big: Vec<usize> = (0..3).filter(|&k| sizes[k] >= 2).collect();
        if big.len() == 1 {
            let b = big.pop().unwrap();
            let k2 = all & !masks[b];
            return Some((Shape::K2PlusEmpty { m: sizes[b] }, vec![k2, masks[b]]));
        }
    }
    if sizes.iter().all(|&s| s == 1) {
        return Some((Shape::Kn { n }, vec![all]));
    }
    if r == 2 && sizes[0] != sizes[1] {
        let (small, large) = if sizes[0] < sizes[1] { (0, 1) } else { (1, 0) };
        return Some((
            Shape::EmptyPlusEmpty {
                n: sizes[small],
                m: sizes[large],
            },
            vec![masks[small], masks[large]],
        ));
    }
    if sizes.iter().all(|&s| s == sizes[0]) {
        return Some((Shape::JoinOfEmpties { r, n: sizes[0] }, masks));
    }
    None
}

fn witness(g: &Graph) -> Option<(Pair, Pair)> {
    hyper_report(g.hypergraph(), Backend::Auto)
        .ok()
        .and_then(|r| r.witness)
}

/// Recognizes join-irreducible loopless graphs; isolated vertices are
/// ignored. When several families match, the first in declaration order of
/// [`Shape`] is reported.
pub fn classify_loopless(g: &Graph) -> Result<ClassificationVerdict> {
    if g.has_loops() {
        return Err(Error::LoopsPresent);
    }
    let r = g.reduced();
    if r.n_vertices() < 2 {
        return Err(Error::TooSmall(format!(
            "graph has {} non-isolated vertices, need at least 2",
            r.n_vertices()
        )));
    }
    Ok(match loopless_shape(&r) {
        Some((s, _)) => ClassificationVerdict::Shape(s),
        None => ClassificationVerdict::Reducible {
            witness: witness(g),
        },
    })
}

/// Recognizes join-irreducible graphs with or without loops.
///
/// Vertices in no edge are ignored; with fewer than two left the verdict is
/// `Reducible` without witness. Loop counts are reported per part: one
/// entry for `Kn`, `C5`, `DisjointK3s` and `IsolatedLoops`, the two sides
/// (smaller first) for `EmptyPlusEmpty`, `K2` then the independent set for
/// `K2PlusEmpty`, one entry per independent set for `JoinOfEmpties`.
pub fn classify_graph(g: &Graph) -> ClassificationVerdict {
    let reducible = || ClassificationVerdict::Reducible {
        witness: witness(g),
    };
    let r = g.reduced();
    let n = r.n_vertices();
    if n < 2 {
        return ClassificationVerdict::Reducible { witness: None };
    }
    let loops = r.loop_mask();
    let g0 = r.loopless();
    let adj = g0.adjacency();
    let bare = (0..n).filter(|&v| adj[v] == 0).fold(0u32, |m, v| m | 1 << v);
    if bare != 0 {
        let k = bare.count_ones() as usize;
        let rest = g0.active_mask();
        let base = if rest == 0 {
            Shape::IsolatedLoops {
                k,
                with_triangle: false,
            }
        } else if is_triangle(&g0, rest) && loops & rest == 0 {
            Shape::IsolatedLoops {
                k,
                with_triangle: true,
            }
        } else {
            return reducible();
        };
        return ClassificationVerdict::LoopVariant {
            base,
            loops: vec![k],
        };
    }
    let Some((shape, parts)) = loopless_shape(&g0) else {
        return reducible();
    };
    let counts: Vec<usize> = parts.iter().map(|p| (p & loops).count_ones() as usize).collect();
    let sizes: Vec<usize> = parts.iter().map(|p| p.count_ones() as usize).collect();
    let uniform = |k: usize| counts[k] == 0 || counts[k] == sizes[k];
    let total: usize = counts.iter().sum();
    if total == 0 {
        return ClassificationVerdict::Shape(shape);
    }
    let ok = match shape {
        Shape::DisjointK3s { .. } | Shape::C5 | Shape::IsolatedLoops { .. } => false,
        Shape::Kn { n } => total <= 1 || total + 1 >= n,
        Shape::EmptyPlusEmpty { .. } => uniform(0) && uniform(1),
        Shape::K2PlusEmpty { m } => {
            (counts[0] != 1 && counts[1] == 0) || (counts[0] == 1 && counts[1] == m)
        }
        Shape::JoinOfEmpties { r: 2, .. } => uniform(0) && uniform(1),
        Shape::JoinOfEmpties { .. } => total == n,
    };
    if ok {
        ClassificationVerdict::LoopVariant {
            base: shape,
            loops: counts,
        }
    } else {
        reducible()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn looped(g: Graph, loops: &[usize]) -> Graph {
        Graph::from_parts(g.n_vertices(), &g.pairs(), loops).unwrap()
    }

    #[test]
    fn loopless_examples() {
        let two_k3 = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert_eq!(
            classify_loopless(&two_k3).unwrap(),
            ClassificationVerdict::Shape(Shape::DisjointK3s { n: 2 })
        );
        assert_eq!(
            classify_loopless(&Graph::cycle(5).unwrap()).unwrap(),
            ClassificationVerdict::Shape(Shape::C5)
        );
        let p4 = classify_loopless(&Graph::path(4).unwrap()).unwrap();
        assert!(!p4.is_join_irreducible());
        assert!(matches!(p4, ClassificationVerdict::Reducible { witness: Some(_) }));
        assert_eq!(
            classify_loopless(&Graph::cycle(4).unwrap()).unwrap(),
            ClassificationVerdict::Shape(Shape::JoinOfEmpties { r: 2, n: 2 })
        );
        assert_eq!(
            classify_loopless(&Graph::path(3).unwrap()).unwrap(),
            ClassificationVerdict::Shape(Shape::EmptyPlusEmpty { n: 1, m: 2 })
        );
        assert_eq!(
            classify_loopless(&Graph::complete_multipartite(&[1, 1, 3]).unwrap()).unwrap(),
            ClassificationVerdict::Shape(Shape::K2PlusEmpty { m: 3 })
        );
        assert!(classify_loopless(&Graph::from_parts(3, &[], &[]).unwrap()).is_err());
        assert_eq!(
            classify_loopless(&looped(Graph::complete(2).unwrap(), &[0])),
            Err(Error::LoopsPresent)
        );
    }

    #[test]
    fn loop_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(classify_graph(&looped(k4.clone(), &[0])).is_join_irreducible());
        assert!(!classify_graph(&looped(k4.clone(), &[0, 1])).is_join_irreducible());
        assert!(classify_graph(&looped(k4, &[0, 1, 2])).is_join_irreducible());
        assert!(!classify_graph(&looped(Graph::cycle(5).unwrap(), &[0])).is_join_irreducible());
        let loops = Graph::from_parts(3, &[], &[0, 2]).unwrap();
        assert_eq!(
            classify_graph(&loops),
            ClassificationVerdict::LoopVariant {
                base: Shape::IsolatedLoops {
                    k: 2,
                    with_triangle: false
                },
                loops: vec![2]
            }
        );
        assert_eq!(
            classify_graph(&Graph::from_parts(3, &[], &[1]).unwrap()),
            ClassificationVerdict::Reducible { witness: None }
        );
    }
}
