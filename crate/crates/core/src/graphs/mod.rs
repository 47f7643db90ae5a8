//! Graphs (hypergraphs with edges of size one and two): ai-decomposition,
//! property (P), the join-irreducible graph recognizers and small-graph
//! enumeration.

mod classify;
mod enumerate;

pub use classify::{classify_graph, classify_loopless, ClassificationVerdict, Shape};
pub use enumerate::{enumerate_graphs, MAX_ENUM_LOOPLESS, MAX_ENUM_LOOPS};

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{mask_vertices, Hypergraph};

/// A hypergraph whose edges are loops `{i}` and pairs `{i, j}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    h: Hypergraph,
}

impl Graph {
    pub fn new(h: Hypergraph) -> Result<Self> {
        if let Some(&e) = h.edges().iter().find(|e| !(1..=2).contains(&e.count_ones())) {
            return Err(Error::NotAGraph {
                size: e.count_ones() as usize,
            });
        }
        Ok(Self { h })
    }

    /// 0-based pairs and looped vertices.
    pub fn from_parts(n: usize, pairs: &[(usize, usize)], loops: &[usize]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(i, j)| vec![i, j])
            .chain(loops.iter().map(|&v| vec![v]));
        Self::new(Hypergraph::from_edge_lists(n, edges)?)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(Hypergraph::complete_graph(n)?)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_parts(n, &pairs, &[])
    }

    pub fn path(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_parts(n, &pairs, &[])
    }

    /// Join of independent sets of the given sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let mut owner = Vec::new();
        for (p, &size) in parts.iter().enumerate() {
            owner.extend(std::iter::repeat_n(p, size));
        }
        let mut pairs = Vec::new();
        for i in 0..owner.len() {
            for j in i + 1..owner.len() {
                if owner[i] != owner[j] {
                    pairs.push((i, j));
                }
            }
        }
        Self::from_parts(owner.len(), &pairs, &[])
    }

    /// Vertex-disjoint union, `self` first.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let shift = self.n_vertices();
        let mut lists = self.h.edge_lists();
        lists.extend(
            other
                .h
                .edge_lists()
                .into_iter()
                .map(|e| e.into_iter().map(|v| v + shift).collect()),
        );
        Self::new(Hypergraph::from_edge_lists(shift + other.n_vertices(), lists)?)
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.h
    }

    pub fn n_vertices(&self) -> usize {
        self.h.n_vertices()
    }

    /// Vertices in some edge, loops included.
    pub fn active_mask(&self) -> u32 {
        self.h.active_mask()
    }

    pub fn loop_mask(&self) -> u32 {
        self.h
            .edges()
            .iter()
            .filter(|e| e.count_ones() == 1)
            .fold(0, |m, &e| m | e)
    }

    pub fn loops(&self) -> Vec<usize> {
        mask_vertices(self.loop_mask()).collect()
    }

    pub fn has_loops(&self) -> bool {
        self.loop_mask() != 0
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.h
            .edges()
            .iter()
            .filter(|e| e.count_ones() == 2)
            .map(|&e| {
                let i = e.trailing_zeros() as usize;
                (i, 31 - e.leading_zeros() as usize)
            })
            .collect()
    }

    /// Neighbour masks, ignoring loops.
    pub fn adjacency(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n_vertices()];
        for (i, j) in self.pairs() {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency()[v].count_ones() as usize
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency()[i] >> j & 1 == 1
    }

    /// `G⁰`: the same graph with its loops removed.
    pub fn loopless(&self) -> Graph {
        let edges = self
            .h
            .edges()
            .iter()
            .copied()
            .filter(|e| e.count_ones() == 2)
            .collect();
        Graph {
            h: Hypergraph::new(self.n_vertices(), edges).expect("subset of valid edges"),
        }
    }

    /// `Ǧ`: drops vertices in no edge (loops count), compacting the rest.
    pub fn reduced(&self) -> Graph {
        Graph {
            h: self.h.induced(self.h.active_mask()),
        }
    }

    pub fn induced(&self, keep: u32) -> Graph {
        Graph {
            h: self.h.induced(keep),
        }
    }

    /// Vertex masks of the connected components (loops ignored), ordered
    /// by smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        let adj = self.adjacency();
        let mut seen = 0u32;
        let mut out = Vec::new();
        for v in 0..self.n_vertices() {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let next = mask_vertices(frontier).fold(0, |m, u| m | adj[u]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n_vertices();
        self.pairs().len() == n * n.saturating_sub(1) / 2
    }

    fn require_loopless(&self) -> Result<()> {
        if self.has_loops() {
            return Err(Error::LoopsPresent);
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph{:?}", self.h)
    }
}

/// The ai-components of a loopless graph and the graph they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AiDecomposition {
    /// Each component as ascending vertex list, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
    /// `G_ai`: vertex `k` is `components[k]`.
    pub quotient: Graph,
}

impl AiDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// The lexicographic sum of the components over the quotient, on the
    /// original vertex labels.
    pub fn reassemble(&self) -> Result<Graph> {
        let n = self.components.iter().map(Vec::len).sum();
        let mut pairs = Vec::new();
        for (a, b) in self.quotient.pairs() {
            for &i in &self.components[a] {
                for &j in &self.components[b] {
                    pairs.push((i.min(j), i.max(j)));
                }
            }
        }
        Graph::from_parts(n, &pairs, &[])
    }
}

/// Groups vertices into maximal autonomous independent sets.
///
/// In a loopless graph two vertices lie in a common ai-set exactly when
/// they are non-adjacent with equal neighbourhoods, so the components are
/// the classes of that relation.
pub fn ai_components(g: &Graph) -> Result<AiDecomposition> {
    g.require_loopless()?;
    let adj = g.adjacency();
    let n = g.n_vertices();
    let mut owner = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if owner[v] != usize::MAX {
            continue;
        }
        let k = components.len();
        let comp: Vec<usize> = (v..n).filter(|&u| owner[u] == usize::MAX && adj[u] == adj[v]).collect();
        for &u in &comp {
            owner[u] = k;
        }
        components.push(comp);
    }
    let mut qpairs = Vec::new();
    for a in 0..components.len() {
        for b in a + 1..components.len() {
            if adj[components[a][0]] >> components[b][0] & 1 == 1 {
                qpairs.push((a, b));
            }
        }
    }
    let quotient = Graph::from_parts(components.len(), &qpairs, &[])?;
    Ok(AiDecomposition {
        components,
        quotient,
    })
}

/// Every non-edge `{i, j}` has a common neighbour of degree exactly two.
pub fn satisfies_property_p(g: &Graph) -> Result<bool> {
    g.require_loopless()?;
    let adj = g.adjacency();
    let deg2 = (0..adj.len())
        .filter(|&v| adj[v].count_ones() == 2)
        .fold(0u32, |m, v| m | 1 << v);
    for i in 0..adj.len() {
        for j in i + 1..adj.len() {
            if adj[i] >> j & 1 == 0 && adj[i] & adj[j] & deg2 == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_rejects_big_edges() {
        let h = Hypergraph::from_edge_lists(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(Graph::new(h), Err(Error::NotAGraph { size: 3 }));
        let h = Hypergraph::from_edge_lists(3, [Vec::<usize>::new()]).unwrap();
        assert!(Graph::new(h).is_err());
    }

    #[test]
    fn ai_examples() {
        let c4 = ai_components(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.components, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(c4.quotient, Graph::complete(2).unwrap());

        let p4 = ai_components(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(p4.sizes(), vec![1, 1, 1, 1]);
        assert_eq!(p4.quotient, Graph::path(4).unwrap());

        let k32 = ai_components(&Graph::complete_multipartite(&[3, 2]).unwrap()).unwrap();
        assert_eq!(k32.sizes(), vec![3, 2]);
        assert_eq!(k32.quotient, Graph::complete(2).unwrap());
        assert_eq!(k32.reassemble().unwrap(), Graph::complete_multipartite(&[3, 2]).unwrap());

        let looped = Graph::from_parts(2, &[(0, 1)], &[0]).unwrap();
        assert_eq!(ai_components(&looped), Err(Error::LoopsPresent));
    }

    #[test]
    fn property_p_examples() {
        assert!(satisfies_property_p(&Graph::cycle(4).unwrap()).unwrap());
        assert!(satisfies_property_p(&Graph::complete(5).unwrap()).unwrap());
        assert!(!satisfies_property_p(&Graph::cycle(6).unwrap()).unwrap());
        assert!(satisfies_property_p(&Graph::path(3).unwrap()).unwrap());
        assert!(!satisfies_property_p(&Graph::path(4).unwrap()).unwrap());
    }

    #[test]
    fn structure_helpers() {
        let g = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert_eq!(g.components(), vec![0b000111, 0b111000]);
        assert!(!g.is_connected());
        let with_loop = Graph::from_parts(4, &[(0, 1)], &[3]).unwrap();
        assert_eq!(with_loop.loops(), vec![3]);
        assert_eq!(with_loop.reduced().n_vertices(), 3);
        assert_eq!(with_loop.loopless().pairs(), vec![(0, 1)]);
    }
}
