use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Hypergraph`] can hold (edges are `u32` masks).
pub const MAX_VERTICES: usize = 32;

/// A hypergraph on vertices `0..n`, hyperedges stored as bitmasks.
///
/// The edge list is sorted and free of duplicates; the empty mask is a legal
/// edge and stands for the constant monomial. Read as a polynomial over
/// GF(2), every edge is a monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<u32>,
}

pub(crate) fn vertex_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn mask_vertices(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |v| mask >> v & 1 == 1)
}

impl Hypergraph {
    /// Builds from edge masks. Duplicates are rejected rather than cancelled:
    /// an edge list with repeats is almost certainly an input mistake.
    pub fn new(n: usize, mut edges: Vec<u32>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::VertexCap {
                what: "hypergraph",
                size: n,
                cap: MAX_VERTICES,
            });
        }
        let allowed = vertex_mask(n);
        if let Some(&bad) = edges.iter().find(|&&e| e & !allowed != 0) {
            return Err(Error::IndexOutOfRange {
                index: 31 - (bad & !allowed).leading_zeros() as usize,
                size: n,
            });
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::Parse {
                line: 0,
                message: "duplicate hyperedge".into(),
            });
        }
        Ok(Self { n, edges })
    }

    /// Builds from 0-based vertex lists.
    pub fn from_edge_lists<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut masks = Vec::new();
        for e in edges {
            let mut m = 0u32;
            for &v in e.as_ref() {
                if v >= n || v >= MAX_VERTICES {
                    return Err(Error::IndexOutOfRange { index: v, size: n });
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Self::new(n, masks)
    }

    /// Assumes `edges` is sorted, deduplicated and within range.
    pub(crate) fn from_sorted(n: usize, edges: Vec<u32>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&e| e & !vertex_mask(n) == 0));
        Self { n, edges }
    }

    /// Builds from an edge multiset, keeping the edges of odd multiplicity.
    pub(crate) fn from_parity(n: usize, mut edges: Vec<u32>) -> Self {
        edges.sort_unstable();
        let mut out = Vec::with_capacity(edges.len());
        let mut k = 0;
        while k < edges.len() {
            let mut run = 1;
            while k + run < edges.len() && edges[k + run] == edges[k] {
                run += 1;
            }
            if run % 2 == 1 {
                out.push(edges[k]);
            }
            k += run;
        }
        Self { n, edges: out }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn complete_graph(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push(vec![i, j]);
            }
        }
        Self::from_edge_lists(n, edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[u32] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, mask: u32) -> bool {
        self.edges.binary_search(&mask).is_ok()
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.first() == Some(&0)
    }

    /// Union of all edges: the vertices that appear in the polynomial.
    pub fn active_mask(&self) -> u32 {
        self.edges.iter().fold(0, |acc, &e| acc | e)
    }

    pub fn active_vertices(&self) -> Vec<usize> {
        mask_vertices(self.active_mask()).collect()
    }

    /// Edges as sorted 0-based vertex lists.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges
            .iter()
            .map(|&e| mask_vertices(e).collect())
            .collect()
    }

    /// Number of edges containing `v`, bucketed by edge size.
    pub(crate) fn degree_profile(&self, v: usize) -> Vec<u32> {
        let mut prof = vec![0u32; self.n + 1];
        for &e in &self.edges {
            if e >> v & 1 == 1 {
                prof[e.count_ones() as usize] += 1;
            }
        }
        prof
    }

    pub(crate) fn size_histogram(&self) -> Vec<u32> {
        let mut h = vec![0u32; self.n + 1];
        for &e in &self.edges {
            h[e.count_ones() as usize] += 1;
        }
        h
    }

    /// Renames vertices: vertex `v` becomes `rename[v]` in a hypergraph on `n` vertices.
    pub(crate) fn relabel(&self, rename: &[usize], n: usize) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|&e| mask_vertices(e).fold(0u32, |m, v| m | 1 << rename[v]))
            .collect();
        Self::from_parity(n, edges)
    }

    /// The induced hypergraph on `keep` (a vertex mask), compacted order-preservingly.
    pub(crate) fn induced(&self, keep: u32) -> Self {
        let mut rename = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in rename.iter_mut().enumerate() {
            if keep >> v & 1 == 1 {
                *slot = next;
                next += 1;
            }
        }
        let edges: Vec<u32> = self
            .edges
            .iter()
            .filter(|&&e| e & !keep == 0)
            .map(|&e| mask_vertices(e).fold(0u32, |m, v| m | 1 << rename[v]))
            .collect();
        let mut edges = edges;
        edges.sort_unstable();
        Self::from_sorted(next, edges)
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph({}; ", self.n)?;
        let mut first = true;
        for e in self.edge_lists() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            if e.is_empty() {
                write!(f, "∅")?;
            } else {
                let names: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, "{{{}}}", names.join(","))?;
            }
        }
        write!(f, ")")
    }
}
