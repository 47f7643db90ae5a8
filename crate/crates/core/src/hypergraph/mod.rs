//! Hypergraphs as Zhegalkin polynomials: quotient maps, the hypergraph minor
//! relation, pair contraction and isomorphism.

mod graph;
mod iso;

pub use graph::{Hypergraph, MAX_VERTICES};
pub use iso::{
    automorphisms, find_isomorphism_with, is_2set_transitive, isomorphic, isomorphisms,
    MAX_ISO_VERTICES,
};

pub(crate) use graph::mask_vertices;

use crate::boolfn::{from_polynomial, TruthTable, VarMap};
use crate::error::{Error, Result};

/// `f_H`, the function of the polynomial of `h`.
pub fn function_of(h: &Hypergraph) -> Result<TruthTable> {
    from_polynomial(h)
}

/// `Ȟ`: drops vertices in no edge, compacting the rest in order.
pub fn reduced(h: &Hypergraph) -> Hypergraph {
    h.induced(h.active_mask())
}

/// A vertex map together with the parity of each edge fibre it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientWitness {
    pub map: VarMap,
    /// `(E, |h'^{-1}[E]| mod 2)` for every image `E` of some edge, sorted by mask.
    pub preimage_parities: Vec<(u32, bool)>,
}

fn image_mask(edge: u32, map: &VarMap) -> u32 {
    mask_vertices(edge).fold(0u32, |m, v| m | 1 << map.apply(v))
}

fn check_map(h: &Hypergraph, map: &VarMap) -> Result<()> {
    if map.domain_size() != h.n_vertices() {
        return Err(Error::SizeMismatch {
            expected: h.n_vertices(),
            found: map.domain_size(),
        });
    }
    if map.codomain_size() > MAX_VERTICES {
        return Err(Error::VertexCap {
            what: "quotient target",
            size: map.codomain_size(),
            cap: MAX_VERTICES,
        });
    }
    Ok(())
}

pub fn quotient_witness(h: &Hypergraph, map: &VarMap) -> Result<QuotientWitness> {
    check_map(h, map)?;
    let mut images: Vec<u32> = h.edges().iter().map(|&e| image_mask(e, map)).collect();
    images.sort_unstable();
    let mut parities: Vec<(u32, bool)> = Vec::new();
    for e in images {
        match parities.last_mut() {
            Some((last, odd)) if *last == e => *odd = !*odd,
            _ => parities.push((e, true)),
        }
    }
    Ok(QuotientWitness {
        map: map.clone(),
        preimage_parities: parities,
    })
}

/// `H_{h'}`: the hypergraph on the codomain whose edges are the sets with an
/// odd number of edge preimages.
pub fn apply_quotient(h: &Hypergraph, map: &VarMap) -> Result<Hypergraph> {
    check_map(h, map)?;
    Ok(h.relabel(map.image(), map.codomain_size()))
}

/// A quotient map determines its target, so this is a comparison against
/// [`apply_quotient`].
pub fn is_quotient_map(map: &VarMap, source: &Hypergraph, target: &Hypergraph) -> Result<bool> {
    if map.codomain_size() != target.n_vertices() {
        return Err(Error::SizeMismatch {
            expected: target.n_vertices(),
            found: map.codomain_size(),
        });
    }
    Ok(apply_quotient(source, map)? == *target)
}

/// `H_e` for a vertex pair `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionResult {
    /// Vertices of `V \ e` keep their relative order; the fresh vertex is last.
    pub hypergraph: Hypergraph,
    pub fresh_vertex: usize,
}

/// The map `V → V_e` that sends both ends of `{i, j}` to the fresh vertex
/// (index `n - 2`) and compacts the others in order.
pub fn collapse_map(n: usize, i: usize, j: usize) -> Result<VarMap> {
    if i == j || i >= n || j >= n {
        return Err(Error::InvalidPair(i, j));
    }
    let fresh = n - 2;
    let mut next = 0;
    let image = (0..n)
        .map(|v| {
            if v == i || v == j {
                fresh
            } else {
                next += 1;
                next - 1
            }
        })
        .collect();
    VarMap::new(image, n - 1)
}

/// Contracts the pair `{i, j}` into a fresh vertex.
///
/// A set `E` of the new vertex set is an edge when either it avoids the fresh
/// vertex and is an edge of `h`, or it contains the fresh vertex `l` and an
/// odd number of `(E∖l) ∪ {i,j}`, `(E∖l) ∪ {i}`, `(E∖l) ∪ {j}` are edges.
pub fn contract_pair(h: &Hypergraph, i: usize, j: usize) -> Result<ContractionResult> {
    let n = h.n_vertices();
    let map = collapse_map(n, i, j)?;
    let pair = 1u32 << i | 1u32 << j;
    let fresh_bit = 1u32 << (n - 2);
    let mut bases: Vec<u32> = Vec::new();
    let mut edges: Vec<u32> = Vec::new();
    for &e in h.edges() {
        if e & pair == 0 {
            edges.push(image_mask(e, &map));
        } else {
            bases.push(e & !pair);
        }
    }
    bases.sort_unstable();
    bases.dedup();
    for base in bases {
        let hits = [base | pair, base | 1 << i, base | 1 << j]
            .iter()
            .filter(|&&s| h.contains_edge(s))
            .count();
        if hits % 2 == 1 {
            edges.push(image_mask(base, &map) | fresh_bit);
        }
    }
    edges.sort_unstable();
    let hypergraph = Hypergraph::from_sorted(n - 1, edges);
    debug_assert_eq!(
        Some(&hypergraph),
        apply_quotient(h, &map).ok().as_ref(),
        "contraction must agree with the collapse quotient"
    );
    Ok(ContractionResult {
        hypergraph,
        fresh_vertex: n - 2,
    })
}

/// Total number of candidate maps `is_hyper_minor` is willing to scan.
const MINOR_SEARCH_CAP: u64 = 1 << 24;

/// `h ⪯ h'`: is there a quotient map from `h'` onto `h`?
///
/// Scans every map `V' → V`. Only the edge-carrying vertices of `h'` matter
/// for the image, so isolated vertices of `h'` are pinned to vertex 0.
pub fn is_hyper_minor(h: &Hypergraph, h_prime: &Hypergraph) -> Result<bool> {
    let n = h.n_vertices();
    let m = h_prime.n_vertices();
    if n == 0 {
        return Ok(m == 0 && h.edges() == h_prime.edges());
    }
    let active = h_prime.active_vertices();
    if reduced(h).n_vertices() > active.len() {
        return Ok(false);
    }
    let count = (n as u64).checked_pow(active.len() as u32);
    if count.is_none_or(|c| c > MINOR_SEARCH_CAP) {
        return Err(Error::VertexCap {
            what: "minor search source",
            size: m,
            cap: (MINOR_SEARCH_CAP as f64).log(n.max(2) as f64) as usize,
        });
    }
    let mut image = vec![0usize; m];
    for sub in VarMap::all(active.len(), n) {
        for (k, &v) in active.iter().enumerate() {
            image[v] = sub.apply(k);
        }
        let map = VarMap::new(image.clone(), n)?;
        if apply_quotient(h_prime, &map)? == *h {
            return Ok(true);
        }
    }
    Ok(false)
}
