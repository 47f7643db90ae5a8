//! 2-designs and Steiner systems: design checks, the `−2` deletions and
//! the three-way join-irreducibility report.

mod sts13;

pub use sts13::{random_sts, sts13_cyclic, sts13_pair};

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::{contract_pair, isomorphic, Hypergraph};
use crate::irreducibility::{hyper_report, pairs_of, Backend, Pair};

/// Parameters of a 2-`(n, k, λ)` design.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DesignParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
}

impl DesignParams {
    pub fn steiner(n: usize, k: usize) -> Self {
        Self { n, k, lambda: 1 }
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2-({},{},{})", self.n, self.k, self.lambda)
    }
}

/// Number of blocks through each vertex pair, indexed like `pairs_of(0..n)`.
fn pair_counts(h: &Hypergraph) -> Vec<usize> {
    let n = h.n_vertices();
    let mut counts = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let e = 1u32 << i | 1u32 << j;
            counts.push(h.edges().iter().filter(|&&b| b & e == e).count());
        }
    }
    counts
}

pub fn is_design(h: &Hypergraph, p: DesignParams) -> bool {
    h.n_vertices() == p.n
        && p.n >= p.k
        && p.k >= 2
        && p.lambda >= 1
        && h.edges().iter().all(|e| e.count_ones() as usize == p.k)
        && pair_counts(h).iter().all(|&c| c == p.lambda)
}

/// The parameters `h` satisfies as a design, if any.
pub fn design_params(h: &Hypergraph) -> Option<DesignParams> {
    let k = h.edges().first()?.count_ones() as usize;
    let lambda = *pair_counts(h).first()?;
    let p = DesignParams {
        n: h.n_vertices(),
        k,
        lambda,
    };
    is_design(h, p).then_some(p)
}

/// `H_{-e}`: vertices `V∖e` (order kept), blocks contained in `V∖e`.
pub fn minus_pair(h: &Hypergraph, e: Pair) -> Result<Hypergraph> {
    let n = h.n_vertices();
    let (i, j) = e;
    if i == j || i >= n || j >= n {
        return Err(Error::InvalidPair(i, j));
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(h.induced(all & !(1 << i) & !(1 << j)))
}

fn all_pairs(n: usize) -> Vec<Pair> {
    pairs_of(&(0..n).collect::<Vec<_>>())
}

fn all_isomorphic(items: Vec<Hypergraph>) -> Result<bool> {
    let Some((first, rest)) = items.split_first() else {
        return Ok(true);
    };
    let found: Vec<bool> = rest
        .par_iter()
        .map(|h| isomorphic(first, h).map(|m| m.is_some()))
        .collect::<Result<_>>()?;
    Ok(found.into_iter().all(|b| b))
}

/// All deletions `H_{-e}` pairwise isomorphic.
pub fn is_minus2_monomorphic(h: &Hypergraph) -> Result<bool> {
    let n = h.n_vertices();
    if n < 3 {
        return Err(Error::TooSmall(format!("{n} vertices, need at least 3")));
    }
    let parts = all_pairs(n)
        .into_iter()
        .map(|e| minus_pair(h, e))
        .collect::<Result<Vec<_>>>()?;
    all_isomorphic(parts)
}

/// All contractions `H_e` pairwise isomorphic.
pub fn is_contraction_monomorphic(h: &Hypergraph) -> Result<bool> {
    let parts = all_pairs(h.n_vertices())
        .into_iter()
        .map(|(i, j)| contract_pair(h, i, j).map(|c| c.hypergraph))
        .collect::<Result<Vec<_>>>()?;
    all_isomorphic(parts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerReport {
    pub params: DesignParams,
    pub join_irreducible: bool,
    pub contraction_monomorphic: bool,
    pub minus2_monomorphic: bool,
    pub dh_size: usize,
    pub n_pairs: usize,
}

impl SteinerReport {
    /// The three properties coincide.
    pub fn agrees(&self) -> bool {
        self.join_irreducible == self.contraction_monomorphic
            && self.contraction_monomorphic == self.minus2_monomorphic
    }

    pub fn dh_is_everything(&self) -> bool {
        self.dh_size == self.n_pairs
    }

    /// `params ji contraction_mono minus2_mono dh_size n_pairs`, tab-separated.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.params,
            self.join_irreducible,
            self.contraction_monomorphic,
            self.minus2_monomorphic,
            self.dh_size,
            self.n_pairs
        )
    }
}

/// Join-irreducibility (isomorphism backend), contraction monomorphy and
/// `−2`-monomorphy of a Steiner system.
pub fn steiner_report(h: &Hypergraph) -> Result<SteinerReport> {
    let params = design_params(h)
        .filter(|p| p.lambda == 1)
        .ok_or_else(|| Error::NotSteiner(format!("{h:?}")))?;
    let hr = hyper_report(h, Backend::Isomorphism)?;
    let n = h.n_vertices();
    Ok(SteinerReport {
        params,
        join_irreducible: hr.join_irreducible,
        contraction_monomorphic: is_contraction_monomorphic(h)?,
        minus2_monomorphic: is_minus2_monomorphic(h)?,
        dh_size: hr.d_h.len(),
        n_pairs: n * (n - 1) / 2,
    })
}

/// The Fano plane PG(2,2).
pub fn fano() -> Hypergraph {
    // points 1..7 of PG(2,2) as nonzero vectors of GF(2)^3; lines are the
    // triples with zero XOR
    let mut blocks = Vec::new();
    for a in 1..8usize {
        for b in a + 1..8 {
            let c = a ^ b;
            if c > b {
                blocks.push(vec![a - 1, b - 1, c - 1]);
            }
        }
    }
    let h = Hypergraph::from_edge_lists(7, blocks).expect("valid blocks");
    debug_assert!(is_design(&h, DesignParams::steiner(7, 3)));
    h
}

/// The affine plane AG(2,3): point `(x, y)` is vertex `3x + y`.
pub fn ag_2_3() -> Hypergraph {
    let mut lines = std::collections::BTreeSet::new();
    for p in 0..9usize {
        for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
            let mut line: Vec<usize> = (0..3)
                .map(|t| (p / 3 + t * dx) % 3 * 3 + (p % 3 + t * dy) % 3)
                .collect();
            line.sort_unstable();
            lines.insert(line);
        }
    }
    let h = Hypergraph::from_edge_lists(9, lines).expect("valid blocks");
    debug_assert!(is_design(&h, DesignParams::steiner(9, 3)));
    h
}

/// Named built-in systems, each checked with [`is_design`].
pub fn builtin_systems() -> Vec<(&'static str, Hypergraph)> {
    let out = vec![("fano", fano()), ("ag9", ag_2_3())];
    for (name, h) in &out {
        assert!(design_params(h).is_some_and(|p| p.lambda == 1), "{name} is not Steiner");
    }
    out
}

pub fn builtin(name: &str) -> Option<Hypergraph> {
    match name {
        "fano" => Some(fano()),
        "ag9" | "ag_2_3" => Some(ag_2_3()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{apply_quotient, is_2set_transitive, isomorphisms};
    use crate::boolfn::VarMap;

    #[test]
    fn design_examples() {
        let f = fano();
        assert_eq!(f.edge_count(), 7);
        assert!(is_design(&f, DesignParams::steiner(7, 3)));
        let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        assert_eq!(f, Hypergraph::from_edge_lists(7, lines).unwrap());
        for n in 2..=7 {
            let k = Hypergraph::complete_graph(n).unwrap();
            assert!(is_design(&k, DesignParams::steiner(n, 2)));
        }
        let broken = Hypergraph::new(7, f.edges()[1..].to_vec()).unwrap();
        assert!(!is_design(&broken, DesignParams::steiner(7, 3)));
        assert_eq!(design_params(&broken), None);
        assert_eq!(ag_2_3().edge_count(), 12);
        assert_eq!(design_params(&ag_2_3()), Some(DesignParams::steiner(9, 3)));
        assert!(is_2set_transitive(&f).unwrap());
    }

    #[test]
    fn minus_pair_examples() {
        let f = fano();
        for e in all_pairs(7) {
            let m = minus_pair(&f, e).unwrap();
            assert_eq!(m.n_vertices(), 5);
            // 7 lines minus 3 + 3 through the endpoints plus the shared one
            assert_eq!(m.edge_count(), 2);
        }
        let k4 = Hypergraph::complete_graph(4).unwrap();
        assert_eq!(minus_pair(&k4, (0, 1)).unwrap(), Hypergraph::complete_graph(2).unwrap());
        let star = Hypergraph::from_edge_lists(3, [[0, 1], [0, 2]]).unwrap();
        assert_eq!(minus_pair(&star, (0, 1)).unwrap().edge_count(), 0);
        assert!(minus_pair(&star, (1, 1)).is_err());
    }

    #[test]
    fn monomorphy_examples() {
        assert!(is_minus2_monomorphic(&fano()).unwrap());
        assert!(is_minus2_monomorphic(&ag_2_3()).unwrap());
        let broken = Hypergraph::new(7, fano().edges()[1..].to_vec()).unwrap();
        assert!(!is_minus2_monomorphic(&broken).unwrap());
        assert!(is_minus2_monomorphic(&Hypergraph::complete_graph(2).unwrap()).is_err());
    }

    #[test]
    fn reports() {
        for h in [fano(), ag_2_3()] {
            let r = steiner_report(&h).unwrap();
            assert!(r.join_irreducible && r.agrees() && r.dh_is_everything(), "{r:?}");
        }
        let k5 = steiner_report(&Hypergraph::complete_graph(5).unwrap()).unwrap();
        assert!(k5.join_irreducible && k5.agrees());
        let broken = Hypergraph::new(7, fano().edges()[1..].to_vec()).unwrap();
        assert!(matches!(steiner_report(&broken), Err(Error::NotSteiner(_))));
    }

    #[test]
    fn deletion_isomorphisms_extend_to_contractions() {
        let f = fano();
        let pairs = all_pairs(7);
        let fresh = 5;
        for &e in &pairs {
            let (me, ce) = (minus_pair(&f, e).unwrap(), contract_pair(&f, e.0, e.1).unwrap());
            assert_eq!(ce.fresh_vertex, fresh);
            for &e2 in &pairs {
                let me2 = minus_pair(&f, e2).unwrap();
                let ce2 = contract_pair(&f, e2.0, e2.1).unwrap().hypergraph;
                let phi = isomorphic(&me, &me2).unwrap().unwrap();
                let mut ext = phi.clone();
                ext.push(fresh);
                let map = VarMap::new(ext, 6).unwrap();
                assert_eq!(apply_quotient(&ce.hypergraph, &map).unwrap(), ce2);
                for g in isomorphisms(&ce.hypergraph, &ce2).unwrap() {
                    assert_eq!(g[fresh], fresh);
                }
            }
        }
    }
}
