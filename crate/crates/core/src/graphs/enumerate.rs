use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ENUM_LOOPLESS: usize = 6;
pub const MAX_ENUM_LOOPS: usize = 5;

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Graphs on `n` labelled vertices encoded as bit codes: one bit per pair
/// `(i, j)`, `i < j` in lexicographic order, then one bit per loop.
struct Coder {
    n: usize,
    pair_index: Vec<Vec<usize>>,
    pairs: Vec<(usize, usize)>,
}

impl Coder {
    fn new(n: usize) -> Self {
        let mut pair_index = vec![vec![usize::MAX; n]; n];
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pair_index[i][j] = pairs.len();
                pair_index[j][i] = pairs.len();
                pairs.push((i, j));
            }
        }
        Self {
            n,
            pair_index,
            pairs,
        }
    }

    fn permute(&self, code: u32, perm: &[usize]) -> u32 {
        let np = self.pairs.len();
        let mut out = 0u32;
        let mut bits = code;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let t = if b < np {
                let (i, j) = self.pairs[b];
                self.pair_index[perm[i]][perm[j]]
            } else {
                np + perm[b - np]
            };
            out |= 1 << t;
        }
        out
    }

    fn graph(&self, code: u32) -> Graph {
        let np = self.pairs.len();
        let pairs: Vec<_> = (0..np).filter(|b| code >> b & 1 == 1).map(|b| self.pairs[b]).collect();
        let loops: Vec<_> = (0..self.n).filter(|v| code >> (np + v) & 1 == 1).collect();
        Graph::from_parts(self.n, &pairs, &loops).expect("valid code")
    }
}

/// One graph per isomorphism class on exactly `n` vertices, each the
/// labelling with the smallest code; output sorted by code.
pub fn enumerate_graphs(n: usize, allow_loops: bool) -> Result<Vec<Graph>> {
    let cap = if allow_loops {
        MAX_ENUM_LOOPS
    } else {
        MAX_ENUM_LOOPLESS
    };
    if n > cap {
        return Err(Error::VertexCap {
            what: "graph enumeration",
            size: n,
            cap,
        });
    }
    let coder = Coder::new(n);
    let bits = coder.pairs.len() + if allow_loops { n } else { 0 };
    let perms = all_permutations(n);
    let mut reps = BTreeSet::new();
    for code in 0..1u32 << bits {
        if perms.iter().all(|p| coder.permute(code, p) >= code) {
            reps.insert(code);
        }
    }
    Ok(reps.into_iter().map(|c| coder.graph(c)).collect())
}
