use std::fmt;

use crate::boolfn::{ess, zhegalkin, TruthTable};
use crate::error::{Error, Result};
use crate::hypergraph::{reduced, Hypergraph};

/// The four polynomial shapes with arity gap two, each plus a constant `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gap2Case {
    /// `x1 + ... + xm + c`, `m ≥ 2`.
    Parity { m: usize },
    /// `x1x2 + x1 + c`.
    AndPlusVariable,
    /// `x1x2 + x1x3 + x2x3 + c`.
    Symmetric,
    /// `x1x2 + x1x3 + x2x3 + x1 + x2 + c`.
    SymmetricPlusTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gap2Shape {
    pub case: Gap2Case,
    pub constant: bool,
}

impl Gap2Shape {
    /// 1 to 4, in the order the shapes are usually listed.
    pub fn case_number(&self) -> u8 {
        match self.case {
            Gap2Case::Parity { .. } => 1,
            Gap2Case::AndPlusVariable => 2,
            Gap2Case::Symmetric => 3,
            Gap2Case::SymmetricPlusTwo => 4,
        }
    }

    /// The shape's polynomial as a hypergraph on its own variables.
    pub fn hypergraph(&self) -> Hypergraph {
        let mut edges: Vec<Vec<usize>> = match self.case {
            Gap2Case::Parity { m } => (0..m).map(|i| vec![i]).collect(),
            Gap2Case::AndPlusVariable => vec![vec![0, 1], vec![0]],
            Gap2Case::Symmetric => vec![vec![0, 1], vec![0, 2], vec![1, 2]],
            Gap2Case::SymmetricPlusTwo => {
                vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0], vec![1]]
            }
        };
        if self.constant {
            edges.push(vec![]);
        }
        let n = match self.case {
            Gap2Case::Parity { m } => m,
            Gap2Case::AndPlusVariable => 2,
            _ => 3,
        };
        Hypergraph::from_edge_lists(n, edges).expect("fixed shape")
    }

    /// Every shape with at most `max_vars` variables.
    pub fn all_up_to(max_vars: usize) -> Vec<Gap2Shape> {
        let mut cases: Vec<Gap2Case> = (2..=max_vars).map(|m| Gap2Case::Parity { m }).collect();
        if max_vars >= 2 {
            cases.push(Gap2Case::AndPlusVariable);
        }
        if max_vars >= 3 {
            cases.push(Gap2Case::Symmetric);
            cases.push(Gap2Case::SymmetricPlusTwo);
        }
        cases
            .into_iter()
            .flat_map(|case| {
                [false, true].map(|constant| Gap2Shape { case, constant })
            })
            .collect()
    }
}

impl fmt::Display for Gap2Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = u8::from(self.constant);
        match self.case {
            Gap2Case::Parity { m } => write!(f, "case1(m={m},c={c})"),
            _ => write!(f, "case{}(c={c})", self.case_number()),
        }
    }
}

/// Matches a hypergraph (any vertex set) against the gap-two shapes.
///
/// The shapes are closed under the symmetries that matter here, so a
/// structural test on the reduced hypergraph is an isomorphism test.
pub fn recognize_gap2(h: &Hypergraph) -> Option<Gap2Shape> {
    let r = reduced(h);
    let n = r.n_vertices();
    if n < 2 {
        return None;
    }
    let constant = r.has_empty_edge();
    let rest: Vec<u32> = r.edges().iter().copied().filter(|&e| e != 0).collect();
    let singletons = rest.iter().filter(|e| e.count_ones() == 1).count();
    let pairs = rest.iter().filter(|e| e.count_ones() == 2).count();
    let shape = |case| Some(Gap2Shape { case, constant });
    if singletons == rest.len() && singletons == n {
        return shape(Gap2Case::Parity { m: n });
    }
    if n == 2 && rest.len() == 2 && pairs == 1 && singletons == 1 {
        return shape(Gap2Case::AndPlusVariable);
    }
    if n == 3 && pairs == 3 && singletons + pairs == rest.len() {
        return match singletons {
            0 => shape(Gap2Case::Symmetric),
            2 => shape(Gap2Case::SymmetricPlusTwo),
            _ => None,
        };
    }
    None
}

/// Which gap-two shape `f` is equivalent to, if any.
pub fn gap2_classify(f: &TruthTable) -> Result<Option<Gap2Shape>> {
    let e = ess(f);
    if e < 2 {
        return Err(Error::GapUndefined { ess: e });
    }
    Ok(recognize_gap2(&zhegalkin(f)))
}
