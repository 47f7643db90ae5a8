use std::collections::{HashSet, VecDeque};
use std::ops::ControlFlow;

use super::graph::{mask_vertices, Hypergraph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by the isomorphism search.
pub const MAX_ISO_VERTICES: usize = 13;

/// Above this many vertices, 2-set transitivity is decided from automorphism
/// generators instead of the full group.
const FULL_GROUP_LIMIT: usize = 9;

struct Side<'a> {
    h: &'a Hypergraph,
    incident: Vec<Vec<u32>>,
    profile: Vec<Vec<u32>>,
    codegree: Vec<Vec<u32>>,
}

impl<'a> Side<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let n = h.n_vertices();
        let mut incident = vec![Vec::new(); n];
        let mut codegree = vec![vec![0u32; n]; n];
        for &e in h.edges() {
            let vs: Vec<usize> = mask_vertices(e).collect();
            for &u in &vs {
                incident[u].push(e);
                for &w in &vs {
                    codegree[u][w] += 1;
                }
            }
        }
        let profile = (0..n).map(|v| h.degree_profile(v)).collect();
        Self {
            h,
            incident,
            profile,
            codegree,
        }
    }
}

struct Matcher<'a> {
    a: Side<'a>,
    b: Side<'a>,
    order: Vec<usize>,
    forward: Vec<usize>,
    backward: Vec<usize>,
    mapped_a: u32,
    mapped_b: u32,
}

const UNSET: usize = usize::MAX;

fn check_cap(h: &Hypergraph) -> Result<()> {
    if h.n_vertices() > MAX_ISO_VERTICES {
        return Err(Error::VertexCap {
            what: "isomorphism input",
            size: h.n_vertices(),
            cap: MAX_ISO_VERTICES,
        });
    }
    Ok(())
}

fn invariants_match(a: &Side, b: &Side) -> bool {
    if a.h.n_vertices() != b.h.n_vertices() || a.h.edge_count() != b.h.edge_count() {
        return false;
    }
    if a.h.size_histogram() != b.h.size_histogram() {
        return false;
    }
    let mut pa = a.profile.clone();
    let mut pb = b.profile.clone();
    pa.sort();
    pb.sort();
    pa == pb
}

/// Search order: fixed vertices first, then greedily the vertex most tied
/// to the already ordered ones, so edge checks fire early.
fn search_order(side: &Side, first: &[usize]) -> Vec<usize> {
    let n = side.h.n_vertices();
    let mut order: Vec<usize> = first.to_vec();
    let mut placed: u32 = first.iter().fold(0, |m, &v| m | 1 << v);
    while order.len() < n {
        let best = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                let ties: u32 = order.iter().map(|&u| side.codegree[u][v]).sum();
                (ties, side.codegree[v][v], std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        order.push(best);
        placed |= 1 << best;
    }
    order
}

impl<'a> Matcher<'a> {
    fn new(a: &'a Hypergraph, b: &'a Hypergraph, fixed: &[(usize, usize)]) -> Option<Self> {
        let a = Side::new(a);
        let b = Side::new(b);
        if !invariants_match(&a, &b) {
            return None;
        }
        let first: Vec<usize> = fixed.iter().map(|&(v, _)| v).collect();
        let order = search_order(&a, &first);
        let n = a.h.n_vertices();
        Some(Self {
            a,
            b,
            order,
            forward: vec![UNSET; n],
            backward: vec![UNSET; n],
            mapped_a: 0,
            mapped_b: 0,
        })
    }

    fn image(&self, e: u32) -> u32 {
        mask_vertices(e).fold(0, |m, v| m | 1 << self.forward[v])
    }

    fn preimage(&self, e: u32) -> u32 {
        mask_vertices(e).fold(0, |m, v| m | 1 << self.backward[v])
    }

    fn feasible(&self, v: usize, w: usize) -> bool {
        if self.mapped_b >> w & 1 == 1 || self.a.profile[v] != self.b.profile[w] {
            return false;
        }
        if self.a.codegree[v][v] != self.b.codegree[w][w] {
            return false;
        }
        for u in mask_vertices(self.mapped_a) {
            if self.a.codegree[u][v] != self.b.codegree[self.forward[u]][w] {
                return false;
            }
        }
        true
    }

    /// Edges that became fully mapped by `v ↦ w` must correspond both ways.
    fn edges_consistent(&self, v: usize, w: usize) -> bool {
        let done_a = self.mapped_a | 1 << v;
        for &e in &self.a.incident[v] {
            if e & !done_a == 0 && !self.b.h.contains_edge(self.image(e)) {
                return false;
            }
        }
        let done_b = self.mapped_b | 1 << w;
        for &e in &self.b.incident[w] {
            if e & !done_b == 0 && !self.a.h.contains_edge(self.preimage(e)) {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, v: usize, w: usize) {
        self.forward[v] = w;
        self.backward[w] = v;
        self.mapped_a |= 1 << v;
        self.mapped_b |= 1 << w;
    }

    fn unassign(&mut self, v: usize, w: usize) {
        self.forward[v] = UNSET;
        self.backward[w] = UNSET;
        self.mapped_a &= !(1 << v);
        self.mapped_b &= !(1 << w);
    }

    fn search<B>(
        &mut self,
        depth: usize,
        fixed: &[(usize, usize)],
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if depth == self.order.len() {
            return visit(&self.forward);
        }
        let v = self.order[depth];
        let n = self.b.h.n_vertices();
        let pinned = fixed.get(depth).map(|&(_, w)| w);
        for w in 0..n {
            if pinned.is_some_and(|p| p != w) {
                continue;
            }
            if !self.feasible(v, w) {
                continue;
            }
            self.forward[v] = w;
            self.backward[w] = v;
            let ok = self.edges_consistent(v, w);
            self.forward[v] = UNSET;
            self.backward[w] = UNSET;
            if !ok {
                continue;
            }
            self.assign(v, w);
            let flow = self.search(depth + 1, fixed, visit);
            self.unassign(v, w);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Finds an isomorphism `a → b` sending each `fixed.0` to `fixed.1`.
pub fn find_isomorphism_with(
    a: &Hypergraph,
    b: &Hypergraph,
    fixed: &[(usize, usize)],
) -> Result<Option<Vec<usize>>> {
    check_cap(a)?;
    check_cap(b)?;
    for &(v, w) in fixed {
        if v >= a.n_vertices() || w >= b.n_vertices() {
            return Err(Error::InvalidPair(v, w));
        }
    }
    let Some(mut m) = Matcher::new(a, b, fixed) else {
        return Ok(None);
    };
    let found = m.search(0, fixed, &mut |map| ControlFlow::Break(map.to_vec()));
    Ok(match found {
        ControlFlow::Break(map) => Some(map),
        ControlFlow::Continue(()) => None,
    })
}

/// A bijection `φ` with `E ∈ a ⇔ φ(E) ∈ b`, if one exists.
pub fn isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<Option<Vec<usize>>> {
    find_isomorphism_with(a, b, &[])
}

/// Every isomorphism `a → b`.
pub fn isomorphisms(a: &Hypergraph, b: &Hypergraph) -> Result<Vec<Vec<usize>>> {
    check_cap(a)?;
    check_cap(b)?;
    let Some(mut m) = Matcher::new(a, b, &[]) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    let _ = m.search::<()>(0, &[], &mut |map| {
        out.push(map.to_vec());
        ControlFlow::Continue(())
    });
    Ok(out)
}

pub fn automorphisms(h: &Hypergraph) -> Result<Vec<Vec<usize>>> {
    isomorphisms(h, h)
}

fn pair_key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn pair_orbit(start: (usize, usize), group: &[Vec<usize>]) -> HashSet<(usize, usize)> {
    let mut orbit = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((x, y)) = queue.pop_front() {
        for g in group {
            let p = pair_key(g[x], g[y]);
            if orbit.insert(p) {
                queue.push_back(p);
            }
        }
    }
    orbit
}

/// Does `Aut(h)` map every vertex pair onto every other?
pub fn is_2set_transitive(h: &Hypergraph) -> Result<bool> {
    check_cap(h)?;
    let n = h.n_vertices();
    if n < 2 {
        return Ok(true);
    }
    let total = n * (n - 1) / 2;
    let start = (0, 1);
    if n <= FULL_GROUP_LIMIT {
        let group = automorphisms(h)?;
        return Ok(pair_orbit(start, &group).len() == total);
    }
    let mut generators: Vec<Vec<usize>> = Vec::new();
    loop {
        let orbit = pair_orbit(start, &generators);
        if orbit.len() == total {
            return Ok(true);
        }
        let (x, y) = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|p| !orbit.contains(p))
            .expect("orbit is not everything");
        let g = match find_isomorphism_with(h, h, &[(0, x), (1, y)])? {
            Some(g) => g,
            None => match find_isomorphism_with(h, h, &[(0, y), (1, x)])? {
                Some(g) => g,
                None => return Ok(false),
            },
        };
        generators.push(g);
    }
}
