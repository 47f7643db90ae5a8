//! Arity gap, the `≈` relation on variable pairs, lower covers and
//! join-irreducibility.
//!
//! A pair `{i, j}` of essential variables has drop `ess f − ess f_{i=j}`.
//! The gap of `f` is the smallest drop; `C_f` is the set of pairs achieving
//! it, and the lower covers of `f` are exactly the identifications along
//! `C_f`. `f` is join-irreducible when those identifications are all
//! equivalent.

mod equiv;
mod gap2;
mod oracle;

pub use equiv::{Backend, ClassIndex};
pub use gap2::{gap2_classify, recognize_gap2, Gap2Case, Gap2Shape};
pub use oracle::{brute_force_ji, brute_force_lower_covers, set_partitions, MAX_ORACLE_ARITY};

use crate::boolfn::{compact, ess, essential_vars, identify, TruthTable};
use crate::error::{Error, Result};
use crate::hypergraph::{contract_pair, reduced, Hypergraph};

/// A 0-based variable or vertex pair, smaller index first.
pub type Pair = (usize, usize);

pub(crate) fn pairs_of(items: &[usize]) -> Vec<Pair> {
    let mut out = Vec::new();
    for (k, &i) in items.iter().enumerate() {
        for &j in &items[k + 1..] {
            out.push((i, j));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairPartition {
    pub ess: usize,
    /// All pairs of essential variables, lexicographic.
    pub pairs: Vec<Pair>,
    /// `drops[k]` belongs to `pairs[k]`.
    pub drops: Vec<usize>,
    /// `class_of[k]` is the `≈`-class id of `pairs[k]`, numbered by first
    /// appearance.
    pub class_of: Vec<usize>,
}

impl PairPartition {
    pub fn n_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    /// Pairs of each class, in class-id order.
    pub fn classes(&self) -> Vec<Vec<Pair>> {
        let mut out = vec![Vec::new(); self.n_classes()];
        for (k, &c) in self.class_of.iter().enumerate() {
            out[c].push(self.pairs[k]);
        }
        out
    }

    pub fn drop_of(&self, pair: Pair) -> Option<usize> {
        let p = (pair.0.min(pair.1), pair.0.max(pair.1));
        self.pairs.iter().position(|&q| q == p).map(|k| self.drops[k])
    }
}

fn require_two(f: &TruthTable) -> Result<usize> {
    let e = ess(f);
    if e < 2 {
        return Err(Error::GapUndefined { ess: e });
    }
    Ok(e)
}

fn partition_with(f: &TruthTable, backend: Backend) -> Result<(PairPartition, Vec<TruthTable>)> {
    let e = require_two(f)?;
    let pairs = pairs_of(&essential_vars(f));
    let mut index = ClassIndex::new(backend);
    let mut drops = Vec::with_capacity(pairs.len());
    let mut class_of = Vec::with_capacity(pairs.len());
    let mut idents = Vec::with_capacity(pairs.len());
    for &(i, j) in &pairs {
        let g = identify(f, i, j)?;
        drops.push(e - ess(&g));
        class_of.push(index.insert_function(&g)?);
        idents.push(g);
    }
    let partition = PairPartition {
        ess: e,
        pairs,
        drops,
        class_of,
    };
    Ok((partition, idents))
}

pub fn pair_classes(f: &TruthTable) -> Result<PairPartition> {
    Ok(partition_with(f, Backend::Auto)?.0)
}

/// Smallest drop over pairs of essential variables; always 1 or 2.
pub fn gap(f: &TruthTable) -> Result<usize> {
    require_two(f)?;
    let vars = essential_vars(f);
    let e = vars.len();
    let mut best = usize::MAX;
    for (i, j) in pairs_of(&vars) {
        best = best.min(e - ess(&identify(f, i, j)?));
        if best == 1 {
            break;
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverClass {
    pub pairs: Vec<Pair>,
    /// `f_{i=j}` for the first pair, with inessential variables dropped.
    pub representative: TruthTable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub ess: usize,
    pub gap: usize,
    pub c_f: Vec<Pair>,
    pub lower_covers: Vec<CoverClass>,
    pub join_irreducible: bool,
    /// For reducible `f`: the first pair of `C_f` and the first pair of
    /// `C_f` not equivalent to it.
    pub witness: Option<(Pair, Pair)>,
}

impl CoverReport {
    /// `ess gap ji n_cover_classes cf_size [witness]`, tab-separated, pairs
    /// 1-based.
    pub fn to_tsv(&self) -> String {
        let mut s = format!(
            "{}\t{}\t{}\t{}\t{}",
            self.ess,
            self.gap,
            self.join_irreducible,
            self.lower_covers.len(),
            self.c_f.len()
        );
        if let Some((a, b)) = self.witness {
            s.push_str(&format!(
                "\t{},{}\t{},{}",
                a.0 + 1,
                a.1 + 1,
                b.0 + 1,
                b.1 + 1
            ));
        }
        s
    }
}

pub fn cover_report(f: &TruthTable) -> Result<CoverReport> {
    cover_report_with(f, Backend::Auto)
}

pub fn cover_report_with(f: &TruthTable, backend: Backend) -> Result<CoverReport> {
    let (part, idents) = partition_with(f, backend)?;
    let gap = *part.drops.iter().min().expect("at least one pair");
    let in_cf: Vec<usize> = (0..part.pairs.len())
        .filter(|&k| part.drops[k] == gap)
        .collect();
    if gap == 2 {
        assert_eq!(in_cf.len(), part.pairs.len(), "gap two forces C_f = all pairs");
    }
    let mut lower_covers: Vec<CoverClass> = Vec::new();
    let mut class_ids: Vec<usize> = Vec::new();
    for &k in &in_cf {
        let c = part.class_of[k];
        match class_ids.iter().position(|&id| id == c) {
            Some(pos) => lower_covers[pos].pairs.push(part.pairs[k]),
            None => {
                class_ids.push(c);
                lower_covers.push(CoverClass {
                    pairs: vec![part.pairs[k]],
                    representative: compact(&idents[k]),
                });
            }
        }
    }
    let join_irreducible = lower_covers.len() == 1;
    let witness = if join_irreducible {
        None
    } else {
        Some((lower_covers[0].pairs[0], lower_covers[1].pairs[0]))
    };
    Ok(CoverReport {
        ess: part.ess,
        gap,
        c_f: in_cf.iter().map(|&k| part.pairs[k]).collect(),
        lower_covers,
        join_irreducible,
        witness,
    })
}

fn require_active(h: &Hypergraph) -> Result<Vec<usize>> {
    let active = h.active_vertices();
    if active.len() < 2 {
        return Err(Error::TooSmall(format!(
            "hypergraph has {} active vertices, need at least 2",
            active.len()
        )));
    }
    Ok(active)
}

/// Pairs of active vertices whose contraction isolates no other vertex.
pub fn dh_set(h: &Hypergraph) -> Result<Vec<Pair>> {
    let active = require_active(h)?;
    let mut out = Vec::new();
    for (i, j) in pairs_of(&active) {
        let c = contract_pair(h, i, j)?;
        if reduced(&c.hypergraph).n_vertices() + 1 == active.len() {
            out.push((i, j));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperReport {
    pub active: Vec<usize>,
    pub d_h: Vec<Pair>,
    /// Number of `≈`-classes among the pairs of `d_h`.
    pub dh_classes: usize,
    /// For reducible `f_h`: the first pair of `d_h` and the first pair of
    /// `d_h` not equivalent to it.
    pub witness: Option<(Pair, Pair)>,
    /// Set when `d_h` is empty.
    pub gap2: Option<Gap2Shape>,
    pub join_irreducible: bool,
}

impl HyperReport {
    /// `ji dh_size dh_classes gap2_shape [witness]`, tab-separated, pairs
    /// 1-based, `-` for no shape.
    pub fn to_tsv(&self) -> String {
        let shape = self.gap2.map_or("-".to_string(), |s| s.to_string());
        let mut s = format!(
            "{}\t{}\t{}\t{}",
            self.join_irreducible,
            self.d_h.len(),
            self.dh_classes,
            shape
        );
        if let Some((a, b)) = self.witness {
            s.push_str(&format!(
                "\t{},{}\t{},{}",
                a.0 + 1,
                a.1 + 1,
                b.0 + 1,
                b.1 + 1
            ));
        }
        s
    }
}

/// Decides join-irreducibility of `f_h` from contractions of `h`, so it
/// works beyond the truth-table arity cap.
pub fn hyper_report(h: &Hypergraph, backend: Backend) -> Result<HyperReport> {
    let active = require_active(h)?;
    let mut index = ClassIndex::new(backend);
    let mut d_h = Vec::new();
    let mut ids = Vec::new();
    for (i, j) in pairs_of(&active) {
        let c = contract_pair(h, i, j)?.hypergraph;
        if reduced(&c).n_vertices() + 1 == active.len() {
            d_h.push((i, j));
            ids.push(index.insert_hypergraph(&c)?);
        }
    }
    let (gap2, join_irreducible) = if d_h.is_empty() {
        let shape = recognize_gap2(h);
        (shape, shape.is_some())
    } else {
        (None, index.len() == 1)
    };
    let witness = ids
        .iter()
        .position(|&c| c != ids[0])
        .map(|k| (d_h[0], d_h[k]));
    Ok(HyperReport {
        active,
        d_h,
        dh_classes: index.len(),
        witness,
        gap2,
        join_irreducible,
    })
}

pub fn is_join_irreducible_h(h: &Hypergraph) -> Result<bool> {
    Ok(hyper_report(h, Backend::Auto)?.join_irreducible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::from_polynomial;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn poly(n: usize, edges: &[&[usize]]) -> TruthTable {
        from_polynomial(&h(n, edges)).unwrap()
    }

    fn composite() -> TruthTable {
        TruthTable::from_fn(4, |a| a & 3 != 0 && a >> 2 == 3).unwrap()
    }

    fn fano() -> Hypergraph {
        h(
            7,
            &[
                &[0, 1, 2],
                &[0, 3, 4],
                &[0, 5, 6],
                &[1, 3, 5],
                &[1, 4, 6],
                &[2, 3, 6],
                &[2, 4, 5],
            ],
        )
    }

    #[test]
    fn gap_examples() {
        assert_eq!(gap(&poly(2, &[&[0], &[1]])).unwrap(), 2);
        assert_eq!(gap(&poly(2, &[&[0, 1]])).unwrap(), 1);
        assert_eq!(gap(&poly(3, &[&[0, 1], &[0, 2], &[1, 2]])).unwrap(), 2);
        assert_eq!(
            gap(&TruthTable::var(3, 1).unwrap()),
            Err(Error::GapUndefined { ess: 1 })
        );
    }

    #[test]
    fn pair_classes_examples() {
        let p = pair_classes(&poly(2, &[&[0, 1]])).unwrap();
        assert_eq!(p.pairs, vec![(0, 1)]);
        assert_eq!(p.drops, vec![1]);
        assert_eq!(p.n_classes(), 1);

        let p = pair_classes(&composite()).unwrap();
        assert_eq!(p.drop_of((0, 1)), Some(1));
        assert_eq!(p.drop_of((2, 3)), Some(1));
        let k01 = p.pairs.iter().position(|&q| q == (0, 1)).unwrap();
        let k23 = p.pairs.iter().position(|&q| q == (2, 3)).unwrap();
        assert_ne!(p.class_of[k01], p.class_of[k23]);

        let p = pair_classes(&poly(3, &[&[0], &[1], &[2]])).unwrap();
        assert_eq!(p.n_classes(), 1);
        assert_eq!(p.drops, vec![2, 2, 2]);
    }

    #[test]
    fn cover_report_examples() {
        let r = cover_report(&poly(2, &[&[0, 1]])).unwrap();
        assert!(r.join_irreducible);
        assert_eq!(r.lower_covers.len(), 1);
        assert_eq!(r.lower_covers[0].representative, TruthTable::var(1, 0).unwrap());

        let r = cover_report(&composite()).unwrap();
        assert!(!r.join_irreducible);
        assert_eq!(r.gap, 1);
        assert!(r.witness.is_some());
        assert!(r.to_tsv().starts_with("4\t1\tfalse\t"));

        let r = cover_report(&poly(3, &[&[0, 1], &[0, 2], &[1, 2]])).unwrap();
        assert!(r.join_irreducible);
        assert_eq!(r.gap, 2);
        assert_eq!(r.c_f.len(), 3);
        assert_eq!(r.lower_covers[0].representative, TruthTable::var(1, 0).unwrap());
        assert_eq!(r.to_tsv(), "3\t2\ttrue\t1\t3");
    }

    #[test]
    fn cover_report_agrees_with_oracle_on_examples() {
        for f in [
            poly(2, &[&[0, 1]]),
            composite(),
            poly(3, &[&[0, 1], &[0, 2], &[1, 2]]),
            poly(3, &[&[0, 1, 2]]),
            poly(4, &[&[0, 1], &[2, 3]]),
        ] {
            assert_eq!(
                cover_report(&f).unwrap().join_irreducible,
                brute_force_ji(&f).unwrap(),
                "{f:?}"
            );
        }
    }

    #[test]
    fn dh_examples() {
        let k3 = Hypergraph::complete_graph(3).unwrap();
        assert!(dh_set(&k3).unwrap().is_empty());
        assert_eq!(dh_set(&Hypergraph::complete_graph(4).unwrap()).unwrap().len(), 6);
        assert_eq!(dh_set(&fano()).unwrap().len(), 21);
        assert!(dh_set(&h(3, &[&[0]])).is_err());
    }

    #[test]
    fn dh_matches_essential_arity_drop() {
        for g in [fano(), Hypergraph::complete_graph(4).unwrap(), h(4, &[&[0, 1], &[2, 3], &[]])] {
            let f = function_of_h(&g);
            let d = dh_set(&g).unwrap();
            for (i, j) in pairs_of(&g.active_vertices()) {
                let drop = ess(&f) - ess(&identify(&f, i, j).unwrap());
                assert_eq!(d.contains(&(i, j)), drop == 1);
            }
        }
    }

    fn function_of_h(g: &Hypergraph) -> TruthTable {
        from_polynomial(g).unwrap()
    }

    #[test]
    fn hyper_examples() {
        assert!(is_join_irreducible_h(&Hypergraph::complete_graph(4).unwrap()).unwrap());
        let tri = h(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let r = hyper_report(&tri, Backend::Auto).unwrap();
        assert!(r.join_irreducible);
        assert_eq!(r.gap2.map(|s| s.case), Some(Gap2Case::Symmetric));
        let comp = crate::boolfn::zhegalkin(&composite());
        assert!(!is_join_irreducible_h(&comp).unwrap());
        assert!(is_join_irreducible_h(&fano()).unwrap());
        let iso = hyper_report(&fano(), Backend::Isomorphism).unwrap();
        assert_eq!(iso.dh_classes, 1);
    }

    #[test]
    fn gap2_examples() {
        let s = gap2_classify(&poly(3, &[&[0], &[1], &[2]])).unwrap().unwrap();
        assert_eq!((s.case, s.constant), (Gap2Case::Parity { m: 3 }, false));
        let s = gap2_classify(&poly(2, &[&[0, 1], &[0], &[]])).unwrap().unwrap();
        assert_eq!((s.case_number(), s.constant), (2, true));
        assert_eq!(gap2_classify(&poly(3, &[&[0, 1, 2]])).unwrap(), None);
        for shape in Gap2Shape::all_up_to(4) {
            assert_eq!(recognize_gap2(&shape.hypergraph()), Some(shape));
            assert_eq!(gap(&from_polynomial(&shape.hypergraph()).unwrap()).unwrap(), 2);
        }
    }
}
