use std::collections::{BTreeSet, VecDeque};

use super::{apply_map, canonical, compact, identify, CanonicalForm, TruthTable, VarMap};
use crate::error::Result;

/// Every equivalence class below `f`, including `f` itself.
///
/// Breadth-first over pairwise identifications of essential variables,
/// deduplicated by canonical form. Canonical tables have all variables
/// essential, so every pair in them is a candidate.
pub fn minor_closure(f: &TruthTable) -> Result<BTreeSet<CanonicalForm>> {
    let start = canonical(f)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        let t = c.table();
        let n = t.arity();
        for i in 0..n {
            for j in i + 1..n {
                let next = canonical(&identify(t, i, j)?)?;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

/// Is `g ≤ f` in the simple-minor quasi-order?
pub fn is_minor(g: &TruthTable, f: &TruthTable) -> Result<bool> {
    let cg = canonical(g)?;
    let cf = canonical(f)?;
    if cg.ess_arity() > cf.ess_arity() {
        return Ok(false);
    }
    if cg.ess_arity() == cf.ess_arity() {
        return Ok(cg == cf);
    }
    Ok(minor_closure(f)?.contains(&cg))
}

/// The same decision by exhaustive search over substitutions `σ`.
///
/// Both sides are first compacted to their essential variables; `g ≤ f`
/// iff some `σ: Ess f → Ess g` (one slot when `g` is constant) makes
/// `f ∘ σ` equal to `g`. Exponential; meant as a cross-check.
pub fn is_minor_by_maps(g: &TruthTable, f: &TruthTable) -> Result<bool> {
    let gc = compact(g);
    let fc = compact(f);
    let target = if gc.arity() == 0 {
        TruthTable::constant(1, gc.get(0))?
    } else {
        gc
    };
    let m = target.arity();
    for sigma in VarMap::all(fc.arity(), m) {
        if apply_map(&fc, &sigma)? == target {
            return Ok(true);
        }
    }
    Ok(false)
}
