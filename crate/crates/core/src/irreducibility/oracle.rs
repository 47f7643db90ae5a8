//! Join-irreducibility straight from the definition, with no use of pair
//! drops or lower-cover theory. Used to validate the fast deciders.

use std::collections::BTreeSet;

use crate::boolfn::{apply_map, canonical, compact, ess, CanonicalForm, TruthTable, VarMap};
use crate::error::{Error, Result};

/// Essential-arity cap for the brute-force oracle.
pub const MAX_ORACLE_ARITY: usize = 6;

/// All set partitions of `0..n` as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(pos: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == rgs.len() {
            out.push(rgs.clone());
            return;
        }
        for b in 0..=max + 1 {
            rgs[pos] = b;
            rec(pos + 1, max.max(b), rgs, out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(1, 0, &mut rgs, &mut out);
    }
    out
}

fn blocks(rgs: &[usize]) -> usize {
    rgs.iter().max().map_or(0, |m| m + 1)
}

/// Classes of the minors `g < f`: every non-injective merge of the
/// essential variables of `f`.
fn strict_minors(f: &TruthTable) -> Result<BTreeSet<CanonicalForm>> {
    let fc = compact(f);
    let k = fc.arity();
    let mut out = BTreeSet::new();
    for rgs in set_partitions(k) {
        let m = blocks(&rgs);
        if m == k {
            continue;
        }
        let g = apply_map(&fc, &VarMap::new(rgs, m)?)?;
        out.insert(canonical(&g)?);
    }
    Ok(out)
}

fn check(f: &TruthTable) -> Result<()> {
    let e = ess(f);
    if e < 2 {
        return Err(Error::GapUndefined { ess: e });
    }
    if e > MAX_ORACLE_ARITY {
        return Err(Error::CanonicalCap {
            ess: e,
            cap: MAX_ORACLE_ARITY,
        });
    }
    Ok(())
}

/// The maximal classes among the strict minors of `f`.
pub fn brute_force_lower_covers(f: &TruthTable) -> Result<BTreeSet<CanonicalForm>> {
    check(f)?;
    let below = strict_minors(f)?;
    let mut dominated = BTreeSet::new();
    for g in &below {
        dominated.extend(strict_minors(g.table())?);
    }
    Ok(below.difference(&dominated).cloned().collect())
}

/// True iff the strict minors of `f` have exactly one maximal class.
pub fn brute_force_ji(f: &TruthTable) -> Result<bool> {
    Ok(brute_force_lower_covers(f)?.len() == 1)
}
