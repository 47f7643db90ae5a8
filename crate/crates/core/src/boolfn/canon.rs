use std::fmt;

use super::{apply_map, essential_mask, TruthTable, VarMap};
use crate::error::{Error, Result};

/// Largest essential arity canonicalized by permutation search.
pub const MAX_CANON_ARITY: usize = 8;

/// Representative of an equivalence class under the simple-minor order.
///
/// The table has exactly `ess_arity` variables, all essential, and is the
/// smallest (as an unsigned integer) among all permutations of them.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    table: TruthTable,
}

impl CanonicalForm {
    pub fn ess_arity(&self) -> usize {
        self.table.arity()
    }

    pub fn table(&self) -> &TruthTable {
        &self.table
    }

    pub fn into_table(self) -> TruthTable {
        self.table
    }

    pub fn to_hex(&self) -> String {
        self.table.to_hex()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Canon({}, 0x{})", self.ess_arity(), self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ess_arity(), self.to_hex())
    }
}

/// Drops inessential variables, keeping the remaining ones in order.
pub fn compact(f: &TruthTable) -> TruthTable {
    let ess = essential_mask(f);
    let k = ess.count_ones() as usize;
    if k == 0 {
        return TruthTable::constant(0, f.get(0)).expect("arity 0");
    }
    let mut next = 0;
    let image = (0..f.arity())
        .map(|i| {
            if ess >> i & 1 == 1 {
                next += 1;
                next - 1
            } else {
                0
            }
        })
        .collect();
    // inessential variables may be sent anywhere
    let sigma = VarMap::new(image, k).expect("image in range");
    apply_map(f, &sigma).expect("arity within cap")
}

/// Lexicographic minimum over all permutations, walked with adjacent
/// transpositions (Steinhaus–Johnson–Trotter) so each step is one swap.
fn min_over_permutations(table: TruthTable) -> TruthTable {
    let n = table.arity();
    let mut best = table.clone();
    if n < 2 {
        return best;
    }
    let mut cur = table;
    // SJT state: position-indexed elements and directions (-1 left, +1 right)
    let mut perm: Vec<usize> = (0..n).collect();
    let mut dir: Vec<isize> = vec![-1; n];
    loop {
        // largest mobile element
        let mut mobile: Option<usize> = None;
        for p in 0..n {
            let q = p as isize + dir[perm[p]];
            if q >= 0
                && (q as usize) < n
                && perm[q as usize] < perm[p]
                && mobile.is_none_or(|m| perm[p] > perm[m])
            {
                mobile = Some(p);
            }
        }
        let Some(p) = mobile else { break };
        let el = perm[p];
        let q = (p as isize + dir[el]) as usize;
        perm.swap(p, q);
        cur.swap_vars(p, q);
        for d in &mut dir[el + 1..] {
            *d = -*d;
        }
        if cur < best {
            best = cur.clone();
        }
    }
    best
}

pub fn canonical(f: &TruthTable) -> Result<CanonicalForm> {
    let ess = essential_mask(f).count_ones() as usize;
    if ess > MAX_CANON_ARITY {
        return Err(Error::CanonicalCap {
            ess,
            cap: MAX_CANON_ARITY,
        });
    }
    Ok(CanonicalForm {
        table: min_over_permutations(compact(f)),
    })
}
