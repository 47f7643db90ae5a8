//! Exhaustive catalog of the equivalence classes of small functions, with
//! their lower covers and poset levels.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::boolfn::{canonical, minor_closure, CanonicalForm, TruthTable};
use crate::error::{Error, Result};
use crate::irreducibility::cover_report;

pub const MAX_CATALOG_ARITY: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Rank of the representative among all classes, ordered by essential
    /// arity and then table value.
    pub class_id: usize,
    pub representative: CanonicalForm,
    /// Arity of the representative table (its variables are all essential).
    pub arity: usize,
    pub ess: usize,
    pub gap: Option<usize>,
    pub join_irreducible: bool,
    pub level: Option<usize>,
    pub lower_covers: Vec<usize>,
    /// How many tables of the catalog arity fall in this class.
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub max_arity: usize,
    pub entries: Vec<CatalogEntry>,
}

/// Groups all tables of arity `max_arity` by canonical form, with gap,
/// lower covers and join-irreducibility for each class. Levels are left
/// unset; see [`Catalog::compute_levels`].
pub fn enumerate_functions(max_arity: usize) -> Result<Catalog> {
    if max_arity > MAX_CATALOG_ARITY {
        return Err(Error::ArityCap {
            arity: max_arity,
            cap: MAX_CATALOG_ARITY,
        });
    }
    let total = 1u64 << (1u64 << max_arity);
    let forms: Vec<CanonicalForm> = (0..total)
        .into_par_iter()
        .map(|v| canonical(&TruthTable::from_u64(max_arity, v)?))
        .collect::<Result<_>>()?;
    let mut sizes: BTreeMap<CanonicalForm, u64> = BTreeMap::new();
    for c in forms {
        *sizes.entry(c).or_default() += 1;
    }
    let ids: HashMap<CanonicalForm, usize> = sizes
        .keys()
        .enumerate()
        .map(|(k, c)| (c.clone(), k))
        .collect();
    let classes: Vec<(CanonicalForm, u64)> = sizes.into_iter().collect();
    let entries = classes
        .into_par_iter()
        .enumerate()
        .map(|(class_id, (rep, size))| {
            let ess = rep.ess_arity();
            let (gap, lower_covers) = if ess >= 2 {
                let r = cover_report(rep.table())?;
                let mut covers = r
                    .lower_covers
                    .iter()
                    .map(|c| Ok(ids[&canonical(&c.representative)?]))
                    .collect::<Result<Vec<_>>>()?;
                covers.sort_unstable();
                (Some(r.gap), covers)
            } else {
                (None, Vec::new())
            };
            Ok(CatalogEntry {
                class_id,
                arity: rep.table().arity(),
                ess,
                gap,
                join_irreducible: lower_covers.len() == 1,
                level: None,
                lower_covers,
                size,
                representative: rep,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Catalog { max_arity, entries })
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `id` of the class of `f`, if present.
    pub fn class_of(&self, f: &TruthTable) -> Result<Option<usize>> {
        let c = canonical(f)?;
        Ok(self
            .entries
            .binary_search_by(|e| e.representative.cmp(&c))
            .ok())
    }

    /// Class ids strictly below each class.
    pub fn strict_downsets(&self) -> Result<Vec<Vec<usize>>> {
        self.entries
            .par_iter()
            .map(|e| {
                let mut below = Vec::new();
                for c in minor_closure(e.representative.table())? {
                    if c != e.representative {
                        let id = self
                            .class_of(c.table())?
                            .expect("catalog is closed under minors");
                        below.push(id);
                    }
                }
                below.sort_unstable();
                Ok(below)
            })
            .collect()
    }

    /// Level `n` holds the minimal classes once levels `< n` are removed.
    pub fn compute_levels(&mut self) -> Result<()> {
        let below = self.strict_downsets()?;
        let mut level: Vec<Option<usize>> = vec![None; self.len()];
        let mut current = 0;
        let mut left = self.len();
        while left > 0 {
            let minimal: Vec<usize> = (0..self.len())
                .filter(|&c| {
                    level[c].is_none() && below[c].iter().all(|&d| level[d].is_some())
                })
                .collect();
            for &c in &minimal {
                level[c] = Some(current);
            }
            left -= minimal.len();
            current += 1;
        }
        for (e, l) in self.entries.iter_mut().zip(level) {
            e.level = l;
        }
        Ok(())
    }

    pub fn n_levels(&self) -> usize {
        self.entries
            .iter()
            .filter_map(|e| e.level)
            .max()
            .map_or(0, |m| m + 1)
    }

    pub fn to_tsv(&self) -> String {
        let mut s = format!("# catalog max_arity={}\n", self.max_arity);
        s.push_str("#class_id\trepresentative\tarity\tess\tgap\tjoin_irreducible\tlevel\tlower_covers\tsize\n");
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        for e in &self.entries {
            let covers = if e.lower_covers.is_empty() {
                "-".to_string()
            } else {
                let ids: Vec<String> = e.lower_covers.iter().map(usize::to_string).collect();
                ids.join(",")
            };
            writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                e.class_id,
                e.representative,
                e.arity,
                e.ess,
                opt(e.gap),
                e.join_irreducible,
                opt(e.level),
                covers,
                e.size
            )
            .unwrap();
        }
        s
    }

    pub fn from_tsv(text: &str) -> Result<Catalog> {
        let mut max_arity = None;
        let mut entries = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line_no = k + 1;
            let err = |m: String| Error::Parse {
                line: line_no,
                message: m,
            };
            if let Some(rest) = line.strip_prefix("# catalog max_arity=") {
                max_arity = Some(rest.trim().parse().map_err(|_| err("bad max_arity".into()))?);
                continue;
            }
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 9 {
                return Err(err(format!("expected 9 columns, found {}", cols.len())));
            }
            let num = |s: &str| s.parse::<usize>().map_err(|_| err(format!("`{s}` is not a number")));
            let opt = |s: &str| if s == "-" { Ok(None) } else { num(s).map(Some) };
            let (k_str, hex) = cols[1]
                .split_once(':')
                .ok_or_else(|| err("representative must be `ess:hex`".into()))?;
            let table = TruthTable::from_hex(num(k_str)?, hex).map_err(|e| err(e.to_string()))?;
            let representative = canonical(&table)?;
            if *representative.table() != table {
                return Err(err(format!("`{}` is not a canonical table", cols[1])));
            }
            let lower_covers = if cols[7] == "-" {
                Vec::new()
            } else {
                cols[7].split(',').map(num).collect::<Result<_>>()?
            };
            entries.push(CatalogEntry {
                class_id: num(cols[0])?,
                representative,
                arity: num(cols[2])?,
                ess: num(cols[3])?,
                gap: opt(cols[4])?,
                join_irreducible: cols[5] == "true",
                level: opt(cols[6])?,
                lower_covers,
                size: cols[8].parse().map_err(|_| err("bad size".into()))?,
            });
        }
        Ok(Catalog {
            max_arity: max_arity.ok_or(Error::Parse {
                line: 1,
                message: "missing `# catalog max_arity=` header".into(),
            })?,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=3).map(|n| enumerate_functions(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 4, 12, 80]);
        assert!(enumerate_functions(5).is_err());
    }

    #[test]
    fn level_zero_is_the_four_blocks() {
        let mut c = enumerate_functions(2).unwrap();
        c.compute_levels().unwrap();
        let zero: Vec<String> = c
            .entries
            .iter()
            .filter(|e| e.level == Some(0))
            .map(|e| e.representative.to_string())
            .collect();
        assert_eq!(zero, vec!["0:0", "0:1", "1:1", "1:2"]);
        let total: u64 = c.entries.iter().map(|e| e.size).sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn tsv_round_trip() {
        let mut c = enumerate_functions(3).unwrap();
        c.compute_levels().unwrap();
        let text = c.to_tsv();
        assert_eq!(Catalog::from_tsv(&text).unwrap(), c);
        assert!(Catalog::from_tsv("# catalog max_arity=1\n0\t1:1\t1\n").is_err());
    }
}
