//! Boolean functions as truth tables, the Zhegalkin (Reed–Muller) transform,
//! and the simple-minor quasi-order.
//!
//! `g ≤ f` when `g(a) = f(a ∘ σ)` for some map `σ` between variable index
//! sets. Two functions are equivalent when each is a minor of the other;
//! equivalence classes are represented by [`CanonicalForm`].

mod canon;
mod minor;
mod table;
mod varmap;

pub use canon::{canonical, compact, CanonicalForm, MAX_CANON_ARITY};
pub use minor::{is_minor, is_minor_by_maps, minor_closure};
pub use table::{TruthTable, MAX_ARITY};
pub use varmap::VarMap;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use table::{word_count, LO_MASKS};

/// In-place butterfly Möbius transform over GF(2). It is an involution, so
/// it maps tables to Zhegalkin coefficients and coefficients back to tables.
fn mobius(words: &mut [u64], arity: usize) {
    for (i, &lo) in LO_MASKS.iter().enumerate().take(arity.min(6)) {
        let shift = 1 << i;
        for w in words.iter_mut() {
            *w ^= (*w & lo) << shift;
        }
    }
    for i in 6..arity {
        let stride = 1usize << (i - 6);
        for w in 0..words.len() {
            if w & stride != 0 {
                words[w] ^= words[w ^ stride];
            }
        }
    }
    if arity < 6 {
        words[0] &= (1u64 << (1 << arity)) - 1;
    }
}

/// The Zhegalkin polynomial of `f` as a hypergraph on `f.arity()` vertices.
///
/// The coefficient of monomial `S` is the XOR of `f` over all assignments
/// supported inside `S`.
pub fn zhegalkin(f: &TruthTable) -> Hypergraph {
    let mut words = f.words().to_vec();
    mobius(&mut words, f.arity());
    let mut edges = Vec::new();
    for (w, &word) in words.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            edges.push((w * 64 + b) as u32);
            bits &= bits - 1;
        }
    }
    Hypergraph::from_sorted(f.arity(), edges)
}

/// Evaluates the polynomial whose monomials are the edges of `h`.
pub fn from_polynomial(h: &Hypergraph) -> Result<TruthTable> {
    let n = h.n_vertices();
    if n > MAX_ARITY {
        return Err(Error::ArityCap {
            arity: n,
            cap: MAX_ARITY,
        });
    }
    let mut words = vec![0u64; word_count(n)];
    for &e in h.edges() {
        let e = e as usize;
        words[e >> 6] |= 1 << (e & 63);
    }
    mobius(&mut words, n);
    Ok(TruthTable::from_words(n, words))
}

/// Mask of the variables `f` depends on (bit `i` for variable `i`).
pub fn essential_mask(f: &TruthTable) -> u32 {
    (0..f.arity())
        .filter(|&i| f.flip_var(i) != *f)
        .fold(0, |m, i| m | 1 << i)
}

/// 0-based indices of the essential variables, ascending.
pub fn essential_vars(f: &TruthTable) -> Vec<usize> {
    let m = essential_mask(f);
    (0..f.arity()).filter(|i| m >> i & 1 == 1).collect()
}

pub fn ess(f: &TruthTable) -> usize {
    essential_mask(f).count_ones() as usize
}

/// `g(a) = f(a_{σ(1)}, ..., a_{σ(n)})`, a table of arity `σ.codomain_size()`.
pub fn apply_map(f: &TruthTable, sigma: &VarMap) -> Result<TruthTable> {
    if sigma.domain_size() != f.arity() {
        return Err(Error::SizeMismatch {
            expected: f.arity(),
            found: sigma.domain_size(),
        });
    }
    let m = sigma.codomain_size();
    if m > MAX_ARITY {
        return Err(Error::ArityCap {
            arity: m,
            cap: MAX_ARITY,
        });
    }
    // pull[t]: the source bits that copy target variable t
    let mut pull = vec![0usize; m];
    for (k, &t) in sigma.image().iter().enumerate() {
        pull[t] |= 1 << k;
    }
    let mut g = TruthTable::constant(m, false)?;
    let mut src = vec![0usize; 1 << m];
    for a in 1..(1usize << m) {
        let low = a.trailing_zeros() as usize;
        src[a] = src[a & (a - 1)] | pull[low];
    }
    for (a, &s) in src.iter().enumerate() {
        if f.get(s) {
            g.set(a, true);
        }
    }
    Ok(g)
}

/// `f_{i=j}`: same arity, coordinate `i` overwritten by `a_j`.
pub fn identify(f: &TruthTable, i: usize, j: usize) -> Result<TruthTable> {
    if i == j {
        if i >= f.arity() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: f.arity(),
            });
        }
        return Ok(f.clone());
    }
    apply_map(f, &VarMap::identification(f.arity(), i, j)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(arity: usize, bits: &[u8]) -> TruthTable {
        let b: Vec<bool> = bits.iter().map(|&x| x == 1).collect();
        TruthTable::from_bits(arity, &b).unwrap()
    }

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    // Brute-force Möbius sum: coefficient of S is XOR of f(a) over a ⊆ S.
    fn mobius_oracle(f: &TruthTable) -> Vec<u32> {
        (0..f.len())
            .filter(|&s| {
                (0..f.len())
                    .filter(|&a| a & !s == 0)
                    .fold(false, |acc, a| acc ^ f.get(a))
            })
            .map(|s| s as u32)
            .collect()
    }

    #[test]
    fn zhegalkin_examples() {
        assert_eq!(zhegalkin(&t(2, &[0, 1, 1, 0])), h(2, &[&[0], &[1]]));
        for n in 0..5 {
            let one = TruthTable::constant(n, true).unwrap();
            assert_eq!(zhegalkin(&one), h(n, &[&[]]));
        }
        let and = t(2, &[0, 0, 0, 1]);
        assert_eq!(zhegalkin(&and).edges(), mobius_oracle(&and).as_slice());
        assert_eq!(zhegalkin(&and), h(2, &[&[0, 1]]));
    }

    #[test]
    fn zhegalkin_matches_oracle_on_wide_tables() {
        for seed in 0..4u64 {
            let f = TruthTable::from_fn(8, |a| {
                (a as u64 ^ seed).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 61 & 1 == 1
            })
            .unwrap();
            assert_eq!(zhegalkin(&f).edges(), mobius_oracle(&f).as_slice());
        }
    }

    #[test]
    fn from_polynomial_examples() {
        let maj = from_polynomial(&h(3, &[&[0, 1], &[0, 2], &[1, 2]])).unwrap();
        let by_eval = TruthTable::from_fn(3, |a| {
            let x = |i: usize| a >> i & 1;
            (x(0) * x(1) + x(0) * x(2) + x(1) * x(2)) % 2 == 1
        })
        .unwrap();
        assert_eq!(maj, by_eval);
        // 1 on every input of weight at least 2: plain majority
        assert_eq!(maj, TruthTable::from_fn(3, |a| a.count_ones() >= 2).unwrap());

        let zero = from_polynomial(&h(3, &[])).unwrap();
        assert_eq!(zero, TruthTable::constant(3, false).unwrap());

        let p = from_polynomial(&h(3, &[&[0, 1], &[]])).unwrap();
        assert_eq!(p, TruthTable::from_fn(3, |a| a & 3 != 3).unwrap());
        assert_eq!(
            from_polynomial(&Hypergraph::empty(17).unwrap()),
            Err(Error::ArityCap {
                arity: 17,
                cap: 16
            })
        );
    }

    #[test]
    fn essential_vars_examples() {
        assert!(essential_vars(&TruthTable::constant(3, true).unwrap()).is_empty());
        let p = from_polynomial(&h(3, &[&[0, 1], &[]])).unwrap();
        assert_eq!(essential_vars(&p), vec![0, 1]);
        let maj = from_polynomial(&h(3, &[&[0, 1], &[0, 2], &[1, 2]])).unwrap();
        assert_eq!(essential_vars(&maj), vec![0, 1, 2]);
    }

    #[test]
    fn identify_examples() {
        let xor = t(2, &[0, 1, 1, 0]);
        assert_eq!(
            identify(&xor, 0, 1).unwrap(),
            TruthTable::constant(2, false).unwrap()
        );
        let maj = from_polynomial(&h(3, &[&[0, 1], &[0, 2], &[1, 2]])).unwrap();
        // substitution oracle: overwrite coordinate 0 with coordinate 1
        let want = TruthTable::from_fn(3, |a| maj.get(a & !1 | (a >> 1 & 1))).unwrap();
        assert_eq!(identify(&maj, 0, 1).unwrap(), want);
        assert_eq!(want, TruthTable::var(3, 1).unwrap());
        assert_eq!(identify(&maj, 2, 2).unwrap(), maj);
        assert!(identify(&maj, 0, 3).is_err());
        assert!(identify(&maj, 3, 3).is_err());
    }

    #[test]
    fn apply_map_examples() {
        let maj = from_polynomial(&h(3, &[&[0, 1], &[0, 2], &[1, 2]])).unwrap();
        assert_eq!(apply_map(&maj, &VarMap::identity(3)).unwrap(), maj);
        let and = t(2, &[0, 0, 0, 1]);
        let proj = apply_map(&and, &VarMap::new(vec![0, 0], 1).unwrap()).unwrap();
        assert_eq!(proj, t(1, &[0, 1]));
        let x1 = TruthTable::var(1, 0).unwrap();
        let x2 = apply_map(&x1, &VarMap::new(vec![1], 2).unwrap()).unwrap();
        assert_eq!(x2, TruthTable::var(2, 1).unwrap());
        assert!(apply_map(&and, &VarMap::identity(3)).is_err());
        assert!(apply_map(&and, &VarMap::new(vec![0, 16], 17).unwrap()).is_err());
    }
}
