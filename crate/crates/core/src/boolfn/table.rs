use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest arity a [`TruthTable`] may have.
pub const MAX_ARITY: usize = 16;

/// `LO_MASKS[i]` selects the bit positions of a word where variable `i` is 0.
pub(crate) const LO_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// A Boolean function stored as its full truth table.
///
/// Bit `a` holds `f(a_1, ..., a_n)` where `a = sum a_i * 2^(i-1)`, so variable
/// `x_1` (index 0 in this API) is the least significant bit of the
/// assignment. Tables of arity below 6 occupy the low `2^n` bits of a single
/// word; the unused high bits are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: usize,
    words: Vec<u64>,
}

pub(crate) fn word_count(arity: usize) -> usize {
    if arity <= 6 {
        1
    } else {
        1 << (arity - 6)
    }
}

fn used_mask(arity: usize) -> u64 {
    if arity >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << arity)) - 1
    }
}

impl TruthTable {
    fn check_arity(arity: usize) -> Result<()> {
        if arity > MAX_ARITY {
            return Err(Error::ArityCap {
                arity,
                cap: MAX_ARITY,
            });
        }
        Ok(())
    }

    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        Self::check_arity(arity)?;
        let fill = if value { used_mask(arity) } else { 0 };
        Ok(Self {
            arity,
            words: vec![fill; word_count(arity)],
        })
    }

    /// The projection onto variable `var` (0-based).
    pub fn var(arity: usize, var: usize) -> Result<Self> {
        if var >= arity {
            return Err(Error::IndexOutOfRange {
                index: var,
                size: arity,
            });
        }
        Self::from_fn(arity, |a| a >> var & 1 == 1)
    }

    pub fn from_fn(arity: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut t = Self::constant(arity, false)?;
        for a in 0..t.len() {
            if f(a) {
                t.set(a, true);
            }
        }
        Ok(t)
    }

    pub fn from_bits(arity: usize, bits: &[bool]) -> Result<Self> {
        Self::check_arity(arity)?;
        if bits.len() != 1 << arity {
            return Err(Error::TableLength {
                expected: 1 << arity,
                found: bits.len(),
            });
        }
        Self::from_fn(arity, |a| bits[a])
    }

    /// Builds a table of arity at most 6 from the low `2^arity` bits of `value`.
    pub fn from_u64(arity: usize, value: u64) -> Result<Self> {
        if arity > 6 {
            return Err(Error::ArityCap { arity, cap: 6 });
        }
        if value & !used_mask(arity) != 0 {
            return Err(Error::TableLength {
                expected: 1 << arity,
                found: 64 - value.leading_zeros() as usize,
            });
        }
        Ok(Self {
            arity,
            words: vec![value],
        })
    }

    pub(crate) fn from_words(arity: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(arity));
        debug_assert_eq!(words[0] & !used_mask(arity), 0);
        Self { arity, words }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of assignments, `2^arity`.
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The table as one integer when it fits in 64 bits.
    pub fn as_u64(&self) -> Option<u64> {
        (self.arity <= 6).then(|| self.words[0])
    }

    pub fn get(&self, assignment: usize) -> bool {
        self.words[assignment >> 6] >> (assignment & 63) & 1 == 1
    }

    pub fn set(&mut self, assignment: usize, value: bool) {
        let bit = 1u64 << (assignment & 63);
        if value {
            self.words[assignment >> 6] |= bit;
        } else {
            self.words[assignment >> 6] &= !bit;
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |a| self.get(a))
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_constant(&self) -> bool {
        let m = used_mask(self.arity);
        self.words.iter().all(|&w| w == 0) || self.words.iter().all(|&w| w == m)
    }

    /// Pointwise XOR; both tables must have the same arity.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a ^ b)
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a & b)
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a | b)
    }

    pub fn not(&self) -> Self {
        let m = used_mask(self.arity);
        Self {
            arity: self.arity,
            words: self.words.iter().map(|w| !w & m).collect(),
        }
    }

    fn zip(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::SizeMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(Self {
            arity: self.arity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    /// Exchanges variables `i` and `j` in place.
    pub(crate) fn swap_vars(&mut self, i: usize, j: usize) {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        if i == j {
            return;
        }
        if j < 6 {
            // delta swap inside each word
            let delta = (1usize << j) - (1usize << i);
            let mask = !LO_MASKS[i] & LO_MASKS[j];
            for w in &mut self.words {
                let t = ((*w >> delta) ^ *w) & mask;
                *w ^= t ^ (t << delta);
            }
        } else if i < 6 {
            let shift = 1usize << i;
            let lo = LO_MASKS[i];
            let stride = 1usize << (j - 6);
            for w in 0..self.words.len() {
                if w & stride != 0 {
                    continue;
                }
                let a = self.words[w];
                let b = self.words[w | stride];
                self.words[w] = (a & lo) | ((b & lo) << shift);
                self.words[w | stride] = (b & !lo) | ((a & !lo) >> shift);
            }
        } else {
            let (si, sj) = (1usize << (i - 6), 1usize << (j - 6));
            for w in 0..self.words.len() {
                if w & si != 0 && w & sj == 0 {
                    self.words.swap(w, w ^ si ^ sj);
                }
            }
        }
    }

    /// The table with variable `i` negated.
    pub(crate) fn flip_var(&self, i: usize) -> Self {
        let mut out = self.clone();
        if i < 6 {
            let shift = 1 << i;
            let lo = LO_MASKS[i];
            for w in &mut out.words {
                *w = ((*w & lo) << shift) | ((*w >> shift) & lo);
            }
            out.words[0] &= used_mask(self.arity);
        } else {
            let s = 1usize << (i - 6);
            for w in 0..out.words.len() {
                if w & s == 0 {
                    out.words.swap(w, w | s);
                }
            }
        }
        out
    }

    /// Big-endian hexadecimal with `max(1, 2^n / 4)` digits.
    pub fn to_hex(&self) -> String {
        let digits = (self.len() / 4).max(1);
        let mut s = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let bit = d * 4;
            let nibble = (self.words[bit >> 6] >> (bit & 63)) & 0xF;
            s.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        s
    }

    pub fn from_hex(arity: usize, hex: &str) -> Result<Self> {
        Self::check_arity(arity)?;
        let hex = hex.trim_start_matches("0x");
        let bad = |message: String| Error::Parse { line: 0, message };
        if hex.is_empty() {
            return Err(bad("empty hex table".into()));
        }
        let mut t = Self::constant(arity, false)?;
        let n = t.len();
        for (k, c) in hex.chars().rev().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| bad(format!("`{c}` is not a hex digit")))?;
            for b in 0..4 {
                if nibble >> b & 1 == 1 {
                    let a = k * 4 + b;
                    if a >= n {
                        return Err(bad(format!(
                            "hex value `{hex}` does not fit in {n} table bits"
                        )));
                    }
                    t.set(a, true);
                }
            }
        }
        Ok(t)
    }
}

impl Ord for TruthTable {
    /// Arity first, then the table read as an unsigned integer.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity
            .cmp(&other.arity)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for TruthTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({}, 0x{})", self.arity, self.to_hex())
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "function {} {}", self.arity, self.to_hex())
    }
}
