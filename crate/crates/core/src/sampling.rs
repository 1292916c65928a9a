//! Locally constant sampling functions on the full shift.
//!
//! A function with window `[s, s + w)` is stored as a table of `m^w` exact
//! values indexed by the base-`m` encoding of `ω_s … ω_{s+w−1}`. Float copies
//! of the table are kept for the eigenvalue routines.

use num_traits::{Signed, Zero};

use crate::error::{input, GapError, Result};
use crate::rational::{self, Rational};
use crate::shift::{decode_index, Alphabet, SequenceSource, Word};

#[derive(Debug, Clone, PartialEq)]
pub struct SamplingFunction {
    window_start: i64,
    window_length: usize,
    m: usize,
    table: Vec<Rational>,
    values: Vec<f64>,
}

impl SamplingFunction {
    /// Builds a function from its table listed in lexicographic word order.
    pub fn from_values(window_start: i64, window_length: usize, m: usize, table: Vec<Rational>) -> Result<Self> {
        if window_length == 0 {
            return input("window length must be positive");
        }
        if m == 0 {
            return input("alphabet size must be positive");
        }
        let expected = m
            .checked_pow(window_length as u32)
            .ok_or_else(|| GapError::Input("window too long".into()))?;
        if table.len() != expected {
            return input(format!("table has {} entries, expected m^w = {expected}", table.len()));
        }
        let values = table.iter().map(rational::to_f64).collect();
        Ok(SamplingFunction { window_start, window_length, m, table, values })
    }

    /// The anderson potential `ω ↦ ω₀` (letter value at the origin).
    pub fn anderson(a: &Alphabet) -> Self {
        SamplingFunction::from_values(0, 1, a.size(), a.letters().to_vec()).expect("valid table")
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        SamplingFunction::from_values(0, 1, m, vec![c; m]).expect("valid table")
    }

    pub fn window_start(&self) -> i64 {
        self.window_start
    }

    pub fn window_length(&self) -> usize {
        self.window_length
    }

    pub fn alphabet_size(&self) -> usize {
        self.m
    }

    pub fn table(&self) -> &[Rational] {
        &self.table
    }

    /// Value on the cylinder given by `word` (symbols over the window).
    pub fn value_of(&self, word: &Word) -> &Rational {
        &self.table[word.index(self.m)]
    }

    /// Iterates `(word, value)` over the whole table.
    pub fn entries(&self) -> impl Iterator<Item = (Word, &Rational)> + '_ {
        self.table
            .iter()
            .enumerate()
            .map(|(i, v)| (Word::new(decode_index(i, self.m, self.window_length), self.window_start), v))
    }

    pub fn eval_exact(&self, s: &SequenceSource, n: i64) -> &Rational {
        let idx = self.index_at(s, n);
        &self.table[idx]
    }

    /// Values `f(Tⁿω)` for `n = start .. start + len`.
    pub fn values_along(&self, s: &SequenceSource, start: i64, len: usize) -> Vec<f64> {
        if len == 0 {
            return Vec::new();
        }
        let w = self.window_length;
        let symbols = s.symbols(start + self.window_start, len + w - 1);
        let modulus = self.table.len();
        let mut idx = symbols[..w - 1].iter().fold(0usize, |acc, &x| acc * self.m + x);
        let mut out = Vec::with_capacity(len);
        for &sym in &symbols[w - 1..] {
            idx = (idx * self.m + sym) % modulus;
            out.push(self.values[idx]);
        }
        out
    }

    fn index_at(&self, s: &SequenceSource, n: i64) -> usize {
        s.symbols(n + self.window_start, self.window_length)
            .iter()
            .fold(0, |acc, &x| acc * self.m + x)
    }

    /// Distinct table values, ascending.
    pub fn distinct_values(&self) -> Vec<Rational> {
        let mut v = self.table.clone();
        v.sort();
        v.dedup();
        v
    }

    /// Window of length `w` and `m^w` distinct values.
    pub fn separates_all_words(&self) -> bool {
        self.distinct_values().len() == self.table.len()
    }

    pub fn sup_norm(&self) -> Rational {
        self.table.iter().map(|v| v.abs()).max().unwrap_or_else(Rational::zero)
    }

    /// Re-expresses the function on a larger window `[start, start + len)`.
    pub fn refine(&self, start: i64, len: usize) -> Result<SamplingFunction> {
        let end = start + len as i64;
        if start > self.window_start || end < self.window_start + self.window_length as i64 {
            return input("refined window must contain the original window");
        }
        let offset = (self.window_start - start) as usize;
        let total = self
            .m
            .checked_pow(len as u32)
            .ok_or_else(|| GapError::Input("window too long".into()))?;
        let table = (0..total)
            .map(|i| {
                let word = decode_index(i, self.m, len);
                let inner = word[offset..offset + self.window_length].iter().fold(0, |acc, &x| acc * self.m + x);
                self.table[inner].clone()
            })
            .collect();
        SamplingFunction::from_values(start, len, self.m, table)
    }

    /// Exact `‖f − g‖∞` over the union of both windows.
    pub fn sup_distance(&self, other: &SamplingFunction) -> Result<Rational> {
        if self.m != other.m {
            return input("functions are defined over different alphabets");
        }
        let start = self.window_start.min(other.window_start);
        let end = (self.window_start + self.window_length as i64).max(other.window_start + other.window_length as i64);
        let len = (end - start) as usize;
        let a = self.refine(start, len)?;
        let b = other.refine(start, len)?;
        Ok(a.table
            .iter()
            .zip(&b.table)
            .map(|(x, y)| (x - y).abs())
            .max()
            .unwrap_or_else(Rational::zero))
    }

    /// Pointwise sum with another function over the same alphabet.
    pub fn add(&self, other: &SamplingFunction) -> Result<SamplingFunction> {
        if self.m != other.m {
            return input("functions are defined over different alphabets");
        }
        let start = self.window_start.min(other.window_start);
        let end = (self.window_start + self.window_length as i64).max(other.window_start + other.window_length as i64);
        let len = (end - start) as usize;
        let a = self.refine(start, len)?;
        let b = other.refine(start, len)?;
        let table = a.table.iter().zip(&b.table).map(|(x, y)| x + y).collect();
        SamplingFunction::from_values(start, len, self.m, table)
    }
}

/// Validates a table given as explicit `(word, value)` entries.
pub fn make_locally_constant(
    window_start: i64,
    window_length: usize,
    entries: impl IntoIterator<Item = (Word, Rational)>,
    a: &Alphabet,
) -> Result<SamplingFunction> {
    let m = a.size();
    let size = m
        .checked_pow(window_length as u32)
        .ok_or_else(|| GapError::Input("window too long".into()))?;
    let mut table: Vec<Option<Rational>> = vec![None; size];
    for (word, value) in entries {
        if word.len() != window_length {
            return input(format!("table key `{word}` has length {}, expected {window_length}", word.len()));
        }
        word.validate(m)?;
        let slot = &mut table[word.index(m)];
        if slot.is_some() {
            return input(format!("duplicate table entry `{word}`"));
        }
        *slot = Some(value);
    }
    let missing: Vec<String> = table
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_none())
        .map(|(i, _)| Word::new(decode_index(i, m, window_length), 0).to_string())
        .collect();
    if !missing.is_empty() {
        return input(format!("table is missing entries for {}", missing.join(", ")));
    }
    SamplingFunction::from_values(window_start, window_length, m, table.into_iter().map(Option::unwrap).collect())
}

pub fn eval_sampling(f: &SamplingFunction, s: &SequenceSource, n: i64) -> f64 {
    f.values[f.index_at(s, n)]
}

/// A quarter of the smallest gap between distinct table values.
pub fn delta_separation(f: &SamplingFunction) -> Result<Rational> {
    let vals = f.distinct_values();
    if vals.len() < 2 {
        return Err(GapError::Undefined("separation of a constant function".into()));
    }
    let min_gap = vals.windows(2).map(|w| &w[1] - &w[0]).min().expect("two values");
    Ok(min_gap / rational::int(4))
}

/// Truncated Cantor potential `ω ↦ Σ_{n=1}^{D} 2ω_n/(2m−1)ⁿ` on window `1..=D`.
pub fn cantor_function(m: usize, depth: usize) -> Result<SamplingFunction> {
    if m < 2 {
        return input("cantor function needs m ≥ 2");
    }
    if depth == 0 {
        return input("cantor function needs depth ≥ 1");
    }
    let base = rational::int(2 * m as i64 - 1);
    let size = m
        .checked_pow(depth as u32)
        .ok_or_else(|| GapError::Input("depth too large".into()))?;
    let weights: Vec<Rational> = (1..=depth)
        .map(|n| rational::int(2) / num_traits::pow(base.clone(), n))
        .collect();
    let table = (0..size)
        .map(|i| {
            decode_index(i, m, depth)
                .iter()
                .zip(&weights)
                .map(|(&d, w)| w * rational::int(d as i64))
                .sum()
        })
        .collect();
    SamplingFunction::from_values(1, depth, m, table)
}

pub fn scale(f: &SamplingFunction, lambda: &Rational) -> SamplingFunction {
    let table = f.table.iter().map(|v| v * lambda).collect();
    SamplingFunction::from_values(f.window_start, f.window_length, f.m, table).expect("same shape")
}

/// Off-diagonal sampling: either a constant or a locally constant function.
#[derive(Debug, Clone, PartialEq)]
pub enum Hopping {
    Constant(Rational),
    Function(SamplingFunction),
}

impl Hopping {
    pub fn schrodinger() -> Self {
        Hopping::Constant(rational::int(1))
    }

    pub fn diagonal() -> Self {
        Hopping::Constant(Rational::zero())
    }

    pub fn values_along(&self, s: &SequenceSource, start: i64, len: usize) -> Vec<f64> {
        match self {
            Hopping::Constant(c) => vec![rational::to_f64(c); len],
            Hopping::Function(f) => f.values_along(s, start, len),
        }
    }

    pub fn min_value(&self) -> Rational {
        match self {
            Hopping::Constant(c) => c.clone(),
            Hopping::Function(f) => f.table.iter().min().cloned().unwrap_or_else(Rational::zero),
        }
    }

    pub fn scaled(&self, lambda: &Rational) -> Hopping {
        match self {
            Hopping::Constant(c) => Hopping::Constant(c * lambda),
            Hopping::Function(f) => Hopping::Function(scale(f, lambda)),
        }
    }

    /// Exact `‖p − p′‖∞`.
    pub fn sup_distance(&self, other: &Hopping) -> Result<Rational> {
        match (self, other) {
            (Hopping::Constant(a), Hopping::Constant(b)) => Ok((a - b).abs()),
            (Hopping::Function(f), Hopping::Function(g)) => f.sup_distance(g),
            (Hopping::Constant(c), Hopping::Function(f)) | (Hopping::Function(f), Hopping::Constant(c)) => {
                Ok(f.table.iter().map(|v| (v - c).abs()).max().unwrap_or_else(Rational::zero))
            }
        }
    }

    pub fn as_constant(&self) -> Option<&Rational> {
        match self {
            Hopping::Constant(c) => Some(c),
            Hopping::Function(_) => None,
        }
    }
}
