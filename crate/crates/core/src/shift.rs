//! Full-shift combinatorics over a finite alphabet: words, cylinder and
//! clopen sets, their product-measure weights, the label group at finite
//! resolution, and the sequences used to sample orbits.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{input, GapError, Result};
use crate::rational::{self, Rational};

/// Refuse to materialise label sets larger than this.
pub const MAX_LABELS: usize = 1 << 24;

/// Finite alphabet with exact single-site weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Alphabet {
    letters: Vec<Rational>,
    weights: Vec<Rational>,
}

impl Alphabet {
    pub fn new(letters: Vec<Rational>, weights: Vec<Rational>) -> Result<Self> {
        if letters.is_empty() {
            return input("alphabet must have at least one letter");
        }
        if letters.len() != weights.len() {
            return input(format!(
                "{} letters but {} weights",
                letters.len(),
                weights.len()
            ));
        }
        if letters.windows(2).any(|w| w[0] >= w[1]) {
            return input("letters must be distinct and sorted ascending");
        }
        if let Some(i) = weights.iter().position(|w| w <= &Rational::zero()) {
            return input(format!("weight {i} must be positive"));
        }
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return input(format!("weights must sum to 1 (got {})", rational::fmt(&total)));
        }
        Ok(Alphabet { letters, weights })
    }

    /// Letters `0, 1, …, m−1` with weight `1/m` each.
    pub fn uniform(m: usize) -> Result<Self> {
        if m == 0 {
            return input("alphabet must have at least one letter");
        }
        let letters = (0..m as i64).map(rational::int).collect();
        let weights = vec![rational::ratio(1, m as i64); m];
        Alphabet::new(letters, weights)
    }

    /// Two letters `{0, 1}` with weights `(beta, 1 − beta)`.
    pub fn bernoulli(beta: Rational) -> Result<Self> {
        let rest = Rational::one() - &beta;
        Alphabet::new(vec![rational::int(0), rational::int(1)], vec![beta, rest])
    }

    /// Parses `{ "letters": [..], "weights": ["1/3", "2/3"] }`.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| GapError::Input(e.to_string()))?;
        crate::config::parse_alphabet(&value, "alphabet").map_err(|errs| {
            GapError::Input(errs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "))
        })
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Rational] {
        &self.letters
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn letter(&self, symbol: usize) -> &Rational {
        &self.letters[symbol]
    }

    pub fn is_uniform(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] == w[1])
    }
}

/// Finite word over symbol indices, anchored at a position of ℤ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub symbols: Vec<usize>,
    pub anchor: i64,
}

impl Word {
    pub fn new(symbols: Vec<usize>, anchor: i64) -> Self {
        Word { symbols, anchor }
    }

    /// Parses `"0110"` (one digit per symbol) or `"0,12,3"` (comma separated).
    pub fn parse(s: &str, anchor: i64) -> Result<Self> {
        let s = s.trim();
        let symbols = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| GapError::Input(format!("bad word `{s}`")))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| GapError::Input(format!("bad word `{s}`")))?
        };
        Ok(Word { symbols, anchor })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// One past the last constrained position.
    pub fn end(&self) -> i64 {
        self.anchor + self.symbols.len() as i64
    }

    pub fn validate(&self, m: usize) -> Result<()> {
        match self.symbols.iter().find(|&&s| s >= m) {
            Some(s) => input(format!("symbol {s} out of range for alphabet of size {m}")),
            None => Ok(()),
        }
    }

    /// All `m^len` words of the given length, in lexicographic order.
    pub fn all(m: usize, len: usize, anchor: i64) -> impl Iterator<Item = Word> {
        let total = m.checked_pow(len as u32).expect("word space overflows usize");
        (0..total).map(move |idx| Word::new(decode_index(idx, m, len), anchor))
    }

    /// Index of the word in the base-`m` lexicographic enumeration.
    pub fn index(&self, m: usize) -> usize {
        self.symbols.iter().fold(0, |acc, &s| acc * m + s)
    }

    /// Lexicographically smallest cyclic rotation.
    pub fn min_rotation(&self) -> Word {
        let n = self.symbols.len();
        let best = (0..n)
            .map(|r| {
                let mut v = self.symbols[r..].to_vec();
                v.extend_from_slice(&self.symbols[..r]);
                v
            })
            .min()
            .unwrap_or_default();
        Word::new(best, self.anchor)
    }

    /// True if the word is not a proper power `u^k`, `k ≥ 2`.
    pub fn is_primitive(&self) -> bool {
        let n = self.symbols.len();
        (1..n)
            .filter(|d| n % d == 0)
            .all(|d| (0..n).any(|i| self.symbols[i] != self.symbols[i % d]))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.iter().all(|&s| s < 10) {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

pub(crate) fn decode_index(mut idx: usize, m: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % m;
        idx /= m;
    }
    out
}

/// Finite union of cylinder sets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClopenSet {
    pub cylinders: Vec<Word>,
}

impl ClopenSet {
    pub fn new(cylinders: Vec<Word>) -> Self {
        ClopenSet { cylinders }
    }

    /// Smallest window `[start, end)` containing every cylinder, if any.
    pub fn window(&self) -> Option<(i64, i64)> {
        let start = self.cylinders.iter().map(|w| w.anchor).min()?;
        let end = self.cylinders.iter().map(Word::end).max()?;
        Some((start, end))
    }

    /// Expands every cylinder over the window `[start, start + len)` and
    /// removes duplicates. Each cylinder must lie inside the window.
    pub fn refine_to(&self, start: i64, len: usize, m: usize) -> Result<ClopenSet> {
        let end = start + len as i64;
        let mut out = BTreeSet::new();
        for cyl in &self.cylinders {
            cyl.validate(m)?;
            if cyl.anchor < start || cyl.end() > end {
                return input(format!(
                    "cylinder {cyl}@{} does not fit in window [{start}, {end})",
                    cyl.anchor
                ));
            }
            let before = (cyl.anchor - start) as usize;
            let after = (end - cyl.end()) as usize;
            let free = before + after;
            let combos = m.checked_pow(free as u32).expect("refinement overflows usize");
            for idx in 0..combos {
                let fill = decode_index(idx, m, free);
                let mut symbols = Vec::with_capacity(len);
                symbols.extend_from_slice(&fill[..before]);
                symbols.extend_from_slice(&cyl.symbols);
                symbols.extend_from_slice(&fill[before..]);
                out.insert(symbols);
            }
        }
        Ok(ClopenSet::new(out.into_iter().map(|s| Word::new(s, start)).collect()))
    }
}

/// Labels of the gap-labelling group at a finite resolution, restricted to (0, 1).
#[derive(Debug, Clone, PartialEq)]
pub struct LabelSet {
    pub labels: Vec<Rational>,
    pub window_bound: usize,
}

impl LabelSet {
    pub fn new(mut labels: Vec<Rational>, window_bound: usize) -> Self {
        labels.retain(|l| l > &Rational::zero() && l < &Rational::one());
        labels.sort();
        labels.dedup();
        LabelSet { labels, window_bound }
    }

    /// `{ j/m^r : 1 ≤ j ≤ m^r − 1 }`.
    pub fn dyadic_like(m: usize, r: usize) -> Self {
        let den = (m as i64).pow(r as u32);
        LabelSet::new((1..den).map(|j| rational::ratio(j, den)).collect(), r)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, l: &Rational) -> bool {
        self.labels.binary_search(l).is_ok()
    }

    /// Label closest to `x` together with its distance.
    pub fn nearest(&self, x: f64) -> Option<(&Rational, f64)> {
        self.labels
            .iter()
            .map(|l| (l, (rational::to_f64(l) - x).abs()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }
}

/// Product-measure weight of a cylinder. The anchor is irrelevant.
pub fn cylinder_measure(word: &Word, a: &Alphabet) -> Result<Rational> {
    word.validate(a.size())?;
    Ok(word.symbols.iter().map(|&s| a.weights[s].clone()).product())
}

/// Refines all cylinders to their common window and removes duplicates.
pub fn canonicalize_clopen(c: &ClopenSet, a: &Alphabet) -> Result<ClopenSet> {
    match c.window() {
        None => Ok(ClopenSet::default()),
        Some((start, end)) => c.refine_to(start, (end - start) as usize, a.size()),
    }
}

pub fn clopen_measure(c: &ClopenSet, a: &Alphabet) -> Result<Rational> {
    let canon = canonicalize_clopen(c, a)?;
    canon
        .cylinders
        .iter()
        .map(|w| cylinder_measure(w, a))
        .sum()
}

/// Elements of the group generated by weight monomials of degree at most
/// `window_bound` that lie strictly between 0 and 1.
///
/// With `D` the common denominator of the weights and `g` the gcd of the
/// numerators of all degree-`R` monomials over `D^R`, this is
/// `{ k·g/D^R : 0 < k·g/D^R < 1 }`.
pub fn enumerate_labels(a: &Alphabet, window_bound: usize) -> Result<LabelSet> {
    let den = a
        .weights
        .iter()
        .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let nums: Vec<BigInt> = a
        .weights
        .iter()
        .map(|w| (w * Rational::from_integer(den.clone())).to_integer())
        .collect();
    // gcd over all monomials of exact degree r satisfies g_r = gcd_i(n_i · g_{r−1}).
    let mut g = BigInt::one();
    for _ in 0..window_bound {
        g = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(&(n * &g)));
    }
    let scale = num_traits::pow(den, window_bound);
    let steps = &scale / &g;
    let count: usize = num_traits::ToPrimitive::to_usize(&steps)
        .filter(|&c| c <= MAX_LABELS + 1)
        .ok_or_else(|| GapError::Input(format!("label set at R={window_bound} is too large")))?;
    let labels = (1..count)
        .map(|k| Rational::new(BigInt::from(k) * &g, scale.clone()))
        .collect();
    Ok(LabelSet::new(labels, window_bound))
}

#[derive(Debug, Clone, PartialEq)]
enum SourceKind {
    Periodic(Vec<usize>),
    Random {
        seed: u64,
        m: usize,
        /// `floor(cumulative weight · 2^64)` for all but the last letter.
        thresholds: Vec<u128>,
    },
}

/// Two-sided symbol sequence `n ↦ ω_n`, evaluable lazily at any index.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSource {
    kind: SourceKind,
    offset: i64,
}

/// Periodic extension of a nonempty word; position `n` reads
/// `word[(n − anchor) mod |word|]`.
pub fn periodic_sequence(word: &Word) -> Result<SequenceSource> {
    if word.is_empty() {
        return input("periodic sequence needs a nonempty word");
    }
    Ok(SequenceSource {
        kind: SourceKind::Periodic(word.symbols.clone()),
        offset: -word.anchor,
    })
}

/// Seeded i.i.d. sequence with letter probabilities equal to the weights.
pub fn random_sequence(a: &Alphabet, seed: u64) -> SequenceSource {
    let two64 = Rational::from_integer(BigInt::one() << 64);
    let mut cum = Rational::zero();
    let mut thresholds = Vec::with_capacity(a.size().saturating_sub(1));
    for w in &a.weights[..a.size() - 1] {
        cum += w;
        let t = (&cum * &two64).floor().to_integer();
        thresholds.push(num_traits::ToPrimitive::to_u128(&t).expect("threshold fits in u128"));
    }
    SequenceSource {
        kind: SourceKind::Random { seed, m: a.size(), thresholds },
        offset: 0,
    }
}

impl SequenceSource {
    /// Symbol at position `n`.
    pub fn symbol(&self, n: i64) -> usize {
        self.symbols(n, 1)[0]
    }

    /// Symbols at positions `start .. start + len`.
    pub fn symbols(&self, start: i64, len: usize) -> Vec<usize> {
        let start = start + self.offset;
        match &self.kind {
            SourceKind::Periodic(word) => {
                let p = word.len() as i64;
                (0..len as i64).map(|i| word[(start + i).rem_euclid(p) as usize]).collect()
            }
            SourceKind::Random { seed, thresholds, .. } => {
                let mut out = Vec::with_capacity(len);
                let end = start + len as i64;
                // negative indices live on stream 1 at position −n−1, read backwards
                if start < 0 {
                    let neg_end = end.min(0);
                    let first = (-neg_end) as u64; // position of index neg_end − 1
                    let count = (neg_end - start) as usize;
                    let mut raw = draw(*seed, 1, first, count);
                    raw.reverse();
                    out.extend(raw.into_iter().map(|u| classify(u, thresholds)));
                }
                if end > 0 {
                    let pos_start = start.max(0) as u64;
                    let count = (end - start.max(0)) as usize;
                    out.extend(draw(*seed, 0, pos_start, count).into_iter().map(|u| classify(u, thresholds)));
                }
                out
            }
        }
    }

    /// The shifted sequence `(Tᵏω)_n = ω_{n+k}`.
    pub fn shifted(&self, k: i64) -> SequenceSource {
        SequenceSource { kind: self.kind.clone(), offset: self.offset + k }
    }

    pub fn max_symbol(&self) -> usize {
        match &self.kind {
            SourceKind::Periodic(w) => w.iter().copied().max().unwrap_or(0),
            SourceKind::Random { m, .. } => m - 1,
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self.kind, SourceKind::Random { .. })
    }

    pub fn period(&self) -> Option<usize> {
        match &self.kind {
            SourceKind::Periodic(w) => Some(w.len()),
            SourceKind::Random { .. } => None,
        }
    }

    pub fn letter_value<'a>(&self, a: &'a Alphabet, n: i64) -> &'a Rational {
        a.letter(self.symbol(n))
    }
}

fn draw(seed: u64, stream: u64, first: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(2 * first as u128);
    (0..count).map(|_| rng.next_u64()).collect()
}

fn classify(u: u64, thresholds: &[u128]) -> usize {
    let u = u as u128;
    thresholds.iter().position(|&t| u < t).unwrap_or(thresholds.len())
}
