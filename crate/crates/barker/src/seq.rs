//! ±1 sequences and their aperiodic autocorrelation.
//!
//! A sequence `a_1, ..., a_n` with every `a_j ∈ {−1, +1}` is stored 0-based but
//! reported 1-based everywhere (errors, witnesses, reports), matching the usual
//! radar/coding convention. A *Barker sequence* is one whose aperiodic
//! autocorrelation `c_k = Σ_{j=1}^{n−k} a_j a_{j+k}` satisfies `|c_k| ≤ 1` for
//! every lag `k ≥ 1`.
//!
//! Besides the autocorrelation itself this module carries the small arithmetic
//! identities that make exhaustive verification cheap: the lag-parity product
//! identity, the mod-4 fold `c_k + c_{n−k} ≡ n (mod 4)`, and the structural
//! facts specific to odd-length Barker sequences (zero odd lags, constant even
//! lags, skew symmetry, and two index identities used by the nonexistence
//! certificates).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeqError {
    #[error("empty sequence input")]
    EmptyInput,
    #[error("invalid character {0:?} in sequence text")]
    InvalidCharacter(char),
    #[error("entry {0} is not -1 or 1")]
    InvalidEntry(i64),
    #[error("sequence text mixes formats (want signs, bits, or a comma-separated list)")]
    MixedFormats,
    #[error("length {0} is even; this identity needs an odd length")]
    EvenLength(usize),
    #[error("length {n} is too short (need n >= {min})")]
    TooShort { n: usize, min: usize },
    #[error("lag {k} out of range for length {n}")]
    LagOutOfRange { k: usize, n: usize },
    #[error("sequence is not Barker: |c_{k}| = {magnitude} > 1")]
    NotBarker { k: usize, magnitude: i64 },
}

/// A finite ±1 sequence of length `n ≥ 1`.
///
/// Ordering is lexicographic with `−1 < +1`, which is what canonicalization
/// minimizes over.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LittlewoodSeq {
    entries: Vec<i8>,
}

impl LittlewoodSeq {
    pub fn from_entries(entries: Vec<i8>) -> Result<Self, SeqError> {
        if entries.is_empty() {
            return Err(SeqError::EmptyInput);
        }
        for &e in &entries {
            if e != 1 && e != -1 {
                return Err(SeqError::InvalidEntry(i64::from(e)));
            }
        }
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// 1-based accessor: `a(1)` is the first entry. Panics out of range.
    pub fn a(&self, j: usize) -> i64 {
        assert!(j >= 1 && j <= self.entries.len(), "index {j} out of 1..={}", self.entries.len());
        i64::from(self.entries[j - 1])
    }

    pub fn negated(&self) -> Self {
        Self { entries: self.entries.iter().map(|&e| -e).collect() }
    }

    pub fn reversed(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Self { entries }
    }

    /// `a_j ↦ (−1)^j a_j` (1-based j), the third generator of the symmetry group.
    pub fn alternated(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &e)| if i % 2 == 0 { -e } else { e })
            .collect();
        Self { entries }
    }

    /// Lexicographically least member of the order-8 orbit under negation,
    /// reversal, and alternating negation. All three operations preserve the
    /// sidelobe magnitudes, so the Barker property is orbit-constant.
    pub fn canonicalize(&self) -> Self {
        self.orbit().into_iter().min().expect("orbit is nonempty")
    }

    /// All eight symmetry images (with repeats when the stabilizer is nontrivial).
    pub fn orbit(&self) -> Vec<Self> {
        let mut out = Vec::with_capacity(8);
        for rev in [false, true] {
            let base = if rev { self.reversed() } else { self.clone() };
            for alt in [false, true] {
                let mid = if alt { base.alternated() } else { base.clone() };
                out.push(mid.negated());
                out.push(mid);
            }
        }
        out
    }

    /// Aperiodic autocorrelation `c_0, ..., c_{n−1}` by the direct double loop.
    pub fn autocorrelation(&self) -> AutocorrProfile {
        let n = self.entries.len();
        let mut values = Vec::with_capacity(n);
        for k in 0..n {
            let mut c: i64 = 0;
            for j in 0..n - k {
                c += i64::from(self.entries[j]) * i64::from(self.entries[j + k]);
            }
            values.push(c);
        }
        debug_assert_eq!(values[0], n as i64);
        AutocorrProfile { values }
    }

    /// `|c_k| ≤ 1` for every `k ≥ 1`.
    pub fn is_barker(&self) -> bool {
        self.autocorrelation().peak_sidelobe() <= 1
    }

    /// Product identity at lag `k`: `Π_{j=1}^{n−k} a_j a_{j+k} = (−1)^{(n−k−c_k)/2}`.
    ///
    /// Holds for every ±1 sequence; the checker recomputes both sides.
    pub fn lag_parity_identity(&self, k: usize) -> Result<bool, SeqError> {
        let n = self.entries.len();
        if k >= n {
            return Err(SeqError::LagOutOfRange { k, n });
        }
        let mut product: i64 = 1;
        for j in 0..n - k {
            product *= i64::from(self.entries[j]) * i64::from(self.entries[j + k]);
        }
        let c_k = self.autocorrelation().c(k);
        let exponent = (n - k) as i64 - c_k;
        debug_assert_eq!(exponent.rem_euclid(2), 0, "c_k and n-k always share parity");
        let rhs = if (exponent / 2).rem_euclid(2) == 0 { 1 } else { -1 };
        Ok(product == rhs)
    }

    /// Fold identity `c_k + c_{n−k} ≡ n (mod 4)` for `k = 1, ..., n−1`.
    ///
    /// Holds for every ±1 sequence of length `n ≥ 2`.
    pub fn fold_mod4_identity(&self) -> Result<bool, SeqError> {
        let n = self.entries.len();
        if n < 2 {
            return Err(SeqError::TooShort { n, min: 2 });
        }
        let profile = self.autocorrelation();
        let ok = (1..n).all(|k| (profile.c(k) + profile.c(n - k)).rem_euclid(4) == (n as i64).rem_euclid(4));
        Ok(ok)
    }

    /// Structure of an odd-length Barker sequence, `n = 2m+1`: every odd lag
    /// is 0 (≡ 0 mod 4) and every even lag equals `(−1)^m`.
    pub fn odd_length_structure(&self) -> Result<OddStructureReport, SeqError> {
        let n = self.entries.len();
        if n % 2 == 0 {
            return Err(SeqError::EvenLength(n));
        }
        let profile = self.autocorrelation();
        if let Some(k) = (1..n).find(|&k| profile.c(k).abs() > 1) {
            return Err(SeqError::NotBarker { k, magnitude: profile.c(k).abs() });
        }
        let m = (n - 1) / 2;
        let expected_even_value = if m % 2 == 0 { 1 } else { -1 };
        let mut odd_lag_violations = Vec::new();
        let mut even_lag_violations = Vec::new();
        for k in 1..n {
            if k % 2 == 1 {
                if profile.c(k).rem_euclid(4) != 0 {
                    odd_lag_violations.push(k);
                }
            } else if profile.c(k) != expected_even_value {
                even_lag_violations.push(k);
            }
        }
        Ok(OddStructureReport { m, expected_even_value, odd_lag_violations, even_lag_violations })
    }

    /// Skew symmetry `a_{k+1} a_{n−k} = (−1)^{m+k}` for `k = 0, ..., n−1`
    /// (`n = 2m+1`). Every odd-length Barker sequence satisfies it; arbitrary
    /// sequences are simply reported true/false.
    pub fn is_skew_symmetric(&self) -> Result<bool, SeqError> {
        let n = self.entries.len();
        if n % 2 == 0 {
            return Err(SeqError::EvenLength(n));
        }
        let m = (n - 1) / 2;
        let ok = (0..n).all(|k| {
            let sign = if (m + k) % 2 == 0 { 1 } else { -1 };
            self.a(k + 1) * self.a(n - k) == sign
        });
        Ok(ok)
    }

    /// Alternating half-sum identity for odd `n = 2m+1`:
    /// `(1 + (−1)^{k+1})/2 = Σ_{i=1}^{k} a_i a_{2k+2−i} (−1)^{i+1}` for `k = 0, ..., m−1`.
    ///
    /// Conditional on the sequence being Barker; on other input this just
    /// evaluates both sides.
    pub fn alternating_sum_identity(&self) -> Result<bool, SeqError> {
        let n = self.entries.len();
        if n % 2 == 0 {
            return Err(SeqError::EvenLength(n));
        }
        let m = (n - 1) / 2;
        for k in 0..m {
            let lhs = if (k + 1) % 2 == 0 { 1 } else { 0 };
            let mut rhs = 0i64;
            for i in 1..=k {
                let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
                rhs += self.a(i) * self.a(2 * k + 2 - i) * sign;
            }
            if rhs != lhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Index-doubling identity for odd `n = 2m+1`:
    /// `a_k a_{k+1} = a_{2k} a_{2k+1}` for `k = 1, ..., m−1`.
    ///
    /// Conditional on the sequence being Barker; it is what forces the leading
    /// run of an odd-length Barker sequence to have odd length.
    pub fn index_doubling_identity(&self) -> Result<bool, SeqError> {
        let n = self.entries.len();
        if n % 2 == 0 {
            return Err(SeqError::EvenLength(n));
        }
        let m = (n - 1) / 2;
        for k in 1..m {
            if self.a(k) * self.a(k + 1) != self.a(2 * k) * self.a(2 * k + 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Merit factor `n² / (2 Σ_{k≥1} c_k²)` as an exact rational.
    ///
    /// The denominator can never vanish for `n ≥ 2` because
    /// `c_{n−1} = a_1 a_n = ±1`.
    pub fn merit_factor(&self) -> Result<BigRational, SeqError> {
        let n = self.entries.len();
        if n < 2 {
            return Err(SeqError::TooShort { n, min: 2 });
        }
        let profile = self.autocorrelation();
        let energy: i64 = profile.sidelobes().iter().map(|&c| c * c).sum();
        assert!(energy > 0, "c_{{n-1}} = a_1 a_n is never zero");
        Ok(BigRational::new(BigInt::from(n as i64 * n as i64), BigInt::from(2 * energy)))
    }
}

impl fmt::Display for LittlewoodSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &e in &self.entries {
            f.write_str(if e == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for LittlewoodSeq {
    type Err = SeqError;

    /// Accepts three formats (whitespace ignored):
    /// sign strings `"++-"`, bit strings `"110"` (`1 ↦ +1`, `0 ↦ −1`),
    /// and comma-separated entries `"1,1,-1"`.
    fn from_str(text: &str) -> Result<Self, SeqError> {
        let stripped: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if stripped.is_empty() {
            return Err(SeqError::EmptyInput);
        }
        if stripped.chars().all(|c| c == '+' || c == '-') {
            let entries = stripped.chars().map(|c| if c == '+' { 1 } else { -1 }).collect();
            return Self::from_entries(entries);
        }
        if stripped.chars().all(|c| c == '0' || c == '1') {
            let entries = stripped.chars().map(|c| if c == '1' { 1 } else { -1 }).collect();
            return Self::from_entries(entries);
        }
        if let Some(bad) = stripped.chars().find(|c| !matches!(c, '+' | '-' | ',' | '0'..='9')) {
            return Err(SeqError::InvalidCharacter(bad));
        }
        let mut entries = Vec::new();
        for token in stripped.split(',') {
            let value: i64 = token.parse().map_err(|_| SeqError::MixedFormats)?;
            if value != 1 && value != -1 {
                return Err(SeqError::InvalidEntry(value));
            }
            entries.push(value as i8);
        }
        Self::from_entries(entries)
    }
}

impl Serialize for LittlewoodSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LittlewoodSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// Exact autocorrelation values `c_0, ..., c_{n−1}`; `c_0 = n` always.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutocorrProfile {
    values: Vec<i64>,
}

impl AutocorrProfile {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn c(&self, k: usize) -> i64 {
        self.values[k]
    }

    /// Lags `1..n`; empty for `n = 1`.
    pub fn sidelobes(&self) -> &[i64] {
        &self.values[1..]
    }

    /// `max_{k≥1} |c_k|`, or 0 when there are no sidelobes.
    pub fn peak_sidelobe(&self) -> i64 {
        self.sidelobes().iter().map(|&c| c.abs()).max().unwrap_or(0)
    }

    /// Rows `k,c_k` under a `k,c_k` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,c_k\n");
        for (k, c) in self.values.iter().enumerate() {
            out.push_str(&format!("{k},{c}\n"));
        }
        out
    }
}

/// Outcome of [`LittlewoodSeq::odd_length_structure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddStructureReport {
    pub m: usize,
    /// `(−1)^m`, the forced value of every even lag.
    pub expected_even_value: i64,
    pub odd_lag_violations: Vec<usize>,
    pub even_lag_violations: Vec<usize>,
}

impl OddStructureReport {
    pub fn passed(&self) -> bool {
        self.odd_lag_violations.is_empty() && self.even_lag_violations.is_empty()
    }
}
