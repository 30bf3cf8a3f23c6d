//! Exact integer polynomials for the correlation view of a ±1 sequence.
//!
//! A sequence `a_1, ..., a_n` becomes `p(z) = Σ_j a_j z^{n−j}` (leading
//! coefficient `a_1`). Multiplying `p` by its reciprocal
//! `p*(z) = z^{n−1} p(1/z)` palindromizes the autocorrelation: the product has
//! the profile values `c_{n−1}, ..., c_1, c_0, c_1, ..., c_{n−1}` as its
//! coefficients. Coefficients are arbitrary-precision so the power-sum
//! recurrences downstream never clip.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::seq::LittlewoodSeq;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("reciprocal window {window} is smaller than the degree {degree}")]
    WindowTooSmall { degree: usize, window: usize },
    #[error("length {0} is even; the correlation polynomial needs an odd length")]
    EvenLength(usize),
    #[error("sequence is not skew symmetric; structure check needs skew input")]
    SkewViolation,
}

/// Integer polynomial, little-endian coefficients with no trailing zeros.
/// The zero polynomial is the empty coefficient list and has degree `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `p(z) = Σ_j a_j z^{n−j}`: the sequence read as coefficients from the top.
    pub fn from_sequence(seq: &LittlewoodSeq) -> Self {
        let n = seq.len();
        let coeffs = (0..n).map(|i| BigInt::from(seq.a(n - i))).collect();
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the stored list.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Exact schoolbook convolution.
    pub fn multiply(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Reversal within the window `0..=window`: `q_i = p_{window−i}`.
    /// For `window = degree` this is `z^degree · p(1/z)`.
    pub fn reciprocal(&self, window: usize) -> Result<Self, PolyError> {
        if let Some(degree) = self.degree() {
            if degree > window {
                return Err(PolyError::WindowTooSmall { degree, window });
            }
        }
        let coeffs = (0..=window).map(|i| self.coeff(window - i)).collect();
        Ok(Self::from_coeffs(coeffs))
    }

    /// `p(z) ↦ p(−z)`.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self { coeffs }
    }

    pub fn negated(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let show_coeff = !magnitude.is_one() || i == 0;
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    /// Little-endian decimal strings, e.g. `["-1","0","3","0","-1"]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            let value = s
                .parse::<BigInt>()
                .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}")))?;
            coeffs.push(value);
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

/// `p · p*` for odd `n = 2m+1`: degree `4m`, palindromic, central coefficient `n`,
/// constant term `a_1 a_n`.
pub fn autocorrelation_polynomial(seq: &LittlewoodSeq) -> Result<IntPolynomial, PolyError> {
    let n = seq.len();
    if n % 2 == 0 {
        return Err(PolyError::EvenLength(n));
    }
    let p = IntPolynomial::from_sequence(seq);
    let star = p.reciprocal(n - 1).expect("window equals the degree");
    Ok(p.multiply(&star))
}

/// Which structural fact failed first, by offset `j` from the central coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureOffense {
    /// Coefficient at odd offset `j` should vanish.
    OddCoeff { j: usize, value: BigInt },
    /// Coefficient at even offset `j` should equal `(−1)^m`.
    EvenCoeff { j: usize, value: BigInt },
}

/// Outcome of [`correlation_structure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationStructureReport {
    pub m: usize,
    /// `(−1)^m`, the forced value of even-offset coefficients.
    pub expected_even_value: i64,
    /// `p*(z) == (−1)^m p(−z)`; forced by skew symmetry.
    pub star_negation_identity: bool,
    /// `p·p* == (−1)^m p(z) p(−z)`; forced by skew symmetry.
    pub product_negation_identity: bool,
    /// First `j ≥ 1` whose coefficient pair at `z^{2m±j}` breaks the pattern.
    pub first_offense: Option<StructureOffense>,
}

impl CorrelationStructureReport {
    pub fn passed(&self) -> bool {
        self.star_negation_identity && self.product_negation_identity && self.first_offense.is_none()
    }
}

/// Structure check for the correlation polynomial of a skew-symmetric sequence
/// of odd length `n = 2m+1`: odd-offset coefficients vanish, even-offset
/// coefficients equal `(−1)^m` (true exactly for Barker input), and both
/// negation identities hold.
pub fn correlation_structure(seq: &LittlewoodSeq) -> Result<CorrelationStructureReport, PolyError> {
    let n = seq.len();
    if n % 2 == 0 {
        return Err(PolyError::EvenLength(n));
    }
    if !seq.is_skew_symmetric().expect("length is odd") {
        return Err(PolyError::SkewViolation);
    }
    let m = (n - 1) / 2;
    let expected_even_value: i64 = if m % 2 == 0 { 1 } else { -1 };

    let p = IntPolynomial::from_sequence(seq);
    let star = p.reciprocal(n - 1).expect("window equals the degree");
    let q = p.multiply(&star);
    let signed_negation = {
        let pm = p.negate_variable();
        if m % 2 == 0 {
            pm
        } else {
            pm.negated()
        }
    };
    let star_negation_identity = star == signed_negation;
    let product_negation_identity = q == p.multiply(&signed_negation);

    let expected = BigInt::from(expected_even_value);
    let mut first_offense = None;
    for j in 1..=2 * m {
        let above = q.coeff(2 * m + j);
        let below = q.coeff(2 * m - j);
        let offense = if j % 2 == 1 {
            [&above, &below].into_iter().find(|v| !v.is_zero()).map(|v| StructureOffense::OddCoeff {
                j,
                value: v.clone(),
            })
        } else {
            [&above, &below].into_iter().find(|v| **v != expected).map(|v| {
                StructureOffense::EvenCoeff { j, value: v.clone() }
            })
        };
        if let Some(offense) = offense {
            first_offense = Some(offense);
            break;
        }
    }

    Ok(CorrelationStructureReport {
        m,
        expected_even_value,
        star_negation_identity,
        product_negation_identity,
        first_offense,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str) -> LittlewoodSeq {
        text.parse().expect("test sequence parses")
    }

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_coeffs(coeffs)
    }

    #[test]
    fn sequence_polynomial_reads_from_the_top() {
        // ++- becomes z^2 + z - 1.
        assert_eq!(IntPolynomial::from_sequence(&seq("++-")), poly(&[-1, 1, 1]));
        assert_eq!(IntPolynomial::from_sequence(&seq("+")), poly(&[1]));
    }

    #[test]
    fn multiply_matches_hand_convolution() {
        assert_eq!(poly(&[1, 1]).multiply(&poly(&[1, -1])), poly(&[1, 0, -1]));
        assert_eq!(poly(&[2, 3]).multiply(&poly(&[0, 0, 5])), poly(&[0, 0, 10, 15]));
        assert_eq!(poly(&[1, 1]).multiply(&IntPolynomial::zero()), IntPolynomial::zero());
    }

    #[test]
    fn zero_polynomial_sentinel() {
        let zero = IntPolynomial::zero();
        assert!(zero.is_zero());
        assert_eq!(zero.degree(), None);
        assert_eq!(zero.eval_at_one(), BigInt::from(0));
        assert_eq!(zero.reciprocal(3), Ok(IntPolynomial::zero()));
        assert_eq!(poly(&[0, 0]), IntPolynomial::zero());
    }

    #[test]
    fn reciprocal_reverses_within_window() {
        let p = poly(&[-1, 1, 1]); // z^2 + z - 1
        assert_eq!(p.reciprocal(2), Ok(poly(&[1, 1, -1]))); // -z^2 + z + 1
        // z^4 p(1/z) = -z^4 + z^3 + z^2.
        assert_eq!(p.reciprocal(4), Ok(poly(&[0, 0, 1, 1, -1])));
        assert_eq!(p.reciprocal(1), Err(PolyError::WindowTooSmall { degree: 2, window: 1 }));
        // Involution at the natural window.
        let twice = p.reciprocal(2).unwrap().reciprocal(2).unwrap();
        assert_eq!(twice, p);
    }

    #[test]
    fn negate_variable_flips_odd_coefficients() {
        assert_eq!(poly(&[-1, 1, 1]).negate_variable(), poly(&[-1, -1, 1]));
        let even = poly(&[-1, 0, 3, 0, -1]);
        assert_eq!(even.negate_variable(), even);
    }

    #[test]
    fn correlation_polynomial_hand_value() {
        // (z^2 + z - 1)(-z^2 + z + 1) = -z^4 + 3z^2 - 1.
        let q = autocorrelation_polynomial(&seq("++-")).expect("odd length");
        assert_eq!(q, poly(&[-1, 0, 3, 0, -1]));
        assert_eq!(autocorrelation_polynomial(&seq("+-")), Err(PolyError::EvenLength(2)));
    }

    #[test]
    fn correlation_polynomial_palindromizes_the_profile() {
        for text in ["+++++--++-+-+", "+-+", "++-++", "+++-+"] {
            let s = seq(text);
            let n = s.len();
            let q = autocorrelation_polynomial(&s).expect("odd length");
            let profile = s.autocorrelation();
            assert_eq!(q.degree(), Some(2 * (n - 1)));
            assert_eq!(q.coeff(n - 1), BigInt::from(n as i64), "central coefficient");
            for k in 0..n {
                assert_eq!(q.coeff(n - 1 + k), BigInt::from(profile.c(k)), "{text} lag {k}");
                assert_eq!(q.coeff(n - 1 - k), BigInt::from(profile.c(k)), "{text} lag {k}");
            }
            assert_eq!(q.coeff(0), BigInt::from(s.a(1) * s.a(n)), "constant term");
        }
    }

    #[test]
    fn eval_at_one_is_a_square_of_the_sequence_sum() {
        for text in ["+++++--++-+-+", "++-", "+-+++"] {
            let s = seq(text);
            let p = IntPolynomial::from_sequence(&s);
            let q = autocorrelation_polynomial(&s).expect("odd length");
            let p1 = p.eval_at_one();
            assert_eq!(q.eval_at_one(), &p1 * &p1, "{text}");
        }
        let q13 = autocorrelation_polynomial(&seq("+++++--++-+-+")).unwrap();
        assert_eq!(q13.eval_at_one(), BigInt::from(25));
    }

    #[test]
    fn structure_report_on_barker_input() {
        let report = correlation_structure(&seq("++-")).expect("skew input");
        assert_eq!(report.m, 1);
        assert_eq!(report.expected_even_value, -1);
        assert!(report.star_negation_identity);
        assert!(report.product_negation_identity);
        assert_eq!(report.first_offense, None);
        assert!(report.passed());

        let report13 = correlation_structure(&seq("+++++--++-+-+")).expect("skew input");
        assert_eq!(report13.expected_even_value, 1);
        assert!(report13.passed());
    }

    #[test]
    fn structure_report_flags_non_barker_skew_input() {
        // ++--+ is skew symmetric by construction but c_2 = -3.
        let s = seq("++--+");
        assert_eq!(s.is_skew_symmetric(), Ok(true));
        let report = correlation_structure(&s).expect("skew input");
        assert!(report.star_negation_identity);
        assert!(report.product_negation_identity);
        assert_eq!(
            report.first_offense,
            Some(StructureOffense::EvenCoeff { j: 2, value: BigInt::from(-3) })
        );
        assert!(!report.passed());
    }

    #[test]
    fn structure_check_rejects_bad_preconditions() {
        assert_eq!(correlation_structure(&seq("+-")), Err(PolyError::EvenLength(2)));
        assert_eq!(correlation_structure(&seq("+++")), Err(PolyError::SkewViolation));
    }

    #[test]
    fn json_round_trip_uses_decimal_strings() {
        let q = autocorrelation_polynomial(&seq("++-")).unwrap();
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"["-1","0","3","0","-1"]"#);
        let back: IntPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        let zero: IntPolynomial = serde_json::from_str("[]").unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(poly(&[-1, 1, 1]).to_string(), "z^2 + z - 1");
        assert_eq!(poly(&[-1, 0, 3, 0, -1]).to_string(), "-z^4 + 3z^2 - 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(poly(&[5]).to_string(), "5");
    }
}
