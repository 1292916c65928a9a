//! Exact arithmetic in ℤ[β] and the clopen-representability test.
//!
//! For a Bernoulli shift with weights `(β, 1 − β)` and transcendental `β`,
//! the measure of a clopen set is `Σ c_k β^k (1 − β)^{n−k}` with integer
//! counts `0 ≤ c_k ≤ C(n, k)`. A label polynomial is realisable as such a
//! measure exactly when its coefficients in that basis satisfy the bounds at
//! some degree `n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{input, Result};
use crate::rational::Rational;
use crate::shift::Word;

pub use crate::label_expr::poly_of_label_expression;

/// Default degree bound for [`representable_up_to`].
pub const DEFAULT_MAX_DEGREE: usize = 40;

/// Integer polynomial, constant term first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LabelPoly {
    coefficients: Vec<BigInt>,
}

impl LabelPoly {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        LabelPoly { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        LabelPoly::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LabelPoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        LabelPoly::new(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        LabelPoly::from_i64(&[0, 1])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, with the zero polynomial given degree 0.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &LabelPoly) -> LabelPoly {
        let n = self.coefficients.len().max(other.coefficients.len());
        LabelPoly::new((0..n).map(|k| self.coefficient(k) + other.coefficient(k)).collect())
    }

    pub fn neg(&self) -> LabelPoly {
        LabelPoly::new(self.coefficients.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &LabelPoly) -> LabelPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LabelPoly) -> LabelPoly {
        if self.is_zero() || other.is_zero() {
            return LabelPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LabelPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> LabelPoly {
        (0..e).fold(LabelPoly::constant(BigInt::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coefficients.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// `x^a (1 − x)^b`.
    pub fn bernstein_monomial(a: usize, b: usize) -> LabelPoly {
        LabelPoly::x().pow(a).mul(&LabelPoly::from_i64(&[1, -1]).pow(b))
    }

    /// Measure of the cylinder `word` under weights `(x, 1 − x)` on `{0, 1}`.
    pub fn cylinder(word: &Word) -> LabelPoly {
        let zeros = word.symbols.iter().filter(|&&s| s == 0).count();
        LabelPoly::bernstein_monomial(zeros, word.len() - zeros)
    }
}

impl fmt::Display for LabelPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "b")?,
                (1, false) => write!(f, "{mag}b")?,
                (_, true) => write!(f, "b^{k}")?,
                (_, false) => write!(f, "{mag}b^{k}")?,
            }
        }
        Ok(())
    }
}

/// Counts `c_k` of a representation `Σ c_k x^k (1 − x)^{n−k}` with
/// `0 ≤ c_k ≤ C(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub degree: usize,
    #[serde(serialize_with = "ser_bigints")]
    pub counts: Vec<BigInt>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        match i64::try_from(c) {
            Ok(small) => seq.serialize_element(&small)?,
            Err(_) => seq.serialize_element(&c.to_string())?,
        }
    }
    seq.end()
}

impl Certificate {
    pub fn new(degree: usize, counts: Vec<BigInt>) -> Result<Self> {
        if counts.len() != degree + 1 {
            return input(format!("certificate of degree {degree} needs {} counts", degree + 1));
        }
        let row = binomial_row(degree);
        if let Some(k) = (0..=degree).find(|&k| counts[k].is_negative() || counts[k] > row[k]) {
            return input(format!("count c_{k} = {} outside [0, C({degree},{k})]", counts[k]));
        }
        Ok(Certificate { degree, counts })
    }

    /// Raises the degree by one with `x^a(1−x)^b = x^{a+1}(1−x)^b + x^a(1−x)^{b+1}`.
    pub fn elevate(&self) -> Certificate {
        let n = self.degree;
        let counts = (0..=n + 1)
            .map(|k| {
                let from_same = if k <= n { self.counts[k].clone() } else { BigInt::zero() };
                let from_prev = if k >= 1 { self.counts[k - 1].clone() } else { BigInt::zero() };
                from_same + from_prev
            })
            .collect();
        Certificate { degree: n + 1, counts }
    }
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

pub fn expand_certificate(cert: &Certificate) -> LabelPoly {
    cert.counts
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(LabelPoly::zero(), |acc, (k, c)| {
            acc.add(&LabelPoly::bernstein_monomial(k, cert.degree - k).mul(&LabelPoly::constant(c.clone())))
        })
}

/// Coefficients `γ_k` with `p = Σ γ_k x^k (1 − x)^{n−k}`.
///
/// Writing `x^j = x^j (x + (1 − x))^{n−j}` gives `γ_k = Σ_{j≤k} C(n−j, k−j) a_j`,
/// so the coefficients of an integer polynomial are integers.
pub fn to_paper_form(p: &LabelPoly, n: usize) -> Result<Vec<BigInt>> {
    if n < p.degree() {
        return input(format!("degree {n} is below the polynomial degree {}", p.degree()));
    }
    let rows: Vec<Vec<BigInt>> = (0..=p.degree()).map(|j| binomial_row(n - j)).collect();
    Ok((0..=n)
        .map(|k| {
            (0..=k.min(p.degree()))
                .map(|j| &rows[j][k - j] * p.coefficient(j))
                .sum()
        })
        .collect())
}

/// A certificate at degree `n`, if the coefficients respect the Pascal bounds.
pub fn representable_at(p: &LabelPoly, n: usize) -> Result<Option<Certificate>> {
    let gamma = to_paper_form(p, n)?;
    let row = binomial_row(n);
    let fits = gamma.iter().zip(&row).all(|(g, b)| !g.is_negative() && g <= b);
    Ok(fits.then(|| Certificate { degree: n, counts: gamma }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Representability {
    /// First degree with a certificate; every higher degree has one too.
    Certificate { witness_degree: usize, certificate: Certificate },
    /// Excluded at every degree.
    Rejected { rejection_reason: String },
    /// No certificate up to the search bound.
    Unknown { max_degree: usize },
}

/// Searches degrees `deg(p) ..= n_max` for a certificate.
///
/// The endpoint coefficients are forced: `γ_0 = p(0)` and `γ_n = p(1)`, and
/// both must lie in `{0, 1}`, so a polynomial violating that is rejected
/// outright.
pub fn representable_up_to(p: &LabelPoly, n_max: usize) -> Result<Representability> {
    if n_max < p.degree() {
        return input(format!("search bound {n_max} is below the polynomial degree {}", p.degree()));
    }
    for (point, value) in [(0, p.eval_int(0)), (1, p.eval_int(1))] {
        if !(value.is_zero() || value.is_one()) {
            return Ok(Representability::Rejected {
                rejection_reason: format!("p({point})={value}"),
            });
        }
    }
    for n in p.degree()..=n_max {
        if let Some(certificate) = representable_at(p, n)? {
            return Ok(Representability::Certificate { witness_degree: n, certificate });
        }
    }
    Ok(Representability::Unknown { max_degree: n_max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn certificate_expansion() {
        let c = Certificate::new(1, big(&[0, 1])).unwrap();
        assert_eq!(expand_certificate(&c), LabelPoly::x());
        let c = Certificate::new(1, big(&[1, 1])).unwrap();
        assert_eq!(expand_certificate(&c), LabelPoly::from_i64(&[1]));
        let c = Certificate::new(2, big(&[0, 1, 0])).unwrap();
        assert_eq!(expand_certificate(&c), LabelPoly::from_i64(&[0, 1, -1]));
        assert!(Certificate::new(2, big(&[0, 3, 0])).is_err());
        assert!(Certificate::new(2, big(&[0, 1])).is_err());
    }

    #[test]
    fn paper_form() {
        assert_eq!(to_paper_form(&LabelPoly::x(), 2).unwrap(), big(&[0, 1, 1]));
        assert_eq!(to_paper_form(&LabelPoly::from_i64(&[1]), 1).unwrap(), big(&[1, 1]));
        assert_eq!(to_paper_form(&LabelPoly::from_i64(&[0, 1, 1]), 2).unwrap(), big(&[0, 1, 2]));
        assert!(to_paper_form(&LabelPoly::from_i64(&[0, 1, 1]), 1).is_err());
    }

    #[test]
    fn representability_at_fixed_degree() {
        assert_eq!(representable_at(&LabelPoly::x(), 1).unwrap().unwrap().counts, big(&[0, 1]));
        let p = LabelPoly::from_i64(&[0, 1, 1]);
        for n in 2..12 {
            assert!(representable_at(&p, n).unwrap().is_none());
        }
        let c = representable_at(&LabelPoly::from_i64(&[0, 1, -1]), 2).unwrap().unwrap();
        assert_eq!(c.counts, big(&[0, 1, 0]));
    }

    #[test]
    fn search_verdicts() {
        let r = representable_up_to(&LabelPoly::from_i64(&[0, 1, 1]), 40).unwrap();
        assert_eq!(r, Representability::Rejected { rejection_reason: "p(1)=2".into() });
        match representable_up_to(&LabelPoly::x(), 40).unwrap() {
            Representability::Certificate { witness_degree, .. } => assert_eq!(witness_degree, 1),
            other => panic!("{other:?}"),
        }
        assert!(representable_up_to(&LabelPoly::from_i64(&[0, 1, 1]), 1).is_err());
    }

    #[test]
    fn elevation_keeps_bounds() {
        let c = Certificate::new(2, big(&[0, 1, 0])).unwrap();
        let e = c.elevate();
        assert_eq!(e.counts, big(&[0, 1, 1, 0]));
        assert!(Certificate::new(e.degree, e.counts.clone()).is_ok());
        assert_eq!(expand_certificate(&e), expand_certificate(&c));
    }

    #[test]
    fn cylinder_polynomials() {
        let w = Word::parse("01", 0).unwrap();
        let p = LabelPoly::cylinder(&w);
        assert_eq!(p, LabelPoly::from_i64(&[0, 1, -1]));
        assert_eq!(p.eval(&ratio(1, 3)), ratio(2, 9));
    }

    #[test]
    fn display() {
        assert_eq!(LabelPoly::from_i64(&[0, 1, 1]).to_string(), "b + b^2");
        assert_eq!(LabelPoly::from_i64(&[1, -1]).to_string(), "1 - b");
        assert_eq!(LabelPoly::from_i64(&[0, 2, -2, 1]).to_string(), "2b - 2b^2 + b^3");
        assert_eq!(LabelPoly::zero().to_string(), "0");
    }
}
