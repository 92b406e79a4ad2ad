use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::algebra::word::{Generator, Word};
use crate::error::{Error, Result};
use crate::field::{q_number, QRationalFunction};

/// An element of the free associative algebra on {A, B} over Q(q): a sparse
/// map from words to coefficients, kept in the canonical term order
/// (ascending degree, then lexicographic with A < B).
///
/// `truncation` records the degree beyond which terms have been discarded
/// (`None` when nothing ever was). It is metadata: equality compares terms
/// only, and every product-like operation takes its cutoff explicitly.
#[derive(Clone)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, QRationalFunction>,
    truncation: Option<usize>,
}

impl PartialEq for NCPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for NCPolynomial {}

impl NCPolynomial {
    pub fn zero() -> Self {
        NCPolynomial {
            terms: BTreeMap::new(),
            truncation: None,
        }
    }

    pub fn one() -> Self {
        Self::scalar(QRationalFunction::one())
    }

    pub fn scalar(c: QRationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word::empty(), c);
        }
        NCPolynomial {
            terms,
            truncation: None,
        }
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_word(Word::generator(g))
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, QRationalFunction::one());
        NCPolynomial {
            terms,
            truncation: None,
        }
    }

    pub fn from_terms(pairs: Vec<(Word, QRationalFunction)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in pairs {
            out.add_term(w, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn with_truncation(mut self, n: Option<usize>) -> Self {
        self.truncation = n;
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &QRationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> QRationalFunction {
        self.terms.get(w).cloned().unwrap_or_else(QRationalFunction::zero)
    }

    pub fn constant_term(&self) -> QRationalFunction {
        self.coeff(&Word::empty())
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|w| w.degree())
    }

    fn add_term(&mut self, w: Word, c: QRationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn merge_truncation(a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (Some(x), None) | (None, Some(x)) => Some(x),
            (None, None) => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.truncation = Self::merge_truncation(self.truncation, other.truncation);
        for (w, c) in other.terms() {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NCPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (*w, c.neg()))
                .collect(),
            truncation: self.truncation,
        }
    }

    pub fn scale(&self, c: &QRationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (*w, x.mul(c)))
                .collect(),
            truncation: self.truncation,
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.scale(&QRationalFunction::from_rational(c.clone()))
    }

    /// Bilinear concatenation product, discarding words of degree > n.
    pub fn nc_mul(&self, other: &Self, n: usize) -> Self {
        let mut out = Self::zero();
        out.truncation = Self::merge_truncation(
            Some(n),
            Self::merge_truncation(self.truncation, other.truncation),
        );
        for (w1, c1) in &self.terms {
            let d1 = w1.degree();
            if d1 > n {
                break;
            }
            let limit = Word::power(Generator::B, n - d1);
            for (w2, c2) in other.terms.range(..=limit) {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    /// P*Q - q^e * Q*P; e = 0 is the classical commutator.
    pub fn q_commutator(&self, other: &Self, e: i64, n: usize) -> Self {
        let pq = self.nc_mul(other, n);
        let qp = other.nc_mul(self, n);
        pq.sub(&qp.scale(&QRationalFunction::q_power(e)))
    }

    /// Truncated exponential sum_{k<=n} P^k / k!; requires zero constant
    /// term.
    pub fn exp_trunc(&self, n: usize) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::NonzeroConstantTerm {
                found: c0.render(),
            });
        }
        let one = Self::one();
        let mut acc = one.clone();
        for k in (1..=n as u64).rev() {
            let inv_k = BigRational::new(1.into(), k.into());
            acc = one.add(&self.nc_mul(&acc, n).scale_rational(&inv_k));
        }
        Ok(acc.with_truncation(Some(n)))
    }

    /// Truncated logarithm sum_{k<=n} (-1)^{k-1}(P-1)^k/k; requires constant
    /// term 1.
    pub fn log_trunc(&self, n: usize) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(Error::ConstantTermNotOne {
                found: c0.render(),
            });
        }
        let u = self.sub(&Self::one());
        if n == 0 || u.is_zero() {
            return Ok(Self::zero().with_truncation(Some(n)));
        }
        let coeff = |k: u64| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            BigRational::new(sign.into(), (k + 1).into())
        };
        let mut acc = Self::scalar(QRationalFunction::from_rational(coeff(n as u64 - 1)));
        for m in (0..n as u64 - 1).rev() {
            acc = Self::scalar(QRationalFunction::from_rational(coeff(m)))
                .add(&u.nc_mul(&acc, n));
        }
        Ok(u.nc_mul(&acc, n).with_truncation(Some(n)))
    }

    /// Truncated two-sided inverse; requires a nonzero constant term.
    pub fn inv_trunc(&self, n: usize) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let c0_inv = c0.inv()?;
        // P = c0 (1 - U) with U of positive degree; P^{-1} = c0^{-1} sum U^k.
        let u = Self::one().sub(&self.scale(&c0_inv));
        let one = Self::one();
        let mut acc = one.clone();
        for _ in 0..n {
            acc = one.add(&u.nc_mul(&acc, n));
        }
        Ok(acc.scale(&c0_inv).with_truncation(Some(n)))
    }

    /// Truncated Jackson q-exponential sum_{k<=n} P^k / [k]_{q^a}!; requires
    /// zero constant term.
    pub fn jackson_qexp_trunc(&self, a: i64, n: usize) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::NonzeroConstantTerm {
                found: c0.render(),
            });
        }
        let one = Self::one();
        let mut acc = one.clone();
        for k in (1..=n as u32).rev() {
            let inv_qk = q_number(k, a).inv().expect("[k] is nonzero in Q(q)");
            acc = one.add(&self.nc_mul(&acc, n).scale(&inv_qk));
        }
        Ok(acc.with_truncation(Some(n)))
    }

    /// The degree-k homogeneous component.
    pub fn homogeneous_part(&self, k: usize) -> Self {
        let lo = Word::power(Generator::A, k);
        let hi = Word::power(Generator::B, k);
        NCPolynomial {
            terms: self
                .terms
                .range(lo..=hi)
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
            truncation: self.truncation,
        }
    }

    /// Rewrites every word to normal order (all A's left of all B's) under
    /// the q-plane relation BA = qAB. Each adjacent BA -> qAB step removes
    /// one inversion and contributes one factor q, so a word with i
    /// inversions maps to q^i A^m B^n directly.
    pub fn qplane_normal_form(&self) -> Self {
        let mut out = Self::zero();
        out.truncation = self.truncation;
        for (w, c) in &self.terms {
            let target = Word::normal_ordered(w.count(Generator::A), w.count(Generator::B));
            let factor = QRationalFunction::q_power(w.inversions() as i64);
            out.add_term(target, c.mul(&factor));
        }
        out
    }

    /// Coefficient-wise limit q -> 1.
    pub fn limit_q1(&self) -> Result<Self> {
        let mut out = Self::zero();
        out.truncation = self.truncation;
        for (w, c) in &self.terms {
            let v = c.limit_q1()?;
            out.add_term(*w, QRationalFunction::from_rational(v));
        }
        Ok(out)
    }

    /// Coefficient-wise evaluation at q = r (exact); errors on a pole.
    pub fn eval_coeffs(&self, r: &BigRational) -> Result<Vec<(Word, BigRational)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (w, c) in &self.terms {
            out.push((*w, c.eval_at(r)?));
        }
        Ok(out)
    }

    /// Largest numerator/denominator q-degree over all coefficients.
    pub fn degree_stats(&self) -> (usize, usize) {
        let mut num = 0;
        let mut den = 0;
        for c in self.terms.values() {
            num = num.max(c.num().degree().unwrap_or(0));
            den = den.max(c.den().degree().unwrap_or(0));
        }
        (num, den)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                json!({
                    "word": if w.is_empty() { String::new() } else { w.to_string() },
                    "coeff": c.to_json(),
                })
            })
            .collect();
        json!({
            "truncation": self.truncation,
            "terms": terms,
        })
    }

    /// LaTeX with explicit fractions, canonical term order.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.starts_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_tex = if mag.is_polynomial() && mag.num().content().denom() == &1i64.into() {
                let s = mag.render();
                if mag.num().term_count() > 1 {
                    format!("\\left({s}\\right)")
                } else {
                    s
                }
            } else {
                let (num, den) = (mag.num(), mag.den());
                let num_s = num.render_with_content(&1i64.into());
                let den_s = den.render_with_content(num.content().denom());
                format!("\\frac{{{num_s}}}{{{den_s}}}")
            };
            if w.is_empty() {
                out.push_str(&coeff_tex);
            } else if mag.is_one() {
                out.push_str(&w.to_string());
            } else {
                out.push_str(&format!("{coeff_tex}\\,{w}"));
            }
        }
        out
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let neg = c.starts_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let coeff = mag.render();
            if w.is_empty() {
                write!(f, "{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                let wrapped = if coeff.contains(' ') || coeff.contains('/') {
                    format!("({coeff})")
                } else {
                    coeff
                };
                write!(f, "{wrapped}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
