use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A univariate polynomial in q over the rationals.
///
/// Stored as `content * primitive`, where `primitive` is an integer
/// polynomial with coprime coefficients and positive leading coefficient.
/// The zero polynomial is `content = 0` with an empty coefficient vector.
/// Keeping the primitive part over the integers makes products cheap
/// (primitive times primitive is primitive, by Gauss) and lets gcds run as
/// primitive remainder sequences without rational coefficient swell.
#[derive(Clone, PartialEq, Eq)]
pub struct QPolynomial {
    content: BigRational,
    prim: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial {
            content: BigRational::zero(),
            prim: Vec::new(),
        }
    }

    pub fn one() -> Self {
        QPolynomial {
            content: BigRational::one(),
            prim: vec![BigInt::one()],
        }
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        Self::monomial(1)
    }

    /// q^k with coefficient 1.
    pub fn monomial(k: usize) -> Self {
        let mut prim = vec![BigInt::zero(); k + 1];
        prim[k] = BigInt::one();
        QPolynomial {
            content: BigRational::one(),
            prim,
        }
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            content: c,
            prim: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from rational coefficients in ascending powers.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Self::zero();
        }
        // Common denominator, then primitive part of the integer lift.
        let mut den = BigInt::one();
        for c in &coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let (prim, gcd) = make_primitive(ints);
        QPolynomial {
            content: BigRational::new(gcd, den),
            prim,
        }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from(BigInt::from(c))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.content.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.content.is_one() && self.prim.len() == 1 && self.prim[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.prim.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.prim.len() - 1)
        }
    }

    /// Coefficient of q^i as an exact rational.
    pub fn coeff(&self, i: usize) -> BigRational {
        match self.prim.get(i) {
            Some(c) => &self.content * c,
            None => BigRational::zero(),
        }
    }

    /// Rational coefficients in ascending powers (empty for zero).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.prim.iter().map(|c| &self.content * c).collect()
    }

    pub(crate) fn content(&self) -> &BigRational {
        &self.content
    }

    pub(crate) fn primitive_part(&self) -> QPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            content: BigRational::one(),
            prim: self.prim.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            content: -self.content.clone(),
            prim: self.prim.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // a*P + b*Q = (gcd of contents) * (a' * P + b' * Q) with a', b' integers.
        let ratio = &self.content / &other.content;
        let (p, s) = (ratio.numer(), ratio.denom());
        let n = self.prim.len().max(other.prim.len());
        let mut ints = vec![BigInt::zero(); n];
        for (i, c) in self.prim.iter().enumerate() {
            ints[i] += p * c;
        }
        for (i, c) in other.prim.iter().enumerate() {
            ints[i] += s * c;
        }
        while ints.last().map_or(false, |c| c.is_zero()) {
            ints.pop();
        }
        if ints.is_empty() {
            return Self::zero();
        }
        let (prim, gcd) = make_primitive(ints);
        QPolynomial {
            content: &other.content / s * gcd,
            prim,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut prim = vec![BigInt::zero(); self.prim.len() + other.prim.len() - 1];
        for (i, a) in self.prim.iter().enumerate() {
            for (j, b) in other.prim.iter().enumerate() {
                prim[i + j] += a * b;
            }
        }
        // Product of primitives is primitive; no renormalization needed.
        QPolynomial {
            content: &self.content * &other.content,
            prim,
        }
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Self {
        if self.is_zero() || c.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            content: &self.content * c,
            prim: self.prim.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.prim.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc * &self.content
    }

    /// Greatest common divisor, returned primitive with content 1.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let mut r0 = self.prim.clone();
        let mut r1 = other.prim.clone();
        if r0.len() < r1.len() {
            std::mem::swap(&mut r0, &mut r1);
        }
        // Primitive remainder sequence: pseudo-remainders with the content
        // stripped at every step, so coefficients stay small.
        loop {
            let r2 = pseudo_rem(&r0, &r1);
            if r2.is_empty() {
                let (prim, _) = make_primitive(r1);
                return QPolynomial {
                    content: BigRational::one(),
                    prim,
                };
            }
            let (prim, _) = make_primitive(r2);
            r0 = r1;
            r1 = prim;
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.prim.len() < divisor.prim.len() {
            return None;
        }
        // Quotient of primitives is primitive when the division is exact.
        let mut rem = self.prim.clone();
        let dlead = divisor.prim.last().unwrap();
        let qlen = self.prim.len() - divisor.prim.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + divisor.prim.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (digit, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.prim.iter().enumerate() {
                rem[k + i] -= &digit * d;
            }
            quot[k] = digit;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        while quot.last().map_or(false, |c| c.is_zero()) {
            quot.pop();
        }
        Some(QPolynomial {
            content: &self.content / &divisor.content,
            prim: quot,
        })
    }

    /// Renders in ascending powers: `1 - q + 2*q^3`.
    pub fn render_with_content(&self, extra: &BigInt) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let scale = self.content.numer() * extra;
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.prim.iter().enumerate() {
            let v = c * &scale;
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if first {
                if v.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if v.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && i > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            match (coeff_part.is_empty(), var_part.is_empty()) {
                (true, _) => out.push_str(&var_part),
                (_, true) => out.push_str(&coeff_part),
                _ => {
                    out.push_str(&coeff_part);
                    out.push('*');
                    out.push_str(&var_part);
                }
            }
        }
        out
    }

    /// Number of terms in the rendered form (for parenthesization).
    pub fn term_count(&self) -> usize {
        self.prim.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.content.denom().is_one() {
            write!(f, "{}", self.render_with_content(&BigInt::one()))
        } else {
            // Fractional content: fall back to rational coefficients.
            let mut out = String::new();
            let mut first = true;
            for (i, c) in self.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if first {
                    if c.is_negative() {
                        out.push('-');
                    }
                    first = false;
                } else if c.is_negative() {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                let mag = c.abs();
                let var = match i {
                    0 => String::new(),
                    1 => "q".to_string(),
                    _ => format!("q^{i}"),
                };
                if var.is_empty() {
                    out.push_str(&mag.to_string());
                } else if mag.is_one() {
                    out.push_str(&var);
                } else {
                    out.push_str(&format!("{mag}*{var}"));
                }
            }
            write!(f, "{out}")
        }
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Strips the integer content; returns (primitive part, content) with the
/// primitive part's leading coefficient positive.
fn make_primitive(ints: Vec<BigInt>) -> (Vec<BigInt>, BigInt) {
    let mut g = BigInt::zero();
    for c in &ints {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    debug_assert!(!g.is_zero());
    if ints.last().map_or(false, |c| c.is_negative()) {
        g = -g;
    }
    if g.is_one() {
        return (ints, g);
    }
    let prim = ints.iter().map(|c| c / &g).collect();
    (prim, g)
}

/// Pseudo-remainder of integer polynomials: lc(b)^(da-db+1) * a mod b.
/// Returns raw coefficients, possibly empty when the remainder is zero.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    while rem.len() > db {
        let top = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - db;
        if !top.is_zero() {
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (i, bc) in b.iter().enumerate() {
                rem[shift + i] -= &top * bc;
            }
        }
        rem.pop();
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    fn poly(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn normal_form_strips_trailing_zeros() {
        let p = QPolynomial::from_coeffs(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(QPolynomial::from_coeffs(vec![int(0), int(0)]).is_zero());
    }

    #[test]
    fn mul_keeps_primitive_parts() {
        let a = poly(&[2, 2]); // 2 + 2q
        let b = poly(&[0, 3]); // 3q
        let p = a.mul(&b);
        assert_eq!(p.coeff(1), int(6));
        assert_eq!(p.coeff(2), int(6));
        assert_eq!(*p.content(), int(6));
    }

    #[test]
    fn add_mixed_contents() {
        let a = QPolynomial::constant(rat(1, 2)); // 1/2
        let b = poly(&[0, 1]).mul_scalar(&rat(1, 3)); // q/3
        let s = a.add(&b);
        assert_eq!(s.coeff(0), rat(1, 2));
        assert_eq!(s.coeff(1), rat(1, 3));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1+q)(1-q) and (1+q)(2+q)
        let a = poly(&[1, 1]).mul(&poly(&[1, -1]));
        let b = poly(&[1, 1]).mul(&poly(&[2, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, poly(&[1, 1]));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = poly(&[1, 1, 1]);
        let b = poly(&[-1, 1]);
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = poly(&[1, 2, 1]); // (1+q)^2
        let b = poly(&[1, 1]);
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, b);
        assert_eq!(poly(&[1, 1, 1]).div_exact(&b), None);
    }

    #[test]
    fn eval_horner() {
        let p = poly(&[1, -1]); // 1 - q
        assert_eq!(p.eval(&rat(1, 2)), rat(1, 2));
        assert_eq!(p.eval(&int(1)), int(0));
    }

    #[test]
    fn display_ascending() {
        assert_eq!(poly(&[1, -1]).to_string(), "1 - q");
        assert_eq!(poly(&[2, 2]).to_string(), "2 + 2*q");
        assert_eq!(poly(&[0, 0, 1]).to_string(), "q^2");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }
}
