use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::QPolynomial;

/// A normalized element of Q(q).
///
/// Invariants: the denominator is nonzero and primitive over the integers
/// with positive leading coefficient, all rational content lives in the
/// numerator, and numerator and denominator are coprime. Zero is 0/1. The
/// form is unique, so `==` decides equality in the field.
#[derive(Clone, PartialEq, Eq)]
pub struct QRationalFunction {
    num: QPolynomial,
    den: QPolynomial,
}

impl QRationalFunction {
    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPolynomial, den: QPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = (num, den);
        if !den.is_constant() && !num.is_constant() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        // Fold the denominator's content into the numerator.
        let c = den.content().clone();
        if !c.is_one() {
            num = num.mul_scalar(&c.recip());
            den = den.mul_scalar(&c.recip());
        }
        QRationalFunction { num, den }
    }

    pub fn zero() -> Self {
        QRationalFunction {
            num: QPolynomial::zero(),
            den: QPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        QRationalFunction {
            num: QPolynomial::one(),
            den: QPolynomial::one(),
        }
    }

    /// The indeterminate q as a field element.
    pub fn q() -> Self {
        QRationalFunction {
            num: QPolynomial::q(),
            den: QPolynomial::one(),
        }
    }

    /// q^e for any integer e (negative exponents give 1/q^|e|).
    pub fn q_power(e: i64) -> Self {
        if e >= 0 {
            QRationalFunction {
                num: QPolynomial::monomial(e as usize),
                den: QPolynomial::one(),
            }
        } else {
            QRationalFunction {
                num: QPolynomial::one(),
                den: QPolynomial::monomial((-e) as usize),
            }
        }
    }

    pub fn from_poly(p: QPolynomial) -> Self {
        QRationalFunction {
            num: p,
            den: QPolynomial::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(QPolynomial::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(n)))
    }

    pub fn num(&self) -> &QPolynomial {
        &self.num
    }

    pub fn den(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is trivial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self
                .num
                .mul(&other.den)
                .add(&other.num.mul(&self.den));
            return Self::normalized(num, self.den.mul(&other.den));
        }
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        Self::normalized(num, self.den.mul(&db))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QRationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Cross-cancel before multiplying to keep degrees down.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1).expect("gcd divides")
        };
        let d2 = if g1.is_one() {
            other.den.clone()
        } else {
            other.den.div_exact(&g1).expect("gcd divides")
        };
        let n2 = if g2.is_one() {
            other.num.clone()
        } else {
            other.num.div_exact(&g2).expect("gcd divides")
        };
        let d1 = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2).expect("gcd divides")
        };
        // Cross-cancelled parts are pairwise coprime; skip the final gcd.
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let c = den.content().clone();
        if c.is_one() {
            QRationalFunction { num, den }
        } else {
            QRationalFunction {
                num: num.mul_scalar(&c.recip()),
                den: den.mul_scalar(&c.recip()),
            }
        }
    }

    pub fn mul_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRationalFunction {
            num: self.num.mul_scalar(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact value at q = r; errors on a pole.
    pub fn eval_at(&self, r: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return Err(Error::Pole { at: r.clone() });
        }
        Ok(self.num.eval(r) / d)
    }

    /// The limit as q -> 1, cancelling common (q - 1) factors first.
    pub fn limit_q1(&self) -> Result<BigRational> {
        let one = BigRational::one();
        let q_minus_1 = QPolynomial::from_int_coeffs(&[-1, 1]);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        while !num.is_zero() && num.eval(&one).is_zero() && den.eval(&one).is_zero() {
            num = num.div_exact(&q_minus_1).expect("root at 1 implies divisibility");
            den = den.div_exact(&q_minus_1).expect("root at 1 implies divisibility");
        }
        let d = den.eval(&one);
        if d.is_zero() {
            return Err(Error::InfiniteLimit);
        }
        Ok(num.eval(&one) / d)
    }

    /// Monic-denominator presentation: coefficient lists (num, den) with the
    /// denominator's leading coefficient scaled to 1.
    pub fn monic_parts(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let lead = self
            .den
            .coeff(self.den.degree().unwrap_or(0));
        let scale = lead.recip();
        let num = self.num.coeffs().iter().map(|c| c * &scale).collect();
        let den = self.den.coeffs().iter().map(|c| c * &scale).collect();
        (num, den)
    }

    /// JSON per the field schema: coefficient strings in ascending powers,
    /// monic denominator.
    pub fn to_json(&self) -> Value {
        let (num, den) = self.monic_parts();
        let render = |v: Vec<BigRational>| -> Value {
            Value::Array(v.into_iter().map(|c| Value::String(c.to_string())).collect())
        };
        json!({ "num": render(num), "den": render(den) })
    }

    /// Larger of the numerator/denominator degrees, for size reporting.
    pub fn degree_bound(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    /// True when the first nonzero numerator coefficient is negative; used
    /// by renderers to pull signs out front.
    pub fn starts_negative(&self) -> bool {
        self.num
            .coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .map_or(false, |c| c.is_negative())
    }

    /// Integer-cleared text form, e.g. `(1 - q)/(2 + 2*q)` or `q/(1 + q)`.
    pub fn render(&self) -> String {
        let num_scale = BigInt::one();
        let num_str = self.num.render_with_content(&num_scale);
        if self.den.is_one() && self.num.content().denom().is_one() {
            return num_str;
        }
        let den_str = self.den.render_with_content(self.num.content().denom());
        let num_wrapped = if self.num.term_count() > 1 {
            format!("({num_str})")
        } else {
            num_str
        };
        let den_wrapped = if self.den.term_count() > 1 || self.den_scalar_term_count() > 1 {
            format!("({den_str})")
        } else {
            den_str
        };
        format!("{num_wrapped}/{den_wrapped}")
    }

    fn den_scalar_term_count(&self) -> usize {
        // `2*q` style denominators also want parens.
        let has_scale = !self.num.content().denom().is_one();
        if has_scale && self.den.degree().unwrap_or(0) > 0 {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for QRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for QRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    fn qp(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_int_coeffs(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> QRationalFunction {
        QRationalFunction::new(qp(num), qp(den)).unwrap()
    }

    #[test]
    fn add_to_one() {
        // q/(1+q) + 1/(1+q) = 1
        let a = rf(&[0, 1], &[1, 1]);
        let b = rf(&[1], &[1, 1]);
        assert!(a.add(&b).is_one());
    }

    #[test]
    fn inv_of_poly() {
        let f = QRationalFunction::from_poly(qp(&[1, 1])).inv().unwrap();
        assert_eq!(f, rf(&[1], &[1, 1]));
    }

    #[test]
    fn mul_inverse_pair() {
        // (1-q)/(1+q) * (1+q)/(1-q) = 1
        let a = rf(&[1, -1], &[1, 1]);
        let b = rf(&[1, 1], &[1, -1]);
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = QRationalFunction::zero();
        assert_eq!(z.inv(), Err(Error::DivisionByZero));
        assert_eq!(QRationalFunction::one().div(&z), Err(Error::DivisionByZero));
    }

    #[test]
    fn normal_form_is_idempotent_and_canonical() {
        // (q^2-1)/(q-1) normalizes to 1+q
        let f = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(f, QRationalFunction::from_poly(qp(&[1, 1])));
        // negative leading denominator is flipped
        let g = QRationalFunction::new(qp(&[1]), qp(&[-1, -1])).unwrap();
        assert_eq!(g, rf(&[-1], &[1, 1]));
    }

    #[test]
    fn eval_and_pole() {
        let f = rf(&[1], &[1, 1]);
        assert_eq!(f.eval_at(&int(2)).unwrap(), rat(1, 3));
        let pole = rf(&[1], &[-1, 1]); // 1/(q-1)
        assert!(matches!(pole.eval_at(&int(1)), Err(Error::Pole { .. })));
    }

    #[test]
    fn limit_q1_cancels() {
        // (1-q)/(1-q^2) -> 1/2
        let f = rf(&[1, -1], &[1, 0, -1]);
        assert_eq!(f.limit_q1().unwrap(), rat(1, 2));
        // 1/(1-q) diverges
        assert_eq!(rf(&[1], &[1, -1]).limit_q1(), Err(Error::InfiniteLimit));
    }

    #[test]
    fn q_power_negative() {
        let f = QRationalFunction::q_power(-2);
        assert_eq!(f, rf(&[1], &[0, 0, 1]));
    }

    #[test]
    fn render_matches_integer_cleared_form() {
        // c_2(q) = (1-q)/(2(1+q))
        let c2 = rf(&[1, -1], &[2, 2]);
        assert_eq!(c2.render(), "(1 - q)/(2 + 2*q)");
        let f = rf(&[0, -1], &[1, 1]);
        assert_eq!(f.render(), "-q/(1 + q)");
        assert_eq!(rf(&[5], &[1]).render(), "5");
        assert_eq!(rat_render(rat(1, 2)), "1/2");
    }

    fn rat_render(c: BigRational) -> String {
        QRationalFunction::from_rational(c).render()
    }

    #[test]
    fn json_uses_monic_denominator() {
        let c2 = rf(&[1, -1], &[2, 2]); // (1-q)/(2+2q) == (1/2 - q/2)/(1+q)
        let v = c2.to_json();
        assert_eq!(v["num"][0], "1/2");
        assert_eq!(v["num"][1], "-1/2");
        assert_eq!(v["den"][0], "1");
        assert_eq!(v["den"][1], "1");
    }
}
