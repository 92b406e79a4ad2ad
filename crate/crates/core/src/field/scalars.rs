use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::QRationalFunction;

/// The Heine basic number [n]_{q^a} = 1 + q^a + ... + q^{a(n-1)}.
///
/// For a = 0 every summand is 1, so this is the classical value n (the
/// defining fraction (1 - q^{0n})/(1 - q^0) is indeterminate; the limit is
/// the only consistent choice). Negative a yields a genuine rational
/// function.
pub fn q_number(n: u32, a: i64) -> QRationalFunction {
    let mut sum = QRationalFunction::zero();
    for i in 0..n as i64 {
        sum = sum.add(&QRationalFunction::q_power(a * i));
    }
    sum
}

/// The q-factorial [n]_{q^a}! = [n]_{q^a} [n-1]_{q^a} ... [1]_{q^a}, with
/// [0]! = 1.
pub fn q_factorial(n: u32, a: i64) -> QRationalFunction {
    q_factorials_upto(n, a).pop().unwrap()
}

/// All of [0]!, [1]!, ..., [n]! in base q^a, in one pass.
pub fn q_factorials_upto(n: u32, a: i64) -> Vec<QRationalFunction> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(QRationalFunction::one());
    for k in 1..=n {
        let next = out.last().unwrap().mul(&q_number(k, a));
        out.push(next);
    }
    out
}

/// The q-binomial coefficient [k]_q! / ([j]_q! [k-j]_q!), always a
/// polynomial in q. Errors when j > k.
pub fn q_binomial(k: u32, j: u32) -> Result<QRationalFunction> {
    if j > k {
        return Err(Error::BinomialRange { k, j });
    }
    let facts = q_factorials_upto(k, 1);
    facts[k as usize].div(&facts[j as usize].mul(&facts[(k - j) as usize]))
}

/// The log-expansion coefficient c_k(q^a) = (1 - q^a)^{k-1} / (k [k]_{q^a}),
/// i.e. the k-th Taylor coefficient of ln E_{q^a}(z).
///
/// c_1 = 1 for every base. For a = 0 the q-exponential degenerates to the
/// classical one, so c_k(1) = 1 if k = 1 and 0 otherwise. Errors on k = 0.
pub fn c_coeff(k: u32, a: i64) -> Result<QRationalFunction> {
    if k == 0 {
        return Err(Error::ZeroCoefficientIndex);
    }
    if a == 0 {
        return Ok(if k == 1 {
            QRationalFunction::one()
        } else {
            QRationalFunction::zero()
        });
    }
    let one_minus_qa = QRationalFunction::one().sub(&QRationalFunction::q_power(a));
    let den = q_number(k, a).mul_rational(&BigRational::from_integer(k.into()));
    one_minus_qa.pow(k - 1).div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat, QPolynomial};

    fn poly(coeffs: &[i64]) -> QRationalFunction {
        QRationalFunction::from_poly(QPolynomial::from_int_coeffs(coeffs))
    }

    fn rf(num: &[i64], den: &[i64]) -> QRationalFunction {
        QRationalFunction::new(
            QPolynomial::from_int_coeffs(num),
            QPolynomial::from_int_coeffs(den),
        )
        .unwrap()
    }

    #[test]
    fn q_number_base_cases() {
        assert_eq!(q_number(4, 1), poly(&[1, 1, 1, 1]));
        assert_eq!(q_number(3, 0), QRationalFunction::from_int(3));
        assert!(q_number(0, 5).is_zero());
        assert!(q_number(1, -3).is_one());
    }

    #[test]
    fn q_number_negative_base() {
        // [2]_{q^-1} = 1 + 1/q = (q+1)/q; cross-check against the defining
        // fraction (1 - x^2)/(1 - x) evaluated at x = q^{-1}.
        let direct = q_number(2, -1);
        assert_eq!(direct, rf(&[1, 1], &[0, 1]));
        let x = QRationalFunction::q_power(-1);
        let frac = QRationalFunction::one()
            .sub(&x.pow(2))
            .div(&QRationalFunction::one().sub(&x))
            .unwrap();
        assert_eq!(direct, frac);
    }

    #[test]
    fn q_factorial_values() {
        assert!(q_factorial(0, 7).is_one());
        // (1)(1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
        assert_eq!(q_factorial(3, 1), poly(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(2, 0), QRationalFunction::from_int(2));
    }

    #[test]
    fn q_binomial_values() {
        assert_eq!(q_binomial(4, 2).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(5, 0).unwrap().is_one());
        assert!(matches!(
            q_binomial(3, 4),
            Err(Error::BinomialRange { k: 3, j: 4 })
        ));
    }

    #[test]
    fn q_binomial_pascal_instance() {
        // [4 2] = q^2 [3 2] + [3 1]
        let lhs = q_binomial(4, 2).unwrap();
        let rhs = QRationalFunction::q_power(2)
            .mul(&q_binomial(3, 2).unwrap())
            .add(&q_binomial(3, 1).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn c_coeff_values() {
        assert!(c_coeff(1, 5).unwrap().is_one());
        assert_eq!(c_coeff(2, 1).unwrap(), rf(&[1, -1], &[2, 2]));
        assert_eq!(c_coeff(2, 2).unwrap(), rf(&[1, 0, -1], &[2, 0, 2]));
        assert_eq!(c_coeff(0, 1), Err(Error::ZeroCoefficientIndex));
        assert!(c_coeff(1, 0).unwrap().is_one());
        assert!(c_coeff(4, 0).unwrap().is_zero());
    }

    #[test]
    fn eval_and_limit_examples() {
        assert_eq!(c_coeff(2, 1).unwrap().eval_at(&rat(1, 2)).unwrap(), rat(1, 6));
        assert_eq!(c_coeff(2, 1).unwrap().limit_q1().unwrap(), int(0));
        let inv3 = q_number(3, 1).inv().unwrap();
        assert_eq!(inv3.limit_q1().unwrap(), rat(1, 3));
        let f = QRationalFunction::q_power(3).div(&q_factorial(4, 1)).unwrap();
        assert_eq!(f.limit_q1().unwrap(), rat(1, 24));
    }
}
