use std::fmt;

use crate::algebra::ncpoly::NCPolynomial;
use crate::algebra::word::Generator;
use crate::field::QRationalFunction;

/// A nested q-commutator expression: the form the closed formulas are
/// written in. Base exponent e denotes [X, Y]_{q^e} = XY - q^e YX; e = 0 is
/// the classical commutator.
#[derive(Clone, Debug, PartialEq)]
pub enum CommutatorExpr {
    Leaf(Generator),
    Bracket {
        left: Box<CommutatorExpr>,
        right: Box<CommutatorExpr>,
        base_exponent: i64,
    },
    Sum(Vec<(QRationalFunction, CommutatorExpr)>),
}

impl CommutatorExpr {
    pub fn leaf(g: Generator) -> Self {
        CommutatorExpr::Leaf(g)
    }

    pub fn a() -> Self {
        Self::leaf(Generator::A)
    }

    pub fn b() -> Self {
        Self::leaf(Generator::B)
    }

    pub fn bracket(left: CommutatorExpr, right: CommutatorExpr, base_exponent: i64) -> Self {
        CommutatorExpr::Bracket {
            left: Box::new(left),
            right: Box::new(right),
            base_exponent,
        }
    }

    pub fn sum(terms: Vec<(QRationalFunction, CommutatorExpr)>) -> Self {
        CommutatorExpr::Sum(terms)
    }

    /// Expands brackets into words: leaves map to generators, brackets to
    /// L*R - q^e * R*L, sums linearly.
    pub fn expand(&self, n: usize) -> NCPolynomial {
        match self {
            CommutatorExpr::Leaf(g) => NCPolynomial::generator(*g),
            CommutatorExpr::Bracket {
                left,
                right,
                base_exponent,
            } => {
                let l = left.expand(n);
                let r = right.expand(n);
                l.q_commutator(&r, *base_exponent, n)
            }
            CommutatorExpr::Sum(terms) => {
                let mut out = NCPolynomial::zero();
                for (w, e) in terms {
                    out = out.add(&e.expand(n).scale(w));
                }
                out
            }
        }
    }

    /// Bracket notation with q-power subscripts: `[[B,A]_q, B]_q` etc.
    pub fn to_latex(&self) -> String {
        match self {
            CommutatorExpr::Leaf(g) => g.symbol().to_string(),
            CommutatorExpr::Bracket {
                left,
                right,
                base_exponent,
            } => {
                let sub = match base_exponent {
                    0 => String::new(),
                    1 => "_q".to_string(),
                    e => format!("_{{q^{{{e}}}}}"),
                };
                format!("[{}, {}]{}", left.to_latex(), right.to_latex(), sub)
            }
            CommutatorExpr::Sum(terms) => {
                let mut out = String::new();
                for (i, (w, e)) in terms.iter().enumerate() {
                    let neg = w.starts_negative();
                    let mag = if neg { w.neg() } else { w.clone() };
                    if i == 0 {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if neg { " - " } else { " + " });
                    }
                    let coeff = if mag.is_one() {
                        String::new()
                    } else {
                        let num_s = mag.num().render_with_content(&1i64.into());
                        let den_s = mag
                            .den()
                            .render_with_content(mag.num().content().denom());
                        if mag.is_polynomial() && mag.num().content().denom() == &1i64.into() {
                            if mag.num().term_count() > 1 {
                                format!("\\left({num_s}\\right)\\,")
                            } else {
                                format!("{num_s}\\,")
                            }
                        } else {
                            format!("\\frac{{{num_s}}}{{{den_s}}}\\,")
                        }
                    };
                    out.push_str(&coeff);
                    out.push_str(&e.to_latex());
                }
                out
            }
        }
    }
}

impl fmt::Display for CommutatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_latex())
    }
}
