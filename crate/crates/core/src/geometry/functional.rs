//! Affine functionals and halfspaces over the free parameters `α_1..α_n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{denominator_lcm, format_rational, gcd_all, sign, Rational};
use crate::error::{Error, Result};

/// `value(α) = Σ c_i α_i − constant`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineFunctional {
    pub coefficients: Vec<Rational>,
    pub constant: Rational,
}

impl AffineFunctional {
    pub fn new(coefficients: Vec<Rational>, constant: Rational) -> Self {
        Self { coefficients, constant }
    }

    pub fn from_ints(coefficients: &[i64], constant: i64) -> Self {
        Self {
            coefficients: coefficients.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            constant: Rational::from_integer(constant.into()),
        }
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    /// All coefficients vanish, so the zero set is empty or everything.
    pub fn is_degenerate(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// The zero functional.
    pub fn is_zero(&self) -> bool {
        self.is_degenerate() && self.constant.is_zero()
    }

    pub fn evaluate(&self, alpha: &[Rational]) -> Result<Rational> {
        if alpha.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: alpha.len() });
        }
        let mut acc = -self.constant.clone();
        for (c, a) in self.coefficients.iter().zip(alpha) {
            acc += c * a;
        }
        Ok(acc)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            coefficients: self.coefficients.iter().map(|c| c * k).collect(),
            constant: &self.constant * k,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
            constant: &self.constant + &other.constant,
        }
    }

    /// Canonical form together with the sign of the positive or negative
    /// factor that produced it. Coefficients and constant become coprime
    /// integers with the first nonzero coefficient positive. A degenerate
    /// nonzero functional ends with constant `1`; the zero functional is
    /// returned unchanged.
    pub fn canonical_with_sign(&self) -> (Self, i8) {
        let all: Vec<&Rational> = self.coefficients.iter().chain(std::iter::once(&self.constant)).collect();
        let lcm = denominator_lcm(all.iter().copied());
        let ints: Vec<BigInt> = all.iter().map(|x| (*x * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = gcd_all(ints.iter());
        if g.is_zero() {
            return (self.clone(), 1);
        }
        let lead = self
            .coefficients
            .iter()
            .find(|c| !c.is_zero())
            .unwrap_or(&self.constant);
        let s: i8 = if lead.is_negative() { -1 } else { 1 };
        let factor = BigInt::from(s) * &g;
        let mut out: Vec<Rational> = ints.into_iter().map(|v| Rational::from_integer(v / &factor)).collect();
        let constant = out.pop().unwrap_or_default();
        (Self { coefficients: out, constant }, s)
    }

    pub fn canonical(&self) -> Self {
        self.canonical_with_sign().0
    }

    /// Whether two functionals have the same zero set.
    pub fn same_line(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Integer coefficients and constant of the canonical form.
    pub fn canonical_ints(&self) -> (Vec<BigInt>, BigInt) {
        let c = self.canonical();
        (
            c.coefficients.iter().map(|x| x.to_integer()).collect(),
            c.constant.to_integer(),
        )
    }

    /// Renders as `a·α1 + b·α2 = c` with exact coefficients as stored.
    pub fn equation(&self, relation: &str) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = format_rational(&c.abs());
            let body = if mag == "1" { format!("α{}", i + 1) } else { format!("{mag}·α{}", i + 1) };
            if terms.is_empty() {
                terms.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                terms.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        format!("{} {relation} {}", terms.join(" "), format_rational(&self.constant))
    }
}

impl fmt::Display for AffineFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.equation("="))
    }
}

/// Relation between `value(α)` and zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
}

impl Sense {
    pub fn is_strict(self) -> bool {
        matches!(self, Sense::Gt | Sense::Lt)
    }

    pub fn flip(self) -> Self {
        match self {
            Sense::Ge => Sense::Le,
            Sense::Gt => Sense::Lt,
            Sense::Le => Sense::Ge,
            Sense::Lt => Sense::Gt,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sense::Ge => "≥",
            Sense::Gt => ">",
            Sense::Le => "≤",
            Sense::Lt => "<",
        }
    }

    pub fn holds(self, s: i8) -> bool {
        match self {
            Sense::Ge => s >= 0,
            Sense::Gt => s > 0,
            Sense::Le => s <= 0,
            Sense::Lt => s < 0,
        }
    }

    /// The weak counterpart.
    pub fn closure(self) -> Self {
        match self {
            Sense::Gt => Sense::Ge,
            Sense::Lt => Sense::Le,
            s => s,
        }
    }
}

/// `value(α) sense 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub functional: AffineFunctional,
    pub sense: Sense,
}

impl Halfspace {
    pub fn new(functional: AffineFunctional, sense: Sense) -> Result<Self> {
        if functional.is_degenerate() {
            return Err(Error::Degenerate);
        }
        Ok(Self { functional, sense })
    }

    /// `Σ c_i α_i sense rhs`.
    pub fn from_lhs_rhs(coefficients: Vec<Rational>, sense: Sense, rhs: Rational) -> Result<Self> {
        Self::new(AffineFunctional::new(coefficients, rhs), sense)
    }

    pub fn contains(&self, alpha: &[Rational]) -> Result<bool> {
        Ok(self.sense.holds(sign(&self.functional.evaluate(alpha)?)))
    }

    /// Strict interior test.
    pub fn contains_strictly(&self, alpha: &[Rational]) -> Result<bool> {
        let s = sign(&self.functional.evaluate(alpha)?);
        Ok(s != 0 && self.sense.holds(s))
    }

    /// Canonical functional with the sense adjusted to the scaling sign.
    pub fn canonical(&self) -> Self {
        let (f, s) = self.functional.canonical_with_sign();
        Self { functional: f, sense: if s < 0 { self.sense.flip() } else { self.sense } }
    }

    /// Same halfspace written as `value ≤ 0` or `value < 0`.
    pub fn as_upper(&self) -> Self {
        match self.sense {
            Sense::Ge | Sense::Gt => Self {
                functional: self.functional.scale(&Rational::from_integer((-1).into())),
                sense: self.sense.flip(),
            },
            _ => self.clone(),
        }
    }

    pub fn describe(&self) -> String {
        self.functional.equation(self.sense.symbol())
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{int, rat};

    #[test]
    fn evaluate_examples() {
        let f = AffineFunctional::from_ints(&[1, 1], 3);
        assert_eq!(f.evaluate(&[int(1), int(2)]).unwrap(), int(0));
        assert_eq!(f.evaluate(&[int(0), int(0)]).unwrap(), int(-3));
        let g = AffineFunctional::from_ints(&[2, 0], 1);
        assert_eq!(g.evaluate(&[rat(3, 4), int(9)]).unwrap(), rat(1, 2));
        assert!(matches!(f.evaluate(&[int(1)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn canonical_form() {
        let f = AffineFunctional::new(vec![rat(-2, 3), rat(4, 3)], rat(2, 1));
        let c = f.canonical();
        assert_eq!(c, AffineFunctional::from_ints(&[1, -2], -3));
        assert_eq!(c.canonical(), c);
        assert!(f.same_line(&AffineFunctional::from_ints(&[-1, 2], 3)));
    }

    #[test]
    fn degenerate_detection() {
        assert!(AffineFunctional::from_ints(&[0, 0], 0).is_zero());
        assert!(AffineFunctional::from_ints(&[0, 0], 5).is_degenerate());
        assert!(!AffineFunctional::from_ints(&[0, 0], 5).is_zero());
        assert!(Halfspace::new(AffineFunctional::from_ints(&[0, 0], 1), Sense::Ge).is_err());
    }

    #[test]
    fn canonical_halfspace_keeps_meaning() {
        let h = Halfspace::new(AffineFunctional::from_ints(&[-2, 4], 6), Sense::Ge).unwrap();
        let c = h.canonical();
        assert_eq!(c.sense, Sense::Le);
        for p in [[int(0), int(0)], [int(0), int(5)], [int(-3), int(0)]] {
            assert_eq!(h.contains(&p).unwrap(), c.contains(&p).unwrap());
        }
    }

    #[test]
    fn equation_text() {
        let f = AffineFunctional::from_ints(&[-1, 2], 3);
        assert_eq!(f.equation("≥"), "-α1 + 2·α2 ≥ 3");
        assert_eq!(AffineFunctional::from_ints(&[1, 1], 3).to_string(), "α1 + α2 = 3");
    }
}
