use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{Field, FieldError, Rational};

/// An element `r + s*sqrt5` of the real quadratic extension of the
/// rationals by `sqrt5`. Since `sqrt5` is irrational the representation
/// is unique, so equality is componentwise and an element is zero iff
/// both parts are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    r: Rational,
    s: Rational,
}

impl QuadExt {
    pub fn new(r: Rational, s: Rational) -> Self {
        QuadExt { r, s }
    }

    /// Embeds a rational into the extension.
    pub fn from_rational(r: Rational) -> Self {
        QuadExt { r, s: Rational::zero() }
    }

    pub fn sqrt5() -> Self {
        QuadExt::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio `(1 + sqrt5)/2`.
    pub fn phi() -> Self {
        QuadExt::new(Rational::from((1, 2)), Rational::from((1, 2)))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.r
    }

    pub fn sqrt5_part(&self) -> &Rational {
        &self.s
    }

    /// `Some(r)` iff the `sqrt5` part vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.s.is_zero() {
            Some(self.r.clone())
        } else {
            None
        }
    }

    /// Galois conjugate `r - s*sqrt5`.
    pub fn conj(&self) -> Self {
        QuadExt::new(self.r.clone(), -self.s.clone())
    }

    /// Field norm `r^2 - 5 s^2`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        self.r.clone() * self.r.clone()
            - Rational::from(5) * self.s.clone() * self.s.clone()
    }

    /// Exact square root of a rational inside the extension: either the
    /// rational square root or a rational multiple of `sqrt5`.
    pub fn sqrt_of_rational(q: &Rational) -> Option<QuadExt> {
        if let Some(root) = q.sqrt_exact() {
            return Some(QuadExt::from_rational(root));
        }
        let fifth = q.clone() * Rational::from((1, 5));
        fifth
            .sqrt_exact()
            .map(|root| QuadExt::new(Rational::zero(), root))
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::from_rational(Rational::from(n))
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::from_rational(r)
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        QuadExt::new(self.r + rhs.r, self.s + rhs.s)
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        QuadExt::new(self.r - rhs.r, self.s - rhs.s)
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        // (a + b sqrt5)(c + d sqrt5) = ac + 5bd + (ad + bc) sqrt5
        let ac = self.r.clone() * rhs.r.clone();
        let bd = self.s.clone() * rhs.s.clone();
        let ad = self.r * rhs.s;
        let bc = self.s * rhs.r;
        QuadExt::new(ac + Rational::from(5) * bd, ad + bc)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-self.r, -self.s)
    }
}

impl Field for QuadExt {
    const NAME: &'static str = "QQ(sqrt5)";

    fn zero() -> Self {
        QuadExt::new(Rational::zero(), Rational::zero())
    }

    fn one() -> Self {
        QuadExt::from_rational(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    fn from_int(n: i64) -> Self {
        QuadExt::from(n)
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        // conjugate over norm; the norm is nonzero because sqrt5 is not rational
        let n = self.norm().inv()?;
        let c = self.conj();
        Ok(QuadExt::new(c.r * n.clone(), c.s * n))
    }
}

/// Serialized form is `p/q+r/s*sqrt5` with no spaces and explicit signs;
/// a vanishing `sqrt5` part prints as a plain rational.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_zero() {
            return write!(f, "{}", self.r);
        }
        if self.s.is_negative() {
            write!(f, "{}-{}*sqrt5", self.r, self.s.abs())
        } else {
            write!(f, "{}+{}*sqrt5", self.r, self.s)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for QuadExt {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, FieldError> {
        let err = || FieldError::Parse(s.to_string());
        match s.strip_suffix("*sqrt5") {
            None => Ok(QuadExt::from_rational(s.parse()?)),
            Some(head) => {
                // split at the last top-level sign separating the two parts;
                // position 0 is the sign of the rational part itself
                let split = head
                    .char_indices()
                    .skip(1)
                    .filter(|(i, c)| {
                        (*c == '+' || *c == '-')
                            && !head[..*i].ends_with('/')
                            && !head[..*i].ends_with('+')
                            && !head[..*i].ends_with('-')
                    })
                    .map(|(i, _)| i)
                    .last();
                match split {
                    None => {
                        let s_part: Rational = head.parse()?;
                        Ok(QuadExt::new(Rational::zero(), s_part))
                    }
                    Some(i) => {
                        let r_part: Rational = head[..i].parse()?;
                        let sign = if head.as_bytes()[i] == b'-' { -1 } else { 1 };
                        let mag: Rational = head[i + 1..].parse().map_err(|_| err())?;
                        Ok(QuadExt::new(r_part, Rational::from(sign) * mag))
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_pair_norm() {
        let a = QuadExt::new(Rational::one(), Rational::one()); // 1 + sqrt5
        let b = a.conj(); // 1 - sqrt5
        assert_eq!(a.clone() * b, QuadExt::from(-4));
        assert_eq!(a.norm(), Rational::from(-4));
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = QuadExt::phi();
        assert_eq!(phi.clone() * phi.clone(), phi.clone() + QuadExt::one());
        // phi^2 = (3 + sqrt5)/2
        assert_eq!(
            phi.clone() * phi,
            QuadExt::new(Rational::from((3, 2)), Rational::from((1, 2)))
        );
    }

    #[test]
    fn inverse_examples() {
        let phi = QuadExt::phi();
        assert_eq!(phi.inv().unwrap(), phi.clone() - QuadExt::one());
        let s5 = QuadExt::sqrt5();
        assert_eq!(
            s5.inv().unwrap(),
            QuadExt::new(Rational::zero(), Rational::from((1, 5)))
        );
        assert_eq!(
            QuadExt::from(2).inv().unwrap(),
            QuadExt::from_rational(Rational::from((1, 2)))
        );
        assert!(QuadExt::zero().inv().is_err());
    }

    #[test]
    fn rational_detection() {
        assert_eq!(QuadExt::from(7).as_rational(), Some(Rational::from(7)));
        assert_eq!(QuadExt::phi().as_rational(), None);
        // (3 - phi^2)(1 - 3 phi^2) = (-6 - 2 sqrt5)/4, not rational
        let phi2 = QuadExt::phi().pow(2);
        let prod = (QuadExt::from(3) - phi2.clone()) * (QuadExt::one() - QuadExt::from(3) * phi2);
        assert_eq!(
            prod,
            QuadExt::new(Rational::from((-3, 2)), Rational::from((-1, 2)))
        );
        assert_eq!(prod.as_rational(), None);
        // and it equals -phi^2
        assert_eq!(prod, -QuadExt::phi().pow(2));
    }

    #[test]
    fn sqrt_of_rational_in_extension() {
        assert_eq!(
            QuadExt::sqrt_of_rational(&Rational::from(5)),
            Some(QuadExt::sqrt5())
        );
        assert_eq!(
            QuadExt::sqrt_of_rational(&Rational::from((9, 4))),
            Some(QuadExt::from_rational(Rational::from((3, 2))))
        );
        // 45 = 9 * 5
        assert_eq!(
            QuadExt::sqrt_of_rational(&Rational::from(45)),
            Some(QuadExt::new(Rational::zero(), Rational::from(3)))
        );
        assert_eq!(QuadExt::sqrt_of_rational(&Rational::from(7)), None);
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            QuadExt::phi(),
            QuadExt::sqrt5(),
            -QuadExt::sqrt5(),
            QuadExt::from(-3),
            QuadExt::new(Rational::from((-3, 2)), Rational::from((-1, 2))),
            QuadExt::zero(),
        ];
        for v in cases {
            let s = v.to_string();
            assert!(!s.contains(' '));
            let back: QuadExt = s.parse().unwrap();
            assert_eq!(back, v, "round trip through {s:?}");
        }
        assert_eq!(QuadExt::phi().to_string(), "1/2+1/2*sqrt5");
        assert_eq!(QuadExt::sqrt5().to_string(), "0+1*sqrt5");
    }
}
