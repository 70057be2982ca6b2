//! Exact rational arithmetic for bound comparisons.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Exact rational number. Desk-scale quantities (n, r, |E|) fit comfortably
/// in 128-bit numerators and denominators.
pub type Rational = Ratio<i128>;

pub fn rat(num: i128, den: i128) -> Rational {
    Ratio::new(num, den)
}

pub fn int(v: usize) -> Rational {
    Ratio::from_integer(v as i128)
}

/// Smallest integer order that satisfies "at least `bound` vertices".
pub fn ceil_order(bound: &Rational) -> usize {
    let c = bound.ceil().to_integer();
    if c <= 0 {
        0
    } else {
        c as usize
    }
}

/// Numerator/denominator pair used in every serialized format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i128,
    pub den: i128,
}

impl From<Rational> for Fraction {
    fn from(r: Rational) -> Self {
        Fraction { num: *r.numer(), den: *r.denom() }
    }
}

impl Fraction {
    /// Returns `None` for a zero denominator.
    pub fn to_rational(self) -> Option<Rational> {
        if self.den == 0 {
            None
        } else {
            Some(Ratio::new(self.num, self.den))
        }
    }

    /// True when the pair is already in lowest terms with a positive denominator.
    pub fn is_reduced(self) -> bool {
        self.den > 0 && self.num.gcd(&self.den) == 1
    }
}

/// Serializes a [`Rational`] as a `{num, den}` object.
pub fn serialize<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    Fraction::from(*r).serialize(s)
}

pub fn display(r: &Rational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal approximation, only ever used for human-readable output.
pub fn approx(r: &Rational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().abs().to_f64().unwrap_or(f64::NAN);
    if r.denom().is_negative() {
        -n / d
    } else {
        n / d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceiling_of_fractional_bounds() {
        assert_eq!(ceil_order(&rat(34, 9)), 4);
        assert_eq!(ceil_order(&rat(8, 2)), 4);
        assert_eq!(ceil_order(&rat(7, 2)), 4);
        assert_eq!(ceil_order(&rat(0, 1)), 0);
    }

    #[test]
    fn fraction_round_trip() {
        let f = Fraction::from(rat(6, 4));
        assert_eq!(f, Fraction { num: 3, den: 2 });
        assert!(f.is_reduced());
        assert_eq!(f.to_rational(), Some(rat(3, 2)));
        assert_eq!(Fraction { num: 1, den: 0 }.to_rational(), None);
        assert!(!Fraction { num: 2, den: 4 }.is_reduced());
    }

    #[test]
    fn display_forms() {
        assert_eq!(display(&rat(4, 1)), "4");
        assert_eq!(display(&rat(34, 9)), "34/9");
    }
}
