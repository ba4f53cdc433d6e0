//! Exact non-negative fractions for complexity values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

/// A reduced fraction `num/den` with `den >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("expected `p/q` or an integer, got {0:?}")]
    Syntax(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Panics when `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den);
        Rational { num: num / g, den: den / g }
    }

    pub fn from_int(v: u64) -> Self {
        Rational { num: v, den: 1 }
    }

    pub fn numer(self) -> u64 {
        self.num
    }

    pub fn denom(self) -> u64 {
        self.den
    }

    pub fn recip(self) -> Self {
        Rational::new(self.den, self.num)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseRationalError::Syntax(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse::<u64>().map_err(|_| bad())?, q.trim().parse::<u64>().map_err(|_| bad())?),
            None => (s.parse::<u64>().map_err(|_| bad())?, 1),
        };
        if q == 0 {
            return Err(ParseRationalError::ZeroDenominator);
        }
        Ok(Rational::new(p, q))
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_renders() {
        assert_eq!(Rational::new(4, 6).to_string(), "2/3");
        assert_eq!(Rational::new(0, 9), Rational::ZERO);
        assert_eq!(Rational::ZERO.to_string(), "0/1");
        assert_eq!("3/9".parse::<Rational>().unwrap(), Rational::new(1, 3));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_int(7));
        assert_eq!("1/0".parse::<Rational>(), Err(ParseRationalError::ZeroDenominator));
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Rational::new(3, 5) < Rational::new(2, 3));
        assert!(Rational::new(1, 2) < Rational::new(1, 1));
        assert_eq!(Rational::new(2, 4).cmp(&Rational::new(1, 2)), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn parse_display_roundtrip(p in 0u64..10_000, q in 1u64..10_000) {
            let r = Rational::new(p, q);
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
            prop_assert_eq!(r.numer().gcd(&r.denom()).max(1), 1);
        }
    }
}
