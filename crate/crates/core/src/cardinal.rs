//! Multiplicities of cyclic factors: finite naturals or symbolic alephs.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A cardinal number as it occurs in a primary decomposition.
///
/// Only the order structure is modelled: every finite cardinal lies below
/// every aleph, and `Aleph(i) < Aleph(j)` iff `i < j`. The derived `Ord`
/// relies on the variant order below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cardinal {
    Finite(u64),
    Aleph(u32),
}

impl Cardinal {
    pub const ZERO: Cardinal = Cardinal::Finite(0);
    pub const ONE: Cardinal = Cardinal::Finite(1);
    pub const ALEPH_0: Cardinal = Cardinal::Aleph(0);

    pub fn compare(self, other: Cardinal) -> Ordering {
        self.cmp(&other)
    }

    pub fn max(self, other: Cardinal) -> Cardinal {
        Ord::max(self, other)
    }

    /// Cardinal sum. Finite parts add (saturating at `u64::MAX`); an infinite
    /// operand absorbs the other one.
    pub fn sum(self, other: Cardinal) -> Cardinal {
        match (self, other) {
            (Cardinal::Finite(a), Cardinal::Finite(b)) => Cardinal::Finite(a.saturating_add(b)),
            _ => Ord::max(self, other),
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Cardinal::Aleph(_))
    }

    pub fn is_zero(self) -> bool {
        self == Cardinal::ZERO
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Cardinal::Finite(n) => Some(n),
            Cardinal::Aleph(_) => None,
        }
    }
}

impl Default for Cardinal {
    fn default() -> Self {
        Cardinal::ZERO
    }
}

impl From<u64> for Cardinal {
    fn from(n: u64) -> Self {
        Cardinal::Finite(n)
    }
}

impl std::iter::Sum for Cardinal {
    fn sum<I: Iterator<Item = Cardinal>>(iter: I) -> Self {
        iter.fold(Cardinal::ZERO, Cardinal::sum)
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Aleph(k) => write!(f, "aleph_{k}"),
        }
    }
}

impl FromStr for Cardinal {
    type Err = Error;

    /// Accepts decimal digits, `aleph` (read as `aleph_0`) and `aleph_<k>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::InvalidCardinal(s.to_string());
        if let Some(rest) = s.strip_prefix("aleph") {
            if rest.is_empty() {
                return Ok(Cardinal::ALEPH_0);
            }
            let digits = rest.strip_prefix('_').ok_or_else(bad)?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            return digits.parse().map(Cardinal::Aleph).map_err(|_| bad());
        }
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map(Cardinal::Finite).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Cardinal::{Aleph, Finite};

    #[test]
    fn compare_examples() {
        assert_eq!(Finite(6).compare(Aleph(0)), Ordering::Less);
        assert_eq!(Aleph(0).compare(Aleph(1)), Ordering::Less);
        assert_eq!(Finite(5).compare(Finite(5)), Ordering::Equal);
        assert_eq!(Finite(u64::MAX).compare(Aleph(0)), Ordering::Less);
    }

    #[test]
    fn max_examples() {
        assert_eq!(Aleph(0).max(Aleph(1)), Aleph(1));
        assert_eq!(Finite(9).max(Aleph(0)), Aleph(0));
        assert_eq!(Finite(3).max(Finite(7)), Finite(7));
    }

    #[test]
    fn sum_examples() {
        assert_eq!(Finite(2).sum(Finite(3)), Finite(5));
        assert_eq!(Finite(8).sum(Aleph(0)), Aleph(0));
        assert_eq!(Aleph(1).sum(Aleph(0)), Aleph(1));
    }

    #[test]
    fn is_infinite_examples() {
        assert!(Aleph(0).is_infinite());
        assert!(!Finite(0).is_infinite());
        assert!(!Finite(1_000_000_000).is_infinite());
    }

    #[test]
    fn text_form() {
        assert_eq!("aleph".parse::<Cardinal>().unwrap(), Aleph(0));
        assert_eq!("aleph_3".parse::<Cardinal>().unwrap(), Aleph(3));
        assert_eq!("17".parse::<Cardinal>().unwrap(), Finite(17));
        assert_eq!(Aleph(0).to_string(), "aleph_0");
        assert_eq!(Finite(42).to_string(), "42");
        for bad in ["", "aleph_", "alephs", "-1", "aleph_x", "1e3"] {
            assert!(bad.parse::<Cardinal>().is_err(), "{bad:?} should not parse");
        }
    }

    fn cardinal() -> impl Strategy<Value = Cardinal> {
        prop_oneof![
            3 => (0u64..50).prop_map(Finite),
            1 => (0u32..4).prop_map(Aleph),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn order_is_total(a in cardinal(), b in cardinal(), c in cardinal()) {
            let ab = a.compare(b);
            prop_assert_eq!(ab, b.compare(a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if a.compare(b) != Ordering::Greater && b.compare(c) != Ordering::Greater {
                prop_assert_ne!(a.compare(c), Ordering::Greater);
            }
            if a.is_infinite() != b.is_infinite() {
                prop_assert_eq!(ab == Ordering::Less, b.is_infinite());
            }
        }

        #[test]
        fn max_and_sum_laws(a in cardinal(), b in cardinal(), c in cardinal()) {
            prop_assert_eq!(a.max(b), b.max(a));
            prop_assert_eq!(a.max(b).max(c), a.max(b.max(c)));
            prop_assert_eq!(a.max(a), a);
            prop_assert_eq!(a.sum(b), b.sum(a));
            prop_assert_eq!(a.sum(b).sum(c), a.sum(b.sum(c)));
            prop_assert_eq!(a.sum(Cardinal::ZERO), a);
            prop_assert_eq!(a.sum(b).is_infinite(), a.is_infinite() || b.is_infinite());
        }

        #[test]
        fn display_parse_roundtrip(a in cardinal()) {
            prop_assert_eq!(a.to_string().parse::<Cardinal>().unwrap(), a);
        }
    }
}
