use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{checked_pow, is_prime};
use crate::error::{Error, Result};

use super::abelian::PrimaryFactor;

/// Lower central exponent profile of the Sylow `p`-part of a nilpotent group
/// of finite exponent: `p^s[h-1]` is the exponent of the `h`-th lower central
/// term, so `s.len()` is the nilpotency class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PassivePrimePart {
    p: u64,
    s: Vec<u32>,
    derived_length: Option<u32>,
}

impl PassivePrimePart {
    pub fn new(p: u64, s: Vec<u32>, derived_length: Option<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s.is_empty() {
            return Err(Error::InvalidProfile("s must list at least one exponent".into()));
        }
        if s.iter().any(|&x| x == 0) {
            return Err(Error::InvalidProfile("every s(h) must be at least 1".into()));
        }
        if s.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidProfile(format!("s must be non-increasing, got {s:?}")));
        }
        if derived_length == Some(0) {
            return Err(Error::InvalidProfile("derived length of a non-trivial group is at least 1".into()));
        }
        Ok(PassivePrimePart { p, s, derived_length })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn class(&self) -> usize {
        self.s.len()
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    pub fn derived_length(&self) -> Option<u32> {
        self.derived_length
    }

    /// Parts of a direct product at the same prime: lower central terms and
    /// derived series multiply componentwise, so every parameter is a max.
    fn combine(&self, other: &PassivePrimePart) -> PassivePrimePart {
        debug_assert_eq!(self.p, other.p);
        let len = self.s.len().max(other.s.len());
        let s = (0..len)
            .map(|h| self.s.get(h).copied().unwrap_or(0).max(other.s.get(h).copied().unwrap_or(0)))
            .collect();
        let derived_length = self.derived_length.zip(other.derived_length).map(|(a, b)| a.max(b));
        PassivePrimePart { p: self.p, s, derived_length }
    }
}

/// One factor of a passive group expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PassiveItem {
    Dihedral8,
    Quaternion8,
    Cyclic(PrimaryFactor),
    Profile(PassivePrimePart),
}

impl PassiveItem {
    fn part(&self) -> Option<PassivePrimePart> {
        match self {
            PassiveItem::Dihedral8 | PassiveItem::Quaternion8 => {
                Some(PassivePrimePart { p: 2, s: vec![2, 1], derived_length: Some(2) })
            }
            PassiveItem::Cyclic(f) if f.mult.is_zero() => None,
            PassiveItem::Cyclic(f) => Some(PassivePrimePart { p: f.p, s: vec![f.u], derived_length: Some(1) }),
            PassiveItem::Profile(part) => Some(part.clone()),
        }
    }
}

impl fmt::Display for PassiveItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PassiveItem::Dihedral8 => f.write_str("D4"),
            PassiveItem::Quaternion8 => f.write_str("Q8"),
            PassiveItem::Cyclic(c) => write!(f, "{c}"),
            PassiveItem::Profile(part) => {
                let s: Vec<String> = part.s.iter().map(u32::to_string).collect();
                write!(f, "nilpotent(p={}, s=[{}]", part.p, s.join(","))?;
                if let Some(dl) = part.derived_length {
                    write!(f, ", derived_length={dl}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A nilpotent passive group of finite exponent, known through the
/// lower central profiles of its Sylow subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PassiveGroupSpec {
    parts: Vec<PassivePrimePart>,
    label: Option<String>,
}

impl PassiveGroupSpec {
    /// Builds a spec from explicit per-prime parts (distinct primes).
    pub fn from_parts(mut parts: Vec<PassivePrimePart>, label: Option<String>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Trivial("passive group"));
        }
        parts.sort_by_key(|part| part.p);
        if let Some(w) = parts.windows(2).find(|w| w[0].p == w[1].p) {
            return Err(Error::InvalidProfile(format!("prime {} listed twice", w[0].p)));
        }
        Ok(PassiveGroupSpec { parts, label })
    }

    /// Direct product of preset items. The label is the canonical rendering
    /// of the items, sorted, so that reordered products compare identical.
    pub fn from_items(items: Vec<PassiveItem>) -> Result<Self> {
        let mut parts: Vec<PassivePrimePart> = Vec::new();
        for part in items.iter().filter_map(PassiveItem::part) {
            match parts.iter_mut().find(|q| q.p == part.p) {
                Some(q) => *q = q.combine(&part),
                None => parts.push(part),
            }
        }
        let mut names: Vec<String> = items.iter().map(ToString::to_string).collect();
        names.sort();
        Self::from_parts(parts, Some(names.join(" * ")))
    }

    pub fn preset(name: &str) -> Result<Self> {
        name.parse()
    }

    pub fn parts(&self) -> &[PassivePrimePart] {
        &self.parts
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn part(&self, p: u64) -> Option<&PassivePrimePart> {
        self.parts.iter().find(|part| part.p == p)
    }

    pub fn primes(&self) -> Vec<u64> {
        self.parts.iter().map(|part| part.p).collect()
    }

    /// Overall nilpotency class: the largest class of a Sylow part.
    pub fn class(&self) -> usize {
        self.parts.iter().map(PassivePrimePart::class).max().unwrap_or(0)
    }

    pub fn derived_length(&self) -> Option<u32> {
        self.parts
            .iter()
            .map(PassivePrimePart::derived_length)
            .try_fold(0, |acc, dl| dl.map(|d| acc.max(d)))
    }

    pub fn exponent(&self) -> Result<u64> {
        self.parts.iter().try_fold(1u64, |acc, part| {
            let pp = checked_pow(part.p, part.s[0], "passive exponent")?;
            acc.checked_mul(pp).ok_or(Error::Overflow("passive exponent"))
        })
    }

    /// Same Sylow profiles and the same preset label.
    pub fn is_identical(&self, other: &PassiveGroupSpec) -> bool {
        self == other
    }
}

impl fmt::Display for PassiveGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(label) = &self.label {
            return f.write_str(label);
        }
        let items: Vec<String> = self
            .parts
            .iter()
            .map(|part| PassiveItem::Profile(part.clone()).to_string())
            .collect();
        f.write_str(&items.join(" * "))
    }
}
