use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{checked_pow, is_prime, valuation};
use crate::cardinal::Cardinal;
use crate::error::{Error, Result};

/// `mult` copies of the cyclic group of order `p^u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimaryFactor {
    pub p: u64,
    pub u: u32,
    pub mult: Cardinal,
}

impl PrimaryFactor {
    pub fn new(p: u64, u: u32, mult: Cardinal) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if u == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(PrimaryFactor { p, u, mult })
    }

    /// Shorthand for tests and presets; panics on invalid input.
    pub fn finite(p: u64, u: u32, mult: u64) -> Self {
        Self::new(p, u, Cardinal::Finite(mult)).expect("valid primary factor")
    }

    fn coincides_finitely(&self, other: &PrimaryFactor) -> bool {
        self == other && !self.mult.is_infinite()
    }
}

impl fmt::Display for PrimaryFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.u == 1 {
            write!(f, "C_{}", self.p)?;
        } else {
            write!(f, "C_{{{}^{}}}", self.p, self.u)?;
        }
        match self.mult {
            Cardinal::Finite(1) => Ok(()),
            Cardinal::Finite(n) => write!(f, "^{n}"),
            aleph => write!(f, "^{{{aleph}}}"),
        }
    }
}

/// Normalized primary decomposition of an abelian group of finite exponent.
///
/// Factors are sorted by prime ascending, then by `u` descending; `(p, u)`
/// pairs are distinct and no multiplicity is zero. The empty list is the
/// trivial group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<PrimaryFactor>", from = "Vec<PrimaryFactor>")]
pub struct AbelianGroupSpec {
    factors: Vec<PrimaryFactor>,
}

impl From<AbelianGroupSpec> for Vec<PrimaryFactor> {
    fn from(spec: AbelianGroupSpec) -> Self {
        spec.factors
    }
}

impl From<Vec<PrimaryFactor>> for AbelianGroupSpec {
    fn from(factors: Vec<PrimaryFactor>) -> Self {
        AbelianGroupSpec::normalize(factors)
    }
}

/// Where two primary components stop coinciding.
///
/// `t` is the 1-based index of the first factor pair that is not a pair of
/// equal finite factors. `w` is the larger of the two cyclic exponents at
/// index `t`, a missing factor counting as the same cycle with multiplicity
/// zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivergenceReport {
    pub t: usize,
    pub w: u32,
}

impl AbelianGroupSpec {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn normalize(mut factors: Vec<PrimaryFactor>) -> Self {
        factors.sort_by(|x, y| x.p.cmp(&y.p).then(y.u.cmp(&x.u)));
        let mut merged: Vec<PrimaryFactor> = Vec::with_capacity(factors.len());
        for f in factors {
            match merged.last_mut() {
                Some(last) if last.p == f.p && last.u == f.u => last.mult = last.mult.sum(f.mult),
                _ => merged.push(f),
            }
        }
        merged.retain(|f| !f.mult.is_zero());
        AbelianGroupSpec { factors: merged }
    }

    pub fn cyclic(p: u64, u: u32) -> Result<Self> {
        Ok(Self::normalize(vec![PrimaryFactor::new(p, u, Cardinal::ONE)?]))
    }

    pub fn factors(&self) -> &[PrimaryFactor] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|f| !f.mult.is_infinite())
    }

    /// Distinct primes, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.factors.iter().map(|f| f.p).collect();
        ps.dedup();
        ps
    }

    /// The unique prime of a non-trivial primary component; `None` when trivial.
    pub fn single_prime(&self) -> Result<Option<u64>> {
        match self.primes().as_slice() {
            [] => Ok(None),
            [p] => Ok(Some(*p)),
            [p, q, ..] => Err(Error::MixedPrimes(*p, *q)),
        }
    }

    /// Largest cyclic exponent `u` among the `p`-factors, zero if `p` is absent.
    pub fn max_u(&self, p: u64) -> u32 {
        self.factors.iter().filter(|f| f.p == p).map(|f| f.u).max().unwrap_or(0)
    }

    pub fn exponent(&self) -> Result<u64> {
        self.primes().into_iter().try_fold(1u64, |acc, p| {
            let pp = checked_pow(p, self.max_u(p), "exponent")?;
            acc.checked_mul(pp).ok_or(Error::Overflow("exponent"))
        })
    }

    pub fn p_component(&self, p: u64) -> AbelianGroupSpec {
        AbelianGroupSpec {
            factors: self.factors.iter().filter(|f| f.p == p).copied().collect(),
        }
    }

    /// The power subgroup `B^k`. `k = 0` yields the trivial group.
    pub fn power(&self, k: u64) -> AbelianGroupSpec {
        if k == 0 {
            return Self::trivial();
        }
        let factors = self
            .factors
            .iter()
            .filter_map(|f| {
                let drop = valuation(k, f.p);
                (f.u > drop).then(|| PrimaryFactor { u: f.u - drop, ..*f })
            })
            .collect();
        Self::normalize(factors)
    }

    pub fn direct_product(&self, other: &AbelianGroupSpec) -> AbelianGroupSpec {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self::normalize(factors)
    }

    /// `log_p` of the order of a finite `p`-group.
    pub fn log_order(&self, p: u64) -> Result<u64> {
        self.factors.iter().try_fold(0u64, |acc, f| {
            if f.p != p {
                return Err(Error::WrongPrime { expected: p, found: f.p });
            }
            let m = f.mult.finite().ok_or(Error::Infinite("group"))?;
            m.checked_mul(u64::from(f.u))
                .and_then(|x| acc.checked_add(x))
                .ok_or(Error::Overflow("group order"))
        })
    }

    fn first_infinite(&self) -> Option<usize> {
        self.factors.iter().position(|f| f.mult.is_infinite())
    }

    /// Equivalence of two primary components for one prime: equal when both
    /// are finite; when both are infinite, equal prefixes before the first
    /// infinite factor and the same cycle at that factor.
    pub fn equivalent_p(&self, other: &AbelianGroupSpec) -> Result<bool> {
        let (pa, pb) = (self.single_prime()?, other.single_prime()?);
        if let (Some(pa), Some(pb)) = (pa, pb) {
            if pa != pb {
                return Err(Error::MixedPrimes(pa, pb));
            }
        }
        Ok(match (self.first_infinite(), other.first_infinite()) {
            (None, None) => self == other,
            (Some(k), Some(l)) => {
                k == l && self.factors[..k] == other.factors[..k] && self.factors[k].u == other.factors[k].u
            }
            _ => false,
        })
    }

    /// Componentwise equivalence at every prime occurring in either group.
    pub fn equivalent(&self, other: &AbelianGroupSpec) -> bool {
        let mut primes = self.primes();
        primes.extend(other.primes());
        primes.sort_unstable();
        primes.dedup();
        primes.into_iter().all(|p| {
            self.p_component(p)
                .equivalent_p(&other.p_component(p))
                .expect("p-components have a single prime")
        })
    }

    /// First index at which the `p`-components stop being coinciding finite
    /// factors, or `None` when they are equivalent.
    pub fn divergence(&self, other: &AbelianGroupSpec, p: u64) -> Option<DivergenceReport> {
        let (a, b) = (self.p_component(p), other.p_component(p));
        if a.equivalent_p(&b).expect("p-components have a single prime") {
            return None;
        }
        let prefix = a
            .factors
            .iter()
            .zip(&b.factors)
            .take_while(|(x, y)| x.coincides_finitely(y))
            .count();
        let u_a = a.factors.get(prefix).map_or(0, |f| f.u);
        let u_b = b.factors.get(prefix).map_or(0, |f| f.u);
        Some(DivergenceReport {
            t: prefix + 1,
            w: u_a.max(u_b),
        })
    }
}

impl fmt::Display for AbelianGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}
