//! K_p-series of finite abelian p-groups and the nilpotency class of
//! nilpotent wreath products.
//!
//! For an abelian active group `B` only the power subgroups `B^{p^j}`
//! contribute to `K_{i,p}(B)`, so the `i`-th term is `B^{p^j}` for the least
//! `j` with `p^j >= i`. With `d` the last index of a non-trivial term and
//! `p^{e(s)} = |K_s / K_{s+1}|`, the class of `A Wr B` is
//! `max_h { a*h + (s(h) - 1)*b }` where `a = 1 + (p-1) * sum_s s*e(s)` and
//! `b = (p-1)*d`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupspec::{AbelianGroupSpec, PassiveGroupSpec, PassivePrimePart};

/// Upper bound on `d`; chains are stored densely.
pub const MAX_CHAIN_LEN: u64 = 1 << 20;

/// `K_{1,p}(B), ..., K_{d+1,p}(B)`; the last term is trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KpChain {
    pub p: u64,
    pub terms: Vec<AbelianGroupSpec>,
}

impl KpChain {
    /// `K_{i,p}` for `i >= 1`; indices past the chain are trivial.
    pub fn term(&self, i: usize) -> AbelianGroupSpec {
        assert!(i >= 1, "K_p-series is indexed from 1");
        self.terms.get(i - 1).cloned().unwrap_or_default()
    }

    /// Index of the last non-trivial term.
    pub fn d(&self) -> u64 {
        self.terms.len() as u64 - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShieldParams {
    pub p: u64,
    pub d: u64,
    /// `e(1), ..., e(d)`, zeros included.
    pub e: Vec<u64>,
    pub a: u64,
    pub b: u64,
}

impl ShieldParams {
    /// Parameters of the trivial active group: `A Wr 1 = A`, and the formula
    /// degenerates to the class of `A`.
    pub fn trivial(p: u64) -> Self {
        ShieldParams { p, d: 0, e: Vec::new(), a: 1, b: 0 }
    }

    /// `max_h { a*h + (s(h)-1)*b }` over the lower central profile of `part`.
    pub fn class_for(&self, part: &PassivePrimePart) -> Result<u64> {
        if part.p() != self.p {
            return Err(Error::WrongPrime { expected: self.p, found: part.p() });
        }
        let overflow = || Error::Overflow("nilpotency class");
        part.s()
            .iter()
            .enumerate()
            .map(|(h, &s)| {
                let h = h as u64 + 1;
                let ah = self.a.checked_mul(h).ok_or_else(overflow)?;
                let sb = u64::from(s - 1).checked_mul(self.b).ok_or_else(overflow)?;
                ah.checked_add(sb).ok_or_else(overflow)
            })
            .try_fold(0u64, |best, v| v.map(|v| best.max(v)))
    }
}

fn check_finite_p_group(b: &AbelianGroupSpec, p: u64) -> Result<()> {
    if b.is_trivial() {
        return Err(Error::Trivial("active group"));
    }
    if !b.is_finite() {
        return Err(Error::Infinite("active group"));
    }
    if let Some(q) = b.primes().into_iter().find(|&q| q != p) {
        return Err(Error::WrongPrime { expected: p, found: q });
    }
    Ok(())
}

pub fn kp_series(b: &AbelianGroupSpec, p: u64) -> Result<KpChain> {
    check_finite_p_group(b, p)?;
    let top = b.max_u(p);
    let d = crate::arith::checked_pow(p, top - 1, "K_p-series length")?;
    if d > MAX_CHAIN_LEN {
        return Err(Error::ChainTooLong(d));
    }
    let mut terms = Vec::with_capacity(d as usize + 1);
    // p^j is the least power of p that is >= i
    let mut pj: u64 = 1;
    for i in 1..=d + 1 {
        if pj < i {
            pj *= p;
        }
        terms.push(b.power(pj));
    }
    debug_assert!(terms.last().is_some_and(AbelianGroupSpec::is_trivial));
    debug_assert!(!terms[d as usize - 1].is_trivial());
    Ok(KpChain { p, terms })
}

pub fn params_from_chain(chain: &KpChain) -> Result<ShieldParams> {
    let p = chain.p;
    let logs = chain
        .terms
        .iter()
        .map(|k| k.log_order(p))
        .collect::<Result<Vec<u64>>>()?;
    let e: Vec<u64> = logs.windows(2).map(|w| w[0] - w[1]).collect();
    let d = e.len() as u64;
    let overflow = || Error::Overflow("Shield parameter a");
    let weighted = e.iter().enumerate().try_fold(0u64, |acc, (s, &es)| {
        (s as u64 + 1).checked_mul(es).and_then(|x| acc.checked_add(x)).ok_or_else(overflow)
    })?;
    let a = (p - 1)
        .checked_mul(weighted)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(overflow)?;
    let b = (p - 1).checked_mul(d).ok_or(Error::Overflow("Shield parameter b"))?;
    Ok(ShieldParams { p, d, e, a, b })
}

pub fn shield_params(b: &AbelianGroupSpec, p: u64) -> Result<ShieldParams> {
    params_from_chain(&kp_series(b, p)?)
}

/// Why `A Wr B` fails the nilpotency criterion, or `None` when it is nilpotent.
pub fn baumslag_obstruction(a: &PassiveGroupSpec, b: &AbelianGroupSpec) -> Result<Option<String>> {
    if b.is_trivial() {
        return Err(Error::Trivial("active group"));
    }
    let a_primes = a.primes();
    if a_primes.len() != 1 {
        return Ok(Some(format!(
            "passive group is not a p-group (primes {a_primes:?})"
        )));
    }
    let p = a_primes[0];
    let b_primes = b.primes();
    if b_primes != [p] {
        return Ok(Some(format!(
            "active group is not a {p}-group (primes {b_primes:?})"
        )));
    }
    if !b.is_finite() {
        return Ok(Some("active group infinite".to_string()));
    }
    Ok(None)
}

pub fn baumslag_nilpotent(a: &PassiveGroupSpec, b: &AbelianGroupSpec) -> Result<bool> {
    Ok(baumslag_obstruction(a, b)?.is_none())
}

pub fn shield_class(a: &PassiveGroupSpec, b: &AbelianGroupSpec) -> Result<u64> {
    if let Some(reason) = baumslag_obstruction(a, b)? {
        return Err(Error::NotNilpotent(reason));
    }
    let part = &a.parts()[0];
    shield_params(b, part.p())?.class_for(part)
}

pub fn wreath_exponent(a: &PassiveGroupSpec, b: &AbelianGroupSpec) -> Result<u64> {
    if b.is_trivial() {
        return Err(Error::Trivial("active group"));
    }
    a.exponent()?
        .checked_mul(b.exponent()?)
        .ok_or(Error::Overflow("wreath product exponent"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> AbelianGroupSpec {
        text.parse().unwrap()
    }

    fn passive(text: &str) -> PassiveGroupSpec {
        text.parse().unwrap()
    }

    #[test]
    fn kp_series_examples() {
        let chain = kp_series(&spec("C_9^2"), 3).unwrap();
        assert_eq!(chain.terms, [spec("C_9^2"), spec("C_3^2"), spec("C_3^2"), spec("1")]);
        assert_eq!(chain.d(), 3);
        assert!(chain.term(7).is_trivial());

        let chain = kp_series(&spec("C_4^3 * C_2"), 2).unwrap();
        assert_eq!(chain.terms, [spec("C_4^3 * C_2"), spec("C_2^3"), spec("1")]);

        let chain = kp_series(&spec("C_2"), 2).unwrap();
        assert_eq!(chain.terms, [spec("C_2"), spec("1")]);
    }

    #[test]
    fn kp_series_errors() {
        assert_eq!(kp_series(&spec("1"), 2), Err(Error::Trivial("active group")));
        assert_eq!(kp_series(&spec("C_2^{aleph_0}"), 2), Err(Error::Infinite("active group")));
        assert_eq!(
            kp_series(&spec("C_2 * C_3"), 2),
            Err(Error::WrongPrime { expected: 2, found: 3 })
        );
        assert_eq!(kp_series(&spec("C_{2^40}"), 2), Err(Error::ChainTooLong(1 << 39)));
    }

    #[test]
    fn shield_params_examples() {
        let cases = [
            ("C_9^2", 3, 3, vec![2, 0, 2], 17, 6),
            ("C_9 * C_3^4", 3, 3, vec![5, 0, 1], 17, 6),
            ("C_4^3 * C_2", 2, 2, vec![4, 3], 11, 2),
            ("C_8", 2, 4, vec![1, 1, 0, 1], 8, 4),
        ];
        for (b, p, d, e, a, bb) in cases {
            let params = shield_params(&spec(b), p).unwrap();
            assert_eq!(params, ShieldParams { p, d, e, a, b: bb }, "{b}");
        }
    }

    #[test]
    fn shield_class_examples() {
        assert_eq!(shield_class(&passive("C_3"), &spec("C_9^2")).unwrap(), 17);
        assert_eq!(shield_class(&passive("C_3"), &spec("C_9 * C_3^4")).unwrap(), 17);
        assert_eq!(shield_class(&passive("D4"), &spec("C_4^3 * C_2")).unwrap(), 22);
        assert_eq!(shield_class(&passive("Q8"), &spec("C_4 * C_2^7")).unwrap(), 22);
        assert_eq!(shield_class(&passive("C_2"), &spec("C_2")).unwrap(), 2);
        assert_eq!(shield_class(&passive("C_2"), &spec("C_4")).unwrap(), 4);
        assert_eq!(shield_class(&passive("C_2"), &spec("C_8")).unwrap(), 8);
        assert!(matches!(
            shield_class(&passive("D4"), &spec("C_4^3 * C_2^{aleph_0}")),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn baumslag_examples() {
        assert!(baumslag_nilpotent(&passive("C_2"), &spec("C_4")).unwrap());
        assert!(baumslag_nilpotent(&passive("C_3"), &spec("C_9^2")).unwrap());
        assert!(!baumslag_nilpotent(&passive("D4"), &spec("C_4^3 * C_2^{aleph_0}")).unwrap());
        assert!(!baumslag_nilpotent(&passive("D4 * C_3"), &spec("C_4")).unwrap());
        assert!(!baumslag_nilpotent(&passive("C_3"), &spec("C_4")).unwrap());
        assert!(baumslag_nilpotent(&passive("C_3"), &spec("1")).is_err());
    }

    #[test]
    fn wreath_exponent_examples() {
        assert_eq!(wreath_exponent(&passive("C_3"), &spec("C_9^2")).unwrap(), 27);
        assert_eq!(wreath_exponent(&passive("D4"), &spec("C_4^3 * C_2")).unwrap(), 16);
        assert_eq!(wreath_exponent(&passive("C_2"), &spec("C_2")).unwrap(), 4);
        assert!(wreath_exponent(&passive("C_2"), &spec("1")).is_err());
    }

    #[test]
    fn trivial_params_give_passive_class() {
        let q8 = passive("Q8");
        assert_eq!(ShieldParams::trivial(2).class_for(&q8.parts()[0]).unwrap(), 2);
        assert!(ShieldParams::trivial(3).class_for(&q8.parts()[0]).is_err());
    }
}
