#![allow(dead_code)]

use proptest::prelude::*;
use varwreath::{AbelianGroupSpec, Cardinal, PassiveGroupSpec, PassivePrimePart, PrimaryFactor};

pub const PRIMES: [u64; 4] = [2, 3, 5, 7];

pub fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(&PRIMES[..])
}

/// Multiplicities from a deliberately small range so that random pairs
/// collide often.
pub fn cardinal() -> impl Strategy<Value = Cardinal> {
    prop_oneof![
        4 => (0u64..4).prop_map(Cardinal::Finite),
        1 => (0u32..2).prop_map(Cardinal::Aleph),
    ]
}

pub fn finite_cardinal() -> impl Strategy<Value = Cardinal> {
    (0u64..4).prop_map(Cardinal::Finite)
}

fn spec_from(p: u64, raw: Vec<(u32, Cardinal)>) -> AbelianGroupSpec {
    AbelianGroupSpec::normalize(
        raw.into_iter()
            .map(|(u, m)| PrimaryFactor::new(p, u, m).expect("valid factor"))
            .collect(),
    )
}

/// A `p`-group spec with factors `C_{p^u}`, `1 <= u <= max_u`.
pub fn p_spec_with(
    p: u64,
    max_u: u32,
    mult: impl Strategy<Value = Cardinal>,
) -> impl Strategy<Value = AbelianGroupSpec> {
    prop::collection::vec((1..=max_u, mult), 0..5).prop_map(move |raw| spec_from(p, raw))
}

pub fn p_spec(p: u64) -> impl Strategy<Value = AbelianGroupSpec> {
    p_spec_with(p, 4, cardinal())
}

pub fn finite_p_spec(p: u64) -> impl Strategy<Value = AbelianGroupSpec> {
    p_spec_with(p, 4, finite_cardinal())
}

pub fn nontrivial_finite_p_spec(p: u64, max_u: u32) -> impl Strategy<Value = AbelianGroupSpec> {
    prop::collection::vec((1..=max_u, 1u64..4), 1..5).prop_map(move |raw| {
        spec_from(p, raw.into_iter().map(|(u, m)| (u, Cardinal::Finite(m))).collect())
    })
}

/// Specs over several primes, possibly with unnormalized input lists.
pub fn spec() -> impl Strategy<Value = AbelianGroupSpec> {
    prop::collection::vec((prime(), 1u32..5, cardinal()), 0..7).prop_map(|raw| {
        AbelianGroupSpec::normalize(
            raw.into_iter()
                .map(|(p, u, m)| PrimaryFactor::new(p, u, m).expect("valid factor"))
                .collect(),
        )
    })
}

pub fn raw_factors() -> impl Strategy<Value = Vec<PrimaryFactor>> {
    prop::collection::vec((prime(), 1u32..5, cardinal()), 0..7).prop_map(|raw| {
        raw.into_iter()
            .map(|(p, u, m)| PrimaryFactor::new(p, u, m).expect("valid factor"))
            .collect()
    })
}

/// A passive `p`-group profile with non-increasing `s`.
pub fn passive_p(p: u64) -> impl Strategy<Value = PassiveGroupSpec> {
    prop::collection::vec(1u32..4, 1..4).prop_map(move |mut s| {
        s.sort_unstable_by(|a, b| b.cmp(a));
        let part = PassivePrimePart::new(p, s, None).expect("valid profile");
        PassiveGroupSpec::from_parts(vec![part], None).expect("one part")
    })
}

/// `(p, A, B1, B2)` with `B1(p)` and `B2(p)` not equivalent.
pub fn divergent_pair() -> impl Strategy<Value = (u64, PassiveGroupSpec, AbelianGroupSpec, AbelianGroupSpec)> {
    prime()
        .prop_flat_map(|p| (Just(p), passive_p(p), p_spec(p), p_spec(p)))
        .prop_filter("divergent", |(p, _, b1, b2)| b1.divergence(b2, *p).is_some())
}

/// A `p`-group spec with at least one infinite factor.
pub fn infinite_p_spec(p: u64) -> impl Strategy<Value = AbelianGroupSpec> {
    (p_spec(p), 1u32..5, 0u32..2).prop_map(move |(b, u, k)| {
        let f = PrimaryFactor::new(p, u, Cardinal::Aleph(k)).expect("valid factor");
        b.direct_product(&AbelianGroupSpec::normalize(vec![f]))
    })
}

/// Two non-trivial `p`-group specs of the same exponent.
pub fn same_exponent_pair(p: u64) -> impl Strategy<Value = (AbelianGroupSpec, AbelianGroupSpec)> {
    (1u32..4).prop_flat_map(move |e| {
        let top = AbelianGroupSpec::normalize(vec![PrimaryFactor::finite(p, e, 1)]);
        let side = move || p_spec_with(p, e, cardinal()).prop_map({
            let top = top.clone();
            move |b| b.direct_product(&top)
        });
        (side(), side())
    })
}
