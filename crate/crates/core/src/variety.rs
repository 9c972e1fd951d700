//! Deciding whether `A1 Wr B1` and `A2 Wr B2` generate the same variety.
//!
//! Under the standing hypotheses (non-trivial groups, `var(A1) = var(A2)` of
//! exponent `m`, `B1`, `B2` abelian of the same exponent `n`, every prime of
//! `n` dividing `m`) the varieties coincide iff the primary components
//! `B1(p)` and `B2(p)` are equivalent for every prime `p`. When they are not,
//! a separating product variety `N_c B_{p^{w-1}}` is computed from the
//! reduced wreath products at the first diverging factor.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::checked_pow;
use crate::cardinal::Cardinal;
use crate::error::{Error, Result};
use crate::groupspec::{AbelianGroupSpec, DivergenceReport, PassiveGroupSpec, PrimaryFactor};
use crate::shield::{baumslag_nilpotent, shield_class, shield_params, wreath_exponent, ShieldParams};

/// Passive pairs whose generated varieties are known to coincide.
pub const KNOWN_EQUAL_PASSIVES: &[(&str, &str)] = &[("D4", "Q8")];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionInput {
    pub a1: PassiveGroupSpec,
    pub a2: PassiveGroupSpec,
    pub b1: AbelianGroupSpec,
    pub b2: AbelianGroupSpec,
    /// Caller asserts `var(A1) = var(A2)`.
    pub assert_passive_var_equal: bool,
}

impl DecisionInput {
    /// Same passive group on both sides.
    pub fn single_passive(a: PassiveGroupSpec, b1: AbelianGroupSpec, b2: AbelianGroupSpec) -> Self {
        DecisionInput {
            a1: a.clone(),
            a2: a,
            b1,
            b2,
            assert_passive_var_equal: false,
        }
    }

    fn swapped(&self) -> Self {
        DecisionInput {
            a1: self.a2.clone(),
            a2: self.a1.clone(),
            b1: self.b2.clone(),
            b2: self.b1.clone(),
            assert_passive_var_equal: self.assert_passive_var_equal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TrivialActive { which: &'static str },
    ActiveExponents { n1: u64, n2: u64 },
    PassiveExponents { m1: u64, m2: u64 },
    PrimeNotInPassive { which: &'static str, p: u64, n: u64, m: u64 },
    PassiveVarietyUnasserted { a1: String, a2: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TrivialActive { which } => write!(f, "{which} is trivial"),
            Violation::ActiveExponents { n1, n2 } => {
                write!(f, "active exponents differ: exp(B1) = {n1}, exp(B2) = {n2}")
            }
            Violation::PassiveExponents { m1, m2 } => {
                write!(f, "passive exponents differ: exp(A1) = {m1}, exp(A2) = {m2}")
            }
            Violation::PrimeNotInPassive { which, p, n, m } => {
                write!(f, "prime {p} of n = exp({which}) = {n} does not divide m = {m}")
            }
            Violation::PassiveVarietyUnasserted { a1, a2 } => write!(
                f,
                "var({a1}) = var({a2}) is not known; pass the assertion flag to accept it"
            ),
        }
    }
}

/// One line of the hypothesis report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

fn passive_variety_note(input: &DecisionInput) -> Option<String> {
    if input.a1.is_identical(&input.a2) {
        return Some("identical passive groups".into());
    }
    if let (Some(l1), Some(l2)) = (input.a1.label(), input.a2.label()) {
        let known = KNOWN_EQUAL_PASSIVES
            .iter()
            .any(|&(x, y)| (l1 == x && l2 == y) || (l1 == y && l2 == x));
        if known {
            return Some(format!("var({l1}) = var({l2}) is a known result"));
        }
    }
    input
        .assert_passive_var_equal
        .then(|| "equality of passive varieties asserted by caller".into())
}

fn evaluate(input: &DecisionInput) -> Result<(Vec<HypothesisCheck>, Vec<Violation>)> {
    let mut checks = Vec::new();
    let mut violations = Vec::new();
    let mut record = |name, violation: Option<Violation>, ok_detail: String| {
        checks.push(HypothesisCheck {
            name,
            holds: violation.is_none(),
            detail: violation.as_ref().map_or(ok_detail, ToString::to_string),
        });
        violations.extend(violation);
    };

    let trivial = [("B1", &input.b1), ("B2", &input.b2)]
        .into_iter()
        .find(|(_, b)| b.is_trivial())
        .map(|(which, _)| Violation::TrivialActive { which });
    let has_trivial = trivial.is_some();
    record("non-trivial groups", trivial, "all groups non-trivial".into());

    let (m1, m2) = (input.a1.exponent()?, input.a2.exponent()?);
    let passive_exp = (m1 != m2).then_some(Violation::PassiveExponents { m1, m2 });
    record("equal passive exponents", passive_exp, format!("m = {m1}"));

    if !has_trivial {
        let (n1, n2) = (input.b1.exponent()?, input.b2.exponent()?);
        let active_exp = (n1 != n2).then_some(Violation::ActiveExponents { n1, n2 });
        record("equal active exponents", active_exp, format!("n = {n1}"));

        let stray = [("B1", &input.b1, m1), ("B2", &input.b2, m2)]
            .into_iter()
            .find_map(|(which, b, m)| {
                b.primes().into_iter().find(|&p| m % p != 0).map(|p| Violation::PrimeNotInPassive {
                    which,
                    p,
                    n: if which == "B1" { n1 } else { n2 },
                    m,
                })
            });
        record("primes of n divide m", stray, "every prime of n divides m".into());
    }

    let note = passive_variety_note(input);
    let unasserted = note.is_none().then(|| Violation::PassiveVarietyUnasserted {
        a1: input.a1.to_string(),
        a2: input.a2.to_string(),
    });
    record("var(A1) = var(A2)", unasserted, note.unwrap_or_default());
    Ok((checks, violations))
}

/// Hypothesis violations; empty when every hypothesis holds.
pub fn check_hypotheses(input: &DecisionInput) -> Result<Vec<Violation>> {
    Ok(evaluate(input)?.1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unequal,
    NotApplicable(String),
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::Unequal => "unequal",
            Verdict::NotApplicable(_) => "not_applicable",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NotApplicable(reason) => write!(f, "not applicable ({reason})"),
            other => f.write_str(other.as_str()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeVerdict {
    pub p: u64,
    pub equivalent: bool,
    pub t: Option<usize>,
    pub w: Option<u32>,
}

impl PrimeVerdict {
    pub fn divergence(&self) -> Option<DivergenceReport> {
        Some(DivergenceReport { t: self.t?, w: self.w? })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingVariety {
    /// Nilpotency class `c` of `N_c`.
    pub class: u64,
    /// Exponent `e` of the Burnside variety `B_e`.
    pub burnside_exponent: u64,
}

impl fmt::Display for SeparatingVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N_{} B_{}", self.class, self.burnside_exponent)
    }
}

/// Certificate that two wreath products generate distinct varieties.
///
/// Sides are oriented so that side 1 is the one with more copies of the
/// diverging cycle (`swapped` records that this is the second input group).
/// The side-2 wreath product lies in `separating`, the side-1 product does
/// not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationWitness {
    pub p: u64,
    pub t: usize,
    pub w: u32,
    #[serde(rename = "class_b1")]
    pub reduced_class_b1: u64,
    #[serde(rename = "class_b2")]
    pub reduced_class_b2: u64,
    pub separating: SeparatingVariety,
    #[serde(skip)]
    pub reduced_b1: AbelianGroupSpec,
    #[serde(skip)]
    pub reduced_b2: AbelianGroupSpec,
    #[serde(skip)]
    pub swapped: bool,
}

fn reduced_class(a: &PassiveGroupSpec, reduced: &AbelianGroupSpec, p: u64) -> Result<u64> {
    let part = a.part(p).expect("checked by caller");
    let params = if reduced.is_trivial() {
        ShieldParams::trivial(p)
    } else {
        shield_params(reduced, p)?
    };
    params.class_for(part)
}

pub fn separation_witness(
    a: &PassiveGroupSpec,
    b1: &AbelianGroupSpec,
    b2: &AbelianGroupSpec,
    p: u64,
) -> Result<SeparationWitness> {
    if a.part(p).is_none() {
        return Err(Error::Precondition(format!("{p} does not divide the passive exponent")));
    }
    let DivergenceReport { t, w } = b1
        .divergence(b2, p)
        .ok_or_else(|| Error::Precondition(format!("the {p}-components are equivalent")))?;
    let (c1, c2) = (b1.p_component(p), b2.p_component(p));
    let prefix = &c1.factors()[..t - 1];
    debug_assert_eq!(prefix, &c2.factors()[..t - 1]);

    // copies of C_{p^w} at index t; a missing or smaller factor counts as zero
    let at_w = |c: &AbelianGroupSpec| {
        c.factors()
            .get(t - 1)
            .filter(|f| f.u == w)
            .map_or(Cardinal::ZERO, |f| f.mult)
    };
    let (m1, m2) = (at_w(&c1), at_w(&c2));
    let swapped = m2 > m1;
    let (m_big, m_small) = if swapped { (m2, m1) } else { (m1, m2) };
    let m_small = m_small.finite().expect("diverging factors are not both infinite");
    // infinitely many copies are cut down to one more than the other side
    let m_big = m_big.finite().unwrap_or(m_small + 1);

    let truncated = |m: u64| {
        let mut factors = prefix.to_vec();
        factors.push(PrimaryFactor { p, u: w, mult: Cardinal::Finite(m) });
        AbelianGroupSpec::normalize(factors)
    };
    let burnside_exponent = checked_pow(p, w - 1, "Burnside exponent")?;
    let reduced_b1 = truncated(m_big).power(burnside_exponent);
    let reduced_b2 = truncated(m_small).power(burnside_exponent);
    let reduced_class_b1 = reduced_class(a, &reduced_b1, p)?;
    let reduced_class_b2 = reduced_class(a, &reduced_b2, p)?;
    Ok(SeparationWitness {
        p,
        t,
        w,
        reduced_class_b1,
        reduced_class_b2,
        separating: SeparatingVariety {
            class: reduced_class_b2,
            burnside_exponent,
        },
        reduced_b1,
        reduced_b2,
        swapped,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub exponent: u64,
    pub nilpotent: bool,
    pub class: Option<u64>,
    pub solubility_bound: Option<u32>,
}

/// Coarse invariants of `var(A Wr B)`: exponent, nilpotency and class, and a
/// bound on the derived length.
pub fn fingerprint(a: &PassiveGroupSpec, b: &AbelianGroupSpec) -> Result<Fingerprint> {
    let exponent = wreath_exponent(a, b)?;
    let nilpotent = baumslag_nilpotent(a, b)?;
    let class = if nilpotent { Some(shield_class(a, b)?) } else { None };
    Ok(Fingerprint {
        exponent,
        nilpotent,
        class,
        solubility_bound: a.derived_length().map(|dl| dl + 1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub hypotheses: Vec<HypothesisCheck>,
    pub per_prime: Vec<PrimeVerdict>,
    pub witness: Option<SeparationWitness>,
    pub fingerprints: Vec<Fingerprint>,
}

impl Decision {
    fn not_applicable(hypotheses: Vec<HypothesisCheck>, violations: &[&Violation]) -> Self {
        let reason = violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
        Decision {
            verdict: Verdict::NotApplicable(reason),
            hypotheses,
            per_prime: Vec::new(),
            witness: None,
            fingerprints: Vec::new(),
        }
    }
}

pub fn decide_equal(input: &DecisionInput) -> Result<Decision> {
    let (hypotheses, violations) = evaluate(input)?;
    let blocking: Vec<&Violation> = violations
        .iter()
        .filter(|v| !matches!(v, Violation::ActiveExponents { .. }))
        .collect();
    if !blocking.is_empty() {
        return Ok(Decision::not_applicable(hypotheses, &blocking));
    }
    let exponent_mismatch = violations.len() > blocking.len();

    let mut primes = input.b1.primes();
    primes.extend(input.b2.primes());
    primes.sort_unstable();
    primes.dedup();

    let per_prime = primes
        .into_iter()
        .map(|p| {
            let div = input.b1.divergence(&input.b2, p);
            PrimeVerdict {
                p,
                equivalent: div.is_none(),
                t: div.map(|d| d.t),
                w: div.map(|d| d.w),
            }
        })
        .collect::<Vec<_>>();

    let first_failing = per_prime.iter().find(|v| !v.equivalent).map(|v| v.p);
    let verdict = if first_failing.is_none() && !exponent_mismatch {
        Verdict::Equal
    } else {
        Verdict::Unequal
    };
    let witness = first_failing
        .map(|p| separation_witness(&input.a1, &input.b1, &input.b2, p))
        .transpose()?;
    let fingerprints = vec![
        fingerprint(&input.a1, &input.b1)?,
        fingerprint(&input.a2, &input.b2)?,
    ];
    Ok(Decision {
        verdict,
        hypotheses,
        per_prime,
        witness,
        fingerprints,
    })
}

/// The decision restricted to the case where at least one active group is
/// finite: equal iff both are finite and isomorphic.
pub fn decide_finite(input: &DecisionInput) -> Result<Decision> {
    let mut decision = decide_equal(input)?;
    if matches!(decision.verdict, Verdict::NotApplicable(_)) {
        return Ok(decision);
    }
    decision.verdict = match (input.b1.is_finite(), input.b2.is_finite()) {
        (true, true) if input.b1 == input.b2 => Verdict::Equal,
        (true, true) | (true, false) | (false, true) => Verdict::Unequal,
        (false, false) => Verdict::NotApplicable("both active groups are infinite".into()),
    };
    Ok(decision)
}

/// `decide_equal` with the two sides exchanged; used to check symmetry.
pub fn decide_equal_swapped(input: &DecisionInput) -> Result<Decision> {
    decide_equal(&input.swapped())
}
