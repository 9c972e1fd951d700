//! Brute-force checks on explicitly enumerated permutation groups.

mod group;
mod series;

use serde::Serialize;

pub use group::{
    concrete_cyclic, concrete_preset, concrete_product, concrete_wreath, ConcreteGroup, Perm, DEFAULT_BUDGET,
};
pub use series::{
    derived_length_concrete, derived_series, exponent_concrete, kp_series_concrete, lower_central_series,
    nilpotency_class, normal_closure, Subgroup, SubgroupChain,
};

use crate::error::{Error, Result};
use crate::groupspec::{AbelianGroupSpec, PassiveGroupSpec, PassiveItem};
use crate::shield::{kp_series, shield_class, wreath_exponent};

/// Concrete realization of a finite abelian group spec.
pub fn realize_abelian(spec: &AbelianGroupSpec, budget: usize) -> Result<ConcreteGroup> {
    let mut cyclics = Vec::new();
    for f in spec.factors() {
        let n = f.mult.finite().ok_or(Error::Infinite("group to realize"))?;
        let order = crate::arith::checked_pow(f.p, f.u, "cyclic factor order")?;
        let order = usize::try_from(order).map_err(|_| Error::Overflow("cyclic factor order"))?;
        for _ in 0..n {
            if cyclics.len() >= budget {
                return Err(Error::BudgetExceeded {
                    what: spec.to_string(),
                    needed: format!("{n} cyclic factors"),
                    budget,
                });
            }
            cyclics.push(concrete_cyclic(order, budget)?);
        }
    }
    let mut g = concrete_product(&cyclics, budget)?;
    g.set_label(spec.to_string());
    Ok(g)
}

/// Concrete realization of a passive expression; inline profiles have no
/// concrete counterpart.
pub fn realize_passive(items: &[PassiveItem], budget: usize) -> Result<ConcreteGroup> {
    let mut parts = Vec::new();
    for item in items {
        match item {
            PassiveItem::Dihedral8 => parts.push(concrete_preset("D4", budget)?),
            PassiveItem::Quaternion8 => parts.push(concrete_preset("Q8", budget)?),
            PassiveItem::Cyclic(f) => {
                let spec = AbelianGroupSpec::normalize(vec![*f]);
                parts.push(realize_abelian(&spec, budget)?);
            }
            PassiveItem::Profile(_) => {
                return Err(Error::Precondition(format!(
                    "`{item}` is a profile and has no concrete realization"
                )))
            }
        }
    }
    let label = items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" * ");
    let mut g = if parts.len() == 1 {
        parts.pop().expect("one part")
    } else {
        concrete_product(&parts, budget)?
    };
    g.set_label(label);
    Ok(g)
}

/// Outcome of checking the symbolic class, exponent and K_p-series of
/// `A Wr B` against enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShieldCheck {
    pub label: String,
    pub order: usize,
    pub shield_class: u64,
    pub oracle_class: Option<usize>,
    pub class_equal: bool,
    pub spec_exponent: u64,
    pub oracle_exponent: u64,
    pub exponent_equal: bool,
    pub symbolic_chain: Vec<u64>,
    pub concrete_chain: Vec<u64>,
    pub chain_equal: bool,
}

impl ShieldCheck {
    pub fn all_equal(&self) -> bool {
        self.class_equal && self.exponent_equal && self.chain_equal
    }
}

fn check_describes(what: &str, spec_exp: u64, conc: &ConcreteGroup) -> Result<()> {
    let conc_exp = exponent_concrete(conc);
    if spec_exp != conc_exp {
        return Err(Error::SpecMismatch(format!(
            "{what} `{}` has exponent {conc_exp}, spec says {spec_exp}",
            conc.label()
        )));
    }
    Ok(())
}

/// Compares Shield's class, the exponent law and the symbolic K_p-series
/// with brute force on `A Wr B`.
pub fn verify_shield(
    a_spec: &PassiveGroupSpec,
    a_conc: &ConcreteGroup,
    b_spec: &AbelianGroupSpec,
    b_conc: &ConcreteGroup,
    budget: usize,
) -> Result<ShieldCheck> {
    check_describes("passive group", a_spec.exponent()?, a_conc)?;
    check_describes("active group", b_spec.exponent()?, b_conc)?;
    let b_order = b_spec
        .primes()
        .iter()
        .try_fold(1u64, |acc, &p| {
            let k = u32::try_from(b_spec.log_order(p).ok()?).ok()?;
            acc.checked_mul(p.checked_pow(k)?)
        })
        .ok_or(Error::Overflow("active group order"))?;
    if b_order != b_conc.order() as u64 {
        return Err(Error::SpecMismatch(format!(
            "active group `{}` has order {}, spec says {b_order}",
            b_conc.label(),
            b_conc.order()
        )));
    }

    let class = shield_class(a_spec, b_spec)?;
    let spec_exponent = wreath_exponent(a_spec, b_spec)?;
    let p = a_spec.parts()[0].p();
    let symbolic_chain = kp_series(b_spec, p)?
        .terms
        .iter()
        .map(|t| {
            let k = u32::try_from(t.log_order(p)?).map_err(|_| Error::Overflow("K_p term order"))?;
            crate::arith::checked_pow(p, k, "K_p term order")
        })
        .collect::<Result<Vec<u64>>>()?;
    let concrete_chain: Vec<u64> = kp_series_concrete(b_conc, p)?
        .orders()
        .into_iter()
        .map(|n| n as u64)
        .collect();

    let w = concrete_wreath(a_conc, b_conc, budget)?;
    let oracle_class = nilpotency_class(&w);
    let oracle_exponent = exponent_concrete(&w);
    Ok(ShieldCheck {
        label: w.label().to_string(),
        order: w.order(),
        shield_class: class,
        oracle_class,
        class_equal: oracle_class.map(|c| c as u64) == Some(class),
        spec_exponent,
        oracle_exponent,
        exponent_equal: spec_exponent == oracle_exponent,
        chain_equal: symbolic_chain == concrete_chain,
        symbolic_chain,
        concrete_chain,
    })
}

/// [`verify_shield`] on the realizations of a passive expression and an
/// active spec.
pub fn verify_items(items: &[PassiveItem], b: &AbelianGroupSpec, budget: usize) -> Result<ShieldCheck> {
    let a_spec = PassiveGroupSpec::from_items(items.to_vec())?;
    let a_conc = realize_passive(items, budget)?;
    let b_conc = realize_abelian(b, budget)?;
    verify_shield(&a_spec, &a_conc, b, &b_conc, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::parse_passive_items;

    fn check(a: &str, b: &str) -> ShieldCheck {
        verify_items(&parse_passive_items(a).unwrap(), &b.parse().unwrap(), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn small_wreaths_agree() {
        let r = check("C_3", "C_3");
        assert!(r.all_equal(), "{r:?}");
        assert_eq!((r.shield_class, r.order), (3, 81));
        let r = check("C_2", "C_4");
        assert!(r.all_equal(), "{r:?}");
        assert_eq!((r.shield_class, r.order), (4, 64));
        assert_eq!(r.symbolic_chain, [4, 2, 1]);
        let r = check("C_2", "C_2^2");
        assert!(r.all_equal(), "{r:?}");
        assert_eq!(r.order, 64);
    }

    #[test]
    fn mismatched_spec_is_reported() {
        let a_spec: PassiveGroupSpec = "C_2".parse().unwrap();
        let a_conc = concrete_cyclic(4, DEFAULT_BUDGET).unwrap();
        let b: AbelianGroupSpec = "C_2".parse().unwrap();
        let b_conc = realize_abelian(&b, DEFAULT_BUDGET).unwrap();
        let err = verify_shield(&a_spec, &a_conc, &b, &b_conc, DEFAULT_BUDGET).unwrap_err();
        assert!(matches!(err, Error::SpecMismatch(_)), "{err}");
    }

    #[test]
    fn profiles_and_budget() {
        let items = parse_passive_items("nilpotent(p=2, s=[1])").unwrap();
        assert!(matches!(realize_passive(&items, DEFAULT_BUDGET), Err(Error::Precondition(_))));
        let err = verify_items(&parse_passive_items("C_3").unwrap(), &"C_9^2".parse().unwrap(), DEFAULT_BUDGET)
            .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { ref needed, .. } if needed == "3^81 * 81"), "{err}");
    }
}
