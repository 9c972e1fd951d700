//! Varieties generated by wreath products `A Wr B` of a nilpotent group `A`
//! of finite exponent and an abelian group `B`.
//!
//! Symbolic side: primary decompositions with cardinal multiplicities
//! ([`groupspec`]), the K_p-series and nilpotency class of `A Wr B`
//! ([`shield`]) and the decision procedure with separating witnesses
//! ([`variety`]). The [`oracle`] module checks the formulas by enumerating
//! small permutation groups.

mod arith;
pub mod cardinal;
pub mod error;
pub mod groupspec;
pub mod oracle;
pub mod shield;
pub mod variety;

pub use arith::{is_prime, prime_divisors, prime_power};
pub use cardinal::Cardinal;
pub use error::{Error, Result};
pub use groupspec::{
    parse_abelian, parse_passive, parse_passive_items, AbelianGroupSpec, DivergenceReport, PassiveGroupSpec,
    PassiveItem, PassivePrimePart, PrimaryFactor,
};
pub use shield::{
    baumslag_nilpotent, baumslag_obstruction, kp_series, shield_class, shield_params, wreath_exponent, KpChain,
    ShieldParams,
};
pub use variety::{
    decide_equal, fingerprint, separation_witness, Decision, DecisionInput, Fingerprint, SeparatingVariety,
    SeparationWitness, Verdict,
};
