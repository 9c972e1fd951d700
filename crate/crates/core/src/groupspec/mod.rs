//! Symbolic descriptions of the active (abelian) and passive (nilpotent)
//! groups, with the equivalence of primary components and a text parser.

mod abelian;
mod parse;
mod passive;

use std::str::FromStr;

pub use abelian::{AbelianGroupSpec, DivergenceReport, PrimaryFactor};
pub use parse::{parse_abelian, parse_passive, parse_passive_items};
pub use passive::{PassiveGroupSpec, PassiveItem, PassivePrimePart};

use crate::error::Error;

impl FromStr for AbelianGroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_abelian(s)
    }
}

impl FromStr for PassiveGroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_passive(s)
    }
}
