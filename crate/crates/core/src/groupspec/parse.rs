//! Recursive-descent parser for group expressions.
//!
//! ```text
//! group   := term ( '*' term )* | '1'
//! term    := 'C' '_' base ( '^' mult )?
//! base    := digits | '{' digits ( '^' digits )? '}'
//! mult    := digits | '{' digits '}' | '{' aleph '}'
//! aleph   := 'aleph' ( '_' digits )?
//!
//! passive := item ( '*' item )*
//! item    := 'D4' | 'Q8' | term
//!          | 'nilpotent' '(' 'p' '=' digits ',' 's' '=' '[' digits ( ',' digits )* ']'
//!                           ( ',' 'derived_length' '=' digits )? ')'
//! ```
//!
//! Whitespace is allowed between tokens.

use crate::arith::{is_prime, prime_power};
use crate::cardinal::Cardinal;
use crate::error::{Error, Result};

use super::abelian::{AbelianGroupSpec, PrimaryFactor};
use super::passive::{PassiveGroupSpec, PassiveItem, PassivePrimePart};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error_at(&self, position: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> Error {
        match self.peek() {
            Some(found) => self.error(format!("expected {wanted}, found `{found}`")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let rest = self.rest();
        let followed_by_ident = rest[kw.len().min(rest.len())..]
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphanumeric());
        if rest.starts_with(kw) && !followed_by_ident {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        if self.eat_keyword(kw) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{kw}`")))
        }
    }

    /// Returns the value and the column where it started.
    fn digits(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.unexpected("digits"));
        }
        self.pos += len;
        let value = self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error_at(start, "number too large"))?;
        Ok((value, start))
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("`*` or end of input")),
        }
    }
}

fn semantic(position: usize, err: Error) -> Error {
    Error::Syntax {
        position,
        message: err.to_string(),
    }
}

/// Parses `C_...` after the leading `C` has been consumed; `start` is the
/// column of the `C`.
fn cyclic_term(cur: &mut Cursor<'_>, start: usize) -> Result<PrimaryFactor> {
    cur.expect('_')?;
    let (p, u) = if cur.eat('{') {
        let (base, at) = cur.digits()?;
        let pu = if cur.eat('^') {
            let (u, u_at) = cur.digits()?;
            if !is_prime(base) {
                return Err(semantic(at, Error::NotPrime(base)));
            }
            let u = u32::try_from(u).map_err(|_| cur.error_at(u_at, "exponent too large"))?;
            if u == 0 {
                return Err(semantic(u_at, Error::ZeroExponent));
            }
            (base, u)
        } else {
            prime_power(base).ok_or_else(|| semantic(at, Error::NotPrimePower(base)))?
        };
        cur.expect('}')?;
        pu
    } else {
        let (base, at) = cur.digits()?;
        prime_power(base).ok_or_else(|| semantic(at, Error::NotPrimePower(base)))?
    };
    if p.checked_pow(u).is_none() {
        return Err(cur.error_at(start, "cyclic order does not fit in 64 bits"));
    }
    let mult = if cur.eat('^') { multiplicity(cur)? } else { Cardinal::ONE };
    PrimaryFactor::new(p, u, mult).map_err(|e| semantic(start, e))
}

fn multiplicity(cur: &mut Cursor<'_>) -> Result<Cardinal> {
    if cur.eat('{') {
        let m = if cur.eat_keyword("aleph") {
            if cur.eat('_') {
                let (k, at) = cur.digits()?;
                Cardinal::Aleph(u32::try_from(k).map_err(|_| cur.error_at(at, "aleph index too large"))?)
            } else {
                Cardinal::ALEPH_0
            }
        } else {
            Cardinal::Finite(cur.digits()?.0)
        };
        cur.expect('}')?;
        Ok(m)
    } else {
        Ok(Cardinal::Finite(cur.digits()?.0))
    }
}

pub fn parse_abelian(text: &str) -> Result<AbelianGroupSpec> {
    let mut cur = Cursor::new(text);
    if cur.peek() == Some('1') {
        let save = cur.pos;
        cur.pos += 1;
        if cur.peek().is_none() {
            return Ok(AbelianGroupSpec::trivial());
        }
        cur.pos = save;
    }
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        let start = cur.pos;
        if !cur.eat('C') {
            return Err(cur.unexpected("`C` or `1`"));
        }
        factors.push(cyclic_term(&mut cur, start)?);
        if !cur.eat('*') {
            break;
        }
    }
    cur.finish()?;
    Ok(AbelianGroupSpec::normalize(factors))
}

fn profile(cur: &mut Cursor<'_>) -> Result<PassivePrimePart> {
    let start = cur.pos;
    cur.expect('(')?;
    cur.expect_keyword("p")?;
    cur.expect('=')?;
    let (p, _) = cur.digits()?;
    cur.expect(',')?;
    cur.expect_keyword("s")?;
    cur.expect('=')?;
    cur.expect('[')?;
    let mut s = Vec::new();
    loop {
        let (v, at) = cur.digits()?;
        s.push(u32::try_from(v).map_err(|_| cur.error_at(at, "exponent too large"))?);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect(']')?;
    let derived_length = if cur.eat(',') {
        cur.expect_keyword("derived_length")?;
        cur.expect('=')?;
        let (v, at) = cur.digits()?;
        Some(u32::try_from(v).map_err(|_| cur.error_at(at, "derived length too large"))?)
    } else {
        None
    };
    cur.expect(')')?;
    PassivePrimePart::new(p, s, derived_length).map_err(|e| semantic(start, e))
}

pub fn parse_passive(text: &str) -> Result<PassiveGroupSpec> {
    PassiveGroupSpec::from_items(parse_passive_items(text)?)
}

/// The factors of a passive expression, in input order.
pub fn parse_passive_items(text: &str) -> Result<Vec<PassiveItem>> {
    let mut cur = Cursor::new(text);
    let mut items = Vec::new();
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let item = if cur.eat_keyword("D4") {
            PassiveItem::Dihedral8
        } else if cur.eat_keyword("Q8") {
            PassiveItem::Quaternion8
        } else if cur.eat_keyword("nilpotent") {
            PassiveItem::Profile(profile(&mut cur)?)
        } else if cur.eat('C') {
            PassiveItem::Cyclic(cyclic_term(&mut cur, start)?)
        } else {
            let ident: String = cur.rest().chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
            if ident.is_empty() {
                return Err(cur.unexpected("a passive group (`D4`, `Q8`, `C_...` or `nilpotent(...)`)"));
            }
            return Err(semantic(start, Error::UnknownPreset(ident)));
        };
        items.push(item);
        if !cur.eat('*') {
            break;
        }
    }
    cur.finish()?;
    Ok(items)
}
