use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_BUDGET: usize = 200_000;

/// A permutation of `0..degree`, acting on the right: `(x * y)(i) = y(x(i))`.
pub type Perm = Box<[u16]>;

fn compose(x: &[u16], y: &[u16]) -> Perm {
    x.iter().map(|&i| y[i as usize]).collect()
}

fn invert(x: &[u16]) -> Perm {
    let mut inv = vec![0u16; x.len()];
    for (i, &j) in x.iter().enumerate() {
        inv[j as usize] = i as u16;
    }
    inv.into()
}

fn identity_perm(degree: usize) -> Perm {
    (0..degree as u16).collect()
}

fn perm_order(x: &[u16]) -> u64 {
    let mut seen = vec![false; x.len()];
    let mut order = 1u64;
    for start in 0..x.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = x[i] as usize;
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// An explicitly enumerated finite group, realized as a permutation group.
///
/// Elements are addressed by their index in `elements()`; index `identity()`
/// is the identity.
#[derive(Clone)]
pub struct ConcreteGroup {
    label: String,
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<usize>,
}

impl fmt::Debug for ConcreteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConcreteGroup")
            .field("label", &self.label)
            .field("order", &self.order())
            .field("degree", &self.degree)
            .finish()
    }
}

impl ConcreteGroup {
    /// Enumerates the group generated by `gens` on `degree` points.
    pub fn from_generators(label: impl Into<String>, degree: usize, gens: Vec<Perm>, budget: usize) -> Result<Self> {
        let label = label.into();
        if degree > u16::MAX as usize + 1 {
            return Err(Error::BudgetExceeded {
                what: format!("permutation degree of {label}"),
                needed: degree.to_string(),
                budget: u16::MAX as usize + 1,
            });
        }
        let id = identity_perm(degree.max(1));
        let gens: Vec<Perm> = gens.into_iter().filter(|g| *g != id).collect();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut frontier = 0;
        while frontier < elements.len() {
            for g in &gens {
                let next = compose(&elements[frontier], g);
                if !index.contains_key(&next) {
                    if elements.len() >= budget {
                        return Err(Error::BudgetExceeded {
                            what: label,
                            needed: format!("more than {budget}"),
                            budget,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            frontier += 1;
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(ConcreteGroup {
            label,
            degree: degree.max(1),
            elements,
            index,
            generators,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn perm(&self, x: usize) -> &[u16] {
        &self.elements[x]
    }

    pub fn index_of(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    pub fn multiply(&self, x: usize, y: usize) -> usize {
        self.index[&compose(&self.elements[x], &self.elements[y])]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.index[&invert(&self.elements[x])]
    }

    pub fn pow(&self, x: usize, mut k: u64) -> usize {
        let mut result = self.identity();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                result = self.multiply(result, base);
            }
            base = self.multiply(base, base);
            k >>= 1;
        }
        result
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.multiply(x, y);
        let yx = self.multiply(y, x);
        self.multiply(self.inverse(yx), xy)
    }

    /// `g^-1 x g`
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.multiply(self.multiply(self.inverse(g), x), g)
    }

    pub fn element_order(&self, x: usize) -> u64 {
        perm_order(&self.elements[x])
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&x| gens.iter().all(|&y| self.multiply(x, y) == self.multiply(y, x)))
    }

    /// Checks the group axioms on the multiplication by elements index.
    /// Every triple is checked when `|G|^3 <= full_limit`, otherwise a
    /// deterministic sample of `samples` triples.
    pub fn check_axioms(&self, full_limit: usize, samples: usize) -> bool {
        let n = self.order();
        let e = self.identity();
        let triple = |x: usize, y: usize, z: usize| {
            self.multiply(self.multiply(x, y), z) == self.multiply(x, self.multiply(y, z))
        };
        let unit_inverse = |x: usize| {
            self.multiply(x, e) == x
                && self.multiply(e, x) == x
                && self.multiply(x, self.inverse(x)) == e
        };
        if (0..n).any(|x| !unit_inverse(x)) {
            return false;
        }
        if n.saturating_pow(3) <= full_limit {
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| triple(x, y, z))))
        } else {
            // simple LCG walk over triples
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize % n
            };
            (0..samples).all(|_| {
                let (x, y, z) = (next(), next(), next());
                triple(x, y, z)
            })
        }
    }

    /// Multiset of element orders, sorted.
    pub fn order_profile(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = (0..self.order()).map(|x| self.element_order(x)).collect();
        orders.sort_unstable();
        orders
    }
}

/// Cyclic group of order `n`, acting regularly on `n` points.
pub fn concrete_cyclic(n: usize, budget: usize) -> Result<ConcreteGroup> {
    if n == 0 {
        return Err(Error::Precondition("cyclic group order must be positive".into()));
    }
    if n > budget {
        return Err(Error::BudgetExceeded {
            what: format!("C_{n}"),
            needed: n.to_string(),
            budget,
        });
    }
    let cycle: Perm = (0..n).map(|i| ((i + 1) % n) as u16).collect();
    ConcreteGroup::from_generators(format!("C_{n}"), n, vec![cycle], budget)
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn concrete_product(groups: &[ConcreteGroup], budget: usize) -> Result<ConcreteGroup> {
    if groups.is_empty() {
        return ConcreteGroup::from_generators("1", 1, Vec::new(), budget);
    }
    let needed = groups
        .iter()
        .try_fold(1usize, |acc, g| acc.checked_mul(g.order()))
        .filter(|&n| n <= budget);
    let label = groups.iter().map(|g| g.label()).collect::<Vec<_>>().join(" x ");
    if needed.is_none() {
        let orders: Vec<String> = groups.iter().map(|g| g.order().to_string()).collect();
        return Err(Error::BudgetExceeded {
            what: label,
            needed: orders.join(" * "),
            budget,
        });
    }
    let degree: usize = groups.iter().map(ConcreteGroup::degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for g in groups {
        for &x in g.generators() {
            let mut perm = identity_perm(degree);
            for (i, &j) in g.perm(x).iter().enumerate() {
                perm[offset + i] = (offset + j as usize) as u16;
            }
            gens.push(perm);
        }
        offset += g.degree();
    }
    ConcreteGroup::from_generators(label, degree, gens, budget)
}

/// `D4` (order 8) as the symmetries of a square, or `Q8` in its regular
/// representation.
pub fn concrete_preset(name: &str, budget: usize) -> Result<ConcreteGroup> {
    match name {
        "D4" => {
            // a = rotation, b = reflection with b a b = a^-1
            let a: Perm = vec![1, 2, 3, 0].into();
            let b: Perm = vec![0, 3, 2, 1].into();
            ConcreteGroup::from_generators("D4", 4, vec![a, b], budget)
        }
        "Q8" => {
            // points 0..8 encode sign * unit, unit in {1, i, j, k}
            let mul_unit = |x: usize, y: usize| -> (bool, usize) {
                // returns (negate, unit) for unit_x * unit_y
                const TABLE: [[(bool, usize); 4]; 4] = [
                    [(false, 0), (false, 1), (false, 2), (false, 3)],
                    [(false, 1), (true, 0), (false, 3), (true, 2)],
                    [(false, 2), (true, 3), (true, 0), (false, 1)],
                    [(false, 3), (false, 2), (true, 1), (true, 0)],
                ];
                TABLE[x][y]
            };
            let right_mult = |unit: usize| -> Perm {
                (0..8)
                    .map(|pt| {
                        let (neg, u) = (pt >= 4, pt % 4);
                        let (flip, v) = mul_unit(u, unit);
                        ((neg ^ flip) as usize * 4 + v) as u16
                    })
                    .collect()
            };
            ConcreteGroup::from_generators("Q8", 8, vec![right_mult(1), right_mult(2)], budget)
        }
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Regular wreath product `A Wr B`: the base group of functions `B -> A`
/// extended by `B` acting by shifts.
///
/// Realized on `points(A) x B`: the generators of `A` act on the block of the
/// identity of `B`, the generators of `B` permute blocks by right
/// multiplication.
pub fn concrete_wreath(a: &ConcreteGroup, b: &ConcreteGroup, budget: usize) -> Result<ConcreteGroup> {
    let label = format!("{} Wr {}", a.label(), b.label());
    let (na, nb) = (a.order(), b.order());
    let needed = u32::try_from(nb)
        .ok()
        .and_then(|nb32| na.checked_pow(nb32))
        .and_then(|base| base.checked_mul(nb))
        .filter(|&n| n <= budget);
    if needed.is_none() {
        return Err(Error::BudgetExceeded {
            what: label,
            needed: format!("{na}^{nb} * {nb}"),
            budget,
        });
    }
    let block = a.degree();
    let degree = block * nb;
    let mut gens = Vec::new();
    for &x in a.generators() {
        let mut perm = identity_perm(degree);
        let base = b.identity() * block;
        for (i, &j) in a.perm(x).iter().enumerate() {
            perm[base + i] = (base + j as usize) as u16;
        }
        gens.push(perm);
    }
    for &y in b.generators() {
        let perm: Perm = (0..degree)
            .map(|pt| {
                let (blk, i) = (pt / block, pt % block);
                (b.multiply(blk, y) * block + i) as u16
            })
            .collect();
        gens.push(perm);
    }
    ConcreteGroup::from_generators(label, degree, gens, budget)
}
