use crate::error::{Error, Result};

use super::group::{lcm, ConcreteGroup};

/// A subgroup of a [`ConcreteGroup`], stored as an explicit element set
/// together with the generators it was built from.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<bool>,
    elements: Vec<usize>,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn trivial(g: &ConcreteGroup) -> Self {
        let mut members = vec![false; g.order()];
        members[g.identity()] = true;
        Subgroup {
            members,
            elements: vec![g.identity()],
            gens: Vec::new(),
        }
    }

    pub fn whole(g: &ConcreteGroup) -> Self {
        Subgroup {
            members: vec![true; g.order()],
            elements: (0..g.order()).collect(),
            gens: g.generators().to_vec(),
        }
    }

    pub fn generated(g: &ConcreteGroup, gens: &[usize]) -> Self {
        let mut h = Self::trivial(g);
        h.extend(g, gens);
        h
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Adds generators and closes under multiplication.
    fn extend(&mut self, g: &ConcreteGroup, new: &[usize]) {
        let before = self.gens.len();
        for &x in new {
            if !self.members[x] && !self.gens[before..].contains(&x) {
                self.gens.push(x);
            }
        }
        if self.gens.len() == before {
            return;
        }
        // every element is a product of generators; right-multiply each known
        // element by every generator until nothing new appears
        let mut frontier = 0;
        while frontier < self.elements.len() {
            let x = self.elements[frontier];
            for &s in &self.gens {
                let y = g.multiply(x, s);
                if !self.members[y] {
                    self.members[y] = true;
                    self.elements.push(y);
                }
            }
            frontier += 1;
        }
    }

    /// Closes `self` under conjugation by the elements `by`.
    fn normalize_under(&mut self, g: &ConcreteGroup, by: &[usize]) {
        let mut checked = 0;
        while checked < self.gens.len() {
            let s = self.gens[checked];
            let missing: Vec<usize> = by
                .iter()
                .map(|&t| g.conjugate(s, t))
                .filter(|&c| !self.members[c])
                .collect();
            self.extend(g, &missing);
            checked += 1;
        }
    }

    pub fn is_normal_in(&self, g: &ConcreteGroup, parent: &Subgroup) -> bool {
        self.elements
            .iter()
            .all(|&x| parent.gens.iter().all(|&t| self.members[g.conjugate(x, t)]))
    }
}

/// Normal closure in `G` of the given elements.
pub fn normal_closure(g: &ConcreteGroup, elems: &[usize]) -> Subgroup {
    let mut h = Subgroup::generated(g, elems);
    h.normalize_under(g, g.generators());
    h
}

/// `[H, K]` for subgroups `H`, `K` of `G` with `K` normalizing `H` and `K`,
/// computed as the normal closure in `<H, K>` of `[h, k]` over all `h` in `H`
/// and generators `k` of `K`. `ambient` generates the group in which the
/// closure is taken.
fn commutator_subgroup(g: &ConcreteGroup, h: &Subgroup, k_gens: &[usize], ambient: &[usize]) -> Subgroup {
    let mut acc = Subgroup::trivial(g);
    for &x in h.elements() {
        for &y in k_gens {
            let c = g.commutator(x, y);
            if !acc.contains(c) {
                acc.extend(g, &[c]);
            }
        }
    }
    acc.normalize_under(g, ambient);
    acc
}

/// A descending chain of subgroups starting at the whole group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupChain {
    pub terms: Vec<Subgroup>,
}

impl SubgroupChain {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    pub fn reaches_trivial(&self) -> bool {
        self.terms.last().is_some_and(Subgroup::is_trivial)
    }
}

/// `gamma_1 = G`, `gamma_{r+1} = [gamma_r, G]`, up to the trivial group or
/// until the series stabilizes.
pub fn lower_central_series(g: &ConcreteGroup) -> SubgroupChain {
    let mut terms = vec![Subgroup::whole(g)];
    loop {
        let current = terms.last().expect("non-empty");
        if current.is_trivial() {
            break;
        }
        let next = commutator_subgroup(g, current, g.generators(), g.generators());
        if next.order() == current.order() {
            break;
        }
        terms.push(next);
    }
    SubgroupChain { terms }
}

/// Length of the lower central series to the trivial group; `None` when the
/// group is not nilpotent.
pub fn nilpotency_class(g: &ConcreteGroup) -> Option<usize> {
    let chain = lower_central_series(g);
    chain.reaches_trivial().then(|| chain.terms.len() - 1)
}

pub fn derived_series(g: &ConcreteGroup) -> SubgroupChain {
    let mut terms = vec![Subgroup::whole(g)];
    loop {
        let current = terms.last().expect("non-empty");
        if current.is_trivial() {
            break;
        }
        let gens = current.generators().to_vec();
        let next = commutator_subgroup(g, current, &gens, &gens);
        if next.order() == current.order() {
            break;
        }
        terms.push(next);
    }
    SubgroupChain { terms }
}

/// Number of steps of the derived series down to the trivial group; `None`
/// when the group is not soluble.
pub fn derived_length_concrete(g: &ConcreteGroup) -> Option<usize> {
    let chain = derived_series(g);
    chain.reaches_trivial().then(|| chain.terms.len() - 1)
}

/// Least common multiple of the element orders.
pub fn exponent_concrete(g: &ConcreteGroup) -> u64 {
    (0..g.order()).fold(1, |acc, x| lcm(acc, g.element_order(x)))
}

/// `K_{i,p}(G)`, the subgroup generated by `gamma_r(G)^{p^j}` over all
/// `r * p^j >= i`, for `i = 1, 2, ...` up to and including the first trivial
/// term.
pub fn kp_series_concrete(g: &ConcreteGroup, p: u64) -> Result<SubgroupChain> {
    let mut n = g.order();
    while n % p as usize == 0 {
        n /= p as usize;
    }
    if n != 1 {
        return Err(Error::NotPGroup(p));
    }
    let gammas: Vec<Subgroup> = lower_central_series(g)
        .terms
        .into_iter()
        .filter(|t| !t.is_trivial())
        .collect();
    let mut terms = Vec::new();
    for i in 1u64.. {
        let mut gens = Vec::new();
        for (r, gamma) in (1u64..).zip(&gammas) {
            // gamma_r^{p^j} shrinks as j grows, so the least admissible j suffices
            let mut pj = 1u64;
            while r * pj < i {
                pj *= p;
            }
            gens.extend(gamma.elements().iter().map(|&x| g.pow(x, pj)));
        }
        gens.sort_unstable();
        gens.dedup();
        let term = Subgroup::generated(g, &gens);
        let done = term.is_trivial();
        terms.push(term);
        if done {
            break;
        }
    }
    Ok(SubgroupChain { terms })
}
