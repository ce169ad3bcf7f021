//! Subgroups as bitmasks, full subgroup enumeration, and the subgroup-level
//! constructions (normalizers, centralizers, Sylow and Frattini subgroups).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::arith::{is_prime, prime_part};
use crate::{ElementSet, Error, Group, Limits, Result};

/// A subgroup of some ambient [`Group`], stored as a membership bitmask.
///
/// Subgroups sort by `(order, members)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: ElementSet,
    order: usize,
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub(crate) fn from_closed(members: ElementSet) -> Self {
        let order = members.len();
        Subgroup { members, order }
    }

    pub fn trivial(g: &Group) -> Self {
        Self::from_closed(ElementSet::from_indices(g.order(), [g.identity()]))
    }

    pub fn whole(g: &Group) -> Self {
        Self::from_closed(ElementSet::full(g.order()))
    }

    /// Wraps a bitmask after checking it is a subgroup of `g`.
    pub fn from_mask(g: &Group, members: ElementSet) -> Result<Self> {
        let h = Self::from_closed(members);
        validate(g, &h)?;
        Ok(h)
    }

    pub fn from_elements(g: &Group, elements: &[usize]) -> Result<Self> {
        if let Some(&index) = elements.iter().find(|&&x| x >= g.order()) {
            return Err(Error::IndexOutOfRange {
                index,
                order: g.order(),
            });
        }
        Self::from_mask(g, ElementSet::from_indices(g.order(), elements.iter().copied()))
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order < other.order && self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Self::from_closed(self.members.intersection(&other.members))
    }
}

/// Checks that `h` lives in `g` and is closed under the group operation.
pub fn validate(g: &Group, h: &Subgroup) -> Result<()> {
    if h.members.capacity() != g.order() {
        return Err(Error::InvalidSubgroup(format!(
            "bitmask over {} elements, group {} has order {}",
            h.members.capacity(),
            g.label(),
            g.order()
        )));
    }
    if !h.contains(g.identity()) {
        return Err(Error::InvalidSubgroup("identity missing".into()));
    }
    for a in h.members.iter() {
        for b in h.members.iter() {
            let ab = g.mul(a, b);
            if !h.contains(ab) {
                return Err(Error::InvalidSubgroup(format!(
                    "not closed: {a} * {b} = {ab} is outside the set"
                )));
            }
        }
    }
    Ok(())
}

/// The least subgroup containing `seed`.
pub fn generated_subgroup(g: &Group, seed: &[usize]) -> Result<Subgroup> {
    if let Some(&index) = seed.iter().find(|&&x| x >= g.order()) {
        return Err(Error::IndexOutOfRange {
            index,
            order: g.order(),
        });
    }
    Ok(close(g, seed))
}

// Right-multiplication closure from the identity. In a finite group the
// monoid generated by `gens` is already the subgroup.
fn close(g: &Group, gens: &[usize]) -> Subgroup {
    let mut members = ElementSet::from_indices(g.order(), [g.identity()]);
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if members.insert(y) {
                queue.push(y);
            }
        }
    }
    Subgroup::from_closed(members)
}

/// `<h, k>`.
pub fn join(g: &Group, h: &Subgroup, k: &Subgroup) -> Subgroup {
    let mut gens = generating_set(g, h);
    gens.extend(generating_set(g, k));
    close(g, &gens)
}

/// A small generating set for `h`, picked greedily in element order.
pub fn generating_set(g: &Group, h: &Subgroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = Subgroup::trivial(g);
    for x in h.members.iter() {
        if !current.contains(x) {
            gens.push(x);
            current = close(g, &gens);
            if current.order == h.order {
                break;
            }
        }
    }
    gens
}

/// The cyclic subgroups of `g`, each with the smallest element generating it.
pub fn cyclic_subgroups(g: &Group) -> Vec<(usize, Subgroup)> {
    let mut seen: HashMap<ElementSet, usize> = HashMap::new();
    let mut out = Vec::new();
    for a in 0..g.order() {
        let c = close(g, &[a]);
        if !seen.contains_key(&c.members) {
            seen.insert(c.members.clone(), a);
            out.push((a, c));
        }
    }
    out
}

/// Every subgroup of `g`, sorted by `(order, members)`.
///
/// Starts from the cyclic subgroups and repeatedly joins each discovered
/// subgroup with every cyclic subgroup it does not contain, until no new
/// subgroup appears. Every subgroup is the join of its cyclic subgroups, so
/// the fixed point is the full lattice.
pub fn all_subgroups(g: &Group, limits: &Limits) -> Result<Vec<Subgroup>> {
    let cyclics = cyclic_subgroups(g);
    let mut known: HashMap<ElementSet, Vec<usize>> = HashMap::new();
    let mut queue: Vec<(Vec<usize>, Subgroup)> = Vec::new();
    for (a, c) in &cyclics {
        let gens = if c.is_trivial() { vec![] } else { vec![*a] };
        known.insert(c.members.clone(), gens.clone());
        queue.push((gens, c.clone()));
    }
    let over_cap = |count: usize| -> Result<()> {
        if count > limits.max_subgroups {
            Err(Error::SubgroupCapExceeded {
                group: g.label().to_string(),
                cap: limits.max_subgroups,
            })
        } else {
            Ok(())
        }
    };
    over_cap(known.len())?;

    while let Some((gens, h)) = queue.pop() {
        for (a, c) in &cyclics {
            if c.members.is_subset(&h.members) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(*a);
            let joined = close(g, &joined_gens);
            if !known.contains_key(&joined.members) {
                known.insert(joined.members.clone(), joined_gens.clone());
                over_cap(known.len())?;
                queue.push((joined_gens, joined));
            }
        }
    }

    let mut subs: Vec<Subgroup> = known.into_keys().map(Subgroup::from_closed).collect();
    subs.sort();
    Ok(subs)
}

/// The order-`p` subgroups of a group, grouped by prime.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinimalSubgroupTable {
    by_prime: BTreeMap<u64, Vec<Subgroup>>,
}

impl MinimalSubgroupTable {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.by_prime.keys().copied()
    }

    pub fn subgroups(&self, p: u64) -> &[Subgroup] {
        self.by_prime.get(&p).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subgroup> {
        self.by_prime.values().flatten()
    }

    pub fn alpha_p(&self, p: u64) -> usize {
        self.subgroups(p).len()
    }

    pub fn alpha(&self) -> usize {
        self.by_prime.values().map(Vec::len).sum()
    }

    pub fn counts(&self) -> AlphaTable {
        AlphaTable {
            by_prime: self.by_prime.iter().map(|(&p, v)| (p, v.len())).collect(),
            total: self.alpha(),
        }
    }
}

/// Per-prime counts of minimal subgroups and their total.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AlphaTable {
    pub by_prime: BTreeMap<u64, usize>,
    pub total: usize,
}

/// Picks out the prime-order subgroups from a complete subgroup list.
pub fn minimal_subgroups(subs: &[Subgroup]) -> MinimalSubgroupTable {
    let mut by_prime: BTreeMap<u64, Vec<Subgroup>> = BTreeMap::new();
    for h in subs {
        if is_prime(h.order as u64) {
            by_prime.entry(h.order as u64).or_default().push(h.clone());
        }
    }
    MinimalSubgroupTable { by_prime }
}

/// `N_G(H) = { x : x H x^-1 = H }`.
pub fn normalizer(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    validate(g, h)?;
    let gens = generating_set(g, h);
    let members = (0..g.order()).filter(|&x| gens.iter().all(|&a| h.contains(g.conjugate(x, a))));
    Ok(Subgroup::from_closed(ElementSet::from_indices(g.order(), members)))
}

/// `C_G(H) = { x : x a = a x for all a in H }`.
pub fn centralizer(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    validate(g, h)?;
    let gens = generating_set(g, h);
    let members = (0..g.order()).filter(|&x| gens.iter().all(|&a| g.commute(x, a)));
    Ok(Subgroup::from_closed(ElementSet::from_indices(g.order(), members)))
}

pub fn is_normal(g: &Group, h: &Subgroup) -> Result<bool> {
    Ok(normalizer(g, h)?.order == g.order())
}

pub fn is_abelian_subgroup(g: &Group, h: &Subgroup) -> bool {
    let gens = generating_set(g, h);
    gens.iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commute(a, b)))
}

/// The first subgroup in `subs` whose order is the full `p`-part of `|G|`.
pub fn sylow_subgroup(g: &Group, p: u64, subs: &[Subgroup]) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    let (target, e) = prime_part(g.order() as u64, p);
    if e == 0 {
        return Err(Error::NoSylow { p, order: g.order() });
    }
    subs.iter()
        .find(|h| h.order as u64 == target)
        .cloned()
        .ok_or_else(|| Error::Integrity(format!("no subgroup of order {target} in the given list")))
}

/// The maximal subgroups of `h` among `subs` (which must be complete).
pub fn maximal_subgroups<'a>(h: &Subgroup, subs: &'a [Subgroup]) -> Vec<&'a Subgroup> {
    let mut proper: Vec<&Subgroup> = subs.iter().filter(|k| k.is_proper_subgroup_of(h)).collect();
    proper.sort_by(|a, b| b.cmp(a));
    let mut maximal: Vec<&Subgroup> = Vec::new();
    for k in proper {
        if !maximal.iter().any(|m| k.is_proper_subgroup_of(m)) {
            maximal.push(k);
        }
    }
    maximal.sort();
    maximal
}

/// Intersection of the maximal subgroups of `h`; `h` itself when trivial.
pub fn frattini_subgroup(h: &Subgroup, subs: &[Subgroup]) -> Subgroup {
    maximal_subgroups(h, subs)
        .into_iter()
        .fold(h.clone(), |acc, m| acc.intersection(m))
}

/// Abelian with every non-identity element of one common prime order.
pub fn is_elementary_abelian(g: &Group, h: &Subgroup) -> bool {
    if !is_abelian_subgroup(g, h) {
        return false;
    }
    let mut common = None;
    for x in h.members.iter().filter(|&x| x != g.identity()) {
        let o = g.order_of(x);
        match common {
            None if is_prime(o as u64) => common = Some(o),
            Some(c) if c == o => {}
            _ => return false,
        }
    }
    true
}
