//! Executable checks of the regularity theorem and the structural claims
//! behind it, plus the census that runs them over a corpus of groups.
//!
//! The claims are checked conditionally: their hypothesis is that the
//! subgroup graph is regular. Once the theorem holds only cyclic groups of
//! square-free order satisfy it, so on a census the claim checks mostly
//! exercise the normalizer, Sylow, Frattini and join code paths.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_power_of, is_prime, is_squarefree, prime_divisors, projective_count};
use crate::group_spec::GroupSpec;
use crate::lattice::{build_lattice, regularity, Lattice, RegularityReport};
use crate::subgroup::{
    all_subgroups, frattini_subgroup, generating_set, is_elementary_abelian, maximal_subgroups,
    sylow_subgroup, Subgroup,
};
use crate::{Error, Group, Limits, Result};

/// Regularity predicted by the theorem: cyclic of square-free order.
pub fn predicted_regular(g: &Group) -> bool {
    g.is_cyclic() && is_squarefree(g.order() as u64)
}

/// Everything computed for one group.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub group: Group,
    pub lattice: Lattice,
    pub report: RegularityReport,
    pub predicted: bool,
}

impl Analysis {
    pub fn run(group: Group, limits: &Limits) -> Result<Analysis> {
        let subs = all_subgroups(&group, limits)?;
        let lattice = build_lattice(&group, &subs)?;
        let report = regularity(&lattice);
        let predicted = predicted_regular(&group);
        Ok(Analysis {
            group,
            lattice,
            report,
            predicted,
        })
    }

    pub fn observed(&self) -> bool {
        self.report.is_regular
    }

    pub fn matches(&self) -> bool {
        self.observed() == self.predicted
    }

    pub fn claims(&self) -> ClaimReport {
        claim_report(&self.group, &self.lattice)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub observed: bool,
    pub predicted: bool,
    pub matches: bool,
}

pub fn verify_equivalence(g: &Group, limits: &Limits) -> Result<Equivalence> {
    let a = Analysis::run(g.clone(), limits)?;
    Ok(Equivalence {
        observed: a.observed(),
        predicted: a.predicted,
        matches: a.matches(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimId {
    /// p-elements for odd p normalize every minimal subgroup.
    Claim1,
    /// The join of the odd-order minimal subgroups is abelian and normal.
    Claim2,
    /// Its index is a power of 2.
    Claim3,
    /// The Sylow 2-subgroup is elementary abelian with trivial Frattini subgroup.
    Claim4,
    /// The group is abelian with elementary abelian Sylow subgroups.
    Claim5,
    /// Maximal-subgroup counting for a rank >= 2 elementary abelian Sylow.
    Claim6,
}

/// Evidence for a failed check: the elements and lattice vertices involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub detail: String,
    pub elements: Vec<usize>,
    pub subgroups: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    Fails(Witness),
    NotApplicable,
}

impl ClaimStatus {
    pub fn is_failure(&self) -> bool {
        matches!(self, ClaimStatus::Fails(_))
    }

    fn fails(detail: impl Into<String>, elements: Vec<usize>, subgroups: Vec<usize>) -> Self {
        ClaimStatus::Fails(Witness {
            detail: detail.into(),
            elements,
            subgroups,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub label: String,
    pub claims: BTreeMap<ClaimId, ClaimStatus>,
}

impl ClaimReport {
    pub fn has_failures(&self) -> bool {
        self.claims.values().any(ClaimStatus::is_failure)
    }
}

pub fn claim_report(g: &Group, lat: &Lattice) -> ClaimReport {
    let mut claims = BTreeMap::new();
    claims.insert(ClaimId::Claim1, verify_claim1(g, lat));
    let (c2, c3) = verify_claim2_3(g, lat);
    claims.insert(ClaimId::Claim2, c2);
    claims.insert(ClaimId::Claim3, c3);
    let (c4, c5) = verify_claim4_5(g, lat);
    claims.insert(ClaimId::Claim4, c4);
    claims.insert(ClaimId::Claim5, c5);
    claims.insert(ClaimId::Claim6, verify_claim6(g, lat));
    ClaimReport {
        label: g.label().to_string(),
        claims,
    }
}

fn is_regular(lat: &Lattice) -> bool {
    let deltas = lat.deltas();
    deltas.iter().all(|&d| d == deltas[0])
}

/// Any non-identity element generates a prime-order subgroup.
fn generator(g: &Group, a: &Subgroup) -> usize {
    a.members()
        .iter()
        .find(|&x| x != g.identity())
        .expect("prime-order subgroup has a non-identity element")
}

/// Claim 1 under its hypothesis: not applicable unless the lattice is regular.
pub fn verify_claim1(g: &Group, lat: &Lattice) -> ClaimStatus {
    if !is_regular(lat) {
        return ClaimStatus::NotApplicable;
    }
    check_claim1(g, lat)
}

/// Every element of odd prime-power order normalizes every minimal subgroup.
pub fn check_claim1(g: &Group, lat: &Lattice) -> ClaimStatus {
    let minimal = lat.minimal_subgroups();
    let odd_primes: Vec<u64> = prime_divisors(g.order() as u64).into_iter().filter(|&p| p != 2).collect();
    for x in 0..g.order() {
        let o = g.order_of(x) as u64;
        if o == 1 || !odd_primes.iter().any(|&p| is_power_of(o, p)) {
            continue;
        }
        for a in minimal.iter() {
            let gen = generator(g, a);
            if !a.contains(g.conjugate(x, gen)) {
                return ClaimStatus::fails(
                    format!("element {x} of order {o} does not normalize a subgroup of order {}", a.order()),
                    vec![x, gen],
                    lat.index_of(a).into_iter().collect(),
                );
            }
        }
    }
    ClaimStatus::Holds
}

/// `N`: the join of all minimal subgroups of odd prime order.
pub fn odd_minimal_join(g: &Group, lat: &Lattice) -> Subgroup {
    let minimal = lat.minimal_subgroups();
    let gens: Vec<usize> = minimal
        .primes()
        .filter(|&p| p != 2)
        .flat_map(|p| minimal.subgroups(p).iter().map(|a| generator(g, a)))
        .collect();
    crate::subgroup::generated_subgroup(g, &gens).expect("generators are group elements")
}

pub fn verify_claim2_3(g: &Group, lat: &Lattice) -> (ClaimStatus, ClaimStatus) {
    if !is_regular(lat) {
        return (ClaimStatus::NotApplicable, ClaimStatus::NotApplicable);
    }
    check_claim2_3(g, lat)
}

/// `N` is abelian and normal; `|G:N|` is a power of 2.
pub fn check_claim2_3(g: &Group, lat: &Lattice) -> (ClaimStatus, ClaimStatus) {
    let n = odd_minimal_join(g, lat);
    let n_index: Vec<usize> = lat.index_of(&n).into_iter().collect();
    let gens = generating_set(g, &n);

    let mut claim2 = ClaimStatus::Holds;
    'abelian: for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            if !g.commute(a, b) {
                claim2 = ClaimStatus::fails("N is not abelian", vec![a, b], n_index.clone());
                break 'abelian;
            }
        }
    }
    if !claim2.is_failure() {
        if let Some((x, a)) = (0..g.order())
            .flat_map(|x| gens.iter().map(move |&a| (x, a)))
            .find(|&(x, a)| !n.contains(g.conjugate(x, a)))
        {
            claim2 = ClaimStatus::fails("N is not normal", vec![x, a], n_index.clone());
        }
    }

    let index = (g.order() / n.order()) as u64;
    let claim3 = if is_power_of(index, 2) {
        ClaimStatus::Holds
    } else {
        ClaimStatus::fails(format!("|G:N| = {index} is not a power of 2"), vec![], n_index)
    };
    (claim2, claim3)
}

pub fn verify_claim4_5(g: &Group, lat: &Lattice) -> (ClaimStatus, ClaimStatus) {
    if !is_regular(lat) {
        return (ClaimStatus::NotApplicable, ClaimStatus::NotApplicable);
    }
    check_claim4_5(g, lat)
}

/// The Sylow 2-subgroup is elementary abelian with trivial Frattini
/// subgroup (vacuous for odd order); `G` is abelian with elementary abelian
/// Sylow subgroups.
pub fn check_claim4_5(g: &Group, lat: &Lattice) -> (ClaimStatus, ClaimStatus) {
    let subs = lat.vertices();
    let sylow = |p: u64| sylow_subgroup(g, p, subs).expect("p divides |G| and the lattice is complete");

    let claim4 = if g.order() % 2 != 0 {
        ClaimStatus::Holds
    } else {
        let q = sylow(2);
        let q_index: Vec<usize> = lat.index_of(&q).into_iter().collect();
        let frattini = frattini_subgroup(&q, subs);
        if !is_elementary_abelian(g, &q) {
            ClaimStatus::fails("Sylow 2-subgroup is not elementary abelian", q.elements(), q_index)
        } else if !frattini.is_trivial() {
            ClaimStatus::fails(
                "Frattini subgroup of the Sylow 2-subgroup is not trivial",
                frattini.elements(),
                q_index,
            )
        } else {
            ClaimStatus::Holds
        }
    };

    let claim5 = if let Some((a, b)) = first_noncommuting_pair(g) {
        ClaimStatus::fails("G is not abelian", vec![a, b], vec![])
    } else {
        prime_divisors(g.order() as u64)
            .into_iter()
            .map(|p| (p, sylow(p)))
            .find(|(_, s)| !is_elementary_abelian(g, s))
            .map_or(ClaimStatus::Holds, |(p, s)| {
                ClaimStatus::fails(
                    format!("Sylow {p}-subgroup is not elementary abelian"),
                    s.elements(),
                    lat.index_of(&s).into_iter().collect(),
                )
            })
    };
    (claim4, claim5)
}

fn first_noncommuting_pair(g: &Group) -> Option<(usize, usize)> {
    (0..g.order())
        .flat_map(|a| (a + 1..g.order()).map(move |b| (a, b)))
        .find(|&(a, b)| !g.commute(a, b))
}

/// Degree bookkeeping for an abelian group whose Sylow subgroups are all
/// elementary abelian, with some Sylow `p`-subgroup of rank `d >= 2`.
///
/// Checks that `alpha_p = (p^d - 1)/(p - 1)`, that
/// `delta(1) = (p^d - 1)/(p - 1) + sum_{q != p} alpha_q`, that every maximal
/// subgroup `X` of index `p` has
/// `delta(X) = (p^(d-1) - 1)/(p - 1) + 1 + sum_{q != p} alpha_q`, and hence
/// that `delta(X) != delta(1)`. Not applicable to any other group.
pub fn verify_claim6(g: &Group, lat: &Lattice) -> ClaimStatus {
    let subs = lat.vertices();
    if !g.is_abelian() {
        return ClaimStatus::NotApplicable;
    }
    let factors = factorize(g.order() as u64);
    let sylows: Vec<(u64, u32, Subgroup)> = factors
        .iter()
        .map(|&(p, d)| (p, d, sylow_subgroup(g, p, subs).expect("complete lattice")))
        .collect();
    if sylows.iter().any(|(_, _, s)| !is_elementary_abelian(g, s)) || factors.iter().all(|&(_, d)| d < 2) {
        return ClaimStatus::NotApplicable;
    }
    let minimal = lat.minimal_subgroups();
    let deltas = lat.deltas();
    let bottom = deltas[lat.bottom()];
    let whole = &subs[lat.top()];

    for &(p, d) in factors.iter().filter(|&&(_, d)| d >= 2) {
        let others: usize = minimal.primes().filter(|&q| q != p).map(|q| minimal.alpha_p(q)).sum();
        let alpha_p = minimal.alpha_p(p);
        if alpha_p as u64 != projective_count(p, d) {
            return ClaimStatus::fails(
                format!("alpha_{p} = {alpha_p}, expected {}", projective_count(p, d)),
                vec![],
                vec![],
            );
        }
        let expected_bottom = projective_count(p, d) as usize + others;
        if bottom != expected_bottom {
            return ClaimStatus::fails(
                format!("delta(1) = {bottom}, expected {expected_bottom}"),
                vec![],
                vec![lat.bottom()],
            );
        }
        let expected_x = projective_count(p, d - 1) as usize + 1 + others;
        for x in maximal_subgroups(whole, subs) {
            if whole.order() / x.order() != p as usize {
                continue;
            }
            let v = lat.index_of(x).expect("vertex of the lattice");
            if deltas[v] != expected_x || deltas[v] == bottom {
                return ClaimStatus::fails(
                    format!(
                        "maximal subgroup of index {p}: delta = {}, expected {expected_x} (delta(1) = {bottom})",
                        deltas[v]
                    ),
                    vec![],
                    vec![v],
                );
            }
        }
    }
    ClaimStatus::Holds
}

/// The elementary abelian group `(C_p)^d`, labelled `CpxCpx...`.
pub fn elementary_abelian_group(p: u64, d: u32, limits: &Limits) -> Result<Group> {
    let cp = Group::cyclic(p as usize, limits)?;
    let mut g = cp.clone();
    for _ in 1..d {
        g = Group::direct_product(&g, &cp, limits)?;
    }
    Ok(g)
}

/// Counts of maximal and minimal subgroups of `(C_p)^d` against `(p^d - 1)/(p - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingCheck {
    pub p: u64,
    pub d: u32,
    pub maximal: usize,
    pub minimal: usize,
    pub expected: u64,
}

impl CountingCheck {
    pub fn holds(&self) -> bool {
        self.maximal as u64 == self.expected && self.minimal as u64 == self.expected
    }
}

pub fn verify_counting_identity(p: u64, d: u32, limits: &Limits) -> Result<CountingCheck> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    if d == 0 {
        return Err(Error::InvalidOrder {
            order: 1,
            cap: limits.max_order,
        });
    }
    let size = p.checked_pow(d).filter(|&s| s <= limits.max_order as u64).ok_or(Error::OrderCapExceeded {
        what: format!("(C{p})^{d}"),
        reached: usize::MAX,
        cap: limits.max_order,
    })?;
    let g = elementary_abelian_group(p, d, limits)?;
    debug_assert_eq!(g.order() as u64, size);
    let lat = build_lattice(&g, &all_subgroups(&g, limits)?)?;
    Ok(CountingCheck {
        p,
        d,
        maximal: lat.degree(lat.top())?.deg1,
        minimal: lat.degree(lat.bottom())?.deg2,
        expected: projective_count(p, d),
    })
}

/// Every `(p, d)` with `d >= 1` and `p^d <= max_order`.
pub fn counting_cases(max_order: usize) -> Vec<(u64, u32)> {
    let max = max_order as u64;
    (2..=max)
        .filter(|&p| is_prime(p))
        .flat_map(|p| (1..).take_while(move |&d| p.pow(d) <= max).map(move |d| (p, d)))
        .collect()
}

fn partitions(n: u32, largest: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=largest.min(n))
        .rev()
        .flat_map(|k| {
            partitions(n - k, k).into_iter().map(move |mut rest| {
                rest.insert(0, k);
                rest
            })
        })
        .collect()
}

/// Cyclic prime-power factors of each abelian group of order `n`, one list
/// per isomorphism type, primes ascending and exponents descending.
pub fn abelian_factorizations(n: u64) -> Vec<Vec<u64>> {
    let mut choices: Vec<Vec<u64>> = vec![vec![]];
    for (p, e) in factorize(n) {
        choices = choices
            .iter()
            .flat_map(|prefix| {
                partitions(e, e).into_iter().map(move |part| {
                    let mut v = prefix.clone();
                    v.extend(part.iter().map(|&k| p.pow(k)));
                    v
                })
            })
            .collect();
    }
    choices
}

/// Specs for the abelian groups of order `n`, e.g. `C4xC3` and `C2xC2xC3` for 12.
pub fn abelian_specs(n: u64) -> Vec<String> {
    abelian_factorizations(n)
        .into_iter()
        .map(|v| {
            if v.is_empty() {
                "C1".to_string()
            } else {
                v.iter().map(|q| format!("C{q}")).collect::<Vec<_>>().join("x")
            }
        })
        .collect()
}

/// The built-in census corpus, restricted to groups of order at most `max_order`.
///
/// All `C_n` with `n <= 100`; the non-cyclic abelian groups of order at most
/// 48; `D_n` of order at most 60; `S3`, `Q8`, `A4`, `S4`, `A5`; and
/// `C_m x D_n` (`m >= 2`, `n >= 3`) of order at most 60.
pub fn default_corpus(max_order: usize) -> Vec<GroupSpec> {
    let max = max_order as u64;
    let mut specs: Vec<String> = Vec::new();
    specs.extend((1..=max.min(100)).map(|n| format!("C{n}")));
    for n in 1..=max.min(48) {
        // the cyclic type is already covered by Cn
        let primes = factorize(n).len();
        specs.extend(
            abelian_factorizations(n)
                .into_iter()
                .filter(|f| f.len() > primes)
                .map(|f| f.iter().map(|q| format!("C{q}")).collect::<Vec<_>>().join("x")),
        );
    }
    specs.extend((1..=max.min(60) / 2).map(|n| format!("D{n}")));
    for (spec, order) in [("S3", 6), ("Q8", 8), ("A4", 12), ("S4", 24), ("A5", 60)] {
        if order <= max {
            specs.push(spec.to_string());
        }
    }
    for n in 3..=30u64 {
        for m in 2..=30u64 {
            if 2 * m * n <= max.min(60) {
                specs.push(format!("C{m}xD{n}"));
            }
        }
    }
    specs
        .iter()
        .map(|s| GroupSpec::parse(s).expect("built-in corpus specs parse"))
        .collect()
}

/// Result of the census pipeline for one analyzed group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupResult {
    pub n_subgroups: usize,
    pub degree_sequence: Vec<usize>,
    pub observed: bool,
    pub predicted: bool,
    /// `delta(1) = alpha` and `alpha_p = #(order-p elements)/(p - 1)` for every `p`.
    pub alpha_identity: bool,
    /// Regular groups only: every degree equals the number of prime factors.
    pub degree_t: Option<bool>,
    pub claims: BTreeMap<ClaimId, ClaimStatus>,
}

impl GroupResult {
    pub fn matches(&self) -> bool {
        self.observed == self.predicted
    }

    /// A claim failure or a broken degree identity.
    pub fn has_check_failures(&self) -> bool {
        !self.alpha_identity || self.degree_t == Some(false) || self.claims.values().any(ClaimStatus::is_failure)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CensusOutcome {
    Analyzed(GroupResult),
    /// Over a size cap; never silently dropped.
    Skipped(String),
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub label: String,
    pub order: Option<usize>,
    pub outcome: CensusOutcome,
}

/// `delta(1) = alpha`, cross-checked against element counts.
pub fn alpha_identity_holds(g: &Group, lat: &Lattice) -> bool {
    let table = lat.minimal_subgroups();
    let orders = g.element_orders();
    let by_elements = prime_divisors(g.order() as u64).into_iter().all(|p| {
        let count = orders.iter().filter(|&&o| o as u64 == p).count();
        count % (p as usize - 1) == 0 && table.alpha_p(p) == count / (p as usize - 1)
    });
    let bottom = lat.degree(lat.bottom()).expect("nonempty lattice");
    by_elements && bottom.delta == table.alpha() && bottom.deg2 == table.alpha()
}

/// For a regular lattice: every degree equals the number of prime factors
/// of `|G|` and there are `2^t` vertices.
pub fn degree_t_holds(g: &Group, lat: &Lattice) -> bool {
    let t = factorize(g.order() as u64).len();
    lat.len() == 1 << t && lat.deltas().iter().all(|&d| d == t)
}

pub fn census_entry(spec: &GroupSpec, limits: &Limits) -> CensusEntry {
    let label = spec.to_string();
    let classify = |e: Error| match e {
        Error::InvalidOrder { .. } | Error::OrderCapExceeded { .. } | Error::SubgroupCapExceeded { .. } => {
            CensusOutcome::Skipped(e.to_string())
        }
        other => CensusOutcome::Error(other.to_string()),
    };
    let group = match spec.build(limits) {
        Ok(g) => g,
        Err(e) => {
            return CensusEntry {
                label,
                order: None,
                outcome: classify(e),
            }
        }
    };
    let order = Some(group.order());
    let analysis = match Analysis::run(group, limits) {
        Ok(a) => a,
        Err(e) => {
            return CensusEntry {
                label,
                order,
                outcome: classify(e),
            }
        }
    };
    let Analysis {
        group,
        lattice,
        report,
        predicted,
    } = &analysis;
    let result = GroupResult {
        n_subgroups: lattice.len(),
        degree_sequence: report.degree_sequence.clone(),
        observed: report.is_regular,
        predicted: *predicted,
        alpha_identity: alpha_identity_holds(group, lattice),
        degree_t: report.is_regular.then(|| degree_t_holds(group, lattice)),
        claims: analysis.claims().claims,
    };
    CensusEntry {
        label,
        order,
        outcome: CensusOutcome::Analyzed(result),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusVerdict {
    pub corpus: String,
    pub entries: Vec<CensusEntry>,
    /// Labels whose observed regularity differs from the prediction.
    pub mismatches: Vec<String>,
    /// Labels with a failed claim or degree identity.
    pub check_failures: Vec<String>,
    pub counting: Vec<CountingCheck>,
}

impl CensusVerdict {
    pub fn from_entries(corpus: impl Into<String>, entries: Vec<CensusEntry>, counting: Vec<CountingCheck>) -> Self {
        let mut mismatches = Vec::new();
        let mut check_failures = Vec::new();
        for e in &entries {
            if let CensusOutcome::Analyzed(r) = &e.outcome {
                if !r.matches() {
                    mismatches.push(e.label.clone());
                }
                if r.has_check_failures() {
                    check_failures.push(e.label.clone());
                }
            }
        }
        CensusVerdict {
            corpus: corpus.into(),
            entries,
            mismatches,
            check_failures,
            counting,
        }
    }

    pub fn theorem_verified(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn analyzed(&self) -> impl Iterator<Item = (&CensusEntry, &GroupResult)> {
        self.entries.iter().filter_map(|e| match &e.outcome {
            CensusOutcome::Analyzed(r) => Some((e, r)),
            _ => None,
        })
    }

    pub fn skipped(&self) -> usize {
        self.entries.iter().filter(|e| matches!(e.outcome, CensusOutcome::Skipped(_))).count()
    }

    pub fn errors(&self) -> usize {
        self.entries.iter().filter(|e| matches!(e.outcome, CensusOutcome::Error(_))).count()
    }

    pub fn counting_failures(&self) -> usize {
        self.counting.iter().filter(|c| !c.holds()).count()
    }
}

/// Runs every counting case that fits under the caps; cases over a cap are left out.
pub fn counting_checks(limits: &Limits) -> Vec<CountingCheck> {
    counting_cases(limits.max_order)
        .into_iter()
        .filter_map(|(p, d)| verify_counting_identity(p, d, limits).ok())
        .collect()
}

/// Sequential census over `corpus`.
pub fn run_census(corpus: &[GroupSpec], limits: &Limits) -> CensusVerdict {
    let entries = corpus.iter().map(|s| census_entry(s, limits)).collect();
    let description = format!("{} groups, max order {}", corpus.len(), limits.max_order);
    CensusVerdict::from_entries(description, entries, counting_checks(limits))
}
