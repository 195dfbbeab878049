//! r-covering systems and their activities.
//!
//! A covering system is a finite set family in which every member extends to
//! a rank-size member with the whole interval in between inside the family.
//! An activity assigns to each basis (rank-size member) a subset whose
//! intervals `[B \ a(B), B]` partition the family. The module verifies both
//! structures, derives activity and cardinality vectors, converts between
//! them, and implements the restriction / disjoint-union / filter
//! constructions that build new systems from old ones.
//!
//! Verification failures are verdicts carrying a witness, not errors; only
//! malformed inputs (an assignment keyed by a non-basis, say) are errors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::poly::{binomial, poly_from_counts, IntPolynomial, PolyError};

/// Ground elements are opaque ids with the natural total order.
pub type Element = u32;

/// A canonical (sorted, deduplicated) set of ground elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ElementSet(Vec<Element>);

impl ElementSet {
    pub fn new<I: IntoIterator<Item = Element>>(elements: I) -> Self {
        let mut v: Vec<Element> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }

    pub fn empty() -> Self {
        ElementSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().all(|&e| other.contains(e))
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.iter().copied().filter(|&e| !other.contains(e)).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.0
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Errors for malformed covering-system inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoveringError {
    /// A family member used an element outside the ground set.
    ElementOutsideGround { member: ElementSet },
    /// An assignment key is not a basis of the system.
    KeyNotABasis { key: ElementSet },
    /// A basis of the system has no assignment entry.
    MissingBasis { basis: ElementSet },
    /// An assigned active set is not contained in its basis.
    ActiveSetNotInBasis { basis: ElementSet },
    /// A vector length did not match the declared rank.
    LengthMismatch { expected: usize, got: usize },
    /// A selection argument was empty or referenced a non-basis.
    BadSelection(&'static str),
    /// The two families overlap, so their union has no case-split activity.
    OverlappingFamilies { member: ElementSet },
    /// The filtering set is not a member of the family.
    FilterNotInFamily { set: ElementSet },
    /// Propagated polynomial-level error.
    Poly(PolyError),
}

impl fmt::Display for CoveringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoveringError::ElementOutsideGround { member } => {
                write!(f, "family member {member} uses elements outside the ground set")
            }
            CoveringError::KeyNotABasis { key } => {
                write!(f, "assignment key {key} is not a basis")
            }
            CoveringError::MissingBasis { basis } => {
                write!(f, "basis {basis} has no assignment entry")
            }
            CoveringError::ActiveSetNotInBasis { basis } => {
                write!(f, "active set for basis {basis} is not one of its subsets")
            }
            CoveringError::LengthMismatch { expected, got } => {
                write!(f, "vector length {got} does not match rank+1 = {expected}")
            }
            CoveringError::BadSelection(what) => write!(f, "bad basis selection: {what}"),
            CoveringError::OverlappingFamilies { member } => {
                write!(f, "families overlap at {member}")
            }
            CoveringError::FilterNotInFamily { set } => {
                write!(f, "filter set {set} is not in the family")
            }
            CoveringError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl From<PolyError> for CoveringError {
    fn from(e: PolyError) -> Self {
        CoveringError::Poly(e)
    }
}

/// Verdict of the covering-axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoveringVerdict {
    Ok,
    /// A member exceeds the declared rank.
    Oversized(ElementSet),
    /// A member has no basis covering it with a full interval.
    NotCovered(ElementSet),
}

impl CoveringVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, CoveringVerdict::Ok)
    }
}

/// Verdict of the activity partition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActivityVerdict {
    Ok,
    /// Some interval `[B \ a(B), B]` leaves the family.
    BadInterval { basis: ElementSet, member: ElementSet },
    /// A family member lies in no interval.
    Uncovered(ElementSet),
    /// A family member lies in two or more intervals.
    DoublyCovered(ElementSet),
}

impl ActivityVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, ActivityVerdict::Ok)
    }
}

/// An integer count vector indexed by activity number (or by cardinality,
/// when used as a cardinality vector). Entries are exact and may be negative
/// only for the output of [`activity_from_cardinality`] on systems that
/// admit no activity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivityVector(Vec<BigInt>);

impl ActivityVector {
    pub fn new<I: IntoIterator<Item = BigInt>>(entries: I) -> Self {
        ActivityVector(entries.into_iter().collect())
    }

    pub fn from_counts(counts: &[usize]) -> Self {
        ActivityVector(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        ActivityVector(entries.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| !e.is_negative())
    }

    /// Generating polynomial with entry `i` as the coefficient of `x^i`.
    pub fn to_polynomial(&self) -> Result<IntPolynomial, CoveringError> {
        Ok(poly_from_counts(&self.0)?)
    }
}

impl fmt::Display for ActivityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// An r-covering system: a ground set, an explicit family of subsets, and a
/// rank. Immutable after construction; families are desk-scale and stored
/// extensionally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringSystem {
    ground: ElementSet,
    family: BTreeSet<ElementSet>,
    rank: usize,
}

impl CoveringSystem {
    /// Builds a system, checking only well-formedness (members inside the
    /// ground set). Whether the covering axioms hold is a separate question
    /// answered by [`CoveringSystem::verify`].
    pub fn new<I: IntoIterator<Item = ElementSet>>(
        ground: ElementSet,
        family: I,
        rank: usize,
    ) -> Result<Self, CoveringError> {
        let family: BTreeSet<ElementSet> = family.into_iter().collect();
        for member in &family {
            if !member.is_subset(&ground) {
                return Err(CoveringError::ElementOutsideGround {
                    member: member.clone(),
                });
            }
        }
        Ok(CoveringSystem { ground, family, rank })
    }

    pub fn ground(&self) -> &ElementSet {
        &self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn family(&self) -> impl Iterator<Item = &ElementSet> {
        self.family.iter()
    }

    pub fn family_len(&self) -> usize {
        self.family.len()
    }

    pub fn contains(&self, set: &ElementSet) -> bool {
        self.family.contains(set)
    }

    /// The bases: family members of full rank, in lexicographic order.
    pub fn bases(&self) -> impl Iterator<Item = &ElementSet> {
        self.family.iter().filter(move |s| s.len() == self.rank)
    }

    pub fn basis_count(&self) -> usize {
        self.bases().count()
    }

    /// Checks the covering axioms: every member has at most `rank` elements
    /// and extends to a basis with the whole interval inside the family.
    /// Returns the lexicographically first witness on failure.
    pub fn verify(&self) -> CoveringVerdict {
        for member in &self.family {
            if member.len() > self.rank {
                return CoveringVerdict::Oversized(member.clone());
            }
        }
        let mut covered: BTreeSet<&ElementSet> = BTreeSet::new();
        for basis in self.bases() {
            // Per basis, mark every subset whose full interval up to the
            // basis stays inside the family: interval_ok(I) needs I in the
            // family plus interval_ok(I + {x}) for every x missing from I.
            let free: Vec<Element> = basis.iter().collect();
            let slots = free.len();
            let mut ok = alloc::vec![false; 1usize << slots];
            let mut subsets: Vec<u32> = (0..(1u32 << slots)).collect();
            subsets.sort_unstable_by_key(|m| core::cmp::Reverse(m.count_ones()));
            for mask in subsets {
                let set = ElementSet::new(
                    free.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                );
                let mut good = self.family.contains(&set);
                if good {
                    for i in 0..slots {
                        if mask >> i & 1 == 0 && !ok[(mask | 1 << i) as usize] {
                            good = false;
                            break;
                        }
                    }
                }
                ok[mask as usize] = good;
                if good {
                    if let Some(member) = self.family.get(&set) {
                        covered.insert(member);
                    }
                }
            }
        }
        for member in &self.family {
            if !covered.contains(member) {
                return CoveringVerdict::NotCovered(member.clone());
            }
        }
        CoveringVerdict::Ok
    }

    /// `c_i` = number of family members of cardinality `i`, for `i` in
    /// `0..=rank`.
    pub fn cardinality_vector(&self) -> ActivityVector {
        let mut counts = alloc::vec![0usize; self.rank + 1];
        for member in &self.family {
            if member.len() <= self.rank {
                counts[member.len()] += 1;
            }
        }
        ActivityVector::from_counts(&counts)
    }

    /// Checks that the assignment's intervals partition the family.
    ///
    /// The assignment must be a total map on the bases with values inside
    /// their keys; anything else is a malformed input, not a verdict. The
    /// witness returned on failure is deterministic: bases are processed in
    /// lexicographic order and members are scanned in lexicographic order.
    pub fn verify_activity(
        &self,
        act: &ActivityAssignment,
    ) -> Result<ActivityVerdict, CoveringError> {
        self.check_assignment_shape(act)?;
        let mut coverage: BTreeMap<&ElementSet, usize> = BTreeMap::new();
        for basis in self.bases() {
            let active = &act.map[basis];
            for member in interval_members(basis, active) {
                match self.family.get(&member) {
                    Some(found) => *coverage.entry(found).or_insert(0) += 1,
                    None => {
                        return Ok(ActivityVerdict::BadInterval {
                            basis: basis.clone(),
                            member,
                        })
                    }
                }
            }
        }
        for member in &self.family {
            match coverage.get(member).copied().unwrap_or(0) {
                0 => return Ok(ActivityVerdict::Uncovered(member.clone())),
                1 => {}
                _ => return Ok(ActivityVerdict::DoublyCovered(member.clone())),
            }
        }
        Ok(ActivityVerdict::Ok)
    }

    /// The activity vector of a verified assignment: entry `i` counts the
    /// bases with `i` active elements.
    pub fn activity_vector(
        &self,
        act: &ActivityAssignment,
    ) -> Result<ActivityVector, CoveringError> {
        self.check_assignment_shape(act)?;
        let mut counts = alloc::vec![0usize; self.rank + 1];
        for basis in self.bases() {
            counts[act.map[basis].len()] += 1;
        }
        Ok(ActivityVector::from_counts(&counts))
    }

    /// Restriction to a subset of bases: the new family is the union of the
    /// chosen bases' intervals and the assignment restricts.
    pub fn restrict_to_bases(
        &self,
        act: &ActivityAssignment,
        selection: &[ElementSet],
    ) -> Result<(CoveringSystem, ActivityAssignment), CoveringError> {
        self.check_assignment_shape(act)?;
        if selection.is_empty() {
            return Err(CoveringError::BadSelection("selection is empty"));
        }
        let bases: BTreeSet<&ElementSet> = self.bases().collect();
        let mut family = BTreeSet::new();
        let mut map = BTreeMap::new();
        for basis in selection {
            if !bases.contains(basis) {
                return Err(CoveringError::BadSelection(
                    "selection contains a non-basis",
                ));
            }
            let active = &act.map[basis];
            family.extend(interval_members(basis, active));
            map.insert(basis.clone(), active.clone());
        }
        let sys = CoveringSystem::new(self.ground.clone(), family, self.rank)?;
        Ok((sys, ActivityAssignment { map }))
    }

    /// Disjoint union of two systems on the same ground set and rank, with
    /// the case-split activity. Overlapping families are a precondition
    /// failure.
    pub fn disjoint_union(
        s1: &CoveringSystem,
        a1: &ActivityAssignment,
        s2: &CoveringSystem,
        a2: &ActivityAssignment,
    ) -> Result<(CoveringSystem, ActivityAssignment), CoveringError> {
        if s1.ground != s2.ground || s1.rank != s2.rank {
            return Err(CoveringError::BadSelection(
                "union requires equal ground sets and ranks",
            ));
        }
        s1.check_assignment_shape(a1)?;
        s2.check_assignment_shape(a2)?;
        if let Some(member) = s1.family.intersection(&s2.family).next() {
            return Err(CoveringError::OverlappingFamilies {
                member: member.clone(),
            });
        }
        let family: BTreeSet<ElementSet> = s1.family.union(&s2.family).cloned().collect();
        let mut map = a1.map.clone();
        map.extend(a2.map.iter().map(|(k, v)| (k.clone(), v.clone())));
        let sys = CoveringSystem::new(s1.ground.clone(), family, s1.rank)?;
        Ok((sys, ActivityAssignment { map }))
    }

    /// Filter to the members containing `x`, stripping `x` from the active
    /// sets. `x` must itself be a family member.
    pub fn filter_above(
        &self,
        act: &ActivityAssignment,
        x: &ElementSet,
    ) -> Result<(CoveringSystem, ActivityAssignment), CoveringError> {
        self.check_assignment_shape(act)?;
        if !self.family.contains(x) {
            return Err(CoveringError::FilterNotInFamily { set: x.clone() });
        }
        let family: BTreeSet<ElementSet> = self
            .family
            .iter()
            .filter(|m| x.is_subset(m))
            .cloned()
            .collect();
        let map: BTreeMap<ElementSet, ElementSet> = self
            .bases()
            .filter(|b| x.is_subset(b))
            .map(|b| (b.clone(), act.map[b].difference(x)))
            .collect();
        let sys = CoveringSystem::new(self.ground.clone(), family, self.rank)?;
        Ok((sys, ActivityAssignment { map }))
    }

    fn check_assignment_shape(&self, act: &ActivityAssignment) -> Result<(), CoveringError> {
        for (key, value) in &act.map {
            if key.len() != self.rank || !self.family.contains(key) {
                return Err(CoveringError::KeyNotABasis { key: key.clone() });
            }
            if !value.is_subset(key) {
                return Err(CoveringError::ActiveSetNotInBasis { basis: key.clone() });
            }
        }
        for basis in self.bases() {
            if !act.map.contains_key(basis) {
                return Err(CoveringError::MissingBasis {
                    basis: basis.clone(),
                });
            }
        }
        Ok(())
    }
}

/// All members of the interval `[basis \ active, basis]` in lexicographic
/// order.
fn interval_members(basis: &ElementSet, active: &ElementSet) -> Vec<ElementSet> {
    let fixed = basis.difference(active);
    let free: Vec<Element> = active.iter().collect();
    let mut members = Vec::with_capacity(1 << free.len());
    for mask in 0u32..(1 << free.len()) {
        let extra = free
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        members.push(ElementSet::new(fixed.iter().chain(extra)));
    }
    members.sort();
    members
}

/// A basis-indexed choice of active subsets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ActivityAssignment {
    map: BTreeMap<ElementSet, ElementSet>,
}

impl ActivityAssignment {
    pub fn new<I: IntoIterator<Item = (ElementSet, ElementSet)>>(pairs: I) -> Self {
        ActivityAssignment {
            map: pairs.into_iter().collect(),
        }
    }

    pub fn active_set(&self, basis: &ElementSet) -> Option<&ElementSet> {
        self.map.get(basis)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ElementSet, &ElementSet)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Outcome of reconstructing an activity vector from a cardinality vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CardinalityToActivity {
    /// Every entry is nonnegative; any activity of the system has this
    /// vector.
    Feasible(ActivityVector),
    /// A negative entry certifies that the system admits no activity; the
    /// computed vector is returned as the witness.
    Infeasible(ActivityVector),
}

impl CardinalityToActivity {
    pub fn vector(&self) -> &ActivityVector {
        match self {
            CardinalityToActivity::Feasible(v) | CardinalityToActivity::Infeasible(v) => v,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, CardinalityToActivity::Feasible(_))
    }
}

/// Reconstructs the activity vector from a cardinality vector of a rank-r
/// system: `a_r = c_0` and
/// `a_{r-i} = c_i - sum_{j=r-i+1}^{r} a_j * C(j, r-i)`.
///
/// A negative entry means no activity exists; that is a normal result, not
/// an error.
pub fn activity_from_cardinality(
    c: &ActivityVector,
    rank: usize,
) -> Result<CardinalityToActivity, CoveringError> {
    if c.len() != rank + 1 {
        return Err(CoveringError::LengthMismatch {
            expected: rank + 1,
            got: c.len(),
        });
    }
    let mut a = alloc::vec![BigInt::zero(); rank + 1];
    a[rank] = c.entries()[0].clone();
    for i in 1..=rank {
        let mut sum = BigInt::zero();
        for j in (rank - i + 1)..=rank {
            sum += &a[j] * binomial(j as u64, (rank - i) as u64);
        }
        a[rank - i] = &c.entries()[i] - sum;
    }
    let vector = ActivityVector::new(a);
    if vector.is_nonnegative() {
        Ok(CardinalityToActivity::Feasible(vector))
    } else {
        Ok(CardinalityToActivity::Infeasible(vector))
    }
}

/// The cardinality polynomial `sum c_i x^i`.
pub fn cardinality_polynomial(sys: &CoveringSystem) -> Result<IntPolynomial, CoveringError> {
    sys.cardinality_vector().to_polynomial()
}

/// Expands `x^r * alpha(1/x + 1)` exactly as
/// `sum_i a_i (1+x)^i x^(r-i)`, the polynomial the cardinality polynomial
/// must equal.
pub fn expected_cardinality_polynomial(
    alpha: &IntPolynomial,
    rank: usize,
) -> IntPolynomial {
    let one_plus_x = IntPolynomial::from_i64_coeffs(&[1, 1]);
    let mut acc = IntPolynomial::zero();
    for (i, a) in alpha.coeffs().iter().enumerate() {
        let term = &one_plus_x.pow(i as u32) * &IntPolynomial::monomial(a.clone(), rank - i);
        acc = &acc + &term;
    }
    acc
}

/// Checks the cardinality identity `card(x) = x^r * alpha(1/x + 1)` for a
/// verified (system, activity) pair, by exact coefficient comparison.
pub fn cardinality_identity_holds(
    sys: &CoveringSystem,
    act: &ActivityAssignment,
) -> Result<bool, CoveringError> {
    let alpha = sys.activity_vector(act)?.to_polynomial()?;
    let card = cardinality_polynomial(sys)?;
    Ok(card == expected_cardinality_polynomial(&alpha, sys.rank()))
}

/// Canned example systems shared by the test suites and the CLI demos.
pub mod samples {
    use super::*;

    /// A rank-4 system on `{1,..,5}` with 17 members and 4 bases, together
    /// with a valid activity. Its vectors are `C = (0,1,5,7,4)` and
    /// `A = (1,0,2,1,0)`.
    pub fn five_element_system() -> (CoveringSystem, ActivityAssignment) {
        let members: &[&[Element]] = &[
            &[1, 2, 3, 4],
            &[1, 2, 4],
            &[2, 3, 4],
            &[2, 4],
            &[1, 2, 3, 5],
            &[1, 2, 3],
            &[2, 3, 5],
            &[2, 3],
            &[1, 3, 4, 5],
            &[1, 3, 4],
            &[1, 3, 5],
            &[1, 4, 5],
            &[1, 3],
            &[1, 4],
            &[1, 5],
            &[1],
            &[2, 3, 4, 5],
        ];
        let sys = CoveringSystem::new(
            ElementSet::new(1..=5),
            members.iter().map(|m| ElementSet::new(m.iter().copied())),
            4,
        )
        .expect("well-formed sample");
        let act = ActivityAssignment::new([
            (ElementSet::new([1, 2, 3, 4]), ElementSet::new([1, 3])),
            (ElementSet::new([1, 2, 3, 5]), ElementSet::new([1, 5])),
            (ElementSet::new([1, 3, 4, 5]), ElementSet::new([3, 4, 5])),
            (ElementSet::new([2, 3, 4, 5]), ElementSet::empty()),
        ]);
        (sys, act)
    }

    /// The 2-pure independence system on `{1,2,3,4}` with maximal sets
    /// `{1,2}` and `{3,4}`. It is a covering system but admits no activity:
    /// the reconstructed vector is `(-1, 2, 1)`.
    pub fn two_pure_no_activity() -> CoveringSystem {
        let members: &[&[Element]] = &[&[], &[1], &[2], &[3], &[4], &[1, 2], &[3, 4]];
        CoveringSystem::new(
            ElementSet::new(1..=4),
            members.iter().map(|m| ElementSet::new(m.iter().copied())),
            2,
        )
        .expect("well-formed sample")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_system_verifies_and_has_published_vectors() {
        let (sys, act) = samples::five_element_system();
        assert_eq!(sys.family_len(), 17);
        assert_eq!(sys.basis_count(), 4);
        assert!(sys.verify().is_ok());
        assert_eq!(sys.cardinality_vector(), ActivityVector::from_i64(&[0, 1, 5, 7, 4]));
        assert!(sys.verify_activity(&act).unwrap().is_ok());
        assert_eq!(
            sys.activity_vector(&act).unwrap(),
            ActivityVector::from_i64(&[1, 0, 2, 1, 0])
        );
    }

    #[test]
    fn trivial_systems_verify() {
        // Rank 0: the empty set is its own basis.
        let sys = CoveringSystem::new(ElementSet::empty(), [ElementSet::empty()], 0).unwrap();
        assert!(sys.verify().is_ok());
        assert_eq!(sys.cardinality_vector(), ActivityVector::from_i64(&[1]));

        // {{1},{1,2}} with {2} absent: the interval [{1},{1,2}] is inside.
        let sys = CoveringSystem::new(
            ElementSet::new([1, 2]),
            [ElementSet::new([1]), ElementSet::new([1, 2])],
            2,
        )
        .unwrap();
        assert!(sys.verify().is_ok());
    }

    #[test]
    fn oversized_member_is_reported() {
        let sys = CoveringSystem::new(
            ElementSet::new([1, 2]),
            [ElementSet::new([1, 2]), ElementSet::empty()],
            1,
        )
        .unwrap();
        assert_eq!(sys.verify(), CoveringVerdict::Oversized(ElementSet::new([1, 2])));
    }

    #[test]
    fn uncovered_member_is_reported() {
        // {2} does not extend to the basis {1,3}.
        let sys = CoveringSystem::new(
            ElementSet::new([1, 2, 3]),
            [ElementSet::new([2]), ElementSet::new([1, 3])],
            2,
        )
        .unwrap();
        assert_eq!(sys.verify(), CoveringVerdict::NotCovered(ElementSet::new([2])));
    }

    #[test]
    fn cardinality_conversion_matches_sample() {
        let c = ActivityVector::from_i64(&[0, 1, 5, 7, 4]);
        let out = activity_from_cardinality(&c, 4).unwrap();
        assert!(out.is_feasible());
        assert_eq!(out.vector(), &ActivityVector::from_i64(&[1, 0, 2, 1, 0]));

        let c = ActivityVector::from_i64(&[1]);
        let out = activity_from_cardinality(&c, 0).unwrap();
        assert_eq!(out.vector(), &ActivityVector::from_i64(&[1]));

        assert!(activity_from_cardinality(&ActivityVector::from_i64(&[1, 2]), 4).is_err());
    }

    #[test]
    fn two_pure_system_is_infeasible() {
        let sys = samples::two_pure_no_activity();
        assert!(sys.verify().is_ok());
        assert_eq!(sys.cardinality_vector(), ActivityVector::from_i64(&[1, 4, 2]));
        let out = activity_from_cardinality(&sys.cardinality_vector(), 2).unwrap();
        assert!(!out.is_feasible());
        assert_eq!(out.vector(), &ActivityVector::from_i64(&[-1, 2, 1]));
    }

    #[test]
    fn single_basis_boolean_interval() {
        // Family = full power set of {1,2}, a(B) = B.
        let sys = CoveringSystem::new(
            ElementSet::new([1, 2]),
            [
                ElementSet::empty(),
                ElementSet::new([1]),
                ElementSet::new([2]),
                ElementSet::new([1, 2]),
            ],
            2,
        )
        .unwrap();
        let act = ActivityAssignment::new([(ElementSet::new([1, 2]), ElementSet::new([1, 2]))]);
        assert!(sys.verify_activity(&act).unwrap().is_ok());
        assert!(cardinality_identity_holds(&sys, &act).unwrap());
    }

    #[test]
    fn malformed_assignments_are_errors() {
        let (sys, _) = samples::five_element_system();
        let bad_key = ActivityAssignment::new([(ElementSet::new([9, 9, 9, 9]), ElementSet::empty())]);
        assert!(matches!(
            sys.verify_activity(&bad_key),
            Err(CoveringError::KeyNotABasis { .. })
        ));
        let missing = ActivityAssignment::new([]);
        assert!(matches!(
            sys.verify_activity(&missing),
            Err(CoveringError::MissingBasis { .. })
        ));
    }

    #[test]
    fn cardinality_identity_on_sample() {
        let (sys, act) = samples::five_element_system();
        // Hand expansion of x^4 * alpha(1/x + 1) for alpha = 1 + 2x^2 + x^3.
        let expected = IntPolynomial::from_i64_coeffs(&[0, 1, 5, 7, 4]);
        let alpha = sys.activity_vector(&act).unwrap().to_polynomial().unwrap();
        assert_eq!(expected_cardinality_polynomial(&alpha, 4), expected);
        assert!(cardinality_identity_holds(&sys, &act).unwrap());
    }

    #[test]
    fn restriction_examples() {
        let (sys, act) = samples::five_element_system();

        let (sub, sub_act) = sys
            .restrict_to_bases(&act, &[ElementSet::new([2, 3, 4, 5])])
            .unwrap();
        assert_eq!(sub.family_len(), 1);
        assert_eq!(sub.cardinality_vector(), ActivityVector::from_i64(&[0, 0, 0, 0, 1]));
        assert_eq!(
            sub.activity_vector(&sub_act).unwrap(),
            ActivityVector::from_i64(&[1, 0, 0, 0, 0])
        );
        assert!(sub.verify_activity(&sub_act).unwrap().is_ok());

        let (sub, sub_act) = sys
            .restrict_to_bases(&act, &[ElementSet::new([1, 2, 3, 4])])
            .unwrap();
        let expected: BTreeSet<ElementSet> = [
            ElementSet::new([1, 2, 3, 4]),
            ElementSet::new([2, 3, 4]),
            ElementSet::new([1, 2, 4]),
            ElementSet::new([2, 4]),
        ]
        .into_iter()
        .collect();
        assert_eq!(sub.family().cloned().collect::<BTreeSet<_>>(), expected);
        assert!(sub.verify_activity(&sub_act).unwrap().is_ok());

        // Restricting to all bases is the identity.
        let all: Vec<ElementSet> = sys.bases().cloned().collect();
        let (same, same_act) = sys.restrict_to_bases(&act, &all).unwrap();
        assert_eq!(same, sys);
        assert!(same.verify_activity(&same_act).unwrap().is_ok());

        assert!(sys.restrict_to_bases(&act, &[]).is_err());
        assert!(sys
            .restrict_to_bases(&act, &[ElementSet::new([1])])
            .is_err());
    }

    #[test]
    fn union_round_trip_recovers_sample() {
        let (sys, act) = samples::five_element_system();
        let bases: Vec<ElementSet> = sys.bases().cloned().collect();
        let (s1, a1) = sys.restrict_to_bases(&act, &bases[..2]).unwrap();
        let (s2, a2) = sys.restrict_to_bases(&act, &bases[2..]).unwrap();
        let (merged, merged_act) = CoveringSystem::disjoint_union(&s1, &a1, &s2, &a2).unwrap();
        assert_eq!(merged, sys);
        assert!(merged.verify_activity(&merged_act).unwrap().is_ok());
        assert_eq!(
            merged.activity_vector(&merged_act).unwrap(),
            sys.activity_vector(&act).unwrap()
        );

        // Overlapping families are rejected.
        assert!(CoveringSystem::disjoint_union(&s1, &a1, &s1, &a1).is_err());
    }

    #[test]
    fn filter_above_examples() {
        let (sys, act) = samples::five_element_system();

        let (above, above_act) = sys.filter_above(&act, &ElementSet::new([2, 4])).unwrap();
        let expected: BTreeSet<ElementSet> = [
            ElementSet::new([2, 4]),
            ElementSet::new([1, 2, 4]),
            ElementSet::new([2, 3, 4]),
            ElementSet::new([1, 2, 3, 4]),
            ElementSet::new([2, 3, 4, 5]),
        ]
        .into_iter()
        .collect();
        assert_eq!(above.family().cloned().collect::<BTreeSet<_>>(), expected);
        assert!(above.verify_activity(&above_act).unwrap().is_ok());

        // Filtering by the empty set is the identity (on a family that
        // contains it).
        let pow2 = CoveringSystem::new(
            ElementSet::new([1, 2]),
            [
                ElementSet::empty(),
                ElementSet::new([1]),
                ElementSet::new([2]),
                ElementSet::new([1, 2]),
            ],
            2,
        )
        .unwrap();
        let pow2_act =
            ActivityAssignment::new([(ElementSet::new([1, 2]), ElementSet::new([1, 2]))]);
        let (same, same_act) = pow2.filter_above(&pow2_act, &ElementSet::empty()).unwrap();
        assert_eq!(same, pow2);
        assert_eq!(same_act, pow2_act);
    }

    #[test]
    fn filter_above_strips_active_elements() {
        let (sys, act) = samples::five_element_system();
        let x = ElementSet::new([1, 3]);
        let (above, above_act) = sys.filter_above(&act, &x).unwrap();
        assert_eq!(above.family_len(), 7);
        assert_eq!(above.basis_count(), 3);
        assert_eq!(
            above_act.active_set(&ElementSet::new([1, 2, 3, 4])),
            Some(&ElementSet::empty())
        );
        assert_eq!(
            above_act.active_set(&ElementSet::new([1, 2, 3, 5])),
            Some(&ElementSet::new([5]))
        );
        assert_eq!(
            above_act.active_set(&ElementSet::new([1, 3, 4, 5])),
            Some(&ElementSet::new([4, 5]))
        );
        assert!(above.verify_activity(&above_act).unwrap().is_ok());

        assert!(matches!(
            sys.filter_above(&act, &ElementSet::new([2])),
            Err(CoveringError::FilterNotInFamily { .. })
        ));
    }
}
