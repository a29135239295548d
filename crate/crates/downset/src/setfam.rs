//! Ground-set and set-family primitives.
//!
//! Faces are subsets of `[n] = {1, …, n}` stored as bit masks with
//! machine-word granularity, so subset tests, unions and intersections cost
//! `O(n/w)`. A [`SetFamily`] is a finite, duplicate-free list of faces over an
//! explicit ground size; an [`Antichain`] is a family in which no member
//! contains another. Facet families (maximal faces of a down-set) and blocker
//! families (minimal non-faces) are both antichains.
//!
//! The ground size is always carried explicitly and never inferred from the
//! members: the face-count vector of a down-set depends on `n` even for
//! elements that appear in no member.

use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};

use crate::budget::Budget;
use crate::error::{Error, Result};

/// Hard cap on the ground size.
pub const N_MAX: usize = 1024;

const WORD_BITS: usize = 64;

// Faces up to 128 elements live inline; larger ground sets spill to the heap.
type Words = SmallVec<[u64; 2]>;

/// Number of ground elements; elements are labeled `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSize(usize);

impl GroundSize {
    pub fn new(n: usize) -> Result<Self> {
        if n > N_MAX {
            return Err(Error::GroundSetTooLarge { n, max: N_MAX });
        }
        Ok(GroundSize(n))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for GroundSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the ground set, as a membership mask over positions `1..=n`.
///
/// Stored as little-endian 64-bit words with trailing zero words trimmed, so
/// equality and hashing are independent of any particular ground size. The
/// cardinality is cached; it is determined by the words, so the derived
/// equality and hashing stay consistent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Face {
    card: u32,
    words: Words,
}

impl Face {
    /// The empty set.
    pub fn empty() -> Self {
        Face {
            card: 0,
            words: SmallVec::new(),
        }
    }

    /// The full ground set `[n]`.
    pub fn full(n: GroundSize) -> Self {
        let n = n.get();
        let mut words: Words = smallvec![!0u64; n / WORD_BITS];
        if n % WORD_BITS != 0 {
            words.push((1u64 << (n % WORD_BITS)) - 1);
        }
        Face {
            card: n as u32,
            words,
        }
    }

    /// The singleton `{element}` (1-based).
    pub fn singleton(element: u32) -> Self {
        let mut face = Face::empty();
        face.insert(element);
        face
    }

    /// Builds a face from 1-based element labels. Repeats are harmless.
    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Self {
        let mut face = Face::empty();
        for e in elements {
            face.insert(e);
        }
        face
    }

    /// Interprets the low bits of a word as elements `1..=64`.
    pub fn from_word(mask: u64) -> Self {
        if mask == 0 {
            Face::empty()
        } else {
            Face {
                card: mask.count_ones(),
                words: smallvec![mask],
            }
        }
    }

    /// Inserts a 1-based element.
    pub fn insert(&mut self, element: u32) {
        assert!(element >= 1, "elements are 1-based");
        let bit = (element - 1) as usize;
        let word = bit / WORD_BITS;
        if word >= self.words.len() {
            self.words.resize(word + 1, 0);
        }
        let mask = 1u64 << (bit % WORD_BITS);
        if self.words[word] & mask == 0 {
            self.words[word] |= mask;
            self.card += 1;
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Cardinality `|σ|`.
    pub fn card(&self) -> usize {
        self.card as usize
    }

    pub fn contains(&self, element: u32) -> bool {
        if element == 0 {
            return false;
        }
        let bit = (element - 1) as usize;
        self.words
            .get(bit / WORD_BITS)
            .is_some_and(|w| w & (1u64 << (bit % WORD_BITS)) != 0)
    }

    /// Largest element label, if any.
    pub fn max_element(&self) -> Option<u32> {
        let top = *self.words.last()?;
        let word = self.words.len() - 1;
        Some((word * WORD_BITS + (63 - top.leading_zeros() as usize) + 1) as u32)
    }

    /// Does every element fit within the ground set?
    pub fn fits(&self, n: GroundSize) -> bool {
        self.max_element().map_or(true, |m| m as usize <= n.get())
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.words.len() > other.words.len() {
            return false;
        }
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Face) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .any(|(a, b)| a & b != 0)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        let mut words: Words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        Face {
            card: words.iter().map(|w| w.count_ones()).sum(),
            words,
        }
    }

    pub fn union(&self, other: &Face) -> Face {
        let (long, short) = if self.words.len() >= other.words.len() {
            (&self.words, &other.words)
        } else {
            (&other.words, &self.words)
        };
        let mut words = long.clone();
        for (w, s) in words.iter_mut().zip(short) {
            *w |= s;
        }
        Face {
            card: words.iter().map(|w| w.count_ones()).sum(),
            words,
        }
    }

    /// Complement within `[n]`.
    pub fn complement(&self, n: GroundSize) -> Face {
        debug_assert!(self.fits(n));
        let mut full = Face::full(n);
        for (w, s) in full.words.iter_mut().zip(&self.words) {
            *w &= !s;
        }
        full.trim();
        full.card = n.get() as u32 - self.card;
        full
    }

    /// The low 64 bits of the mask; the whole face when `n ≤ 64`.
    pub(crate) fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    /// Ascending 1-based element labels, without materializing a vector.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            std::iter::successors(
                (word != 0).then_some(word),
                |w| {
                    let next = w & (w - 1);
                    (next != 0).then_some(next)
                },
            )
            .map(move |w| (i * WORD_BITS + w.trailing_zeros() as usize + 1) as u32)
        })
    }

    /// Ascending 1-based element labels.
    pub fn elements(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Numeric mask-value comparison, treating the mask as a big integer.
    fn cmp_mask(&self, other: &Face) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

/// Canonical order: cardinality first, then numeric mask value.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.card
            .cmp(&other.card)
            .then_with(|| self.cmp_mask(other))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A duplicate-free family of faces over an explicit ground size, sorted by
/// (cardinality, numeric mask value).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: GroundSize,
    members: Vec<Face>,
}

impl SetFamily {
    /// Normalizes on construction: checks every member fits `n`, then
    /// deduplicates and sorts canonically. The set of members is unchanged.
    pub fn new(n: GroundSize, members: Vec<Face>) -> Result<Self> {
        for face in &members {
            if !face.fits(n) {
                return Err(Error::MemberOutOfRange {
                    element: face.max_element().unwrap(),
                    n: n.get(),
                    line: None,
                });
            }
        }
        Ok(Self::normalized(n, members))
    }

    /// Sorts and deduplicates; members must already fit `n`.
    pub(crate) fn normalized(n: GroundSize, mut members: Vec<Face>) -> Self {
        members.sort_unstable();
        members.dedup();
        SetFamily { n, members }
    }

    /// Members must fit `n` and already be in canonical order without
    /// duplicates.
    pub(crate) fn from_sorted_unchecked(n: GroundSize, members: Vec<Face>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetFamily { n, members }
    }

    pub fn empty(n: GroundSize) -> Self {
        SetFamily {
            n,
            members: Vec::new(),
        }
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn members(&self) -> &[Face] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_member(&self, face: &Face) -> bool {
        self.members.binary_search(face).is_ok()
    }

    /// True iff no member is a proper subset of another.
    pub fn is_antichain(&self) -> bool {
        // Members are sorted by cardinality, so containment can only point
        // backwards.
        for (i, big) in self.members.iter().enumerate() {
            for small in &self.members[..i] {
                if small.is_subset(big) {
                    return false;
                }
            }
        }
        true
    }

    /// Members not strictly contained in another member.
    pub fn max_antichain(&self) -> Antichain {
        let keep: Vec<Face> = self
            .members
            .iter()
            .filter(|face| {
                !self
                    .members
                    .iter()
                    .any(|other| *face != other && face.is_subset(other))
            })
            .cloned()
            .collect();
        Antichain(SetFamily {
            n: self.n,
            members: keep,
        })
    }

    /// Members not strictly containing another member.
    pub fn min_antichain(&self) -> Antichain {
        let keep: Vec<Face> = self
            .members
            .iter()
            .filter(|face| {
                !self
                    .members
                    .iter()
                    .any(|other| *face != other && other.is_subset(face))
            })
            .cloned()
            .collect();
        Antichain(SetFamily {
            n: self.n,
            members: keep,
        })
    }
}

/// A [`SetFamily`] in which no member contains another.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Antichain(SetFamily);

impl Antichain {
    pub fn new(family: SetFamily) -> Result<Self> {
        for (i, big) in family.members.iter().enumerate() {
            for small in &family.members[..i] {
                if small.is_subset(big) {
                    return Err(Error::NotAntichain {
                        contained: small.to_string(),
                        container: big.to_string(),
                    });
                }
            }
        }
        Ok(Antichain(family))
    }

    /// Skips the antichain check; callers guarantee the invariant.
    pub(crate) fn from_family_unchecked(family: SetFamily) -> Self {
        debug_assert!(family.is_antichain());
        Antichain(family)
    }

    pub(crate) fn from_members_unchecked(n: GroundSize, members: Vec<Face>) -> Self {
        Self::from_family_unchecked(SetFamily::normalized(n, members))
    }

    /// Members must already be canonical (sorted, deduplicated) and pairwise
    /// incomparable; minimization guarantees all three.
    pub(crate) fn from_sorted_unchecked(n: GroundSize, members: Vec<Face>) -> Self {
        Antichain(SetFamily::from_sorted_unchecked(n, members))
    }

    pub fn family(&self) -> &SetFamily {
        &self.0
    }

    pub fn into_family(self) -> SetFamily {
        self.0
    }

    pub fn n(&self) -> GroundSize {
        self.0.n
    }

    pub fn members(&self) -> &[Face] {
        &self.0.members
    }

    pub fn len(&self) -> usize {
        self.0.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.members.is_empty()
    }

    pub fn contains_member(&self, face: &Face) -> bool {
        self.0.contains_member(face)
    }
}

/// Membership by facets: `σ ∈ Δ` iff `σ ⊆ F` for some facet `F`.
pub fn member_by_facets(sigma: &Face, facets: &Antichain) -> bool {
    debug_assert!(sigma.fits(facets.n()));
    facets.members().iter().any(|f| sigma.is_subset(f))
}

/// Membership by blockers: `σ ∈ Δ` iff no blocker is a subset of `σ`.
pub fn member_by_blockers(sigma: &Face, blockers: &Antichain) -> bool {
    debug_assert!(sigma.fits(blockers.n()));
    !blockers.members().iter().any(|m| m.is_subset(sigma))
}

/// Evaluates the monotone DNF `⋁_M ⋀_{i∈M} x_i` determined by the blockers.
///
/// The assignment is the set of true variables; the function is true exactly
/// on the non-faces, so this is the negation of [`member_by_blockers`].
pub fn eval_monotone_dnf(blockers: &Antichain, assignment: &Face) -> bool {
    !member_by_blockers(assignment, blockers)
}

/// Materializes the whole down-set generated by the facets.
///
/// Brute-force oracle: walks all `2^n` subsets, so `n` is capped by
/// `budget.oracle_cap`.
pub fn enumerate_downset(facets: &Antichain, budget: &Budget) -> Result<SetFamily> {
    let n = facets.n();
    check_oracle_cap(n, budget)?;
    let faces = enumerate_where(n, |sigma| member_by_facets(sigma, facets));
    Ok(SetFamily::normalized(n, faces))
}

/// As [`enumerate_downset`], but testing membership against blockers.
pub fn enumerate_downset_from_blockers(blockers: &Antichain, budget: &Budget) -> Result<SetFamily> {
    let n = blockers.n();
    check_oracle_cap(n, budget)?;
    let faces = enumerate_where(n, |sigma| member_by_blockers(sigma, blockers));
    Ok(SetFamily::normalized(n, faces))
}

pub(crate) fn check_oracle_cap(n: GroundSize, budget: &Budget) -> Result<()> {
    if n.get() > budget.oracle_cap || n.get() >= WORD_BITS {
        return Err(Error::GroundSetTooLarge {
            n: n.get(),
            max: budget.oracle_cap.min(WORD_BITS - 1),
        });
    }
    Ok(())
}

fn enumerate_where(n: GroundSize, mut pred: impl FnMut(&Face) -> bool) -> Vec<Face> {
    let mut faces = Vec::new();
    for mask in 0..(1u64 << n.get()) {
        let sigma = Face::from_word(mask);
        if pred(&sigma) {
            faces.push(sigma);
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, members: &[&[u32]]) -> SetFamily {
        SetFamily::new(
            GroundSize::new(n).unwrap(),
            members
                .iter()
                .map(|m| Face::from_elements(m.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    fn face(elements: &[u32]) -> Face {
        Face::from_elements(elements.iter().copied())
    }

    #[test]
    fn normalize_dedups_and_sorts() {
        let f = fam(4, &[&[2, 4], &[1, 2], &[2, 4]]);
        assert_eq!(f.members(), &[face(&[1, 2]), face(&[2, 4])]);

        let empty = fam(4, &[]);
        assert!(empty.is_empty());

        let g = fam(4, &[&[2, 3, 4], &[1, 2]]);
        assert_eq!(g.members(), &[face(&[1, 2]), face(&[2, 3, 4])]);
    }

    #[test]
    fn normalize_rejects_out_of_range() {
        let err = SetFamily::new(GroundSize::new(3).unwrap(), vec![face(&[1, 5])]).unwrap_err();
        assert_eq!(
            err,
            Error::MemberOutOfRange {
                element: 5,
                n: 3,
                line: None
            }
        );
    }

    #[test]
    fn max_antichain_keeps_maximal_members() {
        let f = fam(4, &[&[1], &[1, 2], &[2, 3], &[2, 3, 4]]);
        assert_eq!(
            f.max_antichain().members(),
            &[face(&[1, 2]), face(&[2, 3, 4])]
        );

        // Idempotence on an antichain.
        let a = fam(4, &[&[1, 2], &[2, 3, 4]]);
        assert_eq!(a.max_antichain().family(), &a);

        let chain = fam(3, &[&[], &[1], &[1, 2], &[1, 2, 3]]);
        assert_eq!(chain.max_antichain().members(), &[face(&[1, 2, 3])]);
    }

    #[test]
    fn min_antichain_keeps_minimal_members() {
        let f = fam(
            4,
            &[
                &[1, 3],
                &[1, 4],
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 4],
                &[1, 2, 3, 4],
            ],
        );
        assert_eq!(f.min_antichain().members(), &[face(&[1, 3]), face(&[1, 4])]);

        let a = fam(4, &[&[1, 3], &[1, 4]]);
        assert_eq!(a.min_antichain().family(), &a);

        let g = fam(3, &[&[1, 2], &[1, 2, 3]]);
        assert_eq!(g.min_antichain().members(), &[face(&[1, 2])]);
    }

    #[test]
    fn membership_by_facets() {
        let facets = fam(4, &[&[1, 2], &[2, 3, 4]]).max_antichain();
        assert!(member_by_facets(&face(&[2, 4]), &facets));
        assert!(!member_by_facets(&face(&[1, 3]), &facets));
        assert!(member_by_facets(&Face::empty(), &facets));
    }

    #[test]
    fn membership_by_blockers() {
        let blockers = fam(4, &[&[1, 3], &[1, 4]]).min_antichain();
        assert!(member_by_blockers(&face(&[2, 3, 4]), &blockers));
        assert!(!member_by_blockers(&face(&[1, 3, 4]), &blockers));

        // Blockers {∅}: the void complex rejects everything.
        let void = fam(4, &[&[]]).min_antichain();
        assert!(!member_by_blockers(&Face::empty(), &void));
        assert!(!member_by_blockers(&face(&[2]), &void));
    }

    #[test]
    fn monotone_dnf_evaluation() {
        let blockers = fam(4, &[&[1, 3], &[1, 4]]).min_antichain();
        assert!(eval_monotone_dnf(&blockers, &face(&[1, 3, 4])));
        assert!(!eval_monotone_dnf(&blockers, &face(&[2, 3, 4])));

        // Empty disjunction is false everywhere.
        let none = fam(4, &[]).min_antichain();
        assert!(!eval_monotone_dnf(&none, &face(&[1, 2, 3, 4])));
        assert!(!eval_monotone_dnf(&none, &Face::empty()));
    }

    #[test]
    fn enumerate_downset_figure_families() {
        let budget = Budget::default();
        let facets = fam(4, &[&[1, 2], &[2, 3, 4]]).max_antichain();
        let downset = enumerate_downset(&facets, &budget).unwrap();
        let expected = fam(
            4,
            &[
                &[],
                &[1],
                &[2],
                &[3],
                &[4],
                &[1, 2],
                &[2, 3],
                &[2, 4],
                &[3, 4],
                &[2, 3, 4],
            ],
        );
        assert_eq!(downset, expected);

        let simplex = fam(3, &[&[1, 2, 3]]).max_antichain();
        assert_eq!(
            enumerate_downset(&simplex, &budget).unwrap().len(),
            8,
            "full simplex has all subsets"
        );

        let void = fam(2, &[]).max_antichain();
        assert!(enumerate_downset(&void, &budget).unwrap().is_empty());
    }

    #[test]
    fn enumerate_respects_oracle_cap() {
        let facets = fam(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]).max_antichain();
        let tight = Budget::default().with_oracle_cap(4);
        assert!(matches!(
            enumerate_downset(&facets, &tight),
            Err(Error::GroundSetTooLarge { .. })
        ));
    }

    #[test]
    fn face_basic_ops() {
        let f = face(&[1, 3, 64, 65]);
        assert_eq!(f.card(), 4);
        assert_eq!(f.elements(), vec![1, 3, 64, 65]);
        assert!(f.contains(64));
        assert!(!f.contains(2));
        assert_eq!(f.max_element(), Some(65));

        let n = GroundSize::new(66).unwrap();
        let c = f.complement(n);
        assert_eq!(c.card(), 62);
        assert!(!c.intersects(&f));
        assert_eq!(f.union(&c), Face::full(n));
        assert_eq!(f.complement(n).complement(n), f);
    }

    #[test]
    fn face_canonical_order() {
        let mut faces = vec![face(&[2, 3, 4]), face(&[1, 2]), face(&[3]), Face::empty()];
        faces.sort();
        assert_eq!(
            faces,
            vec![Face::empty(), face(&[3]), face(&[1, 2]), face(&[2, 3, 4])]
        );
        // Same cardinality: numeric mask value decides.
        assert!(face(&[1, 2]) < face(&[1, 3]));
        assert!(face(&[65]) > face(&[64]));
    }

    #[test]
    fn antichain_constructor_rejects_comparable_members() {
        let f = fam(4, &[&[1], &[1, 2]]);
        assert!(matches!(
            Antichain::new(f),
            Err(Error::NotAntichain { .. })
        ));
        assert!(Antichain::new(fam(4, &[&[1, 2], &[2, 3, 4]])).is_ok());
    }

    #[test]
    fn ground_size_cap() {
        assert!(GroundSize::new(N_MAX).is_ok());
        assert!(matches!(
            GroundSize::new(N_MAX + 1),
            Err(Error::GroundSetTooLarge { .. })
        ));
    }
}
