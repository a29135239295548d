//! Alexander duality and monotone dualization.
//!
//! The facets `F` and blockers `M` of a down-set determine each other:
//! a set lies outside `Δ` exactly when it meets the complement of every
//! facet, so `M` is the family of minimal transversals of the complemented
//! facets, and symmetrically `F` consists of the complemented minimal
//! transversals of `M`. Transversals are computed by sequential Berge
//! multiplication with re-minimization after every fold.
//!
//! The Alexander dual `Δ* = {[n]∖σ : σ ∉ Δ}` swaps the two roles:
//! its facets are the complemented blockers and its blockers the
//! complemented facets.

use std::fmt;

use crate::bounds::joint_size_sums;
use crate::budget::Budget;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::facecount::{counts_from_facets, FaceCountVector};
use crate::incl_excl;
use crate::setfam::{member_by_blockers, member_by_facets, Antichain, Face, GroundSize};

/// Why a facet/blocker pair was rejected as non-dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonDualEvidence {
    /// The joint-size inequality fails: for a genuine dual pair
    /// `Σ 2^{−|[n]∖F|} + Σ 2^{−|M|} ≥ 1`, so a smaller total is a sound
    /// proof of non-duality.
    JointSizeBelowOne {
        facet_side: Dyadic,
        blocker_side: Dyadic,
    },
    /// A claimed blocker sits inside a claimed facet, so the families
    /// classify that set differently.
    BlockerInsideFacet { blocker: Face, facet: Face },
    /// A face the two families classify differently.
    Witness { face: Face },
}

impl fmt::Display for NonDualEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonDualEvidence::JointSizeBelowOne {
                facet_side,
                blocker_side,
            } => write!(
                f,
                "joint-size total {facet_side} + {blocker_side} falls below 1"
            ),
            NonDualEvidence::BlockerInsideFacet { blocker, facet } => {
                write!(f, "blocker {blocker} is contained in facet {facet}")
            }
            NonDualEvidence::Witness { face } => {
                write!(f, "face {face} is classified differently by the two families")
            }
        }
    }
}

/// Outcome of the dual-pair decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityVerdict {
    pub dual: bool,
    /// Present exactly when `dual` is false.
    pub evidence: Option<NonDualEvidence>,
}

impl DualityVerdict {
    fn dual() -> Self {
        DualityVerdict {
            dual: true,
            evidence: None,
        }
    }

    fn non_dual(evidence: NonDualEvidence) -> Self {
        DualityVerdict {
            dual: false,
            evidence: Some(evidence),
        }
    }
}

/// A facet family and blocker family verified to describe the same down-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPair {
    facets: Antichain,
    blockers: Antichain,
}

impl DualPair {
    /// Verifies duality on construction.
    pub fn new(facets: Antichain, blockers: Antichain, budget: &Budget) -> Result<Self> {
        let verdict = is_dual_pair(&facets, &blockers, budget)?;
        match verdict.evidence {
            None => Ok(DualPair { facets, blockers }),
            Some(evidence) => Err(Error::NotDualPair { evidence }),
        }
    }

    /// Completes a pair from facets alone by dualizing.
    pub fn from_facets(facets: Antichain, budget: &Budget) -> Result<Self> {
        let blockers = blockers_from_facets(&facets, budget)?;
        Ok(DualPair { facets, blockers })
    }

    /// Completes a pair from blockers alone by dualizing.
    pub fn from_blockers(blockers: Antichain, budget: &Budget) -> Result<Self> {
        let facets = facets_from_blockers(&blockers, budget)?;
        Ok(DualPair { facets, blockers })
    }

    pub fn n(&self) -> GroundSize {
        self.facets.n()
    }

    pub fn facets(&self) -> &Antichain {
        &self.facets
    }

    pub fn blockers(&self) -> &Antichain {
        &self.blockers
    }
}

/// Replaces every member by its complement in `[n]`. Involutive, and maps
/// antichains to antichains (complementation reverses containment).
pub fn complement_family(family: &Antichain) -> Antichain {
    let n = family.n();
    let members = family.members().iter().map(|m| m.complement(n)).collect();
    Antichain::from_members_unchecked(n, members)
}

/// The antichain of inclusion-minimal sets meeting every member.
///
/// Sequential Berge multiplication: members are folded in increasing
/// cardinality order and the working antichain is re-minimized after every
/// fold. An empty hypergraph has `{∅}`; a hypergraph containing `∅` has no
/// transversals at all.
pub fn min_transversals(hypergraph: &Antichain, budget: &Budget) -> Result<Antichain> {
    let n = hypergraph.n();
    if hypergraph.members().iter().any(Face::is_empty) {
        return Ok(Antichain::from_members_unchecked(n, Vec::new()));
    }
    if n.get() <= 64 {
        return min_transversals_words(hypergraph, budget);
    }

    // Canonical member order is (cardinality, mask), so small edges fold
    // first and constrain the intermediates early.
    let mut transversals = vec![Face::empty()];
    let mut scratch: Vec<Face> = Vec::new();
    for edge in hypergraph.members() {
        scratch.clear();
        for t in transversals.drain(..) {
            if t.intersects(edge) {
                scratch.push(t);
            } else {
                for v in edge.iter() {
                    let mut extended = t.clone();
                    extended.insert(v);
                    scratch.push(extended);
                }
            }
        }
        minimize(&mut scratch);
        std::mem::swap(&mut transversals, &mut scratch);
        if transversals.len() as u64 > budget.term_cap {
            return Err(Error::TermBudgetExceeded {
                required: transversals.len() as u128,
                cap: budget.term_cap,
            });
        }
    }
    Ok(Antichain::from_sorted_unchecked(n, transversals))
}

/// Word-sized ground sets run the same fold on raw masks. Fold order,
/// minimization and the final canonical order are identical to the generic
/// path, so the output is bit-identical.
fn min_transversals_words(hypergraph: &Antichain, budget: &Budget) -> Result<Antichain> {
    let n = hypergraph.n();
    let mut transversals: Vec<u64> = vec![0];
    let mut scratch: Vec<u64> = Vec::new();
    for edge_face in hypergraph.members() {
        let edge = edge_face.low_word();
        scratch.clear();
        for &t in &transversals {
            if t & edge != 0 {
                scratch.push(t);
            } else {
                let mut bits = edge;
                while bits != 0 {
                    scratch.push(t | (bits & bits.wrapping_neg()));
                    bits &= bits - 1;
                }
            }
        }
        minimize_words(&mut scratch);
        std::mem::swap(&mut transversals, &mut scratch);
        if transversals.len() as u64 > budget.term_cap {
            return Err(Error::TermBudgetExceeded {
                required: transversals.len() as u128,
                cap: budget.term_cap,
            });
        }
    }
    let members = transversals.into_iter().map(Face::from_word).collect();
    Ok(Antichain::from_sorted_unchecked(n, members))
}

fn minimize_words(masks: &mut Vec<u64>) {
    masks.sort_unstable_by(|a, b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then_with(|| a.cmp(b))
    });
    masks.dedup();
    let mut kept = 0usize;
    for i in 0..masks.len() {
        let candidate = masks[i];
        let dominated = masks[..kept].iter().any(|&k| k & !candidate == 0);
        if !dominated {
            masks.swap(kept, i);
            kept += 1;
        }
    }
    masks.truncate(kept);
}

/// Keeps the inclusion-minimal faces, deduplicated, in canonical order.
fn minimize(faces: &mut Vec<Face>) {
    faces.sort_unstable();
    faces.dedup();
    let mut kept = 0usize;
    for i in 0..faces.len() {
        let card = faces[i].card();
        // Kept members are in canonical order, so only those of strictly
        // smaller cardinality can be proper subsets.
        let dominated = faces[..kept]
            .iter()
            .take_while(|k| k.card() < card)
            .any(|k| k.is_subset(&faces[i]));
        if !dominated {
            faces.swap(kept, i);
            kept += 1;
        }
    }
    faces.truncate(kept);
}

/// Minimal non-faces from facets: the minimal transversals of the
/// complemented facets (σ ∉ Δ iff σ meets every `[n]∖F`).
pub fn blockers_from_facets(facets: &Antichain, budget: &Budget) -> Result<Antichain> {
    min_transversals(&complement_family(facets), budget)
}

/// Facets from blockers: complements of the minimal transversals of `M`
/// (σ ∈ Δ iff `[n]∖σ` is a transversal of `M`; maximal faces correspond to
/// minimal transversals).
pub fn facets_from_blockers(blockers: &Antichain, budget: &Budget) -> Result<Antichain> {
    Ok(complement_family(&min_transversals(blockers, budget)?))
}

/// Decides whether facets and blockers describe the same down-set.
///
/// Pipeline: (i) the joint-size filter — a total below 1 soundly rejects
/// without any enumeration; (ii) local containment checks — no blocker may
/// sit inside a facet; (iii) full Berge dualization and antichain
/// comparison, producing a witness face on mismatch.
pub fn is_dual_pair(
    facets: &Antichain,
    blockers: &Antichain,
    budget: &Budget,
) -> Result<DualityVerdict> {
    if facets.n() != blockers.n() {
        return Err(Error::GroundSizeMismatch {
            left: facets.n().get(),
            right: blockers.n().get(),
        });
    }

    let (facet_side, blocker_side) = joint_size_sums(facets, blockers);
    if &facet_side + &blocker_side < Dyadic::one() {
        return Ok(DualityVerdict::non_dual(NonDualEvidence::JointSizeBelowOne {
            facet_side,
            blocker_side,
        }));
    }

    for blocker in blockers.members() {
        for facet in facets.members() {
            if blocker.is_subset(facet) {
                return Ok(DualityVerdict::non_dual(NonDualEvidence::BlockerInsideFacet {
                    blocker: blocker.clone(),
                    facet: facet.clone(),
                }));
            }
        }
    }

    let computed = blockers_from_facets(facets, budget)?;
    if &computed == blockers {
        Ok(DualityVerdict::dual())
    } else {
        let face = witness_from_mismatch(facets, blockers, &computed)
            .expect("mismatched blocker families must disagree on some face");
        Ok(DualityVerdict::non_dual(NonDualEvidence::Witness { face }))
    }
}

/// Finds a face classified differently by the two families, if any.
///
/// Unlike [`is_dual_pair`] this always produces a concrete face, even for
/// pairs the joint-size filter would reject early.
pub fn find_witness(
    facets: &Antichain,
    blockers: &Antichain,
    budget: &Budget,
) -> Result<Option<Face>> {
    if facets.n() != blockers.n() {
        return Err(Error::GroundSizeMismatch {
            left: facets.n().get(),
            right: blockers.n().get(),
        });
    }
    let computed = blockers_from_facets(facets, budget)?;
    if &computed == blockers {
        return Ok(None);
    }
    Ok(Some(
        witness_from_mismatch(facets, blockers, &computed)
            .expect("mismatched blocker families must disagree on some face"),
    ))
}

/// Extracts a differently-classified face from a blocker mismatch.
///
/// `computed` holds the true minimal non-faces of the down-set generated by
/// `facets`. For `B ∈ computed ∖ claimed`: either the families already split
/// on `B`, or some claimed blocker sits strictly inside `B` and is itself a
/// face by facets. For `B ∈ claimed ∖ computed` with both families agreeing
/// on `B`, some computed blocker sits strictly inside `B`; no claimed
/// blocker fits under it (the claimed family is an antichain containing
/// `B`), so the families split there.
fn witness_from_mismatch(
    facets: &Antichain,
    claimed: &Antichain,
    computed: &Antichain,
) -> Option<Face> {
    let differs = |face: &Face| member_by_facets(face, facets) != member_by_blockers(face, claimed);

    for b in computed.members() {
        if !claimed.contains_member(b) {
            if differs(b) {
                return Some(b.clone());
            }
            return claimed
                .members()
                .iter()
                .find(|m| m.is_subset(b))
                .cloned();
        }
    }
    for b in claimed.members() {
        if !computed.contains_member(b) {
            if differs(b) {
                return Some(b.clone());
            }
            return computed
                .members()
                .iter()
                .find(|m| m.is_subset(b) && *m != b)
                .cloned();
        }
    }
    None
}

/// The Alexander dual pair: facets become complemented blockers and
/// blockers complemented facets. Applying it twice gives back the original.
pub fn alexander_dual(pair: &DualPair) -> DualPair {
    DualPair {
        facets: complement_family(pair.blockers()),
        blockers: complement_family(pair.facets()),
    }
}

/// Coefficientwise complementarity of a pair and its Alexander dual:
/// `a_ℓ(Δ) + a_{n−ℓ}(Δ*) = C(n, ℓ)` for every `ℓ`.
pub fn check_prop2(pair: &DualPair, budget: &Budget) -> Result<bool> {
    let counts = counts_from_facets(pair.facets(), budget)?;
    let dual = alexander_dual(pair);
    let dual_counts = counts_from_facets(dual.facets(), budget)?;
    Ok(complementary_counts(&counts, &dual_counts))
}

pub(crate) fn complementary_counts(counts: &FaceCountVector, dual_counts: &FaceCountVector) -> bool {
    let n = counts.n().get();
    (0..=n).all(|ell| {
        counts.count(ell) + dual_counts.count(n - ell) == crate::binom::binomial(n, ell as isize)
    })
}

/// Deviation terms used by the closing identity: `Σ (−1)^{|T|} 2^{−|∪T|}`
/// over all subfamilies of an antichain.
pub(crate) fn alternating_dyadic_sum(family: &Antichain, budget: &Budget) -> Result<Dyadic> {
    let weights = incl_excl::blocker_union_weights(family, budget)?;
    let mut acc = Dyadic::zero();
    for (card, weight) in weights {
        acc = &acc + &(&Dyadic::from_int(weight) * &Dyadic::two_pow_neg(card as u32));
    }
    Ok(acc)
}
