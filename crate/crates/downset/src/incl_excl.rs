//! Signed subset sums over set families, aggregated by cardinality.
//!
//! Both alternating sums used by the counting routes have the shape
//! "walk every subset of the family, combine its members with ∩ or ∪, and
//! weight the resulting mask by ±1". Only the cardinality of the combined
//! mask matters to every consumer, so this module reduces a family to a map
//! `cardinality → total signed weight`.
//!
//! Small families are enumerated directly with incremental intersections or
//! unions along a DFS over the included indices. Larger families are folded
//! one member at a time into a `mask → weight` table; distinct masks are
//! often far fewer than `2^m`, and the table size is capped by the budget.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::setfam::{Antichain, Face};

/// `card → Σ (−1)^{|S|+1}` over nonempty subfamilies `S` of the facets with
/// `|∩S| = card`.
pub(crate) fn facet_intersection_weights(
    facets: &Antichain,
    budget: &Budget,
) -> Result<BTreeMap<usize, BigInt>> {
    let members = facets.members();
    if use_direct(members.len(), budget) {
        let mut by_card: Vec<i64> = vec![0; facets.n().get() + 1];
        // S = {j}, then extend by larger indices only; intersections shrink
        // incrementally one member at a time.
        for j in 0..members.len() {
            direct_intersections(members, j, &members[j], 1, &mut by_card);
        }
        Ok(compress_i64(by_card))
    } else {
        let mut table: HashMap<Face, BigInt> = HashMap::new();
        for face in members {
            let mut additions: Vec<(Face, BigInt)> = table
                .iter()
                .map(|(mask, w)| (mask.intersection(face), -w))
                .collect();
            additions.push((face.clone(), BigInt::from(1)));
            merge(&mut table, additions, budget)?;
        }
        Ok(compress_masks(table))
    }
}

/// `card → Σ (−1)^{|T|}` over all subfamilies `T` of the blockers with
/// `|∪T| = card` (the empty subfamily contributes `+1` at card 0).
pub(crate) fn blocker_union_weights(
    blockers: &Antichain,
    budget: &Budget,
) -> Result<BTreeMap<usize, BigInt>> {
    let members = blockers.members();
    let n = blockers.n();
    if use_direct(members.len(), budget) {
        let mut by_card: Vec<i64> = vec![0; n.get() + 1];
        by_card[0] = 1;
        let full = Face::full(n);
        for j in 0..members.len() {
            direct_unions(members, j, &members[j], -1, &full, &mut by_card);
        }
        Ok(compress_i64(by_card))
    } else {
        let mut table: HashMap<Face, BigInt> = HashMap::new();
        table.insert(Face::empty(), BigInt::from(1));
        for face in members {
            let additions: Vec<(Face, BigInt)> = table
                .iter()
                .map(|(mask, w)| (mask.union(face), -w))
                .collect();
            merge(&mut table, additions, budget)?;
        }
        Ok(compress_masks(table))
    }
}

fn use_direct(family_size: usize, budget: &Budget) -> bool {
    family_size <= Budget::DIRECT_ENUM_MAX_FAMILY
        && (1u128 << family_size) <= budget.term_cap as u128
}

fn direct_intersections(
    members: &[Face],
    last: usize,
    intersection: &Face,
    sign: i64,
    by_card: &mut [i64],
) {
    if intersection.is_empty() && last + 1 < members.len() {
        // Extensions alternate in sign and all stay empty, so the node and
        // its whole subtree cancel to zero.
        return;
    }
    by_card[intersection.card()] += sign;
    for j in last + 1..members.len() {
        direct_intersections(members, j, &intersection.intersection(&members[j]), -sign, by_card);
    }
}

fn direct_unions(
    members: &[Face],
    last: usize,
    union: &Face,
    sign: i64,
    full: &Face,
    by_card: &mut [i64],
) {
    if union == full && last + 1 < members.len() {
        // Same cancellation as above, saturated at the full ground set.
        return;
    }
    by_card[union.card()] += sign;
    for j in last + 1..members.len() {
        direct_unions(members, j, &union.union(&members[j]), -sign, full, by_card);
    }
}

fn merge(
    table: &mut HashMap<Face, BigInt>,
    additions: Vec<(Face, BigInt)>,
    budget: &Budget,
) -> Result<()> {
    for (mask, weight) in additions {
        *table.entry(mask).or_insert_with(BigInt::zero) += weight;
    }
    table.retain(|_, w| !w.is_zero());
    if table.len() as u64 > budget.term_cap {
        return Err(Error::TermBudgetExceeded {
            required: table.len() as u128,
            cap: budget.term_cap,
        });
    }
    Ok(())
}

fn compress_i64(by_card: Vec<i64>) -> BTreeMap<usize, BigInt> {
    by_card
        .into_iter()
        .enumerate()
        .filter(|(_, w)| *w != 0)
        .map(|(card, w)| (card, BigInt::from(w)))
        .collect()
}

fn compress_masks(table: HashMap<Face, BigInt>) -> BTreeMap<usize, BigInt> {
    let mut by_card: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (mask, w) in table {
        let entry = by_card.entry(mask.card()).or_insert_with(BigInt::zero);
        *entry += w;
    }
    by_card.retain(|_, w| !w.is_zero());
    by_card
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::{GroundSize, SetFamily};

    fn antichain(n: usize, members: &[&[u32]]) -> Antichain {
        SetFamily::new(
            GroundSize::new(n).unwrap(),
            members
                .iter()
                .map(|m| Face::from_elements(m.iter().copied()))
                .collect(),
        )
        .unwrap()
        .max_antichain()
    }

    fn weights(pairs: &[(usize, i64)]) -> BTreeMap<usize, BigInt> {
        pairs
            .iter()
            .map(|&(c, w)| (c, BigInt::from(w)))
            .collect()
    }

    #[test]
    fn facet_weights_by_hand() {
        // S ⊆ {12, 234}: {12} → card 2, {234} → card 3, both → ∩ = {2}.
        let facets = antichain(4, &[&[1, 2], &[2, 3, 4]]);
        let got = facet_intersection_weights(&facets, &Budget::default()).unwrap();
        assert_eq!(got, weights(&[(1, -1), (2, 1), (3, 1)]));
    }

    #[test]
    fn blocker_weights_by_hand() {
        // T ⊆ {13, 14}: ∅ → +1 at 0, singletons → −1 at 2 each, both → +1 at 3.
        let blockers = antichain(4, &[&[1, 3], &[1, 4]]);
        let got = blocker_union_weights(&blockers, &Budget::default()).unwrap();
        assert_eq!(got, weights(&[(0, 1), (2, -2), (3, 1)]));
    }

    #[test]
    fn empty_families() {
        let facets = antichain(4, &[]);
        assert!(facet_intersection_weights(&facets, &Budget::default())
            .unwrap()
            .is_empty());
        let blockers = antichain(4, &[]);
        assert_eq!(
            blocker_union_weights(&blockers, &Budget::default()).unwrap(),
            weights(&[(0, 1)])
        );
    }

    /// Subset-by-subset enumeration, independent of both library paths.
    fn oracle_weights(members: &[Face], n: usize, unions: bool) -> BTreeMap<usize, BigInt> {
        let mut by_card: BTreeMap<usize, BigInt> = BTreeMap::new();
        for pick in 0..(1u32 << members.len()) {
            if !unions && pick == 0 {
                continue;
            }
            let mut combined = if unions {
                Face::empty()
            } else {
                Face::full(GroundSize::new(n).unwrap())
            };
            for (j, member) in members.iter().enumerate() {
                if pick & (1 << j) != 0 {
                    combined = if unions {
                        combined.union(member)
                    } else {
                        combined.intersection(member)
                    };
                }
            }
            let flip = if unions { 0 } else { 1 };
            let sign = if (pick.count_ones() as usize + flip) % 2 == 0 {
                1
            } else {
                -1
            };
            *by_card.entry(combined.card()).or_insert_with(BigInt::zero) += BigInt::from(sign);
        }
        by_card.retain(|_, w| !w.is_zero());
        by_card
    }

    #[test]
    fn direct_and_aggregated_paths_match_the_oracle() {
        // 7 members over [6]: 2^7 terms but at most 2^6 distinct masks, so a
        // cap of 100 forces the fold path without starving it.
        let families: &[(usize, &[&[u32]])] = &[
            (6, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5, 6], &[1, 6], &[2, 5], &[1, 3, 5]]),
            (6, &[&[1], &[2, 3], &[4, 5], &[2, 4], &[3, 5], &[5, 6], &[2, 6]]),
        ];
        let direct = Budget::default();
        let aggregated = Budget::default().with_term_cap(100);
        for (n, members) in families {
            let fac = antichain(*n, members);
            let expect = oracle_weights(fac.members(), *n, false);
            assert_eq!(facet_intersection_weights(&fac, &direct).unwrap(), expect);
            assert_eq!(
                facet_intersection_weights(&fac, &aggregated).unwrap(),
                expect
            );
            let blo = SetFamily::new(fac.n(), fac.members().to_vec())
                .unwrap()
                .min_antichain();
            let expect = oracle_weights(blo.members(), *n, true);
            assert_eq!(blocker_union_weights(&blo, &direct).unwrap(), expect);
            assert_eq!(blocker_union_weights(&blo, &aggregated).unwrap(), expect);
        }
    }

    #[test]
    fn budget_exhaustion_reports_error() {
        let facets = antichain(
            8,
            &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[6, 7], &[7, 8], &[1, 8]],
        );
        let starved = Budget::default().with_term_cap(2);
        assert!(matches!(
            facet_intersection_weights(&facets, &starved),
            Err(Error::TermBudgetExceeded { .. })
        ));
    }
}
