//! Union-bound inequality, the joint-size inequality, and the exact
//! deviation identity, all in dyadic arithmetic.

use crate::budget::Budget;
use crate::duality::{alternating_dyadic_sum, complement_family, DualPair};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::facecount::counts_from_facets;
use crate::setfam::Antichain;

/// Union bound on the generating function: for `x, y ≥ 0`,
/// `H_Δ(x,y) ≤ Σ_F (x+y)^{|F|} y^{n−|F|}`. Returns `(lhs, rhs, lhs ≤ rhs)`.
pub fn union_bound_check(
    facets: &Antichain,
    x: &Dyadic,
    y: &Dyadic,
    budget: &Budget,
) -> Result<(Dyadic, Dyadic, bool)> {
    for value in [x, y] {
        if value.is_negative() {
            return Err(Error::NegativePoint {
                value: value.to_string(),
            });
        }
    }
    let n = facets.n().get();
    let lhs = counts_from_facets(facets, budget)?.eval_h(x, y);
    let x_plus_y = x + y;
    let mut rhs = Dyadic::zero();
    for facet in facets.members() {
        let card = facet.card();
        let term = &x_plus_y.pow(card as u32) * &y.pow((n - card) as u32);
        rhs = &rhs + &term;
    }
    let holds = lhs <= rhs;
    Ok((lhs, rhs, holds))
}

/// The two sums of the joint-size inequality, with no duality requirement:
/// `Σ_{F} 2^{−|[n]∖F|}` (the complemented facets are the dual's blockers)
/// and `Σ_{M} 2^{−|M|}`.
pub fn joint_size_sums(facets: &Antichain, blockers: &Antichain) -> (Dyadic, Dyadic) {
    let n = facets.n().get();
    let facet_side = facets
        .members()
        .iter()
        .map(|f| Dyadic::two_pow_neg((n - f.card()) as u32))
        .fold(Dyadic::zero(), |acc, t| &acc + &t);
    let blocker_side = blockers
        .members()
        .iter()
        .map(|m| Dyadic::two_pow_neg(m.card() as u32))
        .fold(Dyadic::zero(), |acc, t| &acc + &t);
    (facet_side, blocker_side)
}

/// Joint-size inequality for a verified dual pair:
/// `Σ_{M*∈M*} 2^{−|M*|} + Σ_{M∈M} 2^{−|M|} ≥ 1`.
/// Returns both sums and the (always true) comparison.
pub fn joint_size_inequality(pair: &DualPair) -> (Dyadic, Dyadic, bool) {
    let (facet_side, blocker_side) = joint_size_sums(pair.facets(), pair.blockers());
    let holds = &facet_side + &blocker_side >= Dyadic::one();
    (facet_side, blocker_side, holds)
}

/// The exact deviation of the joint-size inequality from equality:
/// `Σ_{T*⊆M*} (−1)^{|T*|} 2^{−|∪T*|} + Σ_{T⊆M} (−1)^{|T|} 2^{−|∪T|} = 1`.
/// Returns the two alternating sums; their total is exactly 1 for every
/// dual pair.
pub fn deviation_identity(pair: &DualPair, budget: &Budget) -> Result<(Dyadic, Dyadic)> {
    let dual_blockers = complement_family(pair.facets());
    let facet_side = alternating_dyadic_sum(&dual_blockers, budget)?;
    let blocker_side = alternating_dyadic_sum(pair.blockers(), budget)?;
    Ok((facet_side, blocker_side))
}
