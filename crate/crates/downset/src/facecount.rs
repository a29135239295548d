//! Face-count vectors and the polynomial invariants derived from them.
//!
//! The two-variable generating function `H_Δ(x,y) = Σ_{σ∈Δ} x^{|σ|} y^{n−|σ|}`
//! is homogeneous of degree `n`, so the vector `(a_0, …, a_n)` of face counts
//! by cardinality carries it losslessly; the f-polynomial `f_Δ(t) = H_Δ(t,1)`
//! and the K-polynomial `K_Δ(t) = H_Δ(t,1−t)` are computed from it, or
//! directly from the facets `F` or blockers `M` by inclusion–exclusion:
//!
//! ```text
//! a_ℓ = Σ_{∅≠S⊆F} (−1)^{|S|+1} C(|∩S|, ℓ)
//!     = Σ_{T⊆M}   (−1)^{|T|}   C(n−|∪T|, ℓ−|∪T|)
//! ```
//!
//! Everything is exact: counts are big integers and `C(a,b) = 0` whenever
//! `b < 0` or `b > a`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binom::{binomial, binomial_row};
use crate::budget::Budget;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::incl_excl::{blocker_union_weights, facet_intersection_weights};
use crate::poly::IntPolynomial;
use crate::setfam::{check_oracle_cap, member_by_facets, Antichain, Face, GroundSize};

/// Exact face counts by cardinality: `counts[ℓ]` is the number of `ℓ`-element
/// faces. The canonical encoding of the generating function `H_Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceCountVector {
    n: GroundSize,
    counts: Vec<BigInt>,
}

impl FaceCountVector {
    /// Wraps raw counts; the vector must have length `n + 1`.
    pub fn from_counts(n: GroundSize, counts: Vec<BigInt>) -> Result<Self> {
        if counts.len() != n.get() + 1 {
            return Err(Error::GroundSizeMismatch {
                left: n.get() + 1,
                right: counts.len(),
            });
        }
        Ok(FaceCountVector { n, counts })
    }

    fn zeroed(n: GroundSize) -> Self {
        FaceCountVector {
            n,
            counts: vec![BigInt::zero(); n.get() + 1],
        }
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `a_ℓ`, zero beyond `n`.
    pub fn count(&self, card: usize) -> BigInt {
        self.counts.get(card).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Total number of faces, `f_Δ(1)`.
    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    /// Down-set shadow property: once some `a_ℓ` is zero, all higher counts
    /// are zero too. Holds for every vector produced by the counting routes.
    pub fn has_shadow_property(&self) -> bool {
        let mut seen_zero = false;
        for c in &self.counts {
            if c.is_zero() {
                seen_zero = true;
            } else if seen_zero || c < &BigInt::zero() {
                return false;
            }
        }
        true
    }

    /// `H_Δ(x, y) = Σ_ℓ a_ℓ x^ℓ y^{n−ℓ}` at a dyadic point.
    pub fn eval_h(&self, x: &Dyadic, y: &Dyadic) -> Dyadic {
        let n = self.n.get();
        let mut acc = Dyadic::zero();
        for (card, a) in self.counts.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = &x.pow(card as u32) * &y.pow((n - card) as u32);
            acc = &acc + &(&Dyadic::from_int(a.clone()) * &term);
        }
        acc
    }
}

/// Face counts by direct enumeration of the down-set. Oracle route, capped
/// at `budget.oracle_cap` ground elements.
pub fn counts_bruteforce(facets: &Antichain, budget: &Budget) -> Result<FaceCountVector> {
    let n = facets.n();
    check_oracle_cap(n, budget)?;
    let total_masks = 1u64 << n.get();
    let threads = budget.threads.max(1).min(total_masks.max(1) as usize);

    let count_range = |lo: u64, hi: u64| -> Vec<u64> {
        let mut by_card = vec![0u64; n.get() + 1];
        for mask in lo..hi {
            let sigma = Face::from_word(mask);
            if member_by_facets(&sigma, facets) {
                by_card[sigma.card()] += 1;
            }
        }
        by_card
    };

    let mut merged = vec![0u64; n.get() + 1];
    if threads <= 1 {
        merged = count_range(0, total_masks);
    } else {
        // Fixed partition and in-order merge keep the result identical for
        // every thread count.
        let chunk = total_masks.div_ceil(threads as u64);
        let partials = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads as u64)
                .map(|i| {
                    let lo = (i * chunk).min(total_masks);
                    let hi = ((i + 1) * chunk).min(total_masks);
                    let count_range = &count_range;
                    scope.spawn(move || count_range(lo, hi))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("counting worker panicked"))
                .collect::<Vec<_>>()
        });
        for partial in partials {
            for (m, p) in merged.iter_mut().zip(partial) {
                *m += p;
            }
        }
    }

    Ok(FaceCountVector {
        n,
        counts: merged.into_iter().map(BigInt::from).collect(),
    })
}

/// Face counts by inclusion–exclusion over nonempty subfamilies of the
/// facets: `a_ℓ = Σ_{∅≠S⊆F} (−1)^{|S|+1} C(|∩S|, ℓ)`.
pub fn counts_from_facets(facets: &Antichain, budget: &Budget) -> Result<FaceCountVector> {
    let n = facets.n();
    let weights = facet_intersection_weights(facets, budget)?;
    let mut fcv = FaceCountVector::zeroed(n);
    for (card, weight) in &weights {
        let row = binomial_row(*card, n.get());
        for (ell, c) in row.iter().enumerate() {
            if !c.is_zero() {
                fcv.counts[ell] += weight * c;
            }
        }
    }
    Ok(fcv)
}

/// Face counts by inclusion–exclusion over subfamilies of the blockers:
/// `a_ℓ = Σ_{T⊆M} (−1)^{|T|} C(n−|∪T|, ℓ−|∪T|)`.
pub fn counts_from_blockers(blockers: &Antichain, budget: &Budget) -> Result<FaceCountVector> {
    let n = blockers.n();
    let weights = blocker_union_weights(blockers, budget)?;
    let mut fcv = FaceCountVector::zeroed(n);
    for (card, weight) in &weights {
        // C(n−card, ℓ−card) as ℓ runs: a binomial row shifted up by card.
        let row = binomial_row(n.get() - card, n.get() - card);
        for (offset, c) in row.iter().enumerate() {
            if !c.is_zero() {
                fcv.counts[card + offset] += weight * c;
            }
        }
    }
    Ok(fcv)
}

/// `f_Δ(t) = Σ_ℓ a_ℓ t^ℓ`.
pub fn f_polynomial(fcv: &FaceCountVector) -> IntPolynomial {
    IntPolynomial::from_coeffs(fcv.counts.clone())
}

/// `K_Δ(t) = Σ_ℓ a_ℓ t^ℓ (1−t)^{n−ℓ}`, expanded exactly.
pub fn k_polynomial_from_counts(fcv: &FaceCountVector) -> IntPolynomial {
    let n = fcv.n.get();
    let mut acc = IntPolynomial::zero();
    for (card, a) in fcv.counts.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        // a_ℓ t^ℓ (1−t)^{n−ℓ}
        let mut coeffs = vec![BigInt::zero(); card];
        coeffs.push(a.clone());
        let t_pow = IntPolynomial::from_coeffs(coeffs);
        let term = &t_pow * &IntPolynomial::one_minus_t_pow(n - card);
        acc = &acc + &term;
    }
    acc
}

/// `K_Δ(t) = Σ_{T⊆M} (−1)^{|T|} t^{|∪T|}` straight from the blockers.
pub fn k_polynomial_from_blockers(blockers: &Antichain, budget: &Budget) -> Result<IntPolynomial> {
    let weights = blocker_union_weights(blockers, budget)?;
    let max_card = weights.keys().max().copied().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); max_card + 1];
    for (card, weight) in weights {
        coeffs[card] += weight;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Value of the Hilbert function of the quotient by the blocker monomials:
/// the coefficient of `t^d` in `K_Δ(t) / (1−t)^n`, i.e. the number of
/// degree-`d` monomials in `n` variables divisible by no blocker monomial.
pub fn hilbert_dimension(blockers: &Antichain, degree: usize, budget: &Budget) -> Result<BigInt> {
    let k = k_polynomial_from_blockers(blockers, budget)?;
    Ok(hilbert_from_k_polynomial(blockers.n(), &k, degree))
}

/// Series extraction shared by both input routes: coefficient of `t^degree`
/// in `k(t) / (1−t)^n`.
pub fn hilbert_from_k_polynomial(n: GroundSize, k: &IntPolynomial, degree: usize) -> BigInt {
    let n = n.get();
    let mut acc = BigInt::zero();
    for (j, kj) in k.coeffs().iter().enumerate() {
        if kj.is_zero() || j > degree {
            continue;
        }
        let e = degree - j;
        // Number of degree-e monomials in n variables.
        let monomials = if n == 0 {
            if e == 0 {
                BigInt::from(1)
            } else {
                BigInt::zero()
            }
        } else {
            binomial(e + n - 1, (n - 1) as isize)
        };
        acc += kj * monomials;
    }
    acc
}

/// Reduced Euler characteristic as the alternating count sum
/// `χ̃(Δ) = f_Δ(−1) = Σ_ℓ (−1)^ℓ a_ℓ` (the empty face contributes `+1`).
pub fn euler_bruteforce(fcv: &FaceCountVector) -> BigInt {
    let mut acc = BigInt::zero();
    for (card, a) in fcv.counts.iter().enumerate() {
        if card % 2 == 0 {
            acc += a;
        } else {
            acc -= a;
        }
    }
    acc
}

/// `χ̃(Δ) = (−1)^n Σ_{T⊆M, ∪T=[n]} (−1)^{|T|}`.
pub fn euler_from_blockers(blockers: &Antichain, budget: &Budget) -> Result<BigInt> {
    let n = blockers.n().get();
    let weights = blocker_union_weights(blockers, budget)?;
    let covering = weights.get(&n).cloned().unwrap_or_else(BigInt::zero);
    Ok(if n % 2 == 0 { covering } else { -covering })
}

/// `χ̃(Δ) = Σ_{∅≠S⊆F, ∩S=∅} (−1)^{|S|+1}`, the facet-side alternating sum.
pub fn euler_from_facets(facets: &Antichain, budget: &Budget) -> Result<BigInt> {
    let weights = facet_intersection_weights(facets, budget)?;
    Ok(weights.get(&0).cloned().unwrap_or_else(BigInt::zero))
}
