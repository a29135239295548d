//! Shared helpers for the integration suites: seeded random families and
//! tiny mask-level oracles independent of the library internals.

use downset::{Antichain, Face, GroundSize, SetFamily};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn ground(n: usize) -> GroundSize {
    GroundSize::new(n).unwrap()
}

pub fn face_from_mask(mask: u64) -> Face {
    Face::from_word(mask)
}

pub fn mask_of_face(face: &Face) -> u64 {
    face.iter().fold(0u64, |m, e| m | 1 << (e - 1))
}

/// Random facet antichain over `n ≤ max_n` with at most `max_members`
/// members, degenerate shapes included.
pub fn random_facets(rng: &mut ChaCha8Rng, max_n: usize, max_members: usize) -> Antichain {
    let n = rng.gen_range(0..=max_n);
    let shape: u32 = rng.gen_range(0..20);
    let members: Vec<Face> = match shape {
        // Void complex.
        0 => Vec::new(),
        // Δ = {∅}.
        1 => vec![Face::empty()],
        // Full simplex.
        2 => vec![Face::from_word(((1u128 << n) - 1) as u64)],
        _ => {
            let k = rng.gen_range(0..=max_members);
            (0..k)
                .map(|_| Face::from_word(rng.gen_range(0..(1u128 << n)) as u64))
                .collect()
        }
    };
    SetFamily::new(ground(n), members).unwrap().max_antichain()
}

/// Minimal transversals of a mask hypergraph by sheer enumeration of all
/// `2^n` subsets, minimality checked element by element.
pub fn brute_min_transversals(n: usize, edges: &[u64]) -> Vec<u64> {
    let hits_all = |mask: u64| edges.iter().all(|e| e & mask != 0);
    let mut out: Vec<u64> = Vec::new();
    for mask in 0..(1u128 << n) as u64 {
        if !hits_all(mask) {
            continue;
        }
        let mut minimal = true;
        let mut bits = mask;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if hits_all(mask & !low) {
                minimal = false;
                break;
            }
            bits &= bits - 1;
        }
        if minimal {
            out.push(mask);
        }
    }
    sort_masks(&mut out);
    out
}

/// Canonical (cardinality, value) order used by the library.
pub fn sort_masks(masks: &mut [u64]) {
    masks.sort_by_key(|&m| (m.count_ones(), m));
}

pub fn antichain_masks(antichain: &Antichain) -> Vec<u64> {
    antichain.members().iter().map(mask_of_face).collect()
}
