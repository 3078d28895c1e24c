//! Brute-force reference implementations for cross-checking the main
//! library. Everything here enumerates definitions literally: codes are
//! materialized as explicit word sets, duals are found by testing every
//! vector of the ambient space against every codeword, and distances are
//! minima over the enumerated set.
//!
//! Only elementary polynomial arithmetic is borrowed from the main crate;
//! the component isomorphism, elimination and distance logic are not used
//! here, so agreement between the two sides is meaningful evidence.

use std::collections::BTreeSet;

use ringcodes::{Ring, RingCodeword, RingElement, RingMatrix};
use thiserror::Error;

/// Caps for the exhaustive modes.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Maximum number of vectors any single enumeration may visit.
    pub max_enumeration: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_enumeration: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration needs {required} vectors, cap is {cap}")]
    CapExceeded { required: u128, cap: u64 },
}

/// A codeword frozen as its coefficient rows: one ascending coefficient
/// vector per coordinate. Ordered, so sets of words compare cleanly.
pub type Word = Vec<Vec<u64>>;

/// An explicit code: every codeword, as a sorted set.
pub type WordSet = BTreeSet<Word>;

fn to_word(entries: &[RingElement]) -> Word {
    entries.iter().map(|e| e.coeffs().to_vec()).collect()
}

/// Rebuilds the codeword view of a frozen word.
pub fn word_to_codeword(ring: &Ring, word: &Word) -> RingCodeword {
    let entries: Vec<RingElement> = word
        .iter()
        .map(|c| ring.element(c).expect("stored coefficients are canonical"))
        .collect();
    RingCodeword::new(ring, entries)
}

/// Product in the ring, spelled out over plain polynomial arithmetic.
fn mul(ring: &Ring, a: &RingElement, b: &RingElement) -> RingElement {
    let product = &a.to_poly() * &b.to_poly();
    let reduced = product.rem(ring.modulus()).expect("monic modulus");
    let mut coeffs = reduced.coeffs().to_vec();
    coeffs.resize(ring.dimension(), 0);
    ring.element(&coeffs).expect("reduced to ring length")
}

fn add(ring: &Ring, a: &RingElement, b: &RingElement) -> RingElement {
    let sum = &a.to_poly() + &b.to_poly();
    let mut coeffs = sum.coeffs().to_vec();
    coeffs.resize(ring.dimension(), 0);
    ring.element(&coeffs).expect("sum keeps the ring length")
}

/// All ring elements, by walking every coefficient vector.
fn all_elements(ring: &Ring) -> Vec<RingElement> {
    let dim = ring.dimension();
    let p = ring.p();
    let mut digits = vec![0u64; dim];
    let mut out = Vec::new();
    loop {
        out.push(ring.element(&digits).expect("digit vector has ring length"));
        let mut k = 0;
        loop {
            if k == dim {
                return out;
            }
            digits[k] += 1;
            if digits[k] < p {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

fn count_vectors(ring: &Ring, tuples: usize) -> u128 {
    (ring.p() as u128)
        .checked_pow(ring.dimension() as u32)
        .and_then(|per_element| per_element.checked_pow(tuples as u32))
        .unwrap_or(u128::MAX)
}

fn check_cap(required: u128, cfg: &OracleConfig) -> Result<(), OracleError> {
    if required > cfg.max_enumeration as u128 {
        return Err(OracleError::CapExceeded {
            required,
            cap: cfg.max_enumeration,
        });
    }
    Ok(())
}

/// Every vector of R^n, streamed through a callback.
fn for_each_tuple<F: FnMut(&[RingElement])>(ring: &Ring, n: usize, mut f: F) {
    let elements = all_elements(ring);
    let mut idx = vec![0usize; n];
    loop {
        let tuple: Vec<RingElement> = idx.iter().map(|&i| elements[i].clone()).collect();
        f(&tuple);
        let mut k = 0;
        loop {
            if k == n {
                return;
            }
            idx[k] += 1;
            if idx[k] < elements.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// The full codeword set of the code generated by `g`, by encoding every
/// message vector of R^k.
pub fn enumerate_ring_code(g: &RingMatrix, cfg: &OracleConfig) -> Result<WordSet, OracleError> {
    let ring = g.ring();
    check_cap(count_vectors(ring, g.rows()), cfg)?;
    let mut words = WordSet::new();
    for_each_tuple(ring, g.rows(), |message| {
        let mut entries = vec![ring.zero(); g.cols()];
        for (i, m) in message.iter().enumerate() {
            for (j, entry) in entries.iter_mut().enumerate() {
                *entry = add(ring, entry, &mul(ring, m, g.get(i, j)));
            }
        }
        words.insert(to_word(&entries));
    });
    Ok(words)
}

/// Minimum weight over the nonzero enumerated codewords; `None` when the
/// code is zero.
pub fn brute_min_distance(
    g: &RingMatrix,
    cfg: &OracleConfig,
) -> Result<Option<usize>, OracleError> {
    let words = enumerate_ring_code(g, cfg)?;
    Ok(words
        .iter()
        .map(|w| w.iter().filter(|c| c.iter().any(|&v| v != 0)).count())
        .filter(|&weight| weight > 0)
        .min())
}

/// The annihilator of the code generated by `g`: every vector of R^n
/// whose dot product with every codeword is zero.
pub fn brute_dual(g: &RingMatrix, cfg: &OracleConfig) -> Result<WordSet, OracleError> {
    let ring = g.ring();
    let n = g.cols();
    check_cap(count_vectors(ring, n), cfg)?;
    let code: Vec<RingCodeword> = enumerate_ring_code(g, cfg)?
        .iter()
        .map(|w| word_to_codeword(ring, w))
        .collect();
    let mut dual = WordSet::new();
    for_each_tuple(ring, n, |candidate| {
        let orthogonal = code.iter().all(|c| {
            let mut acc = ring.zero();
            for (x, y) in candidate.iter().zip(c.entries()) {
                acc = add(ring, &acc, &mul(ring, x, y));
            }
            acc.is_zero()
        });
        if orthogonal {
            dual.insert(to_word(candidate));
        }
    });
    Ok(dual)
}

/// Whether an enumerated word set is closed under the right rotation.
pub fn is_shift_closed_set(words: &WordSet) -> bool {
    words.iter().all(|w| {
        let mut rotated = w.clone();
        if let Some(last) = rotated.pop() {
            rotated.insert(0, last);
        }
        words.contains(&rotated)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringcodes::RingMatrix;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn ring30() -> Ring {
        Ring::new(3, 0).unwrap()
    }

    #[test]
    fn single_generator_spans_the_whole_ring() {
        let ring = ring30();
        let g = RingMatrix::from_rows(&ring, vec![vec![ring.one()]]).unwrap();
        let words = enumerate_ring_code(&g, &cfg()).unwrap();
        assert_eq!(words.len(), 9);
    }

    #[test]
    fn zero_generator_spans_only_zero() {
        let ring = ring30();
        let g = RingMatrix::zeros(&ring, 1, 2);
        let words = enumerate_ring_code(&g, &cfg()).unwrap();
        assert_eq!(words.len(), 1);
        assert!(brute_min_distance(&g, &cfg()).unwrap().is_none());
    }

    #[test]
    fn two_column_repetition_weights() {
        let ring = ring30();
        let g = RingMatrix::from_rows(&ring, vec![vec![ring.one(), ring.one()]]).unwrap();
        let words = enumerate_ring_code(&g, &cfg()).unwrap();
        assert_eq!(words.len(), 9);
        assert_eq!(brute_min_distance(&g, &cfg()).unwrap(), Some(2));
    }

    #[test]
    fn repetition_of_length_four() {
        let ring = ring30();
        let row = vec![ring.one(), ring.one(), ring.one(), ring.one()];
        let g = RingMatrix::from_rows(&ring, vec![row]).unwrap();
        assert_eq!(brute_min_distance(&g, &cfg()).unwrap(), Some(4));
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let ring = ring30();
        let g = RingMatrix::from_rows(
            &ring,
            vec![vec![ring.one(), ring.zero()], vec![ring.zero(), ring.one()]],
        )
        .unwrap();
        let dual = brute_dual(&g, &cfg()).unwrap();
        assert_eq!(dual.len(), 1);
    }

    #[test]
    fn dual_of_zero_code_is_everything() {
        let ring = ring30();
        let g = RingMatrix::zeros(&ring, 1, 2);
        let dual = brute_dual(&g, &cfg()).unwrap();
        assert_eq!(dual.len(), 81);
    }

    #[test]
    fn dual_of_the_two_column_repetition() {
        // x1 + x2 = 0 has |R| solutions: the multiples of (1, -1)
        let ring = ring30();
        let g = RingMatrix::from_rows(&ring, vec![vec![ring.one(), ring.one()]]).unwrap();
        let dual = brute_dual(&g, &cfg()).unwrap();
        assert_eq!(dual.len(), 9);
        let code = enumerate_ring_code(&g, &cfg()).unwrap();
        assert_eq!(code.len() * dual.len(), 81);
        for w in &dual {
            let word = word_to_codeword(&ring, w);
            let sum = add(&ring, &word.entries()[0], &word.entries()[1]);
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let ring = ring30();
        let g = RingMatrix::zeros(&ring, 8, 2);
        assert_eq!(
            enumerate_ring_code(&g, &cfg()).unwrap_err(),
            OracleError::CapExceeded {
                required: 43_046_721,
                cap: 1_000_000
            }
        );
    }

    #[test]
    fn shift_closure_of_small_sets() {
        let ring = ring30();
        let g = RingMatrix::from_rows(&ring, vec![vec![ring.one(), ring.one()]]).unwrap();
        let words = enumerate_ring_code(&g, &cfg()).unwrap();
        assert!(is_shift_closed_set(&words));
        let h = RingMatrix::from_rows(&ring, vec![vec![ring.one(), ring.zero()]]).unwrap();
        let open = enumerate_ring_code(&h, &cfg()).unwrap();
        assert!(!is_shift_closed_set(&open));
    }
}
