//! Linear codes over the quotient ring and their component decomposition.
//!
//! A code is stored component-first: one generator matrix over Z_p per
//! retained root. The ring-level generator matrix is a derived view
//! (compose the components through the idempotents), because every
//! structural question — cardinality, minimum distance, duality — is
//! answered component by component.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::matrix::{RingMatrix, ZpMatrix};
use crate::ring::{Ring, RingElement};
use crate::DEFAULT_ENUM_CAP;

/// One Z_p code in the decomposition, tagged by its root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCode {
    ring: Ring,
    index: u64,
    generator: ZpMatrix,
    /// Canonical row-space basis (nonzero rows of the RREF).
    basis: ZpMatrix,
}

impl ComponentCode {
    pub fn new(ring: &Ring, index: u64, generator: ZpMatrix) -> Result<Self> {
        ring.position(index)?;
        if generator.prime() != ring.prime() {
            return Err(Error::ModulusMismatch(
                ring.prime().get(),
                generator.prime().get(),
            ));
        }
        let basis = generator.row_basis();
        Ok(ComponentCode {
            ring: ring.clone(),
            index,
            generator,
            basis,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The retained root this component is attached to.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn generator(&self) -> &ZpMatrix {
        &self.generator
    }

    /// Canonical basis of the row space.
    pub fn basis(&self) -> &ZpMatrix {
        &self.basis
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    /// The code dimension `k_i`: the rank of the generator.
    pub fn dimension(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dimension() == 0
    }

    /// Number of codewords, `p^{k_i}`.
    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.ring.p()).pow(self.dimension() as u32)
    }

    /// Minimum Hamming weight over the nonzero codewords, found by
    /// exhaustive enumeration of the `p^{k_i}` codewords. `None` for the
    /// zero code. Enumeration runs over the canonical basis in message
    /// lexicographic order; ties keep the lexicographically smallest
    /// codeword, so the witness is deterministic.
    pub fn min_distance_capped(&self, cap: u64) -> Result<Option<ComponentDistance>> {
        let k = self.dimension();
        if k == 0 {
            return Ok(None);
        }
        let required = (self.ring.p() as u128)
            .checked_pow(k as u32)
            .unwrap_or(u128::MAX);
        if required > cap as u128 {
            return Err(Error::EnumerationCapExceeded { required, cap });
        }

        let p = self.ring.p();
        let mut message = vec![0u64; k];
        let mut best: Option<ComponentDistance> = None;
        'outer: loop {
            // advance the odometer; most-significant digit first gives
            // message lexicographic order
            let mut pos = k;
            loop {
                if pos == 0 {
                    break 'outer;
                }
                pos -= 1;
                message[pos] += 1;
                if message[pos] < p {
                    break;
                }
                message[pos] = 0;
            }
            let codeword = self.basis.encode_row(&message).expect("length matches");
            let weight = codeword.iter().filter(|&&v| v != 0).count();
            let better = match &best {
                None => true,
                Some(b) => weight < b.distance || (weight == b.distance && codeword < b.codeword),
            };
            if better {
                best = Some(ComponentDistance {
                    distance: weight,
                    codeword,
                });
            }
        }
        Ok(best)
    }

    /// [`ComponentCode::min_distance_capped`] with the default cap.
    pub fn min_distance(&self) -> Result<Option<ComponentDistance>> {
        self.min_distance_capped(DEFAULT_ENUM_CAP)
    }

    /// Singleton equality `d = n - k + 1`. The zero code is not MDS.
    pub fn is_mds_capped(&self, cap: u64) -> Result<bool> {
        match self.min_distance_capped(cap)? {
            None => Ok(false),
            Some(d) => Ok(d.distance == self.length() - self.dimension() + 1),
        }
    }

    pub fn is_mds(&self) -> Result<bool> {
        self.is_mds_capped(DEFAULT_ENUM_CAP)
    }

    /// The dual component code: systematic form of the basis, parity
    /// check `(-M^T | I_{n-k})`, then the column permutation undone.
    pub fn dual(&self) -> Result<ComponentCode> {
        let sys = self.basis.systematic_form()?;
        let parity = sys.matrix.parity_check()?;
        let generator = sys.unpermute(&parity);
        ComponentCode::new(&self.ring, self.index, generator)
    }

    /// Membership of a Z_p word in this component.
    pub fn contains(&self, word: &[u64]) -> bool {
        self.basis.row_space_contains(word)
    }
}

/// Witness of a component minimum distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDistance {
    pub distance: usize,
    /// First minimum-weight codeword in the deterministic enumeration.
    pub codeword: Vec<u64>,
}

/// A linear code over the ring, held as its component codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingLinearCode {
    ring: Ring,
    length: usize,
    components: Vec<ComponentCode>,
}

impl RingLinearCode {
    /// Builds the code from per-component generator matrices, ordered by
    /// the ring's index set. The matrices may have different row counts
    /// but must share the code length.
    pub fn from_components(ring: &Ring, generators: Vec<ZpMatrix>) -> Result<Self> {
        if generators.len() != ring.dimension() {
            return Err(Error::WrongComponentCount {
                expected: ring.dimension(),
                got: generators.len(),
            });
        }
        let length = generators[0].cols();
        for g in &generators {
            if g.cols() != length {
                return Err(Error::ShapeMismatch {
                    expected_rows: g.rows(),
                    expected_cols: length,
                    rows: g.rows(),
                    cols: g.cols(),
                });
            }
        }
        let components = ring
            .index_set()
            .iter()
            .zip(generators)
            .map(|(&root, g)| ComponentCode::new(ring, root, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(RingLinearCode {
            ring: ring.clone(),
            length,
            components,
        })
    }

    /// Builds the code generated by a ring matrix, by decomposing it.
    pub fn from_generator(generator: &RingMatrix) -> Self {
        RingLinearCode::from_components(generator.ring(), generator.decompose())
            .expect("decomposition produces aligned components")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn components(&self) -> &[ComponentCode] {
        &self.components
    }

    /// Component attached to root `r`.
    pub fn component(&self, r: u64) -> Result<&ComponentCode> {
        Ok(&self.components[self.ring.position(r)?])
    }

    /// `|C| = prod p^{k_i}`, exact.
    pub fn cardinality(&self) -> BigUint {
        let total: u32 = self.components.iter().map(|c| c.dimension() as u32).sum();
        BigUint::from(self.ring.p()).pow(total)
    }

    /// Sum of component dimensions, i.e. log_p of the cardinality.
    pub fn dimension_sum(&self) -> usize {
        self.components.iter().map(|c| c.dimension()).sum()
    }

    /// Minimum Hamming distance: the minimum over the nonzero components.
    /// Zero components contribute no nonzero codewords and are skipped;
    /// if every component is zero there is no distance to report.
    pub fn min_distance_capped(&self, cap: u64) -> Result<usize> {
        Ok(self.distance_report_capped(cap)?.distance)
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_capped(DEFAULT_ENUM_CAP)
    }

    /// Distance plus the per-component breakdown and the witnessing
    /// component.
    pub fn distance_report_capped(&self, cap: u64) -> Result<DistanceReport> {
        let mut per_component = Vec::with_capacity(self.components.len());
        for comp in &self.components {
            per_component.push(comp.min_distance_capped(cap)?);
        }
        let mut best: Option<(usize, u64)> = None;
        for (comp, dist) in self.components.iter().zip(&per_component) {
            if let Some(d) = dist {
                if best.is_none_or(|(bd, _)| d.distance < bd) {
                    best = Some((d.distance, comp.index()));
                }
            }
        }
        let Some((distance, witness_root)) = best else {
            return Err(Error::AllComponentsZero);
        };
        Ok(DistanceReport {
            distance,
            witness_root,
            per_component,
        })
    }

    pub fn distance_report(&self) -> Result<DistanceReport> {
        self.distance_report_capped(DEFAULT_ENUM_CAP)
    }

    /// The dual code, componentwise.
    pub fn dual(&self) -> Result<RingLinearCode> {
        let components = self
            .components
            .iter()
            .map(|c| c.dual())
            .collect::<Result<Vec<_>>>()?;
        Ok(RingLinearCode {
            ring: self.ring.clone(),
            length: self.length,
            components,
        })
    }

    /// Ring-level generator matrix of the dual, composed from the
    /// component parity checks. Requires all components to have the same
    /// dimension, otherwise the parity checks cannot be stacked.
    pub fn dual_matrix(&self) -> Result<RingMatrix> {
        let duals = self.dual()?;
        let parts: Vec<ZpMatrix> = duals
            .components
            .iter()
            .map(|c| c.generator().clone())
            .collect();
        RingMatrix::compose(&self.ring, &parts)
    }

    /// Ring-level generator matrix composed from the component generators
    /// as given. Requires uniform row counts.
    pub fn generator_matrix(&self) -> Result<RingMatrix> {
        let parts: Vec<ZpMatrix> = self
            .components
            .iter()
            .map(|c| c.generator().clone())
            .collect();
        RingMatrix::compose(&self.ring, &parts)
    }

    /// Membership of a ring codeword: each component word must lie in the
    /// corresponding component code.
    pub fn contains(&self, word: &RingCodeword) -> bool {
        if word.len() != self.length || word.ring() != &self.ring {
            return false;
        }
        let comps = word.to_component_words();
        self.components
            .iter()
            .zip(&comps)
            .all(|(code, w)| code.contains(w))
    }
}

/// Per-component distance breakdown of a ring code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: usize,
    /// Root of the first component achieving the minimum.
    pub witness_root: u64,
    /// Component results in index-set order; `None` marks zero components.
    pub per_component: Vec<Option<ComponentDistance>>,
}

/// A length-`n` word with ring entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCodeword {
    ring: Ring,
    entries: Vec<RingElement>,
}

impl RingCodeword {
    pub fn new(ring: &Ring, entries: Vec<RingElement>) -> Self {
        for e in &entries {
            assert_eq!(e.ring(), ring, "entry from a different ring");
        }
        RingCodeword {
            ring: ring.clone(),
            entries,
        }
    }

    /// Builds a codeword from component words (one Z_p word per retained
    /// root, in component order).
    pub fn from_component_words(ring: &Ring, words: &[Vec<u64>]) -> Result<Self> {
        if words.len() != ring.dimension() {
            return Err(Error::WrongComponentCount {
                expected: ring.dimension(),
                got: words.len(),
            });
        }
        let n = words[0].len();
        for w in words {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: w.len(),
                });
            }
        }
        let mut entries = Vec::with_capacity(n);
        let mut values = vec![0; ring.dimension()];
        for j in 0..n {
            for (k, w) in words.iter().enumerate() {
                values[k] = w[j];
            }
            entries.push(ring.from_components(&values)?);
        }
        Ok(RingCodeword {
            ring: ring.clone(),
            entries,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Number of coordinates whose entry is nonzero in the ring.
    pub fn hamming_weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// Dot product `sum x_i y_i` over the ring.
    pub fn dot(&self, other: &RingCodeword) -> Result<RingElement> {
        assert_eq!(self.ring, other.ring, "mixed rings in dot");
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        let mut acc = self.ring.zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = acc.add(&a.mul(b));
        }
        Ok(acc)
    }

    /// Splits into the `p - 1` component words over Z_p.
    pub fn to_component_words(&self) -> Vec<Vec<u64>> {
        let dim = self.ring.dimension();
        let mut words = vec![vec![0u64; self.len()]; dim];
        for (j, e) in self.entries.iter().enumerate() {
            for (k, &v) in e.to_components().values().iter().enumerate() {
                words[k][j] = v;
            }
        }
        words
    }
}

impl RingMatrix {
    /// Encodes a message of ring elements: `message * G`.
    pub fn encode(&self, message: &[RingElement]) -> Result<RingCodeword> {
        if message.len() != self.rows() {
            return Err(Error::LengthMismatch {
                expected: self.rows(),
                got: message.len(),
            });
        }
        let ring = self.ring().clone();
        let mut entries = vec![ring.zero(); self.cols()];
        for (m, i) in message.iter().zip(0..self.rows()) {
            assert_eq!(m.ring(), &ring, "message entry from a different ring");
            if m.is_zero() {
                continue;
            }
            for (j, entry) in entries.iter_mut().enumerate() {
                *entry = entry.add(&m.mul(self.get(i, j)));
            }
        }
        Ok(RingCodeword::new(&ring, entries))
    }

    /// The matrix row as a codeword.
    pub fn row_word(&self, i: usize) -> RingCodeword {
        RingCodeword::new(self.ring(), self.row(i).to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zp::Prime;

    fn ring54() -> Ring {
        Ring::new(5, 4).unwrap()
    }

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    /// Generator of the worked five-column example with distances
    /// (2, 1, 2, 2).
    fn example_one(ring: &Ring) -> RingMatrix {
        let e = |coeffs: &[u64]| ring.element(coeffs).unwrap();
        let s = |c: u64| ring.scalar(c);
        RingMatrix::from_rows(
            ring,
            vec![
                vec![s(1), s(0), s(0), e(&[1, 2, 3, 1]), e(&[1, 4, 1, 1])],
                vec![s(0), s(1), s(0), e(&[2, 4, 3, 3]), e(&[0, 1, 1, 2])],
                vec![s(0), s(0), s(1), e(&[0, 2, 4, 4]), e(&[3, 1, 2, 4])],
            ],
        )
        .unwrap()
    }

    fn example_one_components() -> [Vec<Vec<u64>>; 4] {
        [
            vec![
                vec![1, 0, 0, 1, 1],
                vec![0, 1, 0, 2, 0],
                vec![0, 0, 1, 0, 3],
            ],
            vec![
                vec![1, 0, 0, 2, 2],
                vec![0, 1, 0, 2, 4],
                vec![0, 0, 1, 0, 0],
            ],
            vec![
                vec![1, 0, 0, 0, 1],
                vec![0, 1, 0, 1, 2],
                vec![0, 0, 1, 2, 0],
            ],
            vec![
                vec![1, 0, 0, 1, 4],
                vec![0, 1, 0, 2, 1],
                vec![0, 0, 1, 0, 2],
            ],
        ]
    }

    #[test]
    fn decompose_matches_the_worked_example() {
        let ring = ring54();
        let g = example_one(&ring);
        let parts = g.decompose();
        for (part, want) in parts.iter().zip(example_one_components()) {
            assert_eq!(part.row_vecs(), want);
        }
        let recomposed = RingMatrix::compose(&ring, &parts).unwrap();
        assert_eq!(recomposed, g);
    }

    #[test]
    fn component_distances_of_the_worked_example() {
        let ring = ring54();
        let code = RingLinearCode::from_generator(&example_one(&ring));
        let report = code.distance_report().unwrap();
        let dists: Vec<usize> = report
            .per_component
            .iter()
            .map(|d| d.as_ref().unwrap().distance)
            .collect();
        assert_eq!(dists, vec![2, 1, 2, 2]);
        assert_eq!(report.distance, 1);
        assert_eq!(report.witness_root, 1);
        assert_eq!(code.cardinality(), BigUint::from(5u64).pow(12));
    }

    #[test]
    fn repetition_code_distance() {
        let ring = ring54();
        let row = vec![ring.one(), ring.one(), ring.one(), ring.one()];
        let g = RingMatrix::from_rows(&ring, vec![row]).unwrap();
        let code = RingLinearCode::from_generator(&g);
        assert_eq!(code.min_distance().unwrap(), 4);
    }

    #[test]
    fn zero_code_has_no_distance() {
        let ring = ring54();
        let g = RingMatrix::zeros(&ring, 2, 3);
        let code = RingLinearCode::from_generator(&g);
        assert_eq!(code.min_distance().unwrap_err(), Error::AllComponentsZero);
        assert_eq!(code.cardinality(), BigUint::from(1u32));
        for comp in code.components() {
            assert_eq!(comp.min_distance().unwrap(), None);
            assert!(!comp.is_mds().unwrap());
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let ring = ring54();
        let code = RingLinearCode::from_generator(&example_one(&ring));
        assert_eq!(
            code.min_distance_capped(100).unwrap_err(),
            Error::EnumerationCapExceeded {
                required: 125,
                cap: 100
            }
        );
    }

    #[test]
    fn identity_generator_distance_is_one() {
        let ring = ring54();
        let parts = vec![ZpMatrix::identity(p5(), 4); 4];
        let code = RingLinearCode::from_components(&ring, parts).unwrap();
        assert_eq!(code.min_distance().unwrap(), 1);
        for comp in code.components() {
            assert!(comp.is_mds().unwrap());
        }
    }

    #[test]
    fn cardinality_with_unequal_ranks() {
        let ring = ring54();
        let mk = |rows: &[Vec<u64>]| ZpMatrix::from_rows(p5(), rows).unwrap();
        let parts = vec![
            mk(&[vec![1, 0, 0, 0, 0]]),
            mk(&[vec![1, 0, 0, 0, 0], vec![0, 1, 0, 0, 0]]),
            mk(&[vec![0, 0, 1, 0, 0]]),
            mk(&[vec![0, 0, 0, 0, 1]]),
        ];
        let code = RingLinearCode::from_components(&ring, parts).unwrap();
        assert_eq!(code.cardinality(), BigUint::from(5u64).pow(5));
    }

    #[test]
    fn hamming_weight_counts_nonzero_ring_entries() {
        let ring = ring54();
        let a0 = ring.idempotent(0).unwrap();
        let w = RingCodeword::new(
            &ring,
            vec![a0.clone(), ring.zero(), a0, ring.zero(), ring.zero()],
        );
        assert_eq!(w.hamming_weight(), 2);
        let row = RingCodeword::new(
            &ring,
            vec![
                ring.zero(),
                ring.one(),
                ring.zero(),
                ring.element(&[2, 4, 3, 3]).unwrap(),
                ring.element(&[0, 1, 1, 2]).unwrap(),
            ],
        );
        assert_eq!(row.hamming_weight(), 3);
        assert_eq!(
            RingMatrix::zeros(&ring, 1, 4).row_word(0).hamming_weight(),
            0
        );
    }

    #[test]
    fn dual_components_match_parity_checks() {
        let ring = ring54();
        let code = RingLinearCode::from_generator(&example_one(&ring));
        let dual = code.dual().unwrap();
        assert_eq!(
            dual.component(0).unwrap().generator().row_vecs(),
            vec![vec![4, 3, 0, 1, 0], vec![4, 0, 2, 0, 1]]
        );
        assert_eq!(
            dual.component(2).unwrap().generator().row_vecs(),
            vec![vec![0, 4, 3, 1, 0], vec![4, 3, 0, 0, 1]]
        );
        // |C| * |C_dual| = |R|^n
        assert_eq!(
            code.cardinality() * dual.cardinality(),
            ring.cardinality().pow(code.length() as u32)
        );
    }

    #[test]
    fn ring_dual_matrix_annihilates_the_generator() {
        let ring = ring54();
        let g = example_one(&ring);
        let code = RingLinearCode::from_generator(&g);
        let h = code.dual_matrix().unwrap();
        assert!(g.matmul(&h.transpose()).is_zero(), "G * H^T must vanish");
        // the entry the source matrices leave in idempotent form
        assert_eq!(h.get(1, 0).coeffs(), &[4, 1, 4, 4]); // 4u^3+4u^2+u+4
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let ring = ring54();
        let parts = vec![ZpMatrix::identity(p5(), 3); 4];
        let code = RingLinearCode::from_components(&ring, parts).unwrap();
        let dual = code.dual().unwrap();
        assert!(dual.components().iter().all(|c| c.is_zero()));
        // and back: the dual of the zero code is the full space
        let back = dual.dual().unwrap();
        assert!(back.components().iter().all(|c| c.dimension() == 3));
    }

    #[test]
    fn double_dual_spans_the_original_components() {
        let ring = Ring::new(3, 0).unwrap();
        let p3 = Prime::new(3).unwrap();
        let parts = vec![
            ZpMatrix::from_rows(p3, &[vec![1, 1, 0, 2], vec![0, 1, 1, 1]]).unwrap(),
            ZpMatrix::from_rows(p3, &[vec![2, 0, 1, 0]]).unwrap(),
        ];
        let code = RingLinearCode::from_components(&ring, parts).unwrap();
        let double = code.dual().unwrap().dual().unwrap();
        for (a, b) in code.components().iter().zip(double.components()) {
            assert_eq!(a.basis(), b.basis());
        }
    }

    #[test]
    fn dot_products() {
        let ring = ring54();
        let e1 = RingCodeword::new(&ring, vec![ring.one(), ring.zero()]);
        let e2 = RingCodeword::new(&ring, vec![ring.zero(), ring.one()]);
        assert!(e1.dot(&e2).unwrap().is_zero());
        let ones = RingCodeword::new(&ring, vec![ring.one(), ring.one()]);
        assert_eq!(ones.dot(&ones).unwrap(), ring.scalar(2));
        assert!(matches!(
            e1.dot(&RingCodeword::new(&ring, vec![ring.one()])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn generator_rows_are_orthogonal_to_dual_rows() {
        let ring = ring54();
        let g = example_one(&ring);
        let h = RingLinearCode::from_generator(&g).dual_matrix().unwrap();
        for i in 0..g.rows() {
            for j in 0..h.rows() {
                assert!(g.row_word(i).dot(&h.row_word(j)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn encoding_examples() {
        let ring = ring54();
        let g = example_one(&ring);
        let e1 = vec![ring.one(), ring.zero(), ring.zero()];
        assert_eq!(g.encode(&e1).unwrap(), g.row_word(0));
        let zero = vec![ring.zero(); 3];
        assert!(g.encode(&zero).unwrap().is_zero());
        assert!(matches!(
            g.encode(&[ring.one()]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn all_ones_message_against_example_two() {
        let ring = ring54();
        let e = |coeffs: &[u64]| ring.element(coeffs).unwrap();
        let s = |c: u64| ring.scalar(c);
        let g = RingMatrix::from_rows(
            &ring,
            vec![
                vec![s(1), s(0), s(0), s(1), s(1)],
                vec![s(0), s(1), s(0), s(1), s(2)],
                vec![s(0), s(0), s(1), e(&[1, 3, 4, 3]), e(&[3, 1, 1, 4])],
            ],
        )
        .unwrap();
        let word = g.encode(&vec![ring.one(); 3]).unwrap();
        // component 0 carries the sum of the rows of G_0
        assert_eq!(word.to_component_words()[0], vec![1, 1, 1, 3, 1]);
    }

    #[test]
    fn encoded_words_decompose_into_component_encodings() {
        let ring = ring54();
        let g = example_one(&ring);
        let parts = g.decompose();
        let msg = vec![
            ring.element(&[1, 2, 0, 4]).unwrap(),
            ring.element(&[0, 0, 3, 1]).unwrap(),
            ring.element(&[2, 2, 2, 2]).unwrap(),
        ];
        let word = g.encode(&msg).unwrap();
        let words = word.to_component_words();
        for (k, part) in parts.iter().enumerate() {
            let m_k: Vec<u64> = msg.iter().map(|m| m.to_components().values()[k]).collect();
            assert_eq!(words[k], part.encode_row(&m_k).unwrap());
        }
    }

    #[test]
    fn mds_flags_of_the_worked_examples() {
        let ring = ring54();
        // second worked example: every component has n=5, k=3, d=3
        let e = |coeffs: &[u64]| ring.element(coeffs).unwrap();
        let s = |c: u64| ring.scalar(c);
        let g = RingMatrix::from_rows(
            &ring,
            vec![
                vec![s(1), s(0), s(0), s(1), s(1)],
                vec![s(0), s(1), s(0), s(1), s(2)],
                vec![s(0), s(0), s(1), e(&[1, 3, 4, 3]), e(&[3, 1, 1, 4])],
            ],
        )
        .unwrap();
        let code = RingLinearCode::from_generator(&g);
        for comp in code.components() {
            assert_eq!(comp.min_distance().unwrap().unwrap().distance, 3);
            assert!(comp.is_mds().unwrap());
        }
        assert_eq!(code.min_distance().unwrap(), 3);

        // first worked example: component 1 has d = 1 != 5 - 3 + 1
        let code1 = RingLinearCode::from_generator(&example_one(&ring));
        assert!(!code1.component(1).unwrap().is_mds().unwrap());
    }

    #[test]
    fn weight_of_embedded_component_word() {
        let ring = ring54();
        let words = [
            vec![1, 0, 2, 0],
            vec![0, 0, 0, 0],
            vec![3, 3, 0, 1],
            vec![0, 4, 0, 0],
        ];
        for (k, w) in words.iter().enumerate() {
            let root = ring.index_set()[k];
            let alpha = ring.idempotent(root).unwrap();
            let entries: Vec<_> = w.iter().map(|&v| alpha.scale(v)).collect();
            let codeword = RingCodeword::new(&ring, entries);
            let zp_weight = w.iter().filter(|&&v| v != 0).count();
            assert_eq!(codeword.hamming_weight(), zp_weight);
        }
    }

    #[test]
    fn membership_respects_components() {
        let ring = ring54();
        let g = example_one(&ring);
        let code = RingLinearCode::from_generator(&g);
        assert!(code.contains(&g.row_word(0)));
        let msg = vec![
            ring.element(&[1, 0, 0, 1]).unwrap(),
            ring.scalar(3),
            ring.idempotent(2).unwrap(),
        ];
        assert!(code.contains(&g.encode(&msg).unwrap()));
        let outsider = RingCodeword::new(
            &ring,
            vec![
                ring.zero(),
                ring.zero(),
                ring.zero(),
                ring.one(),
                ring.zero(),
            ],
        );
        assert!(!code.contains(&outsider));
    }
}
