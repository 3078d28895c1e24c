//! Cyclic codes over the ring: component generator polynomials dividing
//! `x^n - 1` over Z_p, combined through the idempotents into a single
//! generator polynomial over the ring.
//!
//! A code over the ring is cyclic exactly when every component code is
//! cyclic, so the data of a cyclic ring code is one divisor of `x^n - 1`
//! per retained root.

use crate::error::{Error, Result};
use crate::linear::{RingCodeword, RingLinearCode};
use crate::matrix::ZpMatrix;
use crate::poly::ZpPoly;
use crate::ring::{Ring, RingElement};
use crate::zp::Prime;

/// One linear factor `(x - root)^multiplicity` of `x^n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub root: u64,
    pub multiplicity: u32,
}

impl Factor {
    /// The factor as a polynomial, `(x - root)^multiplicity`.
    pub fn poly(&self, p: Prime) -> ZpPoly {
        ZpPoly::new(p, vec![p.neg(self.root), 1]).pow(self.multiplicity)
    }
}

/// Complete linear factorization of `x^n - 1` over Z_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    p: Prime,
    n: usize,
    factors: Vec<Factor>,
}

impl FactorList {
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Factors ordered by ascending root.
    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Multiplies the factors back together; always equals `x^n - 1`.
    pub fn product(&self) -> ZpPoly {
        let mut acc = ZpPoly::one(self.p);
        for f in &self.factors {
            acc = &acc * &f.poly(self.p);
        }
        acc
    }
}

/// Factors `x^n - 1` over Z_p in the split case.
///
/// Writing `n = n' * p^e` with `n'` coprime to `p`, we have
/// `x^n - 1 = (x^{n'} - 1)^{p^e}`, and `x^{n'} - 1` is squarefree. Roots
/// are found by trial evaluation; if fewer than `n'` residues are roots,
/// the leftover factor has degree above one and the factorization is
/// refused (supply generator polynomials directly in that case).
pub fn factor_xn_minus_1(p: Prime, n: usize) -> Result<FactorList> {
    assert!(n >= 1, "length must be positive");
    let mut reduced = n;
    let mut multiplicity = 1u32;
    while reduced.is_multiple_of(p.get() as usize) {
        reduced /= p.get() as usize;
        multiplicity *= p.get() as u32;
    }
    let roots: Vec<u64> = (0..p.get())
        .filter(|&r| p.pow(r, reduced as u64) == 1)
        .collect();
    if roots.len() != reduced {
        return Err(Error::DoesNotSplit {
            n,
            p: p.get(),
            residual_degree: reduced - roots.len(),
        });
    }
    Ok(FactorList {
        p,
        n,
        factors: roots
            .into_iter()
            .map(|root| Factor { root, multiplicity })
            .collect(),
    })
}

/// Whether `g` divides `x^n - 1` over its prime field.
pub fn divides_xn_minus_1(g: &ZpPoly, n: usize) -> bool {
    assert!(!g.is_zero(), "the zero polynomial divides nothing");
    ZpPoly::xn_minus_1(g.prime(), n)
        .rem(g)
        .expect("g is nonzero")
        .is_zero()
}

/// Generator matrix of the cyclic Z_p code with generator polynomial `g`:
/// the shift rows `x^j * g(x)` for `j = 0 .. n - deg g - 1`. `g = 1`
/// yields the identity (full space), `deg g = n` the empty matrix (zero
/// code).
pub fn cyclic_generator_matrix(g: &ZpPoly, n: usize) -> Result<ZpMatrix> {
    let p = g.prime();
    let deg = match g.degree() {
        None => return Err(Error::InvalidGenerator(0)),
        Some(d) => d,
    };
    if deg > n || !divides_xn_minus_1(g, n) {
        return Err(Error::InvalidGenerator(0));
    }
    if deg == n {
        return Ok(ZpMatrix::empty(p, n));
    }
    let rows: Vec<Vec<u64>> = (0..n - deg)
        .map(|j| {
            let mut row = vec![0u64; n];
            for (t, &c) in g.coeffs().iter().enumerate() {
                row[j + t] = c;
            }
            row
        })
        .collect();
    ZpMatrix::from_rows(p, &rows)
}

/// The component generator polynomials of a cyclic ring code: one monic
/// divisor of `x^n - 1` per retained root, in component order.
///
/// Conventions for degenerate components: `g_i = 1` is the full space and
/// `g_i = x^n - 1` the zero component (its generator matrix is empty).
/// Non-monic input is scaled monic, which leaves the generated ideal
/// unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicGenerators {
    ring: Ring,
    n: usize,
    generators: Vec<ZpPoly>,
}

impl CyclicGenerators {
    pub fn new(ring: &Ring, n: usize, generators: Vec<ZpPoly>) -> Result<Self> {
        if generators.len() != ring.dimension() {
            return Err(Error::WrongComponentCount {
                expected: ring.dimension(),
                got: generators.len(),
            });
        }
        let mut monic = Vec::with_capacity(generators.len());
        for (&root, g) in ring.index_set().iter().zip(generators) {
            if g.prime() != ring.prime() {
                return Err(Error::ModulusMismatch(ring.p(), g.prime().get()));
            }
            if g.is_zero() || g.degree().unwrap() > n {
                return Err(Error::InvalidGenerator(root));
            }
            let g = g.to_monic();
            if !divides_xn_minus_1(&g, n) {
                return Err(Error::InvalidGenerator(root));
            }
            monic.push(g);
        }
        Ok(CyclicGenerators {
            ring: ring.clone(),
            n,
            generators: monic,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Monic generators in component order.
    pub fn generators(&self) -> &[ZpPoly] {
        &self.generators
    }

    pub fn generator_for(&self, root: u64) -> Result<&ZpPoly> {
        Ok(&self.generators[self.ring.position(root)?])
    }

    /// The ring generator polynomial `sum alpha_i g_i(x)`, assembled
    /// coefficient by coefficient through the component map. Generators
    /// are first reduced mod `x^n - 1`, so the zero-component convention
    /// `g_i = x^n - 1` contributes nothing.
    pub fn compose(&self) -> RingPolynomial {
        let mut coeffs = Vec::with_capacity(self.n);
        let mut values = vec![0u64; self.ring.dimension()];
        for j in 0..self.n {
            for (k, g) in self.generators.iter().enumerate() {
                values[k] = if g.degree() == Some(self.n) {
                    0
                } else {
                    g.coeff(j)
                };
            }
            coeffs.push(
                self.ring
                    .from_components(&values)
                    .expect("component count fixed at construction"),
            );
        }
        RingPolynomial {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Per-component shift generator matrices.
    pub fn component_matrices(&self) -> Vec<ZpMatrix> {
        self.generators
            .iter()
            .map(|g| cyclic_generator_matrix(g, self.n).expect("validated at construction"))
            .collect()
    }

    /// The cyclic code as a plain linear code over the ring.
    pub fn to_linear_code(&self) -> RingLinearCode {
        RingLinearCode::from_components(&self.ring, self.component_matrices())
            .expect("component matrices share the length")
    }
}

/// Element of the ring's length-`n` polynomial quotient: exactly `n`
/// ring-element coefficients, position `j` holding the coefficient of
/// `x^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPolynomial {
    ring: Ring,
    coeffs: Vec<RingElement>,
}

impl RingPolynomial {
    /// Builds from at most `n` coefficients, padding with zeros.
    pub fn new(ring: &Ring, n: usize, coeffs: Vec<RingElement>) -> Result<Self> {
        if coeffs.len() > n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: coeffs.len(),
            });
        }
        for c in &coeffs {
            assert_eq!(c.ring(), ring, "coefficient from a different ring");
        }
        let mut coeffs = coeffs;
        coeffs.resize(n, ring.zero());
        Ok(RingPolynomial {
            ring: ring.clone(),
            coeffs,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients ascending by degree, always of length `n`.
    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &RingElement {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Splits into the `p - 1` component polynomials over Z_p, trimmed to
    /// canonical form, in component order.
    pub fn decompose(&self) -> Vec<ZpPoly> {
        let dim = self.ring.dimension();
        let mut columns = vec![vec![0u64; self.n()]; dim];
        for (j, c) in self.coeffs.iter().enumerate() {
            for (k, &v) in c.to_components().values().iter().enumerate() {
                columns[k][j] = v;
            }
        }
        columns
            .into_iter()
            .map(|c| ZpPoly::new(self.ring.prime(), c))
            .collect()
    }

    /// The codeword view of the coefficient sequence.
    pub fn to_codeword(&self) -> RingCodeword {
        RingCodeword::new(&self.ring, self.coeffs.clone())
    }
}

impl std::fmt::Display for RingPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let scalar = c.coeffs()[1..].iter().all(|&v| v == 0);
            let body = c.to_string();
            match (e, scalar, c.is_one()) {
                (0, true, _) => write!(f, "{body}")?,
                (0, false, _) => write!(f, "({body})")?,
                (1, _, true) => write!(f, "x")?,
                (1, true, false) => write!(f, "{body}x")?,
                (1, false, false) => write!(f, "({body})x")?,
                (_, _, true) => write!(f, "x^{e}")?,
                (_, true, false) => write!(f, "{body}x^{e}")?,
                (_, false, false) => write!(f, "({body})x^{e}")?,
            }
        }
        Ok(())
    }
}

impl RingCodeword {
    /// One rotation to the right: `(c_0, ..., c_{n-1})` becomes
    /// `(c_{n-1}, c_0, ..., c_{n-2})`.
    pub fn cyclic_shift(&self) -> RingCodeword {
        let mut entries = self.entries().to_vec();
        if let Some(last) = entries.pop() {
            entries.insert(0, last);
        }
        RingCodeword::new(self.ring(), entries)
    }
}

impl ZpMatrix {
    /// Shift-closure of the row space: every basis row, rotated once,
    /// stays inside the row space.
    pub fn is_shift_closed(&self) -> bool {
        let basis = self.row_basis();
        (0..basis.rows()).all(|i| {
            let mut row = basis.row(i).to_vec();
            if let Some(last) = row.pop() {
                row.insert(0, last);
            }
            basis.row_space_contains(&row)
        })
    }
}

impl RingLinearCode {
    /// A ring code is cyclic exactly when every component code is closed
    /// under the cyclic shift; zero components are trivially closed. The
    /// check runs on row spaces, no enumeration involved.
    pub fn is_cyclic(&self) -> bool {
        self.components()
            .iter()
            .all(|c| c.generator().is_shift_closed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn ring54() -> Ring {
        Ring::new(5, 4).unwrap()
    }

    #[test]
    fn factors_split_lengths() {
        let f = factor_xn_minus_1(p5(), 4).unwrap();
        let roots: Vec<(u64, u32)> = f
            .factors()
            .iter()
            .map(|f| (f.root, f.multiplicity))
            .collect();
        assert_eq!(roots, vec![(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(f.product(), ZpPoly::xn_minus_1(p5(), 4));

        let f5 = factor_xn_minus_1(p5(), 5).unwrap();
        let roots5: Vec<(u64, u32)> = f5
            .factors()
            .iter()
            .map(|f| (f.root, f.multiplicity))
            .collect();
        assert_eq!(roots5, vec![(1, 5)]);
        assert_eq!(f5.product(), ZpPoly::xn_minus_1(p5(), 5));

        let p3 = Prime::new(3).unwrap();
        let f3 = factor_xn_minus_1(p3, 2).unwrap();
        let roots3: Vec<u64> = f3.factors().iter().map(|f| f.root).collect();
        assert_eq!(roots3, vec![1, 2]);
    }

    #[test]
    fn refuses_non_split_lengths() {
        // x^3 - 1 = (x - 1)(x^2 + x + 1) mod 5, quadratic part irreducible
        assert_eq!(
            factor_xn_minus_1(p5(), 3).unwrap_err(),
            Error::DoesNotSplit {
                n: 3,
                p: 5,
                residual_degree: 2
            }
        );
    }

    #[test]
    fn divisibility_checks() {
        let x_minus_2 = ZpPoly::new(p5(), vec![3, 1]);
        assert!(divides_xn_minus_1(&x_minus_2, 4));
        assert!(!divides_xn_minus_1(&x_minus_2, 5));
        assert!(divides_xn_minus_1(&ZpPoly::one(p5()), 7));
    }

    #[test]
    fn shift_matrix_shapes() {
        let p3 = Prime::new(3).unwrap();
        // x - 1 over length 2: single row (-1, 1)
        let m = cyclic_generator_matrix(&ZpPoly::new(p3, vec![2, 1]), 2).unwrap();
        assert_eq!(m.row_vecs(), vec![vec![2, 1]]);
        // 1 over length 3: the identity
        assert_eq!(
            cyclic_generator_matrix(&ZpPoly::one(p3), 3).unwrap(),
            ZpMatrix::identity(p3, 3)
        );
        // (x-1)^2 = x^2+3x+1 over length 5
        let g = ZpPoly::new(p5(), vec![1, 3, 1]);
        let m5 = cyclic_generator_matrix(&g, 5).unwrap();
        assert_eq!(
            m5.row_vecs(),
            vec![
                vec![1, 3, 1, 0, 0],
                vec![0, 1, 3, 1, 0],
                vec![0, 0, 1, 3, 1]
            ]
        );
        assert!(m5.is_shift_closed());
        // x^n - 1 itself: the zero code, an empty matrix
        let zero = cyclic_generator_matrix(&ZpPoly::xn_minus_1(p5(), 4), 4).unwrap();
        assert_eq!(zero.rows(), 0);
        // non-divisors are refused
        assert!(cyclic_generator_matrix(&ZpPoly::new(p5(), vec![3, 1]), 5).is_err());
    }

    #[test]
    fn compose_length_four_golden() {
        let ring = ring54();
        let gens = CyclicGenerators::new(
            &ring,
            4,
            vec![
                ZpPoly::new(p5(), vec![3, 1]),    // x - 2
                ZpPoly::new(p5(), vec![2, 1]),    // x - 3
                ZpPoly::new(p5(), vec![2, 2, 1]), // (x-1)(x-2)
                ZpPoly::new(p5(), vec![1, 1]),    // x - 4
            ],
        )
        .unwrap();
        let g = gens.compose();
        assert_eq!(g.coeff(0).coeffs(), &[3, 2, 4, 3]); // 3u^3+4u^2+2u+3
        assert_eq!(g.coeff(1).coeffs(), &[1, 1, 2, 2]); // 2u^3+2u^2+u+1
        assert_eq!(g.coeff(2).coeffs(), &[0, 1, 2, 2]); // 2u^3+2u^2+u
        assert!(g.coeff(3).is_zero());
        assert_eq!(
            g.to_string(),
            "(2u^3+2u^2+u)x^2+(2u^3+2u^2+u+1)x+(3u^3+4u^2+2u+3)"
        );
    }

    #[test]
    fn compose_length_five_golden() {
        let ring = ring54();
        let x_minus_1 = ZpPoly::new(p5(), vec![4, 1]);
        let gens = CyclicGenerators::new(
            &ring,
            5,
            vec![
                x_minus_1.clone(),
                x_minus_1.pow(3),
                x_minus_1.pow(2),
                x_minus_1.pow(4),
            ],
        )
        .unwrap();
        let g = gens.compose();
        let expected: [[u64; 4]; 5] = [
            [4, 1, 3, 1], // u^3+3u^2+u+4
            [1, 3, 4, 0], // 4u^2+3u+1
            [0, 4, 4, 4], // 4u^3+4u^2+4u
            [0, 0, 2, 4], // 4u^3+2u^2
            [0, 2, 2, 1], // u^3+2u^2+2u
        ];
        for (j, want) in expected.iter().enumerate() {
            assert_eq!(g.coeff(j).coeffs(), want, "coefficient of x^{j}");
        }
    }

    #[test]
    fn all_unit_generators_compose_to_one() {
        let ring = ring54();
        let gens = CyclicGenerators::new(&ring, 4, vec![ZpPoly::one(p5()); 4]).unwrap();
        let g = gens.compose();
        assert!(g.coeff(0).is_one());
        assert!((1..4).all(|j| g.coeff(j).is_zero()));
    }

    #[test]
    fn invalid_generators_are_named() {
        let ring = ring54();
        let bad = CyclicGenerators::new(
            &ring,
            4,
            vec![
                ZpPoly::new(p5(), vec![3, 1]),
                ZpPoly::new(p5(), vec![3, 1]),
                ZpPoly::new(p5(), vec![1, 1, 1]), // x^2+x+1 does not divide x^4-1
                ZpPoly::new(p5(), vec![1, 1]),
            ],
        );
        assert_eq!(bad.unwrap_err(), Error::InvalidGenerator(2));
        let zero = CyclicGenerators::new(
            &ring,
            4,
            vec![
                ZpPoly::zero(p5()),
                ZpPoly::one(p5()),
                ZpPoly::one(p5()),
                ZpPoly::one(p5()),
            ],
        );
        assert_eq!(zero.unwrap_err(), Error::InvalidGenerator(0));
    }

    #[test]
    fn non_monic_generators_are_normalized() {
        let ring = ring54();
        let gens = CyclicGenerators::new(
            &ring,
            4,
            vec![
                ZpPoly::new(p5(), vec![1, 2]), // 2x+1 = 2(x+3)
                ZpPoly::one(p5()),
                ZpPoly::one(p5()),
                ZpPoly::one(p5()),
            ],
        )
        .unwrap();
        assert_eq!(gens.generators()[0].coeffs(), &[3, 1]);
    }

    #[test]
    fn decompose_inverts_compose() {
        let ring = ring54();
        let gens = CyclicGenerators::new(
            &ring,
            4,
            vec![
                ZpPoly::new(p5(), vec![3, 1]),
                ZpPoly::new(p5(), vec![2, 1]),
                ZpPoly::new(p5(), vec![2, 2, 1]),
                ZpPoly::new(p5(), vec![1, 1]),
            ],
        )
        .unwrap();
        let g = gens.compose();
        let parts = g.decompose();
        assert_eq!(parts[0].coeffs(), &[3, 1]);
        assert_eq!(parts[1].coeffs(), &[2, 1]);
        assert_eq!(parts[2].coeffs(), &[2, 2, 1]);
        assert_eq!(parts[3].coeffs(), &[1, 1]);

        let zero = RingPolynomial::new(&ring, 4, vec![]).unwrap();
        assert!(zero.decompose().iter().all(|p| p.is_zero()));
    }

    #[test]
    fn top_coefficient_tracks_the_highest_degree_component() {
        let ring = ring54();
        let x_minus_1 = ZpPoly::new(p5(), vec![4, 1]);
        let gens = CyclicGenerators::new(
            &ring,
            5,
            vec![
                x_minus_1.clone(),
                x_minus_1.pow(3),
                x_minus_1.pow(2),
                x_minus_1.pow(4),
            ],
        )
        .unwrap();
        let g = gens.compose();
        // only the degree-4 component generator reaches x^4
        assert_eq!(g.coeff(4).to_components().values(), &[0, 0, 0, 1]);
    }

    #[test]
    fn shifts_rotate_right() {
        let ring = ring54();
        let (a, b, c) = (ring.scalar(1), ring.scalar(2), ring.scalar(3));
        let w = RingCodeword::new(&ring, vec![a.clone(), b.clone(), c.clone()]);
        let shifted = w.cyclic_shift();
        assert_eq!(shifted.entries(), &[c, a, b]);
        assert_eq!(w.hamming_weight(), shifted.hamming_weight());
        let thrice = shifted.cyclic_shift().cyclic_shift();
        assert_eq!(thrice, w);
        let constant = RingCodeword::new(&ring, vec![ring.one(); 4]);
        assert_eq!(constant.cyclic_shift(), constant);
    }

    #[test]
    fn cyclic_detection() {
        let ring = ring54();
        let gens = CyclicGenerators::new(
            &ring,
            4,
            vec![
                ZpPoly::new(p5(), vec![3, 1]),
                ZpPoly::new(p5(), vec![2, 1]),
                ZpPoly::new(p5(), vec![2, 2, 1]),
                ZpPoly::new(p5(), vec![1, 1]),
            ],
        )
        .unwrap();
        assert!(gens.to_linear_code().is_cyclic());

        // full space is cyclic
        let full =
            RingLinearCode::from_components(&ring, vec![ZpMatrix::identity(p5(), 4); 4]).unwrap();
        assert!(full.is_cyclic());

        // a single unit vector spans nothing shift-closed
        let mut parts = vec![ZpMatrix::identity(p5(), 4); 4];
        parts[0] = ZpMatrix::from_rows(p5(), &[vec![1, 0, 0, 0]]).unwrap();
        let lopsided = RingLinearCode::from_components(&ring, parts).unwrap();
        assert!(!lopsided.is_cyclic());
    }

    #[test]
    fn composed_generator_spans_the_component_ideals() {
        // rows x^j * g(x) mod (x^n - 1) over the ring decompose to the
        // same component row spaces as the per-component shift matrices
        let ring = ring54();
        let x_minus_1 = ZpPoly::new(p5(), vec![4, 1]);
        let generator_sets = [
            CyclicGenerators::new(
                &ring,
                4,
                vec![
                    ZpPoly::new(p5(), vec![3, 1]),
                    ZpPoly::new(p5(), vec![2, 1]),
                    ZpPoly::new(p5(), vec![2, 2, 1]),
                    ZpPoly::new(p5(), vec![1, 1]),
                ],
            )
            .unwrap(),
            CyclicGenerators::new(
                &ring,
                5,
                vec![
                    x_minus_1.clone(),
                    x_minus_1.pow(3),
                    x_minus_1.pow(2),
                    x_minus_1.pow(4),
                ],
            )
            .unwrap(),
        ];
        for gens in generator_sets {
            let g = gens.compose();
            let n = gens.n();
            let mut word = g.to_codeword();
            let mut rows = Vec::new();
            for _ in 0..n {
                rows.push(word.entries().to_vec());
                word = word.cyclic_shift();
            }
            let span = crate::matrix::RingMatrix::from_rows(&ring, rows).unwrap();
            let spanned = RingLinearCode::from_generator(&span);
            let direct = gens.to_linear_code();
            for (a, b) in spanned.components().iter().zip(direct.components()) {
                assert_eq!(a.basis(), b.basis(), "component {} row space", a.index());
            }
        }
    }

    #[test]
    fn random_generator_sets_roundtrip_through_composition() {
        use rand::prelude::*;
        let mut rng = StdRng::seed_from_u64(11);
        // split lengths only; the composed polynomial must decompose back
        // to the (reduced) generators
        for (p, s, n) in [
            (3u64, 1u64, 2usize),
            (3, 1, 3),
            (3, 0, 6),
            (5, 4, 4),
            (5, 0, 5),
        ] {
            let ring = Ring::new(p, s).unwrap();
            let prime = ring.prime();
            let factors = crate::cyclic::factor_xn_minus_1(prime, n).unwrap();
            for _ in 0..20 {
                let gens: Vec<ZpPoly> = (0..ring.dimension())
                    .map(|_| {
                        let mut g = ZpPoly::one(prime);
                        for f in factors.factors() {
                            let e = rng.random_range(0..=f.multiplicity);
                            let linear = ZpPoly::new(prime, vec![prime.neg(f.root), 1]);
                            g = &g * &linear.pow(e);
                        }
                        g
                    })
                    .collect();
                let generator_set = CyclicGenerators::new(&ring, n, gens.clone()).unwrap();
                let parts = generator_set.compose().decompose();
                for (g, part) in gens.iter().zip(&parts) {
                    if g.degree() == Some(n) {
                        assert!(part.is_zero(), "full product reduces to zero");
                    } else {
                        assert_eq!(part, g);
                    }
                }
            }
        }
    }
}
