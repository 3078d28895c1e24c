//! The quotient ring Z_p[u]/(g_s(u)) and its idempotent decomposition.
//!
//! For a prime `p` and an excluded root `s`, the modulus is
//! `g_s(u) = (u^p - u)/(u - s)`, the product of the linear factors
//! `(u - i)` over every residue `i` except `s`. Because those factors are
//! pairwise coprime the ring splits as a direct product of `p - 1` copies
//! of Z_p, and the splitting is witnessed by the orthogonal idempotents
//!
//! ```text
//! alpha_r(u) = q_r * prod_{i != s, r} (u - i),   q_r the inverse of that
//!                                                product evaluated at r.
//! ```
//!
//! These are exactly the Lagrange basis polynomials on the retained roots:
//! `alpha_r(l)` is 1 at `l = r` and 0 at every other retained root, so the
//! isomorphism onto Z_p^(p-1) is evaluation at the retained roots and its
//! inverse is the idempotent combination `sum v_r * alpha_r`.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poly::ZpPoly;
use crate::zp::Prime;

#[derive(Debug)]
struct RingData {
    p: Prime,
    s: u64,
    /// Retained roots, ascending; the component order everywhere.
    index_set: Vec<u64>,
    /// g_s(u), monic of degree p - 1.
    modulus: ZpPoly,
    /// Idempotent coefficients, padded to length p - 1, aligned with `index_set`.
    idempotents: Vec<Vec<u64>>,
    /// Normalizing scalars q_r, aligned with `index_set`.
    weights: Vec<u64>,
}

/// Handle to an immutable ring description; cheap to clone and share.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.s == other.0.s
    }
}

impl Eq for Ring {}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.s.hash(state);
    }
}

impl Ring {
    /// Builds the ring for prime `p` and excluded root `s`, precomputing
    /// the modulus and all idempotents.
    pub fn new(p: u64, s: u64) -> Result<Ring> {
        let prime = Prime::new(p)?;
        if s >= p {
            return Err(Error::ResidueOutOfRange { s, p });
        }
        let index_set: Vec<u64> = (0..p).filter(|&i| i != s).collect();
        let modulus = ZpPoly::from_roots(prime, &index_set);

        let dim = (p - 1) as usize;
        let mut idempotents = Vec::with_capacity(dim);
        let mut weights = Vec::with_capacity(dim);
        for &r in &index_set {
            let numerator = lagrange_numerator(prime, &index_set, r);
            let weight = prime
                .inv(numerator.eval(r))
                .expect("retained roots are distinct, so the numerator is nonzero at r");
            let reduced = numerator
                .scale(weight)
                .rem(&modulus)
                .expect("monic modulus");
            let mut coeffs = reduced.coeffs().to_vec();
            coeffs.resize(dim, 0);
            idempotents.push(coeffs);
            weights.push(weight);
        }

        Ok(Ring(Arc::new(RingData {
            p: prime,
            s,
            index_set,
            modulus,
            idempotents,
            weights,
        })))
    }

    pub fn prime(&self) -> Prime {
        self.0.p
    }

    pub fn p(&self) -> u64 {
        self.0.p.get()
    }

    /// The excluded root `s`.
    pub fn excluded_root(&self) -> u64 {
        self.0.s
    }

    /// Retained roots in ascending order; component `k` refers to
    /// `index_set()[k]` throughout the crate.
    pub fn index_set(&self) -> &[u64] {
        &self.0.index_set
    }

    /// Number of components, `p - 1`; also the coefficient length of
    /// every canonical element.
    pub fn dimension(&self) -> usize {
        self.0.index_set.len()
    }

    /// The modulus polynomial g_s(u).
    pub fn modulus(&self) -> &ZpPoly {
        &self.0.modulus
    }

    /// `p^(p-1)`, the number of ring elements.
    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.p()).pow(self.dimension() as u32)
    }

    /// Position of root `r` within the component order.
    pub fn position(&self, r: u64) -> Result<usize> {
        self.0
            .index_set
            .binary_search(&r)
            .map_err(|_| Error::InvalidComponentIndex {
                index: r,
                p: self.p(),
                s: self.0.s,
            })
    }

    /// The degree-(p-2) product of `(u - i)` over all retained roots
    /// except `r`: the Lagrange numerator at node `r`.
    pub fn lagrange_numerator(&self, r: u64) -> Result<ZpPoly> {
        self.position(r)?;
        Ok(lagrange_numerator(self.0.p, &self.0.index_set, r))
    }

    /// The scalar that normalizes the Lagrange numerator at `r` to one.
    pub fn lagrange_weight(&self, r: u64) -> Result<u64> {
        Ok(self.0.weights[self.position(r)?])
    }

    /// The idempotent attached to root `r`.
    pub fn idempotent(&self, r: u64) -> Result<RingElement> {
        let k = self.position(r)?;
        Ok(RingElement {
            ring: self.clone(),
            coeffs: self.0.idempotents[k].clone(),
        })
    }

    /// All idempotents in component order.
    pub fn idempotents(&self) -> Vec<RingElement> {
        self.0
            .index_set
            .iter()
            .map(|&r| self.idempotent(r).expect("roots come from the index set"))
            .collect()
    }

    /// Canonical element from ascending coefficients of length `p - 1`;
    /// entries are reduced mod p.
    pub fn element(&self, coeffs: &[u64]) -> Result<RingElement> {
        if coeffs.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: coeffs.len(),
            });
        }
        Ok(RingElement {
            ring: self.clone(),
            coeffs: coeffs.iter().map(|&c| self.0.p.reduce(c)).collect(),
        })
    }

    /// Element from an arbitrary polynomial in `u`, reduced mod g_s(u).
    pub fn element_from_poly(&self, poly: &ZpPoly) -> RingElement {
        assert_eq!(poly.prime(), self.0.p, "mixed moduli in element_from_poly");
        let reduced = poly.rem(&self.0.modulus).expect("monic modulus");
        let mut coeffs = reduced.coeffs().to_vec();
        coeffs.resize(self.dimension(), 0);
        RingElement {
            ring: self.clone(),
            coeffs,
        }
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            ring: self.clone(),
            coeffs: vec![0; self.dimension()],
        }
    }

    pub fn one(&self) -> RingElement {
        self.scalar(1)
    }

    /// The constant `c` as a ring element.
    pub fn scalar(&self, c: u64) -> RingElement {
        let mut coeffs = vec![0; self.dimension()];
        coeffs[0] = self.0.p.reduce(c);
        RingElement {
            ring: self.clone(),
            coeffs,
        }
    }

    /// Inverse of the component map: `sum values[k] * alpha_{index_set[k]}`.
    pub fn from_components(&self, values: &[u64]) -> Result<RingElement> {
        if values.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: values.len(),
            });
        }
        let p = self.0.p;
        let mut coeffs = vec![0; self.dimension()];
        for (v, alpha) in values.iter().zip(&self.0.idempotents) {
            for (acc, &a) in coeffs.iter_mut().zip(alpha) {
                *acc = p.add(*acc, p.mul(*v, a));
            }
        }
        Ok(RingElement {
            ring: self.clone(),
            coeffs,
        })
    }

    /// Iterates over all `p^(p-1)` elements in lexicographic coefficient
    /// order (constant coefficient fastest). Intended for small `p`.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        let dim = self.dimension();
        let p = self.p();
        let mut digits = vec![0u64; dim];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = RingElement {
                ring: self.clone(),
                coeffs: digits.clone(),
            };
            let mut k = 0;
            loop {
                if k == dim {
                    done = true;
                    break;
                }
                digits[k] += 1;
                if digits[k] < p {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            Some(out)
        })
    }
}

fn lagrange_numerator(p: Prime, index_set: &[u64], r: u64) -> ZpPoly {
    let others: Vec<u64> = index_set.iter().copied().filter(|&i| i != r).collect();
    ZpPoly::from_roots(p, &others)
}

/// A canonical residue class: exactly `p - 1` coefficients, each in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: Ring,
    coeffs: Vec<u64>,
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Ascending coefficients, always of length `p - 1`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// The element as a trimmed polynomial in `u`.
    pub fn to_poly(&self) -> ZpPoly {
        ZpPoly::new(self.ring.prime(), self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        assert_eq!(self.ring, other.ring, "mixed rings in add");
        let p = self.ring.prime();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        assert_eq!(self.ring, other.ring, "mixed rings in sub");
        let p = self.ring.prime();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| p.sub(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> RingElement {
        let p = self.ring.prime();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|&a| p.neg(a)).collect(),
        }
    }

    /// Product reduced mod g_s(u).
    pub fn mul(&self, other: &RingElement) -> RingElement {
        assert_eq!(self.ring, other.ring, "mixed rings in mul");
        let product = &self.to_poly() * &other.to_poly();
        self.ring.element_from_poly(&product)
    }

    pub fn scale(&self, c: u64) -> RingElement {
        let p = self.ring.prime();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|&a| p.mul(a, c)).collect(),
        }
    }

    /// Image under the component isomorphism: evaluation at each retained
    /// root, in component order.
    pub fn to_components(&self) -> ComponentVector {
        let poly = self.to_poly();
        ComponentVector {
            ring: self.ring.clone(),
            values: self
                .ring
                .index_set()
                .iter()
                .map(|&i| poly.eval(i))
                .collect(),
        }
    }

    /// Units are exactly the elements with no zero component.
    pub fn is_unit(&self) -> bool {
        self.to_components().values().iter().all(|&v| v != 0)
    }

    /// Multiplicative inverse via componentwise field inversion.
    pub fn invert(&self) -> Result<RingElement> {
        let comps = self.to_components();
        let zero_roots: Vec<u64> = self
            .ring
            .index_set()
            .iter()
            .zip(comps.values())
            .filter(|(_, &v)| v == 0)
            .map(|(&r, _)| r)
            .collect();
        if !zero_roots.is_empty() {
            return Err(Error::NotAUnit(zero_roots));
        }
        let p = self.ring.prime();
        let inverted: Vec<u64> = comps
            .values()
            .iter()
            .map(|&v| p.inv(v).expect("checked nonzero"))
            .collect();
        self.ring.from_components(&inverted)
    }
}

impl std::fmt::Display for RingElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::text::format_poly(&self.to_poly(), 'u'))
    }
}

/// Coordinates of an element in the component decomposition, ordered by
/// the ring's index set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentVector {
    ring: Ring,
    values: Vec<u64>,
}

impl ComponentVector {
    pub fn new(ring: &Ring, values: &[u64]) -> Result<ComponentVector> {
        if values.len() != ring.dimension() {
            return Err(Error::LengthMismatch {
                expected: ring.dimension(),
                got: values.len(),
            });
        }
        let p = ring.prime();
        Ok(ComponentVector {
            ring: ring.clone(),
            values: values.iter().map(|&v| p.reduce(v)).collect(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Component value at root `r`.
    pub fn value_at(&self, r: u64) -> Result<u64> {
        Ok(self.values[self.ring.position(r)?])
    }

    /// Reassembles the ring element these coordinates describe.
    pub fn to_element(&self) -> RingElement {
        self.ring
            .from_components(&self.values)
            .expect("length fixed at construction")
    }
}
