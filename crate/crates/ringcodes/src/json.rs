//! Serde schemas for the documented JSON interchange formats.
//!
//! Three self-describing payloads exist: ring matrices (polynomial-string
//! entries), component bundles (one integer matrix per retained root) and
//! cyclic generator sets (one `x`-polynomial per retained root). Every
//! payload carries `p`, `s` and `n`, so a file round-trips without
//! out-of-band context.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicGenerators;
use crate::error::{Error, Result};
use crate::matrix::{RingMatrix, ZpMatrix};
use crate::ring::Ring;
use crate::text;

/// A polynomial entry: either grammar text or an ascending coefficient
/// array.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyCell {
    Text(String),
    Coeffs(Vec<u64>),
}

/// Ring matrix payload: `{"p": .., "s": .., "n": .., "rows": [[..]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingMatrixJson {
    pub p: u64,
    pub s: u64,
    pub n: usize,
    pub rows: Vec<Vec<PolyCell>>,
}

impl RingMatrixJson {
    pub fn from_matrix(m: &RingMatrix) -> Self {
        let ring = m.ring();
        RingMatrixJson {
            p: ring.p(),
            s: ring.excluded_root(),
            n: m.cols(),
            rows: (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .map(|e| PolyCell::Text(e.to_string()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<RingMatrix> {
        let ring = Ring::new(self.p, self.s)?;
        let mut rows = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            if row.len() != self.n {
                return Err(Error::ShapeMismatch {
                    expected_rows: self.rows.len(),
                    expected_cols: self.n,
                    rows: self.rows.len(),
                    cols: row.len(),
                });
            }
            let mut entries = Vec::with_capacity(row.len());
            for cell in row {
                entries.push(match cell {
                    PolyCell::Text(t) => text::parse_element(t, &ring)?,
                    PolyCell::Coeffs(c) => {
                        ring.element_from_poly(&crate::poly::ZpPoly::new(ring.prime(), c.clone()))
                    }
                });
            }
            rows.push(entries);
        }
        RingMatrix::from_rows(&ring, rows)
    }
}

/// Component bundle payload:
/// `{"p": .., "s": .., "n": .., "components": {"0": [[..]], ..}}`,
/// keyed by retained root.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentBundleJson {
    pub p: u64,
    pub s: u64,
    pub n: usize,
    pub components: BTreeMap<u64, Vec<Vec<u64>>>,
}

impl ComponentBundleJson {
    pub fn from_parts(ring: &Ring, parts: &[ZpMatrix]) -> Self {
        let n = parts.first().map(|m| m.cols()).unwrap_or(0);
        ComponentBundleJson {
            p: ring.p(),
            s: ring.excluded_root(),
            n,
            components: ring
                .index_set()
                .iter()
                .zip(parts)
                .map(|(&root, m)| (root, m.row_vecs()))
                .collect(),
        }
    }

    /// The ring and its component matrices, in component order.
    pub fn to_parts(&self) -> Result<(Ring, Vec<ZpMatrix>)> {
        let ring = Ring::new(self.p, self.s)?;
        for &key in self.components.keys() {
            ring.position(key)?;
        }
        if self.components.len() != ring.dimension() {
            return Err(Error::WrongComponentCount {
                expected: ring.dimension(),
                got: self.components.len(),
            });
        }
        let mut parts = Vec::with_capacity(ring.dimension());
        for &root in ring.index_set() {
            let rows = &self.components[&root];
            for row in rows {
                if row.len() != self.n {
                    return Err(Error::ShapeMismatch {
                        expected_rows: rows.len(),
                        expected_cols: self.n,
                        rows: rows.len(),
                        cols: row.len(),
                    });
                }
            }
            parts.push(if rows.is_empty() {
                ZpMatrix::empty(ring.prime(), self.n)
            } else {
                ZpMatrix::from_rows(ring.prime(), rows)?
            });
        }
        Ok((ring, parts))
    }
}

/// Cyclic generator payload:
/// `{"p": .., "s": .., "n": .., "generators": {"0": "x-2", ..}}`,
/// keyed by retained root, polynomials in `x`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CyclicGeneratorsJson {
    pub p: u64,
    pub s: u64,
    pub n: usize,
    pub generators: BTreeMap<u64, String>,
}

impl CyclicGeneratorsJson {
    pub fn from_generators(gens: &CyclicGenerators) -> Self {
        let ring = gens.ring();
        CyclicGeneratorsJson {
            p: ring.p(),
            s: ring.excluded_root(),
            n: gens.n(),
            generators: ring
                .index_set()
                .iter()
                .zip(gens.generators())
                .map(|(&root, g)| (root, text::format_poly(g, 'x')))
                .collect(),
        }
    }

    pub fn to_generators(&self) -> Result<CyclicGenerators> {
        let ring = Ring::new(self.p, self.s)?;
        for &key in self.generators.keys() {
            ring.position(key)?;
        }
        if self.generators.len() != ring.dimension() {
            return Err(Error::WrongComponentCount {
                expected: ring.dimension(),
                got: self.generators.len(),
            });
        }
        let mut gens = Vec::with_capacity(ring.dimension());
        for &root in ring.index_set() {
            gens.push(text::parse_poly(
                &self.generators[&root],
                ring.prime(),
                'x',
            )?);
        }
        CyclicGenerators::new(&ring, self.n, gens)
    }
}
