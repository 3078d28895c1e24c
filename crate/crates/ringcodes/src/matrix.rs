//! Matrices over Z_p and over the quotient ring.

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::zp::Prime;

/// Dense row-major matrix over Z_p. Zero rows are allowed (the generator
/// of a zero code is an empty matrix); zero columns are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ZpMatrix {
    pub fn new(p: Prime, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if cols == 0 || data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected_rows: rows,
                expected_cols: cols,
                rows: data.len().checked_div(cols).unwrap_or(0),
                cols,
            });
        }
        let data = data.into_iter().map(|v| p.reduce(v)).collect();
        Ok(ZpMatrix {
            p,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(p: Prime, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch {
                    expected_rows: rows.len(),
                    expected_cols: cols,
                    rows: rows.len(),
                    cols: r.len(),
                });
            }
        }
        ZpMatrix::new(p, rows.len(), cols, rows.concat())
    }

    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        ZpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Empty matrix with zero rows; the generator of a zero code.
    pub fn empty(p: Prime, cols: usize) -> Self {
        ZpMatrix {
            p,
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = ZpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = self.p.reduce(v);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> ZpMatrix {
        let mut out = ZpMatrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn neg(&self) -> ZpMatrix {
        ZpMatrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| self.p.neg(v)).collect(),
        }
    }

    pub fn matmul(&self, other: &ZpMatrix) -> ZpMatrix {
        assert_eq!(self.p, other.p, "mixed moduli in matmul");
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = ZpMatrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for (j, &b) in other.row(k).iter().enumerate() {
                    let v = self.p.add(out.get(i, j), self.p.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// `message * self`, the usual row-combination encoding.
    pub fn encode_row(&self, message: &[u64]) -> Result<Vec<u64>> {
        if message.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: message.len(),
            });
        }
        let mut out = vec![0; self.cols];
        for (&m, i) in message.iter().zip(0..self.rows) {
            if m == 0 {
                continue;
            }
            for (acc, &g) in out.iter_mut().zip(self.row(i)) {
                *acc = self.p.add(*acc, self.p.mul(m, g));
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form; pivots chosen as the first nonzero entry
    /// scanning left to right, top to bottom, so the result is unique and
    /// the procedure deterministic.
    pub fn row_reduced(&self) -> ZpMatrix {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m.p.inv(m.get(pivot_row, col)).expect("pivot nonzero");
            m.scale_row(pivot_row, inv);
            for i in 0..m.rows {
                if i != pivot_row {
                    let factor = m.get(i, col);
                    if factor != 0 {
                        m.subtract_scaled_row(i, pivot_row, factor);
                    }
                }
            }
            pivot_row += 1;
        }
        m
    }

    pub fn rank(&self) -> usize {
        let r = self.row_reduced();
        (0..r.rows)
            .filter(|&i| r.row(i).iter().any(|&v| v != 0))
            .count()
    }

    /// The nonzero rows of the reduced row-echelon form: a canonical basis
    /// of the row space.
    pub fn row_basis(&self) -> ZpMatrix {
        let r = self.row_reduced();
        let rows: Vec<Vec<u64>> = (0..r.rows)
            .map(|i| r.row(i).to_vec())
            .filter(|row| row.iter().any(|&v| v != 0))
            .collect();
        if rows.is_empty() {
            ZpMatrix::empty(self.p, self.cols)
        } else {
            ZpMatrix::from_rows(self.p, &rows).expect("basis rows share the width")
        }
    }

    /// Membership of `word` in the row space, decided by eliminating the
    /// word against the reduced basis.
    pub fn row_space_contains(&self, word: &[u64]) -> bool {
        assert_eq!(word.len(), self.cols, "word length must match columns");
        let basis = self.row_basis();
        let mut w: Vec<u64> = word.iter().map(|&v| self.p.reduce(v)).collect();
        for i in 0..basis.rows {
            let lead = basis
                .row(i)
                .iter()
                .position(|&v| v != 0)
                .expect("basis rows are nonzero");
            let factor = w[lead];
            if factor != 0 {
                for (acc, &b) in w.iter_mut().zip(basis.row(i)) {
                    *acc = self.p.sub(*acc, self.p.mul(factor, b));
                }
            }
        }
        w.iter().all(|&v| v == 0)
    }

    /// Row-reduces into `(I_k | M)` shape, permuting columns when the
    /// pivot columns are not the leading ones. Returns the permuted matrix
    /// together with the applied permutation (`perm[j]` is the original
    /// column now at position `j`). Fails when the rows are dependent.
    pub fn systematic_form(&self) -> Result<SystematicForm> {
        let reduced = self.row_reduced();
        let rank = reduced.rank();
        if rank < self.rows {
            return Err(Error::RankDeficient {
                rank,
                rows: self.rows,
            });
        }
        let pivots: Vec<usize> = (0..reduced.rows)
            .map(|i| {
                reduced
                    .row(i)
                    .iter()
                    .position(|&v| v != 0)
                    .expect("full rank rows are nonzero")
            })
            .collect();
        let mut perm: Vec<usize> = pivots.clone();
        perm.extend((0..self.cols).filter(|j| !pivots.contains(j)));
        let matrix = reduced.permute_columns(&perm);
        Ok(SystematicForm { matrix, perm })
    }

    /// Parity-check matrix `(-M^T | I_{n-k})` of a matrix already in
    /// systematic form `(I_k | M)`.
    pub fn parity_check(&self) -> Result<ZpMatrix> {
        let k = self.rows;
        let n = self.cols;
        if k > n {
            return Err(Error::NotSystematic);
        }
        for i in 0..k {
            for j in 0..k {
                if self.get(i, j) != u64::from(i == j) {
                    return Err(Error::NotSystematic);
                }
            }
        }
        let mut h = ZpMatrix::zeros(self.p, n - k, n);
        for r in 0..n - k {
            for c in 0..k {
                h.set(r, c, self.p.neg(self.get(c, k + r)));
            }
            h.set(r, k + r, 1);
        }
        Ok(h)
    }

    /// Reorders columns: output column `j` is input column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> ZpMatrix {
        assert_eq!(perm.len(), self.cols, "permutation must cover all columns");
        let mut out = ZpMatrix::zeros(self.p, self.rows, self.cols);
        for i in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                out.set(i, j, self.get(i, src));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: u64) {
        for j in 0..self.cols {
            let v = self.p.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    fn subtract_scaled_row(&mut self, target: usize, source: usize, factor: u64) {
        for j in 0..self.cols {
            let v = self
                .p
                .sub(self.get(target, j), self.p.mul(factor, self.get(source, j)));
            self.set(target, j, v);
        }
    }
}

/// Result of [`ZpMatrix::systematic_form`]: the `(I_k | M)` matrix in the
/// permuted coordinates and the column permutation that got there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystematicForm {
    pub matrix: ZpMatrix,
    /// `perm[j]` = original column index now at position `j`.
    pub perm: Vec<usize>,
}

impl SystematicForm {
    /// Whether a genuine column permutation was needed.
    pub fn is_permuted(&self) -> bool {
        self.perm.iter().enumerate().any(|(j, &src)| j != src)
    }

    /// The `M` block of `(I_k | M)`; `None` when there are no parity
    /// columns (`k = n`, the full space).
    pub fn parity_block(&self) -> Option<ZpMatrix> {
        let k = self.matrix.rows();
        let n = self.matrix.cols();
        if n == k {
            return None;
        }
        let rows: Vec<Vec<u64>> = (0..k).map(|i| self.matrix.row(i)[k..n].to_vec()).collect();
        if rows.is_empty() {
            Some(ZpMatrix::empty(self.matrix.prime(), n - k))
        } else {
            Some(ZpMatrix::from_rows(self.matrix.prime(), &rows).expect("uniform widths"))
        }
    }

    /// Undoes the column permutation on a matrix expressed in the permuted
    /// coordinates (used to map parity checks back to code coordinates).
    pub fn unpermute(&self, m: &ZpMatrix) -> ZpMatrix {
        let mut inverse = vec![0; self.perm.len()];
        for (j, &src) in self.perm.iter().enumerate() {
            inverse[src] = j;
        }
        m.permute_columns(&inverse)
    }
}

/// Matrix with entries in the quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl RingMatrix {
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        if cols == 0 {
            return Err(Error::ShapeMismatch {
                expected_rows: rows.len(),
                expected_cols: 1,
                rows: rows.len(),
                cols: 0,
            });
        }
        for r in &rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch {
                    expected_rows: rows.len(),
                    expected_cols: cols,
                    rows: rows.len(),
                    cols: r.len(),
                });
            }
            for e in r {
                assert_eq!(e.ring(), ring, "entry from a different ring");
            }
        }
        let n = rows.len();
        Ok(RingMatrix {
            ring: ring.clone(),
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        RingMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        assert_eq!(v.ring(), &self.ring, "entry from a different ring");
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RingElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Entrywise split into the `p - 1` component matrices over Z_p, in
    /// component order.
    pub fn decompose(&self) -> Vec<ZpMatrix> {
        let dim = self.ring.dimension();
        let mut parts = vec![ZpMatrix::zeros(self.ring.prime(), self.rows, self.cols); dim];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let comps = self.get(i, j).to_components();
                for (k, &v) in comps.values().iter().enumerate() {
                    parts[k].set(i, j, v);
                }
            }
        }
        parts
    }

    /// Entrywise idempotent combination of `p - 1` component matrices of
    /// identical shape; the exact inverse of [`RingMatrix::decompose`].
    pub fn compose(ring: &Ring, parts: &[ZpMatrix]) -> Result<RingMatrix> {
        if parts.len() != ring.dimension() {
            return Err(Error::WrongComponentCount {
                expected: ring.dimension(),
                got: parts.len(),
            });
        }
        let first = &parts[0];
        for part in parts {
            if part.prime() != ring.prime() {
                return Err(Error::ModulusMismatch(
                    ring.prime().get(),
                    part.prime().get(),
                ));
            }
            if part.rows() != first.rows() || part.cols() != first.cols() {
                return Err(Error::ShapeMismatch {
                    expected_rows: first.rows(),
                    expected_cols: first.cols(),
                    rows: part.rows(),
                    cols: part.cols(),
                });
            }
        }
        let mut out = RingMatrix::zeros(ring, first.rows(), first.cols());
        let mut values = vec![0; ring.dimension()];
        for i in 0..first.rows() {
            for j in 0..first.cols() {
                for (k, part) in parts.iter().enumerate() {
                    values[k] = part.get(i, j);
                }
                out.set(i, j, ring.from_components(&values)?);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = RingMatrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn matmul(&self, other: &RingMatrix) -> RingMatrix {
        assert_eq!(self.ring, other.ring, "mixed rings in matmul");
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = RingMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}
