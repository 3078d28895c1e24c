//! Dense univariate polynomials over Z_p.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::zp::Prime;

/// Polynomial with coefficients in Z_p, stored in ascending degree.
///
/// The representation is canonical: every coefficient lies in [0, p) and
/// the highest stored coefficient is nonzero. The zero polynomial is the
/// empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZpPoly {
    p: Prime,
    coeffs: Vec<u64>,
}

impl ZpPoly {
    /// Builds a polynomial from ascending coefficients, reducing mod p and
    /// trimming trailing zeros.
    pub fn new(p: Prime, coeffs: impl Into<Vec<u64>>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into();
        for c in &mut coeffs {
            *c = p.reduce(*c);
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ZpPoly { p, coeffs }
    }

    /// Same as [`ZpPoly::new`] but from signed coefficients.
    pub fn from_signed(p: Prime, coeffs: &[i64]) -> Self {
        ZpPoly::new(
            p,
            coeffs
                .iter()
                .map(|&c| p.reduce_signed(c as i128))
                .collect::<Vec<_>>(),
        )
    }

    pub fn zero(p: Prime) -> Self {
        ZpPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: Prime) -> Self {
        ZpPoly::constant(p, 1)
    }

    pub fn constant(p: Prime, c: u64) -> Self {
        ZpPoly::new(p, vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(p: Prime, c: u64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        ZpPoly::new(p, coeffs)
    }

    /// Product of linear factors `(x - r)` over the given roots.
    pub fn from_roots(p: Prime, roots: &[u64]) -> Self {
        let mut acc = ZpPoly::one(p);
        for &r in roots {
            let factor = ZpPoly::new(p, vec![p.neg(r), 1]);
            acc = &acc * &factor;
        }
        acc
    }

    /// The polynomial `x^n - 1`.
    pub fn xn_minus_1(p: Prime, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = p.neg(1);
        coeffs[n] = 1;
        ZpPoly::new(p, coeffs)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the stored degree).
    pub fn coeff(&self, j: usize) -> u64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(1)
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn to_monic(&self) -> ZpPoly {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(lead) => self.scale(self.p.inv(lead).expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: u64) -> ZpPoly {
        ZpPoly::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&a| self.p.mul(a, c))
                .collect::<Vec<_>>(),
        )
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = self.p.add(self.p.mul(acc, x), c);
        }
        acc
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn divmod(&self, divisor: &ZpPoly) -> Result<(ZpPoly, ZpPoly)> {
        assert_eq!(self.p, divisor.p, "mixed moduli in divmod");
        let Some(div_deg) = divisor.degree() else {
            return Err(Error::DivisionByZeroPoly);
        };
        let lead_inv = self
            .p
            .inv(divisor.coeffs[div_deg])
            .expect("canonical leading coefficient is nonzero");

        let mut rem = self.coeffs.clone();
        if rem.len() <= div_deg {
            return Ok((ZpPoly::zero(self.p), self.clone()));
        }
        let mut quot = vec![0; rem.len() - div_deg];
        for k in (div_deg..rem.len()).rev() {
            let factor = self.p.mul(rem[k], lead_inv);
            quot[k - div_deg] = factor;
            if factor == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = k - div_deg + j;
                rem[idx] = self.p.sub(rem[idx], self.p.mul(factor, d));
            }
        }
        Ok((ZpPoly::new(self.p, quot), ZpPoly::new(self.p, rem)))
    }

    /// Remainder of division by `divisor`.
    pub fn rem(&self, divisor: &ZpPoly) -> Result<ZpPoly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Repeated-squaring power.
    pub fn pow(&self, mut exp: u32) -> ZpPoly {
        let mut base = self.clone();
        let mut acc = ZpPoly::one(self.p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl Add for &ZpPoly {
    type Output = ZpPoly;

    fn add(self, other: &ZpPoly) -> ZpPoly {
        assert_eq!(self.p, other.p, "mixed moduli in add");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs: Vec<u64> = (0..n)
            .map(|j| self.p.add(self.coeff(j), other.coeff(j)))
            .collect();
        ZpPoly::new(self.p, coeffs)
    }
}

impl Sub for &ZpPoly {
    type Output = ZpPoly;

    fn sub(self, other: &ZpPoly) -> ZpPoly {
        assert_eq!(self.p, other.p, "mixed moduli in sub");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs: Vec<u64> = (0..n)
            .map(|j| self.p.sub(self.coeff(j), other.coeff(j)))
            .collect();
        ZpPoly::new(self.p, coeffs)
    }
}

impl Mul for &ZpPoly {
    type Output = ZpPoly;

    fn mul(self, other: &ZpPoly) -> ZpPoly {
        assert_eq!(self.p, other.p, "mixed moduli in mul");
        if self.is_zero() || other.is_zero() {
            return ZpPoly::zero(self.p);
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.p.add(coeffs[i + j], self.p.mul(a, b));
            }
        }
        ZpPoly::new(self.p, coeffs)
    }
}

impl Neg for &ZpPoly {
    type Output = ZpPoly;

    fn neg(self) -> ZpPoly {
        ZpPoly::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&c| self.p.neg(c))
                .collect::<Vec<_>>(),
        )
    }
}
