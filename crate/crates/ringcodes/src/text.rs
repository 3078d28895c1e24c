//! Polynomial text grammar: parsing and canonical pretty-printing.
//!
//! Input accepts a '+'/'-' separated list of terms `c`, `c*v`, `v`,
//! `c*v^e`, `v^e` or `cv^e` (the `*` is optional), where `v` is the
//! expected variable letter. Whitespace is ignored, minus signs and
//! coefficients at or above `p` are accepted and normalized. Output is
//! canonical: descending degree, zero terms omitted, unit coefficients
//! omitted before the variable, and `0` for the zero polynomial.

use crate::error::{Error, Result};
use crate::poly::ZpPoly;
use crate::ring::{Ring, RingElement};
use crate::zp::Prime;

/// Exponents above this are rejected up front; canonical inputs never get
/// anywhere close (element degrees stay below `p`, generators below `n`).
const MAX_EXPONENT: u64 = 4096;

/// Parses a polynomial over Z_p written in variable `var`.
pub fn parse_poly(input: &str, p: Prime, var: char) -> Result<ZpPoly> {
    Parser {
        bytes: input.as_bytes(),
        pos: 0,
        p,
        var,
    }
    .parse()
}

/// Parses a residue class of `ring` written as a polynomial in `u`.
pub fn parse_element(input: &str, ring: &Ring) -> Result<RingElement> {
    let poly = parse_poly(input, ring.prime(), 'u')?;
    Ok(ring.element_from_poly(&poly))
}

/// Canonical text form of a polynomial in variable `var`.
pub fn format_poly(poly: &ZpPoly, var: char) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (e, &c) in poly.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (e, c) {
            (0, _) => format!("{c}"),
            (1, 1) => format!("{var}"),
            (1, _) => format!("{c}{var}"),
            (_, 1) => format!("{var}^{e}"),
            (_, _) => format!("{c}{var}^{e}"),
        };
        terms.push(term);
    }
    terms.join("+")
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    p: Prime,
    var: char,
}

struct Literal {
    start: usize,
    raw: Option<u64>,
}

impl Parser<'_> {
    fn parse(mut self) -> Result<ZpPoly> {
        let mut acc: Vec<u64> = Vec::new();
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return Err(self.err("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.pos == self.bytes.len() {
                break;
            }
            let negative = match self.bytes[self.pos] {
                b'+' if !first => {
                    self.pos += 1;
                    false
                }
                b'-' => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                other => {
                    return Err(self.err(&format!(
                        "expected '+' or '-' between terms, found {:?}",
                        other as char
                    )))
                }
            };
            first = false;
            let (coeff, exp) = self.term()?;
            let coeff = if negative { self.p.neg(coeff) } else { coeff };
            if acc.len() <= exp {
                acc.resize(exp + 1, 0);
            }
            acc[exp] = self.p.add(acc[exp], coeff);
        }
        Ok(ZpPoly::new(self.p, acc))
    }

    /// One term: returns (coefficient, exponent).
    fn term(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let mut coeff: Option<u64> = None;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let lit = self.number();
            let Some(raw) = lit.raw else {
                return Err(Error::CoefficientOutOfRange {
                    position: lit.start,
                });
            };
            coeff = Some(self.p.reduce(raw));
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if !self.peek_is_var() {
                    return Err(self.err(&format!("expected '{}' after '*'", self.var)));
                }
            }
        }
        if self.peek_is_var() {
            self.pos += self.var.len_utf8();
            self.skip_ws();
            let exp = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    return Err(self.err("expected exponent digits after '^'"));
                }
                let lit = self.number();
                match lit.raw {
                    Some(0) => return Err(self.err("exponent must be at least 1")),
                    Some(e) if e <= MAX_EXPONENT => e as usize,
                    _ => return Err(self.err("exponent too large")),
                }
            } else {
                1
            };
            Ok((coeff.unwrap_or(1), exp))
        } else if let Some(c) = coeff {
            Ok((c, 0))
        } else {
            self.pos = start;
            Err(self.err(&format!("expected a coefficient or '{}'", self.var)))
        }
    }

    /// Decimal literal; `raw` is `None` when the digits overflow u64.
    fn number(&mut self) -> Literal {
        let start = self.pos;
        let mut raw: Option<u64> = Some(0);
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            let d = (b - b'0') as u64;
            raw = raw
                .and_then(|v| v.checked_mul(10))
                .and_then(|v| v.checked_add(d));
            self.pos += 1;
        }
        Literal { start, raw }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn peek_is_var(&self) -> bool {
        self.bytes[self.pos..]
            .iter()
            .next()
            .is_some_and(|&b| b as char == self.var)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, message: &str) -> Error {
        Error::SyntaxError {
            position: self.pos,
            message: message.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    #[test]
    fn parses_the_idempotent_expansion() {
        let f = parse_poly("4u^3+u^2+4u+1", p5(), 'u').unwrap();
        assert_eq!(f.coeffs(), &[1, 4, 1, 4]);
    }

    #[test]
    fn parses_zero_and_constants() {
        assert!(parse_poly("0", p5(), 'u').unwrap().is_zero());
        assert_eq!(parse_poly("7", p5(), 'u').unwrap().coeffs(), &[2]);
    }

    #[test]
    fn normalizes_minus_signs() {
        let f = parse_poly("x-2", p5(), 'x').unwrap();
        assert_eq!(f.coeffs(), &[3, 1]);
        let g = parse_poly("-x+1", p5(), 'x').unwrap();
        assert_eq!(g.coeffs(), &[1, 4]);
    }

    #[test]
    fn accepts_stars_whitespace_and_large_coefficients() {
        let f = parse_poly(" 3 * u^2 + 12u + 6 ", p5(), 'u').unwrap();
        assert_eq!(f.coeffs(), &[1, 2, 3]);
        let g = parse_poly("u ^ 2", p5(), 'u').unwrap();
        assert_eq!(g.coeffs(), &[0, 0, 1]);
    }

    #[test]
    fn merges_repeated_degrees() {
        let f = parse_poly("u+u+u^2-u^2", p5(), 'u').unwrap();
        assert_eq!(f.coeffs(), &[0, 2]);
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "+", "u^0", "u^", "2*", "y+1", "3u^9999999", "2 3"] {
            let e = parse_poly(bad, p5(), 'u').unwrap_err();
            assert!(matches!(e, Error::SyntaxError { .. }), "{bad:?} gave {e:?}");
        }
    }

    #[test]
    fn oversized_coefficient_literal_is_rejected() {
        let e = parse_poly("99999999999999999999999999u", p5(), 'u').unwrap_err();
        assert_eq!(e, Error::CoefficientOutOfRange { position: 0 });
    }

    #[test]
    fn syntax_error_carries_position() {
        match parse_poly("4u^3?1", p5(), 'u').unwrap_err() {
            Error::SyntaxError { position, .. } => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn formats_canonically() {
        let f = ZpPoly::new(p5(), vec![1, 4, 1, 4]);
        assert_eq!(format_poly(&f, 'u'), "4u^3+u^2+4u+1");
        assert_eq!(format_poly(&ZpPoly::zero(p5()), 'u'), "0");
        assert_eq!(format_poly(&ZpPoly::new(p5(), vec![0, 1]), 'x'), "x");
        assert_eq!(format_poly(&ZpPoly::new(p5(), vec![0, 0, 3]), 'x'), "3x^2");
    }

    #[test]
    fn format_then_parse_is_identity() {
        let polys = [
            ZpPoly::new(p5(), vec![2, 0, 0, 1]),
            ZpPoly::new(p5(), vec![0, 1, 2, 3, 4]),
            ZpPoly::one(p5()),
            ZpPoly::zero(p5()),
        ];
        for f in polys {
            let text = format_poly(&f, 'u');
            assert_eq!(parse_poly(&text, p5(), 'u').unwrap(), f);
        }
    }
}
