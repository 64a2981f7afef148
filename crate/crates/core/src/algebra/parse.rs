//! Text format for polynomials.
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := ident ('^' uint)?
//! coeff  := int ('/' uint)?
//! ```
//!
//! A leading sign on the first term is accepted; whitespace is ignored.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::{Monomial, MonomialOrder, EXPONENT_CAP};
use super::polynomial::{Polynomial, Ring};
use super::scalar::{abs, is_negative, Field};
use super::AlgebraError;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Syntax { offset: self.pos, message: message.into() }
    }

    fn uint(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as integer"))
    }

    fn ident(&mut self) -> Result<&'a str, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return Err(self.err("expected identifier")),
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier"))
    }
}

/// Parse a polynomial over `ring`.
pub fn parse_polynomial<F: Field>(ring: &Arc<Ring<F>>, text: &str) -> Result<Polynomial<F>, AlgebraError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let n = ring.nvars();
    let mut terms: Vec<(Monomial, F)> = Vec::new();
    let mut negate = false;
    match p.peek() {
        Some(b'-') => {
            negate = true;
            p.pos += 1;
        }
        Some(b'+') => p.pos += 1,
        None => return Err(p.err("empty polynomial")),
        _ => {}
    }
    loop {
        let mut coeff = (BigInt::one(), BigInt::one());
        let mut exps = vec![0u32; n];
        let mut need_factor = true;
        if matches!(p.peek(), Some(c) if c.is_ascii_digit()) {
            let num = p.uint()?;
            let mut den = BigInt::one();
            if p.peek() == Some(b'/') {
                p.pos += 1;
                den = p.uint()?;
            }
            coeff = (num, den);
            need_factor = false;
            if p.peek() == Some(b'*') {
                p.pos += 1;
                need_factor = true;
            }
        }
        if need_factor {
            loop {
                let at = p.pos;
                let name = p.ident()?;
                let idx = ring.var_index(name).map_err(|_| AlgebraError::UnknownVariable(name.to_string()))?;
                let mut e = 1u32;
                if p.peek() == Some(b'^') {
                    p.pos += 1;
                    let v = p.uint()?;
                    e = u32::try_from(&v).ok().filter(|&x| x <= EXPONENT_CAP).ok_or_else(|| AlgebraError::Syntax {
                        offset: at,
                        message: format!("exponent {v} exceeds cap {EXPONENT_CAP}"),
                    })?;
                }
                exps[idx] += e;
                if exps[idx] > EXPONENT_CAP {
                    return Err(AlgebraError::ExponentCap(exps[idx]));
                }
                if p.peek() == Some(b'*') {
                    p.pos += 1;
                } else {
                    break;
                }
            }
        }
        let (mut num, den) = coeff;
        if negate {
            num = -num;
        }
        let c = F::from_ratio(ring.domain(), &num, &den)
            .ok_or_else(|| AlgebraError::Syntax { offset: p.pos, message: "denominator vanishes in field".into() })?;
        terms.push((Monomial::from_exponents(&exps)?, c));
        match p.peek() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(_) => return Err(p.err("expected '+', '-' or end of input")),
        }
        p.pos += 1;
    }
    Ok(Polynomial::from_terms(ring, MonomialOrder::default(), terms))
}

/// Canonical text form: terms in the polynomial's order, `0` for zero.
pub fn format_polynomial<F: Field>(f: &Polynomial<F>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let vars = f.ring().vars();
    let mut out = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let (num, den) = c.to_ratio();
        let neg = is_negative(&num);
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let num = abs(&num);
        let unit = num.is_one() && den.is_one();
        let mut pieces: Vec<String> = Vec::new();
        if !unit || m.is_one() {
            if den.is_one() {
                pieces.push(num.to_string());
            } else {
                pieces.push(format!("{num}/{den}"));
            }
        }
        for (i, e) in m.exponents().enumerate() {
            match e {
                0 => {}
                1 => pieces.push(vars[i].clone()),
                _ => pieces.push(format!("{}^{}", vars[i], e)),
            }
        }
        out.push_str(&pieces.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{Fp, Rational};
    use crate::algebra::RingExt;
    use proptest::prelude::*;

    fn ring() -> Arc<Ring<Rational>> {
        Ring::new(["x0", "y1", "z_2"], ())
    }

    #[test]
    fn zero_and_constant() {
        let r = ring();
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
        assert_eq!(format_polynomial(&parse_polynomial(&r, " 0 ").unwrap()), "0");
        assert_eq!(format_polynomial(&parse_polynomial(&r, "-7/14").unwrap()), "-1/2");
    }

    #[test]
    fn two_term_example() {
        let r = ring();
        let f = parse_polynomial(&r, "3*x0^2*y1 - 5").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(format_polynomial(&f), "3*x0^2*y1 - 5");
    }

    #[test]
    fn repeated_factors_merge() {
        let r = ring();
        assert_eq!(parse_polynomial(&r, "x0*x0*y1").unwrap(), parse_polynomial(&r, "x0^2 * y1").unwrap());
        assert_eq!(parse_polynomial(&r, "x0 - x0").unwrap(), r.zero());
    }

    #[test]
    fn errors_carry_offsets() {
        let r = ring();
        match parse_polynomial(&r, "x0 + * y1") {
            Err(AlgebraError::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial(&r, "x0 + w"), Err(AlgebraError::UnknownVariable(v)) if v == "w"));
        assert!(parse_polynomial(&r, "").is_err());
        assert!(parse_polynomial(&r, "x0^").is_err());
        assert!(parse_polynomial(&r, "x0 y1").is_err());
        assert!(parse_polynomial(&r, "x0^99").is_err());
    }

    #[test]
    fn prime_field_denominators() {
        let r: Arc<Ring<Fp>> = Ring::new(["x"], 7);
        assert_eq!(parse_polynomial(&r, "1/2*x").unwrap(), parse_polynomial(&r, "4*x").unwrap());
        assert!(parse_polynomial(&r, "1/7*x").is_err());
    }

    fn arb_terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u32..5, 3), -40i64..40, 1i64..9), 0..10)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn parse_format_round_trip(spec in arb_terms()) {
            let r = ring();
            let terms = spec
                .iter()
                .map(|(e, n, d)| (Monomial::from_exponents(e).unwrap(), Rational::new((*n).into(), (*d).into()).unwrap()))
                .collect();
            let f = Polynomial::from_terms(&r, MonomialOrder::GrevLex, terms);
            let text = format_polynomial(&f);
            prop_assert_eq!(parse_polynomial(&r, &text).unwrap(), f);
        }

        #[test]
        fn parse_format_round_trip_mod_p(spec in arb_terms()) {
            let r: Arc<Ring<Fp>> = Ring::new(["a", "b", "c"], 2_147_483_647);
            let terms = spec
                .iter()
                .map(|(e, n, d)| (Monomial::from_exponents(e).unwrap(), Fp::from_signed(n * 1_000_003 / d, 2_147_483_647)))
                .collect();
            let f = Polynomial::from_terms(&r, MonomialOrder::GrevLex, terms);
            prop_assert_eq!(parse_polynomial(&r, &format_polynomial(&f)).unwrap(), f);
        }
    }
}
