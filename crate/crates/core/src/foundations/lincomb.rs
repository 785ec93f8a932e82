use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::text::split_signed_terms;

/// Exact scalar: an arbitrary-precision, always-reduced rational.
pub type Coefficient = BigRational;

pub fn coeff(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `7`, `-3` or `2/5`.
pub fn parse_coefficient(text: &str) -> Result<Coefficient> {
    let text = text.trim();
    let bad = || Error::parse(0, format!("invalid coefficient `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// A formal linear combination over the basis `B`. Zero coefficients are
/// never stored, so structural equality is equality of vectors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Coefficient>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(coeff(1), b)
    }

    pub fn term(c: Coefficient, b: B) -> Self {
        let mut out = Self::zero();
        out.add_term(c, b);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: &B) -> Coefficient {
        self.terms.get(b).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> Coefficient {
        self.terms.values().fold(Coefficient::zero(), |acc, c| acc + c)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Coefficient> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, c: Coefficient, b: B) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(c.clone(), b.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&coeff(-1)))
    }

    pub fn scale(&self, k: &Coefficient) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c * k)).collect(),
        }
    }

    /// Linear extension of a basis map; images that collide are summed.
    pub fn map<B2: Ord + Clone>(&self, f: impl Fn(&B) -> B2) -> LinComb<B2> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(c.clone(), f(b));
        }
        out
    }

    pub fn try_map<B2: Ord + Clone>(&self, f: impl Fn(&B) -> Result<B2>) -> Result<LinComb<B2>> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(c.clone(), f(b)?);
        }
        Ok(out)
    }

    /// Linear extension of `f: B -> LinComb<B2>`.
    pub fn flat_map<B2: Ord + Clone>(&self, f: impl Fn(&B) -> LinComb<B2>) -> LinComb<B2> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (b2, c2) in f(b).terms {
                out.add_term(c * c2, b2);
            }
        }
        out
    }

    pub fn try_flat_map<B2: Ord + Clone>(&self, f: impl Fn(&B) -> Result<LinComb<B2>>) -> Result<LinComb<B2>> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (b2, c2) in f(b)?.terms {
                out.add_term(c * c2, b2);
            }
        }
        Ok(out)
    }

    /// Parses the text produced by `Display`, delegating basis elements to `parse`.
    pub fn parse_with(text: &str, parse: impl Fn(&str) -> Result<B>) -> Result<Self> {
        let trimmed = text.trim();
        let mut out = Self::zero();
        if trimmed == "0" {
            return Ok(out);
        }
        for (offset, negative, piece) in split_signed_terms(trimmed)? {
            let (c, body) = split_coefficient(piece).map_err(|e| shift(e, offset))?;
            let c = if negative { -c } else { c };
            let b = parse(body).map_err(|e| shift(e, offset))?;
            out.add_term(c, b);
        }
        Ok(out)
    }
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos: pos + offset,
            msg,
        },
        other => other,
    }
}

/// Splits an optional leading `coefficient*` from a term.
fn split_coefficient(piece: &str) -> Result<(Coefficient, &str)> {
    if let Some((head, body)) = piece.split_once('*') {
        let head = head.trim();
        if !head.is_empty() && head.chars().all(|c| c.is_ascii_digit() || c == '/' || c.is_whitespace()) {
            return Ok((parse_coefficient(head)?, body.trim()));
        }
    }
    Ok((coeff(1), piece))
}

impl<B: Ord + Clone> FromIterator<(Coefficient, B)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (Coefficient, B)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (c, b) in iter {
            out.add_term(c, b);
        }
        out
    }
}

impl<B: Ord + Clone> FromIterator<B> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = B>>(iter: I) -> Self {
        iter.into_iter().map(|b| (coeff(1), b)).collect()
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(s: &str) -> Result<String> {
        if crate::foundations::label::is_atom(s) {
            Ok(s.to_owned())
        } else {
            Err(Error::parse(0, format!("bad word `{s}`")))
        }
    }

    #[test]
    fn cancellation_gives_zero() {
        let t = LinComb::term(coeff(2), "t".to_string());
        let sum = t.add(&LinComb::term(coeff(-2), "t".to_string()));
        assert!(sum.is_zero());
        assert_eq!(sum.to_string(), "0");
    }

    #[test]
    fn scaling_by_zero() {
        let x: LinComb<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        assert!(x.scale(&coeff(0)).is_zero());
    }

    #[test]
    fn flat_map_is_bilinear() {
        let x: LinComb<String> = ["p", "q"].iter().map(|s| s.to_string()).collect();
        let y = x.flat_map(|b| (1..=3).map(|i| format!("{b}{i}")).collect());
        assert_eq!(y.len(), 6);
        assert_eq!(y.total(), coeff(6));
    }

    #[test]
    fn display_and_parse() {
        let x: LinComb<String> = [
            (coeff(1), "a".to_string()),
            (coeff(-2), "b".to_string()),
            (BigRational::new(3.into(), 4.into()), "c".to_string()),
        ]
        .into_iter()
        .collect();
        assert_eq!(x.to_string(), "a - 2*b + 3/4*c");
        assert_eq!(LinComb::parse_with(&x.to_string(), word).unwrap(), x);
        assert_eq!(LinComb::parse_with("-a + a", word).unwrap(), LinComb::zero());
    }

    #[test]
    fn parse_errors() {
        assert!(LinComb::parse_with("a + ", word).is_err());
        assert!(LinComb::parse_with("a + - b", word).is_err());
        assert!(LinComb::parse_with("1/0*a", word).is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(terms in prop::collection::vec((-5i64..=5, 1i64..=4, "[a-d][0-9]?"), 0..6)) {
            let x: LinComb<String> = terms
                .into_iter()
                .map(|(n, d, b)| (BigRational::new(n.into(), d.into()), b))
                .collect();
            let back = LinComb::parse_with(&x.to_string(), word).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn addition_is_commutative_with_inverse(
            a in prop::collection::vec((-3i64..=3, "[a-c]"), 0..5),
            b in prop::collection::vec((-3i64..=3, "[a-c]"), 0..5),
        ) {
            let x: LinComb<String> = a.into_iter().map(|(n, s)| (coeff(n), s)).collect();
            let y: LinComb<String> = b.into_iter().map(|(n, s)| (coeff(n), s)).collect();
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert!(x.add(&y).sub(&y) == x);
        }
    }
}
