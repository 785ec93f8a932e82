use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An atom indexing species values.
///
/// Labels order numerals before words. Two numerals compare by numeric value
/// (so `2 < 10`), two words compare lexicographically. This order is used for
/// every canonical form in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label(String);

impl Label {
    /// Builds a label, rejecting anything that is not a nonempty run of
    /// ASCII letters, digits or `_`.
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if is_atom(&text) {
            Ok(Label(text))
        } else {
            Err(Error::InvalidLabel(text))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn is_numeral(&self) -> bool {
        self.0.bytes().all(|b| b.is_ascii_digit())
    }
}

pub(crate) fn is_atom(text: &str) -> bool {
    !text.is_empty() && text.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_numeral(), other.is_numeral()) {
            (true, true) => {
                let a = self.0.trim_start_matches('0');
                let b = other.0.trim_start_matches('0');
                a.len()
                    .cmp(&b.len())
                    .then_with(|| a.cmp(b))
                    .then_with(|| self.0.cmp(&other.0))
            }
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::new(s.trim())
    }
}

/// Unchecked conversion for literals in code and tests.
impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.to_owned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerals_before_words_and_numeric_order() {
        let mut v: Vec<Label> = ["b", "10", "a", "2", "1", "a1"].iter().map(|s| Label::from(*s)).collect();
        v.sort();
        let got: Vec<&str> = v.iter().map(Label::as_str).collect();
        assert_eq!(got, ["1", "2", "10", "a", "a1", "b"]);
    }

    #[test]
    fn rejects_non_atoms() {
        assert!(Label::new("").is_err());
        assert!(Label::new("a b").is_err());
        assert!(Label::new("a(").is_err());
        assert!(Label::new("x_1").is_ok());
    }

    #[test]
    fn leading_zeros_do_not_collapse_labels() {
        let a = Label::from("01");
        let b = Label::from("1");
        assert_ne!(a, b);
        assert_ne!(a.cmp(&b), Ordering::Equal);
    }
}
