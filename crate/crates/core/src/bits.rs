//! Fixed-width bit strings.
//!
//! Bit strings name basis states, table rows, measurement outcomes, and
//! messages. Position 1 is the leftmost character, matching the 1-based,
//! most-significant-first qubit convention used throughout the crate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered sequence of bits, leftmost first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit at 1-based position `pos` (leftmost is 1).
    pub fn bit(&self, pos: usize) -> bool {
        self.0[pos - 1]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Value as a big-endian integer: `"1100"` is 12.
    pub fn to_index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
    }

    /// The `len` low bits of `index`, most significant first.
    pub fn from_index(index: usize, len: usize) -> Self {
        let bits = (0..len).rev().map(|p| (index >> p) & 1 == 1).collect();
        BitString(bits)
    }

    /// Exclusive-or with another string of the same length.
    pub fn xor(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        BitString(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    line: 1,
                    msg: format!("invalid bit character `{other}` in `{s}`"),
                }),
            })
            .collect::<Result<Vec<bool>>>()
            .map(BitString)
    }
}

impl TryFrom<String> for BitString {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BitString> for String {
    fn from(b: BitString) -> String {
        b.to_string()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

// Debug delegates to Display: labels read better unquoted in test output.
impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand used pervasively in tests and table data.
pub fn bits(s: &str) -> BitString {
    s.parse().expect("literal bit string")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        assert_eq!(bits("1100").to_index(), 12);
        assert_eq!(BitString::from_index(12, 4), bits("1100"));
        assert_eq!(BitString::from_index(0, 5), bits("00000"));
        assert_eq!(BitString::from_index(31, 5), bits("11111"));
    }

    #[test]
    fn display_and_parse() {
        let b: BitString = "01011".parse().unwrap();
        assert_eq!(b.to_string(), "01011");
        assert_eq!(b.len(), 5);
        assert!(b.bit(2));
        assert!(!b.bit(1));
        assert!("01x1".parse::<BitString>().is_err());
    }

    #[test]
    fn xor_and_ones() {
        assert_eq!(bits("1100").xor(&bits("1010")), bits("0110"));
        assert_eq!(bits("1011").count_ones(), 3);
    }
}
