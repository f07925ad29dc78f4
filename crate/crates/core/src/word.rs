//! Finite binary words and Parikh vectors.
//!
//! Positions in the public contracts are 1-based: `prefix_weight(i)` counts
//! the 1s among symbols `1..=i`. Storage is an ordinary 0-based slice.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A finite word over `{0, 1}`; every stored byte is `0` or `1`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWord {
    bits: Vec<u8>,
}

/// Pair `(|u|_0, |u|_1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhVector {
    pub zeros: usize,
    pub ones: usize,
}

impl ParikhVector {
    pub fn new(zeros: usize, ones: usize) -> Self {
        ParikhVector { zeros, ones }
    }

    pub fn len(&self) -> usize {
        self.zeros + self.ones
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.zeros, self.ones)
    }
}

/// Outcome of comparing `u` with `v` lexicographically (`0 < 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LexOrdering {
    Less,
    Equal,
    Greater,
    /// `u` is a strict prefix of `v`, hence `u <=_lex v`.
    Prefix,
}

impl LexOrdering {
    /// `true` for every outcome that means `u <=_lex v`.
    pub fn is_le(self) -> bool {
        !matches!(self, LexOrdering::Greater)
    }
}

impl FiniteWord {
    /// Validates that every entry is `0` or `1`.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidInput(format!(
                "symbol {} at position {} is not binary",
                bits[pos],
                pos + 1
            )));
        }
        Ok(FiniteWord { bits })
    }

    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        FiniteWord { bits }
    }

    pub fn empty() -> Self {
        FiniteWord::default()
    }

    pub fn ones(n: usize) -> Self {
        FiniteWord { bits: vec![1; n] }
    }

    pub fn zeros(n: usize) -> Self {
        FiniteWord { bits: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The symbols, 0-based.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    /// Symbol at 1-based position `i`.
    pub fn symbol(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|j| self.bits.get(j).copied())
    }

    /// Number of 1s in the whole word.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// `P_w(i)`: the number of 1s among the first `i` symbols.
    pub fn prefix_weight(&self, i: usize) -> Result<usize> {
        if i > self.len() {
            return Err(Error::Range {
                index: i,
                max: self.len(),
            });
        }
        Ok(self.bits[..i].iter().filter(|&&b| b == 1).count())
    }

    /// `D_w(i) = P_w(i) / i`, exact; requires `1 <= i <= |w|`.
    pub fn prefix_density(&self, i: usize) -> Result<Rational> {
        if i == 0 {
            return Err(Error::OutOfRange(
                "prefix density is undefined at i = 0".into(),
            ));
        }
        let weight = self.prefix_weight(i)?;
        Ok(Rational::from_ratio(weight as i64, i as i64))
    }

    /// `sums[i] = P_w(i)` for `0 <= i <= |w|`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        let mut sums = Vec::with_capacity(self.len() + 1);
        sums.push(0);
        let mut acc = 0;
        for &b in &self.bits {
            acc += b as usize;
            sums.push(acc);
        }
        sums
    }

    pub fn parikh(&self) -> ParikhVector {
        let ones = self.weight();
        ParikhVector {
            zeros: self.len() - ones,
            ones,
        }
    }

    pub fn complement(&self) -> FiniteWord {
        FiniteWord {
            bits: self.bits.iter().map(|&b| 1 - b).collect(),
        }
    }

    pub fn reverse(&self) -> FiniteWord {
        let mut bits = self.bits.clone();
        bits.reverse();
        FiniteWord { bits }
    }

    pub fn lex_compare(&self, other: &FiniteWord) -> LexOrdering {
        lex_compare_slices(&self.bits, &other.bits)
    }

    /// The prefix of length `n`.
    pub fn prefix(&self, n: usize) -> Result<FiniteWord> {
        if n > self.len() {
            return Err(Error::Range {
                index: n,
                max: self.len(),
            });
        }
        Ok(FiniteWord {
            bits: self.bits[..n].to_vec(),
        })
    }

    /// Factor starting at 1-based position `start` with length `len`.
    pub fn factor(&self, start: usize, len: usize) -> Result<FiniteWord> {
        let begin = start.checked_sub(1).ok_or(Error::Range {
            index: 0,
            max: self.len(),
        })?;
        let end = begin + len;
        if end > self.len() {
            return Err(Error::Range {
                index: end,
                max: self.len(),
            });
        }
        Ok(FiniteWord {
            bits: self.bits[begin..end].to_vec(),
        })
    }

    pub fn concat(&self, other: &FiniteWord) -> FiniteWord {
        let mut bits = Vec::with_capacity(self.len() + other.len());
        bits.extend_from_slice(&self.bits);
        bits.extend_from_slice(&other.bits);
        FiniteWord { bits }
    }

    /// `1^k · self`.
    pub fn prepend_ones(&self, k: usize) -> FiniteWord {
        FiniteWord::ones(k).concat(self)
    }

    pub fn push(&mut self, bit: u8) {
        assert!(bit <= 1, "non-binary symbol {bit}");
        self.bits.push(bit);
    }

    /// Length of the longest run of `symbol`.
    pub fn longest_run(&self, symbol: u8) -> usize {
        let mut best = 0;
        let mut cur = 0;
        for &b in &self.bits {
            if b == symbol {
                cur += 1;
                best = best.max(cur);
            } else {
                cur = 0;
            }
        }
        best
    }
}

pub(crate) fn lex_compare_slices(u: &[u8], v: &[u8]) -> LexOrdering {
    match u.iter().zip(v).find(|(a, b)| a != b) {
        Some((a, b)) if a < b => LexOrdering::Less,
        Some(_) => LexOrdering::Greater,
        None if u.len() == v.len() => LexOrdering::Equal,
        None if u.len() < v.len() => LexOrdering::Prefix,
        None => LexOrdering::Greater,
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .bits
            .iter()
            .map(|&b| if b == 1 { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteWord({self})")
    }
}

impl FromStr for FiniteWord {
    type Err = Error;

    /// Parses an ASCII bitstring; one trailing newline is tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.strip_suffix('\n').unwrap_or(s);
        let s = s.strip_suffix('\r').unwrap_or(s);
        let bits = s
            .bytes()
            .enumerate()
            .map(|(i, c)| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::Parse(format!(
                    "invalid character {:?} at position {}",
                    c as char,
                    i + 1
                ))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(FiniteWord { bits })
    }
}

impl AsRef<[u8]> for FiniteWord {
    fn as_ref(&self) -> &[u8] {
        &self.bits
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    #[test]
    fn prefix_weight_examples() {
        assert_eq!(w("11100110101").prefix_weight(5).unwrap(), 3);
        assert_eq!(w("0110").prefix_weight(0).unwrap(), 0);
        assert_eq!(FiniteWord::empty().prefix_weight(0).unwrap(), 0);
        assert_eq!(w("110100110010").prefix_weight(12).unwrap(), 6);
        assert!(matches!(w("01").prefix_weight(3), Err(Error::Range { .. })));
    }

    #[test]
    fn prefix_density_examples() {
        assert_eq!(
            w("1110000").prefix_density(7).unwrap(),
            Rational::from_ratio(3, 7)
        );
        assert_eq!(
            FiniteWord::ones(9).prefix_density(9).unwrap(),
            Rational::one()
        );
        assert_eq!(
            w("11100001").prefix_density(8).unwrap(),
            Rational::from_ratio(1, 2)
        );
        assert!(w("1").prefix_density(0).is_err());
    }

    #[test]
    fn parikh_examples() {
        assert_eq!(w("11010").parikh(), ParikhVector::new(2, 3));
        assert_eq!(FiniteWord::empty().parikh(), ParikhVector::new(0, 0));
        assert_eq!(FiniteWord::zeros(5).parikh(), ParikhVector::new(5, 0));
        assert_eq!(ParikhVector::new(3, 2).to_string(), "(3,2)");
    }

    #[test]
    fn complement_and_reverse() {
        assert_eq!(w("0010").complement(), w("1101"));
        assert_eq!(w("0010").reverse(), w("0100"));
        assert_eq!(w("001").reverse().complement(), w("011"));
        assert_eq!(w("0010").complement().complement(), w("0010"));
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(w("110101").lex_compare(&w("110110")), LexOrdering::Less);
        assert_eq!(w("1011").lex_compare(&w("1011")), LexOrdering::Equal);
        assert_eq!(w("11").lex_compare(&w("110")), LexOrdering::Prefix);
        assert_eq!(w("110").lex_compare(&w("11")), LexOrdering::Greater);
        assert!(LexOrdering::Prefix.is_le());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("0120".parse::<FiniteWord>().is_err());
        assert_eq!("0101\n".parse::<FiniteWord>().unwrap(), w("0101"));
        assert!(FiniteWord::new(vec![0, 2]).is_err());
    }

    #[test]
    fn factor_is_one_based() {
        assert_eq!(w("110100110110").factor(7, 5).unwrap(), w("11011"));
        assert!(w("01").factor(0, 1).is_err());
        assert!(w("01").factor(2, 2).is_err());
    }

    #[test]
    fn longest_run() {
        assert_eq!(w("0110111001").longest_run(1), 3);
        assert_eq!(w("0110111001").longest_run(0), 2);
        assert_eq!(FiniteWord::empty().longest_run(1), 0);
    }
}
