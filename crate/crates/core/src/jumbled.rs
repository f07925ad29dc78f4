//! Binary jumbled pattern matching: "does the word have a factor with `x` 0s
//! and `y` 1s?" answered in constant time from the max/min 1s per length.
//!
//! On-disk layout, little-endian:
//!
//! ```text
//! "PNJI" | version: u32 = 1 | n: u64 | f¹(1..=n): n × u64 | F¹(1..=n): n × u64
//! ```

use crate::error::{Error, Result};
use crate::profile::{compute_profile, PrefixProfile};
use crate::word::FiniteWord;

const MAGIC: &[u8; 4] = b"PNJI";
const VERSION: u32 = 1;
const HEADER_LEN: usize = 4 + 4 + 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JumbledIndex {
    profile: PrefixProfile,
}

impl JumbledIndex {
    /// Indexes a non-empty word.
    pub fn build(w: &FiniteWord) -> Result<Self> {
        Ok(JumbledIndex {
            profile: compute_profile(w)?,
        })
    }

    pub fn from_profile(profile: PrefixProfile) -> Self {
        JumbledIndex { profile }
    }

    pub fn word_length(&self) -> usize {
        self.profile.len()
    }

    pub fn profile(&self) -> &PrefixProfile {
        &self.profile
    }

    /// Whether some factor has exactly `zeros` 0s and `ones` 1s. The empty
    /// factor is never reported.
    pub fn query(&self, zeros: usize, ones: usize) -> bool {
        let Some(len) = zeros.checked_add(ones) else {
            return false;
        };
        len >= 1
            && len <= self.profile.len()
            && self.profile.min_ones(len) <= ones
            && ones <= self.profile.max_ones(len)
    }

    pub fn serialize(&self) -> Vec<u8> {
        let n = self.profile.len();
        let mut out = Vec::with_capacity(HEADER_LEN + 16 * n);
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&(n as u64).to_le_bytes());
        for arr in [self.profile.min_ones_slice(), self.profile.max_ones_slice()] {
            for &v in arr {
                out.extend_from_slice(&(v as u64).to_le_bytes());
            }
        }
        out
    }

    /// Parses and re-validates a serialized index.
    pub fn deserialize(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_LEN {
            return Err(Error::Format(format!(
                "truncated header ({} bytes)",
                bytes.len()
            )));
        }
        if &bytes[..4] != MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        let version = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
        if version != VERSION {
            return Err(Error::Format(format!("unsupported version {version}")));
        }
        let n = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
        let expected = n
            .checked_mul(16)
            .and_then(|b| b.checked_add(HEADER_LEN as u64))
            .filter(|&b| b <= usize::MAX as u64)
            .ok_or_else(|| Error::Format(format!("implausible length {n}")))?;
        if bytes.len() as u64 != expected {
            return Err(Error::Format(format!(
                "payload is {} bytes, expected {expected} for n = {n}",
                bytes.len()
            )));
        }
        if n == 0 {
            return Err(Error::Format("index of an empty word".into()));
        }
        let n = n as usize;
        let read = |k: usize| -> Result<Vec<usize>> {
            let body = &bytes[HEADER_LEN + 8 * n * k..HEADER_LEN + 8 * n * (k + 1)];
            body.chunks_exact(8)
                .map(|c| {
                    let v = u64::from_le_bytes(c.try_into().unwrap());
                    usize::try_from(v).map_err(|_| Error::Format(format!("value {v} too large")))
                })
                .collect()
        };
        let min = read(0)?;
        let max = read(1)?;
        let profile = PrefixProfile::from_arrays(&max, &min)
            .map_err(|e| Error::Format(format!("invariant violated: {e}")))?;
        Ok(JumbledIndex { profile })
    }
}

/// Same as [`JumbledIndex::build`].
pub fn build_index(w: &FiniteWord) -> Result<JumbledIndex> {
    JumbledIndex::build(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fibonacci_stream;

    fn w(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    #[test]
    fn table_one_index() {
        let ix = build_index(&fibonacci_stream().prefix(20).unwrap()).unwrap();
        assert!(ix.query(3, 2));
        assert!(!ix.query(2, 3));
        assert!(!ix.query(0, 0));
        assert!(!ix.query(21, 0));
        assert!(!ix.query(usize::MAX, 1));
        assert_eq!(
            ix.profile().max_ones_slice(),
            [1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 7, 7, 7, 8, 8]
        );
        assert_eq!(JumbledIndex::deserialize(&ix.serialize()).unwrap(), ix);
    }

    #[test]
    fn small_arrays() {
        let ix = build_index(&w("0101")).unwrap();
        assert_eq!(ix.profile().min_ones_slice(), [0, 1, 1, 2]);
        assert_eq!(ix.profile().max_ones_slice(), [1, 1, 2, 2]);
        let ones = build_index(&FiniteWord::ones(5)).unwrap();
        assert_eq!(ones.profile().min_ones_slice(), [1, 2, 3, 4, 5]);
        assert!(build_index(&FiniteWord::empty()).is_err());
    }

    #[test]
    fn layout() {
        let bytes = build_index(&w("10")).unwrap().serialize();
        let mut expected = b"PNJI".to_vec();
        expected.extend_from_slice(&1u32.to_le_bytes());
        expected.extend_from_slice(&2u64.to_le_bytes());
        for v in [0u64, 1, 1, 1] {
            expected.extend_from_slice(&v.to_le_bytes());
        }
        assert_eq!(bytes, expected);
    }

    #[test]
    fn malformed_payloads() {
        let bytes = build_index(&w("110100")).unwrap().serialize();
        for cut in [0, 3, 15, 16, bytes.len() - 1] {
            assert!(matches!(
                JumbledIndex::deserialize(&bytes[..cut]),
                Err(Error::Format(_))
            ));
        }
        let mut extra = bytes.clone();
        extra.push(0);
        assert!(matches!(
            JumbledIndex::deserialize(&extra),
            Err(Error::Format(_))
        ));
        let mut magic = bytes.clone();
        magic[0] = b'X';
        assert!(matches!(
            JumbledIndex::deserialize(&magic),
            Err(Error::Format(_))
        ));
        let mut version = bytes.clone();
        version[4] = 2;
        assert!(matches!(
            JumbledIndex::deserialize(&version),
            Err(Error::Format(_))
        ));
        // f¹(1) = 5 breaks the unit-step invariant.
        let mut broken = bytes.clone();
        broken[16] = 5;
        assert!(matches!(
            JumbledIndex::deserialize(&broken),
            Err(Error::Format(_))
        ));
        let mut huge = bytes;
        huge[8..16].copy_from_slice(&u64::MAX.to_le_bytes());
        assert!(matches!(
            JumbledIndex::deserialize(&huge),
            Err(Error::Format(_))
        ));
    }
}
