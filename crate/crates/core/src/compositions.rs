//! Integer compositions and composition pairs.
//!
//! Compositions of `n` are in bijection with `(n-1)`-bit masks: bit `i` set
//! means the composition is cut between positions `i+1` and `i+2`. All
//! enumeration is in ascending mask order, and pairs are ranked as
//! `top_mask * 2^(n-1) + bottom_mask`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `n` whose compositions are addressable by a `u64` mask.
pub const MAX_COMPOSITION_N: u32 = 64;

/// Largest `n` whose pair ranks fit in a `u64`.
pub const MAX_PAIR_N: u32 = 32;

/// An ordered sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
    n: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a composition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("composition parts must be positive"));
        }
        let n = parts
            .iter()
            .try_fold(0u32, |acc, &p| acc.checked_add(p))
            .ok_or_else(|| Error::invalid("composition sum overflows u32"))?;
        Ok(Self { parts, n })
    }

    /// The trivial one-part composition `(n)`.
    pub fn single(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn from_bitmask(n: u32, mask: u64) -> Result<Self> {
        if n == 0 || n > MAX_COMPOSITION_N {
            return Err(Error::invalid(format!(
                "n must be in 1..={MAX_COMPOSITION_N}, got {n}"
            )));
        }
        let bits = n - 1;
        if bits < 64 && mask >> bits != 0 {
            return Err(Error::invalid(format!(
                "mask {mask:#b} out of range for n={n} (needs < 2^{bits})"
            )));
        }
        Ok(Self::from_mask_unchecked(n, mask))
    }

    pub(crate) fn from_mask_unchecked(n: u32, mask: u64) -> Self {
        let mut parts = Vec::with_capacity(mask.count_ones() as usize + 1);
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Self { parts, n }
    }

    /// Inverse of [`Composition::from_bitmask`].
    pub fn to_bitmask(&self) -> u64 {
        let mut mask = 0u64;
        let mut pos = 0u32;
        for &p in &self.parts[..self.parts.len() - 1] {
            pos += p;
            mask |= 1 << (pos - 1);
        }
        mask
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn parse_at(s: &str, offset: usize) -> Result<Self> {
        let mut parts = Vec::new();
        let mut start = 0;
        for piece in s.split('|') {
            let pos = offset + start;
            if piece.is_empty() {
                return Err(Error::parse(pos, "empty part"));
            }
            if let Some((i, c)) = piece.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
                return Err(Error::parse(pos + i, format!("unexpected character {c:?}")));
            }
            if piece.starts_with('0') {
                return Err(Error::parse(
                    pos,
                    "parts are positive integers without leading zeros",
                ));
            }
            let v = piece
                .parse::<u32>()
                .map_err(|_| Error::parse(pos, "part too large"))?;
            parts.push(v);
            start += piece.len() + 1;
        }
        Composition::new(parts).map_err(|e| Error::parse(offset, e.to_string()))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `a1|a2|...`; whitespace is rejected.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_at(s, 0)
    }
}

/// A pair of compositions of the same `n`: the type `top/bottom` of a seaweed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeaweedType {
    top: Composition,
    bottom: Composition,
}

impl SeaweedType {
    pub fn new(top: Composition, bottom: Composition) -> Result<Self> {
        if top.n() != bottom.n() {
            return Err(Error::invalid(format!(
                "sums {} \u{2260} {}",
                top.n(),
                bottom.n()
            )));
        }
        Ok(Self { top, bottom })
    }

    pub fn from_parts(top: &[u32], bottom: &[u32]) -> Result<Self> {
        Self::new(
            Composition::new(top.to_vec())?,
            Composition::new(bottom.to_vec())?,
        )
    }

    /// The pair at `rank` in the canonical order over all pairs for `n`.
    pub fn from_rank(n: u32, rank: u64) -> Result<Self> {
        if n == 0 || n > MAX_PAIR_N {
            return Err(Error::invalid(format!(
                "n must be in 1..={MAX_PAIR_N}, got {n}"
            )));
        }
        let bits = n - 1;
        if rank >> (2 * bits) != 0 {
            return Err(Error::invalid(format!(
                "rank {rank} out of range for n={n}"
            )));
        }
        let low = (1u64 << bits) - 1;
        Ok(Self {
            top: Composition::from_mask_unchecked(n, rank >> bits),
            bottom: Composition::from_mask_unchecked(n, rank & low),
        })
    }

    pub fn top(&self) -> &Composition {
        &self.top
    }

    pub fn bottom(&self) -> &Composition {
        &self.bottom
    }

    pub fn n(&self) -> u32 {
        self.top.n()
    }

    /// The type with top and bottom exchanged.
    pub fn flipped(&self) -> Self {
        Self {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }
}

impl fmt::Display for SeaweedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.top, self.bottom)
    }
}

impl FromStr for SeaweedType {
    type Err = Error;

    /// Parses `a1|.../b1|...`; whitespace is rejected, sums must agree.
    fn from_str(s: &str) -> Result<Self> {
        let slash = s
            .find('/')
            .ok_or_else(|| Error::parse(s.len(), "expected '/' between top and bottom"))?;
        let top = Composition::parse_at(&s[..slash], 0)?;
        let bottom = Composition::parse_at(&s[slash + 1..], slash + 1)?;
        SeaweedType::new(top, bottom)
    }
}

/// All `2^(n-1)` compositions of `n`, ascending by mask.
pub fn all_compositions(n: u32) -> impl Iterator<Item = Composition> {
    assert!(
        (1..=MAX_COMPOSITION_N).contains(&n),
        "n must be in 1..={MAX_COMPOSITION_N}"
    );
    let count = if n == 64 { u64::MAX } else { 1u64 << (n - 1) };
    (0..count).map(move |mask| Composition::from_mask_unchecked(n, mask))
}

/// Number of ordered composition pairs of `n`, `4^(n-1)`.
pub fn pair_count(n: u32) -> u64 {
    assert!(
        (1..=MAX_PAIR_N).contains(&n),
        "n must be in 1..={MAX_PAIR_N}"
    );
    1u64 << (2 * (n - 1))
}

/// All `4^(n-1)` pairs, in rank order.
pub fn all_pairs(n: u32) -> impl Iterator<Item = SeaweedType> {
    pairs_in_range(n, 0, pair_count(n))
}

/// Pairs with rank in `start..end`; re-creatable from the bounds alone.
pub fn pairs_in_range(n: u32, start: u64, end: u64) -> impl Iterator<Item = SeaweedType> {
    let end = end.min(pair_count(n));
    (start..end).map(move |rank| SeaweedType::from_rank(n, rank).expect("rank in range"))
}

/// Splits `0..total` into `workers` contiguous ranges of near-equal size.
pub fn partition_ranks(total: u64, workers: usize) -> Vec<std::ops::Range<u64>> {
    let w = workers.max(1) as u64;
    (0..w)
        .map(|i| (total * i / w)..(total * (i + 1) / w))
        .filter(|r| !r.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn recursive_compositions(n: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in recursive_compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn bitmask_examples() {
        assert_eq!(Composition::from_bitmask(4, 0).unwrap().parts(), &[4]);
        assert_eq!(
            Composition::from_bitmask(4, 0b111).unwrap().parts(),
            &[1, 1, 1, 1]
        );
        assert_eq!(
            Composition::from_bitmask(6, 0b101).unwrap().parts(),
            &[1, 2, 3]
        );
        assert!(Composition::from_bitmask(4, 0b1000).is_err());
        assert!(Composition::from_bitmask(0, 0).is_err());
    }

    #[test]
    fn bitmask_is_bijective_against_recursive_generation() {
        for n in 1..=16 {
            let from_masks: HashSet<Vec<u32>> = all_compositions(n)
                .inspect(|c| assert_eq!(c.parts().iter().sum::<u32>(), n))
                .map(|c| c.parts().to_vec())
                .collect();
            assert_eq!(from_masks.len() as u64, 1u64 << (n - 1));
            if n <= 12 {
                let rec: HashSet<Vec<u32>> = recursive_compositions(n).into_iter().collect();
                assert_eq!(from_masks, rec, "n={n}");
            }
        }
    }

    #[test]
    fn mask_round_trip() {
        for c in all_compositions(9) {
            assert_eq!(Composition::from_bitmask(9, c.to_bitmask()).unwrap(), c);
        }
    }

    #[test]
    fn documented_order_for_n3() {
        let got: Vec<String> = all_compositions(3).map(|c| c.to_string()).collect();
        assert_eq!(got, ["3", "1|2", "2|1", "1|1|1"]);
        assert_eq!(all_compositions(1).count(), 1);
        assert_eq!(all_compositions(10).count(), 512);
    }

    #[test]
    fn pair_cardinality_and_ranks() {
        assert_eq!(
            all_pairs(1).map(|p| p.to_string()).collect::<Vec<_>>(),
            ["1/1"]
        );
        assert_eq!(all_pairs(2).count(), 4);
        assert_eq!(all_pairs(5).count(), 256);
        let distinct: HashSet<SeaweedType> = all_pairs(6).collect();
        assert_eq!(distinct.len(), 1024);
        let first = SeaweedType::from_rank(3, 1).unwrap();
        assert_eq!(first.to_string(), "3/1|2");
    }

    #[test]
    fn partitions_cover_range_exactly() {
        for w in 1..9 {
            let parts = partition_ranks(1000, w);
            assert_eq!(parts.first().unwrap().start, 0);
            assert_eq!(parts.last().unwrap().end, 1000);
            for pair in parts.windows(2) {
                assert_eq!(pair[0].end, pair[1].start);
            }
        }
        assert_eq!(partition_ranks(2, 8).len(), 2);
    }

    #[test]
    fn parse_and_display() {
        let st: SeaweedType = "2|4/1|2|3".parse().unwrap();
        assert_eq!(st.top().parts(), &[2, 4]);
        assert_eq!(st.bottom().parts(), &[1, 2, 3]);
        assert_eq!(st.to_string(), "2|4/1|2|3");
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in [
            "", "2|4", "2| 4/6", " 6/6", "2||4/6", "0|6/6", "6/06", "6/6/6", "a/1", "2|4/",
        ] {
            assert!(bad.parse::<SeaweedType>().is_err(), "{bad:?} accepted");
        }
        let err = "2|4/1|2".parse::<SeaweedType>().unwrap_err();
        assert_eq!(err.to_string(), "invalid argument: sums 6 \u{2260} 3");
        match "2|x/6".parse::<SeaweedType>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
    }
}
