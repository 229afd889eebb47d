//! Winding a meander down to its homotopy type.
//!
//! Each step compares the leading top part `a1` with the leading bottom part
//! `b1` and applies exactly one move:
//!
//! | guard            | move | successor                                   |
//! |------------------|------|---------------------------------------------|
//! | `a1 < b1`        | `F`  | top and bottom exchanged                    |
//! | `a1 = b1 = c`    | `C(c)` | both leading parts dropped                |
//! | `b1 < a1 < 2b1`  | `R`  | `b1\|a2\|... / (2b1-a1)\|b2\|...`           |
//! | `a1 = 2b1`       | `B`  | `b1\|a2\|... / b2\|...`                     |
//! | `a1 > 2b1`       | `P`  | `(a1-2b1)\|b1\|a2\|... / b2\|...`           |
//!
//! The list of moves is the signature; the `c` values of the `C` moves, in
//! order, are the homotopy type.

use std::fmt;
use std::str::FromStr;

use crate::compositions::{Composition, SeaweedType};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Flip,
    ComponentElimination(u32),
    RotationContraction,
    BlockElimination,
    PureContraction,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Flip => f.write_str("F"),
            Move::ComponentElimination(c) => write!(f, "C({c})"),
            Move::RotationContraction => f.write_str("R"),
            Move::BlockElimination => f.write_str("B"),
            Move::PureContraction => f.write_str("P"),
        }
    }
}

/// A (possibly exhausted) type during winding down.
///
/// Parts are held in reverse so the leading part is at the end of each vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WindState {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl WindState {
    pub fn empty() -> Self {
        Self {
            top: Vec::new(),
            bottom: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty() && self.bottom.is_empty()
    }

    pub fn top(&self) -> Vec<u32> {
        self.top.iter().rev().copied().collect()
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.bottom.iter().rev().copied().collect()
    }

    /// `None` once both sides are exhausted.
    pub fn to_seaweed(&self) -> Option<SeaweedType> {
        if self.is_empty() {
            return None;
        }
        SeaweedType::from_parts(&self.top(), &self.bottom()).ok()
    }

    fn n(&self) -> u64 {
        self.top.iter().map(|&p| u64::from(p)).sum()
    }
}

impl From<&SeaweedType> for WindState {
    fn from(st: &SeaweedType) -> Self {
        let rev = |c: &Composition| c.parts().iter().rev().copied().collect();
        Self {
            top: rev(st.top()),
            bottom: rev(st.bottom()),
        }
    }
}

impl fmt::Display for WindState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[u32]| {
            v.iter()
                .rev()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join("|")
        };
        write!(f, "{}/{}", side(&self.top), side(&self.bottom))
    }
}

/// Applies the single move whose guard matches the leading parts.
pub fn wind_step(state: &WindState) -> Result<(Move, WindState)> {
    let (Some(&a1), Some(&b1)) = (state.top.last(), state.bottom.last()) else {
        return Err(Error::invalid("cannot wind down an empty type"));
    };
    let mut next = state.clone();
    let mv = if a1 < b1 {
        std::mem::swap(&mut next.top, &mut next.bottom);
        Move::Flip
    } else if a1 == b1 {
        next.top.pop();
        next.bottom.pop();
        Move::ComponentElimination(a1)
    } else if a1 < 2 * b1 {
        let rest = 2 * b1 - a1;
        assert!(rest >= 1);
        *next.top.last_mut().unwrap() = b1;
        *next.bottom.last_mut().unwrap() = rest;
        Move::RotationContraction
    } else if a1 == 2 * b1 {
        *next.top.last_mut().unwrap() = b1;
        next.bottom.pop();
        Move::BlockElimination
    } else {
        let lead = a1 - 2 * b1;
        assert!(lead >= 1);
        *next.top.last_mut().unwrap() = b1;
        next.top.push(lead);
        next.bottom.pop();
        Move::PureContraction
    };
    debug_assert_eq!(
        next.n(),
        next.bottom.iter().map(|&p| u64::from(p)).sum::<u64>()
    );
    Ok((mv, next))
}

/// The ordered move list of a winding down.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Signature(pub Vec<Move>);

impl Signature {
    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    /// Homotopy type read off the component eliminations.
    pub fn homotopy_type(&self) -> HomotopyType {
        HomotopyType(
            self.0
                .iter()
                .filter_map(|m| match m {
                    Move::ComponentElimination(c) => Some(*c),
                    _ => None,
                })
                .collect(),
        )
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|m| write!(f, "{m}"))
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Grammar `([FRBP]|C\(\d+\))+`.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut moves = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let mv = match bytes[i] {
                b'F' => Move::Flip,
                b'R' => Move::RotationContraction,
                b'B' => Move::BlockElimination,
                b'P' => Move::PureContraction,
                b'C' => {
                    if bytes.get(i + 1) != Some(&b'(') {
                        return Err(Error::parse(i + 1, "expected '(' after 'C'"));
                    }
                    let start = i + 2;
                    let end = start
                        + bytes[start..]
                            .iter()
                            .take_while(|b| b.is_ascii_digit())
                            .count();
                    if end == start {
                        return Err(Error::parse(start, "expected component size"));
                    }
                    if bytes.get(end) != Some(&b')') {
                        return Err(Error::parse(end, "expected ')'"));
                    }
                    let c: u32 = s[start..end]
                        .parse()
                        .map_err(|_| Error::parse(start, "component size too large"))?;
                    if c == 0 {
                        return Err(Error::parse(start, "component size must be positive"));
                    }
                    i = end;
                    Move::ComponentElimination(c)
                }
                _ => {
                    let c = s[i..].chars().next().unwrap();
                    return Err(Error::parse(i, format!("unexpected character {c:?}")));
                }
            };
            moves.push(mv);
            i += 1;
        }
        if moves.is_empty() {
            return Err(Error::parse(0, "empty signature"));
        }
        Ok(Signature(moves))
    }
}

/// Sizes of the eliminated components, in elimination order.
///
/// Equality here is order-sensitive; compare [`HomotopyType::canonical`]
/// values when the question is whether two graphs share a homotopy type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomotopyType(pub Vec<u32>);

impl HomotopyType {
    pub fn components(&self) -> &[u32] {
        &self.0
    }

    /// Sorted multiset form.
    pub fn canonical(&self) -> HomotopyType {
        let mut v = self.0.clone();
        v.sort_unstable();
        HomotopyType(v)
    }

    pub fn n(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("H(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for HomotopyType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .strip_prefix("H(")
            .ok_or_else(|| Error::parse(0, "expected 'H('"))?
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(s.len(), "expected ')'"))?;
        let mut out = Vec::new();
        let mut pos = 2;
        for piece in inner.split(',') {
            let c: u32 = piece
                .parse()
                .ok()
                .filter(|&c| c > 0 && !piece.starts_with('+'))
                .ok_or_else(|| Error::parse(pos, format!("bad component size {piece:?}")))?;
            out.push(c);
            pos += piece.len() + 1;
        }
        Ok(HomotopyType(out))
    }
}

/// Winds `st` all the way down.
pub fn wind_down(st: &SeaweedType) -> (Signature, HomotopyType) {
    let mut state = WindState::from(st);
    // Every non-flip move shrinks the top sum and a flip is never followed by a flip.
    let bound = 2 * st.n() as usize + 1;
    let mut moves = Vec::new();
    while !state.is_empty() {
        assert!(
            moves.len() <= bound,
            "winding down {st} did not terminate within {bound} moves"
        );
        let (mv, next) = wind_step(&state).expect("state is non-empty");
        moves.push(mv);
        state = next;
    }
    let sig = Signature(moves);
    let h = sig.homotopy_type();
    (sig, h)
}

/// `2 * sum floor(c/2) + #odd(c) - 1`: the index of any meander with this homotopy type.
pub fn homotopy_index(h: &HomotopyType) -> Result<u64> {
    if h.0.is_empty() {
        return Err(Error::invalid("empty homotopy type"));
    }
    let circles: u64 = h.0.iter().map(|&c| u64::from(c / 2)).sum();
    let points = h.0.iter().filter(|&&c| c % 2 == 1).count() as u64;
    Ok(2 * circles + points - 1)
}

pub fn format_signature(s: &Signature) -> String {
    s.to_string()
}

pub fn parse_signature(text: &str) -> Result<Signature> {
    text.parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::all_pairs;
    use crate::meander::seaweed_index;

    fn st(s: &str) -> SeaweedType {
        s.parse().unwrap()
    }

    fn step(s: &str) -> (Move, String) {
        let (m, next) = wind_step(&WindState::from(&st(s))).unwrap();
        (m, next.to_string())
    }

    #[test]
    fn single_steps() {
        assert_eq!(
            step("15/2|5|1|5|2"),
            (Move::PureContraction, "11|2/5|1|5|2".into())
        );
        assert_eq!(step("2|3/1|4"), (Move::BlockElimination, "1|3/4".into()));
        let (m, next) = wind_step(&WindState::from(&st("1/1"))).unwrap();
        assert_eq!(m, Move::ComponentElimination(1));
        assert!(next.is_empty());
        assert!(next.to_seaweed().is_none());
        assert!(wind_step(&WindState::empty()).is_err());
        assert_eq!(step("3/2|1"), (Move::RotationContraction, "2/1|1".into()));
        assert_eq!(step("1|2/3"), (Move::Flip, "3/1|2".into()));
    }

    #[test]
    fn block_elimination_preserves_homotopy_type() {
        let before = wind_down(&st("2|3/1|4")).1.canonical();
        let after = wind_down(&st("1|3/4")).1.canonical();
        assert_eq!(before, after);
    }

    #[test]
    fn fifteen_vertex_signature() {
        let (sig, h) = wind_down(&st("15/2|5|1|5|2"));
        assert_eq!(sig.to_string(), "PPC(1)C(5)C(2)");
        assert_eq!(h.to_string(), "H(1,5,2)");
        assert_eq!(homotopy_index(&h).unwrap(), 7);
        let summary = crate::meander::build_meander(&st("15/2|5|1|5|2")).components();
        assert_eq!((summary.cycles, summary.paths), (3, 2));
    }

    #[test]
    fn six_vertex_signature_by_hand() {
        let (sig, h) = wind_down(&st("2|4/1|2|3"));
        assert_eq!(sig.to_string(), "BFBFPFRBC(1)");
        assert_eq!(h, HomotopyType(vec![1]));
        assert_eq!(homotopy_index(&h).unwrap(), 0);
    }

    #[test]
    fn equal_index_pair_homotopy_types_differ() {
        let (_, h1) = wind_down(&st("5|3/3|3|2"));
        let (_, h2) = wind_down(&st("4|4/2|4|2"));
        assert_eq!(h1.to_string(), "H(1,1)");
        assert_eq!(h2.to_string(), "H(2)");
        assert_ne!(h1.canonical(), h2.canonical());
        assert_eq!(homotopy_index(&h1).unwrap(), 1);
        assert_eq!(homotopy_index(&h2).unwrap(), 1);
    }

    #[test]
    fn homotopy_index_values() {
        assert_eq!(homotopy_index(&HomotopyType(vec![1])).unwrap(), 0);
        assert_eq!(homotopy_index(&HomotopyType(vec![2])).unwrap(), 1);
        assert!(homotopy_index(&HomotopyType(vec![])).is_err());
    }

    #[test]
    fn index_agreement_and_eliminated_size_bound() {
        for n in 1..=8 {
            for p in all_pairs(n) {
                let (sig, h) = wind_down(&p);
                assert!(h.n() <= u64::from(n));
                let only_flips_and_eliminations = sig
                    .moves()
                    .iter()
                    .all(|m| matches!(m, Move::Flip | Move::ComponentElimination(_)));
                assert_eq!(
                    h.n() == u64::from(n),
                    only_flips_and_eliminations,
                    "{p} {sig}"
                );
                assert_eq!(homotopy_index(&h).unwrap(), seaweed_index(&p), "{p} {sig}");
            }
        }
    }

    #[test]
    fn signature_text() {
        let s = Signature(vec![
            Move::PureContraction,
            Move::PureContraction,
            Move::ComponentElimination(1),
            Move::ComponentElimination(5),
            Move::ComponentElimination(2),
        ]);
        assert_eq!(format_signature(&s), "PPC(1)C(5)C(2)");
        assert_eq!(parse_signature("PPC(1)C(5)C(2)").unwrap(), s);
        assert_eq!(parse_signature("C(1)").unwrap().to_string(), "C(1)");
        for (bad, pos) in [
            ("", 0),
            ("PX", 1),
            ("C1", 1),
            ("C()", 2),
            ("C(3", 3),
            ("C(0)", 2),
        ] {
            match parse_signature(bad) {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{bad:?}"),
                other => panic!("{bad:?} -> {other:?}"),
            }
        }
    }

    #[test]
    fn homotopy_text() {
        let h: HomotopyType = "H(1,5,2)".parse().unwrap();
        assert_eq!(h.components(), &[1, 5, 2]);
        assert_eq!(h.canonical().to_string(), "H(1,2,5)");
        for bad in ["H()", "H(1,,2)", "(1)", "H(1", "H(0)", "H(+1)"] {
            assert!(bad.parse::<HomotopyType>().is_err(), "{bad}");
        }
    }
}
