//! Exhaustive censuses: the ground truth every closed form is checked against.
//!
//! The full census walks all `4^(n-1)` composition pairs. Work is split into
//! contiguous pair-rank ranges, one per worker; each worker tallies privately
//! and the partial tables are summed in worker order. Tallies are plain
//! counts, so the result does not depend on the number of workers.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_integer::Integer;

use crate::compositions::{pair_count, partition_ranks, SeaweedType};
use crate::error::{Error, Result};
use crate::meander::{seaweed_index, IndexScratch};
use crate::winding::{homotopy_index, wind_down, HomotopyType};

/// Environment variable overriding [`CensusLimits::full_pairs`].
pub const ENV_MAX_N: &str = "SEAWEED_MAX_N";
/// Environment variable overriding [`CensusLimits::meander_c22`].
pub const ENV_MAX_C22_MEANDER_N: &str = "SEAWEED_MAX_C22_MEANDER_N";

/// Largest `n` each census will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusLimits {
    /// Full pair census and homotopy census (`4^(n-1)` meanders).
    pub full_pairs: u32,
    /// Two-part-over-two-part census with the meander oracle.
    pub meander_c22: u32,
}

impl Default for CensusLimits {
    fn default() -> Self {
        Self {
            full_pairs: 14,
            meander_c22: 200,
        }
    }
}

impl CensusLimits {
    /// Defaults, overridden by [`ENV_MAX_N`] and [`ENV_MAX_C22_MEANDER_N`] when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        let read = |key: &str| -> Result<Option<u32>> {
            match std::env::var(key) {
                Ok(v) => v.parse().map(Some).map_err(|_| {
                    Error::invalid(format!("{key}={v:?} is not a non-negative integer"))
                }),
                Err(_) => Ok(None),
            }
        };
        if let Some(v) = read(ENV_MAX_N)? {
            limits.full_pairs = v.min(crate::compositions::MAX_PAIR_N);
        }
        if let Some(v) = read(ENV_MAX_C22_MEANDER_N)? {
            limits.meander_c22 = v;
        }
        Ok(limits)
    }

    fn check_full(&self, n: u32, what: &'static str) -> Result<()> {
        if n > self.full_pairs {
            return Err(Error::LimitExceeded {
                what,
                n,
                limit: self.full_pairs,
                env: ENV_MAX_N,
            });
        }
        Ok(())
    }
}

/// Tallies the index of every composition pair of `n`; entry `k` counts index `k`.
pub fn census_cnk(n: u32, workers: usize, limits: &CensusLimits) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::invalid("census needs n >= 1"));
    }
    limits.check_full(n, "full pair census")?;
    let ranges = partition_ranks(pair_count(n), workers);
    let partials: Vec<Vec<u64>> = if ranges.len() <= 1 {
        ranges.into_iter().map(|r| tally_range(n, r)).collect()
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|r| s.spawn(move || tally_range(n, r)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("census worker panicked"))
                .collect()
        })
    };
    Ok(merge(n as usize, partials))
}

fn tally_range(n: u32, ranks: std::ops::Range<u64>) -> Vec<u64> {
    let mut counts = vec![0u64; n as usize];
    let mut scratch = IndexScratch::new();
    let bits = n - 1;
    let low = (1u64 << bits) - 1;
    for rank in ranks {
        let k = scratch.index_of_masks(n, rank >> bits, rank & low);
        counts[k as usize] += 1;
    }
    counts
}

fn merge(len: usize, partials: Vec<Vec<u64>>) -> Vec<u64> {
    partials.into_iter().fold(vec![0; len], |mut acc, p| {
        for (a, v) in acc.iter_mut().zip(p) {
            *a += v;
        }
        acc
    })
}

/// Counts `a|b/n` seaweeds by index `gcd(a, n) - 1`, over `a` in `1..n`.
pub fn census_c21(n: u32) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::invalid(format!("census_c21 needs n >= 2, got {n}")));
    }
    let mut counts = vec![0u64; n as usize];
    for a in 1..n {
        counts[(a.gcd(&n) - 1) as usize] += 1;
    }
    Ok(counts)
}

/// How the index of an `a|b/c|d` seaweed is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Oracle {
    /// `gcd(a+b, b+c) - 1`.
    Gcd,
    /// Build the meander and count components.
    Meander,
}

impl FromStr for Oracle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gcd" => Ok(Oracle::Gcd),
            "meander" => Ok(Oracle::Meander),
            _ => Err(Error::invalid(format!(
                "unknown oracle {s:?} (expected gcd or meander)"
            ))),
        }
    }
}

/// Counts the `(n-1)^2` seaweeds `a|(n-a) / c|(n-c)` by index.
pub fn census_c22(n: u32, oracle: Oracle, limits: &CensusLimits) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::invalid(format!("census_c22 needs n >= 2, got {n}")));
    }
    if oracle == Oracle::Meander && n > limits.meander_c22 {
        return Err(Error::LimitExceeded {
            what: "meander-oracle C22 census",
            n,
            limit: limits.meander_c22,
            env: ENV_MAX_C22_MEANDER_N,
        });
    }
    let mut counts = vec![0u64; n as usize];
    let mut scratch = IndexScratch::new();
    for a in 1..n {
        for c in 1..n {
            let k = match oracle {
                Oracle::Gcd => u64::from(n.gcd(&(n - a + c))) - 1,
                Oracle::Meander => {
                    let st = SeaweedType::from_parts(&[a, n - a], &[c, n - c])?;
                    scratch.index_of(&st)
                }
            };
            counts[k as usize] += 1;
        }
    }
    Ok(counts)
}

/// Tallies canonical homotopy types over all composition pairs of `n`.
pub fn homotopy_census(n: u32, limits: &CensusLimits) -> Result<BTreeMap<HomotopyType, u64>> {
    if n == 0 {
        return Err(Error::invalid("census needs n >= 1"));
    }
    limits.check_full(n, "homotopy census")?;
    let mut out = BTreeMap::new();
    for st in crate::compositions::all_pairs(n) {
        let (_, h) = wind_down(&st);
        *out.entry(h.canonical()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Collapses a homotopy census to an index row.
pub fn index_row_from_homotopy(n: u32, census: &BTreeMap<HomotopyType, u64>) -> Result<Vec<u64>> {
    let mut row = vec![0u64; n as usize];
    for (h, &count) in census {
        let k = homotopy_index(h)? as usize;
        if k >= row.len() {
            return Err(Error::invalid(format!("{h} has index {k} outside 0..{n}")));
        }
        row[k] += count;
    }
    Ok(row)
}

/// The reference path for one seaweed, without scratch buffers.
pub fn reference_index(st: &SeaweedType) -> u64 {
    seaweed_index(st)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    /// All composition pairs.
    Cnk,
    /// `a|b/n`.
    C21,
    /// `a|b/c|d`.
    C22,
}

impl TableKind {
    pub fn min_n(self) -> u32 {
        match self {
            TableKind::Cnk => 1,
            TableKind::C21 | TableKind::C22 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Cnk => "cnk",
            TableKind::C21 => "c21",
            TableKind::C22 => "c22",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cnk" => Ok(TableKind::Cnk),
            "c21" => Ok(TableKind::C21),
            "c22" => Ok(TableKind::C22),
            _ => Err(Error::invalid(format!(
                "unknown table kind {s:?} (expected cnk, c21 or c22)"
            ))),
        }
    }
}

/// Counts keyed by `(n, k)`; row `n` holds `k = 0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTable {
    pub kind: TableKind,
    rows: BTreeMap<u32, Vec<u64>>,
}

/// A cell where two tables disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u32,
    pub k: u32,
    pub expected: u64,
    pub actual: u64,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(n={}, k={}): expected {}, got {}",
            self.n, self.k, self.expected, self.actual
        )
    }
}

impl IndexTable {
    pub fn new(kind: TableKind) -> Self {
        Self {
            kind,
            rows: BTreeMap::new(),
        }
    }

    pub fn insert_row(&mut self, n: u32, row: Vec<u64>) {
        self.rows.insert(n, row);
    }

    pub fn rows(&self) -> &BTreeMap<u32, Vec<u64>> {
        &self.rows
    }

    pub fn row(&self, n: u32) -> Option<&[u64]> {
        self.rows.get(&n).map(Vec::as_slice)
    }

    /// Zero for `k` beyond the stored row; `None` when row `n` is absent.
    pub fn get(&self, n: u32, k: u32) -> Option<u64> {
        self.rows
            .get(&n)
            .map(|r| r.get(k as usize).copied().unwrap_or(0))
    }

    fn width(&self) -> usize {
        self.rows.values().map(Vec::len).max().unwrap_or(0)
    }

    /// Compares every cell of `expected` on the rows both tables share.
    pub fn mismatches_against(&self, expected: &IndexTable) -> Vec<Mismatch> {
        let mut out = Vec::new();
        for (&n, row) in &expected.rows {
            let Some(ours) = self.rows.get(&n) else {
                continue;
            };
            let width = row.len().max(ours.len());
            for k in 0..width {
                let e = row.get(k).copied().unwrap_or(0);
                let a = ours.get(k).copied().unwrap_or(0);
                if e != a {
                    out.push(Mismatch {
                        n,
                        k: k as u32,
                        expected: e,
                        actual: a,
                    });
                }
            }
        }
        out
    }

    /// `n,k,count`, one line per stored cell.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,count\n");
        for (n, row) in &self.rows {
            for (k, c) in row.iter().enumerate() {
                writeln!(out, "{n},{k},{c}").unwrap();
            }
        }
        out
    }

    /// `{ "kind": ..., "rows": { "<n>": { "<k>": count } } }`.
    pub fn to_json(&self) -> String {
        let mut rows = serde_json::Map::new();
        for (n, row) in &self.rows {
            let cells: serde_json::Map<String, serde_json::Value> = row
                .iter()
                .enumerate()
                .map(|(k, &c)| (k.to_string(), c.into()))
                .collect();
            rows.insert(n.to_string(), cells.into());
        }
        let doc = serde_json::json!({ "kind": self.kind.name(), "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("json");
        s.push('\n');
        s
    }

    /// Grid with rows `n` and columns `k`, zero-padded to the widest row.
    pub fn to_markdown(&self) -> String {
        let width = self.width();
        let mut out = String::from("| n\\k |");
        for k in 0..width {
            write!(out, " {k} |").unwrap();
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(width));
        out.push('\n');
        for (n, row) in &self.rows {
            write!(out, "| {n} |").unwrap();
            for k in 0..width {
                write!(out, " {} |", row.get(k).copied().unwrap_or(0)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Parses a grid CSV: header `n,0,1,...`, then one row per `n`.
    pub fn from_grid_csv(kind: TableKind, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
        let (_, header) = lines.next().ok_or_else(|| Error::invalid("empty table"))?;
        let columns = header.split(',').count() - 1;
        let mut table = IndexTable::new(kind);
        for (lineno, line) in lines {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != columns + 1 {
                return Err(Error::invalid(format!(
                    "line {}: expected {} fields",
                    lineno + 1,
                    columns + 1
                )));
            }
            let parse = |f: &str| {
                f.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::invalid(format!("line {}: bad number {f:?}", lineno + 1)))
            };
            let n = parse(fields[0])? as u32;
            let row = fields[1..]
                .iter()
                .map(|f| parse(f))
                .collect::<Result<Vec<_>>>()?;
            table.insert_row(n, row);
        }
        Ok(table)
    }
}

/// Builds a table for `kind.min_n()..=max_n`.
pub fn build_table(
    kind: TableKind,
    max_n: u32,
    oracle: Oracle,
    workers: usize,
    limits: &CensusLimits,
) -> Result<IndexTable> {
    // Refuse before spending time on the rows below the limit.
    match kind {
        TableKind::Cnk => limits.check_full(max_n, "full pair census")?,
        TableKind::C22 if oracle == Oracle::Meander && max_n > limits.meander_c22 => {
            return Err(Error::LimitExceeded {
                what: "meander-oracle C22 census",
                n: max_n,
                limit: limits.meander_c22,
                env: ENV_MAX_C22_MEANDER_N,
            })
        }
        _ => {}
    }
    let mut table = IndexTable::new(kind);
    for n in kind.min_n()..=max_n {
        let row = match kind {
            TableKind::Cnk => census_cnk(n, workers, limits)?,
            TableKind::C21 => census_c21(n)?,
            TableKind::C22 => census_c22(n, oracle, limits)?,
        };
        table.insert_row(n, row);
    }
    Ok(table)
}
