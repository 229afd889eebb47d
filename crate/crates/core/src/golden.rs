//! Published reference tables, embedded as grid CSV.

use crate::enumeration::{IndexTable, TableKind};

const CNK: &str = include_str!("../data/golden/cnk.csv");
const C21: &str = include_str!("../data/golden/c21.csv");
const C22: &str = include_str!("../data/golden/c22.csv");

/// Raw CSV of the reference table for `kind`.
pub fn raw(kind: TableKind) -> &'static str {
    match kind {
        TableKind::Cnk => CNK,
        TableKind::C21 => C21,
        TableKind::C22 => C22,
    }
}

/// Reference table for `kind`: `C(n,k)` for n 1..=10, `C21` for n 2..=12, `C22` for n 2..=11.
pub fn table(kind: TableKind) -> IndexTable {
    IndexTable::from_grid_csv(kind, raw(kind)).expect("embedded golden table is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let cnk = table(TableKind::Cnk);
        assert_eq!(cnk.rows().len(), 10);
        assert_eq!(cnk.get(9, 3), Some(17596));
        assert_eq!(cnk.get(10, 4), Some(63380));
        assert_eq!(
            table(TableKind::C21)
                .rows()
                .keys()
                .copied()
                .collect::<Vec<_>>(),
            (2..=12).collect::<Vec<_>>()
        );
        assert_eq!(table(TableKind::C22).get(9, 2), Some(14));
    }

    #[test]
    fn cnk_rows_sum_to_pair_count() {
        for (n, row) in table(TableKind::Cnk).rows() {
            assert_eq!(row.iter().sum::<u64>(), 1u64 << (2 * (n - 1)), "n={n}");
        }
    }
}
