//! Closed gcd formulas for few-block seaweeds against the meander index.

use seaweed::formulas::{c21, c22, gcd_index_2parts, gcd_index_3parts};
use seaweed::meander::seaweed_index;
use seaweed::SeaweedType;

fn index(top: &[u32], bottom: &[u32]) -> u64 {
    seaweed_index(&SeaweedType::from_parts(top, bottom).unwrap())
}

#[test]
fn two_parts_over_one() {
    for n in 2..=40u32 {
        for a in 1..n {
            let b = n - a;
            assert_eq!(
                gcd_index_2parts(a.into(), b.into()),
                index(&[a, b], &[n]),
                "{a}|{b}/{n}"
            );
        }
    }
}

#[test]
fn three_blocks_both_shapes() {
    for n in 3..=25u32 {
        for a in 1..n {
            for b in 1..n - a {
                let c = n - a - b;
                let formula = gcd_index_3parts(a.into(), b.into(), c.into());
                assert_eq!(formula, index(&[a, b, c], &[n]), "{a}|{b}|{c}/{n}");
            }
        }
    }
    for a in 1..25u32 {
        for b in 1..25 - a {
            for c in 1..(a + b).min(25 - a - b + 1) {
                let d = a + b - c;
                let formula = gcd_index_3parts(a.into(), b.into(), c.into());
                assert_eq!(formula, index(&[a, b], &[c, d]), "{a}|{b}/{c}|{d}");
            }
        }
    }
}

#[test]
fn c21_matches_brute_force() {
    for n in 2..=60u32 {
        for k in 0..n {
            let brute = (1..n)
                .filter(|&a| index(&[a, n - a], &[n]) == u64::from(k))
                .count() as u64;
            assert_eq!(c21::<u64>(n, k).unwrap(), brute, "n={n} k={k}");
        }
    }
}

#[test]
fn c22_matches_brute_force() {
    for n in 2..=40u32 {
        let mut gcd_row = vec![0u64; n as usize];
        for a in 1..n {
            for c in 1..n {
                gcd_row[gcd_index_3parts(a.into(), (n - a).into(), c.into()) as usize] += 1;
            }
        }
        for k in 0..n {
            assert_eq!(
                c22::<u64>(n, k).unwrap(),
                gcd_row[k as usize],
                "n={n} k={k}"
            );
        }
        if n <= 14 {
            let mut meander_row = vec![0u64; n as usize];
            for a in 1..n {
                for c in 1..n {
                    meander_row[index(&[a, n - a], &[c, n - c]) as usize] += 1;
                }
            }
            assert_eq!(meander_row, gcd_row, "n={n}");
        }
    }
}
