use proptest::prelude::*;
use seaweed::compositions::{all_pairs, pair_count};
use seaweed::meander::{seaweed_dimension, seaweed_index};
use seaweed::winding::{format_signature, homotopy_index, parse_signature, wind_down};
use seaweed::SeaweedType;

fn st(s: &str) -> SeaweedType {
    s.parse().unwrap()
}

#[test]
fn winding_index_agrees_exhaustively() {
    for n in 1..=10 {
        for p in all_pairs(n) {
            let (_, h) = wind_down(&p);
            assert_eq!(homotopy_index(&h).unwrap(), seaweed_index(&p), "{p}");
        }
    }
}

#[test]
fn worked_examples() {
    let (sig, h) = wind_down(&st("15/2|5|1|5|2"));
    assert_eq!(sig.to_string(), "PPC(1)C(5)C(2)");
    assert_eq!(h.to_string(), "H(1,5,2)");
    assert_eq!(wind_down(&st("2|4/1|2|3")).0.to_string(), "BFBFPFRBC(1)");
    assert_eq!(wind_down(&st("1/1")).0.to_string(), "C(1)");

    let (_, a) = wind_down(&st("5|3/3|3|2"));
    let (_, b) = wind_down(&st("4|4/2|4|2"));
    assert_eq!(
        (a.to_string(), b.to_string()),
        ("H(1,1)".to_string(), "H(2)".to_string())
    );
    for t in ["5|3/3|3|2", "4|4/2|4|2"] {
        assert_eq!(seaweed_index(&st(t)), 1);
        assert_eq!(seaweed_dimension(&st(t)), 27);
    }
}

proptest! {
    #[test]
    fn signatures_round_trip(n in 1u32..=12, seed in any::<u64>()) {
        let p = SeaweedType::from_rank(n, seed % pair_count(n)).unwrap();
        let (sig, h) = wind_down(&p);
        let text = format_signature(&sig);
        let back = parse_signature(&text).unwrap();
        prop_assert_eq!(&back, &sig);
        prop_assert_eq!(back.homotopy_type(), h.clone());
        prop_assert_eq!(h.to_string().parse::<seaweed::HomotopyType>().unwrap(), h);
    }
}
