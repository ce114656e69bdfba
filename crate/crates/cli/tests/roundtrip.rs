//! Round-trip property: parsing serialized records recovers every finite
//! field exactly, in both formats.

use proptest::prelude::*;

use photon_qfi_cli::report::{parse, serialize, Format, RecordStatus, SweepRecord};

fn finite_f64() -> impl Strategy<Value = f64> {
    any::<f64>().prop_filter("finite, representable qfi", |v| {
        v.is_finite() && v.abs() < 1e300
    })
}

fn record() -> impl Strategy<Value = SweepRecord> {
    (
        finite_f64(),
        finite_f64(),
        finite_f64(),
        proptest::option::of(finite_f64()),
        proptest::option::of(finite_f64()),
        prop_oneof![
            Just(RecordStatus::Exact),
            Just(RecordStatus::Converged),
            Just(RecordStatus::Diverges),
            Just(RecordStatus::NotConverged),
            Just(RecordStatus::Invalid),
        ],
    )
        .prop_map(|(param, mean, variance, delta_phi, weight, status)| SweepRecord {
            param,
            mean,
            variance,
            // Multiplying by four is exact in binary, so the serializer's
            // consistency recheck holds for every generated record.
            qfi: 4.0 * variance,
            delta_phi,
            weight,
            status,
        })
}

proptest! {
    #[test]
    fn csv_round_trip(records in prop::collection::vec(record(), 1..20)) {
        let bytes = serialize(&records, Format::Csv).unwrap();
        let recovered = parse(&bytes, Format::Csv).unwrap();
        prop_assert_eq!(recovered, records);
    }

    #[test]
    fn json_round_trip(records in prop::collection::vec(record(), 1..20)) {
        let bytes = serialize(&records, Format::Json).unwrap();
        let recovered = parse(&bytes, Format::Json).unwrap();
        prop_assert_eq!(recovered, records);
    }
}

#[test]
fn golden_file_parses_and_rewrites_identically() {
    let golden: &[u8] = include_bytes!("golden/figure1_n7.46_m100.csv");
    let records = parse(golden, Format::Csv).unwrap();
    assert_eq!(records.len(), 92);
    let rewritten = serialize(&records, Format::Csv).unwrap();
    assert_eq!(rewritten.as_slice(), golden);
}

#[test]
fn divergent_fields_survive_both_formats() {
    let records = vec![SweepRecord {
        param: 2.5,
        mean: f64::INFINITY,
        variance: f64::INFINITY,
        qfi: f64::INFINITY,
        delta_phi: None,
        weight: None,
        status: RecordStatus::Diverges,
    }];
    for format in [Format::Csv, Format::Json] {
        let recovered = parse(&serialize(&records, format).unwrap(), format).unwrap();
        assert_eq!(recovered, records);
    }
}
