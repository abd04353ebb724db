use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use tensor_growth::combinatorics::{ExtNat, MixedCharacteristic};
use tensor_growth::decomposer::{b_sequence_sl2, decompose_tensor_power};
use tensor_growth::hopf::{build_e, trace_condition};
use tensor_growth::report::{bn_table, Format};
use tensor_growth::sl2_tilting::{tilting_character, tilting_dimension};
use tensor_growth::specht::SpechtOracle;

fn ext() -> impl Strategy<Value = ExtNat> {
    prop_oneof![
        Just(ExtNat::Finite(2)),
        Just(ExtNat::Finite(3)),
        Just(ExtNat::Finite(5)),
        Just(ExtNat::Finite(7)),
        Just(ExtNat::Infinite),
    ]
}

fn regime() -> impl Strategy<Value = MixedCharacteristic> {
    (ext(), ext()).prop_map(|(p, l)| MixedCharacteristic::new(p, l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tilting_dimension_is_character_at_one(m in 0u64..400, mc in regime()) {
        let ch = tilting_character(m, mc).unwrap();
        prop_assert_eq!(ch.evaluate_at_one(), BigInt::from(tilting_dimension(m, mc).unwrap()));
        prop_assert!(ch.is_symmetric());
        prop_assert_eq!(ch.leading_term().map(|(e, _)| e), Some(m as i64));
    }

    #[test]
    fn decomposition_conserves_dimension(n in 0u32..32, mc in regime()) {
        let d = decompose_tensor_power(n, mc).unwrap();
        prop_assert_eq!(d.total_dimension().unwrap(), BigUint::from(1u8) << n);
        prop_assert!(d.has_parity_support());
    }

    #[test]
    fn series_agrees_with_direct_decomposition(mc in regime()) {
        let series = b_sequence_sl2(24, mc).unwrap();
        for n in [0u32, 1, 7, 16, 24] {
            prop_assert_eq!(&series.values[n as usize], &decompose_tensor_power(n, mc).unwrap().b);
        }
    }
}

#[test]
fn modular_oracle_matches_sl2_decomposer() {
    let oracle = SpechtOracle::default();
    for p in [2u64, 3, 5] {
        let series = b_sequence_sl2(10, MixedCharacteristic::classical(p).unwrap()).unwrap();
        for n in 0..=10 {
            assert_eq!(oracle.b_modular_glm(n, 2, p).unwrap(), series.values[n], "n={n} p={p}");
        }
    }
}

#[test]
fn counterexample_for_larger_m() {
    for m in [13, 20, 31] {
        let tr = trace_condition(&build_e(m).unwrap()).unwrap();
        assert_eq!(tr.to_string(), "-2");
    }
}

#[test]
fn csv_and_json_agree_on_values() {
    let series = b_sequence_sl2(60, MixedCharacteristic::classical(3).unwrap()).unwrap();
    let table = bn_table(&series);
    let csv = table.render(Format::Csv).unwrap();
    let json: serde_json::Value = serde_json::from_str(&table.render(Format::Json).unwrap()).unwrap();
    for (line, row) in csv.lines().skip(1).zip(json.as_array().unwrap()) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(row["n"].to_string(), fields[0]);
        assert_eq!(row["b_n"].as_str().unwrap(), fields[1]);
    }
}
