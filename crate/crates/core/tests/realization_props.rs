//! Soundness and completeness of the realizability decision.

mod common;

use common::{exhaustive_population, mixed_population, random_witness_data};
use isokit_core::identities::check_identities;
use isokit_core::oracle::SplitMix64;
use isokit_core::realization::{realize, verify_witness, witness_to_data};

#[test]
fn realize_is_sound_exhaustive() {
    for d in exhaustive_population(3, 2) {
        if let Ok(witness) = realize(&d) {
            assert!(verify_witness(&d, &witness), "witness mismatch for {d}");
        }
    }
}

#[test]
fn realize_is_sound_random() {
    for d in mixed_population(6, 1000, 0x50D4) {
        if let Ok(witness) = realize(&d) {
            assert!(verify_witness(&d, &witness), "witness mismatch for {d}");
        }
    }
}

#[test]
fn realize_agrees_with_identities() {
    for d in exhaustive_population(3, 2) {
        assert_eq!(
            realize(&d).is_ok(),
            check_identities(&d).satisfied(),
            "decision mismatch for {d}"
        );
    }
}

#[test]
fn witness_data_always_passes() {
    let mut rng = SplitMix64::new(0x77);
    for _ in 0..500 {
        let n = rng.below(7) as u32;
        let d = random_witness_data(n, &mut rng);
        assert!(check_identities(&d).satisfied(), "witness data fails: {d}");
        assert!(realize(&d).is_ok());
    }
}

#[test]
fn realize_of_witness_data_reproduces_it() {
    // The witness record need not be unique, but the induced data is.
    let mut rng = SplitMix64::new(0x1CE);
    for _ in 0..500 {
        let n = rng.below(7) as u32;
        let d = random_witness_data(n, &mut rng);
        let recovered = realize(&d).unwrap();
        assert_eq!(witness_to_data(&recovered), d);
    }
}

#[test]
fn realizability_is_closed_under_products() {
    let mut rng = SplitMix64::new(0xC105);
    for _ in 0..300 {
        let a = random_witness_data(rng.below(4) as u32, &mut rng);
        let b = random_witness_data(rng.below(4) as u32, &mut rng);
        let product = a.product(&b);
        assert!(
            realize(&product).is_ok(),
            "product of realizable data not realizable: {a} x {b}"
        );
    }
}

#[test]
fn defects_report_every_violated_weight() {
    for d in exhaustive_population(3, 2) {
        if let Err(not_realizable) = realize(&d) {
            assert!(!not_realizable.defects.is_empty());
            let table = d.multiplicities();
            for defect in &not_realizable.defects {
                let expected =
                    &table.m()[defect.j as usize] - common::pascal(d.n(), defect.j) * &table.m()[0];
                assert_eq!(defect.residual, expected);
            }
        }
    }
}
