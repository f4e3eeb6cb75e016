use macpieri::arith::{Field, Rational};
use macpieri::error::Error;
use macpieri::inversions::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DRAWS: usize = 20;

fn draw<F>(family: PairFamily, n: usize, seed: u64, mut accept: F) -> usize
where
    F: FnMut(&InversePairSpec<Rational>) -> macpieri::Result<bool>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = 0;
    let mut tries = 0;
    while ok < DRAWS {
        tries += 1;
        assert!(tries < 40 * DRAWS, "too many degenerate draws");
        let spec = random_spec(family, n, -4, 4, &mut rng);
        match accept(&spec) {
            Ok(true) => ok += 1,
            Ok(false) => panic!("{family:?} n={n} failed for {spec:?}"),
            Err(Error::DivisionByZero) => continue,
            Err(e) => panic!("{e}"),
        }
    }
    ok
}

#[test]
fn every_family_inverts_on_the_window() {
    for fam in PairFamily::ALL {
        let top = fam.max_dim().unwrap_or(3);
        for n in 1..=top {
            draw(fam, n, 100 + n as u64, |s| Ok(verify_inverse(s, 0, 2)?.violations.is_empty()));
        }
    }
}

#[test]
fn one_dimensional_pairs_reject_higher_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let spec = random_spec(PairFamily::Kratt1d, 2, 0, 3, &mut rng);
    assert!(matches!(verify_inverse(&spec, 0, 2), Err(Error::Parameter(_))));
}

#[test]
fn transfer_keeps_inverseness() {
    for n in 1..=2 {
        draw(PairFamily::ProductDet, n, 7 + n as u64, |s| {
            let d = |k: &[i64]| {
                let mut acc = Rational::from_i64(1);
                for (i, &x) in k.iter().enumerate() {
                    acc = acc.mul(&Rational::from_i64(3 + 2 * x + i as i64 * 5));
                }
                acc
            };
            transfer_preserves(s, &d, 0, 2)
        });
    }
}

#[test]
fn corollaries_come_from_the_substituted_limit() {
    for n in 1..=3 {
        draw(PairFamily::ShiftedProductDet, n, 30 + n as u64, |s| {
            let cor = |side, r: &[i64], c: &[i64]| pair_entry(s, side, r, c);
            let sub = |side, r: &[i64], c: &[i64]| substituted_limit_entry(s, side, r, c, true);
            same_up_to_transfer(&cor, &sub, n, 0, 2)
        });
        draw(PairFamily::ShiftedDetProduct, n, 40 + n as u64, |s| {
            let cor = |side, r: &[i64], c: &[i64]| pair_entry(s, side, r, c);
            let sub = |side, r: &[i64], c: &[i64]| substituted_limit_entry(s, side, r, c, false);
            same_up_to_transfer(&cor, &sub, n, 0, 2)
        });
    }
}

#[test]
fn reversing_the_sequences_swaps_the_two_theorems() {
    for n in 1..=3 {
        let r = if n == 3 { 1 } else { 2 };
        draw(PairFamily::DetProduct, n, 50 + n as u64, |s| negation_holds(s, -r, r));
    }
}

#[test]
fn bressoud_extension_is_a_transfer_of_the_specialization() {
    for n in 1..=3 {
        draw(PairFamily::BressoudExt, n, 60 + n as u64, |s| {
            let spec = bressoud_specialization(s, -4, 4)?;
            let ext = |side, r: &[i64], c: &[i64]| pair_entry(s, side, r, c);
            let thm = |side, r: &[i64], c: &[i64]| pair_entry(&spec, side, r, c);
            same_up_to_transfer(&ext, &thm, n, 0, 2)
        });
    }
}

#[test]
fn geometric_preset_inverts() {
    let q = Rational::new(3.into(), 7.into());
    let t = Rational::new((-5).into(), 2.into());
    let u = [Rational::from_i64(2), Rational::new(11.into(), 3.into())];
    let spec = geometric_preset(&q, &t, &u, -1, 3).unwrap();
    assert!(verify_inverse(&spec, 0, 2).unwrap().violations.is_empty());
}

#[test]
fn report_serializes() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rep = verify_random(PairFamily::ProductDet, 2, 1, 0, 1, &mut rng).unwrap().remove(0);
    let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["family"], "product_det");
    assert_eq!(v["window"], serde_json::json!([0, 1]));
    assert_eq!(v["checked"], 18);
    assert!(v["violations"].as_array().unwrap().is_empty());
}
