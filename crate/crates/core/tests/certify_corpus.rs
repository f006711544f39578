//! Certificates for a corpus of pseudo-Anosov words, tampering, and words
//! that must not be certified.

use num_rational::BigRational;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trackcert::certify::{generate, verify, Mode};
use trackcert::mcg::word_to_path;

pub const PA_S11: [&str; 10] = ["aB", "aaB", "aBB", "aaBB", "aaaB", "aBBB", "aBaB", "abAB", "aaaBB", "aBaaB"];
pub const PA_S05: [&str; 10] = ["aBc", "aBcD", "abcD", "aBC", "abC", "aBcd", "aaBc", "aBBc", "aBCd", "aaBcD"];

fn k() -> BigRational {
    BigRational::one()
}

pub fn certify_and_tamper(surface: &str, word: &str, seed: u64) {
    let p = word_to_path(surface, word).unwrap();
    let g = generate(&p, &k(), Mode::Adaptive, 500).unwrap_or_else(|e| panic!("{surface} {word}: {e}"));
    let rep = verify(&p, &g.certificate, &g.params);
    assert!(rep.accepted, "{surface} {word}: {:?}", rep.failure);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let (bad, i, place) = g.certificate.tampered(g.params.p1, &mut rng);
        assert!(!verify(&p, &bad, &g.params).accepted, "{surface} {word}: x[{i}] digit {place} accepted");
    }
}

#[test]
fn torus_corpus() {
    for (i, w) in PA_S11.iter().enumerate() {
        certify_and_tamper("S_1_1", w, i as u64);
    }
}

#[test]
fn five_punctured_sphere_corpus() {
    for (i, w) in PA_S05.iter().enumerate() {
        certify_and_tamper("S_0_5", w, 100 + i as u64);
    }
}

#[test]
fn strict_mode_on_the_cat_map() {
    let p = word_to_path("S_1_1", "aB").unwrap();
    let g = generate(&p, &k(), Mode::Strict, 500).unwrap();
    assert!(verify(&p, &g.certificate, &g.params).accepted);
}

pub fn check_non_pseudo_anosov_words_are_not_certified() {
    let cases = [
        ("S_1_1", "a"),
        ("S_1_1", "aaa"),
        ("S_1_1", "ab"),
        ("S_1_1", "aA"),
        ("S_0_4", "a"),
        ("S_0_4", "aC"),
        ("S_0_5", "a"),
        ("S_0_5", "abcd"),
        ("S_0_5", "ac"),
        ("S_0_5", "aB"),
    ];
    for (s, w) in cases {
        let p = word_to_path(s, w).unwrap();
        assert!(generate(&p, &k(), Mode::Adaptive, 200).is_err(), "{s} {w} certified");
    }
}

#[test]
fn certificate_does_not_transfer_between_classes() {
    let p = word_to_path("S_1_1", "aB").unwrap();
    let q = word_to_path("S_1_1", "aaB").unwrap();
    let g = generate(&p, &k(), Mode::Adaptive, 500).unwrap();
    assert!(!verify(&q, &g.certificate, &g.params).accepted);
}

#[test]
fn non_pseudo_anosov_words_are_not_certified() {
    check_non_pseudo_anosov_words_are_not_certified();
}
