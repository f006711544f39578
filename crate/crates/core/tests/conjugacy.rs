//! Conjugacy decisions from the periodic splitting cycle.

use trackcert::classify::{pa_conjugate, pa_invariant};
use trackcert::mcg::word_to_path;

/// The word `f w f^-1`.
fn conj(w: &str, f: &str) -> String {
    let inv: String = f
        .chars()
        .rev()
        .map(|c| if c.is_ascii_lowercase() { c.to_ascii_uppercase() } else { c.to_ascii_lowercase() })
        .collect();
    format!("{f}{w}{inv}")
}

fn decide(surface: &str, a: &str, b: &str) -> bool {
    let p = word_to_path(surface, a).unwrap();
    let q = word_to_path(surface, b).unwrap();
    pa_conjugate(&p, &q, 500).unwrap()
}

pub fn check_conjugates_are_recognised() {
    let cases = [
        ("S_1_1", "aB", "a"),
        ("S_1_1", "aaB", "ba"),
        ("S_1_1", "aBaB", "bbA"),
        ("S_0_5", "aBc", "d"),
        ("S_0_5", "aBcD", "ab"),
    ];
    for (s, w, f) in cases {
        let v = conj(w, f);
        assert!(decide(s, w, &v), "{s}: {w} vs {v}");
    }
}

pub fn check_non_conjugates_are_told_apart() {
    let cases = [
        ("S_1_1", "aB", "aaB"),
        ("S_1_1", "aaBB", "aBaB"),
        ("S_1_1", "aB", "aBB"),
        ("S_0_5", "aBc", "aBcD"),
        ("S_0_5", "aBC", "aBcd"),
    ];
    for (s, a, b) in cases {
        assert!(!decide(s, a, b), "{s}: {a} vs {b}");
    }
}

#[test]
fn invariant_survives_json() {
    let p = word_to_path("S_0_5", "aBcD").unwrap();
    let inv = pa_invariant(&p, 500).unwrap();
    let back = trackcert::classify::PAConjInvariant::from_json(&inv.to_json()).unwrap();
    assert_eq!(inv, back);
    assert_eq!(inv.period(), back.period());
}

#[test]
fn conjugates_are_recognised() {
    check_conjugates_are_recognised();
}

#[test]
fn non_conjugates_are_told_apart() {
    check_non_conjugates_are_told_apart();
}
