//! Certificates of the pseudo-Anosov property and their verification.

pub mod certificate;
pub mod generate;
pub mod params;
pub mod verify;

pub use certificate::{CertParams, Certificate};
pub use generate::{
    annihilating_polynomial, derive_params, generate, roundtrip, stable_lamination, Generated, StableLamination,
};
pub use params::{adaptive_params, box_params, parse_k, Mode, VerifierParams};
pub use verify::{required_params, verify, verify_with, StageResult, VerificationReport};
