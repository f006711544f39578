//! Nielsen–Thurston classification driver.

use num_rational::BigRational;
use serde::Serialize;

use crate::certify::{generate, verify, Certificate, Mode, VerificationReport};
use crate::error::Error;
use crate::mcg::path::FlipPath;

/// `8g + 4n - 2`: no periodic class has larger order.
pub fn order_bound(path: &FlipPath) -> usize {
    let t = path.start();
    8 * t.genus() + 4 * t.num_marked() - 2
}

#[derive(Debug, Clone)]
pub enum NTType {
    Periodic { order: usize },
    PseudoAnosov { certificate: Box<Certificate>, report: Box<VerificationReport>, n: usize, m: usize },
    Inconclusive { evidence: String, suspected_reducible: bool },
}

impl NTType {
    pub fn name(&self) -> &'static str {
        match self {
            NTType::Periodic { .. } => "periodic",
            NTType::PseudoAnosov { .. } => "pseudo-Anosov",
            NTType::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn is_pseudo_anosov(&self) -> bool {
        matches!(self, NTType::PseudoAnosov { .. })
    }

    pub fn summary(&self) -> ClassifySummary {
        let mut s = ClassifySummary { kind: self.name().into(), ..Default::default() };
        match self {
            NTType::Periodic { order } => s.order = Some(*order),
            NTType::PseudoAnosov { report, n, m, .. } => {
                s.lambda = report.lambda.clone();
                s.preperiod = Some(*n);
                s.period = Some(*m);
            }
            NTType::Inconclusive { evidence, suspected_reducible } => {
                s.evidence = Some(evidence.clone());
                s.suspected_reducible = Some(*suspected_reducible);
            }
        }
        s
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ClassifySummary {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preperiod: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suspected_reducible: Option<bool>,
}

/// Least `k ≤ 8g+4n-2` with `path^k` the identity.
pub fn periodic_order(path: &FlipPath) -> Option<usize> {
    if path.start() != path.end() {
        return None;
    }
    let mut p = FlipPath::empty(path.start().clone());
    for k in 1..=order_bound(path) {
        p = p.compose(path).ok()?;
        if p.is_identity() {
            return Some(k);
        }
    }
    None
}

/// Periodic by powers, otherwise pseudo-Anosov by an accepted certificate,
/// otherwise inconclusive with the generator's or verifier's diagnostics.
pub fn nt_classify(path: &FlipPath, k: &BigRational, mode: Mode, budget: usize) -> NTType {
    if let Some(order) = periodic_order(path) {
        return NTType::Periodic { order };
    }
    match generate(path, k, mode, budget) {
        Ok(g) => {
            let report = verify(path, &g.certificate, &g.params);
            if report.accepted {
                NTType::PseudoAnosov { certificate: Box::new(g.certificate), report: Box::new(report), n: g.n, m: g.m }
            } else {
                let stage = report.failure.clone().unwrap_or_default();
                let detail = report.stages.last().map(|s| s.detail.clone()).unwrap_or_default();
                NTType::Inconclusive {
                    evidence: format!("certificate rejected at {stage}: {detail}"),
                    suspected_reducible: false,
                }
            }
        }
        Err(e) => {
            let suspected_reducible = matches!(e, Error::WrongType(_) | Error::PeriodicityNotFound(_));
            NTType::Inconclusive { evidence: e.to_string(), suspected_reducible }
        }
    }
}
