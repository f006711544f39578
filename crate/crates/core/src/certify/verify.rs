//! The ten-stage certificate check.

use std::cmp::Ordering;
use std::time::Instant;

use serde::Serialize;

use super::certificate::Certificate;
use super::params::{Mode, VerifierParams};
use crate::exact::{cmp_places, FixedDecimal};
use crate::mcg::path::{mat_vec, FlipPath};
use crate::scalar::Truncated;
use crate::traintrack::MeasuredTrainTrack;

#[derive(Debug, Clone, Serialize)]
pub struct StageResult {
    pub stage: usize,
    pub passed: bool,
    pub code: String,
    pub detail: String,
    pub micros: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub accepted: bool,
    pub mode: Mode,
    pub params: VerifierParams,
    pub stages: Vec<StageResult>,
    /// Code of the first failing stage, or `CERT_MALFORMED`.
    pub failure: Option<String>,
    /// Leading digits of the Stage 7 scale factor `y`.
    pub lambda: Option<String>,
    /// Flips where the Stage 7 comparison was a tie at `p1` places.
    pub ties: Vec<usize>,
    pub micros: u128,
    #[serde(skip)]
    pub lambda_approx: Option<FixedDecimal>,
}

impl VerificationReport {
    pub fn first_failure(&self) -> Option<usize> {
        self.stages.iter().find(|s| !s.passed).map(|s| s.stage)
    }
}

fn cmp_p(a: &FixedDecimal, b: &FixedDecimal, p: usize) -> Ordering {
    let s = a.scale().max(b.scale());
    cmp_places(&a.rescale_up(s), &b.rescale_up(s), p.min(s)).expect("common scale")
}

/// Run every stage in order, stopping at the first failure.
pub fn verify(path: &FlipPath, cert: &Certificate, params: &VerifierParams) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport {
        accepted: false,
        mode: params.mode,
        params: params.clone(),
        stages: vec![],
        failure: None,
        lambda: None,
        ties: vec![],
        micros: 0,
        lambda_approx: None,
    };
    if let Some(why) = cert.structural_defect(path.zeta(), params) {
        rep.failure = Some("CERT_MALFORMED".into());
        rep.stages.push(StageResult { stage: 0, passed: false, code: "CERT_MALFORMED".into(), detail: why, micros: 0 });
        rep.micros = start.elapsed().as_micros();
        return rep;
    }
    let mut st = Stages { path, cert, p: params, y: None };
    type Stage<'a> = fn(&mut Stages<'a>) -> Result<String, String>;
    let stages: [Stage; 10] = [
        Stages::heights,
        Stages::unit_interval,
        Stages::root_brackets,
        Stages::triangles,
        Stages::vertices,
        Stages::unitary,
        Stages::image,
        Stages::invariant,
        Stages::stable,
        Stages::filling,
    ];
    for (i, f) in stages.iter().enumerate() {
        let t0 = Instant::now();
        let out = f(&mut st);
        let code = format!("CERT_STAGE_{}", i + 1);
        let passed = out.is_ok();
        let detail = out.unwrap_or_else(|e| e);
        rep.stages.push(StageResult {
            stage: i + 1,
            passed,
            code: code.clone(),
            detail,
            micros: t0.elapsed().as_micros(),
        });
        if i == 6 {
            if let Some((y, ties)) = &st.y {
                rep.lambda = Some(y.1.truncate(40.min(params.p1)).to_string());
                rep.lambda_approx = Some(y.1.clone());
                rep.ties = ties.clone();
            }
        }
        if !passed {
            rep.failure = Some(code);
            break;
        }
    }
    rep.accepted = rep.failure.is_none();
    rep.micros = start.elapsed().as_micros();
    rep
}

struct Stages<'a> {
    path: &'a FlipPath,
    cert: &'a Certificate,
    p: &'a VerifierParams,
    /// (y vector, y) and tie positions from Stage 7.
    #[allow(clippy::type_complexity)]
    y: Option<((Vec<FixedDecimal>, FixedDecimal), Vec<usize>)>,
}

impl Stages<'_> {
    fn x(&self) -> &[FixedDecimal] {
        &self.cert.x
    }

    fn corner(&self, t: usize, i: usize) -> FixedDecimal {
        let s = self.path.start().triangles()[t];
        let x = self.x();
        &(&x[s[i]] + &x[s[(i + 1) % 3]]) - &x[s[(i + 2) % 3]]
    }

    fn heights(&mut self) -> Result<String, String> {
        for (i, f) in self.cert.f.iter().enumerate() {
            let d = f.degree().unwrap_or(0);
            if d > self.p.zeta {
                return Err(format!("deg f[{i}] = {d} exceeds zeta = {}", self.p.zeta));
            }
            let h = f.height_ceil().map_err(|e| e.to_string())?;
            if h > self.p.h0 {
                return Err(format!("height of f[{i}] is above 10^{}, bound is h0 = {}", h - 1, self.p.h0));
            }
        }
        Ok("degrees and heights within bounds".into())
    }

    fn unit_interval(&mut self) -> Result<String, String> {
        let zero = FixedDecimal::zero(self.p.d1);
        let one = FixedDecimal::from_int(1, self.p.d1);
        for (i, x) in self.x().iter().enumerate() {
            if cmp_p(x, &zero, self.p.p1).is_lt() || cmp_p(x, &one, self.p.p1).is_gt() {
                return Err(format!("x[{i}] is outside [0, 1] at {} places", self.p.p1));
            }
        }
        Ok("all x_i in [0, 1]".into())
    }

    fn root_brackets(&mut self) -> Result<String, String> {
        let ulp = FixedDecimal::ulp(self.p.d1);
        for (i, (x, f)) in self.x().iter().zip(&self.cert.f).enumerate() {
            let lo = f.horner_eval_exact(&(x - &ulp)).signum();
            let hi = f.horner_eval_exact(&(x + &ulp)).signum();
            if lo.is_eq() || hi.is_eq() || lo == hi {
                return Err(format!("f[{i}] does not change sign across x[{i}] ± 10^-{}", self.p.d1));
            }
        }
        Ok("every f_i changes sign around x_i".into())
    }

    fn triangles(&mut self) -> Result<String, String> {
        let zero = FixedDecimal::zero(self.p.d1);
        for t in 0..self.path.start().triangles().len() {
            for i in 0..3 {
                if cmp_p(&self.corner(t, i), &zero, self.p.p1).is_lt() {
                    return Err(format!("triangle {t} violates a triangle inequality at corner {i}"));
                }
            }
        }
        Ok("triangle inequalities hold".into())
    }

    fn vertices(&mut self) -> Result<String, String> {
        let zero = FixedDecimal::zero(self.p.d1);
        for (k, vert) in self.path.start().vertices().iter().enumerate() {
            if !vert.iter().any(|&(t, i)| cmp_p(&self.corner(t, i), &zero, self.p.p1).is_eq()) {
                return Err(format!("vertex {k} has no degenerate corner (peripheral component)"));
            }
        }
        Ok("every vertex has a degenerate corner".into())
    }

    fn unitary(&mut self) -> Result<String, String> {
        let total = self.x().iter().fold(FixedDecimal::zero(self.p.d1), |a, x| &a + x);
        if cmp_p(&total, &FixedDecimal::from_int(1, self.p.d1), self.p.p1).is_ne() {
            return Err(format!("sum of x_i is not 1 at {} places", self.p.p1));
        }
        Ok("sum of x_i is 1".into())
    }

    fn image(&mut self) -> Result<String, String> {
        let v: Vec<Truncated> = self.x().iter().map(|x| Truncated::new(x.clone(), self.p.p1)).collect();
        let piece = self.path.piece_at(&v);
        let yv: Vec<FixedDecimal> = mat_vec(&piece.a, &v).into_iter().map(|t| t.value).collect();
        let y = yv.iter().fold(FixedDecimal::zero(self.p.d1), |a, x| &a + x);
        let msg = format!("y = {} with {} tie(s)", y.truncate(20.min(self.p.d1)), piece.ties.len());
        self.y = Some(((yv, y), piece.ties));
        Ok(msg)
    }

    fn invariant(&mut self) -> Result<String, String> {
        let ((yv, y), _) = self.y.as_ref().unwrap();
        for (i, (yi, xi)) in yv.iter().zip(self.x()).enumerate() {
            if cmp_p(yi, &y.mul_exact(xi), self.p.p1).is_ne() {
                return Err(format!("y_{i} differs from y * x_{i} at {} places", self.p.p1));
            }
        }
        Ok("image is y times x".into())
    }

    fn stable(&mut self) -> Result<String, String> {
        let ((_, y), _) = self.y.as_ref().unwrap();
        if cmp_p(y, &FixedDecimal::from_int(1, self.p.d1), self.p.p1).is_gt() {
            Ok("y > 1".into())
        } else {
            Err(format!("y = {} is not greater than 1", y.truncate(20.min(self.p.d1))))
        }
    }

    fn filling(&mut self) -> Result<String, String> {
        // one guard digit keeps corner halves exact
        let v: Vec<Truncated> =
            self.x().iter().map(|x| Truncated::new(x.rescale_up(self.p.d1 + 1), self.p.p1)).collect();
        let mut t = MeasuredTrainTrack::from_triangulation(self.path.start(), &v).map_err(|e| e.to_string())?;
        for k in 0..self.p.t {
            t = t.maximal_split().map_err(|e| format!("split {k}: {e}"))?.0;
        }
        if t.is_filling() {
            Ok(format!("s^{}(T') is filling with census {:?}", self.p.t, t.census()))
        } else {
            Err(format!("s^{}(T') is not filling; census {:?}", self.p.t, t.census()))
        }
    }
}

/// Constants the verifier holds a certificate to. Strict constants depend
/// only on the path; adaptive ones read heights and the split count from the
/// certificate itself.
pub fn required_params(
    path: &FlipPath,
    cert: &Certificate,
    k: &num_rational::BigRational,
    mode: Mode,
) -> crate::Result<VerifierParams> {
    match mode {
        Mode::Strict => Ok(super::params::box_params(path.zeta(), path.len(), k)),
        Mode::Adaptive => super::params::adaptive_params(path.zeta(), path.len(), k, &cert.f, cert.params.t),
    }
}

/// Check a certificate against the constants its mode requires.
pub fn verify_with(
    path: &FlipPath,
    cert: &Certificate,
    k: &num_rational::BigRational,
    mode: Mode,
) -> crate::Result<VerificationReport> {
    let p = required_params(path, cert, k, mode)?;
    Ok(verify(path, cert, &p))
}
