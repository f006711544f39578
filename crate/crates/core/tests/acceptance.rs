//! One pass/fail line per acceptance criterion. Criterion 9 and the fitted
//! preperiod constant of criterion 4 are logged only.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use trackcert::certify::{generate, stable_lamination, verify, Mode};
use trackcert::classify::{nt_classify, NTType};
use trackcert::exact::decimal::pow10;
use trackcert::exact::FixedDecimal;
use trackcert::mcg::word_to_path;
use trackcert::traintrack::MeasuredTrainTrack;

#[allow(dead_code, unused_imports)]
mod certify_corpus;
#[allow(dead_code, unused_imports)]
mod conjugacy;
#[allow(dead_code, unused_imports)]
mod multiarc_oracle;

type Outcome = Result<String, String>;

fn run(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into());
        Err(msg)
    })
}

/// (3 + sqrt 5) / 2 to `places` decimals, by integer square root.
fn golden_square(places: usize) -> BigRational {
    let s = (BigInt::from(5) * pow10(2 * places)).sqrt();
    BigRational::new(BigInt::from(3) * pow10(places) + s, BigInt::from(2) * pow10(places))
}

fn close(x: &FixedDecimal, want: &BigRational, places: usize) -> bool {
    (x.to_rational() - want).abs() <= BigRational::new(BigInt::one(), pow10(places))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let p = word_to_path("S_1_1", "aB").unwrap();
    let k = BigRational::one();
    let t = nt_classify(&p, &k, Mode::Adaptive, 500);
    let NTType::PseudoAnosov { report, .. } = &t else {
        return Err(format!("classified as {}", t.name()));
    };
    let want = golden_square(40);
    let y = report.lambda_approx.as_ref().ok_or("no Stage 7 scale factor")?;
    let lam = stable_lamination(&p, 500).unwrap();
    let track = MeasuredTrainTrack::from_triangulation(p.start(), &lam.measures).unwrap();
    let per = track.detect_periodicity(500).unwrap();
    let l = per.lambda.floor_decimal(40);
    let secs = start.elapsed().as_secs_f64();
    if !close(y, &want, 20) {
        return Err(format!("Stage 7 y = {y} is off"));
    }
    if !close(&l, &want, 20) {
        return Err(format!("periodicity λ = {l} is off"));
    }
    if secs >= 60.0 {
        return Err(format!("took {secs:.1} s"));
    }
    Ok(format!("y and λ agree with (3+√5)/2 to 1e-20 in {secs:.2} s"))
}

fn criterion_2() -> Outcome {
    let k = BigRational::one();
    let mut n = 0;
    for (s, words) in [("S_1_1", &certify_corpus::PA_S11), ("S_0_5", &certify_corpus::PA_S05)] {
        for w in words {
            let p = word_to_path(s, w).unwrap();
            let g = generate(&p, &k, Mode::Adaptive, 500).map_err(|e| format!("{s} {w}: {e}"))?;
            if !verify(&p, &g.certificate, &g.params).accepted {
                return Err(format!("{s} {w} rejected"));
            }
            n += 1;
        }
    }
    certify_corpus::check_non_pseudo_anosov_words_are_not_certified();
    for w in ["", "aA", "ab"] {
        let p = word_to_path("S_1_1", w).unwrap();
        if !matches!(nt_classify(&p, &k, Mode::Adaptive, 200), NTType::Periodic { .. }) {
            return Err(format!("S_1_1 {w:?} not periodic"));
        }
    }
    Ok(format!("{n} pA words accepted; periodic words and twists refused"))
}

fn criterion_3() -> Outcome {
    let mut n = 0;
    for (s, words) in [("S_1_1", &certify_corpus::PA_S11), ("S_0_5", &certify_corpus::PA_S05)] {
        for (i, w) in words.iter().enumerate() {
            certify_corpus::certify_and_tamper(s, w, 1000 + i as u64);
            n += 1;
        }
    }
    Ok(format!("50/50 perturbations rejected for each of {n} certificates"))
}

fn criterion_4() -> Outcome {
    let rows = splitting::rows();
    let mut k_fit: f64 = 0.0;
    for r in &rows {
        if r.m > 2 * r.len {
            return Err(format!("{} {}: m = {} > 2ℓ = {}", r.surface, r.word, r.m, 2 * r.len));
        }
        k_fit = k_fit.max(r.n as f64 / (24 * r.zeta * r.len * r.len) as f64);
    }
    let max_n = rows.iter().map(|r| r.n).max().unwrap_or(0);
    Ok(format!("m ≤ 2ℓ on {} words; n ≤ {max_n}, fitted K = {k_fit:.5} (logged)", rows.len()))
}

fn criterion_5() -> Outcome {
    let rows = splitting::rows();
    for r in &rows {
        if r.coverage.0 != r.coverage.1 {
            return Err(format!("{} {}: {}/{} branches split", r.surface, r.word, r.coverage.0, r.coverage.1));
        }
    }
    Ok(format!("every branch split within 3ζm on {} words", rows.len()))
}

fn criterion_6() -> Outcome {
    pl_calculus::check_path_then_inverse_is_identity_on_measures();
    pl_calculus::check_flipping_twice_is_the_identity();
    pl_calculus::check_linear_piece_agrees_with_the_action();
    Ok("1000 round trips, flip involution, linear pieces".into())
}

fn criterion_7() -> Outcome {
    let a = multiarc_oracle::check_surface("S_1_1", -3, 6);
    let b = multiarc_oracle::check_surface("S_0_4", -2, 3);
    Ok(format!("{a} flips on S_1_1 and {b} on S_0_4 match the oracle"))
}

fn criterion_8() -> Outcome {
    conjugacy::check_conjugates_are_recognised();
    conjugacy::check_non_conjugates_are_told_apart();
    Ok("5 conjugate pairs recognised, 5 non-conjugate pairs separated".into())
}

/// Least-squares slope of log t against log ℓ.
fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

fn criterion_9() -> Outcome {
    let k = BigRational::one();
    let mut points = vec![];
    let mut log = vec![];
    for reps in [1, 2, 4, 8] {
        let p = word_to_path("S_1_1", &"aB".repeat(reps)).unwrap();
        let g = generate(&p, &k, Mode::Adaptive, 500).map_err(|e| e.to_string())?;
        // best of three to damp noise
        let mut best = Duration::MAX;
        for _ in 0..3 {
            let t = Instant::now();
            let rep = verify(&p, &g.certificate, &g.params);
            best = best.min(t.elapsed());
            if !rep.accepted {
                return Err(format!("ℓ = {} rejected", p.len()));
            }
        }
        points.push((p.len() as f64, best.as_secs_f64().max(1e-6)));
        log.push(format!("ℓ={} {:.2}ms", p.len(), best.as_secs_f64() * 1e3));
    }
    let alpha = fit_exponent(&points);
    let verdict = if alpha <= 4.5 { "within" } else { "above" };
    Ok(format!("{}; α = {alpha:.2} ({verdict} 4.5; logged)", log.join(", ")))
}

fn main() {
    let criteria: [(usize, fn() -> Outcome, bool); 9] = [
        (1, criterion_1, true),
        (2, criterion_2, true),
        (3, criterion_3, true),
        (4, criterion_4, true),
        (5, criterion_5, true),
        (6, criterion_6, true),
        (7, criterion_7, true),
        (8, criterion_8, true),
        (9, criterion_9, false),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, f, gating) in criteria {
        let start = Instant::now();
        let out = run(f);
        let secs = start.elapsed().as_secs_f64();
        match &out {
            Ok(msg) => println!("criterion {i}: PASS ({secs:.1} s) {msg}"),
            Err(msg) => {
                let tag = if gating { "FAIL" } else { "FAIL (logged only)" };
                println!("criterion {i}: {tag} ({secs:.1} s) {msg}");
                if gating {
                    failed += 1;
                }
            }
        }
    }
    if failed > 0 {
        println!("{failed} gating criteria failed");
        std::process::exit(1);
    }
}
