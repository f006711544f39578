use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use serde::Serialize;
use serde_json::json;

use super::args::{budget, Command, Common};
use super::{load_path, read, write, CliError, EXIT_FAILURE, EXIT_OK, EXIT_REJECTED};
use crate::certify::{generate, parse_k, stable_lamination, verify, verify_with, Certificate, VerificationReport};
use crate::classify::{nt_classify, pa_invariant, NTType};
use crate::mcg::FlipPath;
use crate::traintrack::MeasuredTrainTrack;

pub fn run(cmd: &Command) -> Result<i32, CliError> {
    match cmd {
        Command::Classify(c) => classify(c),
        Command::Certify { common, cert } => certify(common, cert.as_deref()),
        Command::Verify { common, cert, tamper, seed } => verify_cmd(common, cert, *tamper, *seed),
        Command::SplitSeq(c) => split_seq(c),
        Command::Conjugate { surface, tri, word1, word2, path1, path2, budget: b, out } => {
            let (s1, p) = load_path(surface.as_deref(), tri.as_deref(), word1.as_deref(), path1.as_deref())?;
            let (s2, q) = load_path(surface.as_deref(), tri.as_deref(), word2.as_deref(), path2.as_deref())?;
            if s1 != s2 || p.start() != q.start() {
                return Err(CliError::Usage("the two classes live on different triangulations".into()));
            }
            conjugate(&p, &q, budget(*b), out.as_deref())
        }
    }
}

fn load(c: &Common) -> Result<(String, FlipPath), CliError> {
    load_path(c.surface.as_deref(), c.tri.as_deref(), c.word.as_deref(), c.path.as_deref())
}

fn k_of(c: &Common) -> Result<num_rational::BigRational, CliError> {
    Ok(parse_k(&c.k)?)
}

fn input_name(c: &Common) -> String {
    match (&c.word, &c.path) {
        (Some(w), _) => format!("{w:?}"),
        (_, Some(p)) => p.display().to_string(),
        _ => String::new(),
    }
}

fn emit<T: Serialize>(out: Option<&Path>, report: &T) -> Result<(), CliError> {
    if let Some(p) = out {
        let s = serde_json::to_string_pretty(report).expect("serializable");
        write(p, &(s + "\n"))?;
    }
    Ok(())
}

fn classify(c: &Common) -> Result<i32, CliError> {
    let (surface, path) = load(c)?;
    let t = nt_classify(&path, &k_of(c)?, c.mode, budget(c.budget));
    let s = t.summary();
    let line = match &t {
        NTType::Periodic { order } => format!("periodic of order {order}"),
        NTType::PseudoAnosov { report, .. } => {
            format!("pseudo-Anosov, λ ≈ {}", report.lambda.as_deref().unwrap_or("?"))
        }
        NTType::Inconclusive { evidence, .. } => format!("inconclusive: {evidence}"),
    };
    println!("{surface} {}: {line}", input_name(c));
    emit(c.out.as_deref(), &json!({ "surface": surface, "length": path.len(), "result": s }))?;
    Ok(if matches!(t, NTType::Inconclusive { .. }) { EXIT_FAILURE } else { EXIT_OK })
}

fn certify(c: &Common, cert_out: Option<&Path>) -> Result<i32, CliError> {
    let (surface, path) = load(c)?;
    let g = generate(&path, &k_of(c)?, c.mode, budget(c.budget))?;
    let rep = verify(&path, &g.certificate, &g.params);
    let js = g.certificate.to_json();
    match cert_out {
        Some(p) => write(p, &(js + "\n"))?,
        None if c.out.is_none() => println!("{js}"),
        None => {}
    }
    println!(
        "{surface} {}: certificate {} (d1 = {}, t = {}, λ ≈ {})",
        input_name(c),
        if rep.accepted { "accepted" } else { "rejected" },
        g.params.d1,
        g.params.t,
        rep.lambda.as_deref().unwrap_or("?")
    );
    emit(c.out.as_deref(), &json!({ "surface": surface, "preperiod": g.n, "period": g.m, "report": rep }))?;
    Ok(if rep.accepted { EXIT_OK } else { EXIT_REJECTED })
}

#[derive(Serialize)]
struct TamperSummary {
    trials: usize,
    rejected: usize,
    seed: u64,
}

fn verify_one(path: &FlipPath, c: &Common, file: &Path) -> Result<VerificationReport, CliError> {
    let cert = Certificate::from_json(&read(file)?).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    Ok(verify_with(path, &cert, &k_of(c)?, c.mode)?)
}

fn verify_cmd(c: &Common, cert: &Path, tamper: usize, seed: u64) -> Result<i32, CliError> {
    let (_, path) = load(c)?;
    if cert.is_dir() {
        let mut files: Vec<PathBuf> = std::fs::read_dir(cert)
            .map_err(|e| CliError::Usage(format!("{}: {e}", cert.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        let reports: Vec<Result<VerificationReport, CliError>> = std::thread::scope(|s| {
            let hs: Vec<_> = files.iter().map(|f| s.spawn(|| verify_one(&path, c, f))).collect();
            hs.into_iter().map(|h| h.join().expect("verifier thread")).collect()
        });
        let mut all = true;
        let mut out = vec![];
        for (f, r) in files.iter().zip(reports) {
            let r = r?;
            println!("{}: {}", f.display(), status(&r));
            all &= r.accepted;
            out.push(json!({ "file": f.display().to_string(), "report": r }));
        }
        emit(c.out.as_deref(), &out)?;
        return Ok(if all { EXIT_OK } else { EXIT_REJECTED });
    }
    let parsed =
        Certificate::from_json(&read(cert)?).map_err(|e| CliError::Usage(format!("{}: {e}", cert.display())))?;
    let rep = verify_with(&path, &parsed, &k_of(c)?, c.mode)?;
    println!("{}", status(&rep));
    let mut ok = rep.accepted;
    let mut summary = None;
    if tamper > 0 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut rejected = 0;
        for _ in 0..tamper {
            let (bad, _, _) = parsed.tampered(rep.params.p1, &mut rng);
            if !verify(&path, &bad, &rep.params).accepted {
                rejected += 1;
            }
        }
        println!("tampered copies rejected: {rejected}/{tamper}");
        ok &= rejected == tamper;
        summary = Some(TamperSummary { trials: tamper, rejected, seed });
    }
    emit(c.out.as_deref(), &json!({ "report": rep, "tamper": summary }))?;
    Ok(if ok { EXIT_OK } else { EXIT_REJECTED })
}

fn status(r: &VerificationReport) -> String {
    if r.accepted {
        format!("accepted (λ ≈ {})", r.lambda.as_deref().unwrap_or("?"))
    } else {
        let st = r.stages.last();
        format!("rejected at {}: {}", r.failure.as_deref().unwrap_or("?"), st.map(|s| s.detail.as_str()).unwrap_or(""))
    }
}

/// Rows `step, max_measure, total_measure, filling` for `s^0 .. s^(n+m)`,
/// then footer rows.
fn split_seq(c: &Common) -> Result<i32, CliError> {
    let (_, path) = load(c)?;
    let b = budget(c.budget);
    let lam = stable_lamination(&path, b)?;
    let track = MeasuredTrainTrack::from_triangulation(path.start(), &lam.measures)?;
    let per = track.detect_periodicity(b).map_err(crate::Error::from)?;
    let mut csv = String::from("step,max_measure,total_measure,filling\n");
    for (i, t) in per.tracks.iter().enumerate() {
        let max = t.maximal_branches().first().and_then(|&e| t.measure(e).cloned());
        let max = max.map(|m| m.floor_decimal(20).to_string()).unwrap_or_default();
        let total = t.total_measure().map(|m| m.floor_decimal(20).to_string()).unwrap_or_default();
        writeln!(csv, "{i},{max},{total},{}", t.is_filling()).unwrap();
    }
    let z = path.zeta();
    let (hit, total) = per.branches_split_within(3 * z * per.m);
    writeln!(csv, "n,{}", per.n).unwrap();
    writeln!(csv, "m,{}", per.m).unwrap();
    writeln!(csv, "lambda,{}", lam.lambda.floor_decimal(20)).unwrap();
    writeln!(csv, "bound_2l,{}", 2 * path.len()).unwrap();
    writeln!(csv, "coverage_step,{}", 3 * z * per.m).unwrap();
    writeln!(csv, "coverage,{hit}/{total}").unwrap();
    match c.out.as_deref() {
        Some(p) => write(p, &csv)?,
        None => print!("{csv}"),
    }
    eprintln!("n = {}, m = {} (2ℓ = {}), branches split within 3ζm: {hit}/{total}", per.n, per.m, 2 * path.len());
    Ok(EXIT_OK)
}

fn conjugate(p: &FlipPath, q: &FlipPath, b: usize, out: Option<&Path>) -> Result<i32, CliError> {
    let (a, c) = std::thread::scope(|s| {
        let a = s.spawn(|| pa_invariant(p, b));
        let c = pa_invariant(q, b);
        (a.join().expect("invariant thread"), c)
    });
    let (a, c) = (a?, c?);
    let same = a == c;
    println!("{}", if same { "conjugate" } else { "not conjugate" });
    emit(out, &json!({ "conjugate": same, "invariant1": a, "invariant2": c }))?;
    Ok(if same { EXIT_OK } else { EXIT_REJECTED })
}
