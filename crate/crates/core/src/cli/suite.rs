//! `covsum suite`: every corpus instance plus the seeded property checks,
//! summarised per acceptance criterion.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::arith::{binom_criterion, Field, Integers, PrimeField, Rationals};
use crate::error::{Error, Result};
use crate::poly::{coeff_by_subsets, escott_sum};
use crate::subsets::indices_of;

use super::generate::random_poly;
use super::instances::Theorem;
use super::report::{digest, RunReport, Status};
use super::verify_value;

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub file: String,
    pub status: Status,
    pub payload: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremSummary {
    pub theorem: &'static str,
    pub instances: usize,
    pub verified: usize,
    /// `None` unless run with the oracle.
    pub oracle_agrees: Option<bool>,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub status: &'static str,
    pub detail: String,
}

impl Criterion {
    fn passed(&self) -> bool {
        self.status != "fail"
    }
}

fn corpus_files(dir: &Path, theorem: Theorem) -> Result<Vec<PathBuf>> {
    let sub = dir.join(theorem.name());
    if !sub.is_dir() {
        return Ok(vec![]);
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(&sub)
        .map_err(|e| Error::invalid(format!("{}: {e}", sub.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

fn run_theorem(dir: &Path, theorem: Theorem, files: &[PathBuf], oracle: bool) -> TheoremSummary {
    let mut summary =
        TheoremSummary { theorem: theorem.name(), instances: files.len(), verified: 0, oracle_agrees: None, failures: vec![] };
    for path in files {
        let rel = path.strip_prefix(dir).unwrap_or(path).display().to_string();
        let report = match std::fs::read_to_string(path) {
            Ok(text) => match serde_json::from_str::<Value>(&text) {
                Ok(v) => verify_value(theorem, &v, oracle),
                Err(e) => RunReport::failure(&format!("verify {}", theorem.name()), None, &Error::parse(e.to_string())),
            },
            Err(e) => RunReport::failure(&format!("verify {}", theorem.name()), None, &Error::invalid(e.to_string())),
        };
        if oracle {
            let agrees = report.payload.get("oracle_agrees").and_then(Value::as_bool).unwrap_or(false);
            summary.oracle_agrees = Some(summary.oracle_agrees.unwrap_or(true) && agrees);
        }
        if report.status == Status::Verified {
            summary.verified += 1;
        } else {
            summary.failures.push(Failure { file: rel, status: report.status, payload: report.payload });
        }
    }
    summary
}

fn property(id: u32, name: &'static str, check: impl FnOnce() -> std::result::Result<String, String>) -> Criterion {
    let (status, detail) = match check() {
        Ok(d) => ("pass", d),
        Err(d) => ("fail", d),
    };
    Criterion { id, name, status, detail }
}

fn subset_formula_trials<F: Field>(f: &F, rng: &mut ChaCha8Rng, trials: usize) -> std::result::Result<usize, String> {
    for _ in 0..trials {
        let k = rng.gen_range(1..=8);
        let j: Vec<usize> = indices_of(rng.gen_range(0..1u64 << k));
        let deg = rng.gen_range(0..=j.len());
        let terms = rng.gen_range(1..8);
        let poly = random_poly(f, rng, k, Some(deg), terms);
        let mut e = vec![0u32; k];
        for &s in &j {
            e[s] = 1;
        }
        let direct = poly.coeff(&e).map_err(|e| e.to_string())?;
        let via = coeff_by_subsets(&poly, &j).map_err(|e| e.to_string())?;
        if direct != via {
            return Err(format!("mismatch for J = {j:?} on {poly:?}"));
        }
    }
    Ok(trials)
}

fn subset_formula() -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut total = subset_formula_trials(&Rationals, &mut rng, 200)?;
    for p in [2, 3, 5, 7] {
        total += subset_formula_trials(&PrimeField::new(p).expect("prime"), &mut rng, 200)?;
    }
    Ok(format!("{total} polynomials"))
}

fn escott() -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for k in 1..=10 {
        for _ in 0..5 {
            let c: Vec<BigInt> = (0..k).map(|_| BigInt::from(rng.gen_range(-50..=50))).collect();
            for n in 0..k as u32 {
                let s = escott_sum(&Integers, &c, n).map_err(|e| e.to_string())?;
                if !s.is_zero() {
                    return Err(format!("nonzero sum {s} for n = {n}, c = {c:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} sums"))
}

/// `C(a−1, r)` for any integer `a`, as a falling factorial over `r!`.
fn binomial_signed(top: i64, r: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r as i64 {
        num *= top - i;
        den *= i + 1;
    }
    num / den
}

fn binomial_criterion() -> std::result::Result<String, String> {
    let mut checked = 0;
    for p in [2u64, 3, 5, 7] {
        for h in 1..=3u32 {
            let q = p.pow(h);
            for a in -200i64..=200 {
                let got = binom_criterion(a, p, h).map_err(|e| e.to_string())?;
                let iverson = u64::from(a.rem_euclid(q as i64) == 0);
                let big = binomial_signed(a - 1, q - 1) % BigInt::from(p);
                let big = if big < BigInt::zero() { big + BigInt::from(p) } else { big };
                if got != iverson || big != BigInt::from(iverson) {
                    return Err(format!("a = {a}, p = {p}, h = {h}: got {got}, binomial {big}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} values"))
}

fn from_corpus(id: u32, name: &'static str, summaries: &BTreeMap<Theorem, TheoremSummary>, of: &[Theorem]) -> Criterion {
    let picked: Vec<&TheoremSummary> = of.iter().filter_map(|t| summaries.get(t)).collect();
    let instances: usize = picked.iter().map(|s| s.instances).sum();
    let verified: usize = picked.iter().map(|s| s.verified).sum();
    let status = if instances == 0 {
        "skipped"
    } else if verified == instances {
        "pass"
    } else {
        "fail"
    };
    Criterion { id, name, status, detail: format!("{verified}/{instances} instances verified") }
}

/// Runs every corpus directory under `dir` (one per theorem) and the seeded
/// property checks.
pub fn run_suite(dir: &Path, oracle: bool) -> Result<RunReport> {
    let mut found = Vec::new();
    for theorem in Theorem::ALL {
        let files = corpus_files(dir, theorem)?;
        if !files.is_empty() {
            found.push((theorem, files));
        }
    }
    if found.is_empty() {
        return Err(Error::invalid(format!("missing corpus: no instances under {}", dir.display())));
    }
    let mut digests = BTreeMap::new();
    for (_, files) in &found {
        for f in files {
            let text = std::fs::read_to_string(f).unwrap_or_default();
            let parsed = serde_json::from_str(&text).unwrap_or(Value::String(text));
            let key = f.strip_prefix(dir).unwrap_or(f).display().to_string();
            digests.insert(key, Value::from(digest(&parsed)));
        }
    }

    let mut summaries = BTreeMap::new();
    for (theorem, files) in &found {
        summaries.insert(*theorem, run_theorem(dir, *theorem, files, oracle));
    }

    let mut criteria = vec![
        property(1, "subset-evaluation coefficient formula", subset_formula),
        property(2, "alternating power sums vanish", escott),
        property(3, "binomial divisibility criterion", binomial_criterion),
        from_corpus(4, "progression of nonvanishing assignments", &summaries, &[Theorem::T21]),
        from_corpus(5, "prescribed subset sums mod p", &summaries, &[Theorem::C22]),
        from_corpus(6, "all residues from subset sums", &summaries, &[Theorem::C25]),
        from_corpus(7, "character-sum identity", &summaries, &[Theorem::L41]),
        from_corpus(8, "zero-sum congruence", &summaries, &[Theorem::T32]),
        from_corpus(9, "fixed-size zero-sum counts", &summaries, &[Theorem::C33, Theorem::Kemnitz]),
        from_corpus(10, "unit-fraction subset counts", &summaries, &[Theorem::S10count]),
    ];
    let agree = summaries.values().all(|s| s.oracle_agrees != Some(false));
    criteria.push(Criterion {
        id: 11,
        name: "optimized and naive paths agree",
        status: if !oracle {
            "skipped"
        } else if agree {
            "pass"
        } else {
            "fail"
        },
        detail: if oracle { format!("{} instances", digests.len()) } else { "run with --oracle".into() },
    });

    let all_verified = summaries.values().all(|s| s.failures.is_empty());
    let status = if all_verified && criteria.iter().all(Criterion::passed) { Status::Verified } else { Status::Counterexample };
    Ok(RunReport {
        command: "suite".into(),
        digest: digest(&Value::Object(digests.into_iter().collect())),
        status,
        payload: serde_json::json!({
            "oracle": oracle,
            "criteria": criteria,
            "theorems": summaries.values().collect::<Vec<_>>(),
        }),
    })
}

