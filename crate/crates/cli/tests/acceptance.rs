//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p flatfold-cli --test acceptance`.

use std::time::{Duration, Instant};

use flatfold::corpus::{
    kawasaki_corpus, non_sufficiency_witness, random_labelled_pattern, random_star,
};
use flatfold::oracle::{oracle_count, oracle_is_valid_with, oracle_run_is_valid, OracleConfig};
use flatfold::pattern::{
    check_pattern, curve_around_vertex, generalized_maekawa, reflection_trace, MaekawaOutcome,
    NECESSARY_ONLY,
};
use flatfold::vertex::{count_mv, find_runs, kawasaki, run_validity};
use flatfold::{AngleSequence, MvAssignment, MvLabel};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const CORPUS_SEED: u64 = 0xacce;
const CORPUS_SIZE: usize = 240;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn cli_json(args: &[&str]) -> Value {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["flatfold", "--format", "json"];
    argv.extend_from_slice(args);
    let code = flatfold_cli::run(argv, &mut out, &mut err);
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    serde_json::from_slice(&out).expect("json report")
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn right_angles() -> Outcome {
    let r = cli_json(&["count", "90,90,90,90"]);
    ensure(r["count"] == "8", format!("count {}", r["count"]))?;
    Ok("count = 8".into())
}

fn worked_example() -> Outcome {
    let r = cli_json(&["analyze", "20,10,40,50,60,60,60,60"]);
    let factors: Vec<&str> = r["trace"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["factor"].as_str().unwrap())
        .collect();
    ensure(r["count"] == "48", format!("count {}", r["count"]))?;
    ensure(factors == ["2", "3"], format!("factors {factors:?}"))?;
    ensure(r["base"] == "8", format!("base {}", r["base"]))?;
    let c = cli_json(&["count", "20,10,40,50,60,60,60,60"]);
    ensure(c["count"] == r["count"], "count and analyze disagree")?;
    Ok("count = 2·3·8 = 48".into())
}

fn worked_bounds() -> Outcome {
    let r = cli_json(&["analyze", "20,10,40,50,60,60,60,60"]);
    let lo: u64 = r["bounds"][0].as_str().unwrap().parse().unwrap();
    let hi: u64 = r["bounds"][1].as_str().unwrap().parse().unwrap();
    let count: u64 = r["count"].as_str().unwrap().parse().unwrap();
    ensure((lo, hi) == (16, 112), format!("bounds ({lo}, {hi})"))?;
    ensure(lo <= count && count <= hi, "count outside bounds")?;
    Ok(format!("{lo} <= {count} <= {hi}"))
}

fn quadrilaterals() -> Outcome {
    let cases: [(&[i64], u32); 3] = [
        (&[90, 90, 90, 90], 8),
        (&[100, 80, 80, 100], 6),
        (&[40, 60, 140, 120], 4),
    ];
    let mut seen = Vec::new();
    for (angles, expected) in cases {
        let v = AngleSequence::from_degrees(angles).unwrap();
        let fast = count_mv(&v).map_err(|e| e.to_string())?.count;
        let slow = oracle_count(&v).map_err(|e| e.to_string())?;
        ensure(
            fast == BigUint::from(expected) && slow == fast,
            format!("{v}: recursion {fast}, oracle {slow}"),
        )?;
        seen.push(fast.to_string());
    }
    Ok(format!(
        "counts {} by recursion and oracle",
        seen.join(" / ")
    ))
}

fn corpus() -> Vec<AngleSequence> {
    kawasaki_corpus(CORPUS_SEED, CORPUS_SIZE, &[2, 4, 6, 8])
}

fn oracle_equivalence(corpus: &[AngleSequence]) -> Outcome {
    ensure(corpus.len() >= 200, "corpus too small")?;
    ensure(
        corpus.iter().all(|v| v.is_exact() && kawasaki(v)),
        "corpus member fails Kawasaki",
    )?;
    let mut cones = 0;
    for v in corpus {
        let fast = count_mv(v).map_err(|e| e.to_string())?.count;
        let slow = oracle_count(v).map_err(|e| e.to_string())?;
        ensure(
            fast == slow,
            format!("{v}: recursion {fast}, oracle {slow}"),
        )?;
        cones += usize::from(v.kind() == flatfold::SequenceKind::Cone);
    }
    Ok(format!(
        "{} vertices ({cones} cones), 0 mismatches",
        corpus.len()
    ))
}

fn run_equivalence(corpus: &[AngleSequence]) -> Outcome {
    let mut runs = 0;
    let mut checks = 0;
    for v in corpus {
        let n = v.len();
        for run in find_runs(v) {
            runs += 1;
            let creases = run.creases(n);
            for mask in 0..1u64 << creases.len() {
                let mut labels = vec![MvLabel::Valley; n];
                let local: Vec<MvLabel> = (0..creases.len())
                    .map(|j| {
                        if mask >> j & 1 == 1 {
                            MvLabel::Mountain
                        } else {
                            MvLabel::Valley
                        }
                    })
                    .collect();
                for (&c, &l) in creases.iter().zip(&local) {
                    labels[c] = l;
                }
                let fast =
                    run_validity(v, &run, &MvAssignment::new(labels)).map_err(|e| e.to_string())?;
                let slow = oracle_run_is_valid(&v.angles()[run.start], run.len, &local)
                    .map_err(|e| e.to_string())?;
                ensure(
                    fast == slow,
                    format!("{v} run {run:?} labels {local:?}: {fast} vs {slow}"),
                )?;
                checks += 1;
            }
        }
    }
    ensure(runs > 0, "no runs in corpus")?;
    Ok(format!("{runs} runs, {checks} labellings, 0 mismatches"))
}

fn maekawa_necessity(corpus: &[AngleSequence]) -> Outcome {
    // No prefilter: every assignment goes through the layer search.
    let config = OracleConfig {
        maekawa_prefilter: false,
        ..OracleConfig::default()
    };
    let mut valid = 0;
    for v in corpus {
        for mask in 0..1u64 << v.len() {
            let mv = MvAssignment::from_mask(mask, v.len());
            if oracle_is_valid_with(v, &mv, &config).map_err(|e| e.to_string())? {
                ensure(
                    mv.tally().abs() == 2,
                    format!("{v} {mv}: M-V = {}", mv.tally()),
                )?;
                valid += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut odd = 0;
    for _ in 0..2000 {
        let degree = 2 * rng.gen_range(0..5) + 1;
        let mut angles: Vec<i64> = (0..degree).map(|_| rng.gen_range(1..120)).collect();
        // Force a flat total where possible so the sequence looks plausible.
        let rest: i64 = angles[1..].iter().sum();
        if rest < 360 {
            angles[0] = 360 - rest;
        }
        let v = AngleSequence::from_degrees(&angles).unwrap();
        ensure(!kawasaki(&v), format!("odd-degree {v} passes Kawasaki"))?;
        odd += 1;
    }
    Ok(format!(
        "{valid} oracle-valid assignments all have M-V = ±2; {odd} odd sequences all fail Kawasaki"
    ))
}

fn reflection_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut identity = 0;
    let total = 150;
    for i in 0..total {
        let degree = 4 + i % 5;
        let (angles, p) = random_star(&mut rng, degree, i % 2 == 0);
        let curve = curve_around_vertex(&p, 0).map_err(|e| e.to_string())?;
        let trace = reflection_trace(&p, &curve).map_err(|e| e.to_string())?;
        ensure(
            trace.is_identity() == kawasaki(&angles),
            format!("{angles}: deviation {}", trace.deviation),
        )?;
        identity += usize::from(trace.is_identity());
    }
    Ok(format!(
        "{total} stars of degree 4-8 ({identity} identity), 0 mismatches"
    ))
}

fn generalized_maekawa_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let total = 120;
    let mut interior = 0;
    for _ in 0..total {
        let p = random_labelled_pattern(&mut rng, 6);
        ensure(
            p.interior_vertices().count() <= 6,
            "too many interior vertices",
        )?;
        interior += p.interior_vertices().count();
        match generalized_maekawa(&p).map_err(|e| e.to_string())? {
            MaekawaOutcome::Evaluated { holds: true, .. } => {}
            other => return Err(format!("{other:?}")),
        }
    }
    Ok(format!(
        "{total} patterns ({interior} interior vertices), identity always holds"
    ))
}

fn witness() -> Outcome {
    let p = non_sufficiency_witness();
    let report = check_pattern(&p);
    ensure(
        report.all_necessary_checks_pass,
        "witness fails a local check",
    )?;
    ensure(
        report.scope == NECESSARY_ONLY && report.foldable.is_none(),
        "report claims foldability",
    )?;
    ensure(
        report
            .reflection_traces
            .iter()
            .all(|t| t.trace.as_ref().is_some_and(|t| t.is_identity())),
        "trace",
    )?;
    Ok(format!(
        "{} interior vertices pass Kawasaki and reflection traces; report is \"{}\"",
        report.kawasaki.len(),
        report.scope
    ))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("right-angle vertex count", Box::new(right_angles)),
        ("worked example count and trace", Box::new(worked_example)),
        ("worked example bounds", Box::new(worked_bounds)),
        ("quadrilateral counts", Box::new(quadrilaterals)),
        (
            "oracle equivalence",
            Box::new(|| oracle_equivalence(&corpus)),
        ),
        ("equal-run condition", Box::new(|| run_equivalence(&corpus))),
        ("Maekawa necessity", Box::new(|| maekawa_necessity(&corpus))),
        (
            "reflection trace vs Kawasaki",
            Box::new(reflection_equivalence),
        ),
        (
            "generalized Maekawa",
            Box::new(generalized_maekawa_identity),
        ),
        ("non-sufficiency witness", Box::new(witness)),
    ];
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        total += elapsed;
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{:.2?}]", i + 1, elapsed),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{:.2?}]", i + 1, elapsed);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        total
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
