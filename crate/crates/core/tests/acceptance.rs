//! Acceptance run: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use macqt_core::clear_caches;
use macqt_core::hspace::{m_table, oracle_m_table, set_cache_dir};
use macqt_core::verify::{self, Check};

const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const TABLEAU_BUDGET: Duration = Duration::from_secs(120);
const SUMS_BUDGET: Duration = Duration::from_secs(60);
const BH_N10_BUDGET: Duration = Duration::from_secs(600);
const MIN_SPEEDUP_AT_6: f64 = 10.0;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_checks(checks: Vec<Check>, budget: Option<Duration>, elapsed: Duration) -> Outcome {
    let mut detail: Vec<String> = Vec::new();
    let mut passed = true;
    for c in &checks {
        if !c.passed {
            passed = false;
            detail.push(c.to_string());
        }
    }
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push(format!(
                "took {:.1}s, budget {}s",
                elapsed.as_secs_f64(),
                b.as_secs()
            ));
        }
    }
    Outcome {
        passed,
        detail: detail.join("; "),
    }
}

fn timed(budget: Option<Duration>, body: impl FnOnce() -> Vec<Check>) -> (Outcome, Duration) {
    let start = Instant::now();
    let checks = body();
    let elapsed = start.elapsed();
    (from_checks(checks, budget, elapsed), elapsed)
}

fn benchmark() -> (Outcome, Duration) {
    set_cache_dir(None);
    let start = Instant::now();

    clear_caches();
    let t = Instant::now();
    let bh6 = m_table(6);
    let bh6_time = t.elapsed();

    clear_caches();
    let t = Instant::now();
    let oracle6 = oracle_m_table(6);
    let oracle6_time = t.elapsed();

    clear_caches();
    let t = Instant::now();
    let table10 = m_table(10);
    let bh10_time = t.elapsed();

    let speedup = oracle6_time.as_secs_f64() / bh6_time.as_secs_f64().max(1e-9);
    let mut problems = Vec::new();
    match oracle6 {
        Ok(o) if &o == bh6.as_ref() => {}
        Ok(_) => problems.push("oracle and bh tables differ at n=6".to_string()),
        Err(e) => problems.push(format!("oracle failed: {e}")),
    }
    if table10.len() != 42 * 42 {
        problems.push(format!("n=10 table has {} entries", table10.len()));
    }
    if bh10_time > BH_N10_BUDGET {
        problems.push(format!("n=10 took {:.1}s", bh10_time.as_secs_f64()));
    }
    if speedup < MIN_SPEEDUP_AT_6 {
        problems.push(format!("speedup {speedup:.1}x below {MIN_SPEEDUP_AT_6}x"));
    }
    let summary = format!(
        "bh n=6 {:.3}s, oracle n=6 {:.3}s ({speedup:.0}x), bh n=10 {:.1}s",
        bh6_time.as_secs_f64(),
        oracle6_time.as_secs_f64(),
        bh10_time.as_secs_f64()
    );
    let passed = problems.is_empty();
    let detail = if passed {
        summary
    } else {
        format!("{summary}; {}", problems.join("; "))
    };
    (Outcome { passed, detail }, start.elapsed())
}

fn main() -> ExitCode {
    set_cache_dir(None);
    type Criterion = (&'static str, Box<dyn FnOnce() -> (Outcome, Duration)>);
    let criteria: Vec<Criterion> = vec![
        ("oracle equivalence, n <= 5", Box::new(|| timed(Some(ORACLE_BUDGET), || vec![verify::oracle_agreement(5)]))),
        (
            "tableau sums equal the M tables, n <= 6",
            Box::new(|| timed(Some(TABLEAU_BUDGET), || vec![verify::tableau_tables(6), verify::tableau_skews(6)])),
        ),
        ("weighted Pieri sum rules, |mu| <= 8, k <= 3", Box::new(|| timed(Some(SUMS_BUDGET), || vec![verify::sum_rules(8, 3)]))),
        ("raw and cancelled Pieri coefficients, |mu| <= 8", Box::new(|| timed(None, || vec![verify::raw_pieri(8)]))),
        (
            "c/d duality |mu| <= 8, corner identities |mu| <= 12",
            Box::new(|| timed(None, || vec![verify::duality(8), verify::corner_identities(12)])),
        ),
        (
            "[nabla^-k e1^perp nabla^k, e1] eigenvalues, k <= 3, |mu| <= 5",
            Box::new(|| timed(None, || vec![verify::nabla_skew_commutator(5, 3)])),
        ),
        (
            "(1/M)[Q_(b,-1), Q_(a,1)] independent of the split, sign of the reversed order, m <= 3, degree <= 4",
            Box::new(|| timed(None, || vec![verify::bracket_independence(4, 3), verify::reversed_bracket_sign(4, 3)])),
        ),
        ("[D_a, D_b^*] commutator, a+b in 1..=3, degree <= 3", Box::new(|| timed(None, || vec![verify::mixed_commutator(3)]))),
        ("D_k = Q_(1,k), k <= 3, degree <= 4", Box::new(|| timed(None, || vec![verify::d_bridge(4, 3)]))),
        (
            "Q_(2,2), Q_(4,2), Q_(3,3) split choices agree; Q_(2,2) multiplicative form, degree <= 3",
            Box::new(|| timed(None, || vec![verify::split_choices(3), verify::diagonal_routes(3, 2)])),
        ),
        ("tableau formula for Q_(m,n)(-1)^n, n <= 3, m <= 5", Box::new(|| timed(None, || vec![verify::constant_routes(5, 3)]))),
        ("e_n[X/M] has coefficients 1/w_mu, n <= 6", Box::new(|| timed(None, || vec![verify::e_n_over_m(6)]))),
        ("M table polynomial, nonnegative, first row 1, n <= 7", Box::new(|| timed(None, || vec![verify::table_positivity(7)]))),
        ("benchmark: bh n = 10 within 10 min, >= 10x oracle at n = 6", Box::new(benchmark)),
        (
            "down involution and D_k / D_k^* commutation rows, degree <= 4",
            Box::new(|| {
                timed(None, || {
                    vec![
                        verify::down_involution(4),
                        verify::raising_lowering_rows(4),
                        verify::nabla_conjugation_rows(4),
                    ]
                })
            }),
        ),
    ];
    let mut failures = 0;
    for (i, (label, body)) in criteria.into_iter().enumerate() {
        let (outcome, elapsed) = body();
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "[{tag}] {:>2}. {label} ({:.2}s)",
            i + 1,
            elapsed.as_secs_f64()
        );
        if !outcome.detail.is_empty() {
            line.push_str(&format!(" -- {}", outcome.detail));
        }
        println!("{line}");
        if !outcome.passed {
            failures += 1;
        }
    }
    println!("acceptance: {} of 15 criteria passed", 15 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
