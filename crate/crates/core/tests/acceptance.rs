//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every check is exact (integer equality); the only non-exact limits are the
//! wall-clock budgets below. The process exits non-zero if any criterion
//! fails other than by the documented misprints in the published tables.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use ramanujan49::classical::{verify_det_w, verify_dissection7, verify_jacobi, verify_relations};
use ramanujan49::partition::{
    partition_numbers, partition_series, sweep_p_mod49, sweep_two_color, two_color_numbers,
    MOD49_RESIDUES,
};
use ramanujan49::symbolic::{
    build_matrix_a, build_matrix_w, det5, matrix_power, reduce, LaurentPoly, PolyMatrix,
};
use ramanujan49::witness::{
    default_tables, derive_component, published_cf13, regenerate_tables, table_diff,
    verify_theorem, verify_witness_7n5, Column, RESIDUES, WORKING_ORDER,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const THEOREM_ORDER: usize = 300;
const THEOREM_BUDGET: Duration = Duration::from_secs(60);
/// Published integers across the three tables: 50 alpha, 10 beta, 102 gamma, 21 delta.
const TABLE_INTEGERS: usize = 183;
const DET_W_ORDER: usize = 700;
const DET5_SAMPLES: usize = 100;
const DET5_SEED: u64 = 0x5eed_0005;
const CLASSICAL_ORDER: usize = 1000;
const WITNESS_7N5_ORDER: usize = 500;
const MOD49_COUNT: usize = 200;
const SWEEP_BUDGET: Duration = Duration::from_secs(10);
const TWO_COLOR_COUNT: usize = 100;
const ORACLE_PARTITION_MAX: usize = 5000;
const BRUTE_MAX: usize = 10;

enum Outcome {
    Pass(String),
    Fail(String),
    /// Failed, but exactly as documented.
    KnownFail(String),
}

fn criterion_1() -> Outcome {
    let tables = default_tables();
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for r in RESIDUES {
        match verify_theorem(r, &tables, THEOREM_ORDER) {
            Ok(rep) if rep.passed => notes.push(format!("r={r} ok")),
            Ok(rep) => {
                ok = false;
                notes.push(format!("r={r} {:?}", rep.agreement));
            }
            Err(e) => {
                ok = false;
                notes.push(format!("r={r} error {e}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let detail = format!(
        "witness identities to order {THEOREM_ORDER} ({}), {:.1}s of {}s budget",
        notes.join(", "),
        elapsed.as_secs_f64(),
        THEOREM_BUDGET.as_secs()
    );
    if ok && elapsed < THEOREM_BUDGET {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn criterion_2() -> Outcome {
    let shipped = default_tables();
    let regenerated = match regenerate_tables() {
        Ok(t) => t,
        Err(e) => return Outcome::Fail(format!("regeneration failed: {e}")),
    };
    let count: usize = regenerated
        .iter()
        .map(|t| {
            Column::ALL
                .iter()
                .map(|&c| t.column(c).len())
                .sum::<usize>()
        })
        .sum();
    let printed = shipped.as_printed();
    let diffs = table_diff(&printed, &regenerated);
    let lock = regenerated == shipped.tables;
    let mut detail = format!(
        "{}/{} printed integers reproduced; regenerated == shipped data file: {}",
        count - diffs.len(),
        TABLE_INTEGERS,
        lock
    );
    for (r, c, j, p, v) in &diffs {
        detail.push_str(&format!("; {c}_{{{r},{j}}} printed {p}, derived {v}"));
    }
    if count != TABLE_INTEGERS || !lock {
        return Outcome::Fail(detail);
    }
    if diffs.is_empty() {
        return Outcome::Pass(detail);
    }
    // Red unless every difference is a listed erratum.
    let documented = diffs.len() == shipped.errata.len()
        && diffs.iter().all(|(r, c, j, p, v)| {
            shipped.errata.iter().any(|e| {
                e.r == *r && e.column == *c && e.j == *j && &e.printed == p && &e.value == v
            })
        });
    if documented {
        Outcome::KnownFail(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn criterion_3() -> Outcome {
    let d = match derive_component(4, 2, WORKING_ORDER) {
        Ok(d) => d,
        Err(e) => return Outcome::Fail(format!("derivation failed: {e}")),
    };
    let published = reduce(&published_cf13()).component(2);
    // term for term: same residue, same monomials, same coefficients
    let same = d.symbolic == published;
    let sevens = d
        .symbolic
        .poly
        .terms()
        .all(|(_, c)| c % BigInt::from(7) == BigInt::from(0));
    let detail = format!(
        "reduced CF_(1,3): q^{} grading, {} monomials, all divisible by 7: {}, f49 power {}, column {}",
        d.symbolic.residue,
        d.symbolic.poly.len(),
        sevens,
        d.bookkeeping.f49_power(),
        d.selected_column
    );
    if same && sevens && d.symbolic.poly.len() == 20 && d.bookkeeping.f49_power() == 24 {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn criterion_4() -> Outcome {
    let w4 = matrix_power(&build_matrix_w(), 4).map(|m| m == build_matrix_a());
    let det_w = verify_det_w(DET_W_ORDER).map(|r| r.agreement.is_equal());
    let mut rng = StdRng::seed_from_u64(DET5_SEED);
    let mut det5_ok = 0;
    for _ in 0..DET5_SAMPLES {
        let m: Vec<Vec<i64>> = (0..5)
            .map(|_| (0..5).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        if det5(&PolyMatrix::from_integers(&m)).ok()
            == Some(LaurentPoly::constant(common::leibniz(&m)))
        {
            det5_ok += 1;
        }
    }
    let detail = format!(
        "W^4 = A: {w4:?}, Det(W) f49^8 = f7^8 to order {DET_W_ORDER}: {det_w:?}, det5 = Leibniz on {det5_ok}/{DET5_SAMPLES}"
    );
    if w4 == Ok(true) && det_w == Ok(true) && det5_ok == DET5_SAMPLES {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn criterion_5() -> Outcome {
    let jacobi = verify_jacobi(CLASSICAL_ORDER).map(|a| a.is_equal());
    let dissection = verify_dissection7(CLASSICAL_ORDER).map(|a| a.is_equal());
    let relations = verify_relations(CLASSICAL_ORDER).map(|a| a.iter().all(|x| x.is_equal()));
    let w7n5 = verify_witness_7n5(WITNESS_7N5_ORDER).map(|r| r.passed);
    let detail = format!(
        "Jacobi {jacobi:?}, 7-dissection {dissection:?}, relations {relations:?} to order {CLASSICAL_ORDER}; 7n+5 witness {w7n5:?} to order {WITNESS_7N5_ORDER}"
    );
    if [jacobi, dissection, relations, w7n5]
        .iter()
        .all(|x| *x == Ok(true))
    {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mod49 = sweep_p_mod49(&MOD49_RESIDUES, MOD49_COUNT);
    let elapsed = start.elapsed();
    let two = sweep_two_color(TWO_COLOR_COUNT);
    let (m_ok, m_n) = match &mod49 {
        Ok(v) => (v.iter().all(|r| r.passed), v.len()),
        Err(_) => (false, 0),
    };
    let (t_ok, t_n) = match &two {
        Ok(v) => (v.iter().all(|(_, r)| r.passed), v.len()),
        Err(_) => (false, 0),
    };
    let detail = format!(
        "p(49n+r) = 0 mod 49 for {m_n} residues, n < {MOD49_COUNT}: {m_ok} ({:.2}s of {}s budget); {t_n} two-color progressions, n < {TWO_COLOR_COUNT}: {t_ok}",
        elapsed.as_secs_f64(),
        SWEEP_BUDGET.as_secs()
    );
    if m_ok && m_n == 3 && t_ok && t_n == 10 && elapsed < SWEEP_BUDGET {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn criterion_7() -> Outcome {
    let rec = partition_numbers(ORACLE_PARTITION_MAX);
    let series = partition_series(ORACLE_PARTITION_MAX + 1).into_coeffs();
    let partitions = rec == series;
    let mut brute_ok = true;
    for r in 1..=5 {
        let fast = two_color_numbers(r, BRUTE_MAX);
        for (n, v) in fast.iter().enumerate() {
            if *v != BigInt::from(common::two_color_brute(r, n)) {
                brute_ok = false;
            }
        }
    }
    let detail = format!(
        "recurrence = series inverse for n <= {ORACLE_PARTITION_MAX}: {partitions}; two-color = enumeration for r <= 5, n <= {BRUTE_MAX}: {brute_ok}"
    );
    if partitions && brute_ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn main() {
    type Criterion = fn() -> Outcome;
    let criteria: [(&str, Criterion); 7] = [
        ("theorem reproduction", criterion_1),
        ("table regeneration", criterion_2),
        ("CF regression", criterion_3),
        ("structural identities", criterion_4),
        ("classical identities", criterion_5),
        ("congruence sweeps", criterion_6),
        ("oracle agreement", criterion_7),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Outcome::Pass(d) => println!("PASS criterion {} ({name}): {d}", i + 1),
            Outcome::Fail(d) => {
                unexpected += 1;
                println!("FAIL criterion {} ({name}): {d}", i + 1);
            }
            Outcome::KnownFail(d) => {
                println!(
                    "FAIL criterion {} ({name}) [known misprints, see errata]: {d}",
                    i + 1
                )
            }
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
