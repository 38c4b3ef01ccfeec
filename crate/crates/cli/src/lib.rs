//! Command implementations behind the `ramanujan49` binary. Each command
//! produces a [`RunReport`]; rendering and exit codes live in `main.rs`.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use ramanujan49::classical::{verify_dissection7, verify_jacobi, verify_relations};
use ramanujan49::partition::{
    check_congruence, partition_numbers, sweep_two_color, verify_step1_mod49, CongruenceClaim,
    CongruenceReport, MOD49_RESIDUES, TWO_COLOR_FAMILIES,
};
use ramanujan49::symbolic::{det5, reduce, LaurentPoly, PolyMatrix};
use ramanujan49::witness::{
    progression_slot, table_columns, verify_theorem, verify_witness_7n5, Pipeline, TableSet,
};
use ramanujan49::{Error, Series};

pub const TOOL: &str = "ramanujan49";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Identities understood by `verify`, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Identity {
    Jacobi,
    Dissection7,
    Relations,
    Witness7n5,
    Step1mod49,
    Theorem19,
    Theorem33,
    Theorem40,
}

impl Identity {
    pub fn id(self) -> &'static str {
        match self {
            Identity::Jacobi => "jacobi",
            Identity::Dissection7 => "dissection7",
            Identity::Relations => "relations",
            Identity::Witness7n5 => "witness7n5",
            Identity::Step1mod49 => "step1mod49",
            Identity::Theorem19 => "theorem19",
            Identity::Theorem33 => "theorem33",
            Identity::Theorem40 => "theorem40",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CongruenceKind {
    #[value(name = "p-mod49")]
    PMod49,
    #[value(name = "two-color")]
    TwoColor,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub passed: bool,
    pub summary: String,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    /// Wall-clock seconds per check; only filled on request, since it makes
    /// the report non-reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
    pub passed: bool,
}

impl RunReport {
    fn new(command: &str, parameters: BTreeMap<String, Value>) -> Self {
        RunReport {
            tool: TOOL,
            version: VERSION,
            command: command.into(),
            parameters,
            checks: vec![],
            output: None,
            timings: None,
            passed: true,
        }
    }

    fn finish(mut self, timed: Vec<(CheckResult, f64)>, keep_timings: bool) -> Self {
        let mut timings = BTreeMap::new();
        for (c, secs) in timed {
            timings.insert(c.id.clone(), secs);
            self.checks.push(c);
        }
        self.passed = self.checks.iter().all(|c| c.passed);
        if keep_timings {
            self.timings = Some(timings);
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.tool, self.version, self.command)?;
        for (k, v) in &self.parameters {
            writeln!(f, "  {k} = {v}")?;
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", c.id, c.summary)?;
        }
        if let Some(t) = &self.timings {
            for (id, s) in t {
                writeln!(f, "  time {id}: {s:.3}s")?;
            }
        }
        write!(f, "overall: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}

/// Options shared by all commands.
#[derive(Debug, Clone, Default)]
pub struct Common {
    pub jobs: Option<usize>,
    pub timings: bool,
}

impl Common {
    /// Run `f` on a pool of the requested size.
    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.jobs {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64())
}

fn error_check(id: &str, e: Error) -> CheckResult {
    CheckResult {
        id: id.into(),
        passed: false,
        summary: format!("error: {e}"),
        detail: json!({ "error": e.to_string() }),
    }
}

fn agreement_summary(a: &ramanujan49::Agreement, order: usize) -> String {
    match a {
        ramanujan49::Agreement::Equal => format!("equal to order {order}"),
        ramanujan49::Agreement::Mismatch { index, left, right } => {
            format!("first mismatch at q^{index}: {left} vs {right}")
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn run_identity(id: Identity, tables: &TableSet, order: usize) -> CheckResult {
    let name = id.id();
    let res: Result<CheckResult, Error> = (|| {
        Ok(match id {
            Identity::Jacobi => {
                let a = verify_jacobi(order)?;
                CheckResult {
                    id: name.into(),
                    passed: a.is_equal(),
                    summary: agreement_summary(&a, order),
                    detail: to_value(&a),
                }
            }
            Identity::Dissection7 => {
                let a = verify_dissection7(order)?;
                CheckResult {
                    id: name.into(),
                    passed: a.is_equal(),
                    summary: agreement_summary(&a, order),
                    detail: to_value(&a),
                }
            }
            Identity::Relations => {
                let rels = verify_relations(order)?;
                let bad: Vec<usize> = (0..4)
                    .filter(|&i| !rels[i].is_equal())
                    .map(|i| i + 1)
                    .collect();
                CheckResult {
                    id: name.into(),
                    passed: bad.is_empty(),
                    summary: if bad.is_empty() {
                        format!("all four vanish to order {order}")
                    } else {
                        format!("relations {bad:?} fail")
                    },
                    detail: to_value(&rels.to_vec()),
                }
            }
            Identity::Witness7n5 => {
                let r = verify_witness_7n5(order)?;
                CheckResult {
                    id: name.into(),
                    passed: r.passed,
                    summary: format!(
                        "{}; constant term {}",
                        agreement_summary(&r.agreement, r.order),
                        r.constant_term
                    ),
                    detail: to_value(&r),
                }
            }
            Identity::Step1mod49 => {
                let r = verify_step1_mod49(order);
                CheckResult {
                    id: name.into(),
                    passed: r.passed,
                    summary: format!(
                        "mod 49: {}; vanishing at 2, 4, 5: {:?}",
                        agreement_summary(&r.mod49, r.order),
                        r.vanishing.iter().map(|&(_, ok)| ok).collect::<Vec<_>>()
                    ),
                    detail: to_value(&r),
                }
            }
            Identity::Theorem19 | Identity::Theorem33 | Identity::Theorem40 => {
                let r = match id {
                    Identity::Theorem19 => 19,
                    Identity::Theorem33 => 33,
                    _ => 40,
                };
                let rep = verify_theorem(r, tables, order)?;
                CheckResult {
                    id: name.into(),
                    passed: rep.passed,
                    summary: format!(
                        "{}; constant term {}",
                        agreement_summary(&rep.agreement, rep.order),
                        rep.constant_term
                    ),
                    detail: to_value(&rep),
                }
            }
        })
    })();
    res.unwrap_or_else(|e| error_check(name, e))
}

/// Identity ids in report order, duplicates removed. Empty means all.
pub fn normalize_ids(ids: &[Identity]) -> Vec<Identity> {
    let mut v: Vec<Identity> = if ids.is_empty() {
        Identity::value_variants().to_vec()
    } else {
        ids.to_vec()
    };
    v.sort();
    v.dedup();
    v
}

pub fn cmd_verify(ids: &[Identity], order: usize, tables: &TableSet, common: &Common) -> RunReport {
    let ids = normalize_ids(ids);
    let mut params = BTreeMap::new();
    params.insert("order".into(), json!(order));
    params.insert(
        "ids".into(),
        json!(ids.iter().map(|i| i.id()).collect::<Vec<_>>()),
    );
    let results: Vec<(CheckResult, f64)> = common.run(|| {
        ids.par_iter()
            .map(|&id| timed(|| run_identity(id, tables, order)))
            .collect()
    });
    RunReport::new("verify", params).finish(results, common.timings)
}

pub fn cmd_derive(
    ell: u32,
    residue: usize,
    order: usize,
    tables: &TableSet,
    common: &Common,
) -> RunReport {
    let mut params = BTreeMap::new();
    params.insert("ell".into(), json!(ell));
    params.insert("residue".into(), json!(residue));
    params.insert("order".into(), json!(order));
    let mut report = RunReport::new("derive", params);
    let (res, secs) = timed(|| {
        common.run(|| -> Result<_, Error> {
            let slot = progression_slot(ell, residue)?;
            let pipeline = Pipeline::new(ell)?;
            let d = pipeline.derive(slot, order)?;
            let cols = table_columns(&d, residue)?;
            Ok((d, cols))
        })
    });
    let mut checks = Vec::new();
    match res {
        Err(e) => checks.push((error_check("pipeline", e), secs)),
        Ok((d, cols)) => {
            let mut output = json!({
                "slot": d.residue_slot,
                "selected_column": d.selected_column,
                "f49_power": d.bookkeeping.f49_power(),
                "reduced_form": {
                    "q_power": d.symbolic.residue,
                    "poly": d.symbolic.poly.to_string(),
                    "terms": d.symbolic.poly.len(),
                },
                "derivation": serde_json::to_value(&d).expect("serializes"),
            });
            checks.push((
                CheckResult {
                    id: "pipeline".into(),
                    passed: true,
                    summary: format!(
                        "slot {} matched cofactor column {} ({} terms), series agree to order {}",
                        d.residue_slot,
                        d.selected_column,
                        d.symbolic.poly.len(),
                        d.order
                    ),
                    detail: json!({ "trials": serde_json::to_value(&d.trials).expect("serializes") }),
                },
                secs,
            ));
            if let Some((r, columns, values)) = cols {
                let mut emitted = Vec::new();
                let mut diffs = Vec::new();
                for (c, v) in columns.iter().zip(&values) {
                    emitted.push(json!({
                        "column": c.name(),
                        "values": v.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                    }));
                    let want = tables
                        .get(r)
                        .map(|t| t.column(*c).to_vec())
                        .unwrap_or_default();
                    for j in 0..want.len().max(v.len()) {
                        if want.get(j) != v.get(j) {
                            diffs.push(json!({
                                "column": c.name(), "j": j,
                                "table": want.get(j).map(BigInt::to_string),
                                "derived": v.get(j).map(BigInt::to_string),
                            }));
                        }
                    }
                }
                output["r"] = json!(r);
                output["columns"] = Value::Array(emitted);
                checks.push((
                    CheckResult {
                        id: format!("table{r}"),
                        passed: diffs.is_empty(),
                        summary: if diffs.is_empty() {
                            format!(
                                "{} and {} columns for r = {r} match the loaded tables",
                                columns[0], columns[1]
                            )
                        } else {
                            format!("{} entries differ from the loaded tables", diffs.len())
                        },
                        detail: json!({ "differences": diffs }),
                    },
                    0.0,
                ));
            } else {
                output["r"] = Value::Null;
            }
            report.output = Some(output);
        }
    }
    report.finish(checks, common.timings)
}

fn congruence_check(id: String, rep: &CongruenceReport) -> CheckResult {
    let summary = match rep.first_failure {
        None => format!(
            "{} values divisible by {}",
            rep.entries.len(),
            rep.claim.modulus
        ),
        Some(n) => {
            let e = &rep.entries[n];
            format!(
                "n = {n}: value {} has remainder {} mod {}",
                e.value, e.remainder, rep.claim.modulus
            )
        }
    };
    CheckResult {
        id,
        passed: rep.passed,
        summary,
        detail: serde_json::to_value(rep).expect("serializes"),
    }
}

pub fn cmd_congruence(
    kind: CongruenceKind,
    count: usize,
    residues: &[usize],
    color_steps: &[usize],
    common: &Common,
) -> RunReport {
    let mut params = BTreeMap::new();
    params.insert("count".into(), json!(count));
    let (checks, secs) = timed(|| -> Vec<CheckResult> {
        match kind {
            CongruenceKind::PMod49 => {
                params.insert("kind".into(), json!("p-mod49"));
                let residues = if residues.is_empty() {
                    MOD49_RESIDUES.to_vec()
                } else {
                    residues.to_vec()
                };
                params.insert("residues".into(), json!(residues));
                let claims: Result<Vec<_>, _> = residues
                    .iter()
                    .map(|&r| CongruenceClaim::new(49, 49, r, count))
                    .collect();
                let claims = match claims {
                    Ok(c) => c,
                    Err(e) => return vec![error_check("p-mod49", e)],
                };
                let top = claims
                    .iter()
                    .filter_map(CongruenceClaim::max_index)
                    .max()
                    .unwrap_or(0);
                let p = partition_numbers(top);
                claims
                    .iter()
                    .map(|c| match check_congruence(&p, c) {
                        Ok(rep) => congruence_check(format!("p(49n+{})", c.residue), &rep),
                        Err(e) => error_check(&format!("p(49n+{})", c.residue), e),
                    })
                    .collect()
            }
            CongruenceKind::TwoColor => {
                params.insert("kind".into(), json!("two-color"));
                let steps: Vec<usize> = if color_steps.is_empty() {
                    TWO_COLOR_FAMILIES.iter().map(|f| f.0).collect()
                } else {
                    color_steps.to_vec()
                };
                params.insert("color_steps".into(), json!(steps));
                if let Some(bad) = steps
                    .iter()
                    .find(|r| !TWO_COLOR_FAMILIES.iter().any(|f| f.0 == **r))
                {
                    return vec![error_check(
                        "two-color",
                        Error::IndexOutOfRange(format!(
                            "no two-color congruence for color step {bad}"
                        )),
                    )];
                }
                match sweep_two_color(count) {
                    Ok(reps) => reps
                        .iter()
                        .filter(|(r, _)| steps.contains(r))
                        .map(|(r, rep)| {
                            congruence_check(
                                format!("p_(1,{r})({}n+{})", rep.claim.step, rep.claim.residue),
                                rep,
                            )
                        })
                        .collect(),
                    Err(e) => vec![error_check("two-color", e)],
                }
            }
        }
    });
    let timed_checks = checks.into_iter().map(|c| (c, secs)).collect();
    RunReport::new("congruence", params).finish(timed_checks, common.timings)
}

/// Human-readable rendering of the tables.
pub fn tables_text(set: &TableSet) -> String {
    let mut out = String::new();
    for t in &set.tables {
        for c in ramanujan49::witness::Column::ALL {
            let (s, _) = ramanujan49::witness::schedule(t.r, c).expect("known residue");
            out.push_str(&format!(
                "{}_{} (F1^({}{:+}j) F2^({}{:+}j) F3^({}{:+}j))\n",
                c, t.r, s.f1[0], s.f1[1], s.f2[0], s.f2[1], s.f3[0], s.f3[1]
            ));
            for (j, v) in t.column(c).iter().enumerate() {
                out.push_str(&format!("  {j:>2}  {v}\n"));
            }
        }
    }
    for e in &set.errata {
        out.push_str(&format!(
            "erratum {}_{{{},{}}}: printed {}, value {}\n",
            e.column, e.r, e.j, e.printed, e.value
        ));
    }
    out
}

type Probe = fn(&mut StdRng) -> bool;

/// Randomized cross-checks of the kernels: series inversion, det5 against
/// cofactor expansion, and reduction against evaluation.
pub fn cmd_selfcheck(seed: u64, samples: usize, common: &Common) -> RunReport {
    let mut params = BTreeMap::new();
    params.insert("seed".into(), json!(seed));
    params.insert("samples".into(), json!(samples));
    let checks: Vec<(CheckResult, f64)> = common.run(|| {
        let kinds: [(&str, Probe); 3] = [
            ("series-inverse", |rng| {
                let order = 30;
                let mut v: Vec<i64> = (0..order).map(|_| rng.gen_range(-20..=20)).collect();
                v[0] = if rng.gen_bool(0.5) { 1 } else { -1 };
                let s = Series::from_i64s(order, &v);
                s.inverse()
                    .map(|i| i.mul(&s) == Series::one(order))
                    .unwrap_or(false)
            }),
            ("det5-laplace", |rng| {
                let rows: Vec<Vec<i64>> = (0..5)
                    .map(|_| (0..5).map(|_| rng.gen_range(-9..=9)).collect())
                    .collect();
                let m = PolyMatrix::from_integers(&rows);
                det5(&m).map(|d| d == m.determinant()).unwrap_or(false)
            }),
            ("reduce-eval", |rng| {
                let mut p = LaurentPoly::zero();
                for _ in 0..4 {
                    p = p.add(&LaurentPoly::mono(
                        rng.gen_range(-9..=9),
                        rng.gen_range(-3..=3),
                        rng.gen_range(-3..=3),
                        rng.gen_range(-2..=2),
                        rng.gen_range(0..20),
                    ));
                }
                let order = 80;
                match (
                    ramanujan49::symbolic::eval_poly(&p, order),
                    ramanujan49::symbolic::eval_poly(&reduce(&p).embed(), order),
                ) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => false,
                }
            }),
        ];
        kinds
            .par_iter()
            .enumerate()
            .map(|(k, &(id, f))| {
                timed(|| {
                    let mut rng = StdRng::seed_from_u64(seed.wrapping_add(k as u64));
                    let failures: Vec<usize> = (0..samples).filter(|_| !f(&mut rng)).collect();
                    CheckResult {
                        id: id.into(),
                        passed: failures.is_empty(),
                        summary: format!("{}/{} samples agree", samples - failures.len(), samples),
                        detail: json!({ "failed_samples": failures }),
                    }
                })
            })
            .collect()
    });
    RunReport::new("selfcheck", params).finish(checks, common.timings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_sorted_and_deduplicated() {
        let ids = normalize_ids(&[Identity::Theorem40, Identity::Jacobi, Identity::Theorem40]);
        assert_eq!(ids, vec![Identity::Jacobi, Identity::Theorem40]);
        assert_eq!(normalize_ids(&[]).len(), 8);
    }

    #[test]
    fn failing_check_fails_the_run() {
        let ok = CheckResult {
            id: "a".into(),
            passed: true,
            summary: String::new(),
            detail: Value::Null,
        };
        let bad = CheckResult {
            passed: false,
            id: "b".into(),
            ..ok.clone()
        };
        let r = RunReport::new("x", BTreeMap::new()).finish(vec![(ok, 0.0), (bad, 0.0)], false);
        assert!(!r.passed);
        assert!(r.timings.is_none());
        assert!(r.to_string().ends_with("overall: FAIL"));
    }
}
