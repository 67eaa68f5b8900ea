//! Acceptance checks. Each test prints one `criterion N: PASS|FAIL` line and
//! fails on any mismatch. All comparisons are exact.

use std::io::Write;
use std::process::Command;

use bcnqkit::cli::{self, JobSpec, Suite};
use bcnqkit::closedforms::{
    closed_evaluation, closed_norm, verify_terminating_series, ClosedFormRequest, SeriesIdentity,
};
use bcnqkit::combinatorics::{partitions_up_to, verify_q_factorial_identity};
use bcnqkit::dimensions::{
    complex_dim, generalized_dim_fundamental, generalized_dim_product, generalized_dim_via_little,
    geometric_sum_sides, natural_embedding, padic_dim_closed, padic_fundamental, padic_projective,
    padic_sum_sides, padicfor, q0_factors, q_dim_schur, q_weyl_dim, q_weyl_product, quantum_dim,
    quantum_dim_via_little, quantum_fundamental, quantum_product, weyl_dim,
};
use bcnqkit::exactalg::{rat, sample_generic_params, substitute_geometric_point, PointKind};
use bcnqkit::ops_polys::{eigenvalue, Eigenbasis, Operator};
use bcnqkit::{Family, ParamPoint, Partition, Rat};

const SEEDS: [u64; 3] = [1, 2, 3];

// written to the raw stdout handle so the verdict shows without --nocapture
fn conclude(criterion: u32, what: &str, cases: usize, failures: &[String]) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "criterion {criterion}: {verdict} {what} ({cases} cases, {} failed)", failures.len()).unwrap();
    for f in failures.iter().take(10) {
        writeln!(out, "  {f}").unwrap();
    }
    drop(out);
    assert!(failures.is_empty(), "criterion {criterion} failed");
}

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { cases: 0, failures: Vec::new() }
    }

    fn equal(&mut self, label: impl FnOnce() -> String, lhs: bcnqkit::Result<Rat>, rhs: bcnqkit::Result<Rat>) {
        self.cases += 1;
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => {}
            (l, r) => self.failures.push(format!("{}: {l:?} vs {r:?}", label())),
        }
    }

    fn holds(&mut self, label: impl FnOnce() -> String, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures.push(label());
        }
    }
}

/// `(n, largest weight)` pairs for the polynomial criteria.
const POLY_RANGES: [(usize, u64); 3] = [(1, 4), (2, 4), (3, 3)];

fn sampled(seed: u64, family: Family, bound: &Partition) -> ParamPoint {
    sample_generic_params(seed, family, bound).expect("sampling succeeds").params
}

#[test]
fn criterion_1_eigenfunctions_and_unitriangularity() {
    let mut tally = Tally::new();
    for family in Family::ALL {
        for (n, w) in POLY_RANGES {
            for seed in SEEDS {
                let params = sampled(seed, family, &Partition::new(&[w as u32], n).unwrap());
                let mut basis = Eigenbasis::new(family, &params, n).unwrap();
                let operator = Operator::new(family, &params, n).unwrap();
                for lambda in partitions_up_to(n, w, w as u32) {
                    let label = || format!("{family} n={n} seed={seed} λ={lambda}");
                    let p = basis.polynomial(&lambda).unwrap();
                    let e = eigenvalue(family, &lambda, &params).unwrap();
                    tally.holds(label, operator.apply(&p).unwrap() == p.scale(&e));
                    tally.holds(
                        || format!("{family} n={n} seed={seed} λ={lambda} not monic"),
                        p.leading() == Some((&lambda, &Rat::one())),
                    );
                }
            }
        }
    }
    conclude(1, "D·P_λ = E_λ·P_λ and P_λ monic", tally.cases, &tally.failures);
}

#[test]
fn criterion_2_evaluation_formulas() {
    let mut tally = Tally::new();
    for family in Family::ALL {
        for (n, w) in POLY_RANGES {
            for seed in SEEDS {
                let params = sampled(seed, family, &Partition::new(&[w as u32], n).unwrap());
                let mut basis = Eigenbasis::new(family, &params, n).unwrap();
                for lambda in partitions_up_to(n, w, w as u32) {
                    let p = basis.polynomial(&lambda).unwrap();
                    for &point in PointKind::admissible(family) {
                        let coords = substitute_geometric_point(point, &params, n, 0).unwrap();
                        let req = ClosedFormRequest::evaluation(point, lambda.clone(), params.clone());
                        tally.equal(
                            || format!("{family} n={n} seed={seed} λ={lambda} at {point}"),
                            p.eval(&coords),
                            closed_evaluation(&req),
                        );
                    }
                }
            }
        }
    }
    conclude(2, "evaluations at the special points", tally.cases, &tally.failures);
}

#[test]
fn criterion_3_orthogonality_and_norms() {
    let mut tally = Tally::new();
    for family in Family::ALL {
        for n in 1..=2usize {
            for seed in SEEDS {
                let params = sampled(seed, family, &Partition::new(&[6], n).unwrap());
                let mut basis = Eigenbasis::new(family, &params, n).unwrap();
                let lambdas = partitions_up_to(n, 3, 3);
                let polys: Vec<_> = lambdas.iter().map(|l| basis.polynomial(l).unwrap()).collect();
                for (i, lambda) in lambdas.iter().enumerate() {
                    for (j, mu) in lambdas.iter().enumerate().take(i + 1) {
                        let expected = if i == j {
                            closed_norm(&ClosedFormRequest::norm(lambda.clone(), params.clone()))
                        } else {
                            Ok(Rat::zero())
                        };
                        tally.equal(
                            || format!("{family} n={n} seed={seed} ⟨P_{lambda}, P_{mu}⟩"),
                            basis.inner_product(&polys[i], &polys[j]),
                            expected,
                        );
                    }
                }
            }
        }
    }
    conclude(3, "⟨P_λ, P_μ⟩ = δ·N(λ)", tally.cases, &tally.failures);
}

#[test]
fn criterion_4_generalized_dimension_paths() {
    let mut tally = Tally::new();
    for n in 1..=3usize {
        for seed in SEEDS {
            let p = sampled(seed, Family::Little, &Partition::new(&[4], n).unwrap());
            let (a, b) = (&p.q * &p.a, &p.q * &p.b);
            for lambda in partitions_up_to(n, 4, 4) {
                let label = || format!("n={n} seed={seed} λ={lambda}");
                let product = generalized_dim_product(&lambda, &a, &b, &p.q, &p.t);
                tally.equal(label, generalized_dim_via_little(&lambda, &a, &b, &p.q, &p.t), product.clone());
                if lambda.parts().iter().all(|&x| x == 1) {
                    tally.equal(
                        || format!("n={n} seed={seed} ω_{}", lambda.len()),
                        generalized_dim_fundamental(lambda.len(), n, &a, &b, &p.q, &p.t),
                        product,
                    );
                }
            }
        }
    }
    conclude(4, "little q-Jacobi ratio = product form = fundamental form", tally.cases, &tally.failures);
}

#[test]
fn criterion_5_padic_stack() {
    let mut tally = Tally::new();
    let ts = [rat(1, 2), rat(1, 3), rat(2, 7)];
    for t in &ts {
        let reciprocal_prime = t.numer() == &1.into();
        for n in 1..=3usize {
            for d in 2 * n..=8 {
                let a = t.pow((d - 2 * n + 1) as i64);
                for lambda in partitions_up_to(n, 5, 5) {
                    let label = || format!("t={t} n={n} d={d} λ={lambda}");
                    let closed = padic_dim_closed(&lambda, t, d);
                    tally.equal(label, generalized_dim_product(&lambda, &a, t, &Rat::zero(), t), closed.clone());
                    tally.equal(label, q0_factors(&lambda, &a, t, t), closed.clone());
                    tally.equal(label, padicfor(&lambda, &a, t, t), closed.clone());
                    if reciprocal_prime {
                        let v = closed.as_ref().unwrap();
                        tally.holds(|| format!("{} not a positive integer", label()), v.is_integer() && v.is_positive());
                    }
                }
                for r in 1..=n {
                    tally.equal(
                        || format!("t={t} n={n} d={d} ω_{r}"),
                        padic_dim_closed(&Partition::fundamental(r, n).unwrap(), t, d),
                        padic_fundamental(r, d, t),
                    );
                }
            }
        }
        for d in 2..=8usize {
            for k in 2..=5u32 {
                tally.equal(
                    || format!("t={t} d={d} projective k={k}"),
                    padic_dim_closed(&Partition::new(&[k], 1).unwrap(), t, d),
                    padic_projective(k, d, t),
                );
            }
        }
    }
    conclude(5, "p-adic closed form = q=0 product = constant-term assembly", tally.cases, &tally.failures);
}

#[test]
fn criterion_6_sum_identity() {
    let mut tally = Tally::new();
    for t in [rat(1, 2), rat(1, 3), rat(1, 5)] {
        for n in 1..=3usize {
            for d in 2 * n..=7 {
                for k in 1..=3u32 {
                    let (lhs, rhs) = padic_sum_sides(n, d, k, &t).unwrap();
                    tally.equal(|| format!("t={t} n={n} d={d} k={k}"), Ok(lhs), Ok(rhs));
                    if n == 1 {
                        let (lhs, rhs) = geometric_sum_sides(d, k, &t).unwrap();
                        tally.equal(|| format!("geometric t={t} d={d} k={k}"), Ok(lhs), Ok(rhs));
                    }
                }
            }
        }
    }
    conclude(6, "sum of p-adic dimensions over λ ⊆ kⁿ", tally.cases, &tally.failures);
}

#[test]
fn criterion_7_quantum_stack() {
    let mut tally = Tally::new();
    let qs = [rat(1, 2), rat(2, 3), rat(3, 5)];
    for n in 1..=2usize {
        for d in 2 * n..=6 {
            for lambda in partitions_up_to(n, 4, 4) {
                let label = || format!("n={n} d={d} λ={lambda}");
                for q in &qs {
                    let value = quantum_dim(&lambda, d, q);
                    tally.equal(|| format!("{} q={q}", label()), quantum_dim_via_little(&lambda, d, q), value.clone());
                    if lambda.parts().iter().all(|&x| x == 1) {
                        tally.equal(|| format!("{} q={q} fundamental", label()), quantum_fundamental(lambda.len(), d, q), value);
                    }
                }
                let classical = complex_dim(&lambda, d);
                tally.equal(label, quantum_product(&lambda, d).unwrap().limit_at_one(), classical.clone());
                tally.equal(label, weyl_dim(&natural_embedding(&lambda, d).unwrap()), classical);
            }
        }
    }
    conclude(7, "quantum dimension paths and the q → 1 limit", tally.cases, &tally.failures);
}

/// Dominant integer vectors of length `d` with `Σ|μ_i| ≤ bound`.
fn dominant_weights(d: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(d: usize, left: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in (-left..=cap.min(left)).rev() {
            cur.push(x);
            rec(d, left - x.abs(), x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, bound, bound, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_8_q_weyl_consistency() {
    let mut tally = Tally::new();
    for d in 1..=4usize {
        for mu in dominant_weights(d, 4) {
            for q in [rat(1, 2), rat(2, 3), rat(3, 5)] {
                tally.equal(|| format!("μ={mu:?} q={q}"), q_weyl_dim(&mu, &q), q_dim_schur(&mu, &q));
            }
            tally.equal(|| format!("μ={mu:?} q → 1"), q_weyl_product(&mu).unwrap().limit_at_one(), weyl_dim(&mu));
        }
    }
    conclude(8, "q-Weyl product = Schur alternant, q → 1 limit = Weyl", tally.cases, &tally.failures);
}

#[test]
fn criterion_9_q_series() {
    let mut tally = Tally::new();
    for q in [rat(1, 2), rat(-2, 3), rat(3, 5), rat(5, 7), rat(-4, 3)] {
        for m in 0..=10 {
            tally.holds(|| format!("q-factorial m={m} q={q}"), verify_q_factorial_identity(m, &q));
        }
    }
    let free = [rat(2, 1), rat(5, 1), rat(7, 2)];
    for m in 0..=5 {
        tally.holds(
            || format!("Vandermonde m={m}"),
            verify_terminating_series(SeriesIdentity::QVandermonde, m, &[free[0].clone(), free[2].clone()], &rat(1, 3)),
        );
        tally.holds(
            || format!("Saalschütz m={m}"),
            verify_terminating_series(SeriesIdentity::QSaalschutz, m, &free, &rat(1, 3)),
        );
    }
    let mut spec = JobSpec::new(cli::Command::Verify);
    spec.suite = Some(Suite::QSeries);
    spec.max = Some(5);
    spec.seeds = SEEDS.to_vec();
    let outcome = cli::run(&spec).unwrap();
    for line in outcome.output.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        tally.holds(|| format!("seeded case {line}"), v["ok"] == true);
    }
    tally.holds(|| "seeded suite not ok".into(), outcome.ok);
    conclude(9, "q-factorial, q-Vandermonde and q-Saalschütz", tally.cases, &tally.failures);
}

fn bcnqkit(args: &[&str], env: &[(&str, &str)]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_bcnqkit"))
        .args(args)
        .envs(env.iter().copied())
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code().expect("exit code"))
}

#[test]
fn criterion_10_determinism_and_exit_codes() {
    let mut tally = Tally::new();
    // arguments, environment, expected exit code
    type Run<'a> = (Vec<&'a str>, Vec<(&'a str, &'a str)>, i32);
    let runs: Vec<Run> = vec![
        (vec!["poly", "--family", "big", "--n", "2", "--lambda", "2,1", "--seed", "4,5"], vec![], 0),
        (vec!["verify", "--suite", "eigen", "--family", "mk", "--n", "2"], vec![], 0),
        (vec!["verify", "--suite", "q-series", "--max", "6", "--seed", "3"], vec![], 0),
        (vec!["dims", "--space", "quantum", "--n", "2", "--d", "5", "--q", "2/3", "--format", "csv"], vec![], 0),
        (vec!["identities"], vec![], 0),
        // an incomplete report is not ok
        (vec!["verify", "--suite", "eigen", "--family", "little"], vec![(cli::MAX_CELLS_VAR, "1")], 1),
        (vec!["poly", "--family", "mk", "--n", "1", "--lambda", "1", "--params", "a=1/2,b=1/3,c=1/5,d=1/7,q=1,t=1/3"], vec![], 2),
        (vec!["identities", "--k", "0"], vec![], 2),
    ];
    for (args, env, code) in &runs {
        let first = bcnqkit(args, env);
        let second = bcnqkit(args, env);
        tally.holds(|| format!("{args:?} not byte-identical"), first == second);
        tally.holds(|| format!("{args:?} exited {} not {code}", first.1), first.1 == *code);
        let report_ok = String::from_utf8(first.0.clone())
            .unwrap()
            .lines()
            .last()
            .and_then(|l| serde_json::from_str::<serde_json::Value>(l).ok())
            .and_then(|v| v.get("ok").and_then(|ok| ok.as_bool()));
        if let Some(ok) = report_ok {
            tally.holds(|| format!("{args:?} report ok={ok} but exit {}", first.1), ok == (first.1 == 0));
        }
    }

    // a job file reproduces the command line it was explained from
    let args = ["dims", "--space", "padic", "--n", "1", "--d", "3", "--t", "1/2", "--max-weight", "3"];
    let (job, code) = bcnqkit(&[&["explain"][..], &args[..]].concat(), &[]);
    tally.holds(|| "explain failed".into(), code == 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    std::fs::write(&path, &job).unwrap();
    let from_file = bcnqkit(&["job", path.to_str().unwrap()], &[]);
    tally.holds(|| "job file output differs".into(), from_file == bcnqkit(&args, &[]));
    let spec: JobSpec = serde_json::from_slice(&job).unwrap();
    tally.holds(|| "explained job has wrong t".into(), spec.t == vec![rat(1, 2)] && spec.params.is_none());

    conclude(10, "byte-identical reruns and exit codes", tally.cases, &tally.failures);
}
