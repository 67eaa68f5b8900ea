use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::commands::parameter_points;
use super::{JobSpec, Outcome, Suite};
use crate::closedforms::{
    closed_evaluation, closed_norm, little_rank_one_via_2phi1, little_rank_one_via_3phi2, ClosedFormRequest,
    SeriesIdentity,
};
use crate::combinatorics::{partitions_up_to, verify_q_factorial_identity};
use crate::dimensions::{dim_table, DimParams, Space};
use crate::exactalg::{substitute_geometric_point, Family, PointKind, Rat};
use crate::ops_polys::{eigenvalue, Eigenbasis, Operator};
use crate::{Error, Partition, Result};

/// Accumulates report lines and the counts for the closing summary.
#[derive(Debug, Default)]
pub(super) struct Report {
    lines: Vec<String>,
    cases: u64,
    failed: u64,
    skipped: u64,
}

impl Report {
    pub(super) fn push(&mut self, line: Value, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
        }
        self.lines.push(line.to_string());
    }

    fn skip(&mut self, mut line: Value, reason: &str) {
        self.skipped += 1;
        line["skipped"] = json!(reason);
        self.lines.push(line.to_string());
    }

    /// Records a case whose computation itself failed.
    fn error(&mut self, mut line: Value, e: &Error) {
        line["ok"] = json!(false);
        line["error"] = json!(e.kind());
        line["message"] = json!(e.to_string());
        self.push(line, false);
    }

    fn compare(&mut self, mut line: Value, sides: Result<(Rat, Rat)>) {
        match sides {
            Ok((lhs, rhs)) => {
                let ok = lhs == rhs;
                line["ok"] = json!(ok);
                line["lhs"] = json!(lhs);
                line["rhs"] = json!(rhs);
                self.push(line, ok);
            }
            Err(e) => self.error(line, &e),
        }
    }

    pub(super) fn finish(mut self, name: &str) -> Outcome {
        let complete = self.skipped == 0;
        let ok = complete && self.failed == 0;
        self.lines.push(
            json!({
                "summary": name,
                "cases": self.cases,
                "failed": self.failed,
                "skipped": self.skipped,
                "complete": complete,
                "ok": ok,
            })
            .to_string(),
        );
        Outcome { output: self.lines.join("\n") + "\n", ok }
    }
}

const DEFAULT_SEEDS: [u64; 3] = [1, 2, 3];

struct Ranges {
    families: Vec<Family>,
    ns: Vec<usize>,
    max_weight: u64,
    cells: u64,
}

impl Ranges {
    fn from_spec(spec: &JobSpec, cells: u64) -> Ranges {
        Ranges {
            families: spec.family.map_or_else(|| Family::ALL.to_vec(), |f| vec![f]),
            ns: spec.n.map_or_else(|| vec![1, 2], |n| vec![n]),
            max_weight: spec.max_weight.unwrap_or(2),
            cells,
        }
    }
}

pub(super) fn run_verify(spec: &JobSpec, cells: u64) -> Result<Outcome> {
    let suite = spec
        .suite
        .ok_or_else(|| Error::InvalidInput("--suite is required".into()))?;
    let ranges = Ranges::from_spec(spec, cells);
    let mut report = Report::default();
    match suite {
        Suite::Eigen | Suite::Evaluation | Suite::Orthogonality => {
            for &family in &ranges.families {
                for &n in &ranges.ns {
                    polynomial_cases(spec, suite, family, n, &ranges, &mut report)?;
                }
            }
        }
        Suite::DimensionPaths => dimension_paths(spec, &ranges, &mut report)?,
        Suite::QSeries => q_series(spec, &mut report)?,
    }
    Ok(report.finish(suite.as_str()))
}

fn polynomial_cases(
    spec: &JobSpec,
    suite: Suite,
    family: Family,
    n: usize,
    ranges: &Ranges,
    report: &mut Report,
) -> Result<()> {
    let w = ranges.max_weight;
    // products of two polynomials reach twice the weight
    let top = if suite == Suite::Orthogonality { 2 * w } else { w };
    let lambdas = partitions_up_to(n, w, w as u32);
    let case = |seed: Option<u64>, lambda: &Partition| {
        json!({"check": suite.as_str(), "family": family, "n": n, "lambda": lambda, "seed": seed})
    };
    if top * n as u64 > ranges.cells {
        for lambda in &lambdas {
            report.skip(case(None, lambda), "resource bound");
        }
        return Ok(());
    }
    let bound = Partition::new(&[top as u32], n)?;
    for (seed, _, params) in parameter_points(spec, family, &bound, &DEFAULT_SEEDS)? {
        let mut basis = Eigenbasis::new(family, &params, n)?;
        let operator = Operator::new(family, &params, n)?;
        let mut polys = BTreeMap::new();
        for lambda in &lambdas {
            match basis.polynomial(lambda) {
                Ok(p) => {
                    polys.insert(lambda.clone(), p);
                }
                Err(e) => report.error(case(seed, lambda), &e),
            }
        }
        for (lambda, p) in &polys {
            match suite {
                Suite::Eigen => {
                    let sides = (|| {
                        let e = eigenvalue(family, lambda, &params)?;
                        let lhs = operator.apply(p)?;
                        Ok((lhs, p.scale(&e)))
                    })();
                    let mut line = case(seed, lambda);
                    match sides {
                        Ok((lhs, rhs)) => {
                            let monic = p.leading() == Some((lambda, &Rat::one()));
                            let ok = lhs == rhs && monic;
                            line["ok"] = json!(ok);
                            line["monic"] = json!(monic);
                            report.push(line, ok);
                        }
                        Err(e) => report.error(line, &e),
                    }
                }
                Suite::Evaluation => {
                    for &point in PointKind::admissible(family) {
                        let mut line = case(seed, lambda);
                        line["point"] = json!(point);
                        let sides = (|| {
                            let coords = substitute_geometric_point(point, &params, n, 0)?;
                            let req = ClosedFormRequest::evaluation(point, lambda.clone(), params.clone());
                            Ok((p.eval(&coords)?, closed_evaluation(&req)?))
                        })();
                        report.compare(line, sides);
                    }
                }
                Suite::Orthogonality => {
                    for (mu, r) in polys.range(..=lambda) {
                        let mut line = case(seed, lambda);
                        line["mu"] = json!(mu);
                        let sides = (|| {
                            let lhs = basis.inner_product(p, r)?;
                            let rhs = if mu == lambda {
                                closed_norm(&ClosedFormRequest::norm(lambda.clone(), params.clone()))?
                            } else {
                                Rat::zero()
                            };
                            Ok((lhs, rhs))
                        })();
                        report.compare(line, sides);
                    }
                }
                _ => unreachable!("not a polynomial suite"),
            }
        }
    }
    Ok(())
}

fn rats(pairs: &[(i64, i64)]) -> Vec<Rat> {
    pairs.iter().map(|&(p, q)| Rat::new(p, q)).collect()
}

fn dimension_paths(spec: &JobSpec, ranges: &Ranges, report: &mut Report) -> Result<()> {
    let ts = if spec.t.is_empty() { rats(&[(1, 2), (1, 3), (2, 7)]) } else { spec.t.clone() };
    let qs = if spec.q.is_empty() { rats(&[(1, 2), (2, 3), (3, 5)]) } else { spec.q.clone() };
    let seeds = if spec.seeds.is_empty() { DEFAULT_SEEDS.to_vec() } else { spec.seeds.clone() };
    let w = ranges.max_weight;
    for &n in &ranges.ns {
        let d = spec.d.unwrap_or(5).max(2 * n);
        let mut param_sets: Vec<(Space, DimParams)> = Vec::new();
        for &seed in &seeds {
            let bound = Partition::new(&[w as u32], n)?;
            let p = crate::exactalg::sample_generic_params(seed, Family::Little, &bound)?.params;
            let mut m = DimParams::new();
            m.insert("a".into(), &p.q * &p.a);
            m.insert("b".into(), &p.q * &p.b);
            m.insert("q".into(), p.q.clone());
            m.insert("t".into(), p.t.clone());
            param_sets.push((Space::Generalized, m));
        }
        for t in &ts {
            param_sets.push((Space::Padic, DimParams::from([("t".to_string(), t.clone())])));
        }
        for space in [Space::Complex, Space::Real, Space::Weyl] {
            param_sets.push((space, DimParams::new()));
        }
        for q in &qs {
            for space in [Space::Quantum, Space::QWeyl] {
                param_sets.push((space, DimParams::from([("q".to_string(), q.clone())])));
            }
        }
        for (space, params) in param_sets {
            let head = json!({"check": "dimension", "space": space, "n": n, "d": d, "params": params});
            match dim_table(space, n, d, &params, w) {
                Ok(records) => {
                    for r in records {
                        let mut line = head.clone();
                        line["lambda"] = json!(r.lambda);
                        line["value"] = json!(r.value);
                        line["crosscheck"] = json!(r.crosscheck);
                        let classical = matches!(space, Space::Complex | Space::Real | Space::Weyl);
                        let integral = !classical || (r.value.is_integer() && r.value.is_positive());
                        if classical {
                            line["positive_integer"] = json!(integral);
                        }
                        let ok = r.crosscheck_ok && integral;
                        line["ok"] = json!(ok);
                        report.push(line, ok);
                    }
                }
                Err(e) => report.error(head, &e),
            }
        }
    }
    Ok(())
}

/// A nonzero rational `±(1..7)/(1..7)` other than `±1`.
fn draw(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let num: i64 = rng.gen_range(1..=7);
        let den: i64 = rng.gen_range(1..=7);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let x = Rat::new(sign * num, den);
        if x.abs() != Rat::one() {
            return x;
        }
    }
}

const MAX_SERIES_ATTEMPTS: u32 = 64;

/// Draws `(a, b, c, q)` for which both series identities are defined for all
/// `m ≤ max` and the `q`-numbers up to `max` do not vanish.
fn sample_series_point(seed: u64, max: u32) -> Result<[Rat; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_SERIES_ATTEMPTS {
        let [a, b, c, q] = [0; 4].map(|_| draw(&mut rng));
        let generic = (0..=max).all(|m| {
            SeriesIdentity::QVandermonde.sides(m, &[a.clone(), c.clone()], &q).is_ok()
                && SeriesIdentity::QSaalschutz.sides(m, &[a.clone(), b.clone(), c.clone()], &q).is_ok()
                && little_rank_one_via_3phi2(m, &a, &b, &q).is_ok()
                && little_rank_one_via_2phi1(m, &a, &b, &q).is_ok()
        });
        if generic {
            return Ok([a, b, c, q]);
        }
    }
    Err(Error::CertificationFailed { attempts: MAX_SERIES_ATTEMPTS })
}

fn q_series(spec: &JobSpec, report: &mut Report) -> Result<()> {
    let max = spec.max.unwrap_or(5);
    let seeds = if spec.seeds.is_empty() { DEFAULT_SEEDS.to_vec() } else { spec.seeds.clone() };
    for seed in seeds {
        let [a, b, c, q] = sample_series_point(seed, max)?;
        for m in 0..=max {
            for (identity, free) in [
                (SeriesIdentity::QVandermonde, vec![a.clone(), c.clone()]),
                (SeriesIdentity::QSaalschutz, vec![a.clone(), b.clone(), c.clone()]),
            ] {
                let line = json!({"check": identity.as_str(), "seed": seed, "m": m, "params": free, "q": q});
                report.compare(line, identity.sides(m, &free, &q));
            }
            let line = json!({"check": "little_rank_one", "seed": seed, "m": m, "a": a, "b": b, "q": q});
            match (little_rank_one_via_3phi2(m, &a, &b, &q), little_rank_one_via_2phi1(m, &a, &b, &q)) {
                (Ok(x), Ok(y)) => {
                    let mut line = line;
                    let ok = x == y;
                    line["ok"] = json!(ok);
                    line["coefficients"] = json!(x);
                    report.push(line, ok);
                }
                (Err(e), _) | (_, Err(e)) => report.error(line, &e),
            }
        }
        for m in 0..=10 {
            let ok = verify_q_factorial_identity(m, &q);
            report.push(json!({"check": "q_factorial", "seed": seed, "m": m, "q": q, "ok": ok}), ok);
        }
    }
    Ok(())
}
