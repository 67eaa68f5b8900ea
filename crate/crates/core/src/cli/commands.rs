use serde_json::json;

use super::suites::Report;
use super::{JobSpec, Outcome, OutputFormat};
use crate::closedforms::{closed_evaluation, ClosedFormRequest};
use crate::combinatorics::verify_q_factorial_identity;
use crate::dimensions::{
    dim_table, geometric_sum_sides, padic_sum_sides, records_to_csv, records_to_table, DimParams, Space,
};
use crate::exactalg::{sample_generic_params, substitute_geometric_point, Family, ParamPoint, PointKind, Rat};
use crate::ops_polys::Eigenbasis;
use crate::{Error, Partition, Result};

fn require<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("{flag} is required")))
}

pub(super) fn check_cells(lambda: &Partition, cells: u64) -> Result<()> {
    let used = lambda.weight() * lambda.context_n() as u64;
    if used > cells {
        return Err(Error::ResourceBound(format!(
            "|λ|·n = {used} for λ = {lambda} exceeds the cap {cells}"
        )));
    }
    Ok(())
}

/// Parameter points for a job: explicit (and certified) or sampled per seed.
pub(super) fn parameter_points(
    spec: &JobSpec,
    family: Family,
    bound: &Partition,
    default_seeds: &[u64],
) -> Result<Vec<(Option<u64>, u32, ParamPoint)>> {
    if let Some(values) = &spec.params {
        let p = ParamPoint::from_assignments(family, values)?;
        p.certify(bound)?;
        return Ok(vec![(None, 0, p)]);
    }
    let seeds = if spec.seeds.is_empty() { default_seeds } else { &spec.seeds };
    seeds
        .iter()
        .map(|&s| sample_generic_params(s, family, bound).map(|x| (Some(s), x.rejections, x.params)))
        .collect()
}

pub(super) fn run_poly(spec: &JobSpec, cells: u64) -> Result<Outcome> {
    let family = require(spec.family, "--family")?;
    let lambda = spec.partition()?;
    check_cells(&lambda, cells)?;
    let n = lambda.context_n();
    let mut lines = Vec::new();
    let mut all_ok = true;
    for (seed, rejections, params) in parameter_points(spec, family, &lambda, &[1])? {
        let mut basis = Eigenbasis::new(family, &params, n)?;
        let poly = basis.polynomial(&lambda)?;
        let mut checks = Vec::new();
        for &point in PointKind::admissible(family) {
            let coords = substitute_geometric_point(point, &params, n, 0)?;
            let lhs = poly.eval(&coords)?;
            let rhs = closed_evaluation(&ClosedFormRequest::evaluation(point, lambda.clone(), params.clone()))?;
            let ok = lhs == rhs;
            all_ok &= ok;
            checks.push(json!({ "check": "evaluation", "point": point, "ok": ok, "lhs": lhs, "rhs": rhs }));
        }
        let ok = checks.iter().all(|c| c["ok"] == true);
        lines.push(
            json!({
                "family": family,
                "lambda": lambda,
                "seed": seed,
                "rejections": rejections,
                "params": params,
                "polynomial": poly,
                "checks": checks,
                "ok": ok,
            })
            .to_string(),
        );
    }
    Ok(Outcome { output: lines.join("\n") + "\n", ok: all_ok })
}

fn single(values: &[Rat], flag: &str) -> Result<Option<Rat>> {
    match values {
        [] => Ok(None),
        [v] => Ok(Some(v.clone())),
        _ => Err(Error::InvalidInput(format!("dims takes a single {flag} value"))),
    }
}

pub(super) fn run_dims(spec: &JobSpec) -> Result<Outcome> {
    let space = require(spec.space, "--space")?;
    let n = require(spec.n, "--n")?;
    let d = match (space, spec.d) {
        (_, Some(d)) => d,
        (Space::Generalized, None) => 2 * n,
        _ => return Err(Error::InvalidInput("--d is required".into())),
    };
    let max_weight = spec.max_weight.unwrap_or(2);
    let mut params: DimParams = spec.params.clone().unwrap_or_default();
    if let Some(t) = single(&spec.t, "--t")? {
        params.insert("t".into(), t);
    }
    if let Some(q) = single(&spec.q, "--q")? {
        params.insert("q".into(), q);
    }
    if space == Space::Generalized && spec.params.is_none() {
        let seed = match spec.seeds.as_slice() {
            [] => 1,
            [s] => *s,
            _ => return Err(Error::InvalidInput("dims takes a single --seed".into())),
        };
        let bound = Partition::new(&[max_weight as u32], n)?;
        let p = sample_generic_params(seed, Family::Little, &bound)?.params;
        // the table evaluates the little family at (a/q, b/q)
        params.insert("a".into(), &p.q * &p.a);
        params.insert("b".into(), &p.q * &p.b);
        params.insert("q".into(), p.q.clone());
        params.insert("t".into(), p.t.clone());
    }
    let records = dim_table(space, n, d, &params, max_weight)?;
    let ok = records.iter().all(|r| r.crosscheck_ok);
    let output = match spec.format {
        OutputFormat::Json => {
            serde_json::to_string(&records).map_err(|e| Error::InvalidInput(e.to_string()))? + "\n"
        }
        OutputFormat::Csv => records_to_csv(&records)?,
        OutputFormat::Table => records_to_table(&records),
    };
    Ok(Outcome { output, ok })
}

pub(super) fn run_identities(spec: &JobSpec) -> Result<Outcome> {
    let k_max = spec.k.unwrap_or(2);
    if k_max == 0 {
        return Err(Error::InvalidInput("the sum identity needs k ≥ 1".into()));
    }
    let n_max = spec.n.unwrap_or(2);
    let d_max = spec.d.unwrap_or(5);
    let m_max = spec.max.unwrap_or(10);
    let ts = if spec.t.is_empty() { vec![Rat::new(1, 2), Rat::new(1, 3)] } else { spec.t.clone() };
    let mut report = Report::default();
    for n in 1..=n_max {
        for d in 2 * n..=d_max {
            for k in 1..=k_max {
                for t in &ts {
                    let (lhs, rhs) = padic_sum_sides(n, d, k, t)?;
                    let ok = lhs == rhs;
                    report.push(json!({"check": "padic_sum", "n": n, "d": d, "k": k, "t": t, "ok": ok, "lhs": lhs, "rhs": rhs}), ok);
                    if n == 1 {
                        let (lhs, rhs) = geometric_sum_sides(d, k, t)?;
                        let ok = lhs == rhs;
                        report.push(json!({"check": "geometric_sum", "d": d, "k": k, "t": t, "ok": ok, "lhs": lhs, "rhs": rhs}), ok);
                    }
                }
            }
        }
    }
    for q in ts.iter().chain(&spec.q) {
        for m in 0..=m_max {
            let ok = verify_q_factorial_identity(m, q);
            report.push(json!({"check": "q_factorial", "m": m, "q": q, "ok": ok}), ok);
        }
    }
    Ok(report.finish("identities"))
}
