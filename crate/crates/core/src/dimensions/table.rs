use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::classical::{
    complex_dim, natural_embedding, q_dim_schur, q_weyl_dim, quantum_dim, quantum_dim_via_little,
    quantum_fundamental, quantum_product, real_dim, real_dim_via_little, weyl_dim,
};
use super::generalized::{generalized_dim_fundamental, generalized_dim_product, generalized_dim_via_little, q0_factors};
use super::padic::{padic_dim_closed, padicfor};
use crate::combinatorics::{partitions_up_to, Partition};
use crate::exactalg::Rat;
use crate::{Error, Result};

/// Decimal digits in the approximate column.
pub const APPROX_DIGITS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    Generalized,
    Padic,
    Complex,
    Real,
    Quantum,
    Weyl,
    QWeyl,
}

impl Space {
    pub const ALL: [Space; 7] = [
        Space::Generalized,
        Space::Padic,
        Space::Complex,
        Space::Real,
        Space::Quantum,
        Space::Weyl,
        Space::QWeyl,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Space::Generalized => "generalized",
            Space::Padic => "padic",
            Space::Complex => "complex",
            Space::Real => "real",
            Space::Quantum => "quantum",
            Space::Weyl => "weyl",
            Space::QWeyl => "q_weyl",
        }
    }

    /// Parameters the space reads.
    pub fn live_params(self) -> &'static [&'static str] {
        match self {
            Space::Generalized => &["a", "b", "q", "t"],
            Space::Padic => &["t"],
            Space::Quantum | Space::QWeyl => &["q"],
            Space::Complex | Space::Real | Space::Weyl => &[],
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Space> {
        let s = s.replace('-', "_");
        Space::ALL
            .into_iter()
            .find(|sp| sp.as_str() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown space {s:?}")))
    }
}

/// Parameter values for a dimension table, keyed by name.
pub type DimParams = BTreeMap<String, Rat>;

fn param<'a>(params: &'a DimParams, name: &str, space: Space) -> Result<&'a Rat> {
    params
        .get(name)
        .ok_or_else(|| Error::InvalidInput(format!("the {space} space needs the parameter {name}")))
}

/// One computed dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimRecord {
    pub space: Space,
    pub n: usize,
    pub d: usize,
    pub lambda: Partition,
    /// The highest weight `λ^♮` for the Weyl spaces.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<i64>>,
    pub params: DimParams,
    pub value: Rat,
    pub method: String,
    pub crosscheck: String,
    pub crosscheck_ok: bool,
    /// Approximate decimal value, for reading only.
    pub approx: String,
}

struct Evaluated {
    value: Rat,
    method: &'static str,
    checks: Vec<(&'static str, Rat)>,
}

fn evaluate(space: Space, lambda: &Partition, d: usize, params: &DimParams) -> Result<Evaluated> {
    let n = lambda.context_n();
    let fundamental = lambda.parts().iter().all(|&p| p == 1).then(|| lambda.len());
    Ok(match space {
        Space::Generalized => {
            let [a, b, q, t] = ["a", "b", "q", "t"].map(|k| param(params, k, space));
            let (a, b, q, t) = (a?, b?, q?, t?);
            let value = generalized_dim_product(lambda, a, b, q, t)?;
            let mut checks = Vec::new();
            if q.is_zero() {
                checks.push(("closed_form", super::padic::padicfor(lambda, a, b, t)?));
                checks.push(("q0_factors", q0_factors(lambda, a, b, t)?));
            } else {
                checks.push(("little_qjacobi_ratio", generalized_dim_via_little(lambda, a, b, q, t)?));
            }
            if let Some(r) = fundamental {
                checks.push(("fundamental_product", generalized_dim_fundamental(r, n, a, b, q, t)?));
            }
            Evaluated { value, method: "product_form", checks }
        }
        Space::Padic => {
            let t = param(params, "t", space)?;
            let value = padic_dim_closed(lambda, t, d)?;
            let a = t.pow(d as i64 - 2 * n as i64 + 1);
            let checks = vec![
                ("product_form", generalized_dim_product(lambda, &a, t, &Rat::zero(), t)?),
                ("q0_factors", q0_factors(lambda, &a, t, t)?),
                ("padicfor", padicfor(lambda, &a, t, t)?),
            ];
            Evaluated { value, method: "closed_form", checks }
        }
        Space::Complex => {
            let value = complex_dim(lambda, d)?;
            let checks = vec![
                ("weyl_product", weyl_dim(&natural_embedding(lambda, d)?)?),
                ("quantum_limit", quantum_product(lambda, d)?.limit_at_one()?),
            ];
            Evaluated { value, method: "closed_form", checks }
        }
        Space::Real => {
            let value = real_dim(lambda, d)?;
            let checks = vec![("little_qjacobi_ratio", real_dim_via_little(lambda, d)?)];
            Evaluated { value, method: "product_form", checks }
        }
        Space::Quantum => {
            let q = param(params, "q", space)?;
            let value = quantum_dim(lambda, d, q)?;
            let mut checks = vec![("little_qjacobi_ratio", quantum_dim_via_little(lambda, d, q)?)];
            if let Some(r) = fundamental {
                checks.push(("q_binomial_difference", quantum_fundamental(r, d, q)?));
            }
            Evaluated { value, method: "closed_form", checks }
        }
        Space::Weyl => {
            let value = weyl_dim(&natural_embedding(lambda, d)?)?;
            Evaluated { value, method: "weyl_product", checks: vec![("complex_product", complex_dim(lambda, d)?)] }
        }
        Space::QWeyl => {
            let q = param(params, "q", space)?;
            let mu = natural_embedding(lambda, d)?;
            let value = q_weyl_dim(&mu, q)?;
            Evaluated { value, method: "q_weyl_product", checks: vec![("schur_alternant", q_dim_schur(&mu, q)?)] }
        }
    })
}

/// One record per `λ ∈ Λ_n` with `|λ| ≤ max_weight`, in graded-lex order.
pub fn dim_table(space: Space, n: usize, d: usize, params: &DimParams, max_weight: u64) -> Result<Vec<DimRecord>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if space != Space::Generalized {
        super::check_rank(n, d)?;
    }
    let live: DimParams = space
        .live_params()
        .iter()
        .map(|&k| param(params, k, space).map(|v| (k.to_string(), v.clone())))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for lambda in partitions_up_to(n, max_weight, max_weight as u32) {
        let ev = evaluate(space, &lambda, d, &live)?;
        let crosscheck_ok = ev.checks.iter().all(|(_, v)| *v == ev.value);
        let mu = matches!(space, Space::Weyl | Space::QWeyl)
            .then(|| natural_embedding(&lambda, d))
            .transpose()?;
        out.push(DimRecord {
            space,
            n,
            d,
            mu,
            params: live.clone(),
            approx: ev.value.to_decimal(APPROX_DIGITS),
            value: ev.value,
            method: ev.method.to_string(),
            crosscheck: ev.checks.iter().map(|(m, _)| *m).collect::<Vec<_>>().join("+"),
            crosscheck_ok,
            lambda,
        });
    }
    Ok(out)
}

/// CSV with columns `lambda, value, method, crosscheck, crosscheck_ok, approx_decimal`.
pub fn records_to_csv(records: &[DimRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidInput(format!("csv: {e}"));
    w.write_record(["lambda", "value", "method", "crosscheck", "crosscheck_ok", "approx_decimal"])
        .map_err(io)?;
    for r in records {
        w.write_record([
            r.lambda.to_string(),
            r.value.to_string(),
            r.method.clone(),
            r.crosscheck.clone(),
            r.crosscheck_ok.to_string(),
            r.approx.clone(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidInput(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidInput(format!("csv: {e}")))
}

/// Aligned plain-text table.
pub fn records_to_table(records: &[DimRecord]) -> String {
    let rows: Vec<[String; 4]> = records
        .iter()
        .map(|r| [r.lambda.to_string(), r.value.to_string(), r.approx.clone(), r.crosscheck_ok.to_string()])
        .collect();
    let header = ["lambda", "value", "approx", "crosscheck_ok"].map(String::from);
    let widths: Vec<usize> = (0..4)
        .map(|c| rows.iter().chain(std::iter::once(&header)).map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in std::iter::once(&header).chain(rows.iter()) {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
