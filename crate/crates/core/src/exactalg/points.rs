use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Family, ParamPoint, Rat};
use crate::{Error, Result};

/// Special evaluation points. Coordinate `i` (1-based) of `u·t^{±ρ}` is
/// `u·t^{±(n-i)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    ATRho,
    TRho,
    Zero,
    InvQbTRho,
    CTRho,
    MinusDTRho,
    COverQaTNegrho,
    MinusDOverQbTNegrho,
    QDeltaImage,
}

impl PointKind {
    pub const ALL: [PointKind; 9] = [
        PointKind::ATRho,
        PointKind::TRho,
        PointKind::Zero,
        PointKind::InvQbTRho,
        PointKind::CTRho,
        PointKind::MinusDTRho,
        PointKind::COverQaTNegrho,
        PointKind::MinusDOverQbTNegrho,
        PointKind::QDeltaImage,
    ];

    /// Points with a closed evaluation formula for `family`.
    pub fn admissible(family: Family) -> &'static [PointKind] {
        match family {
            Family::Mk => &[PointKind::ATRho],
            Family::Little => &[PointKind::Zero, PointKind::TRho, PointKind::InvQbTRho],
            Family::Big => &[
                PointKind::CTRho,
                PointKind::MinusDTRho,
                PointKind::COverQaTNegrho,
                PointKind::MinusDOverQbTNegrho,
            ],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PointKind::ATRho => "a_t_rho",
            PointKind::TRho => "t_rho",
            PointKind::Zero => "zero",
            PointKind::InvQbTRho => "inv_qb_t_rho",
            PointKind::CTRho => "c_t_rho",
            PointKind::MinusDTRho => "minus_d_t_rho",
            PointKind::COverQaTNegrho => "c_over_qa_t_negrho",
            PointKind::MinusDOverQbTNegrho => "minus_d_over_qb_t_negrho",
            PointKind::QDeltaImage => "q_delta_image",
        }
    }
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PointKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<PointKind> {
        PointKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown point kind {s:?}")))
    }
}

fn inverse(x: Rat, what: &str) -> Result<Rat> {
    x.inv().ok_or_else(|| Error::VanishingDenominator { label: what.to_string() })
}

/// Coordinates of the point `kind` for `n` variables. `d` is only used by
/// [`PointKind::QDeltaImage`], where coordinate `i` is `q^{d-2n+1+2(n-i)}`.
pub fn substitute_geometric_point(
    kind: PointKind,
    params: &ParamPoint,
    n: usize,
    d: usize,
) -> Result<Vec<Rat>> {
    let ParamPoint { a, b, c, d: dd, q, t, .. } = params;
    let rho = |i: usize| (n - i) as i64;
    let scaled = |u: Rat, sign: i64| -> Result<Vec<Rat>> {
        (1..=n)
            .map(|i| {
                t.checked_pow(sign * rho(i))
                    .map(|p| &u * p)
                    .ok_or_else(|| Error::VanishingDenominator { label: "t".into() })
            })
            .collect()
    };
    match kind {
        PointKind::ATRho => scaled(a.clone(), 1),
        PointKind::TRho => scaled(Rat::one(), 1),
        PointKind::Zero => Ok(vec![Rat::zero(); n]),
        PointKind::InvQbTRho => scaled(inverse(q * b, "qb")?, -1),
        PointKind::CTRho => scaled(c.clone(), 1),
        PointKind::MinusDTRho => scaled(-dd, 1),
        PointKind::COverQaTNegrho => scaled(c * inverse(q * a, "qa")?, -1),
        PointKind::MinusDOverQbTNegrho => scaled(-dd * inverse(q * b, "qb")?, -1),
        PointKind::QDeltaImage => {
            if d < 2 * n {
                return Err(Error::InvalidInput(format!("need d >= 2n, got n={n}, d={d}")));
            }
            let base = (d - 2 * n + 1) as i64;
            (1..=n)
                .map(|i| {
                    q.checked_pow(base + 2 * rho(i))
                        .ok_or_else(|| Error::VanishingDenominator { label: "q".into() })
                })
                .collect()
        }
    }
}
