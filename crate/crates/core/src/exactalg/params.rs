use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::points::PointKind;
use super::sympoly::BasisKind;
use super::Rat;
use crate::closedforms::{closed_evaluation, closed_norm, ClosedFormRequest};
use crate::combinatorics::{enumerate_below, Partition};
use crate::ops_polys::eigenvalue;
use crate::{Error, Result};

/// The three polynomial families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Macdonald-Koornwinder, parameters `a, b, c, d, q, t`.
    Mk,
    /// Multivariable little q-Jacobi, parameters `a, b, q, t`.
    Little,
    /// Multivariable big q-Jacobi, parameters `a, b, c, d, q, t`.
    Big,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Mk, Family::Little, Family::Big];

    pub fn basis(self) -> BasisKind {
        match self {
            Family::Mk => BasisKind::LaurentWInvariant,
            Family::Little | Family::Big => BasisKind::PolySInvariant,
        }
    }

    pub fn live_params(self) -> &'static [&'static str] {
        match self {
            Family::Little => &["a", "b", "q", "t"],
            Family::Mk | Family::Big => &["a", "b", "c", "d", "q", "t"],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Mk => "mk",
            Family::Little => "little",
            Family::Big => "big",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "mk" => Ok(Family::Mk),
            "little" => Ok(Family::Little),
            "big" => Ok(Family::Big),
            _ => Err(Error::InvalidInput(format!("unknown family {s:?}"))),
        }
    }
}

/// A specialization of `(a, b, c, d, q, t)` to rationals. For the little
/// family `c` and `d` are not live and are kept at zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    pub family: Family,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub q: Rat,
    pub t: Rat,
}

impl ParamPoint {
    pub fn new(family: Family, a: Rat, b: Rat, c: Rat, d: Rat, q: Rat, t: Rat) -> ParamPoint {
        let (c, d) = match family {
            Family::Little => (Rat::zero(), Rat::zero()),
            _ => (c, d),
        };
        ParamPoint { family, a, b, c, d, q, t }
    }

    pub fn little(a: Rat, b: Rat, q: Rat, t: Rat) -> ParamPoint {
        ParamPoint::new(Family::Little, a, b, Rat::zero(), Rat::zero(), q, t)
    }

    /// Builds a point from `name = value` assignments; every live parameter
    /// must be given and no others.
    pub fn from_assignments(family: Family, values: &BTreeMap<String, Rat>) -> Result<ParamPoint> {
        let live = family.live_params();
        if let Some(extra) = values.keys().find(|k| !live.contains(&k.as_str())) {
            return Err(Error::InvalidInput(format!(
                "parameter {extra:?} is not used by the {family} family"
            )));
        }
        let get = |name: &str| -> Result<Rat> {
            if !live.contains(&name) {
                return Ok(Rat::zero());
            }
            values
                .get(name)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("missing parameter {name}")))
        };
        Ok(ParamPoint::new(
            family,
            get("a")?,
            get("b")?,
            get("c")?,
            get("d")?,
            get("q")?,
            get("t")?,
        ))
    }

    pub fn get(&self, name: &str) -> Option<&Rat> {
        match name {
            "a" => Some(&self.a),
            "b" => Some(&self.b),
            "c" => Some(&self.c),
            "d" => Some(&self.d),
            "q" => Some(&self.q),
            "t" => Some(&self.t),
            _ => None,
        }
    }

    /// Live parameters in a fixed order.
    pub fn assignments(&self) -> BTreeMap<String, Rat> {
        self.family
            .live_params()
            .iter()
            .map(|&k| (k.to_string(), self.get(k).unwrap().clone()))
            .collect()
    }

    /// Same point with `(a, b, c, d)` replaced.
    pub fn with_abcd(&self, a: Rat, b: Rat, c: Rat, d: Rat) -> ParamPoint {
        ParamPoint::new(self.family, a, b, c, d, self.q.clone(), self.t.clone())
    }

    /// Checks the genericity certificate up to `bound`: admissible `q, t`,
    /// nonzero live parameters, pairwise distinct eigenvalues on
    /// `enumerate_below(bound)`, and nonvanishing closed-form evaluations and
    /// norms there.
    pub fn certify(&self, bound: &Partition) -> Result<()> {
        let bad = |why: String| Err(Error::DegenerateSpecialization(why));
        let one = Rat::one();
        if self.q.is_zero() || self.q == one || self.q == -one.clone() {
            return bad(format!("q = {} is not generic", self.q));
        }
        if self.t.is_zero() || self.t == one {
            return bad(format!("t = {} is not generic", self.t));
        }
        for &name in self.family.live_params() {
            if self.get(name).unwrap().is_zero() {
                return bad(format!("{name} = 0"));
            }
        }
        let closure = enumerate_below(bound);
        let mut seen: BTreeMap<Rat, &Partition> = BTreeMap::new();
        for mu in &closure {
            let e = eigenvalue(self.family, mu, self)?;
            if let Some(prev) = seen.insert(e, mu) {
                return bad(format!("eigenvalues of {prev} and {mu} coincide"));
            }
        }
        for mu in &closure {
            for &point in PointKind::admissible(self.family) {
                let req = ClosedFormRequest::evaluation(point, mu.clone(), self.clone());
                if closed_evaluation(&req)?.is_zero() {
                    return bad(format!("evaluation of P{mu} at {point} vanishes"));
                }
            }
            let req = ClosedFormRequest::norm(mu.clone(), self.clone());
            if closed_norm(&req)?.is_zero() {
                return bad(format!("norm of P{mu} vanishes"));
            }
        }
        Ok(())
    }
}

impl Serialize for ParamPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.assignments().serialize(s)
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .assignments()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// A certified point together with how it was drawn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledParams {
    pub params: ParamPoint,
    pub seed: u64,
    pub rejections: u32,
}

/// Upper bound on draws before sampling gives up.
pub const MAX_SAMPLING_ATTEMPTS: u32 = 64;

fn small_rational(rng: &mut ChaCha8Rng) -> Rat {
    let num: i64 = rng.gen_range(1..=7);
    let den: i64 = rng.gen_range(1..=7);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Rat::new(sign * num, den)
}

/// Deterministically draws small rationals from `seed` until the genericity
/// certificate holds up to `degree_bound`.
pub fn sample_generic_params(
    seed: u64,
    family: Family,
    degree_bound: &Partition,
) -> Result<SampledParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_SAMPLING_ATTEMPTS {
        let vals: Vec<Rat> = (0..6).map(|_| small_rational(&mut rng)).collect();
        let [a, b, c, d, q, t]: [Rat; 6] = vals.try_into().unwrap();
        let params = ParamPoint::new(family, a, b, c, d, q, t);
        match params.certify(degree_bound) {
            Ok(()) => {
                return Ok(SampledParams { params, seed, rejections: attempt });
            }
            Err(Error::DegenerateSpecialization(_)) | Err(Error::VanishingDenominator { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Err(Error::CertificationFailed { attempts: MAX_SAMPLING_ATTEMPTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn bound(parts: &[u32], n: usize) -> Partition {
        Partition::new(parts, n).unwrap()
    }

    #[test]
    fn sampling_is_deterministic() {
        let b = bound(&[2], 1);
        let x = sample_generic_params(9, Family::Big, &b).unwrap();
        let y = sample_generic_params(9, Family::Big, &b).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn q_one_is_rejected() {
        let p = ParamPoint::new(
            Family::Mk,
            rat(2, 3),
            rat(3, 5),
            rat(-1, 2),
            rat(5, 7),
            Rat::one(),
            rat(1, 3),
        );
        assert!(matches!(
            p.certify(&bound(&[1], 1)),
            Err(Error::DegenerateSpecialization(_))
        ));
    }

    #[test]
    fn seed_42_mk_certificate_has_distinct_eigenvalues() {
        let b = bound(&[2, 2], 2);
        let s = sample_generic_params(42, Family::Mk, &b).unwrap();
        let closure = enumerate_below(&b);
        for (i, lam) in closure.iter().enumerate() {
            for mu in &closure[..i] {
                let el = eigenvalue(Family::Mk, lam, &s.params).unwrap();
                let em = eigenvalue(Family::Mk, mu, &s.params).unwrap();
                assert_ne!(el, em, "{lam} vs {mu}");
            }
        }
    }

    #[test]
    fn little_family_ignores_c_and_d() {
        let mut vals = BTreeMap::new();
        for (k, v) in [("a", rat(1, 2)), ("b", rat(2, 3)), ("q", rat(1, 3)), ("t", rat(3, 4))] {
            vals.insert(k.to_string(), v);
        }
        let p = ParamPoint::from_assignments(Family::Little, &vals).unwrap();
        assert!(p.c.is_zero() && p.d.is_zero());
        vals.insert("c".into(), rat(1, 1));
        assert!(ParamPoint::from_assignments(Family::Little, &vals).is_err());
    }
}
