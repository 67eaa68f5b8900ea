//! The evaluation and norm products, assembled as [`FactorProduct`]s over
//! monomial parameters so that the same code serves rational evaluation
//! and the `q → 0`, `q → 1` degenerations.

use super::product::{FactorProduct, Mono};
use crate::combinatorics::Partition;
use crate::exactalg::{ParamPoint, PointKind};
use crate::{Error, Result};

/// Parameters `a, b, c, d, q, t` as monomials `coeff · x^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbols {
    pub a: Mono,
    pub b: Mono,
    pub c: Mono,
    pub d: Mono,
    pub q: Mono,
    pub t: Mono,
}

impl Symbols {
    /// Constant monomials for a rational parameter point.
    pub fn from_params(p: &ParamPoint) -> Symbols {
        Symbols {
            a: Mono::constant(p.a.clone()),
            b: Mono::constant(p.b.clone()),
            c: Mono::constant(p.c.clone()),
            d: Mono::constant(p.d.clone()),
            q: Mono::constant(p.q.clone()),
            t: Mono::constant(p.t.clone()),
        }
    }

    /// Little q-Jacobi symbols (`c = d = 0`).
    pub fn little(a: Mono, b: Mono, q: Mono, t: Mono) -> Symbols {
        let zero = Mono::constant(crate::Rat::zero());
        Symbols { a, b, c: zero.clone(), d: zero, q, t }
    }

    fn t_pow(&self, k: i64) -> Result<Mono> {
        self.t.pow(k)
    }

    fn q_pow(&self, k: i64) -> Result<Mono> {
        self.q.pow(k)
    }

    fn qab(&self) -> Mono {
        self.q.mul(&self.a).mul(&self.b)
    }

    /// `q^{-1}abcd`.
    fn koornwinder_lead(&self) -> Result<Mono> {
        Ok(self.a.mul(&self.b).mul(&self.c).mul(&self.d).mul(&self.q.inv()?))
    }

    fn ratio(&self, num: &Mono, den: &Mono) -> Result<Mono> {
        Ok(num.mul(&den.inv()?))
    }
}

fn parts(lambda: &Partition) -> (i64, Vec<i64>) {
    let n = lambda.context_n() as i64;
    (n, (0..n as usize).map(|i| lambda.part(i) as i64).collect())
}

/// `Π_i (L_1 t^{n-i}, …, L_r t^{n-i}; q)_{λ_i} / (M t^{2(n-i)}; q)_{2λ_i}`.
fn single_block(
    fp: &mut FactorProduct,
    lambda: &Partition,
    s: &Symbols,
    num_leads: &[(&str, Mono)],
    den_lead: (&str, Mono),
) -> Result<()> {
    let (n, lam) = parts(lambda);
    for i in 1..=n {
        let m = lam[i as usize - 1] as u32;
        let ti = s.t_pow(n - i)?;
        for (name, lead) in num_leads {
            fp.num_pochhammer(&lead.mul(&ti), &s.q, m, &format!("{name}·t^{}", n - i));
        }
        let (name, lead) = &den_lead;
        fp.den_pochhammer(
            &lead.mul(&s.t_pow(2 * (n - i))?),
            &s.q,
            2 * m,
            &format!("{name}·t^{}", 2 * (n - i)),
        );
    }
    Ok(())
}

/// `Π_{j<k} (L t^{2n-j-k+σ}; q)_{λ_j+λ_k} (P t^{k-j+τ}; q)_{λ_j-λ_k}
///  / [(L t^{2n-j-k}; q)_{λ_j+λ_k} (P t^{k-j}; q)_{λ_j-λ_k}]`.
fn pair_block(
    fp: &mut FactorProduct,
    lambda: &Partition,
    s: &Symbols,
    lead: (&str, &Mono),
    lead_shift: i64,
    diff: (&str, &Mono),
    diff_shift: i64,
) -> Result<()> {
    let (n, lam) = parts(lambda);
    for j in 1..=n {
        for k in j + 1..=n {
            let sum = (lam[j as usize - 1] + lam[k as usize - 1]) as u32;
            let dif = (lam[j as usize - 1] - lam[k as usize - 1]) as u32;
            let e = 2 * n - j - k;
            fp.num_pochhammer(
                &lead.1.mul(&s.t_pow(e + lead_shift)?),
                &s.q,
                sum,
                &format!("{}·t^{}", lead.0, e + lead_shift),
            );
            fp.den_pochhammer(&lead.1.mul(&s.t_pow(e)?), &s.q, sum, &format!("{}·t^{e}", lead.0));
            let f = k - j;
            fp.num_pochhammer(
                &diff.1.mul(&s.t_pow(f + diff_shift)?),
                &s.q,
                dif,
                &format!("{}·t^{}", diff.0, f + diff_shift),
            );
            fp.den_pochhammer(&diff.1.mul(&s.t_pow(f)?), &s.q, dif, &format!("{}·t^{f}", diff.0));
        }
    }
    Ok(())
}

/// `Δ_λ(a, b; q, t)`.
pub fn delta_product(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let mut fp = FactorProduct::one();
    pair_block(&mut fp, lambda, s, ("qab", &s.qab()), 1, ("1", &Mono::one()), 1)?;
    Ok(fp)
}

fn koornwinder_plus(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let lead = s.koornwinder_lead()?;
    let mut fp = FactorProduct::one();
    single_block(
        &mut fp,
        lambda,
        s,
        &[
            ("ab", s.a.mul(&s.b)),
            ("ac", s.a.mul(&s.c)),
            ("ad", s.a.mul(&s.d)),
            ("abcd/q", lead.clone()),
        ],
        ("abcd/q", lead.clone()),
    )?;
    pair_block(&mut fp, lambda, s, ("abcd/q", &lead), 1, ("1", &Mono::one()), 1)?;
    Ok(fp)
}

fn koornwinder_minus(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let abcd = s.a.mul(&s.b).mul(&s.c).mul(&s.d);
    let mut fp = FactorProduct::one();
    single_block(
        &mut fp,
        lambda,
        s,
        &[
            ("q", s.q.clone()),
            ("bc", s.b.mul(&s.c)),
            ("bd", s.b.mul(&s.d)),
            ("cd", s.c.mul(&s.d)),
        ],
        ("abcd", abcd.clone()),
    )?;
    pair_block(&mut fp, lambda, s, ("abcd", &abcd), -1, ("q", &s.q), -1)?;
    Ok(fp)
}

/// `P_λ(a t^ρ)` for Koornwinder polynomials.
pub fn koornwinder_evaluation(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let mut fp = koornwinder_plus(lambda, s)?;
    let (n, lam) = parts(lambda);
    for i in 1..=n {
        let base = s.a.mul(&s.t_pow(n - i)?);
        fp.scale(&base.pow(-lam[i as usize - 1])?);
    }
    Ok(fp)
}

/// `N_K(λ) = N_K^+(λ) N_K^-(λ)`.
pub fn koornwinder_norm(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let mut fp = koornwinder_plus(lambda, s)?;
    fp.times(&koornwinder_minus(lambda, s)?);
    Ok(fp)
}

fn little_plus(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let qab = s.qab();
    let mut fp = FactorProduct::one();
    single_block(
        &mut fp,
        lambda,
        s,
        &[("qa", s.q.mul(&s.a)), ("qab", qab.clone())],
        ("qab", qab),
    )?;
    fp.times(&delta_product(lambda, s)?);
    Ok(fp)
}

fn little_minus(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let q2ab = s.q.mul(&s.qab());
    let mut fp = FactorProduct::one();
    single_block(
        &mut fp,
        lambda,
        s,
        &[("q", s.q.clone()), ("qb", s.q.mul(&s.b))],
        ("q^2ab", q2ab.clone()),
    )?;
    pair_block(&mut fp, lambda, s, ("q^2ab", &q2ab), -1, ("q", &s.q), -1)?;
    Ok(fp)
}

fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// Evaluations of little q-Jacobi polynomials at `0`, `t^ρ` and
/// `q^{-1}b^{-1}t^{-ρ}`.
pub fn little_evaluation(point: PointKind, lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let (n, lam) = parts(lambda);
    let qab = s.qab();
    let qa = s.q.mul(&s.a);
    let qb = s.q.mul(&s.b);
    let mut fp = delta_product(lambda, s)?;
    let first = match point {
        PointKind::Zero => ("qa", qa),
        PointKind::TRho | PointKind::InvQbTRho => ("qb", qb.clone()),
        _ => return Err(inadmissible("little", point)),
    };
    single_block(&mut fp, lambda, s, &[first, ("qab", qab.clone())], ("qab", qab))?;
    for i in 1..=n {
        let m = lam[i as usize - 1];
        let extra = match point {
            PointKind::Zero => Mono::constant(crate::Rat::from_int(if m % 2 == 0 { 1 } else { -1 }))
                .mul(&s.q_pow(binom2(m))?),
            PointKind::TRho => s.a.mul(&s.q_pow(m)?).mul(&s.t_pow(n - i)?).pow(m)?,
            _ => qb.mul(&s.t_pow(n - i)?).pow(-m)?,
        };
        fp.scale(&extra);
    }
    Ok(fp)
}

/// `N_L(λ) = q^{(λ,λ)} a^{|λ|} t^{2(ρ,λ)} N_L^+(λ) N_L^-(λ)`.
pub fn little_norm(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let mut fp = little_plus(lambda, s)?;
    fp.times(&little_minus(lambda, s)?);
    fp.scale(&s.q_pow(lambda.self_pairing())?);
    fp.scale(&s.a.pow(lambda.weight() as i64)?);
    fp.scale(&s.t_pow(2 * lambda.rho_pairing())?);
    Ok(fp)
}

/// Evaluations of big q-Jacobi polynomials at `c t^ρ`, `-d t^ρ`,
/// `(c/qa) t^{-ρ}` and `(-d/qb) t^{-ρ}`.
pub fn big_evaluation(point: PointKind, lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let (n, lam) = parts(lambda);
    let qab = s.qab();
    let qa = s.q.mul(&s.a);
    let qb = s.q.mul(&s.b);
    let bc_d = s.ratio(&qb.mul(&s.c), &s.d)?.neg(); // −qbc/d
    let ad_c = s.ratio(&qa.mul(&s.d), &s.c)?.neg(); // −qad/c
    let leads = match point {
        PointKind::CTRho => [("qa", qa.clone()), ("-qbc/d", bc_d)],
        PointKind::MinusDTRho => [("qb", qb.clone()), ("-qad/c", ad_c)],
        PointKind::COverQaTNegrho => [("qa", qa.clone()), ("-qad/c", ad_c)],
        PointKind::MinusDOverQbTNegrho => [("qb", qb.clone()), ("-qbc/d", bc_d)],
        _ => return Err(inadmissible("big", point)),
    };
    let mut fp = delta_product(lambda, s)?;
    single_block(
        &mut fp,
        lambda,
        s,
        &[leads[0].clone(), ("qab", qab.clone()), leads[1].clone()],
        ("qab", qab),
    )?;
    for i in 1..=n {
        let m = lam[i as usize - 1];
        let extra = match point {
            PointKind::CTRho => s.d.pow(m)?.mul(&s.q_pow(binom2(m))?),
            PointKind::MinusDTRho => s.c.neg().pow(m)?.mul(&s.q_pow(binom2(m))?),
            PointKind::COverQaTNegrho => s.ratio(&s.c, &qa)?.mul(&s.t_pow(i - n)?).pow(m)?,
            _ => s.ratio(&s.d, &qb)?.neg().mul(&s.t_pow(i - n)?).pow(m)?,
        };
        fp.scale(&extra);
    }
    Ok(fp)
}

/// `N_B(λ) = (cd)^{|λ|} t^{(ρ,λ)} Π_i q^{C(λ_i,2)} (−qbc/d t^{n-i}, −qad/c t^{n-i}; q)_{λ_i} N_L^+ N_L^-`.
pub fn big_norm(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let (n, lam) = parts(lambda);
    let qa = s.q.mul(&s.a);
    let qb = s.q.mul(&s.b);
    let bc_d = s.ratio(&qb.mul(&s.c), &s.d)?.neg();
    let ad_c = s.ratio(&qa.mul(&s.d), &s.c)?.neg();
    let mut fp = little_plus(lambda, s)?;
    fp.times(&little_minus(lambda, s)?);
    fp.scale(&s.c.mul(&s.d).pow(lambda.weight() as i64)?);
    fp.scale(&s.t_pow(lambda.rho_pairing())?);
    for i in 1..=n {
        let m = lam[i as usize - 1];
        let ti = s.t_pow(n - i)?;
        fp.scale(&s.q_pow(binom2(m))?);
        fp.num_pochhammer(&bc_d.mul(&ti), &s.q, m as u32, &format!("-qbc/d·t^{}", n - i));
        fp.num_pochhammer(&ad_c.mul(&ti), &s.q, m as u32, &format!("-qad/c·t^{}", n - i));
    }
    Ok(fp)
}

fn inadmissible(family: &str, point: PointKind) -> Error {
    Error::InvalidInput(format!("no {family} evaluation formula at {point}"))
}
