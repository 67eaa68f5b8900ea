//! Exact application of the second-order q-difference operators.
//!
//! Each operator has the shape `D = Σ_k φ_k(z) (T_k − 1)` where `T_k`
//! dilates one variable by `q^{±1}` and `φ_k` is a rational function. The
//! denominators of all `φ_k` are split into a scalar, a monomial and
//! primitive polynomial factors; the operator is then stored over the
//! common denominator `Π f^{m_f}` as numerators `M_k`, which do not depend
//! on the polynomial the operator is applied to. Applying `D` to `p` forms
//! `Σ_k M_k · T_k p − (Σ_k M_k) · p` and divides exactly by every factor,
//! failing loudly if any division leaves a remainder.

use crate::exactalg::laurent::{Exponent, LPoly};
use crate::exactalg::{Family, ParamPoint, Rat, SymPoly};
use crate::{Error, Result};

struct RawTerm {
    var: usize,
    dilation: Rat,
    num: LPoly,
    den: Vec<LPoly>,
}

/// A prepared difference operator for one family, parameter point and rank.
pub struct Operator {
    family: Family,
    n: usize,
    shifts: Vec<(usize, Rat)>,
    numerators: Vec<LPoly>,
    total: LPoly,
    factors: Vec<(LPoly, u32)>,
}

/// `c0 + c1 · z^e`.
fn binomial(n: usize, c0: Rat, c1: Rat, e: Exponent) -> LPoly {
    let mut p = LPoly::constant(n, c0);
    p.add_term(e, c1);
    p
}

fn unit(n: usize, pairs: &[(usize, i32)]) -> Exponent {
    let mut e = vec![0; n];
    for &(v, k) in pairs {
        e[v] += k;
    }
    e
}

fn product(n: usize, polys: impl IntoIterator<Item = LPoly>) -> LPoly {
    polys
        .into_iter()
        .fold(LPoly::constant(n, Rat::one()), |acc, p| acc.mul(&p))
}

fn koornwinder_terms(p: &ParamPoint, n: usize) -> Vec<RawTerm> {
    let one = Rat::one;
    let mut out = Vec::new();
    for j in 0..n {
        let mut num = product(
            n,
            [&p.a, &p.b, &p.c, &p.d]
                .iter()
                .map(|e| binomial(n, one(), -(*e).clone(), unit(n, &[(j, 1)]))),
        );
        let mut den = vec![
            binomial(n, one(), -one(), unit(n, &[(j, 2)])),
            binomial(n, one(), -p.q.clone(), unit(n, &[(j, 2)])),
        ];
        for l in (0..n).filter(|&l| l != j) {
            num = num
                .mul(&binomial(n, one(), -p.t.clone(), unit(n, &[(l, 1), (j, 1)])))
                .mul(&binomial(n, one(), -p.t.clone(), unit(n, &[(j, 1), (l, -1)])));
            den.push(binomial(n, one(), -one(), unit(n, &[(l, 1), (j, 1)])));
            den.push(binomial(n, one(), -one(), unit(n, &[(j, 1), (l, -1)])));
        }
        let flipped_num = num.invert_variables();
        let flipped_den = den.iter().map(LPoly::invert_variables).collect();
        out.push(RawTerm { var: j, dilation: p.q.clone(), num, den });
        let q_inv = p.q.inv().expect("certified q is nonzero");
        out.push(RawTerm { var: j, dilation: q_inv, num: flipped_num, den: flipped_den });
    }
    out
}

fn little_terms(p: &ParamPoint, n: usize) -> Vec<RawTerm> {
    let one = Rat::one;
    let q_inv = p.q.inv().expect("certified q is nonzero");
    let mut out = Vec::new();
    for j in 0..n {
        // φ⁺ = q t^{n-1} a (b − q^{-1} z_j^{-1}) Π_{l≠j} (z_l − t z_j)/(z_l − z_j)
        let scale = &p.q * p.t.pow(n as i64 - 1) * &p.a;
        let mut plus = binomial(n, p.b.clone(), -q_inv.clone(), unit(n, &[(j, -1)])).scale(&scale);
        // φ⁻ = (1 − z_j^{-1}) Π_{l≠j} (z_j − t z_l)/(z_j − z_l)
        let mut minus = binomial(n, one(), -one(), unit(n, &[(j, -1)]));
        let (mut den_plus, mut den_minus) = (Vec::new(), Vec::new());
        for l in (0..n).filter(|&l| l != j) {
            plus = plus.mul(&pair(n, l, one(), j, -p.t.clone()));
            minus = minus.mul(&pair(n, j, one(), l, -p.t.clone()));
            den_plus.push(pair(n, l, one(), j, -one()));
            den_minus.push(pair(n, j, one(), l, -one()));
        }
        out.push(RawTerm { var: j, dilation: p.q.clone(), num: plus, den: den_plus });
        out.push(RawTerm { var: j, dilation: q_inv.clone(), num: minus, den: den_minus });
    }
    out
}

fn big_terms(p: &ParamPoint, n: usize) -> Vec<RawTerm> {
    let one = Rat::one;
    let q_inv = p.q.inv().expect("certified q is nonzero");
    let mut out = Vec::new();
    for j in 0..n {
        // φ⁺ = q t^{n-1} (a − c q^{-1} z_j^{-1})(b + d q^{-1} z_j^{-1}) Π (z_l − t z_j)/(z_l − z_j)
        let scale = &p.q * p.t.pow(n as i64 - 1);
        let mut plus = binomial(n, p.a.clone(), -(&p.c * &q_inv), unit(n, &[(j, -1)]))
            .mul(&binomial(n, p.b.clone(), &p.d * &q_inv, unit(n, &[(j, -1)])))
            .scale(&scale);
        // φ⁻ = (1 − c z_j^{-1})(1 + d z_j^{-1}) Π (z_j − t z_l)/(z_j − z_l)
        let mut minus = binomial(n, one(), -p.c.clone(), unit(n, &[(j, -1)]))
            .mul(&binomial(n, one(), p.d.clone(), unit(n, &[(j, -1)])));
        let (mut den_plus, mut den_minus) = (Vec::new(), Vec::new());
        for l in (0..n).filter(|&l| l != j) {
            plus = plus.mul(&pair(n, l, one(), j, -p.t.clone()));
            minus = minus.mul(&pair(n, j, one(), l, -p.t.clone()));
            den_plus.push(pair(n, l, one(), j, -one()));
            den_minus.push(pair(n, j, one(), l, -one()));
        }
        out.push(RawTerm { var: j, dilation: p.q.clone(), num: plus, den: den_plus });
        out.push(RawTerm { var: j, dilation: q_inv.clone(), num: minus, den: den_minus });
    }
    out
}

/// `cx · z_x + cy · z_y`.
fn pair(n: usize, x: usize, cx: Rat, y: usize, cy: Rat) -> LPoly {
    let mut p = LPoly::monomial(unit(n, &[(x, 1)]), cx);
    p.add_term(unit(n, &[(y, 1)]), cy);
    p
}

impl Operator {
    pub fn new(family: Family, params: &ParamPoint, n: usize) -> Result<Operator> {
        if n == 0 {
            return Err(Error::InvalidInput("operator needs at least one variable".into()));
        }
        if params.q.is_zero() {
            return Err(Error::DegenerateSpecialization("q = 0".into()));
        }
        let raw = match family {
            Family::Mk => koornwinder_terms(params, n),
            Family::Little => little_terms(params, n),
            Family::Big => big_terms(params, n),
        };

        // split every denominator into scalar · monomial · primitive factors
        let mut factors: Vec<(LPoly, u32)> = Vec::new();
        let mut per_term = Vec::new();
        for term in &raw {
            let mut scalar = Rat::one();
            let mut content = vec![0; n];
            let mut mult = vec![0u32; 0];
            for f in &term.den {
                let (lc, c, prim) = f.normalize().ok_or_else(|| {
                    Error::DegenerateSpecialization("zero denominator factor".into())
                })?;
                scalar *= lc;
                for (x, y) in content.iter_mut().zip(&c) {
                    *x += y;
                }
                if prim.len() == 1 {
                    // a pure monomial has been absorbed into the content
                    continue;
                }
                let idx = match factors.iter().position(|(g, _)| *g == prim) {
                    Some(i) => i,
                    None => {
                        factors.push((prim, 0));
                        factors.len() - 1
                    }
                };
                if mult.len() < factors.len() {
                    mult.resize(factors.len(), 0);
                }
                mult[idx] += 1;
            }
            per_term.push((scalar, content, mult));
        }
        for (_, _, mult) in &per_term {
            for (i, &m) in mult.iter().enumerate() {
                factors[i].1 = factors[i].1.max(m);
            }
        }

        let mut numerators = Vec::new();
        let mut total = LPoly::zero(n);
        for (term, (scalar, content, mult)) in raw.iter().zip(&per_term) {
            let mut m = term.num.clone();
            for (i, (f, max)) in factors.iter().enumerate() {
                let have = mult.get(i).copied().unwrap_or(0);
                if *max > have {
                    m = m.mul(&f.pow(max - have));
                }
            }
            let neg: Vec<i32> = content.iter().map(|x| -x).collect();
            let inv = scalar.inv().expect("normalized leading coefficients are nonzero");
            let m = m.shift(&neg).scale(&inv);
            total = total.add(&m);
            numerators.push(m);
        }
        Ok(Operator {
            family,
            n,
            shifts: raw.iter().map(|t| (t.var, t.dilation.clone())).collect(),
            numerators,
            total,
            factors,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `D · p`, exactly.
    pub fn apply(&self, p: &SymPoly) -> Result<SymPoly> {
        let basis = self.family.basis();
        if p.basis() != basis {
            return Err(Error::BasisMismatch(format!(
                "{} operator applied to a {} polynomial",
                self.family,
                p.basis()
            )));
        }
        if p.n() != self.n {
            return Err(Error::MismatchedContext { left: self.n, right: p.n() });
        }
        let lp = p.to_laurent();
        let mut acc = self.total.mul(&lp).scale(&-Rat::one());
        for ((var, dil), m) in self.shifts.iter().zip(&self.numerators) {
            acc = acc.add(&m.mul(&lp.dilate(*var, dil)));
        }
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                acc = acc
                    .div_exact(f)
                    .ok_or_else(|| Error::NonDivisible(format!("{f:?}")))?;
            }
        }
        SymPoly::from_laurent(basis, &acc)
    }
}
