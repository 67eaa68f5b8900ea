//! Difference operators and the monic eigenpolynomials they determine.

mod basis;
mod operator;

pub use basis::{Eigenbasis, OperatorMatrix};
pub use operator::Operator;

use crate::combinatorics::Partition;
use crate::exactalg::{Family, ParamPoint, Rat, SymPoly};
use crate::{Error, Result};

/// Eigenvalue of `P_λ`.
///
/// Koornwinder: `Σ_j q^{-1}abcd t^{2n-j-1}(q^{λ_j}-1) + t^{j-1}(q^{-λ_j}-1)`.
/// Both q-Jacobi families: the same with `q^{-1}abcd` replaced by `qab`.
pub fn eigenvalue(family: Family, lambda: &Partition, params: &ParamPoint) -> Result<Rat> {
    let ParamPoint { a, b, c, d, q, t, .. } = params;
    if q.is_zero() {
        return Err(Error::DegenerateSpecialization(
            "eigenvalue undefined at q = 0".into(),
        ));
    }
    if t.is_zero() {
        return Err(Error::DegenerateSpecialization("t = 0".into()));
    }
    let n = lambda.context_n() as i64;
    let lead = match family {
        Family::Mk => a * b * c * d / q,
        Family::Little | Family::Big => q * a * b,
    };
    let one = Rat::one();
    let mut e = Rat::zero();
    for j in 1..=n {
        let m = lambda.part(j as usize - 1) as i64;
        e += &lead * t.pow(2 * n - j - 1) * (q.pow(m) - &one);
        e += t.pow(j - 1) * (q.pow(-m) - &one);
    }
    Ok(e)
}

/// `D · p` for the operator of `family`.
pub fn apply_operator(family: Family, p: &SymPoly, params: &ParamPoint) -> Result<SymPoly> {
    Operator::new(family, params, p.n())?.apply(p)
}

/// Matrix of the operator on `{m_ν : ν ≤ top}`, checked for triangularity
/// and for the eigenvalues on the diagonal.
pub fn build_operator_matrix(
    family: Family,
    top: &Partition,
    params: &ParamPoint,
) -> Result<OperatorMatrix> {
    Eigenbasis::new(family, params, top.context_n())?.matrix(top)
}

/// The monic eigenpolynomial `P_λ`.
pub fn compute_polynomial(family: Family, lambda: &Partition, params: &ParamPoint) -> Result<SymPoly> {
    Eigenbasis::new(family, params, lambda.context_n())?.polynomial(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn mk() -> ParamPoint {
        ParamPoint::new(Family::Mk, rat(1, 2), rat(-2, 3), rat(3, 5), rat(5, 7), rat(2, 7), rat(3, 4))
    }

    fn little() -> ParamPoint {
        ParamPoint::little(rat(2, 3), rat(-1, 5), rat(1, 3), rat(4, 5))
    }

    #[test]
    fn eigenvalue_examples() {
        let p = mk();
        assert_eq!(eigenvalue(Family::Mk, &Partition::zero(2), &p).unwrap(), Rat::zero());
        let one = Rat::one();
        let lam = Partition::new(&[1], 1).unwrap();
        let abcd = &p.a * &p.b * &p.c * &p.d;
        let expected = &abcd / &p.q * (&p.q - &one) + (p.q.inv().unwrap() - &one);
        assert_eq!(eigenvalue(Family::Mk, &lam, &p).unwrap(), expected);

        let l = little();
        let lam = Partition::new(&[1, 0], 2).unwrap();
        let expected = &l.q * &l.a * &l.b * l.t.pow(2) * (&l.q - &one) + (l.q.inv().unwrap() - &one);
        assert_eq!(eigenvalue(Family::Little, &lam, &l).unwrap(), expected);
    }

    #[test]
    fn constants_are_annihilated() {
        for (family, p) in [(Family::Mk, mk()), (Family::Little, little())] {
            let one = SymPoly::one(family.basis(), 2);
            assert!(apply_operator(family, &one, &p).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_one_images_have_eigenvalue_on_top() {
        for (family, p) in [(Family::Mk, mk()), (Family::Little, little())] {
            let lam = Partition::new(&[1], 1).unwrap();
            let image = apply_operator(family, &SymPoly::monomial(family.basis(), &lam), &p).unwrap();
            assert_eq!(image.coeff(&lam), eigenvalue(family, &lam, &p).unwrap());
            assert!(image.len() <= 2);
        }
    }

    #[test]
    fn basis_mismatch_is_reported() {
        let lam = Partition::new(&[1], 1).unwrap();
        let p = SymPoly::monomial(Family::Little.basis(), &lam);
        assert!(matches!(
            apply_operator(Family::Mk, &p, &mk()),
            Err(Error::BasisMismatch(_))
        ));
    }

    #[test]
    fn rank_one_askey_wilson_evaluation() {
        let p = mk();
        let lam = Partition::new(&[1], 1).unwrap();
        let poly = compute_polynomial(Family::Mk, &lam, &p).unwrap();
        let one = Rat::one();
        let (a, b, c, d) = (&p.a, &p.b, &p.c, &p.d);
        let expected = (&one - a * b) * (&one - a * c) * (&one - a * d) / (a * (&one - a * b * c * d));
        assert_eq!(poly.eval(std::slice::from_ref(a)).unwrap(), expected);
    }

    #[test]
    fn little_rank_one_value_at_zero() {
        let p = little();
        let lam = Partition::new(&[1], 1).unwrap();
        let poly = compute_polynomial(Family::Little, &lam, &p).unwrap();
        let one = Rat::one();
        let (q, a, b) = (&p.q, &p.a, &p.b);
        let qab = q * a * b;
        let expected = -((&one - q * a) * (&one - &qab)) / ((&one - &qab) * (&one - q * &qab));
        assert_eq!(poly.eval(&[Rat::zero()]).unwrap(), expected);
    }

    #[test]
    fn small_matrices() {
        let p = mk();
        let m = build_operator_matrix(Family::Mk, &Partition::zero(1), &p).unwrap();
        assert_eq!(m.entries, vec![vec![Rat::zero()]]);
        let top = Partition::new(&[1], 1).unwrap();
        let m = build_operator_matrix(Family::Mk, &top, &p).unwrap();
        assert_eq!(m.order.len(), 2);
        assert_eq!(m.entries[0][1], Rat::zero());
        assert_eq!(m.entries[1][1], eigenvalue(Family::Mk, &top, &p).unwrap());

        let top = Partition::new(&[1, 1], 2).unwrap();
        let m = build_operator_matrix(Family::Little, &top, &little()).unwrap();
        assert_eq!(m.order.len(), 3);
        for i in 0..3 {
            for j in i + 1..3 {
                assert_eq!(m.entries[i][j], Rat::zero());
            }
        }
    }
}
