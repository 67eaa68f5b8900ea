//! The exact operator image against a pointwise evaluation of the operator
//! written directly from its coefficient functions.

use bcnqkit::combinatorics::partitions_up_to;
use bcnqkit::exactalg::sample_generic_params;
use bcnqkit::ops_polys::apply_operator;
use bcnqkit::{Family, ParamPoint, Partition, Rat, SymPoly};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (1i64..=9, 1i64..=9, any::<bool>()).prop_map(|(p, q, neg)| Rat::new(if neg { -p } else { p }, q))
}

/// `Π_{l≠j} (x_l − t x_j)/(x_l − x_j)`, optionally with the roles swapped.
fn cross(z: &[Rat], j: usize, t: &Rat, swapped: bool) -> Option<Rat> {
    let mut acc = Rat::one();
    for (_, zl) in z.iter().enumerate().filter(|&(l, _)| l != j) {
        let (x, y) = if swapped { (&z[j], zl) } else { (zl, &z[j]) };
        acc = acc * (x - t * y) * (x - y).inv()?;
    }
    Some(acc)
}

/// `φ_j(z)` of the Koornwinder operator.
fn koornwinder_phi(p: &ParamPoint, z: &[Rat], j: usize) -> Option<Rat> {
    let one = Rat::one();
    let zj = &z[j];
    let mut v = [&p.a, &p.b, &p.c, &p.d].iter().fold(one.clone(), |acc, e| acc * (&one - *e * zj));
    v *= ((&one - zj * zj) * (&one - &p.q * zj * zj)).inv()?;
    for (_, zl) in z.iter().enumerate().filter(|&(l, _)| l != j) {
        let zl_inv = zl.inv()?;
        v = v * (&one - &p.t * zl * zj) * (&one - &p.t * &zl_inv * zj);
        v *= ((&one - zl * zj) * (&one - &zl_inv * zj)).inv()?;
    }
    Some(v)
}

/// `(φ⁺_j(z), φ⁻_j(z))` for the family.
fn coefficients(p: &ParamPoint, z: &[Rat], j: usize) -> Option<(Rat, Rat)> {
    let n = z.len() as i64;
    let one = Rat::one();
    let zj_inv = z[j].inv()?;
    let q_inv = p.q.inv()?;
    match p.family {
        Family::Mk => {
            let flipped: Option<Vec<Rat>> = z.iter().map(Rat::inv).collect();
            Some((koornwinder_phi(p, z, j)?, koornwinder_phi(p, &flipped?, j)?))
        }
        Family::Little => {
            let plus = &p.q * p.t.pow(n - 1) * &p.a * (&p.b - &q_inv * &zj_inv) * cross(z, j, &p.t, false)?;
            let minus = (&one - &zj_inv) * cross(z, j, &p.t, true)?;
            Some((plus, minus))
        }
        Family::Big => {
            let plus = &p.q
                * p.t.pow(n - 1)
                * (&p.a - &p.c * &q_inv * &zj_inv)
                * (&p.b + &p.d * &q_inv * &zj_inv)
                * cross(z, j, &p.t, false)?;
            let minus = (&one - &p.c * &zj_inv) * (&one + &p.d * &zj_inv) * cross(z, j, &p.t, true)?;
            Some((plus, minus))
        }
    }
}

fn dilate(z: &[Rat], j: usize, s: &Rat) -> Vec<Rat> {
    let mut w = z.to_vec();
    w[j] = &w[j] * s;
    w
}

/// `(D p)(z)`, or `None` at a pole of some coefficient.
fn pointwise(p: &ParamPoint, poly: &SymPoly, z: &[Rat]) -> Option<Rat> {
    let here = poly.eval(z).ok()?;
    let q_inv = p.q.inv()?;
    let mut acc = Rat::zero();
    for j in 0..z.len() {
        let (plus, minus) = coefficients(p, z, j)?;
        let up = poly.eval(&dilate(z, j, &p.q)).ok()?;
        let down = poly.eval(&dilate(z, j, &q_inv)).ok()?;
        acc = acc + plus * (up - &here) + minus * (down - &here);
    }
    Some(acc)
}

fn case() -> impl Strategy<Value = (Family, usize, u64, Vec<Rat>, Vec<Rat>)> {
    (prop::sample::select(Family::ALL.to_vec()), 1usize..=3, 0u64..1000).prop_flat_map(|(family, n, seed)| {
        let support = partitions_up_to(n, 3, 3).len();
        (
            Just(family),
            Just(n),
            Just(seed),
            prop::collection::vec(small_rat(), support),
            prop::collection::vec(small_rat(), n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn operator_image_matches_pointwise_action((family, n, seed, coeffs, z) in case()) {
        let bound = Partition::new(&[3], n).unwrap();
        let params = sample_generic_params(seed, family, &bound).unwrap().params;
        let poly = SymPoly::from_coeffs(family.basis(), n, partitions_up_to(n, 3, 3).into_iter().zip(coeffs)).unwrap();
        let expected = pointwise(&params, &poly, &z);
        prop_assume!(expected.is_some());
        let image = apply_operator(family, &poly, &params).unwrap();
        prop_assert_eq!(image.eval(&z).unwrap(), expected.unwrap());
    }
}
