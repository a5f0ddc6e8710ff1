use num::BigInt;

use super::{central_part, is_small, is_unitarily_small, lambda_u_raw, KType, RealFormData};
use crate::error::{Error, Result};
use crate::exact::{ceil_sqrt, Rational, WeightVector};

/// Integer upper bound for `sum |b|` over positive noncompact roots `b`.
fn zonotope_radius(rf: &RealFormData) -> Rational {
    let r: BigInt = rf.positive_noncompact().iter().map(|b| ceil_sqrt(&rf.g().norm2(b))).sum();
    Rational::from_integer(r)
}

fn candidates(rf: &RealFormData, center: &WeightVector, radius2: &Rational) -> Vec<WeightVector> {
    rf.lattice()
        .points_in_ball(rf.g().form(), center, radius2)
        .into_iter()
        .filter(|mu| rf.is_dominant_integral_for_k(mu))
        .collect()
}

fn in_zonotope_ball(rf: &RealFormData, mu_z: &WeightVector) -> Result<Vec<WeightVector>> {
    if mu_z.dim() != rf.rank() {
        return Err(Error::DimensionMismatch { expected: rf.rank(), found: mu_z.dim() });
    }
    if !rf.g().is_central(mu_z) {
        return Err(Error::NotCentral(mu_z.clone()));
    }
    let r = zonotope_radius(rf);
    Ok(candidates(rf, mu_z, &(&r * &r))
        .into_iter()
        .filter(|mu| central_part(rf, mu) == *mu_z)
        .collect())
}

/// All unitarily small K-types with central part `mu_z`, sorted.
///
/// Any such `mu` has `mu - mu_z` in the zonotope of the positive noncompact
/// roots, so the scan covers the ball of radius `sum |b|` about `mu_z`.
pub fn enumerate_unitarily_small(rf: &RealFormData, mu_z: &WeightVector) -> Result<Vec<KType>> {
    let mut out = Vec::new();
    for mu in in_zonotope_ball(rf, mu_z)? {
        if is_unitarily_small(rf, &mu)? {
            out.push(KType { mu });
        }
    }
    Ok(out)
}

/// All small K-types with central part `mu_z`, sorted. Small K-types are
/// unitarily small, so the same search region applies.
pub fn enumerate_small(rf: &RealFormData, mu_z: &WeightVector) -> Result<Vec<KType>> {
    let mut out = Vec::new();
    for mu in in_zonotope_ball(rf, mu_z)? {
        if is_small(rf, &mu)? {
            out.push(KType { mu });
        }
    }
    Ok(out)
}

/// All K-types with `lambda_u(mu) = lambda_u`, sorted; empty when no K-type
/// has this parameter. Every such `mu` satisfies `|mu + 2 rho_c - lambda_u| <= |2 rho|`.
pub fn enumerate_b_lambda_u(rf: &RealFormData, lambda_u: &WeightVector) -> Result<Vec<KType>> {
    if lambda_u.dim() != rf.rank() {
        return Err(Error::DimensionMismatch { expected: rf.rank(), found: lambda_u.dim() });
    }
    let center = lambda_u - rf.two_rho_c();
    let radius2 = rf.g().norm2(&rf.g().two_rho());
    let mut out = Vec::new();
    for mu in candidates(rf, &center, &radius2) {
        if lambda_u_raw(rf, &mu)? == *lambda_u {
            out.push(KType { mu });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::exact::ratio;

    fn weights(v: Vec<KType>) -> Vec<WeightVector> {
        v.into_iter().map(KType::into_inner).collect()
    }

    #[test]
    fn sl2_sets() {
        let rf = sl2();
        let us = weights(enumerate_unitarily_small(&rf, &w(&[0])).unwrap());
        assert_eq!(us, (-2..=2).map(|n| w(&[n])).collect::<Vec<_>>());
        let sm = weights(enumerate_small(&rf, &w(&[0])).unwrap());
        assert_eq!(sm, (-1..=1).map(|n| w(&[n])).collect::<Vec<_>>());
        assert_eq!(weights(enumerate_b_lambda_u(&rf, &w(&[3])).unwrap()), vec![w(&[5])]);
        assert_eq!(weights(enumerate_b_lambda_u(&rf, &w(&[0])).unwrap()), us);
        assert!(matches!(enumerate_unitarily_small(&rf, &w(&[1])), Err(Error::NotCentral(_))));
    }

    #[test]
    fn sp4_sets() {
        let rf = sp4();
        let us = weights(enumerate_unitarily_small(&rf, &w(&[0, 0])).unwrap());
        let mut expect = Vec::new();
        for p in -3i64..=3 {
            for q in -3..=p {
                if p - q <= 4 {
                    expect.push(w(&[p, q]));
                }
            }
        }
        expect.sort();
        assert_eq!(us.len(), 25);
        assert_eq!(us, expect);
        let sm = weights(enumerate_small(&rf, &w(&[0, 0])).unwrap());
        assert_eq!(sm, vec![w(&[-1, -1]), w(&[0, -1]), w(&[0, 0]), w(&[1, 0]), w(&[1, 1])]);
        let b = weights(enumerate_b_lambda_u(&rf, &w(&[4, 0])).unwrap());
        assert_eq!(b, (-1..=3).map(|q| w(&[7, q])).collect::<Vec<_>>());
    }

    #[test]
    fn u11_sets() {
        let rf = u11();
        for m in -3i64..=3 {
            let mu_z = WeightVector::new(vec![ratio(m, 2), ratio(m, 2)]);
            let us = weights(enumerate_unitarily_small(&rf, &mu_z).unwrap());
            let mut expect: Vec<_> = (-6i64..=6)
                .flat_map(|p| (-6i64..=6).map(move |q| (p, q)))
                .filter(|&(p, q)| p + q == m && (p - q).abs() <= 2)
                .map(|(p, q)| w(&[p, q]))
                .collect();
            expect.sort();
            assert_eq!(us, expect, "m = {m}");
        }
    }
}
