use num::{BigInt, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::linalg::{self, Matrix};
use crate::exact::{ceil_sqrt, solve_in_span, GramForm, Rational, SpanSolution, WeightVector};

/// A full-rank lattice in the weight space, given by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    basis: Vec<WeightVector>,
}

impl Lattice {
    pub fn new(basis: Vec<WeightVector>) -> Result<Self> {
        let n = basis.first().map_or(0, WeightVector::dim);
        if let Some(b) = basis.iter().find(|b| b.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
        }
        let m: Matrix = basis.iter().map(|b| b.coords().to_vec()).collect();
        if basis.len() != n || linalg::rank(&m, n) != n {
            return Err(Error::InvalidRealForm("lattice basis must be a basis of the weight space".into()));
        }
        Ok(Lattice { basis })
    }

    /// The standard lattice `Z^n`.
    pub fn standard(n: usize) -> Self {
        Lattice { basis: (0..n).map(|i| WeightVector::unit(n, i)).collect() }
    }

    pub fn basis(&self) -> &[WeightVector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, v: &WeightVector) -> Option<Vec<Rational>> {
        match solve_in_span(&self.basis, v).ok()? {
            SpanSolution::Coefficients(c) => Some(c),
            SpanSolution::OutsideSpan { .. } => None,
        }
    }

    pub fn contains(&self, v: &WeightVector) -> bool {
        v.dim() == self.dim() && self.coordinates(v).is_some_and(|c| c.iter().all(Rational::is_integer))
    }

    /// Lattice points `v` with `|v - center|^2 <= radius2`, sorted.
    ///
    /// Works in lattice coordinates: with `M = B^T G B`, the ball lies in the
    /// box `|c_i - c0_i| <= sqrt(radius2 * (M^-1)_ii)`, which is scanned and
    /// filtered exactly.
    pub fn points_in_ball(&self, form: &GramForm, center: &WeightVector, radius2: &Rational) -> Vec<WeightVector> {
        let n = self.dim();
        if radius2.is_negative() {
            return Vec::new();
        }
        if n == 0 {
            return vec![WeightVector::zero(0)];
        }
        let gram: Matrix = self
            .basis
            .iter()
            .map(|a| self.basis.iter().map(|b| form.pair(a, b)).collect())
            .collect();
        let inv = linalg::inverse(&gram).expect("lattice Gram matrix is invertible");
        let c0 = self.coordinates(center).expect("full-rank lattice spans the weight space");
        let ranges: Vec<(i64, i64)> = (0..n)
            .map(|i| {
                let k = Rational::from_integer(ceil_sqrt(&(radius2 * &inv[i][i])));
                let lo = (&c0[i] - &k).floor().to_integer();
                let hi = (&c0[i] + &k).ceil().to_integer();
                (to_i64(&lo), to_i64(&hi))
            })
            .collect();
        let mut out = Vec::new();
        let mut c: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        loop {
            let v = self
                .basis
                .iter()
                .zip(&c)
                .fold(WeightVector::zero(n), |acc, (b, &ci)| acc.add_scaled(&Rational::from_integer(ci.into()), b));
            let d = &v - center;
            if form.norm2(&d) <= *radius2 {
                out.push(v);
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort();
                    return out;
                }
                if c[i] < ranges[i].1 {
                    c[i] += 1;
                    break;
                }
                c[i] = ranges[i].0;
                i += 1;
            }
        }
    }
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("enumeration box fits in i64")
}

/// `Ok(())` when `mu` is in the lattice and `2<mu, a>/<a, a>` is a nonnegative
/// integer for every `a` in `k_positive`; otherwise names the first violation.
pub fn check_dominant_integral_for_k(
    form: &GramForm,
    k_positive: &[WeightVector],
    lattice: &Lattice,
    mu: &WeightVector,
) -> Result<()> {
    if mu.dim() != form.dim() {
        return Err(Error::DimensionMismatch { expected: form.dim(), found: mu.dim() });
    }
    if !lattice.contains(mu) {
        return Err(Error::NotKDominantIntegral { mu: mu.clone(), violated_root: None });
    }
    let two = Rational::from_integer(2.into());
    for a in k_positive {
        let c = &two * form.pair(mu, a) / form.norm2(a);
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NotKDominantIntegral { mu: mu.clone(), violated_root: Some(a.clone()) });
        }
    }
    Ok(())
}

pub fn is_dominant_integral_for_k(
    form: &GramForm,
    k_positive: &[WeightVector],
    lattice: &Lattice,
    mu: &WeightVector,
) -> bool {
    check_dominant_integral_for_k(form, k_positive, lattice, mu).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use proptest::prelude::*;

    fn w(c: &[i64]) -> WeightVector {
        WeightVector::from_ints(c)
    }

    #[test]
    fn sp4_k_dominance() {
        let form = GramForm::identity(2);
        let lat = Lattice::standard(2);
        let kp = [w(&[1, -1])];
        assert!(!is_dominant_integral_for_k(&form, &kp, &lat, &w(&[1, 2])));
        assert!(is_dominant_integral_for_k(&form, &kp, &lat, &w(&[3, -3])));
        match check_dominant_integral_for_k(&form, &kp, &lat, &w(&[1, 2])) {
            Err(Error::NotKDominantIntegral { violated_root, .. }) => assert_eq!(violated_root, Some(w(&[1, -1]))),
            other => panic!("{other:?}"),
        }
        let half = WeightVector::new(vec![ratio(1, 2), ratio(1, 2)]);
        assert!(matches!(
            check_dominant_integral_for_k(&form, &kp, &lat, &half),
            Err(Error::NotKDominantIntegral { violated_root: None, .. })
        ));
    }

    #[test]
    fn sl2_every_integer() {
        let lat = Lattice::standard(1);
        for n in -5..=5 {
            assert!(is_dominant_integral_for_k(&GramForm::identity(1), &[], &lat, &w(&[n])));
        }
    }

    #[test]
    fn rejects_degenerate_basis() {
        assert!(Lattice::new(vec![w(&[1, 1]), w(&[2, 2])]).is_err());
        assert!(Lattice::new(vec![w(&[1, 1])]).is_err());
    }

    #[test]
    fn ball_in_skew_lattice() {
        let lat = Lattice::new(vec![w(&[1, 0]), w(&[1, 2])]).unwrap();
        let pts = lat.points_in_ball(&GramForm::identity(2), &w(&[0, 0]), &int(4));
        // brute force over a large box
        let mut expect = Vec::new();
        for x in -5..=5 {
            for y in -5..=5 {
                let v = w(&[x, y]);
                if y % 2 == 0 && x * x + y * y <= 4 {
                    expect.push(v);
                }
            }
        }
        expect.sort();
        assert_eq!(pts, expect);
    }

    proptest! {
        #[test]
        fn ball_matches_brute_force(r in 0i64..30, cx in -3i64..4, cy in -3i64..4, den in 1i64..3) {
            // A2-style form on Z^2
            let form = GramForm::new(vec![vec![int(2), int(-1)], vec![int(-1), int(2)]]).unwrap();
            let lat = Lattice::standard(2);
            let center = WeightVector::new(vec![ratio(cx, den), ratio(cy, den)]);
            let pts = lat.points_in_ball(&form, &center, &int(r));
            let mut expect = Vec::new();
            for x in -12..=12 {
                for y in -12..=12 {
                    let v = w(&[x, y]);
                    if form.norm2(&(&v - &center)) <= int(r) {
                        expect.push(v);
                    }
                }
            }
            expect.sort();
            prop_assert_eq!(pts, expect);
        }
    }
}
