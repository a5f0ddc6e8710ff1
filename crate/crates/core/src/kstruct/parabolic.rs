use std::collections::BTreeSet;

use num::{Signed, Zero};

use super::{enumerate_b_lambda_u, lambda_a_raw, RealFormData};
use crate::chamber::t_gamma;
use crate::error::{Error, Result};
use crate::exact::WeightVector;
use crate::rootsys::RootSystemData;

/// Levi and nilradical roots cut out by a weight `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaParabolic {
    pub lambda: WeightVector,
    /// Roots orthogonal to `lambda`.
    pub levi_roots: Vec<WeightVector>,
    /// Roots pairing positively with `lambda`.
    pub u_roots: Vec<WeightVector>,
    pub two_rho_u: WeightVector,
    pub two_rho_u_cap_p: WeightVector,
    /// Number of compact roots in `u`.
    pub s: usize,
    /// Number of noncompact roots in `u`.
    pub r: usize,
}

pub fn theta_parabolic(rf: &RealFormData, lambda: &WeightVector) -> Result<ThetaParabolic> {
    let n = rf.rank();
    if lambda.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: lambda.dim() });
    }
    let g = rf.g();
    let levi_roots: Vec<WeightVector> = g.roots().iter().filter(|a| g.inner(a, lambda).is_zero()).cloned().collect();
    let u_roots: Vec<WeightVector> = g.roots().iter().filter(|a| g.inner(a, lambda).is_positive()).cloned().collect();
    let u_p: Vec<&WeightVector> = u_roots.iter().filter(|a| !rf.is_compact_root(a)).collect();
    Ok(ThetaParabolic {
        lambda: lambda.clone(),
        two_rho_u: WeightVector::sum(n, &u_roots),
        two_rho_u_cap_p: WeightVector::sum(n, u_p.iter().copied()),
        s: u_roots.len() - u_p.len(),
        r: u_p.len(),
        levi_roots,
        u_roots,
    })
}

/// The real form of the Levi subgroup centralizing `lambda`: roots orthogonal
/// to `lambda`, with compactness, lattice, form and positivity inherited.
pub fn subgroup_real_form(rf: &RealFormData, lambda: &WeightVector) -> Result<RealFormData> {
    let q = theta_parabolic(rf, lambda)?;
    let g = rf.g();
    let positive: Vec<WeightVector> = q.levi_roots.iter().filter(|a| g.is_positive_root(a)).cloned().collect();
    let levi = RootSystemData::new(q.levi_roots.clone(), g.form().clone(), positive)?;
    let compact: Vec<WeightVector> = q.levi_roots.iter().filter(|a| rf.is_compact_root(a)).cloned().collect();
    let k_positive: Vec<WeightVector> =
        rf.k_positive().iter().filter(|a| q.levi_roots.contains(a)).cloned().collect();
    RealFormData::new(format!("{}({lambda})", rf.name()), levi, compact, k_positive, rf.lattice().clone())
}

/// `mu_levi + 2 rho(u ∩ p)` when that is K-dominant integral, else `None`.
///
/// `mu_levi` must be a highest weight for the compact part of the Levi subgroup.
pub fn bottom_layer_weight_shift(
    rf: &RealFormData,
    lambda: &WeightVector,
    mu_levi: &WeightVector,
) -> Result<Option<WeightVector>> {
    let levi = subgroup_real_form(rf, lambda)?;
    levi.check_k_type(mu_levi)?;
    let q = theta_parabolic(rf, lambda)?;
    let mu = mu_levi + &q.two_rho_u_cap_p;
    Ok(rf.is_dominant_integral_for_k(&mu).then_some(mu))
}

/// Outcome of checking that the bottom-layer shift maps the fiber of `lambda_u`
/// for the Levi subgroup bijectively onto the fiber for the whole group.
#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub lambda_u: WeightVector,
    /// Fiber over `lambda_u` for the Levi subgroup.
    pub left: Vec<WeightVector>,
    /// Fiber over `lambda_u` for the whole group.
    pub right: Vec<WeightVector>,
    /// Image of each element of `left` (same order).
    pub images: Vec<Option<WeightVector>>,
    pub well_defined: bool,
    pub injective: bool,
    pub onto: bool,
    /// `T_rho(lambda_a(mu)) = lambda_u` for every `mu` in `right`.
    pub recovers_lambda_u: bool,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.well_defined && self.injective && self.onto && self.recovers_lambda_u
    }
}

pub fn check_bottom_layer_bijection(rf: &RealFormData, lambda_u: &WeightVector) -> Result<BijectionReport> {
    let levi = subgroup_real_form(rf, lambda_u)?;
    let right: Vec<WeightVector> = enumerate_b_lambda_u(rf, lambda_u)?.into_iter().map(|k| k.into_inner()).collect();
    let left: Vec<WeightVector> =
        enumerate_b_lambda_u(&levi, lambda_u)?.into_iter().map(|k| k.into_inner()).collect();
    let images: Vec<Option<WeightVector>> = left
        .iter()
        .map(|mu| bottom_layer_weight_shift(rf, lambda_u, mu))
        .collect::<Result<_>>()?;
    let well_defined = images.iter().all(|im| im.as_ref().is_some_and(|x| right.binary_search(x).is_ok()));
    let distinct: BTreeSet<&WeightVector> = images.iter().flatten().collect();
    let injective = distinct.len() == images.len();
    let onto = right.iter().all(|x| distinct.contains(x));
    let mut recovers_lambda_u = true;
    for mu in &right {
        let la = lambda_a_raw(rf, mu)?;
        if t_gamma(rf.g(), rf.g().rho(), &la)? != *lambda_u {
            recovers_lambda_u = false;
        }
    }
    Ok(BijectionReport {
        lambda_u: lambda_u.clone(),
        left,
        right,
        images,
        well_defined,
        injective,
        onto,
        recovers_lambda_u,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn parabolic_examples() {
        let q = theta_parabolic(&sp4(), &w(&[0, 0])).unwrap();
        assert_eq!(q.levi_roots.len(), 8);
        assert!(q.u_roots.is_empty());
        assert_eq!((q.s, q.r), (0, 0));

        let q = theta_parabolic(&sp4(), &w(&[4, 0])).unwrap();
        let mut levi = q.levi_roots.clone();
        levi.sort();
        assert_eq!(levi, vec![w(&[0, -2]), w(&[0, 2])]);
        let mut u = q.u_roots.clone();
        u.sort();
        assert_eq!(u, vec![w(&[1, -1]), w(&[1, 1]), w(&[2, 0])]);
        assert_eq!(q.two_rho_u_cap_p, w(&[3, 1]));
        assert_eq!((q.s, q.r), (1, 2));

        let q = theta_parabolic(&sl2(), &w(&[3])).unwrap();
        assert_eq!(q.u_roots, vec![w(&[2])]);
        assert!(q.levi_roots.is_empty());
        assert_eq!((q.s, q.r), (0, 1));
    }

    #[test]
    fn subgroups() {
        let rf = sp4();
        let same = subgroup_real_form(&rf, &w(&[0, 0])).unwrap();
        assert_eq!(same.g().roots().len(), 8);
        assert_eq!(same.compact().len(), 2);
        let l = subgroup_real_form(&rf, &w(&[4, 0])).unwrap();
        assert!(l.compact().is_empty());
        assert_eq!(l.noncompact().len(), 2);
        assert_eq!(l.g().central_basis().len(), 1);
        let t = subgroup_real_form(&sl2(), &w(&[1])).unwrap();
        assert!(t.g().roots().is_empty());
    }

    #[test]
    fn shifts() {
        let rf = sp4();
        assert_eq!(bottom_layer_weight_shift(&rf, &w(&[4, 0]), &w(&[4, 2])).unwrap(), Some(w(&[7, 3])));
        assert_eq!(bottom_layer_weight_shift(&rf, &w(&[4, 0]), &w(&[4, -2])).unwrap(), Some(w(&[7, -1])));
        assert_eq!(bottom_layer_weight_shift(&rf, &w(&[0, 0]), &w(&[2, 1])).unwrap(), Some(w(&[2, 1])));
        // shift lands outside the dominant region for K
        assert_eq!(bottom_layer_weight_shift(&rf, &w(&[0, 4]), &w(&[1, 4])).unwrap(), None);
        assert!(bottom_layer_weight_shift(&rf, &w(&[0, 0]), &w(&[1, 2])).is_err());
    }

    #[test]
    fn bijections() {
        let r = check_bottom_layer_bijection(&sp4(), &w(&[4, 0])).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!((r.left.len(), r.right.len()), (5, 5));
        for lu in [3, -3] {
            let r = check_bottom_layer_bijection(&sl2(), &w(&[lu])).unwrap();
            assert!(r.ok());
            assert_eq!((r.left.len(), r.right.len()), (1, 1));
        }
        let r = check_bottom_layer_bijection(&sl2(), &w(&[0])).unwrap();
        assert!(r.ok());
        assert_eq!(r.left, r.right);
    }
}
