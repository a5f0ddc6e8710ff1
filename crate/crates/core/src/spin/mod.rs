//! Spin-module weights, exterior-algebra weights, character arithmetic and
//! the scalar side of the Dirac inequality.

mod characters;
pub mod clifford;

use std::collections::BTreeMap;

use num::Zero;

use crate::chamber::in_hull_of_orbit;
use crate::error::{Error, Result};
use crate::exact::{lp_feasible, ratio, Rational, WeightVector};
use crate::kstruct::RealFormData;

pub use characters::{
    spin_tensor_test, check_spin_highest_weights, decompose_character, freudenthal_weights,
    spin_highest_weights, weyl_dimension,
};
pub use clifford::{clifford_model, clifford_structure_checks, CliffordModel, CliffordReport};

/// Largest root count for which subset enumerations are attempted.
pub const MAX_SUBSET_ROOTS: usize = 24;

/// Finite multiset of weights with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    dim: usize,
    mult: BTreeMap<WeightVector, u64>,
}

impl WeightMultiset {
    pub fn new(dim: usize) -> Self {
        WeightMultiset { dim, mult: BTreeMap::new() }
    }

    /// `{0: 1}`.
    pub fn trivial(dim: usize) -> Self {
        let mut m = Self::new(dim);
        m.insert(WeightVector::zero(dim), 1);
        m
    }

    pub fn from_weights(dim: usize, weights: impl IntoIterator<Item = WeightVector>) -> Self {
        let mut m = Self::new(dim);
        for w in weights {
            m.insert(w, 1);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn insert(&mut self, w: WeightVector, count: u64) {
        assert_eq!(w.dim(), self.dim, "weight dimension mismatch");
        if count > 0 {
            *self.mult.entry(w).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, w: &WeightVector) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.mult.values().sum()
    }

    /// Number of distinct weights.
    pub fn support_len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, u64)> {
        self.mult.iter().map(|(w, &c)| (w, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &WeightVector> {
        self.mult.keys()
    }

    /// Character of the tensor product: all pairwise sums.
    pub fn tensor(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = Self::new(self.dim);
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.insert(a + b, ca * cb);
            }
        }
        out
    }

    /// Direct sum.
    pub fn add(&mut self, other: &WeightMultiset, times: u64) {
        for (w, c) in other.iter() {
            self.insert(w.clone(), c * times);
        }
    }

    /// Removes `times` copies of `other`; fails if a multiplicity would go negative.
    pub fn subtract(&mut self, other: &WeightMultiset, times: u64) -> Result<()> {
        for (w, c) in other.iter() {
            let have = self.multiplicity(w);
            let need = c * times;
            if have < need {
                return Err(Error::InvalidCharacter(format!(
                    "multiplicity of {w} would become negative ({have} - {need})"
                )));
            }
        }
        for (w, c) in other.iter() {
            let e = self.mult.get_mut(w).expect("checked above");
            *e -= c * times;
            if *e == 0 {
                self.mult.remove(w);
            }
        }
        Ok(())
    }

    /// Invariance under the reflections in `roots` (hence under their Weyl group).
    pub fn is_invariant(&self, data: &crate::rootsys::RootSystemData) -> bool {
        data.simple()
            .iter()
            .all(|a| self.iter().all(|(w, c)| self.multiplicity(&data.reflect(a, w)) == c))
    }
}

fn sum_over_roots(
    rf: &RealFormData,
    roots: &[WeightVector],
    choices: impl Fn(&WeightVector) -> [WeightVector; 2],
) -> Result<WeightMultiset> {
    if roots.len() > MAX_SUBSET_ROOTS {
        return Err(Error::SizeCapExceeded(format!(
            "{} roots exceed the subset enumeration cap of {MAX_SUBSET_ROOTS}",
            roots.len()
        )));
    }
    let mut acc = WeightMultiset::trivial(rf.rank());
    for b in roots {
        let step = WeightMultiset::from_weights(rf.rank(), choices(b));
        acc = acc.tensor(&step);
    }
    Ok(acc)
}

/// Weights `1/2 sum ±b` over the positive noncompact roots, with multiplicity.
pub fn spin_weights(rf: &RealFormData) -> Result<WeightMultiset> {
    let half = ratio(1, 2);
    sum_over_roots(rf, &rf.positive_noncompact(), |b| [b.scale(&half), b.scale(&-half.clone())])
}

/// Subset sums of all noncompact roots: the weights of the exterior algebra of `p`.
pub fn wedge_p_weights(rf: &RealFormData) -> Result<WeightMultiset> {
    sum_over_roots(rf, rf.noncompact(), |b| [WeightVector::zero(b.dim()), b.clone()])
}

/// Exterior algebra of `p` equals spin tensor spin as weight multisets.
pub fn check_wedge_is_spin_square(rf: &RealFormData) -> Result<bool> {
    let s = spin_weights(rf)?;
    Ok(wedge_p_weights(rf)? == s.tensor(&s))
}

/// Highest weight `mu` lies in `{sum b_s s : 0 <= b_s <= 1}`. `set` must be
/// invariant under the compact Weyl group.
pub fn is_type_s(rf: &RealFormData, mu: &WeightVector, set: &[WeightVector]) -> Result<bool> {
    rf.check_k_type(mu)?;
    for s in set {
        for a in rf.k().simple() {
            let r = rf.k().reflect(a, s);
            if !set.contains(&r) {
                return Err(Error::NotWeylInvariant(format!("reflection of {s} in {a} is {r}")));
            }
        }
    }
    let m = set.len();
    let lo = vec![Rational::zero(); m];
    let hi = vec![Rational::from_integer(1.into()); m];
    Ok(lp_feasible(set, &lo, &hi, mu)?.is_some())
}

/// `|mu_tilde + rho_c|^2 - |phi|^2`.
pub fn dirac_square_eigenvalue(rf: &RealFormData, mu_tilde: &WeightVector, phi: &WeightVector) -> Result<Rational> {
    check(rf, mu_tilde)?;
    check(rf, phi)?;
    let g = rf.g();
    Ok(g.norm2(&(mu_tilde + rf.rho_c())) - g.norm2(phi))
}

/// `|mu_tilde + rho_c|^2 >= |re_phi|^2`.
pub fn dirac_inequality(rf: &RealFormData, mu_tilde: &WeightVector, re_phi: &WeightVector) -> Result<bool> {
    Ok(!num::Signed::is_negative(&dirac_square_eigenvalue(rf, mu_tilde, re_phi)?))
}

/// `re_phi` lies in the hull of the Weyl orbit of `mu_tilde + rho_c`.
pub fn conj_sharp_test(rf: &RealFormData, mu_tilde: &WeightVector, re_phi: &WeightVector) -> Result<bool> {
    in_hull_of_orbit(rf.g(), re_phi, &(mu_tilde + rf.rho_c()))
}

fn check(rf: &RealFormData, v: &WeightVector) -> Result<()> {
    if v.dim() == rf.rank() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: rf.rank(), found: v.dim() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::config::bundled;
    use crate::exact::int;

    fn w(c: &[i64]) -> WeightVector {
        WeightVector::from_ints(c)
    }

    #[test]
    fn spin_and_wedge_weights() {
        let sl2 = bundled("sl2").unwrap();
        let s = spin_weights(&sl2).unwrap();
        assert_eq!(s, WeightMultiset::from_weights(1, [w(&[1]), w(&[-1])]));
        let wedge = wedge_p_weights(&sl2).unwrap();
        assert_eq!(wedge.multiplicity(&w(&[0])), 2);
        assert_eq!(wedge.multiplicity(&w(&[2])), 1);
        assert_eq!(wedge.total(), 4);

        let sp4 = bundled("sp4").unwrap();
        assert_eq!(spin_weights(&sp4).unwrap().total(), 8);
        assert_eq!(wedge_p_weights(&sp4).unwrap().total(), 64);
        for name in ["sl2", "sp4", "u11", "su21"] {
            assert!(check_wedge_is_spin_square(&bundled(name).unwrap()).unwrap(), "{name}");
        }
    }

    #[test]
    fn empty_p() {
        let rf = crate::cli::config::RealFormConfig {
            cartan_label: Some("A1".into()),
            compact_roots: vec![w(&[2]), w(&[-2])],
            k_positive: vec![w(&[2])],
            ..Default::default()
        }
        .build()
        .unwrap();
        assert_eq!(spin_weights(&rf).unwrap(), WeightMultiset::trivial(1));
        assert_eq!(wedge_p_weights(&rf).unwrap(), WeightMultiset::trivial(1));
        assert!(check_wedge_is_spin_square(&rf).unwrap());
    }

    #[test]
    fn type_s() {
        let sp4 = bundled("sp4").unwrap();
        let p = sp4.noncompact().to_vec();
        assert!(is_type_s(&sp4, &w(&[0, 0]), &p).unwrap());
        assert!(is_type_s(&sp4, &w(&[3, -1]), &p).unwrap());
        assert!(!is_type_s(&sp4, &w(&[4, 0]), &p).unwrap());
        assert!(matches!(is_type_s(&sp4, &w(&[0, 0]), &[w(&[2, 0])]), Err(Error::NotWeylInvariant(_))));
        let sl2 = bundled("sl2").unwrap();
        assert!(!is_type_s(&sl2, &w(&[3]), sl2.noncompact()).unwrap());
    }

    #[test]
    fn dirac_scalars() {
        let sl2 = bundled("sl2").unwrap();
        assert_eq!(dirac_square_eigenvalue(&sl2, &w(&[1]), &w(&[2])).unwrap(), int(-3));
        assert!(!dirac_inequality(&sl2, &w(&[1]), &w(&[2])).unwrap());
        assert!(!conj_sharp_test(&sl2, &w(&[1]), &w(&[2])).unwrap());
        for name in ["sl2", "sp4", "u11", "su21"] {
            let rf = bundled(name).unwrap();
            let zero = WeightVector::zero(rf.rank());
            assert!(dirac_square_eigenvalue(&rf, &zero, rf.rho_c()).unwrap().is_zero());
            assert!(dirac_square_eigenvalue(&rf, &rf.rho_n(), rf.g().rho()).unwrap().is_zero());
            assert!(dirac_inequality(&rf, &rf.rho_n(), &zero).unwrap());
            assert!(conj_sharp_test(&rf, &rf.rho_n(), &(&rf.rho_n() + rf.rho_c())).unwrap());
            assert!(conj_sharp_test(&rf, &rf.rho_n(), &zero).unwrap());
        }
    }

    #[test]
    fn multiset_arithmetic() {
        let mut a = WeightMultiset::from_weights(1, [w(&[1]), w(&[-1])]);
        let b = a.clone();
        a.add(&b, 2);
        assert_eq!(a.total(), 6);
        a.subtract(&b, 3).unwrap();
        assert!(a.is_empty());
        assert!(a.subtract(&b, 1).is_err());
    }
}
