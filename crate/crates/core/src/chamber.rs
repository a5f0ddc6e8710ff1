//! Nearest-point projection onto the closed dominant chamber, the maps `T_gamma`,
//! and membership in Weyl-orbit hulls and the `rho` zonotope.
//!
//! The chamber is `C = V_z + sum R>=0 xi_i`. Its nearest point `c0` to `v` is
//! characterized by: `c0` dominant, `c0 - v` in the positive-root cone, and
//! `<c0 - v, c0> = 0`. [`project_onto_chamber`] searches active wall sets and
//! returns only a candidate that passes exactly this test.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{linalg, lp_feasible, ratio, Rational, WeightVector};
use crate::rootsys::{dominant_representative, RootSystemData, WeylElement};

/// Nearest point of the dominant chamber together with its optimality witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionCertificate {
    pub input: WeightVector,
    pub output: WeightVector,
    /// `output - input = sum slack_i * simple_i`, all `slack_i >= 0`.
    pub slack: Vec<Rational>,
    /// Indices of simple roots orthogonal to `output` that were imposed.
    pub active: Vec<usize>,
}

impl ProjectionCertificate {
    /// Exact check of the three optimality conditions.
    pub fn validate(&self, data: &RootSystemData) -> bool {
        if self.slack.len() != data.semisimple_rank() || self.slack.iter().any(Signed::is_negative) {
            return false;
        }
        let e = &self.output - &self.input;
        let recon = data
            .simple()
            .iter()
            .zip(&self.slack)
            .fold(WeightVector::zero(data.rank()), |acc, (a, s)| acc.add_scaled(s, a));
        recon == e && data.is_dominant(&self.output) && data.inner(&e, &self.output).is_zero()
    }
}

fn check_dim(data: &RootSystemData, v: &WeightVector) -> Result<()> {
    if v.dim() == data.rank() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: data.rank(), found: v.dim() })
    }
}

/// Exact projection of `v` onto the closed dominant chamber.
pub fn project_onto_chamber(data: &RootSystemData, v: &WeightVector) -> Result<ProjectionCertificate> {
    check_dim(data, v)?;
    let simple = data.simple();
    let l = simple.len();
    let pairings: Vec<Rational> = simple.iter().map(|a| data.inner(v, a)).collect();
    if pairings.iter().all(|p| !p.is_negative()) {
        let cert = ProjectionCertificate {
            input: v.clone(),
            output: v.clone(),
            slack: vec![Rational::zero(); l],
            active: Vec::new(),
        };
        return Ok(cert);
    }
    let mut subsets: Vec<u64> = (1..(1u64 << l)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    for mask in subsets {
        let active: Vec<usize> = (0..l).filter(|i| mask >> i & 1 == 1).collect();
        let a: linalg::Matrix = active
            .iter()
            .map(|&i| active.iter().map(|&j| data.inner(&simple[i], &simple[j])).collect())
            .collect();
        let rhs: Vec<Rational> = active.iter().map(|&i| pairings[i].clone()).collect();
        let Some(t) = linalg::solve(&a, &rhs, active.len()) else {
            continue;
        };
        // c0 - v = -sum t_i a_i must lie in the positive cone
        if t.iter().any(Signed::is_positive) {
            continue;
        }
        let mut c = v.clone();
        let mut slack = vec![Rational::zero(); l];
        for (&i, ti) in active.iter().zip(&t) {
            c = c.add_scaled(&-ti, &simple[i]);
            slack[i] = -ti.clone();
        }
        if !data.is_dominant(&c) {
            continue;
        }
        let cert = ProjectionCertificate { input: v.clone(), output: c, slack, active };
        if cert.validate(data) {
            return Ok(cert);
        }
    }
    Err(Error::Internal(format!("no active set certifies the projection of {v}")))
}

/// The projection alone.
pub fn project(data: &RootSystemData, v: &WeightVector) -> Result<WeightVector> {
    Ok(project_onto_chamber(data, v)?.output)
}

/// `T_gamma(v) = w P(v_plus - gamma)` where `w v_plus = v` and `v_plus` is dominant.
pub fn t_gamma(data: &RootSystemData, gamma: &WeightVector, v: &WeightVector) -> Result<WeightVector> {
    check_dim(data, v)?;
    let (_, w) = dominant_representative(data, v);
    t_gamma_in_chamber(data, gamma, v, &w)
}

/// `T_gamma(v)` computed in the chamber `w C`, which must contain `v`.
pub fn t_gamma_in_chamber(
    data: &RootSystemData,
    gamma: &WeightVector,
    v: &WeightVector,
    w: &WeylElement,
) -> Result<WeightVector> {
    check_dim(data, gamma)?;
    check_dim(data, v)?;
    if !data.is_dominant(gamma) {
        return Err(Error::NotDominant(gamma.clone()));
    }
    let vp = w.inverse().apply(v);
    if !data.is_dominant(&vp) {
        return Err(Error::InvalidInput(format!("{v} is not in the chamber of the given Weyl element")));
    }
    Ok(w.apply(&project(data, &(&vp - gamma))?))
}

/// True when `v` lies in the convex hull of the Weyl orbit of `gamma`: after
/// making both dominant, `gamma - v` must be a nonnegative combination of
/// positive roots (in particular the central parts agree).
pub fn in_hull_of_orbit(data: &RootSystemData, v: &WeightVector, gamma: &WeightVector) -> Result<bool> {
    check_dim(data, v)?;
    check_dim(data, gamma)?;
    let (vp, _) = dominant_representative(data, v);
    let (gp, _) = dominant_representative(data, gamma);
    Ok(data.in_positive_cone(&(&gp - &vp)))
}

/// True when `r = sum c_a a` over positive roots with every `|c_a| <= 1/2`.
pub fn rho_box_membership(data: &RootSystemData, r: &WeightVector) -> Result<bool> {
    check_dim(data, r)?;
    let m = data.positive().len();
    let lo = vec![ratio(-1, 2); m];
    let hi = vec![ratio(1, 2); m];
    Ok(lp_feasible(data.positive(), &lo, &hi, r)?.is_some())
}

/// Every Weyl element `w` with `w^-1 v` dominant.
pub fn chambers_containing(data: &RootSystemData, v: &WeightVector) -> Result<Vec<WeylElement>> {
    Ok(crate::rootsys::weyl_group(data)?
        .iter()
        .filter(|w| data.is_dominant(&w.inverse().apply(v)))
        .cloned()
        .collect())
}
