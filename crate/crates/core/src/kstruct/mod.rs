//! Real forms: a root datum graded into compact and noncompact roots, with a
//! fixed compact positive system and a character lattice. Hosts the
//! `lambda_a` / `lambda_u` maps and the unitarily-small conditions.

mod enumerate;
mod parabolic;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use num::Zero;

use crate::chamber::{in_hull_of_orbit, t_gamma};
use crate::error::{Error, Result};
use crate::exact::{lp_feasible, Rational, WeightVector};
use crate::rootsys::{
    check_dominant_integral_for_k, dominant_representative, positive_systems_containing, Lattice,
    RootSystemData,
};

pub use enumerate::{enumerate_b_lambda_u, enumerate_small, enumerate_unitarily_small};
pub use parabolic::{
    bottom_layer_weight_shift, check_bottom_layer_bijection, subgroup_real_form, theta_parabolic, BijectionReport,
    ThetaParabolic,
};

/// A positive system of `g` containing the compact positive roots, with the
/// data the unitarily-small conditions read off it.
#[derive(Clone, Debug)]
pub struct KChamber {
    pub positive: Vec<WeightVector>,
    pub fundamental: Vec<WeightVector>,
    pub two_rho_n: WeightVector,
}

#[derive(Clone, Debug)]
pub struct RealFormData {
    name: String,
    g: RootSystemData,
    k: RootSystemData,
    compact: Vec<WeightVector>,
    noncompact: Vec<WeightVector>,
    lattice: Lattice,
    two_rho_c: WeightVector,
    two_rho_n: WeightVector,
    chambers: OnceLock<Vec<KChamber>>,
}

impl RealFormData {
    /// Validates the grading, the compact positive system, and lattice membership of roots.
    /// The positive system of `g` must contain `k_positive`.
    pub fn new(
        name: impl Into<String>,
        g: RootSystemData,
        compact: Vec<WeightVector>,
        k_positive: Vec<WeightVector>,
        lattice: Lattice,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidRealForm(m));
        if lattice.dim() != g.rank() {
            return bad(format!("lattice has rank {}, weight space has rank {}", lattice.dim(), g.rank()));
        }
        let compact_set: HashSet<WeightVector> = compact.iter().cloned().collect();
        for c in &compact_set {
            if !g.contains_root(c) {
                return bad(format!("compact root {c} is not a root"));
            }
            if !compact_set.contains(&-c) {
                return bad(format!("compact roots must be closed under negation ({c})"));
            }
        }
        for kp in &k_positive {
            if !compact_set.contains(kp) {
                return bad(format!("{kp} in the compact positive system is not a compact root"));
            }
            if !g.is_positive_root(kp) {
                return bad(format!("compact positive root {kp} is not positive for g"));
            }
        }
        for a in g.roots() {
            if !lattice.contains(a) {
                return bad(format!("root {a} is not in the character lattice"));
            }
            for b in g.roots() {
                let s = a + b;
                if g.contains_root(&s) {
                    let same = compact_set.contains(a) == compact_set.contains(b);
                    if compact_set.contains(&s) != same {
                        return bad(format!("grading fails for {a} + {b} = {s}"));
                    }
                }
            }
        }
        let compact: Vec<WeightVector> = g.roots().iter().filter(|a| compact_set.contains(*a)).cloned().collect();
        let noncompact: Vec<WeightVector> =
            g.roots().iter().filter(|a| !compact_set.contains(*a)).cloned().collect();
        let k = RootSystemData::new(compact.clone(), g.form().clone(), k_positive)
            .map_err(|e| Error::InvalidRealForm(format!("compact roots: {e}")))?;
        let n = g.rank();
        let two_rho_c = k.two_rho();
        let two_rho_n = WeightVector::sum(n, g.positive().iter().filter(|a| !compact_set.contains(*a)));
        Ok(RealFormData {
            name: name.into(),
            g,
            k,
            compact,
            noncompact,
            lattice,
            two_rho_c,
            two_rho_n,
            chambers: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Root datum of `g` with its reference positive system.
    pub fn g(&self) -> &RootSystemData {
        &self.g
    }

    /// Root datum of `k` (compact roots, compact positive system).
    pub fn k(&self) -> &RootSystemData {
        &self.k
    }

    pub fn rank(&self) -> usize {
        self.g.rank()
    }

    pub fn compact(&self) -> &[WeightVector] {
        &self.compact
    }

    pub fn noncompact(&self) -> &[WeightVector] {
        &self.noncompact
    }

    pub fn k_positive(&self) -> &[WeightVector] {
        self.k.positive()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn is_compact_root(&self, a: &WeightVector) -> bool {
        self.k.contains_root(a)
    }

    pub fn two_rho_c(&self) -> &WeightVector {
        &self.two_rho_c
    }

    pub fn rho_c(&self) -> &WeightVector {
        self.k.rho()
    }

    /// Sum of the noncompact roots in the reference positive system.
    pub fn two_rho_n(&self) -> &WeightVector {
        &self.two_rho_n
    }

    pub fn rho_n(&self) -> WeightVector {
        self.two_rho_n.scale(&Rational::new(1.into(), 2.into()))
    }

    /// Noncompact roots of the reference positive system.
    pub fn positive_noncompact(&self) -> Vec<WeightVector> {
        self.g.positive().iter().filter(|a| !self.is_compact_root(a)).cloned().collect()
    }

    /// All positive systems of `g` containing the compact positive roots.
    pub fn k_chambers(&self) -> Result<&[KChamber]> {
        if let Some(c) = self.chambers.get() {
            return Ok(c);
        }
        let systems = positive_systems_containing(&self.g, self.k_positive())?;
        let n = self.rank();
        let chambers = systems
            .iter()
            .map(|ps| {
                let conj = self.g.conjugate(&ps.weyl);
                KChamber {
                    positive: ps.roots.clone(),
                    fundamental: conj.fundamental().to_vec(),
                    two_rho_n: WeightVector::sum(n, ps.roots.iter().filter(|a| !self.is_compact_root(a))),
                }
            })
            .collect();
        Ok(self.chambers.get_or_init(|| chambers))
    }

    pub fn check_k_type(&self, mu: &WeightVector) -> Result<()> {
        check_dominant_integral_for_k(self.g.form(), self.k_positive(), &self.lattice, mu)
    }

    pub fn is_dominant_integral_for_k(&self, mu: &WeightVector) -> bool {
        self.check_k_type(mu).is_ok()
    }
}

/// A K-type, identified with its highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KType {
    mu: WeightVector,
}

impl KType {
    pub fn new(rf: &RealFormData, mu: WeightVector) -> Result<Self> {
        rf.check_k_type(&mu)?;
        Ok(KType { mu })
    }

    pub fn mu(&self) -> &WeightVector {
        &self.mu
    }

    pub fn into_inner(self) -> WeightVector {
        self.mu
    }
}

impl fmt::Display for KType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.mu.fmt(f)
    }
}

/// Projection of `mu` onto the center (orthogonal complement of the roots).
pub fn central_part(rf: &RealFormData, mu: &WeightVector) -> WeightVector {
    rf.g.central_projection(mu)
}

/// `T_rho(mu + 2 rho_c)`.
pub fn lambda_a(rf: &RealFormData, mu: &WeightVector) -> Result<WeightVector> {
    rf.check_k_type(mu)?;
    lambda_a_raw(rf, mu)
}

/// `T_{2 rho}(mu + 2 rho_c)`.
pub fn lambda_u(rf: &RealFormData, mu: &WeightVector) -> Result<WeightVector> {
    rf.check_k_type(mu)?;
    lambda_u_raw(rf, mu)
}

/// [`lambda_a`] without the K-type check, for arbitrary weights.
pub fn lambda_a_raw(rf: &RealFormData, mu: &WeightVector) -> Result<WeightVector> {
    t_gamma(&rf.g, rf.g.rho(), &(mu + &rf.two_rho_c))
}

/// [`lambda_u`] without the K-type check, for arbitrary weights.
pub fn lambda_u_raw(rf: &RealFormData, mu: &WeightVector) -> Result<WeightVector> {
    t_gamma(&rf.g, &rf.g.two_rho(), &(mu + &rf.two_rho_c))
}

/// `<lambda, a> > 0` implies `<lambda_a, a> > 0` for every root `a`.
pub fn is_singularization(rf: &RealFormData, lambda: &WeightVector, lambda_a: &WeightVector) -> bool {
    rf.g.roots().iter().all(|a| {
        use num::Signed;
        !rf.g.inner(lambda, a).is_positive() || rf.g.inner(lambda_a, a).is_positive()
    })
}

/// The equivalent characterizations of a unitarily small K-type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UsCondition {
    /// `lambda_u(mu)` is central.
    B,
    /// `lambda_a(mu) - mu_z` lies in the hull of the orbit of `rho`.
    C,
    /// Fundamental-weight inequalities in a chamber containing `mu + 2 rho_c`.
    D,
    /// The same inequalities in every chamber containing the compact positive roots.
    E,
    /// `mu - mu_z` is a `[0,1]` combination of the noncompact roots of some such chamber.
    F,
    /// `mu - mu_z` is a `[0,1]` combination of all noncompact roots.
    G,
}

impl UsCondition {
    pub const ALL: [UsCondition; 6] =
        [UsCondition::B, UsCondition::C, UsCondition::D, UsCondition::E, UsCondition::F, UsCondition::G];

    pub fn letter(self) -> char {
        match self {
            UsCondition::B => 'b',
            UsCondition::C => 'c',
            UsCondition::D => 'd',
            UsCondition::E => 'e',
            UsCondition::F => 'f',
            UsCondition::G => 'g',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|x| x.letter() == c.to_ascii_lowercase())
    }
}

fn fundamental_inequalities(
    rf: &RealFormData,
    mu: &WeightVector,
    fundamental: &[WeightVector],
    two_rho_n: &WeightVector,
) -> bool {
    fundamental.iter().all(|xi| rf.g.inner(xi, mu) <= rf.g.inner(xi, two_rho_n))
}

fn unit_box_feasible(generators: &[WeightVector], target: &WeightVector) -> Result<bool> {
    let m = generators.len();
    let lo = vec![Rational::zero(); m];
    let hi = vec![Rational::from_integer(1.into()); m];
    Ok(lp_feasible(generators, &lo, &hi, target)?.is_some())
}

/// Evaluates one condition literally.
pub fn us_condition(rf: &RealFormData, mu: &WeightVector, which: UsCondition) -> Result<bool> {
    rf.check_k_type(mu)?;
    let mu_z = central_part(rf, mu);
    Ok(match which {
        UsCondition::B => lambda_u_raw(rf, mu)? == mu_z,
        UsCondition::C => in_hull_of_orbit(&rf.g, &(&lambda_a_raw(rf, mu)? - &mu_z), rf.g.rho())?,
        UsCondition::D => {
            let (_, w) = dominant_representative(&rf.g, &(mu + &rf.two_rho_c));
            let conj = rf.g.conjugate(&w);
            let two_rho_n = WeightVector::sum(rf.rank(), conj.positive().iter().filter(|a| !rf.is_compact_root(a)));
            fundamental_inequalities(rf, mu, conj.fundamental(), &two_rho_n)
        }
        UsCondition::E => rf
            .k_chambers()?
            .iter()
            .all(|c| fundamental_inequalities(rf, mu, &c.fundamental, &c.two_rho_n)),
        UsCondition::F => {
            let target = mu - &mu_z;
            let mut found = false;
            for c in rf.k_chambers()? {
                let gens: Vec<WeightVector> =
                    c.positive.iter().filter(|a| !rf.is_compact_root(a)).cloned().collect();
                if unit_box_feasible(&gens, &target)? {
                    found = true;
                    break;
                }
            }
            found
        }
        UsCondition::G => unit_box_feasible(&rf.noncompact, &(mu - &mu_z))?,
    })
}

/// `lambda_u(mu)` is central.
///
/// With the `self-check` feature, also evaluates conditions c, d, e and g and
/// panics if any disagrees.
pub fn is_unitarily_small(rf: &RealFormData, mu: &WeightVector) -> Result<bool> {
    let b = us_condition(rf, mu, UsCondition::B)?;
    #[cfg(feature = "self-check")]
    for which in [UsCondition::C, UsCondition::D, UsCondition::E, UsCondition::G] {
        let other = us_condition(rf, mu, which)?;
        assert_eq!(b, other, "condition {} disagrees with b at {mu} on {}", which.letter(), rf.name);
    }
    Ok(b)
}

/// `lambda_a(mu)` is central.
pub fn is_small(rf: &RealFormData, mu: &WeightVector) -> Result<bool> {
    Ok(rf.g.is_central(&lambda_a(rf, mu)?))
}

/// True when `re_phi - lambda_u` lies in the hull of the Weyl orbit of `rho`.
pub fn conj_region_test(rf: &RealFormData, lambda_u: &WeightVector, re_phi: &WeightVector) -> Result<bool> {
    in_hull_of_orbit(&rf.g, &(re_phi - lambda_u), rf.g.rho())
}

/// `T_rho(re_phi)` for dominant `re_phi`.
pub fn lambda_of_infinitesimal_character(rf: &RealFormData, re_phi: &WeightVector) -> Result<WeightVector> {
    if re_phi.dim() != rf.rank() {
        return Err(Error::DimensionMismatch { expected: rf.rank(), found: re_phi.dim() });
    }
    if !rf.g.is_dominant(re_phi) {
        return Err(Error::NotDominant(re_phi.clone()));
    }
    t_gamma(&rf.g, rf.g.rho(), re_phi)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::exact::{GramForm, WeightVector};
    use crate::rootsys::build_from_roots;

    pub fn w(c: &[i64]) -> WeightVector {
        WeightVector::from_ints(c)
    }

    pub fn sl2() -> RealFormData {
        let g = build_from_roots(&[w(&[2]), w(&[-2])], &GramForm::identity(1), &[w(&[2])]).unwrap();
        RealFormData::new("sl2", g, vec![], vec![], Lattice::standard(1)).unwrap()
    }

    pub fn sp4() -> RealFormData {
        let roots: Vec<_> = [[2, 0], [-2, 0], [0, 2], [0, -2], [1, 1], [-1, -1], [1, -1], [-1, 1]]
            .iter()
            .map(|c| w(c))
            .collect();
        let pos = [w(&[2, 0]), w(&[0, -2]), w(&[1, 1]), w(&[1, -1])];
        let g = build_from_roots(&roots, &GramForm::identity(2), &pos).unwrap();
        RealFormData::new("sp4", g, vec![w(&[1, -1]), w(&[-1, 1])], vec![w(&[1, -1])], Lattice::standard(2))
            .unwrap()
    }

    pub fn u11() -> RealFormData {
        let g = build_from_roots(&[w(&[1, -1]), w(&[-1, 1])], &GramForm::identity(2), &[w(&[1, -1])]).unwrap();
        RealFormData::new("u11", g, vec![], vec![], Lattice::standard(2)).unwrap()
    }
}
