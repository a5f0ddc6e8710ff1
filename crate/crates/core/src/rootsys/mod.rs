//! Root data: roots, a positive system, simple roots, fundamental weights,
//! `rho`, the central subspace, and the Weyl group.

mod cartan;
mod lattice;
mod weyl;

use std::collections::HashSet;
use std::sync::OnceLock;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{linalg, solve_in_span, GramForm, Rational, SpanSolution, WeightVector};

pub use cartan::build_from_cartan_label;
pub use lattice::{check_dominant_integral_for_k, is_dominant_integral_for_k, Lattice};
pub use weyl::{
    dominant_representative, positive_systems_containing, weyl_group, weyl_group_capped,
    PositiveSystem, WeylElement, DEFAULT_WEYL_CAP,
};

/// A reduced crystallographic root system inside a weight space that may be
/// larger than the span of the roots, with a chosen positive system.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    form: GramForm,
    roots: Vec<WeightVector>,
    root_set: HashSet<WeightVector>,
    positive: Vec<WeightVector>,
    simple: Vec<WeightVector>,
    fundamental: Vec<WeightVector>,
    rho: WeightVector,
    central_basis: Vec<WeightVector>,
    weyl: OnceLock<Option<Vec<WeylElement>>>,
}

/// Builds root data from an explicit root set and positive choice.
///
/// Validates reflection closure, integrality of Cartan numbers, reducedness,
/// and that `positive` is a genuine positive system (one of each `±a`, every
/// positive root a nonnegative integer combination of the simple ones).
pub fn build_from_roots(
    roots: &[WeightVector],
    form: &GramForm,
    positive_choice: &[WeightVector],
) -> Result<RootSystemData> {
    RootSystemData::new(roots.to_vec(), form.clone(), positive_choice.to_vec())
}

impl RootSystemData {
    pub fn new(
        roots: Vec<WeightVector>,
        form: GramForm,
        positive: Vec<WeightVector>,
    ) -> Result<Self> {
        let n = form.dim();
        let mut root_set = HashSet::new();
        let mut ordered = Vec::new();
        for r in roots {
            if r.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.dim() });
            }
            if r.is_zero() {
                return Err(Error::NotARootSystem("zero vector in root set".into()));
            }
            if root_set.insert(r.clone()) {
                ordered.push(r);
            }
        }
        for a in &ordered {
            let a2 = form.norm2(a);
            if root_set.contains(&a.scale(&Rational::from_integer(2.into()))) {
                return Err(Error::NotARootSystem(format!(
                    "nonreduced root system (2*{a} is a root)"
                )));
            }
            for b in &ordered {
                let c = Rational::from_integer(2.into()) * form.pair(a, b) / &a2;
                if !c.is_integer() {
                    return Err(Error::NotARootSystem(format!(
                        "Cartan number of {b} along {a} is not an integer"
                    )));
                }
                let refl = b.add_scaled(&-c, a);
                if !root_set.contains(&refl) {
                    return Err(Error::NotARootSystem(format!(
                        "reflection of {b} in {a} is {refl}, not a root"
                    )));
                }
            }
        }

        let mut pos_set = HashSet::new();
        let mut pos = Vec::new();
        for p in positive {
            if !root_set.contains(&p) {
                return Err(Error::InconsistentPositiveSystem(format!("{p} is not a root")));
            }
            if pos_set.insert(p.clone()) {
                pos.push(p);
            }
        }
        for a in &ordered {
            let has = pos_set.contains(a);
            let has_neg = pos_set.contains(&-a);
            if has == has_neg {
                return Err(Error::InconsistentPositiveSystem(format!(
                    "need exactly one of ±{a} in the positive system"
                )));
            }
        }

        let simple: Vec<WeightVector> = pos
            .iter()
            .filter(|a| {
                !pos.iter().any(|b| {
                    let d = *a - b;
                    pos_set.contains(&d)
                })
            })
            .cloned()
            .collect();
        let span_rank = if ordered.is_empty() {
            0
        } else {
            let m: linalg::Matrix = ordered.iter().map(|r| r.coords().to_vec()).collect();
            linalg::rank(&m, n)
        };
        if simple.len() != span_rank {
            return Err(Error::InconsistentPositiveSystem(format!(
                "{} simple roots for a root span of rank {span_rank}",
                simple.len()
            )));
        }
        for p in &pos {
            let ok = match solve_in_span(&simple, p)? {
                SpanSolution::Coefficients(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
                SpanSolution::OutsideSpan { .. } => false,
            };
            if !ok {
                return Err(Error::InconsistentPositiveSystem(format!(
                    "{p} is not a nonnegative integer combination of simple roots"
                )));
            }
        }

        let l = simple.len();
        let cartan_gram: linalg::Matrix = simple
            .iter()
            .map(|a| simple.iter().map(|b| form.pair(a, b)).collect())
            .collect();
        let fundamental = if l == 0 {
            Vec::new()
        } else {
            let inv = linalg::inverse(&cartan_gram)
                .ok_or_else(|| Error::Internal("simple roots are dependent".into()))?;
            (0..l)
                .map(|i| {
                    simple
                        .iter()
                        .enumerate()
                        .fold(WeightVector::zero(n), |acc, (k, a)| acc.add_scaled(&inv[i][k], a))
                })
                .collect()
        };
        let half = Rational::new(1.into(), 2.into());
        let rho = WeightVector::sum(n, &pos).scale(&half);
        let rows: linalg::Matrix = simple
            .iter()
            .map(|a| {
                (0..n)
                    .map(|j| form.pair(a, &WeightVector::unit(n, j)))
                    .collect()
            })
            .collect();
        let central_basis = if l == 0 {
            (0..n).map(|j| WeightVector::unit(n, j)).collect()
        } else {
            linalg::nullspace(&rows, n).into_iter().map(WeightVector::new).collect()
        };

        Ok(RootSystemData {
            form,
            roots: ordered,
            root_set,
            positive: pos,
            simple,
            fundamental,
            rho,
            central_basis,
            weyl: OnceLock::new(),
        })
    }

    /// Same roots and form with a different positive system.
    pub fn with_positive(&self, positive: Vec<WeightVector>) -> Result<Self> {
        Self::new(self.roots.clone(), self.form.clone(), positive)
    }

    /// The positive system `w Δ+`, with simple roots, fundamental weights and
    /// `rho` transported by `w`.
    pub fn conjugate(&self, w: &WeylElement) -> Self {
        RootSystemData {
            form: self.form.clone(),
            roots: self.roots.clone(),
            root_set: self.root_set.clone(),
            positive: self.positive.iter().map(|a| w.apply(a)).collect(),
            simple: self.simple.iter().map(|a| w.apply(a)).collect(),
            fundamental: self.fundamental.iter().map(|a| w.apply(a)).collect(),
            rho: w.apply(&self.rho),
            central_basis: self.central_basis.clone(),
            weyl: self.weyl.clone(),
        }
    }

    /// Rank of the ambient weight space.
    pub fn rank(&self) -> usize {
        self.form.dim()
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn form(&self) -> &GramForm {
        &self.form
    }

    pub fn roots(&self) -> &[WeightVector] {
        &self.roots
    }

    pub fn positive(&self) -> &[WeightVector] {
        &self.positive
    }

    pub fn simple(&self) -> &[WeightVector] {
        &self.simple
    }

    pub fn fundamental(&self) -> &[WeightVector] {
        &self.fundamental
    }

    pub fn rho(&self) -> &WeightVector {
        &self.rho
    }

    pub fn two_rho(&self) -> WeightVector {
        self.rho.scale(&Rational::from_integer(2.into()))
    }

    pub fn central_basis(&self) -> &[WeightVector] {
        &self.central_basis
    }

    pub fn contains_root(&self, v: &WeightVector) -> bool {
        self.root_set.contains(v)
    }

    pub fn is_positive_root(&self, v: &WeightVector) -> bool {
        self.positive.contains(v)
    }

    pub fn inner(&self, v: &WeightVector, w: &WeightVector) -> Rational {
        self.form.pair(v, w)
    }

    pub fn norm2(&self, v: &WeightVector) -> Rational {
        self.form.norm2(v)
    }

    /// `2<v, a>/<a, a>`.
    pub fn coroot_pairing(&self, v: &WeightVector, a: &WeightVector) -> Rational {
        Rational::from_integer(2.into()) * self.form.pair(v, a) / self.form.norm2(a)
    }

    /// Reflection of `v` in the hyperplane orthogonal to `a`.
    pub fn reflect(&self, a: &WeightVector, v: &WeightVector) -> WeightVector {
        v.add_scaled(&-self.coroot_pairing(v, a), a)
    }

    /// Dominant for the positive system: `<v, a_i> >= 0` for every simple root.
    pub fn is_dominant(&self, v: &WeightVector) -> bool {
        self.simple.iter().all(|a| !self.form.pair(v, a).is_negative())
    }

    /// Coefficients of `v` over the simple roots, or `None` when `v` is not in
    /// the root span.
    pub fn simple_coefficients(&self, v: &WeightVector) -> Option<Vec<Rational>> {
        if self.simple.is_empty() {
            return v.is_zero().then(Vec::new);
        }
        match solve_in_span(&self.simple, v) {
            Ok(SpanSolution::Coefficients(c)) => Some(c),
            _ => None,
        }
    }

    /// True when `v` is a nonnegative rational combination of positive roots.
    pub fn in_positive_cone(&self, v: &WeightVector) -> bool {
        self.simple_coefficients(v)
            .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    }

    /// Orthogonal projection onto the central subspace (complement of the root span).
    pub fn central_projection(&self, v: &WeightVector) -> WeightVector {
        let n = self.rank();
        if self.central_basis.is_empty() {
            return WeightVector::zero(n);
        }
        let gram: linalg::Matrix = self
            .central_basis
            .iter()
            .map(|a| self.central_basis.iter().map(|b| self.form.pair(a, b)).collect())
            .collect();
        let rhs: Vec<Rational> = self.central_basis.iter().map(|z| self.form.pair(z, v)).collect();
        let c = linalg::solve(&gram, &rhs, self.central_basis.len())
            .expect("central basis Gram matrix is invertible");
        self.central_basis
            .iter()
            .zip(&c)
            .fold(WeightVector::zero(n), |acc, (z, ci)| acc.add_scaled(ci, z))
    }

    /// True when `v` lies in the central subspace, i.e. is orthogonal to every root.
    pub fn is_central(&self, v: &WeightVector) -> bool {
        self.simple.iter().all(|a| self.form.pair(v, a).is_zero())
    }

    /// Reflection matrix of a root, acting on coordinate vectors.
    pub(crate) fn reflection_matrix(&self, a: &WeightVector) -> linalg::Matrix {
        let n = self.rank();
        let a2 = self.form.norm2(a);
        let two = Rational::from_integer(2.into());
        let ga: Vec<Rational> = (0..n).map(|j| self.form.pair(a, &WeightVector::unit(n, j))).collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let d = if i == j { Rational::one() } else { Rational::zero() };
                        d - &two * &a.coords()[i] * &ga[j] / &a2
                    })
                    .collect()
            })
            .collect()
    }

    pub(crate) fn weyl_cache(&self) -> &OnceLock<Option<Vec<WeylElement>>> {
        &self.weyl
    }
}

/// Picks the positive system cut out by a regular coordinate functional
/// `(t^{n-1}, ..., t, 1)` for the smallest `t >= 2` that is regular.
pub fn default_positive(roots: &[WeightVector]) -> Vec<WeightVector> {
    let n = roots.first().map_or(0, WeightVector::dim);
    let mut t: i64 = 2;
    loop {
        let f: Vec<Rational> = (0..n)
            .map(|i| Rational::from_integer(num::BigInt::from(t).pow((n - 1 - i) as u32)))
            .collect();
        let val = |r: &WeightVector| {
            r.coords().iter().zip(&f).fold(Rational::zero(), |s, (a, b)| s + a * b)
        };
        if roots.iter().all(|r| !val(r).is_zero()) {
            return roots.iter().filter(|r| val(r).is_positive()).cloned().collect();
        }
        t += 1;
    }
}
