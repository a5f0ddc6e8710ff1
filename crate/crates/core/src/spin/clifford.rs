//! Explicit spin modules for the Clifford algebra of a Euclidean space of
//! dimension `m`, with entries in the Gaussian rationals.
//!
//! Dimension 1 sends the basis vector to `i`. Dimension 2 uses
//! `[[0,1],[-1,0]]` and `[[0,i],[i,0]]`. For `m > 2` the space splits as a
//! plane `W` plus its complement `U`: vectors of `W` act by `g_W(w) ⊗ 1` and
//! vectors of `U` by `(i g_W(e)) ⊗ g_U(u)`, where `e` is the product of the
//! two basis vectors of `W` and `i g_W(e) = diag(-1, 1)`.

use std::collections::BTreeMap;

use num::{Complex, One, Zero};

use crate::error::{Error, Result};
use crate::exact::{linalg, ratio, Rational, WeightVector};
use crate::spin::WeightMultiset;

pub type Gaussian = Complex<Rational>;
pub type CMatrix = Vec<Vec<Gaussian>>;

fn re(q: Rational) -> Gaussian {
    Complex::new(q, Rational::zero())
}

fn im(q: Rational) -> Gaussian {
    Complex::new(Rational::zero(), q)
}

fn c_identity(n: usize) -> CMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Gaussian::one() } else { Gaussian::zero() }).collect()).collect()
}

fn c_mul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.len();
    let p = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| {
                    let mut s = Gaussian::zero();
                    for (k, bk) in b.iter().enumerate() {
                        if !a[i][k].is_zero() && !bk[j].is_zero() {
                            s += &a[i][k] * &bk[j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

fn c_add(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

fn c_scale(a: &CMatrix, c: &Gaussian) -> CMatrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

fn c_adjoint(a: &CMatrix) -> CMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (n, m) = (a.len(), b.len());
    (0..n * m)
        .map(|i| (0..n * m).map(|j| &a[i / m][j / m] * &b[i % m][j % m]).collect())
        .collect()
}

fn is_diagonal(a: &CMatrix) -> bool {
    a.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

/// Generators `gamma(e_1), ..., gamma(e_m)` acting on a space of dimension `2^(m/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordModel {
    pub m: usize,
    pub gamma: Vec<CMatrix>,
}

impl CliffordModel {
    pub fn module_dim(&self) -> usize {
        self.gamma.first().map_or(1, Vec::len)
    }

    /// `gamma(e_1) gamma(e_2) ... gamma(e_m)`.
    pub fn volume_element(&self) -> CMatrix {
        self.gamma.iter().fold(c_identity(self.module_dim()), |acc, g| c_mul(&acc, g))
    }
}

pub const MAX_CLIFFORD_DIM: usize = 12;

pub fn clifford_model(m: usize) -> Result<CliffordModel> {
    if !(1..=MAX_CLIFFORD_DIM).contains(&m) {
        return Err(Error::InvalidInput(format!("Clifford dimension must be in 1..={MAX_CLIFFORD_DIM}, got {m}")));
    }
    let one = || Rational::one();
    let gamma = match m {
        1 => vec![vec![vec![im(one())]]],
        2 => vec![
            vec![vec![Gaussian::zero(), re(one())], vec![re(-one()), Gaussian::zero()]],
            vec![vec![Gaussian::zero(), im(one())], vec![im(one()), Gaussian::zero()]],
        ],
        _ => {
            let plane = clifford_model(2)?;
            let rest = clifford_model(m - 2)?;
            let id = c_identity(rest.module_dim());
            let twist = c_scale(&plane.volume_element(), &im(one()));
            let mut gamma: Vec<CMatrix> = plane.gamma.iter().map(|g| kron(g, &id)).collect();
            gamma.extend(rest.gamma.iter().map(|g| kron(&twist, g)));
            gamma
        }
    };
    Ok(CliffordModel { m, gamma })
}

/// Outcome of the structural checks on a [`CliffordModel`].
#[derive(Clone, Debug)]
pub struct CliffordReport {
    pub m: usize,
    pub module_dim: usize,
    /// `g_a g_b + g_b g_a = -2 delta_ab`.
    pub relations: bool,
    pub skew_adjoint: bool,
    pub dimension: bool,
    /// Even `m`: the volume element squares to `(-1)^(m/2)`, anticommutes with
    /// every generator and commutes with every product of two generators.
    pub volume: Option<bool>,
    /// Weights of the maximal torus of the spin group, in coordinates dual to
    /// the rotation planes `(e_1,e_2), (e_3,e_4), ...`.
    pub torus_weights: WeightMultiset,
    /// The torus weights are all `1/2 (±1, ..., ±1)`, each once.
    pub torus: bool,
    /// Dimension of the commutant of the even Clifford algebra (computed for `m <= 6`).
    pub commutant_dim: Option<usize>,
}

impl CliffordReport {
    pub fn passed(&self) -> bool {
        let commutant_ok = match self.commutant_dim {
            None => true,
            Some(d) => d == if self.m.is_multiple_of(2) { 2 } else { 1 },
        };
        self.relations && self.skew_adjoint && self.dimension && self.volume != Some(false) && self.torus && commutant_ok
    }
}

fn torus_weights(model: &CliffordModel) -> Option<WeightMultiset> {
    let r = model.m / 2;
    let n = model.module_dim();
    let planes: Vec<CMatrix> = (0..r).map(|i| c_mul(&model.gamma[2 * i], &model.gamma[2 * i + 1])).collect();
    if !planes.iter().all(is_diagonal) {
        return None;
    }
    let half = ratio(1, 2);
    let mut out = WeightMultiset::new(r);
    for k in 0..n {
        let mut coords = Vec::with_capacity(r);
        for p in &planes {
            // eigenvalue is +i or -i
            let e = &p[k][k];
            if !e.re.is_zero() || (e.im != Rational::one() && e.im != -Rational::one()) {
                return None;
            }
            coords.push(&e.im * &half);
        }
        out.insert(WeightVector::new(coords), 1);
    }
    Some(out)
}

fn expected_torus_weights(r: usize) -> WeightMultiset {
    let half = ratio(1, 2);
    let weights = (0..1u32 << r).map(|s| {
        WeightVector::new((0..r).map(|i| if s >> i & 1 == 1 { -half.clone() } else { half.clone() }).collect())
    });
    WeightMultiset::from_weights(r, weights)
}

/// Complex dimension of `{X : X g = g X}` for the given matrices.
fn commutant_dim(gens: &[CMatrix], n: usize) -> usize {
    // unknowns: real and imaginary parts of the n^2 entries of X
    let cols = 2 * n * n;
    let mut rows: BTreeMap<(usize, usize, usize, bool), Vec<Rational>> = BTreeMap::new();
    for c in 0..cols {
        let (idx, imag) = (c / 2, c % 2 == 1);
        let mut x = vec![vec![Gaussian::zero(); n]; n];
        x[idx / n][idx % n] = if imag { im(Rational::one()) } else { re(Rational::one()) };
        for (gi, g) in gens.iter().enumerate() {
            let d = c_add(&c_mul(&x, g), &c_scale(&c_mul(g, &x), &re(-Rational::one())));
            for i in 0..n {
                for j in 0..n {
                    for (part, val) in [(false, &d[i][j].re), (true, &d[i][j].im)] {
                        rows.entry((gi, i, j, part)).or_insert_with(|| vec![Rational::zero(); cols])[c] = val.clone();
                    }
                }
            }
        }
    }
    let m: linalg::Matrix = rows.into_values().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    (cols - linalg::rank(&m, cols)) / 2
}

pub fn clifford_structure_checks(model: &CliffordModel) -> CliffordReport {
    let m = model.m;
    let n = model.module_dim();
    let id = c_identity(n);
    let minus_two = c_scale(&id, &re(Rational::from_integer((-2).into())));
    let zero = c_scale(&id, &Gaussian::zero());
    let mut relations = model.gamma.len() == m && model.gamma.iter().all(|g| g.len() == n);
    let mut skew_adjoint = true;
    for a in 0..model.gamma.len() {
        let ga = &model.gamma[a];
        skew_adjoint &= c_adjoint(ga) == c_scale(ga, &re(-Rational::one()));
        for b in a..model.gamma.len() {
            let gb = &model.gamma[b];
            let ac = c_add(&c_mul(ga, gb), &c_mul(gb, ga));
            relations &= ac == if a == b { minus_two.clone() } else { zero.clone() };
        }
    }
    let dimension = n == 1 << (m / 2);

    let pairs: Vec<CMatrix> = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .map(|(a, b)| c_mul(&model.gamma[a], &model.gamma[b]))
        .collect();
    let volume = m.is_multiple_of(2).then(|| {
        let v = model.volume_element();
        let sign = if (m / 2).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        let squares = c_mul(&v, &v) == c_scale(&id, &re(sign));
        let anti = model.gamma.iter().all(|g| c_add(&c_mul(&v, g), &c_mul(g, &v)) == zero);
        let even = pairs.iter().all(|p| c_mul(&v, p) == c_mul(p, &v));
        squares && anti && even
    });
    let weights = torus_weights(model);
    let torus = weights.as_ref() == Some(&expected_torus_weights(m / 2));
    let commutant_dim = (m <= 6).then(|| commutant_dim(&pairs, n));
    CliffordReport {
        m,
        module_dim: n,
        relations,
        skew_adjoint,
        dimension,
        volume,
        torus_weights: weights.unwrap_or_else(|| WeightMultiset::new(m / 2)),
        torus,
        commutant_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_two_matrices() {
        let c = clifford_model(2).unwrap();
        let j = vec![vec![Gaussian::zero(), re(Rational::one())], vec![re(-Rational::one()), Gaussian::zero()]];
        let k = vec![vec![Gaussian::zero(), im(Rational::one())], vec![im(Rational::one()), Gaussian::zero()]];
        assert_eq!(c.gamma, vec![j, k]);
        let r = clifford_structure_checks(&c);
        assert!(r.passed(), "{r:?}");
        let half = ratio(1, 2);
        assert_eq!(
            r.torus_weights,
            WeightMultiset::from_weights(1, [WeightVector::new(vec![half.clone()]), WeightVector::new(vec![-half])])
        );
        assert_eq!(r.commutant_dim, Some(2));
    }

    #[test]
    fn dimension_one_and_three() {
        let c = clifford_model(1).unwrap();
        assert_eq!(c.gamma, vec![vec![vec![im(Rational::one())]]]);
        let r = clifford_structure_checks(&c);
        assert!(r.passed());
        assert_eq!(r.volume, None);
        let r = clifford_structure_checks(&clifford_model(3).unwrap());
        assert!(r.passed());
        assert_eq!((r.module_dim, r.commutant_dim), (2, Some(1)));
    }

    #[test]
    fn up_to_eight() {
        for m in 1..=8 {
            let r = clifford_structure_checks(&clifford_model(m).unwrap());
            assert!(r.passed(), "m = {m}: {r:?}");
            assert_eq!(r.module_dim, 1 << (m / 2));
        }
    }

    #[test]
    fn range_is_enforced() {
        assert!(clifford_model(0).is_err());
        assert!(clifford_model(13).is_err());
        assert_eq!(clifford_model(12).unwrap().module_dim(), 64);
    }

    #[test]
    fn a_broken_model_is_reported() {
        let mut c = clifford_model(4).unwrap();
        c.gamma[3] = c.gamma[2].clone();
        let r = clifford_structure_checks(&c);
        assert!(!r.relations);
        assert!(!r.passed());
    }
}
