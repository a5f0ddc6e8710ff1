//! Exact rational vectors, the invariant form, and the feasibility
//! primitives everything else is built on.
//!
//! Nothing in this crate touches floating point. All weights are
//! [`WeightVector`]s of arbitrary-precision rationals and every comparison is
//! exact.

pub mod linalg;
pub mod lp;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use lp::lp_feasible;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-1/2"` or `"4/6"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Renders a rational as `n` or `n/d`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Smallest integer `k >= 0` with `k^2 >= q`. Used for safe enumeration radii.
pub fn ceil_sqrt(q: &Rational) -> BigInt {
    if !q.is_positive() {
        return BigInt::zero();
    }
    let ceil = q.ceil().to_integer();
    let mut k = ceil.sqrt();
    while Rational::from_integer(&k * &k) < *q {
        k += 1;
    }
    while k.is_positive() {
        let j = &k - 1;
        if Rational::from_integer(&j * &j) >= *q {
            k = j;
        } else {
            break;
        }
    }
    k
}

/// A weight: an exact coordinate vector in the ambient weight space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        WeightVector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        WeightVector(vec![Rational::zero(); dim])
    }

    /// Standard basis vector `e_i` of the given dimension.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    /// Parses comma separated rationals, e.g. `"5,-1"`, `"(1/2, 0)"` or `"[3]"`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t);
        let t = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t);
        let coords = t
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse(format!("empty weight: {s:?}")));
        }
        Ok(WeightVector(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        WeightVector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        WeightVector(self.0.iter().zip(&other.0).map(|(x, y)| x + c * y).collect())
    }

    /// Sum of a collection of vectors; `dim` is used when the collection is empty.
    pub fn sum<'a>(dim: usize, vs: impl IntoIterator<Item = &'a WeightVector>) -> Self {
        vs.into_iter().fold(Self::zero(dim), |acc, v| &acc + v)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", format_rational(&self.0[0]));
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.0.iter().map(format_rational).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        strs.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(WeightVector)
            .map_err(serde::de::Error::custom)
    }
}

/// Symmetric positive definite rational form on the weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramForm {
    matrix: Vec<Vec<Rational>>,
}

impl GramForm {
    /// Validates symmetry and positive definiteness (leading principal minors).
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGramForm("matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::InvalidGramForm(format!("not symmetric at ({i},{j})")));
                }
            }
        }
        for k in 1..=n {
            let minor: Vec<Vec<Rational>> =
                matrix[..k].iter().map(|r| r[..k].to_vec()).collect();
            if !linalg::determinant(&minor).is_positive() {
                return Err(Error::InvalidGramForm(format!(
                    "leading principal minor of order {k} is not positive"
                )));
            }
        }
        Ok(GramForm { matrix })
    }

    pub fn identity(n: usize) -> Self {
        GramForm { matrix: linalg::identity(n) }
    }

    /// Block-diagonal sum of forms.
    pub fn direct_sum(blocks: &[GramForm]) -> Self {
        let n: usize = blocks.iter().map(GramForm::dim).sum();
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.dim() {
                for j in 0..b.dim() {
                    matrix[off + i][off + j] = b.matrix[i][j].clone();
                }
            }
            off += b.dim();
        }
        GramForm { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    /// `v^T G w`, exactly.
    pub fn inner(&self, v: &WeightVector, w: &WeightVector) -> Result<Rational> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.dim() });
        }
        v.check_dim(w)?;
        Ok(self.pair(v, w))
    }

    /// Unchecked variant of [`GramForm::inner`] for internal use once dimensions are known.
    pub(crate) fn pair(&self, v: &WeightVector, w: &WeightVector) -> Rational {
        let mut acc = Rational::zero();
        for (i, vi) in v.0.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let row = &self.matrix[i];
            let mut s = Rational::zero();
            for (g, wj) in row.iter().zip(&w.0) {
                if !g.is_zero() && !wj.is_zero() {
                    s += g * wj;
                }
            }
            acc += vi * s;
        }
        acc
    }

    pub(crate) fn norm2(&self, v: &WeightVector) -> Rational {
        self.pair(v, v)
    }
}

/// `<v, w>` under `form`.
pub fn inner(form: &GramForm, v: &WeightVector, w: &WeightVector) -> Result<Rational> {
    form.inner(v, w)
}

/// Outcome of [`solve_in_span`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanSolution {
    /// `sum c_i v_i = target`.
    Coefficients(Vec<Rational>),
    /// A coordinate functional `y` with `y . v_i = 0` for all `i` and `y . target != 0`.
    OutsideSpan { separator: WeightVector },
}

impl SpanSolution {
    pub fn coefficients(&self) -> Option<&[Rational]> {
        match self {
            SpanSolution::Coefficients(c) => Some(c),
            SpanSolution::OutsideSpan { .. } => None,
        }
    }
}

/// Expresses `target` as a rational combination of `vectors`, or certifies that
/// it lies outside their span.
pub fn solve_in_span(vectors: &[WeightVector], target: &WeightVector) -> Result<SpanSolution> {
    let n = target.dim();
    for v in vectors {
        target.check_dim(v)?;
    }
    // columns = vectors
    let a: Vec<Vec<Rational>> = (0..n)
        .map(|i| vectors.iter().map(|v| v.0[i].clone()).collect())
        .collect();
    match linalg::solve(&a, target.coords(), vectors.len()) {
        Some(c) => Ok(SpanSolution::Coefficients(c)),
        None => {
            // A left null vector of `a` that does not kill the target.
            let at = linalg::transpose(&a, n, vectors.len());
            let null = linalg::nullspace(&at, n);
            let sep = null
                .into_iter()
                .map(WeightVector)
                .find(|y| {
                    y.0.iter().zip(&target.0).fold(Rational::zero(), |s, (a, b)| s + a * b) != Rational::zero()
                })
                .ok_or_else(|| Error::Internal("inconsistent system without separator".into()))?;
            Ok(SpanSolution::OutsideSpan { separator: sep })
        }
    }
}
