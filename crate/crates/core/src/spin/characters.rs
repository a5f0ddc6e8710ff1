use std::collections::{BTreeMap, BTreeSet};

use num::{Signed, ToPrimitive, Zero};

use super::{spin_weights, WeightMultiset};
use crate::chamber::in_hull_of_orbit;
use crate::error::{Error, Result};
use crate::exact::{lp_feasible, ratio, Rational, WeightVector};
use crate::kstruct::{central_part, RealFormData};
use crate::rootsys::RootSystemData;

fn check_dominant_integral(k: &RootSystemData, mu: &WeightVector) -> Result<()> {
    if mu.dim() != k.rank() {
        return Err(Error::DimensionMismatch { expected: k.rank(), found: mu.dim() });
    }
    for a in k.simple() {
        let c = k.coroot_pairing(mu, a);
        if !c.is_integer() || c.is_negative() {
            return Err(Error::InvalidInput(format!("{mu} is not dominant integral (simple root {a})")));
        }
    }
    Ok(())
}

/// Weyl dimension formula: product over positive roots of `<mu+rho, a>/<rho, a>`.
pub fn weyl_dimension(k: &RootSystemData, mu: &WeightVector) -> Rational {
    let shifted = mu + k.rho();
    k.positive()
        .iter()
        .fold(Rational::from_integer(1.into()), |acc, a| acc * k.inner(&shifted, a) / k.inner(k.rho(), a))
}

/// Full weight multiset of the irreducible representation of highest weight `mu`.
///
/// Weights are found by subtracting simple roots from `mu` while staying in the
/// hull of its orbit; multiplicities follow Freudenthal's recursion, processed
/// in order of depth below `mu`.
pub fn freudenthal_weights(k: &RootSystemData, mu: &WeightVector) -> Result<WeightMultiset> {
    check_dominant_integral(k, mu)?;
    let mut depth: BTreeMap<WeightVector, usize> = BTreeMap::new();
    let mut layers: Vec<Vec<WeightVector>> = vec![vec![mu.clone()]];
    depth.insert(mu.clone(), 0);
    while let Some(last) = layers.last() {
        let d = layers.len();
        let mut next = Vec::new();
        for lam in last {
            for a in k.simple() {
                let x = lam - a;
                if !depth.contains_key(&x) && in_hull_of_orbit(k, &x, mu)? {
                    depth.insert(x.clone(), d);
                    next.push(x);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }

    let shifted = mu + k.rho();
    let top = k.norm2(&shifted);
    let two = Rational::from_integer(2.into());
    let mut mult: BTreeMap<WeightVector, Rational> = BTreeMap::new();
    for (d, layer) in layers.iter().enumerate() {
        for lam in layer {
            if d == 0 {
                mult.insert(lam.clone(), Rational::from_integer(1.into()));
                continue;
            }
            let mut s = Rational::zero();
            for a in k.positive() {
                let mut x = lam + a;
                while let Some(m) = mult.get(&x) {
                    s += m * k.inner(&x, a);
                    x = &x + a;
                }
            }
            let denom = &top - k.norm2(&(lam + k.rho()));
            let m = &two * s / denom;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::Internal(format!("non-integral multiplicity {m} at {lam}")));
            }
            if !m.is_zero() {
                mult.insert(lam.clone(), m);
            }
        }
    }
    let mut out = WeightMultiset::new(k.rank());
    for (w, m) in mult {
        out.insert(w, m.to_integer().to_u64().expect("multiplicity fits in u64"));
    }
    Ok(out)
}

/// Splits a character into irreducibles, returned as `(highest weight, multiplicity)`
/// sorted by highest weight.
///
/// Repeatedly removes the irreducible whose highest weight is the dominant
/// weight present with the largest `|w + rho|^2` (ties to the lexicographically
/// largest); such a weight is always a highest weight of the remainder.
pub fn decompose_character(k: &RootSystemData, chi: &WeightMultiset) -> Result<Vec<(WeightVector, u64)>> {
    let mut rest = chi.clone();
    let mut out: BTreeMap<WeightVector, u64> = BTreeMap::new();
    while !rest.is_empty() {
        let top = rest
            .iter()
            .filter(|(w, _)| k.is_dominant(w))
            .map(|(w, c)| (k.norm2(&(w + k.rho())), w.clone(), c))
            .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let Some((_, hw, c)) = top else {
            return Err(Error::InvalidCharacter("remaining weights have no dominant member".into()));
        };
        let irr = freudenthal_weights(k, &hw).map_err(|e| match e {
            Error::InvalidInput(m) => Error::InvalidCharacter(m),
            other => other,
        })?;
        rest.subtract(&irr, c)?;
        *out.entry(hw).or_insert(0) += c;
    }
    Ok(out.into_iter().collect())
}

/// `{rho'_n}` over the positive systems containing the compact positive roots, sorted.
pub fn spin_highest_weights(rf: &RealFormData) -> Result<Vec<WeightVector>> {
    let half = ratio(1, 2);
    let set: BTreeSet<WeightVector> = rf.k_chambers()?.iter().map(|c| c.two_rho_n.scale(&half)).collect();
    Ok(set.into_iter().collect())
}

/// The spin weights decompose under `k` into one copy of each weight from
/// [`spin_highest_weights`].
pub fn check_spin_highest_weights(rf: &RealFormData) -> Result<bool> {
    let parts = decompose_character(rf.k(), &spin_weights(rf)?)?;
    let from_chambers = spin_highest_weights(rf)?;
    Ok(parts.iter().all(|(_, c)| *c == 1) && parts.into_iter().map(|(w, _)| w).collect::<Vec<_>>() == from_chambers)
}

/// Some constituent of `delta(mu) ⊗ spin` has highest weight (less its
/// central part) in `{sum c_b b : |c_b| <= 1/2}` over positive noncompact `b`.
pub fn spin_tensor_test(rf: &RealFormData, mu: &WeightVector) -> Result<bool> {
    rf.check_k_type(mu)?;
    let k = rf.k();
    let chi = freudenthal_weights(k, mu)?.tensor(&spin_weights(rf)?);
    let gens = rf.positive_noncompact();
    let lo = vec![ratio(-1, 2); gens.len()];
    let hi = vec![ratio(1, 2); gens.len()];
    let mu_z = central_part(rf, mu);
    for (hw, _) in decompose_character(k, &chi)? {
        if lp_feasible(&gens, &lo, &hi, &(&hw - &mu_z))?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}
