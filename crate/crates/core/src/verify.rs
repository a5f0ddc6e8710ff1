//! Property suites that exercise the library end to end and report counts.

use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::chamber::{
    chambers_containing, in_hull_of_orbit, project, project_onto_chamber, rho_box_membership, t_gamma,
    t_gamma_in_chamber,
};
use crate::error::{Error, Result};
use crate::exact::{ceil_sqrt, int, lp_feasible, ratio, Rational, WeightVector};
use crate::kstruct::{
    central_part, check_bottom_layer_bijection, enumerate_b_lambda_u, enumerate_unitarily_small, is_singularization,
    is_unitarily_small, lambda_a_raw, lambda_u_raw, theta_parabolic, us_condition, RealFormData, UsCondition,
};
use crate::rootsys::{dominant_representative, weyl_group, Lattice, RootSystemData};
use crate::spin::{
    check_wedge_is_spin_square, spin_tensor_test, check_spin_highest_weights, clifford_model, clifford_structure_checks,
    decompose_character, freudenthal_weights, spin_weights, wedge_p_weights, weyl_dimension,
};

/// Outcome of one property over many instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
}

impl PropertyCheck {
    fn new(name: &str) -> Self {
        PropertyCheck { name: name.to_string(), checked: 0, failed: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Projections,
    UnitarilySmall,
    BottomLayer,
    Spin,
    Clifford,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Projections, Suite::UnitarilySmall, Suite::BottomLayer, Suite::Spin, Suite::Clifford];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Projections => "projections",
            Suite::UnitarilySmall => "unitarily-small",
            Suite::BottomLayer => "bottom-layer",
            Suite::Spin => "spin",
            Suite::Clifford => "clifford",
        }
    }

    /// Accepts the suite names above, `all`, and the short aliases `thm6.7`
    /// and `prop3.1c` kept for scripts written against the original interface.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        match s {
            "all" => Ok(Self::ALL.to_vec()),
            "thm6.7" => Ok(vec![Suite::UnitarilySmall]),
            "prop3.1c" => Ok(vec![Suite::BottomLayer]),
            _ => Self::ALL
                .into_iter()
                .find(|x| x.name() == s)
                .map(|x| vec![x])
                .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}"))),
        }
    }
}

/// All properties of one suite on one target.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub target: String,
    pub properties: Vec<PropertyCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyCheck::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {}: {}", self.suite.name(), self.target, if self.passed() { "PASS" } else { "FAIL" })?;
        for p in &self.properties {
            write!(f, "  {:<4} {:<40} {:>7} checked", if p.passed() { "ok" } else { "FAIL" }, p.name, p.checked)?;
            if let Some(msg) = &p.first_failure {
                write!(f, ", {} failed; first: {msg}", p.failed)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `x <= a + b` for nonnegative `a, b` given by their squares.
fn le_sum_of_roots(x2: &Rational, a2: &Rational, b2: &Rational) -> bool {
    let d = x2 - a2 - b2;
    !d.is_positive() || &d * &d <= Rational::from_integer(4.into()) * a2 * b2
}

/// K-types `mu` whose semisimple and central parts both have norm at most
/// `|2 rho_n| + |2 rho_c|`, or at most `max_norm` when given. Sorted.
pub fn k_types_in_range(rf: &RealFormData, max_norm: Option<u64>) -> Vec<WeightVector> {
    let g = rf.g();
    let (a2, b2) = match max_norm {
        Some(n) => (Rational::from_integer(n.into()).pow(2), Rational::zero()),
        None => (g.norm2(rf.two_rho_n()), g.norm2(rf.two_rho_c())),
    };
    let bound = ceil_sqrt(&a2) + ceil_sqrt(&b2);
    let radius2 = Rational::from_integer(BigInt::from(2) * &bound * &bound);
    let zero = WeightVector::zero(rf.rank());
    rf.lattice()
        .points_in_ball(g.form(), &zero, &radius2)
        .into_iter()
        .filter(|mu| rf.is_dominant_integral_for_k(mu))
        .filter(|mu| {
            let z = central_part(rf, mu);
            le_sum_of_roots(&g.norm2(&(mu - &z)), &a2, &b2) && le_sum_of_roots(&g.norm2(&z), &a2, &b2)
        })
        .collect()
}

fn random_vector(rng: &mut StdRng, n: usize) -> WeightVector {
    WeightVector::new((0..n).map(|_| ratio(rng.gen_range(-20..=20), rng.gen_range(1..=5))).collect())
}

fn random_dominant(rng: &mut StdRng, data: &RootSystemData) -> WeightVector {
    dominant_representative(data, &random_vector(rng, data.rank())).0
}

/// Randomized exact checks of the projection engine with `samples` vectors.
pub fn projection_suite(target: &str, data: &RootSystemData, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = data.rank();
    let weyl = weyl_group(data)?;
    let mut cert = PropertyCheck::new("certificate validates");
    let mut idem = PropertyCheck::new("idempotent");
    let mut nonexp = PropertyCheck::new("nonexpansive");
    let mut walls = PropertyCheck::new("walls of v stay walls of P(v - gamma)");
    let mut compose = PropertyCheck::new("P(v-g-d) = P(P(v-g)-d)");
    let mut t_sum = PropertyCheck::new("T_(g+d) = T_g T_d");
    let mut chamber = PropertyCheck::new("T_g independent of chamber");
    let mut rho_box = PropertyCheck::new("rho box <=> hull of rho orbit");
    let mut prev = WeightVector::zero(n);
    for _ in 0..samples {
        let v = random_vector(&mut rng, n);
        let gamma = random_dominant(&mut rng, data);
        let delta = random_dominant(&mut rng, data);

        let c = project_onto_chamber(data, &v)?;
        cert.record(c.validate(data), || format!("v = {v}"));
        idem.record(project(data, &c.output)? == c.output, || format!("v = {v}"));
        let pp = project(data, &prev)?;
        nonexp.record(data.norm2(&(&c.output - &pp)) <= data.norm2(&(&v - &prev)), || format!("{v}, {prev}"));

        let pg = project(data, &(&v - &gamma))?;
        let ok = data.simple().iter().all(|a| data.inner(&v, a).is_positive() || data.inner(&pg, a).is_zero());
        walls.record(ok, || format!("v = {v}, gamma = {gamma}"));

        let lhs = project(data, &(&(&v - &gamma) - &delta))?;
        let rhs = project(data, &(&pg - &delta))?;
        compose.record(lhs == rhs, || format!("v = {v}, gamma = {gamma}, delta = {delta}"));

        let tl = t_gamma(data, &(&gamma + &delta), &v)?;
        let tr = t_gamma(data, &gamma, &t_gamma(data, &delta, &v)?)?;
        t_sum.record(tl == tr, || format!("v = {v}, gamma = {gamma}, delta = {delta}"));

        // projections land on walls, so their Weyl images lie in several chambers
        if !weyl.is_empty() {
            let x = weyl[rng.gen_range(0..weyl.len())].apply(&pg);
            let expect = t_gamma(data, data.rho(), &x)?;
            let mut ok = true;
            for w in chambers_containing(data, &x)? {
                ok &= t_gamma_in_chamber(data, data.rho(), &x, &w)? == expect;
            }
            chamber.record(ok, || format!("x = {x}"));
        }

        let r = v.scale(&ratio(1, 4));
        let r = &r - &data.central_projection(&r);
        rho_box.record(rho_box_membership(data, &r)? == in_hull_of_orbit(data, &r, data.rho())?, || format!("r = {r}"));
        prev = v;
    }
    Ok(SuiteReport {
        suite: Suite::Projections,
        target: target.to_string(),
        properties: vec![cert, idem, nonexp, walls, compose, t_sum, chamber, rho_box],
    })
}

/// Equivalent characterizations of unitarily small K-types and related
/// identities, over [`k_types_in_range`].
pub fn unitarily_small_suite(rf: &RealFormData, max_norm: Option<u64>) -> Result<SuiteReport> {
    let g = rf.g();
    let range = k_types_in_range(rf, max_norm);
    let mut agree = PropertyCheck::new("conditions b,c,d,e,f,g agree");
    let mut f_vs_g = PropertyCheck::new("condition f agrees with g");
    let mut via_a = PropertyCheck::new("lambda_u = T_rho(lambda_a)");
    let mut sing = PropertyCheck::new("lambda_u singularizes lambda_a");
    let mut central = PropertyCheck::new("central translation");
    let mut fiber = PropertyCheck::new("mu in fiber of its lambda_u");
    let mut lower = PropertyCheck::new("norm grows along u-roots");
    let mut semisimple = PropertyCheck::new("semisimple: parameter 0 only");
    let mut minimal = PropertyCheck::new("trivial K-type minimizes |mu+2rho_c|");

    let mut lambdas: BTreeSet<WeightVector> = BTreeSet::new();
    let mut zero_fiber_min: Option<(Rational, WeightVector)> = None;
    for mu in &range {
        let values: Vec<bool> =
            UsCondition::ALL.iter().map(|&c| us_condition(rf, mu, c)).collect::<Result<_>>()?;
        agree.record(values.iter().all(|&v| v == values[0]), || format!("mu = {mu}: {values:?}"));
        f_vs_g.record(values[4] == values[5], || format!("mu = {mu}"));

        let la = lambda_a_raw(rf, mu)?;
        let lu = lambda_u_raw(rf, mu)?;
        via_a.record(t_gamma(g, g.rho(), &la)? == lu, || format!("mu = {mu}"));
        sing.record(is_singularization(rf, &lu, &la), || format!("mu = {mu}"));
        let mu_z = central_part(rf, mu);
        central.record(lambda_u_raw(rf, &(mu - &mu_z))? == &lu - &mu_z, || format!("mu = {mu}"));
        if lu.is_zero() {
            let n2 = g.norm2(&(mu + rf.two_rho_c()));
            if zero_fiber_min.as_ref().is_none_or(|(m, _)| n2 < *m) {
                zero_fiber_min = Some((n2, mu.clone()));
            }
        }
        if lambdas.insert(lu.clone()) {
            let b = enumerate_b_lambda_u(rf, &lu)?;
            fiber.record(b.iter().any(|k| k.mu() == mu), || format!("mu = {mu}, lambda_u = {lu}"));
        }
    }

    // |lambda|^2 >= |lambda'|^2 whenever lambda - lambda' is a nonnegative
    // combination of roots pairing positively with lambda'
    let lambdas: Vec<WeightVector> = lambdas.into_iter().collect();
    let cap = int(1_000_000);
    for lp in &lambdas {
        let u = theta_parabolic(rf, lp)?.u_roots;
        let lo = vec![Rational::zero(); u.len()];
        let hi = vec![cap.clone(); u.len()];
        for l in &lambdas {
            if lp_feasible(&u, &lo, &hi, &(l - lp))?.is_some() {
                lower.record(g.norm2(l) >= g.norm2(lp), || format!("lambda = {l}, lambda' = {lp}"));
            }
        }
    }

    let mut props = vec![agree, f_vs_g, via_a, sing, central, fiber, lower];
    if g.central_basis().is_empty() {
        let zero = WeightVector::zero(rf.rank());
        let us = enumerate_unitarily_small(rf, &zero)?;
        semisimple.record(!us.is_empty(), || "no unitarily small K-types".into());
        for k in &us {
            semisimple.record(lambda_u_raw(rf, k.mu())?.is_zero(), || format!("mu = {k}"));
        }
        minimal.record(zero_fiber_min.is_some_and(|(_, m)| m.is_zero()), || "minimum is not at 0".into());
        props.push(semisimple);
        props.push(minimal);
    }
    Ok(SuiteReport { suite: Suite::UnitarilySmall, target: rf.name().to_string(), properties: props })
}

/// Bottom-layer bijections for the given parameters, or for every `lambda_u`
/// value attained on [`k_types_in_range`] when `lambdas` is empty.
pub fn bottom_layer_suite(rf: &RealFormData, lambdas: &[WeightVector], max_norm: Option<u64>) -> Result<SuiteReport> {
    let list: Vec<WeightVector> = if lambdas.is_empty() {
        let set: BTreeSet<WeightVector> =
            k_types_in_range(rf, max_norm).iter().map(|mu| lambda_u_raw(rf, mu)).collect::<Result<_>>()?;
        set.into_iter().collect()
    } else {
        lambdas.to_vec()
    };
    let mut bij = PropertyCheck::new("bottom-layer shift is a bijection");
    let mut sizes = PropertyCheck::new("fiber sizes match");
    for l in &list {
        let r = check_bottom_layer_bijection(rf, l)?;
        bij.record(r.ok(), || format!("lambda_u = {l}: {r:?}"));
        sizes.record(r.left.len() == r.right.len(), || {
            format!("lambda_u = {l}: {} vs {}", r.left.len(), r.right.len())
        });
    }
    Ok(SuiteReport { suite: Suite::BottomLayer, target: rf.name().to_string(), properties: vec![bij, sizes] })
}

/// Spin-module weight identities on one real form.
pub fn spin_suite(rf: &RealFormData, max_norm: Option<u64>) -> Result<SuiteReport> {
    let g = rf.g();
    let k = rf.k();
    let spin = spin_weights(rf)?;
    let wedge = wedge_p_weights(rf)?;
    let pos_p = rf.positive_noncompact();
    let half_lo = vec![ratio(-1, 2); pos_p.len()];
    let half_hi = vec![ratio(1, 2); pos_p.len()];

    let mut square = PropertyCheck::new("wedge p = spin x spin");
    square.record(check_wedge_is_spin_square(rf)?, || "multisets differ".into());

    let mut highest = PropertyCheck::new("spin highest weights rho_n'");
    highest.record(check_spin_highest_weights(rf)?, || "decomposition differs".into());

    let mut zonotope = PropertyCheck::new("spin weights in half zonotope");
    for (x, _) in spin.iter() {
        zonotope.record(lp_feasible(&pos_p, &half_lo, &half_hi, x)?.is_some(), || format!("weight {x}"));
    }

    let mut wedge_small = PropertyCheck::new("dominant wedge weights unitarily small");
    for (x, _) in wedge.iter() {
        if rf.is_dominant_integral_for_k(x) {
            wedge_small.record(is_unitarily_small(rf, x)?, || format!("weight {x}"));
        }
    }

    let mut tensor = PropertyCheck::new("wedge constituent x spin meets spin");
    let support: BTreeSet<&WeightVector> = spin.support().collect();
    for (delta, _) in decompose_character(k, &wedge)? {
        let chi = freudenthal_weights(k, &delta)?.tensor(&spin);
        let mut ok = false;
        for (hw, _) in decompose_character(k, &chi)? {
            if freudenthal_weights(k, &hw)?.support().all(|x| support.contains(x)) {
                ok = true;
                break;
            }
        }
        tensor.record(ok, || format!("delta = {delta}"));
    }

    // every K-dominant point of the half lattice in the half zonotope
    let mut hull = PropertyCheck::new("half zonotope + rho_c in hull of rho");
    let radius: BigInt = pos_p.iter().map(|b| ceil_sqrt(&g.norm2(b))).sum();
    let radius2 = Rational::from_integer(&radius * &radius) / Rational::from_integer(4.into());
    let half_lattice = Lattice::new(rf.lattice().basis().iter().map(|b| b.scale(&ratio(1, 2))).collect())?;
    for mu2 in half_lattice.points_in_ball(g.form(), &WeightVector::zero(rf.rank()), &radius2) {
        if !k.is_dominant(&mu2) || lp_feasible(&pos_p, &half_lo, &half_hi, &mu2)?.is_none() {
            continue;
        }
        hull.record(in_hull_of_orbit(g, &(&mu2 + rf.rho_c()), g.rho())?, || format!("mu_2 = {mu2}"));
    }

    let mut tensor_test = PropertyCheck::new("spin tensor test = unitarily small");
    let mut reconstruct = PropertyCheck::new("character reconstruction");
    for mu in k_types_in_range(rf, max_norm) {
        tensor_test.record(spin_tensor_test(rf, &mu)? == is_unitarily_small(rf, &mu)?, || format!("mu = {mu}"));
        let m = freudenthal_weights(k, &mu)?;
        let ok = Rational::from_integer(m.total().into()) == weyl_dimension(k, &mu)
            && decompose_character(k, &m)? == vec![(mu.clone(), 1)];
        reconstruct.record(ok, || format!("mu = {mu}"));
    }

    Ok(SuiteReport {
        suite: Suite::Spin,
        target: rf.name().to_string(),
        properties: vec![square, highest, zonotope, wedge_small, tensor, hull, tensor_test, reconstruct],
    })
}

/// Clifford-module structure for every dimension in `dims`.
pub fn clifford_suite(dims: std::ops::RangeInclusive<usize>) -> Result<SuiteReport> {
    let mut rel = PropertyCheck::new("relations");
    let mut skew = PropertyCheck::new("skew-adjoint");
    let mut dim = PropertyCheck::new("module dimension 2^(m/2)");
    let mut vol = PropertyCheck::new("volume element");
    let mut torus = PropertyCheck::new("torus weights 1/2(+-1,...)");
    let mut comm = PropertyCheck::new("commutant of even part");
    for m in dims.clone() {
        let r = clifford_structure_checks(&clifford_model(m)?);
        rel.record(r.relations, || format!("m = {m}"));
        skew.record(r.skew_adjoint, || format!("m = {m}"));
        dim.record(r.dimension, || format!("m = {m}"));
        if let Some(v) = r.volume {
            vol.record(v, || format!("m = {m}"));
        }
        torus.record(r.torus, || format!("m = {m}"));
        if let Some(d) = r.commutant_dim {
            comm.record(d == if m % 2 == 0 { 2 } else { 1 }, || format!("m = {m}: {d}"));
        }
    }
    Ok(SuiteReport {
        suite: Suite::Clifford,
        target: format!("m = {}..{}", dims.start(), dims.end()),
        properties: vec![rel, skew, dim, vol, torus, comm],
    })
}
