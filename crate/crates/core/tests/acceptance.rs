//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.
//!
//! Expected values come from closed-form formulas written out here, not from
//! the library.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lieproj::cli::config::{all_bundled, bundled};
use lieproj::exact::{int, lp_feasible, ratio, Rational};
use lieproj::kstruct::{
    check_bottom_layer_bijection, enumerate_small, enumerate_unitarily_small, is_unitarily_small, lambda_u, us_condition,
    KType, UsCondition,
};
use lieproj::rootsys::Lattice;
use lieproj::spin::{
    check_wedge_is_spin_square, spin_tensor_test, clifford_model, clifford_structure_checks, dirac_inequality,
    dirac_square_eigenvalue, spin_weights, wedge_p_weights, WeightMultiset,
};
use lieproj::verify::{k_types_in_range, projection_suite};
use lieproj::{chamber::in_hull_of_orbit, WeightVector};
use num::{Complex, Signed, ToPrimitive, Zero};

type Outcome = Result<String, String>;

fn w(c: &[i64]) -> WeightVector {
    WeightVector::from_ints(c)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn weights(v: Vec<KType>) -> Vec<WeightVector> {
    v.into_iter().map(KType::into_inner).collect()
}

fn sgn(n: i64) -> i64 {
    if n >= 0 {
        1
    } else {
        -1
    }
}

fn criterion_1() -> Outcome {
    let rf = bundled("sl2").map_err(e)?;
    for n in -8i64..=8 {
        let expect = if n.abs() >= 2 { n - 2 * sgn(n) } else { 0 };
        let got = lambda_u(&rf, &w(&[n])).map_err(e)?;
        ensure(got == w(&[expect]), || format!("lambda_u({n}) = {got}, expected {expect}"))?;
    }
    let us = weights(enumerate_unitarily_small(&rf, &w(&[0])).map_err(e)?);
    ensure(us == (-2..=2).map(|n| w(&[n])).collect::<Vec<_>>(), || format!("unitarily small {us:?}"))?;
    let sm = weights(enumerate_small(&rf, &w(&[0])).map_err(e)?);
    ensure(sm == (-1..=1).map(|n| w(&[n])).collect::<Vec<_>>(), || format!("small {sm:?}"))?;
    Ok("17 lambda_u values, 5 unitarily small, 3 small".into())
}

/// Piecewise `lambda_u` on the region `p + 1 >= 1 - q >= 0`, `p >= q`.
fn sp4_region_formula(p: i64, q: i64) -> Option<WeightVector> {
    if !(p + 1 >= 1 - q && 1 - q >= 0 && p >= q) {
        return None;
    }
    Some(if p - 3 >= -1 - q && -1 - q >= 0 {
        w(&[p - 3, q + 1])
    } else if p - 3 >= 0 && -1 - q <= 0 {
        w(&[p - 3, 0])
    } else if p - q >= 4 && p - 3 <= -1 - q {
        WeightVector::new(vec![ratio(p - q - 4, 2), ratio(-(p - q - 4), 2)])
    } else {
        assert!(p - 3 <= 0 && p - q <= 4, "cases cover the region");
        w(&[0, 0])
    })
}

fn criterion_2() -> Outcome {
    let rf = bundled("sp4").map_err(e)?;
    let mut expect = Vec::new();
    for p in -3i64..=3 {
        for q in -3..=p {
            if p - q <= 4 {
                expect.push(w(&[p, q]));
            }
        }
    }
    expect.sort();
    let us = weights(enumerate_unitarily_small(&rf, &w(&[0, 0])).map_err(e)?);
    ensure(us.len() == 25 && us == expect, || format!("{} unitarily small: {us:?}", us.len()))?;

    let mut small = Vec::new();
    for p in -1i64..=1 {
        for q in -1..=p {
            if p - q <= 1 {
                small.push(w(&[p, q]));
            }
        }
    }
    small.sort();
    let sm = weights(enumerate_small(&rf, &w(&[0, 0])).map_err(e)?);
    ensure(sm.len() == 5 && sm == small, || format!("small: {sm:?}"))?;

    let mut rows = 0;
    for p in -8i64..=8 {
        for q in -8i64..=8 {
            if let Some(f) = sp4_region_formula(p, q) {
                let got = lambda_u(&rf, &w(&[p, q])).map_err(e)?;
                ensure(got == f, || format!("lambda_u({p},{q}) = {got}, expected {f}"))?;
                rows += 1;
            }
        }
    }
    Ok(format!("25 unitarily small, 5 small, formula on {rows} region points"))
}

fn criterion_3() -> Outcome {
    let rf = bundled("u11").map_err(e)?;
    let mut n = 0;
    for p in -6i64..=6 {
        for q in -6i64..=6 {
            let d = p - q;
            let expect = if d.abs() >= 2 {
                w(&[p - sgn(d), q + sgn(d)])
            } else {
                WeightVector::new(vec![ratio(p + q, 2), ratio(p + q, 2)])
            };
            let mu = w(&[p, q]);
            let got = lambda_u(&rf, &mu).map_err(e)?;
            ensure(got == expect, || format!("lambda_u({p},{q}) = {got}, expected {expect}"))?;
            let us = is_unitarily_small(&rf, &mu).map_err(e)?;
            ensure(us == (d.abs() <= 2), || format!("({p},{q}) unitarily small = {us}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} grid points"))
}

fn criterion_4() -> Outcome {
    let mut total = 0;
    for rf in all_bundled().map_err(e)? {
        for mu in k_types_in_range(&rf, None) {
            let mut values = Vec::new();
            for c in UsCondition::ALL {
                values.push(us_condition(&rf, &mu, c).map_err(e)?);
            }
            ensure(values.iter().all(|&v| v == values[0]), || {
                format!("{}: conditions disagree at {mu}: {values:?}", rf.name())
            })?;
            total += 1;
        }
    }
    Ok(format!("6 conditions agree on {total} K-types over 4 forms"))
}

fn criterion_5() -> Outcome {
    let mut n = 0;
    for rf in all_bundled().map_err(e)? {
        let r = projection_suite(rf.name(), rf.g(), 1000, 7).map_err(e)?;
        ensure(r.passed(), || r.to_string())?;
        ensure(r.properties.iter().all(|p| p.checked >= 1000), || r.to_string())?;
        n += 1;
    }
    Ok(format!("8 properties x 1000 random vectors on {n} root systems"))
}

fn criterion_6() -> Outcome {
    let cases = [("sp4", w(&[4, 0]), 5), ("sl2", w(&[3]), 1), ("sl2", w(&[-3]), 1)];
    for (name, lu, size) in cases {
        let r = check_bottom_layer_bijection(&bundled(name).map_err(e)?, &lu).map_err(e)?;
        ensure(r.ok() && r.left.len() == size && r.right.len() == size, || format!("{name} {lu}: {r:?}"))?;
    }
    Ok("sp4 (4,0): 5<->5; sl2 3, -3: 1<->1".into())
}

type Gauss = Complex<Rational>;

fn criterion_7() -> Outcome {
    for (name, wedge, spin) in [("sl2", 4, 2), ("sp4", 64, 8)] {
        let rf = bundled(name).map_err(e)?;
        let wd = wedge_p_weights(&rf).map_err(e)?.total();
        let sp = spin_weights(&rf).map_err(e)?.total();
        ensure(check_wedge_is_spin_square(&rf).map_err(e)?, || format!("{name}: wedge p differs from spin x spin"))?;
        ensure(wd == wedge && sp == spin, || format!("{name}: sizes {wd}, {sp}"))?;
    }
    for m in 1..=8 {
        let r = clifford_structure_checks(&clifford_model(m).map_err(e)?);
        ensure(r.relations && r.skew_adjoint && r.dimension && r.module_dim == 1 << (m / 2), || {
            format!("m = {m}: {r:?}")
        })?;
    }
    let z = Gauss::zero;
    let re = |x: i64| Gauss::new(int(x), Rational::zero());
    let im = |x: i64| Gauss::new(Rational::zero(), int(x));
    let m2 = clifford_model(2).map_err(e)?;
    ensure(m2.gamma == vec![vec![vec![z(), re(1)], vec![re(-1), z()]], vec![vec![z(), im(1)], vec![im(1), z()]]], || {
        format!("m = 2 matrices {:?}", m2.gamma)
    })?;
    // half-spin weights: the plane rotation acts by +-i, i.e. torus weights +-1/2
    let r2 = clifford_structure_checks(&m2);
    let half = WeightMultiset::from_weights(1, [WeightVector::new(vec![ratio(1, 2)]), WeightVector::new(vec![ratio(-1, 2)])]);
    ensure(r2.torus_weights == half, || format!("torus weights {:?}", r2.torus_weights))?;
    let beta = w(&[2]);
    let sl2_spin = spin_weights(&bundled("sl2").map_err(e)?).map_err(e)?;
    let expect = WeightMultiset::from_weights(1, [beta.scale(&ratio(1, 2)), beta.scale(&ratio(-1, 2))]);
    ensure(sl2_spin == expect, || format!("sl2 spin weights {sl2_spin:?}"))?;
    Ok("wedge = spin^2 (4, 64); Clifford m = 1..8; m = 2 matrices and weights".into())
}

fn criterion_8() -> Outcome {
    for rf in all_bundled().map_err(e)? {
        let rho_n = rf.rho_n();
        let rho = rf.g().rho();
        let v = dirac_square_eigenvalue(&rf, &rho_n, rho).map_err(e)?;
        ensure(v.is_zero() && dirac_inequality(&rf, &rho_n, rho).map_err(e)?, || {
            format!("{}: eigenvalue {v}", rf.name())
        })?;
    }
    let mut checked = 0;
    for name in ["sl2", "sp4"] {
        let rf = bundled(name).map_err(e)?;
        let g = rf.g();
        let pos_p = rf.positive_noncompact();
        let lo = vec![ratio(-1, 2); pos_p.len()];
        let hi = vec![ratio(1, 2); pos_p.len()];
        // the half zonotope lies in the box |x_i| <= (sum of |coordinates|) / 2
        let bound: i64 = pos_p
            .iter()
            .flat_map(|b| b.coords().iter())
            .map(|c| c.abs().ceil().to_integer().to_i64().expect("small coordinates"))
            .sum();
        let half = Lattice::new(rf.lattice().basis().iter().map(|b| b.scale(&ratio(1, 2))).collect()).map_err(e)?;
        let mut pts: BTreeSet<WeightVector> = BTreeSet::new();
        let n = rf.rank();
        let side = 2 * bound + 1;
        for idx in 0..side.pow(n as u32) {
            let mut x = idx;
            let mut c = Vec::new();
            for _ in 0..n {
                c.push(ratio(x % side - bound, 2));
                x /= side;
            }
            let p = WeightVector::new(c);
            if half.contains(&p) {
                pts.insert(p);
            }
        }
        for mu2 in pts {
            if !rf.k().is_dominant(&mu2) || lp_feasible(&pos_p, &lo, &hi, &mu2).map_err(e)?.is_none() {
                continue;
            }
            let x = &mu2 + rf.rho_c();
            ensure(in_hull_of_orbit(g, &x, g.rho()).map_err(e)?, || format!("{name}: {mu2} + rho_c outside hull"))?;
            checked += 1;
        }
    }
    Ok(format!("equality on 4 forms; hull step on {checked} dominant half-zonotope weights"))
}

fn criterion_9() -> Outcome {
    let mut n = 0;
    for name in ["sl2", "sp4"] {
        let rf = bundled(name).map_err(e)?;
        for mu in k_types_in_range(&rf, None) {
            let a = spin_tensor_test(&rf, &mu).map_err(e)?;
            let b = is_unitarily_small(&rf, &mu).map_err(e)?;
            ensure(a == b, || format!("{name} {mu}: tensor test {a}, unitarily small {b}"))?;
            n += 1;
        }
    }
    Ok(format!("agreement on {n} K-types"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome, u64);
    let criteria: [Criterion; 9] = [
        ("SL(2,R) lambda_u and K-type sets", criterion_1, 1),
        ("Sp(4,R) unitarily small, small and lambda_u", criterion_2, 5),
        ("U(1,1) lambda_u and unitarily small", criterion_3, 1),
        ("six equivalent conditions on bundled forms", criterion_4, 30),
        ("projection engine properties", criterion_5, 30),
        ("bottom-layer bijections", criterion_6, 5),
        ("spin weights and Clifford models", criterion_7, 10),
        ("Dirac equality and hull step", criterion_8, 10),
        ("spin tensor test vs unitarily small", criterion_9, 60),
    ];
    let mut failed = 0;
    for (i, (label, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let dt = t.elapsed();
        let over = dt > Duration::from_secs(*limit);
        let (status, detail) = match (&r, over) {
            (Ok(msg), false) => ("PASS", msg.clone()),
            (Ok(msg), true) => ("FAIL", format!("{msg}; exceeded {limit} s")),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} criterion {} {label}: {detail} ({} ms)", i + 1, dt.as_millis());
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
