//! Configuration, reporting and subcommand implementations behind the binary.

pub mod config;
pub mod goldens;
pub mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::exact::{format_rational, WeightVector};
use crate::kstruct::{
    enumerate_b_lambda_u, enumerate_small, enumerate_unitarily_small, lambda_a, lambda_u, us_condition, KType,
    RealFormData, UsCondition,
};
use crate::rootsys::dominant_representative;
use crate::spin::{
    check_wedge_is_spin_square, check_spin_highest_weights, conj_sharp_test, dirac_inequality, dirac_square_eigenvalue,
    spin_highest_weights, spin_weights, MAX_SUBSET_ROOTS,
};
use crate::verify::{
    bottom_layer_suite, clifford_suite, projection_suite, spin_suite, unitarily_small_suite, Suite, SuiteReport,
};
use output::{table, weights_json, Record};

#[derive(Debug, Parser)]
#[command(name = "lieproj", version, about = "Exact chamber projections and K-type combinatorics")]
pub struct Cli {
    /// Bundled config name (sl2, sp4, u11, su21) or path to a JSON config.
    #[arg(long, global = true)]
    pub config: Option<String>,
    /// Emit one JSON record per line instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Restrict exhaustive checks to K-types of norm at most N.
    #[arg(long, global = true, value_name = "N")]
    pub max_norm: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    A,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    UnitarilySmall,
    Small,
    Fiber,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// lambda_a or lambda_u of a K-type highest weight such as "5,-1".
    Lambda {
        which: Which,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// List unitarily small or small K-types with a central part (default 0),
    /// or all K-types with a given lambda_u.
    Enumerate {
        mode: Mode,
        #[arg(allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Run property suites; exits 1 if any property fails.
    Verify {
        /// projections, unitarily-small, bottom-layer, spin, clifford or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random vectors per root system for the projections suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Parameters for the bottom-layer suite (repeatable); defaults to all
        /// values attained in the test range.
        #[arg(long = "lambda-u", allow_hyphen_values = true)]
        lambda_u: Vec<String>,
        /// Largest Clifford dimension checked.
        #[arg(long, default_value_t = 8)]
        clifford_max: usize,
    },
    /// Recompute the reference lambda tables and compare with the embedded copies.
    #[command(alias = "paper-examples")]
    ReferenceTables,
    /// Spin-module weights and highest weights.
    Spin,
    /// Dirac inequality and hull test for a weight and an infinitesimal character.
    Dirac {
        #[arg(allow_hyphen_values = true)]
        mu_tilde: String,
        #[arg(allow_hyphen_values = true)]
        re_phi: String,
    },
}

/// What the command concluded, mapped to exit codes 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
}

/// Parses the process arguments, runs, and maps errors to exit code 2.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn parse_weight(rf: &RealFormData, s: &str) -> Result<WeightVector> {
    let v = WeightVector::parse(s)?;
    if v.dim() != rf.rank() {
        return Err(Error::DimensionMismatch { expected: rf.rank(), found: v.dim() });
    }
    Ok(v)
}

fn required_config(cli: &Cli) -> Result<RealFormData> {
    let name = cli.config.as_deref().ok_or_else(|| Error::Config("this command needs --config".into()))?;
    config::load(name)
}

fn selected_configs(cli: &Cli) -> Result<Vec<RealFormData>> {
    match &cli.config {
        Some(name) => Ok(vec![config::load(name)?]),
        None => config::all_bundled(),
    }
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<Outcome> {
    match &cli.command {
        Command::Lambda { which, mu } => cmd_lambda(cli, *which, mu, out),
        Command::Enumerate { mode, weight } => cmd_enumerate(cli, *mode, weight.as_deref(), out),
        Command::Verify { suite, samples, seed, lambda_u, clifford_max } => {
            cmd_verify(cli, suite, *samples, *seed, lambda_u, *clifford_max, out)
        }
        Command::ReferenceTables => cmd_reference_tables(cli, out),
        Command::Spin => cmd_spin(cli, out),
        Command::Dirac { mu_tilde, re_phi } => cmd_dirac(cli, mu_tilde, re_phi, out),
    }
}

fn cmd_lambda(cli: &Cli, which: Which, mu: &str, out: &mut impl Write) -> Result<Outcome> {
    let rf = required_config(cli)?;
    let mu = parse_weight(&rf, mu)?;
    let value = match which {
        Which::A => lambda_a(&rf, &mu)?,
        Which::U => lambda_u(&rf, &mu)?,
    };
    let shifted = &mu + rf.two_rho_c();
    let (_, w) = dominant_representative(rf.g(), &shifted);
    let chamber = rf.g().conjugate(&w);
    let mut positive = chamber.positive().to_vec();
    positive.sort();
    let name = match which {
        Which::A => "lambda_a",
        Which::U => "lambda_u",
    };
    if cli.json {
        let r = Record::new("lambda")
            .field("config", rf.name())
            .field("which", name)
            .weight("mu", &mu)
            .weight("mu_plus_2rho_c", &shifted)
            .field("positive", weights_json(&positive))
            .weight("two_rho", &chamber.two_rho())
            .weight("lambda", &value);
        writeln!(out, "{}", r.line()).map_err(io)?;
    } else {
        let list = positive.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let rows = vec![
            vec!["config".into(), rf.name().to_string()],
            vec!["mu".into(), mu.to_string()],
            vec!["mu + 2rho_c".into(), shifted.to_string()],
            vec!["positive roots".into(), list],
            vec!["2rho".into(), chamber.two_rho().to_string()],
            vec![name.into(), value.to_string()],
        ];
        write!(out, "{}", table(&["quantity", "value"], &rows)).map_err(io)?;
    }
    Ok(Outcome::Success)
}

fn cmd_enumerate(cli: &Cli, mode: Mode, weight: Option<&str>, out: &mut impl Write) -> Result<Outcome> {
    let rf = required_config(cli)?;
    let arg = match weight {
        Some(s) => parse_weight(&rf, s)?,
        None if mode == Mode::Fiber => return Err(Error::InvalidInput("fiber needs a lambda_u weight".into())),
        None => WeightVector::zero(rf.rank()),
    };
    let found: Vec<KType> = match mode {
        Mode::UnitarilySmall => enumerate_unitarily_small(&rf, &arg)?,
        Mode::Small => enumerate_small(&rf, &arg)?,
        Mode::Fiber => enumerate_b_lambda_u(&rf, &arg)?,
    };
    let mode_name = match mode {
        Mode::UnitarilySmall => "unitarily-small",
        Mode::Small => "small",
        Mode::Fiber => "fiber",
    };
    let mut rows = Vec::new();
    for k in &found {
        let flags: Vec<bool> =
            UsCondition::ALL.iter().map(|&c| us_condition(&rf, k.mu(), c)).collect::<Result<_>>()?;
        if cli.json {
            let mut r = Record::new("k_type").field("config", rf.name()).field("mode", mode_name).weight("mu", k.mu());
            for (c, f) in UsCondition::ALL.iter().zip(&flags) {
                r = r.field(&c.letter().to_string(), *f);
            }
            writeln!(out, "{}", r.line()).map_err(io)?;
        } else {
            let mut row = vec![k.mu().to_string()];
            row.extend(flags.iter().map(|&f| if f { "y" } else { "n" }.to_string()));
            rows.push(row);
        }
    }
    if cli.json {
        let r = Record::new("count").field("config", rf.name()).field("mode", mode_name).weight("parameter", &arg);
        writeln!(out, "{}", r.field("count", found.len()).line()).map_err(io)?;
    } else {
        write!(out, "{}", table(&["mu", "b", "c", "d", "e", "f", "g"], &rows)).map_err(io)?;
        writeln!(out, "{} K-types ({mode_name}, parameter {arg}, {})", found.len(), rf.name()).map_err(io)?;
    }
    Ok(Outcome::Success)
}

fn emit_report(cli: &Cli, r: &SuiteReport, out: &mut impl Write) -> Result<()> {
    if cli.json {
        for p in &r.properties {
            let mut rec = Record::new("property")
                .field("suite", r.suite.name())
                .field("target", r.target.as_str())
                .field("property", p.name.as_str())
                .field("checked", p.checked)
                .field("failed", p.failed)
                .field("passed", p.passed());
            if let Some(f) = &p.first_failure {
                rec = rec.field("first_failure", f.as_str());
            }
            writeln!(out, "{}", rec.line()).map_err(io)?;
        }
    } else {
        write!(out, "{r}").map_err(io)?;
    }
    Ok(())
}

fn cmd_verify(
    cli: &Cli,
    suite: &str,
    samples: usize,
    seed: u64,
    lambda_u: &[String],
    clifford_max: usize,
    out: &mut impl Write,
) -> Result<Outcome> {
    let suites = Suite::parse_list(suite)?;
    let forms = selected_configs(cli)?;
    let mut ok = true;
    for s in suites {
        let reports: Vec<SuiteReport> = match s {
            Suite::Projections => forms
                .iter()
                .map(|rf| projection_suite(rf.name(), rf.g(), samples, seed))
                .collect::<Result<_>>()?,
            Suite::UnitarilySmall => {
                forms.iter().map(|rf| unitarily_small_suite(rf, cli.max_norm)).collect::<Result<_>>()?
            }
            Suite::BottomLayer => {
                let mut v = Vec::new();
                for rf in &forms {
                    let lambdas = lambda_u.iter().map(|s| parse_weight(rf, s)).collect::<Result<Vec<_>>>()?;
                    v.push(bottom_layer_suite(rf, &lambdas, cli.max_norm)?);
                }
                v
            }
            Suite::Spin => forms.iter().map(|rf| spin_suite(rf, cli.max_norm)).collect::<Result<_>>()?,
            Suite::Clifford => vec![clifford_suite(1..=clifford_max)?],
        };
        for r in &reports {
            ok &= r.passed();
            emit_report(cli, r, out)?;
        }
    }
    Ok(if ok { Outcome::Success } else { Outcome::VerificationFailed })
}

fn cmd_reference_tables(cli: &Cli, out: &mut impl Write) -> Result<Outcome> {
    let mut ok = true;
    for c in goldens::compare_all()? {
        ok &= c.mismatch.is_none();
        if cli.json {
            let mut r = Record::new("golden").field("table", c.name).field("rows", c.rows).field("match", c.mismatch.is_none());
            if let Some((line, expected, computed)) = &c.mismatch {
                r = r.field("line", *line).field("expected", expected.as_str()).field("computed", computed.as_str());
            }
            writeln!(out, "{}", r.line()).map_err(io)?;
        } else {
            match &c.mismatch {
                None => writeln!(out, "{:<4} {} rows match", c.name, c.rows),
                Some((line, expected, computed)) => writeln!(
                    out,
                    "{:<4} MISMATCH at line {line}\n  expected: {expected}\n  computed: {computed}",
                    c.name
                ),
            }
            .map_err(io)?;
        }
    }
    Ok(if ok { Outcome::Success } else { Outcome::VerificationFailed })
}

fn cmd_spin(cli: &Cli, out: &mut impl Write) -> Result<Outcome> {
    let rf = required_config(cli)?;
    if rf.positive_noncompact().len() > MAX_SUBSET_ROOTS {
        return Err(Error::SizeCapExceeded(format!("more than {MAX_SUBSET_ROOTS} positive noncompact roots")));
    }
    let weights = spin_weights(&rf)?;
    let highest = spin_highest_weights(&rf)?;
    let square = check_wedge_is_spin_square(&rf)?;
    let decomposition = check_spin_highest_weights(&rf)?;
    if cli.json {
        for (w, m) in weights.iter() {
            writeln!(out, "{}", Record::new("spin_weight").weight("weight", w).field("multiplicity", m).line())
                .map_err(io)?;
        }
        let r = Record::new("spin")
            .field("config", rf.name())
            .field("dimension", weights.total())
            .field("highest_weights", weights_json(&highest))
            .field("wedge_equals_square", square)
            .field("decomposition_matches", decomposition);
        writeln!(out, "{}", r.line()).map_err(io)?;
    } else {
        let rows: Vec<Vec<String>> = weights.iter().map(|(w, m)| vec![w.to_string(), m.to_string()]).collect();
        write!(out, "{}", table(&["weight", "mult"], &rows)).map_err(io)?;
        let hw = highest.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        writeln!(out, "dimension {} ({})", weights.total(), rf.name()).map_err(io)?;
        writeln!(out, "highest weights: {hw}").map_err(io)?;
        writeln!(out, "wedge p = spin x spin: {square}").map_err(io)?;
        writeln!(out, "decomposition matches highest weights: {decomposition}").map_err(io)?;
    }
    Ok(if square && decomposition { Outcome::Success } else { Outcome::VerificationFailed })
}

fn cmd_dirac(cli: &Cli, mu_tilde: &str, re_phi: &str, out: &mut impl Write) -> Result<Outcome> {
    let rf = required_config(cli)?;
    let mu = parse_weight(&rf, mu_tilde)?;
    let phi = parse_weight(&rf, re_phi)?;
    let value = dirac_square_eigenvalue(&rf, &mu, &phi)?;
    let inequality = dirac_inequality(&rf, &mu, &phi)?;
    let hull = conj_sharp_test(&rf, &mu, &phi)?;
    if cli.json {
        let r = Record::new("dirac")
            .field("config", rf.name())
            .weight("mu_tilde", &mu)
            .weight("re_phi", &phi)
            .rational("eigenvalue", &value)
            .field("inequality", inequality)
            .field("hull", hull);
        writeln!(out, "{}", r.line()).map_err(io)?;
    } else {
        let rows = vec![
            vec!["|mu~ + rho_c|^2 - |phi|^2".into(), format_rational(&value)],
            vec!["inequality holds".into(), inequality.to_string()],
            vec!["phi in hull of W(mu~ + rho_c)".into(), hull.to_string()],
        ];
        write!(out, "{}", table(&["quantity", "value"], &rows)).map_err(io)?;
    }
    Ok(Outcome::Success)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<Outcome>, String) {
        let cli = Cli::try_parse_from(std::iter::once("lieproj").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(&cli, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn lambda_rows() {
        let (r, s) = run_args(&["--config", "sp4", "lambda", "u", "5,-1"]);
        assert_eq!(r.unwrap(), Outcome::Success);
        assert!(s.lines().any(|l| l.starts_with("lambda_u") && l.ends_with("(2,0)")), "{s}");
        let (_, s) = run_args(&["--config", "sl2", "--json", "lambda", "u", "5"]);
        let v: serde_json::Value = serde_json::from_str(s.trim()).unwrap();
        assert_eq!(output::weight_from_json(&v["lambda"]).unwrap(), WeightVector::from_ints(&[3]));
        let (r, _) = run_args(&["--config", "sp4", "lambda", "u", "-1,5"]);
        assert!(matches!(r, Err(Error::NotKDominantIntegral { .. })));
    }

    #[test]
    fn enumerate_counts() {
        let (_, s) = run_args(&["--config", "sp4", "enumerate", "unitarily-small"]);
        assert!(s.lines().last().unwrap().starts_with("25 K-types"), "{s}");
        let (_, s) = run_args(&["--config", "sl2", "--json", "enumerate", "fiber", "0"]);
        assert_eq!(s.lines().count(), 6);
        assert!(s.lines().last().unwrap().contains("\"count\":5"));
    }

    #[test]
    fn missing_config_is_an_error() {
        let (r, _) = run_args(&["spin"]);
        assert!(matches!(r, Err(Error::Config(_))));
    }
}
