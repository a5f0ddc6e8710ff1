//! Reference tables of `lambda_a`, `lambda_u` and the two smallness flags on
//! fixed grids for the rank one and rank two bundled forms.

use crate::error::Result;
use crate::exact::WeightVector;
use crate::kstruct::{lambda_a, lambda_u, RealFormData};

use super::config::bundled;

pub const HEADER: &str = "mu\tlambda_a\tlambda_u\tsmall\tusmall";

/// `(config name, embedded table)`.
pub const GOLDENS: [(&str, &str); 3] = [
    ("sl2", include_str!("../../goldens/sl2.txt")),
    ("sp4", include_str!("../../goldens/sp4.txt")),
    ("u11", include_str!("../../goldens/u11.txt")),
];

/// Grid rows: `n` in `[-8, 8]` for rank one, `(p, q)` in `[-8, 8]^2` otherwise,
/// keeping only K-dominant weights.
pub fn grid(rf: &RealFormData) -> Vec<WeightVector> {
    let mut out = Vec::new();
    if rf.rank() == 1 {
        out.extend((-8..=8).map(|n| WeightVector::from_ints(&[n])));
    } else {
        for p in -8..=8 {
            for q in -8..=8 {
                out.push(WeightVector::from_ints(&[p, q]));
            }
        }
    }
    out.retain(|mu| rf.is_dominant_integral_for_k(mu));
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render(rf: &RealFormData) -> Result<String> {
    let mut s = String::from(HEADER);
    s.push('\n');
    for mu in grid(rf) {
        let la = lambda_a(rf, &mu)?;
        let lu = lambda_u(rf, &mu)?;
        let small = rf.g().is_central(&la);
        let usmall = rf.g().is_central(&lu);
        s.push_str(&format!("{mu}\t{la}\t{lu}\t{}\t{}\n", yes_no(small), yes_no(usmall)));
    }
    Ok(s)
}

/// Result of comparing one recomputed table with its reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenComparison {
    pub name: &'static str,
    pub rows: usize,
    /// `(line number, expected, computed)` for the first differing line.
    pub mismatch: Option<(usize, String, String)>,
}

pub fn compare_all() -> Result<Vec<GoldenComparison>> {
    GOLDENS
        .iter()
        .map(|&(name, expected)| {
            let computed = render(&bundled(name)?)?;
            let mismatch = if computed == expected {
                None
            } else {
                let mut e = expected.lines();
                let mut c = computed.lines();
                let mut i = 0;
                loop {
                    i += 1;
                    match (e.next(), c.next()) {
                        (Some(a), Some(b)) if a == b => continue,
                        (None, None) => break Some((i, "<trailing whitespace>".into(), String::new())),
                        (a, b) => {
                            break Some((i, a.unwrap_or("<end>").to_string(), b.unwrap_or("<end>").to_string()))
                        }
                    }
                }
            };
            Ok(GoldenComparison { name, rows: computed.lines().count() - 1, mismatch })
        })
        .collect()
}
