use num::Zero;

use super::{default_positive, RootSystemData};
use crate::error::{Error, Result};
use crate::exact::{ratio, GramForm, Rational, WeightVector};

struct Block {
    form: GramForm,
    roots: Vec<WeightVector>,
}

fn from_int_roots(rows: Vec<Vec<i64>>, form: GramForm) -> Block {
    Block { form, roots: rows.iter().map(|r| WeightVector::from_ints(r)).collect() }
}

fn signed_pairs(n: usize, long_axes: Option<i64>) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; n];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
        if let Some(s) = long_axes {
            for sign in [1, -1] {
                let mut v = vec![0; n];
                v[i] = sign * s;
                out.push(v);
            }
        }
    }
    out
}

/// `e_i - e_j` with `e_{l+1} = -(1, ..., 1)`, scaled so that every root has
/// squared length 4 (the `A_1` root is the number 2 under the identity form).
fn type_a_compact(l: usize) -> Block {
    let e = |i: usize| -> Vec<i64> {
        if i < l {
            (0..l).map(|k| i64::from(k == i)).collect()
        } else {
            vec![-1; l]
        }
    };
    let mut rows = Vec::new();
    for i in 0..=l {
        for j in 0..=l {
            if i != j {
                rows.push(e(i).iter().zip(e(j)).map(|(a, b)| a - b).collect());
            }
        }
    }
    let n = l as i64 + 1;
    let m = (0..l)
        .map(|i| (0..l).map(|j| if i == j { ratio(2 * n - 2, n) } else { ratio(-2, n) }).collect())
        .collect();
    from_int_roots(rows, GramForm::new(m).expect("type A form is positive definite"))
}

/// `e_i - e_j` in `R^{l+1}` with the identity form.
fn type_a_gl(l: usize) -> Block {
    let n = l + 1;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                rows.push(v);
            }
        }
    }
    from_int_roots(rows, GramForm::identity(n))
}

fn type_g2() -> Block {
    let short = [[1, -1], [1, 0], [0, 1]];
    let long = [[2, -1], [-1, 2], [1, 1]];
    let rows = short
        .iter()
        .chain(long.iter())
        .flat_map(|r| [r.to_vec(), r.iter().map(|x| -x).collect()])
        .collect();
    let m = vec![vec![ratio(2, 1), ratio(1, 1)], vec![ratio(1, 1), ratio(2, 1)]];
    from_int_roots(rows, GramForm::new(m).expect("G2 form is positive definite"))
}

fn type_f4() -> Block {
    let mut roots: Vec<WeightVector> =
        signed_pairs(4, Some(1)).iter().map(|r| WeightVector::from_ints(r)).collect();
    let half = ratio(1, 2);
    for signs in 0..16u32 {
        let v = (0..4)
            .map(|k| if signs >> k & 1 == 1 { -half.clone() } else { half.clone() })
            .collect();
        roots.push(WeightVector::new(v));
    }
    Block { form: GramForm::identity(4), roots }
}

fn parse_factor(tok: &str) -> Result<(char, usize)> {
    let tok = tok.trim();
    let mut chars = tok.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::UnknownCartanLabel(tok.to_string()))?
        .to_ascii_uppercase();
    let rest = chars.as_str().trim_start_matches('_');
    let l: usize = rest.parse().map_err(|_| Error::UnknownCartanLabel(tok.to_string()))?;
    let ok = match letter {
        'A' => l >= 1,
        'B' | 'C' => l >= 2,
        'D' => l >= 3,
        'G' => l == 2,
        'F' => l == 4,
        _ => false,
    };
    if !ok {
        return Err(Error::UnknownCartanLabel(tok.to_string()));
    }
    Ok((letter, l))
}

/// Builds a root datum from a label such as `A1`, `C_2`, `G2` or a product
/// `A1xB2` (also `*`, `+`, `×` as separators), with `central_rank` extra
/// coordinates orthogonal to all roots.
///
/// A lone `A_l` with `central_rank >= 1` uses the `gl(l+1)` coordinates
/// `e_i - e_j` and absorbs one central direction. Otherwise type `A_l` uses
/// `l` coordinates scaled so that `A_1` has roots `±2`. Types B, C, D, F use
/// Euclidean coordinates and G2 lives in the sum-zero plane of `R^3`.
pub fn build_from_cartan_label(label: &str, central_rank: usize) -> Result<RootSystemData> {
    let factors: Vec<(char, usize)> = label
        .split(['x', 'X', '*', '+', '×'])
        .map(parse_factor)
        .collect::<Result<_>>()?;
    let mut extra = central_rank;
    let mut blocks = Vec::new();
    for &(letter, l) in &factors {
        let block = match letter {
            'A' if factors.len() == 1 && central_rank >= 1 => {
                extra -= 1;
                type_a_gl(l)
            }
            'A' => type_a_compact(l),
            'B' => from_int_roots(signed_pairs(l, Some(1)), GramForm::identity(l)),
            'C' => from_int_roots(signed_pairs(l, Some(2)), GramForm::identity(l)),
            'D' => from_int_roots(signed_pairs(l, None), GramForm::identity(l)),
            'G' => type_g2(),
            _ => type_f4(),
        };
        blocks.push(block);
    }
    if extra > 0 {
        blocks.push(Block { form: GramForm::identity(extra), roots: Vec::new() });
    }

    let n: usize = blocks.iter().map(|b| b.form.dim()).sum();
    let mut roots = Vec::new();
    let mut off = 0;
    for b in &blocks {
        let d = b.form.dim();
        for r in &b.roots {
            let mut c = vec![Rational::zero(); n];
            c[off..off + d].clone_from_slice(r.coords());
            roots.push(WeightVector::new(c));
        }
        off += d;
    }
    let forms: Vec<GramForm> = blocks.into_iter().map(|b| b.form).collect();
    let form = GramForm::direct_sum(&forms);
    let positive = default_positive(&roots);
    RootSystemData::new(roots, form, positive)
}
