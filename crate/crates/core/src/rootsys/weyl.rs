use std::collections::{HashSet, VecDeque};

use num::Signed;

use super::RootSystemData;
use crate::error::{Error, Result};
use crate::exact::linalg::{self, Matrix};
use crate::exact::{GramForm, WeightVector};

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// A Weyl group element: an exact matrix on coordinates plus a reduced word in
/// the simple reflections (leftmost letter acts last).
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: Matrix,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { matrix: linalg::identity(n), word: Vec::new() }
    }

    /// The product `s_{word[0]} s_{word[1]} ...` of simple reflections.
    pub fn from_word(data: &RootSystemData, word: &[usize]) -> Self {
        let mut m = linalg::identity(data.rank());
        for &i in word {
            m = linalg::mat_mul(&m, &data.reflection_matrix(&data.simple()[i]));
        }
        WeylElement { matrix: m, word: word.to_vec() }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, v: &WeightVector) -> WeightVector {
        WeightVector::new(linalg::mat_vec(&self.matrix, v.coords()))
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { matrix: linalg::mat_mul(&self.matrix, &other.matrix), word }
    }

    pub fn inverse(&self) -> WeylElement {
        let matrix = linalg::inverse(&self.matrix).expect("Weyl group elements are invertible");
        let word = self.word.iter().rev().copied().collect();
        WeylElement { matrix, word }
    }

    /// `<w v, w u> = <v, u>` on the coordinate basis.
    pub fn preserves_form(&self, form: &GramForm) -> bool {
        let n = form.dim();
        let g: Matrix = form.matrix().to_vec();
        let wt = linalg::transpose(&self.matrix, n, n);
        linalg::mat_mul(&linalg::mat_mul(&wt, &g), &self.matrix) == g
    }
}

/// The full Weyl group, memoized on the root data, with the default size cap.
pub fn weyl_group(data: &RootSystemData) -> Result<&[WeylElement]> {
    data.weyl_cache()
        .get_or_init(|| weyl_group_capped(data, DEFAULT_WEYL_CAP).ok())
        .as_deref()
        .ok_or(Error::WeylGroupTooLarge { cap: DEFAULT_WEYL_CAP })
}

/// Breadth-first enumeration over right multiplication by simple reflections.
/// BFS order makes every stored word reduced.
pub fn weyl_group_capped(data: &RootSystemData, cap: usize) -> Result<Vec<WeylElement>> {
    let n = data.rank();
    let gens: Vec<Matrix> = data.simple().iter().map(|a| data.reflection_matrix(a)).collect();
    let start = WeylElement::identity(n);
    let mut seen: HashSet<Matrix> = HashSet::new();
    seen.insert(start.matrix.clone());
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for (i, s) in gens.iter().enumerate() {
            let m = linalg::mat_mul(&w.matrix, s);
            if seen.contains(&m) {
                continue;
            }
            if out.len() >= cap {
                return Err(Error::WeylGroupTooLarge { cap });
            }
            seen.insert(m.clone());
            let mut word = w.word.clone();
            word.push(i);
            let e = WeylElement { matrix: m, word };
            out.push(e.clone());
            queue.push_back(e);
        }
    }
    Ok(out)
}

/// Returns `(v_plus, w)` with `v_plus` dominant and `w v_plus = v`, found by
/// repeatedly reflecting in the first simple root with negative pairing.
pub fn dominant_representative(data: &RootSystemData, v: &WeightVector) -> (WeightVector, WeylElement) {
    let mut x = v.clone();
    let mut word = Vec::new();
    while let Some(i) = data
        .simple()
        .iter()
        .position(|a| data.inner(&x, a).is_negative())
    {
        x = data.reflect(&data.simple()[i], &x);
        word.push(i);
    }
    (x, WeylElement::from_word(data, &word))
}

/// A positive system `w Δ+` with the element producing it.
#[derive(Clone, Debug)]
pub struct PositiveSystem {
    /// Roots of `w Δ+`, sorted.
    pub roots: Vec<WeightVector>,
    pub weyl: WeylElement,
}

/// All positive systems `w Δ+` containing `k_positive`, deduplicated, in BFS order of `w`.
pub fn positive_systems_containing(
    data: &RootSystemData,
    k_positive: &[WeightVector],
) -> Result<Vec<PositiveSystem>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in weyl_group(data)? {
        let mut roots: Vec<WeightVector> = data.positive().iter().map(|a| w.apply(a)).collect();
        roots.sort();
        if !k_positive.iter().all(|k| roots.binary_search(k).is_ok()) {
            continue;
        }
        if seen.insert(roots.clone()) {
            out.push(PositiveSystem { roots, weyl: w.clone() });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_from_cartan_label;
    use proptest::prelude::*;

    fn w(c: &[i64]) -> WeightVector {
        WeightVector::from_ints(c)
    }

    #[test]
    fn classical_orders() {
        for (label, order) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("C2", 8),
            ("B3", 48),
            ("C3", 48),
            ("D4", 192),
            ("G2", 12),
            ("A1xA1", 4),
            ("A1xG2", 24),
        ] {
            let d = build_from_cartan_label(label, 0).unwrap();
            assert_eq!(weyl_group(&d).unwrap().len(), order, "{label}");
        }
    }

    #[test]
    fn f4_order() {
        let d = build_from_cartan_label("F4", 0).unwrap();
        assert_eq!(weyl_group(&d).unwrap().len(), 1152);
    }

    #[test]
    fn cap_is_enforced() {
        let d = build_from_cartan_label("B3", 0).unwrap();
        assert!(matches!(weyl_group_capped(&d, 10), Err(Error::WeylGroupTooLarge { cap: 10 })));
    }

    #[test]
    fn elements_preserve_form_and_permute_roots() {
        for label in ["A1", "A3", "B2", "C3", "G2", "D4", "A2xB2"] {
            let d = build_from_cartan_label(label, 1).unwrap();
            let mut roots = d.roots().to_vec();
            roots.sort();
            for g in weyl_group(&d).unwrap() {
                assert!(g.preserves_form(d.form()), "{label}");
                let mut image: Vec<_> = d.roots().iter().map(|a| g.apply(a)).collect();
                image.sort();
                assert_eq!(image, roots, "{label}");
                assert_eq!(WeylElement::from_word(&d, g.word()), *g);
                assert_eq!(g.compose(&g.inverse()), WeylElement::identity(d.rank()));
            }
        }
    }

    #[test]
    fn words_are_reduced() {
        // length of a reduced word = number of positive roots sent negative
        let d = build_from_cartan_label("B3", 0).unwrap();
        for g in weyl_group(&d).unwrap() {
            let inversions = d
                .positive()
                .iter()
                .filter(|a| !d.is_positive_root(&g.inverse().apply(a)))
                .count();
            assert_eq!(inversions, g.length());
        }
    }

    #[test]
    fn dominant_representative_examples() {
        let a1 = build_from_cartan_label("A1", 0).unwrap();
        let (vp, g) = dominant_representative(&a1, &w(&[-3]));
        assert_eq!(vp, w(&[3]));
        assert_eq!(g.word(), &[0]);

        let c2 = build_from_cartan_label("C2", 0).unwrap();
        let (vp, g) = dominant_representative(&c2, &w(&[4, -1]));
        assert_eq!(vp, w(&[4, 1]));
        assert_eq!(g.apply(&vp), w(&[4, -1]));

        let (vp, g) = dominant_representative(&c2, &w(&[3, 1]));
        assert_eq!(vp, w(&[3, 1]));
        assert_eq!(g, WeylElement::identity(2));
    }

    #[test]
    fn positive_system_counts() {
        let a1 = build_from_cartan_label("A1", 0).unwrap();
        assert_eq!(positive_systems_containing(&a1, &[]).unwrap().len(), 2);
        let c2 = build_from_cartan_label("C2", 0).unwrap();
        assert_eq!(positive_systems_containing(&c2, &[w(&[1, -1])]).unwrap().len(), 4);
        let all = c2.positive().to_vec();
        assert_eq!(positive_systems_containing(&c2, &all).unwrap().len(), 1);
    }

    proptest! {
        #[test]
        fn dominant_conjugate_round_trip(x in -9i64..10, y in -9i64..10, z in -9i64..10) {
            let d = build_from_cartan_label("B3", 0).unwrap();
            let v = w(&[x, y, z]);
            let (vp, g) = dominant_representative(&d, &v);
            prop_assert!(d.is_dominant(&vp));
            prop_assert_eq!(g.apply(&vp), v);
        }

        // sigma * gamma = gamma - (nonnegative combination of positive roots)
        #[test]
        fn orbit_lies_below_dominant(x in -6i64..7, y in -6i64..7) {
            let d = build_from_cartan_label("G2", 0).unwrap();
            let (gamma, _) = dominant_representative(&d, &w(&[x, y]));
            for s in weyl_group(&d).unwrap() {
                let e = &gamma - &s.apply(&gamma);
                prop_assert!(d.in_positive_cone(&e));
            }
        }
    }
}
