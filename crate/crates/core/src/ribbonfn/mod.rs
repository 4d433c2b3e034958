//! Semistandard ribbon tableaux and their spin generating functions.
//!
//! A tableau is stored as a chain of partitions whose consecutive differences
//! are horizontal ribbon strips; label `i` marks the ribbons of step `i`. The
//! tiling of each step is unique, so it is only materialized on request.

mod superfn;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::partitions::{
    add_vertical_strips, border_ribbon_strips_between, enumerate_border_ribbon_strips, horizontal_strip,
    horizontal_strips, n_core, Partition, Ribbon, SkewShape,
};
use crate::qcoeff::LaurentPoly;
use crate::symfunc::{Basis, SymFunc};

pub use superfn::{
    enumerate_super_tableaux, interleaved_order, super_g, Letter, SuperRibbonTableau, SuperTable,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RibbonTableau {
    pub n: usize,
    pub chain: Vec<Partition>,
    /// Ribbons carrying each label.
    pub weight: Vec<usize>,
    pub spin: usize,
}

impl RibbonTableau {
    pub fn shape(&self) -> SkewShape {
        SkewShape {
            outer: self.chain.last().unwrap().clone(),
            inner: self.chain[0].clone(),
        }
    }

    /// The ribbons with their labels (1-based), in chain order.
    pub fn ribbons(&self) -> Vec<(Ribbon, usize)> {
        let mut out = Vec::new();
        for (i, w) in self.chain.windows(2).enumerate() {
            let step = SkewShape { outer: w[1].clone(), inner: w[0].clone() };
            let tiling = horizontal_strip(&step, self.n).expect("chain step is a horizontal strip");
            out.extend(tiling.into_iter().map(|r| (r, i + 1)));
        }
        out
    }
}

fn num_ribbons(shape: &SkewShape, n: usize) -> Option<usize> {
    let cells = shape.size();
    cells.is_multiple_of(n).then_some(cells / n)
}

/// Every semistandard `n`-ribbon tableau of `shape` with labels in `1..=max_label`.
pub fn enumerate_tableaux(shape: &SkewShape, n: usize, max_label: usize) -> Vec<RibbonTableau> {
    let out = Vec::new();
    let Some(total) = num_ribbons(shape, n) else {
        return out;
    };
    let mut walk = Walk { outer: &shape.outer, n, chain: vec![shape.inner.clone()], weight: Vec::new(), out };
    walk.rec(max_label, total, 0);
    walk.out
}

struct Walk<'a> {
    outer: &'a Partition,
    n: usize,
    chain: Vec<Partition>,
    weight: Vec<usize>,
    out: Vec<RibbonTableau>,
}

impl Walk<'_> {
    fn rec(&mut self, labels_left: usize, left: usize, spin: usize) {
        if labels_left == 0 {
            if left == 0 {
                self.out.push(RibbonTableau {
                    n: self.n,
                    chain: self.chain.clone(),
                    weight: self.weight.clone(),
                    spin,
                });
            }
            return;
        }
        let cur = self.chain.last().unwrap().clone();
        for k in 0..=left {
            for strip in horizontal_strips(&cur, self.n, k).iter() {
                if !self.outer.contains(&strip.outer) {
                    continue;
                }
                self.chain.push(strip.outer.clone());
                self.weight.push(k);
                self.rec(labels_left - 1, left - k, spin + strip.spin);
                self.chain.pop();
                self.weight.pop();
            }
        }
    }
}

/// Spin generating function of the tableaux of `shape` with weight `alpha`.
pub fn k_poly(shape: &SkewShape, n: usize, alpha: &[usize]) -> LaurentPoly {
    if num_ribbons(shape, n) != Some(alpha.iter().sum()) {
        return LaurentPoly::zero();
    }
    let mut states: BTreeMap<Partition, LaurentPoly> = BTreeMap::from([(shape.inner.clone(), LaurentPoly::one())]);
    for &k in alpha {
        let mut next: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
        for (p, c) in &states {
            for strip in horizontal_strips(p, n, k).iter() {
                if shape.outer.contains(&strip.outer) {
                    *next.entry(strip.outer.clone()).or_default() += &c.shift(strip.spin as i64);
                }
            }
        }
        states = next;
    }
    states.remove(&shape.outer).unwrap_or_default()
}

/// The same for column-semistandard tableaux, where every step is a vertical
/// strip. Computed on the conjugate shape with the spin complemented.
pub fn l_poly(shape: &SkewShape, n: usize, alpha: &[usize]) -> LaurentPoly {
    let d: usize = alpha.iter().sum();
    k_poly(&shape.conjugate(), n, alpha).bar_q().shift(((n - 1) * d) as i64)
}

/// Direct enumeration of `l_poly` by chains of vertical strips.
pub fn l_poly_direct(shape: &SkewShape, n: usize, alpha: &[usize]) -> LaurentPoly {
    if num_ribbons(shape, n) != Some(alpha.iter().sum()) {
        return LaurentPoly::zero();
    }
    let mut states: BTreeMap<Partition, LaurentPoly> = BTreeMap::from([(shape.inner.clone(), LaurentPoly::one())]);
    for &k in alpha {
        let mut next: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
        for (p, c) in &states {
            for (q, s) in add_vertical_strips(p, n, k) {
                if shape.outer.contains(&q) {
                    *next.entry(q).or_default() += &c.shift(s as i64);
                }
            }
        }
        states = next;
    }
    states.remove(&shape.outer).unwrap_or_default()
}

/// The ribbon function of a skew shape, in the monomial basis.
pub fn ribbon_function(shape: &SkewShape, n: usize) -> SymFunc {
    let Some(d) = num_ribbons(shape, n) else {
        return SymFunc::zero(Basis::Monomial);
    };
    SymFunc::from_terms(
        Basis::Monomial,
        Partition::all(d).into_iter().map(|a| {
            let c = k_poly(shape, n, a.parts());
            (a, c)
        }),
    )
}

/// The ribbon function of `lambda` over its own `n`-core.
pub fn ribbon_function_straight(lambda: &Partition, n: usize) -> SymFunc {
    ribbon_function(&SkewShape { outer: lambda.clone(), inner: n_core(lambda, n) }, n)
}

/// Schur coefficients of the ribbon function.
pub fn q_lr(shape: &SkewShape, n: usize) -> BTreeMap<Partition, LaurentPoly> {
    ribbon_function(shape, n).convert(Basis::Schur).coeffs().clone()
}

/// Signed spin sum over chains of border ribbon strips with `type_` ribbons per step.
pub fn x_poly(shape: &SkewShape, n: usize, type_: &[usize]) -> LaurentPoly {
    let steps: Vec<usize> = type_.iter().copied().filter(|&k| k > 0).collect();
    if num_ribbons(shape, n) != Some(steps.iter().sum()) {
        return LaurentPoly::zero();
    }
    if steps.is_empty() {
        return if shape.inner == shape.outer { LaurentPoly::one() } else { LaurentPoly::zero() };
    }
    let mut states: BTreeMap<Partition, LaurentPoly> = BTreeMap::from([(shape.inner.clone(), LaurentPoly::one())]);
    let init = &steps[..steps.len() - 1];
    for &k in init {
        let mut next: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
        for (p, c) in &states {
            for b in enumerate_border_ribbon_strips(p, n, k) {
                if shape.outer.contains(&b.outer) {
                    *next.entry(b.outer.clone()).or_default() += &(c * &b.weight());
                }
            }
        }
        states = next;
    }
    let mut total = LaurentPoly::zero();
    for (p, c) in &states {
        let x: LaurentPoly = border_ribbon_strips_between(p, &shape.outer, n).iter().map(|b| b.weight()).sum();
        total += &(c * &x);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [usize; N]) -> Partition {
        Partition::from(a)
    }

    fn straight<const N: usize>(a: [usize; N]) -> SkewShape {
        SkewShape::straight(p(a))
    }

    fn poly<const N: usize>(t: [(i64, i64); N]) -> LaurentPoly {
        LaurentPoly::from_terms(t)
    }

    #[test]
    fn domino_square_tableaux() {
        let ts = enumerate_tableaux(&straight([2, 2]), 2, 2);
        let mut got: Vec<(Vec<usize>, usize)> = ts.iter().map(|t| (t.weight.clone(), t.spin)).collect();
        got.sort();
        assert_eq!(got, vec![(vec![0, 2], 2), (vec![1, 1], 0), (vec![1, 1], 2), (vec![2, 0], 2)]);
        let empty = enumerate_tableaux(&straight([]), 3, 4);
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].spin, 0);
    }

    #[test]
    fn running_example_has_a_spin_seven_tableau() {
        let ts = enumerate_tableaux(&straight([7, 6, 4, 3, 1]), 3, 4);
        assert!(ts.iter().any(|t| t.weight == vec![2, 1, 3, 1] && t.spin == 7));
        let t = ts.iter().find(|t| t.weight == vec![2, 1, 3, 1]).unwrap();
        assert_eq!(t.ribbons().len(), 7);
    }

    #[test]
    fn k_and_l_values() {
        assert_eq!(k_poly(&straight([2, 2]), 2, &[1, 1]), poly([(0, 1), (2, 1)]));
        assert_eq!(k_poly(&straight([2, 2]), 2, &[2]), LaurentPoly::q_pow(2));
        assert_eq!(k_poly(&straight([4]), 2, &[1, 1]), LaurentPoly::one());
        assert_eq!(l_poly(&straight([2, 2]), 2, &[1, 1]), poly([(0, 1), (2, 1)]));
        assert_eq!(l_poly(&straight([1, 1]), 2, &[1]), LaurentPoly::q());
        assert_eq!(l_poly(&straight([2]), 2, &[1]), LaurentPoly::one());
    }

    #[test]
    fn small_ribbon_functions() {
        let h2 = SymFunc::h_k(2);
        let e2 = SymFunc::e_k(2);
        let g = |a: [usize; 4]| ribbon_function_straight(&Partition::from_unsorted(a.to_vec()), 2);
        assert_eq!(g([4, 0, 0, 0]), h2);
        assert_eq!(g([3, 1, 0, 0]), h2.scale(&LaurentPoly::q()));
        assert_eq!(g([2, 1, 1, 0]), e2.scale(&LaurentPoly::q()));
        assert_eq!(g([2, 2, 0, 0]), &h2.scale(&LaurentPoly::q_pow(2)) + &e2);
        assert_eq!(g([1, 1, 1, 1]), e2.scale(&LaurentPoly::q_pow(2)));
    }

    #[test]
    fn lr_tables() {
        let t = q_lr(&straight([2, 2]), 2);
        assert_eq!(t, BTreeMap::from([(p([2]), LaurentPoly::q_pow(2)), (p([1, 1]), LaurentPoly::one())]));
        assert_eq!(q_lr(&straight([4]), 2), BTreeMap::from([(p([2]), LaurentPoly::one())]));
        assert_eq!(q_lr(&straight([1, 1, 1, 1]), 2), BTreeMap::from([(p([1, 1]), LaurentPoly::q_pow(2))]));
    }

    #[test]
    fn border_strip_sums() {
        let shape = SkewShape::new(p([5, 5, 2]), p([2])).unwrap();
        assert_eq!(x_poly(&shape, 2, &[5]), poly([(5, 1), (3, -2), (1, 1)]));
        assert_eq!(x_poly(&straight([2]), 2, &[1]), LaurentPoly::one());
        assert_eq!(x_poly(&straight([1, 1]), 2, &[1]), LaurentPoly::q());
    }
}
