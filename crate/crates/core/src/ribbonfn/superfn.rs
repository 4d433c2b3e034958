//! Super ribbon functions: tableaux over two ordered alphabets, where the
//! unprimed labels fill horizontal ribbon strips and the primed labels fill
//! vertical ones.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::partitions::{add_vertical_strips, horizontal_strips, Partition, SkewShape};
use crate::qcoeff::LaurentPoly;

/// A label, 1-based within its alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Unprimed(usize),
    Primed(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Unprimed(i) => write!(f, "{i}"),
            Letter::Primed(i) => write!(f, "{i}'"),
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `1 < 1' < 2 < 2' < ⋯`, with the longer alphabet's surplus at the end.
pub fn interleaved_order(unprimed: usize, primed: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity(unprimed + primed);
    for i in 1..=unprimed.max(primed) {
        if i <= unprimed {
            out.push(Letter::Unprimed(i));
        }
        if i <= primed {
            out.push(Letter::Primed(i));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperRibbonTableau {
    pub n: usize,
    /// `chain[i + 1] / chain[i]` carries label `letters[i]`.
    pub chain: Vec<Partition>,
    pub letters: Vec<Letter>,
    pub x_weight: Vec<usize>,
    pub y_weight: Vec<usize>,
    pub spin: usize,
}

/// Every super tableau of `shape` over the labels of `order`, read in that order.
pub fn enumerate_super_tableaux(shape: &SkewShape, n: usize, order: &[Letter]) -> Vec<SuperRibbonTableau> {
    let cells = shape.size();
    if !cells.is_multiple_of(n) {
        return Vec::new();
    }
    let unprimed = order.iter().filter(|l| matches!(l, Letter::Unprimed(_))).count();
    let primed = order.len() - unprimed;
    let mut s = SuperWalk {
        n,
        outer: &shape.outer,
        order,
        chain: vec![shape.inner.clone()],
        x: vec![0; unprimed],
        y: vec![0; primed],
        out: Vec::new(),
    };
    s.rec(0, cells / n, 0);
    s.out
}

struct SuperWalk<'a> {
    n: usize,
    outer: &'a Partition,
    order: &'a [Letter],
    chain: Vec<Partition>,
    x: Vec<usize>,
    y: Vec<usize>,
    out: Vec<SuperRibbonTableau>,
}

impl SuperWalk<'_> {
    fn rec(&mut self, step: usize, left: usize, spin: usize) {
        if step == self.order.len() {
            if left == 0 {
                self.out.push(SuperRibbonTableau {
                    n: self.n,
                    chain: self.chain.clone(),
                    letters: self.order.to_vec(),
                    x_weight: self.x.clone(),
                    y_weight: self.y.clone(),
                    spin,
                });
            }
            return;
        }
        let cur = self.chain.last().unwrap().clone();
        let letter = self.order[step];
        for k in 0..=left {
            let moves: Vec<(Partition, usize)> = match letter {
                Letter::Unprimed(_) => horizontal_strips(&cur, self.n, k)
                    .iter()
                    .map(|s| (s.outer.clone(), s.spin))
                    .collect(),
                Letter::Primed(_) => add_vertical_strips(&cur, self.n, k),
            };
            for (next, s) in moves {
                if !self.outer.contains(&next) {
                    continue;
                }
                let slot = match letter {
                    Letter::Unprimed(i) => &mut self.x[i - 1],
                    Letter::Primed(i) => &mut self.y[i - 1],
                };
                *slot = k;
                self.chain.push(next);
                self.rec(step + 1, left - k, spin + s);
                self.chain.pop();
            }
        }
    }
}

/// Coefficients of `x^α y^β` in a super ribbon function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperTable {
    pub n: usize,
    pub unprimed: usize,
    pub primed: usize,
    pub coeffs: BTreeMap<(Vec<usize>, Vec<usize>), LaurentPoly>,
}

impl SuperTable {
    pub fn coeff(&self, alpha: &[usize], beta: &[usize]) -> LaurentPoly {
        self.coeffs.get(&(alpha.to_vec(), beta.to_vec())).cloned().unwrap_or_default()
    }

    /// Whether every coefficient is unchanged by sorting `α` and `β` separately.
    pub fn is_bisymmetric(&self) -> bool {
        self.coeffs.iter().all(|((a, b), c)| {
            let mut sa = a.clone();
            let mut sb = b.clone();
            sa.sort_unstable_by(|x, y| y.cmp(x));
            sb.sort_unstable_by(|x, y| y.cmp(x));
            self.coeff(&sa, &sb) == *c
        }) && self.coeffs.keys().all(|(a, b)| {
            // Every rearrangement must also be present.
            let mut sa = a.clone();
            let mut sb = b.clone();
            sa.sort_unstable_by(|x, y| y.cmp(x));
            sb.sort_unstable_by(|x, y| y.cmp(x));
            self.coeffs.contains_key(&(sa, sb))
        })
    }
}

impl Serialize for SuperTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            x: &'a [usize],
            y: &'a [usize],
            poly: &'a LaurentPoly,
        }
        let rows: Vec<Row> = self.coeffs.iter().map(|((x, y), poly)| Row { x, y, poly }).collect();
        rows.serialize(s)
    }
}

/// The super ribbon function of `shape` in `unprimed` + `primed` variables.
/// `order` defaults to [`interleaved_order`].
pub fn super_g(shape: &SkewShape, n: usize, unprimed: usize, primed: usize, order: Option<&[Letter]>) -> SuperTable {
    let default = interleaved_order(unprimed, primed);
    let order = order.unwrap_or(&default);
    let mut coeffs: BTreeMap<(Vec<usize>, Vec<usize>), LaurentPoly> = BTreeMap::new();
    for t in enumerate_super_tableaux(shape, n, order) {
        *coeffs.entry((t.x_weight, t.y_weight)).or_default() += &LaurentPoly::q_pow(t.spin as i64);
    }
    SuperTable { n, unprimed, primed, coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_dominoes() {
        // One domino is both a horizontal and a vertical strip.
        let h = super_g(&SkewShape::straight(Partition::from([2])), 2, 1, 1, None);
        assert_eq!(h.coeff(&[1], &[0]), LaurentPoly::one());
        assert_eq!(h.coeff(&[0], &[1]), LaurentPoly::one());
        let v = super_g(&SkewShape::straight(Partition::from([1, 1])), 2, 1, 1, None);
        assert_eq!(v.coeff(&[0], &[1]), LaurentPoly::q());
        assert_eq!(v.coeff(&[1], &[0]), LaurentPoly::q());
    }

    #[test]
    fn square_is_bisymmetric() {
        let t = super_g(&SkewShape::straight(Partition::from([2, 2])), 2, 2, 2, None);
        assert!(t.is_bisymmetric());
        assert_eq!(interleaved_order(2, 1), vec![Letter::Unprimed(1), Letter::Primed(1), Letter::Unprimed(2)]);
    }
}
