//! The Fock space: finitely supported vectors on partitions, with the
//! quantum affine action by `e_i`, `f_i`, `q^{h_i}`, `q^D` and the
//! Heisenberg operators in [`heisenberg`].

mod heisenberg;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::partitions::{Cell, Partition};
use crate::qcoeff::LaurentPoly;
use crate::ribbonfn::ribbon_function_straight;
use crate::symfunc::{Basis, SymFunc};

pub use heisenberg::{
    apply_b, apply_b_raising, apply_s, apply_s_via_characters, apply_u, apply_u_tilde, apply_v,
    apply_v_composition, apply_v_tilde,
};

#[derive(Clone, PartialEq, Eq)]
pub struct FockVector {
    n: usize,
    entries: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: BTreeMap::new() }
    }

    /// The basis vector `|λ⟩`.
    pub fn basis(n: usize, lambda: Partition) -> Self {
        let mut v = Self::zero(n);
        v.add_term(lambda, &LaurentPoly::one());
        v
    }

    /// The vacuum `|∅⟩`.
    pub fn vacuum(n: usize) -> Self {
        Self::basis(n, Partition::empty())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, LaurentPoly)>>(n: usize, it: I) -> Self {
        let mut v = Self::zero(n);
        for (l, c) in it {
            v.add_term(l, &c);
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &BTreeMap<Partition, LaurentPoly> {
        &self.entries
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&lambda);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(self.n, self.entries.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    /// Extends a map on basis vectors linearly.
    pub fn apply<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Partition) -> Vec<(Partition, LaurentPoly)>,
    {
        let mut out = Self::zero(self.n);
        for (l, c) in &self.entries {
            for (m, a) in f(l) {
                out.add_term(m, &(c * &a));
            }
        }
        out
    }
}

impl Add<&FockVector> for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        assert_eq!(self.n, rhs.n, "mixing Fock spaces of different levels");
        let mut out = self.clone();
        for (l, c) in &rhs.entries {
            out.add_term(l.clone(), c);
        }
        out
    }
}

impl Neg for &FockVector {
    type Output = FockVector;
    fn neg(self) -> FockVector {
        self.scale(&LaurentPoly::from_int(-1))
    }
}

impl Sub<&FockVector> for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        self + &(-rhs)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "|{}⟩", l.pretty())?;
            } else {
                write!(f, "({c})|{}⟩", l.pretty())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    part: Partition,
    poly: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct FockJson {
    n: usize,
    entries: Vec<EntryJson>,
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FockJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(l, c)| EntryJson { part: l.clone(), poly: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = FockJson::deserialize(d)?;
        Ok(FockVector::from_terms(j.n, j.entries.into_iter().map(|e| (e.part, e.poly))))
    }
}

/// `(row − col) mod n`.
pub fn residue((r, c): Cell, n: usize) -> usize {
    (r as i64 - c as i64).rem_euclid(n as i64) as usize
}

/// Addable cells of residue `i`.
pub fn indent_nodes(lambda: &Partition, i: usize, n: usize) -> Vec<Cell> {
    lambda.addable_cells().into_iter().filter(|&c| residue(c, n) == i).collect()
}

pub fn removable_nodes(lambda: &Partition, i: usize, n: usize) -> Vec<Cell> {
    lambda.removable_cells().into_iter().filter(|&c| residue(c, n) == i).collect()
}

/// Indent minus removable `i`-nodes of `lambda` on one side of column `col`.
/// Nodes beside the moving cell have residue `i ± 1`, so it does not matter
/// whether the counts are taken before or after the move.
fn side_count(lambda: &Partition, i: usize, n: usize, col: usize, right: bool) -> i64 {
    let on_side = |c: &Cell| if right { c.1 > col } else { c.1 < col };
    let ind = indent_nodes(lambda, i, n).iter().filter(|c| on_side(c)).count() as i64;
    let rem = removable_nodes(lambda, i, n).iter().filter(|c| on_side(c)).count() as i64;
    ind - rem
}

/// `N_i(λ)`: indent minus removable `i`-nodes.
pub fn weight_i(lambda: &Partition, i: usize, n: usize) -> i64 {
    indent_nodes(lambda, i, n).len() as i64 - removable_nodes(lambda, i, n).len() as i64
}

pub fn apply_f(i: usize, v: &FockVector) -> FockVector {
    let n = v.n;
    v.apply(|l| {
        indent_nodes(l, i, n)
            .into_iter()
            .map(|d| (l.with_cell(d), LaurentPoly::q_pow(side_count(l, i, n, d.1, true))))
            .collect()
    })
}

pub fn apply_e(i: usize, v: &FockVector) -> FockVector {
    let n = v.n;
    v.apply(|l| {
        removable_nodes(l, i, n)
            .into_iter()
            .map(|d| {
                let mu = l.without_cell(d);
                let e = -side_count(&mu, i, n, d.1, false);
                (mu, LaurentPoly::q_pow(e))
            })
            .collect()
    })
}

pub fn apply_qh(i: usize, v: &FockVector) -> FockVector {
    let n = v.n;
    v.apply(|l| vec![(l.clone(), LaurentPoly::q_pow(weight_i(l, i, n)))])
}

pub fn apply_qd(v: &FockVector) -> FockVector {
    let n = v.n;
    v.apply(|l| {
        let zeros = l.cells().filter(|&c| residue(c, n) == 0).count() as i64;
        vec![(l.clone(), LaurentPoly::q_pow(zeros))]
    })
}

/// Semilinear involution `|λ⟩ ↦ |λ'⟩`, `q ↦ q⁻¹`.
pub fn prime(v: &FockVector) -> FockVector {
    v.apply(|l| vec![(l.conjugate(), LaurentPoly::one())]).map_bar()
}

impl FockVector {
    fn map_bar(&self) -> Self {
        Self::from_terms(self.n, self.entries.iter().map(|(l, c)| (l.clone(), c.bar_q())))
    }
}

/// Semilinear projection `q ↦ −q⁻¹`, `|λ⟩ ↦ G_λ` onto symmetric functions.
pub fn phi(v: &FockVector) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Monomial);
    for (l, c) in &v.entries {
        let g = ribbon_function_straight(l, v.n);
        out = &out + &g.scale(&c.subst_neg_qinv());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [usize; N]) -> Partition {
        Partition::from(a)
    }

    fn poly<const N: usize>(t: [(i64, i64); N]) -> LaurentPoly {
        LaurentPoly::from_terms(t)
    }

    #[test]
    fn raising_by_f() {
        assert_eq!(apply_f(0, &FockVector::vacuum(2)), FockVector::basis(2, p([1])));
        let v = apply_f(1, &FockVector::basis(2, p([1])));
        assert_eq!(v, FockVector::from_terms(2, [(p([2]), LaurentPoly::one()), (p([1, 1]), LaurentPoly::q())]));
    }

    #[test]
    fn commutator_on_small_partitions() {
        for n in 2..=3 {
            for l in Partition::up_to(6) {
                let v = FockVector::basis(n, l.clone());
                for i in 0..n {
                    let lhs = &apply_e(i, &apply_f(i, &v)) - &apply_f(i, &apply_e(i, &v));
                    let rhs = v.scale(&LaurentPoly::quantum_int(weight_i(&l, i, n)));
                    assert_eq!(lhs, rhs, "n={n} i={i} λ={l}");
                    for j in 0..n {
                        if j != i {
                            let c = &apply_e(i, &apply_f(j, &v)) - &apply_f(j, &apply_e(i, &v));
                            assert!(c.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn prime_examples() {
        assert_eq!(prime(&FockVector::basis(2, p([2]))), FockVector::basis(2, p([1, 1])));
        let v = FockVector::vacuum(2).scale(&LaurentPoly::q());
        assert_eq!(prime(&v), FockVector::vacuum(2).scale(&LaurentPoly::q_pow(-1)));
    }

    #[test]
    fn phi_examples() {
        let g = phi(&FockVector::basis(2, p([2, 2])));
        assert_eq!(g, &SymFunc::h_k(2).scale(&LaurentPoly::q_pow(2)) + &SymFunc::e_k(2));
        let v = FockVector::from_terms(2, [(p([2]), LaurentPoly::one()), (p([1, 1]), poly([(-1, -1)]))]);
        assert_eq!(phi(&v), SymFunc::term(Basis::Schur, p([1]), poly([(0, 1), (2, 1)])));
    }

    #[test]
    fn json_shape() {
        let v = FockVector::from_terms(2, [(p([2]), LaurentPoly::one()), (p([1, 1]), poly([(-1, -1)]))]);
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["n"], 2);
        assert_eq!(j["entries"].as_array().unwrap().len(), 2);
        let back: FockVector = serde_json::from_value(j).unwrap();
        assert_eq!(back, v);
    }
}
