//! Symmetric functions with Laurent-polynomial coefficients.
//!
//! An element is a sparse map from partitions to coefficients in one of the
//! five classical bases. Mixed degrees live side by side in the same map since
//! each key carries its own degree; conversions work degree by degree through
//! cached transition tables.

mod ops;
mod tables;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partitions::{classical_add_strips as pieri_add, Partition};
use crate::qcoeff::{LaurentPoly, Rational};

pub use ops::{bar_lambda, bold_e, bold_h, hall_inner, inner_n, omega_n, perp, specialize, upsilon};
pub use tables::{character_value, kostka_number};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial = 0,
    Homogeneous = 1,
    Elementary = 2,
    PowerSum = 3,
    Schur = 4,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::Homogeneous,
        Basis::Elementary,
        Basis::PowerSum,
        Basis::Schur,
    ];

    fn letter(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Homogeneous => "h",
            Basis::Elementary => "e",
            Basis::PowerSum => "p",
            Basis::Schur => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Basis::Monomial => "monomial",
            Basis::Homogeneous => "homogeneous",
            Basis::Elementary => "elementary",
            Basis::PowerSum => "powersum",
            Basis::Schur => "schur",
        };
        f.write_str(name)
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" | "monomial" => Ok(Basis::Monomial),
            "h" | "homogeneous" => Ok(Basis::Homogeneous),
            "e" | "elementary" => Ok(Basis::Elementary),
            "p" | "powersum" | "power" => Ok(Basis::PowerSum),
            "s" | "schur" => Ok(Basis::Schur),
            other => Err(Error::Invalid(format!("unknown basis '{other}'"))),
        }
    }
}

#[derive(Clone)]
pub struct SymFunc {
    basis: Basis,
    coeffs: BTreeMap<Partition, LaurentPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        Self { basis, coeffs: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::element(basis, Partition::empty())
    }

    /// A single basis element.
    pub fn element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, LaurentPoly::one())
    }

    pub fn term(basis: Basis, lambda: Partition, c: LaurentPoly) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, &c);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, LaurentPoly)>>(basis: Basis, it: I) -> Self {
        let mut f = Self::zero(basis);
        for (l, c) in it {
            f.add_term(l, &c);
        }
        f
    }

    pub fn s(lambda: Partition) -> Self {
        Self::element(Basis::Schur, lambda)
    }

    pub fn m(lambda: Partition) -> Self {
        Self::element(Basis::Monomial, lambda)
    }

    pub fn p(lambda: Partition) -> Self {
        Self::element(Basis::PowerSum, lambda)
    }

    pub fn h(lambda: Partition) -> Self {
        Self::element(Basis::Homogeneous, lambda)
    }

    pub fn e(lambda: Partition) -> Self {
        Self::element(Basis::Elementary, lambda)
    }

    /// `h_k`, with `h_0 = 1`.
    pub fn h_k(k: usize) -> Self {
        Self::h(single_row(k))
    }

    pub fn e_k(k: usize) -> Self {
        Self::e(single_row(k))
    }

    pub fn p_k(k: usize) -> Self {
        Self::p(single_row(k))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, LaurentPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map_coeffs(|_, v| v * c)
    }

    /// Applies `f` to every coefficient, dropping any that become zero.
    pub fn map_coeffs<F: FnMut(&Partition, &LaurentPoly) -> LaurentPoly>(&self, mut f: F) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(l, c)| (l.clone(), f(l, c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { basis: self.basis, coeffs }
    }

    /// Degrees carrying a nonzero component.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.coeffs.keys().map(|l| l.size()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn component(&self, d: usize) -> Self {
        let coeffs = self.coeffs.iter().filter(|(l, _)| l.size() == d).map(|(l, c)| (l.clone(), c.clone())).collect();
        Self { basis: self.basis, coeffs }
    }

    pub fn convert(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(target);
        let mut acc: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
        for (lambda, c) in &self.coeffs {
            let t = tables::tables(lambda.size());
            let m = t.transition(self.basis, target);
            for (j, a) in &m[t.index[lambda]] {
                *acc.entry(t.parts[*j].clone()).or_default() += &c.scale(a);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        out.coeffs = acc;
        out
    }

    /// Product computed through power sums, expressed in `self`'s basis.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let a = self.convert(Basis::PowerSum);
        let b = other.convert(Basis::PowerSum);
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (l1, c1) in &a.coeffs {
            for (l2, c2) in &b.coeffs {
                let parts: Vec<usize> = l1.parts().iter().chain(l2.parts()).copied().collect();
                out.add_term(Partition::from_unsorted(parts), &(c1 * c2));
            }
        }
        out.convert(self.basis)
    }

    /// Product by iterated Pieri additions on Schur functions, with `other`
    /// expanded in complete homogeneous functions. Independent of the
    /// character tables and used to cross-check [`SymFunc::mul`].
    pub fn mul_via_pieri(&self, other: &SymFunc) -> SymFunc {
        let a = self.convert(Basis::Schur);
        let b = other.convert(Basis::Homogeneous);
        let mut out = SymFunc::zero(Basis::Schur);
        for (rho, c2) in &b.coeffs {
            let mut states: BTreeMap<Partition, LaurentPoly> = a.coeffs.clone();
            for &k in rho.parts() {
                let mut next: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
                for (p, c) in &states {
                    for q in pieri_add(p, k) {
                        *next.entry(q).or_default() += c;
                    }
                }
                states = next;
            }
            for (l, c) in states {
                out.add_term(l, &(&c * c2));
            }
        }
        out.convert(self.basis)
    }

    /// Keeps only what survives in `vars` variables, in the monomial basis.
    pub fn restrict_vars(&self, vars: usize) -> SymFunc {
        let m = self.convert(Basis::Monomial);
        let coeffs = m.coeffs.into_iter().filter(|(l, _)| l.len() <= vars).collect();
        SymFunc { basis: Basis::Monomial, coeffs }
    }

    /// Total order of terms used for display and JSON.
    fn sorted_terms(&self) -> Vec<(&Partition, &LaurentPoly)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).reverse().then(b.0.cmp(a.0)));
        v
    }
}

fn single_row(k: usize) -> Partition {
    if k == 0 {
        Partition::empty()
    } else {
        Partition::from([k])
    }
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.convert(self.basis).coeffs
    }
}

impl Eq for SymFunc {}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in rhs.convert(self.basis).coeffs {
            out.add_term(l, &c);
        }
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|_, c| -c)
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        SymFunc::mul(self, rhs)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in terms.into_iter().enumerate() {
            let mut cs = c.to_string();
            let negative = cs.starts_with('-') && c.num_terms() == 1;
            if negative {
                cs.remove(0);
                cs = cs.trim_start().to_string();
            }
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let elem = format!("{}({})", self.basis.letter(), l);
            if l.is_empty() {
                write!(f, "{}", if c.num_terms() > 1 { format!("({cs})") } else { cs })?;
            } else if cs == "1" {
                f.write_str(&elem)?;
            } else if c.num_terms() > 1 {
                write!(f, "({cs})·{elem}")?;
            } else {
                write!(f, "{cs}·{elem}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    part: Partition,
    poly: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    coeffs: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis,
            coeffs: self
                .sorted_terms()
                .into_iter()
                .map(|(l, c)| TermJson { part: l.clone(), poly: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = SymFuncJson::deserialize(d)?;
        Ok(SymFunc::from_terms(j.basis, j.coeffs.into_iter().map(|t| (t.part, t.poly))))
    }
}

/// `z_λ` as a rational.
pub(crate) fn z_rat(lambda: &Partition) -> Rational {
    Rational::from_integer(lambda.z())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [usize; N]) -> Partition {
        Partition::from(a)
    }

    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::from_int(n)
    }

    #[test]
    fn small_conversions() {
        let s2 = SymFunc::s(p([2])).convert(Basis::Monomial);
        assert_eq!(s2.coeffs().len(), 2);
        assert_eq!(s2.coeff(&p([2])), c(1));
        assert_eq!(s2.coeff(&p([1, 1])), c(1));
        assert_eq!(SymFunc::h(p([2])).convert(Basis::Schur), SymFunc::s(p([2])));
        let p2 = SymFunc::p(p([2])).convert(Basis::Schur);
        assert_eq!(p2.coeff(&p([2])), c(1));
        assert_eq!(p2.coeff(&p([1, 1])), c(-1));
    }

    #[test]
    fn round_trips() {
        for d in 0..=6 {
            for l in Partition::all(d) {
                for b in Basis::ALL {
                    let f = SymFunc::element(b, l.clone());
                    for t in Basis::ALL {
                        let back = f.convert(t).convert(b);
                        assert_eq!(back.coeffs(), f.coeffs(), "{b} -> {t} on {l}");
                    }
                }
            }
        }
    }

    #[test]
    fn products() {
        let p1 = SymFunc::p_k(1);
        assert_eq!(p1.mul(&p1).coeffs(), SymFunc::p(p([1, 1])).coeffs());
        let s1 = SymFunc::s(p([1]));
        let sq = s1.mul(&s1);
        assert_eq!(sq, &SymFunc::s(p([2])) + &SymFunc::s(p([1, 1])));
        let f = SymFunc::h(p([2])).mul(&SymFunc::e(p([1]))).convert(Basis::Schur);
        assert_eq!(f, SymFunc::h(p([2])).mul_via_pieri(&SymFunc::e(p([1]))));
    }

    #[test]
    fn json_shape() {
        let f = SymFunc::term(Basis::Schur, p([2, 1]), LaurentPoly::q());
        let j = serde_json::to_value(&f).unwrap();
        assert_eq!(j["basis"], "schur");
        assert_eq!(j["coeffs"][0]["part"], "2,1");
        let back: SymFunc = serde_json::from_value(j).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn display() {
        let f = &SymFunc::s(p([2])) - &SymFunc::s(p([1, 1]));
        assert_eq!(f.to_string(), "s(2) - s(1,1)");
    }
}
