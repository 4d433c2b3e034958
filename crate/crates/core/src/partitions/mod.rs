//! Partitions, skew shapes and the ribbon combinatorics built on them.
//!
//! Cells are `(row, col)` pairs, both zero-based, with row 0 on top.

mod abacus;
mod border;
mod tiling;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) use tiling::classical_add_strips;
pub use abacus::{add_ribbons, from_core_quotient, n_core, n_quotient, remove_ribbons};
pub use border::{
    border_ribbon_strips_between, enumerate_border_ribbon_strips, BorderRibbonStrip,
};
pub use tiling::{
    add_horizontal_strips, add_vertical_strips, connected_components, horizontal_strip,
    horizontal_strip_spin, horizontal_strip_via_quotient, horizontal_strips, mspin, northern_tilings,
    remove_horizontal_strips, remove_vertical_strips, ribbon_tilings, vertical_strip_spin,
    HorizontalStrip, Ribbon,
};

pub type Cell = (usize, usize);

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1] && w[1] > 0) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds from parts already known to be weakly decreasing; trailing zeros are dropped.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Self(parts)
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row length, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Column length, zero past the first row.
    pub fn col_len(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p > j).count()
    }

    pub fn contains_cell(&self, (r, c): Cell) -> bool {
        c < self.part(r)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.col_len(j)).collect())
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
    }

    /// Cells that can be added keeping a partition.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 0..=self.len() {
            let c = self.part(r);
            if r == 0 || self.part(r - 1) > c {
                out.push((r, c));
            }
        }
        out
    }

    /// Cells whose removal leaves a partition.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 0..self.len() {
            let c = self.0[r];
            if self.part(r + 1) < c {
                out.push((r, c - 1));
            }
        }
        out
    }

    pub fn with_cell(&self, (r, c): Cell) -> Partition {
        let mut parts = self.0.clone();
        if r == parts.len() {
            parts.push(0);
        }
        debug_assert_eq!(parts[r], c);
        parts[r] += 1;
        Partition::from_sorted(parts)
    }

    pub fn without_cell(&self, (r, c): Cell) -> Partition {
        let mut parts = self.0.clone();
        debug_assert_eq!(parts[r], c + 1);
        parts[r] -= 1;
        Partition::from_sorted(parts)
    }

    /// Every part multiplied by `n`.
    pub fn scaled(&self, n: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * n).collect())
    }

    /// Multiplicity of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = Π_i i^{m_i} m_i!`.
    pub fn z(&self) -> num_bigint::BigInt {
        let mut z = num_bigint::BigInt::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for j in 1..=m {
                z *= i * j;
            }
        }
        z
    }

    /// All partitions of `d`, in decreasing lexicographic order.
    pub fn all(d: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(d, d, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `d`, by size then decreasing lex.
    pub fn up_to(d: usize) -> Vec<Partition> {
        (0..=d).flat_map(Partition::all).collect()
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(outer: &Partition, r: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if r == outer.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in 0..=cap.min(outer.0[r]) {
                cur.push(p);
                rec(outer, r + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(self, 0, usize::MAX, &mut cur, &mut out);
        out
    }

    /// `(7,6,4,3,1)` style, with `∅` for the empty partition.
    pub fn pretty(&self) -> String {
        if self.is_empty() {
            "∅".to_string()
        } else {
            format!("({self})")
        }
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `7,6,4,3,1`, optional surrounding parentheses, and `""`, `0`, `∅` for empty.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "∅" || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::ParsePartition(s.to_string(), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<&[usize]> for Partition {
    /// Panics on parts that are not weakly decreasing.
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("weakly decreasing parts")
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::from(&parts[..])
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The cells of `outer` not in `inner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.pretty(),
                inner: inner.pretty(),
            });
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells row by row, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.len())
            .flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Edge-connectedness of the cell set; the empty shape counts as connected.
    pub fn is_connected(&self) -> bool {
        connected_components(&self.cells()).len() <= 1
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer.pretty(), self.inner.pretty())
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `outer` or `outer/inner`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation() {
        assert_eq!(Partition::from([3, 1]).conjugate(), Partition::from([2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(
            Partition::from([7, 6, 4, 3, 1]).conjugate(),
            Partition::from([5, 4, 4, 3, 2, 2, 1])
        );
    }

    #[test]
    fn parsing() {
        assert_eq!("7,6,4,3,1".parse::<Partition>().unwrap(), Partition::from([7, 6, 4, 3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(2,1,0)".parse::<Partition>().unwrap(), Partition::from([2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        let s: SkewShape = "5,5,2/2".parse().unwrap();
        assert_eq!(s.size(), 10);
        assert!("2/3".parse::<SkewShape>().is_err());
    }

    #[test]
    fn counting() {
        let counts: Vec<usize> = (0..10).map(|d| Partition::all(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(Partition::from([2, 2, 1]).z(), 8.into());
        assert_eq!(Partition::from([3, 1]).subpartitions().len(), 7);
    }
}
