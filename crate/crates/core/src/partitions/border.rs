//! Border ribbon strips: connected shapes with a layered tiling by horizontal
//! ribbon strips, where each later layer hangs off the one before it.
//!
//! A component of a new layer is admissible when, reading its ribbons left to
//! right, the rightmost ribbon is the only one whose head sits directly under
//! a cell of the previous layer. The head test is what decides whether the
//! union with the previous layer, tiled as given, fails to be a horizontal
//! strip.

use std::collections::HashSet;

use super::tiling::{connected_components, horizontal_strips, HorizontalStrip};
use super::{Cell, Partition, SkewShape};
use crate::qcoeff::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderRibbonStrip {
    pub inner: Partition,
    pub outer: Partition,
    pub layers: Vec<HorizontalStrip>,
    pub height: usize,
    pub spin: usize,
}

impl BorderRibbonStrip {
    pub fn shape(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.clone(),
            inner: self.inner.clone(),
        }
    }

    pub fn num_ribbons(&self) -> usize {
        self.layers.iter().map(|l| l.ribbons.len()).sum()
    }

    /// `(−1)^height · q^spin`.
    pub fn weight(&self) -> LaurentPoly {
        let sign = if self.height.is_multiple_of(2) { 1 } else { -1 };
        LaurentPoly::from_terms([(self.spin as i64, sign)])
    }
}

/// Number of admissible components of `layer` hung below `prev`, or `None`
/// if some component is not admissible.
fn admissible_components(prev: &HorizontalStrip, layer: &HorizontalStrip) -> Option<usize> {
    let above: HashSet<Cell> = prev.ribbons.iter().flat_map(|r| r.cells.iter().copied()).collect();
    let cells: Vec<Cell> = layer.ribbons.iter().flat_map(|r| r.cells.iter().copied()).collect();
    let comps = connected_components(&cells);
    for comp in &comps {
        let members: HashSet<Cell> = comp.iter().copied().collect();
        // `layer.ribbons` is sorted by head column, so this keeps left-to-right order.
        let touching: Vec<bool> = layer
            .ribbons
            .iter()
            .filter(|r| members.contains(&r.head()))
            .map(|r| {
                let (row, col) = r.head();
                row > 0 && above.contains(&(row - 1, col))
            })
            .collect();
        let (last, rest) = touching.split_last()?;
        if !*last || rest.iter().any(|&t| t) {
            return None;
        }
    }
    Some(comps.len())
}

fn is_connected(strip: &HorizontalStrip) -> bool {
    let cells: Vec<Cell> = strip.ribbons.iter().flat_map(|r| r.cells.iter().copied()).collect();
    connected_components(&cells).len() == 1
}

struct Search<'a> {
    n: usize,
    bound: Option<&'a Partition>,
    out: Vec<BorderRibbonStrip>,
}

impl Search<'_> {
    fn fits(&self, p: &Partition) -> bool {
        self.bound.is_none_or(|b| b.contains(p))
    }

    fn grow(&mut self, inner: &Partition, layers: &mut Vec<HorizontalStrip>, comps: usize, left: usize) {
        let current = layers.last().unwrap().outer.clone();
        if left == 0 {
            if self.bound.is_none_or(|b| *b == current) {
                self.out.push(BorderRibbonStrip {
                    inner: inner.clone(),
                    outer: current,
                    height: comps - 1,
                    spin: layers.iter().map(|l| l.spin).sum(),
                    layers: layers.clone(),
                });
            }
            return;
        }
        for j in 1..=left {
            for strip in horizontal_strips(&current, self.n, j).iter() {
                if !self.fits(&strip.outer) {
                    continue;
                }
                if let Some(c) = admissible_components(layers.last().unwrap(), strip) {
                    layers.push(strip.clone());
                    self.grow(inner, layers, comps + c, left - j);
                    layers.pop();
                }
            }
        }
    }

    fn run(&mut self, inner: &Partition, k: usize) {
        for j in 1..=k {
            for strip in horizontal_strips(inner, self.n, j).iter() {
                if self.fits(&strip.outer) && is_connected(strip) {
                    let mut layers = vec![strip.clone()];
                    self.grow(inner, &mut layers, 1, k - j);
                }
            }
        }
    }

    fn finish(mut self) -> Vec<BorderRibbonStrip> {
        // Stable sort keeps layer-construction order within a shape.
        self.out.sort_by(|a, b| a.outer.cmp(&b.outer));
        self.out
    }
}

/// Every border ribbon strip of `k` ribbons on top of `lambda`, one entry per
/// layered tiling.
pub fn enumerate_border_ribbon_strips(lambda: &Partition, n: usize, k: usize) -> Vec<BorderRibbonStrip> {
    let mut s = Search { n, bound: None, out: Vec::new() };
    if k > 0 {
        s.run(lambda, k);
    }
    s.finish()
}

/// Every layered tiling of `outer/inner` as a border ribbon strip.
pub fn border_ribbon_strips_between(inner: &Partition, outer: &Partition, n: usize) -> Vec<BorderRibbonStrip> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    let cells = outer.size() - inner.size();
    if cells == 0 || !cells.is_multiple_of(n) {
        return Vec::new();
    }
    let mut s = Search { n, bound: Some(outer), out: Vec::new() };
    s.run(inner, cells / n);
    s.finish()
}
