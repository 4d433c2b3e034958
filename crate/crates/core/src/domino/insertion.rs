//! Semistandard domino insertion and its reverse.
//!
//! Within a label, dominoes are standardized left to right. A new domino of
//! label `j` ranks after every existing `j` when horizontal and before every
//! one when vertical; standard insertion then runs on the refined order.

use std::collections::BTreeSet;

use super::{ColoredBiword, Domino, DominoTableau, Triple};
use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};

/// Refined order on dominoes: label first, then position within the label.
type Key = (usize, i64);

fn standardized(t: &DominoTableau) -> Vec<(Key, Domino)> {
    let mut out = Vec::with_capacity(t.dominoes.len());
    let mut prev = None;
    let mut sub = 0i64;
    for &(l, d) in &t.dominoes {
        sub = if prev == Some(l) { sub + 1 } else { 0 };
        prev = Some(l);
        out.push(((l, sub), d));
    }
    out
}

/// Row lengths of a cell set known to form a partition.
struct Shape {
    cells: BTreeSet<Cell>,
}

impl Shape {
    fn new(core: &Partition) -> Self {
        Self { cells: core.cells().collect() }
    }

    fn row_len(&self, r: usize) -> usize {
        (0..).take_while(|&c| self.cells.contains(&(r, c))).count()
    }

    fn col_len(&self, c: usize) -> usize {
        (0..).take_while(|&r| self.cells.contains(&(r, c))).count()
    }

    fn add(&mut self, d: Domino) {
        self.cells.extend(d.cells());
    }

    fn overlap(&self, d: Domino) -> Vec<Cell> {
        d.cells().into_iter().filter(|c| self.cells.contains(c)).collect()
    }
}

fn initial(shape: &Shape, c: u8) -> Domino {
    if c == 0 {
        Domino::horizontal(0, shape.row_len(0))
    } else {
        Domino::vertical(shape.col_len(0), 0)
    }
}

/// The cells `d` covers after replacing `from` by `to`.
fn shifted(d: Domino, from: Cell, to: Cell) -> Domino {
    let [a, b] = d.cells();
    let keep = if a == from { b } else { a };
    Domino::from_cells(keep, to).expect("shift keeps dominoes connected")
}

pub(super) fn insert(t: &DominoTableau, c: u8, j: usize) -> DominoTableau {
    assert!(c <= 1 && j >= 1, "color must be 0 or 1 and labels start at 1");
    let x: Key = (j, if c == 0 { i64::MAX } else { i64::MIN });
    let std = standardized(t);
    let mut shape = Shape::new(&t.core);
    let mut out: Vec<(usize, Domino)> = Vec::with_capacity(std.len() + 1);
    for &(k, d) in std.iter().filter(|(k, _)| *k < x) {
        shape.add(d);
        out.push((k.0, d));
    }
    let new = initial(&shape, c);
    shape.add(new);
    out.push((j, new));
    for &(k, g) in std.iter().filter(|(k, _)| *k > x) {
        let hit = shape.overlap(g);
        let placed = match hit.len() {
            0 => g,
            2 if g.vertical => Domino::vertical(shape.col_len(g.col + 1), g.col + 1),
            2 => Domino::horizontal(g.row + 1, shape.row_len(g.row + 1)),
            _ => {
                let (l, m) = hit[0];
                shifted(g, (l, m), (l + 1, m + 1))
            }
        };
        shape.add(placed);
        out.push((k.0, placed));
    }
    DominoTableau::from_parts_unchecked(t.core.clone(), out)
}

/// Undoes one insertion whose final domino is `last`, returning the smaller
/// tableau and the inserted `(color, label)`.
fn uninsert(t: &DominoTableau, last: Domino) -> Result<(DominoTableau, u8, usize)> {
    let std = standardized(t);
    let mut hole: Vec<Cell> = last.cells().to_vec();
    let mut restored: Vec<(usize, Domino)> = Vec::new();
    for (idx, &((label, _), d)) in std.iter().enumerate().rev() {
        let cells = d.cells();
        let hit: Vec<Cell> = cells.iter().copied().filter(|c| hole.contains(c)).collect();
        match hit.len() {
            0 => restored.push((label, d)),
            2 => {
                let origin = (d.vertical && d.col == 0) || (!d.vertical && d.row == 0);
                if origin {
                    let mut rest: Vec<(usize, Domino)> = std[..idx].iter().map(|&((l, _), d)| (l, d)).collect();
                    rest.extend(restored);
                    return Ok((DominoTableau::from_parts_unchecked(t.core.clone(), rest), d.color(), label));
                }
                // Bumped from the end of the previous row or column.
                let mut shape = Shape::new(&t.core);
                for &(_, e) in &std[..idx] {
                    shape.add(e);
                }
                let g = if d.vertical {
                    let m = d.col - 1;
                    let len = shape.col_len(m);
                    if len < 2 {
                        return Err(Error::TableauPair("no column to unbump into".into()));
                    }
                    Domino::vertical(len - 2, m)
                } else {
                    let r = d.row - 1;
                    let len = shape.row_len(r);
                    if len < 2 {
                        return Err(Error::TableauPair("no row to unbump into".into()));
                    }
                    Domino::horizontal(r, len - 2)
                };
                hole = g.cells().to_vec();
                restored.push((label, g));
            }
            _ => {
                let z = hit[0];
                if z.0 == 0 || z.1 == 0 {
                    return Err(Error::TableauPair("unbump leaves the diagram".into()));
                }
                let back = (z.0 - 1, z.1 - 1);
                restored.push((label, shifted(d, z, back)));
                let other = if hole[0] == z { hole[1] } else { hole[0] };
                hole = vec![other, back];
            }
        }
    }
    Err(Error::TableauPair("reverse bumping never reached the first row or column".into()))
}

/// Order used when several triples share a recording label: vertical ones by
/// decreasing label, then horizontal ones by increasing label.
pub fn domino_order_key(c: u8, j: usize) -> (bool, i64) {
    if c == 0 {
        (true, j as i64)
    } else {
        (false, -(j as i64))
    }
}

pub fn rsk(w: &ColoredBiword) -> (DominoTableau, DominoTableau) {
    rsk_with_core(w, &Partition::empty())
}

/// Insertion and recording tableaux over a common 2-core.
pub fn rsk_with_core(w: &ColoredBiword, core: &Partition) -> (DominoTableau, DominoTableau) {
    let mut order: Vec<Triple> = w.triples().to_vec();
    order.sort_by_key(|t| (t.i, domino_order_key(t.c, t.j)));
    let mut p = DominoTableau::empty(core.clone());
    let mut q_dominoes = Vec::with_capacity(order.len());
    for t in order {
        let before: BTreeSet<Cell> = p.shape().cells().collect();
        p = p.insert(t.c, t.j);
        let added: Vec<Cell> = p.shape().cells().filter(|c| !before.contains(c)).collect();
        q_dominoes.push((t.i, Domino::from_cells(added[0], added[1]).expect("one domino added")));
    }
    (p, DominoTableau::from_parts_unchecked(core.clone(), q_dominoes))
}

pub fn inverse_rsk(p: &DominoTableau, q: &DominoTableau) -> Result<ColoredBiword> {
    if p.core() != q.core() || p.shape() != q.shape() || p.len() != q.len() {
        return Err(Error::TableauPair(format!(
            "shapes {} and {} differ",
            p.shape().pretty(),
            q.shape().pretty()
        )));
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut triples = Vec::with_capacity(p.len());
    while let Some(&(i, last)) = q.dominoes.last() {
        q.dominoes.pop();
        let (smaller, c, j) = uninsert(&p, last)?;
        triples.push(Triple { c, i, j });
        p = smaller;
    }
    ColoredBiword::new(triples)
}

/// Whether inserting `d1` then `d2` into `t` adds the first domino to the left
/// of the second exactly when `d1` precedes or equals `d2` in the domino order.
pub fn check_increasing_insertion(t: &DominoTableau, d1: (u8, usize), d2: (u8, usize)) -> bool {
    let head_col = |a: &DominoTableau, b: &DominoTableau| {
        let before: BTreeSet<Cell> = a.shape().cells().collect();
        b.shape().cells().filter(|c| !before.contains(c)).map(|c| c.1).max().unwrap()
    };
    let t1 = t.insert(d1.0, d1.1);
    let t2 = t1.insert(d2.0, d2.1);
    let left = head_col(t, &t1) < head_col(&t1, &t2);
    left == (domino_order_key(d1.0, d1.1) <= domino_order_key(d2.0, d2.1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(t: &[(u8, usize, usize)]) -> ColoredBiword {
        ColoredBiword::new(t.iter().map(|&(c, i, j)| Triple { c, i, j }).collect()).unwrap()
    }

    #[test]
    fn single_insertions() {
        let e = DominoTableau::empty(Partition::empty());
        let h = e.insert(0, 1);
        assert_eq!(h.shape(), Partition::from([2]));
        assert_eq!(h.spin(), 0);
        let v = e.insert(1, 1);
        assert_eq!(v.shape(), Partition::from([1, 1]));
        assert_eq!(v.spin(), 1);
    }

    #[test]
    fn four_step_example() {
        let mut t = DominoTableau::empty(Partition::empty());
        for (c, j) in [(1, 3), (0, 4), (0, 2), (1, 1)] {
            t = t.insert(c, j);
        }
        assert_eq!(t.shape(), Partition::from([3, 3, 2]));
        let expected = [(1, Domino::vertical(0, 0)),
            (2, Domino::vertical(0, 1)),
            (3, Domino::horizontal(2, 0)),
            (4, Domino::vertical(0, 2))];
        assert_eq!(t.dominoes(), &expected[..]);
        assert_eq!(t.spin(), 3);
    }

    #[test]
    fn round_trip_small() {
        for w in (0..=3).flat_map(|len| ColoredBiword::all(len, 2, 2)) {
            let (p, q) = rsk(&w);
            assert_eq!(p.shape(), q.shape());
            DominoTableau::new(p.core().clone(), p.dominoes().to_vec()).expect("P semistandard");
            DominoTableau::new(q.core().clone(), q.dominoes().to_vec()).expect("Q semistandard");
            assert_eq!(w.total_color(), p.spin() + q.spin(), "{w}");
            assert_eq!(inverse_rsk(&p, &q).unwrap(), w, "{w}");
        }
    }

    #[test]
    fn order_examples() {
        let e = DominoTableau::empty(Partition::empty());
        assert!(check_increasing_insertion(&e, (0, 1), (0, 2)));
        assert!(check_increasing_insertion(&e, (1, 2), (1, 1)));
        let w = word(&[(0, 1, 1)]);
        assert_eq!(rsk(&w).0.shape(), Partition::from([2]));
    }
}
