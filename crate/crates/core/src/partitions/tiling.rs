//! Ribbon tilings of skew shapes and horizontal / vertical ribbon strips.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

use super::{abacus, Cell, Partition, SkewShape};

/// `n` edge-connected cells with no 2×2 square, stored from the top-right end
/// to the bottom-left end.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Ribbon {
    pub cells: Vec<Cell>,
}

impl Ribbon {
    /// The top-right cell.
    pub fn head(&self) -> Cell {
        self.cells[0]
    }

    /// The bottom-left cell.
    pub fn tail(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    /// Rows spanned minus one.
    pub fn spin(&self) -> usize {
        self.tail().0 - self.head().0
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Mirror across the main diagonal, re-ordered top-right first.
    pub fn transpose(&self) -> Ribbon {
        let mut cells: Vec<Cell> = self.cells.iter().map(|&(r, c)| (c, r)).collect();
        cells.reverse();
        Ribbon { cells }
    }
}

/// Dense membership grid of a skew shape plus a coverage mask.
struct Board {
    inside: Vec<Vec<bool>>,
    covered: Vec<Vec<bool>>,
}

impl Board {
    fn new(shape: &SkewShape) -> Self {
        let rows = shape.outer.len();
        let cols = shape.outer.part(0);
        let mut inside = vec![vec![false; cols]; rows];
        for (r, c) in shape.cells() {
            inside[r][c] = true;
        }
        Self {
            covered: vec![vec![false; cols]; rows],
            inside,
        }
    }

    fn free(&self, (r, c): Cell) -> bool {
        r < self.inside.len() && c < self.inside[r].len() && self.inside[r][c] && !self.covered[r][c]
    }

    /// First uncovered cell scanning rows top-down, each row right to left.
    /// Such a cell must be the top-right end of the ribbon covering it.
    fn first_free(&self) -> Option<Cell> {
        for r in 0..self.inside.len() {
            for c in (0..self.inside[r].len()).rev() {
                if self.inside[r][c] && !self.covered[r][c] {
                    return Some((r, c));
                }
            }
        }
        None
    }

    fn set(&mut self, cells: &[Cell], v: bool) {
        for &(r, c) in cells {
            self.covered[r][c] = v;
        }
    }
}

/// Visits every tiling; the visitor returns `false` to stop early.
fn search<F: FnMut(&[Ribbon]) -> bool>(
    board: &mut Board,
    n: usize,
    northern: bool,
    acc: &mut Vec<Ribbon>,
    visit: &mut F,
) -> bool {
    let Some(head) = board.first_free() else {
        return visit(acc);
    };
    // The cell above a head must lie outside the shape for a horizontal strip.
    if northern && head.0 > 0 && board.inside[head.0 - 1][head.1] {
        return true;
    }
    let mut path = vec![head];
    board.set(&[head], true);
    let keep_going = extend(board, n, northern, &mut path, acc, visit);
    board.set(&[head], false);
    keep_going
}

fn extend<F: FnMut(&[Ribbon]) -> bool>(
    board: &mut Board,
    n: usize,
    northern: bool,
    path: &mut Vec<Cell>,
    acc: &mut Vec<Ribbon>,
    visit: &mut F,
) -> bool {
    if path.len() == n {
        acc.push(Ribbon { cells: path.clone() });
        let keep_going = search(board, n, northern, acc, visit);
        acc.pop();
        return keep_going;
    }
    let (r, c) = *path.last().unwrap();
    let mut steps = Vec::with_capacity(2);
    if c > 0 {
        steps.push((r, c - 1));
    }
    steps.push((r + 1, c));
    for next in steps {
        if board.free(next) {
            board.set(&[next], true);
            path.push(next);
            let keep_going = extend(board, n, northern, path, acc, visit);
            path.pop();
            board.set(&[next], false);
            if !keep_going {
                return false;
            }
        }
    }
    true
}

/// All tilings of `shape` by `n`-ribbons.
pub fn ribbon_tilings(shape: &SkewShape, n: usize) -> Vec<Vec<Ribbon>> {
    let mut out = Vec::new();
    if !shape.size().is_multiple_of(n) {
        return out;
    }
    let mut board = Board::new(shape);
    search(&mut board, n, false, &mut Vec::new(), &mut |t: &[Ribbon]| {
        out.push(t.to_vec());
        true
    });
    out
}

/// All tilings in which every ribbon head has no cell of the shape above it.
/// There is at most one; returning a list lets tests confirm that.
pub fn northern_tilings(shape: &SkewShape, n: usize) -> Vec<Vec<Ribbon>> {
    let mut out = Vec::new();
    if !shape.size().is_multiple_of(n) {
        return out;
    }
    let mut board = Board::new(shape);
    search(&mut board, n, true, &mut Vec::new(), &mut |t: &[Ribbon]| {
        out.push(t.to_vec());
        true
    });
    out
}

/// The tiling of `shape` as a horizontal `n`-ribbon strip, found by direct search.
pub fn horizontal_strip(shape: &SkewShape, n: usize) -> Option<Vec<Ribbon>> {
    if !shape.size().is_multiple_of(n) {
        return None;
    }
    let mut found = None;
    let mut board = Board::new(shape);
    search(&mut board, n, true, &mut Vec::new(), &mut |t: &[Ribbon]| {
        found = Some(t.to_vec());
        false
    });
    found
}

pub fn horizontal_strip_spin(shape: &SkewShape, n: usize) -> Option<usize> {
    horizontal_strip(shape, n).map(|t| t.iter().map(Ribbon::spin).sum())
}

/// Spin of `shape` as a vertical strip: the transpose of a horizontal one.
pub fn vertical_strip_spin(shape: &SkewShape, n: usize) -> Option<usize> {
    let k = shape.size() / n;
    horizontal_strip_spin(&shape.conjugate(), n).map(|s| (n - 1) * k - s)
}

/// Maximum spin over all tilings.
pub fn mspin(shape: &SkewShape, n: usize) -> Option<usize> {
    if !shape.size().is_multiple_of(n) {
        return None;
    }
    let mut best = None;
    let mut board = Board::new(shape);
    search(&mut board, n, false, &mut Vec::new(), &mut |t: &[Ribbon]| {
        let s: usize = t.iter().map(Ribbon::spin).sum();
        best = Some(best.map_or(s, |b: usize| b.max(s)));
        true
    });
    best
}

/// Edge-connected components, each sorted.
pub fn connected_components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let set: std::collections::HashSet<Cell> = cells.iter().copied().collect();
    let mut seen = std::collections::HashSet::new();
    let mut comps = Vec::new();
    let mut sorted = cells.to_vec();
    sorted.sort();
    for &start in &sorted {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some((r, c)) = queue.pop_front() {
            let mut nbrs = vec![(r + 1, c), (r, c + 1)];
            if r > 0 {
                nbrs.push((r - 1, c));
            }
            if c > 0 {
                nbrs.push((r, c - 1));
            }
            for nb in nbrs {
                if set.contains(&nb) && seen.insert(nb) {
                    comp.push(nb);
                    queue.push_back(nb);
                }
            }
        }
        comp.sort();
        comps.push(comp);
    }
    comps
}

/// A horizontal ribbon strip `outer/inner` with its unique tiling.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HorizontalStrip {
    pub inner: Partition,
    pub outer: Partition,
    pub spin: usize,
    /// Ordered by head column, left to right.
    pub ribbons: Vec<Ribbon>,
}

impl HorizontalStrip {
    pub fn shape(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.clone(),
            inner: self.inner.clone(),
        }
    }

    fn from_tiling(inner: Partition, outer: Partition, mut ribbons: Vec<Ribbon>) -> Self {
        ribbons.sort_by_key(|r| r.head().1);
        let spin = ribbons.iter().map(Ribbon::spin).sum();
        Self {
            inner,
            outer,
            spin,
            ribbons,
        }
    }
}

/// Partitions reachable from `rho` by adding a classical horizontal strip of `k` cells.
pub(crate) fn classical_add_strips(rho: &Partition, k: usize) -> Vec<Partition> {
    // new_i ranges over [rho_i, rho_{i-1}] with the first row unbounded.
    let len = rho.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(rho: &Partition, i: usize, len: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == len {
            if left == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let lo = rho.part(i);
        let hi = if i == 0 { lo + left } else { rho.part(i - 1).min(lo + left) };
        for v in lo..=hi {
            cur.push(v);
            rec(rho, i + 1, len, left - (v - lo), cur, out);
            cur.pop();
        }
    }
    rec(rho, 0, len, k, &mut cur, &mut out);
    out
}

fn classical_remove_strips(rho: &Partition, k: usize) -> Vec<Partition> {
    // new_i ranges over [rho_{i+1}, rho_i].
    let len = rho.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(rho: &Partition, i: usize, len: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == len {
            if left == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let hi = rho.part(i);
        let lo = rho.part(i + 1).max(hi.saturating_sub(left));
        for v in lo..=hi {
            cur.push(v);
            rec(rho, i + 1, len, left - (hi - v), cur, out);
            cur.pop();
        }
    }
    rec(rho, 0, len, k, &mut cur, &mut out);
    out
}

/// All ways to write `k` as an ordered sum of `parts` nonnegative integers.
pub(crate) fn weak_compositions(k: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in weak_compositions(k - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Horizontal strips through the quotient: add a classical horizontal strip
/// to each quotient component, keeping the core.
pub fn horizontal_strip_via_quotient(mu: &Partition, n: usize, k: usize, grow: bool) -> Vec<Partition> {
    let core = abacus::n_core(mu, n);
    let quot = abacus::n_quotient(mu, n);
    let mut out = Vec::new();
    for split in weak_compositions(k, n) {
        let choices: Vec<Vec<Partition>> = quot
            .iter()
            .zip(&split)
            .map(|(rho, &kk)| {
                if grow {
                    classical_add_strips(rho, kk)
                } else {
                    classical_remove_strips(rho, kk)
                }
            })
            .collect();
        let mut idx = vec![0; n];
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        loop {
            let q: Vec<Partition> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            out.push(abacus::from_core_quotient(&core, &q, n));
            let mut pos = 0;
            while pos < n {
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

type StripCache = RwLock<HashMap<(Partition, usize, usize, bool), Arc<Vec<HorizontalStrip>>>>;

fn cache() -> &'static StripCache {
    static CACHE: OnceLock<StripCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached(mu: &Partition, n: usize, k: usize, grow: bool) -> Arc<Vec<HorizontalStrip>> {
    let key = (mu.clone(), n, k, grow);
    if let Some(v) = cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let mut strips = Vec::new();
    for other in horizontal_strip_via_quotient(mu, n, k, grow) {
        let (inner, outer) = if grow { (mu.clone(), other) } else { (other, mu.clone()) };
        let shape = SkewShape {
            outer: outer.clone(),
            inner: inner.clone(),
        };
        let tiling = horizontal_strip(&shape, n)
            .unwrap_or_else(|| panic!("quotient strip {shape:?} has no northern tiling"));
        strips.push(HorizontalStrip::from_tiling(inner, outer, tiling));
    }
    let v = Arc::new(strips);
    cache().write().unwrap().insert(key, v.clone());
    v
}

/// Every horizontal `n`-ribbon strip of `k` ribbons on top of `mu`, sorted by outer shape.
pub fn horizontal_strips(mu: &Partition, n: usize, k: usize) -> Arc<Vec<HorizontalStrip>> {
    cached(mu, n, k, true)
}

pub fn add_horizontal_strips(mu: &Partition, n: usize, k: usize) -> Vec<(Partition, usize)> {
    horizontal_strips(mu, n, k)
        .iter()
        .map(|s| (s.outer.clone(), s.spin))
        .collect()
}

/// Every `nu ⊆ lambda` with `lambda/nu` a horizontal strip of `k` ribbons, with spins.
pub fn remove_horizontal_strips(lambda: &Partition, n: usize, k: usize) -> Vec<(Partition, usize)> {
    cached(lambda, n, k, false)
        .iter()
        .map(|s| (s.inner.clone(), s.spin))
        .collect()
}

/// Vertical strips of `k` ribbons on top of `mu` with their vertical spins.
pub fn add_vertical_strips(mu: &Partition, n: usize, k: usize) -> Vec<(Partition, usize)> {
    let mut out: Vec<(Partition, usize)> = add_horizontal_strips(&mu.conjugate(), n, k)
        .into_iter()
        .map(|(l, s)| (l.conjugate(), (n - 1) * k - s))
        .collect();
    out.sort();
    out
}

pub fn remove_vertical_strips(lambda: &Partition, n: usize, k: usize) -> Vec<(Partition, usize)> {
    let mut out: Vec<(Partition, usize)> = remove_horizontal_strips(&lambda.conjugate(), n, k)
        .into_iter()
        .map(|(l, s)| (l.conjugate(), (n - 1) * k - s))
        .collect();
    out.sort();
    out
}
