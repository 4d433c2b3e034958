//! Domino tableaux and colored biwords, with semistandard domino insertion
//! and the RSK-type bijection it induces.
//!
//! Color 0 is a horizontal domino and color 1 a vertical one. Horizontal
//! dominoes bump along rows and vertical ones along columns.

mod insertion;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{horizontal_strip, n_core, Cell, Partition, SkewShape};
use crate::ribbonfn::RibbonTableau;

pub use insertion::{check_increasing_insertion, domino_order_key, inverse_rsk, rsk, rsk_with_core};

/// Two cells sharing an edge, anchored at the top-left cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub row: usize,
    pub col: usize,
    pub vertical: bool,
}

impl Domino {
    pub fn horizontal(row: usize, col: usize) -> Self {
        Self { row, col, vertical: false }
    }

    pub fn vertical(row: usize, col: usize) -> Self {
        Self { row, col, vertical: true }
    }

    /// The domino covering two edge-adjacent cells.
    pub fn from_cells(a: Cell, b: Cell) -> Option<Self> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if a.0 == b.0 && a.1 + 1 == b.1 {
            Some(Self::horizontal(a.0, a.1))
        } else if a.1 == b.1 && a.0 + 1 == b.0 {
            Some(Self::vertical(a.0, a.1))
        } else {
            None
        }
    }

    pub fn cells(&self) -> [Cell; 2] {
        if self.vertical {
            [(self.row, self.col), (self.row + 1, self.col)]
        } else {
            [(self.row, self.col), (self.row, self.col + 1)]
        }
    }

    /// The top-right cell.
    pub fn head(&self) -> Cell {
        if self.vertical {
            (self.row, self.col)
        } else {
            (self.row, self.col + 1)
        }
    }

    pub fn color(&self) -> u8 {
        u8::from(self.vertical)
    }
}

/// A semistandard domino tableau on `shape / core`. Dominoes are kept sorted
/// by label, then left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominoTableau {
    core: Partition,
    dominoes: Vec<(usize, Domino)>,
}

impl DominoTableau {
    pub fn empty(core: Partition) -> Self {
        Self { core, dominoes: Vec::new() }
    }

    /// Validates that the labelled dominoes form a semistandard tableau over `core`.
    pub fn new(core: Partition, dominoes: Vec<(usize, Domino)>) -> Result<Self> {
        let t = Self::from_parts_unchecked(core, dominoes);
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_parts_unchecked(core: Partition, mut dominoes: Vec<(usize, Domino)>) -> Self {
        dominoes.sort_by_key(|(l, d)| (*l, d.head().1));
        Self { core, dominoes }
    }

    fn validate(&self) -> Result<()> {
        if n_core(&self.core, 2) != self.core {
            return Err(Error::Invalid(format!("{} is not a 2-core", self.core.pretty())));
        }
        if self.dominoes.iter().any(|(l, _)| *l == 0) {
            return Err(Error::Invalid("labels start at 1".into()));
        }
        let mut seen: BTreeSet<Cell> = self.core.cells().collect();
        for (_, d) in &self.dominoes {
            for c in d.cells() {
                if !seen.insert(c) {
                    return Err(Error::Invalid(format!("cell {c:?} covered twice")));
                }
            }
        }
        let chain = self.try_chain()?;
        for w in chain.windows(2) {
            let step = SkewShape { outer: w[1].clone(), inner: w[0].clone() };
            let tiling = horizontal_strip(&step, 2)
                .ok_or_else(|| Error::Invalid(format!("{step} is not a horizontal domino strip")))?;
            let mut want: Vec<BTreeSet<Cell>> = tiling.iter().map(|r| r.cells.iter().copied().collect()).collect();
            let label = self.dominoes.iter().find(|(_, d)| step.contains_cell(d.cells()[0])).map(|x| x.0);
            let mut have: Vec<BTreeSet<Cell>> = self
                .dominoes
                .iter()
                .filter(|(l, _)| Some(*l) == label)
                .map(|(_, d)| d.cells().into_iter().collect())
                .collect();
            want.sort();
            have.sort();
            if want != have {
                return Err(Error::Invalid(format!("dominoes of {step} are not its strip tiling")));
            }
        }
        Ok(())
    }

    fn try_chain(&self) -> Result<Vec<Partition>> {
        let mut chain = vec![self.core.clone()];
        let mut cells: BTreeSet<Cell> = self.core.cells().collect();
        for l in 1..=self.max_label() {
            cells.extend(self.dominoes.iter().filter(|(k, _)| *k == l).flat_map(|(_, d)| d.cells()));
            chain.push(partition_of(&cells).ok_or_else(|| Error::Invalid(format!("labels ≤ {l} do not form a shape")))?);
        }
        Ok(chain)
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn dominoes(&self) -> &[(usize, Domino)] {
        &self.dominoes
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    pub fn max_label(&self) -> usize {
        self.dominoes.iter().map(|(l, _)| *l).max().unwrap_or(0)
    }

    pub fn shape(&self) -> Partition {
        let cells: BTreeSet<Cell> = self.core.cells().chain(self.dominoes.iter().flat_map(|(_, d)| d.cells())).collect();
        partition_of(&cells).expect("tableau cells form a partition")
    }

    /// Number of vertical dominoes.
    pub fn spin(&self) -> usize {
        self.dominoes.iter().filter(|(_, d)| d.vertical).count()
    }

    /// Dominoes per label, labels `1..=len`.
    pub fn weight(&self, len: usize) -> Vec<usize> {
        let mut w = vec![0; len.max(self.max_label())];
        for (l, _) in &self.dominoes {
            w[l - 1] += 1;
        }
        w
    }

    /// Shapes after each label `0, 1, …, max_label`.
    pub fn chain(&self) -> Vec<Partition> {
        self.try_chain().expect("valid tableau")
    }

    pub fn to_ribbon_tableau(&self) -> RibbonTableau {
        RibbonTableau {
            n: 2,
            chain: self.chain(),
            weight: self.weight(0),
            spin: self.spin(),
        }
    }

    pub fn from_ribbon_tableau(t: &RibbonTableau) -> Result<Self> {
        if t.n != 2 {
            return Err(Error::Invalid(format!("expected dominoes, got {}-ribbons", t.n)));
        }
        let mut dominoes = Vec::new();
        for (r, label) in t.ribbons() {
            dominoes.push((label, Domino::from_cells(r.cells[0], r.cells[1]).expect("2-ribbon")));
        }
        Self::new(t.chain[0].clone(), dominoes)
    }

    /// Inserts a domino of color `c` carrying label `j`.
    pub fn insert(&self, c: u8, j: usize) -> DominoTableau {
        insertion::insert(self, c, j)
    }

    /// Text grid of labels; core cells show as `·`.
    pub fn grid(&self) -> String {
        let shape = self.shape();
        let mut g: Vec<Vec<String>> = shape.parts().iter().map(|&p| vec!["·".to_string(); p]).collect();
        for (l, d) in &self.dominoes {
            for (r, c) in d.cells() {
                g[r][c] = l.to_string();
            }
        }
        let width = g.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        g.iter()
            .map(|row| row.iter().map(|s| format!("{s:>width$}")).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The partition with exactly these cells, if they form one.
fn partition_of(cells: &BTreeSet<Cell>) -> Option<Partition> {
    let rows = cells.iter().map(|c| c.0 + 1).max().unwrap_or(0);
    let mut parts = vec![0usize; rows];
    for &(r, _) in cells {
        parts[r] += 1;
    }
    let p = Partition::new(parts).ok()?;
    (p.cells().count() == cells.len() && p.cells().all(|c| cells.contains(&c))).then_some(p)
}

impl Serialize for DominoTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Placed {
            label: usize,
            cells: [Cell; 2],
        }
        let r = self.to_ribbon_tableau();
        let mut st = s.serialize_struct("DominoTableau", 5)?;
        st.serialize_field("n", &2)?;
        st.serialize_field("chain", &r.chain)?;
        st.serialize_field("weight", &r.weight)?;
        st.serialize_field("spin", &r.spin)?;
        let placed: Vec<Placed> = self.dominoes.iter().map(|(l, d)| Placed { label: *l, cells: d.cells() }).collect();
        st.serialize_field("dominoes", &placed)?;
        st.end()
    }
}

/// One column `(c, i, j)` of a colored biword.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    pub c: u8,
    pub i: usize,
    pub j: usize,
}

/// A multiset of triples, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct ColoredBiword {
    triples: Vec<Triple>,
}

impl ColoredBiword {
    pub fn new(mut triples: Vec<Triple>) -> Result<Self> {
        for t in &triples {
            if t.c > 1 || t.i == 0 || t.j == 0 {
                return Err(Error::Biword(format!("{} {} {}", t.c, t.i, t.j)));
            }
        }
        triples.sort();
        Ok(Self { triples })
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Twice the sum of the colors.
    pub fn total_color(&self) -> usize {
        2 * self.triples.iter().map(|t| t.c as usize).sum::<usize>()
    }

    /// Every biword of `len` triples with `i ≤ max_i`, `j ≤ max_j`.
    pub fn all(len: usize, max_i: usize, max_j: usize) -> Vec<ColoredBiword> {
        let letters: Vec<Triple> = (0..=1u8)
            .flat_map(|c| (1..=max_i).flat_map(move |i| (1..=max_j).map(move |j| Triple { c, i, j })))
            .collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(letters: &[Triple], from: usize, left: usize, cur: &mut Vec<Triple>, out: &mut Vec<ColoredBiword>) {
            if left == 0 {
                out.push(ColoredBiword { triples: cur.clone() });
                return;
            }
            for k in from..letters.len() {
                cur.push(letters[k]);
                rec(letters, k, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(&letters, 0, len, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for ColoredBiword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.triples.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{} {} {}", t.c, t.i, t.j)?;
        }
        Ok(())
    }
}

/// One triple per line as `c i j`; blank lines and `#` comments are skipped.
impl FromStr for ColoredBiword {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut triples = Vec::new();
        for line in s.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<usize> = line
                .split(|ch: char| ch.is_whitespace() || ch == ',')
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Biword(line.to_string()))?;
            let [c, i, j] = nums[..] else {
                return Err(Error::Biword(line.to_string()));
            };
            if c > 1 {
                return Err(Error::Biword(line.to_string()));
            }
            triples.push(Triple { c: c as u8, i, j });
        }
        ColoredBiword::new(triples)
    }
}
