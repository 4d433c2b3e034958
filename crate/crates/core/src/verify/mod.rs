//! Mechanical checks of the ribbon identities over finite parameter grids.
//!
//! Every identity expands into independent cells. Each cell compares two
//! exact expressions and records the first disagreement it finds. Cells run
//! in parallel when the `parallel` feature is on; the report keeps the order
//! in which the grid was generated, so reruns are byte-identical apart from
//! the timing field.

mod checks;
mod oracles;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

macro_rules! identities {
    ($($variant:ident => $name:literal, $about:literal;)*) => {
        /// A family of identities that `run` knows how to check.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Identity {
            $($variant,)*
        }

        impl Identity {
            pub const ALL: &'static [Identity] = &[$(Identity::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Identity::$variant => $name,)*
                }
            }

            pub fn about(self) -> &'static str {
                match self {
                    $(Identity::$variant => $about,)*
                }
            }
        }
    };
}

identities! {
    Pieri => "pieri", "plethystic h_k times G_nu against spin-weighted horizontal strips";
    DualPieri => "dual-pieri", "plethystic e_k times G_nu against spin-weighted vertical strips";
    LoweringPieri => "lowering-pieri", "h_k and e_k skewing against strip removal";
    Mn => "mn", "plethystic p_k times G_nu against signed border strip sums";
    LoweringMn => "lowering-mn", "k d/dp_k of G_nu against border strip removal";
    Cauchy => "cauchy", "sum of G(X)G(Y) over a fixed core against the product kernel";
    DualCauchy => "dual-cauchy", "the conjugate kernel with G(X;q)G(Y;1/q)";
    Omega => "omega", "the ribbon involution on skew ribbon functions and on plethysms";
    Symmetry => "symmetry", "spin polynomials unchanged by permuting the weight";
    Heisenberg => "heisenberg", "commutators of border strip operators, and commuting with f_i";
    MnPieriEquiv => "mn-pieri-equiv", "Newton relations between strip and border strip operators";
    LittlewoodRichardson => "littlewood-richardson", "plethystic s_lambda times G_mu against skew q-LR coefficients";
    SkewCauchy => "skew-cauchy", "G_mu times the kernel against G_lambda(X) G_lambda/mu(Y)";
    MspinIdentity => "mspin-identity", "standard-weight spin sum with maximal spin against principal specializations";
    Phican => "phican", "plethystic s_lambda through q-LR coefficients over a core";
    Phi => "phi", "the projection of the Fock space intertwines the Heisenberg actions";
    QlrPositivity => "qlr-positivity", "Schur coefficients of G_lambda have nonnegative integer coefficients";
    QOne => "q-one", "G at q=1 as a product over the quotient, and the n=1 classical case";
    DominoRsk => "domino-rsk", "domino insertion bijection, color-to-spin, ordering lemma, Cauchy and Pieri";
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .iter()
            .copied()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown identity {s:?}")))
    }
}

impl Serialize for Identity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parameter ranges. Unset fields take the identity's default from [`Grid::for_identity`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grid {
    /// Ribbon lengths.
    pub n: Vec<usize>,
    /// Largest strip length, operator index or plethysm degree.
    pub kmax: usize,
    /// Largest partition size scanned.
    pub sizemax: usize,
    /// Largest total degree kept for kernel identities.
    pub degree: usize,
    /// Variables per alphabet for kernel identities.
    pub vars: usize,
    /// Restrict to one partition.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Partition>,
    /// Restrict to one strip length or index.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl Grid {
    /// Desk-scale defaults, finishing in seconds in release builds.
    pub fn for_identity(id: Identity) -> Grid {
        use Identity::*;
        let (kmax, sizemax, degree) = match id {
            Pieri | DualPieri | LoweringPieri | Mn | LoweringMn => (3, 8, 3),
            Cauchy | DualCauchy => (3, 0, 3),
            Omega => (3, 10, 4),
            Symmetry | QlrPositivity | QOne => (3, 12, 3),
            Heisenberg => (3, 8, 3),
            MnPieriEquiv => (4, 4, 3),
            LittlewoodRichardson => (2, 4, 3),
            SkewCauchy => (3, 4, 3),
            MspinIdentity | Phican => (3, 0, 3),
            Phi => (3, 5, 3),
            DominoRsk => (5, 6, 3),
        };
        Grid { n: vec![2, 3], kmax, sizemax, degree, vars: 3, nu: None, k: None }
    }

    pub(crate) fn ks(&self) -> Vec<usize> {
        match self.k {
            Some(k) => vec![k],
            None => (1..=self.kmax).collect(),
        }
    }

    pub(crate) fn partitions(&self) -> Vec<Partition> {
        match &self.nu {
            Some(p) => vec![p.clone()],
            None => Partition::up_to(self.sizemax),
        }
    }
}

/// Result of one grid cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub params: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub identity: Identity,
    pub grid: Grid,
    pub cells: Vec<CellReport>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CellReport> {
        self.cells.iter().find(|c| !c.passed)
    }

    pub fn num_passed(&self) -> usize {
        self.cells.iter().filter(|c| c.passed).count()
    }
}

type Outcome = std::result::Result<(), String>;

pub(crate) struct Case {
    label: String,
    check: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Case {
    pub(crate) fn new(label: impl Into<String>, check: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Self { label: label.into(), check: Box::new(check) }
    }
}

fn evaluate(c: &Case) -> CellReport {
    let outcome = (c.check)();
    CellReport { params: c.label.clone(), passed: outcome.is_ok(), counterexample: outcome.err() }
}

#[cfg(feature = "parallel")]
fn evaluate_all(cases: &[Case], threads: Option<usize>) -> Vec<CellReport> {
    use rayon::prelude::*;
    let work = || cases.par_iter().map(evaluate).collect();
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| cases.iter().map(evaluate).collect()),
        None => work(),
    }
}

#[cfg(not(feature = "parallel"))]
fn evaluate_all(cases: &[Case], _threads: Option<usize>) -> Vec<CellReport> {
    cases.iter().map(evaluate).collect()
}

/// Checks every cell of `grid`. `threads` caps the worker count.
pub fn run(id: Identity, grid: &Grid, threads: Option<usize>) -> VerifyReport {
    let start = Instant::now();
    let cases = checks::cases(id, grid);
    let cells = evaluate_all(&cases, threads);
    VerifyReport { identity: id, grid: grid.clone(), cells, elapsed_ms: start.elapsed().as_millis() }
}

pub use oracles::{cauchy_kernel_coeff, classical_border_strip_sum, dual_cauchy_kernel_coeff};
