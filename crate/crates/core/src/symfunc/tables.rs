//! Per-degree transition data between the five classical bases, with the
//! Schur basis as hub. Tables are built once per degree and shared.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::Basis;
use crate::partitions::{classical_add_strips as pieri_add, remove_ribbons, Partition};
use crate::qcoeff::{rat, Rational};

/// Sparse rows: `rows[i]` lists `(j, a_ij)` with `a_ij ≠ 0`.
pub(crate) type Sparse = Vec<Vec<(usize, Rational)>>;

pub(crate) struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `kostka[λ][μ]`: semistandard tableaux of shape λ and content μ.
    pub kostka: Vec<Vec<i64>>,
    /// `chi[λ][μ]`: irreducible character λ at cycle type μ.
    pub chi: Vec<Vec<i64>>,
    to_schur: Vec<Sparse>,
    from_schur: Vec<Sparse>,
    composite: Mutex<HashMap<(Basis, Basis), Arc<Sparse>>>,
}

fn dense_to_sparse(m: &[Vec<Rational>]) -> Sparse {
    m.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(j, a)| (j, a.clone()))
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect()
}

/// Gauss–Jordan inverse over ℚ. Panics on a singular matrix.
pub(crate) fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        if !p.is_one() {
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x /= &p;
            }
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let (ac, ic) = (a[col][c].clone(), inv[col][c].clone());
                    if !ac.is_zero() {
                        a[r][c] -= &f * ac;
                    }
                    if !ic.is_zero() {
                        inv[r][c] -= &f * ic;
                    }
                }
            }
        }
    }
    inv
}

fn kostka_column(mu: &Partition) -> HashMap<Partition, i64> {
    let mut states: HashMap<Partition, i64> = HashMap::from([(Partition::empty(), 1)]);
    for &k in mu.parts() {
        let mut next = HashMap::new();
        for (p, c) in &states {
            for q in pieri_add(p, k) {
                *next.entry(q).or_insert(0) += c;
            }
        }
        states = next;
    }
    states
}

fn character(lambda: &Partition, mu: &[usize], memo: &mut HashMap<(Partition, Vec<usize>), i64>) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (smaller, height) in remove_ribbons(lambda, mu[0]) {
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * character(&smaller, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

impl DegreeTables {
    fn build(d: usize) -> Self {
        let parts = Partition::all(d);
        let n = parts.len();
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut kostka = vec![vec![0i64; n]; n];
        for (j, mu) in parts.iter().enumerate() {
            for (lambda, c) in kostka_column(mu) {
                kostka[index[&lambda]][j] = c;
            }
        }
        let mut memo = HashMap::new();
        let chi: Vec<Vec<i64>> = parts
            .iter()
            .map(|l| parts.iter().map(|m| character(l, m.parts(), &mut memo)).collect())
            .collect();
        let z: Vec<Rational> = parts.iter().map(|p| Rational::from_integer(p.z())).collect();

        let k_rat: Vec<Vec<Rational>> = kostka.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        let conj: Vec<usize> = parts.iter().map(|p| index[&p.conjugate()]).collect();

        // Rows give the Schur expansion of each basis element.
        let h_to_s: Vec<Vec<Rational>> = (0..n).map(|m| (0..n).map(|l| k_rat[l][m].clone()).collect()).collect();
        let e_to_s: Vec<Vec<Rational>> =
            (0..n).map(|m| (0..n).map(|l| k_rat[conj[l]][m].clone()).collect()).collect();
        let p_to_s: Vec<Vec<Rational>> = (0..n).map(|m| (0..n).map(|l| rat(chi[l][m])).collect()).collect();
        let s_to_p: Vec<Vec<Rational>> =
            (0..n).map(|l| (0..n).map(|m| rat(chi[l][m]) / &z[m]).collect()).collect();
        // K is unitriangular, so one inversion serves the m, h and e bases:
        // h ↔ s is the transpose of m ↔ s, and e ↔ s is that twisted by conjugation.
        let m_to_s = invert(&k_rat);
        let s_to_h: Vec<Vec<Rational>> = (0..n).map(|l| (0..n).map(|m| m_to_s[m][l].clone()).collect()).collect();
        let s_to_e: Vec<Vec<Rational>> =
            (0..n).map(|l| (0..n).map(|m| m_to_s[m][conj[l]].clone()).collect()).collect();

        let mut to_schur = vec![Sparse::new(); 5];
        let mut from_schur = vec![Sparse::new(); 5];
        let id = identity(n);
        for b in Basis::ALL {
            let (to, from) = match b {
                Basis::Schur => (&id, &id),
                Basis::Monomial => (&m_to_s, &k_rat),
                Basis::Homogeneous => (&h_to_s, &s_to_h),
                Basis::Elementary => (&e_to_s, &s_to_e),
                Basis::PowerSum => (&p_to_s, &s_to_p),
            };
            to_schur[b as usize] = dense_to_sparse(to);
            from_schur[b as usize] = dense_to_sparse(from);
        }
        Self {
            parts,
            index,
            kostka,
            chi,
            to_schur,
            from_schur,
            composite: Mutex::new(HashMap::new()),
        }
    }

    /// Rows give the `to`-expansion of each `from` basis element.
    pub fn transition(&self, from: Basis, to: Basis) -> Arc<Sparse> {
        if let Some(m) = self.composite.lock().unwrap().get(&(from, to)) {
            return m.clone();
        }
        let a = &self.to_schur[from as usize];
        let b = &self.from_schur[to as usize];
        let n = self.parts.len();
        let mut out = Sparse::with_capacity(n);
        for row in a {
            let mut acc = vec![Rational::zero(); n];
            for (j, x) in row {
                for (k, y) in &b[*j] {
                    acc[*k] += x * y;
                }
            }
            out.push(
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        let m = Arc::new(out);
        self.composite.lock().unwrap().insert((from, to), m.clone());
        m
    }
}

type TableCache = RwLock<HashMap<usize, Arc<DegreeTables>>>;

pub(crate) fn tables(d: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&d) {
        return t.clone();
    }
    // Built outside the lock; a concurrent duplicate build is harmless.
    let t = Arc::new(DegreeTables::build(d));
    cache.write().unwrap().entry(d).or_insert(t).clone()
}

/// Number of semistandard tableaux of shape `lambda` and content `mu` (a partition).
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let t = tables(lambda.size());
    t.kostka[t.index[lambda]][t.index[mu]]
}

/// The irreducible character `χ^λ` at cycle type `mu`.
pub fn character_value(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let t = tables(lambda.size());
    t.chi[t.index[lambda]][t.index[mu]]
}
