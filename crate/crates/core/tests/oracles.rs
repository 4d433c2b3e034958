//! Library routines against naive enumerations written here from scratch.

use std::collections::BTreeSet;

use ribbonlab::partitions::{
    add_horizontal_strips, add_vertical_strips, from_core_quotient, mspin, n_core, n_quotient, northern_tilings,
    remove_horizontal_strips,
};
use ribbonlab::ribbonfn::{k_poly, l_poly, l_poly_direct};
use ribbonlab::{Basis, LaurentPoly, Partition, SkewShape, SymFunc};

type Cells = BTreeSet<(usize, usize)>;

fn cells_between(outer: &Partition, inner: &Partition) -> Cells {
    outer.cells().filter(|&c| !inner.contains_cell(c)).collect()
}

fn is_ribbon(cells: &Cells) -> bool {
    let has = |r: usize, c: usize| cells.contains(&(r, c));
    if cells.iter().any(|&(r, c)| has(r + 1, c) && has(r, c + 1) && has(r + 1, c + 1)) {
        return false;
    }
    // Connected by flood fill.
    let mut seen = Cells::new();
    let mut todo: Vec<_> = cells.iter().take(1).copied().collect();
    while let Some((r, c)) = todo.pop() {
        if !seen.insert((r, c)) {
            continue;
        }
        let mut near = vec![(r + 1, c), (r, c + 1)];
        if r > 0 {
            near.push((r - 1, c));
        }
        if c > 0 {
            near.push((r, c - 1));
        }
        todo.extend(near.into_iter().filter(|x| cells.contains(x)));
    }
    seen.len() == cells.len()
}

/// Every ribbon tiling of `outer / inner`, found by peeling ribbons off the
/// outer rim in every possible order. Tilings are sets of ribbons.
fn naive_tilings(outer: &Partition, inner: &Partition, n: usize) -> BTreeSet<BTreeSet<Cells>> {
    let mut out = BTreeSet::new();
    if outer == inner {
        out.insert(BTreeSet::new());
        return out;
    }
    if outer.size() < inner.size() + n {
        return out;
    }
    for nu in outer.subpartitions() {
        if nu.size() + n != outer.size() || !nu.contains(inner) {
            continue;
        }
        let strip = cells_between(outer, &nu);
        if !is_ribbon(&strip) {
            continue;
        }
        for mut t in naive_tilings(&nu, inner, n) {
            t.insert(strip.clone());
            out.insert(t);
        }
    }
    out
}

fn head(r: &Cells) -> (usize, usize) {
    let top = r.iter().map(|c| c.0).min().unwrap();
    (top, r.iter().filter(|c| c.0 == top).map(|c| c.1).max().unwrap())
}

fn spin(r: &Cells) -> usize {
    r.iter().map(|c| c.0).max().unwrap() - r.iter().map(|c| c.0).min().unwrap()
}

/// Tilings whose ribbon heads all touch the upper boundary of the shape.
fn naive_northern(outer: &Partition, inner: &Partition, n: usize) -> Vec<BTreeSet<Cells>> {
    let shape = cells_between(outer, inner);
    naive_tilings(outer, inner, n)
        .into_iter()
        .filter(|t| {
            t.iter().all(|r| {
                let (row, col) = head(r);
                row == 0 || !shape.contains(&(row - 1, col))
            })
        })
        .collect()
}

fn naive_add_strips(mu: &Partition, n: usize, k: usize) -> Vec<(Partition, usize)> {
    let mut out: Vec<_> = Partition::all(mu.size() + n * k)
        .into_iter()
        .filter(|l| l.contains(mu))
        .filter_map(|l| {
            let t = naive_northern(&l, mu, n);
            assert!(t.len() <= 1);
            t.first().map(|t| {
                let s = t.iter().map(spin).sum();
                (l.clone(), s)
            })
        })
        .collect();
    out.sort();
    out
}

fn transpose(cells: &Cells) -> Cells {
    cells.iter().map(|&(r, c)| (c, r)).collect()
}

fn naive_add_vertical_strips(mu: &Partition, n: usize, k: usize) -> Vec<(Partition, usize)> {
    let mut out: Vec<_> = naive_add_strips(&mu.conjugate(), n, k)
        .into_iter()
        .map(|(l, _)| {
            let t = &naive_northern(&l, &mu.conjugate(), n)[0];
            // Spin read directly off the transposed ribbons.
            let s = t.iter().map(|r| spin(&transpose(r))).sum();
            (l.conjugate(), s)
        })
        .collect();
    out.sort();
    out
}

fn sorted(mut v: Vec<(Partition, usize)>) -> Vec<(Partition, usize)> {
    v.sort();
    v
}

#[test]
fn horizontal_strips_match_naive_search() {
    for n in 2..=3 {
        for mu in Partition::up_to(5) {
            for k in 0..=2 {
                if mu.size() + n * k > 10 {
                    continue;
                }
                assert_eq!(sorted(add_horizontal_strips(&mu, n, k)), naive_add_strips(&mu, n, k), "n={n} μ={mu} k={k}");
            }
        }
    }
}

#[test]
fn vertical_strips_match_naive_search() {
    for n in 2..=3 {
        for mu in Partition::up_to(4) {
            for k in 0..=2 {
                if mu.size() + n * k > 9 {
                    continue;
                }
                assert_eq!(
                    sorted(add_vertical_strips(&mu, n, k)),
                    naive_add_vertical_strips(&mu, n, k),
                    "n={n} μ={mu} k={k}"
                );
            }
        }
    }
}

#[test]
fn removing_strips_inverts_adding() {
    for n in 2..=3 {
        for lambda in Partition::up_to(8) {
            for k in 1..=2 {
                for (mu, s) in remove_horizontal_strips(&lambda, n, k) {
                    assert!(add_horizontal_strips(&mu, n, k).contains(&(lambda.clone(), s)), "n={n} λ={lambda} μ={mu}");
                }
            }
        }
    }
}

#[test]
fn northern_tilings_agree_and_are_unique() {
    for n in 2..=3 {
        for outer in Partition::up_to(8) {
            for inner in outer.subpartitions() {
                let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                let lib = northern_tilings(&shape, n);
                let naive = naive_northern(&outer, &inner, n);
                assert!(lib.len() <= 1, "{outer}/{inner}");
                assert_eq!(lib.len(), naive.len(), "n={n} {outer}/{inner}");
                if let (Some(a), Some(b)) = (lib.first(), naive.first()) {
                    let a: BTreeSet<Cells> = a.iter().map(|r| r.cells.iter().copied().collect()).collect();
                    assert_eq!(&a, b);
                }
            }
        }
    }
}

#[test]
fn maximal_spin_matches_naive_search() {
    for n in 2..=3 {
        for outer in Partition::up_to(7) {
            for inner in outer.subpartitions() {
                let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                let naive = naive_tilings(&outer, &inner, n).iter().map(|t| t.iter().map(spin).sum::<usize>()).max();
                assert_eq!(mspin(&shape, n), naive, "n={n} {outer}/{inner}");
            }
        }
    }
}

#[test]
fn core_and_quotient_round_trip() {
    for n in 2..=4 {
        for lambda in Partition::up_to(10) {
            let core = n_core(&lambda, n);
            let quotient = n_quotient(&lambda, n);
            assert_eq!(quotient.len(), n);
            let weight: usize = quotient.iter().map(Partition::size).sum();
            assert_eq!(lambda.size(), core.size() + n * weight, "n={n} λ={lambda}");
            assert_eq!(from_core_quotient(&core, &quotient, n), lambda);
            // A core has no n-ribbon on its rim.
            assert!(naive_tilings(&core, &Partition::empty(), n).is_empty() || core.is_empty());
            if !core.is_empty() {
                for nu in core.subpartitions().into_iter().filter(|nu| nu.size() + n == core.size()) {
                    assert!(!is_ribbon(&cells_between(&core, &nu)), "n={n} core {core}");
                }
            }
        }
    }
}

#[test]
fn spin_polynomials_two_routes() {
    for n in 2..=3 {
        for outer in Partition::up_to(8) {
            for inner in outer.subpartitions() {
                let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                if !shape.size().is_multiple_of(n) {
                    continue;
                }
                let k = shape.size() / n;
                let alpha: Vec<usize> = if k >= 2 { vec![k - 1, 1] } else { vec![k] };
                assert_eq!(l_poly(&shape, n, &alpha), l_poly_direct(&shape, n, &alpha), "n={n} {outer}/{inner}");
            }
        }
    }
}

#[test]
fn single_letter_spin_polynomial_is_the_strip_spin() {
    // With one letter, a tableau is one horizontal strip.
    for n in 2..=3 {
        for mu in Partition::up_to(4) {
            for k in 1..=2 {
                for (lambda, s) in naive_add_strips(&mu, n, k) {
                    let shape = SkewShape::new(lambda, mu.clone()).unwrap();
                    assert_eq!(k_poly(&shape, n, &[k]), LaurentPoly::q_pow(s as i64));
                }
            }
        }
    }
}

#[test]
fn products_two_routes() {
    let all: Vec<Partition> = Partition::up_to(4).into_iter().filter(|p| !p.is_empty()).collect();
    for a in &all {
        for b in &all {
            let f = SymFunc::s(a.clone());
            let g = SymFunc::term(Basis::Schur, b.clone(), LaurentPoly::from_terms([(1, 2), (-1, 1)]));
            assert_eq!(f.mul(&g), f.mul_via_pieri(&g), "s{a}·s{b}");
        }
    }
}

#[test]
fn comparison_detects_a_wrong_width() {
    // The naive search for one ribbon width must not agree with the library
    // at another; otherwise the comparisons above would prove nothing.
    let mu = Partition::from(&[2, 1][..]);
    assert_ne!(sorted(add_horizontal_strips(&mu, 3, 1)), naive_add_strips(&mu, 2, 1));
    let shape = SkewShape::new(Partition::from(&[3, 3][..]), Partition::empty()).unwrap();
    assert_ne!(l_poly(&shape, 2, &[3]), l_poly_direct(&shape, 3, &[2]));
}
