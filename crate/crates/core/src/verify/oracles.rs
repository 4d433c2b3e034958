//! Brute-force expansions used as the independent side of some checks.

use crate::partitions::{Cell, Partition, SkewShape};
use crate::qcoeff::LaurentPoly;

/// `h_a(1, q², …, q^{2(n−1)})` by listing multisets.
fn h_principal(a: usize, n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut stack = vec![(0usize, a, 0i64)];
    while let Some((k, left, e)) = stack.pop() {
        if k + 1 == n {
            out += &LaurentPoly::q_pow(e + 2 * (k as i64) * left as i64);
            continue;
        }
        for t in 0..=left {
            stack.push((k + 1, left - t, e + 2 * (k as i64) * t as i64));
        }
    }
    out
}

/// `e_a(1, q², …, q^{2(n−1)})` by listing subsets.
fn e_principal(a: usize, n: usize) -> LaurentPoly {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == a)
        .map(|m| LaurentPoly::q_pow((0..n).filter(|k| m >> k & 1 == 1).map(|k| 2 * k as i64).sum()))
        .sum()
}

/// Sum over nonnegative integer matrices with the given row and column sums
/// of the product of `entry` over the matrix entries.
fn matrix_sum(rows: &[usize], cols: &[usize], entry: &dyn Fn(usize) -> LaurentPoly) -> LaurentPoly {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return LaurentPoly::zero();
    }
    fn fill_row(
        rows: &[usize],
        cols: &mut Vec<usize>,
        j: usize,
        left: usize,
        acc: LaurentPoly,
        entry: &dyn Fn(usize) -> LaurentPoly,
        out: &mut LaurentPoly,
    ) {
        if j + 1 == cols.len() {
            if left > cols[j] {
                return;
            }
            let acc = &acc * &entry(left);
            if acc.is_zero() {
                return;
            }
            cols[j] -= left;
            next_row(&rows[1..], cols, acc, entry, out);
            cols[j] += left;
            return;
        }
        for a in 0..=left.min(cols[j]) {
            let w = entry(a);
            if w.is_zero() {
                continue;
            }
            cols[j] -= a;
            fill_row(rows, cols, j + 1, left - a, &acc * &w, entry, out);
            cols[j] += a;
        }
    }
    fn next_row(
        rows: &[usize],
        cols: &mut Vec<usize>,
        acc: LaurentPoly,
        entry: &dyn Fn(usize) -> LaurentPoly,
        out: &mut LaurentPoly,
    ) {
        match rows.first() {
            None => {
                if cols.iter().all(|&c| c == 0) {
                    *out += &acc;
                }
            }
            Some(&r) => fill_row(rows, cols, 0, r, acc, entry, out),
        }
    }
    if cols.is_empty() {
        return if rows.iter().all(|&r| r == 0) { LaurentPoly::one() } else { LaurentPoly::zero() };
    }
    let mut out = LaurentPoly::zero();
    next_row(rows, &mut cols.to_vec(), LaurentPoly::one(), entry, &mut out);
    out
}

/// Coefficient of `x^α y^β` in `Π_{i,j} Π_{k<n} 1/(1 − x_i y_j q^{2k})`.
pub fn cauchy_kernel_coeff(alpha: &[usize], beta: &[usize], n: usize) -> LaurentPoly {
    matrix_sum(alpha, beta, &|a| h_principal(a, n))
}

/// Coefficient of `x^α y^β` in `Π_{i,j} Π_{k<n} (1 + x_i y_j q^{2k})`.
pub fn dual_cauchy_kernel_coeff(alpha: &[usize], beta: &[usize], n: usize) -> LaurentPoly {
    matrix_sum(alpha, beta, &|a| e_principal(a, n))
}

/// `(−1)^{rows − 1}` if `outer / inner` is a connected skew shape with no
/// 2×2 square, else zero.
pub fn classical_border_strip_sum(outer: &Partition, inner: &Partition) -> i64 {
    if !outer.contains(inner) || outer == inner {
        return 0;
    }
    let shape = SkewShape { outer: outer.clone(), inner: inner.clone() };
    let cells = shape.cells();
    let has = |c: Cell| shape.contains_cell(c);
    let square = cells.iter().any(|&(r, c)| has((r + 1, c)) && has((r, c + 1)) && has((r + 1, c + 1)));
    if square || !shape.is_connected() {
        return 0;
    }
    let rows = cells.iter().map(|c| c.0).collect::<std::collections::BTreeSet<_>>().len();
    if rows % 2 == 1 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_values() {
        assert_eq!(h_principal(2, 2), LaurentPoly::from_terms([(0, 1), (2, 1), (4, 1)]));
        assert_eq!(e_principal(2, 3), LaurentPoly::from_terms([(2, 1), (4, 1), (6, 1)]));
        assert!(e_principal(3, 2).is_zero());
    }

    #[test]
    fn kernel_in_one_variable_each() {
        // 1/((1 − t)(1 − t q²)) at t²
        assert_eq!(cauchy_kernel_coeff(&[2], &[2], 2), LaurentPoly::from_terms([(0, 1), (2, 1), (4, 1)]));
        // Two x's and one y: only x1 y1 · x2 y1 with multiplicity from each factor.
        assert_eq!(cauchy_kernel_coeff(&[1, 1], &[2], 1), LaurentPoly::one());
        assert_eq!(dual_cauchy_kernel_coeff(&[2], &[2], 1), LaurentPoly::zero());
    }

    #[test]
    fn classical_rim_hooks() {
        let p = |v: &[usize]| Partition::from(v);
        assert_eq!(classical_border_strip_sum(&p(&[2, 1]), &p(&[])), -1);
        assert_eq!(classical_border_strip_sum(&p(&[2, 1]), &p(&[1])), 0);
        assert_eq!(classical_border_strip_sum(&p(&[2, 2]), &p(&[1])), -1);
        assert_eq!(classical_border_strip_sum(&p(&[3]), &p(&[])), 1);
    }
}
