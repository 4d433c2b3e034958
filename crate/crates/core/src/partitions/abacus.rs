//! Bead (abacus) encoding: cores, quotients, and single-ribbon moves.
//!
//! With `N` beads (`N` a multiple of `n`), row `i` becomes the bead at
//! `λ_i + N − 1 − i`. Runner `r` holds the beads congruent to `r` mod `n`.
//! With this offset runner `r` collects exactly the ribbons whose diagonal of
//! content divisible by `n` is met at their `r`-th cell counted from the
//! top-right end, so runner `r` is quotient component `r`.

use super::Partition;

fn bead_count(len: usize, n: usize) -> usize {
    n * (len / n + 2)
}

fn beads(lambda: &Partition, big_n: usize) -> Vec<usize> {
    (0..big_n).map(|i| lambda.part(i) + big_n - 1 - i).collect()
}

fn from_beads(mut b: Vec<usize>) -> Partition {
    b.sort_unstable_by(|x, y| y.cmp(x));
    let big_n = b.len();
    Partition::from_sorted(b.iter().enumerate().map(|(i, &x)| x + i + 1 - big_n).collect())
}

/// Levels of the beads on each runner, highest first.
fn runners(lambda: &Partition, n: usize, big_n: usize) -> Vec<Vec<usize>> {
    let mut rs = vec![Vec::new(); n];
    for x in beads(lambda, big_n) {
        rs[x % n].push(x / n);
    }
    rs
}

fn runner_partition(levels: &[usize]) -> Partition {
    let k = levels.len();
    Partition::from_sorted(levels.iter().enumerate().map(|(j, &m)| m + j + 1 - k).collect())
}

pub fn n_core(lambda: &Partition, n: usize) -> Partition {
    assert!(n >= 1);
    let big_n = bead_count(lambda.len(), n);
    let rs = runners(lambda, n, big_n);
    let mut b = Vec::with_capacity(big_n);
    for (r, levels) in rs.iter().enumerate() {
        b.extend((0..levels.len()).map(|m| r + n * m));
    }
    from_beads(b)
}

pub fn n_quotient(lambda: &Partition, n: usize) -> Vec<Partition> {
    assert!(n >= 1);
    let big_n = bead_count(lambda.len(), n);
    runners(lambda, n, big_n).iter().map(|l| runner_partition(l)).collect()
}

/// Inverse of `(n_core, n_quotient)`. Panics if `core` is not an `n`-core.
pub fn from_core_quotient(core: &Partition, quotient: &[Partition], n: usize) -> Partition {
    assert_eq!(quotient.len(), n);
    let longest = quotient.iter().map(|p| p.len()).max().unwrap_or(0);
    let big_n = n * (core.len() + longest + 2);
    let rs = runners(core, n, big_n);
    let mut b = Vec::with_capacity(big_n);
    for (r, levels) in rs.iter().enumerate() {
        let k = levels.len();
        assert!(
            levels.iter().enumerate().all(|(j, &m)| m == k - 1 - j),
            "{core:?} is not a {n}-core"
        );
        b.extend((0..k).map(|j| r + n * (quotient[r].part(j) + k - 1 - j)));
    }
    from_beads(b)
}

/// Every way to remove one `n`-ribbon, with the ribbon's height (rows − 1).
pub fn remove_ribbons(lambda: &Partition, n: usize) -> Vec<(Partition, usize)> {
    let big_n = bead_count(lambda.len(), n);
    let b = beads(lambda, big_n);
    let mut occupied = vec![false; b[0] + 1];
    for &x in &b {
        occupied[x] = true;
    }
    let mut out = Vec::new();
    for (i, &x) in b.iter().enumerate() {
        if x >= n && !occupied[x - n] {
            let height = (x - n + 1..x).filter(|&y| occupied[y]).count();
            let mut nb = b.clone();
            nb[i] = x - n;
            out.push((from_beads(nb), height));
        }
    }
    out.sort();
    out
}

/// Every way to add one `n`-ribbon, with the ribbon's height.
pub fn add_ribbons(lambda: &Partition, n: usize) -> Vec<(Partition, usize)> {
    let big_n = bead_count(lambda.len() + n, n);
    let b = beads(lambda, big_n);
    let mut occupied = vec![false; b[0] + n + 1];
    for &x in &b {
        occupied[x] = true;
    }
    let mut out = Vec::new();
    for (i, &x) in b.iter().enumerate() {
        if !occupied[x + n] {
            let height = (x + 1..x + n).filter(|&y| occupied[y]).count();
            let mut nb = b.clone();
            nb[i] = x + n;
            out.push((from_beads(nb), height));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_of_running_example() {
        let lambda = Partition::from([7, 6, 4, 3, 1]);
        assert_eq!(n_core(&lambda, 3), Partition::empty());
        assert_eq!(
            n_quotient(&lambda, 3),
            vec![Partition::from([3]), Partition::from([2, 2]), Partition::empty()]
        );
    }

    #[test]
    fn small_cores() {
        assert_eq!(n_core(&Partition::from([2, 2]), 2), Partition::empty());
        assert_eq!(n_core(&Partition::from([3, 1]), 3), Partition::from([3, 1]));
        assert_eq!(n_core(&Partition::from([2, 1]), 2), Partition::from([2, 1]));
        assert_eq!(n_quotient(&Partition::empty(), 4), vec![Partition::empty(); 4]);
    }

    #[test]
    fn round_trip() {
        for n in 1..5 {
            for lambda in Partition::up_to(12) {
                let core = n_core(&lambda, n);
                let quot = n_quotient(&lambda, n);
                assert_eq!(from_core_quotient(&core, &quot, n), lambda, "n={n}");
            }
        }
    }

    #[test]
    fn ribbon_moves() {
        let adds = add_ribbons(&Partition::empty(), 2);
        assert_eq!(adds, vec![(Partition::from([1, 1]), 1), (Partition::from([2]), 0)]);
        let rems = remove_ribbons(&Partition::from([2, 2]), 2);
        assert_eq!(rems, vec![(Partition::from([1, 1]), 1), (Partition::from([2]), 0)]);
    }
}
