//! Heisenberg operators on the Fock space: strip-adding `V_k`, `Ṽ_k`,
//! strip-removing `U_k`, `Ũ_k`, border-strip operators `B_{±k}`, and the
//! Schur-type combinations `S_λ`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::FockVector;
use crate::partitions::{
    add_horizontal_strips, add_vertical_strips, border_ribbon_strips_between, enumerate_border_ribbon_strips,
    remove_horizontal_strips, remove_ribbons, remove_vertical_strips, Partition,
};
use crate::qcoeff::LaurentPoly;
use crate::symfunc::{Basis, SymFunc};

fn strip_op(v: &FockVector, moves: impl Fn(&Partition) -> Vec<(Partition, usize)>) -> FockVector {
    v.apply(|l| {
        moves(l)
            .into_iter()
            .map(|(m, s)| (m, LaurentPoly::neg_q_pow(-(s as i64))))
            .collect()
    })
}

/// Adds a horizontal strip of `k` ribbons with weight `(−q)^{−spin}`.
pub fn apply_v(k: usize, v: &FockVector) -> FockVector {
    let n = v.n();
    strip_op(v, |l| add_horizontal_strips(l, n, k))
}

pub fn apply_u(k: usize, v: &FockVector) -> FockVector {
    let n = v.n();
    strip_op(v, |l| remove_horizontal_strips(l, n, k))
}

pub fn apply_v_tilde(k: usize, v: &FockVector) -> FockVector {
    let n = v.n();
    strip_op(v, |l| add_vertical_strips(l, n, k))
}

pub fn apply_u_tilde(k: usize, v: &FockVector) -> FockVector {
    let n = v.n();
    strip_op(v, |l| remove_vertical_strips(l, n, k))
}

/// `V_{α_l} ⋯ V_{α_1} v`, the first part applied first.
pub fn apply_v_composition(alpha: &[usize], v: &FockVector) -> FockVector {
    alpha.iter().fold(v.clone(), |acc, &k| apply_v(k, &acc))
}

type Row = Arc<Vec<(Partition, LaurentPoly)>>;
type RowCache = RwLock<HashMap<(Partition, usize, i64), Row>>;

fn row_cache() -> &'static RowCache {
    static CACHE: OnceLock<RowCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn collect(sums: BTreeMap<Partition, LaurentPoly>) -> Vec<(Partition, LaurentPoly)> {
    sums.into_iter()
        .map(|(m, x)| (m, x.subst_neg_qinv()))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn b_row(lambda: &Partition, n: usize, k: i64) -> Row {
    let key = (lambda.clone(), n, k);
    if let Some(r) = row_cache().read().unwrap().get(&key) {
        return r.clone();
    }
    let mut sums: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
    if k < 0 {
        for b in enumerate_border_ribbon_strips(lambda, n, k.unsigned_abs() as usize) {
            *sums.entry(b.outer.clone()).or_default() += &b.weight();
        }
    } else {
        let mut layer = BTreeSet::from([lambda.clone()]);
        for _ in 0..k {
            layer = layer.iter().flat_map(|p| remove_ribbons(p, n)).map(|(p, _)| p).collect();
        }
        for mu in layer {
            let x: LaurentPoly = border_ribbon_strips_between(&mu, lambda, n).iter().map(|b| b.weight()).sum();
            sums.insert(mu, x);
        }
    }
    let row = Arc::new(collect(sums));
    row_cache().write().unwrap().insert(key, row.clone());
    row
}

/// `B_k` for `k ≠ 0`: border ribbon strips of `|k|` ribbons are added when
/// `k < 0` and removed when `k > 0`, weighted by the signed spin sum at `−q⁻¹`.
pub fn apply_b(k: i64, v: &FockVector) -> FockVector {
    assert!(k != 0, "B_0 is not defined");
    let n = v.n();
    v.apply(|l| b_row(l, n, k).as_ref().clone())
}

/// `B_{−μ} v = B_{−μ_l} ⋯ B_{−μ_1} v`.
pub fn apply_b_raising(mu: &Partition, v: &FockVector) -> FockVector {
    mu.parts().iter().fold(v.clone(), |acc, &k| apply_b(-(k as i64), &acc))
}

/// `S_λ` as a combination of the `V_ρ` through the homogeneous expansion of `s_λ`.
pub fn apply_s(lambda: &Partition, v: &FockVector) -> FockVector {
    let h = SymFunc::s(lambda.clone()).convert(Basis::Homogeneous);
    let mut out = FockVector::zero(v.n());
    for (rho, c) in h.coeffs() {
        out = &out + &apply_v_composition(rho.parts(), v).scale(c);
    }
    out
}

/// `S_λ` as a combination of the `B_{−μ}` through the power-sum expansion of `s_λ`.
pub fn apply_s_via_characters(lambda: &Partition, v: &FockVector) -> FockVector {
    let p = SymFunc::s(lambda.clone()).convert(Basis::PowerSum);
    let mut out = FockVector::zero(v.n());
    for (mu, c) in p.coeffs() {
        out = &out + &apply_b_raising(mu, v).scale(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [usize; N]) -> Partition {
        Partition::from(a)
    }

    fn poly<const N: usize>(t: [(i64, i64); N]) -> LaurentPoly {
        LaurentPoly::from_terms(t)
    }

    fn one_domino() -> FockVector {
        FockVector::from_terms(2, [(p([2]), LaurentPoly::one()), (p([1, 1]), poly([(-1, -1)]))])
    }

    #[test]
    fn strip_operators() {
        assert_eq!(apply_v(1, &FockVector::vacuum(2)), one_domino());
        let v = apply_v(2, &FockVector::basis(3, p([3, 1])));
        let expected = FockVector::from_terms(
            3,
            [
                (p([9, 1]), poly([(0, 1)])),
                (p([6, 2, 2]), poly([(-1, -1)])),
                (p([4, 4, 2]), poly([(-2, 1)])),
                (p([6, 1, 1, 1, 1]), poly([(-2, 1)])),
                (p([3, 3, 2, 1, 1]), poly([(-3, -1)])),
                (p([3, 2, 2, 2, 1]), poly([(-4, 1)])),
            ],
        );
        assert_eq!(v, expected);
    }

    #[test]
    fn border_operators() {
        assert_eq!(apply_b(-1, &FockVector::vacuum(2)), one_domino());
        let back = apply_b(1, &one_domino());
        assert_eq!(back, FockVector::vacuum(2).scale(&poly([(0, 1), (-2, 1)])));
        for k in 1..4 {
            assert!(apply_b(k, &FockVector::vacuum(3)).is_zero());
        }
    }

    #[test]
    fn schur_operators() {
        let s1 = apply_s(&p([1]), &FockVector::vacuum(2));
        assert_eq!(s1, one_domino());
        for l in Partition::up_to(3) {
            let v = FockVector::vacuum(2);
            assert_eq!(apply_s(&l, &v), apply_s_via_characters(&l, &v), "λ={l}");
        }
    }
}
