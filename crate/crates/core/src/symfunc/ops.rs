//! Plethysm by a geometric alphabet, the twisted involutions, pairings,
//! skewing, and specialization.

use super::{z_rat, Basis, SymFunc};
use crate::partitions::Partition;
use crate::qcoeff::{rat, LaurentPoly, RatFunc};

/// `Π_i (1 + q^{2λ_i} + ⋯ + q^{2λ_i(n−1)})`.
fn geometric_weight(lambda: &Partition, n: usize) -> LaurentPoly {
    lambda
        .parts()
        .iter()
        .fold(LaurentPoly::one(), |acc, &k| &acc * &LaurentPoly::geometric_sum(n, k))
}

/// Algebra map `p_k ↦ (1 + q^{2k} + ⋯ + q^{2k(n−1)}) p_k`.
pub fn upsilon(f: &SymFunc, n: usize) -> SymFunc {
    f.convert(Basis::PowerSum)
        .map_coeffs(|l, c| c * &geometric_weight(l, n))
        .convert(f.basis())
}

/// Semilinear involution `s_λ ↦ q^{(n−1)|λ|} s_{λ'}`, `q ↦ q⁻¹`.
pub fn omega_n(f: &SymFunc, n: usize) -> SymFunc {
    let s = f.convert(Basis::Schur);
    let mut out = SymFunc::zero(Basis::Schur);
    for (l, c) in s.coeffs() {
        let shift = ((n - 1) * l.size()) as i64;
        out.add_term(l.conjugate(), &c.bar_q().shift(shift));
    }
    out.convert(f.basis())
}

/// Semilinear involution `p_k ↦ q^{2(n−1)k} p_k`, `q ↦ q⁻¹`.
pub fn bar_lambda(f: &SymFunc, n: usize) -> SymFunc {
    f.convert(Basis::PowerSum)
        .map_coeffs(|l, c| c.bar_q().shift((2 * (n - 1) * l.size()) as i64))
        .convert(f.basis())
}

/// Hall pairing, `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> LaurentPoly {
    let a = f.convert(Basis::PowerSum);
    let b = g.convert(Basis::PowerSum);
    let mut out = LaurentPoly::zero();
    for (l, c) in a.coeffs() {
        if let Some(d) = b.coeffs().get(l) {
            out += &(c * d).scale(&z_rat(l));
        }
    }
    out
}

/// The pairing for which `upsilon(·, n)` is adjoint to the Hall pairing.
pub fn inner_n(f: &SymFunc, g: &SymFunc, n: usize) -> RatFunc {
    let a = f.convert(Basis::PowerSum);
    let b = g.convert(Basis::PowerSum);
    let mut out = RatFunc::from_poly(LaurentPoly::zero());
    for (l, c) in a.coeffs() {
        if let Some(d) = b.coeffs().get(l) {
            let term = RatFunc::new((c * d).scale(&z_rat(l)), geometric_weight(l, n));
            out = &out + &term;
        }
    }
    out
}

/// Adjoint of multiplication by `f`, via `p_k ↦ k ∂/∂p_k`. Result in `g`'s basis.
pub fn perp(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let a = f.convert(Basis::PowerSum);
    let b = g.convert(Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (mu, c) in a.coeffs() {
        let need = mu.multiplicities();
        for (lambda, d) in b.coeffs() {
            let have = lambda.multiplicities();
            if need.iter().enumerate().any(|(k, &m)| m > have.get(k).copied().unwrap_or(0)) {
                continue;
            }
            // Π_k k^{b_k} a_k! / (a_k − b_k)!
            let mut factor = rat(1);
            let mut rest = Vec::new();
            for (k, &a_k) in have.iter().enumerate() {
                let b_k = need.get(k).copied().unwrap_or(0);
                for j in 0..b_k {
                    factor *= rat((k * (a_k - j)) as i64);
                }
                rest.extend(std::iter::repeat_n(k, a_k - b_k));
            }
            out.add_term(Partition::from_unsorted(rest), &(c * d).scale(&factor));
        }
    }
    out.convert(g.basis())
}

/// Substitutes `values` for the first variables and zero for the rest.
pub fn specialize(f: &SymFunc, values: &[LaurentPoly]) -> LaurentPoly {
    let pf = f.convert(Basis::PowerSum);
    let mut power_sums: Vec<LaurentPoly> = vec![LaurentPoly::from_int(values.len() as i64)];
    let mut out = LaurentPoly::zero();
    for (l, c) in pf.coeffs() {
        let top = l.part(0);
        while power_sums.len() <= top {
            let k = power_sums.len() as u32;
            power_sums.push(values.iter().map(|v| v.pow(k)).sum());
        }
        let term = l.parts().iter().fold(c.clone(), |acc, &k| &acc * &power_sums[k]);
        out += &term;
    }
    out
}

/// `h_k` plethystically evaluated at `(1 + q² + ⋯ + q^{2n−2})X`.
pub fn bold_h(k: usize, n: usize) -> SymFunc {
    upsilon(&SymFunc::h_k(k), n)
}

/// `e_k` plethystically evaluated at `(1 + q² + ⋯ + q^{2n−2})X`.
pub fn bold_e(k: usize, n: usize) -> SymFunc {
    upsilon(&SymFunc::e_k(k), n)
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

    #[test]
    fn upsilon_examples() {
        assert_eq!(upsilon(&SymFunc::p_k(1), 2), SymFunc::term(Basis::PowerSum, p([1]), poly([(0, 1), (2, 1)])));
        assert_eq!(upsilon(&SymFunc::p_k(2), 2), SymFunc::term(Basis::PowerSum, p([2]), poly([(0, 1), (4, 1)])));
        let f = SymFunc::s(p([2, 1]));
        assert_eq!(upsilon(&f, 1), f);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_n(&SymFunc::s(p([2])), 2), SymFunc::term(Basis::Schur, p([1, 1]), LaurentPoly::q_pow(2)));
        let f = SymFunc::term(Basis::Schur, p([1]), LaurentPoly::q());
        assert_eq!(omega_n(&f, 3), f);
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar_lambda(&SymFunc::p_k(1), 2), SymFunc::term(Basis::PowerSum, p([1]), LaurentPoly::q_pow(2)));
        for k in 1..4 {
            let u = upsilon(&SymFunc::p_k(k), 3);
            assert_eq!(bar_lambda(&u, 3), u);
        }
    }

    #[test]
    fn pairings() {
        assert_eq!(hall_inner(&SymFunc::p_k(2), &SymFunc::p_k(2)), LaurentPoly::from_int(2));
        assert_eq!(hall_inner(&SymFunc::s(p([2, 1])), &SymFunc::s(p([2, 1]))), LaurentPoly::one());
        assert_eq!(hall_inner(&SymFunc::h(p([2, 1])), &SymFunc::m(p([2, 1]))), LaurentPoly::one());
        let u = upsilon(&SymFunc::p_k(2), 3);
        assert_eq!(inner_n(&u, &SymFunc::p_k(2), 3).as_laurent(), Some(LaurentPoly::from_int(2)));
        let s = SymFunc::s(p([2, 1]));
        assert_eq!(inner_n(&upsilon(&s, 2), &s, 2).as_laurent(), Some(LaurentPoly::one()));
        let r = inner_n(&SymFunc::p_k(1), &SymFunc::p_k(1), 2);
        assert!(r.equals(&RatFunc::new(LaurentPoly::one(), poly([(0, 1), (2, 1)]))));
    }

    #[test]
    fn perp_examples() {
        let r = perp(&SymFunc::p_k(1), &SymFunc::p(p([1, 1])));
        assert_eq!(r, SymFunc::term(Basis::PowerSum, p([1]), LaurentPoly::from_int(2)));
        assert_eq!(perp(&SymFunc::h_k(1), &SymFunc::s(p([2]))), SymFunc::s(p([1])));
    }

    #[test]
    fn specialization() {
        let vals = [LaurentPoly::one(), LaurentPoly::q_pow(2)];
        assert_eq!(specialize(&SymFunc::s(p([1])), &vals), poly([(0, 1), (2, 1)]));
        assert_eq!(specialize(&SymFunc::s(p([2])), &vals), poly([(0, 1), (2, 1), (4, 1)]));
        assert!(specialize(&SymFunc::s(p([1, 1, 1])), &vals).is_zero());
    }

    #[test]
    fn bold_examples() {
        assert_eq!(bold_h(1, 2), SymFunc::term(Basis::Homogeneous, p([1]), poly([(0, 1), (2, 1)])));
        assert_eq!(bold_h(0, 4), SymFunc::one(Basis::Homogeneous));
    }
}
