//! Grid cells for each identity.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::{OnceLock, RwLock};

use super::oracles::{cauchy_kernel_coeff, classical_border_strip_sum, dual_cauchy_kernel_coeff};
use super::{Case, Grid, Identity, Outcome};
use crate::domino::{domino_order_key, inverse_rsk, rsk_with_core, check_increasing_insertion, ColoredBiword, DominoTableau};
use crate::fock::{
    apply_b, apply_f, apply_s, apply_s_via_characters, apply_u, apply_v, apply_v_tilde, phi, FockVector,
};
use crate::partitions::{
    add_horizontal_strips, add_ribbons, add_vertical_strips, classical_add_strips, horizontal_strip, mspin, n_core,
    n_quotient, remove_horizontal_strips, remove_ribbons, remove_vertical_strips, Partition, SkewShape,
};
use crate::qcoeff::LaurentPoly;
use crate::ribbonfn::{enumerate_tableaux, k_poly, ribbon_function, x_poly};
use crate::symfunc::{bold_e, bold_h, kostka_number, omega_n, perp, specialize, upsilon, Basis, SymFunc};

type GCache = RwLock<HashMap<(Partition, Partition, usize), SymFunc>>;

fn g_cache() -> &'static GCache {
    static CACHE: OnceLock<GCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Skew ribbon function in the Schur basis, memoized across cells.
fn g_skew(outer: &Partition, inner: &Partition, n: usize) -> SymFunc {
    let key = (outer.clone(), inner.clone(), n);
    if let Some(f) = g_cache().read().unwrap().get(&key) {
        return f.clone();
    }
    let shape = SkewShape { outer: outer.clone(), inner: inner.clone() };
    let f = ribbon_function(&shape, n).convert(Basis::Schur);
    g_cache().write().unwrap().insert(key, f.clone());
    f
}

fn g(lambda: &Partition, n: usize) -> SymFunc {
    g_skew(lambda, &n_core(lambda, n), n)
}

fn combo<I: IntoIterator<Item = (LaurentPoly, SymFunc)>>(terms: I) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for (c, f) in terms {
        out = &out + &f.scale(&c);
    }
    out
}

fn same(what: &str, lhs: &SymFunc, rhs: &SymFunc) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: lhs = {}, rhs = {}", lhs.convert(Basis::Schur), rhs.convert(Basis::Schur)))
    }
}

fn same_vec(what: &str, lhs: &FockVector, rhs: &FockVector) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: lhs = {lhs}, rhs = {rhs}"))
    }
}

fn same_poly(what: &str, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: lhs = {lhs}, rhs = {rhs}"))
    }
}

/// Partitions reachable from `lambda` by adding (or removing) `k` ribbons.
fn reach(lambda: &Partition, n: usize, k: usize, grow: bool) -> BTreeSet<Partition> {
    let mut layer = BTreeSet::from([lambda.clone()]);
    for _ in 0..k {
        layer = layer
            .iter()
            .flat_map(|p| if grow { add_ribbons(p, n) } else { remove_ribbons(p, n) })
            .map(|(p, _)| p)
            .collect();
    }
    layer
}

/// Partitions with core `core` and `d` ribbons.
fn with_core(core: &Partition, n: usize, d: usize) -> Vec<Partition> {
    Partition::all(core.size() + n * d).into_iter().filter(|l| n_core(l, n) == *core).collect()
}

fn cores(n: usize) -> Vec<Partition> {
    if n >= 2 {
        vec![Partition::empty(), Partition::from([1])]
    } else {
        vec![Partition::empty()]
    }
}

fn compositions(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    (1..=d)
        .flat_map(|first| {
            compositions(d - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn weak_pairs(d: usize) -> Vec<Vec<usize>> {
    (0..=d).map(|a| vec![a, d - a]).collect()
}

fn padded(p: &Partition, len: usize) -> Vec<usize> {
    let mut v = p.parts().to_vec();
    v.resize(len, 0);
    v
}

fn q_pow(e: usize) -> LaurentPoly {
    LaurentPoly::q_pow(e as i64)
}

pub(super) fn cases(id: Identity, grid: &Grid) -> Vec<Case> {
    use Identity::*;
    match id {
        Pieri | DualPieri | LoweringPieri | Mn | LoweringMn => strip_rules(id, grid),
        Cauchy => kernel(grid, false),
        DualCauchy => kernel(grid, true),
        Omega => omega(grid),
        Symmetry => symmetry(grid),
        Heisenberg => heisenberg(grid),
        MnPieriEquiv => newton(grid),
        LittlewoodRichardson => littlewood_richardson(grid),
        SkewCauchy => skew_cauchy(grid),
        MspinIdentity => mspin_identity(grid),
        Phican => phican(grid),
        Phi => projection(grid),
        QlrPositivity => positivity(grid),
        QOne => q_one(grid),
        DominoRsk => domino(grid),
    }
}

fn strip_rules(id: Identity, grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for nu in grid.partitions() {
            for k in grid.ks() {
                let nu = nu.clone();
                let label = format!("n={n} nu={} k={k}", nu.pretty());
                out.push(Case::new(label, move || strip_rule(id, n, &nu, k)));
            }
        }
    }
    out
}

fn strip_rule(id: Identity, n: usize, nu: &Partition, k: usize) -> Outcome {
    let g_nu = g(nu, n);
    let spin_sum = |moves: Vec<(Partition, usize)>| combo(moves.into_iter().map(|(m, s)| (q_pow(s), g(&m, n))));
    match id {
        Identity::Pieri => same("h_k", &(&bold_h(k, n) * &g_nu), &spin_sum(add_horizontal_strips(nu, n, k))),
        Identity::DualPieri => same("e_k", &(&bold_e(k, n) * &g_nu), &spin_sum(add_vertical_strips(nu, n, k))),
        Identity::LoweringPieri => {
            same("h_k perp", &perp(&SymFunc::h_k(k), &g_nu), &spin_sum(remove_horizontal_strips(nu, n, k)))?;
            same("e_k perp", &perp(&SymFunc::e_k(k), &g_nu), &spin_sum(remove_vertical_strips(nu, n, k)))
        }
        Identity::Mn => {
            let lhs = &upsilon(&SymFunc::p_k(k), n) * &g_nu;
            let rhs = combo(reach(nu, n, k, true).into_iter().map(|mu| {
                let x = x_poly(&SkewShape { outer: mu.clone(), inner: nu.clone() }, n, &[k]);
                (x, g(&mu, n))
            }));
            same("p_k", &lhs, &rhs)
        }
        Identity::LoweringMn => {
            let lhs = perp(&SymFunc::p_k(k), &g_nu);
            let rhs = combo(reach(nu, n, k, false).into_iter().map(|mu| {
                let x = x_poly(&SkewShape { outer: nu.clone(), inner: mu.clone() }, n, &[k]);
                (x, g(&mu, n))
            }));
            same("p_k perp", &lhs, &rhs)
        }
        _ => unreachable!("not a strip rule"),
    }
}

fn kernel(grid: &Grid, dual: bool) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for core in cores(n) {
            for d in 0..=grid.degree {
                let core = core.clone();
                let m = grid.vars;
                let label = format!("n={n} core={} degree={d} vars={m}", core.pretty());
                out.push(Case::new(label, move || kernel_degree(n, &core, d, m, dual)));
            }
        }
    }
    out
}

fn kernel_degree(n: usize, core: &Partition, d: usize, m: usize, dual: bool) -> Outcome {
    let weights: Vec<Partition> = Partition::all(d).into_iter().filter(|p| p.len() <= m).collect();
    let shapes = with_core(core, n, d);
    let core_t = core.conjugate();
    // K polynomials of λ (and λ' for the dual side) per weight.
    let mut table: BTreeMap<(Partition, Partition), LaurentPoly> = BTreeMap::new();
    for l in &shapes {
        for w in &weights {
            let s = SkewShape { outer: l.clone(), inner: core.clone() };
            table.insert((l.clone(), w.clone()), k_poly(&s, n, w.parts()));
            if dual {
                let st = SkewShape { outer: l.conjugate(), inner: core_t.clone() };
                table.insert((l.conjugate(), w.clone()), k_poly(&st, n, w.parts()));
            }
        }
    }
    let factor = q_pow((n - 1) * d);
    for a in &weights {
        for b in &weights {
            let mut rhs = LaurentPoly::zero();
            for l in &shapes {
                let y = &table[&(l.clone(), b.clone())];
                if dual {
                    let x = &table[&(l.conjugate(), a.clone())];
                    rhs += &(&(&factor * x) * &y.bar_q());
                } else {
                    rhs += &(&table[&(l.clone(), a.clone())] * y);
                }
            }
            let lhs = if dual {
                dual_cauchy_kernel_coeff(&padded(a, m), &padded(b, m), n)
            } else {
                cauchy_kernel_coeff(&padded(a, m), &padded(b, m), n)
            };
            same_poly(&format!("x^{} y^{}", a.pretty(), b.pretty()), &lhs, &rhs)?;
        }
    }
    Ok(())
}

fn omega(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for size in 0..=grid.sizemax {
            out.push(Case::new(format!("n={n} skew shapes with {size} outer cells"), move || {
                for l in Partition::all(size) {
                    for mu in l.subpartitions() {
                        if (size - mu.size()) % n != 0 || n_core(&l, n) != n_core(&mu, n) {
                            continue;
                        }
                        let lhs = omega_n(&g_skew(&l, &mu, n), n);
                        let rhs = g_skew(&l.conjugate(), &mu.conjugate(), n);
                        same(&format!("{}/{}", l.pretty(), mu.pretty()), &lhs, &rhs)?;
                    }
                }
                Ok(())
            }));
        }
        for d in 0..=grid.degree {
            out.push(Case::new(format!("n={n} algebra and plethysm degree={d}"), move || omega_algebra(n, d)));
        }
    }
    out
}

fn omega_algebra(n: usize, d: usize) -> Outcome {
    let c = LaurentPoly::from_terms([(1, 1), (-3, 2)]);
    let shift = ((n - 1) * d) as i64;
    for l in Partition::all(d) {
        for f in [SymFunc::term(Basis::Schur, l.clone(), c.clone()), SymFunc::p(l.clone()).scale(&c)] {
            same("involution", &omega_n(&omega_n(&f, n), n), &f)?;
        }
        let s = SymFunc::s(l.clone());
        let lhs = omega_n(&upsilon(&s, n), n).scale(&LaurentPoly::q_pow(2 * shift));
        same("twisted commutation", &lhs, &upsilon(&omega_n(&s, n), n))?;
        let rhs = upsilon(&SymFunc::s(l.conjugate()), n).scale(&LaurentPoly::q_pow(-shift));
        same("plethystic Schur", &omega_n(&upsilon(&s, n), n), &rhs)?;
    }
    for a in 0..=d {
        for l in Partition::all(a) {
            for m in Partition::all(d - a) {
                let (s, t) = (SymFunc::s(l.clone()), SymFunc::s(m));
                let prod = omega_n(&(&s * &t), n);
                same("multiplicative", &prod, &(&omega_n(&s, n) * &omega_n(&t, n)))?;
            }
        }
    }
    Ok(())
}

fn symmetry(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for l in grid.partitions() {
            out.push(Case::new(format!("n={n} lambda={}", l.pretty()), move || {
                let core = n_core(&l, n);
                let shape = SkewShape { outer: l.clone(), inner: core.clone() };
                let d = (l.size() - core.size()) / n;
                let mut sorted_cache: HashMap<Partition, LaurentPoly> = HashMap::new();
                for a in compositions(d) {
                    let p = Partition::from_unsorted(a.clone());
                    let want = sorted_cache.entry(p.clone()).or_insert_with(|| k_poly(&shape, n, p.parts())).clone();
                    same_poly(&format!("weight {a:?}"), &k_poly(&shape, n, &a), &want)?;
                }
                Ok(())
            }));
        }
    }
    out
}

fn heisenberg(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    let kmax = grid.kmax as i64;
    for &n in &grid.n {
        for l in grid.partitions() {
            let with_f = l.size() <= 6;
            out.push(Case::new(format!("n={n} lambda={}", l.pretty()), move || {
                let v = FockVector::basis(n, l.clone());
                for k in 1..=kmax {
                    for m in 1..=kmax {
                        let lhs = &apply_b(k, &apply_b(-m, &v)) - &apply_b(-m, &apply_b(k, &v));
                        let rhs = if k == m {
                            let scalar = LaurentPoly::geometric_sum(n, k as usize).bar_q();
                            v.scale(&scalar.scale(&crate::qcoeff::rat(k)))
                        } else {
                            FockVector::zero(n)
                        };
                        same_vec(&format!("[B_{k}, B_-{m}]"), &lhs, &rhs)?;
                    }
                    if with_f {
                        for i in 0..n {
                            let a = apply_b(k, &apply_f(i, &v));
                            let b = apply_f(i, &apply_b(k, &v));
                            same_vec(&format!("[B_{k}, f_{i}]"), &a, &b)?;
                        }
                    }
                }
                Ok(())
            }));
        }
    }
    out
}

fn newton(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for l in grid.partitions() {
            for k in grid.ks() {
                let l = l.clone();
                out.push(Case::new(format!("n={n} lambda={} k={k}", l.pretty()), move || newton_cell(n, &l, k)));
            }
        }
    }
    out
}

fn newton_cell(n: usize, l: &Partition, k: usize) -> Outcome {
    let v = FockVector::basis(n, l.clone());
    let scale = |w: &FockVector, c: i64| w.scale(&LaurentPoly::from_int(c));
    let pow = |op: &dyn Fn(usize, &FockVector) -> FockVector, j: usize, w: &FockVector| {
        if j == 0 {
            w.clone()
        } else {
            op(j, w)
        }
    };
    let mut h_side = FockVector::zero(n);
    let mut e_side = FockVector::zero(n);
    let mut lower = FockVector::zero(n);
    let mut mixed = FockVector::zero(n);
    for i in 1..=k {
        let raised = apply_b(-(i as i64), &v);
        h_side = &h_side + &pow(&apply_v, k - i, &raised);
        let sign = if i % 2 == 1 { 1 } else { -1 };
        e_side = &e_side + &scale(&pow(&apply_v_tilde, k - i, &raised), sign);
        lower = &lower + &pow(&apply_u, k - i, &apply_b(i as i64, &v));
    }
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        mixed = &mixed + &scale(&pow(&apply_v, k - i, &pow(&apply_v_tilde, i, &v)), sign);
    }
    let kk = k as i64;
    same_vec("k V_k", &scale(&apply_v(k, &v), kk), &h_side)?;
    same_vec("k Ṽ_k", &scale(&apply_v_tilde(k, &v), kk), &e_side)?;
    same_vec("k U_k", &scale(&apply_u(k, &v), kk), &lower)?;
    same_vec("Σ ±V Ṽ", &mixed, &FockVector::zero(n))
}

fn littlewood_richardson(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for size in 1..=grid.kmax {
            for lam in Partition::all(size) {
                for mu in grid.partitions() {
                    let lam = lam.clone();
                    let label = format!("n={n} lambda={} mu={}", lam.pretty(), mu.pretty());
                    out.push(Case::new(label, move || {
                        let lhs = &upsilon(&SymFunc::s(lam.clone()), n) * &g(&mu, n);
                        let rhs = combo(
                            reach(&mu, n, lam.size(), true)
                                .into_iter()
                                .map(|nu| (g_skew(&nu, &mu, n).coeff(&lam), g(&nu, n))),
                        );
                        same("plethystic Schur times G", &lhs, &rhs)
                    }));
                }
            }
        }
    }
    out
}

fn skew_cauchy(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for mu in grid.partitions() {
            for a in 0..=grid.degree {
                let mu = mu.clone();
                out.push(Case::new(format!("n={n} mu={} y-degree={a}", mu.pretty()), move || {
                    let g_mu = g(&mu, n);
                    let targets = reach(&mu, n, a, true);
                    for beta in Partition::all(a) {
                        let kernel = beta.parts().iter().fold(SymFunc::one(Basis::Schur), |acc, &b| &acc * &bold_h(b, n));
                        let lhs = &kernel * &g_mu;
                        let rhs = combo(targets.iter().map(|l| {
                            let s = SkewShape { outer: l.clone(), inner: mu.clone() };
                            (k_poly(&s, n, beta.parts()), g(l, n))
                        }));
                        same(&format!("coefficient of m{}(Y)", beta.pretty()), &lhs, &rhs)?;
                    }
                    Ok(())
                }));
            }
        }
    }
    out
}

fn principal(n: usize) -> Vec<LaurentPoly> {
    (0..n).map(|k| LaurentPoly::q_pow(2 * k as i64)).collect()
}

fn mspin_identity(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for k in grid.ks() {
            out.push(Case::new(format!("n={n} k={k}"), move || {
                let ones = vec![1; k];
                let mut lhs = LaurentPoly::zero();
                for l in with_core(&Partition::empty(), n, k) {
                    if l.len() > n {
                        continue;
                    }
                    let shape = SkewShape::straight(l.clone());
                    let top = mspin(&shape, n).expect("tileable");
                    lhs += &k_poly(&shape, n, &ones).shift(top as i64);
                }
                let one_k = Partition::from(&ones[..]);
                let mut rhs = LaurentPoly::zero();
                for mu in Partition::all(k) {
                    let f = kostka_number(&mu, &one_k);
                    rhs += &specialize(&SymFunc::s(mu), &principal(n)).scale(&crate::qcoeff::rat(f));
                }
                same_poly("spin sum", &lhs, &rhs)
            }));
        }
    }
    out
}

fn phican(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for core in cores(n) {
            for size in 1..=grid.kmax {
                for lam in Partition::all(size) {
                    let core = core.clone();
                    let label = format!("n={n} core={} lambda={}", core.pretty(), lam.pretty());
                    out.push(Case::new(label, move || {
                        let target = upsilon(&SymFunc::s(lam.clone()), n);
                        let shapes = with_core(&core, n, lam.size());
                        let c: Vec<(Partition, LaurentPoly)> =
                            shapes.iter().map(|mu| (mu.clone(), g_skew(mu, &core, n).coeff(&lam))).collect();
                        let first = combo(c.iter().map(|(mu, x)| (x.clone(), g_skew(mu, &core, n))));
                        same("through G", &target, &first)?;
                        let mut second = SymFunc::zero(Basis::Schur);
                        for (mu, x) in &c {
                            for (nu, y) in g_skew(mu, &core, n).coeffs() {
                                second.add_term(nu.clone(), &(x * y));
                            }
                        }
                        same("through Schur", &target, &second)?;
                        let fock = apply_s(&lam, &FockVector::basis(n, core.clone()));
                        let want = FockVector::from_terms(n, c.iter().map(|(mu, x)| (mu.clone(), x.subst_neg_qinv())));
                        same_vec("Fock coefficients", &fock, &want)
                    }));
                }
            }
        }
    }
    out
}

fn projection(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for l in grid.partitions() {
            for k in grid.ks() {
                let l = l.clone();
                out.push(Case::new(format!("n={n} lambda={} k={k}", l.pretty()), move || {
                    let v = FockVector::basis(n, l.clone());
                    let g_l = g(&l, n);
                    let raise = &upsilon(&SymFunc::p_k(k), n) * &g_l;
                    same("raising", &phi(&apply_b(-(k as i64), &v)), &raise)?;
                    same("lowering", &phi(&apply_b(k as i64, &v)), &perp(&SymFunc::p_k(k), &g_l))
                }));
            }
        }
        for core in cores(n) {
            for size in 0..=3 {
                for lam in Partition::all(size) {
                    let core = core.clone();
                    out.push(Case::new(format!("n={n} core={} S_{}", core.pretty(), lam.pretty()), move || {
                        let v = FockVector::basis(n, core.clone());
                        let want = upsilon(&SymFunc::s(lam.clone()), n);
                        same("homogeneous route", &phi(&apply_s(&lam, &v)), &want)?;
                        same("character route", &phi(&apply_s_via_characters(&lam, &v)), &want)
                    }));
                }
            }
        }
    }
    out
}

fn positivity(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for size in 0..=grid.sizemax {
            out.push(Case::new(format!("n={n} size={size}"), move || {
                for l in Partition::all(size) {
                    for (nu, c) in g(&l, n).coeffs() {
                        if !c.is_nonneg_integral() {
                            return Err(format!("lambda={} s{}: {c}", l.pretty(), nu.pretty()));
                        }
                    }
                }
                Ok(())
            }));
        }
    }
    out
}

fn at_one(f: &SymFunc) -> SymFunc {
    f.convert(Basis::Schur).map_coeffs(|_, c| LaurentPoly::constant(c.eval_at_one()))
}

fn q_one(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for size in 0..=grid.sizemax {
            out.push(Case::new(format!("n={n} size={size}"), move || {
                for l in Partition::all(size) {
                    let product = n_quotient(&l, n)
                        .into_iter()
                        .fold(SymFunc::one(Basis::Schur), |acc, p| &acc * &SymFunc::s(p));
                    same(&format!("lambda={}", l.pretty()), &at_one(&g(&l, n)), &product)?;
                }
                Ok(())
            }));
        }
    }
    let small = grid.sizemax.min(6);
    for nu in Partition::up_to(small) {
        out.push(Case::new(format!("n=1 nu={}", nu.pretty()), move || classical_cell(&nu, 3)));
    }
    out
}

fn classical_cell(nu: &Partition, kmax: usize) -> Outcome {
    same("Schur", &g(nu, 1), &SymFunc::s(nu.clone()))?;
    for k in 1..=kmax {
        let strips = add_horizontal_strips(nu, 1, k);
        if strips.iter().any(|(_, s)| *s != 0) {
            return Err(format!("nonzero spin for k={k}"));
        }
        let got: BTreeSet<Partition> = strips.into_iter().map(|(m, _)| m).collect();
        let want: BTreeSet<Partition> = classical_add_strips(nu, k).into_iter().collect();
        if got != want {
            return Err(format!("horizontal strips of size {k}: {got:?} vs {want:?}"));
        }
        let mut rhs = SymFunc::zero(Basis::Schur);
        for mu in Partition::all(nu.size() + k).into_iter().filter(|m| m.contains(nu)) {
            let sign = classical_border_strip_sum(&mu, nu);
            let x = x_poly(&SkewShape { outer: mu.clone(), inner: nu.clone() }, 1, &[k]);
            same_poly(&format!("border strip {}/{}", mu.pretty(), nu.pretty()), &x, &LaurentPoly::from_int(sign))?;
            rhs.add_term(mu, &LaurentPoly::from_int(sign));
        }
        same("classical p_k", &(&SymFunc::p_k(k) * &SymFunc::s(nu.clone())), &rhs)?;
    }
    Ok(())
}

/// Semistandard domino tableaux with empty core, at most `max` dominoes and labels at most `labels`.
fn small_domino_tableaux(max: usize, labels: usize) -> Vec<DominoTableau> {
    let mut out = Vec::new();
    for d in 0..=max {
        for l in with_core(&Partition::empty(), 2, d) {
            for t in enumerate_tableaux(&SkewShape::straight(l), 2, labels) {
                out.push(DominoTableau::from_ribbon_tableau(&t).expect("enumerated tableau"));
            }
        }
    }
    out
}

fn domino(grid: &Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for len in 0..=3 {
        out.push(Case::new(format!("bijection length={len} letters<=2"), move || domino_bijection(len, 2, &Partition::empty())));
        let core = Partition::from([1]);
        out.push(Case::new(format!("bijection length={len} letters<=2 core=(1)"), move || domino_bijection(len, 2, &core)));
    }
    for len in 4..=grid.kmax {
        out.push(Case::new(format!("bijection length={len} letters<=3"), move || domino_bijection(len, 3, &Partition::empty())));
    }
    out.push(Case::new("increasing insertion, <=3 dominoes, labels<=3", || {
        let letters: Vec<(u8, usize)> = (0..=1).flat_map(|c| (1..=3).map(move |j| (c, j))).collect();
        for t in small_domino_tableaux(3, 3) {
            for &d1 in &letters {
                for &d2 in &letters {
                    if !check_increasing_insertion(&t, d1, d2) {
                        return Err(format!("T =\n{}\nd1 = {d1:?}, d2 = {d2:?}", t.grid()));
                    }
                }
            }
        }
        Ok(())
    }));
    out.push(Case::new("pieri, <=3 dominoes, labels<=3, up to 3 increasing insertions", || {
        let mut letters: Vec<(u8, usize)> = (0..=1).flat_map(|c| (1..=3).map(move |j| (c, j))).collect();
        letters.sort_by_key(|&(c, j)| domino_order_key(c, j));
        for t in small_domino_tableaux(3, 3) {
            let mut stack: Vec<(DominoTableau, usize, usize)> = vec![(t.clone(), 0, 0)];
            while let Some((cur, from, k)) = stack.pop() {
                if k > 0 {
                    let shape = SkewShape { outer: cur.shape(), inner: t.shape() };
                    if horizontal_strip(&shape, 2).is_none() {
                        return Err(format!("T =\n{}\nbecomes\n{}", t.grid(), cur.grid()));
                    }
                }
                if k < 3 {
                    for (idx, &(c, j)) in letters.iter().enumerate().skip(from) {
                        stack.push((cur.insert(c, j), idx, k + 1));
                    }
                }
            }
        }
        Ok(())
    }));
    for d in 0..=grid.degree {
        out.push(Case::new(format!("cauchy degree={d} vars=2+2"), move || domino_cauchy(d)));
    }
    out
}

fn domino_bijection(len: usize, letters: usize, core: &Partition) -> Outcome {
    let words = ColoredBiword::all(len, letters, letters);
    let mut seen: HashSet<(DominoTableau, DominoTableau)> = HashSet::with_capacity(words.len());
    for w in &words {
        let (p, q) = rsk_with_core(w, core);
        let fail = |why: &str| Err(format!("{why} for biword [{}]", w.to_string().replace('\n', "; ")));
        if DominoTableau::new(p.core().clone(), p.dominoes().to_vec()).is_err()
            || DominoTableau::new(q.core().clone(), q.dominoes().to_vec()).is_err()
        {
            return fail("non-semistandard tableau");
        }
        if p.shape() != q.shape() {
            return fail("shape mismatch");
        }
        let mut bottom = vec![0; letters];
        let mut middle = vec![0; letters];
        for t in w.triples() {
            bottom[t.j - 1] += 1;
            middle[t.i - 1] += 1;
        }
        if p.weight(letters) != bottom || q.weight(letters) != middle {
            return fail("weight mismatch");
        }
        if w.total_color() != p.spin() + q.spin() {
            return fail("color-to-spin");
        }
        match inverse_rsk(&p, &q) {
            Ok(back) if back == *w => {}
            Ok(_) | Err(_) => return fail("round trip"),
        }
        seen.insert((p, q));
    }
    if seen.len() != words.len() {
        return Err(format!("{} biwords gave {} distinct pairs", words.len(), seen.len()));
    }
    Ok(())
}

fn domino_cauchy(d: usize) -> Outcome {
    let mut lhs: BTreeMap<(Vec<usize>, Vec<usize>), LaurentPoly> = BTreeMap::new();
    for w in ColoredBiword::all(d, 2, 2) {
        let (p, q) = rsk_with_core(&w, &Partition::empty());
        *lhs.entry((p.weight(2), q.weight(2))).or_default() += &q_pow(p.spin() + q.spin());
    }
    let shapes = with_core(&Partition::empty(), 2, d);
    for a in weak_pairs(d) {
        for b in weak_pairs(d) {
            let rhs: LaurentPoly = shapes
                .iter()
                .map(|l| {
                    let s = SkewShape::straight(l.clone());
                    &k_poly(&s, 2, &a) * &k_poly(&s, 2, &b)
                })
                .sum();
            let got = lhs.get(&(a.clone(), b.clone())).cloned().unwrap_or_default();
            same_poly(&format!("x^{a:?} y^{b:?}"), &got, &rhs)?;
        }
    }
    Ok(())
}
