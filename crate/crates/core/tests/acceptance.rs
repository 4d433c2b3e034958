//! Acceptance suite: one test per criterion. Each prints a single
//! `criterion NN ... PASS|FAIL` line (visible with `--nocapture`) and fails
//! the build if its checks do not all hold.

use ribbonlab::domino::{rsk, ColoredBiword, Domino, DominoTableau, Triple};
use ribbonlab::partitions::{add_horizontal_strips, n_quotient};
use ribbonlab::ribbonfn::{ribbon_function_straight, x_poly};
use ribbonlab::symfunc::bold_h;
use ribbonlab::verify::{run, Grid, Identity};
use ribbonlab::{LaurentPoly, Partition, SkewShape, SymFunc};

fn p(parts: &[usize]) -> Partition {
    Partition::from(parts)
}

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

type Check = Result<(), String>;

fn report(number: u32, title: &str, checks: Vec<(&str, Check)>) {
    let failures: Vec<String> = checks
        .into_iter()
        .filter_map(|(name, r)| r.err().map(|e| format!("{name}: {e}")))
        .collect();
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number:02} {title}: {status}");
    for f in &failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {number} failed: {failures:#?}");
}

fn grid(id: Identity, n: &[usize], edit: impl FnOnce(&mut Grid)) -> Grid {
    let mut g = Grid::for_identity(id);
    g.n = n.to_vec();
    edit(&mut g);
    g
}

fn verified(id: Identity, g: Grid) -> Check {
    let r = run(id, &g, None);
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(format!("{} at {}: {}", id, c.params, c.counterexample.clone().unwrap_or_default())),
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, want {want:?}"))
    }
}

fn four_step_insertion() -> DominoTableau {
    let mut t = DominoTableau::empty(Partition::empty());
    for (c, j) in [(1, 3), (0, 4), (0, 2), (1, 1)] {
        t = t.insert(c, j);
    }
    t
}

#[test]
fn criterion_01_worked_examples() {
    let g = |l: &[usize]| ribbon_function_straight(&p(l), 2);
    let h2 = SymFunc::h_k(2);
    let e2 = SymFunc::e_k(2);
    let q = LaurentPoly::q();
    let q2 = LaurentPoly::q_pow(2);
    let dominoes = (|| {
        eq(g(&[4]), h2.clone())?;
        eq(g(&[3, 1]), h2.scale(&q))?;
        eq(g(&[2, 1, 1]), e2.scale(&q))?;
        eq(g(&[2, 2]), &h2.scale(&q2) + &e2)?;
        eq(g(&[1, 1, 1, 1]), e2.scale(&q2))
    })();

    let border = eq(
        x_poly(&SkewShape::new(p(&[5, 5, 2]), p(&[2])).unwrap(), 2, &[5]),
        poly(&[(5, 1), (3, -2), (1, 1)]),
    );

    let pieri = (|| {
        let expected = [
            (p(&[9, 1]), 0),
            (p(&[6, 2, 2]), 1),
            (p(&[4, 4, 2]), 2),
            (p(&[6, 1, 1, 1, 1]), 2),
            (p(&[3, 3, 2, 1, 1]), 3),
            (p(&[3, 2, 2, 2, 1]), 4),
        ];
        let mut strips = add_horizontal_strips(&p(&[3, 1]), 3, 2);
        strips.sort();
        let mut want = expected.to_vec();
        want.sort();
        eq(strips, want)?;
        let lhs = &bold_h(2, 3) * &ribbon_function_straight(&p(&[3, 1]), 3);
        let mut rhs = SymFunc::zero(ribbonlab::Basis::Schur);
        for (mu, s) in &expected {
            rhs = &rhs + &ribbon_function_straight(mu, 3).scale(&LaurentPoly::q_pow(*s as i64));
        }
        eq(lhs, rhs)
    })();

    let quotient = eq(n_quotient(&p(&[7, 6, 4, 3, 1]), 3), vec![p(&[3]), p(&[2, 2]), p(&[])]);

    let insertion = (|| {
        let t = four_step_insertion();
        eq(t.shape(), p(&[3, 3, 2]))?;
        eq(
            t.dominoes().to_vec(),
            vec![
                (1, Domino::vertical(0, 0)),
                (2, Domino::vertical(0, 1)),
                (3, Domino::horizontal(2, 0)),
                (4, Domino::vertical(0, 2)),
            ],
        )
    })();

    report(
        1,
        "worked examples",
        vec![
            ("domino ribbon functions", dominoes),
            ("border strip polynomial", border),
            ("n=3 Pieri expansion", pieri),
            ("3-quotient", quotient),
            ("four-step domino insertion", insertion),
        ],
    );
}

#[test]
fn criterion_02_symmetry() {
    let g = grid(Identity::Symmetry, &[2, 3], |g| g.sizemax = 12);
    report(2, "weight symmetry of spin polynomials", vec![("symmetry", verified(Identity::Symmetry, g))]);
}

#[test]
fn criterion_03_murnaghan_nakayama() {
    let literal = (|| {
        let expected = [
            (p(&[4]), poly(&[(0, 1)])),
            (p(&[3, 1]), poly(&[(1, 1)])),
            (p(&[2, 2]), poly(&[(2, 1), (0, -1)])),
            (p(&[2, 1, 1]), poly(&[(1, -1)])),
            (p(&[1, 1, 1, 1]), poly(&[(2, -1)])),
        ];
        for (mu, want) in &expected {
            eq(x_poly(&SkewShape::straight(mu.clone()), 2, &[2]), want.clone())?;
        }
        let lhs = SymFunc::p_k(2).scale(&poly(&[(0, 1), (4, 1)]));
        let mut rhs = SymFunc::zero(ribbonlab::Basis::Schur);
        for (mu, c) in &expected {
            rhs = &rhs + &ribbon_function_straight(mu, 2).scale(c);
        }
        eq(lhs, rhs)
    })();
    let raise = grid(Identity::Mn, &[2, 3], |g| {
        g.kmax = 3;
        g.sizemax = 8;
    });
    let lower = grid(Identity::LoweringMn, &[2, 3], |g| {
        g.kmax = 3;
        g.sizemax = 8;
    });
    report(
        3,
        "ribbon Murnaghan-Nakayama rule",
        vec![
            ("empty shape, k=2, n=2", literal),
            ("raising", verified(Identity::Mn, raise)),
            ("lowering", verified(Identity::LoweringMn, lower)),
        ],
    );
}

#[test]
fn criterion_04_pieri() {
    let checks = [Identity::Pieri, Identity::DualPieri, Identity::LoweringPieri]
        .into_iter()
        .map(|id| {
            let g = grid(id, &[2, 3], |g| {
                g.kmax = 3;
                g.sizemax = 8;
            });
            (id.name(), verified(id, g))
        })
        .collect();
    report(4, "Pieri and dual Pieri, raising and lowering", checks);
}

#[test]
fn criterion_05_cauchy() {
    let checks = [Identity::Cauchy, Identity::DualCauchy]
        .into_iter()
        .map(|id| {
            let g = grid(id, &[2, 3], |g| {
                g.degree = 3;
                g.vars = 3;
            });
            (id.name(), verified(id, g))
        })
        .collect();
    report(5, "Cauchy and dual Cauchy kernels", checks);
}

#[test]
fn criterion_06_heisenberg() {
    let g = grid(Identity::Heisenberg, &[2, 3], |g| {
        g.kmax = 3;
        g.sizemax = 8;
    });
    report(6, "Heisenberg commutators", vec![("heisenberg", verified(Identity::Heisenberg, g))]);
}

#[test]
fn criterion_07_newton_relations() {
    let g = grid(Identity::MnPieriEquiv, &[2, 3], |g| g.kmax = 4);
    report(7, "Newton relations on the Fock space", vec![("mn-pieri-equiv", verified(Identity::MnPieriEquiv, g))]);
}

#[test]
fn criterion_08_involution() {
    let g = grid(Identity::Omega, &[2, 3], |g| {
        g.sizemax = 10;
        g.degree = 4;
    });
    report(8, "ribbon involution", vec![("omega", verified(Identity::Omega, g))]);
}

#[test]
fn criterion_09_projection() {
    let phi = grid(Identity::Phi, &[2, 3], |g| g.kmax = 3);
    let can = grid(Identity::Phican, &[2, 3], |g| g.kmax = 3);
    report(
        9,
        "projection of the Fock space",
        vec![("phi", verified(Identity::Phi, phi)), ("phican", verified(Identity::Phican, can))],
    );
}

#[test]
fn criterion_10_qlr_positivity() {
    let g = grid(Identity::QlrPositivity, &[2, 3], |g| g.sizemax = 12);
    report(10, "q-LR positivity", vec![("qlr-positivity", verified(Identity::QlrPositivity, g))]);
}

#[test]
fn criterion_11_domino() {
    let g = grid(Identity::DominoRsk, &[2], |g| {
        g.kmax = 5;
        g.degree = 3;
    });
    let recording = (|| {
        let w = ColoredBiword::new(vec![
            Triple { c: 1, i: 1, j: 3 },
            Triple { c: 0, i: 2, j: 4 },
            Triple { c: 0, i: 3, j: 2 },
            Triple { c: 1, i: 4, j: 1 },
        ])
        .unwrap();
        let (pt, qt) = rsk(&w);
        eq(pt, four_step_insertion())?;
        eq((w.total_color(), qt.spin()), (4, 1))
    })();
    report(
        11,
        "domino insertion",
        vec![("four-step word with recording", recording), ("domino-rsk", verified(Identity::DominoRsk, g))],
    );
}

#[test]
fn criterion_12_mspin_identity() {
    let g = grid(Identity::MspinIdentity, &[2, 3], |g| g.kmax = 3);
    report(12, "maximal spin identity", vec![("mspin-identity", verified(Identity::MspinIdentity, g))]);
}

#[test]
fn criterion_13_q_equals_one() {
    let g = grid(Identity::QOne, &[2, 3], |g| g.sizemax = 12);
    report(13, "q=1 and n=1 degenerations", vec![("q-one", verified(Identity::QOne, g))]);
}
