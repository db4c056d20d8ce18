//! Acceptance suite: one test per headline criterion, each printing a
//! PASS line with its measurements (run with `--nocapture` to see them).
//!
//! Expected values fall into three groups: worked-example values checked
//! against the literal expansions, derived values frozen from the
//! independent cofactor-expansion oracle in `common`, and randomized law
//! checks with a fixed seed.

mod common;

use std::time::Instant;

use num_traits::{One, Zero};
use rand::Rng;

use common::*;
use projcad::delineability::{
    cell_bounds_1d, check_finite_set, project_classical, project_projective, CellBound,
    ProjectionMode, Provenance,
};
use projcad::elimination::{discriminant_fixed, resultant_fixed, resultant_fixed_uni};
use projcad::forms::{
    homogenize, homogenize_wrt, moebius_transform, moebius_transform_uni, pullback, pullback_wrt,
    Matrix2,
};
use projcad::poly::{var_names, MultiPoly, UniPoly};
use projcad::projective::ProjPoint;
use projcad::rat::{rat, ratio, Rat};
use projcad::roots::{projective_roots, RootLocation};
use projcad::tracking::{track_roots, BasePath, TrackOptions, TrackStatus};

fn poly2(terms: &[(i64, [u32; 2])]) -> MultiPoly {
    MultiPoly::from_terms(
        &var_names(&["x1", "x2"]),
        terms.iter().map(|&(c, e)| (e.to_vec(), rat(c))),
    )
}

fn poly3(terms: &[(i64, [u32; 3])]) -> MultiPoly {
    MultiPoly::from_terms(
        &var_names(&["x1", "x2", "x3"]),
        terms.iter().map(|&(c, e)| (e.to_vec(), rat(c))),
    )
}

fn circle_poly() -> MultiPoly {
    poly2(&[(1, [2, 0]), (1, [0, 2]), (-1, [0, 0])])
}

fn hyperbola_poly() -> MultiPoly {
    poly2(&[(1, [1, 1]), (-1, [0, 0])])
}

fn cubic_hyperbola_poly() -> MultiPoly {
    &hyperbola_poly() * &poly2(&[(1, [0, 1]), (1, [3, 0])])
}

/// `(1-x1)x3^4 + 4x2·x3^3 + (2+6x1)x3^2 - 4x2·x3 + (1-x1)`
fn quartic_circle_poly() -> MultiPoly {
    poly3(&[
        (1, [0, 0, 4]),
        (-1, [1, 0, 4]),
        (4, [0, 1, 3]),
        (2, [0, 0, 2]),
        (6, [1, 0, 2]),
        (-4, [0, 1, 1]),
        (1, [0, 0, 0]),
        (-1, [1, 0, 0]),
    ])
}

#[test]
fn criterion_1_shear_transform_exact() {
    let start = Instant::now();
    let p = cubic_hyperbola_poly();
    let a = Matrix2::from_i64(1, 0, 1, 1).unwrap();
    let got = moebius_transform(&p, &a, 2).unwrap();
    let expected = &poly2(&[(1, [1, 1]), (-1, [0, 1]), (-1, [0, 0])])
        * &poly2(&[(1, [0, 1]), (1, [3, 1]), (1, [3, 0])]);
    assert_eq!(got, expected, "exact canonical-form equality");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "runtime bound 1 s, got {elapsed:?}");
    println!("PASS criterion 1: shear transform exact in {elapsed:?}");
}

#[test]
fn criterion_2_quartic_discriminant_frozen_constant() {
    let start = Instant::now();
    let p = quartic_circle_poly();
    let disc = discriminant_fixed(&p, 4).unwrap();

    // frozen golden: c = 1, i.e. the discriminant is exactly
    // 2^14 (x1^2 + x2^2 - 1)^2 (x1^2 + x2^2); the constant was calibrated
    // once with the univariate oracle and is re-derived below
    let base = var_names(&["x1", "x2"]);
    let sum_sq = MultiPoly::from_terms(&base, [(vec![2, 0], rat(1)), (vec![0, 2], rat(1))]);
    let circ = &sum_sq - &MultiPoly::constant(&base, rat(1));
    let expected = (&(&circ * &circ) * &sum_sq).scale(&rat(1 << 14));
    assert_eq!(disc, expected);

    // independent oracle cross-check of the constant at sample points:
    // evaluating first and taking the classical univariate discriminant
    // must agree with evaluating the symbolic result
    for x0 in [
        vec![rat(2), rat(3)],
        vec![rat(0), rat(-2)],
        vec![ratio(1, 2), rat(1)],
    ] {
        let e = p.evaluate_partial(&x0).unwrap();
        assert_eq!(e.degree(), Some(4));
        let via_oracle = naive_discriminant(&e, 4);
        let via_symbolic = disc.evaluate(&x0).unwrap();
        assert_eq!(via_oracle, via_symbolic, "constant calibration at {x0:?}");
    }

    // order of vanishing 2 at exact rational circle points
    for (a, b) in [
        (rat(1), rat(0)),
        (rat(0), rat(1)),
        (ratio(3, 5), ratio(4, 5)),
        (ratio(5, 13), ratio(12, 13)),
    ] {
        assert_eq!(disc.order_of_vanishing(&[a, b]).unwrap(), 2);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "runtime bound 10 s, got {elapsed:?}");
    println!("PASS criterion 2: quartic discriminant (c = 1) and orders in {elapsed:?}");
}

#[test]
fn criterion_3_transform_invariance_laws() {
    let start = Instant::now();
    let mut rng = rng(0x6b3a);
    let mut det_pow = |a: &Matrix2, e: usize| {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc *= a.det();
        }
        acc
    };
    for trial in 0..50 {
        let base_dim = 1 + (trial % 2);
        let p_deg = rng.gen_range(1..=4usize);
        let q_deg = rng.gen_range(1..=4usize);
        let p = rand_poly_exact_degree(&mut rng, base_dim, p_deg);
        let q = rand_poly_exact_degree(&mut rng, base_dim, q_deg);
        let a = rand_matrix(&mut rng);

        let tp = moebius_transform(&p, &a, p_deg).unwrap();
        let tq = moebius_transform(&q, &a, q_deg).unwrap();
        let lhs = resultant_fixed(&tp, &tq, p_deg, q_deg).unwrap();
        let rhs = resultant_fixed(&p, &q, p_deg, q_deg)
            .unwrap()
            .scale(&det_pow(&a, p_deg * q_deg));
        assert_eq!(lhs, rhs, "resultant law, trial {trial}");

        if p_deg >= 2 {
            let lhs = discriminant_fixed(&tp, p_deg).unwrap();
            let rhs = discriminant_fixed(&p, p_deg)
                .unwrap()
                .scale(&det_pow(&a, p_deg * (p_deg - 1)));
            assert_eq!(lhs, rhs, "discriminant law, trial {trial}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "runtime bound 60 s, got {elapsed:?}");
    println!("PASS criterion 3: 50 exact invariance instances in {elapsed:?}");
}

#[test]
fn criterion_4_single_cell_widening() {
    let start = Instant::now();
    let family = [circle_poly(), hyperbola_poly()];
    let s = ratio(-1, 2);
    let classical = cell_bounds_1d(&family, &s, ProjectionMode::Classical).unwrap();
    assert_eq!(classical.lo, CellBound::Exact(rat(-1)));
    assert_eq!(classical.hi, CellBound::Exact(rat(0)));
    let projective = cell_bounds_1d(&family, &s, ProjectionMode::Projective).unwrap();
    assert_eq!(projective.lo, CellBound::Exact(rat(-1)));
    assert_eq!(projective.hi, CellBound::Exact(rat(1)));

    // oracle for the derived endpoints: the projection polynomials are
    // x1^2 - 1 (discriminant), x1 (leading coefficient), and the resultant
    // x1^4 - x1^2 + 1, which the naive Sylvester oracle confirms and which
    // has no real roots (as a quadratic in x1^2 its minimum is 3/4)
    let res = resultant_fixed(&circle_poly(), &hyperbola_poly(), 2, 1).unwrap();
    for x in [rat(-2), ratio(-1, 2), rat(0), ratio(3, 2)] {
        let f = circle_poly().evaluate_partial(&[x.clone()]).unwrap();
        let g = hyperbola_poly().evaluate_partial(&[x.clone()]).unwrap();
        assert_eq!(naive_resultant(&f, &g, 2, 1), res.evaluate(&[x]).unwrap());
    }
    let t = res.to_uni();
    for x in [rat(-2), rat(-1), rat(0), rat(1), rat(2)] {
        assert!(t.eval(&x) > Rat::zero());
    }
    assert!(projcad::roots::isolate_real_roots(&t).unwrap().is_empty());
    let elapsed = start.elapsed();
    println!("PASS criterion 4: cell (-1,0) classical, (-1,1) projective in {elapsed:?}");
}

#[test]
fn criterion_5_monodromy_certificate() {
    let start = Instant::now();
    let p = quartic_circle_poly();
    let opts = TrackOptions::default();
    let res720 = track_roots(&p, &BasePath::unit_circle(720).unwrap(), &opts).unwrap();
    assert_eq!(res720.verdict.status, TrackStatus::Violation);
    assert_eq!(res720.verdict.branch_count, 2);
    assert_eq!(res720.verdict.multiplicities, vec![2, 2]);
    assert_eq!(res720.verdict.monodromy, Some(vec![1, 0]), "transposition");
    let res1440 = track_roots(&p, &BasePath::unit_circle(1440).unwrap(), &opts).unwrap();
    assert_eq!(res1440.verdict.monodromy, Some(vec![1, 0]), "stable under doubling");
    assert_eq!(res1440.verdict.status, TrackStatus::Violation);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "runtime bound 30 s, got {elapsed:?}");
    println!("PASS criterion 5: monodromy (1 2) at N=720 and N=1440 in {elapsed:?}");
}

#[test]
fn criterion_6_counterexample_suite() {
    let start = Instant::now();
    // finite base set {0, 1}
    let f2 = poly2(&[(1, [1, 1]), (-1, [0, 1]), (-1, [0, 0])]);
    let p = &hyperbola_poly() * &(&f2 * &f2);
    let v = check_finite_set(&p, &[vec![rat(0)], vec![rat(1)]]).unwrap();
    assert!(!v.delineable);
    assert!(v.projectively_delineable);

    // x1^2 x2^2 + 1 on [-1, 1]: violation witnessed within 2/N of 0
    let n = 256usize;
    let q = poly2(&[(1, [2, 2]), (1, [0, 0])]);
    let path = BasePath::segment(vec![rat(-1)], vec![rat(1)], n).unwrap();
    let res = track_roots(&q, &path, &TrackOptions::default()).unwrap();
    assert_eq!(res.verdict.status, TrackStatus::Violation);
    let witness = res.verdict.witness.unwrap();
    assert!(
        witness.abs() < 2.0 / n as f64,
        "witness |t| = {} must be under 2/N = {}",
        witness.abs(),
        2.0 / n as f64
    );
    assert_eq!(res.verdict.witness_point.unwrap(), vec![rat(0)]);

    // the cubic with sign-invariant leading coefficient, restricted to the
    // line x1 = 0 parameterized by x2 in [-1, 1]: violation at x2 = 0
    let r = poly3(&[
        (1, [1, 0, 3]),
        (1, [2, 0, 2]),
        (1, [0, 2, 2]),
        (1, [0, 0, 0]),
    ]);
    let line = BasePath::segment(vec![rat(0), rat(-1)], vec![rat(0), rat(1)], n).unwrap();
    let res = track_roots(&r, &line, &TrackOptions::default()).unwrap();
    assert_eq!(res.verdict.status, TrackStatus::Violation);
    assert_eq!(res.verdict.witness_point.unwrap(), vec![rat(0), rat(0)]);
    let elapsed = start.elapsed();
    println!("PASS criterion 6: all three counterexamples certified in {elapsed:?}");
}

#[test]
fn criterion_7_operator_identity_suite() {
    let start = Instant::now();
    let mut rng = rng(0x1dea);

    // pullback ∘ homogenize = id
    for _ in 0..200 {
        let base_dim = rng.gen_range(0..=2);
        let deg_xn = rng.gen_range(0..=3);
        let p = rand_poly(&mut rng, base_dim, deg_xn);
        if p.is_zero() {
            continue;
        }
        let deg = p.degree_in_last().unwrap();
        let d = deg + rng.gen_range(0..=2usize);
        assert_eq!(pullback(&homogenize(&p, d).unwrap()), p);
    }

    // pull-back/homogenization base-change identity:
    // pulling back along A after homogenizing along B equals composing with
    // B⁻¹·A before the plain pull-back
    for _ in 0..200 {
        let deg_xn = rng.gen_range(0..=3);
        let p = rand_poly(&mut rng, 1, deg_xn);
        if p.is_zero() {
            continue;
        }
        let d = p.degree_in_last().unwrap() + rng.gen_range(0..=1usize);
        let a = rand_matrix(&mut rng);
        let b = rand_matrix(&mut rng);
        let lhs = pullback_wrt(&homogenize_wrt(&p, &b, d).unwrap(), &a);
        let rhs = pullback(
            &homogenize(&p, d)
                .unwrap()
                .compose_right(&b.inverse().mul(&a)),
        );
        assert_eq!(lhs, rhs);
    }

    // contravariance of the Möbius transform
    for _ in 0..200 {
        let base_dim = rng.gen_range(0..=2);
        let deg_xn = rng.gen_range(0..=3);
        let p = rand_poly(&mut rng, base_dim, deg_xn);
        if p.is_zero() {
            continue;
        }
        let d = p.degree_in_last().unwrap() + rng.gen_range(0..=1usize);
        let a = rand_matrix(&mut rng);
        let b = rand_matrix(&mut rng);
        let lhs = moebius_transform(&moebius_transform(&p, &a, d).unwrap(), &b, d).unwrap();
        let rhs = moebius_transform(&p, &a.mul(&b), d).unwrap();
        assert_eq!(lhs, rhs);
    }

    // multiplicity transport: roots of the transformed polynomial map under
    // μ_A to equal-multiplicity roots of the original
    for _ in 0..200 {
        let (u, roots) = rand_rational_rooted(&mut rng);
        let d = u.degree().unwrap() + rng.gen_range(0..=2usize);
        let a = rand_matrix(&mut rng);
        let tu = moebius_transform_uni(&u, &a, d).unwrap();
        let orig = projective_roots(&u, d).unwrap();
        let moved = projective_roots(&tu, d).unwrap();
        assert_eq!(
            orig.projective_multiplicities(),
            moved.projective_multiplicities()
        );
        // expected image of each original root under μ_{A⁻¹}
        let a_inv = a.inverse();
        let mut expected: Vec<(ProjPoint, u32)> = roots
            .iter()
            .map(|(r, m)| (ProjPoint::from_affine(r.clone()).moebius(&a_inv), *m))
            .collect();
        if orig.infinity_multiplicity > 0 {
            expected.push((
                ProjPoint::infinity().moebius(&a_inv),
                orig.infinity_multiplicity,
            ));
        }
        for (img, m) in expected {
            if img.is_infinity() {
                assert_eq!(moved.infinity_multiplicity, m);
            } else {
                let target = img.to_affine().unwrap();
                let hit = moved.real_roots.iter().find(|r| {
                    r.cmp_rat(target) == std::cmp::Ordering::Equal
                });
                let hit = hit.unwrap_or_else(|| panic!("missing transported root"));
                assert_eq!(hit.multiplicity, m);
            }
        }
    }

    // order identities: linear change of variables, scaling on the form
    // pair, and order transport through homogenization
    for _ in 0..200 {
        let nvars = rng.gen_range(2..=3usize);
        let p = rand_poly(&mut rng, nvars - 1, 2);
        if p.is_zero() {
            continue;
        }
        // random invertible linear map on the full variable space
        let a = loop {
            let m: Vec<Vec<Rat>> = (0..nvars)
                .map(|_| (0..nvars).map(|_| rand_rat(&mut rng)).collect())
                .collect();
            if !matrix_det(&m).is_zero() {
                break m;
            }
        };
        let v: Vec<Rat> = (0..nvars).map(|_| rand_rat(&mut rng)).collect();
        let av: Vec<Rat> = (0..nvars)
            .map(|i| {
                (0..nvars)
                    .map(|j| &a[i][j] * &v[j])
                    .fold(Rat::zero(), |s, t| s + t)
            })
            .collect();
        let composed = p.compose_linear(&a).unwrap();
        assert_eq!(
            composed.order_of_vanishing(&v).unwrap(),
            p.order_of_vanishing(&av).unwrap()
        );

        // force a zero of known multiplicity: q = (x_n - c)^m · p, checked
        // at a base point with x_n = c
        let c = rand_rat(&mut rng);
        let m = rng.gen_range(1..=3u32);
        let lin = &MultiPoly::var(p.vars(), nvars - 1)
            - &MultiPoly::constant(p.vars(), c.clone());
        let q = &lin.pow(m) * &p;
        let dq = q.degree_in_last().unwrap();
        let dd = dq + rng.gen_range(0..=1usize);
        let g = homogenize(&q, dd).unwrap();
        let flat = g.to_flat_poly("y");
        let base_pt: Vec<Rat> = (0..nvars - 1).map(|_| rand_rat(&mut rng)).collect();
        let mut pt_poly = base_pt.clone();
        pt_poly.push(c.clone());
        let ord = q.order_of_vanishing(&pt_poly).unwrap();
        assert!(ord >= m, "constructed zero has multiplicity at least m");
        // order transports through homogenization at y = 1
        let mut flat_pt = base_pt.clone();
        flat_pt.push(c.clone());
        flat_pt.push(Rat::one());
        assert_eq!(ord, flat.order_of_vanishing(&flat_pt).unwrap());
        // scaling the (x_n, y) pair preserves the order of the form
        let k = loop {
            let k = rand_rat(&mut rng);
            if !k.is_zero() {
                break k;
            }
        };
        let mut scaled_pt = base_pt.clone();
        scaled_pt.push(&c * &k);
        scaled_pt.push(k);
        assert_eq!(
            flat.order_of_vanishing(&flat_pt).unwrap(),
            flat.order_of_vanishing(&scaled_pt).unwrap()
        );
    }
    let elapsed = start.elapsed();
    println!("PASS criterion 7: 5 × 200 exact operator identities in {elapsed:?}");
}

fn matrix_det(m: &[Vec<Rat>]) -> Rat {
    naive_det(m)
}

#[test]
fn criterion_8_projection_reduction() {
    let start = Instant::now();
    let mut rng = rng(0x9e11);
    let mut done = 0usize;
    while done < 20 {
        // family of 2-3 polynomials in (x1, x2) with nonconstant leading
        // coefficients in x2
        let size = 2 + (done % 2);
        let mut family = Vec::new();
        for _ in 0..size {
            let d = rng.gen_range(1..=3usize);
            let p = loop {
                let cand = rand_poly_exact_degree(&mut rng, 1, d);
                if !cand.coefficient_in_last(d).is_constant() {
                    break cand;
                }
            };
            family.push(p);
        }
        let classical = project_classical(&family).unwrap();
        let projective = project_projective(&family).unwrap();
        assert!(
            projective.generators.len() < classical.generators.len(),
            "strict reduction for nonconstant leading coefficients"
        );
        // re-adding the leading coefficients restores the classical set
        let mut restored: Vec<MultiPoly> = projective
            .generators
            .iter()
            .map(|g| g.poly.clone())
            .collect();
        for g in &classical.generators {
            if matches!(g.provenance, Provenance::LeadingCoeff(_))
                && !restored.contains(&g.poly)
            {
                restored.push(g.poly.clone());
            }
        }
        let mut classical_polys: Vec<String> =
            classical.generators.iter().map(|g| format!("{:?}", g.poly)).collect();
        let mut restored_strs: Vec<String> = restored.iter().map(|p| format!("{p:?}")).collect();
        classical_polys.sort();
        restored_strs.sort();
        assert_eq!(classical_polys, restored_strs);
        done += 1;
    }
    let elapsed = start.elapsed();
    println!("PASS criterion 8: 20 strict projection reductions in {elapsed:?}");
}

/// The padded resultant implementation against the independent oracle on
/// random univariate instances (supports the derived values used above).
#[test]
fn oracle_agreement_univariate_resultants() {
    let mut rng = rng(0x07ac1e);
    for _ in 0..60 {
        let dp = rng.gen_range(0..=3usize);
        let dq = rng.gen_range(0..=3usize);
        if dp + dq == 0 {
            continue;
        }
        let f = UniPoly::new((0..=dp).map(|_| rand_rat(&mut rng)).collect());
        let g = UniPoly::new((0..=dq).map(|_| rand_rat(&mut rng)).collect());
        let (p, q) = (dp + 1, dq + 1);
        if f.degree().unwrap_or(0) > p || g.degree().unwrap_or(0) > q {
            continue;
        }
        assert_eq!(
            resultant_fixed_uni(&f, &g, p, q).unwrap(),
            naive_resultant(&f, &g, p, q)
        );
    }
    // the worked evaluation: circle and hyperbola at -1/2 give 13/16
    let f = circle_poly().evaluate_partial(&[ratio(-1, 2)]).unwrap();
    let g = hyperbola_poly().evaluate_partial(&[ratio(-1, 2)]).unwrap();
    assert_eq!(naive_resultant(&f, &g, 2, 1), ratio(13, 16));
    println!("PASS oracle: Bareiss resultants match cofactor expansion");
}

/// Root-at-infinity bookkeeping for the worked evaluations.
#[test]
fn oracle_agreement_projective_root_sets() {
    // E at 0 of the finite-set polynomial: -(x2+1)^2 at reference degree 3
    let u = UniPoly::from_i64(&[-1, -2, -1]);
    let s = projective_roots(&u, 3).unwrap();
    assert_eq!(s.real_roots.len(), 1);
    assert_eq!(s.real_roots[0].location, RootLocation::Exact(rat(-1)));
    assert_eq!(s.real_roots[0].multiplicity, 2);
    assert_eq!(s.infinity_multiplicity, 1);
    // constant -1 at reference degree 1: infinity only
    let c = projective_roots(&UniPoly::from_i64(&[-1]), 1).unwrap();
    assert_eq!(c.projective_multiplicities(), vec![1]);
    println!("PASS oracle: projective root sets of the worked evaluations");
}
