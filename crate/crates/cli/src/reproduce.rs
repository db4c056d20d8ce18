//! Golden-value reproduction of the worked examples and counterexamples.
//!
//! Each id rebuilds its inputs, runs the toolkit, and compares against
//! frozen expected values; the report has one PASS/FAIL line per check.

use projcad::delineability::{cell_bounds_1d, check_finite_set, CellBound, ProjectionMode};
use projcad::elimination::discriminant_fixed;
use projcad::forms::{moebius_transform, Matrix2};
use projcad::poly::{var_names, MultiPoly};
use projcad::rat::{rat, ratio, Rat};
use projcad::tracking::{track_roots, BasePath, TrackOptions, TrackStatus};
use projcad::Error;

pub struct Report {
    pub pass: bool,
    pub text: String,
}

struct Checks {
    lines: Vec<String>,
    pass: bool,
}

impl Checks {
    fn new() -> Self {
        Self {
            lines: Vec::new(),
            pass: true,
        }
    }

    fn check(&mut self, name: &str, ok: bool, detail: String) {
        if ok {
            self.lines.push(format!("PASS: {name} ({detail})"));
        } else {
            self.lines.push(format!("FAIL: {name} ({detail})"));
            self.pass = false;
        }
    }

    fn into_report(self, id: &str) -> Report {
        let mut text = self.lines.join("\n");
        text.push_str(&format!(
            "\n{id}: {}",
            if self.pass { "PASS" } else { "FAIL" }
        ));
        Report {
            pass: self.pass,
            text,
        }
    }
}

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

/// `(x1·x2 - 1)(x2 + x1^3)`
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

fn bound_str(b: &CellBound) -> String {
    match b {
        CellBound::Unbounded => "inf".to_string(),
        CellBound::Exact(v) | CellBound::Approx(v) => projcad::rat::format_rat(v),
    }
}

fn point_str(p: &Option<Vec<Rat>>) -> String {
    match p {
        None => "none".to_string(),
        Some(coords) => format!(
            "({})",
            coords
                .iter()
                .map(projcad::rat::format_rat)
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

pub fn run(id: &str, samples: usize, jump_threshold: f64) -> Result<Report, Error> {
    let opts = TrackOptions {
        jump_threshold,
        matching_margin: 0.25 * jump_threshold,
        ..TrackOptions::default()
    };
    match id {
        "scc" => scc(),
        "cub-hyp" => cub_hyp(samples, &opts),
        "prop4-circle" => prop4_circle(&opts),
        "finite-01" => finite_01(),
        "lc-line" => lc_line(samples, &opts),
        "p-del-not-proj" => p_del_not_proj(samples, &opts),
        other => Err(Error::BadInput(format!(
            "unknown reproduce id `{other}`; expected one of scc, cub-hyp, \
             prop4-circle, finite-01, lc-line, p-del-not-proj"
        ))),
    }
}

/// Single-cell widening: dropping the leading coefficient extends the cell
/// around -1/2 from (-1, 0) to (-1, 1).
fn scc() -> Result<Report, Error> {
    let mut checks = Checks::new();
    let family = [circle_poly(), hyperbola_poly()];
    let s = ratio(-1, 2);
    let classical = cell_bounds_1d(&family, &s, ProjectionMode::Classical)?;
    checks.check(
        "classical cell interval",
        classical.lo == CellBound::Exact(rat(-1)) && classical.hi == CellBound::Exact(rat(0)),
        format!(
            "expected (-1, 0), got ({}, {})",
            bound_str(&classical.lo),
            bound_str(&classical.hi)
        ),
    );
    let projective = cell_bounds_1d(&family, &s, ProjectionMode::Projective)?;
    checks.check(
        "projective cell interval",
        projective.lo == CellBound::Exact(rat(-1)) && projective.hi == CellBound::Exact(rat(1)),
        format!(
            "expected (-1, 1), got ({}, {})",
            bound_str(&projective.lo),
            bound_str(&projective.hi)
        ),
    );
    Ok(checks.into_report("scc"))
}

/// Shear transform of the cubic-hyperbola product and its consistent track
/// through infinity.
fn cub_hyp(samples: usize, opts: &TrackOptions) -> Result<Report, Error> {
    let mut checks = Checks::new();
    let p = cubic_hyperbola_poly();
    let a = Matrix2::from_i64(1, 0, 1, 1).unwrap();
    let transformed = moebius_transform(&p, &a, 2)?;
    let expected = &poly2(&[(1, [1, 1]), (-1, [0, 1]), (-1, [0, 0])])
        * &poly2(&[(1, [0, 1]), (1, [3, 1]), (1, [3, 0])]);
    checks.check(
        "shear transform at degree 2",
        transformed == expected,
        "((x1-1)x2 - 1)((1+x1^3)x2 + x1^3), exact canonical equality".to_string(),
    );
    let path = BasePath::segment(vec![rat(-2)], vec![rat(2)], samples)?;
    let res = track_roots(&p, &path, opts)?;
    checks.check(
        "track verdict",
        res.verdict.status == TrackStatus::Consistent,
        format!("{:?}", res.verdict.status),
    );
    checks.check(
        "branch structure",
        res.verdict.branch_count == 2 && res.verdict.multiplicities == vec![1, 1],
        format!(
            "count {}, multiplicities {:?}",
            res.verdict.branch_count, res.verdict.multiplicities
        ),
    );
    let through_infinity = res.traces.iter().any(|tr| {
        tr.points
            .iter()
            .any(|(t, r)| r.is_infinity() && t.abs() < 1e-9)
    });
    checks.check(
        "one branch passes through infinity above 0",
        through_infinity,
        "root at infinity sampled exactly at x1 = 0".to_string(),
    );
    Ok(checks.into_report("cub-hyp"))
}

/// Quartic over the unit circle: order-invariant discriminant but a branch
/// swap after one loop, so no global projective delineability.
fn prop4_circle(opts: &TrackOptions) -> Result<Report, Error> {
    let mut checks = Checks::new();
    let p = quartic_circle_poly();
    let disc = discriminant_fixed(&p, 4)?;
    let base = var_names(&["x1", "x2"]);
    let sum_sq = MultiPoly::from_terms(&base, [(vec![2, 0], rat(1)), (vec![0, 2], rat(1))]);
    let circle = &sum_sq - &MultiPoly::constant(&base, rat(1));
    let expected = (&(&circle * &circle) * &sum_sq).scale(&rat(1 << 14));
    checks.check(
        "discriminant value",
        disc == expected,
        "2^14 (x1^2 + x2^2 - 1)^2 (x1^2 + x2^2), frozen constant 1".to_string(),
    );
    let pts: [(Rat, Rat); 4] = [
        (rat(1), rat(0)),
        (rat(0), rat(1)),
        (ratio(3, 5), ratio(4, 5)),
        (ratio(5, 13), ratio(12, 13)),
    ];
    let orders: Vec<u32> = pts
        .iter()
        .map(|(a, b)| disc.order_of_vanishing(&[a.clone(), b.clone()]).unwrap_or(99))
        .collect();
    checks.check(
        "discriminant order 2 on the circle",
        orders == vec![2, 2, 2, 2],
        format!("orders at four rational circle points: {orders:?}"),
    );
    let res = track_roots(&p, &BasePath::unit_circle(720)?, opts)?;
    checks.check(
        "branch structure on the circle",
        res.verdict.branch_count == 2 && res.verdict.multiplicities == vec![2, 2],
        format!(
            "count {}, multiplicities {:?}",
            res.verdict.branch_count, res.verdict.multiplicities
        ),
    );
    checks.check(
        "monodromy is the transposition",
        res.verdict.monodromy == Some(vec![1, 0]),
        format!("monodromy {:?}", res.verdict.monodromy),
    );
    checks.check(
        "verdict",
        res.verdict.status == TrackStatus::Violation,
        "not projectively delineable over the circle".to_string(),
    );
    Ok(checks.into_report("prop4-circle"))
}

/// Finite-set counterexample: multiplicity multisets split over {0, 1}.
fn finite_01() -> Result<Report, Error> {
    let mut checks = Checks::new();
    let f2 = poly2(&[(1, [1, 1]), (-1, [0, 1]), (-1, [0, 0])]);
    let p = &hyperbola_poly() * &(&f2 * &f2);
    let v = check_finite_set(&p, &[vec![rat(0)], vec![rat(1)]])?;
    checks.check(
        "not delineable over {0, 1}",
        !v.delineable,
        format!("delineable = {}", v.delineable),
    );
    checks.check(
        "projectively delineable over {0, 1}",
        v.projectively_delineable,
        format!("projectively_delineable = {}", v.projectively_delineable),
    );
    Ok(checks.into_report("finite-01"))
}

/// Sign-invariant leading coefficient is not enough: along x1 = 0 the
/// infinity multiplicity jumps at the origin.
fn lc_line(samples: usize, opts: &TrackOptions) -> Result<Report, Error> {
    let mut checks = Checks::new();
    let p = poly3(&[
        (1, [1, 0, 3]),
        (1, [2, 0, 2]),
        (1, [0, 2, 2]),
        (1, [0, 0, 0]),
    ]);
    let path = BasePath::segment(vec![rat(0), rat(-1)], vec![rat(0), rat(1)], samples)?;
    let res = track_roots(&p, &path, opts)?;
    checks.check(
        "verdict",
        res.verdict.status == TrackStatus::Violation,
        format!("{:?}", res.verdict.status),
    );
    let witness_ok = res.verdict.witness_point.as_ref() == Some(&vec![rat(0), rat(0)]);
    checks.check(
        "violation witnessed at x2 = 0",
        witness_ok,
        format!("witness point {}", point_str(&res.verdict.witness_point)),
    );
    Ok(checks.into_report("lc-line"))
}

/// Delineable (no real roots at all) but not projectively delineable: the
/// root at infinity pops up above x1 = 0 only.
fn p_del_not_proj(samples: usize, opts: &TrackOptions) -> Result<Report, Error> {
    let mut checks = Checks::new();
    let p = poly2(&[(1, [2, 2]), (1, [0, 0])]);
    let path = BasePath::segment(vec![rat(-1)], vec![rat(1)], samples)?;
    let res = track_roots(&p, &path, opts)?;
    checks.check(
        "verdict",
        res.verdict.status == TrackStatus::Violation,
        format!("{:?}", res.verdict.status),
    );
    let witness_ok = res.verdict.witness_point.as_ref() == Some(&vec![rat(0)]);
    checks.check(
        "violation witnessed at x1 = 0",
        witness_ok,
        format!("witness point {}", point_str(&res.verdict.witness_point)),
    );
    Ok(checks.into_report("p-del-not-proj"))
}
