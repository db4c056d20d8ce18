//! Delineability checks, Möbius de-singularization and projection operators.
//!
//! Over a finite base set, continuity of root functions is vacuous, so both
//! delineability and its projective variant reduce to multiset equality of
//! root multiplicities across the points; that criterion is decided exactly
//! here. Over one-parameter paths the sampled tracker in [`crate::tracking`]
//! provides the semi-decision.
//!
//! The projection operators implement the reduced projection (leading
//! coefficients, discriminants, pairwise resultants) and its projective
//! variant, which drops the leading coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::elimination::{discriminant_fixed, resultant_fixed};
use crate::forms::{homogenize, Matrix2};
use crate::poly::{MultiPoly, UniPoly};
use crate::rat::Rat;
use crate::roots::{isolate_real_roots, IsolatedRoot, ProjRootSet, RootLocation};
use crate::tracking::{track_roots, BasePath, TrackOptions, TrackResult, TrackStatus, TrackedRoot};
use crate::{Error, Result};

/// Projective roots of `p` above a base point, with respect to the global
/// degree of `p` in the projection variable (never the evaluated degree).
pub fn projective_roots_above(p: &MultiPoly, x0: &[Rat]) -> Result<ProjRootSet> {
    let d = p.degree_in_last()?;
    let e = p.evaluate_partial(x0)?;
    if e.is_zero() {
        return Err(Error::Nullified {
            point: format_point(x0),
        });
    }
    crate::roots::projective_roots(&e, d)
}

fn format_point(point: &[Rat]) -> String {
    point
        .iter()
        .map(crate::rat::format_rat)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Verdict of the finite-base-set check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteSetVerdict {
    pub delineable: bool,
    pub projectively_delineable: bool,
}

/// Exact delineability decision over a finite base set: the real-root
/// multiplicity multisets must agree across the points, and for the
/// projective variant the multisets include the root at infinity.
pub fn check_finite_set(p: &MultiPoly, points: &[Vec<Rat>]) -> Result<FiniteSetVerdict> {
    let sets: Vec<ProjRootSet> = points
        .iter()
        .map(|x0| projective_roots_above(p, x0))
        .collect::<Result<_>>()?;
    let delineable = all_equal(sets.iter().map(|s| s.real_multiplicities()));
    let projectively_delineable = all_equal(sets.iter().map(|s| s.projective_multiplicities()));
    Ok(FiniteSetVerdict {
        delineable,
        projectively_delineable,
    })
}

fn all_equal<T: PartialEq>(mut it: impl Iterator<Item = T>) -> bool {
    match it.next() {
        None => true,
        Some(first) => it.all(|x| x == first),
    }
}

// ---------------------------------------------------------------------------
// De-singularization
// ---------------------------------------------------------------------------

/// Deterministic direction candidates `(a11, a21)`: the leading-coefficient
/// direction first, then coprime integer pairs of growing height.
fn direction_candidates() -> impl Iterator<Item = (i64, i64)> {
    let head = [(1, 0), (0, 1), (1, 1), (1, -1)];
    let tail = (2i64..).flat_map(|h| {
        let mut level = Vec::new();
        for k in 1..h {
            for (a, b) in [(h, k), (k, h)] {
                if a.gcd(&b) == 1 {
                    level.push((a, b));
                    level.push((a, -b));
                }
            }
        }
        level.push((h, 1));
        level
    });
    head.into_iter().chain(tail)
}

/// Completes a coprime integer direction to a unimodular matrix with that
/// first column, via the extended Euclidean identity `p·x + q·y = 1`
/// (determinant of `[[p, -y], [q, x]]`). The Bézout pair is normalized to
/// the representative with `y` reduced modulo `p`, which keeps the familiar
/// completions: `(1,0)` gives the identity, `(1,1)` the lower-triangular
/// matrix of ones.
fn complete_unimodular(p: i64, q: i64) -> Matrix2 {
    let (pb, qb) = (BigInt::from(p), BigInt::from(q));
    let ext = pb.extended_gcd(&qb);
    debug_assert!(ext.gcd.is_one(), "direction must be coprime");
    let (mut x, mut y) = (ext.x, ext.y);
    if !pb.is_zero() {
        let k = y.div_floor(&pb);
        y -= &k * &pb;
        x += &k * &qb;
    } else {
        let k = x.div_floor(&qb);
        x -= &k * &qb;
    }
    Matrix2::new(
        Rat::from_integer(pb),
        Rat::from_integer(-y),
        Rat::from_integer(qb),
        Rat::from_integer(x),
    )
    .expect("unimodular by construction")
}

/// Finds a unimodular `A` whose Möbius transform removes the root at
/// infinity of `p` above `s` and on a neighbourhood: the returned hint is
/// the transformed leading coefficient `H^d(p)(x, (a11, a21))`, whose
/// nonvanishing locus is that neighbourhood.
pub fn desingularize_at(p: &MultiPoly, s: &[Rat]) -> Result<(Matrix2, MultiPoly)> {
    let d = p.degree_in_last()?;
    let e = p.evaluate_partial(s)?;
    if e.is_zero() {
        return Err(Error::Nullified {
            point: format_point(s),
        });
    }
    let g = homogenize(p, d)?;
    // evaluated coefficients of the form above s
    let coeffs: Vec<Rat> = g
        .coeffs()
        .iter()
        .map(|c| c.evaluate(s))
        .collect::<Result<_>>()?;
    for (a, b) in direction_candidates() {
        let (ar, br) = (crate::rat::rat(a), crate::rat::rat(b));
        let mut value = Rat::zero();
        let mut pa = Rat::one();
        // Σ c_k a^k b^(d-k)
        let mut pows_b = vec![Rat::one()];
        for _ in 0..d {
            pows_b.push(pows_b.last().unwrap() * &br);
        }
        for (k, c) in coeffs.iter().enumerate() {
            value += c * &pa * &pows_b[d - k];
            pa *= &ar;
        }
        if !value.is_zero() {
            let a_mat = complete_unimodular(a, b);
            let hint = g.eval_direction(&a_mat.a11, &a_mat.a21);
            return Ok((a_mat, hint));
        }
    }
    unreachable!("a nonzero binary form of degree d has at most d root directions")
}

// ---------------------------------------------------------------------------
// Projection operators
// ---------------------------------------------------------------------------

/// Where a projection generator came from; indices are positions in the
/// input family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    LeadingCoeff(usize),
    Discriminant(usize),
    Resultant(usize, usize),
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::LeadingCoeff(i) => write!(f, "lc(P{})", i + 1),
            Provenance::Discriminant(i) => write!(f, "disc(P{})", i + 1),
            Provenance::Resultant(i, j) => write!(f, "res(P{},P{})", i + 1, j + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub provenance: Provenance,
    pub poly: MultiPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectionMode {
    Classical,
    Projective,
}

/// A reduced projection of a polynomial family into the base variables.
#[derive(Clone, Debug)]
pub struct ProjectionSet {
    pub mode: ProjectionMode,
    pub generators: Vec<Generator>,
}

impl ProjectionSet {
    pub fn polys(&self) -> impl Iterator<Item = &MultiPoly> {
        self.generators.iter().map(|g| &g.poly)
    }
}

fn project(family: &[MultiPoly], mode: ProjectionMode) -> Result<ProjectionSet> {
    let mut degrees = Vec::with_capacity(family.len());
    for p in family {
        if p.is_zero() {
            return Err(Error::NotProjectable);
        }
        let d = p.degree_in_last()?;
        if d == 0 {
            return Err(Error::NotProjectable);
        }
        degrees.push(d);
    }
    let mut generators: Vec<Generator> = Vec::new();
    let push = |provenance: Provenance, poly: MultiPoly, gens: &mut Vec<Generator>| {
        if poly.is_zero() || poly.is_constant() {
            return; // constants carry no root information
        }
        let canon = poly.primitive_normalized();
        if gens.iter().any(|g| g.poly == canon) {
            return; // merged up to rational scaling
        }
        gens.push(Generator {
            provenance,
            poly: canon,
        });
    };
    for (i, p) in family.iter().enumerate() {
        if mode == ProjectionMode::Classical {
            push(
                Provenance::LeadingCoeff(i),
                p.coefficient_in_last(degrees[i]),
                &mut generators,
            );
        }
        if degrees[i] >= 2 {
            push(
                Provenance::Discriminant(i),
                discriminant_fixed(p, degrees[i])?,
                &mut generators,
            );
        }
    }
    for i in 0..family.len() {
        for j in (i + 1)..family.len() {
            push(
                Provenance::Resultant(i, j),
                resultant_fixed(&family[i], &family[j], degrees[i], degrees[j])?,
                &mut generators,
            );
        }
    }
    Ok(ProjectionSet { mode, generators })
}

/// Reduced projection: leading coefficients, discriminants, and pairwise
/// resultants; constants dropped, duplicates merged up to rational scaling.
pub fn project_classical(family: &[MultiPoly]) -> Result<ProjectionSet> {
    project(family, ProjectionMode::Classical)
}

/// The projective projection: discriminants and resultants only.
pub fn project_projective(family: &[MultiPoly]) -> Result<ProjectionSet> {
    project(family, ProjectionMode::Projective)
}

// ---------------------------------------------------------------------------
// Cell bounds over a one-dimensional base
// ---------------------------------------------------------------------------

/// One endpoint of a cell interval. `Approx` is a sound inner rational bound
/// within `1e-9` of an irrational projection root.
#[derive(Clone, Debug, PartialEq)]
pub enum CellBound {
    Unbounded,
    Exact(Rat),
    Approx(Rat),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CellInterval {
    pub mode: ProjectionMode,
    pub lo: CellBound,
    pub hi: CellBound,
}

/// The maximal open interval around `s` bounded by the nearest real roots of
/// the chosen projection of `family` (polynomials in two variables).
pub fn cell_bounds_1d(
    family: &[MultiPoly],
    s: &Rat,
    mode: ProjectionMode,
) -> Result<CellInterval> {
    for p in family {
        if p.nvars() != 2 {
            return Err(Error::BadCellDimension(p.nvars()));
        }
    }
    let projection = project(family, mode)?;
    let mut lower: Option<IsolatedRoot> = None;
    let mut upper: Option<IsolatedRoot> = None;
    for poly in projection.polys() {
        for root in isolate_real_roots(&poly.to_uni())? {
            match root.cmp_rat(s) {
                std::cmp::Ordering::Equal => return Err(Error::OnProjectionRoot),
                std::cmp::Ordering::Less => {
                    if lower.as_ref().is_none_or(|cur| root_less(cur, &root)) {
                        lower = Some(root);
                    }
                }
                std::cmp::Ordering::Greater => {
                    if upper.as_ref().is_none_or(|cur| root_less(&root, cur)) {
                        upper = Some(root);
                    }
                }
            }
        }
    }
    let eps = Rat::new(BigInt::one(), BigInt::from(1_000_000_000u64));
    let lo = match lower {
        None => CellBound::Unbounded,
        Some(r) => match r.location {
            RootLocation::Exact(v) => CellBound::Exact(v),
            RootLocation::Interval { .. } => {
                // inner bound: above the root but still below s
                let mut t = r;
                while t.hi() >= s || t.width() > eps {
                    let w = t.width() / Rat::from_integer(BigInt::from(2));
                    t = t.refined(&w);
                    if t.is_exact() {
                        break;
                    }
                }
                match t.location {
                    RootLocation::Exact(v) => CellBound::Exact(v),
                    RootLocation::Interval { hi, .. } => CellBound::Approx(hi),
                }
            }
        },
    };
    let hi = match upper {
        None => CellBound::Unbounded,
        Some(r) => match r.location {
            RootLocation::Exact(v) => CellBound::Exact(v),
            RootLocation::Interval { .. } => {
                let mut t = r;
                while t.lo() <= s || t.width() > eps {
                    let w = t.width() / Rat::from_integer(BigInt::from(2));
                    t = t.refined(&w);
                    if t.is_exact() {
                        break;
                    }
                }
                match t.location {
                    RootLocation::Exact(v) => CellBound::Exact(v),
                    RootLocation::Interval { lo, .. } => CellBound::Approx(lo),
                }
            }
        },
    };
    Ok(CellInterval { mode, lo, hi })
}

/// Exact order on isolated roots of possibly different polynomials.
fn root_less(a: &IsolatedRoot, b: &IsolatedRoot) -> bool {
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if a.hi() < b.lo() || (a.hi() == b.lo() && (a.is_exact() || b.is_exact())) {
            return true;
        }
        if b.hi() < a.lo() || (b.hi() == a.lo() && (a.is_exact() || b.is_exact())) {
            return false;
        }
        if a.is_exact() && b.is_exact() {
            return a.lo() < b.lo();
        }
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        for r in [&mut a, &mut b] {
            let w = r.width() * &half;
            if w.is_positive() {
                *r = r.refined(&w);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Section sign check
// ---------------------------------------------------------------------------

/// How the homogenization of a second polynomial behaves along one tracked
/// branch of the first.
#[derive(Clone, Debug, PartialEq)]
pub enum SectionBehavior {
    VanishesIdentically,
    NeverVanishes,
    Mixed { witness: f64 },
}

#[derive(Clone, Debug)]
pub struct SectionReport {
    pub branch_id: usize,
    pub behavior: SectionBehavior,
}

/// Tracks `p` along the path (it must track CONSISTENT) and classifies, for
/// each branch, whether `H^deg(q)` vanishes identically, never, or mixed on
/// that branch. All zero tests are exact.
pub fn section_sign_check(
    p: &MultiPoly,
    q: &MultiPoly,
    path: &BasePath,
    opts: &TrackOptions,
) -> Result<Vec<SectionReport>> {
    let q_deg = q.degree_in_last()?;
    let result: TrackResult = track_roots(p, path, opts)?;
    if result.verdict.status != TrackStatus::Consistent {
        return Err(Error::TrackingFailed(
            result
                .verdict
                .reason
                .unwrap_or_else(|| "tracking reported a violation".into()),
        ));
    }
    let mut reports = Vec::new();
    for trace in &result.traces {
        let mut flags: Vec<(f64, bool)> = Vec::with_capacity(trace.points.len());
        for (idx, (t, root)) in trace.points.iter().enumerate() {
            let x0 = &result.samples[idx].1;
            let eq = q.evaluate_partial(x0)?;
            if eq.is_zero() {
                return Err(Error::Nullified {
                    point: format_point(x0),
                });
            }
            flags.push((*t, homogenized_vanishes_at(&eq, q_deg, root)));
        }
        let vanish_count = flags.iter().filter(|(_, v)| *v).count();
        let behavior = if vanish_count == flags.len() {
            SectionBehavior::VanishesIdentically
        } else if vanish_count == 0 {
            SectionBehavior::NeverVanishes
        } else {
            let first = flags[0].1;
            let witness = flags
                .iter()
                .find(|(_, v)| *v != first)
                .map(|(t, _)| *t)
                .unwrap_or(flags[0].0);
            SectionBehavior::Mixed { witness }
        };
        reports.push(SectionReport {
            branch_id: trace.branch_id,
            behavior,
        });
    }
    Ok(reports)
}

/// Exact test for `H^d(q)` vanishing at a projective root: at infinity this
/// is the vanishing of the coefficient of `x_n^d`; at an exact point it is
/// evaluation; at an interval root `θ` of a squarefree factor `f` it holds
/// iff `gcd(f, E(q))` has a sign change across the isolating interval.
fn homogenized_vanishes_at(eq: &UniPoly, q_deg: usize, root: &TrackedRoot) -> bool {
    match &root.root {
        None => eq.coeff(q_deg).is_zero(),
        Some(r) => match &r.location {
            RootLocation::Exact(v) => eq.eval(v).is_zero(),
            RootLocation::Interval { lo, hi } => {
                let g = r.factor.gcd(eq);
                if g.degree().unwrap_or(0) == 0 {
                    return false;
                }
                g.sign_at(lo) * g.sign_at(hi) < 0
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var_names;
    use crate::rat::{rat, ratio};

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

    fn circle() -> MultiPoly {
        poly2(&[(1, [2, 0]), (1, [0, 2]), (-1, [0, 0])])
    }

    fn hyperbola() -> MultiPoly {
        poly2(&[(1, [1, 1]), (-1, [0, 0])])
    }

    #[test]
    fn roots_above_uses_global_degree() {
        // x1·x2 - 1 above x1 = 0: the root at infinity, multiplicity 1
        let s = projective_roots_above(&hyperbola(), &[rat(0)]).unwrap();
        assert!(s.real_roots.is_empty());
        assert_eq!(s.infinity_multiplicity, 1);
    }

    #[test]
    fn roots_above_two_branches() {
        // (x1 x2 - 1)(x2 + x1^3) above x1 = 2: roots 1/2 and -8
        let p = &hyperbola() * &poly2(&[(1, [0, 1]), (1, [3, 0])]);
        let s = projective_roots_above(&p, &[rat(2)]).unwrap();
        assert_eq!(s.infinity_multiplicity, 0);
        let vals: Vec<Rat> = s
            .real_roots
            .iter()
            .map(|r| match &r.location {
                RootLocation::Exact(v) => v.clone(),
                _ => panic!("rational roots expected"),
            })
            .collect();
        assert_eq!(vals, vec![rat(-8), ratio(1, 2)]);
    }

    #[test]
    fn roots_above_triple_infinity() {
        // x1 x3^3 + (x1^2 + x2^2) x3^2 + 1 above (0,0): infinity with
        // multiplicity 3
        let p = poly3(&[(1, [1, 0, 3]), (1, [2, 0, 2]), (1, [0, 2, 2]), (1, [0, 0, 0])]);
        let s = projective_roots_above(&p, &[rat(0), rat(0)]).unwrap();
        assert!(s.real_roots.is_empty());
        assert_eq!(s.infinity_multiplicity, 3);
    }

    #[test]
    fn roots_above_nullified() {
        let p = poly2(&[(1, [1, 1])]);
        assert!(matches!(
            projective_roots_above(&p, &[rat(0)]),
            Err(Error::Nullified { .. })
        ));
    }

    #[test]
    fn finite_set_counterexample() {
        // (x1 x2 - 1)((x1 - 1) x2 - 1)^2 over {0, 1}: delineable fails,
        // projective delineability holds
        let f2 = poly2(&[(1, [1, 1]), (-1, [0, 1]), (-1, [0, 0])]);
        let p = &hyperbola() * &(&f2 * &f2);
        let v = check_finite_set(&p, &[vec![rat(0)], vec![rat(1)]]).unwrap();
        assert!(!v.delineable);
        assert!(v.projectively_delineable);
    }

    #[test]
    fn finite_set_symmetric_circle() {
        let v = check_finite_set(&circle(), &[vec![ratio(-1, 2)], vec![ratio(1, 2)]]).unwrap();
        assert!(v.delineable);
        assert!(v.projectively_delineable);
    }

    #[test]
    fn finite_set_single_point() {
        let v = check_finite_set(&circle(), &[vec![rat(0)]]).unwrap();
        assert!(v.delineable && v.projectively_delineable);
    }

    #[test]
    fn desingularize_shear_example() {
        // (x1 x2 - 1)(x2 + x1^3) at 0: (1,0) and (0,1) fail, (1,1) is
        // accepted and completes to the lower-triangular matrix of ones
        let p = &hyperbola() * &poly2(&[(1, [0, 1]), (1, [3, 0])]);
        let (a, hint) = desingularize_at(&p, &[rat(0)]).unwrap();
        assert_eq!(a, Matrix2::from_i64(1, 0, 1, 1).unwrap());
        // hint is the transformed leading coefficient; nonzero at 0
        assert!(!hint.evaluate(&[rat(0)]).unwrap().is_zero());
        let transformed = crate::forms::moebius_transform(&p, &a, 2).unwrap();
        assert_eq!(transformed.coefficient_in_last(2), hint);
    }

    #[test]
    fn desingularize_identity_when_lc_nonzero() {
        let (a, _) = desingularize_at(&circle(), &[rat(0)]).unwrap();
        assert!(a.is_identity());
    }

    #[test]
    fn desingularize_needs_a21_for_degree_one() {
        // x1·x2 - 1 at 0: form is x1·x - y; value at (a11, a21) is -a21, so
        // the first usable direction is (0, 1)
        let (a, hint) = desingularize_at(&hyperbola(), &[rat(0)]).unwrap();
        assert!(!a.a21.is_zero());
        assert_eq!(a, Matrix2::from_i64(0, -1, 1, 0).unwrap());
        assert!(!hint.evaluate(&[rat(0)]).unwrap().is_zero());
    }

    #[test]
    fn projection_example_pair() {
        let family = [circle(), hyperbola()];
        let classical = project_classical(&family).unwrap();
        let projective = project_projective(&family).unwrap();
        // classical: lc(Q) = x1, disc(P) ~ x1^2 - 1, res ~ x1^4 - x1^2 + 1
        let x1 = MultiPoly::from_terms(&var_names(&["x1"]), [(vec![1], rat(1))]);
        assert!(classical.polys().any(|p| *p == x1));
        assert!(!projective.polys().any(|p| *p == x1));
        assert_eq!(classical.generators.len(), 3);
        assert_eq!(projective.generators.len(), 2);
        for g in &projective.generators {
            assert!(!matches!(g.provenance, Provenance::LeadingCoeff(_)));
        }
    }

    #[test]
    fn projection_monic_family() {
        // monic input: projective equals classical minus the constant lc
        let family = [circle()];
        let classical = project_classical(&family).unwrap();
        let projective = project_projective(&family).unwrap();
        assert_eq!(classical.generators.len(), projective.generators.len());
    }

    #[test]
    fn projection_pair_count() {
        let family = [
            circle(),
            hyperbola(),
            poly2(&[(1, [0, 1]), (1, [3, 0])]),
        ];
        let classical = project_classical(&family).unwrap();
        let res_count = classical
            .generators
            .iter()
            .filter(|g| matches!(g.provenance, Provenance::Resultant(_, _)))
            .count();
        assert_eq!(res_count, 3); // m(m-1)/2 with m = 3
    }

    #[test]
    fn projection_rejects_xn_free_input() {
        let p = poly2(&[(1, [2, 0])]);
        assert!(matches!(
            project_classical(&[p]),
            Err(Error::NotProjectable)
        ));
    }

    #[test]
    fn cell_bounds_widen_without_lc() {
        let family = [circle(), hyperbola()];
        let s = ratio(-1, 2);
        let classical = cell_bounds_1d(&family, &s, ProjectionMode::Classical).unwrap();
        assert_eq!(classical.lo, CellBound::Exact(rat(-1)));
        assert_eq!(classical.hi, CellBound::Exact(rat(0)));
        let projective = cell_bounds_1d(&family, &s, ProjectionMode::Projective).unwrap();
        assert_eq!(projective.lo, CellBound::Exact(rat(-1)));
        assert_eq!(projective.hi, CellBound::Exact(rat(1)));
    }

    #[test]
    fn cell_bounds_unbounded_for_constant_projection() {
        // lone x2: all projection polynomials are constants
        let family = [poly2(&[(1, [0, 1])])];
        let cell = cell_bounds_1d(&family, &rat(7), ProjectionMode::Classical).unwrap();
        assert_eq!(cell.lo, CellBound::Unbounded);
        assert_eq!(cell.hi, CellBound::Unbounded);
    }

    #[test]
    fn cell_bounds_reject_sample_on_root() {
        let family = [circle(), hyperbola()];
        assert!(matches!(
            cell_bounds_1d(&family, &rat(0), ProjectionMode::Classical),
            Err(Error::OnProjectionRoot)
        ));
    }

    #[test]
    fn section_check_circle_against_hyperbola() {
        // over [-9/10, 9/10] the hyperbola never meets the circle branches
        let path = BasePath::segment(vec![ratio(-9, 10)], vec![ratio(9, 10)], 48).unwrap();
        let reports =
            section_sign_check(&circle(), &hyperbola(), &path, &TrackOptions::default()).unwrap();
        assert_eq!(reports.len(), 2);
        for r in reports {
            assert_eq!(r.behavior, SectionBehavior::NeverVanishes);
        }
    }

    #[test]
    fn section_check_self_vanishes() {
        let path = BasePath::segment(vec![ratio(-9, 10)], vec![ratio(9, 10)], 32).unwrap();
        let reports =
            section_sign_check(&circle(), &circle(), &path, &TrackOptions::default()).unwrap();
        for r in reports {
            assert_eq!(r.behavior, SectionBehavior::VanishesIdentically);
        }
    }

    #[test]
    fn section_check_shared_factor_branch() {
        // P = (x2 + x1^3)(x1 x2 - 1), Q = x2 + x1^3: the cubic branch of P
        // is a Q-section, the hyperbola branch never meets Q
        let cubic = poly2(&[(1, [0, 1]), (1, [3, 0])]);
        let p = &cubic * &hyperbola();
        let path = BasePath::segment(vec![rat(-2)], vec![rat(2)], 48).unwrap();
        let reports = section_sign_check(&p, &cubic, &path, &TrackOptions::default()).unwrap();
        assert_eq!(reports.len(), 2);
        let idents = reports
            .iter()
            .filter(|r| r.behavior == SectionBehavior::VanishesIdentically)
            .count();
        let nevers = reports
            .iter()
            .filter(|r| r.behavior == SectionBehavior::NeverVanishes)
            .count();
        assert_eq!((idents, nevers), (1, 1));
    }
}
