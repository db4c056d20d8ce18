//! Sampled tracking of projective root branches along one-parameter paths.
//!
//! Sample points are exact rationals and the root set above each sample is
//! computed exactly; only the `ψ` embedding and the branch matching between
//! consecutive samples are floating. The verdict is a semi-decision:
//! CONSISTENT means the sampled data is compatible with projective
//! delineability, while VIOLATION is a genuine counterexample certificate at
//! the witnessed parameter.
//!
//! The uniform grid is augmented with the exact real roots of the leading
//! coefficient and of the discriminant of the path-restricted polynomial, so
//! zero-dimensional events (a root reaching infinity, roots colliding) are
//! sampled exactly even when they fall between grid points. Circle samples
//! come from the rational half-angle parameterization and therefore lie
//! exactly on the circle.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::elimination::discriminant_fixed;
use crate::poly::{MultiPoly, UniPoly};
use crate::projective::{chordal_distance, NumProjPoint};
use crate::rat::{rat_to_f64, Rat};
use crate::roots::{projective_roots, IsolatedRoot, RootLocation};
use crate::{Error, Result};

/// Minimal number of grid samples on a path.
pub const MIN_SAMPLES: usize = 16;

/// One-parameter base path with exact rational sample points.
#[derive(Clone, Debug)]
pub enum BasePath {
    /// Affine segment from `start` to `end`, sampled at `samples` uniform
    /// parameters including both endpoints.
    Segment {
        start: Vec<Rat>,
        end: Vec<Rat>,
        samples: usize,
    },
    /// Circle of radius `radius` around `center` in a two-dimensional base,
    /// sampled at `samples` near-uniform angles; the path is closed.
    Circle {
        center: [Rat; 2],
        radius: Rat,
        samples: usize,
    },
}

/// Exact position on a path. Segments are keyed by the normalized parameter
/// in `[0, 1]`. Circle positions are keyed by the half-angle coordinate
/// `u = tan(θ/2)` together with the one point (`θ = π`) that coordinate
/// misses; ordering follows the angle `θ ∈ [0, 2π)`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum PathKey {
    Seg(Rat),
    CircleU(Rat),
    CirclePi,
}

impl PathKey {
    /// Position class along the angle order: `u ≥ 0`, then `θ = π`, then
    /// `u < 0`.
    fn class(&self) -> u8 {
        match self {
            PathKey::Seg(_) => 0,
            PathKey::CircleU(u) => {
                if u.is_negative() {
                    2
                } else {
                    0
                }
            }
            PathKey::CirclePi => 1,
        }
    }
}

impl Ord for PathKey {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PathKey::Seg(a), PathKey::Seg(b)) => a.cmp(b),
            _ => {
                let c = self.class().cmp(&other.class());
                if c != Ordering::Equal {
                    return c;
                }
                match (self, other) {
                    (PathKey::CircleU(a), PathKey::CircleU(b)) => a.cmp(b),
                    _ => Ordering::Equal,
                }
            }
        }
    }
}

impl PartialOrd for PathKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BasePath {
    pub fn segment(start: Vec<Rat>, end: Vec<Rat>, samples: usize) -> Result<Self> {
        if samples < MIN_SAMPLES {
            return Err(Error::TooFewSamples {
                min: MIN_SAMPLES,
                got: samples,
            });
        }
        if start.len() != end.len() || start.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: start.len().max(1),
                got: end.len(),
            });
        }
        Ok(BasePath::Segment {
            start,
            end,
            samples,
        })
    }

    pub fn circle(center: [Rat; 2], radius: Rat, samples: usize) -> Result<Self> {
        if samples < MIN_SAMPLES {
            return Err(Error::TooFewSamples {
                min: MIN_SAMPLES,
                got: samples,
            });
        }
        if !radius.is_positive() {
            return Err(Error::BadInput("circle radius must be positive".into()));
        }
        Ok(BasePath::Circle {
            center,
            radius,
            samples,
        })
    }

    pub fn unit_circle(samples: usize) -> Result<Self> {
        Self::circle([Rat::zero(), Rat::zero()], Rat::one(), samples)
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, BasePath::Circle { .. })
    }

    pub fn base_dim(&self) -> usize {
        match self {
            BasePath::Segment { start, .. } => start.len(),
            BasePath::Circle { .. } => 2,
        }
    }

    fn sample_count(&self) -> usize {
        match self {
            BasePath::Segment { samples, .. } | BasePath::Circle { samples, .. } => *samples,
        }
    }

    /// Exact point at a key.
    fn point_at_key(&self, key: &PathKey) -> Vec<Rat> {
        match (self, key) {
            (BasePath::Segment { start, end, .. }, PathKey::Seg(tau)) => start
                .iter()
                .zip(end.iter())
                .map(|(a, b)| a + &(b - a) * tau)
                .collect(),
            (BasePath::Circle { center, radius, .. }, PathKey::CirclePi) => {
                vec![&center[0] - radius, center[1].clone()]
            }
            (BasePath::Circle { center, radius, .. }, PathKey::CircleU(u)) => {
                let u2 = u * u;
                let denom = &u2 + Rat::one();
                let c = (Rat::one() - &u2) / &denom;
                let s = Rat::from_integer(BigInt::from(2)) * u / &denom;
                vec![&center[0] + &(radius * &c), &center[1] + &(radius * &s)]
            }
            _ => unreachable!("key does not belong to this path kind"),
        }
    }

    /// Display parameter: the varying coordinate of a one-coordinate
    /// segment, the normalized parameter otherwise, and the angle in
    /// `[0, 2π)` for circles.
    fn display_t(&self, key: &PathKey, point: &[Rat]) -> f64 {
        match (self, key) {
            (BasePath::Segment { start, end, .. }, PathKey::Seg(tau)) => {
                let varying: Vec<usize> = (0..start.len())
                    .filter(|&i| start[i] != end[i])
                    .collect();
                match varying.as_slice() {
                    [i] => rat_to_f64(&point[*i]),
                    _ => rat_to_f64(tau),
                }
            }
            (_, PathKey::CirclePi) => std::f64::consts::PI,
            (_, PathKey::CircleU(u)) => {
                let theta = 2.0 * rat_to_f64(u).atan();
                if theta < 0.0 {
                    theta + std::f64::consts::TAU
                } else {
                    theta
                }
            }
            _ => unreachable!("key does not belong to this path kind"),
        }
    }

    /// The polynomial restricted to the path: an exact polynomial in the
    /// path parameter and the projection variable. For circles the parameter
    /// is the half-angle coordinate and denominators `(1+u²)` are cleared.
    fn restrict(&self, p: &MultiPoly) -> MultiPoly {
        let n = p.nvars();
        let vars = crate::poly::var_names(&["t", "xn"]);
        match self {
            BasePath::Segment { start, end, .. } => {
                let mut images: Vec<MultiPoly> = (0..n - 1)
                    .map(|i| {
                        let c = MultiPoly::constant(&vars, start[i].clone());
                        let slope = MultiPoly::var(&vars, 0).scale(&(&end[i] - &start[i]));
                        &c + &slope
                    })
                    .collect();
                images.push(MultiPoly::var(&vars, 1));
                p.substitute(&images).expect("arity checked")
            }
            BasePath::Circle { center, radius, .. } => {
                debug_assert_eq!(n, 3, "circle paths need a 2-dimensional base");
                let u = MultiPoly::var(&vars, 0);
                let xn = MultiPoly::var(&vars, 1);
                let one = MultiPoly::constant(&vars, Rat::one());
                let u2 = &u * &u;
                let denom = &one + &u2;
                let n1 = &(&MultiPoly::constant(&vars, center[0].clone()) * &denom)
                    + &(&one - &u2).scale(radius);
                let n2 = &(&MultiPoly::constant(&vars, center[1].clone()) * &denom)
                    + &u.scale(&(radius * Rat::from_integer(BigInt::from(2))));
                let m = p.terms().map(|(e, _)| e[0] + e[1]).max().unwrap_or(0);
                let mut out = MultiPoly::zero(&vars);
                for (exps, c) in p.terms() {
                    let mut t = MultiPoly::constant(&vars, c.clone());
                    t = &t * &n1.pow(exps[0]);
                    t = &t * &n2.pow(exps[1]);
                    t = &t * &denom.pow(m - exps[0] - exps[1]);
                    t = &t * &xn.pow(exps[2]);
                    out = &out + &t;
                }
                out
            }
        }
    }

    /// Keys of the uniform grid.
    fn grid_keys(&self) -> Vec<PathKey> {
        let n = self.sample_count();
        match self {
            BasePath::Segment { .. } => (0..n)
                .map(|j| PathKey::Seg(Rat::new(BigInt::from(j), BigInt::from(n - 1))))
                .collect(),
            BasePath::Circle { .. } => (0..n)
                .map(|j| {
                    if 2 * j == n {
                        PathKey::CirclePi
                    } else {
                        let theta = std::f64::consts::TAU * (j as f64) / (n as f64);
                        PathKey::CircleU(snap_rational((theta / 2.0).tan()))
                    }
                })
                .collect(),
        }
    }

    /// Keys of exact event samples: parameter values where the leading
    /// coefficient or the discriminant of the restricted polynomial
    /// vanishes. Irrational events contribute tight rational brackets.
    fn event_keys(&self, p: &MultiPoly) -> Result<Vec<PathKey>> {
        let restricted = self.restrict(p);
        if restricted.is_zero() {
            return Ok(Vec::new()); // nullified everywhere; sampling reports it
        }
        let d = restricted.degree_in_last()?;
        let mut event_polys: Vec<UniPoly> = Vec::new();
        let lc = restricted.coefficient_in_last(d).to_uni();
        if lc.degree().unwrap_or(0) > 0 {
            event_polys.push(lc);
        }
        if d >= 2 {
            let disc = discriminant_fixed(&restricted, d)?;
            if !disc.is_zero() {
                let disc = disc.to_uni();
                if disc.degree().unwrap_or(0) > 0 {
                    event_polys.push(disc);
                }
            }
        }
        let bracket = Rat::new(BigInt::one(), BigInt::from(4 * self.sample_count() as u64));
        let mut keys = Vec::new();
        for poly in event_polys {
            for root in crate::roots::isolate_real_roots(&poly)? {
                match &root.refined(&bracket).location {
                    RootLocation::Exact(r) => keys.extend(self.param_to_key(r)),
                    RootLocation::Interval { lo, hi } => {
                        keys.extend(self.param_to_key(lo));
                        keys.extend(self.param_to_key(hi));
                    }
                }
            }
        }
        Ok(keys)
    }

    /// Wraps an event-parameter value into a key, dropping values outside
    /// the parameter range (segments only; the circle parameter is total).
    fn param_to_key(&self, value: &Rat) -> Option<PathKey> {
        match self {
            BasePath::Segment { .. } => (!value.is_negative() && *value <= Rat::one())
                .then(|| PathKey::Seg(value.clone())),
            BasePath::Circle { .. } => Some(PathKey::CircleU(value.clone())),
        }
    }

    /// A key strictly between two ordered keys, for adaptive resampling.
    fn key_between(&self, a: &PathKey, b: &PathKey) -> PathKey {
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        match (a, b) {
            (PathKey::Seg(x), PathKey::Seg(y)) => PathKey::Seg((x + y) * &half),
            (PathKey::CircleU(x), PathKey::CircleU(y)) if x.is_negative() == y.is_negative() => {
                PathKey::CircleU((x + y) * &half)
            }
            // straddling θ = π: step outward on the appropriate side
            (PathKey::CircleU(x), _) if !x.is_negative() => {
                PathKey::CircleU(x * Rat::from_integer(BigInt::from(2)) + Rat::one())
            }
            (_, PathKey::CircleU(y)) => {
                PathKey::CircleU(y * Rat::from_integer(BigInt::from(2)) - Rat::one())
            }
            _ => a.clone(),
        }
    }
}

/// Snaps a float to a dyadic rational with 24 fractional bits.
fn snap_rational(x: f64) -> Rat {
    let scale = (1u64 << 24) as f64;
    Rat::new(
        BigInt::from((x * scale).round() as i128),
        BigInt::from(1u64 << 24),
    )
}

// ---------------------------------------------------------------------------
// Tracked roots and verdicts
// ---------------------------------------------------------------------------

/// A projective root above one sample: `None` is the root at infinity.
#[derive(Clone, Debug)]
pub struct TrackedRoot {
    pub root: Option<IsolatedRoot>,
    pub multiplicity: u32,
    pub embedded: NumProjPoint,
}

impl TrackedRoot {
    pub fn is_infinity(&self) -> bool {
        self.root.is_none()
    }
}

/// Samples of one branch along the path.
#[derive(Clone, Debug)]
pub struct RootTrace {
    pub branch_id: usize,
    pub multiplicity: u32,
    pub points: Vec<(f64, TrackedRoot)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrackStatus {
    Consistent,
    Violation,
}

/// Outcome of a tracking run.
#[derive(Clone, Debug)]
pub struct TrackVerdict {
    pub status: TrackStatus,
    pub branch_count: usize,
    /// Per-branch multiplicities in branch order at the first sample.
    pub multiplicities: Vec<u32>,
    /// For closed paths: `monodromy[i]` is the branch that branch `i` has
    /// turned into after one full loop.
    pub monodromy: Option<Vec<usize>>,
    /// Display parameter of the first violation.
    pub witness: Option<f64>,
    /// Exact base point of the first violation.
    pub witness_point: Option<Vec<Rat>>,
    pub reason: Option<String>,
}

/// Whether the tracker follows projective roots (infinity included) or only
/// the real roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrackMode {
    Projective,
    RealOnly,
}

#[derive(Clone, Debug)]
pub struct TrackOptions {
    pub jump_threshold: f64,
    pub matching_margin: f64,
    pub mode: TrackMode,
}

impl Default for TrackOptions {
    fn default() -> Self {
        Self {
            jump_threshold: 0.2,
            matching_margin: 0.05,
            mode: TrackMode::Projective,
        }
    }
}

/// Full result of a tracking run: branch traces, the verdict, and the
/// sampled base points aligned with the trace indices.
#[derive(Clone, Debug)]
pub struct TrackResult {
    pub traces: Vec<RootTrace>,
    pub verdict: TrackVerdict,
    pub samples: Vec<(f64, Vec<Rat>)>,
}

// ---------------------------------------------------------------------------
// Tracking
// ---------------------------------------------------------------------------

struct SamplePoint {
    key: PathKey,
    t: f64,
    point: Vec<Rat>,
    roots: Vec<TrackedRoot>,
}

/// Tracks the projective roots of `p` along `path`.
pub fn track_roots(p: &MultiPoly, path: &BasePath, opts: &TrackOptions) -> Result<TrackResult> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if path.base_dim() != p.nvars() - 1 {
        return Err(Error::DimensionMismatch {
            expected: p.nvars() - 1,
            got: path.base_dim(),
        });
    }
    let d = p.degree_in_last()?;
    let mut keys: Vec<PathKey> = path.grid_keys();
    keys.extend(path.event_keys(p)?);
    keys.sort();
    keys.dedup();

    let mut cache: BTreeMap<Vec<Rat>, Vec<TrackedRoot>> = BTreeMap::new();
    let mut insertions = 0usize;
    loop {
        let mut samples: Vec<SamplePoint> = Vec::with_capacity(keys.len());
        for key in &keys {
            let point = path.point_at_key(key);
            if samples.last().is_some_and(|s| s.point == point) {
                continue; // snapped duplicates
            }
            let roots = match cache.get(&point) {
                Some(r) => r.clone(),
                None => {
                    let r = roots_above(p, &point, d, opts.mode)?;
                    cache.insert(point.clone(), r.clone());
                    r
                }
            };
            samples.push(SamplePoint {
                key: key.clone(),
                t: path.display_t(key, &point),
                point,
                roots,
            });
        }
        match run_matching(&samples, path, opts) {
            MatchRun::Done(result) => return Ok(result),
            MatchRun::NeedSamples(gaps) => {
                if insertions >= 3 {
                    return Err(Error::AmbiguousMatch {
                        t: samples[gaps[0]].t,
                    });
                }
                insertions += 1;
                let mut new_keys = Vec::new();
                for &i in &gaps {
                    new_keys.push(path.key_between(&samples[i - 1].key, &samples[i].key));
                }
                keys.extend(new_keys);
                keys.sort();
                keys.dedup();
            }
        }
    }
}

/// Exact projective roots above a base point, embedded on the `ψ` circle,
/// ordered real-ascending with infinity last.
fn roots_above(
    p: &MultiPoly,
    point: &[Rat],
    reference_degree: usize,
    mode: TrackMode,
) -> Result<Vec<TrackedRoot>> {
    let e = p.evaluate_partial(point)?;
    if e.is_zero() {
        return Err(Error::Nullified {
            point: format_point(point),
        });
    }
    let set = projective_roots(&e, reference_degree)?;
    let mut out: Vec<TrackedRoot> = set
        .real_roots
        .iter()
        .map(|r| TrackedRoot {
            embedded: r.embed_circle(),
            multiplicity: r.multiplicity,
            root: Some(r.clone()),
        })
        .collect();
    if mode == TrackMode::Projective && set.infinity_multiplicity > 0 {
        out.push(TrackedRoot {
            root: None,
            multiplicity: set.infinity_multiplicity,
            embedded: NumProjPoint::infinity(),
        });
    }
    Ok(out)
}

fn format_point(point: &[Rat]) -> String {
    point
        .iter()
        .map(crate::rat::format_rat)
        .collect::<Vec<_>>()
        .join(", ")
}

enum MatchRun {
    Done(TrackResult),
    /// Indices `i` where matching between samples `i-1` and `i` was
    /// ambiguous and a midpoint sample is wanted.
    NeedSamples(Vec<usize>),
}

enum StepOutcome {
    Assigned(Vec<usize>),
    Ambiguous,
    Jump(f64),
}

/// Greedy minimal-distance matching between consecutive root sets,
/// restricted to equal multiplicities.
fn match_step(prev: &[TrackedRoot], cur: &[TrackedRoot], opts: &TrackOptions) -> StepOutcome {
    let mut cands: Vec<(usize, usize, f64)> = Vec::new();
    for (i, a) in prev.iter().enumerate() {
        for (j, b) in cur.iter().enumerate() {
            if a.multiplicity == b.multiplicity {
                cands.push((i, j, chordal_distance(&a.embedded, &b.embedded)));
            }
        }
    }
    cands.sort_by(|x, y| x.2.total_cmp(&y.2).then(x.0.cmp(&y.0)).then(x.1.cmp(&y.1)));
    let mut prev_taken = vec![false; prev.len()];
    let mut cur_taken = vec![false; cur.len()];
    let mut assignment = vec![usize::MAX; prev.len()];
    let mut max_dist = 0.0f64;
    for (idx, &(i, j, d)) in cands.iter().enumerate() {
        if prev_taken[i] || cur_taken[j] {
            continue;
        }
        // ambiguity: a nearly-as-good alternative for either endpoint
        let ambiguous = cands[idx + 1..]
            .iter()
            .take_while(|&&(_, _, d2)| d2 - d < opts.matching_margin)
            .any(|&(i2, j2, _)| ((i2 == i) ^ (j2 == j)) && !prev_taken[i2] && !cur_taken[j2]);
        if ambiguous && d > f64::EPSILON {
            return StepOutcome::Ambiguous;
        }
        prev_taken[i] = true;
        cur_taken[j] = true;
        assignment[i] = j;
        max_dist = max_dist.max(d);
    }
    if assignment.iter().any(|&j| j == usize::MAX) {
        return StepOutcome::Ambiguous;
    }
    if max_dist > opts.jump_threshold {
        return StepOutcome::Jump(max_dist);
    }
    StepOutcome::Assigned(assignment)
}

fn multiset(roots: &[TrackedRoot]) -> Vec<u32> {
    let mut m: Vec<u32> = roots.iter().map(|r| r.multiplicity).collect();
    m.sort_unstable();
    m
}

fn run_matching(samples: &[SamplePoint], path: &BasePath, opts: &TrackOptions) -> MatchRun {
    let first = &samples[0];
    let branch_count = first.roots.len();
    let multiplicities: Vec<u32> = first.roots.iter().map(|r| r.multiplicity).collect();
    let mut traces: Vec<RootTrace> = first
        .roots
        .iter()
        .enumerate()
        .map(|(id, r)| RootTrace {
            branch_id: id,
            multiplicity: r.multiplicity,
            points: vec![(first.t, r.clone())],
        })
        .collect();
    let sample_meta: Vec<(f64, Vec<Rat>)> =
        samples.iter().map(|s| (s.t, s.point.clone())).collect();

    let violation = |reason: String, s: &SamplePoint, traces: Vec<RootTrace>, upto: usize| {
        MatchRun::Done(TrackResult {
            traces,
            verdict: TrackVerdict {
                status: TrackStatus::Violation,
                branch_count,
                multiplicities: multiplicities.clone(),
                monodromy: None,
                witness: Some(s.t),
                witness_point: Some(s.point.clone()),
                reason: Some(reason),
            },
            samples: sample_meta[..upto].to_vec(),
        })
    };

    // branch_index[b] = index of branch b's root within the current sample
    let mut branch_index: Vec<usize> = (0..branch_count).collect();
    for s in 1..samples.len() {
        let (prev, cur) = (&samples[s - 1], &samples[s]);
        if cur.roots.len() != prev.roots.len() {
            let reason = format!(
                "projective root count changed from {} to {}",
                prev.roots.len(),
                cur.roots.len()
            );
            return violation(reason, cur, traces, s + 1);
        }
        if multiset(&cur.roots) != multiset(&prev.roots) {
            let reason = "projective multiplicity vector changed".to_string();
            return violation(reason, cur, traces, s + 1);
        }
        match match_step(&prev.roots, &cur.roots, opts) {
            StepOutcome::Assigned(assignment) => {
                for b in 0..branch_count {
                    branch_index[b] = assignment[branch_index[b]];
                    traces[b]
                        .points
                        .push((cur.t, cur.roots[branch_index[b]].clone()));
                }
            }
            StepOutcome::Jump(dist) => {
                let reason = format!(
                    "branch moved {:.3} on the projective circle in one step (threshold {:.3})",
                    dist, opts.jump_threshold
                );
                return violation(reason, cur, traces, s + 1);
            }
            StepOutcome::Ambiguous => {
                return MatchRun::NeedSamples(vec![s]);
            }
        }
    }

    // closed paths: match the last sample back to the first for monodromy
    let mut monodromy = None;
    let mut status = TrackStatus::Consistent;
    let mut reason = None;
    if path.is_closed() && samples.len() > 1 {
        let last = samples.last().unwrap();
        match match_step(&last.roots, &first.roots, opts) {
            StepOutcome::Assigned(assignment) => {
                let perm: Vec<usize> = (0..branch_count)
                    .map(|b| assignment[branch_index[b]])
                    .collect();
                if perm.iter().enumerate().any(|(b, &img)| b != img) {
                    status = TrackStatus::Violation;
                    reason =
                        Some("nontrivial monodromy: branches permute after one loop".to_string());
                }
                monodromy = Some(perm);
            }
            StepOutcome::Jump(dist) => {
                status = TrackStatus::Violation;
                reason = Some(format!(
                    "branch moved {:.3} closing the loop (threshold {:.3})",
                    dist, opts.jump_threshold
                ));
            }
            StepOutcome::Ambiguous => {
                return MatchRun::NeedSamples(vec![samples.len() - 1]);
            }
        }
    }

    MatchRun::Done(TrackResult {
        traces,
        verdict: TrackVerdict {
            status,
            branch_count,
            multiplicities,
            monodromy,
            witness: None,
            witness_point: None,
            reason,
        },
        samples: sample_meta,
    })
}
