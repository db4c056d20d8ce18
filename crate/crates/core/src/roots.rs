//! Exact real-root isolation and projective root sets with multiplicities.
//!
//! Isolation runs Descartes'-rule bisection over exact rationals on each
//! squarefree factor of the input; no floating filters, so the output is
//! deterministic and certified. Rational roots are detected through the
//! rational-root theorem and stored as exact points; every other root is an
//! open isolating interval that can be refined on demand. The root at
//! infinity is never a large finite surrogate: `ProjRootSet` carries its
//! multiplicity `d - deg` explicitly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::UniPoly;
use crate::projective::NumProjPoint;
use crate::projective::ProjPoint;
use crate::rat::Rat;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Squarefree decomposition
// ---------------------------------------------------------------------------

/// Yun decomposition: returns monic, pairwise-coprime squarefree factors
/// with their multiplicities; the product of `factor^multiplicity` equals
/// the input up to a rational constant.
pub fn squarefree_decomposition(u: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if u.degree().unwrap() == 0 {
        return Ok(Vec::new());
    }
    let f = u.monic();
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.degree() == Some(0) {
        return Ok(vec![(f, 1)]);
    }
    let (mut a, _) = f.div_rem(&g);
    let (mut b, _) = df.div_rem(&g);
    let mut out = Vec::new();
    let mut mult = 1u32;
    loop {
        let c = &b - &a.derivative();
        if c.is_zero() {
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), mult));
            }
            break;
        }
        let d = a.gcd(&c);
        if d.degree().unwrap_or(0) > 0 {
            out.push((d.clone(), mult));
        }
        let (na, _) = a.div_rem(&d);
        let (nb, _) = c.div_rem(&d);
        if na.degree() == Some(0) {
            break;
        }
        a = na;
        b = nb;
        mult += 1;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Isolated roots
// ---------------------------------------------------------------------------

/// Where an isolated root lives: an exact rational point or an open
/// isolating interval with non-root rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub enum RootLocation {
    Exact(Rat),
    Interval { lo: Rat, hi: Rat },
}

/// One real root: its location, multiplicity in the original polynomial, and
/// the squarefree factor it is a simple root of.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRoot {
    pub location: RootLocation,
    pub multiplicity: u32,
    pub factor: UniPoly,
}

impl IsolatedRoot {
    /// Lower bound of the location.
    pub fn lo(&self) -> &Rat {
        match &self.location {
            RootLocation::Exact(r) => r,
            RootLocation::Interval { lo, .. } => lo,
        }
    }

    /// Upper bound of the location.
    pub fn hi(&self) -> &Rat {
        match &self.location {
            RootLocation::Exact(r) => r,
            RootLocation::Interval { hi, .. } => hi,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.location, RootLocation::Exact(_))
    }

    /// Interval width; zero for exact points.
    pub fn width(&self) -> Rat {
        self.hi() - self.lo()
    }

    /// Bisects the isolating interval until its width is at most `eps`;
    /// exact points are already refined. The defining factor changes sign
    /// across the interval, so plain sign bisection applies.
    pub fn refined(&self, eps: &Rat) -> IsolatedRoot {
        assert!(eps.is_positive(), "refinement needs a positive width");
        let (mut lo, mut hi) = match &self.location {
            RootLocation::Exact(_) => return self.clone(),
            RootLocation::Interval { lo, hi } => (lo.clone(), hi.clone()),
        };
        let sign_hi = self.factor.sign_at(&hi);
        debug_assert_ne!(self.factor.sign_at(&lo) * sign_hi, 1, "no sign change");
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        while &hi - &lo > *eps {
            let mid = (&lo + &hi) * &half;
            let s = self.factor.sign_at(&mid);
            if s == 0 {
                return IsolatedRoot {
                    location: RootLocation::Exact(mid),
                    multiplicity: self.multiplicity,
                    factor: self.factor.clone(),
                };
            }
            if s == sign_hi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        IsolatedRoot {
            location: RootLocation::Interval { lo, hi },
            multiplicity: self.multiplicity,
            factor: self.factor.clone(),
        }
    }

    /// Floating approximation of the root after refinement.
    pub fn approx_f64(&self) -> f64 {
        match &self.location {
            RootLocation::Exact(r) => crate::rat::rat_to_f64(r),
            RootLocation::Interval { .. } => {
                let tight = self.refined(&Rat::new(BigInt::one(), BigInt::from(1u64 << 40)));
                let mid = (tight.lo() + tight.hi()) / Rat::from_integer(BigInt::from(2));
                crate::rat::rat_to_f64(&mid)
            }
        }
    }

    /// Image on the `ψ` circle, accurate to the refinement width.
    pub fn embed_circle(&self) -> NumProjPoint {
        match &self.location {
            RootLocation::Exact(r) => ProjPoint::from_affine(r.clone()).embed_circle(),
            RootLocation::Interval { .. } => NumProjPoint::from_affine_f64(self.approx_f64()),
        }
    }

    /// Exact comparison against a rational: `Less`, `Equal` (only possible
    /// for exact points), or `Greater`, refining as needed.
    pub fn cmp_rat(&self, q: &Rat) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let mut root = self.clone();
        loop {
            match &root.location {
                RootLocation::Exact(r) => return r.cmp(q),
                RootLocation::Interval { lo, hi } => {
                    if q <= lo {
                        return Ordering::Greater;
                    }
                    if q >= hi {
                        return Ordering::Less;
                    }
                    // q inside: either q is the root or refinement separates
                    if root.factor.sign_at(q) == 0 {
                        return Ordering::Equal;
                    }
                    let w = root.width() / Rat::from_integer(BigInt::from(2));
                    root = root.refined(&w);
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Isolation
// ---------------------------------------------------------------------------

fn sign_variations(coeffs: &[Rat]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let s = if c.is_positive() { 1 } else { -1 };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Cauchy bound: all real roots lie strictly inside `(-B, B)`.
fn root_bound(f: &UniPoly) -> Rat {
    let lc = f.leading_coeff();
    let mut max = Rat::zero();
    for c in &f.coeffs()[..f.coeffs().len() - 1] {
        let m = (c / &lc).abs();
        if m > max {
            max = m;
        }
    }
    max + Rat::one()
}

/// Number-of-roots bound for the open interval `(lo, hi)` by Descartes' rule
/// after the interval-to-halfline transform.
fn descartes_count(f: &UniPoly, lo: &Rat, hi: &Rat) -> usize {
    let n = f.degree().unwrap();
    // g(x) = f(lo + (hi - lo)·x) maps (0,1) onto (lo, hi)
    let g = f.scale_arg(&(hi - lo)).translate(&(lo / &(hi - lo)));
    // h(x) = (x+1)^n·g(1/(x+1)): positive roots of h are roots of g in (0,1)
    let h = g.reversed(n).translate(&Rat::one());
    sign_variations(h.coeffs())
}

/// Rational roots of a squarefree polynomial, found by the rational-root
/// theorem on the primitive integer form. Gives up (returns `None`) when the
/// end coefficients are too large to factor cheaply or spawn too many
/// candidates; isolation then keeps those roots as intervals, which is still
/// correct.
fn rational_roots(f: &UniPoly) -> Option<Vec<Rat>> {
    let mut denom_lcm = BigInt::one();
    for c in f.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(denom_lcm.clone())).numer().clone())
        .collect();
    // strip zero roots first
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    let mut roots = Vec::new();
    if shift > 0 {
        roots.push(Rat::zero());
    }
    let body = &ints[shift..];
    if body.len() <= 1 {
        return Some(roots);
    }
    let a0 = body[0].abs();
    let an = body.last().unwrap().abs();
    let limit = BigInt::from(1_000_000_000_000u64);
    if a0 > limit || an > limit {
        return None;
    }
    let ps = small_divisors(&a0)?;
    let qs = small_divisors(&an)?;
    if ps.len() * qs.len() > 256 {
        return None;
    }
    let n = body.len() - 1;
    for p in &ps {
        for q in &qs {
            if !p.gcd(q).is_one() {
                continue;
            }
            // integer Horner: q^n·f(±p/q) = Σ a_i (±p)^i q^(n-i)
            let mut qpow = vec![BigInt::one()];
            for _ in 0..n {
                qpow.push(qpow.last().unwrap() * q);
            }
            for sign in [1i64, -1] {
                let sp = p * BigInt::from(sign);
                let mut val = BigInt::zero();
                for (i, a) in body.iter().enumerate() {
                    val += a * num_traits::pow::pow(sp.clone(), i) * &qpow[n - i];
                }
                if val.is_zero() {
                    let cand = Rat::new(sp.clone(), q.clone());
                    if !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    Some(roots)
}

/// Positive divisors by trial division; `None` when the number is too big.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    use num_traits::ToPrimitive;
    let n = n.to_u64()?;
    if n == 0 {
        return Some(vec![BigInt::one()]);
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Isolates the real roots of one squarefree polynomial as exact points and
/// disjoint open intervals.
fn isolate_squarefree(f: &UniPoly) -> Vec<RootLocation> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut f = f.clone();
    if let Some(rs) = rational_roots(&f) {
        for r in rs {
            out.push(RootLocation::Exact(r.clone()));
            let lin = UniPoly::new(vec![-r, Rat::one()]);
            let (q, rem) = f.div_rem(&lin);
            debug_assert!(rem.is_zero());
            f = q;
        }
    }
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let b = root_bound(&f);
    let mut stack = vec![(-b.clone(), b)];
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    while let Some((lo, hi)) = stack.pop() {
        match descartes_count(&f, &lo, &hi) {
            0 => {}
            1 => out.push(RootLocation::Interval { lo, hi }),
            _ => {
                let mid = (&lo + &hi) * &half;
                if f.sign_at(&mid) == 0 {
                    out.push(RootLocation::Exact(mid.clone()));
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out
}

/// Complete, disjoint isolation of all real roots, ordered increasingly,
/// with multiplicities from the squarefree decomposition.
pub fn isolate_real_roots(u: &UniPoly) -> Result<Vec<IsolatedRoot>> {
    let mut roots: Vec<IsolatedRoot> = Vec::new();
    for (factor, mult) in squarefree_decomposition(u)? {
        for location in isolate_squarefree(&factor) {
            roots.push(IsolatedRoot {
                location,
                multiplicity: mult,
                factor: factor.clone(),
            });
        }
    }
    separate_roots(&mut roots);
    roots.sort_by(|a, b| a.lo().cmp(b.lo()));
    Ok(roots)
}

/// Refines intervals pairwise until all root locations are disjoint.
/// Roots of coprime squarefree factors are distinct reals, so this
/// terminates.
fn separate_roots(roots: &mut [IsolatedRoot]) {
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            loop {
                let disjoint = roots[i].hi() <= roots[j].lo()
                    || roots[j].hi() <= roots[i].lo()
                    || (roots[i].is_exact()
                        && roots[j].is_exact()
                        && roots[i].lo() != roots[j].lo());
                if disjoint {
                    break;
                }
                for k in [i, j] {
                    let w = roots[k].width() * &half;
                    if w.is_positive() {
                        roots[k] = roots[k].refined(&w);
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Projective root sets
// ---------------------------------------------------------------------------

/// The projective roots of a univariate polynomial with respect to a
/// reference degree `d`: the real roots through `φ`, plus the root at
/// infinity with multiplicity `d - deg` when that is positive.
#[derive(Clone, Debug)]
pub struct ProjRootSet {
    pub reference_degree: usize,
    pub real_roots: Vec<IsolatedRoot>,
    pub infinity_multiplicity: u32,
}

impl ProjRootSet {
    /// Number of distinct projective roots.
    pub fn branch_count(&self) -> usize {
        self.real_roots.len() + usize::from(self.infinity_multiplicity > 0)
    }

    /// Sorted multiset of real-root multiplicities.
    pub fn real_multiplicities(&self) -> Vec<u32> {
        let mut m: Vec<u32> = self.real_roots.iter().map(|r| r.multiplicity).collect();
        m.sort_unstable();
        m
    }

    /// Sorted multiset of projective multiplicities, infinity included.
    pub fn projective_multiplicities(&self) -> Vec<u32> {
        let mut m = self.real_multiplicities();
        if self.infinity_multiplicity > 0 {
            m.push(self.infinity_multiplicity);
            m.sort_unstable();
        }
        m
    }

    /// Total projective multiplicity; at most the reference degree, with the
    /// gap accounted for by non-real conjugate root pairs.
    pub fn total_multiplicity(&self) -> u32 {
        self.real_roots.iter().map(|r| r.multiplicity).sum::<u32>()
            + self.infinity_multiplicity
    }
}

/// Projective roots of `u` with respect to degree `d`. The zero polynomial
/// signals nullification to callers; `d` must dominate the actual degree.
pub fn projective_roots(u: &UniPoly, d: usize) -> Result<ProjRootSet> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = u.degree().unwrap();
    if deg > d {
        return Err(Error::DegreeBound {
            degree: deg,
            bound: d,
        });
    }
    Ok(ProjRootSet {
        reference_degree: d,
        real_roots: isolate_real_roots(u)?,
        infinity_multiplicity: (d - deg) as u32,
    })
}
