//! Exact multivariate and univariate polynomial arithmetic over the rationals.
//!
//! `MultiPoly` is a sparse exponent-map representation with a fixed, ordered
//! variable list; the last variable is always the projection variable. Maps
//! are kept canonical (no zero coefficients, `BTreeMap` ordering), so
//! structural equality is mathematical equality. `UniPoly` is the dense
//! vector form used by the root-isolation machinery.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rat::{format_rat, Rat};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

/// Sparse multivariate polynomial over `Rat`.
///
/// The exponent vectors all have length `vars.len()`, and the distinguished
/// projection variable is the last entry of `vars`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> Self {
        Self {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The monomial `x_idx`.
    pub fn var(vars: &[String], idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(exps, Rat::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(exps, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Name of the projection variable (the last one).
    pub fn last_var(&self) -> &str {
        self.vars.last().expect("polynomial has no variables")
    }

    pub fn terms(&self) -> std::collections::btree_map::Iter<'_, Vec<u32>, Rat> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * k))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(&self.vars, Rat::one());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `vars[idx]`.
    pub fn derivative_in(&self, idx: usize) -> Self {
        assert!(idx < self.vars.len(), "variable index out of range");
        let mut out = Self::zero(&self.vars);
        for (exps, c) in &self.terms {
            let k = exps[idx];
            if k == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[idx] = k - 1;
            out.add_term(e, c * Rat::from_integer(k.into()));
        }
        out
    }

    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Least `d` with the polynomial of degree at most `d` in the last
    /// variable. Undefined (an error) for the zero polynomial.
    pub fn degree_in_last(&self) -> Result<usize> {
        let idx = self.vars.len() - 1;
        self.degree_in(idx)
            .map(|d| d as usize)
            .ok_or(Error::ZeroPolynomial)
    }

    /// Coefficient of `x_n^k` as a polynomial in the base variables.
    pub fn coefficient_in_last(&self, k: usize) -> MultiPoly {
        let n = self.vars.len();
        let base: Vec<String> = self.vars[..n - 1].to_vec();
        let mut out = MultiPoly::zero(&base);
        for (exps, c) in &self.terms {
            if exps[n - 1] as usize == k {
                out.add_term(exps[..n - 1].to_vec(), c.clone());
            }
        }
        out
    }

    /// Coefficient of `x_n^k` kept in the full variable ring (last exponent
    /// zeroed). Convenience for reassembling transforms.
    pub fn coefficient_in_last_full(&self, k: usize) -> MultiPoly {
        let n = self.vars.len();
        let mut out = MultiPoly::zero(&self.vars);
        for (exps, c) in &self.terms {
            if exps[n - 1] as usize == k {
                let mut e = exps.clone();
                e[n - 1] = 0;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Full evaluation at a rational point (one value per variable).
    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(exps.iter()) {
                if e > 0 {
                    t *= pow_rat(x, e);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluation of the first `n-1` variables, leaving a univariate
    /// polynomial in the projection variable. May be the zero polynomial.
    pub fn evaluate_partial(&self, x0: &[Rat]) -> Result<UniPoly> {
        let n = self.vars.len();
        if x0.len() != n - 1 {
            return Err(Error::DimensionMismatch {
                expected: n - 1,
                got: x0.len(),
            });
        }
        let deg = self.degree_in(n - 1).unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in x0.iter().zip(exps[..n - 1].iter()) {
                if e > 0 {
                    t *= pow_rat(x, e);
                }
            }
            coeffs[exps[n - 1] as usize] += t;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Simultaneous substitution `x_i := images[i]`; all images must live in
    /// a common ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let target_vars = match images.first() {
            Some(p) => p.vars.clone(),
            None => return Ok(MultiPoly::constant(&[], self.constant_term())),
        };
        for im in images {
            assert_eq!(im.vars, target_vars, "substitution images in mixed rings");
        }
        // Cache powers of each image as they are needed.
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|im| vec![MultiPoly::constant(&target_vars, Rat::one()), im.clone()])
            .collect();
        let mut out = MultiPoly::zero(&target_vars);
        for (exps, c) in &self.terms {
            let mut t = MultiPoly::constant(&target_vars, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// `f ∘ A` for a square matrix `A` acting on the full variable vector:
    /// `(f ∘ A)(x) = f(A·x)`.
    pub fn compose_linear(&self, a: &[Vec<Rat>]) -> Result<MultiPoly> {
        let n = self.vars.len();
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: a.len(),
            });
        }
        let images: Vec<MultiPoly> = (0..n)
            .map(|i| {
                let mut row = MultiPoly::zero(&self.vars);
                for (j, c) in a[i].iter().enumerate() {
                    row = &row + &MultiPoly::var(&self.vars, j).scale(c);
                }
                row
            })
            .collect();
        self.substitute(&images)
    }

    /// Least total order `k` such that some order-`k` partial derivative is
    /// nonzero at `point`; equivalently the minimal total degree after
    /// shifting `point` to the origin.
    pub fn order_of_vanishing(&self, point: &[Rat]) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let images: Vec<MultiPoly> = (0..self.vars.len())
            .map(|i| {
                &MultiPoly::var(&self.vars, i)
                    + &MultiPoly::constant(&self.vars, point[i].clone())
            })
            .collect();
        let shifted = self.substitute(&images)?;
        Ok(shifted
            .total_degree_min()
            .expect("shift of a nonzero polynomial is nonzero"))
    }

    fn total_degree_min(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Converts a polynomial in at most one variable to dense form.
    pub fn to_uni(&self) -> UniPoly {
        assert!(
            self.vars.len() <= 1,
            "dense conversion needs at most one variable"
        );
        if self.vars.is_empty() {
            return UniPoly::constant(self.constant_term());
        }
        let deg = self.degree_in(0).unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (exps, c) in &self.terms {
            coeffs[exps[0] as usize] = c.clone();
        }
        UniPoly::new(coeffs)
    }

    /// Lifts a univariate polynomial into a one-variable sparse ring.
    pub fn from_uni(u: &UniPoly, var: &str) -> MultiPoly {
        let vars = vec![var.to_string()];
        let mut p = MultiPoly::zero(&vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            p.add_term(vec![k as u32], c.clone());
        }
        p
    }

    /// Reinterprets the polynomial over a superset of variables, matching by
    /// name. The relative order of existing variables must be preserved.
    pub fn lift_to(&self, vars: &[String]) -> MultiPoly {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .expect("lift target misses a variable")
            })
            .collect();
        let mut out = MultiPoly::zero(vars);
        for (exps, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (i, &k) in exps.iter().enumerate() {
                e[map[i]] = k;
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Canonical representative of the scaling class: integer coefficients
    /// with content 1 and positive coefficient on the lexicographically
    /// largest monomial. Used to merge projection generators.
    pub fn primitive_normalized(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c * Rat::from_integer(denom_lcm.clone());
            numer_gcd = numer_gcd.gcd(scaled.numer());
        }
        let mut scale = Rat::new(denom_lcm, numer_gcd);
        let lead = self.terms.iter().next_back().expect("nonzero").1;
        if (lead * &scale).is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }
}

fn pow_rat(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "polynomials from different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: Self) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "polynomials from different rings");
        let mut out = MultiPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rat(c))?;
            for (v, &e) in self.vars.iter().zip(exps.iter()) {
                match e {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k`.
/// The highest stored coefficient is nonzero; zero is the empty vector.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    /// Normalizes trailing zeros away.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&n| crate::rat::rat(n)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rat) -> UniPoly {
        if k.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    /// Quotient and remainder of field division.
    pub fn div_rem(&self, rhs: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        let d = rhs.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - d];
        let lc = rhs.leading_coeff();
        for k in (d..rem.len()).rev() {
            let q = &rem[k] / &lc;
            if q.is_zero() {
                continue;
            }
            for (j, c) in rhs.coeffs.iter().enumerate() {
                let delta = c * &q;
                rem[k - d + j] -= delta;
            }
            quot[k - d] = q;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, g) = monic(g)`.
    pub fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f(x + c)`.
    pub fn translate(&self, c: &Rat) -> UniPoly {
        // Synthetic Taylor shift: repeated division by (x - (-c)).
        let mut coeffs = self.coeffs.clone();
        let n = coeffs.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = &coeffs[j + 1] * c;
                coeffs[j] += add;
            }
        }
        UniPoly::new(coeffs)
    }

    /// `f(k·x)`.
    pub fn scale_arg(&self, k: &Rat) -> UniPoly {
        let mut pow = Rat::one();
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let out = c * &pow;
                    pow *= k;
                    out
                })
                .collect(),
        )
    }

    /// Coefficient reversal with respect to a declared degree `n`:
    /// `x^n·f(1/x)` for `n ≥ deg(f)`.
    pub fn reversed(&self, n: usize) -> UniPoly {
        assert!(self.coeffs.len() <= n + 1, "reversal degree too small");
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[n - k] = c.clone();
        }
        UniPoly::new(coeffs)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: Self) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: Self) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: Self) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rat(c))?,
                1 => write!(f, "{}*x", format_rat(c))?,
                _ => write!(f, "{}*x^{}", format_rat(c), k)?,
            }
        }
        Ok(())
    }
}

/// Convenience for tests and the CLI: variable lists from `&str`.
pub fn var_names(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}
