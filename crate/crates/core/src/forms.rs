//! Binary forms, homogenization, pull-back and GL(2) polynomial transforms.
//!
//! A degree-`d` form in the pair `(x_n, y)` is stored as its vector of base
//! coefficients, mirroring the coefficient-wise extension of the univariate
//! operators to `n` variables. The reference degree is an explicit argument
//! everywhere; the degree of an operand is never inferred, since pulling back
//! and homogenizing with different degrees are not inverse to each other.

use num_traits::{One, Zero};

use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::{Error, Result};

/// Homogeneous degree-`d` polynomial in `(x_n, y)` with coefficients in the
/// base variables: `coeffs[k]` multiplies `x_n^k · y^(d-k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<MultiPoly>,
    /// Name of the homogenized variable, kept so the pull-back can rebuild
    /// the full ring.
    var: String,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<MultiPoly>, var: impl Into<String>) -> Self {
        assert_eq!(coeffs.len(), degree + 1, "coefficient vector length");
        Self {
            degree,
            coeffs,
            var: var.into(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn base_vars(&self) -> &[String] {
        self.coeffs[0].vars()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The form as a polynomial over `base ∪ {x_n, y}`; used by order
    /// computations on the homogenized zero set.
    pub fn to_flat_poly(&self, y_name: &str) -> MultiPoly {
        let mut vars = self.base_vars().to_vec();
        vars.push(self.var.clone());
        vars.push(y_name.to_string());
        let n = vars.len();
        let mut out = MultiPoly::zero(&vars);
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut mono_exps = vec![0u32; n];
            mono_exps[n - 2] = k as u32;
            mono_exps[n - 1] = (self.degree - k) as u32;
            let mono = MultiPoly::from_terms(&vars, [(mono_exps, Rat::one())]);
            out = &out + &(&c.lift_to(&vars) * &mono);
        }
        out
    }

    /// Evaluates the `(x_n, y)` pair at a fixed rational direction, leaving a
    /// polynomial in the base variables: `Σ c_k · a^k · b^(d-k)`.
    pub fn eval_direction(&self, a: &Rat, b: &Rat) -> MultiPoly {
        let base = self.base_vars();
        let mut acc = MultiPoly::zero(base);
        for (k, c) in self.coeffs.iter().enumerate() {
            let scalar = pow(a, k as u32) * pow(b, (self.degree - k) as u32);
            acc = &acc + &c.scale(&scalar);
        }
        acc
    }

    /// Right composition with `A`: the form `(x_n, y) ↦ g(A·(x_n, y)ᵀ)`,
    /// of the same degree.
    pub fn compose_right(&self, a: &Matrix2) -> BinaryForm {
        let d = self.degree;
        let base = self.base_vars();
        let mut out = vec![MultiPoly::zero(base); d + 1];
        // (a11 x + a12 y)^k (a21 x + a22 y)^(d-k), expanded by binomials.
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let first = binomial_power(&a.a11, &a.a12, k as u32);
            let second = binomial_power(&a.a21, &a.a22, (d - k) as u32);
            for (i, fi) in first.iter().enumerate() {
                for (j, sj) in second.iter().enumerate() {
                    let coeff = fi * sj;
                    if coeff.is_zero() {
                        continue;
                    }
                    let idx = i + j;
                    out[idx] = &out[idx] + &c.scale(&coeff);
                }
            }
        }
        BinaryForm::new(d, out, self.var.clone())
    }
}

/// Coefficients of `(p·x + q·y)^m` in `x^i y^(m-i)`, index `i`.
fn binomial_power(p: &Rat, q: &Rat, m: u32) -> Vec<Rat> {
    let mut out = Vec::with_capacity(m as usize + 1);
    // binom(m, i) p^i q^(m-i), built incrementally
    for i in 0..=m {
        out.push(binom(m, i) * pow(p, i) * pow(q, m - i));
    }
    out
}

fn binom(n: u32, k: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc = acc * Rat::from_integer((n - i).into()) / Rat::from_integer((i + 1).into());
    }
    acc
}

fn pow(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

// ---------------------------------------------------------------------------
// Matrix2
// ---------------------------------------------------------------------------

/// Invertible 2×2 rational matrix; the determinant is cached at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix2 {
    pub a11: Rat,
    pub a12: Rat,
    pub a21: Rat,
    pub a22: Rat,
    det: Rat,
}

impl Matrix2 {
    pub fn new(a11: Rat, a12: Rat, a21: Rat, a22: Rat) -> Result<Self> {
        let det = &a11 * &a22 - &a12 * &a21;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self {
            a11,
            a12,
            a21,
            a22,
            det,
        })
    }

    pub fn from_i64(a11: i64, a12: i64, a21: i64, a22: i64) -> Result<Self> {
        Self::new(
            crate::rat::rat(a11),
            crate::rat::rat(a12),
            crate::rat::rat(a21),
            crate::rat::rat(a22),
        )
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1).unwrap()
    }

    pub fn det(&self) -> &Rat {
        &self.det
    }

    pub fn is_identity(&self) -> bool {
        self.a11.is_one() && self.a12.is_zero() && self.a21.is_zero() && self.a22.is_one()
    }

    pub fn mul(&self, rhs: &Matrix2) -> Matrix2 {
        Matrix2 {
            a11: &self.a11 * &rhs.a11 + &self.a12 * &rhs.a21,
            a12: &self.a11 * &rhs.a12 + &self.a12 * &rhs.a22,
            a21: &self.a21 * &rhs.a11 + &self.a22 * &rhs.a21,
            a22: &self.a21 * &rhs.a12 + &self.a22 * &rhs.a22,
            det: &self.det * &rhs.det,
        }
    }

    pub fn inverse(&self) -> Matrix2 {
        let d = &self.det;
        Matrix2 {
            a11: &self.a22 / d,
            a12: -(&self.a12 / d),
            a21: -(&self.a21 / d),
            a22: &self.a11 / d,
            det: d.recip(),
        }
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, x: &Rat, y: &Rat) -> (Rat, Rat) {
        (
            &self.a11 * x + &self.a12 * y,
            &self.a21 * x + &self.a22 * y,
        )
    }
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

/// Homogenization with respect to degree `d`: transports the coefficients of
/// powers of the last variable into a degree-`d` binary form.
pub fn homogenize(p: &MultiPoly, d: usize) -> Result<BinaryForm> {
    let deg = if p.is_zero() { 0 } else { p.degree_in_last()? };
    if deg > d {
        return Err(Error::DegreeBound {
            degree: deg,
            bound: d,
        });
    }
    let coeffs = (0..=d).map(|k| p.coefficient_in_last(k)).collect();
    Ok(BinaryForm::new(d, coeffs, p.last_var()))
}

/// Pull-back `y := 1`; the inverse of `homogenize` at the same degree.
pub fn pullback(g: &BinaryForm) -> MultiPoly {
    let mut vars = g.base_vars().to_vec();
    vars.push(g.var().to_string());
    let n = vars.len();
    let mut out = MultiPoly::zero(&vars);
    for (k, c) in g.coeffs().iter().enumerate() {
        let mut mono_exps = vec![0u32; n];
        mono_exps[n - 1] = k as u32;
        let mono = MultiPoly::from_terms(&vars, [(mono_exps, Rat::one())]);
        out = &out + &(&c.lift_to(&vars) * &mono);
    }
    out
}

/// Pull-back along the line parameterized by `A`: `ι_A^{*d} = ι^{*d} ∘ R_A`.
pub fn pullback_wrt(g: &BinaryForm, a: &Matrix2) -> MultiPoly {
    pullback(&g.compose_right(a))
}

/// Homogenization with respect to `A`: `H_A^d = R_{A⁻¹} ∘ H^d`.
pub fn homogenize_wrt(p: &MultiPoly, a: &Matrix2, d: usize) -> Result<BinaryForm> {
    Ok(homogenize(p, d)?.compose_right(&a.inverse()))
}

/// The Möbius transform of a polynomial with respect to a reference degree:
///
/// `Σ_k c_k(x) · (a11·x_n + a12)^k · (a21·x_n + a22)^(d-k)`
///
/// computed by direct binomial expansion in the full ring. The coefficient of
/// `x_n^d` in the result is the homogenization evaluated at `(a11, a21)`.
pub fn moebius_transform(p: &MultiPoly, a: &Matrix2, d: usize) -> Result<MultiPoly> {
    let deg = if p.is_zero() { 0 } else { p.degree_in_last()? };
    if deg > d {
        return Err(Error::DegreeBound {
            degree: deg,
            bound: d,
        });
    }
    let vars = p.vars();
    let n = vars.len();
    let xn = MultiPoly::var(vars, n - 1);
    let lin1 = &xn.scale(&a.a11) + &MultiPoly::constant(vars, a.a12.clone());
    let lin2 = &xn.scale(&a.a21) + &MultiPoly::constant(vars, a.a22.clone());
    // powers of the two linear factors up to d
    let mut pow1 = vec![MultiPoly::constant(vars, Rat::one())];
    let mut pow2 = vec![MultiPoly::constant(vars, Rat::one())];
    for k in 1..=d {
        pow1.push(&pow1[k - 1] * &lin1);
        pow2.push(&pow2[k - 1] * &lin2);
    }
    let mut out = MultiPoly::zero(vars);
    for k in 0..=d {
        let ck = p.coefficient_in_last_full(k);
        if ck.is_zero() {
            continue;
        }
        out = &out + &(&(&ck * &pow1[k]) * &pow2[d - k]);
    }
    Ok(out)
}

/// `moebius_transform` for dense univariate polynomials.
pub fn moebius_transform_uni(u: &crate::poly::UniPoly, a: &Matrix2, d: usize) -> Result<crate::poly::UniPoly> {
    let p = MultiPoly::from_uni(u, "x");
    Ok(moebius_transform(&p, a, d)?.to_uni())
}
