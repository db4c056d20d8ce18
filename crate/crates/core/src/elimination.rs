//! Fixed-degree resultants and discriminants via padded Sylvester matrices.
//!
//! The declared degrees `(p, q)` are part of the operator: coefficient
//! vectors are padded with zeros up to the declared length before the matrix
//! is built, so a degree drop is observable (it scales the result by a power
//! of the other leading coefficient) rather than silently renormalized.
//! Determinants are computed by fraction-free Bareiss elimination over the
//! polynomial ring.
//!
//! The discriminant is the binary-form discriminant of the degree-`p`
//! homogenization, computed from the resultant of its two partial
//! derivatives:
//!
//! `Disc^p(P) = (-1)^(p(p-1)/2) / p^(p-2) · Res^(p-1,p-1)(∂g/∂x_n, ∂g/∂y)`
//!
//! with `g = H^p(P)`. Unlike `Res^(p,p-1)(P, ∂P)` this stays polynomial in
//! the base variables with a constant normalization even when the leading
//! coefficient vanishes, and it transforms under `A^{*p}` exactly by
//! `det(A)^(p(p-1))`. For `deg(P) = p` it coincides with the classical
//! discriminant `(-1)^(p(p-1)/2)·Res(P, ∂P)/lc(P)`.

use num_bigint::BigInt;
use num_traits::One;

use crate::forms::homogenize;
use crate::poly::{MultiPoly, UniPoly};
use crate::rat::Rat;
use crate::{Error, Result};

/// Padded Sylvester matrix of two coefficient vectors with respect to the
/// declared degrees `(p, q)`; entries live in the base ring.
pub struct SylvesterMatrix {
    entries: Vec<Vec<MultiPoly>>,
    p: usize,
    q: usize,
}

impl SylvesterMatrix {
    /// Builds the `(p+q) × (p+q)` matrix from base-ring coefficient vectors
    /// (`pc[k]` multiplies `x_n^k`, padded to length `p+1`, likewise `qc`).
    pub fn from_coeff_vectors(
        pc: &[MultiPoly],
        qc: &[MultiPoly],
        p: usize,
        q: usize,
        base_vars: &[String],
    ) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroReferenceDegrees);
        }
        assert!(pc.len() <= p + 1 && qc.len() <= q + 1, "padded vector too long");
        let n = p + q;
        let zero = MultiPoly::zero(base_vars);
        let mut entries = vec![vec![zero.clone(); n]; n];
        // rows 0..q hold shifts of P's coefficients, descending
        for i in 0..q {
            for k in 0..=p {
                if let Some(c) = pc.get(p - k) {
                    entries[i][i + k] = c.clone();
                }
            }
        }
        // rows q..q+p hold shifts of Q's coefficients
        for i in 0..p {
            for k in 0..=q {
                if let Some(c) = qc.get(q - k) {
                    entries[q + i][i + k] = c.clone();
                }
            }
        }
        Ok(Self { entries, p, q })
    }

    pub fn size(&self) -> usize {
        self.p + self.q
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    pub fn determinant(&self) -> MultiPoly {
        bareiss_determinant(self.entries.clone())
    }
}

/// Exact quotient `f / g` in the polynomial ring; panics when the division
/// is not exact (Bareiss guarantees divisibility of its intermediates).
fn exact_div(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    assert!(!g.is_zero(), "exact division by zero polynomial");
    if g.is_constant() {
        return f.scale(&g.constant_term().recip());
    }
    let vars = f.vars().to_vec();
    let (g_lead_exps, g_lead_coeff) = {
        let (e, c) = g.terms().next_back().expect("nonzero divisor");
        (e.clone(), c.clone())
    };
    let mut rem = f.clone();
    let mut quot = MultiPoly::zero(&vars);
    while !rem.is_zero() {
        let (r_exps, r_coeff) = {
            let (e, c) = rem.terms().next_back().unwrap();
            (e.clone(), c.clone())
        };
        let mono: Vec<u32> = r_exps
            .iter()
            .zip(g_lead_exps.iter())
            .map(|(a, b)| {
                a.checked_sub(*b)
                    .expect("leading monomial does not divide: inexact division")
            })
            .collect();
        let q = MultiPoly::from_terms(&vars, [(mono, &r_coeff / &g_lead_coeff)]);
        rem = &rem - &(&q * g);
        quot = &quot + &q;
    }
    quot
}

/// Fraction-free determinant; row pivoting over the exact zero test.
fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    let vars = m[0][0].vars().to_vec();
    if n == 0 {
        return MultiPoly::constant(&vars, Rat::one());
    }
    let mut sign = 1i64;
    let mut prev_pivot = MultiPoly::constant(&vars, Rat::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return MultiPoly::zero(&vars),
            }
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &pivot) - &(&m[i][k] * &m[k][j]);
                m[i][j] = exact_div(&num, &prev_pivot);
            }
            m[i][k] = MultiPoly::zero(&vars);
        }
        prev_pivot = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&det
    } else {
        det
    }
}

fn check_degree(p: &MultiPoly, bound: usize) -> Result<()> {
    if p.is_zero() {
        return Ok(());
    }
    let deg = p.degree_in_last()?;
    if deg > bound {
        return Err(Error::DegreeBound { degree: deg, bound });
    }
    Ok(())
}

/// Resultant with respect to the declared degrees `(p, q)`: the determinant
/// of the padded Sylvester matrix, a polynomial in the base variables. It
/// commutes with evaluation of the base variables.
pub fn resultant_fixed(p_poly: &MultiPoly, q_poly: &MultiPoly, p: usize, q: usize) -> Result<MultiPoly> {
    assert_eq!(p_poly.vars(), q_poly.vars(), "operands from different rings");
    if p == 0 && q == 0 {
        return Err(Error::ZeroReferenceDegrees);
    }
    check_degree(p_poly, p)?;
    check_degree(q_poly, q)?;
    let pc: Vec<MultiPoly> = (0..=p).map(|k| p_poly.coefficient_in_last(k)).collect();
    let qc: Vec<MultiPoly> = (0..=q).map(|k| q_poly.coefficient_in_last(k)).collect();
    let base: Vec<String> = p_poly.vars()[..p_poly.nvars() - 1].to_vec();
    Ok(SylvesterMatrix::from_coeff_vectors(&pc, &qc, p, q, &base)?.determinant())
}

/// Univariate specialization of `resultant_fixed`, returning the scalar.
pub fn resultant_fixed_uni(f: &UniPoly, g: &UniPoly, p: usize, q: usize) -> Result<Rat> {
    let fm = MultiPoly::from_uni(f, "x");
    let gm = MultiPoly::from_uni(g, "x");
    Ok(resultant_fixed(&fm, &gm, p, q)?.constant_term())
}

/// Discriminant with respect to the declared degree `p ≥ 2`; vanishes at
/// exactly the base points where the degree-`p` homogenization has a
/// repeated projective root.
pub fn discriminant_fixed(p_poly: &MultiPoly, p: usize) -> Result<MultiPoly> {
    if p < 2 {
        return Err(Error::DiscriminantDegree(p));
    }
    if p_poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_degree(p_poly, p)?;
    let g = homogenize(p_poly, p)?;
    // ∂g/∂x_n has coefficient k·c_k at index k-1; ∂g/∂y has (p-k)·c_k at k.
    let gx: Vec<MultiPoly> = (1..=p)
        .map(|k| g.coeff(k).scale(&Rat::from_integer(BigInt::from(k))))
        .collect();
    let gy: Vec<MultiPoly> = (0..p)
        .map(|k| g.coeff(k).scale(&Rat::from_integer(BigInt::from(p - k))))
        .collect();
    let base: Vec<String> = p_poly.vars()[..p_poly.nvars() - 1].to_vec();
    let det = SylvesterMatrix::from_coeff_vectors(&gx, &gy, p - 1, p - 1, &base)?.determinant();
    let sign = if (p * (p - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let scale = Rat::new(BigInt::from(sign), BigInt::from(p).pow(p as u32 - 2));
    Ok(det.scale(&scale))
}

/// Univariate specialization of `discriminant_fixed`.
pub fn discriminant_fixed_uni(f: &UniPoly, p: usize) -> Result<Rat> {
    let fm = MultiPoly::from_uni(f, "x");
    Ok(discriminant_fixed(&fm, p)?.constant_term())
}

/// Commutation check `E_{x0} ∘ Res = Res ∘ E_{x0}`: computes the resultant
/// of the evaluated pair and the evaluation of the symbolic resultant and
/// returns the common value. Rejects base points where either polynomial
/// nullifies.
pub fn evaluate_then_eliminate(
    p_poly: &MultiPoly,
    q_poly: &MultiPoly,
    p: usize,
    q: usize,
    x0: &[Rat],
) -> Result<Rat> {
    let fe = p_poly.evaluate_partial(x0)?;
    let ge = q_poly.evaluate_partial(x0)?;
    if fe.is_zero() || ge.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let from_uni = resultant_fixed_uni(&fe, &ge, p, q)?;
    let symbolic = resultant_fixed(p_poly, q_poly, p, q)?;
    let from_symbolic = symbolic.evaluate(x0)?;
    assert_eq!(
        from_uni, from_symbolic,
        "resultant failed to commute with evaluation"
    );
    Ok(from_uni)
}
