//! Shared helpers for the integration suites: deterministic random
//! generators and a cofactor-expansion Sylvester oracle kept independent of
//! the library's Bareiss implementation.

#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use projcad::forms::Matrix2;
use projcad::poly::{var_names, MultiPoly, UniPoly};
use projcad::rat::{rat, Rat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random integer-coefficient rational in `[-9, 9]` with denominator 1 or 2.
pub fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(-9i64..=9);
    let den = if rng.gen_bool(0.25) { 2 } else { 1 };
    projcad::rat::ratio(num, den)
}

/// Random polynomial in `base_dim + 1` variables (the last is the
/// projection variable) with x_n-degree at most `deg_xn`, base degree at
/// most 2, coefficients in `[-9, 9]`.
pub fn rand_poly(rng: &mut ChaCha8Rng, base_dim: usize, deg_xn: usize) -> MultiPoly {
    let names: Vec<String> = (1..=base_dim + 1).map(|i| format!("x{i}")).collect();
    let vars = var_names(&names.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    let mut terms = Vec::new();
    for k in 0..=deg_xn {
        // a couple of base monomials per x_n power
        for _ in 0..2 {
            let mut exps = vec![0u32; base_dim + 1];
            for e in exps.iter_mut().take(base_dim) {
                *e = rng.gen_range(0..=2u32);
            }
            exps[base_dim] = k as u32;
            let c = rng.gen_range(-9i64..=9);
            if c != 0 {
                terms.push((exps, rat(c)));
            }
        }
    }
    MultiPoly::from_terms(&vars, terms)
}

/// Like `rand_poly` but guaranteed nonzero with exact x_n-degree `deg_xn`.
pub fn rand_poly_exact_degree(rng: &mut ChaCha8Rng, base_dim: usize, deg_xn: usize) -> MultiPoly {
    loop {
        let p = rand_poly(rng, base_dim, deg_xn);
        if !p.is_zero() && p.degree_in_last().unwrap() == deg_xn {
            return p;
        }
    }
}

/// Random invertible matrix with entries in `[-3, 3]` (denominators 1 or 2);
/// determinant is generically not `±1`.
pub fn rand_matrix(rng: &mut ChaCha8Rng) -> Matrix2 {
    loop {
        let e = |rng: &mut ChaCha8Rng| {
            let num = rng.gen_range(-3i64..=3);
            let den = if rng.gen_bool(0.2) { 2 } else { 1 };
            projcad::rat::ratio(num, den)
        };
        if let Ok(m) = Matrix2::new(e(rng), e(rng), e(rng), e(rng)) {
            return m;
        }
    }
}

/// Random univariate polynomial as a product of rational-rooted linear
/// factors with multiplicities and optionally a real-rootless quadratic;
/// returns the polynomial and its (root, multiplicity) list sorted by root.
pub fn rand_rational_rooted(rng: &mut ChaCha8Rng) -> (UniPoly, Vec<(Rat, u32)>) {
    let mut roots: Vec<(Rat, u32)> = Vec::new();
    let count = rng.gen_range(1..=3usize);
    while roots.len() < count {
        let num = rng.gen_range(-3i64..=3);
        let den = if rng.gen_bool(0.3) { 2 } else { 1 };
        let r = projcad::rat::ratio(num, den);
        if roots.iter().any(|(x, _)| *x == r) {
            continue;
        }
        let m = rng.gen_range(1..=3u32);
        roots.push((r, m));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let mut u = UniPoly::constant(rand_nonzero_rat(rng));
    for (r, m) in &roots {
        let lin = UniPoly::new(vec![-r.clone(), Rat::one()]);
        for _ in 0..*m {
            u = &u * &lin;
        }
    }
    if rng.gen_bool(0.4) {
        // (x^2 + a^2 + 1): no real roots
        let a = rng.gen_range(0i64..=2);
        u = &u * &UniPoly::from_i64(&[a * a + 1, 0, 1]);
    }
    (u, roots)
}

fn rand_nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let q = rand_rat(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

// ---------------------------------------------------------------------------
// Independent oracle: cofactor-expansion determinants over the rationals
// ---------------------------------------------------------------------------

/// Plain cofactor expansion; exponential, for small oracle matrices only.
pub fn naive_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rat::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * naive_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Univariate fixed-degree resultant via the padded Sylvester matrix and
/// cofactor expansion; independent of the Bareiss code path.
pub fn naive_resultant(f: &UniPoly, g: &UniPoly, p: usize, q: usize) -> Rat {
    assert!(p + q >= 1);
    let n = p + q;
    let mut m = vec![vec![Rat::zero(); n]; n];
    for i in 0..q {
        for k in 0..=p {
            m[i][i + k] = f.coeff(p - k);
        }
    }
    for i in 0..p {
        for k in 0..=q {
            m[q + i][i + k] = g.coeff(q - k);
        }
    }
    naive_det(&m)
}

/// Classical univariate discriminant through the naive resultant:
/// `(-1)^(p(p-1)/2)·Res^(p,p-1)(f, f')/lc(f)`, defined for `deg f = p`.
pub fn naive_discriminant(f: &UniPoly, p: usize) -> Rat {
    assert_eq!(f.degree(), Some(p));
    let r = naive_resultant(f, &f.derivative(), p, p - 1);
    let sign = if (p * (p - 1) / 2) % 2 == 0 { 1 } else { -1 };
    rat(sign) * r / f.leading_coeff()
}
