//! Numerical and exact checks of the identities linking walks and spectra.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::charpoly::char_poly;
use super::eigen::{eigen_structure, Tolerances};
use crate::error::{Error, Result};
use crate::graph::{complement, Graph};
use crate::walks::{total_walks, walk_table};

/// Largest relative error of `w_k(x, y) = Σ_i μ_i^k P_i(x, y)` over
/// `k ≤ maxlen` and all pairs; each error is divided by `max(1, |μ|_max^k)`.
pub fn walk_decomposition_residual(g: &Graph, maxlen: usize, tol: Tolerances) -> Result<f64> {
    let es = eigen_structure(g, tol)?;
    let table = walk_table(g, maxlen);
    let n = g.n();
    let rho = es.groups.iter().map(|gr| gr.mu.abs()).fold(0.0, f64::max);
    let mut worst: f64 = 0.0;
    for k in 0..=maxlen {
        let scale = rho.powi(k as i32).max(1.0);
        for x in 0..n {
            for y in 0..n {
                let approx: f64 = (0..es.m()).map(|i| es.mu(i).powi(k as i32) * es.projector(i, x, y)).sum();
                let exact = table.get(k, x, y).to_f64().unwrap_or(f64::INFINITY);
                worst = worst.max((approx - exact).abs() / scale);
            }
        }
    }
    Ok(worst)
}

/// [`walk_decomposition_residual`] for `k ≤ n − 1`.
pub fn verify_walk_decomposition(g: &Graph, tol: Tolerances) -> Result<f64> {
    walk_decomposition_residual(g, g.n().saturating_sub(1), tol)
}

fn series_mul(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order];
    for (i, ai) in a.iter().enumerate().take(order) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Checks the generating function `Σ w_k z^k` against the characteristic
/// polynomials of `g` and its complement, exactly, through `k = 2n`.
///
/// With `N(z) = (−1)^n z^n P_ḡ(−(1+z)/z)` and `D(z) = z^n P_G(1/z)`, the series
/// `(N/D − 1)/z` must have coefficients `w_0, w_1, …`.
pub fn verify_cvetkovic(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidSize { family: "verify_cvetkovic", detail: "needs at least one vertex".into() });
    }
    let p = char_poly(g)?;
    let q = char_poly(&complement(g))?;
    let order = 2 * n + 2;
    // D(z) = Σ_j p_j z^j with p_j the coefficient of z^(n−j) in P_G.
    let d: Vec<BigInt> = p.coefficients().to_vec();
    if !d[0].is_one() {
        return Err(Error::NonIntegral("D(0) must be 1"));
    }
    // N(z) = Σ_j (−1)^j q_j z^j (1+z)^(n−j).
    let mut num = vec![BigInt::zero(); order];
    let mut binom = vec![BigInt::one()];
    let mut powers = vec![binom.clone()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); binom.len() + 1];
        for (i, b) in binom.iter().enumerate() {
            next[i] += b;
            next[i + 1] += b;
        }
        binom = next;
        powers.push(binom.clone());
    }
    for (j, qj) in q.coefficients().iter().enumerate() {
        let c = if j % 2 == 0 { qj.clone() } else { -qj };
        for (i, b) in powers[n - j].iter().enumerate() {
            if i + j < order {
                num[i + j] += &c * b;
            }
        }
    }
    // S = N / D by long division; D(0) = 1 keeps everything integral.
    let mut s = vec![BigInt::zero(); order];
    for k in 0..order {
        let mut acc = num[k].clone();
        for j in 1..=k.min(n) {
            acc -= &d[j] * &s[k - j];
        }
        s[k] = acc;
    }
    debug_assert_eq!(series_mul(&s, &d, order), num);
    if !s[0].is_one() {
        return Ok(false);
    }
    let w = total_walks(g, 2 * n);
    Ok(w.iter().enumerate().all(|(k, wk)| s[k + 1] == BigInt::from(wk.clone())))
}

/// Main eigenvalues with their main angles, plus the largest relative error
/// of `w_k = n Σ θ_i² ν_i^k` over `k ≤ n − 1`.
#[derive(Clone, Debug, Serialize)]
pub struct MainSpectrum {
    pub nu: Vec<f64>,
    pub theta: Vec<f64>,
    pub residual: f64,
}

impl MainSpectrum {
    /// Grid-rounded `(ν_i, θ_i)` pairs, for comparing graphs.
    pub fn quantized(&self, tol: Tolerances) -> Vec<(i64, i64)> {
        self.nu.iter().zip(&self.theta).map(|(&v, &t)| (tol.quantize(v), tol.quantize(t))).collect()
    }
}

pub fn mea_values(g: &Graph, tol: Tolerances) -> Result<MainSpectrum> {
    let es = eigen_structure(g, tol)?;
    let (mut nu, mut theta) = (Vec::new(), Vec::new());
    for i in 0..es.m() {
        let b = es.main_angle(i);
        if b > tol.value_grid {
            nu.push(es.mu(i));
            theta.push(b);
        }
    }
    let n = g.n();
    let totals = total_walks(g, n - 1);
    let rho = nu.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let mut residual: f64 = 0.0;
    for (k, wk) in totals.iter().enumerate() {
        let approx: f64 = n as f64 * nu.iter().zip(&theta).map(|(v, t)| t * t * v.powi(k as i32)).sum::<f64>();
        let scale = (n as f64) * rho.powi(k as i32).max(1.0);
        residual = residual.max((approx - wk.to_f64().unwrap_or(f64::INFINITY)).abs() / scale);
    }
    Ok(MainSpectrum { nu, theta, residual })
}

/// Grid-rounded comparison of main eigenvalues and main angles.
pub fn mea_values_equal(g: &Graph, h: &Graph, tol: Tolerances) -> Result<bool> {
    Ok(g.n() == h.n() && mea_values(g, tol)?.quantized(tol) == mea_values(h, tol)?.quantized(tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::walks::mea_equivalent;
    use rand::{Rng, SeedableRng};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn small_decompositions() {
        assert!(verify_walk_decomposition(&generate(Family::Complete(2)).unwrap(), tol()).unwrap() < 1e-10);
        let c6 = generate(Family::Cycle(6)).unwrap();
        assert!(walk_decomposition_residual(&c6, 5, tol()).unwrap() < 1e-8);
    }

    #[test]
    fn cvetkovic_small() {
        assert!(verify_cvetkovic(&generate(Family::Path(3)).unwrap()).unwrap());
        assert!(verify_cvetkovic(&Graph::empty(1).unwrap()).unwrap());
        assert!(verify_cvetkovic(&generate(Family::Complete(4)).unwrap()).unwrap());
        assert!(verify_cvetkovic(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn cvetkovic_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(53);
        for i in 0..100 {
            let g = Graph::random(1 + i % 10, 0.5, &mut rng);
            assert!(verify_cvetkovic(&g).unwrap());
        }
    }

    #[test]
    fn main_spectrum_examples() {
        let c6 = mea_values(&generate(Family::Cycle(6)).unwrap(), tol()).unwrap();
        assert_eq!(c6.nu.len(), 1);
        assert!((c6.nu[0] - 2.0).abs() < 1e-9 && (c6.theta[0] - 1.0).abs() < 1e-9);
        let star = mea_values(&generate(Family::CompleteBipartite(1, 3)).unwrap(), tol()).unwrap();
        assert_eq!(star.nu.len(), 2);
        let r3 = 3f64.sqrt();
        assert!((star.nu[0] + r3).abs() < 1e-9 && (star.nu[1] - r3).abs() < 1e-9);
        // Eigenvectors (∓√3, 1, 1, 1)/√6 give θ² = (3 ∓ √3)²/24 = 1/2 ∓ √3/4,
        // which reproduce w_0 = 4 and w_1 = 6.
        assert!((star.theta[0].powi(2) - (0.5 - r3 / 4.0)).abs() < 1e-9);
        assert!((star.theta[1].powi(2) - (0.5 + r3 / 4.0)).abs() < 1e-9);
        assert!(star.residual < 1e-9);
    }

    #[test]
    fn main_spectrum_matches_walk_verdicts() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(59);
        for _ in 0..150 {
            let n = rng.gen_range(1..=9);
            let g = Graph::random(n, 0.5, &mut rng);
            let h = if rng.gen_bool(0.3) { g.random_permutation(&mut rng) } else { Graph::random(n, 0.5, &mut rng) };
            assert_eq!(mea_values_equal(&g, &h, tol()).unwrap(), mea_equivalent(&g, &h));
            assert!(mea_values(&g, tol()).unwrap().residual < 1e-9);
        }
    }
}
