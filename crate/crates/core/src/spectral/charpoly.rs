use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{complement, Graph};

/// `det(zI − A)` as exact integer coefficients, highest degree first:
/// `coeffs[k]` multiplies `z^(n−k)` and `coeffs[0] = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Result<CharPoly> {
        if coeffs.first() != Some(&BigInt::one()) {
            return Err(Error::Parse("characteristic polynomial must be monic".into()));
        }
        Ok(CharPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, highest degree first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * z + c)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = n - k;
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if !mag.is_one() || e == 0 {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn integral(q: BigRational) -> Result<BigInt> {
    if !q.is_integer() {
        return Err(Error::NonIntegral("characteristic polynomial coefficient"));
    }
    Ok(q.to_integer())
}

/// Faddeev–LeVerrier: `M_0 = 0`, `M_k = A M_{k−1} + c_{k−1} I`,
/// `c_k = −tr(A M_k) / k`, where `c_k` multiplies `z^(n−k)`.
pub fn char_poly(g: &Graph) -> Result<CharPoly> {
    let n = g.n();
    let mut coeffs = vec![BigInt::one()];
    let mut m: Vec<BigInt> = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{k−1}·I, using the neighbor lists for A.
        let mut next = vec![BigInt::zero(); n * n];
        for x in 0..n {
            for &z in g.neighbors(x) {
                for y in 0..n {
                    next[x * n + y] += &m[z * n + y];
                }
            }
            next[x * n + x] += &coeffs[k - 1];
        }
        let trace: BigInt = (0..n).flat_map(|x| g.neighbors(x).iter().map(move |&z| (x, z))).map(|(x, z)| &next[z * n + x]).sum();
        let c = integral(BigRational::new(-trace, BigInt::from(k)))?;
        coeffs.push(c);
        m = next;
    }
    Ok(CharPoly { coeffs })
}

/// Newton's identities: `k·c_k = −Σ_{i=1..k} c_{k−i} p_i` with power sums
/// `p_i` = closed walk totals. Needs `c_0 … c_n`.
pub fn char_poly_from_closed_walks(closed: &[BigUint]) -> Result<CharPoly> {
    let Some(n) = closed.len().checked_sub(1) else {
        return Err(Error::Parse("closed walk vector is empty".into()));
    };
    if closed[0] != BigUint::from(n) {
        return Err(Error::Parse(format!("c_0 = {} but the vector describes {n} vertices", closed[0])));
    }
    let p: Vec<BigInt> = closed.iter().map(|c| BigInt::from(c.clone())).collect();
    let mut coeffs = vec![BigInt::one()];
    for k in 1..=n {
        let s: BigInt = (1..=k).map(|i| &coeffs[k - i] * &p[i]).sum();
        coeffs.push(integral(BigRational::new(-s, BigInt::from(k)))?);
    }
    Ok(CharPoly { coeffs })
}

/// Same spectrum, decided by characteristic polynomials.
pub fn spectrum_equivalent(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.n() == h.n() && char_poly(g)? == char_poly(h)?)
}

/// Same spectrum and same spectrum of the complement.
pub fn genspec_equivalent(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(spectrum_equivalent(g, h)? && spectrum_equivalent(&complement(g), &complement(h))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, generate, subdivide_edges, Family};
    use crate::walks::closed_walks;
    use rand::SeedableRng;

    fn poly(v: &[i64]) -> CharPoly {
        CharPoly { coeffs: v.iter().map(|&c| BigInt::from(c)).collect() }
    }

    /// Fraction-free Bareiss determinant.
    fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    fn det_at(g: &Graph, t: i64) -> BigInt {
        let a = g.adjacency_matrix();
        let n = g.n();
        let m = (0..n)
            .map(|x| (0..n).map(|y| BigInt::from(if x == y { t } else { 0 }) - BigInt::from(a[x][y])).collect())
            .collect();
        bareiss(m)
    }

    #[test]
    fn small_polynomials() {
        let c3 = generate(Family::Cycle(3)).unwrap();
        assert_eq!(char_poly(&c3).unwrap(), poly(&[1, 0, -3, -2]));
        assert_eq!(char_poly(&c3).unwrap().to_string(), "z^3 - 3z - 2");
        assert_eq!(char_poly(&generate(Family::Complete(2)).unwrap()).unwrap(), poly(&[1, 0, -1]));
        let cw: Vec<BigUint> = [3u32, 0, 6, 6].iter().map(|&v| BigUint::from(v)).collect();
        assert_eq!(char_poly_from_closed_walks(&cw).unwrap(), poly(&[1, 0, -3, -2]));
        let empty = Graph::empty(4).unwrap();
        assert_eq!(char_poly_from_closed_walks(&closed_walks(&empty)).unwrap(), poly(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn inconsistent_closed_walks_rejected() {
        let cw: Vec<BigUint> = [2u32, 1, 0].iter().map(|&v| BigUint::from(v)).collect();
        assert!(char_poly_from_closed_walks(&cw).is_err());
        let cw: Vec<BigUint> = [3u32, 0, 6].iter().map(|&v| BigUint::from(v)).collect();
        assert!(char_poly_from_closed_walks(&cw).is_err());
    }

    #[test]
    fn determinant_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for i in 0..60 {
            let g = Graph::random(1 + i % 8, 0.5, &mut rng);
            let p = char_poly(&g).unwrap();
            assert!(p.coefficients().get(1).is_none_or(Zero::is_zero));
            for t in [-3i64, -1, 0, 2, 5] {
                assert_eq!(p.eval(&BigInt::from(t)), det_at(&g, t));
            }
        }
    }

    #[test]
    fn newton_agrees_with_faddeev_leverrier() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for i in 0..200 {
            let g = Graph::random(1 + i % 12, 0.5, &mut rng);
            assert_eq!(char_poly(&g).unwrap(), char_poly_from_closed_walks(&closed_walks(&g)).unwrap());
        }
    }

    #[test]
    fn genspec7_pair() {
        let c6 = generate(Family::Cycle(6)).unwrap();
        let g = disjoint_union(&c6, &Graph::empty(1).unwrap());
        let h = subdivide_edges(&generate(Family::Star(3)).unwrap());
        assert!(genspec_equivalent(&g, &h).unwrap());
        let c3 = generate(Family::Cycle(3)).unwrap();
        assert!(!spectrum_equivalent(&c6, &disjoint_union(&c3, &c3)).unwrap());
        assert!(spectrum_equivalent(&c6, &c6).unwrap());
    }
}
