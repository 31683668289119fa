use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Numerical thresholds for the floating-point path.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Consecutive eigenvalues closer than this are one eigenvalue.
    pub eigen_gap: f64,
    /// Rounding quantum used when float values enter canonical codes.
    pub value_grid: f64,
    /// Jacobi stops once every off-diagonal entry is below this.
    pub residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { eigen_gap: 1e-8, value_grid: 1e-6, residual: 1e-9 }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if ok(self.eigen_gap) && ok(self.value_grid) && ok(self.residual) {
            Ok(())
        } else {
            Err(Error::Parse(format!("tolerances must be positive and finite: {self:?}")))
        }
    }

    /// `v` as an integer number of grid steps.
    pub fn quantize(&self, v: f64) -> i64 {
        (v / self.value_grid).round() as i64
    }
}

/// Gaps below `NEAR_SPLIT_FACTOR · eigen_gap` between distinct groups are
/// reported as suspicious.
pub const NEAR_SPLIT_FACTOR: f64 = 1e4;

const MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug)]
pub struct EigenGroup {
    /// Mean of the grouped eigenvalues.
    pub mu: f64,
    pub multiplicity: usize,
    /// Row-major `n × n` orthogonal projector onto the eigenspace.
    pub projector: Vec<f64>,
    /// Whether a neighboring group lies suspiciously close.
    pub near_split: bool,
}

/// Eigendecomposition of an adjacency matrix, grouped by distinct eigenvalue.
#[derive(Clone, Debug)]
pub struct EigenStructure {
    n: usize,
    tol: Tolerances,
    /// All `n` eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    pub groups: Vec<EigenGroup>,
    /// Jacobi sweeps used.
    pub sweeps: usize,
}

/// Cyclic Jacobi on a row-major symmetric matrix. Returns eigenvalues and
/// the eigenvector matrix (eigenvectors in columns) plus the sweep count.
pub(crate) fn jacobi(mut a: Vec<f64>, n: usize, off_tol: f64) -> Result<(Vec<f64>, Vec<f64>, usize)> {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let off = |a: &[f64]| {
        (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).map(|(p, q)| a[p * n + q].abs()).fold(0.0, f64::max)
    };
    let mut sweeps = 0;
    loop {
        let worst = off(&a);
        if worst < off_tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off: worst });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Ok(((0..n).map(|i| a[i * n + i]).collect(), v, sweeps))
}

/// Jacobi eigendecomposition of `A(g)` grouped into eigenspaces.
pub fn eigen_structure(g: &Graph, tol: Tolerances) -> Result<EigenStructure> {
    tol.validate()?;
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidSize { family: "eigen_structure", detail: "needs at least one vertex".into() });
    }
    let mut a = vec![0.0; n * n];
    for (x, y) in g.edges() {
        a[x * n + y] = 1.0;
        a[y * n + x] = 1.0;
    }
    let (values, vectors, sweeps) = jacobi(a, n, tol.residual)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]).then(i.cmp(&j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| values[i]).collect();

    let mut groups: Vec<EigenGroup> = Vec::new();
    let mut start = 0;
    for end in 1..=n {
        if end < n && eigenvalues[end] - eigenvalues[end - 1] < tol.eigen_gap {
            continue;
        }
        let members = &order[start..end];
        let mut projector = vec![0.0; n * n];
        for &j in members {
            for x in 0..n {
                let vx = vectors[x * n + j];
                for y in 0..n {
                    projector[x * n + y] += vx * vectors[y * n + j];
                }
            }
        }
        let mu = eigenvalues[start..end].iter().sum::<f64>() / members.len() as f64;
        groups.push(EigenGroup { mu, multiplicity: members.len(), projector, near_split: false });
        start = end;
    }
    let near = tol.eigen_gap * NEAR_SPLIT_FACTOR;
    for i in 1..groups.len() {
        if groups[i].mu - groups[i - 1].mu < near {
            groups[i].near_split = true;
            groups[i - 1].near_split = true;
        }
    }
    Ok(EigenStructure { n, tol, eigenvalues, groups, sweeps })
}

impl EigenStructure {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// Number of distinct eigenvalues.
    pub fn m(&self) -> usize {
        self.groups.len()
    }

    pub fn mu(&self, i: usize) -> f64 {
        self.groups[i].mu
    }

    pub fn projector(&self, i: usize, x: usize, y: usize) -> f64 {
        self.groups[i].projector[x * self.n + y]
    }

    /// `α_{i,x}`, the norm of the projection of `e_x`. It is taken as zero
    /// when it does not exceed the value grid.
    pub fn angle(&self, i: usize, x: usize) -> f64 {
        let a = self.projector(i, x, x).max(0.0).sqrt();
        if a <= self.tol.value_grid {
            0.0
        } else {
            a
        }
    }

    /// `α_{i,xy}`, the cosine between the projections of `e_x` and `e_y`, or
    /// zero when either projection vanishes.
    pub fn angle_xy(&self, i: usize, x: usize, y: usize) -> f64 {
        let (ax, ay) = (self.angle(i, x), self.angle(i, y));
        if ax == 0.0 || ay == 0.0 {
            return 0.0;
        }
        if x == y {
            return 1.0;
        }
        (self.projector(i, x, y) / (ax * ay)).clamp(-1.0, 1.0)
    }

    /// The angle coloring `α_i(x, x) = α_{i,x}`, `α_i(x, y) = α_{i,xy}`.
    pub fn alpha(&self, i: usize, x: usize, y: usize) -> f64 {
        if x == y {
            self.angle(i, x)
        } else {
            self.angle_xy(i, x, y)
        }
    }

    /// `β_i = ‖P_i j‖ / √n`.
    pub fn main_angle(&self, i: usize) -> f64 {
        let n = self.n;
        let p = &self.groups[i].projector;
        let sq: f64 = (0..n).map(|x| p[x * n..(x + 1) * n].iter().sum::<f64>().powi(2)).sum();
        (sq / n as f64).sqrt()
    }

    pub fn main_angles(&self) -> Vec<f64> {
        (0..self.m()).map(|i| self.main_angle(i)).collect()
    }

    /// `max |Σ P_i − I|`, `max |P_i² − P_i|`, `max |P_i P_j|`, `max |P_i − P_iᵀ|`,
    /// and `max |tr P_i − mult_i|`, folded into one number.
    pub fn projector_residual(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for x in 0..n {
            for y in 0..n {
                let s: f64 = self.groups.iter().map(|g| g.projector[x * n + y]).sum();
                worst = worst.max((s - if x == y { 1.0 } else { 0.0 }).abs());
            }
        }
        for (i, gi) in self.groups.iter().enumerate() {
            let trace: f64 = (0..n).map(|x| gi.projector[x * n + x]).sum();
            worst = worst.max((trace - gi.multiplicity as f64).abs());
            for (j, gj) in self.groups.iter().enumerate() {
                for x in 0..n {
                    for y in 0..n {
                        let prod: f64 = (0..n).map(|z| gi.projector[x * n + z] * gj.projector[z * n + y]).sum();
                        let want = if i == j { gi.projector[x * n + y] } else { 0.0 };
                        worst = worst.max((prod - want).abs());
                        if i == j {
                            worst = worst.max((gi.projector[x * n + y] - gi.projector[y * n + x]).abs());
                        }
                    }
                }
            }
        }
        worst
    }
}

/// `v` with 12 significant digits, for human-readable reports.
pub fn decimal12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{}", if v == 0.0 { 0.0 } else { v });
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        format!("{v:.11e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use rand::SeedableRng;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn k2_by_hand() {
        let es = eigen_structure(&generate(Family::Complete(2)).unwrap(), Tolerances::default()).unwrap();
        assert_eq!(es.m(), 2);
        assert!(close(es.mu(0), -1.0) && close(es.mu(1), 1.0));
        for i in 0..2 {
            assert!(close(es.projector(i, 0, 0), 0.5));
            assert!(close(es.projector(i, 1, 1), 0.5));
            assert!(close(es.angle(i, 0), 0.5f64.sqrt()));
        }
        assert!(close(es.projector(0, 0, 1), -0.5));
        assert!(close(es.projector(1, 0, 1), 0.5));
    }

    #[test]
    fn c6_groups() {
        let es = eigen_structure(&generate(Family::Cycle(6)).unwrap(), Tolerances::default()).unwrap();
        let mus: Vec<f64> = es.groups.iter().map(|g| g.mu).collect();
        let mults: Vec<usize> = es.groups.iter().map(|g| g.multiplicity).collect();
        assert_eq!(mults, vec![1, 2, 2, 1]);
        for (m, want) in mus.iter().zip([-2.0, -1.0, 1.0, 2.0]) {
            assert!(close(*m, want));
        }
        assert!(es.groups.iter().all(|g| !g.near_split));
    }

    #[test]
    fn regular_connected_has_one_main_angle() {
        for g in [generate(Family::Cycle(7)).unwrap(), generate(Family::Complete(5)).unwrap(), crate::graph::shrikhande()] {
            let es = eigen_structure(&g, Tolerances::default()).unwrap();
            let d = g.degree(0) as f64;
            for i in 0..es.m() {
                let want = if close(es.mu(i), d) { 1.0 } else { 0.0 };
                assert!(close(es.main_angle(i), want), "{i}");
            }
        }
    }

    #[test]
    fn identities_on_random_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for i in 0..80 {
            let g = Graph::random(1 + i % 14, 0.4, &mut rng);
            let es = eigen_structure(&g, Tolerances::default()).unwrap();
            assert_eq!(es.groups.iter().map(|g| g.multiplicity).sum::<usize>(), g.n());
            assert!(es.projector_residual() < 1e-9);
            for x in 0..g.n() {
                let s: f64 = (0..es.m()).map(|i| es.projector(i, x, x)).sum();
                assert!(close(s, 1.0));
                for i in 0..es.m() {
                    assert!((es.projector(i, x, x) - es.angle(i, x).powi(2)).abs() < 1e-6);
                    for y in 0..g.n() {
                        if x != y {
                            let paaa = es.alpha(i, x, x) * es.alpha(i, x, y) * es.alpha(i, y, y);
                            assert!((es.projector(i, x, y) - paaa).abs() < 1e-6, "{} {} {} {}", es.projector(i, x, y), paaa, es.projector(i, x, x), es.projector(i, y, y));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerances { eigen_gap: 0.0, ..Tolerances::default() }.validate().is_err());
        assert!(Tolerances { residual: f64::NAN, ..Tolerances::default() }.validate().is_err());
        assert!(eigen_structure(&Graph::empty(0).unwrap(), Tolerances::default()).is_err());
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(decimal12(0.0), "0");
        assert_eq!(decimal12(2.0), "2");
        assert_eq!(decimal12(3f64.sqrt()), "1.73205080757");
        assert_eq!(decimal12(-1e-14), "-1.00000000000e-14");
        assert_eq!(decimal12(-2.0000000000001), "-2");
    }
}
