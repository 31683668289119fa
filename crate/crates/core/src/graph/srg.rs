use serde::{Deserialize, Serialize};

use super::Graph;

/// Parameters `(n, d, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// Parameters of the complement graph.
    pub fn complement(&self) -> SrgParams {
        let SrgParams { n, d, lambda, mu } = *self;
        SrgParams { n, d: n - d - 1, lambda: n + mu - 2 * d - 2, mu: n + lambda - 2 * d }
    }
}

/// Returns the parameters if `g` is strongly regular.
///
/// Complete and edgeless graphs are rejected: one of the two counting
/// conditions is then vacuous and `λ` or `μ` would be undefined.
pub fn srg_parameters(g: &Graph) -> Option<SrgParams> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let d = g.degree(0);
    if (0..n).any(|x| g.degree(x) != d) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    let mut mark = vec![false; n];
    for x in 0..n {
        for &z in g.neighbors(x) {
            mark[z] = true;
        }
        for y in x + 1..n {
            let common = g.neighbors(y).iter().filter(|&&z| mark[z]).count();
            let slot = if g.has_edge(x, y) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
        for &z in g.neighbors(x) {
            mark[z] = false;
        }
    }
    Some(SrgParams { n, d, lambda: lambda?, mu: mu? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, generate, rook4x4, shrikhande, Family};

    #[test]
    fn small_examples() {
        let c5 = generate(Family::Cycle(5)).unwrap();
        assert_eq!(srg_parameters(&c5), Some(SrgParams { n: 5, d: 2, lambda: 0, mu: 1 }));
        let expect = Some(SrgParams { n: 16, d: 6, lambda: 2, mu: 2 });
        assert_eq!(srg_parameters(&shrikhande()), expect);
        assert_eq!(srg_parameters(&rook4x4()), expect);
        assert_eq!(srg_parameters(&generate(Family::Cycle(6)).unwrap()), None);
        assert_eq!(srg_parameters(&generate(Family::Complete(4)).unwrap()), None);
        assert_eq!(srg_parameters(&Graph::empty(0).unwrap()), None);
        let k33 = generate(Family::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(srg_parameters(&k33), Some(SrgParams { n: 6, d: 3, lambda: 0, mu: 3 }));
    }

    #[test]
    fn complement_parameters() {
        for g in [shrikhande(), rook4x4(), generate(Family::Cycle(5)).unwrap()] {
            let p = srg_parameters(&g).unwrap();
            assert_eq!(srg_parameters(&complement(&g)), Some(p.complement()));
        }
    }
}
