//! Seeded instance generators. Both models draw from [`SplitMix64`] in a
//! fixed order, so a (model, parameters, seed) triple always produces
//! the same graph, on any platform.

use thiserror::Error;

use crate::graph::Graph;
use crate::kernel::PvcInstance;
use crate::rng::SplitMix64;

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("edge probability {p} outside [0, 1]")]
    InvalidProbability { p: f64 },
    #[error("cannot place {need} edges among {pool} vertex pairs outside the planted solution")]
    TooFewFreePairs { need: usize, pool: usize },
}

/// Erdos-Renyi G(n, p): every pair `(u, v)` with `u < v`, visited in
/// ascending order, gets one uniform draw and is kept when it falls
/// below `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GenError::InvalidProbability { p });
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("generated pairs are valid"))
}

/// A generated yes-instance together with its planted solution
/// (external labels).
#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub instance: PvcInstance,
    pub solution: Vec<usize>,
}

/// Plants a yes-instance: choose a solution set S of size `min(k, n)`,
/// place exactly `l` edges among the remaining vertices, then add each
/// S-incident pair with probability 1/2. Deleting S always leaves
/// exactly `l` edges.
pub fn planted(n: usize, k: usize, l: usize, seed: u64) -> Result<PlantedInstance, GenError> {
    let mut rng = SplitMix64::new(seed);
    let k_eff = k.min(n);
    let mut s = rng.choose(n, k_eff);
    s.sort_unstable();
    let mut in_s = vec![false; n];
    for &v in &s {
        in_s[v] = true;
    }

    let rest: Vec<usize> = (0..n).filter(|&v| !in_s[v]).collect();
    let pool: Vec<(usize, usize)> = rest
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| rest[i + 1..].iter().map(move |&v| (u, v)))
        .collect();
    if pool.len() < l {
        return Err(GenError::TooFewFreePairs { need: l, pool: pool.len() });
    }

    let mut edges: Vec<(usize, usize)> = rng.choose(pool.len(), l).into_iter().map(|i| pool[i]).collect();
    for u in 0..n {
        for v in (u + 1)..n {
            if (in_s[u] || in_s[v]) && rng.next_u64() & 1 == 1 {
                edges.push((u, v));
            }
        }
    }

    let graph = Graph::from_edges(n, &edges).expect("generated pairs are valid");
    let solution = graph.labels_of(&s);
    Ok(PlantedInstance {
        instance: PvcInstance { graph, k, l },
        solution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::solve_pvc_exact;

    #[test]
    fn er_is_deterministic() {
        let a = erdos_renyi(10, 0.3, 1).unwrap();
        let b = erdos_renyi(10, 0.3, 1).unwrap();
        assert_eq!(a, b);
        let c = erdos_renyi(10, 0.3, 2).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn er_rejects_bad_probability() {
        assert!(matches!(erdos_renyi(5, 1.5, 0), Err(GenError::InvalidProbability { .. })));
    }

    #[test]
    fn er_extremes() {
        assert_eq!(erdos_renyi(0, 0.5, 3).unwrap().n(), 0);
        assert_eq!(erdos_renyi(6, 0.0, 3).unwrap().m(), 0);
        assert_eq!(erdos_renyi(6, 1.0, 3).unwrap().m(), 15);
    }

    #[test]
    fn planted_is_a_yes_instance() {
        let p = planted(12, 2, 1, 7).unwrap();
        let idx: Vec<usize> = p
            .solution
            .iter()
            .map(|&l| p.instance.graph.index_of_label(l).unwrap())
            .collect();
        assert_eq!(p.instance.graph.edges_after_delete(&idx).unwrap(), 1);
        assert!(solve_pvc_exact(&p.instance.graph, 2, 1).unwrap().answer);
    }

    #[test]
    fn planted_needs_room_for_uncovered_edges() {
        assert!(matches!(
            planted(3, 2, 2, 0),
            Err(GenError::TooFewFreePairs { need: 2, pool: 0 })
        ));
    }
}
