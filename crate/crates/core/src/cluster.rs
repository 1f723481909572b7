//! Ladder graphs, cluster-state preparation, initial stabilizer generators,
//! and sequential measurement cascades.
//!
//! Qubit numbering follows the rung convention: odd labels run along the top
//! rail, even labels along the bottom rail, and rung k joins (2k−1, 2k). The
//! n-qubit ladder therefore has edges
//! {(2k−1, 2k)} ∪ {(2k−1, 2k+1)} ∪ {(2k, 2k+2)}. This is the only labeling
//! consistent with the six-qubit edge list (3,5), (4,6), (5,6) and with
//! qubit 5 being adjacent to qubit 7 in the eight-qubit ladder.

use alloc::{format, string::String, vec::Vec};

use crate::pauli::{Pauli, PauliString, PauliSum};
use crate::qstate::{MeasurementSpec, QubitLabel, StateVector};
use crate::{Error, Result};

/// Vertex/edge description of an n-qubit ladder; fixes the qubit numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderGraph {
    n: u32,
    edges: Vec<(QubitLabel, QubitLabel)>,
}

impl LadderGraph {
    /// Ladder on `n` qubits (n even, n ≥ 4): n/2 rungs plus two rails.
    pub fn new(n: u32) -> Result<Self> {
        if n % 2 != 0 || n < 4 {
            return Err(Error::InvalidInput(String::from("n must be even and ≥ 4")));
        }
        let rungs = n / 2;
        let mut edges = Vec::with_capacity((rungs + 2 * (rungs - 1)) as usize);
        for k in 1..=rungs {
            edges.push((2 * k - 1, 2 * k));
        }
        for k in 1..rungs {
            edges.push((2 * k - 1, 2 * k + 1));
            edges.push((2 * k, 2 * k + 2));
        }
        edges.sort_unstable();
        Ok(Self { n, edges })
    }

    pub fn qubit_count(&self) -> u32 {
        self.n
    }

    /// Edges as ordered pairs (a < b), sorted.
    pub fn edges(&self) -> &[(QubitLabel, QubitLabel)] {
        &self.edges
    }

    pub fn contains_edge(&self, a: QubitLabel, b: QubitLabel) -> bool {
        let pair = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&pair).is_ok()
    }

    /// Labels 1..=n.
    pub fn labels(&self) -> Vec<QubitLabel> {
        (1..=self.n).collect()
    }

    /// Neighbors of qubit `k`, ascending.
    pub fn neighbors(&self, k: QubitLabel) -> Vec<QubitLabel> {
        let mut out: Vec<QubitLabel> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == k {
                    Some(b)
                } else if b == k {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Prepare the cluster state of `graph`: every qubit in ∣+⟩ followed by a CZ
/// across every edge. CZ gates commute, so the result does not depend on the
/// edge order.
pub fn prepare_cluster(graph: &LadderGraph) -> StateVector {
    let mut state = StateVector::init_plus(&graph.labels())
        .expect("ladder labels are nonempty and distinct");
    for &(a, b) in graph.edges() {
        state = state.apply_cz(a, b).expect("ladder edges reference register labels");
    }
    state
}

/// The n initial stabilizer generators: generator k is X on qubit k and Z on
/// every neighbor of k, with coefficient +1.
pub fn initial_generators(graph: &LadderGraph) -> Vec<PauliSum> {
    graph
        .labels()
        .into_iter()
        .map(|k| {
            let mut letters = alloc::vec![(k, Pauli::X)];
            letters.extend(graph.neighbors(k).into_iter().map(|j| (j, Pauli::Z)));
            PauliSum::from_single(PauliString::new(letters))
        })
        .collect()
}

/// Measure the given qubits one by one, in the order given. Returns the
/// product of the branch probabilities and the post-measurement state of the
/// surviving qubits.
///
/// A zero-probability branch anywhere in the cascade propagates as
/// [`Error::ZeroProbabilityBranch`].
pub fn measurement_cascade(
    state: &StateVector,
    specs: &[MeasurementSpec],
) -> Result<(f64, StateVector)> {
    for (i, spec) in specs.iter().enumerate() {
        if specs[..i].iter().any(|s| s.qubit == spec.qubit) {
            return Err(Error::InvalidInput(format!(
                "qubit {} measured more than once in a cascade",
                spec.qubit
            )));
        }
    }
    let mut probability = 1.0;
    let mut current = state.clone();
    for spec in specs {
        let (p, next) = current.measure_xy(spec)?;
        probability *= p;
        current = next;
    }
    Ok((probability, current))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::pauli_expectation;
    use core::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn four_qubit_edge_set() {
        let g = LadderGraph::new(4).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn six_qubit_edges_from_the_text() {
        let g = LadderGraph::new(6).unwrap();
        assert!(g.contains_edge(3, 5));
        assert!(g.contains_edge(4, 6));
        assert!(g.contains_edge(5, 6));
        assert_eq!(g.edges().len(), 3 + 2 * 2);
    }

    #[test]
    fn eight_qubit_has_5_7_rail() {
        let g = LadderGraph::new(8).unwrap();
        assert!(g.contains_edge(5, 7));
    }

    #[test]
    fn rejects_odd_or_small_n() {
        assert!(matches!(LadderGraph::new(7), Err(Error::InvalidInput(_))));
        assert!(matches!(LadderGraph::new(2), Err(Error::InvalidInput(_))));
        assert!(matches!(LadderGraph::new(0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn cluster_amplitudes_are_quarter_magnitude() {
        let g = LadderGraph::new(4).unwrap();
        let s = prepare_cluster(&g);
        for a in s.amplitudes() {
            assert!((a.re.abs() - 0.25).abs() < 1e-15);
            assert!(a.im.abs() < 1e-15);
        }
    }

    #[test]
    fn cluster_invariant_under_edge_order() {
        let g = LadderGraph::new(6).unwrap();
        let reference = prepare_cluster(&g);
        // apply the edges in several shuffled orders
        let mut edges = g.edges().to_vec();
        for rot in 1..edges.len() {
            edges.rotate_left(rot);
            let mut s = StateVector::init_plus(&g.labels()).unwrap();
            for &(a, b) in edges.iter().rev() {
                s = s.apply_cz(a, b).unwrap();
            }
            assert!(s.approx_eq(&reference, 0.0));
        }
    }

    #[test]
    fn initial_generators_stabilize_the_cluster() {
        for n in [4u32, 6, 8] {
            let g = LadderGraph::new(n).unwrap();
            let s = prepare_cluster(&g);
            for gen in initial_generators(&g) {
                let e = pauli_expectation(&s, &gen).unwrap();
                assert!((e - 1.0).abs() < 1e-12, "n={n}");
            }
        }
    }

    #[test]
    fn generator_letter_fixtures() {
        let g4 = LadderGraph::new(4).unwrap();
        let gens = initial_generators(&g4);
        // k=4: Z2 Z3 X4, identity on 1
        let g = &gens[3].terms()[0].1;
        assert_eq!(g.letter(1), Pauli::I);
        assert_eq!(g.letter(2), Pauli::Z);
        assert_eq!(g.letter(3), Pauli::Z);
        assert_eq!(g.letter(4), Pauli::X);
        // k=1: X1 Z2 Z3
        let g = &gens[0].terms()[0].1;
        assert_eq!(g.letter(1), Pauli::X);
        assert_eq!(g.letter(2), Pauli::Z);
        assert_eq!(g.letter(3), Pauli::Z);
        assert_eq!(g.letter(4), Pauli::I);

        let g6 = LadderGraph::new(6).unwrap();
        let gens = initial_generators(&g6);
        // k=6: Z4 Z5 X6
        let g = &gens[5].terms()[0].1;
        assert_eq!(g.letter(4), Pauli::Z);
        assert_eq!(g.letter(5), Pauli::Z);
        assert_eq!(g.letter(6), Pauli::X);
    }

    #[test]
    fn cascade_multiplies_probabilities() {
        let g = LadderGraph::new(6).unwrap();
        let s = prepare_cluster(&g);
        let specs = [
            MeasurementSpec::new(1, 0.3, 0).unwrap(),
            MeasurementSpec::new(2, 1.1, 1).unwrap(),
            MeasurementSpec::new(3, 2.7, 0).unwrap(),
        ];
        let (p, post) = measurement_cascade(&s, &specs).unwrap();
        assert!((p - 0.125).abs() < 1e-10);
        assert_eq!(post.labels(), &[4, 5, 6]);
    }

    #[test]
    fn cascade_rejects_repeated_qubit() {
        let g = LadderGraph::new(4).unwrap();
        let s = prepare_cluster(&g);
        let specs = [
            MeasurementSpec::new(1, 0.0, 0).unwrap(),
            MeasurementSpec::new(1, 0.0, 0).unwrap(),
        ];
        assert!(matches!(measurement_cascade(&s, &specs), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn measuring_first_two_leaves_output_rung_maximally_mixed() {
        let g = LadderGraph::new(6).unwrap();
        let s = prepare_cluster(&g);
        for (a1, a2, s1, s2) in [(0.4, 1.9, 0, 1), (5.1, 0.2, 1, 1), (2.3, 3.3, 0, 0)] {
            let specs = [
                MeasurementSpec::new(1, a1, s1).unwrap(),
                MeasurementSpec::new(2, a2, s2).unwrap(),
            ];
            let (_, post) = measurement_cascade(&s, &specs).unwrap();
            let rho = post.partial_trace(&[5, 6]).unwrap();
            for r in 0..4 {
                for c in 0..4 {
                    let expect = if r == c { 0.25 } else { 0.0 };
                    assert!((rho.entry(r, c).re - expect).abs() < 1e-10);
                    assert!(rho.entry(r, c).im.abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn last_generator_survives_any_cascade() {
        // Z_{n−2} Z_{n−1} X_n stays a stabilizer: none of its qubits is
        // adjacent to a measured qubit.
        for n in [4u32, 6] {
            let g = LadderGraph::new(n).unwrap();
            let s = prepare_cluster(&g);
            let m = (n - 3) as usize;
            let angles = [0.7, 2.9, 4.2, 1.3, 0.5];
            for branch in 0..1u32 << m {
                let specs: Vec<MeasurementSpec> = (0..m)
                    .map(|i| {
                        let outcome = ((branch >> (m - 1 - i)) & 1) as u8;
                        MeasurementSpec::new(i as u32 + 1, angles[i], outcome).unwrap()
                    })
                    .collect();
                let (_, post) = measurement_cascade(&s, &specs).unwrap();
                let gen = PauliSum::from_single(PauliString::new([
                    (n - 2, Pauli::Z),
                    (n - 1, Pauli::Z),
                    (n, Pauli::X),
                ]));
                let e = pauli_expectation(&post, &gen).unwrap();
                assert!((e - 1.0).abs() < 1e-10, "n={n} branch={branch}");
            }
        }
    }

    #[test]
    fn clifford_cascade_probabilities_stay_uniform() {
        let g = LadderGraph::new(6).unwrap();
        let s = prepare_cluster(&g);
        let angles = [0.0, FRAC_PI_2, PI];
        for branch in 0..8u32 {
            let specs: Vec<MeasurementSpec> = (0..3)
                .map(|i| {
                    let outcome = ((branch >> (2 - i)) & 1) as u8;
                    MeasurementSpec::new(i as u32 + 1, angles[i], outcome).unwrap()
                })
                .collect();
            let (p, _) = measurement_cascade(&s, &specs).unwrap();
            assert!((p - 0.125).abs() < 1e-10);
        }
    }
}
