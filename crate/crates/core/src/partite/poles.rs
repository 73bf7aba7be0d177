use std::collections::BTreeMap;

use serde::Serialize;

use crate::constructions::theta;
use crate::cubicality::Symmetry;
use crate::error::{domain, Result};
use crate::partite::layer::{visit_layer_embeddings, LayerPlan};
use crate::search::{Meter, SearchBudget};
use crate::subset::VertexSubset;

/// Distances between the main-pole images over all layer embeddings of
/// `Θ(q)` in `Q_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoleScanReport {
    pub q: usize,
    pub n: usize,
    /// embeddings visited, up to coordinate permutations
    pub embeddings: u64,
    /// Hamming distance -> number of embeddings
    pub distances: BTreeMap<usize, u64>,
    /// layer k -> number of embeddings
    pub per_layer: BTreeMap<usize, u64>,
    /// first embedding (in search order) whose main poles are not at
    /// distance 2, with its layer
    pub counterexample: Option<(usize, Vec<VertexSubset>)>,
    pub complete: bool,
    pub nodes_explored: u64,
}

impl PoleScanReport {
    pub fn all_distance_two(&self) -> bool {
        self.distances.keys().all(|&d| d == 2)
    }
}

/// Enumerates every embedding of `Θ(q)` into every layer `L_k` of `Q_n`
/// (both top-side choices) and records the main-pole distance.
pub fn pole_distance_scan(q: usize, n: usize, budget: SearchBudget) -> Result<PoleScanReport> {
    if q < 2 {
        return domain(format!("pole scan needs q >= 2, got {q}"));
    }
    let t = theta(q)?;
    let [a, b] = [t.main_poles()[0], t.main_poles()[1]];
    let meter = Meter::new(budget);
    let mut report = PoleScanReport {
        q,
        n,
        embeddings: 0,
        distances: BTreeMap::new(),
        per_layer: BTreeMap::new(),
        counterexample: None,
        complete: true,
        nodes_explored: 0,
    };
    'layers: for k in 1..=n {
        for side in 0..2u8 {
            let Some(plan) = LayerPlan::new(&t.graph, k, n, side)? else {
                continue;
            };
            let mut visit = |images: &[u32]| {
                let d = (images[a] ^ images[b]).count_ones() as usize;
                report.embeddings += 1;
                *report.distances.entry(d).or_default() += 1;
                *report.per_layer.entry(k).or_default() += 1;
                if d != 2 && report.counterexample.is_none() {
                    let imgs = images.iter().map(|&x| VertexSubset::from_bits_unchecked(x, n)).collect();
                    report.counterexample = Some((k, imgs));
                }
                true
            };
            if visit_layer_embeddings(&plan, Symmetry::Reduced, &meter, &mut visit).is_none() {
                report.complete = false;
                break 'layers;
            }
        }
    }
    report.nodes_explored = meter.nodes();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta3_poles_at_distance_two_in_q5() {
        let r = pole_distance_scan(3, 5, SearchBudget::default()).unwrap();
        assert!(r.complete);
        assert!(r.embeddings > 0);
        assert!(r.all_distance_two(), "{:?}", r.distances);
        assert!(r.counterexample.is_none());
    }

    #[test]
    fn eight_cycle_poles_can_be_far_apart() {
        let r = pole_distance_scan(2, 4, SearchBudget::default()).unwrap();
        assert!(r.complete);
        assert!(!r.all_distance_two());
        let (k, imgs) = r.counterexample.unwrap();
        assert!(imgs.iter().all(|s| s.len() == k || s.len() + 1 == k));
    }
}
