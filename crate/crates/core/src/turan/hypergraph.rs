use std::collections::BTreeSet;

use crate::error::{domain, Error, Result};
use crate::partite::Hypergraph;
use crate::search::{Meter, SearchBudget};
use crate::subset::{k_subsets, VertexSubset, MAX_GROUND_SET};
use crate::turan::hitting::min_hitting_set;
use crate::turan::{ExtremalResult, ExtremalStatus};

const MAX_CANDIDATES: usize = 1 << 16;

/// Copies of `forbidden` in the complete `k`-graph on `[n]`, as sorted
/// index lists into `candidates`. `None` if the budget ran out.
fn hypergraph_copies(n: usize, forbidden: &Hypergraph, candidates: &[u32], meter: &Meter) -> Option<Vec<Vec<usize>>> {
    let support = forbidden.support();
    let verts: Vec<usize> = (0..32).filter(|&i| support >> i & 1 == 1).collect();
    let mut seen = BTreeSet::new();
    let mut image = vec![0usize; 32];
    let mut used = 0u32;

    #[allow(clippy::too_many_arguments)]
    fn go(
        pos: usize,
        verts: &[usize],
        n: usize,
        image: &mut [usize],
        used: &mut u32,
        forbidden: &Hypergraph,
        candidates: &[u32],
        seen: &mut BTreeSet<Vec<usize>>,
        meter: &Meter,
    ) -> bool {
        if pos == verts.len() {
            let mut copy: Vec<usize> = forbidden
                .edges()
                .iter()
                .map(|e| {
                    let bits = e.elements().fold(0u32, |acc, x| acc | 1 << image[x - 1]);
                    candidates.binary_search(&bits).unwrap()
                })
                .collect();
            copy.sort_unstable();
            seen.insert(copy);
            return true;
        }
        for target in 0..n {
            if *used >> target & 1 == 1 {
                continue;
            }
            if !meter.tick() {
                return false;
            }
            image[verts[pos]] = target;
            *used |= 1 << target;
            let ok = go(pos + 1, verts, n, image, used, forbidden, candidates, seen, meter);
            *used &= !(1 << target);
            if !ok {
                return false;
            }
        }
        true
    }

    if !go(0, &verts, n, &mut image, &mut used, forbidden, candidates, &mut seen, meter) {
        return None;
    }
    Some(seen.into_iter().collect())
}

/// `ex_k(n, F)`: the most hyperedges on `[n]` with no copy of `forbidden`.
pub fn hypergraph_extremal(
    n: usize,
    k: usize,
    forbidden: &Hypergraph,
    budget: SearchBudget,
) -> Result<ExtremalResult<VertexSubset>> {
    if forbidden.k != k {
        return domain(format!("forbidden hypergraph is {}-uniform, not {k}-uniform", forbidden.k));
    }
    if forbidden.edges().is_empty() {
        return domain("forbidden hypergraph must have at least one hyperedge");
    }
    if n > MAX_GROUND_SET {
        return Err(Error::ResourceLimit {
            what: "ground set size",
            value: n,
            cap: MAX_GROUND_SET,
        });
    }
    let candidates: Vec<u32> = k_subsets(n, k).take(MAX_CANDIDATES + 1).collect();
    if candidates.len() > MAX_CANDIDATES {
        return Err(Error::ResourceLimit {
            what: "candidate hyperedges",
            value: candidates.len(),
            cap: MAX_CANDIDATES,
        });
    }
    let guest_id = format!(
        "hyper-k{}-e{}-{}",
        k,
        forbidden.edges().len(),
        forbidden.edges().iter().map(|e| e.to_hex()).collect::<Vec<_>>().join(".")
    );
    let meter = Meter::new(budget);
    let Some(copies) = hypergraph_copies(n, forbidden, &candidates, &meter) else {
        return Ok(ExtremalResult {
            n,
            guest_id,
            value: 0,
            witness_edges: vec![],
            status: ExtremalStatus::Inconclusive,
            nodes_explored: meter.nodes(),
        });
    };
    let outcome = min_hitting_set(candidates.len(), &copies, budget);
    let witness: Vec<VertexSubset> = candidates
        .iter()
        .enumerate()
        .filter(|(i, _)| outcome.removed.binary_search(i).is_err())
        .map(|(_, &b)| VertexSubset::from_bits_unchecked(b, n))
        .collect();
    Ok(ExtremalResult {
        n,
        guest_id,
        value: witness.len(),
        witness_edges: witness,
        status: if outcome.optimal {
            ExtremalStatus::Exact
        } else {
            ExtremalStatus::LowerBound
        },
        nodes_explored: meter.nodes() + outcome.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_of_two_edges_in_a_triangle() {
        let f = Hypergraph::from_lists(3, 2, &[&[1, 2], &[2, 3]]).unwrap();
        let r = hypergraph_extremal(3, 2, &f, SearchBudget::default()).unwrap();
        assert_eq!((r.value, r.status), (1, ExtremalStatus::Exact));
    }

    #[test]
    fn uniformity_must_match() {
        let f = Hypergraph::from_lists(3, 2, &[&[1, 2]]).unwrap();
        assert!(hypergraph_extremal(4, 3, &f, SearchBudget::default()).is_err());
    }

    #[test]
    fn forbidden_larger_than_host_means_everything_allowed() {
        let f = Hypergraph::from_lists(5, 2, &[&[1, 2], &[3, 4], &[4, 5]]).unwrap();
        let r = hypergraph_extremal(4, 2, &f, SearchBudget::default()).unwrap();
        assert_eq!(r.value, 6);
    }
}
