use serde::Serialize;

use crate::copies::{enumerate_copies, is_free_of};
use crate::error::{domain, Result};
use crate::graph::{build_hypercube, Graph};
use crate::search::SearchBudget;
use crate::turan::hitting::min_hitting_set;
use crate::turan::{ExtremalResult, ExtremalStatus};

/// Stable short name for a guest graph: vertex and edge counts plus an
/// FNV-1a hash of the edge list.
pub fn guest_id(h: &Graph) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &(u, v) in h.edges() {
        for x in [u as u64, v as u64] {
            for byte in x.to_le_bytes() {
                hash ^= byte as u64;
                hash = hash.wrapping_mul(0x100000001b3);
            }
        }
    }
    format!("v{}e{}-{:08x}", h.vertex_count(), h.edge_count(), hash as u32)
}

/// `ex(Q_n, H)`: all copies of `H` in `Q_n` are enumerated, then the
/// fewest edges meeting every copy are found by branch and bound. The
/// witness is re-checked to be H-free.
pub fn extremal_number(n: usize, h: &Graph, budget: SearchBudget) -> Result<ExtremalResult<(usize, usize)>> {
    if h.edge_count() == 0 {
        return domain("guest graph must have at least one edge");
    }
    let q = build_hypercube(n)?;
    let found = enumerate_copies(&q, h, 0, budget);
    let id = guest_id(h);
    if !found.complete {
        return Ok(ExtremalResult {
            n,
            guest_id: id,
            value: 0,
            witness_edges: vec![],
            status: ExtremalStatus::Inconclusive,
            nodes_explored: found.nodes_explored,
        });
    }
    let copies: Vec<Vec<usize>> = found
        .copies
        .iter()
        .map(|c| c.edges.iter().map(|&(u, v)| q.edge_index(u, v).unwrap()).collect())
        .collect();
    let outcome = min_hitting_set(q.edge_count(), &copies, budget);
    let witness: Vec<(usize, usize)> = q
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| outcome.removed.binary_search(i).is_err())
        .map(|(_, &e)| e)
        .collect();
    let check = q.edge_subgraph(witness.iter().copied())?;
    assert_eq!(
        is_free_of(&check, h, SearchBudget::default()),
        Some(true),
        "extremal witness contains the guest"
    );
    Ok(ExtremalResult {
        n,
        guest_id: id,
        value: witness.len(),
        witness_edges: witness,
        status: if outcome.optimal {
            ExtremalStatus::Exact
        } else {
            ExtremalStatus::LowerBound
        },
        nodes_explored: found.nodes_explored + outcome.nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityRow {
    pub n: usize,
    pub value: usize,
    pub cube_edges: usize,
    pub ratio: f64,
    pub status: ExtremalStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityReport {
    pub rows: Vec<DensityRow>,
    /// consecutive exact pairs `(n, n + 1)` whose ratio went up
    pub increases: Vec<(usize, usize)>,
}

impl DensityReport {
    pub fn non_increasing(&self) -> bool {
        self.increases.is_empty()
    }
}

/// `ex(Q_n, H) / ||Q_n||` for `n` in `n_from..=n_to`.
pub fn density_sequence(h: &Graph, n_from: usize, n_to: usize, budget: SearchBudget) -> Result<DensityReport> {
    if n_from == 0 || n_from > n_to {
        return domain(format!("bad range {n_from}..={n_to}; need 1 <= from <= to"));
    }
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        let r = extremal_number(n, h, budget)?;
        let cube_edges = n << (n - 1);
        rows.push(DensityRow {
            n,
            value: r.value,
            cube_edges,
            ratio: r.value as f64 / cube_edges as f64,
            status: r.status,
        });
    }
    let increases = rows
        .windows(2)
        .filter(|w| {
            w[0].status == ExtremalStatus::Exact
                && w[1].status == ExtremalStatus::Exact
                && (w[1].value as u128) * (w[0].cube_edges as u128) > (w[0].value as u128) * (w[1].cube_edges as u128)
        })
        .map(|w| (w[0].n, w[1].n))
        .collect();
    Ok(DensityReport { rows, increases })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, path};

    #[test]
    fn c4_in_q2() {
        let r = extremal_number(2, &cycle(4).unwrap(), SearchBudget::default()).unwrap();
        assert_eq!((r.value, r.status), (3, ExtremalStatus::Exact));
    }

    #[test]
    fn triangle_is_never_present() {
        for n in 1..=4 {
            let r = extremal_number(n, &complete(3).unwrap(), SearchBudget::default()).unwrap();
            assert_eq!(r.value, n << (n - 1));
            assert_eq!(r.status, ExtremalStatus::Exact);
        }
    }

    #[test]
    fn single_edge_forbids_everything() {
        let d = density_sequence(&path(1).unwrap(), 1, 3, SearchBudget::default()).unwrap();
        assert!(d.rows.iter().all(|r| r.value == 0 && r.ratio == 0.0));
        let d = density_sequence(&complete(3).unwrap(), 1, 4, SearchBudget::default()).unwrap();
        assert!(d.rows.iter().all(|r| r.ratio == 1.0));
        assert!(d.non_increasing());
    }

    #[test]
    fn edgeless_guest_is_rejected() {
        assert!(extremal_number(2, &Graph::new(2, []).unwrap(), SearchBudget::default()).is_err());
    }

    #[test]
    fn guest_id_is_stable() {
        assert_eq!(guest_id(&cycle(4).unwrap()), guest_id(&cycle(4).unwrap()));
        assert_ne!(guest_id(&cycle(4).unwrap()), guest_id(&path(3).unwrap()));
    }
}
