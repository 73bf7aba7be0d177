use crate::partite::Hypergraph;
use crate::search::{Meter, SearchBudget, SearchOutcome};
use crate::subset::VertexSubset;

/// Searches for a partition of the support into `h.k` parts with exactly
/// one element of every hyperedge in each part. This is a proper
/// `k`-colouring of the graph joining elements that share a hyperedge.
pub fn is_k_partite(h: &Hypergraph, budget: SearchBudget) -> SearchOutcome<Vec<VertexSubset>> {
    let meter = Meter::new(budget);
    k_partition(h, &meter)
}

pub(crate) fn k_partition(h: &Hypergraph, meter: &Meter) -> SearchOutcome<Vec<VertexSubset>> {
    let k = h.k;
    let support = h.support();
    let elements: Vec<usize> = (0..32).filter(|&i| support >> i & 1 == 1).collect();
    let mut conflicts = vec![0u32; 32];
    for e in h.edges() {
        for &x in &elements {
            if e.bits() >> x & 1 == 1 {
                conflicts[x] |= e.bits() & !(1 << x);
            }
        }
    }

    // order: most constrained by already-ordered elements first
    let mut order: Vec<usize> = Vec::with_capacity(elements.len());
    let mut placed = 0u32;
    while order.len() < elements.len() {
        let next = elements
            .iter()
            .copied()
            .filter(|&x| placed >> x & 1 == 0)
            .max_by_key(|&x| {
                (
                    (conflicts[x] & placed).count_ones(),
                    conflicts[x].count_ones(),
                    std::cmp::Reverse(x),
                )
            })
            .unwrap();
        placed |= 1 << next;
        order.push(next);
    }

    let mut color = [usize::MAX; 32];

    fn go(order: &[usize], conflicts: &[u32], color: &mut [usize; 32], k: usize, used: usize, meter: &Meter, pos: usize) -> Option<bool> {
        if pos == order.len() {
            return Some(true);
        }
        let x = order[pos];
        for c in 0..k.min(used + 1) {
            if !meter.tick() {
                return None;
            }
            let clash = (0..32).any(|y| conflicts[x] >> y & 1 == 1 && color[y] == c);
            if clash {
                continue;
            }
            color[x] = c;
            match go(order, conflicts, color, k, used.max(c + 1), meter, pos + 1) {
                Some(false) => color[x] = usize::MAX,
                other => return other,
            }
        }
        Some(false)
    }

    match go(&order, &conflicts, &mut color, k, 0, meter, 0) {
        None => SearchOutcome::inconclusive(meter.nodes()),
        Some(false) => SearchOutcome::exhausted(meter.nodes()),
        Some(true) => {
            let parts = (0..k)
                .map(|c| {
                    let bits = elements.iter().filter(|&&x| color[x] == c).fold(0u32, |acc, &x| acc | 1 << x);
                    VertexSubset::from_bits_unchecked(bits, h.n)
                })
                .collect();
            SearchOutcome::found(parts, meter.nodes())
        }
    }
}
