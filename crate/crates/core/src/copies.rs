//! Subgraph (monomorphism) enumeration by backtracking.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::search::{Meter, SearchBudget};

/// One copy of a guest inside a host. Two embeddings that cover the same
/// host edge set are the same copy; `map` is the least vertex map found
/// for that edge set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgraphCopy {
    /// guest vertex -> host vertex
    pub map: Vec<usize>,
    /// sorted host edges covered by the copy
    pub edges: Vec<(usize, usize)>,
}

impl SubgraphCopy {
    /// Injective and edge-preserving.
    pub fn is_valid(&self, host: &Graph, guest: &Graph) -> bool {
        if self.map.len() != guest.vertex_count() {
            return false;
        }
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.map.len()
            && self.map.iter().all(|&h| h < host.vertex_count())
            && guest.edges().iter().all(|&(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CopyEnumeration {
    /// Copies sorted by their host edge set.
    pub copies: Vec<SubgraphCopy>,
    /// False when the node budget ran out before the tree was closed.
    pub complete: bool,
    pub nodes_explored: u64,
}

struct Plan {
    /// guest vertices with at least one edge, in search order
    order: Vec<usize>,
    /// for position i: already-placed guest neighbours (positions)
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
    isolated: Vec<usize>,
}

fn plan(guest: &Graph) -> Plan {
    let n = guest.vertex_count();
    let mut placed = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut back = Vec::new();
    let active: Vec<usize> = (0..n).filter(|&v| guest.degree(v) > 0).collect();
    let mut links = vec![0usize; n];
    while order.len() < active.len() {
        let next = active
            .iter()
            .copied()
            .filter(|&v| placed[v] == usize::MAX)
            .max_by_key(|&v| (links[v], guest.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let pos = order.len();
        placed[next] = pos;
        let mut b: Vec<usize> = guest
            .neighbors(next)
            .iter()
            .filter(|&&w| placed[w] != usize::MAX && w != next)
            .map(|&w| placed[w])
            .collect();
        b.sort_unstable();
        back.push(b);
        order.push(next);
        for &w in guest.neighbors(next) {
            links[w] += 1;
        }
    }
    Plan {
        order,
        back,
        degree: (0..n).map(|v| guest.degree(v)).collect(),
        isolated: (0..n).filter(|&v| guest.degree(v) == 0).collect(),
    }
}

struct Search<'a> {
    host: &'a Graph,
    guest: &'a Graph,
    plan: &'a Plan,
    meter: &'a Meter,
    limit: usize,
    images: Vec<usize>,
    used: Vec<bool>,
    found: BTreeMap<Vec<(usize, usize)>, Vec<usize>>,
}

impl Search<'_> {
    fn candidates(&self, pos: usize) -> Vec<usize> {
        let back = &self.plan.back[pos];
        let need = self.plan.degree[self.plan.order[pos]];
        let pool: Vec<usize> = match back.first() {
            Some(&anchor) => self.host.neighbors(self.images[anchor]).to_vec(),
            None => (0..self.host.vertex_count()).collect(),
        };
        pool.into_iter()
            .filter(|&h| {
                !self.used[h]
                    && self.host.degree(h) >= need
                    && back.iter().all(|&p| self.host.has_edge(self.images[p], h))
            })
            .collect()
    }

    fn extend(&mut self, pos: usize) -> bool {
        if self.limit > 0 && self.found.len() >= self.limit {
            return true;
        }
        if pos == self.plan.order.len() {
            self.record();
            return true;
        }
        for h in self.candidates(pos) {
            if !self.meter.tick() {
                return false;
            }
            self.images[pos] = h;
            self.used[h] = true;
            let ok = self.extend(pos + 1);
            self.used[h] = false;
            if !ok {
                return false;
            }
            if self.limit > 0 && self.found.len() >= self.limit {
                return true;
            }
        }
        true
    }

    fn record(&mut self) {
        let free = self.used.iter().filter(|&&u| !u).count();
        if free < self.plan.isolated.len() {
            return;
        }
        let mut map = vec![usize::MAX; self.guest.vertex_count()];
        for (pos, &g) in self.plan.order.iter().enumerate() {
            map[g] = self.images[pos];
        }
        let mut spare = (0..self.host.vertex_count()).filter(|&h| !self.used[h]);
        for &g in &self.plan.isolated {
            map[g] = spare.next().unwrap();
        }
        let mut edges: Vec<(usize, usize)> = self
            .guest
            .edges()
            .iter()
            .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
            .collect();
        edges.sort_unstable();
        self.found
            .entry(edges)
            .and_modify(|m| {
                if map < *m {
                    *m = map.clone();
                }
            })
            .or_insert(map);
    }
}

/// Enumerates distinct copies of `guest` in `host` (not necessarily
/// induced). `limit = 0` means unlimited. Output order is canonical: by
/// host edge set, so it does not depend on the worker count.
pub fn enumerate_copies(
    host: &Graph,
    guest: &Graph,
    limit: usize,
    budget: SearchBudget,
) -> CopyEnumeration {
    let meter = Meter::new(budget);
    let plan = plan(guest);
    let new_search = || Search {
        host,
        guest,
        plan: &plan,
        meter: &meter,
        limit,
        images: vec![usize::MAX; plan.order.len()],
        used: vec![false; host.vertex_count()],
        found: BTreeMap::new(),
    };

    let (found, complete) = if limit == 0 && !plan.order.is_empty() {
        let roots = new_search().candidates(0);
        let parts: Vec<(BTreeMap<_, _>, bool)> = roots
            .par_iter()
            .map(|&h| {
                let mut s = new_search();
                if !meter.tick() {
                    return (s.found, false);
                }
                s.images[0] = h;
                s.used[h] = true;
                let ok = s.extend(1);
                (s.found, ok)
            })
            .collect();
        let mut all = BTreeMap::new();
        let mut complete = true;
        for (found, ok) in parts {
            complete &= ok;
            for (k, m) in found {
                all.entry(k)
                    .and_modify(|old: &mut Vec<usize>| {
                        if m < *old {
                            *old = m.clone();
                        }
                    })
                    .or_insert(m);
            }
        }
        (all, complete)
    } else {
        let mut s = new_search();
        let ok = s.extend(0);
        (s.found, ok)
    };

    let mut copies: Vec<SubgraphCopy> = found
        .into_iter()
        .map(|(edges, map)| SubgraphCopy { map, edges })
        .collect();
    if limit > 0 {
        copies.truncate(limit);
    }
    CopyEnumeration {
        copies,
        complete,
        nodes_explored: meter.nodes(),
    }
}

/// `Some(true)` if `host` contains no copy of `guest`, `None` if the budget
/// ran out first.
pub fn is_free_of(host: &Graph, guest: &Graph, budget: SearchBudget) -> Option<bool> {
    let r = enumerate_copies(host, guest, 1, budget);
    if !r.copies.is_empty() {
        Some(false)
    } else if r.complete {
        Some(true)
    } else {
        None
    }
}
