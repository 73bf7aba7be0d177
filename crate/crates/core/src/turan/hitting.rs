//! Maximum copy-free edge subset, solved as a minimum hitting set of the
//! copies by branch and bound.

use crate::search::{Meter, SearchBudget};

pub(crate) struct HittingOutcome {
    /// elements removed in the best solution found (sorted)
    pub removed: Vec<usize>,
    /// true when the tree was closed, so `removed` is optimal
    pub optimal: bool,
    pub nodes: u64,
}

struct Solver<'a> {
    copies: &'a [Vec<usize>],
    by_element: Vec<Vec<usize>>,
    meter: &'a Meter,
    removed: Vec<bool>,
    kept: Vec<bool>,
    /// removed elements per copy
    hits: Vec<u32>,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl Solver<'_> {
    fn remove(&mut self, e: usize) {
        self.removed[e] = true;
        self.chosen.push(e);
        for &c in &self.by_element[e] {
            self.hits[c] += 1;
        }
    }

    fn restore(&mut self, e: usize) {
        self.removed[e] = false;
        self.chosen.pop();
        for &c in &self.by_element[e] {
            self.hits[c] -= 1;
        }
    }

    fn removable(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.copies[c].iter().copied().filter(|&e| !self.kept[e])
    }

    /// Lower bound on further removals: a greedy packing of unhit copies
    /// that share no removable element.
    fn packing_bound(&self, scratch: &mut [bool]) -> usize {
        scratch.iter_mut().for_each(|s| *s = false);
        let mut open: Vec<(usize, usize)> = (0..self.copies.len())
            .filter(|&c| self.hits[c] == 0)
            .map(|c| (self.removable(c).count(), c))
            .collect();
        open.sort_unstable();
        let mut bound = 0;
        for (_, c) in open {
            if self.removable(c).all(|e| !scratch[e]) {
                bound += 1;
                for e in self.copies[c].iter().copied().filter(|&e| !self.kept[e]) {
                    scratch[e] = true;
                }
            }
        }
        bound
    }

    /// Returns false if the budget ran out.
    fn search(&mut self, scratch: &mut [bool]) -> bool {
        if !self.meter.tick() {
            return false;
        }
        // branch on the unhit copy with the fewest removable elements
        let mut pick: Option<(usize, usize)> = None;
        for c in 0..self.copies.len() {
            if self.hits[c] == 0 {
                let r = self.removable(c).count();
                if pick.is_none_or(|(best, _)| r < best) {
                    pick = Some((r, c));
                }
            }
        }
        let Some((_, c)) = pick else {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return true;
        };
        if self.chosen.len() + self.packing_bound(scratch) >= self.best.len() {
            return true;
        }
        let options: Vec<usize> = self.removable(c).collect();
        let mut newly_kept = Vec::new();
        let mut ok = true;
        for e in options {
            self.remove(e);
            ok = self.search(scratch);
            self.restore(e);
            if !ok {
                break;
            }
            // later branches keep e
            self.kept[e] = true;
            newly_kept.push(e);
        }
        for e in newly_kept {
            self.kept[e] = false;
        }
        ok
    }
}

fn greedy(universe: usize, copies: &[Vec<usize>], by_element: &[Vec<usize>]) -> Vec<usize> {
    let mut hit = vec![false; copies.len()];
    let mut out = Vec::new();
    loop {
        let mut gain = vec![0usize; universe];
        for (c, copy) in copies.iter().enumerate() {
            if !hit[c] {
                for &e in copy {
                    gain[e] += 1;
                }
            }
        }
        let Some((e, &g)) = gain.iter().enumerate().max_by_key(|&(e, &g)| (g, std::cmp::Reverse(e))) else {
            break;
        };
        if g == 0 {
            break;
        }
        out.push(e);
        for &c in &by_element[e] {
            hit[c] = true;
        }
    }
    out
}

/// `copies` lists, for each forbidden copy, the universe elements it uses.
/// Every copy must be non-empty.
pub(crate) fn min_hitting_set(universe: usize, copies: &[Vec<usize>], budget: SearchBudget) -> HittingOutcome {
    let meter = Meter::new(budget);
    let mut by_element = vec![Vec::new(); universe];
    for (c, copy) in copies.iter().enumerate() {
        debug_assert!(!copy.is_empty());
        for &e in copy {
            by_element[e].push(c);
        }
    }
    let mut best = greedy(universe, copies, &by_element);
    best.sort_unstable();
    let mut solver = Solver {
        copies,
        by_element,
        meter: &meter,
        removed: vec![false; universe],
        kept: vec![false; universe],
        hits: vec![0; copies.len()],
        chosen: Vec::new(),
        best,
    };
    let mut scratch = vec![false; universe];
    let optimal = solver.search(&mut scratch);
    let mut removed = solver.best;
    removed.sort_unstable();
    HittingOutcome {
        removed,
        optimal,
        nodes: meter.nodes(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(universe: usize, copies: &[Vec<usize>]) -> usize {
        (0u32..1 << universe)
            .filter(|mask| copies.iter().all(|c| c.iter().any(|&e| mask >> e & 1 == 1)))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn small_instances_match_brute_force() {
        let cases: Vec<(usize, Vec<Vec<usize>>)> = vec![
            (4, vec![vec![0, 1, 2, 3]]),
            (5, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]]),
            (6, vec![vec![0, 1, 2], vec![3, 4, 5], vec![0, 3], vec![1, 4], vec![2, 5]]),
            (3, vec![]),
        ];
        for (u, copies) in cases {
            let r = min_hitting_set(u, &copies, SearchBudget::default());
            assert!(r.optimal);
            assert_eq!(r.removed.len(), brute(u, &copies));
            for c in &copies {
                assert!(c.iter().any(|e| r.removed.contains(e)));
            }
        }
    }

    #[test]
    fn budget_keeps_a_feasible_solution() {
        let copies: Vec<Vec<usize>> = (0..10).map(|i| vec![i, (i + 1) % 10, (i + 3) % 10]).collect();
        let r = min_hitting_set(10, &copies, SearchBudget::nodes(1));
        assert!(!r.optimal);
        for c in &copies {
            assert!(c.iter().any(|e| r.removed.contains(e)));
        }
    }
}
