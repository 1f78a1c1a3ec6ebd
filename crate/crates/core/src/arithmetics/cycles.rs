use std::ops::ControlFlow;

/// Outcome of a bounded cycle enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Coverage {
    /// Every cycle of length at most this was visited.
    pub complete_len: usize,
    pub cycles: u64,
    pub nodes: u64,
    pub exhausted: bool,
    /// The visitor asked to stop.
    pub stopped: bool,
}

struct Search<'a, V> {
    adj: &'a [Vec<usize>],
    len: usize,
    root: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    nodes: u64,
    budget: u64,
    cycles: u64,
    visit: V,
}

enum Halt {
    Budget,
    Visitor,
}

impl<V: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, V> {
    fn extend(&mut self) -> Result<(), Halt> {
        let last = *self.path.last().expect("nonempty path");
        if self.path.len() == self.len {
            // Close the cycle; keep one of its two directions.
            if self.adj[last].contains(&self.root) && self.path[1] < last {
                self.cycles += 1;
                if (self.visit)(&self.path).is_break() {
                    return Err(Halt::Visitor);
                }
            }
            return Ok(());
        }
        for i in 0..self.adj[last].len() {
            let next = self.adj[last][i];
            if next <= self.root || self.on_path[next] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Halt::Budget);
            }
            self.path.push(next);
            self.on_path[next] = true;
            let r = self.extend();
            self.on_path[next] = false;
            self.path.pop();
            r?;
        }
        Ok(())
    }
}

/// Visit every simple cycle of length `3..=max_len` once, shortest first.
///
/// A cycle is reported from its smallest vertex, in the direction whose
/// second vertex is smaller than its last. Within one length, cycles come
/// in lexicographic order of root and then path. The search stops once
/// `budget` path extensions have been made in total.
pub(crate) fn for_each_cycle(
    adj: &[Vec<usize>],
    max_len: usize,
    budget: u64,
    visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Coverage {
    let n = adj.len();
    let mut search = Search {
        adj,
        len: 0,
        root: 0,
        path: Vec::with_capacity(n),
        on_path: vec![false; n],
        nodes: 0,
        budget,
        cycles: 0,
        visit,
    };
    let mut complete_len = max_len.min(n).max(2);
    let mut outcome = (false, false);
    'lengths: for len in 3..=max_len.min(n) {
        search.len = len;
        for root in 0..n {
            search.root = root;
            search.path.clear();
            search.path.push(root);
            search.on_path[root] = true;
            let r = search.extend();
            search.on_path[root] = false;
            match r {
                Ok(()) => {}
                Err(Halt::Budget) => {
                    complete_len = len - 1;
                    outcome = (true, false);
                    break 'lengths;
                }
                Err(Halt::Visitor) => {
                    complete_len = len - 1;
                    outcome = (false, true);
                    break 'lengths;
                }
            }
        }
    }
    Coverage {
        complete_len,
        cycles: search.cycles,
        nodes: search.nodes,
        exhausted: outcome.0,
        stopped: outcome.1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|i| (0..n).filter(|&j| j != i).collect())
            .collect()
    }

    #[test]
    fn counts_cycles_of_complete_graphs() {
        // K_n has n! / (2 (n - l)! l) cycles of length l.
        let mut seen = Vec::new();
        let cov = for_each_cycle(&complete(5), 5, u64::MAX, |c| {
            seen.push(c.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(cov.cycles, 10 + 15 + 12);
        assert_eq!(cov.complete_len, 5);
        assert!(!cov.exhausted);
        assert_eq!(seen[0], vec![0, 1, 2]);
        for c in &seen {
            assert_eq!(c[0], *c.iter().min().unwrap());
            assert!(c[1] < *c.last().unwrap());
        }
    }

    #[test]
    fn short_lengths_give_nothing() {
        let cov = for_each_cycle(&complete(4), 2, u64::MAX, |_| ControlFlow::Continue(()));
        assert_eq!(cov.cycles, 0);
    }

    #[test]
    fn budget_is_reported() {
        let cov = for_each_cycle(&complete(9), 9, 1000, |_| ControlFlow::Continue(()));
        assert!(cov.exhausted);
        assert!(cov.complete_len < 9);
    }
}
