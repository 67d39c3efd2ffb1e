//! Exact canonical labeling by equitable partition refinement with
//! backtracking.
//!
//! Two graphs get the same canonical form iff they are isomorphic. Speed is
//! secondary to correctness here: the form is the deduplication and
//! memoization key for every search, so it must never merge non-isomorphic
//! graphs. Automorphisms discovered at the leaves prune sibling branches
//! whose individualized vertex lies in the same orbit.

use super::{graph6_encode, Graph};

/// Canonical byte string: equal iff the graphs are isomorphic.
///
/// The bytes are the graph6 encoding of the canonically relabeled graph, so
/// the form doubles as a portable representative.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    graph6_encode(&canonical_graph(g)).into_bytes()
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let n = g.order();
    if n <= 1 {
        return g.clone();
    }
    let mut search = Search {
        g,
        best_enc: None,
        best_label: Vec::new(),
        autos: Vec::new(),
    };
    let initial = refine(g, vec![(0..n).collect()]);
    let mut prefix = Vec::new();
    search.dfs(initial, &mut prefix);
    g.relabel(&search.best_label)
}

struct Search<'a> {
    g: &'a Graph,
    /// Smallest leaf encoding seen so far (upper-triangle bit rows).
    best_enc: Option<Vec<u64>>,
    /// Labeling that produced `best_enc` (original vertex -> new label).
    best_label: Vec<usize>,
    /// Automorphisms discovered from pairs of equal leaves.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn dfs(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if cells.iter().all(|c| c.len() == 1) {
            self.leaf(&cells);
            return;
        }
        let target = cells.iter().position(|c| c.len() > 1).unwrap();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            // Skip v if an already-tried sibling lies in the same orbit of
            // the automorphisms that fix the current prefix pointwise.
            let orbits = self.orbits_fixing(prefix);
            if tried.iter().any(|&u| orbits[u] == orbits[v]) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            prefix.push(v);
            self.dfs(refine(self.g, child), prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.g.order();
        let mut label = vec![0usize; n];
        for (pos, cell) in cells.iter().enumerate() {
            label[cell[0]] = pos;
        }
        let enc = encode(self.g, &label);
        match &self.best_enc {
            None => {
                self.best_enc = Some(enc);
                self.best_label = label;
            }
            Some(best) => {
                if enc < *best {
                    self.best_enc = Some(enc);
                    self.best_label = label;
                } else if enc == *best {
                    // Both labelings reach the same canonical candidate, so
                    // best_label^{-1} ∘ label is an automorphism.
                    let mut inv_best = vec![0usize; n];
                    for (v, &l) in self.best_label.iter().enumerate() {
                        inv_best[l] = v;
                    }
                    let sigma: Vec<usize> = (0..n).map(|v| inv_best[label[v]]).collect();
                    if sigma.iter().enumerate().any(|(v, &s)| s != v) {
                        self.autos.push(sigma);
                    }
                }
            }
        }
    }

    /// Orbit id per vertex under the subgroup generated by the stored
    /// automorphisms that fix every vertex of `prefix`.
    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for sigma in &self.autos {
            if prefix.iter().any(|&p| sigma[p] != p) {
                continue;
            }
            for (v, &sv) in sigma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, sv));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

/// Upper-triangle adjacency rows of the relabeled graph, compared
/// lexicographically to pick the canonical leaf.
fn encode(g: &Graph, label: &[usize]) -> Vec<u64> {
    let n = g.order();
    let mut inv = vec![0usize; n];
    for (v, &l) in label.iter().enumerate() {
        inv[l] = v;
    }
    let mut rows = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(inv[i], inv[j]) {
                rows[i] |= 1 << j;
            }
        }
    }
    rows
}

/// Equitable refinement: split cells by neighbor counts into earlier cells
/// until stable. Cell order (and split order within a cell) is deterministic.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    loop {
        let mut color = vec![0usize; n];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                color[v] = ci;
            }
        }
        let ncells = cells.len();
        let signature = |v: usize| -> Vec<u32> {
            let mut counts = vec![0u32; ncells];
            for u in g.neighbors(v).iter() {
                counts[color[u]] += 1;
            }
            counts
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(ncells);
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut group: Vec<usize> = vec![keyed[0].1];
            for w in keyed.windows(2) {
                if w[0].0 == w[1].0 {
                    group.push(w[1].1);
                } else {
                    next.push(std::mem::take(&mut group));
                    group.push(w[1].1);
                    changed = true;
                }
            }
            next.push(group);
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}
