//! Deterministic generators for the extremal families and witness pairs:
//! lex graphs, Turán graphs, the two-clique-plus-cross-edges family, the
//! triangle-free-deletion family, matching unions, and the two
//! non-isomorphic witness pairs used to refute uniform optimality. Where a
//! family allows "any" edge choice, a fixed lexicographic choice is made so
//! outputs are reproducible.

use crate::graph::{Graph, GraphError};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("size {m} out of range for order {n} (valid 0..={max})")]
    SizeOutOfRange { n: usize, m: usize, max: usize },
    #[error("size {m} below the two-clique threshold {min} for order {n}")]
    SizeBelowThreshold { n: usize, m: usize, min: usize },
    #[error("k = {k} out of range 1..={max} for order {n}")]
    KOutOfRange { n: usize, k: usize, max: usize },
    #[error("no triangle-free deletion of {k} edges fits in a part of {part} vertices")]
    DeletionInfeasible { k: usize, part: usize },
    #[error("require a >= b >= 1, got a = {a}, b = {b}")]
    BadCliqueSizes { a: usize, b: usize },
    #[error("parameter {name} = {got} below minimum {min}")]
    ParamTooSmall {
        name: &'static str,
        got: usize,
        min: usize,
    },
    #[error("order n = {n} too small: need n > {bound}")]
    OrderTooSmall { n: usize, bound: usize },
    #[error("missing required parameter --{0}")]
    MissingParam(&'static str),
    #[error("the edge-move operation needs an input graph, not bare parameters")]
    EdgeMoveNeedsGraph,
    #[error("unknown construction family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Family tags addressable by name (CLI `--construction`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Lex,
    Turan,
    Thm2,
    Thm3Ls,
    Thm3Fs,
    Thm4,
    Thm5Pair,
    Thm6Pair,
    EdgeMove,
}

impl FromStr for Family {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "lex" => Ok(Family::Lex),
            "turan" => Ok(Family::Turan),
            "thm2" => Ok(Family::Thm2),
            "thm3_ls" => Ok(Family::Thm3Ls),
            "thm3_fs" => Ok(Family::Thm3Fs),
            "thm4" => Ok(Family::Thm4),
            "thm5_pair" => Ok(Family::Thm5Pair),
            "thm6_pair" => Ok(Family::Thm6Pair),
            "edge_move" => Ok(Family::EdgeMove),
            other => Err(ConstructionError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Family::Lex => "lex",
            Family::Turan => "turan",
            Family::Thm2 => "thm2",
            Family::Thm3Ls => "thm3_ls",
            Family::Thm3Fs => "thm3_fs",
            Family::Thm4 => "thm4",
            Family::Thm5Pair => "thm5_pair",
            Family::Thm6Pair => "thm6_pair",
            Family::EdgeMove => "edge_move",
        };
        f.write_str(tag)
    }
}

/// A family tag with its integer parameters (only the applicable ones set).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub family: Family,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
}

/// Output of a construction: a single graph or a witness pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Built {
    Single(Graph),
    Pair(Graph, Graph),
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Built, ConstructionError> {
        let need =
            |p: Option<usize>, name: &'static str| p.ok_or(ConstructionError::MissingParam(name));
        match self.family {
            Family::Lex => Ok(Built::Single(lex_graph(
                need(self.n, "n")?,
                need(self.m, "m")?,
            )?)),
            Family::Turan => Ok(Built::Single(turan_graph(
                need(self.n, "n")?,
                need(self.k, "k")?,
            )?)),
            Family::Thm2 => Ok(Built::Single(theorem2_graph(
                need(self.n, "n")?,
                need(self.m, "m")?,
                ExtraEdgeRule::LexCross,
            )?)),
            Family::Thm3Ls => Ok(Built::Single(theorem3_ls_graph(
                need(self.n, "n")?,
                need(self.k, "k")?,
            )?)),
            Family::Thm3Fs => Ok(Built::Single(theorem3_fs_graph(
                need(self.a, "a")?,
                need(self.b, "b")?,
            )?)),
            Family::Thm4 => Ok(Built::Single(theorem4_graph(
                need(self.n, "n")?,
                need(self.m, "m")?,
            )?)),
            Family::Thm5Pair => {
                let (g, h) =
                    theorem5_pair(need(self.k, "k")?, need(self.l, "l")?, need(self.n, "n")?)?;
                Ok(Built::Pair(g, h))
            }
            Family::Thm6Pair => {
                let (g, h) = theorem6_pair(need(self.k, "k")?, need(self.n, "n")?)?;
                Ok(Built::Pair(g, h))
            }
            Family::EdgeMove => Err(ConstructionError::EdgeMoveNeedsGraph),
        }
    }
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph on ordered vertices `v_0 ≻ v_1 ≻ …` whose edges are the `m`
/// lexicographically largest pairs.
pub fn lex_graph(n: usize, m: usize) -> Result<Graph, ConstructionError> {
    let max = choose2(n);
    if m > max {
        return Err(ConstructionError::SizeOutOfRange { n, m, max });
    }
    let mut g = Graph::empty(n)?;
    let mut left = m;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if left == 0 {
                break 'outer;
            }
            g = g.add_edge(i, j)?;
            left -= 1;
        }
    }
    Ok(g)
}

/// Balanced complete (k−1)-partite Turán graph; contains no `K_k`.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::ParamTooSmall {
            name: "k",
            got: k,
            min: 2,
        });
    }
    if n == 0 {
        return Err(ConstructionError::ParamTooSmall {
            name: "n",
            got: n,
            min: 1,
        });
    }
    let parts = (k - 1).min(n);
    // complement of a disjoint union of cliques, one per cell
    let (q, r) = (n / parts, n % parts);
    let mut cells = Graph::order_zero();
    for p in 0..parts {
        let size = q + usize::from(p < r);
        cells = cells.disjoint_union(&Graph::complete(size)?)?;
    }
    Ok(cells.complement())
}

/// Rule resolving the free choice of cross edges in the two-clique family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraEdgeRule {
    /// Missing cross pairs in increasing lexicographic order (the default).
    LexCross,
    /// The same pairs in decreasing order, for invariance checks.
    ReverseLexCross,
}

/// `K_⌈n/2⌉ ∪ K_⌊n/2⌋` plus `m − (C(n,2) − ⌊n²/4⌋)` cross edges chosen by
/// `rule`; independence polynomial `1 + nx + (C(n,2)−m)x²`.
pub fn theorem2_graph(n: usize, m: usize, rule: ExtraEdgeRule) -> Result<Graph, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::ParamTooSmall {
            name: "n",
            got: n,
            min: 2,
        });
    }
    let max = choose2(n);
    if m > max {
        return Err(ConstructionError::SizeOutOfRange { n, m, max });
    }
    let big = n.div_ceil(2);
    let min = choose2(big) + choose2(n - big);
    if m < min {
        return Err(ConstructionError::SizeBelowThreshold { n, m, min });
    }
    let mut g = Graph::complete(big)?.disjoint_union(&Graph::complete(n - big)?)?;
    let mut cross: Vec<(usize, usize)> = Vec::new();
    for u in 0..big {
        for v in big..n {
            cross.push((u, v));
        }
    }
    if rule == ExtraEdgeRule::ReverseLexCross {
        cross.reverse();
    }
    for &(u, v) in cross.iter().take(m - min) {
        g = g.add_edge(u, v)?;
    }
    Ok(g)
}

/// The two-clique graph with `k` edges deleted inside the big part so that
/// the deleted edges form a triangle-free graph: a star `K_{1,k}` when it
/// fits, otherwise a cycle `C_k`.
pub fn theorem3_ls_graph(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    let max_k = n / 2;
    if k == 0 || k > max_k {
        return Err(ConstructionError::KOutOfRange { n, k, max: max_k });
    }
    let big = n.div_ceil(2);
    let base = Graph::complete(big)?.disjoint_union(&Graph::complete(n - big)?)?;
    let shape = if k < big {
        DeletionShape::Star
    } else if k >= 4 && k <= big {
        DeletionShape::Cycle
    } else {
        // k = big < 4: a cycle this short is not triangle-free and no star
        // fits, so no valid deletion exists (first hit at n = 6, k = 3)
        return Err(ConstructionError::DeletionInfeasible { k, part: big });
    };
    delete_shape(&base, big, k, shape)
}

/// Triangle-free deletion patterns inside the big part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeletionShape {
    /// Edges `(0,1), (0,2), …, (0,k)`.
    Star,
    /// Edges of the cycle `0-1-…-(k-1)-0`; needs `k ≥ 4` to avoid a triangle.
    Cycle,
    /// Edges `(0,1), (2,3), …`; needs `2k ≤ part`.
    Matching,
}

/// Deletes `k` edges of `shape` from the first `part` vertices of `base`.
/// Exposed so invariance across alternative triangle-free choices can be
/// checked directly.
pub fn delete_shape(
    base: &Graph,
    part: usize,
    k: usize,
    shape: DeletionShape,
) -> Result<Graph, ConstructionError> {
    let pairs: Vec<(usize, usize)> = match shape {
        DeletionShape::Star => {
            if k > part.saturating_sub(1) {
                return Err(ConstructionError::DeletionInfeasible { k, part });
            }
            (1..=k).map(|v| (0, v)).collect()
        }
        DeletionShape::Cycle => {
            if k < 4 || k > part {
                return Err(ConstructionError::DeletionInfeasible { k, part });
            }
            (0..k).map(|v| (v, (v + 1) % k)).collect()
        }
        DeletionShape::Matching => {
            if 2 * k > part {
                return Err(ConstructionError::DeletionInfeasible { k, part });
            }
            (0..k).map(|v| (2 * v, 2 * v + 1)).collect()
        }
    };
    let mut g = base.clone();
    for (u, v) in pairs {
        g = g.delete_edge(u, v)?;
    }
    Ok(g)
}

/// `2K_a ∪ K_b`.
pub fn theorem3_fs_graph(a: usize, b: usize) -> Result<Graph, ConstructionError> {
    if b < 1 || a < b {
        return Err(ConstructionError::BadCliqueSizes { a, b });
    }
    Ok(Graph::complete(a)?
        .disjoint_union(&Graph::complete(a)?)?
        .disjoint_union(&Graph::complete(b)?)?)
}

/// `mK_2 ∪ (n−2m)K_1`.
pub fn theorem4_graph(n: usize, m: usize) -> Result<Graph, ConstructionError> {
    if 2 * m > n {
        return Err(ConstructionError::SizeOutOfRange { n, m, max: n / 2 });
    }
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        edges.push((2 * i, 2 * i + 1));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Witness pair sharing `(n, m)` with `m = C(n,2) − (k−1)C(l,2)`:
/// `G` is the complement of `(k−1)K_l` plus isolated vertices (a join of
/// Turán type), `H` the complement of `(k−1)C(l,2)` disjoint edges plus
/// isolated vertices.
pub fn theorem5_pair(k: usize, l: usize, n: usize) -> Result<(Graph, Graph), ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::ParamTooSmall {
            name: "k",
            got: k,
            min: 3,
        });
    }
    if l < 3 {
        return Err(ConstructionError::ParamTooSmall {
            name: "l",
            got: l,
            min: 3,
        });
    }
    let bound = (k - 1) * l * (l - 1);
    if n <= bound {
        return Err(ConstructionError::OrderTooSmall { n, bound });
    }
    let mut g_comp = Graph::order_zero();
    for _ in 0..k - 1 {
        g_comp = g_comp.disjoint_union(&Graph::complete(l)?)?;
    }
    g_comp = g_comp.disjoint_union(&Graph::empty(n - (k - 1) * l)?)?;
    let pairs = (k - 1) * choose2(l);
    let h_comp = theorem4_graph(n, pairs)?;
    Ok((g_comp.complement(), h_comp.complement()))
}

/// Witness pair `((K_{C(k,2)+2} − e) ∪ isolateds, K_{C(k,2)+1} ∪ K_k ∪
/// isolateds)`, both of size `C(C(k,2)+2, 2) − 1`.
pub fn theorem6_pair(k: usize, n: usize) -> Result<(Graph, Graph), ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::ParamTooSmall {
            name: "k",
            got: k,
            min: 3,
        });
    }
    let c = choose2(k);
    let min_n = c + k + 1;
    if n < min_n {
        return Err(ConstructionError::OrderTooSmall {
            n,
            bound: min_n - 1,
        });
    }
    let g = Graph::complete(c + 2)?
        .delete_edge(0, 1)?
        .disjoint_union(&Graph::empty(n - c - 2)?)?;
    let h = Graph::complete(c + 1)?
        .disjoint_union(&Graph::complete(k)?)?
        .disjoint_union(&Graph::empty(n - c - 1 - k)?)?;
    Ok((g, h))
}

/// The size-preserving move underlying the matching lower bound: delete the
/// edge `(u, v)` and connect the two isolated vertices `y` and `z` instead.
/// The independence polynomial never increases anywhere on `[0, ∞)`.
pub fn edge_move(
    h1: &Graph,
    u: usize,
    v: usize,
    y: usize,
    z: usize,
) -> Result<Graph, ConstructionError> {
    if h1.degree(y) != 0 {
        return Err(GraphError::NotIsolated(y).into());
    }
    if h1.degree(z) != 0 {
        return Err(GraphError::NotIsolated(z).into());
    }
    Ok(h1.delete_edge(u, v)?.add_edge(y, z)?)
}
