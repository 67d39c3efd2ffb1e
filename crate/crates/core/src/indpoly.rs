//! Exact independence polynomials: the deletion recursion
//! `I(G,x) = x·I(G−N[v],x) + I(G−v,x)` with component splitting and
//! canonical-form memoization, a brute-force subset oracle, and the closed
//! formula for the lexicographically greatest graph.

use crate::graph::{canonical_form, Graph};
use crate::{Int, IntPolynomial};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndPolyError {
    #[error("subset oracle limited to order {limit}, got {got}")]
    OrderTooLargeForOracle { got: usize, limit: usize },
    #[error("size {m} out of range for order {n} (max {max})")]
    SizeOutOfRange { n: usize, m: usize, max: usize },
}

/// Largest order the 2^n subset oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 25;

/// Default memo-cache entry cap; on overflow the whole cache is reset.
pub const DEFAULT_CACHE_CAP: usize = 1 << 20;

/// Recursion engine with a bounded memo cache keyed by canonical form.
///
/// Results are pure functions of the canonical form, so the cache is purely
/// an accelerator: duplicated computation is acceptable, corruption is not.
pub struct IndEngine {
    memo: HashMap<Vec<u8>, IntPolynomial>,
    cap: usize,
}

impl Default for IndEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl IndEngine {
    pub fn new() -> Self {
        Self::with_cache_cap(DEFAULT_CACHE_CAP)
    }

    pub fn with_cache_cap(cap: usize) -> Self {
        IndEngine {
            memo: HashMap::new(),
            cap: cap.max(1),
        }
    }

    /// `I(G, x)`: coefficient `j` counts the independent sets of size `j`.
    pub fn compute(&mut self, g: &Graph) -> IntPolynomial {
        if g.order() == 0 {
            return IntPolynomial::one();
        }
        let mut acc = IntPolynomial::one();
        for comp in g.components() {
            let sub = g.induced_subgraph(comp).expect("component in range");
            acc = &acc * &self.connected_poly(&sub);
        }
        acc
    }

    fn connected_poly(&mut self, g: &Graph) -> IntPolynomial {
        let n = g.order();
        let m = g.size();
        if m == 0 {
            return IntPolynomial::binomial_power(n);
        }
        if m == n * (n - 1) / 2 {
            // clique: 1 + nx
            return IntPolynomial::from_coeffs(vec![Int::from(1), Int::from(n)]);
        }
        let key = canonical_form(g);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        // pivot on a maximum-degree vertex (lowest index on ties) to shrink
        // G - N[v] as fast as possible
        let v = (0..n)
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let without_closed = g
            .induced_subgraph(g.vertices().difference(g.closed_neighborhood(v)))
            .expect("subset of vertices");
        let without_v = g.delete_vertex(v).expect("vertex in range");
        let result = &self.compute(&without_closed).shift_up(1) + &self.compute(&without_v);
        if self.memo.len() >= self.cap {
            self.memo.clear();
        }
        self.memo.insert(key, result.clone());
        result
    }
}

/// `I(G, x)` with a fresh engine.
pub fn independence_polynomial(g: &Graph) -> IntPolynomial {
    IndEngine::new().compute(g)
}

/// Direct-definition oracle: sweeps all `2^n` vertex subsets and tests each
/// for edgelessness. Independent of the recursion path.
pub fn independence_polynomial_oracle(g: &Graph) -> Result<IntPolynomial, IndPolyError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(IndPolyError::OrderTooLargeForOracle {
            got: n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.neighbors(v).0).collect();
    let mut counts = vec![0u64; n + 1];
    for s in 0..1u64 << n {
        let mut bits = s;
        let mut independent = true;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if rows[v] & s != 0 {
                independent = false;
                break;
            }
        }
        if independent {
            counts[s.count_ones() as usize] += 1;
        }
    }
    Ok(IntPolynomial::from_coeffs(
        counts.into_iter().map(Int::from).collect(),
    ))
}

/// Closed formula for `I(G_{n,m,≼}, x)`, the independence polynomial of the
/// graph on `n` vertices whose edges are the `m` lexicographically largest
/// pairs.
///
/// For `m < C(n,2)` the size decomposes uniquely as
/// `m = (n-ℓ) + (n-ℓ+1) + … + (n-1) + j` with `j ∈ {0, …, n-ℓ-2}`, where `ℓ`
/// counts the dominating vertices. An independent set contains either a
/// single dominating vertex or none of them, and with the dominators gone
/// the rest is a star `K_{1,j}` plus isolated vertices, so
/// `I = ℓx + ((1+x)^j + x)(1+x)^{n-ℓ-j-1}`.
pub fn lex_polynomial_closed(n: usize, m: usize) -> Result<IntPolynomial, IndPolyError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(IndPolyError::SizeOutOfRange { n, m, max });
    }
    if m == max {
        return Ok(IntPolynomial::from_coeffs(vec![Int::from(1), Int::from(n)]));
    }
    let (mut rem, mut ell) = (m, 0usize);
    while n - ell - 1 > 0 && rem >= n - ell - 1 {
        rem -= n - ell - 1;
        ell += 1;
    }
    let j = rem;
    debug_assert!(j + 2 <= n - ell, "decomposition out of range");
    let ell_x = IntPolynomial::from_coeffs(vec![Int::from(0), Int::from(ell)]);
    let star = &IntPolynomial::binomial_power(j) + &IntPolynomial::x();
    Ok(&ell_x + &(&star * &IntPolynomial::binomial_power(n - ell - j - 1)))
}
