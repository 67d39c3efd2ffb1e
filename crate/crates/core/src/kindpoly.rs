//! k-independence polynomials `I_k(G,x)`: generating functions of the
//! K_k-free induced subsets, the `r_G` degree statistic, the join
//! clique-count convolution, and the exact f-ratio from the Turán-type
//! comparison.

use crate::graph::Graph;
use crate::{Int, IntPolynomial, Rational};
use num_integer::binomial;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KIndPolyError {
    #[error("k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("subset sweep limited to order {limit}, got {got}")]
    OrderTooLarge { got: usize, limit: usize },
    #[error("l = 2 is degenerate: the two comparison graphs coincide and the ratio is 0/0")]
    DegenerateL2,
    #[error("l must be at least 3, got {0}")]
    LTooSmall(usize),
    #[error("i must be at least 2, got {0}")]
    ITooSmall(usize),
    #[error("f-ratio denominator vanishes at l={l}, i={i}")]
    ZeroDenominator { l: usize, i: usize },
}

/// Largest order the 2^n subset sweep accepts.
pub const SWEEP_MAX_ORDER: usize = 25;

pub(crate) fn subset_sweep_counts(g: &Graph, k: usize) -> Result<Vec<u64>, KIndPolyError> {
    if k < 2 {
        return Err(KIndPolyError::KTooSmall(k));
    }
    let n = g.order();
    if n > SWEEP_MAX_ORDER {
        return Err(KIndPolyError::OrderTooLarge {
            got: n,
            limit: SWEEP_MAX_ORDER,
        });
    }
    // enumerate every k-clique once; a subset is K_k-free iff it contains
    // none of these bitsets
    let cliques: Vec<u64> = g.cliques_of_size(k).iter().map(|s| s.0).collect();
    let mut counts = vec![0u64; n + 1];
    for s in 0..1u64 << n {
        if cliques.iter().all(|&c| c & s != c) {
            counts[s.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

/// `I_k(G, x)`: coefficient `j` counts the `j`-subsets of vertices whose
/// induced subgraph has no `K_k`. `I_2 = I`.
pub fn k_independence_polynomial(g: &Graph, k: usize) -> Result<IntPolynomial, KIndPolyError> {
    let counts = subset_sweep_counts(g, k)?;
    Ok(IntPolynomial::from_coeffs(
        counts.into_iter().map(Int::from).collect(),
    ))
}

/// `r_G`: the largest order of an induced K_k-free subgraph, i.e. the degree
/// of `I_k(G, x)`.
pub fn r_value(g: &Graph, k: usize) -> Result<usize, KIndPolyError> {
    Ok(k_independence_polynomial(g, k)?
        .degree()
        .expect("i_{k,0} = 1 so the polynomial is nonzero"))
}

/// Clique-count convolution for joins: entry `t` of the result is
/// `Σ_{i+j=t} c1[i]·c2[j]`, the number of t-cliques of `G1 + G2`.
pub fn join_clique_counts(c1: &[Int], c2: &[Int]) -> Vec<Int> {
    if c1.is_empty() || c2.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); c1.len() + c2.len() - 1];
    for (i, a) in c1.iter().enumerate() {
        for (j, b) in c2.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Exact value of the comparison ratio
/// `f_{l,i} = (C(l(l−2),i) + l·C(l(l−2),i−1)) / (C(C(l,2),i)·2^i)`.
///
/// `l = 2` is rejected as degenerate: the two graphs under comparison
/// coincide and the ratio reduces to 0/0.
pub fn theorem5_clique_comparison(l: usize, i: usize) -> Result<Rational, KIndPolyError> {
    if l == 2 {
        return Err(KIndPolyError::DegenerateL2);
    }
    if l < 3 {
        return Err(KIndPolyError::LTooSmall(l));
    }
    if i < 2 {
        return Err(KIndPolyError::ITooSmall(i));
    }
    let big = Int::from;
    let ll2 = big(l * (l - 2));
    let numer = binomial(ll2.clone(), big(i)) + big(l) * binomial(ll2, big(i - 1));
    let denom = binomial(big(l * (l - 1) / 2), big(i)) * Int::from(2u32).pow(i as u32);
    if denom.is_zero() {
        return Err(KIndPolyError::ZeroDenominator { l, i });
    }
    Ok(Rational::new(numer, denom))
}
