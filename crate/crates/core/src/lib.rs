//! Exact toolkit for independence polynomials of small graphs: bitset graph
//! core (order up to 62), big-integer polynomial arithmetic with exact
//! dominance decisions on `[0, ∞)`, k-independence generating functions,
//! generators for the known extremal families, and exhaustive optimality
//! searches over all graphs with a given order and size.
//!
//! All arithmetic is exact; the crate contains no floating point. Modules
//! are generic over the coefficient ring where that is free (see
//! [`poly::Polynomial`]); the concrete aliases below fix the types the rest
//! of the crate and the CLI work with.

pub mod constructions;
pub mod graph;
pub mod indpoly;
pub mod kindpoly;
pub mod poly;
pub mod search;

/// Arbitrary-precision integer used for all counts and coefficients.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational used for evaluation points and witnesses.
pub type Rational = num_rational::BigRational;

/// The polynomial type of every generating function in this crate.
pub type IntPolynomial = poly::Polynomial<Int>;

#[cfg(test)]
pub(crate) mod test_support {
    use crate::graph::Graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Erdős–Rényi G(n, 1/2) sample with a fixed seed.
    pub fn random_graph(n: usize, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::empty(n).unwrap();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.5) {
                    g = g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }
}
