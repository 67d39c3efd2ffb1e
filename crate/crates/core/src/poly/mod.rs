//! Exact dense polynomial arithmetic, generic over the coefficient ring.
//!
//! Everything in this module is exact: coefficients are ordered ring
//! elements (big integers in practice, rationals inside the root isolator),
//! and comparison verdicts on `[0, ∞)` are decided by exact root isolation,
//! never floating point.

mod dominance;
mod roots;

pub use dominance::{dominance, nonneg_on_nonneg_axis, DominanceVerdict, Nonnegativity};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficient ring bound: an ordered commutative ring with exact equality.
pub trait Coeff:
    Clone
    + Ord
    + Eq
    + std::hash::Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + Ord
        + Eq
        + std::hash::Hash
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Dense univariate polynomial with exact coefficients.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial is the
/// empty coefficient vector. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Polynomial<T> {
    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![T::one()],
        }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Polynomial { coeffs: vec![c] }.trimmed()
    }

    /// Builds from `c_0..c_d`, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        Polynomial { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> T {
        self.coeffs.get(j).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
        .trimmed()
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `(1+x)^n`; coefficient `j` is `C(n, j)`.
    pub fn binomial_power(n: usize) -> Self {
        // Pascal's rule keeps everything in the ring (no division).
        let mut row = vec![T::one()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(row.len() + 1);
            next.push(T::one());
            for w in row.windows(2) {
                next.push(w[0].clone() + w[1].clone());
            }
            next.push(T::one());
            row = next;
        }
        Polynomial { coeffs: row }
    }

    /// Exact evaluation at a ring element.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut mult = T::one();
        for c in self.coeffs.iter().skip(1) {
            out.push(c.clone() * mult.clone());
            mult = mult + T::one();
        }
        Polynomial { coeffs: out }.trimmed()
    }

    /// Decimal-string form for reports: exact big coefficients survive JSON.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl<T: Coeff + Integer> Polynomial<T> {
    /// Exact rational evaluation of an integer-coefficient polynomial.
    pub fn eval_rational(&self, x: &Ratio<T>) -> Ratio<T> {
        let mut acc = Ratio::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Ratio::from_integer(c.clone());
        }
        acc
    }

    /// Lifts into the rational coefficient ring.
    pub fn to_rational(&self) -> Polynomial<Ratio<T>> {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Ratio::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl<T: Coeff> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect();
        Polynomial { coeffs }.trimmed()
    }
}

impl<T: Coeff> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) - rhs.coeff(j)).collect();
        Polynomial { coeffs }.trimmed()
    }
}

impl<T: Coeff> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial { coeffs }.trimmed()
    }
}

impl<T: Coeff> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl<T: Coeff> $trait for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl<T: Coeff> fmt::Display for Polynomial<T> {
    /// Renders as `c0 + c1*x + c2*x^2 + …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if c.is_one() => write!(f, "x^{j}")?,
                _ => write!(f, "{c}*x^{j}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Ordering of `f` against `g` for `x` arbitrarily small and positive: the
/// first differing coefficient decides.
pub fn compare_near_zero<T: Coeff>(f: &Polynomial<T>, g: &Polynomial<T>) -> Ordering {
    let len = f.coeffs.len().max(g.coeffs.len());
    for j in 0..len {
        match f.coeff(j).cmp(&g.coeff(j)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Ordering of `f` against `g` for `x` arbitrarily large: the last differing
/// coefficient decides (vectors padded to common length).
pub fn compare_near_infinity<T: Coeff>(f: &Polynomial<T>, g: &Polynomial<T>) -> Ordering {
    let len = f.coeffs.len().max(g.coeffs.len());
    for j in (0..len).rev() {
        match f.coeff(j).cmp(&g.coeff(j)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, IntPolynomial, Rational};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(cs.iter().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn ring_examples() {
        let one_plus_x = poly(&[1, 1]);
        assert_eq!(&one_plus_x * &one_plus_x, poly(&[1, 2, 1]));
        // (1+2x)^2 = 1+4x+4x^2, which is I(2K_2, x)
        let f = poly(&[1, 2]);
        assert_eq!(&f * &f, poly(&[1, 4, 4]));
        assert_eq!(
            poly(&[1, 5]).eval_rational(&Rational::zero()),
            Rational::from_integer(BigInt::from(1))
        );
    }

    #[test]
    fn binomial_powers() {
        assert_eq!(IntPolynomial::binomial_power(0), poly(&[1]));
        assert_eq!(IntPolynomial::binomial_power(3), poly(&[1, 3, 3, 1]));
        assert_eq!(IntPolynomial::binomial_power(6).coeff(2), Int::from(15));
    }

    #[test]
    fn zero_canonical_form() {
        assert!(poly(&[0, 0, 0]).is_zero());
        assert_eq!(poly(&[1, 2]) - poly(&[1, 2]), IntPolynomial::zero());
        assert_eq!(poly(&[]).degree(), None);
        assert_eq!(poly(&[5]).degree(), Some(0));
    }

    #[test]
    fn display_form() {
        assert_eq!(
            poly(&[1, 5, 9, 7, 2]).to_string(),
            "1 + 5*x + 9*x^2 + 7*x^3 + 2*x^4"
        );
        assert_eq!(poly(&[4, -3, 4]).to_string(), "4 + -3*x + 4*x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(poly(&[0, 1]).to_string(), "x");
    }

    #[test]
    fn near_zero_and_infinity_orders() {
        let f = poly(&[1, 3, 1]);
        let g = poly(&[1, 3, 2]);
        assert_eq!(compare_near_zero(&f, &g), Ordering::Less);
        assert_eq!(compare_near_infinity(&f, &g), Ordering::Less);
        // degree decides near infinity
        let f = poly(&[9, 9, 9]);
        let g = poly(&[0, 0, 0, 1]);
        assert_eq!(compare_near_infinity(&f, &g), Ordering::Less);
        assert_eq!(compare_near_zero(&f, &g), Ordering::Greater);
        assert_eq!(compare_near_zero(&f, &f), Ordering::Equal);
        assert_eq!(compare_near_infinity(&f, &f), Ordering::Equal);
    }

    #[test]
    fn derivative_and_eval() {
        let f = poly(&[5, -3, 0, 2]); // 5 - 3x + 2x^3
        assert_eq!(f.derivative(), poly(&[-3, 0, 6]));
        assert_eq!(f.eval(&Int::from(2)), Int::from(5 - 6 + 16));
    }

    proptest! {
        #[test]
        fn distributivity(a in proptest::collection::vec(-20i64..20, 0..6),
                          b in proptest::collection::vec(-20i64..20, 0..6),
                          c in proptest::collection::vec(-20i64..20, 0..6)) {
            let (f, g, h) = (poly(&a), poly(&b), poly(&c));
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        }
    }
}
