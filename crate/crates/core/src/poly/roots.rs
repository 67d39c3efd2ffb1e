//! Exact real-root isolation over the rationals via Sturm sequences.
//!
//! Only positive roots are isolated (the dominance question lives on
//! `[0, ∞)`). Rational roots discovered during bisection are deflated out and
//! reported exactly; the remaining roots come back as open intervals with
//! non-root rational endpoints, pairwise separated and separated from every
//! exact root.

use super::{Coeff, Polynomial};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use std::cmp::Ordering;

pub(crate) type RatPoly<T> = Polynomial<Ratio<T>>;

/// Location of one distinct positive real root.
#[derive(Clone, Debug)]
pub(crate) enum Holder<T: Clone + Integer> {
    Exact(Ratio<T>),
    /// Open interval `(a, b)` containing exactly one root; neither endpoint
    /// is a root of the polynomial under isolation.
    Interval(Ratio<T>, Ratio<T>),
}

impl<T: Coeff + Integer> Holder<T> {
    fn position(&self) -> &Ratio<T> {
        match self {
            Holder::Exact(q) => q,
            Holder::Interval(a, _) => a,
        }
    }

    /// A rational point strictly left of the root.
    pub(crate) fn left_point(&self) -> Ratio<T> {
        match self {
            Holder::Exact(q) => q.clone(),
            Holder::Interval(a, _) => a.clone(),
        }
    }

    /// A rational point strictly right of the root (the root itself for
    /// exact holders).
    pub(crate) fn right_point(&self) -> Ratio<T> {
        match self {
            Holder::Exact(q) => q.clone(),
            Holder::Interval(_, b) => b.clone(),
        }
    }

    pub(crate) fn is_exact(&self) -> bool {
        matches!(self, Holder::Exact(_))
    }
}

fn abs<T: Coeff + Integer>(x: Ratio<T>) -> Ratio<T> {
    if x < Ratio::zero() {
        -x
    } else {
        x
    }
}

fn half<T: Coeff + Integer>() -> Ratio<T> {
    Ratio::new(T::one(), T::one() + T::one())
}

/// Polynomial division over the rational coefficient field.
fn div_rem<T: Coeff + Integer>(a: &RatPoly<T>, b: &RatPoly<T>) -> (RatPoly<T>, RatPoly<T>) {
    assert!(!b.is_zero(), "division by the zero polynomial");
    let db = b.degree().unwrap();
    let mut r = a.clone();
    let mut q = RatPoly::<T>::zero();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let factor = r.leading_coeff().unwrap().clone() / b.leading_coeff().unwrap().clone();
        let t = RatPoly::<T>::constant(factor).shift_up(dr - db);
        r = &r - &(&t * b);
        q = &q + &t;
    }
    (q, r)
}

fn gcd<T: Coeff + Integer>(a: &RatPoly<T>, b: &RatPoly<T>) -> RatPoly<T> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lc) = a.leading_coeff().cloned() {
        a = a.scale(&(Ratio::one() / lc));
    }
    a
}

/// Squarefree part `p / gcd(p, p')`: same distinct roots, all simple.
pub(crate) fn squarefree_part<T: Coeff + Integer>(p: &RatPoly<T>) -> RatPoly<T> {
    let g = gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return p.clone();
    }
    let (q, r) = div_rem(p, &g);
    debug_assert!(r.is_zero());
    q
}

/// Sturm chain of `p`, each member scaled by a positive constant to keep
/// coefficients small (positive scaling preserves the sign sequence).
fn sturm_chain<T: Coeff + Integer>(p: &RatPoly<T>) -> Vec<RatPoly<T>> {
    let normalize = |f: RatPoly<T>| -> RatPoly<T> {
        match f.leading_coeff() {
            Some(lc) => {
                let scale = Ratio::one() / abs(lc.clone());
                f.scale(&scale)
            }
            None => f,
        }
    };
    let mut chain = vec![normalize(p.clone())];
    let d = normalize(p.derivative());
    if !d.is_zero() {
        chain.push(d);
    }
    while chain.last().is_some_and(|f| f.degree() > Some(0)) {
        let k = chain.len();
        let (_, r) = div_rem(&chain[k - 2], &chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(normalize(-&r));
    }
    chain
}

fn sign_of<T: Coeff + Integer>(x: &Ratio<T>) -> Ordering {
    x.cmp(&Ratio::zero())
}

/// Number of sign variations of the chain at `x` (zeros skipped).
fn variations<T: Coeff + Integer>(chain: &[RatPoly<T>], x: &Ratio<T>) -> usize {
    let mut count = 0;
    let mut last: Option<Ordering> = None;
    for f in chain {
        let s = sign_of(&f.eval(x));
        if s == Ordering::Equal {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// A rational bound strictly greater than the absolute value of every root.
pub(crate) fn cauchy_bound<T: Coeff + Integer>(p: &RatPoly<T>) -> Ratio<T> {
    let lc = abs(p.leading_coeff().expect("nonzero polynomial").clone());
    let mut max = Ratio::zero();
    for c in p.coeffs().iter().take(p.coeffs().len() - 1) {
        let v = abs(c.clone()) / lc.clone();
        if v > max {
            max = v;
        }
    }
    Ratio::one() + max
}

/// Divides out the factor `(x - q)`; `q` must be an exact root.
fn deflate<T: Coeff + Integer>(p: &RatPoly<T>, q: &Ratio<T>) -> RatPoly<T> {
    let factor = RatPoly::<T>::from_coeffs(vec![-q.clone(), Ratio::one()]);
    let (quot, rem) = div_rem(p, &factor);
    debug_assert!(rem.is_zero(), "deflation point is not a root");
    quot
}

/// Isolates every distinct root of `p` in `(0, ∞)`.
///
/// Precondition: `p` is nonzero and `p(0) ≠ 0`. The returned holders are
/// sorted left to right, pairwise separated, and every interval endpoint is a
/// non-root of `p`.
pub(crate) fn isolate_positive_roots<T: Coeff + Integer>(p: &RatPoly<T>) -> Vec<Holder<T>> {
    assert!(!p.is_zero());
    debug_assert!(!p.eval(&Ratio::zero()).is_zero(), "strip x^t factors first");
    let mut h = squarefree_part(p);
    let mut exacts: Vec<Ratio<T>> = Vec::new();
    let mut intervals: Vec<(Ratio<T>, Ratio<T>)>;
    'restart: loop {
        intervals = Vec::new();
        if h.degree().unwrap_or(0) == 0 {
            break;
        }
        let chain = sturm_chain(&h);
        let zero = Ratio::zero();
        let bound = cauchy_bound(&h);
        let v0 = variations(&chain, &zero);
        let vb = variations(&chain, &bound);
        // (lo, v(lo), hi, v(hi)); the count of roots in (lo, hi] is v(lo)-v(hi)
        let mut stack = vec![(zero, v0, bound, vb)];
        while let Some((lo, vlo, hi, vhi)) = stack.pop() {
            let count = vlo
                .checked_sub(vhi)
                .expect("Sturm variations must decrease");
            if count == 0 {
                continue;
            }
            if count == 1 {
                intervals.push((lo, hi));
                continue;
            }
            let mid = (lo.clone() + hi.clone()) * half::<T>();
            if h.eval(&mid).is_zero() {
                exacts.push(mid);
                h = deflate(&h, exacts.last().unwrap());
                continue 'restart;
            }
            let vm = variations(&chain, &mid);
            stack.push((lo, vlo, mid.clone(), vm));
            stack.push((mid, vm, hi, vhi));
        }
        break;
    }

    // Refine each interval until it is strictly separated from every exact
    // root (a simple root means the endpoint signs differ, so sign bisection
    // converges). A rational root hit during refinement becomes exact.
    let mut holders: Vec<Holder<T>> = exacts.into_iter().map(Holder::Exact).collect();
    'interval: for (mut a, mut b) in intervals {
        loop {
            let clear = holders.iter().all(|hold| match hold {
                Holder::Exact(q) => *q < a || *q > b,
                Holder::Interval(..) => true,
            });
            if clear {
                break;
            }
            let mid = (a.clone() + b.clone()) * half::<T>();
            if h.eval(&mid).is_zero() {
                holders.push(Holder::Exact(mid));
                continue 'interval;
            }
            if sign_of(&h.eval(&a)) != sign_of(&h.eval(&mid)) {
                b = mid;
            } else {
                a = mid;
            }
        }
        holders.push(Holder::Interval(a, b));
    }
    holders.sort_by(|x, y| x.position().cmp(y.position()));
    holders
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, Rational};

    fn ratpoly(cs: &[i64]) -> RatPoly<Int> {
        RatPoly::from_coeffs(
            cs.iter()
                .map(|&c| Rational::from_integer(Int::from(c)))
                .collect(),
        )
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn isolates_simple_roots() {
        // (x-1)(x-2)(x+3) = x^3 - 7x + 6
        let p = ratpoly(&[6, -7, 0, 1]);
        let holders = isolate_positive_roots(&p);
        assert_eq!(holders.len(), 2);
        // roots 1 and 2, in order
        for (holder, root) in holders.iter().zip([rat(1, 1), rat(2, 1)]) {
            match holder {
                Holder::Exact(q) => assert_eq!(*q, root),
                Holder::Interval(a, b) => {
                    assert!(*a < root && root < *b, "{a} < {root} < {b} fails")
                }
            }
        }
    }

    #[test]
    fn no_positive_roots() {
        let p = ratpoly(&[4, -3, 4]); // discriminant < 0
        assert!(isolate_positive_roots(&p).is_empty());
        let p = ratpoly(&[1, 2, 1]); // roots at -1
        assert!(isolate_positive_roots(&p).is_empty());
    }

    #[test]
    fn multiple_roots_collapse() {
        // (x-1)^2 (x-3)
        let p = &(&ratpoly(&[-1, 1]) * &ratpoly(&[-1, 1])) * &ratpoly(&[-3, 1]);
        let holders = isolate_positive_roots(&p);
        assert_eq!(holders.len(), 2);
    }

    #[test]
    fn rational_root_becomes_exact() {
        // (2x-1)(x-2) = 2x^2 - 5x + 2; bisection midpoints hit neither root
        // necessarily, but separation must still hold
        let p = ratpoly(&[2, -5, 2]);
        let holders = isolate_positive_roots(&p);
        assert_eq!(holders.len(), 2);
        let pos: Vec<Rational> = holders.iter().map(|h| h.left_point()).collect();
        assert!(pos[0] < pos[1]);
    }

    #[test]
    fn squarefree_and_bound() {
        let p = &ratpoly(&[-1, 1]) * &ratpoly(&[-1, 1]);
        assert_eq!(squarefree_part(&p).degree(), Some(1));
        let b = cauchy_bound(&ratpoly(&[6, -7, 0, 1]));
        assert!(b >= rat(3, 1)); // largest |root| is 3
    }
}
