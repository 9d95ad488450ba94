//! The operation surface shared by both families of canonical factors.
//!
//! A canonical factor is a left divisor of the fundamental braid `D`. The
//! set `Q` of such factors is a finite lattice under left divisibility, and
//! every Garside computation in this crate is phrased in terms of the
//! operations below.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::error::Result;
use crate::words::{Generator, Presentation};

#[allow(clippy::len_without_is_empty)]
pub trait CanonicalFactor: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync + Sized {
    const PRESENTATION: Presentation;

    /// Largest `n` accepted by [`CanonicalFactor::enumerate`] by default.
    const ENUMERATION_CAP: usize;

    fn identity(n: usize) -> Self;

    fn delta(n: usize) -> Self;

    /// The factor of a single positive generator. `None` if the generator
    /// belongs to the other presentation or is out of range.
    fn from_generator(n: usize, g: Generator) -> Option<Self>;

    fn atoms(n: usize) -> Vec<Self>;

    fn strands(&self) -> usize;

    /// Letter length; the fundamental braid has length [`Self::delta_len`].
    fn len(&self) -> usize;

    fn delta_len(n: usize) -> usize;

    /// `self · other` if the product is again a canonical factor.
    fn product(&self, other: &Self) -> Option<Self>;

    /// The factor `x` with `self · x = other`, if `self` left-divides `other`.
    fn left_quotient(&self, other: &Self) -> Option<Self>;

    /// `x` with `self · x = D`.
    fn right_complement(&self) -> Self;

    /// `x` with `x · self = D`.
    fn complement(&self) -> Self;

    /// `τ^power`, where `τ(a) = D^{-1} a D`.
    fn tau(&self, power: i64) -> Self;

    /// Greatest common left divisor.
    fn meet(&self, other: &Self) -> Self;

    /// A positive word for this factor.
    fn generators(&self) -> Vec<Generator>;

    /// All of `Q`, in a fixed order.
    fn enumerate_with_cap(n: usize, cap: usize) -> Result<Vec<Self>>;

    fn parse_factor(text: &str, n: usize) -> Result<Self>;

    fn enumerate(n: usize) -> Result<Vec<Self>> {
        Self::enumerate_with_cap(n, Self::ENUMERATION_CAP)
    }

    fn is_identity(&self) -> bool {
        self.len() == 0
    }

    fn is_delta(&self) -> bool {
        self.len() == Self::delta_len(self.strands())
    }

    fn left_divides(&self, other: &Self) -> bool {
        self.left_quotient(other).is_some()
    }
}

/// The local greedy step on a pair of factors.
///
/// Returns `(h, r)` with `h · r = a · b`, `a ≤ h`, and `h` the maximal
/// canonical factor dividing the product on the left.
pub fn left_meet_head<F: CanonicalFactor>(a: &F, b: &F) -> (F, F) {
    let absorbed = a.right_complement().meet(b);
    if absorbed.is_identity() {
        return (a.clone(), b.clone());
    }
    let head = a.product(&absorbed).expect("a·(∂a ∧ b) is a canonical factor");
    let rest = absorbed.left_quotient(b).expect("meet divides its argument");
    (head, rest)
}

/// `a · b` is a left-greedy decomposition.
pub fn is_left_weighted<F: CanonicalFactor>(a: &F, b: &F) -> bool {
    a.right_complement().meet(b).is_identity()
}
