//! Symmetric products as formal sums, labelled configurations, and the
//! set-level maps between them.

mod config;
mod maps;
mod multimap;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

pub use config::{ColoredConfig, Graded, LabelledConfig, PointId, BASEPOINT_LABEL};
pub use maps::{diag, phi, phi_component, phi_component_graded, psi, psi_component, scan, triangle};
pub use multimap::{color_forget_cover, cover_inverse, MultiMap, SetCover, SetSpan, SpanEval};
pub use verify::{verify_formal_suite, verify_psi_sigma_identity};
pub(crate) use verify::sample_configs;

/// Elements of a based set.
pub trait Pointed: Ord + Clone {
    fn is_basepoint(&self) -> bool;
}

/// An element of `SP(X)`: a finite multiset with positive multiplicities.
/// Basepoint terms are dropped on insertion.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalSum<T> {
    terms: BTreeMap<T, u64>,
}

impl<T> Default for FormalSum<T> {
    fn default() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<T: Pointed> FormalSum<T> {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton(x: T) -> Self {
        let mut s = Self::empty();
        s.insert(x, 1);
        s
    }

    pub fn insert(&mut self, x: T, multiplicity: u64) {
        if multiplicity == 0 || x.is_basepoint() {
            return;
        }
        *self.terms.entry(x).or_insert(0) += multiplicity;
    }

    /// Monoid sum: multiset union.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, &m) in &other.terms {
            out.insert(x.clone(), m);
        }
        out
    }

    /// `n · self`.
    pub fn times(&self, n: u64) -> Self {
        let mut out = Self::empty();
        for (x, &m) in &self.terms {
            out.insert(x.clone(), m * n);
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, x: &T) -> u64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, u64)> {
        self.terms.iter().map(|(x, &m)| (x, m))
    }

    /// `SP(h)`: apply a based map termwise.
    pub fn map<U: Pointed>(&self, h: impl Fn(&T) -> U) -> FormalSum<U> {
        let mut out = FormalSum::empty();
        for (x, &m) in &self.terms {
            out.insert(h(x), m);
        }
        out
    }

    /// Extend a multivalued function additively.
    pub fn flat_map<U: Pointed>(&self, f: impl Fn(&T) -> FormalSum<U>) -> FormalSum<U> {
        let mut out = FormalSum::empty();
        for (x, &m) in &self.terms {
            for (y, n) in f(x).iter() {
                out.insert(y.clone(), m * n);
            }
        }
        out
    }
}

impl<T: Pointed> FromIterator<T> for FormalSum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = Self::empty();
        for x in iter {
            s.insert(x, 1);
        }
        s
    }
}

impl<T: Ord + fmt::Debug> fmt::Debug for FormalSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Monoid sum of two formal sums.
pub fn sum_add<T: Pointed>(a: &FormalSum<T>, b: &FormalSum<T>) -> FormalSum<T> {
    a.add(b)
}

/// A point of the smash product `A ∧ B`; it is the basepoint as soon as
/// either side is.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Smash<A, B>(pub A, pub B);

impl<A: Pointed, B: Pointed> Pointed for Smash<A, B> {
    fn is_basepoint(&self) -> bool {
        self.0.is_basepoint() || self.1.is_basepoint()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
    enum P {
        Base,
        X,
        Y,
    }

    impl Pointed for P {
        fn is_basepoint(&self) -> bool {
            *self == P::Base
        }
    }

    #[test]
    fn monoid_laws() {
        let e = FormalSum::<P>::empty();
        assert_eq!(sum_add(&e, &e), e);
        let x1 = FormalSum::singleton(P::X);
        let x2 = FormalSum::singleton(P::X).times(2);
        assert_eq!(sum_add(&x1, &x2).multiplicity(&P::X), 3);
        let b = FormalSum::singleton(P::Base);
        assert!(b.is_empty());
        assert_eq!(sum_add(&b, &FormalSum::singleton(P::Y)), FormalSum::singleton(P::Y));
        assert_eq!(sum_add(&x1, &b), sum_add(&b, &x1));
    }

    #[test]
    fn smash_basepoint() {
        assert!(Smash(P::Base, P::X).is_basepoint());
        assert!(!Smash(P::Y, P::X).is_basepoint());
    }
}
