use std::collections::BTreeMap;
use std::sync::Arc;

use super::config::{ColoredConfig, LabelledConfig};
use super::{FormalSum, Pointed, Smash};
use crate::error::{Error, Result};

/// Evaluation of a span `X ← X̃ → Y`: sum over the fiber, then map.
pub trait SpanEval<A, B>: Send + Sync {
    fn evaluate(&self, a: &A) -> FormalSum<B>;
}

type Func<A, B> = Arc<dyn Fn(&A) -> B + Send + Sync>;

/// A span with a finite-fiber left leg and a single-valued right leg.
pub struct SetSpan<A, C, B> {
    pub fiber: Func<A, Vec<C>>,
    pub right: Func<C, B>,
}

impl<A, C, B: Pointed> SpanEval<A, B> for SetSpan<A, C, B> {
    fn evaluate(&self, a: &A) -> FormalSum<B> {
        (self.fiber)(a).iter().map(|c| (self.right)(c)).collect()
    }
}

/// A based multivalued function `A → SP(B)` on a finite domain.
pub struct MultiMap<A, B> {
    domain: Vec<A>,
    func: Func<A, FormalSum<B>>,
    span: Option<Arc<dyn SpanEval<A, B>>>,
}

impl<A, B> Clone for MultiMap<A, B>
where
    A: Clone,
{
    fn clone(&self) -> Self {
        MultiMap {
            domain: self.domain.clone(),
            func: self.func.clone(),
            span: self.span.clone(),
        }
    }
}

impl<A: Pointed + Send + Sync + 'static, B: Pointed + 'static> MultiMap<A, B> {
    pub fn new(domain: Vec<A>, func: impl Fn(&A) -> FormalSum<B> + Send + Sync + 'static) -> Self {
        MultiMap {
            domain,
            func: Arc::new(func),
            span: None,
        }
    }

    pub fn with_span(mut self, span: impl SpanEval<A, B> + 'static) -> Self {
        self.span = Some(Arc::new(span));
        self
    }

    pub fn domain(&self) -> &[A] {
        &self.domain
    }

    /// The value on `a`; basepoints go to the empty sum.
    pub fn apply(&self, a: &A) -> FormalSum<B> {
        if a.is_basepoint() {
            return FormalSum::empty();
        }
        (self.func)(a)
    }

    pub fn span_value(&self, a: &A) -> Option<FormalSum<B>> {
        self.span.as_ref().map(|s| {
            if a.is_basepoint() {
                FormalSum::empty()
            } else {
                s.evaluate(a)
            }
        })
    }

    /// First domain element where the span presentation disagrees with the
    /// function.
    pub fn span_mismatch(&self) -> Option<&A> {
        let span = self.span.as_ref()?;
        self.domain
            .iter()
            .find(|a| !a.is_basepoint() && span.evaluate(a) != (self.func)(a))
    }

    /// `f △ g` on the product of the domains.
    pub fn triangle<C, D>(&self, other: &MultiMap<C, D>) -> MultiMap<Smash<A, C>, Smash<B, D>>
    where
        C: Pointed + Send + Sync + 'static,
        D: Pointed + 'static,
    {
        let mut domain = Vec::with_capacity(self.domain.len() * other.domain.len());
        for a in &self.domain {
            for c in &other.domain {
                domain.push(Smash(a.clone(), c.clone()));
            }
        }
        let (f, g) = (self.func.clone(), other.func.clone());
        MultiMap::new(domain, move |p: &Smash<A, C>| {
            if p.0.is_basepoint() || p.1.is_basepoint() {
                return FormalSum::empty();
            }
            super::triangle(&f(&p.0), &g(&p.1))
        })
    }
}

/// A finite covering presentation: every total element projects to a base
/// element.
pub struct SetCover<C, A> {
    pub total: Vec<C>,
    pub project: Func<C, A>,
}

impl<C, A: Pointed> SetCover<C, A> {
    pub fn new(total: Vec<C>, project: impl Fn(&C) -> A + Send + Sync + 'static) -> Self {
        SetCover {
            total,
            project: Arc::new(project),
        }
    }

    /// `SP(p)` on a formal sum.
    pub fn forward(&self, s: &FormalSum<C>) -> FormalSum<A>
    where
        C: Pointed,
    {
        s.map(|c| (self.project)(c))
    }
}

/// Invert a finite cover: `x ↦ Σ_{x̃ ∈ p⁻¹(x)} x̃`. Every non-basepoint base
/// element in `base` must have the same number of preimages.
pub fn cover_inverse<C, A>(p: &SetCover<C, A>, base: Vec<A>) -> Result<(MultiMap<A, C>, usize)>
where
    C: Pointed + Send + Sync + 'static,
    A: Pointed + Send + Sync + 'static,
{
    let mut fibers: BTreeMap<A, Vec<C>> = base
        .iter()
        .filter(|a| !a.is_basepoint())
        .map(|a| (a.clone(), Vec::new()))
        .collect();
    for c in &p.total {
        let a = (p.project)(c);
        if a.is_basepoint() {
            continue;
        }
        match fibers.get_mut(&a) {
            Some(f) => f.push(c.clone()),
            None => return Err(Error::MalformedCover("a total element projects outside the base".into())),
        }
    }
    let degree = fibers.values().next().map_or(0, Vec::len);
    if let Some((i, f)) = fibers.values().enumerate().find(|(_, f)| f.len() != degree) {
        return Err(Error::MalformedCover(format!(
            "fiber sizes differ: base element {i} has {} preimages, expected {degree}",
            f.len()
        )));
    }
    let fibers = Arc::new(fibers);
    let table = fibers.clone();
    let map = MultiMap::new(base, move |a: &A| {
        table.get(a).map(|f| f.iter().cloned().collect()).unwrap_or_default()
    })
    .with_span(SetSpan {
        fiber: Arc::new(move |a: &A| fibers.get(a).cloned().unwrap_or_default()),
        right: Arc::new(|c: &C| c.clone()),
    });
    Ok((map, degree))
}

/// The color-forgetting cover over the given configurations, with `n` blue
/// points in each coloring.
pub fn color_forget_cover(configs: &[LabelledConfig], n: usize) -> SetCover<ColoredConfig, LabelledConfig> {
    let total = configs.iter().flat_map(|x| ColoredConfig::colorings(x, n)).collect();
    SetCover::new(total, ColoredConfig::forget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
    struct V(u32);

    impl Pointed for V {
        fn is_basepoint(&self) -> bool {
            self.0 == 0
        }
    }

    #[test]
    fn identity_and_double_cover() {
        let base = vec![V(1), V(2)];
        let id = SetCover::new(base.clone(), |v: &V| v.clone());
        let (inv, deg) = cover_inverse(&id, base.clone()).unwrap();
        assert_eq!(deg, 1);
        assert_eq!(inv.apply(&V(1)), FormalSum::singleton(V(1)));

        let total = vec![V(11), V(12), V(21), V(22)];
        let double = SetCover::new(total, |v: &V| V(v.0 / 10));
        let (inv, deg) = cover_inverse(&double, base.clone()).unwrap();
        assert_eq!(deg, 2);
        assert_eq!(inv.apply(&V(1)), [V(11), V(12)].into_iter().collect());
        assert!(inv.span_mismatch().is_none());
        for b in &base {
            assert_eq!(double.forward(&inv.apply(b)), FormalSum::singleton(b.clone()).times(2));
        }
    }

    #[test]
    fn color_forgetting_on_two_points() {
        let xi = LabelledConfig::new([1, 2]);
        let cover = color_forget_cover(std::slice::from_ref(&xi), 1);
        let (inv, deg) = cover_inverse(&cover, vec![xi.clone()]).unwrap();
        assert_eq!(deg, 2);
        let expected: FormalSum<_> = [
            ColoredConfig { blue: LabelledConfig::new([1]), red: LabelledConfig::new([2]) },
            ColoredConfig { blue: LabelledConfig::new([2]), red: LabelledConfig::new([1]) },
        ]
        .into_iter()
        .collect();
        assert_eq!(inv.apply(&xi), expected);
    }

    #[test]
    fn uneven_fibers_are_rejected() {
        let cover = SetCover::new(vec![V(11), V(12), V(21)], |v: &V| V(v.0 / 10));
        let err = cover_inverse(&cover, vec![V(1), V(2)]).err().unwrap();
        assert!(matches!(err, Error::MalformedCover(_)));
    }
}
