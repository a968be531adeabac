use super::config::{Graded, LabelledConfig};
use super::{FormalSum, Pointed, Smash};
use crate::error::{Error, Result};

pub type Pair = Smash<LabelledConfig, LabelledConfig>;

fn full_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

/// The scanning map `ξ_I ↦ Σ_{J ⊆ I} ξ_J`.
pub fn scan(xi: &LabelledConfig) -> FormalSum<LabelledConfig> {
    if xi.is_basepoint() {
        return FormalSum::empty();
    }
    (0..=full_mask(xi.len())).map(|j| xi.restrict_mask(j)).collect()
}

/// The diagonal `ξ ↦ (ξ, ξ)`.
pub fn diag(xi: &LabelledConfig) -> Pair {
    Smash(xi.clone(), xi.clone())
}

/// `ξ_I ↦ Σ_{I = A ⊔ B} (ξ_A, ξ_B)`.
pub fn phi(xi: &LabelledConfig) -> FormalSum<Pair> {
    if xi.is_basepoint() {
        return FormalSum::empty();
    }
    let full = full_mask(xi.len());
    (0..=full)
        .map(|a| Smash(xi.restrict_mask(a), xi.restrict_mask(full & !a)))
        .collect()
}

/// `ξ_I ↦ Σ_{I = A ∪ B} (ξ_A, ξ_B)`.
pub fn psi(xi: &LabelledConfig) -> FormalSum<Pair> {
    if xi.is_basepoint() {
        return FormalSum::empty();
    }
    let full = full_mask(xi.len());
    let mut out = FormalSum::empty();
    for a in 0..=full {
        for b in 0..=full {
            if a | b == full {
                out.insert(Smash(xi.restrict_mask(a), xi.restrict_mask(b)), 1);
            }
        }
    }
    out
}

fn component<T: Pointed>(
    xi: &LabelledConfig,
    p: usize,
    q: usize,
    r: usize,
    disjoint: bool,
    wrap: impl Fn(LabelledConfig) -> T,
) -> Result<FormalSum<Smash<T, T>>> {
    if xi.len() != p {
        return Err(Error::Input(format!(
            "component ({p},{q},{r}) applied to a configuration of size {}",
            xi.len()
        )));
    }
    let mut out = FormalSum::empty();
    if xi.is_degenerate() || (disjoint && p != q + r) {
        return Ok(out);
    }
    let full = full_mask(p);
    for a in 0..=full {
        if a.count_ones() as usize != q {
            continue;
        }
        if disjoint {
            out.insert(Smash(wrap(xi.restrict_mask(a)), wrap(xi.restrict_mask(full & !a))), 1);
            continue;
        }
        for b in 0..=full {
            if b.count_ones() as usize == r && a | b == full {
                out.insert(Smash(wrap(xi.restrict_mask(a)), wrap(xi.restrict_mask(b))), 1);
            }
        }
    }
    Ok(out)
}

/// The `(p,q,r)` component of `Φ`: pairs `(ξ_A, ξ_B)` with `A ⊔ B = I`,
/// `|A| = q`, `|B| = r`.
pub fn phi_component(p: usize, q: usize, r: usize, xi: &LabelledConfig) -> Result<FormalSum<Pair>> {
    component(xi, p, q, r, true, |x| x)
}

/// The `(p,q,r)` component of `Ψ`: as [`phi_component`] with `A ∪ B = I`.
pub fn psi_component(p: usize, q: usize, r: usize, xi: &LabelledConfig) -> Result<FormalSum<Pair>> {
    component(xi, p, q, r, false, |x| x)
}

/// The `(p,q,r)` component of `Φ` as a map `D_p → SP(D_q ∧ D_r)`, where an
/// empty side is a genuine point rather than the basepoint.
pub fn phi_component_graded(
    p: usize,
    q: usize,
    r: usize,
    xi: &LabelledConfig,
) -> Result<FormalSum<Smash<Graded, Graded>>> {
    component(xi, p, q, r, true, Graded)
}

/// `(f △ g)(a, c) = Σ (a_i, c_j)` given the values `f(a)` and `g(c)`.
pub fn triangle<A: Pointed, B: Pointed>(fa: &FormalSum<A>, gc: &FormalSum<B>) -> FormalSum<Smash<A, B>> {
    let mut out = FormalSum::empty();
    for (x, m) in fa.iter() {
        for (y, n) in gc.iter() {
            out.insert(Smash(x.clone(), y.clone()), m * n);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(ids: &[u32]) -> LabelledConfig {
        LabelledConfig::new(ids.iter().copied())
    }

    #[test]
    fn scan_examples() {
        assert!(scan(&xi(&[])).is_empty());
        assert_eq!(scan(&xi(&[1])), FormalSum::singleton(xi(&[1])));
        let s = scan(&xi(&[1, 2]));
        let expected: FormalSum<_> = [xi(&[1]), xi(&[2]), xi(&[1, 2])].into_iter().collect();
        assert_eq!(s, expected);
    }

    #[test]
    fn diag_examples() {
        assert!(diag(&xi(&[])).is_basepoint());
        assert_eq!(diag(&xi(&[1, 2])), Smash(xi(&[1, 2]), xi(&[1, 2])));
    }

    #[test]
    fn phi_and_psi_examples() {
        assert!(phi(&xi(&[1])).is_empty());
        let expected: FormalSum<_> =
            [Smash(xi(&[1]), xi(&[2])), Smash(xi(&[2]), xi(&[1]))].into_iter().collect();
        assert_eq!(phi(&xi(&[1, 2])), expected);
        assert_eq!(phi(&xi(&[1, 2, 3])).len(), 6);
        assert_eq!(psi(&xi(&[1])), FormalSum::singleton(Smash(xi(&[1]), xi(&[1]))));
        assert_eq!(psi(&xi(&[1, 2])).len(), 7);
        assert!(psi(&xi(&[])).is_empty());
    }

    #[test]
    fn component_examples() {
        let x12 = xi(&[1, 2]);
        assert_eq!(phi_component(2, 1, 1, &x12).unwrap(), phi(&x12));
        assert!(phi_component(3, 1, 1, &xi(&[1, 2, 3])).unwrap().is_empty());
        assert_eq!(phi_component(4, 2, 2, &xi(&[1, 2, 3, 4])).unwrap().len(), 6);
        assert_eq!(psi_component(2, 1, 1, &x12).unwrap(), phi_component(2, 1, 1, &x12).unwrap());
        assert!(psi_component(3, 1, 1, &xi(&[1, 2, 3])).unwrap().is_empty());
        let expected: FormalSum<_> =
            [Smash(x12.clone(), xi(&[1])), Smash(x12.clone(), xi(&[2]))].into_iter().collect();
        assert_eq!(psi_component(2, 2, 1, &x12).unwrap(), expected);
        assert!(phi_component(3, 1, 1, &x12).is_err());
    }

    #[test]
    fn triangle_examples() {
        let x = xi(&[1]);
        let (y, z) = (xi(&[2]), xi(&[3]));
        assert!(triangle(&FormalSum::<LabelledConfig>::empty(), &FormalSum::singleton(y.clone())).is_empty());
        assert_eq!(
            triangle(&FormalSum::singleton(x.clone()), &FormalSum::singleton(y.clone())),
            FormalSum::singleton(Smash(x.clone(), y.clone()))
        );
        let fa = FormalSum::singleton(x.clone()).times(2);
        let gc: FormalSum<_> = [y.clone(), z.clone()].into_iter().collect();
        let t = triangle(&fa, &gc);
        assert_eq!(t.multiplicity(&Smash(x.clone(), y)), 2);
        assert_eq!(t.multiplicity(&Smash(x, z)), 2);
        assert_eq!(t.len(), 2);
    }
}
