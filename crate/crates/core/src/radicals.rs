//! Nilpotent set, prime radical and singular ideals.

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing, Side, Subset};

/// Largest order accepted by [`prime_ideals_oracle`].
pub const ORACLE_MAX_ORDER: usize = 16;

/// N(R).
pub fn nilpotent_set(ring: &FiniteRing) -> Subset {
    ring.nilpotent_set().clone()
}

/// Elements `a` with `a·x·a ∈ ideal` for every `x`.
///
/// `x ↦ a·x·a` is additive, so it is enough to test `x` over the additive
/// generators.
fn sandwiched_into(ring: &FiniteRing, ideal: &Subset) -> Vec<Elem> {
    ring.elements()
        .filter(|&a| {
            ring.additive_generators()
                .iter()
                .all(|&g| ideal.contains(ring.mul(ring.mul(a, g), a)))
        })
        .collect()
}

/// The Baer lower radical P(R), as the limit of
/// `I_{t+1} = ⟨a : aRa ⊆ I_t⟩` starting from `{0}`.
pub fn prime_radical(ring: &FiniteRing) -> Subset {
    let mut current = Subset::from_elems(ring.order(), [ring.zero()]);
    loop {
        let next = ring.ideal_closure(&sandwiched_into(ring, &current), Side::TwoSided);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Proper two-sided ideals `I` with `aRb ⊆ I ⇒ a ∈ I or b ∈ I`, by brute
/// force over the ideal lattice.
pub fn prime_ideals_oracle(ring: &FiniteRing) -> Result<Vec<Subset>> {
    if ring.order() > ORACLE_MAX_ORDER {
        return Err(Error::OrderCap {
            order: ring.order(),
            cap: ORACLE_MAX_ORDER,
        });
    }
    let ideals = ring.all_two_sided_ideals(ORACLE_MAX_ORDER)?;
    Ok(ideals
        .into_iter()
        .filter(|i| i.len() < ring.order())
        .filter(|i| {
            ring.elements().filter(|&a| !i.contains(a)).all(|a| {
                ring.elements()
                    .filter(|&b| !i.contains(b))
                    .all(|b| ring.elements().any(|r| !i.contains(ring.mul(ring.mul(a, r), b))))
            })
        })
        .collect())
}

/// Intersection of the prime ideals found by [`prime_ideals_oracle`].
pub fn prime_radical_by_intersection(ring: &FiniteRing) -> Result<Subset> {
    let mut acc = Subset::full(ring.order());
    for p in prime_ideals_oracle(ring)? {
        acc.intersect_with(&p);
    }
    Ok(acc)
}

/// Elements whose annihilator on `side` is essential on that side.
pub fn singular_ideal(ring: &FiniteRing, side: Side) -> Subset {
    Subset::from_elems(
        ring.order(),
        ring.elements().filter(|&a| match side {
            Side::Left => ring.meets_all_principal(&ring.left_annihilator(a), Side::Left),
            _ => ring.meets_all_principal(&ring.right_annihilator(a), Side::Right),
        }),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalReport {
    pub nilpotents: Subset,
    pub prime_radical: Subset,
    pub two_primal: bool,
    pub singular_right: Subset,
    pub singular_left: Subset,
}

impl RadicalReport {
    pub fn compute(ring: &FiniteRing) -> Self {
        let nilpotents = nilpotent_set(ring);
        let prime_radical = prime_radical(ring);
        RadicalReport {
            two_primal: nilpotents == prime_radical,
            nilpotents,
            prime_radical,
            singular_right: singular_ideal(ring, Side::Right),
            singular_left: singular_ideal(ring, Side::Left),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_str;
    use crate::limits::Limits;

    fn ring(src: &str) -> FiniteRing {
        build_str(src, &Limits::default()).unwrap()
    }

    fn names(r: &FiniteRing, s: &Subset) -> String {
        r.format_subset(s)
    }

    #[test]
    fn nilpotent_sets() {
        let r = ring("Z 8");
        assert_eq!(names(&r, &nilpotent_set(&r)), "{0, 2, 4, 6}");
        let r = ring("Z 6");
        assert_eq!(names(&r, &nilpotent_set(&r)), "{0}");
        let r = ring("UT(2, Z 2)");
        assert_eq!(names(&r, &nilpotent_set(&r)), "{[[0,0],[0,0]], [[0,1],[0,0]]}");
    }

    #[test]
    fn prime_radicals() {
        let r = ring("Z 12");
        assert_eq!(names(&r, &prime_radical(&r)), "{0, 6}");
        let r = ring("UT(2, Z 2)");
        assert_eq!(prime_radical(&r), nilpotent_set(&r));
        let r = ring("Mat(2, Z 2)");
        assert_eq!(prime_radical(&r).len(), 1);
    }

    #[test]
    fn prime_ideal_oracle() {
        let r = ring("Z 12");
        let primes: Vec<String> = prime_ideals_oracle(&r).unwrap().iter().map(|p| names(&r, p)).collect();
        assert_eq!(primes.len(), 2);
        assert!(primes.contains(&"{0, 2, 4, 6, 8, 10}".to_string()));
        assert!(primes.contains(&"{0, 3, 6, 9}".to_string()));
        let r = ring("Z 4");
        assert_eq!(
            prime_ideals_oracle(&r).unwrap().iter().map(|p| names(&r, p)).collect::<Vec<_>>(),
            ["{0, 2}"]
        );
        let r = ring("Mat(2, Z 2)");
        assert_eq!(prime_ideals_oracle(&r).unwrap().len(), 1);
        assert!(matches!(prime_ideals_oracle(&ring("Z 17")), Err(Error::OrderCap { .. })));
    }

    #[test]
    fn singular_ideals() {
        let r = ring("Z 4");
        assert_eq!(names(&r, &singular_ideal(&r, Side::Right)), "{0, 2}");
        assert_eq!(singular_ideal(&ring("Mat(2, Z 2)"), Side::Right).len(), 1);
        assert_eq!(singular_ideal(&ring("Z 6"), Side::Right).len(), 1);
    }

    #[test]
    fn report_is_two_primal_for_z8() {
        let rep = RadicalReport::compute(&ring("Z 8"));
        assert!(rep.two_primal);
        assert_eq!(rep.singular_right, rep.singular_left);
    }
}
