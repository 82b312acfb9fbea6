use std::collections::BTreeSet;

use super::{Elem, FiniteRing, Subset};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    fn absorbs_left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    fn absorbs_right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        }
    }
}

impl FiniteRing {
    /// Least ideal of the given sidedness containing `gens`.
    ///
    /// Worklist fixpoint: every new member is multiplied by all ring
    /// elements on the allowed sides and added to every existing member.
    /// Closure under addition in a finite group also gives negatives.
    pub fn ideal_closure(&self, gens: &[Elem], side: Side) -> Subset {
        let mut set = Subset::empty(self.order());
        let mut members: Vec<Elem> = Vec::new();
        let mut queue: Vec<Elem> = Vec::with_capacity(gens.len() + 1);
        queue.push(self.zero());
        queue.extend_from_slice(gens);
        while let Some(y) = queue.pop() {
            if !set.insert(y) {
                continue;
            }
            members.push(y);
            for r in self.elements() {
                if side.absorbs_left() {
                    let ry = self.mul(r, y);
                    if !set.contains(ry) {
                        queue.push(ry);
                    }
                }
                if side.absorbs_right() {
                    let yr = self.mul(y, r);
                    if !set.contains(yr) {
                        queue.push(yr);
                    }
                }
            }
            for &m in &members {
                let s = self.add(y, m);
                if !set.contains(s) {
                    queue.push(s);
                }
            }
        }
        set
    }

    /// Smallest ideal containing both arguments.
    pub fn ideal_sum(&self, a: &Subset, b: &Subset) -> Subset {
        let mut s = Subset::empty(self.order());
        for x in a.iter() {
            for y in b.iter() {
                s.insert(self.add(x, y));
            }
        }
        s
    }

    /// True if `s` contains zero and is closed under addition and the
    /// multiplications allowed by `side`.
    pub fn is_ideal(&self, s: &Subset, side: Side) -> bool {
        if !s.contains(self.zero()) {
            return false;
        }
        let members = s.to_vec();
        for &x in &members {
            for &y in &members {
                if !s.contains(self.add(x, y)) {
                    return false;
                }
            }
            for r in self.elements() {
                if side.absorbs_left() && !s.contains(self.mul(r, x)) {
                    return false;
                }
                if side.absorbs_right() && !s.contains(self.mul(x, r)) {
                    return false;
                }
            }
        }
        true
    }

    /// Every two-sided ideal, sorted by membership bitset value.
    ///
    /// Starts from the principal ideals and closes the collection under
    /// pairwise sums; every ideal is a finite sum of principal ones.
    pub fn all_two_sided_ideals(&self, cap: usize) -> Result<Vec<Subset>> {
        if self.order() > cap {
            return Err(Error::IdealCap {
                order: self.order(),
                cap,
            });
        }
        let mut found: BTreeSet<Subset> = BTreeSet::new();
        for a in self.elements() {
            found.insert(self.ideal_closure(&[a], Side::TwoSided));
        }
        let mut frontier: Vec<Subset> = found.iter().cloned().collect();
        while !frontier.is_empty() {
            let snapshot: Vec<Subset> = found.iter().cloned().collect();
            let mut next = Vec::new();
            for a in &frontier {
                for b in &snapshot {
                    if a.is_subset(b) || b.is_subset(a) {
                        continue;
                    }
                    let s = self.ideal_sum(a, b);
                    if !found.contains(&s) {
                        found.insert(s.clone());
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        Ok(found.into_iter().collect())
    }

    /// Whether the right ideal `e` meets every nonzero right ideal
    /// nontrivially.
    ///
    /// Every nonzero right ideal contains a nonzero principal one `bR`, so
    /// it is enough to test `e ∩ bR ≠ {0}` for each `b ≠ 0`.
    pub fn is_essential_right_ideal(&self, e: &Subset) -> Result<bool> {
        if !self.is_ideal(e, Side::Right) {
            return Err(Error::NotIdeal("right"));
        }
        Ok(self.meets_all_principal(e, Side::Right))
    }

    pub fn is_essential_left_ideal(&self, e: &Subset) -> Result<bool> {
        if !self.is_ideal(e, Side::Left) {
            return Err(Error::NotIdeal("left"));
        }
        Ok(self.meets_all_principal(e, Side::Left))
    }

    /// Essentiality test without the ideal check, for callers that already
    /// know `e` is a one-sided ideal.
    pub(crate) fn meets_all_principal(&self, e: &Subset, side: Side) -> bool {
        let z = self.zero();
        let principal = match side {
            Side::Left => self.principal_left_ideals(),
            _ => self.principal_right_ideals(),
        };
        principal.iter().all(|p| p.meets_outside(e, z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> FiniteRing {
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        FiniteRing::validate(&add, &mul, 0, 1, (0..n).map(|i| i.to_string()).collect()).unwrap()
    }

    fn set(r: &FiniteRing, xs: &[usize]) -> Subset {
        Subset::from_elems(r.order(), xs.iter().map(|&x| Elem::new(x)))
    }

    #[test]
    fn closure_of_six_in_z12() {
        let r = zn(12);
        assert_eq!(r.ideal_closure(&[Elem::new(6)], Side::TwoSided), set(&r, &[0, 6]));
    }

    #[test]
    fn closure_of_one_is_everything() {
        let r = zn(5);
        assert_eq!(r.ideal_closure(&[r.one()], Side::Right).len(), 5);
    }

    #[test]
    fn ideals_of_z4_and_z6() {
        let r = zn(4);
        assert_eq!(
            r.all_two_sided_ideals(64).unwrap(),
            vec![set(&r, &[0]), set(&r, &[0, 2]), set(&r, &[0, 1, 2, 3])]
        );
        let r = zn(6);
        let ideals = r.all_two_sided_ideals(64).unwrap();
        assert_eq!(ideals.len(), 4);
        assert!(ideals.contains(&set(&r, &[0, 3])));
        assert!(ideals.contains(&set(&r, &[0, 2, 4])));
    }

    #[test]
    fn ideal_cap_is_enforced() {
        let r = zn(12);
        assert!(matches!(r.all_two_sided_ideals(8), Err(Error::IdealCap { .. })));
    }

    #[test]
    fn essential_examples() {
        let r = zn(4);
        assert!(r.is_essential_right_ideal(&set(&r, &[0, 2])).unwrap());
        let r = zn(6);
        assert!(!r.is_essential_right_ideal(&set(&r, &[0, 3])).unwrap());
        assert!(r.is_essential_right_ideal(&Subset::full(6)).unwrap());
        assert!(matches!(
            r.is_essential_right_ideal(&set(&r, &[0, 1])),
            Err(Error::NotIdeal("right"))
        ));
    }
}
