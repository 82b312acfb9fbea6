//! Every property verdict against a direct transcription of its definition,
//! on all small corpus rings plus a few extras.

use centrum_core::harness::corpus_default;
use centrum_core::properties::{check_property, verify_witness, PropertyId};
use centrum_core::radicals::{prime_ideals_oracle, prime_radical};
use centrum_core::{build, build_str, Elem, FiniteRing, Limits};

fn small_rings() -> Vec<(String, FiniteRing)> {
    let mut out: Vec<(String, FiniteRing)> = corpus_default()
        .into_iter()
        .filter_map(|e| {
            let r = build(&e.expr).unwrap();
            (r.order() <= 16).then_some((e.name, r))
        })
        .collect();
    for src in ["Z 9", "Prod(Z 2, Z 2)", "PolyMod(Z 3, [2,0])", "GroupRing(Z 2, [2,2])", "Dorroh(UT(2, Z 2), 2)", "Prod(Z 2, UT(2, Z 2))"] {
        out.push((src.to_string(), build_str(src, &Limits::default()).unwrap()));
    }
    out
}

struct Naive<'a>(&'a FiniteRing);

impl Naive<'_> {
    fn all(&self) -> Vec<Elem> {
        self.0.elements().collect()
    }

    fn m(&self, a: Elem, b: Elem) -> Elem {
        self.0.mul(a, b)
    }

    fn zero(&self) -> Elem {
        self.0.zero()
    }

    fn nilpotent(&self, a: Elem) -> bool {
        let mut x = a;
        for _ in 0..self.0.order() {
            if x == self.zero() {
                return true;
            }
            x = self.m(x, a);
        }
        x == self.zero()
    }

    fn central(&self, a: Elem) -> bool {
        self.all().into_iter().all(|x| self.m(a, x) == self.m(x, a))
    }

    fn idempotent(&self, e: Elem) -> bool {
        self.m(e, e) == e
    }

    fn right_ann(&self, s: &[Elem]) -> Vec<Elem> {
        self.all().into_iter().filter(|&x| s.iter().all(|&a| self.m(a, x) == self.zero())).collect()
    }

    fn left_ann(&self, s: &[Elem]) -> Vec<Elem> {
        self.all().into_iter().filter(|&x| s.iter().all(|&a| self.m(x, a) == self.zero())).collect()
    }

    fn right_mult(&self, a: Elem) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.all().into_iter().map(|r| self.m(a, r)).collect();
        v.sort();
        v.dedup();
        v
    }

    fn left_mult(&self, a: Elem) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.all().into_iter().map(|r| self.m(r, a)).collect();
        v.sort();
        v.dedup();
        v
    }

    fn same(mut a: Vec<Elem>, mut b: Vec<Elem>) -> bool {
        a.sort();
        b.sort();
        a == b
    }

    /// Annihilator of `s` equals `eR` (right) or `Re` (left) for an idempotent `e`.
    fn generated_by_idempotent(&self, ann: Vec<Elem>, right: bool) -> bool {
        self.all().into_iter().filter(|&e| self.idempotent(e)).any(|e| {
            let g = if right { self.right_mult(e) } else { self.left_mult(e) };
            Self::same(ann.clone(), g)
        })
    }

    fn essential(&self, ideal: &[Elem], right: bool) -> bool {
        self.all().into_iter().filter(|&x| x != self.zero()).all(|x| {
            let g = if right { self.right_mult(x) } else { self.left_mult(x) };
            g.iter().any(|y| *y != self.zero() && ideal.contains(y))
        })
    }

    fn holds(&self, p: PropertyId) -> bool {
        use PropertyId::*;
        let r = self.0;
        let all = self.all();
        let z = self.zero();
        let pairs = || all.iter().flat_map(|&a| all.iter().map(move |&b| (a, b)));
        let sandwich = |a: Elem, b: Elem| all.iter().map(move |&x| r.mul(r.mul(a, x), b));
        match p {
            Commutative => pairs().all(|(a, b)| self.m(a, b) == self.m(b, a)),
            Reduced => all.iter().all(|&a| a == z || !self.nilpotent(a)),
            CentralReduced => all.iter().all(|&a| !self.nilpotent(a) || self.central(a)),
            Abelian => all.iter().all(|&e| !self.idempotent(e) || self.central(e)),
            UnitCentral => all
                .iter()
                .filter(|&&u| all.iter().any(|&v| self.m(u, v) == r.one() && self.m(v, u) == r.one()))
                .all(|&u| self.central(u)),
            DirectlyFinite => pairs().all(|(a, b)| self.m(a, b) != r.one() || self.m(b, a) == r.one()),
            NilClean => all.iter().all(|&a| {
                all.iter().any(|&e| self.idempotent(e) && self.nilpotent(r.sub(a, e)))
            }),
            Regular => all.iter().all(|&a| all.iter().any(|&b| self.m(self.m(a, b), a) == a)),
            StronglyRegular => all.iter().all(|&a| all.iter().any(|&b| self.m(self.m(a, a), b) == a)),
            Domain => pairs().all(|(a, b)| a == z || b == z || self.m(a, b) != z),
            Semicommutative => pairs().all(|(a, b)| self.m(a, b) != z || sandwich(a, b).all(|c| c == z)),
            CentralSemicommutative => {
                pairs().all(|(a, b)| self.m(a, b) != z || sandwich(a, b).all(|c| self.central(c)))
            }
            WeaklySemicommutative => {
                pairs().all(|(a, b)| self.m(a, b) != z || sandwich(a, b).all(|c| self.nilpotent(c)))
            }
            Prime => pairs().all(|(a, b)| a == z || b == z || sandwich(a, b).any(|c| c != z)),
            Semiprime => all.iter().all(|&a| a == z || sandwich(a, a).any(|c| c != z)),
            TwoPrimal => {
                let primes = prime_ideals_oracle(r).unwrap();
                all.iter().all(|&a| primes.iter().all(|p| p.contains(a)) == self.nilpotent(a))
            }
            RightPp => all.iter().all(|&a| self.generated_by_idempotent(self.right_ann(&[a]), true)),
            LeftPp => all.iter().all(|&a| self.generated_by_idempotent(self.left_ann(&[a]), false)),
            RightPqBaer => all.iter().all(|&a| {
                let ideal: Vec<Elem> = all.iter().flat_map(|&x| all.iter().map(move |&y| r.mul(r.mul(x, a), y))).collect();
                self.generated_by_idempotent(self.right_ann(&ideal), true)
            }),
            LeftPqBaer => all.iter().all(|&a| {
                let ideal: Vec<Elem> = all.iter().flat_map(|&x| all.iter().map(move |&y| r.mul(r.mul(x, a), y))).collect();
                self.generated_by_idempotent(self.left_ann(&ideal), false)
            }),
            RightNonsingular => all.iter().all(|&a| a == z || !self.essential(&self.right_ann(&[a]), true)),
            LeftNonsingular => all.iter().all(|&a| a == z || !self.essential(&self.left_ann(&[a]), false)),
        }
    }
}

#[test]
fn every_property_matches_its_definition() {
    for (name, r) in small_rings() {
        let naive = Naive(&r);
        for &p in PropertyId::ALL {
            let v = check_property(&r, p);
            assert_eq!(v.is_favorable(), naive.holds(p), "{name} {p}");
            if v.is_fail() {
                assert!(verify_witness(&r, p, &v), "{name} {p} witness {}", v.render_witness(&r));
            }
        }
    }
}

#[test]
fn prime_radical_is_intersection_of_primes() {
    for (name, r) in small_rings() {
        let p = prime_radical(&r);
        let primes = prime_ideals_oracle(&r).unwrap();
        assert!(!primes.is_empty(), "{name}");
        for a in r.elements() {
            assert_eq!(p.contains(a), primes.iter().all(|q| q.contains(a)), "{name} {}", r.name(a));
        }
    }
}

#[test]
fn prime_radical_inside_nilpotents() {
    // N(R) always contains P(R); equality is two_primal.
    for (name, r) in small_rings() {
        let p = prime_radical(&r);
        assert!(p.is_subset(r.nilpotent_set()), "{name}");
        assert_eq!(
            &p == r.nilpotent_set(),
            check_property(&r, PropertyId::TwoPrimal).is_favorable(),
            "{name}"
        );
    }
}
