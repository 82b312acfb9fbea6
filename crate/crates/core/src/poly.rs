//! Polynomials over a finite ring and the bounded Armendariz-family checks.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};
use crate::verdict::{Verdict, WitnessItem, WitnessValue};

/// Convolution product; coefficient `k` of the result is `Σ_{i+j=k} a_i b_j`.
pub fn poly_mul(ring: &FiniteRing, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = ring.add(out[i + j], ring.mul(a, b));
        }
    }
    out
}

/// `a0 + a1*x + a2*x^2`, every coefficient printed by name. The variable
/// is the first of x, y, z, ... not occurring in any element name.
pub fn format_poly(ring: &FiniteRing, f: &[Elem]) -> String {
    let var = ["x", "y", "z", "t", "u", "v", "w"]
        .into_iter()
        .find(|v| !ring.names().iter().any(|n| n.contains(v)))
        .unwrap_or("X");
    f.iter()
        .enumerate()
        .map(|(i, &a)| {
            let c = ring.name(a);
            let c = if c.contains(['+', '*', ' ']) { format!("({c})") } else { c.to_string() };
            match i {
                0 => c,
                1 => format!("{c}*{var}"),
                _ => format!("{c}*{var}^{i}"),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyPropertyId {
    Armendariz,
    CentralArmendariz,
    WeakArmendariz,
    NilArmendariz,
    LinearArmendariz,
    CentralLinearArmendariz,
}

impl PolyPropertyId {
    pub const ALL: [PolyPropertyId; 6] = [
        PolyPropertyId::Armendariz,
        PolyPropertyId::CentralArmendariz,
        PolyPropertyId::WeakArmendariz,
        PolyPropertyId::NilArmendariz,
        PolyPropertyId::LinearArmendariz,
        PolyPropertyId::CentralLinearArmendariz,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PolyPropertyId::Armendariz => "armendariz",
            PolyPropertyId::CentralArmendariz => "central_armendariz",
            PolyPropertyId::WeakArmendariz => "weak_armendariz",
            PolyPropertyId::NilArmendariz => "nil_armendariz",
            PolyPropertyId::LinearArmendariz => "linear_armendariz",
            PolyPropertyId::CentralLinearArmendariz => "central_linear_armendariz",
        }
    }

    pub fn is_linear(self) -> bool {
        matches!(
            self,
            PolyPropertyId::LinearArmendariz | PolyPropertyId::CentralLinearArmendariz
        )
    }

    pub fn is_central_variant(self) -> bool {
        matches!(
            self,
            PolyPropertyId::CentralArmendariz | PolyPropertyId::CentralLinearArmendariz
        )
    }

    /// Whether a coefficient product satisfies the conclusion.
    pub fn conclusion(self, ring: &FiniteRing, ab: Elem) -> bool {
        match self {
            PolyPropertyId::Armendariz | PolyPropertyId::LinearArmendariz => ab == ring.zero(),
            PolyPropertyId::CentralArmendariz | PolyPropertyId::CentralLinearArmendariz => {
                ring.is_central(ab)
            }
            PolyPropertyId::WeakArmendariz | PolyPropertyId::NilArmendariz => ring.is_nilpotent(ab),
        }
    }

    /// Whether the product `fg` satisfies the hypothesis.
    pub fn hypothesis(self, ring: &FiniteRing, fg: &[Elem]) -> bool {
        match self {
            PolyPropertyId::NilArmendariz => fg.iter().all(|&c| ring.is_nilpotent(c)),
            _ => fg.iter().all(|&c| c == ring.zero()),
        }
    }
}

impl fmt::Display for PolyPropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PolyPropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolyPropertyId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

/// For each `a`, the elements `x` with `a·x = t`, grouped by `t`.
struct LeftFibers {
    n: usize,
    offsets: Vec<u32>,
    values: Vec<Elem>,
}

impl LeftFibers {
    fn new(ring: &FiniteRing) -> Self {
        let n = ring.order();
        let mut offsets = vec![0u32; n * n + 1];
        for a in ring.elements() {
            for x in ring.elements() {
                offsets[a.index() * n + ring.mul(a, x).index() + 1] += 1;
            }
        }
        for i in 1..offsets.len() {
            offsets[i] += offsets[i - 1];
        }
        let mut fill = offsets.clone();
        let mut values = vec![ring.zero(); n * n];
        for a in ring.elements() {
            for x in ring.elements() {
                let slot = &mut fill[a.index() * n + ring.mul(a, x).index()];
                values[*slot as usize] = x;
                *slot += 1;
            }
        }
        LeftFibers { n, offsets, values }
    }

    /// Solutions of `a·x = t`, ascending.
    fn get(&self, a: Elem, t: Elem) -> &[Elem] {
        let k = a.index() * self.n + t.index();
        &self.values[self.offsets[k] as usize..self.offsets[k + 1] as usize]
    }
}

fn decode_poly(mut index: u64, n: usize, len: usize) -> Vec<Elem> {
    (0..len)
        .map(|_| {
            let d = (index % n as u64) as usize;
            index /= n as u64;
            Elem::new(d)
        })
        .collect()
}

fn search_size(n: usize, len: usize) -> u128 {
    (n as u128).saturating_pow(len as u32)
}

struct Search<'a> {
    ring: &'a FiniteRing,
    prop: PolyPropertyId,
    fibers: Option<LeftFibers>,
    len: usize,
    budget: u64,
    steps: AtomicU64,
}

type Found = (Vec<Elem>, Vec<Elem>, usize, usize);

enum Outcome {
    Found(Found),
    OverBudget,
}

impl Search<'_> {
    /// First `(i, j)` with `a_i b_j` violating the conclusion.
    fn violation(&self, f: &[Elem], g: &[Elem]) -> Option<(usize, usize)> {
        for (i, &a) in f.iter().enumerate() {
            for (j, &b) in g.iter().enumerate() {
                if !self.prop.conclusion(self.ring, self.ring.mul(a, b)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Coefficient `k` of `fg` from the first `min(k+1, len)` entries of `g`.
    fn coefficient(&self, f: &[Elem], g: &[Elem], k: usize) -> Elem {
        let r = self.ring;
        let mut acc = r.zero();
        for (i, &a) in f.iter().enumerate().take(k + 1) {
            if let Some(&b) = g.get(k - i) {
                acc = r.add(acc, r.mul(a, b));
            }
        }
        acc
    }

    /// Depth-first search for `g` completing the hypothesis, one
    /// coefficient at a time. `m` is the lowest nonzero index of `f`, so
    /// `b_k` fixes coefficient `m + k` of the product.
    fn extend(&self, f: &[Elem], m: usize, g: &mut Vec<Elem>, steps: &mut u64) -> Option<Outcome> {
        *steps += 1;
        if *steps > self.budget {
            return Some(Outcome::OverBudget);
        }
        let r = self.ring;
        let k = g.len();
        if k == self.len {
            // Coefficients beyond m + len - 1 involve only chosen entries.
            let top = 2 * self.len - 1;
            let ok = (m + self.len..top).all(|c| {
                let v = self.coefficient(f, g, c);
                match self.prop {
                    PolyPropertyId::NilArmendariz => r.is_nilpotent(v),
                    _ => v == r.zero(),
                }
            });
            if !ok {
                return None;
            }
            return self
                .violation(f, g)
                .map(|(i, j)| Outcome::Found((f.to_vec(), g.clone(), i, j)));
        }
        // Partial sum of coefficient m + k without the a_m b_k term.
        let mut rest = r.zero();
        for i in m + 1..self.len.min(m + k + 1) {
            rest = r.add(rest, r.mul(f[i], g[m + k - i]));
        }
        match &self.fibers {
            Some(fibers) => {
                for &b in fibers.get(f[m], r.neg(rest)) {
                    g.push(b);
                    let hit = self.extend(f, m, g, steps);
                    g.pop();
                    if hit.is_some() {
                        return hit;
                    }
                }
            }
            None => {
                for b in r.elements() {
                    if !r.is_nilpotent(r.add(rest, r.mul(f[m], b))) {
                        continue;
                    }
                    g.push(b);
                    let hit = self.extend(f, m, g, steps);
                    g.pop();
                    if hit.is_some() {
                        return hit;
                    }
                }
            }
        }
        None
    }

    fn run_for(&self, index: u64) -> Option<Outcome> {
        let f = decode_poly(index, self.ring.order(), self.len);
        let m = f.iter().position(|&a| a != self.ring.zero())?;
        let mut steps = 0u64;
        let mut g = Vec::with_capacity(self.len);
        let out = self.extend(&f, m, &mut g, &mut steps);
        let total = self.steps.fetch_add(steps, Ordering::Relaxed) + steps;
        if total > self.budget {
            return Some(Outcome::OverBudget);
        }
        out
    }
}

/// Searches polynomials of degree at most `d` for a violation of `prop`.
///
/// Linear variants always search at degree 1. `budget` bounds the number
/// of search nodes.
pub fn check_poly_property(
    ring: &FiniteRing,
    prop: PolyPropertyId,
    d: usize,
    budget: u64,
) -> Result<Verdict> {
    let d = if prop.is_linear() { 1 } else { d };
    if d == 0 {
        return Err(Error::Hypothesis("degree bound must be at least 1".into()));
    }
    if prop.is_central_variant() && ring.is_commutative() {
        return Ok(Verdict::holds());
    }
    let n = ring.order();
    let len = d + 1;
    let f_space = search_size(n, len);
    let attempted = match prop {
        PolyPropertyId::NilArmendariz => f_space.saturating_mul(f_space),
        _ => f_space,
    };
    if attempted > budget as u128 {
        return Err(Error::Budget { attempted, budget });
    }
    let search = Search {
        ring,
        prop,
        fibers: match prop {
            PolyPropertyId::NilArmendariz => None,
            _ => Some(LeftFibers::new(ring)),
        },
        len,
        budget,
        steps: AtomicU64::new(0),
    };
    let hit = (1..f_space as u64)
        .into_par_iter()
        .find_map_first(|i| search.run_for(i));
    match hit {
        None => Ok(if prop.is_linear() {
            // Degree 1 is the whole quantifier for the linear variants.
            Verdict::holds()
        } else {
            Verdict::no_counterexample_up_to(d)
        }),
        Some(Outcome::OverBudget) => Err(Error::Budget {
            attempted: search.steps.load(Ordering::Relaxed) as u128,
            budget,
        }),
        Some(Outcome::Found((f, g, i, j))) => Ok(Verdict::fails_with(vec![
            WitnessItem {
                role: "f",
                value: WitnessValue::Poly(f),
            },
            WitnessItem {
                role: "g",
                value: WitnessValue::Poly(g),
            },
            WitnessItem {
                role: "i",
                value: WitnessValue::Index(i),
            },
            WitnessItem {
                role: "j",
                value: WitnessValue::Index(j),
            },
        ])),
    }
}

/// Re-checks a failing verdict of [`check_poly_property`] from scratch.
pub fn verify_poly_witness(ring: &FiniteRing, prop: PolyPropertyId, v: &Verdict) -> bool {
    let (Some(f), Some(g), Some(i), Some(j)) = (v.poly("f"), v.poly("g"), v.index("i"), v.index("j")) else {
        return false;
    };
    if i >= f.len() || j >= g.len() {
        return false;
    }
    let fg = poly_mul(ring, f, g);
    prop.hypothesis(ring, &fg) && !prop.conclusion(ring, ring.mul(f[i], g[j]))
}

fn is_zero_poly(ring: &FiniteRing, f: &[Elem]) -> bool {
    f.iter().all(|&c| c == ring.zero())
}

/// Whether `f^k = 0` in `R[x]` for some `k <= cap`.
pub fn poly_is_nilpotent(ring: &FiniteRing, f: &[Elem], cap: usize) -> bool {
    let mut p = f.to_vec();
    for _ in 1..=cap {
        if is_zero_poly(ring, &p) {
            return true;
        }
        p = poly_mul(ring, &p, f);
    }
    false
}

/// For a central reduced ring: every nilpotent polynomial of degree at most
/// `d` whose coefficients are nilpotent has central coefficients.
///
/// Candidates are all coefficient vectors over N(R); each is confirmed
/// nilpotent by powering up to `order(R)` times before its coefficients are
/// tested.
pub fn nilpotent_polys_coeffs_central(ring: &FiniteRing, d: usize, budget: u64) -> Result<Verdict> {
    if d == 0 {
        return Err(Error::Hypothesis("degree bound must be at least 1".into()));
    }
    if !crate::properties::is_central_reduced(ring) {
        return Err(Error::Hypothesis("ring is not central reduced".into()));
    }
    let nil = ring.nilpotent_set().to_vec();
    let len = d + 1;
    let attempted = search_size(nil.len(), len);
    if attempted > budget as u128 {
        return Err(Error::Budget { attempted, budget });
    }
    let hit = (0..attempted as u64).into_par_iter().find_map_first(|t| {
        let f: Vec<Elem> = decode_poly(t, nil.len(), len)
            .into_iter()
            .map(|i| nil[i.index()])
            .collect();
        if !poly_is_nilpotent(ring, &f, ring.order()) {
            return None;
        }
        f.iter()
            .position(|&c| !ring.is_central(c))
            .map(|i| (f.clone(), i))
    });
    Ok(match hit {
        None => Verdict::no_counterexample_up_to(d),
        Some((f, i)) => Verdict::fails_with(vec![
            WitnessItem {
                role: "f",
                value: WitnessValue::Poly(f),
            },
            WitnessItem {
                role: "i",
                value: WitnessValue::Index(i),
            },
        ]),
    })
}

/// Brute force over every polynomial of degree at most 1: the first
/// nilpotent one having a non-nilpotent coefficient, if any.
pub fn cross_validate_candidate_set(ring: &FiniteRing) -> Result<Option<Vec<Elem>>> {
    const CAP: usize = 8;
    if ring.order() > CAP {
        return Err(Error::OrderCap {
            order: ring.order(),
            cap: CAP,
        });
    }
    for a0 in ring.elements() {
        for a1 in ring.elements() {
            let f = [a0, a1];
            if poly_is_nilpotent(ring, &f, ring.order())
                && f.iter().any(|&c| !ring.is_nilpotent(c))
            {
                return Ok(Some(f.to_vec()));
            }
        }
    }
    Ok(None)
}
