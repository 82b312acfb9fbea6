//! Enumeration of rings over the construction grammar, filtered by property
//! verdicts and deduplicated by an isomorphism-invariant fingerprint.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::construct::{build_with, RingExpr};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::properties::{check_property, verify_witness, PropertyId};
use crate::ring::{Elem, FiniteRing};

/// Constructors available to the enumerator. Constructors that take
/// element names (corners, quotients) and table files are not enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Z,
    CongMat,
    Mat,
    UT,
    EqDiagUT,
    Triv,
    Dorroh,
    PolyNil,
    PolyMod,
    GroupRing,
    Prod,
}

impl Generator {
    pub const ALL: [Generator; 11] = [
        Generator::Z,
        Generator::CongMat,
        Generator::Mat,
        Generator::UT,
        Generator::EqDiagUT,
        Generator::Triv,
        Generator::Dorroh,
        Generator::PolyNil,
        Generator::PolyMod,
        Generator::GroupRing,
        Generator::Prod,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Generator::Z => "Z",
            Generator::CongMat => "CongMat",
            Generator::Mat => "Mat",
            Generator::UT => "UT",
            Generator::EqDiagUT => "EqDiagUT",
            Generator::Triv => "Triv",
            Generator::Dorroh => "Dorroh",
            Generator::PolyNil => "PolyNil",
            Generator::PolyMod => "PolyMod",
            Generator::GroupRing => "GroupRing",
            Generator::Prod => "Prod",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Construction(format!("unknown generator {s:?}")))
    }
}

/// Per element: additive order, multiplicative preperiod and period,
/// nilpotency index (0 if not nilpotent), centrality. Sorted, so the value
/// does not depend on how elements are indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(Vec<(u32, u32, u32, u32, bool)>);

pub fn fingerprint(ring: &FiniteRing) -> Fingerprint {
    let mut v: Vec<_> = ring
        .elements()
        .map(|a| {
            let (pre, period) = power_cycle(ring, a);
            (
                ring.additive_order(a) as u32,
                pre,
                period,
                ring.nilpotency_index(a).unwrap_or(0),
                ring.is_central(a),
            )
        })
        .collect();
    v.sort_unstable();
    Fingerprint(v)
}

/// Tail length and cycle length of `a, a^2, a^3, ...`.
fn power_cycle(ring: &FiniteRing, a: Elem) -> (u32, u32) {
    let mut seen = vec![0u32; ring.order()];
    let mut x = a;
    let mut k = 1u32;
    loop {
        let i = x.index();
        if seen[i] != 0 {
            return (seen[i] - 1, k - seen[i]);
        }
        seen[i] = k;
        x = ring.mul(x, a);
        k += 1;
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub max_order: usize,
    pub satisfy: Vec<PropertyId>,
    pub violate: Vec<PropertyId>,
    pub generators: Vec<Generator>,
    pub depth: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_order: 16,
            satisfy: Vec::new(),
            violate: Vec::new(),
            generators: Generator::ALL.to_vec(),
            depth: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub expr: RingExpr,
    pub order: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SearchOutcome {
    pub hits: Vec<SearchHit>,
    /// Distinct fingerprints examined.
    pub examined: usize,
    pub warning: Option<String>,
}

struct Node {
    expr: RingExpr,
    ring: FiniteRing,
}

/// Enumerates rings up to `opts.depth` constructor applications and
/// `opts.max_order` elements, keeping the first expression seen for each
/// fingerprint. Hits are rebuilt from their printed expression and
/// re-checked before they are returned, smallest order first.
pub fn search(opts: &SearchOptions, limits: &Limits) -> Result<SearchOutcome> {
    if opts.max_order > limits.max_order {
        return Err(Error::OrderCap {
            order: opts.max_order,
            cap: limits.max_order,
        });
    }
    let limits = Limits {
        max_order: opts.max_order,
        ..*limits
    };
    let uses = |g| opts.generators.contains(&g);
    let mut seen = HashSet::new();
    let mut levels: Vec<Vec<Node>> = Vec::new();
    for depth in 0..=opts.depth {
        let candidates = if depth == 0 {
            leaves(opts.max_order, &uses)
        } else {
            extensions(&levels, opts.max_order, &uses)
        };
        let built: Vec<Node> = candidates
            .into_par_iter()
            .filter_map(|expr| build_with(&expr, &limits).ok().map(|ring| Node { expr, ring }))
            .collect();
        let mut level = Vec::new();
        for node in built {
            if seen.insert(fingerprint(&node.ring)) {
                level.push(node);
            }
        }
        levels.push(level);
    }

    let examined = seen.len();
    if examined == 0 {
        return Ok(SearchOutcome {
            hits: Vec::new(),
            examined,
            warning: Some("no ring expressions within the bounds".into()),
        });
    }
    let mut hits: Vec<(usize, usize, SearchHit)> = levels
        .par_iter()
        .enumerate()
        .flat_map(|(d, level)| level.par_iter().enumerate().map(move |(i, n)| (d, i, n)))
        .filter(|(_, _, n)| matches(&n.ring, opts))
        .map(|(d, i, n)| -> Result<_> {
            let rebuilt = build_with(&RingExpr::parse(&n.expr.to_string())?, &limits)?;
            if !reverified(&rebuilt, opts) {
                return Err(Error::Construction(format!("search hit {} did not re-verify", n.expr)));
            }
            Ok((d, i, SearchHit { expr: n.expr.clone(), order: rebuilt.order() }))
        })
        .collect::<Result<_>>()?;
    hits.sort_by_key(|(d, i, h)| (h.order, *d, *i));
    Ok(SearchOutcome {
        hits: hits.into_iter().map(|(_, _, h)| h).collect(),
        examined,
        warning: None,
    })
}

fn matches(ring: &FiniteRing, opts: &SearchOptions) -> bool {
    opts.satisfy.iter().all(|&p| check_property(ring, p).is_favorable())
        && opts.violate.iter().all(|&p| check_property(ring, p).is_fail())
}

fn reverified(ring: &FiniteRing, opts: &SearchOptions) -> bool {
    opts.satisfy.iter().all(|&p| check_property(ring, p).is_favorable())
        && opts.violate.iter().all(|&p| {
            let v = check_property(ring, p);
            v.is_fail() && verify_witness(ring, p, &v)
        })
}

fn leaves(max_order: usize, uses: &impl Fn(Generator) -> bool) -> Vec<RingExpr> {
    let mut out = Vec::new();
    if uses(Generator::Z) {
        out.extend((2..=max_order).map(RingExpr::Z));
    }
    if uses(Generator::CongMat) {
        out.extend((1..).take_while(|k| 2 * k * k * k * k <= max_order).map(RingExpr::CongMat));
    }
    out
}

fn extensions(levels: &[Vec<Node>], max_order: usize, uses: &impl Fn(Generator) -> bool) -> Vec<RingExpr> {
    let fits = |order: usize, exp: usize| order.checked_pow(exp as u32).is_some_and(|o| o <= max_order);
    let last = levels.last().map(Vec::as_slice).unwrap_or(&[]);
    let mut out = Vec::new();
    for node in last {
        let q = node.ring.order();
        let e = || Box::new(node.expr.clone());
        let sizes = |exp: fn(usize) -> usize| (2..).take_while(move |&n| fits(q, exp(n)));
        // Earlier candidates name a fingerprint class, so the most familiar
        // presentations come first.
        if uses(Generator::PolyNil) {
            out.extend(sizes(|n| n).map(|n| RingExpr::PolyNil(e(), n)));
        }
        if uses(Generator::Mat) {
            out.extend(sizes(|n| n * n).map(|n| RingExpr::Mat(n, e())));
        }
        if uses(Generator::UT) {
            out.extend(sizes(|n| n * (n + 1) / 2).map(|n| RingExpr::UT(n, e())));
        }
        if uses(Generator::EqDiagUT) {
            out.extend(sizes(|n| n * (n - 1) / 2 + 1).map(|n| RingExpr::EqDiagUT(n, e())));
        }
        if uses(Generator::Triv) && fits(q, 2) {
            out.push(RingExpr::Triv(e()));
        }
        if uses(Generator::GroupRing) {
            out.extend(sizes(|n| n).map(|n| RingExpr::GroupRing(e(), vec![n])));
        }
        if uses(Generator::Dorroh) {
            let c = node.ring.characteristic();
            out.extend(
                (1..)
                    .map(|m| m * c)
                    .take_while(|k| q * k <= max_order)
                    .map(|k| RingExpr::Dorroh(e(), k)),
            );
        }
        if uses(Generator::PolyMod) && fits(q, 2) && node.ring.is_commutative() {
            // x^2 = c1 x + c0 over every pair of coefficients.
            for c0 in node.ring.elements() {
                for c1 in node.ring.elements() {
                    let names = vec![node.ring.name(c0).to_string(), node.ring.name(c1).to_string()];
                    out.push(RingExpr::PolyMod(e(), names));
                }
            }
        }
    }
    if uses(Generator::Prod) {
        let all: Vec<&Node> = levels.iter().flatten().collect();
        let first_new = all.len() - last.len();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate().skip(i) {
                if j >= first_new && a.ring.order() * b.ring.order() <= max_order {
                    out.push(RingExpr::Prod(Box::new(a.expr.clone()), Box::new(b.expr.clone())));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_str;

    #[test]
    fn fingerprint_ignores_indexing() {
        let l = Limits::default();
        let a = build_str("Prod(Z 2, Z 3)", &l).unwrap();
        let b = build_str("Z 6", &l).unwrap();
        assert_eq!(fingerprint(&a), fingerprint(&b));
        let c = build_str("Triv(Z 2)", &l).unwrap();
        let d = build_str("PolyNil(Z 2, 2)", &l).unwrap();
        assert_eq!(fingerprint(&c), fingerprint(&d));
        let f4 = build_str("PolyMod(Z 2, [1,1])", &l).unwrap();
        assert_ne!(fingerprint(&f4), fingerprint(&d));
    }

    #[test]
    fn power_cycles() {
        let r = build_str("Z 12", &Limits::default()).unwrap();
        // 2, 4, 8, 4, ...
        assert_eq!(power_cycle(&r, Elem::new(2)), (1, 2));
        assert_eq!(power_cycle(&r, Elem::new(1)), (0, 1));
        assert_eq!(power_cycle(&r, Elem::new(6)), (1, 1));
    }
}
