use super::{Analysis, Clause, Ctx};
use crate::construct::{
    build_with, corner, direct_product, dorroh_extension, quotient, trivial_extension,
    truncated_polynomials, RingExpr,
};
use crate::error::Result;
use crate::poly::{check_poly_property, nilpotent_polys_coeffs_central, PolyPropertyId};
use crate::properties::{check_property, PropertyId};
use crate::ring::{Elem, FiniteRing};
use crate::verdict::Verdict;

use PropertyId::*;

type Runner = fn(&Ctx, &Analysis<'_>) -> Option<Vec<Clause>>;

/// A registered claim. `run` returns `None` when the ring is outside the
/// claim's caps.
pub struct Theorem {
    pub id: &'static str,
    pub summary: &'static str,
    /// Conclusions come from bounded polynomial searches.
    pub bounded: bool,
    pub(super) run: Runner,
}

const fn t(id: &'static str, summary: &'static str, bounded: bool, run: Runner) -> Theorem {
    Theorem {
        id,
        summary,
        bounded,
        run,
    }
}

pub static THEOREMS: [Theorem; 25] = [
    t("T1", "reduced implies central reduced", false, t1),
    t("T2", "central reduced plus semiprime, pp or pq-Baer implies reduced", false, t2),
    t("T3", "for central reduced rings the one-sided pp and pq-Baer conditions coincide", false, t3),
    t("T4", "quotients of a central reduced ring by nil ideals are central reduced", false, t4),
    t("T5", "domain iff prime and central reduced", false, t5),
    t("T6", "central reduced implies central semicommutative", false, t6),
    t("T7", "prime and central semicommutative implies reduced", false, t7),
    t("T8", "prime with R/I central reduced for a reduced ideal I implies reduced", false, t8),
    t("T9", "central reduced implies weakly semicommutative", false, t9),
    t("T10", "central reduced implies 2-primal; converse for semiprime rings", false, t10),
    t("T11", "central reduced iff R/P(R) central reduced and P(R) central", false, t11),
    t("T12", "central reduced implies abelian", false, t12),
    t("T13", "central reduced implies directly finite", false, t13),
    t("T14", "central reduced and nil clean implies commutative", false, t14),
    t("T15", "central reduced iff corner rings of a central idempotent are", false, t15),
    t("T16", "strongly regular iff regular with central reduced, reduced or abelian", false, t16),
    t("T17", "central reduced iff the Dorroh extension by Z_k is", false, t17),
    t("T18", "commutative iff the trivial extension T(R,R) is central reduced", false, t18),
    t("T19", "a product is central reduced iff both factors are", false, t19),
    t("T20", "central reduced implies nil, weak and central Armendariz", true, t20),
    t("T21", "for right pp R: central reduced iff R[x]/(x^2) central Armendariz", true, t21),
    t("T22", "nilpotent polynomials over a central reduced ring have central coefficients", true, t22),
    t("T23", "central reduced R gives a central Armendariz T(R,R)", true, t23),
    t("T24", "central reduced R gives a nil-Armendariz R[x]/(x^n)", true, t24),
    t("T25", "sums and products of central nilpotent elements", false, t25),
];

pub fn theorem_ids() -> impl Iterator<Item = &'static str> {
    THEOREMS.iter().map(|t| t.id)
}

/// Largest order for checks that enumerate pairs of polynomials or
/// derived rings of squared size.
const SMALL: usize = 16;
/// Largest derived order accepted when the derived ring is commutative
/// (the central Armendariz conclusion is then immediate).
const SMALL_COMMUTATIVE: usize = 256;
const DORROH_MAX_ORDER: usize = 1024;
const PRODUCT_BASE_MAX_ORDER: usize = 32;

/// A truth value with a short explanation.
#[derive(Debug, Clone)]
struct Cond {
    holds: bool,
    note: String,
}

impl Cond {
    fn new(holds: bool, note: impl Into<String>) -> Self {
        Cond {
            holds,
            note: note.into(),
        }
    }

    fn and(self, other: Cond) -> Cond {
        let note = match (self.holds, other.holds) {
            (true, true) => format!("{} and {}", self.note, other.note),
            (false, true) => self.note,
            (true, false) => other.note,
            (false, false) => format!("{}; {}", self.note, other.note),
        };
        Cond::new(self.holds && other.holds, note)
    }
}

fn describe(ring: &FiniteRing, label: &str, p: PropertyId, v: &Verdict) -> Cond {
    let prefix = if label.is_empty() {
        String::new()
    } else {
        format!("{label} ")
    };
    if v.is_favorable() {
        Cond::new(true, format!("{prefix}{p}"))
    } else {
        Cond::new(false, format!("{prefix}not {p} [{}]", v.render_witness(ring)))
    }
}

fn prop(a: &Analysis<'_>, p: PropertyId) -> Cond {
    describe(&a.ring, "", p, a.verdict(p))
}

fn prop_of(ring: &FiniteRing, label: &str, p: PropertyId) -> Cond {
    describe(ring, label, p, &check_property(ring, p))
}

/// Conclusion from a three-valued search: only `fails` refutes it.
fn bounded(ring: &FiniteRing, label: &str, v: Result<Verdict>) -> Result<Cond> {
    let v = v?;
    Ok(if v.is_fail() {
        Cond::new(false, format!("{label} fails [{}]", v.render_witness(ring)))
    } else {
        Cond::new(true, format!("{label} {}", v.status))
    })
}

fn implies(h: Cond, c: impl FnOnce() -> Result<Cond>) -> Clause {
    if !h.holds {
        return Clause::Vacuous(h.note);
    }
    match c() {
        Ok(c) if c.holds => Clause::Pass(format!("{} => {}", h.note, c.note)),
        Ok(c) => Clause::Violation(format!("{} but {}", h.note, c.note)),
        Err(e) => Clause::Violation(format!("{} but error: {e}", h.note)),
    }
}

/// Both sides evaluated; agreement passes.
fn equiv(l: Cond, r: Result<Cond>) -> Clause {
    match r {
        Ok(r) if l.holds == r.holds => {
            let word = if l.holds { "<=>" } else { "and" };
            Clause::Pass(format!("{} {word} {}", l.note, r.note))
        }
        Ok(r) => Clause::Violation(format!("{} but {}", l.note, r.note)),
        Err(e) => Clause::Violation(format!("{} but error: {e}", l.note)),
    }
}

fn t1(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(vec![implies(prop(a, Reduced), || Ok(prop(a, CentralReduced)))])
}

fn t2(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(
        [Semiprime, RightPp, LeftPp, RightPqBaer, LeftPqBaer]
            .into_iter()
            .map(|h| implies(prop(a, CentralReduced).and(prop(a, h)), || Ok(prop(a, Reduced))))
            .collect(),
    )
}

fn t3(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(vec![implies(prop(a, CentralReduced), || {
        let ids = [RightPp, LeftPp, RightPqBaer, LeftPqBaer];
        let values: Vec<bool> = ids.iter().map(|&p| a.holds(p)).collect();
        let agree = values.iter().all(|&v| v == values[0]);
        let note = if agree {
            format!("pp and pq-Baer all {}", if values[0] { "hold" } else { "fail" })
        } else {
            ids.iter()
                .map(|&p| prop(a, p).note)
                .collect::<Vec<_>>()
                .join(", ")
        };
        Ok(Cond::new(agree, note))
    })])
}

fn t4(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let r = &a.ring;
    if r.order() > ctx.limits.ideal_cap {
        return None;
    }
    let cr = prop(a, CentralReduced);
    if !cr.holds {
        return Some(vec![Clause::Vacuous(cr.note)]);
    }
    let nil_ideals: Vec<_> = match r.all_two_sided_ideals(ctx.limits.ideal_cap) {
        Ok(ideals) => ideals
            .into_iter()
            .filter(|i| i.len() > 1 && i.is_subset(r.nilpotent_set()))
            .collect(),
        Err(e) => return Some(vec![Clause::Violation(format!("error: {e}"))]),
    };
    let h = Cond::new(
        !nil_ideals.is_empty(),
        format!("central_reduced with {} nonzero nil ideals", nil_ideals.len()),
    );
    Some(vec![implies(h, || {
        for i in &nil_ideals {
            let q = quotient(r, i)?;
            let c = prop_of(&q, &format!("R/{}", r.format_subset(i)), CentralReduced);
            if !c.holds {
                return Ok(c);
            }
        }
        Ok(Cond::new(true, "every R/I central_reduced"))
    })])
}

fn t5(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(vec![equiv(
        prop(a, Domain),
        Ok(prop(a, Prime).and(prop(a, CentralReduced))),
    )])
}

fn t6(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(vec![implies(prop(a, CentralReduced), || {
        Ok(prop(a, CentralSemicommutative))
    })])
}

fn t7(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(vec![implies(
        prop(a, Prime).and(prop(a, CentralSemicommutative)),
        || Ok(prop(a, Reduced)),
    )])
}

fn t8(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let r = &a.ring;
    if r.order() > ctx.limits.ideal_cap {
        return None;
    }
    let prime = prop(a, Prime);
    if !prime.holds {
        return Some(vec![Clause::Vacuous(prime.note)]);
    }
    let ideals = match r.all_two_sided_ideals(ctx.limits.ideal_cap) {
        Ok(ideals) => ideals,
        Err(e) => return Some(vec![Clause::Violation(format!("error: {e}"))]),
    };
    let mut witnesses = Vec::new();
    for i in ideals.iter().filter(|i| i.len() < r.order()) {
        let reduced_ideal = i.intersection(r.nilpotent_set()).len() == 1;
        if !reduced_ideal {
            continue;
        }
        match quotient(r, i) {
            Ok(q) if check_property(&q, CentralReduced).is_favorable() => {
                witnesses.push(r.format_subset(i))
            }
            Ok(_) => {}
            Err(e) => return Some(vec![Clause::Violation(format!("error: {e}"))]),
        }
    }
    let h = Cond::new(
        !witnesses.is_empty(),
        if witnesses.is_empty() {
            "prime but no reduced ideal I with R/I central_reduced".to_string()
        } else {
            format!("prime, I = {} reduced, R/I central_reduced", witnesses[0])
        },
    );
    Some(vec![implies(h, || Ok(prop(a, Reduced)))])
}

fn t9(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let mut clause = implies(prop(a, CentralReduced), || Ok(prop(a, WeaklySemicommutative)));
    if let Clause::Vacuous(s) = &clause {
        if a.holds(WeaklySemicommutative) {
            clause = Clause::Vacuous(format!("{s}; weakly_semicommutative holds anyway"));
        }
    }
    Some(vec![clause])
}

fn t10(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(vec![
        implies(prop(a, CentralReduced), || Ok(prop(a, TwoPrimal))),
        implies(prop(a, Semiprime).and(prop(a, TwoPrimal)), || {
            Ok(prop(a, CentralReduced))
        }),
    ])
}

fn t11(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let r = &a.ring;
    let rhs = || -> Result<Cond> {
        let p = a.prime_radical();
        let q = quotient(r, p)?;
        let central = p.is_subset(r.center());
        let c = Cond::new(
            central,
            if central {
                "P(R) central".to_string()
            } else {
                format!("P(R) = {} not central", r.format_subset(p))
            },
        );
        Ok(prop_of(&q, "R/P(R)", CentralReduced).and(c))
    };
    Some(vec![equiv(prop(a, CentralReduced), rhs())])
}

fn t12(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let mut clause = implies(prop(a, CentralReduced), || Ok(prop(a, Abelian)));
    if let Clause::Vacuous(s) = &clause {
        if a.holds(Abelian) {
            clause = Clause::Vacuous(format!("{s}; abelian holds, so the converse fails here"));
        }
    }
    Some(vec![clause])
}

fn t13(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(vec![implies(prop(a, CentralReduced), || Ok(prop(a, DirectlyFinite)))])
}

fn t14(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(vec![implies(
        prop(a, CentralReduced).and(prop(a, NilClean)),
        || Ok(prop(a, Commutative)),
    )])
}

/// Whether `eR` is central reduced; the zero ring counts as such.
fn corner_is_cr(r: &FiniteRing, e: Elem) -> Result<bool> {
    if e == r.zero() {
        return Ok(true);
    }
    Ok(check_property(&corner(r, e)?, CentralReduced).is_favorable())
}

fn t15(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let r = &a.ring;
    let complement = |e| r.sub(r.one(), e);
    let both = |e| -> Result<bool> { Ok(corner_is_cr(r, e)? && corner_is_cr(r, complement(e))?) };
    let second = || -> Result<Cond> {
        let abelian = prop(a, Abelian);
        if !abelian.holds {
            return Ok(abelian);
        }
        for e in r.idempotents().iter() {
            if !both(e)? {
                return Ok(Cond::new(
                    false,
                    format!("abelian but eR or (1-e)R not central_reduced for e = {}", r.name(e)),
                ));
            }
        }
        Ok(Cond::new(true, "abelian with every eR and (1-e)R central_reduced"))
    };
    let third = || -> Result<Cond> {
        for e in r.idempotents().iter().filter(|&e| r.is_central(e)) {
            if both(e)? {
                return Ok(Cond::new(
                    true,
                    format!("eR and (1-e)R central_reduced for central e = {}", r.name(e)),
                ));
            }
        }
        Ok(Cond::new(false, "no central idempotent splits R into central reduced corners"))
    };
    let cr = prop(a, CentralReduced);
    Some(vec![equiv(cr.clone(), second()), equiv(cr, third())])
}

fn t16(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let sr = prop(a, StronglyRegular);
    Some(
        [CentralReduced, Reduced, Abelian]
            .into_iter()
            .map(|p| equiv(sr.clone(), Ok(prop(a, Regular).and(prop(a, p)))))
            .collect(),
    )
}

fn is_squarefree(n: usize) -> bool {
    (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p * p))
}

fn t17(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let r = &a.ring;
    let c = r.characteristic();
    if !is_squarefree(c) {
        return None;
    }
    let p = (2..).find(|p: &usize| !c.is_multiple_of(*p) && (2..*p).all(|q| !p.is_multiple_of(q)))?;
    let cap = DORROH_MAX_ORDER.min(ctx.limits.max_order);
    let clauses: Vec<Clause> = [c, c * p]
        .into_iter()
        .filter(|k| r.order() * k <= cap)
        .map(|k| {
            let d = dorroh_extension(r, k, cap)
                .map(|d| prop_of(&d, &format!("D(R,Z_{k})"), CentralReduced));
            equiv(prop(a, CentralReduced), d)
        })
        .collect();
    (!clauses.is_empty()).then_some(clauses)
}

/// The base `R` and the extension ring for a corpus entry: the entry's own
/// argument when it is already built by `wrap`, or `make(entry)` when the
/// entry is small enough.
enum Base<'a> {
    Argument(FiniteRing),
    Itself(&'a FiniteRing),
}

impl Base<'_> {
    fn ring(&self) -> &FiniteRing {
        match self {
            Base::Argument(r) => r,
            Base::Itself(r) => r,
        }
    }
}

/// Splits an entry of the form `Triv(X)` into `X` and the entry itself;
/// otherwise pairs the entry with `T(R,R)` built from it.
fn triv_pair<'a>(ctx: &Ctx, a: &'a Analysis<'_>, max_base: usize) -> Option<Result<(Base<'a>, Option<FiniteRing>)>> {
    match &a.entry.expr {
        RingExpr::Triv(x) => Some(build_with(x, &ctx.limits).map(|b| (Base::Argument(b), None))),
        _ if a.ring.order() <= max_base => Some(
            trivial_extension(&a.ring, ctx.limits.max_order).map(|t| (Base::Itself(&a.ring), Some(t))),
        ),
        _ => None,
    }
}

fn t18(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    Some(match triv_pair(ctx, a, SMALL)? {
        Err(e) => vec![Clause::Violation(format!("error: {e}"))],
        Ok((base, ext)) => {
            let ext = ext.as_ref().unwrap_or(&a.ring);
            vec![equiv(
                prop_of(base.ring(), "R", Commutative),
                Ok(prop_of(ext, "T(R,R)", CentralReduced)),
            )]
        }
    })
}

fn t19(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let parts = || -> Option<Result<(FiniteRing, FiniteRing, Option<FiniteRing>)>> {
        match &a.entry.expr {
            RingExpr::Prod(x, y) => Some((|| {
                Ok((build_with(x, &ctx.limits)?, build_with(y, &ctx.limits)?, None))
            })()),
            _ if a.ring.order() <= PRODUCT_BASE_MAX_ORDER => Some((|| {
                let z2 = build_with(&RingExpr::Z(2), &ctx.limits)?;
                let p = direct_product(&a.ring, &z2, ctx.limits.max_order)?;
                Ok((a.ring.clone(), z2, Some(p)))
            })()),
            _ => None,
        }
    };
    Some(match parts()? {
        Err(e) => vec![Clause::Violation(format!("error: {e}"))],
        Ok((x, y, p)) => {
            let p = p.as_ref().unwrap_or(&a.ring);
            vec![equiv(
                prop_of(p, "RxS", CentralReduced),
                Ok(prop_of(&x, "R", CentralReduced).and(prop_of(&y, "S", CentralReduced))),
            )]
        }
    })
}

fn t20(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let r = &a.ring;
    if r.order() > SMALL {
        return None;
    }
    let d = ctx.limits.degree;
    Some(
        [
            PolyPropertyId::NilArmendariz,
            PolyPropertyId::WeakArmendariz,
            PolyPropertyId::CentralArmendariz,
        ]
        .into_iter()
        .map(|p| {
            implies(prop(a, CentralReduced), || {
                bounded(r, p.as_str(), check_poly_property(r, p, d, ctx.limits.budget))
            })
        })
        .collect(),
    )
}

fn derived_small(ring: &FiniteRing) -> bool {
    ring.order() <= SMALL || (ring.order() <= SMALL_COMMUTATIVE && ring.is_commutative())
}

fn t21(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let r = &a.ring;
    let n = r.order();
    if n * n > SMALL && !(n * n <= SMALL_COMMUTATIVE && r.is_commutative()) {
        return None;
    }
    let pp = prop(a, RightPp);
    if !pp.holds {
        return Some(vec![Clause::Vacuous(pp.note)]);
    }
    let d = ctx.limits.degree;
    let c = truncated_polynomials(r, 2, ctx.limits.max_order).and_then(|ext| {
        bounded(
            &ext,
            "R[x]/(x^2) central_armendariz",
            check_poly_property(&ext, PolyPropertyId::CentralArmendariz, d, ctx.limits.budget),
        )
    });
    let cr = prop(a, CentralReduced);
    Some(vec![match c {
        Err(e) => Clause::Violation(format!("error: {e}")),
        Ok(c) if cr.holds == c.holds => Clause::Pass(format!("{}; {} <=> {}", pp.note, cr.note, c.note)),
        Ok(c) if cr.holds => Clause::Violation(format!("{} and {} but {}", pp.note, cr.note, c.note)),
        // Not central reduced and no counterexample found within the bound:
        // the search cannot settle the converse.
        Ok(c) => Clause::Vacuous(format!("{}; {}; undecided: {}", pp.note, cr.note, c.note)),
    }])
}

fn t22(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let r = &a.ring;
    if r.order() > SMALL {
        return None;
    }
    let d = ctx.limits.degree;
    Some(vec![implies(prop(a, CentralReduced), || {
        bounded(
            r,
            "nilpotent coefficients central",
            nilpotent_polys_coeffs_central(r, d, ctx.limits.budget),
        )
    })])
}

fn t23(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let (base, ext) = match triv_pair(ctx, a, 4)? {
        Err(e) => return Some(vec![Clause::Violation(format!("error: {e}"))]),
        Ok(pair) => pair,
    };
    let ext = ext.as_ref().unwrap_or(&a.ring);
    if !derived_small(ext) {
        return None;
    }
    let d = ctx.limits.degree;
    Some(vec![implies(prop_of(base.ring(), "R", CentralReduced), || {
        bounded(
            ext,
            "T(R,R) central_armendariz",
            check_poly_property(ext, PolyPropertyId::CentralArmendariz, d, ctx.limits.budget),
        )
    })])
}

fn t24(ctx: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let pair: Result<(Base<'_>, Option<FiniteRing>, usize)> = match &a.entry.expr {
        RingExpr::PolyNil(x, n) => build_with(x, &ctx.limits).map(|b| (Base::Argument(b), None, *n)),
        _ if a.ring.order() * a.ring.order() <= SMALL => {
            truncated_polynomials(&a.ring, 2, ctx.limits.max_order)
                .map(|p| (Base::Itself(&a.ring), Some(p), 2))
        }
        _ => return None,
    };
    let (base, ext, n) = match pair {
        Err(e) => return Some(vec![Clause::Violation(format!("error: {e}"))]),
        Ok(pair) => pair,
    };
    let ext = ext.as_ref().unwrap_or(&a.ring);
    if ext.order() > SMALL {
        return None;
    }
    let d = ctx.limits.degree;
    Some(vec![implies(prop_of(base.ring(), "R", CentralReduced), || {
        bounded(
            ext,
            &format!("R[x]/(x^{n}) nil_armendariz"),
            check_poly_property(ext, PolyPropertyId::NilArmendariz, d, ctx.limits.budget),
        )
    })])
}

fn t25(_: &Ctx, a: &Analysis<'_>) -> Option<Vec<Clause>> {
    let r = &a.ring;
    let cn = |x| r.is_central(x) && r.is_nilpotent(x);
    let nil = |x| r.is_nilpotent(x);
    let mut counts = [0usize; 3];
    let mut failures: [Option<String>; 3] = [None, None, None];
    let mut record = |k: usize, ok: bool, what: &dyn Fn() -> String| {
        counts[k] += 1;
        if !ok && failures[k].is_none() {
            failures[k] = Some(what());
        }
    };
    for x in r.elements() {
        for y in r.elements() {
            let (xy, yx) = (r.mul(x, y), r.mul(y, x));
            if cn(x) && cn(y) {
                let s = r.add(x, y);
                record(0, nil(s), &|| format!("{} + {} not nilpotent", r.name(x), r.name(y)));
            }
            if cn(y) {
                record(1, nil(xy) && nil(yx), &|| {
                    format!("b = {} central nilpotent, a = {}", r.name(y), r.name(x))
                });
            }
            if cn(r.mul(xy, x)) {
                record(2, nil(xy) && nil(yx), &|| {
                    format!("aba central nilpotent for a = {}, b = {}", r.name(x), r.name(y))
                });
            }
        }
    }
    let labels = [
        "sums of central nilpotents",
        "products with a central nilpotent",
        "ab and ba when aba is central nilpotent",
    ];
    Some(
        (0..3)
            .map(|k| match (&failures[k], counts[k]) {
                (Some(f), _) => Clause::Violation(format!("{}: {f}", labels[k])),
                (None, 0) => Clause::Vacuous(format!("{}: no instances", labels[k])),
                (None, c) => Clause::Pass(format!("{}: {c} pairs", labels[k])),
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_sequential() {
        for (i, id) in theorem_ids().enumerate() {
            assert_eq!(id, format!("T{}", i + 1));
        }
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(1) && is_squarefree(2) && is_squarefree(6) && is_squarefree(30));
        assert!(!is_squarefree(4) && !is_squarefree(12) && !is_squarefree(9));
    }

}
