//! Theorem registry, corpus and the implication engine behind the report.

mod corpus;
mod theorems;

use std::fmt::Write as _;
use std::sync::OnceLock;

use rayon::prelude::*;

pub use corpus::{corpus_default, CorpusEntry, Tier, TierFilter};
pub use theorems::{theorem_ids, Theorem, THEOREMS};

use crate::construct::build_with;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::properties::{check_property, PropertyId};
use crate::radicals;
use crate::ring::{FiniteRing, Subset};
use crate::verdict::Verdict;

/// A corpus ring with lazily computed verdicts shared by all theorems.
pub struct Analysis<'c> {
    pub index: usize,
    pub entry: &'c CorpusEntry,
    pub ring: FiniteRing,
    props: Vec<OnceLock<Verdict>>,
    prime_radical: OnceLock<Subset>,
}

impl<'c> Analysis<'c> {
    pub fn new(index: usize, entry: &'c CorpusEntry, ring: FiniteRing) -> Self {
        Analysis {
            index,
            entry,
            ring,
            props: (0..PropertyId::ALL.len()).map(|_| OnceLock::new()).collect(),
            prime_radical: OnceLock::new(),
        }
    }

    pub fn verdict(&self, p: PropertyId) -> &Verdict {
        self.props[p as usize].get_or_init(|| check_property(&self.ring, p))
    }

    pub fn holds(&self, p: PropertyId) -> bool {
        self.verdict(p).is_favorable()
    }

    pub fn prime_radical(&self) -> &Subset {
        self.prime_radical
            .get_or_init(|| radicals::prime_radical(&self.ring))
    }
}

/// Outcome of one clause of a theorem on one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Clause {
    Pass(String),
    Vacuous(String),
    Violation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowResult {
    Pass,
    Vacuous,
    Violation,
}

impl RowResult {
    pub fn as_str(self) -> &'static str {
        match self {
            RowResult::Pass => "pass",
            RowResult::Vacuous => "vacuous",
            RowResult::Violation => "VIOLATION",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub theorem: &'static str,
    pub theorem_index: usize,
    pub ring: String,
    pub corpus_index: usize,
    pub result: RowResult,
    pub detail: String,
}

impl Row {
    /// Folds clauses: any violation makes the row a violation, all-vacuous
    /// makes it vacuous.
    fn from_clauses(theorem_index: usize, a: &Analysis<'_>, clauses: Vec<Clause>) -> Row {
        let result = if clauses.iter().any(|c| matches!(c, Clause::Violation(_))) {
            RowResult::Violation
        } else if clauses.iter().all(|c| matches!(c, Clause::Vacuous(_))) {
            RowResult::Vacuous
        } else {
            RowResult::Pass
        };
        let detail = clauses
            .into_iter()
            .filter_map(|c| match (c, result) {
                (Clause::Violation(s), RowResult::Violation) => Some(s),
                (Clause::Pass(s), RowResult::Pass) | (Clause::Vacuous(s), RowResult::Vacuous) => Some(s),
                (Clause::Vacuous(s), RowResult::Pass) => Some(s),
                _ => None,
            })
            .collect::<Vec<_>>()
            .join("; ");
        Row {
            theorem: THEOREMS[theorem_index].id,
            theorem_index,
            ring: a.entry.name.clone(),
            corpus_index: a.index,
            result,
            detail,
        }
    }

    pub fn render(&self) -> String {
        format!(
            "case={} ring={} result={} detail=\"{}\"",
            self.theorem,
            self.ring,
            self.result.as_str(),
            self.detail.replace('"', "'")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectationMismatch {
    pub ring: String,
    pub property: PropertyId,
    pub expected_holds: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub rings: usize,
    pub theorems: Vec<&'static str>,
    pub rows: Vec<Row>,
    pub expectations_checked: usize,
    pub mismatches: Vec<ExpectationMismatch>,
}

impl Report {
    pub fn count(&self, r: RowResult) -> usize {
        self.rows.iter().filter(|row| row.result == r).count()
    }

    pub fn violations(&self) -> usize {
        self.count(RowResult::Violation)
    }

    fn rows_of(&self, id: &str) -> impl Iterator<Item = &Row> + '_ {
        let id = id.to_string();
        self.rows.iter().filter(move |r| r.theorem == id)
    }

    /// Theorems with rows, all of them vacuous.
    pub fn fully_vacuous(&self) -> Vec<&'static str> {
        self.theorems
            .iter()
            .copied()
            .filter(|id| {
                self.rows_of(id).next().is_some() && self.rows_of(id).all(|r| r.result == RowResult::Vacuous)
            })
            .collect()
    }

    /// Theorems whose caps exclude every ring in the run.
    pub fn not_applicable(&self) -> Vec<&'static str> {
        self.theorems
            .iter()
            .copied()
            .filter(|id| self.rows_of(id).next().is_none())
            .collect()
    }

    /// Theorems with at least one pass or violation row.
    pub fn non_vacuous_theorems(&self) -> usize {
        self.theorems
            .iter()
            .filter(|id| self.rows_of(id).any(|r| r.result != RowResult::Vacuous))
            .count()
    }

    pub fn is_clean(&self) -> bool {
        self.violations() == 0 && self.mismatches.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&row.render());
            out.push('\n');
        }
        for m in &self.mismatches {
            let _ = writeln!(
                out,
                "expectation ring={} property={} expected={} result=MISMATCH",
                m.ring,
                m.property,
                if m.expected_holds { "holds" } else { "fails" }
            );
        }
        let _ = writeln!(
            out,
            "summary rings={} theorems={} rows={} pass={} vacuous={} violations={} expectations={} mismatches={}",
            self.rings,
            self.theorems.len(),
            self.rows.len(),
            self.count(RowResult::Pass),
            self.count(RowResult::Vacuous),
            self.violations(),
            self.expectations_checked,
            self.mismatches.len()
        );
        if self.theorems.contains(&"T17") {
            out.push_str(
                "note T17: Dorroh extensions use Z_k for squarefree k divisible by the characteristic; \
                 rings of non-squarefree characteristic are skipped\n",
            );
        }
        if self.rings == 0 {
            out.push_str("warning: empty corpus, every theorem is vacuous\n");
        } else {
            for id in self.fully_vacuous() {
                let _ = writeln!(out, "warning {id}: vacuous on every applicable ring");
            }
            for id in self.not_applicable() {
                let _ = writeln!(out, "warning {id}: no ring within its caps");
            }
        }
        out
    }
}

/// Options for [`run_all`].
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub tier: TierFilter,
    /// Restrict to these theorem ids.
    pub only: Option<Vec<String>>,
    pub limits: Limits,
}

/// Context shared by the theorem runners.
pub struct Ctx {
    pub limits: Limits,
}

/// Runs every selected theorem over every corpus entry admitted by the
/// tier filter. Rows are ordered by theorem, then corpus position.
pub fn run_all(corpus: &[CorpusEntry], opts: &RunOptions) -> Result<Report> {
    let selected: Vec<usize> = match &opts.only {
        None => (0..THEOREMS.len()).collect(),
        Some(ids) => ids
            .iter()
            .map(|id| {
                THEOREMS
                    .iter()
                    .position(|t| t.id.eq_ignore_ascii_case(id))
                    .ok_or_else(|| Error::UnknownTheorem(id.clone()))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let entries: Vec<(usize, &CorpusEntry)> = corpus
        .iter()
        .enumerate()
        .filter(|(_, e)| opts.tier.admits(e.tier))
        .collect();
    let analyses: Vec<Analysis<'_>> = entries
        .par_iter()
        .map(|&(i, e)| {
            build_with(&e.expr, &opts.limits)
                .map(|ring| Analysis::new(i, e, ring))
                .map_err(|err| Error::Construction(format!("corpus entry {}: {err}", e.name)))
        })
        .collect::<Result<_>>()?;

    let ctx = Ctx { limits: opts.limits };
    let jobs: Vec<(usize, &Analysis<'_>)> = selected
        .iter()
        .flat_map(|&t| analyses.iter().map(move |a| (t, a)))
        .collect();
    let mut rows: Vec<Row> = jobs
        .par_iter()
        .filter_map(|&(t, a)| {
            (THEOREMS[t].run)(&ctx, a).map(|clauses| Row::from_clauses(t, a, clauses))
        })
        .collect();
    rows.sort_by_key(|r| (r.theorem_index, r.corpus_index));

    let mut mismatches = Vec::new();
    let mut checked = 0;
    for a in &analyses {
        for &(p, expected_holds) in &a.entry.expected {
            checked += 1;
            if a.holds(p) != expected_holds {
                mismatches.push(ExpectationMismatch {
                    ring: a.entry.name.clone(),
                    property: p,
                    expected_holds,
                });
            }
        }
    }

    Ok(Report {
        rings: analyses.len(),
        theorems: selected.iter().map(|&t| THEOREMS[t].id).collect(),
        rows,
        expectations_checked: checked,
        mismatches,
    })
}
