use std::fmt;

use crate::poly::format_poly;
use crate::ring::{Elem, FiniteRing};

/// Outcome of a quantified check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Every case of a finitely quantified statement was checked.
    HoldsExhaustive,
    /// A counterexample was found; the verdict carries it.
    Fails,
    /// Searched every case up to the degree bound without a counterexample.
    NoCounterexampleUpTo(usize),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::HoldsExhaustive => f.write_str("holds_exhaustive"),
            Status::Fails => f.write_str("fails"),
            Status::NoCounterexampleUpTo(d) => write!(f, "no_counterexample_up_to({d})"),
        }
    }
}

impl Status {
    pub fn parse(s: &str) -> Option<Status> {
        match s {
            "holds_exhaustive" => Some(Status::HoldsExhaustive),
            "fails" => Some(Status::Fails),
            _ => s
                .strip_prefix("no_counterexample_up_to(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|d| d.parse().ok())
                .map(Status::NoCounterexampleUpTo),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessValue {
    Elem(Elem),
    Poly(Vec<Elem>),
    Index(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessItem {
    pub role: &'static str,
    pub value: WitnessValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Vec<WitnessItem>,
}

impl Verdict {
    pub fn holds() -> Self {
        Verdict {
            status: Status::HoldsExhaustive,
            witness: Vec::new(),
        }
    }

    pub fn no_counterexample_up_to(d: usize) -> Self {
        Verdict {
            status: Status::NoCounterexampleUpTo(d),
            witness: Vec::new(),
        }
    }

    /// A failure with element witnesses, labelled in order.
    pub fn fails(items: &[(&'static str, Elem)]) -> Self {
        Verdict {
            status: Status::Fails,
            witness: items
                .iter()
                .map(|&(role, e)| WitnessItem {
                    role,
                    value: WitnessValue::Elem(e),
                })
                .collect(),
        }
    }

    pub fn fails_with(witness: Vec<WitnessItem>) -> Self {
        Verdict {
            status: Status::Fails,
            witness,
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fails
    }

    /// Holds, or no counterexample within the bound.
    pub fn is_favorable(&self) -> bool {
        !self.is_fail()
    }

    pub fn elem(&self, role: &str) -> Option<Elem> {
        self.witness.iter().find_map(|w| match (&w.value, w.role == role) {
            (WitnessValue::Elem(e), true) => Some(*e),
            _ => None,
        })
    }

    pub fn poly(&self, role: &str) -> Option<&[Elem]> {
        self.witness.iter().find_map(|w| match (&w.value, w.role == role) {
            (WitnessValue::Poly(p), true) => Some(p.as_slice()),
            _ => None,
        })
    }

    pub fn index(&self, role: &str) -> Option<usize> {
        self.witness.iter().find_map(|w| match (&w.value, w.role == role) {
            (WitnessValue::Index(i), true) => Some(*i),
            _ => None,
        })
    }

    /// Element witnesses in order.
    pub fn elems(&self) -> Vec<Elem> {
        self.witness
            .iter()
            .filter_map(|w| match w.value {
                WitnessValue::Elem(e) => Some(e),
                _ => None,
            })
            .collect()
    }

    /// Witness text using element names: a single element prints as its
    /// name, several elements as a tuple, anything else as `role=value`
    /// pairs.
    pub fn render_witness(&self, ring: &FiniteRing) -> String {
        let all_elems = self
            .witness
            .iter()
            .all(|w| matches!(w.value, WitnessValue::Elem(_)));
        if all_elems {
            let names: Vec<&str> = self.elems().into_iter().map(|e| ring.name(e)).collect();
            return match names.len() {
                1 => names[0].to_string(),
                _ => format!("({})", names.join(",")),
            };
        }
        self.witness
            .iter()
            .map(|w| {
                let v = match &w.value {
                    WitnessValue::Elem(e) => ring.name(*e).to_string(),
                    WitnessValue::Poly(p) => format_poly(ring, p),
                    WitnessValue::Index(i) => i.to_string(),
                };
                format!("{}={}", w.role, v)
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_round_trips() {
        for s in [
            Status::HoldsExhaustive,
            Status::Fails,
            Status::NoCounterexampleUpTo(3),
        ] {
            assert_eq!(Status::parse(&s.to_string()), Some(s));
        }
        assert_eq!(Status::parse("no_counterexample_up_to(x)"), None);
    }
}
