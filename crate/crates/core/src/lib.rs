//! Exhaustive checks for finite rings with identity: construction, element
//! and relation properties, radicals, bounded Armendariz-type searches and
//! a registry of implications run over a corpus of rings.

pub mod construct;
pub mod error;
pub mod harness;
pub mod limits;
pub mod output;
pub mod poly;
pub mod properties;
pub mod radicals;
pub mod ring;
pub mod search;
pub mod verdict;

pub use construct::{build, build_str, build_with, RingExpr};
pub use error::{Axiom, Error, Result};
pub use harness::{corpus_default, run_all, CorpusEntry, Report, RunOptions, TierFilter};
pub use limits::Limits;
pub use output::VerdictLine;
pub use poly::{check_poly_property, poly_mul, PolyPropertyId};
pub use properties::{check_property, PropertyId};
pub use radicals::{prime_radical, singular_ideal, RadicalReport};
pub use search::{search, SearchOptions};
pub use ring::{Elem, FiniteRing, Side, Subset};
pub use verdict::{Status, Verdict};
