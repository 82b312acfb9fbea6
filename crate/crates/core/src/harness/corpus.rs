use std::fmt;
use std::str::FromStr;

use crate::construct::RingExpr;
use crate::error::{Error, Result};
use crate::properties::PropertyId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tier {
    Standard,
    Slow,
}

/// Which corpus tiers a run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TierFilter {
    #[default]
    Standard,
    Slow,
    All,
}

impl TierFilter {
    pub fn admits(self, tier: Tier) -> bool {
        matches!(
            (self, tier),
            (TierFilter::All, _) | (TierFilter::Standard, Tier::Standard) | (TierFilter::Slow, Tier::Slow)
        )
    }
}

impl FromStr for TierFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(TierFilter::Standard),
            "slow" => Ok(TierFilter::Slow),
            "all" => Ok(TierFilter::All),
            _ => Err(Error::UnknownTier(s.to_string())),
        }
    }
}

impl fmt::Display for TierFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TierFilter::Standard => "standard",
            TierFilter::Slow => "slow",
            TierFilter::All => "all",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub expr: RingExpr,
    pub tier: Tier,
    /// `(property, holds)` pairs re-checked on every run.
    pub expected: Vec<(PropertyId, bool)>,
}

impl CorpusEntry {
    pub fn new(name: &str, expr: &str, tier: Tier, expected: &[(PropertyId, bool)]) -> Self {
        CorpusEntry {
            name: name.to_string(),
            expr: RingExpr::parse(expr).unwrap_or_else(|e| panic!("corpus entry {name}: {e}")),
            tier,
            expected: expected.to_vec(),
        }
    }
}

/// The shipped corpus.
pub fn corpus_default() -> Vec<CorpusEntry> {
    use PropertyId::*;
    use Tier::*;
    const HOLDS: bool = true;
    const FAILS: bool = false;
    let e = CorpusEntry::new;
    vec![
        e("Z2", "Z 2", Standard, &[(Reduced, HOLDS), (Prime, HOLDS), (Domain, HOLDS)]),
        e(
            "Ex2.23a",
            "Z 4",
            Standard,
            &[(CentralReduced, HOLDS), (Reduced, FAILS), (RightNonsingular, FAILS)],
        ),
        e("Z6", "Z 6", Standard, &[(Reduced, HOLDS), (Prime, FAILS)]),
        e("Z8", "Z 8", Standard, &[(CentralReduced, HOLDS), (Reduced, FAILS)]),
        e("Z12", "Z 12", Standard, &[(TwoPrimal, HOLDS), (Reduced, FAILS)]),
        e("F4", "PolyMod(Z 2, [1,1])", Standard, &[(Domain, HOLDS), (StronglyRegular, HOLDS)]),
        e(
            "Ex2.23b",
            "Mat(2, Z 2)",
            Standard,
            &[
                (CentralReduced, FAILS),
                (Prime, HOLDS),
                (RightNonsingular, HOLDS),
                (LeftNonsingular, HOLDS),
            ],
        ),
        e("Ex2.11", "UT(2, Z 2)", Standard, &[(CentralReduced, FAILS)]),
        e(
            "Ex2.11q",
            "Quot(UT(2, Z 2), [[[1,0],[0,0]]])",
            Standard,
            &[(CentralReduced, HOLDS)],
        ),
        e("UT3Z2", "UT(3, Z 2)", Standard, &[(CentralReduced, FAILS), (Abelian, FAILS)]),
        e(
            "Ex2.9",
            "EqDiagUT(3, Z 2)",
            Standard,
            &[(CentralSemicommutative, HOLDS), (CentralReduced, FAILS)],
        ),
        e(
            "Ex2.14",
            "EqDiagUT(5, Z 2)",
            Slow,
            &[(WeaklySemicommutative, HOLDS), (CentralReduced, FAILS)],
        ),
        e("TrivZ2", "Triv(Z 2)", Standard, &[(CentralReduced, HOLDS), (Reduced, FAILS)]),
        e("TrivZ4", "Triv(Z 4)", Standard, &[(CentralReduced, HOLDS)]),
        e("TrivUT2Z2", "Triv(UT(2, Z 2))", Standard, &[(CentralReduced, FAILS)]),
        e("Ex2.18", "CongMat(4)", Standard, &[(Abelian, HOLDS), (CentralReduced, FAILS)]),
        e("DorrohZ4k4", "Dorroh(Z 4, 4)", Standard, &[(Commutative, HOLDS)]),
        e("DorrohZ2k6", "Dorroh(Z 2, 6)", Standard, &[(Commutative, HOLDS), (Reduced, HOLDS)]),
        e("Ex2.2", "PolyNil(Z 2, 2)", Standard, &[(CentralReduced, HOLDS), (Reduced, FAILS)]),
        e("PolyNilZ4n2", "PolyNil(Z 4, 2)", Standard, &[(CentralReduced, HOLDS)]),
        e("PolyNilZ2n3", "PolyNil(Z 2, 3)", Standard, &[(CentralReduced, HOLDS), (Reduced, FAILS)]),
        e(
            "ProdZ2M2Z2",
            "Prod(Z 2, Mat(2, Z 2))",
            Standard,
            &[(CentralReduced, FAILS), (Abelian, FAILS)],
        ),
        e("GroupZ2C2", "GroupRing(Z 2, [2])", Standard, &[(Commutative, HOLDS), (Reduced, FAILS)]),
        e("GroupZ3C3", "GroupRing(Z 3, [3])", Standard, &[(Commutative, HOLDS), (Reduced, FAILS)]),
        e(
            "CornerM2Z2",
            "Corner(Prod(Z 2, Mat(2, Z 2)), (0,[[1,0],[0,1]]))",
            Standard,
            &[(CentralReduced, FAILS)],
        ),
        e(
            "CornerZ2",
            "Corner(Prod(Z 2, Mat(2, Z 2)), (1,[[0,0],[0,0]]))",
            Standard,
            &[(Reduced, HOLDS)],
        ),
    ]
}
