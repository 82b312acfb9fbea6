use thiserror::Error;

/// Ring axiom checked during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveInverse,
    AdditiveAssociativity,
    Identity,
    LeftDistributivity,
    RightDistributivity,
    Associativity,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::Identity => "identity",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
            Axiom::Associativity => "associativity",
        }
    }
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{axiom} axiom violated: {witness}")]
    Axiom { axiom: Axiom, witness: String },

    #[error("degenerate ring: {0}")]
    Degenerate(String),

    #[error("ring order {order} exceeds cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("ideal enumeration needs order <= {cap}, ring has order {order}")]
    IdealCap { order: usize, cap: usize },

    #[error("unknown element name {name:?}{}", near_list(.near))]
    UnknownName { name: String, near: Vec<String> },

    #[error("subset is not a {0} ideal")]
    NotIdeal(&'static str),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("construction error: {0}")]
    Construction(String),

    #[error("table file line {line}: {message}")]
    TableFormat { line: usize, message: String },

    #[error("search budget exceeded: {attempted} steps needed, budget is {budget}")]
    Budget { attempted: u128, budget: u64 },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("unknown property {0:?}")]
    UnknownProperty(String),

    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),

    #[error("unknown tier {0:?}; expected standard, slow or all")]
    UnknownTier(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn near_list(near: &[String]) -> String {
    if near.is_empty() {
        String::new()
    } else {
        format!("; near matches: {}", near.join(", "))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
