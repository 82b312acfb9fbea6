/// Numeric caps shared by the builders, the ideal enumerator and the
/// polynomial searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring order any construction may produce.
    pub max_order: usize,
    /// Largest ring order for which all two-sided ideals are enumerated.
    pub ideal_cap: usize,
    /// Default degree bound for polynomial searches.
    pub degree: usize,
    /// Constraint-propagation steps a polynomial search may take.
    pub budget: u64,
}

/// Environment variable overriding [`Limits::max_order`].
pub const MAX_ORDER_ENV: &str = "CENTRUM_MAX_ORDER";

/// Tables are stored as `u16`, so no configuration can go past this.
pub const HARD_MAX_ORDER: usize = u16::MAX as usize;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 4096,
            ideal_cap: 64,
            degree: 2,
            budget: 100_000_000,
        }
    }
}

impl Limits {
    /// Defaults with `CENTRUM_MAX_ORDER` applied when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_order = cap.min(HARD_MAX_ORDER);
        }
        limits
    }
}
