//! Construction DSL: expressions naming rings and the builders behind them.

mod build;
mod expr;

pub use build::{
    build, build_str, build_with, corner, direct_product, dorroh_extension, quotient,
    trivial_extension, truncated_polynomials,
};
pub use expr::RingExpr;
