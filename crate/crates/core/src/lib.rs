//! Largest axis-parallel rectangle that contains every red point and is
//! separated from blue obstacles.
//!
//! * [`outlier`]: blue points, up to `k` of them may be enclosed.
//! * [`circle`]: blue unit circles, none may be entered.
//! * [`oracle`]: slow independent references used by the tests.

pub mod bench;
pub mod circle;
pub mod cli;
pub mod error;
pub mod gen;
pub mod geometry;
pub mod golden;
pub mod io;
pub mod oracle;
pub mod outlier;
pub mod staircase;
pub mod svg;

pub use circle::{solve_mbsr_c, solve_mbsr_c_detailed};
pub use error::{Error, Result};
pub use geometry::{Point, Rect, Region, UnitCircle};
pub use outlier::{
    solve_mbsr, solve_mbsr_o_baseline, solve_mbsr_o_pairset, Algorithm, SolveReport,
};
