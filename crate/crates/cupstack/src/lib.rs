//! Cup stacking on graphs.
//!
//! A vertex holding `c` cups may move all of them onto another cup-bearing
//! vertex at distance exactly `c`. A configuration is stackable onto `r`
//! when some sequence of moves gathers every cup on `r`.
//!
//! The crate has a plan verifier that every planner is checked against, an
//! exhaustive oracle for small boards, a polynomial decision procedure for
//! targets of eccentricity two, constructive planners for several graph
//! families, and hypercube plans up to dimension 20.

pub mod cube;
pub mod distance;
pub mod ecc2;
mod error;
pub mod families;
pub mod game;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod partition;

pub use distance::{DistanceMatrix, Hypercube, Metric};
pub use error::{Error, ParseError};
pub use game::{apply_move, legal_move, verify_plan, Configuration, Move, Plan, Verdict};
pub use graph::{parse_graph, Graph, SimpleGraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/game.md")]
    mod game {}
    #[doc = include_str!("../../../book/src/plans.md")]
    mod plans {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/ecc2.md")]
    mod ecc2 {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/cube.md")]
    mod cube {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
