//! The user guide, wired into the test suite.
//!
//! Each module below includes one chapter from `book/src/` as its
//! documentation, which makes every Rust snippet in the guide a doc-test:
//! `cargo test` compiles and runs them all, so the book cannot drift from
//! the library's actual behavior.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/engine.md")]
pub mod engine {}

#[doc = include_str!("../../../book/src/contracts.md")]
pub mod contracts {}

#[doc = include_str!("../../../book/src/analysis.md")]
pub mod analysis {}

#[doc = include_str!("../../../book/src/benchmarking.md")]
pub mod benchmarking {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
