//! ccx: execute, analyse, and benchmark logic-program encodings of insurance
//! contracts.
//!
//! The crate has five layers:
//!
//! - [`engine`] — a bounded, deterministic engine for a small Prolog subset;
//! - [`oracle`] — a hand-written reference implementation of one specific
//!   contract, used as ground truth;
//! - [`analysis`] — static checks and rule-dependency graphs over programs;
//! - [`llm`] — prompt construction and a chat-completions client for
//!   generating encodings and queries from contract text;
//! - [`harness`] — trial execution and scoring against gold answers.

pub mod analysis;
pub mod book;
pub mod engine;
pub mod harness;
pub mod llm;
pub mod oracle;
pub mod testing;
