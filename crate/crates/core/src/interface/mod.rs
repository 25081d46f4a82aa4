//! Rule-base documents, the command implementations behind the `radfuzz`
//! binary and the shipped fixtures.

pub mod commands;
pub mod document;
pub mod fixtures;

pub use document::{parse_rulebase, serialize_rulebase, ActSpec, RuleBaseDocument, RuleSpec, TNormSpec};
