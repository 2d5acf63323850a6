//! Layered partial braids: braid words, canonical forms, partial braids,
//! the layered stacking product, and the bounded relation suite.

mod garside;
mod partial;
mod pm;
mod verify;
mod word;

pub use garside::{normalize, BraidNormalForm};
pub use partial::PartialBraid;
pub use pm::{PMBraid, PMBraidLetter, PMBraidWord};
pub use verify::{verify_braid_relations, word_e_word_condition, word_e_word_literal_condition};
pub use word::BraidWord;
