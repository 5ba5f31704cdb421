//! Exact character theory of the hyperoctahedral groups `W_n` (type `B_n`).
//!
//! This is the brute-force side of every check in the crate: classes are
//! found by enumerating signed permutations, characters by explicit
//! induction, and multiplicities by inner products over the rationals.

pub mod class_function;
pub mod classes;
pub mod linear;
pub mod symmetric;
pub mod table;

pub use class_function::{induce_class_function, ClassFunction, ProductClassFunction, Rational};
pub use classes::{conjugacy_classes, BnClassLabel, DEFAULT_ORACLE_BOUND};
pub use linear::{linear_character, LinearCharacter};
pub use symmetric::sn_character_value;
pub use table::{build_character_table, character_table, decompose, tensor_label_map, CharacterTable};
