//! Picard-group calculus on Bott-Samelson-Demazure-Hansen varieties.
//!
//! Everything here takes a reduced word and rejects non-reduced input.

mod character;
mod picard;
mod theorems;

pub use character::{
    anticanonical_character, character_lowest_weight_report, demazure_operator, Character,
    LowestWeightReport,
};
pub use picard::{
    anticanonical_o_coeffs, anticanonical_x_coeffs, classify, demazure_x_coeffs,
    o_coeffs_via_decomposition, o_to_x, x_to_o, Basis, Classification, PicardClass,
};
pub use theorems::{
    all_expressions_fano, coxeter_census, coxeter_gg_criterion, fano_all_expressions_bruteforce,
    fano_all_expressions_criterion, first_non_fano_word, inverse_image_of_root_sum, j1,
    j_chain_holds, j_sets, minuscule_gg_check, negative_simple_index, CensusEntry, MinusculeReport,
    MinusculeViolation,
};
