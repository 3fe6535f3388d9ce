//! Marked shifted tableaux, LRS words and shifted jeu de taquin.

pub mod holes;
pub mod lrs;
pub mod slide;
pub mod symbol;

pub use lrs::{
    count_lrs, enumerate_lrs, enumerate_lrs_any_content, is_lrs_tableau, is_valid_marked,
    lrs_coefficient, marked_content, MarkedTableau,
};
pub use holes::{
    enumerate_hole_strips, persistence_violations, transfer_nw_to_se, transfer_se_to_nw, HoleMark,
    HoleStrip, HoleTrace, HoleTransfer, HoledTableau, Side,
};
pub use slide::{reverse_shifted_slide, shifted_slide};
pub use symbol::{hat_word, is_lrs_word, MarkedSymbol};
