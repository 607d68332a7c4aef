//! Magic squares and Graeco-Latin squares by letter decomposition, directrices
//! (transversals) of cyclic Latin squares, and an exhaustive check that no
//! order-6 Latin square has an orthogonal mate.

pub mod codec;
pub mod construction;
pub mod directrix;
pub mod error;
pub mod format;
pub mod grid;
pub mod march;
mod par;
pub mod search;
pub mod verify;

pub use codec::{decode, encode, magic_constant, ValueCodec};
pub use directrix::{
    ap_directrices, apply_rule, closure, complete_square, counter_directrix, directrix_square,
    enumerate_directrices, exponent_directrix, pandiagonal_reorder, Directrix, RuleId,
    TransformRule,
};
pub use error::{Error, Result};
pub use grid::{
    is_latin, GraecoLatinSquare, Grid, LatinCheck, LatinSquare, LatinViolation, LetterSquare, Pair,
    PairGrid, Square,
};
pub use march::{double_march, quadruple_march, simple_march, triple_march, QuadrupleMember};
pub use par::PARALLEL;
pub use search::{
    enumerate_reduced_latin, orthogonal_mate, rectangle_swap_orbit, transversals,
    verify_no_order6_pair, MateCertificate, SweepOptions, SweepReport, Transversal,
};
pub use verify::{
    analyze_square, compose_numeric, orthogonality_check, verify, Analysis, OrthogonalityReport,
    VerificationReport,
};
