//! Exact calculator for spaces of uni-trivalent diagrams with
//! Laurent-polynomial beads: canonical forms modulo antisymmetry,
//! quotients modulo IHX and bead-pushing, the grading by bead degree,
//! the Λ-algebra action, and the hair expansion.

pub mod beads;
pub mod canon;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod hair;
pub mod lambda;
pub mod laurent;
pub mod limits;
pub mod lincomb;
pub mod relations;

pub use beads::{
    bead_degree, beaded_class, canonicalize_beaded, coboundary_unit, embed_zero_class,
    ihx_beaded, normal_coordinates, phi, psi, push_move, split_by_bead_degree, unphi,
    BeadedDiagram, BeadedForm, BeadedKey,
};
pub use canon::{canonicalize, CanonicalForm, DiagramKey, Sign};
pub use diagram::{Diagram, LegLabel};
pub use enumerate::enumerate_sector;
pub use error::{DiagramError, EngineError};
pub use hair::{hair, hair_expand, hair_expand_presentation, kernel_check, TruncatedHairy};
pub use lambda::{
    antisymmetrize, builtin_t, builtin_x, insert, lambda_mult, unit, unit_y,
    verify_scalar_relation, LambdaElement,
};
pub use laurent::LaurentPoly;
pub use limits::Limits;
pub use lincomb::{LinComb, Rational, RelationSpan};
pub use relations::{diagram_class, ihx_generator, Quotient, QuotientCache, SectorSpec};
