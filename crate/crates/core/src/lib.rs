//! Exact counting and enumeration of rational Dyck paths.
//!
//! An `(a,b)`-Dyck path is a south-east lattice path from `(0,a)` to `(b,0)`
//! that stays weakly below the segment joining those two points. Paths are
//! encoded as words over `{0 = down, 1 = right}` or, equivalently, as Ferrers
//! diagrams (the boxes between the path and the lower-left corner).
//!
//! The crate offers several independent ways of computing `|D(a,b)|`:
//!
//! * a row-by-row dynamic program over the Christoffel diagram ([`count_rect`]),
//!   used as the reference oracle;
//! * closed forms for the Catalan, Fuss–Catalan and coprime cases
//!   ([`closed_forms`]);
//! * Bizley's partition sum for arbitrary `gcd(a,b)` ([`bizley`]);
//! * two product formulas for `a = 2k` ([`comparison`]);
//! * a sum/product decomposition of any diagram into isosceles staircases,
//!   evaluated with Catalan numbers ([`decomposition`]).
//!
//! Counting routines that can run on machine integers are generic over
//! [`Scalar`]; overflow is reported as [`Error::Overflow`], never wrapped.
//! The non-suffixed entry points (`count_rect`, `catalan`, ...) use the
//! arbitrary-precision [`Count`].

pub mod bizley;
pub mod christoffel;
pub mod cli;
pub mod closed_forms;
pub mod comparison;
pub mod decomposition;
pub mod diagram;
mod error;
mod scalar;
pub mod sweep;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use bizley::{bizley_count, partitions, phi, z_of, Partition};
pub use christoffel::{delta, delta_closed_lower, delta_closed_upper, q_boxes, special_r};
pub use closed_forms::{
    avoidance_value, ballot_brute_force, ballot_value, binomial, catalan, coprime_catalan,
    fuss_catalan, prime_rect,
};
pub use comparison::{
    rule2_terms, theorem1_count, theorem2_count, through_box_split, Family, Term, TermList,
};
pub use decomposition::{decompose, expr_stats, h_value, max_isosceles, render, DecompExpr};
pub use diagram::{
    christoffel_diagram, count_paths, count_rect, diagram_to_word, enumerate_paths, is_valid_word,
    word_to_diagram, Diagram, DyckWord, Rect, Step,
};

/// Arbitrary-precision nonnegative count.
pub type Count = num_bigint::BigUint;

/// Exact reduced rational.
pub type Ratio = num_rational::BigRational;

/// Signed arbitrary-precision integer.
pub type BigInt = num_bigint::BigInt;
