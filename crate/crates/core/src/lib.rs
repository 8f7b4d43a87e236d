//! Integral, Kawasaki and Chen-Ruan cohomology of weighted projective
//! spaces `CP^n_(b)`, computed exactly over the integers.

pub mod abelian;
pub mod arith;
pub mod check;
pub mod chenruan;
pub mod cli;
pub mod error;
pub mod expr;
pub mod kawasaki;
pub mod kunneth;
pub mod orbifold;
pub mod poly;
pub mod report;

pub use abelian::{FgAbGroup, GradedGroups};
pub use arith::{Degree, Rational, WeightVector};
pub use chenruan::{presentation_equivalent, CrElement, CrMonomial, CrRing, SectorData};
pub use error::{Error, ParseError, Result};
pub use expr::{eval, eval_str, parse, EvalRing, Expr};
pub use kawasaki::{KawasakiElement, KawasakiRing};
pub use kunneth::{odd_torsion_witness, product_groups, ProductGroups};
pub use orbifold::{iso_check, OrbifoldElement, OrbifoldRing};
pub use poly::UPoly;
