//! Exact strong-contact geometry for polytopes, contact algebras, and
//! countermodel synthesis for the quantifier-free theory of connected
//! contact algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`numeric`]: rationals, points, half-spaces, lines.
//! * [`interval`], [`plane`], [`cylinder`]: polytopes in R¹, R² and
//!   cylinders `A × R^(n-1)` with Boolean operations and the contact
//!   relations (topological contact, overlap, strong contact).
//! * [`adjacency`]: finite adjacency spaces, untying, projection onto the line.
//! * [`algebra`]: the contact-algebra interface, axiom audits and merging.
//! * [`logic`]: terms and formulas, evaluation, axiom schemes, bounded
//!   countermodel search.
//! * [`pipeline`]: formula to geometric countermodel, with certificates.

pub mod adjacency;
pub mod algebra;
pub mod cylinder;
pub mod error;
pub mod interval;
pub mod logic;
pub mod numeric;
pub mod pipeline;
pub mod plane;
pub mod random;
pub mod svg;
mod text;

pub use adjacency::{AdjacencySpace, Arrangement, Numeration, PMorphism};
pub use algebra::{ContactAlgebra, ContactKind, FiniteContactAlgebra, PolytopeAlgebra};
pub use cylinder::CylinderPolytope;
pub use error::{AdjacencyError, Error, GeometryError, LogicError, ParseError, PipelineError};
pub use interval::IntervalPolytope;
pub use logic::{Formula, Term, Valuation};
pub use numeric::{HalfSpace, Hyperplane, Point, Rational, Side};
pub use pipeline::{synthesize, verify, CountermodelCertificate, VerifyReport};
pub use plane::{BasicPolytope, PlanePolytope};
