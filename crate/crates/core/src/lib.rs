//! Exact straightedge-and-compass constructions for Book I of the Elements.
//!
//! * [`number`]: constructible numbers in a tower of quadratic fields, with
//!   decided equality and sign.
//! * [`geom`]: points, lines, circles, figures and exact predicates.
//! * [`elements`]: the propositions, each recording a trace of postulate
//!   steps and checking its own result.
//! * [`dsl`]: a line-oriented construction script language.
//! * [`verify`]: suites over random instances and strategy comparisons.
//! * [`render`]: deterministic SVG drawings.
//!
//! ```
//! use euclid_elements::elements::{run, Instance};
//! use euclid_elements::geom::{Object, Point, Segment};
//!
//! let ab = Segment::new(Point::from_ints(0, 0), Point::from_ints(1, 0)).unwrap();
//! let r = run("I.1", None, &Instance::new(vec![Object::Segment(ab)])).unwrap();
//! assert!(r.passed());
//! ```

pub mod error;
pub mod dsl;
pub mod elements;
pub mod geom;
pub mod number;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
pub use number::{Constructible, Sign};
