//! Compares the I.23 angle copies on one instance, then runs a small suite.
//!
//! Run with `cargo run --release --example compare_strategies`.

use euclid_elements::elements::{strategies, Instance};
use euclid_elements::geom::{Angle, Object, Point, Ray};
use euclid_elements::verify::{compare, run_suite};
use euclid_elements::Result;

fn main() -> Result<()> {
    let p = Point::from_ints;
    let inst = Instance::new(vec![
        Object::Ray(Ray::new(p(0, 0), p(5, 1))?),
        Object::Angle(Angle::new(p(4, 0), p(0, 0), p(1, 3))?),
    ]);
    let names = strategies("I.23")?;
    let report = compare("I.23", &names, &inst)?;
    print!("{report}");

    // the same strategies on 20 random instances
    let suite = run_suite("I.23", 20, 7)?;
    print!("{suite}");
    Ok(())
}
