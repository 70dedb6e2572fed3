//! Runs Book I constructions through the catalog, with their traces.
//!
//! Run with `cargo run --example propositions`.

use euclid_elements::elements::{run, Instance, PROPOSITIONS};
use euclid_elements::geom::{Angle, Figure, Object, Point, Segment};
use euclid_elements::Result;

fn p(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

fn main() -> Result<()> {
    for (id, enunciation) in PROPOSITIONS {
        println!("{id}: {enunciation}");
    }
    println!();

    // I.1 on the unit segment: the apex lands at (1/2, √3/2)
    let ab = Segment::new(p(0, 0), p(1, 0))?;
    let r = run("I.1", None, &Instance::new(vec![Object::Segment(ab.clone())]))?;
    print!("{}", r.trace.to_text());
    print!("{}", r.report());
    println!();

    // I.44 by two strategies on the same instance
    let triangle = Figure::new(vec![p(3, 4), p(0, 0), p(6, 0)])?;
    let angle = Angle::new(p(1, 0), p(0, 0), p(1, 1))?;
    let inst = Instance::new(vec![
        Object::Segment(Segment::new(p(0, 0), p(4, 0))?),
        Object::Figure(triangle),
        Object::Angle(angle),
    ]);
    for strategy in ["euclid_superposition", "alnayrizi"] {
        let r = run("I.44", Some(strategy), &inst)?;
        let c = r.trace.counts();
        println!(
            "I.44 {strategy}: {} postulate steps, {} superpositions, passed: {}",
            c.postulate_steps(),
            c.superpositions,
            r.passed()
        );
    }
    Ok(())
}
