//! Draws the I.46 square as SVG on standard output.
//!
//! Run with `cargo run --example draw > square.svg`.

use std::io::Write;

use euclid_elements::elements::{run, Instance};
use euclid_elements::geom::{Object, Point, Segment};
use euclid_elements::render::{render_result, RenderOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ab = Segment::new(Point::from_ints(0, 0), Point::from_ints(3, 1))?;
    let r = run("I.46", None, &Instance::new(vec![Object::Segment(ab)]))?;
    let opts = RenderOptions {
        title: Some("I.46".into()),
        ..RenderOptions::default()
    };
    std::io::stdout().write_all(&render_result(&r, &opts)?)?;
    Ok(())
}
