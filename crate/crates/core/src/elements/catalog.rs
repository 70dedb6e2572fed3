//! Stable proposition identifiers and a uniform way to run them.

use super::{
    cut_on_ray, p1, p10, p11, p12, p2, p22, p23, p3, p31_with, p42, p42_on_ray, p43_complements,
    p44, p45, p46, p9, P23Strategy, P42Strategy, P44Strategy, P46Strategy, PropositionResult,
};
use crate::error::{Error, Result};
use crate::geom::{Object, Side};

/// Constructions with their enunciations.
pub const PROPOSITIONS: &[(&str, &str)] = &[
    ("I.1", "On a given finite straight line to construct an equilateral triangle"),
    ("I.2", "To place at a given point a straight line equal to a given straight line"),
    ("I.3", "Given two unequal straight lines, to cut off from the greater a straight line equal to the less"),
    ("I.9", "To bisect a given rectilineal angle"),
    ("I.10", "To bisect a given finite straight line"),
    ("I.11", "To draw a straight line at right angles to a given straight line from a given point on it"),
    ("I.12", "To a given infinite straight line, from a given point not on it, to draw a perpendicular"),
    ("I.22", "Out of three straight lines equal to three given straight lines to construct a triangle"),
    ("I.23", "On a given straight line and at a point on it to construct a rectilineal angle equal to a given one"),
    ("I.31", "Through a given point to draw a straight line parallel to a given straight line"),
    ("I.42", "To construct, in a given rectilineal angle, a parallelogram equal to a given triangle"),
    ("I.43", "The complements of the parallelograms about the diameter are equal to one another"),
    ("I.44", "To a given straight line to apply, in a given rectilineal angle, a parallelogram equal to a given triangle"),
    ("I.45", "To construct, in a given rectilineal angle, a parallelogram equal to a given rectilineal figure"),
    ("I.46", "On a given straight line to describe a square"),
];

/// The inputs of one run: objects in the order the proposition takes them,
/// and the side on which new figures are to lie.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub objects: Vec<Object>,
    pub side: Side,
}

impl Instance {
    pub fn new(objects: Vec<Object>) -> Instance {
        Instance {
            objects,
            side: Side::Left,
        }
    }

    pub fn on(mut self, side: Side) -> Instance {
        self.side = side;
        self
    }

    /// The object kinds, for error messages and shape matching.
    pub fn kinds(&self) -> Vec<&'static str> {
        self.objects.iter().map(Object::kind).collect()
    }
}

/// Strategy names accepted by a proposition, Euclid's first.
pub fn strategies(id: &str) -> Result<Vec<&'static str>> {
    let (base, _) = split_id(id)?;
    Ok(match base {
        "I.23" | "I.31" => P23Strategy::ALL.iter().map(|s| s.name()).collect(),
        "I.42" => P42Strategy::ALL.iter().map(|s| s.name()).collect(),
        "I.44" => P44Strategy::ALL.iter().map(|s| s.name()).collect(),
        "I.46" => P46Strategy::ALL.iter().map(|s| s.name()).collect(),
        _ => vec!["euclid"],
    })
}

/// Splits `I.44.chester` into `("I.44", Some("chester"))`.
pub fn split_id(id: &str) -> Result<(&'static str, Option<&str>)> {
    for (known, _) in PROPOSITIONS {
        if let Some(rest) = id.strip_prefix(known) {
            if rest.is_empty() {
                return Ok((known, None));
            }
            if let Some(suffix) = rest.strip_prefix('.') {
                return Ok((known, Some(suffix)));
            }
        }
    }
    Err(Error::UnknownProposition(id.to_string()))
}

fn shape_error(id: &str, want: &str, inst: &Instance) -> Error {
    Error::PreconditionViolated(format!(
        "{id} takes {want}, got [{}]",
        inst.kinds().join(", ")
    ))
}

/// Runs the construction `id` on `inst`. The strategy comes from the
/// identifier's suffix or from `strategy`; Euclid's is the default.
pub fn run(id: &str, strategy: Option<&str>, inst: &Instance) -> Result<PropositionResult> {
    let (base, suffix) = split_id(id)?;
    let strategy = match (suffix, strategy) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::UnknownStrategy(format!("{a} conflicts with {b}")))
        }
        (s, None) | (None, s) => s,
        (Some(a), Some(_)) => Some(a),
    };
    if base != "I.23" && base != "I.31" && base != "I.42" && base != "I.44" && base != "I.46" {
        if let Some(s) = strategy.filter(|s| *s != "euclid") {
            return Err(Error::UnknownStrategy(s.to_string()));
        }
    }
    let side = inst.side;
    let objs = inst.objects.as_slice();
    let bad = |want: &str| shape_error(base, want, inst);
    match base {
        "I.1" => match objs {
            [Object::Segment(s)] => p1(s, side),
            _ => Err(bad("a segment")),
        },
        "I.2" => match objs {
            [Object::Point(a), Object::Segment(s)] => p2(a, s),
            _ => Err(bad("a point and a segment")),
        },
        "I.3" => match objs {
            [Object::Segment(g), Object::Segment(l)] => p3(g, l),
            [Object::Ray(r), Object::Segment(l)] => cut_on_ray(r, l),
            _ => Err(bad("two segments, or a ray and a segment")),
        },
        "I.9" => match objs {
            [Object::Angle(a)] => p9(a),
            _ => Err(bad("an angle")),
        },
        "I.10" => match objs {
            [Object::Segment(s)] => p10(s),
            _ => Err(bad("a segment")),
        },
        "I.11" => match objs {
            [Object::Line(l), Object::Point(p)] => p11(l, p, side),
            _ => Err(bad("a line and a point on it")),
        },
        "I.12" => match objs {
            [Object::Line(l), Object::Point(p)] => p12(l, p),
            _ => Err(bad("a line and a point off it")),
        },
        "I.22" => match objs {
            [Object::Segment(a), Object::Segment(b), Object::Segment(c), Object::Ray(r)] => {
                p22([a, b, c], r, side)
            }
            _ => Err(bad("three segments and a ray")),
        },
        "I.23" => {
            let s = parse(strategy, P23Strategy::Euclid)?;
            match objs {
                [Object::Ray(r), Object::Angle(a)] => p23(r, a, side, s),
                _ => Err(bad("a ray and an angle")),
            }
        }
        "I.31" => {
            let s = parse(strategy, P23Strategy::Euclid)?;
            match objs {
                [Object::Point(p), Object::Line(l)] => p31_with(p, l, s),
                _ => Err(bad("a point and a line")),
            }
        }
        "I.42" => {
            let s = parse(strategy, P42Strategy::Euclid)?;
            match objs {
                [Object::Figure(t), Object::Angle(d)] => p42(t, d, s),
                [Object::Figure(t), Object::Angle(d), Object::Ray(r)] => {
                    if s != P42Strategy::Euclid {
                        return Err(Error::UnknownStrategy(format!("{s} with a ray")));
                    }
                    p42_on_ray(t, d, r, side)
                }
                _ => Err(bad("a triangle and an angle, optionally a ray")),
            }
        }
        "I.43" => match objs {
            [Object::Figure(f), Object::Point(k)] => p43_complements(f, k),
            _ => Err(bad("a parallelogram and a point on its diameter")),
        },
        "I.44" => {
            let s = parse(strategy, P44Strategy::EuclidSuperposition)?;
            match objs {
                [Object::Segment(ab), Object::Figure(t), Object::Angle(d)] => p44(ab, t, d, side, s),
                _ => Err(bad("a segment, a triangle and an angle")),
            }
        }
        "I.45" => match objs {
            [Object::Figure(f), Object::Angle(d)] => p45(d, f),
            _ => Err(bad("a figure and an angle")),
        },
        "I.46" => {
            let s = parse(strategy, P46Strategy::CampanusFirst)?;
            match objs {
                [Object::Segment(ab)] => p46(ab, side, s),
                _ => Err(bad("a segment")),
            }
        }
        _ => Err(Error::UnknownProposition(id.to_string())),
    }
}

fn parse<S: std::str::FromStr<Err = Error>>(name: Option<&str>, default: S) -> Result<S> {
    match name {
        None | Some("euclid") => Ok(default),
        Some(n) => n.parse(),
    }
}
