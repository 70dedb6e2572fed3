//! The Book I catalog: constructions that record how they were made, and
//! exact validators for the theorems.
//!
//! Every construction runs inside a [`Ctx`], which hands out labeled points
//! and appends one [`Step`] per postulate use, intersection pick, rigid
//! motion or call to an earlier proposition. The finished [`Trace`] is part
//! of the [`PropositionResult`] together with the exact checks of the
//! proposition's conclusion.

mod area;
mod basic;
mod checks;
mod catalog;
mod theorems;
mod trace;
mod triangles;

use std::fmt;

use crate::error::{Error, Result};
use crate::geom::Object;
use crate::number::Constructible as Num;

pub use area::{
    p42, p42_on_ray, p43_complements, p44, p45, p46, P42Strategy, P44Strategy, P46Strategy,
};
pub use basic::{cut_on_ray, p1, p10, p11, p12, p2, p3, p31, p31_with, p9};
pub use catalog::{run, split_id, strategies, Instance, PROPOSITIONS};
pub use theorems::{check_theorem, Bundle, THEOREMS};
pub use trace::{Counts, Ctx, Curve, CurveRef, Dir, Pick, Pt, Step, StepKind, Trace};
pub use triangles::{p22, p22_lengths, p23, place_triangle_on_ray, P23Strategy};

/// How a named object figures in a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Given,
    Auxiliary,
    Result,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Named {
    pub name: String,
    pub object: Object,
    pub role: Role,
}

/// What a claim's residual must satisfy for the claim to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Zero,
    Positive,
}

/// One exactly checked statement together with its residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub text: String,
    pub expect: Expect,
    pub residual: Num,
}

impl Claim {
    pub fn zero(text: impl Into<String>, residual: Num) -> Claim {
        Claim {
            text: text.into(),
            expect: Expect::Zero,
            residual,
        }
    }

    pub fn positive(text: impl Into<String>, residual: Num) -> Claim {
        Claim {
            text: text.into(),
            expect: Expect::Positive,
            residual,
        }
    }

    /// A yes/no fact, encoded with residual 0 when it holds.
    pub fn fact(text: impl Into<String>, holds: bool) -> Claim {
        Claim::zero(text, Num::from_int(if holds { 0 } else { 1 }))
    }

    pub fn holds(&self) -> bool {
        match self.expect {
            Expect::Zero => self.residual.is_zero(),
            Expect::Positive => self.residual.is_positive(),
        }
    }
}

/// `PASS`/`FAIL`, the claim, then the residual.
impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds() { "PASS" } else { "FAIL" };
        let rel = match self.expect {
            Expect::Zero => "=",
            Expect::Positive => ">",
        };
        write!(
            f,
            "{verdict} {} :: residual {} 0 :: {}",
            self.text, rel, self.residual
        )
    }
}

/// Exact checks of a theorem's conclusion on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub theorem: String,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(Claim::holds)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem {}", self.theorem)?;
        for c in &self.claims {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The outcome of a construction.
#[derive(Clone, Debug)]
pub struct PropositionResult {
    pub id: String,
    pub objects: Vec<Named>,
    pub trace: Trace,
    pub verification: Vec<Claim>,
}

impl PropositionResult {
    pub(crate) fn new(id: &str, trace: Trace) -> PropositionResult {
        PropositionResult {
            id: id.to_string(),
            objects: Vec::new(),
            trace,
            verification: Vec::new(),
        }
    }

    pub(crate) fn with(mut self, name: &str, object: Object, role: Role) -> Self {
        self.objects.push(Named {
            name: name.to_string(),
            object,
            role,
        });
        self
    }

    pub(crate) fn claim(mut self, c: Claim) -> Self {
        self.verification.push(c);
        self
    }

    pub(crate) fn claims(mut self, cs: Vec<Claim>) -> Self {
        self.verification.extend(cs);
        self
    }

    /// Fails with [`Error::PostconditionFailed`] naming the first failed claim.
    pub(crate) fn checked(self) -> Result<Self> {
        if let Some(bad) = self.verification.iter().find(|c| !c.holds()) {
            return Err(Error::PostconditionFailed(format!(
                "{}: {}",
                self.id, bad
            )));
        }
        Ok(self)
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|n| n.name == name).map(|n| &n.object)
    }

    pub fn point(&self, name: &str) -> Option<&crate::geom::Point> {
        match self.get(name) {
            Some(Object::Point(p)) => Some(p),
            _ => None,
        }
    }

    pub fn figure(&self, name: &str) -> Option<&crate::geom::Figure> {
        match self.get(name) {
            Some(Object::Figure(f)) => Some(f),
            _ => None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verification.iter().all(Claim::holds)
    }

    /// The line-oriented verification report.
    pub fn report(&self) -> String {
        let mut out = format!("proposition {}\n", self.id);
        for c in &self.verification {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}
