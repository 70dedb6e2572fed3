//! Postcondition suites over random instances, and side-by-side comparison
//! of the strategies a construction admits.
//!
//! Every check is exact: an instance passes only if each residual has the
//! required sign. Instance `i` of a suite is drawn from its own stream of
//! the seeded generator, and instances run in parallel, so reports do not
//! depend on the order in which instances finish.

mod instances;

use std::fmt;

use rand::SeedableRng;
use rayon::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::elements::{
    check_theorem, run, split_id, strategies, Claim, Counts, Instance, Role, PROPOSITIONS,
    THEOREMS,
};
use crate::error::{Error, Result};
use crate::geom::Point;

use instances::Gen;

/// Label of the row that checks a theorem's conclusion.
pub const THEOREM_ROW: &str = "theorem";

/// Largest figure the I.45 suite draws.
pub const MAX_POLYGON_SIDES: usize = 8;

/// One instance that did not pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: usize,
    pub message: String,
}

/// The outcome of one strategy (or of a theorem's conclusion) over a suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteRow {
    pub strategy: String,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub inapplicable: usize,
    /// Totals over the passing instances.
    pub joins: usize,
    pub extends: usize,
    pub circles: usize,
    pub superpositions: usize,
    /// Instances whose trace used at least one superposition.
    pub superposing_instances: usize,
    pub max_radical_depth: u32,
}

impl SuiteRow {
    fn new(strategy: &str) -> SuiteRow {
        SuiteRow {
            strategy: strategy.to_string(),
            ..SuiteRow::default()
        }
    }

    fn tally(&mut self, c: &Counts) {
        self.joins += c.joins;
        self.extends += c.extends;
        self.circles += c.circles;
        self.superpositions += c.superpositions;
        self.superposing_instances += usize::from(c.superpositions > 0);
        self.max_radical_depth = self.max_radical_depth.max(c.max_radical_depth);
    }

    pub fn runs(&self) -> usize {
        self.passed + self.failures.len() + self.inapplicable
    }
}

/// The report of [`run_suite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub id: String,
    pub n: usize,
    pub seed: u64,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    /// No instance failed a postcondition.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.failures.is_empty())
    }

    pub fn row(&self, strategy: &str) -> Option<&SuiteRow> {
        self.rows.iter().find(|r| r.strategy == strategy)
    }

    /// One `key=value` record per row.
    pub fn records(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!(
                "kind=suite id={} seed={} n={} strategy={} passed={} failed={} inapplicable={} \
                 joins={} extends={} circles={} superpositions={} superposing_instances={} \
                 max_radical_depth={}\n",
                self.id,
                self.seed,
                self.n,
                r.strategy,
                r.passed,
                r.failures.len(),
                r.inapplicable,
                r.joins,
                r.extends,
                r.circles,
                r.superpositions,
                r.superposing_instances,
                r.max_radical_depth
            ));
        }
        out
    }
}

/// Per-strategy verdicts, failures, then a trailing metrics block.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} n={} seed={}", self.id, self.n, self.seed)?;
        for r in &self.rows {
            let verdict = if r.failures.is_empty() { "PASS" } else { "FAIL" };
            write!(f, "{verdict} {}: {}/{} passed", r.strategy, r.passed, r.runs())?;
            if r.inapplicable > 0 {
                write!(f, ", {} inapplicable", r.inapplicable)?;
            }
            writeln!(f)?;
            for x in &r.failures {
                writeln!(f, "  instance {}: {}", x.instance, x.message)?;
            }
        }
        writeln!(f, "metrics")?;
        for r in &self.rows {
            writeln!(
                f,
                "  {} joins={} extends={} circles={} superpositions={} max_radical_depth={}",
                r.strategy, r.joins, r.extends, r.circles, r.superpositions, r.max_radical_depth
            )?;
        }
        Ok(())
    }
}

/// The generator for instance `index` of a suite seeded with `seed`.
fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Runs `f` on `0..n` in parallel; results come back in index order.
fn par_map<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

/// The random instance `index` of the suite for construction `id`.
pub fn suite_instance(id: &str, strategy: &str, seed: u64, index: usize) -> Result<Instance> {
    let (base, _) = split_id(id)?;
    let mut rng = instance_rng(seed, index);
    Ok(instances::construction(&mut Gen { rng: &mut rng }, base, strategy))
}

enum Outcome {
    Pass(Counts),
    Fail(String),
    Inapplicable,
}

fn first_failure(claims: &[Claim]) -> Option<String> {
    claims.iter().find(|c| !c.holds()).map(|c| c.to_string())
}

fn construction_row(base: &str, strategy: &str, n: usize, seed: u64) -> SuiteRow {
    let outcomes = par_map(n, |i| {
        let mut rng = instance_rng(seed, i);
        let inst = instances::construction(&mut Gen { rng: &mut rng }, base, strategy);
        match run(base, Some(strategy), &inst) {
            Ok(r) => match first_failure(&r.verification) {
                None if r.trace.is_well_formed() => Outcome::Pass(r.trace.counts()),
                None => Outcome::Fail("trace refers to a label before it exists".into()),
                Some(m) => Outcome::Fail(m),
            },
            Err(Error::StrategyInapplicable { .. }) => Outcome::Inapplicable,
            Err(e) => Outcome::Fail(e.to_string()),
        }
    });
    collect(strategy, outcomes)
}

fn theorem_row(id: &str, n: usize, seed: u64) -> SuiteRow {
    let outcomes = par_map(n, |i| {
        let mut rng = instance_rng(seed, i);
        let bundle = instances::theorem(&mut Gen { rng: &mut rng }, id);
        match check_theorem(id, &bundle) {
            Ok(r) => match first_failure(&r.claims) {
                None => Outcome::Pass(Counts::default()),
                Some(m) => Outcome::Fail(m),
            },
            Err(e) => Outcome::Fail(e.to_string()),
        }
    });
    collect(THEOREM_ROW, outcomes)
}

fn collect(strategy: &str, outcomes: Vec<Outcome>) -> SuiteRow {
    let mut row = SuiteRow::new(strategy);
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            Outcome::Pass(c) => {
                row.passed += 1;
                row.tally(&c);
            }
            Outcome::Fail(message) => row.failures.push(Failure { instance: i, message }),
            Outcome::Inapplicable => row.inapplicable += 1,
        }
    }
    row
}

fn is_theorem(id: &str) -> bool {
    THEOREMS.iter().any(|(t, _)| *t == id)
}

/// Runs `n` random instances of `id` and checks every postcondition.
///
/// A construction id runs every strategy it admits, or just the one named
/// by its suffix; an id that is also a theorem adds a row for the
/// theorem's conclusion.
pub fn run_suite(id: &str, n: usize, seed: u64) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    if split_id(id).is_ok() {
        let (base, suffix) = split_id(id)?;
        let names: Vec<String> = match suffix {
            Some(s) => vec![canonical_strategy(base, s)?],
            None => strategies(base)?.into_iter().map(String::from).collect(),
        };
        for s in &names {
            rows.push(construction_row(base, s, n, seed));
        }
        if suffix.is_none() && is_theorem(base) {
            rows.push(theorem_row(base, n, seed));
        }
    } else if is_theorem(id) {
        rows.push(theorem_row(id, n, seed));
    } else {
        return Err(Error::UnknownProposition(id.to_string()));
    }
    Ok(SuiteReport {
        id: id.to_string(),
        n,
        seed,
        rows,
    })
}

/// Every construction and theorem id, in catalog order.
pub fn all_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = PROPOSITIONS.iter().map(|(p, _)| *p).collect();
    for (t, _) in THEOREMS {
        if !ids.contains(t) {
            ids.push(t);
        }
    }
    ids
}

/// The full name of a strategy given by name or identifier suffix.
fn canonical_strategy(base: &str, given: &str) -> Result<String> {
    use crate::elements::{P23Strategy, P42Strategy, P44Strategy, P46Strategy};
    if given == "euclid" {
        return Ok(strategies(base)?[0].to_string());
    }
    let name = match base {
        "I.23" | "I.31" => given.parse::<P23Strategy>()?.name(),
        "I.42" => given.parse::<P42Strategy>()?.name(),
        "I.44" => given.parse::<P44Strategy>()?.name(),
        "I.46" => given.parse::<P46Strategy>()?.name(),
        _ => return Err(Error::UnknownStrategy(given.to_string())),
    };
    Ok(name.to_string())
}

/// What one strategy produced on the shared instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategyOutcome {
    Ran {
        claims: Vec<Claim>,
        counts: Counts,
        objects: usize,
        /// The result points, in canonical order without repeats.
        outputs: Vec<Point>,
    },
    Inapplicable(String),
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub strategy: String,
    pub outcome: StrategyOutcome,
}

impl ComparisonRow {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, StrategyOutcome::Ran { claims, .. } if claims.iter().all(Claim::holds))
    }

    pub fn counts(&self) -> Option<&Counts> {
        match &self.outcome {
            StrategyOutcome::Ran { counts, .. } => Some(counts),
            _ => None,
        }
    }

    pub fn outputs(&self) -> Option<&[Point]> {
        match &self.outcome {
            StrategyOutcome::Ran { outputs, .. } => Some(outputs),
            _ => None,
        }
    }
}

/// Several strategies of one construction run on the same instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub id: String,
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonReport {
    pub fn row(&self, strategy: &str) -> Option<&ComparisonRow> {
        self.rows.iter().find(|r| r.strategy == strategy)
    }

    /// Every strategy that applied met its postconditions.
    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.passed() || matches!(r.outcome, StrategyOutcome::Inapplicable(_)))
    }

    pub fn records(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!("kind=compare id={} strategy={} ", self.id, r.strategy));
            match &r.outcome {
                StrategyOutcome::Ran {
                    claims,
                    counts,
                    objects,
                    ..
                } => out.push_str(&format!(
                    "status=ran passed={} failed={} joins={} extends={} circles={} \
                     superpositions={} max_radical_depth={} objects={}\n",
                    claims.iter().filter(|c| c.holds()).count(),
                    claims.iter().filter(|c| !c.holds()).count(),
                    counts.joins,
                    counts.extends,
                    counts.circles,
                    counts.superpositions,
                    counts.max_radical_depth,
                    objects
                )),
                StrategyOutcome::Inapplicable(_) => out.push_str("status=inapplicable\n"),
                StrategyOutcome::Failed(_) => out.push_str("status=error\n"),
            }
        }
        out
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "compare {}", self.id)?;
        for r in &self.rows {
            writeln!(f, "strategy {}", r.strategy)?;
            match &r.outcome {
                StrategyOutcome::Ran { claims, .. } => {
                    for c in claims {
                        writeln!(f, "{c}")?;
                    }
                }
                StrategyOutcome::Inapplicable(m) => writeln!(f, "inapplicable: {m}")?,
                StrategyOutcome::Failed(m) => writeln!(f, "error: {m}")?,
            }
        }
        writeln!(f, "metrics")?;
        for r in &self.rows {
            if let StrategyOutcome::Ran { counts, objects, .. } = &r.outcome {
                writeln!(
                    f,
                    "  {} joins={} extends={} circles={} superpositions={} max_radical_depth={} objects={}",
                    r.strategy,
                    counts.joins,
                    counts.extends,
                    counts.circles,
                    counts.superpositions,
                    counts.max_radical_depth,
                    objects
                )?;
            }
        }
        Ok(())
    }
}

/// Runs each of `strategies` on `instance`. A strategy that does not apply,
/// or fails, is recorded in its row rather than returned as an error.
pub fn compare(id: &str, strategy_names: &[&str], instance: &Instance) -> Result<ComparisonReport> {
    let (base, _) = split_id(id)?;
    let names = strategy_names
        .iter()
        .map(|s| canonical_strategy(base, s))
        .collect::<Result<Vec<_>>>()?;
    let rows = names
        .into_iter()
        .map(|strategy| {
            let outcome = match run(base, Some(&strategy), instance) {
                Ok(r) => {
                    let mut outputs: Vec<Point> = r
                        .objects
                        .iter()
                        .filter(|o| o.role == Role::Result)
                        .flat_map(|o| o.object.points().into_iter().cloned())
                        .collect();
                    outputs.sort();
                    outputs.dedup();
                    StrategyOutcome::Ran {
                        counts: r.trace.counts(),
                        objects: r.objects.len(),
                        claims: r.verification,
                        outputs,
                    }
                }
                Err(e @ Error::StrategyInapplicable { .. }) => StrategyOutcome::Inapplicable(e.to_string()),
                Err(e) => StrategyOutcome::Failed(e.to_string()),
            };
            ComparisonRow { strategy, outcome }
        })
        .collect();
    Ok(ComparisonReport {
        id: base.to_string(),
        rows,
    })
}
