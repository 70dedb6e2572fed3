//! The acceptance criteria, one verdict line each.
//!
//! Runs without the test harness so the lines are always printed; exits
//! nonzero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dashu_int::ops::SquareRoot;
use dashu_int::{IBig, UBig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use euclid_elements::dsl;
use euclid_elements::elements::{p44, run, Instance, P44Strategy};
use euclid_elements::geom::{signed_area, Angle, Figure, Object, Point, Segment, Side};
use euclid_elements::number::Constructible as Num;
use euclid_elements::render::{render_result, RenderOptions};
use euclid_elements::verify::{run_suite, THEOREM_ROW};
use euclid_elements::Sign;

const SEED: u64 = 7;

fn p(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

type Verdict = Result<String, String>;

fn check(ok: bool, detail: impl Into<String>) -> Verdict {
    if ok {
        Ok(detail.into())
    } else {
        Err(detail.into())
    }
}

fn c1_area_example() -> Verdict {
    let six = signed_area(&Figure::new(vec![p(0, 0), p(3, 0), p(0, 4)]).map_err(|e| e.to_string())?);
    let five = signed_area(&Figure::new(vec![p(0, 0), p(5, 0), p(0, 2)]).map_err(|e| e.to_string())?);
    check(
        six == Num::from_int(6) && five == Num::from_int(5),
        format!("legs 3,4 give {six}; legs 5,2 give {five}"),
    )
}

fn c2_breadth_three() -> Verdict {
    let ab = Segment::new(p(0, 0), p(4, 0)).unwrap();
    // content 12, listed apex first; the apex stands over the midpoint of
    // the base, so the median meets the base at right angles
    let t = Figure::new(vec![p(3, 4), p(0, 0), p(6, 0)]).unwrap();
    let right = Angle::new(p(1, 0), p(0, 0), p(0, 1)).unwrap();
    let mut seen = Vec::new();
    for s in P44Strategy::ALL {
        let r = p44(&ab, &t, &right, Side::Left, *s).map_err(|e| format!("{s}: {e}"))?;
        let m = r.point("M").ok_or(format!("{s}: no M"))?;
        let breadth_sq = m.dist_sq(&ab.a);
        if breadth_sq != Num::from_int(9) || !r.passed() {
            return Err(format!("{s}: breadth squared {breadth_sq}"));
        }
        seen.push(s.name());
    }
    check(true, format!("breadth exactly 3 for {}", seen.join(", ")))
}

/// A star-shaped polygon with `n` lattice vertices about the origin, one in
/// each of `n` equal sectors. Gaps between neighbouring directions stay under
/// a half turn, so the polygon is simple.
fn star(rng: &mut ChaCha8Rng, n: usize) -> Figure {
    let pts = (0..n)
        .map(|k| {
            let theta = 2.0 * PI * (k as f64 + rng.gen_range(0.4..0.6)) / n as f64;
            let r = rng.gen_range(10.0..20.0);
            p((r * theta.cos()).round() as i64, (r * theta.sin()).round() as i64)
        })
        .collect();
    Figure::new(pts).unwrap()
}

fn triangles(f: Figure) -> Result<usize, String> {
    let d = Object::Angle(Angle::new(p(1, 0), p(0, 0), p(1, 2)).unwrap());
    let r = run("I.45", None, &Instance::new(vec![Object::Figure(f), d])).map_err(|e| e.to_string())?;
    if !r.passed() {
        return Err("a postcondition failed".into());
    }
    r.verification
        .iter()
        .find_map(|c| c.text.strip_prefix("triangles: ").and_then(|n| n.parse().ok()))
        .ok_or_else(|| "no triangle count".into())
}

fn c3_triangulation() -> Verdict {
    let decagon = Figure::new(vec![
        p(0, 0),
        p(4, 0),
        p(5, 2),
        p(7, 1),
        p(8, 4),
        p(6, 6),
        p(4, 5),
        p(2, 7),
        p(0, 5),
        p(1, 3),
    ])
    .unwrap();
    let ten = triangles(decagon)?;
    if ten != 8 {
        return Err(format!("decagon gave {ten} triangles"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in 3..=10 {
        let got = triangles(star(&mut rng, n))?;
        if got != n - 2 {
            return Err(format!("{n}-gon gave {got} triangles"));
        }
    }
    check(true, "decagon 8; random 3- to 10-gons n - 2")
}

fn c4_superposition_ledger() -> Verdict {
    let mut parts = Vec::new();
    for (name, expected) in [
        ("euclid_superposition", 1),
        ("alnayrizi", 0),
        ("robert_of_chester", 0),
        ("campanus", 0),
    ] {
        let r = run_suite(&format!("I.44.{name}"), 100, SEED).map_err(|e| e.to_string())?;
        let row = r.row(name).ok_or(format!("no row {name}"))?;
        // each of the 100 instances contributes exactly `expected`
        let exact = row.passed == 100
            && row.superpositions == 100 * expected
            && row.superposing_instances == 100 * expected;
        if !exact {
            return Err(format!(
                "{name}: {} passed, {} superpositions over {} instances",
                row.passed, row.superpositions, row.superposing_instances
            ));
        }
        parts.push(format!("{name} {expected}"));
    }
    check(true, format!("per instance: {}", parts.join(", ")))
}

const CONSTRUCTIONS: [&str; 16] = [
    "I.1", "I.2", "I.3", "I.9", "I.10", "I.11", "I.12", "I.22", "I.23", "I.31", "I.42", "I.43", "I.44", "I.45",
    "I.46", "I.42.alnayrizi",
];

fn c5_construction_suites() -> Verdict {
    let mut runs = 0;
    for id in CONSTRUCTIONS {
        if id == "I.42.alnayrizi" {
            // covered by the I.42 suite, which runs both strategies
            continue;
        }
        let r = run_suite(id, 100, SEED).map_err(|e| e.to_string())?;
        for row in r.rows.iter().filter(|row| row.strategy != THEOREM_ROW) {
            let applicable = 100 - row.inapplicable;
            if row.passed != applicable || !row.failures.is_empty() || applicable == 0 {
                return Err(format!("{id} {}: {}/{applicable}", row.strategy, row.passed));
            }
            runs += 1;
        }
    }
    check(true, format!("{runs} strategy suites of 100, all exact"))
}

const THEOREMS: [&str; 15] = [
    "I.13", "I.15", "I.27", "I.28", "I.29", "I.30", "I.32", "I.33", "I.34", "I.35", "I.36", "I.37", "I.38", "I.41",
    "I.43",
];

fn c6_theorem_suites() -> Verdict {
    for id in THEOREMS {
        let r = run_suite(id, 100, SEED).map_err(|e| e.to_string())?;
        let row = r.row(THEOREM_ROW).ok_or(format!("{id}: no theorem row"))?;
        if row.passed != 100 {
            return Err(format!("{id}: {}/100", row.passed));
        }
    }
    check(true, format!("{} theorems, 100 instances each", THEOREMS.len()))
}

/// Interval oracle: values as `[lo, hi] / 10^100` with integer endpoints.
#[derive(Clone)]
struct Iv {
    lo: IBig,
    hi: IBig,
}

fn scale() -> IBig {
    IBig::from(10u8).pow(100)
}

fn div_floor(a: &IBig, b: &IBig) -> IBig {
    let (q, r) = (a / b, a % b);
    if r != IBig::ZERO && ((r < IBig::ZERO) != (*b < IBig::ZERO)) {
        q - IBig::ONE
    } else {
        q
    }
}

fn div_ceil(a: &IBig, b: &IBig) -> IBig {
    -div_floor(&-a, b)
}

fn isqrt_floor(a: &IBig) -> IBig {
    if *a <= IBig::ZERO {
        return IBig::ZERO;
    }
    let u = UBig::try_from(a.clone()).unwrap();
    IBig::from(u.sqrt())
}

fn isqrt_ceil(a: &IBig) -> IBig {
    let f = isqrt_floor(a);
    if &(&f * &f) == a {
        f
    } else {
        f + IBig::ONE
    }
}

impl Iv {
    fn rational(n: i64, d: i64) -> Iv {
        let s = scale();
        let (n, d) = (IBig::from(n) * &s, IBig::from(d));
        Iv {
            lo: div_floor(&n, &d),
            hi: div_ceil(&n, &d),
        }
    }

    fn add(&self, o: &Iv) -> Iv {
        Iv {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn sub(&self, o: &Iv) -> Iv {
        Iv {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    fn mul(&self, o: &Iv) -> Iv {
        let s = scale();
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        Iv {
            lo: c.iter().map(|x| div_floor(x, &s)).min().unwrap(),
            hi: c.iter().map(|x| div_ceil(x, &s)).max().unwrap(),
        }
    }

    fn sqrt(&self) -> Iv {
        let s = scale();
        Iv {
            lo: isqrt_floor(&(&self.lo * &s)),
            hi: isqrt_ceil(&(&self.hi * &s)),
        }
    }

    fn sign(&self) -> Option<Sign> {
        if self.lo > IBig::ZERO {
            Some(Sign::Positive)
        } else if self.hi < IBig::ZERO {
            Some(Sign::Negative)
        } else {
            None
        }
    }
}

/// A random expression of radical depth at most `depth`, exactly and as
/// an interval.
fn expr(rng: &mut ChaCha8Rng, depth: u32) -> (Num, Iv) {
    let leaf = |rng: &mut ChaCha8Rng| {
        let (n, d) = (rng.gen_range(-20..=20), rng.gen_range(1..=9));
        (Num::ratio(n, d), Iv::rational(n, d))
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..4) {
        0 => {
            let (a, ai) = expr(rng, depth);
            let (b, bi) = leaf(rng);
            (&a + &b, ai.add(&bi))
        }
        1 => {
            let (a, ai) = expr(rng, depth - 1);
            let (b, bi) = expr(rng, depth);
            (&a - &b, ai.sub(&bi))
        }
        2 => {
            let (a, ai) = expr(rng, depth - 1);
            let (b, bi) = expr(rng, depth - 1);
            (&a * &b, ai.mul(&bi))
        }
        _ => {
            // a radicand that is positive by construction: q + e^2
            let (e, ei) = expr(rng, depth - 1);
            let (q, qi) = {
                let (n, d) = (rng.gen_range(1..=20), rng.gen_range(1..=9));
                (Num::ratio(n, d), Iv::rational(n, d))
            };
            let r = &q + &(&e * &e);
            let ri = qi.add(&ei.mul(&ei));
            (r.sqrt_nonneg().expect("positive radicand"), ri.sqrt())
        }
    }
}

fn c7_oracle() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut decided, mut deepest) = (0, 0);
    for i in 0..10_000 {
        let depth = rng.gen_range(1..=3);
        // differences of two expressions so that signs are not all alike
        let (a, ai) = expr(&mut rng, depth);
        let (b, bi) = expr(&mut rng, depth);
        let (x, xi) = (&a - &b, ai.sub(&bi));
        deepest = deepest.max(x.radical_depth());
        if x.radical_depth() > 3 {
            return Err(format!("expression {i} has depth {}", x.radical_depth()));
        }
        if let Some(s) = xi.sign() {
            decided += 1;
            if x.sign() != s {
                return Err(format!("expression {i}: exact sign {} but oracle {s}", x.sign()));
            }
        }
    }
    for i in 0..1_000 {
        let a = Num::ratio(rng.gen_range(1..=400), rng.gen_range(1..=20));
        let b = Num::ratio(rng.gen_range(1..=400), rng.gen_range(1..=20));
        let ra = a.sqrt_nonneg().unwrap();
        let rb = b.sqrt_nonneg().unwrap();
        let inner = &(&a + &b) + &(&(&a * &b).sqrt_nonneg().unwrap()).scale(2, 1);
        let z = &(&ra + &rb) - &inner.sqrt_nonneg().unwrap();
        if z.sign() != Sign::Zero {
            return Err(format!("zero family member {i} has sign {}", z.sign()));
        }
    }
    check(
        decided > 9_000,
        format!("{decided}/10000 decided by the oracle, all agree (max depth {deepest}); 1000 zero-family members give 0"),
    )
}

fn c8_determinism() -> Verdict {
    let script = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/i44.euc")).unwrap();
    let once = || -> Result<(String, String, Vec<u8>), String> {
        let out = dsl::run(&script).map_err(|d| format!("{d:?}"))?;
        let report = run_suite("I.23", 30, SEED).map_err(|e| e.to_string())?;
        let svg = render_result(&out.to_result(), &RenderOptions::default()).map_err(|e| e.to_string())?;
        Ok((out.trace.to_text(), report.to_string() + &report.records(), svg))
    };
    let (a, b) = (once()?, once()?);
    check(a == b, "trace, suite report and SVG byte-identical across two runs")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict, Duration); 8] = [
        ("area example", c1_area_example, Duration::from_secs(1)),
        ("application breadth", c2_breadth_three, Duration::from_secs(1)),
        ("triangulation count", c3_triangulation, Duration::from_secs(1)),
        ("superposition ledger", c4_superposition_ledger, Duration::from_secs(10)),
        ("construction suites", c5_construction_suites, Duration::from_secs(60)),
        ("theorem validators", c6_theorem_suites, Duration::from_secs(30)),
        ("number oracle", c7_oracle, Duration::from_secs(60)),
        ("determinism", c8_determinism, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f();
        let took = start.elapsed();
        let (ok, detail) = match verdict {
            Ok(d) => (took <= *budget, d),
            Err(d) => (false, d),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {}: {} {name}: {detail} [{:.2}s of {}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
