//! Deterministic SVG figures.
//!
//! Points are written with six fractional digits straight from the exact
//! values, in a viewBox whose y axis points up. Given objects are drawn in
//! black, results in red, and the auxiliary circles and produced lines of
//! the construction dashed in grey. Every labeled point gets exactly one
//! text element, placed northeast of the point and moved clockwise around
//! it while it would overlap an earlier label.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::elements::{Named, PropositionResult, Role, StepKind};
use crate::error::{Error, Result};
use crate::geom::{Object, Point};
use crate::number::Constructible as Num;

/// Output settings.
#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Width of the drawing in pixels; the height follows the figure.
    pub width: u32,
    /// Fraction of the figure's larger extent added on every side.
    pub margin: f64,
    /// Draw point labels.
    pub labels: bool,
    /// Text of the `<title>` element, if any.
    pub title: Option<String>,
}

impl Default for RenderOptions {
    fn default() -> RenderOptions {
        RenderOptions {
            width: 600,
            margin: 0.05,
            labels: true,
            title: None,
        }
    }
}

/// The objects of a result together with the top-level construction:
/// circles and produced lines as auxiliaries, joined lines, and every
/// labeled point.
pub fn scene(r: &PropositionResult) -> Vec<Named> {
    let mut out = r.objects.clone();
    let aux = |name: String, object: Object| Named {
        name,
        object,
        role: Role::Auxiliary,
    };
    for (label, p) in &r.trace.given {
        out.push(aux(label.clone(), Object::Point(p.clone())));
    }
    for step in &r.trace.steps {
        match (&step.kind, &step.object) {
            (StepKind::Join | StepKind::Extend | StepKind::Circle { .. }, Some(o)) => {
                out.push(aux(step.outputs.first().cloned().unwrap_or_default(), o.clone()));
            }
            _ => {
                for (label, p) in step.outputs.iter().zip(&step.points) {
                    out.push(aux(label.clone(), Object::Point(p.clone())));
                }
            }
        }
    }
    out
}

/// `render(&scene(r), opts)`.
pub fn render_result(r: &PropositionResult, opts: &RenderOptions) -> Result<Vec<u8>> {
    render(&scene(r), opts)
}

struct Frame {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Frame {
    fn size(&self) -> f64 {
        (self.max_x - self.min_x).max(self.max_y - self.min_y)
    }

    /// Clips the line through `p` with direction `d` to the frame, from
    /// parameter `t0` on (`-inf` for a whole line).
    fn clip(&self, p: (f64, f64), d: (f64, f64), t0: f64) -> Option<((f64, f64), (f64, f64))> {
        let (mut lo, mut hi) = (t0, f64::INFINITY);
        for (pc, dc, min, max) in [(p.0, d.0, self.min_x, self.max_x), (p.1, d.1, self.min_y, self.max_y)] {
            if dc == 0.0 {
                if pc < min || pc > max {
                    return None;
                }
                continue;
            }
            let (a, b) = ((min - pc) / dc, (max - pc) / dc);
            lo = lo.max(a.min(b));
            hi = hi.min(a.max(b));
        }
        (lo <= hi).then(|| ((p.0 + lo * d.0, p.1 + lo * d.1), (p.0 + hi * d.0, p.1 + hi * d.1)))
    }
}

fn xy(p: &Point) -> (f64, f64) {
    (p.x.to_f64(), p.y.to_f64())
}

/// Exact coordinate with six digits, y flipped.
fn coord_x(v: &Num) -> String {
    v.approx(6)
}

fn coord_y(v: &Num) -> String {
    (-v).approx(6)
}

fn f(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn frame(objects: &[Named]) -> Option<Frame> {
    let mut fr = Frame {
        min_x: f64::INFINITY,
        min_y: f64::INFINITY,
        max_x: f64::NEG_INFINITY,
        max_y: f64::NEG_INFINITY,
    };
    let mut take = |x: f64, y: f64| {
        fr.min_x = fr.min_x.min(x);
        fr.max_x = fr.max_x.max(x);
        fr.min_y = fr.min_y.min(y);
        fr.max_y = fr.max_y.max(y);
    };
    for n in objects {
        match &n.object {
            Object::Circle(c) => {
                let (x, y) = xy(&c.center);
                let r = c.radius().to_f64();
                take(x - r, y - r);
                take(x + r, y + r);
            }
            o => {
                for p in o.points() {
                    let (x, y) = xy(p);
                    take(x, y);
                }
            }
        }
    }
    if !fr.min_x.is_finite() {
        return None;
    }
    if fr.size() == 0.0 {
        fr.min_x -= 0.5;
        fr.max_x += 0.5;
        fr.min_y -= 0.5;
        fr.max_y += 0.5;
    }
    Some(fr)
}

fn class(role: Role, aux_dashed: bool) -> &'static str {
    match role {
        Role::Given => "given",
        Role::Result => "result",
        Role::Auxiliary if aux_dashed => "aux",
        Role::Auxiliary => "construction",
    }
}

fn rank(role: Role) -> u8 {
    match role {
        Role::Result => 0,
        Role::Given => 1,
        Role::Auxiliary => 2,
    }
}

/// The SVG document for `objects`.
pub fn render(objects: &[Named], opts: &RenderOptions) -> Result<Vec<u8>> {
    let mut fr = frame(objects).ok_or(Error::NothingToRender)?;
    let pad = fr.size() * opts.margin;
    fr.min_x -= pad;
    fr.min_y -= pad;
    fr.max_x += pad;
    fr.max_y += pad;
    let (w, h) = (fr.max_x - fr.min_x, fr.max_y - fr.min_y);
    let unit = fr.size() / 300.0;
    let px_h = (f64::from(opts.width) * h / w).round().max(1.0);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        opts.width,
        px_h,
        f(fr.min_x),
        f(-fr.max_y),
        f(w),
        f(h)
    );
    if let Some(t) = &opts.title {
        let _ = writeln!(svg, "<title>{}</title>", escape(t));
    }
    let _ = writeln!(
        svg,
        "<style>.given{{stroke:#000;stroke-width:{sw};fill:none}} \
         .result{{stroke:#b22222;stroke-width:{rw};fill:none}} \
         .construction{{stroke:#555;stroke-width:{sw};fill:none}} \
         .aux{{stroke:#888;stroke-width:{sw};stroke-dasharray:{da},{da};fill:none}} \
         text{{font-family:serif;font-size:{fs}px;fill:#000}}</style>",
        sw = f(unit),
        rw = f(unit * 1.6),
        da = f(unit * 4.0),
        fs = f(unit * 12.0),
    );

    // straight pieces are drawn once, by their most prominent role
    let mut segments: BTreeMap<(Point, Point), Role> = BTreeMap::new();
    let mut body = String::new();
    let mut points: BTreeMap<String, Point> = BTreeMap::new();
    for n in objects {
        match &n.object {
            Object::Point(p) => {
                if !n.name.is_empty() {
                    points.entry(n.name.clone()).or_insert_with(|| p.clone());
                }
            }
            Object::Segment(s) => {
                let key = if s.a <= s.b { (s.a.clone(), s.b.clone()) } else { (s.b.clone(), s.a.clone()) };
                let e = segments.entry(key).or_insert(n.role);
                if rank(n.role) < rank(*e) {
                    *e = n.role;
                }
            }
            Object::Circle(c) => {
                let _ = writeln!(
                    body,
                    r#"<circle class="{}" cx="{}" cy="{}" r="{}"/>"#,
                    class(n.role, true),
                    coord_x(&c.center.x),
                    coord_y(&c.center.y),
                    c.radius().approx(6)
                );
            }
            Object::Line(l) => {
                let (p, q) = (xy(&l.p), xy(&l.q));
                if let Some((a, b)) = fr.clip(p, (q.0 - p.0, q.1 - p.1), f64::NEG_INFINITY) {
                    line(&mut body, class(n.role, true), a, b);
                }
            }
            Object::Ray(r) => {
                let (p, q) = (xy(&r.origin), xy(&r.through));
                if let Some((a, b)) = fr.clip(p, (q.0 - p.0, q.1 - p.1), 0.0) {
                    line(&mut body, class(n.role, true), a, b);
                }
            }
            Object::Angle(a) => {
                let _ = writeln!(
                    body,
                    r#"<path class="{}" d="M {} {} L {} {} L {} {}"/>"#,
                    class(n.role, false),
                    coord_x(&a.arm1.x),
                    coord_y(&a.arm1.y),
                    coord_x(&a.vertex.x),
                    coord_y(&a.vertex.y),
                    coord_x(&a.arm2.x),
                    coord_y(&a.arm2.y)
                );
            }
            Object::Figure(fig) => {
                let mut d = String::new();
                for (i, v) in fig.vertices.iter().enumerate() {
                    let _ = write!(d, "{} {} {} ", if i == 0 { "M" } else { "L" }, coord_x(&v.x), coord_y(&v.y));
                }
                d.push('Z');
                let _ = writeln!(body, r#"<path class="{}" d="{}"/>"#, class(n.role, false), d);
            }
        }
    }
    for ((a, b), role) in &segments {
        let _ = writeln!(
            body,
            r#"<line class="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            class(*role, false),
            coord_x(&a.x),
            coord_y(&a.y),
            coord_x(&b.x),
            coord_y(&b.y)
        );
    }
    svg.push_str(&body);

    let mut placed: Vec<(f64, f64, f64, f64)> = Vec::new();
    for (name, p) in &points {
        if opts.labels {
            let (x, y) = xy(p);
            let (lx, ly) = place_label(name, (x, -y), unit, &mut placed);
            let _ = writeln!(svg, r#"<text x="{}" y="{}">{}</text>"#, f(lx), f(ly), escape(name));
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg.into_bytes())
}

fn line(out: &mut String, class: &str, a: (f64, f64), b: (f64, f64)) {
    let _ = writeln!(
        out,
        r#"<line class="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        class,
        f(a.0),
        f(-a.1),
        f(b.0),
        f(-b.1)
    );
}

/// Baseline position of a label at screen point `p`: northeast first, then
/// clockwise in eighth turns until it overlaps no earlier label.
fn place_label(name: &str, p: (f64, f64), unit: f64, placed: &mut Vec<(f64, f64, f64, f64)>) -> (f64, f64) {
    let fs = unit * 12.0;
    let (bw, bh) = (fs * 0.6 * name.chars().count() as f64, fs);
    let gap = unit * 3.0;
    // offsets of the box's lower-left corner, northeast then clockwise
    let offsets = [
        (gap, -gap),
        (gap, bh / 2.0),
        (gap, bh + gap),
        (-bw / 2.0, bh + gap),
        (-bw - gap, bh + gap),
        (-bw - gap, bh / 2.0),
        (-bw - gap, -gap),
        (-bw / 2.0, -gap),
    ];
    let boxed = |(dx, dy): (f64, f64)| (p.0 + dx, p.1 + dy - bh, p.0 + dx + bw, p.1 + dy);
    let overlaps = |b: &(f64, f64, f64, f64)| {
        placed
            .iter()
            .any(|o| b.0 < o.2 && o.0 < b.2 && b.1 < o.3 && o.1 < b.3)
    };
    let choice = offsets
        .iter()
        .copied()
        .find(|&o| !overlaps(&boxed(o)))
        .unwrap_or(offsets[0]);
    let b = boxed(choice);
    placed.push(b);
    (b.0, b.3)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
