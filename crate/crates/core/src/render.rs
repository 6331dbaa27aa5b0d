//! SVG schematics: movies (panels at evenly spaced times), flares (the image
//! of a grid on `I × I`), worldlines, circle flares, and braid diagrams.
//!
//! Output is a pure function of the input and the [`RenderSpec`]. Vertex
//! coordinates are exact evaluations written at fixed precision; only the
//! circle pictures go through floating-point trigonometry.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::pl::{Ambient, PlFlow, Worldline, WorldlineComponent};
use crate::scalar::{lerp, Scalar};
use crate::strands::{crossings, sheared, StrandSet};
use crate::subset::{CompactSubset, Component};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RenderKind {
    Movie,
    Flare,
    Worldline,
    CircleFlare,
    BraidDiagram,
}

impl RenderKind {
    pub fn name(self) -> &'static str {
        match self {
            RenderKind::Movie => "movie",
            RenderKind::Flare => "flare",
            RenderKind::Worldline => "worldline",
            RenderKind::CircleFlare => "circle-flare",
            RenderKind::BraidDiagram => "braid-diagram",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "movie" => Ok(RenderKind::Movie),
            "flare" => Ok(RenderKind::Flare),
            "worldline" => Ok(RenderKind::Worldline),
            "circle-flare" => Ok(RenderKind::CircleFlare),
            "braid-diagram" => Ok(RenderKind::BraidDiagram),
            other => Err(Error::Parse(format!("unknown render kind {other:?}"))),
        }
    }
}

/// Colours used in the drawings, as SVG paint strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Style {
    pub background: String,
    pub grid: String,
    pub ink: String,
    pub shade: String,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            background: "#ffffff".into(),
            grid: "#8c8c8c".into(),
            ink: "#000000".into(),
            shade: "#c8c8c8".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub kind: RenderKind,
    /// Panels in a movie.
    pub frames: usize,
    /// Grid lines per unit.
    pub grid: usize,
    /// Side of the (square) canvas or movie panel, in pixels.
    pub canvas: u32,
    /// Decimal places in coordinates.
    pub precision: usize,
    pub style: Style,
}

impl RenderSpec {
    pub fn new(kind: RenderKind) -> Self {
        RenderSpec { kind, frames: 5, grid: 8, canvas: 400, precision: 6, style: Style::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidRenderSpec(msg.to_string()));
        if self.kind == RenderKind::Movie && self.frames < 2 {
            return bad("a movie needs at least two frames");
        }
        if self.grid < 1 {
            return bad("grid density must be at least 1");
        }
        if self.canvas < 40 {
            return bad("canvas must be at least 40 pixels");
        }
        if self.precision > 18 {
            return bad("precision above 18 digits is not supported");
        }
        Ok(())
    }

    fn margin(&self) -> i64 {
        self.canvas as i64 / 20
    }
}

/// Affine map from a box of model coordinates to pixels; `y` grows upwards
/// in the model and downwards on the page.
struct Viewport<S> {
    x_lo: S,
    x_hi: S,
    y_lo: S,
    y_hi: S,
    left: i64,
    top: i64,
    width: i64,
    height: i64,
    precision: usize,
}

impl<S: Scalar> Viewport<S> {
    fn square(spec: &RenderSpec, x: (S, S), y: (S, S)) -> Self {
        let m = spec.margin();
        let side = spec.canvas as i64 - 2 * m;
        Viewport {
            x_lo: x.0,
            x_hi: x.1,
            y_lo: y.0,
            y_hi: y.1,
            left: m,
            top: m,
            width: side,
            height: side,
            precision: spec.precision,
        }
    }

    fn px(&self, x: &S) -> String {
        let u = (x.clone() - self.x_lo.clone()) / (self.x_hi.clone() - self.x_lo.clone());
        (S::from_int(self.left) + u * S::from_int(self.width)).to_decimal(self.precision)
    }

    fn py(&self, y: &S) -> String {
        let u = (self.y_hi.clone() - y.clone()) / (self.y_hi.clone() - self.y_lo.clone());
        (S::from_int(self.top) + u * S::from_int(self.height)).to_decimal(self.precision)
    }

    fn point(&self, x: &S, y: &S) -> String {
        format!("{},{}", self.px(x), self.py(y))
    }
}

struct Svg {
    body: String,
}

impl Svg {
    fn new(width: i64, height: i64, style: &Style) -> Self {
        let mut body = String::new();
        body.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            body,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
        );
        let _ = writeln!(body, "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"{}\"/>", style.background);
        Svg { body }
    }

    fn line(&mut self, a: &str, b: &str, stroke: &str, width: &str) {
        self.polyline(&[a.to_string(), b.to_string()], stroke, width);
    }

    fn polyline(&mut self, pts: &[String], stroke: &str, width: &str) {
        let _ = writeln!(
            self.body,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{width}\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>",
            pts.join(" ")
        );
    }

    fn polygon(&mut self, pts: &[String], fill: &str) {
        let _ = writeln!(self.body, "<polygon points=\"{}\" fill=\"{fill}\" stroke=\"none\"/>", pts.join(" "));
    }

    fn dot(&mut self, at: &str, r: &str, fill: &str) {
        let (x, y) = at.split_once(',').expect("x,y pair");
        let _ = writeln!(self.body, "<circle cx=\"{x}\" cy=\"{y}\" r=\"{r}\" fill=\"{fill}\"/>");
    }

    fn ring(&mut self, cx: &str, cy: &str, r: &str, stroke: &str) {
        let _ = writeln!(
            self.body,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{r}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"1\"/>"
        );
    }

    fn text(&mut self, x: i64, y: i64, s: &str, fill: &str) {
        let _ = writeln!(
            self.body,
            "<text x=\"{x}\" y=\"{y}\" font-family=\"monospace\" font-size=\"12\" fill=\"{fill}\">{s}</text>"
        );
    }

    fn group_open(&mut self, id: &str) {
        let _ = writeln!(self.body, "<g id=\"{id}\">");
    }

    fn panel_open(&mut self, index: usize, offset: i64) {
        let _ = writeln!(self.body, "<g id=\"frame-{index}\" transform=\"translate({offset},0)\">");
    }

    fn group_close(&mut self) {
        self.body.push_str("</g>\n");
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

fn f64_text(v: f64, precision: usize) -> String {
    let s = format!("{v:.precision$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn grid_values<S: Scalar>(lo: &S, hi: &S, grid: usize) -> Vec<S> {
    (0..=grid)
        .map(|i| lerp(lo, hi, &S::from_ratio(i as i64, grid as i64)))
        .collect()
}

fn frame_times<S: Scalar>(frames: usize) -> Vec<S> {
    (0..frames).map(|i| S::from_ratio(i as i64, frames as i64 - 1)).collect()
}

/// Window shown for a movie of the given ambient.
fn window<S: Scalar>(ambient: Ambient) -> (S, S) {
    match ambient {
        Ambient::Line => (S::from_int(-2), S::from_int(3)),
        _ => (S::zero(), S::one()),
    }
}

/// Renders a flow according to `spec.kind`: a movie, a flare (interval
/// only), the worldline of `n`, or a circle flare (circle only).
pub fn render_flow<S: Scalar>(f: &PlFlow<S>, n: Option<&CompactSubset<S>>, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    match spec.kind {
        RenderKind::Movie => flow_movie(f, n, spec),
        RenderKind::Flare => {
            if f.ambient() != Ambient::Interval {
                return Err(Error::AmbientMismatch(Ambient::Interval.to_string(), f.ambient().to_string()));
            }
            flare(f, n, spec)
        }
        RenderKind::Worldline => {
            let Some(n) = n else {
                return Err(Error::InvalidRenderSpec("a worldline needs a subset".into()));
            };
            if f.ambient() != Ambient::Interval {
                return Err(Error::AmbientMismatch(Ambient::Interval.to_string(), f.ambient().to_string()));
            }
            render_worldline(&Worldline::of(f, n)?, spec)
        }
        RenderKind::CircleFlare => {
            if f.ambient() != Ambient::Circle {
                return Err(Error::AmbientMismatch(Ambient::Circle.to_string(), f.ambient().to_string()));
            }
            circle_flare(f, spec)
        }
        RenderKind::BraidDiagram => Err(Error::UnsupportedKind("braid diagrams are drawn from strand sets".into())),
    }
}

fn flow_movie<S: Scalar>(f: &PlFlow<S>, n: Option<&CompactSubset<S>>, spec: &RenderSpec) -> Result<String> {
    let side = spec.canvas as i64;
    let mut svg = Svg::new(side * spec.frames as i64, side, &spec.style);
    let (lo, hi) = window::<S>(f.ambient());
    let marks = grid_values(&lo, &hi, spec.grid);
    let unit = (S::zero(), S::one());
    for (i, t) in frame_times::<S>(spec.frames).iter().enumerate() {
        svg.panel_open(i, side * i as i64);
        svg.text(spec.margin(), spec.margin(), &format!("t = {}", t.to_exact_string()), &spec.style.ink);
        let h = f.frame_at(t)?;
        if f.ambient() == Ambient::Circle {
            let c = side as f64 / 2.0;
            let mid = c;
            let r = (side - 2 * spec.margin()) as f64 * 0.4;
            let p = spec.precision;
            svg.ring(&f64_text(c, p), &f64_text(mid, p), &f64_text(r, p), &spec.style.ink);
            for x in &marks[..marks.len() - 1] {
                let theta = TAU * h.eval(x)?.to_f64();
                let at = |rr: f64| format!("{},{}", f64_text(c + rr * theta.cos(), p), f64_text(mid - rr * theta.sin(), p));
                svg.line(&at(r * 0.85), &at(r * 1.15), &spec.style.grid, "1");
            }
        } else {
            let vp = Viewport::square(spec, (lo.clone(), hi.clone()), unit.clone());
            let (y0, y1, ym) = (S::from_ratio(3, 8), S::from_ratio(5, 8), S::half());
            svg.line(&vp.point(&lo, &ym), &vp.point(&hi, &ym), &spec.style.ink, "1");
            for x in &marks {
                let y = h.eval(x)?;
                svg.line(&vp.point(&y, &y0), &vp.point(&y, &y1), &spec.style.grid, "1");
            }
            if let Some(n) = n {
                for c in h.image(n)?.components() {
                    match c {
                        Component::Point(x) => svg.dot(&vp.point(x, &ym), "4", &spec.style.ink),
                        Component::Interval(a, b) => svg.line(&vp.point(a, &ym), &vp.point(b, &ym), &spec.style.ink, "6"),
                    }
                }
            }
        }
        svg.group_close();
    }
    Ok(svg.finish())
}

fn flare<S: Scalar>(f: &PlFlow<S>, n: Option<&CompactSubset<S>>, spec: &RenderSpec) -> Result<String> {
    let side = spec.canvas as i64;
    let mut svg = Svg::new(side, side, &spec.style);
    let unit = (S::zero(), S::one());
    let vp = Viewport::square(spec, unit.clone(), unit.clone());
    if let Some(n) = n {
        draw_worldline(&mut svg, &vp, &Worldline::of(f, n)?, spec);
    }
    svg.group_open("grid");
    for t in grid_values(&S::zero(), &S::one(), spec.grid) {
        svg.line(&vp.point(&S::zero(), &t), &vp.point(&S::one(), &t), &spec.style.grid, "1");
    }
    for x in grid_values(&S::zero(), &S::one(), spec.grid) {
        let pts: Vec<String> = f.trajectory(&x)?.iter().map(|(t, y)| vp.point(y, t)).collect();
        svg.polyline(&pts, &spec.style.grid, "1");
    }
    svg.group_close();
    Ok(svg.finish())
}

fn draw_worldline<S: Scalar>(svg: &mut Svg, vp: &Viewport<S>, w: &Worldline<S>, spec: &RenderSpec) {
    svg.group_open("worldline");
    for c in w.components() {
        match c {
            WorldlineComponent::Arc(p) => {
                let pts: Vec<String> = p.vertices().iter().map(|(t, x)| vp.point(x, t)).collect();
                svg.polyline(&pts, &spec.style.ink, "3");
            }
            WorldlineComponent::Band { lower, upper } => {
                let mut pts: Vec<String> = lower.vertices().iter().map(|(t, x)| vp.point(x, t)).collect();
                pts.extend(upper.vertices().iter().rev().map(|(t, x)| vp.point(x, t)));
                svg.polygon(&pts, &spec.style.shade);
            }
        }
    }
    svg.group_close();
}

/// The worldline in `I × I`, time running up the page.
pub fn render_worldline<S: Scalar>(w: &Worldline<S>, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let side = spec.canvas as i64;
    let mut svg = Svg::new(side, side, &spec.style);
    let unit = (S::zero(), S::one());
    let vp = Viewport::square(spec, unit.clone(), unit.clone());
    let corners = [(S::zero(), S::zero()), (S::one(), S::zero()), (S::one(), S::one()), (S::zero(), S::one()), (S::zero(), S::zero())];
    let frame: Vec<String> = corners.iter().map(|(x, t)| vp.point(x, t)).collect();
    svg.polyline(&frame, &spec.style.grid, "1");
    draw_worldline(&mut svg, &vp, w, spec);
    Ok(svg.finish())
}

fn circle_flare<S: Scalar>(f: &PlFlow<S>, spec: &RenderSpec) -> Result<String> {
    const STEPS: usize = 8;
    let side = spec.canvas as i64;
    let mut svg = Svg::new(side, side, &spec.style);
    let p = spec.precision;
    let c = side as f64 / 2.0;
    let big_r = (side - 2 * spec.margin()) as f64 / 2.0;
    // time runs from the outer circle (t = 0) inwards to radius R / 2
    let radius = |t: f64| big_r * (1.0 - t / 2.0);
    svg.group_open("levels");
    for t in grid_values(&S::zero(), &S::one(), spec.grid) {
        let r = f64_text(radius(t.to_f64()), p);
        svg.ring(&f64_text(c, p), &f64_text(c, p), &r, &spec.style.grid);
    }
    svg.group_close();
    svg.group_open("grid");
    let times = f.key_times();
    for x in &grid_values(&S::zero(), &S::one(), spec.grid)[..spec.grid] {
        let mut pts = Vec::new();
        for w in times.windows(2) {
            for k in 0..STEPS {
                let t = lerp(&w[0], &w[1], &S::from_ratio(k as i64, STEPS as i64));
                pts.push((t.to_f64(), f.eval(&t, x)?.to_f64()));
            }
        }
        pts.push((1.0, f.endpoint().eval(x)?.to_f64()));
        let strs: Vec<String> = pts
            .iter()
            .map(|&(t, y)| {
                let (r, theta) = (radius(t), TAU * y);
                format!("{},{}", f64_text(c + r * theta.cos(), p), f64_text(c - r * theta.sin(), p))
            })
            .collect();
        svg.polyline(&strs, &spec.style.ink, "1");
    }
    svg.group_close();
    Ok(svg.finish())
}

/// Renders a strand set: a movie of the moving points, or (for the
/// worldline and braid-diagram kinds) the projected strands with time up the
/// page and the front strand drawn over a halo at each crossing.
pub fn render_strands<S: Scalar>(f: &StrandSet<S>, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    match spec.kind {
        RenderKind::Movie => strand_movie(f, spec),
        RenderKind::Worldline | RenderKind::BraidDiagram => braid_diagram(f, spec),
        other => Err(Error::UnsupportedKind(format!("{} is not drawn for strand sets", other.name()))),
    }
}

fn strand_movie<S: Scalar>(f: &StrandSet<S>, spec: &RenderSpec) -> Result<String> {
    let side = spec.canvas as i64;
    let mut svg = Svg::new(side * spec.frames as i64, side, &spec.style);
    let unit = (S::zero(), S::one());
    for (i, t) in frame_times::<S>(spec.frames).iter().enumerate() {
        let vp = Viewport::square(spec, unit.clone(), unit.clone());
        svg.panel_open(i, side * i as i64);
        svg.text(spec.margin(), spec.margin(), &format!("t = {}", t.to_exact_string()), &spec.style.ink);
        for v in grid_values(&S::zero(), &S::one(), spec.grid) {
            svg.line(&vp.point(&v, &S::zero()), &vp.point(&v, &S::one()), &spec.style.grid, "1");
            svg.line(&vp.point(&S::zero(), &v), &vp.point(&S::one(), &v), &spec.style.grid, "1");
        }
        for p in f.positions_at(t) {
            svg.dot(&vp.point(&p.0, &p.1), "5", &spec.style.ink);
        }
        svg.group_close();
    }
    Ok(svg.finish())
}

fn braid_diagram<S: Scalar>(f: &StrandSet<S>, spec: &RenderSpec) -> Result<String> {
    let (den, events) = crossings(f)?;
    let eps = if den == 0 { S::zero() } else { S::from_ratio(1, den) };
    let side = spec.canvas as i64;
    let mut svg = Svg::new(side, side, &spec.style);
    let vp = Viewport::square(spec, (S::zero(), S::one() + eps.clone()), (S::zero(), S::one()));
    let at = |strand: usize, t: &S| {
        let p = f.strands()[strand].at(t);
        vp.point(&sheared(&p, &eps), t)
    };
    // pieces redrawn on top reach this far from each crossing in time
    let mut reach = S::from_ratio(1, 40);
    for w in events.windows(2) {
        let gap = (w[1].time.clone() - w[0].time.clone()) / S::from_int(3);
        if gap < reach && !gap.is_zero() {
            reach = gap;
        }
    }
    svg.group_open("strands");
    for (j, s) in f.strands().iter().enumerate() {
        let pts: Vec<String> = s.times().iter().map(|t| at(j, t)).collect();
        svg.polyline(&pts, &spec.style.ink, "2");
    }
    svg.group_close();
    svg.group_open("crossings");
    for e in &events {
        let lo = if e.time.clone() - reach.clone() < S::zero() { S::zero() } else { e.time.clone() - reach.clone() };
        let hi = if e.time.clone() + reach.clone() > S::one() { S::one() } else { e.time.clone() + reach.clone() };
        let mut ts = vec![lo.clone()];
        ts.extend(f.strands()[e.over].times().iter().filter(|t| **t > lo && **t < hi).cloned());
        ts.push(hi);
        let pts: Vec<String> = ts.iter().map(|t| at(e.over, t)).collect();
        svg.polyline(&pts, &spec.style.background, "10");
        svg.polyline(&pts, &spec.style.ink, "2");
    }
    svg.group_close();
    Ok(svg.finish())
}
