//! Static pictures of walks and Dyck words, as ASCII or SVG 1.1.
//!
//! Output is a pure function of the input: fixed header, two-decimal
//! coordinates, no timestamps.

use std::collections::HashMap;
use std::fmt::Write;

use lattice_walks::bijections::{DyckPath, DyckStep};
use lattice_walks::walks::{Sign, Walk};

const SCALE: f64 = 40.0;
const MARGIN: i64 = 1;
const OVERLAP_OFFSET: f64 = 0.1;

type Point = (i64, i64);
type Segment = ((f64, f64), (f64, f64));

/// Lattice points visited by a walk; dimension 0 is vertical, dimension 1
/// horizontal.
fn trace(walk: &Walk) -> Vec<Point> {
    let mut p = (0i64, 0i64);
    let mut out = vec![p];
    for d in walk.steps() {
        let delta = match d.sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        match d.dim {
            0 => p.1 += delta,
            _ => p.0 += delta,
        }
        out.push(p);
    }
    out
}

#[derive(Clone, Copy)]
struct Bounds {
    xmin: i64,
    xmax: i64,
    ymin: i64,
    ymax: i64,
}

impl Bounds {
    fn around(points: &[Point]) -> Self {
        let xs = points.iter().map(|p| p.0);
        let ys = points.iter().map(|p| p.1);
        Bounds {
            xmin: xs.clone().min().unwrap_or(0) - 1,
            xmax: xs.max().unwrap_or(0) + 1,
            ymin: ys.clone().min().unwrap_or(0).min(0),
            ymax: ys.max().unwrap_or(0) + 1,
        }
    }

    fn width(&self) -> i64 {
        self.xmax - self.xmin
    }

    fn height(&self) -> i64 {
        self.ymax - self.ymin
    }
}

/// Character grid: lattice points on even rows and columns, connectors
/// between them.
pub fn walk_ascii(walk: &Walk) -> String {
    let points = trace(walk);
    let b = Bounds::around(&points);
    let cols = (2 * b.width() + 1) as usize;
    let rows = (2 * b.height() + 1) as usize;
    let cell = |x: i64, y: i64| ((2 * (b.ymax - y)) as usize, (2 * (x - b.xmin)) as usize);

    let mut canvas = vec![vec![' '; cols]; rows];
    for y in b.ymin..=b.ymax {
        for x in b.xmin..=b.xmax {
            let (r, c) = cell(x, y);
            canvas[r][c] = '.';
            if y == 0 && x < b.xmax {
                canvas[r][c + 1] = '=';
            }
        }
    }
    for seg in points.windows(2) {
        let (r0, c0) = cell(seg[0].0, seg[0].1);
        let (r1, c1) = cell(seg[1].0, seg[1].1);
        let (r, c) = ((r0 + r1) / 2, (c0 + c1) / 2);
        canvas[r][c] = if r0 == r1 { '-' } else { '|' };
        canvas[r0][c0] = '+';
        canvas[r1][c1] = '+';
    }
    let (r, c) = cell(0, 0);
    canvas[r][c] = 'O';
    let end = *points.last().expect("trace includes the start");
    if !walk.is_empty() {
        let (r, c) = cell(end.0, end.1);
        canvas[r][c] = '*';
    }

    let mut out = String::new();
    for row in canvas {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    writeln!(out, "start (0, 0) end ({}, {})", end.0, end.1).unwrap();
    out
}

/// Mountain picture of a Dyck word over a `=` baseline.
pub fn dyck_ascii(path: &DyckPath) -> String {
    let heights = path.heights();
    let peak = heights.iter().copied().max().unwrap_or(0);
    let mut canvas = vec![vec![' '; path.len()]; peak as usize];
    for (k, step) in path.word().iter().enumerate() {
        let (level, ch) = match step {
            DyckStep::Up => (heights[k] + 1, '/'),
            DyckStep::Down => (heights[k], '\\'),
        };
        canvas[(peak - level) as usize][k] = ch;
    }
    let mut out = String::new();
    for row in canvas {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&"=".repeat(path.len()));
    out.push('\n');
    let hs: Vec<String> = heights.iter().map(|h| h.to_string()).collect();
    writeln!(out, "heights {}", hs.join(" ")).unwrap();
    out
}

struct Svg {
    bounds: Bounds,
    body: String,
}

impl Svg {
    fn new(bounds: Bounds) -> Self {
        Svg {
            bounds,
            body: String::new(),
        }
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.bounds.xmin as f64 + MARGIN as f64) * SCALE
    }

    fn py(&self, y: f64) -> f64 {
        (self.bounds.ymax as f64 - y + MARGIN as f64) * SCALE
    }

    fn grid(&mut self) {
        self.body.push_str("<g id=\"grid\" fill=\"#999999\">\n");
        for y in self.bounds.ymin..=self.bounds.ymax {
            for x in self.bounds.xmin..=self.bounds.xmax {
                let (cx, cy) = (self.px(x as f64), self.py(y as f64));
                writeln!(
                    self.body,
                    "<circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"1.50\"/>"
                )
                .unwrap();
            }
        }
        self.body.push_str("</g>\n");
    }

    fn baseline(&mut self) {
        let (x0, x1) = (
            self.px(self.bounds.xmin as f64),
            self.px(self.bounds.xmax as f64),
        );
        let y = self.py(0.0);
        self.body.push_str(
            "<g id=\"baseline\" stroke=\"#000000\" stroke-width=\"1.00\" stroke-dasharray=\"6,4\">\n",
        );
        for dy in [-2.0, 2.0] {
            let yy = y + dy;
            writeln!(
                self.body,
                "<line x1=\"{x0:.2}\" y1=\"{yy:.2}\" x2=\"{x1:.2}\" y2=\"{yy:.2}\"/>"
            )
            .unwrap();
        }
        self.body.push_str("</g>\n");
    }

    fn arrows(&mut self, id: &str, color: &str, dashed: bool, segments: &[Segment]) {
        let dash = if dashed {
            " stroke-dasharray=\"5,3\""
        } else {
            ""
        };
        writeln!(
            self.body,
            "<g id=\"{id}\" stroke=\"{color}\" stroke-width=\"3.00\"{dash} marker-end=\"url(#arrow-{id})\">"
        )
        .unwrap();
        for &((x0, y0), (x1, y1)) in segments {
            let (a, b, c, d) = (self.px(x0), self.py(y0), self.px(x1), self.py(y1));
            writeln!(
                self.body,
                "<line x1=\"{a:.2}\" y1=\"{b:.2}\" x2=\"{c:.2}\" y2=\"{d:.2}\"/>"
            )
            .unwrap();
        }
        self.body.push_str("</g>\n");
    }

    fn finish(self, markers: &[(&str, &str)]) -> String {
        let w = (self.bounds.width() + 2 * MARGIN) as f64 * SCALE;
        let h = (self.bounds.height() + 2 * MARGIN) as f64 * SCALE;
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
        writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"0 0 {w:.2} {h:.2}\">"
        )
        .unwrap();
        out.push_str("<defs>\n");
        for (id, color) in markers {
            writeln!(
                out,
                "<marker id=\"arrow-{id}\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"4\" markerHeight=\"4\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"{color}\" stroke=\"none\"/></marker>"
            )
            .unwrap();
        }
        out.push_str("</defs>\n");
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

/// Walk on the unit grid with a dashed double baseline; segments traversed
/// more than once are shifted by a tenth of a unit per repeat.
pub fn walk_svg(walk: &Walk) -> String {
    let points = trace(walk);
    let mut svg = Svg::new(Bounds::around(&points));
    svg.grid();
    svg.baseline();

    let mut seen: HashMap<(Point, Point), usize> = HashMap::new();
    let segments: Vec<_> = points
        .windows(2)
        .map(|seg| {
            let (a, b) = (seg[0], seg[1]);
            let key = if a <= b { (a, b) } else { (b, a) };
            let repeats = seen.entry(key).or_insert(0);
            let shift = OVERLAP_OFFSET * *repeats as f64;
            *repeats += 1;
            // horizontal segments move up, vertical ones move right
            let (dx, dy) = if a.1 == b.1 {
                (0.0, shift)
            } else {
                (shift, 0.0)
            };
            (
                (a.0 as f64 + dx, a.1 as f64 + dy),
                (b.0 as f64 + dx, b.1 as f64 + dy),
            )
        })
        .collect();
    svg.arrows("steps", "#0000ff", false, &segments);
    svg.finish(&[("steps", "#0000ff")])
}

/// Dyck word as a zig-zag timeline from the origin.
pub fn dyck_svg(path: &DyckPath) -> String {
    let heights = path.heights();
    let points: Vec<Point> = heights
        .iter()
        .enumerate()
        .map(|(k, &h)| (k as i64, h))
        .collect();
    let bounds = Bounds {
        xmin: 0,
        xmax: path.len() as i64,
        ymin: 0,
        ymax: heights.iter().copied().max().unwrap_or(0),
    };
    let mut svg = Svg::new(bounds);
    svg.grid();
    svg.baseline();
    let segments: Vec<_> = points
        .windows(2)
        .map(|s| {
            (
                (s[0].0 as f64, s[0].1 as f64),
                (s[1].0 as f64, s[1].1 as f64),
            )
        })
        .collect();
    svg.arrows("path", "#ff0000", true, &segments);
    svg.finish(&[("path", "#ff0000")])
}
