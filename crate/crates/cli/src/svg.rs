//! Plain SVG pictures of grid labelings with their interfaces, critical
//! points and poles.

use std::fmt::Write as _;

use spectral_partitions::nodal::boundary::dual_point;
use spectral_partitions::nodal::{BoundarySet, CriticalPoint};
use spectral_partitions::{DomainSpec, GridMask, Point};

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 12.0;

const PALETTE: [&str; 12] =
    ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"];

pub struct Picture<'a> {
    pub mask: &'a GridMask,
    /// Label per node; 0 is drawn white.
    pub labels: &'a [usize],
    pub boundary: Option<&'a BoundarySet>,
    pub critical: &'a [CriticalPoint],
    pub poles: &'a [Point],
    pub title: String,
}

struct Frame {
    lo: Point,
    scale: f64,
    height: f64,
}

impl Frame {
    fn x(&self, p: Point) -> f64 {
        MARGIN + (p[0] - self.lo[0]) * self.scale
    }
    fn y(&self, p: Point) -> f64 {
        self.height - MARGIN - (p[1] - self.lo[1]) * self.scale
    }
}

fn outline(domain: &DomainSpec, f: &Frame) -> String {
    match domain {
        DomainSpec::Disk { radius } => {
            let c = domain.centroid();
            format!(
                r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="black" stroke-width="1.5"/>"#,
                f.x(c),
                f.y(c),
                radius * f.scale
            )
        }
        d => {
            let pts: Vec<String> = d.outline().unwrap_or_default().iter().map(|&p| format!("{:.2},{:.2}", f.x(p), f.y(p))).collect();
            format!(r#"<polygon points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#, pts.join(" "))
        }
    }
}

pub fn render(pic: &Picture) -> String {
    let (lo, hi) = pic.mask.domain.bounding_box();
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let scale = (WIDTH - 2.0 * MARGIN) / span;
    let height = (hi[1] - lo[1]) * scale + 2.0 * MARGIN + 24.0;
    let width = (hi[0] - lo[0]) * scale + 2.0 * MARGIN;
    let f = Frame { lo, scale, height: height - 24.0 };
    let h = pic.mask.h;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let side = h * scale;
    for (n, &l) in pic.labels.iter().enumerate() {
        let p = pic.mask.point(n);
        let color = if l == 0 { "#ffffff" } else { PALETTE[(l - 1) % PALETTE.len()] };
        let _ = writeln!(
            s,
            r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{color}"/>"#,
            f.x(p) - 0.5 * side,
            f.y(p) - 0.5 * side,
            side + 0.05,
            side + 0.05
        );
    }
    if let Some(b) = pic.boundary {
        let _ = writeln!(s, r#"<g stroke="black" stroke-width="1.2">"#);
        for e in &b.edges {
            let (a, c) = (dual_point(pic.mask, e.from), dual_point(pic.mask, e.to));
            let _ = writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, f.x(a), f.y(a), f.x(c), f.y(c));
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, "{}", outline(&pic.mask.domain, &f));
    for c in pic.critical {
        let fill = if c.odd { "#d62728" } else { "#1f77b4" };
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="5" fill="{fill}"><title>valence {}</title></circle>"#,
            f.x(c.position),
            f.y(c.position),
            c.valence
        );
    }
    for &p in pic.poles {
        let (x, y) = (f.x(p), f.y(p));
        let _ = writeln!(
            s,
            r#"<path d="M{:.2} {:.2} L{:.2} {:.2} M{:.2} {:.2} L{:.2} {:.2}" stroke="black" stroke-width="2"/>"#,
            x - 6.0,
            y - 6.0,
            x + 6.0,
            y + 6.0,
            x - 6.0,
            y + 6.0,
            x + 6.0,
            y - 6.0
        );
    }
    let _ =
        writeln!(s, r#"<text x="{MARGIN}" y="{:.2}" font-family="sans-serif" font-size="14">{}</text>"#, height - 8.0, escape(&pic.title));
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
