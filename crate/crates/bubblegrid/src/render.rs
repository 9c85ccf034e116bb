//! Static renderers: an ASCII grid and an SVG in the style of the paper's
//! figures (hollow circles for phase A, filled for phase B, the interface
//! drawn as a polyline). Both renderers are deterministic byte-for-byte.

use std::fmt::Write as _;

use bubblegrid_core::geometry::{interface, interface_adjacent, InterfacePoint};
use bubblegrid_core::lattice::{Configuration, LatticePoint, Phase};

/// Grid of `o` (A), `#` (B) and `.` (vacant), top row first.
pub fn render_ascii(config: &Configuration) -> String {
    let Some(bb) = config.bounding_box() else { return String::new() };
    let mut out = String::new();
    for y in (bb.min_y..=bb.max_y).rev() {
        for x in bb.min_x..=bb.max_x {
            out.push(match config.phase_at(&LatticePoint::new(x, y)) {
                Some(Phase::A) => 'o',
                Some(Phase::B) => '#',
                None => '.',
            });
        }
        out.push('\n');
    }
    out
}

/// Pixels per lattice step and point radius, fixed so golden-file tests are
/// stable.
const SCALE: i64 = 20;
const RADIUS: i64 = 6;
const PAD: i64 = 20;

/// SVG document: circles at lattice points plus the interface polyline
/// (doubled coordinates halved, i.e. the true midpoints).
pub fn render_svg(config: &Configuration) -> String {
    let mut out = String::new();
    let Some(bb) = config.bounding_box() else {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"40\" height=\"40\"></svg>\n"
            .to_string();
    };
    let width = (bb.max_x - bb.min_x) * SCALE + 2 * PAD;
    let height = (bb.max_y - bb.min_y) * SCALE + 2 * PAD;
    // SVG y grows downward; flip so larger lattice y is higher.
    let px = |x2: i64| (x2 - 2 * bb.min_x) * SCALE / 2 + PAD;
    let py = |y2: i64| (2 * bb.max_y - y2) * SCALE / 2 + PAD;
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();

    let pts: Vec<InterfacePoint> = interface(config).into_iter().collect();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if interface_adjacent(p, q) {
                writeln!(
                    out,
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"2\"/>",
                    px(p.x2),
                    py(p.y2),
                    px(q.x2),
                    py(q.y2)
                )
                .unwrap();
            }
        }
    }
    for (p, ph) in config.iter() {
        let fill = match ph {
            Phase::A => "white",
            Phase::B => "black",
        };
        writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{RADIUS}\" fill=\"{fill}\" stroke=\"black\"/>",
            px(2 * p.x),
            py(2 * p.y)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
