//! Schematic SVG of the model space: the segment `[0, ∞]`, the earring `A` on
//! its left end and cone silhouettes whose apexes accumulate at `∞`.

use std::f64::consts::PI;
use std::fmt::Write;

const WIDTH: f64 = 900.0;
const HEIGHT: f64 = 520.0;
const BASE: (f64, f64) = (220.0, 300.0);
const AXIS_END: f64 = 860.0;
const EARRING_RADIUS: f64 = 150.0;

/// Renders the picture with the first `circles` earring circles and `cones`
/// cones. Coordinates are floating point and purely illustrative.
pub fn render_svg(circles: u64, cones: u64) -> String {
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let _ = writeln!(
        svg,
        r#"<g id="earring" fill="none" stroke="black" stroke-width="1">"#
    );
    for m in 1..=circles {
        let r = EARRING_RADIUS / m as f64;
        let _ = writeln!(
            svg,
            r#"<circle class="earring-circle" cx="{:.3}" cy="{:.3}" r="{:.3}"/>"#,
            BASE.0 - r,
            BASE.1,
            r
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<line id="segment" x1="{}" y1="{}" x2="{AXIS_END}" y2="{}" stroke="black" stroke-width="2"/>"#,
        BASE.0, BASE.1, BASE.1
    );

    let _ = writeln!(
        svg,
        r#"<g id="cones" fill="none" stroke="black" stroke-width="1">"#
    );
    for k in 1..=cones {
        let kf = k as f64;
        // apex of the k-th cone; they crowd towards the end of the segment
        let apex_x = AXIS_END - (AXIS_END - BASE.0) * 0.55 / kf;
        let apex_y = BASE.1 - 40.0 / kf.sqrt();
        let base_x = apex_x - 110.0 / kf.sqrt();
        let rx = 14.0 / kf.sqrt();
        let ry = 90.0 / kf.sqrt();
        let base_y = apex_y - ry - 20.0 / kf;
        let _ = writeln!(
            svg,
            r#"<path class="cone" d="M {:.3} {:.3} L {apex_x:.3} {apex_y:.3} L {:.3} {:.3}"/>"#,
            base_x,
            base_y - ry,
            base_x,
            base_y + ry
        );
        let _ = writeln!(
            svg,
            r#"<ellipse class="cone-base" cx="{base_x:.3}" cy="{base_y:.3}" rx="{rx:.3}" ry="{ry:.3}"/>"#
        );
        // the base circle wraps k times around the earring; one dashed guide
        // per turn towards the circle of index k
        let target_r = EARRING_RADIUS / kf;
        for turn in 0..k.min(6) {
            let angle = PI * (0.5 + turn as f64 / k.min(6) as f64);
            let tx = BASE.0 - target_r + target_r * angle.cos();
            let ty = BASE.1 - target_r * angle.sin();
            let _ = writeln!(
                svg,
                r#"<path class="glue-guide" d="M {:.3} {:.3} Q {:.3} {:.3} {tx:.3} {ty:.3}" stroke-dasharray="4 3" stroke="gray"/>"#,
                base_x - rx,
                base_y,
                (base_x + tx) / 2.0,
                base_y - 60.0,
            );
        }
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<g font-family="serif" font-size="16"><text x="{}" y="{}">0</text><text x="{}" y="{}">∞</text><text x="{}" y="{}">A</text></g>"#,
        BASE.0 - 4.0,
        BASE.1 + 22.0,
        AXIS_END - 4.0,
        BASE.1 + 22.0,
        BASE.0 - EARRING_RADIUS - 8.0,
        BASE.1 + EARRING_RADIUS + 10.0
    );
    svg.push_str("</svg>\n");
    svg
}
