//! SVG drawing of a rank-2 small-cone fan.
//!
//! Floating point is used only for picture coordinates. Every number is
//! printed with exactly six decimals, rounded half-to-even from the exact
//! binary value, so output bytes are reproducible.

use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use smallcones::cones::{RayKind, SmallConeFan};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const RADIUS: f64 = 280.0;

/// Six-decimal rendering with round-half-even.
pub fn fmt6(x: f64) -> String {
    let Some(r) = BigRational::from_float(x) else { return "0.000000".into() };
    let scaled = r * BigRational::from_integer(BigInt::from(1_000_000));
    let floor = scaled.floor();
    let frac = &scaled - &floor;
    let half = BigRational::new(1.into(), 2.into());
    let mut n = floor.to_integer();
    if frac > half || (frac == half && n.is_odd()) {
        n += 1;
    }
    let sign = if n.is_negative() { "-" } else { "" };
    let (q, rem) = n.abs().div_rem(&BigInt::from(1_000_000));
    format!("{sign}{q}.{rem:06}")
}

fn unit(v: (f64, f64)) -> (f64, f64) {
    let len = (v.0 * v.0 + v.1 * v.1).sqrt();
    (v.0 / len, v.1 / len)
}

pub fn render_fan_svg(fan: &SmallConeFan) -> String {
    let dirs: Vec<(f64, f64)> = fan.rays().iter().map(|r| unit((r.coords[0].to_f64(), r.coords[1].to_f64()))).collect();
    let (lo, hi) = (dirs[0], dirs[dirs.len() - 1]);
    let mid = unit((lo.0 + hi.0, lo.1 + hi.1));
    // rotate the bisector of the cone to point straight up
    let angle = std::f64::consts::FRAC_PI_2 - mid.1.atan2(mid.0);
    let (c, s) = (angle.cos(), angle.sin());
    let origin = (WIDTH / 2.0, HEIGHT - 40.0);
    let place = |d: (f64, f64), r: f64| {
        let (x, y) = (d.0 * c - d.1 * s, d.0 * s + d.1 * c);
        (origin.0 + r * x, origin.1 - r * y)
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">",
        WIDTH as u32,
        HEIGHT as u32
    );
    let label = fan.lattice().label().unwrap_or("lattice");
    let _ = writeln!(out, "  <title>small cones of {label}</title>");
    out.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    let start = place(lo, RADIUS);
    let end = place(hi, RADIUS);
    let _ = writeln!(
        out,
        "  <path class=\"cone-boundary\" d=\"M {} {} A {r} {r} 0 0 0 {} {}\" fill=\"none\" stroke=\"black\"/>",
        fmt6(start.0),
        fmt6(start.1),
        fmt6(end.0),
        fmt6(end.1),
        r = fmt6(RADIUS)
    );
    let walls = fan.walls();
    for (i, (ray, d)) in fan.rays().iter().zip(&dirs).enumerate() {
        let tip = place(*d, RADIUS);
        let dash = if ray.kind == RayKind::Boundary { " stroke-dasharray=\"6 4\"" } else { "" };
        let _ = writeln!(
            out,
            "  <line class=\"ray {}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"{dash}/>",
            ray.kind.as_str(),
            fmt6(origin.0),
            fmt6(origin.1),
            fmt6(tip.0),
            fmt6(tip.1)
        );
        if ray.kind == RayKind::Wall {
            let w = &walls[i - 1];
            let lambda: Vec<String> = w.lambda.iter().map(ToString::to_string).collect();
            let at = place(*d, RADIUS + 14.0);
            let _ = writeln!(
                out,
                "  <text class=\"wall-label {}\" x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">λ=({}) norm {}</text>",
                w.source.as_str(),
                fmt6(at.0),
                fmt6(at.1),
                lambda.join(","),
                w.norm
            );
        }
    }
    for (i, pair) in dirs.windows(2).enumerate() {
        let inside = unit((pair[0].0 + pair[1].0, pair[0].1 + pair[1].1));
        let at = place(inside, RADIUS * 0.6);
        let _ = writeln!(
            out,
            "  <text class=\"cone-index\" x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">{i}</text>",
            fmt6(at.0),
            fmt6(at.1)
        );
    }
    if walls.is_empty() && !fan.rays().is_empty() && fan.rays().iter().all(|r| !r.norm.is_zero() || r.kind == RayKind::Boundary) {
        out.push_str("  <desc>no walls</desc>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_digits_half_even() {
        assert_eq!(fmt6(1.0), "1.000000");
        assert_eq!(fmt6(-0.0), "0.000000");
        assert_eq!(fmt6(0.0000005), "0.000000");
        assert_eq!(fmt6(0.0000015), "0.000002");
        assert_eq!(fmt6(-2.25), "-2.250000");
        assert_eq!(fmt6(123.4567894), "123.456789");
    }
}
