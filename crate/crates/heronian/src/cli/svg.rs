//! Static SVG rendering of the signed-error wave: one polyline through the
//! per-integer error midpoints, with the `1/(12m^2)` envelope and the
//! `3/(80m^2)` curve (Webb, per Smyly) overlaid as per-band staircases.
//!
//! Coordinates are computed in exact rationals and rendered as truncated
//! decimals; no floating point is involved.

use num_traits::One;

use crate::certify::ErrorSample;
use crate::exactnum::{decimal_string, int, pow_i, rat, rat_int, Int, Rational};

const WIDTH: i64 = 1200;
const HEIGHT: i64 = 400;
const LEFT: i64 = 70;
const RIGHT: i64 = 30;
const TOP: i64 = 34;
const BOTTOM: i64 = 46;

/// Render samples covering the closed band range `m_lo..=m_hi` into a fixed
/// 1200x400 viewport. The error axis spans `±1.1/(12 m_lo^2)`, enough for
/// every band since the envelope only shrinks with m.
pub fn wave_svg(samples: &[ErrorSample], m_lo: u64, m_hi: u64) -> String {
    let plot_w = rat(WIDTH - LEFT - RIGHT, 1);
    let plot_h = rat(HEIGHT - TOP - BOTTOM, 1);
    let n0 = rat_int(&pow_i(&int(m_lo as i64), 3));
    let n1 = rat_int(&pow_i(&int(m_hi as i64 + 1), 3));
    let span = &n1 - &n0;
    let envelope = rat(11, 120 * (m_lo as i64) * (m_lo as i64));

    let x_of = |n: &Rational| rat(LEFT, 1) + (n - &n0) * &plot_w / &span;
    let y_of = |e: &Rational| rat(TOP, 1) + (&envelope - e) * &plot_h / (rat(2, 1) * &envelope);
    let px = |v: &Rational| decimal_string(v, 2);

    let mut svg = String::new();
    svg.push_str(&format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r##"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r##"<rect x="{LEFT}" y="{TOP}" width="{}" height="{}" fill="none" stroke="#cccccc"/>"##,
        WIDTH - LEFT - RIGHT,
        HEIGHT - TOP - BOTTOM
    ));
    svg.push('\n');

    // zero axis
    let zero_y = px(&y_of(&Rational::from(Int::from(0))));
    svg.push_str(&format!(
        r##"<line x1="{LEFT}" y1="{zero_y}" x2="{}" y2="{zero_y}" stroke="#888888" stroke-width="1"/>"##,
        WIDTH - RIGHT
    ));
    svg.push('\n');

    // band boundaries at perfect cubes, with N labels
    for j in m_lo..=m_hi + 1 {
        let cube = pow_i(&int(j as i64), 3);
        let x = px(&x_of(&rat_int(&cube)));
        svg.push_str(&format!(
            r##"<line x1="{x}" y1="{TOP}" x2="{x}" y2="{}" stroke="#dddddd" stroke-dasharray="3,3"/>"##,
            HEIGHT - BOTTOM
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r##"<text x="{x}" y="{}" font-size="11" text-anchor="middle" fill="#444444">{cube}</text>"##,
            HEIGHT - BOTTOM + 16
        ));
        svg.push('\n');
    }

    // y-axis labels
    for (value, label) in [
        (envelope.clone(), decimal_string(&envelope, 4)),
        (Rational::from(Int::from(0)), "0".to_string()),
        (-&envelope, decimal_string(&(-&envelope), 4)),
    ] {
        svg.push_str(&format!(
            r##"<text x="{}" y="{}" font-size="11" text-anchor="end" fill="#444444">{label}</text>"##,
            LEFT - 6,
            px(&(y_of(&value) + rat(4, 1)))
        ));
        svg.push('\n');
    }

    // envelope and Webb staircases, both signs
    for (num, den_coeff, color, label) in [
        (Int::one(), 12i64, "#d62728", "±1/(12m²)"),
        (Int::from(3), 80i64, "#2ca02c", "±3/(80m²) Webb (per Smyly)"),
    ] {
        for sign in [1i64, -1] {
            let mut points = String::new();
            for m in m_lo..=m_hi {
                let level = Rational::new(
                    &num * sign,
                    int(den_coeff) * int(m as i64) * int(m as i64),
                );
                let y = px(&y_of(&level));
                let x_a = px(&x_of(&rat_int(&pow_i(&int(m as i64), 3))));
                let x_b = px(&x_of(&rat_int(&pow_i(&int(m as i64 + 1), 3))));
                points.push_str(&format!("{x_a},{y} {x_b},{y} "));
            }
            svg.push_str(&format!(
                r##"<polyline fill="none" stroke="{color}" stroke-width="1" stroke-dasharray="5,3" points="{}"/>"##,
                points.trim_end()
            ));
            svg.push('\n');
        }
        let _ = label;
    }

    // the signed-error wave itself, through enclosure midpoints
    let mut points = String::new();
    for s in samples {
        let mid = (&s.err_lo + &s.err_hi) / rat(2, 1);
        points.push_str(&format!(
            "{},{} ",
            px(&x_of(&rat_int(&s.n))),
            px(&y_of(&mid))
        ));
    }
    svg.push_str(&format!(
        r##"<polyline fill="none" stroke="#1f77b4" stroke-width="1.5" points="{}"/>"##,
        points.trim_end()
    ));
    svg.push('\n');

    // titles and legend
    svg.push_str(&format!(
        r##"<text x="{}" y="20" font-size="14" text-anchor="middle" fill="#222222">Signed error of the weighted-mediant cube rule, bands m = {m_lo}..{m_hi}</text>"##,
        WIDTH / 2
    ));
    svg.push('\n');
    for (dy, color, text) in [
        (0, "#1f77b4", "signed error (enclosure midpoint)"),
        (14, "#d62728", "±1/(12m²) envelope"),
        (28, "#2ca02c", "±3/(80m²) Webb (per Smyly)"),
    ] {
        svg.push_str(&format!(
            r##"<text x="{}" y="{}" font-size="11" text-anchor="end" fill="{color}">{text}</text>"##,
            WIDTH - RIGHT - 6,
            TOP + 16 + dy
        ));
        svg.push('\n');
    }
    svg.push_str("</svg>\n");
    svg
}
