//! Minimal SVG polyline charts for criterion sweeps. Values are converted
//! to floats for plotting only; the CSV/JSON reports stay exact.

use addcomp::CriterionReport;
use num::ToPrimitive;

const W: f64 = 800.0;
const H: f64 = 500.0;
const MARGIN: f64 = 60.0;

fn rational_to_f64(r: &num::BigRational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Chart of the normalized criterion R(x) and the first-order ratio
/// A(x)B(x)/x against log10(x).
pub fn criterion_chart(reports: &[CriterionReport]) -> String {
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
         viewBox=\"0 0 {W} {H}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    let points: Vec<(f64, f64, f64)> = reports
        .iter()
        .map(|r| {
            let x = r.x.to_f64().unwrap_or(f64::NAN).log10();
            (x, rational_to_f64(&r.ratio), rational_to_f64(&r.exactness_ratio))
        })
        .filter(|(x, a, b)| x.is_finite() && a.is_finite() && b.is_finite())
        .collect();

    if points.is_empty() {
        svg.push_str("<text x=\"20\" y=\"40\">no sweep points</text>\n</svg>\n");
        return svg;
    }

    let x_lo = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let x_hi = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let y_lo = points
        .iter()
        .flat_map(|p| [p.1, p.2])
        .fold(f64::INFINITY, f64::min)
        .min(0.0);
    let y_hi = points
        .iter()
        .flat_map(|p| [p.1, p.2])
        .fold(f64::NEG_INFINITY, f64::max)
        .max(1.0);
    let x_span = (x_hi - x_lo).max(1e-9);
    let y_span = (y_hi - y_lo).max(1e-9);

    let sx = |x: f64| MARGIN + (x - x_lo) / x_span * (W - 2.0 * MARGIN);
    let sy = |y: f64| H - MARGIN - (y - y_lo) / y_span * (H - 2.0 * MARGIN);

    // axes
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n\
         <line x1=\"{m}\" y1=\"{t}\" x2=\"{m}\" y2=\"{b}\" stroke=\"black\"/>\n",
        m = MARGIN,
        b = H - MARGIN,
        r = W - MARGIN,
        t = MARGIN
    ));
    // reference level y = 1
    svg.push_str(&format!(
        "<line x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"gray\" \
         stroke-dasharray=\"4 4\"/>\n",
        MARGIN,
        W - MARGIN,
        y = sy(1.0)
    ));

    for (series, color, label, dy) in [(1usize, "crimson", "R(x)", 20.0), (2, "steelblue", "A(x)B(x)/x", 40.0)] {
        let path: Vec<String> = points
            .iter()
            .map(|p| {
                let y = if series == 1 { p.1 } else { p.2 };
                format!("{:.2},{:.2}", sx(p.0), sy(y))
            })
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            path.join(" ")
        ));
        for p in &points {
            let y = if series == 1 { p.1 } else { p.2 };
            svg.push_str(&format!(
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{color}\"/>\n",
                sx(p.0),
                sy(y)
            ));
        }
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{dy}\" fill=\"{color}\" font-size=\"14\">{label}</text>\n",
            W - MARGIN - 100.0
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"13\">log10(x)</text>\n",
        W / 2.0 - 30.0,
        H - MARGIN / 3.0
    ));
    svg.push_str("</svg>\n");
    svg
}
