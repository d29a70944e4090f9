//! SVG rendering of packings: bins side by side, items as labeled rectangles,
//! declared wastage hatched.

use std::fmt::Write as _;

use crate::model::{Instance, PackingSolution};

const MARGIN: f64 = 12.0;
const GAP: f64 = 18.0;

fn scale_for(bin_w: i64, bin_h: i64) -> f64 {
    (420.0 / bin_w.max(bin_h) as f64).clamp(1.2, 48.0)
}

/// Renders a packing as standalone SVG text. Output is deterministic for a
/// given instance and solution.
pub fn render_svg(instance: &Instance, solution: &PackingSolution) -> String {
    let (bin_w, bin_h) = (instance.bin_width, instance.bin_height);
    let unit = scale_for(bin_w, bin_h);
    let bins = solution.bins_used;
    let bw = bin_w as f64 * unit;
    let bh = bin_h as f64 * unit;
    let width = MARGIN * 2.0 + bins as f64 * bw + bins.saturating_sub(1) as f64 * GAP;
    let height = MARGIN * 2.0 + bh;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.1}\" height=\"{:.1}\" viewBox=\"0 0 {:.1} {:.1}\">",
        width.max(2.0 * MARGIN),
        height,
        width.max(2.0 * MARGIN),
        height
    );
    svg.push_str(
        "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" \
         patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" \
         stroke=\"#888\" stroke-width=\"2\"/></pattern></defs>\n",
    );

    // y axis flips: packing coordinates grow upward, SVG grows downward
    let flip = |y: f64, h: f64| bh - y - h;

    for bin in 0..bins {
        let ox = MARGIN + bin as f64 * (bw + GAP);
        let _ = writeln!(svg, "<g transform=\"translate({ox:.1} {MARGIN:.1})\">");
        let _ = writeln!(
            svg,
            "<rect x=\"0\" y=\"0\" width=\"{bw:.1}\" height=\"{bh:.1}\" fill=\"#fcfcfc\" stroke=\"#222\" stroke-width=\"1.5\"/>"
        );
        for p in solution.placements.iter().filter(|p| p.bin == bin) {
            let item = instance.item(p.item_id);
            let (w, h) = (item.width as f64 * unit, item.height as f64 * unit);
            let (x, y) = (p.x as f64 * unit, flip(p.y as f64 * unit, h));
            let hue = (p.item_id * 47) % 360;
            let _ = writeln!(
                svg,
                "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{w:.1}\" height=\"{h:.1}\" \
                 fill=\"hsl({hue} 65% 80%)\" stroke=\"#333\" stroke-width=\"1\"/>"
            );
            let font = (unit * 0.45).clamp(7.0, 16.0);
            let _ = writeln!(
                svg,
                "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"{font:.1}\" text-anchor=\"middle\" \
                 dominant-baseline=\"middle\" font-family=\"sans-serif\">{}x{}</text>",
                x + w / 2.0,
                y + h / 2.0,
                item.width,
                item.height
            );
        }
        for wst in solution.wastage.iter().filter(|w| w.bin == bin) {
            let (w, h) = (wst.width as f64 * unit, wst.height as f64 * unit);
            let (x, y) = (wst.x as f64 * unit, flip(wst.y as f64 * unit, h));
            let _ = writeln!(
                svg,
                "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{w:.1}\" height=\"{h:.1}\" \
                 fill=\"url(#hatch)\" stroke=\"#666\" stroke-width=\"0.8\" stroke-dasharray=\"3 2\"/>"
            );
        }
        svg.push_str("</g>\n");
    }
    svg.push_str("</svg>\n");
    svg
}
