//! Static SVG rendering of comparison-function families.
//!
//! Fixed 900×600 viewBox, linear axes autoscaled to the data with a 5%
//! margin, curves stroked from the largest curvature down. All coordinates
//! are formatted with fixed precision, so equal inputs give byte-equal
//! files.

pub struct FigureCurve {
    pub k: f64,
    pub ts: Vec<f64>,
    pub gs: Vec<f64>,
}

const WIDTH: f64 = 900.0;
const HEIGHT: f64 = 600.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 80.0;
const MARGIN_TOP: f64 = 25.0;
const MARGIN_BOTTOM: f64 = 55.0;

const PALETTE: [&str; 15] = [
    "#7f0000", "#b22222", "#d2691e", "#daa520", "#808000", "#2e8b57", "#008080", "#1e90ff",
    "#4169e1", "#6a5acd", "#8a2be2", "#c71585", "#708090", "#556b2f", "#483d8b",
];

fn px(x: f64) -> String {
    format!("{x:.2}")
}

fn tick_label(x: f64) -> String {
    format!("{x:.3}")
}

/// Renders the curve family over `[t_lo, t_hi]`. Curves are drawn in
/// descending curvature order; an empty family still gets its axes.
pub fn render_figure(t_lo: f64, t_hi: f64, curves: &[FigureCurve]) -> String {
    let (mut g_lo, mut g_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for c in curves {
        for &g in &c.gs {
            g_lo = g_lo.min(g);
            g_hi = g_hi.max(g);
        }
    }
    if !g_lo.is_finite() || !g_hi.is_finite() {
        g_lo = 0.0;
        g_hi = 1.0;
    }
    if g_hi - g_lo < 1e-12 {
        g_hi = g_lo + 1.0;
    }
    let x_pad = 0.05 * (t_hi - t_lo);
    let y_pad = 0.05 * (g_hi - g_lo);
    let (x0, x1) = (t_lo - x_pad, t_hi + x_pad);
    let (y0, y1) = (g_lo - y_pad, g_hi + y_pad);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = move |t: f64| MARGIN_LEFT + (t - x0) / (x1 - x0) * plot_w;
    let sy = move |g: f64| MARGIN_TOP + (y1 - g) / (y1 - y0) * plot_h;

    let mut out = String::with_capacity(1 << 16);
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // axes
    let (ax_l, ax_r) = (MARGIN_LEFT, WIDTH - MARGIN_RIGHT);
    let (ax_t, ax_b) = (MARGIN_TOP, HEIGHT - MARGIN_BOTTOM);
    out.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1\"/>\n",
        px(ax_l),
        px(ax_b),
        px(ax_r),
        px(ax_b)
    ));
    out.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1\"/>\n",
        px(ax_l),
        px(ax_t),
        px(ax_l),
        px(ax_b)
    ));
    for i in 0..=4 {
        let f = i as f64 / 4.0;
        let tx = x0 + f * (x1 - x0);
        let gx = sx(tx);
        out.push_str(&format!(
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\" stroke-width=\"1\"/>\n",
            px(gx),
            px(ax_b),
            px(ax_b + 5.0)
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
            px(gx),
            px(ax_b + 20.0),
            tick_label(tx)
        ));
        let ty = y0 + f * (y1 - y0);
        let gy = sy(ty);
        out.push_str(&format!(
            "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"black\" stroke-width=\"1\"/>\n",
            px(gy),
            px(ax_l - 5.0),
            px(ax_l)
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{}</text>\n",
            px(ax_l - 9.0),
            px(gy + 4.0),
            tick_label(ty)
        ));
    }
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\">t</text>\n",
        px((ax_l + ax_r) / 2.0),
        px(HEIGHT - 12.0)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 {} {})\">g_k(t)</text>\n",
        px(18.0),
        px((ax_t + ax_b) / 2.0),
        px(18.0),
        px((ax_t + ax_b) / 2.0)
    ));

    // curves, largest curvature first
    let mut order: Vec<usize> = (0..curves.len()).collect();
    order.sort_by(|&a, &b| curves[b].k.partial_cmp(&curves[a].k).unwrap());
    for (slot, &ci) in order.iter().enumerate() {
        let c = &curves[ci];
        let color = PALETTE[slot % PALETTE.len()];
        let mut points = String::new();
        for (t, g) in c.ts.iter().zip(&c.gs) {
            points.push_str(&px(sx(*t)));
            points.push(',');
            points.push_str(&px(sy(*g)));
            points.push(' ');
        }
        out.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            points.trim_end()
        ));
        // the curves share both endpoints, so a legend column beats
        // labels at the polyline ends
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"11\" fill=\"{color}\">k={}</text>\n",
            px(WIDTH - MARGIN_RIGHT + 8.0),
            px(MARGIN_TOP + 16.0 * (slot as f64 + 1.0)),
            c.k
        ));
    }
    out.push_str("</svg>\n");
    out
}
