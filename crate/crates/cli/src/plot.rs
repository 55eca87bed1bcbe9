//! Heatmap of `|a_ij|`: `t0` exponent across, `t1` exponent up, grey level
//! proportional to `log2(1 + |a|)`.

use std::fmt::Write as _;

use lgkit::CoeffTable;
use num_traits::{Signed, ToPrimitive};

const CELL: i64 = 32;
const MARGIN: i64 = 48;

fn weight(c: &lgkit::ArbInt) -> f64 {
    (1.0 + c.abs().to_f64().unwrap_or(f64::MAX)).log2()
}

fn bounds(t: &CoeffTable) -> Option<((i64, i64), (i64, i64))> {
    let pts: Vec<(i64, i64)> = t.entries().map(|(p, _)| p).collect();
    let i = (
        pts.iter().map(|p| p.0).min()?,
        pts.iter().map(|p| p.0).max()?,
    );
    let j = (
        pts.iter().map(|p| p.1).min()?,
        pts.iter().map(|p| p.1).max()?,
    );
    Some((i, j))
}

pub fn svg(t: &CoeffTable, title: &str) -> String {
    let ((i0, i1), (j0, j1)) = bounds(t).unwrap_or(((0, 0), (0, 0)));
    let (w, h) = ((i1 - i0 + 1) * CELL, (j1 - j0 + 1) * CELL);
    let top = t.entries().map(|(_, c)| weight(c)).fold(0.0, f64::max);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" font-family="monospace" font-size="11">"#,
        w + 2 * MARGIN,
        h + 2 * MARGIN
    );
    let _ = writeln!(s, r#"<title>{}</title>"#, escape(title));
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for i in i0..=i1 {
        for j in j0..=j1 {
            let c = t.get(i, j);
            let level = if top > 0.0 { weight(&c) / top } else { 0.0 };
            let grey = (255.0 * (1.0 - level)).round() as u8;
            let (x, y) = (MARGIN + (i - i0) * CELL, MARGIN + (j1 - j) * CELL);
            let _ = writeln!(
                s,
                r#"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="rgb({grey},{grey},{grey})" stroke="lightgray"><title>t0^{i} t1^{j}: {c}</title></rect>"#
            );
        }
    }
    for i in i0..=i1 {
        let x = MARGIN + (i - i0) * CELL + CELL / 2;
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{}" text-anchor="middle">{i}</text>"#,
            MARGIN + h + 16
        );
    }
    for j in j0..=j1 {
        let y = MARGIN + (j1 - j) * CELL + CELL / 2 + 4;
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{y}" text-anchor="end">{j}</text>"#,
            MARGIN - 6
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">t0</text>"#,
        MARGIN + w / 2,
        MARGIN + h + 34
    );
    let _ = writeln!(
        s,
        r#"<text x="14" y="{}" text-anchor="middle">t1</text>"#,
        MARGIN + h / 2
    );
    s.push_str("</svg>\n");
    s
}

/// `|a_ij|` as aligned text, highest `t1` exponent first.
pub fn text(t: &CoeffTable) -> String {
    let Some(((i0, i1), (j0, j1))) = bounds(t) else {
        return "0\n".into();
    };
    let cells: Vec<Vec<String>> = (j0..=j1)
        .rev()
        .map(|j| (i0..=i1).map(|i| t.get(i, j).abs().to_string()).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain((i0..=i1).map(|i| i.to_string().len()))
        .max()
        .unwrap_or(1);
    let label = (j0..=j1)
        .map(|j| j.to_string().len())
        .max()
        .unwrap_or(1)
        .max(5);
    let mut s = format!("{:>label$} |", "t1\\t0");
    for i in i0..=i1 {
        let _ = write!(s, " {i:>width$}");
    }
    s.push('\n');
    for (row, j) in cells.iter().zip((j0..=j1).rev()) {
        let _ = write!(s, "{j:>label$} |");
        for c in row {
            let _ = write!(s, " {c:>width$}");
        }
        s.push('\n');
    }
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
