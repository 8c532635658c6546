use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use super::{DifferentialKind, ModelComplex};

const UNIT: i64 = 40;
const MARGIN: i64 = 40;
const DOT_RADIUS: i64 = 4;
/// Arrow ends stop this far short of the target dot centre.
const ARROW_GAP: f64 = 7.0;

/// Renders the complex as an SVG document: one dot per generator, `x` by
/// generator index, `y` by grading (40px per unit, higher gradings on top).
/// Interior arrows are solid, exterior arrows dashed, and a reflected or
/// truncated complex gets a gray line at its level.
pub fn write_svg<W: Write>(c: &ModelComplex, mut out: W) -> io::Result<()> {
    out.write_all(render(c).as_bytes())
}

pub fn export_svg(c: &ModelComplex, path: impl AsRef<Path>) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_svg(c, &mut w)?;
    w.flush()
}

fn render(c: &ModelComplex) -> String {
    let columns = c.generators.iter().map(|g| g.index as i64).max().unwrap_or(0);
    let mut levels: Vec<i64> = c.generators.iter().map(|g| g.grading).collect();
    levels.extend(c.reflection_level);
    let top = levels.iter().copied().max().unwrap_or(0);
    let bottom = levels.iter().copied().min().unwrap_or(0);

    let width = 2 * MARGIN + (columns - 1).max(0) * UNIT;
    let height = 2 * MARGIN + (top - bottom) * UNIT;
    let x_of = |index: usize| MARGIN + (index as i64 - 1) * UNIT;
    let y_of = |grading: i64| MARGIN + (top - grading) * UNIT;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        s,
        r#"  <defs><marker id="head" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="black"/></marker></defs>"#
    );
    if c.generators.is_empty() {
        s.push_str("</svg>\n");
        return s;
    }

    if let Some(level) = c.reflection_level {
        let y = if c.truncated { y_of(level) - UNIT / 2 } else { y_of(level) };
        let _ = writeln!(
            s,
            r#"  <line class="reflection" x1="0" y1="{y}" x2="{width}" y2="{y}" stroke="gray" stroke-width="1"/>"#
        );
    }

    for d in c.active_pairs() {
        let from = &c.generators[d.source];
        let to = &c.generators[d.target];
        let (x1, y1) = (x_of(from.index) as f64, y_of(from.grading) as f64);
        let (x2, y2) = (x_of(to.index) as f64, y_of(to.grading) as f64);
        let len = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt();
        let (ex, ey) = (
            x2 - (x2 - x1) * ARROW_GAP / len,
            y2 - (y2 - y1) * ARROW_GAP / len,
        );
        let (class, dash) = match d.kind {
            DifferentialKind::Interior => ("interior", ""),
            DifferentialKind::Exterior => ("exterior", r#" stroke-dasharray="6,4""#),
        };
        let _ = writeln!(
            s,
            r#"  <line class="{class}" x1="{x1}" y1="{y1}" x2="{ex:.1}" y2="{ey:.1}" stroke="black" stroke-width="1.5"{dash} marker-end="url(#head)"/>"#
        );
    }

    for g in &c.generators {
        let (x, y) = (x_of(g.index), y_of(g.grading));
        let _ = writeln!(
            s,
            r#"  <circle cx="{x}" cy="{y}" r="{DOT_RADIUS}" fill="black"><title>{} gr {}</title></circle>"#,
            g.label, g.grading
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{ck_complex, reflect, stable_complex};
    use crate::twobridge::normalize;

    #[test]
    fn dots_follow_gradings() {
        let c = stable_complex(normalize(11, 5).unwrap());
        let svg = render(&c);
        assert_eq!(svg.matches("<circle").count(), 11);
        assert_eq!(svg.matches(r#"class="interior""#).count(), 5);
        assert!(!svg.contains("stroke-dasharray"));
        // grading 1 sits at the top margin, grading -1 two units lower
        assert!(svg.contains(r#"<circle cx="40" cy="120""#));
        assert!(svg.contains(r#"<circle cx="120" cy="40""#));
    }

    #[test]
    fn reflected_has_dashed_exterior_and_line() {
        let c = reflect(&stable_complex(normalize(13, 5).unwrap()), 0).unwrap();
        let svg = render(&c);
        assert_eq!(svg.matches(r#"class="exterior""#).count(), 3);
        assert_eq!(svg.matches("stroke-dasharray").count(), 3);
        assert_eq!(svg.matches(r#"class="interior""#).count(), 3);
        assert_eq!(svg.matches(r#"class="reflection""#).count(), 1);
    }

    #[test]
    fn empty_complex_renders() {
        let c = ck_complex(normalize(3, 1).unwrap(), 5);
        let svg = render(&c);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 0);
    }
}
