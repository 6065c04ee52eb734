//! Deterministic ASCII and SVG pictures of paths, with optional point
//! labels, circled points, and labeled segment spans.

use std::fmt::Write as _;

use thiserror::Error;

use crate::path::{Step, StepSeq};

/// Errors from rendering requests.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("annotation out of range: {detail}")]
    BadAnnotation { detail: String },
}

/// Decorations attached to a rendering. All indices refer to points, so
/// they may range over `0..=len`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Annotation {
    /// `(label, point)` pairs drawn beneath the baseline.
    pub labels: Vec<(String, usize)>,
    /// Points marked with a small circle above the path.
    pub circles: Vec<usize>,
    /// `(label, start point, end point)` segment spans drawn above the path.
    pub spans: Vec<(String, usize, usize)>,
}

impl Annotation {
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty() && self.circles.is_empty() && self.spans.is_empty()
    }

    fn validate(&self, len: usize) -> Result<(), RenderError> {
        for (label, point) in &self.labels {
            if *point > len {
                return Err(RenderError::BadAnnotation {
                    detail: format!("label {label:?} at point {point} beyond {len}"),
                });
            }
        }
        for point in &self.circles {
            if *point > len {
                return Err(RenderError::BadAnnotation {
                    detail: format!("circle at point {point} beyond {len}"),
                });
            }
        }
        for (label, start, end) in &self.spans {
            if start > end || *end > len {
                return Err(RenderError::BadAnnotation {
                    detail: format!("span {label:?} {start}..{end} invalid for length {len}"),
                });
            }
        }
        Ok(())
    }
}

// A text canvas addressed by (row from top, column), grown on demand.
struct Canvas {
    rows: Vec<Vec<char>>,
}

impl Canvas {
    fn new(rows: usize) -> Canvas {
        Canvas {
            rows: vec![Vec::new(); rows],
        }
    }

    fn put(&mut self, row: usize, col: usize, ch: char) {
        let line = &mut self.rows[row];
        if line.len() <= col {
            line.resize(col + 1, ' ');
        }
        line[col] = ch;
    }

    fn put_str(&mut self, row: usize, col: usize, text: &str) {
        for (i, ch) in text.chars().enumerate() {
            self.put(row, col + i, ch);
        }
    }

    fn into_string(self) -> String {
        let mut out = String::new();
        for line in self.rows {
            let text: String = line.into_iter().collect();
            out.push_str(text.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Character-grid picture: one column per step, `/` up, `\` down, `_` flat,
/// spans above, circles over their points, labels on a line beneath.
pub fn render_ascii(p: &StepSeq, annotation: &Annotation) -> Result<String, RenderError> {
    annotation.validate(p.len())?;
    let profile = p.heights();

    // Each step draws into the band whose bottom edge is the lower of its
    // two endpoint heights; flats sit in the band above their level.
    let mut bands: Vec<i64> = Vec::with_capacity(p.len());
    for (i, s) in p.iter().enumerate() {
        let h = profile.at(i);
        bands.push(match s {
            Step::Up | Step::Flat => h,
            Step::Down => h - 1,
        });
    }
    let mut band_lo = bands.iter().copied().min().unwrap_or(0);
    let mut band_hi = bands.iter().copied().max().unwrap_or(0);
    for &point in &annotation.circles {
        let band = profile.at(point);
        band_lo = band_lo.min(band);
        band_hi = band_hi.max(band);
    }

    let span_rows = annotation.spans.len();
    let band_rows = (band_hi - band_lo + 1) as usize;
    let label_rows = usize::from(!annotation.labels.is_empty());
    let mut canvas = Canvas::new(span_rows + band_rows + label_rows);

    for (row, (label, start, end)) in annotation.spans.iter().enumerate() {
        canvas.put(row, *start, '|');
        for col in start + 1..*end {
            canvas.put(row, col, '-');
        }
        canvas.put(row, *end, '|');
        if end > start {
            let width = end - start - 1;
            let offset = 1 + width.saturating_sub(label.chars().count()) / 2;
            canvas.put_str(row, start + offset, label);
        } else {
            canvas.put_str(row, start + 1, label);
        }
    }

    let band_row = |band: i64| span_rows + (band_hi - band) as usize;
    for (i, s) in p.iter().enumerate() {
        let ch = match s {
            Step::Up => '/',
            Step::Down => '\\',
            Step::Flat => '_',
        };
        canvas.put(band_row(bands[i]), i, ch);
    }
    for &point in &annotation.circles {
        canvas.put(band_row(profile.at(point)), point, 'o');
    }

    if label_rows == 1 {
        let row = span_rows + band_rows;
        for (label, point) in &annotation.labels {
            canvas.put_str(row, *point, label);
        }
    }

    Ok(canvas.into_string())
}

const STEP_UNITS: i64 = 10;

/// Scalable picture using a small fixed subset of SVG 1.1: `polyline`,
/// `circle` and `text`. Geometry lives in path coordinates inside a group
/// with an explicit `scale(1,-1)` flip, so height grows upward; text is
/// placed in screen coordinates to stay upright. Output is byte-stable for
/// equal input.
pub fn render_svg(p: &StepSeq, annotation: &Annotation) -> Result<String, RenderError> {
    annotation.validate(p.len())?;
    let profile = p.heights();
    let len = p.len() as i64;

    let top = STEP_UNITS * profile.max() + 12 * annotation.spans.len() as i64;
    let bottom = STEP_UNITS * profile.min() - i64::from(!annotation.labels.is_empty()) * 16;
    let margin = 12i64;
    let min_x = -margin;
    let width = STEP_UNITS * len + 2 * margin;
    let min_y = -(top + margin);
    let height = top - bottom + 2 * margin;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"{min_x} {min_y} {width} {height}\" width=\"{width}\" height=\"{height}\">"
    );
    out.push_str("  <g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\">\n");

    // Dashed baseline at height zero.
    let _ = writeln!(
        out,
        "    <polyline points=\"0,0 {},0\" stroke-dasharray=\"2,3\"/>",
        STEP_UNITS * len
    );

    let mut points = String::new();
    for (i, h) in profile.as_slice().iter().enumerate() {
        if i > 0 {
            points.push(' ');
        }
        let _ = write!(points, "{},{}", STEP_UNITS * i as i64, STEP_UNITS * h);
    }
    let _ = writeln!(
        out,
        "    <polyline points=\"{points}\" stroke-width=\"1.5\"/>"
    );

    for &point in &annotation.circles {
        let _ = writeln!(
            out,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"4\"/>",
            STEP_UNITS * point as i64,
            STEP_UNITS * profile.at(point)
        );
    }

    for (row, (_, start, end)) in annotation.spans.iter().enumerate() {
        let y = STEP_UNITS * profile.max() + 12 * (row as i64 + 1);
        let _ = writeln!(
            out,
            "    <polyline points=\"{x0},{y0} {x0},{y} {x1},{y} {x1},{y1}\"/>",
            x0 = STEP_UNITS * *start as i64,
            y0 = y - 3,
            x1 = STEP_UNITS * *end as i64,
            y1 = y - 3,
        );
    }
    out.push_str("  </g>\n");

    for (row, (label, start, end)) in annotation.spans.iter().enumerate() {
        let y = -(STEP_UNITS * profile.max() + 12 * (row as i64 + 1)) - 3;
        let x = STEP_UNITS * (*start + *end) as i64 / 2;
        let _ = writeln!(
            out,
            "  <text x=\"{x}\" y=\"{y}\" text-anchor=\"middle\" \
             font-family=\"monospace\" font-size=\"10\">{label}</text>"
        );
    }

    let label_y = -(STEP_UNITS * profile.min()) + 14;
    for (label, point) in &annotation.labels {
        let _ = writeln!(
            out,
            "  <text x=\"{x}\" y=\"{label_y}\" text-anchor=\"middle\" \
             font-family=\"monospace\" font-size=\"10\">{label}</text>",
            x = STEP_UNITS * *point as i64
        );
    }

    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str) -> StepSeq {
        StepSeq::parse(text).unwrap()
    }

    #[test]
    fn ascii_flat_path_is_one_baseline_row() {
        let art = render_ascii(&seq("FFF"), &Annotation::default()).unwrap();
        assert_eq!(art, "___\n");
    }

    #[test]
    fn ascii_two_band_hill() {
        let art = render_ascii(&seq("UUDD"), &Annotation::default()).unwrap();
        assert_eq!(art, " /\\\n/  \\\n");
    }

    #[test]
    fn ascii_dip_below_baseline() {
        let art = render_ascii(&seq("UDDU"), &Annotation::default()).unwrap();
        assert_eq!(art, "/\\\n  \\/\n");
    }

    #[test]
    fn ascii_labels_land_on_their_columns() {
        let annotation = Annotation {
            labels: vec![("A".into(), 0), ("B".into(), 2), ("C".into(), 5)],
            ..Annotation::default()
        };
        let art = render_ascii(&seq("UDDUUD"), &annotation).unwrap();
        assert_eq!(art, "/\\  /\\\n  \\/\nA B  C\n");
    }

    #[test]
    fn ascii_circle_above_a_peak() {
        let annotation = Annotation {
            circles: vec![1],
            ..Annotation::default()
        };
        let art = render_ascii(&seq("UD"), &annotation).unwrap();
        assert_eq!(art, " o\n/\\\n");
    }

    #[test]
    fn ascii_span_row_sits_on_top() {
        let annotation = Annotation {
            spans: vec![("L2".into(), 0, 4)],
            ..Annotation::default()
        };
        let art = render_ascii(&seq("UUDD"), &annotation).unwrap();
        assert_eq!(art, "|L2-|\n /\\\n/  \\\n");
    }

    #[test]
    fn ascii_empty_path_renders_annotations_only() {
        let annotation = Annotation {
            labels: vec![("O".into(), 0)],
            ..Annotation::default()
        };
        let art = render_ascii(&StepSeq::empty(), &annotation).unwrap();
        assert_eq!(art, "\nO\n");
    }

    #[test]
    fn annotations_beyond_the_path_are_rejected() {
        let annotation = Annotation {
            circles: vec![3],
            ..Annotation::default()
        };
        assert!(matches!(
            render_ascii(&seq("UD"), &annotation),
            Err(RenderError::BadAnnotation { .. })
        ));
        let annotation = Annotation {
            spans: vec![("x".into(), 2, 1)],
            ..Annotation::default()
        };
        assert!(matches!(
            render_svg(&seq("UD"), &annotation),
            Err(RenderError::BadAnnotation { .. })
        ));
    }

    #[test]
    fn svg_peak_with_circle() {
        let annotation = Annotation {
            circles: vec![1],
            ..Annotation::default()
        };
        let svg = render_svg(&seq("UD"), &annotation).unwrap();
        assert!(svg.contains("<polyline points=\"0,0 10,10 20,0\" stroke-width=\"1.5\"/>"));
        assert!(svg.contains("<circle cx=\"10\" cy=\"10\" r=\"4\"/>"));
        assert!(svg.contains("scale(1,-1)"));
        assert!(svg.starts_with("<?xml"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn svg_empty_path_is_valid() {
        let svg = render_svg(&StepSeq::empty(), &Annotation::default()).unwrap();
        assert!(svg.contains("<polyline points=\"0,0\" stroke-width=\"1.5\"/>"));
    }

    #[test]
    fn svg_is_deterministic() {
        let annotation = Annotation {
            labels: vec![("O".into(), 0), ("N".into(), 6)],
            circles: vec![2],
            spans: vec![("L0".into(), 0, 3), ("L1".into(), 3, 6)],
        };
        let p = seq("UUDFDD");
        let first = render_svg(&p, &annotation).unwrap();
        for _ in 0..5 {
            assert_eq!(render_svg(&p, &annotation).unwrap(), first);
        }
    }
}
