//! Annotated renderings for the two map directions: labeled cut points, a
//! circled hump point, and one span per block, on both sides of the map.

use humps::bijection::SplitPoints;
use humps::render::Annotation;

/// Labels sharing a point collapse into one `X=Y` caption so they stay
/// readable on the single label row.
fn merge_labels(labels: Vec<(&str, usize)>) -> Vec<(String, usize)> {
    let mut merged: Vec<(String, usize)> = Vec::new();
    for (name, point) in labels {
        match merged.iter_mut().find(|(_, p)| *p == point) {
            Some((text, _)) => {
                text.push('=');
                text.push_str(name);
            }
            None => merged.push((name.to_string(), point)),
        }
    }
    merged
}

fn spans(blocks: [(&str, usize, usize); 4]) -> Vec<(String, usize, usize)> {
    blocks
        .iter()
        .map(|(name, start, end)| (name.to_string(), *start, *end))
        .collect()
}

/// Both annotations for the forward direction: the marked source with its
/// four blocks, and the image with the blocks rearranged and two mirrored.
pub fn forward_pair(split: SplitPoints, hump_point: usize, len: usize) -> (Annotation, Annotation) {
    let SplitPoints { a, b, c } = split;
    let source = Annotation {
        labels: merge_labels(vec![
            ("O", 0),
            ("A", a),
            ("B", b),
            ("P", hump_point),
            ("C", c),
            ("N", len),
        ]),
        circles: vec![hump_point],
        spans: spans([("L0", 0, a), ("L1", a, b), ("L2", b, c), ("L3", c, len)]),
    };

    // Image block boundaries and where the circled point lands.
    let b2 = a + (c - b);
    let c2 = b2 + (len - c);
    let p2 = a + (hump_point - b);
    let image = Annotation {
        labels: merge_labels(vec![
            ("O", 0),
            ("A", a),
            ("P", p2),
            ("B", b2),
            ("C", c2),
            ("N", len),
        ]),
        circles: vec![p2],
        spans: spans([
            ("L0", 0, a),
            ("L2", a, b2),
            ("~L3", b2, c2),
            ("~L1", c2, len),
        ]),
    };
    (source, image)
}

/// Both annotations for the backward direction: the input with its cut
/// points and carried hump point, and the rebuilt path with the relocated
/// mark.
pub fn backward_pair(
    split: SplitPoints,
    carried_point: usize,
    relocated_point: usize,
    len: usize,
) -> (Annotation, Annotation) {
    let SplitPoints { a, b, c } = split;
    let image = Annotation {
        labels: merge_labels(vec![
            ("O", 0),
            ("A", a),
            ("P", carried_point),
            ("B", b),
            ("C", c),
            ("N", len),
        ]),
        circles: vec![carried_point],
        spans: spans([("L0", 0, a), ("L1", a, b), ("L2", b, c), ("L3", c, len)]),
    };

    let b2 = a + (len - c);
    let c2 = b2 + (b - a);
    let preimage = Annotation {
        labels: merge_labels(vec![("O", 0), ("A", a), ("P", relocated_point), ("N", len)]),
        circles: vec![relocated_point],
        spans: spans([
            ("L0", 0, a),
            ("~L3", a, b2),
            ("L1", b2, c2),
            ("~L2", c2, len),
        ]),
    };
    (image, preimage)
}
