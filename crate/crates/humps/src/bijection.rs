//! The hump-marking correspondence.
//!
//! The forward map takes a nonnegative path with one marked hump and
//! produces an unconstrained path of the same shape whose first non-flat
//! step is up. It cuts the source at three points, reassembles the four
//! segments with two of them reflected, and in doing so trades the mark for
//! the freedom to cross the axis. The backward map recovers the cut points
//! from the image alone, which is what makes the construction invertible.

use thiserror::Error;

use crate::enumeration::MarkedPath;
use crate::path::{Step, StepSeq};
use crate::stats::{self, PathClass};

/// Errors from either direction of the correspondence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("the marked path must stay nonnegative and end at height 0")]
    NotNonnegativePath,
    #[error("the path must end at height 0 with its first non-flat step up")]
    NotUStar,
    #[error("no hump point lies strictly left of cut point b")]
    NoHumpLeftOfB,
    #[error("the reassembled path is not a nonnegative preimage")]
    NotInImage,
    #[error("point {point} is not strictly left of cut point b = {b}")]
    PointNotLeftOfB { point: usize, b: usize },
}

/// The three cut points of one application, `a <= b <= c <= len`.
///
/// They split a path into segments `[0,a)`, `[a,b)`, `[b,c)` and `[c,len)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitPoints {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Outcome of the forward map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiResult {
    pub image: StepSeq,
    pub split: SplitPoints,
    pub image_class: PathClass,
}

/// Cut points for the forward direction.
///
/// With `p` the marked hump point:
/// * `c` is the leftmost valley point right of `p`, the endpoint included;
/// * `b` is the rightmost point left of `p` at the height of `c`;
/// * `a` is the rightmost point at height 0 not right of `b`.
pub fn find_split_forward(m: &MarkedPath) -> Result<SplitPoints, BijectionError> {
    let path = m.path();
    let profile = path.heights();
    if !profile.is_nonnegative() || profile.final_height() != 0 {
        return Err(BijectionError::NotNonnegativePath);
    }
    let p = m.hump().hump_point;
    let c = stats::valleys(path, true)
        .iter()
        .map(|v| v.valley_point)
        .find(|&v| v > p)
        .expect("the terminal valley lies right of every hump point");
    let target = profile.at(c);
    let b = (0..p)
        .rev()
        .find(|&i| profile.at(i) == target)
        .expect("the climb to the marked hump passes the height of c");
    let a = (0..=b)
        .rev()
        .find(|&i| profile.at(i) == 0)
        .expect("the origin sits at height 0");
    Ok(SplitPoints { a, b, c })
}

/// The forward map. Reassembles the four segments as
/// `L0 · L2 · mirror(L3) · mirror(L1)` and classifies the image.
pub fn phi(m: &MarkedPath) -> Result<PhiResult, BijectionError> {
    let split = find_split_forward(m)?;
    let path = m.path();
    let n = path.len();
    let l0 = path.segment(0, split.a).expect("cut points are in range");
    let l1 = path
        .segment(split.a, split.b)
        .expect("cut points are in range");
    let l2 = path
        .segment(split.b, split.c)
        .expect("cut points are in range");
    let l3 = path.segment(split.c, n).expect("cut points are in range");
    let image = StepSeq::concat(&[&l0, &l2, &l3.mirror(), &l1.mirror()]);
    let image_class = stats::classify(&image);
    Ok(PhiResult {
        image,
        split,
        image_class,
    })
}

/// Cut points for the backward direction, plus the hump point that carries
/// the mark back.
///
/// * `b` is the leftmost point at height 0 whose own next step goes down
///   (the first place the path is about to cross the axis); when the path
///   never crosses, `b` is the endpoint;
/// * `a` is the rightmost point at height 0 strictly left of `b` whose next
///   step is not flat (0 when none exists). Flat steps sitting at height 0
///   right before `b` belong to the mirrored block that follows, so the cut
///   has to land before them;
/// * `c` is the rightmost point from `b` on that attains the maximum height
///   of that suffix;
/// * the returned hump point is the rightmost one strictly left of `b`.
pub fn find_split_backward(l: &StepSeq) -> Result<(SplitPoints, usize), BijectionError> {
    let profile = l.heights();
    let first_non_flat = l.iter().find(|&s| s != Step::Flat);
    if profile.final_height() != 0 || first_non_flat != Some(Step::Up) {
        return Err(BijectionError::NotUStar);
    }
    let n = l.len();
    let b = (0..n)
        .find(|&i| profile.at(i) == 0 && l.step(i) == Step::Down)
        .unwrap_or(n);
    let a = (0..b)
        .rev()
        .find(|&i| profile.at(i) == 0 && l.step(i) != Step::Flat)
        .unwrap_or(0);
    let c = (b..=n)
        .max_by_key(|&i| (profile.at(i), i))
        .expect("the suffix from b contains at least the endpoint");
    let hump_point_in_l = stats::humps(l)
        .iter()
        .map(|h| h.hump_point)
        .rfind(|&p| p < b)
        .ok_or(BijectionError::NoHumpLeftOfB)?;
    Ok((SplitPoints { a, b, c }, hump_point_in_l))
}

/// Where a hump point of the image lands in the reassembled preimage.
///
/// Points up to `a` keep their position; a point strictly between `a` and
/// `b` moves right by the length of the final segment, which is spliced in
/// before it. Points from `b` on are outside the carried region.
pub fn relocate_hump_point(
    split: &SplitPoints,
    path_len: usize,
    hump_point_in_l: usize,
) -> Result<usize, BijectionError> {
    if hump_point_in_l <= split.a {
        Ok(hump_point_in_l)
    } else if hump_point_in_l < split.b {
        Ok(hump_point_in_l + (path_len - split.c))
    } else {
        Err(BijectionError::PointNotLeftOfB {
            point: hump_point_in_l,
            b: split.b,
        })
    }
}

/// The backward map. Reassembles `L0 · mirror(L3) · L1 · mirror(L2)` and
/// re-marks the carried hump.
pub fn psi(l: &StepSeq) -> Result<MarkedPath, BijectionError> {
    let (split, hump_point_in_l) = find_split_backward(l)?;
    let n = l.len();
    let l0 = l.segment(0, split.a).expect("cut points are in range");
    let l1 = l
        .segment(split.a, split.b)
        .expect("cut points are in range");
    let l2 = l
        .segment(split.b, split.c)
        .expect("cut points are in range");
    let l3 = l.segment(split.c, n).expect("cut points are in range");
    let preimage = StepSeq::concat(&[&l0, &l3.mirror(), &l1, &l2.mirror()]);
    let profile = preimage.heights();
    if !profile.is_nonnegative() || profile.final_height() != 0 {
        return Err(BijectionError::NotInImage);
    }
    let hump_point = relocate_hump_point(&split, n, hump_point_in_l)?;
    let hump_index = stats::humps(&preimage)
        .iter()
        .position(|h| h.hump_point == hump_point)
        .ok_or(BijectionError::NotInImage)?;
    Ok(MarkedPath::new(preimage, hump_index).expect("index comes from the hump list"))
}
