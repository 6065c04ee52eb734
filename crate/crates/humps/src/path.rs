//! Step sequences over the three-letter alphabet `{U, F, D}`, their height
//! profiles, and the path families built from them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors from parsing or slicing step sequences.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid character {found:?} at position {position} (expected 'U', 'D' or 'F')")]
    InvalidCharacter { position: usize, found: char },
    #[error("segment {start}..{end} out of range for a path of length {len}")]
    IndexOutOfRange {
        start: usize,
        end: usize,
        len: usize,
    },
}

/// One lattice step.
///
/// The variant order fixes the derived ordering `U < F < D`, which is the
/// ordering enumeration streams and the golden tests rely on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// Raises the height by one.
    Up,
    /// Keeps the height unchanged.
    Flat,
    /// Lowers the height by one.
    Down,
}

impl Step {
    /// Height change contributed by this step.
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Flat => 0,
            Step::Down => -1,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Flat => 'F',
            Step::Down => 'D',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::Up),
            'F' => Some(Step::Flat),
            'D' => Some(Step::Down),
            _ => None,
        }
    }
}

/// Step counts of a sequence, by kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StepCounts {
    pub up: usize,
    pub down: usize,
    pub flat: usize,
}

/// An immutable sequence of steps.
///
/// A path of `t` steps has `t + 1` *points*, indexed `0..=t`; point `i` sits
/// between steps `i - 1` and `i`. The derived `Ord` is lexicographic with
/// `U < F < D` and a proper prefix ordered before its extensions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StepSeq {
    steps: Vec<Step>,
}

impl StepSeq {
    pub fn from_steps(steps: Vec<Step>) -> StepSeq {
        StepSeq { steps }
    }

    pub fn empty() -> StepSeq {
        StepSeq::default()
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Step at index `i`; panics when out of range.
    pub fn step(&self, i: usize) -> Step {
        self.steps[i]
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, Step>> {
        self.steps.iter().copied()
    }

    pub fn counts(&self) -> StepCounts {
        let mut c = StepCounts::default();
        for s in self.iter() {
            match s {
                Step::Up => c.up += 1,
                Step::Down => c.down += 1,
                Step::Flat => c.flat += 1,
            }
        }
        c
    }

    /// Heights of all `len + 1` points, starting from 0.
    pub fn heights(&self) -> HeightProfile {
        let mut heights = Vec::with_capacity(self.len() + 1);
        let mut h = 0i64;
        heights.push(h);
        for s in self.iter() {
            h += s.delta();
            heights.push(h);
        }
        HeightProfile { heights }
    }

    /// The reflection across the horizontal axis: every `U` becomes `D` and
    /// vice versa, flats stay. An involution; heights negate pointwise.
    pub fn mirror(&self) -> StepSeq {
        let steps = self
            .iter()
            .map(|s| match s {
                Step::Up => Step::Down,
                Step::Down => Step::Up,
                Step::Flat => Step::Flat,
            })
            .collect();
        StepSeq { steps }
    }

    /// The segment of steps `start..end` (between points `start` and `end`).
    pub fn segment(&self, start: usize, end: usize) -> Result<StepSeq, PathError> {
        if start > end || end > self.len() {
            return Err(PathError::IndexOutOfRange {
                start,
                end,
                len: self.len(),
            });
        }
        Ok(StepSeq {
            steps: self.steps[start..end].to_vec(),
        })
    }

    /// Concatenation of the given parts, in order.
    pub fn concat(parts: &[&StepSeq]) -> StepSeq {
        let mut steps = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for p in parts {
            steps.extend_from_slice(&p.steps);
        }
        StepSeq { steps }
    }

    pub fn parse(text: &str) -> Result<StepSeq, PathError> {
        text.parse()
    }
}

impl FromStr for StepSeq {
    type Err = PathError;

    fn from_str(text: &str) -> Result<StepSeq, PathError> {
        let mut steps = Vec::with_capacity(text.len());
        for (position, found) in text.chars().enumerate() {
            match Step::from_char(found) {
                Some(s) => steps.push(s),
                None => return Err(PathError::InvalidCharacter { position, found }),
            }
        }
        Ok(StepSeq { steps })
    }
}

impl fmt::Display for StepSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.iter() {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a StepSeq {
    type Item = Step;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Step>>;

    fn into_iter(self) -> Self::IntoIter {
        self.steps.iter().copied()
    }
}

/// Point heights of a path: entry `i` is the height after the first `i` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    heights: Vec<i64>,
}

impl HeightProfile {
    /// Number of points (always path length + 1).
    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a profile always contains the origin point
    }

    /// Height at point `i`; panics when out of range.
    pub fn at(&self, point: usize) -> i64 {
        self.heights[point]
    }

    pub fn final_height(&self) -> i64 {
        *self.heights.last().expect("profile contains the origin")
    }

    pub fn min(&self) -> i64 {
        self.heights.iter().copied().min().expect("non-empty")
    }

    pub fn max(&self) -> i64 {
        self.heights.iter().copied().max().expect("non-empty")
    }

    pub fn is_nonnegative(&self) -> bool {
        self.min() >= 0
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.heights
    }
}

/// The six path families, without their order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Dyck,
    Motzkin,
    Schroeder,
    SuperDyck,
    SuperMotzkin,
    SuperSchroeder,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Dyck,
        FamilyKind::Motzkin,
        FamilyKind::Schroeder,
        FamilyKind::SuperDyck,
        FamilyKind::SuperMotzkin,
        FamilyKind::SuperSchroeder,
    ];

    /// Whether the family drops the "stay nonnegative" constraint.
    pub fn is_super(self) -> bool {
        matches!(
            self,
            FamilyKind::SuperDyck | FamilyKind::SuperMotzkin | FamilyKind::SuperSchroeder
        )
    }

    /// Whether members may contain flat steps.
    pub fn allows_flat(self) -> bool {
        !matches!(self, FamilyKind::Dyck | FamilyKind::SuperDyck)
    }

    /// The height-constrained family with the same step shape.
    pub fn base(self) -> FamilyKind {
        match self {
            FamilyKind::Dyck | FamilyKind::SuperDyck => FamilyKind::Dyck,
            FamilyKind::Motzkin | FamilyKind::SuperMotzkin => FamilyKind::Motzkin,
            FamilyKind::Schroeder | FamilyKind::SuperSchroeder => FamilyKind::Schroeder,
        }
    }

    /// The unconstrained-height family with the same step shape.
    pub fn super_variant(self) -> FamilyKind {
        match self.base() {
            FamilyKind::Dyck => FamilyKind::SuperDyck,
            FamilyKind::Motzkin => FamilyKind::SuperMotzkin,
            FamilyKind::Schroeder => FamilyKind::SuperSchroeder,
            _ => unreachable!(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Dyck => "dyck",
            FamilyKind::Motzkin => "motzkin",
            FamilyKind::Schroeder => "schroeder",
            FamilyKind::SuperDyck => "super-dyck",
            FamilyKind::SuperMotzkin => "super-motzkin",
            FamilyKind::SuperSchroeder => "super-schroeder",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<FamilyKind, String> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// A family together with its order `n`.
///
/// Membership conventions, all requiring the path to end at height 0:
/// * Dyck order `n`: `n` ups and `n` downs, no flats;
/// * Motzkin order `n`: exactly `n` steps;
/// * Schröder order `n`: `k` ups, `k` downs and `n - k` flats for some `k`
///   (so `n + k` steps in total).
///
/// The non-super variants additionally require every point height to be
/// nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Family {
    pub kind: FamilyKind,
    pub order: usize,
}

impl Family {
    pub fn new(kind: FamilyKind, order: usize) -> Family {
        Family { kind, order }
    }

    pub fn dyck(order: usize) -> Family {
        Family::new(FamilyKind::Dyck, order)
    }

    pub fn motzkin(order: usize) -> Family {
        Family::new(FamilyKind::Motzkin, order)
    }

    pub fn schroeder(order: usize) -> Family {
        Family::new(FamilyKind::Schroeder, order)
    }

    pub fn super_dyck(order: usize) -> Family {
        Family::new(FamilyKind::SuperDyck, order)
    }

    pub fn super_motzkin(order: usize) -> Family {
        Family::new(FamilyKind::SuperMotzkin, order)
    }

    pub fn super_schroeder(order: usize) -> Family {
        Family::new(FamilyKind::SuperSchroeder, order)
    }

    /// The unconstrained-height family of the same shape and order.
    pub fn super_variant(&self) -> Family {
        Family::new(self.kind.super_variant(), self.order)
    }

    /// Membership test for arbitrary step sequences.
    pub fn contains(&self, p: &StepSeq) -> bool {
        let c = p.counts();
        let shape_ok = match self.kind.base() {
            FamilyKind::Dyck => c.flat == 0 && c.up == self.order && c.down == self.order,
            FamilyKind::Motzkin => p.len() == self.order && c.up == c.down,
            FamilyKind::Schroeder => c.up == c.down && c.up + c.flat == self.order,
            _ => unreachable!(),
        };
        // Equal up/down counts already force the final height to 0.
        shape_ok && (self.kind.is_super() || p.heights().is_nonnegative())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str) -> StepSeq {
        StepSeq::parse(text).unwrap()
    }

    #[test]
    fn parse_and_format_round_trip() {
        let p = seq("UFFDUD");
        assert_eq!(p.to_string(), "UFFDUD");
        assert_eq!(p.len(), 6);
        assert_eq!(StepSeq::parse("").unwrap(), StepSeq::empty());
    }

    #[test]
    fn parse_rejects_unknown_characters() {
        assert_eq!(
            StepSeq::parse("UXD"),
            Err(PathError::InvalidCharacter {
                position: 1,
                found: 'X'
            })
        );
        assert_eq!(
            StepSeq::parse("ud"),
            Err(PathError::InvalidCharacter {
                position: 0,
                found: 'u'
            })
        );
    }

    #[test]
    fn heights_of_a_peak_and_a_dip() {
        assert_eq!(seq("UUDUDD").heights().as_slice(), [0, 1, 2, 1, 2, 1, 0]);
        assert_eq!(seq("UDDDUU").heights().as_slice(), [0, 1, 0, -1, -2, -1, 0]);
        assert_eq!(StepSeq::empty().heights().as_slice(), [0]);
    }

    #[test]
    fn mirror_is_an_involution_and_negates_heights() {
        let p = seq("UUDFDUFD");
        assert_eq!(p.mirror().mirror(), p);
        let flipped = p.mirror().heights();
        for (i, h) in p.heights().as_slice().iter().enumerate() {
            assert_eq!(flipped.at(i), -h);
        }
        assert_eq!(seq("UFD").mirror(), seq("DFU"));
    }

    #[test]
    fn segment_bounds_are_checked() {
        let p = seq("UUDD");
        assert_eq!(p.segment(1, 3).unwrap(), seq("UD"));
        assert_eq!(p.segment(2, 2).unwrap(), StepSeq::empty());
        assert_eq!(
            p.segment(3, 2),
            Err(PathError::IndexOutOfRange {
                start: 3,
                end: 2,
                len: 4
            })
        );
        assert_eq!(
            p.segment(0, 5),
            Err(PathError::IndexOutOfRange {
                start: 0,
                end: 5,
                len: 4
            })
        );
    }

    #[test]
    fn step_ordering_is_u_then_f_then_d() {
        assert!(Step::Up < Step::Flat && Step::Flat < Step::Down);
        assert!(seq("UD") < seq("F"));
        assert!(seq("F") < seq("DU"));
        assert!(seq("U") < seq("UD"));
    }

    #[test]
    fn family_membership() {
        assert!(Family::dyck(3).contains(&seq("UUDUDD")));
        assert!(!Family::dyck(3).contains(&seq("UDDUUD")));
        assert!(Family::super_dyck(3).contains(&seq("UDDUUD")));
        assert!(!Family::dyck(2).contains(&seq("UUDUDD")));

        assert!(Family::motzkin(3).contains(&seq("UFD")));
        assert!(!Family::motzkin(3).contains(&seq("UDD")));
        assert!(!Family::motzkin(2).contains(&seq("UFD")));
        assert!(Family::super_motzkin(2).contains(&seq("DU")));
        assert!(!Family::motzkin(2).contains(&seq("DU")));

        assert!(Family::schroeder(2).contains(&seq("UFD")));
        assert!(Family::schroeder(2).contains(&seq("UUDD")));
        assert!(Family::schroeder(2).contains(&seq("FF")));
        assert!(!Family::schroeder(2).contains(&seq("UFFD")));
        assert!(Family::super_schroeder(1).contains(&seq("DU")));
        assert!(!Family::schroeder(1).contains(&seq("DU")));

        let empty = StepSeq::empty();
        for kind in FamilyKind::ALL {
            assert!(Family::new(kind, 0).contains(&empty));
        }
    }

    #[test]
    fn family_names_round_trip() {
        for kind in FamilyKind::ALL {
            assert_eq!(kind.name().parse::<FamilyKind>().unwrap(), kind);
        }
        assert!("dyk".parse::<FamilyKind>().is_err());
    }
}
