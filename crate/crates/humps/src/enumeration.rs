//! Exhaustive, capped enumeration of path families, in lexicographic order
//! with `U < F < D`.

use std::collections::VecDeque;

use num_bigint::BigUint;
use thiserror::Error;

use crate::path::{Family, FamilyKind, Step, StepSeq};
use crate::stats::{self, ClassKind, Hump, PathClass};

/// Errors from enumeration requests.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {order} exceeds the {kind} enumeration cap {cap}")]
    OrderTooLarge {
        kind: FamilyKind,
        order: usize,
        cap: usize,
    },
}

/// A hump index that does not exist on its path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("hump index {index} out of range: the path has {humps} humps")]
pub struct InvalidHumpIndex {
    pub index: usize,
    pub humps: usize,
}

/// Upper bounds on enumeration orders. Streams refuse orders above the cap
/// so runaway requests fail fast instead of running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCaps {
    /// Cap on the step count of three-letter fixed-length families.
    pub motzkin_steps: usize,
    /// Cap on the order of flat-free balanced families.
    pub dyck_order: usize,
    /// Cap on the order of Schröder-shaped families.
    pub schroeder_order: usize,
}

impl Default for EnumCaps {
    fn default() -> EnumCaps {
        EnumCaps {
            motzkin_steps: 14,
            dyck_order: 10,
            schroeder_order: 8,
        }
    }
}

impl EnumCaps {
    pub fn cap_for(&self, kind: FamilyKind) -> usize {
        match kind.base() {
            FamilyKind::Dyck => self.dyck_order,
            FamilyKind::Motzkin => self.motzkin_steps,
            FamilyKind::Schroeder => self.schroeder_order,
            _ => unreachable!(),
        }
    }
}

const THREE_LETTER_MENU: [Step; 3] = [Step::Up, Step::Flat, Step::Down];
const TWO_LETTER_MENU: [Step; 2] = [Step::Up, Step::Down];

/// A lexicographic stream of every member of one family.
///
/// Internally a depth-first cursor over the prefix tree, pruned to prefixes
/// that can still be completed, so work stays proportional to the output.
#[derive(Debug, Clone)]
pub struct PathStream {
    family: Family,
    steps: Vec<Step>,
    // Next menu index to try at each depth; always one entry longer than
    // `steps` once started.
    cand: Vec<u8>,
    height: i64,
    up: usize,
    down: usize,
    flat: usize,
    started: bool,
    done: bool,
}

impl PathStream {
    pub fn new(family: Family, caps: &EnumCaps) -> Result<PathStream, EnumError> {
        let cap = caps.cap_for(family.kind);
        if family.order > cap {
            return Err(EnumError::OrderTooLarge {
                kind: family.kind,
                order: family.order,
                cap,
            });
        }
        Ok(PathStream {
            family,
            steps: Vec::new(),
            cand: Vec::new(),
            height: 0,
            up: 0,
            down: 0,
            flat: 0,
            started: false,
            done: false,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    fn menu(&self) -> &'static [Step] {
        if self.family.kind.allows_flat() {
            &THREE_LETTER_MENU
        } else {
            &TWO_LETTER_MENU
        }
    }

    /// Whether the current prefix is a full member. Members are never proper
    /// prefixes of one another within a family, so complete nodes are leaves.
    fn is_complete(&self) -> bool {
        let n = self.family.order;
        match self.family.kind.base() {
            FamilyKind::Dyck => self.steps.len() == 2 * n,
            FamilyKind::Motzkin => self.steps.len() == n,
            FamilyKind::Schroeder => {
                self.height == 0 && self.up == self.down && self.up + self.flat == n
            }
            _ => unreachable!(),
        }
    }

    /// Whether appending `s` leaves a prefix that still extends to at least
    /// one member. The checks are exact, so the walk never dead-ends.
    fn feasible(&self, s: Step) -> bool {
        let n = self.family.order;
        let h = self.height + s.delta();
        if !self.family.kind.is_super() && h < 0 {
            return false;
        }
        match self.family.kind.base() {
            FamilyKind::Dyck => match s {
                Step::Up => self.up < n,
                Step::Down => self.down < n,
                Step::Flat => false,
            },
            FamilyKind::Motzkin => {
                let remaining = (n - self.steps.len() - 1) as i64;
                h.abs() <= remaining
            }
            FamilyKind::Schroeder => {
                let (mut u, mut d, mut f) = (self.up, self.down, self.flat);
                match s {
                    Step::Up => u += 1,
                    Step::Down => d += 1,
                    Step::Flat => f += 1,
                }
                u.max(d) + f <= n
            }
            _ => unreachable!(),
        }
    }

    fn try_descend(&mut self) -> bool {
        let menu = self.menu();
        let depth = self.steps.len();
        while (self.cand[depth] as usize) < menu.len() {
            let s = menu[self.cand[depth] as usize];
            self.cand[depth] += 1;
            if self.feasible(s) {
                self.steps.push(s);
                self.height += s.delta();
                match s {
                    Step::Up => self.up += 1,
                    Step::Down => self.down += 1,
                    Step::Flat => self.flat += 1,
                }
                self.cand.push(0);
                return true;
            }
        }
        false
    }

    fn backtrack(&mut self) -> bool {
        match self.steps.pop() {
            Some(s) => {
                self.cand.pop();
                self.height -= s.delta();
                match s {
                    Step::Up => self.up -= 1,
                    Step::Down => self.down -= 1,
                    Step::Flat => self.flat -= 1,
                }
                true
            }
            None => false,
        }
    }
}

impl Iterator for PathStream {
    type Item = StepSeq;

    fn next(&mut self) -> Option<StepSeq> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.cand.push(0);
            if self.is_complete() {
                return Some(StepSeq::from_steps(self.steps.clone()));
            }
        }
        loop {
            if !self.is_complete() && self.try_descend() {
                if self.is_complete() {
                    return Some(StepSeq::from_steps(self.steps.clone()));
                }
                continue;
            }
            if !self.backtrack() {
                self.done = true;
                return None;
            }
        }
    }
}

/// A path together with one chosen hump on it.
///
/// Construction validates the hump index, so a value of this type always
/// points at a real hump.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedPath {
    path: StepSeq,
    hump_index: usize,
}

impl MarkedPath {
    pub fn new(path: StepSeq, hump_index: usize) -> Result<MarkedPath, InvalidHumpIndex> {
        let humps = stats::humps(&path).len();
        if hump_index >= humps {
            return Err(InvalidHumpIndex {
                index: hump_index,
                humps,
            });
        }
        Ok(MarkedPath { path, hump_index })
    }

    pub fn path(&self) -> &StepSeq {
        &self.path
    }

    pub fn hump_index(&self) -> usize {
        self.hump_index
    }

    /// The marked hump itself.
    pub fn hump(&self) -> Hump {
        stats::humps(&self.path)[self.hump_index]
    }

    pub fn into_parts(self) -> (StepSeq, usize) {
        (self.path, self.hump_index)
    }
}

/// Stream of every `(path, hump)` pair of a family: each enumerated path is
/// expanded into one marked path per hump, humps left to right.
#[derive(Debug, Clone)]
pub struct MarkedPathStream {
    inner: PathStream,
    pending: VecDeque<MarkedPath>,
}

impl Iterator for MarkedPathStream {
    type Item = MarkedPath;

    fn next(&mut self) -> Option<MarkedPath> {
        loop {
            if let Some(m) = self.pending.pop_front() {
                return Some(m);
            }
            let path = self.inner.next()?;
            let humps = stats::humps(&path).len();
            for i in 0..humps {
                self.pending.push_back(MarkedPath {
                    path: path.clone(),
                    hump_index: i,
                });
            }
        }
    }
}

/// Pattern over [`PathClass`] used for stream filtering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassPattern {
    /// Restrict the kind; `None` accepts every kind.
    pub kind: Option<KindPattern>,
    /// Restrict the hump count; `None` accepts every count.
    pub humps: Option<usize>,
}

/// Kind restriction of a [`ClassPattern`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindPattern {
    AllFlat,
    /// First non-flat step is up, regardless of the last.
    UpFirst,
    UpUp,
    UpDown,
    DownFirst,
}

impl KindPattern {
    pub fn matches(self, kind: ClassKind) -> bool {
        match self {
            KindPattern::AllFlat => kind == ClassKind::AllFlat,
            KindPattern::UpFirst => kind.is_up_first(),
            KindPattern::UpUp => kind == ClassKind::UpUp,
            KindPattern::UpDown => kind == ClassKind::UpDown,
            KindPattern::DownFirst => kind == ClassKind::DownFirst,
        }
    }
}

impl ClassPattern {
    pub fn up_first() -> ClassPattern {
        ClassPattern {
            kind: Some(KindPattern::UpFirst),
            humps: None,
        }
    }

    pub fn with_humps(self, humps: usize) -> ClassPattern {
        ClassPattern {
            humps: Some(humps),
            ..self
        }
    }

    pub fn matches(&self, class: &PathClass) -> bool {
        self.kind.is_none_or(|k| k.matches(class.kind))
            && self.humps.is_none_or(|h| class.humps == h)
    }
}

/// All members of `family`, lexicographic under `U < F < D`.
pub fn enumerate(family: Family, caps: &EnumCaps) -> Result<PathStream, EnumError> {
    PathStream::new(family, caps)
}

/// All marked paths of `family`: every member paired with each of its humps.
pub fn enumerate_marked(family: Family, caps: &EnumCaps) -> Result<MarkedPathStream, EnumError> {
    Ok(MarkedPathStream {
        inner: PathStream::new(family, caps)?,
        pending: VecDeque::new(),
    })
}

/// Exact member count obtained by walking the stream.
pub fn count_by_enumeration(family: Family, caps: &EnumCaps) -> Result<BigUint, EnumError> {
    let mut count = 0u64;
    for _ in enumerate(family, caps)? {
        count += 1;
    }
    Ok(BigUint::from(count))
}

/// Keeps only the paths whose classification matches `pattern`.
pub fn filter_class<I>(stream: I, pattern: ClassPattern) -> impl Iterator<Item = StepSeq>
where
    I: Iterator<Item = StepSeq>,
{
    stream.filter(move |p| pattern.matches(&stats::classify(p)))
}
