//! Occurrence statistics on step sequences: humps, valleys, the four-way
//! first/last classification, and the run-word factorization of flat-free
//! paths.

use thiserror::Error;

use crate::path::{Step, StepSeq};

/// Errors from statistics that require a restricted alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("flat step at position {position}; run words are defined for flat-free paths")]
    FlatStepPresent { position: usize },
}

/// One occurrence of an up step followed by zero or more flats and a down
/// step.
///
/// `d_index == u_index + 1 + flat_run` and `hump_point == u_index + 1` always
/// hold. A hump with `flat_run == 0` is a peak.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hump {
    /// Index of the up step.
    pub u_index: usize,
    /// Number of flat steps between the up and the down step.
    pub flat_run: usize,
    /// Index of the down step.
    pub d_index: usize,
    /// The point just after the up step.
    pub hump_point: usize,
}

/// One valley: a down step followed by zero or more flats and an up step,
/// or the terminal valley at the path's endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Valley {
    /// Index of the down step; `None` for the terminal valley.
    pub d_index: Option<usize>,
    /// The point just before the up step, or `len` for the terminal valley.
    pub valley_point: usize,
}

/// First/last non-flat classification of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// No non-flat step at all.
    AllFlat,
    /// First non-flat is up, last non-flat is up.
    UpUp,
    /// First non-flat is up, last non-flat is down.
    UpDown,
    /// First non-flat is down.
    DownFirst,
}

impl ClassKind {
    /// Whether the first non-flat step is up.
    pub fn is_up_first(self) -> bool {
        matches!(self, ClassKind::UpUp | ClassKind::UpDown)
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::AllFlat => "all-flat",
            ClassKind::UpUp => "UU",
            ClassKind::UpDown => "UD",
            ClassKind::DownFirst => "down-first",
        }
    }
}

/// A path's class together with its hump count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathClass {
    pub kind: ClassKind,
    pub humps: usize,
}

/// The run-length factorization of a flat-free path: maximal runs of ups and
/// downs, alternating, every exponent at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunWord {
    /// Alternating `(step, run length)` pairs; steps are never `Flat`.
    pub runs: Vec<(Step, usize)>,
}

impl RunWord {
    /// Lengths of the up runs, left to right.
    pub fn up_exponents(&self) -> Vec<usize> {
        self.runs
            .iter()
            .filter(|(s, _)| *s == Step::Up)
            .map(|&(_, n)| n)
            .collect()
    }

    /// Lengths of the down runs, left to right.
    pub fn down_exponents(&self) -> Vec<usize> {
        self.runs
            .iter()
            .filter(|(s, _)| *s == Step::Down)
            .map(|&(_, n)| n)
            .collect()
    }

    /// Expands the factorization back into the path it came from.
    pub fn reconstruct(&self) -> StepSeq {
        let mut steps = Vec::new();
        for &(s, n) in &self.runs {
            steps.extend(std::iter::repeat_n(s, n));
        }
        StepSeq::from_steps(steps)
    }
}

/// All humps of `p`, left to right.
pub fn humps(p: &StepSeq) -> Vec<Hump> {
    let steps = p.steps();
    let mut found = Vec::new();
    for (i, &s) in steps.iter().enumerate() {
        if s != Step::Up {
            continue;
        }
        let mut j = i + 1;
        while j < steps.len() && steps[j] == Step::Flat {
            j += 1;
        }
        if j < steps.len() && steps[j] == Step::Down {
            found.push(Hump {
                u_index: i,
                flat_run: j - i - 1,
                d_index: j,
                hump_point: i + 1,
            });
        }
    }
    found
}

/// All valleys of `p`, left to right. With `include_endpoint` the terminal
/// valley at point `len(p)` is appended.
pub fn valleys(p: &StepSeq, include_endpoint: bool) -> Vec<Valley> {
    let steps = p.steps();
    let mut found = Vec::new();
    for (i, &s) in steps.iter().enumerate() {
        if s != Step::Down {
            continue;
        }
        let mut j = i + 1;
        while j < steps.len() && steps[j] == Step::Flat {
            j += 1;
        }
        if j < steps.len() && steps[j] == Step::Up {
            found.push(Valley {
                d_index: Some(i),
                valley_point: j,
            });
        }
    }
    if include_endpoint {
        found.push(Valley {
            d_index: None,
            valley_point: p.len(),
        });
    }
    found
}

/// The first/last classification of `p` with its hump count.
pub fn classify(p: &StepSeq) -> PathClass {
    let humps = humps(p).len();
    let first = p.iter().find(|&s| s != Step::Flat);
    let last = p.iter().rev().find(|&s| s != Step::Flat);
    let kind = match (first, last) {
        (None, _) => ClassKind::AllFlat,
        (Some(Step::Up), Some(Step::Up)) => ClassKind::UpUp,
        (Some(Step::Up), Some(Step::Down)) => ClassKind::UpDown,
        (Some(Step::Down), _) => ClassKind::DownFirst,
        _ => unreachable!("a non-flat step is up or down"),
    };
    PathClass { kind, humps }
}

/// The run-word factorization of a flat-free path.
pub fn run_word(p: &StepSeq) -> Result<RunWord, StatsError> {
    if let Some(position) = p.iter().position(|s| s == Step::Flat) {
        return Err(StatsError::FlatStepPresent { position });
    }
    let mut runs: Vec<(Step, usize)> = Vec::new();
    for s in p.iter() {
        match runs.last_mut() {
            Some((last, n)) if *last == s => *n += 1,
            _ => runs.push((s, 1)),
        }
    }
    Ok(RunWord { runs })
}
