//! Shape-level prediction of one reverse-bumping step.
//!
//! Given a bipartition and the box where a value leaves it, the classifier
//! names the box where the value lands, or whether the cascade stops with
//! an unbarred or barred letter. Only the shape is consulted.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitableau::Side;
use crate::partitions::{Bipartition, Partition};

/// Removal of the last box of row `row` on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FirstRemoval {
    pub side: Side,
    pub row: usize,
}

impl FirstRemoval {
    pub fn new(side: Side, row: usize) -> FirstRemoval {
        FirstRemoval { side, row }
    }

    /// The row is nonempty and strictly longer than the row below it.
    pub fn is_valid_on(&self, bp: &Bipartition) -> bool {
        let part = component(bp, self.side);
        self.row >= 1 && part.part(self.row) >= 1 && part.part(self.row) > part.part(self.row + 1)
    }

    /// The shape with the box removed, if the removal is valid.
    pub fn apply(&self, bp: &Bipartition) -> Option<Bipartition> {
        if !self.is_valid_on(bp) {
            return None;
        }
        let smaller = component(bp, self.side).remove_box(self.row)?;
        Some(match self.side {
            Side::Left => Bipartition::new(smaller, bp.nu.clone()),
            Side::Right => Bipartition::new(bp.mu.clone(), smaller),
        })
    }
}

impl fmt::Display for FirstRemoval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} row {}", self.side, self.row)
    }
}

fn component(bp: &Bipartition, side: Side) -> &Partition {
    match side {
        Side::Left => &bp.mu,
        Side::Right => &bp.nu,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TransitionOutcome {
    /// A box of the reduced shape that is removed next.
    Continue {
        side: Side,
        row: usize,
    },
    TerminateUnbarred,
    TerminateBarred,
}

impl fmt::Display for TransitionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransitionOutcome::Continue { side, row } => write!(f, "continue at {side} row {row}"),
            TransitionOutcome::TerminateUnbarred => f.write_str("terminate unbarred"),
            TransitionOutcome::TerminateBarred => f.write_str("terminate barred"),
        }
    }
}

/// The sub-case labels of the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    L1a,
    L1b,
    L1c,
    L1d,
    R2a,
    R2b,
    R2c,
    R2d,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassificationError {
    #[error("{first} is not a removable box of {bp}")]
    InvalidRemoval {
        bp: Bipartition,
        first: FirstRemoval,
    },
    #[error("no case matches removal of {first} from {bp}")]
    NoCase {
        bp: Bipartition,
        first: FirstRemoval,
    },
    #[error("cases {cases:?} match removal of {first} from {bp} with different targets")]
    Ambiguous {
        bp: Bipartition,
        first: FirstRemoval,
        cases: Vec<Case>,
    },
}

/// Classifies the step after `first` is removed from `bp`.
///
/// A case matches when its condition holds and its target is a removable
/// box of the reduced shape. All matching cases must name the same box;
/// the earliest one is reported.
pub fn second_decrement(
    bp: &Bipartition,
    first: FirstRemoval,
) -> Result<TransitionOutcome, ClassificationError> {
    classify(bp, first).map(|(outcome, _)| outcome)
}

/// As [`second_decrement`], also reporting which case fired.
pub fn classify(
    bp: &Bipartition,
    first: FirstRemoval,
) -> Result<(TransitionOutcome, Option<Case>), ClassificationError> {
    let reduced = first
        .apply(bp)
        .ok_or_else(|| ClassificationError::InvalidRemoval {
            bp: bp.clone(),
            first,
        })?;
    let m = first.row;
    let mu = |i: usize| bp.mu(i);
    let nu = |i: usize| bp.nu(i);

    match first.side {
        Side::Left if m == 1 => return Ok((TransitionOutcome::TerminateUnbarred, None)),
        Side::Left if bp.lambda_part(m) == 1 && mu(m) == 1 && nu(m - 1) == 0 => {
            return Ok((TransitionOutcome::TerminateBarred, None));
        }
        Side::Right if bp.lambda_part(m) == 1 && nu(m) == 1 => {
            return Ok((TransitionOutcome::TerminateBarred, None));
        }
        _ => {}
    }

    let candidates: Vec<(Case, bool, Side, usize)> = match first.side {
        Side::Left => {
            let nu_flat = nu(m - 1) == nu(m) && nu(m) != 0;
            vec![
                (
                    Case::L1a,
                    mu(m) - 1 > mu(m + 1) && (nu_flat || nu(m - 1) == 0),
                    Side::Left,
                    m,
                ),
                (
                    Case::L1b,
                    mu(m) - 1 == mu(m + 1)
                        && nu_flat
                        && (mu(m) == 1 || bp.max_gamma(m + 1) > bp.max_delta(m)),
                    Side::Right,
                    bp.max_delta(m),
                ),
                (
                    Case::L1c,
                    mu(m) - 1 == mu(m + 1)
                        && mu(m + 1) != 0
                        && ((nu_flat && bp.max_gamma(m + 1) <= bp.max_delta(m)) || nu(m - 1) == 0),
                    Side::Left,
                    bp.max_gamma(m + 1),
                ),
                (Case::L1d, nu(m - 1) > nu(m), Side::Right, m - 1),
            ]
        }
        Side::Right => vec![
            (Case::R2a, bp.max_gamma(m) == bp.max_delta(m), Side::Left, m),
            (
                Case::R2b,
                nu(m) - 1 > nu(m + 1) && (mu(m) == 0 || bp.max_gamma(m) > bp.max_delta(m)),
                Side::Right,
                m,
            ),
            (
                Case::R2c,
                nu(m) - 1 == nu(m + 1)
                    && nu(m + 1) != 0
                    && (mu(m) == 0 || bp.max_gamma(m) > bp.max_delta(m + 1)),
                Side::Right,
                bp.max_delta(m + 1),
            ),
            (
                Case::R2d,
                nu(m) - 1 == nu(m + 1) && (nu(m) == 1 || bp.max_gamma(m) <= bp.max_delta(m + 1)),
                Side::Left,
                bp.max_gamma(m),
            ),
        ],
    };

    let matched: Vec<(Case, Side, usize)> = candidates
        .into_iter()
        .filter(|&(_, cond, side, row)| cond && FirstRemoval::new(side, row).is_valid_on(&reduced))
        .map(|(case, _, side, row)| (case, side, row))
        .collect();
    match matched.as_slice() {
        [] => Err(ClassificationError::NoCase {
            bp: bp.clone(),
            first,
        }),
        [(case, side, row), rest @ ..] if rest.iter().all(|&(_, s, r)| (s, r) == (*side, *row)) => {
            Ok((
                TransitionOutcome::Continue {
                    side: *side,
                    row: *row,
                },
                Some(*case),
            ))
        }
        many => Err(ClassificationError::Ambiguous {
            bp: bp.clone(),
            first,
            cases: many.iter().map(|&(c, _, _)| c).collect(),
        }),
    }
}
