//! The exotic Robinson-Schensted correspondence between signed permutations
//! and pairs of standard bitableaux of equal shape.
//!
//! Row comparisons use the interleaved [`RowId`] numbering throughout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitableau::{Bitableau, Cell, RowId, StandardBitableau, TableauError};
use crate::partitions::Bipartition;
use crate::signed_perm::{Letter, SignedPermutation};

#[derive(Debug, Clone, Deserialize)]
struct RawPair {
    #[serde(rename = "T")]
    t: StandardBitableau,
    #[serde(rename = "R")]
    r: StandardBitableau,
}

/// An insertion tableau `T` and a recording tableau `R` of the same shape.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct CorrespondencePair {
    #[serde(rename = "T")]
    t: StandardBitableau,
    #[serde(rename = "R")]
    r: StandardBitableau,
}

impl TryFrom<RawPair> for CorrespondencePair {
    type Error = TableauError;
    fn try_from(raw: RawPair) -> Result<Self, Self::Error> {
        CorrespondencePair::new(raw.t, raw.r)
    }
}

impl CorrespondencePair {
    pub fn new(t: StandardBitableau, r: StandardBitableau) -> Result<Self, TableauError> {
        let (first, second) = (t.shape(), r.shape());
        if first != second {
            return Err(TableauError::ShapeMismatch { first, second });
        }
        Ok(CorrespondencePair { t, r })
    }

    pub fn empty() -> Self {
        CorrespondencePair::default()
    }

    pub fn t(&self) -> &StandardBitableau {
        &self.t
    }

    pub fn r(&self) -> &StandardBitableau {
        &self.r
    }

    pub fn shape(&self) -> Bipartition {
        self.t.shape()
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// The pair `(R, T)`.
    pub fn swapped(&self) -> CorrespondencePair {
        CorrespondencePair {
            t: self.r.clone(),
            r: self.t.clone(),
        }
    }

    pub fn render_ascii(&self) -> String {
        format!(
            "T:\n{}\nR:\n{}\n",
            self.t.render_ascii(),
            self.r.render_ascii()
        )
    }
}

impl fmt::Display for CorrespondencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

/// Where a value went after leaving a box during reverse bumping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BumpOutcome {
    /// It overwrote `displaced` at `to`.
    Moved {
        to: Cell,
        displaced: usize,
    },
    Unbarred,
    Barred,
}

/// One move of a reverse-bumping cascade.
///
/// `shape` is the shape of the entries `<= value` while `value` still sits
/// at `from`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BumpStep {
    pub k: usize,
    pub value: usize,
    pub shape: Bipartition,
    pub from: Cell,
    pub outcome: BumpOutcome,
}

/// One placement during insertion. `displaced` is `None` when a new box
/// was created, which ends the step for letter `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InsertStep {
    pub k: usize,
    pub value: usize,
    pub to: Cell,
    pub displaced: Option<usize>,
}

/// Ejects the value under label `k` of `r` from `t`, cascading until a value
/// leaves. Both tableaux lose the box holding `k` in `r`.
fn eject(t: &mut Bitableau, r: &mut Bitableau, k: usize, trace: &mut Vec<BumpStep>) -> Letter {
    let start = r.find(k).expect("recording tableau holds every label");
    r.remove_corner(start);
    let mut s = t.get(start).expect("same shape");
    let mut from = start;
    let mut shape = t.truncate(s).shape();
    t.remove_corner(start);
    loop {
        let m = from.row_id();
        if m == RowId(1) {
            trace.push(BumpStep {
                k,
                value: s,
                shape,
                from,
                outcome: BumpOutcome::Unbarred,
            });
            return Letter::plain(s);
        }
        let avail = t.available_unchecked(s, Some(RowId(m.0 - 1)));
        let Some(&to) = avail.first() else {
            trace.push(BumpStep {
                k,
                value: s,
                shape,
                from,
                outcome: BumpOutcome::Barred,
            });
            return Letter::bar(s);
        };
        let displaced = t.get(to).expect("available boxes are occupied");
        let next_shape = t.truncate(displaced).shape();
        t.place(to, s);
        trace.push(BumpStep {
            k,
            value: s,
            shape,
            from,
            outcome: BumpOutcome::Moved { to, displaced },
        });
        s = displaced;
        from = to;
        shape = next_shape;
    }
}

/// Pair to word.
pub fn reverse_bumping(pair: &CorrespondencePair) -> SignedPermutation {
    reverse_bumping_traced(pair).0
}

/// Pair to word, with every cascade move in order of execution.
pub fn reverse_bumping_traced(pair: &CorrespondencePair) -> (SignedPermutation, Vec<BumpStep>) {
    let n = pair.len();
    let mut t = pair.t.as_bitableau().clone();
    let mut r = pair.r.as_bitableau().clone();
    let mut letters = vec![Letter::plain(0); n];
    let mut trace = Vec::new();
    for k in (1..=n).rev() {
        letters[k - 1] = eject(&mut t, &mut r, k, &mut trace);
    }
    let word = SignedPermutation::new(letters).expect("reverse bumping emits each magnitude once");
    (word, trace)
}

/// The first outer step of reverse bumping: ejects the letter for label `n`
/// and relabels the remaining `T` entries onto `1..n-1`.
///
/// Returns `None` for the empty pair.
pub fn bump_once(pair: &CorrespondencePair) -> Option<(CorrespondencePair, Letter, usize)> {
    let n = pair.len();
    if n == 0 {
        return None;
    }
    let mut t = pair.t.as_bitableau().clone();
    let mut r = pair.r.as_bitableau().clone();
    let letter = eject(&mut t, &mut r, n, &mut Vec::new());
    let ejected = letter.magnitude;
    let t = t.relabel(|a| if a > ejected { a - 1 } else { a });
    let reduced = CorrespondencePair::new(
        StandardBitableau::try_from_bitableau(t).expect("relabelled entries are 1..n-1"),
        StandardBitableau::try_from_bitableau(r).expect("labels 1..n-1 remain"),
    )
    .expect("both tableaux lost the same box");
    Some((reduced, letter, ejected))
}

/// Word to pair.
pub fn insertion(word: &SignedPermutation) -> CorrespondencePair {
    insertion_traced(word).0
}

/// Word to pair, with every placement in order of execution.
pub fn insertion_traced(word: &SignedPermutation) -> (CorrespondencePair, Vec<InsertStep>) {
    let mut t = Bitableau::empty();
    let mut r = Bitableau::empty();
    let mut trace = Vec::new();
    for (i, letter) in word.letters().iter().enumerate() {
        let k = i + 1;
        let mut s = letter.magnitude;
        let mut to = if letter.barred {
            let (left, right) = t.first_column_unchecked(s);
            if right.row_id() > left.row_id() {
                right
            } else {
                left
            }
        } else {
            let row_one = t.insertable_unchecked(s, Some(RowId(1)));
            assert_eq!(row_one.len(), 1, "the first row always accepts {s}");
            row_one[0]
        };
        loop {
            let displaced = t.place(to, s);
            trace.push(InsertStep {
                k,
                value: s,
                to,
                displaced,
            });
            let Some(prev) = displaced else {
                let recorded = r.place(to, k);
                assert!(recorded.is_none(), "recording tableau grows in step with T");
                break;
            };
            s = prev;
            let cands = t.insertable_unchecked(s, Some(RowId(to.row_id().0 + 1)));
            to = *cands
                .last()
                .expect("the first row always accepts a displaced value");
        }
    }
    let pair = CorrespondencePair::new(
        StandardBitableau::try_from_bitableau(t).expect("insertion places each magnitude once"),
        StandardBitableau::try_from_bitableau(r).expect("labels are 1..n"),
    )
    .expect("T and R grow together");
    (pair, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitableau::Side;

    fn sb(left: &[&[usize]], right: &[&[usize]]) -> StandardBitableau {
        StandardBitableau::new(
            left.iter().map(|r| r.to_vec()).collect(),
            right.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    fn pair(t: StandardBitableau, r: StandardBitableau) -> CorrespondencePair {
        CorrespondencePair::new(t, r).unwrap()
    }

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn worked_pair() -> CorrespondencePair {
        pair(
            sb(&[&[1], &[3], &[7]], &[&[2, 4], &[5, 6]]),
            sb(&[&[2], &[5], &[6]], &[&[1, 3], &[4, 7]]),
        )
    }

    #[test]
    fn reverse_bumping_worked_example() {
        assert_eq!(reverse_bumping(&worked_pair()), w("-3 6 4 -7 2 -5 1"));
        assert_eq!(
            reverse_bumping(&worked_pair().swapped()),
            w("7 5 -1 3 -6 2 -4")
        );
    }

    #[test]
    fn insertion_worked_example() {
        let p = insertion(&w("2 7 5 -6 4 -3 1"));
        let expected = pair(
            sb(&[&[1, 4], &[3, 5]], &[&[2, 7], &[6]]),
            sb(&[&[1, 2], &[4, 5]], &[&[3, 7], &[6]]),
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn small_insertions() {
        let p = insertion(&w("-1 -2 -3"));
        assert_eq!(p.t(), &sb(&[], &[&[1], &[2], &[3]]));
        assert_eq!(p.r(), p.t());
        let p = insertion(&w("-1 2 3"));
        assert_eq!(p.t(), &sb(&[&[2, 3]], &[&[1]]));
        assert_eq!(p.r(), p.t());
        assert_eq!(insertion(&w("")), CorrespondencePair::empty());
    }

    #[test]
    fn identity_pair() {
        let row = sb(&[&[1, 2, 3, 4]], &[]);
        assert_eq!(
            reverse_bumping(&pair(row.clone(), row)),
            SignedPermutation::identity(4)
        );
        assert!(reverse_bumping(&CorrespondencePair::empty()).is_empty());
    }

    #[test]
    fn bump_once_worked_example() {
        let (reduced, letter, r) = bump_once(&worked_pair()).unwrap();
        assert_eq!((letter, r), (Letter::plain(1), 1));
        // Before relabelling, T is left column 2,6,7 and right rows 3 4 / 5.
        assert_eq!(reduced.t(), &sb(&[&[1], &[5], &[6]], &[&[2, 3], &[4]]));
        assert_eq!(reduced.r(), &sb(&[&[2], &[5], &[6]], &[&[1, 3], &[4]]));
        let one = sb(&[&[1]], &[]);
        let (reduced, letter, _) = bump_once(&pair(one.clone(), one)).unwrap();
        assert!(reduced.is_empty());
        assert_eq!(letter, Letter::plain(1));
        assert!(bump_once(&CorrespondencePair::empty()).is_none());
    }

    #[test]
    fn trace_first_step_of_worked_example() {
        let (_, trace) = reverse_bumping_traced(&worked_pair());
        let first = &trace[0];
        assert_eq!((first.k, first.value), (7, 6));
        assert_eq!(first.from, Cell::new(Side::Right, 2, 2));
        assert!(trace.iter().rev().find(|s| s.k == 7).unwrap().outcome == BumpOutcome::Unbarred);
    }

    #[test]
    fn shape_mismatch_rejected() {
        let a = sb(&[&[1]], &[]);
        let b = sb(&[], &[&[1]]);
        assert!(matches!(
            CorrespondencePair::new(a, b),
            Err(TableauError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn pair_json() {
        let p = insertion(&w("-1 2"));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"T":{"left":[[2]],"right":[[1]]},"R":{"left":[[2]],"right":[[1]]}}"#
        );
        assert_eq!(serde_json::from_str::<CorrespondencePair>(&s).unwrap(), p);
        let bad = r#"{"T":{"left":[[1]],"right":[]},"R":{"left":[],"right":[[1]]}}"#;
        assert!(serde_json::from_str::<CorrespondencePair>(bad).is_err());
    }
}
