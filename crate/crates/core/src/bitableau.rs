//! Fillings of a bipartition shape by distinct positive integers.
//!
//! Both components are stored wall-outward: `left[i][0]` and `right[i][0]`
//! are the boxes touching the wall in row `i + 1`. The mirrored display of
//! the left component only exists in [`Bitableau::render_ascii`].

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{Bipartition, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A row in the interleaved numbering: left row `i` is `2i - 1`, right
/// row `i` is `2i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RowId(pub usize);

impl RowId {
    pub fn of(side: Side, row: usize) -> RowId {
        assert!(row >= 1);
        match side {
            Side::Left => RowId(2 * row - 1),
            Side::Right => RowId(2 * row),
        }
    }

    pub fn side(self) -> Side {
        if self.0 % 2 == 1 {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// Row index within its own component.
    pub fn row(self) -> usize {
        self.0.div_ceil(2)
    }
}

/// A box of a bitableau, occupied or not. `col` counts from the wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub side: Side,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(side: Side, row: usize, col: usize) -> Cell {
        assert!(row >= 1 && col >= 1);
        Cell { side, row, col }
    }

    pub fn row_id(&self) -> RowId {
        RowId::of(self.side, self.row)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.side, self.row, self.col)
    }
}

/// Position `(i, j)` within combined row `i`: `j <= mu_i` is the left
/// component at distance `j` from the wall, `j > mu_i` the right component
/// at distance `j - mu_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CombinedPosition {
    pub row: usize,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("shape invariant: {side} row {row} is empty, rows must hold at least one box")]
    EmptyRow { side: Side, row: usize },
    #[error(
        "shape invariant: {side} row {row} has {len} boxes but the row above has only {above}"
    )]
    NotAPartition {
        side: Side,
        row: usize,
        len: usize,
        above: usize,
    },
    #[error("row invariant: {side} row {row} must increase away from the wall, but {value} at column {col} follows {prev}")]
    RowNotIncreasing {
        side: Side,
        row: usize,
        col: usize,
        value: usize,
        prev: usize,
    },
    #[error("column invariant: {side} column {col} must increase downward, but {value} in row {row} sits below {above}")]
    ColumnNotIncreasing {
        side: Side,
        row: usize,
        col: usize,
        value: usize,
        above: usize,
    },
    #[error("entry invariant: entries must be positive, found 0 at {side} row {row}")]
    ZeroEntry { side: Side, row: usize },
    #[error("entry invariant: {value} occurs more than once")]
    DuplicateEntry { value: usize },
    #[error("entry invariant: entries must be exactly 1..={n}, but {missing} is missing")]
    NotStandard { n: usize, missing: usize },
    #[error("{value} is already an entry of the bitableau")]
    ValuePresent { value: usize },
    #[error("nested sequence broken at step {step}: {reason}")]
    NotNested { step: usize, reason: String },
    #[error("shape mismatch: {first} vs {second}")]
    ShapeMismatch {
        first: Bipartition,
        second: Bipartition,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawBitableau {
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

/// A filling that is increasing away from the wall and down columns, with
/// distinct positive entries. Entries need not be `1..=n`; the cascades of
/// the bijection pass through such intermediate states.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBitableau")]
pub struct Bitableau {
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl TryFrom<RawBitableau> for Bitableau {
    type Error = TableauError;
    fn try_from(raw: RawBitableau) -> Result<Self, Self::Error> {
        Bitableau::new(raw.left, raw.right)
    }
}

fn validate_component(
    side: Side,
    rows: &[Vec<usize>],
    seen: &mut HashSet<usize>,
) -> Result<(), TableauError> {
    for (i, row) in rows.iter().enumerate() {
        let r = i + 1;
        if row.is_empty() {
            return Err(TableauError::EmptyRow { side, row: r });
        }
        if i > 0 && row.len() > rows[i - 1].len() {
            return Err(TableauError::NotAPartition {
                side,
                row: r,
                len: row.len(),
                above: rows[i - 1].len(),
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if v == 0 {
                return Err(TableauError::ZeroEntry { side, row: r });
            }
            if !seen.insert(v) {
                return Err(TableauError::DuplicateEntry { value: v });
            }
            if j > 0 && row[j - 1] >= v {
                return Err(TableauError::RowNotIncreasing {
                    side,
                    row: r,
                    col: j + 1,
                    value: v,
                    prev: row[j - 1],
                });
            }
            if i > 0 && rows[i - 1][j] >= v {
                return Err(TableauError::ColumnNotIncreasing {
                    side,
                    row: r,
                    col: j + 1,
                    value: v,
                    above: rows[i - 1][j],
                });
            }
        }
    }
    Ok(())
}

impl Bitableau {
    pub fn new(left: Vec<Vec<usize>>, right: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let mut seen = HashSet::new();
        validate_component(Side::Left, &left, &mut seen)?;
        validate_component(Side::Right, &right, &mut seen)?;
        Ok(Bitableau { left, right })
    }

    pub fn empty() -> Self {
        Bitableau::default()
    }

    pub fn rows(&self, side: Side) -> &[Vec<usize>] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    fn rows_mut(&mut self, side: Side) -> &mut Vec<Vec<usize>> {
        match side {
            Side::Left => &mut self.left,
            Side::Right => &mut self.right,
        }
    }

    pub fn left_rows(&self) -> &[Vec<usize>] {
        &self.left
    }

    pub fn right_rows(&self) -> &[Vec<usize>] {
        &self.right
    }

    pub fn shape(&self) -> Bipartition {
        let lens = |rows: &[Vec<usize>]| {
            Partition::from_parts_unchecked(rows.iter().map(Vec::len).collect())
        };
        Bipartition::new(lens(&self.left), lens(&self.right))
    }

    /// Number of boxes.
    pub fn len(&self) -> usize {
        self.left.iter().chain(&self.right).map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows(cell.side)
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - 1))
            .copied()
    }

    /// Every occupied box with its entry, left component first, row by row.
    pub fn cells(&self) -> Vec<(Cell, usize)> {
        [Side::Left, Side::Right]
            .into_iter()
            .flat_map(|side| {
                self.rows(side)
                    .iter()
                    .enumerate()
                    .flat_map(move |(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(move |(j, &v)| (Cell::new(side, i + 1, j + 1), v))
                    })
            })
            .collect()
    }

    pub fn find(&self, value: usize) -> Option<Cell> {
        self.cells()
            .into_iter()
            .find(|&(_, v)| v == value)
            .map(|(c, _)| c)
    }

    pub fn contains(&self, value: usize) -> bool {
        self.left
            .iter()
            .chain(&self.right)
            .any(|r| r.contains(&value))
    }

    /// All entries in increasing order.
    pub fn entries(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self
            .left
            .iter()
            .chain(&self.right)
            .flatten()
            .copied()
            .collect();
        e.sort_unstable();
        e
    }

    pub fn combined_position(&self, cell: Cell) -> Option<CombinedPosition> {
        self.get(cell)?;
        let offset = match cell.side {
            Side::Left => cell.col,
            Side::Right => self.shape().mu(cell.row) + cell.col,
        };
        Some(CombinedPosition {
            row: cell.row,
            offset,
        })
    }

    pub fn cell_at(&self, pos: CombinedPosition) -> Option<Cell> {
        if pos.row == 0 || pos.offset == 0 {
            return None;
        }
        let mu_i = self.left.get(pos.row - 1).map_or(0, Vec::len);
        let cell = if pos.offset <= mu_i {
            Cell::new(Side::Left, pos.row, pos.offset)
        } else {
            Cell::new(Side::Right, pos.row, pos.offset - mu_i)
        };
        self.get(cell).map(|_| cell)
    }

    /// The sub-filling of entries `<= s`.
    pub fn truncate(&self, s: usize) -> Bitableau {
        let cut = |rows: &[Vec<usize>]| -> Vec<Vec<usize>> {
            rows.iter()
                .map(|r| r.iter().copied().filter(|&v| v <= s).collect::<Vec<_>>())
                .filter(|r| !r.is_empty())
                .collect()
        };
        Bitableau {
            left: cut(&self.left),
            right: cut(&self.right),
        }
    }

    /// Applies a strictly increasing relabelling to every entry.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Bitableau {
        let map = |rows: &[Vec<usize>]| -> Vec<Vec<usize>> {
            rows.iter()
                .map(|r| r.iter().map(|&v| f(v)).collect())
                .collect()
        };
        Bitableau {
            left: map(&self.left),
            right: map(&self.right),
        }
    }

    fn ensure_absent(&self, s: usize) -> Result<(), TableauError> {
        if self.contains(s) {
            Err(TableauError::ValuePresent { value: s })
        } else {
            Ok(())
        }
    }

    /// Occupied boxes holding a value below `s` that `s` could overwrite
    /// without breaking the increasing conditions, i.e. the corners of the
    /// sub-filling of entries below `s`. Sorted by [`RowId`], and optionally
    /// restricted to rows `>= min_row`.
    pub fn available_positions(
        &self,
        s: usize,
        min_row: Option<RowId>,
    ) -> Result<Vec<Cell>, TableauError> {
        self.ensure_absent(s)?;
        Ok(self.available_unchecked(s, min_row))
    }

    pub(crate) fn available_unchecked(&self, s: usize, min_row: Option<RowId>) -> Vec<Cell> {
        let mut out = Vec::new();
        let height = self.left.len().max(self.right.len());
        for row in 1..=height {
            for side in [Side::Left, Side::Right] {
                let rows = self.rows(side);
                let Some(r) = rows.get(row - 1) else { continue };
                let below = rows.get(row).map(Vec::as_slice).unwrap_or(&[]);
                let j = r.partition_point(|&v| v < s);
                if j == 0 {
                    continue;
                }
                if below.len() < j || below[j - 1] > s {
                    out.push(Cell::new(side, row, j));
                }
            }
        }
        if let Some(min) = min_row {
            out.retain(|c| c.row_id() >= min);
        }
        out
    }

    /// Boxes (possibly new ones) where `s` can be placed, replacing a larger
    /// value or extending the shape, so that the result is still a
    /// bitableau. Sorted by [`RowId`], optionally restricted to rows
    /// `<= max_row`.
    pub fn insertable_positions(
        &self,
        s: usize,
        max_row: Option<RowId>,
    ) -> Result<Vec<Cell>, TableauError> {
        self.ensure_absent(s)?;
        Ok(self.insertable_unchecked(s, max_row))
    }

    pub(crate) fn insertable_unchecked(&self, s: usize, max_row: Option<RowId>) -> Vec<Cell> {
        let mut out = Vec::new();
        let height = self.left.len().max(self.right.len()) + 1;
        for row in 1..=height {
            for side in [Side::Left, Side::Right] {
                if let Some(cell) = self.insertable_in_row(side, row, s) {
                    out.push(cell);
                }
            }
        }
        if let Some(max) = max_row {
            out.retain(|c| c.row_id() <= max);
        }
        out
    }

    fn insertable_in_row(&self, side: Side, row: usize, s: usize) -> Option<Cell> {
        let rows = self.rows(side);
        if row > rows.len() + 1 {
            return None;
        }
        let r = rows.get(row - 1).map(Vec::as_slice).unwrap_or(&[]);
        let col = r.partition_point(|&v| v < s) + 1;
        if row > 1 {
            let above = &rows[row - 2];
            if above.len() < col || above[col - 1] > s {
                return None;
            }
        }
        Some(Cell::new(side, row, col))
    }

    /// The insertable box for `s` in the wall-adjacent column of each
    /// component: the topmost entry larger than `s`, or a new box at the
    /// bottom of the column.
    pub fn first_column_insertables(&self, s: usize) -> Result<(Cell, Cell), TableauError> {
        self.ensure_absent(s)?;
        Ok(self.first_column_unchecked(s))
    }

    pub(crate) fn first_column_unchecked(&self, s: usize) -> (Cell, Cell) {
        let pick = |side: Side| {
            let rows = self.rows(side);
            let row = rows.iter().position(|r| r[0] > s).unwrap_or(rows.len()) + 1;
            Cell::new(side, row, 1)
        };
        (pick(Side::Left), pick(Side::Right))
    }

    /// Writes `value` into `cell`, which is either occupied (the old entry
    /// is returned) or the next box of its row.
    pub(crate) fn place(&mut self, cell: Cell, value: usize) -> Option<usize> {
        let rows = self.rows_mut(cell.side);
        if cell.row == rows.len() + 1 {
            assert_eq!(cell.col, 1, "new rows start at the wall");
            rows.push(vec![value]);
            return None;
        }
        let r = &mut rows[cell.row - 1];
        if cell.col == r.len() + 1 {
            r.push(value);
            None
        } else {
            Some(std::mem::replace(&mut r[cell.col - 1], value))
        }
    }

    /// Removes the entry at a corner box.
    pub(crate) fn remove_corner(&mut self, cell: Cell) -> usize {
        let rows = self.rows_mut(cell.side);
        let r = &mut rows[cell.row - 1];
        assert_eq!(cell.col, r.len(), "{cell} is not at the end of its row");
        let v = r.pop().expect("nonempty row");
        if r.is_empty() {
            assert_eq!(cell.row, rows.len(), "{cell} is not a corner");
            rows.pop();
        }
        v
    }

    /// One line per combined row, the left component mirrored so that both
    /// components grow away from a central `|`.
    pub fn render_ascii(&self) -> String {
        let height = self.left.len().max(self.right.len());
        if height == 0 {
            return "|".to_string();
        }
        let join = |r: Option<&Vec<usize>>, rev: bool| -> String {
            let mut v: Vec<String> = r
                .map(|r| r.iter().map(usize::to_string).collect())
                .unwrap_or_default();
            if rev {
                v.reverse();
            }
            v.join(" ")
        };
        let halves: Vec<(String, String)> = (0..height)
            .map(|i| (join(self.left.get(i), true), join(self.right.get(i), false)))
            .collect();
        let width = halves.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        halves
            .iter()
            .map(|(l, r)| {
                let line = if width == 0 {
                    format!("| {r}")
                } else {
                    format!("{l:>width$} | {r}")
                };
                line.trim_end().to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// A bitableau whose entries are exactly `1..=n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBitableau", into = "RawBitableau")]
pub struct StandardBitableau(Bitableau);

impl TryFrom<RawBitableau> for StandardBitableau {
    type Error = TableauError;
    fn try_from(raw: RawBitableau) -> Result<Self, Self::Error> {
        StandardBitableau::new(raw.left, raw.right)
    }
}

impl From<StandardBitableau> for RawBitableau {
    fn from(t: StandardBitableau) -> Self {
        RawBitableau {
            left: t.0.left,
            right: t.0.right,
        }
    }
}

impl Deref for StandardBitableau {
    type Target = Bitableau;
    fn deref(&self) -> &Bitableau {
        &self.0
    }
}

impl StandardBitableau {
    pub fn new(left: Vec<Vec<usize>>, right: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        StandardBitableau::try_from_bitableau(Bitableau::new(left, right)?)
    }

    pub fn try_from_bitableau(b: Bitableau) -> Result<Self, TableauError> {
        let n = b.len();
        if let Some((i, _)) = b.entries().iter().enumerate().find(|&(i, &v)| v != i + 1) {
            return Err(TableauError::NotStandard { n, missing: i + 1 });
        }
        Ok(StandardBitableau(b))
    }

    pub fn empty() -> Self {
        StandardBitableau::default()
    }

    pub fn as_bitableau(&self) -> &Bitableau {
        &self.0
    }

    pub fn into_bitableau(self) -> Bitableau {
        self.0
    }

    /// Entries `1..=s`. Values of `s` past the size return the whole filling.
    pub fn truncate(&self, s: usize) -> StandardBitableau {
        StandardBitableau(self.0.truncate(s))
    }

    /// Shapes of the truncations at `0, 1, ..., n`.
    pub fn to_nested_sequence(&self) -> Vec<Bipartition> {
        (0..=self.len())
            .map(|s| self.0.truncate(s).shape())
            .collect()
    }

    /// Rebuilds the filling whose truncations have the given shapes. The
    /// sequence must start at the empty shape and grow by one box per step.
    pub fn from_nested_sequence(seq: &[Bipartition]) -> Result<StandardBitableau, TableauError> {
        let first = seq.first().ok_or_else(|| TableauError::NotNested {
            step: 0,
            reason: "sequence is empty".into(),
        })?;
        if first.size() != 0 {
            return Err(TableauError::NotNested {
                step: 0,
                reason: format!("first shape {first} is not empty"),
            });
        }
        let mut t = Bitableau::empty();
        for (step, pair) in seq.windows(2).enumerate() {
            let (prev, next) = (&pair[0], &pair[1]);
            let grown = |side: Side| -> Option<usize> {
                let (p, q, other_p, other_q) = match side {
                    Side::Left => (&prev.mu, &next.mu, &prev.nu, &next.nu),
                    Side::Right => (&prev.nu, &next.nu, &prev.mu, &next.mu),
                };
                if other_p != other_q {
                    return None;
                }
                p.addable_rows()
                    .into_iter()
                    .find(|&i| p.add_box(i).as_ref() == Some(q))
            };
            let (side, row) = grown(Side::Left)
                .map(|r| (Side::Left, r))
                .or_else(|| grown(Side::Right).map(|r| (Side::Right, r)))
                .ok_or_else(|| TableauError::NotNested {
                    step: step + 1,
                    reason: format!("{next} is not {prev} plus one box"),
                })?;
            let col = t.rows(side).get(row - 1).map_or(0, Vec::len) + 1;
            t.place(Cell::new(side, row, col), step + 1);
        }
        Ok(StandardBitableau(t))
    }
}

/// Every standard bitableau of the given shape, in a fixed order.
pub fn standard_bitableaux(shape: &Bipartition) -> Vec<StandardBitableau> {
    fn go(shape: &Bipartition) -> Vec<Bitableau> {
        let n = shape.size();
        if n == 0 {
            return vec![Bitableau::empty()];
        }
        let mut out = Vec::new();
        for side in [Side::Left, Side::Right] {
            let part = match side {
                Side::Left => &shape.mu,
                Side::Right => &shape.nu,
            };
            for row in part.removable_rows() {
                let smaller = part.remove_box(row).expect("removable");
                let sub = match side {
                    Side::Left => Bipartition::new(smaller, shape.nu.clone()),
                    Side::Right => Bipartition::new(shape.mu.clone(), smaller),
                };
                for mut t in go(&sub) {
                    t.place(Cell::new(side, row, part.part(row)), n);
                    out.push(t);
                }
            }
        }
        out
    }
    go(shape).into_iter().map(StandardBitableau).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bt(left: &[&[usize]], right: &[&[usize]]) -> Bitableau {
        Bitableau::new(
            left.iter().map(|r| r.to_vec()).collect(),
            right.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    /// Display `(631 / :2 ; 47 / 58 / 9)`.
    fn example_t() -> StandardBitableau {
        StandardBitableau::new(
            vec![vec![1, 3, 6], vec![2]],
            vec![vec![4, 7], vec![5, 8], vec![9]],
        )
        .unwrap()
    }

    /// Display `(10 3 1 / 14 6 5 / 15 11 9 ; 4 16 / 8 17 / 18)`, a filling
    /// without 13.
    fn thirteen_missing() -> Bitableau {
        bt(
            &[&[1, 3, 10], &[5, 6, 14], &[9, 11, 15]],
            &[&[4, 16], &[8, 17], &[18]],
        )
    }

    #[test]
    fn row_ids() {
        assert_eq!(RowId::of(Side::Left, 1), RowId(1));
        assert_eq!(RowId::of(Side::Right, 1), RowId(2));
        assert_eq!(RowId::of(Side::Left, 3), RowId(5));
        assert_eq!(RowId(6).side(), Side::Right);
        assert_eq!(RowId(6).row(), 3);
        assert_eq!(RowId(5).row(), 3);
    }

    #[test]
    fn combined_positions_of_example() {
        let t = example_t();
        let pos = |v| t.combined_position(t.find(v).unwrap()).unwrap();
        assert_eq!(pos(3), CombinedPosition { row: 1, offset: 2 });
        assert_eq!(pos(5), CombinedPosition { row: 2, offset: 2 });
        assert_eq!(pos(9), CombinedPosition { row: 3, offset: 1 });
        assert_eq!(
            t.get(t.cell_at(CombinedPosition { row: 1, offset: 4 }).unwrap()),
            Some(4)
        );
        assert_eq!(t.cell_at(CombinedPosition { row: 3, offset: 2 }), None);
    }

    #[test]
    fn truncate_example() {
        let t5 = example_t().truncate(5);
        assert_eq!(t5.left_rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(t5.right_rows(), &[vec![4], vec![5]]);
        assert_eq!(
            t5.shape(),
            Bipartition::from_parts(vec![2, 1], vec![1, 1]).unwrap()
        );
        assert_eq!(example_t().truncate(9), example_t());
        assert!(example_t().truncate(0).is_empty());
    }

    #[test]
    fn nested_sequence_example() {
        let t = StandardBitableau::new(vec![vec![2, 3], vec![5]], vec![vec![1], vec![4]]).unwrap();
        let bp =
            |mu: &[usize], nu: &[usize]| Bipartition::from_parts(mu.to_vec(), nu.to_vec()).unwrap();
        let expected = vec![
            bp(&[], &[]),
            bp(&[], &[1]),
            bp(&[1], &[1]),
            bp(&[2], &[1]),
            bp(&[2], &[1, 1]),
            bp(&[2, 1], &[1, 1]),
        ];
        assert_eq!(t.to_nested_sequence(), expected);
        assert_eq!(
            StandardBitableau::from_nested_sequence(&expected).unwrap(),
            t
        );
        assert_eq!(
            StandardBitableau::empty().to_nested_sequence(),
            vec![Bipartition::empty()]
        );
    }

    #[test]
    fn nested_sequence_rejects_jumps() {
        let bp =
            |mu: &[usize], nu: &[usize]| Bipartition::from_parts(mu.to_vec(), nu.to_vec()).unwrap();
        let bad = vec![bp(&[], &[]), bp(&[1], &[]), bp(&[1], &[2])];
        match StandardBitableau::from_nested_sequence(&bad) {
            Err(TableauError::NotNested { step, .. }) => assert_eq!(step, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(StandardBitableau::from_nested_sequence(&[bp(&[1], &[])]).is_err());
        assert!(StandardBitableau::from_nested_sequence(&[]).is_err());
    }

    #[test]
    fn available_example() {
        let t = thirteen_missing();
        let values: Vec<usize> = t
            .available_positions(13, None)
            .unwrap()
            .into_iter()
            .map(|c| t.get(c).unwrap())
            .collect();
        let mut sorted = values.clone();
        sorted.sort();
        assert_eq!(sorted, vec![8, 10, 11]);
        assert!(Bitableau::empty()
            .available_positions(3, None)
            .unwrap()
            .is_empty());
        let row = bt(&[&[1, 2, 3]], &[]);
        assert_eq!(
            row.available_positions(4, None).unwrap(),
            vec![Cell::new(Side::Left, 1, 3)]
        );
    }

    #[test]
    fn available_rejects_present_value() {
        assert_eq!(
            thirteen_missing().available_positions(11, None),
            Err(TableauError::ValuePresent { value: 11 })
        );
    }

    #[test]
    fn insertable_example() {
        let t = thirteen_missing();
        let got = t.insertable_positions(13, None).unwrap();
        let mut occupied: Vec<usize> = got.iter().filter_map(|&c| t.get(c)).collect();
        occupied.sort();
        assert_eq!(occupied, vec![14, 16, 18]);
        let new: Vec<Cell> = got
            .iter()
            .copied()
            .filter(|&c| t.get(c).is_none())
            .collect();
        // left of 10 and under 9
        assert_eq!(
            new,
            vec![Cell::new(Side::Left, 1, 4), Cell::new(Side::Left, 4, 1)]
        );
        let _ = t.insertable_positions(14, None).unwrap_err();
    }

    #[test]
    fn insertable_small_cases() {
        assert_eq!(
            Bitableau::empty().insertable_positions(1, None).unwrap(),
            vec![Cell::new(Side::Left, 1, 1), Cell::new(Side::Right, 1, 1)]
        );
        let t = bt(&[&[2]], &[]);
        assert_eq!(
            t.insertable_positions(1, Some(RowId(1))).unwrap(),
            vec![Cell::new(Side::Left, 1, 1)]
        );
    }

    #[test]
    fn first_column_cases() {
        assert_eq!(
            Bitableau::empty().first_column_insertables(5).unwrap(),
            (Cell::new(Side::Left, 1, 1), Cell::new(Side::Right, 1, 1))
        );
        let t = bt(&[], &[&[1], &[2]]);
        assert_eq!(
            t.first_column_insertables(3).unwrap().1,
            Cell::new(Side::Right, 3, 1)
        );
        let t = bt(&[&[2], &[5]], &[&[1], &[4]]);
        assert_eq!(
            t.first_column_insertables(3).unwrap(),
            (Cell::new(Side::Left, 2, 1), Cell::new(Side::Right, 2, 1))
        );
    }

    #[test]
    fn render_example() {
        let lines: Vec<String> = example_t()
            .render_ascii()
            .lines()
            .map(|l| l.trim().to_string())
            .collect();
        assert_eq!(lines, vec!["6 3 1 | 4 7", "2 | 5 8", "| 9"]);
        assert_eq!(Bitableau::empty().render_ascii(), "|");
    }

    #[test]
    fn validation_names_invariant() {
        let err = Bitableau::new(vec![vec![2, 1]], vec![]).unwrap_err();
        assert!(matches!(err, TableauError::RowNotIncreasing { .. }));
        assert!(err.to_string().starts_with("row invariant"));
        let err = Bitableau::new(vec![vec![1], vec![2, 3]], vec![]).unwrap_err();
        assert!(matches!(err, TableauError::NotAPartition { .. }));
        let err = Bitableau::new(vec![vec![2]], vec![vec![3], vec![1]]).unwrap_err();
        assert!(matches!(err, TableauError::ColumnNotIncreasing { .. }));
        let err = Bitableau::new(vec![vec![1]], vec![vec![1]]).unwrap_err();
        assert_eq!(err, TableauError::DuplicateEntry { value: 1 });
        let err = StandardBitableau::new(vec![vec![1, 3]], vec![]).unwrap_err();
        assert_eq!(err, TableauError::NotStandard { n: 2, missing: 2 });
        assert!(Bitableau::new(vec![vec![]], vec![]).is_err());
    }

    #[test]
    fn json_schema() {
        let t = example_t();
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"left":[[1,3,6],[2]],"right":[[4,7],[5,8],[9]]}"#);
        assert_eq!(serde_json::from_str::<StandardBitableau>(&js).unwrap(), t);
        let err = serde_json::from_str::<StandardBitableau>(r#"{"left":[[3,1]],"right":[[2]]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("row invariant"));
    }

    #[test]
    fn enumeration_counts() {
        let shape = Bipartition::from_parts(vec![2], vec![1]).unwrap();
        let all = standard_bitableaux(&shape);
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|t| t.shape() == shape));
        assert_eq!(standard_bitableaux(&Bipartition::empty()).len(), 1);
    }
}
