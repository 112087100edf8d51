//! Bounce path and bounce statistic of the (area, bounce) flavors.
//!
//! Each zero valley, together with the horizontal step right before it, is
//! read as one diagonal step. A ball starts at the origin, moves north until
//! it meets the horizontal (or diagonal) step that leaves its column, then
//! moves east, copying the diagonal steps, until it is back on the main
//! diagonal; every change from east back to north increments the label. The
//! label in force when the ball crosses a row is that row's bounce letter.

use std::collections::{BTreeMap, BTreeSet};

use super::{DecoratedDyckPath, DyckFlavor, DyckPath, Step};
use crate::error::{DeltaError, Result};

/// Bounce word and the geometry needed to cancel letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BounceData {
    /// Bounce letter of each row, 1-based (index 0 unused).
    pub letters: Vec<u32>,
    /// `true` for columns (1-based) crossed by a diagonal step.
    pub diagonal_column: Vec<bool>,
    /// For each x at which the ball moved north: the half-open height range
    /// `(low, high]` of that vertical segment.
    pub vertical_segments: BTreeMap<usize, (usize, usize)>,
}

impl BounceData {
    /// The bounce word `b_1 … b_N`.
    pub fn word(&self) -> &[u32] {
        &self.letters[1..]
    }
}

/// Runs the bounce ball on `path` with the given zero valleys.
pub fn bounce_word(path: &DyckPath, zval: &[usize]) -> BounceData {
    let size = path.size();
    let zero_valley: BTreeSet<usize> = zval.iter().copied().collect();
    let steps = path.steps();

    // top[x]: height at which the path leaves column line x.
    let mut top = vec![size; size + 1];
    let mut diagonal_column = vec![false; size + 1];
    let (mut x, mut y, mut idx) = (0usize, 0usize, 0usize);
    while idx < steps.len() {
        match steps[idx] {
            Step::North(_) => {
                y += 1;
                idx += 1;
            }
            Step::East(_) => {
                top[x] = y;
                let diagonal = matches!(steps.get(idx + 1), Some(Step::North(row)) if zero_valley.contains(row));
                x += 1;
                if diagonal {
                    diagonal_column[x] = true;
                    y += 1;
                    idx += 2;
                } else {
                    idx += 1;
                }
            }
        }
    }

    let mut letters = vec![0u32; size + 1];
    let mut vertical_segments = BTreeMap::new();
    if size == 0 {
        vertical_segments.insert(0, (0, 0));
        return BounceData {
            letters,
            diagonal_column,
            vertical_segments,
        };
    }
    let (mut bx, mut by, mut label) = (0usize, 0usize, 0u32);
    loop {
        let low = by;
        while by < top[bx] {
            by += 1;
            letters[by] = label;
        }
        vertical_segments.insert(bx, (low, by));
        if bx == size {
            break;
        }
        loop {
            bx += 1;
            if diagonal_column[bx] {
                by += 1;
                letters[by] = label;
            }
            if by == bx {
                break;
            }
        }
        label += 1;
        if bx == size && by == size {
            break;
        }
    }
    BounceData {
        letters,
        diagonal_column,
        vertical_segments,
    }
}

/// The bounce statistic: the sum of bounce letters, except for the rows
/// reached by tracing each decorated peak east (moving up along diagonal
/// columns) until it lands on a vertical segment of the bounce path.
pub fn bounce(d: &DecoratedDyckPath) -> Result<u64> {
    d.ensure_flavor(&[DyckFlavor::DdbStar, DyckFlavor::DdbTriangle])?;
    let path = d.path();
    let size = path.size();
    let data = bounce_word(path, d.zval());
    let mut cancelled = BTreeSet::new();
    for &row in d.dpeak() {
        let (mut x, mut y) = (path.row_x(row), row);
        loop {
            if let Some(&(low, high)) = data.vertical_segments.get(&x) {
                if low < y && y <= high {
                    cancelled.insert(y);
                    break;
                }
            }
            if x >= size {
                return Err(DeltaError::InvalidDecoration(format!(
                    "trace from decorated peak {row} never meets the bounce path"
                )));
            }
            x += 1;
            if data.diagonal_column[x] {
                y += 1;
            }
        }
    }
    Ok((1..=size)
        .filter(|row| !cancelled.contains(row))
        .map(|row| u64::from(data.letters[row]))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::validate_path;

    fn bounce_golden(dpeak: Vec<usize>) -> DecoratedDyckPath {
        DecoratedDyckPath::new(
            validate_path(&[0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3]).unwrap(),
            vec![],
            dpeak,
            vec![4, 5, 6, 9, 11, 12],
            DyckFlavor::DdbStar,
        )
        .unwrap()
    }

    #[test]
    fn bounce_golden_word_and_value() {
        let d = bounce_golden(vec![8, 10]);
        let data = bounce_word(d.path(), d.zval());
        assert_eq!(data.word(), &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1]);
        assert_eq!(bounce(&d).unwrap(), 1);
        assert_eq!(bounce(&bounce_golden(vec![])).unwrap(), 3);
    }

    #[test]
    fn staircase_has_zero_bounce() {
        let d = DecoratedDyckPath::plain(validate_path(&[0, 0, 0]).unwrap(), DyckFlavor::DdbStar);
        assert_eq!(bounce_word(d.path(), &[]).word(), &[0, 1, 2]);
        let d = DecoratedDyckPath::plain(validate_path(&[0, 1, 2]).unwrap(), DyckFlavor::DdbStar);
        assert_eq!(bounce(&d).unwrap(), 0);
    }

    #[test]
    fn bounce_requires_bounce_flavor() {
        let d = DecoratedDyckPath::plain(validate_path(&[0]).unwrap(), DyckFlavor::Ddd);
        assert!(bounce(&d).is_err());
    }
}
