//! Area, dinv and the rise-to-fall correspondence.

use super::{DecoratedDyckPath, DyckFlavor, DyckPath, LabelledDyckPath, Step};
use crate::error::{DeltaError, Result};

/// Area of a decorated path.
///
/// DDD: `Σ a_i` over rows that are not decorated rises. Bounce flavors: the
/// squares between path and diagonal, except those in decorated (fake) fall
/// columns.
pub fn area(d: &DecoratedDyckPath) -> u64 {
    let total = d.path().total_area();
    let removed: u64 = match d.flavor() {
        DyckFlavor::Ddd => d
            .drise()
            .iter()
            .map(|&row| u64::from(d.path().letter(row)))
            .sum(),
        DyckFlavor::DdbStar | DyckFlavor::DdbTriangle => {
            let columns = d.path().column_areas();
            d.drise().iter().map(|&c| u64::from(columns[c])).sum()
        }
    };
    total - removed
}

/// Area of a labelled path: `Σ a_i` over rows that are not decorated rises.
pub fn area_labelled(l: &LabelledDyckPath) -> u64 {
    let path = l.path();
    path.total_area()
        - l.drise()
            .iter()
            .map(|&row| u64::from(path.letter(row)))
            .sum::<u64>()
}

/// Inversions of a DDD object: pairs `i < j` with either `a_i = a_j`,
/// `i ∉ DPeak`, `j ∉ ZVal` (primary) or `a_i = a_j + 1`, `j ∉ DPeak`,
/// `i ∉ ZVal` (secondary).
pub fn dinv_decorated(d: &DecoratedDyckPath) -> Result<u64> {
    d.ensure_flavor(&[DyckFlavor::Ddd])?;
    let word = d.area_word();
    let size = word.len();
    let zero_valley: Vec<bool> = (1..=size).map(|r| d.is_zero_valley(r)).collect();
    let decorated_peak: Vec<bool> = (1..=size).map(|r| d.is_decorated_peak(r)).collect();
    let mut count = 0u64;
    for i in 0..size {
        for j in i + 1..size {
            let primary = word[i] == word[j] && !decorated_peak[i] && !zero_valley[j];
            let secondary = word[i] == word[j] + 1 && !decorated_peak[j] && !zero_valley[i];
            if primary || secondary {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// dinv of an undecorated path: `#{i<j: a_i = a_j} + #{i<j: a_i = a_j + 1}`.
pub fn dinv_plain(path: &DyckPath) -> u64 {
    let word = path.area_word();
    let mut count = 0u64;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] == word[j] || word[i] == word[j] + 1 {
                count += 1;
            }
        }
    }
    count
}

/// The flavor-specific `r`: zeros of the area word that are not zero valleys
/// (DDD) or the length of the initial vertical run (bounce flavors).
pub fn r_statistic(d: &DecoratedDyckPath) -> usize {
    match d.flavor() {
        DyckFlavor::Ddd => d
            .area_word()
            .iter()
            .enumerate()
            .filter(|&(i, &a)| a == 0 && !d.is_zero_valley(i + 1))
            .count(),
        DyckFlavor::DdbStar | DyckFlavor::DdbTriangle => d.path().initial_run(),
    }
}

/// Maps the rise in `row` to the first fall after it whose two horizontal
/// steps meet on the same diagonal the rise crosses. Returns the fall's
/// column (the column of its first horizontal step).
pub fn rise_to_fall(path: &DyckPath, row: usize) -> Result<usize> {
    if row < 2 || row > path.size() || path.letter(row) <= path.letter(row - 1) {
        return Err(DeltaError::InvalidDecoration(format!("row {row} is not a rise")));
    }
    let diagonal = path.letter(row) as usize;
    let steps = path.steps();
    let start = steps
        .iter()
        .position(|s| *s == Step::North(row))
        .expect("every row has a vertical step");
    let mut y = row;
    for idx in start + 1..steps.len() {
        match steps[idx] {
            Step::North(_) => y += 1,
            Step::East(col) => {
                let next_is_east = matches!(steps.get(idx + 1), Some(Step::East(_)));
                if next_is_east && y - col == diagonal {
                    return Ok(col);
                }
            }
        }
    }
    Err(DeltaError::InvalidDecoration(format!(
        "no fall corresponds to the rise in row {row}"
    )))
}
