//! Plain, partially labelled and decorated Dyck paths.
//!
//! Everything is indexed the way the area word is: rows run `1..=N` bottom to
//! top, and row `i` carries `a_i`, the number of whole squares between the path
//! and the diagonal in that row. Columns run `1..=N` left to right; column `c`
//! is the strip crossed by the horizontal step from `x = c-1` to `x = c`.

mod bounce;
mod enumerate;
mod labelled;
mod stats;

pub use bounce::{bounce, bounce_word, BounceData};
pub use enumerate::{
    bistatistic, dd_qt, dd_qt_table, dyck_words, enumerate_dd, enumerate_dd_filtered,
    qt_catalan_brute_force, DdFilter, DdTable, DyckWords,
};
pub use labelled::{
    dinv_labelled, enumerate_pld, reading_order, reading_word, shuffle_labellings,
    LabelledDyckPath,
};
pub use stats::{area, area_labelled, dinv_decorated, dinv_plain, r_statistic, rise_to_fall};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{DeltaError, Result};

/// Which family a decorated path belongs to, which fixes how `drise` is read
/// and which statistics apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DyckFlavor {
    /// Decorated rises and peaks, bistatistic (dinv, area).
    Ddd,
    /// Decorated falls and peaks, bistatistic (area, bounce).
    DdbStar,
    /// Decorated fake falls and peaks, bistatistic (area, bounce).
    DdbTriangle,
}

impl DyckFlavor {
    pub const ALL: [DyckFlavor; 3] = [DyckFlavor::Ddd, DyckFlavor::DdbStar, DyckFlavor::DdbTriangle];

    pub fn name(self) -> &'static str {
        match self {
            DyckFlavor::Ddd => "ddd",
            DyckFlavor::DdbStar => "ddb_star",
            DyckFlavor::DdbTriangle => "ddb_triangle",
        }
    }

    pub fn is_bounce_flavor(self) -> bool {
        !matches!(self, DyckFlavor::Ddd)
    }
}

impl fmt::Display for DyckFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for DyckFlavor {
    type Err = DeltaError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ddd" => Ok(DyckFlavor::Ddd),
            "ddb_star" => Ok(DyckFlavor::DdbStar),
            "ddb_triangle" => Ok(DyckFlavor::DdbTriangle),
            other => Err(DeltaError::Json(format!("unknown dyck flavor {other:?}"))),
        }
    }
}

/// A single lattice step of a path drawn from `(0,0)` to `(N,N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// Vertical step ending in the given row.
    North(usize),
    /// Horizontal step ending at the given column.
    East(usize),
}

/// A Dyck path stored as its (validated) area word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    area_word: Vec<u32>,
}

/// Validates an area word: `a_1 = 0` and `a_i <= a_{i-1} + 1`.
pub fn validate_path(word: &[u32]) -> Result<DyckPath> {
    DyckPath::new(word.to_vec())
}

impl DyckPath {
    pub fn new(area_word: Vec<u32>) -> Result<Self> {
        if let Some(&first) = area_word.first() {
            if first != 0 {
                return Err(DeltaError::MalformedAreaWord(format!(
                    "first letter must be 0, found {first}"
                )));
            }
        }
        for (i, pair) in area_word.windows(2).enumerate() {
            if pair[1] > pair[0] + 1 {
                return Err(DeltaError::MalformedAreaWord(format!(
                    "letter {} jumps from {} to {}",
                    i + 2,
                    pair[0],
                    pair[1]
                )));
            }
        }
        Ok(Self { area_word })
    }

    /// Number of rows (= number of columns).
    pub fn size(&self) -> usize {
        self.area_word.len()
    }

    pub fn area_word(&self) -> &[u32] {
        &self.area_word
    }

    /// `a_row` for a 1-based row.
    pub fn letter(&self, row: usize) -> u32 {
        self.area_word[row - 1]
    }

    /// Sum of the area word.
    pub fn total_area(&self) -> u64 {
        self.area_word.iter().map(|&x| u64::from(x)).sum()
    }

    /// x-coordinate of the vertical step in `row`: `(row - 1) - a_row`.
    pub fn row_x(&self, row: usize) -> usize {
        (row - 1) - self.letter(row) as usize
    }

    /// The step sequence from `(0,0)` to `(N,N)`.
    pub fn steps(&self) -> Vec<Step> {
        let size = self.size();
        let mut out = Vec::with_capacity(2 * size);
        let mut x = 0usize;
        for row in 1..=size {
            let target = self.row_x(row);
            while x < target {
                x += 1;
                out.push(Step::East(x));
            }
            out.push(Step::North(row));
        }
        while x < size {
            x += 1;
            out.push(Step::East(x));
        }
        out
    }

    /// Rows `i >= 2` with `a_i > a_{i-1}`.
    pub fn rises(&self) -> Vec<usize> {
        (2..=self.size())
            .filter(|&i| self.letter(i) > self.letter(i - 1))
            .collect()
    }

    /// Rows `i >= 2` whose vertical step directly follows a horizontal step,
    /// i.e. `a_i <= a_{i-1}`.
    pub fn valleys(&self) -> Vec<usize> {
        (2..=self.size())
            .filter(|&i| self.letter(i) <= self.letter(i - 1))
            .collect()
    }

    /// Rows whose vertical step is followed by a horizontal step; always
    /// contains the top row.
    pub fn peaks(&self) -> Vec<usize> {
        let size = self.size();
        (1..=size)
            .filter(|&i| i == size || self.letter(i + 1) <= self.letter(i))
            .collect()
    }

    /// Columns of horizontal steps followed by another horizontal step,
    /// together with the column of the final step of the path.
    pub fn falls(&self) -> Vec<usize> {
        let steps = self.steps();
        let mut out = Vec::new();
        for (idx, step) in steps.iter().enumerate() {
            if let Step::East(col) = *step {
                let last = idx + 1 == steps.len();
                if last || matches!(steps[idx + 1], Step::East(_)) {
                    out.push(col);
                }
            }
        }
        out
    }

    /// Fake falls relative to a zero-valley set: horizontal steps outside the
    /// column strip of a zero valley that are followed by a horizontal step or
    /// by a vertical step that is both a zero valley and a peak; the final
    /// step counts when it is not in a zero valley's column.
    pub fn fake_falls(&self, zval: &[usize]) -> Vec<usize> {
        let zero_valley: BTreeSet<usize> = zval.iter().copied().collect();
        let zero_valley_columns: BTreeSet<usize> =
            zval.iter().map(|&row| self.row_x(row) + 1).collect();
        let peaks: BTreeSet<usize> = self.peaks().into_iter().collect();
        let steps = self.steps();
        let mut out = Vec::new();
        for (idx, step) in steps.iter().enumerate() {
            let Step::East(col) = *step else { continue };
            if zero_valley_columns.contains(&col) {
                continue;
            }
            let qualifies = match steps.get(idx + 1) {
                None => true,
                Some(Step::East(_)) => true,
                Some(Step::North(row)) => zero_valley.contains(row) && peaks.contains(row),
            };
            if qualifies {
                out.push(col);
            }
        }
        out
    }

    /// For each column `c`, the number of whole squares between the path and
    /// the diagonal in that column (index 0 unused).
    pub fn column_areas(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.size() + 1];
        let mut y = 0usize;
        for step in self.steps() {
            match step {
                Step::North(_) => y += 1,
                Step::East(col) => out[col] = (y - col) as u32,
            }
        }
        out
    }

    /// Length of the initial vertical run (rows with `a_i = i - 1`).
    pub fn initial_run(&self) -> usize {
        self.area_word
            .iter()
            .enumerate()
            .take_while(|&(i, &a)| a as usize == i)
            .count()
    }

    /// Number of rows with `a_i = 0`.
    pub fn zero_count(&self) -> usize {
        self.area_word.iter().filter(|&&a| a == 0).count()
    }

    /// The lowest peak row, which the bounce flavors never decorate.
    pub fn leftmost_peak(&self) -> Option<usize> {
        self.peaks().first().copied()
    }
}

/// The four feature sets of a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Features {
    pub rise: Vec<usize>,
    pub val: Vec<usize>,
    pub peak: Vec<usize>,
    pub fall: Vec<usize>,
}

/// Rise, valley and peak rows plus fall columns.
pub fn features(path: &DyckPath) -> Features {
    Features {
        rise: path.rises(),
        val: path.valleys(),
        peak: path.peaks(),
        fall: path.falls(),
    }
}

/// A Dyck path with decorated rises (or falls / fake falls), decorated peaks
/// and zero valleys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedDyckPath {
    path: DyckPath,
    drise: Vec<usize>,
    dpeak: Vec<usize>,
    zval: Vec<usize>,
    flavor: DyckFlavor,
}

fn sorted_unique(name: &str, mut set: Vec<usize>) -> Result<Vec<usize>> {
    set.sort_unstable();
    if set.windows(2).any(|w| w[0] == w[1]) {
        return Err(DeltaError::InvalidDecoration(format!(
            "{name} contains a repeated index"
        )));
    }
    Ok(set)
}

fn require_subset(name: &str, set: &[usize], allowed: &[usize], what: &str) -> Result<()> {
    for idx in set {
        if allowed.binary_search(idx).is_err() {
            return Err(DeltaError::InvalidDecoration(format!(
                "{name} index {idx} is not {what}"
            )));
        }
    }
    Ok(())
}

impl DecoratedDyckPath {
    /// Validates the decoration sets against the flavor's feature sets.
    pub fn new(
        path: DyckPath,
        drise: Vec<usize>,
        dpeak: Vec<usize>,
        zval: Vec<usize>,
        flavor: DyckFlavor,
    ) -> Result<Self> {
        let drise = sorted_unique("drise", drise)?;
        let dpeak = sorted_unique("dpeak", dpeak)?;
        let zval = sorted_unique("zval", zval)?;
        require_subset("zval", &zval, &path.valleys(), "a valley")?;
        require_subset("dpeak", &dpeak, &path.peaks(), "a peak")?;
        if let Some(row) = dpeak.iter().find(|r| zval.binary_search(r).is_ok()) {
            return Err(DeltaError::InvalidDecoration(format!(
                "row {row} is both a decorated peak and a zero valley"
            )));
        }
        match flavor {
            DyckFlavor::Ddd => require_subset("drise", &drise, &path.rises(), "a rise")?,
            DyckFlavor::DdbStar => require_subset("drise", &drise, &path.falls(), "a fall")?,
            DyckFlavor::DdbTriangle => {
                require_subset("drise", &drise, &path.fake_falls(&zval), "a fake fall")?
            }
        }
        if flavor.is_bounce_flavor() && path.leftmost_peak().is_some_and(|p| dpeak.contains(&p)) {
            return Err(DeltaError::InvalidDecoration(
                "the leftmost peak cannot be decorated".to_string(),
            ));
        }
        Ok(Self {
            path,
            drise,
            dpeak,
            zval,
            flavor,
        })
    }

    /// Undecorated object of the given flavor.
    pub fn plain(path: DyckPath, flavor: DyckFlavor) -> Self {
        Self {
            path,
            drise: Vec::new(),
            dpeak: Vec::new(),
            zval: Vec::new(),
            flavor,
        }
    }

    pub(crate) fn from_parts_unchecked(
        path: DyckPath,
        drise: Vec<usize>,
        dpeak: Vec<usize>,
        zval: Vec<usize>,
        flavor: DyckFlavor,
    ) -> Self {
        Self {
            path,
            drise,
            dpeak,
            zval,
            flavor,
        }
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn area_word(&self) -> &[u32] {
        self.path.area_word()
    }

    /// Decorated rises (DDD) or decorated fall / fake-fall columns (DDB).
    pub fn drise(&self) -> &[usize] {
        &self.drise
    }

    pub fn dpeak(&self) -> &[usize] {
        &self.dpeak
    }

    pub fn zval(&self) -> &[usize] {
        &self.zval
    }

    pub fn flavor(&self) -> DyckFlavor {
        self.flavor
    }

    pub fn size(&self) -> usize {
        self.path.size()
    }

    /// Number of zero valleys.
    pub fn zero_valley_count(&self) -> usize {
        self.zval.len()
    }

    /// Number of rows that are not zero valleys.
    pub fn labelled_count(&self) -> usize {
        self.size() - self.zval.len()
    }

    pub(crate) fn is_zero_valley(&self, row: usize) -> bool {
        self.zval.binary_search(&row).is_ok()
    }

    pub(crate) fn is_decorated_peak(&self, row: usize) -> bool {
        self.dpeak.binary_search(&row).is_ok()
    }

    pub(crate) fn ensure_flavor(&self, allowed: &[DyckFlavor]) -> Result<()> {
        if allowed.contains(&self.flavor) {
            Ok(())
        } else {
            Err(DeltaError::FlavorMismatch {
                expected: allowed
                    .iter()
                    .map(|f| f.name())
                    .collect::<Vec<_>>()
                    .join(" or "),
                found: self.flavor.name().to_string(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_path_examples() {
        assert!(validate_path(&[0, 1, 0, 1, 2, 1, 2, 3]).is_ok());
        assert!(validate_path(&[0, 0, 0, 0]).is_ok());
        assert!(validate_path(&[]).is_ok());
        assert!(matches!(
            validate_path(&[0, 2]),
            Err(DeltaError::MalformedAreaWord(_))
        ));
        assert!(matches!(
            validate_path(&[1]),
            Err(DeltaError::MalformedAreaWord(_))
        ));
    }

    #[test]
    fn feature_examples() {
        let f = features(&validate_path(&[0, 0, 0]).unwrap());
        assert!(f.rise.is_empty());
        assert_eq!(f.val, vec![2, 3]);
        assert_eq!(f.peak, vec![1, 2, 3]);
        let f = features(&validate_path(&[0, 1, 2]).unwrap());
        assert_eq!(f.rise, vec![2, 3]);
        assert!(f.val.is_empty());
        assert_eq!(f.peak, vec![3]);
        assert_eq!(f.fall, vec![1, 2, 3]);
    }

    #[test]
    fn steps_close_the_path() {
        let p = validate_path(&[0, 1, 1, 0, 1, 1, 1, 2]).unwrap();
        let steps = p.steps();
        assert_eq!(steps.len(), 16);
        assert_eq!(steps.last(), Some(&Step::East(8)));
    }

    #[test]
    fn decoration_validation() {
        let p = validate_path(&[0, 1, 1, 0, 1, 1, 1, 2]).unwrap();
        let ok = DecoratedDyckPath::new(
            p.clone(),
            vec![2, 5],
            vec![3, 8],
            vec![4, 7],
            DyckFlavor::Ddd,
        );
        assert!(ok.is_ok());
        let clash =
            DecoratedDyckPath::new(p.clone(), vec![], vec![4], vec![4], DyckFlavor::Ddd);
        assert!(matches!(clash, Err(DeltaError::InvalidDecoration(_))));
        let not_rise = DecoratedDyckPath::new(p.clone(), vec![3], vec![], vec![], DyckFlavor::Ddd);
        assert!(not_rise.is_err());
        let leftmost = DecoratedDyckPath::new(p, vec![], vec![2], vec![], DyckFlavor::DdbStar);
        assert!(leftmost.is_err());
    }
}
