//! Partially labelled Dyck paths and the reading-word labelling of DDD objects.

use itertools::Itertools;

use super::{DecoratedDyckPath, DyckFlavor, DyckPath};
use crate::error::{DeltaError, Result};

/// A Dyck path with a label on every row (0 = blank) and decorated rises.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledDyckPath {
    path: DyckPath,
    labels: Vec<u32>,
    drise: Vec<usize>,
}

impl LabelledDyckPath {
    /// Validates column strictness, the first-column rule and the rises.
    pub fn new(path: DyckPath, labels: Vec<u32>, mut drise: Vec<usize>) -> Result<Self> {
        if labels.len() != path.size() {
            return Err(DeltaError::InvalidLabelling(format!(
                "{} labels for a path of size {}",
                labels.len(),
                path.size()
            )));
        }
        for row in 2..=path.size() {
            let same_column = path.letter(row) == path.letter(row - 1) + 1;
            if same_column && labels[row - 1] <= labels[row - 2] {
                return Err(DeltaError::InvalidLabelling(format!(
                    "labels of rows {} and {row} do not increase up their column",
                    row - 1
                )));
            }
        }
        for row in 1..=path.initial_run() {
            if labels[row - 1] == 0 {
                return Err(DeltaError::InvalidLabelling(format!(
                    "label 0 in the first column (row {row})"
                )));
            }
        }
        drise.sort_unstable();
        drise.dedup();
        let rises = path.rises();
        if let Some(row) = drise.iter().find(|r| rises.binary_search(r).is_err()) {
            return Err(DeltaError::InvalidDecoration(format!(
                "drise index {row} is not a rise"
            )));
        }
        Ok(Self {
            path,
            labels,
            drise,
        })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn drise(&self) -> &[usize] {
        &self.drise
    }
}

/// Rows sorted by `(a_i, i)`: diagonal by diagonal, bottom to top.
pub fn reading_order(path: &DyckPath) -> Vec<usize> {
    (1..=path.size())
        .sorted_by_key(|&row| (path.letter(row), row))
        .collect()
}

/// Labels read in [`reading_order`].
pub fn reading_word(l: &LabelledDyckPath) -> Vec<u32> {
    reading_order(l.path())
        .into_iter()
        .map(|row| l.labels[row - 1])
        .collect()
}

/// Inversions of a labelled path: pairs `i < j` with `a_i = a_j` and
/// `l_i < l_j`, or `a_i = a_j + 1` and `l_i > l_j`.
pub fn dinv_labelled(l: &LabelledDyckPath) -> u64 {
    let word = l.path.area_word();
    let labels = &l.labels;
    let mut count = 0u64;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if (word[i] == word[j] && labels[i] < labels[j])
                || (word[i] == word[j] + 1 && labels[i] > labels[j])
            {
                count += 1;
            }
        }
    }
    count
}

/// The labelling of a DDD object whose reading word is a shuffle of `m`
/// zeros, `1, …, n-b` and `n, …, n-b+1`: zeros on zero valleys, the `b`
/// largest labels on decorated peaks in decreasing reading order, the rest in
/// increasing reading order. The labelling is forced, so the result has
/// exactly one element.
pub fn shuffle_labellings(d: &DecoratedDyckPath) -> Result<Vec<LabelledDyckPath>> {
    d.ensure_flavor(&[DyckFlavor::Ddd])?;
    let labelled_rows = d.labelled_count() as u32;
    let mut labels = vec![0u32; d.size()];
    let mut next_small = 1u32;
    let mut next_large = labelled_rows;
    for row in reading_order(d.path()) {
        if d.is_zero_valley(row) {
            continue;
        }
        if d.is_decorated_peak(row) {
            labels[row - 1] = next_large;
            next_large -= 1;
        } else {
            labels[row - 1] = next_small;
            next_small += 1;
        }
    }
    let labelled = LabelledDyckPath::new(d.path().clone(), labels, d.drise().to_vec())
        .map_err(|e| DeltaError::NoValidLabelling(e.to_string()))?;
    Ok(vec![labelled])
}

/// Every partially labelled path of size `blank_count + label_count` with
/// `blank_count` blank labels, the labels `1..=label_count` used once each,
/// and `rise_marks` decorated rises. Ordered by area word, then blank rows,
/// then labels, then decorated rises.
pub fn enumerate_pld(
    blank_count: usize,
    label_count: usize,
    rise_marks: usize,
) -> Vec<LabelledDyckPath> {
    let mut out = Vec::new();
    for word in super::dyck_words(blank_count + label_count) {
        let path = DyckPath::new(word).expect("generated words are valid");
        let size = path.size();
        for blanks in path.valleys().into_iter().combinations(blank_count) {
            let mut labels = vec![0u32; size];
            let mut used = vec![false; label_count + 1];
            let mut assignments = Vec::new();
            assign_labels(&path, &blanks, 1, &mut labels, &mut used, &mut assignments);
            for labels in assignments {
                for drise in path.rises().into_iter().combinations(rise_marks) {
                    out.push(
                        LabelledDyckPath::new(path.clone(), labels.clone(), drise)
                            .expect("enumerated labellings are valid"),
                    );
                }
            }
        }
    }
    out
}

fn assign_labels(
    path: &DyckPath,
    blanks: &[usize],
    row: usize,
    labels: &mut Vec<u32>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<u32>>,
) {
    if row > path.size() {
        out.push(labels.clone());
        return;
    }
    let same_column = row >= 2 && path.letter(row) == path.letter(row - 1) + 1;
    let floor = if same_column { labels[row - 2] } else { 0 };
    if blanks.contains(&row) {
        labels[row - 1] = 0;
        assign_labels(path, blanks, row + 1, labels, used, out);
        return;
    }
    for label in 1..used.len() {
        if used[label] || (label as u32) <= floor {
            continue;
        }
        used[label] = true;
        labels[row - 1] = label as u32;
        assign_labels(path, blanks, row + 1, labels, used, out);
        used[label] = false;
    }
    labels[row - 1] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{dinv_decorated, validate_path};

    #[test]
    fn labelled_golden_dinv() {
        let l = LabelledDyckPath::new(
            validate_path(&[0, 1, 0, 1, 2, 1, 2, 3]).unwrap(),
            vec![1, 3, 0, 4, 6, 0, 2, 6],
            vec![4, 7],
        )
        .unwrap();
        assert_eq!(dinv_labelled(&l), 3);
    }

    #[test]
    fn decorated_golden_reading_word() {
        let d = DecoratedDyckPath::new(
            validate_path(&[0, 1, 1, 0, 1, 1, 1, 2]).unwrap(),
            vec![2, 5],
            vec![3, 8],
            vec![4, 7],
            DyckFlavor::Ddd,
        )
        .unwrap();
        let labelled = shuffle_labellings(&d).unwrap();
        assert_eq!(labelled.len(), 1);
        assert_eq!(labelled[0].labels(), &[1, 2, 6, 0, 3, 4, 0, 5]);
        assert_eq!(reading_word(&labelled[0]), vec![1, 0, 2, 6, 3, 4, 0, 5]);
        assert_eq!(dinv_labelled(&labelled[0]), dinv_decorated(&d).unwrap());
    }

    #[test]
    fn labelling_constraints() {
        let path = validate_path(&[0, 1]).unwrap();
        assert!(LabelledDyckPath::new(path.clone(), vec![2, 1], vec![]).is_err());
        assert!(LabelledDyckPath::new(path.clone(), vec![0, 1], vec![]).is_err());
        assert!(LabelledDyckPath::new(path, vec![1, 2], vec![2]).is_ok());
    }

    #[test]
    fn pld_counts_small() {
        // Size 2, no blanks: word 00 takes both orders, word 01 only 1<2.
        assert_eq!(enumerate_pld(0, 2, 0).len(), 3);
        // One blank: only the word 00 has a valley.
        assert_eq!(enumerate_pld(1, 1, 0).len(), 1);
    }
}
