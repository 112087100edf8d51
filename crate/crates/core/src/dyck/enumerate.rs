//! Depth-first enumeration of decorated families and their q,t-enumerators.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use super::{
    area, bounce, dinv_decorated, dinv_plain, DecoratedDyckPath, DyckFlavor, DyckPath,
};
use crate::qtpoly::QtPoly;

/// Lexicographic iterator over the area words of a fixed size.
#[derive(Clone, Debug)]
pub struct DyckWords {
    current: Option<Vec<u32>>,
}

/// All area words of size `size` in lexicographic order (one empty word for
/// size 0).
pub fn dyck_words(size: usize) -> DyckWords {
    DyckWords {
        current: Some(vec![0; size]),
    }
}

impl Iterator for DyckWords {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let word = self.current.take()?;
        let mut successor = word.clone();
        // Increment the rightmost letter that may grow, reset the tail to 0.
        let mut pos = successor.len();
        while pos > 1 {
            pos -= 1;
            if successor[pos] <= successor[pos - 1] {
                successor[pos] += 1;
                for letter in &mut successor[pos + 1..] {
                    *letter = 0;
                }
                self.current = Some(successor);
                return Some(word);
            }
        }
        Some(word)
    }
}

/// Optional constraints on an enumeration; `None` means unconstrained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DdFilter {
    /// The r statistic.
    pub r_stat: Option<usize>,
    /// Decorated rises (DDD) or decorated falls (bounce flavors).
    pub rise_marks: Option<usize>,
    /// Decorated peaks.
    pub peak_marks: Option<usize>,
}

/// Candidate decoration sites of one (path, zero-valley set) pair.
struct Sites {
    r: usize,
    drise: Vec<usize>,
    dpeak: Vec<usize>,
}

fn sites(path: &DyckPath, zval: &[usize], flavor: DyckFlavor) -> Sites {
    let peaks = path.peaks();
    let leftmost = peaks.first().copied();
    let free_peaks = peaks.iter().copied().filter(|p| !zval.contains(p));
    match flavor {
        DyckFlavor::Ddd => Sites {
            r: path
                .area_word()
                .iter()
                .enumerate()
                .filter(|&(i, &a)| a == 0 && !zval.contains(&(i + 1)))
                .count(),
            drise: path.rises(),
            dpeak: free_peaks.collect(),
        },
        DyckFlavor::DdbStar | DyckFlavor::DdbTriangle => Sites {
            r: path.initial_run(),
            drise: if flavor == DyckFlavor::DdbStar {
                path.falls()
            } else {
                path.fake_falls(zval)
            },
            dpeak: free_peaks.filter(|&p| Some(p) != leftmost).collect(),
        },
    }
}

fn sizes(constraint: Option<usize>, available: usize) -> Vec<usize> {
    match constraint {
        Some(k) if k <= available => vec![k],
        Some(_) => Vec::new(),
        None => (0..=available).collect(),
    }
}

fn objects_for_word(
    word: Vec<u32>,
    zero_valleys: usize,
    filter: DdFilter,
    flavor: DyckFlavor,
) -> Vec<DecoratedDyckPath> {
    let path = DyckPath::new(word).expect("generated words are valid");
    let mut out = Vec::new();
    for zval in path.valleys().into_iter().combinations(zero_valleys) {
        let s = sites(&path, &zval, flavor);
        if filter.r_stat.is_some_and(|r| r != s.r) {
            continue;
        }
        for rise_count in sizes(filter.rise_marks, s.drise.len()) {
            for drise in s.drise.iter().copied().combinations(rise_count) {
                for peak_count in sizes(filter.peak_marks, s.dpeak.len()) {
                    for dpeak in s.dpeak.iter().copied().combinations(peak_count) {
                        out.push(DecoratedDyckPath::from_parts_unchecked(
                            path.clone(),
                            drise.clone(),
                            dpeak,
                            zval.clone(),
                            flavor,
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Every object of the family with `zero_valleys` zero valleys, `rows`
/// other rows and the given constraints, ordered by area word, then zero
/// valleys, then decorated rises / falls, then decorated peaks.
pub fn enumerate_dd_filtered(
    zero_valleys: usize,
    rows: usize,
    filter: DdFilter,
    flavor: DyckFlavor,
) -> impl Iterator<Item = DecoratedDyckPath> {
    dyck_words(zero_valleys + rows)
        .flat_map(move |word| objects_for_word(word, zero_valleys, filter, flavor))
}

/// The family with `zero_valleys` zero valleys, `rows` other rows, r
/// statistic `r_stat`, `rise_marks` decorated rises / falls and `peak_marks`
/// decorated peaks.
pub fn enumerate_dd(
    zero_valleys: usize,
    rows: usize,
    r_stat: usize,
    rise_marks: usize,
    peak_marks: usize,
    flavor: DyckFlavor,
) -> impl Iterator<Item = DecoratedDyckPath> {
    enumerate_dd_filtered(
        zero_valleys,
        rows,
        DdFilter {
            r_stat: Some(r_stat),
            rise_marks: Some(rise_marks),
            peak_marks: Some(peak_marks),
        },
        flavor,
    )
}

/// The q,t-enumerator `Σ q^dinv t^area` (DDD) or `Σ q^area t^bounce`
/// (bounce flavors) of one family, by direct enumeration.
pub fn dd_qt(
    zero_valleys: usize,
    rows: usize,
    r_stat: usize,
    rise_marks: usize,
    peak_marks: usize,
    flavor: DyckFlavor,
) -> QtPoly {
    let mut out = QtPoly::zero();
    for d in enumerate_dd(zero_valleys, rows, r_stat, rise_marks, peak_marks, flavor) {
        let (q_exp, t_exp) = bistatistic(&d);
        out.add_monomial(q_exp, t_exp);
    }
    out
}

/// `(q exponent, t exponent)` of one object.
pub fn bistatistic(d: &DecoratedDyckPath) -> (u32, u32) {
    match d.flavor() {
        DyckFlavor::Ddd => (
            dinv_decorated(d).expect("flavor checked") as u32,
            area(d) as u32,
        ),
        DyckFlavor::DdbStar | DyckFlavor::DdbTriangle => (
            area(d) as u32,
            bounce(d).expect("flavor checked") as u32,
        ),
    }
}

/// Enumerators of every family with a fixed number of zero valleys and
/// other rows, keyed by `(r statistic, decorated rises / falls, decorated
/// peaks)`; families that are empty are absent.
pub type DdTable = BTreeMap<(usize, usize, usize), QtPoly>;

/// Computes [`DdTable`] for one number of zero valleys and other rows.
///
/// For a fixed path and zero-valley set, the statistic that depends on the
/// rise / fall decorations and the one that depends on the peak decorations
/// are independent, so each side is tabulated once and the two tables are
/// multiplied. Work is spread over area words with rayon.
pub fn dd_qt_table(zero_valleys: usize, rows: usize, flavor: DyckFlavor) -> DdTable {
    let words: Vec<Vec<u32>> = dyck_words(zero_valleys + rows).collect();
    words
        .into_par_iter()
        .map(|word| table_for_word(word, zero_valleys, flavor))
        .reduce(DdTable::new, merge_tables)
}

fn merge_tables(mut left: DdTable, right: DdTable) -> DdTable {
    for (key, poly) in right {
        *left.entry(key).or_default() += poly;
    }
    left
}

type SideCounts = BTreeMap<(usize, u32), u64>;

fn table_for_word(word: Vec<u32>, zero_valleys: usize, flavor: DyckFlavor) -> DdTable {
    let path = DyckPath::new(word).expect("generated words are valid");
    let mut table = DdTable::new();
    let column_areas = path.column_areas();
    let total_area = path.total_area() as u32;
    for zval in path.valleys().into_iter().combinations(zero_valleys) {
        let s = sites(&path, &zval, flavor);
        let mut area_side = SideCounts::new();
        for drise in s.drise.iter().copied().powerset() {
            let removed: u32 = match flavor {
                DyckFlavor::Ddd => drise.iter().map(|&row| path.letter(row)).sum(),
                _ => drise.iter().map(|&col| column_areas[col]).sum(),
            };
            *area_side.entry((drise.len(), total_area - removed)).or_default() += 1;
        }
        let mut peak_side = SideCounts::new();
        for dpeak in s.dpeak.iter().copied().powerset() {
            let b = dpeak.len();
            let d = DecoratedDyckPath::from_parts_unchecked(
                path.clone(),
                Vec::new(),
                dpeak,
                zval.clone(),
                flavor,
            );
            let value = match flavor {
                DyckFlavor::Ddd => dinv_decorated(&d),
                _ => bounce(&d),
            }
            .expect("flavor checked") as u32;
            *peak_side.entry((b, value)).or_default() += 1;
        }
        for (&(a, area_value), &area_count) in &area_side {
            for (&(b, peak_value), &peak_count) in &peak_side {
                let (q_exp, t_exp) = match flavor {
                    DyckFlavor::Ddd => (peak_value, area_value),
                    _ => (area_value, peak_value),
                };
                table.entry((s.r, a, b)).or_default().add_term(
                    q_exp,
                    t_exp,
                    BigInt::from(area_count * peak_count),
                );
            }
        }
    }
    table
}

/// `Σ_D q^{dinv(D)} t^{area(D)}` over all undecorated Dyck paths of size `size`.
pub fn qt_catalan_brute_force(size: usize) -> QtPoly {
    let mut out = QtPoly::zero();
    for word in dyck_words(size) {
        let path = DyckPath::new(word).expect("generated words are valid");
        out.add_monomial(dinv_plain(&path) as u32, path.total_area() as u32);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_counts_are_catalan() {
        let counts: Vec<usize> = (0..9).map(|n| dyck_words(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn words_are_lexicographic() {
        let words: Vec<Vec<u32>> = dyck_words(3).collect();
        assert_eq!(
            words,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn enumerate_examples() {
        let all: usize = (0..=3)
            .map(|r| enumerate_dd(0, 3, r, 0, 0, DyckFlavor::Ddd).count())
            .sum();
        assert_eq!(all, 5);
        let only: Vec<_> = enumerate_dd(0, 2, 1, 0, 0, DyckFlavor::Ddd).collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].area_word(), &[0, 1]);
        for m in 1..4 {
            assert_eq!(
                enumerate_dd_filtered(m, 0, DdFilter::default(), DyckFlavor::Ddd).count(),
                0
            );
        }
    }

    #[test]
    fn dd_qt_examples() {
        assert_eq!(dd_qt(0, 2, 1, 0, 0, DyckFlavor::Ddd), QtPoly::t());
        assert_eq!(dd_qt(0, 2, 2, 0, 0, DyckFlavor::Ddd), QtPoly::q());
        let mut catalan = QtPoly::zero();
        for r in 0..=3 {
            catalan += dd_qt(0, 3, r, 0, 0, DyckFlavor::Ddd);
        }
        let expected =
            QtPoly::from_terms([(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)]);
        assert_eq!(catalan, expected);
        assert_eq!(qt_catalan_brute_force(3), expected);
    }

    #[test]
    fn table_agrees_with_direct_enumeration() {
        for flavor in DyckFlavor::ALL {
            for total in 0..=5usize {
                for m in 0..=total {
                    let n = total - m;
                    let table = dd_qt_table(m, n, flavor);
                    for r in 0..=n {
                        for a in 0..=total + 1 {
                            for b in 0..=total {
                                let direct = dd_qt(m, n, r, a, b, flavor);
                                let tabulated =
                                    table.get(&(r, a, b)).cloned().unwrap_or_default();
                                assert_eq!(direct, tabulated, "{flavor} {m} {n} {r} {a} {b}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumerated_objects_pass_validation() {
        for flavor in DyckFlavor::ALL {
            for m in 0..=2 {
                for d in enumerate_dd_filtered(m, 3, DdFilter::default(), flavor) {
                    let rebuilt = DecoratedDyckPath::new(
                        d.path().clone(),
                        d.drise().to_vec(),
                        d.dpeak().to_vec(),
                        d.zval().to_vec(),
                        flavor,
                    )
                    .unwrap();
                    assert_eq!(rebuilt, d);
                }
            }
        }
    }
}
