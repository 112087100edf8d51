//! The zeta map from (area, bounce) polyominoes to (dinv, area) polyominoes.
//!
//! Every column and row of the preimage carries the label of the bounce-path
//! run that crosses it (`0, 0̄, 1, 1̄, …`); a step of the red or green path
//! inherits the label of its column (horizontal) or row (vertical). The image
//! word starts with the artificial `0`, followed by the red path's `0`/`0̄`
//! labels in path order. Then for each consecutive pair of labels
//! `(L, succ L)` the path is read — the red one when `L` is unbarred, the
//! green one when it is barred — and every `succ L` is inserted right after
//! the `i`-th `L` of the word, `i` being the number of `L`s met before it on
//! that path. Red valleys become decorated barred rises and green peaks
//! decorated unbarred rises.

use crate::error::{DeltaError, Result};
use crate::polyomino::{
    poly_bounce_word, word_to_paths, Dir, Letter, PolyDecorations, PolyFlavor, ReducedPolyomino,
};

/// The row or column a letter of the image came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Origin {
    Artificial,
    Column(usize),
    Row(usize),
}

fn labelled_steps(path: &[Dir], columns: &[Letter], rows: &[Letter]) -> Vec<(Letter, Origin)> {
    let (mut x, mut y) = (0usize, 0usize);
    path.iter()
        .map(|step| match step {
            Dir::East => {
                x += 1;
                (columns[x - 1], Origin::Column(x))
            }
            Dir::North => {
                y += 1;
                (rows[y - 1], Origin::Row(y))
            }
        })
        .collect()
}

/// Sends a CIRC polyomino to a STAR polyomino with
/// `(area, bounce)(p) = (dinv, area)(zeta(p))`.
pub fn zeta(p: &ReducedPolyomino) -> Result<ReducedPolyomino> {
    if p.flavor() != PolyFlavor::Circ && !p.decorations().is_empty() {
        return Err(DeltaError::FlavorMismatch {
            expected: "circ".into(),
            found: p.flavor().name().into(),
        });
    }
    let bounce = poly_bounce_word(p);
    let (red, green) = word_to_paths(p.word());
    let red = labelled_steps(&red, &bounce.columns, &bounce.rows);
    let green = labelled_steps(&green, &bounce.columns, &bounce.rows);

    let mut word: Vec<(Letter, Origin)> = vec![(Letter::unbarred(0), Origin::Artificial)];
    word.extend(red.iter().copied().filter(|(l, _)| l.key() <= 1));
    let top = bounce.word.iter().map(|l| l.key()).max().unwrap_or(0);
    for key in 1..top {
        let current = Letter::from_key(key);
        let next = current.succ();
        let along = if current.barred { &green } else { &red };
        let mut seen = 0usize;
        for &(label, origin) in along {
            if label == current {
                seen += 1;
            } else if label == next {
                if seen == 0 {
                    return Err(DeltaError::MalformedPolyomino(format!(
                        "label {next} appears before any {current} on its path"
                    )));
                }
                let mut at = word
                    .iter()
                    .enumerate()
                    .filter(|(_, (l, _))| *l == current)
                    .nth(seen - 1)
                    .map(|(i, _)| i + 1)
                    .ok_or_else(|| {
                        DeltaError::MalformedPolyomino(format!("missing {current} in the word"))
                    })?;
                while at < word.len() && word[at].0 == next {
                    at += 1;
                }
                word.insert(at, (label, origin));
            }
        }
    }

    let position_of = |target: Origin| {
        word.iter()
            .position(|&(_, origin)| origin == target)
            .map(|i| i + 1)
            .expect("every row and column is written once")
    };
    let dec = PolyDecorations::star(
        p.decorations().gp.iter().map(|&x| position_of(Origin::Column(x))).collect(),
        p.decorations().rv.iter().map(|&y| position_of(Origin::Row(y))).collect(),
    );
    ReducedPolyomino::new(word.into_iter().map(|(l, _)| l).collect(), PolyFlavor::Star, dec)
}

/// Inverse of [`zeta`]: the red path lists the letters `k, k̄` for
/// `k = 0, 1, …` (east for unbarred, north for barred); the green path
/// starts with one east step per non-artificial `0` and then lists the
/// letters `k̄, k + 1`.
pub fn zeta_inv(q: &ReducedPolyomino) -> Result<ReducedPolyomino> {
    if q.flavor() != PolyFlavor::Star && !q.decorations().is_empty() {
        return Err(DeltaError::FlavorMismatch {
            expected: "star".into(),
            found: q.flavor().name().into(),
        });
    }
    let word = q.word();
    let top = word.iter().map(|l| l.value).max().unwrap_or(0);
    let mut red = Vec::with_capacity(word.len());
    let mut origin = vec![Origin::Artificial; word.len()];
    let (mut x, mut y) = (0usize, 0usize);
    for value in 0..=top {
        for (i, l) in word.iter().enumerate().skip(1) {
            if l.value != value {
                continue;
            }
            if l.barred {
                y += 1;
                red.push(Dir::North);
                origin[i] = Origin::Row(y);
            } else {
                x += 1;
                red.push(Dir::East);
                origin[i] = Origin::Column(x);
            }
        }
    }
    let leading_zeros = word
        .iter()
        .skip(1)
        .filter(|&&l| l == Letter::unbarred(0))
        .count();
    let mut green = vec![Dir::East; leading_zeros];
    for value in 0..=top {
        let low = Letter::barred(value);
        let high = low.succ();
        for l in word.iter().skip(1) {
            if *l == low {
                green.push(Dir::North);
            } else if *l == high {
                green.push(Dir::East);
            }
        }
    }

    let column_of = |pos: usize| match origin[pos - 1] {
        Origin::Column(c) => Ok(c),
        _ => Err(DeltaError::NotInImage(format!("position {pos} is not an unbarred letter"))),
    };
    let row_of = |pos: usize| match origin[pos - 1] {
        Origin::Row(r) => Ok(r),
        _ => Err(DeltaError::NotInImage(format!("position {pos} is not a barred letter"))),
    };
    let dec = PolyDecorations::circ(
        q.decorations().ur.iter().map(|&p| column_of(p)).collect::<Result<_>>()?,
        q.decorations().br.iter().map(|&p| row_of(p)).collect::<Result<_>>()?,
    );
    let preimage = ReducedPolyomino::from_paths(&red, &green, PolyFlavor::Circ, dec)
        .map_err(|e| DeltaError::NotInImage(e.to_string()))?;
    let expected = if q.flavor() == PolyFlavor::Star {
        q.clone()
    } else {
        q.undecorated(PolyFlavor::Star)
    };
    if zeta(&preimage).ok() != Some(expected) {
        return Err(DeltaError::NotInImage(
            "the reconstructed preimage does not map back".into(),
        ));
    }
    Ok(preimage)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyomino::{parse_path, parse_word, poly_bistatistic};

    fn golden_preimage() -> ReducedPolyomino {
        ReducedPolyomino::from_paths(
            &parse_path("NNENEENEENEEENEEEEN").unwrap(),
            &parse_path("EENNNEEEEENEEENEENN").unwrap(),
            PolyFlavor::Circ,
            PolyDecorations::circ(vec![3, 8], vec![3, 5]),
        )
        .unwrap()
    }

    fn golden_image() -> ReducedPolyomino {
        let (word, _) = parse_word("0 0b 0b 0 0b 1 1b 2 2b 2 2 1 1 1b 2 2 2b 1 1 0").unwrap();
        ReducedPolyomino::new(word, PolyFlavor::Star, PolyDecorations::star(vec![6, 8], vec![5, 14]))
            .unwrap()
    }

    #[test]
    fn golden_forward_and_back() {
        let pre = golden_preimage();
        assert_eq!((pre.width(), pre.height()), (12, 7));
        let image = zeta(&pre).unwrap();
        assert_eq!(image, golden_image());
        assert_eq!(zeta_inv(&image).unwrap(), pre);
        let (area, bounce) = poly_bistatistic(&pre).unwrap();
        let (dinv, area_image) = poly_bistatistic(&image).unwrap();
        assert_eq!((area, bounce), (dinv, area_image));
    }

    #[test]
    fn one_by_one_cases() {
        for p in crate::polyomino::enumerate_rp(1, None, 1, 0, 0, PolyFlavor::Circ) {
            let image = zeta(&p).unwrap();
            assert_eq!(zeta_inv(&image).unwrap(), p);
        }
    }
}
