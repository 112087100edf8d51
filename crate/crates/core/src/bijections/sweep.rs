//! The sweep map from (dinv, area) objects to (area, bounce) objects.
//!
//! The image path is written level by level. First one vertical step for
//! every zero that is not a zero valley; then, for `i = 0, 1, …`, the area
//! word is scanned left to right and each letter emits
//!
//! * a horizontal step ("flat") if it equals `i` and is not a zero valley,
//! * a vertical then a horizontal step if it equals `i` and is a zero valley,
//! * a vertical step ("up") if it equals `i + 1` and is not a zero valley.
//!
//! Every non-zero-valley row therefore owns one up and one flat, and every
//! zero valley owns one vertical-horizontal pair. Decorations travel along:
//! a decorated peak becomes a decorated fake fall at its flat, a decorated
//! rise becomes a decorated peak at the top of the vertical run its up
//! starts, and each zero valley marks the first step of the vertical run
//! that its pair ends.

use std::collections::BTreeSet;

use crate::dyck::{validate_path, DecoratedDyckPath, DyckFlavor, Step};
use crate::error::{DeltaError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TokenKind {
    Up,
    Flat,
    ZeroValley,
}

/// One token of the image, owned by a row of the preimage.
#[derive(Clone, Copy, Debug)]
struct Token {
    kind: TokenKind,
    row: usize,
}

/// Positions of the image's vertical runs: for each image row, the first and
/// last rows of its run.
struct Runs {
    start: Vec<usize>,
    end: Vec<usize>,
}

fn runs(steps: &[Step], size: usize) -> Runs {
    let mut start = vec![0; size + 1];
    let mut end = vec![0; size + 1];
    let mut current: Vec<usize> = Vec::new();
    let mut flush = |current: &mut Vec<usize>| {
        if let (Some(&first), Some(&last)) = (current.first(), current.last()) {
            for &row in current.iter() {
                start[row] = first;
                end[row] = last;
            }
        }
        current.clear();
    };
    for step in steps {
        match *step {
            Step::North(row) => current.push(row),
            Step::East(_) => flush(&mut current),
        }
    }
    flush(&mut current);
    Runs { start, end }
}

fn tokens_of(d: &DecoratedDyckPath) -> Vec<Token> {
    let word = d.area_word();
    let top = word.iter().copied().max().unwrap_or(0);
    let mut tokens = Vec::with_capacity(2 * word.len());
    for (i, &a) in word.iter().enumerate() {
        let row = i + 1;
        if a == 0 && !d.is_zero_valley(row) {
            tokens.push(Token {
                kind: TokenKind::Up,
                row,
            });
        }
    }
    for level in 0..=top {
        for (i, &a) in word.iter().enumerate() {
            let row = i + 1;
            let zero_valley = d.is_zero_valley(row);
            let kind = if a == level && zero_valley {
                TokenKind::ZeroValley
            } else if a == level {
                TokenKind::Flat
            } else if a == level + 1 && !zero_valley {
                TokenKind::Up
            } else {
                continue;
            };
            tokens.push(Token { kind, row });
        }
    }
    tokens
}

/// Sends a DDD object to a DDB_TRIANGLE object with
/// `(dinv, area)(d) = (area, bounce)(sweep(d))`.
pub fn sweep(d: &DecoratedDyckPath) -> Result<DecoratedDyckPath> {
    d.ensure_flavor(&[DyckFlavor::Ddd])?;
    let size = d.size();
    let tokens = tokens_of(d);

    // Owner bookkeeping: image row of each up / zero-valley vertical step and
    // image column of each flat / zero-valley horizontal step.
    let mut up_row = vec![0usize; size + 1];
    let mut flat_col = vec![0usize; size + 1];
    let mut zv_row = vec![0usize; size + 1];
    let mut image_word = Vec::with_capacity(size);
    let (mut rows, mut cols) = (0usize, 0usize);
    let mut vertical = |rows: &mut usize, cols: usize| {
        *rows += 1;
        image_word.push((*rows - 1 - cols) as u32);
        *rows
    };
    for token in &tokens {
        match token.kind {
            TokenKind::Up => up_row[token.row] = vertical(&mut rows, cols),
            TokenKind::Flat => {
                cols += 1;
                flat_col[token.row] = cols;
            }
            TokenKind::ZeroValley => {
                zv_row[token.row] = vertical(&mut rows, cols);
                cols += 1;
            }
        }
    }
    let path = validate_path(&image_word)?;
    let run = runs(&path.steps(), size);

    let zval: Vec<usize> = d.zval().iter().map(|&row| run.start[zv_row[row]]).collect();
    let dpeak: Vec<usize> = d.drise().iter().map(|&row| run.end[up_row[row]]).collect();
    let drise: Vec<usize> = d.dpeak().iter().map(|&row| flat_col[row]).collect();
    DecoratedDyckPath::new(path, drise, dpeak, zval, DyckFlavor::DdbTriangle)
}

fn not_in_image(why: impl Into<String>) -> DeltaError {
    DeltaError::NotInImage(why.into())
}

/// Inverse of [`sweep`]; fails with [`DeltaError::NotInImage`] when the
/// object has no preimage.
pub fn sweep_inv(e: &DecoratedDyckPath) -> Result<DecoratedDyckPath> {
    e.ensure_flavor(&[DyckFlavor::DdbTriangle])?;
    let size = e.size();
    if size == 0 {
        return Ok(DecoratedDyckPath::plain(e.path().clone(), DyckFlavor::Ddd));
    }
    let steps = e.path().steps();
    let run = runs(&steps, size);
    let zero_valley_starts: BTreeSet<usize> = e.zval().iter().copied().collect();

    // Token stream of the image; the kind is read off the zero-valley marks.
    let mut kinds = Vec::with_capacity(2 * size);
    let mut v_of_token = Vec::with_capacity(2 * size);
    let mut h_of_token = Vec::with_capacity(2 * size);
    let mut idx = 0;
    while idx < steps.len() {
        match steps[idx] {
            Step::North(row) => {
                let closes_zero_valley =
                    run.end[row] == row && zero_valley_starts.contains(&run.start[row]);
                if closes_zero_valley {
                    let Some(&Step::East(col)) = steps.get(idx + 1) else {
                        return Err(not_in_image("zero-valley run is not followed by a horizontal step"));
                    };
                    kinds.push(TokenKind::ZeroValley);
                    v_of_token.push(row);
                    h_of_token.push(col);
                    idx += 2;
                } else {
                    kinds.push(TokenKind::Up);
                    v_of_token.push(row);
                    h_of_token.push(0);
                    idx += 1;
                }
            }
            Step::East(col) => {
                kinds.push(TokenKind::Flat);
                v_of_token.push(0);
                h_of_token.push(col);
                idx += 1;
            }
        }
    }

    // Split into levels: level -1 is the leading ups, level k holds exactly
    // as many flats as level k - 1 holds ups and begins with a flat.
    let leading = kinds.iter().take_while(|&&k| k == TokenKind::Up).count();
    let mut level_of = vec![-1i64; kinds.len()];
    let mut need = leading;
    let mut flats = 0usize;
    let mut ups = 0usize;
    let mut level = 0i64;
    for t in leading..kinds.len() {
        if t == leading && kinds[t] != TokenKind::Flat {
            return Err(not_in_image("the first level does not start with a flat"));
        }
        if kinds[t] == TokenKind::Flat {
            if flats == need {
                if ups == 0 {
                    return Err(not_in_image("a level has more flats than the previous one has ups"));
                }
                level += 1;
                need = ups;
                flats = 0;
                ups = 0;
            }
            flats += 1;
        }
        if kinds[t] == TokenKind::Up {
            ups += 1;
        }
        level_of[t] = level;
    }
    if flats != need || ups != 0 {
        return Err(not_in_image("levels do not close up"));
    }

    // Rebuild the word. Entries: (value, zero valley, up token, flat token).
    #[derive(Clone, Copy)]
    struct Entry {
        value: u32,
        zero_valley: bool,
        up: usize,
        flat: usize,
    }
    const NONE: usize = usize::MAX;
    let mut word: Vec<Entry> = Vec::with_capacity(size);
    let top_level = level;
    let mut pending_ups: Vec<usize> = (0..leading).collect();
    for lvl in 0..=top_level {
        let value = lvl as u32;
        let level_tokens: Vec<usize> = (0..kinds.len()).filter(|&t| level_of[t] == lvl).collect();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &t in &level_tokens {
            if kinds[t] == TokenKind::Flat {
                groups.push(vec![t]);
            } else {
                groups.last_mut().expect("levels start with a flat").push(t);
            }
        }
        let anchors: Vec<usize> = if lvl == 0 {
            Vec::new()
        } else {
            word.iter()
                .enumerate()
                .filter(|(_, e)| !e.zero_valley && e.value == value)
                .map(|(i, _)| i)
                .collect()
        };
        if groups.len() != pending_ups.len() {
            return Err(not_in_image("flat count does not match up count"));
        }
        let mut next_ups = Vec::new();
        let mut inserts: Vec<(Option<usize>, Vec<Entry>)> = Vec::new();
        for (g, group) in groups.iter().enumerate() {
            let mut run_entries = Vec::new();
            let head = Entry {
                value,
                zero_valley: false,
                up: pending_ups[g],
                flat: group[0],
            };
            for &t in &group[1..] {
                match kinds[t] {
                    TokenKind::ZeroValley => run_entries.push(Entry {
                        value,
                        zero_valley: true,
                        up: NONE,
                        flat: NONE,
                    }),
                    TokenKind::Up => {
                        next_ups.push(t);
                        run_entries.push(Entry {
                            value: value + 1,
                            zero_valley: false,
                            up: t,
                            flat: NONE,
                                    });
                    }
                    TokenKind::Flat => unreachable!("groups hold a single flat"),
                }
            }
            if lvl == 0 {
                let mut all = vec![head];
                all.extend(run_entries);
                inserts.push((None, all));
            } else {
                let anchor = anchors[g];
                word[anchor].flat = group[0];
                inserts.push((Some(anchor), run_entries));
            }
        }
        if lvl == 0 {
            for (_, entries) in inserts {
                word.extend(entries);
            }
        } else {
            for (anchor, entries) in inserts.into_iter().rev() {
                let at = anchor.expect("anchored above level 0") + 1;
                word.splice(at..at, entries);
            }
        }
        pending_ups = next_ups;
    }
    if !pending_ups.is_empty() || word.len() != size {
        return Err(not_in_image("tokens do not assemble into a word"));
    }

    let area_word: Vec<u32> = word.iter().map(|e| e.value).collect();
    let path = validate_path(&area_word).map_err(|e| not_in_image(e.to_string()))?;
    let mut row_of_up_v = vec![0usize; size + 1];
    let mut row_of_flat_h = vec![0usize; size + 1];
    let mut zval = Vec::new();
    for (i, entry) in word.iter().enumerate() {
        let row = i + 1;
        if entry.zero_valley {
            zval.push(row);
        } else {
            row_of_up_v[v_of_token[entry.up]] = row;
            row_of_flat_h[h_of_token[entry.flat]] = row;
        }
    }
    let mut drise = Vec::new();
    for &peak in e.dpeak() {
        match row_of_up_v[run.start[peak]] {
            0 => return Err(not_in_image(format!("decorated peak {peak} does not top an up run"))),
            row => drise.push(row),
        }
    }
    let mut dpeak = Vec::new();
    for &col in e.drise() {
        match row_of_flat_h[col] {
            0 => return Err(not_in_image(format!("decorated column {col} is not a flat"))),
            row => dpeak.push(row),
        }
    }
    let d = DecoratedDyckPath::new(path, drise, dpeak, zval, DyckFlavor::Ddd)
        .map_err(|err| not_in_image(err.to_string()))?;
    if sweep(&d).ok().as_ref() != Some(e) {
        return Err(not_in_image("the reconstructed preimage does not sweep back"));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sweep_golden() -> DecoratedDyckPath {
        DecoratedDyckPath::new(
            validate_path(&[0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 2, 0]).unwrap(),
            vec![2, 11],
            vec![4, 6],
            vec![3, 7, 8, 12],
            DyckFlavor::Ddd,
        )
        .unwrap()
    }

    fn steps_string(d: &DecoratedDyckPath) -> String {
        d.path()
            .steps()
            .iter()
            .map(|s| match s {
                Step::North(_) => 'V',
                Step::East(_) => 'H',
            })
            .collect()
    }

    #[test]
    fn golden_image_and_back() {
        let image = sweep(&sweep_golden()).unwrap();
        assert_eq!(steps_string(&image), "VVVVHVVHHVHVHHVVHHVHHHVH");
        assert_eq!(image.zval(), &[7, 8, 9, 11]);
        assert_eq!(image.dpeak(), &[6, 12]);
        assert_eq!(image.drise(), &[3, 10]);
        assert_eq!(sweep_inv(&image).unwrap(), sweep_golden());
    }

    #[test]
    fn staircase_goes_to_bounce_zero() {
        let d = DecoratedDyckPath::plain(validate_path(&[0, 0, 0]).unwrap(), DyckFlavor::Ddd);
        let image = sweep(&d).unwrap();
        assert_eq!(image.area_word(), &[0, 1, 2]);
        assert_eq!(crate::dyck::bounce(&image).unwrap(), 0);
    }

    #[test]
    fn size_one_is_fixed() {
        let d = DecoratedDyckPath::plain(validate_path(&[0]).unwrap(), DyckFlavor::Ddd);
        let e = sweep(&d).unwrap();
        assert_eq!(e.area_word(), &[0]);
        assert_eq!(sweep_inv(&e).unwrap(), d);
    }
}
