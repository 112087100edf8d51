//! The (dinv, area)-preserving map between STAR polyominoes and DDD paths.
//!
//! Deleting the decorated barred rises of the area word and forgetting bars
//! leaves a Dyck area word (the artificial `0` is the first row). Remaining
//! barred letters become zero valleys, decorated unbarred rises stay
//! decorated rises, and every unbarred letter is a decorated peak unless a
//! decorated barred rise followed it.

use crate::dyck::{validate_path, DecoratedDyckPath, DyckFlavor};
use crate::error::{DeltaError, Result};
use crate::polyomino::{Letter, PolyDecorations, PolyFlavor, ReducedPolyomino};

/// Polyomino in `RP(m\r, n)^{*k,j}` → path in `DD(n-j, m+1\r)^{*k,∘(m+1-j)}`.
pub fn poly_to_dyck(p: &ReducedPolyomino) -> Result<DecoratedDyckPath> {
    if p.flavor() != PolyFlavor::Star && !p.decorations().is_empty() {
        return Err(DeltaError::FlavorMismatch {
            expected: "star".into(),
            found: p.flavor().name().into(),
        });
    }
    let word = p.word();
    let dec = p.decorations();
    let dropped = |pos: usize| dec.br.binary_search(&pos).is_ok();
    let mut area_word = Vec::with_capacity(word.len());
    let mut zval = Vec::new();
    let mut drise = Vec::new();
    let mut dpeak = Vec::new();
    for (i, letter) in word.iter().enumerate() {
        let pos = i + 1;
        if dropped(pos) {
            continue;
        }
        area_word.push(letter.value);
        let row = area_word.len();
        if letter.barred {
            zval.push(row);
            continue;
        }
        if dec.ur.binary_search(&pos).is_ok() {
            drise.push(row);
        }
        if !dropped(pos + 1) {
            dpeak.push(row);
        }
    }
    DecoratedDyckPath::new(validate_path(&area_word)?, drise, dpeak, zval, DyckFlavor::Ddd)
}

/// Inverse of [`poly_to_dyck`]: bar the zero valleys, and after every row
/// that is neither a zero valley nor a decorated peak insert a decorated
/// barred copy of its letter.
pub fn dyck_to_poly(d: &DecoratedDyckPath) -> Result<ReducedPolyomino> {
    d.ensure_flavor(&[DyckFlavor::Ddd])?;
    let mut word = Vec::with_capacity(2 * d.size());
    let mut ur = Vec::new();
    let mut br = Vec::new();
    for (i, &value) in d.area_word().iter().enumerate() {
        let row = i + 1;
        if d.is_zero_valley(row) {
            word.push(Letter::barred(value));
            continue;
        }
        word.push(Letter::unbarred(value));
        if d.drise().binary_search(&row).is_ok() {
            ur.push(word.len());
        }
        if !d.is_decorated_peak(row) {
            word.push(Letter::barred(value));
            br.push(word.len());
        }
    }
    let p = ReducedPolyomino::new(word, PolyFlavor::Star, PolyDecorations::star(ur, br))
        .map_err(|e| DeltaError::NotInImage(e.to_string()))?;
    if poly_to_dyck(&p).ok().as_ref() != Some(d) {
        return Err(DeltaError::NotInImage(
            "the reconstructed polyomino does not map back".into(),
        ));
    }
    Ok(p)
}
