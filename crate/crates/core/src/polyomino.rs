//! Reduced parallelogram polyominoes and their barred-alphabet area words.
//!
//! A reduced polyomino is a pair of lattice paths from `(0,0)` to `(m,n)`, the
//! red one weakly above the green one. It is stored through its area word over
//! the alphabet `0 < 0̄ < 1 < 1̄ < …`: the word starts with an artificial
//! unbarred `0`, holds `m` further unbarred letters and `n` barred ones, and
//! every increase goes to the successor letter. The two paths are derived
//! views.
//!
//! Two decoration flavors exist. [`PolyFlavor::Star`] decorates unbarred and
//! barred rises of the word (positions are 1-based, the artificial `0` is
//! position 1). [`PolyFlavor::Circ`] decorates green peaks (stored as the
//! column, 1-based, of the horizontal step) and red valleys (stored as the
//! row, 1-based, of the vertical step).

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{DeltaError, Result};
use crate::qtpoly::QtPoly;

/// A letter `v` or `v̄` of the barred alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, bool)", into = "(u32, bool)")]
pub struct Letter {
    pub value: u32,
    pub barred: bool,
}

impl From<(u32, bool)> for Letter {
    fn from((value, barred): (u32, bool)) -> Self {
        Self { value, barred }
    }
}

impl From<Letter> for (u32, bool) {
    fn from(l: Letter) -> Self {
        (l.value, l.barred)
    }
}

impl Letter {
    pub const fn unbarred(value: u32) -> Self {
        Self {
            value,
            barred: false,
        }
    }

    pub const fn barred(value: u32) -> Self {
        Self {
            value,
            barred: true,
        }
    }

    /// Position in the alphabet order: `2v` for `v`, `2v + 1` for `v̄`.
    pub fn key(self) -> u64 {
        2 * u64::from(self.value) + u64::from(self.barred)
    }

    /// Inverse of [`Letter::key`].
    pub fn from_key(key: u64) -> Self {
        Self {
            value: (key / 2) as u32,
            barred: key % 2 == 1,
        }
    }

    /// `succ(v) = v̄`, `succ(v̄) = v + 1`.
    pub fn succ(self) -> Self {
        if self.barred {
            Self::unbarred(self.value + 1)
        } else {
            Self::barred(self.value)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}\u{0304}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Renders a word as space-separated letters, e.g. `0 0̄ 1`.
pub fn format_word(word: &[Letter]) -> String {
    word.iter().map(Letter::to_string).join(" ")
}

/// Parses a whitespace-separated word. A bar is written as a combining
/// macron (`0̄`), a trailing `b` or a trailing `'`; a leading `*` marks the
/// letter as decorated. Returns the word and the 1-based decorated positions.
pub fn parse_word(text: &str) -> Result<(Vec<Letter>, Vec<usize>)> {
    let mut word = Vec::new();
    let mut decorated = Vec::new();
    for (idx, token) in text.split_whitespace().enumerate() {
        let (star, rest) = match token.strip_prefix('*') {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
        let suffix = &rest[digits.len()..];
        let barred = match suffix {
            "" => false,
            "\u{0304}" | "b" | "'" => true,
            _ => {
                return Err(DeltaError::MalformedPolyomino(format!(
                    "cannot read letter {token:?}"
                )))
            }
        };
        let value = digits.parse::<u32>().map_err(|_| {
            DeltaError::MalformedPolyomino(format!("cannot read letter {token:?}"))
        })?;
        word.push(Letter { value, barred });
        if star {
            decorated.push(idx + 1);
        }
    }
    Ok((word, decorated))
}

/// Checks the area-word rules: an artificial leading `0` and increases only
/// to the successor letter.
pub fn validate_word(word: &[Letter]) -> Result<()> {
    match word.first() {
        Some(first) if *first == Letter::unbarred(0) => {}
        _ => {
            return Err(DeltaError::MalformedPolyomino(
                "an area word starts with an unbarred 0".into(),
            ))
        }
    }
    for (i, pair) in word.windows(2).enumerate() {
        if pair[1].key() > pair[0].key() + 1 {
            return Err(DeltaError::MalformedPolyomino(format!(
                "letter {} at position {} jumps past the successor of {}",
                pair[1],
                i + 2,
                pair[0]
            )));
        }
    }
    Ok(())
}

/// A unit step of a polyomino boundary path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    North,
    East,
}

impl Dir {
    pub fn symbol(self) -> char {
        match self {
            Dir::North => 'N',
            Dir::East => 'E',
        }
    }
}

/// Renders a path as a string of `N`/`E`.
pub fn format_path(path: &[Dir]) -> String {
    path.iter().map(|d| d.symbol()).collect()
}

/// Parses a string of `N`/`E` (case-insensitive, whitespace ignored).
pub fn parse_path(text: &str) -> Result<Vec<Dir>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c.to_ascii_uppercase() {
            'N' => Ok(Dir::North),
            'E' => Ok(Dir::East),
            other => Err(DeltaError::MalformedPolyomino(format!(
                "unknown path step {other:?}"
            ))),
        })
        .collect()
}

/// The two decoration flavors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyFlavor {
    /// Decorated unbarred and barred rises; statistics (dinv, area).
    Star,
    /// Decorated green peaks and red valleys; statistics (area, bounce).
    Circ,
}

impl PolyFlavor {
    pub const ALL: [PolyFlavor; 2] = [PolyFlavor::Star, PolyFlavor::Circ];

    pub fn name(self) -> &'static str {
        match self {
            PolyFlavor::Star => "star",
            PolyFlavor::Circ => "circ",
        }
    }
}

impl fmt::Display for PolyFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyFlavor {
    type Err = DeltaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "star" => Ok(PolyFlavor::Star),
            "circ" => Ok(PolyFlavor::Circ),
            other => Err(DeltaError::FlavorMismatch {
                expected: "star or circ".into(),
                found: other.into(),
            }),
        }
    }
}

/// Decoration index sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolyDecorations {
    /// Decorated unbarred rises (1-based word positions).
    #[serde(default)]
    pub ur: Vec<usize>,
    /// Decorated barred rises (1-based word positions).
    #[serde(default)]
    pub br: Vec<usize>,
    /// Decorated green peaks (columns of the horizontal steps).
    #[serde(default)]
    pub gp: Vec<usize>,
    /// Decorated red valleys (rows of the vertical steps).
    #[serde(default)]
    pub rv: Vec<usize>,
}

impl PolyDecorations {
    pub fn star(ur: Vec<usize>, br: Vec<usize>) -> Self {
        Self {
            ur,
            br,
            ..Self::default()
        }
    }

    pub fn circ(gp: Vec<usize>, rv: Vec<usize>) -> Self {
        Self {
            gp,
            rv,
            ..Self::default()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.ur.is_empty() && self.br.is_empty() && self.gp.is_empty() && self.rv.is_empty()
    }
}

/// A reduced polyomino with decorations of one flavor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedPolyomino {
    word: Vec<Letter>,
    flavor: PolyFlavor,
    dec: PolyDecorations,
}

fn check_subset(name: &str, chosen: &mut [usize], allowed: &[usize]) -> Result<()> {
    chosen.sort_unstable();
    if chosen.windows(2).any(|w| w[0] == w[1]) {
        return Err(DeltaError::InvalidDecoration(format!(
            "{name} contains a repeated index"
        )));
    }
    if let Some(bad) = chosen.iter().find(|i| allowed.binary_search(i).is_err()) {
        return Err(DeltaError::InvalidDecoration(format!(
            "{name} index {bad} is not an admissible site"
        )));
    }
    Ok(())
}

impl ReducedPolyomino {
    /// Builds a polyomino from its area word, validating the word and the
    /// decorations against the flavor.
    pub fn new(word: Vec<Letter>, flavor: PolyFlavor, mut dec: PolyDecorations) -> Result<Self> {
        validate_word(&word)?;
        let plain = Self {
            word,
            flavor,
            dec: PolyDecorations::default(),
        };
        match flavor {
            PolyFlavor::Star => {
                if !dec.gp.is_empty() || !dec.rv.is_empty() {
                    return Err(DeltaError::InvalidDecoration(
                        "star polyominoes carry only rise decorations".into(),
                    ));
                }
                check_subset("ur", &mut dec.ur, &plain.unbarred_rises())?;
                check_subset("br", &mut dec.br, &plain.barred_rises())?;
            }
            PolyFlavor::Circ => {
                if !dec.ur.is_empty() || !dec.br.is_empty() {
                    return Err(DeltaError::InvalidDecoration(
                        "circ polyominoes carry only peak and valley decorations".into(),
                    ));
                }
                check_subset("gp", &mut dec.gp, &plain.green_peaks())?;
                check_subset("rv", &mut dec.rv, &plain.red_valleys())?;
            }
        }
        Ok(Self { dec, ..plain })
    }

    /// Undecorated polyomino.
    pub fn plain(word: Vec<Letter>, flavor: PolyFlavor) -> Result<Self> {
        Self::new(word, flavor, PolyDecorations::default())
    }

    /// Builds a polyomino from its red (upper) and green (lower) paths.
    pub fn from_paths(
        red: &[Dir],
        green: &[Dir],
        flavor: PolyFlavor,
        dec: PolyDecorations,
    ) -> Result<Self> {
        Self::new(paths_to_word(red, green)?, flavor, dec)
    }

    pub(crate) fn from_parts_unchecked(
        word: Vec<Letter>,
        flavor: PolyFlavor,
        dec: PolyDecorations,
    ) -> Self {
        Self { word, flavor, dec }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn flavor(&self) -> PolyFlavor {
        self.flavor
    }

    pub fn decorations(&self) -> &PolyDecorations {
        &self.dec
    }

    /// Same polyomino, other flavor, no decorations.
    pub fn undecorated(&self, flavor: PolyFlavor) -> Self {
        Self {
            word: self.word.clone(),
            flavor,
            dec: PolyDecorations::default(),
        }
    }

    /// Number of columns: unbarred letters other than the artificial `0`.
    pub fn width(&self) -> usize {
        self.word.iter().filter(|l| !l.barred).count() - 1
    }

    /// Number of rows: barred letters.
    pub fn height(&self) -> usize {
        self.word.iter().filter(|l| l.barred).count()
    }

    /// The upper boundary path.
    pub fn red_path(&self) -> Vec<Dir> {
        word_to_paths(&self.word).0
    }

    /// The lower boundary path.
    pub fn green_path(&self) -> Vec<Dir> {
        word_to_paths(&self.word).1
    }

    /// Positions `i >= 2` whose letter is unbarred and the successor of the
    /// previous one.
    pub fn unbarred_rises(&self) -> Vec<usize> {
        self.rises(false)
    }

    /// Positions `i >= 2` whose letter is barred and the successor of the
    /// previous one.
    pub fn barred_rises(&self) -> Vec<usize> {
        self.rises(true)
    }

    fn rises(&self, barred: bool) -> Vec<usize> {
        (1..self.word.len())
            .filter(|&i| self.word[i].barred == barred && self.word[i] == self.word[i - 1].succ())
            .map(|i| i + 1)
            .collect()
    }

    /// Columns of green horizontal steps that directly follow a green vertical
    /// step.
    pub fn green_peaks(&self) -> Vec<usize> {
        let green = self.green_path();
        let mut out = Vec::new();
        let mut x = 0;
        for (i, step) in green.iter().enumerate() {
            if *step == Dir::East {
                x += 1;
                if i > 0 && green[i - 1] == Dir::North {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Rows of red vertical steps that directly follow a red horizontal step,
    /// or that are the first red step.
    pub fn red_valleys(&self) -> Vec<usize> {
        let red = self.red_path();
        let mut out = Vec::new();
        let mut y = 0;
        for (i, step) in red.iter().enumerate() {
            if *step == Dir::North {
                y += 1;
                if i == 0 || red[i - 1] == Dir::East {
                    out.push(y);
                }
            }
        }
        out
    }

    fn ensure_flavor(&self, allowed: PolyFlavor) -> Result<()> {
        if self.flavor == allowed || self.dec.is_empty() {
            Ok(())
        } else {
            Err(DeltaError::FlavorMismatch {
                expected: allowed.name().into(),
                found: self.flavor.name().into(),
            })
        }
    }
}

/// Word → (red, green) paths.
///
/// Walking the word with a current level `d`: a letter of value `v < d`
/// first emits `d - v` silent steps (red east, green north). An unbarred
/// letter then emits (east, east). A barred letter emits (north, east) and
/// swallows the next letter when that letter is its successor, and (north,
/// north) otherwise. Trailing silent steps bring the level back to 0.
pub fn word_to_paths(word: &[Letter]) -> (Vec<Dir>, Vec<Dir>) {
    let mut red = Vec::new();
    let mut green = Vec::new();
    let mut level = 0u32;
    let mut i = 1;
    while i < word.len() {
        let letter = word[i];
        while level > letter.value {
            red.push(Dir::East);
            green.push(Dir::North);
            level -= 1;
        }
        if letter.barred {
            red.push(Dir::North);
            if word.get(i + 1) == Some(&letter.succ()) {
                green.push(Dir::East);
                level = letter.value + 1;
                i += 2;
            } else {
                green.push(Dir::North);
                level = letter.value;
                i += 1;
            }
        } else {
            red.push(Dir::East);
            green.push(Dir::East);
            level = letter.value;
            i += 1;
        }
    }
    while level > 0 {
        red.push(Dir::East);
        green.push(Dir::North);
        level -= 1;
    }
    (red, green)
}

/// (red, green) paths → word; the inverse of [`word_to_paths`].
pub fn paths_to_word(red: &[Dir], green: &[Dir]) -> Result<Vec<Letter>> {
    if red.len() != green.len() {
        return Err(DeltaError::MalformedPolyomino(format!(
            "red path has {} steps, green path {}",
            red.len(),
            green.len()
        )));
    }
    let count = |p: &[Dir], d: Dir| p.iter().filter(|&&s| s == d).count();
    if count(red, Dir::North) != count(green, Dir::North) {
        return Err(DeltaError::MalformedPolyomino(
            "red and green paths end at different points".into(),
        ));
    }
    let mut word = vec![Letter::unbarred(0)];
    let mut level: i64 = 0;
    for (&r, &g) in red.iter().zip(green) {
        let prev = level;
        level += i64::from(g == Dir::East) + i64::from(r == Dir::North) - 1;
        if level < 0 {
            return Err(DeltaError::MalformedPolyomino(
                "red path dips below the green path".into(),
            ));
        }
        if r == Dir::North {
            word.push(Letter::barred(prev as u32));
        }
        if g == Dir::East {
            word.push(Letter::unbarred(level as u32));
        }
    }
    Ok(word)
}

/// The area word (a copy of the canonical representation).
pub fn poly_area_word(p: &ReducedPolyomino) -> Vec<Letter> {
    p.word.clone()
}

fn value_sum(word: &[Letter]) -> u64 {
    word.iter().map(|l| u64::from(l.value)).sum()
}

/// Sum of the letter values, leaving out decorated rises.
pub fn poly_area(p: &ReducedPolyomino) -> Result<u64> {
    p.ensure_flavor(PolyFlavor::Star)?;
    let removed: u64 = p
        .dec
        .ur
        .iter()
        .chain(&p.dec.br)
        .map(|&i| u64::from(p.word[i - 1].value))
        .sum();
    Ok(value_sum(&p.word) - removed)
}

/// Pairs `i < j` with `w_i = succ(w_j)`; decorations play no role.
pub fn poly_dinv(p: &ReducedPolyomino) -> u64 {
    let w = &p.word;
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] == w[j].succ() {
                count += 1;
            }
        }
    }
    count
}

/// Bounce path labels projected onto columns and rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBounce {
    /// Label of each column `1..=m` (index `x - 1`); always unbarred.
    pub columns: Vec<Letter>,
    /// Label of each row `1..=n` (index `y - 1`); always barred.
    pub rows: Vec<Letter>,
    /// Labels in the order the bounce path visits its steps.
    pub word: Vec<Letter>,
}

impl PolyBounce {
    pub fn column(&self, x: usize) -> Letter {
        self.columns[x - 1]
    }

    pub fn row(&self, y: usize) -> Letter {
        self.rows[y - 1]
    }
}

/// The bounce path: it starts at the origin going east and turns north where
/// the green path's horizontal run at the current height ends; going north
/// it turns east where the red path leaves the current column. Its
/// successive runs carry the labels `0, 0̄, 1, 1̄, …`.
pub fn poly_bounce_word(p: &ReducedPolyomino) -> PolyBounce {
    let (red, green) = word_to_paths(&p.word);
    let width = p.width();
    let height = p.height();
    let mut red_top = vec![0usize; width + 1];
    let mut green_end = vec![0usize; height + 1];
    let (mut x, mut y) = (0usize, 0usize);
    for &s in &red {
        match s {
            Dir::North => y += 1,
            Dir::East => x += 1,
        }
        red_top[x] = red_top[x].max(y);
    }
    let (mut x, mut y) = (0usize, 0usize);
    for &s in &green {
        match s {
            Dir::North => y += 1,
            Dir::East => x += 1,
        }
        green_end[y] = green_end[y].max(x);
    }

    let mut columns = vec![Letter::unbarred(0); width];
    let mut rows = vec![Letter::barred(0); height];
    let mut word = Vec::with_capacity(width + height);
    let (mut bx, mut by, mut key) = (0usize, 0usize, 0u64);
    loop {
        let label = Letter::from_key(key);
        while bx < green_end[by] {
            bx += 1;
            columns[bx - 1] = label;
            word.push(label);
        }
        key += 1;
        if bx == width && by == height {
            break;
        }
        let label = Letter::from_key(key);
        while by < red_top[bx] {
            by += 1;
            rows[by - 1] = label;
            word.push(label);
        }
        key += 1;
        if bx == width && by == height {
            break;
        }
    }
    PolyBounce {
        columns,
        rows,
        word,
    }
}

/// Sum of bounce label values, leaving out the row label of each decorated
/// red valley and the column label of each decorated green peak.
pub fn poly_bounce(p: &ReducedPolyomino) -> Result<u64> {
    p.ensure_flavor(PolyFlavor::Circ)?;
    let b = poly_bounce_word(p);
    let removed: u64 = p
        .dec
        .gp
        .iter()
        .map(|&x| u64::from(b.column(x).value))
        .chain(p.dec.rv.iter().map(|&y| u64::from(b.row(y).value)))
        .sum();
    Ok(value_sum(&b.word) - removed)
}

/// The `r` statistic: unbarred `0`s of the area word (artificial one
/// included) for STAR, one plus the unbarred `0`s of the bounce word for
/// CIRC.
pub fn poly_r(p: &ReducedPolyomino) -> usize {
    match p.flavor {
        PolyFlavor::Star => p.word.iter().filter(|&&l| l == Letter::unbarred(0)).count(),
        PolyFlavor::Circ => {
            1 + poly_bounce_word(p)
                .columns
                .iter()
                .filter(|l| l.value == 0)
                .count()
        }
    }
}

/// The pair `(q-statistic, t-statistic)`: `(dinv, area)` for STAR and
/// `(area, bounce)` for CIRC.
pub fn poly_bistatistic(p: &ReducedPolyomino) -> Result<(u64, u64)> {
    match p.flavor {
        PolyFlavor::Star => Ok((poly_dinv(p), poly_area(p)?)),
        PolyFlavor::Circ => Ok((value_sum(&p.word), poly_bounce(p)?)),
    }
}

/// All area words with `width` unbarred letters after the artificial `0` and
/// `height` barred letters, in lexicographic order of alphabet keys.
pub fn rp_words(width: usize, height: usize) -> Vec<Vec<Letter>> {
    fn extend(
        word: &mut Vec<Letter>,
        unbarred_left: usize,
        barred_left: usize,
        out: &mut Vec<Vec<Letter>>,
    ) {
        if unbarred_left == 0 && barred_left == 0 {
            out.push(word.clone());
            return;
        }
        let top = word.last().expect("word is never empty").key() + 1;
        for key in 0..=top {
            let letter = Letter::from_key(key);
            let (u, b) = if letter.barred {
                if barred_left == 0 {
                    continue;
                }
                (unbarred_left, barred_left - 1)
            } else {
                if unbarred_left == 0 {
                    continue;
                }
                (unbarred_left - 1, barred_left)
            };
            word.push(letter);
            extend(word, u, b, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![Letter::unbarred(0)], width, height, &mut out);
    out
}

/// Every `width × height` polyomino of the flavor with r statistic `r_stat`
/// (any when `None`), `unbarred_marks` decorated unbarred rises / green peaks
/// and `barred_marks` decorated barred rises / red valleys. Ordered by word,
/// then by the two decoration sets in lexicographic order.
pub fn enumerate_rp(
    width: usize,
    r_stat: Option<usize>,
    height: usize,
    unbarred_marks: usize,
    barred_marks: usize,
    flavor: PolyFlavor,
) -> Vec<ReducedPolyomino> {
    let mut out = Vec::new();
    for word in rp_words(width, height) {
        let plain = ReducedPolyomino::from_parts_unchecked(word, flavor, PolyDecorations::default());
        if r_stat.is_some_and(|r| poly_r(&plain) != r) {
            continue;
        }
        let (first, second) = match flavor {
            PolyFlavor::Star => (plain.unbarred_rises(), plain.barred_rises()),
            PolyFlavor::Circ => (plain.green_peaks(), plain.red_valleys()),
        };
        for first_marks in first.iter().copied().combinations(unbarred_marks) {
            for second_marks in second.iter().copied().combinations(barred_marks) {
                let dec = match flavor {
                    PolyFlavor::Star => PolyDecorations::star(first_marks.clone(), second_marks),
                    PolyFlavor::Circ => PolyDecorations::circ(first_marks.clone(), second_marks),
                };
                out.push(ReducedPolyomino::from_parts_unchecked(
                    plain.word.clone(),
                    flavor,
                    dec,
                ));
            }
        }
    }
    out
}

/// `Σ q^{dinv} t^{area}` (STAR) or `Σ q^{area} t^{bounce}` (CIRC) over
/// [`enumerate_rp`].
pub fn rp_qt(
    width: usize,
    r_stat: usize,
    height: usize,
    unbarred_marks: usize,
    barred_marks: usize,
    flavor: PolyFlavor,
) -> QtPoly {
    let mut total = QtPoly::zero();
    for poly in enumerate_rp(width, Some(r_stat), height, unbarred_marks, barred_marks, flavor) {
        let (qe, te) = poly_bistatistic(&poly).expect("enumerated objects match their flavor");
        total.add_monomial(qe as u32, te as u32);
    }
    total
}
