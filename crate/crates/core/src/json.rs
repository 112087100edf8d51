//! JSON interchange for decorated Dyck paths and polyominoes.
//!
//! ```text
//! {"kind":"dyck","flavor":"ddd|ddb_star|ddb_triangle","area_word":[…],
//!  "drise":[…],"dpeak":[…],"zval":[…],"labels":[…]}      (labels optional)
//! {"kind":"polyomino","flavor":"star|circ","word":[[v,barred],…],
//!  "dec":{"ur":[…],"br":[…],"gp":[…],"rv":[…]}}
//! ```
//!
//! Parsing validates the object; serializing a parsed object reproduces the
//! canonical text exactly.

use serde::{Deserialize, Serialize};

use crate::dyck::{DecoratedDyckPath, DyckFlavor, DyckPath, LabelledDyckPath};
use crate::error::{DeltaError, Result};
use crate::polyomino::{Letter, PolyDecorations, PolyFlavor, ReducedPolyomino};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Wire {
    Dyck {
        flavor: DyckFlavor,
        area_word: Vec<u32>,
        #[serde(default)]
        drise: Vec<usize>,
        #[serde(default)]
        dpeak: Vec<usize>,
        #[serde(default)]
        zval: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<u32>>,
    },
    Polyomino {
        flavor: PolyFlavor,
        word: Vec<Letter>,
        #[serde(default)]
        dec: PolyDecorations,
    },
}

/// A parsed and validated object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaObject {
    Dyck(DecoratedDyckPath),
    /// A DDD object together with a labelling of its rows (0 = blank).
    Labelled(DecoratedDyckPath, LabelledDyckPath),
    Polyomino(ReducedPolyomino),
}

impl DeltaObject {
    /// Parses and validates one JSON object.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: Wire = serde_json::from_str(text)?;
        match wire {
            Wire::Dyck {
                flavor,
                area_word,
                drise,
                dpeak,
                zval,
                labels,
            } => {
                let path = DyckPath::new(area_word)?;
                let d = DecoratedDyckPath::new(path.clone(), drise.clone(), dpeak, zval, flavor)?;
                match labels {
                    None => Ok(DeltaObject::Dyck(d)),
                    Some(labels) => {
                        let l = LabelledDyckPath::new(path, labels, drise)?;
                        Ok(DeltaObject::Labelled(d, l))
                    }
                }
            }
            Wire::Polyomino { flavor, word, dec } => {
                Ok(DeltaObject::Polyomino(ReducedPolyomino::new(word, flavor, dec)?))
            }
        }
    }

    /// Canonical single-line JSON.
    pub fn to_json(&self) -> String {
        match self {
            DeltaObject::Dyck(d) => dyck_to_json(d),
            DeltaObject::Labelled(d, l) => labelled_to_json(d, l),
            DeltaObject::Polyomino(p) => polyomino_to_json(p),
        }
    }

    /// The decorated path, if this is a Dyck object.
    pub fn into_dyck(self) -> Result<DecoratedDyckPath> {
        match self {
            DeltaObject::Dyck(d) | DeltaObject::Labelled(d, _) => Ok(d),
            DeltaObject::Polyomino(p) => Err(DeltaError::FlavorMismatch {
                expected: "dyck".into(),
                found: format!("polyomino/{}", p.flavor()),
            }),
        }
    }

    /// The polyomino, if this is a polyomino object.
    pub fn into_polyomino(self) -> Result<ReducedPolyomino> {
        match self {
            DeltaObject::Polyomino(p) => Ok(p),
            DeltaObject::Dyck(d) | DeltaObject::Labelled(d, _) => Err(DeltaError::FlavorMismatch {
                expected: "polyomino".into(),
                found: format!("dyck/{}", d.flavor()),
            }),
        }
    }
}

fn dyck_wire(d: &DecoratedDyckPath, labels: Option<Vec<u32>>) -> Wire {
    Wire::Dyck {
        flavor: d.flavor(),
        area_word: d.area_word().to_vec(),
        drise: d.drise().to_vec(),
        dpeak: d.dpeak().to_vec(),
        zval: d.zval().to_vec(),
        labels,
    }
}

fn encode(wire: &Wire) -> String {
    serde_json::to_string(wire).expect("wire objects serialize")
}

/// Canonical JSON of a decorated path.
pub fn dyck_to_json(d: &DecoratedDyckPath) -> String {
    encode(&dyck_wire(d, None))
}

/// Canonical JSON of a decorated path with row labels.
pub fn labelled_to_json(d: &DecoratedDyckPath, l: &LabelledDyckPath) -> String {
    encode(&dyck_wire(d, Some(l.labels().to_vec())))
}

/// JSON of a partially labelled path: blank rows are listed as zero valleys.
pub fn pld_to_json(l: &LabelledDyckPath) -> String {
    let blanks: Vec<usize> = (1..=l.labels().len())
        .filter(|&row| l.labels()[row - 1] == 0)
        .collect();
    encode(&Wire::Dyck {
        flavor: DyckFlavor::Ddd,
        area_word: l.path().area_word().to_vec(),
        drise: l.drise().to_vec(),
        dpeak: Vec::new(),
        zval: blanks,
        labels: Some(l.labels().to_vec()),
    })
}

/// Canonical JSON of a polyomino.
pub fn polyomino_to_json(p: &ReducedPolyomino) -> String {
    encode(&Wire::Polyomino {
        flavor: p.flavor(),
        word: p.word().to_vec(),
        dec: p.decorations().clone(),
    })
}
