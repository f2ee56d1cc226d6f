//! JSON documents for rhombic and zonotopal tilings.
//!
//! ```text
//! {"n":7,"w":[7,4,5,6,3,1,2],"tiles":[{"pair":[3,4],"base":[1,2]},...]}
//! {"n":8,"w":[...],"tiles":[{"labels":[2,5,7],"base":[1]},...]}
//! ```
//!
//! Arrays are ascending and tiles appear in canonical `(pair, base)` order,
//! so serialization is byte-stable.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bott_samelson::QPolynomial;
use crate::error::{Error, Result};
use crate::labelset::LabelSet;
use crate::permutations::Permutation;
use crate::tilings::{RhombicTiling, Rhombus};
use crate::zonotopal::{ZonoTile, ZonoTiling};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RhombicDoc {
    n: usize,
    w: Vec<usize>,
    tiles: Vec<PairTile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairTile {
    pair: [usize; 2],
    base: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ZonoDoc {
    n: usize,
    w: Vec<usize>,
    tiles: Vec<LabelTile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LabelTile {
    labels: Vec<usize>,
    base: Vec<usize>,
}

/// A parsed document of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyTiling {
    Rhombic(RhombicTiling),
    Zonotopal(ZonoTiling),
}

impl AnyTiling {
    pub fn to_zonotopal(&self) -> ZonoTiling {
        match self {
            AnyTiling::Rhombic(t) => ZonoTiling::from(t),
            AnyTiling::Zonotopal(z) => z.clone(),
        }
    }

    /// The rhombic tiling, also when a zonotopal document uses only rhombi.
    pub fn as_rhombic(&self) -> Option<RhombicTiling> {
        match self {
            AnyTiling::Rhombic(t) => Some(t.clone()),
            AnyTiling::Zonotopal(z) => z.to_rhombic(),
        }
    }
}

pub fn rhombic_to_string(t: &RhombicTiling) -> String {
    let doc = RhombicDoc {
        n: t.rank(),
        w: t.permutation().values().to_vec(),
        tiles: t
            .tiles()
            .iter()
            .map(|r| PairTile {
                pair: [r.a, r.b],
                base: r.base.to_vec(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain structs serialize")
}

pub fn zonotopal_to_string(z: &ZonoTiling) -> String {
    let doc = ZonoDoc {
        n: z.rank(),
        w: z.permutation().values().to_vec(),
        tiles: z
            .tiles()
            .iter()
            .map(|t| LabelTile {
                labels: t.labels.to_vec(),
                base: t.base.to_vec(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain structs serialize")
}

pub fn polynomial_to_string(p: &QPolynomial) -> String {
    serde_json::to_string(p.coeffs()).expect("integers serialize")
}

/// Hex prefix of the SHA-256 of a canonical document, used as a short key.
pub fn digest(canonical: &str) -> String {
    let hash = Sha256::digest(canonical.as_bytes());
    hex::encode(&hash[..6])
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn header(n: usize, w: Vec<usize>) -> Result<Permutation> {
    if w.len() != n {
        return Err(Error::Parse(format!("n = {n} but w has {} entries", w.len())));
    }
    Permutation::new(w)
}

fn label_set(labels: &[usize], n: usize) -> Result<LabelSet> {
    if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l > n) {
        return Err(Error::Parse(format!("label {bad} outside 1..={n}")));
    }
    let set = LabelSet::from_labels(labels.iter().copied());
    if set.len() != labels.len() {
        return Err(Error::Parse(format!("repeated label in {labels:?}")));
    }
    Ok(set)
}

/// Parses and validates a rhombic tiling document.
pub fn parse_rhombic(s: &str) -> Result<RhombicTiling> {
    let doc: RhombicDoc = serde_json::from_str(s).map_err(parse_error)?;
    rhombic_from_doc(doc)
}

fn rhombic_from_doc(doc: RhombicDoc) -> Result<RhombicTiling> {
    let w = header(doc.n, doc.w)?;
    let mut tiles = BTreeSet::new();
    for tile in &doc.tiles {
        let pair = label_set(&tile.pair, doc.n)?;
        if pair.len() != 2 {
            return Err(Error::Parse(format!("degenerate pair {:?}", tile.pair)));
        }
        let r = Rhombus::new(tile.pair[0], tile.pair[1], label_set(&tile.base, doc.n)?);
        if !tiles.insert(r) {
            return Err(Error::Parse(format!("duplicate tile {:?}", tile.pair)));
        }
    }
    RhombicTiling::new(w, tiles)
}

/// Parses and validates a zonotopal tiling document.
pub fn parse_zonotopal(s: &str) -> Result<ZonoTiling> {
    let doc: ZonoDoc = serde_json::from_str(s).map_err(parse_error)?;
    zono_from_doc(doc)
}

fn zono_from_doc(doc: ZonoDoc) -> Result<ZonoTiling> {
    let w = header(doc.n, doc.w)?;
    let mut tiles = BTreeSet::new();
    for tile in &doc.tiles {
        let t = ZonoTile::new(label_set(&tile.labels, doc.n)?, label_set(&tile.base, doc.n)?);
        if !tiles.insert(t) {
            return Err(Error::Parse(format!("duplicate tile {:?}", tile.labels)));
        }
    }
    ZonoTiling::new(w, tiles)
}

/// Parses either document kind; tile keys decide which.
pub fn parse_any(s: &str) -> Result<AnyTiling> {
    let value: serde_json::Value = serde_json::from_str(s).map_err(parse_error)?;
    let zonotopal = value
        .get("tiles")
        .and_then(|t| t.as_array())
        .and_then(|t| t.first())
        .is_some_and(|t| t.get("labels").is_some());
    if zonotopal {
        let doc: ZonoDoc = serde_json::from_value(value).map_err(parse_error)?;
        zono_from_doc(doc).map(AnyTiling::Zonotopal)
    } else {
        let doc: RhombicDoc = serde_json::from_value(value).map_err(parse_error)?;
        rhombic_from_doc(doc).map(AnyTiling::Rhombic)
    }
}
