//! Rhombic tilings of the Elnitsky polygon `E(w)`.
//!
//! A tiling is stored as its set of rhombi, each given by the pair of edge
//! labels it carries and the label set of its bottom vertex. Vertices are
//! label sets; a vertex's dimension is its size. Commutation-equivalent
//! reduced words grow identical tile sets, so the tile set is the canonical
//! form of a commutation class.

use std::collections::{BTreeSet, HashSet};

use crate::error::{length_guard, Error, Result};
use crate::growth::{self, prefix_set};
use crate::labelset::LabelSet;
use crate::permutations::{Permutation, Word};

/// A unit rhombus with edge labels `a < b` and bottom vertex `base`.
///
/// Its vertices are `base`, `base ∪ {a}`, `base ∪ {b}`, `base ∪ {a, b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rhombus {
    pub a: usize,
    pub b: usize,
    pub base: LabelSet,
}

impl Rhombus {
    /// Orders the pair; does not check disjointness from `base`.
    pub fn new(x: usize, y: usize, base: LabelSet) -> Self {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        Rhombus { a, b, base }
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn labels(&self) -> LabelSet {
        LabelSet::from_labels([self.a, self.b])
    }

    pub fn top(&self) -> LabelSet {
        self.base.with(self.a).with(self.b)
    }

    pub fn vertices(&self) -> [LabelSet; 4] {
        [self.base, self.base.with(self.a), self.base.with(self.b), self.top()]
    }

    pub fn edges(&self) -> [Edge; 4] {
        [
            Edge::new(self.base, self.a),
            Edge::new(self.base, self.b),
            Edge::new(self.base.with(self.a), self.b),
            Edge::new(self.base.with(self.b), self.a),
        ]
    }
}

/// A unit edge from `tail` to `tail ∪ {label}`, parallel to polygon side `label`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: LabelSet,
    pub label: usize,
}

impl Edge {
    pub fn new(tail: LabelSet, label: usize) -> Self {
        debug_assert!(!tail.contains(label));
        Edge { tail, label }
    }

    pub fn head(&self) -> LabelSet {
        self.tail.with(self.label)
    }
}

/// Labels of the polygon vertices: `C^0..C^n` on the base side and
/// `G_1..G_{n-1}` on the right side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryVertex {
    Base(usize),
    Right(usize),
}

/// Boundary vertices of `E(w)` with their label sets, `C^0, ..., C^n`
/// followed by `G_1, ..., G_{n-1}`.
pub fn boundary_vertices(w: &Permutation) -> Vec<(BoundaryVertex, LabelSet)> {
    let n = w.rank();
    let mut out: Vec<_> = (0..=n)
        .map(|j| (BoundaryVertex::Base(j), LabelSet::prefix(j)))
        .collect();
    out.extend((1..n).map(|j| (BoundaryVertex::Right(j), prefix_set(w, j))));
    out
}

/// The polygon sides: `1..n` on the base path and `w(1)..w(n)` on the right path.
pub fn boundary_edges(w: &Permutation) -> Vec<Edge> {
    let n = w.rank();
    let mut out: Vec<_> = (1..=n).map(|j| Edge::new(LabelSet::prefix(j - 1), j)).collect();
    out.extend((1..=n).map(|j| Edge::new(prefix_set(w, j - 1), w.at(j))));
    out
}

/// A boundary path `B_k`, read from `C^0` to `C^n` as a sequence of edge
/// labels. The base boundary is the identity; the right side of `E(w)` is `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Boundary {
    word_order: Permutation,
}

impl Boundary {
    pub fn base(n: usize) -> Self {
        Boundary {
            word_order: Permutation::identity(n),
        }
    }

    pub fn word_order(&self) -> &Permutation {
        &self.word_order
    }

    /// The vertex after `j` edges.
    pub fn vertex(&self, j: usize) -> LabelSet {
        prefix_set(&self.word_order, j)
    }

    /// The rhombus a letter `i` places on this boundary, if `u(i) < u(i+1)`.
    pub fn rhombus_at(&self, i: usize) -> Option<Rhombus> {
        let u = &self.word_order;
        if i == 0 || i >= u.rank() || u.has_descent(i) {
            return None;
        }
        Some(Rhombus::new(u.at(i), u.at(i + 1), self.vertex(i - 1)))
    }

    pub fn advance(&mut self, i: usize) {
        self.word_order.swap_in_place(i);
    }
}

/// A rhombic tiling of `E(w)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RhombicTiling {
    w: Permutation,
    tiles: BTreeSet<Rhombus>,
}

impl RhombicTiling {
    /// Builds a tiling without validation; see [`RhombicTiling::check`].
    pub fn from_tiles(w: Permutation, tiles: impl IntoIterator<Item = Rhombus>) -> Self {
        RhombicTiling {
            w,
            tiles: tiles.into_iter().collect(),
        }
    }

    /// Builds and validates.
    pub fn new(w: Permutation, tiles: impl IntoIterator<Item = Rhombus>) -> Result<Self> {
        let t = Self::from_tiles(w, tiles);
        t.check()?;
        Ok(t)
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn rank(&self) -> usize {
        self.w.rank()
    }

    /// Tiles in canonical `(pair, base)` order.
    pub fn tiles(&self) -> &BTreeSet<Rhombus> {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn contains(&self, r: &Rhombus) -> bool {
        self.tiles.contains(r)
    }

    /// Index of a tile in canonical order.
    pub fn index_of(&self, r: &Rhombus) -> Option<usize> {
        self.tiles.iter().position(|t| t == r)
    }

    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// Ok iff the pairs are exactly the inversions of `w`, each once, and a
    /// complete peeling sequence exists.
    pub fn check(&self) -> Result<()> {
        let n = self.rank();
        let inversions = self.w.inversions();
        let mut pairs = HashSet::new();
        for t in &self.tiles {
            if t.a == 0 || t.b > n || t.a == t.b {
                return Err(invalid(format!("tile pair ({}, {}) out of range", t.a, t.b)));
            }
            if t.base.max().is_some_and(|m| m > n) {
                return Err(invalid(format!("tile base {:?} out of range", t.base)));
            }
            if t.base.contains(t.a) || t.base.contains(t.b) {
                return Err(invalid(format!(
                    "base {:?} meets pair ({}, {})",
                    t.base, t.a, t.b
                )));
            }
            if !inversions.contains(t.a, t.b) {
                return Err(invalid(format!("pair ({}, {}) is not an inversion", t.a, t.b)));
            }
            if !pairs.insert(t.pair()) {
                return Err(invalid(format!("pair ({}, {}) repeated", t.a, t.b)));
            }
        }
        if pairs.len() != inversions.len() {
            return Err(invalid(format!(
                "{} tiles for {} inversions",
                pairs.len(),
                inversions.len()
            )));
        }
        // Pairs are unique, so the boundary alone determines which tiles
        // have been peeled; search over boundaries.
        let lookup: HashSet<Rhombus> = self.tiles.iter().copied().collect();
        let mut visited = HashSet::new();
        let mut stack = vec![Boundary::base(n)];
        while let Some(b) = stack.pop() {
            if b.word_order == self.w {
                return Ok(());
            }
            for i in 1..n {
                if let Some(r) = b.rhombus_at(i) {
                    if lookup.contains(&r) {
                        let mut next = b.clone();
                        next.advance(i);
                        if visited.insert(next.word_order.clone()) {
                            stack.push(next);
                        }
                    }
                }
            }
        }
        Err(invalid("no complete peeling order".into()))
    }

    /// All tile edges together with the polygon sides.
    pub fn edges(&self) -> BTreeSet<Edge> {
        let mut out: BTreeSet<Edge> = boundary_edges(&self.w).into_iter().collect();
        for t in &self.tiles {
            out.extend(t.edges());
        }
        out
    }

    /// All tile vertices together with the polygon vertices.
    pub fn vertices(&self) -> BTreeSet<LabelSet> {
        let mut out: BTreeSet<LabelSet> =
            boundary_vertices(&self.w).into_iter().map(|(_, s)| s).collect();
        for t in &self.tiles {
            out.extend(t.vertices());
        }
        out
    }

    /// Vertices not on the polygon boundary.
    pub fn interior_vertices(&self) -> BTreeSet<LabelSet> {
        let boundary: HashSet<LabelSet> =
            boundary_vertices(&self.w).into_iter().map(|(_, s)| s).collect();
        self.vertices()
            .into_iter()
            .filter(|v| !boundary.contains(v))
            .collect()
    }

    /// The peeling word with smallest-letter tie-break.
    pub fn to_word(&self) -> Result<Word> {
        let n = self.rank();
        let mut remaining: HashSet<Rhombus> = self.tiles.iter().copied().collect();
        let mut boundary = Boundary::base(n);
        let mut letters = Vec::with_capacity(self.tiles.len());
        while !remaining.is_empty() {
            let i = (1..n)
                .find(|&i| boundary.rhombus_at(i).is_some_and(|r| remaining.contains(&r)))
                .ok_or_else(|| invalid("no peelable tile on the current boundary".into()))?;
            remaining.remove(&boundary.rhombus_at(i).unwrap());
            boundary.advance(i);
            letters.push(i);
        }
        if boundary.word_order != self.w {
            return Err(invalid("peeling does not end on the right boundary".into()));
        }
        Ok(Word::from_parts(letters, n))
    }

    /// Every peeling sequence, i.e. the whole commutation class.
    pub fn all_words(&self) -> Result<BTreeSet<Word>> {
        length_guard(self.tiles.len())?;
        self.check()?;
        let n = self.rank();
        let mut remaining: HashSet<Rhombus> = self.tiles.iter().copied().collect();
        let mut out = BTreeSet::new();
        let mut letters = Vec::new();
        peel_all(&mut Boundary::base(n), &mut remaining, &mut letters, n, &mut out);
        Ok(out)
    }
}

fn peel_all(
    boundary: &mut Boundary,
    remaining: &mut HashSet<Rhombus>,
    letters: &mut Vec<usize>,
    n: usize,
    out: &mut BTreeSet<Word>,
) {
    if remaining.is_empty() {
        out.insert(Word::from_parts(letters.clone(), n));
        return;
    }
    for i in 1..n {
        if let Some(r) = boundary.rhombus_at(i) {
            if remaining.remove(&r) {
                boundary.advance(i);
                letters.push(i);
                peel_all(boundary, remaining, letters, n, out);
                letters.pop();
                boundary.advance(i);
                remaining.insert(r);
            }
        }
    }
}

fn invalid(reason: String) -> Error {
    Error::InvalidTiling(reason)
}

/// Grows the tiling of a reduced word, one rhombus per letter.
pub fn word_to_tiling(word: &Word) -> Result<RhombicTiling> {
    let n = word.rank();
    let mut boundary = Boundary::base(n);
    let mut tiles = BTreeSet::new();
    for (k, &i) in word.letters().iter().enumerate() {
        let r = boundary
            .rhombus_at(i)
            .ok_or(Error::NotReduced { position: k + 1 })?;
        tiles.insert(r);
        boundary.advance(i);
    }
    Ok(RhombicTiling {
        w: boundary.word_order,
        tiles,
    })
}

pub fn tiling_to_word(t: &RhombicTiling) -> Result<Word> {
    t.to_word()
}

/// All rhombic tilings of `E(w)` in canonical order.
pub fn enumerate_rhombic(w: &Permutation) -> Result<Vec<RhombicTiling>> {
    length_guard(w.length())?;
    let n = w.rank();
    Ok(growth::enumerate(&Permutation::identity(n), w, 2)
        .into_iter()
        .map(|tiles| RhombicTiling {
            w: w.clone(),
            tiles: tiles
                .into_iter()
                .map(|(labels, base)| {
                    let mut it = labels.iter();
                    Rhombus::new(it.next().unwrap(), it.next().unwrap(), base)
                })
                .collect(),
        })
        .collect())
}
