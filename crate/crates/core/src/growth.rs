//! Tile placement on boundaries of the region between the base boundary and
//! the right boundary of `E(w)`.
//!
//! A boundary is a permutation `u` read from `C^0` to `C^n`; the vertex after
//! `j` edges is the prefix set `{u(1), ..., u(j)}`. A tile with labels
//! `a_1 < ... < a_k` and base `S` sits on the boundary when the segment
//! `u(p+1..=p+k)` is exactly `a_1, ..., a_k` and `S` is the prefix set of
//! length `p`. Placing it reverses that segment.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use crate::labelset::LabelSet;
use crate::permutations::Permutation;

/// `(labels, base)`.
pub(crate) type RawTile = (LabelSet, LabelSet);

pub(crate) fn prefix_set(u: &Permutation, len: usize) -> LabelSet {
    u.values()[..len].iter().copied().collect()
}

/// Positions of `w` indexed by value: `pos[v] = w^{-1}(v)`.
pub(crate) fn positions(w: &Permutation) -> Vec<usize> {
    let mut pos = vec![0; w.rank() + 1];
    for (i, &v) in w.values().iter().enumerate() {
        pos[v] = i + 1;
    }
    pos
}

/// Tiles of up to `max_k` labels placeable on `u` whose label pairs are all
/// inversions of the target. Yields `(start, k, tile)` with 1-indexed `start`.
pub(crate) fn placements(
    u: &Permutation,
    target_pos: &[usize],
    max_k: usize,
) -> Vec<(usize, usize, RawTile)> {
    let v = u.values();
    let n = v.len();
    let mut out = Vec::new();
    let mut prefix = LabelSet::EMPTY;
    for p in 0..n {
        let mut labels = LabelSet::singleton(v[p]);
        for q in p + 1..n.min(p + max_k) {
            // extend the increasing run; every new label must be inverted
            // against all labels already in the run
            if v[q] < v[q - 1] || !v[p..q].iter().all(|&x| target_pos[x] > target_pos[v[q]]) {
                break;
            }
            labels = labels.with(v[q]);
            out.push((p + 1, q - p + 1, (labels, prefix)));
        }
        prefix = prefix.with(v[p]);
    }
    out
}

/// All tile sets (sorted) that fill the region between `start` and `target`
/// using tiles with at most `max_k` labels.
pub(crate) fn enumerate(start: &Permutation, target: &Permutation, max_k: usize) -> Vec<Vec<RawTile>> {
    let pos = positions(target);
    let mut memo = HashMap::new();
    let result = fill(start, target, &pos, max_k, &mut memo);
    let mut all: Vec<Vec<RawTile>> = result.iter().cloned().collect();
    all.sort();
    all
}

type Memo = HashMap<Permutation, Rc<Vec<Vec<RawTile>>>>;

fn fill(
    u: &Permutation,
    target: &Permutation,
    pos: &[usize],
    max_k: usize,
    memo: &mut Memo,
) -> Rc<Vec<Vec<RawTile>>> {
    if let Some(hit) = memo.get(u) {
        return hit.clone();
    }
    let result = if u == target {
        vec![Vec::new()]
    } else {
        let mut seen: HashSet<Vec<RawTile>> = HashSet::new();
        for (start, k, tile) in placements(u, pos, max_k) {
            let mut next = u.clone();
            next.reverse_segment(start, k);
            for rest in fill(&next, target, pos, max_k, memo).iter() {
                let mut tiles = rest.clone();
                let at = tiles.binary_search(&tile).unwrap_or_else(|e| e);
                tiles.insert(at, tile);
                seen.insert(tiles);
            }
        }
        seen.into_iter().collect()
    };
    let result = Rc::new(result);
    memo.insert(u.clone(), result.clone());
    result
}
