//! Zonotopal tilings of `E(w)`: tilings by unit-sided centrally symmetric
//! `2k`-gons, ordered by reverse inclusion of edge sets.
//!
//! A `2k`-gon tile is stored as its label set `a_1 < ... < a_k` and bottom
//! vertex. Its boundary is the lower path `S, S+a_1, S+a_1+a_2, ...` and the
//! upper path `S, S+a_k, S+a_k+a_{k-1}, ...`, meeting at `S ∪ L`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::error::{length_guard, Error, Result, MAX_ZONOTOPAL_RANK};
use crate::growth::{self, positions};
use crate::labelset::LabelSet;
use crate::permutations::Permutation;
use crate::tilings::{boundary_edges, enumerate_rhombic, Edge, RhombicTiling, Rhombus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZonoTile {
    pub labels: LabelSet,
    pub base: LabelSet,
}

impl ZonoTile {
    pub fn new(labels: LabelSet, base: LabelSet) -> Self {
        ZonoTile { labels, base }
    }

    /// Half the number of sides.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn top(&self) -> LabelSet {
        self.base.union(self.labels)
    }

    /// Corners in cyclic order: up the lower path, then down the upper path.
    pub fn corners(&self) -> Vec<LabelSet> {
        let labels = self.labels.to_vec();
        let k = labels.len();
        let mut out = Vec::with_capacity(2 * k);
        let mut v = self.base;
        out.push(v);
        for &l in &labels {
            v = v.with(l);
            out.push(v);
        }
        for &l in &labels[..k.saturating_sub(1)] {
            v = v.without(l);
            out.push(v);
        }
        out
    }

    pub fn edges(&self) -> Vec<Edge> {
        let labels = self.labels.to_vec();
        let mut out = Vec::with_capacity(2 * labels.len());
        let mut lower = self.base;
        for &l in &labels {
            out.push(Edge::new(lower, l));
            lower = lower.with(l);
        }
        let mut upper = self.base;
        for &l in labels.iter().rev() {
            out.push(Edge::new(upper, l));
            upper = upper.with(l);
        }
        out
    }
}

impl From<Rhombus> for ZonoTile {
    fn from(r: Rhombus) -> Self {
        ZonoTile::new(r.labels(), r.base)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZonoTiling {
    w: Permutation,
    tiles: BTreeSet<ZonoTile>,
}

impl ZonoTiling {
    pub fn from_tiles(w: Permutation, tiles: impl IntoIterator<Item = ZonoTile>) -> Self {
        ZonoTiling {
            w,
            tiles: tiles.into_iter().collect(),
        }
    }

    pub fn new(w: Permutation, tiles: impl IntoIterator<Item = ZonoTile>) -> Result<Self> {
        let z = Self::from_tiles(w, tiles);
        z.check()?;
        Ok(z)
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn rank(&self) -> usize {
        self.w.rank()
    }

    pub fn tiles(&self) -> &BTreeSet<ZonoTile> {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn is_rhombic(&self) -> bool {
        self.tiles.iter().all(|t| t.size() == 2)
    }

    pub fn to_rhombic(&self) -> Option<RhombicTiling> {
        self.is_rhombic().then(|| {
            RhombicTiling::from_tiles(
                self.w.clone(),
                self.tiles.iter().map(|t| {
                    let mut it = t.labels.iter();
                    Rhombus::new(it.next().unwrap(), it.next().unwrap(), t.base)
                }),
            )
        })
    }

    /// Number of tiles with `k` labels (`2k` sides), keyed by `k`.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for t in &self.tiles {
            *out.entry(t.size()).or_insert(0) += 1;
        }
        out
    }

    /// Tile edges together with the polygon sides.
    pub fn edges(&self) -> BTreeSet<Edge> {
        let mut out: BTreeSet<Edge> = boundary_edges(&self.w).into_iter().collect();
        for t in &self.tiles {
            out.extend(t.edges());
        }
        out
    }

    pub fn vertices(&self) -> BTreeSet<LabelSet> {
        let mut out = BTreeSet::new();
        for e in self.edges() {
            out.insert(e.tail);
            out.insert(e.head());
        }
        out
    }

    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// Ok iff every inversion of `w` lies in exactly one tile, every pair
    /// inside a tile is an inversion, and a complete growth sequence exists.
    pub fn check(&self) -> Result<()> {
        let n = self.rank();
        let inversions = self.w.inversions();
        let mut covered = HashSet::new();
        for t in &self.tiles {
            if t.size() < 2 {
                return Err(invalid(format!("tile {:?} has fewer than two labels", t.labels)));
            }
            if t.labels.max().is_some_and(|m| m > n) || t.base.max().is_some_and(|m| m > n) {
                return Err(invalid(format!("tile {:?}/{:?} out of range", t.labels, t.base)));
            }
            if !t.labels.is_disjoint(t.base) {
                return Err(invalid(format!("base {:?} meets labels {:?}", t.base, t.labels)));
            }
            let labels = t.labels.to_vec();
            for (i, &a) in labels.iter().enumerate() {
                for &b in &labels[i + 1..] {
                    if !inversions.contains(a, b) {
                        return Err(invalid(format!("pair ({a}, {b}) is not an inversion")));
                    }
                    if !covered.insert((a, b)) {
                        return Err(invalid(format!("pair ({a}, {b}) covered twice")));
                    }
                }
            }
        }
        if covered.len() != inversions.len() {
            return Err(invalid(format!(
                "tiles cover {} of {} inversions",
                covered.len(),
                inversions.len()
            )));
        }
        let lookup: HashSet<ZonoTile> = self.tiles.iter().copied().collect();
        let pos = positions(&self.w);
        let mut visited = HashSet::new();
        let mut stack = vec![Permutation::identity(n)];
        while let Some(u) = stack.pop() {
            if u == self.w {
                return Ok(());
            }
            for (start, k, (labels, base)) in growth::placements(&u, &pos, n) {
                if lookup.contains(&ZonoTile::new(labels, base)) {
                    let mut next = u.clone();
                    next.reverse_segment(start, k);
                    if visited.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
        Err(invalid("no complete growth sequence".into()))
    }
}

impl From<&RhombicTiling> for ZonoTiling {
    fn from(t: &RhombicTiling) -> Self {
        ZonoTiling {
            w: t.permutation().clone(),
            tiles: t.tiles().iter().map(|&r| r.into()).collect(),
        }
    }
}

fn invalid(reason: String) -> Error {
    Error::InvalidTiling(reason)
}

fn zonotopal_guard(w: &Permutation) -> Result<()> {
    length_guard(w.length())?;
    if w.rank() > MAX_ZONOTOPAL_RANK {
        return Err(Error::GuardExceeded {
            what: "rank",
            value: w.rank(),
            limit: MAX_ZONOTOPAL_RANK,
        });
    }
    Ok(())
}

/// All zonotopal tilings of `E(w)` in canonical order.
pub fn enumerate_zonotopal(w: &Permutation) -> Result<Vec<ZonoTiling>> {
    zonotopal_guard(w)?;
    let n = w.rank();
    Ok(growth::enumerate(&Permutation::identity(n), w, n)
        .into_iter()
        .map(|tiles| ZonoTiling {
            w: w.clone(),
            tiles: tiles.into_iter().map(|(l, b)| ZonoTile::new(l, b)).collect(),
        })
        .collect())
}

/// `z1 <= z2` iff `edges(z1) ⊇ edges(z2)`.
pub fn zono_leq(z1: &ZonoTiling, z2: &ZonoTiling) -> Result<bool> {
    if z1.w != z2.w {
        return Err(Error::RankMismatch {
            left: z1.rank(),
            right: z2.rank(),
        });
    }
    Ok(z2.edges().is_subset(&z1.edges()))
}

/// All rhombic tilings refining `z`, one factor of rhombic tilings per tile.
pub fn refinements(z: &ZonoTiling) -> Vec<RhombicTiling> {
    let mut by_size: HashMap<usize, Vec<RhombicTiling>> = HashMap::new();
    let mut partial: Vec<Vec<Rhombus>> = vec![Vec::new()];
    for tile in &z.tiles {
        let k = tile.size();
        let local = by_size
            .entry(k)
            .or_insert_with(|| enumerate_rhombic(&Permutation::longest(k)).expect("tile fits guard"));
        let labels = tile.labels.to_vec();
        let relabel = |s: LabelSet| -> LabelSet {
            s.iter().map(|i| labels[i - 1]).collect::<LabelSet>().union(tile.base)
        };
        let options: Vec<Vec<Rhombus>> = local
            .iter()
            .map(|t| {
                t.tiles()
                    .iter()
                    .map(|r| Rhombus::new(labels[r.a - 1], labels[r.b - 1], relabel(r.base)))
                    .collect()
            })
            .collect();
        partial = partial
            .iter()
            .flat_map(|acc| {
                options.iter().map(move |opt| {
                    let mut next = acc.clone();
                    next.extend_from_slice(opt);
                    next
                })
            })
            .collect();
    }
    let mut out: Vec<RhombicTiling> = partial
        .into_iter()
        .map(|tiles| RhombicTiling::from_tiles(z.w.clone(), tiles))
        .collect();
    out.sort();
    out
}

/// The zonotopal tilings of one `E(w)` under reverse edge inclusion.
#[derive(Debug, Clone)]
pub struct ZonoPoset {
    w: Permutation,
    elements: Vec<ZonoTiling>,
    index: HashMap<ZonoTiling, usize>,
    // above[i] has bit j set iff elements[i] < elements[j]
    above: Vec<Vec<u64>>,
    covers: Vec<(usize, usize)>,
}

fn bit(set: &[u64], j: usize) -> bool {
    set[j / 64] >> (j % 64) & 1 == 1
}

impl ZonoPoset {
    pub fn new(w: &Permutation) -> Result<Self> {
        let elements = enumerate_zonotopal(w)?;
        Ok(Self::from_elements(w.clone(), elements))
    }

    fn from_elements(w: Permutation, elements: Vec<ZonoTiling>) -> Self {
        let count = elements.len();
        let words = count.div_ceil(64);
        let edge_sets: Vec<BTreeSet<Edge>> = elements.iter().map(|z| z.edges()).collect();
        let mut above = vec![vec![0u64; words]; count];
        for i in 0..count {
            for j in 0..count {
                if i != j
                    && edge_sets[j].len() < edge_sets[i].len()
                    && edge_sets[j].is_subset(&edge_sets[i])
                {
                    above[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..count {
            // j covers i iff j is above i and not above any other k above i
            let mut reachable_in_two = vec![0u64; words];
            for k in (0..count).filter(|&k| bit(&above[i], k)) {
                for (acc, x) in reachable_in_two.iter_mut().zip(&above[k]) {
                    *acc |= x;
                }
            }
            for j in (0..count).filter(|&j| bit(&above[i], j)) {
                if !bit(&reachable_in_two, j) {
                    covers.push((i, j));
                }
            }
        }
        let index = elements.iter().cloned().enumerate().map(|(i, z)| (z, i)).collect();
        ZonoPoset {
            w,
            elements,
            index,
            above,
            covers,
        }
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn elements(&self) -> &[ZonoTiling] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, z: &ZonoTiling) -> Option<usize> {
        self.index.get(z).copied()
    }

    /// Cover relations `(lower, upper)` as element indices.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict order on element indices.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        bit(&self.above[i], j)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    pub fn maximal_elements(&self) -> Vec<&ZonoTiling> {
        (0..self.len())
            .filter(|&i| self.above[i].iter().all(|&x| x == 0))
            .map(|i| &self.elements[i])
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<&ZonoTiling> {
        (0..self.len())
            .filter(|&j| !(0..self.len()).any(|i| self.lt(i, j)))
            .map(|j| &self.elements[j])
            .collect()
    }

    /// Minimal elements of the set of common upper bounds.
    pub fn minimal_upper_bounds(&self, z1: &ZonoTiling, z2: &ZonoTiling) -> Result<Vec<ZonoTiling>> {
        let lookup = |z: &ZonoTiling| {
            self.index_of(z)
                .ok_or_else(|| Error::InvalidTiling("tiling is not an element of this poset".into()))
        };
        let (i, j) = (lookup(z1)?, lookup(z2)?);
        let bounds: Vec<usize> = (0..self.len())
            .filter(|&k| self.leq(i, k) && self.leq(j, k))
            .collect();
        Ok(bounds
            .iter()
            .filter(|&&k| !bounds.iter().any(|&m| self.lt(m, k)))
            .map(|&k| self.elements[k].clone())
            .collect())
    }
}

pub fn poset(w: &Permutation) -> Result<ZonoPoset> {
    ZonoPoset::new(w)
}

pub fn has_unique_max(w: &Permutation) -> Result<bool> {
    Ok(poset(w)?.maximal_elements().len() == 1)
}

/// Patterns whose avoidance characterizes a unique maximal zonotopal tiling.
pub fn unique_max_patterns() -> [Permutation; 3] {
    [
        Permutation::new(vec![4, 2, 3, 1]).unwrap(),
        Permutation::new(vec![4, 3, 1, 2]).unwrap(),
        Permutation::new(vec![3, 4, 2, 1]).unwrap(),
    ]
}
