//! Hexagon flips on rhombic tilings and the flip graph of `E(w)`.
//!
//! A unit hexagon with labels `a < b < c` and bottom vertex `S` has two
//! rhombic tilings, the ones grown by `s_i s_{i+1} s_i` and
//! `s_{i+1} s_i s_{i+1}` on a boundary segment `a, b, c`:
//!
//! * interior vertex `S+b`: `({a,b}, S)`, `({b,c}, S)`, `({a,c}, S+b)`
//! * interior vertex `S+a+c`: `({a,c}, S)`, `({b,c}, S+a)`, `({a,b}, S+c)`

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::io::json;
use crate::labelset::LabelSet;
use crate::permutations::Permutation;
use crate::tilings::{enumerate_rhombic, RhombicTiling, Rhombus};
use crate::zonotopal::{ZonoTile, ZonoTiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// Interior vertex `S ∪ {b}`.
    InteriorB,
    /// Interior vertex `S ∪ {a, c}`.
    InteriorAc,
}

impl Orientation {
    pub fn opposite(self) -> Self {
        match self {
            Orientation::InteriorB => Orientation::InteriorAc,
            Orientation::InteriorAc => Orientation::InteriorB,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlipSite {
    pub labels: (usize, usize, usize),
    pub base: LabelSet,
    pub orientation: Orientation,
}

impl FlipSite {
    /// The three rhombi this site's orientation requires.
    pub fn tiles(&self) -> [Rhombus; 3] {
        tiles_for(self.labels, self.base, self.orientation)
    }

    pub fn interior_vertex(&self) -> LabelSet {
        let (a, b, c) = self.labels;
        match self.orientation {
            Orientation::InteriorB => self.base.with(b),
            Orientation::InteriorAc => self.base.with(a).with(c),
        }
    }

    pub fn flipped(&self) -> FlipSite {
        FlipSite {
            orientation: self.orientation.opposite(),
            ..*self
        }
    }

    pub fn hexagon(&self) -> ZonoTile {
        let (a, b, c) = self.labels;
        ZonoTile::new(LabelSet::from_labels([a, b, c]), self.base)
    }
}

fn tiles_for((a, b, c): (usize, usize, usize), s: LabelSet, orientation: Orientation) -> [Rhombus; 3] {
    match orientation {
        Orientation::InteriorB => [
            Rhombus::new(a, b, s),
            Rhombus::new(b, c, s),
            Rhombus::new(a, c, s.with(b)),
        ],
        Orientation::InteriorAc => [
            Rhombus::new(a, c, s),
            Rhombus::new(b, c, s.with(a)),
            Rhombus::new(a, b, s.with(c)),
        ],
    }
}

/// All hexagons of `t` that can be flipped, in sorted order.
pub fn flip_sites(t: &RhombicTiling) -> Vec<FlipSite> {
    let n = t.rank();
    let mut out = BTreeSet::new();
    for r in t.tiles() {
        let s = r.base;
        // r as ({a,b}, S) with interior S+b
        for c in (r.b + 1..=n).filter(|&c| !s.contains(c)) {
            if t.contains(&Rhombus::new(r.b, c, s)) && t.contains(&Rhombus::new(r.a, c, s.with(r.b))) {
                out.insert(FlipSite {
                    labels: (r.a, r.b, c),
                    base: s,
                    orientation: Orientation::InteriorB,
                });
            }
        }
        // r as ({a,c}, S) with interior S+a+c
        for b in (r.a + 1..r.b).filter(|&b| !s.contains(b)) {
            if t.contains(&Rhombus::new(b, r.b, s.with(r.a))) && t.contains(&Rhombus::new(r.a, b, s.with(r.b))) {
                out.insert(FlipSite {
                    labels: (r.a, b, r.b),
                    base: s,
                    orientation: Orientation::InteriorAc,
                });
            }
        }
    }
    out.into_iter().collect()
}

fn require_site(t: &RhombicTiling, f: &FlipSite) -> Result<()> {
    if f.tiles().iter().all(|r| t.contains(r)) {
        Ok(())
    } else {
        Err(Error::SiteNotPresent)
    }
}

/// Replaces the three rhombi of `f` by the other tiling of the hexagon.
pub fn apply_flip(t: &RhombicTiling, f: &FlipSite) -> Result<RhombicTiling> {
    require_site(t, f)?;
    let old = f.tiles();
    let tiles = t
        .tiles()
        .iter()
        .filter(|r| !old.contains(r))
        .copied()
        .chain(f.flipped().tiles());
    Ok(RhombicTiling::from_tiles(t.permutation().clone(), tiles))
}

/// The zonotopal tiling with a hexagon in place of the three rhombi of `f`.
pub fn coarsen_flip(t: &RhombicTiling, f: &FlipSite) -> Result<ZonoTiling> {
    require_site(t, f)?;
    let old = f.tiles();
    let tiles = t
        .tiles()
        .iter()
        .filter(|r| !old.contains(r))
        .map(|&r| ZonoTile::from(r))
        .chain([f.hexagon()]);
    Ok(ZonoTiling::from_tiles(t.permutation().clone(), tiles))
}

/// Short stable key for a tiling: hex SHA-256 prefix of its canonical JSON.
pub fn digest(t: &RhombicTiling) -> String {
    json::digest(&json::rhombic_to_string(t))
}

#[derive(Debug, Clone)]
pub struct FlipGraph {
    w: Permutation,
    nodes: Vec<RhombicTiling>,
    keys: Vec<String>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl FlipGraph {
    pub fn nodes(&self) -> &[RhombicTiling] {
        &self.nodes
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    /// Digest keys, parallel to `nodes()`.
    pub fn keys(&self) -> &[String] {
        &self.keys
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i].iter().copied()
    }

    /// Unordered arcs `(i, j)` with `i < j`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, adj)| adj.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(i) = queue.pop_front() {
            for j in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    reached += 1;
                    queue.push_back(j);
                }
            }
        }
        reached == self.nodes.len()
    }

    /// Graphviz rendering, nodes labelled by their peeling words.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"flips_{}\" {{\n", self.w);
        for (i, t) in self.nodes.iter().enumerate() {
            let label = t.to_word().map(|w| w.to_string()).unwrap_or_default();
            out.push_str(&format!("  \"{}\" [label=\"{}\"];\n", self.keys[i], label));
        }
        for (i, j) in self.arcs() {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.keys[i], self.keys[j]));
        }
        out.push_str("}\n");
        out
    }
}

pub fn flip_graph(w: &Permutation) -> Result<FlipGraph> {
    let nodes = enumerate_rhombic(w)?;
    let index: BTreeMap<&RhombicTiling, usize> = nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut adjacency = vec![BTreeSet::new(); nodes.len()];
    for (i, t) in nodes.iter().enumerate() {
        for f in flip_sites(t) {
            let partner = apply_flip(t, &f)?;
            let j = *index
                .get(&partner)
                .expect("flip of an enumerated tiling is enumerated");
            adjacency[i].insert(j);
            adjacency[j].insert(i);
        }
    }
    let keys = nodes.iter().map(digest).collect();
    Ok(FlipGraph {
        w: w.clone(),
        nodes,
        keys,
        adjacency,
    })
}

pub fn is_connected(g: &FlipGraph) -> bool {
    g.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::permutations::Word;
    use crate::tilings::word_to_tiling;
    use crate::zonotopal::refinements;

    fn tiling(s: &str, n: usize) -> RhombicTiling {
        word_to_tiling(&Word::parse(s, Some(n)).unwrap()).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const LONG_WORD: &str = "3,4,2,5,6,5,3,4,3,2,1,5,2,3,6,4,5";

    #[test]
    fn hexagon_sites() {
        let t121 = tiling("1,2,1", 3);
        let t212 = tiling("2,1,2", 3);
        for t in [&t121, &t212] {
            let sites = flip_sites(t);
            assert_eq!(sites.len(), 1);
            assert_eq!(sites[0].labels, (1, 2, 3));
            assert_eq!(sites[0].base, LabelSet::EMPTY);
        }
        assert!(flip_sites(&tiling("1", 2)).is_empty());
        let f = flip_sites(&t121)[0];
        assert_eq!(apply_flip(&t121, &f).unwrap(), t212);
        assert_eq!(apply_flip(&t212, &f), Err(Error::SiteNotPresent));
    }

    #[test]
    fn long_word_tiling_flips_to_another_class() {
        let t = tiling(LONG_WORD, 7);
        let sites = flip_sites(&t);
        assert!(!sites.is_empty());
        let class = oracle::commutation_closure(&Word::parse(LONG_WORD, Some(7)).unwrap());
        for f in &sites {
            let flipped = apply_flip(&t, f).unwrap();
            assert!(flipped.validate());
            assert!(!class.contains(&flipped.to_word().unwrap()));
            assert_eq!(apply_flip(&flipped, &f.flipped()).unwrap(), t);
            // both partners coarsen to the same hexagon tiling
            let coarse = coarsen_flip(&t, f).unwrap();
            assert_eq!(coarse, coarsen_flip(&flipped, &f.flipped()).unwrap());
            assert!(coarse.validate());
            let partners: BTreeSet<_> = [t.clone(), flipped].into();
            let refined: BTreeSet<_> = refinements(&coarse).into_iter().collect();
            assert_eq!(refined, partners);
        }
    }

    #[test]
    fn coarsen_hexagon() {
        let t = tiling("1,2,1", 3);
        let f = flip_sites(&t)[0];
        let z = coarsen_flip(&t, &f).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z.census(), BTreeMap::from([(3, 1)]));
        assert!(coarsen_flip(&tiling("2,1,2", 3), &f).is_err());
    }

    #[test]
    fn small_graphs() {
        let g = flip_graph(&p("321")).unwrap();
        assert_eq!(g.nodes().len(), 2);
        assert_eq!(g.arcs().len(), 1);
        assert!(g.is_connected());
        let g = flip_graph(&p("4321")).unwrap();
        assert_eq!(g.nodes().len(), 8);
        assert!(is_connected(&g));
        let g = flip_graph(&p("2143")).unwrap();
        assert_eq!(g.nodes().len(), 1);
        assert!(g.arcs().is_empty());
        assert!(g.is_connected());
        let dot = flip_graph(&p("321")).unwrap().to_dot();
        assert!(dot.starts_with("graph") && dot.contains(" -- "));
    }
}
