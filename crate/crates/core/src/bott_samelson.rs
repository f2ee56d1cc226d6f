//! Numerical and torus-fixed-point data carried by a tiling.
//!
//! The Poincaré polynomial of the (generalized) Bott-Samelson variety of a
//! zonotopal tiling is the product of `[k]_q!` over its `2k`-gon tiles.
//! Torus-fixed points of a rhombic tiling's variety are light/dark colorings
//! of its rhombi; each realizes as an assignment of coordinate subspaces
//! (index sets) to the tiling vertices.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Mul;

use crate::error::{length_guard, Error, Result};
use crate::labelset::LabelSet;
use crate::permutations::{Permutation, Word};
use crate::tilings::{boundary_vertices, Boundary, BoundaryVertex, RhombicTiling, Rhombus};
use crate::zonotopal::ZonoTiling;

/// Polynomial in `q` with nonnegative integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<u64>,
}

impl QPolynomial {
    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        QPolynomial { coeffs }
    }

    /// `[i]_q = 1 + q + ... + q^{i-1}`.
    pub fn q_integer(i: usize) -> Self {
        QPolynomial { coeffs: vec![1; i] }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn eval(&self, q: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = QPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn add_assign_monomial(&mut self, k: usize, c: u64) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
        *self = QPolynomial::from_coeffs(std::mem::take(&mut self.coeffs));
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return QPolynomial::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "{c}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `[i]_q! = [i]_q [i-1]_q ... [1]_q`.
pub fn q_factorial(i: usize) -> Result<QPolynomial> {
    if i < 1 {
        return Err(Error::Parse("q-factorial needs i >= 1".into()));
    }
    Ok((1..=i).fold(QPolynomial::one(), |acc, k| &acc * &QPolynomial::q_integer(k)))
}

/// Product of `[k]_q!` over the tiles of `z`, where a `2k`-gon has `k` labels.
pub fn poincare(z: &ZonoTiling) -> QPolynomial {
    z.census()
        .into_iter()
        .fold(QPolynomial::one(), |acc, (k, count)| {
            &acc * &q_factorial(k).expect("tiles have k >= 2").pow(count)
        })
}

pub fn poincare_rhombic(t: &RhombicTiling) -> QPolynomial {
    poincare(&ZonoTiling::from(t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shade {
    Light,
    Dark,
}

/// One shade per rhombus, in the tiling's canonical tile order.
///
/// Bit strings use `0` for light and `1` for dark.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    shades: Vec<Shade>,
}

impl Coloring {
    pub fn new(shades: Vec<Shade>) -> Self {
        Coloring { shades }
    }

    pub fn all_light(len: usize) -> Self {
        Coloring::new(vec![Shade::Light; len])
    }

    pub fn all_dark(len: usize) -> Self {
        Coloring::new(vec![Shade::Dark; len])
    }

    /// Bit `k` of `mask` set means tile `k` is dark.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        Coloring::new(
            (0..len)
                .map(|k| if mask >> k & 1 == 1 { Shade::Dark } else { Shade::Light })
                .collect(),
        )
    }

    pub fn from_bits(bits: &str) -> Result<Self> {
        bits.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(Shade::Light),
                '1' => Ok(Shade::Dark),
                other => Err(Error::Parse(format!("invalid coloring bit {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Coloring::new)
    }

    pub fn to_bits(&self) -> String {
        self.shades
            .iter()
            .map(|s| if *s == Shade::Dark { '1' } else { '0' })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.shades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shades.is_empty()
    }

    pub fn shades(&self) -> &[Shade] {
        &self.shades
    }

    pub fn shade(&self, k: usize) -> Shade {
        self.shades[k]
    }

    pub fn dark_count(&self) -> usize {
        self.shades.iter().filter(|&&s| s == Shade::Dark).count()
    }

    pub fn check_against(&self, t: &RhombicTiling) -> Result<()> {
        if self.len() != t.len() {
            return Err(Error::ColoringMismatch {
                expected: t.len(),
                found: self.len(),
            });
        }
        Ok(())
    }
}

/// Dimension of the stratum of a coloring: the number of dark rhombi.
pub fn stratum_dimension(c: &Coloring) -> usize {
    c.dark_count()
}

/// Torus-fixed point: each tiling vertex mapped to the index set spanning
/// its coordinate subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    assignment: BTreeMap<LabelSet, LabelSet>,
}

impl FixedPoint {
    pub fn get(&self, vertex: LabelSet) -> Option<LabelSet> {
        self.assignment.get(&vertex).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<LabelSet, LabelSet> {
        &self.assignment
    }

    /// The flag read off the right side `G_1 ⊂ ... ⊂ G_{n-1}`, as a permutation.
    pub fn image(&self, w: &Permutation) -> Permutation {
        let mut values = Vec::with_capacity(w.rank());
        let mut previous = LabelSet::EMPTY;
        for (v, set) in boundary_vertices(w) {
            if let BoundaryVertex::Right(_) = v {
                let current = self.assignment[&set];
                values.push(current.difference(previous).iter().next().unwrap());
                previous = current;
            }
        }
        values.push(LabelSet::prefix(w.rank()).difference(previous).iter().next().unwrap());
        Permutation::new(values).expect("fixed point images are permutations")
    }
}

/// Realizes a coloring by processing rhombi in the default peeling order.
pub fn realize_fixed_point(t: &RhombicTiling, c: &Coloring) -> Result<FixedPoint> {
    c.check_against(t)?;
    let word = t.to_word()?;
    realize_along(t, c, &word)
}

/// Realizes a coloring processing rhombi in the order of `word`, which must
/// be a peeling word of `t`.
pub fn realize_along(t: &RhombicTiling, c: &Coloring, word: &Word) -> Result<FixedPoint> {
    c.check_against(t)?;
    let n = t.rank();
    let index: HashMap<Rhombus, usize> = t.tiles().iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let mut assignment: BTreeMap<LabelSet, LabelSet> =
        (0..=n).map(|j| (LabelSet::prefix(j), LabelSet::prefix(j))).collect();
    let mut boundary = Boundary::base(n);
    for (pos, &i) in word.letters().iter().enumerate() {
        let rhombus = boundary.rhombus_at(i).ok_or(Error::NotReduced { position: pos + 1 })?;
        let k = *index
            .get(&rhombus)
            .ok_or_else(|| Error::InvalidTiling(format!("word places {rhombus:?}, not a tile")))?;
        let bottom = assignment[&boundary.vertex(i - 1)];
        let middle = assignment[&boundary.vertex(i)];
        let top = assignment[&boundary.vertex(i + 1)];
        let new_middle = match c.shade(k) {
            Shade::Light => middle,
            Shade::Dark => bottom.union(top.difference(middle)),
        };
        boundary.advance(i);
        assignment.insert(boundary.vertex(i), new_middle);
    }
    if boundary.word_order() != t.permutation() || word.len() != t.len() {
        return Err(Error::InvalidTiling("word does not peel the whole tiling".into()));
    }
    Ok(FixedPoint { assignment })
}

/// The permutation of the flag `π` sends the fixed point of `c` to.
pub fn image_permutation(t: &RhombicTiling, c: &Coloring) -> Result<Permutation> {
    Ok(realize_fixed_point(t, c)?.image(t.permutation()))
}

/// Images over all `2^ℓ` colorings.
pub fn fixed_point_images(t: &RhombicTiling) -> Result<BTreeSet<Permutation>> {
    length_guard(t.len())?;
    let word = t.to_word()?;
    let mut out = BTreeSet::new();
    for mask in 0..1u64 << t.len() {
        let c = Coloring::from_mask(mask, t.len());
        out.insert(realize_along(t, &c, &word)?.image(t.permutation()));
    }
    Ok(out)
}

/// `Σ_c q^{#dark(c)}` over all colorings of `t`.
pub fn stratum_polynomial(t: &RhombicTiling) -> Result<QPolynomial> {
    length_guard(t.len())?;
    let mut out = QPolynomial::zero();
    for mask in 0..1u64 << t.len() {
        out.add_assign_monomial(stratum_dimension(&Coloring::from_mask(mask, t.len())), 1);
    }
    Ok(out)
}
