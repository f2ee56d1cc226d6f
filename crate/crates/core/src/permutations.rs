//! Permutations of `{1, ..., n}` in one-line notation and words in the simple
//! transpositions `s_1, ..., s_{n-1}`.
//!
//! Letters act on the right: `w * s_i` exchanges the entries in positions
//! `i` and `i + 1`. Inversions are recorded as value pairs `(a, b)` with
//! `a < b` and `b` appearing before `a`, which makes inversion-set inclusion
//! the right weak order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, MAX_RANK};

/// A permutation in one-line notation, `values[i - 1] = w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        if n > MAX_RANK {
            return Err(Error::RankTooLarge(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// The longest element `n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    /// All permutations of rank `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.rank()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    pub fn inversions(&self) -> InversionSet {
        let mut pairs = BTreeSet::new();
        for (i, &x) in self.values.iter().enumerate() {
            for &y in &self.values[i + 1..] {
                if x > y {
                    pairs.insert((y, x));
                }
            }
        }
        InversionSet { pairs }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.values;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&y| y < v[i]).count())
            .sum()
    }

    /// True if `w(i) > w(i + 1)`.
    pub fn has_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.rank() && self.values[i - 1] > self.values[i]
    }

    /// Right multiplication by `s_i`: exchanges positions `i` and `i + 1`.
    pub fn apply_simple(&self, i: usize) -> Result<Permutation> {
        let n = self.rank();
        if i == 0 || i >= n {
            return Err(Error::LetterOutOfRange { letter: i, n });
        }
        let mut values = self.values.clone();
        values.swap(i - 1, i);
        Ok(Permutation { values })
    }

    pub(crate) fn swap_in_place(&mut self, i: usize) {
        self.values.swap(i - 1, i);
    }

    pub(crate) fn reverse_segment(&mut self, start: usize, len: usize) {
        self.values[start - 1..start - 1 + len].reverse();
    }

    /// True if some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> Result<bool> {
        if pattern.rank() > self.rank() {
            return Err(Error::PatternTooLong {
                pattern: pattern.rank(),
                text: self.rank(),
            });
        }
        let mut chosen = Vec::with_capacity(pattern.rank());
        Ok(extend_embedding(&self.values, &pattern.values, 0, &mut chosen))
    }

    pub fn avoids_all(&self, patterns: &[Permutation]) -> Result<bool> {
        for p in patterns {
            if p.rank() <= self.rank() && self.contains_pattern(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Right weak order: `inversions(self) ⊆ inversions(other)`.
    pub fn weak_leq(&self, other: &Permutation) -> Result<bool> {
        self.check_rank(other)?;
        let v = &self.values;
        let pos = other.inverse();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                // (v[j], v[i]) is an inversion of self; it must be one of other
                if v[i] > v[j] && pos.at(v[i]) > pos.at(v[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Strong Bruhat order by the dominance criterion
    /// `#{k <= i : u(k) >= j} <= #{k <= i : w(k) >= j}` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        self.check_rank(other)?;
        let n = self.rank();
        // counts[j] = #{k <= i : value(k) >= j}, updated row by row
        let mut mine = vec![0usize; n + 2];
        let mut theirs = vec![0usize; n + 2];
        for i in 0..n {
            mine[1..=self.values[i]].iter_mut().for_each(|c| *c += 1);
            theirs[1..=other.values[i]].iter_mut().for_each(|c| *c += 1);
            if (1..=n).any(|j| mine[j] > theirs[j]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_rank(&self, other: &Permutation) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }
}

fn extend_embedding(text: &[usize], pattern: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - j;
    for pos in from..=text.len() - remaining {
        let x = text[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&y, &p)| (x > y) == (pattern[j] > p));
        if consistent {
            chosen.push(x);
            if extend_embedding(text, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        if current.is_empty() {
            return None;
        }
        let mut succ = current.clone();
        // standard lexicographic successor
        if let Some(i) = (0..succ.len() - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
            let j = (i + 1..succ.len()).rev().find(|&j| succ[j] > succ[i]).unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { values: current })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write_list(f, &self.values)
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"7456312"` or `"7,4,5,6,3,1,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.contains(',') {
            parse_list(s)?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("invalid digit {c:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

/// A word `s_{i_1} s_{i_2} ...` in the simple transpositions of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<usize>,
    n: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("rank 0".into()));
        }
        if n > MAX_RANK {
            return Err(Error::RankTooLarge(n));
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l >= n) {
            return Err(Error::LetterOutOfRange { letter, n });
        }
        Ok(Word { letters, n })
    }

    pub fn empty(n: usize) -> Self {
        Word { letters: Vec::new(), n }
    }

    /// Parses a comma-separated letter list. Without an explicit rank the
    /// smallest rank containing every letter is used.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let letters = if s.trim().is_empty() {
            Vec::new()
        } else {
            parse_list(s)?
        };
        let n = n.unwrap_or_else(|| letters.iter().max().map_or(1, |m| m + 1));
        Word::new(letters, n)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn from_parts(letters: Vec<usize>, n: usize) -> Self {
        Word { letters, n }
    }

    /// The product permutation, and whether every letter raised the length.
    pub fn evaluate(&self) -> (Permutation, bool) {
        let mut u = Permutation::identity(self.n);
        let mut reduced = true;
        for &i in &self.letters {
            if u.has_descent(i) {
                reduced = false;
            }
            u.swap_in_place(i);
        }
        (u, reduced)
    }

    /// Index of the first letter that does not raise the length, if any.
    pub fn first_non_reduced(&self) -> Option<usize> {
        let mut u = Permutation::identity(self.n);
        for (k, &i) in self.letters.iter().enumerate() {
            if u.has_descent(i) {
                return Some(k + 1);
            }
            u.swap_in_place(i);
        }
        None
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.letters)
    }
}

/// Value pairs `(a, b)`, `a < b`, that appear out of order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InversionSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl InversionSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.pairs.contains(&(lo, hi))
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (k, v) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid integer {:?}", t.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn inversion_counts() {
        assert!(Permutation::identity(5).inversions().is_empty());
        assert_eq!(p("7456312").inversions().len(), 17);
        assert_eq!(p("87465312").inversions().len(), 25);
        assert_eq!(p("87465312").length(), 25);
    }

    #[test]
    fn apply_simple_examples() {
        assert_eq!(p("1234").apply_simple(2).unwrap(), p("1324"));
        assert_eq!(p("1234567").apply_simple(3).unwrap(), p("1243567"));
        assert_eq!(p("1324").apply_simple(2).unwrap(), p("1234"));
        assert_eq!(
            p("1234").apply_simple(4),
            Err(Error::LetterOutOfRange { letter: 4, n: 4 })
        );
        assert!(p("1234").apply_simple(0).is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(Word::empty(3).evaluate(), (p("123"), true));
        let w = Word::parse("3,4,2,5,6,5,3,4,3,2,1,5,2,3,6,4,5", Some(7)).unwrap();
        assert_eq!(w.evaluate(), (p("7456312"), true));
        let w = Word::parse("1,1", Some(2)).unwrap();
        assert_eq!(w.evaluate(), (p("12"), false));
        assert_eq!(w.first_non_reduced(), Some(2));
    }

    #[test]
    fn pattern_examples() {
        assert!(p("4231").contains_pattern(&p("4231")).unwrap());
        assert!(!p("1234").contains_pattern(&p("321")).unwrap());
        assert!(!p("4321").contains_pattern(&p("4231")).unwrap());
        assert!(p("52341").contains_pattern(&p("4231")).unwrap());
        assert!(matches!(
            p("12").contains_pattern(&p("321")),
            Err(Error::PatternTooLong { .. })
        ));
    }

    #[test]
    fn weak_order_examples() {
        let w = p("7456312");
        assert!(Permutation::identity(7).weak_leq(&w).unwrap());
        assert!(p("1243567").weak_leq(&w).unwrap());
        assert!(!p("21").weak_leq(&p("12")).unwrap());
        assert!(p("21").weak_leq(&p("123")).is_err());
    }

    #[test]
    fn bruhat_examples() {
        assert!(Permutation::identity(4).bruhat_leq(&p("3142")).unwrap());
        assert!(p("321").bruhat_leq(&p("321")).unwrap());
        assert!(p("2143").bruhat_leq(&p("3142")).unwrap());
        assert!(!p("3142").bruhat_leq(&p("2143")).unwrap());
        assert!(p("12").bruhat_leq(&p("123")).is_err());
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("7456312").to_string(), "7456312");
        assert_eq!(p("7,4,5,6,3,1,2"), p("7456312"));
        let big = Permutation::longest(10);
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("1123".parse::<Permutation>().is_err());
        assert!("1x3".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!(Word::parse("1,0", Some(3)).is_err());
        assert!(Word::parse("3", Some(3)).is_err());
        assert_eq!(Word::parse("2,1", None).unwrap().rank(), 3);
    }

    #[test]
    fn enumerates_all() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert_eq!(all[0], Permutation::identity(4));
        assert_eq!(all[23], Permutation::longest(4));
        assert_eq!(Permutation::all(1).count(), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        for w in Permutation::all(5) {
            assert!(w.inverse().inverse() == w);
            assert_eq!(w.inverse().length(), w.length());
        }
    }
}
