//! Brute-force reduced words and commutation classes.
//!
//! Independent of the tiling code; used as ground truth for the tiling
//! bijection and the flip graph.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{length_guard, Result};
use crate::permutations::{Permutation, Word};

/// A closure of reduced words under commutation moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationClass {
    /// Lexicographically least member.
    pub representative: Word,
    pub members: BTreeSet<Word>,
}

impl CommutationClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.members.contains(word)
    }
}

/// Every reduced word of `w`, by recursion on right descents.
pub fn reduced_words(w: &Permutation) -> Result<BTreeSet<Word>> {
    length_guard(w.length())?;
    let n = w.rank();
    let mut out = BTreeSet::new();
    let mut suffix = Vec::with_capacity(w.length());
    collect_words(w.clone(), &mut suffix, n, &mut out);
    Ok(out)
}

fn collect_words(u: Permutation, suffix: &mut Vec<usize>, n: usize, out: &mut BTreeSet<Word>) {
    if u.is_identity() {
        let letters = suffix.iter().rev().copied().collect();
        out.insert(Word::from_parts(letters, n));
        return;
    }
    for i in 1..n {
        if u.has_descent(i) {
            suffix.push(i);
            collect_words(u.apply_simple(i).unwrap(), suffix, n, out);
            suffix.pop();
        }
    }
}

/// Every word reachable from `word` by swapping adjacent letters `i, j`
/// with `|i - j| > 1`.
pub fn commutation_closure(word: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.clone());
    queue.push_back(word.clone());
    while let Some(v) = queue.pop_front() {
        let letters = v.letters();
        for k in 0..letters.len().saturating_sub(1) {
            if letters[k].abs_diff(letters[k + 1]) > 1 {
                let mut swapped = letters.to_vec();
                swapped.swap(k, k + 1);
                let next = Word::from_parts(swapped, v.rank());
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// Partition of `reduced_words(w)` into commutation classes, sorted by
/// representative.
pub fn commutation_classes(w: &Permutation) -> Result<Vec<CommutationClass>> {
    let mut remaining = reduced_words(w)?;
    let mut classes = Vec::new();
    while let Some(first) = remaining.pop_first() {
        let members = commutation_closure(&first);
        for m in &members {
            remaining.remove(m);
        }
        classes.push(CommutationClass {
            representative: members.first().cloned().unwrap(),
            members,
        });
    }
    Ok(classes)
}
