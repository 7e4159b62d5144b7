//! Difference multisets of integer sets.
//!
//! `X − X = {a − b : a, b ∈ X}` with multiplicity is invariant under
//! translation and reflection; the search below finds inequivalent pairs
//! with equal difference multisets, indexing candidate sets by a hash of the
//! multiset. Such a pair of size-6 sets encodes two highest weights of `A5`
//! whose principal restrictions coincide.

use std::collections::BTreeMap;
use std::collections::HashMap;

/// Set of distinct integers, stored strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerSet(Vec<i64>);

impl IntegerSet {
    /// Build from arbitrary distinct integers; panics on duplicates.
    pub fn new(mut elements: Vec<i64>) -> IntegerSet {
        elements.sort_unstable_by(|a, b| b.cmp(a));
        assert!(
            elements.windows(2).all(|w| w[0] > w[1]),
            "elements must be distinct"
        );
        IntegerSet(elements)
    }

    pub fn try_new(mut elements: Vec<i64>) -> Option<IntegerSet> {
        elements.sort_unstable_by(|a, b| b.cmp(a));
        if elements.windows(2).all(|w| w[0] > w[1]) {
            Some(IntegerSet(elements))
        } else {
            None
        }
    }

    /// Strictly decreasing elements.
    pub fn elements(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn translate(&self, b: i64) -> IntegerSet {
        IntegerSet(self.0.iter().map(|x| x + b).collect())
    }

    pub fn reflect(&self, a: i64) -> IntegerSet {
        let mut v: Vec<i64> = self.0.iter().map(|x| a - x).collect();
        v.reverse();
        IntegerSet(v)
    }

    /// Consecutive gaps of the decreasing list (translation invariant).
    fn gaps(&self) -> Vec<i64> {
        self.0.windows(2).map(|w| w[0] - w[1]).collect()
    }
}

/// All `n²` pairwise differences with multiplicity.
pub fn difference_multiset(x: &IntegerSet) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for &a in x.elements() {
        for &b in x.elements() {
            *out.entry(a - b).or_insert(0) += 1;
        }
    }
    out
}

/// Are `X` and `Y` related by translation or reflection?
pub fn equivalent(x: &IntegerSet, y: &IntegerSet) -> bool {
    if x.len() != y.len() {
        return false;
    }
    let gx = x.gaps();
    let gy = y.gaps();
    let reversed: Vec<i64> = gx.iter().rev().copied().collect();
    gy == gx || gy == reversed
}

/// An inequivalent pair with equal difference multisets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionPair {
    pub x: IntegerSet,
    pub y: IntegerSet,
}

/// Exhaustive collision search over canonical n-element sets with minimum 0
/// and maximum ≤ `bound`: groups sets by difference multiset, reports all
/// inequivalent pairs within a group.
pub fn search_collisions(n: usize, bound: i64) -> Vec<CollisionPair> {
    assert!(n >= 2);
    let mut by_diffs: HashMap<Vec<(i64, usize)>, Vec<IntegerSet>> = HashMap::new();
    // enumerate subsets {0 < c_1 < … < c_{n-2} < max} for each max ≤ bound
    let mut chosen: Vec<i64> = Vec::new();
    for max in (n as i64 - 1)..=bound {
        enumerate_middles(1, max, n - 2, &mut chosen, &mut |middle| {
            let mut v = vec![0i64];
            v.extend_from_slice(middle);
            v.push(max);
            let set = IntegerSet::new(v);
            // canonical under reflection: keep the lexicographically smaller
            // of the set and its reflection through max
            let refl = set.reflect(max);
            if refl.elements() < set.elements() {
                return;
            }
            let key: Vec<(i64, usize)> = difference_multiset(&set).into_iter().collect();
            by_diffs.entry(key).or_default().push(set);
        });
    }
    let mut pairs = Vec::new();
    let mut groups: Vec<Vec<IntegerSet>> = by_diffs.into_values().collect();
    groups.sort();
    for group in groups {
        for i in 0..group.len() {
            for j in (i + 1)..group.len() {
                if !equivalent(&group[i], &group[j]) {
                    pairs.push(CollisionPair {
                        x: group[i].clone(),
                        y: group[j].clone(),
                    });
                }
            }
        }
    }
    pairs
}

fn enumerate_middles(
    lo: i64,
    max: i64,
    left: usize,
    chosen: &mut Vec<i64>,
    f: &mut dyn FnMut(&[i64]),
) {
    if left == 0 {
        f(chosen);
        return;
    }
    for v in lo..=(max - left as i64) {
        chosen.push(v);
        enumerate_middles(v + 1, max, left - 1, chosen, f);
        chosen.pop();
    }
}

/// `X = A + B`, `Y = A − B` when both sumsets are genuine sets; then
/// `X − X = Y − Y` by construction.
pub fn sumset_construction(a: &IntegerSet, b: &IntegerSet) -> Option<(IntegerSet, IntegerSet)> {
    let sums: Vec<i64> = a
        .elements()
        .iter()
        .flat_map(|&x| b.elements().iter().map(move |&y| x + y))
        .collect();
    let diffs: Vec<i64> = a
        .elements()
        .iter()
        .flat_map(|&x| b.elements().iter().map(move |&y| x - y))
        .collect();
    let x = IntegerSet::try_new(sums)?;
    let y = IntegerSet::try_new(diffs)?;
    debug_assert_eq!(difference_multiset(&x), difference_multiset(&y));
    Some((x, y))
}
