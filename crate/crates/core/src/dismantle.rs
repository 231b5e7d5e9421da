//! Dismantlability by irreducibles: backtracking decision procedure with
//! certificate sequences, a greedy fast path, and a sequence verifier.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poset::FinitePoset;
use crate::set::ElemSet;

/// An elimination order `[p_1, .., p_n]`: the last entry is removed first
/// and each `p_i` (for `i >= 2`) is irreducible in the subposet
/// `{p_1, .., p_i}`. `p_1` is the single element left at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DismantlingSequence {
    pub order: Vec<usize>,
}

/// Backtracking search with a memo table keyed on canonical forms, so
/// isomorphic sub-searches are solved once. Sequences are stored in
/// canonical labels and translated back on retrieval.
#[derive(Default)]
pub struct DismantleSolver {
    memo: BTreeMap<Vec<u8>, Option<Vec<usize>>>,
}

impl DismantleSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// A valid elimination order if one exists.
    pub fn dismantling_sequence(
        &mut self,
        poset: &FinitePoset,
    ) -> Result<Option<DismantlingSequence>, Error> {
        if poset.is_empty() {
            return Err(Error::EmptyPoset);
        }
        Ok(self
            .search(poset)
            .map(|order| DismantlingSequence { order }))
    }

    pub fn is_dismantlable(&mut self, poset: &FinitePoset) -> Result<bool, Error> {
        Ok(self.dismantling_sequence(poset)?.is_some())
    }

    fn search(&mut self, poset: &FinitePoset) -> Option<Vec<usize>> {
        let n = poset.len();
        if n == 1 {
            return Some(vec![0]);
        }
        let (key, perm) = poset.canonical_labeling();
        if let Some(entry) = self.memo.get(&key) {
            return entry.as_ref().map(|canon_seq| {
                let mut inv = vec![0usize; n];
                for (element, &pos) in perm.iter().enumerate() {
                    inv[pos] = element;
                }
                canon_seq.iter().map(|&pos| inv[pos]).collect()
            });
        }
        let mut result = None;
        for x in poset.elements() {
            if !poset.is_irreducible(x) {
                continue;
            }
            let rest = poset.full_set().without(x);
            let (sub, remap) = poset.induced_subposet(rest).expect("nonempty remainder");
            if let Some(sub_seq) = self.search(&sub) {
                let mut order: Vec<usize> = sub_seq.iter().map(|&e| remap.to_parent(e)).collect();
                order.push(x);
                result = Some(order);
                break;
            }
        }
        let canon = result
            .as_ref()
            .map(|order| order.iter().map(|&e| perm[e]).collect());
        self.memo.insert(key, canon);
        result
    }
}

/// Convenience wrapper with a throwaway memo table.
pub fn dismantling_sequence(poset: &FinitePoset) -> Result<Option<DismantlingSequence>, Error> {
    DismantleSolver::new().dismantling_sequence(poset)
}

pub fn is_dismantlable(poset: &FinitePoset) -> Result<bool, Error> {
    DismantleSolver::new().is_dismantlable(poset)
}

/// Greedy variant: always removes the lowest-id irreducible element. Fast,
/// but not definition-faithful a priori; cross-checked against the
/// backtracking search in the test suites before being trusted.
pub fn greedy_dismantling_sequence(
    poset: &FinitePoset,
) -> Result<Option<DismantlingSequence>, Error> {
    if poset.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let mut remaining = poset.full_set();
    let mut removed = Vec::new();
    while remaining.len() > 1 {
        let (sub, remap) = poset.induced_subposet(remaining)?;
        let Some(x) = sub.elements().find(|&x| sub.is_irreducible(x)) else {
            return Ok(None);
        };
        let parent = remap.to_parent(x);
        remaining.remove(parent);
        removed.push(parent);
    }
    let mut order = vec![remaining.first().unwrap()];
    order.extend(removed.iter().rev());
    Ok(Some(DismantlingSequence { order }))
}

/// Replays a claimed elimination order against the definition.
pub fn verify_dismantling_sequence(
    poset: &FinitePoset,
    seq: &DismantlingSequence,
) -> Result<bool, Error> {
    let n = poset.len();
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    let mut seen = ElemSet::EMPTY;
    for &e in &seq.order {
        if e >= n || seen.contains(e) {
            return Err(Error::NotAPermutation);
        }
        seen.insert(e);
    }
    if seq.order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut remaining = poset.full_set();
    for i in (1..n).rev() {
        let x = seq.order[i];
        let (sub, remap) = poset.induced_subposet(remaining)?;
        let x_sub = remap.to_sub(x).expect("member of the remaining set");
        if !sub.is_irreducible(x_sub) {
            return Ok(false);
        }
        remaining.remove(x);
    }
    Ok(true)
}
