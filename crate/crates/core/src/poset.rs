//! Finite posets on dense element ids and the order-theoretic primitives:
//! up/down-sets, bounds, partial meets and joins, covers, irreducibility,
//! duals, induced subposets, and a canonical form for isomorphism-class
//! deduplication.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::set::{ElemSet, MAX_ELEMENTS};

/// A finite poset on elements `0..n`. The relation is stored as per-element
/// up-set and down-set bitsets, so every comparison and set operation is a
/// couple of word ops.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    up: Vec<ElemSet>,   // up[a] = { b | a <= b }
    down: Vec<ElemSet>, // down[a] = { w | w <= a }
}

/// Id translation table produced by [`FinitePoset::induced_subposet`].
/// Sub-poset ids are dense `0..k` in ascending order of the parent ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdRemap {
    new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl IdRemap {
    pub fn to_parent(&self, new_id: usize) -> usize {
        self.new_to_old[new_id]
    }

    pub fn to_sub(&self, old_id: usize) -> Option<usize> {
        self.old_to_new.get(old_id).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.new_to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.new_to_old.is_empty()
    }

    /// Translate a set of sub-poset ids back to parent ids.
    pub fn set_to_parent(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|e| self.to_parent(e)).collect()
    }

    /// Translate a set of parent ids into the sub-poset, if fully contained.
    pub fn set_to_sub(&self, s: ElemSet) -> Option<ElemSet> {
        let mut out = ElemSet::EMPTY;
        for e in s.iter() {
            out.insert(self.to_sub(e)?);
        }
        Some(out)
    }
}

/// Non-fatal issue noticed while building a poset from listed cover pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverWarning {
    /// The pair is implied by the others and is not a covering pair of the
    /// resulting order; it was folded into the closure.
    RedundantPair { lower: usize, upper: usize },
    /// The same pair was listed more than once.
    DuplicatePair { lower: usize, upper: usize },
}

impl FinitePoset {
    /// Build a poset from an explicit `leq` relation, validating the axioms.
    pub fn from_leq<F: Fn(usize, usize) -> bool>(n: usize, leq: F) -> Result<Self, Error> {
        if n > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge {
                max: MAX_ELEMENTS,
                actual: n,
            });
        }
        let mut up = vec![ElemSet::EMPTY; n];
        let mut down = vec![ElemSet::EMPTY; n];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::InvalidOrder { a, b: a });
            }
            for b in 0..n {
                if a != b && up[a].contains(b) {
                    if up[b].contains(a) {
                        return Err(Error::InvalidOrder { a, b });
                    }
                    // transitivity: up[b] must sit inside up[a]
                    if !up[b].is_subset_of(up[a]) {
                        let c = (up[b] - up[a]).first().unwrap();
                        return Err(Error::InvalidOrder { a: b, b: c });
                    }
                }
            }
        }
        Ok(FinitePoset { n, up, down })
    }

    /// Build the reflexive-transitive closure of a cover digraph.
    ///
    /// Rejects cyclic input. Pairs that turn out not to be covering pairs of
    /// the closure (redundant or duplicated edges) are accepted and reported
    /// in the warning list.
    pub fn from_cover_relations(
        n: usize,
        covers: &[(usize, usize)],
    ) -> Result<(Self, Vec<CoverWarning>), Error> {
        if n > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge {
                max: MAX_ELEMENTS,
                actual: n,
            });
        }
        for &(a, b) in covers {
            if a >= n {
                return Err(Error::ElementOutOfRange { id: a, n });
            }
            if b >= n {
                return Err(Error::ElementOutOfRange { id: b, n });
            }
            if a == b {
                return Err(Error::InvalidOrder { a, b });
            }
        }
        // Warshall closure over the cover digraph.
        let mut up = vec![ElemSet::EMPTY; n];
        for a in 0..n {
            up[a].insert(a);
        }
        for &(a, b) in covers {
            up[a].insert(b);
        }
        for k in 0..n {
            for a in 0..n {
                if up[a].contains(k) {
                    up[a] = up[a] | up[k];
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if a != b && up[b].contains(a) {
                    return Err(Error::InvalidOrder { a, b });
                }
            }
        }
        let mut down = vec![ElemSet::EMPTY; n];
        for a in 0..n {
            for b in up[a].iter() {
                down[b].insert(a);
            }
        }
        let poset = FinitePoset { n, up, down };
        let mut warnings = Vec::new();
        let mut seen = Vec::new();
        for &(a, b) in covers {
            if seen.contains(&(a, b)) {
                warnings.push(CoverWarning::DuplicatePair { lower: a, upper: b });
                continue;
            }
            seen.push((a, b));
            if !poset.is_cover(a, b) {
                warnings.push(CoverWarning::RedundantPair { lower: a, upper: b });
            }
        }
        Ok((poset, warnings))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    fn check_element(&self, id: usize) -> Result<(), Error> {
        if id < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { id, n: self.n })
        }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        debug_assert!(a < self.n && b < self.n);
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{ w | x <= w }`
    pub fn up_set(&self, x: usize) -> ElemSet {
        self.up[x]
    }

    /// `{ w | w <= x }`
    pub fn down_set(&self, x: usize) -> ElemSet {
        self.down[x]
    }

    /// Common upper bounds of a nonempty set.
    pub fn upper_bounds(&self, s: ElemSet) -> Result<ElemSet, Error> {
        let mut iter = s.iter();
        let first = iter.next().ok_or(Error::EmptySet)?;
        self.check_element(first)?;
        let mut acc = self.up[first];
        for q in iter {
            self.check_element(q)?;
            acc = acc & self.up[q];
        }
        Ok(acc)
    }

    /// Common lower bounds of a nonempty set.
    pub fn lower_bounds(&self, s: ElemSet) -> Result<ElemSet, Error> {
        let mut iter = s.iter();
        let first = iter.next().ok_or(Error::EmptySet)?;
        self.check_element(first)?;
        let mut acc = self.down[first];
        for q in iter {
            self.check_element(q)?;
            acc = acc & self.down[q];
        }
        Ok(acc)
    }

    /// Greatest element of a set, if one exists.
    pub fn greatest(&self, s: ElemSet) -> Option<usize> {
        s.iter().find(|&g| s.is_subset_of(self.down[g]))
    }

    /// Least element of a set, if one exists.
    pub fn least(&self, s: ElemSet) -> Option<usize> {
        s.iter().find(|&l| s.is_subset_of(self.up[l]))
    }

    /// Greatest lower bound of `a` and `b`; absence is a value, not an error.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.greatest(self.down[a] & self.down[b])
    }

    /// Least upper bound of `a` and `b`.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.least(self.up[a] & self.up[b])
    }

    /// Greatest lower bound of a nonempty set.
    pub fn meet_set(&self, s: ElemSet) -> Result<Option<usize>, Error> {
        Ok(self.greatest(self.lower_bounds(s)?))
    }

    /// Least upper bound of a nonempty set.
    pub fn join_set(&self, s: ElemSet) -> Result<Option<usize>, Error> {
        Ok(self.least(self.upper_bounds(s)?))
    }

    /// `x` is a lower cover of `y`: `x < y` with nothing strictly between.
    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && (self.up[x] & self.down[y]).len() == 2
    }

    pub fn lower_covers(&self, y: usize) -> ElemSet {
        self.down[y]
            .iter()
            .filter(|&x| self.is_cover(x, y))
            .collect()
    }

    pub fn upper_covers(&self, x: usize) -> ElemSet {
        self.up[x].iter().filter(|&y| self.is_cover(x, y)).collect()
    }

    /// Irreducible: unique lower cover or unique upper cover.
    pub fn is_irreducible(&self, x: usize) -> bool {
        self.lower_covers(x).len() == 1 || self.upper_covers(x).len() == 1
    }

    /// All covering pairs `(lower, upper)`, lexicographic.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.upper_covers(x).iter() {
                out.push((x, y));
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> ElemSet {
        (0..self.n).filter(|&x| self.down[x].len() == 1).collect()
    }

    pub fn maximal_elements(&self) -> ElemSet {
        (0..self.n).filter(|&x| self.up[x].len() == 1).collect()
    }

    /// Order restricted to a nonempty subset, with the id translation table.
    pub fn induced_subposet(&self, s: ElemSet) -> Result<(FinitePoset, IdRemap), Error> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if !s.is_subset_of(self.full_set()) {
            let id = (s - self.full_set()).first().unwrap();
            return Err(Error::ElementOutOfRange { id, n: self.n });
        }
        let new_to_old: Vec<usize> = s.iter().collect();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let k = new_to_old.len();
        let mut up = vec![ElemSet::EMPTY; k];
        let mut down = vec![ElemSet::EMPTY; k];
        for (a_new, &a_old) in new_to_old.iter().enumerate() {
            for b_old in (self.up[a_old] & s).iter() {
                let b_new = old_to_new[b_old].unwrap();
                up[a_new].insert(b_new);
                down[b_new].insert(a_new);
            }
        }
        Ok((
            FinitePoset { n: k, up, down },
            IdRemap {
                new_to_old,
                old_to_new,
            },
        ))
    }

    /// Same elements, relation reversed.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Pairwise comparability; the empty set is a chain.
    pub fn is_chain(&self, s: ElemSet) -> bool {
        let members: Vec<usize> = s.iter().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !self.comparable(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Members of `s` sorted ascending by the order (only valid for chains).
    pub fn sort_chain(&self, s: ElemSet) -> Vec<usize> {
        let mut members: Vec<usize> = s.iter().collect();
        members.sort_by_key(|&x| self.down[x].len());
        members
    }

    /// Length of the longest strict chain below each element (0 for minimal).
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| self.down[x].len());
        let mut h = vec![0usize; self.n];
        for &x in &order {
            for w in self.down[x].iter() {
                if w != x {
                    h[x] = h[x].max(h[w] + 1);
                }
            }
        }
        h
    }

    /// Canonical key: equal for two posets iff they are isomorphic.
    pub fn canonical_form(&self) -> Vec<u8> {
        self.canonical_labeling().0
    }

    /// Canonical key plus the relabeling that realizes it:
    /// `perm[element] = canonical position`.
    ///
    /// The key is the lexicographically minimal relation encoding over all
    /// labelings compatible with an iterated structural refinement. The
    /// refinement assigns each element a color from (down-set size, up-set
    /// size, height, depth, cover counts) and then from the multiset of
    /// (relation, color) pairs against all other elements; remaining
    /// symmetry is broken by backtracking with prefix pruning.
    pub fn canonical_labeling(&self) -> (Vec<u8>, Vec<usize>) {
        let n = self.n;
        if n == 0 {
            return (vec![0], Vec::new());
        }
        let colors = self.refined_colors();
        let mut search = CanonSearch {
            poset: self,
            colors: &colors,
            placed: Vec::with_capacity(n),
            used: ElemSet::EMPTY,
            prefix: Vec::with_capacity(n * (n - 1) / 2),
            best: None,
            best_perm: Vec::new(),
            generation: 0,
        };
        search.dfs(CmpState::Unknown);
        let mut key = Vec::with_capacity(1 + n * (n - 1) / 2);
        key.push(n as u8);
        key.extend_from_slice(&search.best.unwrap());
        let order = search.best_perm; // order[position] = element
        let mut perm = vec![0usize; n];
        for (pos, &e) in order.iter().enumerate() {
            perm[e] = pos;
        }
        (key, perm)
    }

    fn refined_colors(&self) -> Vec<usize> {
        let n = self.n;
        let heights = self.heights();
        let depths = self.dual().heights();
        let initial: Vec<(usize, usize, usize, usize, usize, usize)> = (0..n)
            .map(|x| {
                (
                    self.down[x].len(),
                    self.up[x].len(),
                    heights[x],
                    depths[x],
                    self.lower_covers(x).len(),
                    self.upper_covers(x).len(),
                )
            })
            .collect();
        let mut sorted = initial.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let mut colors: Vec<usize> = (0..n)
            .map(|x| sorted.binary_search(&initial[x]).unwrap())
            .collect();
        // Refine by the multiset of (relation, color) pairs until stable.
        // Old color leads the signature, so classes only ever split; the
        // loop reaches a fixpoint in at most n rounds.
        loop {
            let mut table: BTreeMap<(usize, Vec<(u8, usize)>), Vec<usize>> = BTreeMap::new();
            for x in 0..n {
                let mut rels: Vec<(u8, usize)> = (0..n)
                    .filter(|&y| y != x)
                    .map(|y| {
                        let rel = if self.lt(x, y) {
                            0
                        } else if self.lt(y, x) {
                            1
                        } else {
                            2
                        };
                        (rel, colors[y])
                    })
                    .collect();
                rels.sort_unstable();
                table.entry((colors[x], rels)).or_default().push(x);
            }
            let mut next = vec![0usize; n];
            for (rank, (_, members)) in table.into_iter().enumerate() {
                for x in members {
                    next[x] = rank;
                }
            }
            if next == colors {
                return colors;
            }
            colors = next;
        }
    }

    /// Brute-force isomorphism test over all bijections. Exponential; only
    /// sensible for very small posets and used as a cross-check oracle.
    pub fn is_isomorphic_brute(&self, other: &FinitePoset) -> bool {
        if self.n != other.n {
            return false;
        }
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        permute_check(self, other, &mut perm, 0)
    }
}

fn permute_check(p: &FinitePoset, q: &FinitePoset, perm: &mut Vec<usize>, k: usize) -> bool {
    let n = perm.len();
    if k == n {
        return (0..n).all(|a| (0..n).all(|b| p.leq(a, b) == q.leq(perm[a], perm[b])));
    }
    for i in k..n {
        perm.swap(k, i);
        // partial consistency against already-fixed images
        let ok = (0..=k).all(|a| {
            p.leq(a, k) == q.leq(perm[a], perm[k]) && p.leq(k, a) == q.leq(perm[k], perm[a])
        });
        if ok && permute_check(p, q, perm, k + 1) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

struct CanonSearch<'a> {
    poset: &'a FinitePoset,
    colors: &'a [usize],
    placed: Vec<usize>,
    used: ElemSet,
    prefix: Vec<u8>,
    best: Option<Vec<u8>>,
    best_perm: Vec<usize>,
    generation: u64,
}

impl CanonSearch<'_> {
    /// `state` is the cumulative ordering of `prefix` against the incumbent
    /// best code over the same length. Whenever the incumbent changes inside
    /// a child call, the path to the current node is by construction a
    /// prefix of the new best, so remaining siblings resume from `Equal`.
    fn dfs(&mut self, state_in: CmpState) {
        let n = self.poset.len();
        if self.placed.len() == n {
            if state_in != CmpState::Equal || self.best.is_none() {
                self.best = Some(self.prefix.clone());
                self.best_perm = self.placed.clone();
                self.generation += 1;
            }
            return;
        }
        // candidates: unused elements of the lowest remaining color class
        let min_color = (0..n)
            .filter(|&x| !self.used.contains(x))
            .map(|x| self.colors[x])
            .min()
            .unwrap();
        let candidates: Vec<usize> = (0..n)
            .filter(|&x| !self.used.contains(x) && self.colors[x] == min_color)
            .collect();
        let mut tried: Vec<usize> = Vec::new();
        let mut state = state_in;
        for &e in &candidates {
            if tried.iter().any(|&t| self.swap_is_automorphism(t, e)) {
                continue;
            }
            tried.push(e);
            let mut step = Vec::with_capacity(self.placed.len());
            for &p in &self.placed {
                step.push(((self.poset.leq(e, p) as u8) << 1) | self.poset.leq(p, e) as u8);
            }
            let child_state = match state {
                CmpState::Unknown => CmpState::Unknown,
                CmpState::Less => CmpState::Less,
                CmpState::Equal => {
                    let start = self.prefix.len();
                    let best = self.best.as_ref().unwrap();
                    match step.as_slice().cmp(&best[start..start + step.len()]) {
                        core::cmp::Ordering::Greater => continue,
                        core::cmp::Ordering::Less => CmpState::Less,
                        core::cmp::Ordering::Equal => CmpState::Equal,
                    }
                }
            };
            let saved = self.prefix.len();
            self.prefix.extend_from_slice(&step);
            self.placed.push(e);
            self.used.insert(e);
            let gen_before = self.generation;
            self.dfs(child_state);
            self.used.remove(e);
            self.placed.pop();
            self.prefix.truncate(saved);
            if self.generation != gen_before {
                state = CmpState::Equal;
            }
        }
    }

    /// Whether exchanging `a` and `b` is an automorphism of the poset.
    fn swap_is_automorphism(&self, a: usize, b: usize) -> bool {
        let p = self.poset;
        if p.leq(a, b) || p.leq(b, a) {
            return false;
        }
        let pair = ElemSet::singleton(a) | ElemSet::singleton(b);
        p.up[a] - pair == p.up[b] - pair && p.down[a] - pair == p.down[b] - pair
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CmpState {
    /// No complete labeling seen yet.
    Unknown,
    /// Prefix already strictly below the incumbent best.
    Less,
    /// Prefix equal to the incumbent best so far.
    Equal,
}

impl core::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "FinitePoset(n={}, covers={:?})",
            self.n,
            self.cover_pairs()
        )
    }
}
