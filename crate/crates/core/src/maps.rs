//! Order-preserving self-maps of a poset and the connectivity oracle on the
//! pointwise comparability graph of the map poset.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poset::FinitePoset;

/// Guard for enumerating all order-preserving self-maps: `|P^P|` grows as
/// `n^n`, so the enumeration is restricted to tiny posets.
pub const MAP_ENUMERATION_LIMIT: usize = 6;

/// A total assignment element → element, order-preserving by construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PosetMap {
    values: Vec<usize>,
}

impl PosetMap {
    pub fn new(poset: &FinitePoset, values: Vec<usize>) -> Result<Self, Error> {
        if values.len() != poset.len() {
            return Err(Error::BadParameter("map must assign every element"));
        }
        for &v in &values {
            if v >= poset.len() {
                return Err(Error::ElementOutOfRange {
                    id: v,
                    n: poset.len(),
                });
            }
        }
        let map = PosetMap { values };
        if map.is_order_preserving(poset) {
            Ok(map)
        } else {
            Err(Error::BadParameter("map is not order-preserving"))
        }
    }

    pub fn identity(poset: &FinitePoset) -> Self {
        PosetMap {
            values: (0..poset.len()).collect(),
        }
    }

    pub fn constant(poset: &FinitePoset, p: usize) -> Result<Self, Error> {
        if p >= poset.len() {
            return Err(Error::ElementOutOfRange {
                id: p,
                n: poset.len(),
            });
        }
        Ok(PosetMap {
            values: vec![p; poset.len()],
        })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_order_preserving(&self, poset: &FinitePoset) -> bool {
        for a in poset.elements() {
            for b in poset.up_set(a).iter() {
                if !poset.leq(self.values[a], self.values[b]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// Pointwise `self ≤ other`.
    pub fn leq_pointwise(&self, other: &PosetMap, poset: &FinitePoset) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| poset.leq(a, b))
    }
}

/// Every order-preserving self-map, in lexicographic order of the value
/// vectors. Errors on posets past [`MAP_ENUMERATION_LIMIT`].
pub fn all_order_preserving_maps(poset: &FinitePoset) -> Result<Vec<PosetMap>, Error> {
    let n = poset.len();
    if n > MAP_ENUMERATION_LIMIT {
        return Err(Error::SizeGuard {
            limit: MAP_ENUMERATION_LIMIT,
            actual: n,
        });
    }
    let mut out = Vec::new();
    let mut values = vec![0usize; n];
    enumerate(poset, &mut values, 0, &mut out);
    Ok(out)
}

fn enumerate(poset: &FinitePoset, values: &mut Vec<usize>, k: usize, out: &mut Vec<PosetMap>) {
    let n = poset.len();
    if k == n {
        out.push(PosetMap {
            values: values.clone(),
        });
        return;
    }
    'candidates: for v in 0..n {
        for a in 0..k {
            if poset.leq(a, k) && !poset.leq(values[a], v) {
                continue 'candidates;
            }
            if poset.leq(k, a) && !poset.leq(v, values[a]) {
                continue 'candidates;
            }
        }
        values[k] = v;
        enumerate(poset, values, k + 1, out);
    }
}

/// Whether the identity map reaches some constant map in the comparability
/// graph of `P^P` (maps adjacent when pointwise comparable).
pub fn identity_connected_to_constant(poset: &FinitePoset) -> Result<bool, Error> {
    if poset.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let maps = all_order_preserving_maps(poset)?;
    let id = PosetMap::identity(poset);
    let id_index = maps
        .binary_search(&id)
        .expect("identity is order-preserving");
    let mut visited = vec![false; maps.len()];
    let mut queue = vec![id_index];
    visited[id_index] = true;
    while let Some(i) = queue.pop() {
        if maps[i].is_constant() {
            return Ok(true);
        }
        for (j, other) in maps.iter().enumerate() {
            if !visited[j]
                && (maps[i].leq_pointwise(other, poset) || other.leq_pointwise(&maps[i], poset))
            {
                visited[j] = true;
                queue.push(j);
            }
        }
    }
    Ok(false)
}
