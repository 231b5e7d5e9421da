//! Deciding non-evasiveness.
//!
//! A complex is non-evasive when it is `{∅, {v}}` for its single vertex, or
//! when it has more than one vertex and some vertex whose deletion and link
//! are both non-evasive. Complexes without vertices (`{∅}` and the void
//! complex) are not non-evasive. The decision procedure backtracks over the
//! vertex choice and memoizes on canonical forms; successful runs yield a
//! replayable certificate tree.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::set::ElemSet;

/// Default bound on the vertex count accepted by the search; the recursion
/// is exponential in the worst case.
pub const DEFAULT_VERTEX_LIMIT: usize = 20;

/// Witness that a complex is non-evasive. `Leaf` certifies the shape
/// `{∅, {v}}`; a node records the chosen vertex and certificates for its
/// deletion and link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Leaf,
    Node {
        vertex: u32,
        del: Box<Certificate>,
        link: Box<Certificate>,
    },
}

impl Certificate {
    /// The vertex choices along the leftmost spine, root first.
    pub fn spine(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut cur = self;
        while let Certificate::Node { vertex, del, .. } = cur {
            out.push(*vertex);
            cur = del;
        }
        out
    }

    fn map_vertices<F: Fn(u32) -> u32>(&self, f: &F) -> Certificate {
        match self {
            Certificate::Leaf => Certificate::Leaf,
            Certificate::Node { vertex, del, link } => Certificate::Node {
                vertex: f(*vertex),
                del: Box::new(del.map_vertices(f)),
                link: Box::new(link.map_vertices(f)),
            },
        }
    }
}

/// While the complex is small the memo is keyed on canonical forms, so
/// isomorphic subproblems are solved once and certificates are translated
/// through the canonical labeling. Past this vertex count the
/// symmetry-breaking step of canonicalization can itself blow up (highly
/// symmetric complexes refine into large unsplittable cells), so keys fall
/// back to the exact face family; commuting deletion/link orders still
/// collapse onto shared states.
const CANONICAL_MEMO_LIMIT: usize = 9;

/// Memoizing decision procedure. The memo table maps complex keys to
/// certificates; canonical keys store certificates in canonical vertex
/// positions and translate them back on retrieval.
pub struct NonEvasiveSolver {
    memo: BTreeMap<Vec<u8>, Option<Certificate>>,
    limit: usize,
}

impl Default for NonEvasiveSolver {
    fn default() -> Self {
        Self::new()
    }
}

impl NonEvasiveSolver {
    pub fn new() -> Self {
        NonEvasiveSolver {
            memo: BTreeMap::new(),
            limit: DEFAULT_VERTEX_LIMIT,
        }
    }

    /// Override the vertex-count guard.
    pub fn with_limit(limit: usize) -> Self {
        NonEvasiveSolver {
            memo: BTreeMap::new(),
            limit,
        }
    }

    /// A certificate iff the complex is non-evasive.
    pub fn is_non_evasive(&mut self, cx: &SimplicialComplex) -> Result<Option<Certificate>, Error> {
        let nv = cx.vertex_count();
        if nv > self.limit {
            return Err(Error::SizeGuard {
                limit: self.limit,
                actual: nv,
            });
        }
        Ok(self.decide(cx))
    }

    fn decide(&mut self, cx: &SimplicialComplex) -> Option<Certificate> {
        let vs = cx.vertex_mask();
        if vs.is_empty() {
            return None;
        }
        if vs.len() == 1 {
            // down-closed with one vertex means exactly {∅, {v}}
            debug_assert_eq!(cx.face_count(), 2);
            return Some(Certificate::Leaf);
        }
        let (key, order) = if vs.len() <= CANONICAL_MEMO_LIMIT {
            let (mut key, order) = cx.canonical_labeling();
            key.push(b'C');
            (key, Some(order))
        } else {
            (exact_key(cx), None)
        };
        if let Some(entry) = self.memo.get(&key) {
            return entry.as_ref().map(|stored| match &order {
                Some(order) => stored.map_vertices(&|pos| order[pos as usize]),
                None => stored.clone(),
            });
        }
        let mut found = None;
        for v in vs.iter() {
            let vmask = ElemSet::singleton(v);
            let Some(del_cert) = self.decide(&cx.deletion_mask(vmask)) else {
                continue;
            };
            let Some(link_cert) = self.decide(&cx.link_mask(vmask)) else {
                continue;
            };
            found = Some(Certificate::Node {
                vertex: cx.label_of(v),
                del: Box::new(del_cert),
                link: Box::new(link_cert),
            });
            break;
        }
        let stored = found.as_ref().map(|cert| match &order {
            Some(order) => {
                let pos_of: BTreeMap<u32, u32> = order
                    .iter()
                    .enumerate()
                    .map(|(pos, &label)| (label, pos as u32))
                    .collect();
                cert.map_vertices(&|label| pos_of[&label])
            }
            None => cert.clone(),
        });
        self.memo.insert(key, stored);
        found
    }
}

/// Identity key for large complexes: the face family as label sets.
fn exact_key(cx: &SimplicialComplex) -> Vec<u8> {
    let mut out = Vec::with_capacity(cx.face_count() * 10 + 2);
    out.push(b'E');
    for face in cx.faces() {
        out.extend_from_slice(&(face.len() as u32).to_le_bytes());
        for label in face {
            out.extend_from_slice(&label.to_le_bytes());
        }
    }
    out
}

/// One-shot decision with a fresh memo table and the default guard.
pub fn is_non_evasive(cx: &SimplicialComplex) -> Result<Option<Certificate>, Error> {
    NonEvasiveSolver::new().is_non_evasive(cx)
}

/// Reference implementation without memoization; same vertex order, so it
/// must agree with the memoized search on every input.
pub fn is_non_evasive_nomemo(cx: &SimplicialComplex) -> Result<Option<Certificate>, Error> {
    let nv = cx.vertex_count();
    if nv > DEFAULT_VERTEX_LIMIT {
        return Err(Error::SizeGuard {
            limit: DEFAULT_VERTEX_LIMIT,
            actual: nv,
        });
    }
    Ok(decide_nomemo(cx))
}

fn decide_nomemo(cx: &SimplicialComplex) -> Option<Certificate> {
    let vs = cx.vertex_mask();
    if vs.is_empty() {
        return None;
    }
    if vs.len() == 1 {
        return Some(Certificate::Leaf);
    }
    for v in vs.iter() {
        let vmask = ElemSet::singleton(v);
        if let Some(del) = decide_nomemo(&cx.deletion_mask(vmask)) {
            if let Some(link) = decide_nomemo(&cx.link_mask(vmask)) {
                return Some(Certificate::Node {
                    vertex: cx.label_of(v),
                    del: Box::new(del),
                    link: Box::new(link),
                });
            }
        }
    }
    None
}

/// Replays a certificate against the definition; false on any mismatch.
pub fn verify_certificate(cx: &SimplicialComplex, cert: &Certificate) -> bool {
    match cert {
        Certificate::Leaf => cx.vertex_count() == 1 && cx.face_count() == 2,
        Certificate::Node { vertex, del, link } => {
            let Some(v) = cx.index_of(*vertex) else {
                return false;
            };
            let vmask = ElemSet::singleton(v);
            if !cx.face_masks().contains(&vmask) || cx.vertex_count() <= 1 {
                return false;
            }
            verify_certificate(&cx.deletion_mask(vmask), del)
                && verify_certificate(&cx.link_mask(vmask), link)
        }
    }
}

/// Partition sufficiency test: with `U = V ∖ W`, the complex is non-evasive
/// if `star(σ)|U` is non-evasive for every face `σ` of `Σ|W`. A true result
/// certifies non-evasiveness; false is inconclusive.
pub fn baclawski_partition_test(
    solver: &mut NonEvasiveSolver,
    cx: &SimplicialComplex,
    w: &[u32],
) -> Result<bool, Error> {
    if cx.is_void() {
        return Err(Error::EmptyComplex);
    }
    let vmask = cx.vertex_mask();
    let mut w_mask = ElemSet::EMPTY;
    for &label in w {
        match cx.index_of(label) {
            Some(i) if vmask.contains(i) => w_mask.insert(i),
            _ => return Err(Error::LabelNotInComplex { label }),
        }
    }
    let u_mask = vmask - w_mask;
    let sigmas: Vec<ElemSet> = cx
        .restrict_mask(w_mask)
        .face_masks()
        .iter()
        .copied()
        .collect();
    for sigma in sigmas {
        let piece = cx.star_mask(sigma).restrict_mask(u_mask);
        if solver.is_non_evasive(&piece)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(feature = "serde")]
mod serde_impls {
    use super::Certificate;
    use alloc::boxed::Box;
    use core::fmt;
    use serde::de::{self, MapAccess, Visitor};
    use serde::ser::SerializeMap;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    // A certificate serializes as the string "leaf" or as
    // {"vertex": label, "del": <cert>, "link": <cert>}.
    impl Serialize for Certificate {
        fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
            match self {
                Certificate::Leaf => serializer.serialize_str("leaf"),
                Certificate::Node { vertex, del, link } => {
                    let mut map = serializer.serialize_map(Some(3))?;
                    map.serialize_entry("vertex", vertex)?;
                    map.serialize_entry("del", del)?;
                    map.serialize_entry("link", link)?;
                    map.end()
                }
            }
        }
    }

    impl<'de> Deserialize<'de> for Certificate {
        fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
            deserializer.deserialize_any(CertVisitor)
        }
    }

    struct CertVisitor;

    impl<'de> Visitor<'de> for CertVisitor {
        type Value = Certificate;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("\"leaf\" or a map with vertex/del/link")
        }

        fn visit_str<E: de::Error>(self, s: &str) -> Result<Certificate, E> {
            if s == "leaf" {
                Ok(Certificate::Leaf)
            } else {
                Err(E::invalid_value(de::Unexpected::Str(s), &self))
            }
        }

        fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Certificate, A::Error> {
            let mut vertex: Option<u32> = None;
            let mut del: Option<Certificate> = None;
            let mut link: Option<Certificate> = None;
            while let Some(key) = map.next_key::<alloc::string::String>()? {
                match key.as_str() {
                    "vertex" => vertex = Some(map.next_value()?),
                    "del" => del = Some(map.next_value()?),
                    "link" => link = Some(map.next_value()?),
                    other => {
                        return Err(de::Error::unknown_field(other, &["vertex", "del", "link"]))
                    }
                }
            }
            Ok(Certificate::Node {
                vertex: vertex.ok_or_else(|| de::Error::missing_field("vertex"))?,
                del: Box::new(del.ok_or_else(|| de::Error::missing_field("del"))?),
                link: Box::new(link.ok_or_else(|| de::Error::missing_field("link"))?),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn two_points() -> SimplicialComplex {
        SimplicialComplex::new(&[0, 1], &[vec![], vec![0], vec![1]]).unwrap()
    }

    fn interval() -> SimplicialComplex {
        SimplicialComplex::new(&[0, 1], &[vec![], vec![0], vec![1], vec![0, 1]]).unwrap()
    }

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::new_closed(&[0, 1, 2], &[vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap()
            .0
    }

    fn full_simplex(n: u32) -> SimplicialComplex {
        let top: Vec<u32> = (0..n).collect();
        let universe = top.clone();
        SimplicialComplex::new_closed(&universe, &[top]).unwrap().0
    }

    #[test]
    fn two_points_are_evasive() {
        assert_eq!(is_non_evasive(&two_points()).unwrap(), None);
    }

    #[test]
    fn interval_is_non_evasive_choosing_zero() {
        let cert = is_non_evasive(&interval()).unwrap().unwrap();
        assert_eq!(
            cert,
            Certificate::Node {
                vertex: 0,
                del: Box::new(Certificate::Leaf),
                link: Box::new(Certificate::Leaf),
            }
        );
        assert!(verify_certificate(&interval(), &cert));
    }

    #[test]
    fn triangle_boundary_is_evasive() {
        assert_eq!(is_non_evasive(&triangle_boundary()).unwrap(), None);
    }

    #[test]
    fn vertexless_complexes_are_evasive() {
        let voidful = SimplicialComplex::new(&[], &[vec![]]).unwrap();
        assert_eq!(is_non_evasive(&voidful).unwrap(), None);
        assert_eq!(is_non_evasive(&SimplicialComplex::void()).unwrap(), None);
        // single vertex: exactly {∅, {v}} is accepted
        let leaf = SimplicialComplex::new(&[7], &[vec![], vec![7]]).unwrap();
        assert_eq!(is_non_evasive(&leaf).unwrap(), Some(Certificate::Leaf));
    }

    #[test]
    fn verifier_rejects_wrong_shapes() {
        // |V| = 2 is not leaf-shaped
        assert!(!verify_certificate(&interval(), &Certificate::Leaf));
        // unknown vertex
        let bogus = Certificate::Node {
            vertex: 9,
            del: Box::new(Certificate::Leaf),
            link: Box::new(Certificate::Leaf),
        };
        assert!(!verify_certificate(&interval(), &bogus));
    }

    #[test]
    fn full_simplex_certificates_replay() {
        for n in 1..=5 {
            let cx = full_simplex(n);
            let cert = is_non_evasive(&cx).unwrap().unwrap();
            assert!(verify_certificate(&cx, &cert), "n={n}");
        }
        // any fixed vertex order certifies a full simplex: both children
        // of a choice are again full simplices
        let descending = Certificate::Node {
            vertex: 2,
            del: Box::new(Certificate::Node {
                vertex: 1,
                del: Box::new(Certificate::Leaf),
                link: Box::new(Certificate::Leaf),
            }),
            link: Box::new(Certificate::Node {
                vertex: 1,
                del: Box::new(Certificate::Leaf),
                link: Box::new(Certificate::Leaf),
            }),
        };
        assert!(verify_certificate(&full_simplex(3), &descending));
    }

    #[test]
    fn guard_trips_and_can_be_overridden() {
        let cx = full_simplex(4);
        let mut strict = NonEvasiveSolver::with_limit(3);
        assert_eq!(
            strict.is_non_evasive(&cx),
            Err(Error::SizeGuard {
                limit: 3,
                actual: 4
            })
        );
        let mut relaxed = NonEvasiveSolver::with_limit(4);
        assert!(relaxed.is_non_evasive(&cx).unwrap().is_some());
    }

    #[test]
    fn partition_test_examples() {
        let mut solver = NonEvasiveSolver::new();
        // W = ∅ reduces to plain non-evasiveness
        assert!(baclawski_partition_test(&mut solver, &interval(), &[]).unwrap());
        assert!(!baclawski_partition_test(&mut solver, &two_points(), &[]).unwrap());
        // two-point complex with W = {1}: σ = {1} gives star({1})|{0} = {∅}
        assert!(!baclawski_partition_test(&mut solver, &two_points(), &[1]).unwrap());
        // bad W
        assert_eq!(
            baclawski_partition_test(&mut solver, &interval(), &[5]),
            Err(Error::LabelNotInComplex { label: 5 })
        );
        assert_eq!(
            baclawski_partition_test(&mut solver, &SimplicialComplex::void(), &[]),
            Err(Error::EmptyComplex)
        );
    }

    #[test]
    fn memoized_solver_translates_certificates() {
        let mut solver = NonEvasiveSolver::new();
        let tri = full_simplex(3);
        let c1 = solver.is_non_evasive(&tri).unwrap().unwrap();
        assert!(verify_certificate(&tri, &c1));
        // an isomorphic copy on different labels hits the memo
        let copy = tri.relabel(|l| l + 40).unwrap();
        let c2 = solver.is_non_evasive(&copy).unwrap().unwrap();
        assert!(verify_certificate(&copy, &c2));
    }

    #[cfg(feature = "serde")]
    #[test]
    fn certificate_json_shape() {
        let cert = Certificate::Node {
            vertex: 0,
            del: Box::new(Certificate::Leaf),
            link: Box::new(Certificate::Leaf),
        };
        let text = serde_json::to_string(&cert).unwrap();
        assert_eq!(text, r#"{"vertex":0,"del":"leaf","link":"leaf"}"#);
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(
            serde_json::to_string(&Certificate::Leaf).unwrap(),
            "\"leaf\""
        );
        assert!(serde_json::from_str::<Certificate>("\"stem\"").is_err());
        assert!(serde_json::from_str::<Certificate>(r#"{"vertex":0}"#).is_err());
    }
}
