//! Finite abstract simplicial complexes as explicit down-closed face
//! families, with the order-complex construction and the deletion / star /
//! link / restriction operations.
//!
//! Conventions: the empty set is a face of every nonempty complex, and the
//! complex `{∅}` (no vertices, one face) is distinct from the complex with
//! no faces at all. Equality compares face families as sets of label sets,
//! ignoring universe labels that appear in no face.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poset::FinitePoset;
use crate::set::{ElemSet, MAX_ELEMENTS};

/// A simplicial complex over a finite universe of `u32` labels. Faces are
/// stored as bitsets over positions in the sorted label table.
#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Vec<u32>,
    faces: BTreeSet<ElemSet>,
}

impl SimplicialComplex {
    /// Build from explicit faces, validating down-closure.
    pub fn new(universe: &[u32], faces: &[Vec<u32>]) -> Result<Self, Error> {
        let mut labels: Vec<u32> = universe.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge {
                max: MAX_ELEMENTS,
                actual: labels.len(),
            });
        }
        let mut masks = BTreeSet::new();
        for face in faces {
            masks.insert(face_mask(&labels, face)?);
        }
        let complex = SimplicialComplex {
            labels,
            faces: masks,
        };
        if !complex.is_down_closed() {
            return Err(Error::FaceNotInComplex);
        }
        Ok(complex)
    }

    /// Build from face generators, closing downward. The flag reports
    /// whether the input was already down-closed.
    pub fn new_closed(universe: &[u32], generators: &[Vec<u32>]) -> Result<(Self, bool), Error> {
        let mut labels: Vec<u32> = universe.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge {
                max: MAX_ELEMENTS,
                actual: labels.len(),
            });
        }
        let mut masks = BTreeSet::new();
        for face in generators {
            masks.insert(face_mask(&labels, face)?);
        }
        let before = masks.len();
        let mut stack: Vec<ElemSet> = masks.iter().copied().collect();
        while let Some(f) = stack.pop() {
            for v in f.iter() {
                let sub = f.without(v);
                if masks.insert(sub) {
                    stack.push(sub);
                }
            }
        }
        let was_closed = masks.len() == before;
        Ok((
            SimplicialComplex {
                labels,
                faces: masks,
            },
            was_closed,
        ))
    }

    /// The complex with no faces at all (over an empty universe).
    pub fn void() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            faces: BTreeSet::new(),
        }
    }

    /// The order complex: faces are the chains of the poset, labels are the
    /// element ids.
    pub fn order_complex(poset: &FinitePoset) -> Self {
        let n = poset.len();
        let labels: Vec<u32> = (0..n as u32).collect();
        let mut faces = BTreeSet::new();
        faces.insert(ElemSet::EMPTY);
        // grow chains by appending ids comparable to every current member
        let mut stack: Vec<(ElemSet, usize)> = vec![(ElemSet::EMPTY, 0)];
        while let Some((chain, from)) = stack.pop() {
            for e in from..n {
                let comp = poset.up_set(e) | poset.down_set(e);
                if chain.is_subset_of(comp) {
                    let ext = chain.with(e);
                    faces.insert(ext);
                    stack.push((ext, e + 1));
                }
            }
        }
        SimplicialComplex { labels, faces }
    }

    pub fn universe(&self) -> &[u32] {
        &self.labels
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Vertex labels: labels whose singleton is a face.
    pub fn vertices(&self) -> Vec<u32> {
        self.vertex_mask().iter().map(|i| self.labels[i]).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_mask().len()
    }

    pub(crate) fn vertex_mask(&self) -> ElemSet {
        let mut m = ElemSet::EMPTY;
        for f in &self.faces {
            if f.len() == 1 {
                m.insert(f.first().unwrap());
            }
        }
        m
    }

    pub(crate) fn face_masks(&self) -> &BTreeSet<ElemSet> {
        &self.faces
    }

    pub(crate) fn label_of(&self, index: usize) -> u32 {
        self.labels[index]
    }

    pub(crate) fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// Faces as sorted label sets, smallest first.
    pub fn faces(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self
            .faces
            .iter()
            .map(|f| f.iter().map(|i| self.labels[i]).collect())
            .collect();
        out.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        out
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        match face_mask(&self.labels, face) {
            Ok(m) => self.faces.contains(&m),
            Err(_) => false,
        }
    }

    pub(crate) fn is_down_closed(&self) -> bool {
        self.faces
            .iter()
            .all(|f| f.iter().all(|v| self.faces.contains(&f.without(v))))
    }

    fn require_face(&self, face: &[u32]) -> Result<ElemSet, Error> {
        let mask = face_mask(&self.labels, face).map_err(|_| Error::FaceNotInComplex)?;
        if self.faces.contains(&mask) {
            Ok(mask)
        } else {
            Err(Error::FaceNotInComplex)
        }
    }

    /// `Σ|W`: faces contained in the label set `W`.
    pub fn restrict(&self, w: &[u32]) -> SimplicialComplex {
        let mut mask = ElemSet::EMPTY;
        for &label in w {
            if let Some(i) = self.index_of(label) {
                mask.insert(i);
            }
        }
        self.restrict_mask(mask)
    }

    pub(crate) fn restrict_mask(&self, mask: ElemSet) -> SimplicialComplex {
        SimplicialComplex {
            labels: self.labels.clone(),
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|f| f.is_subset_of(mask))
                .collect(),
        }
    }

    /// Deletion of a face: the restriction to `V ∖ σ`.
    pub fn deletion(&self, sigma: &[u32]) -> Result<SimplicialComplex, Error> {
        let mask = self.require_face(sigma)?;
        Ok(self.deletion_mask(mask))
    }

    pub(crate) fn deletion_mask(&self, sigma: ElemSet) -> SimplicialComplex {
        SimplicialComplex {
            labels: self.labels.clone(),
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|f| !f.intersects(sigma))
                .collect(),
        }
    }

    /// Star of a face: faces whose union with `σ` is still a face.
    pub fn star(&self, sigma: &[u32]) -> Result<SimplicialComplex, Error> {
        let mask = self.require_face(sigma)?;
        Ok(self.star_mask(mask))
    }

    pub(crate) fn star_mask(&self, sigma: ElemSet) -> SimplicialComplex {
        SimplicialComplex {
            labels: self.labels.clone(),
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|f| self.faces.contains(&(*f | sigma)))
                .collect(),
        }
    }

    /// Link of a face: deletion ∩ star.
    pub fn link(&self, sigma: &[u32]) -> Result<SimplicialComplex, Error> {
        let mask = self.require_face(sigma)?;
        Ok(self.link_mask(mask))
    }

    pub(crate) fn link_mask(&self, sigma: ElemSet) -> SimplicialComplex {
        SimplicialComplex {
            labels: self.labels.clone(),
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|f| !f.intersects(sigma) && self.faces.contains(&(*f | sigma)))
                .collect(),
        }
    }

    /// Vertices `v` with `star(v) = Σ`; empty means the complex is not a cone.
    pub fn cone_peaks(&self) -> Vec<u32> {
        self.vertex_mask()
            .iter()
            .filter(|&v| {
                let vm = ElemSet::singleton(v);
                self.faces.iter().all(|f| self.faces.contains(&(*f | vm)))
            })
            .map(|v| self.labels[v])
            .collect()
    }

    /// Apply an injective relabeling to every face.
    pub fn relabel<F: Fn(u32) -> u32>(&self, f: F) -> Result<SimplicialComplex, Error> {
        let universe: Vec<u32> = self.labels.iter().map(|&l| f(l)).collect();
        let faces: Vec<Vec<u32>> = self
            .faces()
            .iter()
            .map(|face| face.iter().map(|&l| f(l)).collect())
            .collect();
        SimplicialComplex::new(&universe, &faces)
    }

    /// Canonical key plus the vertex order realizing it. Two complexes get
    /// equal keys iff their face families are isomorphic as hypergraphs on
    /// the vertices actually present. `order[canonical position] = label`.
    ///
    /// Vertices are first colored by iterated refinement over the face
    /// incidence structure, then residual symmetry is broken by trying the
    /// color-compatible vertex orders (skipping transpositions that are
    /// automorphisms) and keeping the minimal face encoding.
    pub fn canonical_labeling(&self) -> (Vec<u8>, Vec<u32>) {
        let vmask = self.vertex_mask();
        let verts: Vec<usize> = vmask.iter().collect();
        let nv = verts.len();
        if nv == 0 {
            // distinguishes {} from {∅}
            return (vec![0, self.faces.len() as u8], Vec::new());
        }
        let colors = self.refined_vertex_colors(&verts);
        let mut best: Option<Vec<u8>> = None;
        let mut best_order: Vec<usize> = Vec::new();
        let mut placed: Vec<usize> = Vec::with_capacity(nv);
        let mut used = vec![false; nv];
        self.canon_dfs(
            &verts,
            &colors,
            &mut placed,
            &mut used,
            &mut best,
            &mut best_order,
        );
        let order: Vec<u32> = best_order
            .iter()
            .map(|&vi| self.labels[verts[vi]])
            .collect();
        (best.unwrap(), order)
    }

    pub fn canonical_form(&self) -> Vec<u8> {
        self.canonical_labeling().0
    }

    fn refined_vertex_colors(&self, verts: &[usize]) -> Vec<usize> {
        let nv = verts.len();
        let pos_of: BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(p, &v)| (v, p)).collect();
        // initial color: per-size face degree vector
        let initial: Vec<Vec<usize>> = (0..nv)
            .map(|p| {
                let mut counts = vec![0usize; MAX_ELEMENTS + 1];
                for f in &self.faces {
                    if f.contains(verts[p]) {
                        counts[f.len()] += 1;
                    }
                }
                counts
            })
            .collect();
        let mut sorted = initial.clone();
        sorted.sort();
        sorted.dedup();
        let mut colors: Vec<usize> = (0..nv)
            .map(|p| sorted.binary_search(&initial[p]).unwrap())
            .collect();
        loop {
            let mut table: BTreeMap<(usize, Vec<(usize, Vec<usize>)>), Vec<usize>> =
                BTreeMap::new();
            for p in 0..nv {
                let mut sig: Vec<(usize, Vec<usize>)> = Vec::new();
                for f in &self.faces {
                    if f.contains(verts[p]) {
                        let mut others: Vec<usize> = f
                            .iter()
                            .filter(|&v| v != verts[p])
                            .map(|v| colors[pos_of[&v]])
                            .collect();
                        others.sort_unstable();
                        sig.push((f.len(), others));
                    }
                }
                sig.sort();
                table.entry((colors[p], sig)).or_default().push(p);
            }
            let mut next = vec![0usize; nv];
            for (rank, (_, members)) in table.into_iter().enumerate() {
                for p in members {
                    next[p] = rank;
                }
            }
            if next == colors {
                return colors;
            }
            colors = next;
        }
    }

    fn canon_dfs(
        &self,
        verts: &[usize],
        colors: &[usize],
        placed: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut Option<Vec<u8>>,
        best_order: &mut Vec<usize>,
    ) {
        let nv = verts.len();
        if placed.len() == nv {
            let code = self.encode_order(verts, placed);
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
                *best_order = placed.clone();
            }
            return;
        }
        let min_color = (0..nv)
            .filter(|&p| !used[p])
            .map(|p| colors[p])
            .min()
            .unwrap();
        let mut tried: Vec<usize> = Vec::new();
        for p in 0..nv {
            if used[p] || colors[p] != min_color {
                continue;
            }
            if tried
                .iter()
                .any(|&t| self.swap_is_automorphism(verts[t], verts[p]))
            {
                continue;
            }
            tried.push(p);
            used[p] = true;
            placed.push(p);
            self.canon_dfs(verts, colors, placed, used, best, best_order);
            placed.pop();
            used[p] = false;
        }
    }

    fn encode_order(&self, verts: &[usize], order: &[usize]) -> Vec<u8> {
        // order[canonical position] = vertex-list position
        let mut canon_of = vec![0usize; verts.len()];
        for (canon, &p) in order.iter().enumerate() {
            canon_of[p] = canon;
        }
        let pos_of: BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(p, &v)| (v, p)).collect();
        let mut encoded: Vec<u64> = self
            .faces
            .iter()
            .map(|f| {
                let mut bits = 0u64;
                for v in f.iter() {
                    bits |= 1 << canon_of[pos_of[&v]];
                }
                bits
            })
            .collect();
        encoded.sort_unstable();
        let mut out = Vec::with_capacity(5 + encoded.len() * 8);
        out.push(verts.len() as u8);
        out.extend_from_slice(&(encoded.len() as u32).to_le_bytes());
        for bits in encoded {
            out.extend_from_slice(&bits.to_le_bytes());
        }
        out
    }

    /// Whether exchanging two vertex slots maps the face family to itself.
    fn swap_is_automorphism(&self, a: usize, b: usize) -> bool {
        self.faces.iter().all(|f| {
            let fa = f.contains(a);
            let fb = f.contains(b);
            if fa == fb {
                return true;
            }
            let mut g = *f;
            if fa {
                g.remove(a);
                g.insert(b);
            } else {
                g.remove(b);
                g.insert(a);
            }
            self.faces.contains(&g)
        })
    }
}

fn face_mask(labels: &[u32], face: &[u32]) -> Result<ElemSet, Error> {
    let mut mask = ElemSet::EMPTY;
    for &label in face {
        match labels.binary_search(&label) {
            Ok(i) => mask.insert(i),
            Err(_) => return Err(Error::LabelNotInComplex { label }),
        }
    }
    Ok(mask)
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        if self.labels == other.labels {
            return self.faces == other.faces;
        }
        self.faces() == other.faces()
    }
}

impl Eq for SimplicialComplex {}

impl core::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "SimplicialComplex{:?}", self.faces())
    }
}
