//! Finite abstract simplicial complexes stored by their facets.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{domain, input, Result};
use crate::face::{low_bits, Face, Vertex, MAX_VERTICES};

/// A simplicial complex on a ground set of at most [`MAX_VERTICES`] vertices.
///
/// The complex is the downward closure of its facets. Facets form an antichain
/// kept in canonical order (cardinality, then lexicographic), so two complexes
/// are equal exactly when they have the same ground set and the same faces.
///
/// Ground vertices need not be faces: restricting an artificial complex to a
/// vertex set `W` keeps all of `W` as the ground set even when some `w ∈ W`
/// never occurs in a facet. The void complex is not representable; the
/// smallest complex is `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: Face,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds the complex on `{0..n-1}` generated by `facets`.
    pub fn from_facets<F, I>(n: usize, facets: F) -> Result<Self>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let ground = Face::range(n)?;
        let mut faces = Vec::new();
        for facet in facets {
            let mut mask = 0u64;
            for v in facet {
                if v >= n {
                    return Err(input(format!("vertex {v} outside ground set 0..{n}")));
                }
                mask |= 1 << v;
            }
            faces.push(Face::from_mask(mask));
        }
        Self::from_faces(ground, faces)
    }

    /// Builds the complex on `ground` generated by arbitrary faces (not
    /// necessarily maximal, duplicates allowed). No faces at all yields `{∅}`.
    pub fn from_faces<I: IntoIterator<Item = Face>>(ground: Face, faces: I) -> Result<Self> {
        if ground.mask() >> MAX_VERTICES != 0 {
            return Err(input("ground set exceeds the supported vertex range"));
        }
        let faces: Vec<Face> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(ground)) {
            return Err(input(format!(
                "face {bad} is not contained in ground set {ground}"
            )));
        }
        Ok(Self::new_unchecked(ground, faces))
    }

    pub(crate) fn new_unchecked(ground: Face, mut faces: Vec<Face>) -> Self {
        faces.sort_by(|a, b| b.len().cmp(&a.len()));
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        if facets.is_empty() {
            facets.push(Face::EMPTY);
        }
        facets.sort_by(Face::cmp_graded);
        SimplicialComplex { ground, facets }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: Face) -> Self {
        SimplicialComplex {
            ground: vertices,
            facets: vec![vertices],
        }
    }

    /// `{∅}` on the given ground set.
    pub fn empty_face_only(ground: Face) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![Face::EMPTY],
        }
    }

    pub fn ground(&self) -> Face {
        self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Union of all facets, i.e. the ground vertices that are faces.
    pub fn vertex_support(&self) -> Face {
        self.facets
            .iter()
            .fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn dim(&self) -> isize {
        self.facets.last().map_or(-1, |f| f.dim())
    }

    /// Krull dimension of the Stanley-Reisner ring, `dim + 1`.
    pub fn krull_dim(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn is_pure(&self) -> bool {
        let first = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == first)
    }

    /// True when there is a single facet.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All faces, including `∅`, sorted by cardinality then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_by(Face::cmp_graded);
        faces
    }

    /// Faces grouped by dimension: entry `k` holds the `(k-1)`-dimensional
    /// faces, so entry 0 is `[∅]`. Each group is sorted lexicographically.
    pub fn faces_by_dim(&self) -> Vec<Vec<Face>> {
        let mut groups: Vec<Vec<Face>> = vec![Vec::new(); self.krull_dim() + 1];
        for f in self.faces() {
            groups[f.len()].push(f);
        }
        groups
    }

    /// `f_{-1}, f_0, ..., f_{d-1}`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    fn require_face(&self, face: Face, op: &str) -> Result<()> {
        if self.contains(face) {
            Ok(())
        } else {
            Err(domain(format!("{op}: {face} is not a face of the complex")))
        }
    }

    /// `star(F) = {G : F ∪ G ∈ Δ}`, on the same ground set.
    pub fn star(&self, face: Face) -> Result<Self> {
        self.require_face(face, "star")?;
        let facets = self
            .facets
            .iter()
            .copied()
            .filter(|f| face.is_subset(*f))
            .collect();
        Ok(SimplicialComplex {
            ground: self.ground,
            facets,
        })
    }

    /// `link(F) = {G ∈ star(F) : F ∩ G = ∅}`, on the ground set `V ∖ F`.
    pub fn link(&self, face: Face) -> Result<Self> {
        self.require_face(face, "link")?;
        let mut facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face))
            .collect();
        facets.sort_by(Face::cmp_graded);
        Ok(SimplicialComplex {
            ground: self.ground.difference(face),
            facets,
        })
    }

    /// `Δ ∖ F = {G ∈ Δ : G ⊆ V ∖ F}`, on the ground set `V ∖ F`.
    pub fn deletion(&self, face: Face) -> Self {
        let keep = self.ground.difference(face);
        let faces = self.facets.iter().map(|f| f.intersection(keep)).collect();
        Self::new_unchecked(keep, faces)
    }

    /// `Δ_W = {F ∈ Δ : F ⊆ W}`, on the ground set `W`.
    pub fn restriction(&self, w: Face) -> Result<Self> {
        if !w.is_subset(self.ground) {
            return Err(input(format!(
                "restriction set {w} is not contained in the ground set {}",
                self.ground
            )));
        }
        let faces = self.facets.iter().map(|f| f.intersection(w)).collect();
        Ok(Self::new_unchecked(w, faces))
    }

    /// Vertices `v` with `{v} ∈ Δ` and `star(v) ≠ Δ`.
    pub fn core_vertices(&self) -> Face {
        let support = self.vertex_support();
        let cone_points = self
            .facets
            .iter()
            .fold(support, |acc, f| acc.intersection(*f));
        support.difference(cone_points)
    }

    /// `Δ` restricted to its core vertices.
    pub fn core(&self) -> Self {
        let core = self.core_vertices();
        let faces = self.facets.iter().map(|f| f.intersection(core)).collect();
        Self::new_unchecked(core, faces)
    }

    /// True when every ground vertex is a core vertex.
    pub fn is_core(&self) -> bool {
        self.core_vertices() == self.ground
    }

    /// `Δ * v` for a fresh vertex `v`.
    pub fn cone(&self, v: Vertex) -> Result<Self> {
        if v >= MAX_VERTICES {
            return Err(input(format!("cone apex {v} exceeds the supported range")));
        }
        if self.ground.contains(v) {
            return Err(input(format!("cone apex {v} is already a ground vertex")));
        }
        let mut facets: Vec<Face> = self.facets.iter().map(|f| f.with(v)).collect();
        facets.sort_by(Face::cmp_graded);
        Ok(SimplicialComplex {
            ground: self.ground.with(v),
            facets,
        })
    }

    /// Union of two complexes as families of faces; ground sets are merged.
    pub fn union(&self, other: &Self) -> Self {
        let faces = self.facets.iter().chain(&other.facets).copied().collect();
        Self::new_unchecked(self.ground.union(other.ground), faces)
    }

    /// Order-preserving relabeling of the ground set onto `0..n`.
    /// Returns the relabeled complex and the old id of each new vertex.
    pub fn relabel_dense(&self) -> (Self, Vec<Vertex>) {
        let old: Vec<Vertex> = self.ground.iter().collect();
        let mut new_of = [usize::MAX; 64];
        for (new, &o) in old.iter().enumerate() {
            new_of[o] = new;
        }
        let map = |f: Face| Face::from_mask(f.iter().fold(0u64, |m, v| m | 1 << new_of[v]));
        let facets = self.facets.iter().map(|&f| map(f)).collect();
        let relabeled = Self::new_unchecked(Face::from_mask(low_bits(old.len())), facets);
        (relabeled, old)
    }

    /// Ridge sum: the disjoint union of `self` and `other` with the ridge `r2`
    /// of `other` identified with the ridge `r1` of `self`, matching vertices
    /// in ascending order.
    ///
    /// The result lives on `0..n1 + n2 - |r1|`: the ground set of `self` is
    /// relabeled densely in order, and the non-ridge ground vertices of `other`
    /// follow in ascending order.
    pub fn ridge_sum(&self, r1: Face, other: &Self, r2: Face) -> Result<Self> {
        let dim = self.dim();
        if other.dim() != dim {
            return Err(domain(format!(
                "ridge sum needs equal dimensions, got {dim} and {}",
                other.dim()
            )));
        }
        if dim < 0 {
            return Err(domain("ridge sum of (-1)-dimensional complexes has no ridges"));
        }
        for (r, cx, side) in [(r1, self, "first"), (r2, other, "second")] {
            if r.dim() != dim - 1 || !cx.contains(r) {
                return Err(domain(format!(
                    "{r} is not a ridge (face of dimension {}) of the {side} complex",
                    dim - 1
                )));
            }
        }
        let n1 = self.ground_size();
        let total = n1 + other.ground_size() - r1.len();
        if total > MAX_VERTICES {
            return Err(input("ridge sum exceeds the supported vertex range"));
        }
        let (left, left_old) = self.relabel_dense();
        let mut new_of_first = [usize::MAX; 64];
        for (new, &o) in left_old.iter().enumerate() {
            new_of_first[o] = new;
        }
        let mut new_of_second = [usize::MAX; 64];
        for (a, b) in r1.iter().zip(r2.iter()) {
            new_of_second[b] = new_of_first[a];
        }
        let mut next = n1;
        for v in other.ground.difference(r2).iter() {
            new_of_second[v] = next;
            next += 1;
        }
        let map = |f: Face| Face::from_mask(f.iter().fold(0u64, |m, v| m | 1 << new_of_second[v]));
        let faces = left
            .facets
            .iter()
            .copied()
            .chain(other.facets.iter().map(|&f| map(f)))
            .collect();
        Ok(Self::new_unchecked(Face::from_mask(low_bits(total)), faces))
    }

    /// Connectivity of the facet-ridge graph of a pure complex.
    pub fn is_strongly_connected(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(domain("strong connectivity is defined for pure complexes only"));
        }
        let m = self.facets.len();
        let ridge = self.facets[0].len().saturating_sub(1);
        let mut seen = vec![false; m];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(i) = queue.pop_front() {
            for j in 0..m {
                if !seen[j] && self.facets[i].intersection(self.facets[j]).len() == ridge {
                    seen[j] = true;
                    reached += 1;
                    queue.push_back(j);
                }
            }
        }
        Ok(reached == m)
    }

    /// Inclusion-minimal subsets of the ground set that are not faces, in
    /// lexicographic order. These generate the Stanley-Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let mut found: HashSet<Face> = HashSet::new();
        for f in self.faces() {
            for v in self.ground.difference(f).iter() {
                let g = f.with(v);
                if !self.contains(g) && g.iter().all(|u| self.contains(g.without(u))) {
                    found.insert(g);
                }
            }
        }
        let mut out: Vec<Face> = found.into_iter().collect();
        out.sort();
        out
    }

    /// Largest degree of a minimal generator of the Stanley-Reisner ideal;
    /// 0 when the ideal is zero.
    pub fn indeg(&self) -> usize {
        self.minimal_nonfaces()
            .iter()
            .map(|f| f.len())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(ground={}, facets=[", self.ground)?;
        for (k, face) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{face}")?;
        }
        f.write_str("])")
    }
}
