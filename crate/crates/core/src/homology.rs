//! Reduced simplicial homology over prime fields.
//!
//! Chain groups use the augmented complex: the empty face spans `C_{-1}`,
//! faces of each dimension are ordered lexicographically, and the boundary
//! of `[v_0 < ... < v_k]` is `Σ (-1)^j [.., v_j omitted, ..]`.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{input, Result};
use crate::face::Face;
use crate::linalg::{BitMatrix, ModMatrix};

/// A prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec { characteristic: 2 };
    pub const GF3: FieldSpec = FieldSpec { characteristic: 3 };

    /// Characteristics up to 2^16 are supported so residue products fit a word.
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 16 {
            return Err(input(format!("characteristic {p} is too large")));
        }
        if !is_prime(p) {
            return Err(input(format!("characteristic {p} is not prime")));
        }
        Ok(FieldSpec { characteristic: p })
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = crate::Error;
    fn try_from(p: u32) -> Result<Self> {
        FieldSpec::new(p)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.characteristic
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.characteristic)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `dim_k H̃_i` for `i = -1, 0, ..., dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyRanks {
    ranks: Vec<usize>,
}

impl HomologyRanks {
    /// Rank in degree `i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.ranks.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Ranks starting at degree -1.
    pub fn as_slice(&self) -> &[usize] {
        &self.ranks
    }

    /// Top degree stored (the dimension of the complex).
    pub fn top_degree(&self) -> isize {
        self.ranks.len() as isize - 2
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// Largest degree with nonzero homology.
    pub fn max_nonvanishing(&self) -> Option<isize> {
        self.ranks
            .iter()
            .rposition(|&r| r != 0)
            .map(|k| k as isize - 1)
    }

    /// `Σ (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// One boundary map `∂_i : C_i -> C_{i-1}` written as a matrix with one row
/// per `i`-face and one column per `(i-1)`-face.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub degree: isize,
    pub sources: Vec<Face>,
    pub targets: Vec<Face>,
    pub matrix: ModMatrix,
}

/// `∂_0, ∂_1, ..., ∂_{dim Δ}` over the given field. `{∅}` has none.
pub fn boundary_matrices(cx: &SimplicialComplex, field: FieldSpec) -> Vec<BoundaryMatrix> {
    let p = field.characteristic() as u64;
    let groups = cx.faces_by_dim();
    (1..groups.len())
        .map(|k| {
            let (sources, targets) = (&groups[k], &groups[k - 1]);
            let mut matrix = ModMatrix::zeros(p, sources.len(), targets.len());
            for (r, &face) in sources.iter().enumerate() {
                for (j, v) in face.iter().enumerate() {
                    let c = targets
                        .binary_search(&face.without(v))
                        .expect("boundary face present");
                    matrix.set(r, c, if j % 2 == 0 { 1 } else { p - 1 });
                }
            }
            BoundaryMatrix {
                degree: k as isize - 1,
                sources: sources.clone(),
                targets: targets.clone(),
                matrix,
            }
        })
        .collect()
}

/// Reduced homology of `cx` over `field`.
pub fn reduced_homology_ranks(cx: &SimplicialComplex, field: FieldSpec) -> HomologyRanks {
    ranks_from_face_groups(&cx.faces_by_dim(), field)
}

/// Reduced homology from faces grouped by cardinality (`groups[k]` holds the
/// faces with `k` vertices, each group sorted lexicographically, `groups[0] = [∅]`).
pub(crate) fn ranks_from_face_groups(groups: &[Vec<Face>], field: FieldSpec) -> HomologyRanks {
    let top = groups.iter().rposition(|g| !g.is_empty()).unwrap_or(0);
    let groups = &groups[..=top];
    // boundary_rank[k] = rank of the map out of the k-vertex faces
    let mut boundary_rank = vec![0usize; groups.len() + 1];
    if groups.len() > 1 {
        boundary_rank[1] = usize::from(!groups[1].is_empty());
    }
    for k in 2..groups.len() {
        boundary_rank[k] = boundary_rank_between(&groups[k], &groups[k - 1], field);
    }
    let ranks = (0..groups.len())
        .map(|k| groups[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect();
    HomologyRanks { ranks }
}

fn boundary_rank_between(sources: &[Face], targets: &[Face], field: FieldSpec) -> usize {
    if sources.is_empty() || targets.is_empty() {
        return 0;
    }
    let column = |f: Face| targets.binary_search(&f).expect("boundary face present");
    match field.characteristic() {
        2 => {
            let mut m = BitMatrix::zeros(sources.len(), targets.len());
            for (r, &face) in sources.iter().enumerate() {
                for v in face.iter() {
                    m.flip(r, column(face.without(v)));
                }
            }
            m.rank()
        }
        p => {
            let p = p as u64;
            let mut m = ModMatrix::zeros(p, sources.len(), targets.len());
            for (r, &face) in sources.iter().enumerate() {
                for (j, v) in face.iter().enumerate() {
                    m.set(r, column(face.without(v)), if j % 2 == 0 { 1 } else { p - 1 });
                }
            }
            m.rank()
        }
    }
}

/// Faces of `Δ` grouped by cardinality, reusable across many restrictions.
#[derive(Clone, Debug)]
pub(crate) struct FaceTable {
    groups: Vec<Vec<Face>>,
}

impl FaceTable {
    pub fn new(cx: &SimplicialComplex) -> Self {
        FaceTable {
            groups: cx.faces_by_dim(),
        }
    }

    /// Face groups of the restriction `Δ_W`; filtering keeps lexicographic order.
    pub fn restricted(&self, w: Face) -> Vec<Vec<Face>> {
        let mut out: Vec<Vec<Face>> = self
            .groups
            .iter()
            .map(|g| g.iter().copied().filter(|f| f.is_subset(w)).collect())
            .collect();
        while out.len() > 1 && out.last().is_some_and(Vec::is_empty) {
            out.pop();
        }
        out
    }

    pub fn homology_of_restriction(&self, w: Face, field: FieldSpec) -> HomologyRanks {
        ranks_from_face_groups(&self.restricted(w), field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|s| s.iter().copied())).unwrap()
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(7919).is_ok());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(9).is_err());
        assert!(FieldSpec::new(70001).is_err());
    }

    #[test]
    fn segment_boundaries() {
        let seg = cx(2, &[&[0, 1]]);
        let ms = boundary_matrices(&seg, FieldSpec::GF3);
        assert_eq!(ms.len(), 2);
        // ∂_0: both vertices to ∅ with coefficient 1
        assert_eq!(ms[0].matrix.rows(), 2);
        assert_eq!((ms[0].matrix.get(0, 0), ms[0].matrix.get(1, 0)), (1, 1));
        // ∂_1 [0,1] = [1] - [0]
        assert_eq!(ms[1].matrix.get(0, 0), 2);
        assert_eq!(ms[1].matrix.get(0, 1), 1);
    }

    #[test]
    fn empty_face_only_has_no_boundaries() {
        let c = SimplicialComplex::empty_face_only(Face::EMPTY);
        assert!(boundary_matrices(&c, FieldSpec::GF2).is_empty());
        let h = reduced_homology_ranks(&c, FieldSpec::GF2);
        assert_eq!(h.as_slice(), &[1]);
        assert_eq!(h.get(-1), 1);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let t = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let octa = cx(6, &[&[0, 2, 4], &[0, 2, 5], &[0, 3, 4], &[0, 3, 5], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5]]);
        for c in [t, octa] {
            for field in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::new(5).unwrap()] {
                let ms = boundary_matrices(&c, field);
                for pair in ms.windows(2) {
                    assert!(pair[1].matrix.mul(&pair[0].matrix).is_zero());
                }
            }
        }
    }

    #[test]
    fn known_ranks() {
        let t = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        assert_eq!(reduced_homology_ranks(&t, FieldSpec::GF2).as_slice(), &[0, 0, 1]);
        let two_points = cx(2, &[&[0], &[1]]);
        assert_eq!(reduced_homology_ranks(&two_points, FieldSpec::GF3).as_slice(), &[0, 1]);
        let point = cx(1, &[&[0]]);
        assert!(reduced_homology_ranks(&point, FieldSpec::GF2).is_acyclic());
    }

    #[test]
    fn projective_plane_torsion_shows_in_char_two_only() {
        // 6-vertex RP^2
        let rp2 = cx(
            6,
            &[
                &[0, 1, 3], &[0, 1, 5], &[0, 2, 4], &[0, 2, 5], &[0, 3, 4],
                &[1, 2, 3], &[1, 2, 4], &[1, 4, 5], &[2, 3, 5], &[3, 4, 5],
            ],
        );
        let h2 = reduced_homology_ranks(&rp2, FieldSpec::GF2);
        let h3 = reduced_homology_ranks(&rp2, FieldSpec::GF3);
        assert_eq!(h2.as_slice(), &[0, 0, 1, 1]);
        assert!(h3.is_acyclic());
    }

    #[test]
    fn restriction_table_matches_direct_restriction() {
        let c = cx(5, &[&[0, 1, 2], &[1, 2, 3], &[3, 4], &[0, 4]]);
        let table = FaceTable::new(&c);
        for w in c.ground().subsets() {
            let direct = reduced_homology_ranks(&c.restriction(w).unwrap(), FieldSpec::GF2);
            assert_eq!(table.homology_of_restriction(w, FieldSpec::GF2), direct, "W = {w}");
        }
    }
}
