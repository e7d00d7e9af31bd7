//! Triangulations of a 3-cycle: representation, census, counts and
//! missing-face analysis.

mod counts;
mod missing;
mod shapes;
mod validate;

use std::collections::BTreeSet;

use serde::Serialize;

pub use counts::{
    count_j_dense, count_j_dense_enumerated, count_j_dense_formula, count_j_nested_enumerated,
    count_j_nested_formula, count_l_simple, count_n_labeled, count_triangulations,
};
pub use missing::{missing_faces, MissingFace};
pub use shapes::{enumerate_shapes, Census, CensusIter, Shape, DEFAULT_ENUMERATION_LIMIT};
pub use validate::is_disk_triangulation;

use crate::error::{Error, Result};
use crate::face::{canonicalize, Edge, Face, Vertex};

/// A triangulated disk bounded by a 3-cycle, identified with its face set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiskTriangulation {
    boundary: [Vertex; 3],
    faces: Vec<Face>,
    k: usize,
}

impl DiskTriangulation {
    /// Validates `faces` as a triangulation of `boundary`.
    pub fn new(boundary: [Vertex; 3], mut faces: Vec<Face>) -> Result<Self> {
        let before = faces.len();
        canonicalize(&mut faces);
        if faces.len() != before || !is_disk_triangulation(&faces, boundary) {
            return Err(Error::NotADisk);
        }
        let k = (faces.len() - 1) / 2;
        Ok(DiskTriangulation { boundary, faces, k })
    }

    pub(crate) fn from_sorted_unchecked(boundary: [Vertex; 3], faces: Vec<Face>, k: usize) -> Self {
        debug_assert!(faces.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(faces.len(), 2 * k + 1);
        DiskTriangulation { boundary, faces, k }
    }

    /// The k = 0 triangulation: the boundary face alone.
    pub fn single_face(boundary: [Vertex; 3]) -> Result<Self> {
        Self::new(boundary, vec![Face::from_triple(boundary)?])
    }

    /// The cone over `apex`, the unique triangulation with one internal vertex.
    pub fn cone(boundary: [Vertex; 3], apex: Vertex) -> Result<Self> {
        let [x, y, z] = boundary;
        Self::new(
            boundary,
            vec![Face::new(x, y, apex)?, Face::new(x, z, apex)?, Face::new(y, z, apex)?],
        )
    }

    pub fn boundary(&self) -> [Vertex; 3] {
        self.boundary
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        self.faces.binary_search(f).is_ok()
    }

    /// All vertices, ascending.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: BTreeSet<Vertex> = self.boundary.into_iter().collect();
        for f in &self.faces {
            vs.extend(f.vertices());
        }
        vs.into_iter().collect()
    }

    /// Internal vertices, ascending.
    pub fn internal_vertices(&self) -> Vec<Vertex> {
        self.vertices()
            .into_iter()
            .filter(|v| !self.boundary.contains(v))
            .collect()
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        self.faces.iter().flat_map(|f| f.edges()).collect()
    }

    pub fn missing_faces(&self) -> Vec<MissingFace> {
        missing_faces(self)
    }

    /// Largest missing-face density, or `None` for a simple triangulation.
    pub fn max_density(&self) -> Option<usize> {
        self.missing_faces().iter().map(|m| m.density).max()
    }

    /// Every missing face has density at most `l`.
    pub fn is_l_simple(&self, l: usize) -> bool {
        self.max_density().is_none_or(|d| d <= l)
    }

    /// Canonical relabeling: the `i`-th smallest internal vertex becomes
    /// `labels[i]`. `labels` must be strictly ascending and avoid the
    /// boundary; the map is inverted by relabeling with the old internal set.
    pub fn relabel(&self, labels: &[Vertex]) -> Result<Self> {
        if labels.len() != self.k {
            return Err(Error::LabelCount {
                expected: self.k,
                got: labels.len(),
            });
        }
        if let Some(&v) = labels.iter().find(|v| self.boundary.contains(v)) {
            return Err(Error::BoundaryCollision(v));
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::LabelsNotAscending);
        }
        let old = self.internal_vertices();
        let map = |v: Vertex| match old.binary_search(&v) {
            Ok(i) => labels[i],
            Err(_) => v,
        };
        let mut faces: Vec<Face> = self.faces.iter().map(|f| f.map(map)).collect();
        faces.sort_unstable();
        Ok(Self::from_sorted_unchecked(self.boundary, faces, self.k))
    }
}
