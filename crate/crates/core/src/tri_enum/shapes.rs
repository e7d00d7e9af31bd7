//! Census generation by root-edge decomposition.
//!
//! Triangulations of `[1,2,3]` are first generated with anonymous internal
//! slots `4, 5, ..., k+3`, numbered in the order the recursion creates them
//! (a *shape*). A rooted disk triangulation with a labeled boundary has no
//! nontrivial automorphism, so every labeled triangulation arises from exactly
//! one shape and exactly one assignment of labels to slots; the labeled census
//! is the product of the shape list with all `k!` slot assignments.

use crate::error::{Error, Result};
use crate::exact::{factorial, ExactCount};
use crate::face::{Edge, Face, Vertex};
use crate::tri_enum::DiskTriangulation;

/// Largest `k` the enumerators accept unless told otherwise.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 7;

/// A triangulation of `[1,2,3]` whose internal vertices are the slots
/// `4..=k+3` in creation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    faces: Vec<Face>,
}

impl Shape {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn k(&self) -> usize {
        (self.faces.len() - 1) / 2
    }

    /// The shape itself as a triangulation with boundary `[1,2,3]`.
    pub fn to_triangulation(&self) -> DiskTriangulation {
        DiskTriangulation::from_sorted_unchecked([1, 2, 3], self.faces.clone(), self.k())
    }
}

/// Every shape with `k` internal vertices, in the deterministic order of the
/// root-edge recursion. The list has `t_k / k!` entries.
pub fn enumerate_shapes(k: usize) -> Vec<Shape> {
    let mut search = ShapeSearch::new(k);
    search.run();
    search.out
}

struct ShapeSearch {
    k: usize,
    stride: usize,
    edges: Vec<bool>,
    faces: Vec<Face>,
    pending: Vec<Vec<Vertex>>,
    next_slot: Vertex,
    remaining: usize,
    out: Vec<Shape>,
}

impl ShapeSearch {
    fn new(k: usize) -> Self {
        let stride = k + 4;
        let mut s = ShapeSearch {
            k,
            stride,
            edges: vec![false; stride * stride],
            faces: Vec::with_capacity(2 * k + 1),
            pending: vec![vec![1, 2, 3]],
            next_slot: 4,
            remaining: k,
            out: Vec::new(),
        };
        for (u, v) in [(1, 2), (1, 3), (2, 3)] {
            s.set_edge(u, v, true);
        }
        s
    }

    fn edge_index(&self, u: Vertex, v: Vertex) -> usize {
        let e = Edge::new(u, v);
        e.lo() as usize * self.stride + e.hi() as usize
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges[self.edge_index(u, v)]
    }

    fn set_edge(&mut self, u: Vertex, v: Vertex, on: bool) {
        let i = self.edge_index(u, v);
        self.edges[i] = on;
    }

    fn run(&mut self) {
        let Some(poly) = self.pending.pop() else {
            if self.remaining == 0 {
                let mut faces = self.faces.clone();
                faces.sort_unstable();
                debug_assert_eq!(faces.len(), 2 * self.k + 1);
                self.out.push(Shape { faces });
            }
            return;
        };

        // Root edge: lexicographically smallest edge of the polygon.
        let len = poly.len();
        let root = (0..len)
            .min_by_key(|&i| Edge::new(poly[i], poly[(i + 1) % len]))
            .expect("polygon has at least three vertices");
        let a = poly[root];
        let b = poly[(root + 1) % len];
        let rest: Vec<Vertex> = (2..len).map(|d| poly[(root + d) % len]).collect();
        let r = rest.len();

        let mut order: Vec<usize> = (0..r).collect();
        order.sort_unstable_by_key(|&pos| rest[pos]);
        for pos in order {
            let w = rest[pos];
            let chord_a = pos + 1 != r;
            let chord_b = pos != 0;
            if (chord_a && self.has_edge(a, w)) || (chord_b && self.has_edge(b, w)) {
                continue;
            }
            if chord_a {
                self.set_edge(a, w, true);
            }
            if chord_b {
                self.set_edge(b, w, true);
            }
            let before = self.pending.len();
            // Region beyond a-w first, so the b side is processed next.
            if r - pos + 1 >= 3 {
                let mut p2 = Vec::with_capacity(r - pos + 1);
                p2.extend_from_slice(&rest[pos..]);
                p2.push(a);
                self.pending.push(p2);
            }
            if pos + 2 >= 3 {
                let mut p1 = Vec::with_capacity(pos + 2);
                p1.push(b);
                p1.extend_from_slice(&rest[..=pos]);
                self.pending.push(p1);
            }
            self.faces.push(Face::sorted(a, b, w));
            self.run();
            self.faces.pop();
            self.pending.truncate(before);
            if chord_a {
                self.set_edge(a, w, false);
            }
            if chord_b {
                self.set_edge(b, w, false);
            }
        }

        if self.remaining > 0 {
            let v = self.next_slot;
            self.next_slot += 1;
            self.remaining -= 1;
            self.set_edge(a, v, true);
            self.set_edge(b, v, true);
            let mut grown = Vec::with_capacity(len + 1);
            grown.push(a);
            grown.push(v);
            grown.push(b);
            grown.extend_from_slice(&rest);
            self.pending.push(grown);
            self.faces.push(Face::sorted(a, b, v));
            self.run();
            self.faces.pop();
            self.pending.pop();
            self.set_edge(a, v, false);
            self.set_edge(b, v, false);
            self.remaining += 1;
            self.next_slot -= 1;
        }

        self.pending.push(poly);
    }
}

/// The labeled census of triangulations of one boundary cycle with a fixed
/// set of internal labels.
#[derive(Clone, Debug)]
pub struct Census {
    k: usize,
    boundary: [Vertex; 3],
    internal: Vec<Vertex>,
    shapes: Vec<Shape>,
}

impl Census {
    /// Census for `k` internal vertices with the default enumeration limit.
    pub fn new(k: usize, boundary: [Vertex; 3], internal: &[Vertex]) -> Result<Self> {
        Self::with_limit(k, boundary, internal, DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn with_limit(
        k: usize,
        boundary: [Vertex; 3],
        internal: &[Vertex],
        limit: usize,
    ) -> Result<Self> {
        if k > limit {
            return Err(Error::EnumerationLimit { k, limit });
        }
        if internal.len() != k {
            return Err(Error::LabelCount {
                expected: k,
                got: internal.len(),
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for &v in boundary.iter().chain(internal) {
            if v == 0 {
                return Err(Error::InvalidArgument("vertex label 0".into()));
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateLabel(v));
            }
        }
        let mut internal = internal.to_vec();
        internal.sort_unstable();
        Ok(Census {
            k,
            boundary,
            internal,
            shapes: enumerate_shapes(k),
        })
    }

    /// Census of `[1,2,3]` with internal labels `4..=k+3`.
    pub fn standard(k: usize) -> Result<Self> {
        let internal: Vec<Vertex> = (4..4 + k as Vertex).collect();
        Self::new(k, [1, 2, 3], &internal)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn boundary(&self) -> [Vertex; 3] {
        self.boundary
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    /// Number of labeled triangulations the stream yields.
    pub fn len(&self) -> ExactCount {
        ExactCount(factorial(self.k as u64) * self.shapes.len())
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    /// The full labeled stream: shapes in order, and within each shape the
    /// label assignments in lexicographic order.
    pub fn iter(&self) -> CensusIter<'_> {
        CensusIter::new(self, 0, self.shapes.len())
    }

    /// The sub-stream owned by shapes `range`; disjoint ranges partition the
    /// census, so independent workers can split it by shape index.
    pub fn iter_shapes(&self, range: std::ops::Range<usize>) -> CensusIter<'_> {
        let end = range.end.min(self.shapes.len());
        CensusIter::new(self, range.start.min(end), end)
    }

    /// Labels `shape` with the slot assignment `perm` (slot `4 + i` gets
    /// `internal[perm[i]]`).
    fn label(&self, shape: &Shape, perm: &[usize]) -> DiskTriangulation {
        let map = |v: Vertex| -> Vertex {
            if v <= 3 {
                self.boundary[v as usize - 1]
            } else {
                self.internal[perm[v as usize - 4]]
            }
        };
        let mut faces: Vec<Face> = shape.faces.iter().map(|f| f.map(map)).collect();
        faces.sort_unstable();
        DiskTriangulation::from_sorted_unchecked(self.boundary, faces, self.k)
    }
}

impl<'a> IntoIterator for &'a Census {
    type Item = DiskTriangulation;
    type IntoIter = CensusIter<'a>;
    fn into_iter(self) -> CensusIter<'a> {
        self.iter()
    }
}

pub struct CensusIter<'a> {
    census: &'a Census,
    shape: usize,
    end: usize,
    perm: Vec<usize>,
    fresh_shape: bool,
}

impl<'a> CensusIter<'a> {
    fn new(census: &'a Census, start: usize, end: usize) -> Self {
        CensusIter {
            census,
            shape: start,
            end,
            perm: (0..census.k).collect(),
            fresh_shape: true,
        }
    }
}

impl Iterator for CensusIter<'_> {
    type Item = DiskTriangulation;

    fn next(&mut self) -> Option<DiskTriangulation> {
        if self.shape >= self.end {
            return None;
        }
        if !self.fresh_shape && !next_permutation(&mut self.perm) {
            self.shape += 1;
            if self.shape >= self.end {
                return None;
            }
            // next_permutation leaves the identity behind on wrap-around.
        }
        self.fresh_shape = false;
        Some(self.census.label(&self.census.shapes[self.shape], &self.perm))
    }
}

/// Advances to the next lexicographic permutation; on the last one, resets
/// to the first and returns false.
fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.reverse();
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
