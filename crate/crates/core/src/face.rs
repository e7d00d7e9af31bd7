//! Vertices, edges and triangular faces.
//!
//! A [`Face`] always stores its three labels in ascending order, so two faces
//! compare equal exactly when they span the same vertex set.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Vertex labels are positive integers; `0` is never a valid label.
pub type Vertex = u32;

/// An unordered pair of distinct vertices, stored ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        debug_assert_ne!(u, v);
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn lo(self) -> Vertex {
        self.0
    }

    pub fn hi(self) -> Vertex {
        self.1
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

/// A 2-dimensional face, i.e. a 3-element vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face([Vertex; 3]);

impl Face {
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Result<Self> {
        Self::from_triple([a, b, c])
    }

    pub fn from_triple(mut t: [Vertex; 3]) -> Result<Self> {
        t.sort_unstable();
        if t[0] == t[1] || t[1] == t[2] {
            return Err(Error::RepeatedVertex(t));
        }
        Ok(Face(t))
    }

    /// Caller guarantees the labels are distinct.
    pub(crate) fn sorted(a: Vertex, b: Vertex, c: Vertex) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        debug_assert!(t[0] != t[1] && t[1] != t[2]);
        Face(t)
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        self.0
    }

    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge(a, b), Edge(a, c), Edge(b, c)]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// The vertex of this face opposite to `e`, if `e` is one of its edges.
    pub fn apex(&self, e: Edge) -> Option<Vertex> {
        if !(self.contains(e.0) && self.contains(e.1)) {
            return None;
        }
        self.0.iter().copied().find(|&v| v != e.0 && v != e.1)
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Self {
        let [a, b, c] = self.0;
        Face::sorted(f(a), f(b), f(c))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{a},{b},{c}")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Sorts and deduplicates a face list in place.
pub(crate) fn canonicalize(faces: &mut Vec<Face>) {
    faces.sort_unstable();
    faces.dedup();
}
