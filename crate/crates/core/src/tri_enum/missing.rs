//! Missing faces and their densities.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::face::{Face, Vertex};
use crate::tri_enum::DiskTriangulation;

/// A triple whose three edges are present while the face itself is not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissingFace {
    pub triple: Face,
    /// Number of vertices strictly inside the triple.
    pub density: usize,
    /// Those vertices, ascending.
    pub interior: Vec<Vertex>,
}

impl MissingFace {
    /// True when `other` lies in the closed region bounded by `self`.
    pub fn encloses(&self, other: &MissingFace) -> bool {
        other
            .triple
            .vertices()
            .iter()
            .all(|v| self.triple.contains(*v) || self.interior.binary_search(v).is_ok())
    }
}

/// All missing faces of `t`, sorted by triple.
///
/// The interior of a missing triple `xyz` is found without coordinates: in a
/// triangulated disk the 3-cycle `xyz` separates the plane, and a vertex lies
/// inside it exactly when every path from it to a boundary vertex not on the
/// cycle passes through `x`, `y` or `z`.
pub fn missing_faces(t: &DiskTriangulation) -> Vec<MissingFace> {
    let verts = t.vertices();
    let index: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nv = verts.len();
    let mut adj = vec![false; nv * nv];
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for f in t.faces() {
        for e in f.edges() {
            let (u, v) = (index[&e.lo()], index[&e.hi()]);
            if !adj[u * nv + v] {
                adj[u * nv + v] = true;
                adj[v * nv + u] = true;
                nbrs[u].push(v);
                nbrs[v].push(u);
            }
        }
    }
    let boundary_face = Face::sorted(t.boundary()[0], t.boundary()[1], t.boundary()[2]);
    let boundary_idx: Vec<usize> = t.boundary().iter().map(|v| index[v]).collect();

    let mut out = Vec::new();
    let mut mark = vec![0u32; nv];
    let mut stamp = 0u32;
    let mut stack = Vec::new();
    for x in 0..nv {
        for y in x + 1..nv {
            if !adj[x * nv + y] {
                continue;
            }
            for z in y + 1..nv {
                if !(adj[x * nv + z] && adj[y * nv + z]) {
                    continue;
                }
                let triple = Face::sorted(verts[x], verts[y], verts[z]);
                if triple == boundary_face || t.contains_face(&triple) {
                    continue;
                }
                // Flood from the outer boundary with x, y, z removed.
                stamp += 1;
                for &c in &[x, y, z] {
                    mark[c] = stamp;
                }
                stack.clear();
                for &b in &boundary_idx {
                    if mark[b] != stamp {
                        mark[b] = stamp;
                        stack.push(b);
                    }
                }
                while let Some(u) = stack.pop() {
                    for &w in &nbrs[u] {
                        if mark[w] != stamp {
                            mark[w] = stamp;
                            stack.push(w);
                        }
                    }
                }
                let interior: Vec<Vertex> = (0..nv)
                    .filter(|&i| mark[i] != stamp)
                    .map(|i| verts[i])
                    .collect();
                out.push(MissingFace {
                    triple,
                    density: interior.len(),
                    interior,
                });
            }
        }
    }
    out.sort_by_key(|m| m.triple);
    out
}
