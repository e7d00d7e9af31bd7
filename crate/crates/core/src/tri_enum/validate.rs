//! Structural recognition of triangulated disks, independent of the enumerator.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::face::{Edge, Face, Vertex};

/// Returns true iff `faces` is a triangulation of the disk bounded by the
/// cycle `boundary`: edge degrees 1/2 with the degree-1 edges exactly the
/// boundary edges, cycle links at internal vertices, path links at boundary
/// vertices, connected face adjacency, `V - E + F = 1` and `|F| = 2k + 1`.
pub fn is_disk_triangulation(faces: &[Face], boundary: [Vertex; 3]) -> bool {
    let [x, y, z] = boundary;
    if x == y || y == z || x == z || faces.is_empty() {
        return false;
    }
    let face_set: BTreeSet<Face> = faces.iter().copied().collect();
    if face_set.len() != faces.len() {
        return false;
    }

    let mut vertices: BTreeSet<Vertex> = boundary.into_iter().collect();
    for f in faces {
        vertices.extend(f.vertices());
    }
    let k = vertices.len() - 3;
    if faces.len() != 2 * k + 1 {
        return false;
    }

    let mut degree: HashMap<Edge, usize> = HashMap::new();
    for f in faces {
        for e in f.edges() {
            *degree.entry(e).or_default() += 1;
        }
    }
    let boundary_edges = [Edge::new(x, y), Edge::new(x, z), Edge::new(y, z)];
    for (&e, &d) in &degree {
        let on_boundary = boundary_edges.contains(&e);
        match (d, on_boundary) {
            (1, true) | (2, false) => {}
            _ => return false,
        }
    }
    if boundary_edges.iter().any(|e| !degree.contains_key(e)) {
        return false;
    }

    // Links: opposite edges of the faces around each vertex.
    let mut links: BTreeMap<Vertex, Vec<Edge>> = BTreeMap::new();
    for f in faces {
        let [a, b, c] = f.vertices();
        links.entry(a).or_default().push(Edge::new(b, c));
        links.entry(b).or_default().push(Edge::new(a, c));
        links.entry(c).or_default().push(Edge::new(a, b));
    }
    for &v in &vertices {
        let Some(link) = links.get(&v) else {
            return false;
        };
        let ends = if v == x {
            Some((y, z))
        } else if v == y {
            Some((x, z))
        } else if v == z {
            Some((x, y))
        } else {
            None
        };
        if !link_shape_ok(link, ends) {
            return false;
        }
    }

    if !faces_connected(faces) {
        return false;
    }

    let chi = vertices.len() as i64 - degree.len() as i64 + faces.len() as i64;
    chi == 1
}

/// A link is a single cycle (`ends == None`) or a single path between the
/// two given ends.
fn link_shape_ok(link: &[Edge], ends: Option<(Vertex, Vertex)>) -> bool {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for e in link {
        adj.entry(e.lo()).or_default().push(e.hi());
        adj.entry(e.hi()).or_default().push(e.lo());
    }
    for (&u, nbrs) in &adj {
        let want = match ends {
            Some((a, b)) if u == a || u == b => 1,
            _ => 2,
        };
        if nbrs.len() != want {
            return false;
        }
    }
    if let Some((a, b)) = ends {
        if !adj.contains_key(&a) || !adj.contains_key(&b) {
            return false;
        }
    }
    // Degree pattern fixed; connectivity rules out extra disjoint cycles.
    let start = *adj.keys().next().expect("nonempty link");
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[&u] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == adj.len()
}

fn faces_connected(faces: &[Face]) -> bool {
    let mut by_edge: HashMap<Edge, Vec<usize>> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for e in f.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut seen = vec![false; faces.len()];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for e in faces[i].edges() {
            for &j in &by_edge[&e] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
    }
    count == faces.len()
}
