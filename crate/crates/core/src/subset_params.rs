//! The complex `X_S` of a face set `S`, its edge/vertex statistics, the
//! half-integer parameter `Φ = 3 - e0 - e1/2 - β0 + β1`, and the identities
//! and inequalities that tie them together for proper subsets of a disk
//! triangulation.
//!
//! `X_S` always contains the fixed cycle `[1,2,3]`, whether or not `S`
//! covers it. `β1` is computed homologically as `β0 - χ(X_S)`: any `S` that
//! sits inside a triangulated disk has vanishing second homology, so the
//! Euler characteristic determines it. [`complement_regions`] gives the
//! planar reading of the same number (bounded components of the complement)
//! as an independent cross-check.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::face::{Edge, Face, Vertex};
use crate::tri_enum::{Census, DiskTriangulation};

/// The fixed vertices of the cycle `[1,2,3]`.
pub const FIXED: [Vertex; 3] = [1, 2, 3];

/// An exact half-integer, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_doubled(two_x: i64) -> Self {
        HalfInt(two_x)
    }

    pub fn from_int(x: i64) -> Self {
        HalfInt(2 * x)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `X_S` with its derived statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSetComplex {
    faces: Vec<Face>,
    vertices: Vec<Vertex>,
    edge_degrees: BTreeMap<Edge, u8>,
    pub e0: usize,
    pub e1: usize,
    pub e2: usize,
    pub beta0: usize,
    pub beta1: usize,
}

/// Builds `X_S` from a nonempty face set. Duplicate faces are merged.
pub fn build_xs(faces: &[Face]) -> Result<FaceSetComplex> {
    if faces.is_empty() {
        return Err(Error::EmptyFaceSet);
    }
    let mut faces = faces.to_vec();
    crate::face::canonicalize(&mut faces);

    let mut vertices: BTreeSet<Vertex> = FIXED.into_iter().collect();
    let mut edge_degrees: BTreeMap<Edge, u8> = [Edge::new(1, 2), Edge::new(1, 3), Edge::new(2, 3)]
        .into_iter()
        .map(|e| (e, 0))
        .collect();
    for f in &faces {
        vertices.extend(f.vertices());
        for e in f.edges() {
            let d = edge_degrees.entry(e).or_default();
            *d += 1;
            if *d > 2 {
                return Err(Error::EdgeDegree((e.lo(), e.hi())));
            }
        }
    }
    let [e0, e1, e2] = edge_degrees.values().fold([0usize; 3], |mut acc, &d| {
        acc[d as usize] += 1;
        acc
    });

    let vertices: Vec<Vertex> = vertices.into_iter().collect();
    let beta0 = components(&vertices, edge_degrees.keys().copied());
    let chi = vertices.len() as i64 - edge_degrees.len() as i64 + faces.len() as i64;
    let beta1 = beta0 as i64 - chi;
    if beta1 < 0 {
        return Err(Error::NotPlanar);
    }

    Ok(FaceSetComplex {
        faces,
        vertices,
        edge_degrees,
        e0,
        e1,
        e2,
        beta0,
        beta1: beta1 as usize,
    })
}

/// Convenience wrapper taking raw triples.
pub fn build_xs_from_triples(triples: &[[Vertex; 3]]) -> Result<FaceSetComplex> {
    let faces = triples
        .iter()
        .map(|&t| Face::from_triple(t))
        .collect::<Result<Vec<_>>>()?;
    build_xs(&faces)
}

fn components(vertices: &[Vertex], edges: impl Iterator<Item = Edge>) -> usize {
    let idx = |v: Vertex| vertices.binary_search(&v).expect("edge endpoint is a vertex");
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = vertices.len();
    for e in edges {
        let (a, b) = (find(&mut parent, idx(e.lo())), find(&mut parent, idx(e.hi())));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

/// Fixed / boundary / internal partition of `V(X_S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexClasses {
    pub fixed: [Vertex; 3],
    pub boundary: Vec<Vertex>,
    pub internal: Vec<Vertex>,
}

impl FaceSetComplex {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edge_degrees(&self) -> &BTreeMap<Edge, u8> {
        &self.edge_degrees
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_degrees.len() as i64 + self.faces.len() as i64
    }

    /// Non-fixed vertices on a degree-1 edge are boundary, the rest internal.
    pub fn classify_vertices(&self) -> VertexClasses {
        let on_free_edge: BTreeSet<Vertex> = self
            .edge_degrees
            .iter()
            .filter(|(_, &d)| d == 1)
            .flat_map(|(e, _)| [e.lo(), e.hi()])
            .collect();
        let (boundary, internal) = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !FIXED.contains(v))
            .partition(|v| on_free_edge.contains(v));
        VertexClasses {
            fixed: FIXED,
            boundary,
            internal,
        }
    }

    /// `Φ = 3 - e0 - e1/2 - β0 + β1`.
    pub fn phi(&self) -> HalfInt {
        HalfInt::from_doubled(
            6 - 2 * self.e0 as i64 - self.e1 as i64 - 2 * self.beta0 as i64 + 2 * self.beta1 as i64,
        )
    }
}

/// `(v_∂, v_I, v_O, Φ)` of a face set inside a triangulation with `k`
/// internal vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ParamTuple {
    pub v_boundary: usize,
    pub v_internal: usize,
    pub v_outer: usize,
    pub phi: HalfInt,
}

impl ParamTuple {
    fn from_complex(xs: &FaceSetComplex, parent_k: usize) -> Result<Self> {
        let classes = xs.classify_vertices();
        let used = classes.boundary.len() + classes.internal.len();
        if used > parent_k {
            return Err(Error::NegativeOuter { k: parent_k, used });
        }
        Ok(ParamTuple {
            v_boundary: classes.boundary.len(),
            v_internal: classes.internal.len(),
            v_outer: parent_k - used,
            phi: xs.phi(),
        })
    }
}

pub fn param_tuple(faces: &[Face], parent_k: usize) -> Result<ParamTuple> {
    ParamTuple::from_complex(&build_xs(faces)?, parent_k)
}

/// Bounded components of the complement of `X_S`, read off the embedding
/// that `parent` induces: parent faces outside `S`, glued along parent edges
/// that `X_S` does not contain.
pub fn complement_regions(faces: &[Face], parent: &DiskTriangulation) -> Result<usize> {
    check_parent(parent)?;
    let in_s: HashSet<Face> = faces.iter().copied().collect();
    let covered: HashSet<Edge> = faces.iter().flat_map(|f| f.edges()).collect();
    let outside: Vec<Face> = parent
        .faces()
        .iter()
        .copied()
        .filter(|f| !in_s.contains(f))
        .collect();
    let mut by_edge: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, f) in outside.iter().enumerate() {
        for e in f.edges() {
            if !covered.contains(&e) {
                by_edge.entry(e).or_default().push(i);
            }
        }
    }
    let mut parent_of: Vec<usize> = (0..outside.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = outside.len();
    for group in by_edge.values() {
        for w in group.windows(2) {
            let (a, b) = (find(&mut parent_of, w[0]), find(&mut parent_of, w[1]));
            if a != b {
                parent_of[a] = b;
                count -= 1;
            }
        }
    }
    Ok(count)
}

fn check_parent(parent: &DiskTriangulation) -> Result<()> {
    let mut b = parent.boundary();
    b.sort_unstable();
    if b != FIXED {
        return Err(Error::InvalidArgument(
            "parent triangulation must bound the cycle [1,2,3]".into(),
        ));
    }
    Ok(())
}

/// One evaluated relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Names of the relations in the order [`check_phieuler`] reports them.
pub const RELATIONS: [&str; 9] = [
    "size_identity",
    "phi_nonpositive",
    "phi_dichotomy",
    "phi_zero_outer",
    "phi_boundary_bound",
    "complement_bound",
    "euler_identity",
    "incidence",
    "betti_positive",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiEulerReport {
    pub tuple: ParamTuple,
    pub size: usize,
    pub e0: usize,
    pub e1: usize,
    pub e2: usize,
    pub beta0: usize,
    pub beta1: usize,
    pub relations: Vec<RelationCheck>,
}

impl PhiEulerReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.relations.iter().filter(|r| !r.holds).map(|r| r.name)
    }
}

/// Evaluates every relation for a proper nonempty subset `S` of `parent`:
///
/// * `|S| = 2(v_∂ + v_I + Φ)`
/// * `Φ ≤ 0`, and `Φ ≤ -1/2` unless `Φ = 0`
/// * `Φ = 0` and `parent` is `k/2`-simple (every density `≤ k/2`) imply `v_O ≤ k/2`
/// * `Φ ≤ 1 - v_∂/6`
/// * `3β1 ≤ 2e0 + e1 - 3`
/// * `v_∂ + v_I + 3 - e0 - e1 - e2 + |S| = β0 - β1`
/// * `3|S| = e1 + 2e2`
/// * `β0 ≥ 1` and `β1 ≥ 1`
pub fn check_phieuler(faces: &[Face], parent: &DiskTriangulation) -> Result<PhiEulerReport> {
    check_parent(parent)?;
    let half_simple = parent.max_density().is_none_or(|d| 2 * d <= parent.k());
    check_with_parent_info(faces, parent, half_simple)
}

fn check_with_parent_info(
    faces: &[Face],
    parent: &DiskTriangulation,
    parent_half_simple: bool,
) -> Result<PhiEulerReport> {
    let mut sorted = faces.to_vec();
    crate::face::canonicalize(&mut sorted);
    if sorted.is_empty()
        || sorted.len() >= parent.faces().len()
        || !sorted.iter().all(|f| parent.contains_face(f))
    {
        return Err(Error::NotProperSubset);
    }
    let xs = build_xs(&sorted)?;
    let t = ParamTuple::from_complex(&xs, parent.k())?;
    let k = parent.k() as i64;
    let s = sorted.len() as i64;
    let (e0, e1, e2) = (xs.e0 as i64, xs.e1 as i64, xs.e2 as i64);
    let (b0, b1) = (xs.beta0 as i64, xs.beta1 as i64);
    let (vb, vi, vo) = (t.v_boundary as i64, t.v_internal as i64, t.v_outer as i64);
    let two_phi = t.phi.doubled();

    let relations = vec![
        RelationCheck {
            name: "size_identity",
            holds: 2 * s == 4 * (vb + vi) + 2 * two_phi,
        },
        RelationCheck {
            name: "phi_nonpositive",
            holds: two_phi <= 0,
        },
        RelationCheck {
            name: "phi_dichotomy",
            holds: two_phi <= -1 || two_phi == 0,
        },
        RelationCheck {
            name: "phi_zero_outer",
            holds: !(two_phi == 0 && parent_half_simple) || 2 * vo <= k,
        },
        RelationCheck {
            name: "phi_boundary_bound",
            // Φ ≤ 1 - v∂/6  <=>  6·(2Φ) ≤ 12 - 2v∂
            holds: 6 * two_phi <= 12 - 2 * vb,
        },
        RelationCheck {
            name: "complement_bound",
            holds: 3 * b1 <= 2 * e0 + e1 - 3,
        },
        RelationCheck {
            name: "euler_identity",
            holds: vb + vi + 3 - e0 - e1 - e2 + s == b0 - b1,
        },
        RelationCheck {
            name: "incidence",
            holds: 3 * s == e1 + 2 * e2,
        },
        RelationCheck {
            name: "betti_positive",
            holds: b0 >= 1 && b1 >= 1,
        },
    ];
    Ok(PhiEulerReport {
        tuple: t,
        size: sorted.len(),
        e0: xs.e0,
        e1: xs.e1,
        e2: xs.e2,
        beta0: xs.beta0,
        beta1: xs.beta1,
        relations,
    })
}

/// Which triangulations count as witnesses in [`is_admissible`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessFamily {
    All,
    LSimple(usize),
}

/// Decides admissibility by search: is `S` strictly contained in some
/// triangulation of `[1,2,3]` with `k` internal vertices from `family`?
///
/// Exponential in `k` (it scans the census); intended for small cases.
pub fn is_admissible(faces: &[Face], k: usize, family: WitnessFamily) -> Result<bool> {
    if faces.is_empty() {
        return Ok(false);
    }
    let mut labels: BTreeSet<Vertex> = faces.iter().flat_map(|f| f.vertices()).collect();
    for v in FIXED {
        labels.remove(&v);
    }
    if labels.len() > k {
        return Ok(false);
    }
    // Outer vertices get placeholder labels beyond every label in S.
    let mut next = labels.iter().max().copied().unwrap_or(3).max(3) + 1;
    let mut internal: Vec<Vertex> = labels.into_iter().collect();
    while internal.len() < k {
        internal.push(next);
        next += 1;
    }
    let census = Census::new(k, FIXED, &internal)?;
    let need: Vec<Face> = {
        let mut v = faces.to_vec();
        crate::face::canonicalize(&mut v);
        v
    };
    for t in &census {
        if need.len() < t.faces().len() && need.iter().all(|f| t.contains_face(f)) {
            let ok = match family {
                WitnessFamily::All => true,
                WitnessFamily::LSimple(l) => t.is_l_simple(l),
            };
            if ok {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Per-tuple tallies of a subset scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TupleStats {
    pub count: u64,
    /// Subsets with this tuple that failed at least one relation.
    pub violations: u64,
}

/// Result of scanning subsets of census members.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubsetScan {
    pub k: usize,
    pub subsets: u64,
    pub histogram: BTreeMap<ParamTuple, TupleStats>,
    pub relation_failures: BTreeMap<&'static str, u64>,
    /// Subsets where `β1` disagreed with the planar complement count.
    pub planar_betti_mismatches: u64,
}

impl SubsetScan {
    fn new(k: usize) -> Self {
        SubsetScan {
            k,
            relation_failures: RELATIONS.iter().map(|&r| (r, 0)).collect(),
            ..Default::default()
        }
    }

    fn record(&mut self, faces: &[Face], parent: &DiskTriangulation, half_simple: bool) -> Result<()> {
        let report = check_with_parent_info(faces, parent, half_simple)?;
        let regions = complement_regions(faces, parent)?;
        if regions != report.beta1 {
            self.planar_betti_mismatches += 1;
        }
        let stats = self.histogram.entry(report.tuple).or_default();
        stats.count += 1;
        if !report.all_hold() {
            stats.violations += 1;
        }
        for name in report.failures() {
            *self.relation_failures.entry(name).or_default() += 1;
        }
        self.subsets += 1;
        Ok(())
    }

    pub fn total_violations(&self) -> u64 {
        self.histogram.values().map(|s| s.violations).sum()
    }

    /// `# schema=1` CSV: the tuple histogram, then one summary comment line
    /// per relation.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("# schema=1\n");
        out.push_str(&format!("# k={} subsets={}\n", self.k, self.subsets));
        out.push_str("v_boundary,v_internal,v_outer,two_phi,count,violations\n");
        for (t, s) in &self.histogram {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                t.v_boundary,
                t.v_internal,
                t.v_outer,
                t.phi.doubled(),
                s.count,
                s.violations
            ));
        }
        for (name, fails) in &self.relation_failures {
            let status = if *fails == 0 { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "# relation={name} checked={} failures={fails} status={status}\n",
                self.subsets
            ));
        }
        let status = if self.planar_betti_mismatches == 0 { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "# relation=planar_betti checked={} failures={} status={status}\n",
            self.subsets, self.planar_betti_mismatches
        ));
        out
    }
}

fn is_half_simple(t: &DiskTriangulation) -> bool {
    t.max_density().is_none_or(|d| 2 * d <= t.k())
}

/// Every proper nonempty subset of every labeled triangulation with `k`
/// internal vertices (`t_k * (2^(2k+1) - 2)` subsets).
pub fn scan_exhaustive(k: usize) -> Result<SubsetScan> {
    let census = Census::standard(k)?;
    let mut scan = SubsetScan::new(k);
    let mut subset = Vec::with_capacity(2 * k + 1);
    for t in &census {
        let half_simple = is_half_simple(&t);
        let m = t.faces().len();
        for mask in 1u32..(1u32 << m) - 1 {
            subset.clear();
            subset.extend((0..m).filter(|i| mask >> i & 1 == 1).map(|i| t.faces()[i]));
            scan.record(&subset, &t, half_simple)?;
        }
    }
    Ok(scan)
}

/// `samples` uniformly random (triangulation, proper nonempty subset) pairs
/// from the labeled census, seeded.
pub fn scan_sampled(k: usize, samples: u64, seed: u64) -> Result<SubsetScan> {
    let census = Census::standard(k)?;
    let shapes = census.shapes();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scan = SubsetScan::new(k);
    let mut labels: Vec<Vertex> = (4..4 + k as Vertex).collect();
    let m = 2 * k + 1;
    let mut subset = Vec::with_capacity(m);
    for _ in 0..samples {
        let shape = &shapes[rng.gen_range(0..shapes.len())];
        labels.shuffle(&mut rng);
        let faces: Vec<Face> = shape
            .faces()
            .iter()
            .map(|f| f.map(|v| if v <= 3 { v } else { labels[v as usize - 4] }))
            .collect();
        let t = DiskTriangulation::new(FIXED, faces)?;
        let mask: u32 = rng.gen_range(1..(1u32 << m) - 1);
        subset.clear();
        subset.extend((0..m).filter(|i| mask >> i & 1 == 1).map(|i| t.faces()[i]));
        scan.record(&subset, &t, is_half_simple(&t))?;
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(ts: &[[Vertex; 3]]) -> Vec<Face> {
        ts.iter().map(|&t| Face::from_triple(t).unwrap()).collect()
    }

    #[test]
    fn single_face_complex() {
        let xs = build_xs_from_triples(&[[1, 2, 4]]).unwrap();
        assert_eq!((xs.e0, xs.e1, xs.e2), (2, 3, 0));
        assert_eq!((xs.beta0, xs.beta1), (1, 1));
        assert_eq!(xs.phi(), HalfInt::from_doubled(-1));
        let c = xs.classify_vertices();
        assert_eq!(c.boundary, vec![4]);
        assert!(c.internal.is_empty());
    }

    #[test]
    fn whole_cone_is_contractible() {
        let xs = build_xs_from_triples(&[[1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
        assert_eq!((xs.e0, xs.e1, xs.e2), (0, 3, 3));
        assert_eq!((xs.beta0, xs.beta1), (1, 0));
        let c = xs.classify_vertices();
        assert!(c.boundary.is_empty());
        assert_eq!(c.internal, vec![4]);
    }

    #[test]
    fn cone_minus_one_face() {
        let s = fs(&[[1, 2, 4], [1, 3, 4]]);
        let xs = build_xs(&s).unwrap();
        assert_eq!(xs.phi(), HalfInt::ZERO);
        let t = param_tuple(&s, 1).unwrap();
        assert_eq!(
            t,
            ParamTuple {
                v_boundary: 1,
                v_internal: 0,
                v_outer: 0,
                phi: HalfInt::ZERO
            }
        );
        let parent = DiskTriangulation::cone(FIXED, 4).unwrap();
        assert!(check_phieuler(&s, &parent).unwrap().all_hold());
        assert_eq!(complement_regions(&s, &parent).unwrap(), 1);
    }

    fn hex_faces(text: &str) -> Vec<Face> {
        text.split_whitespace()
            .map(|w| {
                let d: Vec<Vertex> = w.chars().map(|c| c.to_digit(16).unwrap()).collect();
                Face::new(d[0], d[1], d[2]).unwrap()
            })
            .collect()
    }

    #[test]
    fn worked_example() {
        let s = hex_faces("126 23E 24E 3AE 459 467 478 489 4AE 569 679 BCD");
        let xs = build_xs(&s).unwrap();
        assert_eq!((xs.e0, xs.e1, xs.e2), (1, 16, 10));
        assert_eq!((xs.beta0, xs.beta1), (2, 3));
        assert_eq!(xs.phi(), HalfInt::from_int(-5));
        let c = xs.classify_vertices();
        assert_eq!((c.boundary.len(), c.internal.len()), (10, 1));
        assert_eq!(c.internal, vec![14]);

        let mut all = s.clone();
        all.extend(hex_faces("246 789 16B 56B 45C 4AC 3AD 13D 5BC ACD 1BD"));
        let parent = DiskTriangulation::new(FIXED, all).unwrap();
        assert_eq!(parent.k(), 11);
        assert_eq!(complement_regions(&s, &parent).unwrap(), 3);
        let report = check_phieuler(&s, &parent).unwrap();
        assert!(report.all_hold(), "{:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.tuple.v_outer, 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(build_xs(&[]), Err(Error::EmptyFaceSet)));
        assert!(matches!(
            build_xs_from_triples(&[[1, 1, 4]]),
            Err(Error::RepeatedVertex(_))
        ));
        assert!(matches!(
            build_xs_from_triples(&[[1, 2, 4], [1, 2, 5], [1, 2, 6]]),
            Err(Error::EdgeDegree((1, 2)))
        ));
        let s = fs(&[[1, 2, 4], [1, 3, 5]]);
        assert!(matches!(param_tuple(&s, 1), Err(Error::NegativeOuter { .. })));
        let parent = DiskTriangulation::cone(FIXED, 4).unwrap();
        assert!(matches!(
            check_phieuler(parent.faces(), &parent),
            Err(Error::NotProperSubset)
        ));
    }

    #[test]
    fn half_int_display() {
        assert_eq!(HalfInt::from_doubled(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::from_int(-5).to_string(), "-5");
    }

    #[test]
    fn admissibility_search() {
        let s = fs(&[[1, 2, 4]]);
        assert!(is_admissible(&s, 1, WitnessFamily::All).unwrap());
        assert!(!is_admissible(&s, 0, WitnessFamily::All).unwrap());
        // A face through two internal vertices needs k >= 2.
        let s = fs(&[[1, 4, 5]]);
        assert!(!is_admissible(&s, 1, WitnessFamily::All).unwrap());
        assert!(is_admissible(&s, 2, WitnessFamily::All).unwrap());
    }

    #[test]
    fn small_exhaustive_scan_is_clean() {
        for k in 1..=2 {
            let scan = scan_exhaustive(k).unwrap();
            assert_eq!(scan.total_violations(), 0);
            assert_eq!(scan.planar_betti_mismatches, 0);
        }
    }
}
