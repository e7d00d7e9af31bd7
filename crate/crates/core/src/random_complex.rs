//! Linial–Meshulam complexes `Y_2(n, p)`: complete 1-skeleton on `{1..n}`
//! plus a set of 2-faces.
//!
//! Sampling is counter-based. Triple `a < b < c` has colex rank
//! `C(c-1,3) + C(b-1,2) + (a-1)`; the face is kept iff
//! `splitmix64(seed, rank) < floor(p * 2^64)`, where `splitmix64(seed, r)` is
//! output `r` of the SplitMix64 stream started at `seed`. The result depends
//! only on `(n, p, seed)`, and raising `p` never removes a face.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::face::{Face, Vertex};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// Output `rank` (0-based) of the SplitMix64 generator seeded with `seed`.
pub fn splitmix64(seed: u64, rank: u64) -> u64 {
    let mut z = seed.wrapping_add(GOLDEN.wrapping_mul(rank.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Colex rank of a sorted triple over `{1..}`.
pub fn triple_rank(f: &Face) -> u64 {
    let [a, b, c] = f.vertices().map(u64::from);
    (c - 1) * (c - 2) * (c - 3) / 6 + (b - 1) * (b - 2) / 2 + (a - 1)
}

fn edge_rank(u: Vertex, v: Vertex) -> usize {
    let (u, v) = (u.min(v) as usize, u.max(v) as usize);
    (v - 1) * (v - 2) / 2 + (u - 1)
}

fn triple_count(n: u32) -> u64 {
    let n = u64::from(n);
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// `None` keeps every face; otherwise keep iff the mixed value is below it.
fn threshold(p: f64) -> Option<u64> {
    if p >= 1.0 {
        None
    } else {
        // p * 2^64 is exact in f64; the cast truncates toward zero.
        Some((p * 18_446_744_073_709_551_616.0) as u64)
    }
}

/// Generation metadata of a sampled complex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleOrigin {
    pub seed: u64,
    pub p: f64,
}

/// An immutable 2-complex with complete 1-skeleton.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex2 {
    n: u32,
    /// Colex order.
    faces: Vec<Face>,
    /// Bit per colex rank.
    present: Vec<u64>,
    /// CSR over edge ranks: apices of edge `e` are
    /// `apices[offsets[e]..offsets[e + 1]]`, ascending.
    offsets: Vec<u32>,
    apices: Vec<Vertex>,
    origin: Option<SampleOrigin>,
}

impl Complex2 {
    /// Draws `Y_2(n, p)`.
    pub fn sample(n: u32, p: f64, seed: u64) -> Result<Self> {
        check_n(n)?;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Probability(p));
        }
        let cut = threshold(p);
        let mut faces = Vec::new();
        let mut rank = 0u64;
        for c in 3..=n {
            for b in 2..c {
                for a in 1..b {
                    if cut.is_none_or(|t| splitmix64(seed, rank) < t) {
                        faces.push(Face::sorted(a, b, c));
                    }
                    rank += 1;
                }
            }
        }
        Ok(Self::build(n, faces, Some(SampleOrigin { seed, p })))
    }

    /// All `C(n,3)` faces.
    pub fn complete(n: u32) -> Result<Self> {
        check_n(n)?;
        let mut faces = Vec::with_capacity(triple_count(n) as usize);
        for c in 3..=n {
            for b in 2..c {
                for a in 1..b {
                    faces.push(Face::sorted(a, b, c));
                }
            }
        }
        Ok(Self::build(n, faces, None))
    }

    /// The bare 1-skeleton.
    pub fn empty(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(Self::build(n, Vec::new(), None))
    }

    /// A complex with the given faces; duplicates are merged.
    pub fn from_faces(n: u32, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        check_n(n)?;
        let mut faces: Vec<Face> = faces.into_iter().collect();
        if let Some(f) = faces.iter().find(|f| f.vertices()[2] > n) {
            return Err(Error::InvalidArgument(format!("face {f} outside 1..={n}")));
        }
        faces.sort_unstable_by_key(triple_rank);
        faces.dedup();
        Ok(Self::build(n, faces, None))
    }

    fn build(n: u32, faces: Vec<Face>, origin: Option<SampleOrigin>) -> Self {
        let mut present = vec![0u64; (triple_count(n) as usize).div_ceil(64)];
        let n_edges = (n as usize) * (n as usize - 1) / 2;
        let mut offsets = vec![0u32; n_edges + 1];
        for f in &faces {
            let r = triple_rank(f) as usize;
            present[r / 64] |= 1 << (r % 64);
            for e in f.edges() {
                offsets[edge_rank(e.lo(), e.hi()) + 1] += 1;
            }
        }
        for i in 0..n_edges {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut apices = vec![0; 3 * faces.len()];
        for f in &faces {
            for e in f.edges() {
                let slot = &mut fill[edge_rank(e.lo(), e.hi())];
                apices[*slot as usize] = f.apex(e).expect("edge of its own face");
                *slot += 1;
            }
        }
        for e in 0..n_edges {
            apices[offsets[e] as usize..offsets[e + 1] as usize].sort_unstable();
        }
        Complex2 {
            n,
            faces,
            present,
            offsets,
            apices,
            origin,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Faces in colex order.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn origin(&self) -> Option<SampleOrigin> {
        self.origin
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        if f.vertices()[2] > self.n {
            return false;
        }
        let r = triple_rank(f) as usize;
        self.present[r / 64] >> (r % 64) & 1 == 1
    }

    /// `{w : {u,v,w} ∈ Y}`, ascending. Empty for `u == v` or labels outside
    /// `1..=n`.
    pub fn faces_on_edge(&self, u: Vertex, v: Vertex) -> &[Vertex] {
        if u == v || u == 0 || v == 0 || u > self.n || v > self.n {
            return &[];
        }
        let e = edge_rank(u, v);
        &self.apices[self.offsets[e] as usize..self.offsets[e + 1] as usize]
    }

    /// Text form: `n <N>` then one `a b c` line per face.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(12 * self.faces.len() + 32);
        if let Some(o) = self.origin {
            let _ = writeln!(out, "# sampled seed={} p={}", o.seed, o.p);
        }
        let _ = writeln!(out, "n {}", self.n);
        for f in &self.faces {
            let [a, b, c] = f.vertices();
            let _ = writeln!(out, "{a} {b} {c}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<u32> = None;
        let mut origin = None;
        let mut faces = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| Error::Parse { line, message };
            let trimmed = raw.trim();
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(meta) = comment.trim().strip_prefix("sampled ") {
                    origin = Some(parse_origin(meta).map_err(err)?);
                }
                continue;
            }
            if trimmed.is_empty() {
                continue;
            }
            let words: Vec<&str> = trimmed.split_whitespace().collect();
            let Some(n) = n else {
                match words.as_slice() {
                    ["n", v] => {
                        let v: u32 = v.parse().map_err(|_| err(format!("bad vertex count {v:?}")))?;
                        check_n(v).map_err(|e| err(e.to_string()))?;
                        n = Some(v);
                        continue;
                    }
                    _ => return Err(err("expected header `n <N>`".into())),
                }
            };
            let [a, b, c] = words.as_slice() else {
                return Err(err(format!("expected three vertices, got {}", words.len())));
            };
            let mut t = [0u32; 3];
            for (slot, w) in t.iter_mut().zip([a, b, c]) {
                let v: i64 = w.parse().map_err(|_| err(format!("bad vertex {w:?}")))?;
                if v < 1 || v > i64::from(n) {
                    return Err(Error::OutOfRange { line, vertex: v, n });
                }
                *slot = v as u32;
            }
            let f = Face::from_triple(t).map_err(|e| err(e.to_string()))?;
            faces.push(f);
        }
        let n = n.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing header `n <N>`".into(),
        })?;
        let mut y = Self::from_faces(n, faces)?;
        y.origin = origin;
        Ok(y)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_text()).map_err(|e| Error::io(path, e))
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("need n >= 3, got {n}")));
    }
    Ok(())
}

fn parse_origin(meta: &str) -> std::result::Result<SampleOrigin, String> {
    let (mut seed, mut p) = (None, None);
    for kv in meta.split_whitespace() {
        match kv.split_once('=') {
            Some(("seed", v)) => seed = v.parse().ok(),
            Some(("p", v)) => p = v.parse().ok(),
            _ => {}
        }
    }
    match (seed, p) {
        (Some(seed), Some(p)) => Ok(SampleOrigin { seed, p }),
        _ => Err(format!("bad sample metadata {meta:?}")),
    }
}
