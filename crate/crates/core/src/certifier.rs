//! Search for triangulated disks bounding 3-cycles of a [`Complex2`], and a
//! simple-connectivity certifier built on it.
//!
//! The search keeps a stack of pending polygons (holes still to be filled),
//! the set of vertices already placed, the edges of the partial disk, and the
//! number of fresh internal vertices still allowed. A step picks the pending
//! edge with the fewest feasible apices and branches over them: an apex is
//! either an unused vertex (one more internal vertex) or a vertex of the same
//! polygon (splitting it). A chord may not duplicate an edge already in the
//! disk, so every completed face set is a simplicial disk.
//!
//! Failed states are memoized under a 128-bit digest of everything the future
//! of a state depends on. A digest collision can only hide a disk, never
//! produce an invalid one, and every certificate is re-validated anyway.

use std::collections::{HashMap, HashSet};
use std::hash::{DefaultHasher, Hash, Hasher};
use std::ops::ControlFlow;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{Face, Vertex};
use crate::random_complex::Complex2;
use crate::tri_enum::DiskTriangulation;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// `min(8, ceil(ln(n)^2))`.
pub fn default_max_internal(n: u32) -> usize {
    let l = f64::from(n.max(1)).ln();
    ((l * l).ceil() as usize).min(8)
}

/// Internal-vertex cap and per-cycle state budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchLimits {
    pub max_internal: usize,
    pub budget: u64,
}

impl SearchLimits {
    pub fn new(max_internal: usize, budget: u64) -> Self {
        SearchLimits {
            max_internal,
            budget,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub states: u64,
    pub faces_probed: u64,
    pub memo_hits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiskCertificate {
    pub cycle: [Vertex; 3],
    pub disk: DiskTriangulation,
    pub internal_used: usize,
    pub stats: SearchStats,
}

impl DiskCertificate {
    /// Re-checks the certificate against `y` from scratch.
    pub fn validate(&self, y: &Complex2) -> Result<()> {
        let faces = self.disk.faces();
        if !crate::tri_enum::is_disk_triangulation(faces, self.cycle) {
            return Err(Error::CertificateRejected("not a disk triangulation".into()));
        }
        if let Some(f) = faces.iter().find(|f| !y.contains_face(f)) {
            return Err(Error::CertificateRejected(format!("face {f} not in the complex")));
        }
        if self.disk.k() != self.internal_used {
            return Err(Error::CertificateRejected("internal vertex count mismatch".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(DiskCertificate),
    /// No disk with at most `max_internal` internal vertices exists.
    Absent(SearchStats),
    /// The budget ran out first; nothing is claimed.
    BudgetExhausted(SearchStats),
}

impl SearchOutcome {
    pub fn stats(&self) -> SearchStats {
        match self {
            SearchOutcome::Found(c) => c.stats,
            SearchOutcome::Absent(s) | SearchOutcome::BudgetExhausted(s) => *s,
        }
    }

    pub fn certificate(&self) -> Option<&DiskCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

fn check_cycle(y: &Complex2, cycle: [Vertex; 3]) -> Result<()> {
    Face::from_triple(cycle)?;
    if let Some(&v) = cycle.iter().find(|&&v| v == 0 || v > y.n()) {
        return Err(Error::InvalidArgument(format!("vertex {v} outside 1..={}", y.n())));
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Apex {
    Fresh(Vertex),
    /// Index of the apex in the polygon being expanded.
    Split(usize),
}

struct Undo {
    poly: usize,
    old: Vec<Vertex>,
    pushed: usize,
    added: [Option<(Vertex, Vertex)>; 2],
    fresh: bool,
}

enum Flow {
    Hit,
    Miss,
    Stop,
    Abort,
}

struct Engine<'y> {
    y: &'y Complex2,
    n: usize,
    polys: Vec<Vec<Vertex>>,
    used: Vec<bool>,
    fresh: Vec<Vertex>,
    edges: Vec<u64>,
    faces: Vec<Face>,
    remaining: usize,
    budget: u64,
    stats: SearchStats,
    fail_memo: HashSet<u128>,
    count_memo: HashMap<u128, Vec<u128>>,
}

impl<'y> Engine<'y> {
    fn new(y: &'y Complex2, cycle: [Vertex; 3], budget: u64) -> Self {
        let n = y.n() as usize;
        let mut e = Engine {
            y,
            n,
            polys: vec![cycle.to_vec()],
            used: vec![false; n + 1],
            fresh: Vec::new(),
            edges: vec![0; ((n + 1) * (n + 1)).div_ceil(64)],
            faces: Vec::new(),
            remaining: 0,
            budget,
            stats: SearchStats::default(),
            fail_memo: HashSet::new(),
            count_memo: HashMap::new(),
        };
        for (i, &v) in cycle.iter().enumerate() {
            e.used[v as usize] = true;
            e.set_edge(v, cycle[(i + 1) % 3], true);
        }
        e
    }

    fn bit(&self, u: Vertex, v: Vertex) -> usize {
        let (u, v) = (u.min(v) as usize, u.max(v) as usize);
        u * (self.n + 1) + v
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let b = self.bit(u, v);
        self.edges[b / 64] >> (b % 64) & 1 == 1
    }

    fn set_edge(&mut self, u: Vertex, v: Vertex, on: bool) {
        let b = self.bit(u, v);
        if on {
            self.edges[b / 64] |= 1 << (b % 64);
        } else {
            self.edges[b / 64] &= !(1 << (b % 64));
        }
    }

    /// Feasible apices for edge `(p[i], p[i+1])` of polygon `p`; polygon
    /// vertices first, then fresh vertices, each ascending.
    fn candidates(&mut self, p: &[Vertex], i: usize, out: Option<&mut Vec<Apex>>) -> usize {
        let l = p.len();
        let (a, b) = (p[i], p[(i + 1) % l]);
        let mut count = 0;
        let mut fresh = 0;
        let mut buf = out;
        let apices = self.y.faces_on_edge(a, b);
        self.stats.faces_probed += apices.len() as u64;
        for &w in apices {
            if !self.used[w as usize] {
                fresh += 1;
                continue;
            }
            let Some(j) = p.iter().position(|&v| v == w) else {
                continue;
            };
            let a_ok = j == (i + l - 1) % l || !self.has_edge(a, w);
            let b_ok = j == (i + 2) % l || !self.has_edge(b, w);
            if a_ok && b_ok {
                count += 1;
                if let Some(buf) = buf.as_deref_mut() {
                    buf.push(Apex::Split(j));
                }
            }
        }
        if self.remaining == 0 {
            return count;
        }
        if let Some(buf) = buf {
            buf.extend(
                apices
                    .iter()
                    .filter(|&&w| !self.used[w as usize])
                    .map(|&w| Apex::Fresh(w)),
            );
        }
        count + fresh
    }

    /// The pending edge with the fewest feasible apices; ties go to the
    /// smaller edge. Edges are unique across pending polygons, so the choice
    /// does not depend on stack order.
    fn choose(&mut self) -> (usize, usize, Vec<Apex>) {
        let mut best: Option<(usize, (Vertex, Vertex), usize, usize)> = None;
        let polys = std::mem::take(&mut self.polys);
        for (pi, p) in polys.iter().enumerate() {
            for i in 0..p.len() {
                let (a, b) = (p[i], p[(i + 1) % p.len()]);
                let key = (a.min(b), a.max(b));
                let c = self.candidates(p, i, None);
                if best.is_none_or(|(bc, bk, _, _)| (c, key) < (bc, bk)) {
                    best = Some((c, key, pi, i));
                }
                if c == 0 {
                    break;
                }
            }
            if best.is_some_and(|b| b.0 == 0) {
                break;
            }
        }
        let (_, _, pi, i) = best.expect("at least one pending polygon");
        let mut cands = Vec::new();
        self.candidates(&polys[pi], i, Some(&mut cands));
        self.polys = polys;
        (pi, i, cands)
    }

    fn apply(&mut self, pi: usize, i: usize, apex: Apex) -> Undo {
        let p = self.polys.swap_remove(pi);
        let l = p.len();
        let (a, b) = (p[i], p[(i + 1) % l]);
        let before = self.polys.len();
        let mut added = [None, None];
        let (w, fresh) = match apex {
            Apex::Fresh(w) => {
                let mut q = Vec::with_capacity(l + 1);
                q.extend_from_slice(&p[..=i]);
                q.push(w);
                q.extend_from_slice(&p[i + 1..]);
                self.polys.push(q);
                self.used[w as usize] = true;
                self.fresh.push(w);
                self.remaining -= 1;
                self.set_edge(a, w, true);
                self.set_edge(b, w, true);
                added = [Some((a, w)), Some((b, w))];
                (w, true)
            }
            Apex::Split(j) => {
                let w = p[j];
                for (slot, u) in added.iter_mut().zip([a, b]) {
                    if !self.has_edge(u, w) {
                        self.set_edge(u, w, true);
                        *slot = Some((u, w));
                    }
                }
                // b .. w and w .. a, walking forward.
                let walk = |from: usize, to: usize| -> Vec<Vertex> {
                    let mut q = Vec::new();
                    let mut t = from;
                    loop {
                        q.push(p[t]);
                        if t == to {
                            break q;
                        }
                        t = (t + 1) % l;
                    }
                };
                for q in [walk((i + 1) % l, j), walk(j, i)] {
                    if q.len() >= 3 {
                        self.polys.push(q);
                    }
                }
                (w, false)
            }
        };
        self.faces.push(Face::sorted(a, b, w));
        Undo {
            poly: pi,
            old: p,
            pushed: self.polys.len() - before,
            added,
            fresh,
        }
    }

    fn undo(&mut self, u: Undo) {
        let keep = self.polys.len() - u.pushed;
        self.polys.truncate(keep);
        self.polys.push(u.old);
        let last = self.polys.len() - 1;
        self.polys.swap(u.poly, last);
        for (x, y) in u.added.into_iter().flatten() {
            self.set_edge(x, y, false);
        }
        if u.fresh {
            let w = self.fresh.pop().expect("fresh vertex to release");
            self.used[w as usize] = false;
            self.remaining += 1;
        }
        self.faces.pop();
    }

    /// Digest of the pending polygons up to rotation and reflection, the
    /// fresh vertices placed, the remaining allowance, and the edges among
    /// pending vertices.
    fn key(&self) -> u128 {
        let mut enc: Vec<u32> = Vec::with_capacity(64);
        let mut canon: Vec<Vec<Vertex>> = self.polys.iter().map(|p| canonical_cycle(p)).collect();
        canon.sort_unstable();
        enc.push(self.remaining as u32);
        for p in &canon {
            enc.push(p.len() as u32);
            enc.extend_from_slice(p);
        }
        let mut fresh = self.fresh.clone();
        fresh.sort_unstable();
        enc.push(u32::MAX);
        enc.extend_from_slice(&fresh);
        let mut pending: Vec<Vertex> = canon.iter().flatten().copied().collect();
        pending.sort_unstable();
        pending.dedup();
        enc.push(u32::MAX);
        for (x, &u) in pending.iter().enumerate() {
            for &v in &pending[x + 1..] {
                if self.has_edge(u, v) {
                    enc.push(u);
                    enc.push(v);
                }
            }
        }
        let mut h1 = DefaultHasher::new();
        (0u8, &enc).hash(&mut h1);
        let mut h2 = DefaultHasher::new();
        (1u8, &enc).hash(&mut h2);
        (u128::from(h1.finish()) << 64) | u128::from(h2.finish())
    }

    fn tick(&mut self) -> bool {
        self.stats.states += 1;
        self.stats.states <= self.budget
    }

    fn dfs(&mut self, visit: &mut dyn FnMut(&[Face], usize) -> ControlFlow<()>) -> Flow {
        if self.polys.is_empty() {
            return match visit(&self.faces, self.fresh.len()) {
                ControlFlow::Break(()) => Flow::Stop,
                ControlFlow::Continue(()) => Flow::Hit,
            };
        }
        if !self.tick() {
            return Flow::Abort;
        }
        let key = self.key();
        if self.fail_memo.contains(&key) {
            self.stats.memo_hits += 1;
            return Flow::Miss;
        }
        let (pi, i, cands) = self.choose();
        let mut any = false;
        for apex in cands {
            let u = self.apply(pi, i, apex);
            let f = self.dfs(visit);
            self.undo(u);
            match f {
                Flow::Stop | Flow::Abort => return f,
                Flow::Hit => any = true,
                Flow::Miss => {}
            }
        }
        if any {
            Flow::Hit
        } else {
            self.fail_memo.insert(key);
            Flow::Miss
        }
    }

    /// `out[j]` = completions using exactly `j` more fresh vertices.
    fn count(&mut self) -> Option<Vec<u128>> {
        if self.polys.is_empty() {
            return Some(vec![1]);
        }
        if !self.tick() {
            return None;
        }
        let key = self.key();
        if let Some(v) = self.count_memo.get(&key) {
            self.stats.memo_hits += 1;
            return Some(v.clone());
        }
        let (pi, i, cands) = self.choose();
        let mut out = vec![0u128; self.remaining + 1];
        for apex in cands {
            let shift = usize::from(matches!(apex, Apex::Fresh(_)));
            let u = self.apply(pi, i, apex);
            let sub = self.count();
            self.undo(u);
            for (j, c) in sub?.into_iter().enumerate() {
                out[j + shift] = out[j + shift].checked_add(c).expect("disk count overflows u128");
            }
        }
        self.count_memo.insert(key, out.clone());
        Some(out)
    }
}

/// Lexicographically least rotation or reflection of a cyclic sequence.
fn canonical_cycle(p: &[Vertex]) -> Vec<Vertex> {
    let l = p.len();
    let mut best: Option<Vec<Vertex>> = None;
    for start in 0..l {
        for dir in [1, l - 1] {
            let cand: Vec<Vertex> = (0..l).map(|t| p[(start + dir * t) % l]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Looks for a disk in `y` bounded by `cycle` with at most
/// `limits.max_internal` internal vertices. Deepens the internal-vertex cap
/// one step at a time, so a returned certificate uses as few internal
/// vertices as possible. Failure memos carry over between rounds.
pub fn find_triangulated_disk(
    y: &Complex2,
    cycle: [Vertex; 3],
    limits: SearchLimits,
) -> Result<SearchOutcome> {
    check_cycle(y, cycle)?;
    let mut engine = Engine::new(y, cycle, limits.budget);
    let mut found: Option<(Vec<Face>, usize)> = None;
    for cap in 0..=limits.max_internal {
        engine.remaining = cap;
        let flow = engine.dfs(&mut |faces, k| {
            found = Some((faces.to_vec(), k));
            ControlFlow::Break(())
        });
        match flow {
            Flow::Stop => break,
            Flow::Abort => return Ok(SearchOutcome::BudgetExhausted(engine.stats)),
            Flow::Hit | Flow::Miss => {}
        }
    }
    let Some((faces, k)) = found else {
        return Ok(SearchOutcome::Absent(engine.stats));
    };
    let disk = DiskTriangulation::new(cycle, faces)
        .map_err(|_| Error::CertificateRejected("search emitted a non-disk".into()))?;
    let cert = DiskCertificate {
        cycle,
        disk,
        internal_used: k,
        stats: engine.stats,
    };
    cert.validate(y)?;
    Ok(SearchOutcome::Found(cert))
}

/// Number of distinct disks bounded by `cycle` in `y`, indexed by internal
/// vertex count `0..=max_internal`.
pub fn count_disks(y: &Complex2, cycle: [Vertex; 3], limits: SearchLimits) -> Result<Vec<u128>> {
    check_cycle(y, cycle)?;
    let mut engine = Engine::new(y, cycle, limits.budget);
    engine.remaining = limits.max_internal;
    engine.count().ok_or(Error::BudgetExhausted {
        states: engine.stats.states,
    })
}

/// Calls `visit` on every disk bounded by `cycle` with at most
/// `max_internal` internal vertices until it breaks.
pub fn for_each_disk(
    y: &Complex2,
    cycle: [Vertex; 3],
    limits: SearchLimits,
    mut visit: impl FnMut(&DiskTriangulation) -> ControlFlow<()>,
) -> Result<SearchStats> {
    check_cycle(y, cycle)?;
    let mut engine = Engine::new(y, cycle, limits.budget);
    engine.remaining = limits.max_internal;
    let mut bad = None;
    let flow = engine.dfs(&mut |faces, _| match DiskTriangulation::new(cycle, faces.to_vec()) {
        Ok(t) => visit(&t),
        Err(e) => {
            bad = Some(e);
            ControlFlow::Break(())
        }
    });
    if let Some(e) = bad {
        return Err(Error::CertificateRejected(e.to_string()));
    }
    match flow {
        Flow::Abort => Err(Error::BudgetExhausted {
            states: engine.stats.states,
        }),
        _ => Ok(engine.stats),
    }
}

/// Every disk bounded by `cycle` with at most `max_internal` internal
/// vertices.
pub fn list_disks(y: &Complex2, cycle: [Vertex; 3], limits: SearchLimits) -> Result<Vec<DiskTriangulation>> {
    let mut out = Vec::new();
    for_each_disk(y, cycle, limits, |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleStatus {
    Certified,
    Absent,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleOutcome {
    pub cycle: [Vertex; 3],
    pub status: CycleStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub internal_used: Option<usize>,
    pub stats: SearchStats,
}

impl CycleOutcome {
    fn from_outcome(cycle: [Vertex; 3], o: &SearchOutcome) -> Self {
        let (status, internal_used) = match o {
            SearchOutcome::Found(c) => (CycleStatus::Certified, Some(c.internal_used)),
            SearchOutcome::Absent(_) => (CycleStatus::Absent, None),
            SearchOutcome::BudgetExhausted(_) => (CycleStatus::BudgetExhausted, None),
        };
        CycleOutcome {
            cycle,
            status,
            internal_used,
            stats: o.stats(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Every 3-cycle bounds a disk, so the complex is simply connected.
    Yes,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertReport {
    pub verdict: Verdict,
    pub n: u32,
    pub limits: SearchLimits,
    pub certified: usize,
    pub absent: usize,
    pub budget_exhausted: usize,
    pub outcomes: Vec<CycleOutcome>,
}

fn run_cycles(y: &Complex2, cycles: &[[Vertex; 3]], limits: SearchLimits) -> Result<Vec<CycleOutcome>> {
    cycles
        .par_iter()
        .map(|&c| find_triangulated_disk(y, c, limits).map(|o| CycleOutcome::from_outcome(c, &o)))
        .collect()
}

/// All `C(n,3)` cycles in colex order.
pub fn all_cycles(n: u32) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for c in 3..=n {
        for b in 2..c {
            for a in 1..b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Runs the disk search on every 3-cycle. `YES` only if all succeed;
/// exhaustion and absence both give `UNKNOWN`.
pub fn certify_simply_connected(y: &Complex2, limits: SearchLimits) -> Result<CertReport> {
    let outcomes = run_cycles(y, &all_cycles(y.n()), limits)?;
    let tally = |s| outcomes.iter().filter(|o| o.status == s).count();
    let (certified, absent, budget_exhausted) = (
        tally(CycleStatus::Certified),
        tally(CycleStatus::Absent),
        tally(CycleStatus::BudgetExhausted),
    );
    Ok(CertReport {
        verdict: if certified == outcomes.len() {
            Verdict::Yes
        } else {
            Verdict::Unknown
        },
        n: y.n(),
        limits,
        certified,
        absent,
        budget_exhausted,
        outcomes,
    })
}

/// Which 3-cycles [`triangulated_fraction`] looks at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleSample {
    All,
    /// `count` distinct cycles drawn uniformly, reported in colex order.
    Random { count: usize, seed: u64 },
    Explicit(Vec<[Vertex; 3]>),
}

impl CycleSample {
    pub fn cycles(&self, n: u32) -> Result<Vec<[Vertex; 3]>> {
        match self {
            CycleSample::All => Ok(all_cycles(n)),
            CycleSample::Random { count, seed } => {
                let total = all_cycles_len(n);
                if *count >= total {
                    return Ok(all_cycles(n));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut ranks = rand::seq::index::sample(&mut rng, total, *count).into_vec();
                ranks.sort_unstable();
                Ok(ranks.into_iter().map(|r| unrank(r as u64)).collect())
            }
            CycleSample::Explicit(v) => {
                for &c in v {
                    Face::from_triple(c)?;
                    if c.iter().any(|&x| x == 0 || x > n) {
                        return Err(Error::InvalidArgument(format!("cycle {c:?} outside 1..={n}")));
                    }
                }
                Ok(v.clone())
            }
        }
    }
}

fn all_cycles_len(n: u32) -> usize {
    let n = n as usize;
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

fn unrank(mut r: u64) -> [Vertex; 3] {
    let choose = |m: u64, k: u64| -> u64 {
        match k {
            3 => m * m.saturating_sub(1) * m.saturating_sub(2) / 6,
            2 => m * m.saturating_sub(1) / 2,
            _ => m,
        }
    };
    let mut out = [0; 3];
    for (slot, k) in [(2, 3u64), (1, 2), (0, 1)] {
        let mut m = k - 1;
        while choose(m + 1, k) <= r {
            m += 1;
        }
        r -= choose(m, k);
        out[slot] = m as Vertex + 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FractionReport {
    pub fraction: f64,
    pub sampled: usize,
    pub certified: usize,
    /// Mean internal vertices over certified cycles; 0 if none.
    pub mean_internal_used: f64,
    pub budget_exhausted: usize,
    pub outcomes: Vec<CycleOutcome>,
}

/// Fraction of the sampled 3-cycles that bound a disk found within limits.
pub fn triangulated_fraction(y: &Complex2, limits: SearchLimits, sample: &CycleSample) -> Result<FractionReport> {
    let cycles = sample.cycles(y.n())?;
    let outcomes = run_cycles(y, &cycles, limits)?;
    let certified: Vec<usize> = outcomes.iter().filter_map(|o| o.internal_used).collect();
    let sampled = outcomes.len();
    Ok(FractionReport {
        fraction: if sampled == 0 {
            0.0
        } else {
            certified.len() as f64 / sampled as f64
        },
        sampled,
        certified: certified.len(),
        mean_internal_used: if certified.is_empty() {
            0.0
        } else {
            certified.iter().sum::<usize>() as f64 / certified.len() as f64
        },
        budget_exhausted: outcomes
            .iter()
            .filter(|o| o.status == CycleStatus::BudgetExhausted)
            .count(),
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim(k: usize) -> SearchLimits {
        SearchLimits::new(k, DEFAULT_BUDGET)
    }

    #[test]
    fn complete_complex_single_face() {
        let y = Complex2::complete(7).unwrap();
        let o = find_triangulated_disk(&y, [2, 5, 7], lim(0)).unwrap();
        let c = o.certificate().unwrap();
        assert_eq!(c.internal_used, 0);
        assert_eq!(c.disk.faces(), &[Face::new(2, 5, 7).unwrap()]);
    }

    #[test]
    fn cone_needs_one_internal_vertex() {
        let cone = DiskTriangulation::cone([1, 2, 3], 4).unwrap();
        let y = Complex2::from_faces(4, cone.faces().iter().copied()).unwrap();
        assert!(matches!(
            find_triangulated_disk(&y, [1, 2, 3], lim(0)).unwrap(),
            SearchOutcome::Absent(_)
        ));
        let o = find_triangulated_disk(&y, [1, 2, 3], lim(1)).unwrap();
        assert_eq!(o.certificate().unwrap().disk, cone);
    }

    #[test]
    fn empty_complex_is_absent() {
        let y = Complex2::empty(8).unwrap();
        assert!(matches!(
            find_triangulated_disk(&y, [1, 2, 3], lim(3)).unwrap(),
            SearchOutcome::Absent(_)
        ));
    }

    #[test]
    fn counts_on_complete_complex() {
        // Complete complex on n vertices: t_k * C(n-3, k) disks with k internal.
        let y = Complex2::complete(8).unwrap();
        let v = count_disks(&y, [1, 2, 3], lim(3)).unwrap();
        assert_eq!(v, vec![1, 5, 6 * 10, 78 * 10]);
        assert_eq!(list_disks(&y, [1, 2, 3], lim(2)).unwrap().len(), 1 + 5 + 60);
    }

    #[test]
    fn tiny_budget_is_reported() {
        let y = Complex2::sample(12, 0.4, 3).unwrap();
        let o = find_triangulated_disk(&y, [1, 2, 3], SearchLimits::new(4, 1)).unwrap();
        assert!(!matches!(o, SearchOutcome::Absent(_)));
    }

    #[test]
    fn unrank_matches_colex() {
        for (r, c) in all_cycles(9).into_iter().enumerate() {
            assert_eq!(unrank(r as u64), c);
        }
    }

    #[test]
    fn canonical_cycle_is_dihedral_min() {
        assert_eq!(canonical_cycle(&[5, 3, 9, 4]), vec![3, 5, 4, 9]);
        assert_eq!(canonical_cycle(&[4, 9, 3, 5]), vec![3, 5, 4, 9]);
    }

    #[test]
    fn default_k() {
        assert_eq!(default_max_internal(100), 8);
        assert_eq!(default_max_internal(10), 6);
    }
}
