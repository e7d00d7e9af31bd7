//! Oracles shared by the integration tests. Everything here is computed
//! without the library's counting code.

#![allow(dead_code)]

use num_bigint::BigUint;
use tridisk::random_complex::Complex2;
use tridisk::tri_enum::{is_disk_triangulation, Census};
use tridisk::{Face, Vertex};

pub fn fact(m: u64) -> BigUint {
    (1..=m).fold(BigUint::from(1u32), |acc, x| acc * x)
}

pub fn choose(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    fact(n) / (fact(k) * fact(n - k))
}

/// `6(4k+1)!/(3k+3)!`.
pub fn tutte(k: u64) -> BigUint {
    BigUint::from(6u32) * fact(4 * k + 1) / fact(3 * k + 3)
}

/// Lexicographic `r`-combinations of `0..n`.
pub fn combinations(n: usize, r: usize, mut visit: impl FnMut(&[usize])) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..r).rev().find(|&i| idx[i] != i + n - r) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Every triangulation of `[1,2,3]` on the vertices `1..=k+3`, found by
/// filtering all `(2k+1)`-subsets of triples through the disk recognizer.
pub fn brute_force_disks(k: usize) -> Vec<Vec<Face>> {
    let top = k as Vertex + 3;
    let mut triples = Vec::new();
    for a in 1..=top {
        for b in a + 1..=top {
            for c in b + 1..=top {
                triples.push(Face::new(a, b, c).unwrap());
            }
        }
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(2 * k + 1);
    combinations(triples.len(), 2 * k + 1, |idx| {
        buf.clear();
        buf.extend(idx.iter().map(|&i| triples[i]));
        if is_disk_triangulation(&buf, [1, 2, 3]) {
            out.push(buf.clone());
        }
    });
    out.sort();
    out
}

/// Disks of `cycle` inside `y`, by internal vertex count `0..=max_k`: every
/// census member on every choice of internal labels, kept when all of its
/// faces are present.
pub fn oracle_disk_counts(y: &Complex2, cycle: [Vertex; 3], max_k: usize) -> Vec<u128> {
    let others: Vec<Vertex> = (1..=y.n()).filter(|v| !cycle.contains(v)).collect();
    let mut counts = vec![0u128; max_k + 1];
    for (k, slot) in counts.iter_mut().enumerate() {
        combinations(others.len(), k, |idx| {
            let labels: Vec<Vertex> = idx.iter().map(|&i| others[i]).collect();
            let census = Census::new(k, cycle, &labels).unwrap();
            for t in &census {
                if t.faces().iter().all(|f| y.contains_face(f)) {
                    *slot += 1;
                }
            }
        });
    }
    counts
}

pub fn faces(ts: &[[Vertex; 3]]) -> Vec<Face> {
    ts.iter().map(|&t| Face::from_triple(t).unwrap()).collect()
}
