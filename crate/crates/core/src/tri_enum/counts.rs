//! Exact counts: the closed form for `t_k`, and enumeration-backed counts of
//! `l`-simple, `j`-dense and `j`-nested triangulations.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, ExactCount};
use crate::tri_enum::missing::{missing_faces, MissingFace};
use crate::tri_enum::shapes::{enumerate_shapes, DEFAULT_ENUMERATION_LIMIT};

/// `t_k = 6 (4k+1)! / (3k+3)!`, the number of triangulations of a 3-cycle
/// with `k` labeled internal vertices.
pub fn count_triangulations(k: usize) -> ExactCount {
    let k = k as u64;
    ExactCount(BigUint::from(6u32) * factorial(4 * k + 1) / factorial(3 * k + 3))
}

/// `t_k * C(n-3, k)`: triangulations of `[123]` whose `k` internal vertices
/// carry distinct labels from `{4..n}`.
pub fn count_n_labeled(n: usize, k: usize) -> ExactCount {
    if n < 3 {
        return ExactCount::zero();
    }
    ExactCount(count_triangulations(k).0 * binomial((n - 3) as u64, k as u64))
}

fn check_limit(k: usize) -> Result<()> {
    if k > DEFAULT_ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            k,
            limit: DEFAULT_ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// Counts labeled triangulations (internal labels `4..=k+3`) whose missing
/// faces satisfy `pred`. Every property counted here ignores labels, so the
/// scan runs over shapes and multiplies by `k!`.
fn count_by_missing_faces(k: usize, pred: impl Fn(&[MissingFace]) -> bool) -> Result<ExactCount> {
    check_limit(k)?;
    let hits = enumerate_shapes(k)
        .iter()
        .filter(|s| pred(&missing_faces(&s.to_triangulation())))
        .count();
    Ok(ExactCount(factorial(k as u64) * hits))
}

/// Number of `l`-simple triangulations with `k` internal vertices, by full
/// enumeration.
pub fn count_l_simple(k: usize, l: usize) -> Result<ExactCount> {
    count_by_missing_faces(k, |m| m.iter().all(|f| f.density <= l))
}

fn check_dense_domain(k: usize, j: usize) -> Result<()> {
    if k == 0 || j > k - 1 {
        return Err(Error::Domain(format!("need 0 <= j <= k-1, got k = {k}, j = {j}")));
    }
    Ok(())
}

fn check_formula_domain(k: usize, j: usize) -> Result<()> {
    check_dense_domain(k, j)?;
    if 2 * j <= k {
        return Err(Error::Domain(format!(
            "the closed form needs j > k/2, got k = {k}, j = {j}"
        )));
    }
    Ok(())
}

/// `t_k^j = C(k, i) t_i t_j (2i+1)` with `i = k - j`, valid for `j > k/2`.
pub fn count_j_dense_formula(k: usize, j: usize) -> Result<ExactCount> {
    check_formula_domain(k, j)?;
    let i = k - j;
    Ok(ExactCount(
        binomial(k as u64, i as u64)
            * count_triangulations(i).0
            * count_triangulations(j).0
            * (2 * i as u64 + 1),
    ))
}

/// Triangulations with some missing face of density exactly `j`, by
/// enumeration.
pub fn count_j_dense_enumerated(k: usize, j: usize) -> Result<ExactCount> {
    check_dense_domain(k, j)?;
    count_by_missing_faces(k, |m| m.iter().any(|f| f.density == j))
}

/// `t_k^j`, by the closed form where it holds and by enumeration otherwise.
pub fn count_j_dense(k: usize, j: usize) -> Result<ExactCount> {
    if 2 * j > k {
        count_j_dense_formula(k, j)
    } else {
        count_j_dense_enumerated(k, j)
    }
}

/// Number of `j`-nested triangulations: `C(k, j) t_i t_j^{j-1} (2i+1)` for
/// `j > k/2`. The inner factor `t_j^{j-1}` uses the closed form when
/// `j - 1 > j/2` and enumeration for the two small cases `j <= 2`.
pub fn count_j_nested_formula(k: usize, j: usize) -> Result<ExactCount> {
    check_formula_domain(k, j)?;
    let i = k - j;
    let inner = count_j_dense(j, j - 1)?;
    Ok(ExactCount(
        binomial(k as u64, j as u64)
            * count_triangulations(i).0
            * inner.0
            * (2 * i as u64 + 1),
    ))
}

/// Triangulations with a missing face of density `j` that encloses a missing
/// face of density `j - 1`, by enumeration.
pub fn count_j_nested_enumerated(k: usize, j: usize) -> Result<ExactCount> {
    check_dense_domain(k, j)?;
    if j == 0 {
        return Ok(ExactCount::zero());
    }
    count_by_missing_faces(k, |m| {
        m.iter().filter(|outer| outer.density == j).any(|outer| {
            m.iter()
                .any(|inner| inner.density == j - 1 && inner.triple != outer.triple && outer.encloses(inner))
        })
    })
}
