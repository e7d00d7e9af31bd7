//! First and second moments of the number of triangulations of `[1,2,3]`
//! in `Y_2(n, p)`, the dense-ratio identities, and Janson bounds.
//!
//! Everything that can be exact is a [`BigRational`]; only the final Janson
//! bound is evaluated in floating point.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::certifier::{count_disks, for_each_disk, SearchLimits};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial};
use crate::random_complex::{triple_rank, Complex2};
use crate::subset_params::FIXED;
use crate::tri_enum::{count_j_dense_formula, count_l_simple, count_triangulations, Census};

pub type ExactRational = BigRational;

/// Pair scans refuse families larger than this many members by default.
pub const DEFAULT_MEMBER_LIMIT: usize = 50_000;

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn uint(x: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `γ = 4^4 / 3^3`.
pub fn gamma() -> BigRational {
    BigRational::new(256.into(), 27.into())
}

fn check_p(p: &BigRational) -> Result<()> {
    if p.is_negative() || *p > BigRational::one() {
        return Err(Error::Probability(p.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

/// `t_k * C(n-3, k) * p^(2k+1)`.
pub fn expected_count(n: usize, p: &BigRational, k: usize) -> Result<BigRational> {
    check_p(p)?;
    if n < 3 || k > n - 3 {
        return Err(Error::Domain(format!("need 0 <= k <= n-3, got n = {n}, k = {k}")));
    }
    Ok(uint(count_triangulations(k).0 * binomial((n - 3) as u64, k as u64)) * p.pow(2 * k as i32 + 1))
}

/// The first-moment upper bound `(c/√n) Σ_{k=0}^{n-3} (γc²)^k`, kept exact
/// by carrying the `1/√n` factor separately.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FirstMomentBound {
    pub n: usize,
    #[serde(serialize_with = "ser_rational")]
    pub c: BigRational,
    /// `√n` times the bound: `c Σ_{k=0}^{n-3} (γc²)^k`.
    #[serde(serialize_with = "ser_rational")]
    pub scaled: BigRational,
    /// `γc² < 1`, i.e. `c < 1/√γ`.
    pub convergent: bool,
    /// `c / (1 - γc²)` times `1/√n` bounds every partial sum when convergent.
    #[serde(serialize_with = "ser_opt_rational")]
    pub geometric_scaled: Option<BigRational>,
    pub value: f64,
}

pub fn first_moment_bound(n: usize, c: &BigRational) -> Result<FirstMomentBound> {
    if n < 3 || c.is_negative() {
        return Err(Error::Domain(format!("need n >= 3 and c >= 0, got n = {n}")));
    }
    let r = gamma() * c * c;
    let convergent = r < BigRational::one();
    let one = BigRational::one();
    let terms = n - 2;
    // Σ_{k<terms} r^k in closed form when r != 1.
    let sum = if r == one {
        int(terms as u64)
    } else {
        (one.clone() - r.pow(terms as i32)) / (one.clone() - &r)
    };
    let scaled = c * sum;
    let geometric_scaled = convergent.then(|| c / (one - &r));
    let value = rational_to_f64(&scaled) / (n as f64).sqrt();
    Ok(FirstMomentBound {
        n,
        c: c.clone(),
        scaled,
        convergent,
        geometric_scaled,
        value,
    })
}

/// `α_i = 6(2i+1) / ((3i+3)(3i+2)) * C(4i+1, i) * γ^(-i)`.
pub fn alpha(i: usize) -> Result<BigRational> {
    if i == 0 {
        return Err(Error::Domain("alpha needs i >= 1".into()));
    }
    let i64_ = i as u64;
    let head = BigRational::new(
        BigInt::from(6 * (2 * i64_ + 1)),
        BigInt::from((3 * i64_ + 3) * (3 * i64_ + 2)),
    );
    Ok(head * uint(binomial(4 * i64_ + 1, i64_)) / gamma().pow(i as i32))
}

fn check_ratio_domain(k: usize, j: usize) -> Result<()> {
    if !(2 * j > k && j < k) {
        return Err(Error::Domain(format!("need k/2 < j < k, got k = {k}, j = {j}")));
    }
    Ok(())
}

/// `t_k^j / t_k` from the dense count.
pub fn dense_ratio(k: usize, j: usize) -> Result<BigRational> {
    check_ratio_domain(k, j)?;
    Ok(uint(count_j_dense_formula(k, j)?.0) / uint(count_triangulations(k).0))
}

/// The same ratio written directly in factorials:
/// `6 k! (4i+1)! (4j+1)! (3k+3)! (2i+1) / (j! i! (3i+3)! (3j+3)! (4k+1)!)`.
pub fn dense_ratio_factorial(k: usize, j: usize) -> Result<BigRational> {
    check_ratio_domain(k, j)?;
    let (k, j) = (k as u64, j as u64);
    let i = k - j;
    let num = BigUint::from(6u32)
        * factorial(k)
        * factorial(4 * i + 1)
        * factorial(4 * j + 1)
        * factorial(3 * k + 3)
        * (2 * i + 1);
    let den = factorial(j) * factorial(i) * factorial(3 * i + 3) * factorial(3 * j + 3) * factorial(4 * k + 1);
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Which triangulations count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    All,
    /// Every missing face has density at most `⌈k/2⌉`.
    HalfSimple,
    /// Every missing face has density at most the given bound.
    LSimple(usize),
}

impl Family {
    pub fn simplicity(self, k: usize) -> Option<usize> {
        match self {
            Family::All => None,
            Family::HalfSimple => Some(k.div_ceil(2)),
            Family::LSimple(l) => Some(l),
        }
    }
}

/// Size of the n-labeled family with `k` internal vertices.
pub fn family_size(n: usize, k: usize, family: Family) -> Result<BigUint> {
    if n < 3 || k > n - 3 {
        return Err(Error::Domain(format!("need 0 <= k <= n-3, got n = {n}, k = {k}")));
    }
    let per = match family.simplicity(k) {
        None => count_triangulations(k).0,
        Some(l) => count_l_simple(k, l)?.0,
    };
    Ok(per * binomial((n - 3) as u64, k as u64))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentReport {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    #[serde(serialize_with = "ser_rational")]
    pub p: BigRational,
    #[serde(serialize_with = "ser_biguint")]
    pub members: BigUint,
    #[serde(serialize_with = "ser_rational")]
    pub mu: BigRational,
    /// Present when pairs were enumerated.
    #[serde(serialize_with = "ser_opt_rational")]
    pub delta: Option<BigRational>,
    /// `Δ / μ²`.
    #[serde(serialize_with = "ser_opt_rational")]
    pub ratio: Option<BigRational>,
    /// The subset-regrouped upper bound on `Δ / μ²`.
    #[serde(serialize_with = "ser_opt_rational")]
    pub regrouped_ratio: Option<BigRational>,
    /// Ordered pairs `T1 != T2` by `|T1 ∩ T2|`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_histogram: Option<Vec<u64>>,
    pub mu_f64: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_f64: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub janson_bound: Option<f64>,
}

/// `μ` from counts alone; `Δ` is left empty.
pub fn moment_report(n: usize, k: usize, p: &BigRational, family: Family) -> Result<MomentReport> {
    check_p(p)?;
    let members = family_size(n, k, family)?;
    let mu = uint(members.clone()) * p.pow(2 * k as i32 + 1);
    Ok(MomentReport {
        family,
        n,
        k,
        p: p.clone(),
        members,
        mu_f64: rational_to_f64(&mu),
        mu,
        delta: None,
        ratio: None,
        regrouped_ratio: None,
        intersection_histogram: None,
        delta_f64: None,
        janson_bound: None,
    })
}

/// Members of the n-labeled family as sorted colex face ranks, flattened with
/// stride `2k + 1`.
fn family_members(n: usize, k: usize, family: Family, limit: usize) -> Result<Vec<u32>> {
    let size = family_size(n, k, family)?;
    if size > BigUint::from(limit) {
        return Err(Error::PairBudget {
            members: size.to_usize().unwrap_or(usize::MAX),
            limit,
        });
    }
    let mut out = Vec::with_capacity(size.to_usize().unwrap_or(0) * (2 * k + 1));
    let mut labels: Vec<u32> = (4..4 + k as u32).collect();
    loop {
        let census = Census::new(k, FIXED, &labels)?;
        for t in &census {
            if family.simplicity(k).is_none_or(|l| t.is_l_simple(l)) {
                let mut ranks: Vec<u32> = t.faces().iter().map(|f| triple_rank(f) as u32).collect();
                ranks.sort_unstable();
                out.extend(ranks);
            }
        }
        if !next_combination(&mut labels, n as u32) {
            break;
        }
    }
    Ok(out)
}

/// Advances an ascending `k`-subset of `{4..=n}` lexicographically.
fn next_combination(c: &mut [u32], n: u32) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - (k - 1 - i) as u32 {
            c[i] += 1;
            for t in i + 1..k {
                c[t] = c[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn intersect(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut s) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s += 1;
                i += 1;
                j += 1;
            }
        }
    }
    s
}

/// Exact `μ` and `Δ` by listing the family and scanning every pair of
/// members. `μ` here counts the listed members, not the closed form.
///
/// `Δ = Σ p^(4k+2-|T1∩T2|)` over ordered pairs `T1 != T2` that share a face.
/// Also returns the subset-regrouped bound
/// `|𝒯|^-2 Σ_S p^-|S| |{T ⊇ S}|²` over nonempty proper subsets `S`.
pub fn mu_delta_enumerated(
    n: usize,
    k: usize,
    p: &BigRational,
    family: Family,
    member_limit: usize,
) -> Result<MomentReport> {
    let mut report = moment_report(n, k, p, family)?;
    let m = 2 * k + 1;
    let members = family_members(n, k, family, member_limit)?;
    let count = members.len() / m;
    report.members = BigUint::from(count);
    report.mu = int(count as u64) * p.pow(m as i32);
    report.mu_f64 = rational_to_f64(&report.mu);

    let hist = (0..count)
        .into_par_iter()
        .fold(
            || vec![0u64; m + 1],
            |mut h, i| {
                let a = &members[i * m..(i + 1) * m];
                for j in i + 1..count {
                    h[intersect(a, &members[j * m..(j + 1) * m])] += 2;
                }
                h
            },
        )
        .reduce(
            || vec![0u64; m + 1],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        );

    let mut delta = BigRational::zero();
    for (s, &c) in hist.iter().enumerate().skip(1) {
        if c > 0 {
            delta += int(c) * p.pow((2 * m - s) as i32);
        }
    }

    let mut subsets: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut buf = Vec::with_capacity(m);
    for t in members.chunks(m) {
        for mask in 1u32..(1 << m) - 1 {
            buf.clear();
            buf.extend((0..m).filter(|b| mask >> b & 1 == 1).map(|b| t[b]));
            *subsets.entry(buf.clone()).or_default() += 1;
        }
    }
    let regrouped = if count == 0 || p.is_zero() {
        None
    } else {
        let mut sum = BigRational::zero();
        let inv_p = p.recip();
        for (s, c) in &subsets {
            sum += int(c * c) * inv_p.pow(s.len() as i32);
        }
        Some(sum / int((count * count) as u64))
    };

    let ratio = (!report.mu.is_zero()).then(|| &delta / (&report.mu * &report.mu));
    report.delta_f64 = Some(rational_to_f64(&delta));
    report.janson_bound = Some(janson_bound(report.mu_f64, rational_to_f64(&delta)));
    report.delta = Some(delta);
    report.ratio = ratio;
    report.regrouped_ratio = regrouped;
    report.intersection_histogram = Some(hist);
    Ok(report)
}

/// `e^(-μ/2) + e^(-μ²/2Δ)`, or `e^(-μ/2)` when `Δ = 0`, clamped to `[0, 1]`.
pub fn janson_bound(mu: f64, delta: f64) -> f64 {
    let first = (-mu / 2.0).exp();
    let b = if delta > 0.0 {
        first + (-mu * mu / (2.0 * delta)).exp()
    } else {
        first
    };
    b.clamp(0.0, 1.0)
}

/// Does `y` contain a triangulation of `[1,2,3]` from `family` with exactly
/// `k` internal vertices?
pub fn family_present(y: &Complex2, k: usize, family: Family, budget: u64) -> Result<bool> {
    let limits = SearchLimits::new(k, budget);
    match family.simplicity(k) {
        None => Ok(count_disks(y, FIXED, limits)?.get(k).is_some_and(|&c| c > 0)),
        Some(l) => {
            let mut hit = false;
            for_each_disk(y, FIXED, limits, |t| {
                if t.k() == k && t.is_l_simple(l) {
                    hit = true;
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            Ok(hit)
        }
    }
}

/// One row of the dense-ratio table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioRow {
    pub k: usize,
    pub j: usize,
    pub i: usize,
    #[serde(serialize_with = "ser_rational")]
    pub dense_ratio: BigRational,
    pub factorial_agrees: bool,
    #[serde(serialize_with = "ser_rational")]
    pub alpha_i: BigRational,
    /// `t_k^j / t_k <= 6 α_i`.
    pub within_six_alpha: bool,
    /// `(t_k^j / t_k) / (α_i (k/j)^(5/2))`; tends to 1 as `k` grows.
    pub asymptotic_ratio: f64,
}

pub fn ratio_table(kmax: usize) -> Result<Vec<RatioRow>> {
    let mut rows = Vec::new();
    for k in 2..=kmax {
        for j in k / 2 + 1..k {
            let i = k - j;
            let r = dense_ratio(k, j)?;
            let a = alpha(i)?;
            let scale = (k as f64 / j as f64).powf(2.5);
            rows.push(RatioRow {
                k,
                j,
                i,
                factorial_agrees: r == dense_ratio_factorial(k, j)?,
                within_six_alpha: r <= int(6) * &a,
                asymptotic_ratio: rational_to_f64(&r) / (rational_to_f64(&a) * scale),
                dense_ratio: r,
                alpha_i: a,
            });
        }
    }
    Ok(rows)
}

pub fn ratio_table_csv(kmax: usize) -> Result<String> {
    let mut out = String::from("# schema=1\nk,j,i,dense_ratio,dense_ratio_f64,factorial_agrees,alpha_i,alpha_i_f64,within_six_alpha,asymptotic_ratio\n");
    for r in ratio_table(kmax)? {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.k,
            r.j,
            r.i,
            r.dense_ratio,
            rational_to_f64(&r.dense_ratio),
            r.factorial_agrees,
            r.alpha_i,
            rational_to_f64(&r.alpha_i),
            r.within_six_alpha,
            r.asymptotic_ratio
        );
    }
    Ok(out)
}

/// Share of `⌈k/2⌉`-simple triangulations, with two estimates to compare it
/// against.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AbundanceRow {
    pub k: usize,
    pub l: usize,
    #[serde(serialize_with = "ser_biguint")]
    pub simple: BigUint,
    #[serde(serialize_with = "ser_rational")]
    pub ratio: BigRational,
    /// `1 - Σ_{l<j<k} t_k^j / t_k`.
    pub one_minus_dense_sum: f64,
    /// `1 - Σ_{1<=i<k-l} α_i`.
    pub one_minus_alpha_sum: f64,
}

pub fn simple_abundance(k: usize) -> Result<AbundanceRow> {
    let l = k.div_ceil(2);
    let simple = count_l_simple(k, l)?.0;
    let ratio = uint(simple.clone()) / uint(count_triangulations(k).0);
    let mut dense = BigRational::zero();
    for j in l + 1..k {
        dense += dense_ratio(k, j)?;
    }
    let mut alphas = BigRational::zero();
    for i in 1..k - l {
        alphas += alpha(i)?;
    }
    Ok(AbundanceRow {
        k,
        l,
        simple,
        ratio,
        one_minus_dense_sum: 1.0 - rational_to_f64(&dense),
        one_minus_alpha_sum: 1.0 - rational_to_f64(&alphas),
    })
}

pub fn abundance_csv(kmin: usize, kmax: usize) -> Result<String> {
    let mut out = String::from("# schema=1\nk,l,simple,ratio,ratio_f64,one_minus_dense_sum,one_minus_alpha_sum\n");
    for k in kmin..=kmax {
        let r = simple_abundance(k)?;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.k,
            r.l,
            r.simple,
            r.ratio,
            rational_to_f64(&r.ratio),
            r.one_minus_dense_sum,
            r.one_minus_alpha_sum
        );
    }
    Ok(out)
}

/// Parses `a/b`, an integer, or a plain decimal such as `0.3` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty()
        || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{whole}{frac}0").parse().map_err(|_| bad())?;
    let scale = BigInt::from(10u32).pow(frac.len() as u32 + 1);
    let r = BigRational::new(digits, scale);
    Ok(if neg { -r } else { r })
}

/// Digits used by [`inv_sqrt`]; comfortably above 30 significant digits for
/// any `n` that fits in memory.
pub const INV_SQRT_DIGITS: u32 = 40;

/// `floor(10^D / √n) / 10^D` with `D = INV_SQRT_DIGITS`, a rational
/// approximation of `1/√n` from below.
pub fn inv_sqrt(n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain("1/sqrt(0)".into()));
    }
    let scale = BigUint::from(10u32).pow(INV_SQRT_DIGITS);
    let root = (&scale * &scale / BigUint::from(n)).sqrt();
    Ok(BigRational::new(BigInt::from(root), BigInt::from(scale)))
}

/// `p = c / √n` using [`inv_sqrt`].
pub fn p_from_c(c: &BigRational, n: usize) -> Result<BigRational> {
    Ok(c * inv_sqrt(n)?)
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub(crate) fn ser_opt_rational<S: Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

pub(crate) fn ser_biguint<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn expected_count_examples() {
        assert_eq!(expected_count(10, &q(1, 2), 0).unwrap(), q(1, 2));
        assert_eq!(expected_count(10, &q(1, 2), 2).unwrap(), q(126, 32));
        assert!(expected_count(5, &q(1, 2), 3).is_err());
    }

    #[test]
    fn alpha_one() {
        assert_eq!(alpha(1).unwrap(), q(81, 256));
        assert!(alpha(0).is_err());
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(dense_ratio(3, 2).unwrap(), q(9, 13));
        for k in 3..=12 {
            for j in k / 2 + 1..k {
                assert_eq!(dense_ratio(k, j).unwrap(), dense_ratio_factorial(k, j).unwrap());
            }
        }
        assert!(dense_ratio(4, 2).is_err());
        assert!(dense_ratio(4, 4).is_err());
    }

    #[test]
    fn janson_examples() {
        assert_eq!(janson_bound(0.0, 0.0), 1.0);
        assert_eq!(janson_bound(0.0, 1.0), 1.0);
        let b = janson_bound(2.0, 1.0);
        assert!((b - ((-1f64).exp() + (-2f64).exp())).abs() < 1e-15);
    }

    #[test]
    fn single_member_family() {
        let r = mu_delta_enumerated(4, 1, &q(1, 3), Family::All, 10).unwrap();
        assert_eq!(r.mu, q(1, 27));
        assert_eq!(r.delta, Some(BigRational::zero()));
    }

    #[test]
    fn small_family_matches_first_moment() {
        let p = q(1, 2);
        let r = mu_delta_enumerated(10, 2, &p, Family::All, 1000).unwrap();
        assert_eq!(r.mu, expected_count(10, &p, 2).unwrap());
        let ratio = r.ratio.unwrap();
        assert!(r.regrouped_ratio.unwrap() >= ratio);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/10").unwrap(), q(3, 10));
        assert_eq!(parse_rational("0.3").unwrap(), q(3, 10));
        assert_eq!(parse_rational("2").unwrap(), q(2, 1));
        assert_eq!(parse_rational(".25").unwrap(), q(1, 4));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn inv_sqrt_precision() {
        let r = inv_sqrt(100).unwrap();
        assert_eq!(r, q(1, 10));
        let r = inv_sqrt(2).unwrap();
        // r^2 * 2 is 1 to within 2e-40.
        let err = (&r * &r * int(2) - BigRational::one()).abs();
        assert!(err < BigRational::new(1.into(), BigInt::from(10u32).pow(39)));
    }

    #[test]
    fn bound_shape() {
        let b = first_moment_bound(10_000, &q(1, 4)).unwrap();
        assert!(b.convergent);
        let g = b.geometric_scaled.clone().unwrap();
        // sqrt(n) = 100, so bound < c / (100 (1 - γc²)) iff scaled < g.
        assert!(b.scaled < g);
        assert!(b.value <= 1e-2 * rational_to_f64(&g));
        assert!(!first_moment_bound(100, &q(1, 2)).unwrap().convergent);
    }
}
