//! Partitions, multipartitions and the exact counting functions built on them.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Count = BigUint;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, e))` when `n = p^e` with `p` prime and `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let (mut m, mut e) = (n, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to 1.
    pub fn fixed_points(&self) -> u32 {
        self.0.iter().filter(|&&p| p == 1).count() as u32
    }

    /// Multiplicity of each part size `i` at index `i`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.0.first().map_or(1, |&p| p as usize + 1)];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        if t.trim().is_empty() {
            return Ok(Partition::default());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::invalid(format!("bad partition {s:?}")))?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting with `(n)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn partition_count(n: u32) -> Count {
    // p(n, k): partitions of n with parts at most k.
    let n = n as usize;
    let mut p = vec![BigUint::zero(); n + 1];
    p[0] = BigUint::one();
    for part in 1..=n {
        for m in part..=n {
            let add = p[m - part].clone();
            p[m] += add;
        }
    }
    p[n].clone()
}

/// An r-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(parts: Vec<Partition>) -> Self {
        MultiPartition(parts)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn total_parts(&self) -> usize {
        self.0.iter().map(Partition::len).sum()
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

/// All r-tuples of partitions with total size `n`, ordered by the size vector
/// (most weight in the first component first) and then componentwise reverse-lex.
pub fn multipartitions_of(r: u32, n: u32) -> Vec<MultiPartition> {
    fn rec(r: u32, rest: u32, cur: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
        if r == 1 {
            for p in partitions_of(rest) {
                cur.push(p);
                out.push(MultiPartition(cur.clone()));
                cur.pop();
            }
            return;
        }
        for m in (0..=rest).rev() {
            for p in partitions_of(m) {
                cur.push(p);
                rec(r - 1, rest - m, cur, out);
                cur.pop();
            }
        }
    }
    if r == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(r, n, &mut Vec::new(), &mut out);
    out
}

/// Stirling numbers of the second kind by the triangular recurrence.
pub fn stirling2(n: u32, k: u32) -> Count {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for i in 1..=n as usize {
        let mut next = vec![BigUint::zero(); i + 1];
        for j in 1..=i {
            let stay = if j < i { &row[j] * j } else { BigUint::zero() };
            next[j] = stay + &row[j - 1];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Stirling numbers of the second kind by the alternating sum
/// `(1/k!) sum_j (-1)^j C(k, j) (k - j)^n`.
pub fn stirling2_alternating(n: u32, k: u32) -> Count {
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let term = BigInt::from(binomial(k as u64, j as u64)) * BigInt::from(k - j).pow(n);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    (acc / BigInt::from(factorial(k as u64)))
        .to_biguint()
        .expect("Stirling numbers are nonnegative")
}

pub fn bell(n: u32) -> Count {
    (0..=n).map(|k| stirling2(n, k)).sum()
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka(shape: &Partition, content: &[u32]) -> Count {
    if shape.size() != content.iter().sum::<u32>() {
        return BigUint::zero();
    }
    fn strips(
        lam: &[u32],
        mu: &[u32],
        row: usize,
        left: u32,
        nu: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if row == lam.len() {
            if left == 0 {
                f(nu);
            }
            return;
        }
        let lo = mu[row];
        let hi = if row == 0 { lam[0] } else { lam[row].min(mu[row - 1]) };
        for v in lo..=hi.max(lo) {
            if v - lo > left {
                break;
            }
            nu.push(v);
            strips(lam, mu, row + 1, left - (v - lo), nu, f);
            nu.pop();
        }
    }
    fn rec(lam: &[u32], mu: &[u32], content: &[u32]) -> BigUint {
        let Some((&m, rest)) = content.split_first() else {
            return BigUint::one();
        };
        let mut total = BigUint::zero();
        let mut cb = |nu: &[u32]| total += rec(lam, nu, rest);
        strips(lam, mu, 0, m, &mut Vec::new(), &mut cb);
        total
    }
    let lam = shape.parts();
    rec(lam, &vec![0; lam.len()], content)
}

/// `K_{lambda, (n - l, 1^l)}` for `lambda` a partition of `n` and `0 <= l <= n`.
pub fn kostka_hook_content(lambda: &Partition, l: u32) -> Result<Count> {
    let n = lambda.size();
    if l > n {
        return Err(Error::invalid(format!("hook length {l} exceeds n = {n}")));
    }
    let mut content = vec![n - l];
    content.extend(std::iter::repeat_n(1, l as usize));
    Ok(kostka(lambda, &content))
}

/// Permutations of n points with exactly m fixed points.
pub fn rencontres(n: u32, m: u32) -> Result<Count> {
    if m > n {
        return Err(Error::invalid(format!("fixed points {m} exceed n = {n}")));
    }
    let nf = BigInt::from(factorial(n as u64));
    let mf = BigInt::from(factorial(m as u64));
    let mut acc = BigInt::zero();
    for j in 0..=(n - m) {
        let term = &nf / (&mf * BigInt::from(factorial(j as u64)));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc.to_biguint().expect("nonnegative"))
}

/// Centralizer order `prod_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> Count {
    lambda
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigUint::one(), |acc, (i, &m)| {
            acc * BigUint::from(i as u64).pow(m) * factorial(m as u64)
        })
}

/// `r^{total parts} prod_i z_{alpha^(i)}`
pub fn z_multipartition(alpha: &MultiPartition, r: u32) -> Count {
    alpha
        .components()
        .iter()
        .fold(BigUint::from(r).pow(alpha.total_parts() as u32), |acc, p| {
            acc * z_lambda(p)
        })
}

pub fn multinomial(k: u32, parts: &[u32]) -> Result<Count> {
    if parts.iter().map(|&p| p as u64).sum::<u64>() != k as u64 {
        return Err(Error::invalid(format!(
            "multinomial parts {parts:?} do not sum to {k}"
        )));
    }
    Ok(parts.iter().fold(factorial(k as u64), |acc, &p| acc / factorial(p as u64)))
}

/// Set partitions of a 2k-set into exactly s blocks of even size:
/// `(1/(s! 2^{s-1})) sum_{j=1}^s (-1)^{s-j} C(2s, s-j) j^{2k}`.
pub fn even_block_partitions(k: u32, s: u32) -> Result<Count> {
    if s == 0 {
        return Ok(if k == 0 { BigUint::one() } else { BigUint::zero() });
    }
    let mut acc = BigInt::zero();
    for j in 1..=s {
        let term = BigInt::from(binomial(2 * s as u64, (s - j) as u64)) * BigInt::from(j).pow(2 * k);
        if (s - j) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let den = BigInt::from(factorial(s as u64)) * BigInt::from(2u32).pow(s - 1);
    if !(&acc % &den).is_zero() || acc.is_negative() {
        return Err(Error::consistency("even-block count is not a nonnegative integer"));
    }
    Ok((acc / den).to_biguint().expect("nonnegative"))
}

/// Calls `f` on every `(l_1..l_m)` with `sum l_i = k` and `l_i = residue_i mod modulus_i`.
/// A modulus of 1 leaves that coordinate unconstrained.
pub fn for_each_congruent_composition(
    k: u32,
    constraints: &[(u32, u32)],
    f: &mut dyn FnMut(&[u32]),
) {
    fn rec(
        left: u32,
        constraints: &[(u32, u32)],
        cur: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        let i = cur.len();
        if i == constraints.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        let (m, res) = constraints[i];
        let m = m.max(1);
        let mut l = res % m;
        while l <= left {
            cur.push(l);
            rec(left - l, constraints, cur, f);
            cur.pop();
            l += m;
        }
    }
    rec(k, constraints, &mut Vec::new(), f)
}

/// `sum multinomial(k; l)` over the congruent compositions of `k`.
pub fn congruent_multinomial_sum(k: u32, constraints: &[(u32, u32)]) -> Count {
    let kf = factorial(k as u64);
    let facts: Vec<BigUint> = (0..=k as u64).map(factorial).collect();
    let mut total = BigUint::zero();
    for_each_congruent_composition(k, constraints, &mut |ls| {
        let den = ls.iter().fold(BigUint::one(), |acc, &l| acc * &facts[l as usize]);
        total += &kf / den;
    });
    total
}
