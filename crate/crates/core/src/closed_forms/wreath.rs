use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{rat, CycNum, Rational};
use crate::combinat::{
    congruent_multinomial_sum, factorial, rencontres, z_multipartition, Count,
};
use crate::error::{Error, Result};
use crate::group::size_rat;
use crate::group::wreath_classes;
use crate::series::{egf_hyperbolic, EgfTruncation};

/// Largest `r^n n!` for which the monomial group is enumerated element by element.
pub const WREATH_BRUTE_FORCE_LIMIT: u64 = 200;

fn check(r: u32, n: u32) -> Result<()> {
    if r < 2 || n == 0 {
        return Err(Error::invalid(format!(
            "wreath product needs r >= 2 and n >= 1, got r = {r}, n = {n}"
        )));
    }
    Ok(())
}

fn to_count(q: Rational, what: &str) -> Result<Count> {
    if !q.is_integer() || q < Rational::zero() {
        return Err(Error::consistency(format!("{what} gave {q}, not a count")));
    }
    Ok(q.to_integer().to_biguint().expect("nonnegative"))
}

/// Invariants of `Z_r wr S_n` in `(C^n)^{⊗k}` by counting fixed points:
/// `(1/n!) sum_{m=0}^n F_n(m) sum multinomial(k; l_1..l_m)` over `l_i = 0 mod r`.
pub fn wreath_invariants_fixed_points(r: u32, n: u32, k: u32) -> Result<Count> {
    check(r, n)?;
    let mut total = BigUint::zero();
    for m in 0..=n {
        let inner = congruent_multinomial_sum(k, &vec![(r, 0); m as usize]);
        if !inner.is_zero() {
            total += rencontres(n, m)? * inner;
        }
    }
    let nf = factorial(n as u64);
    if !(&total % &nf).is_zero() {
        return Err(Error::consistency("fixed-point sum is not divisible by n!"));
    }
    Ok(total / nf)
}

/// The same dimension as a class sum `sum_alpha chi_V(alpha)^k / z_alpha`
/// over r-tuples of partitions, with `chi_V(alpha) = sum_i F(alpha^(i)) zeta^i`.
pub fn wreath_invariants_character(r: u32, n: u32, k: u32) -> Result<Count> {
    check(r, n)?;
    let mut total = CycNum::zero();
    for alpha in wreath_classes(r, n) {
        let chi: CycNum = alpha
            .components()
            .iter()
            .enumerate()
            .map(|(i, p)| CycNum::root_of_unity(r as u64, i as i64).scale(&rat(p.fixed_points() as i64)))
            .sum();
        let w = size_rat(&z_multipartition(&alpha, r)).recip();
        total = &total + &chi.pow(k).scale(&w);
    }
    let q = total
        .to_rational()
        .ok_or_else(|| Error::consistency(format!("wreath class sum {total} is irrational")))?;
    to_count(q, "wreath class sum")
}

/// Runs both evaluators and returns their common value.
pub fn wreath_invariants(r: u32, n: u32, k: u32) -> Result<Count> {
    check(r, n)?;
    if k % r != 0 {
        return Ok(Count::zero());
    }
    let a = wreath_invariants_fixed_points(r, n, k)?;
    let b = wreath_invariants_character(r, n, k)?;
    if a != b {
        return Err(Error::consistency(format!(
            "wreath evaluators disagree for r = {r}, n = {n}, k = {k}: {a} vs {b}"
        )));
    }
    Ok(a)
}

/// The published fixed-point expression
/// `(1/(r^n n!)) sum_{m=1}^n r^m F_n(m)^k sum multinomial(k; l)`, kept for comparison.
/// It agrees with the true dimension for `n <= 2` and `k >= 1` only.
pub fn wreath_invariants_printed(r: u32, n: u32, k: u32) -> Result<Rational> {
    check(r, n)?;
    let mut total = BigUint::zero();
    for m in 1..=n {
        let f = rencontres(n, m)?;
        total += BigUint::from(r).pow(m)
            * f.pow(k)
            * congruent_multinomial_sum(k, &vec![(r, 0); m as usize]);
    }
    let den = BigUint::from(r).pow(n) * factorial(n as u64);
    Ok(size_rat(&total) / size_rat(&den))
}

/// Exponential generating function `(1/n!) sum_{m=0}^n F_n(m) h_1(t, r)^m`.
pub fn wreath_invariants_egf(r: u32, n: u32, order: usize) -> Result<EgfTruncation> {
    check(r, n)?;
    let h = egf_hyperbolic(1, r, order)?;
    let mut acc = EgfTruncation::constant(Rational::zero(), order);
    for m in 0..=n {
        let term = h.pow(m).scale(&size_rat(&rencontres(n, m)?));
        acc = acc.add(&term)?;
    }
    Ok(acc.scale(&size_rat(&factorial(n as u64)).recip()))
}

/// The published generating function `(1/(r^n n!)) sum_{m=1}^n r^m h_1(F_n(m) t, r)^m`.
pub fn wreath_invariants_egf_printed(r: u32, n: u32, order: usize) -> Result<EgfTruncation> {
    check(r, n)?;
    let h = egf_hyperbolic(1, r, order)?;
    let mut acc = EgfTruncation::constant(Rational::zero(), order);
    for m in 1..=n {
        let f = size_rat(&rencontres(n, m)?);
        let term = h.scale_arg(&f).pow(m).scale(&size_rat(&BigUint::from(r).pow(m)));
        acc = acc.add(&term)?;
    }
    let den = BigUint::from(r).pow(n) * factorial(n as u64);
    Ok(acc.scale(&size_rat(&den).recip()))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Averages `tr(g)^k` over every monomial matrix `g = (sigma, b)`.
/// Only the diagonal entries matter: `tr(g) = sum_{sigma(i) = i} zeta^{b_i}`.
pub fn wreath_brute_force(r: u32, n: u32, k: u32) -> Result<Count> {
    check(r, n)?;
    let order = BigUint::from(r).pow(n) * factorial(n as u64);
    if order > BigUint::from(WREATH_BRUTE_FORCE_LIMIT) {
        return Err(Error::unsupported(format!(
            "brute force is limited to groups of order <= {WREATH_BRUTE_FORCE_LIMIT}, got {order}"
        )));
    }
    let zeta: Vec<CycNum> = (0..r).map(|j| CycNum::root_of_unity(r as u64, j as i64)).collect();
    let colourings = (r as usize).pow(n);
    let mut total = CycNum::zero();
    for sigma in permutations(n as usize) {
        for code in 0..colourings {
            let mut trace = CycNum::zero();
            let mut c = code;
            for (i, &s) in sigma.iter().enumerate() {
                let b = c % r as usize;
                c /= r as usize;
                if s == i {
                    trace = &trace + &zeta[b];
                }
            }
            total = &total + &trace.pow(k);
        }
    }
    let q = total
        .to_rational()
        .ok_or_else(|| Error::consistency(format!("trace sum {total} is irrational")))?;
    to_count(q / size_rat(&order), "brute-force average")
}
