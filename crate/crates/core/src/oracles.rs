//! Brute-force enumerators and summation formulas used as independent oracles.
//!
//! Nothing here calls into the sequence or binomial engines. Counts come from
//! explicit enumeration with machine integers or `BigInt`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Poly, RingScalar};

/// A weakly decreasing list of nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn fits(&self, height: usize, width: u32) -> bool {
        self.0.len() <= height
            && self.0.iter().all(|&p| p <= width)
            && self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

/// All partitions fitting in `height` rows of at most `width` cells,
/// with zero parts dropped.
pub fn partitions_in_box(height: usize, width: u32) -> Vec<Partition> {
    fn go(rows_left: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if rows_left == 0 {
            return;
        }
        for part in 1..=cap {
            cur.push(part);
            go(rows_left - 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(height, width, &mut Vec::new(), &mut out);
    out
}

fn count_poly(exponents: impl IntoIterator<Item = usize>) -> Poly {
    let mut counts: Vec<u64> = Vec::new();
    for e in exponents {
        if counts.len() <= e {
            counts.resize(e + 1, 0);
        }
        counts[e] += 1;
    }
    Poly::new(counts.into_iter().map(|c| BigRational::from_integer(c.into())).collect())
}

/// `sum q^|lambda|` over partitions in an `m x n` box (`m` rows, width `n`).
pub fn partitions_in_box_gf(m: usize, n: usize) -> Poly {
    count_poly(partitions_in_box(m, n as u32).iter().map(|p| p.size() as usize))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    East,
    North,
}

/// A monotone lattice path from `(0, 0)` to `(k, n - k)`: `k` east steps, `n - k` north.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZigzagPath(pub Vec<Step>);

impl ZigzagPath {
    pub fn end(&self) -> (usize, usize) {
        let east = self.0.iter().filter(|&&s| s == Step::East).count();
        (east, self.0.len() - east)
    }

    /// Unit cells between the path and the x-axis.
    pub fn area(&self) -> usize {
        let mut height = 0;
        let mut area = 0;
        for step in &self.0 {
            match step {
                Step::North => height += 1,
                Step::East => area += height,
            }
        }
        area
    }

    /// Coding word with north = 1, east = 0.
    pub fn word(&self) -> Vec<u8> {
        self.0.iter().map(|s| u8::from(*s == Step::North)).collect()
    }
}

pub fn zigzag_paths(n: usize, k: usize) -> Vec<ZigzagPath> {
    fn go(east: usize, north: usize, cur: &mut Vec<Step>, out: &mut Vec<ZigzagPath>) {
        if east == 0 && north == 0 {
            out.push(ZigzagPath(cur.clone()));
            return;
        }
        if east > 0 {
            cur.push(Step::East);
            go(east - 1, north, cur, out);
            cur.pop();
        }
        if north > 0 {
            cur.push(Step::North);
            go(east, north - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(k, n - k, &mut Vec::new(), &mut out);
    }
    out
}

/// `sum q^area` over zigzag paths to `(k, n - k)`.
pub fn zigzag_area_gf(n: usize, k: usize) -> Poly {
    count_poly(zigzag_paths(n, k).iter().map(ZigzagPath::area))
}

/// Pairs `i < j` with `word[i] > word[j]`.
pub fn inversions(word: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

/// `sum q^inv(w)` over 0/1 words of length `n` with `k` ones.
pub fn inversion_gf(n: usize, k: usize) -> Poly {
    assert!(n < 32, "word length {n} too large for enumeration");
    let words = (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| {
        (0..n).map(|i| ((m >> i) & 1) as u8).collect::<Vec<_>>()
    });
    count_poly(words.map(|w| inversions(&w)))
}

/// `[n]_q! / ([k]_q! [n-k]_q!)` computed in the rational-function field.
pub fn gaussian_binomial(n: usize, k: usize) -> Result<Poly> {
    if k > n {
        return Ok(Poly::zero());
    }
    let bracket = |i: usize| RingScalar::from_poly(Poly::from_i64s(&vec![1; i]));
    let fact = |m: usize| (1..=m).fold(RingScalar::one(), |acc, i| &acc * &bracket(i));
    let value = fact(n).checked_div(&(&fact(k) * &fact(n - k)))?;
    match value {
        RingScalar::Rational(r) => Ok(Poly::constant(r)),
        RingScalar::Polynomial(p) => Ok(p),
        other => Err(Error::InexactDivision(format!("gaussian ({n}, {k}) = {other}"))),
    }
}

fn digits(v: usize, q: usize, n: usize) -> Vec<usize> {
    (0..n).scan(v, |rest, _| {
        let d = *rest % q;
        *rest /= q;
        Some(d)
    })
    .collect()
}

fn undigits(ds: &[usize], q: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * q + d)
}

/// Adds `c * w` to every member of `span`; membership is a bitset over vector codes.
fn extend_span(span: u128, w: usize, q: usize, n: usize) -> u128 {
    let wd = digits(w, q, n);
    let mut out = 0u128;
    for v in (0..q.pow(n as u32)).filter(|&v| span >> v & 1 == 1) {
        let vd = digits(v, q, n);
        for c in 0..q {
            let sum: Vec<usize> = vd.iter().zip(&wd).map(|(a, b)| (a + c * b) % q).collect();
            out |= 1u128 << undigits(&sum, q);
        }
    }
    out
}

/// Number of `k`-dimensional subspaces of `GF(q)^n`, by enumerating spans.
pub fn subspace_count(n: usize, k: usize, q: u32) -> Result<u64> {
    if !matches!(q, 2 | 3) || n > 4 || k > n {
        return Err(Error::InvalidInput(format!(
            "subspace count supports q in {{2, 3}}, n <= 4, k <= n; got n = {n}, k = {k}, q = {q}"
        )));
    }
    let q = q as usize;
    let size = q.pow(n as u32);
    // Spans of each dimension, deduplicated by membership set.
    let mut level: HashSet<u128> = HashSet::from([1u128]);
    for _ in 0..k {
        let mut next = HashSet::new();
        for &span in &level {
            for w in (1..size).filter(|&w| span >> w & 1 == 0) {
                next.insert(extend_span(span, w, q, n));
            }
        }
        level = next;
    }
    Ok(level.len() as u64)
}

/// A colored monomino or domino; the payload is the color index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tile {
    Square(u32),
    Domino(u32),
}

impl Tile {
    /// Number of cells covered.
    pub fn width(self) -> usize {
        match self {
            Tile::Square(_) => 1,
            Tile::Domino(_) => 2,
        }
    }
}

/// Tiles covering a strip of `len` cells.
///
/// `start` is the cell where the first tile begins. A circular tiling with
/// `start = 1` has its last tile a domino over cells `len - 1` and `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tiling {
    pub len: usize,
    pub start: usize,
    pub tiles: Vec<Tile>,
}

impl Tiling {
    pub fn is_valid(&self, s_colors: u32, t_colors: u32) -> bool {
        let covered: usize = self.tiles.iter().map(|t| t.width()).sum();
        let colors_ok = self.tiles.iter().all(|t| match *t {
            Tile::Square(c) => c < s_colors,
            Tile::Domino(c) => c < t_colors,
        });
        let phase_ok = match self.start {
            0 => true,
            1 => self.len >= 2 && matches!(self.tiles.last(), Some(Tile::Domino(_))),
            _ => false,
        };
        covered == self.len && colors_ok && phase_ok
    }
}

fn walk_linear(len: usize, s: u32, t: u32, cur: &mut Vec<Tile>, visit: &mut dyn FnMut(&[Tile])) {
    if len == 0 {
        visit(cur);
        return;
    }
    for c in 0..s {
        cur.push(Tile::Square(c));
        walk_linear(len - 1, s, t, cur, visit);
        cur.pop();
    }
    if len >= 2 {
        for c in 0..t {
            cur.push(Tile::Domino(c));
            walk_linear(len - 2, s, t, cur, visit);
            cur.pop();
        }
    }
}

/// Visits every colored tiling of a `1 x len` strip.
pub fn for_each_tiling(len: usize, s_colors: u32, t_colors: u32, mut visit: impl FnMut(Tiling)) {
    walk_linear(len, s_colors, t_colors, &mut Vec::new(), &mut |tiles| {
        visit(Tiling { len, start: 0, tiles: tiles.to_vec() })
    });
}

/// Visits every colored circular tiling of `len` cells, both phases.
pub fn for_each_bracelet(len: usize, s_colors: u32, t_colors: u32, mut visit: impl FnMut(Tiling)) {
    for_each_tiling(len, s_colors, t_colors, &mut visit);
    if len >= 2 {
        walk_linear(len - 2, s_colors, t_colors, &mut Vec::new(), &mut |tiles| {
            for c in 0..t_colors {
                let mut all = tiles.to_vec();
                all.push(Tile::Domino(c));
                visit(Tiling { len, start: 1, tiles: all });
            }
        });
    }
}

/// Colored square/domino tilings of length `len`, counted by enumeration.
pub fn colored_tilings(len: usize, s_colors: u32, t_colors: u32) -> u64 {
    let mut count = 0;
    walk_linear(len, s_colors, t_colors, &mut Vec::new(), &mut |_| count += 1);
    count
}

/// Colored bracelets of length `len`; a domino may straddle the seam.
pub fn colored_bracelets(len: usize, s_colors: u32, t_colors: u32) -> Result<u64> {
    if len == 0 {
        return Err(Error::InvalidInput("bracelets need at least one cell".into()));
    }
    let mut count = 0u64;
    walk_linear(len, s_colors, t_colors, &mut Vec::new(), &mut |_| count += 1);
    if len >= 2 {
        let mut seam = 0u64;
        walk_linear(len - 2, s_colors, t_colors, &mut Vec::new(), &mut |_| seam += 1);
        count += seam * u64::from(t_colors);
    }
    Ok(count)
}

fn fib_table(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::zero(), BigInt::one()];
    while f.len() <= n {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f
}

/// Visits each strictly increasing `x_1 < ... < x_k` in `1..=n`.
fn for_each_increasing(n: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(next: usize, n: usize, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        let need = k - cur.len();
        for x in next..=n + 1 - need {
            cur.push(x);
            go(x + 1, n, k, cur, visit);
            cur.pop();
        }
    }
    if k <= n {
        go(1, n, k, &mut Vec::with_capacity(k), visit);
    }
}

/// Weighted sum over `1 <= x_1 < ... < x_k <= n` of
/// `prod_i W_{k-i}^{x_i - x_{i-1} - 1} W_{n - x_i - (k-i) + 1}` times `tail(x_k - k)`,
/// with `x_0 = 0` and `0^0 = 1`.
#[allow(clippy::too_many_arguments)]
fn composition_sum<T: Clone>(
    n: usize,
    k: usize,
    w: &[T],
    one: T,
    mul: impl Fn(&T, &T) -> T,
    add: impl Fn(&T, &T) -> T,
    pow: impl Fn(&T, usize) -> T,
    tail: impl Fn(usize) -> T,
    zero: T,
) -> T {
    let mut total = zero;
    for_each_increasing(n, k, &mut |xs| {
        let mut term = one.clone();
        let mut prev = 0;
        for (i, &x) in xs.iter().enumerate() {
            let i = i + 1;
            term = mul(&term, &pow(&w[k - i], x - prev - 1));
            term = mul(&term, &w[n - x - (k - i) + 1]);
            prev = x;
        }
        let last = xs.last().copied().unwrap_or(0);
        term = mul(&term, &tail(last - k));
        total = add(&total, &term);
    });
    total
}

/// Fibonomial `(n; k)_F` by the corrected summation formula.
pub fn md_fibonomial(n: usize, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let f = fib_table(n + 1);
    composition_sum(
        n,
        k,
        &f,
        BigInt::one(),
        |a, b| a * b,
        |a, b| a + b,
        |a, e| num_traits::pow(a.clone(), e),
        |_| BigInt::one(),
        BigInt::zero(),
    )
}

/// Variant sum whose last factor is replaced by `F_{n - x_k}`.
///
/// Known to disagree with the fibonomials; kept as a negative control.
pub fn errata_fibonomial(n: usize, k: usize) -> Result<BigInt> {
    if k < 2 || k > n {
        return Err(Error::Unsupported(format!("erratum sum defined for 2 <= k <= n; got ({n}, {k})")));
    }
    let f = fib_table(n + 1);
    let mut total = BigInt::zero();
    for_each_increasing(n, k, &mut |xs| {
        let mut term = BigInt::one();
        let mut prev = 0;
        for (i, &x) in xs[..k - 1].iter().enumerate() {
            let i = i + 1;
            term *= num_traits::pow(f[k - i].clone(), x - prev - 1);
            term *= &f[n - x - (k - i) + 1];
            prev = x;
        }
        term *= &f[n - xs[k - 1]];
        total += term;
    });
    Ok(total)
}

/// `U`-binomial `(n; k)_U` for `U_0 = 0, U_1 = 1, U_{m+2} = s U_{m+1} + t U_m`
/// by the corrected summation formula with weight `t^{x_k - k}`.
pub fn md_ubinomial(n: usize, k: usize, s: &RingScalar, t: &RingScalar) -> RingScalar {
    if k == 0 {
        return RingScalar::one();
    }
    let mut u = vec![RingScalar::zero(), RingScalar::one()];
    while u.len() <= n + 1 {
        let next = &(s * &u[u.len() - 1]) + &(t * &u[u.len() - 2]);
        u.push(next);
    }
    composition_sum(
        n,
        k,
        &u,
        RingScalar::one(),
        |a, b| a * b,
        |a, b| a + b,
        |a, e| a.pow(e as u32),
        |e| t.pow(e as u32),
        RingScalar::zero(),
    )
}
