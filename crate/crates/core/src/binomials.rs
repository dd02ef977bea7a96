//! F-factorials, F-binomial and F-multinomial coefficients over the fraction field.
//!
//! For a sequence `F` the F-factorial is `F_1 F_2 ... F_n`; `F_0` never enters,
//! so sequences starting at zero (the `U` family) are fine.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::horadam::{HoradamSpec, ScalarSequence};
use crate::oracles::gaussian_binomial;
use crate::report::{CheckRecord, Report};
use crate::ring::RingScalar;

/// Terms `F_0 ..= F_n`, fetched once.
pub(crate) fn terms<S: ScalarSequence + ?Sized>(seq: &S, n: usize) -> Result<Vec<RingScalar>> {
    (0..=n).map(|i| seq.term(i)).collect()
}

fn nonzero_upto(terms: &[RingScalar], n: usize) -> Result<()> {
    match (1..=n).find(|&i| terms[i].is_zero()) {
        Some(index) => Err(Error::ZeroDivisor { index }),
        None => Ok(()),
    }
}

fn factorial_of(terms: &[RingScalar], n: usize) -> RingScalar {
    terms[1..=n].iter().fold(RingScalar::one(), |acc, f| &acc * f)
}

/// `F_1 F_2 ... F_n`; the empty product is 1.
pub fn ffactorial<S: ScalarSequence + ?Sized>(seq: &S, n: usize) -> Result<RingScalar> {
    let terms = terms(seq, n)?;
    nonzero_upto(&terms, n)?;
    Ok(factorial_of(&terms, n))
}

/// `F_n! / (F_k! F_{n-k}!)`, and 0 for `k < 0` or `k > n`.
pub fn fbinomial<S: ScalarSequence + ?Sized>(seq: &S, n: usize, k: i64) -> Result<RingScalar> {
    let terms = terms(seq, n)?;
    nonzero_upto(&terms, n)?;
    Ok(binomial_from_terms(&terms, n, k))
}

fn binomial_from_terms(terms: &[RingScalar], n: usize, k: i64) -> RingScalar {
    if k < 0 || k as usize > n {
        return RingScalar::zero();
    }
    let k = k as usize;
    let den = &factorial_of(terms, k) * &factorial_of(terms, n - k);
    factorial_of(terms, n).checked_div(&den).expect("terms checked nonzero")
}

/// `F_n! / prod F_{k_i}!` with `n = sum k_i`; 0 if any part is negative.
pub fn fmultinomial<S: ScalarSequence + ?Sized>(seq: &S, parts: &[i64]) -> Result<RingScalar> {
    if parts.iter().any(|&p| p < 0) {
        return Ok(RingScalar::zero());
    }
    let n: usize = parts.iter().map(|&p| p as usize).sum();
    let terms = terms(seq, n)?;
    nonzero_upto(&terms, n)?;
    let den = parts
        .iter()
        .fold(RingScalar::one(), |acc, &p| &acc * &factorial_of(&terms, p as usize));
    factorial_of(&terms, n).checked_div(&den)
}

/// Checks `(n; k) (n-k; parts) = (n; k, parts)` and the chained form
/// `(n; k_1, ..., k_m) = prod_i (n - k_1 - ... - k_{i-1}; k_i)`.
pub fn multinomial_product_check<S: ScalarSequence + ?Sized>(
    seq: &S,
    n: usize,
    k: usize,
    parts: &[i64],
) -> Result<Report> {
    if k > n || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != (n - k) as i64 {
        return Err(Error::InvalidInput(format!(
            "parts {parts:?} must be nonnegative and sum to n - k = {}",
            n as i64 - k as i64
        )));
    }
    let idx: Vec<i64> = [n as i64, k as i64].into_iter().chain(parts.iter().copied()).collect();
    let mut full = vec![k as i64];
    full.extend_from_slice(parts);

    let lhs = &fbinomial(seq, n, k as i64)? * &fmultinomial(seq, parts)?;
    let rhs = fmultinomial(seq, &full)?;
    let mut report = Report::new();
    report.push(CheckRecord::compare("multinomial_product", &idx, &lhs, &rhs));

    let mut remaining = n;
    let mut chained = RingScalar::one();
    for &part in &full {
        chained = &chained * &fbinomial(seq, remaining, part)?;
        remaining -= part as usize;
    }
    report.push(CheckRecord::compare("multinomial_chain", &idx, &chained, &rhs));
    Ok(report)
}

/// A frozen triangle of F-binomials `(n, k)`, `0 <= k <= n <= max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialTable {
    terms: Vec<RingScalar>,
    rows: Vec<Vec<RingScalar>>,
}

impl BinomialTable {
    /// Fills row by row with the falling-factorial product
    /// `prod_{i=1..k} F_{n-k+i} / F_i`, mirrored across the middle.
    pub fn build<S: ScalarSequence + ?Sized>(seq: &S, max_n: usize) -> Result<Self> {
        let terms = terms(seq, max_n)?;
        nonzero_upto(&terms, max_n)?;
        let mut rows = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![RingScalar::zero(); n + 1];
            let mut acc = RingScalar::one();
            for k in 0..=n / 2 {
                if k > 0 {
                    acc = (&acc * &terms[n - k + 1]).checked_div(&terms[k])?;
                }
                row[k] = acc.clone();
                row[n - k] = acc.clone();
            }
            rows.push(row);
        }
        Ok(Self { terms, rows })
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// The sequence terms `F_0 ..= F_max_n` the table was built from.
    pub fn terms(&self) -> &[RingScalar] {
        &self.terms
    }

    /// Cell `(n, k)`; 0 outside `0 <= k <= n`, `None` past `max_n`.
    pub fn get(&self, n: usize, k: i64) -> Option<RingScalar> {
        let row = self.rows.get(n)?;
        if k < 0 || k as usize > n {
            return Some(RingScalar::zero());
        }
        Some(row[k as usize].clone())
    }

    pub fn row(&self, n: usize) -> Option<&[RingScalar]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// Cells in lexicographic `(n, k)` order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &RingScalar)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, v)| (n, k, v)))
    }

    /// Compares every cell with the factorial ratio recomputed from scratch.
    pub fn verify(&self) -> Report {
        let mut report = Report::new();
        for (n, k, v) in self.cells() {
            let direct = binomial_from_terms(&self.terms, n, k as i64);
            report.push(CheckRecord::compare("table_factorial_ratio", &[n as i64, k as i64], v, &direct));
        }
        report
    }
}

/// A cell whose value is not an integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub n: usize,
    pub k: usize,
    pub value: RingScalar,
}

/// Scans `(n, k)`, `0 <= k <= n <= max_n`, for non-integral F-binomials.
///
/// Any spec with integer `a, b, s, t` is accepted; for `a = 0, b = 1` the
/// result is expected to be empty.
pub fn integrality_scan(spec: &HoradamSpec, max_n: usize) -> Result<Vec<Violation>> {
    for (name, v) in [("a", &spec.a), ("b", &spec.b), ("s", &spec.s), ("t", &spec.t)] {
        if v.as_integer().is_none() {
            return Err(Error::InvalidInput(format!("integrality scan needs integer parameters; {name} = {v}")));
        }
    }
    let table = BinomialTable::build(spec, max_n)?;
    Ok(table
        .cells()
        .filter(|(_, _, v)| v.as_integer().is_none())
        .map(|(n, k, v)| Violation { n, k, value: v.clone() })
        .collect())
}

/// `n_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}`.
pub fn pq_number(p: &RingScalar, q: &RingScalar, n: usize) -> RingScalar {
    (0..n).fold(RingScalar::zero(), |acc, j| {
        &acc + &(&p.pow((n - 1 - j) as u32) * &q.pow(j as u32))
    })
}

/// Checks `(n; k)_{p,q} = q^{k(n-k)} (n; k)_{q*}` with `q* = p/q`, the right
/// side being the Gaussian binomial evaluated at `q*`.
pub fn qstar_transfer(p: &RingScalar, q: &RingScalar, n: usize, k: usize) -> Result<Report> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ExcludedCase(format!("q* transfer needs p q != 0; p = {p}, q = {q}")));
    }
    if k > n {
        return Err(Error::InvalidInput(format!("k = {k} exceeds n = {n}")));
    }
    let seq = crate::horadam::FnSequence(|i| pq_number(p, q, i));
    let lhs = fbinomial(&seq, n, k as i64)?;
    let qstar = p.checked_div(q)?;
    let gauss = RingScalar::eval_poly(&gaussian_binomial(n, k)?, &qstar);
    let rhs = &q.pow((k * (n - k)) as u32) * &gauss;
    let mut report = Report::new();
    report.push(CheckRecord::compare("qstar_transfer", &[n as i64, k as i64], &lhs, &rhs));
    Ok(report)
}
