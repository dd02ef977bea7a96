//! Ward-Horadam sequences `H_0 = a, H_1 = b, H_{n+2} = s H_{n+1} + t H_n`.
//!
//! The recurrence is the reference evaluation path. The Binet form
//! `A p^n + B q^n` (computed in the quadratic extension over `D = s^2 + 4t`)
//! and the explicit binomial-sum form are independent routes to the same terms.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{CheckRecord, Report, Status};
use crate::ring::{Poly, QuadExtElem, RingScalar};

/// Recurrence-form parameters. `P = s`, `Q = -t` in Lucas' notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HoradamSpec {
    pub a: RingScalar,
    pub b: RingScalar,
    pub s: RingScalar,
    pub t: RingScalar,
}

impl HoradamSpec {
    pub fn new(a: RingScalar, b: RingScalar, s: RingScalar, t: RingScalar) -> Self {
        Self { a, b, s, t }
    }

    pub fn from_ints(a: i64, b: i64, s: i64, t: i64) -> Self {
        Self::new(a.into(), b.into(), s.into(), t.into())
    }

    /// `s^2 + 4t`.
    pub fn disc(&self) -> RingScalar {
        discriminant(self)
    }

    /// True when all four parameters are rational numbers.
    pub fn is_rational(&self) -> bool {
        [&self.a, &self.b, &self.s, &self.t].iter().all(|x| x.is_rational())
    }

    /// The fundamental sequence `U` with the same `(s, t)`.
    pub fn u_companion(&self) -> Self {
        Self::new(RingScalar::zero(), RingScalar::one(), self.s.clone(), self.t.clone())
    }

    /// The primordial sequence `V` with the same `(s, t)`.
    pub fn v_companion(&self) -> Self {
        Self::new(RingScalar::int(2), self.s.clone(), self.s.clone(), self.t.clone())
    }

    /// True for `a = 0, b = 1`.
    pub fn is_u_type(&self) -> bool {
        self.a.is_zero() && self.b.is_one()
    }

    /// Canonical JSON text, stable across runs.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("specs always serialize")
    }
}

/// Named parameter presets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    /// Fundamental Lucas sequence: `a = 0, b = 1`.
    U { s: RingScalar, t: RingScalar },
    /// Primordial Lucas sequence: `a = 2, b = s`.
    V { s: RingScalar, t: RingScalar },
    Fibonacci,
    Pell,
    LucasNumbers,
    /// `H_0 = 0, H_1 = 1, s(x) = x`, constant `t`.
    CiglerQFib { t: RingScalar },
    /// `H_0 = 2, H_1 = x, s(x) = x`, constant `t`.
    CiglerQLucas { t: RingScalar },
}

pub fn preset(kind: Preset) -> HoradamSpec {
    use RingScalar as R;
    match kind {
        Preset::U { s, t } => HoradamSpec::new(R::zero(), R::one(), s, t),
        Preset::V { s, t } => HoradamSpec::new(R::int(2), s.clone(), s, t),
        Preset::Fibonacci => HoradamSpec::from_ints(0, 1, 1, 1),
        Preset::Pell => HoradamSpec::from_ints(0, 1, 2, 1),
        Preset::LucasNumbers => HoradamSpec::from_ints(2, 1, 1, 1),
        Preset::CiglerQFib { t } => HoradamSpec::new(R::zero(), R::one(), R::x(), t),
        Preset::CiglerQLucas { t } => HoradamSpec::new(R::int(2), R::x(), R::x(), t),
    }
}

/// Anything that can hand out terms `F_0, F_1, ...` of a scalar sequence.
pub trait ScalarSequence {
    fn term(&self, n: usize) -> Result<RingScalar>;
}

/// A finite, explicitly listed sequence. Indices past the end are an input error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitSequence(pub Vec<RingScalar>);

impl ScalarSequence for ExplicitSequence {
    fn term(&self, n: usize) -> Result<RingScalar> {
        self.0.get(n).cloned().ok_or_else(|| {
            Error::InvalidInput(format!("explicit sequence has {} terms, index {n} requested", self.0.len()))
        })
    }
}

/// A sequence given by a closure.
pub struct FnSequence<F>(pub F);

impl<F: Fn(usize) -> RingScalar> ScalarSequence for FnSequence<F> {
    fn term(&self, n: usize) -> Result<RingScalar> {
        Ok((self.0)(n))
    }
}

impl<S: ScalarSequence + ?Sized> ScalarSequence for &S {
    fn term(&self, n: usize) -> Result<RingScalar> {
        (**self).term(n)
    }
}

/// Memoized recurrence evaluation. Reads are concurrent; extension takes the write lock.
#[derive(Debug)]
pub struct SequenceCache {
    spec: HoradamSpec,
    values: RwLock<Vec<RingScalar>>,
}

impl SequenceCache {
    pub fn new(spec: HoradamSpec) -> Self {
        let values = vec![spec.a.clone(), spec.b.clone()];
        Self { spec, values: RwLock::new(values) }
    }

    pub fn spec(&self) -> &HoradamSpec {
        &self.spec
    }

    pub fn get(&self, n: usize) -> RingScalar {
        if let Some(v) = self.values.read().expect("cache lock").get(n) {
            return v.clone();
        }
        let mut values = self.values.write().expect("cache lock");
        while values.len() <= n {
            let len = values.len();
            let next = &(&self.spec.s * &values[len - 1]) + &(&self.spec.t * &values[len - 2]);
            values.push(next);
        }
        values[n].clone()
    }

    /// `H_0 ..= H_n`.
    pub fn prefix(&self, n: usize) -> Vec<RingScalar> {
        self.get(n);
        self.values.read().expect("cache lock")[..=n].to_vec()
    }

    pub fn cached_len(&self) -> usize {
        self.values.read().expect("cache lock").len()
    }
}

impl Clone for SequenceCache {
    fn clone(&self) -> Self {
        Self {
            spec: self.spec.clone(),
            values: RwLock::new(self.values.read().expect("cache lock").clone()),
        }
    }
}

impl ScalarSequence for SequenceCache {
    fn term(&self, n: usize) -> Result<RingScalar> {
        Ok(self.get(n))
    }
}

impl ScalarSequence for HoradamSpec {
    fn term(&self, n: usize) -> Result<RingScalar> {
        Ok(term(self, n))
    }
}

/// `H_n` by iterating the recurrence.
pub fn term(spec: &HoradamSpec, n: usize) -> RingScalar {
    let (mut prev, mut cur) = (spec.a.clone(), spec.b.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&spec.s * &cur) + &(&spec.t * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn discriminant(spec: &HoradamSpec) -> RingScalar {
    &(&spec.s * &spec.s) + &(&RingScalar::int(4) * &spec.t)
}

/// Roots `p = (s + sqrt D)/2`, `q = (s - sqrt D)/2` of `z^2 = s z + t`.
///
/// When `D` is a nonzero square in the base field the roots are returned with
/// `beta = 0`; otherwise they carry the `sqrt D` component.
pub fn char_roots(spec: &HoradamSpec) -> Result<(QuadExtElem, QuadExtElem)> {
    let disc = discriminant(spec);
    if disc.is_zero() {
        return Err(Error::DegenerateRoots);
    }
    let half = RingScalar::frac(1, 2);
    let s_half = &spec.s * &half;
    Ok(match disc.sqrt_exact() {
        Some(root) => {
            let r_half = &root * &half;
            (
                QuadExtElem::embed(&s_half + &r_half, &disc),
                QuadExtElem::embed(&s_half - &r_half, &disc),
            )
        }
        None => (
            QuadExtElem::new(s_half.clone(), half.clone(), disc.clone()),
            QuadExtElem::new(s_half, -&half, disc),
        ),
    })
}

/// Binet-form parameters `H_n = A p^n + B q^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinetSpec {
    pub coeff_a: QuadExtElem,
    pub coeff_b: QuadExtElem,
    pub p: QuadExtElem,
    pub q: QuadExtElem,
}

impl BinetSpec {
    pub fn disc(&self) -> &RingScalar {
        &self.p.disc
    }

    /// `A p^n + B q^n` without projecting.
    pub fn term_ext(&self, n: u32) -> QuadExtElem {
        let ap = self.coeff_a.mul(&self.p.pow(n)).expect("common disc");
        let bq = self.coeff_b.mul(&self.q.pow(n)).expect("common disc");
        ap.add(&bq).expect("common disc")
    }
}

/// `A = (b - q a)/(p - q)`, `B = -(b - p a)/(p - q)`.
pub fn to_binet(spec: &HoradamSpec) -> Result<BinetSpec> {
    let (p, q) = char_roots(spec)?;
    let disc = p.disc.clone();
    let a = QuadExtElem::embed(spec.a.clone(), &disc);
    let b = QuadExtElem::embed(spec.b.clone(), &disc);
    let gap = p.sub(&q)?;
    let coeff_a = b.sub(&q.mul(&a)?)?.div(&gap)?;
    let coeff_b = b.sub(&p.mul(&a)?)?.div(&gap)?.neg();
    Ok(BinetSpec { coeff_a, coeff_b, p, q })
}

/// `A p^n + B q^n`, projected to the base field.
pub fn binet_term(binet: &BinetSpec, n: usize) -> Result<RingScalar> {
    binet.term_ext(exponent(n)?).project()
}

pub(crate) fn exponent(n: usize) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::InvalidInput(format!("index {n} too large")))
}

pub(crate) fn binomial_int(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Closed form as a pair of binomial sums:
/// `a * sum C(n-k, k) s^(n-2k) t^k + (b/s - a) * sum C(n-k-1, k) s^(n-2k) t^k`.
pub fn explicit_term(spec: &HoradamSpec, n: usize) -> Result<RingScalar> {
    if spec.s.is_zero() {
        return Err(Error::Unsupported("explicit form divides by s; s = 0 given".into()));
    }
    let s_pow = |e: usize| spec.s.pow(e as u32);
    let mut first = RingScalar::zero();
    for k in 0..=n / 2 {
        let c = RingScalar::from_rational(BigRational::from_integer(binomial_int(n - k, k)));
        first = &first + &(&c * &(&s_pow(n - 2 * k) * &spec.t.pow(k as u32)));
    }
    let mut second = RingScalar::zero();
    if n >= 1 {
        for k in 0..=(n - 1) / 2 {
            let c = RingScalar::from_rational(BigRational::from_integer(binomial_int(n - k - 1, k)));
            second = &second + &(&c * &(&s_pow(n - 2 * k) * &spec.t.pow(k as u32)));
        }
    }
    let weight = &spec.b.checked_div(&spec.s)? - &spec.a;
    Ok(&(&spec.a * &first) + &(&weight * &second))
}

/// `(a + (b - a P) x) / (1 - P x + Q x^2)` as a rational function in a fresh `x`.
pub fn ogf(spec: &HoradamSpec) -> Result<RingScalar> {
    let (num, den) = ogf_parts(spec)?;
    RingScalar::ratio(num, den)
}

fn ogf_parts(spec: &HoradamSpec) -> Result<(Poly, Poly)> {
    let coeff = |x: &RingScalar| -> Result<BigRational> {
        x.as_rational().cloned().ok_or_else(|| {
            Error::Unsupported("generating functions need rational parameters; the series variable would clash with x".into())
        })
    };
    let (a, b, s, t) = (coeff(&spec.a)?, coeff(&spec.b)?, coeff(&spec.s)?, coeff(&spec.t)?);
    let num = Poly::new(vec![a.clone(), &b - &a * &s]);
    let den = Poly::new(vec![BigRational::one(), -s, -t]);
    Ok((num, den))
}

/// Power-series coefficients `c_0 ..= c_order` of `num / den`, `den(0) != 0`.
pub fn series_coefficients(num: &Poly, den: &Poly, order: usize) -> Result<Vec<BigRational>> {
    let d0 = den.coeff(0);
    if num_traits::Zero::is_zero(&d0) {
        return Err(Error::DivisionByZero("series denominator vanishes at 0".into()));
    }
    let d0_inv = d0.recip();
    let dlen = den.coeffs().len();
    let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = num.coeff(n);
        for j in 1..dlen.min(n + 1) {
            acc -= &den.coeffs()[j] * &out[n - j];
        }
        out.push(acc * &d0_inv);
    }
    Ok(out)
}

/// Coefficientwise checks of the ordinary and exponential generating functions.
///
/// The OGF is expanded by series division and compared against the recurrence.
/// The EGF check builds `e^{px}` by the recurrence `c_n = c_{n-1} p / n` and is
/// only run when the roots are rational; otherwise it is recorded as skipped.
pub fn series_verify(spec: &HoradamSpec, order: usize) -> Result<Report> {
    let mut report = Report::new();
    let (num, den) = ogf_parts(spec)?;
    let coeffs = series_coefficients(&num, &den, order)?;
    let cache = SequenceCache::new(spec.clone());
    for (n, c) in coeffs.iter().enumerate() {
        let expected = cache.get(n);
        report.push(CheckRecord::compare("ogf_coefficient", &[n as i64], &RingScalar::from_rational(c.clone()), &expected));
    }

    let roots = char_roots(spec);
    let rational_roots = matches!(&roots, Ok((p, q)) if p.is_rational() && q.is_rational());
    if !rational_roots {
        let why = match roots {
            Err(e) => e.to_string(),
            Ok(_) => "roots are irrational; EGF check needs extension-valued series".into(),
        };
        report.push(CheckRecord::new("egf_coefficient", &[], Status::Skipped).with_note(why));
        return Ok(report);
    }
    let binet = to_binet(spec)?;
    let coeff_a = binet.coeff_a.project()?;
    let coeff_b = binet.coeff_b.project()?;
    let p = binet.p.project()?;
    let q = binet.q.project()?;
    let (mut ep, mut eq) = (RingScalar::one(), RingScalar::one());
    let mut factorial = RingScalar::one();
    for n in 0..=order {
        if n > 0 {
            let n_inv = RingScalar::frac(1, n as i64);
            ep = &(&ep * &p) * &n_inv;
            eq = &(&eq * &q) * &n_inv;
            factorial = &factorial * &RingScalar::int(n as i64);
        }
        let lhs = cache.get(n).checked_div(&factorial)?;
        let rhs = &(&coeff_a * &ep) + &(&coeff_b * &eq);
        report.push(CheckRecord::compare("egf_coefficient", &[n as i64], &lhs, &rhs));
    }
    Ok(report)
}

/// Values of the Lucas addition formulas at `(r, s)` for the `(s, t)` of a spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditionAudit {
    pub r: usize,
    pub s: usize,
    pub disc: RingScalar,
    /// `2 U_{r+s}` and `U_r V_s + U_s V_r`.
    pub u_form: (RingScalar, RingScalar),
    /// `2 V_{r+s}` and `V_r V_s + D U_r U_s`.
    pub v_corrected: (RingScalar, RingScalar),
    /// `2 V_{r+s}` and `V_r V_s + U_r U_s`, the form without the discriminant factor.
    pub v_literal: (RingScalar, RingScalar),
}

impl AdditionAudit {
    pub fn u_holds(&self) -> bool {
        self.u_form.0 == self.u_form.1
    }

    pub fn v_corrected_holds(&self) -> bool {
        self.v_corrected.0 == self.v_corrected.1
    }

    pub fn v_literal_holds(&self) -> bool {
        self.v_literal.0 == self.v_literal.1
    }

    /// With `strict_literal` the discriminant-free V form is a pass/fail check;
    /// otherwise it is recorded as informational.
    pub fn report(&self, strict_literal: bool) -> Report {
        let idx = [self.r as i64, self.s as i64];
        let mut report = Report::new();
        report.push(CheckRecord::compare("addition_u", &idx, &self.u_form.0, &self.u_form.1));
        report.push(CheckRecord::compare("addition_v_corrected", &idx, &self.v_corrected.0, &self.v_corrected.1));
        let mut literal = CheckRecord::compare("addition_v_literal", &idx, &self.v_literal.0, &self.v_literal.1);
        if !strict_literal {
            let verdict = if self.v_literal_holds() { "holds" } else { "differs" };
            literal.status = Status::Skipped;
            literal.note = Some(format!("informational: form without factor D (D = {}) {verdict}", self.disc));
        }
        report.push(literal);
        report
    }
}

/// Evaluates both Lucas addition formulas for the `U`/`V` pair sharing `spec`'s `(s, t)`.
pub fn addition_check(spec: &HoradamSpec, r: usize, s: usize) -> AdditionAudit {
    let u = SequenceCache::new(spec.u_companion());
    let v = SequenceCache::new(spec.v_companion());
    let disc = discriminant(spec);
    let two = RingScalar::int(2);
    let (ur, us, vr, vs) = (u.get(r), u.get(s), v.get(r), v.get(s));
    let uu = &ur * &us;
    let vv = &vr * &vs;
    let two_v = &two * &v.get(r + s);
    AdditionAudit {
        r,
        s,
        u_form: (&two * &u.get(r + s), &(&ur * &vs) + &(&us * &vr)),
        v_corrected: (two_v.clone(), &vv + &(&disc * &uu)),
        v_literal: (two_v, &vv + &uu),
        disc,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> HoradamSpec {
        preset(Preset::Fibonacci)
    }

    #[test]
    fn term_examples() {
        assert_eq!(term(&fib(), 10), RingScalar::int(55));
        assert_eq!(term(&preset(Preset::Pell), 4), RingScalar::int(12));
        let s = RingScalar::x();
        let t = RingScalar::int(3);
        let v = preset(Preset::V { s: s.clone(), t: t.clone() });
        assert_eq!(term(&v, 2), &(&s * &s) + &(&RingScalar::int(2) * &t));
    }

    #[test]
    fn cache_agrees_with_direct_iteration() {
        let cache = SequenceCache::new(preset(Preset::LucasNumbers));
        assert_eq!(cache.get(5), RingScalar::int(11));
        assert_eq!(cache.cached_len(), 6);
        assert_eq!(cache.get(3), RingScalar::int(4));
        let prefix: Vec<_> = cache.prefix(5).iter().map(|x| x.to_string()).collect();
        assert_eq!(prefix, ["2", "1", "3", "4", "7", "11"]);
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&fib()), RingScalar::int(5));
        assert_eq!(discriminant(&preset(Preset::Pell)), RingScalar::int(8));
        let spec = preset(Preset::CiglerQFib { t: RingScalar::one() });
        assert_eq!(discriminant(&spec), RingScalar::from_poly(Poly::from_i64s(&[4, 0, 1])));
    }

    #[test]
    fn char_roots_examples() {
        let (p, q) = char_roots(&fib()).unwrap();
        let half = RingScalar::frac(1, 2);
        assert_eq!(p, QuadExtElem::new(half.clone(), half.clone(), RingScalar::int(5)));
        assert_eq!(q, QuadExtElem::new(half.clone(), -&half, RingScalar::int(5)));

        let (p, q) = char_roots(&HoradamSpec::from_ints(0, 1, 3, -2)).unwrap();
        assert_eq!(p.project().unwrap(), RingScalar::int(2));
        assert_eq!(q.project().unwrap(), RingScalar::int(1));

        assert_eq!(char_roots(&HoradamSpec::from_ints(0, 1, 2, -1)), Err(Error::DegenerateRoots));
    }

    #[test]
    fn to_binet_examples() {
        // Fibonacci: A = sqrt5/5, B = -sqrt5/5
        let b = to_binet(&fib()).unwrap();
        let d5 = RingScalar::int(5);
        assert_eq!(b.coeff_a, QuadExtElem::new(RingScalar::zero(), RingScalar::frac(1, 5), d5.clone()));
        assert_eq!(b.coeff_b, QuadExtElem::new(RingScalar::zero(), RingScalar::frac(-1, 5), d5));

        // V-spec: A = B = 1
        let v = to_binet(&preset(Preset::V { s: RingScalar::int(3), t: RingScalar::int(7) })).unwrap();
        assert_eq!(v.coeff_a.project().unwrap(), RingScalar::one());
        assert_eq!(v.coeff_b.project().unwrap(), RingScalar::one());

        // U-spec: A = 1/(p - q), B = -1/(p - q)
        let u = to_binet(&preset(Preset::U { s: RingScalar::int(2), t: RingScalar::int(5) })).unwrap();
        let gap_inv = u.p.sub(&u.q).unwrap().inv().unwrap();
        assert_eq!(u.coeff_a, gap_inv);
        assert_eq!(u.coeff_b, gap_inv.neg());
    }

    #[test]
    fn binet_term_examples() {
        let lucas = to_binet(&preset(Preset::LucasNumbers)).unwrap();
        assert_eq!(binet_term(&lucas, 0).unwrap(), RingScalar::int(2));
        assert_eq!(binet_term(&to_binet(&fib()).unwrap(), 5).unwrap(), RingScalar::int(5));
        let u21 = to_binet(&HoradamSpec::from_ints(0, 1, 3, -2)).unwrap();
        assert_eq!(binet_term(&u21, 6).unwrap(), RingScalar::int(63));
    }

    #[test]
    fn explicit_term_examples() {
        assert_eq!(explicit_term(&fib(), 4).unwrap(), RingScalar::int(3));
        let spec = HoradamSpec::new(RingScalar::frac(3, 7), RingScalar::int(-2), RingScalar::frac(5, 2), RingScalar::int(4));
        assert_eq!(explicit_term(&spec, 1).unwrap(), spec.b);
        assert_eq!(explicit_term(&spec, 0).unwrap(), spec.a);
        let v = preset(Preset::V { s: RingScalar::int(3), t: RingScalar::int(-5) });
        assert_eq!(explicit_term(&v, 2).unwrap(), RingScalar::int(9 - 10));
        let zero_s = HoradamSpec::from_ints(1, 1, 0, 1);
        assert!(matches!(explicit_term(&zero_s, 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn ogf_examples() {
        let x = || Poly::x();
        let fib_gf = RingScalar::ratio(x(), Poly::from_i64s(&[1, -1, -1])).unwrap();
        assert_eq!(ogf(&fib()).unwrap(), fib_gf);
        let lucas_gf = RingScalar::ratio(Poly::from_i64s(&[2, -1]), Poly::from_i64s(&[1, -1, -1])).unwrap();
        assert_eq!(ogf(&preset(Preset::LucasNumbers)).unwrap(), lucas_gf);
        let geo = RingScalar::ratio(Poly::one(), Poly::from_i64s(&[1, -2])).unwrap();
        assert_eq!(ogf(&HoradamSpec::from_ints(1, 2, 2, 0)).unwrap(), geo);
        let poly_spec = preset(Preset::CiglerQFib { t: RingScalar::one() });
        assert!(matches!(ogf(&poly_spec), Err(Error::Unsupported(_))));
    }

    #[test]
    fn series_verify_examples() {
        let r = series_verify(&fib(), 20).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.records_for("ogf_coefficient").count(), 21);
        assert_eq!(r.records_for("egf_coefficient").next().unwrap().status, Status::Skipped);

        let r = series_verify(&HoradamSpec::from_ints(0, 1, 3, -2), 15).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.records_for("egf_coefficient").count(), 16);
        assert!(r.records_for("egf_coefficient").all(|c| c.status == Status::Pass));

        let r = series_verify(&fib(), 0).unwrap();
        assert_eq!(r.records_for("ogf_coefficient").count(), 1);
    }

    #[test]
    fn addition_examples() {
        let audit = addition_check(&fib(), 2, 3);
        assert_eq!(audit.u_form, (RingScalar::int(10), RingScalar::int(10)));
        assert_eq!(audit.v_corrected, (RingScalar::int(22), RingScalar::int(22)));
        assert_eq!(audit.v_literal, (RingScalar::int(22), RingScalar::int(14)));
        assert!(audit.report(false).all_passed());
        let strict = audit.report(true);
        assert!(!strict.all_passed());
        assert_eq!(strict.failures().next().unwrap().check, "addition_v_literal");
    }

    #[test]
    fn cigler_presets() {
        let qf = preset(Preset::CiglerQFib { t: RingScalar::one() });
        assert_eq!(qf, HoradamSpec::new(RingScalar::zero(), RingScalar::one(), RingScalar::x(), RingScalar::one()));
        let ql = preset(Preset::CiglerQLucas { t: RingScalar::one() });
        // L_2 = x^2 + 2
        assert_eq!(term(&ql, 2), RingScalar::from_poly(Poly::from_i64s(&[2, 0, 1])));
    }

    #[test]
    fn spec_json_shape() {
        let spec = preset(Preset::CiglerQLucas { t: RingScalar::one() });
        assert_eq!(spec.canonical_json(), r#"{"a":"2","b":["0","1"],"s":["0","1"],"t":"1"}"#);
        let back: HoradamSpec = serde_json::from_str(&spec.canonical_json()).unwrap();
        assert_eq!(back, spec);
    }
}
