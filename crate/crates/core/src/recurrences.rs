//! Coefficient pairs `(h1, h2)` for the Pascal-like recurrence
//! `(r+s; r, s) = h1 (r+s-1; r-1, s) + h2 (r+s-1; r, s-1)`
//! and its equivalent scalar form `F_{r+s} = h1 F_r + h2 F_s`.

use serde::{Deserialize, Serialize};

use crate::binomials::{terms, BinomialTable};
use crate::error::{Error, Result};
use crate::horadam::{exponent, BinetSpec, HoradamSpec, ScalarSequence, SequenceCache};
use crate::report::{CheckRecord, Report, Status};
use crate::ring::{QuadExtElem, RingScalar};

/// Coefficients attached to indices `(r, s)`.
///
/// Pairs built from base-field data carry the trivial discriminant 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffPair {
    pub r: usize,
    pub s: usize,
    pub h1: QuadExtElem,
    pub h2: QuadExtElem,
}

impl CoeffPair {
    pub fn base(r: usize, s: usize, h1: RingScalar, h2: RingScalar) -> Self {
        let zero = RingScalar::zero();
        Self {
            r,
            s,
            h1: QuadExtElem::embed(h1, &zero),
            h2: QuadExtElem::embed(h2, &zero),
        }
    }

    pub fn disc(&self) -> &RingScalar {
        &self.h1.disc
    }

    /// `h1 x + h2 y` with `x, y` embedded over the pair's discriminant.
    pub fn combine(&self, x: &RingScalar, y: &RingScalar) -> QuadExtElem {
        let d = self.disc();
        let a = self.h1.mul(&QuadExtElem::embed(x.clone(), d)).expect("same disc");
        let b = self.h2.mul(&QuadExtElem::embed(y.clone(), d)).expect("same disc");
        a.add(&b).expect("same disc")
    }

    /// True when `h1 F_r + h2 F_s = F_{r+s}`.
    pub fn satisfies(&self, f_r: &RingScalar, f_s: &RingScalar, f_rs: &RingScalar) -> bool {
        self.combine(f_r, f_s) == QuadExtElem::embed(f_rs.clone(), self.disc())
    }
}

/// A rule producing a coefficient pair at each `(r, s)`, without checking it.
pub trait CoeffRule {
    fn name(&self) -> String;
    fn raw_pair(&self, seq: &dyn ScalarSequence, r: usize, s: usize) -> Result<CoeffPair>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffFamily {
    /// `h1 = A p^{r+s} / H_r`, `h2 = B q^{r+s} / H_s`.
    BinetFormal(BinetSpec),
    /// The `A, B`-free solution; falls back to `BinetFormal` when `r = s`.
    Alternating(BinetSpec),
    /// `h1 = p^s`, `h2 = q^r`, for `U`-type sequences with roots `p, q`.
    CorcinoA { p: QuadExtElem, q: QuadExtElem },
    /// `h1 = q^s`, `h2 = p^r`, for `U`-type sequences with roots `p, q`.
    CorcinoB { p: QuadExtElem, q: QuadExtElem },
    /// `h1 = 1`, `h2 = (F_{r+s} - F_r) / F_s`.
    Gould,
    /// `h1 = (F_{r+s} - F_s) / F_r`, `h2 = 1`.
    GouldSym,
    /// `h1 = U_{s+1}`, `h2 = t U_{r-1}`.
    HuSun { t: RingScalar },
}

impl CoeffFamily {
    pub const NAMES: [&'static str; 7] =
        ["binet", "alternating", "corcino-a", "corcino-b", "gould", "gould-sym", "hu-sun"];

    /// Builds the family named `name` for `spec`.
    pub fn for_spec(name: &str, spec: &HoradamSpec) -> Result<Self> {
        let roots = || crate::horadam::char_roots(spec);
        Ok(match name {
            "binet" => Self::BinetFormal(crate::horadam::to_binet(spec)?),
            "alternating" => Self::Alternating(crate::horadam::to_binet(spec)?),
            "corcino-a" => {
                let (p, q) = roots()?;
                Self::CorcinoA { p, q }
            }
            "corcino-b" => {
                let (p, q) = roots()?;
                Self::CorcinoB { p, q }
            }
            "gould" => Self::Gould,
            "gould-sym" => Self::GouldSym,
            "hu-sun" => Self::HuSun { t: spec.t.clone() },
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown family {other:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }
}

fn singular(r: usize, s: usize, reason: impl Into<String>) -> Error {
    Error::SingularCoefficient { r, s, reason: reason.into() }
}

fn base_div(num: &RingScalar, den: &RingScalar, r: usize, s: usize, what: &str) -> Result<RingScalar> {
    if den.is_zero() {
        return Err(singular(r, s, format!("{what} vanishes")));
    }
    num.checked_div(den)
}

fn ext_div(num: &QuadExtElem, den: &QuadExtElem, r: usize, s: usize, what: &str) -> Result<QuadExtElem> {
    num.div(den).map_err(|e| match e {
        Error::DivisionByZero(_) => singular(r, s, format!("{what} vanishes")),
        other => other,
    })
}

fn binet_pair(binet: &BinetSpec, r: usize, s: usize) -> Result<CoeffPair> {
    let (er, es, ers) = (exponent(r)?, exponent(s)?, exponent(r + s)?);
    let h1 = ext_div(&binet.coeff_a.mul(&binet.p.pow(ers))?, &binet.term_ext(er), r, s, "H_r")?;
    let h2 = ext_div(&binet.coeff_b.mul(&binet.q.pow(ers))?, &binet.term_ext(es), r, s, "H_s")?;
    Ok(CoeffPair { r, s, h1, h2 })
}

fn alternating_pair(binet: &BinetSpec, r: usize, s: usize) -> Result<CoeffPair> {
    if r == s {
        return binet_pair(binet, r, s);
    }
    let (p, q) = (&binet.p, &binet.q);
    let pw = |x: &QuadExtElem, e: usize| -> Result<QuadExtElem> { Ok(x.pow(exponent(e)?)) };
    let cross = |a: QuadExtElem, b: QuadExtElem| a.mul(&b).expect("same disc");
    let den = cross(pw(p, r)?, pw(q, s)?).sub(&cross(pw(q, r)?, pw(p, s)?))?;
    let num1 = cross(pw(p, r + s)?, pw(q, s)?).sub(&cross(pw(q, r + s)?, pw(p, s)?))?;
    let num2 = cross(pw(p, r + s)?, pw(q, r)?).sub(&cross(pw(q, r + s)?, pw(p, r)?))?;
    let h1 = ext_div(&num1, &den, r, s, "p^r q^s - q^r p^s")?;
    let h2 = ext_div(&num2, &den.neg(), r, s, "q^r p^s - p^r q^s")?;
    Ok(CoeffPair { r, s, h1, h2 })
}

impl CoeffRule for CoeffFamily {
    fn name(&self) -> String {
        let name = match self {
            Self::BinetFormal(_) => "binet",
            Self::Alternating(_) => "alternating",
            Self::CorcinoA { .. } => "corcino-a",
            Self::CorcinoB { .. } => "corcino-b",
            Self::Gould => "gould",
            Self::GouldSym => "gould-sym",
            Self::HuSun { .. } => "hu-sun",
        };
        name.to_string()
    }

    fn raw_pair(&self, seq: &dyn ScalarSequence, r: usize, s: usize) -> Result<CoeffPair> {
        match self {
            Self::BinetFormal(b) => binet_pair(b, r, s),
            Self::Alternating(b) => alternating_pair(b, r, s),
            Self::CorcinoA { p, q } => Ok(CoeffPair { r, s, h1: p.pow(exponent(s)?), h2: q.pow(exponent(r)?) }),
            Self::CorcinoB { p, q } => Ok(CoeffPair { r, s, h1: q.pow(exponent(s)?), h2: p.pow(exponent(r)?) }),
            Self::Gould => {
                let (fr, fs, frs) = (seq.term(r)?, seq.term(s)?, seq.term(r + s)?);
                let h2 = base_div(&(&frs - &fr), &fs, r, s, "F_s")?;
                Ok(CoeffPair::base(r, s, RingScalar::one(), h2))
            }
            Self::GouldSym => {
                let (fr, fs, frs) = (seq.term(r)?, seq.term(s)?, seq.term(r + s)?);
                let h1 = base_div(&(&frs - &fs), &fr, r, s, "F_r")?;
                Ok(CoeffPair::base(r, s, h1, RingScalar::one()))
            }
            Self::HuSun { t } => {
                if r == 0 {
                    return Err(singular(r, s, "needs r >= 1"));
                }
                Ok(CoeffPair::base(r, s, seq.term(s + 1)?, t * &seq.term(r - 1)?))
            }
        }
    }
}

fn checked(rule: &dyn CoeffRule, seq: &dyn ScalarSequence, r: usize, s: usize) -> Result<CoeffPair> {
    let pair = rule.raw_pair(seq, r, s)?;
    let (fr, fs, frs) = (seq.term(r)?, seq.term(s)?, seq.term(r + s)?);
    if !pair.satisfies(&fr, &fs, &frs) {
        return Err(singular(r, s, format!("{} pair fails h1 F_r + h2 F_s = F_(r+s)", rule.name())));
    }
    Ok(pair)
}

/// `h1 = A p^{r+s} / H_r`, `h2 = B q^{r+s} / H_s`, checked against the Binet sequence.
pub fn coeffs_binet(binet: &BinetSpec, r: usize, s: usize) -> Result<CoeffPair> {
    let seq = BinetSequence(binet);
    checked(&CoeffFamily::BinetFormal(binet.clone()), &seq, r, s)
}

/// The `A, B`-independent pair solving `h1 p^r + h2 p^s = p^{r+s}` and the same with `q`.
pub fn coeffs_alternating(binet: &BinetSpec, r: usize, s: usize) -> Result<CoeffPair> {
    let seq = BinetSequence(binet);
    checked(&CoeffFamily::Alternating(binet.clone()), &seq, r, s)
}

/// The family's pair at `(r, s)` for `seq`, with the scalar identity enforced.
pub fn family_coeffs(family: &CoeffFamily, seq: &dyn ScalarSequence, r: usize, s: usize) -> Result<CoeffPair> {
    checked(family, seq, r, s)
}

struct BinetSequence<'a>(&'a BinetSpec);

impl ScalarSequence for BinetSequence<'_> {
    fn term(&self, n: usize) -> Result<RingScalar> {
        crate::horadam::binet_term(self.0, n)
    }
}

/// Checks, for every `r, s >= 1` with `r + s <= max_n`, the scalar identity,
/// the table identity (projected to the base field), and that the two agree.
///
/// Pair construction is not checked here, so a faulty rule shows up as
/// failing records rather than an error.
pub fn verify_pascal(seq: &dyn ScalarSequence, rule: &dyn CoeffRule, max_n: usize) -> Result<Report> {
    let table = BinomialTable::build(seq, max_n)?;
    let f = table.terms();
    let name = rule.name();
    let mut report = Report::new();
    for n in 2..=max_n {
        for r in 1..n {
            let s = n - r;
            let idx = [r as i64, s as i64];
            let pair = rule.raw_pair(seq, r, s)?;
            let d = pair.disc().clone();

            let scalar_lhs = pair.combine(&f[r], &f[s]);
            let scalar_rhs = QuadExtElem::embed(f[n].clone(), &d);
            let scalar_ok = scalar_lhs == scalar_rhs;
            report.push(
                CheckRecord::compare("pascal_scalar", &idx, &scalar_lhs, &scalar_rhs).with_note(name.clone()),
            );

            let cell = |k: usize| table.get(n - 1, k as i64).expect("within table");
            let table_lhs = pair.combine(&cell(r - 1), &cell(r));
            let expected = table.get(n, r as i64).expect("within table");
            let (table_ok, table_rec) = match table_lhs.project() {
                Ok(value) => {
                    (value == expected, CheckRecord::compare("pascal_table", &idx, &value, &expected))
                }
                Err(e) => (
                    false,
                    CheckRecord::compare("pascal_table", &idx, &table_lhs, &QuadExtElem::embed(expected, &d))
                        .with_note(e.to_string()),
                ),
            };
            report.push(CheckRecord { status: Status::from_bool(table_ok), ..table_rec });

            let eq = CheckRecord::new("pascal_equivalence", &idx, Status::from_bool(scalar_ok == table_ok));
            report.push(eq.with_note(format!("scalar {scalar_ok}, table {table_ok}")));
        }
    }
    Ok(report)
}

/// Checks `2 (r+s; r, s)_U = V_s (r+s-1; r-1, s)_U + V_r (r+s-1; r, s-1)_U`
/// for `r, s >= 1`, `r + s <= max_n`.
pub fn vweighted_verify(s: &RingScalar, t: &RingScalar, max_n: usize) -> Result<Report> {
    let spec = HoradamSpec::new(RingScalar::zero(), RingScalar::one(), s.clone(), t.clone());
    let table = BinomialTable::build(&spec, max_n)?;
    let v = terms(&SequenceCache::new(spec.v_companion()), max_n)?;
    let two = RingScalar::int(2);
    let mut report = Report::new();
    for n in 2..=max_n {
        for r in 1..n {
            let j = n - r;
            let cell = |k: usize| table.get(n - 1, k as i64).expect("within table");
            let lhs = &two * &table.get(n, r as i64).expect("within table");
            let rhs = &(&v[j] * &cell(r - 1)) + &(&v[r] * &cell(r));
            report.push(CheckRecord::compare("vweighted", &[r as i64, j as i64], &lhs, &rhs));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomials::fbinomial;
    use crate::horadam::{preset, to_binet, Preset};

    fn int(n: i64) -> RingScalar {
        RingScalar::int(n)
    }

    fn fib() -> HoradamSpec {
        preset(Preset::Fibonacci)
    }

    #[test]
    fn binet_pair_examples() {
        let lucas = to_binet(&preset(Preset::LucasNumbers)).unwrap();
        let pair = coeffs_binet(&lucas, 1, 1).unwrap();
        let half = RingScalar::frac(1, 2);
        let d5 = int(5);
        assert_eq!(pair.h1, QuadExtElem::new(RingScalar::frac(3, 2), half.clone(), d5.clone()));
        assert_eq!(pair.h2, QuadExtElem::new(RingScalar::frac(3, 2), -&half, d5));

        let u21 = to_binet(&HoradamSpec::from_ints(0, 1, 3, -2)).unwrap();
        let pair = coeffs_binet(&u21, 1, 1).unwrap();
        assert_eq!((pair.h1.project().unwrap(), pair.h2.project().unwrap()), (int(4), int(-1)));

        assert!(matches!(coeffs_binet(&to_binet(&fib()).unwrap(), 0, 2), Err(Error::SingularCoefficient { .. })));
    }

    #[test]
    fn alternating_examples() {
        let spec = HoradamSpec::from_ints(5, -3, 7, 2);
        let b = to_binet(&spec).unwrap();
        let pair = coeffs_alternating(&b, 2, 1).unwrap();
        assert_eq!((pair.h1.project().unwrap(), pair.h2.project().unwrap()), (int(7), int(2)));

        let pair = coeffs_alternating(&to_binet(&fib()).unwrap(), 3, 1).unwrap();
        assert_eq!((pair.h1.project().unwrap(), pair.h2.project().unwrap()), (int(2), int(-1)));

        let b = to_binet(&fib()).unwrap();
        assert_eq!(coeffs_alternating(&b, 2, 2).unwrap(), coeffs_binet(&b, 2, 2).unwrap());
    }

    #[test]
    fn alternating_ignores_initial_values() {
        let b1 = to_binet(&HoradamSpec::from_ints(0, 1, 1, 1)).unwrap();
        let b2 = to_binet(&HoradamSpec::from_ints(3, -7, 1, 1)).unwrap();
        for (r, s) in [(1, 2), (4, 1), (3, 5)] {
            assert_eq!(coeffs_alternating(&b1, r, s).unwrap(), coeffs_alternating(&b2, r, s).unwrap());
        }
    }

    #[test]
    fn named_family_examples() {
        let u21 = HoradamSpec::from_ints(0, 1, 3, -2);
        let (p, q) = (QuadExtElem::embed(int(2), &int(1)), QuadExtElem::embed(int(1), &int(1)));
        let pair = family_coeffs(&CoeffFamily::CorcinoA { p, q }, &u21, 2, 3).unwrap();
        assert_eq!(pair.h1.project().unwrap(), int(8));
        assert_eq!(pair.h2.project().unwrap(), int(1));

        let pair = family_coeffs(&CoeffFamily::HuSun { t: int(1) }, &fib(), 3, 2).unwrap();
        assert_eq!((pair.h1.alpha, pair.h2.alpha), (int(2), int(1)));

        let pair = family_coeffs(&CoeffFamily::Gould, &fib(), 2, 2).unwrap();
        assert_eq!((pair.h1.alpha.clone(), pair.h2.alpha.clone()), (int(1), int(2)));
        // (4 2)_F = 1 * (3 1)_F + 2 * (3 2)_F
        let lhs = &fbinomial(&fib(), 3, 1).unwrap() + &(&int(2) * &fbinomial(&fib(), 3, 2).unwrap());
        assert_eq!(lhs, fbinomial(&fib(), 4, 2).unwrap());
    }

    #[test]
    fn hu_sun_needs_the_t_factor() {
        let u21 = HoradamSpec::from_ints(0, 1, 3, -2);
        let pair = family_coeffs(&CoeffFamily::HuSun { t: int(-2) }, &u21, 2, 2).unwrap();
        let table = BinomialTable::build(&u21, 4).unwrap();
        let (a, b) = (table.get(3, 1).unwrap(), table.get(3, 2).unwrap());
        assert_eq!(pair.combine(&a, &b).project().unwrap(), int(35));
        let literal = &(&pair.h1.alpha * &a) + &(&u21.term(1).unwrap() * &b);
        assert_eq!(literal, int(56));
    }

    #[test]
    fn verify_pascal_examples() {
        assert!(verify_pascal(&fib(), &CoeffFamily::HuSun { t: int(1) }, 10).unwrap().all_passed());
        assert!(verify_pascal(&fib(), &CoeffFamily::Gould, 10).unwrap().all_passed());
    }

    struct OffByOne;

    impl CoeffRule for OffByOne {
        fn name(&self) -> String {
            "hu-sun+1".into()
        }
        fn raw_pair(&self, seq: &dyn ScalarSequence, r: usize, s: usize) -> Result<CoeffPair> {
            let p = CoeffFamily::HuSun { t: int(1) }.raw_pair(seq, r, s)?;
            Ok(CoeffPair::base(r, s, p.h1.alpha, &p.h2.alpha + &int(1)))
        }
    }

    #[test]
    fn mutated_rule_fails_both_identities() {
        let report = verify_pascal(&fib(), &OffByOne, 8).unwrap();
        assert!(!report.all_passed());
        assert!(report.records_for("pascal_scalar").all(|c| c.status == Status::Fail));
        assert!(report.records_for("pascal_table").all(|c| c.status == Status::Fail));
        assert!(report.records_for("pascal_equivalence").all(|c| c.status == Status::Pass));
        assert!(matches!(family_coeffs_rule(&OffByOne), Err(Error::SingularCoefficient { .. })));
    }

    fn family_coeffs_rule(rule: &dyn CoeffRule) -> Result<CoeffPair> {
        checked(rule, &fib(), 2, 3)
    }

    #[test]
    fn vweighted_examples() {
        assert!(vweighted_verify(&int(1), &int(1), 10).unwrap().all_passed());
        let r = vweighted_verify(&int(3), &int(-2), 3).unwrap();
        assert!(r.all_passed());
        let cell = r.records.iter().find(|c| c.indices == [2, 1]).unwrap();
        assert_eq!(cell.lhs, Some(serde_json::json!("14")));
    }
}
