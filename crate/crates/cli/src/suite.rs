//! Batch verification driven by a JSON config.

use std::path::PathBuf;

use horadam_core::binomials::{integrality_scan, BinomialTable};
use horadam_core::horadam::{addition_check, series_verify, HoradamSpec};
use horadam_core::oracles::{
    colored_bracelets, colored_tilings, errata_fibonomial, gaussian_binomial, inversion_gf, md_fibonomial,
    partitions_in_box_gf, subspace_count, zigzag_area_gf,
};
use horadam_core::recurrences::{verify_pascal, vweighted_verify, CoeffFamily};
use horadam_core::report::{CheckRecord, Report, Status};
use horadam_core::RingScalar;
use serde::{Deserialize, Serialize};

use crate::cache::{spec_hash, TriangleCache};
use crate::error::CliError;
use crate::specs::SpecDescriptor;

/// Family name for the V-weighted recurrence, run alongside the coefficient families.
pub const VWEIGHTED: &str = "v-weighted";

fn default_specs() -> Vec<SpecDescriptor> {
    vec![SpecDescriptor::Named("fibonacci".into())]
}

fn default_families() -> Vec<String> {
    CoeffFamily::NAMES.iter().map(|s| s.to_string()).chain([VWEIGHTED.to_string()]).collect()
}

fn default_max_n() -> usize {
    10
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleToggles {
    #[serde(default = "yes")]
    pub gaussian: bool,
    #[serde(default = "yes")]
    pub subspaces: bool,
    #[serde(default = "yes")]
    pub tilings: bool,
    #[serde(default = "yes")]
    pub summation: bool,
    /// The erratum sum, run as a negative control.
    #[serde(default = "yes")]
    pub errata_control: bool,
}

impl Default for OracleToggles {
    fn default() -> Self {
        Self { gaussian: true, subspaces: true, tilings: true, summation: true, errata_control: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default = "default_specs")]
    pub specs: Vec<SpecDescriptor>,
    #[serde(default = "default_families")]
    pub families: Vec<String>,
    #[serde(default = "default_max_n")]
    pub max_n: usize,
    #[serde(default)]
    pub oracles: OracleToggles,
    /// Treat the discriminant-free V addition formula as a pass/fail check.
    #[serde(default)]
    pub literal_addition_strict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cache: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            specs: default_specs(),
            families: default_families(),
            max_n: default_max_n(),
            oracles: OracleToggles::default(),
            literal_addition_strict: false,
            format: None,
            cache: None,
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let config: Self = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad suite config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_n < 1 {
            return Err(CliError::Usage("max_n must be at least 1".into()));
        }
        for f in &self.families {
            if f != VWEIGHTED && !CoeffFamily::NAMES.contains(&f.as_str()) {
                return Err(CliError::Usage(format!("unknown family {f:?}")));
            }
        }
        for spec in &self.specs {
            spec.resolve()?;
        }
        Ok(())
    }
}

fn skipped(check: &str, note: impl Into<String>) -> CheckRecord {
    CheckRecord::new(check, &[], Status::Skipped).with_note(note)
}

fn tagged(mut report: Report, tag: &str) -> Report {
    for rec in &mut report.records {
        rec.note = Some(match rec.note.take() {
            Some(n) => format!("{tag}; {n}"),
            None => tag.to_string(),
        });
    }
    report
}

/// Runs one family against one spec; inapplicable combinations are recorded as skipped.
pub fn family_report(spec: &HoradamSpec, family: &str, max_n: usize) -> Result<Report, CliError> {
    let mut report = Report::new();
    let needs_u = matches!(family, "corcino-a" | "corcino-b" | "hu-sun");
    if needs_u && !spec.is_u_type() {
        report.push(skipped(family, "family applies to sequences with a = 0, b = 1"));
        return Ok(report);
    }
    if family == VWEIGHTED {
        return Ok(vweighted_verify(&spec.s, &spec.t, max_n)?);
    }
    let built = match CoeffFamily::for_spec(family, spec) {
        Ok(f) => f,
        Err(horadam_core::Error::DegenerateRoots) => {
            report.push(skipped(family, "discriminant is zero"));
            return Ok(report);
        }
        Err(e) => return Err(e.into()),
    };
    Ok(verify_pascal(spec, &built, max_n)?)
}

fn oracle_reports(config: &SuiteConfig) -> Result<Report, CliError> {
    let mut report = Report::new();
    let toggles = &config.oracles;
    if toggles.gaussian {
        for n in 0..=8 {
            for k in 0..=n {
                let g = gaussian_binomial(n, k)?;
                let idx = [n as i64, k as i64];
                let g = RingScalar::from_poly(g);
                for (name, p) in [
                    ("oracle_box_partitions", partitions_in_box_gf(k, n - k)),
                    ("oracle_zigzag_area", zigzag_area_gf(n, k)),
                    ("oracle_inversions", inversion_gf(n, k)),
                ] {
                    report.push(CheckRecord::compare(name, &idx, &RingScalar::from_poly(p), &g));
                }
            }
        }
    }
    if toggles.subspaces {
        for q in [2u32, 3] {
            for n in 0..=4 {
                for k in 0..=n {
                    let at = RingScalar::eval_poly(&gaussian_binomial(n, k)?, &RingScalar::int(q.into()));
                    let count = RingScalar::int(subspace_count(n, k, q)? as i64);
                    report.push(CheckRecord::compare("oracle_subspaces", &[n as i64, k as i64, q.into()], &count, &at));
                }
            }
        }
    }
    if toggles.tilings {
        let top = config.max_n.min(10);
        for s in 1..=3u32 {
            for t in 1..=3u32 {
                let u = horadam_core::horadam::SequenceCache::new(HoradamSpec::from_ints(0, 1, s.into(), t.into()));
                let v = horadam_core::horadam::SequenceCache::new(HoradamSpec::from_ints(2, s.into(), s.into(), t.into()));
                for len in 0..=top {
                    let idx = [len as i64, s.into(), t.into()];
                    let tilings = RingScalar::int(colored_tilings(len, s, t) as i64);
                    report.push(CheckRecord::compare("oracle_tilings", &idx, &tilings, &u.get(len + 1)));
                    if len >= 1 {
                        let bracelets = RingScalar::int(colored_bracelets(len, s, t)? as i64);
                        report.push(CheckRecord::compare("oracle_bracelets", &idx, &bracelets, &v.get(len)));
                    }
                }
            }
        }
    }
    if toggles.summation {
        let fib = BinomialTable::build(&HoradamSpec::from_ints(0, 1, 1, 1), config.max_n)?;
        for (n, k, v) in fib.cells() {
            let md = RingScalar::from_rational(md_fibonomial(n, k).into());
            report.push(CheckRecord::compare("oracle_summation_formula", &[n as i64, k as i64], &md, v));
        }
    }
    if toggles.errata_control {
        let erratum = RingScalar::from_rational(errata_fibonomial(5, 3)?.into());
        let fibonomial = RingScalar::from_rational(md_fibonomial(5, 3).into());
        let reproduced = erratum == RingScalar::int(11) && erratum != fibonomial;
        let mut rec = CheckRecord::compare("errata_control", &[5, 3], &erratum, &fibonomial);
        rec.status = Status::from_bool(reproduced);
        report.push(rec.with_note("negative control: this sum disagrees with the fibonomial; pass means the mismatch 11 != 15 is reproduced"));
    }
    Ok(report)
}

/// Compares cached binomial cells with a fresh table and stores any missing ones.
fn cache_coherence(path: &std::path::Path, spec: &HoradamSpec, table: &BinomialTable) -> Result<Report, CliError> {
    let mut cache = TriangleCache::open(path, spec_hash("binomial", spec))?;
    let mut report = Report::new();
    let mut missing = Vec::new();
    for (n, k, v) in table.cells() {
        match cache.get(n, k) {
            Some(cached) => report.push(CheckRecord::compare("cache_coherence", &[n as i64, k as i64], cached, v)),
            None => missing.push((n, k, v.clone())),
        }
    }
    cache.append(missing)?;
    Ok(report)
}

/// Runs every configured check. The report passes iff no record failed.
pub fn run_suite(config: &SuiteConfig) -> Result<Report, CliError> {
    config.validate()?;
    let mut report = Report::new();
    for desc in &config.specs {
        let spec = desc.resolve()?;
        let tag = format!("spec {}", desc.label());

        let table = BinomialTable::build(&spec, config.max_n)?;
        report.extend(tagged(table.verify(), &tag));
        if let Some(path) = &config.cache {
            report.extend(tagged(cache_coherence(path, &spec, &table)?, &tag));
        }

        for family in &config.families {
            report.extend(tagged(family_report(&spec, family, config.max_n)?, &format!("{tag}; {family}")));
        }

        let mut extra = Report::new();
        let top = config.max_n.min(12);
        for r in 1..=top {
            for s in 1..=top {
                extra.extend(addition_check(&spec, r, s).report(config.literal_addition_strict));
            }
        }
        if spec.is_rational() {
            match series_verify(&spec, config.max_n) {
                Ok(r) => extra.extend(r),
                Err(e) => extra.push(skipped("series", e.to_string())),
            }
        } else {
            extra.push(skipped("series", "generating functions need rational parameters"));
        }
        if spec.is_u_type() && spec.s.as_integer().is_some() && spec.t.as_integer().is_some() {
            let violations = integrality_scan(&spec, config.max_n)?;
            let mut rec = CheckRecord::new("integrality", &[config.max_n as i64], Status::from_bool(violations.is_empty()));
            if let Some(v) = violations.first() {
                rec = rec.with_note(format!("{} violations, first ({}, {}) = {}", violations.len(), v.n, v.k, v.value));
            }
            extra.push(rec);
        }
        report.extend(tagged(extra, &tag));
    }
    report.extend(oracle_reports(config)?);
    Ok(report)
}
