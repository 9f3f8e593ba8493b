//! The identity registry: named, parameterized, bit-exact checks.
//!
//! Each registered identity compares two independently computed sides at
//! every point of its parameter grid. The first disagreement at a point is
//! kept as the witness, with both sides in canonical text.

mod perturb;
mod poly;
mod registry;
mod series;

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::str::FromStr;
use std::time::{Duration, Instant};

use gaussq_core::HalfInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use perturb::{Perturb, Seq};
pub use registry::registry;

use crate::AppError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scale {
    Small,
    Default,
    Large,
}

impl Scale {
    fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for Scale {
    type Err = AppError;
    fn from_str(s: &str) -> Result<Self, AppError> {
        match s {
            "small" => Ok(Scale::Small),
            "default" => Ok(Scale::Default),
            "large" => Ok(Scale::Large),
            _ => Err(AppError::Usage(format!("unknown scale {s:?} (expected small, default or large)"))),
        }
    }
}

/// How a parameter's values are chosen.
#[derive(Clone, Copy, Debug)]
pub enum Domain {
    /// `lo..=max`, with `max` per scale; `--n-max` replaces `max`.
    Range { lo: i64, max: [i64; 3] },
    /// One value per scale; `--order` replaces it.
    Order([i64; 3]),
    /// One value per scale, not affected by the generic overrides.
    Fixed([i64; 3]),
    /// An explicit list of (half-integer) values.
    List(&'static [HalfInt]),
}

#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: Domain,
}

pub type Point = BTreeMap<String, HalfInt>;

pub type CheckFn = fn(&Point, &mut Checker) -> gaussq_core::Result<()>;

#[derive(Clone, Copy)]
pub struct IdentitySpec {
    pub name: &'static str,
    /// The identity in formula form.
    pub anchor: &'static str,
    /// Tags exercised by the check.
    pub covers: &'static [&'static str],
    pub params: &'static [ParamSpec],
    pub check: CheckFn,
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec").field("name", &self.name).finish_non_exhaustive()
    }
}

/// Caller-supplied replacements for the scale defaults.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub n_max: Option<i64>,
    pub order: Option<i64>,
    /// Explicit value lists by parameter name; these win over everything.
    pub values: BTreeMap<String, Vec<HalfInt>>,
    /// Corrupt the first comparison of every point (harness self-test).
    pub mutate: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "ser_point")]
    pub point: Point,
    /// Which comparison of the check disagreed.
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub name: String,
    #[serde(serialize_with = "ser_point")]
    pub params: Point,
    pub status: Status,
    pub witness: Option<Witness>,
    #[serde(rename = "elapsed_ms", serialize_with = "ser_millis")]
    pub elapsed: Duration,
    pub note: Option<String>,
}

impl IdentityReport {
    /// `name  k=v k=v`, the stable text key of a report.
    pub fn key(&self) -> String {
        let mut s = self.name.clone();
        for (k, v) in &self.params {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }
}

fn ser_point<S: Serializer>(p: &Point, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(p.iter().map(|(k, v)| (k, v.to_string())))
}

fn ser_millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

/// Collects the comparisons made by one check at one point.
pub struct Checker {
    point: Point,
    mutate: bool,
    compared: usize,
    witness: Option<Witness>,
    skipped: Option<String>,
    note: Option<String>,
}

impl Checker {
    fn new(point: Point, mutate: bool) -> Self {
        Checker { point, mutate, compared: 0, witness: None, skipped: None, note: None }
    }

    /// Compares two sides; only the first disagreement is kept.
    pub fn eq<T>(&mut self, label: &str, lhs: &T, rhs: &T)
    where
        T: PartialEq + Display + Perturb,
    {
        if self.witness.is_some() {
            return;
        }
        let corrupted;
        let rhs = if self.mutate && self.compared == 0 {
            corrupted = rhs.perturb();
            &corrupted
        } else {
            rhs
        };
        self.compared += 1;
        if lhs != rhs {
            self.witness = Some(Witness {
                point: self.point.clone(),
                label: label.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Records a failure that has no pair of sides (e.g. an arithmetic error).
    pub fn fail(&mut self, label: &str, detail: String) {
        if self.witness.is_none() {
            self.witness = Some(Witness {
                point: self.point.clone(),
                label: label.to_string(),
                lhs: detail,
                rhs: String::new(),
            });
        }
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.skipped = Some(reason.into());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.note = Some(text.into());
    }

    fn finish(self, name: &str, elapsed: Duration) -> IdentityReport {
        let status = if self.witness.is_some() {
            Status::Fail
        } else if self.skipped.is_some() {
            Status::Skipped
        } else {
            Status::Pass
        };
        IdentityReport {
            name: name.to_string(),
            params: self.point,
            status,
            witness: self.witness,
            elapsed,
            note: self.note.or(self.skipped),
        }
    }
}

/// Typed access to a parameter point.
pub trait PointExt {
    fn half(&self, name: &str) -> gaussq_core::Result<HalfInt>;
    fn int(&self, name: &str) -> gaussq_core::Result<i64>;
    fn size(&self, name: &str) -> gaussq_core::Result<usize>;
}

fn bad_param(name: &str, what: &str) -> gaussq_core::Error {
    gaussq_core::Error::InvalidParameter(format!("parameter {name} {what}"))
}

impl PointExt for Point {
    fn half(&self, name: &str) -> gaussq_core::Result<HalfInt> {
        self.get(name).copied().ok_or_else(|| bad_param(name, "is missing"))
    }

    fn int(&self, name: &str) -> gaussq_core::Result<i64> {
        self.half(name)?.to_integer().ok_or_else(|| bad_param(name, "must be an integer"))
    }

    fn size(&self, name: &str) -> gaussq_core::Result<usize> {
        usize::try_from(self.int(name)?).map_err(|_| bad_param(name, "must be nonnegative"))
    }
}

pub fn lookup(name: &str) -> Result<&'static IdentitySpec, AppError> {
    registry()
        .iter()
        .find(|s| s.name == name || aliases(s.name).any(|a| a == name))
        .ok_or_else(|| AppError::UnknownIdentity(name.to_string()))
}

/// Shorter names accepted for `stem-a/b/c` style entries: `stem-a`, `stem-b`, ...
fn aliases(name: &'static str) -> impl Iterator<Item = String> {
    let (stem, tags) = name.rsplit_once('-').unwrap_or((name, ""));
    let tags: Vec<String> = if let Some((lo, hi)) = tags.split_once("..") {
        expand_tag_range(lo, hi)
    } else {
        tags.split('/').map(str::to_string).collect()
    };
    tags.into_iter().filter(|t| !t.is_empty()).map(move |t| format!("{stem}-{t}"))
}

fn expand_tag_range(lo: &str, hi: &str) -> Vec<String> {
    let parse = |t: &str| t.split_once('.').and_then(|(a, b)| Some((a.parse::<u32>().ok()?, b.parse::<u32>().ok()?)));
    match (parse(lo), parse(hi)) {
        (Some((sa, a)), Some((sb, b))) if sa == sb && a <= b => (a..=b).map(|i| format!("{sa}.{i}")).collect(),
        _ => vec![lo.to_string(), hi.to_string()],
    }
}

fn param_values(p: &ParamSpec, scale: Scale, ov: &Overrides) -> Vec<HalfInt> {
    if let Some(v) = ov.values.get(p.name) {
        return v.clone();
    }
    let i = scale.index();
    match p.domain {
        Domain::Range { lo, max } => {
            let hi = ov.n_max.unwrap_or(max[i]);
            (lo..=hi).map(HalfInt::int).collect()
        }
        Domain::Order(v) => vec![HalfInt::int(ov.order.unwrap_or(v[i]))],
        Domain::Fixed(v) => vec![HalfInt::int(v[i])],
        Domain::List(v) => v.to_vec(),
    }
}

/// The cartesian grid of parameter points, in lexicographic order.
pub fn points(spec: &IdentitySpec, scale: Scale, ov: &Overrides) -> Vec<Point> {
    let mut grid = vec![Point::new()];
    for p in spec.params {
        let values = param_values(p, scale, ov);
        grid = grid
            .into_iter()
            .flat_map(|pt| {
                values.iter().map(move |v| {
                    let mut next = pt.clone();
                    next.insert(p.name.to_string(), *v);
                    next
                })
            })
            .collect();
    }
    grid
}

fn run_point(spec: &IdentitySpec, point: Point, mutate: bool) -> IdentityReport {
    let start = Instant::now();
    let mut checker = Checker::new(point.clone(), mutate);
    if let Err(e) = (spec.check)(&point, &mut checker) {
        checker.fail("evaluation error", e.to_string());
    }
    checker.finish(spec.name, start.elapsed())
}

fn sort_reports(reports: &mut [IdentityReport]) {
    reports.sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));
}

/// Runs one identity over its grid; one report per point.
pub fn run(name: &str, scale: Scale, ov: &Overrides) -> Result<Vec<IdentityReport>, AppError> {
    let spec = lookup(name)?;
    let mut reports: Vec<_> = points(spec, scale, ov)
        .into_par_iter()
        .map(|p| run_point(spec, p, ov.mutate))
        .collect();
    sort_reports(&mut reports);
    Ok(reports)
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub scale: String,
    pub identities: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Names of identities with at least one failing point.
    pub failing: Vec<String>,
    pub reports: Vec<IdentityReport>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// The `n` slowest points, slowest first.
    pub fn slowest(&self, n: usize) -> Vec<&IdentityReport> {
        let mut all: Vec<_> = self.reports.iter().collect();
        all.sort_by(|a, b| b.elapsed.cmp(&a.elapsed).then_with(|| a.key().cmp(&b.key())));
        all.truncate(n);
        all
    }
}

/// Runs every registered identity. With `mutate_only = Some(name)` only that
/// identity's comparisons are corrupted.
pub fn run_all(scale: Scale, mutate_only: Option<&str>) -> Summary {
    let jobs: Vec<(&IdentitySpec, Point)> = registry()
        .iter()
        .flat_map(|s| points(s, scale, &Overrides::default()).into_iter().map(move |p| (s, p)))
        .collect();
    let mut reports: Vec<_> = jobs
        .into_par_iter()
        .map(|(s, p)| run_point(s, p, mutate_only == Some(s.name)))
        .collect();
    sort_reports(&mut reports);
    let count = |st| reports.iter().filter(|r| r.status == st).count();
    let mut failing: Vec<String> =
        reports.iter().filter(|r| r.status == Status::Fail).map(|r| r.name.clone()).collect();
    failing.dedup();
    Summary {
        scale: format!("{scale:?}").to_lowercase(),
        identities: registry().len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        failing,
        reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alias_expansion() {
        let a: Vec<_> = aliases("step-1.28..1.31").collect();
        assert_eq!(a, ["step-1.28", "step-1.29", "step-1.30", "step-1.31"]);
        let b: Vec<_> = aliases("main-1.12/1.16").collect();
        assert_eq!(b, ["main-1.12", "main-1.16"]);
        assert_eq!(lookup("main-1.16").unwrap().name, "main-1.12/1.16");
        assert!(matches!(lookup("no-such"), Err(AppError::UnknownIdentity(_))));
    }

    #[test]
    fn grid_is_cartesian_and_overridable() {
        let spec = lookup("sigma-sym-5.10").unwrap();
        let ov = Overrides { n_max: Some(3), ..Default::default() };
        let pts = points(spec, Scale::Small, &ov);
        let gammas = spec.params.iter().find(|p| p.name == "gamma").map(|p| param_values(p, Scale::Small, &ov).len()).unwrap();
        assert_eq!(pts.len(), 4 * gammas);
    }

    #[test]
    fn witness_keeps_first_disagreement() {
        let mut c = Checker::new(Point::new(), false);
        let one = gaussq_core::LaurentPoly::one();
        let two = gaussq_core::LaurentPoly::constant(2);
        c.eq("a", &one, &one);
        c.eq("b", &one, &two);
        c.eq("c", &two, &one);
        let r = c.finish("t", Duration::ZERO);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness.unwrap().label, "b");
    }

    #[test]
    fn mutation_corrupts_first_comparison_only() {
        let mut c = Checker::new(Point::new(), true);
        let one = gaussq_core::LaurentPoly::one();
        c.eq("a", &one, &one);
        let w = c.finish("t", Duration::ZERO).witness.unwrap();
        assert_eq!(w.label, "a");
        assert_eq!(w.rhs, "1*q^1");
    }
}
