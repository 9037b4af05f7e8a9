//! A registry of series and product identities, each rebuilt as two exact
//! expansions and compared coefficient by coefficient.
//!
//! Every entry produces one or more `(lhs, rhs)` pairs at a requested order.
//! Sequence identities are encoded as series whose q^n coefficient is the
//! n-th term, so both kinds share one comparison. The reported window is the
//! intersection of all pairs' windows.

mod cubic;
mod lambert;
mod products;
mod quadratic;

use crate::arith::seq::{character, ArithSeq};
use crate::rational::{parse_rational, rat, rational_json, Rational};
use crate::series::{exp_series, product_expand, LaurentSeries, SeriesError};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

pub type IdentityResult<T> = Result<T, IdentityError>;

impl From<SeriesError> for IdentityError {
    fn from(e: SeriesError) -> Self {
        IdentityError::BadParams(format!("series construction failed: {e}"))
    }
}

fn bad<T>(msg: impl Into<String>) -> IdentityResult<T> {
    Err(IdentityError::BadParams(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    SeriesEq,
    SeqEq,
}

/// How the pairs of an entry combine: all must agree, or at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    All,
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParamValue {
    Int(i64),
    Rat(Rational),
    Text(String),
}

impl ParamValue {
    fn parse(s: &str) -> ParamValue {
        if let Ok(n) = s.parse::<i64>() {
            ParamValue::Int(n)
        } else if let Some(r) = parse_rational(s).filter(|_| s.contains('/')) {
            ParamValue::Rat(r)
        } else {
            ParamValue::Text(s.to_string())
        }
    }

    fn to_json(&self) -> Value {
        match self {
            ParamValue::Int(n) => json!(n),
            other => json!(other.to_string()),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Rat(r) => write!(f, "{}", crate::rational::fmt_rational(r)),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

/// Resolved parameters of one check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub fn iter(&self) -> impl Iterator<Item = (&String, &ParamValue)> {
        self.0.iter()
    }

    fn get(&self, name: &str) -> IdentityResult<&ParamValue> {
        self.0.get(name).ok_or_else(|| IdentityError::BadParams(format!("missing parameter {name}")))
    }

    pub fn int(&self, name: &str) -> IdentityResult<i64> {
        match self.get(name)? {
            ParamValue::Int(n) => Ok(*n),
            v => bad(format!("{name}={v} is not an integer")),
        }
    }

    pub fn rational(&self, name: &str) -> IdentityResult<Rational> {
        match self.get(name)? {
            ParamValue::Int(n) => Ok(rat(*n)),
            ParamValue::Rat(r) => Ok(r.clone()),
            v => bad(format!("{name}={v} is not a rational")),
        }
    }

    pub fn text(&self, name: &str) -> IdentityResult<String> {
        Ok(self.get(name)?.to_string())
    }

    pub fn chi(&self, name: &str) -> IdentityResult<ArithSeq> {
        let id = self.text(name)?;
        character(&id).map_err(|e| IdentityError::BadParams(e.to_string()))
    }

    /// An integer parameter restricted to `lo..=hi`.
    pub fn int_in(&self, name: &str, lo: i64, hi: i64) -> IdentityResult<i64> {
        let v = self.int(name)?;
        if v < lo || v > hi {
            return bad(format!("{name}={v} must lie in {lo}..={hi}"));
        }
        Ok(v)
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.0.iter().map(|(k, v)| (k.clone(), v.to_json())).collect())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// One side-by-side comparison inside an entry.
pub struct Pair {
    pub label: String,
    pub lhs: LaurentSeries,
    pub rhs: LaurentSeries,
}

fn pair(label: impl Into<String>, lhs: LaurentSeries, rhs: LaurentSeries) -> Pair {
    Pair { label: label.into(), lhs, rhs }
}

/// What a builder returns: the pairs plus any reported quantities.
#[derive(Default)]
pub struct Built {
    pub pairs: Vec<Pair>,
    pub notes: Vec<(String, String)>,
}

impl Built {
    fn new(pairs: Vec<Pair>) -> Self {
        Built { pairs, notes: Vec::new() }
    }

    fn note(mut self, key: &str, value: impl ToString) -> Self {
        self.notes.push((key.to_string(), value.to_string()));
        self
    }
}

type Builder = fn(&Params, i64) -> IdentityResult<Built>;

/// A registered identity.
pub struct Entry {
    pub id: &'static str,
    pub kind: Kind,
    pub statement: &'static str,
    pub default_order: i64,
    pub defaults: &'static [(&'static str, &'static str)],
    /// Parameter overrides run by the suite; empty means the defaults once.
    pub instances: &'static [Overrides],
    /// Registered but not part of the suite.
    pub experimental: bool,
    /// Expected to fail; excluded from the suite.
    pub negative_control: bool,
    pub mode: Mode,
    build: Builder,
}

type Overrides = &'static [(&'static str, &'static str)];

impl Entry {
    fn new(id: &'static str, statement: &'static str, default_order: i64, build: Builder) -> Entry {
        Entry {
            id,
            kind: Kind::SeriesEq,
            statement,
            default_order,
            defaults: &[],
            instances: &[],
            experimental: false,
            negative_control: false,
            mode: Mode::All,
            build,
        }
    }

    fn seq_eq(mut self) -> Self {
        self.kind = Kind::SeqEq;
        self
    }

    fn defaults(mut self, d: Overrides) -> Self {
        self.defaults = d;
        self
    }

    fn instances(mut self, i: &'static [Overrides]) -> Self {
        self.instances = i;
        self
    }

    fn experimental(mut self) -> Self {
        self.experimental = true;
        self.mode = Mode::Any;
        self
    }

    fn negative_control(mut self) -> Self {
        self.negative_control = true;
        self
    }

    fn resolve(&self, overrides: &[(String, String)]) -> IdentityResult<Params> {
        let mut map: BTreeMap<String, ParamValue> =
            self.defaults.iter().map(|&(k, v)| (k.to_string(), ParamValue::parse(v))).collect();
        for (k, v) in overrides {
            if !map.contains_key(k) {
                let known: Vec<&str> = self.defaults.iter().map(|&(k, _)| k).collect();
                return bad(format!("{} takes no parameter {k:?} (known: {})", self.id, known.join(", ")));
            }
            map.insert(k.clone(), ParamValue::parse(v));
        }
        Ok(Params(map))
    }

    fn suite_instances(&self) -> Vec<Vec<(String, String)>> {
        if self.instances.is_empty() {
            return vec![Vec::new()];
        }
        self.instances
            .iter()
            .map(|inst| inst.iter().map(|&(k, v)| (k.to_string(), v.to_string())).collect())
            .collect()
    }
}

/// All registered entries, sorted by id.
pub fn catalog() -> &'static [Entry] {
    static CATALOG: OnceLock<Vec<Entry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut all: Vec<Entry> = Vec::new();
        all.extend(cubic::entries());
        all.extend(quadratic::entries());
        all.extend(products::entries());
        all.extend(lambert::entries());
        all.sort_by_key(|e| e.id);
        all
    })
}

pub fn lookup(id: &str) -> IdentityResult<&'static Entry> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstDiff {
    pub exp: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub order: i64,
    pub window: (i64, i64),
    pub equal: bool,
    pub first_diff: Option<FirstDiff>,
    pub notes: Vec<(String, String)>,
}

impl IdentityReport {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("id".into(), json!(self.id));
        m.insert("params".into(), self.params.to_json());
        m.insert("order".into(), json!(self.order));
        m.insert("window".into(), json!([self.window.0, self.window.1]));
        m.insert("equal".into(), json!(self.equal));
        m.insert(
            "first_diff".into(),
            match &self.first_diff {
                None => Value::Null,
                Some(d) => json!({"exp": d.exp, "lhs": rational_json(&d.lhs), "rhs": rational_json(&d.rhs)}),
            },
        );
        if !self.notes.is_empty() {
            let notes: Map<String, Value> = self.notes.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            m.insert("notes".into(), Value::Object(notes));
        }
        Value::Object(m)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.equal { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.id)?;
        if !self.params.0.is_empty() {
            write!(f, " [{}]", self.params)?;
        }
        write!(f, " order={} window=[{},{})", self.order, self.window.0, self.window.1)?;
        if let Some(d) = &self.first_diff {
            write!(
                f,
                " first_diff: q^{} lhs={} rhs={}",
                d.exp,
                crate::rational::fmt_rational(&d.lhs),
                crate::rational::fmt_rational(&d.rhs)
            )?;
        }
        for (k, v) in &self.notes {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

fn window_of(p: &Pair) -> Option<(i64, i64)> {
    let lo = |s: &LaurentSeries| s.known_low().unwrap_or(i64::MIN);
    let lo = match (p.lhs.is_exact_below(), p.rhs.is_exact_below()) {
        (true, true) => p.lhs.offset().min(p.rhs.offset()),
        _ => lo(&p.lhs).max(lo(&p.rhs)),
    };
    let hi = p.lhs.prec().min(p.rhs.prec());
    (lo < hi).then_some((lo, hi))
}

fn first_diff_in(p: &Pair, lo: i64, hi: i64) -> Option<FirstDiff> {
    (lo..hi).find_map(|e| {
        let (a, b) = (p.lhs.coeff(e).ok()?, p.rhs.coeff(e).ok()?);
        (a != b).then_some(FirstDiff { exp: e, lhs: a, rhs: b })
    })
}

fn intersect(pairs: &[Pair]) -> IdentityResult<(i64, i64)> {
    let mut lo = i64::MIN;
    let mut hi = i64::MAX;
    for p in pairs {
        let (a, b) = window_of(p).ok_or_else(|| IdentityError::BadParams(format!("{}: empty window", p.label)))?;
        lo = lo.max(a);
        hi = hi.min(b);
    }
    if lo >= hi {
        return bad("the pairs share no common window; raise the order");
    }
    Ok((lo, hi))
}

fn compare_built(entry: &Entry, params: Params, order: i64, built: Built) -> IdentityResult<IdentityReport> {
    let Built { pairs, mut notes } = built;
    if pairs.is_empty() {
        return bad("nothing to compare");
    }
    let report = |window, first_diff: Option<FirstDiff>, notes| IdentityReport {
        id: entry.id.to_string(),
        params: params.clone(),
        order,
        window,
        equal: first_diff.is_none(),
        first_diff,
        notes,
    };
    match entry.mode {
        Mode::All => {
            let (lo, hi) = intersect(&pairs)?;
            let diff = pairs.iter().filter_map(|p| first_diff_in(p, lo, hi)).min_by_key(|d| d.exp);
            Ok(report((lo, hi), diff, notes))
        }
        Mode::Any => {
            let mut best: Option<((i64, i64), FirstDiff)> = None;
            for p in &pairs {
                let (lo, hi) = window_of(p).ok_or_else(|| IdentityError::BadParams(format!("{}: empty window", p.label)))?;
                match first_diff_in(p, lo, hi) {
                    None => {
                        notes.push(("matching".into(), p.label.clone()));
                        return Ok(report((lo, hi), None, notes));
                    }
                    Some(d) => {
                        if best.as_ref().map_or(true, |(_, b)| d.exp > b.exp) {
                            best = Some(((lo, hi), d));
                        }
                    }
                }
            }
            notes.push(("matching".into(), "none".into()));
            let (window, d) = best.expect("at least one pair");
            Ok(report(window, Some(d), notes))
        }
    }
}

fn check_order(order: i64) -> IdentityResult<()> {
    if order < 2 {
        return bad(format!("order must be at least 2, got {order}"));
    }
    Ok(())
}

/// Builds and compares entry `id` with `params` overriding its defaults.
pub fn verify(id: &str, params: &[(String, String)], order: Option<i64>) -> IdentityResult<IdentityReport> {
    let entry = lookup(id)?;
    let params = entry.resolve(params)?;
    let order = order.unwrap_or(entry.default_order);
    check_order(order)?;
    let built = (entry.build)(&params, order)?;
    compare_built(entry, params, order, built)
}

/// Outcome of a deliberately perturbed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationOutcome {
    pub report: IdentityReport,
    /// Exponent whose right-hand coefficient was changed by +1.
    pub mutated_at: i64,
}

impl MutationOutcome {
    /// The perturbation was detected exactly where it was made.
    pub fn detected(&self) -> bool {
        !self.report.equal && self.report.first_diff.as_ref().map(|d| d.exp) == Some(self.mutated_at)
    }
}

/// Like [`verify`], but adds 1 to the right side of the first pair at the
/// middle of the common window.
pub fn verify_mutated(id: &str, params: &[(String, String)], order: Option<i64>) -> IdentityResult<MutationOutcome> {
    let entry = lookup(id)?;
    let params = entry.resolve(params)?;
    let order = order.unwrap_or(entry.default_order);
    check_order(order)?;
    let mut built = (entry.build)(&params, order)?;
    let (lo, hi) = match entry.mode {
        Mode::All => intersect(&built.pairs)?,
        Mode::Any => window_of(&built.pairs[0]).ok_or_else(|| IdentityError::BadParams("empty window".into()))?,
    };
    let at = lo + (hi - lo) / 2;
    let first = &mut built.pairs[0];
    let old = first.rhs.coeff(at)?;
    first.rhs = first.rhs.with_coeff(at, old + Rational::one())?;
    if entry.mode == Mode::Any {
        built.pairs.truncate(1);
    }
    Ok(MutationOutcome { report: compare_built(entry, params, order, built)?, mutated_at: at })
}

/// Every (id, parameter override) pair the suite runs, in id order.
pub fn suite_jobs(filter: Option<&str>) -> Vec<(&'static str, Vec<(String, String)>)> {
    catalog()
        .iter()
        .filter(|e| !e.experimental && !e.negative_control)
        .filter(|e| filter.map_or(true, |f| e.id.starts_with(f)))
        .flat_map(|e| e.suite_instances().into_iter().map(move |inst| (e.id, inst)))
        .collect()
}

/// Runs every non-experimental, non-control entry whose id starts with
/// `filter`, each instance at `order` or its own default.
pub fn run_suite(filter: Option<&str>, order: Option<i64>) -> Vec<IdentityReport> {
    suite_jobs(filter)
        .into_par_iter()
        .map(|(id, inst)| {
            verify(id, &inst, order).unwrap_or_else(|e| failed_report(id, &inst, order, e))
        })
        .collect()
}

fn failed_report(id: &str, inst: &[(String, String)], order: Option<i64>, e: IdentityError) -> IdentityReport {
    let entry = lookup(id).expect("suite ids are registered");
    IdentityReport {
        id: id.to_string(),
        params: entry.resolve(inst).unwrap_or_default(),
        order: order.unwrap_or(entry.default_order),
        window: (0, 0),
        equal: false,
        first_diff: None,
        notes: vec![("error".into(), e.to_string())],
    }
}

// Shared construction helpers.

/// Coefficients f(e) for lo <= e < prec.
fn dense(lo: i64, prec: i64, f: impl FnMut(i64) -> Rational) -> IdentityResult<LaurentSeries> {
    Ok(LaurentSeries::from_fn(lo, prec.max(lo + 1), f)?)
}

/// A sequence n ↦ f(n) on 1 <= n < prec, as a series.
fn seq(prec: i64, mut f: impl FnMut(u64) -> Rational) -> IdentityResult<LaurentSeries> {
    dense(1, prec, |e| f(e as u64))
}

/// Sparse terms below `prec`; the window starts at the lowest exponent or 0.
fn sparse(prec: i64, terms: Vec<(i64, Rational)>) -> IdentityResult<LaurentSeries> {
    let lo = terms.iter().map(|&(e, _)| e).filter(|&e| e < prec).min().unwrap_or(0).min(0);
    Ok(LaurentSeries::from_terms(lo, prec, terms)?)
}

/// Σ_{n≥1} c(n) q^{f(n)} for strictly increasing f ≥ 1.
fn power_sum(prec: i64, f: impl Fn(i64) -> i64, mut c: impl FnMut(i64) -> Rational) -> IdentityResult<LaurentSeries> {
    let mut terms = Vec::new();
    let mut n = 1;
    while f(n) < prec {
        terms.push((f(n), c(n)));
        n += 1;
    }
    sparse(prec, terms)
}

fn exp_of(s: &LaurentSeries) -> IdentityResult<LaurentSeries> {
    Ok(exp_series(s)?)
}

/// ∏ (1−qⁿ)^{x(n)}.
fn product_of(prec: i64, x: impl Fn(u64) -> Rational + Send + Sync + 'static) -> LaurentSeries {
    let e = ArithSeq::new("exponent", move |n| if n < 1 { Rational::zero() } else { x(n as u64) });
    product_expand(&e, prec)
}

fn square(s: &LaurentSeries) -> IdentityResult<LaurentSeries> {
    Ok(s.mul(s)?)
}

/// Substitutes q → q^k and shifts by `shift`, keeping the window to `prec`.
fn inflate_to(s: &LaurentSeries, k: i64, shift: i64, prec: i64) -> IdentityResult<LaurentSeries> {
    Ok(crate::series::inflate(s, k).shift(shift).truncate(prec)?)
}
