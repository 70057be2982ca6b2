//! Brute-force ground truth at desk scale.
//!
//! The star finders here work straight from the definition, edge colour by
//! edge colour, and share no code with [`crate::stars`]. Enumeration walks
//! every colouring of `K_n` (optionally one per colour-relabelling class, as
//! restricted-growth strings over the edges in row-major order).

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::colouring::{edge_count, Colour, EdgeColouring};
use crate::prover::{prove_global, prove_local, verify_certificate, Mode};
use crate::rational::{ceil_order, Rational};
use crate::stars::{max_double_star, max_triple_star, DoubleStar, TripleCentres, TripleStar};
use crate::structure::{locality, max_component};

/// `DoubleStar` by definition: every colour, every edge `{x, y}` of that
/// colour, count vertices equal or joined in that colour to `x` or `y`.
pub fn brute_max_double_star(colouring: &EdgeColouring) -> DoubleStar {
    let n = colouring.n();
    let mut best: Option<(usize, Colour, usize, usize)> = None;
    for c in 1..=colouring.m() as Colour {
        for x in 0..n {
            for y in x + 1..n {
                if colouring.colour(x, y) != c {
                    continue;
                }
                let order = (0..n)
                    .filter(|&v| v == x || v == y || colouring.colour(x, v) == c || colouring.colour(y, v) == c)
                    .count();
                if best.is_none_or(|b| order > b.0) {
                    best = Some((order, c, x, y));
                }
            }
        }
    }
    let (_, c, x, y) = best.expect("n ≥ 2");
    let vertices =
        (0..n).filter(|&v| v == x || v == y || colouring.colour(x, v) == c || colouring.colour(y, v) == c).collect();
    DoubleStar { colour: c, centres: (x, y), vertices }
}

/// `TripleStar` by definition over all centre triples `(u, x, w)`, `u < w`.
pub fn brute_max_triple_star(colouring: &EdgeColouring) -> Option<TripleStar> {
    let n = colouring.n();
    let member =
        |c: Colour, centres: [usize; 3], v: usize| centres.iter().any(|&z| z == v || colouring.colour(z, v) == c);
    let mut best: Option<(usize, Colour, [usize; 3])> = None;
    for c in 1..=colouring.m() as Colour {
        for u in 0..n {
            for x in 0..n {
                if x == u || colouring.colour(x, u) != c {
                    continue;
                }
                for w in u + 1..n {
                    if w == x || colouring.colour(x, w) != c {
                        continue;
                    }
                    let centres = [u, x, w];
                    let order = (0..n).filter(|&v| member(c, centres, v)).count();
                    if best.is_none_or(|b| order > b.0) {
                        best = Some((order, c, centres));
                    }
                }
            }
        }
    }
    best.map(|(_, c, centres)| TripleStar {
        colour: c,
        centres: TripleCentres::Path(centres),
        vertices: (0..n).filter(|&v| member(c, centres, v)).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub r: usize,
    /// One colouring per colour-relabelling class.
    pub canonical: bool,
    /// Maximum number of colourings to visit.
    pub budget: u64,
    pub threads: usize,
}

impl EnumerationSpec {
    pub fn new(n: usize, r: usize) -> Self {
        EnumerationSpec { n, r, canonical: true, budget: DEFAULT_BUDGET, threads: 1 }
    }

    /// Number of colourings the enumeration visits, `None` on overflow.
    pub fn count(&self) -> Option<u128> {
        let len = edge_count(self.n);
        if self.canonical {
            restricted_growth_count(len, self.r)
        } else {
            (self.r as u128).checked_pow(len as u32)
        }
    }
}

pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Number of restricted-growth strings of length `len` over at most `r`
/// symbols, `Σ_{k ≤ r} S(len, k)`.
pub fn restricted_growth_count(len: usize, r: usize) -> Option<u128> {
    if len == 0 {
        return Some(1);
    }
    // Stirling numbers of the second kind, row by row.
    let width = r.min(len);
    let mut row = vec![0u128; width + 1];
    row[0] = 1;
    for _ in 0..len {
        let mut next = vec![0u128; width + 1];
        for k in 1..=width {
            next[k] = (k as u128).checked_mul(row[k])?.checked_add(row[k - 1])?;
        }
        row = next;
    }
    row.iter().skip(1).try_fold(0u128, |acc, &x| acc.checked_add(x))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration needs {required} colourings, budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },
    #[error("n ≥ 2 and r ≥ 1 required")]
    BadParameters,
}

/// Odometer over colour strings, incrementing from the right.
#[derive(Clone, Debug)]
struct Odometer {
    labels: Vec<Colour>,
    /// `prefix_max[i]` = max of `labels[..=i]`.
    prefix_max: Vec<Colour>,
    r: Colour,
    canonical: bool,
    /// Positions before `start` stay fixed.
    start: usize,
    done: bool,
}

impl Odometer {
    fn new(len: usize, r: usize, canonical: bool, prefix: &[Colour]) -> Self {
        let mut labels = prefix.to_vec();
        labels.resize(len, 1);
        let mut od =
            Odometer { labels, prefix_max: vec![0; len], r: r as Colour, canonical, start: prefix.len(), done: false };
        od.refresh_from(0);
        od
    }

    fn refresh_from(&mut self, i: usize) {
        let mut m = if i == 0 { 0 } else { self.prefix_max[i - 1] };
        for k in i..self.labels.len() {
            m = m.max(self.labels[k]);
            self.prefix_max[k] = m;
        }
    }

    fn limit(&self, i: usize) -> Colour {
        if self.canonical {
            let before = if i == 0 { 0 } else { self.prefix_max[i - 1] };
            self.r.min(before + 1)
        } else {
            self.r
        }
    }

    fn advance(&mut self) {
        let mut i = self.labels.len();
        while i > self.start {
            i -= 1;
            if self.labels[i] < self.limit(i) {
                self.labels[i] += 1;
                for v in &mut self.labels[i + 1..] {
                    *v = 1;
                }
                self.refresh_from(i);
                return;
            }
        }
        self.done = true;
    }
}

/// Stream of colourings described by an [`EnumerationSpec`].
pub struct Colourings {
    n: usize,
    r: usize,
    odometer: Odometer,
}

impl Iterator for Colourings {
    type Item = EdgeColouring;

    fn next(&mut self) -> Option<EdgeColouring> {
        if self.odometer.done {
            return None;
        }
        let out = EdgeColouring::from_labels_unchecked(self.n, self.r, self.odometer.labels.clone());
        self.odometer.advance();
        Some(out)
    }
}

/// Every colouring of `K_n` with labels `1..=r`, in lexicographic order of the
/// edge-colour string. Fails up front if the count exceeds the budget.
pub fn enumerate_colourings(spec: &EnumerationSpec) -> Result<Colourings, EnumerationError> {
    if spec.n < 2 || spec.r == 0 {
        return Err(EnumerationError::BadParameters);
    }
    match spec.count() {
        Some(c) if c <= spec.budget as u128 => {}
        other => {
            return Err(EnumerationError::BudgetExceeded {
                required: other.map_or("more than 2^128".into(), |c| c.to_string()),
                budget: spec.budget,
            })
        }
    }
    Ok(Colourings { n: spec.n, r: spec.r, odometer: Odometer::new(edge_count(spec.n), spec.r, spec.canonical, &[]) })
}

/// Which monochromatic maximum an exhaustive run minimizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Triple,
    Double,
    Component,
}

impl std::str::FromStr for CheckMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "triple" => Ok(CheckMode::Triple),
            "double" => Ok(CheckMode::Double),
            "component" => Ok(CheckMode::Component),
            other => Err(format!("unknown mode {other:?} (triple|double|component)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExhaustParams {
    pub spec: EnumerationSpec,
    pub mode: CheckMode,
    /// Also run the prover and verifier on every colouring.
    pub prove: bool,
    /// Restrict to local colourings with this locality and check the local bound.
    pub local: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExhaustViolation {
    pub colouring: String,
    pub reason: String,
}

/// Field order is the canonical serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExhaustReport {
    pub n: usize,
    pub r: usize,
    pub mode: CheckMode,
    pub colourings_checked: u64,
    pub minimum: Option<usize>,
    /// A colouring attaining the minimum (the lexicographically first one).
    pub witness: Option<String>,
    pub violations: Vec<ExhaustViolation>,
}

impl ExhaustReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Error)]
pub enum ExhaustError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("prove mode requires r ≥ 3 (got {0})")]
    ProveNeedsThreeColours(usize),
    #[error("budget of {budget} colourings exhausted before {required} were checked")]
    BudgetExceeded { required: String, budget: u64, partial: Box<ExhaustReport> },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// The bound every colouring must meet in `mode`, when one is asserted.
/// Double stars have no asserted floor: whether `n/(r-1)` holds for them is open.
pub fn asserted_bound(mode: CheckMode, n: usize, r: usize, local: Option<usize>) -> Option<Rational> {
    match (mode, local) {
        (CheckMode::Triple, None) if r >= 3 => Some(Mode::Global.bound(n, r)),
        (CheckMode::Triple, Some(l)) if l >= 3 => Some(Mode::Local.bound(n, l)),
        (CheckMode::Component, None) if r >= 2 => Some(Mode::Global.bound(n, r)),
        (CheckMode::Component, Some(l)) => Some(Mode::Local.bound(n, l)),
        _ => None,
    }
}

#[derive(Clone, Debug, Default)]
struct Partial {
    checked: u64,
    best: Option<(usize, Vec<Colour>)>,
    violations: Vec<(Vec<Colour>, String)>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        self.best = match (self.best, other.best) {
            (None, b) | (b, None) => b,
            (Some(a), Some(b)) => Some(if (b.0, &b.1) < (a.0, &a.1) { b } else { a }),
        };
        self.violations.extend(other.violations);
        self
    }
}

fn check_one(colouring: &EdgeColouring, params: &ExhaustParams, target: Option<usize>, acc: &mut Partial) {
    if let Some(l) = params.local {
        if !locality(colouring).is_local(l) {
            return;
        }
    }
    acc.checked += 1;
    let view = colouring.view();
    let value = match params.mode {
        // A single edge is the floor when no two-edge path exists.
        CheckMode::Triple => max_triple_star(&view).map_or(2, |t| t.order()),
        CheckMode::Double => max_double_star(&view).order(),
        CheckMode::Component => max_component(colouring).size,
    };
    if acc.best.as_ref().is_none_or(|b| value < b.0) {
        acc.best = Some((value, colouring.labels().to_vec()));
    }
    if let Some(t) = target {
        if value < t {
            acc.violations.push((colouring.labels().to_vec(), format!("maximum {value} below required {t}")));
        }
    }
    if params.prove {
        let proved = match params.local {
            None => prove_global(&view, params.spec.r),
            Some(l) => prove_local(&view, l),
        };
        match proved {
            Ok(cert) => {
                if let Err(reason) = verify_certificate(colouring, &cert) {
                    acc.violations.push((colouring.labels().to_vec(), format!("certificate rejected: {reason}")));
                }
            }
            Err(e) => acc.violations.push((colouring.labels().to_vec(), e.to_string())),
        }
    }
}

/// Checks every colouring of `K_n` (up to colour relabelling when canonical)
/// and reports the minimum of the chosen monochromatic maximum.
///
/// With `local = Some(l)` only colourings of locality at most `l` count, and
/// the local bound replaces the global one.
pub fn exhaustive_theorem_check(params: &ExhaustParams) -> Result<ExhaustReport, ExhaustError> {
    let spec = params.spec;
    if spec.n < 2 || spec.r == 0 {
        return Err(EnumerationError::BadParameters.into());
    }
    let prove_r = params.local.unwrap_or(spec.r);
    if params.prove && prove_r < 3 {
        return Err(ExhaustError::ProveNeedsThreeColours(prove_r));
    }
    let total = spec.count();
    let over_budget = total.is_none_or(|t| t > spec.budget as u128);
    let target = asserted_bound(params.mode, spec.n, spec.r, params.local).map(|b| ceil_order(&b));
    let len = edge_count(spec.n);

    let partial = if over_budget {
        // Sequential and truncated: the partial result is the budget prefix.
        let mut acc = Partial::default();
        let mut od = Odometer::new(len, spec.r, spec.canonical, &[]);
        let mut visited = 0u64;
        while !od.done && visited < spec.budget {
            let c = EdgeColouring::from_labels_unchecked(spec.n, spec.r, od.labels.clone());
            check_one(&c, params, target, &mut acc);
            visited += 1;
            od.advance();
        }
        acc
    } else {
        let prefixes = split_prefixes(len, spec.r, spec.canonical, spec.threads);
        let run = |prefix: &Vec<Colour>| {
            let mut acc = Partial::default();
            let mut od = Odometer::new(len, spec.r, spec.canonical, prefix);
            while !od.done {
                let c = EdgeColouring::from_labels_unchecked(spec.n, spec.r, od.labels.clone());
                check_one(&c, params, target, &mut acc);
                od.advance();
            }
            acc
        };
        if spec.threads > 1 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(spec.threads)
                .build()
                .map_err(|e| ExhaustError::ThreadPool(e.to_string()))?
                .install(|| prefixes.par_iter().map(run).reduce(Partial::default, Partial::merge))
        } else {
            prefixes.iter().map(run).fold(Partial::default(), Partial::merge)
        }
    };

    let mut violations = partial.violations;
    violations.sort();
    let to_text = |labels: &[Colour]| EdgeColouring::from_labels_unchecked(spec.n, spec.r, labels.to_vec()).to_text();
    let report = ExhaustReport {
        n: spec.n,
        r: spec.r,
        mode: params.mode,
        colourings_checked: partial.checked,
        minimum: partial.best.as_ref().map(|b| b.0),
        witness: partial.best.as_ref().map(|b| to_text(&b.1)),
        violations: violations
            .into_iter()
            .map(|(labels, reason)| ExhaustViolation { colouring: to_text(&labels), reason })
            .collect(),
    };
    if over_budget {
        return Err(ExhaustError::BudgetExceeded {
            required: total.map_or("more than 2^128".into(), |t| t.to_string()),
            budget: spec.budget,
            partial: Box::new(report),
        });
    }
    Ok(report)
}

/// Valid prefixes of a short length, used as independent work units.
fn split_prefixes(len: usize, r: usize, canonical: bool, threads: usize) -> Vec<Vec<Colour>> {
    if threads <= 1 || len == 0 {
        return vec![Vec::new()];
    }
    let depth = len.min(6);
    let mut out = Vec::new();
    let mut od = Odometer::new(depth, r, canonical, &[]);
    while !od.done {
        out.push(od.labels.clone());
        od.advance();
    }
    out
}
