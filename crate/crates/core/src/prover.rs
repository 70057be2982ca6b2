//! Certified large monochromatic triple stars.
//!
//! Let `U` be a maximum monochromatic double star, colour `c`, centres
//! `x, y`, and let `B` be the target bound (`n/(r-1)` for `r`-colourings,
//! `rn/(r²-r+1)` for local `r`-colourings).
//!
//! If `|U| ≥ ⌈B⌉`, `U` itself is the witness. Otherwise write `|U| = B - a`
//! with `a > 0`. Were every `u ∈ U` to send fewer than `a` colour-`c` edges
//! out of `U`, the cross graph between `U` and its complement (all edges not
//! of colour `c`) would contain a monochromatic double star larger than `U`,
//! contradicting maximality. The centres send none, so some leaf `u` sends at
//! least `a`, and `U ∪ N_c(u)` is a triple star on at least `B` vertices.
//!
//! The cross-graph step never runs here: with `U` an exact maximum, that branch
//! is impossible, so a single pass suffices. The argument is exercised by the
//! invariant tests instead.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset;
use crate::bounds::{global_triple_star_bound, local_triple_star_bound};
use crate::colouring::{Colour, ColourClassView, EdgeColouring};
use crate::rational::{ceil_order, int, Fraction, Rational};
use crate::stars::{max_double_star, union_vertices, DoubleStar};
use crate::structure::{locality, subgraph_diameter};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Global,
    Local,
}

impl Mode {
    pub fn bound(self, n: usize, r: usize) -> Rational {
        match self {
            Mode::Global => global_triple_star_bound(n, r),
            Mode::Local => local_triple_star_bound(n, r),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    #[serde(rename = "centres_U")]
    pub centres_u: [usize; 2],
    #[serde(rename = "order_U")]
    pub order_u: usize,
    /// The leaf of `U` whose outward edges extend it, when an extension was needed.
    pub leaf_u: Option<usize>,
    /// Outward same-colour degree of `leaf_u`.
    pub delta: Option<usize>,
}

/// Field order is the canonical serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleStarCertificate {
    pub format_version: u32,
    pub mode: Mode,
    pub n: usize,
    pub r: usize,
    pub bound: Fraction,
    pub colour: Colour,
    /// `[outer, middle, outer]`, or `[x, y]` for a degenerate single-edge witness.
    pub centres: Vec<usize>,
    pub vertices: Vec<usize>,
    pub order: usize,
    pub degenerate: bool,
    pub trace: Trace,
}

impl TripleStarCertificate {
    /// `a = bound - |U|` from the trace.
    pub fn slack(&self) -> Option<Rational> {
        Some(self.bound.to_rational()? - int(self.trace.order_u))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, Error)]
pub enum ProveError {
    #[error("theorem requires r ≥ 3 (got r = {0})")]
    RequiresThreeColours(usize),
    #[error("colouring uses {used} colours, more than r = {r}")]
    TooManyColours { used: usize, r: usize },
    #[error("vertex {vertex} sees {seen} colours, exceeding locality r = {r}")]
    LocalityViolated { vertex: usize, seen: usize, r: usize },
    #[error("theorem violation: best witness has order {order} < {target}\n{}", .colouring.to_text())]
    TheoremViolation { order: usize, target: usize, colouring: Box<EdgeColouring> },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// Triple star on at least `n/(r-1)` vertices in an `r`-colouring, `r ≥ 3`.
pub fn prove_global(view: &ColourClassView<'_>, r: usize) -> Result<TripleStarCertificate, ProveError> {
    if r < 3 {
        return Err(ProveError::RequiresThreeColours(r));
    }
    let used = view.colouring().colours_used();
    if used > r {
        return Err(ProveError::TooManyColours { used, r });
    }
    prove(view, Mode::Global, r)
}

/// Triple star on at least `rn/(r²-r+1)` vertices in a local `r`-colouring, `r ≥ 3`.
pub fn prove_local(view: &ColourClassView<'_>, r: usize) -> Result<TripleStarCertificate, ProveError> {
    if r < 3 {
        return Err(ProveError::RequiresThreeColours(r));
    }
    let report = locality(view.colouring());
    if let Some(vertex) = report.first_excess(r) {
        return Err(ProveError::LocalityViolated { vertex, seen: report.incident[vertex].len(), r });
    }
    prove(view, Mode::Local, r)
}

fn outward_degree(view: &ColourClassView<'_>, c: Colour, v: usize, inside: &[u64]) -> usize {
    bitset::difference_count(view.neighbours(c, v), inside)
}

fn prove(view: &ColourClassView<'_>, mode: Mode, r: usize) -> Result<TripleStarCertificate, ProveError> {
    let n = view.n();
    let bound = mode.bound(n, r);
    let target = ceil_order(&bound);
    let star = max_double_star(view);
    let c = star.colour;
    let (x, y) = star.centres;
    let trace_of = |leaf: Option<usize>, delta: Option<usize>| Trace {
        centres_u: [x, y],
        order_u: star.order(),
        leaf_u: leaf,
        delta,
    };
    let certificate =
        |centres: Vec<usize>, vertices: Vec<usize>, degenerate: bool, trace: Trace| TripleStarCertificate {
            format_version: FORMAT_VERSION,
            mode,
            n,
            r,
            bound: bound.into(),
            colour: c,
            centres,
            order: vertices.len(),
            vertices,
            degenerate,
            trace,
        };

    if star.order() >= target {
        if star.order() == 2 {
            return Ok(certificate(vec![x, y], vec![x, y], true, trace_of(None, None)));
        }
        let centres = reinterpret(view, &star);
        return Ok(certificate(centres.to_vec(), star.vertices.clone(), false, trace_of(None, None)));
    }

    let mut inside = vec![0u64; view.words()];
    for &v in &star.vertices {
        bitset::insert(&mut inside, v);
    }
    for centre in [x, y] {
        if outward_degree(view, c, centre, &inside) != 0 {
            return Err(ProveError::Inconsistent(format!(
                "centre {centre} has colour-{c} neighbours outside its own double star"
            )));
        }
    }
    let best_leaf = star
        .leaves()
        .map(|u| (outward_degree(view, c, u, &inside), u))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let Some((delta, u)) = best_leaf else {
        return Err(ProveError::TheoremViolation {
            order: star.order(),
            target,
            colouring: Box::new(view.colouring().clone()),
        });
    };
    let attach = if bitset::contains(view.neighbours(c, x), u) { x } else { y };
    let other = if attach == x { y } else { x };
    // Maximality of U: the double star on {attach, u} already contains
    // N_c(attach) plus u's outward neighbours, so their count is capped.
    if view.degree(c, attach) + delta > star.order() {
        return Err(ProveError::Inconsistent(format!("double star on ({attach}, {u}) beats the maximum double star")));
    }
    let order = star.order() + delta;
    if order < target {
        return Err(ProveError::TheoremViolation { order, target, colouring: Box::new(view.colouring().clone()) });
    }
    let centres = [other, attach, u];
    let vertices = union_vertices(view, c, &centres);
    debug_assert_eq!(vertices.len(), order);
    Ok(certificate(centres.to_vec(), vertices, false, trace_of(Some(u), Some(delta))))
}

/// Centres `(outer, middle, z)` exhibiting a double star of order ≥ 3 as a
/// triple star with an empty third arm; `z` is the smallest leaf.
fn reinterpret(view: &ColourClassView<'_>, star: &DoubleStar) -> [usize; 3] {
    let (x, y) = star.centres;
    let z = star.leaves().next().expect("order ≥ 3 has a leaf");
    if bitset::contains(view.neighbours(star.colour, x), z) {
        [y, x, z]
    } else {
        [x, y, z]
    }
}

/// Why a certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RejectReason {
    #[error("unsupported format version {0}")]
    FormatVersion(u32),
    #[error("certificate is for n = {cert}, colouring has n = {actual}")]
    VertexCountMismatch { cert: usize, actual: usize },
    #[error("theorem requires r ≥ 3 (certificate has r = {0})")]
    RequiresThreeColours(usize),
    #[error("bound mismatch: expected {expected:?}, certificate states {stated:?}")]
    BoundMismatch { expected: Fraction, stated: Fraction },
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("colour {0} out of range")]
    ColourOutOfRange(Colour),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("vertex list is not strictly increasing")]
    UnsortedVertices,
    #[error("stated order {stated} differs from vertex count {counted}")]
    OrderMismatch { stated: usize, counted: usize },
    #[error("malformed centres: {0}")]
    MalformedCentres(String),
    #[error("centre {0} missing from vertex set")]
    CentreNotInVertexSet(usize),
    #[error("edge colour mismatch: edge {{{0},{1}}} is not colour {2}")]
    EdgeColourMismatch(usize, usize, Colour),
    #[error("order below bound: {order} < {target}")]
    OrderBelowBound { order: usize, target: usize },
    #[error("witness diameter {0:?} exceeds 4")]
    DiameterTooLarge(Option<usize>),
}

/// Re-checks a certificate against the colouring from scratch; the trace is
/// never consulted.
pub fn verify_certificate(colouring: &EdgeColouring, cert: &TripleStarCertificate) -> Result<(), RejectReason> {
    let n = colouring.n();
    if cert.format_version != FORMAT_VERSION {
        return Err(RejectReason::FormatVersion(cert.format_version));
    }
    if cert.n != n {
        return Err(RejectReason::VertexCountMismatch { cert: cert.n, actual: n });
    }
    if cert.r < 3 {
        return Err(RejectReason::RequiresThreeColours(cert.r));
    }
    let bound = cert.mode.bound(n, cert.r);
    if cert.bound.to_rational() != Some(bound) || !cert.bound.is_reduced() {
        return Err(RejectReason::BoundMismatch { expected: bound.into(), stated: cert.bound });
    }
    match cert.mode {
        Mode::Global => {
            let used = colouring.colours_used();
            if used > cert.r {
                return Err(RejectReason::Hypothesis(format!(
                    "colouring uses {used} colours, more than r = {}",
                    cert.r
                )));
            }
        }
        Mode::Local => {
            let report = locality(colouring);
            if let Some(v) = report.first_excess(cert.r) {
                return Err(RejectReason::Hypothesis(format!(
                    "vertex {v} sees {} colours, locality r = {}",
                    report.incident[v].len(),
                    cert.r
                )));
            }
        }
    }
    let c = cert.colour;
    if c == 0 || c as usize > colouring.m() {
        return Err(RejectReason::ColourOutOfRange(c));
    }
    if let Some(&v) = cert.vertices.iter().find(|&&v| v >= n) {
        return Err(RejectReason::VertexOutOfRange(v));
    }
    if cert.vertices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(RejectReason::UnsortedVertices);
    }
    if cert.order != cert.vertices.len() {
        return Err(RejectReason::OrderMismatch { stated: cert.order, counted: cert.vertices.len() });
    }

    let centres = &cert.centres;
    match (centres.len(), cert.degenerate) {
        (3, false) | (2, true) => {}
        (len, deg) => return Err(RejectReason::MalformedCentres(format!("{len} centres with degenerate = {deg}"))),
    }
    for (i, &v) in centres.iter().enumerate() {
        if v >= n {
            return Err(RejectReason::VertexOutOfRange(v));
        }
        if centres[..i].contains(&v) {
            return Err(RejectReason::MalformedCentres(format!("centre {v} repeated")));
        }
        if cert.vertices.binary_search(&v).is_err() {
            return Err(RejectReason::CentreNotInVertexSet(v));
        }
    }
    // Centre path: consecutive centres joined in colour c.
    for pair in centres.windows(2) {
        if colouring.colour(pair[0], pair[1]) != c {
            return Err(RejectReason::EdgeColourMismatch(pair[0].min(pair[1]), pair[0].max(pair[1]), c));
        }
    }
    if cert.degenerate && cert.vertices.len() != 2 {
        return Err(RejectReason::MalformedCentres("degenerate witness must be a single edge".into()));
    }
    // Every other vertex hangs off some centre by a colour-c edge.
    for &v in &cert.vertices {
        if centres.contains(&v) {
            continue;
        }
        if !centres.iter().any(|&z| colouring.colour(z, v) == c) {
            let z = centres[0];
            return Err(RejectReason::EdgeColourMismatch(z.min(v), z.max(v), c));
        }
    }

    let target = ceil_order(&bound);
    if cert.vertices.len() < target {
        return Err(RejectReason::OrderBelowBound { order: cert.vertices.len(), target });
    }
    let diameter =
        subgraph_diameter(colouring, c as usize, &cert.vertices).map_err(|_| RejectReason::DiameterTooLarge(None))?;
    if diameter.is_none_or(|d| d > 4) {
        return Err(RejectReason::DiameterTooLarge(diameter));
    }
    Ok(())
}
