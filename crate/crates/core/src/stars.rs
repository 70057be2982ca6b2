//! Exact maximum monochromatic double and triple stars.
//!
//! The order of a star with given centres is the size of the union of the
//! centres' colour neighbourhoods. In a complete graph a common neighbour of
//! two centres is counted once, so the degree sum `d_c(x) + d_c(y)` is only an
//! upper bound here (it is exact in the bipartite setting, see
//! [`crate::bipartite`]).

use serde::Serialize;
use thiserror::Error;

use crate::bitset::{self, VertexSet};
use crate::colouring::{Colour, ColourClassView};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error("centre edge {{{0},{1}}} not in colour {2}")]
    CentreEdgeNotInColour(usize, usize, Colour),
    #[error("centres must be distinct vertices, got {0} twice")]
    RepeatedCentre(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("colour {0} out of range")]
    ColourOutOfRange(usize),
}

/// Two adjacent centres of one colour and all their colour neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleStar {
    pub colour: Colour,
    /// `(x, y)` with `x < y`.
    pub centres: (usize, usize),
    /// `N_c(x) ∪ N_c(y)`, sorted.
    pub vertices: Vec<usize>,
}

impl DoubleStar {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Vertices other than the two centres.
    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        let (x, y) = self.centres;
        self.vertices.iter().copied().filter(move |&v| v != x && v != y)
    }
}

/// Centre layout of a triple star.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum TripleCentres {
    /// Outer centre, middle centre, outer centre.
    Path([usize; 3]),
    /// Degenerate witness: a single edge.
    Edge([usize; 2]),
}

impl TripleCentres {
    pub fn as_slice(&self) -> &[usize] {
        match self {
            TripleCentres::Path(p) => p,
            TripleCentres::Edge(e) => e,
        }
    }
}

/// A monochromatic tree made of a centre path plus leaves hanging off the
/// centres. The finder always returns the `Path` form with the full union of
/// neighbourhoods as vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleStar {
    pub colour: Colour,
    pub centres: TripleCentres,
    pub vertices: Vec<usize>,
}

impl TripleStar {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.centres, TripleCentres::Edge(_))
    }
}

fn check_edge(view: &ColourClassView<'_>, c: Colour, a: usize, b: usize) -> Result<(), StarError> {
    let n = view.n();
    for v in [a, b] {
        if v >= n {
            return Err(StarError::VertexOutOfRange(v));
        }
    }
    if a == b {
        return Err(StarError::RepeatedCentre(a));
    }
    if c == 0 || c as usize > view.m() {
        return Err(StarError::ColourOutOfRange(c as usize));
    }
    if view.colour(a, b) != c {
        return Err(StarError::CentreEdgeNotInColour(a.min(b), a.max(b), c));
    }
    Ok(())
}

/// `|N_c(x) ∪ N_c(y)|` for a colour-`c` edge `{x, y}`.
pub fn double_star_order(view: &ColourClassView<'_>, c: Colour, x: usize, y: usize) -> Result<usize, StarError> {
    check_edge(view, c, x, y)?;
    Ok(bitset::union_count(view.neighbours(c, x), view.neighbours(c, y)))
}

/// `|N_c(u) ∪ N_c(x) ∪ N_c(w)|` for colour-`c` edges `{x, u}` and `{x, w}`.
pub fn triple_star_order(
    view: &ColourClassView<'_>,
    c: Colour,
    u: usize,
    x: usize,
    w: usize,
) -> Result<usize, StarError> {
    check_edge(view, c, x, u)?;
    check_edge(view, c, x, w)?;
    if u == w {
        return Err(StarError::RepeatedCentre(u));
    }
    Ok(bitset::union3_count(view.neighbours(c, u), view.neighbours(c, x), view.neighbours(c, w)))
}

pub(crate) fn union_vertices(view: &ColourClassView<'_>, c: Colour, centres: &[usize]) -> Vec<usize> {
    let mut set = VertexSet::new(view.n());
    for &v in centres {
        set.union_with(view.neighbours(c, v));
    }
    set.to_vec()
}

/// Largest monochromatic double star. Ties go to the smallest colour, then the
/// lexicographically smallest centre pair.
pub fn max_double_star(view: &ColourClassView<'_>) -> DoubleStar {
    let n = view.n();
    let mut best: Option<(usize, Colour, usize, usize)> = None;
    for c in view.colours() {
        for x in 0..n {
            let nx = view.neighbours(c, x);
            for y in bitset::members(nx).filter(|&y| y > x) {
                let order = bitset::union_count(nx, view.neighbours(c, y));
                if best.is_none_or(|b| order > b.0) {
                    best = Some((order, c, x, y));
                }
            }
        }
    }
    let (_, c, x, y) = best.expect("n ≥ 2 guarantees an edge");
    DoubleStar { colour: c, centres: (x, y), vertices: union_vertices(view, c, &[x, y]) }
}

/// Largest monochromatic triple star, or `None` when no colour class contains
/// a path with two edges. Ties go to the smallest colour, then the
/// lexicographically smallest centre tuple `(u, x, w)` with `u < w`.
pub fn max_triple_star(view: &ColourClassView<'_>) -> Option<TripleStar> {
    let n = view.n();
    // (order, colour, [u, x, w])
    let mut best: Option<(usize, Colour, [usize; 3])> = None;
    let mut arms: Vec<(usize, usize)> = Vec::with_capacity(n);
    for c in view.colours() {
        for x in 0..n {
            if view.degree(c, x) < 2 {
                continue;
            }
            let nx = view.neighbours(c, x);
            let base = view.degree(c, x);
            // Each arm u contributes N_c(u) \ N_c(x) beyond the middle's
            // neighbourhood; sort by that gain so pairs can be pruned.
            arms.clear();
            arms.extend(bitset::members(nx).map(|u| (bitset::difference_count(view.neighbours(c, u), nx), u)));
            arms.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let floor = best.map_or(0, |b| b.0);
            if base + arms[0].0 + arms[1].0 < floor {
                continue;
            }
            for i in 0..arms.len() - 1 {
                let (gi, u0) = arms[i];
                let floor = best.map_or(0, |b| b.0);
                if base + gi + arms[i + 1].0 < floor {
                    break;
                }
                let nu0 = view.neighbours(c, u0);
                for &(gj, w0) in &arms[i + 1..] {
                    let floor = best.map_or(0, |b| b.0);
                    if base + gi + gj < floor {
                        break;
                    }
                    let order = bitset::union3_count(nu0, nx, view.neighbours(c, w0));
                    let key = [u0.min(w0), x, u0.max(w0)];
                    let better = match best {
                        None => true,
                        Some((o, bc, bk)) => order > o || (order == o && (c, key) < (bc, bk)),
                    };
                    if better {
                        best = Some((order, c, key));
                    }
                }
            }
        }
    }
    best.map(|(_, c, key)| TripleStar {
        colour: c,
        centres: TripleCentres::Path(key),
        vertices: union_vertices(view, c, &key),
    })
}
