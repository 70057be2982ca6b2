//! Bipartite double-star lemmas and the cross graph of a double star.
//!
//! For an edge `e = (a, b)` of a bipartite graph the double star centred on
//! `e` has exactly `d(a) + d(b)` vertices, because the two neighbourhoods lie
//! on opposite sides. Averaging `d(a) + d(b)` over the edges and applying
//! Cauchy–Schwarz on each side gives
//!
//! ```text
//! max_e d(a) + d(b)  ≥  (1/|A| + 1/|B|) |E|
//! ```
//!
//! and, for coloured edges where every `a ∈ A` sees at most `r` colours and
//! every `b ∈ B` at most `t`,
//!
//! ```text
//! max_e d_k(a) + d_k(b)  ≥  (1/(|A| r) + 1/(|B| t)) |E|.
//! ```

use std::collections::BTreeMap;

use thiserror::Error;

use crate::colouring::{Colour, ColourClassView, EdgeColouring};
use crate::rational::{int, rat, Rational};
use crate::stars::DoubleStar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("side sizes and colour limits must be at least 1")]
    ZeroParameter,
    #[error("graph has no edges")]
    NoEdges,
    #[error("edge ({0}, {1}) leaves the bipartition")]
    EdgeOutOfRange(usize, usize),
    #[error("edge ({0}, {1}) listed twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} on side {side} sees {seen} colours, limit {limit}")]
    ColourLimitExceeded { side: Side, vertex: usize, seen: usize, limit: usize },
    #[error("double star spans every vertex: empty complement")]
    EmptyComplement,
    #[error("vertex {0} of the double star has no colour-{1} edge inside it")]
    NoInternalEdge(usize, Colour),
    #[error("double star does not match the colouring")]
    NotADoubleStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// A bipartite graph on sides `A = 0..size_a`, `B = 0..size_b` whose edges
/// optionally carry colours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteColouredGraph {
    size_a: usize,
    size_b: usize,
    edges: Vec<(usize, usize, Option<Colour>)>,
    degree_a: Vec<usize>,
    degree_b: Vec<usize>,
    /// `d_k(v)` keyed by colour; uncoloured edges are keyed by 0.
    colour_degree_a: Vec<BTreeMap<Colour, usize>>,
    colour_degree_b: Vec<BTreeMap<Colour, usize>>,
    /// Original vertex names for graphs built from a colouring.
    labels_a: Vec<usize>,
    labels_b: Vec<usize>,
}

impl BipartiteColouredGraph {
    pub fn new(
        size_a: usize,
        size_b: usize,
        edges: Vec<(usize, usize, Option<Colour>)>,
    ) -> Result<Self, BipartiteError> {
        if size_a == 0 || size_b == 0 {
            return Err(BipartiteError::ZeroParameter);
        }
        let mut seen = std::collections::HashSet::new();
        let mut degree_a = vec![0; size_a];
        let mut degree_b = vec![0; size_b];
        let mut colour_degree_a = vec![BTreeMap::new(); size_a];
        let mut colour_degree_b = vec![BTreeMap::new(); size_b];
        for &(a, b, k) in &edges {
            if a >= size_a || b >= size_b {
                return Err(BipartiteError::EdgeOutOfRange(a, b));
            }
            if !seen.insert((a, b)) {
                return Err(BipartiteError::DuplicateEdge(a, b));
            }
            let k = k.unwrap_or(0);
            degree_a[a] += 1;
            degree_b[b] += 1;
            *colour_degree_a[a].entry(k).or_insert(0) += 1;
            *colour_degree_b[b].entry(k).or_insert(0) += 1;
        }
        Ok(BipartiteColouredGraph {
            size_a,
            size_b,
            edges,
            degree_a,
            degree_b,
            colour_degree_a,
            colour_degree_b,
            labels_a: (0..size_a).collect(),
            labels_b: (0..size_b).collect(),
        })
    }

    pub fn size_a(&self) -> usize {
        self.size_a
    }

    pub fn size_b(&self) -> usize {
        self.size_b
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, Option<Colour>)] {
        &self.edges
    }

    pub fn degree(&self, side: Side, v: usize) -> usize {
        match side {
            Side::A => self.degree_a[v],
            Side::B => self.degree_b[v],
        }
    }

    /// `d_k(v)`; `k = 0` counts uncoloured edges.
    pub fn colour_degree(&self, side: Side, v: usize, k: Colour) -> usize {
        let table = match side {
            Side::A => &self.colour_degree_a[v],
            Side::B => &self.colour_degree_b[v],
        };
        table.get(&k).copied().unwrap_or(0)
    }

    /// `|I(v)|`, the number of distinct colours at `v`.
    pub fn colours_at(&self, side: Side, v: usize) -> usize {
        match side {
            Side::A => self.colour_degree_a[v].len(),
            Side::B => self.colour_degree_b[v].len(),
        }
    }

    /// Largest `|I(v)|` over one side.
    pub fn max_colours(&self, side: Side) -> usize {
        let size = match side {
            Side::A => self.size_a,
            Side::B => self.size_b,
        };
        (0..size).map(|v| self.colours_at(side, v)).max().unwrap_or(0)
    }

    /// Original vertex name of a side-local index.
    pub fn label(&self, side: Side, v: usize) -> usize {
        match side {
            Side::A => self.labels_a[v],
            Side::B => self.labels_b[v],
        }
    }
}

/// `(1/|A| + 1/|B|)·|E|`.
pub fn lemma1_bound(size_a: usize, size_b: usize, edges: usize) -> Result<Rational, BipartiteError> {
    if size_a == 0 || size_b == 0 {
        return Err(BipartiteError::ZeroParameter);
    }
    Ok((rat(1, size_a as i128) + rat(1, size_b as i128)) * int(edges))
}

/// `(1/(|A|·r) + 1/(|B|·t))·|E|`.
pub fn lemma2_bound(
    size_a: usize,
    size_b: usize,
    r: usize,
    t: usize,
    edges: usize,
) -> Result<Rational, BipartiteError> {
    if size_a == 0 || size_b == 0 || r == 0 || t == 0 {
        return Err(BipartiteError::ZeroParameter);
    }
    Ok((rat(1, (size_a * r) as i128) + rat(1, (size_b * t) as i128)) * int(edges))
}

/// Best edge found by a bipartite double-star scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteStar {
    pub edge: (usize, usize),
    pub colour: Option<Colour>,
    /// `d(a) + d(b)` (or `d_k(a) + d_k(b)`), the exact double-star order.
    pub value: usize,
}

/// Edge maximizing `d(a) + d(b)`, or `d_k(a) + d_k(b)` with `k` the edge's own
/// colour when `ignore_colours` is false. First maximal edge in list order wins.
pub fn max_double_star_bipartite(
    g: &BipartiteColouredGraph,
    ignore_colours: bool,
) -> Result<BipartiteStar, BipartiteError> {
    let mut best: Option<BipartiteStar> = None;
    for &(a, b, k) in &g.edges {
        let value = if ignore_colours {
            g.degree_a[a] + g.degree_b[b]
        } else {
            let key = k.unwrap_or(0);
            g.colour_degree(Side::A, a, key) + g.colour_degree(Side::B, b, key)
        };
        if best.is_none_or(|s| value > s.value) {
            best = Some(BipartiteStar { edge: (a, b), colour: if ignore_colours { None } else { k }, value });
        }
    }
    best.ok_or(BipartiteError::NoEdges)
}

/// Checks that every `a ∈ A` sees at most `r` colours and every `b ∈ B` at most `t`.
pub fn check_colour_limits(g: &BipartiteColouredGraph, r: usize, t: usize) -> Result<(), BipartiteError> {
    for (side, size, limit) in [(Side::A, g.size_a, r), (Side::B, g.size_b, t)] {
        for v in 0..size {
            let seen = g.colours_at(side, v);
            if seen > limit {
                return Err(BipartiteError::ColourLimitExceeded { side, vertex: g.label(side, v), seen, limit });
            }
        }
    }
    Ok(())
}

/// Monochromatic version of [`max_double_star_bipartite`] under side colour limits.
pub fn max_mono_double_star_bipartite(
    g: &BipartiteColouredGraph,
    r: usize,
    t: usize,
) -> Result<BipartiteStar, BipartiteError> {
    if r == 0 || t == 0 {
        return Err(BipartiteError::ZeroParameter);
    }
    check_colour_limits(g, r, t)?;
    max_double_star_bipartite(g, false)
}

/// The cross graph of a double star `U`: sides `U` and `V \ U`, edges all
/// cross pairs not in `U`'s colour, each with its colour.
#[derive(Clone, Debug)]
pub struct CrossGraph {
    pub graph: BipartiteColouredGraph,
    /// `|N_c(u) \ U|` for each `u ∈ U` (in side-A order), where `c` is `U`'s colour.
    pub outward_degree: Vec<usize>,
}

/// Builds the cross graph of `star` in `colouring`.
pub fn build_g2(colouring: &EdgeColouring, star: &DoubleStar) -> Result<CrossGraph, BipartiteError> {
    let view = ColourClassView::new(colouring);
    build_g2_in(&view, star)
}

pub fn build_g2_in(view: &ColourClassView<'_>, star: &DoubleStar) -> Result<CrossGraph, BipartiteError> {
    let n = view.n();
    let c = star.colour;
    let (x, y) = star.centres;
    if x >= n || y >= n || x == y || c == 0 || c as usize > view.m() || view.colour(x, y) != c {
        return Err(BipartiteError::NotADoubleStar);
    }
    let mut inside = vec![false; n];
    for &v in &star.vertices {
        if v >= n {
            return Err(BipartiteError::NotADoubleStar);
        }
        inside[v] = true;
    }
    let a_side: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
    let b_side: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    if b_side.is_empty() {
        return Err(BipartiteError::EmptyComplement);
    }
    // Every member of U must keep a colour-c edge inside U, otherwise the
    // colour bound on the U side of the cross graph would not follow.
    for &u in &a_side {
        if !a_side.iter().any(|&w| w != u && view.colour(u, w) == c) {
            return Err(BipartiteError::NoInternalEdge(u, c));
        }
    }

    let mut edges = Vec::new();
    let mut outward_degree = vec![0; a_side.len()];
    for (ia, &u) in a_side.iter().enumerate() {
        for (ib, &v) in b_side.iter().enumerate() {
            let k = view.colour(u, v);
            if k == c {
                outward_degree[ia] += 1;
            } else {
                edges.push((ia, ib, Some(k)));
            }
        }
    }
    let mut graph = BipartiteColouredGraph::new(a_side.len(), b_side.len(), edges)?;
    graph.labels_a = a_side;
    graph.labels_b = b_side;
    Ok(CrossGraph { graph, outward_degree })
}
