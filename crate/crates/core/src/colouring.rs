//! Edge colourings of complete graphs and their text format.
//!
//! The text format is:
//!
//! ```text
//! # optional comment lines
//! n m
//! c(0,1) c(0,2) ... c(0,n-1)
//! c(1,2) ... c(1,n-1)
//! ...
//! ```
//!
//! The `C(n,2)` colours may be split across lines arbitrarily; only their
//! row-major upper-triangular order matters. Colours are `1..=m`.

use std::fmt;

use thiserror::Error;

use crate::bitset::{self, words_for};

pub type Colour = u16;

/// Number of edges of `K_n`.
pub fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of edge `{i, j}` (`i < j`) in row-major upper-triangular order.
#[inline]
pub fn edge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// One broken invariant found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooFewVertices { n: usize },
    NoColours,
    ColourCountTooLarge { m: usize },
    WrongEdgeCount { expected: usize, found: usize },
    LabelOutOfRange { edge: (usize, usize), label: usize, m: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewVertices { n } => write!(f, "n ≥ 2 required (got n = {n})"),
            Violation::NoColours => write!(f, "m ≥ 1 required"),
            Violation::ColourCountTooLarge { m } => {
                write!(f, "m = {m} exceeds the supported {} colour labels", Colour::MAX)
            }
            Violation::WrongEdgeCount { expected, found } => {
                write!(f, "missing edge colour: expected {expected} edges, found {found}")
            }
            Violation::LabelOutOfRange { edge, label, m } => {
                write!(f, "label out of range: edge {{{},{}}} has colour {label}, allowed 1..={m}", edge.0, edge.1)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks raw colouring data against the `EdgeColouring` invariants.
pub fn validate(n: usize, m: usize, colours: &[usize]) -> ValidationReport {
    let mut violations = Vec::new();
    if n < 2 {
        violations.push(Violation::TooFewVertices { n });
    }
    if m == 0 {
        violations.push(Violation::NoColours);
    }
    if m > Colour::MAX as usize {
        violations.push(Violation::ColourCountTooLarge { m });
    }
    let expected = edge_count(n);
    if colours.len() != expected {
        violations.push(Violation::WrongEdgeCount { expected, found: colours.len() });
    }
    let mut k = 0;
    'outer: for i in 0..n {
        for j in i + 1..n {
            let Some(&label) = colours.get(k) else {
                break 'outer;
            };
            if label == 0 || label > m {
                violations.push(Violation::LabelOutOfRange { edge: (i, j), label, m });
            }
            k += 1;
        }
    }
    ValidationReport { violations }
}

#[derive(Debug, Error)]
pub enum ColouringError {
    #[error("invalid colouring: {}", .0.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(ValidationReport),
    #[error("colour {colour} out of range 1..={m}")]
    ColourOutOfRange { colour: usize, m: usize },
    #[error("vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
}

/// A colour in `1..=m` on every edge of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColouring {
    n: usize,
    m: usize,
    colours: Vec<Colour>,
}

impl EdgeColouring {
    pub fn new(n: usize, m: usize, colours: Vec<usize>) -> Result<Self, ColouringError> {
        let report = validate(n, m, &colours);
        if !report.is_valid() {
            return Err(ColouringError::Invalid(report));
        }
        Ok(EdgeColouring { n, m, colours: colours.into_iter().map(|c| c as Colour).collect() })
    }

    /// Builds a colouring by evaluating `f(i, j)` for every `i < j`.
    pub fn from_fn(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self, ColouringError> {
        let mut colours = Vec::with_capacity(edge_count(n));
        for i in 0..n {
            for j in i + 1..n {
                colours.push(f(i, j));
            }
        }
        Self::new(n, m, colours)
    }

    /// Crate-internal constructor for labels already known to be valid.
    pub(crate) fn from_labels_unchecked(n: usize, m: usize, colours: Vec<Colour>) -> Self {
        debug_assert_eq!(colours.len(), edge_count(n));
        debug_assert!(colours.iter().all(|&c| c >= 1 && c as usize <= m));
        EdgeColouring { n, m, colours }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Declared number of colour labels.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Edge colours in row-major upper-triangular order.
    pub fn labels(&self) -> &[Colour] {
        &self.colours
    }

    /// Colour of edge `{u, v}`. Panics if `u == v` or either is out of range.
    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> Colour {
        assert!(u != v, "no loop edges in K_n");
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.colours[edge_index(self.n, i, j)]
    }

    pub fn validate(&self) -> ValidationReport {
        let raw: Vec<usize> = self.colours.iter().map(|&c| c as usize).collect();
        validate(self.n, self.m, &raw)
    }

    pub fn check_colour(&self, c: usize) -> Result<Colour, ColouringError> {
        if c == 0 || c > self.m {
            Err(ColouringError::ColourOutOfRange { colour: c, m: self.m })
        } else {
            Ok(c as Colour)
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), ColouringError> {
        if v >= self.n {
            Err(ColouringError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Number of distinct colours that actually appear.
    pub fn colours_used(&self) -> usize {
        let mut seen = vec![false; self.m + 1];
        for &c in &self.colours {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    /// Applies a vertex permutation: the new colouring has
    /// `colour'(perm[u], perm[v]) = colour(u, v)`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> EdgeColouring {
        assert_eq!(perm.len(), self.n);
        let mut colours = vec![0; self.colours.len()];
        for i in 0..self.n {
            for j in i + 1..self.n {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                colours[edge_index(self.n, a, b)] = self.colour(i, j);
            }
        }
        EdgeColouring::from_labels_unchecked(self.n, self.m, colours)
    }

    pub fn view(&self) -> ColourClassView<'_> {
        ColourClassView::new(self)
    }

    /// Serializes in the canonical text layout: header line, then one line
    /// per row `i` listing the colours of `{i, i+1}, …, {i, n-1}`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for i in 0..self.n - 1 {
            let row: Vec<String> = (i + 1..self.n).map(|j| self.colour(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(input: &str) -> impl Iterator<Item = Token<'_>> {
    input.lines().enumerate().flat_map(|(ln, line)| {
        let comment = line.trim_start().starts_with('#');
        let mut out = Vec::new();
        if !comment {
            let mut start = None;
            for (idx, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
                if ch.is_whitespace() {
                    if let Some(s) = start.take() {
                        out.push(Token { text: &line[s..idx], line: ln + 1, column: line[..s].chars().count() + 1 });
                    }
                } else if start.is_none() {
                    start = Some(idx);
                }
            }
        }
        out
    })
}

fn number(tok: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    tok.text.parse::<usize>().map_err(|_| ParseError {
        line: tok.line,
        column: tok.column,
        message: format!("expected {what}, found {:?}", tok.text),
    })
}

/// Parses the colouring text format.
pub fn parse_colouring(input: &str) -> Result<EdgeColouring, ParseError> {
    let end = {
        let lines = input.lines().count().max(1);
        let last = input.lines().last().map(|l| l.chars().count()).unwrap_or(0);
        (lines, last + 1)
    };
    let eof = |message: String| ParseError { line: end.0, column: end.1, message };

    let mut toks = tokens(input).peekable();
    let header_line = toks.peek().map(|t| t.line).ok_or_else(|| eof("missing header \"n m\"".into()))?;
    let mut header = Vec::new();
    while let Some(t) = toks.next_if(|t| t.line == header_line) {
        header.push(t);
    }
    if header.len() != 2 {
        let t = header.get(2).unwrap_or(&header[0]);
        return Err(ParseError {
            line: t.line,
            column: t.column,
            message: format!("header must be \"n m\", found {} fields", header.len()),
        });
    }
    let n = number(&header[0], "vertex count n")?;
    let m = number(&header[1], "colour count m")?;
    if n < 2 {
        return Err(ParseError {
            line: header[0].line,
            column: header[0].column,
            message: Violation::TooFewVertices { n }.to_string(),
        });
    }
    if m == 0 || m > Colour::MAX as usize {
        return Err(ParseError {
            line: header[1].line,
            column: header[1].column,
            message: if m == 0 {
                Violation::NoColours.to_string()
            } else {
                Violation::ColourCountTooLarge { m }.to_string()
            },
        });
    }

    let expected = edge_count(n);
    let mut colours = Vec::with_capacity(expected);
    for i in 0..n {
        for j in i + 1..n {
            let Some(tok) = toks.next() else {
                return Err(eof(Violation::WrongEdgeCount { expected, found: colours.len() }.to_string()));
            };
            let label = number(&tok, "edge colour")?;
            if label == 0 || label > m {
                return Err(ParseError {
                    line: tok.line,
                    column: tok.column,
                    message: Violation::LabelOutOfRange { edge: (i, j), label, m }.to_string(),
                });
            }
            colours.push(label as Colour);
        }
    }
    if let Some(tok) = toks.next() {
        return Err(ParseError {
            line: tok.line,
            column: tok.column,
            message: format!("unexpected token {:?} after {expected} edge colours", tok.text),
        });
    }
    Ok(EdgeColouring::from_labels_unchecked(n, m, colours))
}

/// Per-colour adjacency bitsets `N_c(v)` and colour-degrees `d_c(v)`.
#[derive(Clone, Debug)]
pub struct ColourClassView<'a> {
    colouring: &'a EdgeColouring,
    words: usize,
    /// Indexed `[(c - 1) * n + v] * words`.
    adjacency: Vec<u64>,
    degrees: Vec<u32>,
}

impl<'a> ColourClassView<'a> {
    pub fn new(colouring: &'a EdgeColouring) -> Self {
        let n = colouring.n;
        let m = colouring.m;
        let words = words_for(n);
        let mut adjacency = vec![0u64; m * n * words];
        let mut degrees = vec![0u32; m * n];
        for i in 0..n {
            for j in i + 1..n {
                let c = colouring.colour(i, j) as usize - 1;
                bitset::insert(&mut adjacency[(c * n + i) * words..][..words], j);
                bitset::insert(&mut adjacency[(c * n + j) * words..][..words], i);
                degrees[c * n + i] += 1;
                degrees[c * n + j] += 1;
            }
        }
        ColourClassView { colouring, words, adjacency, degrees }
    }

    pub fn colouring(&self) -> &'a EdgeColouring {
        self.colouring
    }

    pub fn n(&self) -> usize {
        self.colouring.n
    }

    pub fn m(&self) -> usize {
        self.colouring.m
    }

    pub fn words(&self) -> usize {
        self.words
    }

    /// `N_c(v)` as a bit slice.
    #[inline]
    pub fn neighbours(&self, c: Colour, v: usize) -> &[u64] {
        let n = self.colouring.n;
        let start = ((c as usize - 1) * n + v) * self.words;
        &self.adjacency[start..start + self.words]
    }

    /// `d_c(v)`.
    #[inline]
    pub fn degree(&self, c: Colour, v: usize) -> usize {
        self.degrees[(c as usize - 1) * self.colouring.n + v] as usize
    }

    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> Colour {
        self.colouring.colour(u, v)
    }

    pub fn colours(&self) -> impl Iterator<Item = Colour> {
        1..=self.colouring.m as Colour
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_with_two_colours_is_valid() {
        assert!(validate(3, 2, &[1, 1, 2]).is_valid());
    }

    #[test]
    fn label_out_of_range_is_reported() {
        let report = validate(3, 2, &[1, 3, 2]);
        assert_eq!(report.violations, vec![Violation::LabelOutOfRange { edge: (0, 2), label: 3, m: 2 }]);
        assert!(report.violations[0].to_string().starts_with("label out of range"));
    }

    #[test]
    fn single_vertex_is_rejected() {
        let report = validate(1, 1, &[]);
        assert_eq!(report.violations, vec![Violation::TooFewVertices { n: 1 }]);
        assert!(report.violations[0].to_string().contains("n ≥ 2 required"));
    }

    #[test]
    fn missing_edges_are_reported() {
        let report = validate(4, 2, &[1, 1]);
        assert!(report.violations.contains(&Violation::WrongEdgeCount { expected: 6, found: 2 }));
    }

    #[test]
    fn edge_index_is_row_major() {
        let n = 5;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(edge_index(n, i, j), k);
                k += 1;
            }
        }
    }

    #[test]
    fn parse_and_print_round_trip() {
        let text = "# K4, red matching\n4 2\n1 2 2\n2 2\n1\n";
        let c = parse_colouring(text).unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(c.colour(0, 1), 1);
        assert_eq!(c.colour(3, 2), 1);
        assert_eq!(c.colour(1, 3), 2);
        assert_eq!(c.to_text(), "4 2\n1 2 2\n2 2\n1\n");
        assert_eq!(parse_colouring(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn parse_accepts_any_line_split_and_trailing_space() {
        let c = parse_colouring("3 2\n1 1 2   \n\n").unwrap();
        assert_eq!(c.labels(), &[1, 1, 2]);
    }

    #[test]
    fn parse_reports_position_of_bad_label() {
        let err = parse_colouring("3 2\n1 1\n  3\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 3));
        assert!(err.message.contains("label out of range"));
    }

    #[test]
    fn parse_rejects_short_and_long_input() {
        let err = parse_colouring("3 2\n1 1").unwrap_err();
        assert!(err.message.contains("missing edge colour"));
        let err = parse_colouring("3 2\n1 1 1 1").unwrap_err();
        assert_eq!((err.line, err.column), (2, 7));
        let err = parse_colouring("1 1\n").unwrap_err();
        assert!(err.message.contains("n ≥ 2"));
        let err = parse_colouring("3 x\n1 1 1").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
        assert!(parse_colouring("# nothing\n").is_err());
    }

    #[test]
    fn colour_degrees_sum_to_n_minus_one() {
        let c = EdgeColouring::from_fn(7, 3, |i, j| (i * 3 + j) % 3 + 1).unwrap();
        let view = c.view();
        for v in 0..7 {
            let total: usize = view.colours().map(|k| view.degree(k, v)).sum();
            assert_eq!(total, 6);
            for k in view.colours() {
                assert_eq!(bitset::count(view.neighbours(k, v)), view.degree(k, v));
                assert!(!bitset::contains(view.neighbours(k, v), v));
            }
        }
    }
}
