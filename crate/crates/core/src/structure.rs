//! Locality, monochromatic components and diameters.

use std::collections::VecDeque;

use serde::Serialize;

use crate::colouring::{Colour, ColouringError, EdgeColouring};

/// Colours incident to each vertex and the overall locality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalityReport {
    /// `incident[v]` lists the colours at `v`, ascending.
    pub incident: Vec<Vec<Colour>>,
    pub locality: usize,
}

impl LocalityReport {
    /// A colouring is a local r-colouring iff every vertex sees at most r colours.
    pub fn is_local(&self, r: usize) -> bool {
        self.locality <= r
    }

    /// First vertex seeing more than `r` colours.
    pub fn first_excess(&self, r: usize) -> Option<usize> {
        self.incident.iter().position(|cs| cs.len() > r)
    }
}

pub fn locality(colouring: &EdgeColouring) -> LocalityReport {
    let n = colouring.n();
    let mut seen = vec![vec![false; colouring.m() + 1]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = colouring.colour(i, j) as usize;
            seen[i][c] = true;
            seen[j][c] = true;
        }
    }
    let incident: Vec<Vec<Colour>> =
        seen.iter().map(|row| row.iter().enumerate().filter(|(_, &s)| s).map(|(c, _)| c as Colour).collect()).collect();
    let locality = incident.iter().map(Vec::len).max().unwrap_or(0);
    LocalityReport { incident, locality }
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Connected components of the colour-`c` subgraph, excluding isolated
/// vertices. Each component is sorted; components are ordered by their
/// smallest vertex.
pub fn colour_components(colouring: &EdgeColouring, c: usize) -> Result<Vec<Vec<usize>>, ColouringError> {
    let c = colouring.check_colour(c)?;
    let n = colouring.n();
    let mut sets = DisjointSets::new(n);
    let mut touched = vec![false; n];
    for i in 0..n {
        for j in i + 1..n {
            if colouring.colour(i, j) == c {
                sets.union(i, j);
                touched[i] = true;
                touched[j] = true;
            }
        }
    }
    let mut slot = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in (0..n).filter(|&v| touched[v]) {
        let root = sets.find(v);
        if slot[root] == usize::MAX {
            slot[root] = out.len();
            out.push(Vec::new());
        }
        out[slot[root]].push(v);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxComponent {
    pub colour: Colour,
    pub size: usize,
    pub vertices: Vec<usize>,
}

/// Largest monochromatic component; ties go to the smallest colour, then the
/// component with the smallest minimum vertex.
pub fn max_component(colouring: &EdgeColouring) -> MaxComponent {
    let mut best: Option<MaxComponent> = None;
    for c in 1..=colouring.m() {
        let comps = colour_components(colouring, c).expect("colour in range");
        for comp in comps {
            if best.as_ref().is_none_or(|b| comp.len() > b.size) {
                best = Some(MaxComponent { colour: c as Colour, size: comp.len(), vertices: comp });
            }
        }
    }
    best.expect("n ≥ 2 guarantees an edge")
}

/// Diameter of the colour-`c` subgraph induced on `vertices`, or `None` if
/// that subgraph is disconnected.
pub fn subgraph_diameter(
    colouring: &EdgeColouring,
    c: usize,
    vertices: &[usize],
) -> Result<Option<usize>, ColouringError> {
    let c = colouring.check_colour(c)?;
    if vertices.is_empty() {
        return Err(ColouringError::EmptyVertexSet);
    }
    for &v in vertices {
        colouring.check_vertex(v)?;
    }
    let mut set = vertices.to_vec();
    set.sort_unstable();
    set.dedup();
    let k = set.len();
    let adj: Vec<Vec<usize>> =
        (0..k).map(|a| (0..k).filter(|&b| b != a && colouring.colour(set[a], set[b]) == c).collect()).collect();

    let mut diameter = 0;
    let mut dist = vec![usize::MAX; k];
    let mut queue = VecDeque::new();
    for s in 0..k {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        let mut reached = 1;
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if dist[b] == usize::MAX {
                    dist[b] = dist[a] + 1;
                    diameter = diameter.max(dist[b]);
                    reached += 1;
                    queue.push_back(b);
                }
            }
        }
        if reached < k {
            return Ok(None);
        }
    }
    Ok(Some(diameter))
}
