//! Extremal and test colourings.
//!
//! * Affine: vertices are blown-up points of `AG(2, q)`; an edge between two
//!   points gets the parallel class of the line through them. Every colour
//!   class is a disjoint union of `q` cliques on `mult·q` vertices.
//! * Projective: vertices are blown-up points of `PG(2, q)`; an edge gets the
//!   unique line through its endpoints. Every vertex sees `q + 1` colours and
//!   every colour class is one clique on `mult·(q + 1)` vertices.
//!
//! Only prime `q` is supported (field arithmetic is mod `q`). Vertex `v`
//! lies over point `⌊v / mult⌋`.
//!
//! Random colourings use SplitMix64 seeded with the given seed; each edge, in
//! row-major upper-triangular order, draws one 64-bit output `x` and takes
//! colour `1 + ⌊x·r / 2⁶⁴⌋`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::colouring::{edge_count, Colour, ColouringError, EdgeColouring};

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("order q = {0} is not prime")]
    NotPrime(usize),
    #[error("mult must be at least 1")]
    ZeroMultiplicity,
    #[error("vertex count overflows")]
    Overflow,
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneKind {
    Affine,
    Projective,
}

/// A plane of prime order `q` with every point blown up to `mult` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneSpec {
    pub q: usize,
    pub mult: usize,
    pub kind: PlaneKind,
}

impl PlaneSpec {
    pub fn new(q: usize, mult: usize, kind: PlaneKind) -> Result<Self, GenerateError> {
        if !is_prime(q) {
            return Err(GenerateError::NotPrime(q));
        }
        if mult == 0 {
            return Err(GenerateError::ZeroMultiplicity);
        }
        let spec = PlaneSpec { q, mult, kind };
        let n = spec.points().checked_mul(mult).ok_or(GenerateError::Overflow)?;
        if edge_count_checked(n).is_none() {
            return Err(GenerateError::Overflow);
        }
        Ok(spec)
    }

    pub fn points(&self) -> usize {
        match self.kind {
            PlaneKind::Affine => self.q * self.q,
            PlaneKind::Projective => self.q * self.q + self.q + 1,
        }
    }

    pub fn n(&self) -> usize {
        self.points() * self.mult
    }

    /// Number of colour labels.
    pub fn colours(&self) -> usize {
        match self.kind {
            PlaneKind::Affine => self.q + 1,
            PlaneKind::Projective => self.points(),
        }
    }

    pub fn generate(&self) -> Result<EdgeColouring, GenerateError> {
        match self.kind {
            PlaneKind::Affine => affine_colouring(self.q, self.mult),
            PlaneKind::Projective => projective_local_colouring(self.q, self.mult),
        }
    }
}

fn edge_count_checked(n: usize) -> Option<usize> {
    n.checked_mul(n.saturating_sub(1)).map(|x| x / 2)
}

pub fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn inverse_mod(a: usize, q: usize) -> usize {
    (1..q).find(|&b| a * b % q == 1).expect("q prime, a ≠ 0")
}

/// Colouring from the parallel classes of `AG(2, q)`, `n = mult·q²`, `q + 1` colours.
///
/// Point `k` is `(k / q, k % q)`. Classes `1..=q` are the slopes `0..q` of
/// lines `y = s·x + b`; class `q + 1` is the vertical lines `x = b`.
/// Edges inside one point get colour 1.
pub fn affine_colouring(q: usize, mult: usize) -> Result<EdgeColouring, GenerateError> {
    let spec = PlaneSpec::new(q, mult, PlaneKind::Affine)?;
    let point = |v: usize| {
        let k = v / mult;
        (k / q, k % q)
    };
    // (class, intercept) of the line through two distinct points
    let line = |(x1, y1): (usize, usize), (x2, y2): (usize, usize)| {
        let dx = (x2 + q - x1) % q;
        let dy = (y2 + q - y1) % q;
        if dx == 0 {
            (q + 1, x1)
        } else {
            let s = dy * inverse_mod(dx, q) % q;
            (s + 1, (y1 + q * q - s * x1 % q) % q)
        }
    };
    Ok(EdgeColouring::from_fn(spec.n(), spec.colours(), |i, j| {
        let (p, r) = (point(i), point(j));
        if p == r {
            return 1;
        }
        let ab = line(p, r);
        assert_eq!(ab, line(r, p), "line through two points must be unique");
        ab.0
    })?)
}

/// Normalized homogeneous coordinates of `PG(2, q)`, first nonzero entry 1,
/// in lexicographic order. Lines use the same list (dual coordinates).
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let p = [a, b, c];
                if p.iter().find(|&&t| t != 0) == Some(&1) {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn incident(p: &[usize; 3], l: &[usize; 3], q: usize) -> bool {
    (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).is_multiple_of(q)
}

/// Local `(q+1)`-colouring from `PG(2, q)`, `n = mult·(q²+q+1)`, one colour per line.
///
/// Edges inside one point take the smallest-index line through that point.
pub fn projective_local_colouring(q: usize, mult: usize) -> Result<EdgeColouring, GenerateError> {
    let spec = PlaneSpec::new(q, mult, PlaneKind::Projective)?;
    let points = projective_points(q);
    let lines = &points;
    let k = points.len();
    debug_assert_eq!(k, spec.points());
    // Colour (1-based line index) of each pair of points.
    let mut table = vec![0 as Colour; k * k];
    for (a, pa) in points.iter().enumerate() {
        for (b, pb) in points.iter().enumerate() {
            let through: Vec<usize> =
                (0..k).filter(|&l| incident(pa, &lines[l], q) && incident(pb, &lines[l], q)).collect();
            if a == b {
                assert_eq!(through.len(), q + 1);
            } else {
                assert_eq!(through.len(), 1, "two points lie on exactly one line");
            }
            table[a * k + b] = (through[0] + 1) as Colour;
        }
    }
    Ok(EdgeColouring::from_fn(spec.n(), spec.colours(), |i, j| table[(i / mult) * k + j / mult] as usize)?)
}

/// Uniform random colouring with colours `1..=r`; see the module docs for the
/// exact generator.
pub fn random_colouring(n: usize, r: usize, seed: u64) -> Result<EdgeColouring, GenerateError> {
    if edge_count_checked(n).is_none() {
        return Err(GenerateError::Overflow);
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut labels = Vec::with_capacity(edge_count(n));
    for _ in 0..edge_count(n) {
        labels.push(1 + ((rng.next_u64() as u128 * r as u128) >> 64) as usize);
    }
    Ok(EdgeColouring::new(n, r, labels)?)
}

/// Every edge colour 1, with `r` declared labels.
pub fn constant_colouring(n: usize, r: usize) -> Result<EdgeColouring, GenerateError> {
    Ok(EdgeColouring::from_fn(n, r, |_, _| 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{colour_components, locality, max_component};

    #[test]
    fn primality() {
        let primes: Vec<usize> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(matches!(affine_colouring(4, 1), Err(GenerateError::NotPrime(4))));
        assert!(matches!(projective_local_colouring(1, 1), Err(GenerateError::NotPrime(1))));
        assert!(matches!(affine_colouring(2, 0), Err(GenerateError::ZeroMultiplicity)));
        assert!(matches!(affine_colouring(2, usize::MAX / 2), Err(GenerateError::Overflow)));
    }

    #[test]
    fn affine_order_two_blown_up() {
        let c = affine_colouring(2, 2).unwrap();
        assert_eq!((c.n(), c.m()), (8, 3));
        for colour in 1..=3 {
            let comps = colour_components(&c, colour).unwrap();
            assert_eq!(comps.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 4]);
        }
        assert_eq!(max_component(&c).size, 4);
    }

    #[test]
    fn affine_order_three_classes_are_triangles() {
        let c = affine_colouring(3, 1).unwrap();
        assert_eq!((c.n(), c.m()), (9, 4));
        for colour in 1..=4 {
            let comps = colour_components(&c, colour).unwrap();
            assert_eq!(comps.len(), 3);
            assert!(comps.iter().all(|comp| comp.len() == 3));
        }
    }

    #[test]
    fn affine_order_two_is_a_proper_colouring_of_k4() {
        let c = affine_colouring(2, 1).unwrap();
        assert_eq!(locality(&c).locality, 3);
        for colour in 1..=3 {
            assert_eq!(colour_components(&c, colour).unwrap().len(), 2);
        }
    }

    #[test]
    fn fano_colouring() {
        let c = projective_local_colouring(2, 1).unwrap();
        assert_eq!((c.n(), c.m()), (7, 7));
        let report = locality(&c);
        assert_eq!(report.locality, 3);
        assert!(report.incident.iter().all(|cs| cs.len() == 3));
        for colour in 1..=7 {
            assert_eq!(colour_components(&c, colour).unwrap(), vec![colour_components(&c, colour).unwrap()[0].clone()]);
            assert_eq!(colour_components(&c, colour).unwrap()[0].len(), 3);
        }
    }

    #[test]
    fn projective_blow_ups() {
        let c = projective_local_colouring(2, 3).unwrap();
        assert_eq!(c.n(), 21);
        assert_eq!(max_component(&c).size, 9);
        let c = projective_local_colouring(3, 1).unwrap();
        assert_eq!((c.n(), c.m()), (13, 13));
        assert_eq!(locality(&c).locality, 4);
        for colour in 1..=13 {
            let comps = colour_components(&c, colour).unwrap();
            assert_eq!(comps.len(), 1);
            assert_eq!(comps[0].len(), 4);
        }
    }

    #[test]
    fn random_colouring_is_deterministic() {
        let a = random_colouring(5, 3, 1).unwrap();
        assert_eq!(a, random_colouring(5, 3, 1).unwrap());
        assert_ne!(a, random_colouring(5, 3, 2).unwrap());
        assert!(a.labels().iter().all(|&c| (1..=3).contains(&c)));
        assert_eq!(random_colouring(2, 1, 99).unwrap().labels(), &[1]);
    }

    #[test]
    fn random_colouring_golden() {
        // Reference SplitMix64 output for seed 0.
        assert_eq!(SplitMix64::seed_from_u64(0).next_u64(), 0xe220_a839_7b1d_cdaf);
        let c = random_colouring(5, 3, 1).unwrap();
        assert_eq!(c.labels(), &[2, 3, 3, 2, 2, 3, 3, 2, 1, 3]);
    }

    #[test]
    fn constant_fixtures() {
        let c = constant_colouring(5, 3).unwrap();
        assert_eq!(max_component(&c).size, 5);
        assert_eq!(constant_colouring(2, 1).unwrap().labels(), &[1]);
        assert!(constant_colouring(1, 1).is_err());
    }
}
