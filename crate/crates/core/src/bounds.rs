//! Registry of known lower bounds on monochromatic structures in `K_n`.
//!
//! Values are informational: analysis reports compare observed maxima
//! against them. Only the triple-star bounds for `r ≥ 3` are proved
//! constructively by this crate (see [`crate::prover`]).

use serde::Serialize;

use crate::rational::{rat, Rational};

/// Which observed quantity a bound speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundTarget {
    Component,
    DoubleStar,
    TripleStar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownBound {
    pub name: &'static str,
    pub target: BoundTarget,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub value: Rational,
    pub note: &'static str,
}

/// Triple-star bound for `r`-colourings, `n/(r-1)`.
pub fn global_triple_star_bound(n: usize, r: usize) -> Rational {
    rat(n as i128, r as i128 - 1)
}

/// Triple-star bound for local `r`-colourings, `rn/(r²-r+1)`.
pub fn local_triple_star_bound(n: usize, r: usize) -> Rational {
    let r = r as i128;
    rat(r * n as i128, r * r - r + 1)
}

/// All applicable bounds for `(n, r)`, global or local.
pub fn known_bounds(n: usize, r: usize, local: bool) -> Vec<KnownBound> {
    let ni = n as i128;
    let ri = r as i128;
    let mut out = Vec::new();
    if !local {
        if r >= 2 {
            out.push(KnownBound {
                name: "component n/(r-1)",
                target: BoundTarget::Component,
                value: global_triple_star_bound(n, r),
                note: "Gyárfás; tight when an affine plane of order r-1 exists and (r-1)² divides n",
            });
        }
        if r >= 3 {
            out.push(KnownBound {
                name: "triple star n/(r-1)",
                target: BoundTarget::TripleStar,
                value: global_triple_star_bound(n, r),
                note: "holds for r ≥ 3; certified per instance by `prove`",
            });
            out.push(KnownBound {
                name: "component n/(r-1-1/(r-1))",
                target: BoundTarget::Component,
                value: rat(ni * (ri - 1), ri * (ri - 2)),
                note: "Füredi; applies only when no affine plane of order r-1 exists",
            });
        }
        if r >= 2 {
            out.push(KnownBound {
                name: "double star (n(r+1)+r-1)/r^2",
                target: BoundTarget::DoubleStar,
                value: rat(ni * (ri + 1) + ri - 1, ri * ri),
                note: "Gyárfás–Sárközy",
            });
        }
        if r == 2 {
            out.push(KnownBound {
                name: "double star 3n/4",
                target: BoundTarget::DoubleStar,
                value: rat(3 * ni, 4),
                note: "two colours; asymptotically tight for random colourings",
            });
            out.push(KnownBound {
                name: "triple star 7n/8",
                target: BoundTarget::TripleStar,
                value: rat(7 * ni, 8),
                note: "two colours; asymptotically tight for random colourings",
            });
        }
    } else if r >= 1 {
        out.push(KnownBound {
            name: "component rn/(r^2-r+1)",
            target: BoundTarget::Component,
            value: local_triple_star_bound(n, r),
            note: "local colourings; tight when a projective plane of order r-1 exists and r²-r+1 divides n",
        });
        if r >= 3 {
            out.push(KnownBound {
                name: "triple star rn/(r^2-r+1)",
                target: BoundTarget::TripleStar,
                value: local_triple_star_bound(n, r),
                note: "holds for r ≥ 3; certified per instance by `prove --local`",
            });
        }
        out.push(KnownBound {
            name: "double star ((r+1)n+r-1)/(r^2+1)",
            target: BoundTarget::DoubleStar,
            value: rat((ri + 1) * ni + ri - 1, ri * ri + 1),
            note: "Gyárfás–Sárközy, local colourings",
        });
        if r == 2 {
            out.push(KnownBound {
                name: "double star 2n/3",
                target: BoundTarget::DoubleStar,
                value: rat(2 * ni, 3),
                note: "local 2-colourings; sharp for components",
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(bounds: &[KnownBound], name: &str) -> Rational {
        bounds.iter().find(|b| b.name == name).unwrap().value
    }

    #[test]
    fn global_three_colours_on_eight_vertices() {
        let b = known_bounds(8, 3, false);
        assert_eq!(value(&b, "component n/(r-1)"), rat(4, 1));
        assert_eq!(value(&b, "triple star n/(r-1)"), rat(4, 1));
        assert_eq!(value(&b, "double star (n(r+1)+r-1)/r^2"), rat(34, 9));
        assert_eq!(value(&b, "component n/(r-1-1/(r-1))"), rat(16, 3));
    }

    #[test]
    fn local_three_colours_on_seven_vertices() {
        let b = known_bounds(7, 3, true);
        assert_eq!(value(&b, "component rn/(r^2-r+1)"), rat(3, 1));
        assert_eq!(value(&b, "triple star rn/(r^2-r+1)"), rat(3, 1));
        assert_eq!(value(&b, "double star ((r+1)n+r-1)/(r^2+1)"), rat(30, 10));
    }

    #[test]
    fn two_colour_values() {
        let b = known_bounds(4, 2, false);
        assert_eq!(value(&b, "double star 3n/4"), rat(3, 1));
        assert_eq!(value(&b, "triple star 7n/8"), rat(7, 2));
        assert!(b.iter().all(|x| x.name != "triple star n/(r-1)"));
        assert_eq!(value(&known_bounds(6, 2, true), "double star 2n/3"), rat(4, 1));
    }

    #[test]
    fn one_colour_has_no_global_bounds() {
        assert!(known_bounds(5, 1, false).is_empty());
    }
}
