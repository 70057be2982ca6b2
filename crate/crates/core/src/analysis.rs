//! Whole-colouring summary used by `analyze`.

use std::fmt::Write;

use serde::Serialize;

use crate::bounds::{known_bounds, BoundTarget};
use crate::colouring::{Colour, EdgeColouring};
use crate::rational::{self, ceil_order, int, Fraction};
use crate::stars::{double_star_order, max_double_star, max_triple_star, triple_star_order, TripleCentres};
use crate::structure::{colour_components, locality, max_component, MaxComponent};

#[derive(Clone, Debug, Serialize)]
pub struct StarSummary {
    pub colour: Colour,
    pub centres: Vec<usize>,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundComparison {
    pub name: &'static str,
    pub local: bool,
    pub target: BoundTarget,
    pub bound: Fraction,
    pub observed: usize,
    /// `observed ≥ ⌈bound⌉`.
    pub meets: bool,
    /// Source and hypotheses; some bounds only apply to restricted `r`.
    pub note: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub locality: usize,
    /// Component sizes per colour `1..=m`, descending.
    pub component_sizes: Vec<Vec<usize>>,
    pub max_component: MaxComponent,
    pub max_double_star: StarSummary,
    pub max_triple_star: Option<StarSummary>,
    pub bounds: Vec<BoundComparison>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalysisOptions {
    /// Skip the triple-star search (cubic per colour class).
    pub skip_triple: bool,
}

pub fn analyze(colouring: &EdgeColouring, options: AnalysisOptions) -> AnalysisReport {
    let view = colouring.view();
    let loc = locality(colouring).locality;
    let component_sizes = (1..=colouring.m())
        .map(|c| {
            let mut sizes: Vec<usize> =
                colour_components(colouring, c).expect("colour in range").iter().map(Vec::len).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            sizes
        })
        .collect();
    let comp = max_component(colouring);
    let ds = max_double_star(&view);
    let ts = if options.skip_triple { None } else { max_triple_star(&view) };

    // Reported witnesses must re-verify against the input.
    debug_assert_eq!(double_star_order(&view, ds.colour, ds.centres.0, ds.centres.1), Ok(ds.order()));
    if let Some(t) = &ts {
        if let TripleCentres::Path([u, x, w]) = t.centres {
            debug_assert_eq!(triple_star_order(&view, t.colour, u, x, w), Ok(t.order()));
        }
    }

    let used = colouring.colours_used();
    let triple_order = ts.as_ref().map_or(2, |t| t.order());
    let mut bounds = Vec::new();
    for (local, r) in [(false, used), (true, loc)] {
        for b in known_bounds(colouring.n(), r, local) {
            let observed = match b.target {
                BoundTarget::Component => comp.size,
                BoundTarget::DoubleStar => ds.order(),
                BoundTarget::TripleStar => {
                    if options.skip_triple {
                        continue;
                    }
                    triple_order
                }
            };
            bounds.push(BoundComparison {
                name: b.name,
                local,
                target: b.target,
                bound: b.value.into(),
                observed,
                meets: int(observed) >= int(ceil_order(&b.value)),
                note: b.note,
            });
        }
    }

    AnalysisReport {
        n: colouring.n(),
        m: colouring.m(),
        locality: loc,
        component_sizes,
        max_component: comp,
        max_double_star: StarSummary {
            colour: ds.colour,
            centres: vec![ds.centres.0, ds.centres.1],
            order: ds.order(),
        },
        max_triple_star: ts.map(|t| StarSummary {
            colour: t.colour,
            centres: t.centres.as_slice().to_vec(),
            order: t.order(),
        }),
        bounds,
    }
}

impl AnalysisReport {
    /// Canonical JSON: keys sorted, compact numbers, trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "vertices        {}", self.n);
        let _ = writeln!(s, "colour labels   {}", self.m);
        let _ = writeln!(s, "locality        {}", self.locality);
        for (c, sizes) in self.component_sizes.iter().enumerate() {
            let _ = writeln!(s, "colour {:<3}      components {:?}", c + 1, sizes);
        }
        let _ = writeln!(s, "max component   {} (colour {})", self.max_component.size, self.max_component.colour);
        let _ = writeln!(
            s,
            "max double star {} (colour {}, centres {:?})",
            self.max_double_star.order, self.max_double_star.colour, self.max_double_star.centres
        );
        match &self.max_triple_star {
            Some(t) => {
                let _ = writeln!(s, "max triple star {} (colour {}, centres {:?})", t.order, t.colour, t.centres);
            }
            None => {
                let _ = writeln!(s, "max triple star none");
            }
        }
        for b in &self.bounds {
            let bound = b.bound.to_rational().expect("nonzero denominator");
            let _ = writeln!(
                s,
                "bound {:<40} {:>10} ≈ {:<10.3} observed {:<6} {}",
                format!("{}{}", if b.local { "local " } else { "" }, b.name),
                rational::display(&bound),
                rational::approx(&bound),
                b.observed,
                if b.meets { "meets" } else { "below" }
            );
        }
        s
    }
}
