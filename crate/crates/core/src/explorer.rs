//! Simulated annealing over colourings, minimizing the largest monochromatic
//! double star, triple star or component.
//!
//! Moves recolour one uniformly chosen edge to a uniformly chosen different
//! colour. A move that changes the objective by `Δ` is accepted when `Δ ≤ 0`,
//! otherwise with probability `exp(-Δ / T)`. The temperature is multiplied by
//! the cooling factor after every iteration. With a positive plateau weight
//! `w` the energy is `objective + w·plateau_score`, which gives the search a
//! gradient across the long flat stretches of the bare objective. Defaults (`T₀ = 2`, factor
//! `0.995`, 10⁵ iterations, 8 restarts) are engineering choices.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitset;
use crate::colouring::{edge_count, Colour, EdgeColouring};
use crate::generators::random_colouring;
use crate::oracle::CheckMode;
use crate::rational::{ceil_order, rat, Fraction, Rational};
use crate::stars::{max_double_star, max_triple_star};
use crate::structure::{colour_components, max_component};

pub type Objective = CheckMode;

/// Value of the objective; a colouring without a monochromatic two-edge path
/// scores 2 for `Triple` (the single-edge floor).
pub fn objective(colouring: &EdgeColouring, kind: Objective) -> usize {
    let view = colouring.view();
    match kind {
        CheckMode::Double => max_double_star(&view).order(),
        CheckMode::Triple => max_triple_star(&view).map_or(2, |t| t.order()),
        CheckMode::Component => max_component(colouring).size,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub n: usize,
    pub r: usize,
    pub objective: Objective,
    pub iterations: u64,
    pub initial_temperature: f64,
    pub cooling: f64,
    /// Weight of [`plateau_score`] in the energy; 0 anneals the bare objective.
    pub plateau_weight: f64,
    pub seed: u64,
    pub restarts: usize,
    pub threads: usize,
}

impl SearchConfig {
    pub fn new(n: usize, r: usize, objective: Objective) -> Self {
        SearchConfig {
            n,
            r,
            objective,
            iterations: 100_000,
            initial_temperature: 2.0,
            cooling: 0.995,
            plateau_weight: 0.0,
            seed: 0,
            restarts: 8,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum SearchError {
    #[error("invalid search config: {0}")]
    Config(String),
    #[error("theorem violation: triple-star objective {found} below {floor}\n{}", .colouring.to_text())]
    TheoremViolation { found: usize, floor: usize, colouring: Box<EdgeColouring> },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// One entry per improvement of a restart's best value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LogEntry {
    pub restart: usize,
    pub iteration: u64,
    pub temperature: f64,
    pub best: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub best: EdgeColouring,
    pub best_objective: usize,
    pub best_restart: usize,
    /// `objective·(r-1)/n`.
    pub ratio: Rational,
    pub log: Vec<LogEntry>,
}

#[derive(Serialize)]
pub struct SearchSummary {
    pub n: usize,
    pub r: usize,
    pub objective: Objective,
    pub best_objective: usize,
    pub best_restart: usize,
    pub ratio: Fraction,
    pub log: Vec<LogEntry>,
}

impl SearchOutcome {
    pub fn summary(&self, config: &SearchConfig) -> SearchSummary {
        SearchSummary {
            n: config.n,
            r: config.r,
            objective: config.objective,
            best_objective: self.best_objective,
            best_restart: self.best_restart,
            ratio: self.ratio.into(),
            log: self.log.clone(),
        }
    }
}

fn validate(config: &SearchConfig) -> Result<(), SearchError> {
    let bad = |m: &str| Err(SearchError::Config(m.into()));
    if config.n < 2 {
        return bad("n ≥ 2 required");
    }
    if config.r < 1 {
        return bad("r ≥ 1 required");
    }
    if config.iterations == 0 {
        return bad("iterations ≥ 1 required");
    }
    if !(config.cooling > 0.0 && config.cooling < 1.0) {
        return bad("cooling factor must lie in (0, 1)");
    }
    if config.initial_temperature.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return bad("initial temperature must be positive");
    }
    if !(config.plateau_weight >= 0.0 && config.plateau_weight.is_finite()) {
        return bad("plateau weight must be finite and non-negative");
    }
    if config.restarts == 0 {
        return bad("restarts ≥ 1 required");
    }
    Ok(())
}

struct RestartResult {
    best: EdgeColouring,
    value: usize,
    log: Vec<LogEntry>,
}

/// Largest `n` for which the component guide enumerates bisections.
const BISECTION_LIMIT: usize = 12;

/// Tie-breaking score for the objective's plateaus.
///
/// For components: the sum over colours of the fewest colour-`c` edges across
/// a bisection (`n ≤ 12`), else the sum of squared component sizes. For stars:
/// the sum of squared double-star orders over all edges.
pub fn plateau_score(colouring: &EdgeColouring, kind: Objective) -> u64 {
    let n = colouring.n();
    let view = colouring.view();
    match kind {
        CheckMode::Component if n <= BISECTION_LIMIT => {
            let half = n / 2;
            let nb: Vec<Vec<u64>> =
                (1..=colouring.m() as Colour).map(|c| (0..n).map(|v| view.neighbours(c, v)[0]).collect()).collect();
            let mut best = vec![u64::MAX; nb.len()];
            // Gosper's hack over masks of size `half` containing vertex 0.
            let mut s: u64 = (1 << half) - 1;
            while s < 1 << n {
                if s & 1 == 1 {
                    for (b, adj) in best.iter_mut().zip(&nb) {
                        let cut: u64 = bitset::members(&[s]).map(|v| (adj[v] & !s).count_ones() as u64).sum();
                        *b = (*b).min(cut);
                    }
                }
                let low = s & s.wrapping_neg();
                let ripple = s + low;
                s = (((ripple ^ s) >> 2) / low) | ripple;
            }
            best.iter().sum()
        }
        CheckMode::Component => (1..=colouring.m())
            .flat_map(|c| colour_components(colouring, c).expect("colour in range"))
            .map(|comp| (comp.len() * comp.len()) as u64)
            .sum(),
        CheckMode::Double | CheckMode::Triple => {
            let mut total = 0u64;
            for x in 0..n {
                for y in x + 1..n {
                    let c = view.colour(x, y);
                    let o = bitset::union_count(view.neighbours(c, x), view.neighbours(c, y)) as u64;
                    total += o * o;
                }
            }
            total
        }
    }
}

fn unit(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

fn below(rng: &mut SplitMix64, k: usize) -> usize {
    ((rng.next_u64() as u128 * k as u128) >> 64) as usize
}

fn run_restart(config: &SearchConfig, restart: usize) -> RestartResult {
    let seed = config.seed.wrapping_add((restart as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let start = random_colouring(config.n, config.r, seed).expect("validated config");
    let mut rng = SplitMix64::seed_from_u64(seed ^ 0xD1B5_4A32_D192_ED03);
    let n = config.n;
    let m = config.r;
    let mut labels: Vec<Colour> = start.labels().to_vec();
    let weight = config.plateau_weight;
    let score = |labels: &[Colour]| {
        let c = EdgeColouring::from_labels_unchecked(n, m, labels.to_vec());
        let guide = if weight > 0.0 { plateau_score(&c, config.objective) } else { 0 };
        (objective(&c, config.objective), guide)
    };
    let (mut current, mut current_s) = score(&labels);
    let mut best = labels.clone();
    let mut best_value = current;
    let mut temperature = config.initial_temperature;
    let mut log = vec![LogEntry { restart, iteration: 0, temperature, best: best_value }];
    let edges = edge_count(n);
    for iteration in 1..=config.iterations {
        if m >= 2 {
            let e = below(&mut rng, edges);
            let old = labels[e];
            let mut new = 1 + below(&mut rng, m - 1) as Colour;
            if new >= old {
                new += 1;
            }
            labels[e] = new;
            let (value, sec) = score(&labels);
            let delta = value as f64 - current as f64 + weight * (sec as f64 - current_s as f64);
            if delta <= 0.0 || unit(&mut rng) < (-delta / temperature).exp() {
                current = value;
                current_s = sec;
                if value < best_value {
                    best_value = value;
                    best.copy_from_slice(&labels);
                    log.push(LogEntry { restart, iteration, temperature, best: best_value });
                }
            } else {
                labels[e] = old;
            }
        }
        temperature *= config.cooling;
    }
    RestartResult { best: EdgeColouring::from_labels_unchecked(n, m, best), value: best_value, log }
}

/// Runs all restarts and returns the best colouring found (lowest restart
/// index on ties).
pub fn anneal(config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    validate(config)?;
    let results: Vec<RestartResult> = if config.threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| SearchError::ThreadPool(e.to_string()))?
            .install(|| (0..config.restarts).into_par_iter().map(|k| run_restart(config, k)).collect())
    } else {
        (0..config.restarts).map(|k| run_restart(config, k)).collect()
    };
    let (best_restart, best) = results.iter().enumerate().min_by_key(|(k, r)| (r.value, *k)).expect("restarts ≥ 1");
    if config.objective == CheckMode::Triple && config.r >= 3 {
        let floor = ceil_order(&rat(config.n as i128, config.r as i128 - 1));
        if best.value < floor {
            return Err(SearchError::TheoremViolation {
                found: best.value,
                floor,
                colouring: Box::new(best.best.clone()),
            });
        }
    }
    let ratio = rat((best.value * (config.r.max(1) - 1)) as i128, config.n as i128);
    Ok(SearchOutcome {
        best: best.best.clone(),
        best_objective: best.value,
        best_restart,
        ratio,
        log: results.into_iter().flat_map(|r| r.log).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{affine_colouring, constant_colouring};

    #[test]
    fn objective_examples() {
        assert_eq!(objective(&constant_colouring(6, 3).unwrap(), CheckMode::Double), 6);
        assert_eq!(objective(&affine_colouring(2, 2).unwrap(), CheckMode::Triple), 4);
        assert_eq!(objective(&affine_colouring(2, 1).unwrap(), CheckMode::Triple), 2);
    }

    #[test]
    fn small_k4_search_hits_the_floor() {
        let config =
            SearchConfig { iterations: 2_000, restarts: 2, seed: 7, ..SearchConfig::new(4, 3, CheckMode::Triple) };
        let out = anneal(&config).unwrap();
        assert_eq!(out.best_objective, 2);
        assert_eq!(objective(&out.best, CheckMode::Triple), 2);
        assert_eq!(out.ratio, rat(1, 1));
    }

    #[test]
    fn plateau_guide_reaches_the_affine_optimum() {
        let config = SearchConfig { seed: 1, plateau_weight: 1.0, ..SearchConfig::new(8, 3, CheckMode::Component) };
        let out = anneal(&config).unwrap();
        assert_eq!(out.best_objective, 4);
        assert_eq!(max_component(&out.best).size, 4);
    }

    #[test]
    fn bisection_guide_vanishes_on_the_affine_colouring() {
        let c = affine_colouring(2, 2).unwrap();
        assert_eq!(plateau_score(&c, CheckMode::Component), 0);
        assert!(plateau_score(&constant_colouring(8, 3).unwrap(), CheckMode::Component) > 0);
        // 8·8 per edge of K_8 for a single colour
        assert_eq!(plateau_score(&constant_colouring(8, 3).unwrap(), CheckMode::Double), 28 * 64);
    }

    #[test]
    fn same_seed_same_log() {
        let config =
            SearchConfig { iterations: 500, restarts: 3, seed: 11, ..SearchConfig::new(7, 3, CheckMode::Double) };
        let a = anneal(&config).unwrap();
        let b = anneal(&SearchConfig { threads: 2, ..config.clone() }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_configs_are_rejected() {
        let base = SearchConfig::new(5, 3, CheckMode::Double);
        for bad in [
            SearchConfig { cooling: 1.0, ..base.clone() },
            SearchConfig { iterations: 0, ..base.clone() },
            SearchConfig { restarts: 0, ..base.clone() },
            SearchConfig { plateau_weight: -1.0, ..base.clone() },
            SearchConfig { n: 1, ..base.clone() },
        ] {
            assert!(matches!(anneal(&bad), Err(SearchError::Config(_))));
        }
    }

    #[test]
    fn single_colour_search_is_trivial() {
        let out =
            anneal(&SearchConfig { iterations: 10, restarts: 1, ..SearchConfig::new(5, 1, CheckMode::Component) })
                .unwrap();
        assert_eq!(out.best_objective, 5);
        assert_eq!(out.ratio, rat(0, 1));
    }
}
