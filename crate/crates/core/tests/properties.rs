use monostar::colouring::{edge_count, EdgeColouring};
use monostar::explorer::{anneal, objective, SearchConfig};
use monostar::generators::{affine_colouring, random_colouring};
use monostar::oracle::{exhaustive_theorem_check, CheckMode, EnumerationSpec, ExhaustParams};
use monostar::prover::RejectReason;
use monostar::stars::{max_double_star, max_triple_star};
use monostar::structure::{colour_components, max_component, subgraph_diameter};
use monostar::{parse_colouring, prove_global, verify_certificate, TripleStarCertificate};
use proptest::prelude::*;

fn colouring(max_n: usize, max_r: usize) -> impl Strategy<Value = EdgeColouring> {
    (2..=max_n, 1..=max_r).prop_flat_map(|(n, r)| {
        proptest::collection::vec(1..=r, edge_count(n))
            .prop_map(move |labels| EdgeColouring::new(n, r, labels).unwrap())
    })
}

fn sizes(c: &EdgeColouring, colour: usize) -> Vec<usize> {
    let mut s: Vec<usize> = colour_components(c, colour).unwrap().iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

/// Diameter of a tree by two breadth-first sweeps.
fn tree_diameter(adj: &[Vec<usize>]) -> usize {
    let far = |s: usize| {
        let mut dist = vec![usize::MAX; adj.len()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        let mut last = s;
        while let Some(v) = queue.pop_front() {
            last = v;
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        (last, dist[last])
    };
    far(far(0).0).1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn components_survive_vertex_relabelling(c in colouring(9, 4), seed in any::<u64>()) {
        let n = c.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let d = c.relabel_vertices(&perm);
        for colour in 1..=c.m() {
            prop_assert_eq!(sizes(&c, colour), sizes(&d, colour));
        }
        prop_assert_eq!(max_double_star(&c.view()).order(), max_double_star(&d.view()).order());
    }

    #[test]
    fn spanning_tree_diameter_matches_double_sweep(parents in proptest::collection::vec(any::<u16>(), 1..12)) {
        // Random tree on n vertices coloured 1, every other edge colour 2.
        let n = parents.len() + 1;
        let mut adj = vec![Vec::new(); n];
        let mut tree = std::collections::HashSet::new();
        for (i, p) in parents.iter().enumerate() {
            let (v, u) = (i + 1, *p as usize % (i + 1));
            adj[v].push(u);
            adj[u].push(v);
            tree.insert((u.min(v), u.max(v)));
        }
        let c = EdgeColouring::from_fn(n, 2, |i, j| if tree.contains(&(i, j)) { 1 } else { 2 }).unwrap();
        let all: Vec<usize> = (0..n).collect();
        prop_assert_eq!(subgraph_diameter(&c, 1, &all).unwrap(), Some(tree_diameter(&adj)));
    }

    #[test]
    fn star_component_chain(c in colouring(10, 4)) {
        let view = c.view();
        let d = max_double_star(&view).order();
        let comp = max_component(&c).size;
        prop_assert!(2 <= d && d <= comp && comp <= c.n());
        let t = max_triple_star(&view).map_or(2, |t| t.order());
        prop_assert!(t <= comp);
        if d >= 3 {
            prop_assert!(t >= d);
        }
    }

    #[test]
    fn two_colours_give_a_spanning_component(c in colouring(10, 2)) {
        // the complement of a disconnected graph is connected
        prop_assert_eq!(max_component(&c).size, c.n());
    }

    #[test]
    fn prove_then_verify(c in colouring(11, 3).prop_filter("three colours", |c| c.m() == 3)) {
        let view = c.view();
        let cert = prove_global(&view, 3).unwrap();
        prop_assert_eq!(verify_certificate(&c, &cert), Ok(()));
        prop_assert!(cert.order <= max_triple_star(&view).map_or(2, |t| t.order()));
        prop_assert!(2 * cert.order >= c.n());
        let json = cert.to_json();
        prop_assert_eq!(&TripleStarCertificate::from_json(&json).unwrap(), &cert);
        prop_assert_eq!(prove_global(&view, 3).unwrap().to_json(), json);
    }

    #[test]
    fn text_format_round_trips(c in colouring(8, 5)) {
        prop_assert_eq!(parse_colouring(&c.to_text()).unwrap(), c);
    }
}

#[test]
fn anneal_never_beats_the_exhaustive_minimum() {
    for (n, r, mode) in [(4, 3, CheckMode::Triple), (5, 3, CheckMode::Triple), (5, 3, CheckMode::Component)] {
        let exact = exhaustive_theorem_check(&ExhaustParams {
            spec: EnumerationSpec::new(n, r),
            mode,
            prove: false,
            local: None,
        })
        .unwrap()
        .minimum
        .unwrap();
        let out =
            anneal(&SearchConfig { iterations: 3_000, restarts: 3, seed: 5, ..SearchConfig::new(n, r, mode) }).unwrap();
        assert!(out.best_objective >= exact);
        assert_eq!(objective(&out.best, mode), out.best_objective);
    }
}

#[test]
fn shrinking_a_tight_certificate_is_rejected() {
    let c = affine_colouring(2, 2).unwrap();
    let mut cert = prove_global(&c.view(), 3).unwrap();
    assert_eq!(cert.order, 4);
    let leaf = *cert.vertices.iter().find(|v| !cert.centres.contains(v)).unwrap();
    cert.vertices.retain(|&v| v != leaf);
    cert.order -= 1;
    assert_eq!(verify_certificate(&c, &cert), Err(RejectReason::OrderBelowBound { order: 3, target: 4 }));
}

#[test]
fn certificate_from_another_colouring_is_rejected() {
    let a = random_colouring(9, 3, 1).unwrap();
    let cert = prove_global(&a.view(), 3).unwrap();
    let rejected = (2..40)
        .map(|seed| random_colouring(9, 3, seed).unwrap())
        .filter(|b| verify_certificate(b, &cert).is_err())
        .count();
    assert!(rejected > 30);
}
