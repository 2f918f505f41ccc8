use std::sync::Arc;

use neucode::analysis::facet_intersections;
use neucode::collapse::{
    elementary_collapse, free_pairs, is_collapsible, verify_certificate, CollapseMemo,
};
use neucode::complex::order_complex;
use neucode::format::{emit_code, parse_code};
use neucode::homology::{boundary_matrix, reduced_betti};
use neucode::realization::{cell_count, cell_region, enumerate_cells, realized_code_from_u};
use neucode::{
    AnalysisConfig, Analyzer, Code, Collapser, Engine, Face, SearchOptions, SimplicialComplex,
    StepMode, Verdict,
};
use proptest::prelude::*;

fn complex_on(n: u32, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(1u64..(1u64 << n), 1..=max_facets).prop_map(move |masks| {
        SimplicialComplex::from_faces(n, masks.into_iter().map(Face::from_bits)).unwrap()
    })
}

fn code_on(n: u32, max_words: usize) -> impl Strategy<Value = Code> {
    (prop::collection::vec(1u64..(1u64 << n), 1..=max_words), any::<bool>()).prop_map(
        move |(masks, empty)| {
            let mut words: Vec<Face> = masks.into_iter().map(Face::from_bits).collect();
            if empty {
                words.push(Face::EMPTY);
            }
            Code::new(n, words).unwrap()
        },
    )
}

fn betti(cx: &SimplicialComplex, p: u32) -> (Vec<usize>, usize) {
    let b = reduced_betti(cx, p).unwrap();
    (b.reduced_betti, b.reduced_betti_minus_one)
}

fn analyzer() -> Analyzer {
    Analyzer::new(AnalysisConfig {
        deterministic: true,
        ..AnalysisConfig::default()
    })
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closure_is_downward_closed(cx in complex_on(6, 5)) {
        let faces = cx.faces();
        for f in &faces {
            for s in f.subsets() {
                prop_assert!(cx.contains(s));
            }
        }
        prop_assert_eq!(faces.len(), cx.f_vector().iter().sum::<usize>() + 1);
    }

    #[test]
    fn link_of_link(cx in complex_on(6, 5), pick in any::<prop::sample::Index>(), split in any::<u64>()) {
        let faces: Vec<Face> = cx.faces().into_iter().filter(|f| !f.is_empty()).collect();
        let face = faces[pick.index(faces.len())];
        let sigma = face.intersection(Face::from_bits(split));
        let tau = face.difference(sigma);
        let direct = cx.link(face).unwrap();
        let nested = cx.link(sigma).unwrap().link(tau).unwrap();
        prop_assert_eq!(direct, nested);
    }

    #[test]
    fn cones_are_acyclic_and_detected(cx in complex_on(6, 5)) {
        let cone = cx.cone(7).unwrap();
        prop_assert!(cone.cone_apex().is_some());
        for p in [2, 3, 5] {
            prop_assert!(reduced_betti(&cone, p).unwrap().is_zero());
        }
        let base = cone.link(Face::singleton(7).unwrap()).unwrap();
        prop_assert_eq!(base.facets(), cx.facets());
    }

    #[test]
    fn boundary_of_boundary_vanishes(cx in complex_on(6, 6), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
        for k in 1..=cx.dimension() {
            let d_k = boundary_matrix(&cx, k - 1, p).unwrap();
            let d_k1 = boundary_matrix(&cx, k, p).unwrap();
            prop_assert!(d_k.mul(&d_k1).is_zero());
        }
    }

    #[test]
    fn euler_characteristic_matches_betti(cx in complex_on(7, 6), p in prop::sample::select(vec![2u32, 3, 5])) {
        let (b, _) = betti(&cx, p);
        let alternating: i64 = b.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        prop_assert_eq!(alternating, cx.euler_characteristic() - 1);
    }

    #[test]
    fn barycentric_subdivision_keeps_homology(cx in complex_on(5, 4)) {
        let faces: Vec<Face> = cx.faces().into_iter().filter(|f| !f.is_empty()).collect();
        let (sd, labels) = order_complex(&faces).unwrap();
        prop_assert_eq!(labels.len(), faces.len());
        prop_assert_eq!(sd.f_vector()[0], faces.len());
        prop_assert_eq!(sd.euler_characteristic(), cx.euler_characteristic());
        for p in [2, 3] {
            prop_assert_eq!(betti(&sd, p).0.iter().sum::<usize>(), betti(&cx, p).0.iter().sum::<usize>());
        }
    }

    #[test]
    fn canonical_key_is_injective(a in complex_on(5, 4), b in complex_on(5, 4)) {
        prop_assert_eq!(a == b, a.canonical_key() == b.canonical_key());
    }

    #[test]
    fn collapses_preserve_homology(cx in complex_on(6, 5)) {
        for step in free_pairs(&cx, StepMode::Collapse) {
            let next = elementary_collapse(&cx, step, StepMode::Collapse).unwrap();
            prop_assert!(next.faces().len() < cx.faces().len());
            for p in [2, 3] {
                prop_assert_eq!(betti(&next, p).0.iter().sum::<usize>(), betti(&cx, p).0.iter().sum::<usize>());
            }
        }
    }

    #[test]
    fn collapsible_complexes_are_acyclic(cx in complex_on(6, 5)) {
        let out = is_collapsible(&cx, Engine::Strict, 1_000_000).unwrap();
        if out.status == Verdict::Yes {
            prop_assert!(verify_certificate(&cx, out.certificate.as_ref().unwrap(), out.mode));
            prop_assert!(reduced_betti(&cx, 2).unwrap().is_zero());
        }
    }

    #[test]
    fn deleting_a_facet_of_a_simplex_boundary(n in 2u32..7) {
        let full = Face::full(n);
        let sphere = SimplicialComplex::from_faces(n, full.boundary_faces()).unwrap();
        let (b, _) = betti(&sphere, 2);
        prop_assert_eq!(b.iter().sum::<usize>(), 1);
        prop_assert_eq!(b[(n - 2) as usize], 1);
    }

    #[test]
    fn engines_agree(cx in complex_on(6, 5)) {
        let a = is_collapsible(&cx, Engine::Collapse, 2_000_000).unwrap();
        let b = is_collapsible(&cx, Engine::Strict, 2_000_000).unwrap();
        prop_assert_ne!(a.status, Verdict::Unknown);
        prop_assert_eq!(a.status, b.status);
    }

    #[test]
    fn shared_memo_is_sound(cxs in prop::collection::vec(complex_on(5, 4), 1..6)) {
        let memo = Arc::new(CollapseMemo::new());
        let shared = Collapser::with_memo(SearchOptions { greedy_restarts: 0, ..SearchOptions::default() }, memo);
        for cx in &cxs {
            let fresh = is_collapsible(cx, Engine::Strict, 1_000_000).unwrap();
            let reused = shared.is_collapsible(cx).unwrap();
            prop_assert_eq!(fresh.status, reused.status);
            if let Some(steps) = &reused.certificate {
                prop_assert!(verify_certificate(cx, steps, reused.mode));
            }
        }
    }

    #[test]
    fn facet_intersections_are_faces(cx in complex_on(6, 5)) {
        let xs = facet_intersections(&cx);
        for w in xs.windows(2) {
            prop_assert!(w[0].graded_cmp(&w[1]).is_lt());
        }
        for f in xs {
            prop_assert!(cx.contains(f));
            let containing: Vec<Face> = cx.facets().iter().copied().filter(|g| f.is_subset(*g)).collect();
            let meet = containing.iter().fold(Face::full(6), |acc, g| acc.intersection(*g));
            prop_assert_eq!(meet, f);
        }
    }

    #[test]
    fn sparsity_is_largest_word(code in code_on(6, 8)) {
        let max = code.words().iter().map(|w| w.len()).max().unwrap();
        prop_assert_eq!(code.sparsity(), max);
        prop_assert!(code.is_k_sparse(max));
        prop_assert!(max == 0 || !code.is_k_sparse(max - 1));
    }

    #[test]
    fn verdicts_are_consistent(code in code_on(5, 7)) {
        let a = analyzer();
        let r = a.classify(&code).unwrap();
        if r.locally_great.is_yes() {
            prop_assert!(r.locally_good.is_yes());
        }
        if r.max_intersection_complete {
            prop_assert!(r.locally_good.is_yes());
        }
        if let Some(w) = r.locally_good.witness {
            prop_assert!(!code.contains(w));
            prop_assert!(code.closure().contains(w));
        }
    }

    #[test]
    fn open_realization_reproduces_code(code in code_on(5, 10)) {
        prop_assert_eq!(realized_code_from_u(&code).unwrap(), code.without_empty());
    }

    #[test]
    fn code_files_round_trip(code in code_on(12, 10)) {
        prop_assert_eq!(parse_code(&emit_code(&code), None).unwrap(), code);
    }
}

#[test]
fn cells_partition_into_regions() {
    for n in 1..=5 {
        let cells: Vec<_> = enumerate_cells(n).unwrap().collect();
        assert_eq!(cells.len() as u64, cell_count(n));
        assert_eq!(cell_count(n), 3u64.pow(n) - 2u64.pow(n));
        let mut per_region = std::collections::BTreeMap::new();
        for c in &cells {
            assert!(c.in_closed_chamber(cell_region(c)));
            *per_region.entry(cell_region(c)).or_insert(0u64) += 1;
        }
        // a nonempty region P owns the cells (P, Z) with Z disjoint from P
        for (p, count) in per_region {
            assert!(!p.is_empty());
            assert_eq!(count, 2u64.pow(n - p.len() as u32));
        }
    }
}
