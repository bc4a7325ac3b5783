//! Acceptance suite: ten exhaustively checked criteria over the small-graph
//! corpora, each printing one PASS line (run with `--nocapture` to see
//! them). Everything asserts exactly; a failed criterion fails its test.

use colorfix_core::coloring::{chromatic_number, chromatic_polynomial_value};
use colorfix_core::construct::{build_chain, close_chain, odd_wheel};
use colorfix_core::criticality::{check_k_critical, is_k_critical, NonCriticality};
use colorfix_core::enumerate::enumerate_connected_graphs;
use colorfix_core::graph::{parse_graph6, to_graph6, Graph};
use colorfix_core::harness::{
    default_chain_set, verify_claims, ClaimId, CorpusSpec, Verdict, VerifyOptions,
};
use colorfix_core::{named, oracle, planarity};
use serde_json::json;
use std::sync::OnceLock;

/// All connected graphs on 1..=n vertices, shared across criteria.
fn corpus_up_to(n: usize) -> &'static [Graph] {
    static CORPUS7: OnceLock<Vec<Graph>> = OnceLock::new();
    static CORPUS8: OnceLock<Vec<Graph>> = OnceLock::new();
    let build = |max: usize| -> Vec<Graph> {
        (1..=max)
            .flat_map(|s| enumerate_connected_graphs(s).expect("within cap"))
            .collect()
    };
    match n {
        7 => CORPUS7.get_or_init(|| build(7)),
        8 => CORPUS8.get_or_init(|| build(8)),
        _ => panic!("acceptance corpora are n <= 7 or n <= 8"),
    }
}

fn pass(id: usize, name: &str) {
    println!("ACCEPTANCE {id} {name}: PASS");
}

/// 1. chromatic_number and chromatic_polynomial_value agree with the naive
///    labeled-coloring oracle on every connected graph with n <= 7.
#[test]
fn a01_coloring_correctness() {
    let corpus = corpus_up_to(7);
    assert_eq!(
        corpus.iter().filter(|g| g.n() == 7).count(),
        853,
        "the n = 7 slice has 853 classes"
    );
    for g in corpus {
        let naive_chi = oracle::chromatic_number_naive(g);
        let (chi, witness) = chromatic_number(g);
        assert_eq!(chi, naive_chi, "chi mismatch on {}", to_graph6(g));
        assert!(witness.is_proper(g));
        assert_eq!(witness.num_colors(), chi);
        for k in 2..=4usize {
            assert_eq!(
                chromatic_polynomial_value(g, k).unwrap(),
                oracle::count_proper_colorings_naive(g, k),
                "polynomial mismatch on {} at k={k}",
                to_graph6(g)
            );
        }
    }
    pass(1, "coloring-correctness");
}

/// 2. Criticality ground truths, including the exhaustive n = 5 run.
#[test]
fn a02_criticality_ground_truths() {
    let k4 = is_k_critical(&Graph::complete(4), 4).expect("K4 is 4-critical");
    assert!(k4.verify(&Graph::complete(4)));
    let w5 = odd_wheel(5).unwrap().graph;
    let w5cert = is_k_critical(&w5, 4).expect("W5 is 4-critical");
    assert!(w5cert.verify(&w5));
    assert!(matches!(
        check_k_critical(&Graph::cycle(6), 3),
        Err(NonCriticality::WrongChromaticNumber { chi: 2 })
    ));
    let k5 = is_k_critical(&Graph::complete(5), 5).expect("K5 is 5-critical");
    assert!(k5.verify(&Graph::complete(5)));
    for g in enumerate_connected_graphs(5).unwrap() {
        assert!(
            is_k_critical(&g, 4).is_none(),
            "no 4-critical graph exists on 5 vertices, found {}",
            to_graph6(&g)
        );
    }
    pass(2, "criticality-ground-truths");
}

/// 3. Claim C1 at k = 4 over all 4-critical graphs on <= 8 vertices, plus
///    the Grötzsch graph.
#[test]
fn a03_c1_edge_deletion_identity() {
    let corpus = CorpusSpec::explicit(corpus_up_to(8).to_vec());
    let reports = verify_claims(&corpus, &[ClaimId::C1], &VerifyOptions::default()).unwrap();
    assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
    let four_critical = reports
        .iter()
        .filter(|r| r.witness["k"] == json!(4))
        .count();
    assert_eq!(four_critical, 9, "1 + 0 + 1 + 2 + 5 four-critical graphs on 4..=8 vertices");

    let gz = named::groetzsch();
    assert!(!planarity::is_planar(&gz));
    assert_eq!(gz.n(), 11);
    let reports = verify_claims(
        &CorpusSpec::explicit(vec![gz]),
        &[ClaimId::C1],
        &VerifyOptions::default(),
    )
    .unwrap();
    assert_eq!(reports.len(), 1, "the Grötzsch graph is C1-relevant");
    assert_eq!(reports[0].verdict, Verdict::Pass);
    assert_eq!(reports[0].witness["k"], json!(4));
    pass(3, "c1-edge-deletion-identity");
}

/// 4. Claim C2: every 4-critical graph with a universal vertex on <= 8
///    vertices is an odd wheel.
#[test]
fn a04_c2_universal_vertex_wheels() {
    let corpus = CorpusSpec::explicit(corpus_up_to(8).to_vec());
    let reports = verify_claims(&corpus, &[ClaimId::C2], &VerifyOptions::default()).unwrap();
    assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
    // K4, the 5-wheel, and the 7-wheel.
    assert_eq!(reports.len(), 3);
    pass(4, "c2-universal-vertex-wheels");
}

/// 5. Claim C3: no non-wheel 4-critical graph on <= 8 vertices has a
///    semantically fixed vertex among vertices with a non-neighbor.
#[test]
fn a05_c3_no_fixed_vertex_off_wheels() {
    let corpus = CorpusSpec::explicit(corpus_up_to(8).to_vec());
    let reports = verify_claims(&corpus, &[ClaimId::C3], &VerifyOptions::default()).unwrap();
    assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
    // 9 four-critical graphs minus the 3 wheels.
    assert_eq!(reports.len(), 6);
    pass(5, "c3-no-fixed-vertex-off-wheels");
}

/// 6. Claim C5: every planar connected graph on <= 8 vertices is at most
///    4-chromatic.
#[test]
fn a06_c5_four_colors_suffice_at_desk_scale() {
    let corpus = CorpusSpec::explicit(corpus_up_to(8).to_vec());
    let reports = verify_claims(&corpus, &[ClaimId::C5], &VerifyOptions::default()).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert_eq!(
            r.verdict,
            Verdict::Pass,
            "planar graph {} exceeded four colors: {}",
            r.graph6,
            r.witness
        );
    }
    pass(6, "c5-four-colors-at-desk-scale");
}

/// 7. Claim C6 chain bundle for [3], [5], [3,3], [3,5], [5,5], [3,3,3].
#[test]
fn a07_c6_chain_bundle() {
    let corpus = CorpusSpec::explicit(Vec::new());
    let options = VerifyOptions::default();
    assert_eq!(
        options
            .chains
            .iter()
            .map(|c| c.cycle_lengths().to_vec())
            .collect::<Vec<_>>(),
        vec![vec![3], vec![5], vec![3, 3], vec![3, 5], vec![5, 5], vec![3, 3, 3]]
    );
    let reports = verify_claims(&corpus, &[ClaimId::C6], &options).unwrap();
    assert_eq!(reports.len(), 6);
    for r in &reports {
        assert_eq!(r.verdict, Verdict::Pass, "chain {}", r.witness["chain"]);
        assert_eq!(r.witness["chain_chi"], json!(4));
        assert_eq!(r.witness["hub_pairs_identical"], json!(true));
        assert_eq!(r.witness["separations_hold"], json!(true));
        assert_eq!(r.witness["chain_planar"], json!(true));
        assert_eq!(r.witness["closed_chi"], json!(5));
        assert_eq!(r.witness["closed_planar"], json!(false));
        // Informational, recorded per chain: is the closure 5-critical?
        assert!(r.witness["closed_critical"].is_boolean());
        println!(
            "  chain [{}]: closed_critical = {}",
            r.witness["chain"].as_str().unwrap(),
            r.witness["closed_critical"]
        );
    }
    pass(7, "c6-chain-bundle");
}

/// 8. Planarity validation battery: oracle agreement on all connected
///    graphs with n <= 7 and the named graphs.
#[test]
fn a08_planarity_battery() {
    for g in corpus_up_to(7) {
        assert_eq!(
            planarity::is_planar(g),
            oracle::is_planar_by_subdivision_search(g),
            "disagreement on {}",
            to_graph6(g)
        );
    }
    assert!(!planarity::is_planar(&Graph::complete(5)));
    let k33 = Graph::from_edges(
        6,
        &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
    )
    .unwrap();
    assert!(!planarity::is_planar(&k33));
    assert!(!planarity::is_planar(&named::petersen()));
    for len in [3, 5, 7, 9] {
        assert!(planarity::is_planar(&odd_wheel(len).unwrap().graph));
    }
    for spec in default_chain_set() {
        let chain = build_chain(&spec);
        assert!(planarity::is_planar(&chain.graph), "chain {spec}");
        assert!(!planarity::is_planar(&close_chain(&chain)), "closure {spec}");
    }
    pass(8, "planarity-battery");
}

/// 9. Determinism and parallel equivalence of the verification runs,
///    exercised through the actual binary.
#[test]
fn a09_determinism_and_parallel_equivalence() {
    let dir = std::env::temp_dir().join("colorfix-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let mut outputs = Vec::new();
    for (tag, jobs) in [("j1", "1"), ("j4", "4"), ("j1-again", "1")] {
        let path = dir.join(format!("n7-{tag}.jsonl"));
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_colorfix"))
            .args([
                "verify",
                "-n",
                "7",
                "--claims",
                "C1..C7",
                "--jobs",
                jobs,
                "-o",
                path.to_str().unwrap(),
            ])
            .output()
            .expect("binary runs");
        assert!(
            out.status.success(),
            "verify -n 7 failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        outputs.push(std::fs::read(&path).unwrap());
        std::fs::remove_file(&path).ok();
    }
    assert_eq!(outputs[0], outputs[1], "jobs=1 and jobs=4 reports differ");
    assert_eq!(outputs[0], outputs[2], "repeated runs differ");
    assert!(!outputs[0].is_empty());
    pass(9, "determinism-and-parallel-equivalence");
}

/// 10. graph6 round-trip over the entire n <= 7 corpus.
#[test]
fn a10_graph6_round_trip() {
    let corpus = corpus_up_to(7);
    assert_eq!(corpus.len(), 996);
    for g in corpus {
        let s = to_graph6(g);
        let back = parse_graph6(&s).unwrap();
        assert_eq!(&back, g, "round trip broke on {s}");
        assert_eq!(to_graph6(&back), s);
    }
    pass(10, "graph6-round-trip");
}
