mod common;

use proptest::prelude::*;
use starpres::classify::symmetry_group;
use starpres::presentation::Presentation;
use starpres::registry;
use starpres::stargraph::{check_special, hyperbolic_flag, SimpleGraph, SpecialCertificate, StarGraph};
use starpres::words::{Letter, Word};

fn one(w: &Word) -> Presentation {
    Presentation::one_relator(w.clone()).unwrap()
}

fn oracle_view(g: &StarGraph) -> [[bool; 6]; 6] {
    let mut adj = [[false; 6]; 6];
    for &(a, b) in g.multiplicity().keys() {
        if a != b {
            adj[a][b] = true;
            adj[b][a] = true;
        }
    }
    adj
}

/// Oracle vertex numbering (x,y,z,X,Y,Z) to the library's letter indices.
fn relabel(adj: &[[bool; 6]; 6]) -> [[bool; 6]; 6] {
    let idx = |v: usize| Letter { generator: (v % 3) as u16, inverse: v >= 3 }.index();
    let mut out = [[false; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            out[idx(i)][idx(j)] = adj[i][j];
        }
    }
    out
}

fn cyclic_words(rank: usize, len: usize) -> Vec<Word> {
    let alphabet = if rank == 1 { "xX" } else { "xyXY" };
    common::cyclic_words(alphabet.as_bytes(), len).iter().map(|w| Word::parse(w, rank).unwrap()).collect()
}

fn rank3_word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0u16..3, any::<bool>()), 3..14).prop_filter_map("cyclically reduced", |v| {
        let w = Word::raw(3, v.into_iter().map(|(generator, inverse)| Letter { generator, inverse }).collect()).unwrap();
        (w.is_cyclically_reduced() && !w.is_empty()).then_some(w)
    })
}

#[test]
fn examples() {
    let w2 = Word::parse("x1 x2 x2 x1", 2).unwrap();
    let g = StarGraph::build(&one(&w2));
    assert_eq!(g.multiplicity().len(), 4);
    assert!(g.multiplicity().values().all(|&m| m == 1));
    assert!(g.is_knn(2));

    let r1 = Word::parse("x^2 y^2 z^2 x z y", 3).unwrap();
    let g = StarGraph::build(&one(&r1));
    assert_eq!(g.simple_graph().edges().len(), 9);
    assert!(g.is_knn(3));
    assert_eq!(check_special(&one(&r1)), Some(SpecialCertificate { m: 2, k: 9, nu: 1 }));
    let sq = one(&r1.power(2).unwrap());
    assert_eq!(StarGraph::build(&sq).simple_graph(), g.simple_graph());
    assert_eq!(check_special(&sq), Some(SpecialCertificate { m: 2, k: 18, nu: 1 }));

    let xy = Word::parse("xy", 2).unwrap();
    let g = StarGraph::build(&one(&xy));
    assert_eq!(g.total_multiplicity(), 2);
    assert_eq!(g.multiplicity().len(), 2);
    let xyxy = StarGraph::build(&one(&xy.power(2).unwrap()));
    assert_eq!(xyxy.simple_graph().edges().len(), 2);
    assert!(xyxy.multiplicity().values().all(|&m| m == 2));
    assert!(!xyxy.is_knn(2));

    assert!(SimpleGraph::from_edges(4, []).edges().is_empty());
}

#[test]
fn analysis_examples() {
    let cycle = SimpleGraph::from_edges(6, (0..6).map(|i| (i.min((i + 1) % 6), i.max((i + 1) % 6))));
    let a = cycle.analyze();
    assert_eq!((a.girth, a.diameter), (Some(6), Some(3)));
    let k22 = SimpleGraph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]);
    let a = k22.analyze();
    assert_eq!((a.girth, a.diameter, a.min_degree), (Some(4), Some(2), 2));
    assert!(a.bipartite);
    assert!(k22.is_complete_bipartite(2));
}

#[test]
fn hyperbolic_boundary() {
    assert!(hyperbolic_flag(2, 9));
    assert!(!hyperbolic_flag(2, 4));
    assert!(!hyperbolic_flag(3, 3));
    for m in 2..12 {
        for k in 3..40 {
            let lhs = 1.0 / m as f64 + 2.0 / k as f64;
            let expected = lhs < 1.0 - 1e-12;
            assert_eq!(hyperbolic_flag(m, k), expected, "({m},{k})");
        }
    }
}

#[test]
fn admissible_words_are_k33() {
    for w in registry::admissible_words() {
        let adj = oracle_view(&StarGraph::build(&one(&w)));
        assert_eq!(adj, relabel(&common::star_adjacency(w.to_compact().as_bytes())));
        assert!(common::is_k33(&adj));
        assert_eq!(check_special(&one(&w)), Some(SpecialCertificate { m: 2, k: 9, nu: 1 }), "{}", w.to_compact());
    }
}

/// No presentation on at most two generators is special: single relators
/// up to length 9 and pairs of relators up to length 4, exhaustively.
#[test]
fn low_rank_never_special() {
    for rank in 1..=2 {
        let mut by_len = Vec::new();
        for len in 1..=9 {
            let ws = cyclic_words(rank, len);
            for w in &ws {
                assert_eq!(check_special(&one(w)), None, "{}", w.to_indexed());
            }
            by_len.push(ws);
        }
        for len in 3..=4 {
            let ws = &by_len[len - 1];
            for (i, a) in ws.iter().enumerate() {
                for b in &ws[i + 1..] {
                    let p = Presentation::new(rank, vec![a.clone(), b.clone()]).unwrap();
                    assert_eq!(check_special(&p), None, "{} , {}", a.to_indexed(), b.to_indexed());
                }
            }
        }
    }
}

#[test]
fn relabelling_preserves_analysis() {
    let group = symmetry_group(3);
    let words: Vec<Word> = registry::admissible_words().into_iter().chain((0..12).map(registry::group_relator)).collect();
    for w in &words {
        let base = StarGraph::build(&one(w)).simple_graph().analyze();
        for p in &group {
            let image = one(&p.apply(w));
            assert_eq!(StarGraph::build(&image).simple_graph().analyze(), base);
            assert_eq!(check_special(&image), check_special(&one(w)));
        }
    }
}

proptest! {
    #[test]
    fn rotation_and_inversion_keep_multiplicities(w in rank3_word(), shift in 0usize..20) {
        let g = StarGraph::build(&one(&w));
        prop_assert_eq!(&StarGraph::build(&one(&w.rotate(shift % w.len()))), &g);
        prop_assert_eq!(&StarGraph::build(&one(&w.invert())), &g);
        prop_assert_eq!(g.total_multiplicity(), w.len());
    }

    #[test]
    fn powers_scale_multiplicities(w in rank3_word(), alpha in 1usize..4) {
        let g = StarGraph::build(&one(&w));
        let h = StarGraph::build(&one(&w.power(alpha).unwrap()));
        prop_assert_eq!(h.simple_graph(), g.simple_graph());
        for (e, m) in g.multiplicity() {
            prop_assert_eq!(h.multiplicity()[e], alpha * m);
        }
    }

    #[test]
    fn agrees_with_oracle(w in rank3_word()) {
        let g = StarGraph::build(&one(&w));
        let ours = oracle_view(&g);
        let theirs = relabel(&common::star_adjacency(w.to_compact().as_bytes()));
        prop_assert_eq!(ours, theirs);
        let without_loops = SimpleGraph::from_edges(6, g.simple_graph().edges().into_iter().filter(|(a, b)| a != b));
        let a = without_loops.analyze();
        prop_assert_eq!(a.girth, common::girth(&ours));
        prop_assert_eq!(a.diameter, common::diameter(&ours));
    }

    #[test]
    fn concise_refinement_keeps_edges(w in rank3_word(), shift in 0usize..20) {
        let rels = vec![w.clone(), w.rotate(shift % w.len()), w.invert(), Word::parse("xX", 3).unwrap()];
        let p = starpres::stargraph::concise_refine_relators(3, &rels);
        prop_assert_eq!(p.relators().len(), 1);
        prop_assert_eq!(StarGraph::build(&p).simple_graph(), StarGraph::build(&one(&w)).simple_graph());
    }
}
