use walkwl_core::constructions::gallery;
use walkwl_core::graph::{are_isomorphic, parse_graph6};
use walkwl_core::hierarchy::{compare_pair, mine_corpus, Corpus, InvariantId, Verdict};
use walkwl_core::Graph;

fn mined_graphs(pair: &str) -> (Graph, Graph) {
    let mut it = pair.split(' ').map(|s| parse_graph6(s.as_bytes()).unwrap());
    (it.next().unwrap(), it.next().unwrap())
}

fn contains_pair(found: &[walkwl_core::hierarchy::SeparationCertificate], g: &Graph, h: &Graph) -> bool {
    found.iter().any(|c| {
        let (a, b) = mined_graphs(&c.pair);
        (are_isomorphic(&a, g).unwrap() && are_isomorphic(&b, h).unwrap())
            || (are_isomorphic(&a, h).unwrap() && are_isomorphic(&b, g).unwrap())
    })
}

#[test]
fn hexagon_pair_is_mined_from_small_graphs() {
    let corpus = Corpus::All(6).graphs().unwrap();
    let found = mine_corpus(&corpus, InvariantId::Wl1, InvariantId::Spec).unwrap();
    let e = gallery("c6_vs_2c3").unwrap();
    assert!(contains_pair(&found, &e.g, &e.h));
    assert!(found.iter().all(|c| c.passed()));
}

#[test]
fn genspec7_is_a_smallest_genspec_wm_separation() {
    let corpus = Corpus::All(7).graphs().unwrap();
    let found = mine_corpus(&corpus, InvariantId::Genspec, InvariantId::Wm).unwrap();
    let e = gallery("genspec7").unwrap();
    assert!(contains_pair(&found, &e.g, &e.h));
    assert!(found.iter().all(|c| mined_graphs(&c.pair).0.n() == 7));
}

#[test]
fn mining_ignores_corpus_order() {
    let mut corpus = Corpus::All(6).graphs().unwrap();
    let a = mine_corpus(&corpus, InvariantId::Wl1, InvariantId::Wl32).unwrap();
    corpus.reverse();
    let b = mine_corpus(&corpus, InvariantId::Wl1, InvariantId::Wl32).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn float_mining_matches_exact_mining_on_small_graphs() {
    let corpus = Corpus::All(6).graphs().unwrap();
    let exact = mine_corpus(&corpus, InvariantId::EA, InvariantId::Iso).unwrap();
    let float = mine_corpus(&corpus, "ea_float".parse().unwrap(), InvariantId::Iso).unwrap();
    let pairs = |v: &[walkwl_core::hierarchy::SeparationCertificate]| v.iter().map(|c| c.pair.clone()).collect::<Vec<_>>();
    assert_eq!(pairs(&exact), pairs(&float));
}

#[test]
fn spec_examples_for_compare_pair() {
    use InvariantId::*;
    let cases: [(&str, Vec<(InvariantId, Verdict)>); 3] = [
        ("c6_vs_2c3", vec![(Wl1, Verdict::Equal), (Spec, Verdict::Unequal), (Wl32, Verdict::Unequal)]),
        ("genspec7", vec![(Genspec, Verdict::Equal), (Wm, Verdict::Unequal), (InvariantId::EA, Verdict::Unequal)]),
        ("rattan_seppelt", vec![(Wl32, Verdict::Equal), (InvariantId::STRONG, Verdict::Unequal), (Wl2, Verdict::Unequal)]),
    ];
    for (name, expected) in cases {
        let e = gallery(name).unwrap();
        let ids: Vec<InvariantId> = expected.iter().map(|&(id, _)| id).collect();
        let mut cert = compare_pair(name, &e.g, &e.h, &ids);
        cert.expect(&expected);
        assert!(cert.passed(), "{name}: {:?}", cert.deltas);
    }
}

#[test]
fn wl2_is_skipped_above_its_cap() {
    let big = Corpus::Random { count: 1, n: 70, p: 0.5, seed: 1 }.graphs().unwrap().remove(0);
    let cert = compare_pair("big", &big, &big, &[InvariantId::Wl2, InvariantId::Wl1]);
    assert_eq!(cert.verdicts[&InvariantId::Wl2], Verdict::Skipped);
    assert_eq!(cert.verdicts[&InvariantId::Wl1], Verdict::Equal);
    assert!(cert.diagram_ok);
}
