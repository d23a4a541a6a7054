mod common;

use std::collections::BTreeSet;

use apa_core::cycles::all_cycle_invariants;
use apa_core::linalg::det_of_rows;
use apa_core::normal::is_convex_positive_bijection;
use apa_core::sphere::positive_combination;
use apa_core::symbols::{act, automorphisms, compatible_symbols, is_group, match_to_standard, orbit, standard_arrangement};
use apa_core::{AntipodalArrangement, Generator, NormalSystem, OrderedField, Rational, Sign, SignedBijection, Symbol};
use common::*;

fn four_pairs(seed: u64) -> AntipodalArrangement<Rational> {
    random_normal_system(&mut rng(seed), 3, 4).as_arrangement().unwrap()
}

fn reps(arr: &AntipodalArrangement<Rational>) -> Vec<Vec<Rational>> {
    arr.points().iter().map(|p| p.rep().to_vec()).collect()
}

fn instantiate(reps: &[Vec<Rational>], l: i8) -> Vec<Rational> {
    let v = &reps[(l.unsigned_abs() - 1) as usize];
    if l > 0 {
        v.clone()
    } else {
        v.iter().map(|x| -x.clone()).collect()
    }
}

#[test]
fn compatible_sets_of_random_arrangements() {
    for seed in 0..25 {
        let arr = four_pairs(seed);
        let set = compatible_symbols(&arr).unwrap();
        assert_eq!(set.len(), 24);
        let first = *set.iter().next().unwrap();
        assert_eq!(orbit(first), set);
        for s in &set {
            for g in Generator::ALL {
                assert!(set.contains(&act(g, *s)));
            }
        }
        let v = reps(&arr);
        for s in &set {
            let t: Vec<Vec<Rational>> = s.triple.iter().map(|&l| instantiate(&v, l)).collect();
            let rows: Vec<&[Rational]> = t.iter().map(Vec::as_slice).collect();
            assert_eq!(det_of_rows(&rows).sign(), Sign::Negative);
            let c = positive_combination(&instantiate(&v, s.head), &rows).unwrap();
            assert!(c.signs().iter().all(|&x| x == Sign::Positive));
        }
    }
}

#[test]
fn every_four_pair_arrangement_has_48_automorphisms() {
    for seed in 100..110 {
        let auts = automorphisms(&four_pairs(seed)).unwrap();
        assert_eq!(auts.len(), 48);
        assert!(is_group(&auts));
    }
    let auts = automorphisms(&standard_arrangement()).unwrap();
    assert!(auts.contains(&SignedBijection::identity(4).negated()));
}

#[test]
fn matching_against_the_dictionary() {
    let standard = standard_arrangement();
    let s4 = NormalSystem::new(3, reps(&standard)).unwrap();
    let own = match_to_standard(&all_cycle_invariants(&standard).unwrap()).unwrap();
    assert!(own.iter().any(|w| w.map == SignedBijection::identity(4)));
    let flipped = match_to_standard(&all_cycle_invariants(&standard.total_flip()).unwrap()).unwrap();
    assert!(flipped.iter().any(|w| w.map == SignedBijection::identity(4).negated()));
    for seed in 200..215 {
        let arr = four_pairs(seed);
        let ns = NormalSystem::new(3, reps(&arr)).unwrap();
        let found = match_to_standard(&all_cycle_invariants(&arr).unwrap()).unwrap();
        assert_eq!(found.len(), 48);
        for w in found {
            assert!(is_convex_positive_bijection(&w.map, &ns, &s4).unwrap());
        }
    }
}

#[test]
fn generator_examples() {
    let s: Symbol = "4->(2,1,3)".parse().unwrap();
    assert_eq!(act(Generator::T12, s).to_string(), "-4->(-1,-2,-3)");
    let p: Symbol = "1->(2,3,4)".parse().unwrap();
    assert_eq!(act(Generator::T23, p).to_string(), "3->(-2,1,-4)");
    for g in Generator::ALL {
        assert_eq!(act(g, act(g, s)), s);
    }
    let listed: BTreeSet<Symbol> = match apa_core::fixtures::load_fixture("S4-symbols").unwrap().payload {
        apa_core::fixtures::Payload::Symbols { symbols, .. } => symbols.into_iter().collect(),
        _ => unreachable!(),
    };
    assert_eq!(orbit(s), listed);
}
