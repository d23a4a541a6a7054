use apa_core::fixtures::*;
use apa_core::normal::find_isomorphisms;

#[test]
fn every_verifiable_fixture_matches() {
    let reports = verify_all().unwrap();
    assert_eq!(reports.len(), VERIFIABLE.len());
    for r in &reports {
        assert!(r.is_ok(), "{r}");
        assert!(r.checked > 0);
    }
}

#[test]
fn all_ids_load() {
    for id in fixture_ids() {
        let f = load_fixture(id).unwrap();
        assert_eq!(f.id, id);
    }
    assert!(load_fixture("U3").is_err());
}

#[test]
fn equations_hold_and_round_trip() {
    let mut total = 0;
    for (id, system) in [("U1-equations", "U1"), ("U2-equations", "U2")] {
        let vectors = normal_system(system).unwrap().vectors().to_vec();
        let Payload::Equations { equations, .. } = load_fixture(id).unwrap().payload else {
            panic!("{id} is not an equation list");
        };
        for eq in &equations {
            assert!(eq.holds(&vectors).unwrap(), "{eq}");
            let again: Equation = eq.to_string().parse().unwrap();
            assert_eq!(&again, eq);
        }
        total += equations.len();
    }
    assert_eq!(total, 30);
}

#[test]
fn a_wrong_equation_is_reported() {
    let vectors = normal_system("U1").unwrap().vectors().to_vec();
    let eq: Equation = "3u4 = u1 + 2u2 + 2u3 = (1,2,3)".parse().unwrap();
    assert!(!eq.holds(&vectors).unwrap());
    assert!("3u4 = u1".parse::<Equation>().is_err());
}

#[test]
fn the_two_systems_are_not_isomorphic() {
    let u1 = normal_system("U1").unwrap();
    let u2 = normal_system("U2").unwrap();
    assert!(find_isomorphisms(&u1, &u2).unwrap().is_empty());
    assert!(!find_isomorphisms(&u1, &u1).unwrap().is_empty());
}

#[test]
fn pair_graph_distinguishes_the_systems() {
    let g1 = compatible_pair_graph(&normal_system("U1").unwrap()).unwrap();
    let g2 = compatible_pair_graph(&normal_system("U2").unwrap()).unwrap();
    for g in [&g1, &g2] {
        for (v, nbrs) in g.iter() {
            for w in nbrs {
                assert!(g[w].contains(v), "edges are symmetric");
            }
            let neg = [(v[0].0, -v[0].1), (v[1].0, -v[1].1)];
            assert_eq!(g[&neg].len(), nbrs.len(), "negation is an automorphism");
        }
    }
    let lonely = &g1[&[(0, -1), (1, 1)]];
    assert_eq!(lonely.iter().collect::<Vec<_>>(), vec![&[(3, 1), (5, -1)]]);
    assert!(g2.values().all(|n| n.len() >= 2));
}
