//! End-to-end checks from complexes through K-theory, against brute-force
//! oracles that do not share code with the library's pipeline.

use std::collections::BTreeMap;

use ctrace::{
    based_free_split, builtin_space, induced_endomorphism, kunneth, rational_homotopy,
    rational_k_theory, sigma_image, AlgebraSpec, CohomologyEndomorphism, CohomologyProfile,
    QMatrix, Rational, SimplicialComplex, SpaceDescription,
};
use proptest::prelude::*;

/// Theorem dimension by exhaustive enumeration over (cohomology degree k,
/// generator j): each class of degree k paired with s_{2j−1} lands in
/// total degree 2j − 1 − k.
fn enumerate_dims(betti: &[usize], n: usize) -> BTreeMap<i64, usize> {
    let mut dims = BTreeMap::new();
    for (k, &b) in betti.iter().enumerate() {
        for j in 1..=n {
            let d = 2 * j as i64 - 1 - k as i64;
            if b > 0 && d >= 0 {
                *dims.entry(d).or_insert(0) += b;
            }
        }
    }
    dims
}

fn profile_from_betti(betti: &[usize]) -> CohomologyProfile {
    let entries = betti
        .iter()
        .enumerate()
        .map(|(k, &b)| (k, (0..b).map(|i| format!("e{k}_{i}")).collect()))
        .collect();
    CohomologyProfile::new("random", entries).unwrap()
}

#[test]
fn triangulated_three_sphere_matches_builtin() {
    let complex = SimplicialComplex::simplex_boundary(4).unwrap();
    let computed = complex.cohomology("boundary of the 4-simplex");
    let builtin = builtin_space("sphere", &["3"]).unwrap();
    assert_eq!(computed.betti_numbers(), builtin.betti_numbers());

    let from_complex = rational_homotopy(&AlgebraSpec::new(computed, 3, true).unwrap());
    let from_builtin = rational_homotopy(&AlgebraSpec::new(builtin, 3, true).unwrap());
    assert_eq!(from_complex.dims(), from_builtin.dims());
    let bidegrees = |pi: &ctrace::PiProfile| -> Vec<(i64, i64)> {
        pi.elements().iter().map(|e| e.bidegree()).collect()
    };
    assert_eq!(bidegrees(&from_complex), bidegrees(&from_builtin));
}

#[test]
fn space_file_to_sigma() {
    let text = r#"{"complex": {"vertices": ["a","b","c","d"],
        "facets": [["a","b","c"],["a","b","d"],["a","c","d"],["b","c","d"]]}, "name": "S^2"}"#;
    let profile = SpaceDescription::from_json(text).unwrap().profile();
    assert_eq!(profile.betti_numbers(), vec![1, 0, 1]);
    let spec = AlgebraSpec::new(profile, 2, true).unwrap();
    let pi = rational_homotopy(&spec);
    // x_2⊗s_1 is truncated; x_2⊗s_3 sits in degree 1
    assert_eq!(pi.dims(), BTreeMap::from([(1, 2), (3, 1)]));
    let k = rational_k_theory(&spec).unwrap();
    assert_eq!((k.even(), k.odd()), (2, 0));
    let sigma = sigma_image(&pi, &k).unwrap();
    assert_eq!(
        sigma.hit_degrees().into_iter().collect::<Vec<_>>(),
        vec![2, 4]
    );
}

#[test]
fn torus_split() {
    let s1 = builtin_space("sphere", &["1"]).unwrap();
    let t2 = kunneth(&s1, &s1);
    let spec = AlgebraSpec::new(t2, 3, true).unwrap();
    let (based, free) = based_free_split(&spec).unwrap();
    assert_eq!(free.len(), 3);
    // b₁ = 2 classes against s_1, s_3, s_5; b₂ = 1 against s_3, s_5
    assert_eq!(based.len(), 2 * 3 + 2);
    assert_eq!(based.dim(0), 2);
}

fn betti_strategy() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0usize..=3, 0..=7).prop_map(|mut tail| {
        tail.insert(0, 1);
        tail
    })
}

proptest! {
    #[test]
    fn dimensions_match_enumeration(betti in betti_strategy(), n in 1usize..=5) {
        let spec = AlgebraSpec::new(profile_from_betti(&betti), n, true).unwrap();
        let pi = rational_homotopy(&spec);
        prop_assert_eq!(pi.dims(), enumerate_dims(&betti, n));
        prop_assert!(pi.elements().iter().all(|e| e.total_degree() >= 0));
    }

    #[test]
    fn induced_endomorphisms_compose(
        betti in betti_strategy(),
        n in 1usize..=4,
        seed_f in proptest::collection::vec(-3i64..=3, 64),
        seed_g in proptest::collection::vec(-3i64..=3, 64),
    ) {
        let profile = profile_from_betti(&betti);
        let spec = AlgebraSpec::new(profile.clone(), n, true).unwrap();
        let build = |seed: &[i64]| {
            let mut it = seed.iter().cycle();
            let blocks = profile
                .entries()
                .iter()
                .map(|(&k, labels)| {
                    let b = labels.len();
                    let entries = (0..b * b).map(|_| Rational::from(*it.next().unwrap())).collect();
                    (k, QMatrix::from_entries(b, b, entries).unwrap())
                })
                .collect();
            CohomologyEndomorphism::new(&profile, blocks).unwrap()
        };
        let (f, g) = (build(&seed_f), build(&seed_g));
        let lhs = induced_endomorphism(&f.compose(&g).unwrap(), &spec).unwrap();
        let rhs = induced_endomorphism(&f, &spec)
            .unwrap()
            .compose(&induced_endomorphism(&g, &spec).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
