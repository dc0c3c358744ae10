mod common;

use newton_zeta::germ::{deformation_index_sets, IndexSet};
use newton_zeta::lattice::LatticePolytope;
use newton_zeta::newton::{diagram_facets, restricted_support, zeta_full, zeta_full_trace, zeta_i};
use newton_zeta::zeta::FactoredZeta;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_deformation() -> impl Strategy<Value = newton_zeta::GermSeries> {
    (1usize..=3, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::deformation(&mut rng, n, 5)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn facets_are_complete_and_tight(f in arb_deformation()) {
        for i in deformation_index_sets(f.num_vars()) {
            let pts = restricted_support(&f, &i);
            for facet in diagram_facets(&f, &i).unwrap() {
                prop_assert!(facet.normal.is_strictly_positive());
                prop_assert!(facet.m >= 1 && facet.nvol >= 1);
                prop_assert_eq!(BigInt::from(facet.m), facet.normal.components()[0].clone());
                prop_assert_eq!(facet.face.affine_dim(), Some(i.len() - 1));
                let min = facet.normal.apply(&facet.face.vertices()[0]);
                prop_assert!(pts.iter().all(|p| facet.normal.apply(p) >= min));
                let tight: Vec<_> = pts.iter().filter(|p| facet.normal.apply(p) == min).cloned().collect();
                prop_assert!(facet.face.vertices().iter().all(|v| tight.contains(v)));
                prop_assert_eq!(&LatticePolytope::from_points(i.len(), &tight).unwrap(), &facet.face);
            }
        }
    }

    #[test]
    fn exponents_have_the_predicted_sign(f in arb_deformation()) {
        for i in deformation_index_sets(f.num_vars()) {
            let l = i.len() - 1;
            for facet in diagram_facets(&f, &i).unwrap() {
                let e = facet.exponent().unwrap();
                prop_assert_eq!(e.signum(), if l % 2 == 1 { 1 } else { -1 });
            }
            for &m in zeta_i(&f, &i).unwrap().factors().keys() {
                prop_assert!(m >= 1);
            }
        }
    }

    #[test]
    fn trace_starts_with_one_minus_t(f in arb_deformation()) {
        let t = zeta_full_trace(&f).unwrap();
        prop_assert_eq!(&t.leading, &FactoredZeta::factor(1, 1).unwrap());
        prop_assert_eq!(t.contributions.len(), 1 << (f.num_vars() - 1));
        let product = t.contributions.iter().fold(t.leading.clone(), |a, c| a.mul(&c.zeta));
        prop_assert_eq!(&product, &t.full);
        prop_assert_eq!(t.full.clone(), zeta_full(&f).unwrap());
    }

    #[test]
    fn axis_convention(f in arb_deformation()) {
        let has_axis_point = f.terms().keys().any(|e| e.entries()[1..].iter().all(|&k| k == 0));
        let z0 = zeta_i(&f, &IndexSet::new(vec![0], f.num_vars()).unwrap()).unwrap();
        if has_axis_point {
            prop_assert_eq!(z0, FactoredZeta::factor(1, -1).unwrap());
        } else {
            prop_assert!(z0.is_one());
        }
    }

    #[test]
    fn dummy_variable_invariance(f in arb_deformation()) {
        let identity: Vec<usize> = (0..f.num_vars()).collect();
        let padded = common::relabel(&f, f.num_vars() + 1, &identity);
        prop_assert!(zeta_full(&padded).unwrap().equals(&zeta_full(&f).unwrap()));
    }

    #[test]
    fn permutation_invariance(f in arb_deformation(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perm = common::z_permutation(&mut rng, f.num_vars() - 1);
        let g = common::relabel(&f, f.num_vars(), &perm);
        prop_assert!(zeta_full(&g).unwrap().equals(&zeta_full(&f).unwrap()));
    }

    #[test]
    fn coefficient_independence(f in arb_deformation(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::recoefficient(&mut rng, &f);
        prop_assert_eq!(zeta_full(&g).unwrap(), zeta_full(&f).unwrap());
        prop_assert_eq!(newton_zeta::zeta_torus(&g).unwrap(), newton_zeta::zeta_torus(&f).unwrap());
    }
}
