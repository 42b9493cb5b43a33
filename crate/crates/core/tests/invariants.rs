use std::collections::HashSet;

use proptest::prelude::*;

use chainspace::chain::{chi_holomorphic, dual_parameter, ChainType, StabilityParameter};
use chainspace::chambers::ChamberDecomposition;
use chainspace::geometry::functional::{AffineFunctional, Halfspace};
use chainspace::geometry::polygon::ParamBox;
use chainspace::geometry::rational::{int, Rational};
use chainspace::linear::oracle::{all_reps, hom_ext_dims, oracle_exists_semistable, oracle_is_semistable, FiniteFieldRep};
use chainspace::linear::{chi_linear, in_v_set, interval_pairing, DimensionVector, IntervalModule};
use chainspace::params::birational::birationality_boundary;
use chainspace::params::rank_maximal::{
    rank_maximal_region, MapFlags, PHI1_GEN_SURJECTIVE, PHI1_INJECTIVE, PHI2_GEN_SURJECTIVE, PHI2_INJECTIVE,
};
use chainspace::params::special::{region_1m1, region_m1n};
use chainspace::params::standard::{standard_hyperplane, standard_region, standard_signature};
use chainspace::params::vanishing::flip_codim_lower_bound;
use chainspace::params::walls::{enumerate_walls, rank_signatures, wall_for_signature, SubchainSignature};

fn interval(n: usize) -> impl Strategy<Value = IntervalModule> {
    (0..=n).prop_flat_map(move |p| (Just(p), p..=n)).prop_map(move |(p, q)| IntervalModule::new(p, q, n).unwrap())
}

fn chain_type(len: usize, max_rank: i64) -> impl Strategy<Value = ChainType> {
    prop::collection::vec((0..=max_rank, -8i64..=8), len)
        .prop_map(|v| {
            let ranks: Vec<i64> = v.iter().map(|x| x.0).collect();
            let degs: Vec<i64> = v.iter().map(|x| if x.0 == 0 { 0 } else { x.1 }).collect();
            ChainType::of(&ranks, &degs)
        })
        .prop_filter("nonzero", |t| t.total_rank() > 0)
}

fn positive_type(len: usize, max_rank: i64) -> impl Strategy<Value = ChainType> {
    (prop::collection::vec(1..=max_rank, len), prop::collection::vec(-6i64..=6, len))
        .prop_map(|(r, d)| ChainType::of(&r, &d))
}

fn canonical_halfspace(h: &Halfspace) -> Halfspace {
    h.canonical()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interval_pairing_matches_linear_algebra(
        (m2, m1) in (1usize..=4).prop_flat_map(|n| (interval(n), interval(n))),
        q in prop::sample::select(vec![2u8, 3]),
    ) {
        let p = interval_pairing(&m2, &m1).unwrap();
        let (hom, ext) = hom_ext_dims(&FiniteFieldRep::interval(q, &m2), &FiniteFieldRep::interval(q, &m1)).unwrap();
        prop_assert_eq!(p.hom, hom as i64);
        prop_assert_eq!(p.ext, ext as i64);
        prop_assert_eq!(p.chi, chi_linear(&m2.dimension_vector(), &m1.dimension_vector()).unwrap());
    }

    #[test]
    fn chi_is_additive(
        (a, b, s) in (2usize..=4).prop_flat_map(|len| (chain_type(len, 3), chain_type(len, 3), chain_type(len, 3))),
        g in 0i64..=5,
    ) {
        let t = a.checked_add(&b).unwrap();
        prop_assert_eq!(chi_holomorphic(&t, &s, g).unwrap(), chi_holomorphic(&a, &s, g).unwrap() + chi_holomorphic(&b, &s, g).unwrap());
        prop_assert_eq!(chi_holomorphic(&s, &t, g).unwrap(), chi_holomorphic(&s, &a, g).unwrap() + chi_holomorphic(&s, &b, g).unwrap());
    }

    #[test]
    fn v_set_members_have_zero_chi(a in prop::collection::vec(0usize..=2, 3), b in prop::collection::vec(0usize..=2, 3)) {
        prop_assume!(a.iter().sum::<usize>() > 0 && b.iter().sum::<usize>() > 0);
        let (r1, r2) = (DimensionVector::of(&a), DimensionVector::of(&b));
        if in_v_set(&r1, &r2, 12).unwrap().is_some() {
            prop_assert_eq!(chi_linear(&r2, &r1).unwrap(), 0);
        }
    }

    #[test]
    fn wall_complement_symmetry(t in positive_type(3, 3), pick in any::<prop::sample::Index>(), e in -12i64..=12) {
        let sigs = rank_signatures(&t);
        let sigma = SubchainSignature::new(sigs[pick.index(sigs.len())].clone(), e);
        let w = wall_for_signature(&t, &sigma).unwrap();
        let c = wall_for_signature(&t, &sigma.complement(&t)).unwrap();
        prop_assert_eq!(w.kind, c.kind);
        prop_assert_eq!(w.functional.canonical(), c.functional.canonical());
    }

    #[test]
    fn standard_subchain_wall_is_h_i(t in positive_type(3, 3), i in 0usize..2) {
        let w = wall_for_signature(&t, &standard_signature(&t, i)).unwrap();
        prop_assert_eq!(w.functional, standard_hyperplane(&t, i).unwrap().canonical());
    }

    #[test]
    fn standard_hyperplanes_lie_in_boundary(t in prop_oneof![positive_type(2, 3), positive_type(3, 2)]) {
        let bx = ParamBox::cube(t.n(), -40, 40).unwrap();
        let boundary: HashSet<AffineFunctional> =
            birationality_boundary(&t, &bx).unwrap().into_iter().map(|b| b.functional).collect();
        for i in 0..t.n() {
            let h = standard_hyperplane(&t, i).unwrap().canonical();
            if bx.line_meets_closed(&h) {
                prop_assert!(boundary.contains(&h), "h_{} = {} missing", i, h);
            }
        }
    }

    #[test]
    fn m1n_region_specializes_general_generators(m in 2i64..=5, n in 1i64..=4, d in prop::collection::vec(-8i64..=8, 3)) {
        let t = ChainType::of(&[m, 1, n], &d);
        let special = region_m1n(&t).unwrap().report;
        let std = standard_region(&t).unwrap();
        let flags = MapFlags { phi1_injective: true, phi2_gen_surjective: n > 1, ..MapFlags::default() };
        let general = rank_maximal_region(&t, &flags).unwrap();
        let pairs = [
            (special.halfspaces[0].halfspace.clone(), general.get(PHI1_INJECTIVE).cloned()),
            (special.halfspaces[1].halfspace.clone(), std.halfspaces.first().map(|h| h.halfspace.clone())),
            (special.halfspaces[2].halfspace.clone(), std.halfspaces.get(1).map(|h| h.halfspace.clone())),
        ];
        for (a, b) in pairs {
            prop_assert_eq!(canonical_halfspace(&a), canonical_halfspace(&b.unwrap()));
        }
        if n > 1 {
            let iv = special.halfspaces[3].halfspace.clone();
            prop_assert_eq!(canonical_halfspace(&iv), canonical_halfspace(general.get(PHI2_GEN_SURJECTIVE).unwrap()));
        }
    }

    #[test]
    fn one_m_one_region_specializes_general_generators(m in 2i64..=5, d in prop::collection::vec(-8i64..=8, 3)) {
        let t = ChainType::of(&[1, m, 1], &d);
        let special = region_1m1(&t).unwrap().report;
        let std = standard_region(&t).unwrap();
        let flags = MapFlags { phi1_gen_surjective: true, phi2_injective: true, ..MapFlags::default() };
        let general = rank_maximal_region(&t, &flags).unwrap();
        let expected = [
            std.halfspaces[0].halfspace.clone(),
            std.halfspaces[1].halfspace.clone(),
            general.get(PHI2_INJECTIVE).unwrap().clone(),
            general.get(PHI1_GEN_SURJECTIVE).unwrap().clone(),
        ];
        for (a, b) in special.halfspaces.iter().zip(&expected) {
            prop_assert_eq!(canonical_halfspace(&a.halfspace), canonical_halfspace(b));
        }
    }

    #[test]
    fn codim_bound_is_genus_minus_one(g in 2i64..=10) {
        let b = flip_codim_lower_bound(g).unwrap();
        prop_assert_eq!(b.value, g - 1);
        prop_assert_eq!(b.minimizing_m, 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_respects_duality(
        dims in prop::collection::vec(0usize..=2, 3),
        a in prop::collection::vec(-3i64..=3, 2),
        code in any::<prop::sample::Index>(),
    ) {
        prop_assume!(dims.iter().sum::<usize>() > 0);
        let dv = DimensionVector::of(&dims);
        let reps: Vec<FiniteFieldRep> = all_reps(&dv, 2).unwrap().collect();
        let rep = &reps[code.index(reps.len())];
        let alpha = StabilityParameter::from_free_ints(&a);
        for strict in [false, true] {
            let here = oracle_is_semistable(rep, &alpha, strict).unwrap().semistable;
            let there = oracle_is_semistable(&rep.dual(), &dual_parameter(&alpha), strict).unwrap().semistable;
            prop_assert_eq!(here, there);
        }
    }

    #[test]
    fn chambers_partition_and_degenerate_monotonically(t in positive_type(3, 2), half in 2i64..=4) {
        let bx = ParamBox::cube(2, -half, half).unwrap();
        let lines = enumerate_walls(&t, &bx).unwrap().functionals();
        let d = ChamberDecomposition::from_lines(&lines, &bx).unwrap();
        prop_assert_eq!(d.total_measure(), int(4 * half * half));
        for c in &d.chambers {
            prop_assert_eq!(d.locate(&c.sample).unwrap(), c.id);
            if c.dim == 2 {
                prop_assert!(c.signs.iter().all(|&s| s != 0));
                for &nb in &c.neighbors {
                    let flips = c.signs.iter().zip(&d.chambers[nb].signs).filter(|(x, y)| x != y).count();
                    prop_assert_eq!(flips, 1);
                }
            } else {
                // A lower-dimensional chamber only adds zeros to the signs of
                // the chambers whose closure contains it.
                for &up in &c.neighbors {
                    let u = &d.chambers[up];
                    prop_assert_eq!(u.dim, c.dim + 1);
                    for (s, v) in c.signs.iter().zip(&u.signs) {
                        prop_assert!(*s == 0 || s == v);
                    }
                    prop_assert!(c.signs.iter().filter(|&&s| s == 0).count() > u.signs.iter().filter(|&&s| s == 0).count());
                }
            }
        }
    }
}

/// Linear chains are chains of degree-zero type; stability for a linear
/// chain only sees the walls through the origin of that type, so the
/// existence verdict is constant on chambers.
#[test]
fn oracle_is_constant_on_chambers() {
    let bx = ParamBox::cube(2, -3, 3).unwrap();
    for dims in [[1usize, 1, 1], [2, 1, 1], [1, 2, 1], [1, 1, 2], [2, 2, 1], [1, 2, 2]] {
        let ranks: Vec<i64> = dims.iter().map(|&x| x as i64).collect();
        let t = ChainType::of(&ranks, &[0, 0, 0]);
        let lines = enumerate_walls(&t, &bx).unwrap().functionals();
        let d = ChamberDecomposition::from_lines(&lines, &bx).unwrap();
        let dv = DimensionVector::of(&dims);
        for c in d.full_dimensional() {
            let verdict = |p: &[Rational]| {
                oracle_exists_semistable(&dv, &StabilityParameter::from_free(p), 2, false).unwrap()
            };
            let at_sample = verdict(&c.sample);
            for corner in &c.closure {
                // Strictly inside: three parts sample, one part corner.
                let p: Vec<Rational> =
                    c.sample.iter().zip(corner).map(|(s, v)| (s * int(3) + v) / int(4)).collect();
                assert_eq!(d.locate(&p).unwrap(), c.id);
                assert_eq!(verdict(&p), at_sample, "dims {dims:?}, chamber {}", c.id);
            }
        }
    }
}
