use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unexpected_curves::arrangement::{
    dual_arrangement, is_nearly_supersolvable, is_supersolvable, max_multiplicity, LineArrangement, PointConfiguration,
};
use unexpected_curves::certifier::{certify_with, dual_splitting};
use unexpected_curves::generators::{hexagon_lines, octagon_lines, polygonal, tictactoe, FieldChoice, TicTacToe};
use unexpected_curves::geometry::{dualize_line, dualize_point, incident, ProjLine, ProjPoint};
use unexpected_curves::interpolation::{ideal_dimension, FatPointScheme, SamplingOptions};
use unexpected_curves::splitting::{
    addition_chain, chain_from_supersolvable, empirical_splitting, nearly_supersolvable_splitting, supersolvable_chain,
    supersolvable_splitting,
};

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn distinct_lines() -> impl Strategy<Value = LineArrangement> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 3..12).prop_filter_map("need 3 distinct lines", |v| {
        let mut lines: Vec<ProjLine> = Vec::new();
        for (a, b, c) in v {
            if let Ok(l) = ProjLine::rational(a, b, c) {
                if !lines.contains(&l) {
                    lines.push(l);
                }
            }
        }
        (lines.len() >= 3).then(|| LineArrangement::new(lines).expect("distinct"))
    })
}

fn distinct_points() -> impl Strategy<Value = PointConfiguration> {
    prop::collection::vec((-3i64..=3, -3i64..=3, 0i64..=1), 3..11).prop_filter_map("need 3 distinct points", |v| {
        let mut pts: Vec<ProjPoint> = Vec::new();
        for (a, b, c) in v {
            if let Ok(p) = ProjPoint::rational(a, b, c) {
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
        }
        (pts.len() >= 3).then(|| PointConfiguration::new(pts).expect("distinct"))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partition_identity(a in distinct_lines()) {
        let sum: usize = a.singular_locus().entries.iter().map(|e| binom2(e.multiplicity())).sum();
        prop_assert_eq!(sum, binom2(a.len()));
    }

    #[test]
    fn splitting_sums_to_d_minus_one(a in distinct_lines()) {
        let t = empirical_splitting(&a, &SamplingOptions::default()).unwrap();
        prop_assert_eq!(t.total() + 1, a.len());
        if is_supersolvable(&a).0 {
            prop_assert_eq!(supersolvable_splitting(&a).unwrap(), t);
            prop_assert_eq!(supersolvable_chain(&a).unwrap().terminus(), t);
        }
    }

    #[test]
    fn duality_is_an_involution(a in distinct_lines()) {
        let z = a.dual_configuration();
        let back = z.dual_arrangement().unwrap();
        prop_assert_eq!(back.lines(), a.lines());
        for l in a.lines() {
            prop_assert_eq!(&dualize_point(&dualize_line(l)), l);
        }
    }

    #[test]
    fn singular_points_dualize_to_collinear_duals(a in distinct_lines()) {
        let duals = a.dual_configuration();
        for e in &a.singular_locus().entries {
            let l = dualize_point(&e.point);
            let on = duals.points().iter().filter(|p| incident(p, &l).unwrap()).count();
            prop_assert_eq!(on, e.multiplicity());
        }
        let ad = dual_arrangement(&a).unwrap();
        prop_assert_eq!(ad.len(), a.singular_locus().len());
    }

    #[test]
    fn interval_coherence(z in distinct_points()) {
        let v = certify_with(&z, &SamplingOptions::default(), false).unwrap();
        let t = v.splitting.unwrap();
        let width = z.len() as i64 - 2 * t.a() as i64 - 2;
        match v.interval {
            Some(i) => {
                prop_assert!(v.admits);
                prop_assert_eq!((i.high - i.low) as i64, width);
                prop_assert!(width >= 1);
            }
            None => prop_assert!(!v.admits),
        }
    }

    #[test]
    fn dimensions_are_monotone(z in distinct_points(), deg in 1usize..5, j in 0usize..4, seed in any::<u64>()) {
        let o = SamplingOptions::default().with_seed(seed);
        let fat = |m: usize| if m == 0 { FatPointScheme::empty() } else { FatPointScheme::generic(m, 1) };
        let a = ideal_dimension(&z, &fat(j), deg, &o).unwrap().dimension;
        let b = ideal_dimension(&z, &fat(j + 1), deg, &o).unwrap().dimension;
        prop_assert!(b <= a);
        let smaller = PointConfiguration::new(z.points()[1..].to_vec()).unwrap();
        let c = ideal_dimension(&smaller, &fat(j), deg, &o).unwrap().dimension;
        prop_assert!(a <= c);
    }

    #[test]
    fn modular_and_exact_routes_agree(z in distinct_points(), deg in 1usize..5, j in 0usize..3) {
        let fat = if j == 0 { FatPointScheme::empty() } else { FatPointScheme::generic(j, 9) };
        let o = SamplingOptions::default();
        let m = ideal_dimension(&z, &fat, deg, &o).unwrap();
        let e = ideal_dimension(&z, &fat, deg, &o.exact()).unwrap();
        prop_assert_eq!(m.dimension, e.dimension);
    }
}

#[test]
fn dual_splitting_sums_to_size_minus_one() {
    let z = tictactoe(1, 1, true).unwrap().dual_configuration();
    let t = dual_splitting(&z, &SamplingOptions::default()).unwrap();
    assert_eq!(t.total() + 1, z.len());
}

#[test]
fn supersolvable_max_multiplicity_is_modular() {
    for (k, j) in [(1, 0), (2, 0), (3, 0)] {
        let a = tictactoe(k, j, true).unwrap();
        let (ok, p) = is_supersolvable(&a);
        assert!(ok);
        let p = p.unwrap();
        let m = a.singular_locus().entries.iter().find(|e| e.point == p).unwrap().multiplicity();
        assert_eq!(m, max_multiplicity(&a));
    }
}

/// Permuting the lines added within one stage does not change where the chain ends.
#[test]
fn chain_terminus_ignores_order_within_stages() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let h = hexagon_lines();
    let base = LineArrangement::new(h.base.clone()).unwrap();
    let reference = chain_from_supersolvable(&base, &h.added()).unwrap();
    let stages = [&h.ell, &h.ell_prime, &h.m, &h.m_prime];
    for s in 0..stages.len() {
        let prefix: Vec<ProjLine> = stages[..s].iter().flat_map(|v| v.iter().cloned()).collect();
        let start = chain_from_supersolvable(&base, &prefix).unwrap();
        let want = chain_from_supersolvable(&base, &[prefix.clone(), stages[s].clone()].concat())
            .unwrap()
            .terminus();
        for _ in 0..5 {
            let mut stage = stages[s].clone();
            stage.shuffle(&mut rng);
            let c = addition_chain(&start.arrangement().unwrap(), start.terminus(), &stage).unwrap();
            assert_eq!(c.terminus(), want);
        }
    }
    assert_eq!(reference.terminus().to_string(), "(17,19)");

    let o = octagon_lines(FieldChoice::prime(3)).unwrap();
    for (s, stage) in [&o.ell, &o.m].into_iter().enumerate() {
        let prefix: Vec<ProjLine> = if s == 0 { Vec::new() } else { o.ell.clone() };
        let start = chain_from_supersolvable(&o.base, &prefix).unwrap();
        let want = addition_chain(&start.arrangement().unwrap(), start.terminus(), stage).unwrap().terminus();
        for _ in 0..5 {
            let mut shuffled = stage.clone();
            shuffled.shuffle(&mut rng);
            let c = addition_chain(&start.arrangement().unwrap(), start.terminus(), &shuffled).unwrap();
            assert_eq!(c.terminus(), want);
        }
    }
}

/// Four Addition-Deletion steps take the complete tic-tac-toe arrangement from `j` to `j + 1`.
#[test]
fn tictactoe_four_step_extension() {
    for (k, j) in [(1usize, 0usize), (2, 1), (3, 2), (3, 3)] {
        let a = tictactoe(k, j, true).unwrap();
        let t = empirical_splitting(&a, &SamplingOptions::default()).unwrap();
        let c = addition_chain(&a, t, &TicTacToe::next_diagonals(j)).unwrap();
        assert_eq!(c.counts()[0], 2 * k + 2 * j + 4);
        assert_eq!(c.terminus().to_string(), format!("({},{})", 2 * k + 3 + 2 * j, 2 * k + 5 + 2 * j));
    }
}

/// Odd complete polygonal arrangements are not supersolvable; when the nearly
/// supersolvable test holds, its closed form must match the empirical splitting.
#[test]
fn odd_complete_polygonal_nearly_supersolvable_route() {
    let o = SamplingOptions::default();
    for n in [3, 5, 7] {
        let a = polygonal(n, true, FieldChoice::prime(n as u64)).unwrap();
        assert!(!is_supersolvable(&a).0);
        let near = is_nearly_supersolvable(&a).unwrap();
        println!("P{n}bar nearly supersolvable: {}", near.holds);
        if near.holds {
            if let Ok(t) = nearly_supersolvable_splitting(&a) {
                assert_eq!(t, empirical_splitting(&a, &o).unwrap());
            }
        }
    }
}
