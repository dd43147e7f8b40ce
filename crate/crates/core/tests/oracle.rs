//! The depth engines against an independent containment oracle.

mod common;

use common::{all_cells, distinct_set, members, oracle_depth};
use induced_core::{depth, depth_brute, depth_fast, has_fast_path, Family, RationalPoint};
use proptest::prelude::*;

const PLANAR: [Family; 9] = [
    Family::Rectangle,
    Family::Quadrant,
    Family::VSlab,
    Family::HSlab,
    Family::SlabBoth,
    Family::Skyline,
    Family::Disk,
    Family::Hypersphere,
    Family::DownTriangle,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planar_engines_match_oracle(set in distinct_set(2, 2..=14), qx in -400i128..400, qy in -400i128..400) {
        let mut queries = members(&set);
        queries.push(RationalPoint::new(vec![2 * qx + 1, 2 * qy + 1], 2).unwrap());
        queries.extend(all_cells(&set).into_iter().step_by(7));
        for family in PLANAR {
            for q in &queries {
                let expected = oracle_depth(&set, family, q);
                prop_assert_eq!(depth_brute(&set, family, q).unwrap().depth, expected, "brute {} at {}", family, q);
                prop_assert_eq!(depth(&set, family, q).unwrap().depth, expected, "depth {} at {}", family, q);
                if has_fast_path(family, 2) {
                    prop_assert_eq!(depth_fast(&set, family, q).unwrap().depth, expected, "fast {} at {}", family, q);
                }
            }
        }
    }

    #[test]
    fn box_engines_match_oracle(set in distinct_set(3, 2..=10)) {
        for q in members(&set).iter().chain(all_cells(&set).iter().step_by(5)) {
            let expected = oracle_depth(&set, Family::Box, q);
            prop_assert_eq!(depth_fast(&set, Family::Box, q).unwrap().depth, expected);
            prop_assert_eq!(depth_brute(&set, Family::Box, q).unwrap().depth, expected);
            prop_assert_eq!(depth_brute(&set, Family::Hypersphere, q).unwrap().depth, oracle_depth(&set, Family::Hypersphere, q));
        }
    }

    #[test]
    fn interval_engines_match_oracle(set in distinct_set(1, 1..=20)) {
        for q in members(&set).iter().chain(all_cells(&set).iter()) {
            let expected = oracle_depth(&set, Family::Interval, q);
            prop_assert_eq!(depth_fast(&set, Family::Interval, q).unwrap().depth, expected);
            prop_assert_eq!(depth_brute(&set, Family::Interval, q).unwrap().depth, expected);
        }
    }

    #[test]
    fn slab_both_is_the_sum_of_slabs(set in distinct_set(2, 2..=12), qx in -300i128..300, qy in -300i128..300) {
        let q = RationalPoint::new(vec![2 * qx + 1, 2 * qy + 1], 2).unwrap();
        let both = depth_fast(&set, Family::SlabBoth, &q).unwrap().depth;
        let v = depth_fast(&set, Family::VSlab, &q).unwrap().depth;
        let h = depth_fast(&set, Family::HSlab, &q).unwrap().depth;
        prop_assert_eq!(both, v + h);
    }
}

#[test]
fn disk_engine_on_cocircular_points() {
    // Eight points on the circle x^2 + y^2 = 25 with the query at the centre and on the circle.
    let set = induced_core::PointSet::planar(&[(5, 0), (4, 3), (3, 4), (0, 5), (-5, 0), (-4, -3), (-3, -4), (0, -5)])
        .unwrap();
    for q in [RationalPoint::new(vec![0, 0], 1).unwrap(), RationalPoint::new(vec![1, 1], 2).unwrap()] {
        let expected = oracle_depth(&set, Family::Disk, &q);
        assert_eq!(depth_fast(&set, Family::Disk, &q).unwrap().depth, expected);
    }
}
