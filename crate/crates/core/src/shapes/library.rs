//! Named actions from the small rows of the results tables, rebuilt from a
//! concrete group and a generating triple of Miyamoto involutions.

use super::{axis_configurations, AxisAction};
use crate::permgrp::{Perm, PermGroup};

/// Group name, orbit sizes, and (for the two 2² actions on 2+2+2) a tag.
pub const STANDARD_ACTIONS: [(&str, &str); 11] = [
    ("1", "1+1+1"),
    ("2^2", "1+2+2"),
    ("2^2", "2+2+2a"),
    ("2^2", "2+2+2b"),
    ("2^3", "2+4+4"),
    ("S3", "1+3"),
    ("S4", "6"),
    ("S4", "3+6"),
    ("3^2:2", "9"),
    ("4^2:S3", "12"),
    ("PSL(2,7)", "21"),
];

fn cyc(n: usize, s: &str) -> Perm {
    Perm::parse_cycles(n, s).expect("literal permutation")
}

/// `(Z4)^2 : S3` as the sum-zero part of `Z4 wr S3` on 3 blocks of 4.
fn four_squared_s3() -> PermGroup {
    let shift = |t: [usize; 3]| {
        Perm::from_images((0..12).map(|p| 4 * (p / 4) + (p % 4 + t[p / 4]) % 4).collect()).expect("shift")
    };
    let swap = |i: usize, j: usize| {
        let mut img: Vec<usize> = (0..12).collect();
        for v in 0..4 {
            img.swap(4 * i + v, 4 * j + v);
        }
        Perm::from_images(img).expect("swap")
    };
    PermGroup::new(12, vec![shift([1, 3, 0]), shift([0, 1, 3]), swap(0, 1), swap(1, 2)]).expect("generators")
}

/// The group and generating triple behind a named action.
fn group_and_triple(group: &str, axes: &str) -> Option<(PermGroup, [Perm; 3])> {
    let out = match (group, axes) {
        ("1", _) => {
            let e = Perm::identity(1);
            (PermGroup::trivial(1), [e.clone(), e.clone(), e])
        }
        ("2^2", _) => {
            let (x, y) = (cyc(4, "(0 1)"), cyc(4, "(2 3)"));
            let g = PermGroup::new(4, vec![x.clone(), y.clone()]).ok()?;
            match axes {
                "1+2+2" => (g, [Perm::identity(4), x, y]),
                "2+2+2a" => (g, [x.clone(), y.clone(), &x * &y]),
                "2+2+2b" => (g, [x.clone(), y, x]),
                _ => return None,
            }
        }
        ("2^3", "2+4+4") => {
            let t = [cyc(6, "(0 1)"), cyc(6, "(2 3)"), cyc(6, "(4 5)")];
            (PermGroup::new(6, t.to_vec()).ok()?, t)
        }
        ("S3", _) => (PermGroup::symmetric(3), [Perm::identity(3), cyc(3, "(0 1)"), cyc(3, "(1 2)")]),
        ("S4", "6") => (PermGroup::symmetric(4), [cyc(4, "(0 1)"), cyc(4, "(1 2)"), cyc(4, "(2 3)")]),
        ("S4", "3+6") => (PermGroup::symmetric(4), [cyc(4, "(0 1)(2 3)"), cyc(4, "(1 2)"), cyc(4, "(0 1)")]),
        ("3^2:2", _) => {
            // point reflections p -> c - p of the affine plane over F3
            let refl = |c: (usize, usize)| {
                Perm::from_images(
                    (0..9).map(|p| 3 * ((3 + c.0 - p / 3 % 3) % 3) + (3 + c.1 - p % 3) % 3).collect(),
                )
                .expect("reflection")
            };
            let t = [refl((0, 0)), refl((1, 0)), refl((0, 1))];
            (PermGroup::new(9, t.to_vec()).ok()?, t)
        }
        ("4^2:S3", _) => {
            let g = four_squared_s3();
            let t = [cyc(12, "(0 4)(1 5)(2 6)(3 7)"), cyc(12, "(4 8)(5 9)(6 10)(7 11)"), cyc(12, "(0 5)(1 6)(2 7)(3 4)")];
            (g, t)
        }
        ("PSL(2,7)", _) => {
            let t = [cyc(7, "(2 4)(5 6)"), cyc(7, "(1 2)(3 6)"), cyc(7, "(0 1)(4 6)")];
            (PermGroup::new(7, t.to_vec()).ok()?, t)
        }
        _ => return None,
    };
    Some(out)
}

/// Builds one of [`STANDARD_ACTIONS`] by running the configuration search
/// and picking the result with the requested orbit sizes.
pub fn standard_action(group: &str, axes: &str) -> Option<AxisAction> {
    let (g, t) = group_and_triple(group, axes)?;
    let mut want: Vec<usize> = axes.trim_end_matches(['a', 'b']).split('+').map(|s| s.parse().ok()).collect::<Option<_>>()?;
    want.sort_unstable();
    axis_configurations(&g, [&t[0], &t[1], &t[2]]).ok()?.into_iter().find(|a| a.orbit_sizes() == want)
}
