mod common;

use std::sync::Arc;

use common::{family, subdivided, wonderful, z};
use symvar_core::error::FanError;
use symvar_core::fan::{orbit_poset, CochamberFan};
use symvar_core::involution::OmegaHSpec;
use symvar_core::rootcore::DEFAULT_ENUMERATION_LIMIT;
use symvar_core::Rat;

#[test]
fn a1_inner_wonderful_ray() {
    let fan = wonderful("A1-inner", OmegaHSpec::Omega);
    assert_eq!(fan.rays(), &[z(&[2])]);
    assert!(fan.is_smooth() && fan.is_complete());
    // ⟨α, v⟩ = 1 on the primitive ray
    assert_eq!(fan.pair(&z(&[2]), &fan.rays()[0]), Rat::from_integer(1.into()));
}

#[test]
fn adjoint_wonderful_fan_is_smooth_simply_connected_is_not() {
    assert!(wonderful("A2-minus-id", OmegaHSpec::OmegaAd).is_smooth());
    let sc = wonderful("A2-minus-id", OmegaHSpec::Omega);
    assert!(!sc.is_smooth());
    let det = sc.ray_matrix(&[0, 1]).integer_determinant();
    assert_eq!(det.magnitude(), &3u32.into());
}

#[test]
fn two_cone_subdivision() {
    let fan = subdivided();
    assert!(fan.is_complete() && fan.is_smooth());
    assert_eq!(fan.faces().len(), 6);
    assert_eq!(fan.face(&[1]).unwrap(), vec![1]);
    assert_eq!(fan.face(&[0, 2]), Err(FanError::UnknownFace(vec![0, 2])));
    assert_eq!(fan.face_support(&[1]), vec![0, 1]);
    assert_eq!(fan.face_support(&[0]), vec![0]);
}

#[test]
fn one_cone_of_two_is_incomplete() {
    let fam = family("A2-minus-id", OmegaHSpec::OmegaAd);
    let fan = CochamberFan::new(fam, vec![z(&[1, 0]), z(&[1, 1])], vec![vec![0, 1]]).unwrap();
    assert!(!fan.is_complete());
    assert_eq!(orbit_poset(&fan, 100), Err(FanError::Incomplete));
}

#[test]
fn rejects_bad_inputs() {
    let fam = family("A2-minus-id", OmegaHSpec::OmegaAd);
    let mk = |rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>| {
        CochamberFan::new(fam.clone(), rays.iter().map(|r| z(r)).collect(), cones)
    };
    assert_eq!(mk(vec![vec![-1, 1], vec![0, 1]], vec![vec![0, 1]]), Err(FanError::OutsideCochamber(0)));
    assert_eq!(mk(vec![vec![0, 0], vec![0, 1]], vec![vec![0, 1]]), Err(FanError::ZeroRay(0)));
    assert_eq!(
        mk(vec![vec![1, 0], vec![0, 1], vec![1, 1]], vec![vec![0, 1], vec![1, 2]]),
        Err(FanError::ImproperIntersection(0, 1))
    );
    assert_eq!(mk(vec![vec![1, 0], vec![0, 1], vec![1, 1]], vec![vec![0, 1]]), Err(FanError::UnusedRay(2)));
    assert_eq!(mk(vec![vec![1, 0], vec![2, 0]], vec![vec![0, 1]]), Err(FanError::DuplicateRay(0, 1)));

    // on Ω the lattice is finer, so a unit pairing is not integral
    let sc = family("A2-minus-id", OmegaHSpec::Omega);
    let r = CochamberFan::new(sc, vec![z(&[1, 0]), z(&[0, 1])], vec![vec![0, 1]]);
    assert_eq!(r, Err(FanError::NotIntegral(0)));
}

#[test]
fn non_primitive_rays_are_primitivized() {
    let fam = family("A2-minus-id", OmegaHSpec::OmegaAd);
    let fan = CochamberFan::new(fam, vec![z(&[2, 0]), z(&[0, 3])], vec![vec![0, 1]]).unwrap();
    assert_eq!(fan.rays(), &[z(&[1, 0]), z(&[0, 1])]);
}

#[test]
fn poset_of_wonderful_and_subdivided_fans() {
    let w = wonderful("A2-minus-id", OmegaHSpec::OmegaAd);
    let p = orbit_poset(&w, DEFAULT_ENUMERATION_LIMIT).unwrap();
    assert_eq!(p.len(), 4);
    assert_eq!(p[0].translates, 1);
    // the cochamber is a fundamental domain: the full cone has |W̃| translates
    assert_eq!(p[3].translates, 6);
    assert_eq!(p[0].covered_by, vec![1, 2]);

    let s = orbit_poset(&subdivided(), DEFAULT_ENUMERATION_LIMIT).unwrap();
    assert_eq!(s.len(), 6);
    // [1,1] is interior to C, so its stabilizer is trivial
    let mid = s.iter().find(|f| f.rays == vec![1]).unwrap();
    assert_eq!(mid.support, vec![0, 1]);
    assert_eq!(mid.translates, 6);
    let edge = s.iter().find(|f| f.rays == vec![0]).unwrap();
    assert_eq!(edge.translates, 3);
}

#[test]
fn wonderful_ray_pairings_generate_the_dual_lattice() {
    for f in symvar_core::catalog::FIXTURES {
        for spec in [OmegaHSpec::Omega, OmegaHSpec::OmegaAd] {
            let Ok(fam) = f.family(spec) else { continue };
            let fan = CochamberFan::wonderful(Arc::clone(&fam));
            for l in fan.ray_lattice_coords() {
                assert_eq!(symvar_core::linalg::content(l), 1.into(), "{}", f.name);
            }
        }
    }
}
