use k3mat::curve::{named, param_to_point, point_to_param, WeierstrassModel};
use k3mat::exactnum::{rat, BigRational};
use k3mat::surface::MatrixTriple;

type Q = BigRational;

#[test]
fn witness_families_give_integral_eigenvalues() {
    let e = WeierstrassModel::<Q>::generic_fiber();
    for n in 1..=3 {
        let par = point_to_param(&e.mul(n, &named::p()).unwrap()).unwrap();
        for t in [rat(3, 1), rat(-5, 2), rat(7, 3)] {
            let c = par.eval(&t).unwrap().integer_coords();
            let m = MatrixTriple::new(c[3].clone(), c[4].clone(), c[5].clone());
            let eig = m.integral_eigenvalues().expect("integral eigenvalues");
            let mut got = [c[0].clone(), c[1].clone(), c[2].clone()];
            let mut want = eig.clone();
            got.sort();
            want.sort();
            assert_eq!(got, want, "n = {n}, t = {t}");
        }
    }
}

#[test]
fn sections_round_trip_through_families() {
    let e = WeierstrassModel::<Q>::generic_fiber();
    for n in [-2, -1, 1, 2, 3] {
        let pt = e.mul(n, &named::p()).unwrap();
        assert_eq!(param_to_point(&point_to_param(&pt).unwrap()).unwrap(), pt, "n = {n}");
    }
}
