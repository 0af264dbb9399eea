mod support;

use std::sync::OnceLock;

use k3mat::exactnum::QuadElem;
use k3mat::lattice::Lattice;
use k3mat::mwlat::HeightContext;
use k3mat::nscat;
use proptest::prelude::*;
use support::*;

fn ctx() -> &'static HeightContext<QuadElem> {
    static CTX: OnceLock<HeightContext<QuadElem>> = OnceLock::new();
    CTX.get_or_init(|| HeightContext::new(&model()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_law_is_associative(x in combo(2), y in combo(2), z in combo(2)) {
        associativity(x, y, z)?;
    }

    #[test]
    fn height_pairing_is_bilinear(x in combo(2), y in combo(2), z in combo(2)) {
        bilinearity(ctx(), x, y, z)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn short_vectors_agree_with_box_scan(g in definite_gram(), norm in 1i64..=20) {
        short_vectors_match(&g, norm)?;
    }

    #[test]
    fn binary_disc_is_basis_invariant(a in 1i64..30, b in -10i64..10, c in 1i64..30, t in unimodular(2)) {
        prop_assume!(4 * a * c > b * b);
        let l = Lattice::new(k3mat::exactnum::Matrix::from_i64_rows(&[vec![2 * a, b], vec![b, 2 * c]])).unwrap();
        disc_invariant(&l, &t)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn ns_disc_is_basis_invariant(t in unimodular(20)) {
        disc_invariant(&nscat::ns_lattice().unwrap(), &t)?;
    }
}
