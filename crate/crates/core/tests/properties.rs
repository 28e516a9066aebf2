use proptest::prelude::*;

use gendelta::omp::{self, Omp, Restriction, Stat};
use gendelta::paths::PldPath;
use gendelta::qt::{IntPoly, QtRational};
use gendelta::symfunc::{Basis, Partition, SymFun};

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 0..4)
        .prop_map(|terms| terms.into_iter().fold(IntPoly::zero(), |acc, (c, a, b)| &acc + &IntPoly::monomial(c, a, b)))
}

fn rational() -> impl Strategy<Value = QtRational> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| QtRational::try_new(n, d))
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| prop::sample::select(Partition::all(n)))
}

fn symfun() -> impl Strategy<Value = SymFun> {
    prop::collection::vec((partition(4), -2i64..=2), 1..4).prop_map(|terms| {
        let terms = terms.into_iter().map(|(l, c)| (l, QtRational::from_int(c)));
        SymFun::from_terms(Basis::S, 4, terms).unwrap()
    })
}

/// A partition from `OP(m, n)^k` with `m + n <= 5`.
fn omp() -> impl Strategy<Value = Omp> {
    (0usize..=2, 1usize..=3)
        .prop_flat_map(|(m, n)| (Just(m), Just(n), 0..=n))
        .prop_filter_map("nonempty class", |(m, n, k)| {
            let all = omp::enumerate_omp(m, n, k, Restriction::None, false);
            (!all.is_empty()).then_some(all)
        })
        .prop_flat_map(prop::sample::select)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
    }

    #[test]
    fn printed_rationals_parse_back(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<QtRational>().unwrap(), a);
    }

    #[test]
    fn basis_changes_round_trip(f in symfun(), b in prop::sample::select(vec![Basis::M, Basis::E, Basis::H, Basis::P])) {
        let g = f.to_basis(b).to_basis(Basis::S);
        prop_assert_eq!(g.terms().collect::<Vec<_>>(), f.terms().collect::<Vec<_>>());
    }

    #[test]
    fn printed_symfuns_parse_back(f in symfun()) {
        prop_assert_eq!(f.to_string().parse::<SymFun>().unwrap(), f.clone());
        prop_assert_eq!(SymFun::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn omega_is_an_involution(f in symfun()) {
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn printed_omps_parse_back(pi in omp()) {
        prop_assert_eq!(pi.to_string().parse::<Omp>().unwrap(), pi);
    }

    #[test]
    fn standardization_keeps_statistics(pi in omp()) {
        for stat in Stat::ALL {
            let st = omp::standardize(&pi, stat);
            prop_assert!(st.is_standard());
            prop_assert_eq!(stat.eval(&st), stat.eval(&pi), "{} {}", stat, st);
        }
    }

    #[test]
    fn phi_and_theta_transport(pi in omp()) {
        let a = omp::phi(&pi);
        let b = omp::theta(&pi);
        prop_assert_eq!(omp::inv(&a), omp::dinv(&pi));
        prop_assert_eq!(omp::inv(&b), omp::maj(&pi));
        for img in [&a, &b] {
            prop_assert_eq!(img.content(), pi.content());
            prop_assert_eq!(img.num_blocks(), pi.num_blocks());
        }
        if Restriction::R.admits(&pi) {
            prop_assert!(Restriction::R.admits(&a) && Restriction::R.admits(&b));
        }
    }

    #[test]
    fn maps_to_paths_invert(pi in omp().prop_filter("R-restricted", |p| Restriction::R.admits(p))) {
        let p: PldPath = omp::xi_inv(&pi).unwrap();
        prop_assert_eq!(p.area(), 0);
        prop_assert_eq!(p.dinv(), omp::dinv(&pi));
        prop_assert_eq!(omp::xi(&p).unwrap(), pi.clone());
        let q = omp::eta_inv(&pi).unwrap();
        prop_assert_eq!(q.dinv(), 0);
        prop_assert_eq!(q.area(), omp::maj(&pi));
        prop_assert_eq!(omp::eta(&q).unwrap(), pi.clone());
        prop_assert_eq!(p.to_string().parse::<PldPath>().unwrap(), p);
    }
}
