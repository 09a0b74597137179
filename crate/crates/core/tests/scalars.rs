use num_bigint::BigInt;
use supereasy::groups::{membership_residual, sample_element};
use supereasy::homspace::commutant_dimension;
use supereasy::linalg::{rank, rank_fraction_free};
use supereasy::{Family, GroupElementF32, GroupElementF64, IntegerMatrix, Rational, RationalMatrix, Sign, SuperSpace};

#[test]
fn single_precision_samples_are_members() {
    for s in SuperSpace::all_up_to(4) {
        for family in Family::ALL {
            let u: GroupElementF32 = sample_element(family, &s, 3).unwrap();
            let r = membership_residual(&u.matrix, family, &s, 1e-4).unwrap();
            assert!(r.member, "{family} {s}: {r}");
        }
    }
}

#[test]
fn precisions_agree_on_commutant() {
    let s = SuperSpace::new(1, 0, Sign::Minus).unwrap();
    let wide = commutant_dimension::<f64>(Family::Obar, 0, 4, &s, 8, 2).unwrap();
    let narrow = commutant_dimension::<f32>(Family::Obar, 0, 2, &s, 8, 2).unwrap();
    assert_eq!((wide, narrow), (2, 1));
    let u: GroupElementF64 = sample_element(Family::Obar, &s, 2).unwrap();
    assert_eq!(u.matrix.nrows(), 2);
}

#[test]
fn exact_ranks_agree() {
    let j = SuperSpace::new(2, 1, Sign::Plus).unwrap().super_identity::<i64>();
    let ints: IntegerMatrix = j.map(|&x| BigInt::from(x));
    let rats: RationalMatrix = j.map(|&x| Rational::from_integer(BigInt::from(x)));
    assert_eq!(rank_fraction_free(&ints), 5);
    assert_eq!(rank(&rats, 0.0), 5);
}
