use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use supereasy::intertwiner::build_t;
use supereasy::linalg::{rank, rank_fraction_free};
use supereasy::oracle::dense_t;
use supereasy::{Matrix, Partition, PartitionClass, SuperSpace};

/// Even partition on `k + l` legs from a shuffled leg order: consecutive
/// legs are paired and a pair joins the previous block when its flag is set.
fn even_partition(max_pairs: usize) -> impl Strategy<Value = Partition> {
    (0..=max_pairs)
        .prop_flat_map(|h| {
            let m = 2 * h;
            (
                Just((0..m).collect::<Vec<usize>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), h.saturating_sub(1)),
                0..=m,
            )
        })
        .prop_map(|(order, merge, k)| {
            let m = order.len();
            let mut labels = vec![0usize; m];
            let mut block = 0;
            for pair in 0..m / 2 {
                if pair > 0 && !merge[pair - 1] {
                    block += 1;
                }
                labels[order[2 * pair]] = block;
                labels[order[2 * pair + 1]] = block;
            }
            Partition::from_labels(k, m - k, &labels).expect("even blocks")
        })
}

fn space() -> impl Strategy<Value = SuperSpace> {
    let all = SuperSpace::all_up_to(3);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn canonical_form_is_stable(pi in even_partition(4)) {
        let labels: Vec<usize> = pi.labels().iter().map(|&x| x as usize).collect();
        prop_assert_eq!(Partition::from_labels(pi.k(), pi.l(), &labels).unwrap(), pi.clone());
        prop_assert!(PartitionClass::PEven.contains(&pi));
    }

    #[test]
    fn tensor_is_associative(a in even_partition(2), b in even_partition(2), c in even_partition(2)) {
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
        prop_assert_eq!(a.tensor(&Partition::empty()), a.clone());
    }

    #[test]
    fn involution_laws(a in even_partition(3), b in even_partition(2)) {
        prop_assert_eq!(a.involution().involution(), a.clone());
        prop_assert_eq!(a.tensor(&b).involution(), a.involution().tensor(&b.involution()));
        prop_assert_eq!(a.is_noncrossing(), a.involution().is_noncrossing());
    }

    #[test]
    fn composition_is_associative(a in even_partition(3), b in even_partition(3), c in even_partition(3)) {
        // re-split the legs so the middle rows line up
        let a = Partition::from_labels(a.points().min(2), a.points() - a.points().min(2), &as_usize(&a)).unwrap();
        prop_assume!(a.l() <= b.points());
        let b = Partition::from_labels(a.l(), b.points() - a.l(), &as_usize(&b)).unwrap();
        prop_assume!(b.l() <= c.points());
        let c = Partition::from_labels(b.l(), c.points() - b.l(), &as_usize(&c)).unwrap();
        let left = a.compose(&b).unwrap().0.compose(&c).unwrap().0;
        let right = a.compose(&b.compose(&c).unwrap().0).unwrap().0;
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_maps_to_kronecker(a in even_partition(2), b in even_partition(1), s in space()) {
        prop_assert_eq!(build_t(&a.tensor(&b), &s), build_t(&a, &s).kron(&build_t(&b, &s)));
    }

    #[test]
    fn sparse_build_matches_entrywise_oracle(a in even_partition(2), s in space()) {
        prop_assert_eq!(build_t(&a, &s).to_dense::<i64>(), dense_t(&a, &s));
    }

    #[test]
    fn bareiss_rank_matches_rational_elimination(
        rows in 1usize..6,
        cols in 1usize..6,
        seed in prop::collection::vec(-3i64..=3, 36),
        dup in any::<bool>(),
    ) {
        let mut m = Matrix::from_fn(rows, cols, |r, c| seed[r * 6 + c]);
        if dup && rows > 1 {
            // force a dependent row
            m = Matrix::from_fn(rows, cols, |r, c| if r == rows - 1 { seed[c] - 2 * seed[6 + c] } else { seed[r * 6 + c] });
        }
        let exact = rank_fraction_free(&m.map(|&x| BigInt::from(x)));
        let rational = rank(&m.map(|&x| BigRational::from_integer(BigInt::from(x))), 0.0);
        prop_assert_eq!(exact, rational);
        prop_assert!(exact <= rows.min(cols));
    }
}

fn as_usize(pi: &Partition) -> Vec<usize> {
    pi.labels().iter().map(|&x| x as usize).collect()
}
