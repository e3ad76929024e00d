//! Property tests for the exact core and the symbolic constructions.

use glasner::check::{check_pair, entries_independent, find_violation};
use glasner::exact::{determinant, left_kernel_integer, smith_normal_form, IntMat};
use glasner::poly::{IntPoly, PolyMat};
use glasner::unipotent::{symbolic_power, word_product, UnipotentSystem};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn intmat(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMat> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            IntMat::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

/// Products of elementary unipotents `I + c·E_ij` (i < j), conjugated by a
/// permutation so the result is not always upper triangular.
fn unipotent(d: usize) -> impl Strategy<Value = IntMat> {
    (
        prop::collection::vec((0..d, 0..d, -3i64..=3), 0..6),
        Just((0..d).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(move |(ops, perm)| {
            let mut u = IntMat::identity(d);
            for (i, j, c) in ops {
                if i < j {
                    let mut e = IntMat::identity(d);
                    e[(i, j)] = c.into();
                    u = u.checked_mul(&e).unwrap();
                }
            }
            let mut p = IntMat::zeros(d, d);
            for (i, &j) in perm.iter().enumerate() {
                p[(i, j)] = BigInt::one();
            }
            p.transpose().checked_mul(&u).unwrap().checked_mul(&p).unwrap()
        })
}

fn polymat2(deg: usize, bound: i64) -> impl Strategy<Value = PolyMat> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, deg + 1), 4).prop_map(|e| {
        PolyMat::new(2, e.iter().map(|c| IntPoly::from_ints(c)).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_reconstructs_and_kernel_annihilates(m in intmat(5, 20)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.left.checked_mul(&s.diag).unwrap().checked_mul(&s.right).unwrap(), m.clone());
        prop_assert!(determinant(&s.left).abs().is_one());
        prop_assert!(determinant(&s.right).abs().is_one());
        let kernel = left_kernel_integer(&m);
        prop_assert_eq!(kernel.len(), m.rows() - s.rank());
        for v in kernel {
            prop_assert!(m.vec_mul(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn powers_and_words_evaluate_as_products(
        u in unipotent(3),
        v in unipotent(3),
        n1 in -6i64..=6,
        n2 in -6i64..=6,
    ) {
        let inverse_pow = |g: &IntMat, n: i64| {
            if n >= 0 {
                g.pow(n as u32)
            } else {
                glasner::exact::inverse_integral(g).unwrap().pow((-n) as u32)
            }
        };
        let p = symbolic_power(&u, 0, 1).unwrap();
        prop_assert_eq!(p.eval(&[BigInt::from(n1)]).unwrap(), inverse_pow(&u, n1));
        let sys = UnipotentSystem::new(vec![u.clone(), v.clone()]).unwrap();
        let w = word_product(&sys, 3).unwrap();
        let expect = inverse_pow(&u, n1).checked_mul(&inverse_pow(&v, n2)).unwrap().checked_mul(&inverse_pow(&u, n2 - n1)).unwrap();
        prop_assert_eq!(w.eval(&[BigInt::from(n1), BigInt::from(n2), BigInt::from(n2 - n1)]).unwrap(), expect);
    }

    #[test]
    fn independence_matches_pair_checks(a in polymat2(3, 2), w1 in -3i64..=3, w2 in -3i64..=3) {
        prop_assume!((w1, w2) != (0, 0));
        let w = vec![BigInt::from(w1), BigInt::from(w2)];
        let independent = entries_independent(&a, &w).unwrap();
        let mut all_pairs = true;
        for v1 in -12i64..=12 {
            for v2 in -12i64..=12 {
                if (v1, v2) != (0, 0) && !check_pair(&a, &[v1.into(), v2.into()], &w).unwrap() {
                    all_pairs = false;
                }
            }
        }
        // Column entries of B_k w are at most 2·2·3, bounding a kernel generator.
        prop_assert_eq!(independent, all_pairs);
        if let Some(wit) = find_violation(&a, 2) {
            prop_assert!(!check_pair(&a, &wit.v, &wit.w).unwrap());
            prop_assert!(wit.w.iter().all(|x| x.abs() <= BigInt::from(2)));
        }
    }
}
