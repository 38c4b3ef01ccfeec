use num_bigint::BigInt;
use proptest::prelude::*;
use ramanujan49::Series;

const ORDER: usize = 24;

fn series() -> impl Strategy<Value = Series> {
    prop::collection::vec(-50i64..50, ORDER).prop_map(|v| Series::from_i64s(ORDER, &v))
}

fn unit_series() -> impl Strategy<Value = Series> {
    (prop::bool::ANY, prop::collection::vec(-9i64..9, ORDER - 1)).prop_map(|(neg, rest)| {
        let mut v = vec![if neg { -1 } else { 1 }];
        v.extend(rest);
        Series::from_i64s(ORDER, &v)
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&Series::one(ORDER)), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn inverse_is_two_sided(u in unit_series(), a in series()) {
        let inv = u.inverse().unwrap();
        prop_assert_eq!(u.mul(&inv), Series::one(ORDER));
        prop_assert_eq!(a.div(&u).unwrap().mul(&u), a);
    }

    #[test]
    fn negative_powers(u in unit_series(), e in 1i64..5) {
        prop_assert_eq!(u.pow(-e).unwrap().mul(&u.pow(e).unwrap()), Series::one(ORDER));
    }

    #[test]
    fn dissection_reassembles(a in series(), m in 1usize..8) {
        let mut back = Series::zero(ORDER);
        for r in 0..m {
            let part = a.dissect(m, r);
            for (n, c) in part.coeffs().iter().enumerate() {
                back = back.add(&Series::monomial(ORDER, m * n + r, c.clone()));
            }
        }
        prop_assert_eq!(back, a);
    }

    #[test]
    fn substitution_composes(a in series(), j in 1usize..4, k in 1usize..4) {
        prop_assert_eq!(
            a.substitute_power(j).substitute_power(k),
            a.substitute_power(j * k)
        );
        // dissecting undoes substitution
        prop_assert_eq!(
            a.substitute_power(k).dissect(k, 0),
            a.truncate(ORDER.div_ceil(k))
        );
    }

    #[test]
    fn substitution_is_a_ring_map(a in series(), b in series(), k in 1usize..5) {
        prop_assert_eq!(
            a.mul(&b).substitute_power(k),
            a.substitute_power(k).mul(&b.substitute_power(k))
        );
    }

    #[test]
    fn modulo_is_compatible_with_mul(a in series(), b in series(), m in 2i64..60) {
        let m = BigInt::from(m);
        prop_assert_eq!(
            a.mul(&b).modulo(&m),
            a.modulo(&m).mul(&b.modulo(&m)).modulo(&m)
        );
    }
}
