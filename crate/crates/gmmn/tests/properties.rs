use gmmn::chebyshev::DTable;
use gmmn::exactnum::{CycQ, LaurentZ};
use gmmn::fusion::FusionRing;
use gmmn::weights::{dominant_upto, Weight};
use proptest::prelude::*;
use std::sync::OnceLock;

const ORDERS: [u32; 7] = [1, 3, 4, 5, 8, 12, 36];

fn cyc_in(n: u32) -> impl Strategy<Value = CycQ> {
    prop::collection::vec((0..n as i64, -6i64..=6), 0..6)
        .prop_map(move |terms| CycQ::root_sum(n, terms))
}

fn triple() -> impl Strategy<Value = (CycQ, CycQ, CycQ)> {
    prop::sample::select(&ORDERS[..]).prop_flat_map(|n| (cyc_in(n), cyc_in(n), cyc_in(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!(a.mul_ref(&inv).is_one());
            prop_assert_eq!(inv.inv().unwrap(), a.clone());
        }
    }

    #[test]
    fn canonical_form_is_idempotent((a, b, _c) in triple()) {
        let x = a.mul_ref(&b).add_ref(&a);
        prop_assert_eq!(x.reduce().reduce(), x.reduce());
        prop_assert_eq!(x.reduce(), x);
    }

    #[test]
    fn embedding_is_multiplicative((a, b, _c) in triple()) {
        let lhs = a.mul_ref(&b).embed();
        let rhs = a.embed() * b.embed();
        prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quantum_product_rule(a in 1i64..12, b in 1i64..12) {
        let lhs = &LaurentZ::qnum(a) * &LaurentZ::qnum(b);
        let mut rhs = LaurentZ::zero();
        for j in 0..a.min(b) {
            rhs = &rhs + &LaurentZ::qnum(a + b - 1 - 2 * j);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quantum_factorials_divide(n in 0u32..10, k in 0u32..10) {
        prop_assume!(k <= n);
        let q = LaurentZ::qfact(n).div_exact(&LaurentZ::qfact(k));
        prop_assert!(q.is_some());
        prop_assert_eq!(&q.unwrap() * &LaurentZ::qfact(k), LaurentZ::qfact(n));
    }

    #[test]
    fn rotation_has_order_dividing_rank(n in 2usize..=5, e in 0u32..=6, pick in any::<prop::sample::Index>()) {
        let alc = dominant_upto(n, e);
        let m = pick.get(&alc);
        let mut x = m.clone();
        for step in 0..n as u32 {
            prop_assert!(x.in_alcove(e));
            prop_assert_eq!(x.color(), (m.color() + step * e) % n as u32);
            x = x.rotate(e).unwrap();
        }
        prop_assert_eq!(&x, m);
    }

    #[test]
    fn fusion_is_commutative_and_dual(n in 2usize..=4, e in 0u32..=4, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let fr = FusionRing::new(n, e);
        let all = fr.all_matrices();
        let len = all.len();
        let (a, b, c) = (a.index(len), b.index(len), c.index(len));
        prop_assert_eq!(FusionRing::coefficient(&all, a, b, c), FusionRing::coefficient(&all, b, a, c));
        // N_ab^c = N_{a c^T}^{b^T}
        let dual = |i: usize| {
            let w: &Weight = &fr.alcove.members[i];
            fr.alcove.index_of(&w.transpose()).unwrap()
        };
        prop_assert_eq!(
            FusionRing::coefficient(&all, a, b, c),
            FusionRing::coefficient(&all, a, dual(c), dual(b))
        );
    }

    #[test]
    fn d_table_transpose_symmetry(n in 2usize..=5, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        static TABLES: OnceLock<Vec<DTable>> = OnceLock::new();
        let tables = TABLES.get_or_init(|| (2..=5).map(|n| DTable::new(n, 6)).collect());
        let t = &tables[n - 2];
        let m = i.get(&t.weights);
        let k = j.get(&t.weights);
        prop_assert_eq!(t.d_coeff(m, k), t.d_coeff(&m.transpose(), &k.transpose()));
        let colored = t.d_coeff(m, k) == 0 || m.color() == k.color();
        prop_assert!(colored);
    }
}
