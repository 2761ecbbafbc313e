use proptest::prelude::*;
use seedtree::BitVec;

fn bitvec(capacity: usize) -> impl Strategy<Value = BitVec> {
    proptest::collection::vec(any::<bool>(), capacity).prop_map(move |bits| {
        let mut v = BitVec::zeros(capacity);
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i);
            }
        }
        v
    })
}

fn sized() -> impl Strategy<Value = (BitVec, BitVec, usize)> {
    (1usize..=128).prop_flat_map(|cap| (bitvec(cap), bitvec(cap), 0..cap + 4))
}

proptest! {
    #[test]
    fn shift_up_then_down_restores(( v, _w, x) in sized()) {
        let cap = v.capacity();
        let fits = v.highest_set().is_none_or(|h| h + x < cap);
        if fits {
            prop_assert_eq!(v.shift_up(x).shift_down(x), v);
        }
        for l in 0..cap {
            let expected = l >= x && v.test(l - x);
            prop_assert_eq!(v.shift_up(x).test(l), expected);
            let expected = l + x < cap && v.test(l + x);
            prop_assert_eq!(v.shift_down(x).test(l), expected);
        }
    }

    #[test]
    fn and_never_grows((a, b, _x) in sized()) {
        prop_assert!((a & b).popcount() <= a.popcount().min(b.popcount()));
        prop_assert!((a | b).popcount() >= a.popcount().max(b.popcount()));
    }

    #[test]
    fn set_then_test((v, _w, x) in sized()) {
        let l = x % v.capacity();
        prop_assert!(v.with_bit(l).test(l));
    }

    #[test]
    fn ones_is_a_range(cap in 1usize..=128, lo in -3i64..130, hi in 0usize..=128) {
        let hi = hi.min(cap);
        let v: BitVec = BitVec::ones(lo, hi, cap);
        for l in 0..cap {
            prop_assert_eq!(v.test(l), (l as i64) >= lo && l < hi);
        }
    }
}
