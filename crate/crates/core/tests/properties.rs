use proptest::prelude::*;

use schubert_lr::lr_tableaux::{lr_coefficient, Convention};
use schubert_lr::schubert_ring::SchubertRing;
use schubert_lr::shapes::{AmbientSpace, Partition};
use schubert_lr::shifted::lrs_coefficient;

fn partition_in(k: usize, m: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=m, k).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn strict_in(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1..=n, 0..=n).prop_map(|s| Partition::new(s.into_iter().rev().collect()).unwrap())
}

proptest! {
    #[test]
    fn lr_symmetric_and_graded(l in partition_in(3, 4), m in partition_in(3, 4), n in partition_in(3, 4)) {
        let space = AmbientSpace::type_a(3, 4).unwrap();
        let c = lr_coefficient(&l, &m, &n, &space, Convention::PaperForm).unwrap();
        prop_assert_eq!(c, lr_coefficient(&m, &l, &n, &space, Convention::PaperForm).unwrap());
        prop_assert_eq!(c, lr_coefficient(&l, &m, &n, &space, Convention::StandardForm).unwrap());
        if l.weight() + m.weight() != n.weight() {
            prop_assert_eq!(c, 0);
        }
    }

    #[test]
    fn lrs_symmetric_and_dual(l in strict_in(5), m in strict_in(5), n in strict_in(5)) {
        let f = lrs_coefficient(&l, &m, &n, 5, Convention::PaperForm).unwrap();
        prop_assert_eq!(f, lrs_coefficient(&m, &l, &n, 5, Convention::PaperForm).unwrap());
        prop_assert_eq!(f, lrs_coefficient(&l, &m, &n, 5, Convention::StandardForm).unwrap());
        let space = AmbientSpace::type_b(5).unwrap();
        let top = Partition::staircase(5);
        let d = lrs_coefficient(&l, &m, &top, 5, Convention::PaperForm).unwrap();
        prop_assert_eq!(d, u64::from(space.dual(&l).unwrap() == m));
    }

    #[test]
    fn products_associate(a in strict_in(4), b in strict_in(4), c in strict_in(4), kind in 0..3usize) {
        let space = match kind {
            0 => AmbientSpace::type_b(4).unwrap(),
            1 => AmbientSpace::type_c(4).unwrap(),
            _ => AmbientSpace::type_d(5).unwrap(),
        };
        let ring = SchubertRing::new(space);
        let (x, y, z) = (ring.element(&a).unwrap(), ring.element(&b).unwrap(), ring.element(&c).unwrap());
        let left = ring.multiply(&ring.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = ring.multiply(&x, &ring.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn partition_literals_round_trip(l in partition_in(4, 6)) {
        prop_assert_eq!(l.literal().parse::<Partition>().unwrap(), l.clone());
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), l);
    }
}
