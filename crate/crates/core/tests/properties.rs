use howe_core::bn::LinearCharacter;
use howe_core::bn::{character_table, induce_class_function, ProductClassFunction, DEFAULT_ORACLE_BOUND};
use howe_core::howe::pieri::twist_label;
use howe_core::partition::{
    bipartitions_of, dominance_leq, horizontal_strip_additions, partitions_of, vertical_strip_additions, Bipartition,
    Partition,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn frobenius_reciprocity_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..20 {
        let n = rng.gen_range(1..=5);
        let a = rng.gen_range(0..=n);
        let small = character_table(a).unwrap();
        let other = character_table(n - a).unwrap();
        let big = character_table(n).unwrap();
        let chi = small.labels().choose(&mut rng).unwrap();
        let eta = other.labels().choose(&mut rng).unwrap();
        let psi = big.labels().choose(&mut rng).unwrap();

        let f = ProductClassFunction::outer(small.irreducible(chi).unwrap(), other.irreducible(eta).unwrap());
        let induced = induce_class_function(&f, DEFAULT_ORACLE_BOUND).unwrap();
        let lhs = induced.inner_product(big.irreducible(psi).unwrap()).unwrap();
        let restricted = ProductClassFunction::restrict(big.irreducible(psi).unwrap(), a).unwrap();
        let rhs = f.inner_product(&restricted).unwrap();
        assert_eq!(lhs, rhs, "<Ind {chi} x {eta}, {psi}>");
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..6, 0..6).prop_map(Partition::from_unsorted)
}

fn bipartition() -> impl Strategy<Value = Bipartition> {
    (partition(), partition()).prop_map(|(a, b)| Bipartition::new(a, b))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().norm(), p.norm());
    }

    #[test]
    fn strips_are_dual_under_conjugation(p in partition(), s in 0usize..4) {
        let mut horizontal: Vec<Partition> =
            horizontal_strip_additions(&p.conjugate(), s).iter().map(Partition::conjugate).collect();
        let mut vertical = vertical_strip_additions(&p, s);
        horizontal.sort();
        vertical.sort();
        prop_assert_eq!(horizontal, vertical);
    }

    #[test]
    fn conjugation_reverses_dominance(n in 0usize..7, i in 0usize..64, j in 0usize..64) {
        let all = partitions_of(n);
        let a = &all[i % all.len()];
        let b = &all[j % all.len()];
        prop_assert_eq!(
            dominance_leq(a, b).unwrap(),
            dominance_leq(&b.conjugate(), &a.conjugate()).unwrap()
        );
    }

    #[test]
    fn twists_are_involutions(b in bipartition()) {
        for which in LinearCharacter::ALL {
            prop_assert_eq!(twist_label(&twist_label(&b, which), which), b.clone());
        }
    }
}

#[test]
fn bipartition_counts() {
    // sum_{a+b=n} p(a) p(b)
    let expected = [1, 2, 5, 10, 20, 36, 65, 110];
    for (n, &count) in expected.iter().enumerate() {
        assert_eq!(bipartitions_of(n).len(), count);
    }
}
