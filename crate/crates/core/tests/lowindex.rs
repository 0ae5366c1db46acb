mod common;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

use starpres::lowindex::{
    self, invariant_multiset, invariant_profile, low_index, schreier_presentation, smith_normal_form, AbelianGroup,
    IntMatrix, SubgroupMode,
};
use starpres::{registry, Presentation, Word};

fn oracle_relators(p: &Presentation) -> Vec<Vec<(usize, bool)>> {
    p.relators().iter().map(|r| r.letters().iter().map(|l| (l.generator as usize, l.inverse)).collect()).collect()
}

fn to_i128(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].to_i128().unwrap()).collect()).collect()
}

#[test]
fn smith_form_against_determinantal_divisors() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let entries: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let a = IntMatrix::from_rows(cols, &entries);
        let sf = smith_normal_form(&a);
        assert_eq!(sf.u.mul(&a).mul(&sf.v), sf.s, "{entries:?}");
        assert_eq!(sf.u.determinant().abs(), BigInt::from(1));
        assert_eq!(sf.v.determinant().abs(), BigInt::from(1));
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    assert!(sf.s[(i, j)].is_zero());
                }
            }
        }
        let diag: Vec<BigInt> = sf.diagonal();
        assert!(diag.iter().all(|d| !d.is_negative()));
        let nonzero: Vec<i128> = diag.iter().filter(|d| !d.is_zero()).map(|d| d.to_i128().unwrap()).collect();
        assert!(diag.iter().skip(nonzero.len()).all(Zero::is_zero), "zeros trail");
        assert!(nonzero.windows(2).all(|p| p[1] % p[0] == 0));
        let oracle = common::invariant_factors(&to_i128(&a), cols);
        assert_eq!(nonzero, oracle, "{entries:?}");
    }
}

#[test]
fn index_two_counts_match_surjections() {
    for (i, p) in registry::groups().iter().enumerate() {
        let tables = low_index(p, 2, SubgroupMode::All).unwrap();
        let count = tables.iter().filter(|t| t.index() == 2).count();
        let vectors: Vec<Vec<i64>> = p.relators().iter().map(Word::exponent_vector).collect();
        assert_eq!(count, common::surjections_to_z2(3, &vectors), "G{}", i + 1);
        let ab = &invariant_multiset(p, 1).unwrap().into_keys().next().unwrap();
        let even = ab.torsion.iter().filter(|d| (*d % 2u32).is_zero()).count();
        assert_eq!(count, (1 << (ab.rank + even)) - 1, "G{}", i + 1);
    }
    assert_eq!(low_index(&registry::group(0), 2, SubgroupMode::All).unwrap().len(), 1 + 3);
}

#[test]
fn counts_match_permutation_representations() {
    for (i, p) in registry::groups().iter().enumerate() {
        let tables = low_index(p, 5, SubgroupMode::All).unwrap();
        let rels = oracle_relators(p);
        for k in 1..=4 {
            let ours = tables.iter().filter(|t| t.index() == k).count();
            assert_eq!(ours, common::subgroups_of_index(3, &rels, k), "G{} index {k}", i + 1);
        }
    }
    for g in [0, 2] {
        let p = registry::group(g);
        let ours = low_index(&p, 5, SubgroupMode::All).unwrap().iter().filter(|t| t.index() == 5).count();
        assert_eq!(ours, common::subgroups_of_index(3, &oracle_relators(&p), 5), "G{} index 5", g + 1);
    }
}

#[test]
fn every_table_is_valid() {
    for p in registry::groups() {
        for t in low_index(&p, 5, SubgroupMode::All).unwrap() {
            t.validate(&p).unwrap();
        }
    }
}

#[test]
fn class_sizes_add_up() {
    for p in registry::groups() {
        let all = low_index(&p, 5, SubgroupMode::All).unwrap();
        let reps = low_index(&p, 5, SubgroupMode::ConjugacyClasses).unwrap();
        for k in 1..=5 {
            let n_all = all.iter().filter(|t| t.index() == k).count();
            let expanded: usize = reps.iter().filter(|t| t.index() == k).map(|t| t.conjugacy_class_size()).sum();
            assert_eq!(n_all, expanded);
        }
        for t in &all {
            assert_eq!(t.conjugacy_class_size() * t.normalizer_index(), t.index());
        }
        assert!(reps.iter().all(|r| all.contains(r)));
    }
}

#[test]
fn schreier_deficiency_bookkeeping() {
    for p in registry::groups() {
        for t in low_index(&p, 5, SubgroupMode::All).unwrap() {
            let k = t.index() as isize;
            let sp = schreier_presentation(&p, &t);
            assert_eq!(sp.generators as isize, 2 * k + 1);
            assert_eq!(sp.relators.len() as isize, k);
            assert_eq!(sp.deficiency(), 2 * k + 1 - k);
        }
    }
}

#[test]
fn first_group_index_three() {
    let p = registry::group(0);
    let t = low_index(&p, 3, SubgroupMode::All).unwrap().into_iter().find(|t| t.index() == 3).unwrap();
    let sp = schreier_presentation(&p, &t);
    assert_eq!((sp.generators, sp.relators.len()), (7, 3));
    let m = invariant_multiset(&p, 3).unwrap();
    assert!(m.contains_key(&AbelianGroup::parse("Z^4 + Z_9").unwrap()));
    assert_eq!(m[&AbelianGroup::parse("Z^4 + Z_3^2").unwrap()], 1);
    assert_eq!(m.values().sum::<usize>(), 22);
}

#[test]
fn modes_give_the_same_profile() {
    let ps = registry::groups();
    let all = lowindex::profiles(&ps, 5, SubgroupMode::All).unwrap();
    let classes = lowindex::profiles(&ps, 5, SubgroupMode::ConjugacyClasses).unwrap();
    assert_eq!(all, classes);
}

#[test]
fn invariants_agree_across_each_class() {
    for i in 0..12 {
        let base = invariant_profile(&registry::group(i), 5, SubgroupMode::ConjugacyClasses).unwrap();
        for w in registry::class_members(i) {
            let p = Presentation::one_relator(w.clone()).unwrap();
            let prof = invariant_profile(&p, 5, SubgroupMode::ConjugacyClasses).unwrap();
            assert_eq!(prof, base, "R{} member {w}", i + 1);
        }
    }
}

#[test]
fn free_group_subgroups_are_free() {
    for rank in 1..=3 {
        let p = Presentation::free(rank);
        let prof = invariant_profile(&p, 3, SubgroupMode::All).unwrap();
        for k in 1..=3 {
            let keys: Vec<_> = prof.at(k).keys().cloned().collect();
            assert_eq!(keys, vec![AbelianGroup::free(k * (rank - 1) + 1)]);
        }
    }
}

fn rank_two_relator() -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..4, 1..=8).prop_filter_map("trivial", |idx| {
        let letters = idx.into_iter().map(starpres::Letter::from_index).collect();
        let w = Word::new(2, letters).ok()?.cyclic_reduce();
        (!w.is_empty()).then_some(w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_one_relator_counts(w in rank_two_relator()) {
        let p = Presentation::one_relator(w).unwrap();
        let tables = low_index(&p, 3, SubgroupMode::All).unwrap();
        let rels = oracle_relators(&p);
        for k in 1..=3 {
            let ours = tables.iter().filter(|t| t.index() == k).count();
            prop_assert_eq!(ours, common::subgroups_of_index(2, &rels, k));
        }
        for t in &tables {
            prop_assert!(t.validate(&p).is_ok());
        }
    }

    #[test]
    fn index_one_abelianization(w in rank_two_relator()) {
        let p = Presentation::one_relator(w.clone()).unwrap();
        let ab = invariant_multiset(&p, 1).unwrap().into_keys().next().unwrap();
        let v: Vec<i128> = w.exponent_vector().into_iter().map(i128::from).collect();
        let factors = common::invariant_factors(&[v], 2);
        let torsion: Vec<u64> = factors.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
        prop_assert_eq!(ab, AbelianGroup::new(2 - factors.len(), &torsion));
    }
}
