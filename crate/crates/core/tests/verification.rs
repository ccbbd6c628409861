use gyrogroup::construct::build_g2;
use gyrogroup::groups;
use gyrogroup::verify::*;
use gyrogroup::{FiniteGyrogroup, Permutation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn a3() -> Permutation {
    Permutation::from_cycles(8, &[&[1, 3], &[5, 7]]).unwrap()
}

#[test]
fn gyrations_of_g2_3_are_automorphisms() {
    let g = build_g2(3).unwrap();
    assert!(check_gyr_automorphisms(&g).passed());
    assert!(is_automorphism(&g, &a3()));
    assert!(is_automorphism(&g, &Permutation::identity(8)));
}

#[test]
fn swapping_zero_and_one_is_not_an_automorphism() {
    let g = build_g2(3).unwrap();
    let swap = Permutation::from_cycles(8, &[&[0, 1]]).unwrap();
    assert!(!is_automorphism(&g, &swap));
    // 0 ⊕ 0 = 0 but swap(0) ⊕ swap(0) = 1 ⊕ 1 = 2 != swap(0) = 1
    assert_eq!(automorphism_violation(&g, &swap), Some((0, 0)));
    let broken = g.with_gyration(2, 2, swap).unwrap();
    assert_eq!(
        check_gyr_automorphisms(&broken),
        AxiomStatus::Fail {
            witness: vec![2, 2, 0, 0]
        }
    );
}

#[test]
fn trivial_gyrations_break_gyroassociativity() {
    let g = build_g2(3).unwrap().with_trivial_gyrations();
    let status = check_left_gyroassociativity(&g);
    let w = status.witness().expect("G3 must fail").to_vec();
    let (a, b, c) = (w[0], w[1], w[2]);
    assert_ne!(g.op(a, g.op(b, c)), g.op(g.op(a, b), c));
    // (4 ⊕ 1) ⊕ 1 = 4 != 6 = 4 ⊕ (1 ⊕ 1) is among the failures
    assert!(w <= vec![4, 1, 1]);
    assert!(check_loop_property(&g).passed());
}

#[test]
fn flipping_one_gyration_breaks_the_loop_property() {
    let g = build_g2(3).unwrap();
    let flipped = g.with_gyration(1, 4, Permutation::identity(8)).unwrap();
    assert!(!check_loop_property(&flipped).passed());
    let w = check_gyrator_identity(&flipped).witness().unwrap().to_vec();
    assert_eq!(&w[..2], &[1, 4]);
    assert_ne!(flipped.gyrate(1, 4, w[2]), g.gyrate(1, 4, w[2]));
}

#[test]
fn report_runs_every_check() {
    let g = build_g2(3).unwrap().with_trivial_gyrations();
    let r = verify(&g);
    assert_eq!(r.checks.len(), Axiom::ALL.len());
    assert!(!r.all_pass());
    for c in r.failures() {
        assert!(c.status.witness().is_some());
    }
    assert!(verify(&build_g2(4).unwrap()).all_pass());
    assert!(verify(&groups::cyclic(8)).all_pass());
}

#[test]
fn groups_with_trivial_gyrations() {
    for g in [
        groups::cyclic(4),
        groups::abelian(&[4, 2]),
        groups::abelian(&[2, 2, 2]),
    ] {
        let r = verify(&g);
        assert!(r.all_pass());
        assert!(check_gyrator_identity(&g).passed());
    }
    let d = verify(&groups::dihedral(4));
    assert!(d.is_gyrogroup() && !d.is_gyrocommutative());
    let d = verify(&groups::dihedral(3));
    assert!(d.is_gyrogroup() && !d.is_gyrocommutative());
}

#[test]
fn right_counterparts_hold() {
    let mut corpus: Vec<FiniteGyrogroup> = (3..=7).map(|n| build_g2(n).unwrap()).collect();
    corpus.extend([
        groups::dihedral(4),
        groups::abelian(&[2, 4]),
        groups::cyclic(9),
    ]);
    for g in &corpus {
        assert!(verify(g).is_gyrogroup());
        assert!(check_right_identity(g).passed());
        assert!(check_right_inverse(g).passed());
        assert!(check_right_loop_property(g).passed());
        assert!(g.latin_violation().is_none());
        for x in 0..g.order() {
            assert_eq!(g.op(x, 0), x);
            let inv = inverse_of(g, x).unwrap();
            assert_eq!(g.op(inv, x), 0);
            assert_eq!(g.op(x, inv), 0);
        }
    }
}

/// A latin square of order 8 isotopic to ℤ₈, with rows and columns shuffled
/// by a seeded generator.
fn random_latin_square(seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<usize> = (0..8).collect();
    let mut cols: Vec<usize> = (0..8).collect();
    let mut syms: Vec<usize> = (0..8).collect();
    rows.shuffle(&mut rng);
    cols.shuffle(&mut rng);
    syms.shuffle(&mut rng);
    (0..8)
        .map(|i| (0..8).map(|j| syms[(rows[i] + cols[j]) % 8]).collect())
        .collect()
}

#[test]
fn random_latin_square_fails_gyroassociativity() {
    const SEED: u64 = 20_240_611;
    let square = random_latin_square(SEED);
    let g = FiniteGyrogroup::from_raw_tables(
        square,
        vec![vec![0; 8]; 8],
        vec![Permutation::identity(8)],
    )
    .unwrap();
    assert!(g.latin_violation().is_none());
    let r = verify(&g);
    let w = r
        .status(Axiom::LeftGyroassociativity)
        .witness()
        .expect("G3 fails")
        .to_vec();
    assert_ne!(g.op(w[0], g.op(w[1], w[2])), g.op(g.op(w[0], w[1]), w[2]));
}

#[test]
fn witnesses_are_thread_count_independent() {
    let g = build_g2(6).unwrap().with_cayley_entry(37, 21, 5).unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let r1 = single.install(|| verify(&g));
    let r4 = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(|| verify(&g));
    assert_eq!(r1, r4);
    assert!(!r1.all_pass());
}
