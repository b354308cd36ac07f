use conet_kernel::{binary_pattern, Matrix, Scalar, UPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-30i64..30, 1i64..12, -30i64..30, 1i64..12)
        .prop_map(|(p, q, r, s)| Scalar::frac(p, q) + Scalar::frac(r, s) * Scalar::omega())
}

proptest! {
    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!((&x + &y) - &y, x.clone());
        prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
        prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
        prop_assert_eq!(&x * &y, &y * &x);
        if !y.is_zero() {
            prop_assert_eq!((&x / &y) * &y, x.clone());
        }
    }

    #[test]
    fn text_form_round_trips(x in scalar()) {
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn rank_ignores_row_scaling_and_permutation(
        entries in proptest::collection::vec(-3i64..4, 12),
        c in 1i64..9,
        perm in Just(vec![2usize, 0, 3, 1]),
    ) {
        let m = Matrix::new(4, 3, entries.iter().map(|&e| Scalar::int(e)).collect());
        let mut rows: Vec<Vec<Scalar>> = perm.iter().map(|&i| m.row(i).to_vec()).collect();
        rows[1] = rows[1].iter().map(|x| x * Scalar::int(c)).collect();
        prop_assert_eq!(Matrix::from_rows(rows).rank(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn kernel_vectors_annihilate(entries in proptest::collection::vec(-2i64..3, 15)) {
        let m = Matrix::new(3, 5, entries.iter().map(|&e| Scalar::int(e)).collect());
        let sol = m.solve_linear(None).unwrap();
        prop_assert_eq!(sol.rank + sol.kernel_basis.len(), 5);
        for v in &sol.kernel_basis {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn pattern_of_coprime_product_is_union(
        a in proptest::collection::vec(-4i64..5, 1..4),
        b in proptest::collection::vec(5i64..9, 1..3),
    ) {
        let f = UPoly::from_roots(&a.iter().map(|&r| Scalar::int(r)).collect::<Vec<_>>());
        let g = UPoly::from_roots(&b.iter().map(|&r| Scalar::int(r)).collect::<Vec<_>>());
        let nf = f.degree().unwrap();
        let ng = g.degree().unwrap();
        let mut union = binary_pattern(nf, &f).unwrap();
        union.extend(binary_pattern(ng, &g).unwrap());
        union.sort_unstable_by(|x, y| y.cmp(x));
        prop_assert_eq!(binary_pattern(nf + ng, &f.mul(&g)).unwrap(), union);
    }
}

#[test]
fn cayley_hamilton_on_seeded_matrices() {
    for seed in 0..6u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 3 + (seed as usize % 3);
        let data = (0..n * n).map(|_| Scalar::int(rng.random_range(-9..=9))).collect();
        let m = Matrix::new(n, n, data);
        let p = m.char_poly().unwrap();
        assert_eq!(p.degree(), Some(n));
        assert!(p.lead().is_one());
        assert!(m.eval_poly(&p).is_zero(), "seed {seed}");
        assert_eq!(p.coeff(0), if n % 2 == 0 { m.det().unwrap() } else { -m.det().unwrap() });
    }
}

#[test]
fn omega_entries_survive_elimination() {
    let w = Scalar::omega();
    let m = Matrix::from_rows(vec![
        vec![Scalar::one(), w.clone(), w.pow(2)],
        vec![w.clone(), w.pow(2), Scalar::one()],
        vec![Scalar::one(), Scalar::one(), Scalar::one()],
    ]);
    assert_eq!(m.rank(), 2);
    let p = m.char_poly().unwrap();
    assert!(m.eval_poly(&p).is_zero());
}
