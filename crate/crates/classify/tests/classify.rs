use conet_classify::*;
use conet_conics::{scheme_points, Length, LinearSystem};
use conet_cubics::hesse_net_forms;
use conet_kernel::{Matrix, Scalar};
use conet_poly::f;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sys(forms: &[&str]) -> LinearSystem {
    LinearSystem::new(&forms.iter().map(|s| f(s)).collect::<Vec<_>>()).unwrap()
}

fn random_invertible(rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let g = Matrix::new(3, 3, (0..9).map(|_| Scalar::int(rng.random_range(-2..=2))).collect());
        if !g.det().unwrap().is_zero() {
            return g;
        }
    }
}

fn hesse(l: Scalar) -> LinearSystem {
    LinearSystem::new(&hesse_net_forms(&l)).unwrap()
}

#[test]
fn pencil_examples() {
    assert_eq!(classify_pencil(&sys(&["X^2-Z^2", "Y^2-Z^2"])).unwrap(), PencilType::A);
    assert_eq!(classify_pencil(&sys(&["X*Y", "X*Z-Y^2"])).unwrap(), PencilType::D);
    assert_eq!(classify_pencil(&sys(&["X*Y", "X*Z"])).unwrap(), PencilType::F);
    assert_eq!(classify_pencil(&sys(&["X^2", "Y^2"])).unwrap(), PencilType::H);
    assert!(classify_pencil(&sys(&["X^2", "Y^2", "Z^2"])).is_err());
}

#[test]
fn pencils_are_stable_under_swaps_and_substitutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (t, forms, dim) in pencil_table() {
        let swapped = LinearSystem::new(&[forms[1].clone(), forms[0].clone()]).unwrap();
        assert_eq!(classify_pencil(&swapped).unwrap(), t);
        let u = LinearSystem::new(&forms).unwrap();
        assert_eq!(conet_conics::orbit_dimension(&u), dim, "pencil {t}");
        for _ in 0..5 {
            let g = random_invertible(&mut rng);
            assert_eq!(classify_pencil(&u.substitute(&g).unwrap()).unwrap(), t);
        }
    }
}

#[test]
fn net_examples() {
    assert_eq!(net_type(&sys(&["X*Y", "X^2+Y*Z", "Y^2+X*Z"]), 0).unwrap().orbit.label, NetLabel::L8a);
    assert_eq!(net_type(&sys(&["Z^2", "X^2-Y*Z", "Y^2-X*Z"]), 0).unwrap().orbit.label, NetLabel::L8c);
    assert_eq!(net_type(&hesse(Scalar::int(-1)), 0).unwrap().orbit.label, NetLabel::L6a);
    assert_eq!(net_type(&hesse(Scalar::int(2)), 0).unwrap().orbit.label, NetLabel::L6d);
    assert_eq!(net_type(&sys(&["Y^2", "X*Y", "Y*Z-X^2"]), 0).unwrap().orbit.label, NetLabel::L4);
    let r = classify_net(&sys(&["X^2", "X*Y", "X*Z"]), 0).unwrap();
    assert_eq!((r.orbit.label, r.scheme_length), (NetLabel::L2a, Length::Infinite));
    assert_eq!(classify_net(&sys(&["X^2", "Y^2"]), 0), Err(ClassifyError::NotThreeDimensional(2)));
}

#[test]
fn report_json_has_sorted_keys() {
    let r = classify_net(&hesse(Scalar::one()), 0).unwrap();
    let text = serde_json::to_string(&r.to_json()).unwrap();
    assert!(text.starts_with("{\"delta_support\":0,\"dual\":\"8b\",\"gamma\":\"Smooth\",\"key\":["), "{text}");
    let r = classify_net(&sys(&["X^2", "X*Y", "X*Z"]), 0).unwrap();
    assert!(r.to_json().get("key").is_none());
    assert_eq!(r.to_json()["scheme_length"], "infinite");
}

#[test]
fn hesse_special_values() {
    let w = Scalar::omega();
    let w2 = Scalar::omega2();
    for l in [Scalar::int(-1), -w.clone(), -w2.clone()] {
        assert_eq!(net_type(&hesse(l.clone()), 0).unwrap().orbit.label, NetLabel::L6a, "lambda {l}");
    }
    for l in [Scalar::zero(), Scalar::int(2), Scalar::int(2) * &w, Scalar::int(2) * &w2] {
        assert_eq!(net_type(&hesse(l.clone()), 0).unwrap().orbit.label, NetLabel::L6d, "lambda {l}");
    }
    for l in [1, 3, -2, 5] {
        assert_eq!(net_type(&hesse(Scalar::int(l)), 0).unwrap().orbit.label, NetLabel::L8b);
    }
}

#[test]
fn classification_is_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (label, forms) in corpus() {
        let net = LinearSystem::new(&forms).unwrap();
        let base = net_type(&net, 0).unwrap();
        assert_eq!(base.orbit.label, label);
        for _ in 0..2 {
            let moved = net.substitute(&random_invertible(&mut rng)).unwrap();
            assert_eq!(net_type(&moved, 0).unwrap().orbit, base.orbit, "{label}");
        }
    }
}

#[test]
fn corpus_invariants() {
    for (label, forms) in corpus() {
        let r = classify_net(&LinearSystem::new(&forms).unwrap(), 0).unwrap();
        assert_eq!(r.orbit_dim, label.dimension());
        assert_eq!(r.dual.label, label.dual());
        let base_point_free = matches!(label, NetLabel::L8b | NetLabel::L8c | NetLabel::L7c | NetLabel::L6d);
        assert_eq!(r.scheme_length == Length::Finite(0), base_point_free, "{label}");
        match label {
            NetLabel::L8b | NetLabel::L8a => assert_eq!(r.preimage_dim, 1),
            NetLabel::L6d => assert_eq!(r.preimage_dim, 3),
            _ => {}
        }
    }
    let a = corpus_net(NetLabel::L8a);
    let pts = scheme_points(a.basis(), 0).unwrap();
    assert_eq!(pts.points.len(), 1);
    assert_eq!(pts.points[0].coords, [0, 0, 1].map(Scalar::int));
}

#[test]
fn family_examples() {
    let spec = |kind, param: &str, gens: &[&str], generic: &str, special: &str, j: bool| FamilySpec {
        id: "example".into(),
        kind,
        param: param.into(),
        generators: gens.iter().map(|s| s.to_string()).collect(),
        expected_generic: generic.into(),
        expected_special: special.into(),
        special_value: Scalar::zero(),
        j_constant: j,
    };
    let samples: Vec<Scalar> = [1, 2, 3].map(Scalar::int).to_vec();
    let net = spec(FamilyKind::Net, "mu", &["X*Y", "Z*Y-mu*X^2", "Z*X-Y^2"], "8a", "7a", false);
    assert!(verify_family(&net, &samples, 0).unwrap().pass);
    let pencil = spec(FamilyKind::Pencil, "t", &["(X-Z)*(X+t*Z)", "Y^2-X^2"], "a", "b", false);
    assert!(verify_family(&pencil, &[2, 3, 5].map(Scalar::int), 0).unwrap().pass);
    let cubic = spec(FamilyKind::Cubic, "a", &["X^3+Y*(Y+a*X)*Z"], "Node", "Cusp", false);
    assert!(verify_family(&cubic, &samples, 0).unwrap().pass);
    let constant = spec(FamilyKind::Net, "b", &["Z*X", "Y*Z-X^2", "(Y-b*Z)*(Y-4*b*Z)"], "8b", "7b", true);
    let r = verify_family(&constant, &samples, 0).unwrap();
    assert_eq!(r.keys_equal, Some(true));
    assert!(r.pass);
    let wrong = spec(FamilyKind::Net, "mu", &["X*Y", "Z*Y-mu*X^2", "Z*X-Y^2"], "8b", "7a", false);
    let r = verify_family(&wrong, &samples, 0).unwrap();
    assert!(!r.pass);
    assert!(matches!(r.into_result(), Err(ClassifyError::FamilyMismatch(_))));
}

#[test]
fn nodal_discriminant_at_the_first_constant_parameter() {
    // (Y-bZ)(Y-b mu^2 Z) with mu = 1 does not give a smooth discriminant
    let net = sys(&["Z*X", "Y*Z-X^2", "(Y-Z)^2"]);
    assert_ne!(net_type(&net, 0).unwrap().orbit.label, NetLabel::L8b);
}

#[test]
fn all_reference_tables_pass() {
    let checks: Vec<Check> = verify_corpus(0)
        .into_iter()
        .chain(verify_pencil_table())
        .chain(verify_table4(0))
        .chain(verify_table5())
        .chain(verify_table7(0))
        .collect();
    for c in &checks {
        assert!(c.pass, "{}: {}", c.name, c.detail);
    }
    for r in verify_families(None, 0).unwrap() {
        assert!(r.pass, "{} {:?}", r.id, r.generic_labels());
    }
}
