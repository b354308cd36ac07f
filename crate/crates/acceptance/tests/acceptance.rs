//! Sixteen end-to-end criteria, one line each; exits with failure if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use conet_classify::*;
use conet_conics::{discriminant_of, orbit_dimension, scheme_points, LinearSystem, Length};
use conet_cubics::*;
use conet_deform::*;
use conet_kernel::{Matrix, Scalar};
use conet_poly::{f, parse_abc, parse_form_with, HForm, Vars};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn random_invertible(rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let g = Matrix::new(3, 3, (0..9).map(|_| Scalar::int(rng.random_range(-3..=3))).collect());
        if !g.det().unwrap().is_zero() {
            return g;
        }
    }
}

fn hesse(l: &Scalar) -> LinearSystem {
    LinearSystem::new(&hesse_net_forms(l)).unwrap()
}

fn label_of(v: &LinearSystem) -> Result<NetOrbit, String> {
    net_type(v, 0).map(|t| t.orbit).map_err(err)
}

fn failing(checks: &[Check]) -> Result<(), String> {
    match checks.iter().find(|c| !c.pass) {
        Some(c) => Err(format!("{}: {}", c.name, c.detail)),
        None => Ok(()),
    }
}

fn corpus_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let nets = corpus();
    for (label, forms) in &nets {
        let net = LinearSystem::new(forms).map_err(err)?;
        let base = label_of(&net)?;
        ensure(base.label == *label, || format!("{label} classified as {}", base.label))?;
        for _ in 0..5 {
            let g = random_invertible(&mut rng);
            let moved = label_of(&net.substitute(&g).map_err(err)?)?;
            ensure(moved == base, || format!("{label} moved to {} under a coordinate change", moved.label))?;
        }
    }
    ensure(nets.len() == 15, || format!("{} representatives", nets.len()))?;
    Ok(format!("{} representatives, 5 coordinate changes each", nets.len()))
}

fn hesse_specials() -> Outcome {
    let w = Scalar::omega();
    let w2 = Scalar::omega2();
    let two = Scalar::int(2);
    let cases = [
        (NetLabel::L6a, vec![Scalar::int(-1), -w.clone(), -w2.clone()]),
        (NetLabel::L6d, vec![Scalar::zero(), two.clone(), &two * &w, &two * &w2]),
        (NetLabel::L8b, [1, 3, -2, 5].map(Scalar::int).to_vec()),
    ];
    for (want, lambdas) in cases {
        for l in lambdas {
            let got = label_of(&hesse(&l))?.label;
            ensure(got == want, || format!("lambda {l}: {got}, expected {want}"))?;
        }
    }
    Ok("6a at -1,-w,-w^2; 6d at 0,2,2w,2w^2; 8b at 1,3,-2,5".into())
}

fn table5() -> Outcome {
    let checks = verify_table5();
    failing(&checks)?;
    let gamma = discriminant_of(corpus_net(NetLabel::L8a).basis());
    let listed: Vec<HForm> = corpus().into_iter().find(|(l, _)| *l == NetLabel::L8a).unwrap().1;
    let gamma_listed = discriminant_of(&listed);
    let expected = parse_abc("2*A*B*C-2*(B^3+C^3)").map_err(err)?;
    ensure(gamma_listed.proportional(&expected), || format!("8a discriminant {gamma_listed}"))?;
    ensure(!gamma.is_zero(), || "zero discriminant".into())?;
    Ok(format!("{} rows; 8a discriminant proportional to 2ABC-2(B^3+C^3)", checks.len()))
}

fn table7() -> Outcome {
    let checks = verify_table7(0);
    failing(&checks)?;
    let labels: Vec<String> = checks.iter().map(|c| c.detail.split_whitespace().nth(1).unwrap_or("").trim_end_matches(';').to_string()).collect();
    let mut distinct = labels.clone();
    distinct.dedup();
    let want = ["8a", "8b", "7a", "6a", "6d", "5b", "4"];
    ensure(distinct == want, || format!("labels {distinct:?}"))?;
    Ok(format!("polar nets classify to {}", want.join(", ")))
}

fn orbit_dimensions() -> Outcome {
    let dims: Vec<usize> = corpus().iter().map(|(_, forms)| orbit_dimension(&LinearSystem::new(forms).unwrap())).collect();
    let documented = documented_orbit_dimensions();
    ensure(dims == documented, || format!("computed {dims:?}, documented {documented:?}"))?;
    ensure(dims == [8, 8, 8, 7, 7, 7, 6, 6, 6, 6, 5, 5, 4, 2, 2], || format!("{dims:?}"))?;
    Ok(format!("{dims:?}"))
}

fn duality() -> Outcome {
    let pairs = dual_pairs_check(0).map_err(err)?;
    for (a, b) in &pairs {
        ensure(b.dual() == *a && a.dual() == *b, || format!("{a} and {b} are not paired"))?;
    }
    for l in [1, 3, -2] {
        let c = hesse_duality_check(&Scalar::int(l), 0).map_err(err)?;
        ensure(c.pass, || c.detail.clone())?;
    }
    let listed: Vec<String> = pairs.iter().filter(|(a, b)| a <= b).map(|(a, b)| format!("{a}<->{b}")).collect();
    Ok(format!("{}; Hesse keys match at 1, 3, -2", listed.join(" ")))
}

fn pencils() -> Outcome {
    let table = verify_pencil_table();
    failing(&table)?;
    let reports = verify_families(Some(FamilyKind::Pencil), 0).map_err(err)?;
    ensure(reports.len() == 9, || format!("{} pencil families", reports.len()))?;
    for r in &reports {
        ensure(r.pass && r.dim_drop_ok, || format!("{} failed", r.id))?;
    }
    Ok(format!("{} normal forms, {} families", table.len(), reports.len()))
}

fn net_specializations() -> Outcome {
    let reports = verify_families(Some(FamilyKind::Net), 0).map_err(err)?;
    ensure(reports.len() == 12, || format!("{} net families", reports.len()))?;
    for r in &reports {
        ensure(r.pass, || format!("{} generic {:?} special {}", r.id, r.generic_labels(), r.special.label))?;
        ensure(r.dim_drop_ok && r.length_monotone_ok, || format!("{} breaks monotonicity", r.id))?;
    }
    let constant = reports.iter().filter(|r| r.keys_equal.is_some()).collect::<Vec<_>>();
    ensure(!constant.is_empty() && constant.iter().all(|r| r.keys_equal == Some(true)), || {
        "constant-key family has differing keys".into()
    })?;
    Ok(format!("{} families, constant-key family equal at b = 1, 2, 3", reports.len()))
}

fn cubic_specializations() -> Outcome {
    let reports = verify_families(Some(FamilyKind::Cubic), 0).map_err(err)?;
    ensure(reports.len() == 6, || format!("{} cubic families", reports.len()))?;
    for r in &reports {
        ensure(r.pass, || format!("{} generic {:?} special {}", r.id, r.generic_labels(), r.special.label))?;
    }
    let edges: Vec<String> =
        reports.iter().map(|r| format!("{}->{}", r.generic_labels()[0], r.special.label)).collect();
    Ok(edges.join(" "))
}

fn hesse_identities() -> Outcome {
    for k in [1i64, 3, -2] {
        let l = Scalar::int(k);
        let gamma_gradient = discriminant_of(&hesse_cubic(&l).gradient());
        let expected = parse_abc("A*B*C")
            .map_err(err)?
            .scale(&(Scalar::int(8) + Scalar::int(2) * l.pow(3)))
            .sub(&parse_abc("A^3+B^3+C^3").map_err(err)?.scale(&(Scalar::int(2) * &l * &l)));
        ensure(gamma_gradient.proportional(&expected), || format!("lambda {k}: discriminant {gamma_gradient}"))?;
        let h = hessian_cubic(&hesse_cubic(&l));
        let ratio = h.coeff([1, 1, 1]) / h.coeff([3, 0, 0]);
        let lp = -(Scalar::int(4) + l.pow(3)) / (Scalar::int(3) * &l * &l);
        ensure(ratio == Scalar::int(3) * &lp, || format!("lambda {k}: Hessian ratio {ratio}, expected 3*({lp})"))?;
        ensure(h.proportional(&hesse_cubic(&lp)), || format!("lambda {k}: Hessian {h}"))?;
    }
    Ok("discriminant and Hessian identities at 1, 3, -2".into())
}

fn preimages() -> Outcome {
    for a in [2i64, 3] {
        let alpha = Scalar::int(a);
        let net = [ "Y*Z-X^2", "(Y-Z)*(Y-a*Z)", "X*Y"]
            .map(|s| parse_form_with(s, Vars::Xyz, &[("a", alpha.clone())], None).unwrap());
        let p = jacobian_preimage(&LinearSystem::new(&net).unwrap()).map_err(err)?;
        let cubic = parse_form_with(
            "3*(a-1)^2*X^2*Y+2*a^2*Z^3-3*a*(a+1)*Y*Z^2+6*a*Y^2*Z-(a+1)*Y^3",
            Vars::Xyz,
            &[("a", alpha.clone())],
            None,
        )
        .map_err(err)?;
        ensure(p.dim() == 1 && p.basis()[0].proportional(&cubic), || format!("alpha {a}: preimage {p}"))?;
    }
    let mut eightb: Vec<LinearSystem> = [1, 3, -2, 5].iter().map(|&k| hesse(&Scalar::int(k))).collect();
    eightb.push(corpus_net(NetLabel::L8b));
    for b in [1, 2, 3] {
        let s = Scalar::int(b);
        let forms = ["Z*X", "Y*Z-X^2", "(Y-b*Z)*(Y-4*b*Z)"]
            .map(|t| parse_form_with(t, Vars::Xyz, &[("b", s.clone())], None).unwrap());
        eightb.push(LinearSystem::new(&forms).unwrap());
    }
    for net in &eightb {
        ensure(label_of(net)?.label == NetLabel::L8b, || format!("{net} is not 8b"))?;
        let d = jacobian_preimage(net).map_err(err)?.dim();
        ensure(d == 1, || format!("{net}: preimage dimension {d}"))?;
    }
    let tri = jacobian_preimage(&LinearSystem::new(&[f("Y*Z"), f("X*Z"), f("X*Y")]).unwrap()).map_err(err)?;
    ensure(tri.dim() == 1 && tri.basis()[0].proportional(&f("X*Y*Z")), || format!("{tri}"))?;
    let sq = jacobian_preimage(&LinearSystem::new(&[f("X^2"), f("Y^2"), f("Z^2")]).unwrap()).map_err(err)?;
    ensure(sq.dim() == 3, || format!("{sq}"))?;
    Ok(format!("alpha = 2, 3 reproduced; dimension 1 on {} nets of type 8b and XYZ; 3 for squares", eightb.len()))
}

fn aronhold_gate() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let cubic = f("X^3+2*Y^3-Z^3+X*Y*Z-3*X^2*Z+Y*Z^2");
    let a = aronhold(&cubic);
    for _ in 0..5 {
        let g = random_invertible(&mut rng);
        let d = g.det().unwrap();
        let moved = aronhold(&cubic.substitute(&g).map_err(err)?);
        ensure(moved.s == &a.s * &d.pow(4), || "S is not a relative invariant of weight 4".into())?;
        ensure(moved.t == &a.t * &d.pow(6), || "T is not a relative invariant of weight 6".into())?;
    }
    let singular = [
        "Y^2*Z-X^3-X^2*Z",
        "Y^2*Z-X^3",
        "X*(X^2-Y*Z)",
        "Y*(X^2+Y*Z)",
        "X*Y*Z",
        "X*Y*(X+Y)",
        "X^2*Y",
        "X^3",
    ];
    for s in singular {
        ensure(aronhold(&f(s)).disc_zero, || format!("discriminant does not vanish on {s}"))?;
    }
    let smooth = ["X^3+Y^3+Z^3", "Y^2*Z-X^3-X*Z^2", "X^3+Y^3+Z^3+3*X*Y*Z", "X^3+Y^3+Z^3-6*X*Y*Z", "Y^2*Z-X^3+X*Z^2-Z^3"];
    for s in smooth {
        ensure(!aronhold(&f(s)).disc_zero, || format!("discriminant vanishes on the smooth cubic {s}"))?;
    }
    Ok("weights 4 and 6 on 5 substitutions; 8 singular and 5 smooth cubics separated".into())
}

fn apolar() -> Outcome {
    let counts = |s: &str| {
        let m = apolar_generators(&f(s));
        (m.get(&2).copied().unwrap_or(0), m.get(&3).copied().unwrap_or(0))
    };
    let xyz = counts("X*Y*Z");
    let fermat = counts("X^3+Y^3+Z^3");
    let cusp = counts("Y^2*Z-X^3");
    ensure(xyz == (3, 0), || format!("XYZ {xyz:?}"))?;
    ensure(fermat == (3, 2), || format!("Fermat {fermat:?}"))?;
    ensure(cusp == (3, 2), || format!("cusp {cusp:?}"))?;
    Ok("XYZ {2:3, 3:0}; Fermat and cusp {2:3, 3:2}".into())
}

fn clauses_pass(r: &Report) -> Result<(), String> {
    match r.clauses.iter().find(|c| !c.pass) {
        Some(c) => Err(format!("{}: {}", c.name, c.detail)),
        None => Ok(()),
    }
}

fn smoothing() -> Outcome {
    let r = verify_smoothing_133(&Scalar::one(), &Scalar::one(), 0).map_err(err)?;
    clauses_pass(&r)?;
    Ok(r.clause("local_lengths").map(|c| c.detail.clone()).unwrap_or_default())
}

fn one_r_two() -> Outcome {
    let mut out = Vec::new();
    for (r, lambdas, want) in [(4usize, vec![Scalar::int(2)], 12usize), (5, vec![Scalar::int(2), Scalar::int(3)], 30)] {
        let b = build_1r2(r, &lambdas).map_err(err)?;
        let dim = b.linear_syzygy_dimension();
        ensure(dim == want && b.relation_rank() == want, || format!("r = {r}: {dim} syzygies"))?;
        let gens = b.dual_basis();
        for rel in b.relations.iter().filter(|rel| rel.name.len() == 5 && rel.terms.len() == 2) {
            ensure(b.syzygy(rel).residual(&gens).is_zero() && rel.correction.is_none(), || {
                format!("{} has a nonzero residual", rel.name)
            })?;
        }
        let report = verify_deformation_1r2(r, &lambdas, &Scalar::one(), 0).map_err(err)?;
        clauses_pass(&report)?;
        let l0 = b.ideal(&Scalar::zero()).length().map_err(err)?;
        let lt = b.ideal(&Scalar::one()).length().map_err(err)?;
        ensure(l0 == r + 3 && lt == r + 3, || format!("r = {r}: lengths {l0} and {lt}"))?;
        out.push(format!("r = {r}: {dim} syzygies, length {l0}"));
    }
    Ok(out.join("; "))
}

fn base_locus() -> Outcome {
    let mut empty = Vec::new();
    for (label, forms) in corpus() {
        let r = classify_net(&LinearSystem::new(&forms).unwrap(), 0).map_err(err)?;
        if r.scheme_length == Length::Finite(0) {
            empty.push(label);
        }
    }
    let want = [NetLabel::L8b, NetLabel::L8c, NetLabel::L7c, NetLabel::L6d];
    ensure(empty == want, || format!("base-point-free classes {empty:?}"))?;
    let pts = scheme_points(corpus_net(NetLabel::L8a).basis(), 0).map_err(err)?;
    let origin = [0, 0, 1].map(Scalar::int);
    ensure(pts.points.len() == 1 && pts.points[0].coords == origin, || format!("8a base points {:?}", pts.points))?;
    Ok("length 0 exactly for 8b, 8c, 7c, 6d; 8a based at (0:0:1)".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 16] = [
        ("normal-form corpus and invariance", corpus_invariance),
        ("Hesse special values", hesse_specials),
        ("discriminant table", table5),
        ("polar net table", table7),
        ("orbit dimensions", orbit_dimensions),
        ("duality", duality),
        ("pencils and pencil families", pencils),
        ("net specializations", net_specializations),
        ("cubic specializations", cubic_specializations),
        ("Hesse discriminant and Hessian identities", hesse_identities),
        ("Jacobian preimage", preimages),
        ("Aronhold invariants", aronhold_gate),
        ("apolar generator counts", apolar),
        ("(1,3,3) smoothing", smoothing),
        ("(1,r,2) relations and deformation", one_r_two),
        ("base-locus criterion", base_locus),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({ms} ms): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1} s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
