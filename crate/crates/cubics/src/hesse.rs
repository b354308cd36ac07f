//! The Hesse pencil `X^3+Y^3+Z^3+3 lambda XYZ`.

use conet_kernel::Scalar;
use conet_poly::{f, HForm};

/// A member of the pencil with its j-value; `j` is `None` at the three singular members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessePoint {
    pub lambda: Scalar,
    pub j: Option<Scalar>,
}

impl HessePoint {
    pub fn new(lambda: Scalar) -> Self {
        let j = hesse_j(&lambda);
        HessePoint { lambda, j }
    }

    pub fn cubic(&self) -> HForm {
        hesse_cubic(&self.lambda)
    }
}

pub fn hesse_cubic(lambda: &Scalar) -> HForm {
    f("X^3+Y^3+Z^3").add(&f("X*Y*Z").scale(&(Scalar::int(3) * lambda)))
}

/// The net of partials divided by 3: `<X^2+lambda YZ, Y^2+lambda XZ, Z^2+lambda XY>`.
pub fn hesse_net_forms(lambda: &Scalar) -> [HForm; 3] {
    [("X^2", "Y*Z"), ("Y^2", "X*Z"), ("Z^2", "X*Y")].map(|(a, b)| f(a).add(&f(b).scale(lambda)))
}

/// `lambda^3 (lambda^3-8)^3 / (27 (lambda+1)^3 (lambda+w)^3 (lambda+w^2)^3)`.
pub fn hesse_j(lambda: &Scalar) -> Option<Scalar> {
    let l3 = lambda.pow(3);
    let den = [Scalar::one(), Scalar::omega(), Scalar::omega2()]
        .iter()
        .map(|r| (lambda + r).pow(3))
        .product::<Scalar>()
        * Scalar::int(27);
    let num = &l3 * (&l3 - Scalar::int(8)).pow(3);
    den.inv().map(|d| num * d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HesseFacts {
    /// The nine base points of the pencil.
    pub inflections: Vec<[Scalar; 3]>,
    /// `XYZ` and the members at `lambda = -1, -w, -w^2`.
    pub singular_members: Vec<HForm>,
    /// Parameters of the members isomorphic to the Fermat cubic.
    pub fermat_members: Vec<Scalar>,
}

pub fn hesse_pencil_facts() -> HesseFacts {
    let roots = [Scalar::one(), Scalar::omega(), Scalar::omega2()];
    let mut inflections = Vec::with_capacity(9);
    for pattern in [[None, Some(0), Some(1)], [Some(0), None, Some(1)], [Some(0), Some(1), None]] {
        for r in &roots {
            let p: [Scalar; 3] = pattern.map(|slot| match slot {
                None => Scalar::zero(),
                Some(0) => Scalar::one(),
                Some(_) => -r.clone(),
            });
            inflections.push(p);
        }
    }
    for lambda in [Scalar::int(1), Scalar::int(5), Scalar::frac(-2, 3)] {
        let c = hesse_cubic(&lambda);
        assert!(inflections.iter().all(|p| c.evaluate(p).is_zero()), "base point off the pencil");
    }
    let mut singular_members = vec![f("X*Y*Z")];
    singular_members.extend(roots.iter().map(|r| hesse_cubic(&-r.clone())));
    let fermat_members = vec![Scalar::zero(), Scalar::int(2), Scalar::int(2) * Scalar::omega(), Scalar::int(2) * Scalar::omega2()];
    HesseFacts { inflections, singular_members, fermat_members }
}
