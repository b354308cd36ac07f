//! Determinants of form-valued matrices and Sylvester resultants.

use conet_kernel::Scalar;

use crate::form::HForm;
use crate::PolyError;

/// Determinant of a square matrix of forms by cofactor expansion along the first row.
pub fn form_det(m: &[Vec<HForm>]) -> HForm {
    let n = m.len();
    if n == 0 {
        return HForm::constant(Scalar::one());
    }
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, 0, &cols)
}

fn det_rec(m: &[Vec<HForm>], row: usize, cols: &[usize]) -> HForm {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc: Option<HForm> = None;
    for (k, &c) in cols.iter().enumerate() {
        let e = &m[row][c];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let mut t = e.mul(&det_rec(m, row + 1, &rest));
        if k % 2 == 1 {
            t = t.neg();
        }
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    acc.unwrap_or_else(|| {
        let deg = (row..m.len()).map(|r| m[r][cols[0]].degree()).sum();
        HForm::zero(deg)
    })
}

/// Determinant of a 3x3 matrix of forms of one common degree.
pub fn form_det3(m: &[[HForm; 3]; 3]) -> Result<HForm, PolyError> {
    let d = m[0][0].degree();
    if m.iter().flatten().any(|e| e.degree() != d) {
        return Err(PolyError::DegreeMismatch);
    }
    let rows: Vec<Vec<HForm>> = m.iter().map(|r| r.to_vec()).collect();
    let det = form_det(&rows);
    Ok(if det.is_zero() { HForm::zero(3 * d).with_vars(m[0][0].vars()) } else { det })
}

/// Coefficients of `F` as a polynomial in variable `var`: entry `k` multiplies `var^k`
/// and is a form in the remaining variables (kept in the same exponent layout).
fn coefficients_in(f: &HForm, var: usize) -> Vec<HForm> {
    let dv = f.terms().map(|(e, _)| e[var]).max().unwrap_or(0) as usize;
    (0..=dv)
        .map(|k| {
            let terms: Vec<_> = f
                .terms()
                .filter(|(e, _)| e[var] as usize == k)
                .map(|(e, c)| {
                    let mut g = *e;
                    g[var] = 0;
                    (g, c.clone())
                })
                .collect();
            HForm::from_terms(f.degree() - k as u32, terms).expect("homogeneous slice")
        })
        .collect()
}

/// Sylvester resultant of `F` and `G` with respect to variable `var`, scaled to leading
/// coefficient 1. The result is a form in the two other variables.
pub fn eliminate(f: &HForm, g: &HForm, var: usize) -> Result<HForm, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroForm);
    }
    let a = coefficients_in(f, var);
    let b = coefficients_in(g, var);
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Ok(HForm::constant(Scalar::one()));
    }
    let zero_like = |deg: u32| HForm::zero(deg);
    let mut rows: Vec<Vec<HForm>> = Vec::with_capacity(size);
    for i in 0..n {
        let row = (0..size)
            .map(|j| {
                let k = m as isize - (j as isize - i as isize);
                if (0..=m as isize).contains(&k) && j >= i {
                    a[k as usize].clone()
                } else {
                    zero_like(0)
                }
            })
            .collect();
        rows.push(row);
    }
    for i in 0..m {
        let row = (0..size)
            .map(|j| {
                let k = n as isize - (j as isize - i as isize);
                if (0..=n as isize).contains(&k) && j >= i {
                    b[k as usize].clone()
                } else {
                    zero_like(0)
                }
            })
            .collect();
        rows.push(row);
    }
    let r = form_det(&rows);
    Ok(r.normalized().with_vars(f.vars()))
}
