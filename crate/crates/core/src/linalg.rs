//! Fixed-size 3D linear algebra and the symmetric 3×3 eigenproblem.
//!
//! The eigensolver is a two-stage hybrid. The fast path evaluates the
//! trigonometric closed form for the roots of the characteristic cubic,
//! polishes each root with one Newton step, and recovers eigenvectors from
//! cross products of the rows of `A − λI`. When eigenvalues cluster, or the
//! fast path's residual check fails, it falls back to cyclic Jacobi
//! rotations, which stay orthogonal by construction.

use core::f64::consts::TAU;

#[allow(unused_imports)]
use num_traits::Float;

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];

pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm(a: &Vec3) -> f64 {
    dot(a, a).sqrt()
}

/// Returns `a / |a|`, or the zero vector if `a` is zero.
pub fn normalize(a: &Vec3) -> Vec3 {
    let n = norm(a);
    if n == 0.0 {
        return [0.0; 3];
    }
    [a[0] / n, a[1] / n, a[2] / n]
}

pub fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

pub fn frobenius(m: &Mat3) -> f64 {
    let mut s = 0.0;
    for row in m {
        for x in row {
            s += x * x;
        }
    }
    s.sqrt()
}

fn det3(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Coefficients `[c2, c1, c0]` of the monic characteristic polynomial
/// `det(λI − M) = λ³ + c2 λ² + c1 λ + c0`.
pub fn char_poly_coeffs(m: &Mat3) -> [f64; 3] {
    let tr = m[0][0] + m[1][1] + m[2][2];
    let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2]
        - m[1][2] * m[2][1];
    [-tr, minors, -det3(m)]
}

/// Eigendecomposition of a symmetric 3×3 matrix: `values` ascending,
/// `vectors[i]` the unit eigenvector for `values[i]`, right-handed and
/// mutually orthogonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymEigen3 {
    pub values: [f64; 3],
    pub vectors: [Vec3; 3],
}

/// Relative eigenvalue gap below which the fast path hands over to Jacobi.
/// Cross-product eigenvectors lose roughly the gap in accuracy, so a 1e-6
/// margin keeps their residuals far below the 1e-11 acceptance line.
const CLUSTER_GAP: f64 = 1e-6;

/// Residual bound, relative to the scaled matrix, above which the fast
/// path's result is discarded in favor of Jacobi.
const RESIDUAL_BOUND: f64 = 1e-11;

/// Solves the symmetric 3×3 eigenproblem. Only the lower and upper triangle
/// average enters implicitly: the matrix is assumed exactly symmetric and
/// the entries are read as given.
pub fn sym_eigen_3x3(a: &Mat3) -> SymEigen3 {
    let scale = a.iter().flatten().fold(0.0_f64, |acc, x| acc.max(x.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return SymEigen3 {
            values: [0.0; 3],
            vectors: identity_vectors(),
        };
    }
    let mut b = *a;
    for row in &mut b {
        for x in row {
            *x /= scale;
        }
    }

    let off2 = b[0][1] * b[0][1] + b[0][2] * b[0][2] + b[1][2] * b[1][2];
    if off2 <= 1e-30 {
        let mut out = sort_pairs([b[0][0], b[1][1], b[2][2]], identity_vectors());
        for v in &mut out.values {
            *v *= scale;
        }
        return out;
    }

    let mut values = closed_form_roots(&b, off2);
    newton_polish(&b, &mut values);

    let gap = (values[1] - values[0]).min(values[2] - values[1]);
    let result = if gap < CLUSTER_GAP {
        jacobi_eigen(&b)
    } else {
        match vectors_from_cross_products(&b, &values) {
            Some(vectors) => SymEigen3 { values, vectors },
            None => jacobi_eigen(&b),
        }
    };

    let mut checked = if max_residual(&b, &result) > RESIDUAL_BOUND {
        jacobi_eigen(&b)
    } else {
        result
    };
    for v in &mut checked.values {
        *v *= scale;
    }
    checked
}

fn identity_vectors() -> [Vec3; 3] {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

fn sort_pairs(values: [f64; 3], vectors: [Vec3; 3]) -> SymEigen3 {
    let mut idx = [0usize, 1, 2];
    if values[idx[0]] > values[idx[1]] {
        idx.swap(0, 1);
    }
    if values[idx[1]] > values[idx[2]] {
        idx.swap(1, 2);
    }
    if values[idx[0]] > values[idx[1]] {
        idx.swap(0, 1);
    }
    SymEigen3 {
        values: [values[idx[0]], values[idx[1]], values[idx[2]]],
        vectors: [vectors[idx[0]], vectors[idx[1]], vectors[idx[2]]],
    }
}

/// Trigonometric solution of the characteristic cubic of a scaled symmetric
/// matrix, returned ascending.
fn closed_form_roots(b: &Mat3, off2: f64) -> [f64; 3] {
    let q = (b[0][0] + b[1][1] + b[2][2]) / 3.0;
    let p2 = (b[0][0] - q).powi(2) + (b[1][1] - q).powi(2) + (b[2][2] - q).powi(2) + 2.0 * off2;
    let p = (p2 / 6.0).sqrt();
    if p == 0.0 {
        return [q, q, q];
    }
    let mut c = *b;
    for (i, row) in c.iter_mut().enumerate() {
        row[i] -= q;
        for x in row.iter_mut() {
            *x /= p;
        }
    }
    let r = (det3(&c) / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + TAU / 3.0).cos();
    [lo, 3.0 * q - hi - lo, hi]
}

/// One Newton step on each root of the characteristic polynomial, skipped
/// where the derivative is too small to divide by (near-multiple roots).
fn newton_polish(b: &Mat3, values: &mut [f64; 3]) {
    let [c2, c1, c0] = char_poly_coeffs(b);
    for v in values.iter_mut() {
        let p = ((*v + c2) * *v + c1) * *v + c0;
        let dp = (3.0 * *v + 2.0 * c2) * *v + c1;
        if dp.abs() > 1e-8 {
            *v -= p / dp;
        }
    }
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
}

/// Eigenvectors as the largest cross product of two rows of `B − λI`; the
/// third vector completes a right-handed orthonormal set. Returns `None`
/// when a cross product degenerates, which signals a missed cluster.
fn vectors_from_cross_products(b: &Mat3, values: &[f64; 3]) -> Option<[Vec3; 3]> {
    let mut vectors = [[0.0; 3]; 3];
    for (slot, &lambda) in values.iter().enumerate().take(2) {
        let mut m = *b;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= lambda;
        }
        let candidates = [
            cross(&m[0], &m[1]),
            cross(&m[1], &m[2]),
            cross(&m[2], &m[0]),
        ];
        let best = candidates
            .iter()
            .max_by(|x, y| {
                norm(x)
                    .partial_cmp(&norm(y))
                    .expect("finite cross products")
            })
            .copied()?;
        if norm(&best) < 1e-12 {
            return None;
        }
        vectors[slot] = normalize(&best);
    }
    let proj = dot(&vectors[1], &vectors[0]);
    for d in 0..3 {
        vectors[1][d] -= proj * vectors[0][d];
    }
    if norm(&vectors[1]) < 1e-6 {
        return None;
    }
    vectors[1] = normalize(&vectors[1]);
    vectors[2] = cross(&vectors[0], &vectors[1]);
    Some(vectors)
}

fn max_residual(b: &Mat3, e: &SymEigen3) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..3 {
        let bv = mat_vec(b, &e.vectors[i]);
        let mut r2 = 0.0;
        for d in 0..3 {
            let r = bv[d] - e.values[i] * e.vectors[i][d];
            r2 += r * r;
        }
        worst = worst.max(r2.sqrt());
    }
    worst
}

/// Cyclic Jacobi rotations with accumulated eigenvectors. Robust for any
/// spectrum; quadratically convergent, so a handful of sweeps suffices.
fn jacobi_eigen(b: &Mat3) -> SymEigen3 {
    let mut a = *b;
    let mut v: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    for _ in 0..50 {
        let off2 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
        if off2 <= 1e-32 {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let apq = a[p][q];
            if apq.abs() <= 1e-300 {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;

            let (app, aqq) = (a[p][p], a[q][q]);
            a[p][p] = app - t * apq;
            a[q][q] = aqq + t * apq;
            a[p][q] = 0.0;
            a[q][p] = 0.0;
            let r = 3 - p - q;
            let (arp, arq) = (a[r][p], a[r][q]);
            a[r][p] = c * arp - s * arq;
            a[p][r] = a[r][p];
            a[r][q] = s * arp + c * arq;
            a[q][r] = a[r][q];
            for row in &mut v {
                let (vp, vq) = (row[p], row[q]);
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }
    let vectors = [
        [v[0][0], v[1][0], v[2][0]],
        [v[0][1], v[1][1], v[2][1]],
        [v[0][2], v[1][2], v[2][2]],
    ];
    sort_pairs([a[0][0], a[1][1], a[2][2]], vectors)
}
