//! Cayley-Dickson doubling of the quaternions, kept as an independent
//! second route to the octonion product.
//!
//! `(z1 + z2 e4)(w1 + w2 e4) = z1 w1 - conj(w2) z2 + (z2 conj(w1) + w2 z1) e4`
//! with `e5 = e1 e4`, `e6 = e2 e4`, `e7 = e3 e4`.

use super::Octonion;

type Quat = [f64; 4];

fn qmul(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn qconj(a: Quat) -> Quat {
    [a[0], -a[1], -a[2], -a[3]]
}

fn split(w: &Octonion) -> (Quat, Quat) {
    let c = w.0;
    ([c[0], c[1], c[2], c[3]], [c[4], c[5], c[6], c[7]])
}

/// Octonion product computed by doubling the quaternions.
pub fn cayley_dickson_mul(a: &Octonion, b: &Octonion) -> Octonion {
    let (z1, z2) = split(a);
    let (w1, w2) = split(b);
    let p = qmul(z1, w1);
    let q = qmul(qconj(w2), z2);
    let r = qmul(z2, qconj(w1));
    let s = qmul(w2, z1);
    Octonion([
        p[0] - q[0],
        p[1] - q[1],
        p[2] - q[2],
        p[3] - q[3],
        r[0] + s[0],
        r[1] + s[1],
        r[2] + s[2],
        r[3] + s[3],
    ])
}
