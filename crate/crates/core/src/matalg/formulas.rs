//! Closed coordinate formulas for the products in `A(q)` and `R(q)`.
//!
//! Points are given in centered coordinates `(x − h, y − k)`. The matrix
//! code in the parent module never calls these; they exist so tests can
//! compare two independent routes.

use crate::numeric::Scalar;
use crate::quadform::QuadraticForm;

/// `(u, v)` of `[x₁,y₁]_q · [x₂,y₂]_q^*`.
pub fn pair_product<F: Scalar>(q: &QuadraticForm<F>, p1: (&F, &F), p2: (&F, &F)) -> (F, F) {
    let ((x1, y1), (x2, y2)) = (p1, p2);
    let u = q.a.clone() * x1.clone() * x2.clone()
        + q.b.clone() * x1.clone() * y2.clone()
        + q.c.clone() * y1.clone() * y2.clone();
    let v = x2.clone() * y1.clone() - x1.clone() * y2.clone();
    (u, v)
}

/// `[u₁,v₁]_{q,0} · [u₂,v₂]_{q,0} = [u₁u₂ − a c v₁v₂, u₁v₂ + v₁u₂ + b v₁v₂]_{q,0}`.
pub fn ring_product<F: Scalar>(q: &QuadraticForm<F>, g: (&F, &F), h: (&F, &F)) -> (F, F) {
    let ((u1, v1), (u2, v2)) = (g, h);
    (
        u1.clone() * u2.clone() - q.a.clone() * q.c.clone() * v1.clone() * v2.clone(),
        u1.clone() * v2.clone() + v1.clone() * u2.clone() + q.b.clone() * v1.clone() * v2.clone(),
    )
}

/// Centered coordinates of `[u,v]_{q,0} · [x,y]_q`:
/// `(u x − c v y, u y + a v x + b v y)`.
pub fn action<F: Scalar>(q: &QuadraticForm<F>, g: (&F, &F), p: (&F, &F)) -> (F, F) {
    let ((u, v), (x, y)) = (g, p);
    (
        u.clone() * x.clone() - q.c.clone() * v.clone() * y.clone(),
        u.clone() * y.clone() + q.a.clone() * v.clone() * x.clone() + q.b.clone() * v.clone() * y.clone(),
    )
}

/// `det [u,v]_{q,0} = u² + b u v + a c v²`.
pub fn ring_det<F: Scalar>(q: &QuadraticForm<F>, u: &F, v: &F) -> F {
    u.square() + q.b.clone() * u.clone() * v.clone() + q.a.clone() * q.c.clone() * v.square()
}
