use std::fmt;

use crate::numeric::Scalar;

/// A plain 2×2 matrix `[[m00, m01], [m10, m11]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2<F> {
    pub m: [[F; 2]; 2],
}

impl<F: Scalar> Mat2<F> {
    pub fn new(m00: F, m01: F, m10: F, m11: F) -> Self {
        Mat2 { m: [[m00, m01], [m10, m11]] }
    }

    pub fn identity_like(sample: &F) -> Self {
        Self::new(sample.one_like(), sample.zero_like(), sample.zero_like(), sample.one_like())
    }

    pub fn zero_like(sample: &F) -> Self {
        Self::new(sample.zero_like(), sample.zero_like(), sample.zero_like(), sample.zero_like())
    }

    pub fn det(&self) -> F {
        let [[p, q], [r, s]] = &self.m;
        p.clone() * s.clone() - q.clone() * r.clone()
    }

    /// Transpose of the cofactor matrix; `adj(M)·M = det(M)·1`.
    pub fn adjugate(&self) -> Self {
        let [[p, q], [r, s]] = &self.m;
        Self::new(s.clone(), -q.clone(), -r.clone(), p.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let a = &self.m;
        let b = &rhs.m;
        let entry = |i: usize, j: usize| a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone();
        Self::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, |x, y| x + y)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, |x, y| x - y)
    }

    pub fn scale(&self, s: &F) -> Self {
        let [[p, q], [r, t]] = &self.m;
        Self::new(s.clone() * p.clone(), s.clone() * q.clone(), s.clone() * r.clone(), s.clone() * t.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Scalar::is_zero)
    }

    fn zip(&self, rhs: &Self, op: impl Fn(F, F) -> F) -> Self {
        let [[p, q], [r, s]] = self.m.clone();
        let [[p2, q2], [r2, s2]] = rhs.m.clone();
        Self::new(op(p, p2), op(q, q2), op(r, r2), op(s, s2))
    }
}

impl<F: fmt::Display> fmt::Display for Mat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[p, q], [r, s]] = &self.m;
        write!(f, "[[{p}, {q}], [{r}, {s}]]")
    }
}
