//! Closed-form composition identities for `a x² + b x y + c y²`, and the
//! fourth-point formula on the projective conic `a x² + b y² + c z² = 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{Rational, Scalar};
use crate::quadform::QuadraticForm;

/// `a x² + b x y + c y²`. Any coefficients are allowed, including `Disc = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousForm<F> {
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Scalar> HomogeneousForm<F> {
    pub fn new(a: F, b: F, c: F) -> Self {
        HomogeneousForm { a, b, c }
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        self.a.clone() * x.square() + self.b.clone() * x.clone() * y.clone() + self.c.clone() * y.square()
    }

    /// `u² + b u v + a c v²`.
    pub fn eval_norm(&self, u: &F, v: &F) -> F {
        u.square() + self.b.clone() * u.clone() * v.clone() + self.a.clone() * self.c.clone() * v.square()
    }

    pub fn to_form(&self) -> QuadraticForm<F> {
        QuadraticForm::homogeneous(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

/// `(u, v)` with `q(P₁)·q(P₂) = u² + b u v + a c v²`.
pub fn compose2<F: Scalar>(f: &HomogeneousForm<F>, p1: (&F, &F), p2: (&F, &F)) -> (F, F) {
    let ((x1, y1), (x2, y2)) = (p1, p2);
    let u = f.a.clone() * x1.clone() * x2.clone()
        + f.b.clone() * x1.clone() * y2.clone()
        + f.c.clone() * y1.clone() * y2.clone();
    let v = y1.clone() * x2.clone() - x1.clone() * y2.clone();
    debug_assert!(f.eval(x1, y1) * f.eval(x2, y2) == f.eval_norm(&u, &v), "two-fold identity failed");
    (u, v)
}

/// `(x, y)` with `q(P₁)·q(P₂)·q(P₃) = q(x, y)`.
pub fn compose3<F: Scalar>(f: &HomogeneousForm<F>, p1: (&F, &F), p2: (&F, &F), p3: (&F, &F)) -> (F, F) {
    let (x, y) = fourth(&f.a, &f.b, &f.c, p1, p2, p3);
    debug_assert!(
        f.eval(p1.0, p1.1) * f.eval(p2.0, p2.1) * f.eval(p3.0, p3.1) == f.eval(&x, &y),
        "three-fold identity failed"
    );
    (x, y)
}

// x = a·x₁x₂x₃ + b·x₁y₂x₃ + c·(x₁y₂y₃ − y₁x₂y₃ + y₁y₂x₃)
// y = a·(x₁x₂y₃ − x₁y₂x₃ + y₁x₂x₃) + b·y₁x₂y₃ + c·y₁y₂y₃
fn fourth<F: Scalar>(a: &F, b: &F, c: &F, p1: (&F, &F), p2: (&F, &F), p3: (&F, &F)) -> (F, F) {
    let ((x1, y1), (x2, y2), (x3, y3)) = (p1, p2, p3);
    let m = |p: &F, q: &F, r: &F| p.clone() * q.clone() * r.clone();
    let x = a.clone() * m(x1, x2, x3)
        + b.clone() * m(x1, y2, x3)
        + c.clone() * (m(x1, y2, y3) - m(y1, x2, y3) + m(y1, y2, x3));
    let y = a.clone() * (m(x1, x2, y3) - m(x1, y2, x3) + m(y1, x2, x3))
        + b.clone() * m(y1, x2, y3)
        + c.clone() * m(y1, y2, y3);
    (x, y)
}

/// `a x² + b y² + c z²`.
pub fn diagonal_eval<F: Scalar>(abc: [&F; 3], p: [&F; 3]) -> F {
    let [a, b, c] = abc;
    a.clone() * p[0].square() + b.clone() * p[1].square() + c.clone() * p[2].square()
}

/// A fourth point on `a x² + b y² + c z² = 0` from three given ones.
/// The result is returned unscaled.
pub fn proj_compose3<F: Scalar>(a: &F, b: &F, c: &F, pts: [[&F; 3]; 3]) -> Result<[F; 3]> {
    for p in &pts {
        if p.iter().all(|t| t.is_zero()) {
            return Err(Error::ZeroPoint);
        }
        if !diagonal_eval([a, b, c], *p).is_zero() {
            return Err(Error::NotOnVariety(format!("({}, {}, {})", p[0], p[1], p[2])));
        }
    }
    let [p1, p2, p3] = pts;
    let zero = a.zero_like();
    // the xy-part is the three-fold product for a x² + 0·x y + b y²
    let (x, y) = fourth(a, &zero, b, (p1[0], p1[1]), (p2[0], p2[1]), (p3[0], p3[1]));
    let z = c.clone() * p1[2].clone() * p2[2].clone() * p3[2].clone();
    debug_assert!(diagonal_eval([a, b, c], [&x, &y, &z]).is_zero(), "fourth point off the variety");
    Ok([x, y, z])
}

/// Scales a projective point to coprime integers whose first nonzero entry
/// is positive.
pub fn normalize_projective(p: &[Rational]) -> Result<Vec<BigInt>> {
    if p.iter().all(|t| t.is_zero()) {
        return Err(Error::ZeroPoint);
    }
    let lcm = p.iter().fold(BigInt::from(1), |l, t| l.lcm(t.denom()));
    let ints: Vec<BigInt> = p.iter().map(|t| t.numer() * (&lcm / t.denom())).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |g, n| g.gcd(n));
    if ints.iter().find(|n| !n.is_zero()).is_some_and(|n| n.is_negative()) {
        g = -g;
    }
    Ok(ints.into_iter().map(|n| n / &g).collect())
}
