//! The matrix space `A(q)` and the commutative ring `R(q)`.
//!
//! An element `[x, y]_q` of `A(q)` is the matrix
//!
//! ```text
//! [ x−h        −c(y−k)        ]
//! [ y−k     a(x−h) + b(y−k)   ]
//! ```
//!
//! and an element `[u, v]_{q,0}` of `R(q)` is `[[u, −c v], [a v, u + b v]]`.
//! Elements store their coordinates; every product is computed by literal
//! 2×2 matrix multiplication and read back into coordinates, failing loudly
//! if the result leaves the expected shape. The closed coordinate formulas
//! live in [`formulas`] and serve as an independent cross-check.
//!
//! The product in `R(q)` is
//! `[u₁u₂ − a c v₁v₂, u₁v₂ + v₁u₂ + b v₁v₂]_{q,0}`. A frequently reproduced
//! variant ends in `b u₁v₂` instead; it is not what matrix multiplication
//! gives and is not even commutative (see `formulas` tests).

pub mod formulas;
mod matrix;
mod structure;

use std::fmt;
use std::sync::Arc;

pub use matrix::Mat2;
pub use structure::AlgebraStructure;

use crate::error::{Error, Result};
use crate::numeric::Scalar;
use crate::quadform::QuadraticForm;

/// Shared handle to a form; elements over the same form share one cache.
pub type FormRef<F> = Arc<QuadraticForm<F>>;

fn same_form<F: Scalar>(p: &FormRef<F>, q: &FormRef<F>) -> Result<()> {
    if Arc::ptr_eq(p, q) || **p == **q {
        Ok(())
    } else {
        Err(Error::FormMismatch)
    }
}

/// `[x, y]_q ∈ A(q)`; requires `Disc(q) ≠ 0`.
#[derive(Clone)]
pub struct AlgebraElement<F: Scalar> {
    form: FormRef<F>,
    x: F,
    y: F,
}

impl<F: Scalar> AlgebraElement<F> {
    pub fn new(form: &FormRef<F>, x: F, y: F) -> Result<Self> {
        form.center()?;
        Ok(AlgebraElement { form: Arc::clone(form), x, y })
    }

    /// The zero matrix, i.e. the center of the form.
    pub fn zero(form: &FormRef<F>) -> Result<Self> {
        let (h, k) = form.center()?;
        Ok(AlgebraElement { form: Arc::clone(form), x: h, y: k })
    }

    fn center(&self) -> (F, F) {
        self.form.center().expect("checked at construction")
    }

    fn from_centered(form: &FormRef<F>, dx: F, dy: F) -> Self {
        let (h, k) = form.center().expect("checked at construction");
        AlgebraElement { form: Arc::clone(form), x: dx + h, y: dy + k }
    }

    pub fn form(&self) -> &FormRef<F> {
        &self.form
    }

    pub fn x(&self) -> &F {
        &self.x
    }

    pub fn y(&self) -> &F {
        &self.y
    }

    pub fn point(&self) -> (F, F) {
        (self.x.clone(), self.y.clone())
    }

    /// `(x − h, y − k)`.
    pub fn centered(&self) -> (F, F) {
        let (h, k) = self.center();
        (self.x.clone() - h, self.y.clone() - k)
    }

    pub fn matrix(&self) -> Mat2<F> {
        let q = &*self.form;
        let (dx, dy) = self.centered();
        Mat2::new(
            dx.clone(),
            -(q.c.clone() * dy.clone()),
            dy.clone(),
            q.a.clone() * dx + q.b.clone() * dy,
        )
    }

    /// Reads a matrix back as an element of `A(q)`.
    pub fn from_matrix(form: &FormRef<F>, m: &Mat2<F>) -> Result<Self> {
        form.center()?;
        let [[dx, top_right], [dy, bottom_right]] = &m.m;
        let expected_tr = -(form.c.clone() * dy.clone());
        let expected_br = form.a.clone() * dx.clone() + form.b.clone() * dy.clone();
        if *top_right != expected_tr || *bottom_right != expected_br {
            return Err(Error::ShapeMismatch("A(q)"));
        }
        Ok(Self::from_centered(form, dx.clone(), dy.clone()))
    }

    /// `det [x, y]_q = q(x, y) + m_q`.
    pub fn det(&self) -> F {
        self.matrix().det()
    }

    /// `[x, y]_q^*`, the transpose of the cofactor matrix.
    pub fn adjugate(&self) -> Mat2<F> {
        self.matrix().adjugate()
    }

    pub fn is_zero(&self) -> bool {
        let (dx, dy) = self.centered();
        dx.is_zero() && dy.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        same_form(&self.form, &rhs.form)?;
        let ((x1, y1), (x2, y2)) = (self.centered(), rhs.centered());
        Ok(Self::from_centered(&self.form, x1 + x2, y1 + y2))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        same_form(&self.form, &rhs.form)?;
        let ((x1, y1), (x2, y2)) = (self.centered(), rhs.centered());
        Ok(Self::from_centered(&self.form, x1 - x2, y1 - y2))
    }

    pub fn scale(&self, alpha: &F) -> Self {
        let (dx, dy) = self.centered();
        Self::from_centered(&self.form, alpha.clone() * dx, alpha.clone() * dy)
    }

    /// `A · B^*`, an element of `R(q)`.
    pub fn pair_product(&self, rhs: &Self) -> Result<RingElement<F>> {
        same_form(&self.form, &rhs.form)?;
        RingElement::from_matrix(&self.form, &self.matrix().mul(&rhs.adjugate()))
    }

    /// The ternary product `A · B^* · C`.
    pub fn triple(&self, b: &Self, c: &Self) -> Result<Self> {
        same_form(&self.form, &b.form)?;
        same_form(&self.form, &c.form)?;
        let q = &*self.form;
        let ((x1, y1), (x2, y2), (x3, y3)) = (self.centered(), b.centered(), c.centered());
        // only the first column of A·B^*·C is needed
        let p = (q.a.clone() * x2.clone() + q.b.clone() * y2.clone()) * x3.clone() + q.c.clone() * y2.clone() * y3.clone();
        let r = x2 * y3 - y2 * x3;
        let dx = x1.clone() * p.clone() - q.c.clone() * y1.clone() * r.clone();
        let dy = y1.clone() * p + (q.a.clone() * x1 + q.b.clone() * y1) * r;
        Ok(Self::from_centered(&self.form, dx, dy))
    }
}

impl<F: Scalar> PartialEq for AlgebraElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y && (Arc::ptr_eq(&self.form, &other.form) || *self.form == *other.form)
    }
}

impl<F: Scalar> Eq for AlgebraElement<F> {}

impl<F: Scalar> fmt::Debug for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_q", self.x, self.y)
    }
}

/// `[u, v]_{q,0} ∈ R(q)`.
#[derive(Clone)]
pub struct RingElement<F: Scalar> {
    form: FormRef<F>,
    u: F,
    v: F,
}

impl<F: Scalar> RingElement<F> {
    pub fn new(form: &FormRef<F>, u: F, v: F) -> Self {
        RingElement { form: Arc::clone(form), u, v }
    }

    /// `[1, 0]_{q,0}`, the identity matrix.
    pub fn one(form: &FormRef<F>) -> Self {
        Self::new(form, form.a.one_like(), form.a.zero_like())
    }

    pub fn form(&self) -> &FormRef<F> {
        &self.form
    }

    pub fn u(&self) -> &F {
        &self.u
    }

    pub fn v(&self) -> &F {
        &self.v
    }

    pub fn coords(&self) -> (F, F) {
        (self.u.clone(), self.v.clone())
    }

    pub fn matrix(&self) -> Mat2<F> {
        let q = &*self.form;
        Mat2::new(
            self.u.clone(),
            -(q.c.clone() * self.v.clone()),
            q.a.clone() * self.v.clone(),
            self.u.clone() + q.b.clone() * self.v.clone(),
        )
    }

    /// Reads a matrix back as an element of `R(q)`.
    pub fn from_matrix(form: &FormRef<F>, m: &Mat2<F>) -> Result<Self> {
        let [[u, top_right], [bottom_left, bottom_right]] = &m.m;
        let (a, b, c) = (&form.a, &form.b, &form.c);
        let diff = bottom_right.clone() - u.clone();
        let v = if !a.is_zero() {
            bottom_left.try_div(a)?
        } else if !c.is_zero() {
            (-top_right.clone()).try_div(c)?
        } else if !b.is_zero() {
            diff.try_div(b)?
        } else {
            u.zero_like()
        };
        let candidate = Self::new(form, u.clone(), v);
        if candidate.matrix() != *m {
            return Err(Error::ShapeMismatch("R(q)"));
        }
        Ok(candidate)
    }

    /// `u² + b u v + a c v²`.
    pub fn det(&self) -> F {
        self.matrix().det()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        same_form(&self.form, &rhs.form)?;
        Self::from_matrix(&self.form, &self.matrix().add(&rhs.matrix()))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        same_form(&self.form, &rhs.form)?;
        Self::from_matrix(&self.form, &self.matrix().sub(&rhs.matrix()))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        same_form(&self.form, &rhs.form)?;
        Self::from_matrix(&self.form, &self.matrix().mul(&rhs.matrix()))
    }

    /// The left module action `g · C`.
    pub fn act(&self, c: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        same_form(&self.form, &c.form)?;
        AlgebraElement::from_matrix(&self.form, &self.matrix().mul(&c.matrix()))
    }
}

impl<F: Scalar> PartialEq for RingElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.u == other.u && self.v == other.v && (Arc::ptr_eq(&self.form, &other.form) || *self.form == *other.form)
    }
}

impl<F: Scalar> Eq for RingElement<F> {}

impl<F: Scalar> fmt::Debug for RingElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_q,0", self.u, self.v)
    }
}

/// The point of `[x₁,y₁]_q · [x₂,y₂]_q⁻¹ · [x₃,y₃]_q`, with the inverse
/// taken as `adj(B)/det(B)`.
pub fn affine_triple<F: Scalar>(form: &FormRef<F>, p1: (F, F), p2: (F, F), p3: (F, F)) -> Result<(F, F)> {
    let a = AlgebraElement::new(form, p1.0, p1.1)?;
    let b = AlgebraElement::new(form, p2.0, p2.1)?;
    let c = AlgebraElement::new(form, p3.0, p3.1)?;
    let inv_det = b.det().try_inv().map_err(|_| Error::SingularElement)?;
    Ok(a.triple(&b, &c)?.scale(&inv_det).point())
}

/// Offsets from the center tried by [`base_pair`]: shell `n` visits `(n,0)`,
/// `(0,n)`, then `(n,1..=n)` and `(1..n,n)`.
fn base_candidates(max_shell: i64) -> impl Iterator<Item = (i64, i64)> {
    (1..=max_shell).flat_map(|n| {
        [(n, 0), (0, n)]
            .into_iter()
            .chain((1..=n).map(move |j| (n, j)))
            .chain((1..n).map(move |i| (i, n)))
    })
}

/// `(B₀, C₀)` with `B₀^* · C₀ = 1`, hence `A · B₀^* · C₀ = A` for every `A`.
///
/// `B₀` is the first candidate around the center with nonzero determinant;
/// one of the first three always qualifies because the quadratic part is
/// nonzero whenever `Disc(q) ≠ 0`.
pub fn base_pair<F: Scalar>(form: &FormRef<F>) -> Result<(AlgebraElement<F>, AlgebraElement<F>)> {
    let (h, k) = form.center()?;
    for (i, j) in base_candidates(2) {
        let b0 = AlgebraElement::new(form, h.int_like(i) + h.clone(), k.int_like(j) + k.clone())?;
        if let Ok(inv) = b0.det().try_inv() {
            let c0 = b0.scale(&inv);
            return Ok((b0, c0));
        }
    }
    Err(Error::DegenerateDisc)
}
