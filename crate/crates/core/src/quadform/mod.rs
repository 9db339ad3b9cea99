//! The general binary quadratic form
//! `q(x, y) = a x² + b x y + c y² + d x + e y + f` and its invariants.

mod parse;
mod search;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{PrimeField, PrimeFieldElement, Rational, Scalar};

/// Derived constants of a form.
///
/// `h`, `k` and `m` exist exactly when `disc ≠ 0`; they are never stored
/// as zero in the degenerate case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormInvariants<F> {
    pub det3: F,
    pub disc: F,
    pub h: Option<F>,
    pub k: Option<F>,
    pub m: Option<F>,
}

pub struct QuadraticForm<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
    pub e: F,
    pub f: F,
    invariants: OnceLock<FormInvariants<F>>,
}

impl<F: Scalar> QuadraticForm<F> {
    pub fn new(a: F, b: F, c: F, d: F, e: F, f: F) -> Self {
        QuadraticForm { a, b, c, d, e, f, invariants: OnceLock::new() }
    }

    /// A form with no linear or constant part, `a x² + b x y + c y²`.
    pub fn homogeneous(a: F, b: F, c: F) -> Self {
        let zero = a.zero_like();
        Self::new(a, b, c, zero.clone(), zero.clone(), zero)
    }

    pub fn coefficients(&self) -> [&F; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    pub fn map<G: Scalar>(&self, mut convert: impl FnMut(&F) -> Result<G>) -> Result<QuadraticForm<G>> {
        Ok(QuadraticForm::new(
            convert(&self.a)?,
            convert(&self.b)?,
            convert(&self.c)?,
            convert(&self.d)?,
            convert(&self.e)?,
            convert(&self.f)?,
        ))
    }

    /// Cached `Det`, `Disc`, center and `m`.
    pub fn invariants(&self) -> &FormInvariants<F> {
        self.invariants.get_or_init(|| self.compute_invariants())
    }

    fn compute_invariants(&self) -> FormInvariants<F> {
        let (a, c, f) = (self.a.clone(), self.c.clone(), self.f.clone());
        let (b2, d2, e2) = (self.b.half(), self.d.half(), self.e.half());
        let disc = a.clone() * c.clone() - b2.square();
        // cofactor expansion along the first row of
        // [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]]
        let det3 = a.clone() * (c.clone() * f.clone() - e2.square())
            - b2.clone() * (b2.clone() * f - e2.clone() * d2.clone())
            + d2.clone() * (b2.clone() * e2.clone() - c.clone() * d2.clone());
        let (h, k, m) = match disc.try_inv() {
            Ok(inv) => {
                let h = (b2.clone() * e2.clone() - d2.clone() * c) * inv.clone();
                let k = -((a * e2 - d2 * b2) * inv.clone());
                let m = -(det3.clone() * inv);
                (Some(h), Some(k), Some(m))
            }
            Err(_) => (None, None, None),
        };
        FormInvariants { det3, disc, h, k, m }
    }

    pub fn disc(&self) -> F {
        self.invariants().disc.clone()
    }

    pub fn det3(&self) -> F {
        self.invariants().det3.clone()
    }

    /// `(h_q, k_q)`, the unique critical point of `q`.
    pub fn center(&self) -> Result<(F, F)> {
        let inv = self.invariants();
        match (&inv.h, &inv.k) {
            (Some(h), Some(k)) => Ok((h.clone(), k.clone())),
            _ => Err(Error::DegenerateDisc),
        }
    }

    /// `m_q = −Det(q)/Disc(q)`.
    pub fn m_value(&self) -> Result<F> {
        self.invariants().m.clone().ok_or(Error::DegenerateDisc)
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        self.a.clone() * x.square()
            + self.b.clone() * x.clone() * y.clone()
            + self.c.clone() * y.square()
            + self.d.clone() * x.clone()
            + self.e.clone() * y.clone()
            + self.f.clone()
    }

    /// `a(x−h)² + b(x−h)(y−k) + c(y−k)² − m`, equal to `eval` identically.
    pub fn centered_eval(&self, x: &F, y: &F) -> Result<F> {
        let (h, k) = self.center()?;
        let m = self.m_value()?;
        let (dx, dy) = (x.clone() - h, y.clone() - k);
        Ok(self.a.clone() * dx.square()
            + self.b.clone() * dx.clone() * dy.clone()
            + self.c.clone() * dy.square()
            - m)
    }

    /// Value of the quadratic part `a x² + b x y + c y²`.
    pub fn quadratic_part(&self, x: &F, y: &F) -> F {
        self.a.clone() * x.square() + self.b.clone() * x.clone() * y.clone() + self.c.clone() * y.square()
    }

    /// Partial derivatives `(∂q/∂x, ∂q/∂y)` at a point.
    pub fn gradient(&self, x: &F, y: &F) -> (F, F) {
        let two = self.a.int_like(2);
        (
            two.clone() * self.a.clone() * x.clone() + self.b.clone() * y.clone() + self.d.clone(),
            self.b.clone() * x.clone() + two * self.c.clone() * y.clone() + self.e.clone(),
        )
    }
}

impl QuadraticForm<Rational> {
    /// Reduces all coefficients into F_p.
    pub fn reduce_mod(&self, field: &PrimeField) -> Result<QuadraticForm<PrimeFieldElement>> {
        self.map(|c| field.from_rational(c))
    }
}

impl<F: Clone> Clone for QuadraticForm<F> {
    fn clone(&self) -> Self {
        QuadraticForm {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            f: self.f.clone(),
            invariants: self.invariants.clone(),
        }
    }
}

/// Coefficient equality; the invariant cache is ignored.
impl<F: PartialEq> PartialEq for QuadraticForm<F> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b == other.b
            && self.c == other.c
            && self.d == other.d
            && self.e == other.e
            && self.f == other.f
    }
}

impl<F: Eq> Eq for QuadraticForm<F> {}

impl<F: fmt::Display> fmt::Debug for QuadraticForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QuadraticForm({}, {}, {}, {}, {}, {})",
            self.a, self.b, self.c, self.d, self.e, self.f
        )
    }
}

impl FromStr for QuadraticForm<Rational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_form(s)
    }
}

/// Canonical text, e.g. `2x^2+3x*y+4y^2+x` or `1/2x^2-y`; parses back to
/// the same coefficients.
impl fmt::Display for QuadraticForm<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (&self.a, "x^2"),
            (&self.b, "x*y"),
            (&self.c, "y^2"),
            (&self.d, "x"),
            (&self.e, "y"),
            (&self.f, ""),
        ];
        let mut first = true;
        for (coef, monomial) in terms {
            if coef.is_zero() {
                continue;
            }
            let negative = coef.is_negative();
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let magnitude = coef.abs();
            if monomial.is_empty() || magnitude != Rational::one() {
                write!(f, "{magnitude}")?;
            }
            f.write_str(monomial)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
