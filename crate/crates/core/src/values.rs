//! The value set of a form as a commutative ternary group under
//!
//! ```text
//! α · β^* · γ = (Disc·α·γ − Det·(α − β + γ)) / (Disc·β − Det)
//! ```
//!
//! defined for values with `Disc·α ≠ Det`. For `Disc ≠ 0` this equals
//! `(α+m)(γ+m)/(β+m) − m`, the value at `[P]·[Q]⁻¹·[R]`; for `Disc = 0` it
//! collapses to `α − β + γ`. The one formula is used for all cases.
//!
//! Whether a value is actually represented by the form over ℚ is not
//! decided; a witness point is optional metadata.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matalg::FormRef;
use crate::numeric::{Rational, Scalar};
use crate::quadform::QuadraticForm;
use crate::ternary::{TernaryGroup, TernaryStructure};

/// `Disc(q)·α ≠ Det(q)`.
pub fn value_in_domain<F: Scalar>(q: &QuadraticForm<F>, alpha: &F) -> bool {
    q.disc() * alpha.clone() != q.det3()
}

fn require_domain<F: Scalar>(q: &QuadraticForm<F>, alpha: &F) -> Result<()> {
    if value_in_domain(q, alpha) {
        Ok(())
    } else {
        Err(Error::DomainViolation(alpha.to_string()))
    }
}

/// `α · β^* · γ`.
pub fn value_triple<F: Scalar>(q: &QuadraticForm<F>, alpha: &F, beta: &F, gamma: &F) -> Result<F> {
    for v in [alpha, beta, gamma] {
        require_domain(q, v)?;
    }
    let (disc, det) = (q.disc(), q.det3());
    let numer = disc.clone() * alpha.clone() * gamma.clone()
        - det.clone() * (alpha.clone() - beta.clone() + gamma.clone());
    let denom = disc * beta.clone() - det;
    numer.try_div(&denom)
}

/// First witness `(x, y)` with `q(x, y) = α` in the `(r, p, s)` height order.
pub fn value_witness_search(q: &QuadraticForm<Rational>, alpha: &Rational, height_bound: u64) -> Result<(Rational, Rational)> {
    q.find_representation(alpha, height_bound)
}

/// A domain value, optionally certified by a point with `q(x, y) = α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueElement<F> {
    pub alpha: F,
    pub witness: Option<(F, F)>,
}

impl<F: Scalar> ValueElement<F> {
    /// The value of `q` at `(x, y)`, witnessed by that point.
    pub fn at(q: &QuadraticForm<F>, x: F, y: F) -> Result<Self> {
        let alpha = q.eval(&x, &y);
        require_domain(q, &alpha)?;
        Ok(ValueElement { alpha, witness: Some((x, y)) })
    }

    pub fn new(q: &QuadraticForm<F>, alpha: F, witness: Option<(F, F)>) -> Result<Self> {
        require_domain(q, &alpha)?;
        if let Some((x, y)) = &witness {
            if q.eval(x, y) != alpha {
                return Err(Error::BadWitness { x: x.to_string(), y: y.to_string(), alpha: alpha.to_string() });
            }
        }
        Ok(ValueElement { alpha, witness })
    }

    pub fn is_witnessed(&self) -> bool {
        self.witness.is_some()
    }
}

impl ValueElement<Rational> {
    /// Attaches the first witness of height `≤ bound`, or none if the
    /// search comes up empty.
    pub fn resolve(q: &QuadraticForm<Rational>, alpha: Rational, height_bound: u64) -> Result<Self> {
        require_domain(q, &alpha)?;
        let witness = value_witness_search(q, &alpha, height_bound).ok();
        Ok(ValueElement { alpha, witness })
    }
}

/// Domain values of a form with base value `α₀`; the identity pair is
/// `(α₀, α₀)`.
#[derive(Clone, Debug)]
pub struct ValueGroup<F: Scalar> {
    form: FormRef<F>,
    base: F,
}

impl<F: Scalar> ValueGroup<F> {
    pub fn new(form: &FormRef<F>, base: F) -> Result<Self> {
        require_domain(form, &base)?;
        Ok(ValueGroup { form: Arc::clone(form), base })
    }

    pub fn form(&self) -> &FormRef<F> {
        &self.form
    }
}

impl<F: Scalar> TernaryStructure for ValueGroup<F> {
    type Elem = F;

    fn triple(&self, a: &F, b: &F, c: &F) -> Result<F> {
        value_triple(&self.form, a, b, c)
    }

    fn identity_pair(&self) -> (&F, &F) {
        (&self.base, &self.base)
    }

    fn owns(&self, e: &F) -> bool {
        value_in_domain(&self.form, e)
    }
}

impl<F: Scalar> TernaryGroup for ValueGroup<F> {}
