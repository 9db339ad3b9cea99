use std::sync::Arc;

use super::{base_pair, AlgebraElement, FormRef};
use crate::error::{Error, Result};
use crate::numeric::Scalar;
use crate::ternary::{TernaryAlgebra, TernaryStructure};

/// `A(q)` with a chosen identity pair, viewed as an abstract ternary algebra.
#[derive(Clone, Debug)]
pub struct AlgebraStructure<F: Scalar> {
    form: FormRef<F>,
    b0: AlgebraElement<F>,
    c0: AlgebraElement<F>,
}

impl<F: Scalar> AlgebraStructure<F> {
    /// Uses the deterministic [`base_pair`].
    pub fn new(form: &FormRef<F>) -> Result<Self> {
        let (b0, c0) = base_pair(form)?;
        Ok(AlgebraStructure { form: Arc::clone(form), b0, c0 })
    }

    /// Uses `B₀ = [x₀, y₀]_q` and `C₀ = B₀ / det B₀`.
    pub fn with_base(form: &FormRef<F>, x0: F, y0: F) -> Result<Self> {
        let b0 = AlgebraElement::new(form, x0, y0)?;
        let inv = b0.det().try_inv().map_err(|_| Error::SingularElement)?;
        let c0 = b0.scale(&inv);
        Ok(AlgebraStructure { form: Arc::clone(form), b0, c0 })
    }

    pub fn form(&self) -> &FormRef<F> {
        &self.form
    }

    pub fn element(&self, x: F, y: F) -> Result<AlgebraElement<F>> {
        AlgebraElement::new(&self.form, x, y)
    }
}

impl<F: Scalar> TernaryStructure for AlgebraStructure<F> {
    type Elem = AlgebraElement<F>;

    fn triple(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Result<Self::Elem> {
        a.triple(b, c)
    }

    fn identity_pair(&self) -> (&Self::Elem, &Self::Elem) {
        (&self.b0, &self.c0)
    }

    fn owns(&self, e: &Self::Elem) -> bool {
        Arc::ptr_eq(e.form(), &self.form) || **e.form() == *self.form
    }
}

impl<F: Scalar> TernaryAlgebra for AlgebraStructure<F> {
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        a.add(b)
    }
}
