//! Ternary algebras, commutative ternary groups, and the rings/groups of
//! formal symbols `A · B^*` built from them.
//!
//! A structure supplies its triple product and an identity pair
//! `(B₀, C₀)` with `A · B₀^* · C₀ = A`. Two symbols `A·B^*` and `C·D^*` are
//! equal when `A·B^*·C₀ = C·D^*·C₀`. Every operation here returns symbols
//! in the canonical form `X · B₀^*`, obtained through
//! `A·B^* ~ (A · B₀^* · φ(B)) · B₀^*` with `φ(B) = C₀ · B^* · C₀`.

use std::fmt::Debug;

use crate::error::{Error, Result};

/// The formal product `left · right^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol<E> {
    pub left: E,
    pub right: E,
}

impl<E> Symbol<E> {
    pub fn new(left: E, right: E) -> Self {
        Symbol { left, right }
    }
}

pub trait TernaryStructure {
    type Elem: Clone + PartialEq + Debug;

    /// `a · b^* · c`.
    fn triple(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Result<Self::Elem>;

    /// `(B₀, C₀)`.
    fn identity_pair(&self) -> (&Self::Elem, &Self::Elem);

    /// Whether `e` is an element of this structure.
    fn owns(&self, e: &Self::Elem) -> bool;

    fn check(&self, elems: &[&Self::Elem]) -> Result<()> {
        if elems.iter().all(|e| self.owns(e)) {
            Ok(())
        } else {
            Err(Error::StructureMismatch)
        }
    }

    /// `φ(B) = C₀ · B^* · C₀`.
    fn phi(&self, b: &Self::Elem) -> Result<Self::Elem> {
        self.check(&[b])?;
        let (_, c0) = self.identity_pair();
        self.triple(c0, b, c0)
    }

    /// The equivalent symbol whose right factor is `B₀`.
    fn normalize(&self, s: &Symbol<Self::Elem>) -> Result<Symbol<Self::Elem>> {
        self.check(&[&s.left, &s.right])?;
        let (b0, _) = self.identity_pair();
        if s.right == *b0 {
            return Ok(s.clone());
        }
        let left = self.triple(&s.left, b0, &self.phi(&s.right)?)?;
        Ok(Symbol::new(left, b0.clone()))
    }

    /// `s.left · s.right^* · C₀`, the element that decides equality.
    fn symbol_key(&self, s: &Symbol<Self::Elem>) -> Result<Self::Elem> {
        self.check(&[&s.left, &s.right])?;
        let (_, c0) = self.identity_pair();
        self.triple(&s.left, &s.right, c0)
    }

    fn symbol_eq(&self, s: &Symbol<Self::Elem>, t: &Symbol<Self::Elem>) -> Result<bool> {
        Ok(self.symbol_key(s)? == self.symbol_key(t)?)
    }

    /// `C₀ · B₀^*`.
    fn identity_symbol(&self) -> Symbol<Self::Elem> {
        let (b0, c0) = self.identity_pair();
        Symbol::new(c0.clone(), b0.clone())
    }

    /// `(A·B₀^*)·(B·B₀^*) = (A · B₀^* · B) · B₀^*`.
    fn symbol_mul(&self, g: &Symbol<Self::Elem>, h: &Symbol<Self::Elem>) -> Result<Symbol<Self::Elem>> {
        let (g, h) = (self.normalize(g)?, self.normalize(h)?);
        let (b0, _) = self.identity_pair();
        Ok(Symbol::new(self.triple(&g.left, b0, &h.left)?, b0.clone()))
    }

    /// `g · C = g.left · g.right^* · C`.
    fn symbol_act(&self, g: &Symbol<Self::Elem>, c: &Self::Elem) -> Result<Self::Elem> {
        self.check(&[&g.left, &g.right, c])?;
        self.triple(&g.left, &g.right, c)
    }
}

/// A ternary algebra: the carrier is also a vector space.
pub trait TernaryAlgebra: TernaryStructure {
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// `(A·B₀^*) + (B·B₀^*) = (A + B) · B₀^*`, after normalizing both.
    fn symbol_add(&self, g: &Symbol<Self::Elem>, h: &Symbol<Self::Elem>) -> Result<Symbol<Self::Elem>> {
        let (g, h) = (self.normalize(g)?, self.normalize(h)?);
        let (b0, _) = self.identity_pair();
        Ok(Symbol::new(self.add(&g.left, &h.left)?, b0.clone()))
    }
}

/// A commutative ternary group; its symbols form an abelian group acting
/// transitively on the carrier.
pub trait TernaryGroup: TernaryStructure {
    /// The `R` with `P · Q₀^* · R = R₀`, namely `Q₀ · P^* · R₀`.
    fn inverse_elem(&self, p: &Self::Elem) -> Result<Self::Elem> {
        self.check(&[p])?;
        let (q0, r0) = self.identity_pair();
        self.triple(q0, p, r0)
    }

    fn symbol_inverse(&self, g: &Symbol<Self::Elem>) -> Result<Symbol<Self::Elem>> {
        let g = self.normalize(g)?;
        let (q0, _) = self.identity_pair();
        Ok(Symbol::new(self.inverse_elem(&g.left)?, q0.clone()))
    }

    /// A symbol `g` with `g · Q = P`: pick `R` with `Q · Q₀^* · R = R₀` and
    /// take `g = (P · Q₀^* · R) · Q₀^*`.
    fn transitive_witness(&self, p: &Self::Elem, q: &Self::Elem) -> Result<Symbol<Self::Elem>> {
        self.check(&[p, q])?;
        let (q0, _) = self.identity_pair();
        let r = self.inverse_elem(q)?;
        Ok(Symbol::new(self.triple(p, q0, &r)?, q0.clone()))
    }
}
