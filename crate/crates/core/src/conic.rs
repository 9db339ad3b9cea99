//! Rational points of a nondegenerate conic `q(x, y) = 0` as a commutative
//! ternary group.
//!
//! A point `(x, y)` maps to `[x, y]_q`, whose determinant is exactly `m_q`.
//! The product `P · Q^* · R` is the point of `[P]_q · [Q]_q⁻¹ · [R]_q`, so
//! the determinant stays `m · m⁻¹ · m = m` and the result is again on the
//! conic. Every operation takes the base point explicitly.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matalg::{affine_triple, AlgebraElement, FormRef};
use crate::numeric::{Rational, Scalar};
use crate::quadform::QuadraticForm;
use crate::ternary::{TernaryGroup, TernaryStructure};

/// A point stored in reduced form; equality is componentwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConicPoint<F> {
    x: F,
    y: F,
}

impl<F: Scalar> ConicPoint<F> {
    pub fn x(&self) -> &F {
        &self.x
    }

    pub fn y(&self) -> &F {
        &self.y
    }

    pub fn coords(&self) -> (F, F) {
        (self.x.clone(), self.y.clone())
    }
}

impl<F: fmt::Display> fmt::Display for ConicPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl<F: fmt::Display> fmt::Debug for ConicPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Parses `x,y` with rational components, e.g. `3/5,-4/5`.
pub fn parse_pair(text: &str) -> Result<(Rational, Rational)> {
    let (x, y) = text.split_once(',').ok_or_else(|| Error::Parse {
        position: text.len(),
        message: "expected `x,y`".into(),
    })?;
    let shift = |e: Error, by: usize| match e {
        Error::Parse { position, message } => Error::Parse { position: position + by, message },
        other => other,
    };
    let x = Rational::from_str(x.trim()).map_err(|e| shift(e, 0))?;
    let y = Rational::from_str(y.trim()).map_err(|e| shift(e, text.find(',').unwrap_or(0) + 1))?;
    Ok((x, y))
}

/// `q(x, y) = 0` with `Det(q) ≠ 0` and `Disc(q) ≠ 0`.
#[derive(Clone, Debug)]
pub struct Conic<F: Scalar> {
    form: FormRef<F>,
}

impl<F: Scalar> Conic<F> {
    pub fn new(form: QuadraticForm<F>) -> Result<Self> {
        Self::from_ref(Arc::new(form))
    }

    pub fn from_ref(form: FormRef<F>) -> Result<Self> {
        if form.disc().is_zero() {
            return Err(Error::DegenerateDisc);
        }
        if form.det3().is_zero() {
            return Err(Error::DegenerateDet);
        }
        Ok(Conic { form })
    }

    pub fn form(&self) -> &FormRef<F> {
        &self.form
    }

    pub fn contains(&self, x: &F, y: &F) -> bool {
        self.form.eval(x, y).is_zero()
    }

    pub fn point(&self, x: F, y: F) -> Result<ConicPoint<F>> {
        if !self.contains(&x, &y) {
            return Err(Error::NotOnConic { x: x.to_string(), y: y.to_string() });
        }
        Ok(ConicPoint { x, y })
    }

    fn check(&self, p: &ConicPoint<F>) -> Result<()> {
        if self.contains(&p.x, &p.y) {
            Ok(())
        } else {
            Err(Error::NotOnConic { x: p.x.to_string(), y: p.y.to_string() })
        }
    }

    /// The matrix `[x, y]_q`; its determinant is `m_q`.
    pub fn embed(&self, p: &ConicPoint<F>) -> AlgebraElement<F> {
        AlgebraElement::new(&self.form, p.x.clone(), p.y.clone()).expect("Disc ≠ 0 on a conic")
    }

    /// `P · Q^* · R`.
    pub fn triple(&self, p: &ConicPoint<F>, q: &ConicPoint<F>, r: &ConicPoint<F>) -> Result<ConicPoint<F>> {
        for pt in [p, q, r] {
            self.check(pt)?;
        }
        let (x, y) = affine_triple(&self.form, p.coords(), q.coords(), r.coords())?;
        debug_assert!(self.contains(&x, &y));
        Ok(ConicPoint { x, y })
    }

    /// `(Q₀, R₀) = (base, base)`.
    pub fn identity_pair(&self, base: &ConicPoint<F>) -> Result<(ConicPoint<F>, ConicPoint<F>)> {
        self.check(base)?;
        Ok((base.clone(), base.clone()))
    }

    /// `R = Q₀ · P^* · R₀`, so that `P · Q₀^* · R = R₀`.
    pub fn inverse_point(&self, p: &ConicPoint<F>, base: &ConicPoint<F>) -> Result<ConicPoint<F>> {
        self.triple(base, p, base)
    }

    /// The second intersection of the line through `base` with direction
    /// `(1, slope)`; `None` when that line meets the conic only once.
    pub fn line_point(&self, base: &ConicPoint<F>, slope: &F) -> Result<Option<ConicPoint<F>>> {
        self.check(base)?;
        let q = &*self.form;
        let lead = q.quadratic_part(&slope.one_like(), slope);
        if lead.is_zero() {
            return Ok(None);
        }
        let (gx, gy) = q.gradient(&base.x, &base.y);
        let lambda = -(gx + slope.clone() * gy).try_div(&lead)?;
        let x = base.x.clone() + lambda.clone();
        let y = base.y.clone() + lambda * slope.clone();
        Ok(Some(self.point(x, y)?))
    }

    pub fn group(&self, base: ConicPoint<F>) -> Result<ConicGroup<F>> {
        ConicGroup::new(self.clone(), base)
    }
}

impl Conic<Rational> {
    /// The first point of height `≤ bound` in `(r, p, s)` order; see
    /// [`QuadraticForm::find_representation`].
    pub fn find_point(&self, height_bound: u64) -> Result<ConicPoint<Rational>> {
        let (x, y) = self.form.find_representation(&Rational::zero(), height_bound)?;
        Ok(ConicPoint { x, y })
    }
}

/// A conic with a chosen base point, as a ternary group.
#[derive(Clone, Debug)]
pub struct ConicGroup<F: Scalar> {
    conic: Conic<F>,
    base: ConicPoint<F>,
}

impl<F: Scalar> ConicGroup<F> {
    pub fn new(conic: Conic<F>, base: ConicPoint<F>) -> Result<Self> {
        conic.check(&base)?;
        Ok(ConicGroup { conic, base })
    }

    pub fn conic(&self) -> &Conic<F> {
        &self.conic
    }

    pub fn base(&self) -> &ConicPoint<F> {
        &self.base
    }
}

impl<F: Scalar> TernaryStructure for ConicGroup<F> {
    type Elem = ConicPoint<F>;

    fn triple(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Result<Self::Elem> {
        self.conic.triple(a, b, c)
    }

    fn identity_pair(&self) -> (&Self::Elem, &Self::Elem) {
        (&self.base, &self.base)
    }

    fn owns(&self, e: &Self::Elem) -> bool {
        self.conic.contains(&e.x, &e.y)
    }
}

impl<F: Scalar> TernaryGroup for ConicGroup<F> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ternary::Symbol;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn ri(n: i64) -> Rational {
        Rational::from(n)
    }

    fn conic(s: &str) -> Conic<Rational> {
        Conic::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn admits_only_nondegenerate_conics() {
        assert_eq!(Conic::new("x^2-y".parse::<QuadraticForm<Rational>>().unwrap()).err(), Some(Error::DegenerateDisc));
        assert_eq!(Conic::new("x^2+y^2".parse::<QuadraticForm<Rational>>().unwrap()).err(), Some(Error::DegenerateDet));
    }

    #[test]
    fn contains_examples() {
        assert!(conic("x^2+y^2-1").contains(&r(3, 5), &r(4, 5)));
        assert!(!conic("x^2+y^2-1").contains(&ri(1), &ri(1)));
        assert!(conic("x^2-2y^2-1").contains(&ri(17), &ri(12)));
    }

    #[test]
    fn find_point_examples() {
        assert_eq!(conic("x^2+y^2-1").find_point(1).unwrap().coords(), (ri(-1), ri(0)));
        assert_eq!(conic("x^2+y^2+1").find_point(6), Err(Error::NotFound(6)));
        // (±3, ±2) also has height ≤ 3 and p = −3 precedes p = −1
        assert_eq!(conic("x^2-2y^2-1").find_point(3).unwrap().coords(), (ri(-3), ri(-2)));
        assert_eq!(conic("x^2-2y^2-1").find_point(2).unwrap().coords(), (ri(-1), ri(0)));
    }

    #[test]
    fn triple_examples() {
        let c = conic("x^2+y^2-1");
        let p = c.point(r(3, 5), r(4, 5)).unwrap();
        let one = c.point(ri(1), ri(0)).unwrap();
        let q = c.point(r(5, 13), r(12, 13)).unwrap();
        assert_eq!(c.triple(&p, &one, &q).unwrap().coords(), (r(-33, 65), r(56, 65)));
        assert_eq!(c.triple(&p, &q, &q).unwrap(), p);

        let pell = conic("x^2-2y^2-1");
        let p = pell.point(ri(3), ri(2)).unwrap();
        let one = pell.point(ri(1), ri(0)).unwrap();
        assert_eq!(pell.triple(&p, &one, &p).unwrap().coords(), (ri(17), ri(12)));
    }

    #[test]
    fn off_curve_inputs_are_rejected() {
        let c = conic("x^2+y^2-1");
        let one = c.point(ri(1), ri(0)).unwrap();
        let stray = ConicPoint { x: ri(1), y: ri(1) };
        assert!(matches!(c.triple(&one, &stray, &one), Err(Error::NotOnConic { .. })));
        assert!(matches!(c.point(ri(1), ri(1)), Err(Error::NotOnConic { .. })));
        assert!(matches!(c.group(stray), Err(Error::NotOnConic { .. })));
    }

    #[test]
    fn identity_and_inverse_examples() {
        let c = conic("x^2+y^2-1");
        let p = c.point(r(3, 5), r(4, 5)).unwrap();
        for base in [c.point(ri(1), ri(0)).unwrap(), c.point(ri(0), ri(1)).unwrap()] {
            let (q0, r0) = c.identity_pair(&base).unwrap();
            assert_eq!(c.triple(&p, &q0, &r0).unwrap(), p);
            let inv = c.inverse_point(&p, &base).unwrap();
            assert_eq!(c.triple(&p, &base, &inv).unwrap(), base);
            assert_eq!(c.inverse_point(&base, &base).unwrap(), base);
        }
        let one = c.point(ri(1), ri(0)).unwrap();
        // conjugation
        assert_eq!(c.inverse_point(&p, &one).unwrap().coords(), (r(3, 5), r(-4, 5)));

        let pell = conic("x^2-2y^2-1");
        let one = pell.point(ri(1), ri(0)).unwrap();
        let p = pell.point(ri(3), ri(2)).unwrap();
        assert_eq!(pell.inverse_point(&p, &one).unwrap().coords(), (ri(3), ri(-2)));
        let big = pell.point(ri(17), ri(12)).unwrap();
        assert_eq!(pell.triple(&big, &one, &one).unwrap(), big);
    }

    #[test]
    fn group_examples() {
        let c = conic("x^2+y^2-1");
        let g = c.group(c.point(ri(1), ri(0)).unwrap()).unwrap();
        let i = c.point(ri(0), ri(1)).unwrap();
        let w = g.transitive_witness(&i, g.base()).unwrap();
        assert!(g.symbol_eq(&w, &Symbol::new(i.clone(), g.base().clone())).unwrap());
        let p = c.point(r(3, 5), r(4, 5)).unwrap();
        // multiplication by i
        assert_eq!(g.symbol_act(&w, &p).unwrap().coords(), (r(-4, 5), r(3, 5)));
        let s = Symbol::new(p.clone(), g.base().clone());
        let q = c.point(r(5, 13), r(12, 13)).unwrap();
        assert_eq!(g.symbol_act(&s, &q).unwrap().coords(), (r(-33, 65), r(56, 65)));
        let pell = conic("x^2-2y^2-1");
        let pg = pell.group(pell.point(ri(1), ri(0)).unwrap()).unwrap();
        let s = Symbol::new(pell.point(ri(3), ri(2)).unwrap(), pg.base().clone());
        assert_eq!(pg.symbol_inverse(&s).unwrap().left.coords(), (ri(3), ri(-2)));
        assert_eq!(pg.phi(&pell.point(ri(3), ri(2)).unwrap()).unwrap().coords(), (ri(3), ri(-2)));
    }

    #[test]
    fn line_points_are_on_the_conic() {
        let c = conic("2x^2+3y^2-5");
        let base = c.point(ri(1), ri(1)).unwrap();
        for t in -5..=5 {
            if let Some(p) = c.line_point(&base, &r(t, 3)).unwrap() {
                assert!(c.contains(p.x(), p.y()));
            }
        }
        // x² − 2y² − 1 has asymptotic slope ±1/√2, so every rational slope works
        let pell = conic("x^2-2y^2-1");
        let one = pell.point(ri(1), ri(0)).unwrap();
        assert_eq!(pell.line_point(&one, &r(2, 3)).unwrap().unwrap().coords(), (ri(-17), ri(-12)));
    }

    #[test]
    fn point_text() {
        assert_eq!(parse_pair("3/5,-4/5").unwrap(), (r(3, 5), r(-4, 5)));
        assert_eq!(parse_pair(" 1 , 0 ").unwrap(), (ri(1), ri(0)));
        assert!(parse_pair("1").is_err());
        assert!(matches!(parse_pair("1,x"), Err(Error::Parse { position: 2, .. })));
        let c = conic("x^2+y^2-1");
        assert_eq!(c.point(r(-33, 65), r(56, 65)).unwrap().to_string(), "-33/65,56/65");
    }
}
