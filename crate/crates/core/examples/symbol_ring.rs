//! Symbols of the matrix algebra attached to a form, and their ring structure.

use std::sync::Arc;

use qform::matalg::AlgebraStructure;
use qform::ternary::{Symbol, TernaryAlgebra, TernaryStructure};
use qform::{QuadraticForm, Rational};

fn main() -> qform::Result<()> {
    let z = Rational::from;
    let q: Arc<QuadraticForm<Rational>> = Arc::new("x^2+xy+y^2-2x+3y".parse()?);
    let alg = AlgebraStructure::new(&q)?;
    let (b0, c0) = alg.identity_pair();
    println!("B0 = {b0:?}, C0 = {c0:?}");

    let a = alg.element(z(1), z(2))?;
    let b = alg.element(z(3), z(-1))?;
    let c = alg.element(z(0), z(4))?;
    println!("A matrix:\n{}", a.matrix());
    println!("[A,B,C] = {:?}", alg.triple(&a, &b, &c)?);

    let s = Symbol::new(a.clone(), b.clone());
    let t = Symbol::new(c.clone(), a.clone());
    let ring_elem = a.pair_product(&b)?;
    println!("A B* = [{}, {}]", ring_elem.u(), ring_elem.v());
    let prod = alg.symbol_mul(&s, &t)?;
    let sum = alg.symbol_add(&s, &t)?;
    let (p, m) = (prod.left.pair_product(&prod.right)?, sum.left.pair_product(&sum.right)?);
    println!("s*t = [{}, {}], s+t = [{}, {}]", p.u(), p.v(), m.u(), m.v());
    println!("s*t == t*s: {}", alg.symbol_eq(&prod, &alg.symbol_mul(&t, &s)?)?);
    Ok(())
}
