//! Rational points on the unit circle under the ternary product.

use qform::conic::Conic;
use qform::ternary::{TernaryGroup, TernaryStructure};
use qform::{QuadraticForm, Rational};

fn main() -> qform::Result<()> {
    let circle = Conic::new("x^2+y^2-1".parse::<QuadraticForm<Rational>>()?)?;
    let p = circle.point(Rational::frac(3, 5), Rational::frac(4, 5))?;
    let e = circle.point(Rational::one(), Rational::zero())?;
    let r = circle.point(Rational::frac(5, 13), Rational::frac(12, 13))?;

    // with base (1,0) the product is angle addition
    println!("[P,E,R] = {}", circle.triple(&p, &e, &r)?);
    println!("[R,E,P] = {}", circle.triple(&r, &e, &p)?);

    let group = circle.group(e.clone())?;
    let inv = group.inverse_elem(&p)?;
    println!("inverse of {p} is {inv}");
    println!("[P,E,inv] = {}", group.triple(&p, &e, &inv)?);

    // a point from every rational slope through the base
    for t in [Rational::frac(1, 2), Rational::frac(2, 3), Rational::from(3)] {
        if let Some(q) = circle.line_point(&e, &t)? {
            println!("slope {t}: {q}");
        }
    }
    Ok(())
}
