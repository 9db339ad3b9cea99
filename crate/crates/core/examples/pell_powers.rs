//! Powers of the fundamental solution of x^2 - 2y^2 = 1.

use qform::conic::Conic;
use qform::{QuadraticForm, Rational};

fn main() -> qform::Result<()> {
    let pell = Conic::new("x^2-2y^2-1".parse::<QuadraticForm<Rational>>()?)?;
    let e = pell.point(Rational::one(), Rational::zero())?;
    let g = pell.point(Rational::from(3), Rational::from(2))?;
    let mut cur = g.clone();
    for n in 1..=8 {
        println!("g^{n} = {cur}");
        cur = pell.triple(&cur, &e, &g)?;
    }
    println!("first point with height <= 2: {}", pell.find_point(2)?);
    Ok(())
}
