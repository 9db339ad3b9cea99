//! Exhaustively check the group laws on a conic reduced modulo a prime.

use qform::oracle::{enumerate_conic_points, exhaustive_axiom_check, FiniteConic};
use qform::{QuadraticForm, Rational};

fn main() -> qform::Result<()> {
    let q: QuadraticForm<Rational> = "x^2-2y^2-1".parse()?;
    for p in [5, 7, 11, 13] {
        let c = FiniteConic::new(&q, p)?;
        let points = enumerate_conic_points(&c);
        let base = c.point(1, 0)?;
        let report = exhaustive_axiom_check(&c, &base)?;
        println!("F_{p}: {} points, passed={}", points.len(), report.passed());
    }
    let c = FiniteConic::new(&q, 7)?;
    print!("{}", exhaustive_axiom_check(&c, &c.point(1, 0)?)?.to_text());
    Ok(())
}
