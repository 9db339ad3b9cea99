//! Parse a few conics and print their invariants.

use qform::{QuadraticForm, Rational};

fn main() -> qform::Result<()> {
    for text in ["x^2+y^2-1", "x^2+xy+y^2-2x", "2x^2-3xy+y^2+x-4", "x^2-y"] {
        let q: QuadraticForm<Rational> = text.parse()?;
        print!("{q}: disc={} det={}", q.disc(), q.det3());
        match (q.center(), q.m_value()) {
            (Ok((h, k)), Ok(m)) => println!(" center=({h},{k}) m={m}"),
            _ => println!(" (no center)"),
        }
    }
    Ok(())
}
