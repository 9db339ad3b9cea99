//! Values of a form multiplied directly, without choosing points.

use std::sync::Arc;

use qform::matalg::affine_triple;
use qform::ternary::TernaryGroup;
use qform::values::{value_triple, ValueElement, ValueGroup};
use qform::{QuadraticForm, Rational};

fn main() -> qform::Result<()> {
    let z = Rational::from;
    let q: QuadraticForm<Rational> = "x^2+y^2".parse()?;
    println!("{q}: [2,5,10] = {}", value_triple(&q, &z(2), &z(5), &z(10))?);

    // the value of a point triple equals the value triple of the values
    let shifted: QuadraticForm<Rational> = "x^2+xy+y^2-2x".parse()?;
    let pts = [(z(1), z(2)), (z(0), z(3)), (z(2), z(-1))];
    let vals: Vec<_> = pts.iter().map(|(x, y)| ValueElement::at(&shifted, x.clone(), y.clone())).collect::<Result<_, _>>()?;
    for v in &vals {
        println!("{shifted} takes {} at {:?}", v.alpha, v.witness);
    }
    println!(
        "value triple: {}",
        value_triple(&shifted, &vals[0].alpha, &vals[1].alpha, &vals[2].alpha)?
    );

    let form = Arc::new(shifted.clone());
    let (x, y) = affine_triple(&form, pts[0].clone(), pts[1].clone(), pts[2].clone())?;
    println!("point triple ({x},{y}) has value {}", shifted.eval(&x, &y));

    // search for a witness of a value
    let found = ValueElement::resolve(&q, z(13), 5)?;
    println!("13 is witnessed by {:?}", found.witness);

    let group = ValueGroup::new(&Arc::new(q), z(1))?;
    println!("inverse of 5 with base 1: {}", group.inverse_elem(&z(5))?);
    Ok(())
}
