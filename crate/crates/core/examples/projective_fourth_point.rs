//! A fourth point on a x^2 + b y^2 + c z^2 = 0 from three given ones.

use qform::compose::{diagonal_eval, normalize_projective, proj_compose3};
use qform::{Rational, Scalar};

fn main() -> qform::Result<()> {
    let z = Rational::from;
    let (a, b, c) = (z(1), z(1), z(-2));
    let pts = [[z(1), z(1), z(1)], [z(1), z(-1), z(1)], [z(7), z(1), z(5)]];
    for p in &pts {
        assert!(diagonal_eval([&a, &b, &c], [&p[0], &p[1], &p[2]]).is_zero());
    }
    let refs = pts.each_ref().map(|p| [&p[0], &p[1], &p[2]]);
    let out = proj_compose3(&a, &b, &c, refs)?;
    println!("raw point: ({}, {}, {})", out[0], out[1], out[2]);
    println!("normalized: {:?}", normalize_projective(&out)?);
    println!("on the variety: {}", diagonal_eval([&a, &b, &c], [&out[0], &out[1], &out[2]]).is_zero());
    Ok(())
}
