//! Two- and three-fold composition for binary forms a x^2 + b xy + c y^2.

use qform::compose::{compose2, compose3, HomogeneousForm};
use qform::Rational;

fn main() {
    let z = Rational::from;
    for (a, b, c) in [(1, 0, 1), (1, 1, 1), (2, 3, 4)] {
        let f = HomogeneousForm::new(z(a), z(b), z(c));
        let (p1, p2, p3) = ((z(1), z(2)), (z(2), z(3)), (z(1), z(1)));
        let (v1, v2, v3) = (f.eval(&p1.0, &p1.1), f.eval(&p2.0, &p2.1), f.eval(&p3.0, &p3.1));

        let (u, v) = compose2(&f, (&p1.0, &p1.1), (&p2.0, &p2.1));
        println!("({a},{b},{c}) two-fold: u={u} v={v}  norm={} = {}*{}", f.eval_norm(&u, &v), v1, v2);

        let (x, y) = compose3(&f, (&p1.0, &p1.1), (&p2.0, &p2.1), (&p3.0, &p3.1));
        println!("({a},{b},{c}) three-fold: x={x} y={y}  f={} = {}*{}*{}", f.eval(&x, &y), v1, v2, v3);
    }
}
