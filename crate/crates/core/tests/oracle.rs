use qform::oracle::{enumerate_conic_points, exhaustive_axiom_check, FiniteConic};
use qform::{Error, QuadraticForm, Rational};

fn form(s: &str) -> QuadraticForm<Rational> {
    s.parse().unwrap()
}

/// Euler's criterion.
fn legendre(a: i64, p: i64) -> i64 {
    let (mut base, mut e, mut acc) = (a.rem_euclid(p), (p - 1) / 2, 1i64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if acc == p - 1 { -1 } else { acc }
}

#[test]
fn circle_counts_match_the_classical_formula() {
    for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        let c = FiniteConic::new(&form("x^2+y^2-1"), p).unwrap();
        let expected = p as i64 - legendre(-1, p as i64);
        assert_eq!(enumerate_conic_points(&c).len() as i64, expected, "p = {p}");
    }
}

#[test]
fn enumeration_is_sorted_and_complete() {
    let c = FiniteConic::new(&form("x^2-2y^2-1"), 7).unwrap();
    let pts: Vec<(u64, u64)> = enumerate_conic_points(&c).iter().map(|p| (p.x().value(), p.y().value())).collect();
    let brute: Vec<(u64, u64)> = (0..7u64)
        .flat_map(|x| (0..7u64).map(move |y| (x, y)))
        .filter(|&(x, y)| (x * x + 5 * y * y + 6) % 7 == 0)
        .collect();
    assert_eq!(pts, brute);
}

#[test]
fn every_base_over_small_primes() {
    let forms = ["x^2+y^2-1", "x^2-2y^2-1", "x^2+xy+y^2-1", "2x^2+3y^2-5", "x^2+y^2-2x-3"];
    for p in [3, 5, 7, 11, 13] {
        for s in forms {
            let c = match FiniteConic::new(&form(s), p) {
                Ok(c) => c,
                Err(Error::DegenerateDet | Error::DegenerateDisc) => continue,
                Err(e) => panic!("{s} over F_{p}: {e}"),
            };
            let pts = enumerate_conic_points(&c);
            for base in &pts {
                let r = exhaustive_axiom_check(&c, base).unwrap();
                assert!(r.passed(), "{}", r.to_text());
                assert_eq!(r.symbol_group_order, Some(pts.len()));
            }
        }
    }
}

#[test]
fn json_report_lists_every_law() {
    let c = FiniteConic::new(&form("x^2+y^2-1"), 5).unwrap();
    let r = exhaustive_axiom_check(&c, &c.point(1, 0).unwrap()).unwrap();
    let laws: Vec<String> = r.to_json()["checks"].as_array().unwrap().iter().map(|c| c["axiom"].as_str().unwrap().to_string()).collect();
    for law in ["closure", "commutativity", "associativity", "identity", "inverses", "symbol_order", "transitive_witness", "simply_transitive"] {
        assert!(laws.iter().any(|l| l == law), "{law}");
    }
}
