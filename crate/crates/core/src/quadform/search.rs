use num_integer::Integer;

use super::QuadraticForm;
use crate::error::{Error, Result};
use crate::numeric::Rational;

impl QuadraticForm<Rational> {
    /// First `(x, y) = (p/r, s/r)` with `q(x, y) = alpha`, scanning
    /// `r = 1..=bound`, then `p`, then `s` in `-bound..=bound`, and skipping
    /// triples with `gcd(p, s, r) > 1` so that each point is visited once.
    ///
    /// `NotFound` only means nothing of height `≤ bound` exists.
    pub fn find_representation(&self, alpha: &Rational, bound: u64) -> Result<(Rational, Rational)> {
        let n = i64::try_from(bound).map_err(|_| Error::NotFound(bound))?;
        for r in 1..=n {
            let rr = Rational::from(r);
            for p in -n..=n {
                let x = Rational::from(p).checked_div(&rr)?;
                for s in -n..=n {
                    if p.gcd(&s).gcd(&r) != 1 {
                        continue;
                    }
                    let y = Rational::from(s).checked_div(&rr)?;
                    if self.eval(&x, &y) == *alpha {
                        return Ok((x, y));
                    }
                }
            }
        }
        Err(Error::NotFound(bound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(s: &str) -> QuadraticForm<Rational> {
        s.parse().unwrap()
    }

    /// Plain scan over every (p, s, r) with no gcd filter, in the same
    /// order; the first hit must coincide.
    fn brute(q: &QuadraticForm<Rational>, alpha: &Rational, n: i64) -> Option<(Rational, Rational)> {
        for r in 1..=n {
            for p in -n..=n {
                for s in -n..=n {
                    let (x, y) = (Rational::frac(p, r), Rational::frac(s, r));
                    if q.eval(&x, &y) == *alpha {
                        return Some((x, y));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn matches_brute_force() {
        for (text, alpha, n) in [("x^2+y^2-1", 0, 1), ("x^2-2y^2-1", 0, 3), ("x^2+y^2", 5, 2), ("x^2-y", 7, 7), ("3x^2+y^2-7", 0, 4)] {
            let q = form(text);
            let alpha = Rational::from(alpha);
            assert_eq!(q.find_representation(&alpha, n as u64).ok(), brute(&q, &alpha, n), "{text}");
        }
    }

    #[test]
    fn fractional_heights() {
        // 3x² + y² = 7 has no integer points but (1/2, 5/2): 3/4 + 25/4 = 7
        let q = form("3x^2+y^2-7");
        assert!(q.find_representation(&Rational::zero(), 2).is_ok());
        let (x, y) = q.find_representation(&Rational::zero(), 3).unwrap();
        assert_eq!(q.eval(&x, &y), Rational::zero());
    }

    #[test]
    fn zero_bound_finds_nothing() {
        assert_eq!(form("x^2+y^2-1").find_representation(&Rational::zero(), 0), Err(Error::NotFound(0)));
    }
}
