//! Representations of primes (and small multiples of primes) by the forms
//! `x^2 + d y^2` and `2 x^2 + d y^2`.

use crate::arith::{is_prime, sqrt_mod_prime};
use crate::error::{Error, Result};

/// `lead * x^2 + d * y^2 = multiple * p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadRep {
    lead: u64,
    d: u64,
    x: i64,
    y: i64,
    multiple: u64,
    p: u64,
}

impl QuadRep {
    fn new(lead: u64, d: u64, x: i64, y: i64, multiple: u64, p: u64) -> Self {
        let rep = Self {
            lead,
            d,
            x,
            y,
            multiple,
            p,
        };
        debug_assert!(rep.holds());
        rep
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn lead(&self) -> u64 {
        self.lead
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    /// 1 for `p`, 2 for `2p`, 4 for `4p = u^2 + d v^2`.
    pub fn multiple(&self) -> u64 {
        self.multiple
    }

    pub fn is_scaled(&self) -> bool {
        self.multiple != 1
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Checks the defining equation exactly.
    pub fn holds(&self) -> bool {
        let lhs =
            self.lead as i128 * (self.x as i128).pow(2) + self.d as i128 * (self.y as i128).pow(2);
        lhs == self.multiple as i128 * self.p as i128
    }

    pub fn with_x(self, x: i64) -> Self {
        Self::new(self.lead, self.d, x, self.y, self.multiple, self.p)
    }

    pub fn with_y(self, y: i64) -> Self {
        Self::new(self.lead, self.d, self.x, y, self.multiple, self.p)
    }
}

/// Sign conventions used to pin down `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `x >= 0`
    NonNegative,
    /// `x = 1 (mod 4)`
    OneModFour,
    /// `x = 1 (mod 3)`
    OneModThree,
}

impl Convention {
    fn name(self) -> &'static str {
        match self {
            Convention::NonNegative => "x >= 0",
            Convention::OneModFour => "x = 1 (mod 4)",
            Convention::OneModThree => "x = 1 (mod 3)",
        }
    }

    fn accepts(self, x: i64) -> bool {
        match self {
            Convention::NonNegative => x >= 0,
            Convention::OneModFour => x.rem_euclid(4) == 1,
            Convention::OneModThree => x.rem_euclid(3) == 1,
        }
    }
}

/// Flips the sign of `x` to satisfy `convention`.
pub fn normalize(rep: QuadRep, convention: Convention) -> Result<QuadRep> {
    [rep.x, -rep.x]
        .into_iter()
        .find(|&x| convention.accepts(x))
        .map(|x| rep.with_x(x))
        .ok_or(Error::Unsatisfiable {
            convention: convention.name(),
            x: rep.x,
        })
}

/// `p = x^2 + d y^2` by Cornacchia's algorithm, with `x, y >= 0` and the
/// smallest such `y`.
pub fn cornacchia(d: u64, p: u64) -> Result<Option<QuadRep>> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p as u128));
    }
    if p == 2 {
        return Ok(exhaustive(1, d, 1, p));
    }
    if d.is_multiple_of(p) {
        return Ok((d == p).then(|| QuadRep::new(1, d, 0, 1, 1, p)));
    }
    if d > p {
        return Ok(None);
    }
    let Some(r) = sqrt_mod_prime(p - d % p, p) else {
        return Ok(None);
    };
    let (mut a, mut b) = (p, r);
    while (b as u128) * (b as u128) >= p as u128 {
        (a, b) = (b, a % b);
    }
    let rest = p - b * b;
    if !rest.is_multiple_of(d) {
        return Ok(None);
    }
    let q = rest / d;
    let s = q.isqrt();
    if s * s != q {
        return Ok(None);
    }
    let (x, y) = if d == 1 && b < s { (s, b) } else { (b, s) };
    Ok(Some(QuadRep::new(1, d, x as i64, y as i64, 1, p)))
}

/// `lead x^2 + d y^2 = multiple * p` by scanning `y` upward; returns the
/// solution with the smallest `y >= 0` and `x >= 0`.
pub fn exhaustive(lead: u64, d: u64, multiple: u64, p: u64) -> Option<QuadRep> {
    let n = multiple as u128 * p as u128;
    let (lead128, d128) = (lead as u128, d as u128);
    let mut y = 0u128;
    while d128 * y * y <= n {
        let rest = n - d128 * y * y;
        if rest.is_multiple_of(lead128) {
            let q = rest / lead128;
            let x = q.isqrt();
            if x * x == q {
                return Some(QuadRep::new(lead, d, x as i64, y as i64, multiple, p));
            }
        }
        y += 1;
    }
    None
}

/// `4p = u^2 + d v^2`.
pub fn represent_scaled(d: u64, p: u64) -> Option<QuadRep> {
    exhaustive(1, d, 4, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes(limit: u64) -> impl Iterator<Item = u64> {
        (2..=limit).filter(|&n| is_prime(n))
    }

    #[test]
    fn cornacchia_examples() {
        let r = cornacchia(7, 11).unwrap().unwrap();
        assert_eq!((r.x(), r.y()), (2, 1));
        let r = cornacchia(2, 11).unwrap().unwrap();
        assert_eq!((r.x(), r.y()), (3, 1));
        assert_eq!(cornacchia(7, 3).unwrap(), None);
        assert!(cornacchia(7, 9).is_err());
        let r = cornacchia(7, 7).unwrap().unwrap();
        assert_eq!((r.x(), r.y()), (0, 1));
    }

    #[test]
    fn normalize_examples() {
        let r = cornacchia(2, 11).unwrap().unwrap();
        assert_eq!(normalize(r, Convention::OneModFour).unwrap().x(), -3);
        let r = cornacchia(9, 13).unwrap().unwrap();
        assert_eq!(normalize(r, Convention::OneModThree).unwrap().x(), -2);
        let r = cornacchia(2, 17).unwrap().unwrap();
        assert_eq!(normalize(r, Convention::OneModFour).unwrap().x(), -3);
        // 3 = 0 + 3 * 1: x = 0 satisfies neither sign of 1 (mod 3)
        let r = cornacchia(3, 3).unwrap().unwrap();
        assert!(normalize(r, Convention::OneModThree).is_err());
        let r = exhaustive(1, 1, 1, 13).unwrap();
        assert!(
            normalize(r.with_x(-r.x()), Convention::NonNegative)
                .unwrap()
                .x()
                >= 0
        );
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        for d in [1u64, 2, 5, 6, 7, 9, 10, 13, 18, 22, 25, 29, 37, 58] {
            for p in primes(2000) {
                let fast = cornacchia(d, p).unwrap();
                let slow = exhaustive(1, d, 1, p);
                assert_eq!(fast, slow, "d={d} p={p}");
                if let Some(r) = fast {
                    assert!(r.holds());
                }
            }
        }
    }

    #[test]
    fn seven_splits_by_residue_class() {
        for p in primes(2000).filter(|&p| p > 2 && p != 7) {
            let exists = cornacchia(7, p).unwrap().is_some();
            assert_eq!(exists, matches!(p % 7, 1 | 2 | 4), "p={p}");
        }
    }

    #[test]
    fn scaled_representations() {
        let r = represent_scaled(7, 11).unwrap();
        assert_eq!(r.x() * r.x() + 7 * r.y() * r.y(), 44);
        assert!(r.is_scaled());
        let r = exhaustive(2, 5, 1, 7).unwrap();
        assert_eq!((r.x(), r.y()), (1, 1));
        assert_eq!(exhaustive(1, 13, 2, 7).unwrap().x(), 1);
    }
}
