//! Exact rational scalars and the small ring interface shared by every algebra in the crate.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s.strip_prefix('+').unwrap_or(s).trim()),
    };
    let v = match body.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| AlgebraError::Parse(s.into()))?;
            let b: BigInt = b.trim().parse().map_err(|_| AlgebraError::Parse(s.into()))?;
            if b.is_zero() {
                return Err(AlgebraError::Parse(format!("zero denominator in `{s}`")));
            }
            Q::new(a, b)
        }
        None => Q::from_integer(body.parse().map_err(|_| AlgebraError::Parse(s.into()))?),
    };
    Ok(if neg { -v } else { v })
}

pub fn fmt_q(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn factorial(n: usize) -> Q {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= k;
    }
    Q::from_integer(f)
}

pub fn binomial(n: usize, k: usize) -> Q {
    if k > n {
        return Q::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn is_negative(c: &Q) -> bool {
    c.is_negative()
}

/// Unital associative algebra over `Q`.
///
/// Elements carry their own context (alphabet, truncation, group), so the
/// neutral elements are produced from an existing element.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, c: &Q) -> Self;
    fn is_zero(&self) -> bool;

    fn negate(&self) -> Self {
        self.scale(&q(-1))
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn scalar_like(&self, c: &Q) -> Self {
        self.one_like().scale(c)
    }
    fn pow(&self, n: usize) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.times(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
    fn commutator(&self, other: &Self) -> Self {
        self.times(other).minus(&other.times(self))
    }
}

/// Algebras truncated at a global degree, with a constant term.
pub trait Truncated: Ring {
    fn cap(&self) -> usize;
    fn constant(&self) -> Q;
}

/// `exp(a)` for `a` with vanishing constant term.
pub fn exp_t<R: Truncated>(a: &R) -> Result<R> {
    if !a.constant().is_zero() {
        return Err(AlgebraError::ConstantTerm { expected: "0".into(), found: fmt_q(&a.constant()) });
    }
    let mut acc = a.one_like();
    let mut term = a.one_like();
    for n in 1..=a.cap() {
        term = term.times(a).scale(&qf(1, n as i64));
        if term.is_zero() {
            break;
        }
        acc = acc.plus(&term);
    }
    Ok(acc)
}

/// `log(g)` for `g` with constant term 1.
pub fn log_t<R: Truncated>(g: &R) -> Result<R> {
    if !g.constant().is_one() {
        return Err(AlgebraError::ConstantTerm { expected: "1".into(), found: fmt_q(&g.constant()) });
    }
    let x = g.minus(&g.one_like());
    let mut acc = g.zero_like();
    let mut pw = g.one_like();
    for n in 1..=g.cap() {
        pw = pw.times(&x);
        if pw.is_zero() {
            break;
        }
        let c = if n % 2 == 1 { qf(1, n as i64) } else { qf(-1, n as i64) };
        acc = acc.plus(&pw.scale(&c));
    }
    Ok(acc)
}

/// Inverse of an element with invertible constant term.
pub fn inv_t<R: Truncated>(g: &R) -> Result<R> {
    let c = g.constant();
    if c.is_zero() {
        return Err(AlgebraError::NotInvertible("zero constant term".into()));
    }
    let ci = c.recip();
    // g = c(1 + x), g^{-1} = c^{-1} sum (-x)^n
    let x = g.scale(&ci).minus(&g.one_like());
    let mx = x.negate();
    let mut acc = g.one_like();
    let mut pw = g.one_like();
    for _ in 1..=g.cap() {
        pw = pw.times(&mx);
        if pw.is_zero() {
            break;
        }
        acc = acc.plus(&pw);
    }
    Ok(acc.scale(&ci))
}

/// `a b a^{-1}`.
pub fn conj_t<R: Truncated>(a: &R, b: &R) -> Result<R> {
    Ok(a.times(b).times(&inv_t(a)?))
}

macro_rules! impl_ops_via_ring {
    ($t:ty) => {
        impl<'a> std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, o: &'a $t) -> $t {
                $crate::ring::Ring::plus(self, o)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, o: &'a $t) -> $t {
                $crate::ring::Ring::minus(self, o)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, o: &'a $t) -> $t {
                $crate::ring::Ring::times(self, o)
            }
        }
        impl<'a> std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::ring::Ring::negate(self)
            }
        }
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                $crate::ring::Ring::plus(&self, &o)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                $crate::ring::Ring::minus(&self, &o)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                $crate::ring::Ring::times(&self, &o)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::ring::Ring::negate(&self)
            }
        }
    };
}
pub(crate) use impl_ops_via_ring;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_rationals() {
        assert_eq!(parse_q("1/24").unwrap(), qf(1, 24));
        assert_eq!(parse_q("-3").unwrap(), q(-3));
        assert_eq!(parse_q(" -2/4 ").unwrap(), qf(-1, 2));
        assert_eq!(fmt_q(&qf(-1, 2)), "-1/2");
        assert_eq!(fmt_q(&q(7)), "7");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), q(10));
        assert_eq!(binomial(2, 5), q(0));
    }
}
