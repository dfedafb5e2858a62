use std::fmt;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::ring::{exp_t, factorial, fmt_q, impl_ops_via_ring, inv_t, log_t, Ring, Truncated, Q};

/// Power series in one commuting variable `t`, truncated at `t^N`.
#[derive(Clone, PartialEq, Eq)]
pub struct UniSeries {
    c: Vec<Q>,
}

impl fmt::Debug for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniSeries[N={}]({})", self.cap(), self)
    }
}

impl fmt::Display for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(String, &Q)> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| {
                let m = match n {
                    0 => "1".to_string(),
                    1 => "t".to_string(),
                    _ => format!("t^{n}"),
                };
                (m, c)
            })
            .collect();
        super::text::write_linear(f, items)
    }
}

impl UniSeries {
    pub fn zero(cap: usize) -> Self {
        UniSeries { c: vec![Q::zero(); cap + 1] }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.c[0] = Q::one();
        s
    }

    pub fn t(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if cap >= 1 {
            s.c[1] = Q::one();
        }
        s
    }

    /// Coefficients `c0, c1, ...`; extra entries beyond the cap are dropped.
    pub fn from_coeffs(cap: usize, cs: &[Q]) -> Self {
        let mut s = Self::zero(cap);
        for (i, x) in cs.iter().enumerate().take(cap + 1) {
            s.c[i] = x.clone();
        }
        s
    }

    /// `e^{kt}`.
    pub fn exp_linear(cap: usize, k: &Q) -> Self {
        let mut s = Self::zero(cap);
        let mut p = Q::one();
        for n in 0..=cap {
            s.c[n] = &p / factorial(n);
            p *= k;
        }
        s
    }

    pub fn coeff(&self, n: usize) -> Q {
        self.c.get(n).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn exp(&self) -> Result<Self> {
        exp_t(self)
    }

    pub fn log(&self) -> Result<Self> {
        log_t(self)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.c[0].is_zero() {
            return Err(AlgebraError::NotInvertible("univariate series with zero constant term".into()));
        }
        inv_t(self)
    }

    /// `f(kt)`.
    pub fn scale_arg(&self, k: &Q) -> Self {
        let mut p = Q::one();
        let mut out = self.clone();
        for x in out.c.iter_mut() {
            *x *= &p;
            p *= k;
        }
        out
    }

    /// `f(x)` for `x` in a truncated algebra with vanishing constant term.
    pub fn eval_at<R: Truncated>(&self, x: &R) -> Result<R> {
        if !x.constant().is_zero() {
            return Err(AlgebraError::ConstantTerm { expected: "0".into(), found: fmt_q(&x.constant()) });
        }
        let mut acc = x.zero_like();
        for n in (0..self.c.len()).rev() {
            acc = acc.times(x).plus(&x.scalar_like(&self.c[n]));
        }
        Ok(acc)
    }
}

impl Ring for UniSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.cap())
    }
    fn one_like(&self) -> Self {
        Self::one(self.cap())
    }
    fn plus(&self, o: &Self) -> Self {
        assert_eq!(self.cap(), o.cap(), "univariate cap mismatch");
        UniSeries { c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }
    fn times(&self, o: &Self) -> Self {
        assert_eq!(self.cap(), o.cap(), "univariate cap mismatch");
        let n = self.c.len();
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                out[i + j] += &self.c[i] * &o.c[j];
            }
        }
        UniSeries { c: out }
    }
    fn scale(&self, k: &Q) -> Self {
        UniSeries { c: self.c.iter().map(|a| a * k).collect() }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|a| a.is_zero())
    }
}

impl Truncated for UniSeries {
    fn cap(&self) -> usize {
        self.c.len() - 1
    }
    fn constant(&self) -> Q {
        self.c[0].clone()
    }
}

impl_ops_via_ring!(UniSeries);
