//! The group `(k<<X>>^x, circledast)`, its actions on `k<<X>>` and `k<<Y>>`, the map `Theta`
//! and the double shuffle conditions.
//!
//! Series are written in the letters `e0 = x0`, `e1 = -x1`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::ring::{fmt_q, q, qf, Ring, Truncated, Q};
use crate::series::{Alphabet, TensorSeries, TruncSeries, UniSeries};
use crate::w_algebras::{delta_star, pi_y, YSeries};

fn check_two_letters(g: &TruncSeries) -> Result<()> {
    if g.alphabet().len() != 2 {
        return Err(AlgebraError::AlphabetMismatch(g.alphabet().names().join(","), "e0,e1".into()));
    }
    Ok(())
}

/// `a_G`: `x0 -> G x0 G^{-1}`, `x1 -> x1`.
pub fn a_g(g: &TruncSeries, h: &TruncSeries) -> Result<TruncSeries> {
    check_two_letters(g)?;
    let gi = g.inv()?;
    let cap = g.cap();
    let e0 = TruncSeries::letter(g.alphabet(), cap, 0);
    let e1 = TruncSeries::letter(g.alphabet(), cap, 1);
    Ok(h.subs(&[g.times(&e0).times(&gi), e1]))
}

/// `a~_G`: `x0 -> x0`, `x1 -> G^{-1} x1 G`.
pub fn a_tilde_g(g: &TruncSeries, h: &TruncSeries) -> Result<TruncSeries> {
    check_two_letters(g)?;
    let gi = g.inv()?;
    let cap = g.cap();
    let e0 = TruncSeries::letter(g.alphabet(), cap, 0);
    let e1 = TruncSeries::letter(g.alphabet(), cap, 1);
    Ok(h.subs(&[e0, gi.times(&e1).times(g)]))
}

/// `G (*) H = a_G(H) G`, without the consistency check.
pub fn star(g: &TruncSeries, h: &TruncSeries) -> Result<TruncSeries> {
    Ok(a_g(g, h)?.times(g))
}

/// `G (*) H`, computed both as `G a~_G(H)` and as `a_G(H) G`.
pub fn circledast(g: &TruncSeries, h: &TruncSeries) -> Result<TruncSeries> {
    let left = g.times(&a_tilde_g(g, h)?);
    let right = star(g, h)?;
    if left != right {
        return Err(AlgebraError::Invariant("the two expressions for the circledast product differ".into()));
    }
    Ok(right)
}

/// The inverse for the circledast product, solved degree by degree from `G (*) H = 1`.
pub fn circledast_inv(g: &TruncSeries) -> Result<TruncSeries> {
    // G (*) H = 1  iff  a~_G(H) = G^{-1}; a~_G is unipotent for the degree filtration
    let target = g.inv()?;
    let mut h = TruncSeries::scalar(g.alphabet(), g.cap(), target.constant());
    for d in 1..=g.cap() {
        let err = target.minus(&a_tilde_g(g, &h)?).homogeneous(d);
        h = h.plus(&err);
    }
    let check = circledast(g, &h)?;
    if check != g.one_like() {
        return Err(AlgebraError::Invariant("circledast inverse did not converge".into()));
    }
    Ok(h)
}

/// `k . G`: `x_i -> k x_i`.
pub fn scale_by(g: &TruncSeries, k: &Q) -> TruncSeries {
    g.scaled_letters(k)
}

/// `Gamma_G(t) = exp(sum (-1)^n/n (G|x0^{n-1} x1) t^n)`.
pub fn gamma_of(g: &TruncSeries) -> Result<UniSeries> {
    check_two_letters(g)?;
    let cap = g.cap();
    let mut c = vec![Q::zero(); cap + 1];
    for (n, cn) in c.iter_mut().enumerate().skip(1) {
        let mut w = vec![0u8; n - 1];
        w.push(1);
        let sign = if n % 2 == 0 { q(1) } else { q(-1) };
        *cn = g.coeff_x(&w)? * sign * qf(1, n as i64);
    }
    UniSeries::from_coeffs(cap, &c).exp()
}

/// `Theta(G) = Gamma_G(x1)^{-1} G exp(-(G|x0) x0)`.
pub fn theta(g: &TruncSeries) -> Result<TruncSeries> {
    check_two_letters(g)?;
    if !g.is_grouplike() {
        return Err(AlgebraError::Precondition("log of the series is not a Lie series".into()));
    }
    let cap = g.cap();
    let x1 = TruncSeries::letter(g.alphabet(), cap, 1).negate();
    let gamma = gamma_of(g)?.eval_at(&x1)?;
    let g0 = g.coeff_x(&[0])?;
    let tail = TruncSeries::letter(g.alphabet(), cap, 0).scale(&-g0).exp()?;
    Ok(gamma.inv()?.times(g).times(&tail))
}

/// `S^Y_G(h) = pi_Y(G (*) h_X)`.
pub fn s_y(g: &TruncSeries, h: &YSeries) -> Result<YSeries> {
    Ok(pi_y(&star(g, h.e_form())?))
}

/// `S^Y_{(mu,G)}(h) = S^Y_G(mu . h)`.
pub fn s_y_scaled(mu: &Q, g: &TruncSeries, h: &YSeries) -> Result<YSeries> {
    s_y(g, &h.scale_by(mu))
}

/// `rho_{pi_Y(g)} o a^l_g`, the factorized form of `S^Y_g`.
pub fn s_y_factored(g: &TruncSeries, h: &YSeries) -> Result<YSeries> {
    let a = a_g(g, h.e_form())?;
    YSeries::from_e(&a.times(pi_y(g).e_form()))
}

/// An element of `k^x |x (k<<X>>^x, circledast)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledElem {
    pub mu: Q,
    pub g: TruncSeries,
}

impl ScaledElem {
    /// `(mu, g) (*) (mu', g') = (mu mu', g (*) (mu . g'))`.
    pub fn star(&self, o: &ScaledElem) -> Result<ScaledElem> {
        Ok(ScaledElem { mu: &self.mu * &o.mu, g: star(&self.g, &scale_by(&o.g, &self.mu))? })
    }

    pub fn act(&self, h: &YSeries) -> Result<YSeries> {
        s_y_scaled(&self.mu, &self.g, h)
    }
}

/// Outcome of one condition, with the first failure if any.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Check {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Failure {
    pub degree: usize,
    pub word: String,
    pub detail: String,
}

impl Check {
    fn pass() -> Self {
        Check { ok: true, first_failure: None }
    }

    fn fail(degree: usize, word: String, detail: String) -> Self {
        Check { ok: false, first_failure: Some(Failure { degree, word, detail }) }
    }

    fn coeff(name: &str, found: Q, want: Q) -> Self {
        if found == want {
            Self::pass()
        } else {
            Self::fail(name.split('.').count(), name.into(), format!("coefficient {} instead of {}", fmt_q(&found), fmt_q(&want)))
        }
    }
}

/// Per-condition report of membership in `DMR_mu`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct DmrReport {
    pub degree: usize,
    pub mu: String,
    pub lie_grouplike: Check,
    pub delta_star_grouplike: Check,
    pub coeff_x0: Check,
    pub coeff_x1: Check,
    pub coeff_x0x1: Check,
}

impl DmrReport {
    pub fn all_ok(&self) -> bool {
        [&self.lie_grouplike, &self.delta_star_grouplike, &self.coeff_x0, &self.coeff_x1, &self.coeff_x0x1].iter().all(|c| c.ok)
    }
}

/// Lowest-degree term of a nonzero tensor difference.
fn first_tensor_failure(diff: &TensorSeries, what: &str) -> Check {
    match diff.terms().min_by_key(|((u, w), _)| (u.len() + w.len(), (*u).clone(), (*w).clone())) {
        None => Check::pass(),
        Some(((u, w), c)) => {
            let a = diff.alphabet();
            let name = |x: &[u8]| {
                if x.is_empty() {
                    "1".to_string()
                } else {
                    x.iter().map(|&l| a.name(l).to_string()).collect::<Vec<_>>().join(".")
                }
            };
            Check::fail(u.len() + w.len(), format!("{}⊗{}", name(u), name(w)), format!("{what}: residual {}", fmt_q(c)))
        }
    }
}

/// `Delta_star(P) = P (x) P` for `P` given in e-word form.
pub fn delta_star_grouplike(p: &YSeries) -> Check {
    let lhs = delta_star(p.e_form());
    let rhs = TensorSeries::outer(p.e_form(), p.e_form());
    first_tensor_failure(&lhs.minus(&rhs), "harmonic coproduct")
}

/// Checks the defining conditions of `DMR_mu` through the cap of `phi`.
pub fn dmr_check(phi: &TruncSeries, mu: &Q) -> Result<DmrReport> {
    check_two_letters(phi)?;
    let n = phi.cap();
    let lie = first_tensor_failure(&phi.shuffle_coproduct().minus(&TensorSeries::outer(phi, phi)), "shuffle coproduct");
    let dstar = if lie.ok {
        delta_star_grouplike(&pi_y(&theta(phi)?))
    } else {
        Check::fail(0, "-".into(), "not evaluated: series is not group-like".into())
    };
    let get = |w: &[u8]| if w.len() <= n { phi.coeff_x(w) } else { Ok(Q::zero()) };
    Ok(DmrReport {
        degree: n,
        mu: fmt_q(mu),
        lie_grouplike: lie,
        delta_star_grouplike: dstar,
        coeff_x0: Check::coeff("x0", get(&[0])?, Q::zero()),
        coeff_x1: Check::coeff("x1", get(&[1])?, Q::zero()),
        coeff_x0x1: Check::coeff("x0.x1", get(&[0, 1])?, if n >= 2 { -(mu * mu) * qf(1, 24) } else { Q::zero() }),
    })
}

/// All e-words ending in `e1` of degree `1..=n`, i.e. the Y-words.
pub fn y_words(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for d in 1..=n {
        for w in crate::series::words_of_length(2, d - 1) {
            let mut w = w;
            w.push(1);
            out.push(w);
        }
    }
    out
}

/// `Delta_star o S^Y_{Theta(g)} = (S^Y_{Theta(g)})^{(x)2} o Delta_star` on every Y-word up to the cap,
/// for `g` group-like.
pub fn stabilizer_check(g: &TruncSeries) -> Result<Check> {
    stabilizes(&theta(g)?)
}

/// The stabilizer identity for `S^Y_h` itself.
pub fn stabilizes(h: &TruncSeries) -> Result<Check> {
    let cap = h.cap();
    let e = Alphabet::e();
    let mut memo = std::collections::BTreeMap::new();
    let mut image = |w: &Vec<u8>| -> Result<TruncSeries> {
        if let Some(v) = memo.get(w) {
            return Ok(Clone::clone(v));
        }
        let v = if w.is_empty() {
            star(h, &TruncSeries::one(&e, cap))?
        } else {
            star(h, &TruncSeries::monomial(&e, cap, w.clone(), Q::one()))?
        };
        let v = pi_y(&v).into_e_form();
        memo.insert(w.clone(), v.clone());
        Ok(v)
    };
    for w in std::iter::once(Vec::new()).chain(y_words(cap)) {
        let sw = image(&w)?;
        let lhs = delta_star(&sw);
        let mut rhs = TensorSeries::zero(&e, cap);
        for ((l, r), c) in delta_star(&TruncSeries::monomial(&e, cap, w.clone(), Q::one())).terms() {
            let sl = image(l)?;
            let sr = image(r)?;
            rhs = rhs.plus(&TensorSeries::outer(&sl, &sr).scale(c));
        }
        let chk = first_tensor_failure(&lhs.minus(&rhs), "stabilizer identity");
        if !chk.ok {
            let f = chk.first_failure.unwrap();
            let wname = pi_y(&TruncSeries::monomial(&e, cap, w.clone(), Q::one())).to_string();
            return Ok(Check::fail(f.degree, f.word, format!("on {wname}: {}", f.detail)));
        }
    }
    Ok(Check::pass())
}

/// `e^{beta x1} e^{alpha x0}`, a stabilizing element.
pub fn ef_element(cap: usize, alpha: &Q, beta: &Q) -> TruncSeries {
    let e = Alphabet::e();
    let x0 = TruncSeries::letter(&e, cap, 0);
    let x1 = TruncSeries::letter(&e, cap, 1).negate();
    x1.scale(beta).exp().unwrap().times(&x0.scale(alpha).exp().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(cap: usize, s: &str) -> TruncSeries {
        TruncSeries::parse(&Alphabet::e(), cap, s).unwrap()
    }

    #[test]
    fn star_basics() {
        let cap = 4;
        let one = TruncSeries::e_one(cap);
        let g = e(cap, "1 + e0 - 2*e1 + e0.e1");
        assert_eq!(circledast(&one, &g).unwrap(), g);
        assert_eq!(circledast(&g, &one).unwrap(), g);
        let x0 = TruncSeries::e0(cap);
        let a = x0.scale(&q(2)).exp().unwrap();
        let b = x0.scale(&q(-5)).exp().unwrap();
        assert_eq!(circledast(&a, &b).unwrap(), x0.scale(&q(-3)).exp().unwrap());
        let inv = circledast_inv(&g).unwrap();
        assert_eq!(circledast(&g, &inv).unwrap(), one);
    }

    #[test]
    fn a_g_fixes_x1() {
        let g = e(3, "1 + e0 + e1.e0");
        assert_eq!(a_g(&g, &TruncSeries::e1(3)).unwrap(), TruncSeries::e1(3));
        let gi = g.inv().unwrap();
        let h = e(3, "e0.e1 + e0");
        assert_eq!(a_g(&g, &a_g(&gi, &h).unwrap()).unwrap(), h);
    }

    #[test]
    fn gamma_and_theta() {
        let cap = 5;
        assert_eq!(gamma_of(&TruncSeries::e_one(cap)).unwrap(), UniSeries::one(cap));
        let ex1 = TruncSeries::e1(cap).negate().exp().unwrap();
        assert_eq!(gamma_of(&ex1).unwrap(), UniSeries::exp_linear(cap, &q(-1)));
        assert_eq!(theta(&TruncSeries::e_one(cap)).unwrap(), TruncSeries::e_one(cap));
        let ex0 = TruncSeries::e0(cap).scale(&qf(3, 2)).exp().unwrap();
        assert_eq!(theta(&ex0).unwrap(), TruncSeries::e_one(cap));
        assert!(theta(&e(cap, "1 + e0.e1")).is_err());
    }

    #[test]
    fn s_y_examples() {
        let cap = 4;
        let h = YSeries::parse(cap, "y2 - 3*y1.y1 + 1").unwrap();
        assert_eq!(s_y(&TruncSeries::e_one(cap), &h).unwrap(), h);
        let g = e(cap, "1 + e0 + e1 - e0.e1 + 2*e1.e0.e0");
        assert_eq!(s_y(&g, &h).unwrap(), s_y_factored(&g, &h).unwrap());
        assert_eq!(s_y_scaled(&q(3), &TruncSeries::e_one(cap), &YSeries::y(cap, 2)).unwrap(), YSeries::y(cap, 2).scale(&q(9)));
    }

    #[test]
    fn dmr_trivial_cases() {
        let r = dmr_check(&TruncSeries::e_one(4), &q(0)).unwrap();
        assert!(r.all_ok(), "{r:?}");
        let r = dmr_check(&TruncSeries::e0(4).exp().unwrap(), &q(0)).unwrap();
        assert!(!r.coeff_x0.ok);
    }

    #[test]
    fn ef_elements_stabilize() {
        assert!(stabilizer_check(&TruncSeries::e_one(4)).unwrap().ok);
        let g = ef_element(4, &q(2), &qf(-1, 3));
        assert!(stabilizer_check(&g).unwrap().ok);
        let c = e(4, "e0.e1 - e1.e0").exp().unwrap();
        assert!(!stabilizer_check(&c).unwrap().ok);
    }
}
