//! The subalgebras `W_l`, `W_r` on the de Rham and Betti sides, their coproducts and the
//! `Ad` isomorphisms between left and right versions.
//!
//! Y-series are stored in their e-word form: `y_n` is `-e0^{n-1} e1`, so a Y-word of length
//! `k` and its e-word differ by `(-1)^k`. All conversions go through [`y_block_word`] and
//! [`e_word_blocks`].

mod betti;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::error::{AlgebraError, Result};
use crate::ring::{impl_ops_via_ring, Ring, Truncated, Q};
use crate::series::text::{split_coeff, split_terms, write_linear};
use crate::series::{Alphabet, TensorSeries, TruncSeries, Word};

pub use betti::{
    ad_x1m1, ad_x1m1_inv, delta_sharp_group, extended_range, gr_class, gr_tensor, is_wlb, iso1_tensor, xi, xi_monomials, xi_word_value, WlB,
    XiLetter, XiPoly, XiTensor,
};

/// The e-word of `y_{n_1} ... y_{n_k}`, without the sign.
pub fn y_block_word(indices: &[u32]) -> Word {
    let mut w = Word::new();
    for &n in indices {
        w.extend(std::iter::repeat_n(0u8, n as usize - 1));
        w.push(1);
    }
    w
}

/// Block decomposition of an e-word ending in `e1` (or empty).
pub fn e_word_blocks(w: &[u8]) -> Option<Vec<u32>> {
    if w.last() == Some(&0) {
        return None;
    }
    let mut out = Vec::new();
    let mut run = 0u32;
    for &l in w {
        if l == 0 {
            run += 1;
        } else {
            out.push(run + 1);
            run = 0;
        }
    }
    Some(out)
}

fn sign(k: usize) -> Q {
    if k.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Whether every word is empty or ends in `e1`.
pub fn in_wl_dr(a: &TruncSeries) -> bool {
    a.terms().all(|(w, _)| w.last() != Some(&0))
}

/// Whether every word is empty or starts with `e1`.
pub fn in_wr_dr(a: &TruncSeries) -> bool {
    a.terms().all(|(w, _)| w.first() != Some(&0))
}

/// An element of `k<<Y>>`.
#[derive(Clone, PartialEq)]
pub struct YSeries(TruncSeries);

impl fmt::Debug for YSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for YSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<(usize, Vec<u32>, Q)> =
            self.y_terms().into_iter().map(|(ix, c)| (ix.iter().sum::<u32>() as usize, ix, c)).collect();
        items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let texts: Vec<(String, Q)> = items.into_iter().map(|(_, ix, c)| (y_word_text(&ix), c)).collect();
        write_linear(f, texts.iter().map(|(s, c)| (s.clone(), c)))
    }
}

fn y_word_text(ix: &[u32]) -> String {
    if ix.is_empty() {
        return "1".into();
    }
    ix.iter().map(|n| format!("y{n}")).collect::<Vec<_>>().join(".")
}

impl YSeries {
    pub fn zero(cap: usize) -> Self {
        YSeries(TruncSeries::e_zero(cap))
    }

    pub fn one(cap: usize) -> Self {
        YSeries(TruncSeries::e_one(cap))
    }

    pub fn y(cap: usize, n: u32) -> Self {
        Self::from_y_terms(cap, [(vec![n], Q::one())])
    }

    pub fn from_y_terms<I: IntoIterator<Item = (Vec<u32>, Q)>>(cap: usize, it: I) -> Self {
        let mut s = TruncSeries::e_zero(cap);
        for (ix, c) in it {
            assert!(ix.iter().all(|&n| n >= 1), "y-indices start at 1");
            s.add_term(y_block_word(&ix), c * sign(ix.len()));
        }
        YSeries(s)
    }

    /// Reads an e-series already lying in `W_l^DR`.
    pub fn from_e(a: &TruncSeries) -> Result<Self> {
        if !same_e(a) {
            return Err(AlgebraError::AlphabetMismatch(a.alphabet().names().join(","), "e0,e1".into()));
        }
        if !in_wl_dr(a) {
            return Err(AlgebraError::NotInSubalgebra("W_l^DR"));
        }
        Ok(YSeries(a.clone()))
    }

    pub fn e_form(&self) -> &TruncSeries {
        &self.0
    }

    pub fn into_e_form(self) -> TruncSeries {
        self.0
    }

    pub fn y_terms(&self) -> Vec<(Vec<u32>, Q)> {
        self.0
            .terms()
            .map(|(w, c)| {
                let ix = e_word_blocks(w).expect("stored words end in e1");
                let s = sign(ix.len());
                (ix, c * s)
            })
            .collect()
    }

    pub fn coeff(&self, ix: &[u32]) -> Q {
        self.0.get(&y_block_word(ix)) * sign(ix.len())
    }

    pub fn cap(&self) -> usize {
        self.0.cap()
    }

    /// `mu . y_n = mu^n y_n`.
    pub fn scale_by(&self, mu: &Q) -> Self {
        YSeries(self.0.scaled_letters(mu))
    }

    /// Parses `c*y2.y1 + ...`.
    pub fn parse(cap: usize, s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(Self::zero(cap));
        }
        let mut terms = Vec::new();
        for (neg, t) in split_terms(s) {
            let (c, m) = split_coeff(&t)?;
            let ix: Vec<u32> = if m == "1" {
                Vec::new()
            } else {
                m.split('.')
                    .map(|p| {
                        p.strip_prefix('y')
                            .and_then(|n| n.parse::<u32>().ok())
                            .filter(|&n| n >= 1)
                            .ok_or_else(|| AlgebraError::UnknownLetter(p.into()))
                    })
                    .collect::<Result<_>>()?
            };
            if ix.iter().sum::<u32>() as usize > cap {
                return Err(AlgebraError::WordTooLong { len: ix.iter().sum::<u32>() as usize, cap });
            }
            terms.push((ix, if neg { -c } else { c }));
        }
        Ok(Self::from_y_terms(cap, terms))
    }

    pub fn delta_star(&self) -> TensorSeries {
        delta_star(&self.0)
    }
}

fn same_e(a: &TruncSeries) -> bool {
    crate::series::same_alphabet(a.alphabet(), &Alphabet::e())
}

impl Ring for YSeries {
    fn zero_like(&self) -> Self {
        YSeries(self.0.zero_like())
    }
    fn one_like(&self) -> Self {
        YSeries(self.0.one_like())
    }
    fn plus(&self, o: &Self) -> Self {
        YSeries(self.0.plus(&o.0))
    }
    fn times(&self, o: &Self) -> Self {
        YSeries(self.0.times(&o.0))
    }
    fn scale(&self, c: &Q) -> Self {
        YSeries(self.0.scale(c))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Truncated for YSeries {
    fn cap(&self) -> usize {
        self.0.cap()
    }
    fn constant(&self) -> Q {
        self.0.constant()
    }
}

impl_ops_via_ring!(YSeries);

/// `pi_Y`: keeps words ending in `e1` and constants, drops the rest.
pub fn pi_y(a: &TruncSeries) -> YSeries {
    let alpha = a.alphabet().clone();
    YSeries(a.map_words(&alpha, |w| if w.last() == Some(&0) { None } else { Some((w.clone(), Q::one())) }))
}

/// `Delta_star` on one e-word ending in `e1`, as signed pairs of e-words.
///
/// With `u_n = e0^{n-1} e1 = -y_n` the rule reads
/// `u_n -> u_n (x) 1 + 1 (x) u_n - sum u_{n'} (x) u_{n''}`.
pub fn delta_star_word(w: &[u8]) -> Vec<((Word, Word), Q)> {
    let blocks = e_word_blocks(w).expect("word must end in e1");
    let mut acc: Vec<((Word, Word), Q)> = vec![((Word::new(), Word::new()), Q::one())];
    for n in blocks {
        let u = |k: u32| y_block_word(&[k]);
        let mut opts: Vec<(Word, Word, Q)> = vec![(u(n), Word::new(), Q::one()), (Word::new(), u(n), Q::one())];
        for a in 1..n {
            opts.push((u(a), u(n - a), -Q::one()));
        }
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for ((l, r), c) in &acc {
            for (ol, or, oc) in &opts {
                let mut l2 = l.clone();
                l2.extend_from_slice(ol);
                let mut r2 = r.clone();
                r2.extend_from_slice(or);
                next.push(((l2, r2), c * oc));
            }
        }
        acc = next;
    }
    acc
}

/// `Delta_star` on an element of `W_l^DR`, with Y-legs in e-word form.
pub fn delta_star(a: &TruncSeries) -> TensorSeries {
    let mut out = TensorSeries::zero(a.alphabet(), a.cap());
    for (w, c) in a.terms() {
        for ((l, r), s) in delta_star_word(w) {
            out.add_term(l, r, c * s);
        }
    }
    out
}

/// `Ad(e1)`: `W_l^DR -> W_r^DR`, `a e1 -> e1 a`.
pub fn ad_e1(a: &TruncSeries) -> Result<TruncSeries> {
    if !in_wl_dr(a) {
        return Err(AlgebraError::NotInSubalgebra("W_l^DR"));
    }
    Ok(a.map_words(&a.alphabet().clone(), |w| Some((ad_e1_word(w), Q::one()))))
}

/// Inverse of [`ad_e1`].
pub fn ad_e1_inv(a: &TruncSeries) -> Result<TruncSeries> {
    if !in_wr_dr(a) {
        return Err(AlgebraError::NotInSubalgebra("W_r^DR"));
    }
    Ok(a.map_words(&a.alphabet().clone(), |w| {
        let mut v = w.clone();
        if !v.is_empty() {
            v.remove(0);
            v.push(1);
        }
        Some((v, Q::one()))
    }))
}

fn ad_e1_word(w: &[u8]) -> Word {
    let mut v = Vec::with_capacity(w.len());
    if let Some((&last, rest)) = w.split_last() {
        v.push(last);
        v.extend_from_slice(rest);
    }
    v
}

/// `Delta_star^{l,r} = Ad(e1)^{(x)2} o Delta_star`.
pub fn delta_star_lr(a: &TruncSeries) -> Result<TensorSeries> {
    if !in_wl_dr(a) {
        return Err(AlgebraError::NotInSubalgebra("W_l^DR"));
    }
    let mut out = TensorSeries::zero(a.alphabet(), a.cap());
    let mut table = DeltaStarTable::default();
    for (w, c) in a.terms() {
        for ((l, r), s) in table.get(w).iter() {
            out.add_term(l.clone(), r.clone(), c * s);
        }
    }
    Ok(out)
}

/// Memoized `Delta_star^{l,r}` on single words.
#[derive(Default)]
pub struct DeltaStarTable {
    memo: HashMap<Word, Arc<Vec<((Word, Word), Q)>>>,
}

impl DeltaStarTable {
    pub fn get(&mut self, w: &[u8]) -> Arc<Vec<((Word, Word), Q)>> {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let v: Vec<_> = delta_star_word(w).into_iter().map(|((l, r), c)| ((ad_e1_word(&l), ad_e1_word(&r)), c)).collect();
        let v = Arc::new(v);
        self.memo.insert(w.to_vec(), v.clone());
        v
    }

    /// Applies the table to a whole series.
    pub fn apply(&mut self, a: &TruncSeries) -> TensorSeries {
        let mut out = TensorSeries::zero(a.alphabet(), a.cap());
        for (w, c) in a.terms() {
            for ((l, r), s) in self.get(w).iter() {
                out.add_term(l.clone(), r.clone(), c * s);
            }
        }
        out
    }
}

/// Text form of a tensor whose legs lie in `W_l^DR`, written in y-words.
pub fn y_tensor_text(t: &TensorSeries) -> String {
    struct YT<'a>(&'a TensorSeries);
    impl fmt::Display for YT<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let mut items: Vec<(usize, Vec<u32>, Vec<u32>, Q)> = self
                .0
                .terms()
                .map(|((l, r), c)| {
                    let a = e_word_blocks(l).expect("left leg ends in e1");
                    let b = e_word_blocks(r).expect("right leg ends in e1");
                    let s = sign(a.len() + b.len());
                    (l.len() + r.len(), a, b, c * s)
                })
                .collect();
            items.sort_by(|x, y| (x.0, &x.1, &x.2).cmp(&(y.0, &y.1, &y.2)));
            let texts: Vec<(String, Q)> = items
                .into_iter()
                .map(|(_, a, b, c)| {
                    let m = if a.is_empty() && b.is_empty() {
                        "1".to_string()
                    } else {
                        format!("{}⊗{}", y_word_text(&a), y_word_text(&b))
                    };
                    (m, c)
                })
                .collect();
            write_linear(f, texts.iter().map(|(s, c)| (s.clone(), c)))
        }
    }
    YT(t).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    #[test]
    fn pi_y_examples() {
        let e = |s: &str| TruncSeries::parse(&Alphabet::e(), 4, s).unwrap();
        assert!(pi_y(&e("e0")).is_zero());
        assert_eq!(pi_y(&e("-e0.e1")), YSeries::y(4, 2));
        assert_eq!(pi_y(&e("1")), YSeries::one(4));
        assert_eq!(pi_y(&e("e1.e1 + e1.e0")).to_string(), "y1.y1");
    }

    #[test]
    fn y_text() {
        let a = YSeries::parse(5, "2*y2.y1 - y1 + 1/3").unwrap();
        assert_eq!(a.to_string(), "1/3 - y1 + 2*y2.y1");
        assert_eq!(a.coeff(&[2, 1]), q(2));
        assert_eq!(a.e_form().get(&[0, 1, 1]), q(2));
        assert!(YSeries::parse(2, "y3").is_err());
        assert!(YSeries::parse(2, "y0").is_err());
    }

    #[test]
    fn delta_star_examples() {
        let t = YSeries::y(4, 1).delta_star();
        assert_eq!(y_tensor_text(&t), "1⊗y1 + y1⊗1");
        let t = YSeries::y(4, 2).delta_star();
        assert_eq!(y_tensor_text(&t), "1⊗y2 + y1⊗y1 + y2⊗1");
        let y1 = YSeries::y(4, 1);
        assert_eq!((&y1 * &y1).delta_star(), y1.delta_star().times(&y1.delta_star()));
    }

    #[test]
    fn delta_star_lr_example() {
        let a = TruncSeries::parse(&Alphabet::e(), 3, "e0.e1").unwrap();
        let t = delta_star_lr(&a).unwrap();
        assert_eq!(t.to_string(), "1⊗e1.e0 - e1⊗e1 + e1.e0⊗1");
        assert_eq!(delta_star_lr(&TruncSeries::e_one(3)).unwrap(), TensorSeries::one(&Alphabet::e(), 3));
        assert!(delta_star_lr(&TruncSeries::e0(3)).is_err());
    }

    #[test]
    fn ad_e1_round_trip() {
        let a = TruncSeries::parse(&Alphabet::e(), 4, "3 + e0.e1 - e1.e0.e1").unwrap();
        let b = ad_e1(&a).unwrap();
        assert_eq!(b, TruncSeries::parse(&Alphabet::e(), 4, "3 + e1.e0 - e1.e1.e0").unwrap());
        assert_eq!(ad_e1_inv(&b).unwrap(), a);
    }
}
