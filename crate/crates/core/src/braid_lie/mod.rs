//! Truncated enveloping algebras `U(p5)` and `U(t4)` in smash-product normal form.
//!
//! Both algebras split as a free ideal on three letters and a complement generated by two
//! letters (plus a central letter for `t4`). A basis monomial is stored as
//! `quotient word · ideal word · c^k`; moving a quotient letter `a` left past an ideal word
//! uses `u a = a u - D_a(u)` with `D_a = [a, -]` restricted to the ideal.

pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::ring::{impl_ops_via_ring, q, Ring, Truncated, Q};
use crate::series::{Alphabet, TensorSeries, TruncSeries, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    P5,
    T4,
}

impl Tag {
    /// Quotient letters: index 0 then 1.
    pub fn quotient_names(self) -> [&'static str; 2] {
        match self {
            Tag::P5 => ["e23", "e12"],
            Tag::T4 => ["t23", "t12"],
        }
    }

    pub fn ideal_names(self) -> [&'static str; 3] {
        match self {
            Tag::P5 => ["e15", "e25", "e35"],
            Tag::T4 => ["t14", "t24", "t34"],
        }
    }

    /// `D_a(l) = [l, partner]` for quotient letter `a` and ideal letter `l`.
    fn partner(a: u8, l: u8) -> Option<u8> {
        match (a, l) {
            (1, 0) => Some(1),
            (1, 1) => Some(0),
            (0, 1) => Some(2),
            (0, 2) => Some(1),
            _ => None,
        }
    }
}

/// `(quotient word, ideal word, power of the central letter)`.
pub type Mono = (Word, Word, u8);

#[derive(Clone, PartialEq)]
pub struct SmashElem {
    tag: Tag,
    cap: usize,
    terms: BTreeMap<Mono, Q>,
}

impl fmt::Debug for SmashElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmashElem[{:?}, N={}]({})", self.tag, self.cap, self)
    }
}

impl fmt::Display for SmashElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let qn = self.tag.quotient_names();
        let iname = self.tag.ideal_names();
        let mut items: Vec<(&Mono, &Q)> = self.terms.iter().collect();
        items.sort_by_key(|((a, b, k), _)| (a.len() + b.len() + *k as usize, b.len()));
        crate::series::text::write_linear(
            f,
            items.into_iter().map(|((qw, uw, k), c)| {
                if qw.is_empty() && uw.is_empty() && *k == 0 {
                    return ("1".to_string(), c);
                }
                // normal-form order: central power, quotient word, ideal word
                let mut parts: Vec<String> = Vec::new();
                if *k > 0 {
                    parts.push(if *k == 1 { "c".into() } else { format!("c^{k}") });
                }
                parts.extend(qw.iter().map(|&l| qn[l as usize].to_string()));
                parts.extend(uw.iter().map(|&x| iname[x as usize].to_string()));
                (parts.join("."), c)
            }),
        )
    }
}

fn add_into(map: &mut BTreeMap<Mono, Q>, k: Mono, c: Q) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `D_a(u)` as a list of ideal words with coefficients.
fn derive_word(a: u8, u: &[u8]) -> Vec<(Word, Q)> {
    let mut out = Vec::new();
    for (i, &l) in u.iter().enumerate() {
        if let Some(p) = Tag::partner(a, l) {
            let mut w1 = u[..i].to_vec();
            w1.extend_from_slice(&[l, p]);
            w1.extend_from_slice(&u[i + 1..]);
            let mut w2 = u[..i].to_vec();
            w2.extend_from_slice(&[p, l]);
            w2.extend_from_slice(&u[i + 1..]);
            out.push((w1, Q::one()));
            out.push((w2, -Q::one()));
        }
    }
    out
}

impl SmashElem {
    pub fn zero(tag: Tag, cap: usize) -> Self {
        SmashElem { tag, cap, terms: BTreeMap::new() }
    }

    pub fn one(tag: Tag, cap: usize) -> Self {
        Self::mono(tag, cap, (Word::new(), Word::new(), 0), Q::one())
    }

    pub fn mono(tag: Tag, cap: usize, m: Mono, c: Q) -> Self {
        let mut s = Self::zero(tag, cap);
        s.add_term(m, c);
        s
    }

    pub fn quot(tag: Tag, cap: usize, i: u8) -> Self {
        Self::mono(tag, cap, (vec![i], Word::new(), 0), Q::one())
    }

    pub fn ideal(tag: Tag, cap: usize, i: u8) -> Self {
        Self::mono(tag, cap, (Word::new(), vec![i], 0), Q::one())
    }

    /// The central letter of `U(t4)`, the sum of all six `t_ij`.
    pub fn central(cap: usize) -> Self {
        Self::mono(Tag::T4, cap, (Word::new(), Word::new(), 1), Q::one())
    }

    /// A named degree-one generator `e_ij` (P5) or `t_ij` (T4), or a shorthand `e_{12,5}`, `e_{34,5}`, `e_{123,5}`.
    pub fn generator(tag: Tag, cap: usize, name: &str) -> Result<Self> {
        let qq = |i| Self::quot(tag, cap, i);
        let id = |i| Self::ideal(tag, cap, i);
        let sum = |v: &[SmashElem]| v.iter().fold(Self::zero(tag, cap), |a, b| a.plus(b));
        let n = name.replace(['_', '{', '}', ','], "");
        let out = match (tag, n.as_str()) {
            (Tag::P5, "e23") | (Tag::T4, "t23") => qq(0),
            (Tag::P5, "e12") | (Tag::T4, "t12") => qq(1),
            (Tag::P5, "e15") | (Tag::T4, "t14") => id(0),
            (Tag::P5, "e25") | (Tag::T4, "t24") => id(1),
            (Tag::P5, "e35") | (Tag::T4, "t34") => id(2),
            (Tag::P5, "e45") | (Tag::P5, "e1235") => {
                let s = sum(&[id(0), id(1), id(2)]);
                if n == "e45" {
                    s.negate()
                } else {
                    s
                }
            }
            (Tag::P5, "e125") => sum(&[id(0), id(1)]),
            (Tag::P5, "e345") => sum(&[id(0), id(1)]).negate(),
            (Tag::P5, "e13") => sum(&[qq(1), qq(0), id(0), id(1), id(2)]).negate(),
            (Tag::P5, "e14") => sum(&[qq(0), id(1), id(2)]),
            (Tag::P5, "e24") => sum(&[qq(1), qq(0), id(1)]).negate(),
            (Tag::P5, "e34") => sum(&[qq(1), id(0), id(1)]),
            (Tag::T4, "c") => Self::central(cap),
            (Tag::T4, "t13") => Self::central(cap).minus(&sum(&[qq(1), qq(0), id(0), id(1), id(2)])),
            _ => return Err(AlgebraError::UnknownLetter(name.into())),
        };
        Ok(out)
    }

    /// Letters of the full generating set in index order `ij` with `i < j`.
    pub fn all_generator_names(tag: Tag) -> Vec<&'static str> {
        match tag {
            Tag::P5 => vec!["e12", "e13", "e14", "e15", "e23", "e24", "e25", "e34", "e35", "e45"],
            Tag::T4 => vec!["t12", "t13", "t14", "t23", "t24", "t34"],
        }
    }

    pub fn tag(&self) -> Tag {
        self.tag
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if m.0.len() + m.1.len() + m.2 as usize > self.cap {
            return;
        }
        if self.tag == Tag::P5 && m.2 > 0 {
            panic!("central letter only exists in U(t4)");
        }
        add_into(&mut self.terms, m, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn with_cap(&self, cap: usize) -> Self {
        let mut out = Self::zero(self.tag, cap);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn homogeneous(&self, d: usize) -> Self {
        let mut out = Self::zero(self.tag, self.cap);
        for (m, c) in &self.terms {
            if m.0.len() + m.1.len() + m.2 as usize == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.0.len() + m.1.len() + m.2 as usize).min()
    }

    /// `self · a` for a quotient letter `a`.
    pub fn mul_quot_letter(&self, a: u8) -> Self {
        let mut out = BTreeMap::new();
        for ((qw, uw, k), c) in &self.terms {
            if qw.len() + uw.len() + *k as usize + 1 > self.cap {
                continue;
            }
            let mut q2 = qw.clone();
            q2.push(a);
            add_into(&mut out, (q2, uw.clone(), *k), c.clone());
            for (w, d) in derive_word(a, uw) {
                add_into(&mut out, (qw.clone(), w, *k), -(c * d));
            }
        }
        SmashElem { tag: self.tag, cap: self.cap, terms: out }
    }

    /// `self · u` for an ideal word `u` and central power `k`.
    fn mul_ideal_word(&self, u: &[u8], k: u8, coef: &Q, out: &mut BTreeMap<Mono, Q>) {
        let extra = u.len() + k as usize;
        for ((qw, uw, k0), c) in &self.terms {
            if qw.len() + uw.len() + *k0 as usize + extra > self.cap {
                continue;
            }
            let mut u2 = uw.clone();
            u2.extend_from_slice(u);
            add_into(out, (qw.clone(), u2, k0 + k), c * coef);
        }
    }

    /// The algebra morphism given on the basis letters.
    pub fn eval<R: Ring>(&self, quot: &[R; 2], ideal: &[R; 3], central: Option<&R>, one: &R) -> R {
        let mut qmemo: BTreeMap<Word, R> = BTreeMap::new();
        let mut umemo: BTreeMap<Word, R> = BTreeMap::new();
        let mut acc = one.zero_like();
        for ((qw, uw, k), c) in &self.terms {
            let a = prefix_value(&mut qmemo, qw, quot, one);
            let b = prefix_value(&mut umemo, uw, ideal, one);
            let mut v = a.times(&b);
            if *k > 0 {
                v = v.times(&central.expect("central image required").pow(*k as usize));
            }
            acc = acc.plus(&v.scale(c));
        }
        acc
    }

    /// `pr_i : U(p5) -> U(f2)` for `i ∈ {1, 2, 5}`.
    pub fn pr(&self, i: usize) -> Result<TruncSeries> {
        self.require(Tag::P5)?;
        let e = Alphabet::e();
        let z = TruncSeries::zero(&e, self.cap);
        let e0 = TruncSeries::e0(self.cap);
        let e1 = TruncSeries::e1(self.cap);
        let einf = TruncSeries::e_inf(self.cap);
        let (qi, ii) = match i {
            1 => ([e0.clone(), z.clone()], [z.clone(), e1.clone(), einf]),
            2 => ([z.clone(), z.clone()], [e1.clone(), z.clone(), e0.clone()]),
            5 => ([e0, e1], [z.clone(), z.clone(), z]),
            _ => return Err(AlgebraError::Precondition(format!("no projection pr{i}"))),
        };
        Ok(self.eval(&qi, &ii, None, &TruncSeries::one(&e, self.cap)))
    }

    /// `pr12 = pr1 (x) pr2` as an algebra morphism into the tensor square.
    pub fn pr12(&self) -> Result<TensorSeries> {
        self.require(Tag::P5)?;
        let n = self.cap;
        let e = Alphabet::e();
        let z = TensorSeries::zero(&e, n);
        let e0 = TensorSeries::e(n, 0);
        let e1 = TensorSeries::e(n, 1);
        let f0 = TensorSeries::f(n, 0);
        let f1 = TensorSeries::f(n, 1);
        let einf = (&e0 + &e1).negate();
        let qi = [e0, z.clone()];
        let ii = [f1, e1, einf.plus(&f0)];
        Ok(self.eval(&qi, &ii, None, &TensorSeries::one(&e, n)))
    }

    /// `ℓ : U(f2) -> U(p5)`, `e0 -> e23`, `e1 -> e12`.
    pub fn ell(s: &TruncSeries) -> Self {
        let mut out = Self::zero(Tag::P5, s.cap());
        for (w, c) in s.terms() {
            out.add_term((w.clone(), Word::new(), 0), c.clone());
        }
        out
    }

    /// Embeds a series over `{e15, e25, e35}` as an ideal element.
    pub fn from_ideal_series(tag: Tag, s: &TruncSeries) -> Self {
        let mut out = Self::zero(tag, s.cap());
        for (w, c) in s.terms() {
            out.add_term((Word::new(), w.clone(), 0), c.clone());
        }
        out
    }

    /// The `U(f3)` part when every term has empty quotient word.
    pub fn f3_component(&self) -> Option<TruncSeries> {
        let mut out = TruncSeries::zero(&Alphabet::f3(), self.cap);
        for ((qw, uw, k), c) in &self.terms {
            if !qw.is_empty() || *k > 0 {
                return None;
            }
            out.add_term(uw.clone(), c.clone());
        }
        Some(out)
    }

    /// `(p1, p2, p3)` with `self = Σ p_j e_j5`; requires `self ∈ ker(pr5)`.
    pub fn decompose_right_e5(&self) -> Result<[SmashElem; 3]> {
        let mut out = [Self::zero(self.tag, self.cap), Self::zero(self.tag, self.cap), Self::zero(self.tag, self.cap)];
        for ((qw, uw, k), c) in &self.terms {
            let Some((&last, rest)) = uw.split_last() else {
                return Err(AlgebraError::NotInSubalgebra("the kernel of pr5"));
            };
            out[last as usize].add_term((qw.clone(), rest.to_vec(), *k), c.clone());
        }
        Ok(out)
    }

    /// `Σ p_j e_j5`.
    pub fn recompose_right_e5(p: &[SmashElem; 3]) -> SmashElem {
        let mut acc = p[0].zero_like();
        for (j, pj) in p.iter().enumerate() {
            acc = acc.plus(&pj.times(&Self::ideal(pj.tag, pj.cap, j as u8)));
        }
        acc
    }

    /// Every normal-form monomial of degree `d`.
    pub fn basis(tag: Tag, d: usize) -> Vec<Mono> {
        let kmax = if tag == Tag::T4 { d } else { 0 };
        let mut out = Vec::new();
        for k in 0..=kmax {
            for a in 0..=(d - k) {
                for qw in crate::series::words_of_length(2, a) {
                    for uw in crate::series::words_of_length(3, d - k - a) {
                        out.push((qw.clone(), uw, k as u8));
                    }
                }
            }
        }
        out
    }

    fn require(&self, tag: Tag) -> Result<()> {
        if self.tag != tag {
            return Err(AlgebraError::Precondition(format!("expected {tag:?} element")));
        }
        Ok(())
    }

    fn assert_compatible(&self, o: &Self) {
        assert_eq!(self.tag, o.tag, "smash tag mismatch");
        assert_eq!(self.cap, o.cap, "smash cap mismatch");
    }
}

fn prefix_value<R: Ring>(memo: &mut BTreeMap<Word, R>, w: &[u8], images: &[R], one: &R) -> R {
    if w.is_empty() {
        return one.clone();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let head = prefix_value(memo, &w[..w.len() - 1], images, one);
    let v = head.times(&images[w[w.len() - 1] as usize]);
    memo.insert(w.to_vec(), v.clone());
    v
}

impl Ring for SmashElem {
    fn zero_like(&self) -> Self {
        Self::zero(self.tag, self.cap)
    }
    fn one_like(&self) -> Self {
        Self::one(self.tag, self.cap)
    }
    fn plus(&self, o: &Self) -> Self {
        self.assert_compatible(o);
        let mut out = self.terms.clone();
        for (m, c) in &o.terms {
            add_into(&mut out, m.clone(), c.clone());
        }
        SmashElem { tag: self.tag, cap: self.cap, terms: out }
    }
    fn times(&self, o: &Self) -> Self {
        self.assert_compatible(o);
        // group the right factor by quotient word, then extend `self · q` memoized over prefixes
        let mut by_q: BTreeMap<&Word, Vec<(&Word, u8, &Q)>> = BTreeMap::new();
        for ((qw, uw, k), c) in &o.terms {
            by_q.entry(qw).or_default().push((uw, *k, c));
        }
        let mut memo: BTreeMap<Word, SmashElem> = BTreeMap::new();
        memo.insert(Word::new(), self.clone());
        let mut out = BTreeMap::new();
        for (qw, rest) in by_q {
            let left = left_times_quot(&mut memo, qw);
            for (uw, k, c) in rest {
                left.mul_ideal_word(uw, k, c, &mut out);
            }
        }
        SmashElem { tag: self.tag, cap: self.cap, terms: out }
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        SmashElem { tag: self.tag, cap: self.cap, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn left_times_quot(memo: &mut BTreeMap<Word, SmashElem>, qw: &[u8]) -> SmashElem {
    if let Some(v) = memo.get(qw) {
        return v.clone();
    }
    let head = left_times_quot(memo, &qw[..qw.len() - 1]);
    let v = head.mul_quot_letter(qw[qw.len() - 1]);
    memo.insert(qw.to_vec(), v.clone());
    v
}

impl Truncated for SmashElem {
    fn cap(&self) -> usize {
        self.cap
    }
    fn constant(&self) -> Q {
        self.get(&(Word::new(), Word::new(), 0))
    }
}

impl_ops_via_ring!(SmashElem);

/// Hilbert function predicted by the normal form.
pub fn pbw_dim(tag: Tag, d: usize) -> u64 {
    match tag {
        Tag::P5 => 3u64.pow(d as u32 + 1) - 2u64.pow(d as u32 + 1),
        Tag::T4 => {
            let mut s = 0;
            for i in 0..=d {
                for j in 0..=(d - i) {
                    s += 3u64.pow(i as u32) * 2u64.pow(j as u32);
                }
            }
            s
        }
    }
}

/// Convenience: `q(n)` times the unit.
pub fn smash_const(tag: Tag, cap: usize, n: i64) -> SmashElem {
    SmashElem::one(tag, cap).scale(&q(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: &str) -> SmashElem {
        SmashElem::generator(Tag::P5, 4, n).unwrap()
    }

    #[test]
    fn commutation_rules() {
        let (e12, e15, e25, e23) = (g("e12"), g("e15"), g("e25"), g("e23"));
        assert_eq!(e12.commutator(&e15), &(&e15 * &e25) - &(&e25 * &e15));
        assert_eq!(&e23 * &e15, &e15 * &e23);
        // e15 e12 = (e12 + e25) e15 - e15 e25
        assert_eq!(&e15 * &e12, &(&(&e12 + &e25) * &e15) - &(&e15 * &e25));
    }

    #[test]
    fn relations_vanish() {
        let names = SmashElem::all_generator_names(Tag::P5);
        let idx = |n: &str| -> (u8, u8) {
            let b = n.as_bytes();
            (b[1] - b'0', b[2] - b'0')
        };
        for i in 1..=5u8 {
            let s = names.iter().filter(|n| {
                let (a, b) = idx(n);
                a == i || b == i
            });
            let total = s.fold(SmashElem::zero(Tag::P5, 4), |acc, n| acc + g(n));
            assert!(total.is_zero(), "row {i}");
        }
        for a in &names {
            for b in &names {
                let (i, j) = idx(a);
                let (k, l) = idx(b);
                if i != k && i != l && j != k && j != l {
                    assert!(g(a).commutator(&g(b)).is_zero(), "[{a},{b}]");
                }
            }
        }
    }

    #[test]
    fn projections() {
        assert_eq!(g("e12").pr(5).unwrap(), TruncSeries::e1(4));
        assert_eq!(g("e24").pr(1).unwrap(), TruncSeries::e_inf(4));
        assert_eq!(g("e15").pr12().unwrap(), TensorSeries::f(4, 1));
        let s = TruncSeries::e0(4) * TruncSeries::e1(4) + TruncSeries::e1(4);
        assert_eq!(SmashElem::ell(&s).pr(5).unwrap(), s);
    }

    #[test]
    fn right_decomposition() {
        let e15 = g("e15");
        let p = e15.decompose_right_e5().unwrap();
        assert!(p[0] == SmashElem::one(Tag::P5, 4) && p[1].is_zero() && p[2].is_zero());
        let x = &g("e23") * &g("e25");
        let p = x.decompose_right_e5().unwrap();
        assert_eq!(SmashElem::recompose_right_e5(&p), x);
        let p = (&e15 * &g("e12")).decompose_right_e5().unwrap();
        assert_eq!(p[0], &g("e12") + &g("e25"));
        assert_eq!(p[1], -&e15);
        assert!(p[2].is_zero());
        assert!(g("e23").decompose_right_e5().is_err());
    }

    #[test]
    fn basis_sizes() {
        for d in 0..5 {
            assert_eq!(SmashElem::basis(Tag::P5, d).len() as u64, pbw_dim(Tag::P5, d));
            assert_eq!(SmashElem::basis(Tag::T4, d).len() as u64, pbw_dim(Tag::T4, d));
        }
        assert_eq!(pbw_dim(Tag::T4, 1), 6);
    }
}
