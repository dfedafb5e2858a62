use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{same_alphabet, Alphabet, TruncSeries, Word};
use crate::ring::{impl_ops_via_ring, Ring, Truncated, Q};

/// Element of the completed tensor square of a series algebra, truncated at total degree.
#[derive(Clone, PartialEq)]
pub struct TensorSeries {
    alpha: Arc<Alphabet>,
    cap: usize,
    terms: BTreeMap<(Word, Word), Q>,
}

impl fmt::Debug for TensorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorSeries[N={}]({})", self.cap, self)
    }
}

impl TensorSeries {
    pub fn zero(alpha: &Arc<Alphabet>, cap: usize) -> Self {
        TensorSeries { alpha: alpha.clone(), cap, terms: BTreeMap::new() }
    }

    pub fn one(alpha: &Arc<Alphabet>, cap: usize) -> Self {
        let mut t = Self::zero(alpha, cap);
        t.add_term(Word::new(), Word::new(), Q::one());
        t
    }

    pub fn monomial(alpha: &Arc<Alphabet>, cap: usize, u: Word, w: Word, c: Q) -> Self {
        let mut t = Self::zero(alpha, cap);
        t.add_term(u, w, c);
        t
    }

    /// `a (x) 1`.
    pub fn left(a: &TruncSeries) -> Self {
        let mut t = Self::zero(a.alphabet(), a.cap());
        for (w, c) in a.terms() {
            t.add_term(w.clone(), Word::new(), c.clone());
        }
        t
    }

    /// `1 (x) a`.
    pub fn right(a: &TruncSeries) -> Self {
        let mut t = Self::zero(a.alphabet(), a.cap());
        for (w, c) in a.terms() {
            t.add_term(Word::new(), w.clone(), c.clone());
        }
        t
    }

    /// `a (x) b`.
    pub fn outer(a: &TruncSeries, b: &TruncSeries) -> Self {
        let cap = a.cap();
        let mut t = Self::zero(a.alphabet(), cap);
        for (u, x) in a.terms() {
            for (w, y) in b.terms() {
                if u.len() + w.len() <= cap {
                    t.add_term(u.clone(), w.clone(), x * y);
                }
            }
        }
        t
    }

    /// `e_i (x) 1` and `1 (x) e_i` over `{e0, e1}`.
    pub fn e(cap: usize, i: u8) -> Self {
        Self::left(&TruncSeries::letter(&Alphabet::e(), cap, i))
    }
    pub fn f(cap: usize, i: u8) -> Self {
        Self::right(&TruncSeries::letter(&Alphabet::e(), cap, i))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alpha
    }

    pub fn add_term(&mut self, u: Word, w: Word, c: Q) {
        if u.len() + w.len() > self.cap || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((u, w)) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, u: &[u8], w: &[u8]) -> Q {
        self.terms.get(&(u.to_vec(), w.to_vec())).cloned().unwrap_or_else(Q::zero)
    }

    pub fn with_cap(&self, cap: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|((u, w), _)| u.len() + w.len() <= cap)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        TensorSeries { alpha: self.alpha.clone(), cap, terms }
    }

    /// Exchange the two legs.
    pub fn swap(&self) -> Self {
        let terms = self.terms.iter().map(|((u, w), c)| ((w.clone(), u.clone()), c.clone())).collect();
        TensorSeries { alpha: self.alpha.clone(), cap: self.cap, terms }
    }

    /// Apply a word-level linear map to each leg independently.
    pub fn map_legs<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Word) -> Vec<(Word, Q)>,
    {
        let mut memo: BTreeMap<Word, Vec<(Word, Q)>> = BTreeMap::new();
        let mut out = Self::zero(&self.alpha, self.cap);
        for ((u, w), c) in &self.terms {
            let fu = memo.entry(u.clone()).or_insert_with(|| f(u)).clone();
            let fw = memo.entry(w.clone()).or_insert_with(|| f(w)).clone();
            for (u2, a) in &fu {
                for (w2, b) in &fw {
                    out.add_term(u2.clone(), w2.clone(), c * a * b);
                }
            }
        }
        out
    }

    /// Algebra morphism on each leg, given letter images as tensors.
    pub fn eval_legs(&self, left: &[TensorSeries], right: &[TensorSeries]) -> TensorSeries {
        let one = Self::one(&left[0].alpha, left[0].cap);
        let mut acc = one.zero_like();
        let mut lmemo: BTreeMap<Word, TensorSeries> = BTreeMap::new();
        let mut rmemo: BTreeMap<Word, TensorSeries> = BTreeMap::new();
        for ((u, w), c) in &self.terms {
            let lu = word_value(&mut lmemo, u, left, &one);
            let rw = word_value(&mut rmemo, w, right, &one);
            acc = acc.plus(&lu.times(&rw).scale(c));
        }
        acc
    }

    /// Terms whose right leg is empty, read as a series.
    pub fn right_counit(&self) -> TruncSeries {
        TruncSeries::from_terms(
            &self.alpha,
            self.cap,
            self.terms.iter().filter(|((_, w), _)| w.is_empty()).map(|((u, _), c)| (u.clone(), c.clone())),
        )
    }

    fn assert_compatible(&self, o: &Self) {
        assert!(same_alphabet(&self.alpha, &o.alpha), "tensor alphabet mismatch");
        assert_eq!(self.cap, o.cap, "tensor cap mismatch");
    }
}

fn word_value(memo: &mut BTreeMap<Word, TensorSeries>, w: &Word, images: &[TensorSeries], one: &TensorSeries) -> TensorSeries {
    if w.is_empty() {
        return one.clone();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let head = word_value(memo, &w[..w.len() - 1].to_vec(), images, one);
    let v = head.times(&images[w[w.len() - 1] as usize]);
    memo.insert(w.clone(), v.clone());
    v
}

impl Ring for TensorSeries {
    fn zero_like(&self) -> Self {
        Self::zero(&self.alpha, self.cap)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.alpha, self.cap)
    }
    fn plus(&self, o: &Self) -> Self {
        self.assert_compatible(o);
        let mut out = self.terms.clone();
        for (k, c) in &o.terms {
            *out.entry(k.clone()).or_insert_with(Q::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        TensorSeries { alpha: self.alpha.clone(), cap: self.cap, terms: out }
    }
    fn times(&self, o: &Self) -> Self {
        self.assert_compatible(o);
        let mut acc: BTreeMap<(Word, Word), Q> = BTreeMap::new();
        for ((u1, w1), a) in &self.terms {
            let room = self.cap - u1.len() - w1.len();
            for ((u2, w2), b) in &o.terms {
                if u2.len() + w2.len() > room {
                    continue;
                }
                let mut u = u1.clone();
                u.extend_from_slice(u2);
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                *acc.entry((u, w)).or_insert_with(Q::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TensorSeries { alpha: self.alpha.clone(), cap: self.cap, terms: acc }
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        TensorSeries { alpha: self.alpha.clone(), cap: self.cap, terms }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Truncated for TensorSeries {
    fn cap(&self) -> usize {
        self.cap
    }
    fn constant(&self) -> Q {
        self.get(&[], &[])
    }
}

impl_ops_via_ring!(TensorSeries);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    #[test]
    fn legs_commute() {
        let a = TruncSeries::e0(4) * TruncSeries::e1(4) + TruncSeries::e1(4);
        let b = TruncSeries::e0(4).exp().unwrap();
        let l = TensorSeries::left(&a);
        let r = TensorSeries::right(&b);
        assert_eq!(&l * &r, &r * &l);
        assert_eq!(&l * &r, TensorSeries::outer(&a, &b));
    }

    #[test]
    fn swap_and_truncation() {
        let t = TensorSeries::e(2, 0) * TensorSeries::f(2, 1);
        assert_eq!(t.get(&[0], &[1]), q(1));
        assert_eq!(t.swap().get(&[1], &[0]), q(1));
        assert!((t * TensorSeries::e(2, 0)).is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let e = TensorSeries::e(3, 0);
        assert!((&e - &e).is_zero());
        let mut t = e.clone();
        t.add_term(vec![0], vec![], q(-1));
        assert!(t.is_empty());
    }
}
