//! Truncated noncommutative power series over exact rationals.

mod tensor;
pub(crate) mod text;
mod uni;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::ring::{exp_t, impl_ops_via_ring, inv_t, log_t, q, Ring, Truncated, Q};

pub use tensor::TensorSeries;
pub use text::SeriesJson;
pub use uni::UniSeries;

/// A word is a list of letter indices into an [`Alphabet`].
pub type Word = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Alphabet>> {
        if names.is_empty() {
            return Err(AlgebraError::Parse("empty alphabet".into()));
        }
        let letters: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in letters.iter().enumerate() {
            if letters[..i].contains(a) {
                return Err(AlgebraError::Parse(format!("duplicate letter `{a}`")));
            }
        }
        Ok(Arc::new(Alphabet { letters }))
    }

    /// The canonical alphabet `{e0, e1}` of U(f2).
    pub fn e() -> Arc<Alphabet> {
        static E: OnceLock<Arc<Alphabet>> = OnceLock::new();
        E.get_or_init(|| Alphabet::new(&["e0", "e1"]).unwrap()).clone()
    }

    /// The ideal alphabet `{e15, e25, e35}` of U(f3).
    pub fn f3() -> Arc<Alphabet> {
        static F: OnceLock<Arc<Alphabet>> = OnceLock::new();
        F.get_or_init(|| Alphabet::new(&["e15", "e25", "e35"]).unwrap()).clone()
    }

    /// A single commuting-variable alphabet, used for abelianized series.
    pub fn t() -> Arc<Alphabet> {
        static T: OnceLock<Arc<Alphabet>> = OnceLock::new();
        T.get_or_init(|| Alphabet::new(&["t"]).unwrap()).clone()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn name(&self, i: u8) -> &str {
        &self.letters[i as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.letters
    }

    pub fn index(&self, name: &str) -> Result<u8> {
        self.letters
            .iter()
            .position(|l| l == name)
            .map(|i| i as u8)
            .ok_or_else(|| AlgebraError::UnknownLetter(name.to_string()))
    }
}

pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone, PartialEq)]
pub struct TruncSeries {
    alpha: Arc<Alphabet>,
    cap: usize,
    terms: BTreeMap<Word, Q>,
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[N={}]({})", self.cap, self)
    }
}

impl TruncSeries {
    pub fn zero(alpha: &Arc<Alphabet>, cap: usize) -> Self {
        TruncSeries { alpha: alpha.clone(), cap, terms: BTreeMap::new() }
    }

    pub fn scalar(alpha: &Arc<Alphabet>, cap: usize, c: Q) -> Self {
        Self::monomial(alpha, cap, Word::new(), c)
    }

    pub fn one(alpha: &Arc<Alphabet>, cap: usize) -> Self {
        Self::scalar(alpha, cap, Q::one())
    }

    pub fn letter(alpha: &Arc<Alphabet>, cap: usize, i: u8) -> Self {
        Self::monomial(alpha, cap, vec![i], Q::one())
    }

    pub fn monomial(alpha: &Arc<Alphabet>, cap: usize, w: Word, c: Q) -> Self {
        let mut s = Self::zero(alpha, cap);
        if w.len() <= cap && !c.is_zero() {
            s.terms.insert(w, c);
        }
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Q)>>(alpha: &Arc<Alphabet>, cap: usize, it: I) -> Self {
        let mut s = Self::zero(alpha, cap);
        for (w, c) in it {
            s.add_term(w, c);
        }
        s
    }

    /// Series over `{e0, e1}`.
    pub fn e_zero(cap: usize) -> Self {
        Self::zero(&Alphabet::e(), cap)
    }
    pub fn e_one(cap: usize) -> Self {
        Self::one(&Alphabet::e(), cap)
    }
    pub fn e0(cap: usize) -> Self {
        Self::letter(&Alphabet::e(), cap, 0)
    }
    pub fn e1(cap: usize) -> Self {
        Self::letter(&Alphabet::e(), cap, 1)
    }
    /// `e_inf = -e0 - e1`.
    pub fn e_inf(cap: usize) -> Self {
        -(Self::e0(cap) + Self::e1(cap))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alpha
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if w.len() > self.cap || c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a word, 0 when absent.
    pub fn get(&self, w: &[u8]) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of a word; errors when the word exceeds the cap.
    pub fn coeff(&self, w: &[u8]) -> Result<Q> {
        if w.len() > self.cap {
            return Err(AlgebraError::WordTooLong { len: w.len(), cap: self.cap });
        }
        Ok(self.get(w))
    }

    /// Coefficient of an x-word (`0 = x0`, `1 = x1`) in the `x0 = e0, x1 = -e1` convention.
    pub fn coeff_x(&self, xw: &[u8]) -> Result<Q> {
        let c = self.coeff(xw)?;
        let n1 = xw.iter().filter(|&&l| l == 1).count();
        Ok(if n1 % 2 == 1 { -c } else { c })
    }

    pub fn coeff_by_names(&self, names: &[&str]) -> Result<Q> {
        let w: Result<Word> = names.iter().map(|n| self.alpha.index(n)).collect();
        self.coeff(&w?)
    }

    pub fn homogeneous(&self, d: usize) -> Self {
        let terms = self.terms.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())).collect();
        TruncSeries { alpha: self.alpha.clone(), cap: self.cap, terms }
    }

    /// Same element seen with a different degree cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        let terms = self.terms.iter().filter(|(w, _)| w.len() <= cap).map(|(w, c)| (w.clone(), c.clone())).collect();
        TruncSeries { alpha: self.alpha.clone(), cap, terms }
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn exp(&self) -> Result<Self> {
        exp_t(self)
    }

    pub fn log(&self) -> Result<Self> {
        log_t(self)
    }

    pub fn inv(&self) -> Result<Self> {
        inv_t(self)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check_compatible(o)?;
        Ok(self.times(o))
    }

    fn check_compatible(&self, o: &Self) -> Result<()> {
        if !same_alphabet(&self.alpha, &o.alpha) {
            return Err(AlgebraError::AlphabetMismatch(self.alpha.names().join(","), o.alpha.names().join(",")));
        }
        if self.cap != o.cap {
            return Err(AlgebraError::CapMismatch(self.cap, o.cap));
        }
        Ok(())
    }

    fn assert_compatible(&self, o: &Self) {
        if let Err(e) = self.check_compatible(o) {
            panic!("{e}");
        }
    }

    /// Linear map given on words.
    pub fn map_words<F: FnMut(&Word) -> Option<(Word, Q)>>(&self, alpha: &Arc<Alphabet>, mut f: F) -> Self {
        let mut out = Self::zero(alpha, self.cap);
        for (w, c) in &self.terms {
            if let Some((w2, c2)) = f(w) {
                out.add_term(w2, c * c2);
            }
        }
        out
    }

    /// The continuous algebra morphism sending letter `i` to `images[i]`, applied to `self`.
    pub fn eval<R: Ring>(&self, images: &[R], one: &R) -> R {
        assert_eq!(images.len(), self.alpha.len(), "one image per letter required");
        // value of every prefix, computed by right multiplication
        let mut prefix: BTreeMap<&[u8], R> = BTreeMap::new();
        let mut acc = one.zero_like();
        let mut words: Vec<&Word> = self.terms.keys().collect();
        words.sort_by_key(|w| w.len());
        for w in words {
            let v = Self::prefix_value(&mut prefix, w, images, one);
            acc = acc.plus(&v.scale(&self.terms[w]));
        }
        acc
    }

    fn prefix_value<'a, R: Ring>(memo: &mut BTreeMap<&'a [u8], R>, w: &'a [u8], images: &[R], one: &R) -> R {
        if w.is_empty() {
            return one.clone();
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let head = Self::prefix_value(memo, &w[..w.len() - 1], images, one);
        let v = head.times(&images[w[w.len() - 1] as usize]);
        memo.insert(w, v.clone());
        v
    }

    /// `self(a0, a1)` for two-letter series with images in the same alphabet.
    pub fn subs(&self, images: &[TruncSeries]) -> TruncSeries {
        let one = images[0].one_like();
        self.eval(images, &one)
    }

    /// Coproduct making the letters primitive (deconcatenation-dual shuffle coproduct).
    pub fn shuffle_coproduct(&self) -> TensorSeries {
        let mut out = TensorSeries::zero(&self.alpha, self.cap);
        for (w, c) in &self.terms {
            let n = w.len();
            for mask in 0u32..(1u32 << n) {
                let mut a = Word::new();
                let mut b = Word::new();
                for (k, &l) in w.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        a.push(l)
                    } else {
                        b.push(l)
                    }
                }
                out.add_term(a, b, c.clone());
            }
        }
        out
    }

    /// Lie-series test: `Delta(a) = a (x) 1 + 1 (x) a` for the shuffle coproduct.
    pub fn is_primitive(&self) -> bool {
        let lhs = self.shuffle_coproduct();
        let rhs = TensorSeries::left(self) + TensorSeries::right(self);
        lhs == rhs
    }

    /// `Delta(g) = g (x) g` and constant term 1.
    pub fn is_grouplike(&self) -> bool {
        self.constant().is_one() && self.shuffle_coproduct() == TensorSeries::outer(self, self)
    }

    /// Abelianization into `k[[t (x) 1, 1 (x) t]]` for two-letter series.
    pub fn abelianize(&self) -> TensorSeries {
        assert_eq!(self.alpha.len(), 2);
        let t = Alphabet::t();
        let mut out = TensorSeries::zero(&t, self.cap);
        for (w, c) in &self.terms {
            let n0 = w.iter().filter(|&&l| l == 0).count();
            let n1 = w.len() - n0;
            out.add_term(vec![0; n0], vec![0; n1], c.clone());
        }
        out
    }

    /// The scaling automorphism `k . x_i = k x_i`.
    pub fn scaled_letters(&self, k: &Q) -> Self {
        let mut out = Self::zero(&self.alpha, self.cap);
        for (w, c) in &self.terms {
            let mut f = Q::one();
            for _ in 0..w.len() {
                f *= k;
            }
            out.add_term(w.clone(), c * f);
        }
        out
    }
}

impl Ring for TruncSeries {
    fn zero_like(&self) -> Self {
        Self::zero(&self.alpha, self.cap)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.alpha, self.cap)
    }
    fn plus(&self, o: &Self) -> Self {
        self.assert_compatible(o);
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        self.assert_compatible(o);
        let mut acc: BTreeMap<Word, Q> = BTreeMap::new();
        for (u, a) in &self.terms {
            let room = self.cap - u.len();
            for (v, b) in &o.terms {
                if v.len() > room {
                    continue;
                }
                let mut w = Word::with_capacity(u.len() + v.len());
                w.extend_from_slice(u);
                w.extend_from_slice(v);
                *acc.entry(w).or_insert_with(Q::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TruncSeries { alpha: self.alpha.clone(), cap: self.cap, terms: acc }
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        let terms = self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect();
        TruncSeries { alpha: self.alpha.clone(), cap: self.cap, terms }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Truncated for TruncSeries {
    fn cap(&self) -> usize {
        self.cap
    }
    fn constant(&self) -> Q {
        self.get(&[])
    }
}

impl_ops_via_ring!(TruncSeries);

/// Enumerate all words over `k` letters of length exactly `d`.
pub fn words_of_length(k: u8, d: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(out.len() * k as usize);
        for w in &out {
            for l in 0..k {
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

/// Convenience: `q(n)` as a constant series over `{e0, e1}`.
pub fn e_const(cap: usize, n: i64) -> TruncSeries {
    TruncSeries::scalar(&Alphabet::e(), cap, q(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qf;

    fn e(cap: usize) -> (TruncSeries, TruncSeries, TruncSeries) {
        (TruncSeries::e_one(cap), TruncSeries::e0(cap), TruncSeries::e1(cap))
    }

    #[test]
    fn product_expands_and_truncates() {
        let (one, e0, e1) = e(3);
        let p = (&one + &e0) * (&one + &e1);
        assert_eq!(p.len(), 4);
        assert_eq!(p.get(&[0, 1]), q(1));
        assert_eq!(p.get(&[1, 0]), q(0));
        assert_ne!(&e0 * &e1, &e1 * &e0);
        let (_, e0, e1) = e(2);
        assert!(((&e0 * &e1) * e0).is_zero());
    }

    #[test]
    fn exp_log_pair() {
        let (_, e0, e1) = e(5);
        assert_eq!(e0.exp().unwrap().log().unwrap(), e0);
        assert_eq!(TruncSeries::e_zero(5).exp().unwrap(), TruncSeries::e_one(5));
        assert_eq!(e0.exp().unwrap().coeff(&[0, 0]).unwrap(), qf(1, 2));
        let bch = (e0.exp().unwrap() * e1.exp().unwrap()).log().unwrap();
        let d2 = bch.homogeneous(2);
        assert_eq!(d2, (&e0 * &e1 - &e1 * &e0).scale(&qf(1, 2)));
        assert!(e0.log().is_err());
        assert!(TruncSeries::e_one(3).exp().is_err());
    }

    #[test]
    fn coeff_x_sign_and_bounds() {
        let s = TruncSeries::monomial(&Alphabet::e(), 3, vec![0, 1], qf(1, 24));
        assert_eq!(s.coeff_x(&[0, 1]).unwrap(), qf(-1, 24));
        assert!(s.coeff(&[0, 0, 0, 0]).is_err());
    }

    #[test]
    fn primitive_and_grouplike() {
        let (_, e0, e1) = e(4);
        assert!(e0.is_primitive());
        assert!(!(&e0 * &e1).is_primitive());
        assert!(e0.commutator(&e1).is_primitive());
        assert!(e0.exp().unwrap().is_grouplike());
        assert!(!(TruncSeries::e_one(4) + e0).is_grouplike());
    }

    #[test]
    fn eval_identity_and_sign_flip() {
        let (_, e0, e1) = e(4);
        let s = (&e0 * &e1).exp().unwrap() + e1.scale(&q(3));
        assert_eq!(s.subs(&[e0.clone(), e1.clone()]), s);
        let flipped = s.subs(&[e0.clone(), -&e1]);
        assert_eq!(flipped.subs(&[e0, -&e1]), s);
    }

    #[test]
    fn mismatched_caps_are_rejected() {
        assert!(TruncSeries::e0(2).checked_mul(&TruncSeries::e0(3)).is_err());
        let other = Alphabet::new(&["a", "b"]).unwrap();
        assert!(TruncSeries::e0(2).checked_mul(&TruncSeries::letter(&other, 2, 0)).is_err());
    }
}
