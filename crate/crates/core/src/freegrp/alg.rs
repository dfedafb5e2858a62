use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{letter_index, Gens, Group, GroupWord, Pair};
use crate::error::Result;
use crate::ring::{inv_t, Ring, Truncated, Q};
use crate::series::text::{split_coeff, split_terms, write_linear};
use crate::series::TruncSeries;

/// Finite rational combination of group elements.
#[derive(Clone, PartialEq)]
pub struct GroupAlg<G: Group> {
    ident: G,
    terms: BTreeMap<G, Q>,
}

/// `kF` for a free group `F`.
pub type GroupAlgF = GroupAlg<GroupWord>;
/// `kF2 (x) kF2`.
pub type TensorF2 = GroupAlg<Pair<GroupWord, GroupWord>>;

impl<G: Group> fmt::Debug for GroupAlg<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<G: Group> fmt::Display for GroupAlg<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(
            f,
            self.terms.iter().map(|(g, c)| (if g.is_identity() { "1".to_string() } else { g.to_string() }, c)),
        )
    }
}

impl<G: Group> GroupAlg<G> {
    pub fn zero(ident: &G) -> Self {
        GroupAlg { ident: ident.identity_like(), terms: BTreeMap::new() }
    }

    pub fn one(ident: &G) -> Self {
        Self::from_group(&ident.identity_like())
    }

    pub fn from_group(g: &G) -> Self {
        let mut a = Self::zero(g);
        a.terms.insert(g.clone(), Q::one());
        a
    }

    /// `g - 1`.
    pub fn minus_one(g: &G) -> Self {
        let mut a = Self::from_group(g);
        a.add_term(g.identity_like(), -Q::one());
        a
    }

    pub fn from_terms<I: IntoIterator<Item = (G, Q)>>(ident: &G, it: I) -> Self {
        let mut a = Self::zero(ident);
        for (g, c) in it {
            a.add_term(g, c);
        }
        a
    }

    pub fn identity(&self) -> &G {
        &self.ident
    }

    pub fn add_term(&mut self, g: G, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(g) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&G, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &G) -> Q {
        self.terms.get(g).cloned().unwrap_or_else(Q::zero)
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> Q {
        self.terms.values().fold(Q::zero(), |a, c| a + c)
    }

    /// Linear extension of a map on group elements.
    pub fn map_basis<H: Group, F: FnMut(&G) -> H>(&self, ident: &H, mut f: F) -> GroupAlg<H> {
        let mut out = GroupAlg::zero(ident);
        for (g, c) in &self.terms {
            out.add_term(f(g), c.clone());
        }
        out
    }

    /// Linear extension of a map from group elements into a ring.
    pub fn map_linear<R: Ring, F: FnMut(&G) -> R>(&self, zero: &R, mut f: F) -> R {
        let mut acc = zero.zero_like();
        for (g, c) in &self.terms {
            acc = acc.plus(&f(g).scale(c));
        }
        acc
    }

    /// Antipode-type involution `g -> g^{-1}`.
    pub fn inverse_elements(&self) -> Self {
        self.map_basis(&self.ident, |g| g.inv())
    }
}

impl<G: Group> Ring for GroupAlg<G> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.ident)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.ident)
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<G, Q> = BTreeMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &o.terms {
                *acc.entry(g.mul(h)).or_insert_with(Q::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        GroupAlg { ident: self.ident.clone(), terms: acc }
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        GroupAlg { ident: self.ident.clone(), terms: self.terms.iter().map(|(g, v)| (g.clone(), v * c)).collect() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<G: Group> std::ops::Add for &GroupAlg<G> {
    type Output = GroupAlg<G>;
    fn add(self, o: Self) -> GroupAlg<G> {
        self.plus(o)
    }
}
impl<G: Group> std::ops::Sub for &GroupAlg<G> {
    type Output = GroupAlg<G>;
    fn sub(self, o: Self) -> GroupAlg<G> {
        self.minus(o)
    }
}
impl<G: Group> std::ops::Mul for &GroupAlg<G> {
    type Output = GroupAlg<G>;
    fn mul(self, o: Self) -> GroupAlg<G> {
        self.times(o)
    }
}
impl<G: Group> std::ops::Neg for &GroupAlg<G> {
    type Output = GroupAlg<G>;
    fn neg(self) -> GroupAlg<G> {
        self.negate()
    }
}

impl GroupAlgF {
    pub fn word(w: &GroupWord) -> Self {
        Self::from_group(w)
    }

    pub fn gens(&self) -> Gens {
        self.ident.gens()
    }

    /// Parses `c*word + ...` where words use the `X0.X1^-1` syntax.
    pub fn parse(gens: Gens, s: &str) -> Result<Self> {
        let id = GroupWord::identity(gens);
        let mut out = Self::zero(&id);
        if s.trim() == "0" {
            return Ok(out);
        }
        for (neg, t) in split_terms(s) {
            let (c, m) = split_coeff(&t)?;
            let w = GroupWord::parse(gens, &m)?;
            out.add_term(w, if neg { -c } else { c });
        }
        Ok(out)
    }

    /// The decomposition `w - 1 = sum_i f_i (a_i - 1)` of a single word.
    pub fn fox_word(w: &GroupWord) -> Vec<GroupAlgF> {
        let id = w.identity_like();
        let mut out = vec![GroupAlgF::zero(&id); w.gens().rank()];
        let mut prefix = id.clone();
        for &l in w.letters() {
            let i = letter_index(l);
            let step = GroupWord::reduce(w.gens(), &[l]).unwrap();
            if l > 0 {
                out[i].add_term(prefix.clone(), Q::one());
            } else {
                // a^{-1} - 1 = -a^{-1}(a - 1)
                out[i].add_term(prefix.mul(&step), -Q::one());
            }
            prefix = prefix.mul(&step);
        }
        out
    }

    /// Linear extension of [`GroupAlgF::fox_word`]; constants contribute nothing.
    pub fn fox(&self) -> Vec<GroupAlgF> {
        let mut out = vec![GroupAlgF::zero(&self.ident); self.gens().rank()];
        for (w, c) in &self.terms {
            for (o, f) in out.iter_mut().zip(Self::fox_word(w)) {
                *o = o.plus(&f.scale(c));
            }
        }
        out
    }

    /// Recombine `sum_i f_i (a_i - 1)`.
    pub fn fox_recompose(parts: &[GroupAlgF]) -> GroupAlgF {
        let id = parts[0].ident.clone();
        let mut acc = GroupAlgF::zero(&id);
        for (i, f) in parts.iter().enumerate() {
            acc = acc.plus(&f.times(&GroupAlgF::minus_one(&GroupWord::gen(id.gens(), i))));
        }
        acc
    }

    /// The algebra morphism sending generator `i` to `images[i]` (which must be invertible).
    pub fn eval_hom<R: Truncated>(&self, images: &[R]) -> Result<R> {
        let inverses: Result<Vec<R>> = images.iter().map(inv_t).collect();
        let inverses = inverses?;
        Ok(self.eval_with_inverses(images, &inverses))
    }

    pub fn eval_with_inverses<R: Ring>(&self, images: &[R], inverses: &[R]) -> R {
        let one = images[0].one_like();
        let mut memo: BTreeMap<Vec<i8>, R> = BTreeMap::new();
        let mut acc = one.zero_like();
        for (w, c) in &self.terms {
            let v = word_value(&mut memo, w.letters(), images, inverses, &one);
            acc = acc.plus(&v.scale(c));
        }
        acc
    }

    /// `X_i -> exp(e_i)`, the filtered isomorphism onto the completed free algebra.
    pub fn iso1(&self, cap: usize) -> TruncSeries {
        let alpha = self.gens().lie_alphabet();
        let images: Vec<TruncSeries> =
            (0..alpha.len()).map(|i| TruncSeries::letter(&alpha, cap, i as u8).exp().unwrap()).collect();
        self.eval_hom(&images).unwrap()
    }

    /// Lowest `v` with `a` in `I^v`; `None` when the value exceeds the cap.
    pub fn filtration_degree(&self, cap: usize) -> Option<usize> {
        self.iso1(cap).valuation()
    }
}

fn word_value<R: Ring>(memo: &mut BTreeMap<Vec<i8>, R>, w: &[i8], images: &[R], inverses: &[R], one: &R) -> R {
    if w.is_empty() {
        return one.clone();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let head = word_value(memo, &w[..w.len() - 1], images, inverses, one);
    let l = w[w.len() - 1];
    let img = if l > 0 { &images[letter_index(l)] } else { &inverses[letter_index(l)] };
    let v = head.times(img);
    memo.insert(w.to_vec(), v.clone());
    v
}

impl TensorF2 {
    pub fn tensor(a: &GroupAlgF, b: &GroupAlgF) -> Self {
        let id = Pair(a.ident.clone(), b.ident.clone());
        let mut out = Self::zero(&id);
        for (g, x) in &a.terms {
            for (h, y) in &b.terms {
                out.add_term(Pair(g.clone(), h.clone()), x * y);
            }
        }
        out
    }

    /// `f (x) g` applied to every pair, for morphisms given on generators of each leg.
    pub fn eval_legs<R: Ring>(&self, left: &[R], left_inv: &[R], right: &[R], right_inv: &[R]) -> R {
        let one = left[0].one_like();
        let mut lm: BTreeMap<Vec<i8>, R> = BTreeMap::new();
        let mut rm: BTreeMap<Vec<i8>, R> = BTreeMap::new();
        let mut acc = one.zero_like();
        for (Pair(g, h), c) in &self.terms {
            let a = word_value(&mut lm, g.letters(), left, left_inv, &one);
            let b = word_value(&mut rm, h.letters(), right, right_inv, &one);
            acc = acc.plus(&a.times(&b).scale(c));
        }
        acc
    }

    pub fn swap_legs(&self) -> Self {
        let id = Pair(self.ident.1.clone(), self.ident.0.clone());
        self.map_basis(&id, |p| Pair(p.1.clone(), p.0.clone()))
    }
}

impl<G: Group> std::ops::Add for GroupAlg<G> {
    type Output = GroupAlg<G>;
    fn add(self, o: Self) -> GroupAlg<G> {
        self.plus(&o)
    }
}
impl<G: Group> std::ops::Sub for GroupAlg<G> {
    type Output = GroupAlg<G>;
    fn sub(self, o: Self) -> GroupAlg<G> {
        self.minus(&o)
    }
}
impl<G: Group> std::ops::Mul for GroupAlg<G> {
    type Output = GroupAlg<G>;
    fn mul(self, o: Self) -> GroupAlg<G> {
        self.times(&o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    fn p(s: &str) -> GroupAlgF {
        GroupAlgF::parse(Gens::F2, s).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(p("X1 - 1").times(&p("X1^-1 - 1")), p("2 - X1 - X1^-1"));
        let xi = |k: i64, e: i64| p(&format!("X0^{k}.X1^{e} - X0^{k}"));
        assert_eq!(xi(2, 1).times(&xi(0, -1)), -&(&xi(2, 1) + &xi(2, -1)));
        assert_eq!(p("1").times(&p("3*X0 - X1")), p("3*X0 - X1"));
    }

    #[test]
    fn fox_examples() {
        let g = Gens::Free(2);
        let a1 = GroupWord::gen(g, 0);
        let f = GroupAlgF::fox_word(&a1.inv());
        assert_eq!(f[0], GroupAlgF::from_terms(&a1.identity_like(), [(a1.inv(), q(-1))]));
        let w = GroupWord::parse(g, "a1.a2.a1^-1").unwrap();
        let f = GroupAlgF::fox_word(&w);
        assert_eq!(f[0], GroupAlgF::parse(g, "1 - a1.a2.a1^-1").unwrap());
        assert_eq!(f[1], GroupAlgF::parse(g, "a1").unwrap());
        assert_eq!(GroupAlgF::fox_recompose(&f), GroupAlgF::minus_one(&w));
    }

    #[test]
    fn filtration_degrees() {
        assert_eq!(p("X1 - 1").filtration_degree(4), Some(1));
        assert_eq!(p("X0 - 1").times(&p("X1 - 1")).filtration_degree(4), Some(2));
        assert_eq!(p("1").filtration_degree(4), Some(0));
        assert_eq!(p("0").filtration_degree(4), None);
    }

    #[test]
    fn iso_images() {
        let e1 = TruncSeries::e1(4);
        assert_eq!(p("X1").iso1(4), e1.exp().unwrap());
        assert_eq!(p("X0^-1").iso1(4), TruncSeries::e0(4).scale(&q(-1)).exp().unwrap());
    }
}
