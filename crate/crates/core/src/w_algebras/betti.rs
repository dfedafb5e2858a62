//! `W_l^B = k1 + kF2 (X1 - 1)` through its generators `xi_k^{+-} = X0^k (X1^{+-1} - 1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{in_wl_dr, YSeries};
use crate::error::{AlgebraError, Result};
use crate::freegrp::{Gens, Group, GroupAlgF, GroupWord, Pair, TensorF2};
use crate::ring::{binomial, Ring, Q};
use crate::series::{Alphabet, TensorSeries, TruncSeries};

/// `xi_k^eps = X0^k (X1^eps - 1)` with `eps = +-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XiLetter {
    pub eps: i8,
    pub k: i32,
}

impl XiLetter {
    pub fn new(eps: i8, k: i32) -> Self {
        assert!(eps == 1 || eps == -1);
        XiLetter { eps, k }
    }

    pub fn group_value(self) -> GroupAlgF {
        let x0k = GroupWord::gen_pow(Gens::F2, 0, self.k as i64);
        let x1 = GroupWord::gen_pow(Gens::F2, 1, self.eps as i64);
        let mut out = GroupAlgF::word(&x0k.mul(&x1));
        out.add_term(x0k, -Q::one());
        out
    }

    /// `Ad(X1 - 1)` of the letter, an element of `W_r^B`.
    pub fn ad_value(self) -> GroupAlgF {
        let x1m1 = GroupAlgF::minus_one(&GroupWord::gen(Gens::F2, 1));
        let x0k = GroupAlgF::word(&GroupWord::gen_pow(Gens::F2, 0, self.k as i64));
        if self.eps == 1 {
            x1m1.times(&x0k)
        } else {
            let x1inv = GroupAlgF::word(&GroupWord::gen_pow(Gens::F2, 1, -1));
            x1m1.times(&x0k).times(&x1inv).scale(&-Q::one())
        }
    }

    /// `Delta_sharp` of the letter.
    pub fn coproduct(self) -> XiTensor {
        let mut t = XiTensor::default();
        t.add_term(vec![self], vec![], Q::one());
        t.add_term(vec![], vec![self], Q::one());
        let k = self.k;
        let (a, b, s) = if self.eps == 1 { (1, k - 1, -Q::one()) } else { (0, k, Q::one()) };
        for (i, c) in extended_range(a, b) {
            t.add_term(vec![XiLetter::new(self.eps, i)], vec![XiLetter::new(self.eps, k - i)], &s * c);
        }
        t
    }
}

impl fmt::Display for XiLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi{}[{}]", if self.eps == 1 { "+" } else { "-" }, self.k)
    }
}

/// Indices and signs of `sum_{i=a}^{b}` under the convention that an empty range is `b = a - 1`
/// and `b < a - 1` gives `-f(a-1) - ... - f(b+1)`.
pub fn extended_range(a: i32, b: i32) -> Vec<(i32, Q)> {
    if b >= a {
        (a..=b).map(|i| (i, Q::one())).collect()
    } else {
        (b + 1..a).map(|i| (i, -Q::one())).collect()
    }
}

/// Value of a product of letters in `kF2`.
pub fn xi_word_value(w: &[XiLetter]) -> GroupAlgF {
    w.iter().fold(GroupAlgF::one(&GroupWord::identity(Gens::F2)), |acc, l| acc.times(&l.group_value()))
}

/// Noncommutative polynomial in the letters `xi_k^eps`.
#[derive(Clone, PartialEq, Default)]
pub struct XiPoly {
    terms: BTreeMap<Vec<XiLetter>, Q>,
}

impl fmt::Debug for XiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for XiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::series::text::write_linear(f, self.terms.iter().map(|(w, c)| (xi_word_text(w), c)))
    }
}

fn xi_word_text(w: &[XiLetter]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(".")
    }
}

impl XiPoly {
    pub fn one() -> Self {
        Self::word(vec![], Q::one())
    }

    pub fn letter(l: XiLetter) -> Self {
        Self::word(vec![l], Q::one())
    }

    pub fn word(w: Vec<XiLetter>, c: Q) -> Self {
        let mut p = XiPoly::default();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: Vec<XiLetter>, c: Q) {
        add_entry(&mut self.terms, w, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<XiLetter>, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_group_alg(&self) -> GroupAlgF {
        let mut memo = BTreeMap::new();
        let mut acc = GroupAlgF::zero(&GroupWord::identity(Gens::F2));
        for (w, c) in &self.terms {
            acc = acc.plus(&memo_value(&mut memo, w, &|l: XiLetter| l.group_value()).scale(c));
        }
        acc
    }

    /// `Ad(X1 - 1)` applied letter by letter.
    pub fn ad_x1m1(&self) -> GroupAlgF {
        let mut memo = BTreeMap::new();
        let mut acc = GroupAlgF::zero(&GroupWord::identity(Gens::F2));
        for (w, c) in &self.terms {
            acc = acc.plus(&memo_value(&mut memo, w, &|l: XiLetter| l.ad_value()).scale(c));
        }
        acc
    }

    /// Rewrites an element of `W_l^B` in the letters.
    pub fn from_group_alg(b: &GroupAlgF) -> Result<Self> {
        if !is_wlb(b) {
            return Err(AlgebraError::NotInSubalgebra("W_l^B"));
        }
        let mut out = XiPoly::default();
        out.add_term(vec![], b.augmentation());
        let mut memo = BTreeMap::new();
        for (w, c) in b.fox()[1].terms() {
            let p = rewrite(w, 1, &mut memo);
            for (u, d) in p.terms() {
                out.add_term(u.clone(), c * d);
            }
        }
        Ok(out)
    }

    pub fn delta_sharp(&self) -> XiTensor {
        let mut memo: BTreeMap<Vec<XiLetter>, XiTensor> = BTreeMap::new();
        let mut out = XiTensor::default();
        for (w, c) in &self.terms {
            let v = memo_value(&mut memo, w, &|l: XiLetter| l.coproduct());
            out = out.plus(&v.scale(c));
        }
        out
    }
}

fn add_entry<K: Ord>(m: &mut BTreeMap<K, Q>, k: K, c: Q) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match m.entry(k) {
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

fn memo_value<R: Ring + OneOf>(memo: &mut BTreeMap<Vec<XiLetter>, R>, w: &[XiLetter], f: &dyn Fn(XiLetter) -> R) -> R {
    if w.is_empty() {
        return R::unit();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let head = memo_value(memo, &w[..w.len() - 1], f);
    let v = head.times(&f(w[w.len() - 1]));
    memo.insert(w.to_vec(), v.clone());
    v
}

trait OneOf {
    fn unit() -> Self;
}

impl OneOf for GroupAlgF {
    fn unit() -> Self {
        GroupAlgF::one(&GroupWord::identity(Gens::F2))
    }
}

impl OneOf for XiTensor {
    fn unit() -> Self {
        XiTensor::one()
    }
}

/// `w (X1^eps - 1)` as a polynomial in the letters.
///
/// Writing `w = v X0^k` with `k` maximal: if `v = v' X1^d` then
/// `w (X1^eps - 1) = v'(X1^d - 1) xi_k^eps + v' X0^k (X1^eps - 1)`.
fn rewrite(w: &GroupWord, eps: i8, memo: &mut BTreeMap<(GroupWord, i8), XiPoly>) -> XiPoly {
    if let Some(p) = memo.get(&(w.clone(), eps)) {
        return p.clone();
    }
    let letters = w.letters();
    let mut cut = letters.len();
    while cut > 0 && letters[cut - 1].abs() == 1 {
        cut -= 1;
    }
    let k: i32 = letters[cut..].iter().map(|&l| l.signum() as i32).sum();
    let tail = XiLetter::new(eps, k);
    let out = if cut == 0 {
        XiPoly::letter(tail)
    } else {
        let d = letters[cut - 1].signum();
        let v1 = GroupWord::reduce(Gens::F2, &letters[..cut - 1]).unwrap();
        let left = rewrite(&v1, d, memo).times(&XiPoly::letter(tail));
        let shorter = v1.mul(&GroupWord::gen_pow(Gens::F2, 0, k as i64));
        left.plus(&rewrite(&shorter, eps, memo))
    };
    memo.insert((w.clone(), eps), out.clone());
    out
}

impl Ring for XiPoly {
    fn zero_like(&self) -> Self {
        XiPoly::default()
    }
    fn one_like(&self) -> Self {
        XiPoly::one()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = XiPoly::default();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }
    fn scale(&self, c: &Q) -> Self {
        let mut out = XiPoly::default();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Tensor square of [`XiPoly`].
#[derive(Clone, PartialEq, Default)]
pub struct XiTensor {
    terms: BTreeMap<(Vec<XiLetter>, Vec<XiLetter>), Q>,
}

impl fmt::Debug for XiTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for XiTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::series::text::write_linear(
            f,
            self.terms.iter().map(|((a, b), c)| (format!("{}⊗{}", xi_word_text(a), xi_word_text(b)), c)),
        )
    }
}

impl XiTensor {
    pub fn one() -> Self {
        let mut t = XiTensor::default();
        t.add_term(vec![], vec![], Q::one());
        t
    }

    pub fn add_term(&mut self, a: Vec<XiLetter>, b: Vec<XiLetter>, c: Q) {
        add_entry(&mut self.terms, (a, b), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<XiLetter>, Vec<XiLetter>), &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn swap(&self) -> Self {
        let mut t = XiTensor::default();
        for ((a, b), c) in &self.terms {
            t.add_term(b.clone(), a.clone(), c.clone());
        }
        t
    }

    /// Both legs mapped by a letterwise value into `kF2`.
    fn legs_to_group(&self, f: &dyn Fn(XiLetter) -> GroupAlgF) -> TensorF2 {
        let id = Pair(GroupWord::identity(Gens::F2), GroupWord::identity(Gens::F2));
        let mut memo = BTreeMap::new();
        let mut out = TensorF2::zero(&id);
        for ((a, b), c) in &self.terms {
            let va = memo_value(&mut memo, a, f);
            let vb = memo_value(&mut memo, b, f);
            out = out.plus(&TensorF2::tensor(&va, &vb).scale(c));
        }
        out
    }

    pub fn to_group(&self) -> TensorF2 {
        self.legs_to_group(&|l| l.group_value())
    }

    /// `Ad(X1 - 1)^{(x)2}`.
    pub fn ad_x1m1(&self) -> TensorF2 {
        self.legs_to_group(&|l| l.ad_value())
    }

    /// `(id (x) Delta)(t)` and `(Delta (x) id)(t)` as triple tensors.
    pub fn coassociativity_sides(&self) -> (XiTriple, XiTriple) {
        let mut lhs = XiTriple::new();
        let mut rhs = XiTriple::new();
        for ((a, b), c) in &self.terms {
            let db = XiPoly::word(b.clone(), Q::one()).delta_sharp();
            for ((u, v), d) in &db.terms {
                add_entry(&mut lhs, (a.clone(), u.clone(), v.clone()), c * d);
            }
            let da = XiPoly::word(a.clone(), Q::one()).delta_sharp();
            for ((u, v), d) in &da.terms {
                add_entry(&mut rhs, (u.clone(), v.clone(), b.clone()), c * d);
            }
        }
        (lhs, rhs)
    }
}

/// Triple tensors of letter words, for coassociativity checks.
pub type XiTriple = BTreeMap<(Vec<XiLetter>, Vec<XiLetter>, Vec<XiLetter>), Q>;

impl Ring for XiTensor {
    fn zero_like(&self) -> Self {
        XiTensor::default()
    }
    fn one_like(&self) -> Self {
        XiTensor::one()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &o.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = XiTensor::default();
        for ((a, b), x) in &self.terms {
            for ((u, v), y) in &o.terms {
                let mut l = a.clone();
                l.extend_from_slice(u);
                let mut r = b.clone();
                r.extend_from_slice(v);
                out.add_term(l, r, x * y);
            }
        }
        out
    }
    fn scale(&self, c: &Q) -> Self {
        let mut out = XiTensor::default();
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), x * c);
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Membership in `W_l^B`: `b - eps(b)` has no `X0`-component in its Fox decomposition.
pub fn is_wlb(b: &GroupAlgF) -> bool {
    b.gens() == Gens::F2 && b.fox()[0].is_zero()
}

/// An element of `W_l^B`, checked on construction.
#[derive(Clone, PartialEq, Debug)]
pub struct WlB(GroupAlgF);

impl WlB {
    pub fn new(b: GroupAlgF) -> Result<Self> {
        if !is_wlb(&b) {
            return Err(AlgebraError::NotInSubalgebra("W_l^B"));
        }
        Ok(WlB(b))
    }

    pub fn element(&self) -> &GroupAlgF {
        &self.0
    }

    pub fn to_xi(&self) -> XiPoly {
        XiPoly::from_group_alg(&self.0).expect("checked on construction")
    }

    pub fn delta_sharp(&self) -> TensorF2 {
        self.to_xi().delta_sharp().to_group()
    }

    /// `Ad(X1 - 1)^{(x)2} o Delta_sharp`.
    pub fn delta_sharp_lr(&self) -> TensorF2 {
        self.to_xi().delta_sharp().ad_x1m1()
    }
}

impl fmt::Display for WlB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Delta_sharp` of an element of `W_l^B` given in `kF2`.
pub fn delta_sharp_group(b: &GroupAlgF) -> Result<TensorF2> {
    Ok(XiPoly::from_group_alg(b)?.delta_sharp().to_group())
}

/// `Ad(X1 - 1)`: `eps + a (X1 - 1) -> eps + (X1 - 1) a`, through the Fox decomposition.
pub fn ad_x1m1(b: &GroupAlgF) -> Result<GroupAlgF> {
    if !is_wlb(b) {
        return Err(AlgebraError::NotInSubalgebra("W_l^B"));
    }
    let x1m1 = GroupAlgF::minus_one(&GroupWord::gen(Gens::F2, 1));
    let mut out = x1m1.times(&b.fox()[1]);
    out.add_term(GroupWord::identity(Gens::F2), b.augmentation());
    Ok(out)
}

/// Inverse of [`ad_x1m1`], defined on `W_r^B = k1 + (X1 - 1) kF2`.
pub fn ad_x1m1_inv(b: &GroupAlgF) -> Result<GroupAlgF> {
    // under g -> g^{-1}, (X1 - 1) a becomes -a' X1^{-1} (X1 - 1)
    let rev = b.inverse_elements();
    if !is_wlb(&rev) {
        return Err(AlgebraError::NotInSubalgebra("W_r^B"));
    }
    let x1 = GroupAlgF::word(&GroupWord::gen(Gens::F2, 1));
    let a = rev.fox()[1].times(&x1).inverse_elements().scale(&-Q::one());
    let mut out = a.times(&GroupAlgF::minus_one(&GroupWord::gen(Gens::F2, 1)));
    out.add_term(GroupWord::identity(Gens::F2), b.augmentation());
    Ok(out)
}

/// `xi(eps, s | n) = X0^s (X0 - 1)^{n-1} (X1^eps - 1)`.
pub fn xi(eps: i8, s: i32, n: u32) -> XiPoly {
    assert!(n >= 1);
    let mut p = XiPoly::default();
    for j in 0..n {
        let sgn = if (n - 1 - j).is_multiple_of(2) { Q::one() } else { -Q::one() };
        p.add_term(vec![XiLetter::new(eps, s + j as i32)], binomial(n as usize - 1, j as usize) * sgn);
    }
    p
}

/// Products `xi(eps_1, 0 | n_1) ... xi(eps_k, 0 | n_k)` with `sum n_i <= max`, including the empty one.
/// Each entry carries its `(eps_i, n_i)` list.
pub fn xi_monomials(max: u32, signs: &[i8]) -> Vec<(Vec<(i8, u32)>, XiPoly)> {
    let mut out = vec![(vec![], XiPoly::one())];
    let mut frontier = vec![(vec![], XiPoly::one(), 0u32)];
    while let Some((lab, p, w)) = frontier.pop() {
        for n in 1..=max.saturating_sub(w) {
            for &e in signs {
                let mut l2: Vec<(i8, u32)> = lab.clone();
                l2.push((e, n));
                let p2 = p.times(&xi(e, 0, n));
                out.push((l2.clone(), p2.clone()));
                frontier.push((l2, p2, w + n));
            }
        }
    }
    out.sort_by(|a, b| {
        let wa: u32 = a.0.iter().map(|x| x.1).sum();
        let wb: u32 = b.0.iter().map(|x| x.1).sum();
        (wa, &a.0).cmp(&(wb, &b.0))
    });
    out
}

/// Class in `I_l(n) / I_l(n+1) = k<Y>_n`, read off from the leading term of `iso_1`.
pub fn gr_class(a: &GroupAlgF, n: usize) -> Result<YSeries> {
    let s = a.iso1(n);
    if s.valuation().is_some_and(|v| v < n) {
        return Err(AlgebraError::Precondition(format!("element is not in I_l({n})")));
    }
    let lead = s.homogeneous(n);
    if !in_wl_dr(&lead) {
        return Err(AlgebraError::NotInSubalgebra("W_l^B"));
    }
    YSeries::from_e(&lead)
}

/// `iso_1 (x) iso_1`.
pub fn iso1_tensor(t: &TensorF2, cap: usize) -> TensorSeries {
    let e = Alphabet::e();
    let img = |i: u8, s: i64| TruncSeries::letter(&e, cap, i).scale(&Q::from_integer(s.into())).exp().unwrap();
    let l: Vec<TensorSeries> = (0..2).map(|i| TensorSeries::left(&img(i, 1))).collect();
    let li: Vec<TensorSeries> = (0..2).map(|i| TensorSeries::left(&img(i, -1))).collect();
    let r: Vec<TensorSeries> = (0..2).map(|i| TensorSeries::right(&img(i, 1))).collect();
    let ri: Vec<TensorSeries> = (0..2).map(|i| TensorSeries::right(&img(i, -1))).collect();
    t.eval_legs(&l, &li, &r, &ri)
}

/// Total-degree `n` part of `iso_1^{(x)2}(t)`, required to be its leading part.
pub fn gr_tensor(t: &TensorF2, n: usize) -> Result<TensorSeries> {
    let s = iso1_tensor(t, n);
    if s.terms().any(|((u, w), _)| u.len() + w.len() < n) {
        return Err(AlgebraError::Precondition(format!("tensor is not in filtration degree {n}")));
    }
    let mut out = TensorSeries::zero(&Alphabet::e(), n);
    for ((u, w), c) in s.terms() {
        if u.len() + w.len() == n {
            out.add_term(u.clone(), w.clone(), c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    fn p(s: &str) -> GroupAlgF {
        GroupAlgF::parse(Gens::F2, s).unwrap()
    }

    fn t(a: &str, b: &str) -> TensorF2 {
        TensorF2::tensor(&p(a), &p(b))
    }

    #[test]
    fn extended_sums() {
        assert!(extended_range(1, 0).is_empty());
        assert_eq!(extended_range(1, 2), vec![(1, q(1)), (2, q(1))]);
        assert_eq!(extended_range(1, -2), vec![(-1, q(-1)), (0, q(-1))]);
    }

    #[test]
    fn rewriting_round_trip() {
        for s in ["X1 - 1", "X0.X1^-1.X0^2.X1 - X0.X1^-1.X0^2", "3 + X1^-2 - 1", "X0^-2.X1^3.X0.X1 - X0^-2.X1^3.X0"] {
            let b = p(s);
            let x = XiPoly::from_group_alg(&b).unwrap();
            assert_eq!(x.to_group_alg(), b, "{s}");
        }
        assert!(XiPoly::from_group_alg(&p("X0")).is_err());
        assert!(XiPoly::from_group_alg(&p("X1.X0 - X0")).is_err());
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(delta_sharp_group(&p("X1")).unwrap(), t("X1", "X1"));
        let y = p("X0 - X0.X1");
        let expect = &t("X0 - X0.X1", "1") + &t("1", "X0 - X0.X1");
        assert_eq!(delta_sharp_group(&y).unwrap(), expect);
        // k = -1 in the closed form: two correction terms with a minus sign
        let y = p("X0^-1 - X0^-1.X1");
        let z = p("1 - X1");
        let expect = &(&t("X0^-1 - X0^-1.X1", "1") + &t("1", "X0^-1 - X0^-1.X1"))
            - &(&TensorF2::tensor(&z, &y) + &TensorF2::tensor(&y, &z));
        assert_eq!(delta_sharp_group(&y).unwrap(), expect);
        assert_eq!(delta_sharp_group(&p("X1^-1")).unwrap(), t("X1^-1", "X1^-1"));
    }

    #[test]
    fn coassociative_and_cocommutative() {
        for l in [XiLetter::new(1, 3), XiLetter::new(-1, 2), XiLetter::new(1, -2), XiLetter::new(-1, -3)] {
            let d = XiPoly::letter(l).delta_sharp();
            let (a, b) = d.coassociativity_sides();
            let ga: BTreeMap<_, _> = triple_to_group(&a);
            let gb: BTreeMap<_, _> = triple_to_group(&b);
            assert_eq!(ga, gb, "{l}");
            assert_eq!(d.to_group(), d.to_group().swap_legs(), "{l}");
        }
    }

    fn triple_to_group(t: &XiTriple) -> BTreeMap<(GroupWord, GroupWord, GroupWord), Q> {
        let mut out = BTreeMap::new();
        for ((a, b, c), x) in t {
            let (va, vb, vc) = (xi_word_value(a), xi_word_value(b), xi_word_value(c));
            for (g, y) in va.terms() {
                for (h, z) in vb.terms() {
                    for (k, w) in vc.terms() {
                        add_entry(&mut out, (g.clone(), h.clone(), k.clone()), x * y * z * w);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn inverse_relation_respected() {
        let x1 = delta_sharp_group(&p("X1")).unwrap();
        let x1i = delta_sharp_group(&p("X1^-1")).unwrap();
        assert_eq!(x1.times(&x1i), t("1", "1"));
    }

    #[test]
    fn ad_routes_agree() {
        for s in ["X1 - 1", "X0^2.X1^-1 - X0^2", "2 + X0.X1.X0^-1.X1 - X0.X1.X0^-1"] {
            let b = p(s);
            let fast = XiPoly::from_group_alg(&b).unwrap().ad_x1m1();
            let fox = ad_x1m1(&b).unwrap();
            assert_eq!(fast, fox, "{s}");
            assert_eq!(ad_x1m1_inv(&fox).unwrap(), b, "{s}");
        }
    }

    #[test]
    fn lr_example() {
        let b = WlB::new(p("X1 - 1")).unwrap();
        let ad = &t("X1", "X1") - &t("1", "1");
        assert_eq!(b.delta_sharp_lr(), ad);
        assert_eq!(WlB::new(p("1")).unwrap().delta_sharp_lr(), t("1", "1"));
    }

    #[test]
    fn graded_classes() {
        assert_eq!(gr_class(&xi(1, 0, 1).to_group_alg(), 1).unwrap().to_string(), "-y1");
        assert_eq!(gr_class(&xi(-1, 0, 1).to_group_alg(), 1).unwrap().to_string(), "y1");
        let m = xi(1, 1, 2).times(&xi(1, 0, 1)).to_group_alg();
        assert_eq!(gr_class(&m, 3).unwrap().to_string(), "y2.y1");
        assert!(gr_class(&xi(1, 0, 1).to_group_alg(), 2).is_err());
    }

    #[test]
    fn gr_of_coproduct_is_delta_star() {
        for (lab, m) in xi_monomials(4, &[1, -1]) {
            let n: u32 = lab.iter().map(|x| x.1).sum();
            let n = n as usize;
            let g = m.to_group_alg();
            let lhs = gr_tensor(&m.delta_sharp().to_group(), n).unwrap();
            let rhs = gr_class(&g, n).unwrap().delta_star();
            assert_eq!(lhs, rhs.with_cap(n), "{lab:?}");
        }
    }

    #[test]
    fn monomial_count() {
        assert_eq!(xi_monomials(6, &[1, -1]).len(), 729);
        assert_eq!(xi_monomials(3, &[1]).len(), 8);
    }
}
