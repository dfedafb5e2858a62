//! Free groups on named generators, their rational group algebras and Fox decomposition.

mod alg;

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{AlgebraError, Result};
use crate::series::Alphabet;

pub use alg::{GroupAlg, GroupAlgF, TensorF2};

/// The generator sets in use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gens {
    /// `X0, X1`
    F2,
    /// `x15, x25, x35`
    F3,
    /// `a1, ..., an`
    Free(u8),
}

impl Gens {
    pub fn rank(self) -> usize {
        match self {
            Gens::F2 => 2,
            Gens::F3 => 3,
            Gens::Free(n) => n as usize,
        }
    }

    pub fn name(self, i: usize) -> String {
        match self {
            Gens::F2 => format!("X{i}"),
            Gens::F3 => format!("x{}5", i + 1),
            Gens::Free(_) => format!("a{}", i + 1),
        }
    }

    pub fn index(self, name: &str) -> Result<usize> {
        (0..self.rank()).find(|&i| self.name(i) == name).ok_or_else(|| AlgebraError::UnknownLetter(name.into()))
    }

    /// Alphabet of the target of `iso_1`, one letter per generator.
    pub fn lie_alphabet(self) -> Arc<Alphabet> {
        match self {
            Gens::F2 => Alphabet::e(),
            Gens::F3 => Alphabet::f3(),
            Gens::Free(n) => {
                let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
                Alphabet::new(&names).unwrap()
            }
        }
    }
}

/// Syllable `i+1` stands for generator `i`, `-(i+1)` for its inverse.
pub type Letter = i8;

pub fn gen(i: usize) -> Letter {
    i as Letter + 1
}

pub fn gen_inv(i: usize) -> Letter {
    -(i as Letter + 1)
}

pub fn letter_index(l: Letter) -> usize {
    (l.unsigned_abs() - 1) as usize
}

/// Groups whose elements have a canonical normal form.
pub trait Group: Clone + Ord + fmt::Debug + fmt::Display {
    fn identity_like(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
    fn is_identity(&self) -> bool;

    fn conj_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inv())
    }
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    gens: Gens,
    letters: Vec<Letter>,
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl GroupWord {
    pub fn identity(gens: Gens) -> Self {
        GroupWord { gens, letters: Vec::new() }
    }

    /// Free reduction of a raw syllable list.
    pub fn reduce(gens: Gens, raw: &[Letter]) -> Result<Self> {
        let r = gens.rank() as Letter;
        let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
        for &l in raw {
            if l == 0 || l.abs() > r {
                return Err(AlgebraError::UnknownLetter(format!("syllable {l}")));
            }
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Ok(GroupWord { gens, letters: out })
    }

    pub fn gen(gens: Gens, i: usize) -> Self {
        GroupWord { gens, letters: vec![gen(i)] }
    }

    pub fn gen_pow(gens: Gens, i: usize, k: i64) -> Self {
        let l = if k >= 0 { gen(i) } else { gen_inv(i) };
        GroupWord { gens, letters: vec![l; k.unsigned_abs() as usize] }
    }

    pub fn gens(&self) -> Gens {
        self.gens
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k >= 0 { self.clone() } else { self.inv() };
        let mut acc = self.identity_like();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Product of letter images, left to right.
    pub fn map_letters<T, F: FnMut(Letter) -> T>(&self, f: F) -> Vec<T> {
        self.letters.iter().copied().map(f).collect()
    }

    pub fn parse(gens: Gens, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Self::identity(gens));
        }
        let mut raw = Vec::new();
        for part in s.split('.') {
            let (name, e) = match part.split_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| AlgebraError::Parse(part.into()))?),
                None => (part, 1),
            };
            let i = gens.index(name)?;
            let l = if e >= 0 { gen(i) } else { gen_inv(i) };
            raw.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        Self::reduce(gens, &raw)
    }

    pub fn random<R: Rng>(gens: Gens, max_len: usize, rng: &mut R) -> Self {
        let n = rng.gen_range(0..=max_len);
        let r = gens.rank();
        let raw: Vec<Letter> = (0..n)
            .map(|_| {
                let i = rng.gen_range(0..r);
                if rng.gen_bool(0.5) {
                    gen(i)
                } else {
                    gen_inv(i)
                }
            })
            .collect();
        Self::reduce(gens, &raw).unwrap()
    }
}

impl Group for GroupWord {
    fn identity_like(&self) -> Self {
        Self::identity(self.gens)
    }
    fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.gens, o.gens, "generator set mismatch");
        let mut a = self.letters.clone();
        let mut k = 0;
        while k < o.letters.len() && a.last() == Some(&-o.letters[k]) {
            a.pop();
            k += 1;
        }
        a.extend_from_slice(&o.letters[k..]);
        GroupWord { gens: self.gens, letters: a }
    }
    fn inv(&self) -> Self {
        GroupWord { gens: self.gens, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }
    fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let n = (j - i) as i64 * if l > 0 { 1 } else { -1 };
            let name = self.gens.name(letter_index(l));
            parts.push(if n == 1 { name } else { format!("{name}^{n}") });
            i = j;
        }
        write!(f, "{}", parts.join("."))
    }
}

/// Direct product, used for tensor squares of group algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: Group, B: Group> Group for Pair<A, B> {
    fn identity_like(&self) -> Self {
        Pair(self.0.identity_like(), self.1.identity_like())
    }
    fn mul(&self, o: &Self) -> Self {
        Pair(self.0.mul(&o.0), self.1.mul(&o.1))
    }
    fn inv(&self) -> Self {
        Pair(self.0.inv(), self.1.inv())
    }
    fn is_identity(&self) -> bool {
        self.0.is_identity() && self.1.is_identity()
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(Gens::F2, s).unwrap()
    }

    #[test]
    fn reduction() {
        assert!(w("X0.X0^-1").is_identity());
        assert_eq!(w("X0.X1.X1^-1.X0"), w("X0^2"));
        assert_eq!(w("1").mul(&w("X1")), w("X1"));
        assert!(GroupWord::reduce(Gens::F2, &[3]).is_err());
        assert!(GroupWord::parse(Gens::F2, "X2").is_err());
    }

    #[test]
    fn text_form() {
        let g = w("X0.X1^-1.X0^2");
        assert_eq!(g.to_string(), "X0.X1^-1.X0^2");
        assert_eq!(g.letters(), &[1, -2, 1, 1]);
        assert_eq!(GroupWord::gen(Gens::F3, 1).to_string(), "x25");
        assert_eq!(w("X1").pow(-2), w("X1^-2"));
    }
}
