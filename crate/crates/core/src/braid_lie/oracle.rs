//! Brute-force model: the free algebra on all generators modulo the two-sided ideal of the
//! defining relations, reduced degree by degree.

use std::sync::Arc;

use num_traits::Zero;

use super::{SmashElem, Tag};
use crate::linalg::{Echelon, SparseVec};
use crate::ring::{Ring, Q};
use crate::series::{words_of_length, Alphabet, TruncSeries};

pub struct QuotientOracle {
    tag: Tag,
    alpha: Arc<Alphabet>,
    cap: usize,
    /// Ideal part of each degree, over word indices in base `n`.
    ideal: Vec<Echelon>,
}

fn word_index(w: &[u8], n: usize) -> usize {
    w.iter().fold(0, |acc, &l| acc * n + l as usize)
}

fn pair_index(name: &str) -> (u8, u8) {
    let b = name.as_bytes();
    (b[1] - b'0', b[2] - b'0')
}

impl QuotientOracle {
    pub fn new(tag: Tag, cap: usize) -> Self {
        let names = SmashElem::all_generator_names(tag);
        let alpha = match tag {
            Tag::P5 => Alphabet::new(&["e12", "e23", "e15", "e25", "e35"]).unwrap(),
            Tag::T4 => Alphabet::new(&names).unwrap(),
        };
        let n = alpha.len();
        let letter = |name: &str| -> TruncSeries {
            match tag {
                // linear relations are imposed by eliminating the non-basis generators
                Tag::P5 => Self::p5_letter(&alpha, cap, name),
                Tag::T4 => TruncSeries::letter(&alpha, cap, alpha.index(name).unwrap()),
            }
        };
        let mut rels: Vec<TruncSeries> = Vec::new();
        for a in &names {
            for b in &names {
                let (i, j) = pair_index(a);
                let (k, l) = pair_index(b);
                let disjoint = i != k && i != l && j != k && j != l;
                if disjoint && a < b {
                    rels.push(letter(a).commutator(&letter(b)));
                }
            }
        }
        if tag == Tag::T4 {
            let t = |i: u8, j: u8| letter(&format!("t{}{}", i.min(j), i.max(j)));
            for i in 1..=4u8 {
                for j in 1..=4u8 {
                    for k in 1..=4u8 {
                        if i != j && j != k && i != k {
                            rels.push(t(i, j).commutator(&(t(i, k) + t(j, k))));
                        }
                    }
                }
            }
        }
        let mut ideal: Vec<Echelon> = (0..=cap).map(|_| Echelon::new()).collect();
        for d in 2..=cap {
            for r in &rels {
                for left in 0..=(d - 2) {
                    for wl in words_of_length(n as u8, left) {
                        for wr in words_of_length(n as u8, d - 2 - left) {
                            let mut v = SparseVec::new();
                            for (w, c) in r.terms() {
                                let mut full = wl.clone();
                                full.extend_from_slice(w);
                                full.extend_from_slice(&wr);
                                let e = v.entry(word_index(&full, n)).or_insert_with(Q::zero);
                                *e += c;
                            }
                            v.retain(|_, c| !c.is_zero());
                            ideal[d].insert(&v);
                        }
                    }
                }
            }
        }
        QuotientOracle { tag, alpha, cap, ideal }
    }

    /// Degree-one generators of `p5` written in the five free letters `e12, e23, e15, e25, e35`.
    fn p5_letter(alpha: &Arc<Alphabet>, cap: usize, name: &str) -> TruncSeries {
        let l = |n: &str| TruncSeries::letter(alpha, cap, alpha.index(n).unwrap());
        match name {
            "e13" => -(l("e12") + l("e23") + l("e15") + l("e25") + l("e35")),
            "e14" => l("e23") + l("e25") + l("e35"),
            "e24" => -(l("e12") + l("e23") + l("e25")),
            "e34" => l("e12") + l("e15") + l("e25"),
            "e45" => -(l("e15") + l("e25") + l("e35")),
            _ => l(name),
        }
    }

    pub fn dim(&self, d: usize) -> usize {
        self.alpha.len().pow(d as u32) - self.ideal[d].rank()
    }

    /// Image of a smash element in the free algebra.
    pub fn lift(&self, s: &SmashElem) -> TruncSeries {
        let g = |n: &str| -> TruncSeries {
            match self.tag {
                Tag::P5 => Self::p5_letter(&self.alpha, self.cap, n),
                Tag::T4 => TruncSeries::letter(&self.alpha, self.cap, self.alpha.index(n).unwrap()),
            }
        };
        let qn = self.tag.quotient_names();
        let iname = self.tag.ideal_names();
        let quot = [g(qn[0]), g(qn[1])];
        let ideal = [g(iname[0]), g(iname[1]), g(iname[2])];
        let central = match self.tag {
            Tag::T4 => Some(SmashElem::all_generator_names(Tag::T4).iter().fold(TruncSeries::zero(&self.alpha, self.cap), |a, n| a + g(n))),
            Tag::P5 => None,
        };
        s.with_cap(self.cap).eval(&quot, &ideal, central.as_ref(), &TruncSeries::one(&self.alpha, self.cap))
    }

    /// Whether a free-algebra element lies in the ideal, degree by degree.
    pub fn is_zero(&self, a: &TruncSeries) -> bool {
        let n = self.alpha.len();
        (0..=self.cap).all(|d| {
            let v: SparseVec = a.homogeneous(d).terms().map(|(w, c)| (word_index(w, n), c.clone())).collect();
            self.ideal[d].contains(&v)
        })
    }

    /// Whether the given degree-`d` elements are independent modulo the ideal.
    pub fn independent(&self, d: usize, elems: &[TruncSeries]) -> bool {
        let n = self.alpha.len();
        let mut e = self.ideal[d].clone();
        elems.iter().all(|a| {
            let v: SparseVec = a.homogeneous(d).terms().map(|(w, c)| (word_index(w, n), c.clone())).collect();
            e.insert(&v)
        })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid_lie::pbw_dim;

    #[test]
    fn p5_dims_and_basis() {
        let o = QuotientOracle::new(Tag::P5, 3);
        for d in 0..=3 {
            assert_eq!(o.dim(d) as u64, pbw_dim(Tag::P5, d), "degree {d}");
            let basis: Vec<TruncSeries> =
                SmashElem::basis(Tag::P5, d).into_iter().map(|m| o.lift(&SmashElem::mono(Tag::P5, 3, m, crate::ring::q(1)))).collect();
            assert!(o.independent(d, &basis));
        }
    }

    #[test]
    fn t4_dims() {
        let o = QuotientOracle::new(Tag::T4, 3);
        for d in 0..=3 {
            assert_eq!(o.dim(d) as u64, pbw_dim(Tag::T4, d), "degree {d}");
        }
    }
}
