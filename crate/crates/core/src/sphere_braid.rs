//! The pure sphere braid group on five strands as the semidirect product `F2 ⋉ F3`.
//!
//! An element `(f, w)` stands for `ℓ(f)·w` with `f` in `F2 = <X0, X1>` (`X0 = x23`,
//! `X1 = x12`) and `w` in `F3 = <x15, x25, x35>`.

use std::fmt;

use rand::Rng;

use crate::error::{AlgebraError, Result};
use crate::freegrp::{letter_index, Gens, Group, GroupAlg, GroupAlgF, GroupWord, Letter, Pair, TensorF2};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P5Elem {
    pub f: GroupWord,
    pub w: GroupWord,
}

pub type P5Alg = GroupAlg<P5Elem>;

impl fmt::Debug for P5Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for P5Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.f, self.w)
    }
}

fn f3(s: &str) -> GroupWord {
    GroupWord::parse(Gens::F3, s).unwrap()
}

/// `c` with `θ_s(x_i5) = c·x_i5·c^{-1}` for a syllable `s` of `F2`.
pub fn theta_conjugator(s: Letter, i: usize) -> GroupWord {
    let t = match (s, i) {
        (2, 0) => "x15.x25",
        (2, 1) => "x15",
        (-2, 0) => "x25^-1",
        (-2, 1) => "x25^-1.x15^-1",
        (1, 1) => "x25.x35",
        (1, 2) => "x25",
        (-1, 1) => "x35^-1",
        (-1, 2) => "x35^-1.x25^-1",
        _ => "1",
    };
    f3(t)
}

fn theta_letter(s: Letter, w: &GroupWord) -> GroupWord {
    let images: Vec<GroupWord> = (0..3)
        .map(|i| {
            let c = theta_conjugator(s, i);
            c.mul(&GroupWord::gen(Gens::F3, i)).mul(&c.inv())
        })
        .collect();
    substitute(w, &images)
}

/// Group morphism of a free group given by generator images.
pub fn substitute(w: &GroupWord, images: &[GroupWord]) -> GroupWord {
    let mut acc = images[0].identity_like();
    for &l in w.letters() {
        let im = &images[letter_index(l)];
        acc = acc.mul(&if l > 0 { im.clone() } else { im.inv() });
    }
    acc
}

/// `θ_g(w) = ℓ(g)^{-1} w ℓ(g)`.
pub fn theta_act(g: &GroupWord, w: &GroupWord) -> GroupWord {
    assert_eq!(g.gens(), Gens::F2);
    assert_eq!(w.gens(), Gens::F3);
    let mut out = w.clone();
    for &s in g.letters() {
        out = theta_letter(s, &out);
    }
    out
}

/// `W` with `ℓ(g)^{-1} x_i5 ℓ(g) = W x_i5 W^{-1}`.
pub fn theta_conj_word(g: &GroupWord, i: usize) -> GroupWord {
    let mut acc = GroupWord::identity(Gens::F3);
    for &s in g.letters() {
        acc = theta_letter(s, &acc).mul(&theta_conjugator(s, i));
    }
    acc
}

impl P5Elem {
    pub fn new(f: GroupWord, w: GroupWord) -> Result<Self> {
        if f.gens() != Gens::F2 || w.gens() != Gens::F3 {
            return Err(AlgebraError::GeneratorMismatch);
        }
        Ok(P5Elem { f, w })
    }

    pub fn identity() -> Self {
        P5Elem { f: GroupWord::identity(Gens::F2), w: GroupWord::identity(Gens::F3) }
    }

    pub fn from_f2(f: &GroupWord) -> Self {
        P5Elem { f: f.clone(), w: GroupWord::identity(Gens::F3) }
    }

    pub fn from_f3(w: &GroupWord) -> Self {
        P5Elem { f: GroupWord::identity(Gens::F2), w: w.clone() }
    }

    /// The generator `x_ij`, `1 <= i < j <= 5`.
    pub fn xij(i: usize, j: usize) -> Result<Self> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let x = |s: &str| -> P5Elem {
            if s.starts_with('X') {
                P5Elem::from_f2(&GroupWord::parse(Gens::F2, s).unwrap())
            } else {
                P5Elem::from_f3(&f3(s))
            }
        };
        let m = |a: &[P5Elem]| a.iter().fold(P5Elem::identity(), |acc, g| acc.mul(g));
        let x12 = x("X1");
        let x23 = x("X0");
        let x15 = x("x15");
        let x25 = x("x25");
        let x35 = x("x35");
        let x34 = m(&[x25.clone(), x12.clone(), x15.clone()]);
        let x45 = m(&[x12.clone(), x35.inv(), x34.inv()]);
        Ok(match (i, j) {
            (1, 2) => x12,
            (2, 3) => x23,
            (1, 5) => x15,
            (2, 5) => x25,
            (3, 5) => x35,
            (3, 4) => x34,
            (4, 5) => x45,
            (1, 3) => m(&[x12.inv(), x45, x23.inv()]),
            (2, 4) => m(&[x23.inv(), x15, x34.inv()]),
            (1, 4) => m(&[x45.inv(), x23, x15.inv()]),
            _ => return Err(AlgebraError::Precondition(format!("no generator x{i}{j}"))),
        })
    }

    pub fn random<R: Rng>(max_len: usize, rng: &mut R) -> Self {
        P5Elem { f: GroupWord::random(Gens::F2, max_len, rng), w: GroupWord::random(Gens::F3, max_len, rng) }
    }

    /// Parses `[F2 word | F3 word]`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(|| AlgebraError::Parse(s.into()))?;
        let (a, b) = body.split_once('|').ok_or_else(|| AlgebraError::Parse(s.into()))?;
        Ok(P5Elem { f: GroupWord::parse(Gens::F2, a)?, w: GroupWord::parse(Gens::F3, b)? })
    }
}

impl Group for P5Elem {
    fn identity_like(&self) -> Self {
        Self::identity()
    }
    fn mul(&self, o: &Self) -> Self {
        P5Elem { f: self.f.mul(&o.f), w: theta_act(&o.f, &self.w).mul(&o.w) }
    }
    fn inv(&self) -> Self {
        let fi = self.f.inv();
        P5Elem { w: theta_act(&fi, &self.w.inv()), f: fi }
    }
    fn is_identity(&self) -> bool {
        self.f.is_identity() && self.w.is_identity()
    }
}

/// Group commutator `a b a^{-1} b^{-1}`.
pub fn commutator<G: Group>(a: &G, b: &G) -> G {
    a.mul(b).mul(&a.inv()).mul(&b.inv())
}

/// The generators `g_k = x_{k,k+1}` with indices mod 5: `x15, x12, x23, x34, x45`.
pub fn cyclic_generators() -> [P5Elem; 5] {
    let x = |i, j| P5Elem::xij(i, j).unwrap();
    [x(1, 5), x(1, 2), x(2, 3), x(3, 4), x(4, 5)]
}

/// Relators of the presentation of P5*, each of which must be trivial.
pub fn presentation_relators() -> Vec<(String, P5Elem)> {
    let g = cyclic_generators();
    let mut out = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            if (b + 5 - a) % 5 != 1 && (a + 5 - b) % 5 != 1 {
                out.push((format!("(g{a},g{b})"), commutator(&g[a], &g[b])));
            }
        }
    }
    let cyc = (0..5).fold(P5Elem::identity(), |acc, k| acc.mul(&commutator(&g[k], &g[(k + 1) % 5])));
    out.push(("(g0,g1)(g1,g2)(g2,g3)(g3,g4)(g4,g0)".into(), cyc));
    let x = |i, j| P5Elem::xij(i, j).unwrap();
    let rel = x(1, 2).mul(&x(1, 3)).mul(&x(2, 3)).mul(&x(4, 5).inv());
    out.push(("x12.x13.x23.x45^-1".into(), rel));
    out
}

/// Images of `X0, X1, x15, x25, x35` under `pr_i`, `i ∈ {1, 2, 5}`.
fn pr_images(i: usize) -> Result<[GroupWord; 5]> {
    let w = |s: &str| GroupWord::parse(Gens::F2, s).unwrap();
    Ok(match i {
        1 => [w("X0"), w("1"), w("1"), w("X1"), w("X1^-1.X0^-1")],
        2 => [w("1"), w("1"), w("X1"), w("1"), w("X1^-1.X0.X1")],
        5 => [w("X0"), w("X1"), w("1"), w("1"), w("1")],
        _ => return Err(AlgebraError::Precondition(format!("no projection pr{i}"))),
    })
}

/// The group morphism `pr_i : P5* -> F2`.
pub fn pr_group(i: usize, g: &P5Elem) -> Result<GroupWord> {
    let im = pr_images(i)?;
    Ok(substitute(&g.f, &im[0..2]).mul(&substitute(&g.w, &im[2..5])))
}

pub fn pr_underline(i: usize, a: &P5Alg) -> Result<GroupAlgF> {
    let im = pr_images(i)?;
    let id = GroupWord::identity(Gens::F2);
    Ok(a.map_basis(&id, |g| substitute(&g.f, &im[0..2]).mul(&substitute(&g.w, &im[2..5]))))
}

/// `pr12 = (pr1, pr2)` into `kF2 (x) kF2`.
pub fn pr12_underline(a: &P5Alg) -> TensorF2 {
    let (i1, i2) = (pr_images(1).unwrap(), pr_images(2).unwrap());
    let pr = |im: &[GroupWord; 5], g: &P5Elem| substitute(&g.f, &im[0..2]).mul(&substitute(&g.w, &im[2..5]));
    let id = Pair(GroupWord::identity(Gens::F2), GroupWord::identity(Gens::F2));
    a.map_basis(&id, |g| Pair(pr(&i1, g), pr(&i2, g)))
}

/// The section `ℓ : kF2 -> kP5*`, `X0 -> x23`, `X1 -> x12`.
pub fn ell_underline(a: &GroupAlgF) -> P5Alg {
    a.map_basis(&P5Elem::identity(), P5Elem::from_f2)
}

pub fn p5_alg(g: &P5Elem) -> P5Alg {
    P5Alg::from_group(g)
}

/// Column order of the projection table.
pub const TABLE_COLUMNS: [(usize, usize); 10] =
    [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)];

/// Expected values of `pr_1, pr_2, pr_5` on the ten generators.
pub fn expected_pr_table() -> [(usize, [&'static str; 10]); 3] {
    [
        (1, ["1", "1", "1", "1", "X0", "X0^-1.X1^-1", "X1", "X1", "X1^-1.X0^-1", "X0"]),
        (2, ["1", "X1^-1.X0^-1", "X0", "X1", "1", "1", "1", "X1", "X1^-1.X0.X1", "X1^-1.X0^-1"]),
        (5, ["X1", "X1^-1.X0^-1", "X0", "1", "X0", "X0^-1.X1^-1", "1", "X1", "1", "1"]),
    ]
}

/// Computed projection table, rows `pr_1, pr_2, pr_5`.
pub fn pr_table() -> Vec<(usize, Vec<GroupWord>)> {
    [1, 2, 5]
        .iter()
        .map(|&i| (i, TABLE_COLUMNS.iter().map(|&(a, b)| pr_group(i, &P5Elem::xij(a, b).unwrap()).unwrap()).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syllable_gen(s: Letter) -> GroupWord {
        GroupWord::reduce(Gens::F2, &[s]).unwrap()
    }

    const F2_SYLLABLES: [Letter; 4] = [1, -1, 2, -2];

    fn x(i: usize, j: usize) -> P5Elem {
        P5Elem::xij(i, j).unwrap()
    }

    #[test]
    fn theta_generator_values() {
        let x1 = GroupWord::gen(Gens::F2, 1);
        let x0 = GroupWord::gen(Gens::F2, 0);
        assert_eq!(theta_act(&x1, &f3("x35")), f3("x35"));
        assert_eq!(theta_act(&x0, &f3("x15")), f3("x15"));
        assert_eq!(theta_act(&x1, &f3("x25")), f3("x15.x25.x15^-1"));
    }

    #[test]
    fn theta_inverse_syllables_undo() {
        for s in F2_SYLLABLES {
            let g = syllable_gen(s);
            for i in 0..3 {
                let xi = GroupWord::gen(Gens::F3, i);
                assert_eq!(theta_act(&g.inv(), &theta_act(&g, &xi)), xi);
            }
        }
    }

    #[test]
    fn normal_form_products() {
        let f = GroupWord::parse(Gens::F2, "X0.X1").unwrap();
        let a = P5Elem::from_f2(&f).mul(&P5Elem::from_f3(&f3("x25")));
        assert_eq!(a, P5Elem::new(f.clone(), f3("x25")).unwrap());
        assert!(a.mul(&a.inv()).is_identity());
        assert!(a.inv().mul(&a).is_identity());
        assert_eq!(x(1, 5).conj_by(&x(2, 3)), x(1, 5));
    }

    #[test]
    fn generators() {
        assert_eq!(x(1, 2).to_string(), "[X1 | 1]");
        assert_eq!(x(1, 5).to_string(), "[1 | x15]");
        let spec13 = [x(3, 5).inv(), x(1, 5).inv(), x(1, 2).inv(), x(2, 5).inv(), x(2, 3).inv()]
            .iter()
            .fold(P5Elem::identity(), |acc, g| acc.mul(g));
        assert_eq!(x(1, 3), spec13);
        assert!(P5Elem::xij(1, 1).is_err());
        assert_eq!(P5Elem::parse(&x(3, 4).to_string()).unwrap(), x(3, 4));
    }

    #[test]
    fn presentation_holds() {
        for (name, r) in presentation_relators() {
            assert!(r.is_identity(), "{name} = {r}");
        }
    }

    #[test]
    fn projection_table() {
        for ((i, got), (j, want)) in pr_table().into_iter().zip(expected_pr_table()) {
            assert_eq!(i, j);
            for (k, (g, w)) in got.iter().zip(want).enumerate() {
                assert_eq!(g, &GroupWord::parse(Gens::F2, w).unwrap(), "pr{i} column {k}");
            }
        }
    }
}
