//! Lyndon words on two letters and their standard bracketing.

use crate::ring::Ring;

/// Lyndon words of length `n` over `{0, 1}`, in lexicographic order (Duval's algorithm).
pub fn lyndon_words(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        // extend periodically to length n, then increment
        let m = w.len();
        while w.len() < n {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        match w.last_mut() {
            Some(l) => *l = 1,
            None => break,
        }
    }
    out
}

fn is_lyndon(w: &[u8]) -> bool {
    (1..w.len()).all(|i| w[i..] > *w)
}

/// Standard factorization `w = u v` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (&[u8], &[u8]) {
    (1..w.len()).find(|&i| is_lyndon(&w[i..])).map(|i| (&w[..i], &w[i..])).expect("word of length >= 2")
}

/// The bracket polynomial of a Lyndon word evaluated at `(a, b)` in any ring.
pub fn lyndon_eval<R: Ring>(w: &[u8], a: &R, b: &R) -> R {
    if w.len() == 1 {
        return if w[0] == 0 { a.clone() } else { b.clone() };
    }
    let (u, v) = standard_factorization(w);
    lyndon_eval(u, a, b).commutator(&lyndon_eval(v, a, b))
}

pub fn lyndon_text(w: &[u8]) -> String {
    w.iter().map(|&l| if l == 0 { '0' } else { '1' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TruncSeries;

    #[test]
    fn counts_follow_necklace_formula() {
        let counts: Vec<usize> = (1..=8).map(|n| lyndon_words(n).len()).collect();
        assert_eq!(counts, vec![2, 1, 2, 3, 6, 9, 18, 30]);
        assert_eq!(lyndon_words(3), vec![vec![0, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn brackets() {
        let (a, b) = (TruncSeries::e0(3), TruncSeries::e1(3));
        assert_eq!(lyndon_eval(&[0, 1], &a, &b), a.commutator(&b));
        assert_eq!(lyndon_eval(&[0, 0, 1], &a, &b), a.commutator(&a.commutator(&b)));
        assert_eq!(standard_factorization(&[0, 0, 1, 0, 1]), (&[0, 0, 1][..], &[0, 1][..]));
    }
}
