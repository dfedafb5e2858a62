//! Text and JSON forms of series.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Alphabet, TensorSeries, TruncSeries, Word};
use crate::error::{AlgebraError, Result};
use crate::ring::{fmt_q, parse_q, Truncated, Q};

pub(crate) fn word_text(alpha: &Alphabet, w: &[u8]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|&l| alpha.name(l)).collect::<Vec<_>>().join(".")
    }
}

/// Writes `c*m + ...` given monomial strings in display order; `"1"` marks the unit monomial.
pub(crate) fn write_linear<'a, I>(f: &mut fmt::Formatter<'_>, items: I) -> fmt::Result
where
    I: IntoIterator<Item = (String, &'a Q)>,
{
    let mut first = true;
    for (m, c) in items {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        if m == "1" {
            write!(f, "{}", fmt_q(&a))?;
        } else if a.is_one() {
            write!(f, "{m}")?;
        } else {
            write!(f, "{}*{m}", fmt_q(&a))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Splits `a - b + c` into signed terms, ignoring signs that follow `^`, `*` or `(`.
pub(crate) fn split_terms(s: &str) -> Vec<(bool, String)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        let boundary = (ch == '+' || ch == '-') && !matches!(prev, None | Some('^') | Some('*') | Some('/') | Some('['));
        if boundary {
            out.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if cur.is_empty() && (ch == '+' || ch == '-') && prev.is_none() {
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    out.push((neg, cur));
    out
}

/// Splits a term into coefficient and monomial text; a bare monomial has coefficient 1.
pub(crate) fn split_coeff(term: &str) -> Result<(Q, String)> {
    if let Some((c, m)) = term.split_once('*') {
        Ok((parse_q(c)?, m.to_string()))
    } else if let Ok(c) = parse_q(term) {
        Ok((c, "1".into()))
    } else {
        Ok((Q::one(), term.to_string()))
    }
}

fn parse_word(alpha: &Alphabet, m: &str) -> Result<Word> {
    if m == "1" || m.is_empty() {
        return Ok(Word::new());
    }
    m.split('.').map(|n| alpha.index(n)).collect()
}

fn graded_order<'a, K: Ord>(it: impl Iterator<Item = (&'a K, &'a Q)>, deg: impl Fn(&K) -> usize) -> Vec<(&'a K, &'a Q)>
where
    K: 'a,
{
    let mut v: Vec<_> = it.collect();
    v.sort_by(|a, b| deg(a.0).cmp(&deg(b.0)).then(a.0.cmp(b.0)));
    v
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = graded_order(self.terms(), |w: &Word| w.len());
        write_linear(f, items.into_iter().map(|(w, c)| (word_text(self.alphabet(), w), c)))
    }
}

impl fmt::Display for TensorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.alphabet().clone();
        let items = graded_order(self.terms(), |(u, w): &(Word, Word)| u.len() + w.len());
        write_linear(
            f,
            items.into_iter().map(|((u, w), c)| {
                let m = if u.is_empty() && w.is_empty() {
                    "1".to_string()
                } else {
                    format!("{}⊗{}", word_text(&a, u), word_text(&a, w))
                };
                (m, c)
            }),
        )
    }
}

impl TruncSeries {
    /// Parses the text form, e.g. `1 + 1/24*e0.e1 - e1`.
    pub fn parse(alpha: &Arc<Alphabet>, cap: usize, s: &str) -> Result<Self> {
        let mut out = TruncSeries::zero(alpha, cap);
        if s.trim() == "0" {
            return Ok(out);
        }
        for (neg, t) in split_terms(s) {
            if t.is_empty() {
                return Err(AlgebraError::Parse(format!("empty term in `{s}`")));
            }
            let (c, m) = split_coeff(&t)?;
            let w = parse_word(alpha, &m)?;
            if w.len() > cap {
                return Err(AlgebraError::WordTooLong { len: w.len(), cap });
            }
            out.add_term(w, if neg { -c } else { c });
        }
        Ok(out)
    }

    pub fn to_json(&self) -> SeriesJson {
        let items = graded_order(self.terms(), |w: &Word| w.len());
        SeriesJson {
            alphabet: self.alphabet().names().to_vec(),
            degree: self.cap(),
            terms: items
                .into_iter()
                .map(|(w, c)| TermJson { word: w.iter().map(|&l| self.alphabet().name(l).to_string()).collect(), coeff: fmt_q(c) })
                .collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<Self> {
        let alpha = if j.alphabet == Alphabet::e().names() { Alphabet::e() } else { Alphabet::new(&j.alphabet)? };
        let mut out = TruncSeries::zero(&alpha, j.degree);
        for t in &j.terms {
            let w: Result<Word> = t.word.iter().map(|n| alpha.index(n)).collect();
            let w = w?;
            if w.len() > j.degree {
                return Err(AlgebraError::WordTooLong { len: w.len(), cap: j.degree });
            }
            out.add_term(w, parse_q(&t.coeff)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<String>,
    pub coeff: String,
}

/// `{"alphabet":[...],"degree":N,"terms":[{"word":[...],"coeff":"p/q"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub alphabet: Vec<String>,
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{qf, Ring};

    #[test]
    fn text_round_trip() {
        let e = Alphabet::e();
        let s = TruncSeries::parse(&e, 4, "1 + 1/24*e0.e1 - 1/24*e1.e0 - e1").unwrap();
        assert_eq!(s.get(&[0, 1]), qf(1, 24));
        assert_eq!(s.to_string(), "1 - e1 + 1/24*e0.e1 - 1/24*e1.e0");
        assert_eq!(TruncSeries::parse(&e, 4, &s.to_string()).unwrap(), s);
        assert_eq!(TruncSeries::e_zero(3).to_string(), "0");
        assert_eq!(TruncSeries::parse(&e, 3, "-2").unwrap(), TruncSeries::e_one(3).scale(&qf(-2, 1)));
        assert!(TruncSeries::parse(&e, 1, "e0.e0").is_err());
        assert!(TruncSeries::parse(&e, 3, "e7").is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = (TruncSeries::e0(5) + TruncSeries::e1(5).scale(&qf(-3, 7))).exp().unwrap();
        let j = serde_json::to_string(&s.to_json()).unwrap();
        let back: SeriesJson = serde_json::from_str(&j).unwrap();
        assert_eq!(TruncSeries::from_json(&back).unwrap(), s);
    }

    #[test]
    fn tensor_text() {
        let t = TensorSeries::e(3, 0) - TensorSeries::f(3, 1) + TensorSeries::one(&Alphabet::e(), 3);
        assert_eq!(t.to_string(), "1 - 1⊗e1 + e0⊗1");
    }
}
