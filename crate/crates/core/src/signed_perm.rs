//! Signed permutations: the hyperoctahedral group W(C_n).
//!
//! Text form is a space-separated word with a minus sign for a bar, e.g.
//! `-3 6 4 -7 2 -5 1`. JSON form is the same list as integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("column {column}: {token:?} is not a signed integer")]
    BadToken { column: usize, token: String },
    #[error("column {column}: letter 0 is not allowed")]
    Zero { column: usize },
    #[error("column {column}: magnitude {magnitude} exceeds the word length {n}")]
    OutOfRange {
        column: usize,
        magnitude: usize,
        n: usize,
    },
    #[error("column {column}: magnitude {magnitude} repeats")]
    Repeated { column: usize, magnitude: usize },
}

/// One letter `a` or `a-bar` of a signed word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub magnitude: usize,
    pub barred: bool,
}

impl Letter {
    pub fn plain(magnitude: usize) -> Letter {
        Letter {
            magnitude,
            barred: false,
        }
    }

    pub fn bar(magnitude: usize) -> Letter {
        Letter {
            magnitude,
            barred: true,
        }
    }

    pub fn to_signed(self) -> i64 {
        let m = self.magnitude as i64;
        if self.barred {
            -m
        } else {
            m
        }
    }

    pub fn from_signed(v: i64) -> Letter {
        Letter {
            magnitude: v.unsigned_abs() as usize,
            barred: v < 0,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// `w = w_1 ... w_n`, with magnitudes forming a permutation of `1..=n`.
///
/// Ordered by magnitudes first, then bar patterns; the enumeration order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SignedPermutation {
    letters: Vec<Letter>,
}

impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let mags = |w: &Self| w.letters.iter().map(|l| l.magnitude).collect::<Vec<_>>();
        let bars = |w: &Self| w.letters.iter().map(|l| l.barred).collect::<Vec<_>>();
        (self.len(), mags(self), bars(self)).cmp(&(other.len(), mags(other), bars(other)))
    }
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl SignedPermutation {
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for (i, l) in letters.iter().enumerate() {
            let column = i + 1;
            if l.magnitude == 0 {
                return Err(WordError::Zero { column });
            }
            if l.magnitude > n {
                return Err(WordError::OutOfRange {
                    column,
                    magnitude: l.magnitude,
                    n,
                });
            }
            if std::mem::replace(&mut seen[l.magnitude], true) {
                return Err(WordError::Repeated {
                    column,
                    magnitude: l.magnitude,
                });
            }
        }
        Ok(SignedPermutation { letters })
    }

    pub fn from_signed(values: &[i64]) -> Result<Self, WordError> {
        SignedPermutation::new(values.iter().map(|&v| Letter::from_signed(v)).collect())
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            letters: (1..=n).map(Letter::plain).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> Letter {
        self.letters[i - 1]
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    /// If `w(i) = ±a` then the inverse sends `a` to `±i`.
    pub fn invert(&self) -> SignedPermutation {
        let mut letters = vec![Letter::plain(0); self.len()];
        for (i, l) in self.letters.iter().enumerate() {
            letters[l.magnitude - 1] = Letter {
                magnitude: i + 1,
                barred: l.barred,
            };
        }
        SignedPermutation { letters }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`, bars multiplying.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.len(), other.len());
        let letters = other
            .letters
            .iter()
            .map(|l| {
                let outer = self.apply(l.magnitude);
                Letter {
                    magnitude: outer.magnitude,
                    barred: outer.barred != l.barred,
                }
            })
            .collect();
        SignedPermutation { letters }
    }

    /// The embedding into S_2n induced by the symplectic basis
    /// `v_n, ..., v_1, v_1bar, ..., v_nbar` of a 2n-dimensional space:
    /// position `i <= n` holds `v_{n+1-i}`, position `n + a` holds `v_abar`.
    ///
    /// For `i <= n`, `sigma(i)` is `n + 1 - a` when `w_{n+1-i} = a` and
    /// `n + a` when `w_{n+1-i} = a-bar`; `sigma(2n+1-i) = 2n+1-sigma(i)`.
    pub fn iota_embed(&self) -> Permutation2n {
        let n = self.len();
        let mut images = vec![0; 2 * n];
        for i in 1..=n {
            let l = self.apply(n + 1 - i);
            let s = if l.barred {
                n + l.magnitude
            } else {
                n + 1 - l.magnitude
            };
            images[i - 1] = s;
            images[2 * n - i] = 2 * n + 1 - s;
        }
        Permutation2n { images }
    }

    /// Deletes the last letter `w_n = ±r` and closes the gap at `r`:
    /// magnitudes above `r` drop by one, bars are kept.
    pub fn derive_w_tilde(&self) -> Option<(SignedPermutation, usize)> {
        let (&last, rest) = self.letters.split_last()?;
        let r = last.magnitude;
        let letters = rest
            .iter()
            .map(|l| Letter {
                magnitude: if l.magnitude > r {
                    l.magnitude - 1
                } else {
                    l.magnitude
                },
                barred: l.barred,
            })
            .collect();
        Some((SignedPermutation { letters }, r))
    }
}

impl TryFrom<Vec<i64>> for SignedPermutation {
    type Error = WordError;
    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        SignedPermutation::from_signed(&v)
    }
}

impl From<SignedPermutation> for Vec<i64> {
    fn from(w: SignedPermutation) -> Self {
        w.to_signed()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = WordError;

    /// Errors report the 1-based character column of the offending token.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        let mut columns = Vec::new();
        let mut start = None;
        let chars: Vec<(usize, char)> = s.char_indices().collect();
        let mut tokens = Vec::new();
        for (ci, &(_, ch)) in chars.iter().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(ci),
                (true, Some(st)) => {
                    tokens.push((st, ci));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(st) = start {
            tokens.push((st, chars.len()));
        }
        for (st, en) in tokens {
            let token: String = chars[st..en].iter().map(|&(_, c)| c).collect();
            let column = st + 1;
            let token_norm = token.replace('\u{2212}', "-");
            let v: i64 = token_norm.parse().map_err(|_| WordError::BadToken {
                column,
                token: token.clone(),
            })?;
            if v == 0 {
                return Err(WordError::Zero { column });
            }
            letters.push(Letter::from_signed(v));
            columns.push(column);
        }
        SignedPermutation::new(letters).map_err(|e| match e {
            WordError::OutOfRange {
                column,
                magnitude,
                n,
            } => WordError::OutOfRange {
                column: columns[column - 1],
                magnitude,
                n,
            },
            WordError::Repeated { column, magnitude } => WordError::Repeated {
                column: columns[column - 1],
                magnitude,
            },
            other => other,
        })
    }
}

/// A permutation of `1..=2n`, as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation2n {
    images: Vec<usize>,
}

impl Permutation2n {
    /// `images[i - 1] = sigma(i)`; must be a permutation of `1..=len`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len() + 1];
        for &v in &images {
            if v == 0 || v > images.len() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Permutation2n { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation2n {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation2n { images: inv }
    }

    /// `sigma(i) + sigma(2n+1-i) = 2n+1` for every `i`.
    pub fn is_symplectic(&self) -> bool {
        let len = self.images.len();
        len.is_multiple_of(2)
            && (1..=len).all(|i| self.apply(i) + self.apply(len + 1 - i) == len + 1)
    }
}

/// All `2^n n!` signed permutations of size `n`, in [`SignedPermutation`]
/// order.
pub fn enumerate_signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for perm in permutations(n) {
        for mask in 0u64..(1u64 << n) {
            let letters = perm
                .iter()
                .enumerate()
                .map(|(i, &a)| Letter {
                    magnitude: a,
                    barred: mask >> (n - 1 - i) & 1 == 1,
                })
                .collect();
            out.push(SignedPermutation { letters });
        }
    }
    out
}

/// Permutations of `1..=n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len())
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("-3 6 4 -7 2 -5 1").invert(), w("7 5 -1 3 -6 2 -4"));
        assert_eq!(
            SignedPermutation::identity(4).invert(),
            SignedPermutation::identity(4)
        );
    }

    #[test]
    fn iota_examples() {
        assert_eq!(
            SignedPermutation::identity(3).iota_embed().images(),
            &[1, 2, 3, 4, 5, 6]
        );
        assert_eq!(w("-1").iota_embed().images(), &[2, 1]);
        assert_eq!(w("-1 2").iota_embed().images(), &[1, 3, 2, 4]);
        assert!(w("-3 6 4 -7 2 -5 1").iota_embed().is_symplectic());
    }

    #[test]
    fn w_tilde_examples() {
        let (wt, r) = w("2 7 5 -6 4 -3 1").derive_w_tilde().unwrap();
        assert_eq!((wt, r), (w("1 6 4 -5 3 -2"), 1));
        let (wt, r) = w("-1").derive_w_tilde().unwrap();
        assert!(wt.is_empty());
        assert_eq!(r, 1);
        assert_eq!(w("2 -1").derive_w_tilde().unwrap(), (w("1"), 1));
        assert!(SignedPermutation::identity(0).derive_w_tilde().is_none());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_signed_permutations(0).len(), 1);
        assert_eq!(enumerate_signed_permutations(1), vec![w("1"), w("-1")]);
        assert_eq!(enumerate_signed_permutations(3).len(), 48);
        let all = enumerate_signed_permutations(5);
        assert_eq!(all.len(), 3840);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);
    }

    #[test]
    fn text_format() {
        let word = w("-3 6 4 -7 2 -5 1");
        assert_eq!(word.to_string(), "-3 6 4 -7 2 -5 1");
        assert_eq!(w("  1   -2 "), w("1 -2"));
        assert_eq!(w(""), SignedPermutation::identity(0));
        assert_eq!(w("\u{2212}1"), w("-1"));
    }

    #[test]
    fn parse_errors_carry_columns() {
        assert_eq!(
            "1 x 2".parse::<SignedPermutation>(),
            Err(WordError::BadToken {
                column: 3,
                token: "x".into()
            })
        );
        assert_eq!(
            "1 0".parse::<SignedPermutation>(),
            Err(WordError::Zero { column: 3 })
        );
        assert_eq!(
            "1  3".parse::<SignedPermutation>(),
            Err(WordError::OutOfRange {
                column: 4,
                magnitude: 3,
                n: 2
            })
        );
        assert_eq!(
            "2 -2".parse::<SignedPermutation>(),
            Err(WordError::Repeated {
                column: 3,
                magnitude: 2
            })
        );
    }

    #[test]
    fn json_form() {
        let word = w("-3 1 2");
        assert_eq!(serde_json::to_string(&word).unwrap(), "[-3,1,2]");
        assert_eq!(
            serde_json::from_str::<SignedPermutation>("[-3,1,2]").unwrap(),
            word
        );
        assert!(serde_json::from_str::<SignedPermutation>("[1,1]").is_err());
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        for x in enumerate_signed_permutations(3) {
            assert_eq!(x.compose(&x.invert()), SignedPermutation::identity(3));
        }
    }
}
