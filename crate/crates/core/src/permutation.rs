//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored as its one-line word.
///
/// Permutations of different sizes are never equal; there is no implicit
/// embedding `S_n ⊂ S_m`. The derived ordering is lexicographic on the word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n).collect() }
    }

    /// The longest element `w₀ = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        Self { word: (1..=n).rev().collect() }
    }

    /// Rebuilds the permutation whose Lehmer code is `code`.
    ///
    /// Fails unless `code[i] <= n - 1 - i` for every (0-based) position.
    pub fn from_code(code: &[usize]) -> Result<Self> {
        let n = code.len();
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c >= n - i {
                return Err(Error::InvalidCode(code.iter().map(|&c| c as u32).collect()));
            }
            word.push(avail.remove(c));
        }
        Ok(Self { word })
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Number of inversion pairs.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Lehmer code `c_i = #{ j > i : w(j) < w(i) }`.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.word;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count()).collect()
    }

    /// `w s_i`: swaps the entries at positions `i` and `i + 1` (1-based).
    pub fn right_multiply_simple(&self, i: usize) -> Result<Self> {
        let n = self.size();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Ok(Self { word })
    }

    /// True when `w s_i > w`, i.e. `w(i) < w(i+1)`.
    pub fn is_ascent(&self, i: usize) -> bool {
        i >= 1 && i < self.size() && self.word[i - 1] < self.word[i]
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.size()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Self { word }
    }

    /// `(u ∘ v)(i) = u(v(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        Ok(Self { word: other.word.iter().map(|&v| self.word[v - 1]).collect() })
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self { word: word.clone() });
            if !next_lexicographic(&mut word) {
                break;
            }
        }
        out
    }
}

fn next_lexicographic(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"2431"` (sizes up to 9) or `"2,4,3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        if word.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        Self::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let word = Vec::<usize>::deserialize(deserializer)?;
        Permutation::new(word).map_err(serde::de::Error::custom)
    }
}
