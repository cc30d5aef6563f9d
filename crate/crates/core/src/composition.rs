//! Compositions `μ = (μ₁, …, μ_s)` and the block statistics used by the
//! class formulas.
//!
//! Indices follow the 1-based convention throughout: blocks are numbered
//! `1..=s`, positions `1..=n`, and `ν₁ = 0`, `ν_{i+1} = ν_i + μ_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
    // nu[0] = ν₁ = 0, ..., nu[s] = ν_{s+1} = total
    nu: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        let mut nu = Vec::with_capacity(parts.len() + 1);
        nu.push(0);
        for &m in &parts {
            nu.push(nu.last().unwrap() + m);
        }
        Ok(Self { parts, nu })
    }

    /// The one-block composition `(n)`.
    pub fn single(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of blocks `s`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.nu[self.parts.len()]
    }

    /// `μ_b` for a 1-based block index.
    pub fn part(&self, b: usize) -> usize {
        self.parts[b - 1]
    }

    /// `ν_b` for `1 <= b <= s + 1`.
    pub fn nu(&self, b: usize) -> usize {
        self.nu[b - 1]
    }

    pub fn all_even(&self) -> bool {
        self.parts.iter().all(|m| m % 2 == 0)
    }

    /// Positions `ν_b + 1 ..= ν_{b+1}` of block `b`.
    pub fn block_range(&self, b: usize) -> std::ops::RangeInclusive<usize> {
        self.nu(b) + 1..=self.nu(b + 1)
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.total() {
            return Err(Error::IndexOutOfRange { index: i, max: self.total() });
        }
        Ok(())
    }

    /// `B(μ,i)`: the block containing position `i`.
    pub fn block_of(&self, i: usize) -> Result<usize> {
        self.check_position(i)?;
        Ok((1..=self.len()).find(|&b| self.nu(b + 1) >= i).expect("position within total"))
    }

    /// `R(μ,i)`: combined size of the blocks strictly right of `B(μ,i)`.
    pub fn right_mass(&self, i: usize) -> Result<usize> {
        let b = self.block_of(i)?;
        Ok(self.total() - self.nu(b + 1))
    }

    /// `δ(μ,i)`: 1 when `i` sits in the first half of its block. The middle
    /// position of an odd block is not in the first half.
    pub fn first_half_flag(&self, i: usize) -> Result<usize> {
        let b = self.block_of(i)?;
        Ok(usize::from(i - self.nu(b) <= self.part(b) / 2))
    }

    /// `d(μ) = Σ ⌊μ_i/2⌋`.
    pub fn half_weight(&self) -> usize {
        self.parts.iter().map(|m| m / 2).sum()
    }

    /// All compositions of `n` in lexicographic order of their parts
    /// (`2^{n-1}` of them), or only those with even parts (`n` must be even).
    pub fn enumerate(n: usize, even_parts_only: bool) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(Error::InvalidComposition("compositions of 0 are not enumerated".into()));
        }
        if even_parts_only && n % 2 == 1 {
            return Err(Error::OddSize(n));
        }
        let step = if even_parts_only { 2 } else { 1 };
        let mut out = Vec::new();
        let mut current = Vec::new();
        enumerate_into(n, step, &mut current, &mut out);
        Ok(out.into_iter().map(|parts| Self::new(parts).expect("generated parts are positive")).collect())
    }
}

fn enumerate_into(rest: usize, step: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    let mut first = step;
    while first <= rest {
        current.push(first);
        enumerate_into(rest - first, step, current, out);
        current.pop();
        first += step;
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `"3,4"`; surrounding parentheses are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("composition part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Composition::new(parts).map_err(serde::de::Error::custom)
    }
}
