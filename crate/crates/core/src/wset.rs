//! The W-sets `𝒲_n`, `𝒲_μ` (orthogonal) and `𝒲′_{2n}`, `𝒲′_μ` (symplectic).
//!
//! A member of `𝒲_μ` is assembled block by block: the `i`-th μ-string uses
//! exactly the letters `n − ν_{i+1} < j <= n − ν_i` (so letter blocks
//! descend from left to right) and standardizes to a member of
//! `𝒲_{μ_i}` (resp. `𝒲′_{μ_i}`).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Orthogonal,
    Symplectic,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Orthogonal => "orthogonal",
            Family::Symplectic => "symplectic",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orthogonal" | "o" => Ok(Family::Orthogonal),
            "symplectic" | "sp" => Ok(Family::Symplectic),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WSet {
    family: Family,
    mu: Composition,
    members: BTreeSet<Permutation>,
}

impl WSet {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    /// Members in lexicographic order of their one-line notation.
    pub fn members(&self) -> &BTreeSet<Permutation> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Builds a W-set for `(family, μ)`.
    pub fn build(family: Family, mu: &Composition) -> Result<Self> {
        match family {
            Family::Orthogonal => Ok(w_set_orthogonal(mu)),
            Family::Symplectic => w_set_symplectic(mu),
        }
    }

    /// Wraps an explicit member list without checking the block conditions.
    /// Used to test member sets that disagree with the construction.
    pub fn from_members_unchecked(
        family: Family,
        mu: &Composition,
        members: impl IntoIterator<Item = Permutation>,
    ) -> Self {
        Self { family, mu: mu.clone(), members: members.into_iter().collect() }
    }

    /// Whether `w` satisfies the letter condition and the per-block
    /// membership condition for this W-set's family and composition.
    pub fn satisfies_block_conditions(family: Family, mu: &Composition, w: &Permutation) -> bool {
        if w.size() != mu.total() {
            return false;
        }
        (1..=mu.len()).all(|b| {
            let letters = block_letters(mu, b);
            let string = mu_string(w, mu, b).expect("block index in range");
            match standardize(&string, &letters) {
                Ok(u) => match family {
                    Family::Orthogonal => is_full_orthogonal_member(&u),
                    Family::Symplectic => is_full_symplectic_member(&u),
                },
                Err(_) => false,
            }
        })
    }
}

/// `𝒲_n`: for `i = 1..⌊n/2⌋`, `w(i) > w(n+1−i)` are adjacent in the set
/// `A_i` of letters not yet placed; the middle letter is forced for odd `n`.
pub fn w_set_full_orthogonal(n: usize) -> BTreeSet<Permutation> {
    fn fill(i: usize, n: usize, available: &[usize], word: &mut Vec<usize>, out: &mut BTreeSet<Permutation>) {
        if i > n / 2 {
            if n % 2 == 1 {
                word[n / 2] = available[0];
            }
            out.insert(Permutation::new(word.clone()).expect("construction yields a bijection"));
            return;
        }
        for k in 0..available.len() - 1 {
            let (low, high) = (available[k], available[k + 1]);
            word[i - 1] = high;
            word[n - i] = low;
            let rest: Vec<usize> = available.iter().copied().filter(|&a| a != low && a != high).collect();
            fill(i + 1, n, &rest, word, out);
        }
    }

    let mut out = BTreeSet::new();
    if n == 0 {
        return out;
    }
    let available: Vec<usize> = (1..=n).collect();
    fill(1, n, &available, &mut vec![0; n], &mut out);
    out
}

fn is_full_orthogonal_member(u: &Permutation) -> bool {
    let n = u.size();
    let mut available: BTreeSet<usize> = (1..=n).collect();
    for i in 1..=n / 2 {
        let (high, low) = (u.at(i), u.at(n + 1 - i));
        if high <= low || !available.contains(&high) || !available.contains(&low) {
            return false;
        }
        if available.range(low + 1..high).next().is_some() {
            return false;
        }
        available.remove(&high);
        available.remove(&low);
    }
    true
}

fn is_full_symplectic_member(u: &Permutation) -> bool {
    let n = u.size();
    if n % 2 == 1 {
        return false;
    }
    let half = n / 2;
    (1..=half).all(|i| u.at(i) % 2 == 1 && u.at(n + 1 - i) == u.at(i) + 1)
}

/// The `i`-th μ-string `w(ν_i + 1) ⋯ w(ν_{i+1})`.
pub fn mu_string(w: &Permutation, mu: &Composition, i: usize) -> Result<Vec<usize>> {
    if w.size() != mu.total() {
        return Err(Error::SizeMismatch { left: w.size(), right: mu.total() });
    }
    if i == 0 || i > mu.len() {
        return Err(Error::IndexOutOfRange { index: i, max: mu.len() });
    }
    Ok(w.word()[mu.nu(i)..mu.nu(i + 1)].to_vec())
}

/// Letters `n − ν_{b+1} + 1 ..= n − ν_b` carried by the `b`-th μ-string.
pub fn block_letters(mu: &Composition, b: usize) -> BTreeSet<usize> {
    let n = mu.total();
    (n - mu.nu(b + 1) + 1..=n - mu.nu(b)).collect()
}

/// The permutation associated to a word over the letter set `letters`:
/// the `k`-th smallest letter is relabeled `k`.
pub fn standardize(word: &[usize], letters: &BTreeSet<usize>) -> Result<Permutation> {
    let mismatch = || Error::LetterMismatch { word: word.to_vec(), letters: letters.iter().copied().collect() };
    if word.len() != letters.len() {
        return Err(mismatch());
    }
    let relabeled = word
        .iter()
        .map(|a| if letters.contains(a) { Ok(letters.range(..a).count() + 1) } else { Err(mismatch()) })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(relabeled).map_err(|_| mismatch())
}

/// Inverse of [`standardize`]: rewrites `u ∈ S_k` over the sorted letters.
fn unstandardize(u: &Permutation, letters: &[usize]) -> Vec<usize> {
    u.word().iter().map(|&k| letters[k - 1]).collect()
}

fn assemble(family: Family, mu: &Composition, per_block: impl Fn(usize) -> BTreeSet<Permutation>) -> WSet {
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    for b in 1..=mu.len() {
        let letters: Vec<usize> = block_letters(mu, b).into_iter().collect();
        let strings: Vec<Vec<usize>> = per_block(mu.part(b)).iter().map(|u| unstandardize(u, &letters)).collect();
        words = words
            .iter()
            .flat_map(|prefix| {
                strings.iter().map(move |s| {
                    let mut word = prefix.clone();
                    word.extend_from_slice(s);
                    word
                })
            })
            .collect();
    }
    let members = words.into_iter().map(|w| Permutation::new(w).expect("blocks use disjoint letter sets")).collect();
    WSet { family, mu: mu.clone(), members }
}

/// `𝒲_μ`.
pub fn w_set_orthogonal(mu: &Composition) -> WSet {
    assemble(Family::Orthogonal, mu, w_set_full_orthogonal)
}

/// `φ(u) = [2u(1)−1, …, 2u(n)−1, 2u(n), …, 2u(1)]`, an injection `S_n → S_{2n}`.
pub fn phi(u: &Permutation) -> Permutation {
    let odd = u.word().iter().map(|&v| 2 * v - 1);
    let even = u.word().iter().rev().map(|&v| 2 * v);
    Permutation::new(odd.chain(even).collect()).expect("φ yields a bijection")
}

/// `𝒲′_{2n} = φ(S_n)`.
pub fn w_set_full_symplectic(two_n: usize) -> Result<BTreeSet<Permutation>> {
    if two_n % 2 == 1 {
        return Err(Error::OddSize(two_n));
    }
    Ok(Permutation::all(two_n / 2).iter().map(phi).collect())
}

/// `𝒲′_μ` for a composition with even parts.
pub fn w_set_symplectic(mu: &Composition) -> Result<WSet> {
    if !mu.all_even() {
        return Err(Error::OddPart(mu.parts().to_vec()));
    }
    Ok(assemble(Family::Symplectic, mu, |m| w_set_full_symplectic(m).expect("even part")))
}

/// Size predicted by the block product: `Π |𝒲_{μ_i}|` or `Π (μ_i/2)!`.
pub fn expected_size(family: Family, mu: &Composition) -> usize {
    mu.parts()
        .iter()
        .map(|&m| match family {
            Family::Orthogonal => w_set_full_orthogonal(m).len(),
            Family::Symplectic => (1..=m / 2).product(),
        })
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Permutation> {
        items.iter().map(|s| p(s)).collect()
    }

    fn mu(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn full_orthogonal_examples() {
        assert_eq!(w_set_full_orthogonal(1), set(&["1"]));
        assert_eq!(w_set_full_orthogonal(2), set(&["21"]));
        assert_eq!(w_set_full_orthogonal(3), set(&["231", "312"]));
        assert_eq!(w_set_full_orthogonal(4), set(&["2431", "3412", "4213"]));
        assert_eq!(
            w_set_full_orthogonal(5),
            set(&["24531", "25341", "34512", "35142", "42513", "45123", "52314", "53124"])
        );
    }

    #[test]
    fn mu_string_examples() {
        assert_eq!(mu_string(&p("3715462"), &mu("2,4,1"), 2).unwrap(), vec![1, 5, 4, 6]);
        assert_eq!(mu_string(&p("465321"), &mu("4,2"), 1).unwrap(), vec![4, 6, 5, 3]);
        assert_eq!(mu_string(&p("6752431"), &mu("3,4"), 2).unwrap(), vec![2, 4, 3, 1]);
        assert!(mu_string(&p("465321"), &mu("4,2"), 3).is_err());
        assert!(mu_string(&p("4321"), &mu("4,2"), 1).is_err());
    }

    #[test]
    fn standardize_examples() {
        let letters = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(standardize(&[1, 5, 4, 6], &letters(&[1, 4, 5, 6])).unwrap(), p("1324"));
        assert_eq!(standardize(&[4, 6, 5, 3], &letters(&[3, 4, 5, 6])).unwrap(), p("2431"));
        assert_eq!(standardize(&[5, 6], &letters(&[5, 6])).unwrap(), p("12"));
        assert!(standardize(&[5, 7], &letters(&[5, 6])).is_err());
        assert!(standardize(&[5, 5], &letters(&[5, 6])).is_err());
        assert!(standardize(&[5], &letters(&[5, 6])).is_err());
    }

    #[test]
    fn orthogonal_examples() {
        assert_eq!(*w_set_orthogonal(&mu("4,2")).members(), set(&["465321", "563421", "643521"]));
        assert_eq!(
            *w_set_orthogonal(&mu("3,4")).members(),
            set(&["6752431", "6753412", "6754213", "7562431", "7563412", "7564213"])
        );
        assert_eq!(*w_set_orthogonal(&mu("1,1")).members(), set(&["21"]));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&p("1")), p("12"));
        assert_eq!(phi(&p("12")), p("1342"));
        assert_eq!(phi(&p("21")), p("3124"));
    }

    #[test]
    fn full_symplectic_examples() {
        assert_eq!(w_set_full_symplectic(2).unwrap(), set(&["12"]));
        assert_eq!(w_set_full_symplectic(4).unwrap(), set(&["1342", "3124"]));
        assert_eq!(
            w_set_full_symplectic(6).unwrap(),
            set(&["135642", "153462", "315624", "351264", "513426", "531246"])
        );
        assert_eq!(w_set_full_symplectic(5), Err(Error::OddSize(5)));
    }

    #[test]
    fn symplectic_examples() {
        assert_eq!(*w_set_symplectic(&mu("2")).unwrap().members(), set(&["12"]));
        assert_eq!(*w_set_symplectic(&mu("4")).unwrap().members(), set(&["1342", "3124"]));
        assert_eq!(*w_set_symplectic(&mu("2,4")).unwrap().members(), set(&["561342", "563124"]));
        assert_eq!(w_set_symplectic(&mu("2,3")), Err(Error::OddPart(vec![2, 3])));
    }

    #[test]
    fn full_orthogonal_pairs_descend() {
        for n in 1..=9 {
            for w in w_set_full_orthogonal(n) {
                for i in 1..=n / 2 {
                    assert!(w.at(i) > w.at(n + 1 - i));
                }
            }
        }
    }

    #[test]
    fn phi_properties() {
        for n in 1..=5 {
            let images = w_set_full_symplectic(2 * n).unwrap();
            assert_eq!(images.len(), (1..=n).product::<usize>());
            let lengths: BTreeSet<usize> = images.iter().map(Permutation::length).collect();
            assert_eq!(lengths.len(), 1);
            for w in &images {
                assert!((1..=n).all(|i| w.at(i) % 2 == 1));
            }
        }
    }

    #[test]
    fn block_products_and_consistency() {
        for n in 1..=6 {
            for m in Composition::enumerate(n, false).unwrap() {
                let ws = w_set_orthogonal(&m);
                assert_eq!(ws.len(), expected_size(Family::Orthogonal, &m));
                for w in ws.members() {
                    assert!(WSet::satisfies_block_conditions(Family::Orthogonal, &m, w));
                }
            }
        }
        for n in (2..=8).step_by(2) {
            for m in Composition::enumerate(n, true).unwrap() {
                let ws = w_set_symplectic(&m).unwrap();
                assert_eq!(ws.len(), expected_size(Family::Symplectic, &m));
                for w in ws.members() {
                    assert!(WSet::satisfies_block_conditions(Family::Symplectic, &m, w));
                }
            }
        }
    }

    #[test]
    fn construction_matches_filtering_small_groups() {
        for n in 1..=6 {
            let all = Permutation::all(n);
            for m in Composition::enumerate(n, false).unwrap() {
                let filtered: BTreeSet<Permutation> = all
                    .iter()
                    .filter(|w| WSet::satisfies_block_conditions(Family::Orthogonal, &m, w))
                    .cloned()
                    .collect();
                assert_eq!(&filtered, w_set_orthogonal(&m).members(), "{m}");
                if m.all_even() {
                    let filtered: BTreeSet<Permutation> = all
                        .iter()
                        .filter(|w| WSet::satisfies_block_conditions(Family::Symplectic, &m, w))
                        .cloned()
                        .collect();
                    assert_eq!(&filtered, w_set_symplectic(&m).unwrap().members(), "{m}");
                }
            }
        }
    }

    #[test]
    fn ascending_symplectic_set_violates_letter_condition() {
        let m = mu("2,4");
        for w in ["123564", "125346"] {
            assert!(!WSet::satisfies_block_conditions(Family::Symplectic, &m, &p(w)));
        }
    }

    #[test]
    fn json_layout() {
        let ws = w_set_orthogonal(&mu("4,2"));
        assert_eq!(
            serde_json::to_string(&ws).unwrap(),
            r#"{"family":"orthogonal","mu":[4,2],"members":[[4,6,5,3,2,1],[5,6,3,4,2,1],[6,4,3,5,2,1]]}"#
        );
    }
}
