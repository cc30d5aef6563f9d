//! Schubert polynomials as generating functions of reduced pipe dreams.
//!
//! A pipe dream for `w ∈ S_n` is a set of cross tiles in the staircase
//! `{(i, j) : i + j <= n}`. Reading crosses row by row from the top, right
//! to left inside each row, and recording `s_{i+j-1}` for the cross in
//! `(i, j)` must give a reduced word for `w`. Then
//! `𝔖_w = Σ_P ∏_{(i,j) ∈ P} x_i`.
//!
//! This construction never touches divided differences, so it serves as an
//! independent check on the recursion.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::permutation::Permutation;
use crate::polynomial::{Monomial, Polynomial, VariableSpace};

/// Cross positions `(row, column)`, 1-based, in reading order.
pub type PipeDream = Vec<(usize, usize)>;

struct Search<'a> {
    target: &'a [usize],
    target_length: usize,
    cells: Vec<(usize, usize)>,
    found: Vec<PipeDream>,
}

fn inversions(word: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

/// `ℓ(u⁻¹ w)`: the number of pairs whose relative order differs in `u` and `w`.
fn distance(u: &[usize], w: &[usize]) -> usize {
    let n = u.len();
    let mut pos_u = vec![0; n + 1];
    let mut pos_w = vec![0; n + 1];
    for i in 0..n {
        pos_u[u[i]] = i;
        pos_w[w[i]] = i;
    }
    let mut count = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            if (pos_u[a] < pos_u[b]) != (pos_w[a] < pos_w[b]) {
                count += 1;
            }
        }
    }
    count
}

impl Search<'_> {
    fn run(&mut self, next_cell: usize, current: &mut Vec<usize>, length: usize, crosses: &mut PipeDream) {
        if length == self.target_length {
            if current == self.target {
                self.found.push(crosses.clone());
            }
            return;
        }
        if self.cells.len() - next_cell < self.target_length - length {
            return;
        }
        let (row, col) = self.cells[next_cell];
        let k = row + col - 1;
        // cross: right-multiply by s_k, keeping the word a reduced prefix of w
        if current[k - 1] < current[k] {
            current.swap(k - 1, k);
            if distance(current, self.target) == self.target_length - length - 1 {
                crosses.push((row, col));
                self.run(next_cell + 1, current, length + 1, crosses);
                crosses.pop();
            }
            current.swap(k - 1, k);
        }
        self.run(next_cell + 1, current, length, crosses);
    }
}

/// All reduced pipe dreams of `w`.
pub fn reduced_pipe_dreams(w: &Permutation) -> Vec<PipeDream> {
    let n = w.size();
    let mut cells = Vec::new();
    for row in 1..n {
        for col in (1..=n - row).rev() {
            cells.push((row, col));
        }
    }
    let target_length = inversions(w.word());
    let mut search = Search { target: w.word(), target_length, cells, found: Vec::new() };
    let mut current: Vec<usize> = (1..=n).collect();
    search.run(0, &mut current, 0, &mut Vec::new());
    search.found
}

/// `𝔖_w` as the pipe-dream generating function, in the plain space of size `n`.
pub fn schubert_poly_oracle(w: &Permutation) -> Polynomial {
    let space = Arc::new(VariableSpace::plain(w.size()));
    let terms = reduced_pipe_dreams(w).into_iter().map(|pd| {
        let mono = Monomial::from_pairs(pd.into_iter().map(|(row, _)| (row - 1, 1)));
        (mono, BigInt::from(1))
    });
    Polynomial::from_terms(&space, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(schubert_poly_oracle(&p("12")).is_one());
        assert_eq!(schubert_poly_oracle(&p("21")).to_string(), "x1");
        assert_eq!(schubert_poly_oracle(&p("132")).to_string(), "x2 + x1");
        assert_eq!(schubert_poly_oracle(&p("321")).to_string(), "x1^2 x2");
        assert_eq!(schubert_poly_oracle(&p("1")).to_string(), "1");
    }

    #[test]
    fn longest_element_has_a_single_pipe_dream() {
        for n in 1..=6 {
            assert_eq!(reduced_pipe_dreams(&Permutation::longest(n)).len(), 1);
        }
    }

    #[test]
    fn pipe_dream_counts_s4() {
        // 𝔖_w(1, …, 1) summed over S_4
        let total: usize = Permutation::all(4).iter().map(|w| reduced_pipe_dreams(w).len()).sum();
        assert_eq!(total, 41);
    }
}
