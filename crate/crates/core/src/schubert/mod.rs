//! Schubert polynomials and expansions in the Schubert basis.
//!
//! `𝔖_{w₀} = x₁^{n-1} x₂^{n-2} ⋯ x_{n-1}` and `𝔖_w = ∂_i 𝔖_{w s_i}` whenever
//! `w s_i > w`. The recursion always climbs through the smallest ascent.

mod expansion;
mod pipe_dream;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::polynomial::{Monomial, Polynomial, Var, VariableSpace};

pub use expansion::{expand_in_schubert_basis, SchubertExpansion};
pub use pipe_dream::{reduced_pipe_dreams, schubert_poly_oracle, PipeDream};

/// Memo table of Schubert polynomials keyed by permutation.
///
/// Only permutations on a traversed descent chain are materialized. The
/// table is internally synchronized and may be shared between threads; two
/// threads racing on the same entry compute identical values.
#[derive(Default)]
pub struct SchubertCache {
    polys: RwLock<HashMap<Permutation, Arc<Polynomial>>>,
    spaces: RwLock<HashMap<usize, Arc<VariableSpace>>>,
}

impl SchubertCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by [`schubert_poly`].
    pub fn global() -> &'static SchubertCache {
        static GLOBAL: OnceLock<SchubertCache> = OnceLock::new();
        GLOBAL.get_or_init(SchubertCache::new)
    }

    /// The plain space `ℤ[x₁..x_n, y₁..y_n]` Schubert polynomials of `S_n`
    /// live in. The same `Arc` is handed out for each `n`.
    pub fn space(&self, n: usize) -> Arc<VariableSpace> {
        if let Some(space) = self.spaces.read().unwrap().get(&n) {
            return Arc::clone(space);
        }
        let mut spaces = self.spaces.write().unwrap();
        Arc::clone(spaces.entry(n).or_insert_with(|| Arc::new(VariableSpace::plain(n))))
    }

    pub fn len(&self) -> usize {
        self.polys.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, w: &Permutation) -> Option<Arc<Polynomial>> {
        self.polys.read().unwrap().get(w).cloned()
    }

    fn store(&self, w: Permutation, p: Arc<Polynomial>) {
        self.polys.write().unwrap().entry(w).or_insert(p);
    }

    /// `𝔖_w`, computed top-down from `𝔖_{w₀}` along the smallest-ascent chain.
    pub fn get(&self, w: &Permutation) -> Arc<Polynomial> {
        if let Some(p) = self.lookup(w) {
            return p;
        }
        let n = w.size();
        let longest = Permutation::longest(n);
        let mut chain = Vec::new();
        let mut current = w.clone();
        let mut poly = loop {
            if let Some(p) = self.lookup(&current) {
                break p;
            }
            if current == longest {
                let p = Arc::new(staircase(&self.space(n)));
                self.store(current.clone(), Arc::clone(&p));
                break p;
            }
            let i = (1..n).find(|&i| current.is_ascent(i)).expect("non-longest permutation has an ascent");
            chain.push(i);
            current = current.right_multiply_simple(i).expect("ascent index in range");
        };
        for &i in chain.iter().rev() {
            current = current.right_multiply_simple(i).expect("index in range");
            poly = Arc::new(poly.divided_difference(i).expect("index in range"));
            self.store(current.clone(), Arc::clone(&poly));
        }
        debug_assert_eq!(&current, w);
        poly
    }

    /// Same as [`SchubertCache::get`] but descending through an arbitrary
    /// ascent choice, bypassing the table. Used to test chain independence.
    pub fn via_chain(&self, w: &Permutation, mut choose: impl FnMut(&[usize]) -> usize) -> Polynomial {
        let n = w.size();
        let longest = Permutation::longest(n);
        let mut chain = Vec::new();
        let mut current = w.clone();
        while current != longest {
            let ascents: Vec<usize> = (1..n).filter(|&i| current.is_ascent(i)).collect();
            let i = ascents[choose(&ascents) % ascents.len()];
            chain.push(i);
            current = current.right_multiply_simple(i).expect("ascent index in range");
        }
        let mut poly = staircase(&self.space(n));
        for &i in chain.iter().rev() {
            poly = poly.divided_difference(i).expect("index in range");
        }
        poly
    }
}

/// `x₁^{n-1} x₂^{n-2} ⋯ x_{n-1}`.
pub fn staircase(space: &Arc<VariableSpace>) -> Polynomial {
    let n = space.n();
    let mono = Monomial::from_pairs((0..n).map(|id| (id, (n - 1 - id) as u32)));
    Polynomial::monomial(space, mono, 1)
}

/// `𝔖_w` from the process-wide cache.
pub fn schubert_poly(w: &Permutation) -> Polynomial {
    SchubertCache::global().get(w).as_ref().clone()
}

/// Whether every monomial `∏ x_i^{c_i}` of `f` has `c_i <= n - i`, i.e.
/// whether `f` lies in the span `Γ` of the Schubert polynomials of `S_n`.
pub fn in_gamma(f: &Polynomial, n: usize) -> Result<bool> {
    if let Some(v) = f.first_non_x_var() {
        return Err(Error::NonXVariable(v.to_string()));
    }
    let space = f.space();
    Ok(f.terms().all(|(m, _)| {
        m.pairs().all(|(id, e)| match space.var(id) {
            Var::X(i) => i <= n && e as usize <= n - i,
            _ => false,
        })
    }))
}
