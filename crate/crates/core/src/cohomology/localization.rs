use std::collections::BTreeMap;
use std::sync::Arc;

use super::{form, LinearProduct, RootSystemA};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::polynomial::{Monomial, Polynomial, Var, VariableSpace};

/// `h_μ(x,y) = ∏_{k<l in different blocks} (x_k − y_l)` in the plain space.
pub fn chern_class_full_torus(mu: &Composition) -> LinearProduct {
    let space = Arc::new(VariableSpace::plain(mu.total()));
    let mut out = LinearProduct::new(&space);
    for (k, l) in RootSystemA::new(mu.total()).cross_roots(mu) {
        out.push(form(&space, &[(Var::X(k), 1), (Var::Y(l), -1)]));
    }
    out
}

/// `f(wY, Y)`: substitutes `x_i → y_{w(i)}`. Other variables are left alone.
pub fn restrict_at(w: &Permutation, f: &Polynomial) -> Result<Polynomial> {
    let space = f.space();
    if w.size() != space.n() {
        return Err(Error::SizeMismatch { left: space.n(), right: w.size() });
    }
    // variables go to variables, so the image is a relabeling of monomials
    let mut relabel: Vec<usize> = (0..space.len()).collect();
    for i in 1..=w.size() {
        relabel[space.require(Var::X(i))?] = space.require(Var::Y(w.at(i)))?;
    }
    let terms = f.terms().map(|(m, c)| (Monomial::from_pairs(m.pairs().map(|(id, e)| (relabel[id], e))), c.clone()));
    Ok(Polynomial::from_terms(space, terms))
}

/// `∏ (y_{w(k)} − y_{w(l)})` over cross-block pairs `k < l` when `w`
/// preserves every block of `mu`, and zero otherwise.
pub fn weight_product(mu: &Composition, w: &Permutation) -> Result<Polynomial> {
    let n = mu.total();
    if w.size() != n {
        return Err(Error::SizeMismatch { left: n, right: w.size() });
    }
    let space = Arc::new(VariableSpace::plain(n));
    let preserves = (1..=n).all(|i| mu.block_of(i).ok() == mu.block_of(w.at(i)).ok());
    if !preserves {
        return Ok(Polynomial::zero(&space));
    }
    let forms: Vec<Polynomial> = RootSystemA::new(n)
        .cross_roots(mu)
        .into_iter()
        .map(|(k, l)| form(&space, &[(Var::Y(w.at(k)), 1), (Var::Y(w.at(l)), -1)]))
        .collect();
    Polynomial::product_of_linear_forms(&space, &forms)
}

/// `ρ`: the restriction from the full torus to the block torus of `mu`.
/// For block `i` with half `m`, `y_{ν_i+k} → z_i + y_{i,k}` and
/// `y_{ν_i+μ_i+1−k} → z_i − y_{i,k}` for `k <= m`, and the middle coordinate
/// of an odd block goes to `z_i`. The result lives in the space of `mu`.
pub fn restrict_torus_coordinates(mu: &Composition, f: &Polynomial) -> Result<Polynomial> {
    let target = Arc::new(VariableSpace::for_composition(mu));
    if f.space().n() != mu.total() {
        return Err(Error::SizeMismatch { left: mu.total(), right: f.space().n() });
    }
    let f = f.reembed(&target)?;
    let mut assignment = BTreeMap::new();
    for i in 1..=mu.len() {
        let (nu, size) = (mu.nu(i), mu.part(i));
        for k in 1..=size / 2 {
            assignment.insert(Var::Y(nu + k), form(&target, &[(Var::Z(i), 1), (Var::YBlock(i, k), 1)]));
            assignment.insert(Var::Y(nu + size + 1 - k), form(&target, &[(Var::Z(i), 1), (Var::YBlock(i, k), -1)]));
        }
        if size % 2 == 1 {
            assignment.insert(Var::Y(nu + size / 2 + 1), form(&target, &[(Var::Z(i), 1)]));
        }
    }
    f.substitute(&assignment)
}

/// Sets every torus variable to zero and returns the result in the plain
/// space of the same size.
pub fn specialize_to_ordinary(f: &Polynomial) -> Result<Polynomial> {
    let space = f.space();
    let torus: Vec<Var> = space.vars().filter(|v| !matches!(v, Var::X(_))).collect();
    let g = f.specialize_to_zero(torus)?;
    g.reembed(&Arc::new(VariableSpace::plain(space.n())))
}
