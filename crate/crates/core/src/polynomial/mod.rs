//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients over a [`VariableSpace`].

mod json;
mod monomial;
mod parse;
mod space;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use monomial::Monomial;
pub use space::{Var, VariableSpace};

/// An element of `ℤ[vars]` where `vars` is the variable set of its space.
///
/// The term map never stores a zero coefficient. Iteration is in ascending
/// canonical monomial order (see [`Monomial`]); the leading term is last.
#[derive(Clone)]
pub struct Polynomial {
    space: Arc<VariableSpace>,
    terms: BTreeMap<Monomial, BigInt>,
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, mono: Monomial, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(mono) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl Polynomial {
    pub fn zero(space: &Arc<VariableSpace>) -> Self {
        Self { space: Arc::clone(space), terms: BTreeMap::new() }
    }

    pub fn one(space: &Arc<VariableSpace>) -> Self {
        Self::constant(space, 1)
    }

    pub fn constant(space: &Arc<VariableSpace>, c: impl Into<BigInt>) -> Self {
        Self::monomial(space, Monomial::one(), c)
    }

    pub fn monomial(space: &Arc<VariableSpace>, mono: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(space);
        accumulate(&mut p.terms, mono, c.into());
        p
    }

    pub fn var(space: &Arc<VariableSpace>, var: Var) -> Result<Self> {
        let id = space.require(var)?;
        Ok(Self::monomial(space, Monomial::var(id), 1))
    }

    /// Sums arbitrary `(monomial, coefficient)` pairs.
    pub fn from_terms(space: &Arc<VariableSpace>, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(space);
        for (m, c) in terms {
            debug_assert!(m.max_id().is_none_or(|id| id < space.len()));
            accumulate(&mut p.terms, m, c);
        }
        p
    }

    /// `Σ cᵢ·varᵢ + constant`.
    pub fn linear(space: &Arc<VariableSpace>, coeffs: &[(Var, i64)], constant: i64) -> Result<Self> {
        let mut p = Self::constant(space, constant);
        for &(var, c) in coeffs {
            let id = space.require(var)?;
            accumulate(&mut p.terms, Monomial::var(id), BigInt::from(c));
        }
        Ok(p)
    }

    pub fn space(&self) -> &Arc<VariableSpace> {
        &self.space
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Monomial::one()).is_one()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn is_linear(&self) -> bool {
        self.total_degree().is_none_or(|d| d <= 1)
    }

    /// Variables that occur with a positive exponent, in canonical order.
    pub fn support_vars(&self) -> Vec<Var> {
        let mut ids: Vec<usize> = self.terms.keys().flat_map(|m| m.pairs().map(|(id, _)| id)).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter().map(|id| self.space.var(id)).collect()
    }

    /// The first variable outside the `x` family, if any.
    pub fn first_non_x_var(&self) -> Option<Var> {
        self.support_vars().into_iter().find(|v| !matches!(v, Var::X(_)))
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = Self::zero(&self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut out.terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        if k.is_zero() {
            return Self::zero(&self.space);
        }
        Self { space: Arc::clone(&self.space), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * &k)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.space);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact product of linear forms; the empty product is 1.
    pub fn product_of_linear_forms(space: &Arc<VariableSpace>, forms: &[Polynomial]) -> Result<Self> {
        let mut acc = Self::one(space);
        for form in forms {
            if !form.is_linear() {
                return Err(Error::NonLinearForm(form.to_string()));
            }
            acc = acc.checked_mul(form)?;
        }
        Ok(acc)
    }

    fn check_x_index(&self, i: usize) -> Result<()> {
        let n = self.space.n();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        Ok(())
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: usize) -> Result<Self> {
        self.check_x_index(i)?;
        let (ia, ib) = (i - 1, i);
        let terms = self.terms.iter().map(|(m, c)| {
            let (a, b) = (m.exponent(ia), m.exponent(ib));
            (m.with_exponent(ia, b).with_exponent(ib, a), c.clone())
        });
        Ok(Self::from_terms(&self.space, terms))
    }

    /// Divided difference `∂_i f = (f − s_i f) / (x_i − x_{i+1})`.
    ///
    /// Every term `c·x_i^a x_{i+1}^b·r` pairs with its image under `s_i` in
    /// the numerator, and `x^a y^b − x^b y^a = (xy)^b (x^d − y^d)` with
    /// `d = a − b` divides exactly by `x − y`, leaving
    /// `(xy)^b Σ_{k<d} x^k y^{d−1−k}`. Variables outside `x_i, x_{i+1}` are
    /// treated as constants.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        self.check_x_index(i)?;
        let (ia, ib) = (i - 1, i);
        let mut out = Self::zero(&self.space);
        for (m, c) in &self.terms {
            let (a, b) = (m.exponent(ia), m.exponent(ib));
            if a == b {
                continue;
            }
            let (low, d, coeff) = if a > b { (b, a - b, c.clone()) } else { (a, b - a, -c) };
            let rest = m.with_exponent(ia, 0).with_exponent(ib, 0);
            for k in 0..d {
                let mono = rest.with_exponent(ia, low + k).with_exponent(ib, low + d - 1 - k);
                accumulate(&mut out.terms, mono, coeff.clone());
            }
        }
        Ok(out)
    }

    /// Image under the ring homomorphism sending each assigned variable to
    /// its polynomial and fixing every other variable. The substitution is
    /// simultaneous.
    pub fn substitute(&self, assignment: &BTreeMap<Var, Polynomial>) -> Result<Self> {
        let mut images: HashMap<usize, &Polynomial> = HashMap::with_capacity(assignment.len());
        for (&var, image) in assignment {
            let id = self.space.require(var)?;
            self.same_space(image)?;
            images.insert(id, image);
        }
        // group by the exponents of assigned variables
        let mut groups: BTreeMap<Vec<(usize, u32)>, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (assigned, kept): (Vec<_>, Vec<_>) = m.pairs().partition(|(id, _)| images.contains_key(id));
            let group = groups.entry(assigned).or_insert_with(|| Self::zero(&self.space));
            accumulate(&mut group.terms, Monomial::from_pairs(kept), c.clone());
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Self::zero(&self.space);
        'groups: for (assigned, rest) in groups {
            let mut factor = Self::one(&self.space);
            for (id, e) in assigned {
                if images[&id].is_zero() {
                    continue 'groups;
                }
                let power = powers.entry((id, e)).or_insert_with(|| images[&id].pow(e));
                factor = &factor * &*power;
            }
            out += &(&factor * &rest);
        }
        Ok(out)
    }

    /// Sends every variable in `vars` to zero.
    pub fn specialize_to_zero(&self, vars: impl IntoIterator<Item = Var>) -> Result<Self> {
        let zero = Self::zero(&self.space);
        let assignment: BTreeMap<Var, Polynomial> = vars.into_iter().map(|v| (v, zero.clone())).collect();
        self.substitute(&assignment)
    }

    /// The same polynomial read in another space, matching variables by
    /// name. Fails if a variable in use does not exist in `target`.
    pub fn reembed(&self, target: &Arc<VariableSpace>) -> Result<Self> {
        if *self.space == **target {
            return Ok(Self { space: Arc::clone(target), terms: self.terms.clone() });
        }
        let mut map: HashMap<usize, usize> = HashMap::new();
        for id in self.terms.keys().flat_map(|m| m.pairs().map(|(id, _)| id)) {
            if let std::collections::hash_map::Entry::Vacant(slot) = map.entry(id) {
                slot.insert(target.require(self.space.var(id))?);
            }
        }
        let terms =
            self.terms.iter().map(|(m, c)| (Monomial::from_pairs(m.pairs().map(|(id, e)| (map[&id], e))), c.clone()));
        Ok(Self::from_terms(target, terms))
    }

    /// First monomial (in descending canonical order) whose coefficients in
    /// `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, BigInt, BigInt)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coeff(m), other.coeff(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }

    /// Renders a monomial with this polynomial's variable names, e.g. `x1^2 x2`.
    pub fn format_monomial(&self, mono: &Monomial) -> String {
        format_monomial(&self.space, mono)
    }
}

pub(crate) fn format_monomial(space: &VariableSpace, mono: &Monomial) -> String {
    if mono.is_one() {
        return "1".into();
    }
    mono.pairs()
        .map(|(id, e)| if e == 1 { space.var(id).to_string() } else { format!("{}^{e}", space.var(id)) })
        .collect::<Vec<_>>()
        .join(" ")
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_space(other).is_ok() && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", format_monomial(&self.space, m))?;
            } else {
                write!(f, "{magnitude} {}", format_monomial(&self.space, m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{:?}]({self})", self.space)
    }
}

// Operator forms panic on a space mismatch; use the `checked_*` methods
// where operands may come from different spaces.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials in different spaces")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials in different spaces")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials in different spaces")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.same_space(rhs).expect("polynomials in different spaces");
        for (m, c) in &rhs.terms {
            accumulate(&mut self.terms, m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.same_space(rhs).expect("polynomials in different spaces");
        for (m, c) in &rhs.terms {
            accumulate(&mut self.terms, m.clone(), -c);
        }
    }
}
