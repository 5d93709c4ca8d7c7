//! The anti-commuting variable algebra.
//!
//! Basis monomials are `φ_E = θ_{i_1} ··· θ_{i_m}` for subsets
//! `E = {i_1 < ... < i_m}` of `{1..N}`, with `θ_i θ_j = -θ_j θ_i`.  The
//! symmetric group permutes the variables; all sign bookkeeping reduces to
//! the counting function `s(j, E) = #{i ∈ E : i > j}` and the inversion
//! statistic `inv(E) = #{(i,j) ∈ E × E^C : i < j}`.
//!
//! Everything in this module is κ-free: coefficients are plain rationals.

use crate::error::{Error, Result};
use crate::kappa::qi;
use crate::perm::Perm;
use num::rational::BigRational;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// `σ(n) = (-1)^n`.
pub fn sigma(n: usize) -> i8 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A subset of `{1..N}` as a bitmask; bit `i-1` stands for position `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    mask: u32,
    n: u8,
}

impl Subset {
    pub fn empty(n: usize) -> Subset {
        assert!(n <= 30, "ambient size too large for the bitmask basis");
        Subset { mask: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Subset {
        let mut s = Subset::empty(n);
        s.mask = (1u32 << n) - 1;
        s
    }

    pub fn from_elems(n: usize, elems: &[usize]) -> Result<Subset> {
        let mut s = Subset::empty(n);
        for &e in elems {
            if e < 1 || e > n {
                return Err(Error::MalformedInput(format!(
                    "element {} outside 1..{}",
                    e, n
                )));
            }
            if s.contains(e) {
                return Err(Error::AlreadyPresent(e));
            }
            s.mask |= 1 << (e - 1);
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn card(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n() && (self.mask >> (i - 1)) & 1 == 1
    }

    pub fn elems(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.contains(i)).collect()
    }

    pub fn complement(&self) -> Subset {
        Subset {
            mask: !self.mask & ((1u32 << self.n) - 1),
            n: self.n,
        }
    }

    pub fn with(&self, i: usize) -> Subset {
        debug_assert!(i >= 1 && i <= self.n());
        Subset {
            mask: self.mask | (1 << (i - 1)),
            n: self.n,
        }
    }

    pub fn without(&self, i: usize) -> Subset {
        Subset {
            mask: self.mask & !(1 << (i - 1)),
            n: self.n,
        }
    }

    /// `s(j, E) = #{i ∈ E : i > j}`.
    pub fn count_greater(&self, j: usize) -> usize {
        (self.mask >> j).count_ones() as usize
    }

    /// `inv(E) = #{(i,j) ∈ E × E^C : i < j}`.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in self.elems() {
            count += (1..=self.n()).filter(|&j| j > i && !self.contains(j)).count();
        }
        count
    }

    /// `inv'(E) = #{(i,j) : i ∈ E, j ∉ E, i < j < N}`.  Defined alongside
    /// `inv` for completeness; nothing downstream consumes it.
    pub fn inversions_strict(&self) -> usize {
        let mut count = 0;
        for i in self.elems() {
            count += (1..self.n()).filter(|&j| j > i && !self.contains(j)).count();
        }
        count
    }

    /// `E^⊥ = {j ∈ E^C : j < N}`.
    pub fn perp(&self) -> Subset {
        self.complement().without(self.n())
    }

    /// Image under a permutation together with the reordering sign:
    /// `w φ_E = sign · φ_{w(E)}`.
    pub fn permute(&self, w: &Perm) -> (i8, Subset) {
        let images: Vec<usize> = self.elems().iter().map(|&i| w.apply(i)).collect();
        let mut inversions = 0;
        for a in 0..images.len() {
            for b in (a + 1)..images.len() {
                if images[a] > images[b] {
                    inversions += 1;
                }
            }
        }
        let mut out = Subset::empty(self.n());
        for i in images {
            out.mask |= 1 << (i - 1);
        }
        (sigma(inversions), out)
    }

    /// All subsets of cardinality `k`, ascending by bitmask.
    pub fn all_of_card(n: usize, k: usize) -> Vec<Subset> {
        (0u32..(1 << n))
            .filter(|m| m.count_ones() as usize == k)
            .map(|mask| Subset { mask, n: n as u8 })
            .collect()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.elems()
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// `φ_E · θ_j = σ(s(j,E)) φ_{E ∪ {j}}` for `j ∉ E`.
pub fn mul_theta(e: &Subset, j: usize) -> Result<(i8, Subset)> {
    if e.contains(j) {
        return Err(Error::AlreadyPresent(j));
    }
    Ok((sigma(e.count_greater(j)), e.with(j)))
}

/// Action of the transposition `(i,j)` on `φ_E`:
/// fixed with sign `+1` when `i,j ∉ E`, sign `-1` when `i,j ∈ E`, and for
/// a mixed pair `i ∈ E, j ∉ E` the set becomes `(E\{i}) ∪ {j}` with sign
/// `σ(s(i,E) + s(j, E\{i}))`.
pub fn transposition_on_phi(i: usize, j: usize, e: &Subset) -> (i8, Subset) {
    assert!(i != j);
    match (e.contains(i), e.contains(j)) {
        (false, false) => (1, *e),
        (true, true) => (-1, *e),
        (true, false) => {
            let removed = e.without(i);
            let sign = sigma(e.count_greater(i) + removed.count_greater(j));
            (sign, removed.with(j))
        }
        (false, true) => transposition_on_phi(j, i, e),
    }
}

/// Sparse element of the span of `{φ_E : #E = m}` with rational
/// coefficients (every object in this module is κ-free).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermionPoly {
    n: usize,
    m: usize,
    terms: BTreeMap<Subset, BigRational>,
}

impl FermionPoly {
    pub fn zero(n: usize, m: usize) -> FermionPoly {
        FermionPoly {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(e: &Subset) -> FermionPoly {
        let mut p = FermionPoly::zero(e.n(), e.card());
        p.terms.insert(*e, BigRational::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Fermionic degree.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Subset) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, e: Subset, c: BigRational) {
        debug_assert_eq!(e.n(), self.n);
        debug_assert_eq!(e.card(), self.m, "mixed fermionic degree");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &FermionPoly) -> FermionPoly {
        assert_eq!(self.m, other.m, "mixed fermionic degree");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FermionPoly) -> FermionPoly {
        self.add(&other.scale(&qi(-1)))
    }

    pub fn scale(&self, c: &BigRational) -> FermionPoly {
        if c.is_zero() {
            return FermionPoly::zero(self.n, self.m);
        }
        FermionPoly {
            n: self.n,
            m: self.m,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Linear extension of the transposition action.
    pub fn apply_transposition(&self, i: usize, j: usize) -> FermionPoly {
        let mut out = FermionPoly::zero(self.n, self.m);
        for (e, c) in &self.terms {
            let (sign, img) = transposition_on_phi(i, j, e);
            out.add_term(img, c * qi(sign as i64));
        }
        out
    }

    pub fn apply_si(&self, i: usize) -> FermionPoly {
        self.apply_transposition(i, i + 1)
    }

    /// Apply a general group element by its adjacent-transposition
    /// factorization, accumulating signs term by term.
    pub fn apply_perm(&self, w: &Perm) -> FermionPoly {
        assert_eq!(w.n(), self.n);
        let mut p = self.clone();
        for a in w.adjacent_factors() {
            p = p.apply_si(a);
        }
        p
    }

    /// The duality map `δ φ_E = σ(inv(E)) φ_{E^C}`, degree `m -> N-m`.
    pub fn delta_dual(&self) -> FermionPoly {
        let mut out = FermionPoly::zero(self.n, self.n - self.m);
        for (e, c) in &self.terms {
            out.add_term(e.complement(), c * qi(sigma(e.inversions()) as i64));
        }
        out
    }

    /// Lowering operator `D = Σ_i ∂θ_i`, degree `m -> m-1`.
    pub fn lower(&self) -> FermionPoly {
        let mut out = FermionPoly::zero(self.n, self.m.saturating_sub(1));
        if self.m == 0 {
            return out;
        }
        for (e, c) in &self.terms {
            for i in e.elems() {
                // ∂θ_i φ_E = σ(#{j ∈ E : j < i}) φ_{E \ {i}}
                let below = e.card() - 1 - e.count_greater(i);
                out.add_term(e.without(i), c * qi(sigma(below) as i64));
            }
        }
        out
    }

    /// Raising operator `M = Σ_i θ~_i`, degree `m -> m+1`.
    pub fn raise(&self) -> FermionPoly {
        let mut out = FermionPoly::zero(self.n, self.m + 1);
        for (e, c) in &self.terms {
            for i in 1..=self.n {
                if !e.contains(i) {
                    let below = e.card() - e.count_greater(i);
                    out.add_term(e.with(i), c * qi(sigma(below) as i64));
                }
            }
        }
        out
    }

    /// Isotype projection: `target 0` is `(1/N) D M` (kernel of `D`),
    /// `target 1` is `(1/N) M D` (kernel of `M`).
    pub fn project(&self, target: u8) -> FermionPoly {
        let n = qi(self.n as i64);
        let p = match target {
            0 => self.raise().lower(),
            1 => self.lower().raise(),
            _ => panic!("projection target must be 0 or 1"),
        };
        p.scale(&(BigRational::one() / n))
    }

    /// Jucys–Murphy element `ω_i = Σ_{j>i} (i,j)` applied to `self`.
    pub fn jucys_murphy(&self, i: usize) -> FermionPoly {
        let mut out = FermionPoly::zero(self.n, self.m);
        for j in (i + 1)..=self.n {
            out = out.add(&self.apply_transposition(i, j));
        }
        out
    }

    /// Inner product from declaring `{φ_E}` orthonormal.
    pub fn dot(&self, other: &FermionPoly) -> BigRational {
        if self.m != other.m {
            return BigRational::zero();
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            if let Some(d) = other.terms.get(e) {
                acc += c * d;
            }
        }
        acc
    }
}

/// `ψ_E = Σ_{j∈E} σ(s(j,E)) φ_{E\{j}}` for `#E = m+1`; spans the isotype
/// with the long first row.
pub fn psi_vector(e: &Subset) -> Result<FermionPoly> {
    if e.card() == 0 {
        return Err(Error::WrongCardinality {
            expected: 1,
            got: 0,
        });
    }
    let mut out = FermionPoly::zero(e.n(), e.card() - 1);
    for j in e.elems() {
        out.add_term(e.without(j), qi(sigma(e.count_greater(j)) as i64));
    }
    Ok(out)
}

/// `η_E = Σ_{j∉E} σ(s(j,E)) φ_{E∪{j}}` for `#E = m-1`; spans the isotype
/// with the short column.
pub fn eta_vector(e: &Subset) -> Result<FermionPoly> {
    if e.card() >= e.n() {
        return Err(Error::WrongCardinality {
            expected: e.n() - 1,
            got: e.card(),
        });
    }
    let mut out = FermionPoly::zero(e.n(), e.card() + 1);
    for j in 1..=e.n() {
        if !e.contains(j) {
            out.add_term(e.with(j), qi(sigma(e.count_greater(j)) as i64));
        }
    }
    Ok(out)
}
