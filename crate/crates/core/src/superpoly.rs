//! Superpolynomials: sparse sums of `x^α φ_E` terms over `Q(κ)`, the
//! diagonal `S_N` action on both variable families, multiplication by
//! `x_i`, the Dunkl and Cherednik–Dunkl operators, the affine shift, and
//! the duality map on the anti-commuting factor.
//!
//! The divided differences inside the Dunkl operator are expanded
//! monomial-wise through the geometric-sum identity
//! `(x_i^a x_j^b - x_i^b x_j^a)/(x_i - x_j) = x_i^b x_j^b Σ_l x_i^{a-b-1-l} x_j^l`
//! (for `a > b`), so no rational-function intermediate in the `x`
//! variables ever exists and every coefficient stays in `Q(κ)`.

use crate::fermion::{sigma, transposition_on_phi, FermionPoly, Subset};
use crate::kappa::KField;
use crate::perm::Perm;
use num::rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector `α ∈ N_0^N`; `x^α = Π x_i^{α_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Composition {
        Composition { parts }
    }

    pub fn zero(n: usize) -> Composition {
        Composition {
            parts: vec![0; n],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.parts[i - 1]
    }

    /// Bosonic degree `|α|`.
    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn swapped(&self, i: usize) -> Composition {
        let mut parts = self.parts.clone();
        parts.swap(i - 1, i);
        Composition { parts }
    }

    pub fn with_entry(&self, i: usize, v: u32) -> Composition {
        let mut parts = self.parts.clone();
        parts[i - 1] = v;
        Composition { parts }
    }

    /// Nonincreasing rearrangement `α⁺`.
    pub fn sorted_desc(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition { parts }
    }

    /// Nondecreasing rearrangement `α⁻`.
    pub fn sorted_asc(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.sort_unstable();
        Composition { parts }
    }

    /// The affine move `Ψ(a_1,...,a_N) = (a_2,...,a_N,a_1+1)`.
    pub fn affine_raise(&self) -> Composition {
        let mut parts: Vec<u32> = self.parts[1..].to_vec();
        parts.push(self.parts[0] + 1);
        Composition { parts }
    }

    /// Inverse of the affine move when the last entry is positive.
    pub fn affine_lower(&self) -> Option<Composition> {
        let last = *self.parts.last()?;
        if last == 0 {
            return None;
        }
        let mut parts = vec![last - 1];
        parts.extend_from_slice(&self.parts[..self.parts.len() - 1]);
        Some(Composition { parts })
    }

    /// Entry permutation `(wα)_i = α_{w^{-1}(i)}`, so `r_α α = α⁺`.
    pub fn permuted(&self, w: &Perm) -> Composition {
        Composition {
            parts: w.apply_to_entries(&self.parts),
        }
    }

    /// All distinct rearrangements, in lexicographic order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut current = self.sorted_asc().parts;
        let mut out = Vec::new();
        loop {
            out.push(Composition {
                parts: current.clone(),
            });
            // next_permutation
            let n = current.len();
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }

    /// Strict dominance-derived order `self ⊲ other` on compositions of
    /// equal total degree.
    pub fn precedes(&self, other: &Composition) -> bool {
        if self == other || self.degree() != other.degree() {
            return false;
        }
        let sp = self.sorted_desc();
        let op = other.sorted_desc();
        fn weakly_dominated(a: &Composition, b: &Composition) -> bool {
            let mut sa = 0i64;
            let mut sb = 0i64;
            for i in 0..a.len() {
                sa += a.parts[i] as i64;
                sb += b.parts[i] as i64;
                if sa > sb {
                    return false;
                }
            }
            true
        }
        if sp == op {
            weakly_dominated(self, other)
        } else {
            weakly_dominated(&sp, &op)
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Sparse superpolynomial: map `(α, E) -> Q(κ)` with all subsets of one
/// cardinality `m`.  The `BTreeMap` keeps terms in the canonical order
/// (lexicographic on `α`, then ascending bitmask).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPoly {
    n: usize,
    m: usize,
    terms: BTreeMap<(Composition, Subset), KField>,
}

impl SuperPoly {
    pub fn zero(n: usize, m: usize) -> SuperPoly {
        SuperPoly {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    /// Embed a κ-free anti-commuting polynomial at `α = 0`.
    pub fn from_fermion(p: &FermionPoly) -> SuperPoly {
        let mut out = SuperPoly::zero(p.n(), p.m());
        let alpha = Composition::zero(p.n());
        for (e, c) in p.terms() {
            out.add_term(alpha.clone(), *e, KField::from_rational(c.clone()));
        }
        out
    }

    pub fn monomial(alpha: Composition, e: Subset, c: KField) -> SuperPoly {
        let mut out = SuperPoly::zero(e.n(), e.card());
        out.add_term(alpha, e, c);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, Subset), &KField)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &Composition, e: &Subset) -> KField {
        self.terms
            .get(&(alpha.clone(), *e))
            .cloned()
            .unwrap_or_else(KField::zero)
    }

    pub fn add_term(&mut self, alpha: Composition, e: Subset, c: KField) {
        debug_assert_eq!(alpha.len(), self.n);
        debug_assert_eq!(e.card(), self.m, "mixed fermionic degree");
        if c.is_zero() {
            return;
        }
        let key = (alpha, e);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &SuperPoly) -> SuperPoly {
        assert_eq!(self.m, other.m, "mixed fermionic degree");
        let mut out = self.clone();
        for ((a, e), c) in &other.terms {
            out.add_term(a.clone(), *e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SuperPoly) -> SuperPoly {
        self.add(&other.scale(&KField::from_int(-1)))
    }

    pub fn scale(&self, c: &KField) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero(self.n, self.m);
        }
        SuperPoly {
            n: self.n,
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.mul(c)))
                .collect(),
        }
    }

    pub fn scale_rat(&self, c: &BigRational) -> SuperPoly {
        self.scale(&KField::from_rational(c.clone()))
    }

    /// Maximal bosonic degree over the support (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|(a, _)| a.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|(a, _)| a.degree());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Split into bosonic-degree homogeneous components.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, SuperPoly> {
        let mut out: BTreeMap<usize, SuperPoly> = BTreeMap::new();
        for ((a, e), c) in &self.terms {
            out.entry(a.degree())
                .or_insert_with(|| SuperPoly::zero(self.n, self.m))
                .add_term(a.clone(), *e, c.clone());
        }
        out
    }

    /// Simultaneous swap of `x_i ↔ x_{i+1}` and `θ_i ↔ θ_{i+1}`.
    pub fn apply_si(&self, i: usize) -> SuperPoly {
        assert!((1..self.n).contains(&i));
        let mut out = SuperPoly::zero(self.n, self.m);
        for ((a, e), c) in &self.terms {
            let (sign, img) = transposition_on_phi(i, i + 1, e);
            let coeff = if sign == 1 { c.clone() } else { c.neg() };
            out.add_term(a.swapped(i), img, coeff);
        }
        out
    }

    /// Transposition `(i, j)` applied to both variable families.
    pub fn apply_transposition(&self, i: usize, j: usize) -> SuperPoly {
        let w = Perm::transposition(self.n, i, j);
        let mut out = SuperPoly::zero(self.n, self.m);
        for ((a, e), c) in &self.terms {
            let (sign, img) = transposition_on_phi(i, j, e);
            let coeff = if sign == 1 { c.clone() } else { c.neg() };
            out.add_term(a.permuted(&w), img, coeff);
        }
        out
    }

    /// General group element via its adjacent factorization.
    pub fn apply_perm(&self, w: &Perm) -> SuperPoly {
        assert_eq!(w.n(), self.n);
        let mut p = self.clone();
        for a in w.adjacent_factors() {
            p = p.apply_si(a);
        }
        p
    }

    pub fn mul_x(&self, i: usize) -> SuperPoly {
        let mut out = SuperPoly::zero(self.n, self.m);
        for ((a, e), c) in &self.terms {
            out.add_term(a.with_entry(i, a.get(i) + 1), *e, c.clone());
        }
        out
    }

    /// Divided-difference part of the Dunkl operator for one term and one
    /// pair `(i, j)`: the monomials of `(x^a - x^{(i,j)a})/(x_i - x_j)`
    /// with `+1`/`-1` weights folded into the sign.
    fn divided_difference(
        out: &mut SuperPoly,
        alpha: &Composition,
        e: Subset,
        c: &KField,
        i: usize,
        j: usize,
    ) {
        let a = alpha.get(i);
        let b = alpha.get(j);
        if a == b {
            return;
        }
        let (lo, gap, negate) = if a > b { (b, a - b, false) } else { (a, b - a, true) };
        for l in 0..gap {
            let (ei, ej) = if a > b {
                (lo + gap - 1 - l, lo + l)
            } else {
                (lo + gap - 1 - l, lo + l)
            };
            let mut parts = alpha.clone();
            parts = parts.with_entry(i, ei).with_entry(j, ej);
            let coeff = if negate { c.neg() } else { c.clone() };
            out.add_term(parts, e, coeff);
        }
    }

    /// Dunkl operator `D_i`: lowers bosonic degree by one.
    pub fn dunkl(&self, i: usize) -> SuperPoly {
        assert!((1..=self.n).contains(&i));
        let kappa = KField::kappa();
        let mut out = SuperPoly::zero(self.n, self.m);
        for ((a, e), c) in &self.terms {
            // ∂/∂x_i
            let ai = a.get(i);
            if ai > 0 {
                out.add_term(
                    a.with_entry(i, ai - 1),
                    *e,
                    c.scale_rat(&BigRational::from_integer((ai as i64).into())),
                );
            }
            // κ Σ_{j≠i} [θ-swapped difference] / (x_i - x_j)
            for j in 1..=self.n {
                if j == i {
                    continue;
                }
                let (sign, img) = transposition_on_phi(i, j, e);
                let mut weighted = c.mul(&kappa);
                if sign == -1 {
                    weighted = weighted.neg();
                }
                Self::divided_difference(&mut out, a, img, &weighted, i, j);
            }
        }
        out
    }

    /// Cherednik–Dunkl operator `U_i p = D_i(x_i p) - κ Σ_{j<i} (i,j) p`;
    /// preserves bosonic degree.
    pub fn cherednik(&self, i: usize) -> SuperPoly {
        let mut out = self.mul_x(i).dunkl(i);
        let kappa = KField::kappa();
        for j in 1..i {
            out = out.sub(&self.apply_transposition(i, j).scale(&kappa));
        }
        out
    }

    /// The affine step `p ↦ x_N · w_N^{-1} p` where `w_N` is the cyclic
    /// shift; monomials move by `Ψ` and labels cycle with their sign.
    pub fn affine_shift(&self) -> SuperPoly {
        let w_inv = Perm::cycle(self.n).inverse();
        let mut out = SuperPoly::zero(self.n, self.m);
        for ((a, e), c) in &self.terms {
            let (sign, img) = e.permute(&w_inv);
            let coeff = if sign == 1 { c.clone() } else { c.neg() };
            out.add_term(a.affine_raise(), img, coeff);
        }
        out
    }

    /// Duality on the anti-commuting factor only: `x^α φ_E ↦
    /// σ(inv(E)) x^α φ_{E^C}`; fermionic degree `m → N-m`.
    pub fn delta_dual(&self) -> SuperPoly {
        let mut out = SuperPoly::zero(self.n, self.n - self.m);
        for ((a, e), c) in &self.terms {
            let coeff = if sigma(e.inversions()) == 1 {
                c.clone()
            } else {
                c.neg()
            };
            out.add_term(a.clone(), e.complement(), coeff);
        }
        out
    }

    /// κ ↦ -κ on every coefficient.
    pub fn subst_neg_kappa(&self) -> SuperPoly {
        SuperPoly {
            n: self.n,
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.subst_neg_kappa()))
                .collect(),
        }
    }

    /// Plain-text rendering in canonical term order, e.g.
    /// `(1 - 2κ)/(1 + κ) · x1^2 x3 θ2θ4`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut lines = Vec::new();
        for ((a, e), c) in &self.terms {
            let mut factors = Vec::new();
            for i in 1..=self.n {
                match a.get(i) {
                    0 => {}
                    1 => factors.push(format!("x{}", i)),
                    k => factors.push(format!("x{}^{}", i, k)),
                }
            }
            let thetas: String = e.elems().iter().map(|i| format!("θ{}", i)).collect();
            let mut mon = factors.join(" ");
            if !thetas.is_empty() {
                if !mon.is_empty() {
                    mon.push(' ');
                }
                mon.push_str(&thetas);
            }
            if mon.is_empty() {
                lines.push(format!("{}", c));
            } else {
                lines.push(format!("{} · {}", c, mon));
            }
        }
        lines.join("  +  ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kappa::{qi, qq};

    fn sub(n: usize, elems: &[usize]) -> Subset {
        Subset::from_elems(n, elems).unwrap()
    }

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    /// A fixed 10-term polynomial used across the operator tests.
    fn sample(n: usize, m: usize) -> SuperPoly {
        let mut p = SuperPoly::zero(n, m);
        let subsets = Subset::all_of_card(n, m);
        let mut deg = 0u32;
        for (idx, e) in subsets.iter().cycle().take(10).enumerate() {
            let mut parts = vec![0u32; n];
            parts[idx % n] = deg % 3;
            parts[(idx + 1) % n] = (deg + 1) % 2;
            deg += 1;
            let c = KField::linear_int(idx as i64 + 1, -(idx as i64) - 2);
            p.add_term(Composition::new(parts), *e, c);
        }
        p
    }

    #[test]
    fn affine_move_on_compositions() {
        assert_eq!(
            comp(&[2, 1, 4]).affine_raise(),
            comp(&[1, 4, 3])
        );
        assert_eq!(comp(&[1, 4, 3]).affine_lower().unwrap(), comp(&[2, 1, 4]));
        assert_eq!(comp(&[1, 0]).affine_lower(), None);
    }

    #[test]
    fn involution_and_braid() {
        let p = sample(3, 1);
        for i in 1..3 {
            assert_eq!(p.apply_si(i).apply_si(i), p);
        }
        assert_eq!(
            p.apply_si(1).apply_si(2).apply_si(1),
            p.apply_si(2).apply_si(1).apply_si(2)
        );
    }

    #[test]
    fn si_on_equal_exponents_inside_set() {
        // s_i(x^α φ_E) = -x^α φ_E when i, i+1 ∈ E and α_i = α_{i+1}.
        let e = sub(4, &[2, 3]);
        let p = SuperPoly::monomial(comp(&[0, 1, 1, 0]), e, KField::one());
        assert_eq!(p.apply_si(2), p.scale(&KField::from_int(-1)));
    }

    #[test]
    fn perm_action_matches_transposition() {
        let p = sample(4, 2);
        let w = Perm::transposition(4, 1, 3);
        assert_eq!(p.apply_perm(&w), p.apply_transposition(1, 3));
    }

    #[test]
    fn dunkl_kills_constants() {
        let e = sub(3, &[2]);
        let p = SuperPoly::from_fermion(&FermionPoly::basis(&e));
        for i in 1..=3 {
            assert!(p.dunkl(i).is_zero());
        }
    }

    #[test]
    fn dunkl_lowers_degree_by_one() {
        let p = sample(3, 1);
        for i in 1..=3 {
            let d = p.dunkl(i);
            for ((a, _), _) in d.terms() {
                // every component degree drops by exactly one against some
                // source component; global check: max degree < max degree of p
                assert!(a.degree() < p.degree());
            }
        }
    }

    #[test]
    fn dunkl_commutativity() {
        let p = sample(3, 1);
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(p.dunkl(i).dunkl(j), p.dunkl(j).dunkl(i));
            }
        }
    }

    #[test]
    fn cherednik_commutativity_and_degree() {
        let p = sample(3, 1);
        for i in 1..=3 {
            for (k, component) in p.cherednik(i).homogeneous_components() {
                assert!(p.homogeneous_components().contains_key(&k));
                assert!(!component.is_zero());
            }
            for j in 1..=3 {
                assert_eq!(
                    p.cherednik(i).cherednik(j),
                    p.cherednik(j).cherednik(i)
                );
            }
        }
    }

    #[test]
    fn hecke_like_relation() {
        // s_i U_i s_i = U_{i+1} + κ s_i
        let p = sample(3, 2);
        let kappa = KField::kappa();
        for i in 1..3 {
            let lhs = p.apply_si(i).cherednik(i).apply_si(i);
            let rhs = p.cherednik(i + 1).add(&p.apply_si(i).scale(&kappa));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn intertwining_w_dunkl() {
        // w D_i = D_{w(i)} w for adjacent generators.
        let p = sample(3, 1);
        for i in 1..=3 {
            for s in 1..3 {
                let w = Perm::adjacent(3, s);
                let lhs = p.dunkl(i).apply_perm(&w);
                let rhs = p.apply_perm(&w).dunkl(w.apply(i));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn affine_shift_monomial() {
        let p = SuperPoly::monomial(comp(&[2, 1, 4]), sub(3, &[1]), KField::one());
        let q = p.affine_shift();
        assert_eq!(q.num_terms(), 1);
        let ((a, e), c) = q.terms().next().unwrap();
        assert_eq!(a, &comp(&[1, 4, 3]));
        // θ1 ↦ θ3 under the inverse cycle.
        assert_eq!(e, &sub(3, &[3]));
        assert!(c.is_one());
    }

    #[test]
    fn affine_shift_equals_xn_times_cycled() {
        let p = sample(3, 1);
        let w_inv = Perm::cycle(3).inverse();
        assert_eq!(p.affine_shift(), p.apply_perm(&w_inv).mul_x(3));
    }

    #[test]
    fn delta_dual_on_monomial_and_dunkl_twist() {
        let e = sub(3, &[1, 2]);
        let p = SuperPoly::monomial(comp(&[2, 0, 1]), e, KField::one());
        let q = p.delta_dual();
        let ((a, f), c) = q.terms().next().unwrap();
        assert_eq!(a, &comp(&[2, 0, 1]));
        assert_eq!(f, &sub(3, &[3]));
        assert_eq!(c.clone(), KField::from_rational(qi(sigma(e.inversions()) as i64)));

        // δ D(κ)_i = D(-κ)_i δ on a general polynomial.
        let p = sample(3, 1);
        for i in 1..=3 {
            let lhs = p.dunkl(i).delta_dual();
            let rhs = p.delta_dual().subst_neg_kappa().dunkl(i).subst_neg_kappa();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn divided_difference_geometric_expansion() {
        // D_1 on x_1^3 φ_{2} with N=2: ∂ gives 3x_1^2; swap part gives
        // κ(x_1^3 - x_2^3)/(x_1-x_2) applied with the θ transposition.
        let p = SuperPoly::monomial(comp(&[3, 0]), sub(2, &[2]), KField::one());
        let d = p.dunkl(1);
        // terms: 3x_1^2 φ_2 + κ(x_1^2 + x_1x_2 + x_2^2) φ_1
        let k = KField::kappa();
        let mut expect = SuperPoly::zero(2, 1);
        expect.add_term(comp(&[2, 0]), sub(2, &[2]), KField::from_rational(qi(3)));
        expect.add_term(comp(&[2, 0]), sub(2, &[1]), k.clone());
        expect.add_term(comp(&[1, 1]), sub(2, &[1]), k.clone());
        expect.add_term(comp(&[0, 2]), sub(2, &[1]), k.clone());
        assert_eq!(d, expect);
    }

    #[test]
    fn precedes_order() {
        // (0,1,1,0) ⊳ supports from the worked example: x3x4 ◁ x2x4 ◁ x2x3.
        let alpha = comp(&[0, 1, 1, 0]);
        assert!(comp(&[0, 1, 0, 1]).precedes(&alpha));
        assert!(comp(&[0, 0, 1, 1]).precedes(&comp(&[0, 1, 0, 1])));
        assert!(!alpha.precedes(&alpha));
        assert!(!comp(&[2, 0, 0, 0]).precedes(&alpha));
        // degree mismatch is incomparable
        assert!(!comp(&[0, 1, 0, 0]).precedes(&alpha));
    }

    #[test]
    fn rearrangements_count() {
        let r = comp(&[2, 1, 1, 0]).rearrangements();
        assert_eq!(r.len(), 12);
        assert!(r.iter().all(|a| a.sorted_desc() == comp(&[2, 1, 1, 0])));
    }

    #[test]
    fn pretty_renders_in_canonical_order() {
        let mut p = SuperPoly::zero(4, 2);
        p.add_term(
            comp(&[2, 0, 1, 0]),
            sub(4, &[2, 4]),
            KField::linear_int(1, -2).div(&KField::linear_int(1, 1)).unwrap(),
        );
        assert_eq!(p.pretty(), "(1 - 2κ)/(1 + κ) · x1^2 x3 θ2θ4");
    }
}
