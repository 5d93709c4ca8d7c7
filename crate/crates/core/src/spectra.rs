//! Calogero–Sutherland eigenvalues on the circle, computed symbolically
//! in κ.
//!
//! For a column-strict labeled tableau the conjugated Hamiltonian acts on
//! the attached supersymmetric polynomial as `Σ_i (U_i - 1 - κγ)²` where
//! `γ` is the average content of the isotype; the eigenvalue is the
//! quadratic `Σ_cells (value + κ(content - γ))²`.  The (μ, μ~) notation
//! rewrites the same sum over row and column cells with the offsets
//! `±((N+1)/2 - i)`.

use crate::error::{Error, Result};
use crate::jack::JackCache;
use crate::kappa::{qi, qq, KField};
use crate::superpoly::{Composition, SuperPoly};
use crate::supersym::{build_supersymmetric, labeled_tableau, LabeledTableau, Normalization};
use crate::tableaux::{Family, HookLabel};
use num::rational::BigRational;

/// Row word `μ` (rightmost row cell first) and column word `μ~`
/// (bottom cell first, corner last); `μ` is a partition and `μ~` is
/// strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuNotation {
    pub mu: Vec<u32>,
    pub mu_tilde: Vec<u32>,
}

impl MuNotation {
    pub fn from_tableau(tab: &LabeledTableau) -> Result<MuNotation> {
        if !tab.is_column_strict() {
            return Err(Error::NotColumnStrict);
        }
        let mut mu = tab.row.clone();
        mu.reverse();
        let mut mu_tilde = tab.col.clone();
        mu_tilde.reverse();
        mu_tilde.push(tab.corner);
        Ok(MuNotation { mu, mu_tilde })
    }
}

/// Average content `γ` of the isotype: `(N-2m-1)/2` for family 0 and
/// `(N-2m+1)/2` for family 1 (a half-integer whenever `N` is even).
pub fn gamma(n: usize, m: usize, family: Family) -> BigRational {
    let shift = match family {
        Family::Zero => -1,
        Family::One => 1,
    };
    qq(n as i64 - 2 * m as i64 + shift, 2)
}

/// The eigenvalue as `Σ_cells (value + κ(content - γ))²`, a quadratic
/// polynomial in κ.
pub fn cst_eigenvalue(tab: &LabeledTableau) -> Result<KField> {
    if !tab.is_column_strict() {
        return Err(Error::NotColumnStrict);
    }
    let g = gamma(tab.n, tab.m, tab.family);
    let mut acc = KField::zero();
    let mut cell = |value: u32, content: i64| {
        let term = KField::linear(qi(value as i64), qi(content) - &g);
        acc = acc.add(&term.mul(&term));
    };
    cell(tab.corner, 0);
    for (idx, &v) in tab.row.iter().enumerate() {
        cell(v, idx as i64 + 1);
    }
    for (idx, &v) in tab.col.iter().enumerate() {
        cell(v, -(idx as i64) - 1);
    }
    Ok(acc)
}

/// The same eigenvalue in the (μ, μ~) notation:
/// `Σ (μ~_i + κ(i - (N+1)/2))² + Σ (μ_i + κ((N+1)/2 - i))²`, with `m`
/// replaced by `m-1` for family 1.
pub fn cst_eigenvalue_mu(tab: &LabeledTableau) -> Result<KField> {
    let mu = MuNotation::from_tableau(tab)?;
    let half = qq(tab.n as i64 + 1, 2);
    let mut acc = KField::zero();
    for (i, &v) in mu.mu_tilde.iter().enumerate() {
        let offset = qi(i as i64 + 1) - &half;
        let term = KField::linear(qi(v as i64), offset);
        acc = acc.add(&term.mul(&term));
    }
    for (i, &v) in mu.mu.iter().enumerate() {
        let offset = &half - qi(i as i64 + 1);
        let term = KField::linear(qi(v as i64), offset);
        acc = acc.add(&term.mul(&term));
    }
    Ok(acc)
}

/// Ground state of the isotype: staircase column, zero row.
pub fn ground_state_tableau(n: usize, m: usize, family: Family) -> LabeledTableau {
    let (col_cells, row_cells) = match family {
        Family::Zero => (m, n - m - 1),
        Family::One => (m - 1, n - m),
    };
    LabeledTableau {
        family,
        n,
        m,
        corner: 0,
        row: vec![0; row_cells],
        col: (1..=col_cells as u32).collect(),
    }
}

/// Closed form of the ground-state eigenvalue for family 0:
/// `m(m+1){(2m+1)(1+κ) - 3κN}/6 + κ²N(N²-1)/12`; family 1 replaces `m`
/// by `m-1`.
pub fn ground_state_eigenvalue(n: usize, m: usize, family: Family) -> KField {
    let mm = match family {
        Family::Zero => m as i64,
        Family::One => m as i64 - 1,
    };
    let ni = n as i64;
    let linear = KField::linear(
        qi(2 * mm + 1),
        qi(2 * mm + 1) - qi(3 * ni),
    )
    .scale_rat(&(qi(mm) * qi(mm + 1) / qi(6)));
    let quad = KField::kappa()
        .mul(&KField::kappa())
        .scale_rat(&(qi(ni) * qi(ni * ni - 1) / qi(12)));
    linear.add(&quad)
}

/// Exact check that `Σ_i (U_i - 1 - κγ)² p = eigenvalue · p` for the
/// supersymmetric polynomial of the tableau.
pub fn hamiltonian_eigencheck(
    lambda: &Composition,
    label: &HookLabel,
    cache: &JackCache,
) -> Result<bool> {
    let tab = labeled_tableau(lambda, label);
    let ev = cst_eigenvalue(&tab)?;
    let p = build_supersymmetric(lambda, label, Normalization::Paper, cache)?;
    let g = gamma(label.n(), label.m(), label.family());
    let shift = KField::linear(qi(-1), -&g);
    let mut lhs = SuperPoly::zero(label.n(), label.m());
    for i in 1..=label.n() {
        // (U_i + shift)² p = U_i²p + 2 shift U_i p + shift² p
        let up = p.cherednik(i);
        let uup = up.cherednik(i);
        let term = uup
            .add(&up.scale(&shift.scale_rat(&qi(2))))
            .add(&p.scale(&shift.mul(&shift)));
        lhs = lhs.add(&term);
    }
    Ok(lhs == p.scale(&ev))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::Subset;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn label(n: usize, family: Family, elems: &[usize]) -> HookLabel {
        HookLabel::new(family, Subset::from_elems(n, elems).unwrap()).unwrap()
    }

    #[test]
    fn mu_notation_shapes() {
        let l = label(4, Family::Zero, &[1, 3, 4]);
        let tab = labeled_tableau(&comp(&[2, 1, 1, 0]), &l);
        let mu = MuNotation::from_tableau(&tab).unwrap();
        assert_eq!(mu.mu, vec![1]);
        assert_eq!(mu.mu_tilde, vec![2, 1, 0]);
        assert!(mu.mu_tilde.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn two_eigenvalue_forms_agree() {
        for n in 3..=8 {
            for m in 1..n {
                for family in [Family::Zero, Family::One] {
                    let tab = ground_state_tableau(n, m, family);
                    assert_eq!(
                        cst_eigenvalue(&tab).unwrap(),
                        cst_eigenvalue_mu(&tab).unwrap(),
                        "ground N={} m={} {:?}",
                        n,
                        m,
                        family
                    );
                }
            }
        }
        // A few excited tableaux.
        let mut tab = ground_state_tableau(7, 3, Family::Zero);
        tab.row = vec![1, 2, 5];
        assert_eq!(cst_eigenvalue(&tab).unwrap(), cst_eigenvalue_mu(&tab).unwrap());
        tab.col = vec![2, 4, 7];
        assert_eq!(cst_eigenvalue(&tab).unwrap(), cst_eigenvalue_mu(&tab).unwrap());
    }

    #[test]
    fn ground_state_closed_form() {
        for n in 2..=8 {
            for m in 1..n {
                for family in [Family::Zero, Family::One] {
                    if family == Family::One && m == 1 && n == 2 {
                        // still valid: column empty
                    }
                    let tab = ground_state_tableau(n, m, family);
                    assert_eq!(
                        cst_eigenvalue(&tab).unwrap(),
                        ground_state_eigenvalue(n, m, family),
                        "N={} m={} {:?}",
                        n,
                        m,
                        family
                    );
                }
            }
        }
    }

    #[test]
    fn eigenvalue_invariant_over_orbit_choice() {
        // Same tableau through different labels gives the same eigenvalue.
        let lam = comp(&[2, 1, 1, 0]);
        let a = label(4, Family::Zero, &[1, 3, 4]);
        let b = label(4, Family::Zero, &[1, 2, 4]);
        let ta = labeled_tableau(&lam, &a);
        let tb = labeled_tableau(&lam, &b);
        assert_eq!(ta, tb);
        assert_eq!(cst_eigenvalue(&ta).unwrap(), cst_eigenvalue(&tb).unwrap());
    }

    #[test]
    fn hamiltonian_check_small() {
        let cache = JackCache::new();
        let l = label(3, Family::Zero, &[1, 3]);
        assert!(hamiltonian_eigencheck(&comp(&[1, 0, 0]), &l, &cache).unwrap());
        let l1 = label(3, Family::One, &[]);
        assert!(hamiltonian_eigencheck(&comp(&[1, 1, 0]), &l1, &cache).unwrap());
    }

    #[test]
    fn worked_example_eigenvalue_consistency() {
        // λ=(2,1,1,0) with root {1,3,4}: Σ U_i² eigenvalue is
        // 6(κ²-2κ+3); the Hamiltonian form shifts it by γ.
        let l = label(4, Family::Zero, &[1, 3, 4]);
        let lam = comp(&[2, 1, 1, 0]);
        let tab = labeled_tableau(&lam, &l);
        let zeta_sq = {
            use crate::jack::SpectralVector;
            let z = SpectralVector::new(&lam, &l);
            KField::sum((1..=4).map(|j| z.value(j).pow(2)))
        };
        let expect = KField::linear_int(3, -2)
            .add(&KField::kappa().mul(&KField::kappa()))
            .scale_rat(&qi(6));
        assert_eq!(zeta_sq, expect);
        // Expand Σ(ζ_j - 1 - κγ)² = ΣU² - 2(1+κγ)ΣU + N(1+κγ)².
        let g = gamma(4, 2, Family::Zero);
        let zeta_sum = {
            use crate::jack::SpectralVector;
            let z = SpectralVector::new(&lam, &l);
            KField::sum((1..=4).map(|j| z.value(j)))
        };
        let one_kg = KField::linear(qi(1), g);
        let derived = zeta_sq
            .sub(&zeta_sum.mul(&one_kg).scale_rat(&qi(2)))
            .add(&one_kg.mul(&one_kg).scale_rat(&qi(4)));
        assert_eq!(derived, cst_eigenvalue(&tab).unwrap());
    }
}
