//! The symmetric bilinear form and every closed-form norm.
//!
//! The form is pinned down by three axioms: `{φ_E}` is orthonormal in
//! bosonic degree zero, `⟨x_i f, g⟩ = ⟨f, D_i g⟩`, and distinct bosonic
//! degrees pair to zero.  [`pairing`] evaluates it by peeling one `x`
//! factor at a time — a brute-force oracle, deliberately independent of
//! the product formulas it is used to check.
//!
//! The closed forms: `‖J_{λ,E}‖² = |T_E|² P(λ,E)` for partitions,
//! `‖J_{α,E}‖² = ‖J_{α⁺,E}‖² / R(α,E)` in general, the stabilizer-
//! normalized norm of the supersymmetric element, the denominator-free
//! norms of the minimal polynomials, and the torus variant.

use crate::error::{Error, Result};
use crate::jack::{build_jack, rank_perm, JackCache};
use crate::kappa::{qi, KField};
use crate::superpoly::{Composition, SuperPoly};
use crate::supersym::{labeled_tableau, root_sink, stabilizer_order};
use crate::tableaux::{Family, HookLabel};
use num::rational::BigRational;
use num::One;

/// A closed-form norm with optional independent confirmations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormReport {
    pub closed_form: KField,
    /// Value recomputed through the pairing oracle, when requested.
    pub oracle_value: Option<KField>,
    /// For results stated up to a κ-free constant: that constant.
    pub constant_part: Option<BigRational>,
}

/// Bilinear form oracle on superpolynomials.
pub fn pairing(f: &SuperPoly, g: &SuperPoly) -> KField {
    assert_eq!(f.n(), g.n());
    if f.m() != g.m() {
        return KField::zero();
    }
    let fc = f.homogeneous_components();
    let gc = g.homogeneous_components();
    let mut acc = KField::zero();
    for (d, fd) in &fc {
        if let Some(gd) = gc.get(d) {
            acc = acc.add(&pair_homogeneous(fd, gd));
        }
    }
    acc
}

fn pair_homogeneous(f: &SuperPoly, g: &SuperPoly) -> KField {
    if f.is_zero() || g.is_zero() {
        return KField::zero();
    }
    if f.degree() == 0 {
        // Orthonormality of the anti-commuting basis.
        let zero = Composition::zero(f.n());
        let mut acc = KField::zero();
        for ((_, e), c) in f.terms() {
            acc = acc.add(&c.mul(&g.coeff(&zero, e)));
        }
        return acc;
    }
    // Peel the smallest variable occurring in f.
    let i = (1..=f.n())
        .find(|&i| f.terms().any(|((a, _), _)| a.get(i) > 0))
        .expect("positive degree implies an occurring variable");
    let mut divisible = SuperPoly::zero(f.n(), f.m());
    let mut rest = SuperPoly::zero(f.n(), f.m());
    for ((a, e), c) in f.terms() {
        let ai = a.get(i);
        if ai > 0 {
            divisible.add_term(a.with_entry(i, ai - 1), *e, c.clone());
        } else {
            rest.add_term(a.clone(), *e, c.clone());
        }
    }
    let adjoint = pair_homogeneous(&divisible, &g.dunkl(i));
    // `rest` avoids x_1..x_i entirely, so the recursion advances.
    adjoint.add(&pair_homogeneous(&rest, g))
}

fn content_gap(label: &HookLabel, i: usize, j: usize) -> i64 {
    label.content(i) - label.content(j)
}

/// `P(λ,E) = Π_i (1+κc(i,E))_{λ_i} · Π_{i<j} Π_{l=1}^{λ_i-λ_j}
/// (1 - (κ/(l+κ(c(i,E)-c(j,E))))²)` for a partition `λ`.
pub fn p_product(lambda: &Composition, label: &HookLabel) -> KField {
    assert!(lambda.is_partition(), "p_product expects a partition");
    let n = label.n();
    let kappa = KField::kappa();
    let mut acc = KField::one();
    for i in 1..=n {
        let base = KField::linear_int(1, label.content(i));
        acc = acc.mul(&base.rising(lambda.get(i) as usize));
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            let gap = content_gap(label, i, j);
            let (li, lj) = (lambda.get(i), lambda.get(j));
            for l in 1..=li.saturating_sub(lj) {
                let denom = KField::linear_int(l as i64, gap);
                let ratio = kappa.div(&denom).unwrap();
                acc = acc.mul(&KField::one().sub(&ratio.mul(&ratio)));
            }
        }
    }
    acc
}

/// `R_z(α,E)`: product over inverted pairs `i<j` with `α_i < α_j` of
/// `1 + (-1)^z κ/(α_j - α_i + κ(c(r_α(j),E) - c(r_α(i),E)))`.
pub fn r_product(z: u8, alpha: &Composition, label: &HookLabel) -> KField {
    let n = label.n();
    let r = rank_perm(alpha);
    let kappa = KField::kappa();
    let sign = if z % 2 == 0 { 1 } else { -1 };
    let mut acc = KField::one();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if alpha.get(i) < alpha.get(j) {
                let denom = KField::linear_int(
                    (alpha.get(j) - alpha.get(i)) as i64,
                    content_gap(label, r.apply(j), r.apply(i)),
                );
                let ratio = kappa.div(&denom).unwrap().scale_rat(&qi(sign));
                acc = acc.mul(&KField::one().add(&ratio));
            }
        }
    }
    acc
}

/// Content analog `C_z` of the rearrangement product; κ-free.
/// Family 0 runs over `(i,j) ∈ E × E^C` with `i < j < N`, family 1 over
/// `(i,j) ∈ E^C × E`.
pub fn c_product(z: u8, label: &HookLabel) -> KField {
    KField::from_rational(c_product_rat(z, label))
}

pub(crate) fn c_product_rat(z: u8, label: &HookLabel) -> BigRational {
    let n = label.n();
    let sign = if z % 2 == 0 { 1i64 } else { -1 };
    let (a, b) = match label.family() {
        Family::Zero => (*label.set(), label.set().complement()),
        Family::One => (label.set().complement(), *label.set()),
    };
    let mut acc = BigRational::one();
    for i in a.elems() {
        for j in b.elems() {
            if i < j && j < n {
                let gap = content_gap(label, i, j);
                acc *= BigRational::one() + BigRational::new(sign.into(), gap.into());
            }
        }
    }
    acc
}

/// `‖J_{α,E}‖² = |T_E|² P(α⁺,E) / (R_0(α,E) R_1(α,E))`, optionally
/// confirmed against the oracle.
pub fn jack_norm(
    alpha: &Composition,
    label: &HookLabel,
    with_oracle: Option<&JackCache>,
) -> NormReport {
    let lambda = alpha.sorted_desc();
    let r = r_product(0, alpha, label).mul(&r_product(1, alpha, label));
    let closed = KField::from_rational(label.t_norm_sq())
        .mul(&p_product(&lambda, label))
        .div(&r)
        .unwrap();
    let oracle_value = with_oracle.map(|cache| {
        let j = build_jack(alpha, label, cache);
        pairing(&j, &j)
    });
    NormReport {
        closed_form: closed,
        oracle_value,
        constant_part: None,
    }
}

/// Torus norm `⟨J,J⟩_T = ‖J‖² / Π_i (1+κc(i,E))_{α⁺_i}`.
pub fn torus_norm(alpha: &Composition, label: &HookLabel) -> KField {
    let lambda = alpha.sorted_desc();
    let mut denom = KField::one();
    for i in 1..=label.n() {
        let base = KField::linear_int(1, label.content(i));
        denom = denom.mul(&base.rising(lambda.get(i) as usize));
    }
    jack_norm(alpha, label, None)
        .closed_form
        .div(&denom)
        .unwrap()
}

/// `ν_k`: `m+1` for family 0, `N-m+1` for family 1.
pub fn nu(label: &HookLabel) -> i64 {
    match label.family() {
        Family::Zero => label.m() as i64 + 1,
        Family::One => (label.n() - label.m()) as i64 + 1,
    }
}

/// Norm of the supersymmetric element attached to a column-strict
/// labeled tableau:
/// `ν_k (N!/#G_{E_R}) C_0(E_R) P(λ,E_R) / (R_0(λ⁻,E_R) C_1(E_S))`.
pub fn supersym_norm(
    lambda: &Composition,
    label: &HookLabel,
    with_oracle: Option<&JackCache>,
) -> Result<NormReport> {
    if !lambda.is_partition() {
        return Err(Error::MalformedInput(
            "supersym_norm expects a partition".into(),
        ));
    }
    let tab = labeled_tableau(lambda, label);
    if !tab.is_column_strict() {
        return Err(Error::NotColumnStrict);
    }
    let (root, sink) = root_sink(lambda, label)?;
    let root_label = HookLabel::new(label.family(), root)?;
    let sink_label = HookLabel::new(label.family(), sink)?;
    let n = label.n();
    let factorial: BigRational = (1..=n as i64).map(qi).product();
    let stab = qi(stabilizer_order(&root_label, lambda) as i64);
    let prefactor = qi(nu(label)) * factorial / stab * c_product_rat(0, &root_label)
        / c_product_rat(1, &sink_label);
    let closed = p_product(lambda, &root_label)
        .div(&r_product(0, &lambda.sorted_asc(), &root_label))
        .unwrap()
        .scale_rat(&prefactor);
    let oracle_value = with_oracle.map(|cache| {
        let p = crate::supersym::build_supersymmetric(
            lambda,
            label,
            crate::supersym::Normalization::Paper,
            cache,
        )
        .expect("column-strict checked above");
        pairing(&p, &p)
    });
    Ok(NormReport {
        closed_form: closed,
        oracle_value,
        constant_part: None,
    })
}

/// Utility product `Π_0(n,d) = (1 - κ/(n+dκ)) Π_{l=1}^{n-1}
/// (1 - (κ/(l+dκ))²)`.
pub fn pi0(n: usize, d: i64) -> KField {
    assert!(n >= 1);
    let kappa = KField::kappa();
    let mut acc = KField::one().sub(&kappa.div(&KField::linear_int(n as i64, d)).unwrap());
    for l in 1..n {
        let ratio = kappa.div(&KField::linear_int(l as i64, d)).unwrap();
        acc = acc.mul(&KField::one().sub(&ratio.mul(&ratio)));
    }
    acc
}

/// Norm of a minimal supersymmetric polynomial, split into the κ-free
/// constant and the denominator-free κ-dependent product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalNormReport {
    /// The κ-free constant `∗ = ν N! C_0(E_R) / (#G_{E_R} C_1(E_S))`.
    pub constant: BigRational,
    /// The κ-dependent product; its canonical denominator is constant.
    pub kappa_part: KField,
    /// `constant · kappa_part`, equal to the general closed form.
    pub total: KField,
    /// The partition realizing the minimal tableau.
    pub lambda: Composition,
    pub root: HookLabel,
    pub sink: HookLabel,
}

/// The minimal family: column values are the staircase `m, m-1, ..., 0`
/// and the row holds `k` copies of `s+1` followed by `M-1-k` copies of
/// `s`, where `M = N-m`.  Admissible: `0 ≤ s ≤ m-1`, `0 ≤ k ≤ M-2`.
pub fn minimal_norm(n: usize, m: usize, s: usize, k: usize) -> Result<MinimalNormReport> {
    if m == 0 || m >= n {
        return Err(Error::ParameterOutOfRange(format!(
            "m = {} outside 1..{}",
            m,
            n as i64 - 1
        )));
    }
    let big_m = n - m;
    if s + 1 > m {
        return Err(Error::ParameterOutOfRange(format!(
            "s = {} exceeds m-1 = {}",
            s,
            m as i64 - 1
        )));
    }
    if big_m < 2 || k > big_m - 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "k = {} exceeds M-2 = {}",
            k,
            big_m as i64 - 2
        )));
    }
    // All values: staircase column {m..0} plus the row multiset.
    let mut values: Vec<u32> = (0..=m as u32).collect();
    values.extend(std::iter::repeat((s + 1) as u32).take(k));
    values.extend(std::iter::repeat(s as u32).take(big_m - 1 - k));
    values.sort_unstable_by(|a, b| b.cmp(a));
    let lambda = Composition::new(values);

    let label = minimal_label(n, m, &lambda)?;
    let report = supersym_norm(&lambda, &label, None)?;
    let (root, sink) = root_sink(&lambda, &label)?;
    let root = HookLabel::new(Family::Zero, root)?;
    let sink = HookLabel::new(Family::Zero, sink)?;

    let constant = qi(nu(&root)) * (1..=n as i64).map(qi).product::<BigRational>()
        / qi(stabilizer_order(&root, &lambda) as i64)
        * c_product_rat(0, &root)
        / c_product_rat(1, &sink);
    let kappa_part = minimal_kappa_product(n, m, s, k);
    let total = kappa_part.scale_rat(&constant);
    // The telescoped product must agree with the general closed form.
    assert_eq!(
        total, report.closed_form,
        "telescoped minimal norm disagrees for (N,m,s,k) = ({},{},{},{})",
        n, m, s, k
    );
    Ok(MinimalNormReport {
        constant,
        kappa_part,
        total,
        lambda,
        root,
        sink,
    })
}

/// A family-0 label whose labeled tableau is the minimal one: the column
/// holds the staircase values `m..0`, so pick one index per staircase
/// value (the corner takes value 0 automatically).
fn minimal_label(n: usize, m: usize, lambda: &Composition) -> Result<HookLabel> {
    let mut elems = vec![n];
    for v in 1..=m as u32 {
        let idx = (1..=n)
            .rev()
            .find(|&i| lambda.get(i) == v && !elems.contains(&i))
            .ok_or_else(|| Error::ParameterOutOfRange("missing staircase value".into()))?;
        elems.push(idx);
    }
    HookLabel::new(Family::Zero, crate::fermion::Subset::from_elems(n, &elems)?)
}

/// The telescoped κ-dependent product of the minimal norm (including the
/// leading `s!`).
fn minimal_kappa_product(n: usize, m: usize, s: usize, k: usize) -> KField {
    let big_m = (n - m) as i64;
    let (mi, si, ki, ni) = (m as i64, s as i64, k as i64, n as i64);
    let s_fact: BigRational = (1..=si).map(qi).product();
    let mut acc = KField::from_rational(s_fact);
    if k >= 1 {
        for i in 1..ki {
            acc = acc.mul(&KField::linear_int(1, i));
        }
        for j in 1..=(big_m - ki - 2).max(0) {
            acc = acc.mul(&KField::linear_int(1, j).rising(s));
        }
        for l in (big_m - ki - 1)..=(big_m - 2) {
            acc = acc.mul(&KField::linear_int(2, l).rising(s));
        }
        for i in 2..=mi {
            acc = acc.mul(&KField::linear_int(1, -i).rising(i as usize - 1));
        }
        acc = acc.mul(&KField::linear_int(1, -ni).rising(m - s - 1));
        acc = acc.mul(&KField::linear_int(mi - si + 1, -(mi + 1)).rising(s));
        acc.mul(&KField::linear_int(mi - si, -(ni - ki)))
    } else {
        for j in 1..=(big_m - 2) {
            acc = acc.mul(&KField::linear_int(1, j).rising(s));
        }
        for i in 2..=mi {
            acc = acc.mul(&KField::linear_int(1, -i).rising(i as usize - 1));
        }
        acc = acc.mul(&KField::linear_int(1, -ni).rising(m - s));
        acc.mul(&KField::linear_int(mi - si + 1, -(mi + 1)).rising(s))
    }
}
