//! Orbit modules and the supersymmetric / antisymmetric elements.
//!
//! Replacing each entry `i` of the tableau `Y_E` by `α⁺_i` produces the
//! labeled tableau `⌊α,E⌋`.  All nodes sharing one labeled tableau span
//! an orbit module; it contains an `S_N`-invariant exactly when the
//! tableau is column-strict, and that invariant is
//! `p_{λ,E} = Σ (R_1(β,F)/C_1(F)) J_{β,F}` over the orbit.  The
//! antisymmetric companion comes from the duality map after flipping the
//! sign of κ.

use crate::batch;
use crate::error::{Error, Result};
use crate::fermion::Subset;
use crate::jack::{build_jack, JackCache};
use crate::norms::{c_product_rat, r_product};
use crate::superpoly::{Composition, SuperPoly};
use crate::tableaux::{Family, HookLabel};
use num::rational::BigRational;

/// Values of a hook tableau: the corner, row 1 after the corner, and
/// column 1 below the corner.  Rows were weakly increasing and columns
/// weakly increasing (downward) in every tableau arising from a label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTableau {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub corner: u32,
    pub row: Vec<u32>,
    pub col: Vec<u32>,
}

impl LabeledTableau {
    /// Entries in column 1 (corner first) are pairwise distinct, i.e.
    /// strictly increasing downward.
    pub fn is_column_strict(&self) -> bool {
        let mut prev = self.corner;
        for &v in &self.col {
            if v <= prev {
                return false;
            }
            prev = v;
        }
        true
    }

    /// Entries in row 1 (corner first) are pairwise distinct.
    pub fn is_row_strict(&self) -> bool {
        let mut prev = self.corner;
        for &v in &self.row {
            if v <= prev {
                return false;
            }
            prev = v;
        }
        true
    }

    /// Total of all entries (the bosonic degree of the orbit).
    pub fn degree(&self) -> usize {
        self.corner as usize
            + self.row.iter().map(|&v| v as usize).sum::<usize>()
            + self.col.iter().map(|&v| v as usize).sum::<usize>()
    }
}

/// `⌊α,E⌋`: replace entry `i` of `Y_E` by `α⁺_i`.
pub fn labeled_tableau(alpha: &Composition, label: &HookLabel) -> LabeledTableau {
    let sorted = alpha.sorted_desc();
    let t = label.tableau();
    let value = |entry: usize| sorted.get(entry);
    LabeledTableau {
        family: label.family(),
        n: label.n(),
        m: label.m(),
        corner: value(t.row[0]),
        row: t.row[1..].iter().map(|&e| value(e)).collect(),
        col: t.col.iter().map(|&e| value(e)).collect(),
    }
}

/// Maximal intervals `[a, b]` (1-based) of equal values of a partition.
fn value_classes(lambda: &Composition) -> Vec<(usize, usize)> {
    let n = lambda.len();
    let mut classes = Vec::new();
    let mut a = 1;
    for i in 1..=n {
        if i == n || lambda.get(i + 1) != lambda.get(i) {
            classes.push((a, i));
            a = i + 1;
        }
    }
    classes
}

/// Non-corner column entries of `Y_E` as a set: `E \ {N}` for family 0,
/// `E` itself for family 1.
fn column_set(label: &HookLabel) -> Subset {
    match label.family() {
        Family::Zero => label.set().without(label.n()),
        Family::One => *label.set(),
    }
}

/// All sets `F` with `⌊λ,F⌋ = ⌊λ,E⌋`, ascending by bitmask.  Two labels
/// share a tableau exactly when each value class of `λ` contributes the
/// same number of elements to the column.
pub fn orbit_sets(lambda: &Composition, label: &HookLabel) -> Result<Vec<Subset>> {
    if !lambda.is_partition() {
        return Err(Error::MalformedInput("orbit expects a partition".into()));
    }
    let n = label.n();
    let col = column_set(label);
    let classes = value_classes(lambda);
    let mut choices: Vec<Vec<Vec<usize>>> = Vec::new();
    for &(a, b) in &classes {
        let members: Vec<usize> = (a..=b).filter(|&i| i != n).collect();
        let want = (a..=b).filter(|&i| col.contains(i)).count();
        choices.push(combinations(&members, want));
    }
    let mut sets = Vec::new();
    let mut stack = vec![0usize; classes.len()];
    'outer: loop {
        let mut elems: Vec<usize> = Vec::new();
        for (ci, &pick) in stack.iter().enumerate() {
            elems.extend_from_slice(&choices[ci][pick]);
        }
        match label.family() {
            Family::Zero => elems.push(n),
            Family::One => {}
        }
        sets.push(Subset::from_elems(n, &elems)?);
        // odometer increment
        for ci in (0..stack.len()).rev() {
            stack[ci] += 1;
            if stack[ci] < choices[ci].len() {
                continue 'outer;
            }
            stack[ci] = 0;
            if ci == 0 {
                break 'outer;
            }
        }
        if stack.iter().all(|&s| s == 0) {
            break;
        }
    }
    sets.sort_by_key(|s| s.mask());
    sets.dedup();
    Ok(sets)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k > items.len() {
        return vec![];
    }
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All orbit nodes `(β, F)`: every rearrangement of `λ` with every set.
pub fn orbit_nodes(
    lambda: &Composition,
    label: &HookLabel,
) -> Result<Vec<(Composition, Subset)>> {
    let sets = orbit_sets(lambda, label)?;
    let mut nodes = Vec::new();
    for beta in lambda.rearrangements() {
        for f in &sets {
            nodes.push((beta.clone(), *f));
        }
    }
    Ok(nodes)
}

/// The inversion-extremal labels of the orbit: `(root, sink)`.  For
/// family 0 the root minimizes `inv`; for family 1 the roles reverse.
pub fn root_sink(lambda: &Composition, label: &HookLabel) -> Result<(Subset, Subset)> {
    let sets = orbit_sets(lambda, label)?;
    let min = sets
        .iter()
        .min_by_key(|s| (s.inversions(), s.mask()))
        .copied()
        .expect("orbit is nonempty");
    let max = sets
        .iter()
        .max_by_key(|s| (s.inversions(), u32::MAX - s.mask()))
        .copied()
        .expect("orbit is nonempty");
    Ok(match label.family() {
        Family::Zero => (min, max),
        Family::One => (max, min),
    })
}

/// Order of the stabilizer of `T_{E_R}` inside the stabilizer of `λ`:
/// each value class contributes `(len)!` when it meets no non-corner
/// column cell and `(len-1)!` when it contains one.
pub fn stabilizer_order(label: &HookLabel, lambda: &Composition) -> u64 {
    let col = column_set(label);
    let mut order: u64 = 1;
    for (a, b) in value_classes(lambda) {
        let len = b - a + 1;
        let in_col = (a..=b).filter(|&i| col.contains(i) && i != label.n()).count();
        let free = len - in_col;
        order *= (1..=free as u64).product::<u64>();
    }
    order
}

/// Normalization of the supersymmetric element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Coefficient of `J_{β,F}` is `R_1(β,F)/C_1(F)`.
    Paper,
    /// Rescaled so the `J_{λ,E_R}` coefficient is 1.
    Monic,
}

/// The supersymmetric polynomial of a column-strict labeled tableau.
pub fn build_supersymmetric(
    lambda: &Composition,
    label: &HookLabel,
    normalization: Normalization,
    cache: &JackCache,
) -> Result<SuperPoly> {
    if !lambda.is_partition() {
        return Err(Error::MalformedInput(
            "build_supersymmetric expects a partition".into(),
        ));
    }
    let tab = labeled_tableau(lambda, label);
    if !tab.is_column_strict() {
        return Err(Error::NotColumnStrict);
    }
    let nodes = orbit_nodes(lambda, label)?;
    let family = label.family();
    let pieces = batch::map(&nodes, |(beta, f)| {
        let node_label = HookLabel::new(family, *f).expect("orbit sets are valid labels");
        let coeff = r_product(1, beta, &node_label)
            .scale_rat(&(BigRational::from_integer(1.into()) / c_product_rat(1, &node_label)));
        build_jack(beta, &node_label, cache).scale(&coeff)
    });
    let mut p = SuperPoly::zero(label.n(), label.m());
    for piece in pieces {
        p = p.add(&piece);
    }
    if normalization == Normalization::Monic {
        let (root, _) = root_sink(lambda, label)?;
        let root_label = HookLabel::new(family, root)?;
        p = p.scale_rat(&c_product_rat(1, &root_label));
    }
    Ok(p)
}

/// Superpartition `(Λ_1 > ... > Λ_m; Λ_{m+1} ≥ ... ≥ Λ_N)` read off a
/// column-strict tableau.  The family is recoverable from the parts:
/// `Λ_m > Λ_N` for family 0 and `Λ_m ≤ Λ_N` for family 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superpartition {
    pub strict: Vec<u32>,
    pub weak: Vec<u32>,
}

impl Superpartition {
    pub fn family(&self) -> Family {
        let lm = *self.strict.last().expect("m >= 1");
        let ln = *self.weak.last().expect("N > m");
        if lm > ln {
            Family::Zero
        } else {
            Family::One
        }
    }
}

pub fn superpartition_of(tab: &LabeledTableau) -> Result<Superpartition> {
    if !tab.is_column_strict() {
        return Err(Error::NotColumnStrict);
    }
    let m = tab.m;
    let mut strict = Vec::with_capacity(m);
    let mut weak = Vec::new();
    match tab.family {
        Family::Zero => {
            // Λ_i = cell [m+2-i, 1] for i ≤ m, then row 1 right-to-left.
            for i in 1..=m {
                strict.push(tab.col[m - i]);
            }
            let mut row = tab.row.clone();
            row.reverse();
            weak.extend(row);
            weak.push(tab.corner);
        }
        Family::One => {
            for i in 1..m {
                strict.push(tab.col[m - 1 - i]);
            }
            strict.push(tab.corner);
            let mut row = tab.row.clone();
            row.reverse();
            weak.extend(row);
        }
    }
    Ok(Superpartition { strict, weak })
}

/// Candidate generators of the supersymmetric polynomials over the ring
/// of symmetric polynomials: tableaux whose column is the full staircase
/// `0..h` and whose row values stay `≤ h`, where `h` is the column
/// height.  Their degree generating function is `Q_{N,m}` (family 0)
/// resp. `Q_{N,m-1}` (family 1).  Whether they actually generate freely
/// is open; [`generator_independence_evidence`] checks linear
/// independence at small sizes as evidence only.
pub fn generator_tableaux(n: usize, m: usize, family: Family) -> Vec<LabeledTableau> {
    let (col_cells, row_cells) = match family {
        Family::Zero => (m, n - m - 1),
        Family::One => (m - 1, n - m),
    };
    let height = col_cells as u32;
    let mut out = Vec::new();
    let mut row = vec![0u32; row_cells];
    loop {
        out.push(LabeledTableau {
            family,
            n,
            m,
            corner: 0,
            row: row.clone(),
            col: (1..=height).collect(),
        });
        // next weakly increasing tuple with values <= height
        let mut i = row_cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if row[i] < height {
                row[i] += 1;
                for j in i + 1..row_cells {
                    row[j] = row[i];
                }
                break;
            }
        }
    }
}

/// Partition realizing a labeled tableau (all its values, sorted), plus
/// one label whose tableau it is.
pub fn tableau_to_node(tab: &LabeledTableau) -> Result<(Composition, HookLabel)> {
    let mut values: Vec<u32> = Vec::with_capacity(tab.n);
    values.push(tab.corner);
    values.extend(&tab.row);
    values.extend(&tab.col);
    values.sort_unstable_by(|a, b| b.cmp(a));
    let lambda = Composition::new(values);
    // Assign column values to indices: for each column value pick the
    // largest unused index of that value class; N is the corner.
    let n = tab.n;
    let mut used = vec![n];
    for &v in &tab.col {
        let idx = (1..n)
            .rev()
            .find(|&i| lambda.get(i) == v && !used.contains(&i))
            .ok_or_else(|| Error::MalformedInput("tableau values inconsistent".into()))?;
        used.push(idx);
    }
    let label = match tab.family {
        Family::Zero => HookLabel::new(Family::Zero, Subset::from_elems(n, &used)?)?,
        Family::One => {
            let col_only: Vec<usize> = used[1..].to_vec();
            HookLabel::new(Family::One, Subset::from_elems(n, &col_only)?)?
        }
    };
    Ok((lambda, label))
}

/// Linear-independence evidence for the candidate generators: build every
/// generator polynomial up to `max_degree`, evaluate coefficients at a
/// generic rational κ, and report (rank, count) of the whole family.
pub fn generator_independence_evidence(
    n: usize,
    m: usize,
    family: Family,
    max_degree: usize,
    cache: &JackCache,
) -> Result<(usize, usize)> {
    use num::Zero;
    let kappa0 = crate::kappa::qq(1, 2 * n as i64 + 1);
    let mut rows: Vec<std::collections::BTreeMap<(Composition, Subset), BigRational>> = vec![];
    for tab in generator_tableaux(n, m, family) {
        if tab.degree() > max_degree {
            continue;
        }
        let (lambda, label) = tableau_to_node(&tab)?;
        let p = build_supersymmetric(&lambda, &label, Normalization::Paper, cache)?;
        let mut row = std::collections::BTreeMap::new();
        for ((a, e), c) in p.terms() {
            let v = c.eval(&kappa0).map_err(|_| {
                Error::MalformedInput("pole at the chosen generic point".into())
            })?;
            if !v.is_zero() {
                row.insert((a.clone(), *e), v);
            }
        }
        rows.push(row);
    }
    let count = rows.len();
    // Gaussian elimination over Q on the sparse rows.
    let mut rank = 0usize;
    let mut pivots: Vec<((Composition, Subset), std::collections::BTreeMap<(Composition, Subset), BigRational>)> = vec![];
    for mut row in rows {
        for (key, pivot_row) in &pivots {
            if let Some(c) = row.get(key).cloned() {
                let lead = pivot_row.get(key).unwrap().clone();
                let factor = c / lead;
                for (k, v) in pivot_row {
                    let delta = &factor * v;
                    let entry = row.entry(k.clone()).or_insert_with(BigRational::zero);
                    *entry -= delta;
                    if entry.is_zero() {
                        row.remove(k);
                    }
                }
            }
        }
        if let Some(key) = row.keys().next().cloned() {
            pivots.push((key, row));
            rank += 1;
        }
    }
    Ok((rank, count))
}

/// Antisymmetric element of the orbit module of `⌊λ,E⌋`, defined when the
/// tableau is row-strict: build the supersymmetric element of the
/// complementary module, flip κ, and apply the duality map.  The result
/// satisfies `s_i q = -q` for every `i < N`.
pub fn build_antisymmetric(
    lambda: &Composition,
    label: &HookLabel,
    cache: &JackCache,
) -> Result<SuperPoly> {
    if !lambda.is_partition() {
        return Err(Error::MalformedInput(
            "build_antisymmetric expects a partition".into(),
        ));
    }
    let tab = labeled_tableau(lambda, label);
    if !tab.is_row_strict() {
        return Err(Error::NotRowStrict);
    }
    let dual = HookLabel::new(label.family().flip(), label.set().complement())?;
    debug_assert!(labeled_tableau(lambda, &dual).is_column_strict());
    let p = build_supersymmetric(lambda, &dual, Normalization::Paper, cache)?;
    Ok(p.subst_neg_kappa().delta_dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kappa::{qi, KField};

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn label(n: usize, family: Family, elems: &[usize]) -> HookLabel {
        HookLabel::new(family, Subset::from_elems(n, elems).unwrap()).unwrap()
    }

    #[test]
    fn labeled_tableau_worked_example() {
        // N=8, m=3, E={2,5,7,8}, α=(3,5,6,2,2,1,4,4):
        // row [1,2,4,4,6], column [2,3,5].
        let l = label(8, Family::Zero, &[2, 5, 7, 8]);
        let alpha = comp(&[3, 5, 6, 2, 2, 1, 4, 4]);
        let tab = labeled_tableau(&alpha, &l);
        assert_eq!(tab.corner, 1);
        assert_eq!(tab.row, vec![2, 4, 4, 6]);
        assert_eq!(tab.col, vec![2, 3, 5]);
        assert!(tab.is_column_strict());
        assert!(!tab.is_row_strict());
    }

    #[test]
    fn zero_composition_tableau_never_strict() {
        let l = label(5, Family::Zero, &[3, 4, 5]);
        let tab = labeled_tableau(&Composition::zero(5), &l);
        assert!(!tab.is_column_strict());
        assert_eq!(tab.corner, 0);
        assert!(tab.col.iter().all(|&v| v == 0));
    }

    #[test]
    fn orbit_sixteen_sets_worked_example() {
        // N=10, m=3, E={1,4,7,10}, α=(3,3,2,2,2,2,1,1,0,0): 16 sets,
        // root {2,6,8,10}, sink {1,3,7,10}.
        let l = label(10, Family::Zero, &[1, 4, 7, 10]);
        let alpha = comp(&[3, 3, 2, 2, 2, 2, 1, 1, 0, 0]);
        let sets = orbit_sets(&alpha, &l).unwrap();
        assert_eq!(sets.len(), 16);
        let (root, sink) = root_sink(&alpha, &l).unwrap();
        assert_eq!(root.elems(), vec![2, 6, 8, 10]);
        assert_eq!(sink.elems(), vec![1, 3, 7, 10]);
        for f in &sets {
            assert!(root.inversions() <= f.inversions());
            assert!(f.inversions() <= sink.inversions());
        }
    }

    #[test]
    fn orbit_single_set_for_distinct_values() {
        // All λ-values distinct: the set is pinned entirely.
        let l = label(4, Family::Zero, &[2, 3, 4]);
        let lam = comp(&[3, 2, 1, 0]);
        let sets = orbit_sets(&lam, &l).unwrap();
        assert_eq!(sets, vec![*l.set()]);
        let (root, sink) = root_sink(&lam, &l).unwrap();
        assert_eq!(root, *l.set());
        assert_eq!(sink, *l.set());
    }

    #[test]
    fn orbit_spectra_are_permutations() {
        use crate::jack::SpectralVector;
        let l = label(4, Family::Zero, &[1, 3, 4]);
        let lam = comp(&[2, 1, 1, 0]);
        let reference = {
            let mut v = SpectralVector::new(&lam, &l).pairs().to_vec();
            v.sort_unstable();
            v
        };
        for (beta, f) in orbit_nodes(&lam, &l).unwrap() {
            let node = HookLabel::new(Family::Zero, f).unwrap();
            let mut v = SpectralVector::new(&beta, &node).pairs().to_vec();
            v.sort_unstable();
            assert_eq!(v, reference);
        }
    }

    #[test]
    fn stabilizer_examples() {
        // λ strictly decreasing: trivial stabilizer.
        let l = label(4, Family::Zero, &[2, 3, 4]);
        assert_eq!(stabilizer_order(&l, &comp(&[3, 2, 1, 0])), 1);
        // Worked §5-style example: E_R={1,3,4}, λ=(2,1,1,0): order 1.
        let root = label(4, Family::Zero, &[1, 3, 4]);
        assert_eq!(stabilizer_order(&root, &comp(&[2, 1, 1, 0])), 1);
        // Row-only repeats contribute full factorials.
        let l5 = label(5, Family::Zero, &[4, 5]);
        // λ = (1,1,1,0,0): class {1,2,3} row-only except col cell 4? col = {4}.
        assert_eq!(stabilizer_order(&l5, &comp(&[1, 1, 1, 0, 0])), 3 * 2 * 1 * 1);
    }

    #[test]
    fn supersymmetric_invariance_small() {
        let cache = JackCache::new();
        let l = label(4, Family::Zero, &[1, 3, 4]);
        let lam = comp(&[2, 1, 1, 0]);
        let p = build_supersymmetric(&lam, &l, Normalization::Paper, &cache).unwrap();
        assert!(!p.is_zero());
        for i in 1..4 {
            assert_eq!(p.apply_si(i), p, "s_{} fixes p", i);
        }
    }

    #[test]
    fn supersymmetric_rejects_non_strict() {
        let cache = JackCache::new();
        let l = label(4, Family::Zero, &[2, 3, 4]);
        let lam = comp(&[2, 1, 1, 0]);
        assert_eq!(
            build_supersymmetric(&lam, &l, Normalization::Paper, &cache).unwrap_err(),
            Error::NotColumnStrict
        );
    }

    #[test]
    fn monic_normalization_scales_root_coefficient() {
        let cache = JackCache::new();
        let l = label(4, Family::Zero, &[1, 3, 4]);
        let lam = comp(&[2, 1, 1, 0]);
        let paper = build_supersymmetric(&lam, &l, Normalization::Paper, &cache).unwrap();
        let monic = build_supersymmetric(&lam, &l, Normalization::Monic, &cache).unwrap();
        let (root, _) = root_sink(&lam, &l).unwrap();
        let root_label = HookLabel::new(Family::Zero, root).unwrap();
        let scale = KField::from_rational(c_product_rat(1, &root_label));
        assert_eq!(paper.scale(&scale), monic);
    }

    #[test]
    fn superpartition_examples() {
        let l = label(4, Family::Zero, &[1, 3, 4]);
        let tab = labeled_tableau(&comp(&[2, 1, 1, 0]), &l);
        let sp = superpartition_of(&tab).unwrap();
        assert_eq!(sp.strict, vec![2, 1]);
        assert_eq!(sp.weak, vec![1, 0]);
        assert_eq!(sp.family(), Family::Zero);
        // Zero weak part.
        let l2 = label(4, Family::Zero, &[1, 2, 4]);
        let tab2 = labeled_tableau(&comp(&[2, 1, 0, 0]), &l2);
        let sp2 = superpartition_of(&tab2).unwrap();
        assert_eq!(sp2.strict, vec![2, 1]);
        assert_eq!(sp2.weak, vec![0, 0]);
    }

    #[test]
    fn superpartition_family1_example() {
        // §8.1-style: N=9, m=6 module labeled by E^C = {1,2,5,7,8},
        // λ = (5,4,3,3,3,2,2,1,0); the tableau is column-strict there.
        let l = label(9, Family::One, &[1, 2, 5, 7, 8]);
        let lam = comp(&[5, 4, 3, 3, 3, 2, 2, 1, 0]);
        let tab = labeled_tableau(&lam, &l);
        assert!(tab.is_column_strict());
        let sp = superpartition_of(&tab).unwrap();
        assert_eq!(sp.family(), Family::One);
        assert_eq!(sp.strict.len(), 6);
        assert_eq!(sp.weak.len(), 3);
    }

    #[test]
    fn eigenoperator_sums_on_invariant() {
        // Σ_i U_i^s p = Σ_j ζ(j)^s p for s = 1, 2.
        let cache = JackCache::new();
        let l = label(3, Family::Zero, &[1, 3]);
        let lam = comp(&[1, 0, 0]);
        let p = build_supersymmetric(&lam, &l, Normalization::Paper, &cache).unwrap();
        let (root, _) = root_sink(&lam, &l).unwrap();
        let root_label = HookLabel::new(Family::Zero, root).unwrap();
        let zeta = crate::jack::SpectralVector::new(&lam, &root_label);
        for s in 1..=2usize {
            let mut lhs = SuperPoly::zero(3, 1);
            for i in 1..=3 {
                let mut q = p.clone();
                for _ in 0..s {
                    q = q.cherednik(i);
                }
                lhs = lhs.add(&q);
            }
            let ev = KField::sum((1..=3).map(|j| zeta.value(j).pow(s)));
            assert_eq!(lhs, p.scale(&ev));
        }
    }

    #[test]
    fn group_average_matches_theorem_normalization() {
        // Σ_{w∈S_N} w J_{λ⁻,E_R} = #G_{E_R} C_1(E_S) · p_{λ,E}.
        let cache = JackCache::new();
        let l = label(3, Family::Zero, &[1, 3]);
        let lam = comp(&[1, 1, 0]);
        let tab = labeled_tableau(&lam, &l);
        assert!(tab.is_column_strict());
        let p = build_supersymmetric(&lam, &l, Normalization::Paper, &cache).unwrap();
        let (root, sink) = root_sink(&lam, &l).unwrap();
        let root_label = HookLabel::new(Family::Zero, root).unwrap();
        let sink_label = HookLabel::new(Family::Zero, sink).unwrap();
        let j_root = build_jack(&lam.sorted_asc(), &root_label, &cache);
        let mut total = SuperPoly::zero(3, 1);
        // All six elements of S_3 as words in the generators.
        let words: [&[usize]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];
        for word in words {
            let mut q = (*j_root).clone();
            for &a in word {
                q = q.apply_si(a);
            }
            total = total.add(&q);
        }
        let c = qi(stabilizer_order(&root_label, &lam) as i64)
            * c_product_rat(1, &sink_label);
        assert_eq!(total, p.scale_rat(&c));
    }

    #[test]
    fn antisymmetric_small() {
        let cache = JackCache::new();
        // Row-strict example: N=3, m=1, E={3}? family 0 labels with m=1:
        // need row values strictly increasing.
        let l = label(3, Family::Zero, &[2, 3]);
        let lam = comp(&[1, 0, 0]);
        let tab = labeled_tableau(&lam, &l);
        assert!(tab.is_row_strict());
        let q = build_antisymmetric(&lam, &l, &cache).unwrap();
        assert!(!q.is_zero());
        assert_eq!(q.m(), 1);
        for i in 1..3 {
            assert_eq!(q.apply_si(i), q.scale(&KField::from_int(-1)));
        }
        // Eigenfunction of Σ U_i².
        let mut lhs = SuperPoly::zero(3, 1);
        for i in 1..=3 {
            lhs = lhs.add(&q.cherednik(i).cherednik(i));
        }
        let sets = orbit_sets(&lam, &l).unwrap();
        let node = HookLabel::new(Family::Zero, sets[0]).unwrap();
        let zeta = crate::jack::SpectralVector::new(&lam, &node);
        // Spectral vector is the same for E and E^C after κ → -κ.
        let ev = KField::sum((1..=3).map(|j| zeta.value(j).pow(2)));
        assert_eq!(lhs, q.scale(&ev));
    }

    #[test]
    fn antisymmetric_rejects_non_row_strict() {
        let cache = JackCache::new();
        // λ=(1,1,0,0) with E={3,4} (m=1): row values are [0,1,1].
        let l = label(4, Family::Zero, &[3, 4]);
        let lam = comp(&[1, 1, 0, 0]);
        let tab = labeled_tableau(&lam, &l);
        assert!(!tab.is_row_strict());
        assert_eq!(
            build_antisymmetric(&lam, &l, &cache).unwrap_err(),
            Error::NotRowStrict
        );
    }

    #[test]
    fn generator_degrees_match_q_series() {
        use crate::series::q_series;
        for n in 3..=6usize {
            for m in 1..n {
                for family in [Family::Zero, Family::One] {
                    let tabs = generator_tableaux(n, m, family);
                    let trunc = 40;
                    let series = match family {
                        Family::Zero => q_series(n, m, trunc).unwrap(),
                        Family::One => q_series(n, m - 1, trunc).unwrap(),
                    };
                    let mut counts = vec![0i64; trunc + 1];
                    for t in &tabs {
                        assert!(t.is_column_strict());
                        counts[t.degree()] += 1;
                    }
                    for (d, &c) in counts.iter().enumerate() {
                        assert_eq!(
                            num::BigInt::from(c),
                            series.coeff(d),
                            "N={} m={} {:?} degree {}",
                            n,
                            m,
                            family,
                            d
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn generator_independence_small_evidence() {
        let cache = JackCache::new();
        let (rank, count) =
            generator_independence_evidence(3, 1, Family::Zero, 4, &cache).unwrap();
        assert_eq!(rank, count);
        let (rank, count) =
            generator_independence_evidence(4, 2, Family::One, 4, &cache).unwrap();
        assert_eq!(rank, count);
        assert!(count >= 2);
    }

    #[test]
    fn tableau_to_node_roundtrip() {
        for tab in generator_tableaux(5, 2, Family::Zero) {
            let (lambda, label) = tableau_to_node(&tab).unwrap();
            assert_eq!(labeled_tableau(&lambda, &label), tab);
        }
        for tab in generator_tableaux(5, 2, Family::One) {
            let (lambda, label) = tableau_to_node(&tab).unwrap();
            assert_eq!(labeled_tableau(&lambda, &label), tab);
        }
    }

    #[test]
    fn delta_of_supersymmetric_is_antisymmetric() {
        let cache = JackCache::new();
        let l = label(4, Family::Zero, &[1, 3, 4]);
        let lam = comp(&[2, 1, 1, 0]);
        let p = build_supersymmetric(&lam, &l, Normalization::Paper, &cache).unwrap();
        let q = p.delta_dual();
        for i in 1..4 {
            assert_eq!(q.apply_si(i), q.scale(&KField::from_int(-1)));
        }
    }
}
