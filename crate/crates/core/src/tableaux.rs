//! Hook labels, reverse standard Young tableaux, content vectors, and the
//! inductive orthogonal basis `T_E` of both isotypes.
//!
//! The anti-commuting span of degree `m` splits into two irreducible
//! pieces.  Family 0 (shape `(N-m, 1^m)`) is labeled by sets `E` with
//! `#E = m+1` and `N ∈ E`; family 1 (shape `(N-m+1, 1^{m-1})`) by sets
//! with `#E = m-1` and `N ∉ E`.  Each label carries a content vector, and
//! `T_E` is the simultaneous Jucys–Murphy eigenvector with exactly those
//! eigenvalues, normalized by a triangular leading `ψ`/`η` term.

use crate::error::{Error, Result};
use crate::fermion::{psi_vector, sigma, FermionPoly, Subset};
use crate::kappa::qi;
use num::rational::BigRational;
use num::One;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Which of the two hook isotypes a label belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Shape `(N-m, 1^m)`: long row, labels contain `N`.
    Zero,
    /// Shape `(N-m+1, 1^{m-1})`: labels avoid `N`.
    One,
}

impl Family {
    pub fn index(&self) -> u8 {
        match self {
            Family::Zero => 0,
            Family::One => 1,
        }
    }

    pub fn from_index(i: u8) -> Result<Family> {
        match i {
            0 => Ok(Family::Zero),
            1 => Ok(Family::One),
            _ => Err(Error::MalformedInput(format!("family must be 0 or 1, got {}", i))),
        }
    }

    pub fn flip(&self) -> Family {
        match self {
            Family::Zero => Family::One,
            Family::One => Family::Zero,
        }
    }
}

/// A validated basis label: a family together with its subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookLabel {
    family: Family,
    set: Subset,
}

/// Reverse standard Young tableau of hook shape: `row` is row 1 including
/// the corner, `col` is column 1 below the corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rsyt {
    pub row: Vec<usize>,
    pub col: Vec<usize>,
}

impl HookLabel {
    pub fn new(family: Family, set: Subset) -> Result<HookLabel> {
        let n = set.n();
        let label = HookLabel { family, set };
        let m = match family {
            Family::Zero => {
                if !set.contains(n) {
                    return Err(Error::InvalidLabel(format!(
                        "family-0 label {} must contain N = {}",
                        set, n
                    )));
                }
                set.card().checked_sub(1).ok_or_else(|| {
                    Error::InvalidLabel("family-0 label must be nonempty".into())
                })?
            }
            Family::One => {
                if set.contains(n) {
                    return Err(Error::InvalidLabel(format!(
                        "family-1 label {} must not contain N = {}",
                        set, n
                    )));
                }
                set.card() + 1
            }
        };
        if m == 0 || m >= n {
            return Err(Error::InvalidLabel(format!(
                "fermionic degree {} outside 1..{}",
                m,
                n - 1
            )));
        }
        Ok(label)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn set(&self) -> &Subset {
        &self.set
    }

    pub fn n(&self) -> usize {
        self.set.n()
    }

    /// Fermionic degree of the module the label belongs to.
    pub fn m(&self) -> usize {
        match self.family {
            Family::Zero => self.set.card() - 1,
            Family::One => self.set.card() + 1,
        }
    }

    /// Content of position `i`: the column-minus-row coordinate of the cell
    /// of the tableau holding `i`.
    pub fn content(&self, i: usize) -> i64 {
        let e = &self.set;
        match self.family {
            Family::Zero => {
                if e.contains(i) {
                    -(e.count_greater(i) as i64)
                } else {
                    e.complement().count_greater(i) as i64 + 1
                }
            }
            Family::One => {
                if e.contains(i) {
                    -1 - e.count_greater(i) as i64
                } else {
                    e.complement().count_greater(i) as i64
                }
            }
        }
    }

    pub fn content_vector(&self) -> Vec<i64> {
        (1..=self.n()).map(|i| self.content(i)).collect()
    }

    /// The tableau itself; entries `N..1` decrease along row 1 and down
    /// column 1, and the column below the corner carries the label set
    /// (family 0) or exactly the label set (family 1).
    pub fn tableau(&self) -> Rsyt {
        let n = self.n();
        match self.family {
            Family::Zero => {
                let mut row = vec![n];
                let mut ec = self.set.complement().elems();
                ec.reverse();
                row.extend(ec);
                let mut col = self.set.without(n).elems();
                col.reverse();
                Rsyt { row, col }
            }
            Family::One => {
                let mut row: Vec<usize> = self.set.complement().elems();
                row.reverse();
                let mut col = self.set.elems();
                col.reverse();
                Rsyt { row, col }
            }
        }
    }

    /// Labels of a module, in construction order: ascending inversion
    /// statistic for family 0, descending for family 1, ties by mask.
    pub fn enumerate(n: usize, m: usize, family: Family) -> Vec<HookLabel> {
        let card = match family {
            Family::Zero => m + 1,
            Family::One => m - 1,
        };
        let mut labels: Vec<HookLabel> = Subset::all_of_card(n, card)
            .into_iter()
            .filter_map(|s| HookLabel::new(family, s).ok())
            .filter(|l| l.m() == m)
            .collect();
        labels.sort_by_key(|l| {
            let inv = l.set.inversions() as i64;
            let signed = match family {
                Family::Zero => inv,
                Family::One => -inv,
            };
            (signed, l.set.mask())
        });
        labels
    }

    /// The root label of the construction: `{N-m..N}` for family 0 (zero
    /// inversions), `{1..m-1}` for family 1 (maximal inversions).
    pub fn root(n: usize, m: usize, family: Family) -> HookLabel {
        let set = match family {
            Family::Zero => Subset::from_elems(n, &(n - m..=n).collect::<Vec<_>>()).unwrap(),
            Family::One => Subset::from_elems(n, &(1..m).collect::<Vec<_>>()).unwrap(),
        };
        HookLabel::new(family, set).unwrap()
    }

    /// Squared norm of `T_E` under the orthonormal-`φ` form; κ-free and
    /// strictly positive.
    pub fn t_norm_sq(&self) -> BigRational {
        let n = self.n();
        let (base, pairs): (i64, Vec<(usize, usize)>) = match self.family {
            Family::Zero => (
                self.m() as i64 + 1,
                iter_pairs(n, &self.set, &self.set.complement()),
            ),
            Family::One => (
                (n - self.m()) as i64 + 1,
                iter_pairs(n, &self.set.complement(), &self.set),
            ),
        };
        let mut acc = BigRational::from_integer(base.into());
        for (i, j) in pairs {
            let d = self.content(i) - self.content(j);
            let d2 = BigRational::from_integer((d * d).into());
            acc *= BigRational::one() - BigRational::one() / d2;
        }
        acc
    }
}

/// Pairs `(i, j)` with `i ∈ a`, `j ∈ b`, `i < j < N`.
fn iter_pairs(n: usize, a: &Subset, b: &Subset) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in a.elems() {
        for j in b.elems() {
            if i < j && j < n {
                out.push((i, j));
            }
        }
    }
    out
}

type TCache = Mutex<HashMap<HookLabel, Arc<FermionPoly>>>;

fn t_cache() -> &'static TCache {
    static CACHE: OnceLock<TCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The orthogonal basis vector `T_E` with `ω_i T_E = c(i, E) T_E`.
///
/// Family 0 is built inductively up the inversion order from
/// `T_{root} = ψ_{root}`, one adjacent move at a time:
/// `T_{s_i E} = s_i T_E - (c(i,E) - c(i+1,E))^{-1} T_E` whenever
/// `i ∉ E` and `i+1 ∈ E \ {N}`.  Family 1 is the image of the swapped
/// family-0 construction under the duality map, with the sign
/// `(-1)^{N-m} σ(inv(E^C))`.
pub fn build_t(label: &HookLabel) -> Arc<FermionPoly> {
    if let Some(hit) = t_cache().lock().unwrap().get(label) {
        return hit.clone();
    }
    let result = Arc::new(compute_t(label));
    t_cache()
        .lock()
        .unwrap()
        .entry(*label)
        .or_insert(result)
        .clone()
}

fn compute_t(label: &HookLabel) -> FermionPoly {
    let n = label.n();
    match label.family() {
        Family::Zero => {
            let e = label.set();
            // Smallest i < N-1 with i ∈ E, i+1 ∉ E undoes one move.
            let step = (1..n - 1).find(|&i| e.contains(i) && !e.contains(i + 1));
            match step {
                None => psi_vector(e).expect("root label is nonempty"),
                Some(i) => {
                    let prev_set = e.without(i).with(i + 1);
                    let prev = HookLabel::new(Family::Zero, prev_set).unwrap();
                    let t_prev = build_t(&prev);
                    let d = prev.content(i) - prev.content(i + 1);
                    let b = BigRational::one() / BigRational::from_integer(d.into());
                    t_prev.apply_si(i).sub(&t_prev.scale(&b))
                }
            }
        }
        Family::One => {
            let ec = label.set().complement();
            let dual = HookLabel::new(Family::Zero, ec).unwrap();
            let sign = sigma(n - label.m()) as i64 * sigma(ec.inversions()) as i64;
            build_t(&dual).delta_dual().scale(&qi(sign))
        }
    }
}
