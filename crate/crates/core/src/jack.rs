//! Construction of the nonsymmetric Jack superpolynomials `J_{α,E}`.
//!
//! `J_{α,E}` is the unique simultaneous eigenfunction of the
//! Cherednik–Dunkl operators with spectral vector
//! `ζ_{α,E}(i) = α_i + 1 + κ c(r_α(i), E)` and leading term
//! `x^α (r_α^{-1} T_E)`.  It is reached from the degree-zero seed
//! `J_{0,E} = T_E` by a deterministic walk: affine steps raise the degree,
//! adjacent steps `(s_i - b)` sort the exponents.  Label moves happen
//! entirely inside the `T_E` recursion, i.e. as early as possible.

use crate::error::{Error, Result};
use crate::kappa::KField;
use crate::perm::Perm;
use crate::superpoly::{Composition, SuperPoly};
use crate::tableaux::{build_t, Family, HookLabel};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Rank permutation `r_α`: position `i` goes to
/// `#{j : α_j > α_i} + #{j ≤ i : α_j = α_i}`, so `r_α α = α⁺` and
/// `r_α = id` exactly on partitions.
pub fn rank_perm(alpha: &Composition) -> Perm {
    let parts = alpha.parts();
    let n = parts.len();
    let mut one_line = Vec::with_capacity(n);
    for i in 0..n {
        let greater = parts.iter().filter(|&&a| a > parts[i]).count();
        let earlier_equal = parts[..=i].iter().filter(|&&a| a == parts[i]).count();
        one_line.push(greater + earlier_equal);
    }
    Perm::from_one_line(&one_line)
}

/// Spectral vector entries split into the integer part `α_i + 1` and the
/// content part `c(r_α(i), E)`; the realized value is
/// `int_part + κ · content_part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralVector {
    entries: Vec<(u32, i64)>,
}

impl SpectralVector {
    pub fn new(alpha: &Composition, label: &HookLabel) -> SpectralVector {
        let r = rank_perm(alpha);
        let entries = (1..=alpha.len())
            .map(|i| (alpha.get(i) + 1, label.content(r.apply(i))))
            .collect();
        SpectralVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn int_part(&self, i: usize) -> u32 {
        self.entries[i - 1].0
    }

    pub fn content_part(&self, i: usize) -> i64 {
        self.entries[i - 1].1
    }

    /// `ζ(i)` as a field element.
    pub fn value(&self, i: usize) -> KField {
        let (a, c) = self.entries[i - 1];
        KField::linear_int(a as i64, c)
    }

    pub fn values(&self) -> Vec<KField> {
        (1..=self.len()).map(|i| self.value(i)).collect()
    }

    /// Entries as pairs, for permutation-invariance checks.
    pub fn pairs(&self) -> &[(u32, i64)] {
        &self.entries
    }
}

/// `b_{α,E}(i) = κ / (ζ(i) - ζ(i+1))`.
pub fn step_coeff(alpha: &Composition, label: &HookLabel, i: usize) -> Result<KField> {
    let zeta = SpectralVector::new(alpha, label);
    let denom = zeta.value(i).sub(&zeta.value(i + 1));
    if denom.is_zero() {
        return Err(Error::DegenerateSpectralGap);
    }
    KField::kappa().div(&denom)
}

type NodeKey = (Vec<u32>, Family, u32);

/// Concurrent memo table for built nodes with a size budget.  Eviction
/// drops the least recently used entry; all writers compute identical
/// values so racing inserts are benign.
pub struct JackCache {
    inner: Mutex<CacheInner>,
}

struct CacheInner {
    map: HashMap<NodeKey, (Arc<SuperPoly>, u64)>,
    tick: u64,
    budget: usize,
}

impl JackCache {
    pub fn new() -> JackCache {
        JackCache::with_budget(1 << 16)
    }

    pub fn with_budget(budget: usize) -> JackCache {
        JackCache {
            inner: Mutex::new(CacheInner {
                map: HashMap::new(),
                tick: 0,
                budget: budget.max(1),
            }),
        }
    }

    fn key(alpha: &Composition, label: &HookLabel) -> NodeKey {
        (
            alpha.parts().to_vec(),
            label.family(),
            label.set().mask(),
        )
    }

    fn get(&self, key: &NodeKey) -> Option<Arc<SuperPoly>> {
        let mut inner = self.inner.lock().unwrap();
        inner.tick += 1;
        let tick = inner.tick;
        inner.map.get_mut(key).map(|slot| {
            slot.1 = tick;
            slot.0.clone()
        })
    }

    fn put(&self, key: NodeKey, value: Arc<SuperPoly>) {
        let mut inner = self.inner.lock().unwrap();
        inner.tick += 1;
        let tick = inner.tick;
        if inner.map.len() >= inner.budget && !inner.map.contains_key(&key) {
            if let Some(oldest) = inner
                .map
                .iter()
                .min_by_key(|(_, (_, t))| *t)
                .map(|(k, _)| k.clone())
            {
                inner.map.remove(&oldest);
            }
        }
        inner.map.insert(key, (value, tick));
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for JackCache {
    fn default() -> Self {
        JackCache::new()
    }
}

/// Build `J_{α,E}` by the canonical path.
///
/// Recursion: at `α = 0` the polynomial is the embedded `T_E`; when
/// `α_N > 0` the node is an affine shift of its predecessor; otherwise
/// the last positive entry is stepped into the tail with `(s_k - b)`.
pub fn build_jack(alpha: &Composition, label: &HookLabel, cache: &JackCache) -> Arc<SuperPoly> {
    assert_eq!(alpha.len(), label.n(), "composition length must match N");
    let key = JackCache::key(alpha, label);
    if let Some(hit) = cache.get(&key) {
        return hit;
    }
    let n = label.n();
    let result = if alpha.is_zero() {
        Arc::new(SuperPoly::from_fermion(&build_t(label)))
    } else if alpha.get(n) > 0 {
        let prev = alpha.affine_lower().expect("last entry positive");
        let j_prev = build_jack(&prev, label, cache);
        Arc::new(j_prev.affine_shift())
    } else {
        // Last positive entry: α_k > 0 = α_{k+1}, stepping from s_k α.
        let k = (1..n).rev().find(|&k| alpha.get(k) > 0).unwrap();
        let prev = alpha.swapped(k);
        let j_prev = build_jack(&prev, label, cache);
        let b = step_coeff(&prev, label, k).expect("valid nodes have distinct spectra");
        Arc::new(j_prev.apply_si(k).sub(&j_prev.scale(&b)))
    };
    cache.put(key, result.clone());
    result
}

/// Exact check of `U_i p = ζ_{α,E}(i) p` for every `i`.
pub fn verify_eigen(p: &SuperPoly, alpha: &Composition, label: &HookLabel) -> bool {
    let zeta = SpectralVector::new(alpha, label);
    (1..=label.n()).all(|i| p.cherednik(i) == p.scale(&zeta.value(i)))
}
