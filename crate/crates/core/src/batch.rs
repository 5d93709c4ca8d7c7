//! Data-parallel helpers for independent node builds.
//!
//! Everything here is pure, so distributing work is just a map: with the
//! default `parallel` feature the maps run on the rayon pool, without it
//! they run sequentially and produce bit-identical results.  The
//! explicitly sequential variants stay available under both builds so
//! the bench suite can compare the two paths directly.

use crate::jack::{build_jack, JackCache};
use crate::superpoly::{Composition, SuperPoly};
use crate::tableaux::HookLabel;
use std::sync::Arc;

#[cfg(feature = "parallel")]
pub(crate) fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Build a batch of nodes, in parallel when the `parallel` feature is on.
pub fn build_jack_batch(
    nodes: &[(Composition, HookLabel)],
    cache: &JackCache,
) -> Vec<Arc<SuperPoly>> {
    map(nodes, |(alpha, label)| build_jack(alpha, label, cache))
}

/// Sequential reference path for the same batch.
pub fn build_jack_batch_seq(
    nodes: &[(Composition, HookLabel)],
    cache: &JackCache,
) -> Vec<Arc<SuperPoly>> {
    nodes
        .iter()
        .map(|(alpha, label)| build_jack(alpha, label, cache))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::Subset;
    use crate::tableaux::Family;

    #[test]
    fn parallel_and_sequential_agree() {
        let label =
            HookLabel::new(Family::Zero, Subset::from_elems(3, &[2, 3]).unwrap()).unwrap();
        let nodes: Vec<(Composition, HookLabel)> = [
            [1u32, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [2, 0, 1],
        ]
        .iter()
        .map(|p| (Composition::new(p.to_vec()), label))
        .collect();
        let par = build_jack_batch(&nodes, &JackCache::new());
        let seq = build_jack_batch_seq(&nodes, &JackCache::new());
        assert_eq!(par.len(), seq.len());
        for (a, b) in par.iter().zip(&seq) {
            assert_eq!(**a, **b);
        }
    }
}
