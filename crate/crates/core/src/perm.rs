//! Permutations of {1..N} in one-line notation, with the adjacent-swap
//! decomposition used to push group elements through polynomial actions.

/// A permutation `w` of `{1..N}`; `apply(i) = w(i)` with 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    // map[i] = w(i+1) - 1, both stored 0-based
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            map: (0..n).collect(),
        }
    }

    /// Build from one-line notation `[w(1), ..., w(N)]` (1-based values).
    pub fn from_one_line(values: &[usize]) -> Perm {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in values {
            assert!((1..=n).contains(&v) && !seen[v - 1], "not a permutation");
            seen[v - 1] = true;
        }
        Perm {
            map: values.iter().map(|&v| v - 1).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)`, `1 <= i < n`.
    pub fn adjacent(n: usize, i: usize) -> Perm {
        assert!((1..n).contains(&i));
        let mut p = Perm::identity(n);
        p.map.swap(i - 1, i);
        p
    }

    /// The transposition `(i, j)`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        assert!(i != j && (1..=n).contains(&i) && (1..=n).contains(&j));
        let mut p = Perm::identity(n);
        p.map.swap(i - 1, j - 1);
        p
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Perm { map }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            map: other.map.iter().map(|&v| self.map[v]).collect(),
        }
    }

    /// Coxeter length: the number of inversions of the one-line word.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.map.len() {
            for j in (i + 1)..self.map.len() {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Indices `a_1, ..., a_k` with `self = s_{a_k} ∘ ... ∘ s_{a_1}`, so an
    /// action is realized by applying `s_{a_1}` first.  Produced by bubble
    /// sorting the one-line word.
    pub fn adjacent_factors(&self) -> Vec<usize> {
        let mut word = self.map.clone();
        let mut swaps = Vec::with_capacity(self.length());
        let n = word.len();
        loop {
            let mut moved = false;
            for i in 0..n.saturating_sub(1) {
                if word[i] > word[i + 1] {
                    word.swap(i, i + 1);
                    swaps.push(i + 1);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        swaps
    }

    /// The cyclic shift `w_N`: `i -> i+1` for `i < N`, `N -> 1`.
    pub fn cycle(n: usize) -> Perm {
        let mut map: Vec<usize> = (1..n).collect();
        map.push(0);
        Perm { map }
    }

    /// Permute entries of a slice: output `o` with `o[w(i)] = a[i]`
    /// (the composition action `(w a)_i = a_{w^{-1}(i)}`).
    pub fn apply_to_entries<T: Clone>(&self, a: &[T]) -> Vec<T> {
        assert_eq!(a.len(), self.n());
        let mut out = a.to_vec();
        for (i, &v) in self.map.iter().enumerate() {
            out[v] = a[i].clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let w = Perm::from_one_line(&[3, 1, 2]);
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.apply(1), 3);
    }

    #[test]
    fn adjacent_factorization_reconstructs() {
        let w = Perm::from_one_line(&[5, 4, 6, 1, 3, 2]);
        let mut rebuilt = Perm::identity(6);
        for a in w.adjacent_factors() {
            rebuilt = Perm::adjacent(6, a).compose(&rebuilt);
        }
        assert_eq!(rebuilt, w);
        assert_eq!(w.adjacent_factors().len(), w.length());
    }

    #[test]
    fn cycle_one_line() {
        let w = Perm::cycle(4);
        assert_eq!(w.one_line(), vec![2, 3, 4, 1]);
        assert_eq!(w.inverse().one_line(), vec![4, 1, 2, 3]);
    }

    #[test]
    fn entry_action_sorts_composition() {
        // r_alpha for alpha = (1,2,0,5,4,5) is [5,4,6,1,3,2].
        let r = Perm::from_one_line(&[5, 4, 6, 1, 3, 2]);
        let alpha = [1u32, 2, 0, 5, 4, 5];
        assert_eq!(r.apply_to_entries(&alpha), vec![5, 5, 4, 2, 1, 0]);
    }
}
