//! Gaussian binomials, Poincaré–Hilbert series for the supersymmetric
//! polynomials, direct tableau counting, and the partition–subset
//! bijection behind the generator degrees.

use crate::error::{Error, Result};
use crate::fermion::Subset;
use crate::tableaux::Family;
use num::bigint::BigInt;
use num::{One, Zero};

/// Truncated series in `q` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
    trunc: usize,
}

impl QSeries {
    pub fn zero(trunc: usize) -> QSeries {
        QSeries {
            coeffs: vec![],
            trunc,
        }
    }

    pub fn one(trunc: usize) -> QSeries {
        QSeries::monomial(0, trunc)
    }

    /// The monomial `q^k` (zero if `k` exceeds the truncation degree).
    pub fn monomial(k: usize, trunc: usize) -> QSeries {
        let mut s = QSeries::zero(trunc);
        if k <= trunc {
            s.coeffs = vec![BigInt::zero(); k + 1];
            s.coeffs[k] = BigInt::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<i64>, trunc: usize) -> QSeries {
        let mut s = QSeries {
            coeffs: coeffs.into_iter().map(BigInt::from).collect(),
            trunc,
        };
        s.clamp();
        s
    }

    fn clamp(&mut self) {
        self.coeffs.truncate(self.trunc + 1);
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficients `0..=deg` as plain integers (panics past i64 range).
    pub fn coeff_list(&self, deg: usize) -> Vec<i64> {
        (0..=deg)
            .map(|k| i64::try_from(self.coeff(k)).expect("coefficient fits in i64"))
            .collect()
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len().max(other.coeffs.len())).min(trunc + 1)];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i) + other.coeff(i);
        }
        let mut s = QSeries { coeffs, trunc };
        s.clamp();
        s
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs = vec![BigInt::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i > trunc {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > trunc {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        let mut s = QSeries { coeffs, trunc };
        s.clamp();
        s
    }

    /// Multiply by the geometric series `1/(1 - q^j)`.
    pub fn mul_geometric(&self, j: usize) -> QSeries {
        assert!(j >= 1);
        let trunc = self.trunc;
        let mut coeffs = vec![BigInt::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut k = i;
            while k <= trunc {
                coeffs[k] += a;
                k += j;
            }
        }
        let mut s = QSeries { coeffs, trunc };
        s.clamp();
        s
    }

    /// Multiply by `(1 - q^j)`.
    pub fn mul_one_minus(&self, j: usize) -> QSeries {
        self.mul(&QSeries::from_coeffs(
            {
                let mut v = vec![0i64; j + 1];
                v[0] = 1;
                v[j] = -1;
                v
            },
            self.trunc,
        ))
    }

    /// Value at `q = 1` of the stored (truncated) polynomial.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

/// Gaussian binomial `[a b]_q = (q;q)_a / ((q;q)_b (q;q)_{a-b})` as an
/// exact polynomial via the `q`-Pascal recurrence, then truncated.
pub fn gaussian_binomial(a: usize, b: usize, trunc: usize) -> Result<QSeries> {
    if b > a {
        return Err(Error::ParameterOutOfRange(format!("need 0 <= b <= a, got ({}, {})", a, b)));
    }
    // row[k] at step n holds [n k]_q exactly; degrees stay <= k(n-k).
    let full = b * (a - b);
    let work = QSeries::one(full.max(trunc));
    let mut row: Vec<QSeries> = vec![work; 1];
    for n in 1..=a {
        let mut next = Vec::with_capacity(n + 1);
        for k in 0..=n.min(b) {
            if k == 0 || k == n {
                next.push(QSeries::one(full.max(trunc)));
            } else {
                // [n k] = [n-1 k-1] + q^k [n-1 k]
                let left = &row[k - 1];
                let right = row
                    .get(k)
                    .map(|r| r.mul(&QSeries::monomial(k, full.max(trunc))))
                    .unwrap_or_else(|| QSeries::zero(full.max(trunc)));
                next.push(left.add(&right));
            }
        }
        row = next;
    }
    let mut out = row.into_iter().nth(b).expect("row holds index b");
    out.trunc = trunc;
    out.clamp();
    Ok(out)
}

/// `Σ_{E} q^{inv(E)}` over family-0 labels (`#E = m+1`, `N ∈ E`); equal
/// to the Gaussian binomial `[N-1 m]_q`.
pub fn inv_generating(n: usize, m: usize) -> Result<QSeries> {
    if m == 0 || m >= n {
        return Err(Error::ParameterOutOfRange(format!(
            "need 1 <= m <= N-1, got m = {}",
            m
        )));
    }
    let trunc = m * (n - 1 - m);
    let mut s = QSeries::zero(trunc);
    for e in Subset::all_of_card(n, m + 1) {
        if e.contains(n) {
            s = s.add(&QSeries::monomial(e.inversions(), trunc));
        }
    }
    Ok(s)
}

/// Generating function of the generator degrees:
/// `Q_{N,m}(q) = q^{m(m+1)/2} [N-1 m]_q`.
pub fn q_series(n: usize, m: usize, trunc: usize) -> Result<QSeries> {
    let shift = m * (m + 1) / 2;
    let gauss = gaussian_binomial(n - 1, m, trunc.saturating_sub(shift).max(1))?;
    let mut out = QSeries::monomial(shift, trunc).mul(&{
        let mut g = gauss;
        g.trunc = trunc;
        g
    });
    out.trunc = trunc;
    out.clamp();
    Ok(out)
}

/// Full Poincaré series of the supersymmetric polynomials of one family,
/// the hook-content series shifted by the staircase:
/// `q^{m(m+1)/2} / ((1-q^N)(q;q)_m (q;q)_{N-m-1})` for family 0, and the
/// same with `m` replaced by `m-1` for family 1.  Equivalently
/// `Q_{N,m}/(q;q)_N` resp. `Q_{N,m-1}/(q;q)_N`.
pub fn hilbert_series(n: usize, m: usize, family: Family, trunc: usize) -> Result<QSeries> {
    if m == 0 || m >= n {
        return Err(Error::ParameterOutOfRange(format!(
            "need 1 <= m <= N-1, got m = {}",
            m
        )));
    }
    let mm = match family {
        Family::Zero => m,
        Family::One => m - 1,
    };
    let mut s = QSeries::monomial(mm * (mm + 1) / 2, trunc);
    s = s.mul_geometric(n);
    for j in 1..=mm {
        s = s.mul_geometric(j);
    }
    for j in 1..=(n - mm - 1) {
        s = s.mul_geometric(j);
    }
    Ok(s)
}

/// Number of partitions of `n` into at most `k` parts (equivalently,
/// with parts of size at most `k`, by conjugation).
fn partitions_at_most(n: usize, k: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let mut dp = vec![0u64; n + 1];
    dp[0] = 1;
    for size in 1..=k.min(n) {
        for total in size..=n {
            dp[total] += dp[total - size];
        }
    }
    dp[n]
}

/// Number of column-strict labeled tableaux of the given family with
/// entry sum `degree`, counted by direct enumeration of the corner value
/// and the strict column / weak row splits.
pub fn count_column_strict(n: usize, m: usize, family: Family, degree: usize) -> Result<u64> {
    if m == 0 || m >= n {
        return Err(Error::ParameterOutOfRange(format!(
            "need 1 <= m <= N-1, got m = {}",
            m
        )));
    }
    let (col_cells, row_cells) = match family {
        Family::Zero => (m, n - m - 1),
        Family::One => (m - 1, n - m),
    };
    let mut total = 0u64;
    for corner in 0..=degree {
        let after_corner = match degree.checked_sub(corner * (1 + col_cells + row_cells)) {
            Some(d) => d,
            None => break,
        };
        // Column: strictly increasing above the corner; with the corner
        // offset removed the values are c_i = corner + i + f_i with f
        // a partition read in reverse.  Minimal column cost is the
        // staircase 1 + 2 + ... + col_cells.
        let col_min = col_cells * (col_cells + 1) / 2;
        if after_corner < col_min {
            continue;
        }
        for col_extra in 0..=(after_corner - col_min) {
            let row_sum = after_corner - col_min - col_extra;
            let col_ways = partitions_at_most(col_extra, col_cells);
            if col_ways == 0 {
                continue;
            }
            let row_ways = partitions_at_most(row_sum, row_cells);
            total += col_ways * row_ways;
        }
    }
    Ok(total)
}

/// Bijection between partitions `0 ≤ j_1 ≤ ... ≤ j_l ≤ k` and `l`-subsets
/// of `{1..k+l}`: the subset determined by `i_u = k + u - j_{l+1-u}`.
pub fn partition_to_subset(k: usize, l: usize, j: &[u32]) -> Result<Subset> {
    if j.len() != l {
        return Err(Error::MalformedInput(format!(
            "expected {} parts, got {}",
            l,
            j.len()
        )));
    }
    for w in j.windows(2) {
        if w[0] > w[1] {
            return Err(Error::MalformedInput("parts must be nondecreasing".into()));
        }
    }
    if j.iter().any(|&p| p as usize > k) {
        return Err(Error::MalformedInput(format!("parts must be <= {}", k)));
    }
    let elems: Vec<usize> = (1..=l)
        .map(|u| k + u - j[l - u] as usize)
        .collect();
    Subset::from_elems(k + l, &elems)
}

/// Inverse direction: `j_u = #{v ∈ F^C : v > i_{l+1-u}}`.
pub fn subset_to_partition(k: usize, l: usize, f: &Subset) -> Result<Vec<u32>> {
    if f.n() != k + l || f.card() != l {
        return Err(Error::MalformedInput(format!(
            "expected an {}-subset of 1..{}",
            l,
            k + l
        )));
    }
    let elems = f.elems();
    let fc = f.complement();
    Ok((1..=l)
        .map(|u| fc.count_greater(elems[l - u]) as u32)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_examples() {
        // [5 2]_q = 1 + q + 2q² + 2q³ + 2q⁴ + q⁵ + q⁶
        let g = gaussian_binomial(5, 2, 10).unwrap();
        assert_eq!(g.coeff_list(7), vec![1, 1, 2, 2, 2, 1, 1, 0]);
        // [a 0]_q = 1
        assert_eq!(gaussian_binomial(7, 0, 5).unwrap(), QSeries::one(5));
        // q -> 1 limit is the binomial coefficient.
        assert_eq!(
            gaussian_binomial(6, 3, 40).unwrap().eval_at_one(),
            BigInt::from(20)
        );
        assert!(gaussian_binomial(2, 3, 4).is_err());
    }

    #[test]
    fn inv_generating_matches_gaussian() {
        for n in 2..=10 {
            for m in 1..n {
                let trunc = m * (n - 1 - m);
                let lhs = inv_generating(n, m).unwrap();
                let rhs = gaussian_binomial(n - 1, m, trunc).unwrap();
                assert_eq!(lhs, rhs, "N={} m={}", n, m);
            }
        }
        // m = N-1: a single label, series = 1.
        assert_eq!(inv_generating(5, 4).unwrap(), QSeries::one(0));
    }

    #[test]
    fn q_series_sum_identity() {
        // Q_{N,m} + Q_{N,m-1} = q^{m(m-1)/2} [N m]_q coefficientwise.
        let trunc = 30;
        for n in 3..=8 {
            for m in 2..n {
                let lhs = q_series(n, m, trunc)
                    .unwrap()
                    .add(&q_series(n, m - 1, trunc).unwrap());
                let rhs = QSeries::monomial(m * (m - 1) / 2, trunc)
                    .mul(&gaussian_binomial(n, m, trunc).unwrap());
                assert_eq!(lhs, rhs, "N={} m={}", n, m);
            }
        }
    }

    #[test]
    fn q_series_at_one_counts_dimension() {
        // Q_{N,m}(1) + Q_{N,m-1}(1) = C(N,m).
        let (n, m) = (6, 2);
        let total = q_series(n, m, 60).unwrap().eval_at_one()
            + q_series(n, m - 1, 60).unwrap().eval_at_one();
        assert_eq!(total, BigInt::from(15));
    }

    #[test]
    fn hilbert_series_counts_small_shape() {
        // Shape (2,1,1): series begins q³ + 2q⁴ + 4q⁵ + 6q⁶ + 10q⁷.
        let s = hilbert_series(4, 2, Family::Zero, 7).unwrap();
        assert_eq!(s.coeff_list(7), vec![0, 0, 0, 1, 2, 4, 6, 10]);
    }

    #[test]
    fn hilbert_series_is_q_series_over_symmetric_ring() {
        // Q_{N,m}/(q;q)_N equals the hook series, as truncated series.
        let (n, m, trunc) = (5, 2, 12);
        let mut lhs = q_series(n, m, trunc).unwrap();
        for j in 1..=n {
            lhs = lhs.mul_geometric(j);
        }
        let rhs = hilbert_series(n, m, Family::Zero, trunc).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn counting_matches_series_coefficients() {
        for n in 3..=6 {
            for m in 1..n {
                for family in [Family::Zero, Family::One] {
                    let s = hilbert_series(n, m, family, 8).unwrap();
                    for degree in 0..=8 {
                        let direct = count_column_strict(n, m, family, degree).unwrap();
                        assert_eq!(
                            BigInt::from(direct),
                            s.coeff(degree),
                            "N={} m={} {:?} degree {}",
                            n,
                            m,
                            family,
                            degree
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn counting_below_staircase_is_zero() {
        let (n, m) = (5, 3);
        for degree in 0..(m * (m + 1) / 2) {
            assert_eq!(count_column_strict(n, m, Family::Zero, degree).unwrap(), 0);
        }
    }

    #[test]
    fn bijection_worked_example() {
        // Row values (1,1,2,2) with k=3, l=4 give F = {2,3,5,6} in 1..7.
        let f = partition_to_subset(3, 4, &[1, 1, 2, 2]).unwrap();
        assert_eq!(f.elems(), vec![2, 3, 5, 6]);
        assert_eq!(f.inversions(), 6);
        assert_eq!(subset_to_partition(3, 4, &f).unwrap(), vec![1, 1, 2, 2]);
    }

    #[test]
    fn bijection_zero_partition() {
        let f = partition_to_subset(3, 2, &[0, 0]).unwrap();
        assert_eq!(f.elems(), vec![4, 5]);
        assert_eq!(f.inversions(), 0);
    }

    #[test]
    fn bijection_roundtrip_and_statistic() {
        for k in 1..=5 {
            for l in 1..=5 {
                for f in Subset::all_of_card(k + l, l) {
                    let j = subset_to_partition(k, l, &f).unwrap();
                    assert!(j.windows(2).all(|w| w[0] <= w[1]));
                    assert!(j.iter().all(|&p| p as usize <= k));
                    let back = partition_to_subset(k, l, &j).unwrap();
                    assert_eq!(back, f);
                    // inv(F) = Σ j_u
                    let total: u32 = j.iter().sum();
                    assert_eq!(total as usize, f.inversions());
                }
            }
        }
    }

    #[test]
    fn bijection_rejects_malformed() {
        assert!(partition_to_subset(2, 3, &[1, 0, 2]).is_err());
        assert!(partition_to_subset(2, 3, &[0, 1, 3]).is_err());
        assert!(partition_to_subset(2, 3, &[0, 1]).is_err());
    }
}
