//! Graded dimensions of free commutative algebras on evenly graded
//! generators. With every generator in even degree there are no signs, so
//! the Hilbert series is a product of `(1 - t^{2i})^{-m_i}` and all
//! arithmetic runs in the variable `s = t^2`.

use crate::partitions::{binomial, sym_power_dimension};

/// Coefficient of `s^p` in `(1-s)^{-linear} · Π_{i ≥ first} (1-s^i)^{-dim Sym^i(Q^d)}`.
///
/// The series is truncated at `s^p`, the only coefficient read.
pub fn sym_algebra_series_coefficient(d: usize, linear: u128, first: usize, p: usize) -> u128 {
    let mut series = vec![0u128; p + 1];
    series[0] = 1;
    multiply_inverse_power(&mut series, 1, linear);
    for i in first.max(1)..=p {
        multiply_inverse_power(&mut series, i, sym_power_dimension(d, i));
    }
    series[p]
}

/// `series *= (1 - s^step)^{-m}`, truncated.
fn multiply_inverse_power(series: &mut [u128], step: usize, m: u128) {
    if m == 0 || step >= series.len() {
        return;
    }
    let n = series.len();
    let factor: Vec<u128> = (0..n)
        .map(|e| {
            if e % step == 0 {
                let k = (e / step) as u128;
                binomial(m + k - 1, k)
            } else {
                0
            }
        })
        .collect();
    let old = series.to_vec();
    for (e, slot) in series.iter_mut().enumerate() {
        *slot = (0..=e).map(|a| old[a] * factor[e - a]).sum();
    }
}

/// `dim [Sym^•(V[2]^{⊕q} ⊕ Sym^{•>0}(V[2]))]_{2p}` for `dim V = d`.
pub fn graded_sym_algebra_dimension(d: usize, q: usize, p: usize) -> u128 {
    sym_algebra_series_coefficient(d, (q * d) as u128, 1, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    #[test]
    fn one_dimensional_counts_partitions() {
        for p in 0..=10 {
            assert_eq!(graded_sym_algebra_dimension(1, 0, p), enumerate_partitions(p).len() as u128);
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(graded_sym_algebra_dimension(3, 2, 0), 1);
        assert_eq!(graded_sym_algebra_dimension(1, 1, 2), 4);
        // Sym^2 of a 4-dim space plus Sym^2(Q^2): 10 + 3
        assert_eq!(graded_sym_algebra_dimension(2, 1, 2), 13);
    }
}
