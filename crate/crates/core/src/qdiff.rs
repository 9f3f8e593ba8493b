//! Additive q-difference calculus on finite sequences of Laurent polynomials.

use alloc::format;
use alloc::vec::Vec;

use crate::qcore::{q_binomial, BaseStep};
use crate::{Error, HalfInt, LaurentPoly, Result};

/// The discretization parameter `theta(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theta {
    /// `theta(k) = k`
    Canonical,
    Custom(Vec<HalfInt>),
}

impl Theta {
    pub fn at(&self, k: usize) -> Option<HalfInt> {
        match self {
            Theta::Canonical => Some(HalfInt::int(k as i64)),
            Theta::Custom(v) => v.get(k).copied(),
        }
    }
}

/// `rows[k][n] = (Delta^k a)_n`; row `k` is `k` entries shorter than row 0.
#[derive(Clone, Debug, PartialEq)]
pub struct SeqTable {
    pub rows: Vec<Vec<LaurentPoly>>,
    pub theta: Theta,
}

impl SeqTable {
    pub fn get(&self, k: usize, n: usize) -> Option<&LaurentPoly> {
        self.rows.get(k)?.get(n)
    }

    /// The boundary column `(Delta^k a)_0`.
    pub fn boundary(&self) -> Vec<LaurentPoly> {
        self.rows.iter().filter_map(|r| r.first().cloned()).collect()
    }
}

/// Differences `(Delta^{k+1} a)_n = (Delta^k a)_{n+1} - q^{theta(k)} (Delta^k a)_n`
/// for `k < levels`.
pub fn delta_table(a: &[LaurentPoly], levels: usize, theta: &Theta) -> Result<SeqTable> {
    if a.is_empty() || levels >= a.len() {
        return Err(Error::InvalidParameter(format!(
            "{levels} difference levels need at least {} terms, got {}",
            levels + 1,
            a.len()
        )));
    }
    let mut rows = Vec::with_capacity(levels + 1);
    rows.push(a.to_vec());
    for k in 0..levels {
        let t = theta
            .at(k)
            .ok_or_else(|| Error::InvalidParameter(format!("theta has no entry for level {k}")))?;
        let prev: &Vec<LaurentPoly> = &rows[k];
        let next = prev.windows(2).map(|w| &w[1] - &w[0].shift(t)).collect();
        rows.push(next);
    }
    Ok(SeqTable { rows, theta: theta.clone() })
}

/// `a_n = sum_s b_s [n over s]` for `n <= n_max` (canonical theta).
pub fn reconstruct(b: &[LaurentPoly], n_max: usize) -> Result<Vec<LaurentPoly>> {
    if b.len() <= n_max {
        return Err(Error::InvalidParameter(format!("need {} boundary terms, got {}", n_max + 1, b.len())));
    }
    Ok((0..=n_max as i64)
        .map(|n| (0..=n).map(|s| &b[s as usize] * &q_binomial(n, s, BaseStep::Q)).sum())
        .collect())
}

/// `(Delta^k a)_n = sum_s b_{k+n-s} [n over s] q^{ks}` for all `k + n < len(b)`.
pub fn reconstruct_table(b: &[LaurentPoly]) -> SeqTable {
    let len = b.len();
    let rows = (0..len)
        .map(|k| {
            (0..len - k)
                .map(|n| {
                    (0..=n)
                        .map(|s| {
                            let w = q_binomial(n as i64, s as i64, BaseStep::Q).shift(HalfInt::int((k * s) as i64));
                            &b[k + n - s] * &w
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    SeqTable { rows, theta: Theta::Canonical }
}

/// `b_s = [s over rho] q^{(s - rho)(r + 1/2)}`.
pub fn crux_boundary(s: usize, r: usize, rho: usize) -> LaurentPoly {
    let b = q_binomial(s as i64, rho as i64, BaseStep::Q);
    if b.is_zero() {
        return b;
    }
    b.shift(HalfInt::new((s - rho) as i64 * (2 * r as i64 + 1)))
}

/// `a_n` reconstructed from the boundary [`crux_boundary`].
pub fn crux_family(n: usize, r: usize, rho: usize) -> LaurentPoly {
    let b: Vec<_> = (0..=n).map(|s| crux_boundary(s, r, rho)).collect();
    reconstruct(&b, n).expect("boundary long enough").pop().expect("n_max + 1 entries")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{poch, sigma, Sign};
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_q_coeffs(c.iter().copied())
    }

    #[test]
    fn constant_sequence_has_zero_differences() {
        let a = alloc::vec![p(&[2, 1]); 5];
        let t = delta_table(&a, 3, &Theta::Canonical).unwrap();
        assert!(t.rows[1].iter().all(LaurentPoly::is_zero));
        assert!(delta_table(&a, 5, &Theta::Canonical).is_err());
        assert!(delta_table(&a, 2, &Theta::Custom(alloc::vec![HalfInt::ZERO])).is_err());
    }

    #[test]
    fn table_invariant_for_custom_theta() {
        let a: Vec<_> = (0..6).map(|n| p(&[n, 1, -n])).collect();
        let theta = Theta::Custom(alloc::vec![HalfInt::HALF, HalfInt::int(-1), HalfInt::int(3), HalfInt::ZERO]);
        let t = delta_table(&a, 4, &theta).unwrap();
        for k in 0..4 {
            for n in 0..t.rows[k + 1].len() {
                let want = &t.rows[k][n + 1] - &t.rows[k][n].shift(theta.at(k).unwrap());
                assert_eq!(t.rows[k + 1][n], want);
            }
        }
    }

    #[test]
    fn round_trip_rising_sequence() {
        // a_n = (1 + q)(1 + q^2)...(1 + q^n)
        let a: Vec<_> = (0..7).map(|n| poch(Sign::Minus, HalfInt::ONE, HalfInt::ONE, n)).collect();
        let t = delta_table(&a, 6, &Theta::Canonical).unwrap();
        let b = t.boundary();
        assert_eq!(reconstruct(&b, 6).unwrap(), a);
        assert_eq!(reconstruct_table(&b), t);
    }

    #[test]
    fn delta_boundary_reconstructs() {
        let mut b = alloc::vec![LaurentPoly::zero(); 6];
        b[0] = LaurentPoly::one();
        assert!(reconstruct(&b, 5).unwrap().iter().all(LaurentPoly::is_one));
    }

    #[test]
    fn crux_examples() {
        let want = p(&[1, 1]) * (LaurentPoly::one() + LaurentPoly::q_pow(HalfInt::HALF));
        assert_eq!(crux_family(2, 0, 1), want);
        assert!(crux_family(2, 1, 3).is_zero());
        for n in 1..10usize {
            assert_eq!(crux_family(n, 0, 1).eval_at_one(), BigInt::from(n) << (n - 1));
        }
    }

    #[test]
    fn crux_matches_half_base_sigma() {
        for n in 0..8usize {
            for r in 0..3 {
                for rho in 0..3 {
                    let want = if rho > n {
                        LaurentPoly::zero()
                    } else {
                        let s = sigma((n - rho) as u32, HalfInt::int(2 * r as i64 + 1));
                        q_binomial(n as i64, rho as i64, BaseStep::Q) * s.substitute_q_power(HalfInt::HALF).unwrap()
                    };
                    assert_eq!(crux_family(n, r, rho), want, "n={n} r={r} rho={rho}");
                }
            }
        }
    }
}
