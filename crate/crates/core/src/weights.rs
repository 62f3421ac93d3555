//! Weight and ramification invariants.
//!
//! * S-weight `W_S = sum_{i=1}^{g} (l_i - i)`
//! * K-weight `W_K = sum_{i=1}^{g-1} (l_i - i) + g - 1`
//! * total ramification `R = sum_{i=1}^{g} (m_i - i)` over the `g` smallest
//!   nonzero members
//! * K-ramification `R_K`, defined for gamma-hyperelliptic semigroups from the
//!   even heads `n_i`, the odd members `u_i` below `2g` and the odd tail `k`.
//!
//! Empty sums are zero, so genus 0 has every weight equal to 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma;
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub w_s: u64,
    pub w_k: u64,
    pub ramification: u64,
    pub k_odd_tail: u64,
    /// Smallest `gamma` nonzero even members; present only for a certified gamma.
    pub even_heads: Option<Vec<u32>>,
    /// Odd nonzero members below `2g`, decreasing.
    pub odd_members_below_2g: Vec<u32>,
    pub r_k: Option<i64>,
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

pub fn s_weight(s: &Semigroup) -> u64 {
    s.gap_iter()
        .zip(1u64..)
        .map(|(l, i)| u64::from(l) - i)
        .sum()
}

pub fn k_weight(s: &Semigroup) -> u64 {
    let g = u64::from(s.genus());
    if g == 0 {
        return 0;
    }
    let head: u64 = s
        .gap_iter()
        .take(g as usize - 1)
        .zip(1u64..)
        .map(|(l, i)| u64::from(l) - i)
        .sum();
    head + g - 1
}

pub fn total_ramification(s: &Semigroup) -> u64 {
    let g = s.genus() as usize;
    let sum: u64 = s.small_members(g).into_iter().map(u64::from).sum();
    sum - (g as u64) * (g as u64 + 1) / 2
}

/// Odd members in `[conductor, 2g)`.
pub fn odd_tail_count(s: &Semigroup) -> u64 {
    let lo = s.conductor();
    let hi = 2 * s.genus();
    (lo..hi).filter(|x| x % 2 == 1).count() as u64
}

pub fn odd_members_below_2g(s: &Semigroup) -> Vec<u32> {
    (1..2 * s.genus())
        .rev()
        .filter(|&x| x % 2 == 1 && s.contains(x))
        .collect()
}

pub fn even_heads(s: &Semigroup, count: usize) -> Vec<u32> {
    s.members()
        .skip(1)
        .filter(|x| x % 2 == 0)
        .take(count)
        .collect()
}

/// `R_K = sum (n_i + u_i) + sum_{i=1}^{g-2gamma-1} (4 gamma + 2i) - C(g,2) - 2k`.
pub fn k_ramification(s: &Semigroup, gamma: u32) -> Result<i64> {
    if !gamma::certify(s, gamma).is_affirmative() {
        return Err(Error::NotGammaHyperelliptic { gamma });
    }
    let g = s.genus();
    if g < 2 * gamma + 1 {
        return Err(Error::GenusOutOfRange {
            gamma,
            genus: g,
            min: 2 * gamma + 1,
        });
    }
    let odd = odd_members_below_2g(s);
    if odd.len() != gamma as usize {
        return Err(Error::MalformedOddList {
            expected: gamma as usize,
            found: odd.len(),
        });
    }
    let heads: i64 = even_heads(s, gamma as usize).into_iter().map(i64::from).sum();
    let odds: i64 = odd.into_iter().map(i64::from).sum();
    let (g, gamma) = (i64::from(g), i64::from(gamma));
    let evens: i64 = (1..=g - 2 * gamma - 1).map(|i| 4 * gamma + 2 * i).sum();
    let k = odd_tail_count(s) as i64;
    Ok(heads + odds + evens - binom2(g) - 2 * k)
}

pub fn weight_report(s: &Semigroup, gamma: Option<u32>) -> Result<WeightReport> {
    let (even_heads, r_k) = match gamma {
        Some(gamma) => {
            let r_k = k_ramification(s, gamma)?;
            (Some(even_heads(s, gamma as usize)), Some(r_k))
        }
        None => (None, None),
    };
    Ok(WeightReport {
        w_s: s_weight(s),
        w_k: k_weight(s),
        ramification: total_ramification(s),
        k_odd_tail: odd_tail_count(s),
        even_heads,
        odd_members_below_2g: odd_members_below_2g(s),
        r_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> Semigroup {
        Semigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn s_weight_examples() {
        assert_eq!(s_weight(&sg(&[2, 11])), 10);
        assert_eq!(s_weight(&Semigroup::naturals()), 0);
        // symmetric maximizer: C(14,2) + 2*3^2
        assert_eq!(s_weight(&sg(&[4, 14, 29])), 91 + 18);
    }

    #[test]
    fn k_weight_examples() {
        assert_eq!(k_weight(&sg(&[2, 11])), 10);
        assert_eq!(k_weight(&sg(&[4, 6, 11, 13])), 8);
        assert_eq!(k_weight(&sg(&[2, 3])), 0);
        assert_eq!(k_weight(&Semigroup::naturals()), 0);
    }

    #[test]
    fn ramification_examples() {
        assert_eq!(total_ramification(&sg(&[4, 6, 11, 13])), 30);
        assert_eq!(total_ramification(&sg(&[2, 3])), 1);
        assert_eq!(total_ramification(&Semigroup::naturals()), 0);
    }

    #[test]
    fn odd_tail_examples() {
        assert_eq!(odd_tail_count(&sg(&[4, 6, 11, 13])), 1);
        assert_eq!(odd_tail_count(&sg(&[4, 14, 29])), 0);
        assert_eq!(odd_tail_count(&sg(&[2, 11])), 0);
        assert_eq!(odd_tail_count(&Semigroup::naturals()), 0);
    }

    #[test]
    fn k_ramification_examples() {
        assert_eq!(k_ramification(&sg(&[4, 6, 11, 13]), 1), Ok(22));
        assert_eq!(k_ramification(&sg(&[4, 14, 29]), 3), Ok(380 - 109));
        assert_eq!(k_ramification(&sg(&[2, 11]), 0), Ok(20 - 10));
    }

    #[test]
    fn k_ramification_rejects_wrong_gamma() {
        assert_eq!(
            k_ramification(&sg(&[4, 6, 11, 13]), 2),
            Err(Error::NotGammaHyperelliptic { gamma: 2 })
        );
        assert_eq!(
            k_ramification(&sg(&[4, 5, 6]), 1),
            Err(Error::NotGammaHyperelliptic { gamma: 1 })
        );
    }

    #[test]
    fn report_examples() {
        let r = weight_report(&sg(&[4, 6, 11, 13]), Some(1)).unwrap();
        assert_eq!((r.w_s, r.w_k, r.ramification, r.k_odd_tail), (6, 8, 30, 1));
        assert_eq!(r.r_k, Some(22));
        assert_eq!(r.even_heads, Some(vec![4]));
        assert_eq!(r.odd_members_below_2g, vec![11]);

        let r = weight_report(&sg(&[2, 3]), None).unwrap();
        assert_eq!((r.w_s, r.w_k, r.ramification, r.k_odd_tail), (0, 0, 1, 0));
        assert_eq!(r.r_k, None);

        let r = weight_report(&Semigroup::naturals(), None).unwrap();
        assert_eq!((r.w_s, r.w_k, r.ramification, r.k_odd_tail), (0, 0, 0, 0));
        assert!(r.odd_members_below_2g.is_empty());
    }
}
