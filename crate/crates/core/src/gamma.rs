//! Gamma-hyperelliptic semigroups: certificates, extremal constructions and
//! weight bounds.
//!
//! `S` is gamma-hyperelliptic when it has exactly `gamma` even members in
//! `[2, 4 gamma]` and its `(gamma + 1)`-st positive member is `4 gamma + 2`.
//! For such `S` of genus `g >= 2 gamma + 1`, with `C = C(g - 2 gamma, 2)`:
//!
//! ```text
//! C + 2 gamma <= W_K <= C + 2 gamma^2
//! C           <= W_S <= C + 2 gamma^2
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::weights::{k_weight, s_weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCertificate {
    pub gamma: u32,
    pub even_count_ok: bool,
    pub pivot_ok: bool,
    pub even_elements_in_window: Vec<u32>,
    pub pivot_element: u32,
}

impl GammaCertificate {
    pub fn is_affirmative(&self) -> bool {
        self.even_count_ok && self.pivot_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub lower_k: i64,
    pub upper_k: i64,
    pub lower_s: i64,
    pub upper_s: i64,
    pub w_k: i64,
    pub w_s: i64,
    pub within_k: bool,
    pub within_s: bool,
    pub attains_min_k: bool,
    pub attains_max_k: bool,
}

/// The four bound values `(lower_k, upper_k, lower_s, upper_s)`.
pub fn bounds(gamma: u32, genus: u32) -> (i64, i64, i64, i64) {
    let (g, gamma) = (i64::from(genus), i64::from(gamma));
    let n = g - 2 * gamma;
    let c = n * (n - 1) / 2;
    (c + 2 * gamma, c + 2 * gamma * gamma, c, c + 2 * gamma * gamma)
}

pub fn certify(s: &Semigroup, gamma: u32) -> GammaCertificate {
    let even_elements_in_window: Vec<u32> =
        (2..=4 * gamma).step_by(2).filter(|&x| s.contains(x)).collect();
    let pivot_element = s.members().nth(gamma as usize + 1).unwrap();
    GammaCertificate {
        gamma,
        even_count_ok: even_elements_in_window.len() == gamma as usize,
        pivot_ok: pivot_element == 4 * gamma + 2,
        even_elements_in_window,
        pivot_element,
    }
}

pub fn detect_gammas(s: &Semigroup, gamma_max: u32) -> Vec<u32> {
    (0..=gamma_max)
        .filter(|&gamma| certify(s, gamma).is_affirmative())
        .collect()
}

/// Largest gamma for which `s` could possibly be gamma-hyperelliptic:
/// `4 gamma + 1` is always a gap, so `4 gamma + 1 <= l_g`.
pub fn gamma_ceiling(s: &Semigroup) -> u32 {
    (s.frobenius().max(1) as u32 - 1) / 4
}

fn out_of_range(reason: String) -> Error {
    Error::ConstructionOutOfRange { reason }
}

fn verify_construction(s: Semigroup, gamma: u32, genus: u32, label: &str) -> Result<Semigroup> {
    if s.genus() != genus {
        return Err(out_of_range(format!(
            "{label}: construction has genus {} instead of {genus}",
            s.genus()
        )));
    }
    let cert = certify(&s, gamma);
    if !cert.is_affirmative() {
        return Err(out_of_range(format!(
            "{label}: not {gamma}-hyperelliptic (pivot {}, {} evens in window)",
            cert.pivot_element,
            cert.even_elements_in_window.len()
        )));
    }
    Ok(s)
}

/// `<4, 4 gamma + 2, 2g - 4 gamma + 1>`, the symmetric weight maximizer.
pub fn make_maximizer(gamma: u32, genus: u32) -> Result<Semigroup> {
    if genus < 2 * gamma + 1 {
        return Err(out_of_range(format!(
            "maximizer needs genus >= {}, got {genus}",
            2 * gamma + 1
        )));
    }
    let s = Semigroup::from_generators(&[4, 4 * gamma + 2, 2 * genus - 4 * gamma + 1])?;
    verify_construction(s, gamma, genus, "maximizer")
}

/// Staircase minimizer: gaps `{2, 4, .., 2 gamma} ∪ {1, 3, .., 2(g - gamma) - 1}`.
pub fn make_minimizer(gamma: u32, genus: u32) -> Result<Semigroup> {
    if genus < 3 * gamma + 1 {
        return Err(out_of_range(format!(
            "minimizer needs genus >= {}, got {genus}",
            3 * gamma + 1
        )));
    }
    let mut gaps: Vec<u32> = (1..=gamma).map(|j| 2 * j).collect();
    gaps.extend((0..genus - gamma).map(|j| 2 * j + 1));
    gaps.sort_unstable();
    let s = Semigroup::from_gaps(&gaps)?;
    verify_construction(s, gamma, genus, "minimizer")
}

/// `<4, 4 gamma + 2, 2g - 2 gamma - 2k + 3, 2g - 2 gamma + 2k + 1>`.
pub fn make_prop2_member(gamma: u32, genus: u32, k: u32) -> Result<Semigroup> {
    if gamma == 0 || k == 0 || k > gamma + 1 || genus < 3 * gamma {
        return Err(out_of_range(format!(
            "family needs gamma >= 1, 1 <= k <= gamma + 1, genus >= 3 gamma; got gamma={gamma} k={k} genus={genus}"
        )));
    }
    let (g, gm, k_) = (i64::from(genus), i64::from(gamma), i64::from(k));
    let a = 2 * g - 2 * gm - 2 * k_ + 3;
    let b = 2 * g - 2 * gm + 2 * k_ + 1;
    let s = Semigroup::from_generators(&[4, 4 * gamma + 2, a as u32, b as u32])?;
    let s = verify_construction(s, gamma, genus, "four-generator family")?;
    let expected_frobenius = 2 * g - 2 * gm + 2 * k_ - 3;
    if s.frobenius() != expected_frobenius || s.multiplicity() != 4 {
        return Err(out_of_range(format!(
            "four-generator family: frobenius {} (expected {expected_frobenius}), multiplicity {}",
            s.frobenius(),
            s.multiplicity()
        )));
    }
    Ok(s)
}

pub fn check_bounds(s: &Semigroup, gamma: u32) -> Result<BoundCheck> {
    if !certify(s, gamma).is_affirmative() {
        return Err(Error::NotGammaHyperelliptic { gamma });
    }
    let genus = s.genus();
    if genus < 2 * gamma + 1 {
        return Err(Error::GenusOutOfRange {
            gamma,
            genus,
            min: 2 * gamma + 1,
        });
    }
    let (lower_k, upper_k, lower_s, upper_s) = bounds(gamma, genus);
    let w_k = k_weight(s) as i64;
    let w_s = s_weight(s) as i64;
    Ok(BoundCheck {
        lower_k,
        upper_k,
        lower_s,
        upper_s,
        w_k,
        w_s,
        within_k: (lower_k..=upper_k).contains(&w_k),
        within_s: (lower_s..=upper_s).contains(&w_s),
        attains_min_k: w_k == lower_k,
        attains_max_k: w_k == upper_k,
    })
}

/// `(k, C(g - 2 gamma, 2) + gamma^2 + gamma + k^2 - 3k + 2)` for `k = 1..=gamma+1`.
pub fn prop2_spectrum(gamma: u32, genus: u32) -> Result<Vec<(u32, i64)>> {
    if gamma == 0 || genus < 3 * gamma {
        return Err(Error::InvalidParameters {
            reason: format!("spectrum needs gamma >= 1 and genus >= 3 gamma; got gamma={gamma} genus={genus}"),
        });
    }
    let (c, ..) = bounds(gamma, genus);
    let c = c - 2 * i64::from(gamma);
    let gm = i64::from(gamma);
    Ok((1..=gamma + 1)
        .map(|k| {
            let k_ = i64::from(k);
            (k, c + gm * gm + gm + k_ * k_ - 3 * k_ + 2)
        })
        .collect())
}

/// Non-maximal multiplicity-4 range `[C + gamma^2 + gamma, C + 2(gamma^2 - gamma) + 2]`.
pub fn prop2_nonmaximal_range(gamma: u32, genus: u32) -> (i64, i64) {
    let (c, ..) = bounds(gamma, genus);
    let c = c - 2 * i64::from(gamma);
    let gm = i64::from(gamma);
    (c + gm * gm + gm, c + 2 * (gm * gm - gm) + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> Semigroup {
        Semigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn certify_examples() {
        let c = certify(&sg(&[4, 14, 29]), 3);
        assert!(c.is_affirmative());
        assert_eq!(c.even_elements_in_window, vec![4, 8, 12]);
        assert_eq!(c.pivot_element, 14);

        let c = certify(&sg(&[2, 11]), 0);
        assert!(c.is_affirmative());
        assert!(c.even_elements_in_window.is_empty());
        assert_eq!(c.pivot_element, 2);

        let c = certify(&sg(&[4, 5, 6]), 1);
        assert!(!c.is_affirmative());
        assert_eq!(c.pivot_element, 5);
        assert!(!c.pivot_ok);
    }

    #[test]
    fn detect_examples() {
        assert_eq!(detect_gammas(&sg(&[4, 6, 11, 13]), 5), vec![1]);
        assert_eq!(detect_gammas(&sg(&[2, 11]), 5), vec![0]);
        assert_eq!(detect_gammas(&sg(&[5, 6, 7, 8, 9]), 5), Vec::<u32>::new());
    }

    #[test]
    fn maximizer_examples() {
        let s = make_maximizer(3, 20).unwrap();
        assert_eq!(s, sg(&[4, 14, 29]));
        assert_eq!(k_weight(&s), 91 + 18);
        assert!(s.is_symmetric());

        let s = make_maximizer(0, 5).unwrap();
        assert_eq!(s, sg(&[2, 11]));
        assert_eq!(k_weight(&s), 10);

        assert!(matches!(make_maximizer(1, 4), Err(Error::ConstructionOutOfRange { .. })));
        assert!(matches!(make_maximizer(2, 4), Err(Error::ConstructionOutOfRange { .. })));
    }

    #[test]
    fn minimizer_examples() {
        let s = make_minimizer(3, 20).unwrap();
        let mut expected: Vec<u32> = vec![2, 4, 6];
        expected.extend((1..=33).step_by(2));
        expected.sort_unstable();
        assert_eq!(s.gaps().as_slice(), expected.as_slice());
        assert_eq!(k_weight(&s), 91 + 6);

        let s = make_minimizer(1, 5).unwrap();
        assert_eq!(s.gaps().as_slice(), &[1, 2, 3, 5, 7]);
        assert_eq!(k_weight(&s), 3 + 2);

        let s = make_minimizer(0, 6).unwrap();
        assert_eq!(s, sg(&[2, 13]));
        assert_eq!(k_weight(&s), 15);

        assert!(matches!(make_minimizer(3, 9), Err(Error::ConstructionOutOfRange { .. })));
    }

    #[test]
    fn prop2_member_examples() {
        let s = make_prop2_member(1, 4, 1).unwrap();
        assert_eq!(s, sg(&[4, 6, 7, 9]));
        assert_eq!(s.gaps().as_slice(), &[1, 2, 3, 5]);
        assert_eq!((s_weight(&s), k_weight(&s)), (1, 3));

        let s = make_prop2_member(3, 20, 4).unwrap();
        assert_eq!(s, make_maximizer(3, 20).unwrap());
        assert_eq!(k_weight(&s), 109);

        assert!(matches!(make_prop2_member(1, 4, 2), Err(Error::ConstructionOutOfRange { .. })));
        assert!(matches!(make_prop2_member(0, 4, 1), Err(Error::ConstructionOutOfRange { .. })));
        assert!(matches!(make_prop2_member(1, 4, 3), Err(Error::ConstructionOutOfRange { .. })));
    }

    #[test]
    fn bound_examples() {
        let b = check_bounds(&sg(&[4, 6, 11, 13]), 1).unwrap();
        assert_eq!((b.lower_k, b.upper_k, b.w_k), (8, 8, 8));
        assert!(b.within_k && b.within_s && b.attains_min_k && b.attains_max_k);

        let b = check_bounds(&sg(&[4, 14, 29]), 3).unwrap();
        assert_eq!((b.w_k, b.upper_k), (109, 109));
        assert!(b.attains_max_k && !b.attains_min_k);

        let b = check_bounds(&make_minimizer(3, 20).unwrap(), 3).unwrap();
        assert_eq!((b.w_k, b.lower_k), (97, 97));
        assert!(b.attains_min_k && b.within_s);

        assert_eq!(
            check_bounds(&sg(&[4, 5, 6]), 1),
            Err(Error::NotGammaHyperelliptic { gamma: 1 })
        );
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(prop2_spectrum(1, 6).unwrap(), vec![(1, 8), (2, 8)]);
        assert_eq!(
            prop2_spectrum(3, 20).unwrap(),
            vec![(1, 103), (2, 103), (3, 105), (4, 109)]
        );
        assert_eq!(prop2_spectrum(2, 10).unwrap(), vec![(1, 21), (2, 21), (3, 23)]);
        assert!(prop2_spectrum(0, 10).is_err());
        assert!(prop2_spectrum(3, 8).is_err());
        assert_eq!(prop2_nonmaximal_range(3, 20), (103, 105));
    }

    #[test]
    fn gamma_ceiling_bounds_detection() {
        let s = sg(&[4, 14, 29]);
        assert!(gamma_ceiling(&s) >= 3);
        assert_eq!(gamma_ceiling(&Semigroup::naturals()), 0);
    }
}
