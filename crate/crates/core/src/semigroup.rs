//! Numerical semigroups stored as a membership bitmask up to the conductor.
//!
//! A [`Semigroup`] keeps one bit per integer in `[0, c]`, where `c` is the
//! conductor; everything at or above `c` is a member and needs no storage.
//! The gap set is the set of unset bits.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A numerical semigroup with its basic invariants precomputed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    words: Vec<u64>,
    genus: u32,
    conductor: u32,
    multiplicity: u32,
}

/// Strictly increasing gaps `l_1 < ... < l_g` whose complement is closed
/// under addition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapList(Vec<u32>);

impl GapList {
    /// Validates ordering, positivity and closure of the complement.
    pub fn new(gaps: Vec<u32>) -> Result<Self> {
        if gaps.first() == Some(&0) {
            return Err(Error::InvalidGapList {
                reason: "0 is always a member".into(),
            });
        }
        if let Some(w) = gaps.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGapList {
                reason: format!("not strictly increasing at {} , {}", w[0], w[1]),
            });
        }
        let top = gaps.last().copied().unwrap_or(0) as usize;
        let mut is_gap = vec![false; top + 1];
        for &l in &gaps {
            is_gap[l as usize] = true;
        }
        for &l in &gaps {
            for a in 1..=l / 2 {
                if !is_gap[a as usize] && !is_gap[(l - a) as usize] {
                    return Err(Error::NotASemigroup { a, b: l - a, sum: l });
                }
            }
        }
        Ok(GapList(gaps))
    }

    pub(crate) fn new_unchecked(gaps: Vec<u32>) -> Self {
        GapList(gaps)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl AsRef<[u32]> for GapList {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Semigroup {
    /// The full semigroup of non-negative integers (genus 0).
    pub fn naturals() -> Self {
        Self::from_membership(&[true])
    }

    /// Smallest submonoid of the naturals containing `gens`.
    ///
    /// Members are sieved in increasing order; once a run of `min(gens)`
    /// consecutive members appears, every later integer is a member too.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        let m = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
        if m == 0 {
            return Err(Error::ZeroGenerator);
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCofinite { gcd: g });
        }

        let mut members: Vec<bool> = Vec::new();
        let mut run = 0u32;
        let mut x = 0usize;
        loop {
            let member = x == 0
                || gens
                    .iter()
                    .any(|&a| a as usize <= x && members[x - a as usize]);
            members.push(member);
            run = if member { run + 1 } else { 0 };
            if run == m {
                let conductor = x + 1 - m as usize;
                members.truncate(conductor + 1);
                return Ok(Self::from_membership(&members));
            }
            x += 1;
        }
    }

    /// Semigroup whose gap set is exactly `gaps` (validated).
    pub fn from_gaps(gaps: &[u32]) -> Result<Self> {
        let list = GapList::new(gaps.to_vec())?;
        Ok(Self::from_gap_list(&list))
    }

    pub fn from_gap_list(gaps: &GapList) -> Self {
        let c = gaps.as_slice().last().map_or(0, |&l| l as usize + 1);
        let mut members = vec![true; c + 1];
        for &l in gaps.as_slice() {
            members[l as usize] = false;
        }
        Self::from_membership(&members)
    }

    /// Builds from a membership table; every integer past the table is a member.
    pub(crate) fn from_membership(members: &[bool]) -> Self {
        debug_assert!(members.first().copied().unwrap_or(true));
        let conductor = members
            .iter()
            .rposition(|&b| !b)
            .map_or(0, |frob| frob + 1);
        let mut words = vec![0u64; conductor / WORD + 1];
        let mut genus = 0u32;
        for x in 0..=conductor {
            let member = members.get(x).copied().unwrap_or(true);
            if member {
                words[x / WORD] |= 1 << (x % WORD);
            } else {
                genus += 1;
            }
        }
        let multiplicity = (1..=conductor + 1)
            .find(|&x| members.get(x).copied().unwrap_or(true))
            .unwrap() as u32;
        let s = Semigroup {
            words,
            genus,
            conductor: conductor as u32,
            multiplicity,
        };
        assert!(
            s.frobenius() < 2 * i64::from(genus),
            "Frobenius number exceeds 2g - 1; input was not closed"
        );
        s
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        if x >= self.conductor {
            return true;
        }
        let x = x as usize;
        self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Largest gap, or -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        i64::from(self.conductor) - 1
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn gap_iter(&self) -> impl Iterator<Item = u32> + '_ {
        (1..self.conductor).filter(move |&x| !self.contains(x))
    }

    pub fn gaps(&self) -> GapList {
        GapList::new_unchecked(self.gap_iter().collect())
    }

    /// Members in increasing order, starting at 0 (infinite).
    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        (0..).filter(move |&x| self.contains(x))
    }

    /// The `count` smallest nonzero members.
    pub fn small_members(&self, count: usize) -> Vec<u32> {
        self.members().skip(1).take(count).collect()
    }

    /// For each residue `r` mod `n`, the least member congruent to `r`.
    pub fn apery_set(&self, n: u32) -> Result<Vec<u32>> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotMember { n });
        }
        let mut apery = vec![None; n as usize];
        let mut missing = n;
        for x in self.members() {
            let slot = &mut apery[(x % n) as usize];
            if slot.is_none() {
                *slot = Some(x);
                missing -= 1;
                if missing == 0 {
                    break;
                }
            }
        }
        Ok(apery.into_iter().map(Option::unwrap).collect())
    }

    /// `l_g = 2g - 1`.
    pub fn is_symmetric(&self) -> bool {
        self.frobenius() == 2 * i64::from(self.genus) - 1
    }

    /// `x in S <=> l_g - x not in S` for every `0 <= x <= l_g`.
    pub fn is_symmetric_by_mirror(&self) -> bool {
        let Ok(f) = u32::try_from(self.frobenius()) else {
            return true;
        };
        (0..=f).all(|x| self.contains(x) != self.contains(f - x))
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("genus", &self.genus)
            .field("frobenius", &self.frobenius())
            .field("multiplicity", &self.multiplicity)
            .field("gaps", &self.gaps().as_slice())
            .finish()
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S(g={}, gaps={{", self.genus)?;
        for (i, l) in self.gap_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("})")
    }
}

impl From<&GapList> for Semigroup {
    fn from(gaps: &GapList) -> Self {
        Semigroup::from_gap_list(gaps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Closure by brute force over a window, independent of the sieve.
    fn closure_oracle(gens: &[u32], limit: u32) -> Vec<u32> {
        let mut members = std::collections::BTreeSet::from([0u32]);
        let mut frontier = vec![0u32];
        while let Some(x) = frontier.pop() {
            for &a in gens {
                let y = x + a;
                if y <= limit && members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        (1..=limit).filter(|x| !members.contains(x)).collect()
    }

    #[test]
    fn two_three() {
        let s = Semigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.gaps().as_slice(), &[1]);
        assert_eq!((s.genus(), s.frobenius(), s.multiplicity()), (1, 1, 2));
    }

    #[test]
    fn maximizer_matches_oracle() {
        let s = Semigroup::from_generators(&[4, 14, 29]).unwrap();
        assert_eq!(s.genus(), 20);
        assert_eq!(s.frobenius(), 39);
        assert_eq!(s.multiplicity(), 4);
        assert_eq!(s.gaps().as_slice(), closure_oracle(&[4, 14, 29], 200).as_slice());
        let evens: Vec<u32> = s.gap_iter().filter(|x| x % 2 == 0).collect();
        assert_eq!(evens, vec![2, 6, 10]);
        assert_eq!(*s.gaps().as_slice().last().unwrap(), 39);
    }

    #[test]
    fn non_cofinite_and_bad_generators() {
        assert_eq!(
            Semigroup::from_generators(&[4, 6]),
            Err(Error::NotCofinite { gcd: 2 })
        );
        assert_eq!(Semigroup::from_generators(&[]), Err(Error::EmptyGenerators));
        assert_eq!(Semigroup::from_generators(&[0, 1]), Err(Error::ZeroGenerator));
    }

    #[test]
    fn naturals() {
        let n = Semigroup::from_generators(&[1]).unwrap();
        assert_eq!(n, Semigroup::naturals());
        assert!(n.gaps().is_empty());
        assert_eq!((n.genus(), n.frobenius(), n.conductor(), n.multiplicity()), (0, -1, 0, 1));
        assert!(n.is_symmetric() && n.is_symmetric_by_mirror());
    }

    #[test]
    fn from_gaps_examples() {
        let s = Semigroup::from_gaps(&[1, 3, 5, 7, 9]).unwrap();
        assert_eq!(s, Semigroup::from_generators(&[2, 11]).unwrap());
        assert_eq!(s.genus(), 5);

        let s = Semigroup::from_gaps(&[1, 2, 3, 5, 9]).unwrap();
        assert_eq!(s, Semigroup::from_generators(&[4, 6, 7]).unwrap());
        assert_eq!(closure_oracle(&[4, 6, 7], 50), vec![1, 2, 3, 5, 9]);

        assert_eq!(
            Semigroup::from_gaps(&[2, 4]),
            Err(Error::NotASemigroup { a: 1, b: 1, sum: 2 })
        );
        assert!(matches!(
            Semigroup::from_gaps(&[3, 1]),
            Err(Error::InvalidGapList { .. })
        ));
        assert!(matches!(
            Semigroup::from_gaps(&[0, 1]),
            Err(Error::InvalidGapList { .. })
        ));
    }

    #[test]
    fn apery_examples() {
        let s = Semigroup::from_generators(&[2, 11]).unwrap();
        assert_eq!(s.apery_set(2).unwrap(), vec![0, 11]);
        let s = Semigroup::from_generators(&[4, 6, 7]).unwrap();
        assert_eq!(s.apery_set(4).unwrap(), vec![0, 13, 6, 7]);
        let s = Semigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.apery_set(1), Err(Error::NotMember { n: 1 }));
        assert_eq!(s.apery_set(2).unwrap(), vec![0, 3]);
        assert_eq!(s.apery_set(0), Err(Error::NotMember { n: 0 }));
    }

    #[test]
    fn symmetry_examples() {
        let s = Semigroup::from_generators(&[2, 11]).unwrap();
        assert!(s.is_symmetric() && s.is_symmetric_by_mirror());
        let s = Semigroup::from_generators(&[4, 14, 29]).unwrap();
        assert!(s.is_symmetric() && s.is_symmetric_by_mirror());
        let s = Semigroup::from_generators(&[4, 6, 11, 13]).unwrap();
        assert_eq!(s.gaps().as_slice(), &[1, 2, 3, 5, 7, 9]);
        assert!(!s.is_symmetric() && !s.is_symmetric_by_mirror());
    }

    #[test]
    fn contains_above_conductor_without_storage() {
        let s = Semigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(s.conductor(), 8);
        assert!((8..10_000).all(|x| s.contains(x)));
        assert_eq!(s.small_members(4), vec![3, 5, 6, 8]);
    }
}
