//! Numerical semigroups given by generators, and their Apéry sets.
//!
//! A [`NumericalSemigroup`] is built once from any generating list and then
//! caches its minimal generators, gap set and Frobenius number. Construction
//! goes through the Apéry set relative to the multiplicity, which is computed
//! as single-source shortest distances on the residue classes modulo the
//! multiplicity (each generator `g` contributes the edges `r -> (r + g) mod a`
//! of weight `g`).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::arith::gcd_all;
use crate::error::{Error, Result};
use crate::residue::IntMultiset;

/// Largest table (Apéry set length or sieve length) the constructors will
/// allocate.
pub const TABLE_LIMIT: u64 = 1 << 26;

/// A numerical semigroup `⟨G⟩ ⊆ N₀` with its cached invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: Vec<u64>,
    // is_gap[n] for 0 <= n <= frobenius
    is_gap: Vec<bool>,
}

/// The least element of `S` in each residue class modulo `relative_to`.
///
/// `elements()[r]` is congruent to `r` modulo `relative_to`, so the set is
/// stored indexed by residue rather than sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AperySet {
    relative_to: u64,
    elements: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds `⟨gens⟩`, reducing the input to its minimal generating set.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let gcd = gcd_all(gens);
        if gcd != 1 {
            return Err(Error::GcdNotOne { gcd });
        }

        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mult = sorted[0];
        if mult == 1 {
            return Ok(Self::natural_numbers());
        }
        check_table("Apery set of the multiplicity", mult)?;

        // A generator is redundant iff the smaller minimal generators already
        // reach its residue class at or below it.
        let mut minimal = vec![mult];
        let mut minima = residue_class_minima(mult, &minimal);
        for &g in &sorted[1..] {
            let r = (g % mult) as usize;
            if minima[r].is_some_and(|least| least <= g) {
                continue;
            }
            minimal.push(g);
            minima = residue_class_minima(mult, &minimal);
        }

        let apery = minima
            .into_iter()
            .collect::<Option<Vec<u64>>>()
            .ok_or(Error::Overflow("Apery set of the multiplicity"))?;
        let top = *apery.iter().max().expect("multiplicity is at least 2");
        check_table("gap sieve", top)?;
        let frobenius = (top - mult) as usize;

        let members = representable_up_to(top as usize, &minimal);
        debug_assert!(members[frobenius + 1..].iter().all(|&m| m));
        let is_gap: Vec<bool> = members[..=frobenius].iter().map(|&m| !m).collect();
        let gaps = (0..=frobenius as u64)
            .filter(|&n| is_gap[n as usize])
            .collect();

        Ok(Self {
            generators: minimal,
            gaps,
            is_gap,
        })
    }

    /// `⟨1⟩ = N₀`: no gaps, Frobenius number −1.
    pub fn natural_numbers() -> Self {
        Self {
            generators: vec![1],
            gaps: Vec::new(),
            is_gap: Vec::new(),
        }
    }

    /// The minimal generating set, strictly increasing.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest gap, or −1 when the semigroup is all of `N₀`.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&f| f as i64)
    }

    /// The gaps in increasing order.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn gap_multiset(&self) -> IntMultiset {
        self.gaps.iter().map(|&g| g as i64).collect()
    }

    pub fn contains(&self, n: i64) -> bool {
        match usize::try_from(n) {
            Err(_) => false,
            Ok(n) => n >= self.is_gap.len() || !self.is_gap[n],
        }
    }

    fn contains_u(&self, n: u64) -> bool {
        n >= self.is_gap.len() as u64 || !self.is_gap[n as usize]
    }

    /// `Ap(S; a)`; `a` must be a nonzero element of `S`.
    pub fn apery_set(&self, a: u64) -> Result<AperySet> {
        if a == 0 || !self.contains_u(a) {
            return Err(Error::NotAMember { element: a });
        }
        check_table("Apery set", a)?;
        // Each residue walk stops once it passes the Frobenius number, so the
        // total work is O(a + F).
        let elements = (0..a)
            .map(|r| {
                let mut s = r;
                while !self.contains_u(s) {
                    s += a;
                }
                s
            })
            .collect();
        Ok(AperySet {
            relative_to: a,
            elements,
        })
    }

    /// Whether the embedding dimension equals the multiplicity.
    pub fn is_maximal_embedding_dimension(&self) -> bool {
        self.embedding_dimension() as u64 == self.multiplicity()
    }

    /// Least nonzero element coprime to `m`. Always exists since every
    /// integer above the Frobenius number is an element.
    pub fn least_element_coprime_to(&self, m: u64) -> u64 {
        assert!(m >= 1, "modulus must be positive");
        (1..)
            .find(|&a| self.contains_u(a) && crate::arith::gcd(a, m) == 1)
            .expect("an element congruent to 1 exists above the Frobenius number")
    }
}

impl AperySet {
    pub fn relative_to(&self) -> u64 {
        self.relative_to
    }

    /// Elements indexed by residue class.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in increasing order.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    /// `Ap(S; a) \ {0}`, indexed by residues `1..a`.
    pub fn nonzero(&self) -> &[u64] {
        &self.elements[1..]
    }

    pub fn to_multiset(&self) -> IntMultiset {
        self.elements.iter().map(|&e| e as i64).collect()
    }

    pub fn frobenius(&self) -> i64 {
        frobenius_from_apery(self)
    }
}

/// `max(Ap(S; a)) − a`, the Frobenius number of the underlying semigroup.
pub fn frobenius_from_apery(ap: &AperySet) -> i64 {
    let max = *ap.elements.iter().max().expect("Apery sets are nonempty");
    max as i64 - ap.relative_to as i64
}

fn check_table(what: &'static str, size: u64) -> Result<()> {
    if size > TABLE_LIMIT {
        return Err(Error::TooLarge {
            what,
            size,
            limit: TABLE_LIMIT,
        });
    }
    Ok(())
}

/// Least element of `⟨gens⟩` in each residue class mod `modulus`, or `None`
/// for classes that are unreachable (or only reachable past `u64::MAX`).
pub(crate) fn residue_class_minima(modulus: u64, gens: &[u64]) -> Vec<Option<u64>> {
    let a = modulus as usize;
    let mut dist: Vec<Option<u64>> = vec![None; a];
    dist[0] = Some(0);
    let steps: Vec<u64> = gens.iter().copied().filter(|g| g % modulus != 0).collect();
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &g in &steps {
            let Some(nd) = d.checked_add(g) else {
                continue;
            };
            let next = ((r as u64 + g % modulus) % modulus) as usize;
            if dist[next].is_none_or(|cur| nd < cur) {
                dist[next] = Some(nd);
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

/// `members[n]` is true iff `n` is a non-negative combination of `gens`.
fn representable_up_to(limit: usize, gens: &[u64]) -> Vec<bool> {
    let mut members = vec![false; limit + 1];
    members[0] = true;
    for n in 1..=limit {
        members[n] = gens
            .iter()
            .any(|&g| (g as usize) <= n && members[n - g as usize]);
    }
    members
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn builds_two_generator_examples() {
        let s57 = s(&[5, 7]);
        assert_eq!(s57.generators(), &[5, 7]);
        assert_eq!(s57.multiplicity(), 5);
        assert_eq!(s57.embedding_dimension(), 2);
        assert_eq!(s57.gaps(), &[1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]);
        assert_eq!(s57.frobenius(), 23);

        let s = s(&[4, 5, 11]);
        assert_eq!(s.generators(), &[4, 5, 11]);
        assert_eq!(s.multiplicity(), 4);
        assert_eq!(s.embedding_dimension(), 3);
        assert_eq!(s.gaps(), &[1, 2, 3, 6, 7]);
    }

    #[test]
    fn drops_redundant_generators() {
        assert_eq!(s(&[2, 4, 7]).generators(), &[2, 7]);
        assert_eq!(s(&[7, 2, 2, 9, 4]).generators(), &[2, 7]);
        assert_eq!(s(&[3, 5, 8, 13]).generators(), &[3, 5]);
        assert_eq!(s(&[6, 1, 9]).generators(), &[1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::GcdNotOne { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 1]),
            Err(Error::ZeroGenerator)
        );
    }

    #[test]
    fn detects_overflow_and_oversized_tables() {
        // u64::MAX ≡ 0 (mod 3) so u64::MAX - 1 ≡ 2 and the class of 1 needs
        // 2 (u64::MAX - 1), which does not fit.
        assert_eq!(
            NumericalSemigroup::from_generators(&[3, u64::MAX - 1]),
            Err(Error::Overflow("Apery set of the multiplicity"))
        );
        assert!(matches!(
            NumericalSemigroup::from_generators(&[2, (1 << 63) - 1]),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[TABLE_LIMIT + 1, TABLE_LIMIT + 2]),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn natural_numbers_have_no_gaps() {
        let n = s(&[1]);
        assert_eq!(n, NumericalSemigroup::natural_numbers());
        assert_eq!(n.genus(), 0);
        assert_eq!(n.frobenius(), -1);
        assert!(n.contains(0) && n.contains(1) && !n.contains(-1));
        assert_eq!(n.apery_set(1).unwrap().elements(), &[0]);
        assert_eq!(n.apery_set(1).unwrap().frobenius(), -1);
        assert!(n.is_maximal_embedding_dimension());
    }

    #[test]
    fn membership() {
        let s35 = s(&[3, 5]);
        assert!(s35.contains(8));
        assert!(!s35.contains(4));
        assert!(s35.contains(0));
        assert!(!s35.contains(-3));
        assert!(s35.contains(1_000_000));
        let members: Vec<i64> = (0..11).filter(|&n| s35.contains(n)).collect();
        assert_eq!(members, vec![0, 3, 5, 6, 8, 9, 10]);
    }

    #[test]
    fn apery_sets_of_three_five() {
        let s35 = s(&[3, 5]);
        assert_eq!(s35.apery_set(3).unwrap().sorted(), vec![0, 5, 10]);
        assert_eq!(s35.apery_set(5).unwrap().sorted(), vec![0, 3, 6, 9, 12]);
        assert_eq!(
            s35.apery_set(14).unwrap().sorted(),
            vec![0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 15, 16, 18, 21]
        );
        let ap = s35.apery_set(5).unwrap();
        for (r, &e) in ap.elements().iter().enumerate() {
            assert_eq!(e % 5, r as u64);
        }
        assert_eq!(s35.apery_set(4), Err(Error::NotAMember { element: 4 }));
        assert_eq!(s35.apery_set(0), Err(Error::NotAMember { element: 0 }));
    }

    #[test]
    fn frobenius_from_apery_sets() {
        assert_eq!(s(&[3, 5]).apery_set(3).unwrap().frobenius(), 7);
        assert_eq!(frobenius_from_apery(&s(&[5, 7]).apery_set(5).unwrap()), 23);
    }

    #[test]
    fn maximal_embedding_dimension() {
        assert!(s(&[2, 7]).is_maximal_embedding_dimension());
        assert!(!s(&[4, 5, 11]).is_maximal_embedding_dimension());
        assert!(s(&[3, 4, 5]).is_maximal_embedding_dimension());
    }

    #[test]
    fn coprime_base_selection() {
        let s35 = s(&[3, 5]);
        assert_eq!(s35.least_element_coprime_to(4), 3);
        assert_eq!(s35.least_element_coprime_to(3), 5);
        assert_eq!(s35.least_element_coprime_to(15), 8);
        assert_eq!(s(&[1]).least_element_coprime_to(6), 1);
    }
}
