//! Residue histograms of finite multisets, multiset congruence, and exact
//! arithmetic in `Z[x]/(x^m - 1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::residue;
use crate::error::{Error, Result};

/// A finite multiset of integers. Order is irrelevant, multiplicity is not.
#[derive(Clone, Debug, Default)]
pub struct IntMultiset {
    entries: Vec<i64>,
}

impl IntMultiset {
    pub fn new(entries: Vec<i64>) -> Self {
        Self { entries }
    }

    /// The integer interval `[lo, hi]`; empty when `lo > hi`.
    pub fn interval(lo: i64, hi: i64) -> Self {
        Self {
            entries: if lo > hi {
                Vec::new()
            } else {
                (lo..=hi).collect()
            },
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, value: i64) {
        self.entries.push(value);
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &IntMultiset) -> IntMultiset {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        IntMultiset { entries }
    }
}

impl PartialEq for IntMultiset {
    fn eq(&self, other: &Self) -> bool {
        if self.entries.len() != other.entries.len() {
            return false;
        }
        let mut a = self.entries.clone();
        let mut b = other.entries.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

impl Eq for IntMultiset {}

impl FromIterator<i64> for IntMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        Self {
            entries: iter.into_iter().collect(),
        }
    }
}

impl From<Vec<i64>> for IntMultiset {
    fn from(entries: Vec<i64>) -> Self {
        Self { entries }
    }
}

/// `counts[r]` is the number of entries congruent to `r` modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueHistogram {
    modulus: u64,
    counts: Vec<u64>,
}

impl ResidueHistogram {
    pub fn from_values<I: IntoIterator<Item = i64>>(values: I, m: u64) -> Self {
        let mut counts = vec![0u64; m as usize];
        for v in values {
            counts[residue(v, m) as usize] += 1;
        }
        Self { modulus: m, counts }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_uniform(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }

    /// Lexicographically least `(r1, r2)` with unequal counts. Whenever the
    /// histogram is not uniform this pair starts at residue 0.
    pub fn first_unequal_pair(&self) -> Option<(u64, u64)> {
        let first = *self.counts.first()?;
        self.counts
            .iter()
            .position(|&c| c != first)
            .map(|r| (0, r as u64))
    }
}

/// Residue histogram of `a` modulo `m`. Panics if `m == 0`.
pub fn residue_counts(a: &IntMultiset, m: u64) -> ResidueHistogram {
    assert!(m >= 1, "modulus must be positive");
    ResidueHistogram::from_values(a.entries.iter().copied(), m)
}

/// `A ≡ B (mod m)`: equal residue histograms.
pub fn multiset_congruent(a: &IntMultiset, b: &IntMultiset, m: u64) -> bool {
    a.len() == b.len() && residue_counts(a, m) == residue_counts(b, m)
}

/// Every residue class modulo `m` holds the same number of entries.
pub fn is_evenly_distributed(a: &IntMultiset, m: u64) -> bool {
    residue_counts(a, m).is_uniform()
}

/// A class in `Z[x]/(x^m - 1)`, stored as its dense representative of degree
/// below `m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycPoly {
    coeffs: Vec<i64>,
}

impl CycPoly {
    pub fn zero(m: u64) -> Self {
        assert!(m >= 1, "modulus must be positive");
        Self {
            coeffs: vec![0; m as usize],
        }
    }

    /// The class of `x^e`.
    pub fn monomial(m: u64, e: u64) -> Self {
        let mut p = Self::zero(m);
        p.coeffs[(e % m) as usize] = 1;
        p
    }

    /// Reduces an arbitrary coefficient vector (`coeffs[k]` for `x^k`).
    pub fn from_coeffs(m: u64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero(m);
        for (k, &c) in coeffs.iter().enumerate() {
            let slot = &mut p.coeffs[(k as u64 % m) as usize];
            *slot = slot.checked_add(c).expect("coefficient overflow");
        }
        p
    }

    pub fn modulus(&self) -> u64 {
        self.coeffs.len() as u64
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Multiplication by `x^k`, a cyclic rotation of the coefficients.
    pub fn shift(&self, k: u64) -> Self {
        let m = self.coeffs.len();
        let k = (k % m as u64) as usize;
        let mut coeffs = vec![0; m];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(i + k) % m] = c;
        }
        Self { coeffs }
    }

    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        self.zip_with(rhs, i64::checked_add)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        self.zip_with(rhs, i64::checked_sub)
    }

    /// Cyclic convolution.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.modulus(), rhs.modulus(), "moduli differ");
        let m = self.coeffs.len();
        let mut coeffs = vec![0i64; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let slot = &mut coeffs[(i + j) % m];
                *slot = slot.checked_add(a.checked_mul(b)?)?;
            }
        }
        Some(Self { coeffs })
    }

    fn zip_with(&self, rhs: &Self, op: fn(i64, i64) -> Option<i64>) -> Option<Self> {
        assert_eq!(self.modulus(), rhs.modulus(), "moduli differ");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| op(a, b))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { coeffs })
    }
}

impl fmt::Debug for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CycPoly(mod x^{} - 1, {:?})",
            self.coeffs.len(),
            self.coeffs
        )
    }
}

impl Add for &CycPoly {
    type Output = CycPoly;
    fn add(self, rhs: &CycPoly) -> CycPoly {
        self.checked_add(rhs).expect("coefficient overflow")
    }
}

impl Sub for &CycPoly {
    type Output = CycPoly;
    fn sub(self, rhs: &CycPoly) -> CycPoly {
        self.checked_sub(rhs).expect("coefficient overflow")
    }
}

impl Mul for &CycPoly {
    type Output = CycPoly;
    fn mul(self, rhs: &CycPoly) -> CycPoly {
        self.checked_mul(rhs).expect("coefficient overflow")
    }
}

impl Neg for &CycPoly {
    type Output = CycPoly;
    fn neg(self) -> CycPoly {
        &CycPoly::zero(self.modulus()) - self
    }
}

/// The generating function `Σ_{a∈A} x^a` reduced modulo `x^m - 1`.
pub fn reduce_exponents(a: &IntMultiset, m: u64) -> Result<CycPoly> {
    let mut p = CycPoly::zero(m);
    for &e in a.entries() {
        if e < 0 {
            return Err(Error::NegativeExponent { value: e });
        }
        p.coeffs[residue(e, m) as usize] += 1;
    }
    Ok(p)
}

/// `C_n(x) = 1 + x + … + x^(n-1)` reduced modulo `x^m - 1`.
pub fn cyc_c_n(n: u64, m: u64) -> CycPoly {
    assert!(m >= 1, "modulus must be positive");
    let (full, rest) = (n / m, n % m);
    let coeffs = (0..m)
        .map(|r| i64::try_from(full + u64::from(r < rest)).expect("coefficient overflow"))
        .collect();
    CycPoly { coeffs }
}

/// `(x - 1)·P_A(x) ≡ 0 (mod x^m - 1)`.
pub fn ed_via_polynomial(a: &IntMultiset, m: u64) -> Result<bool> {
    let p = reduce_exponents(a, m)?;
    Ok((&p.shift(1) - &p).is_zero())
}
