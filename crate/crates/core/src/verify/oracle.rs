use std::collections::BTreeMap;

use crate::arith::gcd;
use crate::criteria::ArithmeticAperyForm;
use crate::error::Result;
use crate::semigroup::NumericalSemigroup;

/// Ground truth for gap sets, computed from scratch.
///
/// Membership is decided by forward closure from 0 over `[0, B]` with
/// `B = max² + max`, which is above the Frobenius number of any generating
/// set with that maximum.
#[derive(Clone, Debug)]
pub struct Oracle {
    gens: Vec<u64>,
    gaps: Vec<u64>,
}

impl Oracle {
    /// `gens` must be positive with gcd 1 and small enough that the closure
    /// table fits in memory.
    pub fn new(gens: &[u64]) -> Self {
        let max = *gens.iter().max().expect("nonempty generator list") as usize;
        let min = *gens.iter().min().unwrap() as usize;
        assert!(min >= 1, "generators must be positive");
        let bound = max * max + max;
        let mut reached = vec![false; bound + 1];
        reached[0] = true;
        for n in 0..=bound {
            if !reached[n] {
                continue;
            }
            for &g in gens {
                if let Some(slot) = reached.get_mut(n + g as usize) {
                    *slot = true;
                }
            }
        }
        // `min` consecutive members mean every larger integer is a member.
        assert!(
            reached[bound + 1 - min..].iter().all(|&r| r),
            "closure bound too small for {gens:?}; is the gcd 1?"
        );
        let gaps = (1..=bound as u64)
            .filter(|&n| !reached[n as usize])
            .collect();
        Self {
            gens: gens.to_vec(),
            gaps,
        }
    }

    pub fn for_semigroup(s: &NumericalSemigroup) -> Self {
        Self::new(s.generators())
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn is_member(&self, n: u64) -> bool {
        self.gaps.binary_search(&n).is_err()
    }

    /// Counts the gaps in each class modulo `m` and compares the counts.
    pub fn evenly_distributed(&self, m: u64) -> bool {
        assert!(m >= 1, "modulus must be positive");
        let mut counts = vec![0u64; m as usize];
        for &g in &self.gaps {
            counts[(g % m) as usize] += 1;
        }
        counts.iter().all(|&c| c == counts[0])
    }
}

/// Oracle verdict for `H(S)` modulo `m`, recomputing the gaps from scratch.
pub fn oracle_ed(s: &NumericalSemigroup, m: u64) -> bool {
    Oracle::for_semigroup(s).evenly_distributed(m)
}

/// `(x^a - 1)·P_H(x) = Σ_{n∈Ap(S;a)} x^n - Σ_{n<a} x^n`, checked as an
/// identity of sparse polynomials in `Z[x]`.
pub fn check_tuenter_identity(s: &NumericalSemigroup, a: u64) -> Result<bool> {
    let ap = s.apery_set(a)?;
    let mut lhs: BTreeMap<u64, i64> = BTreeMap::new();
    for &h in s.gaps() {
        *lhs.entry(h + a).or_default() += 1;
        *lhs.entry(h).or_default() -= 1;
    }
    let mut rhs: BTreeMap<u64, i64> = BTreeMap::new();
    for &n in ap.elements() {
        *rhs.entry(n).or_default() += 1;
    }
    for n in 0..a {
        *rhs.entry(n).or_default() -= 1;
    }
    lhs.retain(|_, c| *c != 0);
    rhs.retain(|_, c| *c != 0);
    Ok(lhs == rhs)
}

/// `gcd(aδ, m) = 1` and `{a, aδ+β+1, β+δ, δ+1} ≡ {a+δ, aδ+β, β+δ+1, 1} (mod m)`.
pub fn four_element_congruence(form: &ArithmeticAperyForm, m: u64) -> bool {
    let (a, beta, delta) = (form.a as u128, form.beta as u128, form.delta as u128);
    if gcd(form.a, m) != 1 || gcd(form.delta, m) != 1 {
        return false;
    }
    let m = m as u128;
    let reduce = |v: [u128; 4]| {
        let mut r = v.map(|x| x % m);
        r.sort_unstable();
        r
    };
    let left = reduce([a, a * delta + beta + 1, beta + delta, delta + 1]);
    let right = reduce([a + delta, a * delta + beta, beta + delta + 1, 1]);
    left == right
}

/// Whether `C_m(x) = 1 + x + … + x^(m-1)` divides `p` in `Z[x]`, where
/// `p[k]` is the coefficient of `x^k`. Long division with a running window
/// sum, since every coefficient of the divisor is 1.
pub fn divisible_by_c_m(p: &[i64], m: u64) -> bool {
    let m = m as usize;
    assert!(m >= 1, "modulus must be positive");
    let width = m - 1;
    if p.len() <= width {
        return p.iter().all(|&c| c == 0);
    }
    let top = p.len() - 1;
    let mut q = vec![0i128; top - width + 1];
    // window holds q[k+1] + … + q[k+width]
    let mut window: i128 = 0;
    for k in (0..q.len()).rev() {
        q[k] = p[k + width] as i128 - window;
        window += q[k];
        if let Some(&old) = q.get(k + width) {
            window -= old;
        }
    }
    let mut prefix: i128 = 0;
    (0..width).all(|j| {
        prefix += q.get(j).copied().unwrap_or(0);
        p[j] as i128 == prefix
    })
}
