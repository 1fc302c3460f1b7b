//! Small integer helpers shared by the other modules.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Canonical residue of `value` in `[0, m)`.
pub fn residue(value: i64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    (value as i128).rem_euclid(m as i128) as u64
}

/// Canonical residue of an unsigned value.
pub fn residue_u(value: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    value % m
}

/// `x ≡ y (mod m)` with both sides allowed to be negative.
pub fn congruent(x: i128, y: i128, m: u64) -> bool {
    assert!(m >= 1, "modulus must be positive");
    (x - y).rem_euclid(m as i128) == 0
}

/// Positive divisors of `n` in increasing order; empty for `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_of_small_numbers() {
        assert_eq!(divisors(0), Vec::<u64>::new());
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn residues_are_euclidean() {
        assert_eq!(residue(-1, 5), 4);
        assert_eq!(residue(-10, 5), 0);
        assert_eq!(
            residue(i64::MIN, 7),
            (i64::MIN as i128).rem_euclid(7) as u64
        );
        assert!(congruent(-1, 6, 7));
        assert!(!congruent(1, 2, 3));
    }

    #[test]
    fn gcd_of_lists() {
        assert_eq!(gcd_all(&[4, 6]), 2);
        assert_eq!(gcd_all(&[6, 10, 15]), 1);
    }
}
