use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracle::{check_tuenter_identity, divisible_by_c_m, four_element_congruence, Oracle};
use super::{Mismatch, SweepReport};
use crate::arith::{divisors, gcd, gcd_all};
use crate::criteria::{
    classify_family, detect_arithmetic_apery, ed_all_moduli, ed_apery_criterion, ed_arith,
    ed_closed_form, ed_direct, ed_embdim2, ed_gen_arith, ed_main_theorem, ed_med, ed_mult2,
    ed_mult3, ed_polynomial, gen_arith_generators, ArithmeticAperyForm, EdModuli, Family,
};
use crate::exec::Execution;
use crate::residue::{cyc_c_n, multiset_congruent, reduce_exponents, CycPoly, IntMultiset};
use crate::semigroup::NumericalSemigroup;

type Part = (u64, Vec<Mismatch>);

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<Mismatch>,
    check: &str,
    params: &[u64],
    expected: T,
    got: T,
) {
    if expected != got {
        out.push(Mismatch::new(
            check,
            params,
            format!("{expected:?}"),
            format!("{got:?}"),
        ));
    }
}

fn build(gens: &[u64], params: &[u64], out: &mut Vec<Mismatch>) -> Option<NumericalSemigroup> {
    match NumericalSemigroup::from_generators(gens) {
        Ok(s) => Some(s),
        Err(e) => {
            out.push(Mismatch::new("construct", params, "semigroup", e));
            None
        }
    }
}

/// `⟨a, b⟩` for all coprime `2 ≤ a < b ≤ max_b`: the two-generator closed
/// form against the oracle for `1 ≤ m ≤ genus + 2`, plus the genus formula.
pub fn sweep_embdim2(max_b: u64, exec: Execution) -> SweepReport {
    let started = Instant::now();
    let grid: Vec<(u64, u64)> = (2..=max_b)
        .flat_map(|b| (2..b).map(move |a| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    let parts = exec.map(&grid, |&(a, b)| check_embdim2(a, b));
    SweepReport::collect("emb2", parts, started)
}

fn check_embdim2(a: u64, b: u64) -> Part {
    let mut out = Vec::new();
    let Some(s) = build(&[a, b], &[a, b], &mut out) else {
        return (1, out);
    };
    let oracle = Oracle::new(&[a, b]);
    let genus = (a - 1) * (b - 1) / 2;
    expect_eq(&mut out, "genus_formula", &[a, b], genus, s.genus());
    expect_eq(&mut out, "oracle_genus", &[a, b], oracle.genus(), s.genus());
    let mut checked = 0;
    for m in 1..=genus + 2 {
        let truth = oracle.evenly_distributed(m);
        let params = [a, b, m];
        expect_eq(
            &mut out,
            "ed_embdim2",
            &params,
            Ok(truth),
            ed_embdim2(a, b, m),
        );
        if a == 2 {
            expect_eq(&mut out, "ed_mult2", &params, Ok(truth), ed_mult2(b, m));
        }
        checked += 1;
    }
    (checked, out)
}

/// MED semigroups `⟨{a} ∪ {ha + id}⟩` for `3 ≤ a ≤ max_a`, `1 ≤ h, d ≤ max_hd`
/// with `gcd(a, d) = 1`. Checks both the family closed form and the general
/// arithmetic-Apéry criterion (after detecting `(a, β, δ)`) against the
/// oracle, the four-element multiset test, and the specialisations for
/// `h = 1` and `a = 3`.
pub fn sweep_gen_arith(max_a: u64, max_hd: u64, exec: Execution) -> SweepReport {
    let started = Instant::now();
    let mut grid = Vec::new();
    for a in 3..=max_a {
        for h in 1..=max_hd {
            for d in (1..=max_hd).filter(|&d| gcd(a, d) == 1) {
                grid.push((a, h, d));
            }
        }
    }
    let parts = exec.map(&grid, |&(a, h, d)| check_gen_arith(a, h, d));
    SweepReport::collect("genarith", parts, started)
}

fn check_gen_arith(a: u64, h: u64, d: u64) -> Part {
    let mut out = Vec::new();
    let params = [a, h, d];
    let gens = gen_arith_generators(a, h, d).expect("small parameters");
    let Some(s) = build(&gens, &params, &mut out) else {
        return (1, out);
    };
    let oracle = Oracle::new(&gens);
    let genus = (a - 1) * (2 * h + d - 1) / 2;
    expect_eq(&mut out, "genus_formula", &params, genus, s.genus());
    expect_eq(&mut out, "oracle_genus", &params, oracle.genus(), s.genus());
    expect_eq(
        &mut out,
        "embedding_dimension",
        &params,
        a as usize,
        s.embedding_dimension(),
    );

    let family = if h == 1 {
        Family::ArithMed { a, d }
    } else {
        Family::GenArithMed { a, h, d }
    };
    expect_eq(&mut out, "classify", &params, family, classify_family(&s));

    let detected = detect_arithmetic_apery(&s, a);
    let expected_form = ArithmeticAperyForm {
        a,
        beta: h * a,
        delta: d,
    };
    expect_eq(
        &mut out,
        "detect_form",
        &params,
        Ok(Some(expected_form)),
        detected.clone(),
    );
    let form = detected.ok().flatten().unwrap_or(expected_form);

    let mut checked = 0;
    for m in 1..=genus + 2 {
        let truth = oracle.evenly_distributed(m);
        let p = [a, h, d, m];
        expect_eq(
            &mut out,
            "ed_gen_arith",
            &p,
            Ok(truth),
            ed_gen_arith(a, h, d, m),
        );
        let theorem = ed_main_theorem(&form, m).map(|r| r.evenly_distributed);
        expect_eq(&mut out, "ed_main_theorem", &p, Ok(truth), theorem);
        expect_eq(
            &mut out,
            "four_element_congruence",
            &p,
            truth,
            four_element_congruence(&form, m),
        );
        if h == 1 {
            expect_eq(&mut out, "ed_arith", &p, Ok(truth), ed_arith(a, d, m));
        }
        if a == 3 {
            let (b, c) = (3 * h + d, 3 * h + 2 * d);
            expect_eq(&mut out, "ed_mult3", &p, Ok(truth), ed_mult3(b, c, m));
        }
        checked += 1;
    }
    (checked, out)
}

/// Odd `b` in `[3, max_b]`: `⟨2, b⟩` is evenly distributed exactly modulo the
/// odd divisors of `(b-1)/2`, in agreement with the multiplicity-2 closed form,
/// the arithmetic-Apéry criterion under `(2, b-1, 1)`, and the oracle.
pub fn sweep_mult2(max_b: u64, exec: Execution) -> SweepReport {
    let started = Instant::now();
    let grid: Vec<u64> = (3..=max_b).step_by(2).collect();
    let parts = exec.map(&grid, |&b| check_mult2(b));
    SweepReport::collect("mult2", parts, started)
}

fn check_mult2(b: u64) -> Part {
    let mut out = Vec::new();
    let Some(s) = build(&[2, b], &[b], &mut out) else {
        return (1, out);
    };
    let oracle = Oracle::new(&[2, b]);
    let genus = (b - 1) / 2;
    let odd_divisors: Vec<u64> = divisors(genus).into_iter().filter(|m| m % 2 == 1).collect();
    expect_eq(
        &mut out,
        "ed_all_moduli",
        &[b],
        EdModuli::Moduli(odd_divisors.clone()),
        ed_all_moduli(&s),
    );
    let form = ArithmeticAperyForm {
        a: 2,
        beta: b - 1,
        delta: 1,
    };
    expect_eq(
        &mut out,
        "detect_form",
        &[b],
        Ok(Some(form)),
        detect_arithmetic_apery(&s, 2),
    );
    let mut checked = 0;
    for m in 1..=genus + 2 {
        let truth = odd_divisors.contains(&m);
        let p = [b, m];
        expect_eq(&mut out, "oracle", &p, truth, oracle.evenly_distributed(m));
        expect_eq(&mut out, "ed_mult2", &p, Ok(truth), ed_mult2(b, m));
        let theorem = ed_main_theorem(&form, m).map(|r| r.evenly_distributed);
        expect_eq(&mut out, "ed_main_theorem", &p, Ok(truth), theorem);
        checked += 1;
    }
    (checked, out)
}

/// Embedding-dimension-3 semigroups `⟨3, b, c⟩` with `c ≤ max_c`: the
/// multiplicity-3 closed form equals the generalized-arithmetic one with
/// `h = (2b - c)/3`, `d = c - b` for every `1 ≤ m ≤ max_m`, and both match the
/// oracle.
pub fn sweep_mult3(max_c: u64, max_m: u64, exec: Execution) -> SweepReport {
    let started = Instant::now();
    let mut grid = Vec::new();
    for c in 5..=max_c {
        for b in 4..c {
            if c < 2 * b && b % 3 != 0 && c % 3 != 0 && b % 3 != c % 3 {
                grid.push((b, c));
            }
        }
    }
    let parts = exec.map(&grid, |&(b, c)| {
        let mut out = Vec::new();
        let (h, d) = ((2 * b - c) / 3, c - b);
        let oracle = Oracle::new(&[3, b, c]);
        for m in 1..=max_m {
            let p = [b, c, m];
            let mult3 = ed_mult3(b, c, m);
            expect_eq(
                &mut out,
                "ed_gen_arith",
                &p,
                mult3.clone(),
                ed_gen_arith(3, h, d, m),
            );
            expect_eq(
                &mut out,
                "oracle",
                &p,
                Ok(oracle.evenly_distributed(m)),
                mult3,
            );
        }
        (max_m, out)
    });
    SweepReport::collect("mult3", parts, started)
}

/// Coprime `1 < a < b ≤ max_b`: evenly distributed modulo 2 iff `a` and `b`
/// are both odd, i.e. as many even gaps as odd ones.
pub fn sweep_parity(max_b: u64, exec: Execution) -> SweepReport {
    let started = Instant::now();
    let grid: Vec<(u64, u64)> = (2..=max_b)
        .flat_map(|b| (2..b).map(move |a| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    let parts = exec.map(&grid, |&(a, b)| {
        let mut out = Vec::new();
        let expected = a % 2 == 1 && b % 2 == 1;
        expect_eq(
            &mut out,
            "ed_embdim2",
            &[a, b],
            Ok(expected),
            ed_embdim2(a, b, 2),
        );
        let oracle = Oracle::new(&[a, b]);
        let even = oracle.gaps().iter().filter(|&&g| g % 2 == 0).count();
        let odd = oracle.gaps().len() - even;
        expect_eq(&mut out, "gap_parity", &[a, b], expected, even == odd);
        (1, out)
    });
    SweepReport::collect("parity", parts, started)
}

/// Random generator list: 3 to 5 values in `[2, max_gen]`, resampled until
/// the gcd is 1.
pub fn random_generators<R: Rng>(rng: &mut R, max_gen: u64) -> Vec<u64> {
    loop {
        let k = rng.gen_range(3..=5);
        let gens: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=max_gen)).collect();
        if gcd_all(&gens) == 1 {
            return gens;
        }
    }
}

/// `trials` random semigroups (generators at most 60), each run through
/// [`check_semigroup_equivalences`]. Deterministic in `seed`.
pub fn sweep_equivalences(trials: u64, seed: u64, exec: Execution) -> SweepReport {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid: Vec<Vec<u64>> = (0..trials)
        .map(|_| random_generators(&mut rng, 60))
        .collect();
    let parts = exec.map(&grid, |gens| check_semigroup_equivalences(gens));
    SweepReport::collect("equiv", parts, started)
}

/// All the general equivalences for one semigroup and every `1 ≤ m ≤ genus+2`:
///
/// 1. gap counting, `C_m | P_H` in `Z[x]`, the two polynomial forms of the
///    Apéry congruence and the two multiset forms agree with the oracle, for
///    the least base coprime to `m` (together with the direct, Apéry and
///    polynomial routes, the closed form when one applies and the MED
///    criterion when the multiplicity is coprime to `m`);
/// 2. the set of qualifying moduli is closed under divisors and consists of
///    divisors of the genus;
/// 3. whenever the gaps are evenly distributed modulo `m`,
///    `Ap(S; a) ≡ [0, a-1]` for every element `1 ≤ a ≤ F + m + 1`;
/// 4. if the genus `g > 0` lies in `S`, the gaps are not evenly distributed
///    modulo `g`.
pub fn check_semigroup_equivalences(gens: &[u64]) -> Part {
    let mut out = Vec::new();
    let Some(s) = build(gens, gens, &mut out) else {
        return (1, out);
    };
    let oracle = Oracle::new(gens);
    expect_eq(&mut out, "gaps", gens, oracle.gaps(), s.gaps());
    let genus = s.genus();
    let frobenius = s.frobenius();

    let mut dense = vec![0i64; (frobenius + 1).max(0) as usize];
    for &g in s.gaps() {
        dense[g as usize] = 1;
    }
    let gap_set = s.gap_multiset();

    let mut qualifying = Vec::new();
    let mut checked = 0;
    for m in 1..=genus + 2 {
        let mut p = gens.to_vec();
        p.push(m);
        let truth = oracle.evenly_distributed(m);
        if truth {
            qualifying.push(m);
        }
        let base = s.least_element_coprime_to(m);
        let ap = s.apery_set(base).expect("base is an element");
        let ap_set = ap.to_multiset();
        let ap_nonzero: IntMultiset = ap.nonzero().iter().map(|&e| e as i64).collect();
        let c_a = cyc_c_n(base, m);
        let c_a_nonzero = &c_a - &CycPoly::monomial(m, 0);

        let statements = [
            (
                "s1_gap_counts",
                crate::residue::is_evenly_distributed(&gap_set, m),
            ),
            ("s2_c_m_divides", divisible_by_c_m(&dense, m)),
            (
                "s3_apery_poly",
                reduce_exponents(&ap_set, m).unwrap() == c_a,
            ),
            (
                "s4_apery_poly_nonzero",
                reduce_exponents(&ap_nonzero, m).unwrap() == c_a_nonzero,
            ),
            (
                "s5_apery_multiset",
                multiset_congruent(&ap_set, &IntMultiset::interval(0, base as i64 - 1), m),
            ),
            (
                "s6_apery_multiset_nonzero",
                multiset_congruent(&ap_nonzero, &IntMultiset::interval(1, base as i64 - 1), m),
            ),
            ("ed_direct", ed_direct(&s, m).evenly_distributed),
            (
                "ed_apery_criterion",
                ed_apery_criterion(&s, m).evenly_distributed,
            ),
            ("ed_polynomial", ed_polynomial(&s, m).evenly_distributed),
        ];
        for (name, got) in statements {
            expect_eq(&mut out, name, &p, truth, got);
        }
        if let Some(report) = ed_closed_form(&s, m) {
            expect_eq(
                &mut out,
                "ed_closed_form",
                &p,
                truth,
                report.evenly_distributed,
            );
        }
        if s.is_maximal_embedding_dimension() && gcd(s.multiplicity(), m) == 1 {
            expect_eq(&mut out, "ed_med", &p, Ok(truth), ed_med(&s, m));
        }
        checked += 1;
    }

    for &m in &qualifying {
        for d in divisors(m) {
            if !qualifying.contains(&d) {
                out.push(Mismatch::new("divisor_closure", &[m, d], true, false));
            }
        }
        if genus > 0 && genus % m != 0 {
            out.push(Mismatch::new(
                "cardinality",
                &[m, genus],
                "m | genus",
                false,
            ));
        }
    }
    let expected_moduli = if genus == 0 {
        EdModuli::All
    } else {
        EdModuli::Moduli(
            qualifying
                .iter()
                .copied()
                .filter(|m| genus % m == 0)
                .collect(),
        )
    };
    expect_eq(
        &mut out,
        "ed_all_moduli",
        gens,
        expected_moduli,
        ed_all_moduli(&s),
    );

    // One-directional Apéry congruence, for every base including those not
    // coprime to m.
    if let Some(&largest) = qualifying.last() {
        let top = (frobenius + 1) as u64 + largest;
        for base in (1..=top).filter(|&a| s.contains(a as i64)) {
            let ap = s.apery_set(base).expect("base is an element").to_multiset();
            let interval = IntMultiset::interval(0, base as i64 - 1);
            for &m in qualifying
                .iter()
                .filter(|&&m| base as i64 <= frobenius + m as i64 + 1)
            {
                if !multiset_congruent(&ap, &interval, m) {
                    let mut p = gens.to_vec();
                    p.extend([m, base]);
                    out.push(Mismatch::new("apery_congruence", &p, true, false));
                }
                checked += 1;
            }
        }
    }

    if genus > 0 && s.contains(genus as i64) {
        let mut p = gens.to_vec();
        p.push(genus);
        expect_eq(
            &mut out,
            "genus_obstruction",
            &p,
            false,
            oracle.evenly_distributed(genus),
        );
        expect_eq(
            &mut out,
            "genus_obstruction_direct",
            &p,
            false,
            ed_direct(&s, genus).evenly_distributed,
        );
    }
    (checked, out)
}

/// `pairs` random `(S, a)` with generators at most 60 and `a ∈ S`,
/// `1 ≤ a ≤ F + 20`, checking the exact Apéry/gap polynomial identity.
pub fn sweep_tuenter(pairs: u64, seed: u64, exec: Execution) -> SweepReport {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grid = Vec::new();
    while (grid.len() as u64) < pairs {
        let gens = random_generators(&mut rng, 60);
        let s = NumericalSemigroup::from_generators(&gens).expect("coprime generators");
        let top = (s.frobenius() + 20) as u64;
        let a = loop {
            let a = rng.gen_range(1..=top);
            if s.contains(a as i64) {
                break a;
            }
        };
        grid.push((gens, s, a));
    }
    let parts = exec.map(&grid, |(gens, s, a)| {
        let mut out = Vec::new();
        let mut p = gens.clone();
        p.push(*a);
        expect_eq(
            &mut out,
            "tuenter_identity",
            &p,
            Ok(true),
            check_tuenter_identity(s, *a),
        );
        (1, out)
    });
    SweepReport::collect("tuenter", parts, started)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_grids_are_nonempty() {
        let r = sweep_embdim2(3, Execution::Sequential);
        assert!(r.passed(), "{:?}", r.mismatches);
        // ⟨2,3⟩ has genus 1, so m runs over 1..=3
        assert_eq!(r.instances_checked, 3);

        let r = sweep_gen_arith(3, 1, Execution::Sequential);
        assert!(r.passed(), "{:?}", r.mismatches);
        assert!(r.instances_checked >= 1);
    }

    #[test]
    fn non_example_exercises_genus_obstruction() {
        let (n, mismatches) = check_semigroup_equivalences(&[4, 5, 11]);
        assert!(n > 0);
        assert!(mismatches.is_empty(), "{mismatches:?}");
    }

    #[test]
    fn equivalence_sweep_is_deterministic() {
        let a = sweep_equivalences(3, 11, Execution::Sequential);
        let b = sweep_equivalences(3, 11, Execution::default());
        assert!(a.same_outcome(&b));
        assert!(a.passed(), "{:?}", a.mismatches);
    }

    #[test]
    fn random_generators_are_coprime_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let g = random_generators(&mut rng, 60);
            assert!((3..=5).contains(&g.len()));
            assert!(g.iter().all(|&x| (2..=60).contains(&x)));
            assert_eq!(gcd_all(&g), 1);
        }
    }

    #[test]
    fn mismatches_are_reported() {
        let part = (
            2,
            vec![
                Mismatch::new("x", &[3, 1], 1, 2),
                Mismatch::new("x", &[1, 9], 1, 2),
            ],
        );
        let r = SweepReport::collect("demo", vec![part, (3, vec![])], Instant::now());
        assert_eq!(r.instances_checked, 5);
        assert!(!r.passed());
        assert_eq!(r.mismatches[0].params, vec![1, 9]);
    }
}
