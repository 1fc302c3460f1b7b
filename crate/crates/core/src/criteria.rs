//! Decision procedures for "the gaps of `S` are evenly distributed modulo `m`".
//!
//! Three general routes are available: counting gaps directly
//! ([`ed_direct`]), comparing an Apéry set against `[0, a-1]` for a base
//! coprime to `m` ([`ed_apery_criterion`]), and testing
//! `(x - 1)·P_H(x) ≡ 0 (mod x^m - 1)` ([`ed_polynomial`]). When the nonzero
//! part of an Apéry set is an arithmetic sequence, [`ed_main_theorem`] decides
//! the question from `gcd(aδ, m)` and four congruences, and the closed forms
//! at the bottom of the module specialise it to the explicit families.

use std::fmt;

use crate::arith::{congruent, divisors, gcd, residue_u};
use crate::error::{Error, Result};
use crate::residue::{
    ed_via_polynomial, multiset_congruent, reduce_exponents, residue_counts, IntMultiset,
    ResidueHistogram,
};
use crate::semigroup::NumericalSemigroup;

/// Which procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Direct,
    Apery,
    Polynomial,
    ClosedForm,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::Apery => "apery",
            Route::Polynomial => "polynomial",
            Route::ClosedForm => "closed_form",
        }
    }
}

/// The four alternatives of the arithmetic-Apéry criterion, all taken mod `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremCase {
    /// `a ≡ 1`
    AOne,
    /// `a ≡ 2` and `β + δ ≡ 1`
    ATwoShiftOne,
    /// `δ ≡ 1` and `β ≡ 0`
    DeltaOneBetaZero,
    /// `δ ≡ −1` and `β ≡ a`
    DeltaMinusOneBetaA,
}

impl TheoremCase {
    pub const ALL: [TheoremCase; 4] = [
        TheoremCase::AOne,
        TheoremCase::ATwoShiftOne,
        TheoremCase::DeltaOneBetaZero,
        TheoremCase::DeltaMinusOneBetaA,
    ];

    /// 1-based position in the list of alternatives.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

/// Supporting evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// All residue classes have the same count.
    Balanced,
    /// Least residue pair with different counts.
    UnequalCounts {
        residues: (u64, u64),
        counts: (u64, u64),
    },
    AperyCongruent {
        base: u64,
    },
    /// First residue class where `Ap(S; base)` and `[0, base-1]` disagree.
    AperyMismatch {
        base: u64,
        residue: u64,
        apery_count: u64,
        interval_count: u64,
    },
    CasesFired(Vec<TheoremCase>),
    /// No alternative applies, or `gcd(aδ, m) = gcd ≠ 1`.
    NoCase {
        gcd: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdReport {
    pub modulus: u64,
    pub evenly_distributed: bool,
    pub route: Route,
    pub witness: Witness,
}

fn histogram_witness(h: &ResidueHistogram) -> Witness {
    match h.first_unequal_pair() {
        None => Witness::Balanced,
        Some((r1, r2)) => Witness::UnequalCounts {
            residues: (r1, r2),
            counts: (h.counts()[r1 as usize], h.counts()[r2 as usize]),
        },
    }
}

/// Counts the gaps in each residue class.
pub fn ed_direct(s: &NumericalSemigroup, m: u64) -> EdReport {
    let h = residue_counts(&s.gap_multiset(), m);
    EdReport {
        modulus: m,
        evenly_distributed: h.is_uniform(),
        route: Route::Direct,
        witness: histogram_witness(&h),
    }
}

/// `Ap(S; a) ≡ [0, a-1] (mod m)` for the least nonzero `a ∈ S` coprime to `m`.
pub fn ed_apery_criterion(s: &NumericalSemigroup, m: u64) -> EdReport {
    let base = s.least_element_coprime_to(m);
    let ap = s
        .apery_set(base)
        .expect("the selected base is a nonzero element");
    let lhs = residue_counts(&ap.to_multiset(), m);
    let rhs = residue_counts(&IntMultiset::interval(0, base as i64 - 1), m);
    let mismatch = lhs
        .counts()
        .iter()
        .zip(rhs.counts())
        .position(|(x, y)| x != y);
    let witness = match mismatch {
        None => Witness::AperyCongruent { base },
        Some(r) => Witness::AperyMismatch {
            base,
            residue: r as u64,
            apery_count: lhs.counts()[r],
            interval_count: rhs.counts()[r],
        },
    };
    EdReport {
        modulus: m,
        evenly_distributed: mismatch.is_none(),
        route: Route::Apery,
        witness,
    }
}

/// `(x - 1)·P_H(x) ≡ 0 (mod x^m - 1)` on the gap polynomial.
pub fn ed_polynomial(s: &NumericalSemigroup, m: u64) -> EdReport {
    let gaps = s.gap_multiset();
    let verdict = ed_via_polynomial(&gaps, m).expect("gaps are positive");
    let reduced = reduce_exponents(&gaps, m).expect("gaps are positive");
    let counts: Vec<i64> = (0..m as usize).map(|r| reduced.coeffs()[r]).collect();
    let witness = match counts.iter().position(|&c| c != counts[0]) {
        None => Witness::Balanced,
        Some(r) => Witness::UnequalCounts {
            residues: (0, r as u64),
            counts: (counts[0] as u64, counts[r] as u64),
        },
    };
    EdReport {
        modulus: m,
        evenly_distributed: verdict,
        route: Route::Polynomial,
        witness,
    }
}

/// Result of [`ed_all_moduli`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdModuli {
    /// The gap set is empty, so every modulus qualifies.
    All,
    /// The qualifying moduli, increasing. They all divide the genus.
    Moduli(Vec<u64>),
}

pub fn ed_all_moduli(s: &NumericalSemigroup) -> EdModuli {
    let genus = s.genus();
    if genus == 0 {
        return EdModuli::All;
    }
    let gaps = s.gap_multiset();
    EdModuli::Moduli(
        divisors(genus)
            .into_iter()
            .filter(|&m| residue_counts(&gaps, m).is_uniform())
            .collect(),
    )
}

/// Parameters `(a, β, δ)` with `Ap(S; a) = {0} ∪ {β + iδ : 1 ≤ i ≤ a-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArithmeticAperyForm {
    pub a: u64,
    pub beta: u64,
    pub delta: u64,
}

impl ArithmeticAperyForm {
    pub fn new(a: u64, beta: u64, delta: u64) -> Result<Self> {
        let form = Self { a, beta, delta };
        form.validate()?;
        Ok(form)
    }

    pub fn validate(&self) -> Result<()> {
        let Self { a, beta, delta } = *self;
        if a == 0 {
            return Err(Error::InvalidForm("a must be positive".into()));
        }
        if delta == 0 {
            return Err(Error::InvalidForm("delta must be positive".into()));
        }
        if a == 2 && (beta as u128 + delta as u128).is_multiple_of(2) {
            return Err(Error::InvalidForm(format!(
                "beta + delta = {} must be odd when a = 2",
                beta as u128 + delta as u128
            )));
        }
        if a >= 3 {
            if gcd(a, delta) != 1 {
                return Err(Error::InvalidForm(format!(
                    "gcd(a, delta) = {} must be 1",
                    gcd(a, delta)
                )));
            }
            if beta % a != 0 {
                return Err(Error::InvalidForm(format!(
                    "a = {a} must divide beta = {beta}"
                )));
            }
        }
        Ok(())
    }

    /// The cases of the criterion that hold modulo `m`, in order.
    pub fn cases_fired(&self, m: u64) -> Vec<TheoremCase> {
        let (a, beta, delta) = (self.a as i128, self.beta as i128, self.delta as i128);
        TheoremCase::ALL
            .into_iter()
            .filter(|case| match case {
                TheoremCase::AOne => congruent(a, 1, m),
                TheoremCase::ATwoShiftOne => congruent(a, 2, m) && congruent(beta + delta, 1, m),
                TheoremCase::DeltaOneBetaZero => congruent(delta, 1, m) && congruent(beta, 0, m),
                TheoremCase::DeltaMinusOneBetaA => congruent(delta, -1, m) && congruent(beta, a, m),
            })
            .collect()
    }

    /// `gcd(aδ, m)`, computed without forming the product.
    pub fn gcd_with(&self, m: u64) -> u64 {
        let ga = gcd(self.a, m);
        ga * gcd(self.delta, m / ga)
    }
}

/// Recognises `Ap(S; a) \ {0}` as an arithmetic sequence.
///
/// For `a = 1` this is `(1, 0, 1)` and for `a = 2` it is `(2, b - 1, 1)`
/// where `Ap(S; 2) = {0, b}`.
pub fn detect_arithmetic_apery(
    s: &NumericalSemigroup,
    a: u64,
) -> Result<Option<ArithmeticAperyForm>> {
    let ap = s.apery_set(a)?;
    match a {
        1 => {
            return Ok(Some(ArithmeticAperyForm {
                a: 1,
                beta: 0,
                delta: 1,
            }))
        }
        2 => {
            let b = ap.elements()[1];
            return Ok(Some(ArithmeticAperyForm {
                a: 2,
                beta: b - 1,
                delta: 1,
            }));
        }
        _ => {}
    }
    let mut terms = ap.nonzero().to_vec();
    terms.sort_unstable();
    let delta = terms[1] - terms[0];
    if terms.windows(2).any(|w| w[1] - w[0] != delta) {
        return Ok(None);
    }
    let form = ArithmeticAperyForm {
        a,
        beta: terms[0]
            .checked_sub(delta)
            .expect("an arithmetic Apery set has a non-negative offset"),
        delta,
    };
    assert_eq!(form.validate(), Ok(()), "arithmetic Apery form invariants");
    Ok(Some(form))
}

/// Decides even distribution from an arithmetic Apéry form.
pub fn ed_main_theorem(form: &ArithmeticAperyForm, m: u64) -> Result<EdReport> {
    assert!(m >= 1, "modulus must be positive");
    form.validate()?;
    let g = form.gcd_with(m);
    let cases = form.cases_fired(m);
    let verdict = match form.a {
        1 => true,
        2 => g == 1 && congruent(form.beta as i128 + form.delta as i128, 1, m),
        _ => g == 1 && !cases.is_empty(),
    };
    Ok(EdReport {
        modulus: m,
        evenly_distributed: verdict,
        route: Route::ClosedForm,
        witness: if verdict {
            Witness::CasesFired(cases)
        } else {
            Witness::NoCase { gcd: g }
        },
    })
}

/// Closed-form verdict via the Apéry set relative to the multiplicity, when
/// that set is arithmetic.
pub fn ed_closed_form(s: &NumericalSemigroup, m: u64) -> Option<EdReport> {
    let form = detect_arithmetic_apery(s, s.multiplicity()).ok()??;
    Some(ed_main_theorem(&form, m).expect("detected forms are valid"))
}

/// The explicit family a semigroup belongs to, most specific tag first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `⟨2, b⟩`, `b` odd.
    Mult2 {
        b: u64,
    },
    /// `⟨a, b⟩`, `2 < a < b` coprime.
    EmbDim2 {
        a: u64,
        b: u64,
    },
    /// `⟨{a} ∪ {ha + id : 1 ≤ i ≤ a-1}⟩`, `h ≥ 2`.
    GenArithMed {
        a: u64,
        h: u64,
        d: u64,
    },
    /// `⟨a, a+d, …, a+(a-1)d⟩`.
    ArithMed {
        a: u64,
        d: u64,
    },
    Other,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Mult2 { .. } => "Mult2",
            Family::EmbDim2 { .. } => "EmbDim2",
            Family::GenArithMed { .. } => "GenArithMED",
            Family::ArithMed { .. } => "ArithMED",
            Family::Other => "Other",
        }
    }

    /// Named parameters of the family.
    pub fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            Family::Mult2 { b } => vec![("b", b)],
            Family::EmbDim2 { a, b } => vec![("a", a), ("b", b)],
            Family::GenArithMed { a, h, d } => vec![("a", a), ("h", h), ("d", d)],
            Family::ArithMed { a, d } => vec![("a", a), ("d", d)],
            Family::Other => vec![],
        }
    }

    /// The family's even-distribution condition with its parameters filled in.
    pub fn condition(&self) -> Option<String> {
        Some(match *self {
            Family::Mult2 { b } => format!("m odd and m | {}", (b - 1) / 2),
            Family::EmbDim2 { a, b } => format!(
                "gcd({}, m) = 1 and ({a} = 1 or {b} = 1 mod m)",
                a as u128 * b as u128
            ),
            Family::GenArithMed { a, h, d } => format!(
                "gcd({}, m) = 1 and ({a} = 1 or ({a} = 2 and {} = 1) or ({d} = 1 and {h} = 0) \
                 or ({d} = -1 and {h} = 1) mod m)",
                a as u128 * d as u128,
                2 * h as u128 + d as u128
            ),
            Family::ArithMed { a, d } => format!(
                "gcd({}, m) = 1 and ({a} = 1 or {d} = -1 mod m)",
                a as u128 * d as u128
            ),
            Family::Other => return None,
        })
    }

    /// Evaluates the family's closed form at `m`.
    pub fn evenly_distributed(&self, m: u64) -> Option<bool> {
        let verdict = match *self {
            Family::Mult2 { b } => ed_mult2(b, m),
            Family::EmbDim2 { a, b } => ed_embdim2(a, b, m),
            Family::GenArithMed { a, h, d } => ed_gen_arith(a, h, d, m),
            Family::ArithMed { a, d } => ed_arith(a, d, m),
            Family::Other => return None,
        };
        Some(verdict.expect("classified parameters satisfy the closed-form preconditions"))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|(_, v)| v.to_string()).collect();
        if params.is_empty() {
            write!(f, "{}", self.tag())
        } else {
            write!(f, "{}({})", self.tag(), params.join(","))
        }
    }
}

pub fn classify_family(s: &NumericalSemigroup) -> Family {
    let gens = s.generators();
    let a = s.multiplicity();
    if a == 2 {
        return Family::Mult2 { b: gens[1] };
    }
    if gens.len() == 2 {
        return Family::EmbDim2 { a, b: gens[1] };
    }
    if gens.len() < 3 || !s.is_maximal_embedding_dimension() {
        return Family::Other;
    }
    // gens[1..] must be ha + d, ha + 2d, …, ha + (a-1)d.
    let d = gens[2] - gens[1];
    if gens[1..].windows(2).any(|w| w[1] - w[0] != d) || gcd(a, d) != 1 {
        return Family::Other;
    }
    let Some(base) = gens[1].checked_sub(d) else {
        return Family::Other;
    };
    if base == 0 || base % a != 0 {
        return Family::Other;
    }
    let h = base / a;
    let rebuilt = match gen_arith_generators(a, h, d) {
        Some(g) => g,
        None => return Family::Other,
    };
    let same = NumericalSemigroup::from_generators(&rebuilt)
        .is_ok_and(|t| t.apery_set(a).ok() == s.apery_set(a).ok() && t == *s);
    match (same, h) {
        (false, _) => Family::Other,
        (true, 1) => Family::ArithMed { a, d },
        (true, _) => Family::GenArithMed { a, h, d },
    }
}

/// `{a} ∪ {ha + id : 1 ≤ i ≤ a-1}`.
pub fn gen_arith_generators(a: u64, h: u64, d: u64) -> Option<Vec<u64>> {
    let base = h.checked_mul(a)?;
    let mut gens = vec![a];
    for i in 1..a {
        gens.push(base.checked_add(i.checked_mul(d)?)?);
    }
    Some(gens)
}

/// MED criterion: for `a = mult(S)` coprime to `m`, the gaps are evenly
/// distributed iff the minimal generators other than `a` are congruent to
/// `[1, a-1]`.
pub fn ed_med(s: &NumericalSemigroup, m: u64) -> Result<bool> {
    let a = s.multiplicity();
    if !s.is_maximal_embedding_dimension() {
        return Err(Error::BadParameters(
            "semigroup does not have maximal embedding dimension".into(),
        ));
    }
    if gcd(a, m) != 1 {
        return Err(Error::BadParameters(format!(
            "multiplicity {a} is not coprime to {m}"
        )));
    }
    let rest: IntMultiset = s.generators()[1..].iter().map(|&g| g as i64).collect();
    Ok(multiset_congruent(
        &rest,
        &IntMultiset::interval(1, a as i64 - 1),
        m,
    ))
}

fn bad(msg: String) -> Error {
    Error::BadParameters(msg)
}

fn check_modulus(m: u64) -> Result<()> {
    if m == 0 {
        return Err(bad("modulus must be positive".into()));
    }
    Ok(())
}

/// `⟨a, b⟩`: `gcd(ab, m) = 1` and (`a ≡ 1` or `b ≡ 1`).
pub fn ed_embdim2(a: u64, b: u64, m: u64) -> Result<bool> {
    check_modulus(m)?;
    if !(1 < a && a < b) || gcd(a, b) != 1 {
        return Err(bad(format!(
            "need 1 < a < b with gcd(a, b) = 1, got ({a}, {b})"
        )));
    }
    Ok(gcd(a, m) == 1 && gcd(b, m) == 1 && (residue_u(a, m) == 1 % m || residue_u(b, m) == 1 % m))
}

/// `⟨2, b⟩`: `m` is odd and divides `(b-1)/2`.
pub fn ed_mult2(b: u64, m: u64) -> Result<bool> {
    check_modulus(m)?;
    if b < 3 || b.is_multiple_of(2) {
        return Err(bad(format!("need odd b >= 3, got {b}")));
    }
    Ok(m % 2 == 1 && ((b - 1) / 2).is_multiple_of(m))
}

/// `⟨3, b, c⟩` of embedding dimension 3: `gcd(3, m) = 1` and `m` divides
/// `gcd(b-1, c-2)` or `gcd(b-2, c-1)`.
pub fn ed_mult3(b: u64, c: u64, m: u64) -> Result<bool> {
    check_modulus(m)?;
    let valid = 3 < b
        && b < c
        && c < 2 * b
        && !b.is_multiple_of(3)
        && !c.is_multiple_of(3)
        && b % 3 != c % 3;
    if !valid {
        return Err(bad(format!(
            "need 3 < b < c < 2b, gcd(3, bc) = 1 and b, c in different classes mod 3, got ({b}, {c})"
        )));
    }
    Ok(!m.is_multiple_of(3)
        && (gcd(b - 1, c - 2).is_multiple_of(m) || gcd(b - 2, c - 1).is_multiple_of(m)))
}

fn check_gen_arith(a: u64, h: u64, d: u64) -> Result<()> {
    if a < 3 || h == 0 || d == 0 || gcd(a, d) != 1 {
        return Err(bad(format!(
            "need a >= 3, h, d >= 1 and gcd(a, d) = 1, got ({a}, {h}, {d})"
        )));
    }
    Ok(())
}

/// MED semigroup generated by `{a} ∪ {ha + id}`.
pub fn ed_gen_arith(a: u64, h: u64, d: u64, m: u64) -> Result<bool> {
    check_modulus(m)?;
    check_gen_arith(a, h, d)?;
    if gcd(a, m) != 1 || gcd(d, m) != 1 {
        return Ok(false);
    }
    let (a, h, d) = (a as i128, h as i128, d as i128);
    Ok(congruent(a, 1, m)
        || (congruent(a, 2, m) && congruent(2 * h + d, 1, m))
        || (congruent(d, 1, m) && congruent(h, 0, m))
        || (congruent(d, -1, m) && congruent(h, 1, m)))
}

/// MED semigroup generated by the arithmetic sequence `a, a+d, …, a+(a-1)d`.
pub fn ed_arith(a: u64, d: u64, m: u64) -> Result<bool> {
    check_modulus(m)?;
    check_gen_arith(a, 1, d)?;
    Ok(gcd(a, m) == 1
        && gcd(d, m) == 1
        && (congruent(a as i128, 1, m) || congruent(d as i128, -1, m)))
}
