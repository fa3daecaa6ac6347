//! Circular universality.
//!
//! The circular universality index `zeta(w)` is the best universality index
//! over all conjugates of `w`; it is always `k` or `k + 1` where
//! `k = iota(w)`. Rather than scanning conjugates, `zeta` is decided from
//! the power profile: `zeta(w) = k + 1` exactly when
//! `iota(w^sigma) = sigma * k + sigma - 1`, i.e. when every growth step in
//! `[2, sigma]` is `k + 1`. That keeps the whole computation within the
//! `O(sigma * |w|)` preprocessing bound.
//!
//! A unary alphabet is the one degenerate case: all conjugates of `a^m`
//! equal the word itself, so `zeta = k` there even though the interval
//! `[2, sigma]` is empty.

use crate::arch::universality_index;
use crate::error::{Error, Result};
use crate::power::PowerProfile;
use crate::word::Word;

/// Default cap on materialized power length for the verification-grade
/// operations in this module.
pub const DEFAULT_MATERIALIZE_LIMIT: usize = 1_000_000;

/// How many powers the classification samples when asserting the closed
/// forms for `iota(w^s)`.
const SAMPLE_POWERS: u64 = 20;

/// Result of [`circular_index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularAnalysis {
    /// Universality index of the word.
    pub k: usize,
    /// Circular universality index, `k` or `k + 1`.
    pub zeta: usize,
    /// Whether the growth is `k + 1` on every step of `[2, sigma]`
    /// (evaluated on `[2, 2]` for unary alphabets, where the plain interval
    /// is empty). Equivalent to `zeta = k + 1` for sigma >= 2.
    pub uniform_plus_one: bool,
    /// Whether the circular growth stays at `k` on `[1, sigma - 1]`.
    /// Derived from the profile: it holds exactly when the plain growth
    /// stays at `k` for every power.
    pub uniform_k_circular: bool,
    /// Rotation offset of a `(k + 1)`-universal conjugate when
    /// `zeta = k + 1`.
    pub witness_conjugate: Option<usize>,
}

/// Computes the circular universality of `w`. Fails with
/// [`Error::NotUniversal`] when `w` misses a letter of its alphabet.
pub fn circular_index(w: &Word) -> Result<CircularAnalysis> {
    let profile = PowerProfile::build(w)?;
    Ok(circular_index_with_profile(&profile))
}

/// Same as [`circular_index`], reusing an existing profile.
pub fn circular_index_with_profile(profile: &PowerProfile) -> CircularAnalysis {
    let k = profile.k();
    let sigma = profile.sigma();

    let uniform_plus_one =
        (2..=sigma.max(2) as u64).all(|s| profile.growth_at(s) == k + 1);

    let (zeta, witness_conjugate) = if sigma == 1 {
        (k, None)
    } else {
        let target = sigma as u128 * k as u128 + sigma as u128 - 1;
        if profile.universality_of_power(sigma as u64) == target {
            (k + 1, Some(witness_offset(profile)))
        } else {
            (k, None)
        }
    };
    debug_assert_eq!(zeta == k + 1, uniform_plus_one && sigma > 1);

    CircularAnalysis {
        k,
        zeta,
        uniform_plus_one,
        uniform_k_circular: profile.is_growth_always_k(),
        witness_conjugate,
    }
}

/// When `zeta = k + 1` the remainder sequence is eventually constant, the
/// anchors are `(s, s + 1)`, and rotating `r(w^(s+1))` to the front yields a
/// `(k + 1)`-universal conjugate.
fn witness_offset(profile: &PowerProfile) -> usize {
    let w = profile.base();
    if profile.period() == 1 {
        let t = profile.anchors().0 as u64 + 1;
        let suffix = profile.remainder_len_at(t);
        debug_assert!(suffix > 0);
        let offset = w.len() - suffix;
        debug_assert_eq!(
            universality_index(&w.conjugate(offset).expect("offset in range")),
            profile.k() + 1
        );
        offset
    } else {
        // Unreachable when zeta = k + 1; kept as a safe fallback.
        debug_assert!(false, "period {} with zeta = k + 1", profile.period());
        (0..=w.len())
            .find(|&i| {
                universality_index(&w.conjugate(i).expect("offset in range"))
                    == profile.k() + 1
            })
            .unwrap_or(0)
    }
}

/// Circular growth `zeta(w^s) - zeta(w^(s-1))`, computed by materializing
/// both powers. This is a verification-grade operation with a budget guard,
/// not part of the fast path.
pub fn zeta_growth(w: &Word, s: usize, max_power_len: usize) -> Result<u64> {
    assert!(s >= 1, "circular growth is defined from step 1");
    Ok(zeta_of_power(w, s, max_power_len)? - zeta_of_power(w, s - 1, max_power_len)?)
}

fn zeta_of_power(w: &Word, s: usize, max_power_len: usize) -> Result<u64> {
    if s == 0 || w.is_empty() {
        return Ok(0);
    }
    let p = w.power_guarded(s, max_power_len)?;
    match PowerProfile::build(&p) {
        Ok(profile) => Ok(circular_index_with_profile(&profile).zeta as u64),
        // A word missing a letter keeps missing it in every power and
        // rotation.
        Err(Error::NotUniversal) => Ok(0),
        Err(e) => Err(e),
    }
}

/// Which closed form the universality of powers follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthClass {
    /// `zeta = k + 1`, so `iota(w^s) = s * k + s - 1`.
    PlusOne,
    /// Circular growth stays at `k`, so `iota(w^s) = s * k`.
    Constant,
    /// Neither closed form applies.
    Mixed,
}

impl GrowthClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GrowthClass::PlusOne => "plus-one",
            GrowthClass::Constant => "constant",
            GrowthClass::Mixed => "mixed",
        }
    }
}

/// Verdicts of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub k: usize,
    pub sigma: usize,
    /// (a) `zeta(w) = k + 1`.
    pub zeta_plus_one: bool,
    /// (b) growth `k + 1` on every step of `[2, sigma]`.
    pub uniform_plus_one: bool,
    /// (c) circular growth `k` on every step of `[1, sigma - 1]`, evaluated
    /// by materialization.
    pub circular_growth_k: bool,
    pub class: GrowthClass,
}

/// Evaluates the three equivalent-or-exclusive statements about the growth
/// of `w`'s powers and cross-checks the closed forms they imply. Any failed
/// implication is an implementation bug and reported as
/// [`Error::Falsified`].
pub fn classify(w: &Word) -> Result<Classification> {
    let profile = PowerProfile::build(w)?;
    let analysis = circular_index_with_profile(&profile);
    let k = analysis.k;
    let sigma = profile.sigma();

    let zeta_plus_one = analysis.zeta == k + 1;
    let uniform_plus_one = analysis.uniform_plus_one;
    if sigma > 1 && zeta_plus_one != uniform_plus_one {
        return Err(falsified(w, "circular equivalence", format!(
            "zeta = k + 1 is {zeta_plus_one} but uniform growth k + 1 is {uniform_plus_one}"
        )));
    }

    let mut circular_growth_k = true;
    for t in 1..sigma {
        if zeta_growth(w, t, DEFAULT_MATERIALIZE_LIMIT)? != k as u64 {
            circular_growth_k = false;
            break;
        }
    }

    let sample = |expected: &dyn Fn(u128) -> u128, label: &str| -> Result<()> {
        for s in 1..=SAMPLE_POWERS {
            let got = profile.universality_of_power(s);
            if got != expected(s as u128) {
                return Err(falsified(w, label, format!(
                    "iota(w^{s}) = {got}, expected {}",
                    expected(s as u128)
                )));
            }
        }
        Ok(())
    };
    if zeta_plus_one {
        sample(&|s| s * k as u128 + s - 1, "plus-one closed form")?;
    }
    if circular_growth_k {
        sample(&|s| s * k as u128, "constant closed form")?;
    }

    let class = if zeta_plus_one {
        GrowthClass::PlusOne
    } else if circular_growth_k {
        GrowthClass::Constant
    } else {
        GrowthClass::Mixed
    };
    Ok(Classification {
        k,
        sigma,
        zeta_plus_one,
        uniform_plus_one,
        circular_growth_k,
        class,
    })
}

fn falsified(w: &Word, check: &str, detail: String) -> Error {
    Error::Falsified {
        check: check.to_string(),
        word: w.glyph_string(),
        detail,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{zeta_oracle, Budget};

    fn w(text: &str) -> Word {
        Word::new(text).unwrap()
    }

    #[test]
    fn zeta_of_babccaabc_equals_k() {
        let a = circular_index(&w("babccaabc")).unwrap();
        assert_eq!(a.k, 2);
        assert_eq!(a.zeta, 2);
        assert_eq!(a.witness_conjugate, None);
        assert!(!a.uniform_plus_one);
    }

    #[test]
    fn zeta_of_aabb_is_k_plus_one_with_witness() {
        let word = w("aabb");
        let a = circular_index(&word).unwrap();
        assert_eq!(a.k, 1);
        assert_eq!(a.zeta, 2);
        let offset = a.witness_conjugate.expect("witness exists");
        let conj = word.conjugate(offset).unwrap();
        assert_eq!(universality_index(&conj), 2);
    }

    #[test]
    fn zeta_of_ab_is_k() {
        let a = circular_index(&w("ab")).unwrap();
        assert_eq!(a.k, 1);
        assert_eq!(a.zeta, 1);
    }

    #[test]
    fn zeta_of_unary_word_is_k() {
        let a = circular_index(&w("aaa")).unwrap();
        assert_eq!(a.k, 3);
        assert_eq!(a.zeta, 3);
        assert_eq!(zeta_oracle(&w("aaa"), &Budget::default()).unwrap(), 3);
    }

    #[test]
    fn zeta_growth_of_aabbcc() {
        let word = w("aabbcc");
        assert_eq!(zeta_growth(&word, 1, 1 << 20).unwrap(), 1);
        assert_eq!(zeta_growth(&word, 2, 1 << 20).unwrap(), 2);
    }

    #[test]
    fn zeta_growth_respects_budget() {
        let word = w("abc");
        assert!(matches!(
            zeta_growth(&word, 100, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn classify_aabb_as_plus_one() {
        let c = classify(&w("aabb")).unwrap();
        assert!(c.zeta_plus_one);
        assert_eq!(c.class, GrowthClass::PlusOne);
        let p = PowerProfile::build(&w("aabb")).unwrap();
        for s in 1..=5u64 {
            assert_eq!(p.universality_of_power(s), 2 * s as u128 - 1);
        }
    }

    #[test]
    fn classify_acabb_as_constant() {
        let c = classify(&w("acabb")).unwrap();
        assert!(!c.zeta_plus_one);
        assert!(c.circular_growth_k);
        assert_eq!(c.class, GrowthClass::Constant);
    }

    #[test]
    fn classify_babccaabc_as_mixed() {
        let c = classify(&w("babccaabc")).unwrap();
        assert!(!c.zeta_plus_one);
        assert!(!c.circular_growth_k);
        assert_eq!(c.class, GrowthClass::Mixed);
    }
}
