//! Universality of powers `w^s`.
//!
//! The remainder of `w^s` satisfies the recursion
//! `r(w^s) = r(r(w^(s-1)) . w)`, and only the letter set of the previous
//! remainder matters for the next step. All those remainders are suffixes
//! of `w`, so their letter sets are totally ordered by inclusion and take
//! at most `sigma` distinct values. The first repeated letter set, found at
//! indices `(s, t)` with `s < t <= sigma`, makes the whole remainder
//! sequence periodic from `s + 1` with period `t - s`.
//!
//! [`PowerProfile::build`] runs that iteration in `O(sigma * |w|)` time and
//! `O(sigma)` memory; afterwards the universality index of any power, the
//! growth at any step and the remainder of any power are answered in
//! constant time by folding the query into the periodic window.

use crate::alphabet::LetterSet;
use crate::arch::{arch_factorize_seeded, ArchFactorisation};
use crate::error::{Error, Result};
use crate::word::Word;

/// Precomputed analysis of all powers of a base word.
#[derive(Debug, Clone)]
pub struct PowerProfile {
    base: Word,
    k: usize,
    /// Letters of the remainder of the reversed base word. The growth at
    /// step s is `k + 1` exactly when these letters and the letters of
    /// `r(w^(s-1))` together cover the alphabet.
    rrev_letters: LetterSet,
    /// Length of the suffix of the base that equals `r(w^s)`, s = 0..=t.
    remainder_lens: Vec<usize>,
    /// Letter set of `r(w^s)`, s = 0..=t.
    alfrem: Vec<LetterSet>,
    /// Growth of the universality index at step s, s = 1..=t (entry s-1).
    growth: Vec<usize>,
    /// Universality index of `w^s`, s = 0..=t.
    iota_table: Vec<u64>,
    /// Minimal anchors (s, t): the first repeated remainder letter set.
    anchor_lo: usize,
    anchor_hi: usize,
}

impl PowerProfile {
    /// Iterates the remainder recursion until the first repeated remainder
    /// letter set. Fails with [`Error::NotUniversal`] when the base word
    /// does not contain every letter of its alphabet.
    pub fn build(w: &Word) -> Result<Self> {
        let sigma = w.sigma();
        let full = w.alphabet().full_set();
        let rrev_letters = ArchFactorisation::of(&w.reverse()).remainder_letters();

        let mut remainder_lens = vec![0usize];
        let mut alfrem = vec![LetterSet::EMPTY];
        let mut growth: Vec<usize> = Vec::new();
        let mut iota_table = vec![0u64];
        let mut k = 0usize;

        let (anchor_lo, anchor_hi) = loop {
            let s = growth.len() + 1;
            let seeded = arch_factorize_seeded(alfrem[s - 1], w)?;
            if seeded.first_arch_end.is_none() {
                // Only possible when w itself misses a letter.
                return Err(Error::NotUniversal);
            }
            if s == 1 {
                k = seeded.arch_count;
            } else if seeded.arch_count != k && seeded.arch_count != k + 1 {
                return Err(falsified(w, "growth bound", format!(
                    "growth {} at step {s} outside {{{k}, {}}}",
                    seeded.arch_count,
                    k + 1
                )));
            }
            debug_assert_eq!(
                seeded.arch_count == k + 1,
                alfrem[s - 1].union(rrev_letters) == full,
                "growth criterion disagrees with the seeded arch count"
            );

            let suffix_len = w.len() - seeded.remainder_start;
            if suffix_len >= w.len() && w.len() > 0 {
                return Err(falsified(w, "remainder length", format!(
                    "remainder of power {s} is not a proper suffix"
                )));
            }
            growth.push(seeded.arch_count);
            iota_table.push(iota_table[s - 1] + seeded.arch_count as u64);
            remainder_lens.push(suffix_len);
            alfrem.push(seeded.remainder_letters);

            if let Some(lo) = alfrem[..s].iter().position(|&a| a == alfrem[s]) {
                break (lo, s);
            }
            if s > sigma {
                return Err(falsified(w, "letter-set bound", format!(
                    "no repeated remainder letter set within {} powers",
                    sigma + 1
                )));
            }
        };

        Ok(PowerProfile {
            base: w.clone(),
            k,
            rrev_letters,
            remainder_lens,
            alfrem,
            growth,
            iota_table,
            anchor_lo,
            anchor_hi,
        })
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    /// Universality index of the base word.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sigma(&self) -> usize {
        self.base.sigma()
    }

    /// The minimal anchor pair `(s, t)` with equal remainder letter sets.
    pub fn anchors(&self) -> (usize, usize) {
        (self.anchor_lo, self.anchor_hi)
    }

    /// Period of the remainder sequence, `t - s`.
    pub fn period(&self) -> usize {
        self.anchor_hi - self.anchor_lo
    }

    /// Highest power stored directly in the tables (the anchor `t`).
    pub fn table_len(&self) -> usize {
        self.anchor_hi
    }

    pub fn growth_table(&self) -> &[usize] {
        &self.growth
    }

    pub fn alfrem_table(&self) -> &[LetterSet] {
        &self.alfrem
    }

    pub fn remainder_lens(&self) -> &[usize] {
        &self.remainder_lens
    }

    pub fn iota_table(&self) -> &[u64] {
        &self.iota_table
    }

    pub fn rrev_letters(&self) -> LetterSet {
        self.rrev_letters
    }

    /// True when the remainder map `s -> r(w^s)` is eventually constant,
    /// which happens exactly when the period is one.
    pub fn eventually_constant(&self) -> bool {
        self.period() == 1
    }

    /// True when the growth stays at `k` for every power. The stored window
    /// covers one full period, so this is exact, not sampled.
    pub fn is_growth_always_k(&self) -> bool {
        self.growth.iter().all(|&g| g == self.k)
    }

    /// Universality index of `w^n` in constant time: inside the table it is
    /// read off directly, beyond it the query folds into the periodic
    /// window, with `n - s = l * (t - s) + m` and
    /// `iota(w^n) = iota(w^(s+m)) + l * (iota(w^t) - iota(w^s))`.
    pub fn universality_of_power(&self, n: u64) -> u128 {
        let n = n as usize;
        if n <= self.anchor_hi {
            return self.iota_table[n] as u128;
        }
        let (lo, hi) = (self.anchor_lo, self.anchor_hi);
        let period = (hi - lo) as u128;
        let shifted = (n - lo) as u128;
        let full_periods = shifted / period;
        let m = (shifted % period) as usize;
        let per_period = (self.iota_table[hi] - self.iota_table[lo]) as u128;
        self.iota_table[lo + m] as u128 + full_periods * per_period
    }

    /// Growth of the universality index at step `s >= 1`, folded into the
    /// periodic window; always `k` or `k + 1`. Evaluated through the letter
    /// criterion: the step grows by `k + 1` exactly when the previous
    /// remainder letters and the reversed-base remainder letters cover the
    /// alphabet.
    pub fn growth_at(&self, s: u64) -> usize {
        assert!(s >= 1, "growth is defined from step 1");
        let full = self.base.alphabet().full_set();
        if self.alfrem_at(s - 1).union(self.rrev_letters) == full {
            self.k + 1
        } else {
            self.k
        }
    }

    /// Letter set of `r(w^s)` for any power.
    pub fn alfrem_at(&self, s: u64) -> LetterSet {
        self.alfrem[self.fold_set_index(s)]
    }

    /// Length of `r(w^s)` as a suffix of the base, for any power.
    pub fn remainder_len_at(&self, s: u64) -> usize {
        self.remainder_lens[self.fold_remainder_index(s)]
    }

    /// Materializes `r(w^s)`.
    pub fn remainder_of_power(&self, s: u64) -> Word {
        let len = self.remainder_len_at(s);
        self.base.subword(self.base.len() - len..self.base.len())
    }

    // Letter sets repeat with the anchors from s onwards.
    fn fold_set_index(&self, s: u64) -> usize {
        let s = s as usize;
        if s <= self.anchor_hi {
            s
        } else {
            self.anchor_lo + (s - self.anchor_lo) % self.period()
        }
    }

    // Remainders themselves repeat only from s + 1 onwards.
    fn fold_remainder_index(&self, s: u64) -> usize {
        let s = s as usize;
        if s <= self.anchor_hi {
            s
        } else {
            self.anchor_lo + 1 + (s - self.anchor_lo - 1) % self.period()
        }
    }

    /// Classifies the inclusion chain of remainder letter sets.
    pub fn chain_report(&self) -> ChainReport {
        let t = self.anchor_hi;
        let period = self.period();
        let directions: Vec<StepDirection> =
            (1..=t as u64).map(|s| self.direction_at(s)).collect();

        // Maximal strict runs of the infinite chain: the direction sequence
        // is periodic from step lo + 1, so a window of two extra periods
        // catches every wrap-around run.
        let (mut max_asc, mut max_desc) = (0usize, 0usize);
        let (mut cur_asc, mut cur_desc) = (0usize, 0usize);
        for s in 1..=(t + 2 * period) as u64 {
            match self.direction_at(s) {
                StepDirection::Ascending => {
                    cur_asc += 1;
                    cur_desc = 0;
                }
                StepDirection::Descending => {
                    cur_desc += 1;
                    cur_asc = 0;
                }
                StepDirection::Equal => {
                    cur_asc = 0;
                    cur_desc = 0;
                }
            }
            max_asc = max_asc.max(cur_asc);
            max_desc = max_desc.max(cur_desc);
        }

        // Run lengths count sets, not steps: a run of n strict steps spans
        // n + 1 sets, and with no strict step anywhere the trivial chain of
        // a single set remains. A unary alphabet admits only the empty
        // remainder set, which leaves nothing to chain.
        let sets = |steps: usize| -> usize {
            if self.sigma() == 1 {
                0
            } else if steps == 0 {
                1
            } else {
                steps + 1
            }
        };

        let perfect_power = (1..=t as u64).find(|&s| self.remainder_len_at(s) == 0);

        ChainReport {
            directions,
            longest_ascending: sets(max_asc),
            longest_descending: sets(max_desc),
            eventually_constant: self.eventually_constant(),
            perfect_power,
        }
    }

    fn direction_at(&self, s: u64) -> StepDirection {
        let prev = self.alfrem_at(s - 1);
        let next = self.alfrem_at(s);
        if prev == next {
            StepDirection::Equal
        } else if prev.is_strict_subset(next) {
            StepDirection::Ascending
        } else {
            debug_assert!(next.is_strict_subset(prev), "letter sets form a chain");
            StepDirection::Descending
        }
    }
}

fn falsified(w: &Word, check: &str, detail: String) -> Error {
    Error::Falsified {
        check: check.to_string(),
        word: w.glyph_string(),
        detail,
    }
}

/// How the remainder letter set moves between consecutive powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepDirection {
    Ascending,
    Descending,
    Equal,
}

impl StepDirection {
    pub fn as_str(self) -> &'static str {
        match self {
            StepDirection::Ascending => "ascending",
            StepDirection::Descending => "descending",
            StepDirection::Equal => "equal",
        }
    }
}

/// Chain classification of the remainder letter sets of the powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    /// Direction of each stored step, s = 1..=t.
    pub directions: Vec<StepDirection>,
    /// Sets in the longest strictly ascending run; at most sigma.
    pub longest_ascending: usize,
    /// Sets in the longest strictly descending run; at most sigma - 1.
    pub longest_descending: usize,
    /// Whether `s -> r(w^s)` is eventually constant.
    pub eventually_constant: bool,
    /// Smallest s >= 1 with an empty remainder `r(w^s)`, if any.
    pub perfect_power: Option<u64>,
}

/// Aggregate result of [`verify_chain_bounds`].
#[derive(Debug, Clone)]
pub struct ChainBoundsReport {
    pub words: u64,
    pub max_ascending: usize,
    pub max_descending: usize,
    /// First words whose ascending run reaches sigma (capped).
    pub ascending_witnesses: Vec<Word>,
    /// First words whose descending run reaches sigma - 1 (capped).
    pub descending_witnesses: Vec<Word>,
}

const WITNESS_CAP: usize = 8;

/// Checks the chain-length bounds over a corpus: no strictly ascending run
/// may exceed `sigma` sets and no strictly descending run may exceed
/// `sigma - 1`. A violation aborts with the offending word; witnesses that
/// attain the bounds are collected.
pub fn verify_chain_bounds<I>(corpus: I) -> Result<ChainBoundsReport>
where
    I: IntoIterator<Item = Word>,
{
    let mut report = ChainBoundsReport {
        words: 0,
        max_ascending: 0,
        max_descending: 0,
        ascending_witnesses: Vec::new(),
        descending_witnesses: Vec::new(),
    };
    for word in corpus {
        let sigma = word.sigma();
        let profile = PowerProfile::build(&word)?;
        let chain = profile.chain_report();
        if chain.longest_ascending > sigma {
            return Err(falsified(&word, "ascending chain bound", format!(
                "run of {} sets exceeds sigma = {sigma}",
                chain.longest_ascending
            )));
        }
        if sigma > 1 && chain.longest_descending > sigma - 1 {
            return Err(falsified(&word, "descending chain bound", format!(
                "run of {} sets exceeds sigma - 1 = {}",
                chain.longest_descending,
                sigma - 1
            )));
        }
        report.words += 1;
        report.max_ascending = report.max_ascending.max(chain.longest_ascending);
        report.max_descending = report.max_descending.max(chain.longest_descending);
        if chain.longest_ascending == sigma && report.ascending_witnesses.len() < WITNESS_CAP {
            report.ascending_witnesses.push(word.clone());
        }
        if sigma > 1
            && chain.longest_descending == sigma - 1
            && report.descending_witnesses.len() < WITNESS_CAP
        {
            report.descending_witnesses.push(word.clone());
        }
    }
    Ok(report)
}
