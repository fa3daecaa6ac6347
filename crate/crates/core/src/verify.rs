//! Exhaustive cross-checks of the fast analysis against the oracles.
//!
//! [`run_suite`] enumerates every word over a given alphabet up to a length
//! bound and runs each named check against it. The checks restate the
//! foundational facts of the analysis (oracle equality, growth bounds,
//! chain bounds, the circular decision rule and its consequences) so that a
//! single corpus run exercises all of them; a failure names the check, the
//! word and the mismatch.

use crate::alphabet::LetterSet;
use crate::arch::{
    arch_factorize_seeded, concat_growth, remainder_of_reversal, universality_index,
    ArchFactorisation,
};
use crate::circular::{circular_index_with_profile, CircularAnalysis};
use crate::error::Result;
use crate::oracle::{self, Budget, OracleMethod, PowerTruth};
use crate::power::{verify_chain_bounds, ChainBoundsReport, ChainReport, PowerProfile};
use crate::word::Word;

/// Corpus and budget configuration for a suite run.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub sigma: usize,
    pub max_len: usize,
    /// Powers cross-checked against materialized ground truth.
    pub horizon: usize,
    /// Powers sampled when checking closed forms through the profile.
    pub sample: u64,
    pub budget: Budget,
    /// Cap on concatenation pairs; above it the pair space is strided.
    pub max_pairs: u64,
}

impl VerifyOptions {
    pub fn new(sigma: usize) -> Self {
        VerifyOptions {
            sigma,
            max_len: default_max_len(sigma),
            horizon: 30,
            sample: 20,
            budget: Budget::default(),
            max_pairs: 2_000_000,
        }
    }
}

/// Default corpus depth per alphabet size; exhaustive runs stay in the
/// minutes range with these.
pub fn default_max_len(sigma: usize) -> usize {
    match sigma {
        0 | 1 => 16,
        2 => 12,
        3 => 8,
        _ => 6,
    }
}

/// Outcome of one named check over the whole corpus.
#[derive(Debug, Clone)]
pub struct CheckStat {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
}

/// Result of a suite run.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub sigma: usize,
    pub max_len: usize,
    pub horizon: usize,
    pub words: u64,
    pub pairs: u64,
    pub checks: Vec<CheckStat>,
    pub chain: ChainBoundsReport,
    /// Words whose universality oracle ran the definition-level scattered
    /// factor enumeration.
    pub definition_checked: u64,
    /// Words whose universality oracle fell back to naive arch counting.
    pub arch_counted: u64,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckStat> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Everything the per-word checks look at, computed once per word.
struct WordContext {
    word: Word,
    profile: PowerProfile,
    circular: CircularAnalysis,
    chain: ChainReport,
    /// Ground truth for powers 0..=horizon from one materialization.
    sweep: Vec<PowerTruth>,
    /// Letters of the remainder of the reversed word.
    rrev_letters: LetterSet,
    zeta_oracle: u64,
    iota_oracle: u64,
    iota_method: OracleMethod,
}

impl WordContext {
    fn prepare(word: &Word, opts: &VerifyOptions) -> Result<Self> {
        let profile = PowerProfile::build(word)?;
        let circular = circular_index_with_profile(&profile);
        let chain = profile.chain_report();
        let sweep = oracle::power_oracle_sweep(word, opts.horizon, &opts.budget)?;
        let (iota, method) = oracle::iota_oracle_detailed(word, &opts.budget)?;
        Ok(WordContext {
            rrev_letters: remainder_of_reversal(word).alph(),
            zeta_oracle: oracle::zeta_oracle(word, &opts.budget)?,
            iota_oracle: iota,
            iota_method: method,
            word: word.clone(),
            profile,
            circular,
            chain,
            sweep,
        })
    }

    fn k(&self) -> usize {
        self.profile.k()
    }

    fn sigma(&self) -> usize {
        self.word.sigma()
    }
}

type Check = fn(&WordContext, &VerifyOptions) -> std::result::Result<(), String>;

const CHECKS: &[(&str, Check)] = &[
    ("iota-vs-oracle", check_iota_vs_oracle),
    ("zeta-vs-oracle", check_zeta_vs_oracle),
    ("power-vs-oracle", check_power_vs_oracle),
    ("remainder-periodicity", check_remainder_periodicity),
    ("growth-bounds", check_growth_bounds),
    ("reversal-invariance", check_reversal_invariance),
    ("removable-prefix", check_removable_prefix),
    ("growth-criterion", check_growth_criterion),
    ("seeded-factorization", check_seeded_factorization),
    ("remainder-suffix-chain", check_remainder_suffix_chain),
    ("chain-bounds", check_chain_bounds),
    ("circular-equivalence", check_circular_equivalence),
    ("constant-growth-circular", check_constant_growth_circular),
    ("growth-stabilization", check_growth_stabilization),
    ("eventual-constancy", check_eventual_constancy),
    ("circular-remainder-constancy", check_circular_remainder_constancy),
    ("constant-growth-transfer", check_constant_growth_transfer),
    ("once-per-arch-rule", check_once_per_arch_rule),
    ("circular-witness", check_circular_witness),
];

/// Names of all per-word checks plus the pairwise one, in report order.
pub fn check_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = CHECKS.iter().map(|(n, _)| *n).collect();
    names.push("concat-prediction");
    names
}

/// Runs the whole suite over the exhaustive corpus described by `opts`.
pub fn run_suite(opts: &VerifyOptions) -> Result<VerifyReport> {
    let words: Vec<Word> =
        oracle::enumerate_words(opts.sigma, opts.max_len, &opts.budget)?.collect();

    let mut stats: Vec<CheckStat> = check_names()
        .into_iter()
        .map(|name| CheckStat {
            name,
            checked: 0,
            failed: 0,
            first_failure: None,
        })
        .collect();
    let mut definition_checked = 0u64;
    let mut arch_counted = 0u64;

    for word in &words {
        let ctx = WordContext::prepare(word, opts)?;
        match ctx.iota_method {
            OracleMethod::ScatteredFactorEnumeration => definition_checked += 1,
            OracleMethod::ArchCounting => arch_counted += 1,
        }
        for (i, (_, check)) in CHECKS.iter().enumerate() {
            let stat = &mut stats[i];
            stat.checked += 1;
            if let Err(detail) = check(&ctx, opts) {
                stat.failed += 1;
                stat.first_failure
                    .get_or_insert_with(|| format!("{}: {detail}", word.glyph_string()));
            }
        }
    }

    let pairs = run_pair_check(&words, opts, stats.last_mut().expect("pair stat"));
    let chain = verify_chain_bounds(words.iter().cloned())?;

    Ok(VerifyReport {
        sigma: opts.sigma,
        max_len: opts.max_len,
        horizon: opts.horizon,
        words: words.len() as u64,
        pairs,
        checks: stats,
        chain,
        definition_checked,
        arch_counted,
    })
}

/// Concatenation growth prediction over (a stride of) all word pairs.
fn run_pair_check(words: &[Word], opts: &VerifyOptions, stat: &mut CheckStat) -> u64 {
    let n = words.len() as u64;
    let total = n * n;
    let stride = (total / opts.max_pairs.max(1)).max(1);
    let mut pairs = 0u64;
    let mut p = 0u64;
    while p < total {
        let w = &words[(p / n) as usize];
        let u = &words[(p % n) as usize];
        pairs += 1;
        stat.checked += 1;
        let predicted = concat_growth(w, u).expect("same alphabet");
        let joined = w.concat(u).expect("same alphabet");
        let (actual, _) = oracle::naive_arch_scan(joined.letters(), joined.sigma());
        if predicted.predicted as u64 != actual {
            stat.failed += 1;
            stat.first_failure.get_or_insert_with(|| {
                format!(
                    "{} . {}: predicted {}, factorized {actual}",
                    w.glyph_string(),
                    u.glyph_string(),
                    predicted.predicted
                )
            });
        }
        p += stride;
    }
    pairs
}

fn fail(detail: String) -> std::result::Result<(), String> {
    Err(detail)
}

fn check_iota_vs_oracle(ctx: &WordContext, _: &VerifyOptions) -> std::result::Result<(), String> {
    if ctx.k() as u64 != ctx.iota_oracle {
        return fail(format!("fast {} vs oracle {}", ctx.k(), ctx.iota_oracle));
    }
    Ok(())
}

fn check_zeta_vs_oracle(ctx: &WordContext, _: &VerifyOptions) -> std::result::Result<(), String> {
    if ctx.circular.zeta as u64 != ctx.zeta_oracle {
        return fail(format!(
            "fast zeta {} vs oracle {}",
            ctx.circular.zeta, ctx.zeta_oracle
        ));
    }
    Ok(())
}

fn check_power_vs_oracle(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    for (s, truth) in ctx.sweep.iter().enumerate().take(opts.horizon + 1) {
        let fast = ctx.profile.universality_of_power(s as u64);
        if fast != truth.iota as u128 {
            return fail(format!("iota(w^{s}) fast {fast} vs oracle {}", truth.iota));
        }
        if ctx.profile.remainder_of_power(s as u64) != truth.remainder {
            return fail(format!(
                "r(w^{s}) fast '{}' vs oracle '{}'",
                ctx.profile.remainder_of_power(s as u64).glyph_string(),
                truth.remainder.glyph_string()
            ));
        }
    }
    Ok(())
}

/// Equal remainder letter sets at the anchors force equal remainders one
/// step later, and from there the whole tail repeats.
fn check_remainder_periodicity(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    let (lo, hi) = ctx.profile.anchors();
    for i in 1..=3usize {
        if hi + i > opts.horizon {
            break;
        }
        if ctx.sweep[lo + i].remainder != ctx.sweep[hi + i].remainder {
            return fail(format!(
                "r(w^{}) != r(w^{}) despite equal anchor letter sets",
                lo + i,
                hi + i
            ));
        }
    }
    Ok(())
}

fn check_growth_bounds(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    let k = ctx.k();
    let profile = &ctx.profile;
    if profile.growth_table()[0] != k {
        return fail(format!("growth at step 1 is {}, not k", profile.growth_table()[0]));
    }
    if let Some(&bad) = profile
        .growth_table()
        .iter()
        .find(|&&g| g != k && g != k + 1)
    {
        return fail(format!("growth {bad} outside {{k, k+1}}"));
    }
    if profile.table_len() > ctx.sigma() {
        return fail(format!(
            "anchors ({}, {}) exceed sigma",
            profile.anchors().0,
            profile.anchors().1
        ));
    }
    for s in 1..=opts.horizon as u64 {
        let got = profile.universality_of_power(s);
        let (lo, hi) = (s as u128 * k as u128, s as u128 * (k as u128 + 1) - 1);
        if got < lo || got > hi {
            return fail(format!("iota(w^{s}) = {got} outside [{lo}, {hi}]"));
        }
    }
    Ok(())
}

fn check_reversal_invariance(
    ctx: &WordContext,
    _: &VerifyOptions,
) -> std::result::Result<(), String> {
    let rev = universality_index(&ctx.word.reverse());
    if rev != ctx.k() {
        return fail(format!("iota {} but reversed {rev}", ctx.k()));
    }
    Ok(())
}

/// The computed prefix can be removed without losing an arch; one letter
/// more costs exactly one arch.
fn check_removable_prefix(ctx: &WordContext, _: &VerifyOptions) -> std::result::Result<(), String> {
    let w = &ctx.word;
    let p = crate::arch::longest_removable_prefix(w).map_err(|e| e.to_string())?;
    let kept = universality_index(&w.subword(p.len()..w.len()));
    if kept != ctx.k() {
        return fail(format!("removing '{}' leaves iota {kept}", p.glyph_string()));
    }
    if p.len() + 1 <= w.len() {
        let dropped = universality_index(&w.subword(p.len() + 1..w.len()));
        if dropped != ctx.k() - 1 {
            return fail(format!(
                "removing one letter past '{}' leaves iota {dropped}, expected {}",
                p.glyph_string(),
                ctx.k() - 1
            ));
        }
    }
    Ok(())
}

/// Growth is k + 1 at step s exactly when the letters of r(w^(s-1)) and of
/// r(w reversed) cover the alphabet; checked against materialized
/// remainders.
fn check_growth_criterion(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    let full = ctx.word.alphabet().full_set();
    for s in 1..=opts.horizon.min(10) {
        let covered = ctx.sweep[s - 1]
            .remainder
            .alph()
            .union(ctx.rrev_letters)
            == full;
        let plus_one = ctx.profile.growth_at(s as u64) == ctx.k() + 1;
        if covered != plus_one {
            return fail(format!(
                "step {s}: letter condition {covered} but growth k+1 is {plus_one}"
            ));
        }
    }
    Ok(())
}

/// Seeded factorization of u . w must agree with materializing a word u
/// with the seed's letters and factorizing naively.
fn check_seeded_factorization(
    ctx: &WordContext,
    _: &VerifyOptions,
) -> std::result::Result<(), String> {
    let w = &ctx.word;
    let sigma = ctx.sigma();
    let full = w.alphabet().full_set();
    for mask in 0..(1u32 << sigma) - 1 {
        let seed: LetterSet = (0..sigma as u8).filter(|&i| mask >> i & 1 == 1).collect();
        let seeded = arch_factorize_seeded(seed, w).map_err(|e| e.to_string())?;
        let u: Vec<u8> = seed.iter().take(sigma).collect();
        let mut joined = u.clone();
        joined.extend_from_slice(w.letters());
        let (arches, remainder_start) = oracle::naive_arch_scan(&joined, sigma);
        if seeded.arch_count as u64 != arches {
            return fail(format!(
                "seed {}: seeded {} arches, materialized {arches}",
                seed.render(w.alphabet()),
                seeded.arch_count
            ));
        }
        if seeded.first_arch_end.is_some() {
            let expected = &joined[remainder_start..];
            let got = &w.letters()[seeded.remainder_start..];
            if expected != got {
                return fail(format!("seed {}: remainders differ", seed.render(w.alphabet())));
            }
        } else {
            let all: LetterSet = joined.iter().copied().collect();
            if seeded.remainder_letters != all {
                return fail(format!(
                    "seed {}: open remainder letters differ",
                    seed.render(w.alphabet())
                ));
            }
            if all == full {
                return fail("open remainder cannot cover the alphabet".to_string());
            }
        }
    }
    Ok(())
}

/// Consecutive remainders are suffix-compatible, with the direction decided
/// by the growth; strict letter-set moves pin the direction exactly.
fn check_remainder_suffix_chain(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    let k = ctx.k();
    let end = (2 * ctx.sigma() + 2).min(opts.horizon);
    for s in 0..end {
        let cur = &ctx.sweep[s].remainder;
        let next = &ctx.sweep[s + 1].remainder;
        let growth = ctx.profile.growth_at(s as u64 + 1);
        let (short, long) = if growth == k { (cur, next) } else { (next, cur) };
        if !long.letters().ends_with(short.letters()) {
            return fail(format!(
                "step {}: '{}' is not a suffix of '{}' at growth {growth}",
                s + 1,
                short.glyph_string(),
                long.glyph_string()
            ));
        }
        if cur != next {
            let proper_forward = next.letters().ends_with(cur.letters());
            if (growth == k) != proper_forward {
                return fail(format!(
                    "step {}: growth {growth} disagrees with suffix direction",
                    s + 1
                ));
            }
        }
        let (cur_set, next_set) = (cur.alph(), next.alph());
        if cur_set != next_set {
            let ascending = cur_set.is_strict_subset(next_set);
            if (growth == k) != ascending {
                return fail(format!(
                    "step {}: growth {growth} disagrees with letter-set direction",
                    s + 1
                ));
            }
        }
    }
    Ok(())
}

/// Chain runs respect their bounds, and runs attaining the bounds have the
/// forced letter-set sizes.
fn check_chain_bounds(ctx: &WordContext, _: &VerifyOptions) -> std::result::Result<(), String> {
    let sigma = ctx.sigma();
    let chain = &ctx.chain;
    if chain.longest_ascending > sigma {
        return fail(format!(
            "ascending run of {} sets exceeds sigma",
            chain.longest_ascending
        ));
    }
    let desc_bound = if sigma == 1 { 0 } else { sigma - 1 };
    if chain.longest_descending > desc_bound {
        return fail(format!(
            "descending run of {} sets exceeds sigma - 1",
            chain.longest_descending
        ));
    }
    // A full-length ascending run walks the sizes 0, 1, .., sigma - 1.
    if sigma > 1 && chain.longest_ascending == sigma {
        let t = ctx.profile.table_len() + 2 * ctx.profile.period();
        'starts: for start in 0..=t.saturating_sub(sigma - 1) {
            for step in 0..sigma - 1 {
                let a = ctx.profile.alfrem_at((start + step) as u64);
                let b = ctx.profile.alfrem_at((start + step + 1) as u64);
                if !a.is_strict_subset(b) {
                    continue 'starts;
                }
            }
            for (i, s) in (start..start + sigma).enumerate() {
                if ctx.profile.alfrem_at(s as u64).len() != i {
                    return fail(format!(
                        "full ascending run at {start}: |alfrem(w^{s})| != {i}"
                    ));
                }
            }
            return Ok(());
        }
        return fail("reported full ascending run not found".to_string());
    }
    Ok(())
}

/// Three-way equivalence: zeta = k + 1, growth k + 1 across [2, sigma], and
/// growth k + 1 across every sampled step.
fn check_circular_equivalence(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    let k = ctx.k();
    let a = ctx.circular.zeta == k + 1;
    let b = ctx.circular.uniform_plus_one;
    let c = (2..=opts.sample.max(2)).all(|s| ctx.profile.growth_at(s) == k + 1);
    if a != b || b != c {
        return fail(format!("zeta+1 {a}, window {b}, sampled {c}"));
    }
    Ok(())
}

/// Plain growth stays at k for every power exactly when the circular growth
/// stays at k across [1, sigma - 1]; the circular side is measured on
/// materialized powers with the conjugate-scanning oracle.
fn check_constant_growth_circular(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    let k = ctx.k() as u64;
    let lhs = ctx.profile.is_growth_always_k();
    let mut rhs = true;
    let mut prev = 0u64;
    for t in 1..ctx.sigma() {
        let z = oracle_zeta_of_power(ctx, t, opts).map_err(|e| e.to_string())?;
        if z - prev != k {
            rhs = false;
            break;
        }
        prev = z;
    }
    if lhs != rhs {
        return fail(format!("constant plain growth {lhs} vs constant circular growth {rhs}"));
    }
    Ok(())
}

fn oracle_zeta_of_power(
    ctx: &WordContext,
    s: usize,
    opts: &VerifyOptions,
) -> Result<u64> {
    if s == 0 {
        return Ok(0);
    }
    if s == 1 {
        return Ok(ctx.zeta_oracle);
    }
    let p = ctx.word.power_guarded(s, opts.budget.max_power_length)?;
    // Conjugate scanning on a materialized power; the tight budget keeps the
    // per-rotation universality on the arch-counting route.
    oracle::zeta_oracle(&p, &Budget::tight())
}

/// Growth k across the first sigma steps pins the growth everywhere.
fn check_growth_stabilization(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    let k = ctx.k();
    let window_all_k = (1..=ctx.sigma() as u64).all(|s| ctx.profile.growth_at(s) == k);
    if !window_all_k {
        return Ok(());
    }
    for (s, truth) in ctx.sweep.iter().enumerate().take(opts.horizon + 1) {
        if truth.iota != (s * k) as u64 {
            return fail(format!(
                "growth k on [1, sigma] but iota(w^{s}) = {} != {}",
                truth.iota,
                s * k
            ));
        }
    }
    Ok(())
}

/// The remainder map is eventually constant exactly when the growth is,
/// and the materialized tail agrees.
fn check_eventual_constancy(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    let profile = &ctx.profile;
    let (lo, hi) = profile.anchors();
    let cycle_growth_constant = profile.growth_table()[lo..hi]
        .windows(2)
        .all(|w| w[0] == w[1]);
    let rem_constant = profile.eventually_constant();
    if rem_constant != cycle_growth_constant && hi - lo > 1 {
        return fail(format!(
            "period {} but cycle growth constant = {cycle_growth_constant}",
            profile.period()
        ));
    }
    let probe = (2 * ctx.sigma()).min(opts.horizon - 1);
    let tail_equal = ctx.sweep[probe].remainder == ctx.sweep[probe + 1].remainder;
    if rem_constant != tail_equal {
        return fail(format!(
            "eventually constant = {rem_constant} but materialized tail equal = {tail_equal}"
        ));
    }
    Ok(())
}

fn check_circular_remainder_constancy(
    ctx: &WordContext,
    _: &VerifyOptions,
) -> std::result::Result<(), String> {
    if ctx.circular.zeta == ctx.k() + 1 && !ctx.profile.eventually_constant() {
        return fail(format!(
            "zeta = k + 1 but remainder period is {}",
            ctx.profile.period()
        ));
    }
    Ok(())
}

/// Constant plain growth transfers to the circular growth at every step,
/// sampled a little beyond the [1, sigma - 1] window.
fn check_constant_growth_transfer(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    if !ctx.profile.is_growth_always_k() {
        return Ok(());
    }
    let k = ctx.k() as u64;
    let mut prev = 0u64;
    for s in 1..=(ctx.sigma() + 1).min(4) {
        let z = oracle_zeta_of_power(ctx, s, opts).map_err(|e| e.to_string())?;
        if z - prev != k {
            return fail(format!("constant plain growth but circular growth at {s} is {}", z - prev));
        }
        prev = z;
    }
    Ok(())
}

/// When every arch has pairwise distinct letters and the remainder repeats
/// none, the circular universality grows exactly by k at every power.
fn check_once_per_arch_rule(
    ctx: &WordContext,
    opts: &VerifyOptions,
) -> std::result::Result<(), String> {
    let f = ArchFactorisation::of(&ctx.word);
    let sigma = ctx.sigma();
    let arches_simple = (0..f.arch_count()).all(|i| f.arch_range(i).len() == sigma);
    let r = f.remainder();
    let remainder_simple = r.alph().len() == r.len();
    if !(arches_simple && remainder_simple) {
        return Ok(());
    }
    let k = ctx.k() as u64;
    for s in 1..=3usize.min(opts.horizon) {
        let z = oracle_zeta_of_power(ctx, s, opts).map_err(|e| e.to_string())?;
        if z != s as u64 * k {
            return fail(format!("zeta(w^{s}) = {z}, expected {}", s as u64 * k));
        }
    }
    Ok(())
}

fn check_circular_witness(ctx: &WordContext, _: &VerifyOptions) -> std::result::Result<(), String> {
    if let Some(offset) = ctx.circular.witness_conjugate {
        let conj = ctx.word.conjugate(offset).map_err(|e| e.to_string())?;
        let got = universality_index(&conj);
        if got != ctx.k() + 1 {
            return fail(format!("witness rotation {offset} has iota {got}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binary_corpus_passes() {
        let mut opts = VerifyOptions::new(2);
        opts.max_len = 9;
        opts.horizon = 14;
        let report = run_suite(&opts).unwrap();
        assert!(report.words > 0);
        assert!(
            report.all_passed(),
            "failures: {:?}",
            report
                .checks
                .iter()
                .filter(|c| c.failed > 0)
                .map(|c| (c.name, c.first_failure.clone()))
                .collect::<Vec<_>>()
        );
        assert!(report.definition_checked > 0);
    }

    #[test]
    fn small_ternary_corpus_passes() {
        let mut opts = VerifyOptions::new(3);
        opts.max_len = 6;
        opts.horizon = 14;
        let report = run_suite(&opts).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.chain.max_ascending, 3);
    }

    #[test]
    fn unary_corpus_passes() {
        let mut opts = VerifyOptions::new(1);
        opts.max_len = 5;
        let report = run_suite(&opts).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.chain.max_ascending, 0);
        assert_eq!(report.chain.max_descending, 0);
    }
}
