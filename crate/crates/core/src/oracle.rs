//! Finite-window evidence about `f^ω(a)`, computed without the case
//! analysis of [`crate::classifier`].
//!
//! Everything here works from letters actually generated. Suffix comparisons
//! that exhaust the window with equality carry no information and are never
//! counted as violations.

use std::fmt;

use crate::classifier::{classify, Outcome};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::words::{Letter, PeriodWitness, Word};

/// Longest word accepted by [`pre_lyndon_oracle`].
pub const PRE_LYNDON_ORACLE_MAX_LEN: usize = 14;

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Number of fixed-point letters inspected.
    pub window: usize,
    pub min_lyndon_prefixes: usize,
    /// Maximal extension length tried by [`pre_lyndon_oracle`], as a
    /// function of the word length.
    pub pre_lyndon_extension_bound: fn(usize) -> usize,
}

fn default_extension_bound(len: usize) -> usize {
    len + 1
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            window: 5000,
            min_lyndon_prefixes: 3,
            pre_lyndon_extension_bound: default_extension_bound,
        }
    }
}

impl OracleConfig {
    pub fn with_window(window: usize) -> Self {
        Self {
            window,
            ..Self::default()
        }
    }
}

/// A suffix `w[position..]` that agrees with `w` on `matched` letters and
/// then has a strictly smaller letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub position: usize,
    pub matched: usize,
    pub suffix_letter: Letter,
    pub prefix_letter: Letter,
}

impl Violation {
    /// Re-checks the transcript against `w`, which may be longer than the
    /// word the violation was found in.
    pub fn holds_in(&self, w: &[Letter]) -> bool {
        let end = self.position + self.matched;
        end < w.len()
            && w[self.position..end] == w[..self.matched]
            && w[end] == self.suffix_letter
            && w[self.matched] == self.prefix_letter
            && self.suffix_letter < self.prefix_letter
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    LooksLyndon,
    RefutedAtPosition(usize),
    PeriodicWithin(usize),
    Inconclusive,
}

impl Conclusion {
    pub fn tag(&self) -> &'static str {
        match self {
            Conclusion::LooksLyndon => "looks_lyndon",
            Conclusion::RefutedAtPosition(_) => "refuted_at_position",
            Conclusion::PeriodicWithin(_) => "periodic_within",
            Conclusion::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub window: usize,
    pub lyndon_prefix_lengths: Vec<usize>,
    pub first_violation: Option<Violation>,
    pub detected_period: Option<PeriodWitness>,
    /// Whether the detected period is proved to extend to the whole fixed
    /// point.
    pub period_certified: bool,
    pub conclusion: Conclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    Disagree,
    Inconclusive,
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Agree => "agree",
            Agreement::Disagree => "disagree",
            Agreement::Inconclusive => "inconclusive",
        })
    }
}

/// `z[j]` is the length of the longest common prefix of `s` and `s[j..]`;
/// `z[0] = |s|`.
fn z_array(s: &[Letter]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for j in 1..n {
        if j < r {
            z[j] = (r - j).min(z[j - l]);
        }
        while j + z[j] < n && s[z[j]] == s[j + z[j]] {
            z[j] += 1;
        }
        if j + z[j] > r {
            l = j;
            r = j + z[j];
        }
    }
    z
}

fn nonempty(w: &Word) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

fn lyndon_prefix_lengths_of(s: &[Letter]) -> Vec<usize> {
    // w[..len] is Lyndon iff every j < len has a suffix that departs upward
    // from the prefix (s[j + z[j]] > s[z[j]]) before position len.
    let z = z_array(s);
    let mut lengths = Vec::new();
    let mut reach = 0;
    for len in 1..=s.len() {
        let j = len - 1;
        if j > 0 {
            let m = z[j];
            if j + m >= s.len() || s[j + m] < s[m] {
                break;
            }
            reach = reach.max(j + m);
        }
        if len > reach {
            lengths.push(len);
        }
    }
    lengths
}

fn suffix_violation_of(s: &[Letter]) -> Option<Violation> {
    let z = z_array(s);
    (1..s.len()).find_map(|j| {
        let m = z[j];
        (j + m < s.len() && s[j + m] < s[m]).then(|| Violation {
            position: j,
            matched: m,
            suffix_letter: s[j + m],
            prefix_letter: s[m],
        })
    })
}

/// Lengths of the prefixes of `w` that are Lyndon words, ascending.
pub fn lyndon_prefix_lengths(w: &Word) -> Result<Vec<usize>> {
    nonempty(w)?;
    Ok(lyndon_prefix_lengths_of(w.letters()))
}

/// The first position whose suffix is provably smaller than `w` itself.
pub fn find_suffix_violation(w: &Word) -> Result<Option<Violation>> {
    nonempty(w)?;
    Ok(suffix_violation_of(w.letters()))
}

/// Smallest period `p <= max_period` attested at least twice (`|w| >= 2p`).
pub fn detect_period(w: &Word, max_period: usize) -> Option<PeriodWitness> {
    let s = w.letters();
    let z = z_array(s);
    (1..=max_period.min(s.len() / 2))
        .find(|&p| z[p] == s.len() - p)
        .map(|p| PeriodWitness {
            root: w.prefix(p),
            length: s.len(),
        })
}

/// Whether `w` extends to a Lyndon word by at most `bound` letters, by
/// exhaustive search.
pub fn pre_lyndon_oracle(w: &Word, bound: usize) -> Result<bool> {
    nonempty(w)?;
    if w.len() > PRE_LYNDON_ORACLE_MAX_LEN {
        return Err(Error::TooLong {
            len: w.len(),
            limit: PRE_LYNDON_ORACLE_MAX_LEN,
        });
    }
    let alphabet_len = w.alphabet().len();
    let mut buf = w.letters().to_vec();
    Ok(extend_to_lyndon(&mut buf, bound, alphabet_len))
}

fn extend_to_lyndon(buf: &mut Vec<Letter>, budget: usize, alphabet_len: usize) -> bool {
    let smaller_suffix = |s: &[Letter], j: usize| {
        let t = &s[j..];
        let m = t.iter().zip(s).take_while(|(x, y)| x == y).count();
        m < t.len() && t[m] < s[m]
    };
    let s = buf.as_slice();
    if (1..s.len()).all(|j| s < &s[j..]) {
        return true;
    }
    // A suffix that is already smaller stays smaller under any extension.
    if budget == 0 || (1..s.len()).any(|j| smaller_suffix(s, j)) {
        return false;
    }
    for letter in 0..alphabet_len {
        buf.push(letter as Letter);
        let found = extend_to_lyndon(buf, budget - 1, alphabet_len);
        buf.pop();
        if found {
            return true;
        }
    }
    false
}

/// A period of the window that provably extends to all of `f^ω(a)`.
///
/// If the window starts with a primitive `r` and `f(r) = r^m`, then
/// `f^ω(a) = r^ω`: `m >= 2` since `|f^n(a)|` is unbounded, and the fixed
/// point begins with `f^n(r) = r^(m^n)` for every `n`.
pub fn certified_period(f: &Morphism, window: usize) -> Result<Option<PeriodWitness>> {
    let prefix = f.fixed_point_prefix(window)?;
    Ok(detect_period(&prefix, window / 2).filter(|p| is_power_of(&f.apply(&p.root), &p.root)))
}

fn is_power_of(w: &Word, root: &Word) -> bool {
    let (w, r) = (w.letters(), root.letters());
    !r.is_empty() && w.len() % r.len() == 0 && w.chunks(r.len()).all(|c| c == r)
}

pub fn oracle_report(f: &Morphism, cfg: &OracleConfig) -> Result<OracleReport> {
    let mut stream = f.prefix_stream()?;
    let prefix = stream.prefix(cfg.window.max(1));
    let s = prefix.letters();
    let lyndon_prefix_lengths = lyndon_prefix_lengths_of(s);
    let first_violation = suffix_violation_of(s);
    let detected_period = detect_period(&prefix, s.len() / 2);
    let period_certified = detected_period
        .as_ref()
        .is_some_and(|p| is_power_of(&f.apply(&p.root), &p.root));
    let conclusion = if let Some(v) = first_violation {
        Conclusion::RefutedAtPosition(v.position)
    } else if period_certified {
        Conclusion::PeriodicWithin(s.len())
    } else if lyndon_prefix_lengths.len() >= cfg.min_lyndon_prefixes {
        Conclusion::LooksLyndon
    } else {
        Conclusion::Inconclusive
    };
    Ok(OracleReport {
        window: s.len(),
        lyndon_prefix_lengths,
        first_violation,
        detected_period,
        period_certified,
        conclusion,
    })
}

/// Compares [`classify`] with the window evidence.
pub fn cross_validate(f: &Morphism, cfg: &OracleConfig) -> Result<(OracleReport, Agreement)> {
    let report = oracle_report(f, cfg)?;
    let agreement = agreement(classify(f).outcome, report.conclusion);
    Ok((report, agreement))
}

/// [`cross_validate`], doubling the window while the oracle is
/// inconclusive, up to `max_window`.
pub fn cross_validate_escalating(
    f: &Morphism,
    cfg: &OracleConfig,
    max_window: usize,
) -> Result<(OracleReport, Agreement)> {
    let mut cfg = *cfg;
    loop {
        let result = cross_validate(f, &cfg)?;
        if result.1 != Agreement::Inconclusive || cfg.window * 2 > max_window {
            return Ok(result);
        }
        cfg.window *= 2;
    }
}

fn agreement(outcome: Outcome, conclusion: Conclusion) -> Agreement {
    match (outcome, conclusion) {
        (_, Conclusion::Inconclusive) => Agreement::Inconclusive,
        (Outcome::InfiniteLyndon, Conclusion::LooksLyndon) => Agreement::Agree,
        (
            Outcome::NotLyndon(_),
            Conclusion::RefutedAtPosition(_) | Conclusion::PeriodicWithin(_),
        ) => Agreement::Agree,
        _ => Agreement::Disagree,
    }
}
