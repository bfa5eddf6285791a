//! Finite words over totally ordered alphabets.
//!
//! Letters are stored as their index in the alphabet, so the order on
//! letters is the order on `u8` and the lexicographic order on words is the
//! standard slice order (a proper prefix is smaller).

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, LazyLock};

use crate::error::{Error, Result};

/// Index of a letter in its alphabet.
pub type Letter = u8;

/// The letter `a` of the binary alphabet.
pub const A: Letter = 0;
/// The letter `b` of the binary alphabet.
pub const B: Letter = 1;

static BINARY: LazyLock<Arc<OrderedAlphabet>> = LazyLock::new(|| {
    Arc::new(OrderedAlphabet {
        symbols: vec!['a', 'b'],
    })
});

/// A finite alphabet whose listing order is the letter order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedAlphabet {
    symbols: Vec<char>,
}

impl OrderedAlphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > 256 {
            return Err(Error::AlphabetTooLarge(symbols.len()));
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::DuplicateSymbol(*c));
            }
        }
        Ok(Self { symbols })
    }

    /// The shared alphabet `{a < b}`.
    pub fn binary() -> Arc<Self> {
        Arc::clone(&BINARY)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter as usize]
    }

    pub fn letter(&self, symbol: char) -> Option<Letter> {
        self.symbols
            .iter()
            .position(|&c| c == symbol)
            .map(|i| i as Letter)
    }

    pub fn max_letter(&self) -> Letter {
        (self.symbols.len() - 1) as Letter
    }
}

/// A finite word. The empty word is allowed here; Lyndon-related
/// operations reject it.
#[derive(Clone)]
pub struct Word {
    alphabet: Arc<OrderedAlphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(alphabet: &Arc<OrderedAlphabet>) -> Self {
        Self {
            alphabet: Arc::clone(alphabet),
            letters: Vec::new(),
        }
    }

    /// Parses `text` symbol by symbol. Offsets in errors are character
    /// offsets.
    pub fn parse(alphabet: &Arc<OrderedAlphabet>, text: &str) -> Result<Self> {
        let letters = text
            .chars()
            .enumerate()
            .map(|(offset, symbol)| {
                alphabet
                    .letter(symbol)
                    .ok_or(Error::UnknownSymbol { symbol, offset })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    /// Parses a word over `{a < b}`.
    pub fn binary(text: &str) -> Result<Self> {
        Self::parse(&BINARY, text)
    }

    pub fn from_letters(alphabet: &Arc<OrderedAlphabet>, letters: Vec<Letter>) -> Result<Self> {
        if let Some(offset) = letters.iter().position(|&l| l as usize >= alphabet.len()) {
            return Err(Error::UnknownSymbol {
                symbol: char::from(letters[offset]),
                offset,
            });
        }
        Ok(Self {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    pub(crate) fn from_raw(alphabet: &Arc<OrderedAlphabet>, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet.len()));
        Self {
            alphabet: Arc::clone(alphabet),
            letters,
        }
    }

    pub(crate) fn binary_raw(letters: Vec<Letter>) -> Self {
        Self::from_raw(&BINARY, letters)
    }

    pub fn alphabet(&self) -> &Arc<OrderedAlphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if !self.same_alphabet(other) {
            return Err(Error::MixedAlphabets);
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_raw(&self.alphabet, letters))
    }

    pub fn pow(&self, k: usize) -> Word {
        Self::from_raw(&self.alphabet, self.letters.repeat(k))
    }

    /// The first `min(n, len)` letters.
    pub fn prefix(&self, n: usize) -> Word {
        Self::from_raw(&self.alphabet, self.letters[..n.min(self.len())].to_vec())
    }

    /// The factor `[start, end)`.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Self::from_raw(&self.alphabet, self.letters[start..end].to_vec())
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.factor(start, self.len())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.same_alphabet(other) && other.letters.starts_with(&self.letters)
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.same_alphabet(other)
    }
}

impl Eq for Word {}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.symbol(l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

/// All words of length `len` over `alphabet`, in lexicographic order.
pub fn words_of_length(alphabet: &Arc<OrderedAlphabet>, len: usize) -> impl Iterator<Item = Word> {
    let alphabet = Arc::clone(alphabet);
    let base = alphabet.len();
    let total = base.checked_pow(len as u32).expect("enumeration too large");
    (0..total).map(move |mut code| {
        let mut letters = vec![0; len];
        for slot in letters.iter_mut().rev() {
            *slot = (code % base) as Letter;
            code /= base;
        }
        Word::from_raw(&alphabet, letters)
    })
}

/// All nonempty words of length at most `max_len`, shorter words first.
pub fn words_up_to(
    alphabet: &Arc<OrderedAlphabet>,
    max_len: usize,
) -> impl Iterator<Item = Word> + '_ {
    (1..=max_len).flat_map(move |len| words_of_length(alphabet, len))
}

/// Nonincreasing factorization into Lyndon words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<Word>,
}

impl Factorization {
    pub fn concat(&self) -> Word {
        let alphabet = self.factors[0].alphabet();
        let letters = self
            .factors
            .iter()
            .flat_map(|f| f.letters().iter().copied())
            .collect();
        Word::from_raw(alphabet, letters)
    }
}

/// Decomposition `w = (uv)^k u` with `uv` Lyndon and `v` nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLyndonWitness {
    /// `u`: the incomplete final repetition, a proper prefix of the root.
    pub remainder: Word,
    /// `v`: completes `remainder` to the Lyndon root.
    pub completion: Word,
    pub exponent: usize,
}

impl PreLyndonWitness {
    pub fn root(&self) -> Word {
        self.remainder
            .concat(&self.completion)
            .expect("witness parts share an alphabet")
    }

    pub fn word(&self) -> Word {
        self.root()
            .pow(self.exponent)
            .concat(&self.remainder)
            .expect("witness parts share an alphabet")
    }
}

/// A word that is its primitive root repeated, then truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodWitness {
    pub root: Word,
    /// Length of the witnessed word.
    pub length: usize,
}

impl PeriodWitness {
    pub fn period(&self) -> usize {
        self.root.len()
    }

    pub fn whole_repeats(&self) -> usize {
        self.length / self.root.len()
    }

    pub fn remainder_len(&self) -> usize {
        self.length % self.root.len()
    }

    pub fn expand(&self) -> Word {
        let letters = self
            .root
            .letters()
            .iter()
            .copied()
            .cycle()
            .take(self.length)
            .collect();
        Word::from_raw(self.root.alphabet(), letters)
    }
}

fn nonempty(w: &Word) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

pub fn lex_compare(u: &Word, v: &Word) -> Result<Ordering> {
    if !u.same_alphabet(v) {
        return Err(Error::MixedAlphabets);
    }
    Ok(u.letters.cmp(&v.letters))
}

/// Runs Duval's scan from position 0. Returns `(consumed, period)`:
/// `s[..consumed]` is the longest prefix of the form `(uv)^k u` with `uv`
/// Lyndon, and `period = |uv|`. The scan stops at the first letter that
/// makes a suffix smaller than the prefix.
pub(crate) fn duval_prefix_scan(s: &[Letter]) -> (usize, usize) {
    if s.is_empty() {
        return (0, 0);
    }
    let (mut k, mut j) = (0, 1);
    while j < s.len() {
        match s[k].cmp(&s[j]) {
            Ordering::Less => k = 0,
            Ordering::Equal => k += 1,
            Ordering::Greater => break,
        }
        j += 1;
    }
    (j, j - k)
}

pub(crate) fn is_lyndon_letters(s: &[Letter]) -> bool {
    let (consumed, period) = duval_prefix_scan(s);
    !s.is_empty() && consumed == s.len() && period == s.len()
}

pub fn is_lyndon(w: &Word) -> Result<bool> {
    nonempty(w)?;
    Ok(is_lyndon_letters(&w.letters))
}

/// Chen–Fox–Lyndon factorization (Duval's algorithm).
pub fn cfl_factorize(w: &Word) -> Result<Factorization> {
    nonempty(w)?;
    let s = &w.letters;
    let mut factors = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let (consumed, period) = duval_prefix_scan(&s[i..]);
        let repeats = consumed / period;
        for r in 0..repeats {
            let start = i + r * period;
            factors.push(w.factor(start, start + period));
        }
        i += repeats * period;
    }
    Ok(Factorization { factors })
}

/// Failure function of the Knuth–Morris–Pratt automaton: `fail[i]` is the
/// length of the longest proper border of `s[..=i]`.
pub(crate) fn failure_function(s: &[Letter]) -> Vec<usize> {
    let mut fail = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

pub(crate) fn smallest_period(s: &[Letter]) -> usize {
    match s.len() {
        0 => 0,
        n => n - failure_function(s)[n - 1],
    }
}

pub fn primitive_root(w: &Word) -> Result<(Word, usize)> {
    nonempty(w)?;
    let n = w.len();
    let p = smallest_period(&w.letters);
    let root_len = if n.is_multiple_of(p) { p } else { n };
    Ok((w.prefix(root_len), n / root_len))
}

pub fn is_power_of_lyndon(w: &Word) -> Result<Option<(Word, usize)>> {
    let (root, k) = primitive_root(w)?;
    Ok(is_lyndon_letters(root.letters()).then_some((root, k)))
}

fn witness_from_period(w: &Word, period: usize) -> Option<PreLyndonWitness> {
    let exponent = w.len() / period;
    let rem = w.len() % period;
    // c^k with k >= 2 for the maximal letter c is never a Lyndon prefix.
    if period == 1 && exponent >= 2 && w.letters[0] == w.alphabet.max_letter() {
        return None;
    }
    Some(PreLyndonWitness {
        remainder: w.prefix(rem),
        completion: w.factor(rem, period),
        exponent,
    })
}

/// Witness that `w` is a prefix of some Lyndon word, choosing the
/// decomposition with the largest exponent.
pub fn is_pre_lyndon(w: &Word) -> Result<Option<PreLyndonWitness>> {
    nonempty(w)?;
    let (consumed, period) = duval_prefix_scan(&w.letters);
    if consumed < w.len() {
        return Ok(None);
    }
    Ok(witness_from_period(w, period))
}

/// Quadratic reference implementations straight from the definitions.
pub mod naive {
    use super::*;

    /// Every nonempty proper suffix is strictly greater than the word.
    pub fn is_lyndon(w: &Word) -> Result<bool> {
        nonempty(w)?;
        let s = w.letters();
        Ok((1..s.len()).all(|j| s < &s[j..]))
    }

    /// Looks for the shortest Lyndon prefix that is also a period of `w`.
    pub fn is_pre_lyndon(w: &Word) -> Result<Option<PreLyndonWitness>> {
        nonempty(w)?;
        let s = w.letters();
        for p in 1..=s.len() {
            let periodic = (p..s.len()).all(|t| s[t] == s[t - p]);
            if periodic && is_lyndon(&w.prefix(p))? {
                return Ok(witness_from_period(w, p));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::binary(s).unwrap()
    }

    fn strs(f: &Factorization) -> Vec<String> {
        f.factors.iter().map(Word::to_string).collect()
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(lex_compare(&w("ab"), &w("b")).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&w("a"), &w("ab")).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&w("ab"), &w("ab")).unwrap(), Ordering::Equal);
        assert_eq!(lex_compare(&w("b"), &w("aaa")).unwrap(), Ordering::Greater);
    }

    #[test]
    fn lex_compare_rejects_mixed_alphabets() {
        let abc = Arc::new(OrderedAlphabet::new("abc".chars()).unwrap());
        let u = Word::parse(&abc, "ab").unwrap();
        assert_eq!(lex_compare(&u, &w("ab")), Err(Error::MixedAlphabets));
    }

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(&w("aababb")).unwrap());
        assert!(is_lyndon(&w("a")).unwrap());
        assert!(!is_lyndon(&w("aba")).unwrap());
        assert!(is_lyndon(&w("abb")).unwrap());
        assert_eq!(is_lyndon(&w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn lyndon_words_of_length_six() {
        let found: Vec<String> = words_of_length(&OrderedAlphabet::binary(), 6)
            .filter(|x| is_lyndon(x).unwrap())
            .map(|x| x.to_string())
            .collect();
        assert_eq!(
            found,
            [
                "aaaaab", "aaaabb", "aaabab", "aaabbb", "aababb", "aabbab", "aabbbb", "ababbb",
                "abbbbb"
            ]
        );
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(strs(&cfl_factorize(&w("ba")).unwrap()), ["b", "a"]);
        assert_eq!(strs(&cfl_factorize(&w("abab")).unwrap()), ["ab", "ab"]);
        assert_eq!(strs(&cfl_factorize(&w("ababb")).unwrap()), ["ababb"]);
        assert_eq!(
            strs(&cfl_factorize(&w("bbababaab")).unwrap()),
            ["b", "b", "ab", "ab", "aab"]
        );
        assert!(cfl_factorize(&w("")).is_err());
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(&w("abab")).unwrap(), (w("ab"), 2));
        assert_eq!(primitive_root(&w("aab")).unwrap(), (w("aab"), 1));
        assert_eq!(primitive_root(&w("aaa")).unwrap(), (w("a"), 3));
        assert_eq!(primitive_root(&w("abaab")).unwrap(), (w("abaab"), 1));
        assert!(primitive_root(&w("")).is_err());
    }

    #[test]
    fn power_of_lyndon_examples() {
        assert_eq!(
            is_power_of_lyndon(&w("abbabb")).unwrap(),
            Some((w("abb"), 2))
        );
        assert_eq!(is_power_of_lyndon(&w("ab")).unwrap(), Some((w("ab"), 1)));
        assert_eq!(is_power_of_lyndon(&w("aba")).unwrap(), None);
        assert_eq!(is_power_of_lyndon(&w("bb")).unwrap(), Some((w("b"), 2)));
    }

    #[test]
    fn pre_lyndon_examples() {
        let wit = is_pre_lyndon(&w("aa")).unwrap().unwrap();
        assert_eq!(
            (wit.remainder, wit.completion, wit.exponent),
            (w(""), w("a"), 2)
        );
        assert_eq!(is_pre_lyndon(&w("bb")).unwrap(), None);
        assert_eq!(is_pre_lyndon(&w("abaab")).unwrap(), None);
        let wit = is_pre_lyndon(&w("abab")).unwrap().unwrap();
        assert_eq!(
            (wit.remainder, wit.completion, wit.exponent),
            (w(""), w("ab"), 2)
        );
        let wit = is_pre_lyndon(&w("ababa")).unwrap().unwrap();
        assert_eq!(wit.word(), w("ababa"));
        assert_eq!(
            (wit.remainder, wit.completion, wit.exponent),
            (w("a"), w("b"), 2)
        );
        assert!(is_pre_lyndon(&w("b")).unwrap().is_some());
    }

    #[test]
    fn max_letter_exclusion_is_alphabet_relative() {
        let abc = Arc::new(OrderedAlphabet::new("abc".chars()).unwrap());
        // b is maximal in w's letters but not in the alphabet: bbc is Lyndon.
        assert!(is_pre_lyndon(&Word::parse(&abc, "bb").unwrap())
            .unwrap()
            .is_some());
        assert!(is_pre_lyndon(&Word::parse(&abc, "cc").unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn fast_paths_agree_with_naive_up_to_14() {
        for x in words_up_to(&OrderedAlphabet::binary(), 14) {
            assert_eq!(is_lyndon(&x).unwrap(), naive::is_lyndon(&x).unwrap(), "{x}");
            assert_eq!(
                is_pre_lyndon(&x).unwrap(),
                naive::is_pre_lyndon(&x).unwrap(),
                "{x}"
            );
        }
    }

    #[test]
    fn ternary_fast_paths_agree_with_naive() {
        let abc = Arc::new(OrderedAlphabet::new("abc".chars()).unwrap());
        for x in words_up_to(&abc, 8) {
            assert_eq!(is_lyndon(&x).unwrap(), naive::is_lyndon(&x).unwrap(), "{x}");
            assert_eq!(
                is_pre_lyndon(&x).unwrap(),
                naive::is_pre_lyndon(&x).unwrap(),
                "{x}"
            );
        }
    }

    #[test]
    fn alphabet_validation() {
        assert_eq!(
            OrderedAlphabet::new("aba".chars()),
            Err(Error::DuplicateSymbol('a'))
        );
        assert_eq!(OrderedAlphabet::new("".chars()), Err(Error::EmptyAlphabet));
        assert_eq!(
            Word::binary("abc"),
            Err(Error::UnknownSymbol {
                symbol: 'c',
                offset: 2
            })
        );
    }

    #[test]
    fn word_enumeration_counts() {
        let bin = OrderedAlphabet::binary();
        assert_eq!(words_up_to(&bin, 12).count(), (1 << 13) - 2);
        let first: Vec<String> = words_of_length(&bin, 2).map(|x| x.to_string()).collect();
        assert_eq!(first, ["aa", "ab", "ba", "bb"]);
    }
}
