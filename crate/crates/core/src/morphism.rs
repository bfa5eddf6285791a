//! Endomorphisms of the binary free monoid `{a < b}*` and their fixed points.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{is_lyndon_letters, words_of_length, Letter, OrderedAlphabet, Word, A, B};

/// A morphism given by the images of `a` and `b`. Either image may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    image_a: Word,
    image_b: Word,
}

impl Morphism {
    pub fn new(image_a: Word, image_b: Word) -> Result<Self> {
        let binary = Word::empty(&OrderedAlphabet::binary());
        if !image_a.same_alphabet(&binary) || !image_b.same_alphabet(&binary) {
            return Err(Error::MixedAlphabets);
        }
        Ok(Self { image_a, image_b })
    }

    /// Builds a morphism from the two images written over `{a, b}`.
    pub fn from_images(image_a: &str, image_b: &str) -> Result<Self> {
        Self::new(Word::binary(image_a)?, Word::binary(image_b)?)
    }

    pub fn image_a(&self) -> &Word {
        &self.image_a
    }

    pub fn image_b(&self) -> &Word {
        &self.image_b
    }

    pub fn image(&self, letter: Letter) -> &Word {
        match letter {
            A => &self.image_a,
            _ => &self.image_b,
        }
    }

    pub fn max_image_len(&self) -> usize {
        self.image_a.len().max(self.image_b.len())
    }

    pub(crate) fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.image_len_of(letters));
        for &l in letters {
            out.extend_from_slice(self.image(l).letters());
        }
        out
    }

    fn image_len_of(&self, letters: &[Letter]) -> usize {
        letters.iter().map(|&l| self.image(l).len()).sum()
    }

    /// `f(w)`. Panics if `w` is not over `{a, b}`.
    pub fn apply(&self, w: &Word) -> Word {
        assert!(
            w.same_alphabet(&self.image_a),
            "morphisms apply to words over {{a, b}}"
        );
        Word::binary_raw(self.apply_letters(w.letters()))
    }

    /// `f^n(w)`.
    pub fn iterate(&self, w: &Word, n: usize) -> Word {
        (0..n).fold(w.clone(), |acc, _| self.apply(&acc))
    }

    /// Order preservation on finite words, decided by `f(ab) < f(b)`.
    pub fn preserves_order(&self) -> bool {
        let ab = self.apply_letters(&[A, B]);
        ab.as_slice() < self.image_b.letters()
    }

    /// Order-preserving with Lyndon letter images.
    pub fn is_lyndon_morphism(&self) -> bool {
        self.preserves_order()
            && is_lyndon_letters(self.image_a.letters())
            && is_lyndon_letters(self.image_b.letters())
    }

    /// Letters whose iterated image becomes empty.
    pub fn mortal_letters(&self) -> Vec<Letter> {
        let mut mortal = [false; 2];
        // Two rounds reach the fixpoint on a two-letter alphabet.
        for _ in 0..2 {
            for x in [A, B] {
                if self.image(x).letters().iter().all(|&y| mortal[y as usize]) {
                    mortal[x as usize] = true;
                }
            }
        }
        [A, B].into_iter().filter(|&x| mortal[x as usize]).collect()
    }

    pub fn prolongability(&self) -> ProlongabilityReport {
        let mortal = self.mortal_letters();
        let is_mortal = |x: Letter| mortal.contains(&x);
        let starts_with_a = self.image_a.letters().first() == Some(&A);

        // Drop mortal letters from every image; the remaining letters have
        // nonempty images, so |f^n(a)| is unbounded iff some letter
        // reachable from a has at least two immortal letters in its image.
        let immortal_len = |x: Letter| {
            self.image(x)
                .letters()
                .iter()
                .filter(|&&y| !is_mortal(y))
                .count()
        };
        let growth_unbounded = if is_mortal(A) {
            false
        } else {
            let mut reachable = vec![A];
            let mut frontier = vec![A];
            while let Some(x) = frontier.pop() {
                for &y in self.image(x).letters() {
                    if !is_mortal(y) && !reachable.contains(&y) {
                        reachable.push(y);
                        frontier.push(y);
                    }
                }
            }
            reachable.into_iter().any(|x| immortal_len(x) >= 2)
        };

        ProlongabilityReport {
            starts_with_a,
            growth_unbounded,
            prolongable: starts_with_a && growth_unbounded,
            mortal_letters: mortal,
        }
    }

    pub fn is_prolongable(&self) -> bool {
        self.prolongability().prolongable
    }

    pub fn prefix_stream(&self) -> Result<PrefixStream> {
        PrefixStream::new(self.clone())
    }

    /// The first `n` letters of `f^ω(a)`.
    pub fn fixed_point_prefix(&self, n: usize) -> Result<Word> {
        let mut stream = self.prefix_stream()?;
        Ok(stream.prefix(n))
    }

    /// Which of the four shapes `f^ω(a)` takes.
    pub fn prefix_shape(&self) -> Result<PrefixShape> {
        if !self.is_prolongable() {
            return Err(Error::NotProlongable);
        }
        let fa = self.image_a.letters();
        if fa.iter().all(|&l| l == A) {
            return Ok(PrefixShape::PurePowerOfA);
        }
        let run = fa.iter().take_while(|&&l| l == A).count();
        if run >= 2 {
            return Ok(PrefixShape::CaseAA { i: run });
        }
        let b_only = |w: &Word| !w.is_empty() && w.letters().iter().all(|&l| l == B);
        if b_only(&self.image_a.suffix_from(1)) && b_only(&self.image_b) {
            return Ok(PrefixShape::CaseAbOmega);
        }
        let horizon = self.image_len_of(fa);
        let prefix = self.fixed_point_prefix(horizon)?;
        let second_a = prefix.letters()[1..]
            .iter()
            .position(|&l| l == A)
            .expect("second a occurs within f^2(a) outside the ab^omega case");
        Ok(PrefixShape::CaseAB { i: second_a })
    }
}

/// All morphisms with `f(a)` starting with `a`, `1 <= |f(a)| <= max_len`
/// and `|f(b)| <= max_len`, ordered lexicographically by `(f(a), f(b))`.
pub fn enumerate_morphisms(max_len: usize) -> Vec<Morphism> {
    let binary = OrderedAlphabet::binary();
    let words = |min_len: usize| -> Vec<Word> {
        let mut words: Vec<Word> = (min_len..=max_len)
            .flat_map(|len| words_of_length(&binary, len))
            .collect();
        words.sort_by(|u, v| u.letters().cmp(v.letters()));
        words
    };
    let images_a: Vec<Word> = words(1)
        .into_iter()
        .filter(|w| w.letters()[0] == A)
        .collect();
    let images_b = words(0);
    images_a
        .iter()
        .flat_map(|fa| {
            images_b.iter().map(move |fb| Morphism {
                image_a: fa.clone(),
                image_b: fb.clone(),
            })
        })
        .collect()
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={};b={}", self.image_a, self.image_b)
    }
}

/// Parses `a=WORD;b=WORD`. Whitespace around tokens is ignored; error
/// offsets count characters from the start of the input.
impl FromStr for Morphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut parser = SpecParser {
            chars: &chars,
            pos: 0,
        };
        let image_a = parser.clause('a')?;
        parser.expect(';')?;
        let image_b = parser.clause('b')?;
        parser.skip_ws();
        if parser.pos < chars.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Morphism::new(image_a, image_b)
    }
}

struct SpecParser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl SpecParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn clause(&mut self, letter: char) -> Result<Word> {
        self.expect(letter)?;
        self.expect('=')?;
        self.skip_ws();
        let mut letters = Vec::new();
        while let Some(&c) = self.chars.get(self.pos) {
            match c {
                'a' => letters.push(A),
                'b' => letters.push(B),
                ';' => break,
                c if c.is_whitespace() => break,
                c => return Err(self.error(&format!("letter {c:?} is not in {{a, b}}"))),
            }
            self.pos += 1;
        }
        Ok(Word::binary_raw(letters))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProlongabilityReport {
    pub starts_with_a: bool,
    pub growth_unbounded: bool,
    pub mortal_letters: Vec<Letter>,
    pub prolongable: bool,
}

/// How `f^ω(a)` begins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrefixShape {
    /// `f(a)` is a power of `a`, so the fixed point is `a^ω`.
    PurePowerOfA,
    /// Begins with `a^i b`, `i >= 2`.
    CaseAA { i: usize },
    /// Equals `a b^ω`.
    CaseAbOmega,
    /// Begins with `a b^i a`, `i >= 1`.
    CaseAB { i: usize },
}

impl PrefixShape {
    pub fn tag(&self) -> &'static str {
        match self {
            PrefixShape::PurePowerOfA => "pure_power_of_a",
            PrefixShape::CaseAA { .. } => "case_aa",
            PrefixShape::CaseAbOmega => "case_ab_omega",
            PrefixShape::CaseAB { .. } => "case_ab",
        }
    }

    pub fn exponent(&self) -> Option<usize> {
        match *self {
            PrefixShape::CaseAA { i } | PrefixShape::CaseAB { i } => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for PrefixShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent() {
            Some(i) => write!(f, "{}(i={i})", self.tag()),
            None => f.write_str(self.tag()),
        }
    }
}

/// Lazily generated prefix of `f^ω(a)`.
///
/// Uses `x = f(x)`: the buffer holds `f(x[..next])` and grows by expanding
/// the letter at `next`. The buffer always stays ahead of `next` because
/// `|f(x[..m])| > m` for every prolongable `f`.
#[derive(Debug, Clone)]
pub struct PrefixStream {
    morphism: Morphism,
    buffer: Vec<Letter>,
    next: usize,
}

impl PrefixStream {
    pub fn new(morphism: Morphism) -> Result<Self> {
        if !morphism.is_prolongable() {
            return Err(Error::NotProlongable);
        }
        let buffer = morphism.image_a.letters().to_vec();
        Ok(Self {
            morphism,
            buffer,
            next: 1,
        })
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    /// Extends the buffer to at least `n` letters.
    pub fn ensure(&mut self, n: usize) {
        while self.buffer.len() < n {
            let letter = self.buffer[self.next];
            self.buffer
                .extend_from_slice(self.morphism.image(letter).letters());
            self.next += 1;
        }
    }

    pub fn prefix_letters(&mut self, n: usize) -> &[Letter] {
        self.ensure(n);
        &self.buffer[..n]
    }

    pub fn prefix(&mut self, n: usize) -> Word {
        Word::binary_raw(self.prefix_letters(n).to_vec())
    }

    pub fn letter_at(&mut self, index: usize) -> Letter {
        self.ensure(index + 1);
        self.buffer[index]
    }
}
