//! Brute-force references shared by the integration tests. Nothing here
//! calls into the algorithms under test except for word plumbing.
#![allow(dead_code)]

use lyndon_morph::words::{words_up_to, Letter};
use lyndon_morph::{OrderedAlphabet, Word};

pub fn w(s: &str) -> Word {
    Word::binary(s).unwrap()
}

pub fn binary_words(max_len: usize) -> Vec<Word> {
    words_up_to(&OrderedAlphabet::binary(), max_len).collect()
}

/// `w < vu` for every split `w = uv` with `u`, `v` nonempty.
pub fn lyndon_by_rotations(s: &[Letter]) -> bool {
    !s.is_empty()
        && (1..s.len()).all(|k| {
            let rotated: Vec<Letter> = s[k..].iter().chain(&s[..k]).copied().collect();
            s < rotated.as_slice()
        })
}

/// Every nonincreasing factorization of `s` into Lyndon words.
pub fn all_lyndon_factorizations(s: &[Letter]) -> Vec<Vec<Vec<Letter>>> {
    fn go(
        rest: &[Letter],
        last: Option<&[Letter]>,
        acc: &mut Vec<Vec<Letter>>,
        out: &mut Vec<Vec<Vec<Letter>>>,
    ) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for len in 1..=rest.len() {
            let head = &rest[..len];
            if !lyndon_by_rotations(head) || last.is_some_and(|l| head > l) {
                continue;
            }
            acc.push(head.to_vec());
            let (tail, owned) = (&rest[len..], acc.last().unwrap().clone());
            go(tail, Some(&owned), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(s, None, &mut Vec::new(), &mut out);
    out
}

pub fn smallest_root(s: &[Letter]) -> &[Letter] {
    let n = s.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && s.chunks(p).all(|c| c == &s[..p]))
        .map(|p| &s[..p])
        .unwrap_or(s)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
