//! Decides whether `f^ω(a)` is an infinite Lyndon word.
//!
//! The decision splits on how the fixed point begins:
//!
//! * `a^ω` is periodic, hence never Lyndon.
//! * `a^i b` with `i >= 2`: Lyndon iff `f` preserves the order and
//!   `f(a^i b)` is a Lyndon word.
//! * `a b^ω` is always Lyndon.
//! * `a b^i a` with `i >= 1`: Lyndon iff `f` preserves the order,
//!   `f(a b^i) = u^k` for a Lyndon word `u != a b^i`, and, when `i = 1`,
//!   `|u| > |f(b)|`.
//!
//! [`theorem_report`] cross-checks this against the shape-free criterion:
//! order preservation, aperiodicity, and `f^3(a)` being a prefix of a
//! Lyndon word.

use std::fmt;

use crate::error::{Error, Result};
use crate::morphism::{Morphism, PrefixShape};
use crate::oracle::{self, OracleConfig};
use crate::words::{is_lyndon_letters, is_pre_lyndon, primitive_root, PeriodWitness, Word, A, B};

/// Why a morphism does not generate an infinite Lyndon word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    NotProlongable,
    PurePowerOfA,
    OrderNotPreserved,
    AaImageNotLyndon,
    AbImageNotLyndonPower,
    AbRootEqualsAbi,
    AbLengthCondition,
}

impl Reason {
    pub fn code(&self) -> &'static str {
        match self {
            Reason::NotProlongable => "not_prolongable",
            Reason::PurePowerOfA => "pure_power_of_a",
            Reason::OrderNotPreserved => "order_not_preserved",
            Reason::AaImageNotLyndon => "aa_image_not_lyndon",
            Reason::AbImageNotLyndonPower => "ab_image_not_lyndon_power",
            Reason::AbRootEqualsAbi => "ab_root_equals_abi",
            Reason::AbLengthCondition => "ab_length_condition",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    InfiniteLyndon,
    NotLyndon(Reason),
    NotApplicable(Reason),
}

impl Outcome {
    pub const LYNDON_CODE: &'static str = "lyndon";

    pub fn reason_code(&self) -> &'static str {
        match self {
            Outcome::InfiniteLyndon => Self::LYNDON_CODE,
            Outcome::NotLyndon(r) | Outcome::NotApplicable(r) => r.code(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Outcome::InfiniteLyndon => "infinite_lyndon",
            Outcome::NotLyndon(_) => "not_lyndon",
            Outcome::NotApplicable(_) => "not_applicable",
        }
    }

    pub fn is_lyndon(&self) -> bool {
        matches!(self, Outcome::InfiniteLyndon)
    }
}

/// `|u|` against `|f(b)|`, recorded when `i = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthCheck {
    pub root_len: usize,
    pub image_b_len: usize,
}

impl LengthCheck {
    pub fn holds(&self) -> bool {
        self.root_len > self.image_b_len
    }
}

/// `f(a b^i) = root^exponent` with `root` Lyndon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonPower {
    pub root: Word,
    pub exponent: usize,
    pub root_differs_from_abi: bool,
    pub length_check: Option<LengthCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseWitness {
    /// The image `f(a^i b)`.
    Aa { image: Word, image_is_lyndon: bool },
    /// The image `f(a b^i)` and, if it is a power of a Lyndon word, its root.
    Ab {
        image: Word,
        power: Option<LyndonPower>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    /// Absent when `f` is not prolongable on `a`.
    pub shape: Option<PrefixShape>,
    pub order_preserving: bool,
    pub case_witness: Option<CaseWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Periodicity {
    /// Follows from the fixed point being Lyndon.
    Aperiodic,
    /// Certified from a finite window: `f(root)` is a power of `root`.
    Periodic(PeriodWitness),
    /// Conditions 1 and 3 hold and the word is not Lyndon, so it must be
    /// periodic.
    PeriodicByTheorem,
    /// No certified period within the given window.
    Unknown { window: usize },
}

impl Periodicity {
    pub fn tag(&self) -> &'static str {
        match self {
            Periodicity::Aperiodic => "aperiodic",
            Periodicity::Periodic(_) => "periodic",
            Periodicity::PeriodicByTheorem => "periodic_by_theorem",
            Periodicity::Unknown { .. } => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub cond1_order: bool,
    pub cond3_pre_lyndon_f3a: bool,
    pub verdict: Verdict,
    pub periodicity: Periodicity,
}

pub fn classify(f: &Morphism) -> Verdict {
    let order_preserving = f.preserves_order();
    let shape = match f.prefix_shape() {
        Ok(shape) => shape,
        Err(_) => {
            return Verdict {
                outcome: Outcome::NotApplicable(Reason::NotProlongable),
                evidence: Evidence {
                    shape: None,
                    order_preserving,
                    case_witness: None,
                },
            }
        }
    };
    match shape {
        PrefixShape::PurePowerOfA => Verdict {
            outcome: Outcome::NotLyndon(Reason::PurePowerOfA),
            evidence: Evidence {
                shape: Some(shape),
                order_preserving,
                case_witness: None,
            },
        },
        PrefixShape::CaseAA { i } => case_aa(f, i),
        PrefixShape::CaseAbOmega => Verdict {
            outcome: Outcome::InfiniteLyndon,
            evidence: Evidence {
                shape: Some(shape),
                order_preserving,
                case_witness: None,
            },
        },
        PrefixShape::CaseAB { i } => case_ab(f, i),
    }
}

fn require_shape(f: &Morphism, expected: PrefixShape) -> Result<()> {
    let found = f.prefix_shape()?;
    if found != expected {
        return Err(Error::ShapeMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    Ok(())
}

/// Fixed points beginning with `a^i b`, `i >= 2`.
pub fn check_case_aa(f: &Morphism, i: usize) -> Result<Verdict> {
    require_shape(f, PrefixShape::CaseAA { i })?;
    Ok(case_aa(f, i))
}

/// Fixed points beginning with `a b^i a`, `i >= 1`.
pub fn check_case_ab(f: &Morphism, i: usize) -> Result<Verdict> {
    require_shape(f, PrefixShape::CaseAB { i })?;
    Ok(case_ab(f, i))
}

fn case_aa(f: &Morphism, i: usize) -> Verdict {
    let order_preserving = f.preserves_order();
    let mut aib = vec![A; i];
    aib.push(B);
    let image = Word::binary_raw(f.apply_letters(&aib));
    let image_is_lyndon = is_lyndon_letters(image.letters());
    let outcome = if !order_preserving {
        Outcome::NotLyndon(Reason::OrderNotPreserved)
    } else if !image_is_lyndon {
        Outcome::NotLyndon(Reason::AaImageNotLyndon)
    } else {
        Outcome::InfiniteLyndon
    };
    Verdict {
        outcome,
        evidence: Evidence {
            shape: Some(PrefixShape::CaseAA { i }),
            order_preserving,
            case_witness: Some(CaseWitness::Aa {
                image,
                image_is_lyndon,
            }),
        },
    }
}

fn case_ab(f: &Morphism, i: usize) -> Verdict {
    let order_preserving = f.preserves_order();
    let mut abi = vec![A];
    abi.extend(std::iter::repeat_n(B, i));
    let image = Word::binary_raw(f.apply_letters(&abi));
    // Lyndon words are primitive, so the primitive root is the only
    // candidate for u.
    let (root, exponent) = primitive_root(&image).expect("f(ab^i) starts with f(a), nonempty");
    let power = is_lyndon_letters(root.letters()).then(|| LyndonPower {
        root_differs_from_abi: root.letters() != abi.as_slice(),
        length_check: (i == 1).then(|| LengthCheck {
            root_len: root.len(),
            image_b_len: f.image_b().len(),
        }),
        root,
        exponent,
    });
    let outcome = match &power {
        _ if !order_preserving => Outcome::NotLyndon(Reason::OrderNotPreserved),
        None => Outcome::NotLyndon(Reason::AbImageNotLyndonPower),
        Some(p) if !p.root_differs_from_abi => Outcome::NotLyndon(Reason::AbRootEqualsAbi),
        Some(LyndonPower {
            length_check: Some(check),
            ..
        }) if !check.holds() => Outcome::NotLyndon(Reason::AbLengthCondition),
        Some(_) => Outcome::InfiniteLyndon,
    };
    Verdict {
        outcome,
        evidence: Evidence {
            shape: Some(PrefixShape::CaseAB { i }),
            order_preserving,
            case_witness: Some(CaseWitness::Ab { image, power }),
        },
    }
}

pub fn theorem_report(f: &Morphism) -> Result<TheoremReport> {
    theorem_report_with_window(f, OracleConfig::default().window)
}

/// Like [`theorem_report`], with the window used when periodicity has to
/// be settled by inspecting a prefix of the fixed point.
pub fn theorem_report_with_window(f: &Morphism, window: usize) -> Result<TheoremReport> {
    if !f.is_prolongable() {
        return Err(Error::NotProlongable);
    }
    let cond1_order = f.preserves_order();
    let f3a = f.iterate(&Word::binary_raw(vec![A]), 3);
    let cond3_pre_lyndon_f3a = is_pre_lyndon(&f3a)?.is_some();
    let verdict = classify(f);
    let periodicity = match verdict.outcome {
        Outcome::InfiniteLyndon => Periodicity::Aperiodic,
        Outcome::NotLyndon(_) if cond1_order && cond3_pre_lyndon_f3a => {
            Periodicity::PeriodicByTheorem
        }
        _ => match oracle::certified_period(f, window)? {
            Some(witness) => Periodicity::Periodic(witness),
            None => Periodicity::Unknown { window },
        },
    };
    Ok(TheoremReport {
        cond1_order,
        cond3_pre_lyndon_f3a,
        verdict,
        periodicity,
    })
}
