//! Serializable reports. Field names and string values are stable.

use lyndon_morph::oracle::{Agreement, OracleReport};
use lyndon_morph::{CaseWitness, Morphism, Periodicity, TheoremReport, Verdict};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format_version: u32,
    pub morphism: MorphismDto,
    pub verdict: VerdictDto,
    pub evidence: EvidenceDto,
    /// Absent when the morphism is not prolongable on `a`.
    pub theorem: Option<TheoremDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDto {
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDto {
    pub outcome: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceDto {
    pub shape: Option<String>,
    pub i: Option<usize>,
    pub order_preserving: bool,
    /// `f(a^i b)` or `f(a b^i)`, depending on the shape.
    pub image: Option<String>,
    pub image_is_lyndon: Option<bool>,
    /// Lyndon root `u` with `f(a b^i) = u^k`.
    pub u: Option<String>,
    pub k: Option<usize>,
    pub root_differs_from_abi: Option<bool>,
    /// Only recorded when `i = 1`.
    pub length_condition: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremDto {
    pub cond1: bool,
    pub cond3: bool,
    pub periodicity: String,
    pub period_root: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDto {
    pub position: usize,
    pub matched: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDto {
    pub window: usize,
    pub lyndon_prefix_lengths: Vec<usize>,
    pub first_violation: Option<ViolationDto>,
    pub detected_period: Option<String>,
    pub period_certified: bool,
    pub conclusion: String,
    pub agreement: String,
}

impl MorphismDto {
    pub fn new(f: &Morphism) -> Self {
        Self {
            a: f.image_a().to_string(),
            b: f.image_b().to_string(),
        }
    }
}

impl VerdictDto {
    pub fn new(v: &Verdict) -> Self {
        Self {
            outcome: v.outcome.name().to_string(),
            reason: v.outcome.reason_code().to_string(),
        }
    }
}

impl EvidenceDto {
    pub fn new(v: &Verdict) -> Self {
        let e = &v.evidence;
        let mut dto = Self {
            shape: e.shape.map(|s| s.tag().to_string()),
            i: e.shape.and_then(|s| s.exponent()),
            order_preserving: e.order_preserving,
            image: None,
            image_is_lyndon: None,
            u: None,
            k: None,
            root_differs_from_abi: None,
            length_condition: None,
        };
        match &e.case_witness {
            Some(CaseWitness::Aa {
                image,
                image_is_lyndon,
            }) => {
                dto.image = Some(image.to_string());
                dto.image_is_lyndon = Some(*image_is_lyndon);
            }
            Some(CaseWitness::Ab { image, power }) => {
                dto.image = Some(image.to_string());
                dto.image_is_lyndon = Some(power.as_ref().is_some_and(|p| p.exponent == 1));
                if let Some(p) = power {
                    dto.u = Some(p.root.to_string());
                    dto.k = Some(p.exponent);
                    dto.root_differs_from_abi = Some(p.root_differs_from_abi);
                    dto.length_condition = p.length_check.map(|c| c.holds());
                }
            }
            None => {}
        }
        dto
    }
}

impl TheoremDto {
    pub fn new(r: &TheoremReport) -> Self {
        Self {
            cond1: r.cond1_order,
            cond3: r.cond3_pre_lyndon_f3a,
            periodicity: r.periodicity.tag().to_string(),
            period_root: match &r.periodicity {
                Periodicity::Periodic(p) => Some(p.root.to_string()),
                _ => None,
            },
        }
    }
}

impl OracleDto {
    pub fn new(r: &OracleReport, agreement: Agreement) -> Self {
        Self {
            window: r.window,
            lyndon_prefix_lengths: r.lyndon_prefix_lengths.clone(),
            first_violation: r.first_violation.map(|v| ViolationDto {
                position: v.position,
                matched: v.matched,
            }),
            detected_period: r.detected_period.as_ref().map(|p| p.root.to_string()),
            period_certified: r.period_certified,
            conclusion: r.conclusion.tag().to_string(),
            agreement: agreement.to_string(),
        }
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = format!("morphism: a={};b={}\n", self.morphism.a, self.morphism.b);
        out += &format!("outcome: {}\n", self.verdict.outcome);
        out += &format!("reason: {}\n", self.verdict.reason);
        let e = &self.evidence;
        if let Some(shape) = &e.shape {
            match e.i {
                Some(i) => out += &format!("shape: {shape} (i = {i})\n"),
                None => out += &format!("shape: {shape}\n"),
            }
        }
        out += &format!("order preserving: {}\n", e.order_preserving);
        if let Some(image) = &e.image {
            out += &format!("case image: {image}\n");
        }
        if let (Some(u), Some(k)) = (&e.u, e.k) {
            out += &format!("lyndon power: ({u})^{k}\n");
        }
        if let Some(t) = &self.theorem {
            out += &format!("cond1: {}\ncond3: {}\n", t.cond1, t.cond3);
            match &t.period_root {
                Some(root) => out += &format!("periodicity: {} ({root})^ω\n", t.periodicity),
                None => out += &format!("periodicity: {}\n", t.periodicity),
            }
        }
        if let Some(o) = &self.oracle {
            out += &o.to_text();
        }
        out
    }
}

impl OracleDto {
    pub fn to_text(&self) -> String {
        let mut out = format!("oracle window: {}\n", self.window);
        let lengths: Vec<String> = self
            .lyndon_prefix_lengths
            .iter()
            .map(usize::to_string)
            .collect();
        out += &format!("lyndon prefix lengths: {}\n", lengths.join(" "));
        if let Some(v) = &self.first_violation {
            out += &format!(
                "first violation: position {} after {} matching letters\n",
                v.position, v.matched
            );
        }
        if let Some(root) = &self.detected_period {
            out += &format!(
                "detected period: {root} ({})\n",
                if self.period_certified {
                    "certified"
                } else {
                    "uncertified"
                }
            );
        }
        out += &format!("oracle conclusion: {}\n", self.conclusion);
        out += &format!("agreement: {}\n", self.agreement);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lyndon_morph::classify;

    #[test]
    fn evidence_for_lyndon_power() {
        let f = Morphism::from_images("aba", "bbababb").unwrap();
        let e = EvidenceDto::new(&classify(&f));
        assert_eq!(e.shape.as_deref(), Some("case_ab"));
        assert_eq!((e.u.as_deref(), e.k), (Some("ababb"), Some(2)));
        assert_eq!(e.length_condition, Some(false));
    }

    #[test]
    fn evidence_for_aa_case() {
        let f = Morphism::from_images("aab", "b").unwrap();
        let e = EvidenceDto::new(&classify(&f));
        assert_eq!((e.shape.as_deref(), e.i), (Some("case_aa"), Some(2)));
        assert_eq!(e.image.as_deref(), Some("aabaabb"));
        assert_eq!(e.u, None);
    }
}
